use proptest::prelude::*;
use crate::fgl::{FglKind, FglSpec};
use crate::polycore::{Monomial, MuExp, XExp};
use crate::{Integer, Poly};

fn build(n: usize, terms: Vec<(Vec<u32>, u32, u32, i32)>) -> Poly {
    Poly::from_terms(n, terms.into_iter().map(|(x, a, b, c)| (Monomial::new(XExp::new(x), MuExp::new(a, b)), Integer::from(c))))
        .unwrap()
}

/// Small polynomials in `n` variables.
pub(super) fn poly(n: usize, max_terms: usize, max_exp: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, n), 0..=1u32, 0..=1u32, -5i32..=5), 0..=max_terms)
        .prop_map(move |terms| build(n, terms))
}

/// Homogeneous polynomials of graded degree `d` in `n` variables.
pub(super) fn homogeneous(n: usize, d: i64, max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0..=3u32, n), 0..=2u32, -5i32..=5), 0..=max_terms).prop_map(
        move |terms| {
            let terms = terms
                .into_iter()
                .filter_map(|(x, b, c)| {
                    let e: i64 = x.iter().map(|&v| v as i64).sum();
                    let a = e - d - 2 * b as i64;
                    (a >= 0).then(|| (x, a as u32, b, c))
                })
                .collect();
            build(n, terms)
        },
    )
}

/// Polynomials with constant term `±1`.
pub(super) fn unit(n: usize) -> impl Strategy<Value = Poly> {
    (poly(n, 4, 2), prop::bool::ANY).prop_map(move |(f, plus)| {
        let f = f.filter_terms(|m| m.x.degree() > 0);
        &f + &Poly::from_i32(n, if plus { 1 } else { -1 })
    })
}

pub(super) fn spec() -> impl Strategy<Value = FglSpec> {
    prop::sample::select(FglKind::ALL.to_vec()).prop_map(FglSpec::new)
}

pub(super) fn p(s: &str, n: usize) -> Poly {
    Poly::parse(s, Some(n)).unwrap()
}
