use std::collections::BTreeSet;

use super::strategies::{homogeneous, p, poly, spec};
use proptest::prelude::*;
use crate::coinv::{expand_in_basis, normal_form, Reducer};
use crate::combi::{BoxPartition, Permutation};
use crate::ddo::OperatorContext;
use crate::fgl::{FglKind, FglSpec};
use crate::grass::{rect_dual, smooth_product, Rectangle, SmoothProduct};
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::polycore::{Homogeneity, SeriesCap};
use crate::{Integer, Poly};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

fn hecke_element(n: usize) -> impl Strategy<Value = HeckeElement<Integer>> {
    prop::collection::vec((perm(n), poly(n, 3, 2)), 0..4).prop_map(move |terms| {
        let alg = HeckeAlgebra::new(FglSpec::hyperbolic(), n).unwrap();
        let e = terms.into_iter().fold(HeckeElement::zero(n, n), |acc, (w, f)| {
            acc.checked_add(&HeckeElement::basis(w, f)).unwrap()
        });
        alg.reduce(&e)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(64) })]

    #[test]
    fn group_law_axioms(s in spec(), cap in 1u32..9) {
        let cap = SeriesCap(cap);
        let f = s.sum_series::<Integer>(cap);
        prop_assert_eq!(f.swap_vars(1).unwrap(), f.clone());
        let at_zero = f.compose(&[Poly::var(1, 1), Poly::zero(1)], Some(cap)).unwrap();
        prop_assert_eq!(at_zero, Poly::var(1, 1));
        prop_assert!(s.inverse_self_check(cap));
        prop_assert!(s.kernel_self_check(cap));
    }

    #[test]
    fn mu2_zero_specializes_hyperbolic(f in poly(3, 4, 2), i in 1usize..3) {
        let at_zero = |g: &Poly| g.specialize_mu(None, Some(&Integer::from(0)));
        let both_zero = |g: &Poly| g.specialize_mu(Some(&Integer::from(0)), Some(&Integer::from(0)));
        let hyp = OperatorContext::new(FglSpec::hyperbolic(), 3).unwrap();
        let mult = OperatorContext::new(FglSpec::multiplicative(), 3).unwrap();
        let add = OperatorContext::new(FglSpec::additive(), 3).unwrap();
        prop_assert_eq!(at_zero(&hyp.apply_c(i, &f).unwrap()), mult.apply_c(i, &at_zero(&f)).unwrap());
        prop_assert_eq!(both_zero(&hyp.apply_c(i, &f).unwrap()), add.apply_c(i, &both_zero(&f)).unwrap());
        prop_assert_eq!(at_zero(&hyp.apply_delta(i, &f).unwrap()), mult.apply_delta(i, &at_zero(&f)).unwrap());
    }

    #[test]
    fn operators_lower_degree_by_one(s in spec(), f in homogeneous(3, 1, 5), i in 1usize..3) {
        let ops = OperatorContext::new(s, 3).unwrap();
        for g in [ops.apply_c(i, &f).unwrap(), ops.apply_delta(i, &f).unwrap()] {
            prop_assert!(g.is_zero() || g.graded_degree() == Homogeneity::Homogeneous(0));
        }
    }

    #[test]
    fn c_is_symmetric_and_delta_is_kappa_minus_c(s in spec(), f in poly(3, 5, 3), i in 1usize..3) {
        let ops = OperatorContext::new(s, 3).unwrap();
        let c = ops.apply_c(i, &f).unwrap();
        prop_assert!(c.is_symmetric_in(i).unwrap());
        prop_assert!(ops.delta_defect(i, &f).unwrap().is_zero());
    }

    #[test]
    fn twisted_braid(s in spec(), f in poly(3, 4, 3)) {
        let ops = OperatorContext::new(s, 3).unwrap();
        prop_assert!(ops.twisted_braid_defect(1, &f).unwrap().is_zero());
        if s.mu2_vanishes() {
            prop_assert!(ops.naive_braid_defect(1, &f).unwrap().is_zero());
        }
    }

    #[test]
    fn symmetric_factors_commute_with_c(s in spec(), g in poly(3, 4, 2), h in poly(3, 3, 2), i in 1usize..3) {
        let ops = OperatorContext::new(s, 3).unwrap();
        let sym = &h + &h.swap_vars(i).unwrap();
        prop_assert_eq!(ops.apply_c(i, &(&sym * &g)).unwrap(), &sym * &ops.apply_c(i, &g).unwrap());
    }

    #[test]
    fn longest_element_complements_length(w in perm(5)) {
        let w0w = Permutation::longest(5).compose(&w).unwrap();
        prop_assert_eq!(w0w.length(), 10 - w.length());
    }

    #[test]
    fn reduced_words_are_reduced(w in perm(5)) {
        let words = w.reduced_words().unwrap();
        prop_assert!(!words.is_empty());
        prop_assert!(words.contains(&w.canonical_word()));
        for word in words {
            prop_assert_eq!(word.len(), w.length());
            prop_assert_eq!(word.permutation(5).unwrap(), w.clone());
        }
    }

    #[test]
    fn normal_form_is_linear_and_idempotent(f in poly(3, 5, 3), g in poly(3, 5, 3), c in -4i32..5) {
        let r = Reducer::new(3);
        let nf = r.normal_form(&f).unwrap();
        prop_assert_eq!(r.normal_form(&nf).unwrap(), nf.clone());
        let scaled = &f.scale(&Integer::from(c)) + &g;
        prop_assert_eq!(
            r.normal_form(&scaled).unwrap(),
            &nf.scale(&Integer::from(c)) + &r.normal_form(&g).unwrap()
        );
    }

    #[test]
    fn symmetric_multiples_vanish(f in poly(3, 4, 2), h in poly(3, 3, 2)) {
        // symmetrize h and remove its constant part
        let mut sym = Poly::zero(3);
        for w in Permutation::all(3) {
            let images: Vec<Poly> = (1..=3).map(|i| Poly::var(3, w.apply(i))).collect();
            sym += &h.compose(&images, None).unwrap();
        }
        let sym = sym.filter_terms(|m| m.x.degree() > 0);
        prop_assert!(normal_form(&(&sym * &f), 3).unwrap().is_zero());
    }

    #[test]
    fn hecke_associativity(a in hecke_element(3), b in hecke_element(3), c in hecke_element(3)) {
        let alg = HeckeAlgebra::new(FglSpec::hyperbolic(), 3).unwrap();
        let left = alg.mul(&alg.mul(&a, &b).unwrap(), &c).unwrap();
        let right = alg.mul(&a, &alg.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn hecke_basis_products(w in perm(4), v in perm(4)) {
        let alg = HeckeAlgebra::new(FglSpec::hyperbolic(), 4).unwrap();
        let one = Poly::one(4);
        let prod = alg.mul(&HeckeElement::basis(w.clone(), one.clone()), &HeckeElement::basis(v.clone(), one)).unwrap();
        let terms: Vec<_> = prod.terms().collect();
        prop_assert_eq!(terms.len(), 1);
        let (u, coeff) = terms[0];
        let k = (w.length() + v.length() - u.length()) as u32;
        prop_assert_eq!(coeff, &(-Poly::mu1(4)).pow(k));
    }

    #[test]
    fn hecke_reduction_is_idempotent(a in hecke_element(4)) {
        let alg = HeckeAlgebra::new(FglSpec::hyperbolic(), 4).unwrap();
        prop_assert_eq!(alg.reduce(&a), a);
    }
}

#[test]
fn kappa_table() {
    let expected = [
        (FglKind::Additive, "0"),
        (FglKind::Multiplicative, "m1"),
        (FglKind::Hyperbolic, "m1"),
        (FglKind::Lorentz, "0"),
    ];
    for (kind, k) in expected {
        assert_eq!(FglSpec::new(kind).kappa::<Integer>(3).unwrap(), p(k, 3), "{kind}");
    }
}

#[test]
fn duals_are_involutions() {
    for (rows, cols) in [(2, 2), (2, 3), (3, 3), (1, 4)] {
        let all = BoxPartition::all(rows, cols);
        let perms: BTreeSet<Permutation> = all.iter().map(|l| l.to_perm()).collect();
        assert_eq!(perms.len(), all.len());
        for lambda in &all {
            assert_eq!(lambda.dual().dual(), *lambda);
            assert_eq!(lambda.weight() + lambda.dual().weight(), rows * cols);
            assert_eq!(lambda.to_perm().length(), lambda.weight());
            for (a, b) in [(rows, cols), (1, cols), (rows, 1)] {
                if let Ok(d) = lambda.dual_in(a, b) {
                    assert_eq!(d.dual_in(a, b).unwrap(), lambda.rebox(a, b).unwrap());
                    assert_eq!(d.weight() + lambda.weight(), a * b);
                }
            }
        }
    }
}

#[test]
fn staircase_is_a_basis() {
    for n in 2..=4 {
        let r = Reducer::new(n);
        let basis: Vec<Poly> = r
            .staircase_monomials()
            .into_iter()
            .map(|x| Poly::monomial(n, crate::polycore::Monomial::new(x, crate::polycore::MuExp::ONE), Integer::from(1)))
            .collect();
        assert_eq!(basis.len(), (1..=n).product::<usize>());
        for (i, b) in basis.iter().enumerate() {
            assert_eq!(r.normal_form(b).unwrap(), *b);
            let coeffs = expand_in_basis(b, &basis, n).unwrap();
            for (j, c) in coeffs.iter().enumerate() {
                assert_eq!(*c, if i == j { Poly::one(n) } else { Poly::zero(n) });
            }
        }
        let lg1 = crate::schubert::initial_class::<Integer>(n);
        assert_eq!(r.normal_form(&lg1).unwrap(), lg1);
    }
}

#[test]
fn big_product_leading_coefficient() {
    for n in 2..=4 {
        let s = HeckeAlgebra::new(FglSpec::hyperbolic(), n).unwrap().big_product_s::<Integer>().unwrap();
        assert_eq!(s.coefficient(&Permutation::longest(n)), crate::schubert::initial_class(n));
    }
}

#[test]
fn smooth_product_invariants() {
    for (k, n) in [(2, 4), (2, 5), (3, 6), (1, 5)] {
        let full = Rectangle::new(k, n, k, n - k).unwrap();
        for r in Rectangle::all(k, n).unwrap() {
            let dual = rect_dual(r, k, n).unwrap();
            assert_eq!(smooth_product(k, n, r, &dual).unwrap(), SmoothProduct::Class(BoxPartition::empty(k, n - k)));
            for lambda in BoxPartition::all(k, n - k) {
                let out = smooth_product(k, n, r, &lambda).unwrap();
                assert_eq!(out == SmoothProduct::Zero, !dual.leq(&lambda));
                if let SmoothProduct::Class(mu) = out {
                    assert_eq!((mu.rows(), mu.cols()), (k, n - k));
                    assert_eq!(mu.weight() + r.codimension(k, n), lambda.weight());
                }
                assert_eq!(smooth_product(k, n, full, &lambda).unwrap(), SmoothProduct::Class(lambda.clone()));
            }
        }
    }
}
