//! The coinvariant ring `Z[μ1, μ2][x_1, …, x_n]/S`, with `S` generated by the symmetric
//! polynomials of positive degree.
//!
//! Normal forms use the rewriting rules `x_k^{n−k+1} → x_k^{n−k+1} − h_{n−k+1}(x_1, …, x_k)`,
//! which leave exactly the staircase monomials (exponent of `x_k` at most `n − k`).

mod linsolve;

use std::collections::BTreeMap;

use serde::Serialize;

pub use linsolve::solve_integer;

use crate::error::{Error, Result};
use crate::fgl::FglSpec;
use crate::polycore::{Homogeneity, Monomial, MuExp, Polynomial, SeriesCap, XExp};
use crate::scalar::{factorial, Coeff};
use crate::schubert::{initial_class, top_degree};

/// Precomputed rewriting rules for `n` variables.
#[derive(Debug, Clone)]
pub struct Reducer {
    n: usize,
    /// For each `k` (index `k − 1`), the monomials of `h_{n−k+1}(x_1..x_k)` other than the
    /// leading power of `x_k`.
    tails: Vec<Vec<XExp>>,
}

impl Reducer {
    pub fn new(n: usize) -> Self {
        let tails = (1..=n)
            .map(|k| {
                let d = (n - k + 1) as u32;
                let mut out = Vec::new();
                compositions(k, d, &mut vec![0; n], 0, &mut out);
                out.retain(|e| e.get(k) != d);
                out
            })
            .collect();
        Self { n, tails }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The largest `k` whose staircase bound the monomial violates.
    fn violation(&self, x: &XExp) -> Option<usize> {
        (1..=self.n).rev().find(|&k| x.get(k) as usize > self.n - k)
    }

    pub fn normal_form<C: Coeff>(&self, f: &Polynomial<C>) -> Result<Polynomial<C>> {
        if f.nvars() != self.n {
            return Err(Error::VariableMismatch { left: self.n, right: f.nvars() });
        }
        let top = top_degree(self.n) as u32;
        // everything above the top degree lies in S
        let mut work: BTreeMap<Monomial, C> =
            f.terms().filter(|(m, _)| m.x.degree() <= top).map(|(m, c)| (m.clone(), c.clone())).collect();
        let mut out = Polynomial::zero(self.n);
        // rewriting only produces smaller monomials, so the largest pending term is final or
        // gets rewritten exactly once
        while let Some((m, c)) = work.pop_last() {
            let Some(k) = self.violation(&m.x) else {
                out.add_term(m, c);
                continue;
            };
            let d = (self.n - k + 1) as u32;
            let mut base = m.x.clone();
            base.exps_mut()[k - 1] -= d;
            for t in &self.tails[k - 1] {
                let key = Monomial::new(base.mul(t), m.mu);
                let v = work.remove(&key).unwrap_or_else(C::zero) - c.clone();
                if !v.is_zero() {
                    work.insert(key, v);
                }
            }
        }
        Ok(out)
    }

    /// The `n!` staircase monomials, in canonical order.
    pub fn staircase_monomials(&self) -> Vec<XExp> {
        let mut out = vec![XExp::zero(self.n)];
        for k in 1..=self.n {
            out = out
                .into_iter()
                .flat_map(|x| {
                    (0..=(self.n - k) as u32).map(move |e| {
                        let mut y = x.clone();
                        y.exps_mut()[k - 1] = e;
                        y
                    })
                })
                .collect();
        }
        out.sort();
        out
    }
}

/// All exponent vectors of total degree `d` in the first `k` variables.
fn compositions(k: usize, d: u32, current: &mut Vec<u32>, idx: usize, out: &mut Vec<XExp>) {
    if idx + 1 == k {
        current[idx] = d;
        out.push(XExp::new(current.clone()));
        current[idx] = 0;
        return;
    }
    for e in 0..=d {
        current[idx] = e;
        compositions(k, d - e, current, idx + 1, out);
    }
    current[idx] = 0;
}

/// Normal form of `f` modulo `S` in `n` variables.
pub fn normal_form<C: Coeff>(f: &Polynomial<C>, n: usize) -> Result<Polynomial<C>> {
    Reducer::new(n).normal_form(f)
}

pub fn equals_mod_s<C: Coeff>(f: &Polynomial<C>, g: &Polynomial<C>, n: usize) -> Result<bool> {
    Ok(normal_form(&f.checked_sub(g)?, n)?.is_zero())
}

/// Whether every term satisfies the staircase bound.
pub fn is_normal<C: Coeff>(f: &Polynomial<C>) -> bool {
    let n = f.nvars();
    f.terms().all(|(m, _)| (1..=n).all(|k| m.x.get(k) as usize <= n - k))
}

/// Coefficients `c_j ∈ Z[μ1, μ2]` with `f ≡ Σ c_j · basis_j (mod S)`.
///
/// `f` and the basis elements must be homogeneous, so each `c_j` is a combination of the
/// `μ1^a μ2^b` with `a + 2b = deg(basis_j) − deg(f)`. Coefficients are returned as polynomials
/// of x-degree 0 in `n` variables.
pub fn expand_in_basis<C: Coeff>(f: &Polynomial<C>, basis: &[Polynomial<C>], n: usize) -> Result<Vec<Polynomial<C>>> {
    let reducer = Reducer::new(n);
    let target = reducer.normal_form(f)?;
    let degree = match f.graded_degree() {
        Homogeneity::Inhomogeneous => return Err(Error::NotHomogeneous),
        Homogeneity::Zero => None,
        Homogeneity::Homogeneous(d) => Some(d),
    };
    let mut unknowns: Vec<(usize, MuExp)> = Vec::new();
    let mut columns: Vec<Polynomial<C>> = Vec::new();
    for (j, b) in basis.iter().enumerate() {
        let bd = match b.graded_degree() {
            Homogeneity::Homogeneous(d) => d,
            Homogeneity::Zero => return Err(Error::BasisNotIndependent),
            Homogeneity::Inhomogeneous => return Err(Error::NotHomogeneous),
        };
        let Some(fd) = degree else { continue };
        let gap = bd - fd;
        if gap < 0 {
            continue;
        }
        let nb = reducer.normal_form(b)?;
        for mu_b in 0..=(gap / 2) as u32 {
            let mu = MuExp::new((gap - 2 * mu_b as i64) as u32, mu_b);
            columns.push(nb.mul_monomial(&Monomial::new(XExp::zero(n), mu), &C::one()));
            unknowns.push((j, mu));
        }
    }
    let mut coefficients = vec![Polynomial::zero(n); basis.len()];
    if target.is_zero() && columns.is_empty() {
        return Ok(coefficients);
    }
    // rows indexed by the monomials that occur anywhere
    let mut rows: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for p in columns.iter().chain(std::iter::once(&target)) {
        for (m, _) in p.terms() {
            let next = rows.len();
            rows.entry(m).or_insert(next);
        }
    }
    let mut a = vec![vec![C::zero(); columns.len()]; rows.len()];
    for (col, p) in columns.iter().enumerate() {
        for (m, c) in p.terms() {
            a[rows[m]][col] = c.clone();
        }
    }
    let mut rhs = vec![C::zero(); rows.len()];
    for (m, c) in target.terms() {
        rhs[rows[m]] = c.clone();
    }
    let solution = solve_integer(&a, &rhs, columns.len())?;
    for ((j, mu), v) in unknowns.into_iter().zip(solution) {
        coefficients[j].add_term(Monomial::new(XExp::zero(n), mu), v);
    }
    Ok(coefficients)
}

#[derive(Debug, Clone, Serialize)]
pub struct VandermondeReport {
    pub spec: FglSpec,
    pub n: usize,
    pub cap: u32,
    /// `∏_{i<j}(x_i − x_j) ≡ n!·LG_1`.
    pub part_a: bool,
    /// `∏_{i<j} F(x_i, χ(x_j)) ≡ ∏_{i<j}(x_i − x_j)`.
    pub part_b: bool,
}

impl VandermondeReport {
    pub fn passed(&self) -> bool {
        self.part_a && self.part_b
    }
}

/// `∏_{i<j} (x_i − x_j)`.
pub fn vandermonde<C: Coeff>(n: usize) -> Polynomial<C> {
    let mut out = Polynomial::one(n);
    for i in 1..=n {
        for j in i + 1..=n {
            out = &out * &(&Polynomial::var(n, i) - &Polynomial::var(n, j));
        }
    }
    out
}

/// Checks both congruences for the Vandermonde product. Each factor
/// `F(x_i, χ(x_j)) = (x_i − x_j)/p(x_i, x_j)` is expanded through x-degree `cap`.
pub fn vandermonde_check(spec: FglSpec, n: usize, cap: SeriesCap) -> Result<VandermondeReport> {
    type C = num_bigint::BigInt;
    if !(2..=5).contains(&n) {
        return Err(Error::InvalidParameter(format!("vandermonde check supports 2 <= n <= 5, got {n}")));
    }
    let top = top_degree(n);
    if (cap.0 as usize) < top {
        return Err(Error::CapTooSmall { cap: cap.0 as usize, min: top });
    }
    let reducer = Reducer::new(n);
    let delta = vandermonde::<C>(n);
    let staircase = initial_class::<C>(n).scale(&factorial(n));
    let part_a = reducer.normal_form(&(&delta - &staircase))?.is_zero();

    let mut product = Polynomial::<C>::one(n);
    for i in 1..=n {
        for j in i + 1..=n {
            let kernel_inverse = spec.kernel_at::<C>(n, i, j).invert_unit(cap)?;
            let factor = (&Polynomial::var(n, i) - &Polynomial::var(n, j)).mul_truncated(&kernel_inverse, Some(cap));
            product = product.mul_truncated(&factor, Some(cap));
        }
    }
    let part_b = reducer.normal_form(&(&product - &delta))?.is_zero();
    Ok(VandermondeReport { spec, n, cap: cap.0, part_a, part_b })
}
