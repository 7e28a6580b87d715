//! The generalized Hecke algebra: polynomial combinations of `u_w` with `u_i² = −μ1 u_i`, the
//! braid relations, central scalars, and `μ2 x_i x_{i+1} u_i = 0`.
//!
//! The last relation generates, in front of `u_w`, the monomial ideal
//! `J_w = ⟨μ2 x_j x_{j+1} : j ∈ supp(w)⟩`, so reduction is term deletion.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::combi::{Permutation, ReducedWord};
use crate::ddo::OperatorContext;
use crate::error::{Error, Result};
use crate::fgl::FglSpec;
use crate::polycore::{Monomial, PolyJson, Polynomial, SeriesCap};
use crate::scalar::Coeff;
use crate::schubert::SchubertContext;

/// Largest rank for which the full product `S` is built.
pub const MAX_PRODUCT_RANK: usize = 5;

/// Whether some `μ2 x_j x_{j+1}` with `j ∈ support` divides the monomial.
pub fn in_support_ideal(m: &Monomial, support: &BTreeSet<usize>) -> bool {
    m.mu.b >= 1 && support.iter().any(|&j| m.x.get(j) >= 1 && m.x.get(j + 1) >= 1)
}

/// Deletes the terms lying in `⟨μ2 x_j x_{j+1} : j ∈ support⟩`.
pub fn reduce_mod_support<C: Coeff>(f: &Polynomial<C>, support: &BTreeSet<usize>) -> Polynomial<C> {
    f.filter_terms(|m| !in_support_ideal(m, support))
}

/// An element `Σ_w f_w u_w` with coefficients in `nvars` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElement<C> {
    nvars: usize,
    rank: usize,
    coeffs: BTreeMap<Permutation, Polynomial<C>>,
}

impl<C: Coeff> HeckeElement<C> {
    pub fn zero(rank: usize, nvars: usize) -> Self {
        Self { nvars, rank, coeffs: BTreeMap::new() }
    }

    /// `f · u_w`.
    pub fn basis(w: Permutation, f: Polynomial<C>) -> Self {
        let mut e = Self::zero(w.n(), f.nvars());
        e.add(w, f);
        e
    }

    pub fn scalar(rank: usize, f: Polynomial<C>) -> Self {
        Self::basis(Permutation::identity(rank), f)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, w: &Permutation) -> Polynomial<C> {
        self.coeffs.get(w).cloned().unwrap_or_else(|| Polynomial::zero(self.nvars))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Polynomial<C>)> {
        self.coeffs.iter()
    }

    fn add(&mut self, w: Permutation, f: Polynomial<C>) {
        if f.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(w.clone()).or_insert_with(|| Polynomial::zero(self.nvars));
        *entry += &f;
        if entry.is_zero() {
            self.coeffs.remove(&w);
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, f) in &other.coeffs {
            out.add(w.clone(), f.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|f| Ok(-f)).expect("negation cannot fail")
    }

    /// Applies `op` to every coefficient.
    pub fn map(&self, mut op: impl FnMut(&Polynomial<C>) -> Result<Polynomial<C>>) -> Result<Self> {
        let mut out = Self::zero(self.rank, self.nvars);
        for (w, f) in &self.coeffs {
            out.add(w.clone(), op(f)?);
        }
        Ok(out)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::SizeMismatch { left: self.rank, right: other.rank });
        }
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn to_json(&self) -> HeckeJson {
        HeckeJson {
            rank: self.rank,
            terms: self.coeffs.iter().map(|(w, f)| HeckeTermJson { w: w.oneline().to_vec(), coeff: f.to_json() }).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeckeJson {
    pub rank: usize,
    pub terms: Vec<HeckeTermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeckeTermJson {
    pub w: Vec<usize>,
    pub coeff: PolyJson,
}

/// The algebra for `S_n` with `μ1` taken from a formal group law.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeckeAlgebra {
    spec: FglSpec,
    n: usize,
}

impl HeckeAlgebra {
    /// `μ2` must be symbolic or zero: with another integer value the relation
    /// `μ2 x_i x_{i+1} u_i = 0` is no longer a monomial condition.
    pub fn new(spec: FglSpec, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("the algebra needs n >= 2, got {n}")));
        }
        if spec.mu2_value().is_some_and(|v| v != 0) {
            return Err(Error::Specialization("the Hecke algebra needs mu2 symbolic or 0".into()));
        }
        Ok(Self { spec, n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn spec(&self) -> FglSpec {
        self.spec
    }

    pub fn one<C: Coeff>(&self) -> HeckeElement<C> {
        HeckeElement::scalar(self.n, Polynomial::one(self.n))
    }

    /// `f · u_i`.
    pub fn generator<C: Coeff>(&self, i: usize, f: Polynomial<C>) -> Result<HeckeElement<C>> {
        Ok(HeckeElement::basis(Permutation::simple(self.n, i)?, f))
    }

    /// Enforces the `J_w` normal form on each coefficient.
    pub fn reduce<C: Coeff>(&self, e: &HeckeElement<C>) -> HeckeElement<C> {
        let mut out = HeckeElement::zero(e.rank, e.nvars);
        for (w, f) in &e.coeffs {
            out.add(w.clone(), reduce_mod_support(f, &w.support()));
        }
        out
    }

    /// `u_w · u_v = (−μ1)^k u_{w * v}`: returns the permutation and `k`.
    pub fn basis_product(w: &Permutation, v: &Permutation) -> (Permutation, u32) {
        let mut out = w.clone();
        let mut k = 0;
        for &i in v.canonical_word().iter() {
            if out.has_right_descent(i) {
                k += 1;
            } else {
                out = out.mul_simple(i).expect("letter in range");
            }
        }
        (out, k)
    }

    pub fn mul<C: Coeff>(&self, a: &HeckeElement<C>, b: &HeckeElement<C>) -> Result<HeckeElement<C>> {
        a.check_same(b)?;
        let minus_mu1 = -self.spec.mu1_poly::<C>(a.nvars);
        let mut powers = vec![Polynomial::one(a.nvars)];
        let mut out = HeckeElement::zero(a.rank, a.nvars);
        for (w, f) in &a.coeffs {
            for (v, g) in &b.coeffs {
                let (u, k) = Self::basis_product(w, v);
                while powers.len() <= k as usize {
                    let next = powers.last().unwrap() * &minus_mu1;
                    powers.push(next);
                }
                out.add(u, &(f * g) * &powers[k as usize]);
            }
        }
        Ok(self.reduce(&out))
    }

    pub fn product<C: Coeff>(&self, factors: &[HeckeElement<C>]) -> Result<HeckeElement<C>> {
        factors.iter().try_fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    /// `1 + x u_i`.
    pub fn linear_factor<C: Coeff>(&self, i: usize, x: &Polynomial<C>) -> Result<HeckeElement<C>> {
        let mut e = self.one::<C>();
        if x.nvars() != self.n {
            return Err(Error::VariableMismatch { left: self.n, right: x.nvars() });
        }
        e.add(Permutation::simple(self.n, i)?, x.clone());
        Ok(e)
    }

    /// `α_i(x) = (1 + x u_{n−1}) ⋯ (1 + x u_i)`; `α_n(x) = 1`.
    pub fn alpha_factor<C: Coeff>(&self, i: usize, x: &Polynomial<C>) -> Result<HeckeElement<C>> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, max: self.n });
        }
        let factors = (i..self.n).rev().map(|j| self.linear_factor(j, x)).collect::<Result<Vec<_>>>()?;
        self.product(&factors)
    }

    /// `S = ∏_{j=1}^{n−1} ∏_{i=n−1}^{j} (1 + x_j u_i)`.
    pub fn big_product_s<C: Coeff>(&self) -> Result<HeckeElement<C>> {
        if self.n > MAX_PRODUCT_RANK {
            return Err(Error::Capacity(format!("S is built for n <= {MAX_PRODUCT_RANK}")));
        }
        let mut factors = Vec::new();
        for j in 1..self.n {
            for i in (j..self.n).rev() {
                factors.push(self.linear_factor(i, &Polynomial::var(self.n, j))?);
            }
        }
        self.product(&factors)
    }

    /// `Δ_i` applied to every coefficient.
    pub fn apply_delta<C: Coeff>(&self, i: usize, e: &HeckeElement<C>) -> Result<HeckeElement<C>> {
        let ops = OperatorContext::new(self.spec, self.n)?;
        Ok(self.reduce(&e.map(|f| ops.apply_delta(i, f))?))
    }
}

fn check_verifier_rank(n: usize, max: usize) -> Result<()> {
    if !(2..=max).contains(&n) {
        return Err(Error::InvalidParameter(format!("verification supports 2 <= n <= {max}, got {n}")));
    }
    Ok(())
}

/// One comparison of a polynomial with a reference, under the two candidate ideals.
#[derive(Debug, Clone, Serialize)]
pub struct CongruenceCase {
    pub w: Permutation,
    pub word: ReducedWord,
    /// Passes modulo `⟨μ2 x_j x_{j+1} : j ∈ supp(w)⟩`.
    pub support_w: bool,
    /// Passes modulo `⟨μ2 x_j x_{j+1} : j ∈ supp(w0 w)⟩`.
    pub support_w0w: bool,
    /// The difference, when nonzero.
    pub difference: Option<PolyJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityCase {
    pub i: usize,
    pub passed: bool,
    pub defect: Option<HeckeJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FkReport {
    pub spec: FglSpec,
    pub n: usize,
    /// `−Δ_i S = S u_i` for each `i`.
    pub identity: Vec<IdentityCase>,
    /// Coefficient of `u_{w0 w}` in `S` against `LG` of each reduced word of `w`.
    pub coefficients: Vec<CongruenceCase>,
}

impl FkReport {
    pub fn identity_passed(&self) -> bool {
        self.identity.iter().all(|c| c.passed)
    }

    pub fn support_w_failures(&self) -> usize {
        self.coefficients.iter().filter(|c| !c.support_w).count()
    }

    pub fn support_w0w_failures(&self) -> usize {
        self.coefficients.iter().filter(|c| !c.support_w0w).count()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CorollaryReport {
    pub spec: FglSpec,
    pub n: usize,
    /// `LG` of each reduced word of `w` against `KLG_w`.
    pub cases: Vec<CongruenceCase>,
}

impl CorollaryReport {
    pub fn support_w_failures(&self) -> usize {
        self.cases.iter().filter(|c| !c.support_w).count()
    }

    pub fn support_w0w_failures(&self) -> usize {
        self.cases.iter().filter(|c| !c.support_w0w).count()
    }
}

fn congruence_case<C: Coeff>(w: &Permutation, word: ReducedWord, difference: Polynomial<C>) -> CongruenceCase {
    let w0w = Permutation::longest(w.n()).compose(w).expect("same rank");
    CongruenceCase {
        support_w: reduce_mod_support(&difference, &w.support()).is_zero(),
        support_w0w: reduce_mod_support(&difference, &w0w.support()).is_zero(),
        difference: (!difference.is_zero()).then(|| difference.to_json()),
        w: w.clone(),
        word,
    }
}

/// All `(w, reduced word)` pairs of `S_n`, in order.
fn all_words(n: usize) -> Result<Vec<(Permutation, ReducedWord)>> {
    let mut out = Vec::new();
    for w in Permutation::all(n) {
        for word in w.reduced_words()? {
            out.push((w.clone(), word));
        }
    }
    Ok(out)
}

/// Checks the operator identity `−Δ_i S = S u_i` and compares the coefficients of `S` with the
/// generalized Schubert polynomials.
pub fn verify_fk_identity(spec: FglSpec, n: usize) -> Result<FkReport> {
    type C = num_bigint::BigInt;
    check_verifier_rank(n, 4)?;
    let algebra = HeckeAlgebra::new(spec, n)?;
    let s = algebra.big_product_s::<C>()?;
    let identity = (1..n)
        .into_par_iter()
        .map(|i| {
            let lhs = algebra.apply_delta(i, &s)?.neg();
            let rhs = algebra.mul(&s, &algebra.generator(i, Polynomial::one(n))?)?;
            let defect = algebra.reduce(&lhs.checked_sub(&rhs)?);
            Ok(IdentityCase { i, passed: defect.is_zero(), defect: (!defect.is_zero()).then(|| defect.to_json()) })
        })
        .collect::<Result<Vec<_>>>()?;
    let ctx = SchubertContext::new(spec, n)?;
    let w0 = Permutation::longest(n);
    let coefficients = all_words(n)?
        .into_par_iter()
        .map(|(w, word)| {
            let lg = ctx.schubert_polynomial::<C>(&word)?;
            let coeff = s.coefficient(&w0.compose(&w)?);
            Ok(congruence_case(&w, word, &coeff - &lg))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FkReport { spec, n, identity, coefficients })
}

/// Compares `LG` of every reduced word of `w` with the Grothendieck polynomial `KLG_w`.
pub fn verify_coeff_corollary(spec: FglSpec, n: usize) -> Result<CorollaryReport> {
    type C = num_bigint::BigInt;
    check_verifier_rank(n, 4)?;
    HeckeAlgebra::new(spec, n)?;
    let ctx = SchubertContext::new(spec, n)?;
    let cases = all_words(n)?
        .into_par_iter()
        .map(|(w, word)| {
            let lg = ctx.schubert_polynomial::<C>(&word)?;
            let klg = ctx.grothendieck_polynomial::<C>(&w)?;
            Ok(congruence_case(&w, word, &lg - &klg))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CorollaryReport { spec, n, cases })
}

#[derive(Debug, Clone, Serialize)]
pub struct LocalCase {
    /// 0: `(1 + x_{i+1}u_i)(1 + χ(x_{i+1})u_i) = 1`;
    /// 1: `α_{i+1}(x_{i+1}) = α_i(x_{i+1})(1 + χ(x_{i+1})u_i)`;
    /// 2: `1 + χ(x_i)u_i = (1 + F(x_{i+1}, χ(x_i))u_i)(1 + χ(x_{i+1})u_i)`;
    /// 3: `−Δ_i(1 + χ(x_{i+1})u_i) = (1 + χ(x_{i+1})u_i)u_i`.
    pub item: usize,
    pub i: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LocalReport {
    pub spec: FglSpec,
    pub n: usize,
    pub cap: u32,
    pub cases: Vec<LocalCase>,
}

impl LocalReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }
}

/// Checks the local identities with `χ` and `F` expanded as series. Both sides are computed
/// one degree beyond `cap` (so that `Δ_i` loses nothing) and compared through x-degree `cap`.
pub fn verify_local_identities(spec: FglSpec, n: usize, cap: SeriesCap) -> Result<LocalReport> {
    type C = num_bigint::BigInt;
    if cap.0 < 4 {
        return Err(Error::CapTooSmall { cap: cap.0 as usize, min: 4 });
    }
    let algebra = HeckeAlgebra::new(spec, n)?;
    let work = SeriesCap(cap.0 + 1);
    let chi = spec.formal_inverse::<C>(work);
    let sum = spec.sum_series::<C>(work);
    let truncated = |e: &HeckeElement<C>| e.map(|f| Ok(f.truncate(work)));
    let agrees = |lhs: &HeckeElement<C>, rhs: &HeckeElement<C>| -> Result<bool> {
        let d = algebra.reduce(&lhs.checked_sub(rhs)?);
        Ok(d.map(|f| Ok(f.truncate(cap)))?.is_zero())
    };
    let mut cases = Vec::new();
    for i in 1..n {
        let x_next = Polynomial::<C>::var(n, i + 1);
        let chi_i = chi.embed(n, &[i])?;
        let chi_next = chi.embed(n, &[i + 1])?;
        let inverse_factor = algebra.linear_factor(i, &chi_next)?;

        let lhs0 = truncated(&algebra.mul(&algebra.linear_factor(i, &x_next)?, &inverse_factor)?)?;
        cases.push(LocalCase { item: 0, i, passed: agrees(&lhs0, &algebra.one())? });

        let lhs1 = algebra.alpha_factor(i + 1, &x_next)?;
        let rhs1 = truncated(&algebra.mul(&algebra.alpha_factor(i, &x_next)?, &inverse_factor)?)?;
        cases.push(LocalCase { item: 1, i, passed: agrees(&lhs1, &rhs1)? });

        let f = sum.compose(&[x_next.clone(), chi_i.clone()], Some(work))?;
        let lhs2 = algebra.linear_factor(i, &chi_i)?;
        let rhs2 = truncated(&algebra.mul(&algebra.linear_factor(i, &f)?, &inverse_factor)?)?;
        cases.push(LocalCase { item: 2, i, passed: agrees(&lhs2, &rhs2)? });

        let lhs3 = algebra.apply_delta(i, &inverse_factor)?.neg();
        let rhs3 = algebra.mul(&inverse_factor, &algebra.generator(i, Polynomial::one(n))?)?;
        cases.push(LocalCase { item: 3, i, passed: agrees(&lhs3, &rhs3)? });
    }
    Ok(LocalReport { spec, n, cap: cap.0, cases })
}

#[derive(Debug, Clone, Serialize)]
pub struct YbeCase {
    pub i: usize,
    /// Whether `x_i`, `x_{i+1}` were replaced by `χ(x_i)`, `χ(x_{i+1})`.
    pub inverted: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct YbeReport {
    pub spec: FglSpec,
    pub n: usize,
    pub cap: Option<u32>,
    pub cases: Vec<YbeCase>,
}

impl YbeReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }
}

/// `α_i(x_i) α_i(x_{i+1}) = α_i(x_{i+1}) α_i(x_i)` for every `i`, exactly.
///
/// With a cap the same commutation is also checked for `χ(x_i)`, `χ(x_{i+1})`, through
/// x-degree `cap`.
pub fn verify_ybe(spec: FglSpec, n: usize, cap: Option<SeriesCap>) -> Result<YbeReport> {
    type C = num_bigint::BigInt;
    check_verifier_rank(n, 4)?;
    let algebra = HeckeAlgebra::new(spec, n)?;
    let mut inputs: Vec<(usize, bool)> = (1..n).map(|i| (i, false)).collect();
    if cap.is_some() {
        inputs.extend((1..n).map(|i| (i, true)));
    }
    let chi = cap.map(|c| spec.formal_inverse::<C>(c));
    let cases = inputs
        .into_par_iter()
        .map(|(i, inverted)| {
            let arg = |j: usize| -> Result<Polynomial<C>> {
                match (&chi, inverted) {
                    (Some(chi), true) => chi.embed(n, &[j]),
                    _ => Ok(Polynomial::var(n, j)),
                }
            };
            let a = algebra.alpha_factor::<C>(i, &arg(i)?)?;
            let b = algebra.alpha_factor::<C>(i, &arg(i + 1)?)?;
            let d = algebra.mul(&a, &b)?.checked_sub(&algebra.mul(&b, &a)?)?;
            let passed = match cap {
                Some(c) if inverted => d.map(|f| Ok(f.truncate(c)))?.is_zero(),
                _ => d.is_zero(),
            };
            Ok(YbeCase { i, inverted, passed })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(YbeReport { spec, n, cap: cap.map(|c| c.0), cases })
}
