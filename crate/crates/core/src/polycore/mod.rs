//! Exact sparse polynomials in `x_1 … x_n` over `Z[μ1, μ2]`.
//!
//! A [`Polynomial`] is a map from monomials `x^e μ1^a μ2^b` to nonzero integer coefficients,
//! iterated in the canonical order of [`Monomial`]. Graded degree counts `x_i` as `+1`, `μ1` as
//! `−1` and `μ2` as `−2`; "x-degree" ignores the `μ` part and is what series truncation uses.
//!
//! The `std::ops` impls panic on a variable-count mismatch; the `checked_*` methods return
//! [`Error::VariableMismatch`] instead.

mod monomial;
mod render;

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

pub use monomial::{Monomial, MuExp, XExp};
pub use render::{PolyJson, TermJson};

use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// Maximum retained total x-degree for power series truncated to polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeriesCap(pub u32);

/// Result of [`Polynomial::graded_degree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial, homogeneous of every degree.
    Zero,
    Homogeneous(i64),
    Inhomogeneous,
}

impl Homogeneity {
    pub fn is_homogeneous(&self) -> bool {
        !matches!(self, Homogeneity::Inhomogeneous)
    }

    /// Whether this is compatible with being homogeneous of degree `d`.
    pub fn has_degree(&self, d: i64) -> bool {
        match self {
            Homogeneity::Zero => true,
            Homogeneity::Homogeneous(e) => *e == d,
            Homogeneity::Inhomogeneous => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Polynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(nvars, Monomial::one(nvars), c)
    }

    pub fn from_i32(nvars: usize, c: i32) -> Self {
        Self::constant(nvars, C::from(c))
    }

    /// The variable `x_i`, 1-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!((1..=nvars).contains(&i), "variable x_{i} out of range for {nvars} variables");
        Self::monomial(nvars, Monomial::new(XExp::var(nvars, i), MuExp::ONE), C::one())
    }

    pub fn mu1(nvars: usize) -> Self {
        Self::monomial(nvars, Monomial::new(XExp::zero(nvars), MuExp::new(1, 0)), C::one())
    }

    pub fn mu2(nvars: usize) -> Self {
        Self::monomial(nvars, Monomial::new(XExp::zero(nvars), MuExp::new(0, 1)), C::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, c: C) -> Self {
        assert_eq!(m.x.nvars(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { nvars, terms }
    }

    /// `c · x^exps · μ1^a μ2^b`.
    pub fn term(exps: Vec<u32>, mu: MuExp, c: C) -> Self {
        let nvars = exps.len();
        Self::monomial(nvars, Monomial::new(XExp::new(exps), mu), c)
    }

    /// Builds a polynomial from terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            if m.x.nvars() != nvars {
                return Err(Error::VariableMismatch { left: nvars, right: m.x.nvars() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, C)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Adds `c · m` in place.
    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.nvars {
            return Err(Error::IndexOutOfRange { index: i, max: self.nvars.saturating_sub(1) });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.mul_truncated(other, None))
    }

    /// Product, dropping every term of x-degree above `cap` when given.
    pub fn mul_truncated(&self, other: &Self, cap: Option<SeriesCap>) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            let d1 = m1.x.degree();
            for (m2, c2) in &other.terms {
                if let Some(SeriesCap(cap)) = cap {
                    if d1 + m2.x.degree() > cap {
                        continue;
                    }
                }
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d.clone() * c.clone())).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(n, d)| (n.mul(m), d.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }

    /// `σ_i`: swaps `x_i` and `x_{i+1}` (1-based).
    pub fn swap_vars(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        Ok(Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.x.swapped(i), m.mu), c.clone()))
                .collect(),
        })
    }

    pub fn is_symmetric_in(&self, i: usize) -> Result<bool> {
        Ok(self.swap_vars(i)? == *self)
    }

    /// Exact quotient by `x_i − x_{i+1}`.
    ///
    /// Synthetic division in `x_i`; any nonzero remainder is reported as
    /// [`Error::DivisionFailure`].
    pub fn div_by_difference(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let xi = i - 1;
        // f = Σ_k f_k x_i^k with f_k free of x_i
        let mut slices: BTreeMap<u32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            let k = m.x.exps()[xi];
            let mut x = m.x.clone();
            x.exps_mut()[xi] = 0;
            slices
                .entry(k)
                .or_insert_with(|| Self::zero(self.nvars))
                .add_term(Monomial::new(x, m.mu), c.clone());
        }
        let Some(&top) = slices.keys().next_back() else {
            return Ok(Self::zero(self.nvars));
        };
        let y = Self::var(self.nvars, i + 1);
        let mut quotient = Self::zero(self.nvars);
        // q_{k-1} = f_k + y q_k, from the top down
        let mut carry = Self::zero(self.nvars);
        for k in (1..=top).rev() {
            let fk = slices.remove(&k).unwrap_or_else(|| Self::zero(self.nvars));
            carry = &fk + &(&y * &carry);
            let mut xk = XExp::zero(self.nvars);
            xk.exps_mut()[xi] = k - 1;
            quotient += &carry.mul_monomial(&Monomial::new(xk, MuExp::ONE), &C::one());
        }
        let f0 = slices.remove(&0).unwrap_or_else(|| Self::zero(self.nvars));
        let remainder = &f0 + &(&y * &carry);
        if !remainder.is_zero() {
            return Err(Error::DivisionFailure { index: i });
        }
        Ok(quotient)
    }

    pub fn x_degree_max(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.x.degree()).max()
    }

    /// Drops all terms of x-degree above the cap.
    pub fn truncate(&self, cap: SeriesCap) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.x.degree() <= cap.0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The part of x-degree exactly `d`.
    pub fn x_homogeneous_part(&self, d: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.x.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Inverse as a power series, truncated at `cap`.
    ///
    /// The x-degree-0 part must be exactly `±1`; otherwise the inverse is not a series in the
    /// `x` variables with polynomial coefficients.
    pub fn invert_unit(&self, cap: SeriesCap) -> Result<Self> {
        let degree_zero = self.x_homogeneous_part(0);
        let unit = if degree_zero == Self::one(self.nvars) {
            C::one()
        } else if degree_zero == Self::from_i32(self.nvars, -1) {
            -C::one()
        } else {
            return Err(Error::NonUnit);
        };
        // f = u(1 − h) with h of positive x-degree, so f⁻¹ = u Σ h^k
        let h = &Self::one(self.nvars) - &self.scale(&unit);
        let one = Self::one(self.nvars);
        let mut inverse = one.clone();
        for _ in 0..cap.0 {
            inverse = &one + &h.mul_truncated(&inverse, Some(cap));
        }
        Ok(inverse.scale(&unit))
    }

    /// Homogeneity in the grading `deg x_i = 1, deg μ1 = −1, deg μ2 = −2`.
    pub fn graded_degree(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degrees.all(|e| e == d) {
                    Homogeneity::Homogeneous(d)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    /// Re-indexes variables: `x_j` becomes `x_{map[j-1]}` in a ring with `nvars` variables.
    /// Several old variables may map to the same new one.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Result<Self> {
        if map.len() != self.nvars {
            return Err(Error::VariableMismatch { left: self.nvars, right: map.len() });
        }
        if let Some(&bad) = map.iter().find(|&&j| j == 0 || j > nvars) {
            return Err(Error::IndexOutOfRange { index: bad, max: nvars });
        }
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            let mut x = XExp::zero(nvars);
            for (old, &new) in m.x.exps().iter().zip(map) {
                x.exps_mut()[new - 1] += old;
            }
            out.add_term(Monomial::new(x, m.mu), c.clone());
        }
        Ok(out)
    }

    /// Substitutes `x_j ↦ images[j-1]`, truncating at `cap` when given.
    ///
    /// With a cap, every image must have zero x-degree-0 part so truncation commutes with
    /// substitution.
    pub fn compose(&self, images: &[Self], cap: Option<SeriesCap>) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::VariableMismatch { left: self.nvars, right: images.len() });
        }
        let Some(target) = images.first().map(|p| p.nvars) else {
            return Err(Error::InvalidParameter("compose needs at least one variable".into()));
        };
        for img in images {
            img.check_same(&images[0])?;
            if cap.is_some() && !img.x_homogeneous_part(0).is_zero() {
                return Err(Error::InvalidParameter(
                    "truncated substitution needs images without x-degree-0 part".into(),
                ));
            }
        }
        let mut powers: Vec<Vec<Self>> = images.iter().map(|p| vec![Self::one(target), p.clone()]).collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut acc = Self::monomial(target, Monomial::new(XExp::zero(target), m.mu), c.clone());
            for (j, &e) in m.x.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[j].len() <= e as usize {
                    let next = powers[j].last().unwrap().mul_truncated(&images[j], cap);
                    powers[j].push(next);
                }
                acc = acc.mul_truncated(&powers[j][e as usize], cap);
                if acc.is_zero() {
                    break;
                }
            }
            out += &acc;
        }
        Ok(out)
    }

    /// Substitutes integer values for `μ1` and/or `μ2`.
    pub fn specialize_mu(&self, mu1: Option<&C>, mu2: Option<&C>) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut c = c.clone();
            let mut mu = m.mu;
            if let Some(v) = mu1 {
                c = c * num_traits::pow(v.clone(), mu.a as usize);
                mu.a = 0;
            }
            if let Some(v) = mu2 {
                c = c * num_traits::pow(v.clone(), mu.b as usize);
                mu.b = 0;
            }
            out.add_term(Monomial::new(m.x.clone(), mu), c);
        }
        out
    }

    /// Keeps only the terms for which `keep` returns true.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

impl<C: Coeff> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.checked_add(rhs).expect("variable count mismatch")
    }
}

impl<C: Coeff> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.checked_sub(rhs).expect("variable count mismatch")
    }
}

impl<C: Coeff> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.checked_mul(rhs).expect("variable count mismatch")
    }
}

impl<C: Coeff> Add for Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        &self - &rhs
    }
}

impl<C: Coeff> Mul for Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        &self * &rhs
    }
}

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -&self
    }
}

impl<C: Coeff> AddAssign<&Polynomial<C>> for Polynomial<C> {
    fn add_assign(&mut self, rhs: &Polynomial<C>) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<C: Coeff> SubAssign<&Polynomial<C>> for Polynomial<C> {
    fn sub_assign(&mut self, rhs: &Polynomial<C>) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}
