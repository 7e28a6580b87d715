//! The hyperbolic formal group law `F(x,y) = (x + y − μ1xy)/(1 + μ2xy)` and its degenerations.
//!
//! Everything downstream only needs the difference kernel `p(x, y)`, the polynomial with
//! `1/F(x, χ(y)) = p(x, y)/(x − y)`. It is stored in closed form; the series forms of `F` and `χ`
//! are used to validate it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polycore::{Polynomial, SeriesCap};
use crate::scalar::Coeff;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FglKind {
    /// `F = x + y`
    Additive,
    /// `F = x + y − μ1xy`
    Multiplicative,
    Hyperbolic,
    /// Hyperbolic with `μ1 = 0`.
    Lorentz,
}

impl FglKind {
    pub const ALL: [FglKind; 4] = [FglKind::Additive, FglKind::Multiplicative, FglKind::Hyperbolic, FglKind::Lorentz];

    pub fn name(self) -> &'static str {
        match self {
            FglKind::Additive => "additive",
            FglKind::Multiplicative => "multiplicative",
            FglKind::Hyperbolic => "hyperbolic",
            FglKind::Lorentz => "lorentz",
        }
    }

    fn forces_mu1_zero(self) -> bool {
        matches!(self, FglKind::Additive | FglKind::Lorentz)
    }

    fn forces_mu2_zero(self) -> bool {
        matches!(self, FglKind::Additive | FglKind::Multiplicative)
    }
}

impl fmt::Display for FglKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FglKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FglKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown formal group law `{s}`")))
    }
}

/// A formal group law of the hyperbolic family, with optional integer values for `μ1`, `μ2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FglSpec {
    pub kind: FglKind,
    mu1: Option<i32>,
    mu2: Option<i32>,
}

impl FglSpec {
    pub fn new(kind: FglKind) -> Self {
        Self { kind, mu1: None, mu2: None }
    }

    pub fn additive() -> Self {
        Self::new(FglKind::Additive)
    }

    pub fn multiplicative() -> Self {
        Self::new(FglKind::Multiplicative)
    }

    pub fn hyperbolic() -> Self {
        Self::new(FglKind::Hyperbolic)
    }

    pub fn lorentz() -> Self {
        Self::new(FglKind::Lorentz)
    }

    /// Attaches integer specializations. A nonzero value for a parameter the kind forces to zero
    /// is rejected.
    pub fn specialized(kind: FglKind, mu1: Option<i32>, mu2: Option<i32>) -> Result<Self> {
        if kind.forces_mu1_zero() && mu1.is_some_and(|v| v != 0) {
            return Err(Error::Specialization(format!("{kind} forces mu1 = 0")));
        }
        if kind.forces_mu2_zero() && mu2.is_some_and(|v| v != 0) {
            return Err(Error::Specialization(format!("{kind} forces mu2 = 0")));
        }
        Ok(Self { kind, mu1, mu2 })
    }

    /// The value of `μ1`: `Some` when it is a fixed integer.
    pub fn mu1_value(&self) -> Option<i32> {
        if self.kind.forces_mu1_zero() {
            Some(0)
        } else {
            self.mu1
        }
    }

    pub fn mu2_value(&self) -> Option<i32> {
        if self.kind.forces_mu2_zero() {
            Some(0)
        } else {
            self.mu2
        }
    }

    /// Whether `μ2` is identically zero.
    pub fn mu2_vanishes(&self) -> bool {
        self.mu2_value() == Some(0)
    }

    /// The same law with `μ2 = 0`: hyperbolic becomes multiplicative, Lorentz becomes additive.
    pub fn without_mu2(&self) -> Self {
        let kind = match self.kind {
            FglKind::Hyperbolic => FglKind::Multiplicative,
            FglKind::Lorentz => FglKind::Additive,
            k => k,
        };
        Self { kind, mu1: self.mu1_value().filter(|_| !kind.forces_mu1_zero()), mu2: None }
    }

    fn scalar<C: Coeff>(nvars: usize, value: Option<i32>, symbol: fn(usize) -> Polynomial<C>) -> Polynomial<C> {
        match value {
            Some(v) => Polynomial::from_i32(nvars, v),
            None => symbol(nvars),
        }
    }

    /// `μ1` as a constant polynomial (symbolic, an integer, or zero).
    pub fn mu1_poly<C: Coeff>(&self, nvars: usize) -> Polynomial<C> {
        Self::scalar(nvars, self.mu1_value(), Polynomial::mu1)
    }

    pub fn mu2_poly<C: Coeff>(&self, nvars: usize) -> Polynomial<C> {
        Self::scalar(nvars, self.mu2_value(), Polynomial::mu2)
    }

    /// `F(x, y)` in two variables `(x, y) = (x1, x2)`, truncated at x-degree `cap`.
    pub fn sum_series<C: Coeff>(&self, cap: SeriesCap) -> Polynomial<C> {
        let (x, y) = (Polynomial::var(2, 1), Polynomial::var(2, 2));
        let xy = &x * &y;
        let numerator = &(&x + &y) - &(&self.mu1_poly(2) * &xy);
        let denominator = &Polynomial::one(2) + &(&self.mu2_poly(2) * &xy);
        let inverse = denominator.invert_unit(cap).expect("1 + mu2*x*y is a unit");
        numerator.mul_truncated(&inverse, Some(cap))
    }

    /// `χ(x) = −x/(1 − μ1x)` in one variable, truncated at `cap`.
    pub fn formal_inverse<C: Coeff>(&self, cap: SeriesCap) -> Polynomial<C> {
        let x = Polynomial::var(1, 1);
        let denominator = &Polynomial::one(1) - &(&self.mu1_poly(1) * &x);
        let inverse = denominator.invert_unit(cap).expect("1 - mu1*x is a unit");
        (-x).mul_truncated(&inverse, Some(cap))
    }

    /// `p(x, y) = 1 − μ1y − μ2xy` in two ordered variables `(x, y) = (x1, x2)`.
    pub fn diff_kernel<C: Coeff>(&self) -> Polynomial<C> {
        self.kernel_at(2, 1, 2)
    }

    /// `p(x_first, x_second)` in a ring with `nvars` variables.
    pub fn kernel_at<C: Coeff>(&self, nvars: usize, first: usize, second: usize) -> Polynomial<C> {
        let (x, y) = (Polynomial::var(nvars, first), Polynomial::var(nvars, second));
        let mut p = Polynomial::one(nvars);
        p -= &(&self.mu1_poly(nvars) * &y);
        p -= &(&self.mu2_poly(nvars) * &(&x * &y));
        p
    }

    /// `κ = (p(x, y) − p(y, x))/(x − y)`, which must be free of `x` and `y`.
    ///
    /// Returned as a polynomial in `nvars` variables (of x-degree 0).
    pub fn kappa<C: Coeff>(&self, nvars: usize) -> Result<Polynomial<C>> {
        let p: Polynomial<C> = self.diff_kernel();
        let kappa = (&p - &p.swap_vars(1)?).div_by_difference(1)?;
        if kappa.x_degree_max().unwrap_or(0) > 0 {
            return Err(Error::NonConstantKappa);
        }
        kappa.embed(nvars, &[1, 1])
    }

    /// `F(x, χ(y))` truncated at `cap`, in variables `(x, y)`.
    pub fn difference_series<C: Coeff>(&self, cap: SeriesCap) -> Polynomial<C> {
        let chi_y = self.formal_inverse::<C>(cap).embed(2, &[2]).expect("valid embedding");
        self.sum_series::<C>(cap)
            .compose(&[Polynomial::var(2, 1), chi_y], Some(cap))
            .expect("images have no constant part")
    }

    /// Checks `p(x, y)·F(x, χ(y)) = x − y` through x-degree `cap`.
    pub fn kernel_self_check(&self, cap: SeriesCap) -> bool {
        let lhs = self
            .diff_kernel::<num_bigint::BigInt>()
            .mul_truncated(&self.difference_series(cap), Some(cap));
        let rhs = &Polynomial::var(2, 1) - &Polynomial::var(2, 2);
        lhs == rhs.truncate(cap)
    }

    /// Checks `F(x, χ(x)) = 0` through x-degree `cap`.
    pub fn inverse_self_check(&self, cap: SeriesCap) -> bool {
        let chi = self.formal_inverse::<num_bigint::BigInt>(cap);
        let x = Polynomial::var(1, 1);
        self.sum_series(cap).compose(&[x, chi], Some(cap)).map(|f| f.is_zero()).unwrap_or(false)
    }
}

impl fmt::Display for FglSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if let Some(v) = self.mu1.filter(|_| !self.kind.forces_mu1_zero()) {
            write!(f, " mu1={v}")?;
        }
        if let Some(v) = self.mu2.filter(|_| !self.kind.forces_mu2_zero()) {
            write!(f, " mu2={v}")?;
        }
        Ok(())
    }
}
