use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// Exponents of `μ1^a μ2^b`. `μ1` has graded degree −1 and `μ2` has −2.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MuExp {
    pub a: u32,
    pub b: u32,
}

impl MuExp {
    pub const ONE: MuExp = MuExp { a: 0, b: 0 };

    pub fn new(a: u32, b: u32) -> Self {
        Self { a, b }
    }

    pub fn degree(&self) -> i64 {
        -(self.a as i64) - 2 * self.b as i64
    }

    pub fn is_one(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn mul(&self, other: &MuExp) -> MuExp {
        MuExp { a: self.a + other.a, b: self.b + other.b }
    }
}

/// Exponent vector of `x_1 … x_n`.
///
/// Ordered graded-lexicographically with `x_1 < x_2 < … < x_n`: first by total degree, then by
/// the exponent of `x_n`, then `x_{n-1}`, and so on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct XExp(Vec<u32>);

impl XExp {
    pub fn zero(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn new(exps: Vec<u32>) -> Self {
        Self(exps)
    }

    /// The monomial `x_i` (1-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Self(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn exps_mut(&mut self) -> &mut [u32] {
        &mut self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// Exponent of `x_i` (1-based).
    pub fn get(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &XExp) -> XExp {
        XExp(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &XExp) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Swap the exponents of `x_i` and `x_{i+1}` (1-based).
    pub fn swapped(&self, i: usize) -> XExp {
        let mut e = self.0.clone();
        e.swap(i - 1, i);
        XExp(e)
    }

    /// Pure lexicographic comparison with `x_n` most significant.
    pub fn cmp_lex(&self, other: &XExp) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl Ord for XExp {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.cmp_lex(other))
    }
}

impl PartialOrd for XExp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A monomial `x^e μ1^a μ2^b`; the canonical term order compares `x` first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub x: XExp,
    pub mu: MuExp,
}

impl Monomial {
    pub fn new(x: XExp, mu: MuExp) -> Self {
        Self { x, mu }
    }

    pub fn one(nvars: usize) -> Self {
        Self { x: XExp::zero(nvars), mu: MuExp::ONE }
    }

    pub fn degree(&self) -> i64 {
        self.x.degree() as i64 + self.mu.degree()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { x: self.x.mul(&other.x), mu: self.mu.mul(&other.mu) }
    }
}
