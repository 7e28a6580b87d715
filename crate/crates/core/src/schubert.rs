//! Generalized Schubert polynomials.
//!
//! `LG_1 = x_1^{n−1} x_2^{n−2} ⋯ x_{n−1}` is the class of a point, and a reduced word
//! `(i1, …, ir)` gives `LG = C_{ir}(⋯ C_{i1}(LG_1))`, the class of the Bott-Samelson resolution
//! of that word. Its degree is `n(n−1)/2 − r`, so short words are small classes.

use serde::{Deserialize, Serialize};

use crate::combi::Permutation;
use crate::ddo::OperatorContext;
use crate::error::{Error, Result};
use crate::fgl::FglSpec;
use crate::polycore::{MuExp, Polynomial, SeriesCap};
use crate::scalar::Coeff;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchubertContext {
    ops: OperatorContext,
}

impl SchubertContext {
    pub fn new(spec: FglSpec, n: usize) -> Result<Self> {
        Ok(Self { ops: OperatorContext::new(spec, n)? })
    }

    pub fn spec(&self) -> FglSpec {
        self.ops.spec
    }

    pub fn n(&self) -> usize {
        self.ops.nvars()
    }

    pub fn operators(&self) -> &OperatorContext {
        &self.ops
    }

    /// `n(n−1)/2`, the dimension of the flag variety.
    pub fn top_degree(&self) -> usize {
        top_degree(self.n())
    }

    pub fn initial_class<C: Coeff>(&self) -> Polynomial<C> {
        initial_class(self.n())
    }

    /// `LG` of a reduced word. Non-reduced words are rejected.
    pub fn schubert_polynomial<C: Coeff>(&self, word: &[usize]) -> Result<Polynomial<C>> {
        let w = Permutation::from_word(self.n(), word)?;
        if w.length() != word.len() {
            return Err(Error::NotReduced { word: word.to_vec() });
        }
        self.ops.apply_word(word, &self.initial_class())
    }

    /// The `μ2 = 0` specialization of [`Self::schubert_polynomial`] on the lexicographically
    /// smallest reduced word of `w`. With `μ2 = 0` the operators satisfy the braid relations,
    /// so the choice of word does not matter.
    pub fn grothendieck_polynomial<C: Coeff>(&self, w: &Permutation) -> Result<Polynomial<C>> {
        if w.n() != self.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: w.n() });
        }
        let k = SchubertContext::new(self.spec().without_mu2(), self.n())?;
        k.schubert_polynomial(&w.canonical_word())
    }
}

pub fn top_degree(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `x_1^{n−1} x_2^{n−2} ⋯ x_{n−1}`.
pub fn initial_class<C: Coeff>(n: usize) -> Polynomial<C> {
    Polynomial::term((0..n).map(|i| (n - 1 - i) as u32).collect(), MuExp::ONE, C::one())
}

/// The two families of smooth Schubert varieties of `Gr(k, n)` with a monomial representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SmoothFamily {
    /// The partition `(n−k)^a`.
    Rows(usize),
    /// The partition `b^k`.
    Cols(usize),
}

fn check_family(k: usize, n: usize, family: SmoothFamily) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParameter(format!("need 1 <= k < n, got k={k}, n={n}")));
    }
    match family {
        SmoothFamily::Rows(a) if a == 0 || a > k => {
            Err(Error::InvalidParameter(format!("rows a={a} outside 1..={k}")))
        }
        SmoothFamily::Cols(b) if b == 0 || b > n - k => {
            Err(Error::InvalidParameter(format!("cols b={b} outside 1..={}", n - k)))
        }
        _ => Ok(()),
    }
}

/// `(x_{k+1} ⋯ x_n)^{k−a}` for `Rows(a)` and `(x_1 ⋯ x_k)^{n−k−b}` for `Cols(b)`.
///
/// Independent of the formal group law. See [`smooth_class_representative`] for the
/// representative that matches the Schubert basis in the row family.
pub fn smooth_monomial<C: Coeff>(k: usize, n: usize, family: SmoothFamily) -> Result<Polynomial<C>> {
    check_family(k, n, family)?;
    let exps = match family {
        SmoothFamily::Rows(a) => (1..=n).map(|j| if j > k { (k - a) as u32 } else { 0 }).collect(),
        SmoothFamily::Cols(b) => (1..=n).map(|j| if j <= k { (n - k - b) as u32 } else { 0 }).collect(),
    };
    Ok(Polynomial::term(exps, MuExp::ONE, C::one()))
}

/// Representative of the smooth class in the same normalization as the Schubert polynomials.
///
/// The column family is the monomial `(x_1 ⋯ x_k)^{n−k−b}`. The row family is
/// `(χ(x_{k+1}) ⋯ χ(x_n))^{k−a}` with `χ` the formal inverse, truncated at the top degree
/// `n(n−1)/2` (higher terms vanish in the coinvariant ring). For the additive law this is
/// `(−1)^{(n−k)(k−a)} (x_{k+1} ⋯ x_n)^{k−a}`.
pub fn smooth_class_representative<C: Coeff>(
    spec: FglSpec,
    k: usize,
    n: usize,
    family: SmoothFamily,
) -> Result<Polynomial<C>> {
    check_family(k, n, family)?;
    match family {
        SmoothFamily::Cols(_) => smooth_monomial(k, n, family),
        SmoothFamily::Rows(a) => {
            let cap = SeriesCap(top_degree(n) as u32);
            let chi = spec.formal_inverse::<C>(cap);
            let mut out = Polynomial::one(n);
            for j in k + 1..=n {
                let chi_j = chi.embed(n, &[j])?;
                for _ in 0..k - a {
                    out = out.mul_truncated(&chi_j, Some(cap));
                }
            }
            Ok(out)
        }
    }
}
