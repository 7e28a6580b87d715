//! Divided difference operators `C_i` and `Δ_i` and checks of their relations.
//!
//! With `p` the difference kernel of the formal group law,
//!
//! * `C_i f = (f·p(x_i, x_{i+1}) − σ_i(f·p(x_i, x_{i+1}))) / (x_i − x_{i+1})`
//! * `Δ_i f = (f − σ_i f)·p(x_{i+1}, x_i) / (x_{i+1} − x_i)`
//!
//! Both are exact on polynomials. A word `(i1, …, ir)` acts as `C_{ir}(⋯ C_{i1}(f))`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fgl::FglSpec;
use crate::polycore::{Monomial, MuExp, PolyJson, Polynomial, XExp};
use crate::scalar::Coeff;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OperatorContext {
    pub spec: FglSpec,
    nvars: usize,
}

impl OperatorContext {
    pub fn new(spec: FglSpec, nvars: usize) -> Result<Self> {
        if nvars < 2 {
            return Err(Error::InvalidParameter(format!("operators need at least 2 variables, got {nvars}")));
        }
        Ok(Self { spec, nvars })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    fn check<C: Coeff>(&self, i: usize, f: &Polynomial<C>) -> Result<()> {
        if f.nvars() != self.nvars {
            return Err(Error::VariableMismatch { left: self.nvars, right: f.nvars() });
        }
        if i == 0 || i >= self.nvars {
            return Err(Error::IndexOutOfRange { index: i, max: self.nvars - 1 });
        }
        Ok(())
    }

    pub fn apply_c<C: Coeff>(&self, i: usize, f: &Polynomial<C>) -> Result<Polynomial<C>> {
        self.check(i, f)?;
        let g = f * &self.spec.kernel_at(self.nvars, i, i + 1);
        (&g - &g.swap_vars(i)?).div_by_difference(i)
    }

    pub fn apply_delta<C: Coeff>(&self, i: usize, f: &Polynomial<C>) -> Result<Polynomial<C>> {
        self.check(i, f)?;
        let g = &(f - &f.swap_vars(i)?) * &self.spec.kernel_at(self.nvars, i + 1, i);
        Ok(-g.div_by_difference(i)?)
    }

    /// `C_{ir}(⋯ C_{i1}(f))` for the word `(i1, …, ir)`.
    pub fn apply_word<C: Coeff>(&self, word: &[usize], f: &Polynomial<C>) -> Result<Polynomial<C>> {
        word.iter().try_fold(f.clone(), |g, &i| self.apply_c(i, &g))
    }

    pub fn kappa<C: Coeff>(&self) -> Result<Polynomial<C>> {
        self.spec.kappa(self.nvars)
    }

    fn check_pair(&self, i: usize) -> Result<()> {
        if i == 0 || i + 1 >= self.nvars {
            return Err(Error::IndexOutOfRange { index: i, max: self.nvars.saturating_sub(2) });
        }
        Ok(())
    }

    /// `C_i C_{i+1} C_i f + μ2 C_i f − (C_{i+1} C_i C_{i+1} f + μ2 C_{i+1} f)`.
    pub fn twisted_braid_defect<C: Coeff>(&self, i: usize, f: &Polynomial<C>) -> Result<Polynomial<C>> {
        self.check_pair(i)?;
        let mu2 = self.spec.mu2_poly(self.nvars);
        let lhs = &self.apply_word(&[i, i + 1, i], f)? + &(&mu2 * &self.apply_c(i, f)?);
        let rhs = &self.apply_word(&[i + 1, i, i + 1], f)? + &(&mu2 * &self.apply_c(i + 1, f)?);
        Ok(&lhs - &rhs)
    }

    /// `C_i C_{i+1} C_i f − C_{i+1} C_i C_{i+1} f`.
    pub fn naive_braid_defect<C: Coeff>(&self, i: usize, f: &Polynomial<C>) -> Result<Polynomial<C>> {
        self.check_pair(i)?;
        Ok(&self.apply_word(&[i, i + 1, i], f)? - &self.apply_word(&[i + 1, i, i + 1], f)?)
    }

    /// `Δ_i f − (κ f − C_i f)`.
    pub fn delta_defect<C: Coeff>(&self, i: usize, f: &Polynomial<C>) -> Result<Polynomial<C>> {
        let kappa_f = &self.kappa::<C>()? * f;
        Ok(&self.apply_delta(i, f)? - &(&kappa_f - &self.apply_c(i, f)?))
    }

    /// `C_i(C_i f) − κ C_i f`. The quadratic relation is not asserted anywhere; this only
    /// measures it.
    pub fn quadratic_defect<C: Coeff>(&self, i: usize, f: &Polynomial<C>) -> Result<Polynomial<C>> {
        let cf = self.apply_c(i, f)?;
        Ok(&self.apply_c(i, &cf)? - &(&self.kappa::<C>()? * &cf))
    }

    fn sampled<C: Coeff>(
        &self,
        check: &str,
        index: usize,
        samples: usize,
        seed: u64,
        defect: impl Fn(&Polynomial<C>) -> Result<Polynomial<C>>,
    ) -> Result<SampleReport> {
        let mut failures = Vec::new();
        for (sample, f) in sample_polynomials::<C>(self.nvars, samples, seed).iter().enumerate() {
            let d = defect(f)?;
            if !d.is_zero() {
                failures.push(SampleFailure { sample, input: f.to_json(), defect: d.to_json() });
            }
        }
        Ok(SampleReport { check: check.to_string(), spec: self.spec, nvars: self.nvars, index, samples, seed, failures })
    }

    pub fn twisted_braid_check<C: Coeff>(&self, i: usize, samples: usize, seed: u64) -> Result<SampleReport> {
        self.check_pair(i)?;
        self.sampled::<C>("twisted-braid", i, samples, seed, |f| self.twisted_braid_defect(i, f))
    }

    pub fn naive_braid_check<C: Coeff>(&self, i: usize, samples: usize, seed: u64) -> Result<SampleReport> {
        self.check_pair(i)?;
        self.sampled::<C>("naive-braid", i, samples, seed, |f| self.naive_braid_defect(i, f))
    }

    pub fn delta_identity_check<C: Coeff>(&self, i: usize, samples: usize, seed: u64) -> Result<SampleReport> {
        self.check(i, &Polynomial::<C>::zero(self.nvars))?;
        self.sampled::<C>("delta-identity", i, samples, seed, |f| self.delta_defect(i, f))
    }

    pub fn quadratic_check<C: Coeff>(&self, i: usize, samples: usize, seed: u64) -> Result<SampleReport> {
        self.check(i, &Polynomial::<C>::zero(self.nvars))?;
        self.sampled::<C>("quadratic", i, samples, seed, |f| self.quadratic_defect(i, f))
    }
}

/// Outcome of an identity evaluated on seeded random inputs.
#[derive(Debug, Clone, Serialize)]
pub struct SampleReport {
    pub check: String,
    pub spec: FglSpec,
    pub nvars: usize,
    pub index: usize,
    pub samples: usize,
    pub seed: u64,
    pub failures: Vec<SampleFailure>,
}

impl SampleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SampleFailure {
    pub sample: usize,
    pub input: PolyJson,
    pub defect: PolyJson,
}

/// Seeded random polynomials: 1 to 6 terms, each of x-degree at most 4 with coefficient in
/// `[−3, 3]` and `μ1`, `μ2` exponents at most 1.
pub fn sample_polynomials<C: Coeff>(nvars: usize, count: usize, seed: u64) -> Vec<Polynomial<C>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            // a repeated monomial overwrites, so every coefficient stays in range
            let mut terms = BTreeMap::new();
            for _ in 0..rng.gen_range(1..=6) {
                let degree = rng.gen_range(0..=4);
                let mut exps = vec![0u32; nvars];
                for _ in 0..degree {
                    exps[rng.gen_range(0..nvars)] += 1;
                }
                let mu = MuExp::new(rng.gen_range(0..=1), rng.gen_range(0..=1));
                let c: i32 = rng.gen_range(-3..=3);
                terms.insert(Monomial::new(XExp::new(exps), mu), C::from(c));
            }
            Polynomial::from_terms(nvars, terms).expect("terms have nvars variables")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = Polynomial<BigInt>;

    fn ctx(spec: FglSpec, n: usize) -> OperatorContext {
        OperatorContext::new(spec, n).unwrap()
    }

    fn p(s: &str, n: usize) -> P {
        P::parse(s, Some(n)).unwrap()
    }

    /// Independent evaluation: clears the denominator of `p(x,y)/(x−y)` by comparing
    /// `(x_i − x_{i+1})·C_i f` with the numerator instead of dividing.
    fn c_numerator(spec: FglSpec, n: usize, i: usize, f: &P) -> P {
        let g = f * &spec.kernel_at(n, i, i + 1);
        &g - &g.swap_vars(i).unwrap()
    }

    #[test]
    fn c_examples() {
        let hyp = FglSpec::hyperbolic();
        let c1 = ctx(hyp, 2).apply_c(1, &p("x1", 2)).unwrap();
        assert_eq!(c1, p("1 - m2*x1*x2", 2));
        assert_eq!(&c1 * &p("x1 - x2", 2), c_numerator(hyp, 2, 1, &p("x1", 2)));
        assert_eq!(ctx(FglSpec::additive(), 2).apply_c(1, &p("x1", 2)).unwrap(), p("1", 2));
        let f = p("x1^2*x2", 3);
        let c = ctx(hyp, 3).apply_c(1, &f).unwrap();
        assert_eq!(c, p("x1*x2 - m2*x1^2*x2^2", 3));
        assert_eq!(&c * &p("x1 - x2", 3), c_numerator(hyp, 3, 1, &f));
    }

    #[test]
    fn delta_examples() {
        let hyp = ctx(FglSpec::hyperbolic(), 2);
        assert_eq!(hyp.apply_delta(1, &p("x1", 2)).unwrap(), p("-1 + m1*x1 + m2*x1*x2", 2));
        assert!(hyp.apply_delta(1, &p("x1*x2 + 3*m1", 2)).unwrap().is_zero());
        assert_eq!(ctx(FglSpec::additive(), 2).apply_delta(1, &p("x1", 2)).unwrap(), p("-1", 2));
        assert!(hyp.delta_defect(1, &p("x1", 2)).unwrap().is_zero());
    }

    #[test]
    fn word_examples() {
        let hyp = ctx(FglSpec::hyperbolic(), 2);
        let f = p("x1", 2);
        assert_eq!(hyp.apply_word(&[], &f).unwrap(), f);
        assert_eq!(hyp.apply_word(&[1], &f).unwrap(), p("1 - m2*x1*x2", 2));
        assert!(hyp.apply_word(&[2], &f).is_err());
        assert!(hyp.apply_c(1, &p("x1", 3)).is_err());
        assert!(OperatorContext::new(FglSpec::hyperbolic(), 1).is_err());
    }

    #[test]
    fn word_order_is_innermost_first() {
        let c = ctx(FglSpec::hyperbolic(), 3);
        let f = p("x1^2*x2", 3);
        let inner = c.apply_c(2, &f).unwrap();
        assert_eq!(c.apply_word(&[2, 1], &f).unwrap(), c.apply_c(1, &inner).unwrap());
        assert_ne!(c.apply_word(&[2, 1], &f).unwrap(), c.apply_word(&[1, 2], &f).unwrap());
    }

    #[test]
    fn naive_braid_fails_by_the_twist() {
        let c = ctx(FglSpec::hyperbolic(), 3);
        let f = p("x1^2*x2", 3);
        let defect = c.naive_braid_defect(1, &f).unwrap();
        assert!(!defect.is_zero());
        let twist = &P::mu2(3) * &(&c.apply_c(2, &f).unwrap() - &c.apply_c(1, &f).unwrap());
        assert_eq!(defect, twist);
        // the opposite sign of the twist is not a relation
        let wrong = &defect + &twist;
        assert!(!wrong.is_zero());
    }

    #[test]
    fn seeded_checks() {
        for spec in [FglSpec::additive(), FglSpec::multiplicative(), FglSpec::hyperbolic(), FglSpec::lorentz()] {
            let c = ctx(spec, 3);
            assert!(c.twisted_braid_check::<BigInt>(1, 20, 42).unwrap().passed(), "{spec}");
            assert!(c.delta_identity_check::<BigInt>(2, 20, 7).unwrap().passed(), "{spec}");
        }
        assert!(ctx(FglSpec::multiplicative(), 3).naive_braid_check::<BigInt>(1, 20, 1).unwrap().passed());
        let hyp = ctx(FglSpec::hyperbolic(), 3).naive_braid_check::<BigInt>(1, 20, 1).unwrap();
        assert!(!hyp.passed());
        assert!(ctx(FglSpec::hyperbolic(), 3).twisted_braid_check::<BigInt>(2, 5, 1).is_err());
    }

    #[test]
    fn sampler_is_deterministic() {
        let a = sample_polynomials::<BigInt>(3, 10, 99);
        let b = sample_polynomials::<BigInt>(3, 10, 99);
        assert_eq!(a, b);
        assert_ne!(a, sample_polynomials::<BigInt>(3, 10, 100));
        for f in &a {
            for (m, c) in f.terms() {
                assert!(m.x.degree() <= 4);
                assert!(m.mu.a <= 1 && m.mu.b <= 1);
                assert!(c.magnitude() <= &num_bigint::BigUint::from(3u32));
            }
        }
    }

    #[test]
    fn symmetric_factors_pass_through() {
        let c = ctx(FglSpec::hyperbolic(), 3);
        let sym = p("x1 + x2 + m1*x1*x2", 3);
        for g in sample_polynomials::<BigInt>(3, 10, 5) {
            assert_eq!(c.apply_c(1, &(&sym * &g)).unwrap(), &sym * &c.apply_c(1, &g).unwrap());
        }
    }

    #[test]
    fn machine_integers_agree_with_big_integers() {
        let c = ctx(FglSpec::hyperbolic(), 4);
        let f = P::parse("x1^3*x2^2*x3", Some(4)).unwrap();
        let big = c.apply_word(&[2, 3, 1, 2, 3, 1], &f).unwrap();
        let small = c.apply_word(&[2, 3, 1, 2, 3, 1], &f.map_coeffs(|v| i64::try_from(v).unwrap())).unwrap();
        assert_eq!(small.map_coeffs(|&v| BigInt::from(v)), big);
    }
}
