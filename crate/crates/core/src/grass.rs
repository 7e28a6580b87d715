//! Grassmannians: the product of a smooth Schubert class with a Bott-Samelson class, and its
//! polynomial cross-checks.
//!
//! A smooth Schubert variety of `Gr(k, n)` is `X_{b^a} ≅ Gr(a, a+b)`. For `λ` in the
//! `k × (n−k)` box, `[X_λ]·[X_{b^a}] = [X_{(λ∨)^{∨_Z}}]` when `λ ≥ (b^a)∨` and `0` otherwise,
//! where `∨` is the complement in the big box and `∨_Z` the complement in the `a × b` box.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::coinv::{expand_in_basis, Reducer};
use crate::combi::{BoxPartition, Permutation, ReducedWord};
use crate::error::{Error, Result};
use crate::fgl::FglSpec;
use crate::polycore::{MuExp, PolyJson, Polynomial};
use crate::scalar::Coeff;
use crate::schubert::{smooth_class_representative, smooth_monomial, SchubertContext, SmoothFamily};

/// Largest `k(n−k)` accepted by [`chow_k_cross_check`].
pub const MAX_CROSS_CHECK_DIMENSION: usize = 9;

fn check_grassmannian(k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParameter(format!("need 1 <= k <= n-1, got k={k}, n={n}")));
    }
    Ok(())
}

/// The partition `b^a`, with `1 ≤ a ≤ k` and `1 ≤ b ≤ n−k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Rectangle {
    pub a: usize,
    pub b: usize,
}

impl Rectangle {
    pub fn new(k: usize, n: usize, a: usize, b: usize) -> Result<Self> {
        check_grassmannian(k, n)?;
        if !(1..=k).contains(&a) || !(1..=n - k).contains(&b) {
            return Err(Error::OutsideBox { parts: vec![b; a], rows: k, cols: n - k });
        }
        Ok(Self { a, b })
    }

    /// Every rectangle for `Gr(k, n)`, ordered by `(a, b)`.
    pub fn all(k: usize, n: usize) -> Result<Vec<Self>> {
        check_grassmannian(k, n)?;
        Ok((1..=k).flat_map(|a| (1..=n - k).map(move |b| Self { a, b })).collect())
    }

    /// `b^a` in the `k × (n−k)` box.
    pub fn partition(&self, k: usize, n: usize) -> Result<BoxPartition> {
        Self::new(k, n, self.a, self.b)?;
        BoxPartition::new(k, n - k, &vec![self.b; self.a])
    }

    /// `k(n−k) − ab`.
    pub fn codimension(&self, k: usize, n: usize) -> usize {
        k * (n - k) - self.a * self.b
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.a, self.b)
    }
}

/// `(b^a)∨`: `k−a` parts equal to `n−k`, then `a` parts equal to `n−k−b`.
pub fn rect_dual(r: Rectangle, k: usize, n: usize) -> Result<BoxPartition> {
    Rectangle::new(k, n, r.a, r.b)?;
    let parts: Vec<usize> = std::iter::repeat(n - k).take(k - r.a).chain(std::iter::repeat(n - k - r.b).take(r.a)).collect();
    BoxPartition::new(k, n - k, &parts)
}

/// A class or zero; the empty partition is the point class, not zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SmoothProduct {
    Zero,
    Class(BoxPartition),
}

impl fmt::Display for SmoothProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmoothProduct::Zero => f.write_str("0"),
            SmoothProduct::Class(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrassContext {
    k: usize,
    n: usize,
    spec: FglSpec,
}

impl GrassContext {
    pub fn new(k: usize, n: usize, spec: FglSpec) -> Result<Self> {
        check_grassmannian(k, n)?;
        Ok(Self { k, n, spec })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn spec(&self) -> FglSpec {
        self.spec
    }

    pub fn rectangle(&self, a: usize, b: usize) -> Result<Rectangle> {
        Rectangle::new(self.k, self.n, a, b)
    }

    /// All partitions in the `k × (n−k)` box.
    pub fn partitions(&self) -> Vec<BoxPartition> {
        BoxPartition::all(self.k, self.n - self.k)
    }

    pub fn smooth_product(&self, r: Rectangle, lambda: &BoxPartition) -> Result<SmoothProduct> {
        smooth_product(self.k, self.n, r, lambda)
    }
}

/// `[X_λ]·[X_{b^a}]` by the combinatorial rule.
pub fn smooth_product(k: usize, n: usize, r: Rectangle, lambda: &BoxPartition) -> Result<SmoothProduct> {
    let dual = rect_dual(r, k, n)?;
    if lambda.rows() != k || lambda.cols() != n - k {
        return Err(Error::OutsideBox { parts: lambda.parts().to_vec(), rows: k, cols: n - k });
    }
    if !dual.leq(lambda) {
        return Ok(SmoothProduct::Zero);
    }
    let inner = lambda.dual().dual_in(r.a, r.b)?;
    Ok(SmoothProduct::Class(inner.rebox(k, n - k)?))
}

/// The parts of a partition of the `2 × 2` box, as `(λ_1, λ_2)`.
fn gr24_parts(lambda: &BoxPartition) -> Result<(usize, usize)> {
    if lambda.rows() != 2 || lambda.cols() != 2 {
        return Err(Error::OutsideBox { parts: lambda.parts().to_vec(), rows: 2, cols: 2 });
    }
    Ok((lambda.part(1), lambda.part(2)))
}

/// The word, innermost operator first, whose class pulls back `[X̃_λ]` from `Gr(2, 4)`.
pub fn gr24_word(lambda: &BoxPartition) -> Result<ReducedWord> {
    let letters: &[usize] = match gr24_parts(lambda)? {
        (0, 0) => &[3, 1],
        (1, 0) => &[2, 3, 1],
        (2, 0) => &[3, 2, 3, 1],
        (1, 1) => &[1, 2, 3, 1],
        (2, 1) => &[3, 1, 2, 3, 1],
        (2, 2) => &[2, 3, 1, 2, 3, 1],
        _ => unreachable!("partitions of the 2x2 box"),
    };
    Ok(ReducedWord::new(letters.to_vec()))
}

/// The six classes `LG_λ` of `Gr(2, 4)` in normal form, in the order of [`BoxPartition::all`].
pub fn gr24_table<C: Coeff>(spec: FglSpec) -> Result<Vec<(BoxPartition, ReducedWord, Polynomial<C>)>> {
    let ctx = SchubertContext::new(spec, 4)?;
    let reducer = Reducer::new(4);
    BoxPartition::all(2, 2)
        .into_iter()
        .map(|lambda| {
            let word = gr24_word(&lambda)?;
            let lg = reducer.normal_form(&ctx.schubert_polynomial(&word)?)?;
            Ok((lambda, word, lg))
        })
        .collect()
}

fn gr24_rectangle(r: Rectangle) -> Result<Rectangle> {
    Rectangle::new(2, 4, r.a, r.b)
}

/// Representative of `[X_{b^a}]` on `Gr(2, 4)` in the normalization of the Schubert classes.
///
/// `(1,2)` is `χ(x_3)χ(x_4)` (see [`smooth_class_representative`]), `(2,1)` is `x_1x_2`, `(2,2)` is
/// `1` and the line `(1,1)` is `x_1x_2(x_1+x_2) − μ1 x_1²x_2²`.
pub fn gr24_smooth_poly<C: Coeff>(spec: FglSpec, r: Rectangle) -> Result<Polynomial<C>> {
    let r = gr24_rectangle(r)?;
    match (r.a, r.b) {
        (1, 1) => Ok(line_class(spec)),
        (a, 2) => smooth_class_representative(spec, 2, 4, SmoothFamily::Rows(a)),
        (2, b) => smooth_class_representative(spec, 2, 4, SmoothFamily::Cols(b)),
        _ => unreachable!("rectangles of the 2x2 box"),
    }
}

/// As [`gr24_smooth_poly`] but with the monomial `x_3x_4` for `(1,2)`.
pub fn gr24_smooth_poly_literal<C: Coeff>(spec: FglSpec, r: Rectangle) -> Result<Polynomial<C>> {
    let r = gr24_rectangle(r)?;
    match (r.a, r.b) {
        (1, 1) => Ok(line_class(spec)),
        (a, 2) => smooth_monomial(2, 4, SmoothFamily::Rows(a)),
        (2, b) => smooth_monomial(2, 4, SmoothFamily::Cols(b)),
        _ => unreachable!("rectangles of the 2x2 box"),
    }
}

fn line_class<C: Coeff>(spec: FglSpec) -> Polynomial<C> {
    let x = |e: Vec<u32>| Polynomial::term(e, MuExp::ONE, C::one());
    let sum = &x(vec![2, 1, 0, 0]) + &x(vec![1, 2, 0, 0]);
    &sum - &(&spec.mu1_poly::<C>(4) * &x(vec![2, 2, 0, 0]))
}

/// One `(rectangle, λ)` comparison.
#[derive(Debug, Clone, Serialize)]
pub struct ProductCase {
    pub rect: Rectangle,
    pub lambda: BoxPartition,
    /// The combinatorial rule.
    pub expected: SmoothProduct,
    /// Coefficients of the polynomial product over the basis, one per partition.
    pub expansion: Vec<ExpansionEntry>,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpansionEntry {
    pub class: BoxPartition,
    pub coeff: PolyJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProductReport {
    pub spec: FglSpec,
    pub k: usize,
    pub n: usize,
    pub cases: Vec<ProductCase>,
}

impl ProductReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| !c.passed).count()
    }
}

/// Whether the expansion is exactly the expected class with coefficient 1, or zero.
fn matches(expected: &SmoothProduct, classes: &[BoxPartition], coeffs: &[Polynomial<num_bigint::BigInt>]) -> bool {
    classes.iter().zip(coeffs).all(|(class, c)| match expected {
        SmoothProduct::Class(p) if p == class => *c == Polynomial::one(c.nvars()),
        _ => c.is_zero(),
    })
}

struct ProductSetup<'a> {
    k: usize,
    n: usize,
    classes: &'a [BoxPartition],
    basis: &'a [Polynomial<num_bigint::BigInt>],
    reducer: &'a Reducer,
}

impl ProductSetup<'_> {
    fn case(
        &self,
        rect: Rectangle,
        rect_poly: &Polynomial<num_bigint::BigInt>,
        lambda_index: usize,
    ) -> Result<ProductCase> {
        let lambda = self.classes[lambda_index].clone();
        let expected = smooth_product(self.k, self.n, rect, &lambda)?;
        let product = self.reducer.normal_form(&(rect_poly * &self.basis[lambda_index]))?;
        let coeffs = expand_in_basis(&product, self.basis, self.n)?;
        let passed = matches(&expected, self.classes, &coeffs);
        let expansion = self
            .classes
            .iter()
            .zip(&coeffs)
            .map(|(class, c)| ExpansionEntry { class: class.clone(), coeff: c.to_json() })
            .collect();
        Ok(ProductCase { rect, lambda, expected, expansion, passed })
    }

    fn run(&self, rects: &[(Rectangle, Polynomial<num_bigint::BigInt>)]) -> Result<Vec<ProductCase>> {
        let pairs: Vec<(usize, usize)> =
            (0..rects.len()).flat_map(|r| (0..self.classes.len()).map(move |l| (r, l))).collect();
        // collect keeps the order of `pairs`, so the report does not depend on scheduling
        pairs.into_par_iter().map(|(r, l)| self.case(rects[r].0, &rects[r].1, l)).collect()
    }
}

fn cross_check_gr24_by(
    spec: FglSpec,
    rep: impl Fn(FglSpec, Rectangle) -> Result<Polynomial<num_bigint::BigInt>>,
) -> Result<ProductReport> {
    let reducer = Reducer::new(4);
    let table = gr24_table(spec)?;
    let classes: Vec<BoxPartition> = table.iter().map(|(l, _, _)| l.clone()).collect();
    let basis: Vec<_> = table.into_iter().map(|(_, _, p)| p).collect();
    let rects = Rectangle::all(2, 4)?.into_iter().map(|r| Ok((r, rep(spec, r)?))).collect::<Result<Vec<_>>>()?;
    let setup = ProductSetup { k: 2, n: 4, classes: &classes, basis: &basis, reducer: &reducer };
    Ok(ProductReport { spec, k: 2, n: 4, cases: setup.run(&rects)? })
}

/// All 24 products on `Gr(2, 4)`: the rule against the expansion of the normal form of
/// `gr24_smooth_poly(r) · LG_λ` over the six classes.
pub fn cross_check_gr24(spec: FglSpec) -> Result<ProductReport> {
    cross_check_gr24_by(spec, gr24_smooth_poly)
}

/// [`cross_check_gr24`] with [`gr24_smooth_poly_literal`].
pub fn cross_check_gr24_literal(spec: FglSpec) -> Result<ProductReport> {
    cross_check_gr24_by(spec, gr24_smooth_poly_literal)
}

/// The permutation `w_λ · w_{0,P}` whose class pulls back `[X_λ]` to the flag variety, with
/// `w_{0,P}` the longest element of `S_k × S_{n−k}`.
pub fn grassmannian_class_permutation(lambda: &BoxPartition) -> Result<Permutation> {
    let (k, n) = (lambda.rows(), lambda.rows() + lambda.cols());
    let mut word = lambda.to_perm().canonical_word().letters().to_vec();
    word.extend(longest_parabolic_word(k, n));
    let w = Permutation::from_word(n, &word)?;
    debug_assert_eq!(w.length(), word.len());
    Ok(w)
}

fn longest_parabolic_word(k: usize, n: usize) -> Vec<usize> {
    let block = |lo: usize, hi: usize| -> Vec<usize> {
        // longest element of the permutations of lo..=hi
        (lo..hi).flat_map(|top| (lo..=top).rev()).collect()
    };
    let mut word = block(1, k);
    word.extend(block(k + 1, n));
    word
}

/// Every `(rectangle, λ)` on `Gr(k, n)` at `μ2 = 0`, where classes are independent of the word
/// and every class is `KLG` of [`grassmannian_class_permutation`].
pub fn chow_k_cross_check(k: usize, n: usize, spec: FglSpec) -> Result<ProductReport> {
    check_grassmannian(k, n)?;
    if !spec.mu2_vanishes() {
        return Err(Error::Specialization("the cross-check needs mu2 = 0".into()));
    }
    if k * (n - k) > MAX_CROSS_CHECK_DIMENSION {
        return Err(Error::Capacity(format!("cross-check supports k(n-k) <= {MAX_CROSS_CHECK_DIMENSION}")));
    }
    let ctx = SchubertContext::new(spec, n)?;
    let reducer = Reducer::new(n);
    let classes = BoxPartition::all(k, n - k);
    let basis = classes
        .par_iter()
        .map(|lambda| reducer.normal_form(&ctx.grothendieck_polynomial(&grassmannian_class_permutation(lambda)?)?))
        .collect::<Result<Vec<_>>>()?;
    let rects = Rectangle::all(k, n)?
        .into_iter()
        .map(|r| {
            let p = r.partition(k, n)?;
            let i = classes.iter().position(|c| *c == p).expect("rectangle lies in the box");
            Ok((r, basis[i].clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    let setup = ProductSetup { k, n, classes: &classes, basis: &basis, reducer: &reducer };
    Ok(ProductReport { spec, k, n, cases: setup.run(&rects)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = Polynomial<BigInt>;

    fn part(k: usize, n: usize, parts: &[usize]) -> BoxPartition {
        BoxPartition::new(k, n - k, parts).unwrap()
    }

    fn rect(a: usize, b: usize) -> Rectangle {
        Rectangle::new(2, 4, a, b).unwrap()
    }

    #[test]
    fn rect_dual_examples() {
        assert_eq!(rect_dual(rect(1, 1), 2, 4).unwrap(), part(2, 4, &[2, 1]));
        assert_eq!(rect_dual(rect(2, 2), 2, 4).unwrap(), part(2, 4, &[]));
        assert_eq!(rect_dual(rect(1, 2), 2, 4).unwrap(), part(2, 4, &[2]));
        assert!(Rectangle::new(2, 4, 3, 1).is_err());
        assert!(Rectangle::new(2, 4, 1, 0).is_err());
    }

    #[test]
    fn rect_dual_is_the_box_complement() {
        for (k, n) in [(2, 4), (2, 5), (3, 6), (1, 4)] {
            for r in Rectangle::all(k, n).unwrap() {
                assert_eq!(rect_dual(r, k, n).unwrap(), r.partition(k, n).unwrap().dual());
            }
        }
    }

    #[test]
    fn product_examples() {
        for lambda in BoxPartition::all(2, 2) {
            assert_eq!(smooth_product(2, 4, rect(2, 2), &lambda).unwrap(), SmoothProduct::Class(lambda.clone()));
        }
        assert_eq!(
            smooth_product(2, 4, rect(1, 1), &part(2, 4, &[2, 1])).unwrap(),
            SmoothProduct::Class(part(2, 4, &[]))
        );
        assert_eq!(smooth_product(2, 4, rect(1, 1), &part(2, 4, &[2])).unwrap(), SmoothProduct::Zero);
        assert_eq!(
            smooth_product(2, 4, rect(1, 2), &part(2, 4, &[2, 1])).unwrap(),
            SmoothProduct::Class(part(2, 4, &[1]))
        );
        assert!(smooth_product(2, 4, rect(1, 1), &part(2, 5, &[1])).is_err());
        assert_eq!(SmoothProduct::Zero.to_string(), "0");
        assert_eq!(SmoothProduct::Class(part(2, 4, &[])).to_string(), "0,0");
    }

    #[test]
    fn product_weights() {
        for (k, n) in [(2, 4), (2, 5), (3, 6), (1, 3)] {
            for r in Rectangle::all(k, n).unwrap() {
                for lambda in BoxPartition::all(k, n - k) {
                    match smooth_product(k, n, r, &lambda).unwrap() {
                        SmoothProduct::Class(p) => {
                            assert_eq!(p.weight() + r.codimension(k, n), lambda.weight());
                            assert!(rect_dual(r, k, n).unwrap().leq(&lambda));
                        }
                        SmoothProduct::Zero => assert!(!rect_dual(r, k, n).unwrap().leq(&lambda)),
                    }
                }
            }
        }
    }

    #[test]
    fn words() {
        assert_eq!(gr24_word(&part(2, 4, &[])).unwrap().letters(), &[3, 1]);
        assert_eq!(gr24_word(&part(2, 4, &[2, 1])).unwrap().letters(), &[3, 1, 2, 3, 1]);
        assert_eq!(gr24_word(&part(2, 4, &[2, 2])).unwrap().len(), 6);
        assert!(gr24_word(&part(2, 5, &[1])).is_err());
        for lambda in BoxPartition::all(2, 2) {
            let word = gr24_word(&lambda).unwrap();
            assert!(word.is_reduced(4).unwrap());
            assert_eq!(word.len(), 2 + lambda.weight());
        }
    }

    #[test]
    fn words_follow_the_grassmannian_permutations() {
        for lambda in BoxPartition::all(2, 2) {
            let w = gr24_word(&lambda).unwrap().permutation(4).unwrap();
            assert_eq!(w, grassmannian_class_permutation(&lambda).unwrap());
        }
        assert_eq!(longest_parabolic_word(2, 4), vec![1, 3]);
        assert_eq!(longest_parabolic_word(3, 5), vec![1, 2, 1, 4]);
    }

    #[test]
    fn smooth_polys() {
        let hyp = FglSpec::hyperbolic();
        let p = |s: &str| P::parse(s, Some(4)).unwrap();
        assert_eq!(gr24_smooth_poly::<BigInt>(hyp, rect(2, 1)).unwrap(), p("x1*x2"));
        assert_eq!(gr24_smooth_poly::<BigInt>(hyp, rect(2, 2)).unwrap(), p("1"));
        assert_eq!(gr24_smooth_poly::<BigInt>(hyp, rect(1, 1)).unwrap(), p("x1^2*x2 + x1*x2^2 - m1*x1^2*x2^2"));
        assert_eq!(gr24_smooth_poly_literal::<BigInt>(hyp, rect(1, 2)).unwrap(), p("x3*x4"));
        let rows = gr24_smooth_poly::<BigInt>(FglSpec::additive(), rect(1, 2)).unwrap();
        assert_eq!(rows, p("x3*x4"));
        let line = gr24_smooth_poly::<BigInt>(FglSpec::additive(), rect(1, 1)).unwrap();
        assert_eq!(line, p("x1^2*x2 + x1*x2^2"));
    }

    #[test]
    fn line_class_is_the_resolution_class() {
        let table = gr24_table::<BigInt>(FglSpec::hyperbolic()).unwrap();
        let line = Reducer::new(4).normal_form(&gr24_smooth_poly::<BigInt>(FglSpec::hyperbolic(), rect(1, 1)).unwrap());
        assert_eq!(line.unwrap(), table[1].2);
    }

    #[test]
    fn cross_checks() {
        let r = cross_check_gr24(FglSpec::hyperbolic()).unwrap();
        assert_eq!(r.cases.len(), 24);
        assert!(r.passed(), "{} failures", r.failures());
        let literal = cross_check_gr24_literal(FglSpec::hyperbolic()).unwrap();
        assert!(!literal.passed());
        for spec in [FglSpec::additive(), FglSpec::multiplicative()] {
            assert!(chow_k_cross_check(2, 4, spec).unwrap().passed());
            assert!(chow_k_cross_check(1, 3, spec).unwrap().passed());
        }
        assert!(chow_k_cross_check(2, 4, FglSpec::hyperbolic()).is_err());
        assert!(chow_k_cross_check(2, 7, FglSpec::additive()).is_err());
        assert!(chow_k_cross_check(1, 10, FglSpec::additive()).is_ok());
    }
}
