use schubert_core::combi::Permutation;
use schubert_core::fgl::FglSpec;
use schubert_core::hecke::reduce_mod_support;
use schubert_core::schubert::SchubertContext;
use schubert_core::Integer;

/// Two reduced words of the same permutation differ by an element of
/// `⟨μ2 x_i x_{i+1} : i ∈ supp(w)⟩`, for every `w ∈ S_4`.
#[test]
fn word_differences_lie_in_the_support_ideal() {
    let ctx = SchubertContext::new(FglSpec::hyperbolic(), 4).unwrap();
    let mut failures = Vec::new();
    for w in Permutation::all(4) {
        let words = w.reduced_words().unwrap();
        let first = ctx.schubert_polynomial::<Integer>(&words[0]).unwrap();
        for word in &words[1..] {
            let d = &ctx.schubert_polynomial::<Integer>(word).unwrap() - &first;
            if !reduce_mod_support(&d, &w.support()).is_zero() {
                failures.push(format!("{w}: {} vs {}", words[0], word));
            }
        }
    }
    assert!(failures.is_empty(), "{} differences outside the ideal: {failures:?}", failures.len());
}
