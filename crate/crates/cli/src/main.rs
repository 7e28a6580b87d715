//! `schubert`: compute generalized Schubert classes and run the verification suites.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on usage errors.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use schubert_core::coinv::{expand_in_basis, vandermonde_check, Reducer};
use schubert_core::combi::{parse_parts, BoxPartition, Permutation, ReducedWord};
use schubert_core::ddo::{OperatorContext, SampleReport};
use schubert_core::fgl::{FglKind, FglSpec};
use schubert_core::grass::{chow_k_cross_check, cross_check_gr24, gr24_table, smooth_product, ProductReport, Rectangle};
use schubert_core::hecke::{verify_coeff_corollary, verify_fk_identity, verify_local_identities, verify_ybe, CongruenceCase};
use schubert_core::polycore::{MuExp, Monomial, PolyJson, SeriesCap};
use schubert_core::schubert::{top_degree, SchubertContext};
use schubert_core::{Error, Poly};

#[derive(Parser)]
#[command(name = "schubert", version, about = "Generalized Schubert calculus for hyperbolic formal group laws")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Formal group law: additive, multiplicative, hyperbolic or lorentz.
    #[arg(long, global = true, default_value = "hyperbolic")]
    fgl: FglKind,
    /// Integer value for mu1 (symbolic when omitted).
    #[arg(long, global = true, allow_negative_numbers = true)]
    mu1: Option<i32>,
    /// Integer value for mu2 (symbolic when omitted).
    #[arg(long, global = true, allow_negative_numbers = true)]
    mu2: Option<i32>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the verification sweeps.
    #[arg(long, global = true, env = "SCHUBERT_JOBS")]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a single polynomial.
    #[command(subcommand)]
    Poly(PolyCommand),
    /// Normal form modulo the symmetric ideal of a polynomial read from stdin (JSON or text).
    Reduce {
        #[arg(long)]
        n: usize,
    },
    /// Coefficients of a polynomial read from stdin over a basis of the coinvariant ring.
    Expand {
        #[arg(long)]
        n: usize,
        /// `gr24`, `staircase`, or a JSON file holding an array of polynomials.
        #[arg(long)]
        basis: String,
    },
    /// Product of a smooth Schubert class `b^a` with the class of `lambda` on Gr(k, n).
    Grprod {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// The rectangle as `a,b`.
        #[arg(long)]
        rect: String,
        /// The partition as comma-separated parts.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Print a table of classes.
    #[command(subcommand)]
    Table(TableCommand),
    /// Run a verification suite.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand)]
enum PolyCommand {
    /// The class of a reduced word, innermost operator first.
    Word {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: ReducedWord,
        /// Reduce modulo the symmetric ideal.
        #[arg(long)]
        reduce: bool,
    },
    /// The mu2 = 0 class of a permutation given in one-line notation.
    Grothendieck {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        reduce: bool,
    },
}

#[derive(Subcommand)]
enum TableCommand {
    /// The six classes of Gr(2, 4).
    Gr24,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// The operator identity -Delta_i S = S u_i and the coefficients of S.
    Fk {
        #[arg(long)]
        n: usize,
        /// Treat failures under the supp(w0 w) reading as failures instead of findings.
        #[arg(long)]
        strict_literal: bool,
    },
    /// Classes of reduced words against the mu2 = 0 class of the permutation.
    Differ {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        strict_literal: bool,
    },
    /// Commutation of alpha_i(x_i) and alpha_i(x_{i+1}).
    Ybe {
        #[arg(long)]
        n: usize,
        /// Also check with chi(x_i), chi(x_{i+1}) through this degree.
        #[arg(long)]
        cap: Option<u32>,
    },
    /// The local identities behind the operator identity.
    Local {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        cap: u32,
    },
    /// Twisted and naive braid relations, Delta = kappa - C, and the quadratic relation.
    Braid {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The Vandermonde product against n! times the point class.
    Vandermonde {
        #[arg(long)]
        n: usize,
        /// Defaults to n(n-1)/2 + 2.
        #[arg(long)]
        cap: Option<u32>,
    },
    /// The product rule on Gr(2, 4) against polynomial multiplication.
    Gr24,
    /// The product rule on Gr(k, n) at mu2 = 0.
    Chowk {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let g = &cli.global;
    if let Some(jobs) = g.jobs {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::Usage(format!("cannot start {jobs} workers: {e}")))?;
    }
    let spec = FglSpec::specialized(g.fgl, g.mu1, g.mu2)?;
    let out = Output { json: g.json };
    match cli.command {
        Command::Poly(cmd) => poly(spec, cmd, out),
        Command::Reduce { n } => {
            let f = read_poly(n)?;
            out.poly(&Reducer::new(n).normal_form(&f)?);
            Ok(())
        }
        Command::Expand { n, basis } => expand(spec, n, &basis, out),
        Command::Grprod { k, n, rect, lambda } => {
            let r = parse_rect(k, n, &rect)?;
            let lambda = BoxPartition::new(k, n - k, &parse_parts(&lambda)?)?;
            let product = smooth_product(k, n, r, &lambda)?;
            out.emit(&product, || product.to_string());
            Ok(())
        }
        Command::Table(TableCommand::Gr24) => {
            let rows: Vec<TableRow> = gr24_table::<schubert_core::Integer>(spec)?
                .into_iter()
                .map(|(lambda, word, poly)| TableRow { lambda: lambda.to_string(), word, poly: poly.to_json() })
                .collect();
            out.emit(&rows, || {
                rows.iter().map(|r| format!("({}) [{}] {}", r.lambda.replace(',', ""), r.word, text(&r.poly))).collect::<Vec<_>>().join("\n")
            });
            Ok(())
        }
        Command::Verify(cmd) => verify(spec, cmd, out),
    }
}

#[derive(Clone, Copy)]
struct Output {
    json: bool,
}

impl Output {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
        } else {
            println!("{}", text());
        }
    }

    fn poly(&self, f: &Poly) {
        self.emit(&f.to_json(), || f.to_string());
    }
}

fn text(p: &PolyJson) -> String {
    Poly::from_json(p).expect("emitted by the library").to_string()
}

#[derive(Serialize)]
struct TableRow {
    lambda: String,
    word: ReducedWord,
    poly: PolyJson,
}

#[derive(Serialize)]
struct WordOutput {
    spec: FglSpec,
    n: usize,
    word: ReducedWord,
    reduced: bool,
    poly: PolyJson,
}

fn poly(spec: FglSpec, cmd: PolyCommand, out: Output) -> Outcome {
    let (n, word, reduce, f) = match cmd {
        PolyCommand::Word { n, word, reduce } => {
            let f = SchubertContext::new(spec, n)?.schubert_polynomial::<schubert_core::Integer>(&word)?;
            (n, word, reduce, f)
        }
        PolyCommand::Grothendieck { perm, reduce } => {
            let w = Permutation::new(parse_parts(&perm)?)?;
            let n = w.n();
            let f = SchubertContext::new(spec, n)?.grothendieck_polynomial::<schubert_core::Integer>(&w)?;
            (n, w.canonical_word(), reduce, f)
        }
    };
    let f = if reduce { Reducer::new(n).normal_form(&f)? } else { f };
    let value = WordOutput { spec, n, word, reduced: reduce, poly: f.to_json() };
    out.emit(&value, || f.to_string());
    Ok(())
}

/// A polynomial on stdin, as JSON or as text.
fn read_poly(n: usize) -> Result<Poly, Failure> {
    let mut input = String::new();
    std::io::stdin().read_to_string(&mut input).map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
    let f = parse_poly_input(&input, n)?;
    if f.nvars() != n {
        return Err(Failure::Usage(format!("the polynomial has {} variables, expected {n}", f.nvars())));
    }
    Ok(f)
}

fn parse_poly_input(input: &str, n: usize) -> Result<Poly, Failure> {
    let trimmed = input.trim();
    if trimmed.starts_with('{') {
        let json: PolyJson = serde_json::from_str(trimmed).map_err(|e| Failure::Usage(format!("bad polynomial JSON: {e}")))?;
        Ok(Poly::from_json(&json)?)
    } else {
        Ok(Poly::parse(trimmed, Some(n))?)
    }
}

#[derive(Serialize)]
struct ExpansionRow {
    label: String,
    coeff: PolyJson,
}

fn expand(spec: FglSpec, n: usize, basis: &str, out: Output) -> Outcome {
    let f = read_poly(n)?;
    let (labels, basis): (Vec<String>, Vec<Poly>) = match basis {
        "gr24" => {
            if n != 4 {
                return Err(Failure::Usage("the gr24 basis needs --n 4".into()));
            }
            gr24_table::<schubert_core::Integer>(spec)?.into_iter().map(|(lambda, _, p)| (format!("LG_({})", lambda.to_string().replace(',', "")), p)).unzip()
        }
        "staircase" => Reducer::new(n)
            .staircase_monomials()
            .into_iter()
            .map(|x| {
                let exps: Vec<String> = x.exps().iter().map(u32::to_string).collect();
                let label = format!("x[{}]", exps.join(","));
                (label, Poly::monomial(n, Monomial::new(x, MuExp::ONE), 1.into()))
            })
            .unzip(),
        path => {
            let data = std::fs::read_to_string(PathBuf::from(path))
                .map_err(|e| Failure::Usage(format!("--basis must be gr24, staircase or a readable JSON file ({path}: {e})")))?;
            let polys: Vec<PolyJson> = serde_json::from_str(&data).map_err(|e| Failure::Usage(format!("bad basis JSON: {e}")))?;
            polys.iter().enumerate().map(|(i, p)| Ok((format!("b{i}"), Poly::from_json(p)?))).collect::<Result<Vec<_>, Failure>>()?.into_iter().unzip()
        }
    };
    let coeffs = expand_in_basis(&f, &basis, n)?;
    let rows: Vec<ExpansionRow> =
        labels.into_iter().zip(&coeffs).map(|(label, c)| ExpansionRow { label, coeff: c.to_json() }).collect();
    out.emit(&rows, || {
        rows.iter()
            .filter(|r| !r.coeff.terms.is_empty())
            .map(|r| format!("{}: {}", r.label, text(&r.coeff)))
            .collect::<Vec<_>>()
            .join("\n")
    });
    Ok(())
}

fn parse_rect(k: usize, n: usize, s: &str) -> Result<Rectangle, Failure> {
    match parse_parts(s)?.as_slice() {
        [a, b] => Ok(Rectangle::new(k, n, *a, *b)?),
        _ => Err(Failure::Usage(format!("--rect expects `a,b`, got `{s}`"))),
    }
}

/// Result envelope shared by the verification subcommands.
#[derive(Serialize)]
struct Verdict<T: Serialize> {
    check: &'static str,
    passed: bool,
    findings: Vec<String>,
    report: T,
}

fn finish<T: Serialize>(out: Output, verdict: Verdict<T>, summary: Vec<String>) -> Outcome {
    out.emit(&verdict, || {
        let mut lines = summary;
        lines.extend(verdict.findings.iter().map(|f| format!("finding: {f}")));
        lines.push(format!("{}: {}", verdict.check, if verdict.passed { "PASS" } else { "FAIL" }));
        lines.join("\n")
    });
    if verdict.passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn congruence_summary(cases: &[CongruenceCase], strict: bool) -> (bool, Vec<String>, Vec<String>) {
    let w_fail: Vec<&CongruenceCase> = cases.iter().filter(|c| !c.support_w).collect();
    let w0w_fail: Vec<&CongruenceCase> = cases.iter().filter(|c| !c.support_w0w).collect();
    let mut summary = vec![
        format!("supp(w) reading: {} of {} (w, word) cases fail", w_fail.len(), cases.len()),
        format!("supp(w0 w) reading: {} of {} (w, word) cases fail", w0w_fail.len(), cases.len()),
    ];
    summary.extend(w_fail.iter().map(|c| format!("  supp(w) failure: w={} word={}", c.w, c.word)));
    let findings = w0w_fail
        .iter()
        .filter(|c| c.support_w)
        .map(|c| format!("w={} word={} passes under supp(w) but not under supp(w0 w)", c.w, c.word))
        .collect();
    let passed = w_fail.is_empty() && (!strict || w0w_fail.is_empty());
    (passed, summary, findings)
}

fn verify(spec: FglSpec, cmd: VerifyCommand, out: Output) -> Outcome {
    match cmd {
        VerifyCommand::Fk { n, strict_literal } => {
            let r = verify_fk_identity(spec, n)?;
            let (coeff_ok, coeff_summary, findings) = congruence_summary(&r.coefficients, strict_literal);
            let mut summary: Vec<String> = r
                .identity
                .iter()
                .map(|c| format!("-Delta_{} S = S u_{}: {}", c.i, c.i, if c.passed { "pass" } else { "FAIL" }))
                .collect();
            summary.extend(coeff_summary);
            let passed = r.identity_passed() && coeff_ok;
            finish(out, Verdict { check: "fk", passed, findings, report: r }, summary)
        }
        VerifyCommand::Differ { n, strict_literal } => {
            let r = verify_coeff_corollary(spec, n)?;
            let (passed, summary, findings) = congruence_summary(&r.cases, strict_literal);
            finish(out, Verdict { check: "differ", passed, findings, report: r }, summary)
        }
        VerifyCommand::Ybe { n, cap } => {
            let r = verify_ybe(spec, n, cap.map(SeriesCap))?;
            let summary = r
                .cases
                .iter()
                .map(|c| format!("i={}{}: {}", c.i, if c.inverted { " (chi)" } else { "" }, if c.passed { "pass" } else { "FAIL" }))
                .collect();
            finish(out, Verdict { check: "ybe", passed: r.passed(), findings: vec![], report: r }, summary)
        }
        VerifyCommand::Local { n, cap } => {
            let r = verify_local_identities(spec, n, SeriesCap(cap))?;
            let summary =
                r.cases.iter().map(|c| format!("item {} i={}: {}", c.item, c.i, if c.passed { "pass" } else { "FAIL" })).collect();
            finish(out, Verdict { check: "local", passed: r.passed(), findings: vec![], report: r }, summary)
        }
        VerifyCommand::Braid { n, samples, seed } => braid(spec, n, samples, seed, out),
        VerifyCommand::Vandermonde { n, cap } => {
            let cap = cap.unwrap_or(top_degree(n) as u32 + 2);
            let r = vandermonde_check(spec, n, SeriesCap(cap))?;
            let summary = vec![
                format!("(a) product of differences = n! LG_1 mod S: {}", if r.part_a { "pass" } else { "FAIL" }),
                format!("(b) product of F(x_i, chi(x_j)) = product of differences mod S: {}", if r.part_b { "pass" } else { "FAIL" }),
            ];
            finish(out, Verdict { check: "vandermonde", passed: r.passed(), findings: vec![], report: r }, summary)
        }
        VerifyCommand::Gr24 => {
            let r = cross_check_gr24(spec)?;
            product_verdict("gr24", r, out)
        }
        VerifyCommand::Chowk { k, n } => {
            let r = chow_k_cross_check(k, n, spec)?;
            product_verdict("chowk", r, out)
        }
    }
}

fn product_verdict(check: &'static str, r: ProductReport, out: Output) -> Outcome {
    let mut summary = vec![format!("Gr({},{}): {} of {} cases agree", r.k, r.n, r.cases.len() - r.failures(), r.cases.len())];
    summary.extend(
        r.cases.iter().filter(|c| !c.passed).map(|c| format!("  mismatch: rect {} lambda {} expected {}", c.rect, c.lambda, c.expected)),
    );
    finish(out, Verdict { check, passed: r.passed(), findings: vec![], report: r }, summary)
}

#[derive(Serialize)]
struct BraidReport {
    twisted: Vec<SampleReport>,
    naive: Vec<SampleReport>,
    delta: Vec<SampleReport>,
    quadratic: Vec<SampleReport>,
}

fn braid(spec: FglSpec, n: usize, samples: usize, seed: u64, out: Output) -> Outcome {
    let ops = OperatorContext::new(spec, n)?;
    let pairs = 1..n.saturating_sub(1);
    let twisted = pairs.clone().map(|i| ops.twisted_braid_check::<schubert_core::Integer>(i, samples, seed)).collect::<Result<Vec<_>, _>>()?;
    let naive = pairs.map(|i| ops.naive_braid_check::<schubert_core::Integer>(i, samples, seed)).collect::<Result<Vec<_>, _>>()?;
    let delta = (1..n).map(|i| ops.delta_identity_check::<schubert_core::Integer>(i, samples, seed)).collect::<Result<Vec<_>, _>>()?;
    let quadratic = (1..n).map(|i| ops.quadratic_check::<schubert_core::Integer>(i, samples, seed)).collect::<Result<Vec<_>, _>>()?;

    let status = |r: &SampleReport| format!("{} i={}: {}/{} samples pass", r.check, r.index, r.samples - r.failures.len(), r.samples);
    let mut summary: Vec<String> = twisted.iter().chain(&naive).chain(&delta).map(status).collect();
    let mut findings = Vec::new();
    let naive_expected = spec.mu2_vanishes();
    for r in &naive {
        if r.passed() != naive_expected {
            summary.push(format!("naive braid i={} {} although mu2 {}", r.index, if r.passed() { "holds" } else { "fails" }, if naive_expected { "= 0" } else { "!= 0" }));
        } else if let Some(f) = r.failures.first() {
            findings.push(format!("naive braid i={} fails, e.g. on {}", r.index, text(&f.input)));
        }
    }
    for r in &quadratic {
        findings.push(format!("C_i^2 = kappa C_i for i={}: {}/{} samples", r.index, r.samples - r.failures.len(), r.samples));
    }
    let passed = twisted.iter().all(SampleReport::passed)
        && delta.iter().all(SampleReport::passed)
        && naive.iter().all(|r| r.passed() == naive_expected);
    let report = BraidReport { twisted, naive, delta, quadratic };
    finish(out, Verdict { check: "braid", passed, findings, report }, summary)
}
