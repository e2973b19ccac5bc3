//! Command-line front end. Every command renders its whole output into a
//! string first; `main` prints it in one write.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or size error.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{format_rational, parse_rational, BigRational, LaurentPoly};
use crate::error::{Error, Result};
use crate::lgv::{
    self, a_ij_closed_form, det_formula, family_of_catalan_path, matrix_a, TwistedDigraph,
};
use crate::markov::{self, check_rate, ChainSpec, MARKOV_MAX_N};
use crate::partition::{z_n_derrida, z_n_enumeration_limited, Z_ENUMERATION_MAX_N};
use crate::paths::{enumerate_paths, CatalanPath};
use crate::tableau::{enumerate_tableaux, CatalanTableau, Shape, StateWord};

/// Default size limit for the exhaustive `verify` suite.
pub const VERIFY_MAX_N: usize = 8;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "tasep",
    version,
    about = "Exact TASEP steady-state probabilities from Catalan tableaux"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum ZnMethod {
    #[default]
    Derrida,
    Enumerate,
    Both,
}

/// A rate pair `a,b` with both values in `(0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalPoint {
    pub alpha: BigRational,
    pub beta: BigRational,
}

impl EvalPoint {
    pub fn new(alpha: BigRational, beta: BigRational) -> Result<Self> {
        check_rate("alpha", &alpha)?;
        check_rate("beta", &beta)?;
        Ok(Self { alpha, beta })
    }

    fn label(&self) -> String {
        format!(
            "a={} b={}",
            format_rational(&self.alpha),
            format_rational(&self.beta)
        )
    }
}

impl FromStr for EvalPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| Error::InvalidArgument(format!("expected a,b but got {s:?}")))?;
        Self::new(parse_rational(a)?, parse_rational(b)?)
    }
}

fn parse_positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stationary probability of a state: P(tau), Z_n and their ratio.
    Prob {
        word: StateWord,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        /// Evaluate at rates `a,b` given as `p/q` literals.
        #[arg(long)]
        eval: Option<EvalPoint>,
    },
    /// Run every cross-check for all words of length 1..=n.
    Verify {
        #[arg(long = "n")]
        n: usize,
        /// Rate pair for the Markov-chain comparison; repeatable.
        #[arg(long)]
        eval: Vec<EvalPoint>,
        /// Lift the enumeration limits (the Markov solve limit stays).
        #[arg(long)]
        unsafe_n: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Count, weigh and optionally list the tableaux of a type.
    Tableaux {
        word: StateWord,
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// The determinant matrix A of a state and its determinant.
    Matrix {
        word: StateWord,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// The partition function Z_n.
    Zn {
        #[arg(value_parser = parse_positive)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        method: ZnMethod,
        #[arg(long)]
        unsafe_n: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Catalan paths of a state's shape and their images under the bijection.
    Paths {
        word: StateWord,
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

/// Rendered output plus the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            exit_code: EXIT_OK,
        }
    }

    fn json(value: Value) -> Self {
        Self::ok(format!(
            "{}\n",
            serde_json::to_string_pretty(&value).expect("JSON values serialize")
        ))
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Prob { word, format, eval } => cmd_prob(word, *format, eval.as_ref()),
        Command::Verify {
            n,
            eval,
            unsafe_n,
            format,
        } => cmd_verify(*n, eval, *unsafe_n, *format),
        Command::Tableaux { word, list, format } => cmd_tableaux(word, *list, *format),
        Command::Matrix { word, format } => cmd_matrix(word, *format),
        Command::Zn {
            n,
            method,
            unsafe_n,
            format,
        } => cmd_zn(*n, *method, *unsafe_n, *format),
        Command::Paths { word, list, format } => cmd_paths(word, *list, *format),
    }
}

fn poly_json(p: &LaurentPoly) -> Value {
    json!({ "text": p.to_string(), "terms": p.to_json() })
}

fn shape_text(shape: &Shape) -> String {
    let parts: Vec<String> = shape.parts().iter().map(|p| p.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn cmd_prob(
    word: &StateWord,
    format: OutputFormat,
    eval: Option<&EvalPoint>,
) -> Result<Outcome> {
    let numerator = det_formula(word);
    let denominator = z_n_derrida(word.len())?;
    let value = eval
        .map(|pt| -> Result<BigRational> {
            Ok(numerator.eval(&pt.alpha, &pt.beta)? / denominator.eval(&pt.alpha, &pt.beta)?)
        })
        .transpose()?;

    if format == OutputFormat::Json {
        let eval_json = match (eval, &value) {
            (Some(pt), Some(v)) => json!({
                "alpha": format_rational(&pt.alpha),
                "beta": format_rational(&pt.beta),
                "value": format_rational(v),
            }),
            _ => Value::Null,
        };
        return Ok(Outcome::json(json!({
            "word": word.to_string(),
            "n": word.len(),
            "k": word.ones(),
            "numerator": poly_json(&numerator),
            "denominator": poly_json(&denominator),
            "eval": eval_json,
        })));
    }

    let mut out = String::new();
    writeln!(out, "tau: {word}").unwrap();
    writeln!(out, "numerator P(tau): {numerator}").unwrap();
    writeln!(out, "denominator Z_{}: {denominator}", word.len()).unwrap();
    if let (Some(pt), Some(v)) = (eval, &value) {
        writeln!(out, "Pr(tau) at {}: {}", pt.label(), format_rational(v)).unwrap();
    }
    Ok(Outcome::ok(out))
}

pub fn cmd_tableaux(word: &StateWord, list: bool, format: OutputFormat) -> Result<Outcome> {
    let shape = Shape::of_word(word);
    let tableaux = enumerate_tableaux(word);
    let total: LaurentPoly = tableaux.iter().map(CatalanTableau::weight).sum();

    if format == OutputFormat::Json {
        let mut v = json!({
            "word": word.to_string(),
            "shape": shape.parts(),
            "count": tableaux.len(),
            "total_weight": poly_json(&total),
        });
        if list {
            v["tableaux"] = tableaux
                .iter()
                .map(|t| {
                    let mut tj = t.to_json();
                    tj["weight"] = poly_json(&t.weight());
                    tj
                })
                .collect();
        }
        return Ok(Outcome::json(v));
    }

    let mut out = String::new();
    writeln!(out, "type: {word}").unwrap();
    writeln!(out, "shape: {}", shape_text(&shape)).unwrap();
    writeln!(out, "count: {}", tableaux.len()).unwrap();
    writeln!(out, "total weight: {total}").unwrap();
    if list {
        for (i, t) in tableaux.iter().enumerate() {
            writeln!(out, "\n#{} weight {}", i + 1, t.weight()).unwrap();
            writeln!(out, "{t}").unwrap();
        }
    }
    Ok(Outcome::ok(out))
}

pub fn cmd_matrix(word: &StateWord, format: OutputFormat) -> Result<Outcome> {
    let shape = Shape::of_word(word);
    let a = matrix_a(&shape);
    let det = a.determinant();

    if format == OutputFormat::Json {
        return Ok(Outcome::json(json!({
            "word": word.to_string(),
            "shape": shape.parts(),
            "k": a.dim(),
            "matrix": a.to_json(),
            "determinant": poly_json(&det),
        })));
    }

    let mut out = String::new();
    writeln!(out, "type: {word}").unwrap();
    writeln!(out, "shape: {}", shape_text(&shape)).unwrap();
    if a.dim() == 0 {
        writeln!(out, "A: empty matrix (k = 0)").unwrap();
    } else {
        writeln!(out, "A ({0}x{0}):", a.dim()).unwrap();
        writeln!(out, "{a}").unwrap();
    }
    writeln!(out, "det A: {det}").unwrap();
    Ok(Outcome::ok(out))
}

pub fn cmd_zn(n: usize, method: ZnMethod, unsafe_n: bool, format: OutputFormat) -> Result<Outcome> {
    let limit = if unsafe_n {
        usize::MAX
    } else {
        Z_ENUMERATION_MAX_N
    };
    let derrida = match method {
        ZnMethod::Derrida | ZnMethod::Both => Some(z_n_derrida(n)?),
        ZnMethod::Enumerate => None,
    };
    let enumerated = match method {
        ZnMethod::Enumerate | ZnMethod::Both => Some(z_n_enumeration_limited(n, limit)?),
        ZnMethod::Derrida => None,
    };
    let verdict = match (&derrida, &enumerated) {
        (Some(d), Some(e)) => Some(d == e),
        _ => None,
    };
    let exit_code = if verdict == Some(false) {
        EXIT_FAILED
    } else {
        EXIT_OK
    };

    let stdout = if format == OutputFormat::Json {
        let v = json!({
            "n": n,
            "derrida": derrida.as_ref().map(poly_json),
            "enumerate": enumerated.as_ref().map(poly_json),
            "equal": verdict,
        });
        format!(
            "{}\n",
            serde_json::to_string_pretty(&v).expect("JSON values serialize")
        )
    } else {
        let mut out = String::new();
        match (&derrida, &enumerated) {
            (Some(d), Some(e)) => {
                writeln!(out, "Z_{n} (derrida): {d}").unwrap();
                writeln!(out, "Z_{n} (enumerate): {e}").unwrap();
                writeln!(out, "verdict: {}", if d == e { "PASS" } else { "FAIL" }).unwrap();
            }
            (Some(z), None) | (None, Some(z)) => writeln!(out, "Z_{n}: {z}").unwrap(),
            (None, None) => unreachable!("every method computes something"),
        }
        out
    };
    Ok(Outcome { stdout, exit_code })
}

pub fn cmd_paths(word: &StateWord, list: bool, format: OutputFormat) -> Result<Outcome> {
    let shape = Shape::of_word(word);
    let paths = enumerate_paths(&shape);
    let rows: Vec<(&CatalanPath, CatalanTableau, bool)> = paths
        .iter()
        .map(|c| {
            let t = c.to_tableau();
            let back = CatalanPath::from_tableau(&t).is_ok_and(|b| &b == c);
            (c, t, back)
        })
        .collect();
    let total: LaurentPoly = paths.iter().map(CatalanPath::weight).sum();
    let all_ok = rows
        .iter()
        .all(|(c, t, back)| *back && t.is_valid() && c.weight() == t.weight());

    if format == OutputFormat::Json {
        let mut v = json!({
            "word": word.to_string(),
            "shape": shape.parts(),
            "count": paths.len(),
            "total_weight": poly_json(&total),
            "bijection_ok": all_ok,
        });
        if list {
            v["paths"] = rows
                .iter()
                .map(|(c, t, back)| {
                    let mut pj = c.to_json();
                    pj["path_weight"] = poly_json(&c.path_weight());
                    pj["weight"] = poly_json(&c.weight());
                    pj["tableau"] = t.to_json();
                    pj["roundtrip"] = json!(back);
                    pj
                })
                .collect();
        }
        return Ok(Outcome {
            stdout: format!(
                "{}\n",
                serde_json::to_string_pretty(&v).expect("JSON values serialize")
            ),
            exit_code: if all_ok { EXIT_OK } else { EXIT_FAILED },
        });
    }

    let mut out = String::new();
    writeln!(out, "type: {word}").unwrap();
    writeln!(out, "shape: {}", shape_text(&shape)).unwrap();
    writeln!(out, "count: {}", paths.len()).unwrap();
    writeln!(out, "total weight: {total}").unwrap();
    if list {
        for (c, t, back) in &rows {
            writeln!(
                out,
                "{c}  pwt {}  wt {}  tableau wt {}  roundtrip {}",
                c.path_weight(),
                c.weight(),
                t.weight(),
                if *back { "ok" } else { "FAIL" }
            )
            .unwrap();
        }
    }
    writeln!(out, "bijection: {}", if all_ok { "PASS" } else { "FAIL" }).unwrap();
    Ok(Outcome {
        stdout: out,
        exit_code: if all_ok { EXIT_OK } else { EXIT_FAILED },
    })
}

/// One line of the verification report.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub id: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub summary: String,
    pub details: Vec<String>,
}

impl CheckResult {
    fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "name": self.name,
            "passed": self.passed,
            "summary": self.summary,
            "details": self.details,
        })
    }
}

fn default_eval_points() -> Vec<EvalPoint> {
    [("1", "1"), ("1/2", "1/3"), ("3/4", "1/4")]
        .iter()
        .map(|(a, b)| {
            EvalPoint::new(parse_rational(a).unwrap(), parse_rational(b).unwrap()).unwrap()
        })
        .collect()
}

fn words_up_to(n_max: usize) -> impl Iterator<Item = StateWord> {
    (1..=n_max).flat_map(StateWord::all)
}

/// (a) tableau sums against the determinant formula.
pub fn check_determinant_formula(n_max: usize) -> CheckResult {
    let mut details = Vec::new();
    let mut count = 0;
    for tau in words_up_to(n_max) {
        count += 1;
        let by_tableaux = crate::tableau::sum_weights(&tau);
        let by_det = det_formula(&tau);
        if by_tableaux != by_det {
            details.push(format!(
                "{tau}: tableaux {by_tableaux} vs determinant {by_det}"
            ));
        }
    }
    CheckResult {
        id: "a",
        name: "sum of tableau weights = determinant formula",
        passed: details.is_empty(),
        summary: format!("{count} words, n <= {n_max}"),
        details,
    }
}

/// (b) tableau/path bijection, weight preservation and weight transport.
pub fn check_bijection(n_max: usize) -> CheckResult {
    let mut details = Vec::new();
    let (mut shapes, mut total) = (0, 0);
    for tau in words_up_to(n_max) {
        shapes += 1;
        let shape = Shape::of_word(&tau);
        let g = TwistedDigraph::build(&shape);
        let skipped = (shape.width() - shape.part(1)) as i64;
        let paths = enumerate_paths(&shape);
        let tableaux = enumerate_tableaux(&tau);
        if paths.len() != tableaux.len() {
            details.push(format!(
                "{tau}: {} paths vs {} tableaux",
                paths.len(),
                tableaux.len()
            ));
        }
        for c in &paths {
            total += 1;
            let t = c.to_tableau();
            if !t.is_valid() || CatalanPath::from_tableau(&t).ok().as_ref() != Some(c) {
                details.push(format!("{tau} {c}: roundtrip failed"));
            }
            if c.weight() != t.weight() {
                details.push(format!(
                    "{tau} {c}: path wt {} vs tableau wt {}",
                    c.weight(),
                    t.weight()
                ));
            }
            if c.path_weight() != c.path_weight_by_walk() {
                details.push(format!(
                    "{tau} {c}: closed-form pwt {} vs edge walk {}",
                    c.path_weight(),
                    c.path_weight_by_walk()
                ));
            }
            match family_of_catalan_path(c, &g) {
                Ok(f) if f.weight().shift(-skipped, 0) == c.path_weight() && f.is_disjoint() => {}
                Ok(f) => details.push(format!(
                    "{tau} {c}: family weight {} does not transport to pwt",
                    f.weight()
                )),
                Err(e) => details.push(format!("{tau} {c}: {e}")),
            }
        }
        for t in &tableaux {
            if CatalanPath::from_tableau(t)
                .map(|c| c.to_tableau())
                .ok()
                .as_ref()
                != Some(t)
            {
                details.push(format!("{tau}: tableau roundtrip failed\n{t}"));
            }
        }
    }
    CheckResult {
        id: "b",
        name: "tableau <-> path bijection and weights",
        passed: details.is_empty(),
        summary: format!("{shapes} shapes, {total} paths"),
        details,
    }
}

/// (c) enumerated `w_ij` against the closed-form `A_ij`; both values are
/// reported on disagreement.
pub fn check_entries(n_max: usize) -> CheckResult {
    let mut details = Vec::new();
    let (mut shapes, mut entries) = (0, 0);
    for tau in words_up_to(n_max) {
        shapes += 1;
        let shape = Shape::of_word(&tau);
        let g = TwistedDigraph::build(&shape);
        for i in 1..=shape.rows() {
            for j in 1..=shape.rows() {
                entries += 1;
                let w = g.w_ij(i, j).expect("indices in range");
                let a = a_ij_closed_form(&shape, i, j);
                if w != a {
                    details.push(format!(
                        "{}: ({i},{j}) enumerated {w} vs closed form {a}",
                        shape_text(&shape)
                    ));
                }
            }
        }
    }
    CheckResult {
        id: "c",
        name: "enumerated w_ij = closed-form A_ij",
        passed: details.is_empty(),
        summary: format!("{shapes} shapes, {entries} entries"),
        details,
    }
}

/// (d) signed disjoint-family sum against the determinant.
pub fn check_lgv(n_max: usize, unguarded: bool) -> CheckResult {
    let mut details = Vec::new();
    let (mut checked, mut skipped) = (0, 0);
    for tau in words_up_to(n_max) {
        let shape = Shape::of_word(&tau);
        let report = if unguarded {
            Ok(lgv::lgv_report_unguarded(&shape))
        } else {
            lgv::lgv_report(&shape)
        };
        match report {
            Ok(r) => {
                checked += 1;
                if !r.holds() {
                    details.push(format!(
                        "{}: signed sum {} vs det {}",
                        shape_text(&shape),
                        r.signed_sum,
                        r.determinant
                    ));
                }
                if r.non_identity_families > 0 {
                    details.push(format!(
                        "{}: {} disjoint families with a non-identity permutation",
                        shape_text(&shape),
                        r.non_identity_families
                    ));
                }
            }
            Err(Error::TooLarge { .. }) => skipped += 1,
            Err(e) => details.push(format!("{}: {e}", shape_text(&shape))),
        }
    }
    CheckResult {
        id: "d",
        name: "LGV signed disjoint-family sum = det(w_ij)",
        passed: details.is_empty(),
        summary: format!("{checked} shapes, {skipped} skipped by size limit"),
        details,
    }
}

/// (e) exact stationary vectors against `P(tau)/Z_n`.
pub fn check_markov(n_max: usize, points: &[EvalPoint]) -> CheckResult {
    let mut details = Vec::new();
    let top = n_max.min(MARKOV_MAX_N);
    let mut solved = 0;
    for n in 1..=top {
        for pt in points {
            let outcome = ChainSpec::new(n, pt.alpha.clone(), pt.beta.clone())
                .and_then(|s| markov::stationary_check(&s));
            match outcome {
                Ok(check) => {
                    solved += 1;
                    let ok = check.holds();
                    if n <= 3 {
                        let v: Vec<String> = check.stationary.iter().map(format_rational).collect();
                        details.push(format!(
                            "n={n} {}: stationary [{}] {}",
                            pt.label(),
                            v.join(", "),
                            if ok { "matches" } else { "MISMATCH" }
                        ));
                    } else if !ok {
                        details.push(format!("n={n} {}: MISMATCH", pt.label()));
                    }
                }
                Err(e) => details.push(format!("n={n} {}: {e} MISMATCH", pt.label())),
            }
        }
    }
    let passed = !details.iter().any(|d| d.ends_with("MISMATCH"));
    let mut summary = format!(
        "{solved} exact solves, n <= {top}, {} rate pairs",
        points.len()
    );
    if top < n_max {
        write!(summary, " (n > {MARKOV_MAX_N} skipped)").unwrap();
    }
    CheckResult {
        id: "e",
        name: "Markov stationary vector = P(tau)/Z_n",
        passed,
        summary,
        details,
    }
}

/// (f) both routes to `Z_n`.
pub fn check_partition_function(n_max: usize) -> CheckResult {
    let mut details = Vec::new();
    for n in 1..=n_max {
        match (z_n_derrida(n), z_n_enumeration_limited(n, usize::MAX)) {
            (Ok(d), Ok(e)) if d == e => {}
            (Ok(d), Ok(e)) => details.push(format!("n={n}: derrida {d} vs enumeration {e}")),
            (Err(e), _) | (_, Err(e)) => details.push(format!("n={n}: {e}")),
        }
    }
    CheckResult {
        id: "f",
        name: "Z_n closed form = enumeration",
        passed: details.is_empty(),
        summary: format!("n = 1..{n_max}"),
        details,
    }
}

pub fn cmd_verify(
    n_max: usize,
    eval: &[EvalPoint],
    unsafe_n: bool,
    format: OutputFormat,
) -> Result<Outcome> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("--n must be at least 1".into()));
    }
    if n_max > VERIFY_MAX_N && !unsafe_n {
        return Err(Error::TooLarge {
            what: "--n",
            value: n_max,
            limit: VERIFY_MAX_N,
        });
    }
    let points = if eval.is_empty() {
        default_eval_points()
    } else {
        eval.to_vec()
    };
    let checks = vec![
        check_determinant_formula(n_max),
        check_bijection(n_max),
        check_entries(n_max),
        check_lgv(n_max, unsafe_n),
        check_markov(n_max, &points),
        check_partition_function(n_max),
    ];
    let passed = checks.iter().all(|c| c.passed);
    let exit_code = if passed { EXIT_OK } else { EXIT_FAILED };

    let stdout = if format == OutputFormat::Json {
        let v = json!({
            "n_max": n_max,
            "passed": passed,
            "checks": checks.iter().map(CheckResult::to_json).collect::<Vec<_>>(),
        });
        format!(
            "{}\n",
            serde_json::to_string_pretty(&v).expect("JSON values serialize")
        )
    } else {
        let mut out = String::new();
        for c in &checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "[{tag}] ({}) {}: {}", c.id, c.name, c.summary).unwrap();
            for d in &c.details {
                writeln!(out, "       {d}").unwrap();
            }
        }
        writeln!(
            out,
            "{}",
            if passed {
                "all checks passed"
            } else {
                "verification FAILED"
            }
        )
        .unwrap();
        out
    };
    Ok(Outcome { stdout, exit_code })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Outcome> {
        let cli = Cli::try_parse_from(std::iter::once("tasep").chain(args.iter().copied()))
            .expect("arguments parse");
        run(&cli)
    }

    #[test]
    fn eval_point_parsing() {
        let p: EvalPoint = "1/2,1/3".parse().unwrap();
        assert_eq!(p.label(), "a=1/2 b=1/3");
        assert!("1/2".parse::<EvalPoint>().is_err());
        assert!("0,1".parse::<EvalPoint>().is_err());
        assert!("1,2".parse::<EvalPoint>().is_err());
        assert!("0.5,1".parse::<EvalPoint>().is_err());
    }

    #[test]
    fn usage_errors_from_parser() {
        assert!(Cli::try_parse_from(["tasep", "prob", ""]).is_err());
        assert!(Cli::try_parse_from(["tasep", "prob", "102"]).is_err());
        assert!(Cli::try_parse_from(["tasep", "zn", "0"]).is_err());
        assert!(Cli::try_parse_from(["tasep", "prob", "10", "--eval", "2,1"]).is_err());
    }

    #[test]
    fn prob_text() {
        let out = run_args(&["prob", "10"]).unwrap();
        assert!(out.stdout.contains("numerator P(tau): a^2*b + a*b^2"));
        assert!(out
            .stdout
            .contains("denominator Z_2: a^2 + a*b + b^2 + a^2*b + a*b^2"));
        let out = run_args(&["prob", "0", "--eval", "1/2,1/2"]).unwrap();
        assert!(out.stdout.ends_with("Pr(tau) at a=1/2 b=1/2: 1/2\n"));
    }

    #[test]
    fn verify_size_guard() {
        assert!(matches!(
            run_args(&["verify", "--n", "20"]),
            Err(Error::TooLarge { .. })
        ));
        assert!(run_args(&["verify", "--n", "0"]).is_err());
    }

    #[test]
    fn zn_guard() {
        assert!(matches!(
            run_args(&["zn", "11", "--method", "enumerate"]),
            Err(Error::TooLarge { .. })
        ));
        assert!(run_args(&["zn", "11"]).is_ok());
    }
}
