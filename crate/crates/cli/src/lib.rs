//! Command-line driver for ideal factorization on plane curves.
//!
//! [`run`] parses arguments, reads the problem file, runs one command and
//! returns the text for stdout and stderr together with the exit code:
//! 0 on success, 1 for malformed or out-of-contract input, 2 for internal
//! failures, exhausted randomized searches and failed verification.

pub mod input;
pub mod report;

use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use curve_ideals::oracle::{self, MAX_DEGREE};
use curve_ideals::{
    distinct_degree, equal_degree, equal_degree_checked, radical_decomposition, CurveRing, Error, Factorization,
    PrimeFactor, RingIdeal,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use input::ProblemInput;
use report::{
    curve_text, factor_entries, field_name, generators, DegreeEntry, DegreeReport, FactorReport, OpReport, OracleCheck,
    RadicalEntry, RadicalReport, Report,
};

#[derive(Debug, Parser)]
#[command(name = "curvefactor", version, about = "Prime factorization of ideals in F_q[x, y]/(F)")]
pub struct Cli {
    /// Problem file; standard input when omitted or '-'.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Seed for the randomized splitting step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Reject curves that are not smooth.
    #[arg(long, global = true)]
    pub check_smooth: bool,
    /// Cross-check the factorization against brute-force prime enumeration.
    #[arg(long, global = true)]
    pub verify: bool,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Complete factorization into primes (default).
    Factor,
    /// Decomposition into radical ideals indexed by multiplicity.
    RadicalDecomp,
    /// Split a radical ideal by residual degree.
    Ddf,
    /// Split a radical ideal whose primes all have the given degree.
    Edf {
        #[arg(long)]
        degree: u32,
    },
    /// A single ideal operation.
    Op {
        #[arg(value_enum)]
        op: OpKind,
    },
    /// Factor, recombine and compare with brute-force enumeration.
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpKind {
    Sum,
    Colon,
    Radical,
    Equal,
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// A failure attributed to one stage of the run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub stage: String,
    pub message: String,
    pub input_error: bool,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error: {}: {}", self.stage, self.message)
    }
}

impl Failure {
    fn input(stage: impl Into<String>, message: impl ToString) -> Self {
        Failure { stage: stage.into(), message: message.to_string(), input_error: true }
    }

    fn internal(stage: impl Into<String>, message: impl ToString) -> Self {
        Failure { stage: stage.into(), message: message.to_string(), input_error: false }
    }

    fn code(&self) -> i32 {
        if self.input_error {
            1
        } else {
            2
        }
    }
}

fn at(stage: &str) -> impl Fn(Error) -> Failure + '_ {
    move |e| Failure { stage: stage.to_string(), input_error: e.is_input_error(), message: e.to_string() }
}

/// Runs the command line `args` (program name first); `stdin` supplies the
/// problem when no input file is named.
pub fn run<I, T>(args: I, stdin: impl FnOnce() -> std::io::Result<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code: 1 }
            } else {
                Outcome { stdout: text, stderr: String::new(), code: 0 }
            };
        }
    };
    let text = match &cli.input {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| Failure::input("input", format!("cannot read {}: {e}", path.display()))),
        _ => stdin().map_err(|e| Failure::input("input", format!("cannot read standard input: {e}"))),
    };
    let (report, failure) = match text.and_then(|t| execute(&cli, &t)) {
        Ok(pair) => pair,
        Err(f) => return Outcome { stdout: String::new(), stderr: format!("{f}\n"), code: f.code() },
    };
    let stdout = match cli.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    match failure {
        None => Outcome { stdout, stderr: String::new(), code: 0 },
        Some(f) => Outcome { stdout, stderr: format!("{f}\n"), code: f.code() },
    }
}

/// Runs the selected command. A report may come with a failure when the
/// computation finished but a check on its result did not pass.
pub fn execute(cli: &Cli, text: &str) -> Result<(Report, Option<Failure>), Failure> {
    let problem = ProblemInput::parse(text).map_err(|e| Failure::input("input", e))?;
    let field = problem.build_field().map_err(|e| Failure::input("field", e))?;
    let ring = problem.build_ring(field, cli.check_smooth).map_err(at("curve"))?;
    let command = cli.command.clone().unwrap_or(Command::Factor);
    let ideal = |i: usize| -> Result<RingIdeal, Failure> {
        if i >= problem.ideals.len() {
            return Err(Failure::input("input", format!("expected at least {} ideal block(s)", i + 1)));
        }
        problem.ideal(&ring, i).map_err(at(&format!("ideal {}", i + 1)))
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    match command {
        Command::Factor | Command::Verify => {
            let a = ideal(0)?;
            let fac = factor(&a, &mut rng)?;
            let verified = fac.verify().map_err(at("verification"))?;
            let oracle = (cli.verify || matches!(command, Command::Verify)).then(|| oracle_check(&fac)).transpose()?;
            let mut failure = (!verified).then(|| Failure::internal("verification", "product does not equal input"));
            if oracle == Some(OracleCheck::Agrees(false)) {
                failure = Some(Failure::internal("oracle", "factorization differs from brute-force enumeration"));
            }
            let report = FactorReport {
                field: field_name(&ring),
                curve: curve_text(&ring),
                input_ideal: generators(&a),
                factors: factor_entries(&fac),
                verified,
                seed: cli.seed,
                oracle,
            };
            Ok((Report::Factor(report), failure))
        }
        Command::RadicalDecomp => {
            let a = ideal(0)?;
            let stage = "radical decomposition";
            let rd = radical_decomposition(&a).map_err(at(stage))?;
            let verified = rd.product().map_err(at("verification"))? == a;
            let report = RadicalReport {
                field: field_name(&ring),
                curve: curve_text(&ring),
                input_ideal: generators(&a),
                radical_factors: rd
                    .factors()
                    .iter()
                    .enumerate()
                    .map(|(j, g)| RadicalEntry { multiplicity: j + 1, generators: generators(g) })
                    .collect(),
                verified,
                seed: cli.seed,
            };
            Ok((Report::Radical(report), mismatch(verified)))
        }
        Command::Ddf => {
            let g = ideal(0)?;
            let ddf = distinct_degree(&g).map_err(at("distinct degree factorization"))?;
            let product = ddf
                .factors()
                .iter()
                .try_fold(ring.unit_ideal(), |acc, h| acc.product(h))
                .map_err(at("verification"))?;
            let verified = product == g;
            let report = DegreeReport {
                field: field_name(&ring),
                curve: curve_text(&ring),
                input_ideal: generators(&g),
                degree_factors: ddf
                    .factors()
                    .iter()
                    .enumerate()
                    .map(|(k, h)| DegreeEntry { degree: k + 1, generators: generators(h) })
                    .collect(),
                verified,
                seed: cli.seed,
            };
            Ok((Report::Degree(report), mismatch(verified)))
        }
        Command::Edf { degree } => {
            let h = ideal(0)?;
            let primes = equal_degree_checked(&h, degree, &mut rng).map_err(at("equal degree factorization"))?;
            let factors = primes.into_iter().map(|prime| PrimeFactor { prime, multiplicity: 1, degree }).collect();
            let fac = Factorization::new(h.clone(), factors);
            let verified = fac.verify().map_err(at("verification"))?;
            let report = FactorReport {
                field: field_name(&ring),
                curve: curve_text(&ring),
                input_ideal: generators(&h),
                factors: factor_entries(&fac),
                verified,
                seed: cli.seed,
                oracle: None,
            };
            Ok((Report::Factor(report), mismatch(verified)))
        }
        Command::Op { op } => {
            let a = ideal(0)?;
            let (name, operands, result, equal) = match op {
                OpKind::Radical => ("radical", vec![a.clone()], Some(a.radical().map_err(at("radical"))?), None),
                OpKind::Sum => {
                    let b = ideal(1)?;
                    ("sum", vec![a.clone(), b.clone()], Some(a.sum(&b).map_err(at("sum"))?), None)
                }
                OpKind::Colon => {
                    let b = ideal(1)?;
                    ("colon", vec![a.clone(), b.clone()], Some(a.colon(&b).map_err(at("colon"))?), None)
                }
                OpKind::Equal => {
                    let b = ideal(1)?;
                    let eq = a == b;
                    ("equal", vec![a, b], None, Some(eq))
                }
            };
            let report = OpReport {
                field: field_name(&ring),
                curve: curve_text(&ring),
                operation: name.to_string(),
                operands: operands.iter().map(generators).collect(),
                result: result.as_ref().map(generators),
                equal,
            };
            Ok((Report::Op(report), None))
        }
    }
}

fn mismatch(verified: bool) -> Option<Failure> {
    (!verified).then(|| Failure::internal("verification", "product does not equal input"))
}

/// The three stages composed, with each failure labelled by its stage.
fn factor(a: &RingIdeal, rng: &mut ChaCha8Rng) -> Result<Factorization, Failure> {
    let rd = radical_decomposition(a).map_err(at("radical decomposition"))?;
    let mut factors = Vec::new();
    for (j, g) in rd.factors().iter().enumerate() {
        if g.is_unit() {
            continue;
        }
        let ddf = distinct_degree(g).map_err(at("distinct degree factorization"))?;
        for (k, h) in ddf.factors().iter().enumerate() {
            if h.is_unit() {
                continue;
            }
            let degree = k as u32 + 1;
            for prime in equal_degree(h, degree, rng).map_err(at("equal degree factorization"))? {
                factors.push(PrimeFactor { prime, multiplicity: j as u32 + 1, degree });
            }
        }
    }
    Ok(Factorization::new(a.clone(), factors))
}

fn oracle_check(fac: &Factorization) -> Result<OracleCheck, Failure> {
    let ring: &CurveRing = fac.input().ring();
    let max_degree = fac.factors().iter().map(|f| f.degree).max().unwrap_or(1);
    if max_degree > MAX_DEGREE {
        return Ok(OracleCheck::Skipped(format!("a factor has degree {max_degree} > {MAX_DEGREE}")));
    }
    let primes = match oracle::enumerate_primes(ring, max_degree) {
        Ok(p) => p,
        Err(Error::ScaleExceeded(why)) => return Ok(OracleCheck::Skipped(why)),
        Err(e) => return Err(at("oracle")(e)),
    };
    let truth = oracle::oracle_factor_with(fac.input(), &primes).map_err(at("oracle"))?;
    Ok(OracleCheck::Agrees(factor_entries(&truth) == factor_entries(fac)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(name: &str) -> String {
        format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
    }

    fn cli(args: &[&str]) -> Outcome {
        let mut full = vec!["curvefactor"];
        full.extend_from_slice(args);
        run(full, || Ok(String::new()))
    }

    fn cli_stdin(args: &[&str], text: &str) -> Outcome {
        let mut full = vec!["curvefactor"];
        full.extend_from_slice(args);
        let text = text.to_string();
        run(full, move || Ok(text))
    }

    #[test]
    fn factor_prints_primes_and_verification() {
        let out = cli(&["factor", "--input", &data("hyperelliptic13.txt")]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("factors: 3\n"));
        assert!(out.stdout.contains("product equals input: true\n"));
        let mults: Vec<&str> = out.stdout.lines().filter(|l| l.contains("multiplicity")).collect();
        assert_eq!(mults.len(), 3);
        assert!(mults[2].ends_with("degree 3, multiplicity 2"));
        // factor is the default command
        assert_eq!(cli(&["--input", &data("hyperelliptic13.txt")]), out);
    }

    #[test]
    fn json_and_text_describe_the_same_factors() {
        let path = data("elliptic19.txt");
        let text = cli(&["--input", &path, "--seed", "3"]).stdout;
        let json = cli(&["--input", &path, "--seed", "3", "--format", "json"]).stdout;
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let mut from_json = Vec::new();
        for f in v["factors"].as_array().unwrap() {
            from_json.push(format!("degree {}, multiplicity {}", f["degree"], f["multiplicity"]));
            for g in f["generators"].as_array().unwrap() {
                from_json.push(g.as_str().unwrap().to_string());
            }
        }
        let start = text.lines().position(|l| l.starts_with("factors:")).unwrap() + 1;
        let from_text: Vec<String> = text
            .lines()
            .skip(start)
            .take_while(|l| l.starts_with(' '))
            .map(|l| l.trim().split_once(": ").map_or(l.trim(), |(_, rest)| rest).to_string())
            .collect();
        assert_eq!(from_text, from_json);
        assert_eq!(v["verified"], true);
        assert_eq!(v["seed"], 3);
        assert_eq!(v["field"], "F_19");
    }

    #[test]
    fn edf_output_is_reproducible() {
        let args = ["edf", "--degree", "3", "--seed", "42", "--input"];
        let path = data("hyperelliptic13_h13.txt");
        let first = cli(&[&args[..], &[path.as_str()]].concat());
        assert_eq!(first.code, 0, "{}", first.stderr);
        assert!(first.stdout.contains("factors: 2\n"));
        assert_eq!(first, cli(&[&args[..], &[path.as_str()]].concat()));
    }

    #[test]
    fn ideal_operations() {
        let path = data("colon19.txt");
        let colon = cli(&["op", "colon", "--input", &path]);
        assert!(colon.stdout.contains("result:\n  x^2 + 5*x + 17\n"));
        let sum = cli(&["op", "sum", "--input", &path]);
        assert!(sum.stdout.contains("result:\n  x + 1\n"));
        assert!(cli(&["op", "equal", "--input", &path]).stdout.contains("equal: false\n"));

        let prime = "field: 19\ncurve: y^2 + y - (x^3 - 2*x^2 + 1)\nideal: x + 1\n";
        let out = cli_stdin(&["op", "radical", "--format", "json"], prime);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["result"], v["operands"][0]);
        let twice = format!("{prime}ideal: x + 1, y^2 + y + 2\n");
        assert!(cli_stdin(&["op", "equal"], &twice).stdout.contains("equal: true\n"));
    }

    #[test]
    fn stages_and_verify() {
        let rd = cli(&["radical-decomp", "--input", &data("elliptic19.txt")]);
        assert_eq!(rd.stdout.matches("  g_").count(), 4);
        assert!(rd.stdout.contains("  g_3:\n    1\n"));
        let h13 = data("hyperelliptic13_h13.txt");
        let ddf = cli(&["ddf", "--input", &h13]);
        assert!(ddf.stdout.contains("  h_1:\n    1\n  h_2:\n    1\n  h_3:\n"));
        let verify = cli(&["verify", "--input", &data("gf4.txt")]);
        assert_eq!(verify.code, 0, "{}", verify.stderr);
        assert!(verify.stdout.contains("oracle agrees: true\n"));
    }

    #[test]
    fn exit_codes_and_stage_names() {
        let out = cli(&["ddf", "--input", &data("hyperelliptic13.txt")]);
        assert_eq!(
            (out.code, out.stderr.as_str()),
            (1, "error: distinct degree factorization: ideal is not radical\n")
        );
        let out = cli(&["--input", "/nonexistent/problem.txt"]);
        assert_eq!(out.code, 1);
        assert!(out.stderr.starts_with("error: input: cannot read"));
        // the cusp is not a Dedekind ring, so (x) = (x, y^2) has no factorization
        let out = cli_stdin(&[], "field: 7\ncurve: y^2 - x^3\nideal: x\n");
        assert_eq!((out.code, out.stderr.as_str()), (2, "error: verification: product does not equal input\n"));
        assert!(out.stdout.contains("product equals input: false\n"));
        let out = cli_stdin(&["--check-smooth"], "field: 7\ncurve: y^2 - x^3\nideal: x\n");
        assert_eq!(
            (out.code, out.stderr.as_str()),
            (1, "error: curve: curve is singular (Jacobian ideal is proper)\n")
        );
        let out = cli_stdin(&[], "field: 7\ncurve: y^2 - x^3 - 1\nideal: x + z\n");
        assert_eq!(out.stderr, "error: ideal 1: parse error at offset 4: unknown identifier 'z'\n");
        let out = cli_stdin(&[], "field: 7\ncurve: y^2 - x^3 - 1\nideal: 1\n");
        assert_eq!(
            (out.code, out.stderr.as_str()),
            (1, "error: radical decomposition: unit ideal where a proper one is required\n")
        );
        assert_eq!(cli_stdin(&[], "field: 6\ncurve: y\n").stderr, "error: field: line 1: expected p, q or p^l\n");
        assert_eq!(cli(&["bogus"]).code, 1);
        assert_eq!(cli(&["--help"]).code, 0);
        assert_eq!(cli(&["op", "sum"]).code, 1);
        let internal = at("equal degree factorization")(Error::ProbabilisticFailure { draws: 128 });
        assert_eq!(internal.code(), 2);
    }
}
