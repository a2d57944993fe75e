use std::fmt::Write;
use std::path::PathBuf;

use clap::Subcommand;
use cremona_core::certificates::{gamma_class_with, DEFAULT_TRIALS};
use cremona_core::finite_obstruction::monomial_relations;
use cremona_core::sampling::DEFAULT_SEED;
use cremona_core::{
    birkhoff_min_dim, commutator, derived_length_g, heisenberg_profile, linearize, nonlinearity_report,
    parse_word, Certificate, ElementaryAut, Error,
};
use serde_json::{json, Value};

use crate::report::{self, element_text, Report};
use crate::suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Evaluate a word such as "m(X)*a(1)*m(X)^-1" to its normal form
    Eval { word: String },
    /// Exact order of the element a word evaluates to
    Order { word: String },
    /// Commutator [u, v] = u v u^-1 v^-1 of two words
    Commutator { u: String, v: String },
    /// Nilpotency class certificates for Gamma_1 .. Gamma_N
    GammaCertify {
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
    },
    /// Derived length certificate for G = <s(1), a(1), m(X)>
    DerivedLength {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Class and dimension-bound table for n = 1 .. MAX_N
    Nonlinearity { max_n: usize },
    /// Profile of the Heisenberg group mod P (P in 2, 3, 5, 7)
    Heisenberg { p: u64 },
    /// Relations of the monomial maps mod P
    Monomial { p: u64 },
    /// Linearize the elementary automorphisms listed in FILE
    ElemLinearize {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Run every verification suite
    VerifyAll {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Re-verify serialized certificates (one document or an array)
    Check { file: PathBuf },
}

/// Input problems map to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

fn code(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn read(path: &PathBuf) -> Result<String, UsageError> {
    std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

pub fn run_command(cmd: &Command) -> Result<Report, UsageError> {
    match cmd {
        Command::Eval { word } => {
            let (w, env) = parse_word(word)?;
            let value = w.evaluate(&env)?;
            Ok(Report {
                code: EXIT_OK,
                text: element_text(&value),
                json: json!({ "word": w.to_string(), "value": value.to_json() }),
            })
        }
        Command::Order { word } => {
            let (w, env) = parse_word(word)?;
            let value = w.evaluate(&env)?;
            let order = value.order().to_string();
            Ok(Report {
                code: EXIT_OK,
                text: format!("{value}\norder: {order}\n"),
                json: json!({ "value": value.to_json(), "order": order }),
            })
        }
        Command::Commutator { u, v } => {
            let (uw, mut env) = parse_word(u)?;
            let (vw, env2) = parse_word(v)?;
            env.extend(env2);
            let c = commutator(&uw, &vw);
            let value = c.evaluate(&env)?;
            Ok(Report {
                code: EXIT_OK,
                text: format!("[{u}, {v}] = {c}\n{}", element_text(&value)),
                json: json!({ "word": c.to_string(), "value": value.to_json() }),
            })
        }
        Command::GammaCertify { n, seed, trials } => {
            if *n == 0 {
                return Err(UsageError("gamma-certify needs N >= 1".into()));
            }
            let mut text = String::new();
            let mut docs = Vec::new();
            let mut ok = true;
            for k in 1..=*n {
                let cert = gamma_class_with(k, *seed, *trials)?;
                let outcome = cert.check();
                ok &= outcome.passed();
                text += &report::class_text(&cert, &outcome);
                docs.push(Certificate::Class(cert));
            }
            Ok(Report {
                code: code(ok),
                text,
                json: serde_json::to_value(&docs).unwrap(),
            })
        }
        Command::DerivedLength { seed, trials } => {
            let cert = derived_length_g(*seed, *trials)?;
            let outcome = cert.check();
            Ok(Report {
                code: code(outcome.passed()),
                text: report::solvability_text(&cert, &outcome),
                json: serde_json::to_value(Certificate::Solvability(cert)).unwrap(),
            })
        }
        Command::Nonlinearity { max_n } => {
            let rep = nonlinearity_report(*max_n)?;
            let outcome = rep.check();
            Ok(Report {
                code: code(outcome.passed()),
                text: report::nonlinearity_text(&rep, &outcome),
                json: serde_json::to_value(Certificate::Nonlinearity(rep)).unwrap(),
            })
        }
        Command::Heisenberg { p } => {
            let profile = heisenberg_profile(*p)?;
            let min_dim = birkhoff_min_dim(*p).ok();
            let ok = profile.consistent() && min_dim == Some(*p);
            let mut json = serde_json::to_value(&profile).unwrap();
            json["birkhoff_min_dim"] = json!(min_dim);
            Ok(Report {
                code: code(ok),
                text: report::profile_text(&profile, min_dim),
                json,
            })
        }
        Command::Monomial { p } => {
            let rel = monomial_relations(*p)?;
            Ok(Report {
                code: code(rel.all_hold()),
                text: report::monomial_text(&rel),
                json: serde_json::to_value(&rel).unwrap(),
            })
        }
        Command::ElemLinearize { file, seed, trials } => {
            let gens = ElementaryAut::parse_file(&read(file)?)?;
            let lin = linearize(&gens)?;
            let check = cremona_core::elementary::check_representation(&gens, &lin, *trials, *seed)?;
            let mut text = String::new();
            writeln!(
                text,
                "pullback representation on span({}), size {}",
                report::basis_names(lin.degree).join(", "),
                lin.degree + 3
            )
            .unwrap();
            text.push_str(
                "  (explicit coordinate representation; used in place of the adjoint \
                 representation of the ambient Lie group)\n",
            );
            for (g, m) in gens.iter().zip(&lin.matrices) {
                writeln!(text, "  {g}").unwrap();
                report::matrix_text(&mut text, m);
            }
            writeln!(
                text,
                "  homomorphism {}, degree bound {}, parameter recovery {}, identity {} ({} words, seed {})",
                check.homomorphism_ok, check.degree_bounded_ok, check.recovery_ok, check.identity_ok,
                check.trials, check.seed
            )
            .unwrap();
            Ok(Report {
                code: code(check.passed()),
                text,
                json: report::linearization_json(lin.degree, &lin.matrices, &check),
            })
        }
        Command::VerifyAll { seed } => {
            let results = suite::run_all(*seed);
            let ok = results.iter().all(|r| r.passed);
            let mut text = format!("seed: {seed}\n");
            for r in &results {
                writeln!(text, "[{}] {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail).unwrap();
            }
            let json = json!({
                "seed": seed,
                "passed": ok,
                "criteria": results.iter().map(|r| json!({"name": r.name, "passed": r.passed, "detail": r.detail})).collect::<Vec<Value>>(),
            });
            Ok(Report {
                code: code(ok),
                text,
                json,
            })
        }
        Command::Check { file } => {
            let doc: Value = serde_json::from_str(&read(file)?)
                .map_err(|e| UsageError(format!("{}: {e}", file.display())))?;
            let outcome = Certificate::check_json(&doc)?;
            let mut text = String::new();
            if outcome.passed() {
                text.push_str("all certificates verified\n");
            } else {
                for f in &outcome.failures {
                    writeln!(text, "FAILED: {f}").unwrap();
                }
            }
            Ok(Report {
                code: code(outcome.passed()),
                text,
                json: json!({ "passed": outcome.passed(), "failures": outcome.failures }),
            })
        }
    }
}
