//! `awg`: batch command-line front end for the `affine-weyl` library.
//!
//! Every verb reads its input as JSON (a positional argument, or standard
//! input when the argument is omitted) and writes JSON to standard output.
//! Exit codes: 0 on success, 1 on a domain or input error (and for `verify`
//! when a check fails), 2 when a search exceeds its budget.

use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;

use affine_weyl::adlv::{base_map_from_json, DimContext};
use affine_weyl::conj_classes::{classify, enumerate_dppairs};
use affine_weyl::hecke::class_polynomials;
use affine_weyl::newton::{f_invariant, fiber_classes, fiber_min_elements, fiber_min_length, is_good, NewtonInv};
use affine_weyl::reduction::{brute_force_min, reduce_to_fundamental, reduce_to_minimal, ClassLengthCache};
use affine_weyl::verify::{registry, run_all, run_named, run_suite, Report, VerifyConfig, VerifyContext, SUITES};
use affine_weyl::weyl_core::{ball, length, simple_reflection, OmegaScope};
use affine_weyl::{AwgError, Exec, GroupElement, WeylType};
use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(name = "awg", version, about = "Extended affine Weyl groups of classical type")]
struct Cli {
    /// Pretty-print JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Reduce an element to minimal length in its conjugacy class.
    Reduce {
        #[command(flatten)]
        input: ElementInput,
        /// Reduce further to `x · f` with `f` a fundamental element.
        #[arg(long)]
        fundamental: bool,
    },
    /// Label the conjugacy class of an integral element.
    Classify {
        #[command(flatten)]
        input: ElementInput,
    },
    /// Minimal length in the conjugacy class of an element.
    Minlen {
        #[command(flatten)]
        input: ElementInput,
        /// Cross-check against an exhaustive search of the length ball.
        #[arg(long)]
        brute_force: bool,
        /// Node budget of the exhaustive search.
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
    },
    /// Class polynomials of an integral element.
    Classpoly {
        #[command(flatten)]
        input: ElementInput,
    },
    /// Newton point and length-zero tag of an element.
    Newton {
        #[command(flatten)]
        input: ElementInput,
    },
    /// Whether an element is good.
    Good {
        #[command(flatten)]
        input: ElementInput,
    },
    /// Conjugacy classes over a Newton invariant (types A and C).
    Fiber {
        /// Newton invariant as JSON; read from standard input when omitted.
        inv: Option<String>,
        #[arg(long = "type", value_parser = parse_type)]
        ty: WeylType,
        #[arg(long)]
        n: usize,
        /// Also list the minimal length elements of the fiber.
        #[arg(long)]
        elements: bool,
    },
    /// Dimension of an affine Deligne-Lusztig variety.
    #[command(name = "dim-adlv")]
    DimAdlv {
        #[command(flatten)]
        input: ElementInput,
        /// Type A/C formula over this Newton invariant (JSON).
        #[arg(long, group = "mode")]
        b: Option<String>,
        /// General formula with these base dimensions (JSON list).
        #[arg(long, group = "mode")]
        base: Option<String>,
        /// Regular coweight formula for `t^mu`, e.g. `2,-1`.
        #[arg(long, group = "mode", value_delimiter = ',', allow_hyphen_values = true)]
        mu: Option<Vec<i64>>,
    },
    /// Stream class labels, or elements of a length ball, one JSON per line.
    Enumerate {
        #[arg(long = "type", value_parser = parse_type)]
        ty: WeylType,
        #[arg(long)]
        n: usize,
        /// Largest `|c|` in the class labels.
        #[arg(long, default_value_t = 2)]
        cmax: i64,
        /// Stream elements of length at most `--maxlen` instead.
        #[arg(long)]
        elements: bool,
        #[arg(long, default_value_t = 4)]
        maxlen: u64,
        /// Include non-integral elements when streaming elements.
        #[arg(long)]
        all_cosets: bool,
    },
    /// Run the property suites.
    Verify {
        /// Suite to run (repeatable).
        #[arg(long)]
        suite: Vec<String>,
        /// Single check `suite/name` to run (repeatable).
        #[arg(long)]
        check: Vec<String>,
        /// Run every suite.
        #[arg(long)]
        all: bool,
        /// List the registered checks and exit.
        #[arg(long)]
        list: bool,
        #[arg(long, default_value_t = VerifyConfig::default().rank)]
        rank: usize,
        #[arg(long, default_value_t = VerifyConfig::default().maxlen)]
        maxlen: u64,
        #[arg(long, default_value_t = VerifyConfig::default().seed)]
        seed: u64,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
        /// Run on the calling thread only.
        #[arg(long)]
        sequential: bool,
    },
}

/// An element given as JSON or as a word in the simple reflections.
#[derive(Args)]
struct ElementInput {
    /// Element as JSON `{"type","n","trans2","perm"}`; read from standard
    /// input when neither this nor `--word` is given.
    element: Option<String>,
    /// Product of simple reflections, e.g. `1,0,1` (needs `--type`, `--n`).
    #[arg(long, value_delimiter = ',')]
    word: Option<Vec<usize>>,
    #[arg(long = "type", value_parser = parse_type)]
    ty: Option<WeylType>,
    #[arg(long)]
    n: Option<usize>,
}

impl ElementInput {
    fn element(&self) -> Result<GroupElement> {
        if let Some(word) = &self.word {
            let (Some(ty), Some(n)) = (self.ty, self.n) else {
                bail!("--word needs --type and --n");
            };
            let mut w = GroupElement::identity(ty, n)?;
            for &i in word {
                w = w.mul(&simple_reflection(ty, n, i)?);
            }
            return Ok(w);
        }
        let text = read_arg_or_stdin(self.element.as_deref())?;
        GroupElement::from_json(&text).context("reading the element")
    }
}

fn parse_type(s: &str) -> std::result::Result<WeylType, String> {
    match s.to_ascii_uppercase().as_str() {
        "A" => Ok(WeylType::A),
        "B" => Ok(WeylType::B),
        "C" => Ok(WeylType::C),
        "D" => Ok(WeylType::D),
        _ => Err(format!("unknown type {s:?}, expected one of A, B, C, D")),
    }
}

fn read_arg_or_stdin(arg: Option<&str>) -> Result<String> {
    match arg {
        Some(s) => Ok(s.to_string()),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

fn emit<T: Serialize>(value: &T, pretty: bool) -> Result<()> {
    let s = if pretty {
        serde_json::to_string_pretty(value)?
    } else {
        serde_json::to_string(value)?
    };
    println!("{s}");
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    let pretty = cli.pretty;
    match cli.verb {
        Verb::Reduce { input, fundamental } => {
            let w = input.element()?;
            if fundamental {
                emit(&reduce_to_fundamental(&w)?, pretty)?;
            } else {
                emit(&reduce_to_minimal(&w)?.1, pretty)?;
            }
        }
        Verb::Classify { input } => emit(&classify(&input.element()?)?, pretty)?,
        Verb::Minlen { input, brute_force, budget } => {
            let w = input.element()?;
            let (m, _) = reduce_to_minimal(&w)?;
            let mut out = json!({
                "length": length(&w),
                "min_length": length(&m),
                "minimal": m,
            });
            if w.is_integral() {
                out["class"] = serde_json::to_value(classify(&w)?)?;
            }
            if brute_force {
                let (l, _) = brute_force_min(&w, budget)?;
                out["brute_force_min"] = json!(l);
            }
            emit(&out, pretty)?;
        }
        Verb::Classpoly { input } => emit(&class_polynomials(&input.element()?)?, pretty)?,
        Verb::Newton { input } => emit(&f_invariant(&input.element()?), pretty)?,
        Verb::Good { input } => {
            let w = input.element()?;
            emit(
                &json!({ "good": is_good(&w), "length": length(&w), "newton": f_invariant(&w) }),
                pretty,
            )?;
        }
        Verb::Fiber { inv, ty, n, elements } => {
            let inv = NewtonInv::from_json(&read_arg_or_stdin(inv.as_deref())?)?;
            let lengths = ClassLengthCache::default();
            let classes = fiber_classes(&inv, ty, n)?;
            let (lmin, attaining) = fiber_min_length(&inv, ty, n, &lengths)?;
            let mut out = json!({ "classes": classes, "min_length": lmin, "minimal_classes": attaining });
            if elements {
                out["minimal_elements"] = serde_json::to_value(fiber_min_elements(&inv, ty, n, &lengths, Exec::default())?)?;
            }
            emit(&out, pretty)?;
        }
        Verb::DimAdlv { input, b, base, mu } => {
            let w = input.element()?;
            let ctx = DimContext::default();
            if let Some(b) = b {
                emit(&ctx.dim_type_ac(&w, &NewtonInv::from_json(&b)?)?, pretty)?;
            } else if let Some(base) = base {
                emit(&ctx.dim_general(&w, &base_map_from_json(&base)?)?, pretty)?;
            } else if let Some(mu) = mu {
                emit(&json!({ "dim": ctx.dim_regular_coweight(&w, &mu)? }), pretty)?;
            } else {
                bail!("dim-adlv needs one of --b, --base or --mu");
            }
        }
        Verb::Enumerate { ty, n, cmax, elements, maxlen, all_cosets } => {
            let mut out = BufWriter::new(io::stdout().lock());
            if elements {
                let scope = if all_cosets { OmegaScope::All } else { OmegaScope::Integral };
                for w in ball(ty, n, maxlen, scope, Exec::default())? {
                    writeln!(out, "{}", w.to_json())?;
                }
            } else {
                for p in enumerate_dppairs(ty, n, cmax)? {
                    writeln!(out, "{}", p.to_json())?;
                }
            }
            out.flush()?;
        }
        Verb::Verify { suite, check, all, list, rank, maxlen, seed, json, sequential } => {
            if list {
                for spec in registry() {
                    println!("{}/{}  {}", spec.suite, spec.name, spec.description);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let exec = if sequential { Exec::Sequential } else { Exec::default() };
            let ctx = VerifyContext::new(VerifyConfig { rank, maxlen, seed }, exec);
            let report = if all {
                run_all(&ctx)
            } else if !check.is_empty() {
                let names: Vec<&str> = check.iter().map(String::as_str).collect();
                run_named(&ctx, &names)?
            } else if !suite.is_empty() {
                let mut checks = Vec::new();
                for s in &suite {
                    checks.extend(run_suite(&ctx, s)?.checks);
                }
                checks.sort_by(|a, b| (&a.suite, &a.name).cmp(&(&b.suite, &b.name)));
                checks.dedup_by(|a, b| a.suite == b.suite && a.name == b.name);
                Report { config: ctx.cfg, checks }
            } else {
                bail!("verify needs --all, --suite or --check (suites: {})", SUITES.join(", "));
            };
            if json {
                emit(&report, pretty)?;
            } else {
                print!("{}", report.render_text());
            }
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<AwgError>() {
                Some(AwgError::BudgetExceeded { .. }) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
