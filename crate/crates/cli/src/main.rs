//! `capelli`: command-line access to the interpolation polynomials, weights,
//! eigenvalue maps and verification sweeps.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use capelli_core::borel::BorelDescriptor;
use capelli_core::equivalence::{orbit, Point, DEFAULT_BUDGET, DEFAULT_DEGREE};
use capelli_core::isjp::{build_isjp, eigenvalue_diag, eigenvalue_glm2n};
use capelli_core::partitions::HookPartition;
use capelli_core::rational::{fmt_rational, parse_rational, parse_rational_list};
use capelli_core::tau::{canonical_map, MapChoice};
use capelli_core::verify::{
    deterministic, gl22_table, gl22_uniqueness, run_sweep, verify_appendix, BorelFilter, Pair, SweepConfig,
};
use capelli_core::weights::{genericity, hw0_glm2n, hw_b, r_lambda_b};

#[derive(Parser)]
#[command(name = "capelli", version, about = "Interpolation super Jack polynomials and Capelli eigenvalues")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Dims {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Args, Clone)]
struct BorelArg {
    /// Decreasing Borel as an ℓ-vector, e.g. `1,1`
    #[arg(long, conflicts_with = "seq")]
    borel: Option<String>,
    /// Decreasing Borel as a δε sequence, e.g. `d2,e2,e1,d1`
    #[arg(long)]
    seq: Option<String>,
}

impl BorelArg {
    fn resolve(&self, m: usize, n: usize) -> Result<BorelDescriptor> {
        Ok(match (&self.borel, &self.seq) {
            (Some(l), None) => BorelDescriptor::parse_ell(l, m, n)?,
            (None, Some(s)) => BorelDescriptor::parse_sequence(s, m, n)?,
            (None, None) => BorelDescriptor::opposite_standard(m, n),
            (Some(_), Some(_)) => bail!("give either --borel or --seq"),
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print P_{λ,θ} as JSON
    Isjp {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, default_value = "1/2")]
        theta: String,
        #[arg(long, default_value = "")]
        lambda: String,
    },
    /// Highest weights of W_λ, or the gl(2|2) table as CSV
    Hw {
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        borel: BorelArg,
        #[arg(long)]
        lambda: Option<String>,
        /// Emit the gl(2|2) table for ℓ = (1,1) instead
        #[arg(long)]
        table: bool,
        /// Largest r, s, t in the table
        #[arg(long, default_value_t = 5)]
        range: usize,
    },
    /// Print an eigenvalue map {"matrix", "offset"}
    Tau {
        #[command(flatten)]
        dims: Dims,
        #[command(flatten)]
        borel: BorelArg,
        /// full | releven | std | tau0
        #[arg(long, default_value = "full")]
        family: String,
    },
    /// Capelli eigenvalue c_μ(λ)
    Eig {
        #[arg(long, default_value = "glm2n")]
        pair: String,
        #[command(flatten)]
        dims: Dims,
        #[command(flatten)]
        borel: BorelArg,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        lambda: String,
        /// Map used for glm2n: tau0 | full | releven | std
        #[arg(long, default_value = "tau0")]
        map: String,
    },
    /// Monoidal-symmetry orbit of a point
    Orbit {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, default_value = "1/2")]
        theta: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Exhaustive sweep of the eigenvalue identities
    Verify(VerifyArgs),
    /// Reconstruct a worked gl(2|2) example: gl22_table | gl22_uniqueness
    Example {
        name: String,
        #[arg(long, default_value_t = 5)]
        range: usize,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "glm2n")]
    pair: String,
    #[arg(long, default_value_t = 1)]
    m: usize,
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, default_value_t = 4)]
    lambda_max: usize,
    #[arg(long, default_value_t = 3)]
    mu_max: usize,
    /// all | very_even | rel_even | `;`-separated list
    #[arg(long, default_value = "all")]
    borels: String,
    /// all | full | releven | std
    #[arg(long, default_value = "all")]
    map: String,
    /// Build the selected map even where its Borel class forbids it
    #[arg(long)]
    force_map: bool,
    #[arg(long, default_value_t = DEFAULT_DEGREE)]
    degree: usize,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Omit wall-clock fields so reruns are byte-identical
    #[arg(long)]
    deterministic: bool,
    /// Check the Capelli normalization lemma instead of a sweep
    #[arg(long)]
    appendix: bool,
}

fn print(v: &Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn run_verify(a: VerifyArgs) -> Result<bool> {
    if a.appendix {
        let rep = verify_appendix()?;
        print(&serde_json::to_value(&rep)?)?;
        return Ok(rep.passed);
    }
    let pair: Pair = a.pair.parse()?;
    let mut cfg = SweepConfig::new(pair, a.m, a.n, a.lambda_max, a.mu_max);
    cfg.borels = a.borels.parse::<BorelFilter>()?;
    cfg.map = match a.map.as_str() {
        "all" => None,
        s => Some(s.parse::<MapChoice>()?),
    };
    cfg.force_map = a.force_map;
    cfg.equivalence_degree = a.degree;
    for w in cfg.warnings() {
        eprintln!("warning: {w}");
    }
    let mut report = run_sweep(&cfg)?;
    if a.deterministic {
        report = deterministic(report);
    }
    let text = serde_json::to_string_pretty(&report)?;
    match &a.out {
        Some(path) => {
            std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
            eprintln!("{} cases, {} failures", report.cases, report.failures.len());
        }
        None => println!("{text}"),
    }
    Ok(report.passed())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Isjp { dims, theta, lambda } => {
            let theta = parse_rational(&theta)?;
            let lam = HookPartition::parse(&lambda, dims.m, dims.n)?;
            let p = build_isjp(&lam, dims.m, dims.n, &theta)?;
            print(&json!({
                "lambda": lam.parts(),
                "theta": fmt_rational(&theta),
                "polynomial": p.poly.to_json(),
            }))?;
        }
        Command::Hw { m, n, borel, lambda, table, range } => {
            if table {
                let t = gl22_table(range)?;
                println!("lambda,lambda_0,lambda_b,closed_form_0,closed_form_b,match");
                for r in &t.rows {
                    println!(
                        "\"{}\",\"{}\",\"{}\",\"{}\",\"{}\",{}",
                        r.lambda, r.lambda_0, r.lambda_b, r.expected_0, r.expected_b, r.matches
                    );
                }
                return Ok(t.all_match);
            }
            let (Some(m), Some(n), Some(lambda)) = (m, n, lambda) else {
                bail!("hw needs --m, --n and --lambda (or --table)");
            };
            let b = borel.resolve(m, n)?;
            let lam = HookPartition::parse(&lambda, m, n)?;
            print(&json!({
                "lambda": lam.parts(),
                "borel": b.ell(),
                "sequence": b.delta_epsilon_sequence().to_string(),
                "lambda_0": hw0_glm2n(&lam, m, n),
                "r": r_lambda_b(&lam, &b),
                "lambda_b": hw_b(&lam, &b),
                "generic": genericity(&lam, &b).is_generic,
            }))?;
        }
        Command::Tau { dims, borel, family } => {
            let b = borel.resolve(dims.m, dims.n)?;
            let map = canonical_map(&b, family.parse()?)?;
            print(&serde_json::to_value(map.to_json())?)?;
        }
        Command::Eig { pair, dims, borel, mu, lambda, map } => {
            let (m, n) = (dims.m, dims.n);
            let mu_p = HookPartition::parse(&mu, m, n)?;
            let lam = HookPartition::parse(&lambda, m, n)?;
            let value = match pair.parse::<Pair>()? {
                Pair::Diag => eigenvalue_diag(&mu_p, &lam, m, n)?,
                Pair::Glm2n => eigenvalue_glm2n(&mu_p, &lam, m, n, &borel.resolve(m, n)?, map.parse()?)?,
            };
            print(&json!({
                "mu": mu_p.parts(),
                "lambda": lam.parts(),
                "eigenvalue": fmt_rational(&value),
            }))?;
        }
        Command::Orbit { dims, theta, point, budget } => {
            let p = Point::new(parse_rational_list(&point)?, dims.m, dims.n, parse_rational(&theta)?)?;
            print(&serde_json::to_value(orbit(&p, budget))?)?;
        }
        Command::Verify(a) => return run_verify(a),
        Command::Example { name, range, degree } => match name.as_str() {
            "gl22_table" => {
                let t = gl22_table(range)?;
                print(&serde_json::to_value(&t)?)?;
                return Ok(t.all_match);
            }
            "gl22_uniqueness" => {
                let rep = gl22_uniqueness(range.max(1), degree)?;
                print(&serde_json::to_value(&rep)?)?;
                return Ok(rep.matches_full_map);
            }
            other => bail!("unknown example `{other}` (gl22_table, gl22_uniqueness)"),
        },
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
