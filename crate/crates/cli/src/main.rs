use std::process::ExitCode;

use clap::{Parser, Subcommand};
use smflab::{Error, LieType, Weight};
use smflab_cli::*;

#[derive(Parser)]
#[command(name = "smflab", version, about = "Strongly multiplicity-free representations and M-type matrices")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Dimension cap for weight systems and matrix modules.
    #[arg(long, global = true, env = "SMFLAB_CAP", default_value_t = smflab::repdata::DEFAULT_CAP)]
    cap: u128,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan matrix, positive roots, delta and coroot coefficients.
    Info {
        /// `A3` or `A 3`.
        #[arg(num_args = 1..=2, required = true)]
        lie_type: Vec<String>,
    },
    /// Dimension, height, SMF status, principal sl2 restriction, Dynkin polynomial.
    Module {
        /// Type then highest weight, e.g. `G2 1,0` or `A 3 0,1,0`.
        #[arg(num_args = 2..=3, required = true)]
        args: Vec<String>,
    },
    /// Check criteria a, b, e, f on every candidate module up to a rank.
    VerifyTheorem {
        #[arg(long, default_value_t = 8)]
        rank_max: usize,
    },
    /// Casimir character of a weight.
    Casimir {
        #[arg(num_args = 2..=3, required = true)]
        args: Vec<String>,
        /// Cross-check against the power-sum formula.
        #[arg(long)]
        popov: bool,
    },
    /// Decompose V_lambda (x) V_nu.
    Tensor {
        /// Type, lambda, nu.
        #[arg(num_args = 3..=4, required = true)]
        args: Vec<String>,
        /// minuscule | pieri | c3omega3 | klimyk
        #[arg(long, default_value = "klimyk")]
        rule: Rule,
    },
    /// Collision certificate or bounded distinctness sweep.
    Collide {
        #[arg(num_args = 2..=3, required = true)]
        args: Vec<String>,
        /// Coordinate bound for the nu sweep (default depends on rank).
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Spectrum of the M-type matrix for V_lambda (x) V_nu.
    Mspectrum {
        /// Type, lambda, nu.
        #[arg(num_args = 3..=4, required = true)]
        args: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Equal power sums (Prouhet-Tarry-Escott).
    Pte {
        #[command(subcommand)]
        mode: PteMode,
    },
}

#[derive(Subcommand)]
enum PteMode {
    /// Classify two lists.
    Check {
        xs: String,
        ys: String,
        #[arg(long, default_value_t = 2)]
        degree: u32,
    },
    /// The degree-2 parametric solution at `s`.
    Family {
        #[arg(allow_hyphen_values = true)]
        s: i64,
    },
    /// All normalized solutions with values in [-bound, bound].
    Search {
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 2)]
        degree: u32,
        #[arg(long)]
        bound: i64,
    },
}

fn typed(args: &[String], n: usize) -> Result<(LieType, Vec<Weight>), Error> {
    let (t, rest) = parse_type(args)?;
    if rest.len() != n {
        return Err(Error::Parse(format!("expected {n} weight(s) after the type")));
    }
    let ws = rest.iter().map(|s| parse_weight(t, s)).collect::<Result<_, _>>()?;
    Ok((t, ws))
}

fn emit<T: Render>(x: &T, json: bool) {
    if json {
        println!("{}", x.json());
    } else {
        print!("{}", x.text());
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    let json = cli.json;
    let cap = cli.cap;
    match cli.command {
        Command::Info { lie_type } => {
            let (t, rest) = parse_type(&lie_type)?;
            if !rest.is_empty() {
                return Err(Error::Parse("unexpected arguments after the type".into()));
            }
            emit(&cmd_info(t), json);
        }
        Command::Module { args } => {
            let (t, w) = typed(&args, 1)?;
            emit(&cmd_module(t, &w[0], cap)?, json);
        }
        Command::VerifyTheorem { rank_max } => {
            let r = verify_theorem(rank_max)?;
            emit(&r, json);
            if !r.consistent {
                for e in r.offending() {
                    eprintln!("inconsistent: {} {} {:?}", e.lie_type, e.lambda, e.flags);
                }
                return Ok(EXIT_INCONSISTENT);
            }
        }
        Command::Casimir { args, popov } => {
            let (t, w) = typed(&args, 1)?;
            let c = cmd_casimir(t, &w[0], popov)?;
            emit(&c, json);
            if c.agrees == Some(false) {
                return Ok(EXIT_INCONSISTENT);
            }
        }
        Command::Tensor { args, rule } => {
            let (t, w) = typed(&args, 2)?;
            emit(&cmd_tensor(t, &w[0], &w[1], rule, cap)?, json);
        }
        Command::Collide { args, bound } => {
            let (t, w) = typed(&args, 1)?;
            let bound = bound.unwrap_or_else(|| smflab::collisions::adaptive_bound(t.rank()));
            let c = cmd_collide(t, &w[0], bound)?;
            emit(&c, json);
            if c.verification.is_some_and(|v| !v.ok) {
                return Ok(EXIT_INCONSISTENT);
            }
        }
        Command::Mspectrum { args, seed } => {
            let (t, w) = typed(&args, 2)?;
            emit(&cmd_mspectrum(t, &w[0], &w[1], seed, cap)?, json);
        }
        Command::Pte { mode } => {
            let d = match mode {
                PteMode::Check { xs, ys, degree } => {
                    cmd_pte_check(&parse_ints(&xs)?, &parse_ints(&ys)?, degree)?
                }
                PteMode::Family { s } => cmd_pte_family(s)?,
                PteMode::Search { size, degree, bound } => cmd_pte_search(size, degree, bound)?,
            };
            emit(&d, json);
        }
    }
    Ok(EXIT_OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
