use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use grid_lefschetz::commands::{self, Output, EXIT_OK, EXIT_USAGE};
use grid_lefschetz::config::{parse_prime, FieldMode, OutputFormat, ParamsOverride, RunConfig, DEFAULT_TRIALS};
use grid_lefschetz::error::{Error, Result};
use grid_lefschetz::field::{RandomSeed, DEFAULT_SEED};
use grid_lefschetz::geometry::Locus;

/// Lefschetz properties of Artinian algebras from grids on a smooth quadric.
#[derive(Parser, Debug)]
#[command(name = "gridlef", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Lines of the first ruling.
    #[arg(long, global = true, default_value_t = 3)]
    a: usize,
    /// Lines of the second ruling.
    #[arg(long, global = true, default_value_t = 3)]
    b: usize,
    /// Power of the linear forms.
    #[arg(long, global = true)]
    d: Option<usize>,
    /// Largest power for `bx`.
    #[arg(long, global = true)]
    dmax: Option<usize>,
    /// Target degree for `coker`.
    #[arg(long, global = true)]
    t: Option<usize>,
    /// Prime modulus of the coefficient field.
    #[arg(long, global = true, conflicts_with = "rational")]
    prime: Option<String>,
    /// Exact rational arithmetic instead of a prime field.
    #[arg(long, global = true)]
    rational: bool,
    /// Random forms tried per degree.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    /// Root seed, decimal or 0x-prefixed hex.
    #[arg(long, global = true)]
    seed: Option<String>,
    /// Explicit grid parameters, e.g. "u=1,2,3;v=1,2,3,4".
    #[arg(long, global = true)]
    params: Option<String>,
    /// table, json or csv.
    #[arg(long, global = true, default_value = "table")]
    format: String,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Weak Lefschetz test of R/Lambda_{X,d}.
    Wlp,
    /// Hilbert function of R/Lambda_{X,d}.
    Hf,
    /// Measured and predicted cokernel of x l in degree t.
    Coker,
    /// Compare forms from a special locus with generic forms.
    Nll {
        /// generic, plane(i,j), lambda(i), mu(j) or chord(i,j;k,l), 1-based.
        #[arg(long, default_value = "generic")]
        locus: String,
    },
    /// WLP verdicts for d = 1..=dmax as a bit string.
    Bx,
    /// Run the reproduction suite.
    VerifyPaper {
        /// Restrict the suite to grids with sides at most this.
        #[arg(long)]
        a_max: Option<usize>,
    },
}

fn parse_seed(s: &str) -> Result<RandomSeed> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map(RandomSeed).map_err(|_| Error::InvalidArgument(format!("--seed {s:?} is not an integer")))
}

fn config(g: &Global) -> Result<RunConfig> {
    let field = match (&g.prime, g.rational) {
        (_, true) => FieldMode::Rational,
        (Some(p), false) => parse_prime(p)?,
        (None, false) => FieldMode::default(),
    };
    Ok(RunConfig {
        a: g.a,
        b: g.b,
        d: g.d,
        t: g.t,
        field,
        trials: g.trials,
        seed: g.seed.as_deref().map(parse_seed).transpose()?.unwrap_or(DEFAULT_SEED),
        params: g.params.as_deref().map(str::parse::<ParamsOverride>).transpose()?,
        format: g.format.parse::<OutputFormat>()?,
        out: g.out.clone(),
    })
}

fn run(cli: &Cli) -> Result<Output> {
    let cfg = config(&cli.global)?;
    match &cli.command {
        Command::Wlp => commands::cmd_wlp(&cfg),
        Command::Hf => commands::cmd_hf(&cfg),
        Command::Coker => commands::cmd_coker(&cfg),
        Command::Nll { locus } => commands::cmd_nll(&cfg, locus.parse::<Locus>()?),
        Command::Bx => {
            let d_max = cli.global.dmax.or(cli.global.d).ok_or_else(|| Error::InvalidArgument("--dmax is required".into()))?;
            commands::cmd_bx(&cfg, d_max)
        }
        Command::VerifyPaper { a_max } => {
            let table = cfg.format == OutputFormat::Table;
            commands::cmd_verify_paper(&cfg, *a_max, |c| {
                if table {
                    eprintln!("{}", c.line());
                }
            })
        }
    }
}

fn exit(status: i32) -> ExitCode {
    ExitCode::from(u8::try_from(status).unwrap_or(1))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return exit(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    match run(&cli) {
        Ok(output) => {
            if let Some(path) = &cli.global.out {
                if let Err(e) = std::fs::write(path, &output.text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return exit(EXIT_USAGE);
                }
            } else {
                print!("{}", output.text);
            }
            exit(output.status)
        }
        Err(e) => {
            eprintln!("{}", commands::error_message(&e));
            exit(commands::exit_code(&e))
        }
    }
}
