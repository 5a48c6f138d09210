use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use critnum::crosscheck::GenConfig;
use critnum::LanglandsParam;
use critnum_cli::{
    cmd_branch, cmd_convert, cmd_crit, cmd_fuzz, cmd_trace, parse_pair, Engine, FieldViolation,
    Outcome, EXIT_USAGE,
};

/// Critical numbers of Rankin-Selberg pairs, computed three ways.
#[derive(Debug, Parser)]
#[command(name = "critnum", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Critical numbers of a pair read from FILE or standard input.
    Crit {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = EngineArg::All)]
        engine: EngineArg,
    },
    /// Every intermediate of the highest-weight pipeline.
    Trace { input: Option<PathBuf> },
    /// Seeded differential campaign across the three engines.
    Fuzz {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 4)]
        m_max: usize,
        #[arg(long, default_value_t = 20)]
        l_bound: i64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, env = "CRITNUM_SEED", default_value_t = 42)]
        seed: u64,
    },
    /// Convert a weight to a parameter (--mu) or back (--w and --l).
    Convert {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with_all = ["w", "l"])]
        mu: Option<Vec<i64>>,
        #[arg(long, allow_hyphen_values = true, requires = "l")]
        w: Option<i64>,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            requires = "w"
        )]
        l: Option<Vec<i64>>,
    },
    /// Branches of --alpha, or the interval Emb(--beta, --alpha).
    Branch {
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        alpha: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        beta: Option<Vec<i64>>,
        /// Also list the multiplicities of det^s in M_beta ⊗ M_alpha^∨.
        #[arg(long, requires = "beta")]
        tate: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EngineArg {
    Gamma,
    Inequality,
    Embedding,
    All,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Gamma => Engine::Gamma,
            EngineArg::Inequality => Engine::Inequality,
            EngineArg::Embedding => Engine::Embedding,
            EngineArg::All => Engine::All,
        }
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Outcome> {
    let result = match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text).map(|_| text)
        }
    };
    result.map_err(|e| {
        let source = path.map_or("<stdin>".to_string(), |p| p.display().to_string());
        Outcome::invalid(vec![FieldViolation {
            field: "input".into(),
            rule: "Io",
            index: None,
            message: format!("{source}: {e}"),
        }])
    })
}

fn with_pair(
    path: Option<&PathBuf>,
    f: impl FnOnce(&LanglandsParam, &LanglandsParam) -> Outcome,
) -> Outcome {
    let text = match read_input(path) {
        Ok(t) => t,
        Err(out) => return out,
    };
    match parse_pair(&text) {
        Ok((pi, sigma)) => f(&pi, &sigma),
        Err(v) => Outcome::invalid(v),
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Crit { input, engine } => with_pair(input.as_ref(), |pi, sigma| {
            cmd_crit(pi, sigma, engine.into())
        }),
        Command::Trace { input } => with_pair(input.as_ref(), cmd_trace),
        Command::Fuzz {
            n_max,
            m_max,
            l_bound,
            trials,
            seed,
        } => {
            let cfg = GenConfig {
                n_range: 1..=n_max,
                m_range: 1..=m_max,
                l_bound,
                trials,
                seed,
            };
            cmd_fuzz(&cfg)
        }
        Command::Convert { mu, w, l } => cmd_convert(mu, w, l),
        Command::Branch { alpha, beta, tate } => cmd_branch(&alpha, beta.as_deref(), tate),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE);
        }
        Err(e) => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    let outcome = run(cli);
    println!(
        "{}",
        serde_json::to_string_pretty(&outcome.document).expect("JSON output")
    );
    ExitCode::from(outcome.status)
}
