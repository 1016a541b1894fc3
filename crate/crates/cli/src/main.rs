//! `qmoduli`: command-line front end for the quadric-moduli engine.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 on verification failure.
//! All payloads are pure functions of the arguments and the engine version;
//! warnings go to stderr so cached and fresh outputs stay byte-identical.

mod cache;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use quadric_moduli::moduli::PairConfig;
use quadric_moduli::verify::{run_all, Scope};
use quadric_moduli::Error;

#[derive(Parser)]
#[command(
    name = "qmoduli",
    version,
    about = "Exact tensor-square, centre-weight and moduli-dimension reports \
             for embeddings of Gr_m(C^{m+2}) into quadrics"
)]
struct Cli {
    /// Cache file (overrides QMODULI_CACHE)
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,

    /// Disable the cache even if QMODULI_CACHE is set
    #[arg(long, global = true)]
    no_cache: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone, Copy)]
struct PairArgs {
    /// Grassmannian parameter (m >= 2)
    #[arg(long)]
    m: u32,

    /// Embedding degree (k >= 1)
    #[arg(long)]
    k: u32,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Component table of the tensor square of the section space
    Decompose(PairArgs),
    /// Symmetric/exterior split of the tensor square
    SquareSplit(PairArgs),
    /// Centre weights of the component lowest-weight vectors
    CenterWeights(PairArgs),
    /// Two-stage determination of the invariantly generated module
    Gs(PairArgs),
    /// Full report with dimensions and published-formula cross-checks
    Report(PairArgs),
    /// Run the self-verification suite
    Verify {
        #[arg(long, value_enum, default_value_t = ScopeArg::Quick)]
        scope: ScopeArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Quick,
    Full,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version requests are successes, everything else is
            // a usage error
            if matches!(
                e.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };

    match run(cli) {
        Ok(code) => code,
        Err(Error::InvalidConfig { m, k }) => {
            eprintln!("error: invalid arguments: need --m >= 2 and --k >= 1, got m={m}, k={k}");
            eprintln!("usage: qmoduli <COMMAND> --m <M> --k <K> [--format <text|json>]");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: internal verification failure: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> quadric_moduli::Result<ExitCode> {
    let cache = cache_from(&cli);

    let (op, pair): (&str, PairArgs) = match cli.command {
        Command::Decompose(a) => ("decompose", a),
        Command::SquareSplit(a) => ("square-split", a),
        Command::CenterWeights(a) => ("center-weights", a),
        Command::Gs(a) => ("gs", a),
        Command::Report(a) => ("report", a),
        Command::Verify { scope } => {
            let scope = match scope {
                ScopeArg::Quick => Scope::Quick,
                ScopeArg::Full => Scope::Full,
            };
            return Ok(run_verify(scope));
        }
    };

    let cfg = PairConfig::new(pair.m, pair.k)?;
    let args = format!(
        "m={},k={},format={}",
        pair.m,
        pair.k,
        match pair.format {
            Format::Text => "text",
            Format::Json => "json",
        }
    );
    let key = cache::content_key(op, &args);
    if let Some(cache) = &cache {
        if let Some(hit) = cache.lookup(&key) {
            print!("{hit}");
            return Ok(ExitCode::SUCCESS);
        }
    }

    let payload = match op {
        "decompose" => render::decompose(cfg, pair.format == Format::Json)?,
        "square-split" => render::square_split(cfg, pair.format == Format::Json)?,
        "center-weights" => render::center_weights(cfg, pair.format == Format::Json)?,
        "gs" => render::gs(cfg, pair.format == Format::Json)?,
        "report" => render::report(cfg, pair.format == Format::Json)?,
        _ => unreachable!(),
    };

    if let Some(cache) = &cache {
        cache.store(op, &args, &key, &payload);
    }
    print!("{payload}");
    Ok(ExitCode::SUCCESS)
}

fn cache_from(cli: &Cli) -> Option<cache::Cache> {
    if cli.no_cache {
        return None;
    }
    let path = cli
        .cache
        .clone()
        .or_else(|| std::env::var_os("QMODULI_CACHE").map(PathBuf::from))?;
    Some(cache::Cache::new(&path))
}

fn run_verify(scope: Scope) -> ExitCode {
    let outcomes = run_all(scope);
    let mut all_passed = true;
    for o in &outcomes {
        // stdout stays a pure function of argv; timings go to stderr
        println!(
            "criterion {} ({}): {}",
            o.id,
            o.name,
            if o.passed { "PASS" } else { "FAIL" }
        );
        eprintln!("criterion {} elapsed: {:.1?}", o.id, o.elapsed);
        for failure in &o.failures {
            println!("  {failure}");
        }
        all_passed &= o.passed;
    }
    if all_passed {
        println!("verify: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("verify: FAILED");
        ExitCode::from(2)
    }
}
