//! `qchar`: compute, certify and analyse q-characters of fundamental modules.

mod cache;
mod commands;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qchar_core::{LieType, Limits, RootData, TotalOrder};

use cache::Cache;
use commands::{CliError, Context};

#[derive(Parser)]
#[command(name = "qchar", version, about = "Exact q-characters of fundamental representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Algebra {
    /// Lie type: A, B, C, D, E, F or G.
    #[arg(value_name = "TYPE")]
    lie_type: LieType,
    rank: usize,
}

impl Algebra {
    fn root_data(&self) -> Result<RootData, CliError> {
        Ok(RootData::new(self.lie_type, self.rank)?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    HeightLex,
    HeightRevLex,
}

#[derive(Args)]
struct EngineArgs {
    #[arg(long, default_value_t = Limits::default().max_terms)]
    max_terms: usize,
    #[arg(long, default_value_t = Limits::default().max_steps)]
    max_steps: u64,
    /// Tie-break between weights of equal height. The result does not depend on it.
    #[arg(long, value_enum, default_value = "height-lex")]
    order: OrderArg,
    /// Cache directory [default: $QCHAR_CACHE_DIR, then ./qchar-cache].
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    #[arg(long)]
    no_cache: bool,
    /// Store new cache entries gzipped.
    #[arg(long)]
    gzip: bool,
}

impl EngineArgs {
    fn context(&self) -> Context {
        Context {
            limits: Limits { max_terms: self.max_terms, max_steps: self.max_steps },
            order: match self.order {
                OrderArg::HeightLex => TotalOrder::HeightLex,
                OrderArg::HeightRevLex => TotalOrder::HeightRevLex,
            },
            cache: (!self.no_cache).then(|| Cache::new(Cache::resolve_dir(self.cache_dir.as_deref()), self.gzip)),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the character of one fundamental module, or of all of them.
    Compute {
        #[command(flatten)]
        algebra: Algebra,
        #[arg(required_unless_present = "all_nodes")]
        node: Option<usize>,
        #[arg(long, conflicts_with = "node")]
        all_nodes: bool,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Run the structural checks on a character file ("-" reads stdin).
    Verify { input: PathBuf },
    /// Shifts k with 2 <= |k| at which V_i(0) (x) V_j(q^k) is reducible.
    Poles {
        #[command(flatten)]
        algebra: Algebra,
        i: usize,
        j: usize,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Look for extra dominant monomials in a tensor product, e.g. `tensor A 1 -- 1@0 1@2`.
    Tensor {
        #[command(flatten)]
        algebra: Algebra,
        #[arg(last = true, required = true, value_name = "NODE@SHIFT")]
        factors: Vec<String>,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Dual of a fundamental character, compared with the shifted conjugate fundamental.
    Dual {
        #[command(flatten)]
        algebra: Algebra,
        node: usize,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Restrict to the subalgebra on a set of nodes, grouped by the remaining variables.
    Restrict {
        #[command(flatten)]
        algebra: Algebra,
        node: usize,
        /// Comma-separated nodes kept by the restriction.
        #[arg(long, value_delimiter = ',', required = true)]
        subset: Vec<usize>,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Monomial graph of a fundamental character as JSON or Graphviz.
    Graph {
        #[command(flatten)]
        algebra: Algebra,
        node: usize,
        #[arg(long)]
        dot: bool,
        #[command(flatten)]
        engine: EngineArgs,
    },
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }
}

fn execute(command: Command) -> Result<String, CliError> {
    match command {
        Command::Compute { algebra, node, all_nodes, engine } => {
            let rd = algebra.root_data()?;
            let nodes: Vec<usize> = if all_nodes { rd.nodes().collect() } else { node.into_iter().collect() };
            commands::compute(&engine.context(), &rd, &nodes)
        }
        Command::Verify { input } => commands::verify(&read_input(&input)?),
        Command::Poles { algebra, i, j, engine } => commands::poles(&engine.context(), &algebra.root_data()?, i, j),
        Command::Tensor { algebra, factors, engine } => {
            let factors = factors.iter().map(|f| commands::parse_factor(f)).collect::<Result<Vec<_>, _>>()?;
            commands::tensor(&engine.context(), &algebra.root_data()?, &factors)
        }
        Command::Dual { algebra, node, engine } => commands::dual(&engine.context(), &algebra.root_data()?, node),
        Command::Restrict { algebra, node, subset, engine } => {
            commands::restrict(&engine.context(), &algebra.root_data()?, node, &subset)
        }
        Command::Graph { algebra, node, dot, engine } => {
            commands::graph(&engine.context(), &algebra.root_data()?, node, dot)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = execute(cli.command);
    let mut stdout = std::io::stdout().lock();
    match result {
        Ok(out) => {
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            // A failed verification still prints its report.
            if let CliError::Verification(report) = &e {
                let _ = stdout.write_all(report.as_bytes());
            }
            eprintln!("{}", e.diagnostic());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
