use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use subarr::verify::DEFAULT_MAX_SIMPLICES;
use subarr_cli::report::{LatticeText, Output};
use subarr_cli::{exit, input, Failure, Finished, Limits};

/// Combinatorial topology of affine subspace arrangements over Q.
#[derive(Parser)]
#[command(name = "subarr", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Refuse to build Bd(N(L)) with more simplices than this.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_MAX_SIMPLICES)]
    max_simplices: u128,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Intersection semilattice: elements, dimensions, covering relations.
    Lattice { file: PathBuf },
    /// Face counts and Euler characteristics of both simplicial models.
    Models { file: PathBuf },
    /// Build the Morse matching, verify it, and collapse onto Delta(L).
    Collapse {
        file: PathBuf,
        /// Print every elementary collapse.
        #[arg(long)]
        trace: bool,
    },
    /// Complement cohomology, compactified-union homology, duality check.
    Betti { file: PathBuf },
    /// Run every invariant suite on a file or on random arrangements.
    Verify {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        file: Option<PathBuf>,
        #[arg(long, num_args = 2, value_names = ["SEED", "COUNT"])]
        random: Option<Vec<u64>>,
    },
}

fn load(path: &PathBuf) -> Result<subarr::Arrangement, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: exit::PARSE_FAILURE,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    Ok(input::load(&text)?)
}

fn run(cli: &Cli) -> Result<Finished, Failure> {
    let limits = Limits {
        max_simplices: cli.max_simplices,
    };
    match &cli.command {
        Command::Lattice { file } => Ok(subarr_cli::cmd_lattice(&load(file)?)),
        Command::Models { file } => subarr_cli::cmd_models(&load(file)?, limits),
        Command::Collapse { file, trace } => subarr_cli::cmd_collapse(&load(file)?, *trace, limits),
        Command::Betti { file } => Ok(subarr_cli::cmd_betti(&load(file)?)),
        Command::Verify { file: Some(file), .. } => subarr_cli::cmd_verify_file(&load(file)?, limits),
        Command::Verify { random, .. } => {
            let r = random.as_deref().unwrap_or_default();
            Ok(subarr_cli::cmd_verify_random(r[0], r[1] as usize, limits))
        }
    }
}

fn render(out: &Output) -> String {
    let mut text = String::new();
    if let Some(l) = &out.lattice {
        text += &LatticeText(l).to_string();
    }
    for part in [
        out.models.as_ref().map(|r| r.to_string()),
        out.collapse.as_ref().map(|r| r.to_string()),
        out.betti.as_ref().map(|r| r.to_string()),
        out.verify.as_ref().map(|r| r.to_string()),
    ]
    .into_iter()
    .flatten()
    {
        text += &part;
    }
    text
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(exit::PARSE_FAILURE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(done) => {
            if cli.json {
                println!("{}", done.output.to_json());
            } else {
                print!("{}", render(&done.output));
            }
            ExitCode::from(done.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
