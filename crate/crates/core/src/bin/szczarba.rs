use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use szczarba::cli::{self, Command, DiagramKind, Format, RunConfig};
use szczarba::diagram::Family;

#[derive(Parser)]
#[command(author, version, about = "Compute, verify and draw the Szczarba map on standard simplices")]
struct Args {
    #[command(subcommand)]
    command: Cmd,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write the document here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

fn list(s: &str) -> Result<Vec<usize>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|e| format!("`{x}`: {e}")))
        .collect()
}

#[derive(Subcommand)]
enum Cmd {
    /// Sz of the nondegenerate simplex indexed by an injective sequence.
    Compute {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Comma-separated, e.g. `2,1`; empty for the vertex {p,q}.
        #[arg(long, value_parser = list, default_value = "")]
        seq: std::vec::Vec<usize>,
        /// Also print the α table and the operators.
        #[arg(long)]
        explain: bool,
    },
    /// The Hinich map on a subset given with both endpoints, e.g. `0,2,4`.
    Hin {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = list)]
        subset: std::vec::Vec<usize>,
    },
    /// Elements and nerve of one hom poset.
    Hom {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum, default_value = "c")]
        family: Family,
        /// Simplex dimension of the listed chains.
        #[arg(long, default_value_t = 1)]
        length: usize,
        #[arg(long)]
        nondegenerate: bool,
    },
    /// Check the operator formula against the element-wise map for all n <= max-n.
    Verify {
        #[arg(long, env = cli::MAX_N_ENV, default_value_t = cli::DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Category picture, or the two-panel picture of Sz on one hom.
    Diagram {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "category")]
        kind: DiagramKind,
        #[arg(long, value_enum, default_value = "c")]
        family: Family,
        #[arg(long, default_value_t = 0)]
        p: usize,
        /// Defaults to n.
        #[arg(long)]
        q: Option<usize>,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let (command, default_format) = match args.command {
        Cmd::Compute { n, p, q, seq, explain } => {
            (Command::Compute { n, p, q, sequence: seq, explain }, Format::Text)
        }
        Cmd::Hin { n, subset } => (Command::Hin { n, subset }, Format::Text),
        Cmd::Hom { n, p, q, family, length, nondegenerate } => {
            (Command::Hom { n, p, q, family, length, nondegenerate }, Format::Text)
        }
        Cmd::Verify { max_n } => (Command::Verify { max_n }, Format::Text),
        Cmd::Diagram { n, kind, family, p, q } => {
            let q = q.unwrap_or(n);
            (Command::Diagram { n, kind, family, p, q }, Format::Dot)
        }
    };
    let config = RunConfig {
        command,
        format: args.format.unwrap_or(default_format),
        output: args.output,
    };
    match cli::run(&config) {
        Ok(outcome) => {
            if let Err(e) = cli::emit(&outcome, config.output.as_deref()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("usage error: {e}");
            ExitCode::from(2)
        }
    }
}
