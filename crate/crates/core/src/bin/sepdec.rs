use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use sepdec::cli::{run, Algo, Command, Format, InputKind, RunConfig, EXIT_PARSE};

/// Clique minimal separator decomposition of graphs and union join graphs
/// of alpha-acyclic hypergraphs.
///
/// Graph input has one `u v` edge or one lone vertex per line; hypergraph
/// input has one hyperedge per line. Lines starting with `#` are comments.
#[derive(Debug, Parser)]
#[command(name = "sepdec", version)]
struct Args {
    #[arg(value_enum)]
    command: Command,

    /// Input file, or `-` for standard input
    file: PathBuf,

    /// Algorithm (atom-graph: forest-join, forest-join-delta, max-weight,
    /// naive; union-join: forest-join, max-weight, min-weight)
    #[arg(long, value_enum)]
    algo: Option<Algo>,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Recompute with the reference algorithm and exit 3 on a mismatch
    #[arg(long)]
    verify: bool,

    /// Join atoms of different components (atom-graph only)
    #[arg(long)]
    hypergraph_convention: bool,

    /// Input kind for `check`
    #[arg(long, value_enum)]
    input: Option<InputKind>,
}

fn read_input(path: &PathBuf) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(EXIT_PARSE as u8);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    let text = match read_input(&args.file) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("error: {}: {e}", args.file.display());
            return ExitCode::from(EXIT_PARSE as u8);
        }
    };
    let cfg = RunConfig {
        command: args.command,
        algo: args.algo,
        format: args.format,
        verify: args.verify,
        hypergraph_convention: args.hypergraph_convention,
        input: args.input,
    };
    let out = run(&cfg, &text);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
