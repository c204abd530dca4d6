mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gn3_core::invariants::IndexConvention;
use gn3_core::words::Index;

#[derive(Parser, Debug)]
#[command(name = "gn3", version, about = "Pure braid words, G_n^3 images, invariants and rewrite search")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Which prefix count both index components share.
    #[arg(long, value_enum, default_value_t = Convention::Jkl, global = true)]
    pub index_convention: Convention,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    Jkl,
    Ijl,
}

impl From<Convention> for IndexConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Jkl => IndexConvention::SharedJkl,
            Convention::Ijl => IndexConvention::SharedIjl,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Via {
    Phi,
    TildePhi,
    Pr,
    Pi,
    F,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Braid,
    Gn3,
    Tilde,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Through {
    /// `w(pi(tilde_phi(β)))` over `n + 1`.
    TildePhi,
    /// `w(phi(β))` over `n`.
    Phi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RewriteKind {
    Gn3,
    Tilde,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the image of a word under a homomorphism.
    Map {
        #[arg(long, value_enum)]
        via: Via,
        #[arg(long)]
        n: Index,
        /// Triple kept by `f`.
        #[arg(long, value_parser = parse_triple)]
        triple: Option<[Index; 3]>,
        /// Word text, or `-` for stdin.
        word: String,
    },
    /// Raw and reduced invariant of a word for one selector.
    Invariant {
        #[arg(long)]
        n: Index,
        #[arg(long, value_parser = parse_triple)]
        triple: [Index; 3],
        #[arg(long, value_enum, default_value_t = Kind::Braid)]
        kind: Kind,
        /// Route for braid input.
        #[arg(long, value_enum, default_value_t = Through::TildePhi)]
        through: Through,
        word: String,
    },
    /// Non-cancellability certificates for every `b_ij … b_ij⁻¹` pair.
    Cancellable {
        #[arg(long)]
        n: Index,
        word: String,
    },
    /// Rewrite search, chain verification and rigidity.
    Explore {
        #[command(subcommand)]
        action: Explore,
    },
    /// List the relators of the pure braid group.
    Relators {
        #[arg(long)]
        n: Index,
    },
    /// Every occurrence index of the selected letter.
    Indices {
        #[arg(long)]
        n: Index,
        #[arg(long, value_parser = parse_triple)]
        triple: [Index; 3],
        #[arg(long, value_enum, default_value_t = Kind::Braid)]
        kind: Kind,
        word: String,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Bounds {
    #[arg(long, default_value_t = 8)]
    pub max_length: usize,
    #[arg(long, default_value_t = 1_000_000)]
    pub max_states: usize,
    #[arg(long, default_value_t = 64)]
    pub max_depth: usize,
    #[arg(long)]
    pub allow_insertions: bool,
}

#[derive(Subcommand, Debug)]
pub enum Explore {
    /// Shortest rewrite path between two words.
    Connect {
        #[arg(long)]
        n: Index,
        #[arg(long, value_enum, default_value_t = RewriteKind::Gn3)]
        kind: RewriteKind,
        #[command(flatten)]
        bounds: Bounds,
        from: String,
        to: String,
    },
    /// Check that consecutive words differ by one relation application.
    Chain {
        #[arg(long)]
        n: Index,
        #[arg(long, value_enum, default_value_t = RewriteKind::Gn3)]
        kind: RewriteKind,
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Whether any relation applies without insertions.
    Rigid {
        #[arg(long)]
        n: Index,
        #[arg(long, value_enum, default_value_t = RewriteKind::Gn3)]
        kind: RewriteKind,
        word: String,
    },
}

fn parse_triple(s: &str) -> Result<[Index; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected i,j,k, got `{s}`"));
    }
    let mut out = [0; 3];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|_| format!("`{p}` is not an index"))?;
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(report) => {
            let out = match cli.format {
                Format::Text => report.text,
                Format::Json => serde_json::to_string_pretty(&report.json).expect("serializable"),
            };
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("gn3: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
