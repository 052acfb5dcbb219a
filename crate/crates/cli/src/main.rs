mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mfcat::catalog::{Catalog, PhaseWindow};
use mfcat::gring::AdeType;

#[derive(Parser, Debug)]
#[command(
    name = "mfcat",
    version,
    about = "Graded matrix factorizations of ADE singularities"
)]
struct Cli {
    /// Worker threads for the parallel sweeps.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the output here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Args, Debug, Clone)]
pub struct TypeArgs {
    /// ADE type, e.g. A3, D5, E8.
    #[arg(long = "type", short = 't')]
    ty: String,
    /// The parameter b of A_l (ignored for D and E).
    #[arg(long, default_value_t = 1)]
    b: u32,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Run every check for one type.
    Verify {
        #[command(flatten)]
        t: TypeArgs,
        /// Random direct sums for the filtration axiom.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// The multiset C(k,k') of a pair of vertices, or one dimension with --n.
    Hom {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        /// dim Hom(M^from_0, M^to_n) instead of the multiset.
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
    },
    /// The full grid of C(k,k'), diffed against the reference table.
    Table3 {
        #[command(flatten)]
        t: TypeArgs,
        /// Compare against the table as printed, without the known errata.
        #[arg(long)]
        printed: bool,
    },
    /// The AR triangle ending at M^k_n.
    Ar {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        n: i64,
    },
    /// Central charges over a phase window.
    Stability {
        #[command(flatten)]
        t: TypeArgs,
        /// Half-open window lo..hi.
        #[arg(long, default_value = "0..1", allow_hyphen_values = true)]
        window: String,
        /// Run the four axioms over the window and fail on a violation.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Orientations, path counts and exceptional collections.
    Quiver {
        #[command(flatten)]
        t: TypeArgs,
        /// principal, opposite, random:SEED, or arrows like "1->2,3->2".
        #[arg(long, default_value = "principal")]
        orientation: String,
        /// Print the path count grid.
        #[arg(long)]
        paths: bool,
        /// Check the exceptional collection for this orientation.
        #[arg(long)]
        collection: bool,
    },
    /// Catalog objects as JSON graded matrix factorizations.
    Export {
        #[command(flatten)]
        t: TypeArgs,
        /// The τ-orbit index of every exported object.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        n: i64,
    },
    /// The catalog data per vertex; `catalog export` is the same as `export`.
    Catalog {
        #[arg(value_parser = ["list", "export"], default_value = "list")]
        action: String,
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        n: i64,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// Some check failed; the report is still printed.
    Failed,
    UnknownType(String),
    BadRange(String),
    Io(String),
    /// The engine rejected an input it should have accepted.
    Math(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Failed | CliError::Math(_) => 1,
            CliError::UnknownType(_) => 2,
            CliError::BadRange(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl TypeArgs {
    pub fn catalog(&self) -> Result<std::sync::Arc<Catalog>, CliError> {
        let ty: AdeType = self
            .ty
            .parse()
            .map_err(|e| CliError::UnknownType(format!("{e}")))?;
        Catalog::get(ty, self.b).map_err(|e| CliError::UnknownType(e.to_string()))
    }
}

pub fn vertex(cat: &Catalog, k: u32) -> Result<u32, CliError> {
    cat.check_vertex(k)
        .map(|_| k)
        .map_err(|e| CliError::BadRange(e.to_string()))
}

pub fn window(s: &str) -> Result<PhaseWindow, CliError> {
    let w: PhaseWindow = s.parse().map_err(|e| CliError::BadRange(format!("{e}")))?;
    if w.lo >= w.hi {
        return Err(CliError::BadRange(format!("empty window {s:?}")));
    }
    Ok(w)
}

/// Output text plus whether every check passed.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let f = cli.format;
    match &cli.verb {
        Verb::Verify { t, samples, seed } => commands::verify(&*t.catalog()?, f, *samples, *seed),
        Verb::Hom { t, from, to, n } => commands::hom(&*t.catalog()?, f, *from, *to, *n),
        Verb::Table3 { t, printed } => commands::table3(&*t.catalog()?, f, *printed),
        Verb::Ar { t, k, n } => commands::ar(&*t.catalog()?, f, *k, *n),
        Verb::Stability {
            t,
            window: w,
            check,
            samples,
            seed,
        } => {
            let cat = t.catalog()?;
            commands::stability(&cat, f, &window(w)?, *check, *samples, *seed)
        }
        Verb::Quiver {
            t,
            orientation,
            paths,
            collection,
        } => commands::quiver(&*t.catalog()?, f, orientation, *paths, *collection),
        Verb::Export { t, n } => commands::export(&*t.catalog()?, f, *n),
        Verb::Catalog { action, t, n } => {
            let cat = t.catalog()?;
            if action == "export" {
                commands::export(&cat, f, *n)
            } else {
                commands::catalog(&cat, f, *n)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("mfcat: {e}");
        }
    }
    let result = run(&cli).and_then(|out| {
        let written = match &cli.output {
            Some(p) => std::fs::write(p, &out.text).map_err(|e| format!("{}: {e}", p.display())),
            None => std::io::stdout()
                .write_all(out.text.as_bytes())
                .map_err(|e| e.to_string()),
        };
        written.map_err(CliError::Io)?;
        if out.ok {
            Ok(())
        } else {
            Err(CliError::Failed)
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Failed => eprintln!("mfcat: checks failed"),
                CliError::UnknownType(m)
                | CliError::BadRange(m)
                | CliError::Io(m)
                | CliError::Math(m) => {
                    eprintln!("mfcat: {m}")
                }
            }
            ExitCode::from(e.code())
        }
    }
}
