mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "lya", version, about = "Universal algebras, modules and symmetries of Lie-Yamaguti algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone)]
pub struct Common {
    /// Monomial order for presentations
    #[arg(long, global = true, value_enum, default_value_t = Order::Degrevlex)]
    pub order: Order,
    /// Degree cap for Gröbner computations (default: per ideal)
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub degree_cap: Option<u32>,
    /// Seed for randomized runs; recorded in every report
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Order {
    Degrevlex,
    Lex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Target {
    CasScript,
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check LY1-LY6 on a structure-constant file
    Validate {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Universal polynomials P and Q of A(L, K)
    Universal {
        #[arg(long = "L")]
        l: PathBuf,
        /// defaults to L
        #[arg(long = "K")]
        k: Option<PathBuf>,
        /// write the canonical presentation dump here
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Certify that the ideal of A(L) is a coideal
    Bialgebra {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Check the comodule identities of the universal coaction
    Comodule {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Truncated Hopf envelope and antipode certification
    Hopf {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        depth: u32,
        #[arg(long)]
        dump: Option<PathBuf>,
        /// also check that S² maps each generator into the ideal
        #[arg(long)]
        s_squared: bool,
    },
    /// Check R1-R7 on a module file
    ModuleValidate {
        #[arg(long)]
        module: PathBuf,
    },
    /// Induced module U ⊗ W from a matrix point of A(L, K)
    Induce {
        #[arg(long)]
        module: PathBuf,
        /// a matrix (scalar point) or {"dim": w, "images": [[s, i, matrix], ...]}
        #[arg(long)]
        point: PathBuf,
        /// defaults to the algebra U is over
        #[arg(long = "K")]
        k: Option<PathBuf>,
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Presentation of the universal module U(U, V)
    UniversalModule {
        #[arg(long = "U")]
        u: PathBuf,
        #[arg(long = "V")]
        v: PathBuf,
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Automorphism check, directly and through points of A(L)
    Autocheck {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long, required_unless_present = "random")]
        matrix: Option<PathBuf>,
        /// check this many random integer matrices instead
        #[arg(long, conflicts_with = "matrix")]
        random: Option<usize>,
        /// entries of random matrices lie in -range..=range
        #[arg(long, default_value_t = 1)]
        range: i64,
    },
    /// Diagonal gradings by a finite abelian group
    Gradings {
        #[arg(long)]
        algebra: PathBuf,
        /// e.g. 2x2
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = lya_core::symmetry::DEFAULT_GROUP_CAP)]
        group_cap: usize,
    },
    /// Export a presentation for an external system
    Export {
        #[arg(long = "L")]
        l: PathBuf,
        #[arg(long = "K")]
        k: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Target::CasScript)]
        target: Target,
        #[arg(long)]
        dump: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let c = &cli.common;
    let outcome = match cli.command {
        Command::Validate { algebra } => commands::validate(c, &algebra),
        Command::Universal { l, k, dump } => commands::universal(c, &l, k.as_deref(), dump.as_deref()),
        Command::Bialgebra { algebra } => commands::bialgebra(c, &algebra),
        Command::Comodule { algebra, dump } => commands::comodule(c, &algebra, dump.as_deref()),
        Command::Hopf { algebra, depth, dump, s_squared } => {
            commands::hopf(c, &algebra, depth, dump.as_deref(), s_squared)
        }
        Command::ModuleValidate { module } => commands::module_validate(c, &module),
        Command::Induce { module, point, k, dump } => {
            commands::induce(c, &module, &point, k.as_deref(), dump.as_deref())
        }
        Command::UniversalModule { u, v, dump } => commands::universal_module(c, &u, &v, dump.as_deref()),
        Command::Autocheck { algebra, matrix, random, range } => {
            commands::autocheck(c, &algebra, matrix.as_deref(), random, range)
        }
        Command::Gradings { algebra, group, group_cap } => commands::gradings(c, &algebra, &group, group_cap),
        Command::Export { l, k, target, dump } => commands::export(c, &l, k.as_deref(), target, dump.as_deref()),
    };
    match outcome {
        Ok(report) => {
            let text = match c.format {
                Format::Text => report.render_text(),
                Format::Json => report.render_json(),
            };
            print!("{text}");
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
