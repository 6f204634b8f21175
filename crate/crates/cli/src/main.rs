//! `biq`: command-line access to the quandle and biquandle library.
//!
//! Exit codes: 0 on success, 1 when input is rejected on mathematical
//! grounds or a check fails, 2 on malformed input or usage errors.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "biq", version, about = "Quandles, biquandles and their automorphisms")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Largest group order accepted by group constructors.
    #[arg(long, default_value_t = 64, global = true)]
    pub cap_order: usize,
    /// Largest order accepted by the enumerators.
    #[arg(long, default_value_t = 5, global = true)]
    pub cap_enum: usize,
    /// Largest diagram (in arcs) accepted by `color`.
    #[arg(long, default_value_t = 64, global = true)]
    pub cap_arcs: usize,
    /// Worker threads for searches; defaults to one per core.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check the axioms of a quandle, biquandle or structure JSON file.
    Check {
        file: PathBuf,
        /// For biquandle tables, skip the diagonal axiom.
        #[arg(long)]
        birack: bool,
        /// Report every witness instead of one per axiom.
        #[arg(long)]
        verbose: bool,
    },
    /// Build a quandle or biquandle and print it as JSON.
    #[command(subcommand)]
    Construct(Family),
    /// Automorphism group of a quandle, biquandle or structure.
    Aut {
        file: PathBuf,
        /// Also list every element.
        #[arg(long)]
        elements: bool,
    },
    /// Count colorings of a diagram.
    Color(ColorArgs),
    /// Enumerate small structures as JSON lines.
    #[command(subcommand)]
    Enumerate(EnumerateCmd),
    /// Verbal quandles and biquandles.
    #[command(subcommand)]
    Verbal(VerbalCmd),
    /// Check the set-theoretic Yang-Baxter equation for biquandle tables.
    Ybe { file: PathBuf },
    /// Find an isomorphism between two quandles or two biquandles.
    Iso { a: PathBuf, b: PathBuf },
    /// Quandle coverings and lifts of structures.
    #[command(subcommand)]
    Cover(CoverCmd),
}

#[derive(Subcommand)]
pub enum Family {
    /// x * y = y^-k x y^k
    Conj {
        group: String,
        k: i64,
    },
    /// x * y = y x^-1 y
    Core {
        group: String,
    },
    /// x * y = 2y - x on an abelian group
    Takasaki {
        group: String,
    },
    /// R_n
    Dihedral {
        n: usize,
    },
    /// x * y = φ(x y^-1) y
    Alex {
        group: String,
        aut: String,
    },
    /// T_n
    Trivial {
        n: usize,
    },
    Wada {
        group: String,
    },
    /// Generalized dihedral biquandle for a central automorphism.
    Gendihedral {
        group: String,
        aut: String,
    },
    /// Generalized Alexander biquandle for commuting automorphisms.
    Genalex {
        group: String,
        phi: String,
        psi: String,
    },
    /// Alexander biquandle on Z_n with units s, t.
    Alexbq {
        n: usize,
        s: usize,
        t: usize,
    },
    /// Union quandle, optionally twisted by families σ and τ.
    Union {
        q1: PathBuf,
        q2: PathBuf,
        #[arg(long)]
        sigma: Option<String>,
        #[arg(long)]
        tau: Option<String>,
    },
    /// Constant union biquandle with automorphisms f of Q1 and g of Q2.
    Unionbq {
        q1: PathBuf,
        q2: PathBuf,
        #[arg(long, default_value = "id")]
        f: String,
        #[arg(long, default_value = "id")]
        g: String,
    },
    /// Product biquandle on Q1 × Q2.
    Product {
        q1: PathBuf,
        q2: PathBuf,
        #[arg(long)]
        phi: Option<String>,
        #[arg(long)]
        psi: Option<String>,
        /// Which family is constant.
        #[arg(long, value_enum, default_value_t = Constant::Psi)]
        constant: Constant,
    },
    /// Semidirect biquandle Q1 ⋊ Q2 with ψ : Q2 → Aut(Q1).
    Semidirect {
        q1: PathBuf,
        q2: PathBuf,
        #[arg(long)]
        psi: Option<String>,
    },
    /// Holomorph biquandle of a quandle.
    Holomorph {
        q: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Constant {
    Psi,
    Phi,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("algebra").required(true))]
pub struct ColorArgs {
    /// Diagram file, or a builtin name (unknot, unlink2, unlink3, kink+,
    /// kink-, hopf, trefoil, virtual-hopf).
    #[arg(long)]
    pub diagram: String,
    #[arg(long, group = "algebra")]
    pub quandle: Option<PathBuf>,
    #[arg(long, group = "algebra")]
    pub biquandle: Option<PathBuf>,
    /// Any of the three JSON kinds; structures color as their biquandle.
    #[arg(long, group = "algebra")]
    pub structure: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum EnumerateCmd {
    /// Biquandle structures on the trivial quandle T_n.
    TrivialStructures {
        n: usize,
        /// Print relabeling orbits as index lists after the structures.
        #[arg(long)]
        orbits: bool,
    },
    /// Quandles on {0..n-1}.
    Quandles {
        n: usize,
        /// One representative per isomorphism class.
        #[arg(long)]
        classes: bool,
    },
}

#[derive(Subcommand)]
pub enum VerbalCmd {
    /// Which listed family a pair (u, v) belongs to, with u = x *̄ y, v = x *̲ y.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Whether (u, v) satisfies the birack identities in the free group.
    Birack {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Whether w(x, y) defines a quandle on every group.
    Quandle {
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// All verbal biracks with exponents bounded by `bound`.
    Enumerate {
        #[arg(long, default_value_t = 3)]
        bound: i64,
    },
    /// Evaluate a verbal quandle (`--w`) or biquandle (`--u`, `--v`) on a group.
    Build {
        #[arg(long)]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        w: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
    },
}

#[derive(Subcommand)]
pub enum CoverCmd {
    /// Check that MAP is a covering QT → Q.
    Check {
        qt: PathBuf,
        q: PathBuf,
        #[arg(long)]
        map: String,
    },
    /// Lift a structure on Q along the covering to QT.
    Lift {
        qt: PathBuf,
        q: PathBuf,
        #[arg(long)]
        map: String,
        #[arg(long)]
        structure: PathBuf,
        /// Also test whether automorphisms lift to normalizers of the lift.
        #[arg(long)]
        normalizer: bool,
    },
    /// The image quandle S(Q) of translations and the covering Q → S(Q).
    Image { q: PathBuf },
}

/// Parses `argv` and runs the command, returning the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return 2;
        }
    }
    match commands::dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            commands::exit_code(&e)
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(run(std::env::args_os()) as u8)
}
