//! `rota`: verify Rota-Baxter operators, O-operators and their graded and
//! homotopy generalizations on concrete inputs.

mod commands;
mod inputs;
mod suite;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rota_core::homotopy::DEFAULT_P_MAX;

#[derive(Parser, Debug)]
#[command(name = "rota", version, about = "Exact verification of Rota-Baxter and O-operator identities")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Highest weight for truncated graded and homotopy checks.
    #[arg(long, global = true, default_value_t = DEFAULT_P_MAX)]
    pub p_max: usize,
    /// Highest arity the ungraded bracket may produce.
    #[arg(long, global = true, default_value_t = rota_core::deformation::DEFAULT_MAX_ARITY)]
    pub arity_max: usize,
    /// Print reports as JSON.
    #[arg(long, global = true)]
    pub json_report: bool,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Run searches in parallel.
    #[arg(long, global = true)]
    pub parallel: bool,
    /// Extra input files whose entities can be referenced by name.
    #[arg(short, long = "input", global = true)]
    pub inputs: Vec<String>,
    /// Write produced entities here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<String>,
}

/// Entity references: `FILE`, `FILE#NAME` or `NAME`.
#[derive(Args, Debug, Clone, Default)]
pub struct Refs {
    #[arg(long)]
    pub algebra: Option<String>,
    /// Representation, or `adjoint`.
    #[arg(long)]
    pub rep: Option<String>,
    #[arg(long)]
    pub op: Option<String>,
    #[arg(long)]
    pub sgla: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct Pair {
    #[command(flatten)]
    pub refs: Refs,
    #[arg(long)]
    pub left: Option<String>,
    #[arg(long)]
    pub right: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Antisymmetry and Jacobi identity.
    CheckLie(Refs),
    /// Representation axiom.
    CheckRep(Refs),
    /// Weight-zero Rota-Baxter identity of an endomorphism.
    CheckRbo(Refs),
    /// O-operator identity with respect to a representation.
    CheckOop(Refs),
    /// Bracket of two alternating maps; emits an `alt_map`.
    Bracket(Pair),
    /// Maurer-Cartan equation of an operator in the deformation complex.
    McCheck(Refs),
    /// Whether `T + T'` is again an O-operator, through the deformation equation.
    Deform {
        #[command(flatten)]
        refs: Refs,
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        delta: Option<String>,
    },
    /// Pre-Lie product induced by an O-operator; emits a `prelie`.
    InducePrelie(Refs),
    /// Left-symmetry of a pre-Lie product.
    CheckPrelie {
        #[arg(long)]
        product: Option<String>,
    },
    /// Matsushima-Nijenhuis bracket of two hooked maps; emits a `hooked_map`.
    MnBracket {
        #[arg(long)]
        left: Option<String>,
        #[arg(long)]
        right: Option<String>,
    },
    /// Image of an alternating map under Φ; emits a `hooked_map`.
    Phi {
        #[command(flatten)]
        refs: Refs,
        #[arg(long)]
        map: Option<String>,
    },
    /// Φ(⟦f,g⟧) = [Φf, Φg] on a pair of alternating maps.
    CheckPhiHom(Pair),
    /// All Rota-Baxter operators with entries from a grid; emits operators.
    SearchRbo {
        #[command(flatten)]
        refs: Refs,
        /// Comma-separated rationals.
        #[arg(long, default_value = "-1,0,1", allow_hyphen_values = true)]
        grid: String,
        #[arg(long, default_value_t = rota_core::lie::DEFAULT_SEARCH_CAP)]
        cap: u128,
    },
    /// Homogeneity, graded symmetry and graded Leibniz rule.
    CheckSgla(Refs),
    /// Differential compatibility; the differential is an `operator` on the algebra.
    CheckSdgla {
        #[command(flatten)]
        refs: Refs,
        #[arg(long)]
        differential: Option<String>,
    },
    /// Degree and homomorphism conditions of a graded representation.
    CheckGradedRep(Refs),
    /// A Lie algebra (and optional representation) placed in degree -1; emits an `sgla`.
    FromLie(Refs),
    /// Generalized Rota-Baxter identities through weight `--p-max`.
    CheckHoop(Refs),
    /// Homotopy Rota-Baxter identities for the graded adjoint action.
    CheckHrbo(Refs),
    /// Graded bracket of two cochains; emits a `cochain`.
    GradedBracket(Pair),
    /// Maurer-Cartan equation of a homotopy operator.
    McCheckHomotopy(Refs),
    /// Pre-Lie∞ operations induced by a verified homotopy operator; emits a `prelie_infinity`.
    InducePrelieInf {
        #[command(flatten)]
        refs: Refs,
        /// Verification order; defaults to twice the truncation, capped.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Graded symmetry and coherence identities through `--p-max` arguments.
    CheckPrelieInf {
        #[arg(long)]
        prelie_inf: Option<String>,
    },
    /// Ψ(⟦f,g⟧) = [Ψf, Ψg] on a pair of cochains.
    CheckPsiHom(Pair),
    /// Randomized property checks on the bundled catalog, seeded by `--seed`.
    Suite {
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
