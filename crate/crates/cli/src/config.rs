use std::path::PathBuf;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

/// Everything needed to reproduce a run. Embedded verbatim in every report.
#[derive(Parser, Serialize, Deserialize, Debug, Clone, PartialEq)]
#[command(
    name = "walkhde",
    version,
    about = "Exact homomorphism domination exponents and walk inequalities"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Progress on stderr; repeat for more.
    #[arg(short, long, action = ArgAction::Count, global = true)]
    pub verbose: u8,
}

#[derive(Subcommand, Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(rename_all = "kebab-case", tag = "subcommand")]
#[allow(clippy::large_enum_variant)]
pub enum Command {
    /// Compute HDE(F1; F2) for chordal F1 and series-parallel F2.
    Hde {
        /// Graph spec (e.g. union:2*path:0+1*path:3) or graph file.
        #[arg(long)]
        f1: String,
        #[arg(long)]
        f2: String,
    },
    /// Walk statistics of a graph file.
    Walks {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Run one of the inequality or identity checks.
    Verify(VerifyArgs),
    /// Upper and lower certificates for HDE(P_0^2 P_{t+2}^t; P_t) = t + 2.
    Certificate {
        #[arg(long)]
        t: usize,
        /// Number of random polytope vertices for the lower bound.
        #[arg(long, default_value_t = 25)]
        batch: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the polymatroid constraint system of a target graph.
    DumpPolytope {
        #[arg(long)]
        f2: String,
        /// Keep every submodular row instead of replacing separated pairs.
        #[arg(long)]
        unpruned: bool,
    },
    /// Re-run the configuration embedded in an earlier report.
    Replay {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(ValueEnum, Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    BlakleyRoy,
    WalkInequality,
    DensityForm,
    Counterexample,
    LemmaIdentity,
    Chain,
    HdeDefinition,
}

#[derive(ValueEnum, Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Expect {
    Holds,
    Violation,
}

#[derive(Args, Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub mode: Mode,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[command(flatten)]
    pub scope: ScopeArgs,
    /// Check a single graph file instead of a scope.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long)]
    pub f1: Option<String>,
    #[arg(long)]
    pub f2: Option<String>,
    /// Exponent for hde-definition, as p/q, an integer or a decimal.
    #[arg(long)]
    pub c: Option<String>,
    /// Random polytope vertices per t for lemma-identity.
    #[arg(long, default_value_t = 100)]
    pub batch: usize,
    /// Outcome that counts as success. Defaults to a violation for
    /// counterexample and to holds otherwise.
    #[arg(long, value_enum)]
    pub expect: Option<Expect>,
}

#[derive(Args, Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ScopeArgs {
    /// All labeled graphs on 1..=N vertices.
    #[arg(long, value_name = "N")]
    pub exhaustive_n: Option<usize>,
    /// Paths and stars on at most N vertices.
    #[arg(long, value_name = "N")]
    pub stars_and_paths: Option<usize>,
    /// Regular labeled graphs on 1..=N vertices.
    #[arg(long, value_name = "N")]
    pub regular: Option<usize>,
    /// Number of Erdős–Rényi samples.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Order of sampled graphs.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value = "1/2")]
    pub edge_prob: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
