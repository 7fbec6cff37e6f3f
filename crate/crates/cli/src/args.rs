use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::suites::Suite;

#[derive(Debug, Parser)]
#[command(
    name = "rotschur",
    version,
    about = "Rotated permutation sets, quasisymmetric functions and cyclic descents"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Quasisymmetric generating function Q(A) of a permutation set.
    Qfun {
        #[command(flatten)]
        input: SetInput,
        /// Basis for the output.
        #[arg(long, value_enum, default_value_t = Basis::F)]
        basis: Basis,
    },
    /// Schur expansion of Q(A); exits 1 with "not symmetric" when there is none.
    Expand {
        #[command(flatten)]
        input: SetInput,
    },
    /// Decide whether Q(A) is Schur-positive.
    Positivity {
        #[command(flatten)]
        input: SetInput,
    },
    /// The closure A C_n (or C_n A with --left-closure) as a multiset.
    Closure {
        #[command(flatten)]
        input: SetInput,
    },
    /// Straighten a rotated tableau of shape λ^□.
    Jdt {
        #[command(flatten)]
        input: TableauInput,
        /// Also print every elementary step.
        #[arg(long)]
        trace: bool,
    },
    /// Inverse straightening of a tableau whose box holds n.
    Ijdt {
        #[command(flatten)]
        input: TableauInput,
    },
    /// Apply ψ(·, k) to a standard tableau of shape λ^□.
    Psi {
        #[command(flatten)]
        input: TableauInput,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        k: i64,
    },
    /// ψ-orbits on SYT(λ^□) with their sizes and cyclic descent sets.
    Orbit {
        /// λ ⊢ n-1, e.g. "3,2".
        lambda: String,
    },
    /// Enumerate standard Young tableaux of a shape.
    Syt {
        /// Outer shape, e.g. "3,2".
        shape: String,
        /// Inner shape of a skew shape.
        #[arg(long, conflicts_with = "boxed")]
        inner: Option<String>,
        /// Use λ^□ instead of λ.
        #[arg(long)]
        boxed: bool,
        /// Print only the number of tableaux.
        #[arg(long)]
        count: bool,
    },
    /// Robinson-Schensted insertion and recording tableaux of a permutation.
    Rsk { perm: String },
    /// Run a named verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        /// Permit nmax above 7; sweeps grow factorially.
        #[arg(long)]
        allow_large: bool,
        /// Seed for the randomized samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Basis {
    F,
    M,
}

/// A permutation set given inline, in a file, or on stdin.
#[derive(Debug, Args)]
pub struct SetInput {
    /// Permutations such as "3142,1423"; use ';' between items when n > 9.
    #[arg(long, conflicts_with = "file")]
    pub set: Option<String>,
    /// Read the set from a file (text or JSON [{perm, mult}]).
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Size of the permutations, needed only for an empty set.
    #[arg(long)]
    pub n: Option<usize>,
    /// Replace A by A C_n.
    #[arg(long, conflicts_with = "left_closure")]
    pub closure: bool,
    /// Replace A by C_n A.
    #[arg(long)]
    pub left_closure: bool,
}

/// A tableau given inline, in a file, or on stdin.
#[derive(Debug, Args)]
pub struct TableauInput {
    /// Rows separated by '/', e.g. "6/135/24" with --boxed, or tableau JSON.
    #[arg(conflicts_with = "file")]
    pub tableau: Option<String>,
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// The first row of the text form is the disconnected box.
    #[arg(long)]
    pub boxed: bool,
}
