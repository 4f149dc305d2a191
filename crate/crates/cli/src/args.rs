//! Command-line surface.

use clap::{Parser, Subcommand, ValueEnum};
use equipart_core::dickson::DEFAULT_MONOMIAL_BUDGET;
use equipart_core::jacobian::RowOrder;
use equipart_core::orbits::{Conventions, EpsilonConvention};
use equipart_core::words::CountEngine;
use std::path::PathBuf;

const ELEMENT_HELP: &str = "Group elements are named e, a, b, ab, g, ga, gb, gab: \
a and b reverse the first and second hyperplane orientation, g swaps the \
hyperplanes, and juxtaposition composes right-to-left (ga = apply a, then g).";

/// Decides admissibility of hyperplane mass-equipartition triples
/// (d, j, k) through exact combinatorial invariants: circular-word
/// counts, symmetry orbits of moment-curve solution circles, homology
/// obstruction classes, determinant signs, and ideal-membership bounds
/// over the two-element field.
#[derive(Debug, Parser)]
#[command(name = "equipart", version, after_long_help = ELEMENT_HELP)]
pub struct Args {
    /// Output format: aligned text or machine-readable JSON.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Suppress the leading version header in text output.
    #[arg(long, global = true)]
    pub no_header: bool,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of circular-word counts R(n), P(n), Q(n), A(n) with
    /// parity columns.
    Words {
        /// Largest n in the table.
        #[arg(long, default_value_t = 8)]
        nmax: u64,
        /// Counting engine; the brute-force cross-check enumerates
        /// every word and is meant for small n.
        #[arg(long, value_enum, default_value_t = Engine::Formula)]
        engine: Engine,
    },

    /// Enumerate the solution circles for j measures and two
    /// hyperplanes, with their compressed signed-word cycles.
    Circles {
        /// Measure count; odd, at most 15.
        #[arg(long)]
        j: u32,
    },

    /// Obstruction verdict for (d, j) with two hyperplanes; d must
    /// satisfy 2d - 3j = 1 (free-point pipeline) or 2d - 3j = 0
    /// (type-parity test).
    Obstruction {
        /// Ambient dimension.
        #[arg(long)]
        d: u32,
        /// Measure count.
        #[arg(long)]
        j: u32,
        /// Which quarter-turn direction counts as positive; flipping
        /// must not change any verdict.
        #[arg(long, value_enum, default_value_t = EpsilonArg::Quarter)]
        epsilon_convention: EpsilonArg,
        /// Quadrant row order inside the cut matrix; flipping must not
        /// change any verdict.
        #[arg(long, value_enum, default_value_t = RowOrderArg::Standard)]
        row_order: RowOrderArg,
    },

    /// Cut matrix of a canonical solution word (first letter A, signs
    /// (+,+) implied) and its determinant sign.
    Jacobian {
        /// The word, e.g. AAABBB.
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = RowOrderArg::Standard)]
        row_order: RowOrderArg,
    },

    /// Ideal-membership test over the two-element field: with --d,
    /// decide whether (d, j, k) is certified admissible; without it,
    /// report the least certified dimension.
    Dickson {
        #[arg(long)]
        j: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: Option<u32>,
        /// Cap on monomial products per multiplication step.
        #[arg(long, default_value_t = DEFAULT_MONOMIAL_BUDGET)]
        budget: u64,
    },

    /// All applicable bounds on Delta(j, k) with provenance.
    Bounds {
        #[arg(long)]
        j: u64,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = DEFAULT_MONOMIAL_BUDGET)]
        budget: u64,
    },

    /// Bounds table for a fixed hyperplane count over a range of
    /// measure counts.
    Table {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 15)]
        jmax: u64,
        #[arg(long, default_value_t = DEFAULT_MONOMIAL_BUDGET)]
        budget: u64,
    },

    /// Run the acceptance suite and print one pass/fail line per
    /// criterion.
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Formula,
    Brute,
}

impl From<Engine> for CountEngine {
    fn from(e: Engine) -> Self {
        match e {
            Engine::Formula => CountEngine::Formula,
            Engine::Brute => CountEngine::BruteForce,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EpsilonArg {
    Quarter,
    ThreeQuarter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RowOrderArg {
    Standard,
    Reversed,
}

impl From<RowOrderArg> for RowOrder {
    fn from(r: RowOrderArg) -> Self {
        match r {
            RowOrderArg::Standard => RowOrder::Standard,
            RowOrderArg::Reversed => RowOrder::Reversed,
        }
    }
}

pub fn conventions(epsilon: EpsilonArg, rows: RowOrderArg) -> Conventions {
    Conventions {
        epsilon: match epsilon {
            EpsilonArg::Quarter => EpsilonConvention::QuarterTurn,
            EpsilonArg::ThreeQuarter => EpsilonConvention::ThreeQuarterTurn,
        },
        row_order: rows.into(),
    }
}
