use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A single failed invariant of a trisection parameter tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoSurfaceBoundary,
    NoBoundaryComponents,
    ClosedPage {
        index: usize,
    },
    BoundarySum {
        pages: u64,
        surface: u32,
    },
    NegativeBaseGenus {
        g_base: i64,
    },
    TooFewCompressions {
        n: i64,
        needed: i64,
    },
    NegativeStabilizations {
        s: i64,
        surface_genus: u32,
        g_base: i64,
    },
    BadLetter {
        index: usize,
        letter: usize,
        reason: String,
    },
    ClosedGenusBelowK {
        g: u32,
        k: u32,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoSurfaceBoundary => write!(f, "trisection surface has no boundary (b = 0)"),
            Violation::NoBoundaryComponents => write!(f, "no boundary open books (m = 0)"),
            Violation::ClosedPage { index } => {
                write!(f, "boundary {index}: closed page (page boundary = 0)")
            }
            Violation::BoundarySum { pages, surface } => {
                write!(f, "sum of page boundaries {pages} != surface boundary {surface}")
            }
            Violation::NegativeBaseGenus { g_base } => write!(f, "g_base = {g_base} < 0"),
            Violation::TooFewCompressions { n, needed } => {
                write!(f, "n = {n} < m - 1 = {needed}")
            }
            Violation::NegativeStabilizations {
                s,
                surface_genus,
                g_base,
            } => write!(f, "s = G - g_base = {surface_genus} - {g_base} = {s} < 0"),
            Violation::BadLetter { index, letter, reason } => {
                write!(f, "boundary {index}, word letter {letter}: {reason}")
            }
            Violation::ClosedGenusBelowK { g, k } => write!(f, "closed genus g = {g} < k = {k}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("homology class has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("page component {index} does not exist ({count} components)")]
    NoSuchComponent { index: usize, count: usize },

    #[error("sign must be +1 or -1, got {0}")]
    BadSign(i64),

    #[error("page {index} has a single binding circle; different-bindings stabilization needs two")]
    SingleBindingCircle { index: usize },

    #[error("page {index} is closed")]
    ClosedPage { index: usize },

    #[error("invalid trisection: {}", join(.0))]
    Invalid(Vec<Violation>),

    #[error("cannot mix closed and relative trisections in {0}")]
    MixedKinds(&'static str),

    #[error("pairing is empty")]
    EmptyPairing,

    #[error("pairing is not injective: index {index} used twice on the {side} side")]
    NonInjectivePairing { side: &'static str, index: usize },

    #[error("open books of pair {x}:{w} are incompatible: {reason}")]
    Incompatible { x: usize, w: usize, reason: String },

    #[error("cannot glue {circles} circles: only {available} boundary circles available")]
    TooManyCircles { circles: u32, available: u32 },

    #[error("euler characteristic not additive: {got} != {expected} ({ledger})")]
    EulerMismatch { got: i64, expected: i64, ledger: String },

    #[error("glued result failed validation: {violations} ({ledger})", violations = join(.violations))]
    GluedInvalid { violations: Vec<Violation>, ledger: String },

    #[error("morphism source {0:?} is not a subset of the boundary indices")]
    BadSource(Vec<usize>),

    #[error("cannot compose: {0} target components vs {1} source components")]
    ArityMismatch(usize, usize),

    #[error("vanishing cycle {0} is null-homologous")]
    ZeroCycle(usize),

    #[error("lefschetz fiber must have nonempty boundary")]
    ClosedFiber,

    #[error("need at least m - 1 = {needed} one-handles, got {h1}")]
    TooFewOneHandles { h1: u64, needed: u64 },

    #[error("crossing count {c} is below the 2-handle count {h2}")]
    TooFewCrossings { c: u64, h2: u64 },

    #[error("no Lefschetz singularities left to wrinkle")]
    NothingToWrinkle,
}

fn join(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}
