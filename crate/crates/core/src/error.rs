use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid pairing: {0}")]
    InvalidPairing(String),
    #[error("point index {point} out of range 1..={points}")]
    InvalidPoint { point: usize, points: usize },
    #[error("boundary size mismatch: cannot glue {left} points to {right}")]
    SignatureMismatch { left: usize, right: usize },
    #[error("vector length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("weight {0:?} is not dominant (coordinates must be non-increasing)")]
    NotDominant(Vec<i64>),
    #[error("not an element of L_n: sector {sector} requires coordinate sum {expected}, got {got}")]
    SectorMismatch {
        sector: &'static str,
        expected: i64,
        got: i64,
    },
    #[error("coordinate sum {0} is neither 0 nor 1; no sector can be inferred")]
    NoSector(i64),
    #[error("resource limit exceeded: {what} = {value} > cap {cap}")]
    ResourceLimit {
        what: &'static str,
        value: u128,
        cap: u128,
    },
    #[error("graph of radius {have} is too small: {need} required")]
    InsufficientRadius { have: u32, need: u32 },
    #[error("projective collapse requires an even radius, got {0}")]
    OddRadius(u32),
    #[error("graph is not a {0} graph")]
    WrongGroup(&'static str),
    #[error("degenerate fit range [{kmin}, {kmax}] for a series of length {len}")]
    DegenerateRange { kmin: u32, kmax: u32, len: usize },
    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
