//! Error type shared by all modules.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("grid contract violated in {op}: {msg}")]
    GridContract { op: &'static str, msg: String },

    #[error("form degree mismatch in {op}: expected {expected}, found {found}")]
    DegreeMismatch {
        op: &'static str,
        expected: &'static str,
        found: &'static str,
    },

    #[error("fields live on different grids in {0}")]
    GridMismatch(&'static str),

    #[error("empty region [{lo}, {hi}] contains no grid nodes")]
    EmptyRegion { lo: f64, hi: f64 },

    #[error("region violates preconditions of {op}: {msg}")]
    RegionViolation { op: &'static str, msg: String },

    #[error("{op}: Newton iteration failed to converge after {iterations} iterations; residual history {history:?}")]
    NewtonDiverged {
        op: &'static str,
        iterations: usize,
        history: Vec<f64>,
    },

    #[error("shooting bracket failure for the launch constant: {msg}")]
    BracketingFailure { msg: String },

    #[error("matrix not hermitian positive definite in {op} (node {node}, min eigenvalue {min_eig})")]
    NotPositiveDefinite {
        op: &'static str,
        node: usize,
        min_eig: f64,
    },

    #[error("gamma must be hermitian and traceless in {op} (defect {defect})")]
    NotHermitianTraceless { op: &'static str, defect: f64 },

    #[error("gauge transformation singular at node {node} (r={r}, theta={theta}, min singular value {sigma_min})")]
    SingularGauge {
        node: usize,
        r: f64,
        theta: f64,
        sigma_min: f64,
    },

    #[error("background is not rotationally equivariant (defect {defect} at tolerance {tol})")]
    NotEquivariant { defect: f64, tol: f64 },

    #[error("grid too coarse for {op}: needs {needed}, found {found}")]
    TooCoarse {
        op: &'static str,
        needed: usize,
        found: usize,
    },

    #[error("profile not positive on the fit window in {op} (h={value} at r={r})")]
    NonPositiveProfile { op: &'static str, value: f64, r: f64 },

    #[error("linear solve failed in {op}: {msg}")]
    LinearSolve { op: &'static str, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
