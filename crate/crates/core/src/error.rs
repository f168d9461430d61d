use num_bigint::BigUint;
use thiserror::Error;

use crate::constructor::ConstructionPlan;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Parse(String),

    #[error("edge {index}: {reason}")]
    InvalidEdge { index: usize, reason: String },

    #[error("edge {index} duplicates an earlier edge")]
    DuplicateEdge { index: usize },

    #[error("hypergraph must have at least one vertex")]
    NoVertices,

    #[error("operation requires a uniform hypergraph")]
    NotUniform,

    #[error("cannot shrink a hypergraph from {from} to {to} vertices")]
    CannotShrink { from: usize, to: usize },

    #[error("{what}: {required} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, required: BigUint, cap: u64 },

    #[error("unsupported projective plane order {q}; supported orders are 1 and the primes (2, 3, 5, 7, 11, ...)")]
    UnsupportedOrder { q: u64 },

    #[error("node budget exhausted after {nodes} nodes; cover number lies in [{lower}, {upper}]")]
    BudgetExhausted { lower: usize, upper: usize, nodes: u64 },

    #[error("n < 2r-1: no such hypergraph exists (n = {n}, r = {r})")]
    NoSuchHypergraph { n: usize, r: usize },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("no feasible construction plan within the edge cap{}", cheapest_suffix(.cheapest))]
    NoFeasiblePlan { cheapest: Option<Box<ConstructionPlan>> },

    #[error("input is not critical: {0}")]
    NotCritical(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

fn cheapest_suffix(plan: &Option<Box<ConstructionPlan>>) -> String {
    match plan {
        Some(p) => format!(" (cheapest candidate: {} vertices, {} edges)", p.predicted_vertices, p.predicted_edges),
        None => String::new(),
    }
}

impl Error {
    /// True for errors caused by malformed or inconsistent input data, as
    /// opposed to infeasible parameters or exhausted resources.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::InvalidEdge { .. } | Error::DuplicateEdge { .. } | Error::NoVertices)
    }
}
