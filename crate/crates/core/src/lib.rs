//! Small critical intersecting hypergraphs: constructions, exact cover numbers,
//! bounds, and brute-force ground truth for tiny parameters.

pub mod bits;
pub mod bounds;
pub mod combinatorics;
pub mod constructor;
pub mod cover;
pub mod error;
pub mod format;
pub mod generators;
pub mod greedy;
pub mod hypergraph;
pub mod oracle;
mod par;
mod serde_big;
pub mod transforms;

pub use constructor::{build_critical, plan_construction, BuildOptions, BuildResult, ConstructionPlan, PlanCase};
pub use cover::{cover_number, is_critical, CoverCertificate, CriticalityReport};
pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, HypergraphStats};
pub use oracle::{brute_force_f, brute_force_u, OracleOptions, OracleResult, Quantity};
