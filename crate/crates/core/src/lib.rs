//! Exact strong domination numbers, their vertex-removal stability, the
//! graph families and operations they are studied on, and a harness that
//! checks a registry of claimed formulas and bounds against brute-force
//! ground truth.

pub mod claims;
pub mod enumeration;
pub mod families;
pub mod graph;
pub mod ops;
pub mod stability;
pub mod strongdom;

pub use families::{build, FamilyError, FamilySpec};
pub use graph::{Graph, GraphError, VertexSet};
pub use stability::{
    stability, stability_profile, stability_with, verify_stability_witness, InnerSolver,
    StabilityError, StabilityOptions, StabilityResult, STABILITY_CAP,
};
pub use strongdom::{
    forced_vertices, gamma, gamma_st, gamma_st_bruteforce, gamma_st_bruteforce_with_cap,
    is_dominating, is_strong_dominating, GammaResult, SolverError, BRUTE_FORCE_CAP,
};
