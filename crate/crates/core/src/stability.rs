//! Vertex-removal stability of the strong domination number: the minimum
//! number of vertices whose deletion changes γ_st, with a minimum removal
//! witness, direction of change, and an explicit unbounded case.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::strongdom::{self, each_combination, SolverError};

/// Default order cap for full-exactness stability computation.
pub const STABILITY_CAP: usize = 14;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StabilityError {
    #[error("stability undefined for K_1 (order-1 graph)")]
    UndefinedForSingleton,
    #[error("order {order} exceeds the stability cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("removal set of size {size} out of bounds 1..={max}")]
    WitnessSize { size: usize, max: usize },
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// Which γ_st solver backs the removal search. `BruteForce` is the
/// cross-check mode: errors in the optimized solver cannot leak into a
/// stability value computed this way.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InnerSolver {
    Search,
    BruteForce,
}

#[derive(Clone, Copy, Debug)]
pub struct StabilityOptions {
    pub cap: usize,
    pub solver: InnerSolver,
}

impl Default for StabilityOptions {
    fn default() -> Self {
        StabilityOptions {
            cap: STABILITY_CAP,
            solver: InnerSolver::Search,
        }
    }
}

/// Outcome of the removal search. `Finite` carries the first change found
/// in (size, lexicographic) order; `Unbounded` means no proper nonempty
/// removal changes γ_st, recorded with the conventional value n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum StabilityResult {
    Finite {
        k: usize,
        removal: VertexSet,
        gamma_before: usize,
        gamma_after: usize,
        critical: bool,
    },
    Unbounded {
        conventional_value: usize,
    },
}

impl StabilityResult {
    /// The stability as a number, substituting the conventional value for
    /// the unbounded case.
    pub fn conventional(&self) -> usize {
        match self {
            StabilityResult::Finite { k, .. } => *k,
            StabilityResult::Unbounded { conventional_value } => *conventional_value,
        }
    }

    pub fn finite_k(&self) -> Option<usize> {
        match self {
            StabilityResult::Finite { k, .. } => Some(*k),
            StabilityResult::Unbounded { .. } => None,
        }
    }

    pub fn is_unbounded(&self) -> bool {
        matches!(self, StabilityResult::Unbounded { .. })
    }
}

fn inner_gamma(g: &Graph, solver: InnerSolver) -> Result<usize, SolverError> {
    match solver {
        InnerSolver::Search => Ok(strongdom::gamma_st(g).value),
        InnerSolver::BruteForce => Ok(strongdom::gamma_st_bruteforce(g)?.value),
    }
}

/// st_{γst}(G) with default options (cap 14, optimized inner solver).
pub fn stability(g: &Graph) -> Result<StabilityResult, StabilityError> {
    stability_with(g, &StabilityOptions::default())
}

/// Removal sets are searched by size k = 1, 2, ..., n-1 and within each
/// size in lexicographic order; the first change wins, which makes the
/// witness the lexicographically least among minimum-size ones.
pub fn stability_with(
    g: &Graph,
    opts: &StabilityOptions,
) -> Result<StabilityResult, StabilityError> {
    let n = g.order();
    if n < 2 {
        return Err(StabilityError::UndefinedForSingleton);
    }
    if n > opts.cap {
        return Err(StabilityError::OrderCapExceeded {
            order: n,
            cap: opts.cap,
        });
    }
    let base = inner_gamma(g, opts.solver)?;
    for k in 1..n {
        let mut hit: Option<(VertexSet, usize)> = None;
        let mut failure: Option<SolverError> = None;
        each_combination(n, k, |subset| {
            let removal = VertexSet::from_members(n, subset.iter().copied());
            let reduced = g.delete_vertices(&removal).expect("k < n");
            match inner_gamma(&reduced, opts.solver) {
                Ok(after) if after != base => {
                    hit = Some((removal, after));
                    true
                }
                Ok(_) => false,
                Err(e) => {
                    failure = Some(e);
                    true
                }
            }
        });
        if let Some(e) = failure {
            return Err(e.into());
        }
        if let Some((removal, gamma_after)) = hit {
            return Ok(StabilityResult::Finite {
                k,
                removal,
                gamma_before: base,
                gamma_after,
                critical: gamma_after > base,
            });
        }
    }
    Ok(StabilityResult::Unbounded {
        conventional_value: n,
    })
}

/// True iff deleting `removal` changes γ_st.
pub fn verify_stability_witness(g: &Graph, removal: &VertexSet) -> Result<bool, StabilityError> {
    let n = g.order();
    let size = removal.len();
    if size == 0 || size > n.saturating_sub(1) {
        return Err(StabilityError::WitnessSize {
            size,
            max: n.saturating_sub(1),
        });
    }
    let reduced = g.delete_vertices(removal).expect("size < n");
    Ok(strongdom::gamma_st(&reduced).value != strongdom::gamma_st(g).value)
}

/// Smallest removal size that increases γ_st and smallest that decreases
/// it, either possibly absent. The minimum of the present values equals
/// the stability.
pub fn stability_profile(g: &Graph) -> Result<(Option<usize>, Option<usize>), StabilityError> {
    stability_profile_with(g, &StabilityOptions::default())
}

pub fn stability_profile_with(
    g: &Graph,
    opts: &StabilityOptions,
) -> Result<(Option<usize>, Option<usize>), StabilityError> {
    let n = g.order();
    if n < 2 {
        return Err(StabilityError::UndefinedForSingleton);
    }
    if n > opts.cap {
        return Err(StabilityError::OrderCapExceeded {
            order: n,
            cap: opts.cap,
        });
    }
    let base = inner_gamma(g, opts.solver)?;
    let mut first_increase = None;
    let mut first_decrease = None;
    let mut failure: Option<SolverError> = None;
    for k in 1..n {
        each_combination(n, k, |subset| {
            let removal = VertexSet::from_members(n, subset.iter().copied());
            let reduced = g.delete_vertices(&removal).expect("k < n");
            match inner_gamma(&reduced, opts.solver) {
                Ok(after) => {
                    if after > base && first_increase.is_none() {
                        first_increase = Some(k);
                    }
                    if after < base && first_decrease.is_none() {
                        first_decrease = Some(k);
                    }
                    first_increase.is_some() && first_decrease.is_some()
                }
                Err(e) => {
                    failure = Some(e);
                    true
                }
            }
        });
        if let Some(e) = failure {
            return Err(e.into());
        }
        if first_increase.is_some() && first_decrease.is_some() {
            break;
        }
    }
    Ok((first_increase, first_decrease))
}
