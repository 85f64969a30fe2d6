//! A registry of checkable claims about γ_st and its stability, each
//! evaluated against exact computation and, for every reported
//! counterexample, re-verified by the brute-force oracle before the
//! verdict is finalized. Verdicts are deterministic for a fixed
//! configuration regardless of worker count.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::enumeration::{self, graph_from_code, labeled_graph_count, pair_count};
use crate::families::{build, FamilySpec};
use crate::graph::{Graph, VertexSet};
use crate::ops;
use crate::stability::{stability_with, InnerSolver, StabilityOptions, StabilityResult};
use crate::strongdom::{gamma, gamma_st, gamma_st_bruteforce, is_strong_dominating};

/// Reported counterexamples per claim are capped; the total count is
/// always exact.
pub const MAX_REPORTED_COUNTEREXAMPLES: usize = 50;

/// Stability cap used by the harness: large enough for st(C_15) while
/// keeping every inner graph within the brute-force oracle's reach.
const HARNESS_STABILITY_CAP: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClaimError {
    #[error("unknown claim id {0:?}; run list_claims() for the registry")]
    UnknownClaim(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ClaimStatus {
    Pass,
    Mismatch,
    Skipped,
    Error,
}

impl std::fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ClaimStatus::Pass => "PASS",
            ClaimStatus::Mismatch => "MISMATCH",
            ClaimStatus::Skipped => "SKIPPED",
            ClaimStatus::Error => "ERROR",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub graph: String,
    pub claimed: String,
    pub computed: String,
    pub oracle_verified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimVerdict {
    pub claim_id: String,
    pub description: String,
    pub scope: String,
    pub status: ClaimStatus,
    /// Reason for SKIPPED / ERROR.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub counterexamples: Vec<Counterexample>,
    pub total_violations: usize,
    pub notes: Vec<String>,
    /// Wall time; kept out of the JSON rendering so reports stay
    /// byte-identical across runs.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ClaimVerdict {
    fn new(id: &str, description: &str, scope: String) -> Self {
        ClaimVerdict {
            claim_id: id.to_string(),
            description: description.to_string(),
            scope,
            status: ClaimStatus::Pass,
            detail: None,
            counterexamples: Vec::new(),
            total_violations: 0,
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimSummary {
    pub total: usize,
    pub pass: usize,
    pub mismatch: usize,
    pub skipped: usize,
    pub error: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub max_n: usize,
    pub use_oracle: bool,
    pub jobs: Option<usize>,
    pub ranges: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub verdicts: Vec<ClaimVerdict>,
    pub summary: ClaimSummary,
    pub config: ConfigEcho,
    pub timed_out: bool,
}

impl ClaimReport {
    pub fn has_mismatch(&self) -> bool {
        self.summary.mismatch > 0
    }
}

/// Scope settings for the harness. Ranges are inclusive.
#[derive(Clone, Debug)]
pub struct CheckConfig {
    /// All labeled graphs of order 2..=max_n enter the general sweeps.
    pub max_n: usize,
    /// Swap every inner γ_st call to the brute-force oracle.
    pub use_oracle: bool,
    pub time_limit: Option<Duration>,
    /// Worker count, echoed into the report; the caller installs the pool.
    pub jobs: Option<usize>,
    pub paths_gamma: (usize, usize),
    pub cycles_gamma: (usize, usize),
    pub wheels_gamma: (usize, usize),
    pub paths_st: (usize, usize),
    pub cycles_st: (usize, usize),
    pub wheels_st: (usize, usize),
    pub friendship_st: (usize, usize),
    pub book_st: (usize, usize),
    /// K_{m,n} is checked for 1 <= m < n <= bipartite_max.
    pub bipartite_max: usize,
    pub balanced_nn: (usize, usize),
    pub cocktail_st: (usize, usize),
    pub join_pairs: usize,
    pub join_order_max: usize,
    pub join_seed: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            max_n: 6,
            use_oracle: false,
            time_limit: None,
            jobs: None,
            paths_gamma: (3, 30),
            cycles_gamma: (3, 30),
            wheels_gamma: (4, 30),
            paths_st: (3, 15),
            cycles_st: (4, 15),
            wheels_st: (5, 12),
            friendship_st: (2, 6),
            book_st: (2, 5),
            bipartite_max: 7,
            balanced_nn: (4, 5),
            cocktail_st: (3, 5),
            join_pairs: 200,
            join_order_max: 5,
            join_seed: 0x5d57_ab00,
        }
    }
}

const BALANCED_GAMMA_CASES: &[(usize, usize)] = &[(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)];
const BALANCED_ST_CASES: &[(usize, usize)] = &[(2, 3), (3, 3), (2, 4)];
const ATTAIN_P_CASES: &[usize] = &[2, 3];
const EVERY_P_CASES: &[usize] = &[3, 4];
const INDEPENDENCE_RANGE: (usize, usize) = (2, 5);
const CORONA_GAMMA_G_MAX: usize = 3;
const CORONA_GAMMA_H_MAX: usize = 2;
const CORONA_ST_G_MAX: usize = 2;
const CORONA_ST_H_MAX: usize = 3;
const PRODUCT_ORDER_MAX: usize = 3;
const JOIN_ST_PAIR_MAX: usize = 3;
const CORPUS_COMPLETE_MAX: usize = 8;

// ---------------------------------------------------------------------
// Shared evaluation context: sweep tables and the family corpus, built
// lazily once per run.
// ---------------------------------------------------------------------

const ST_UNBOUNDED: u8 = 0xFF;

struct Tables {
    /// gamma[n][code] for 1 <= n <= built_through.
    gamma: Vec<Vec<u8>>,
    /// st[n][code] for 2 <= n <= built_through; ST_UNBOUNDED marks
    /// complete graphs.
    st: Vec<Vec<u8>>,
    built_through: usize,
}

impl Tables {
    fn gamma_of(&self, n: usize, code: u64) -> usize {
        self.gamma[n][code as usize] as usize
    }

    /// Stability with the conventional value substituted when unbounded.
    fn st_conventional(&self, n: usize, code: u64) -> usize {
        match self.st[n][code as usize] {
            ST_UNBOUNDED => n,
            k => k as usize,
        }
    }

    fn st_finite(&self, n: usize, code: u64) -> Option<usize> {
        match self.st[n][code as usize] {
            ST_UNBOUNDED => None,
            k => Some(k as usize),
        }
    }

    fn st_is_unbounded(&self, n: usize, code: u64) -> bool {
        self.st[n][code as usize] == ST_UNBOUNDED
    }
}

struct CorpusEntry {
    name: String,
    graph: Graph,
    gamma_st: usize,
    st: StabilityResult,
}

pub(crate) struct CheckCtx<'a> {
    cfg: &'a CheckConfig,
    deadline: Option<Instant>,
    tables: OnceLock<Tables>,
    corpus: OnceLock<Vec<CorpusEntry>>,
}

impl<'a> CheckCtx<'a> {
    fn new(cfg: &'a CheckConfig) -> Self {
        CheckCtx {
            cfg,
            deadline: cfg.time_limit.map(|d| Instant::now() + d),
            tables: OnceLock::new(),
            corpus: OnceLock::new(),
        }
    }

    fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    fn stability_options(&self) -> StabilityOptions {
        StabilityOptions {
            cap: HARNESS_STABILITY_CAP,
            solver: if self.cfg.use_oracle {
                InnerSolver::BruteForce
            } else {
                InnerSolver::Search
            },
        }
    }

    fn gamma_value(&self, g: &Graph) -> Result<usize, String> {
        if self.cfg.use_oracle {
            gamma_st_bruteforce(g)
                .map(|r| r.value)
                .map_err(|e| e.to_string())
        } else {
            Ok(gamma_st(g).value)
        }
    }

    fn st_value(&self, g: &Graph) -> Result<StabilityResult, String> {
        stability_with(g, &self.stability_options()).map_err(|e| e.to_string())
    }

    fn tables(&self) -> &Tables {
        self.tables.get_or_init(|| self.build_tables())
    }

    fn build_tables(&self) -> Tables {
        let max_n = self.cfg.max_n.min(enumeration::ENUMERATION_MAX_ORDER);
        let solver = if self.cfg.use_oracle {
            InnerSolver::BruteForce
        } else {
            InnerSolver::Search
        };
        let opts = StabilityOptions {
            cap: HARNESS_STABILITY_CAP,
            solver,
        };
        let mut gamma_t: Vec<Vec<u8>> = vec![Vec::new(); max_n + 1];
        let mut st_t: Vec<Vec<u8>> = vec![Vec::new(); max_n + 1];
        let mut built_through = 0;
        for n in 1..=max_n {
            if self.expired() {
                break;
            }
            let codes = labeled_graph_count(n);
            gamma_t[n] = (0..codes)
                .into_par_iter()
                .map(|code| {
                    let g = graph_from_code(n, code);
                    let v = match solver {
                        InnerSolver::Search => gamma_st(&g).value,
                        InnerSolver::BruteForce => {
                            gamma_st_bruteforce(&g).expect("order within cap").value
                        }
                    };
                    v as u8
                })
                .collect();
            if n >= 2 {
                st_t[n] = (0..codes)
                    .into_par_iter()
                    .map(|code| {
                        let g = graph_from_code(n, code);
                        match stability_with(&g, &opts).expect("order within cap") {
                            StabilityResult::Finite { k, .. } => k as u8,
                            StabilityResult::Unbounded { .. } => ST_UNBOUNDED,
                        }
                    })
                    .collect();
            }
            built_through = n;
        }
        Tables {
            gamma: gamma_t,
            st: st_t,
            built_through,
        }
    }

    fn corpus(&self) -> &[CorpusEntry] {
        self.corpus.get_or_init(|| self.build_corpus())
    }

    fn build_corpus(&self) -> Vec<CorpusEntry> {
        let cfg = self.cfg;
        let mut specs: Vec<FamilySpec> = Vec::new();
        fn push_range(
            specs: &mut Vec<FamilySpec>,
            (lo, hi): (usize, usize),
            f: fn(usize) -> FamilySpec,
        ) {
            for n in lo..=hi {
                specs.push(f(n));
            }
        }
        push_range(&mut specs, cfg.paths_st, FamilySpec::Path);
        push_range(&mut specs, cfg.cycles_st, FamilySpec::Cycle);
        push_range(&mut specs, cfg.wheels_st, FamilySpec::Wheel);
        push_range(&mut specs, cfg.friendship_st, FamilySpec::Friendship);
        push_range(&mut specs, cfg.book_st, FamilySpec::Book);
        for m in 1..=cfg.bipartite_max {
            for n in m + 1..=cfg.bipartite_max {
                specs.push(FamilySpec::CompleteBipartite(m, n));
            }
        }
        push_range(&mut specs, cfg.balanced_nn, |n| {
            FamilySpec::CompleteBipartite(n, n)
        });
        push_range(&mut specs, cfg.cocktail_st, FamilySpec::CocktailParty);
        for &(p, r) in BALANCED_ST_CASES {
            specs.push(FamilySpec::CompleteMultipartite(vec![p; r]));
        }
        push_range(&mut specs, (2, CORPUS_COMPLETE_MAX), FamilySpec::Complete);
        push_range(&mut specs, (3, 6), FamilySpec::Star);
        push_range(&mut specs, (2, 5), FamilySpec::Matching);
        specs
            .into_par_iter()
            .filter_map(|spec| {
                let g = build(&spec).ok()?;
                if g.order() < 2 || g.order() > HARNESS_STABILITY_CAP {
                    return None;
                }
                let gamma_st_val = self.gamma_value(&g).ok()?;
                let st = self.st_value(&g).ok()?;
                Some(CorpusEntry {
                    name: spec.describe(),
                    graph: g,
                    gamma_st: gamma_st_val,
                    st,
                })
            })
            .collect()
    }
}

fn graph_desc(n: usize, code: u64) -> String {
    let g = graph_from_code(n, code);
    format!("n={n} code={code} edges={:?}", g.edges())
}

// ---------------------------------------------------------------------
// Oracle re-verification of counterexample candidates.
// ---------------------------------------------------------------------

/// Confirms a γ_st-based counterexample against the brute-force oracle.
fn verified_gamma_ce(
    desc: &str,
    g: &Graph,
    claimed: String,
    computed: usize,
) -> Result<Counterexample, String> {
    let oracle =
        gamma_st_bruteforce(g).map_err(|e| format!("cannot oracle-verify {desc}: {e}"))?;
    if oracle.value != computed {
        return Err(format!(
            "solver disagreement on {desc}: search gamma_st={computed}, oracle={}",
            oracle.value
        ));
    }
    Ok(Counterexample {
        graph: desc.to_string(),
        claimed,
        computed: format!("gamma_st={computed}"),
        oracle_verified: true,
    })
}

/// Confirms an st-based counterexample by recomputing stability with the
/// brute-force inner solver.
fn verified_st_ce(
    desc: &str,
    g: &Graph,
    claimed: String,
    computed: &StabilityResult,
) -> Result<Counterexample, String> {
    let opts = StabilityOptions {
        cap: HARNESS_STABILITY_CAP,
        solver: InnerSolver::BruteForce,
    };
    let oracle =
        stability_with(g, &opts).map_err(|e| format!("cannot oracle-verify {desc}: {e}"))?;
    if oracle.conventional() != computed.conventional()
        || oracle.is_unbounded() != computed.is_unbounded()
    {
        return Err(format!(
            "solver disagreement on {desc}: search st={computed:?}, oracle st={oracle:?}"
        ));
    }
    let shown = match computed {
        StabilityResult::Finite { k, .. } => format!("st={k}"),
        StabilityResult::Unbounded { conventional_value } => {
            format!("st=unbounded (conventional {conventional_value})")
        }
    };
    Ok(Counterexample {
        graph: desc.to_string(),
        claimed,
        computed: shown,
        oracle_verified: true,
    })
}

/// Capped counterexample collector that downgrades the verdict to ERROR
/// if any candidate cannot be oracle-verified.
struct Collector {
    ces: Vec<Counterexample>,
    total: usize,
    error: Option<String>,
}

impl Collector {
    fn new() -> Self {
        Collector {
            ces: Vec::new(),
            total: 0,
            error: None,
        }
    }

    fn push(&mut self, candidate: Result<Counterexample, String>) {
        self.total += 1;
        if self.ces.len() >= MAX_REPORTED_COUNTEREXAMPLES {
            return;
        }
        match candidate {
            Ok(ce) => self.ces.push(ce),
            Err(msg) => {
                if self.error.is_none() {
                    self.error = Some(msg);
                }
            }
        }
    }

    fn finish(self, verdict: &mut ClaimVerdict) {
        verdict.total_violations = self.total;
        verdict.counterexamples = self.ces;
        if let Some(msg) = self.error {
            verdict.status = ClaimStatus::Error;
            verdict.detail = Some(msg);
        } else if self.total > 0 {
            verdict.status = ClaimStatus::Mismatch;
            if self.total > MAX_REPORTED_COUNTEREXAMPLES {
                verdict.notes.push(format!(
                    "{} violations found; first {} reported",
                    verdict.total_violations, MAX_REPORTED_COUNTEREXAMPLES
                ));
            }
        }
    }
}

// ---------------------------------------------------------------------
// The registry.
// ---------------------------------------------------------------------

struct ClaimDef {
    id: &'static str,
    description: &'static str,
    run: fn(&CheckCtx, &ClaimDef) -> ClaimVerdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimInfo {
    pub id: &'static str,
    pub description: &'static str,
}

fn registry() -> &'static [ClaimDef] {
    &[
        ClaimDef {
            id: "obs:path-cycle-gamma",
            description: "gamma_st(P_n) = gamma_st(C_n) = ceil(n/3)",
            run: claim_path_cycle_gamma,
        },
        ClaimDef {
            id: "obs:wheel-gamma",
            description: "gamma_st(W_n) = 1 for n >= 4",
            run: claim_wheel_gamma,
        },
        ClaimDef {
            id: "prop:path-st",
            description: "st(P_n) = 1 if n = 0,1 (mod 3), else 2",
            run: claim_path_st,
        },
        ClaimDef {
            id: "prop:cycle-st",
            description: "st(C_n) = 1/2/3 for n = 1/2/0 (mod 3)",
            run: claim_cycle_st,
        },
        ClaimDef {
            id: "prop:wheel-st",
            description: "st(W_n) = 1 for n >= 5",
            run: claim_wheel_st,
        },
        ClaimDef {
            id: "thm:friend-book-gamma",
            description: "gamma_st(F_n) = 1 and gamma_st(B_n) = 2 for n >= 2",
            run: claim_friend_book_gamma,
        },
        ClaimDef {
            id: "prop:friendship-st",
            description: "st(F_n) = 1 for n >= 2",
            run: claim_friendship_st,
        },
        ClaimDef {
            id: "prop:book-st",
            description: "st(B_n) = 1 for n >= 2",
            run: claim_book_st,
        },
        ClaimDef {
            id: "prop:complete-bipartite",
            description: "gamma_st(K_{m,n}) = m and st(K_{m,n}) = 1 for m < n; st(K_{n,n}) = 1 for n >= 4",
            run: claim_complete_bipartite,
        },
        ClaimDef {
            id: "prop:cocktail",
            description: "gamma_st(CP(n)) = 2 and st(CP(n)) = 1 for n >= 3",
            run: claim_cocktail,
        },
        ClaimDef {
            id: "prop:balanced-gamma",
            description: "gamma_st(K_{p,...,p}) = 2 for r >= 2 parts of size p >= 2",
            run: claim_balanced_gamma,
        },
        ClaimDef {
            id: "prop:balanced-st-bounds",
            description: "2 <= st(K_{p,...,p}) <= p+1 for r >= 3 parts of size p >= 2",
            run: claim_balanced_st_bounds,
        },
        ClaimDef {
            id: "thm:attain-p+1",
            description: "st(K_{p,p,p}) = p+1 for p >= 2",
            run: claim_attain_p_plus_1,
        },
        ClaimDef {
            id: "cor:every-p-attained",
            description: "st(K_{p-1,p-1,p-1}) = p for p >= 3",
            run: claim_every_p_attained,
        },
        ClaimDef {
            id: "rem:octahedron",
            description: "st(K_{2,2,2}) = 3",
            run: claim_octahedron,
        },
        ClaimDef {
            id: "thm:independence",
            description: "st and gamma_st are independent (witnesses K_{1,m}, mK_2, K_m)",
            run: claim_independence,
        },
        ClaimDef {
            id: "thm:bound1",
            description: "st(G) <= n - gamma_st(G) + 1",
            run: claim_bound1,
        },
        ClaimDef {
            id: "thm:bound2",
            description: "st(G) <= delta+1 when some minimum-degree vertex has only strictly-higher-degree neighbors",
            run: claim_bound2,
        },
        ClaimDef {
            id: "thm:recursive",
            description: "gamma_st(G-v) = gamma_st(G) implies st(G) <= st(G-v) + 1",
            run: claim_recursive,
        },
        ClaimDef {
            id: "cor:induced-star",
            description: "an induced K_{1,t} (t >= 3) gives st(G) <= n - t + 1 (stated form)",
            run: claim_induced_star_statement,
        },
        ClaimDef {
            id: "cor:induced-star-proof",
            description: "an induced K_{1,t} (t >= 3) gives st(G) <= n - t (proof's concluding form)",
            run: claim_induced_star_proof,
        },
        ClaimDef {
            id: "thm:NG-sum",
            description: "st(G) + st(complement) <= n + 1",
            run: claim_ng_sum,
        },
        ClaimDef {
            id: "thm:NG-prod",
            description: "st(G) * st(complement) <= ((n+2)/2)^2",
            run: claim_ng_prod,
        },
        ClaimDef {
            id: "lem:NG-gamma-prereq",
            description: "gamma_st(G) + gamma_st(complement) <= n + 1",
            run: claim_ng_gamma_prereq,
        },
        ClaimDef {
            id: "thm:char-p+1",
            description: "st(G) = p+1 (connected, p >= 1) implies gamma_st(G) in {1,2} and delta(G) >= p",
            run: claim_char_p_plus_1,
        },
        ClaimDef {
            id: "thm:structure",
            description: "st(G) = p+1 >= 3 (connected) implies kappa >= p, >= p+1 max-degree vertices, and the universal/minimum-set clauses",
            run: claim_structure,
        },
        ClaimDef {
            id: "cor:join-form",
            description: "st(G) = p+1 (p >= 2) and gamma_st(G) = 1 imply exactly p+1 universal vertices",
            run: claim_join_form,
        },
        ClaimDef {
            id: "thm:join-gamma",
            description: "gamma_st(G v H) = 1 with a universal vertex, else 2",
            run: claim_join_gamma,
        },
        ClaimDef {
            id: "thm:join-st",
            description: "st(G v H) = |U| (1 <= |U| < n), n (complete), 1 (U empty)",
            run: claim_join_st,
        },
        ClaimDef {
            id: "thm:corona-gamma",
            description: "gamma_st(G o H) = |V(G)|",
            run: claim_corona_gamma,
        },
        ClaimDef {
            id: "prop:corona-st",
            description: "gamma_st(H) >= 2 implies st(G o H) = 1",
            run: claim_corona_st,
        },
        ClaimDef {
            id: "thm:product-gamma",
            description: "gamma_st(G x H) <= min(|V(H)| gamma_st(G), |V(G)| gamma_st(H))",
            run: claim_product_gamma,
        },
        ClaimDef {
            id: "prop:product-st",
            description: "st(G x H) <= min(|V(H)| st(G), |V(G)| st(H)) for finite factor stabilities",
            run: claim_product_st,
        },
        ClaimDef {
            id: "conj:stability-characterization",
            description: "conjecture clause (i) falsification: st(G) = p+1 iff kappa(G) >= p",
            run: claim_conjecture_clause_i,
        },
    ]
}

/// Static claim registry: ids with descriptions.
pub fn list_claims() -> Vec<ClaimInfo> {
    registry()
        .iter()
        .map(|d| ClaimInfo {
            id: d.id,
            description: d.description,
        })
        .collect()
}

/// Claims the harness is expected to flag as MISMATCH at default ranges;
/// the acceptance suite asserts these are surfaced without hard-coding
/// the computed values.
pub fn expected_mismatches() -> &'static [&'static str] {
    &[
        "rem:octahedron",
        "thm:attain-p+1",
        "cor:every-p-attained",
        "prop:balanced-st-bounds",
        "thm:join-st",
        "thm:char-p+1",
    ]
}

pub fn check_claim(id: &str, cfg: &CheckConfig) -> Result<ClaimVerdict, ClaimError> {
    let def = registry()
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| ClaimError::UnknownClaim(id.to_string()))?;
    let ctx = CheckCtx::new(cfg);
    Ok(run_one(def, &ctx))
}

fn skipped_for_time(def: &ClaimDef) -> ClaimVerdict {
    let mut v = ClaimVerdict::new(def.id, def.description, "not evaluated".to_string());
    v.status = ClaimStatus::Skipped;
    v.detail = Some("time limit exceeded".to_string());
    v
}

fn run_one(def: &ClaimDef, ctx: &CheckCtx) -> ClaimVerdict {
    let start = Instant::now();
    let mut verdict = if ctx.expired() {
        skipped_for_time(def)
    } else {
        (def.run)(ctx, def)
    };
    verdict.elapsed = start.elapsed();
    verdict
}

/// Evaluates every registered claim and assembles the deterministic
/// report. Per-claim failures become SKIPPED/ERROR entries.
pub fn run_suite(cfg: &CheckConfig) -> ClaimReport {
    let ctx = CheckCtx::new(cfg);
    let mut verdicts: Vec<ClaimVerdict> = registry().iter().map(|def| run_one(def, &ctx)).collect();
    cross_link_octahedron(&mut verdicts);
    let summary = ClaimSummary {
        total: verdicts.len(),
        pass: verdicts
            .iter()
            .filter(|v| v.status == ClaimStatus::Pass)
            .count(),
        mismatch: verdicts
            .iter()
            .filter(|v| v.status == ClaimStatus::Mismatch)
            .count(),
        skipped: verdicts
            .iter()
            .filter(|v| v.status == ClaimStatus::Skipped)
            .count(),
        error: verdicts
            .iter()
            .filter(|v| v.status == ClaimStatus::Error)
            .count(),
    };
    let timed_out = verdicts.iter().any(|v| {
        v.detail
            .as_deref()
            .is_some_and(|d| d.contains("time limit exceeded"))
    });
    ClaimReport {
        verdicts,
        summary,
        config: ConfigEcho {
            max_n: cfg.max_n,
            use_oracle: cfg.use_oracle,
            jobs: cfg.jobs,
            ranges: describe_ranges(cfg),
        },
        timed_out,
    }
}

/// prop:cocktail at n=3 and rem:octahedron describe the same graph; the
/// report records the linkage so disagreeing verdicts are visible.
fn cross_link_octahedron(verdicts: &mut [ClaimVerdict]) {
    let find = |vs: &[ClaimVerdict], id: &str| vs.iter().find(|v| v.claim_id == id).map(|v| v.status);
    let cocktail = find(verdicts, "prop:cocktail");
    let octa = find(verdicts, "rem:octahedron");
    if let (Some(c), Some(o)) = (cocktail, octa) {
        let note = format!(
            "cross-link: prop:cocktail at n=3 and rem:octahedron test the same graph \
             CP(3) = K_{{2,2,2}} with contradictory claimed st values (1 vs 3); \
             statuses here: prop:cocktail={c}, rem:octahedron={o}"
        );
        for v in verdicts.iter_mut() {
            if v.claim_id == "prop:cocktail" || v.claim_id == "rem:octahedron" {
                v.notes.push(note.clone());
            }
        }
    }
}

fn describe_ranges(cfg: &CheckConfig) -> Vec<String> {
    vec![
        format!("paths-gamma={}..={}", cfg.paths_gamma.0, cfg.paths_gamma.1),
        format!("cycles-gamma={}..={}", cfg.cycles_gamma.0, cfg.cycles_gamma.1),
        format!("wheels-gamma={}..={}", cfg.wheels_gamma.0, cfg.wheels_gamma.1),
        format!("paths-st={}..={}", cfg.paths_st.0, cfg.paths_st.1),
        format!("cycles-st={}..={}", cfg.cycles_st.0, cfg.cycles_st.1),
        format!("wheels-st={}..={}", cfg.wheels_st.0, cfg.wheels_st.1),
        format!("friendship={}..={}", cfg.friendship_st.0, cfg.friendship_st.1),
        format!("book={}..={}", cfg.book_st.0, cfg.book_st.1),
        format!("bipartite-max={}", cfg.bipartite_max),
        format!("balanced-nn={}..={}", cfg.balanced_nn.0, cfg.balanced_nn.1),
        format!("cocktail={}..={}", cfg.cocktail_st.0, cfg.cocktail_st.1),
        format!(
            "join-pairs={} join-order-max={} join-seed={:#x}",
            cfg.join_pairs, cfg.join_order_max, cfg.join_seed
        ),
    ]
}

// ---------------------------------------------------------------------
// Family-formula claims.
// ---------------------------------------------------------------------

fn family_graph(spec: &FamilySpec) -> Graph {
    build(spec).expect("registry family parameters are valid")
}

/// Runs an st-formula check over a family range: `expected` returns the
/// claimed value for each n.
fn family_st_claim(
    ctx: &CheckCtx,
    def: &ClaimDef,
    range: (usize, usize),
    spec_of: impl Fn(usize) -> FamilySpec,
    expected: impl Fn(usize) -> usize,
    scope_label: &str,
) -> ClaimVerdict {
    let mut verdict = ClaimVerdict::new(
        def.id,
        def.description,
        format!("{scope_label} for n in {}..={}", range.0, range.1),
    );
    let mut col = Collector::new();
    for n in range.0..=range.1 {
        let spec = spec_of(n);
        let g = family_graph(&spec);
        match ctx.st_value(&g) {
            Ok(st) => {
                if st.finite_k() != Some(expected(n)) {
                    col.push(verified_st_ce(
                        &spec.describe(),
                        &g,
                        format!("st={}", expected(n)),
                        &st,
                    ));
                }
            }
            Err(e) => {
                verdict.notes.push(format!("{} skipped: {e}", spec.describe()));
            }
        }
    }
    col.finish(&mut verdict);
    verdict
}

fn claim_path_cycle_gamma(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    let cfg = ctx.cfg;
    let mut verdict = ClaimVerdict::new(
        def.id,
        def.description,
        format!(
            "P_n for n in {}..={}, C_n for n in {}..={}",
            cfg.paths_gamma.0, cfg.paths_gamma.1, cfg.cycles_gamma.0, cfg.cycles_gamma.1
        ),
    );
    let mut col = Collector::new();
    let mut notes = Vec::new();
    let check = |spec: FamilySpec, n: usize, col: &mut Collector, notes: &mut Vec<String>| {
        let g = family_graph(&spec);
        let want = n.div_ceil(3);
        match ctx.gamma_value(&g) {
            Ok(got) if got != want => {
                col.push(verified_gamma_ce(
                    &spec.describe(),
                    &g,
                    format!("gamma_st={want}"),
                    got,
                ));
            }
            Ok(_) => {}
            Err(e) => notes.push(format!("{} skipped: {e}", spec.describe())),
        }
    };
    for n in cfg.paths_gamma.0..=cfg.paths_gamma.1 {
        check(FamilySpec::Path(n), n, &mut col, &mut notes);
    }
    for n in cfg.cycles_gamma.0.max(3)..=cfg.cycles_gamma.1 {
        check(FamilySpec::Cycle(n), n, &mut col, &mut notes);
    }
    verdict.notes.extend(notes);
    col.finish(&mut verdict);
    verdict
}

fn claim_wheel_gamma(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    let cfg = ctx.cfg;
    let mut verdict = ClaimVerdict::new(
        def.id,
        def.description,
        format!("W_n for n in {}..={}", cfg.wheels_gamma.0, cfg.wheels_gamma.1),
    );
    let mut col = Collector::new();
    for n in cfg.wheels_gamma.0.max(4)..=cfg.wheels_gamma.1 {
        let spec = FamilySpec::Wheel(n);
        let g = family_graph(&spec);
        match ctx.gamma_value(&g) {
            Ok(1) => {}
            Ok(got) => col.push(verified_gamma_ce(
                &spec.describe(),
                &g,
                "gamma_st=1".to_string(),
                got,
            )),
            Err(e) => verdict.notes.push(format!("{} skipped: {e}", spec.describe())),
        }
    }
    col.finish(&mut verdict);
    verdict
}

fn claim_path_st(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    let mut verdict = family_st_claim(
        ctx,
        def,
        ctx.cfg.paths_st,
        FamilySpec::Path,
        |n| if n % 3 == 2 { 2 } else { 1 },
        "P_n",
    );
    verdict.notes.push(
        "statement-vs-proof discrepancy: for n = 0 (mod 3) the claim's own case analysis \
         concludes st(P_{3k}) = 2 while the stated formula says 1; this check encodes the \
         stated formula (informational)"
            .to_string(),
    );
    verdict
}

fn claim_cycle_st(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    family_st_claim(
        ctx,
        def,
        (ctx.cfg.cycles_st.0.max(4), ctx.cfg.cycles_st.1),
        FamilySpec::Cycle,
        |n| match n % 3 {
            1 => 1,
            2 => 2,
            _ => 3,
        },
        "C_n",
    )
}

fn claim_wheel_st(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    family_st_claim(
        ctx,
        def,
        (ctx.cfg.wheels_st.0.max(5), ctx.cfg.wheels_st.1),
        FamilySpec::Wheel,
        |_| 1,
        "W_n",
    )
}

fn claim_friend_book_gamma(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    let cfg = ctx.cfg;
    let mut verdict = ClaimVerdict::new(
        def.id,
        def.description,
        format!(
            "F_n for n in {}..={}, B_n for n in {}..={}",
            cfg.friendship_st.0, cfg.friendship_st.1, cfg.book_st.0, cfg.book_st.1
        ),
    );
    let mut col = Collector::new();
    for n in cfg.friendship_st.0..=cfg.friendship_st.1 {
        let spec = FamilySpec::Friendship(n);
        let g = family_graph(&spec);
        match ctx.gamma_value(&g) {
            Ok(1) => {}
            Ok(got) => col.push(verified_gamma_ce(
                &spec.describe(),
                &g,
                "gamma_st=1".to_string(),
                got,
            )),
            Err(e) => verdict.notes.push(format!("{} skipped: {e}", spec.describe())),
        }
    }
    for n in cfg.book_st.0..=cfg.book_st.1 {
        let spec = FamilySpec::Book(n);
        let g = family_graph(&spec);
        match ctx.gamma_value(&g) {
            Ok(2) => {}
            Ok(got) => col.push(verified_gamma_ce(
                &spec.describe(),
                &g,
                "gamma_st=2".to_string(),
                got,
            )),
            Err(e) => verdict.notes.push(format!("{} skipped: {e}", spec.describe())),
        }
    }
    col.finish(&mut verdict);
    verdict
}

fn claim_friendship_st(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    family_st_claim(
        ctx,
        def,
        ctx.cfg.friendship_st,
        FamilySpec::Friendship,
        |_| 1,
        "F_n",
    )
}

fn claim_book_st(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    family_st_claim(ctx, def, ctx.cfg.book_st, FamilySpec::Book, |_| 1, "B_n")
}

fn claim_complete_bipartite(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    let cfg = ctx.cfg;
    let mut verdict = ClaimVerdict::new(
        def.id,
        def.description,
        format!(
            "K_{{m,n}} for 1 <= m < n <= {}; K_{{n,n}} for n in {}..={}",
            cfg.bipartite_max, cfg.balanced_nn.0, cfg.balanced_nn.1
        ),
    );
    let mut col = Collector::new();
    let mut notes = Vec::new();
    for m in 1..=cfg.bipartite_max {
        for n in m + 1..=cfg.bipartite_max {
            let spec = FamilySpec::CompleteBipartite(m, n);
            let g = family_graph(&spec);
            match ctx.gamma_value(&g) {
                Ok(got) if got != m => col.push(verified_gamma_ce(
                    &spec.describe(),
                    &g,
                    format!("gamma_st={m}"),
                    got,
                )),
                Ok(_) => match ctx.st_value(&g) {
                    Ok(st) if st.finite_k() != Some(1) => {
                        col.push(verified_st_ce(&spec.describe(), &g, "st=1".to_string(), &st))
                    }
                    Ok(_) => {}
                    Err(e) => notes.push(format!("{} skipped: {e}", spec.describe())),
                },
                Err(e) => notes.push(format!("{} skipped: {e}", spec.describe())),
            }
        }
    }
    for n in cfg.balanced_nn.0..=cfg.balanced_nn.1 {
        let spec = FamilySpec::CompleteBipartite(n, n);
        let g = family_graph(&spec);
        match ctx.st_value(&g) {
            Ok(st) if st.finite_k() != Some(1) => {
                col.push(verified_st_ce(&spec.describe(), &g, "st=1".to_string(), &st))
            }
            Ok(_) => {}
            Err(e) => notes.push(format!("{} skipped: {e}", spec.describe())),
        }
    }
    verdict.notes.extend(notes);
    col.finish(&mut verdict);
    verdict
}

fn claim_cocktail(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    let cfg = ctx.cfg;
    let mut verdict = ClaimVerdict::new(
        def.id,
        def.description,
        format!("CP(n) for n in {}..={}", cfg.cocktail_st.0, cfg.cocktail_st.1),
    );
    let mut col = Collector::new();
    let mut notes = Vec::new();
    for n in cfg.cocktail_st.0.max(3)..=cfg.cocktail_st.1 {
        let spec = FamilySpec::CocktailParty(n);
        let g = family_graph(&spec);
        match ctx.gamma_value(&g) {
            Ok(got) if got != 2 => col.push(verified_gamma_ce(
                &spec.describe(),
                &g,
                "gamma_st=2".to_string(),
                got,
            )),
            Ok(_) => match ctx.st_value(&g) {
                Ok(st) if st.finite_k() != Some(1) => {
                    col.push(verified_st_ce(&spec.describe(), &g, "st=1".to_string(), &st))
                }
                Ok(_) => {}
                Err(e) => notes.push(format!("{} skipped: {e}", spec.describe())),
            },
            Err(e) => notes.push(format!("{} skipped: {e}", spec.describe())),
        }
    }
    verdict.notes.extend(notes);
    col.finish(&mut verdict);
    verdict
}

fn claim_balanced_gamma(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    let mut verdict = ClaimVerdict::new(
        def.id,
        def.description,
        format!("(p,r) in {BALANCED_GAMMA_CASES:?}"),
    );
    let mut col = Collector::new();
    for &(p, r) in BALANCED_GAMMA_CASES {
        let spec = FamilySpec::CompleteMultipartite(vec![p; r]);
        let g = family_graph(&spec);
        match ctx.gamma_value(&g) {
            Ok(2) => {}
            Ok(got) => col.push(verified_gamma_ce(
                &spec.describe(),
                &g,
                "gamma_st=2".to_string(),
                got,
            )),
            Err(e) => verdict.notes.push(format!("{} skipped: {e}", spec.describe())),
        }
    }
    col.finish(&mut verdict);
    verdict
}

fn claim_balanced_st_bounds(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    let mut verdict = ClaimVerdict::new(
        def.id,
        def.description,
        format!("(p,r) in {BALANCED_ST_CASES:?}"),
    );
    let mut col = Collector::new();
    for &(p, r) in BALANCED_ST_CASES {
        let spec = FamilySpec::CompleteMultipartite(vec![p; r]);
        let g = family_graph(&spec);
        match ctx.st_value(&g) {
            Ok(st) => {
                let v = st.conventional();
                if st.is_unbounded() || !(2..=p + 1).contains(&v) {
                    col.push(verified_st_ce(
                        &spec.describe(),
                        &g,
                        format!("2 <= st <= {}", p + 1),
                        &st,
                    ));
                }
            }
            Err(e) => verdict.notes.push(format!("{} skipped: {e}", spec.describe())),
        }
    }
    col.finish(&mut verdict);
    verdict
}

fn claim_attain_p_plus_1(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    let mut verdict = ClaimVerdict::new(
        def.id,
        def.description,
        format!("p in {ATTAIN_P_CASES:?}, r = 3"),
    );
    let mut col = Collector::new();
    for &p in ATTAIN_P_CASES {
        let spec = FamilySpec::CompleteMultipartite(vec![p; 3]);
        let g = family_graph(&spec);
        match ctx.st_value(&g) {
            Ok(st) if st.finite_k() != Some(p + 1) => col.push(verified_st_ce(
                &spec.describe(),
                &g,
                format!("st={}", p + 1),
                &st,
            )),
            Ok(_) => {}
            Err(e) => verdict.notes.push(format!("{} skipped: {e}", spec.describe())),
        }
    }
    col.finish(&mut verdict);
    verdict
}

fn claim_every_p_attained(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    let mut verdict =
        ClaimVerdict::new(def.id, def.description, format!("p in {EVERY_P_CASES:?}"));
    let mut col = Collector::new();
    for &p in EVERY_P_CASES {
        let spec = FamilySpec::CompleteMultipartite(vec![p - 1; 3]);
        let g = family_graph(&spec);
        match ctx.st_value(&g) {
            Ok(st) if st.finite_k() != Some(p) => {
                col.push(verified_st_ce(&spec.describe(), &g, format!("st={p}"), &st))
            }
            Ok(_) => {}
            Err(e) => verdict.notes.push(format!("{} skipped: {e}", spec.describe())),
        }
    }
    col.finish(&mut verdict);
    verdict
}

fn claim_octahedron(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    let mut verdict = ClaimVerdict::new(
        def.id,
        def.description,
        "K_{2,2,2} (the octahedron)".to_string(),
    );
    let mut col = Collector::new();
    let spec = FamilySpec::CompleteMultipartite(vec![2, 2, 2]);
    let g = family_graph(&spec);
    match ctx.st_value(&g) {
        Ok(st) if st.finite_k() != Some(3) => {
            col.push(verified_st_ce(&spec.describe(), &g, "st=3".to_string(), &st))
        }
        Ok(_) => {}
        Err(e) => verdict.notes.push(format!("{} skipped: {e}", spec.describe())),
    }
    col.finish(&mut verdict);
    verdict
}

fn claim_independence(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    let (lo, hi) = INDEPENDENCE_RANGE;
    let mut verdict = ClaimVerdict::new(
        def.id,
        def.description,
        format!("witness families K_{{1,m}}, mK_2, K_m for m in {lo}..={hi}"),
    );
    let mut col = Collector::new();
    for m in lo..=hi {
        let star = family_graph(&FamilySpec::Star(m));
        let matching = family_graph(&FamilySpec::Matching(m));
        let complete = family_graph(&FamilySpec::Complete(m));
        // Part (i) witnesses: st(K_{1,m}) = st(mK_2) = 1 while gamma_st
        // diverges (1 against m).
        if let Ok(st) = ctx.st_value(&star) {
            if st.finite_k() != Some(1) {
                col.push(verified_st_ce(&format!("S({m})"), &star, "st=1".to_string(), &st));
            }
        }
        if let Ok(st) = ctx.st_value(&matching) {
            if st.finite_k() != Some(1) {
                col.push(verified_st_ce(&format!("M({m})"), &matching, "st=1".to_string(), &st));
            }
        }
        if let Ok(gs) = ctx.gamma_value(&star) {
            if gs != 1 {
                col.push(verified_gamma_ce(
                    &format!("S({m})"),
                    &star,
                    "gamma_st=1".to_string(),
                    gs,
                ));
            }
        }
        if let Ok(gm) = ctx.gamma_value(&matching) {
            if gm != m {
                col.push(verified_gamma_ce(
                    &format!("M({m})"),
                    &matching,
                    format!("gamma_st={m}"),
                    gm,
                ));
            }
        }
        // Part (ii) witnesses: gamma_st(K_m) = gamma_st(K_{1,m-1}) = 1 while
        // st(K_m) is unbounded (conventional m) against st(K_{1,m-1}) = 1.
        if m >= 2 {
            if let Ok(st) = ctx.st_value(&complete) {
                if !st.is_unbounded() {
                    col.push(verified_st_ce(
                        &format!("K({m})"),
                        &complete,
                        "st unbounded (conventional m)".to_string(),
                        &st,
                    ));
                }
            }
        }
    }
    verdict.notes.push(
        "unbounded st values are compared through the conventional value n".to_string(),
    );
    col.finish(&mut verdict);
    verdict
}

// ---------------------------------------------------------------------
// Bound sweeps over all labeled graphs plus the family corpus.
// ---------------------------------------------------------------------

/// Sweep claims need tables from order `lo` up; skip with the right
/// reason (deadline cut the build short, or max_n is configured below
/// the claim's minimum order) rather than report a vacuous PASS.
fn sweep_guard(ctx: &CheckCtx, def: &ClaimDef, lo: usize) -> Option<ClaimVerdict> {
    let configured = ctx.cfg.max_n.min(enumeration::ENUMERATION_MAX_ORDER);
    let t = ctx.tables();
    if t.built_through >= lo {
        return None;
    }
    if t.built_through < configured {
        return Some(skipped_for_time(def));
    }
    let mut v = ClaimVerdict::new(def.id, def.description, "not evaluated".to_string());
    v.status = ClaimStatus::Skipped;
    v.detail = Some(format!(
        "max-n {configured} is below the minimum order {lo} this claim sweeps"
    ));
    Some(v)
}

fn sweep_scope(ctx: &CheckCtx, lo: usize, with_corpus: bool) -> String {
    let t = ctx.tables();
    let total: u64 = (lo..=t.built_through).map(labeled_graph_count).sum();
    let mut s = format!(
        "all {total} labeled graphs with {lo} <= n <= {}",
        t.built_through
    );
    if with_corpus {
        s.push_str(&format!(" plus {} family instances", ctx.corpus().len()));
    }
    s
}

fn claim_bound1(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    if let Some(v) = sweep_guard(ctx, def, 2) {
        return v;
    }
    let t = ctx.tables();
    let mut verdict = ClaimVerdict::new(def.id, def.description, sweep_scope(ctx, 2, true));
    let mut col = Collector::new();
    let mut conv_substitutions = 0usize;
    // Family corpus first so named instances lead the reported list.
    for e in ctx.corpus() {
        if e.st.is_unbounded() {
            conv_substitutions += 1;
        }
        let n = e.graph.order();
        if e.st.conventional() > n - e.gamma_st + 1 {
            col.push(verified_st_ce(
                &e.name,
                &e.graph,
                format!("st <= {}", n - e.gamma_st + 1),
                &e.st,
            ));
        }
    }
    for n in 2..=t.built_through {
        for code in 0..labeled_graph_count(n) {
            let st = t.st_conventional(n, code);
            let gamma_v = t.gamma_of(n, code);
            if t.st_is_unbounded(n, code) {
                conv_substitutions += 1;
            }
            if st > n - gamma_v + 1 {
                let g = graph_from_code(n, code);
                let computed = ctx.st_value(&g).expect("within caps");
                col.push(verified_st_ce(
                    &graph_desc(n, code),
                    &g,
                    format!("st <= {}", n - gamma_v + 1),
                    &computed,
                ));
            }
        }
    }
    verdict.notes.push(format!(
        "conventional value n substituted for unbounded st on {conv_substitutions} complete instances"
    ));
    col.finish(&mut verdict);
    verdict
}

fn claim_bound2(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    if let Some(v) = sweep_guard(ctx, def, 2) {
        return v;
    }
    let t = ctx.tables();
    let mut verdict = ClaimVerdict::new(def.id, def.description, sweep_scope(ctx, 2, false));
    verdict
        .scope
        .push_str("; graphs with a minimum-degree vertex whose neighbors all have larger degree");
    let mut col = Collector::new();
    let mut hypothesis_count = 0usize;
    for n in 2..=t.built_through {
        for code in 0..labeled_graph_count(n) {
            let g = graph_from_code(n, code);
            let delta = g.min_degree();
            let hypothesis = (0..n)
                .any(|v| g.degree(v) == delta && g.neighbors(v).iter().all(|u| g.degree(u) > delta));
            if !hypothesis {
                continue;
            }
            hypothesis_count += 1;
            if t.st_conventional(n, code) > delta + 1 {
                let computed = ctx.st_value(&g).expect("within caps");
                col.push(verified_st_ce(
                    &graph_desc(n, code),
                    &g,
                    format!("st <= delta+1 = {}", delta + 1),
                    &computed,
                ));
            }
        }
    }
    verdict
        .notes
        .push(format!("{hypothesis_count} graphs satisfied the hypothesis"));
    col.finish(&mut verdict);
    verdict
}

fn claim_recursive(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    if let Some(v) = sweep_guard(ctx, def, 3) {
        return v;
    }
    let t = ctx.tables();
    let mut verdict = ClaimVerdict::new(def.id, def.description, sweep_scope(ctx, 3, false));
    verdict.scope.push_str(", all single-vertex deletions");
    let mut col = Collector::new();
    let mut skipped_unbounded = 0usize;
    for n in 3..=t.built_through {
        for code in 0..labeled_graph_count(n) {
            let g = graph_from_code(n, code);
            for v in 0..n {
                let h = g.delete_vertex(v).expect("n >= 3");
                let hcode = enumeration::graph_code(&h);
                if t.gamma_of(n - 1, hcode) != t.gamma_of(n, code) {
                    continue;
                }
                let Some(st_inner) = t.st_finite(n - 1, hcode) else {
                    skipped_unbounded += 1;
                    continue;
                };
                if t.st_conventional(n, code) > st_inner + 1 {
                    let computed = ctx.st_value(&g).expect("within caps");
                    col.push(verified_st_ce(
                        &format!("{} with v={v}", graph_desc(n, code)),
                        &g,
                        format!("st <= st(G-v)+1 = {}", st_inner + 1),
                        &computed,
                    ));
                }
            }
        }
    }
    verdict.notes.push(format!(
        "{skipped_unbounded} (G, v) pairs skipped because st(G-v) is unbounded"
    ));
    col.finish(&mut verdict);
    verdict
}

/// Largest t >= 3 such that G contains an induced star K_{1,t}: the
/// maximum independent set inside some vertex's neighborhood.
fn max_induced_star(g: &Graph) -> Option<usize> {
    let n = g.order();
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).low_word()).collect();
    let mut best = 0usize;
    for c in 0..n {
        let nb: Vec<usize> = g.neighbors(c).iter().collect();
        if nb.len() <= best {
            continue;
        }
        let m = nb.len();
        for mask in 0u32..(1 << m) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let picked: Vec<usize> = (0..m)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| nb[i])
                .collect();
            let independent = picked
                .iter()
                .enumerate()
                .all(|(i, &u)| picked[i + 1..].iter().all(|&w| adj[u] >> w & 1 == 0));
            if independent {
                best = size;
            }
        }
    }
    (best >= 3).then_some(best)
}

fn induced_star_claim(ctx: &CheckCtx, def: &ClaimDef, slack: usize) -> ClaimVerdict {
    if let Some(v) = sweep_guard(ctx, def, 4) {
        return v;
    }
    let t = ctx.tables();
    let mut verdict = ClaimVerdict::new(def.id, def.description, sweep_scope(ctx, 4, false));
    verdict
        .scope
        .push_str("; graphs containing an induced K_{1,t} with t >= 3");
    let mut col = Collector::new();
    let mut applicable = 0usize;
    for n in 4..=t.built_through {
        for code in 0..labeled_graph_count(n) {
            let g = graph_from_code(n, code);
            let Some(tmax) = max_induced_star(&g) else {
                continue;
            };
            applicable += 1;
            let bound = n - tmax + slack;
            if t.st_conventional(n, code) > bound {
                let computed = ctx.st_value(&g).expect("within caps");
                col.push(verified_st_ce(
                    &format!("{} (t={tmax})", graph_desc(n, code)),
                    &g,
                    format!("st <= {bound}"),
                    &computed,
                ));
            }
        }
    }
    verdict
        .notes
        .push(format!("{applicable} graphs contained an induced star with t >= 3"));
    col.finish(&mut verdict);
    verdict
}

fn claim_induced_star_statement(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    induced_star_claim(ctx, def, 1)
}

fn claim_induced_star_proof(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    induced_star_claim(ctx, def, 0)
}

fn claim_ng_sum(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    if let Some(v) = sweep_guard(ctx, def, 2) {
        return v;
    }
    let t = ctx.tables();
    let mut verdict = ClaimVerdict::new(def.id, def.description, sweep_scope(ctx, 2, false));
    let mut col = Collector::new();
    for n in 2..=t.built_through {
        let full = (1u64 << pair_count(n)) - 1;
        for code in 0..labeled_graph_count(n) {
            let a = t.st_conventional(n, code);
            let b = t.st_conventional(n, full ^ code);
            if a + b > n + 1 {
                let g = graph_from_code(n, code);
                let computed = ctx.st_value(&g).expect("within caps");
                col.push(verified_st_ce(
                    &format!("{} (st(G)={a}, st(complement)={b})", graph_desc(n, code)),
                    &g,
                    format!("st(G)+st(complement) <= {}", n + 1),
                    &computed,
                ));
            }
        }
    }
    verdict
        .notes
        .push("unbounded st values enter the sum through the conventional value n".to_string());
    col.finish(&mut verdict);
    verdict
}

fn claim_ng_prod(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    if let Some(v) = sweep_guard(ctx, def, 2) {
        return v;
    }
    let t = ctx.tables();
    let mut verdict = ClaimVerdict::new(def.id, def.description, sweep_scope(ctx, 2, false));
    let mut col = Collector::new();
    for n in 2..=t.built_through {
        let full = (1u64 << pair_count(n)) - 1;
        for code in 0..labeled_graph_count(n) {
            let a = t.st_conventional(n, code);
            let b = t.st_conventional(n, full ^ code);
            // Compared exactly as 4ab <= (n+2)^2.
            if 4 * a * b > (n + 2) * (n + 2) {
                let g = graph_from_code(n, code);
                let computed = ctx.st_value(&g).expect("within caps");
                col.push(verified_st_ce(
                    &format!("{} (st(G)={a}, st(complement)={b})", graph_desc(n, code)),
                    &g,
                    format!("4*st(G)*st(complement) <= {}", (n + 2) * (n + 2)),
                    &computed,
                ));
            }
        }
    }
    col.finish(&mut verdict);
    verdict
}

fn claim_ng_gamma_prereq(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    if let Some(v) = sweep_guard(ctx, def, 1) {
        return v;
    }
    let t = ctx.tables();
    let mut verdict = ClaimVerdict::new(def.id, def.description, sweep_scope(ctx, 1, false));
    let mut col = Collector::new();
    for n in 1..=t.built_through {
        let full = if n == 1 {
            0
        } else {
            (1u64 << pair_count(n)) - 1
        };
        for code in 0..labeled_graph_count(n) {
            let a = t.gamma_of(n, code);
            let b = t.gamma_of(n, full ^ code);
            if a + b > n + 1 {
                let g = graph_from_code(n, code);
                col.push(verified_gamma_ce(
                    &format!("{} (gamma_st(complement)={b})", graph_desc(n, code)),
                    &g,
                    format!("gamma_st(G)+gamma_st(complement) <= {}", n + 1),
                    a,
                ));
            }
        }
    }
    col.finish(&mut verdict);
    verdict
}

// ---------------------------------------------------------------------
// Characterization claims (enumerated graphs plus the family corpus).
// ---------------------------------------------------------------------

fn claim_char_p_plus_1(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    if let Some(v) = sweep_guard(ctx, def, 2) {
        return v;
    }
    let t = ctx.tables();
    let mut verdict = ClaimVerdict::new(def.id, def.description, sweep_scope(ctx, 2, true));
    verdict.scope.push_str("; connected graphs with st >= 2");
    let mut col = Collector::new();
    let check =
        |desc: &str, g: &Graph, st: &StabilityResult, gamma_v: usize, col: &mut Collector| {
            if !g.is_connected() {
                return;
            }
            let v = st.conventional();
            if v < 2 {
                return;
            }
            let p = v - 1;
            let gamma_ok = gamma_v == 1 || gamma_v == 2;
            let delta_ok = g.min_degree() >= p;
            if !gamma_ok || !delta_ok {
                col.push(verified_st_ce(
                    &format!("{desc} (gamma_st={gamma_v}, delta={}, p={p})", g.min_degree()),
                    g,
                    "gamma_st in {1,2} and delta >= p".to_string(),
                    st,
                ));
            }
        };
    for e in ctx.corpus() {
        check(&e.name, &e.graph, &e.st, e.gamma_st, &mut col);
    }
    for n in 2..=t.built_through {
        for code in 0..labeled_graph_count(n) {
            if t.st_conventional(n, code) < 2 {
                continue;
            }
            let g = graph_from_code(n, code);
            if !g.is_connected() {
                continue;
            }
            let st = ctx.st_value(&g).expect("within caps");
            check(&graph_desc(n, code), &g, &st, t.gamma_of(n, code), &mut col);
        }
    }
    verdict
        .notes
        .push("unbounded st (complete graphs) enters through the conventional value n".to_string());
    col.finish(&mut verdict);
    verdict
}

/// Structure clauses for connected G with finite st = p+1 >= 3:
/// (i) kappa >= p, (iii) at least p+1 max-degree vertices,
/// (iv) gamma_st = 1 implies at least p+1 universal vertices,
/// (v) gamma_st = 2 implies removing either vertex of any minimum strong
/// dominating pair leaves gamma_st unchanged.
fn structure_violations(g: &Graph, st_k: usize, gamma_v: usize) -> Vec<String> {
    let p = st_k - 1;
    let mut out = Vec::new();
    let kappa = g.vertex_connectivity();
    if kappa < p {
        out.push(format!("clause (i): kappa={kappa} < p={p}"));
    }
    let max_deg_count = g.max_degree_vertices().len();
    if max_deg_count < p + 1 {
        out.push(format!(
            "clause (iii): only {max_deg_count} max-degree vertices < p+1={}",
            p + 1
        ));
    }
    if gamma_v == 1 && g.universal_vertices().len() < p + 1 {
        out.push(format!(
            "clause (iv): only {} universal vertices < p+1={}",
            g.universal_vertices().len(),
            p + 1
        ));
    }
    if gamma_v == 2 {
        let n = g.order();
        let mut bad_pair = None;
        crate::strongdom::each_combination(n, 2, |pair| {
            let d = VertexSet::from_members(n, pair.iter().copied());
            if is_strong_dominating(g, &d) {
                for &x in pair {
                    let reduced = g.delete_vertex(x).expect("n > 2");
                    if gamma_st(&reduced).value != gamma_v {
                        bad_pair = Some((pair.to_vec(), x));
                        return true;
                    }
                }
            }
            false
        });
        if let Some((pair, x)) = bad_pair {
            out.push(format!(
                "clause (v): minimum pair {pair:?} changes gamma_st when {x} is removed"
            ));
        }
    }
    out
}

fn claim_structure(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    if let Some(v) = sweep_guard(ctx, def, 4) {
        return v;
    }
    let t = ctx.tables();
    let mut verdict = ClaimVerdict::new(def.id, def.description, sweep_scope(ctx, 4, true));
    verdict.scope.push_str("; connected graphs with finite st >= 3");
    let mut col = Collector::new();
    let check =
        |desc: &str, g: &Graph, st: &StabilityResult, gamma_v: usize, col: &mut Collector| {
            let Some(k) = st.finite_k() else { return };
            if k < 3 || !g.is_connected() {
                return;
            }
            let violations = structure_violations(g, k, gamma_v);
            if !violations.is_empty() {
                col.push(verified_st_ce(
                    &format!("{desc}: {}", violations.join("; ")),
                    g,
                    "structure clauses (i),(iii),(iv),(v)".to_string(),
                    st,
                ));
            }
        };
    for e in ctx.corpus() {
        check(&e.name, &e.graph, &e.st, e.gamma_st, &mut col);
    }
    for n in 4..=t.built_through {
        for code in 0..labeled_graph_count(n) {
            let Some(k) = t.st_finite(n, code) else {
                continue;
            };
            if k < 3 {
                continue;
            }
            let g = graph_from_code(n, code);
            if !g.is_connected() {
                continue;
            }
            let st = ctx.st_value(&g).expect("within caps");
            check(&graph_desc(n, code), &g, &st, t.gamma_of(n, code), &mut col);
        }
    }
    col.finish(&mut verdict);
    verdict
}

fn claim_join_form(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    if let Some(v) = sweep_guard(ctx, def, 2) {
        return v;
    }
    let t = ctx.tables();
    let mut verdict = ClaimVerdict::new(def.id, def.description, sweep_scope(ctx, 2, true));
    verdict.scope.push_str("; graphs with gamma_st = 1 and st >= 3");
    let mut col = Collector::new();
    let check =
        |desc: &str, g: &Graph, st: &StabilityResult, gamma_v: usize, col: &mut Collector| {
            if gamma_v != 1 {
                return;
            }
            let v = st.conventional();
            if v < 3 {
                return;
            }
            let p = v - 1;
            let u = g.universal_vertices().len();
            if u != p + 1 {
                col.push(verified_st_ce(
                    &format!("{desc} ({u} universal vertices)"),
                    g,
                    format!("exactly p+1 = {} universal vertices", p + 1),
                    st,
                ));
            }
        };
    for e in ctx.corpus() {
        check(&e.name, &e.graph, &e.st, e.gamma_st, &mut col);
    }
    for n in 2..=t.built_through {
        for code in 0..labeled_graph_count(n) {
            if t.gamma_of(n, code) != 1 || t.st_conventional(n, code) < 3 {
                continue;
            }
            let g = graph_from_code(n, code);
            let st = ctx.st_value(&g).expect("within caps");
            check(&graph_desc(n, code), &g, &st, 1, &mut col);
        }
    }
    col.finish(&mut verdict);
    verdict
}

// ---------------------------------------------------------------------
// Operation claims.
// ---------------------------------------------------------------------

/// Deterministic splitmix64 stream for the random join pairs.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: usize) -> usize {
        (self.next() % bound as u64) as usize
    }
}

/// The seeded random (G, H) pairs the join-theorem check runs on.
/// Deterministic across platforms and runs.
pub fn join_pair_corpus(seed: u64, count: usize, max_order: usize) -> Vec<(Graph, Graph)> {
    let mut rng = SplitMix(seed);
    let random_graph = |rng: &mut SplitMix| {
        let n = 1 + rng.below(max_order);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.next() & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).expect("generated edges are valid")
    };
    (0..count)
        .map(|_| {
            let g = random_graph(&mut rng);
            let h = random_graph(&mut rng);
            (g, h)
        })
        .collect()
}

fn claim_join_gamma(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    let cfg = ctx.cfg;
    let mut verdict = ClaimVerdict::new(
        def.id,
        def.description,
        format!(
            "{} seeded random pairs with component orders <= {} (seed {:#x})",
            cfg.join_pairs, cfg.join_order_max, cfg.join_seed
        ),
    );
    let mut col = Collector::new();
    for (i, (g, h)) in join_pair_corpus(cfg.join_seed, cfg.join_pairs, cfg.join_order_max)
        .iter()
        .enumerate()
    {
        let j = ops::join(g, h);
        let want = if j.universal_vertices().is_empty() { 2 } else { 1 };
        match ctx.gamma_value(&j) {
            Ok(got) if got != want => {
                col.push(verified_gamma_ce(
                    &format!(
                        "pair #{i}: join of n={} edges={:?} and n={} edges={:?}",
                        g.order(),
                        g.edges(),
                        h.order(),
                        h.edges()
                    ),
                    &j,
                    format!("gamma_st={want}"),
                    got,
                ));
            }
            Ok(_) => {}
            Err(e) => verdict.notes.push(format!("pair #{i} skipped: {e}")),
        }
    }
    col.finish(&mut verdict);
    verdict
}

fn claim_join_st(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    if let Some(v) = sweep_guard(ctx, def, 2) {
        return v;
    }
    let t = ctx.tables();
    let mut verdict = ClaimVerdict::new(
        def.id,
        def.description,
        format!(
            "{}; joins of all labeled pairs with orders <= {JOIN_ST_PAIR_MAX} having no universal vertex",
            sweep_scope(ctx, 2, false)
        ),
    );
    let mut col = Collector::new();
    // Cases |U| >= 1 and complete: every graph with a universal vertex is a
    // join, so the sweep covers them; the conventional value n equals |U|
    // for complete graphs.
    for n in 2..=t.built_through {
        for code in 0..labeled_graph_count(n) {
            let g = graph_from_code(n, code);
            let u = g.universal_vertices().len();
            if u == 0 {
                continue;
            }
            if t.st_conventional(n, code) != u {
                let st = ctx.st_value(&g).expect("within caps");
                col.push(verified_st_ce(
                    &format!("{} ({u} universal vertices)", graph_desc(n, code)),
                    &g,
                    format!("st={u}"),
                    &st,
                ));
            }
        }
    }
    // Case U empty, over joins of explicit small pairs.
    for ng in 1..=JOIN_ST_PAIR_MAX {
        for nh in 1..=JOIN_ST_PAIR_MAX {
            for cg in 0..labeled_graph_count(ng) {
                for ch in 0..labeled_graph_count(nh) {
                    let g = graph_from_code(ng, cg);
                    let h = graph_from_code(nh, ch);
                    let j = ops::join(&g, &h);
                    if !j.universal_vertices().is_empty() {
                        continue;
                    }
                    match ctx.st_value(&j) {
                        Ok(st) if st.finite_k() != Some(1) => {
                            col.push(verified_st_ce(
                                &format!(
                                    "join of (n={ng} code={cg}) and (n={nh} code={ch}), U empty"
                                ),
                                &j,
                                "st=1".to_string(),
                                &st,
                            ));
                        }
                        Ok(_) => {}
                        Err(e) => verdict.notes.push(format!(
                            "join (n={ng} code={cg}, n={nh} code={ch}) skipped: {e}"
                        )),
                    }
                }
            }
        }
    }
    col.finish(&mut verdict);
    verdict
}

fn claim_corona_gamma(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    let mut verdict = ClaimVerdict::new(
        def.id,
        def.description,
        format!("all labeled pairs with |G| <= {CORONA_GAMMA_G_MAX} and |H| <= {CORONA_GAMMA_H_MAX}"),
    );
    let mut col = Collector::new();
    for ng in 1..=CORONA_GAMMA_G_MAX {
        for nh in 1..=CORONA_GAMMA_H_MAX {
            for cg in 0..labeled_graph_count(ng) {
                for ch in 0..labeled_graph_count(nh) {
                    let g = graph_from_code(ng, cg);
                    let h = graph_from_code(nh, ch);
                    let c = ops::corona(&g, &h);
                    match ctx.gamma_value(&c) {
                        Ok(got) if got != ng => {
                            col.push(verified_gamma_ce(
                                &format!("corona of (n={ng} code={cg}) and (n={nh} code={ch})"),
                                &c,
                                format!("gamma_st={ng}"),
                                got,
                            ));
                        }
                        Ok(_) => {}
                        Err(e) => verdict.notes.push(format!(
                            "corona (n={ng} code={cg}, n={nh} code={ch}) skipped: {e}"
                        )),
                    }
                }
            }
        }
    }
    col.finish(&mut verdict);
    verdict
}

fn claim_corona_st(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    let mut verdict = ClaimVerdict::new(
        def.id,
        def.description,
        format!(
            "corona(P_2, E_2), corona(C_3, E_2), and all labeled pairs with |G| <= {CORONA_ST_G_MAX}, |H| <= {CORONA_ST_H_MAX}, gamma_st(H) >= 2"
        ),
    );
    let mut col = Collector::new();
    let mut notes = Vec::new();
    let check = |desc: String, g: &Graph, h: &Graph, col: &mut Collector, notes: &mut Vec<String>| {
        let Ok(gamma_h) = ctx.gamma_value(h) else {
            return;
        };
        if gamma_h < 2 {
            return;
        }
        let c = ops::corona(g, h);
        match ctx.st_value(&c) {
            Ok(st) if st.finite_k() != Some(1) => {
                col.push(verified_st_ce(&desc, &c, "st=1".to_string(), &st));
            }
            Ok(_) => {}
            Err(e) => notes.push(format!("{desc} skipped: {e}")),
        }
    };
    let named = [
        ("corona(P(2),E(2))", FamilySpec::Path(2), FamilySpec::Empty(2)),
        ("corona(C(3),E(2))", FamilySpec::Cycle(3), FamilySpec::Empty(2)),
    ];
    for (desc, gs, hs) in named {
        check(
            desc.to_string(),
            &family_graph(&gs),
            &family_graph(&hs),
            &mut col,
            &mut notes,
        );
    }
    for ng in 1..=CORONA_ST_G_MAX {
        for nh in 1..=CORONA_ST_H_MAX {
            for cg in 0..labeled_graph_count(ng) {
                for ch in 0..labeled_graph_count(nh) {
                    let g = graph_from_code(ng, cg);
                    let h = graph_from_code(nh, ch);
                    check(
                        format!("corona of (n={ng} code={cg}) and (n={nh} code={ch})"),
                        &g,
                        &h,
                        &mut col,
                        &mut notes,
                    );
                }
            }
        }
    }
    verdict.notes.extend(notes);
    col.finish(&mut verdict);
    verdict
}

fn claim_product_gamma(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    let mut verdict = ClaimVerdict::new(
        def.id,
        def.description,
        format!("all labeled pairs with orders <= {PRODUCT_ORDER_MAX}"),
    );
    let mut col = Collector::new();
    for ng in 1..=PRODUCT_ORDER_MAX {
        for nh in 1..=PRODUCT_ORDER_MAX {
            for cg in 0..labeled_graph_count(ng) {
                for ch in 0..labeled_graph_count(nh) {
                    let g = graph_from_code(ng, cg);
                    let h = graph_from_code(nh, ch);
                    let p = ops::cartesian(&g, &h);
                    let (Ok(gg), Ok(gh), Ok(gp)) = (
                        ctx.gamma_value(&g),
                        ctx.gamma_value(&h),
                        ctx.gamma_value(&p),
                    ) else {
                        continue;
                    };
                    let bound = (nh * gg).min(ng * gh);
                    if gp > bound {
                        col.push(verified_gamma_ce(
                            &format!("product of (n={ng} code={cg}) and (n={nh} code={ch})"),
                            &p,
                            format!("gamma_st <= {bound}"),
                            gp,
                        ));
                    }
                }
            }
        }
    }
    col.finish(&mut verdict);
    verdict
}

fn claim_product_st(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    let mut verdict = ClaimVerdict::new(
        def.id,
        def.description,
        format!(
            "all labeled pairs with orders <= {PRODUCT_ORDER_MAX} where both factor stabilities are finite"
        ),
    );
    let mut col = Collector::new();
    let mut applicable = 0usize;
    for ng in 2..=PRODUCT_ORDER_MAX {
        for nh in 2..=PRODUCT_ORDER_MAX {
            for cg in 0..labeled_graph_count(ng) {
                for ch in 0..labeled_graph_count(nh) {
                    let g = graph_from_code(ng, cg);
                    let h = graph_from_code(nh, ch);
                    let (Ok(st_g), Ok(st_h)) = (ctx.st_value(&g), ctx.st_value(&h)) else {
                        continue;
                    };
                    let (Some(kg), Some(kh)) = (st_g.finite_k(), st_h.finite_k()) else {
                        continue;
                    };
                    applicable += 1;
                    let p = ops::cartesian(&g, &h);
                    let bound = (nh * kg).min(ng * kh);
                    match ctx.st_value(&p) {
                        Ok(st_p) if st_p.conventional() > bound => {
                            col.push(verified_st_ce(
                                &format!(
                                    "product of (n={ng} code={cg}, st={kg}) and (n={nh} code={ch}, st={kh})"
                                ),
                                &p,
                                format!("st <= {bound}"),
                                &st_p,
                            ));
                        }
                        Ok(_) => {}
                        Err(e) => verdict.notes.push(format!(
                            "product (n={ng} code={cg}, n={nh} code={ch}) skipped: {e}"
                        )),
                    }
                }
            }
        }
    }
    verdict
        .notes
        .push(format!("{applicable} pairs had both factor stabilities finite"));
    col.finish(&mut verdict);
    verdict
}

fn claim_conjecture_clause_i(ctx: &CheckCtx, def: &ClaimDef) -> ClaimVerdict {
    if let Some(v) = sweep_guard(ctx, def, 2) {
        return v;
    }
    let t = ctx.tables();
    let mut verdict = ClaimVerdict::new(def.id, def.description, sweep_scope(ctx, 2, false));
    verdict.scope.push_str("; connected graphs with finite st");
    verdict.notes.push(
        "falsification search; forward violation: st = p+1 with p >= 1 but kappa < p; \
         backward violation: taking p = kappa >= 1, st != kappa+1"
            .to_string(),
    );
    let mut col = Collector::new();
    for n in 2..=t.built_through {
        for code in 0..labeled_graph_count(n) {
            let Some(k) = t.st_finite(n, code) else {
                continue;
            };
            let g = graph_from_code(n, code);
            if !g.is_connected() {
                continue;
            }
            let kappa = g.vertex_connectivity();
            let forward_violation = k >= 2 && kappa < k - 1;
            let backward_violation = kappa >= 1 && k != kappa + 1;
            if forward_violation || backward_violation {
                let direction = match (forward_violation, backward_violation) {
                    (true, true) => "forward+backward",
                    (true, false) => "forward",
                    _ => "backward",
                };
                let st = ctx.st_value(&g).expect("within caps");
                col.push(verified_st_ce(
                    &format!("{} (kappa={kappa}, direction={direction})", graph_desc(n, code)),
                    &g,
                    "st = kappa+1 (clause (i) read as an equivalence)".to_string(),
                    &st,
                ));
            }
        }
    }
    col.finish(&mut verdict);
    verdict
}

// ---------------------------------------------------------------------
// Predicate-driven counterexample search.
// ---------------------------------------------------------------------

/// Facts computed per enumerated graph for predicate checks.
#[derive(Clone, Debug)]
pub struct GraphFacts {
    pub gamma_st: usize,
    pub gamma: usize,
    /// None for order-1 graphs, where stability is undefined.
    pub stability: Option<StabilityResult>,
    pub kappa: usize,
    pub connected: bool,
    pub min_degree: usize,
    pub max_degree: usize,
}

/// All enumerated graphs violating `pred` (those where it returns false),
/// up to `max_n`, deduplicated by canonical key, in (order, code) order.
pub fn find_counterexamples<F>(
    pred: F,
    max_n: usize,
) -> Result<Vec<(String, Graph)>, enumeration::EnumError>
where
    F: Fn(&Graph, &GraphFacts) -> bool + Sync,
{
    if max_n > enumeration::ENUMERATION_MAX_ORDER {
        return Err(enumeration::EnumError::OrderOutOfRange {
            order: max_n,
            max: enumeration::ENUMERATION_MAX_ORDER,
        });
    }
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut seen_keys: Vec<u64> = Vec::new();
    for n in 1..=max_n {
        let violators: Vec<(u64, Graph)> = (0..labeled_graph_count(n))
            .into_par_iter()
            .filter_map(|code| {
                let g = graph_from_code(n, code);
                let facts = GraphFacts {
                    gamma_st: gamma_st(&g).value,
                    gamma: gamma(&g).value,
                    stability: (n >= 2).then(|| {
                        stability_with(
                            &g,
                            &StabilityOptions {
                                cap: HARNESS_STABILITY_CAP,
                                solver: InnerSolver::Search,
                            },
                        )
                        .expect("within caps")
                    }),
                    kappa: g.vertex_connectivity(),
                    connected: g.is_connected(),
                    min_degree: g.min_degree(),
                    max_degree: g.max_degree(),
                };
                (!pred(&g, &facts)).then_some((code, g))
            })
            .collect();
        for (code, g) in violators {
            let key = enumeration::dedup_key(&g).expect("n <= 7");
            if !seen_keys.contains(&key) {
                seen_keys.push(key);
                out.push((graph_desc(n, code), g));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_cfg() -> CheckConfig {
        CheckConfig {
            max_n: 4,
            paths_gamma: (3, 9),
            cycles_gamma: (3, 9),
            wheels_gamma: (4, 8),
            paths_st: (3, 8),
            cycles_st: (4, 8),
            wheels_st: (5, 7),
            friendship_st: (2, 3),
            book_st: (2, 3),
            bipartite_max: 4,
            balanced_nn: (4, 4),
            cocktail_st: (3, 3),
            join_pairs: 20,
            join_order_max: 4,
            ..CheckConfig::default()
        }
    }

    #[test]
    fn registry_contains_the_anchor_claims() {
        let ids: Vec<_> = list_claims().iter().map(|c| c.id).collect();
        assert!(ids.contains(&"obs:path-cycle-gamma"));
        assert!(ids.contains(&"thm:NG-sum"));
        assert!(ids.contains(&"conj:stability-characterization"));
    }

    #[test]
    fn unknown_claim_is_an_error() {
        assert_eq!(
            check_claim("thm:nope", &small_cfg()).unwrap_err(),
            ClaimError::UnknownClaim("thm:nope".to_string())
        );
    }

    #[test]
    fn cycle_st_claim_passes() {
        let v = check_claim("prop:cycle-st", &small_cfg()).unwrap();
        assert_eq!(v.status, ClaimStatus::Pass, "{v:?}");
    }

    #[test]
    fn octahedron_claim_mismatches_with_verified_counterexample() {
        let v = check_claim("rem:octahedron", &small_cfg()).unwrap();
        assert_eq!(v.status, ClaimStatus::Mismatch);
        assert_eq!(v.counterexamples.len(), 1);
        assert!(v.counterexamples[0].oracle_verified);
        assert_eq!(v.counterexamples[0].computed, "st=1");
    }

    #[test]
    fn attain_claim_mismatches_at_p2() {
        let v = check_claim("thm:attain-p+1", &small_cfg()).unwrap();
        assert_eq!(v.status, ClaimStatus::Mismatch);
        assert!(v
            .counterexamples
            .iter()
            .any(|c| c.graph.contains("Km(2,2,2)")));
    }

    #[test]
    fn path_st_carries_discrepancy_note() {
        let v = check_claim("prop:path-st", &small_cfg()).unwrap();
        assert!(v.notes.iter().any(|n| n.contains("statement-vs-proof")));
        assert_eq!(v.status, ClaimStatus::Pass);
    }

    #[test]
    fn bound1_passes_on_small_sweep() {
        let v = check_claim("thm:bound1", &small_cfg()).unwrap();
        assert_eq!(v.status, ClaimStatus::Pass, "{v:?}");
        assert_eq!(v.total_violations, 0);
    }

    #[test]
    fn join_st_finds_k33() {
        let v = check_claim("thm:join-st", &small_cfg()).unwrap();
        assert_eq!(v.status, ClaimStatus::Mismatch);
        assert!(
            v.counterexamples.iter().any(|c| c.graph.contains("U empty")),
            "{v:?}"
        );
    }

    #[test]
    fn suite_cross_links_cocktail_and_octahedron() {
        let report = run_suite(&small_cfg());
        for id in ["prop:cocktail", "rem:octahedron"] {
            let v = report.verdicts.iter().find(|v| v.claim_id == id).unwrap();
            assert!(
                v.notes.iter().any(|n| n.contains("cross-link")),
                "{id} missing cross-link note"
            );
        }
        // The two claims contradict each other on the same graph, so they
        // can never both pass.
        let statuses: Vec<ClaimStatus> = report
            .verdicts
            .iter()
            .filter(|v| v.claim_id == "prop:cocktail" || v.claim_id == "rem:octahedron")
            .map(|v| v.status)
            .collect();
        assert!(statuses.iter().any(|s| *s != ClaimStatus::Pass));
    }

    #[test]
    fn suite_is_deterministic() {
        let cfg = CheckConfig {
            max_n: 3,
            join_pairs: 10,
            ..small_cfg()
        };
        let a = run_suite(&cfg);
        let b = run_suite(&cfg);
        let strip = |r: &ClaimReport| {
            r.verdicts
                .iter()
                .map(|v| {
                    format!(
                        "{}|{}|{}|{:?}|{}|{:?}|{:?}",
                        v.claim_id,
                        v.scope,
                        v.status,
                        v.detail,
                        v.total_violations,
                        v.counterexamples,
                        v.notes
                    )
                })
                .collect::<Vec<_>>()
        };
        assert_eq!(strip(&a), strip(&b));
        assert_eq!(a.summary.total, registry().len());
    }

    #[test]
    fn join_pair_corpus_is_deterministic_and_bounded() {
        let a = join_pair_corpus(42, 30, 5);
        let b = join_pair_corpus(42, 30, 5);
        assert_eq!(a.len(), 30);
        for ((g1, h1), (g2, h2)) in a.iter().zip(&b) {
            assert!(g1.same_edges(g2) && h1.same_edges(h2));
            assert!(g1.order() <= 5 && h1.order() <= 5);
        }
    }

    #[test]
    fn find_counterexamples_definitional_predicates() {
        // gamma <= gamma_st is definitional: no violators.
        let none = find_counterexamples(|_, f| f.gamma <= f.gamma_st, 4).unwrap();
        assert!(none.is_empty());
        // Finite st is at most n-1 by the search bound.
        let none = find_counterexamples(
            |g, f| match &f.stability {
                Some(st) => st.finite_k().is_none_or(|k| k < g.order()),
                None => true,
            },
            4,
        )
        .unwrap();
        assert!(none.is_empty());
    }

    #[test]
    fn find_counterexamples_dedups_by_isomorphism() {
        // "Every graph is connected" fails; violators come deduplicated.
        // Disconnected graphs on <= 3 vertices up to isomorphism: E_2, E_3,
        // and K_2 + K_1.
        let violators = find_counterexamples(|_, f| f.connected, 3).unwrap();
        assert_eq!(violators.len(), 3);
    }

    #[test]
    fn find_counterexamples_structure_clause_i_sweep() {
        // Clause (i): connected with finite st = p+1 >= 3 implies
        // kappa >= p. The exhaustive n <= 6 sweep finds no violators.
        let violators = find_counterexamples(
            |_, f| {
                if !f.connected {
                    return true;
                }
                match f.stability.as_ref().and_then(|s| s.finite_k()) {
                    Some(k) if k >= 3 => f.kappa >= k - 1,
                    _ => true,
                }
            },
            6,
        )
        .unwrap();
        assert!(violators.is_empty(), "{violators:?}");
    }
}
