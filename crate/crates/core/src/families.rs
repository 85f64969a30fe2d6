//! Constructors for the named graph families, addressable through
//! [`FamilySpec`] trees that may also combine families with the binary
//! graph operations.

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::ops;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid {family} parameter: {rule}")]
    InvalidParameter {
        family: &'static str,
        rule: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A recipe for a graph: either a named family or a graph operation
/// applied to sub-recipes.
///
/// Conventions: `Wheel(n)` is the wheel of order n (hub plus an (n-1)-cycle),
/// `Star(n)` is K_{1,n} of order n+1, `Matching(m)` is m disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Wheel(usize),
    Complete(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    CocktailParty(usize),
    Friendship(usize),
    Book(usize),
    Empty(usize),
    Matching(usize),
    Join(Box<FamilySpec>, Box<FamilySpec>),
    Corona(Box<FamilySpec>, Box<FamilySpec>),
    Cartesian(Box<FamilySpec>, Box<FamilySpec>),
    Union(Box<FamilySpec>, Box<FamilySpec>),
    Complement(Box<FamilySpec>),
}

impl FamilySpec {
    /// Compact description in the DSL syntax the CLI accepts.
    pub fn describe(&self) -> String {
        use FamilySpec::*;
        match self {
            Path(n) => format!("P({n})"),
            Cycle(n) => format!("C({n})"),
            Wheel(n) => format!("W({n})"),
            Complete(n) => format!("K({n})"),
            Star(n) => format!("S({n})"),
            CompleteBipartite(m, n) => format!("Kb({m},{n})"),
            CompleteMultipartite(sizes) => {
                let parts: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
                format!("Km({})", parts.join(","))
            }
            CocktailParty(n) => format!("CP({n})"),
            Friendship(n) => format!("F({n})"),
            Book(n) => format!("B({n})"),
            Empty(n) => format!("E({n})"),
            Matching(m) => format!("M({m})"),
            Join(a, b) => format!("join({},{})", a.describe(), b.describe()),
            Corona(a, b) => format!("corona({},{})", a.describe(), b.describe()),
            Cartesian(a, b) => format!("cart({},{})", a.describe(), b.describe()),
            Union(a, b) => format!("union({},{})", a.describe(), b.describe()),
            Complement(a) => format!("comp({})", a.describe()),
        }
    }
}

fn require(cond: bool, family: &'static str, rule: &str) -> Result<(), FamilyError> {
    if cond {
        Ok(())
    } else {
        Err(FamilyError::InvalidParameter {
            family,
            rule: rule.to_string(),
        })
    }
}

/// Builds the graph a spec describes, on canonical labels: paths and
/// cycles in label order, hubs and star centers at label 0, part blocks
/// contiguous in declared order, the book spine at labels 0 and 1.
pub fn build(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    use FamilySpec::*;
    let g = match spec {
        Path(n) => {
            require(*n >= 1, "Path", "order must be >= 1")?;
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            Graph::new(*n, &edges)?
        }
        Cycle(n) => {
            require(*n >= 3, "Cycle", "order must be >= 3")?;
            let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            edges.push((n - 1, 0));
            Graph::new(*n, &edges)?
        }
        Wheel(n) => {
            require(*n >= 4, "Wheel", "order must be >= 4")?;
            // Hub 0 joined to the cycle 1..n-1.
            ops::join(&build(&Complete(1))?, &build(&Cycle(n - 1))?)
        }
        Complete(n) => {
            require(*n >= 1, "Complete", "order must be >= 1")?;
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    edges.push((u, v));
                }
            }
            Graph::new(*n, &edges)?
        }
        Star(n) => {
            require(*n >= 1, "Star", "leaf count must be >= 1")?;
            let edges: Vec<_> = (1..=*n).map(|v| (0, v)).collect();
            Graph::new(n + 1, &edges)?
        }
        CompleteBipartite(m, n) => {
            require(*m >= 1 && *n >= 1, "CompleteBipartite", "part sizes must be >= 1")?;
            build(&CompleteMultipartite(vec![*m, *n]))?
        }
        CompleteMultipartite(sizes) => {
            require(
                sizes.len() >= 2,
                "CompleteMultipartite",
                "needs at least 2 parts",
            )?;
            require(
                sizes.iter().all(|&s| s >= 1),
                "CompleteMultipartite",
                "part sizes must be >= 1",
            )?;
            let total: usize = sizes.iter().sum();
            let mut part_of = vec![0usize; total];
            let mut next = 0;
            for (p, &s) in sizes.iter().enumerate() {
                for _ in 0..s {
                    part_of[next] = p;
                    next += 1;
                }
            }
            let mut edges = Vec::new();
            for u in 0..total {
                for v in u + 1..total {
                    if part_of[u] != part_of[v] {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(total, &edges)?
        }
        CocktailParty(n) => {
            require(*n >= 1, "CocktailParty", "part count must be >= 1")?;
            build(&CompleteMultipartite(vec![2; *n]))?
        }
        Friendship(n) => {
            require(*n >= 1, "Friendship", "triangle count must be >= 1")?;
            let mut edges = Vec::new();
            for i in 0..*n {
                let (a, b) = (2 * i + 1, 2 * i + 2);
                edges.push((0, a));
                edges.push((0, b));
                edges.push((a, b));
            }
            Graph::new(2 * n + 1, &edges)?
        }
        Book(n) => {
            require(*n >= 1, "Book", "page count must be >= 1")?;
            ops::cartesian(&build(&Star(*n))?, &build(&Path(2))?)
        }
        Empty(n) => {
            require(*n >= 1, "Empty", "order must be >= 1")?;
            Graph::new(*n, &[])?
        }
        Matching(m) => {
            require(*m >= 1, "Matching", "edge count must be >= 1")?;
            let edges: Vec<_> = (0..*m).map(|i| (2 * i, 2 * i + 1)).collect();
            Graph::new(2 * m, &edges)?
        }
        Join(a, b) => ops::join(&build(a)?, &build(b)?),
        Corona(a, b) => ops::corona(&build(a)?, &build(b)?),
        Cartesian(a, b) => ops::cartesian(&build(a)?, &build(b)?),
        Union(a, b) => ops::disjoint_union(&build(a)?, &build(b)?),
        Complement(a) => build(a)?.complement(),
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::FamilySpec::*;
    use super::*;

    #[test]
    fn friendship_two() {
        let g = build(&Friendship(2)).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.degree(0), 4);
    }

    #[test]
    fn cocktail_party_matches_multipartite() {
        let cp = build(&CocktailParty(3)).unwrap();
        let km = build(&CompleteMultipartite(vec![2, 2, 2])).unwrap();
        assert!(cp.same_edges(&km));
        // (2n-2)-regular on 2n vertices.
        assert!((0..6).all(|v| cp.degree(v) == 4));
    }

    #[test]
    fn book_two() {
        let g = build(&Book(2)).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 3);
        assert!(g.has_edge(0, 1), "spine vertices are adjacent");
    }

    #[test]
    fn empty_four() {
        let g = build(&Empty(4)).unwrap();
        assert_eq!((g.order(), g.edge_count()), (4, 0));
    }

    #[test]
    fn rejects_invalid_parameters() {
        assert!(matches!(
            build(&Cycle(2)),
            Err(FamilyError::InvalidParameter { family: "Cycle", .. })
        ));
        assert!(build(&Wheel(3)).is_err());
        assert!(build(&CompleteMultipartite(vec![3])).is_err());
        assert!(build(&CompleteMultipartite(vec![2, 0])).is_err());
    }

    #[test]
    fn order_formulas() {
        assert_eq!(build(&Path(7)).unwrap().order(), 7);
        assert_eq!(build(&Wheel(8)).unwrap().order(), 8);
        assert_eq!(build(&Star(4)).unwrap().order(), 5);
        assert_eq!(build(&CompleteBipartite(2, 5)).unwrap().order(), 7);
        assert_eq!(build(&CocktailParty(4)).unwrap().order(), 8);
        assert_eq!(build(&Friendship(3)).unwrap().order(), 7);
        assert_eq!(build(&Book(3)).unwrap().order(), 8);
        assert_eq!(build(&Matching(3)).unwrap().order(), 6);
        assert_eq!(
            build(&CompleteMultipartite(vec![1, 2, 3])).unwrap().order(),
            6
        );
    }

    #[test]
    fn balanced_multipartite_is_regular() {
        // Every vertex of K_{p,...,p} with r parts has degree p(r-1).
        for (p, r) in [(2, 3), (3, 3), (2, 4)] {
            let g = build(&CompleteMultipartite(vec![p; r])).unwrap();
            assert!((0..g.order()).all(|v| g.degree(v) == p * (r - 1)), "p={p} r={r}");
        }
    }

    #[test]
    fn wheel_is_join_of_k1_and_cycle() {
        let w = build(&Wheel(6)).unwrap();
        let j = build(&Join(Box::new(Complete(1)), Box::new(Cycle(5)))).unwrap();
        assert!(w.same_edges(&j));
        assert_eq!(w.edge_count(), 10);
    }

    #[test]
    fn book_is_star_times_p2() {
        let b = build(&Book(3)).unwrap();
        let c = build(&Cartesian(Box::new(Star(3)), Box::new(Path(2)))).unwrap();
        assert!(b.same_edges(&c));
    }

    #[test]
    fn describe_round_trip_text() {
        let spec = Join(Box::new(Complete(1)), Box::new(Cycle(5)));
        assert_eq!(spec.describe(), "join(K(1),C(5))");
        assert_eq!(CompleteMultipartite(vec![2, 2, 2]).describe(), "Km(2,2,2)");
    }
}
