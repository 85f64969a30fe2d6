//! Binary graph operations: join, corona, Cartesian product, disjoint
//! union. Each has a fixed deterministic label layout so that witnesses
//! and golden tests are reproducible.

use crate::graph::Graph;

/// Join G ∨ H: disjoint union plus every cross edge. G keeps labels
/// `0..|G|`, H is shifted to `|G|..|G|+|H|`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let (gn, hn) = (g.order(), h.order());
    let mut edges = g.edges();
    for (u, v) in h.edges() {
        edges.push((gn + u, gn + v));
    }
    for u in 0..gn {
        for v in 0..hn {
            edges.push((u, gn + v));
        }
    }
    Graph::new(gn + hn, &edges).expect("join of valid graphs")
}

/// Corona G ∘ H: one copy of H per vertex of G, each copy fully joined to
/// its base vertex. G keeps labels `0..|G|`; the copy for base vertex `i`
/// occupies `|G| + i*|H| .. |G| + (i+1)*|H|`.
pub fn corona(g: &Graph, h: &Graph) -> Graph {
    let (gn, hn) = (g.order(), h.order());
    let mut edges = g.edges();
    for i in 0..gn {
        let base = gn + i * hn;
        for (u, v) in h.edges() {
            edges.push((base + u, base + v));
        }
        for u in 0..hn {
            edges.push((i, base + u));
        }
    }
    Graph::new(gn * (1 + hn), &edges).expect("corona of valid graphs")
}

/// Cartesian product G □ H: vertex (a, b) gets label `a*|H| + b`;
/// (a, b) ~ (a', b') iff a = a' and bb' ∈ E(H), or b = b' and aa' ∈ E(G).
pub fn cartesian(g: &Graph, h: &Graph) -> Graph {
    let hn = h.order();
    let mut edges = Vec::new();
    for a in 0..g.order() {
        for (u, v) in h.edges() {
            edges.push((a * hn + u, a * hn + v));
        }
    }
    for (a, b) in g.edges() {
        for u in 0..hn {
            edges.push((a * hn + u, b * hn + u));
        }
    }
    Graph::new(g.order() * hn, &edges).expect("product of valid graphs")
}

/// Disjoint union, G's labels first.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let gn = g.order();
    let mut edges = g.edges();
    for (u, v) in h.edges() {
        edges.push((gn + u, gn + v));
    }
    Graph::new(gn + h.order(), &edges).expect("union of valid graphs")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build, FamilySpec};

    fn f(spec: FamilySpec) -> Graph {
        build(&spec).unwrap()
    }

    #[test]
    fn join_k1_c5_is_w6() {
        let j = join(&f(FamilySpec::Complete(1)), &f(FamilySpec::Cycle(5)));
        assert_eq!((j.order(), j.edge_count()), (6, 10));
        assert!(j.same_edges(&f(FamilySpec::Wheel(6))));
    }

    #[test]
    fn join_of_empties_is_complete_bipartite() {
        let j = join(&f(FamilySpec::Empty(2)), &f(FamilySpec::Empty(2)));
        assert!(j.same_edges(&f(FamilySpec::CompleteBipartite(2, 2))));
        assert!((0..4).all(|v| j.degree(v) == 2));
    }

    #[test]
    fn join_k2_k2_is_k4() {
        let j = join(&f(FamilySpec::Complete(2)), &f(FamilySpec::Complete(2)));
        assert!(j.same_edges(&f(FamilySpec::Complete(4))));
    }

    #[test]
    fn join_edge_count_formula() {
        let g = f(FamilySpec::Path(4));
        let h = f(FamilySpec::Cycle(5));
        let j = join(&g, &h);
        assert_eq!(
            j.edge_count(),
            g.edge_count() + h.edge_count() + g.order() * h.order()
        );
    }

    #[test]
    fn join_universal_vertices_come_from_factors() {
        let g = f(FamilySpec::Star(3));
        let h = f(FamilySpec::Path(3));
        let j = join(&g, &h);
        for v in 0..g.order() {
            assert_eq!(
                j.universal_vertices().contains(v),
                g.universal_vertices().contains(v)
            );
        }
        for v in 0..h.order() {
            assert_eq!(
                j.universal_vertices().contains(g.order() + v),
                h.universal_vertices().contains(v)
            );
        }
    }

    #[test]
    fn corona_p2_k1_is_p4_shape() {
        let c = corona(&f(FamilySpec::Path(2)), &f(FamilySpec::Complete(1)));
        assert_eq!(c.order(), 4);
        assert_eq!(c.edge_count(), 3);
        // Spine 0-1 with pendants 2 and 3.
        assert!(c.has_edge(0, 1) && c.has_edge(0, 2) && c.has_edge(1, 3));
    }

    #[test]
    fn corona_c3_k2_counts() {
        let c = corona(&f(FamilySpec::Cycle(3)), &f(FamilySpec::Complete(2)));
        assert_eq!(c.order(), 9);
        assert_eq!(c.edge_count(), 12);
    }

    #[test]
    fn corona_degrees() {
        let c = corona(&f(FamilySpec::Path(2)), &f(FamilySpec::Empty(2)));
        assert_eq!(c.order(), 6);
        assert_eq!(c.degree(0), 3);
        assert_eq!(c.degree(1), 3);
        for v in 2..6 {
            assert_eq!(c.degree(v), 1);
        }
    }

    #[test]
    fn cartesian_k2_k2_is_c4() {
        let p = cartesian(&f(FamilySpec::Complete(2)), &f(FamilySpec::Complete(2)));
        // A connected 2-regular graph on 4 vertices is the 4-cycle.
        assert_eq!((p.order(), p.edge_count()), (4, 4));
        assert!((0..4).all(|v| p.degree(v) == 2));
        assert!(p.is_connected());
    }

    #[test]
    fn cartesian_star2_p2_is_book2() {
        let p = cartesian(&f(FamilySpec::Star(2)), &f(FamilySpec::Path(2)));
        assert!(p.same_edges(&f(FamilySpec::Book(2))));
    }

    #[test]
    fn cartesian_grid_count() {
        let p = cartesian(&f(FamilySpec::Path(2)), &f(FamilySpec::Path(3)));
        assert_eq!((p.order(), p.edge_count()), (6, 7));
    }

    #[test]
    fn cartesian_degree_is_sum_of_factor_degrees() {
        let g = f(FamilySpec::Path(3));
        let h = f(FamilySpec::Cycle(4));
        let p = cartesian(&g, &h);
        for a in 0..g.order() {
            for b in 0..h.order() {
                assert_eq!(p.degree(a * h.order() + b), g.degree(a) + h.degree(b));
            }
        }
    }

    #[test]
    fn union_has_no_cross_edges() {
        let u = disjoint_union(&f(FamilySpec::Complete(1)), &f(FamilySpec::Complete(1)));
        assert!(u.same_edges(&f(FamilySpec::Empty(2))));
        let u2 = disjoint_union(&f(FamilySpec::Cycle(3)), &f(FamilySpec::Cycle(4)));
        assert_eq!(u2.components().len(), 2);
    }
}
