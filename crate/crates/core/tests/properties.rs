//! Property tests for the structural invariants: handshake, complement
//! involution, component partitions, deletion/degree bookkeeping, oracle
//! equivalence on random small graphs, witness minimality, and dedup-key
//! invariance under relabeling.

use proptest::prelude::*;

use sdstab_core::enumeration::{dedup_key, graph_from_code, labeled_graph_count, pair_count};
use sdstab_core::stability::{
    stability, stability_with, verify_stability_witness, InnerSolver, StabilityOptions,
    StabilityResult,
};
use sdstab_core::strongdom::{
    each_combination, forced_vertices, gamma, gamma_st, gamma_st_bruteforce, is_strong_dominating,
};
use sdstab_core::{Graph, VertexSet};

/// Random graph of order 1..=max_n as (n, edge code).
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        (Just(n), 0..labeled_graph_count(n)).prop_map(|(n, code)| graph_from_code(n, code))
    })
}

proptest! {
    #[test]
    fn handshake(g in arb_graph(7)) {
        let degree_sum: usize = (0..g.order()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
    }

    #[test]
    fn complement_is_involution(g in arb_graph(7)) {
        prop_assert!(g.complement().complement().same_edges(&g));
        // Edge counts of g and its complement add to C(n,2).
        prop_assert_eq!(
            g.edge_count() + g.complement().edge_count(),
            pair_count(g.order())
        );
    }

    #[test]
    fn deletion_updates_degrees(g in arb_graph(7), mask in 0u64..128) {
        let n = g.order();
        let removed = VertexSet::from_members(n, (0..n).filter(|v| mask >> v & 1 == 1));
        prop_assume!(removed.len() < n);
        let h = g.delete_vertices(&removed).unwrap();
        let survivors: Vec<usize> = (0..n).filter(|&v| !removed.contains(v)).collect();
        for (new, &old) in survivors.iter().enumerate() {
            let lost = g.neighbors(old).iter().filter(|&w| removed.contains(w)).count();
            prop_assert_eq!(h.degree(new), g.degree(old) - lost);
        }
    }

    #[test]
    fn components_partition_the_vertices(g in arb_graph(7)) {
        let comps = g.components();
        let mut seen = vec![false; g.order()];
        for c in &comps {
            for v in c.iter() {
                prop_assert!(!seen[v], "components overlap");
                seen[v] = true;
            }
        }
        prop_assert!(seen.iter().all(|&s| s), "components miss a vertex");
        // No edges between different components.
        for (i, a) in comps.iter().enumerate() {
            for b in comps.iter().skip(i + 1) {
                for u in a.iter() {
                    prop_assert!(!g.neighbors(u).intersects(b));
                }
            }
        }
    }

    #[test]
    fn connectivity_bounded_by_min_degree(g in arb_graph(7)) {
        let kappa = g.vertex_connectivity();
        if g.is_complete() {
            prop_assert_eq!(kappa, g.order() - 1);
        } else {
            prop_assert!(kappa <= g.min_degree());
        }
    }

    #[test]
    fn solver_agrees_with_oracle(g in arb_graph(7)) {
        let fast = gamma_st(&g);
        let slow = gamma_st_bruteforce(&g).unwrap();
        prop_assert_eq!(fast.value, slow.value);
        prop_assert_eq!(&fast.witness, &slow.witness, "lexicographically least witnesses differ");
        prop_assert!(is_strong_dominating(&g, &fast.witness));
    }

    #[test]
    fn gamma_sandwich(g in arb_graph(7)) {
        let plain = gamma(&g).value;
        let strong = gamma_st(&g).value;
        prop_assert!(plain <= strong);
        prop_assert!(strong <= g.order());
    }

    #[test]
    fn regular_graphs_have_equal_gammas(g in arb_graph(7)) {
        let d = g.max_degree();
        prop_assume!((0..g.order()).all(|v| g.degree(v) == d));
        prop_assert_eq!(gamma(&g).value, gamma_st(&g).value);
    }

    #[test]
    fn gamma_st_is_component_additive(
        a in arb_graph(5),
        b in arb_graph(5),
    ) {
        let u = sdstab_core::ops::disjoint_union(&a, &b);
        prop_assert_eq!(gamma_st(&u).value, gamma_st(&a).value + gamma_st(&b).value);
    }

    #[test]
    fn forced_vertices_in_witness(g in arb_graph(7)) {
        prop_assert!(forced_vertices(&g).is_subset_of(&gamma_st(&g).witness));
    }

    #[test]
    fn dedup_key_is_relabeling_invariant(g in arb_graph(6), seed in any::<u64>()) {
        let n = g.order();
        // Fisher-Yates from the seed.
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let relabeled_edges: Vec<(usize, usize)> =
            g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::new(n, &relabeled_edges).unwrap();
        prop_assert_eq!(dedup_key(&g).unwrap(), dedup_key(&h).unwrap());
    }
}

proptest! {
    // Stability searches are heavier; fewer cases suffice.
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn stability_witness_is_minimal(g in arb_graph(7)) {
        prop_assume!(g.order() >= 2);
        match stability(&g).unwrap() {
            StabilityResult::Finite { k, removal, gamma_before, gamma_after, .. } => {
                prop_assert_eq!(gamma_st(&g).value, gamma_before);
                let h = g.delete_vertices(&removal).unwrap();
                prop_assert_eq!(gamma_st(&h).value, gamma_after);
                prop_assert_ne!(gamma_after, gamma_before);
                // Exhaustively confirm nothing smaller changes gamma_st.
                let n = g.order();
                for smaller in 1..k {
                    let mut changed = false;
                    each_combination(n, smaller, |subset| {
                        let s = VertexSet::from_members(n, subset.iter().copied());
                        if verify_stability_witness(&g, &s).unwrap() {
                            changed = true;
                        }
                        changed
                    });
                    prop_assert!(!changed, "a smaller removal set changes gamma_st");
                }
            }
            StabilityResult::Unbounded { conventional_value } => {
                prop_assert_eq!(conventional_value, g.order());
                // Only complete graphs are unbounded.
                prop_assert!(g.is_complete());
            }
        }
    }

    #[test]
    fn any_changing_set_bounds_stability(g in arb_graph(6), mask in 1u64..63) {
        let n = g.order();
        prop_assume!(n >= 2);
        let s = VertexSet::from_members(n, (0..n).filter(|v| mask >> v & 1 == 1));
        prop_assume!(!s.is_empty() && s.len() < n);
        if verify_stability_witness(&g, &s).unwrap() {
            let st = stability(&g).unwrap();
            prop_assert!(st.finite_k().is_some_and(|k| k <= s.len()));
        }
    }

    #[test]
    fn stability_is_deterministic_across_solvers(g in arb_graph(6)) {
        prop_assume!(g.order() >= 2);
        let a = stability(&g).unwrap();
        let b = stability(&g).unwrap();
        prop_assert_eq!(&a, &b);
        let oracle = stability_with(
            &g,
            &StabilityOptions { cap: 14, solver: InnerSolver::BruteForce },
        )
        .unwrap();
        prop_assert_eq!(&a, &oracle);
    }

    #[test]
    fn universal_vertex_graphs_have_st_equal_universal_count(g in arb_graph(5)) {
        // Attach a universal vertex to a random graph; if a non-universal
        // vertex remains, st equals the universal count.
        let joined = sdstab_core::ops::join(
            &sdstab_core::build(&sdstab_core::FamilySpec::Complete(1)).unwrap(),
            &g,
        );
        let u = joined.universal_vertices().len();
        prop_assume!(u < joined.order());
        let st = stability(&joined).unwrap();
        prop_assert_eq!(st.finite_k(), Some(u));
    }
}
