use hlnet_core::ms::edges_between;
use hlnet_core::oracle::{components_after, isomorphic_small, max_induced_edges, SearchLimits, SearchStatus};
use hlnet_core::topology::{boundary_edges, induced_edge_count};
use hlnet_core::{
    algorithm_ms, build_component_cut, e_g, g84, hypercube, materialize, random_hl, verify_cut, Branch, VertexId, VertexSet,
};
use proptest::prelude::*;

fn dim_and_seed(max_dim: u32) -> impl Strategy<Value = (u32, u64)> {
    (1..=max_dim, any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_networks_are_regular_connected_and_sized((n, seed) in dim_and_seed(10)) {
        let g = materialize(&random_hl(n, seed).unwrap()).unwrap();
        prop_assert_eq!(g.vertex_count(), 1usize << n);
        prop_assert_eq!(g.edge_count(), u64::from(n) << (n - 1));
        prop_assert_eq!(g.degree(), n as usize);
        prop_assert!(g.vertices().all(|v| g.neighbors(v).count() == n as usize));
        prop_assert!(g.is_connected());
    }

    #[test]
    fn halves_are_networks_joined_by_a_perfect_matching((n, seed) in dim_and_seed(9)) {
        let r = random_hl(n, seed).unwrap();
        let g = materialize(&r).unwrap();
        let half = 1u32 << (n - 1);
        let left = VertexSet::from_range(0, half);
        let right = VertexSet::from_range(half, 2 * half);
        prop_assert_eq!(edges_between(&g, &left, &right), u64::from(half));
        let sub = materialize(r.subrecipe(&[Branch::Left]).unwrap()).unwrap();
        prop_assert_eq!(induced_edge_count(&g, &left).unwrap(), sub.edge_count());
        for e in sub.edges() {
            prop_assert!(g.has_edge(e.u(), e.v()));
        }
    }

    #[test]
    fn degree_sum_splits_into_inside_and_boundary((n, seed) in dim_and_seed(8), picks in prop::collection::vec(any::<u32>(), 0..40)) {
        let g = materialize(&random_hl(n, seed).unwrap()).unwrap();
        let x: VertexSet = picks.iter().map(|p| VertexId(p % (1u32 << n))).collect();
        let inside = induced_edge_count(&g, &x).unwrap();
        let boundary = boundary_edges(&g, &x).unwrap().len() as u64;
        prop_assert_eq!(u64::from(n) * x.len() as u64, 2 * inside + boundary);
    }

    #[test]
    fn ms_selection_is_extremal((n, seed) in dim_and_seed(12), raw in any::<u64>()) {
        let r = random_hl(n, seed).unwrap();
        let g = 1 + raw % ((1u64 << n) - 1);
        let trace = algorithm_ms(&r, g).unwrap();
        let graph = materialize(&r).unwrap();
        prop_assert_eq!(trace.union.len() as u64, g);
        prop_assert_eq!(induced_edge_count(&graph, &trace.union).unwrap(), e_g(g).unwrap());
        let sizes: u64 = trace.blocks.iter().map(|b| 1u64 << b.dim).sum();
        prop_assert_eq!(sizes, g);
    }

    #[test]
    fn component_cut_isolates_the_selection((n, seed) in (8u32..=10, any::<u64>()), k in 0u32..=5) {
        let g = (1u64 << k).min(1 << n.div_ceil(2)) + u64::from(k % 2);
        let r = random_hl(n, seed).unwrap();
        let graph = materialize(&r).unwrap();
        let cut = build_component_cut(&r, g).unwrap();
        let report = verify_cut(&graph, &cut, g).unwrap();
        prop_assert_eq!(report.cut_size, u64::from(n) * g - e_g(g).unwrap());
        prop_assert!(report.matches_prediction);
        prop_assert!(report.component_count > g);
        prop_assert_eq!(report.isolated_count, g);
        let parts = components_after(&graph, &cut).unwrap();
        prop_assert_eq!(parts.blocks.len() as u64, report.component_count);
    }

    #[test]
    fn oracle_matches_formula_on_small_networks((n, seed) in dim_and_seed(4), raw in any::<u64>()) {
        let graph = materialize(&random_hl(n, seed).unwrap()).unwrap();
        let k = 1 + raw % (1u64 << n);
        let found = max_induced_edges(&graph, k as usize, &SearchLimits::unlimited()).unwrap();
        prop_assert_eq!(found.status, SearchStatus::Complete);
        prop_assert_eq!(found.value, e_g(k).unwrap());
        prop_assert_eq!(induced_edge_count(&graph, &found.witness).unwrap(), found.value);
    }

    #[test]
    fn dimension_three_networks_are_one_of_two(seed in any::<u64>()) {
        let graph = materialize(&random_hl(3, seed).unwrap()).unwrap();
        let cube = isomorphic_small(&graph, &materialize(&hypercube(3).unwrap()).unwrap()).unwrap();
        let other = isomorphic_small(&graph, &materialize(&g84()).unwrap()).unwrap();
        prop_assert!(cube != other);
    }
}

#[test]
fn same_seed_same_network() {
    for n in 0..=8 {
        assert_eq!(random_hl(n, 99).unwrap(), random_hl(n, 99).unwrap());
    }
    assert_ne!(random_hl(6, 1).unwrap(), random_hl(6, 2).unwrap());
}
