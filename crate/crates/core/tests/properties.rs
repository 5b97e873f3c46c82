//! Randomized invariants of the simplex graph and its routing.

use std::collections::HashSet;

use proptest::prelude::*;
use simplex_topology::oracles::{self, FaultSet};
use simplex_topology::routing::{self, container_width};
use simplex_topology::simplex::{self, GraphParams, Vertex};

/// A vertex of `T_m^n` built by dropping `m` units into `n + 1` bins.
fn vertex_from_bins(n: usize, m: u32, bins: &[usize]) -> Vertex {
    let mut coords = vec![0i64; n + 1];
    for &b in bins {
        coords[b] += 1;
    }
    simplex::make_vertex(&coords, GraphParams::new(n, m).unwrap()).unwrap()
}

fn instance(max_n: usize, max_m: u32) -> impl Strategy<Value = (usize, u32)> {
    (1..=max_n, 1..=max_m)
}

fn vertex_in(n: usize, m: u32) -> impl Strategy<Value = Vertex> {
    prop::collection::vec(0..=n, m as usize).prop_map(move |bins| vertex_from_bins(n, m, &bins))
}

fn distinct_pair(max_n: usize, max_m: u32) -> impl Strategy<Value = (Vertex, Vertex)> {
    instance(max_n, max_m)
        .prop_flat_map(|(n, m)| (vertex_in(n, m), vertex_in(n, m)))
        .prop_filter("distinct endpoints", |(u, v)| u != v)
}

fn l1_half(u: &Vertex, v: &Vertex) -> usize {
    let total: i64 = u.coords().iter().zip(v.coords()).map(|(&a, &b)| (i64::from(a) - i64::from(b)).abs()).sum();
    (total / 2) as usize
}

/// One unit moved between two coordinates, everything else unchanged.
fn is_edge(a: &Vertex, b: &Vertex) -> bool {
    let diffs: Vec<i64> = a
        .coords()
        .iter()
        .zip(b.coords())
        .map(|(&x, &y)| i64::from(x) - i64::from(y))
        .filter(|d| *d != 0)
        .collect();
    diffs.len() == 2 && diffs.iter().all(|d| d.abs() == 1) && diffs[0] + diffs[1] == 0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn container_paths_are_disjoint_with_expected_lengths((u, v) in distinct_pair(6, 6)) {
        let container = routing::build_container(&u, &v).unwrap();
        let h = l1_half(&u, &v);
        let p = u.coords().iter().zip(v.coords()).filter(|(a, b)| a > b).count();
        let q = u.coords().iter().zip(v.coords()).filter(|(a, b)| a < b).count();
        prop_assert_eq!(container.len(), container_width(u.n(), p, q));
        prop_assert!(container.len() >= u.n());
        prop_assert_eq!(container.short_paths.len(), p * q);

        let mut internal_seen = HashSet::new();
        for (i, path) in container.paths().enumerate() {
            let vs = path.vertices();
            prop_assert_eq!(vs.first(), Some(&u));
            prop_assert_eq!(vs.last(), Some(&v));
            let expected_len = if i < p * q { h } else { h + 1 };
            prop_assert_eq!(path.len(), expected_len);
            for w in vs.windows(2) {
                prop_assert!(is_edge(&w[0], &w[1]), "{} -> {} is not an edge", w[0], w[1]);
            }
            let distinct: HashSet<_> = vs.iter().collect();
            prop_assert_eq!(distinct.len(), vs.len());
            for x in path.internal() {
                prop_assert!(internal_seen.insert(x.clone()), "{} shared", x);
            }
        }
    }

    #[test]
    fn detours_lift_the_equal_coordinate((u, v) in distinct_pair(6, 6)) {
        let class = simplex::classify_positions(&u, &v).unwrap();
        for &k in &class.equal {
            let path = routing::construct_detour_path(&u, &v, k).unwrap();
            for x in path.internal() {
                prop_assert_eq!(x.coord(k), v.coord(k) + 1);
            }
        }
    }

    #[test]
    fn adjacency_is_symmetric_irreflexive_and_preserves_mass(
        v in instance(6, 6).prop_flat_map(|(n, m)| vertex_in(n, m))
    ) {
        let mass: u32 = v.coords().iter().sum();
        let nbrs = simplex::neighbors(&v);
        prop_assert_eq!(nbrs.len(), v.degree());
        for w in &nbrs {
            prop_assert!(w != &v);
            prop_assert!(is_edge(&v, w));
            prop_assert_eq!(w.coords().iter().sum::<u32>(), mass);
            prop_assert!(simplex::neighbors(w).contains(&v));
            prop_assert!(simplex::is_adjacent(w, &v).unwrap());
        }
        prop_assert!(!simplex::is_adjacent(&v, &v).unwrap());
    }

    #[test]
    fn h_metric_matches_bfs((u, v) in distinct_pair(4, 4)) {
        let d = oracles::bfs_distance(u.params(), &u, &v, &FaultSet::new()).unwrap();
        prop_assert_eq!(d.finite(), Some(l1_half(&u, &v) as u32));
        prop_assert_eq!(simplex::h_distance(&u, &v).unwrap() as usize, l1_half(&u, &v));
    }

    #[test]
    fn routing_survives_any_tolerated_fault_set(
        (u, v, faults) in distinct_pair(5, 5).prop_flat_map(|(u, v)| {
            let (n, m) = (u.n(), u.params().m);
            let faults = prop::collection::vec(vertex_in(n, m), 0..n);
            (Just(u), Just(v), faults)
        })
    ) {
        let faults: FaultSet = faults.into_iter().filter(|x| x != &u && x != &v).collect();
        let path = routing::route_avoiding(&u, &v, &faults).unwrap();
        prop_assert_eq!(path.source(), &u);
        prop_assert_eq!(path.target(), &v);
        prop_assert!(path.internal().iter().all(|x| !faults.contains(x)));
        for w in path.vertices().windows(2) {
            prop_assert!(is_edge(&w[0], &w[1]));
        }
    }

    #[test]
    fn flow_bound_dominates_container((u, v) in distinct_pair(4, 4)) {
        let container = routing::build_container(&u, &v).unwrap();
        let flow = oracles::max_disjoint_paths(u.params(), &u, &v).unwrap();
        prop_assert!(flow >= container.len());
        let bound = if simplex::is_adjacent(&u, &v).unwrap() { flow - 1 } else { flow };
        prop_assert!(bound <= u.degree().min(v.degree()));
    }
}
