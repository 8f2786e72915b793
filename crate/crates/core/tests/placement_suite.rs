//! Placement constructions checked against the oracle: cycles, 2-regular
//! unions, generalized Petersen graphs, and every small cubic graph.

use gangulate_core::angulation_oracle::is_valid_gangulation;
use gangulate_core::placement::{
    certify_not_potentially_angulable, check_labeling_4, label_cubic, place_cubic, place_cycle,
    place_petersen, place_two_regular, AbstractGraph, Placement,
};
use gangulate_core::{admissible_params, Error};

fn assert_placement_sound(p: &Placement, graph: &AbstractGraph) {
    // Bijection.
    let n = graph.n();
    let mut seen = vec![false; n as usize];
    for &pos in &p.map {
        assert!(pos < n && !seen[pos as usize], "map is not a bijection");
        seen[pos as usize] = true;
    }
    // Placed edges = abstract edges under the map, all distinct chords.
    assert_eq!(p.target.forbidden_len() as usize, graph.edge_count());
    for &(a, b) in graph.edges() {
        let e = gangulate_core::Edge::new(p.map[a as usize], p.map[b as usize]);
        assert!(p.target.forbidden().contains(&e));
    }
    // Witness validates and therefore avoids all placed edges.
    assert!(is_valid_gangulation(&p.target, &p.witness));
}

#[test]
fn cycle_placements_for_small_admissible_parameters() {
    for (n, g) in [(6, 4), (8, 4), (10, 4), (8, 5), (6, 6), (10, 6), (14, 5)] {
        let p = place_cycle(n, g).unwrap_or_else(|e| panic!("cycle ({n},{g}): {e}"));
        let graph = AbstractGraph::cycle(n).unwrap();
        assert_placement_sound(&p, &graph);
    }
}

#[test]
fn quadrilateral_cycle_placement_is_tight_at_four() {
    assert!(matches!(
        place_cycle(4, 4),
        Err(Error::NotPotentiallyAngulable(_))
    ));
    let c4 = AbstractGraph::cycle(4).unwrap();
    assert!(certify_not_potentially_angulable(&c4, 4).unwrap());
}

/// Every partition of n into parts >= 3 gives one 2-regular graph.
fn two_regular_graphs(n: u32) -> Vec<AbstractGraph> {
    fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for part in (3..=max.min(n)).rev() {
            if n - part != 0 && n - part < 3 {
                continue;
            }
            for mut rest in partitions(n - part, part) {
                rest.insert(0, part);
                out.push(rest);
            }
        }
        out
    }
    partitions(n, n)
        .into_iter()
        .map(|parts| {
            let mut edges = Vec::new();
            let mut base = 0;
            for len in parts {
                for i in 0..len {
                    edges.push((base + i, base + (i + 1) % len));
                }
                base += len;
            }
            AbstractGraph::new(n, edges).unwrap()
        })
        .collect()
}

#[test]
fn every_two_regular_graph_up_to_twelve_vertices_places() {
    for n in 5..=12u32 {
        for g in 4..=n {
            if !admissible_params(n, g) {
                continue;
            }
            for graph in two_regular_graphs(n) {
                let p = place_two_regular(&graph, g)
                    .unwrap_or_else(|e| panic!("2-regular n={n} g={g}: {e}"));
                assert_placement_sound(&p, &graph);
            }
        }
    }
}

#[test]
fn petersen_family_places_where_admissible() {
    for (n, k) in [(5, 1), (5, 2), (7, 2), (7, 3), (8, 3)] {
        for g in 4..=2 * n {
            if !admissible_params(2 * n, g) || g == 3 {
                continue;
            }
            let p = place_petersen(n, k, g)
                .unwrap_or_else(|e| panic!("petersen ({n},{k}) g={g}: {e}"));
            let graph = AbstractGraph::petersen(n, k).unwrap();
            assert_placement_sound(&p, &graph);
        }
    }
}

#[test]
fn every_cubic_graph_on_eight_and_ten_vertices_places() {
    let counts = [(8u32, 5usize), (10, 19)];
    for (n, expected) in counts {
        let all = AbstractGraph::enumerate_connected_cubic(n).unwrap();
        assert_eq!(all.len(), expected, "published count for n={n}");
        for (idx, graph) in all.iter().enumerate() {
            let lab = label_cubic(graph)
                .unwrap_or_else(|e| panic!("labeling n={n} #{idx}: {e}"));
            assert!(check_labeling_4(graph, &lab), "checker n={n} #{idx}");
            let p = place_cubic(graph).unwrap_or_else(|e| panic!("placing n={n} #{idx}: {e}"));
            assert_placement_sound(&p, graph);
        }
    }
}

#[test]
fn complete_graph_k4_cannot_be_placed() {
    let k4 = AbstractGraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    assert!(certify_not_potentially_angulable(&k4, 4).unwrap());
}
