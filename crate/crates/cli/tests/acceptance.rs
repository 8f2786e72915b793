//! The acceptance gate: twelve criteria, one test and one pass/fail line
//! each under `cargo test --test acceptance`.
//!
//! 1.  Empty-set counts match independent closed forms.
//! 2.  The minimum blocking size is exactly n - g + 1 (exhaustive).
//! 3.  Every generated minimum family blocks (oracle count 0).
//! 4.  At sizes up to n - g + 1, blocking equals minimum-family shape.
//! 5.  At sizes n - g + 2 .. n - 1, blocking equals taxonomy membership.
//! 6.  The file fixtures classify at their advertised levels and block.
//! 7.  Within the n - g budget the direct builder never fails.
//! 8.  Cycle placements work for the listed parameters; the 4-cycle is
//!     certified impossible at g = 4.
//! 9.  Every 2-regular graph through 12 vertices places at each admissible
//!     face size (the 4-cycle alone is the criterion-8 negative).
//! 10. The listed generalized Petersen graphs place at g = 4 and, where
//!     the doubled vertex count stays admissible, at g = 6.
//! 11. Every connected simple cubic graph on 8 and 10 vertices is
//!     labeled, checked, placed, and oracle-confirmed within a minute.
//! 12. Command-level outputs are byte-identical across runs.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use gangulate_core::angulation_oracle::{
    count_gangulations, exists_gangulation, is_valid_gangulation,
};
use gangulate_core::convex_core::{admissible_params, Edge, Instance};
use gangulate_core::decide_construct::construct_small;
use gangulate_core::forbidden_configs::{
    classify_forbidding, generate_f_stars, is_f_star, ForbiddingClass,
};
use gangulate_core::placement::{
    certify_not_potentially_angulable, check_labeling_4, label_cubic, place_cubic, place_cycle,
    place_petersen, place_two_regular, AbstractGraph, Placement,
};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_chords(n: u32) -> Vec<Edge> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 2)..n {
            if a == 0 && b == n - 1 {
                continue;
            }
            out.push(Edge::new(a, b));
        }
    }
    out
}

fn visit_combinations(m: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + m - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Calls `f` on every chord subset of the given size.
fn each_subset(n: u32, g: u32, size: u32, mut f: impl FnMut(&Instance)) {
    let chords = all_chords(n);
    visit_combinations(chords.len(), size as usize, |idx| {
        let inst = Instance::new(n, g, idx.iter().map(|&i| chords[i])).expect("valid chords");
        f(&inst);
    });
}

fn random_instance(rng: &mut ChaCha8Rng, n: u32, g: u32, size: u32) -> Instance {
    let chords = all_chords(n);
    let idx = rand::seq::index::sample(rng, chords.len(), size as usize);
    Instance::new(n, g, idx.iter().map(|i| chords[i])).expect("valid chords")
}

fn binomial(top: u64, k: u64) -> BigUint {
    let mut r = BigUint::from(1u32);
    for i in 1..=k {
        r = r * BigUint::from(top - k + i) / BigUint::from(i);
    }
    r
}

/// Closed-form count of dissections of the admissible `n`-gon into faces
/// of size `g`: binom((g-1)s, s) / ((g-2)s + 1) over s = t + 1 faces.
/// Specializes to the Catalan numbers at g = 3.
fn dissection_count(n: u32, g: u32) -> BigUint {
    let s = u64::from((n - g) / (g - 2) + 1);
    let top = binomial((u64::from(g) - 1) * s, s);
    let div = BigUint::from((u64::from(g) - 2) * s + 1);
    assert_eq!(&top % &div, BigUint::from(0u32), "closed form must divide");
    top / div
}

fn empty_instance(n: u32, g: u32) -> Instance {
    Instance::new(n, g, []).expect("admissible")
}

/// Bijection, simplicity, edge-set agreement, and witness validity.
fn assert_sound(p: &Placement, graph: &AbstractGraph) {
    let n = p.target.n();
    assert_eq!(n, graph.n());
    assert_eq!(p.map.len(), graph.n() as usize);
    let mut seen = vec![false; n as usize];
    for &pos in &p.map {
        assert!(pos < n && !seen[pos as usize], "map must be a bijection");
        seen[pos as usize] = true;
    }
    let mapped: BTreeSet<Edge> = graph
        .edges()
        .iter()
        .map(|&(a, b)| Edge::new(p.map[a as usize], p.map[b as usize]))
        .collect();
    assert_eq!(mapped.len(), graph.edges().len(), "placed edges must be simple");
    assert_eq!(&mapped, p.target.forbidden());
    assert!(is_valid_gangulation(&p.target, &p.witness));
}

#[test]
fn criterion_01_empty_set_counts_match_closed_forms() {
    let start = Instant::now();
    for n in 3..=10u32 {
        let k = u64::from(n) - 2;
        let catalan = binomial(2 * k, k) / BigUint::from(k + 1);
        assert_eq!(dissection_count(n, 3), catalan);
        assert_eq!(count_gangulations(&empty_instance(n, 3)), catalan, "n = {n}");
    }
    for (n, want) in [(4u32, 1u32), (6, 3), (8, 12), (10, 55)] {
        let closed = dissection_count(n, 4);
        assert_eq!(closed, BigUint::from(want));
        assert_eq!(count_gangulations(&empty_instance(n, 4)), closed, "n = {n}");
    }
    assert!(start.elapsed() < Duration::from_secs(1), "criterion demands < 1 s");
}

const SMALL_GRID: [(u32, u32); 5] = [(3, 5), (3, 6), (3, 7), (4, 6), (4, 8)];

#[test]
fn criterion_02_minimum_blocking_size_is_exact() {
    for (g, n) in SMALL_GRID {
        let minimum = n - g + 1;
        for size in 0..minimum {
            each_subset(n, g, size, |inst| {
                assert!(
                    exists_gangulation(inst),
                    "a set below the minimum size blocks:\n{}",
                    inst.serialize()
                );
            });
        }
        let mut found = false;
        each_subset(n, g, minimum, |inst| {
            found = found || !exists_gangulation(inst);
        });
        assert!(found, "no blocking set of size {minimum} at (g={g}, n={n})");
    }
}

#[test]
fn criterion_03_generated_minimum_families_block() {
    let pairs = SMALL_GRID.iter().copied().chain([(5, 8), (5, 11)]);
    for (g, n) in pairs {
        let families = generate_f_stars(n, g).expect("admissible parameters");
        assert!(!families.is_empty(), "no families generated at (g={g}, n={n})");
        for inst in &families {
            assert_eq!(
                count_gangulations(inst),
                BigUint::from(0u32),
                "generated family fails to block:\n{}",
                inst.serialize()
            );
        }
    }
}

#[test]
fn criterion_04_blocking_equals_minimum_shape_up_to_the_bound() {
    for (g, n) in SMALL_GRID {
        for size in 0..=(n - g + 1) {
            each_subset(n, g, size, |inst| {
                let blocked = !exists_gangulation(inst);
                let shaped = is_f_star(inst).expect("chord-only set");
                assert_eq!(
                    blocked,
                    shaped,
                    "oracle and recognizer disagree on:\n{}",
                    inst.serialize()
                );
            });
        }
    }
}

fn assert_taxonomy_matches(inst: &Instance) {
    let blocked = !exists_gangulation(inst);
    let class = classify_forbidding(inst).expect("chord-only set").class;
    let recognized = class != ForbiddingClass::NotForbidding;
    assert_eq!(
        blocked,
        recognized,
        "oracle and taxonomy disagree (class {class:?}) on:\n{}",
        inst.serialize()
    );
}

#[test]
fn criterion_05_blocking_equals_taxonomy_in_the_upper_range() {
    for (g, n) in [(3, 5), (3, 6), (4, 6), (4, 8)] {
        for size in (n - g + 2)..=(n - 1) {
            each_subset(n, g, size, |inst| assert_taxonomy_matches(inst));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE55);
    for (g, n) in [(4u32, 10u32), (5, 11)] {
        for _ in 0..10_000 {
            let size = rng.gen_range((n - g + 2)..=(n - 1));
            assert_taxonomy_matches(&random_instance(&mut rng, n, g, size));
        }
    }
}

fn fixture(name: &str) -> Instance {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures")
        .join(name);
    Instance::parse(&fs::read_to_string(&path).expect("fixture readable"))
        .expect("fixture parses")
}

#[test]
fn criterion_06_curated_fixtures_classify_and_block() {
    let expectations = [
        ("fstar_6_4.txt", ForbiddingClass::FStar),
        ("fstar_12_4_deg44.txt", ForbiddingClass::FStar),
        ("fstar_12_4_deg22.txt", ForbiddingClass::FStar),
        ("fstar_12_4_deg33.txt", ForbiddingClass::FStar),
        ("jstar2_14_5_a.txt", ForbiddingClass::JStar(2)),
        ("jstar2_14_5_b.txt", ForbiddingClass::JStar(2)),
        ("jstar3_18_4.txt", ForbiddingClass::JStar(3)),
        ("jstar3_20_5.txt", ForbiddingClass::JStar(3)),
    ];
    for (name, class) in expectations {
        let inst = fixture(name);
        let got = classify_forbidding(&inst).expect("fixture classifies").class;
        assert_eq!(got, class, "{name}");
        assert_eq!(count_gangulations(&inst), BigUint::from(0u32), "{name}");
    }
}

#[test]
fn criterion_07_the_direct_builder_never_fails_in_budget() {
    let build = |inst: &Instance| {
        let w = construct_small(inst).unwrap_or_else(|e| {
            panic!("builder failed ({e}) on:\n{}", inst.serialize())
        });
        assert!(is_valid_gangulation(inst, &w), "bad witness on:\n{}", inst.serialize());
    };
    for (g, n) in [(3u32, 6u32), (3, 7), (4, 8)] {
        for size in 0..=(n - g) {
            each_subset(n, g, size, |inst| build(inst));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xB11D);
    for (g, n) in [(4u32, 12u32), (5, 14)] {
        for _ in 0..10_000 {
            let size = rng.gen_range(0..=(n - g));
            build(&random_instance(&mut rng, n, g, size));
        }
    }
}

#[test]
fn criterion_08_cycle_placements_and_the_quadrilateral_negative() {
    for (g, n) in [(4u32, 6u32), (4, 8), (4, 10), (5, 8), (6, 6), (6, 10)] {
        let p = place_cycle(n, g).expect("placement exists");
        assert_eq!(p.target.g(), g);
        assert_sound(&p, &AbstractGraph::cycle(n).expect("cycle"));
    }
    let square = AbstractGraph::cycle(4).expect("cycle");
    assert!(
        certify_not_potentially_angulable(&square, 4).expect("search completes"),
        "some placement of the 4-cycle was left angulable"
    );
}

/// All multisets of cycle lengths (each at least 3) summing to `total`,
/// as nondecreasing sequences.
fn cycle_partitions(total: u32, min_part: u32) -> Vec<Vec<u32>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in min_part..=total {
        if total - first != 0 && total - first < first {
            continue;
        }
        for mut rest in cycle_partitions(total - first, first) {
            let mut parts = vec![first];
            parts.append(&mut rest);
            out.push(parts);
        }
    }
    out
}

fn disjoint_cycles(parts: &[u32]) -> AbstractGraph {
    let mut edges = Vec::new();
    let mut base = 0;
    for &len in parts {
        for i in 0..len {
            edges.push((base + i, base + (i + 1) % len));
        }
        base += len;
    }
    AbstractGraph::new(base, edges).expect("valid cycles")
}

#[test]
fn criterion_09_every_two_regular_graph_places() {
    // n = 3 admits no face size at least 4; n = 4 is the 4-cycle, proven
    // impossible by criterion 8. Everything from 5 through 12 must place.
    for n in 5..=12u32 {
        for parts in cycle_partitions(n, 3) {
            let graph = disjoint_cycles(&parts);
            for g in 4..=n {
                if !admissible_params(n, g) {
                    continue;
                }
                let p = place_two_regular(&graph, g)
                    .unwrap_or_else(|e| panic!("parts {parts:?} at g={g}: {e}"));
                assert_eq!(p.target.g(), g);
                assert_sound(&p, &graph);
            }
        }
    }
}

#[test]
fn criterion_10_petersen_placements_at_four_and_six() {
    for (pn, k) in [(5u32, 1u32), (5, 2), (7, 2), (7, 3), (8, 3)] {
        let graph = AbstractGraph::petersen(pn, k).expect("parameters valid");
        for g in [4u32, 6] {
            if !admissible_params(2 * pn, g) {
                continue;
            }
            let p = place_petersen(pn, k, g)
                .unwrap_or_else(|e| panic!("P({pn},{k}) at g={g}: {e}"));
            assert_eq!(p.target.n(), 2 * pn);
            assert_eq!(p.target.g(), g);
            assert_sound(&p, &graph);
        }
    }
}

#[test]
fn criterion_11_all_small_cubic_graphs_label_and_place() {
    let start = Instant::now();
    for (n, expected) in [(8u32, 5usize), (10, 19)] {
        let graphs = AbstractGraph::enumerate_connected_cubic(n).expect("in range");
        assert_eq!(graphs.len(), expected, "published count of cubic graphs on {n}");
        for graph in &graphs {
            let labeling = label_cubic(graph).expect("labeling exists");
            assert!(check_labeling_4(graph, &labeling), "labeling check failed");
            let p = place_cubic(graph).expect("placement exists");
            assert_sound(&p, graph);
            assert!(exists_gangulation(&p.target), "oracle must confirm");
        }
    }
    assert!(start.elapsed() < Duration::from_secs(60), "criterion demands < 1 min");
}

fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .ancestors()
        .nth(2)
        .expect("workspace root")
        .to_path_buf()
}

fn gangulate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gangulate"))
        .args(args)
        .current_dir(workspace_root())
        .env_remove("GANGULATE_MAX_N")
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_12_command_outputs_are_byte_identical() {
    let fstar = "crates/core/tests/fixtures/fstar_6_4.txt";
    let jstar = "crates/core/tests/fixtures/jstar2_14_5_a.txt";
    let empty = "crates/cli/tests/inputs/empty_8_4.txt";
    let cubic = "crates/core/tests/fixtures/graphs/petersen_7_3.txt";
    let batteries: [&[&str]; 9] = [
        &["decide", empty, "--witness"],
        &["decide", fstar],
        &["count", jstar],
        &["construct", empty],
        &["classify", jstar],
        &["place", "petersen", "n=7", "k=3", "g=4"],
        &["place", "cubic", cubic],
        &["census", "8", "4", "--sample", "40", "--seed", "11"],
        &["render", empty, "--witness"],
    ];
    for args in batteries {
        let first = gangulate(args);
        let second = gangulate(args);
        assert_eq!(
            first.stdout, second.stdout,
            "two runs of {args:?} produced different bytes"
        );
        assert_eq!(first.status.code(), second.status.code());
        assert!(!first.stdout.is_empty(), "{args:?} printed nothing");
    }
}
