//! Dual-route checks: the combinatorial recognizers against the exhaustive
//! oracle. The recognizers never consult the oracle, so agreement here is
//! evidence for both sides.

mod common;

use common::{all_chords, for_each_subset, random_chord_instances};
use gangulate_core::angulation_oracle::exists_gangulation;
use gangulate_core::forbidden_configs::{classify_forbidding, is_f_star, ForbiddingClass};
use gangulate_core::Instance;

/// Small parameter grid that exhaustive subset sweeps can afford.
const GRID: &[(u32, u32)] = &[(5, 3), (6, 3), (6, 4)];

#[test]
fn below_minimum_size_nothing_blocks() {
    for &(n, g) in GRID {
        let chords = all_chords(n);
        for k in 0..(n - g + 1) as usize {
            for_each_subset(&chords, k, &mut |subset| {
                let inst = Instance::new(n, g, subset.iter().copied()).unwrap();
                assert!(
                    exists_gangulation(&inst),
                    "blocked by only {k} chords at n={n}, g={g}: {subset:?}"
                );
            });
        }
    }
}

#[test]
fn at_minimum_size_blocking_equals_f_star() {
    for &(n, g) in GRID {
        let chords = all_chords(n);
        let k = (n - g + 1) as usize;
        let mut blocked = 0u32;
        for_each_subset(&chords, k, &mut |subset| {
            let inst = Instance::new(n, g, subset.iter().copied()).unwrap();
            let oracle_blocked = !exists_gangulation(&inst);
            let recognized = is_f_star(&inst).unwrap();
            assert_eq!(
                oracle_blocked, recognized,
                "oracle and recognizer disagree at n={n}, g={g}: {subset:?}"
            );
            if oracle_blocked {
                blocked += 1;
            }
        });
        assert!(blocked > 0, "no blocking set of minimum size at n={n}, g={g}");
    }
}

#[test]
fn reducible_range_blocking_equals_some_level() {
    for &(n, g) in GRID {
        let chords = all_chords(n);
        for m in (n - g + 2)..=(n - 1) {
            for_each_subset(&chords, m as usize, &mut |subset| {
                let inst = Instance::new(n, g, subset.iter().copied()).unwrap();
                let oracle_blocked = !exists_gangulation(&inst);
                let class = classify_forbidding(&inst).unwrap().class;
                let recognized = matches!(class, ForbiddingClass::JStar(_));
                assert_eq!(
                    oracle_blocked, recognized,
                    "disagreement at n={n}, g={g}, m={m}: {subset:?} classified {class:?}"
                );
            });
        }
    }
}

#[test]
fn reducible_range_random_larger_polygons() {
    // Spot sweep on sizes too big to exhaust in an ordinary test run; the
    // acceptance suite drives the full seeded volume.
    for &(n, g) in &[(10u32, 4u32), (11, 5)] {
        for m in (n - g + 2)..=(n - 1) {
            for inst in random_chord_instances(n, g, m as usize, 150, 0x5eed + u64::from(n)) {
                let oracle_blocked = !exists_gangulation(&inst);
                let class = classify_forbidding(&inst).unwrap().class;
                let recognized = matches!(class, ForbiddingClass::JStar(_));
                assert_eq!(
                    oracle_blocked, recognized,
                    "disagreement at n={n}, g={g}, m={m}: {:?} classified {class:?}",
                    inst.serialize()
                );
            }
        }
    }
}
