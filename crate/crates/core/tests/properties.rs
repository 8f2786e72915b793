//! Randomized invariants over small instances.
//!
//! Every generated instance is small enough for the exact oracle, so each
//! property pits a structural claim (symmetry, monotonicity, agreement
//! between entry points) against a full enumeration.

use gangulate_core::angulation_oracle::{
    count_gangulations, exists_gangulation, find_gangulation, is_valid_gangulation,
};
use gangulate_core::convex_core::{
    admissible_params, chords_required, edges_cross, faces_required, Edge, Instance,
};
use gangulate_core::decide_construct::{construct_small, decide, Verdict};
use num_bigint::BigUint;
use proptest::prelude::*;

/// All chords of the `n`-gon: vertex pairs at cyclic gap two or more.
fn all_chords(n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 2)..n {
            if a == 0 && b == n - 1 {
                continue;
            }
            out.push((a, b));
        }
    }
    out
}

/// Admissible `(n, g)` pairs small enough for exhaustive counting.
fn params() -> impl Strategy<Value = (u32, u32)> {
    prop_oneof![
        (1u32..=9).prop_map(|t| (3 + t, 3)),
        (1u32..=5).prop_map(|t| (4 + 2 * t, 4)),
        (1u32..=3).prop_map(|t| (5 + 3 * t, 5)),
        (1u32..=2).prop_map(|t| (6 + 4 * t, 6)),
    ]
}

/// An instance with up to eight forbidden chords, never boundary edges.
fn instances() -> impl Strategy<Value = Instance> {
    params().prop_flat_map(|(n, g)| {
        let chords = all_chords(n);
        let cap = chords.len().min(8);
        proptest::sample::subsequence(chords, 0..=cap).prop_map(move |es| {
            Instance::new(n, g, es.into_iter().map(|(a, b)| Edge::new(a, b)))
                .expect("generated chords are valid")
        })
    })
}

proptest! {
    #[test]
    fn serialize_then_parse_is_the_identity(inst in instances()) {
        let text = inst.serialize();
        let back = Instance::parse(&text).expect("own output must parse");
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(back.serialize(), text);
    }

    #[test]
    fn relabeling_preserves_the_count(
        inst in instances(),
        shift in 0u32..14,
        reflect in any::<bool>(),
    ) {
        let moved = inst.relabel(shift % inst.n(), reflect);
        prop_assert_eq!(count_gangulations(&moved), count_gangulations(&inst));
    }

    #[test]
    fn forbidding_more_never_helps(inst in instances()) {
        let full = count_gangulations(&inst);
        for &e in inst.forbidden() {
            let fewer = Instance::new(
                inst.n(),
                inst.g(),
                inst.forbidden().iter().copied().filter(|&f| f != e),
            )
            .unwrap();
            prop_assert!(count_gangulations(&fewer) >= full);
        }
    }

    #[test]
    fn oracle_entry_points_agree(inst in instances()) {
        let count = count_gangulations(&inst);
        let exists = exists_gangulation(&inst);
        let witness = find_gangulation(&inst);
        prop_assert_eq!(exists, count > BigUint::from(0u32));
        prop_assert_eq!(exists, witness.is_some());
        if let Some(w) = witness {
            prop_assert!(is_valid_gangulation(&inst, &w));
        }
    }

    #[test]
    fn canonical_form_is_stable_under_relabeling(
        inst in instances(),
        shift in 0u32..14,
        reflect in any::<bool>(),
    ) {
        let canon = inst.canonical_form();
        let moved = inst.relabel(shift % inst.n(), reflect);
        prop_assert_eq!(moved.canonical_form(), canon.clone());
        let rebuilt = Instance::new(inst.n(), inst.g(), canon.clone()).unwrap();
        prop_assert_eq!(rebuilt.canonical_form(), canon);
    }

    #[test]
    fn decide_agrees_with_the_oracle(inst in instances()) {
        let d = decide(&inst).expect("well-formed instances must be decidable");
        match d.verdict {
            Verdict::Angulable(w) => {
                prop_assert!(exists_gangulation(&inst));
                prop_assert!(is_valid_gangulation(&inst, &w));
            }
            Verdict::Blocked(_) => prop_assert!(!exists_gangulation(&inst)),
        }
    }

    #[test]
    fn within_budget_construction_cannot_fail(inst in instances()) {
        // At most n - g forbidden chords always leave an angulation; trim
        // the generated set down to that budget and build one directly.
        let budget = (inst.n() - inst.g()) as usize;
        let trimmed = Instance::new(
            inst.n(),
            inst.g(),
            inst.forbidden().iter().copied().take(budget),
        )
        .unwrap();
        let w = construct_small(&trimmed).expect("budget respected, must build");
        prop_assert!(is_valid_gangulation(&trimmed, &w));
    }

    #[test]
    fn crossing_is_symmetric_and_needs_four_endpoints(
        n in 5u32..16,
        raw in proptest::collection::vec(0u32..16, 4),
    ) {
        let pick = |x: u32| x % n;
        let (a, b, c, d) = (pick(raw[0]), pick(raw[1]), pick(raw[2]), pick(raw[3]));
        prop_assume!(a != b && c != d);
        let e = Edge::new(a, b);
        let f = Edge::new(c, d);
        prop_assert_eq!(edges_cross(n, e, f).unwrap(), edges_cross(n, f, e).unwrap());
        if e.touches(c) || e.touches(d) {
            prop_assert!(!edges_cross(n, e, f).unwrap());
        }
    }
}

#[test]
fn admissibility_arithmetic_is_consistent() {
    for n in 0..=40u32 {
        for g in 0..=12u32 {
            let ok = admissible_params(n, g);
            assert_eq!(chords_required(n, g).is_some(), ok);
            assert_eq!(faces_required(n, g).is_some(), ok);
            if let (Some(t), Some(f)) = (chords_required(n, g), faces_required(n, g)) {
                assert!(g >= 3 && n >= g);
                assert_eq!(n, g + t * (g - 2));
                assert_eq!(f, t + 1);
            }
        }
    }
}
