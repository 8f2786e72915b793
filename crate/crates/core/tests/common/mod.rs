//! Shared helpers for integration tests: chord universes, subset walks, and
//! seeded random instances.

use gangulate_core::{Edge, Instance};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// All chords of the `n`-gon (edges that are not boundary), sorted.
pub fn all_chords(n: u32) -> Vec<Edge> {
    (0..n)
        .flat_map(|a| (a + 2..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !(a == 0 && b == n - 1))
        .map(|(a, b)| Edge::new(a, b))
        .collect()
}

/// Visits every `k`-subset of `items` in lexicographic order.
pub fn for_each_subset(items: &[Edge], k: usize, visit: &mut impl FnMut(&[Edge])) {
    fn rec(items: &[Edge], from: usize, left: usize, pick: &mut Vec<Edge>, visit: &mut impl FnMut(&[Edge])) {
        if left == 0 {
            visit(pick);
            return;
        }
        if items.len() - from < left {
            return;
        }
        for idx in from..=items.len() - left {
            pick.push(items[idx]);
            rec(items, idx + 1, left - 1, pick, visit);
            pick.pop();
        }
    }
    rec(items, 0, k, &mut Vec::with_capacity(k), visit);
}

/// Deterministic sample of `count` random chord sets of size `k` on the
/// `n`-gon for face size `g`.
pub fn random_chord_instances(
    n: u32,
    g: u32,
    k: usize,
    count: usize,
    seed: u64,
) -> Vec<Instance> {
    let chords = all_chords(n);
    assert!(k <= chords.len());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut pool = chords.clone();
            pool.shuffle(&mut rng);
            pool.truncate(k);
            Instance::new(n, g, pool).expect("distinct chords")
        })
        .collect()
}
