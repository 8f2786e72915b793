//! Exhaustive or sampled sweeps over the chord subsets of one polygon.
//!
//! For every visited subset the sweep records the oracle verdict and the
//! taxonomy class, and flags any disagreement inside the range the taxonomy
//! covers (at most `n - 1` chords). The subset order is lexicographic over
//! the sorted chord list, so exhaustive output is reproducible; sampled
//! output is reproducible given the seed.

use std::collections::BTreeMap;

use gangulate_core::angulation_oracle::exists_gangulation;
use gangulate_core::convex_core::{Edge, Instance};
use gangulate_core::Error;
use gangulate_core::forbidden_configs::{classify_forbidding, ForbiddingClass};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::report::{CensusEcho, CensusRow};

/// All chords of the `n`-gon in lexicographic order.
pub fn all_chords(n: u32) -> Vec<Edge> {
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
        // Advance the rightmost index that still has room.
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

struct Tally {
    row: CensusRow,
    mismatches: Vec<String>,
}

impl Tally {
    fn new(size: u32) -> Self {
        Self {
            row: CensusRow {
                size,
                total: 0,
                blocked: 0,
                class_f_star: 0,
                class_j_star: BTreeMap::new(),
                class_not_forbidding: 0,
            },
            mismatches: Vec::new(),
        }
    }

    fn record(&mut self, inst: &Instance) -> Result<(), Error> {
        self.row.total += 1;
        let blocked = !exists_gangulation(inst);
        if blocked {
            self.row.blocked += 1;
        }
        let class = classify_forbidding(inst)?.class;
        match class {
            ForbiddingClass::FStar => self.row.class_f_star += 1,
            ForbiddingClass::JStar(level) => {
                *self.row.class_j_star.entry(level).or_insert(0) += 1;
            }
            ForbiddingClass::NotForbidding => self.row.class_not_forbidding += 1,
        }
        // The taxonomy only covers sets with fewer chords than vertices.
        let in_range = inst.forbidden_len() < inst.n();
        if in_range && blocked != (class != ForbiddingClass::NotForbidding) {
            let flat = inst.serialize().trim_end().replace('\n', " / ");
            self.mismatches.push(flat);
        }
        Ok(())
    }
}

/// Runs the sweep. `sample = None` exhausts every subset of each size;
/// `sample = Some(k)` draws `k` independent subsets per size instead.
pub fn run_census(
    n: u32,
    g: u32,
    min_size: u32,
    max_size: u32,
    sample: Option<u64>,
    seed: Option<u64>,
) -> Result<CensusEcho, Error> {
    let chords = all_chords(n);
    let max_size = max_size.min(chords.len() as u32);
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
    for size in min_size..=max_size {
        let mut tally = Tally::new(size);
        let mut err = None;
        match sample {
            None => {
                visit_combinations(chords.len(), size as usize, |idx| {
                    if err.is_some() {
                        return;
                    }
                    let subset = idx.iter().map(|&i| chords[i]);
                    let inst = Instance::new(n, g, subset).expect("chords are valid");
                    if let Err(e) = tally.record(&inst) {
                        err = Some(e);
                    }
                });
            }
            Some(draws) => {
                for _ in 0..draws {
                    let idx =
                        rand::seq::index::sample(&mut rng, chords.len(), size as usize);
                    let subset = idx.iter().map(|i| chords[i]);
                    let inst = Instance::new(n, g, subset).expect("chords are valid");
                    tally.record(&inst)?;
                }
            }
        }
        if let Some(e) = err {
            return Err(e);
        }
        mismatches.append(&mut tally.mismatches);
        rows.push(tally.row);
    }
    Ok(CensusEcho {
        n,
        g,
        min_size,
        max_size,
        sample,
        seed: sample.and(seed),
        rows,
        mismatches,
    })
}
