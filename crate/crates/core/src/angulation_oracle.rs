//! Exact reference algorithms: decide, count, and exhibit angulations by
//! dynamic programming over boundary intervals.
//!
//! Everything here is exponential-free: a region of the polygon is identified
//! by the pair `(i, j)` of its extreme positions, so there are `O(n^2)`
//! states. The face containing the region's closing edge `(i, j)` is a chain
//! `i = c_0 < c_1 < ... < c_{g-1} = j`; choosing it splits the region into
//! the `g - 1` independent subregions `(c_k, c_{k+1})`. Each hop of the chain
//! is either a boundary step (`c_{k+1} = c_k + 1`) or a chord, and a chord
//! hop is usable only when it is not forbidden. A subregion on `v` vertices
//! can be filled exactly when `v - 2` is a multiple of `g - 2`, which prunes
//! the chain enumeration to hops of length `1 + m * (g - 2)`.
//!
//! The witness finder replays the existence table and always takes the
//! lexicographically least viable chain, so its output is a pure function of
//! the instance.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigUint;

use crate::convex_core::{edges_cross, Edge, GAngulation, Instance};

/// Combined oracle answer for one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// True when at least one angulation avoids the forbidden set.
    pub exists: bool,
    /// Exact number of angulations avoiding the forbidden set.
    pub count: BigUint,
    /// A concrete angulation when one exists; deterministic.
    pub witness: Option<GAngulation>,
}

/// True when the polygon admits an angulation avoiding the forbidden set.
pub fn exists_gangulation(inst: &Instance) -> bool {
    if inst.has_forbidden_boundary_edge() {
        return false;
    }
    Dp::new(inst).exists_region(0, inst.n() - 1)
}

/// Exact number of angulations avoiding the forbidden set.
pub fn count_gangulations(inst: &Instance) -> BigUint {
    if inst.has_forbidden_boundary_edge() {
        return BigUint::ZERO;
    }
    Dp::new(inst).count_region(0, inst.n() - 1)
}

/// Deterministic witness: the angulation whose faces are lexicographically
/// least in the interval decomposition, or `None` when none exists.
pub fn find_gangulation(inst: &Instance) -> Option<GAngulation> {
    if inst.has_forbidden_boundary_edge() {
        return None;
    }
    let mut dp = Dp::new(inst);
    let n = inst.n();
    if !dp.exists_region(0, n - 1) {
        return None;
    }
    let mut faces = Vec::new();
    let mut diagonals = BTreeSet::new();
    dp.emit_region(0, n - 1, &mut faces, &mut diagonals);
    let mut out = GAngulation {
        n,
        g: inst.g(),
        diagonals: diagonals.into_iter().collect(),
        faces,
    };
    out.normalize();
    Some(out)
}

/// Runs existence, counting, and witness search together.
pub fn analyze(inst: &Instance) -> OracleResult {
    let count = count_gangulations(inst);
    let exists = count != BigUint::ZERO;
    let witness = if exists { find_gangulation(inst) } else { None };
    OracleResult { exists, count, witness }
}

struct Dp<'a> {
    inst: &'a Instance,
    step: u32,
    exists: HashMap<(u32, u32), bool>,
    counts: HashMap<(u32, u32), BigUint>,
}

impl<'a> Dp<'a> {
    fn new(inst: &'a Instance) -> Self {
        Self {
            inst,
            step: inst.g() - 2,
            exists: HashMap::new(),
            counts: HashMap::new(),
        }
    }

    /// Whether the edge `(p, q)`, `p < q`, may close a subregion: boundary
    /// steps always, chords only when not forbidden.
    fn hop_allowed(&self, p: u32, q: u32) -> bool {
        q == p + 1 || !self.inst.is_forbidden(Edge::new(p, q))
    }

    /// Region sizes that can be filled at all: `v - 2` divisible by `g - 2`.
    fn region_fillable(&self, i: u32, j: u32) -> bool {
        (j - i - 1) % self.step == 0
    }

    fn count_region(&mut self, i: u32, j: u32) -> BigUint {
        if j == i + 1 {
            return BigUint::from(1u32);
        }
        if !self.region_fillable(i, j) {
            return BigUint::ZERO;
        }
        if let Some(c) = self.counts.get(&(i, j)) {
            return c.clone();
        }
        let total = self.count_chain(j, i, self.inst.g() - 2);
        self.counts.insert((i, j), total.clone());
        total
    }

    /// Sum over chain completions: `left` interior points remain to be chosen
    /// strictly between `prev` and `j`.
    fn count_chain(&mut self, j: u32, prev: u32, left: u32) -> BigUint {
        if left == 0 {
            if !self.hop_allowed(prev, j) {
                return BigUint::ZERO;
            }
            return self.count_region(prev, j);
        }
        let mut total = BigUint::ZERO;
        let mut c = prev + 1;
        // Leave room for the remaining `left - 1` interior points before `j`.
        while c + left <= j {
            if self.hop_allowed(prev, c) {
                let here = self.count_region(prev, c);
                if here != BigUint::ZERO {
                    total += here * self.count_chain(j, c, left - 1);
                }
            }
            c += self.step;
        }
        total
    }

    fn exists_region(&mut self, i: u32, j: u32) -> bool {
        if j == i + 1 {
            return true;
        }
        if !self.region_fillable(i, j) {
            return false;
        }
        if let Some(&e) = self.exists.get(&(i, j)) {
            return e;
        }
        let found = self.exists_chain(j, i, self.inst.g() - 2, &mut Vec::new());
        self.exists.insert((i, j), found);
        found
    }

    /// Depth-first chain search in ascending order; records the first viable
    /// chain in `chain` and returns true. Ascending first-success makes the
    /// recovered chain lexicographically least among viable ones.
    fn exists_chain(&mut self, j: u32, prev: u32, left: u32, chain: &mut Vec<u32>) -> bool {
        if left == 0 {
            return self.hop_allowed(prev, j) && self.exists_region(prev, j);
        }
        let mut c = prev + 1;
        while c + left <= j {
            if self.hop_allowed(prev, c) && self.exists_region(prev, c) {
                chain.push(c);
                if self.exists_chain(j, c, left - 1, chain) {
                    return true;
                }
                chain.pop();
            }
            c += self.step;
        }
        false
    }

    /// Emits the deterministic witness for a region known to be fillable.
    fn emit_region(
        &mut self,
        i: u32,
        j: u32,
        faces: &mut Vec<Vec<u32>>,
        diagonals: &mut BTreeSet<Edge>,
    ) {
        if j == i + 1 {
            return;
        }
        let mut chain = Vec::with_capacity(self.inst.g() as usize);
        chain.push(i);
        let ok = self.exists_chain(j, i, self.inst.g() - 2, &mut chain);
        debug_assert!(ok, "emit_region called on an unfillable region");
        if !ok {
            return;
        }
        chain.push(j);
        faces.push(chain.clone());
        for w in chain.windows(2) {
            let (p, q) = (w[0], w[1]);
            if q > p + 1 {
                diagonals.insert(Edge::new(p, q));
            }
            self.emit_region(p, q, faces, diagonals);
        }
    }
}

/// One defect found while validating a candidate angulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationIssue {
    /// Candidate `n`/`g` differ from the instance.
    ParamMismatch { expected: (u32, u32), got: (u32, u32) },
    /// Wrong number of chords for these parameters.
    WrongChordCount { expected: u32, got: u32 },
    /// A listed chord is out of range, degenerate, or a boundary edge.
    BadChord { edge: Edge, reason: String },
    /// The same chord is listed twice.
    DuplicateChord(Edge),
    /// A listed chord is in the forbidden set.
    ForbiddenChord(Edge),
    /// Two listed chords cross.
    CrossingChords(Edge, Edge),
    /// A face list entry is malformed (size, range, or duplicates).
    BadFace { face: Vec<u32>, reason: String },
    /// Cutting along the chords yields a region that is not a `g`-gon.
    WrongRegionSize { region: Vec<u32> },
    /// The face list does not match the regions cut out by the chords.
    FaceSetMismatch,
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ParamMismatch { expected, got } => write!(
                f,
                "parameter mismatch: instance is (n={}, g={}), candidate says (n={}, g={})",
                expected.0, expected.1, got.0, got.1
            ),
            Self::WrongChordCount { expected, got } => {
                write!(f, "expected {expected} chords, candidate has {got}")
            }
            Self::BadChord { edge, reason } => write!(f, "bad chord {edge}: {reason}"),
            Self::DuplicateChord(e) => write!(f, "duplicate chord {e}"),
            Self::ForbiddenChord(e) => write!(f, "chord {e} is forbidden"),
            Self::CrossingChords(e, d) => write!(f, "chords {e} and {d} cross"),
            Self::BadFace { face, reason } => write!(f, "bad face {face:?}: {reason}"),
            Self::WrongRegionSize { region } => {
                write!(f, "chords cut out non-face region {region:?}")
            }
            Self::FaceSetMismatch => write!(f, "face list does not match the chord structure"),
        }
    }
}

/// Checks a candidate angulation against an instance and reports every
/// defect found. An empty result means the candidate is a correct angulation
/// avoiding the forbidden set.
///
/// Only chords are tested against the forbidden set; the polygon boundary is
/// considered part of every angulation, so instances whose forbidden set
/// includes a boundary edge reject all candidates at the chord-structure
/// stage only if that edge appears among the chords (it cannot), and such
/// instances are instead rejected by the oracle entry points themselves.
pub fn validate_gangulation(inst: &Instance, cand: &GAngulation) -> Vec<ValidationIssue> {
    let mut issues = Vec::new();
    let (n, g) = (inst.n(), inst.g());
    if cand.n != n || cand.g != g {
        issues.push(ValidationIssue::ParamMismatch {
            expected: (n, g),
            got: (cand.n, cand.g),
        });
        return issues;
    }
    let t = inst.chords_required();
    if cand.diagonals.len() as u32 != t {
        issues.push(ValidationIssue::WrongChordCount {
            expected: t,
            got: cand.diagonals.len() as u32,
        });
    }
    let mut seen = BTreeSet::new();
    for &d in &cand.diagonals {
        if d.hi() >= n {
            issues.push(ValidationIssue::BadChord {
                edge: d,
                reason: format!("endpoint {} out of range", d.hi()),
            });
            continue;
        }
        let gap = d.hi() - d.lo();
        if gap == 1 || gap == n - 1 {
            issues.push(ValidationIssue::BadChord {
                edge: d,
                reason: "boundary edge, not a chord".into(),
            });
        }
        if !seen.insert(d) {
            issues.push(ValidationIssue::DuplicateChord(d));
        }
        if inst.is_forbidden(d) {
            issues.push(ValidationIssue::ForbiddenChord(d));
        }
    }
    let ds: Vec<Edge> = seen.iter().copied().collect();
    for (idx, &d) in ds.iter().enumerate() {
        for &e in &ds[idx + 1..] {
            if edges_cross(n, d, e).unwrap_or(true) {
                issues.push(ValidationIssue::CrossingChords(d, e));
            }
        }
    }
    for face in &cand.faces {
        let mut sorted = face.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != face.len() {
            issues.push(ValidationIssue::BadFace {
                face: face.clone(),
                reason: "repeated vertex".into(),
            });
        } else if face.len() as u32 != g {
            issues.push(ValidationIssue::BadFace {
                face: face.clone(),
                reason: format!("face has {} vertices, expected {g}", face.len()),
            });
        } else if sorted.last().copied().unwrap_or(0) >= n {
            issues.push(ValidationIssue::BadFace {
                face: face.clone(),
                reason: "vertex out of range".into(),
            });
        }
    }
    if !issues.is_empty() {
        return issues;
    }

    // Chord structure is clean; cut the polygon along the chords and compare
    // the resulting regions with the declared faces.
    let mut regions = vec![(0..n).collect::<Vec<u32>>()];
    let mut unused: Vec<Edge> = cand.diagonals.clone();
    let mut cells: Vec<Vec<u32>> = Vec::new();
    while let Some(region) = regions.pop() {
        let split = unused.iter().position(|d| {
            region.contains(&d.lo()) && region.contains(&d.hi())
        });
        match split {
            None => cells.push(region),
            Some(k) => {
                let d = unused.swap_remove(k);
                let lo_idx = region.iter().position(|&v| v == d.lo()).unwrap();
                let hi_idx = region.iter().position(|&v| v == d.hi()).unwrap();
                let (first, second) = if lo_idx < hi_idx {
                    (lo_idx, hi_idx)
                } else {
                    (hi_idx, lo_idx)
                };
                regions.push(region[first..=second].to_vec());
                let mut wrap = region[second..].to_vec();
                wrap.extend_from_slice(&region[..=first]);
                regions.push(wrap);
            }
        }
    }
    let mut ok = true;
    for cell in &mut cells {
        cell.sort_unstable();
        if cell.len() as u32 != g {
            issues.push(ValidationIssue::WrongRegionSize { region: cell.clone() });
            ok = false;
        }
    }
    if !ok {
        return issues;
    }
    cells.sort();
    let mut declared: Vec<Vec<u32>> = cand
        .faces
        .iter()
        .map(|f| {
            let mut f = f.clone();
            f.sort_unstable();
            f
        })
        .collect();
    declared.sort();
    if cells != declared {
        issues.push(ValidationIssue::FaceSetMismatch);
    }
    issues
}

/// True when [`validate_gangulation`] finds no defects.
pub fn is_valid_gangulation(inst: &Instance, cand: &GAngulation) -> bool {
    validate_gangulation(inst, cand).is_empty()
}
