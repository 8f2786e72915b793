//! Recognizing forbidden sets that block every angulation.
//!
//! With few forbidden chords, angulations always survive: any chord-only `F`
//! with at most `n - g` edges leaves one (see
//! [`crate::decide_construct::construct_small`]). The interesting regime
//! starts at `n - g + 1` edges, where exactly one family of configurations,
//! recognized by [`is_f_star`], blocks everything; and it ends at `n - 1`
//! edges, beyond which counting arguments no longer pin the structure down.
//! Between the two, blocking sets are exactly the *reducible* families
//! recognized by [`is_j_star`]: configurations that peel down to the minimum
//! family by removing surplus edges (level 1) or by deleting a boundary strip
//! behind a missing short chord (levels 2 and up).
//!
//! [`classify_forbidding`] names the family of a given forbidden set and
//! returns checkable [`Evidence`]. Everything here is purely combinatorial;
//! the exhaustive oracle never gets consulted, which is what makes the
//! oracle-versus-recognizer test sweeps meaningful.
//!
//! Throughout, the *gap* of an edge is the cyclic distance of its endpoints,
//! and an edge is *aligned* when its gap `d` satisfies `d == 1 (mod g - 2)`
//! on one side or the other (`d - 1` or `n - d - 1` divisible by `g - 2`).
//! Aligned chords are the ones a face of an angulation can be forced
//! against; every condition below speaks in terms of them. All recognizers
//! are invariant under rotations and reflections of the polygon, which is
//! checked by property tests.

use std::collections::{BTreeSet, HashMap};

use crate::convex_core::{edges_cross, Edge, Instance};
use crate::error::Error;

/// Family of a forbidden set, as reported by [`classify_forbidding`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ForbiddingClass {
    /// The unique blocking family at the minimum size `n - g + 1`.
    FStar,
    /// A reducible blocking family at sizes `n - g + 2 ..= n - 1`; the level
    /// records how many reduction stages its recognition needs.
    JStar(u32),
    /// Not a recognized blocking family. For chord sets with at most `n - 1`
    /// edges this means an angulation avoiding the set exists; for larger
    /// sets the taxonomy is silent and this value only means "out of range".
    NotForbidding,
}

/// A pair of positions `r < s` such that forbidden aligned edges at `r` and
/// at `s` always cross each other far apart: for every aligned `(i, r)` and
/// `(j, s)` in `F` (excluding the pair's own edge), the two chords cross and
/// the cyclic distance from `i` to `j` exceeds `g - 2`, and at least one such
/// `(i, j)` combination exists.
///
/// Such a pair is the obstruction that keeps a blocking set from reducing in
/// one stage; the higher recognizer levels count them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct AlphaPair {
    /// Smaller position of the pair.
    pub r: u32,
    /// Larger position of the pair.
    pub s: u32,
}

/// One reduction step recorded as evidence: a short chord missing from `F`
/// and the strip of positions behind it whose deletion produced a child
/// configuration of the stated class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripReduction {
    /// The free short chord `{i, i + g - 1}` the reduction cut along.
    pub missing_short_diagonal: Edge,
    /// The `g - 2` positions strictly between its endpoints, in cyclic order.
    pub strip: Vec<u32>,
    /// Class of the configuration left after deleting the strip.
    pub child_class: ForbiddingClass,
}

/// Checkable byproducts of a classification.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Evidence {
    /// For level 1: a surplus edge subset whose removal leaves the minimum
    /// family (the lexicographically first such subset).
    pub removed_edges: Option<Vec<Edge>>,
    /// For levels 2 and up: the crossing pairs found.
    pub alpha_pairs: Vec<AlphaPair>,
    /// For levels 2 and up: every strip reduction the recognizer performed.
    pub strip_reductions: Vec<StripReduction>,
}

/// Result of [`classify_forbidding`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// The recognized family.
    pub class: ForbiddingClass,
    /// Why: reduction data that a caller can re-check independently.
    pub evidence: Evidence,
}

fn require_chords_only(inst: &Instance) -> Result<(), Error> {
    if let Some(e) = inst.first_forbidden_boundary_edge() {
        return Err(Error::BoundaryForbidden {
            a: e.lo(),
            b: e.hi(),
        });
    }
    Ok(())
}

/// True when the edge's gap is `1 (mod g - 2)` read on either side of the
/// polygon.
fn aligned(n: u32, g: u32, e: Edge) -> bool {
    let step = g - 2;
    let d = e.hi() - e.lo();
    (d - 1) % step == 0 || (n - d - 1) % step == 0
}

fn degrees(inst: &Instance) -> Vec<u32> {
    let mut deg = vec![0u32; inst.n() as usize];
    for e in inst.forbidden() {
        deg[e.lo() as usize] += 1;
        deg[e.hi() as usize] += 1;
    }
    deg
}

fn cyclic_distance(n: u32, a: u32, b: u32) -> u32 {
    let d = a.abs_diff(b);
    d.min(n - d)
}

/// True when every forbidden edge at position `v` is unaligned; positions
/// with no forbidden edge at all count as angulable.
///
/// An angulable position is one a face corner can still be built around, so
/// a blocking set in the reducible regime must leave none (checked inside
/// [`is_j_star`]).
pub fn is_angulable_vertex(inst: &Instance, v: u32) -> Result<bool, Error> {
    require_chords_only(inst)?;
    if v >= inst.n() {
        return Err(Error::Precondition(format!(
            "vertex {v} out of range for n={}",
            inst.n()
        )));
    }
    Ok(inst
        .forbidden()
        .iter()
        .all(|&e| !e.touches(v) || !aligned(inst.n(), inst.g(), e)))
}

fn no_angulable_vertex(inst: &Instance) -> bool {
    let (n, g) = (inst.n(), inst.g());
    (0..n).all(|v| {
        inst.forbidden()
            .iter()
            .any(|&e| e.touches(v) && aligned(n, g, e))
    })
}

/// The `g - 2` short chords that straddle position `v`: for each offset
/// `c` in `1..=g-2`, the chord from `v + c` back to `v + c - (g - 1)`.
/// A position of degree 2 or more can only sit in the interior of the two
/// faces flanking it if all straddling short chords are forbidden too, which
/// is what conditions (ii) and (iii) of the minimum family encode.
fn straddling_short_chords(n: u32, g: u32, v: u32) -> impl Iterator<Item = Edge> {
    (1..=g - 2).map(move |c| {
        let p = (v + c) % n;
        let q = (v + c + n - (g - 1)) % n;
        Edge::new(p, q)
    })
}

/// Core minimum-family test; `inst` must be chord-only.
fn f_star_check(inst: &Instance) -> bool {
    let (n, g) = (inst.n(), inst.g());
    if inst.forbidden_len() != n - g + 1 {
        return false;
    }
    let deg = degrees(inst);
    if deg.iter().any(|&d| d == 0) {
        return false;
    }
    if !inst.forbidden().iter().all(|&e| aligned(n, g, e)) {
        return false;
    }
    let closure_ok =
        |v: u32| straddling_short_chords(n, g, v).all(|e| inst.is_forbidden(e));
    // Positions of degree >= 2 need their straddle closed...
    for v in 0..n {
        if deg[v as usize] >= 2 && !closure_ok(v) {
            return false;
        }
    }
    // ...and so does the attachment point of every pendant position.
    let pendant_edge = |v: u32| -> Edge {
        *inst
            .forbidden()
            .iter()
            .find(|e| e.touches(v))
            .expect("degree checked above")
    };
    let pendants: Vec<u32> = (0..n).filter(|&v| deg[v as usize] == 1).collect();
    for &v in &pendants {
        let e = pendant_edge(v);
        let u = if e.lo() == v { e.hi() } else { e.lo() };
        if !closure_ok(u) {
            return false;
        }
    }
    // Pendant attachments must stay coherent: when two pendant edges cross,
    // their attachment points lie close together.
    for (a, &r) in pendants.iter().enumerate() {
        let er = pendant_edge(r);
        let ir = if er.lo() == r { er.hi() } else { er.lo() };
        for &s in &pendants[a + 1..] {
            let es = pendant_edge(s);
            if er == es {
                continue;
            }
            let is = if es.lo() == s { es.hi() } else { es.lo() };
            let crossing = edges_cross(n, er, es).expect("validated edges");
            if crossing && cyclic_distance(n, ir, is) > g - 2 {
                return false;
            }
        }
    }
    true
}

/// Recognizes the unique minimum-size blocking family: exactly `n - g + 1`
/// chords, every position covered, every edge aligned, straddling short
/// chords closed around every position of degree 2 or more and around every
/// pendant attachment, and crossing pendant edges attached close together.
///
/// Errors when the forbidden set contains a boundary edge; this family (like
/// the whole taxonomy) is defined for chord sets only.
pub fn is_f_star(inst: &Instance) -> Result<bool, Error> {
    require_chords_only(inst)?;
    Ok(f_star_check(inst))
}

fn alpha_pairs_impl(inst: &Instance) -> Vec<AlphaPair> {
    let (n, g) = (inst.n(), inst.g());
    let mut aligned_nbrs: Vec<Vec<u32>> = vec![Vec::new(); n as usize];
    for &e in inst.forbidden() {
        if aligned(n, g, e) {
            aligned_nbrs[e.lo() as usize].push(e.hi());
            aligned_nbrs[e.hi() as usize].push(e.lo());
        }
    }
    let mut out = Vec::new();
    for r in 0..n {
        for s in r + 1..n {
            let is: Vec<u32> = aligned_nbrs[r as usize]
                .iter()
                .copied()
                .filter(|&i| i != s)
                .collect();
            let js: Vec<u32> = aligned_nbrs[s as usize]
                .iter()
                .copied()
                .filter(|&j| j != r)
                .collect();
            if is.is_empty() || js.is_empty() {
                continue;
            }
            let all_qualify = is.iter().all(|&i| {
                js.iter().all(|&j| {
                    i != j
                        && edges_cross(n, Edge::new(r, i), Edge::new(s, j))
                            .expect("validated edges")
                        && cyclic_distance(n, i, j) > g - 2
                })
            });
            if all_qualify {
                out.push(AlphaPair { r, s });
            }
        }
    }
    out
}

/// All crossing pairs of the forbidden set (see [`AlphaPair`]), sorted.
pub fn alpha_pairs(inst: &Instance) -> Result<Vec<AlphaPair>, Error> {
    require_chords_only(inst)?;
    Ok(alpha_pairs_impl(inst))
}

fn strip_positions(n: u32, g: u32, i: u32) -> Vec<u32> {
    (1..=g - 2).map(|c| (i + c) % n).collect()
}

/// Deletes the strip behind the free short chord at `i` and relabels the
/// survivors in cyclic order. The child is chord-only: the only new
/// adjacency is `{i, i + g - 1}`, which is not in `F` (the chord is free),
/// and every other surviving edge keeps its chord status.
fn delete_strip(inst: &Instance, i: u32) -> Instance {
    let (n, g) = (inst.n(), inst.g());
    let strip: BTreeSet<u32> = strip_positions(n, g, i).into_iter().collect();
    let mut new_id = vec![u32::MAX; n as usize];
    let mut next = 0u32;
    for v in 0..n {
        if !strip.contains(&v) {
            new_id[v as usize] = next;
            next += 1;
        }
    }
    let edges: Vec<Edge> = inst
        .forbidden()
        .iter()
        .filter(|e| !strip.contains(&e.lo()) && !strip.contains(&e.hi()))
        .map(|e| Edge::new(new_id[e.lo() as usize], new_id[e.hi() as usize]))
        .collect();
    Instance::new(n - (g - 2), g, edges).expect("strip deletion preserves admissibility")
}

fn touches_pair_or_neighbor(inst: &Instance, pairs: &[AlphaPair], v: u32) -> bool {
    let in_pair = |u: u32| pairs.iter().any(|p| p.r == u || p.s == u);
    if in_pair(v) {
        return true;
    }
    inst.forbidden().iter().any(|e| {
        (e.lo() == v && in_pair(e.hi())) || (e.hi() == v && in_pair(e.lo()))
    })
}

/// Memoizing recognizer state for one classification run. Keys are canonical
/// forms, so relabeled children share entries.
#[derive(Default)]
struct Classifier {
    f_memo: HashMap<(u32, u32, Vec<Edge>), bool>,
    j_memo: HashMap<(u32, u32, Vec<Edge>, u32), bool>,
}

impl Classifier {
    fn f_star(&mut self, inst: &Instance) -> bool {
        let key = (inst.n(), inst.g(), inst.canonical_form());
        if let Some(&v) = self.f_memo.get(&key) {
            return v;
        }
        let v = f_star_check(inst);
        self.f_memo.insert(key, v);
        v
    }

    fn j_star(&mut self, inst: &Instance, beta: u32) -> bool {
        let (n, g) = (inst.n(), inst.g());
        let k = n - g + 1;
        let m = inst.forbidden_len();
        if m <= k || m > k + (g - 2) {
            return false;
        }
        let key = (n, g, inst.canonical_form(), beta);
        if let Some(&v) = self.j_memo.get(&key) {
            return v;
        }
        let v = match beta {
            1 => self.level_one(inst),
            2 => self.level_two(inst),
            _ => self.level_higher(inst, beta),
        };
        self.j_memo.insert(key, v);
        v
    }

    /// Level 1: some surplus subset removes down to the minimum family.
    fn level_one(&mut self, inst: &Instance) -> bool {
        self.find_removable(inst).is_some()
    }

    /// Lexicographically first surplus subset whose removal leaves the
    /// minimum family, if any.
    fn find_removable(&mut self, inst: &Instance) -> Option<Vec<Edge>> {
        let k = inst.n() - inst.g() + 1;
        let edges: Vec<Edge> = inst.forbidden().iter().copied().collect();
        let mu = edges.len() - k as usize;
        let mut pick = Vec::with_capacity(mu);
        self.find_removable_rec(inst, &edges, 0, mu, &mut pick)
    }

    fn find_removable_rec(
        &mut self,
        inst: &Instance,
        edges: &[Edge],
        from: usize,
        left: usize,
        pick: &mut Vec<Edge>,
    ) -> Option<Vec<Edge>> {
        if left == 0 {
            let keep: Vec<Edge> = edges
                .iter()
                .copied()
                .filter(|e| !pick.contains(e))
                .collect();
            let child = Instance::new(inst.n(), inst.g(), keep)
                .expect("subset of a valid instance");
            if self.f_star(&child) {
                return Some(pick.clone());
            }
            return None;
        }
        for idx in from..=edges.len() - left {
            pick.push(edges[idx]);
            if let Some(found) = self.find_removable_rec(inst, edges, idx + 1, left - 1, pick)
            {
                return Some(found);
            }
            pick.pop();
        }
        None
    }

    /// Level 2: no angulable position, at most one crossing pair (which must
    /// itself be a forbidden aligned edge), and every strip reduction behind
    /// a free short chord with a relevant interior position lands in the
    /// minimum family or in level 1.
    fn level_two(&mut self, inst: &Instance) -> bool {
        let (n, g) = (inst.n(), inst.g());
        if inst.chords_required() < 2 {
            return false;
        }
        if !no_angulable_vertex(inst) {
            return false;
        }
        let pairs = alpha_pairs_impl(inst);
        if pairs.len() > 1 {
            return false;
        }
        if let Some(p) = pairs.first() {
            let e = Edge::new(p.r, p.s);
            if !inst.is_forbidden(e) || !aligned(n, g, e) {
                return false;
            }
        }
        let deg = degrees(inst);
        for i in 0..n {
            let d = Edge::new(i, (i + g - 1) % n);
            if inst.is_forbidden(d) {
                continue;
            }
            let relevant = strip_positions(n, g, i).into_iter().any(|v| {
                deg[v as usize] >= 2
                    && (pairs.is_empty() || touches_pair_or_neighbor(inst, &pairs, v))
            });
            if !relevant {
                continue;
            }
            let child = delete_strip(inst, i);
            if !(self.f_star(&child) || self.j_star(&child, 1)) {
                return false;
            }
        }
        true
    }

    /// Levels 3 and up: exactly `beta - 1` crossing pairs, each a forbidden
    /// aligned edge, and every strip reduction behind a free short chord
    /// touching a pair (or a neighbor of one) lands at a strictly lower
    /// level.
    fn level_higher(&mut self, inst: &Instance, beta: u32) -> bool {
        let (n, g) = (inst.n(), inst.g());
        if inst.chords_required() < 2 {
            return false;
        }
        if !no_angulable_vertex(inst) {
            return false;
        }
        let pairs = alpha_pairs_impl(inst);
        if pairs.len() as u32 != beta - 1 {
            return false;
        }
        for p in &pairs {
            let e = Edge::new(p.r, p.s);
            if !inst.is_forbidden(e) || !aligned(n, g, e) {
                return false;
            }
        }
        for i in 0..n {
            let d = Edge::new(i, (i + g - 1) % n);
            if inst.is_forbidden(d) {
                continue;
            }
            let relevant = strip_positions(n, g, i)
                .into_iter()
                .any(|v| touches_pair_or_neighbor(inst, &pairs, v));
            if !relevant {
                continue;
            }
            let child = delete_strip(inst, i);
            let ok = self.f_star(&child)
                || (1..beta).any(|b| self.j_star(&child, b));
            if !ok {
                return false;
            }
        }
        true
    }

    /// Re-runs the successful recognition, keeping the reduction data.
    fn collect_evidence(&mut self, inst: &Instance, beta: u32) -> Evidence {
        let (n, g) = (inst.n(), inst.g());
        let mut ev = Evidence::default();
        if beta == 1 {
            ev.removed_edges = self.find_removable(inst);
            return ev;
        }
        let pairs = alpha_pairs_impl(inst);
        let deg = degrees(inst);
        for i in 0..n {
            let d = Edge::new(i, (i + g - 1) % n);
            if inst.is_forbidden(d) {
                continue;
            }
            let strip = strip_positions(n, g, i);
            let relevant = if beta == 2 {
                strip.iter().any(|&v| {
                    deg[v as usize] >= 2
                        && (pairs.is_empty() || touches_pair_or_neighbor(inst, &pairs, v))
                })
            } else {
                strip
                    .iter()
                    .any(|&v| touches_pair_or_neighbor(inst, &pairs, v))
            };
            if !relevant {
                continue;
            }
            let child = delete_strip(inst, i);
            let child_class = if self.f_star(&child) {
                ForbiddingClass::FStar
            } else {
                let lvl = (1..beta)
                    .find(|&b| self.j_star(&child, b))
                    .expect("recognition succeeded, so every strip child matched");
                ForbiddingClass::JStar(lvl)
            };
            ev.strip_reductions.push(StripReduction {
                missing_short_diagonal: d,
                strip,
                child_class,
            });
        }
        ev.alpha_pairs = pairs;
        ev
    }
}

/// True when the forbidden set is a reducible blocking family of the given
/// level.
///
/// # Errors
///
/// - the forbidden set contains a boundary edge, or
/// - `beta` is outside `1..=2g-3`, or
/// - the edge count is outside `n-g+2 ..= n-1` (the regime where the
///   reducible families are defined).
pub fn is_j_star(inst: &Instance, beta: u32) -> Result<bool, Error> {
    require_chords_only(inst)?;
    let (n, g) = (inst.n(), inst.g());
    if beta < 1 || beta > 2 * g - 3 {
        return Err(Error::Precondition(format!(
            "level {beta} outside 1..={}",
            2 * g - 3
        )));
    }
    let m = inst.forbidden_len();
    if m < n - g + 2 || m > n - 1 {
        return Err(Error::Precondition(format!(
            "edge count {m} outside {}..={} where levels are defined",
            n - g + 2,
            n - 1
        )));
    }
    Ok(Classifier::default().j_star(inst, beta))
}

/// Names the family of a forbidden chord set.
///
/// - fewer than `n - g + 1` edges: [`ForbiddingClass::NotForbidding`]
///   (too small to block anything);
/// - exactly `n - g + 1`: [`ForbiddingClass::FStar`] or `NotForbidding`;
/// - `n - g + 2 ..= n - 1`: the least matching level as
///   [`ForbiddingClass::JStar`], else `NotForbidding`;
/// - `n` or more edges: `NotForbidding`, meaning only that the taxonomy does
///   not cover the size (use the oracle there).
///
/// Errors when the forbidden set contains a boundary edge.
pub fn classify_forbidding(inst: &Instance) -> Result<Classification, Error> {
    require_chords_only(inst)?;
    let (n, g) = (inst.n(), inst.g());
    let k = n - g + 1;
    let m = inst.forbidden_len();
    let mut cl = Classifier::default();
    let (class, evidence) = if m < k {
        (ForbiddingClass::NotForbidding, Evidence::default())
    } else if m == k {
        if cl.f_star(inst) {
            (ForbiddingClass::FStar, Evidence::default())
        } else {
            (ForbiddingClass::NotForbidding, Evidence::default())
        }
    } else if m <= n - 1 {
        match (1..=2 * g - 3).find(|&b| cl.j_star(inst, b)) {
            Some(beta) => {
                let ev = cl.collect_evidence(inst, beta);
                (ForbiddingClass::JStar(beta), ev)
            }
            None => (ForbiddingClass::NotForbidding, Evidence::default()),
        }
    } else {
        (ForbiddingClass::NotForbidding, Evidence::default())
    };
    Ok(Classification { class, evidence })
}

/// Enumerates every minimum-size blocking configuration for the given
/// parameters, up to rotation and reflection. Each entry is the instance
/// whose forbidden set is the canonical representative of its class; the
/// list is sorted.
///
/// The search space is every `(n - g + 1)`-subset of the aligned chords
/// (unaligned chords can never appear, so this universe is exact).
pub fn generate_f_stars(n: u32, g: u32) -> Result<Vec<Instance>, Error> {
    // Parameter check via the ordinary instance validation.
    Instance::new(n, g, [])?;
    let universe: Vec<Edge> = (0..n)
        .flat_map(|a| (a + 2..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !(a == 0 && b == n - 1))
        .map(|(a, b)| Edge::new(a, b))
        .filter(|&e| aligned(n, g, e))
        .collect();
    let k = (n - g + 1) as usize;
    let mut found: BTreeSet<Vec<Edge>> = BTreeSet::new();
    if k <= universe.len() {
        let mut pick: Vec<Edge> = Vec::with_capacity(k);
        subsets_of(&universe, 0, k, &mut pick, &mut |subset| {
            let cand = Instance::new(n, g, subset.iter().copied())
                .expect("distinct chords in range");
            if f_star_check(&cand) {
                found.insert(cand.canonical_form());
            }
        });
    }
    Ok(found
        .into_iter()
        .map(|edges| Instance::new(n, g, edges).expect("canonical form is valid"))
        .collect())
}

fn subsets_of(
    items: &[Edge],
    from: usize,
    left: usize,
    pick: &mut Vec<Edge>,
    visit: &mut impl FnMut(&[Edge]),
) {
    if left == 0 {
        visit(pick);
        return;
    }
    for idx in from..=items.len() - left {
        pick.push(items[idx]);
        subsets_of(items, idx + 1, left - 1, pick, visit);
        pick.pop();
    }
}
