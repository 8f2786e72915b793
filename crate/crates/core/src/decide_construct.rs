//! The decision pipeline: direct construction for small forbidden sets and
//! the classification-backed verdict for everything up to `n - 1` edges.
//!
//! [`construct_small`] is the constructive heart: with at most `n - g`
//! forbidden chords an angulation always exists, and it can be built greedily
//! without ever consulting the oracle. The builder finds a free *short chord*
//! (gap `g - 1`), and either fans out of an untouched position behind it or
//! deletes the strip behind it, solves the smaller polygon, and glues an ear
//! face back on. Deleting a strip removes `g - 2` positions but possibly
//! fewer than `g - 2` forbidden edges (forbidden chords inside the strip are
//! lost in one step, first possible at `g = 5`), so the child can exceed its
//! own budget; the builder therefore backtracks over the free short chords in
//! ascending order. This stays complete: any angulation has an ear face, so
//! some free short chord admits a successful reduction whenever an angulation
//! exists at all.
//!
//! [`decide`] stitches the pieces together: forbidden sets up to `n - 1`
//! edges are answered by the recognizers of
//! [`crate::forbidden_configs`] (with an oracle-produced witness on the
//! positive side), larger ones fall back to the oracle wholesale.

use std::fmt;

use crate::angulation_oracle::find_gangulation;
use crate::convex_core::{Edge, GAngulation, Instance};
use crate::error::Error;
use crate::forbidden_configs::{classify_forbidding, Classification, ForbiddingClass};

/// How a [`Decision`] was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Recognizer taxonomy applied (forbidden sets up to `n - 1` edges).
    Characterization,
    /// Direct greedy construction (used by the builder entry points).
    Construction,
    /// Exhaustive oracle, because the taxonomy does not cover the size.
    OracleFallback,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Characterization => write!(f, "characterization"),
            Self::Construction => write!(f, "construction"),
            Self::OracleFallback => write!(f, "oracle-fallback"),
        }
    }
}

/// Outcome of [`decide`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// An angulation avoiding the forbidden set exists; here is one.
    Angulable(GAngulation),
    /// No angulation avoids the forbidden set. Carries the recognizer's
    /// classification when the taxonomy covers the size (`None` when the
    /// verdict came from the oracle fallback).
    Blocked(Option<Classification>),
}

/// A verdict plus the route that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    /// The answer.
    pub verdict: Verdict,
    /// The route.
    pub method: Method,
}

/// Finds the first free short chord: the least `j` such that the gap-`g-1`
/// chord `{j, j + g - 1}` is not forbidden, returned normalized.
///
/// # Errors
///
/// - the forbidden set contains a boundary edge;
/// - fewer than two chords are required (`t < 2`): with `t = 1` every short
///   chord is a diameter and all of them can be forbidden at once, so no
///   guarantee holds;
/// - more than `n - 1` edges are forbidden (same reason).
///
/// Under the preconditions a free short chord always exists: there are `n`
/// short chords and at most `n - 1` forbidden edges.
pub fn find_short_diagonal(inst: &Instance) -> Result<Edge, Error> {
    if let Some(e) = inst.first_forbidden_boundary_edge() {
        return Err(Error::BoundaryForbidden { a: e.lo(), b: e.hi() });
    }
    let (n, g) = (inst.n(), inst.g());
    if inst.chords_required() < 2 {
        return Err(Error::Precondition(format!(
            "need t >= 2 short chords, parameters n={n}, g={g} give t={}",
            inst.chords_required()
        )));
    }
    if inst.forbidden_len() > n - 1 {
        return Err(Error::Precondition(format!(
            "forbidden set has {} edges, guarantee needs at most {}",
            inst.forbidden_len(),
            n - 1
        )));
    }
    for j in 0..n {
        let e = Edge::new(j, (j + g - 1) % n);
        if !inst.is_forbidden(e) {
            return Ok(e);
        }
    }
    Err(Error::Internal(
        "no free short chord despite size bound".into(),
    ))
}

/// Builds an angulation avoiding a forbidden set of at most `n - g` chords.
///
/// Deterministic, oracle-free, and total under its preconditions: an
/// angulation always exists in this regime. See the module docs for the
/// strategy and why backtracking is needed.
///
/// # Errors
///
/// - the forbidden set contains a boundary edge;
/// - more than `n - g` edges are forbidden.
pub fn construct_small(inst: &Instance) -> Result<GAngulation, Error> {
    if let Some(e) = inst.first_forbidden_boundary_edge() {
        return Err(Error::BoundaryForbidden { a: e.lo(), b: e.hi() });
    }
    let (n, g) = (inst.n(), inst.g());
    if inst.forbidden_len() > n - g {
        return Err(Error::Precondition(format!(
            "forbidden set has {} edges, direct construction covers at most {}",
            inst.forbidden_len(),
            n - g
        )));
    }
    let positions: Vec<u32> = (0..n).collect();
    let mut diagonals = Vec::new();
    let mut faces = Vec::new();
    if !build(&positions, inst, &mut diagonals, &mut faces) {
        return Err(Error::Internal(
            "construction failed although the size bound guarantees success".into(),
        ));
    }
    let mut out = GAngulation { n, g, diagonals, faces };
    out.normalize();
    Ok(out)
}

/// Recursive builder on the sub-polygon spanned by `positions` (original
/// vertex ids in cyclic order). Invariants: consecutive `positions` entries
/// are joined either by an original boundary edge or by a previously emitted
/// free chord, so the local boundary is never forbidden; any locally
/// non-adjacent pair is an original chord.
fn build(
    positions: &[u32],
    inst: &Instance,
    diagonals: &mut Vec<Edge>,
    faces: &mut Vec<Vec<u32>>,
) -> bool {
    let g = inst.g();
    let len = positions.len() as u32;
    if len == g {
        faces.push(positions.to_vec());
        return true;
    }
    let t_cur = (len - g) / (g - 2);
    let local = |p: u32| positions[p as usize % positions.len()];
    for p in 0..len {
        let short = Edge::new(local(p), local(p + g - 1));
        if inst.is_forbidden(short) {
            continue;
        }
        // Fan shortcut: a strip position with no forbidden edge into the
        // current polygon fans the whole polygon at once.
        let fan_source = (1..=g - 2).map(|c| (p + c) % len).find(|&j| {
            let vj = local(j);
            positions
                .iter()
                .all(|&u| u == vj || !inst.is_forbidden(Edge::new(vj, u)))
        });
        if let Some(j) = fan_source {
            for k in 1..=t_cur {
                diagonals.push(Edge::new(local(j), local(j + k * (g - 2) + 1)));
            }
            faces.push((0..g).map(|c| local(j + c)).collect());
            for k in 1..=t_cur {
                faces.push(
                    std::iter::once(local(j))
                        .chain((0..=g - 2).map(|c| local(j + k * (g - 2) + 1 + c)))
                        .collect(),
                );
            }
            return true;
        }
        // Otherwise: cut off the strip behind the free short chord, solve
        // the rest, and re-attach the strip as an ear face.
        let strip: Vec<u32> = (1..=g - 2).map(|c| (p + c) % len).collect();
        let child: Vec<u32> = (0..len)
            .filter(|q| !strip.contains(q))
            .map(local)
            .collect();
        let dmark = diagonals.len();
        let fmark = faces.len();
        if build(&child, inst, diagonals, faces) {
            diagonals.push(short);
            faces.push((0..g).map(|c| local(p + c)).collect());
            return true;
        }
        diagonals.truncate(dmark);
        faces.truncate(fmark);
    }
    false
}

/// Decides whether an angulation avoiding the forbidden set exists.
///
/// For up to `n - 1` forbidden edges the verdict comes from the recognizer
/// taxonomy (`method = Characterization`): blocked exactly for the
/// recognized families, with the classification attached; otherwise a
/// witness is produced through the oracle's deterministic finder. For larger
/// sets no characterization is known and the oracle answers directly
/// (`method = OracleFallback`).
///
/// # Errors
///
/// - the forbidden set contains a boundary edge (the taxonomy presupposes
///   chord-only sets);
/// - internal inconsistency if the taxonomy and the oracle ever disagree
///   (which would be a bug worth hearing about loudly).
pub fn decide(inst: &Instance) -> Result<Decision, Error> {
    if let Some(e) = inst.first_forbidden_boundary_edge() {
        return Err(Error::BoundaryForbidden { a: e.lo(), b: e.hi() });
    }
    let n = inst.n();
    if inst.forbidden_len() <= n - 1 {
        let classification = classify_forbidding(inst)?;
        if classification.class != ForbiddingClass::NotForbidding {
            return Ok(Decision {
                verdict: Verdict::Blocked(Some(classification)),
                method: Method::Characterization,
            });
        }
        match find_gangulation(inst) {
            Some(w) => Ok(Decision {
                verdict: Verdict::Angulable(w),
                method: Method::Characterization,
            }),
            None => Err(Error::Internal(
                "taxonomy says angulable but the oracle finds nothing".into(),
            )),
        }
    } else {
        match find_gangulation(inst) {
            Some(w) => Ok(Decision {
                verdict: Verdict::Angulable(w),
                method: Method::OracleFallback,
            }),
            None => Ok(Decision {
                verdict: Verdict::Blocked(None),
                method: Method::OracleFallback,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angulation_oracle::is_valid_gangulation;

    fn inst(n: u32, g: u32, edges: &[(u32, u32)]) -> Instance {
        Instance::new(n, g, edges.iter().map(|&(a, b)| Edge::new(a, b))).unwrap()
    }

    #[test]
    fn short_chord_scan_is_least_first() {
        assert_eq!(
            find_short_diagonal(&inst(8, 4, &[])).unwrap(),
            Edge::new(0, 3)
        );
        // All five low short chords forbidden: the scan wraps to j=5, whose
        // chord {5, 0} normalizes to (0, 5).
        assert_eq!(
            find_short_diagonal(&inst(8, 4, &[(0, 3), (1, 4), (2, 5), (3, 6), (4, 7)])).unwrap(),
            Edge::new(0, 5)
        );
    }

    #[test]
    fn short_chord_needs_two_chords_required() {
        let e = find_short_diagonal(&inst(6, 4, &[(0, 3), (1, 4), (2, 5)]));
        assert!(matches!(e, Err(Error::Precondition(_))));
    }

    #[test]
    fn fan_construction_matches_expected_shape() {
        let w = construct_small(&inst(8, 4, &[])).unwrap();
        assert_eq!(w.diagonals, vec![Edge::new(1, 4), Edge::new(1, 6)]);
        assert!(is_valid_gangulation(&inst(8, 4, &[]), &w));
    }

    #[test]
    fn strip_recursion_finds_the_forced_chord() {
        let i = inst(6, 4, &[(0, 3), (1, 4)]);
        let w = construct_small(&i).unwrap();
        assert_eq!(w.diagonals, vec![Edge::new(2, 5)]);
        assert!(is_valid_gangulation(&i, &w));
    }

    #[test]
    fn construction_rejects_oversized_sets() {
        let i = inst(6, 4, &[(0, 3), (1, 4), (2, 5)]);
        assert!(matches!(
            construct_small(&i),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn construction_handles_trivial_polygon() {
        let w = construct_small(&inst(4, 4, &[])).unwrap();
        assert!(w.diagonals.is_empty());
        assert_eq!(w.faces, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn decide_blocked_minimum_family() {
        let d = decide(&inst(6, 4, &[(0, 3), (1, 4), (2, 5)])).unwrap();
        assert_eq!(d.method, Method::Characterization);
        match d.verdict {
            Verdict::Blocked(Some(c)) => assert_eq!(c.class, ForbiddingClass::FStar),
            other => panic!("expected Blocked(FStar), got {other:?}"),
        }
    }

    #[test]
    fn decide_angulable_with_witness() {
        let i = inst(8, 4, &[(0, 4), (1, 5), (2, 6), (3, 7)]);
        let d = decide(&i).unwrap();
        assert_eq!(d.method, Method::Characterization);
        match d.verdict {
            Verdict::Angulable(w) => assert!(is_valid_gangulation(&i, &w)),
            other => panic!("expected Angulable, got {other:?}"),
        }
    }

    #[test]
    fn decide_blocked_reducible_level_one() {
        let d = decide(&inst(6, 4, &[(0, 3), (1, 4), (2, 5), (0, 2)])).unwrap();
        match d.verdict {
            Verdict::Blocked(Some(c)) => assert_eq!(c.class, ForbiddingClass::JStar(1)),
            other => panic!("expected Blocked(JStar(1)), got {other:?}"),
        }
    }

    #[test]
    fn decide_oracle_fallback_beyond_taxonomy() {
        // Nine forbidden chords on the octagon: past the n-1 = 7 edge range.
        let i = inst(
            8,
            4,
            &[
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 4),
                (2, 5),
                (2, 6),
            ],
        );
        let d = decide(&i).unwrap();
        assert_eq!(d.method, Method::OracleFallback);
    }

    #[test]
    fn decide_rejects_boundary_edges() {
        let i = inst(8, 4, &[(0, 1)]);
        assert!(matches!(
            decide(&i),
            Err(Error::BoundaryForbidden { a: 0, b: 1 })
        ));
    }

    #[test]
    fn construction_sweeps_small_triangulations() {
        // Spot check the builder across many forbidden sets within budget.
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let chords: Vec<Edge> = (0..10u32)
            .flat_map(|a| (a + 2..10).map(move |b| (a, b)))
            .filter(|&(a, b)| !(a == 0 && b == 9))
            .map(|(a, b)| Edge::new(a, b))
            .collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let mut pool = chords.clone();
            pool.shuffle(&mut rng);
            pool.truncate(7);
            let i = Instance::new(10, 3, pool).unwrap();
            let w = construct_small(&i).unwrap();
            assert!(
                is_valid_gangulation(&i, &w),
                "invalid witness for {}",
                i.serialize()
            );
        }
    }
}
