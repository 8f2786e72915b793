//! Placing abstract graphs on convex positions so that the complement still
//! admits an angulation ("potentially angulable" constructions).
//!
//! Every constructor returns a [`Placement`]: the chosen bijection from
//! abstract vertices to convex positions, the resulting forbidden-set
//! instance, and a validated witness angulation of the complement. The
//! cycle and 2-regular layouts put an *apex* position's two placed
//! neighbors at distance two so a diagonal fan out of the apex always
//! works; the generalized Petersen layout alternates the two cycles over
//! odd and even positions; cubic graphs are handled for `g = 4` through a
//! vertex labeling found recursively (see [`cubic`]).

pub mod abstract_graph;
mod cycles;
pub mod cubic;
mod petersen;

pub use abstract_graph::AbstractGraph;
pub use cubic::{check_labeling_4, label_cubic, place_cubic, reduce_cubic, CubicLabeling, LabelKind};
pub use petersen::place_petersen;

use crate::angulation_oracle::{exists_gangulation, find_gangulation, is_valid_gangulation};
use crate::convex_core::{Edge, GAngulation, Instance};
use crate::error::Error;

/// An embedding of an abstract graph on convex positions, together with a
/// witness angulation avoiding the placed edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placement {
    /// The placed forbidden set: `n`, `g`, and the placed edges.
    pub target: Instance,
    /// `map[v]` is the convex position of abstract vertex `v`.
    pub map: Vec<u32>,
    /// A validated angulation of the complement.
    pub witness: GAngulation,
}

/// The fan angulation out of `apex`: diagonals to every position
/// `apex + 1 + i(g-2)`, `i = 1..t`.
pub(crate) fn fan_angulation(n: u32, g: u32, apex: u32) -> GAngulation {
    let t = (n - g) / (g - 2);
    let at = |off: u32| (apex + off) % n;
    let diagonals = (1..=t).map(|i| Edge::new(apex, at(i * (g - 2) + 1))).collect();
    let mut faces = vec![(0..g).map(at).collect::<Vec<u32>>()];
    for i in 1..=t {
        faces.push(
            std::iter::once(apex)
                .chain((0..g - 1).map(|c| at(i * (g - 2) + 1 + c)))
                .collect(),
        );
    }
    let mut out = GAngulation { n, g, diagonals, faces };
    out.normalize();
    out
}

/// Builds the placement for a layout plus apex-fan witness and validates it.
fn finish_apex_placement(
    graph: &AbstractGraph,
    g: u32,
    order: &[u32],
    apex: u32,
) -> Result<Placement, Error> {
    let n = graph.n();
    let mut map = vec![0u32; n as usize];
    for (pos, &v) in order.iter().enumerate() {
        map[v as usize] = pos as u32;
    }
    let placed = graph
        .edges()
        .iter()
        .map(|&(a, b)| Edge::new(map[a as usize], map[b as usize]));
    let target = Instance::new(n, g, placed)?;
    if let Some(e) = target.first_forbidden_boundary_edge() {
        return Err(Error::Internal(format!(
            "layout placed edge {e} on the boundary"
        )));
    }
    let witness = fan_angulation(n, g, apex);
    if !is_valid_gangulation(&target, &witness) {
        return Err(Error::Internal(
            "apex fan witness failed validation".into(),
        ));
    }
    Ok(Placement { target, map, witness })
}

/// Places the n-cycle so the complement admits a g-angulation.
///
/// # Errors
///
/// - `g = 3` is unsupported and `g < 3` invalid;
/// - inadmissible `(n, g)`;
/// - `n <= 4`: no placement of the cycle works at all
///   ([`Error::NotPotentiallyAngulable`]).
pub fn place_cycle(n: u32, g: u32) -> Result<Placement, Error> {
    check_angulable_params(n, g)?;
    if n <= 4 {
        return Err(Error::NotPotentiallyAngulable(format!(
            "the {n}-cycle occupies too much of K_{n}: every placement blocks"
        )));
    }
    let graph = AbstractGraph::cycle(n)?;
    let layout = cycles::two_regular_layout(&[(0..n).collect()])?;
    finish_apex_placement(&graph, g, &layout.order, layout.apex)
}

/// Places any 2-regular graph (disjoint cycles, each of length >= 3) so the
/// complement admits a g-angulation. Connected graphs defer to the cycle
/// layout; unions splice the smallest cycle into boundary gaps of the rest.
///
/// # Errors
///
/// As [`place_cycle`], plus [`Error::WrongGraphClass`] when the graph is not
/// 2-regular or contains a doubled edge.
pub fn place_two_regular(graph: &AbstractGraph, g: u32) -> Result<Placement, Error> {
    let n = graph.n();
    let cycle_list = graph.cycle_decomposition()?;
    check_angulable_params(n, g)?;
    if n <= 4 {
        return Err(Error::NotPotentiallyAngulable(format!(
            "2-regular graphs on {n} <= 4 vertices always block"
        )));
    }
    let layout = cycles::two_regular_layout(&cycle_list)?;
    finish_apex_placement(graph, g, &layout.order, layout.apex)
}

fn check_angulable_params(n: u32, g: u32) -> Result<(), Error> {
    if g == 3 {
        return Err(Error::Unsupported(
            "g = 3 placements are out of scope".into(),
        ));
    }
    if !crate::convex_core::admissible_params(n, g) {
        return Err(Error::BadParameters {
            n,
            g,
            reason: "no angulation of any kind exists for these parameters".into(),
        });
    }
    Ok(())
}

/// Proves that *no* circular placement of `graph` leaves an angulable
/// complement, by exhausting all placements up to rotation and reflection
/// through the oracle. Returns `Ok(true)` when every placement blocks.
///
/// # Errors
///
/// `n > 9` (factorially many placements) or inadmissible parameters.
pub fn certify_not_potentially_angulable(graph: &AbstractGraph, g: u32) -> Result<bool, Error> {
    let n = graph.n();
    if n > 9 {
        return Err(Error::Unsupported(format!(
            "exhaustive placement search is capped at 9 vertices, got {n}"
        )));
    }
    if !crate::convex_core::admissible_params(n, g) {
        return Err(Error::BadParameters {
            n,
            g,
            reason: "no angulation of any kind exists for these parameters".into(),
        });
    }
    // Fix vertex 0 at position 0; reflection halved by forcing the
    // position-1 vertex to be smaller than the position-(n-1) vertex.
    let mut rest: Vec<u32> = (1..n).collect();
    let mut ok = true;
    permute(&mut rest, 0, &mut |perm: &[u32]| {
        if !ok || perm[0] > perm[n as usize - 2] {
            return;
        }
        let mut map = vec![0u32; n as usize];
        for (i, &v) in perm.iter().enumerate() {
            map[v as usize] = i as u32 + 1;
        }
        let placed: Vec<Edge> = graph
            .edges()
            .iter()
            .map(|&(a, b)| Edge::new(map[a as usize], map[b as usize]))
            .collect();
        let inst = Instance::new(n, g, placed).expect("placement stays in range");
        if !inst.has_forbidden_boundary_edge() && exists_gangulation(&inst) {
            ok = false;
        }
    });
    Ok(ok)
}

fn permute(items: &mut Vec<u32>, k: usize, visit: &mut impl FnMut(&[u32])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Local helper for constructions that carve a sub-polygon out of a larger
/// placement: solves the sub-instance spanned by `positions` (cyclically
/// ordered original positions) against the original forbidden set and lifts
/// the result back to original labels.
pub(crate) fn solve_sub_polygon(
    inst: &Instance,
    positions: &[u32],
    g: u32,
) -> Option<(Vec<Edge>, Vec<Vec<u32>>)> {
    let m = positions.len() as u32;
    let index: std::collections::HashMap<u32, u32> = positions
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i as u32))
        .collect();
    let mut local_forbidden = Vec::new();
    for e in inst.forbidden() {
        if let (Some(&a), Some(&b)) = (index.get(&e.lo()), index.get(&e.hi())) {
            let d = a.abs_diff(b);
            if d == 1 || d == m - 1 {
                // A placed edge on the sub-polygon boundary: unusable.
                return None;
            }
            local_forbidden.push(Edge::new(a, b));
        }
    }
    let sub = Instance::new(m, g, local_forbidden).ok()?;
    let w = find_gangulation(&sub)?;
    let lift = |p: u32| positions[p as usize];
    let diagonals = w
        .diagonals
        .iter()
        .map(|e| Edge::new(lift(e.lo()), lift(e.hi())))
        .collect();
    let faces = w
        .faces
        .iter()
        .map(|f| f.iter().map(|&p| lift(p)).collect())
        .collect();
    Some((diagonals, faces))
}
