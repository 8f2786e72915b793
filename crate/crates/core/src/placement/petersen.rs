//! Placement of generalized Petersen graphs P(n, k) on 2n convex positions.
//!
//! The outer cycle occupies the odd positions (step 2), the inner cycle the
//! even positions (step 2k), and each spoke spans three consecutive
//! positions, so no placed edge lands on the hull. The witness cuts two
//! ears off the polygon, one at positions `0..g-1` and one at
//! `2n-g..2n-1`, and angulates the remaining sub-polygon; both ear chords
//! avoid every placed edge except in one regime (odd `g` with `2k = g-1`,
//! where the step-2k inner chords occupy every even-even pair at that
//! span), which falls back to a direct search over the whole placement.

use super::{solve_sub_polygon, AbstractGraph, Placement};
use crate::angulation_oracle::{find_gangulation, is_valid_gangulation};
use crate::convex_core::{Edge, GAngulation, Instance};
use crate::error::Error;

/// Places P(n, k) on `K_{2n}` so the complement admits a g-angulation.
///
/// Abstract vertices follow [`AbstractGraph::petersen`]: outer `0..n`,
/// inner `n..2n`. Outer vertex `j` goes to position `2j + 1`, its spoke
/// partner `n + j` to position `(2j + 4) mod 2n`.
///
/// # Errors
///
/// `n < 5`, `k` outside `1..n/2`, inadmissible `(2n, g)`, or `g = 3`.
pub fn place_petersen(n: u32, k: u32, g: u32) -> Result<Placement, Error> {
    if n < 5 {
        return Err(Error::Precondition(format!(
            "petersen placement needs n >= 5, got {n}"
        )));
    }
    let graph = AbstractGraph::petersen(n, k)?;
    super::check_angulable_params(2 * n, g)?;

    let big = 2 * n;
    let mut map = vec![0u32; big as usize];
    for j in 0..n {
        map[j as usize] = 2 * j + 1;
        map[(n + j) as usize] = (2 * j + 4) % big;
    }
    let placed = graph
        .edges()
        .iter()
        .map(|&(a, b)| Edge::new(map[a as usize], map[b as usize]));
    let target = Instance::new(big, g, placed)?;
    if let Some(e) = target.first_forbidden_boundary_edge() {
        return Err(Error::Internal(format!(
            "petersen layout placed edge {e} on the boundary"
        )));
    }

    let witness = build_witness(&target, big, g)?;
    if !is_valid_gangulation(&target, &witness) {
        return Err(Error::Internal(
            "petersen witness failed validation".into(),
        ));
    }
    Ok(Placement { target, map, witness })
}

fn build_witness(target: &Instance, big: u32, g: u32) -> Result<GAngulation, Error> {
    let t = (big - g) / (g - 2);
    let mut out = match t {
        0 => GAngulation {
            n: big,
            g,
            diagonals: Vec::new(),
            faces: vec![(0..big).collect()],
        },
        1 => GAngulation {
            n: big,
            g,
            diagonals: vec![Edge::new(0, g - 1)],
            faces: vec![
                (0..g).collect(),
                (g - 1..big).chain([0]).collect(),
            ],
        },
        _ => two_ear_witness(target, big, g).unwrap_or(
            // Reachable when an ear chord coincides with an inner chord
            // (odd g with 2k = g - 1): search the whole placement instead.
            match find_gangulation(target) {
                Some(w) => w,
                None => {
                    return Err(Error::Internal(
                        "petersen layout admits no angulation".into(),
                    ))
                }
            },
        ),
    };
    out.normalize();
    Ok(out)
}

/// Cuts the ears `0..g-1` and `2n-g..2n-1`, angulates the rest through the
/// sub-polygon solver, and reassembles. `None` when an ear chord is placed.
fn two_ear_witness(target: &Instance, big: u32, g: u32) -> Option<GAngulation> {
    for chord in [Edge::new(0, g - 1), Edge::new(big - g, big - 1)] {
        if target.forbidden().contains(&chord) {
            return None;
        }
    }
    let positions: Vec<u32> = std::iter::once(0)
        .chain(g - 1..=big - g)
        .chain([big - 1])
        .collect();
    let (mut diagonals, mut faces) = solve_sub_polygon(target, &positions, g)?;
    diagonals.push(Edge::new(0, g - 1));
    diagonals.push(Edge::new(big - g, big - 1));
    faces.push((0..g).collect());
    faces.push((big - g..big).collect());
    Some(GAngulation {
        n: big,
        g,
        diagonals,
        faces,
    })
}
