//! Boundary-free circular layouts for cycles and disjoint unions of cycles,
//! each exposing an *apex*: a position whose only placed neighbors sit two
//! steps away on either side. A fan of diagonals out of the apex then
//! angulates the complement for every admissible `g >= 4`.

use crate::error::Error;

/// A circular layout: `order[p]` is the abstract vertex at convex position
/// `p`, and `apex` is a position whose placed neighbors are `apex - 2` and
/// `apex + 2` only.
pub struct Layout {
    pub order: Vec<u32>,
    pub apex: u32,
}

/// Positions visited by a single n-cycle, `n >= 5`: consecutive cycle
/// vertices are never placed adjacently, and position 2's cycle neighbors
/// land on positions 0 and 4.
///
/// Odd n visits 0, 2, 4, ..., n-1, 1, 3, ..., n-2; even n visits
/// 0, 2, ..., n-2, 1, 3, ..., n-5, n-1, n-3 (which for n = 6 is the order
/// 0, 2, 4, 1, 5, 3).
pub fn cycle_visit_order(n: u32) -> Vec<u32> {
    let mut visits: Vec<u32> = (0..n).step_by(2).collect();
    if n % 2 == 1 {
        visits.extend((1..n).step_by(2));
    } else {
        visits.extend((1..n.saturating_sub(4)).step_by(2));
        visits.push(n - 1);
        visits.push(n - 3);
    }
    visits
}

/// Lays out a single cycle on vertices `cycle[0], cycle[1], ...` (in cycle
/// order): the j-th cycle vertex goes to the j-th visited position.
fn single_cycle_layout(cycle: &[u32]) -> Layout {
    let n = cycle.len() as u32;
    let visits = cycle_visit_order(n);
    let mut order = vec![0u32; n as usize];
    for (j, &pos) in visits.iter().enumerate() {
        order[pos as usize] = cycle[j];
    }
    Layout { order, apex: 2 }
}

/// Builds a boundary-free layout for a disjoint union of cycles (each of
/// length >= 3, at least two of them), recursively: the smallest cycle's
/// vertices are spliced into boundary gaps of the layout of the rest.
fn union_order(cycles: &[Vec<u32>]) -> Result<Vec<u32>, Error> {
    if cycles.len() == 1 {
        let c = &cycles[0];
        if c.len() < 5 {
            return Err(Error::Internal(format!(
                "single {}-cycle reached the union layout",
                c.len()
            )));
        }
        return Ok(single_cycle_layout(c).order);
    }
    let c = &cycles[0];
    let rest = &cycles[1..];
    // Two triangles interleave directly; no gap insertion fits them.
    if cycles.len() == 2 && c.len() == 3 && rest[0].len() == 3 {
        let (t, u) = (c, &rest[0]);
        return Ok(vec![t[0], u[0], t[1], u[1], t[2], u[2]]);
    }
    // A lone 4-cycle remainder cannot be laid out boundary-free on K_4;
    // interleave the smallest cycle's vertices into its gaps instead.
    if rest.len() == 1 && rest[0].len() == 4 {
        let q = &rest[0];
        let (x, y, z) = (c[0], c[1], c[2]);
        // Around the circle: q0, y, q2, z, q1, [w,] q3, x closes the square
        // drawn as the crossing path q0-q2-q1-q3-q0.
        let mut order = vec![q[0], y, q[2], z, q[1]];
        if c.len() == 4 {
            order.push(c[3]);
        }
        order.push(q[3]);
        order.push(x);
        return Ok(order);
    }
    let base = union_order(rest)?;
    let m = base.len();
    // Splice vertex c[j] into gap j of the base layout: x after base[0],
    // y after base[1], z after base[2], and the rest onward.
    let mut order = Vec::with_capacity(m + c.len());
    for (gap, &v) in base.iter().enumerate() {
        order.push(v);
        if gap < c.len() {
            order.push(c[gap]);
        }
    }
    Ok(order)
}

/// Boundary-free layout of a union of at least two cycles. The apex is the
/// second cycle vertex in the splice (between the base's second and third
/// positions) or its analogue in the small special cases.
pub fn two_regular_layout(cycles: &[Vec<u32>]) -> Result<Layout, Error> {
    if cycles.len() == 1 {
        return Ok(single_cycle_layout(&cycles[0]));
    }
    let order = union_order(cycles)?;
    let y = cycles[0][1];
    let apex = order.iter().position(|&v| v == y).unwrap() as u32;
    Ok(Layout { order, apex })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn visit_orders_match_expected_forms() {
        assert_eq!(cycle_visit_order(6), vec![0, 2, 4, 1, 5, 3]);
        assert_eq!(cycle_visit_order(7), vec![0, 2, 4, 6, 1, 3, 5]);
        assert_eq!(cycle_visit_order(8), vec![0, 2, 4, 6, 1, 3, 7, 5]);
    }

    #[test]
    fn two_triangles_interleave() {
        let order = two_regular_layout(&[vec![0, 2, 4], vec![1, 3, 5]])
            .unwrap()
            .order;
        assert_eq!(order.len(), 6);
    }
}
