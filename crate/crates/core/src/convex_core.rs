//! Vertices, edges, and instances on a convex polygon.
//!
//! Everything in this crate lives on the vertex set of a convex polygon:
//! positions `0..n` read clockwise, with all index arithmetic mod `n`.
//! An edge joins two distinct positions; it is a *boundary edge* when the
//! positions are cyclically adjacent and a *chord* otherwise. An [`Instance`]
//! packages the polygon size `n`, the face size `g`, and a set of forbidden
//! edges, and is the input type for the oracle, the recognizers, and the
//! decision procedure.
//!
//! A *g-angulation* of the polygon is a crossing-free set of chords that cuts
//! the interior into faces which are all `g`-gons. Counting vertices shows
//! such a cutting can only exist when `n = g + t * (g - 2)` for some integer
//! `t >= 0`; that `t` is then the number of chords used and `t + 1` the number
//! of faces. [`admissible_params`] checks exactly this divisibility.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;

/// Returns true when an `n`-gon can in principle be cut into `g`-gon faces,
/// i.e. when `g >= 3`, `n >= g`, and `g - 2` divides `n - g`.
///
/// This is a statement about the empty forbidden set; a particular instance
/// may still admit no angulation once chords are forbidden.
pub fn admissible_params(n: u32, g: u32) -> bool {
    g >= 3 && n >= g && (n - g) % (g - 2) == 0
}

/// Number of chords in every `g`-angulation of the `n`-gon, or `None` when
/// the parameters are not admissible.
pub fn chords_required(n: u32, g: u32) -> Option<u32> {
    if admissible_params(n, g) {
        Some((n - g) / (g - 2))
    } else {
        None
    }
}

/// Number of faces in every `g`-angulation of the `n`-gon, or `None` when
/// the parameters are not admissible.
pub fn faces_required(n: u32, g: u32) -> Option<u32> {
    chords_required(n, g).map(|t| t + 1)
}

/// An undirected edge between two distinct polygon positions.
///
/// The endpoints are stored sorted, so `Edge::new(5, 2) == Edge::new(2, 5)`.
/// `Edge` is deliberately ignorant of `n`: range checks happen where an edge
/// meets an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: u32,
    b: u32,
}

impl Edge {
    /// Creates an edge, normalizing endpoint order.
    ///
    /// # Panics
    ///
    /// Panics when `a == b`; use [`Edge::try_new`] for fallible construction.
    pub fn new(a: u32, b: u32) -> Self {
        Self::try_new(a, b).expect("edge endpoints must be distinct")
    }

    /// Creates an edge, normalizing endpoint order; errors when `a == b`.
    pub fn try_new(a: u32, b: u32) -> Result<Self, Error> {
        if a == b {
            return Err(Error::BadEdge {
                a,
                b,
                reason: "endpoints coincide".into(),
            });
        }
        Ok(if a < b { Self { a, b } } else { Self { a: b, b: a } })
    }

    /// The smaller endpoint.
    pub fn lo(&self) -> u32 {
        self.a
    }

    /// The larger endpoint.
    pub fn hi(&self) -> u32 {
        self.b
    }

    /// Both endpoints as `(lo, hi)`.
    pub fn endpoints(&self) -> (u32, u32) {
        (self.a, self.b)
    }

    /// True when `v` is one of the endpoints.
    pub fn touches(&self, v: u32) -> bool {
        self.a == v || self.b == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

fn check_in_range(n: u32, e: Edge) -> Result<(), Error> {
    if e.hi() >= n {
        return Err(Error::BadEdge {
            a: e.lo(),
            b: e.hi(),
            reason: format!("endpoint {} out of range for n={n}", e.hi()),
        });
    }
    Ok(())
}

/// Cyclic distance between the endpoints of `e` on the `n`-gon: the length of
/// the shorter of the two boundary arcs, always in `1..=n/2`.
pub fn cyclic_gap(n: u32, e: Edge) -> Result<u32, Error> {
    check_in_range(n, e)?;
    let d = e.hi() - e.lo();
    Ok(d.min(n - d))
}

/// True when `e` joins cyclically adjacent positions of the `n`-gon.
pub fn is_boundary_edge(n: u32, e: Edge) -> Result<bool, Error> {
    Ok(cyclic_gap(n, e)? == 1)
}

/// True when the straight segments for `e` and `f` cross in the open interior
/// of the polygon.
///
/// Edges sharing an endpoint never cross. Otherwise `{a, b}` and `{c, d}`
/// cross exactly when one of `c`, `d` lies strictly inside the arc `a..b`
/// and the other strictly outside.
pub fn edges_cross(n: u32, e: Edge, f: Edge) -> Result<bool, Error> {
    check_in_range(n, e)?;
    check_in_range(n, f)?;
    if e.touches(f.lo()) || e.touches(f.hi()) {
        return Ok(false);
    }
    let inside = |v: u32| e.lo() < v && v < e.hi();
    Ok(inside(f.lo()) != inside(f.hi()))
}

/// A polygon with a forbidden edge set: the unit of input for deciding,
/// counting, and classifying.
///
/// Invariants enforced at construction: the parameters are admissible, every
/// edge endpoint is `< n`, and no edge repeats. The forbidden set may contain
/// boundary edges; operations that require chords only (the recognizers, the
/// direct constructor, the decision procedure) say so and reject such
/// instances themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    n: u32,
    g: u32,
    forbidden: BTreeSet<Edge>,
}

impl Instance {
    /// Builds an instance, validating parameters and edges.
    pub fn new(n: u32, g: u32, forbidden: impl IntoIterator<Item = Edge>) -> Result<Self, Error> {
        if !admissible_params(n, g) {
            let reason = if g < 3 {
                "faces need at least three sides".to_string()
            } else if n < g {
                "polygon smaller than one face".to_string()
            } else {
                format!("g - 2 = {} does not divide n - g = {}", g - 2, n - g)
            };
            return Err(Error::BadParameters { n, g, reason });
        }
        let mut set = BTreeSet::new();
        for e in forbidden {
            check_in_range(n, e)?;
            if !set.insert(e) {
                return Err(Error::DuplicateEdge {
                    a: e.lo(),
                    b: e.hi(),
                });
            }
        }
        Ok(Self { n, g, forbidden: set })
    }

    /// Polygon size.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Face size.
    pub fn g(&self) -> u32 {
        self.g
    }

    /// Number of chords in every angulation of this polygon.
    pub fn chords_required(&self) -> u32 {
        chords_required(self.n, self.g).expect("validated at construction")
    }

    /// The forbidden edge set, sorted.
    pub fn forbidden(&self) -> &BTreeSet<Edge> {
        &self.forbidden
    }

    /// Number of forbidden edges.
    pub fn forbidden_len(&self) -> u32 {
        self.forbidden.len() as u32
    }

    /// True when some forbidden edge lies on the polygon boundary.
    pub fn has_forbidden_boundary_edge(&self) -> bool {
        self.forbidden
            .iter()
            .any(|&e| cyclic_gap(self.n, e).expect("validated") == 1)
    }

    /// First forbidden boundary edge, if any; handy for error reporting.
    pub fn first_forbidden_boundary_edge(&self) -> Option<Edge> {
        self.forbidden
            .iter()
            .copied()
            .find(|&e| cyclic_gap(self.n, e).expect("validated") == 1)
    }

    /// True when `e` is forbidden.
    pub fn is_forbidden(&self, e: Edge) -> bool {
        self.forbidden.contains(&e)
    }

    /// The same polygon with one more forbidden edge.
    pub fn with_forbidden(&self, e: Edge) -> Result<Self, Error> {
        let mut edges: Vec<Edge> = self.forbidden.iter().copied().collect();
        edges.push(e);
        Self::new(self.n, self.g, edges)
    }

    /// Applies a rotation (`reflect = false`) or a reflection
    /// (`reflect = true`) of the polygon to every forbidden edge:
    /// position `p` maps to `p + shift` resp. `shift - p`, mod `n`.
    pub fn relabel(&self, shift: u32, reflect: bool) -> Self {
        let n = self.n;
        let map = |p: u32| -> u32 {
            if reflect {
                (shift + n - p) % n
            } else {
                (p + shift) % n
            }
        };
        let forbidden = self
            .forbidden
            .iter()
            .map(|e| Edge::new(map(e.lo()), map(e.hi())))
            .collect();
        Self { n, g: self.g, forbidden }
    }

    /// Canonical form of the forbidden set under all `2n` rotations and
    /// reflections: the lexicographically least sorted edge list among the
    /// images. Two instances with equal `n`, `g`, and canonical form are the
    /// same up to relabeling the polygon.
    pub fn canonical_form(&self) -> Vec<Edge> {
        let mut best: Option<Vec<Edge>> = None;
        for reflect in [false, true] {
            for shift in 0..self.n {
                let image: Vec<Edge> = self
                    .relabel(shift, reflect)
                    .forbidden
                    .into_iter()
                    .collect();
                if best.as_ref().is_none_or(|b| image < *b) {
                    best = Some(image);
                }
            }
        }
        best.unwrap_or_default()
    }

    /// Parses the plain text format produced by [`Instance::serialize`]:
    /// a header line `n g`, then one `a b` line per forbidden edge.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut header: Option<(u32, u32)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let s = raw.trim();
            if s.is_empty() || s.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = s.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line,
                    message: format!("expected two integers, found {:?}", s),
                });
            }
            let parse_num = |t: &str| -> Result<u32, Error> {
                t.parse::<u32>().map_err(|_| Error::Parse {
                    line,
                    message: format!("not a non-negative integer: {:?}", t),
                })
            };
            let (x, y) = (parse_num(fields[0])?, parse_num(fields[1])?);
            if header.is_none() {
                header = Some((x, y));
            } else {
                edges.push(Edge::try_new(x, y).map_err(|e| Error::Parse {
                    line,
                    message: e.to_string(),
                })?);
            }
        }
        let (n, g) = header.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing `n g` header line".into(),
        })?;
        Self::new(n, g, edges)
    }

    /// Serializes to the text format accepted by [`Instance::parse`], with
    /// edges sorted; parse-serialize round-trips byte for byte.
    pub fn serialize(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.g);
        for e in &self.forbidden {
            out.push_str(&format!("{} {}\n", e.lo(), e.hi()));
        }
        out
    }
}

/// A concrete `g`-angulation: `t` pairwise non-crossing chords and the
/// `t + 1` faces they cut the polygon into.
///
/// Faces are recorded as vertex lists in increasing position order (a face of
/// a convex polygon is determined by its vertex set). Construction does not
/// validate; candidates are checked against an instance with
/// [`crate::angulation_oracle::validate_gangulation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GAngulation {
    /// Polygon size this angulation is for.
    pub n: u32,
    /// Face size.
    pub g: u32,
    /// The chords used, sorted.
    pub diagonals: Vec<Edge>,
    /// All faces, each sorted by position, the face list itself sorted.
    pub faces: Vec<Vec<u32>>,
}

impl GAngulation {
    /// Normalizes in place: sorts each face, the face list, and the chords.
    pub fn normalize(&mut self) {
        for f in &mut self.faces {
            f.sort_unstable();
        }
        self.faces.sort();
        self.diagonals.sort_unstable();
    }
}
