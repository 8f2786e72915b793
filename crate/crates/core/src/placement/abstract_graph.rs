//! Unlabeled multigraphs: the inputs of the placement constructions.
//!
//! Vertices are `0..n`; edges are an unordered multiset of distinct pairs
//! (parallel edges allowed, loops rejected). The text format mirrors the
//! instance format: a header line `n m` followed by `m` lines `i j`, with
//! parallel edges simply repeated.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::Error;

/// A finite multigraph without loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractGraph {
    n: u32,
    /// Normalized `(lo, hi)` pairs, sorted; duplicates encode parallel edges.
    edges: Vec<(u32, u32)>,
}

impl AbstractGraph {
    /// Builds a graph, normalizing and sorting the edge multiset.
    pub fn new(n: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, Error> {
        let mut es = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::BadEdge {
                    a,
                    b,
                    reason: "loops are not allowed".into(),
                });
            }
            if a >= n || b >= n {
                return Err(Error::BadEdge {
                    a,
                    b,
                    reason: format!("vertex out of range for n={n}"),
                });
            }
            es.push((a.min(b), a.max(b)));
        }
        es.sort_unstable();
        Ok(Self { n, edges: es })
    }

    /// The cycle graph on `n >= 3` vertices.
    pub fn cycle(n: u32) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::Precondition(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The generalized Petersen graph P(n, k): outer cycle `0..n`, inner
    /// vertices `n..2n` joined with step `k`, and the matching in between.
    pub fn petersen(n: u32, k: u32) -> Result<Self, Error> {
        if n < 3 || k == 0 || 2 * k >= n {
            return Err(Error::Precondition(format!(
                "petersen graph needs n >= 3 and 1 <= k < n/2, got n={n}, k={k}"
            )));
        }
        let outer = (0..n).map(|i| (i, (i + 1) % n));
        let inner = (0..n).map(|i| (n + i, n + (i + k) % n));
        let spokes = (0..n).map(|i| (i, n + i));
        Self::new(2 * n, outer.chain(inner).chain(spokes))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Neighbor lists with multiplicity, each sorted.
    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.n as usize];
        for &(a, b) in &self.edges {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    pub fn degree(&self, v: u32) -> u32 {
        self.edges
            .iter()
            .map(|&(a, b)| u32::from(a == v) + u32::from(b == v))
            .sum()
    }

    pub fn is_regular(&self, d: u32) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    /// True when no edge appears twice.
    pub fn is_simple(&self) -> bool {
        self.edges.windows(2).all(|w| w[0] != w[1])
    }

    /// The distinct vertex pairs joined by two or more parallel edges.
    pub fn two_cycles(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for w in self.edges.windows(2) {
            if w[0] == w[1] && out.last() != Some(&w[0]) {
                out.push(w[0]);
            }
        }
        out
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n as usize];
        let mut queue = VecDeque::from([0u32]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Splits a 2-regular graph into its cycles. Each cycle starts at its
    /// least vertex and walks toward that vertex's lesser neighbor; cycles
    /// are ordered by length, then by least vertex, so the first entry is
    /// a deterministic "smallest cycle".
    ///
    /// # Errors
    ///
    /// Not 2-regular, or some component is a doubled edge (a 2-cycle).
    pub fn cycle_decomposition(&self) -> Result<Vec<Vec<u32>>, Error> {
        if !self.is_regular(2) {
            return Err(Error::WrongGraphClass {
                expected: "2-regular".into(),
                reason: "degree sequence is not all 2".into(),
            });
        }
        if !self.two_cycles().is_empty() {
            return Err(Error::WrongGraphClass {
                expected: "cycles of length >= 3".into(),
                reason: "a doubled edge forms a 2-cycle component".into(),
            });
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n as usize];
        let mut cycles = Vec::new();
        for start in 0..self.n {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut prev = start;
            let mut cur = adj[start as usize][0];
            while cur != start {
                seen[cur as usize] = true;
                cycle.push(cur);
                let nbrs = &adj[cur as usize];
                let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
                prev = cur;
                cur = next;
            }
            cycles.push(cycle);
        }
        cycles.sort_by_key(|c| (c.len(), c[0]));
        Ok(cycles)
    }

    /// Parses the `n m` + edge-lines format. `#` starts a comment; blank
    /// lines are skipped.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut header: Option<(u32, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let parse_num = |s: Option<&str>| -> Result<u32, Error> {
                s.and_then(|t| t.parse().ok()).ok_or(Error::Parse {
                    line: idx + 1,
                    message: "expected two whitespace-separated integers".into(),
                })
            };
            let a = parse_num(parts.next())?;
            let b = parse_num(parts.next())?;
            if parts.next().is_some() {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: "trailing tokens after the two integers".into(),
                });
            }
            if header.is_none() {
                header = Some((a, b as usize));
            } else {
                edges.push((a, b));
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 1,
            message: "missing header line".into(),
        })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: 1,
                message: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Self::new(n, edges)
    }

    /// Serializes to the text format; parsing the output reproduces the
    /// graph exactly.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }

    /// Finds a vertex bijection onto `other` preserving the edge multiset,
    /// if one exists. Deterministic: the lexicographically least image
    /// vector under the search order is produced.
    pub fn isomorphism(&self, other: &AbstractGraph) -> Option<Vec<u32>> {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return None;
        }
        let n = self.n as usize;
        let mut deg_a: Vec<u32> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut deg_b: Vec<u32> = (0..other.n).map(|v| other.degree(v)).collect();
        {
            let mut sa = deg_a.clone();
            let mut sb = deg_b.clone();
            sa.sort_unstable();
            sb.sort_unstable();
            if sa != sb {
                return None;
            }
        }
        deg_a.truncate(n);
        deg_b.truncate(n);
        let mult_a = self.multiplicity_matrix();
        let mult_b = other.multiplicity_matrix();
        let mut map = vec![u32::MAX; n];
        let mut used = vec![false; n];
        if Self::extend_iso(0, &mut map, &mut used, &deg_a, &deg_b, &mult_a, &mult_b, n) {
            Some(map)
        } else {
            None
        }
    }

    fn multiplicity_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.n as usize;
        let mut m = vec![vec![0u8; n]; n];
        for &(a, b) in &self.edges {
            m[a as usize][b as usize] += 1;
            m[b as usize][a as usize] += 1;
        }
        m
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_iso(
        v: usize,
        map: &mut Vec<u32>,
        used: &mut Vec<bool>,
        deg_a: &[u32],
        deg_b: &[u32],
        mult_a: &[Vec<u8>],
        mult_b: &[Vec<u8>],
        n: usize,
    ) -> bool {
        if v == n {
            return true;
        }
        'cand: for w in 0..n {
            if used[w] || deg_a[v] != deg_b[w] {
                continue;
            }
            for u in 0..v {
                if mult_a[v][u] != mult_b[w][map[u] as usize] {
                    continue 'cand;
                }
            }
            map[v] = w as u32;
            used[w] = true;
            if Self::extend_iso(v + 1, map, used, deg_a, deg_b, mult_a, mult_b, n) {
                return true;
            }
            used[w] = false;
            map[v] = u32::MAX;
        }
        false
    }

    /// Enumerates all connected simple 3-regular graphs on `n` vertices, one
    /// representative per isomorphism class, in a deterministic order.
    ///
    /// Generation connects the least incomplete vertex to ascending partners
    /// and only ever touches the least so-far-untouched vertex when opening
    /// a new one, which keeps the candidate count small; duplicates are then
    /// removed by explicit isomorphism tests.
    pub fn enumerate_connected_cubic(n: u32) -> Result<Vec<AbstractGraph>, Error> {
        if n < 4 || n % 2 != 0 {
            return Err(Error::Precondition(format!(
                "cubic graphs need an even vertex count >= 4, got {n}"
            )));
        }
        // The adjacency rows below are fixed-width bitmaps.
        if n > 24 {
            return Err(Error::Unsupported(format!(
                "cubic enumeration is capped at 24 vertices, got {n}"
            )));
        }
        let nu = n as usize;
        let mut deg = vec![0u8; nu];
        let mut adj = vec![[false; 24]; nu];
        let mut edges: Vec<(u32, u32)> = Vec::new();
        let mut out: Vec<AbstractGraph> = Vec::new();
        Self::gen_cubic(&mut deg, &mut adj, &mut edges, 0, nu, &mut out);
        Ok(out)
    }

    fn gen_cubic(
        deg: &mut Vec<u8>,
        adj: &mut Vec<[bool; 24]>,
        edges: &mut Vec<(u32, u32)>,
        touched: usize,
        n: usize,
        out: &mut Vec<AbstractGraph>,
    ) {
        let v = match (0..n).find(|&v| deg[v] < 3) {
            None => {
                let g = AbstractGraph::new(n as u32, edges.iter().copied()).unwrap();
                if g.is_connected() && !out.iter().any(|h| h.isomorphism(&g).is_some()) {
                    out.push(g);
                }
                return;
            }
            Some(v) => v,
        };
        // Partners: completed-prefix vertices are full, so only w > v works;
        // at most one brand-new vertex (the least untouched) may be opened.
        let hi = (touched.max(v + 1) + 1).min(n);
        for w in v + 1..hi {
            if deg[w] < 3 && !adj[v][w] {
                deg[v] += 1;
                deg[w] += 1;
                adj[v][w] = true;
                adj[w][v] = true;
                edges.push((v as u32, w as u32));
                Self::gen_cubic(deg, adj, edges, touched.max(w + 1), n, out);
                edges.pop();
                adj[v][w] = false;
                adj[w][v] = false;
                deg[v] -= 1;
                deg[w] -= 1;
            }
        }
    }
}
