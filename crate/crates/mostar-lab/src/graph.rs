//! Simple undirected graphs stored as one neighbor bitmask per vertex.
//!
//! Orders are capped at 64 so a vertex set is always a single `u64` and
//! breadth-first search reduces to a handful of word operations. Graphs
//! are immutable after construction; transforms build new graphs.

use crate::error::GraphError;

/// Hard cap on graph order imposed by the bitmask representation.
pub const MAX_ORDER: usize = 64;

/// Distance sentinel for unreachable vertices.
pub const INFINITE: u32 = u32::MAX;

/// An undirected edge with endpoints in normalized order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes endpoint order. Panics on a self-loop, which is a
    /// programming error; fallible callers validate endpoints first.
    pub fn new(a: usize, b: usize) -> Edge {
        assert!(a != b, "self-loop ({a}, {a}) cannot form an Edge");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    /// Smaller endpoint.
    pub fn u(&self) -> usize {
        self.u
    }

    /// Larger endpoint.
    pub fn v(&self) -> usize {
        self.v
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an explicit edge list.
    ///
    /// Endpoints must lie in `0..n`, and the list may not contain
    /// self-loops or repeated pairs (in either orientation).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::OutOfRange(format!(
                "order {n} not in 1..={MAX_ORDER}"
            )));
        }
        let mut adj = vec![0u64; n];
        let mut m = 0;
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::OutOfRange(format!(
                    "edge ({a}, {b}) has an endpoint outside 0..{n}"
                )));
            }
            if a == b {
                return Err(GraphError::InvalidEdge(format!("self-loop ({a}, {b})")));
            }
            if adj[a] >> b & 1 == 1 {
                return Err(GraphError::InvalidEdge(format!(
                    "duplicate edge ({a}, {b})"
                )));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
            m += 1;
        }
        Ok(Graph { n, m, adj })
    }

    /// Wraps prevalidated adjacency rows. Callers guarantee symmetry,
    /// zero diagonal, and no bits at or above `n`.
    pub(crate) fn from_rows(n: usize, rows: &[u64]) -> Graph {
        debug_assert_eq!(rows.len(), n);
        let mut m = 0;
        for (v, &row) in rows.iter().enumerate() {
            debug_assert_eq!(row >> v & 1, 0, "diagonal bit set at {v}");
            m += row.count_ones() as usize;
        }
        debug_assert_eq!(m % 2, 0);
        Graph {
            n,
            m: m / 2,
            adj: rows.to_vec(),
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.m
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// True when `uv` is an edge. False for out-of-range or equal
    /// endpoints rather than an error, so it can be used as a plain
    /// predicate.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && u != v && self.adj[u] >> v & 1 == 1
    }

    /// Degree of `v`. Panics if `v >= order()`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Neighbors of `v` in increasing order. Panics if `v >= order()`.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.adj[v];
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w)
            }
        })
    }

    /// All edges in lexicographic order of (u, v) with u < v.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            let mut rest = self.adj[u] >> (u + 1) << (u + 1);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Hop distances from `s` to every vertex, `INFINITE` where no path
    /// exists.
    pub fn distances_from(&self, s: usize) -> Result<Vec<u32>, GraphError> {
        if s >= self.n {
            return Err(GraphError::OutOfRange(format!(
                "source {s} outside 0..{}",
                self.n
            )));
        }
        let mut dist = vec![INFINITE; self.n];
        bfs_rows(&self.adj, s, &mut dist);
        Ok(dist)
    }

    /// True when every vertex is reachable from vertex 0. The one-vertex
    /// graph is connected.
    pub fn is_connected(&self) -> bool {
        connected_rows(&self.adj)
    }

    /// All cut edges, in lexicographic order. Errors on a disconnected
    /// graph: a missing edge between components is not a meaningful
    /// answer.
    pub fn bridges(&self) -> Result<Vec<Edge>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::NotConnected);
        }
        let mut out = Vec::new();
        for_each_bridge(&self.adj, |u, v| out.push(Edge { u, v }));
        out.sort();
        Ok(out)
    }

    /// Number of cut edges of a connected graph.
    pub fn cut_edge_count(&self) -> Result<usize, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::NotConnected);
        }
        let mut count = 0;
        for_each_bridge(&self.adj, |_, _| count += 1);
        Ok(count)
    }

    /// Cyclomatic number m - n + 1 of a connected graph: the number of
    /// independent cycles, zero exactly for trees.
    pub fn cyclomatic_number(&self) -> Result<usize, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::NotConnected);
        }
        Ok(self.m + 1 - self.n)
    }

    /// Vertices of degree one, in increasing order.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    /// `perm` must be a permutation of `0..order()`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::OutOfRange(format!(
                "permutation length {} does not match order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(GraphError::OutOfRange(
                    "not a permutation of the vertex set".into(),
                ));
            }
            seen |= 1 << p;
        }
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            let mut rest = self.adj[u];
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Ok(Graph {
            n: self.n,
            m: self.m,
            adj,
        })
    }
}

/// Breadth-first distances over raw adjacency rows, written into
/// `dist[..rows.len()]` with `INFINITE` for unreached vertices. The
/// frontier is expanded a whole level at a time by OR-ing neighbor
/// masks.
pub(crate) fn bfs_rows(rows: &[u64], src: usize, dist: &mut [u32]) {
    let n = rows.len();
    for d in dist[..n].iter_mut() {
        *d = INFINITE;
    }
    dist[src] = 0;
    let mut visited: u64 = 1 << src;
    let mut frontier = visited;
    let mut level: u32 = 0;
    while frontier != 0 {
        level += 1;
        let mut next: u64 = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        next &= !visited;
        visited |= next;
        let mut t = next;
        while t != 0 {
            let v = t.trailing_zeros() as usize;
            t &= t - 1;
            dist[v] = level;
        }
        frontier = next;
    }
}

/// Connectivity by bitset closure from vertex 0.
pub(crate) fn connected_rows(rows: &[u64]) -> bool {
    let n = rows.len();
    if n == 0 {
        return false;
    }
    let full: u64 = if n == MAX_ORDER { !0 } else { (1u64 << n) - 1 };
    let mut reach: u64 = 1;
    let mut frontier: u64 = 1;
    while frontier != 0 {
        let mut next: u64 = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        frontier = next & !reach;
        reach |= frontier;
    }
    reach == full
}

/// Visits every cut edge once as `(min, max)` endpoints, in discovery
/// order of an iterative lowpoint search. Works per component, so
/// callers need not pre-check connectivity when they only count.
/// Dispatches on a scratch size so the exhaustive-enumeration loops do
/// not pay for 64-vertex scratch arrays at order 8.
pub(crate) fn for_each_bridge(rows: &[u64], visit: impl FnMut(usize, usize)) {
    if rows.len() <= 8 {
        bridge_scan::<8>(rows, visit)
    } else {
        bridge_scan::<MAX_ORDER>(rows, visit)
    }
}

fn bridge_scan<const CAP: usize>(rows: &[u64], mut visit: impl FnMut(usize, usize)) {
    let n = rows.len();
    debug_assert!(n <= CAP);
    // disc: 0 means unvisited, otherwise discovery time starting at 1.
    let mut disc = [0u32; CAP];
    let mut low = [0u32; CAP];
    let mut parent = [usize::MAX; CAP];
    // Unexplored-neighbor mask for every vertex open on the stack.
    let mut rem = [0u64; CAP];
    let mut stack = [0usize; CAP];
    let mut time: u32 = 0;

    for root in 0..n {
        if disc[root] != 0 {
            continue;
        }
        time += 1;
        disc[root] = time;
        low[root] = time;
        rem[root] = rows[root];
        stack[0] = root;
        let mut sp = 0usize;
        loop {
            let v = stack[sp];
            if rem[v] != 0 {
                let w = rem[v].trailing_zeros() as usize;
                rem[v] &= rem[v] - 1;
                if disc[w] == 0 {
                    parent[w] = v;
                    time += 1;
                    disc[w] = time;
                    low[w] = time;
                    rem[w] = rows[w];
                    sp += 1;
                    stack[sp] = w;
                } else if w != parent[v] {
                    // Back edge; in a simple graph the single parent
                    // edge is the only one excused.
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                if sp == 0 {
                    break;
                }
                sp -= 1;
                let p = stack[sp];
                low[p] = low[p].min(low[v]);
                if low[v] > disc[p] {
                    visit(p.min(v), p.max(v));
                }
            }
        }
    }
}
