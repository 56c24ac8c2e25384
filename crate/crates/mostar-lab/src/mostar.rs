//! The Mostar index and its per-edge decomposition.
//!
//! For an edge uv of a connected graph, every vertex w falls into
//! exactly one of three classes: strictly closer to u, strictly closer
//! to v, or equidistant (|d(w,u) - d(w,v)| <= 1 always, since u and v
//! are adjacent). The edge's contribution to the index is the absolute
//! difference of the first two class sizes; the Mostar index is the sum
//! of contributions over all edges.
//!
//! Two independent routes compute the same numbers here: a two-search
//! route for a single edge (`edge_contribution`) and an all-pairs route
//! for whole graphs (`contribution_profile`, `mostar_index`). The
//! verification layer exploits the redundancy as a cross-check.

use crate::error::GraphError;
use crate::graph::{bfs_rows, Edge, Graph, INFINITE, MAX_ORDER};
use serde::Serialize;

/// Distance census of one edge.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct EdgeContribution {
    pub edge: (usize, usize),
    /// Vertices strictly closer to the smaller endpoint.
    pub closer_to_u: u64,
    /// Vertices strictly closer to the larger endpoint.
    pub closer_to_v: u64,
    /// Vertices at equal distance from both endpoints.
    pub equidistant: u64,
    /// |closer_to_u - closer_to_v|.
    pub imbalance: u64,
}

/// Split induced by deleting a cut edge.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct BridgeBalance {
    pub edge: (usize, usize),
    /// Order of the smaller component after deletion; between 1 and
    /// n/2.
    pub smaller_side: u64,
    /// The edge's Mostar contribution, n - 2 * smaller_side. A cut edge
    /// has no equidistant vertices, so this equals the imbalance.
    pub contribution: u64,
}

fn count_classes(
    n: usize,
    du: &[u32],
    dv: &[u32],
    u: usize,
    v: usize,
) -> EdgeContribution {
    let mut cu = 0u64;
    let mut cv = 0u64;
    let mut eq = 0u64;
    for w in 0..n {
        match du[w].cmp(&dv[w]) {
            std::cmp::Ordering::Less => cu += 1,
            std::cmp::Ordering::Greater => cv += 1,
            std::cmp::Ordering::Equal => eq += 1,
        }
    }
    EdgeContribution {
        edge: (u, v),
        closer_to_u: cu,
        closer_to_v: cv,
        equidistant: eq,
        imbalance: cu.abs_diff(cv),
    }
}

/// Distance census of the single edge `e`, via one search from each
/// endpoint. The graph must be connected and `e` must be one of its
/// edges.
pub fn edge_contribution(g: &Graph, e: Edge) -> Result<EdgeContribution, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    let (u, v) = (e.u(), e.v());
    if !g.has_edge(u, v) {
        return Err(GraphError::NotAnEdge(u, v));
    }
    let n = g.order();
    let mut du = [INFINITE; MAX_ORDER];
    let mut dv = [INFINITE; MAX_ORDER];
    bfs_rows(g.rows(), u, &mut du);
    bfs_rows(g.rows(), v, &mut dv);
    Ok(count_classes(n, &du, &dv, u, v))
}

/// All-pairs distances, one row of length n per source.
fn all_pairs(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let mut dist = vec![INFINITE; n * n];
    for s in 0..n {
        bfs_rows(g.rows(), s, &mut dist[s * n..(s + 1) * n]);
    }
    dist
}

/// Census of every edge, in lexicographic edge order, from one
/// all-pairs distance table.
pub fn contribution_profile(g: &Graph) -> Result<Vec<EdgeContribution>, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    let n = g.order();
    let dist = all_pairs(g);
    Ok(g.edges()
        .into_iter()
        .map(|e| {
            let (u, v) = (e.u(), e.v());
            count_classes(n, &dist[u * n..(u + 1) * n], &dist[v * n..(v + 1) * n], u, v)
        })
        .collect())
}

/// The Mostar index: sum of edge imbalances.
pub fn mostar_index(g: &Graph) -> Result<u64, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    let n = g.order();
    let dist = all_pairs(g);
    let mut total = 0u64;
    for e in g.edges() {
        let (u, v) = (e.u(), e.v());
        let du = &dist[u * n..(u + 1) * n];
        let dv = &dist[v * n..(v + 1) * n];
        let mut cu = 0u64;
        let mut cv = 0u64;
        for w in 0..n {
            match du[w].cmp(&dv[w]) {
                std::cmp::Ordering::Less => cu += 1,
                std::cmp::Ordering::Greater => cv += 1,
                std::cmp::Ordering::Equal => {}
            }
        }
        total += cu.abs_diff(cv);
    }
    Ok(total)
}

/// Component split of the cut edge `e`: deletes it, takes the order of
/// the side not containing the larger endpoint, and reports the smaller
/// of the two sides together with the resulting contribution n - 2s.
pub fn bridge_balance(g: &Graph, e: Edge) -> Result<BridgeBalance, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    let (u, v) = (e.u(), e.v());
    if !g.has_edge(u, v) {
        return Err(GraphError::NotAnEdge(u, v));
    }
    let n = g.order();
    let mut rows = [0u64; MAX_ORDER];
    rows[..n].copy_from_slice(g.rows());
    rows[u] &= !(1u64 << v);
    rows[v] &= !(1u64 << u);
    let mut dist = [INFINITE; MAX_ORDER];
    bfs_rows(&rows[..n], u, &mut dist);
    if dist[v] != INFINITE {
        return Err(GraphError::NotABridge(u, v));
    }
    let side_u = dist[..n].iter().filter(|&&d| d != INFINITE).count() as u64;
    let smaller = side_u.min(n as u64 - side_u);
    Ok(BridgeBalance {
        edge: (u, v),
        smaller_side: smaller,
        contribution: n as u64 - 2 * smaller,
    })
}
