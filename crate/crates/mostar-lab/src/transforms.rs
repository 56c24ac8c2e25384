//! Local graph transforms whose effect on the Mostar index is the
//! subject of the transform claims: contracting a cut edge while
//! re-attaching a leaf, relocating a pendant vertex, and adding an
//! edge.
//!
//! Every transform takes a connected graph, preserves its order, and
//! returns a new simple connected graph; inputs are never mutated. The
//! effect measurement recomputes both index values from scratch so a
//! reported delta can never go stale.

use crate::error::GraphError;
use crate::graph::{Edge, Graph};
use crate::mostar::mostar_index;

/// Before-and-after record of one transform application.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransformOutcome {
    pub before: Graph,
    pub after: Graph,
    pub mostar_before: u64,
    pub mostar_after: u64,
    /// mostar_after - mostar_before.
    pub delta: i64,
    pub cut_edges_before: usize,
    pub cut_edges_after: usize,
}

/// Measures a transform by recomputing the index and cut-edge count of
/// both graphs. Both must be connected.
pub fn measure(before: &Graph, after: &Graph) -> Result<TransformOutcome, GraphError> {
    let mostar_before = mostar_index(before)?;
    let mostar_after = mostar_index(after)?;
    Ok(TransformOutcome {
        before: before.clone(),
        after: after.clone(),
        mostar_before,
        mostar_after,
        delta: mostar_after as i64 - mostar_before as i64,
        cut_edges_before: before.cut_edge_count()?,
        cut_edges_after: after.cut_edge_count()?,
    })
}

/// Contracts the cut edge `e = uv` (both endpoints of degree at least
/// two) and appends a new pendant vertex to the merged vertex.
///
/// The merged vertex keeps the lower label u; the freed label v becomes
/// the new leaf. Since a cut edge's endpoints share no neighbor, the
/// result is simple, and the order and size are both preserved.
pub fn contract_bridge_append_leaf(g: &Graph, e: Edge) -> Result<Graph, GraphError> {
    let n = g.order();
    let (u, v) = (e.u(), e.v());
    if v >= n {
        return Err(GraphError::OutOfRange(format!(
            "edge ({u}, {v}) has an endpoint outside 0..{n}"
        )));
    }
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    if !g.has_edge(u, v) {
        return Err(GraphError::NotAnEdge(u, v));
    }
    // Cut edge test: u cannot reach v without the edge.
    let bridge = g.bridges()?.contains(&e);
    if !bridge {
        return Err(GraphError::NotABridge(u, v));
    }
    if g.degree(u) < 2 || g.degree(v) < 2 {
        return Err(GraphError::PendantBridge(u, v));
    }

    let bit = |x: usize| 1u64 << x;
    let mut rows = g.rows().to_vec();
    // Reroute v's other neighbors to u.
    let moved = rows[v] & !bit(u);
    let mut rest = moved;
    while rest != 0 {
        let w = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        rows[w] = (rows[w] & !bit(v)) | bit(u);
    }
    rows[u] = (rows[u] | moved) & !bit(v);
    // v becomes the appended leaf.
    rows[v] = bit(u);
    rows[u] |= bit(v);
    Ok(Graph::from_rows(n, &rows))
}

/// Detaches the pendant vertex `p` from its unique neighbor and
/// re-attaches it to `x`.
pub fn move_pendant(g: &Graph, p: usize, x: usize) -> Result<Graph, GraphError> {
    let n = g.order();
    if p >= n || x >= n {
        return Err(GraphError::OutOfRange(format!(
            "vertices ({p}, {x}) must lie in 0..{n}"
        )));
    }
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    if g.degree(p) != 1 {
        return Err(GraphError::NotPendant(p));
    }
    if x == p {
        return Err(GraphError::InvalidMove(format!(
            "cannot attach pendant {p} to itself"
        )));
    }
    let y = g.neighbors(p).next().expect("degree-one vertex has a neighbor");
    if x == y {
        return Err(GraphError::InvalidMove(format!(
            "pendant {p} is already attached to {y}"
        )));
    }
    let mut rows = g.rows().to_vec();
    rows[p] = 1u64 << x;
    rows[y] &= !(1u64 << p);
    rows[x] |= 1u64 << p;
    Ok(Graph::from_rows(n, &rows))
}

/// Adds the missing edge `uv`.
pub fn add_edge(g: &Graph, u: usize, v: usize) -> Result<Graph, GraphError> {
    let n = g.order();
    if u >= n || v >= n {
        return Err(GraphError::OutOfRange(format!(
            "vertices ({u}, {v}) must lie in 0..{n}"
        )));
    }
    if u == v {
        return Err(GraphError::InvalidEdge(format!("self-loop ({u}, {v})")));
    }
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    if g.has_edge(u, v) {
        return Err(GraphError::InvalidEdge(format!(
            "edge ({u}, {v}) already present"
        )));
    }
    let mut rows = g.rows().to_vec();
    rows[u] |= 1 << v;
    rows[v] |= 1 << u;
    Ok(Graph::from_rows(n, &rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::is_isomorphic;
    use crate::families::{balanced_bridge_path, path, star};

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn contracting_the_middle_of_a_path_gives_the_star() {
        let p4 = path(4).unwrap();
        let after = contract_bridge_append_leaf(&p4, Edge::new(1, 2)).unwrap();
        assert!(is_isomorphic(&after, &star(4).unwrap()).unwrap());
        let out = measure(&p4, &after).unwrap();
        assert_eq!((out.mostar_before, out.mostar_after, out.delta), (4, 6, 2));
        assert_eq!(out.cut_edges_before, 3);
        assert_eq!(out.cut_edges_after, 3);
    }

    #[test]
    fn contraction_keeps_order_size_and_cut_count() {
        let b = balanced_bridge_path(9, 4).unwrap();
        let after = contract_bridge_append_leaf(&b, Edge::new(1, 2)).unwrap();
        assert_eq!(after.order(), 9);
        assert_eq!(after.size(), b.size());
        assert_eq!(after.cut_edge_count().unwrap(), 4);
        assert!(after.is_connected());
    }

    #[test]
    fn pendant_cut_edges_cannot_be_contracted() {
        let p3 = path(3).unwrap();
        assert_eq!(
            contract_bridge_append_leaf(&p3, Edge::new(0, 1)),
            Err(GraphError::PendantBridge(0, 1))
        );
        assert_eq!(
            contract_bridge_append_leaf(&p3, Edge::new(1, 2)),
            Err(GraphError::PendantBridge(1, 2))
        );
    }

    #[test]
    fn contraction_rejects_non_bridges_and_non_edges() {
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(
            contract_bridge_append_leaf(&c4, Edge::new(0, 1)),
            Err(GraphError::NotABridge(0, 1))
        );
        assert_eq!(
            contract_bridge_append_leaf(&c4, Edge::new(0, 2)),
            Err(GraphError::NotAnEdge(0, 2))
        );
        assert!(matches!(
            contract_bridge_append_leaf(&c4, Edge::new(0, 9)),
            Err(GraphError::OutOfRange(_))
        ));
        let split = g(4, &[(0, 1), (2, 3)]);
        assert_eq!(
            contract_bridge_append_leaf(&split, Edge::new(0, 1)),
            Err(GraphError::NotConnected)
        );
    }

    #[test]
    fn moving_a_pendant_between_spider_legs() {
        // Center 0 with a three-edge leg 0-1-2-3 and a pendant 4;
        // moving 4 out to vertex 1 rebalances the legs.
        let before = g(5, &[(0, 1), (1, 2), (2, 3), (0, 4)]);
        let after = move_pendant(&before, 4, 1).unwrap();
        assert!(after.has_edge(1, 4));
        assert!(!after.has_edge(0, 4));
        assert!(after.is_connected());
        assert_eq!(after.size(), before.size());
        let out = measure(&before, &after).unwrap();
        assert_eq!(out.cut_edges_before, out.cut_edges_after);
    }

    #[test]
    fn pendant_move_decrease_case() {
        // Mostar can drop when a leaf moves to a same-degree vertex.
        let before = g(6, &[(0, 2), (0, 3), (0, 5), (1, 2), (1, 4), (2, 3)]);
        let after = move_pendant(&before, 4, 3).unwrap();
        let out = measure(&before, &after).unwrap();
        assert_eq!((out.mostar_before, out.mostar_after, out.delta), (14, 12, -2));
    }

    #[test]
    fn pendant_move_validations() {
        let p4 = path(4).unwrap();
        assert_eq!(move_pendant(&p4, 1, 3), Err(GraphError::NotPendant(1)));
        assert!(matches!(
            move_pendant(&p4, 0, 1),
            Err(GraphError::InvalidMove(_))
        ));
        assert!(matches!(
            move_pendant(&p4, 0, 0),
            Err(GraphError::InvalidMove(_))
        ));
        assert!(matches!(
            move_pendant(&p4, 0, 7),
            Err(GraphError::OutOfRange(_))
        ));
        let split = g(4, &[(0, 1), (2, 3)]);
        assert_eq!(move_pendant(&split, 0, 2), Err(GraphError::NotConnected));
    }

    #[test]
    fn completing_a_near_complete_graph_erases_the_index() {
        let k4_minus = g(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let after = add_edge(&k4_minus, 0, 1).unwrap();
        let out = measure(&k4_minus, &after).unwrap();
        assert_eq!((out.mostar_before, out.mostar_after), (4, 0));
        assert_eq!(out.delta, -4);
    }

    #[test]
    fn closing_a_path_into_a_cycle_erases_the_index() {
        let p3 = path(3).unwrap();
        let out = measure(&p3, &add_edge(&p3, 0, 2).unwrap()).unwrap();
        assert_eq!((out.mostar_before, out.mostar_after), (2, 0));

        let p4 = path(4).unwrap();
        let out = measure(&p4, &add_edge(&p4, 0, 3).unwrap()).unwrap();
        assert_eq!((out.mostar_before, out.mostar_after), (4, 0));
        assert_eq!(out.cut_edges_after, 0);
    }

    #[test]
    fn add_edge_validations() {
        let p3 = path(3).unwrap();
        assert!(matches!(
            add_edge(&p3, 0, 1),
            Err(GraphError::InvalidEdge(_))
        ));
        assert!(matches!(
            add_edge(&p3, 1, 1),
            Err(GraphError::InvalidEdge(_))
        ));
        assert!(matches!(
            add_edge(&p3, 0, 5),
            Err(GraphError::OutOfRange(_))
        ));
        let split = g(4, &[(0, 1), (2, 3)]);
        assert_eq!(add_edge(&split, 1, 2), Err(GraphError::NotConnected));
    }

    #[test]
    fn inputs_are_not_mutated() {
        let before = g(5, &[(0, 1), (1, 2), (2, 3), (0, 4)]);
        let copy = before.clone();
        let _ = move_pendant(&before, 4, 2).unwrap();
        let _ = add_edge(&before, 0, 2).unwrap();
        let _ = contract_bridge_append_leaf(&before, Edge::new(1, 2)).unwrap();
        assert_eq!(before, copy);
    }
}
