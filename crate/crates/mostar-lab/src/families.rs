//! Constructors for the graph families that extremal cut-edge arguments
//! single out, plus the elementary families used as baselines.
//!
//! The two central families are parameterized by order n and cut-edge
//! count k:
//!
//! * `complete_with_pendants`: a clique on n - k vertices with k pendant
//!   vertices attached to one hub. Its Mostar index is the closed form
//!   k(n-2) + k(n-k-1), and it is the candidate maximizer among
//!   connected graphs with k cut edges.
//! * `balanced_bridge_path`: a path of k cut edges with the remaining
//!   n - k - 1 vertices forming a clique glued to the middle path
//!   vertex. It is the candidate minimizer for the same class.
//!
//! Both reject n - k = 2: the leftover vertex would hang as one extra
//! pendant and the graph would have k + 1 cut edges instead of k,
//! leaving the family's defining property unsatisfiable.

use crate::error::GraphError;
use crate::graph::Graph;
use serde::Serialize;
use std::str::FromStr;

/// Tags for every constructor in this module.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Family {
    #[serde(rename = "COMPLETE_WITH_PENDANTS")]
    CompleteWithPendants,
    #[serde(rename = "BALANCED_BRIDGE_PATH")]
    BalancedBridgePath,
    #[serde(rename = "HUB_TRIANGLE")]
    HubTriangle,
    #[serde(rename = "PATH")]
    Path,
    #[serde(rename = "CYCLE")]
    Cycle,
    #[serde(rename = "COMPLETE")]
    Complete,
    #[serde(rename = "STAR")]
    Star,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = match self {
            Family::CompleteWithPendants => "COMPLETE_WITH_PENDANTS",
            Family::BalancedBridgePath => "BALANCED_BRIDGE_PATH",
            Family::HubTriangle => "HUB_TRIANGLE",
            Family::Path => "PATH",
            Family::Cycle => "CYCLE",
            Family::Complete => "COMPLETE",
            Family::Star => "STAR",
        };
        f.write_str(tag)
    }
}

/// Clique on vertices `0..n-k` with pendant vertices `n-k..n` all
/// attached to hub 0.
///
/// Requires n >= 2, 1 <= k <= n - 1, and n - k != 2. With n - k = 1 the
/// clique degenerates to the hub alone and the result is the star; with
/// n - k = 2 the second clique vertex would itself be pendant, making
/// k + 1 cut edges, so those parameters are rejected as degenerate.
pub fn complete_with_pendants(n: usize, k: usize) -> Result<Graph, GraphError> {
    if n < 2 || k < 1 || k > n - 1 {
        return Err(GraphError::OutOfRange(format!(
            "complete_with_pendants needs n >= 2 and 1 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    let c = n - k;
    if c == 2 {
        return Err(GraphError::DegenerateFamily(format!(
            "n={n}, k={k} leaves a two-vertex clique; the non-hub vertex would be a (k+1)-th pendant"
        )));
    }
    let mut edges = Vec::new();
    for v in 1..c {
        for u in 0..v {
            edges.push((u, v));
        }
    }
    for leaf in c..n {
        edges.push((0, leaf));
    }
    Graph::from_edges(n, &edges)
}

/// Path u_0 .. u_k on vertices `0..=k` with the remaining n - k - 1
/// vertices pairwise adjacent and all adjacent to the middle path
/// vertex u_{floor(k/2)}.
///
/// Requires n >= 2 and 1 <= k <= n - 1. With n - k = 1 there are no
/// extra vertices and the result is the path on n vertices. As with the
/// clique family, n - k = 2 is degenerate: the single extra vertex
/// would be pendant and the graph would carry k + 1 cut edges.
pub fn balanced_bridge_path(n: usize, k: usize) -> Result<Graph, GraphError> {
    if n < 2 || k < 1 || k > n - 1 {
        return Err(GraphError::OutOfRange(format!(
            "balanced_bridge_path needs n >= 2 and 1 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    if n - k == 2 {
        return Err(GraphError::DegenerateFamily(format!(
            "n={n}, k={k} leaves one extra vertex; its attachment edge would be a (k+1)-th cut edge"
        )));
    }
    let mid = k / 2;
    let mut edges: Vec<(usize, usize)> = (1..=k).map(|i| (i - 1, i)).collect();
    for b in k + 1..n {
        edges.push((mid, b));
        for a in k + 1..b {
            edges.push((a, b));
        }
    }
    Graph::from_edges(n, &edges)
}

/// The clique-with-pendants core on n - 2*mu_extra vertices with
/// `mu_extra` extra triangles through the hub: each triangle is a new
/// adjacent vertex pair joined to hub 0.
///
/// Requires the core order c = n - 2*mu_extra to satisfy the clique
/// family's own constraints (c >= 2, 1 <= k <= c - 1, c - k != 2); any
/// shortfall is an out-of-range parameter set.
pub fn hub_triangle_graph(n: usize, k: usize, mu_extra: usize) -> Result<Graph, GraphError> {
    if n < 2 || k < 1 {
        return Err(GraphError::OutOfRange(format!(
            "hub_triangle_graph needs n >= 2 and k >= 1, got n={n}, k={k}"
        )));
    }
    let budget_err = || {
        GraphError::OutOfRange(format!(
            "hub_triangle_graph cannot fit k={k} cut edges and {mu_extra} extra triangles in n={n} vertices"
        ))
    };
    let c = n.checked_sub(2 * mu_extra).ok_or_else(budget_err)?;
    if c < 2 || k > c - 1 || c - k == 2 {
        return Err(budget_err());
    }
    let core = complete_with_pendants(c, k)?;
    let mut edges: Vec<(usize, usize)> = core.edges().iter().map(|e| (e.u(), e.v())).collect();
    // c + 2*mu_extra == n, so the extras pair up exactly.
    let mut t = c;
    while t < n {
        edges.push((0, t));
        edges.push((0, t + 1));
        edges.push((t, t + 1));
        t += 2;
    }
    Graph::from_edges(n, &edges)
}

/// Path on n vertices, edges i-1 ~ i.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::OutOfRange("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle on n >= 3 vertices.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::OutOfRange(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    Graph::from_edges(n, &edges)
}

/// Complete graph on n >= 1 vertices.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::OutOfRange("complete needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for v in 0..n {
        for u in 0..v {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Star with hub 0 and n - 1 leaves.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::OutOfRange("star needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|leaf| (0, leaf)).collect();
    Graph::from_edges(n, &edges)
}

/// A parsed family request, e.g. from a command line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub k: Option<usize>,
    pub mu: Option<usize>,
}

/// Why a family spec string failed to parse. Parameter values that
/// parse but violate a constructor's domain surface later, from
/// [`FamilySpec::build`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid family spec: {0}")]
pub struct FamilySpecParseError(pub String);

impl FromStr for FamilySpec {
    type Err = FamilySpecParseError;

    /// Parses `family=<name>,n=<int>[,k=<int>][,mu=<int>]`. Keys may
    /// come in any order; unknown, duplicate, or missing keys are
    /// errors, as are k/mu values for families that do not take them.
    fn from_str(s: &str) -> Result<FamilySpec, FamilySpecParseError> {
        let mut family: Option<Family> = None;
        let mut n: Option<usize> = None;
        let mut k: Option<usize> = None;
        let mut mu: Option<usize> = None;
        for part in s.split(',') {
            let part = part.trim();
            let (key, value) = part.split_once('=').ok_or_else(|| {
                FamilySpecParseError(format!("expected key=value, got {part:?}"))
            })?;
            let dup = |key: &str| FamilySpecParseError(format!("duplicate key {key:?}"));
            match key.trim() {
                "family" => {
                    if family.is_some() {
                        return Err(dup("family"));
                    }
                    family = Some(match value.trim() {
                        "complete_with_pendants" => Family::CompleteWithPendants,
                        "balanced_bridge_path" => Family::BalancedBridgePath,
                        "hub_triangle" => Family::HubTriangle,
                        "path" => Family::Path,
                        "cycle" => Family::Cycle,
                        "complete" => Family::Complete,
                        "star" => Family::Star,
                        other => {
                            return Err(FamilySpecParseError(format!(
                                "unknown family {other:?}"
                            )))
                        }
                    });
                }
                "n" | "k" | "mu" => {
                    let slot = match key.trim() {
                        "n" => &mut n,
                        "k" => &mut k,
                        _ => &mut mu,
                    };
                    if slot.is_some() {
                        return Err(dup(key));
                    }
                    *slot = Some(value.trim().parse().map_err(|_| {
                        FamilySpecParseError(format!("{key} must be an integer, got {value:?}"))
                    })?);
                }
                other => return Err(FamilySpecParseError(format!("unknown key {other:?}"))),
            }
        }
        let family =
            family.ok_or_else(|| FamilySpecParseError("missing key \"family\"".into()))?;
        let n = n.ok_or_else(|| FamilySpecParseError("missing key \"n\"".into()))?;

        let takes_k = matches!(
            family,
            Family::CompleteWithPendants | Family::BalancedBridgePath | Family::HubTriangle
        );
        let takes_mu = matches!(family, Family::HubTriangle);
        if takes_k && k.is_none() {
            return Err(FamilySpecParseError(format!("family {family} needs k")));
        }
        if !takes_k && k.is_some() {
            return Err(FamilySpecParseError(format!(
                "family {family} does not take k"
            )));
        }
        if takes_mu && mu.is_none() {
            return Err(FamilySpecParseError(format!("family {family} needs mu")));
        }
        if !takes_mu && mu.is_some() {
            return Err(FamilySpecParseError(format!(
                "family {family} does not take mu"
            )));
        }
        Ok(FamilySpec { family, n, k, mu })
    }
}

impl FamilySpec {
    /// Builds the requested graph.
    pub fn build(&self) -> Result<Graph, GraphError> {
        match self.family {
            Family::CompleteWithPendants => {
                complete_with_pendants(self.n, self.k.expect("parse guarantees k"))
            }
            Family::BalancedBridgePath => {
                balanced_bridge_path(self.n, self.k.expect("parse guarantees k"))
            }
            Family::HubTriangle => hub_triangle_graph(
                self.n,
                self.k.expect("parse guarantees k"),
                self.mu.expect("parse guarantees mu"),
            ),
            Family::Path => path(self.n),
            Family::Cycle => cycle(self.n),
            Family::Complete => complete(self.n),
            Family::Star => star(self.n),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mostar::mostar_index;

    #[test]
    fn clique_with_pendants_matches_a_hand_built_graph() {
        let g = complete_with_pendants(6, 2).unwrap();
        let want = Graph::from_edges(
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 4),
                (0, 5),
            ],
        )
        .unwrap();
        assert_eq!(g, want);
        assert_eq!(mostar_index(&g).unwrap(), 14);
        assert_eq!(g.cut_edge_count().unwrap(), 2);
    }

    #[test]
    fn clique_with_all_pendants_is_the_star() {
        for n in 2..=8 {
            assert_eq!(
                complete_with_pendants(n, n - 1).unwrap(),
                star(n).unwrap()
            );
        }
    }

    #[test]
    fn clique_with_one_pendant_on_five_vertices() {
        let g = complete_with_pendants(5, 1).unwrap();
        assert_eq!(mostar_index(&g).unwrap(), 6);
        assert_eq!(g.size(), 7);
    }

    #[test]
    fn two_vertex_leftover_clique_is_degenerate() {
        assert!(matches!(
            complete_with_pendants(5, 3),
            Err(GraphError::DegenerateFamily(_))
        ));
        assert!(matches!(
            balanced_bridge_path(6, 4),
            Err(GraphError::DegenerateFamily(_))
        ));
    }

    #[test]
    fn family_parameter_ranges_are_enforced() {
        assert!(matches!(
            complete_with_pendants(6, 0),
            Err(GraphError::OutOfRange(_))
        ));
        assert!(matches!(
            complete_with_pendants(6, 6),
            Err(GraphError::OutOfRange(_))
        ));
        assert!(matches!(
            complete_with_pendants(1, 1),
            Err(GraphError::OutOfRange(_))
        ));
        assert!(matches!(
            balanced_bridge_path(6, 0),
            Err(GraphError::OutOfRange(_))
        ));
        assert!(matches!(
            balanced_bridge_path(6, 6),
            Err(GraphError::OutOfRange(_))
        ));
    }

    #[test]
    fn bridge_path_with_maximal_k_is_the_path() {
        for n in 2..=9 {
            assert_eq!(balanced_bridge_path(n, n - 1).unwrap(), path(n).unwrap());
        }
    }

    #[test]
    fn bridge_path_nine_four_shape() {
        let g = balanced_bridge_path(9, 4).unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(g.size(), 14);
        assert_eq!(g.cut_edge_count().unwrap(), 4);
        // Extras 5..9 attach at the middle path vertex u_2.
        for b in 5..9 {
            assert!(g.has_edge(2, b));
        }
        assert_eq!(mostar_index(&g).unwrap(), 40);
    }

    #[test]
    fn bridge_path_six_two_value() {
        let g = balanced_bridge_path(6, 2).unwrap();
        assert_eq!(mostar_index(&g).unwrap(), 14);
        assert_eq!(g.cut_edge_count().unwrap(), 2);
    }

    #[test]
    fn hub_triangle_literal_drawing() {
        // Core clique {0,1,2,3}, pendants 4 and 5 at 0, one triangle
        // 0-6-7.
        let g = hub_triangle_graph(8, 2, 1).unwrap();
        let want = Graph::from_edges(
            8,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 4),
                (0, 5),
                (0, 6),
                (0, 7),
                (6, 7),
            ],
        )
        .unwrap();
        assert_eq!(g, want);
        assert_eq!(g.cut_edge_count().unwrap(), 2);
        assert_eq!(g.cyclomatic_number().unwrap(), 4);
        assert_eq!(mostar_index(&g).unwrap(), 34);
    }

    #[test]
    fn hub_triangle_without_triangles_is_the_clique_family() {
        for n in 4..=9 {
            for k in 1..n {
                if n - k == 2 {
                    continue;
                }
                assert_eq!(
                    hub_triangle_graph(n, k, 0).unwrap(),
                    complete_with_pendants(n, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn hub_triangle_budget_is_checked() {
        assert!(matches!(
            hub_triangle_graph(7, 1, 2),
            Err(GraphError::OutOfRange(_))
        ));
        assert!(matches!(
            hub_triangle_graph(8, 2, 9),
            Err(GraphError::OutOfRange(_))
        ));
        // Core of order 4 with k=2 leaves a two-vertex clique.
        assert!(matches!(
            hub_triangle_graph(8, 2, 2),
            Err(GraphError::OutOfRange(_))
        ));
    }

    #[test]
    fn elementary_families() {
        assert_eq!(path(1).unwrap().order(), 1);
        assert_eq!(star(1).unwrap().order(), 1);
        assert_eq!(star(2).unwrap(), path(2).unwrap());
        assert_eq!(complete(3).unwrap(), cycle(3).unwrap());
        assert!(matches!(cycle(2), Err(GraphError::OutOfRange(_))));
        assert!(matches!(path(0), Err(GraphError::OutOfRange(_))));
        assert!(matches!(complete(0), Err(GraphError::OutOfRange(_))));
        assert!(matches!(star(0), Err(GraphError::OutOfRange(_))));
        for n in 3..=8 {
            assert_eq!(mostar_index(&cycle(n).unwrap()).unwrap(), 0);
        }
    }

    #[test]
    fn every_constructor_output_is_connected() {
        for n in 2..=10 {
            for k in 1..n {
                if let Ok(g) = complete_with_pendants(n, k) {
                    assert!(g.is_connected());
                }
                if let Ok(g) = balanced_bridge_path(n, k) {
                    assert!(g.is_connected());
                }
                for mu in 0..4 {
                    if let Ok(g) = hub_triangle_graph(n, k, mu) {
                        assert!(g.is_connected());
                    }
                }
            }
        }
    }

    #[test]
    fn spec_strings_parse_and_build() {
        let spec: FamilySpec = "family=complete_with_pendants,n=6,k=2".parse().unwrap();
        assert_eq!(spec.family, Family::CompleteWithPendants);
        assert_eq!((spec.n, spec.k, spec.mu), (6, Some(2), None));
        assert_eq!(spec.build().unwrap(), complete_with_pendants(6, 2).unwrap());

        let spec: FamilySpec = "family=hub_triangle,n=8,k=2,mu=1".parse().unwrap();
        assert_eq!(spec.build().unwrap(), hub_triangle_graph(8, 2, 1).unwrap());

        let spec: FamilySpec = "n=5, family=path".parse().unwrap();
        assert_eq!(spec.build().unwrap(), path(5).unwrap());
    }

    #[test]
    fn bad_spec_strings_are_rejected() {
        for bad in [
            "",
            "family=path",
            "n=5",
            "family=unknown,n=5",
            "family=path,n=5,k=2",
            "family=path,n=five",
            "family=complete_with_pendants,n=6",
            "family=hub_triangle,n=8,k=2",
            "family=path,n=5,n=6",
            "family=path,n=5,weird=1",
            "family=cycle;n=5",
        ] {
            assert!(bad.parse::<FamilySpec>().is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn degenerate_spec_surfaces_at_build_time() {
        let spec: FamilySpec = "family=complete_with_pendants,n=5,k=3".parse().unwrap();
        assert!(matches!(
            spec.build(),
            Err(GraphError::DegenerateFamily(_))
        ));
    }
}
