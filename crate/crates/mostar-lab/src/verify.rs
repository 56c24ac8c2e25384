//! Exhaustive verification of the claim catalogue on small connected
//! graphs.
//!
//! Each claim receives a verdict over an explicit finite scope:
//! `HOLDS_IN_SCOPE` when no graph in scope violates it, `REFUTED` when
//! at least one does (with replayable counterexamples), and `PARTIAL`
//! when a strict claim never fails but achieves equality somewhere, or
//! when a bound is valid everywhere yet its equality characterization
//! breaks down. Refutation is a result, not an error; errors are
//! reserved for misuse of the API itself.
//!
//! Scopes are cells: lemma claims are keyed by (order, size), theorem
//! audits by (order, cut edges) plus the cyclomatic number for the
//! refined bound. Counterexamples keep the first offending site per
//! cell, so reports stay bounded while every violation is still
//! counted.

use crate::bounds;
use crate::enumerate::{
    canonical_form, enumerate_connected, extremal_search, GraphClassFilter, Objective,
};
use crate::error::GraphError;
use crate::families;
use crate::graph::Graph;
use crate::graph6;
use crate::mostar::{contribution_profile, mostar_index};
use crate::transforms;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;

/// Identifiers for every claim the verifier knows, in report order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum ClaimId {
    #[serde(rename = "L1_PENDANT")]
    L1Pendant,
    #[serde(rename = "L2_NONPENDANT")]
    L2Nonpendant,
    #[serde(rename = "L3_CONTRACT")]
    L3Contract,
    #[serde(rename = "L4_MOVE")]
    L4Move,
    #[serde(rename = "L5_CLIQUE")]
    L5Clique,
    #[serde(rename = "L6_ADDEDGE")]
    L6AddEdge,
    #[serde(rename = "T1_MAX")]
    T1Max,
    #[serde(rename = "T2_MIN")]
    T2Min,
    #[serde(rename = "T3_CYCLOMATIC")]
    T3Cyclomatic,
}

impl ClaimId {
    pub const ALL: [ClaimId; 9] = [
        ClaimId::L1Pendant,
        ClaimId::L2Nonpendant,
        ClaimId::L3Contract,
        ClaimId::L4Move,
        ClaimId::L5Clique,
        ClaimId::L6AddEdge,
        ClaimId::T1Max,
        ClaimId::T2Min,
        ClaimId::T3Cyclomatic,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ClaimId::L1Pendant => "L1_PENDANT",
            ClaimId::L2Nonpendant => "L2_NONPENDANT",
            ClaimId::L3Contract => "L3_CONTRACT",
            ClaimId::L4Move => "L4_MOVE",
            ClaimId::L5Clique => "L5_CLIQUE",
            ClaimId::L6AddEdge => "L6_ADDEDGE",
            ClaimId::T1Max => "T1_MAX",
            ClaimId::T2Min => "T2_MIN",
            ClaimId::T3Cyclomatic => "T3_CYCLOMATIC",
        }
    }

    /// Accepts a full tag like `T1_MAX` or its short prefix `T1`, case
    /// insensitively.
    pub fn parse(s: &str) -> Option<ClaimId> {
        let upper = s.trim().to_ascii_uppercase();
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str() == upper || c.as_str().split('_').next() == Some(upper.as_str()))
    }

    /// The claim itself, spelled out.
    pub fn statement(&self) -> &'static str {
        match self {
            ClaimId::L1Pendant => {
                "every pendant edge of a connected graph of order n has imbalance exactly n - 2"
            }
            ClaimId::L2Nonpendant => {
                "every non-pendant edge of a connected graph of order n has imbalance at most n - 3"
            }
            ClaimId::L3Contract => {
                "contracting a cut edge with both endpoints of degree at least two and appending \
                 a leaf to the merged vertex strictly increases the Mostar index and preserves \
                 the cut-edge count"
            }
            ClaimId::L4Move => {
                "re-attaching a pendant vertex to a non-pendant vertex of degree at least its \
                 current neighbor's strictly increases the Mostar index and preserves the \
                 cut-edge count"
            }
            ClaimId::L5Clique => {
                "in any graph maximizing the Mostar index among connected graphs of order n with \
                 exactly k cut edges, the non-pendant vertices induce a complete subgraph"
            }
            ClaimId::L6AddEdge => {
                "adding an edge to a connected graph never decreases the Mostar index"
            }
            ClaimId::T1Max => {
                "among connected graphs of order n with exactly k cut edges, the Mostar index is \
                 at most k(n-2) + (n-k-1)k, with equality exactly for the clique with k pendant \
                 vertices at one hub"
            }
            ClaimId::T2Min => {
                "among connected graphs of order n with exactly k cut edges, the Mostar index is \
                 at least the sum over i = 1..k of |n - 2(floor((n-k-1)/2) + i)|, attained by \
                 the balanced bridge path"
            }
            ClaimId::T3Cyclomatic => {
                "among connected graphs of order n with exactly k cut edges and cyclomatic \
                 number mu, the Mostar index is at most k(n-2) + k(n-k-1) + mu(n-3), with \
                 equality exactly for the hub triangle construction"
            }
        }
    }
}

impl std::fmt::Display for ClaimId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Verdict levels. `Partial` means the strict form failed only by
/// ties, or a bound held everywhere while its equality characterization
/// did not.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ClaimStatus {
    #[serde(rename = "HOLDS_IN_SCOPE")]
    HoldsInScope,
    #[serde(rename = "REFUTED")]
    Refuted,
    #[serde(rename = "PARTIAL")]
    Partial,
}

impl std::fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ClaimStatus::HoldsInScope => "HOLDS_IN_SCOPE",
            ClaimStatus::Refuted => "REFUTED",
            ClaimStatus::Partial => "PARTIAL",
        })
    }
}

/// One named integer observation inside a counterexample record.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Observation {
    pub name: String,
    pub value: i64,
}

fn obs(name: &str, value: i64) -> Observation {
    Observation {
        name: name.into(),
        value,
    }
}

/// A replayable witness against a claim: decode the graphs, recompute
/// the observed quantities, and the discrepancy reappears.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CounterexampleRecord {
    /// graph6 strings; transforms list before and after.
    pub graphs: Vec<String>,
    pub n: usize,
    pub k: Option<usize>,
    pub mu: Option<usize>,
    pub observed: Vec<Observation>,
    /// The relation the claim asserts at this site.
    pub claimed: String,
    pub note: String,
}

/// Volume counters for one claim's scan.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub struct ClaimStats {
    /// Distinct parameter cells that contained at least one graph.
    pub cells_checked: u64,
    /// Cells in scope with no graphs at all.
    pub cells_empty: u64,
    /// Individual sites inspected: edges, transform applications, or
    /// class members, depending on the claim.
    pub sites_checked: u64,
    pub violations: u64,
    /// Sites where a strict inequality held with equality.
    pub ties: u64,
}

/// Verdict for one component of a compound claim.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SubClaim {
    pub name: String,
    pub status: ClaimStatus,
    pub failing_cells: u64,
}

/// Everything measured for one (n, k[, mu]) cell of a theorem audit.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TheoremCell {
    pub n: usize,
    pub k: usize,
    pub mu: Option<usize>,
    pub class_size_labeled: u64,
    /// Exhaustively computed extremum; absent for empty cells.
    pub truth: Option<u64>,
    pub bound: u64,
    /// Canonical form of the family construction, when the parameters
    /// admit one.
    pub family: Option<String>,
    pub family_mostar: Option<u64>,
    /// Canonical forms of all extremal graphs.
    pub witnesses: Vec<String>,
    pub bound_holds: Option<bool>,
    pub attained: Option<bool>,
    pub witnesses_match_family: Option<bool>,
    /// MAX audit only: every maximizer's non-pendant vertices induce a
    /// complete subgraph.
    pub nonpendant_core_complete: Option<bool>,
    /// MAX audit only: every maximizer's pendant edges share an
    /// endpoint.
    pub pendant_edges_share_hub: Option<bool>,
    pub note: String,
}

/// Final verdict for one claim.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ClaimVerdict {
    pub claim: ClaimId,
    pub statement: String,
    pub scope: String,
    pub status: ClaimStatus,
    pub stats: ClaimStats,
    /// Component verdicts; theorem audits decompose into bound
    /// inequality, attainment, and family characterization.
    pub subclaims: Vec<SubClaim>,
    /// Per-cell measurements; theorem audits only.
    pub cells: Vec<TheoremCell>,
    pub counterexamples: Vec<CounterexampleRecord>,
}

/// Which transform lemma to check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TransformLemma {
    Contract,
    MovePendant,
    AddEdge,
}

impl TransformLemma {
    pub fn claim_id(self) -> ClaimId {
        match self {
            TransformLemma::Contract => ClaimId::L3Contract,
            TransformLemma::MovePendant => ClaimId::L4Move,
            TransformLemma::AddEdge => ClaimId::L6AddEdge,
        }
    }
}

/// Which extremal bound to audit.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TheoremClaim {
    Max,
    Min,
    Cyclomatic,
}

impl TheoremClaim {
    pub fn claim_id(self) -> ClaimId {
        match self {
            TheoremClaim::Max => ClaimId::T1Max,
            TheoremClaim::Min => ClaimId::T2Min,
            TheoremClaim::Cyclomatic => ClaimId::T3Cyclomatic,
        }
    }
}

#[derive(Default)]
struct LemmaAccum {
    cells: BTreeSet<(usize, usize)>,
    first_violation: BTreeMap<(usize, usize), CounterexampleRecord>,
    first_tie: BTreeMap<(usize, usize), CounterexampleRecord>,
    sites: u64,
    violations: u64,
    ties: u64,
}

impl LemmaAccum {
    fn into_verdict(self, claim: ClaimId, scope: String) -> ClaimVerdict {
        let status = if self.violations > 0 {
            ClaimStatus::Refuted
        } else if self.ties > 0 {
            ClaimStatus::Partial
        } else {
            ClaimStatus::HoldsInScope
        };
        let mut counterexamples: Vec<CounterexampleRecord> =
            self.first_violation.into_values().collect();
        if status == ClaimStatus::Partial {
            counterexamples.extend(self.first_tie.into_values());
        }
        debug_assert!(status != ClaimStatus::Refuted || !counterexamples.is_empty());
        ClaimVerdict {
            claim,
            statement: claim.statement().into(),
            scope,
            status,
            stats: ClaimStats {
                cells_checked: self.cells.len() as u64,
                cells_empty: 0,
                sites_checked: self.sites,
                violations: self.violations,
                ties: self.ties,
            },
            subclaims: Vec::new(),
            cells: Vec::new(),
            counterexamples,
        }
    }
}

/// Checks the pendant and non-pendant edge imbalance claims over every
/// labeled connected graph with `2 <= n <= n_max`, returning the
/// verdicts in that order.
pub fn verify_edge_bound_lemmas(n_max: usize) -> Result<[ClaimVerdict; 2], GraphError> {
    if !(2..=8).contains(&n_max) {
        return Err(GraphError::OutOfRange(format!(
            "edge lemma scan needs 2 <= n_max <= 8, got {n_max}"
        )));
    }
    let mut l1 = LemmaAccum::default();
    let mut l2 = LemmaAccum::default();
    for n in 2..=n_max {
        enumerate_connected(n, |g| {
            let m = g.size();
            let profile = contribution_profile(g).expect("enumerated graphs are connected");
            for rec in profile {
                let (u, v) = rec.edge;
                let pendant = g.degree(u) == 1 || g.degree(v) == 1;
                let (acc, ok, claimed) = if pendant {
                    (
                        &mut l1,
                        rec.imbalance == n as u64 - 2,
                        "imbalance == n - 2 on a pendant edge",
                    )
                } else {
                    (
                        &mut l2,
                        rec.imbalance <= (n as u64).saturating_sub(3),
                        "imbalance <= n - 3 on a non-pendant edge",
                    )
                };
                acc.sites += 1;
                acc.cells.insert((n, m));
                if !ok {
                    acc.violations += 1;
                    acc.first_violation.entry((n, m)).or_insert_with(|| {
                        CounterexampleRecord {
                            graphs: vec![graph6::encode(g)],
                            n,
                            k: None,
                            mu: None,
                            observed: vec![
                                obs("edge_u", u as i64),
                                obs("edge_v", v as i64),
                                obs("closer_to_u", rec.closer_to_u as i64),
                                obs("closer_to_v", rec.closer_to_v as i64),
                                obs("equidistant", rec.equidistant as i64),
                                obs("imbalance", rec.imbalance as i64),
                                obs("size", m as i64),
                            ],
                            claimed: claimed.into(),
                            note: format!(
                                "edge ({u}, {v}) at order {n}, size {m} has imbalance {}",
                                rec.imbalance
                            ),
                        }
                    });
                }
            }
        })?;
    }
    let scope = |what: &str| {
        format!(
            "every {what} edge of every labeled connected graph with 2 <= n <= {n_max}, \
             cells keyed by (order, size)"
        )
    };
    Ok([
        l1.into_verdict(ClaimId::L1Pendant, scope("pendant")),
        l2.into_verdict(ClaimId::L2Nonpendant, scope("non-pendant")),
    ])
}

/// Applies one transform lemma at every admissible site of every
/// labeled connected graph with `3 <= n <= n_max` and grades the
/// claimed strict increase (for the contraction and pendant-move
/// claims, also cut-edge preservation; for edge addition, mere
/// non-decrease).
pub fn verify_transform_lemma(
    lemma: TransformLemma,
    n_max: usize,
) -> Result<ClaimVerdict, GraphError> {
    if !(3..=7).contains(&n_max) {
        return Err(GraphError::OutOfRange(format!(
            "transform lemma scan needs 3 <= n_max <= 7, got {n_max}"
        )));
    }
    let claim = lemma.claim_id();
    let mut acc = LemmaAccum::default();

    for n in 3..=n_max {
        enumerate_connected(n, |g| {
            let m = g.size();
            let mo_before = mostar_index(g).expect("enumerated graphs are connected");
            let cut_before = g.cut_edge_count().expect("enumerated graphs are connected");

            let mut consider =
                |after: Graph, site_obs: Vec<Observation>, site_note: String| {
                    let mo_after =
                        mostar_index(&after).expect("transforms preserve connectivity");
                    let cut_after =
                        after.cut_edge_count().expect("transforms preserve connectivity");
                    let delta = mo_after as i64 - mo_before as i64;
                    let preserve_cuts = !matches!(lemma, TransformLemma::AddEdge);
                    let cut_broken = preserve_cuts && cut_after != cut_before;

                    acc.sites += 1;
                    acc.cells.insert((n, m));
                    let violated = delta < 0 || cut_broken;
                    if !violated && delta != 0 {
                        return;
                    }
                    let make_record = || {
                        let mut observed = site_obs.clone();
                        observed.extend([
                            obs("mostar_before", mo_before as i64),
                            obs("mostar_after", mo_after as i64),
                            obs("delta", delta),
                            obs("cut_edges_before", cut_before as i64),
                            obs("cut_edges_after", cut_after as i64),
                        ]);
                        let claimed = match lemma {
                            TransformLemma::AddEdge => {
                                "mostar_after >= mostar_before".to_string()
                            }
                            _ => "mostar_after > mostar_before and cut-edge count preserved"
                                .to_string(),
                        };
                        CounterexampleRecord {
                            graphs: vec![graph6::encode(g), graph6::encode(&after)],
                            n,
                            k: None,
                            mu: None,
                            observed,
                            claimed,
                            note: format!(
                                "{site_note}: index {mo_before} -> {mo_after}, \
                                 cut edges {cut_before} -> {cut_after}"
                            ),
                        }
                    };
                    if violated {
                        acc.violations += 1;
                        acc.first_violation.entry((n, m)).or_insert_with(make_record);
                    } else {
                        acc.ties += 1;
                        acc.first_tie.entry((n, m)).or_insert_with(make_record);
                    }
                };

            match lemma {
                TransformLemma::Contract => {
                    for e in g.bridges().expect("enumerated graphs are connected") {
                        let (u, v) = (e.u(), e.v());
                        if g.degree(u) < 2 || g.degree(v) < 2 {
                            continue;
                        }
                        let after = transforms::contract_bridge_append_leaf(g, e)
                            .expect("site filter matches the transform preconditions");
                        consider(
                            after,
                            vec![obs("edge_u", u as i64), obs("edge_v", v as i64)],
                            format!("contracting cut edge ({u}, {v})"),
                        );
                    }
                }
                TransformLemma::MovePendant => {
                    for p in g.pendant_vertices() {
                        let y = g.neighbors(p).next().expect("pendant has a neighbor");
                        let dy = g.degree(y);
                        for x in 0..n {
                            if x == p || x == y || g.degree(x) < 2 || g.degree(x) < dy {
                                continue;
                            }
                            let after = transforms::move_pendant(g, p, x)
                                .expect("site filter matches the transform preconditions");
                            consider(
                                after,
                                vec![
                                    obs("pendant", p as i64),
                                    obs("from", y as i64),
                                    obs("to", x as i64),
                                ],
                                format!("moving pendant {p} from {y} to {x}"),
                            );
                        }
                    }
                }
                TransformLemma::AddEdge => {
                    for v in 0..n {
                        for u in 0..v {
                            if g.has_edge(u, v) {
                                continue;
                            }
                            let after = transforms::add_edge(g, u, v)
                                .expect("site filter matches the transform preconditions");
                            consider(
                                after,
                                vec![obs("added_u", u as i64), obs("added_v", v as i64)],
                                format!("adding edge ({u}, {v})"),
                            );
                        }
                    }
                }
            }
        })?;
    }

    let scope = format!(
        "every admissible site of every labeled connected graph with 3 <= n <= {n_max}, \
         cells keyed by (order, size)"
    );
    Ok(acc.into_verdict(claim, scope))
}

/// Largest conceivable cyclomatic number for connected graphs of order
/// n with exactly k cut edges: all non-cut structure in one clique.
fn mu_ceiling(n: usize, k: usize) -> usize {
    let c = n - k;
    c * (c - 1) / 2 + k + 1 - n
}

fn incomplete_core_pair(g: &Graph) -> Option<(usize, usize)> {
    let core: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= 2).collect();
    for (i, &a) in core.iter().enumerate() {
        for &b in &core[i + 1..] {
            if !g.has_edge(a, b) {
                return Some((a, b));
            }
        }
    }
    None
}

fn pendant_edges_share_endpoint(g: &Graph) -> bool {
    let mut common: Option<u64> = None;
    for p in g.pendant_vertices() {
        let y = g.neighbors(p).next().expect("pendant has a neighbor");
        let edge_mask = (1u64 << p) | (1u64 << y);
        common = Some(common.map_or(edge_mask, |c| c & edge_mask));
    }
    common.is_none_or(|c| c != 0)
}

/// Smallest triangle count whose hub construction lands on the given
/// cyclomatic number, if any.
fn hub_family_for(n: usize, k: usize, mu: usize) -> Option<Graph> {
    for mu_extra in 0..=n / 2 {
        if let Ok(g) = families::hub_triangle_graph(n, k, mu_extra) {
            if g.cyclomatic_number().expect("family graphs are connected") == mu {
                return Some(g);
            }
        }
    }
    None
}

struct TheoremAccum {
    cells: Vec<TheoremCell>,
    records: Vec<CounterexampleRecord>,
    stats: ClaimStats,
    bound_fail: u64,
    attain_fail: u64,
    family_fail: u64,
    // MAX audit only: clique-core claim accumulation.
    l5_sites: u64,
    l5_violations: u64,
    l5_first: BTreeMap<(usize, usize), CounterexampleRecord>,
}

/// Audits one bound claim cell by cell: exhaustive extremum vs formula,
/// witness set vs family construction.
pub fn verify_theorem(
    claim: TheoremClaim,
    n_range: RangeInclusive<usize>,
    k_range: Option<RangeInclusive<usize>>,
    mu_range: Option<RangeInclusive<usize>>,
    workers: usize,
) -> Result<ClaimVerdict, GraphError> {
    Ok(theorem_scan(claim, n_range, k_range, mu_range, workers)?.0)
}

fn theorem_scan(
    claim: TheoremClaim,
    n_range: RangeInclusive<usize>,
    k_range: Option<RangeInclusive<usize>>,
    mu_range: Option<RangeInclusive<usize>>,
    workers: usize,
) -> Result<(ClaimVerdict, Option<ClaimVerdict>), GraphError> {
    if *n_range.end() > 8 {
        return Err(GraphError::OutOfRange(format!(
            "theorem audits are capped at order 8, got n_max = {}",
            n_range.end()
        )));
    }
    if mu_range.is_some() && claim != TheoremClaim::Cyclomatic {
        return Err(GraphError::OutOfRange(
            "a mu range only applies to the cyclomatic audit".into(),
        ));
    }
    let objective = match claim {
        TheoremClaim::Min => Objective::Min,
        _ => Objective::Max,
    };
    let mut acc = TheoremAccum {
        cells: Vec::new(),
        records: Vec::new(),
        stats: ClaimStats::default(),
        bound_fail: 0,
        attain_fail: 0,
        family_fail: 0,
        l5_sites: 0,
        l5_violations: 0,
        l5_first: BTreeMap::new(),
    };

    for n in n_range.clone() {
        if n < 2 {
            continue;
        }
        let k_lo = k_range.as_ref().map_or(1, |r| *r.start()).max(1);
        let k_hi = k_range.as_ref().map_or(n - 1, |r| *r.end()).min(n - 1);
        for k in k_lo..=k_hi {
            match claim {
                TheoremClaim::Cyclomatic => {
                    let top = mu_ceiling(n, k);
                    let mu_lo = mu_range.as_ref().map_or(0, |r| *r.start());
                    let mu_hi = mu_range.as_ref().map_or(top, |r| *r.end()).min(top);
                    for mu in mu_lo..=mu_hi {
                        audit_cell(claim, objective, n, k, Some(mu), workers, &mut acc)?;
                    }
                }
                _ => audit_cell(claim, objective, n, k, None, workers, &mut acc)?,
            }
        }
    }

    let k_desc = match &k_range {
        None => "1 <= k <= n-1".to_string(),
        Some(r) => format!("{} <= k <= {}", r.start(), r.end()),
    };
    let scope = format!(
        "connected graph classes by (order n, cut edges k{}), {} <= n <= {}, {}; objective {}",
        if claim == TheoremClaim::Cyclomatic {
            ", cyclomatic mu"
        } else {
            ""
        },
        n_range.start(),
        n_range.end(),
        k_desc,
        objective,
    );

    let status = if acc.bound_fail > 0 {
        ClaimStatus::Refuted
    } else if acc.attain_fail > 0 || acc.family_fail > 0 {
        ClaimStatus::Partial
    } else {
        ClaimStatus::HoldsInScope
    };
    let sub = |name: &str, failing: u64| SubClaim {
        name: name.into(),
        status: if failing > 0 {
            ClaimStatus::Refuted
        } else {
            ClaimStatus::HoldsInScope
        },
        failing_cells: failing,
    };
    acc.stats.violations = acc.bound_fail;
    let verdict = ClaimVerdict {
        claim: claim.claim_id(),
        statement: claim.claim_id().statement().into(),
        scope: scope.clone(),
        status,
        stats: acc.stats,
        subclaims: vec![
            sub("bound_inequality", acc.bound_fail),
            sub("attainment", acc.attain_fail),
            sub("family_characterization", acc.family_fail),
        ],
        cells: acc.cells,
        counterexamples: acc.records,
    };

    let companion = if claim == TheoremClaim::Max {
        let status = if acc.l5_violations > 0 {
            ClaimStatus::Refuted
        } else {
            ClaimStatus::HoldsInScope
        };
        Some(ClaimVerdict {
            claim: ClaimId::L5Clique,
            statement: ClaimId::L5Clique.statement().into(),
            scope: format!(
                "non-pendant induced subgraphs of every maximizer found in the MAX audit; {scope}"
            ),
            status,
            stats: ClaimStats {
                cells_checked: verdict.stats.cells_checked,
                cells_empty: verdict.stats.cells_empty,
                sites_checked: acc.l5_sites,
                violations: acc.l5_violations,
                ties: 0,
            },
            subclaims: Vec::new(),
            cells: Vec::new(),
            counterexamples: acc.l5_first.into_values().collect(),
        })
    } else {
        None
    };

    Ok((verdict, companion))
}

#[allow(clippy::too_many_arguments)]
fn audit_cell(
    claim: TheoremClaim,
    objective: Objective,
    n: usize,
    k: usize,
    mu: Option<usize>,
    workers: usize,
    acc: &mut TheoremAccum,
) -> Result<(), GraphError> {
    let bound = match claim {
        TheoremClaim::Max => bounds::max_bound(n, k)?,
        TheoremClaim::Min => bounds::min_bound(n, k)?,
        TheoremClaim::Cyclomatic => {
            bounds::cyclomatic_bound(n, k, mu.expect("cyclomatic audit cells carry mu"))?
        }
    };
    let family_graph: Option<Graph> = match claim {
        TheoremClaim::Max => families::complete_with_pendants(n, k).ok(),
        TheoremClaim::Min => families::balanced_bridge_path(n, k).ok(),
        TheoremClaim::Cyclomatic => {
            hub_family_for(n, k, mu.expect("cyclomatic audit cells carry mu"))
        }
    };
    let family = match family_graph.as_ref() {
        Some(g) => Some(canonical_form(g)?),
        None => None,
    };
    let family_mostar = match family_graph.as_ref() {
        Some(g) => Some(mostar_index(g)?),
        None => None,
    };

    let filter = GraphClassFilter {
        n,
        cut_edges: Some(k),
        cyclomatic: mu,
    };
    let dir = match objective {
        Objective::Max => "maximum",
        Objective::Min => "minimum",
    };

    let Some(res) = extremal_search(&filter, objective, workers)? else {
        acc.stats.cells_empty += 1;
        acc.cells.push(TheoremCell {
            n,
            k,
            mu,
            class_size_labeled: 0,
            truth: None,
            bound,
            family,
            family_mostar,
            witnesses: Vec::new(),
            bound_holds: None,
            attained: None,
            witnesses_match_family: None,
            nonpendant_core_complete: None,
            pendant_edges_share_hub: None,
            note: "EMPTY: no connected graphs with these parameters".into(),
        });
        return Ok(());
    };

    acc.stats.cells_checked += 1;
    acc.stats.sites_checked += res.class_size_labeled;
    let truth = res.value;
    let bound_holds = match objective {
        Objective::Max => truth <= bound,
        Objective::Min => truth >= bound,
    };
    let attained = truth == bound;
    let witnesses_match_family = family
        .as_ref()
        .map(|fc| res.witnesses.len() == 1 && res.witnesses[0] == *fc);

    // MAX audits additionally inspect maximizer structure.
    let (core_complete, hub_shared) = if claim == TheoremClaim::Max {
        let mut all_complete = true;
        let mut all_shared = true;
        for w in &res.witnesses {
            let g = graph6::decode(w).expect("canonical forms decode");
            acc.l5_sites += 1;
            if let Some((a, b)) = incomplete_core_pair(&g) {
                all_complete = false;
                acc.l5_violations += 1;
                acc.l5_first.entry((n, k)).or_insert_with(|| CounterexampleRecord {
                    graphs: vec![w.clone()],
                    n,
                    k: Some(k),
                    mu,
                    observed: vec![
                        obs("nonadjacent_u", a as i64),
                        obs("nonadjacent_v", b as i64),
                        obs("maximum", truth as i64),
                    ],
                    claimed: "non-pendant vertices of a maximizer induce a complete subgraph"
                        .into(),
                    note: format!(
                        "maximizer of the (n={n}, k={k}) class has non-adjacent non-pendant \
                         vertices {a} and {b}"
                    ),
                });
            }
            if !pendant_edges_share_endpoint(&g) {
                all_shared = false;
            }
        }
        (Some(all_complete), Some(all_shared))
    } else {
        (None, None)
    };

    let mut note = String::new();
    if !bound_holds {
        note = format!("class {dir} {truth} violates the claimed bound {bound}");
    } else if !attained {
        note = format!("bound {bound} not attained: class {dir} is {truth}");
        if let Some(fm) = family_mostar {
            note.push_str(&format!(
                "; the family construction scores {fm}, which also misses the bound"
            ));
        }
    } else if witnesses_match_family == Some(false) {
        note = "bound attained, but the extremal set differs from the family construction"
            .to_string();
    }
    if family.is_none() {
        if !note.is_empty() {
            note.push_str("; ");
        }
        note.push_str("no family construction exists for these parameters");
    }

    let cell_params = (n, k, mu);
    if !bound_holds {
        acc.bound_fail += 1;
        acc.records.push(CounterexampleRecord {
            graphs: res.witnesses.clone(),
            n: cell_params.0,
            k: Some(cell_params.1),
            mu: cell_params.2,
            observed: vec![
                obs("truth", truth as i64),
                obs("bound", bound as i64),
                obs("class_size_labeled", res.class_size_labeled as i64),
            ],
            claimed: match objective {
                Objective::Max => format!("class maximum <= {bound}"),
                Objective::Min => format!("class minimum >= {bound}"),
            },
            note: note.clone(),
        });
    } else if !attained {
        acc.attain_fail += 1;
        let mut observed = vec![obs("truth", truth as i64), obs("bound", bound as i64)];
        if let Some(fm) = family_mostar {
            observed.push(obs("family_mostar", fm as i64));
        }
        acc.records.push(CounterexampleRecord {
            graphs: res.witnesses.clone(),
            n: cell_params.0,
            k: Some(cell_params.1),
            mu: cell_params.2,
            observed,
            claimed: "the bound is attained in every non-empty class".into(),
            note: note.clone(),
        });
    }
    if attained && witnesses_match_family == Some(false) {
        let mut observed = vec![obs("truth", truth as i64), obs("bound", bound as i64)];
        if let Some(fm) = family_mostar {
            observed.push(obs("family_mostar", fm as i64));
        }
        acc.records.push(CounterexampleRecord {
            graphs: res.witnesses.clone(),
            n: cell_params.0,
            k: Some(cell_params.1),
            mu: cell_params.2,
            observed,
            claimed: "exactly the family construction attains the bound".into(),
            note: format!(
                "extremal canonical forms [{}] differ from the family {}",
                res.witnesses.join(" "),
                family.as_deref().unwrap_or("-")
            ),
        });
    }
    let family_broken = match (&family, family_mostar, witnesses_match_family) {
        (Some(_), Some(fm), matches) => fm != bound || matches == Some(false),
        (None, _, _) => true,
        _ => false,
    };
    if family_broken {
        acc.family_fail += 1;
    }

    acc.cells.push(TheoremCell {
        n,
        k,
        mu,
        class_size_labeled: res.class_size_labeled,
        truth: Some(truth),
        bound,
        family,
        family_mostar,
        witnesses: res.witnesses,
        bound_holds: Some(bound_holds),
        attained: Some(attained),
        witnesses_match_family,
        nonpendant_core_complete: core_complete,
        pendant_edges_share_hub: hub_shared,
        note,
    });
    Ok(())
}

/// What `run_all` should verify and how far.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub claims: Vec<ClaimId>,
    /// Edge imbalance lemmas run over 2..=this (2..=8).
    pub edge_lemma_n_max: usize,
    /// Transform lemmas run over 3..=this (3..=7).
    pub transform_n_max: usize,
    /// Theorem audits run over 4..=this (at most 8).
    pub theorem_n_max: usize,
    /// Cut-edge ceiling for the cyclomatic audit.
    pub t3_k_max: usize,
    /// Worker threads for extremal searches; never affects output.
    pub workers: usize,
}

impl Default for VerifyConfig {
    fn default() -> VerifyConfig {
        VerifyConfig {
            claims: ClaimId::ALL.to_vec(),
            edge_lemma_n_max: 7,
            transform_n_max: 6,
            theorem_n_max: 7,
            t3_k_max: 2,
            workers: 1,
        }
    }
}

/// Lowest order the theorem audits consider; below this every class is
/// degenerate or trivial.
pub const THEOREM_N_MIN: usize = 4;

/// Scope parameters echoed into every report so a reader can tell what
/// a verdict covers. Worker count is deliberately absent: it never
/// changes results.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ReportCaps {
    pub edge_lemma_n_max: usize,
    pub transform_n_max: usize,
    pub theorem_n_min: usize,
    pub theorem_n_max: usize,
    pub t3_k_max: usize,
}

/// Full output of a verification run.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VerificationReport {
    pub tool: String,
    pub version: String,
    pub caps: ReportCaps,
    pub claims: Vec<ClaimId>,
    pub verdicts: Vec<ClaimVerdict>,
}

/// Runs every selected claim and assembles the report. Verdicts are
/// ordered by claim id; repeated runs with the same config produce
/// byte-identical reports.
pub fn run_all(config: &VerifyConfig) -> Result<VerificationReport, GraphError> {
    let mut selected = config.claims.clone();
    selected.sort();
    selected.dedup();
    if selected.is_empty() {
        return Err(GraphError::OutOfRange("no claims selected".into()));
    }
    let workers = config.workers.max(1);

    let mut edge_pair: Option<[ClaimVerdict; 2]> = None;
    let mut max_pair: Option<(ClaimVerdict, ClaimVerdict)> = None;
    let mut verdicts = Vec::with_capacity(selected.len());

    for claim in selected.iter().copied() {
        let verdict = match claim {
            ClaimId::L1Pendant | ClaimId::L2Nonpendant => {
                if edge_pair.is_none() {
                    edge_pair = Some(verify_edge_bound_lemmas(config.edge_lemma_n_max)?);
                }
                let pair = edge_pair.as_ref().expect("just filled");
                if claim == ClaimId::L1Pendant {
                    pair[0].clone()
                } else {
                    pair[1].clone()
                }
            }
            ClaimId::L3Contract => {
                verify_transform_lemma(TransformLemma::Contract, config.transform_n_max)?
            }
            ClaimId::L4Move => {
                verify_transform_lemma(TransformLemma::MovePendant, config.transform_n_max)?
            }
            ClaimId::L6AddEdge => {
                verify_transform_lemma(TransformLemma::AddEdge, config.transform_n_max)?
            }
            ClaimId::T1Max | ClaimId::L5Clique => {
                if max_pair.is_none() {
                    let (t1, l5) = theorem_scan(
                        TheoremClaim::Max,
                        THEOREM_N_MIN..=config.theorem_n_max,
                        None,
                        None,
                        workers,
                    )?;
                    max_pair =
                        Some((t1, l5.expect("the MAX audit always yields the core verdict")));
                }
                let pair = max_pair.as_ref().expect("just filled");
                if claim == ClaimId::T1Max {
                    pair.0.clone()
                } else {
                    pair.1.clone()
                }
            }
            ClaimId::T2Min => verify_theorem(
                TheoremClaim::Min,
                THEOREM_N_MIN..=config.theorem_n_max,
                None,
                None,
                workers,
            )?,
            ClaimId::T3Cyclomatic => verify_theorem(
                TheoremClaim::Cyclomatic,
                THEOREM_N_MIN..=config.theorem_n_max,
                Some(1..=config.t3_k_max),
                None,
                workers,
            )?,
        };
        verdicts.push(verdict);
    }
    verdicts.sort_by_key(|v| v.claim);

    Ok(VerificationReport {
        tool: "mostar-lab".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        caps: ReportCaps {
            edge_lemma_n_max: config.edge_lemma_n_max,
            transform_n_max: config.transform_n_max,
            theorem_n_min: THEOREM_N_MIN,
            theorem_n_max: config.theorem_n_max,
            t3_k_max: config.t3_k_max,
        },
        claims: selected,
        verdicts,
    })
}
