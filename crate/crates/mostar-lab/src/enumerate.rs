//! Exhaustive enumeration of labeled connected graphs of small order,
//! class filtering by cut-edge count and cyclomatic number, and
//! deterministic extremal search.
//!
//! Enumeration walks every subset of the n(n-1)/2 vertex pairs in
//! increasing mask order; bit i of a mask is pair i in the column order
//! (0,1), (0,2), (1,2), (0,3), ... that graph6 uses. The walk is
//! incremental: consecutive masks differ in a couple of bits, so the
//! adjacency rows are patched rather than rebuilt.
//!
//! Extremal search may split the mask range across threads. The merge
//! is a pure extremum plus a set union of witnesses reduced to
//! canonical form, so the result is byte-for-byte independent of the
//! worker count or the partition boundaries.

use crate::error::GraphError;
use crate::graph::{connected_rows, for_each_bridge, Graph};
use crate::graph6;
use crate::mostar::mostar_index;
use serde::Serialize;
use std::collections::{BTreeSet, HashSet};

/// Enumeration is capped well below the 64-vertex graph cap: the mask
/// space doubles with every extra vertex pair.
pub const ENUM_MAX_ORDER: usize = 8;

/// Restriction of the connected graphs of order `n` by cut-edge count
/// and/or cyclomatic number. Setting both pins the size to
/// n - 1 + cyclomatic.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GraphClassFilter {
    pub n: usize,
    pub cut_edges: Option<usize>,
    pub cyclomatic: Option<usize>,
}

impl GraphClassFilter {
    pub fn connected(n: usize) -> GraphClassFilter {
        GraphClassFilter {
            n,
            cut_edges: None,
            cyclomatic: None,
        }
    }
}

/// Search direction.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Objective {
    #[serde(rename = "MAX")]
    Max,
    #[serde(rename = "MIN")]
    Min,
}

impl std::fmt::Display for Objective {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Objective::Max => "MAX",
            Objective::Min => "MIN",
        })
    }
}

impl std::str::FromStr for Objective {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Objective, GraphError> {
        match s.to_ascii_lowercase().as_str() {
            "max" => Ok(Objective::Max),
            "min" => Ok(Objective::Min),
            other => Err(GraphError::OutOfRange(format!(
                "objective must be max or min, got {other:?}"
            ))),
        }
    }
}

/// Outcome of an extremal search over a non-empty class.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ExtremalResult {
    pub objective: Objective,
    /// The extremal Mostar index over the class.
    pub value: u64,
    /// Canonical graph6 forms of every isomorphism class attaining the
    /// value, sorted; never empty.
    pub witnesses: Vec<String>,
    /// Number of labeled graphs in the class.
    pub class_size_labeled: u64,
}

/// Vertex pairs in column order; pair (u, v) with u < v sits at index
/// v(v-1)/2 + u.
fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for v in 1..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    pairs
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if !(1..=ENUM_MAX_ORDER).contains(&n) {
        return Err(GraphError::OutOfRange(format!(
            "enumeration supports 1 <= n <= {ENUM_MAX_ORDER}, got {n}"
        )));
    }
    Ok(())
}

/// Walks masks `lo..hi`, patching `rows` incrementally, and calls
/// `body` for each connected graph's rows.
fn walk_connected(
    n: usize,
    pairs: &[(usize, usize)],
    lo: u64,
    hi: u64,
    mut body: impl FnMut(u64, &[u64]),
) {
    let mut rows = [0u64; ENUM_MAX_ORDER];
    let mut current: u64 = 0;
    for mask in lo..hi {
        let mut diff = mask ^ current;
        while diff != 0 {
            let b = diff.trailing_zeros() as usize;
            diff &= diff - 1;
            let (u, v) = pairs[b];
            rows[u] ^= 1 << v;
            rows[v] ^= 1 << u;
        }
        current = mask;
        if connected_rows(&rows[..n]) {
            body(mask, &rows[..n]);
        }
    }
}

/// Calls `visit` with every labeled connected graph on `n` vertices, in
/// increasing mask order, and returns how many there were.
pub fn enumerate_connected(
    n: usize,
    mut visit: impl FnMut(&Graph),
) -> Result<u64, GraphError> {
    check_order(n)?;
    let pairs = pair_list(n);
    let mut count = 0u64;
    walk_connected(n, &pairs, 0, 1u64 << pairs.len(), |_, rows| {
        count += 1;
        visit(&Graph::from_rows(n, rows));
    });
    Ok(count)
}

fn rows_match_filter(filter: &GraphClassFilter, mask: u64, rows: &[u64]) -> bool {
    if let Some(mu) = filter.cyclomatic {
        if mask.count_ones() as usize != filter.n - 1 + mu {
            return false;
        }
    }
    if let Some(k) = filter.cut_edges {
        let mut bridges = 0usize;
        for_each_bridge(rows, |_, _| bridges += 1);
        if bridges != k {
            return false;
        }
    }
    true
}

/// Calls `visit` with every labeled connected graph matching the
/// filter, in increasing mask order, and returns the class size.
pub fn enumerate_class(
    filter: &GraphClassFilter,
    mut visit: impl FnMut(&Graph),
) -> Result<u64, GraphError> {
    check_order(filter.n)?;
    let pairs = pair_list(filter.n);
    let mut count = 0u64;
    walk_connected(filter.n, &pairs, 0, 1u64 << pairs.len(), |mask, rows| {
        if rows_match_filter(filter, mask, rows) {
            count += 1;
            visit(&Graph::from_rows(filter.n, rows));
        }
    });
    Ok(count)
}

struct Partial {
    count: u64,
    best: Option<u64>,
    masks: Vec<u64>,
}

/// Finds the extremal Mostar index over a graph class, with the set of
/// attaining isomorphism classes as canonical graph6 strings.
///
/// `workers` threads split the mask range; any worker count yields the
/// identical result. An empty class returns `Ok(None)`, which is a
/// legitimate datum and not an error.
pub fn extremal_search(
    filter: &GraphClassFilter,
    objective: Objective,
    workers: usize,
) -> Result<Option<ExtremalResult>, GraphError> {
    check_order(filter.n)?;
    let n = filter.n;
    let pairs = pair_list(n);
    let total: u64 = 1u64 << pairs.len();

    let scan = |lo: u64, hi: u64| -> Partial {
        let mut part = Partial {
            count: 0,
            best: None,
            masks: Vec::new(),
        };
        walk_connected(n, &pairs, lo, hi, |mask, rows| {
            if !rows_match_filter(filter, mask, rows) {
                return;
            }
            part.count += 1;
            let g = Graph::from_rows(n, rows);
            let mo = mostar_index(&g).expect("enumerated graphs are connected");
            let better = match (part.best, objective) {
                (None, _) => true,
                (Some(b), Objective::Max) => mo > b,
                (Some(b), Objective::Min) => mo < b,
            };
            if better {
                part.best = Some(mo);
                part.masks.clear();
                part.masks.push(mask);
            } else if part.best == Some(mo) {
                part.masks.push(mask);
            }
        });
        part
    };

    let workers = workers.clamp(1, 64) as u64;
    let partials: Vec<Partial> = if workers == 1 || total < 1024 {
        vec![scan(0, total)]
    } else {
        let chunk = total.div_ceil(workers);
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let lo = w * chunk;
                    let hi = total.min(lo + chunk);
                    let scan = &scan;
                    s.spawn(move || scan(lo, hi.max(lo)))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("scan worker panicked"))
                .collect()
        })
    };

    let mut count = 0u64;
    let mut best: Option<u64> = None;
    for p in &partials {
        count += p.count;
        best = match (best, p.best) {
            (None, b) => b,
            (b, None) => b,
            (Some(a), Some(b)) => Some(match objective {
                Objective::Max => a.max(b),
                Objective::Min => a.min(b),
            }),
        };
    }
    let Some(value) = best else {
        return Ok(None);
    };
    let winning = partials
        .iter()
        .filter(|p| p.best == Some(value))
        .flat_map(|p| p.masks.iter().copied());
    let witnesses = canonical_set(n, &pairs, winning);
    Ok(Some(ExtremalResult {
        objective,
        value,
        witnesses,
        class_size_labeled: count,
    }))
}

/// All permutations of 0..n by Heap's algorithm.
fn all_permutations(n: usize) -> Vec<[usize; ENUM_MAX_ORDER]> {
    let mut perm = [0usize; ENUM_MAX_ORDER];
    for (i, p) in perm.iter_mut().enumerate() {
        *p = i;
    }
    let mut out = vec![perm];
    let mut c = [0usize; ENUM_MAX_ORDER];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            out.push(perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn mask_of_permuted(mask: u64, perm: &[usize], pairs: &[(usize, usize)]) -> u64 {
    let mut out = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let b = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (u, v) = pairs[b];
        let (a, b2) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
        out |= 1 << (b2 * (b2 - 1) / 2 + a);
    }
    out
}

/// Reduces a set of labeled witness masks to the sorted list of
/// distinct canonical forms. Marking the whole permutation orbit of
/// each new representative keeps the cost proportional to the number
/// of isomorphism classes, not the number of labeled witnesses.
fn canonical_set(
    n: usize,
    pairs: &[(usize, usize)],
    masks: impl Iterator<Item = u64>,
) -> Vec<String> {
    let perms = all_permutations(n);
    let mut seen: HashSet<u64> = HashSet::new();
    let mut out: BTreeSet<String> = BTreeSet::new();
    for mask in masks {
        if seen.contains(&mask) {
            continue;
        }
        let mut rows = [0u64; ENUM_MAX_ORDER];
        apply_mask(mask, pairs, &mut rows);
        let g = Graph::from_rows(n, &rows[..n]);
        out.insert(canonical_form(&g).expect("order is within the enumeration cap"));
        for perm in &perms {
            seen.insert(mask_of_permuted(mask, &perm[..n], pairs));
        }
    }
    out.into_iter().collect()
}

fn apply_mask(mask: u64, pairs: &[(usize, usize)], rows: &mut [u64; ENUM_MAX_ORDER]) {
    let mut rest = mask;
    while rest != 0 {
        let b = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (u, v) = pairs[b];
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
}

/// Canonical form: the lexicographically smallest graph6 encoding over
/// all vertex relabelings. Quadratic in n! and therefore capped at
/// order 8 like the rest of this module.
pub fn canonical_form(g: &Graph) -> Result<String, GraphError> {
    let n = g.order();
    check_order(n)?;
    let pairs = pair_list(n);
    let nbits = pairs.len();
    let rows = g.rows();

    // Packing the upper triangle with the first pair in the most
    // significant bit makes numeric order equal graph6 string order.
    let pack = |perm: &[usize; ENUM_MAX_ORDER]| -> u64 {
        let mut value = 0u64;
        for (idx, &(u, v)) in pairs.iter().enumerate() {
            let bit = rows[perm[u]] >> perm[v] & 1;
            value |= bit << (nbits - 1 - idx);
        }
        value
    };

    let mut perm = [0usize; ENUM_MAX_ORDER];
    for (i, p) in perm.iter_mut().enumerate() {
        *p = i;
    }
    let mut best = pack(&perm);
    let mut c = [0usize; ENUM_MAX_ORDER];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(pack(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }

    let mut rows = [0u64; ENUM_MAX_ORDER];
    let mut mask = 0u64;
    for idx in 0..nbits {
        if best >> (nbits - 1 - idx) & 1 == 1 {
            mask |= 1 << idx;
        }
    }
    apply_mask(mask, &pairs, &mut rows);
    Ok(graph6::encode(&Graph::from_rows(n, &rows[..n])))
}

/// Isomorphism test by canonical form comparison. Differing orders
/// compare unequal rather than erroring; equal orders above the
/// enumeration cap are out of range.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, GraphError> {
    if a.order() != b.order() {
        return Ok(false);
    }
    if a.size() != b.size() {
        check_order(a.order())?;
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
