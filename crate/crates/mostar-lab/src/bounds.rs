//! Closed-form bound evaluators for the Mostar index over connected
//! graphs classified by cut-edge count k and, for the third bound, the
//! cyclomatic number.
//!
//! These functions only evaluate formulas. Whether a formula really
//! bounds the class, and whether it is attained, is decided by the
//! verification layer through exhaustive search; nothing here asserts
//! extremality.

use crate::error::GraphError;
use serde::Serialize;

/// Which claimed bound a value instantiates.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum BoundKind {
    /// Claimed maximum for connected graphs with k cut edges.
    #[serde(rename = "T1_MAX")]
    Max,
    /// Claimed minimum for connected graphs with k cut edges.
    #[serde(rename = "T2_MIN")]
    Min,
    /// Claimed maximum refined by the cyclomatic number.
    #[serde(rename = "T3_CYCLOMATIC")]
    Cyclomatic,
}

/// One evaluated bound with the parameters that produced it.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct BoundValue {
    pub kind: BoundKind,
    pub n: usize,
    pub k: usize,
    pub mu: Option<usize>,
    pub value: u64,
}

fn check_n_k(name: &str, n: usize, k: usize, n_min: usize) -> Result<(), GraphError> {
    if n < n_min || k < 1 || k > n - 1 {
        return Err(GraphError::OutOfRange(format!(
            "{name} needs n >= {n_min} and 1 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    Ok(())
}

/// k(n-2) + (n-k-1)k, the claimed maximum Mostar index over connected
/// graphs of order n with exactly k cut edges.
pub fn max_bound(n: usize, k: usize) -> Result<u64, GraphError> {
    check_n_k("max_bound", n, k, 2)?;
    let (n, k) = (n as u64, k as u64);
    Ok(k * (n - 2) + (n - k - 1) * k)
}

/// Sum over i = 1..=k of |n - 2(floor((n-k-1)/2) + i)|, the claimed
/// minimum over the same class: the contributions of k cut edges laid
/// out as evenly as possible.
pub fn min_bound(n: usize, k: usize) -> Result<u64, GraphError> {
    check_n_k("min_bound", n, k, 2)?;
    let (n, k) = (n as i64, k as i64);
    let base = (n - k - 1) / 2;
    Ok((1..=k).map(|i| (n - 2 * (base + i)).unsigned_abs()).sum())
}

/// k(n-2) + k(n-k-1) + mu(n-3), the claimed maximum refined by the
/// cyclomatic number mu.
pub fn cyclomatic_bound(n: usize, k: usize, mu: usize) -> Result<u64, GraphError> {
    check_n_k("cyclomatic_bound", n, k, 3)?;
    let (n, k, mu) = (n as u64, k as u64, mu as u64);
    Ok(k * (n - 2) + k * (n - k - 1) + mu * (n - 3))
}

/// Evaluates the named bound into a [`BoundValue`]. `mu` is required
/// exactly for the cyclomatic bound.
pub fn evaluate(kind: BoundKind, n: usize, k: usize, mu: Option<usize>) -> Result<BoundValue, GraphError> {
    let value = match (kind, mu) {
        (BoundKind::Max, None) => max_bound(n, k)?,
        (BoundKind::Min, None) => min_bound(n, k)?,
        (BoundKind::Cyclomatic, Some(mu)) => cyclomatic_bound(n, k, mu)?,
        (BoundKind::Cyclomatic, None) => {
            return Err(GraphError::OutOfRange(
                "cyclomatic bound needs mu".into(),
            ))
        }
        (_, Some(_)) => {
            return Err(GraphError::OutOfRange(
                "mu only applies to the cyclomatic bound".into(),
            ))
        }
    };
    Ok(BoundValue { kind, n, k, mu, value })
}
