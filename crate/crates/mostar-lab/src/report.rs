//! Rendering of verification reports.
//!
//! Two formats, one contract: rendering the same report twice yields
//! byte-identical text, so diffs between runs always reflect real
//! differences in the verdicts. The machine format is pretty-printed
//! JSON; the table format is a plain-text digest with one summary row
//! per claim followed by a detail section each.

use crate::verify::{ClaimVerdict, CounterexampleRecord, VerificationReport};
use std::fmt::Write;

/// Serializes the whole report as pretty-printed JSON, newline
/// terminated.
pub fn render_machine(report: &VerificationReport) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report types always serialize");
    out.push('\n');
    out
}

fn fmt_opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    match v {
        Some(x) => x.to_string(),
        None => "-".into(),
    }
}

fn fmt_flag(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "NO",
        None => "-",
    }
}

fn push_record(out: &mut String, rec: &CounterexampleRecord) {
    let params = match (rec.k, rec.mu) {
        (Some(k), Some(mu)) => format!("n={} k={} mu={}", rec.n, k, mu),
        (Some(k), None) => format!("n={} k={}", rec.n, k),
        _ => format!("n={}", rec.n),
    };
    let observed = rec
        .observed
        .iter()
        .map(|o| format!("{}={}", o.name, o.value))
        .collect::<Vec<_>>()
        .join(" ");
    let _ = writeln!(out, "  [{params}] graphs: {}", rec.graphs.join(" "));
    let _ = writeln!(out, "      observed: {observed}");
    let _ = writeln!(out, "      claimed:  {}", rec.claimed);
    let _ = writeln!(out, "      note:     {}", rec.note);
}

fn push_verdict(out: &mut String, v: &ClaimVerdict) {
    let _ = writeln!(out, "== {} : {} ==", v.claim, v.status);
    let _ = writeln!(out, "claim: {}", v.statement);
    let _ = writeln!(out, "scope: {}", v.scope);
    let _ = writeln!(
        out,
        "checked {} cells ({} empty), {} sites; {} violations, {} ties",
        v.stats.cells_checked,
        v.stats.cells_empty,
        v.stats.sites_checked,
        v.stats.violations,
        v.stats.ties
    );
    if !v.subclaims.is_empty() {
        let _ = writeln!(out, "subclaims:");
        for s in &v.subclaims {
            let _ = writeln!(
                out,
                "  {:<26} {:<14} failing cells: {}",
                s.name, s.status, s.failing_cells
            );
        }
    }
    if !v.cells.is_empty() {
        let _ = writeln!(
            out,
            "  {:>2} {:>2} {:>3} {:>10} {:>6} {:>6} {:>5} {:>8} {:>6}  witnesses",
            "n", "k", "mu", "class", "bound", "truth", "holds", "attained", "family"
        );
        for c in &v.cells {
            let _ = writeln!(
                out,
                "  {:>2} {:>2} {:>3} {:>10} {:>6} {:>6} {:>5} {:>8} {:>6}  {}",
                c.n,
                c.k,
                fmt_opt(&c.mu),
                c.class_size_labeled,
                c.bound,
                fmt_opt(&c.truth),
                fmt_flag(c.bound_holds),
                fmt_flag(c.attained),
                fmt_flag(c.witnesses_match_family),
                if c.witnesses.is_empty() {
                    "-".to_string()
                } else {
                    c.witnesses.join(" ")
                }
            );
            if !c.note.is_empty() {
                let _ = writeln!(out, "      note: {}", c.note);
            }
        }
    }
    if v.counterexamples.is_empty() {
        let _ = writeln!(out, "counterexamples: none");
    } else {
        let _ = writeln!(out, "counterexamples ({}):", v.counterexamples.len());
        for rec in &v.counterexamples {
            push_record(out, rec);
        }
    }
    out.push('\n');
}

/// Renders the plain-text digest: header, summary table, then one
/// detail section per claim in report order.
pub fn render_table(report: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} verification report v{}", report.tool, report.version);
    let _ = writeln!(
        out,
        "scope: edge lemmas n <= {}, transform lemmas n <= {}, theorem audits {} <= n <= {}, \
         cyclomatic audit k <= {}",
        report.caps.edge_lemma_n_max,
        report.caps.transform_n_max,
        report.caps.theorem_n_min,
        report.caps.theorem_n_max,
        report.caps.t3_k_max
    );
    out.push('\n');
    let _ = writeln!(
        out,
        "{:<16} {:<14} {:>6} {:>6} {:>10} {:>10} {:>8}",
        "claim", "status", "cells", "empty", "sites", "violations", "ties"
    );
    for v in &report.verdicts {
        let _ = writeln!(
            out,
            "{:<16} {:<14} {:>6} {:>6} {:>10} {:>10} {:>8}",
            v.claim.as_str(),
            v.status.to_string(),
            v.stats.cells_checked,
            v.stats.cells_empty,
            v.stats.sites_checked,
            v.stats.violations,
            v.stats.ties
        );
    }
    out.push('\n');
    for v in &report.verdicts {
        push_verdict(&mut out, v);
    }
    out
}
