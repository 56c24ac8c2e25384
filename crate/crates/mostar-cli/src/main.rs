//! Command-line front end for the Mostar index laboratory.
//!
//! Exit-code policy: a refuted claim or an empty graph class is a
//! successful run; nonzero exits are reserved for operational failures
//! such as bad arguments, unreadable input, or unwritable output. All
//! numeric output is exact integers.

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use mostar_lab::enumerate::{extremal_search, enumerate_class, GraphClassFilter, Objective};
use mostar_lab::families::FamilySpec;
use mostar_lab::report::{render_machine, render_table};
use mostar_lab::verify::{run_all, ClaimId, VerifyConfig};
use mostar_lab::{bounds, graph6, mostar};
use serde_json::json;
use std::io::Read;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "mostar",
    version,
    about = "Mostar index laboratory: exact computation, extremal families, bounds, \
             and exhaustive claim verification on small connected graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Mostar index of graph6-encoded connected graphs.
    Compute {
        /// File with one graph6 string per line; standard input when absent.
        input: Option<PathBuf>,
        /// Also print the per-edge contribution profile.
        #[arg(long)]
        edges: bool,
        /// Output format: aligned text or one JSON object per line.
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Build a family member from a spec like "family=path,n=6" and
    /// print its measured invariants.
    Construct {
        /// Spec string: family=<name>,n=<order>[,k=<cut edges>][,mu=<extra triangles>].
        spec: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Evaluate the closed-form bounds at the given parameters.
    Bounds {
        /// Order.
        #[arg(long)]
        n: usize,
        /// Exact cut-edge count.
        #[arg(long)]
        k: usize,
        /// Cyclomatic number; adds the refined upper bound.
        #[arg(long)]
        mu: Option<usize>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Enumerate a class of connected graphs; count it, or search for
    /// an extremal Mostar index.
    Enumerate {
        /// Order (capped; MOSTAR_MAX_N=8 raises the cap to 8).
        #[arg(long)]
        n: usize,
        /// Keep only graphs with exactly this many cut edges.
        #[arg(long)]
        k: Option<usize>,
        /// Keep only graphs with exactly this cyclomatic number.
        #[arg(long)]
        mu: Option<usize>,
        /// max or min; without it the class is only counted.
        #[arg(long)]
        objective: Option<Objective>,
        /// Worker threads; never affects the result.
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Check every claim in the catalogue against exhaustive
    /// enumeration and emit a verdict report. A refuted claim still
    /// exits 0; the report is the product.
    Verify {
        /// "all" or a comma-separated list like "L1,L6,T1_MAX".
        #[arg(long, default_value = "all")]
        claims: String,
        /// Cap every scan at this order (3 up to the enumeration cap).
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Write the report to a file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads; never affects the report.
        #[arg(long)]
        workers: Option<usize>,
    },
}

/// Hard order cap for enumeration-backed commands: 7 by default, 8
/// when MOSTAR_MAX_N=8 opts in to the slowest scans.
fn enumeration_cap() -> anyhow::Result<usize> {
    match std::env::var("MOSTAR_MAX_N") {
        Err(std::env::VarError::NotPresent) => Ok(7),
        Err(e) => bail!("MOSTAR_MAX_N: {e}"),
        Ok(raw) => {
            let value: usize = raw
                .parse()
                .with_context(|| format!("MOSTAR_MAX_N must be an integer, got {raw:?}"))?;
            if value > 8 {
                bail!("MOSTAR_MAX_N cannot exceed 8, got {value}");
            }
            Ok(value.max(7))
        }
    }
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |p| p.get())
}

fn cmd_compute(input: Option<PathBuf>, edges: bool, format: Format) -> anyhow::Result<()> {
    let text = match &input {
        Some(path) => std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .lock()
                .read_to_string(&mut buf)
                .context("cannot read standard input")?;
            buf
        }
    };
    let mut ok = 0u64;
    let mut failed = 0u64;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let outcome = graph6::decode(line)
            .map_err(|e| e.to_string())
            .and_then(|g| {
                let mo = mostar::mostar_index(&g).map_err(|e| e.to_string())?;
                let profile = if edges {
                    Some(mostar::contribution_profile(&g).map_err(|e| e.to_string())?)
                } else {
                    None
                };
                Ok((g, mo, profile))
            });
        match outcome {
            Ok((g, mo, profile)) => {
                ok += 1;
                match format {
                    Format::Machine => {
                        let mut record = json!({
                            "graph6": line,
                            "n": g.order(),
                            "m": g.size(),
                            "mostar": mo,
                        });
                        if let Some(p) = &profile {
                            record["edges"] = serde_json::to_value(p)?;
                        }
                        println!("{record}");
                    }
                    Format::Table => {
                        println!("{line}  n={} m={} mostar={mo}", g.order(), g.size());
                        if let Some(p) = &profile {
                            for rec in p {
                                println!(
                                    "  ({}, {}): closer_to_u={} closer_to_v={} \
                                     equidistant={} imbalance={}",
                                    rec.edge.0,
                                    rec.edge.1,
                                    rec.closer_to_u,
                                    rec.closer_to_v,
                                    rec.equidistant,
                                    rec.imbalance
                                );
                            }
                        }
                    }
                }
            }
            Err(msg) => {
                failed += 1;
                match format {
                    Format::Machine => println!("{}", json!({ "graph6": line, "error": msg })),
                    Format::Table => println!("{line}  error: {msg}"),
                }
            }
        }
    }
    if ok == 0 && failed > 0 {
        bail!("no input line produced a result ({failed} failed)");
    }
    Ok(())
}

fn cmd_construct(spec: &str, format: Format) -> anyhow::Result<()> {
    let spec: FamilySpec = spec.parse().map_err(|e| anyhow::anyhow!("{e}"))?;
    let g = spec.build()?;
    // Every invariant below is measured on the built graph, not taken
    // from a formula.
    let code = graph6::encode(&g);
    let cut_edges = g.cut_edge_count()?;
    let cyclomatic = g.cyclomatic_number()?;
    let mo = mostar::mostar_index(&g)?;
    match format {
        Format::Machine => println!(
            "{}",
            json!({
                "family": spec.family.to_string(),
                "graph6": code,
                "n": g.order(),
                "m": g.size(),
                "cut_edges": cut_edges,
                "cyclomatic": cyclomatic,
                "mostar": mo,
            })
        ),
        Format::Table => {
            println!("graph6: {code}");
            println!(
                "n={} m={} cut_edges={cut_edges} cyclomatic={cyclomatic} mostar={mo}",
                g.order(),
                g.size()
            );
        }
    }
    Ok(())
}

fn cmd_bounds(n: usize, k: usize, mu: Option<usize>, format: Format) -> anyhow::Result<()> {
    let max = bounds::max_bound(n, k)?;
    let min = bounds::min_bound(n, k)?;
    let cyc = match mu {
        Some(mu) => Some(bounds::cyclomatic_bound(n, k, mu)?),
        None => None,
    };
    match format {
        Format::Machine => {
            let mut record = json!({ "n": n, "k": k, "max_bound": max, "min_bound": min });
            if let (Some(mu), Some(cyc)) = (mu, cyc) {
                record["mu"] = json!(mu);
                record["cyclomatic_bound"] = json!(cyc);
            }
            println!("{record}");
        }
        Format::Table => {
            println!("n={n} k={k}");
            println!("max bound: {max}");
            println!("min bound: {min}");
            if let (Some(mu), Some(cyc)) = (mu, cyc) {
                println!("cyclomatic bound (mu={mu}): {cyc}");
            }
        }
    }
    Ok(())
}

fn cmd_enumerate(
    n: usize,
    k: Option<usize>,
    mu: Option<usize>,
    objective: Option<Objective>,
    workers: Option<usize>,
    format: Format,
) -> anyhow::Result<()> {
    let cap = enumeration_cap()?;
    if n == 0 || n > cap {
        bail!("enumeration needs 1 <= n <= {cap}, got {n}");
    }
    let filter = GraphClassFilter {
        n,
        cut_edges: k,
        cyclomatic: mu,
    };
    let class = |sep: &str| {
        let mut s = format!("n={n}");
        if let Some(k) = k {
            s.push_str(&format!("{sep}k={k}"));
        }
        if let Some(mu) = mu {
            s.push_str(&format!("{sep}mu={mu}"));
        }
        s
    };
    match objective {
        None => {
            let count = enumerate_class(&filter, |_| {})?;
            match format {
                Format::Machine => println!(
                    "{}",
                    json!({ "n": n, "k": k, "mu": mu, "class_size_labeled": count })
                ),
                Format::Table => {
                    println!("{}: {count} labeled connected graphs", class(" "))
                }
            }
        }
        Some(objective) => {
            let workers = workers.unwrap_or_else(default_workers);
            match extremal_search(&filter, objective, workers)? {
                None => match format {
                    Format::Machine => println!(
                        "{}",
                        json!({ "n": n, "k": k, "mu": mu, "class_size_labeled": 0 })
                    ),
                    Format::Table => println!("{}: empty class", class(" ")),
                },
                Some(res) => match format {
                    Format::Machine => {
                        let mut record = serde_json::to_value(&res)?;
                        record["n"] = json!(n);
                        record["k"] = json!(k);
                        record["mu"] = json!(mu);
                        println!("{record}");
                    }
                    Format::Table => {
                        println!("{} objective={objective}", class(" "));
                        println!("value: {}", res.value);
                        println!("labeled class size: {}", res.class_size_labeled);
                        println!("witnesses (canonical graph6): {}", res.witnesses.join(" "));
                    }
                },
            }
        }
    }
    Ok(())
}

fn parse_claims(raw: &str) -> anyhow::Result<Vec<ClaimId>> {
    if raw.trim().eq_ignore_ascii_case("all") {
        return Ok(ClaimId::ALL.to_vec());
    }
    let mut claims = Vec::new();
    for part in raw.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        match ClaimId::parse(part) {
            Some(c) => claims.push(c),
            None => bail!(
                "unknown claim {part:?}; use \"all\" or tags like L1..L6, T1_MAX, T2_MIN, \
                 T3_CYCLOMATIC"
            ),
        }
    }
    if claims.is_empty() {
        bail!("no claims selected");
    }
    Ok(claims)
}

fn cmd_verify(
    claims: &str,
    max_n: Option<usize>,
    format: Format,
    out: Option<PathBuf>,
    workers: Option<usize>,
) -> anyhow::Result<()> {
    let cap = enumeration_cap()?;
    let mut config = VerifyConfig {
        claims: parse_claims(claims)?,
        workers: workers.unwrap_or_else(default_workers),
        ..VerifyConfig::default()
    };
    if let Some(n) = max_n {
        if !(3..=cap).contains(&n) {
            bail!("--max-n must lie in 3..={cap}, got {n}");
        }
        config.edge_lemma_n_max = n;
        config.transform_n_max = n.min(7);
        config.theorem_n_max = n;
    }
    let report = run_all(&config)?;
    let rendered = match format {
        Format::Machine => render_machine(&report),
        Format::Table => render_table(&report),
    };
    match out {
        Some(path) => std::fs::write(&path, rendered)
            .with_context(|| format!("cannot write report to {}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn main() -> anyhow::Result<()> {
    match Cli::parse().command {
        Command::Compute {
            input,
            edges,
            format,
        } => cmd_compute(input, edges, format),
        Command::Construct { spec, format } => cmd_construct(&spec, format),
        Command::Bounds { n, k, mu, format } => cmd_bounds(n, k, mu, format),
        Command::Enumerate {
            n,
            k,
            mu,
            objective,
            workers,
            format,
        } => cmd_enumerate(n, k, mu, objective, workers, format),
        Command::Verify {
            claims,
            max_n,
            format,
            out,
            workers,
        } => cmd_verify(&claims, max_n, format, out, workers),
    }
}
