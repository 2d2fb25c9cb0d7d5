//! `berge` — command-line surface for the Berge-path Turán toolkit.
//!
//! Exit codes: 0 success / found / proved / all matched; 1 not found or
//! formula-oracle mismatch; 2 invalid parameters or malformed input;
//! 3 budget exhausted (oracle) or inconclusive without mismatch (verify).

use std::path::PathBuf;
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use berge_core::{
    check_good_set_disjunction, find_berge_cycle_with, find_berge_path_with, find_good_sets,
    format, graph_kr_oracle, redblue_g_oracle, turan_formula_detailed, turan_oracle, verify_range,
    Budget, FormulaRegime, OracleOptions, OracleStatus, SearchOutcome, TuranParams, VerifyRegime,
};

const SCHEMA_VERSION: u32 = 1;

const EXIT_OK: i32 = 0;
const EXIT_NOT_FOUND: i32 = 1;
const EXIT_MISMATCH: i32 = 1;
const EXIT_INVALID: i32 = 2;
const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "berge",
    version,
    about = "Exact Turán numbers for Berge paths: formulas, constructions, detection, oracles"
)]
struct Cli {
    /// Emit the machine-readable JSON report instead of human output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the closed-form extremal value for the given parameters.
    Formula {
        #[arg(short, long)]
        n: u64,
        #[arg(short, long)]
        r: u64,
        #[arg(short, long)]
        k: u64,
    },
    /// Emit an extremal construction (and self-check its freeness).
    Construct {
        #[arg(short, long)]
        n: u64,
        #[arg(short, long)]
        r: u64,
        #[arg(short, long)]
        k: u64,
        /// Output file for the hypergraph text format; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Search a hypergraph file for a Berge path or cycle of length k.
    Detect {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = DetectKind::Path)]
        kind: DetectKind,
    },
    /// List good sets of a hypergraph and check the structural disjunction.
    Goodsets {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
    },
    /// Run one exhaustive oracle cell.
    Oracle {
        #[arg(long, value_enum)]
        regime: OracleRegimeArg,
        #[arg(short, long)]
        n: u64,
        #[arg(short, long)]
        r: u64,
        #[arg(short, long)]
        k: u64,
        #[arg(long, default_value_t = 100_000_000)]
        max_nodes: u64,
        #[arg(long, default_value_t = 60_000)]
        max_ms: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Run oracle cells over an n-range and compare with the closed form.
    Verify {
        #[arg(long, value_enum)]
        regime: VerifyRegimeArg,
        #[arg(short, long)]
        r: u64,
        #[arg(short, long)]
        k: u64,
        /// Inclusive range of vertex counts, e.g. `3..6` or a single `5`.
        #[arg(short, long)]
        n: NRange,
        #[arg(long, default_value_t = 100_000_000)]
        max_nodes: u64,
        #[arg(long, default_value_t = 60_000)]
        max_ms: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DetectKind {
    Path,
    Cycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleRegimeArg {
    /// Berge-path-free r-graphs (hyperedge count).
    Hypergraph,
    /// P_k-free graphs (K_r count).
    Cliques,
    /// P_k-free red-blue graphs (g value).
    Redblue,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyRegimeArg {
    Formula,
    Cliques,
    Redblue,
}

#[derive(Clone, Copy)]
struct NRange {
    lo: u64,
    hi: u64,
}

impl std::str::FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.parse::<u64>().map_err(|_| format!("bad integer `{t}`"));
        if let Some((lo, hi)) = s.split_once("..") {
            let (lo, hi) = (parse(lo)?, parse(hi)?);
            if lo > hi {
                return Err(format!("empty range `{s}`"));
            }
            Ok(NRange { lo, hi })
        } else {
            let v = parse(s)?;
            Ok(NRange { lo: v, hi: v })
        }
    }
}

#[derive(Serialize)]
struct RunReport {
    schema_version: u32,
    command: String,
    params: Value,
    result: Value,
    elapsed_ms: u64,
}

fn emit(json_mode: bool, report: &RunReport, human: &str) {
    if json_mode {
        println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serializes")
        );
    } else {
        println!("{human}");
    }
}

fn regime_name(regime: FormulaRegime) -> &'static str {
    match regime {
        FormulaRegime::Partition => "partition",
        FormulaRegime::Block => "block",
        FormulaRegime::Matching => "matching",
    }
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let started = Instant::now();
    let json_mode = cli.json;
    match cli.command {
        Command::Formula { n, r, k } => {
            let params = TuranParams::new(n, r, k)?;
            let detailed = turan_formula_detailed(&params)?;
            let report = RunReport {
                schema_version: SCHEMA_VERSION,
                command: "formula".into(),
                params: json!({"n": n, "r": r, "k": k}),
                result: json!({
                    "value": detailed.value,
                    "regime": regime_name(detailed.regime),
                    "outside_proven_range": detailed.outside_proven_range,
                }),
                elapsed_ms: started.elapsed().as_millis() as u64,
            };
            emit(
                json_mode,
                &report,
                &format!(
                    "extremal value for n={n}, r={r}, k={k}: {} ({} regime{})",
                    detailed.value,
                    regime_name(detailed.regime),
                    if detailed.outside_proven_range {
                        ", outside proven range"
                    } else {
                        ""
                    }
                ),
            );
            Ok(EXIT_OK)
        }
        Command::Construct { n, r, k, output } => {
            let params = TuranParams::new(n, r, k)?;
            let (h, kind) = if k > r {
                (berge_core::construct_extremal(&params)?, "partition")
            } else {
                (berge_core::construct_small_k(&params)?, "block")
            };
            let self_check = match find_berge_path_with(&h, k as usize, Budget::UNLIMITED) {
                SearchOutcome::Absent => "pass",
                SearchOutcome::Found(_) => "fail",
                SearchOutcome::BudgetExhausted => "inconclusive",
            };
            let text = format::serialize_hypergraph(&h);
            if let Some(path) = &output {
                std::fs::write(path, &text)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            let report = RunReport {
                schema_version: SCHEMA_VERSION,
                command: "construct".into(),
                params: json!({"n": n, "r": r, "k": k}),
                result: json!({
                    "kind": kind,
                    "n": n,
                    "r": r,
                    "k": k,
                    "edge_count": h.edge_count(),
                    "self_check": self_check,
                    "output": output.as_ref().map(|p| p.display().to_string()),
                    "construction": serde_json::to_value(&h)?,
                }),
                elapsed_ms: started.elapsed().as_millis() as u64,
            };
            let mut human = format!(
                "{kind} construction for n={n}, r={r}, k={k}: {} hyperedges, freeness self-check {}",
                h.edge_count(),
                self_check
            );
            match &output {
                Some(path) => human.push_str(&format!("\nwritten to {}", path.display())),
                None => human.push_str(&format!("\n{text}")),
            }
            emit(json_mode, &report, &human);
            if self_check == "pass" {
                Ok(EXIT_OK)
            } else {
                Ok(EXIT_INCONCLUSIVE)
            }
        }
        Command::Detect { input, k, kind } => {
            let text = std::fs::read_to_string(&input)
                .with_context(|| format!("reading {}", input.display()))?;
            let h = format::parse_hypergraph(&text)?;
            if k < 1 || (matches!(kind, DetectKind::Cycle) && k < 2) {
                anyhow::bail!("length k too small for the requested kind");
            }
            let outcome = match kind {
                DetectKind::Path => find_berge_path_with(&h, k, Budget::UNLIMITED),
                DetectKind::Cycle => find_berge_cycle_with(&h, k, Budget::UNLIMITED),
            };
            let kind_name = match kind {
                DetectKind::Path => "path",
                DetectKind::Cycle => "cycle",
            };
            let (found, witness) = match outcome {
                SearchOutcome::Found(w) => (true, Some(w)),
                _ => (false, None),
            };
            let report = RunReport {
                schema_version: SCHEMA_VERSION,
                command: "detect".into(),
                params: json!({"input": input.display().to_string(), "k": k, "kind": kind_name}),
                result: json!({
                    "found": found,
                    "kind": kind_name,
                    "k": k,
                    "witness": witness.as_ref().map(serde_json::to_value).transpose()?,
                }),
                elapsed_ms: started.elapsed().as_millis() as u64,
            };
            let human = match &witness {
                Some(w) => format!(
                    "Berge {kind_name} of length {k} found: vertices {:?}",
                    w.vertices.iter().map(|v| v.0).collect::<Vec<_>>()
                ),
                None => format!("no Berge {kind_name} of length {k}"),
            };
            emit(json_mode, &report, &human);
            Ok(if found { EXIT_OK } else { EXIT_NOT_FOUND })
        }
        Command::Goodsets { input, max_size } => {
            let text = std::fs::read_to_string(&input)
                .with_context(|| format!("reading {}", input.display()))?;
            let h = format::parse_hypergraph(&text)?;
            let good = find_good_sets(&h, max_size)?;
            let ell = good
                .first()
                .map(|g| g.path_length)
                .unwrap_or_else(|| berge_core::longest_berge_path(&h).length);
            let disjunction = check_good_set_disjunction(&h);
            let report = RunReport {
                schema_version: SCHEMA_VERSION,
                command: "goodsets".into(),
                params: json!({"input": input.display().to_string(), "max_size": max_size}),
                result: json!({
                    "path_length": ell,
                    "good_sets": serde_json::to_value(&good)?,
                    "disjunction": serde_json::to_value(&disjunction)?,
                }),
                elapsed_ms: started.elapsed().as_millis() as u64,
            };
            let mut human = format!(
                "longest Berge path length {ell}; {} good set(s) of size <= {max_size}",
                good.len()
            );
            for g in &good {
                human.push_str(&format!(
                    "\n  {:?}: meets {} hyperedges (threshold {}/{}, {:?})",
                    g.subset.iter().map(|v| v.0).collect::<Vec<_>>(),
                    g.incident_count,
                    g.threshold_numerator,
                    g.threshold_denominator,
                    g.verdict
                ));
            }
            human.push_str(&format!(
                "\ndisjunction: holds = {} ({})",
                disjunction.holds, disjunction.detail
            ));
            emit(json_mode, &report, &human);
            Ok(EXIT_OK)
        }
        Command::Oracle {
            regime,
            n,
            r,
            k,
            max_nodes,
            max_ms,
            threads,
        } => {
            let opts = OracleOptions {
                budget: Budget::new(Some(max_nodes), Some(max_ms)),
                workers: threads.max(1),
            };
            let (regime_label, result) = match regime {
                OracleRegimeArg::Hypergraph => (
                    "hypergraph",
                    turan_oracle(&TuranParams::new(n, r, k)?, &opts)?,
                ),
                OracleRegimeArg::Cliques => ("cliques", graph_kr_oracle(n, k, r, &opts)?),
                OracleRegimeArg::Redblue => ("redblue", redblue_g_oracle(n, k, r, &opts)?),
            };
            let mut value = serde_json::to_value(&result)?;
            value
                .as_object_mut()
                .expect("oracle result serializes to an object")
                .insert("regime".into(), json!(regime_label));
            let report = RunReport {
                schema_version: SCHEMA_VERSION,
                command: "oracle".into(),
                params: json!({
                    "regime": regime_label, "n": n, "r": r, "k": k,
                    "max_nodes": max_nodes, "max_ms": max_ms, "threads": threads,
                }),
                result: value,
                elapsed_ms: started.elapsed().as_millis() as u64,
            };
            let status_name = match result.status {
                OracleStatus::Proved => "proved",
                OracleStatus::BudgetExhausted => "budget exhausted",
            };
            emit(
                json_mode,
                &report,
                &format!(
                    "{regime_label} oracle at n={n}, r={r}, k={k}: best value {} ({status_name}), \
                     {} nodes, {} ms",
                    result.best_value, result.nodes_explored, result.elapsed_ms
                ),
            );
            Ok(match result.status {
                OracleStatus::Proved => EXIT_OK,
                OracleStatus::BudgetExhausted => EXIT_INCONCLUSIVE,
            })
        }
        Command::Verify {
            regime,
            r,
            k,
            n,
            max_nodes,
            max_ms,
            threads,
        } => {
            let opts = OracleOptions {
                budget: Budget::new(Some(max_nodes), Some(max_ms)),
                workers: threads.max(1),
            };
            let core_regime = match regime {
                VerifyRegimeArg::Formula => VerifyRegime::Formula,
                VerifyRegimeArg::Cliques => VerifyRegime::Cliques,
                VerifyRegimeArg::Redblue => VerifyRegime::RedBlue,
            };
            let report_data = verify_range(core_regime, r, k, n.lo..=n.hi, &opts)?;
            let mut value = serde_json::to_value(&report_data)?;
            value
                .as_object_mut()
                .expect("verify report serializes to an object")
                .insert("all_match".into(), json!(report_data.all_match()));
            let report = RunReport {
                schema_version: SCHEMA_VERSION,
                command: "verify".into(),
                params: json!({
                    "regime": match regime {
                        VerifyRegimeArg::Formula => "formula",
                        VerifyRegimeArg::Cliques => "cliques",
                        VerifyRegimeArg::Redblue => "redblue",
                    },
                    "r": r, "k": k, "n_lo": n.lo, "n_hi": n.hi,
                    "max_nodes": max_nodes, "max_ms": max_ms, "threads": threads,
                }),
                result: value,
                elapsed_ms: started.elapsed().as_millis() as u64,
            };
            let mut human = String::new();
            for cell in &report_data.cells {
                human.push_str(&format!(
                    "n={}: expected {}, oracle {} ({})\n",
                    cell.n,
                    cell.expected,
                    cell.oracle_value,
                    match cell.matched {
                        Some(true) => "match",
                        Some(false) => "MISMATCH",
                        None => "inconclusive",
                    }
                ));
            }
            human.push_str(&format!(
                "{} cell(s): {} mismatch(es), {} inconclusive",
                report_data.cells.len(),
                report_data.mismatches,
                report_data.inconclusive
            ));
            emit(json_mode, &report, &human);
            Ok(if report_data.mismatches > 0 {
                EXIT_MISMATCH
            } else if report_data.inconclusive > 0 {
                EXIT_INCONCLUSIVE
            } else {
                EXIT_OK
            })
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(EXIT_INVALID);
        }
    }
}
