//! Command-line front end.
//!
//! Exit codes: 0 = affirmative/valid, 1 = negative/invalid, 2 = malformed
//! input or usage error, 3 = budget exhausted / indeterminate. Identical
//! invocations produce byte-identical stdout; timings go to stderr.

use std::path::{Path, PathBuf};
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use starforest::classify::{classify_forest, Classification};
use starforest::constellation::{interval_of, Constellation};
use starforest::embed::{embed_interrupted, embed_zigzagged};
use starforest::error::Error;
use starforest::families::{self, FamilySpec, PosiVariant};
use starforest::graph::Graph;
use starforest::io;
use starforest::model::{verify_model, Verdict};
use starforest::obstruct::{find_nds_witness, find_npd_witness, NdsMode, WitnessSearch};
use starforest::solver::{
    find_induced_minor, forest::find_induced_minor_forest, SearchBudget, SearchOutcome,
};

mod selfcheck;

#[derive(Parser)]
#[command(
    name = "starforest",
    version,
    about = "graph families, induced minors, constellations, forest classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
    Edgelist,
}

#[derive(Args, Clone)]
struct BudgetArgs {
    /// search-node ceiling (env STARFOREST_MAX_NODES supplies the default)
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// wall-clock ceiling in milliseconds
    #[arg(long)]
    budget_ms: Option<u64>,
}

impl BudgetArgs {
    fn resolve(&self) -> SearchBudget {
        let mut b = SearchBudget::default();
        if let Ok(v) = std::env::var("STARFOREST_MAX_NODES") {
            if let Ok(n) = v.parse() {
                b.max_nodes = n;
            }
        }
        if let Some(n) = self.budget_nodes {
            b.max_nodes = n;
        }
        if let Some(ms) = self.budget_ms {
            b.max_millis = ms;
        }
        b
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph family
    Gen {
        /// family name: pd-grid, pd-grid-general, death-star,
        /// death-star-subdivided, t1, t2-prime, t3-prime, t2, t3, t4, s-ell,
        /// target-posi
        family: String,
        /// family parameters (integers; target-posi takes t2|t3 first)
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// emit the constellation document instead of the plain graph
        /// (grid and death-star families only)
        #[arg(long)]
        as_constellation: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for an induced minor model of a pattern in a host
    FindIm {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        /// use the exact forest engine (host and pattern must be forests)
        #[arg(long)]
        forest_fast: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify an induced-minor certificate file (exit 0/1/2)
    VerifyCert { cert: PathBuf },
    /// Constellation checks and embeddings
    Constellation {
        #[command(subcommand)]
        op: ConstellationOp,
    },
    /// Obstruction witness searches
    Obstruct {
        #[command(subcommand)]
        op: ObstructOp,
    },
    /// Classify a forest as posi or nega, with certificate
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        emit_witness: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the bundled acceptance corpus
    Selfcheck {
        /// corpus directory
        #[arg(long, default_value = "corpus")]
        corpus: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Subcommand)]
enum ConstellationOp {
    /// Check the structural constellation invariants
    Validate {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Strengthened d-ampleness
    Ample {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        d: usize,
    },
    /// Interrupted under the stored star order
    Interrupted {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// q-zigzagged under the stored star order
    Zigzag {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        q: usize,
    },
    /// Interval of a path vertex relative to a star
    Interval {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        star: u32,
        #[arg(long)]
        anchor: u32,
    },
    /// Build a target model inside the constellation
    Embed {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        ell: usize,
        /// t2 | t3 (interrupted hosts) or t4 (zigzagged hosts)
        #[arg(long, default_value = "t2")]
        variant: String,
        /// zigzag parameter, required for t4
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ObstructOp {
    Npd {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Nds {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "theorem")]
        mode: String,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e.downcast_ref::<Error>() {
                Some(Error::InvalidInput(_)) | Some(Error::Malformed(_)) => 2,
                Some(Error::Certificate(_)) | Some(Error::Invariant { .. }) => 1,
                None => 2,
            };
            ExitCode::from(code)
        }
    }
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
    // JSON graph document first, edge list as the fallback
    if text.trim_start().starts_with('{') {
        Ok(io::graph_from_json(&text)?)
    } else {
        Ok(io::graph_from_edgelist(&text)?)
    }
}

fn read_constellation(path: &Path) -> anyhow::Result<Constellation> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
    Ok(io::doc_to_constellation(&io::from_json(&text)?)?)
}

fn emit(out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn parse_usize(params: &[String], i: usize, what: &str) -> anyhow::Result<usize> {
    params
        .get(i)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::InvalidInput(format!("missing or bad parameter: {what}")).into())
}

fn family_spec(family: &str, params: &[String]) -> anyhow::Result<FamilySpec> {
    Ok(match family {
        "pd-grid" => FamilySpec::PdGrid {
            n: parse_usize(params, 0, "n")?,
        },
        "pd-grid-general" => FamilySpec::PdGridGeneral {
            stars: parse_usize(params, 0, "stars")?,
            paths: parse_usize(params, 1, "paths")?,
            spacing: parse_usize(params, 2, "spacing")?,
            padding: parse_usize(params, 3, "padding")?,
        },
        "death-star" => FamilySpec::DeathStar {
            h: parse_usize(params, 0, "h")?,
        },
        "death-star-subdivided" => FamilySpec::DeathStarSubdiv {
            h: parse_usize(params, 0, "h")?,
        },
        "t1" => FamilySpec::T1 {
            ell: parse_usize(params, 0, "ell")?,
        },
        "t2-prime" => FamilySpec::T2Prime {
            ell: parse_usize(params, 0, "ell")?,
        },
        "t3-prime" => FamilySpec::T3Prime {
            ell: parse_usize(params, 0, "ell")?,
        },
        "t2" => FamilySpec::T2 {
            ell: parse_usize(params, 0, "ell")?,
        },
        "t3" => FamilySpec::T3 {
            ell: parse_usize(params, 0, "ell")?,
        },
        "t4" => FamilySpec::T4 {
            ell: parse_usize(params, 0, "ell")?,
        },
        "s-ell" => FamilySpec::SEll {
            ell: parse_usize(params, 0, "ell")?,
        },
        "target-posi" => {
            let variant = match params.first().map(|s| s.as_str()) {
                Some("t2") => PosiVariant::T2,
                Some("t3") => PosiVariant::T3,
                _ => return Err(Error::InvalidInput("target-posi needs t2|t3".into()).into()),
            };
            FamilySpec::TargetPosi {
                variant,
                ell: parse_usize(params, 1, "ell")?,
            }
        }
        other => return Err(Error::InvalidInput(format!("unknown family `{other}`")).into()),
    })
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Gen {
            family,
            params,
            format,
            as_constellation,
            out,
        } => {
            let spec = family_spec(&family, &params)?;
            if as_constellation {
                let c = match &spec {
                    FamilySpec::PdGrid { n } => families::pd_grid(*n)?.constellation(),
                    FamilySpec::PdGridGeneral {
                        stars,
                        paths,
                        spacing,
                        padding,
                    } => families::pd_grid_general(*stars, *paths, *spacing, *padding)?
                        .constellation(),
                    FamilySpec::DeathStar { h } => families::death_star(*h)?.constellation(),
                    _ => {
                        return Err(Error::InvalidInput(
                            "--as-constellation applies to grid and death-star families".into(),
                        )
                        .into())
                    }
                };
                emit(&out, &io::to_canonical_json(&io::constellation_to_doc(&c)))?;
                return Ok(0);
            }
            let g = families::generate(&spec)?;
            let text = match format {
                Format::Json => io::graph_to_json(&g),
                Format::Dot => io::graph_to_dot(&g),
                Format::Edgelist => io::graph_to_edgelist(&g),
            };
            emit(&out, &text)?;
            Ok(0)
        }

        Command::FindIm {
            host,
            pattern,
            forest_fast,
            budget,
            out,
        } => {
            let h = read_graph(&host)?;
            let p = read_graph(&pattern)?;
            let b = budget.resolve();
            let r = if forest_fast {
                find_induced_minor_forest(&h, &p, &b)?
            } else {
                find_induced_minor(&h, &p, &b)?
            };
            let inputs = json!({
                "host": io::graph_hash(&h),
                "pattern": io::graph_hash(&p),
            });
            let (code, doc) = match r.outcome {
                SearchOutcome::Found(model) => (
                    0u8,
                    json!({
                        "inputs": inputs,
                        "outcome": "found",
                        "nodes": r.nodes,
                        "certificate": io::model_to_doc(&model),
                    }),
                ),
                SearchOutcome::NotContained => (
                    1,
                    json!({"inputs": inputs, "outcome": "not-contained", "nodes": r.nodes}),
                ),
                SearchOutcome::BudgetExhausted => (
                    3,
                    json!({"inputs": inputs, "outcome": "budget-exhausted", "nodes": r.nodes}),
                ),
            };
            emit(&out, &io::to_canonical_json(&doc))?;
            Ok(code)
        }

        Command::VerifyCert { cert } => {
            let text = std::fs::read_to_string(&cert)
                .map_err(|e| Error::Malformed(format!("{}: {e}", cert.display())))?;
            let doc: io::CertificateDoc = io::from_json(&text)?;
            let model = io::doc_to_model(&doc)?;
            let verdict = verify_model(&model)?;
            let inputs = json!({"certificate": io::sha256_hex(text.as_bytes())});
            match verdict {
                Verdict::Valid => {
                    emit(
                        &None,
                        &io::to_canonical_json(&json!({
                            "inputs": inputs, "verdict": "valid"
                        })),
                    )?;
                    Ok(0)
                }
                Verdict::Violation(v) => {
                    emit(
                        &None,
                        &io::to_canonical_json(&json!({
                            "inputs": inputs, "verdict": "invalid", "violation": format!("{v}")
                        })),
                    )?;
                    Ok(1)
                }
            }
        }

        Command::Constellation { op } => run_constellation(op),
        Command::Obstruct { op } => run_obstruct(op),

        Command::Classify {
            input,
            emit_witness,
            budget,
            out,
        } => {
            let f = read_graph(&input)?;
            let b = budget.resolve();
            let inputs = json!({"forest": io::graph_hash(&f)});
            match classify_forest(&f, &b)? {
                Classification::Posi {
                    variant,
                    ell,
                    model,
                } => {
                    let doc = json!({
                        "inputs": inputs,
                        "verdict": "posi",
                        "variant": variant.to_string(),
                        "ell": ell,
                        "model": io::model_to_doc(&model),
                    });
                    emit(&out, &io::to_canonical_json(&doc))?;
                    Ok(0)
                }
                Classification::Nega { witness } => {
                    let wdoc = serde_json::to_value(&witness)?;
                    if let Some(path) = emit_witness {
                        std::fs::write(&path, io::to_canonical_json(&wdoc))?;
                    }
                    let doc = json!({
                        "inputs": inputs,
                        "verdict": "nega",
                        "witness": wdoc,
                    });
                    emit(&out, &io::to_canonical_json(&doc))?;
                    Ok(1)
                }
                Classification::Indeterminate => {
                    let doc = json!({"inputs": inputs, "verdict": "indeterminate"});
                    emit(&out, &io::to_canonical_json(&doc))?;
                    Ok(3)
                }
            }
        }

        Command::Selfcheck { corpus, budget } => selfcheck::run(&corpus, &budget.resolve()),
    }
}

fn run_constellation(op: ConstellationOp) -> anyhow::Result<u8> {
    match op {
        ConstellationOp::Validate { input } => {
            let c = read_constellation(&input)?;
            let verdict = c.validate()?;
            let inputs = json!({"constellation": io::graph_hash(&c.graph)});
            match verdict {
                starforest::constellation::ConstellationVerdict::Valid => {
                    emit(
                        &None,
                        &io::to_canonical_json(&json!({"inputs": inputs, "verdict": "valid"})),
                    )?;
                    Ok(0)
                }
                starforest::constellation::ConstellationVerdict::Violation(v) => {
                    emit(
                        &None,
                        &io::to_canonical_json(&json!({
                            "inputs": inputs, "verdict": "invalid", "violation": format!("{v}")
                        })),
                    )?;
                    Ok(1)
                }
            }
        }
        ConstellationOp::Ample { input, d } => {
            let c = read_constellation(&input)?;
            let idx = c.index()?;
            let ok = c.is_d_ample(&idx, d);
            emit(
                &None,
                &io::to_canonical_json(&json!({
                    "inputs": {"constellation": io::graph_hash(&c.graph)},
                    "d": d,
                    "ample": ok,
                })),
            )?;
            Ok(if ok { 0 } else { 1 })
        }
        ConstellationOp::Interrupted { input } => {
            let c = read_constellation(&input)?;
            let idx = c.index()?;
            let ok = c.check_interrupted(&idx);
            emit(
                &None,
                &io::to_canonical_json(&json!({
                    "inputs": {"constellation": io::graph_hash(&c.graph)},
                    "interrupted": ok,
                })),
            )?;
            Ok(if ok { 0 } else { 1 })
        }
        ConstellationOp::Zigzag { input, q } => {
            let c = read_constellation(&input)?;
            let idx = c.index()?;
            let ok = c.check_zigzagged(&idx, q)?;
            emit(
                &None,
                &io::to_canonical_json(&json!({
                    "inputs": {"constellation": io::graph_hash(&c.graph)},
                    "q": q,
                    "zigzagged": ok,
                })),
            )?;
            Ok(if ok { 0 } else { 1 })
        }
        ConstellationOp::Interval {
            input,
            star,
            anchor,
        } => {
            let c = read_constellation(&input)?;
            let idx = c.index()?;
            let iv = interval_of(&c, &idx, star, anchor)?;
            emit(
                &None,
                &io::to_canonical_json(&json!({
                    "inputs": {"constellation": io::graph_hash(&c.graph)},
                    "star": star,
                    "anchor": anchor,
                    "path": iv.path,
                    "members": iv.members(&c),
                })),
            )?;
            Ok(0)
        }
        ConstellationOp::Embed {
            input,
            ell,
            variant,
            q,
            out,
        } => {
            let c = read_constellation(&input)?;
            let (model, trace) = match variant.as_str() {
                "t2" => embed_interrupted(&c, ell, PosiVariant::T2)?,
                "t3" => embed_interrupted(&c, ell, PosiVariant::T3)?,
                "t4" => {
                    let q =
                        q.ok_or_else(|| Error::InvalidInput("t4 embedding needs --q".into()))?;
                    embed_zigzagged(&c, ell, q)?
                }
                other => {
                    return Err(Error::InvalidInput(format!("unknown variant `{other}`")).into())
                }
            };
            let doc = json!({
                "inputs": {"constellation": io::graph_hash(&c.graph)},
                "ell": ell,
                "variant": variant,
                "trace": serde_json::to_value(&trace)?,
                "certificate": io::model_to_doc(&model),
            });
            emit(&out, &io::to_canonical_json(&doc))?;
            Ok(0)
        }
    }
}

fn run_obstruct(op: ObstructOp) -> anyhow::Result<u8> {
    match op {
        ObstructOp::Npd { input, budget, out } => {
            let g = read_graph(&input)?;
            let b = budget.resolve();
            let inputs = json!({"graph": io::graph_hash(&g)});
            match find_npd_witness(&g, &b)? {
                WitnessSearch::Found(w) => {
                    emit(
                        &out,
                        &io::to_canonical_json(&json!({
                            "inputs": inputs, "outcome": "found",
                            "witness": {"kind": "npd", "a": w.a, "b": w.b, "c": w.c},
                        })),
                    )?;
                    Ok(0)
                }
                WitnessSearch::NotFound => {
                    emit(
                        &out,
                        &io::to_canonical_json(
                            &json!({"inputs": inputs, "outcome": "not-found"}),
                        ),
                    )?;
                    Ok(1)
                }
                WitnessSearch::BudgetExhausted => {
                    emit(
                        &out,
                        &io::to_canonical_json(
                            &json!({"inputs": inputs, "outcome": "budget-exhausted"}),
                        ),
                    )?;
                    Ok(3)
                }
            }
        }
        ObstructOp::Nds {
            input,
            mode,
            budget,
            out,
        } => {
            let g = read_graph(&input)?;
            let b = budget.resolve();
            let mode = match mode.as_str() {
                "lemma" => NdsMode::Lemma,
                "theorem" => NdsMode::Theorem,
                other => return Err(Error::InvalidInput(format!("unknown mode `{other}`")).into()),
            };
            let inputs = json!({"graph": io::graph_hash(&g)});
            match find_nds_witness(&g, mode, &b)? {
                WitnessSearch::Found(w) => {
                    emit(
                        &out,
                        &io::to_canonical_json(&json!({
                            "inputs": inputs, "outcome": "found",
                            "witness": serde_json::to_value(&w)?,
                        })),
                    )?;
                    Ok(0)
                }
                WitnessSearch::NotFound => {
                    emit(
                        &out,
                        &io::to_canonical_json(
                            &json!({"inputs": inputs, "outcome": "not-found"}),
                        ),
                    )?;
                    Ok(1)
                }
                WitnessSearch::BudgetExhausted => {
                    emit(
                        &out,
                        &io::to_canonical_json(
                            &json!({"inputs": inputs, "outcome": "budget-exhausted"}),
                        ),
                    )?;
                    Ok(3)
                }
            }
        }
    }
}
