//! The bundled acceptance corpus: a fixed list of checks over files shipped
//! in the corpus directory plus generated fixtures. One pass/fail line per
//! item on stdout; timings on stderr so reruns stay byte-identical.

use std::path::Path;
use std::time::Instant;

use serde_json::json;

use starforest::classify::{classify_forest, Classification, ObstructionWitness};
use starforest::embed::{embed_interrupted, embed_zigzagged};
use starforest::error::Error;
use starforest::families::{self, PosiVariant};
use starforest::graph::Graph;
use starforest::io;
use starforest::model::{verify_model, Verdict};
use starforest::solver::{find_induced_minor, SearchBudget, SearchOutcome};

enum Status {
    Pass,
    Indeterminate(String),
}

type Item = (&'static str, Box<dyn FnOnce() -> anyhow::Result<Status>>);

pub fn run(corpus: &Path, budget: &SearchBudget) -> anyhow::Result<u8> {
    // corpus files are part of the contract: a missing file is a malformed
    // installation, exit 2
    let manifest_path = corpus.join("manifest.json");
    let manifest_text = std::fs::read_to_string(&manifest_path)
        .map_err(|e| Error::Malformed(format!("{}: {e}", manifest_path.display())))?;
    let manifest: serde_json::Value = io::from_json(&manifest_text)?;
    let graph_files: Vec<String> = manifest["graphs"]
        .as_array()
        .ok_or_else(|| Error::Malformed("manifest lacks a graphs list".into()))?
        .iter()
        .filter_map(|v| v.as_str().map(String::from))
        .collect();
    let mut graphs = std::collections::BTreeMap::new();
    for name in &graph_files {
        let path = corpus.join(name);
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
        graphs.insert(name.clone(), io::graph_from_json(&text)?);
    }
    let cert_name = manifest["biclique_certificate"]
        .as_str()
        .ok_or_else(|| Error::Malformed("manifest lacks biclique_certificate".into()))?
        .to_string();
    let cert_path = corpus.join(&cert_name);
    let cert_text = std::fs::read_to_string(&cert_path)
        .map_err(|e| Error::Malformed(format!("{}: {e}", cert_path.display())))?;

    let budget = *budget;
    let graphs2 = graphs.clone();
    let items: Vec<Item> = vec![
        (
            "generator-counts",
            Box::new(|| {
                for ell in 2..=10 {
                    for b in [families::t2prime(ell)?, families::t3prime(ell)?] {
                        let leaves =
                            (0..b.graph.n() as u32).filter(|&v| b.graph.degree(v) == 1).count();
                        if b.graph.n() != 6 * ell + 5 || leaves != ell + 5 {
                            anyhow::bail!("count mismatch at ell={ell}");
                        }
                    }
                }
                Ok(Status::Pass)
            }),
        ),
        (
            "weak-sparseness",
            Box::new(|| {
                for n in 3..=6 {
                    if families::pd_grid(n)?.graph.girth() != Some(6) {
                        anyhow::bail!("pd_grid({n}) girth != 6");
                    }
                }
                for h in 1..=4 {
                    if families::death_star(h)?.graph.has_kst(2, 3)? {
                        anyhow::bail!("death_star({h}) contains K_2,3");
                    }
                    if families::death_star_subdivided(h)?.graph.has_kst(2, 2)? {
                        anyhow::bail!("subdivided death star ({h}) contains K_2,2");
                    }
                }
                Ok(Status::Pass)
            }),
        ),
        (
            "biclique-certificate",
            Box::new(move || {
                let doc: io::CertificateDoc = io::from_json(&cert_text)?;
                let model = io::doc_to_model(&doc)?;
                if !verify_model(&model)?.is_valid() {
                    anyhow::bail!("bundled certificate is invalid");
                }
                // prescribed mutations must fail
                let mut moved = model.clone();
                let a = moved.branch[3].remove(0);
                let b = moved.branch[3].remove(0);
                moved.branch[0].extend([a, b]);
                moved.branch[0].sort_unstable();
                let mut split = model.clone();
                split.branch[3].remove(1);
                let mut deleted = model.clone();
                deleted.branch.pop();
                for (m, what) in [(moved, "moved"), (split, "split"), (deleted, "deleted")] {
                    if verify_model(&m)?.is_valid() {
                        anyhow::bail!("mutation `{what}` still verifies");
                    }
                }
                Ok(Status::Pass)
            }),
        ),
        (
            "constellation-checks",
            Box::new(|| {
                let c = families::pd_grid(4)?.constellation();
                let idx = c.index()?;
                if !c.validate()?.is_valid()
                    || !c.check_interrupted(&idx)
                    || !c.check_zigzagged(&idx, 1)?
                {
                    anyhow::bail!("pd_grid(4) fails a constellation check");
                }
                let amp = families::pd_grid_general(6, 4, 3, 3)?.constellation();
                let aidx = amp.index()?;
                if !amp.is_d_ample(&aidx, 3) || amp.is_d_ample(&aidx, 4) {
                    anyhow::bail!("pd_grid_general(6,4,3,3) ample boundary is off");
                }
                Ok(Status::Pass)
            }),
        ),
        (
            "negative-embedding",
            Box::new(move || {
                let host = families::death_star(3)?.graph;
                let two_k3 = Graph::from_edges(
                    6,
                    &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)],
                )?;
                match find_induced_minor(&host, &two_k3, &budget)?.outcome {
                    SearchOutcome::NotContained => Ok(Status::Pass),
                    SearchOutcome::BudgetExhausted => {
                        Ok(Status::Indeterminate("budget exhausted".into()))
                    }
                    SearchOutcome::Found(_) => anyhow::bail!("2K3 found in a death star"),
                }
            }),
        ),
        (
            "constructive-embeddings",
            Box::new(|| {
                let c = families::pd_grid_general(8, 15, 3, 3)?.constellation();
                for variant in [PosiVariant::T2, PosiVariant::T3] {
                    let (model, _) = embed_interrupted(&c, 2, variant)?;
                    if verify_model(&model)? != Verdict::Valid {
                        anyhow::bail!("interrupted {variant} model invalid");
                    }
                }
                let z = families::pd_grid_general(30, 16, 3, 3)?.constellation();
                let (model, _) = embed_zigzagged(&z, 2, 1)?;
                if verify_model(&model)? != Verdict::Valid {
                    anyhow::bail!("zigzag model invalid");
                }
                Ok(Status::Pass)
            }),
        ),
        (
            "classification-regression",
            Box::new(move || {
                let b = SearchBudget::default();
                for (name, g) in &graphs {
                    let c = classify_forest(g, &b)?;
                    let ok = match (name.as_str(), &c) {
                        (n, Classification::Nega { witness: ObstructionWitness::Npd(_) })
                            if n.starts_with("grid_obstruction") => true,
                        (n, Classification::Nega { witness: ObstructionWitness::Nds(_) })
                            if n.starts_with("star_obstruction") => true,
                        _ => false,
                    };
                    if !ok {
                        anyhow::bail!("{name} misclassified");
                    }
                }
                for g in [families::t1(2)?.graph, families::t2(2)?.graph] {
                    if !classify_forest(&g, &b)?.is_posi() {
                        anyhow::bail!("generated target misclassified as nega");
                    }
                }
                Ok(Status::Pass)
            }),
        ),
        (
            "determinism",
            Box::new(move || {
                let c = families::pd_grid_general(8, 15, 3, 3)?.constellation();
                let (m1, _) = embed_interrupted(&c, 2, PosiVariant::T2)?;
                let (m2, _) = embed_interrupted(&c, 2, PosiVariant::T2)?;
                let d1 = io::to_canonical_json(&io::model_to_doc(&m1));
                let d2 = io::to_canonical_json(&io::model_to_doc(&m2));
                if d1 != d2 {
                    anyhow::bail!("embed certificates differ between runs");
                }
                let b = SearchBudget::default();
                let g = graphs2.values().next().expect("corpus has graphs");
                let run = |g: &Graph| -> anyhow::Result<String> {
                    match classify_forest(g, &b)? {
                        Classification::Nega { witness } => {
                            Ok(io::to_canonical_json(&json!({ "witness": witness })))
                        }
                        other => anyhow::bail!("unexpected verdict {other:?}"),
                    }
                };
                if run(g)? != run(g)? {
                    anyhow::bail!("classification witnesses differ between runs");
                }
                Ok(Status::Pass)
            }),
        ),
    ];

    let mut failed = false;
    let mut indeterminate = false;
    for (name, check) in items {
        let start = Instant::now();
        let status = check();
        let ms = start.elapsed().as_millis();
        match status {
            Ok(Status::Pass) => {
                println!("ok {name}");
                eprintln!("  {name}: {ms} ms");
            }
            Ok(Status::Indeterminate(reason)) => {
                println!("indeterminate {name}: {reason}");
                eprintln!("  {name}: {ms} ms");
                indeterminate = true;
            }
            Err(e) => {
                println!("FAIL {name}: {e}");
                eprintln!("  {name}: {ms} ms");
                failed = true;
            }
        }
    }
    Ok(if failed {
        1
    } else if indeterminate {
        3
    } else {
        0
    })
}
