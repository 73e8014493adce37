//! Regenerates the bundled selfcheck corpus under `corpus/`.

use starforest::io;
use starforest::model::pd_grid_biclique_model;
use starforest::obstruct::{nds_tree_left, nds_tree_right, npd_tree_left, npd_tree_right};

fn main() -> anyhow::Result<()> {
    let dir = std::path::Path::new("corpus");
    std::fs::create_dir_all(dir)?;
    let graphs = [
        ("grid_obstruction_left.json", npd_tree_left()),
        ("grid_obstruction_right.json", npd_tree_right()),
        ("star_obstruction_left.json", nds_tree_left()),
        ("star_obstruction_right.json", nds_tree_right()),
    ];
    for (name, g) in &graphs {
        std::fs::write(dir.join(name), io::graph_to_json(g))?;
    }
    let cert = pd_grid_biclique_model(3)?;
    std::fs::write(
        dir.join("k33_pd3.json"),
        io::to_canonical_json(&io::model_to_doc(&cert)),
    )?;
    let manifest = serde_json::json!({
        "graphs": graphs.iter().map(|(n, _)| *n).collect::<Vec<_>>(),
        "biclique_certificate": "k33_pd3.json",
    });
    std::fs::write(dir.join("manifest.json"), io::to_canonical_json(&manifest))?;
    println!("corpus written to {}", dir.display());
    Ok(())
}
