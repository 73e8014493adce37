//! Enumeration of free (unlabeled) trees.
//!
//! The primary enumerator generates rooted trees by canonical level
//! sequences (Beyer-Hedetniemi successor rule) and keeps one representative
//! per free-isomorphism class, canonicalized by the minimum AHU encoding
//! over the tree's centers. An independent brute-force route decodes every
//! Pruefer sequence and canonicalizes by the minimum AHU id over *all*
//! rootings, sharing no center logic with the enumerator; the two routes
//! must agree on counts.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// All level sequences of rooted trees on n vertices (root level 1),
/// in the Beyer-Hedetniemi order.
fn level_sequences(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut level: Vec<usize> = (1..=n).collect();
    loop {
        out.push(level.clone());
        // rightmost entry above 2
        let Some(p) = (0..n).rev().find(|&i| level[i] > 2) else {
            break;
        };
        let q = (0..p).rev().find(|&i| level[i] == level[p] - 1).expect("parent level exists");
        for i in p..n {
            level[i] = level[i - (p - q)];
        }
    }
    out
}

fn tree_from_levels(levels: &[usize]) -> Graph {
    let n = levels.len();
    let mut g = Graph::new(n);
    for i in 1..n {
        let parent = (0..i).rev().find(|&j| levels[j] == levels[i] - 1).expect("canonical sequence");
        g.add_edge(parent as u32, i as u32).expect("tree edge");
    }
    g
}

/// AHU encoding of the tree rooted at `root`: children encodings sorted.
fn ahu_string(g: &Graph, root: u32, parent: u32) -> String {
    let mut kids: Vec<String> = g
        .neighbors(root)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| ahu_string(g, w, root))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Tree centers: the one or two vertices left by repeated leaf pruning.
fn centers(g: &Graph) -> Vec<u32> {
    let n = g.n();
    if n == 1 {
        return vec![0];
    }
    let mut degree: Vec<usize> = (0..n as u32).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut frontier: Vec<u32> = (0..n as u32).filter(|&v| degree[v as usize] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &frontier {
            removed[v as usize] = true;
            remaining -= 1;
            for &w in g.neighbors(v) {
                if !removed[w as usize] {
                    degree[w as usize] -= 1;
                    if degree[w as usize] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        frontier = next;
    }
    (0..n as u32).filter(|&v| !removed[v as usize]).collect()
}

/// Canonical encoding of a free tree: minimum AHU string over its centers.
pub fn canonical_form(g: &Graph) -> Result<String> {
    if !g.is_tree() {
        return Err(Error::invalid("canonical_form requires a tree"));
    }
    Ok(centers(g)
        .into_iter()
        .map(|c| ahu_string(g, c, u32::MAX))
        .min()
        .expect("a tree has a center"))
}

/// All free trees on n vertices, one per isomorphism class, ordered by
/// canonical encoding.
pub fn enumerate_free_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > 16 {
        return Err(Error::invalid("free-tree enumeration supports 1..=16 vertices"));
    }
    let mut seen: HashMap<String, Graph> = HashMap::new();
    for levels in level_sequences(n) {
        let t = tree_from_levels(&levels);
        let key = canonical_form(&t)?;
        seen.entry(key).or_insert(t);
    }
    let mut keyed: Vec<(String, Graph)> = seen.into_iter().collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, g)| g).collect())
}

/// Count of rooted trees on n vertices, straight from the level-sequence
/// generator.
pub fn count_rooted_trees(n: usize) -> usize {
    level_sequences(n).len()
}

// ---------------------------------------------------------------------------
// Independent brute-force route
// ---------------------------------------------------------------------------

/// Shape interner: equal rooted subtree shapes get equal ids across trees.
#[derive(Default)]
struct ShapeTable {
    ids: HashMap<Vec<u32>, u32>,
}

impl ShapeTable {
    fn shape(&mut self, g: &Graph, root: u32, parent: u32) -> u32 {
        let mut kids: Vec<u32> = g
            .neighbors(root)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| self.shape(g, w, root))
            .collect();
        kids.sort_unstable();
        let next = self.ids.len() as u32;
        *self.ids.entry(kids).or_insert(next)
    }
}

fn prufer_decode(seq: &[usize], n: usize) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut g = Graph::new(n);
    let mut ptr = 0usize; // smallest never-scanned leaf candidate
    let mut pending: Option<usize> = None;
    for &s in seq {
        let l = match pending.take() {
            Some(l) => l,
            None => {
                while degree[ptr] != 1 {
                    ptr += 1;
                }
                let l = ptr;
                ptr += 1;
                l
            }
        };
        g.add_edge(l as u32, s as u32).expect("prufer edge");
        degree[l] -= 1;
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            pending = Some(s);
        }
    }
    let mut rest = (0..n).filter(|&v| degree[v] == 1);
    let a = rest.next().expect("two leaves remain");
    let b = rest.next().expect("two leaves remain");
    g.add_edge(a as u32, b as u32).expect("final edge");
    g
}

/// Count of free trees on n vertices by exhausting all labeled trees
/// (Pruefer sequences) and deduplicating by the min-over-all-rootings shape
/// id. Exponential; n <= 9 is the intended range.
pub fn count_free_trees_brute(n: usize) -> Result<usize> {
    if n == 0 || n > 9 {
        return Err(Error::invalid("brute-force free-tree count supports 1..=9"));
    }
    if n == 1 || n == 2 {
        return Ok(1);
    }
    let mut table = ShapeTable::default();
    let mut classes: HashSet<u32> = HashSet::new();
    let k = n - 2;
    let mut seq = vec![0usize; k];
    loop {
        let g = prufer_decode(&seq, n);
        let canon = (0..n as u32)
            .map(|r| table.shape(&g, r, u32::MAX))
            .min()
            .unwrap();
        classes.insert(canon);
        // next sequence
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(classes.len());
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
        }
    }
}
