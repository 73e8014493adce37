//! Constructors for the named graph families, with stable vertex-id layouts.
//!
//! Every generator is deterministic: identical parameters produce identical
//! graphs, edge orders and labels, which is what makes certificates built on
//! top of them reproducible. The id layout of each family is documented on
//! its constructor and mirrored in the label map of the output.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rooted::{rooted, RootedTree};
use serde::{Deserialize, Serialize};

/// Guard against accidental exponential blowup (the death star is
/// exponential in its height).
pub const MAX_DEATH_STAR_HEIGHT: usize = 20;
pub const MAX_ELL: usize = 64;

/// Which of the two target families a positive classification refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PosiVariant {
    T2,
    T3,
}

impl std::fmt::Display for PosiVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PosiVariant::T2 => write!(f, "t2"),
            PosiVariant::T3 => write!(f, "t3"),
        }
    }
}

fn check_ell(ell: usize, min: usize) -> Result<()> {
    if ell < min {
        return Err(Error::invalid(format!("ell must be >= {min}, got {ell}")));
    }
    if ell > MAX_ELL {
        return Err(Error::invalid(format!(
            "ell = {ell} exceeds the size guard {MAX_ELL}"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Pohoata-Davies grids
// ---------------------------------------------------------------------------

/// A grid-type constellation: `paths` horizontal paths plus `stars` star
/// vertices, star k attached to one column of every path.
///
/// Id layout: row r occupies `r*width ..= r*width + width - 1` in path order;
/// star k (0-indexed) is `paths*width + k` and attaches at 0-indexed column
/// `padding + k*spacing` of every row.
pub struct PdGrid {
    pub graph: Graph,
    pub stars: usize,
    pub paths: usize,
    pub spacing: usize,
    pub padding: usize,
    pub width: usize,
}

impl PdGrid {
    pub fn row_vertex(&self, row: usize, pos: usize) -> u32 {
        (row * self.width + pos) as u32
    }

    pub fn star_vertex(&self, k: usize) -> u32 {
        (self.paths * self.width + k) as u32
    }

    pub fn star_column(&self, k: usize) -> usize {
        self.padding + k * self.spacing
    }

    pub fn star_ids(&self) -> Vec<u32> {
        (0..self.stars).map(|k| self.star_vertex(k)).collect()
    }

    pub fn row_sequence(&self, row: usize) -> Vec<u32> {
        (0..self.width).map(|p| self.row_vertex(row, p)).collect()
    }

    /// As a constellation: stars in column order, paths in row order.
    pub fn constellation(&self) -> crate::constellation::Constellation {
        crate::constellation::Constellation::new(
            self.graph.clone(),
            self.star_ids(),
            (0..self.paths).map(|r| self.row_sequence(r)).collect(),
        )
    }
}

/// The generalized grid. `pd_grid(n)` is the special case
/// `(stars, paths, spacing, padding) = (n, n, 1, 0)`.
pub fn pd_grid_general(
    stars: usize,
    paths: usize,
    spacing: usize,
    padding: usize,
) -> Result<PdGrid> {
    if stars < 1 || paths < 1 || spacing < 1 {
        return Err(Error::invalid(
            "pd_grid_general requires stars, paths, spacing >= 1",
        ));
    }
    let width = 2 * padding + (stars - 1) * spacing + 1;
    let n = paths * width + stars;
    let mut g = Graph::new(n);
    for r in 0..paths {
        for p in 0..width - 1 {
            g.add_edge((r * width + p) as u32, (r * width + p + 1) as u32)?;
        }
        for p in 0..width {
            g.set_label((r * width + p) as u32, format!("p{r}[{p}]"));
        }
    }
    for k in 0..stars {
        let s = (paths * width + k) as u32;
        g.set_label(s, format!("star{k}"));
        let col = padding + k * spacing;
        for r in 0..paths {
            g.add_edge(s, (r * width + col) as u32)?;
        }
    }
    Ok(PdGrid {
        graph: g,
        stars,
        paths,
        spacing,
        padding,
        width,
    })
}

/// The n x n Pohoata-Davies grid: n paths on n vertices, star k adjacent to
/// the k-th vertex of each path. `|V| = n^2 + n`.
pub fn pd_grid(n: usize) -> Result<PdGrid> {
    if n < 1 {
        return Err(Error::invalid("pd_grid requires n >= 1"));
    }
    pd_grid_general(n, n, 1, 0)
}

// ---------------------------------------------------------------------------
// Death stars
// ---------------------------------------------------------------------------

/// Death star of height `h`.
///
/// Id layout: the final path occupies `0 ..= 2^h - 2` left to right; star k
/// (construction step k, 1-indexed) is `2^h - 2 + k`. Star k is adjacent to
/// exactly the path positions congruent to `2^(h-k) - 1 mod 2^(h-k+1)`, i.e.
/// the vertices created at step k.
pub struct DeathStar {
    pub graph: Graph,
    pub height: usize,
    pub path_len: usize,
}

impl DeathStar {
    pub fn star_vertex(&self, k: usize) -> u32 {
        (self.path_len - 1 + k) as u32
    }

    /// Stars in construction order (oldest first).
    pub fn star_ids(&self) -> Vec<u32> {
        (1..=self.height).map(|k| self.star_vertex(k)).collect()
    }

    pub fn path_sequence(&self) -> Vec<u32> {
        (0..self.path_len as u32).collect()
    }

    /// As an (h,1)-constellation, stars in construction order.
    pub fn constellation(&self) -> crate::constellation::Constellation {
        crate::constellation::Constellation::new(
            self.graph.clone(),
            self.star_ids(),
            vec![self.path_sequence()],
        )
    }
}

fn check_height(h: usize) -> Result<()> {
    if h < 1 {
        return Err(Error::invalid("death star height must be >= 1"));
    }
    if h > MAX_DEATH_STAR_HEIGHT {
        return Err(Error::invalid(format!(
            "death star height {h} exceeds the size guard {MAX_DEATH_STAR_HEIGHT}"
        )));
    }
    Ok(())
}

pub fn death_star(h: usize) -> Result<DeathStar> {
    check_height(h)?;
    let path_len = (1usize << h) - 1;
    let n = path_len + h;
    let mut g = Graph::new(n);
    for p in 0..path_len.saturating_sub(1) {
        g.add_edge(p as u32, (p + 1) as u32)?;
    }
    for p in 0..path_len {
        g.set_label(p as u32, format!("path[{p}]"));
    }
    for k in 1..=h {
        let s = (path_len - 1 + k) as u32;
        g.set_label(s, format!("star{k}"));
        let modulus = 1usize << (h - k + 1);
        let residue = (1usize << (h - k)) - 1;
        let mut p = residue;
        while p < path_len {
            g.add_edge(s, p as u32)?;
            p += modulus;
        }
    }
    Ok(DeathStar {
        graph: g,
        height: h,
        path_len,
    })
}

/// Death star of height `h` with every edge of its path subdivided once.
///
/// Id layout: path occupies `0 ..= 2*(2^h - 1) - 2`; the original path vertex
/// at position p sits at `2p`, subdivision vertices at odd ids. Stars follow,
/// adjacent to the original vertices only.
pub fn death_star_subdivided(h: usize) -> Result<DeathStar> {
    check_height(h)?;
    let orig_len = (1usize << h) - 1;
    let path_len = 2 * orig_len - 1;
    let n = path_len + h;
    let mut g = Graph::new(n);
    for p in 0..path_len - 1 {
        g.add_edge(p as u32, (p + 1) as u32)?;
    }
    for p in 0..path_len {
        g.set_label(p as u32, format!("path[{p}]"));
    }
    for k in 1..=h {
        let s = (path_len - 1 + k) as u32;
        g.set_label(s, format!("star{k}"));
        let modulus = 1usize << (h - k + 1);
        let residue = (1usize << (h - k)) - 1;
        let mut p = residue;
        while p < orig_len {
            g.add_edge(s, (2 * p) as u32)?;
            p += modulus;
        }
    }
    Ok(DeathStar {
        graph: g,
        height: h,
        path_len,
    })
}

// ---------------------------------------------------------------------------
// The T families
// ---------------------------------------------------------------------------

/// `T_{1,ell}`: ell paths on `2*ell + 1` vertices plus a root adjacent to the
/// center of each path. `|V| = 1 + ell*(2*ell + 1)`.
///
/// Id layout: root is 0; arm k occupies `1 + k*(2*ell+1) ..` in path order,
/// its center (root's neighbor) at offset `ell` within the arm.
pub struct T1Build {
    pub graph: Graph,
    pub ell: usize,
    pub root: u32,
    pub arms: Vec<Vec<u32>>,
}

pub fn t1(ell: usize) -> Result<T1Build> {
    check_ell(ell, 1)?;
    let arm_len = 2 * ell + 1;
    let n = 1 + ell * arm_len;
    let mut g = Graph::new(n);
    g.set_label(0, "root");
    let mut arms = Vec::with_capacity(ell);
    for k in 0..ell {
        let base = (1 + k * arm_len) as u32;
        let arm: Vec<u32> = (0..arm_len as u32).map(|i| base + i).collect();
        for w in arm.windows(2) {
            g.add_edge(w[0], w[1])?;
        }
        g.add_edge(0, arm[ell])?;
        g.set_label(arm[ell], format!("center{k}"));
        arms.push(arm);
    }
    Ok(T1Build {
        graph: g,
        ell,
        root: 0,
        arms,
    })
}

pub fn t1_rooted(ell: usize) -> Result<RootedTree> {
    let b = t1(ell)?;
    rooted(&b.graph, b.root)
}

/// Shared skeleton of T'_{2,ell}, T'_{3,ell} and T'_{4,ell}.
///
/// Id layout (sizes 6*ell+5, or 7*ell+5 when both pendant chains exist):
/// root 0; original leaves adjacent to the root are `1..=ell`; x-arm is
/// `x = ell+1`, interior `ell+2 ..= 2*ell+1`, `leaf_a = 2*ell+2`; y-arm is
/// `y = 2*ell+3`, interior `2*ell+4 ..= 3*ell+3`, `leaf_b = 3*ell+4`;
/// then the ell-edge descendant chains in order: at the parent of `leaf_a`,
/// at the parent of `leaf_b`, at the child of x (T'_2/T'_4) and/or at y
/// (T'_3/T'_4), each chain listed inner-to-outer.
#[derive(Clone, Debug)]
pub struct TSkeleton {
    pub ell: usize,
    pub root: u32,
    /// z_1..z_ell, the original leaves adjacent to the root.
    pub z: Vec<u32>,
    pub x: u32,
    /// p_2..p_{ell+1}, the interior of the x-arm (p_2 is the child of x).
    pub p: Vec<u32>,
    pub leaf_a: u32,
    pub y: u32,
    /// q_2..q_{ell+1}.
    pub q: Vec<u32>,
    pub leaf_b: u32,
    /// Chain at the parent of leaf_a.
    pub f_chain: Vec<u32>,
    /// Chain at the parent of leaf_b.
    pub g_chain: Vec<u32>,
    /// Chain at the child of x (present in T'_2 and T'_4).
    pub x_chain: Option<Vec<u32>>,
    /// Chain at y (present in T'_3 and T'_4).
    pub y_chain: Option<Vec<u32>>,
    pub size: usize,
}

impl TSkeleton {
    /// The original leaves: z_1..z_ell plus the two far arm ends.
    pub fn original_leaves(&self) -> Vec<u32> {
        let mut v = self.z.clone();
        v.push(self.leaf_a);
        v.push(self.leaf_b);
        v
    }

    /// Sites where a T_{1,ell} copy is glued to form T_{2/3/4,ell}:
    /// x and every original leaf, ascending by id.
    pub fn glue_sites(&self) -> Vec<u32> {
        let mut v = self.z.clone();
        v.push(self.x);
        v.push(self.leaf_a);
        v.push(self.leaf_b);
        v.sort_unstable();
        v
    }
}

fn t_skeleton(ell: usize, with_x_chain: bool, with_y_chain: bool) -> Result<(Graph, TSkeleton)> {
    check_ell(ell, 2)?;
    let e = ell as u32;
    let root = 0u32;
    let z: Vec<u32> = (1..=e).collect();
    let x = e + 1;
    let p: Vec<u32> = (e + 2..=2 * e + 1).collect();
    let leaf_a = 2 * e + 2;
    let y = 2 * e + 3;
    let q: Vec<u32> = (2 * e + 4..=3 * e + 3).collect();
    let leaf_b = 3 * e + 4;
    let mut next = 3 * e + 5;
    let mut chain_ids = |count: u32| -> Vec<u32> {
        let v: Vec<u32> = (next..next + count).collect();
        next += count;
        v
    };
    let f_chain = chain_ids(e);
    let g_chain = chain_ids(e);
    let x_chain = if with_x_chain { Some(chain_ids(e)) } else { None };
    let y_chain = if with_y_chain { Some(chain_ids(e)) } else { None };
    let size = next as usize;

    let mut g = Graph::new(size);
    g.set_label(root, "root");
    for (i, &zi) in z.iter().enumerate() {
        g.add_edge(root, zi)?;
        g.set_label(zi, format!("z{}", i + 1));
    }
    g.set_label(x, "x");
    g.set_label(y, "y");
    g.set_label(leaf_a, "leafA");
    g.set_label(leaf_b, "leafB");
    g.add_edge(root, x)?;
    let mut prev = x;
    for &v in &p {
        g.add_edge(prev, v)?;
        prev = v;
    }
    g.add_edge(prev, leaf_a)?;
    g.add_edge(root, y)?;
    prev = y;
    for &v in &q {
        g.add_edge(prev, v)?;
        prev = v;
    }
    g.add_edge(prev, leaf_b)?;

    let attach_chain = |anchor: u32, chain: &[u32], g: &mut Graph| -> Result<()> {
        let mut prev = anchor;
        for &v in chain {
            g.add_edge(prev, v)?;
            prev = v;
        }
        Ok(())
    };
    attach_chain(*p.last().unwrap(), &f_chain, &mut g)?;
    attach_chain(*q.last().unwrap(), &g_chain, &mut g)?;
    if let Some(c) = &x_chain {
        attach_chain(p[0], c, &mut g)?;
    }
    if let Some(c) = &y_chain {
        attach_chain(y, c, &mut g)?;
    }

    Ok((
        g,
        TSkeleton {
            ell,
            root,
            z,
            x,
            p,
            leaf_a,
            y,
            q,
            leaf_b,
            f_chain,
            g_chain,
            x_chain,
            y_chain,
            size,
        },
    ))
}

pub struct TPrimeBuild {
    pub graph: Graph,
    pub skeleton: TSkeleton,
}

/// `T'_{2,ell}`: subdivide two edges of K_{1,ell+2} ell+1 times, then hang an
/// ell-edge descendant path from each parent of the two far leaves and from
/// the child of x. `ell+5` leaves, `6*ell+5` vertices.
pub fn t2prime(ell: usize) -> Result<TPrimeBuild> {
    let (graph, skeleton) = t_skeleton(ell, true, false)?;
    Ok(TPrimeBuild { graph, skeleton })
}

/// `T'_{3,ell}`: as T'_{2,ell} but the chain at the child of x is replaced by
/// an ell-edge path from y.
pub fn t3prime(ell: usize) -> Result<TPrimeBuild> {
    let (graph, skeleton) = t_skeleton(ell, false, true)?;
    Ok(TPrimeBuild { graph, skeleton })
}

/// One glued T_{1,ell} arm: `2*ell+1` vertices in path order, the center
/// (offset ell) adjacent to the site.
#[derive(Clone, Debug)]
pub struct GluedArm {
    pub site: u32,
    pub vertices: Vec<u32>,
}

impl GluedArm {
    pub fn center(&self) -> u32 {
        self.vertices[self.vertices.len() / 2]
    }
}

pub struct TBuild {
    pub graph: Graph,
    pub skeleton: TSkeleton,
    /// ell arms per glue site, sites ascending, arms in placement order.
    pub arms: Vec<GluedArm>,
}

impl TBuild {
    pub fn rooted(&self) -> Result<RootedTree> {
        rooted(&self.graph, self.skeleton.root)
    }
}

fn glue_t1_copies(graph: Graph, skeleton: TSkeleton) -> Result<TBuild> {
    let ell = skeleton.ell;
    let arm_len = 2 * ell + 1;
    let sites = skeleton.glue_sites();
    let n = graph.n() + sites.len() * ell * arm_len;
    let mut g = Graph::new(n);
    for (u, v) in graph.edges() {
        g.add_edge(u, v)?;
    }
    for (&v, l) in graph.labels() {
        g.set_label(v, l.clone());
    }
    let mut next = graph.n() as u32;
    let mut arms = Vec::new();
    for &site in &sites {
        for _ in 0..ell {
            let arm: Vec<u32> = (next..next + arm_len as u32).collect();
            next += arm_len as u32;
            for w in arm.windows(2) {
                g.add_edge(w[0], w[1])?;
            }
            g.add_edge(site, arm[ell])?;
            arms.push(GluedArm {
                site,
                vertices: arm,
            });
        }
    }
    Ok(TBuild {
        graph: g,
        skeleton,
        arms,
    })
}

/// `T_{2,ell}`: T'_{2,ell} with a copy of T_{1,ell} glued (root identified)
/// at x and at each original leaf.
pub fn t2(ell: usize) -> Result<TBuild> {
    let b = t2prime(ell)?;
    glue_t1_copies(b.graph, b.skeleton)
}

/// `T_{3,ell}`: same gluing applied to T'_{3,ell}.
pub fn t3(ell: usize) -> Result<TBuild> {
    let b = t3prime(ell)?;
    glue_t1_copies(b.graph, b.skeleton)
}

/// `T_{4,ell}`: T_{2,ell} plus the ell-edge path at y that T_{3,ell} has and
/// T_{2,ell} has not.
pub fn t4(ell: usize) -> Result<TBuild> {
    let (graph, skeleton) = t_skeleton(ell, true, true)?;
    glue_t1_copies(graph, skeleton)
}

// ---------------------------------------------------------------------------
// S_ell
// ---------------------------------------------------------------------------

/// `S_ell`: a (2*ell+1)-vertex spine with T_{1,ell} copies rooted at the
/// first, (ell+1)-st, (ell+2)-nd and last spine vertex, and an ell-vertex
/// path attached to the second, penultimate and ell-th vertex.
///
/// Id layout: spine `0..=2*ell` in order; glued arms follow (site order
/// first, ell+1-st, ell+2-nd, last); attached paths follow (second,
/// penultimate, ell-th), each inner-to-outer.
pub struct SEllBuild {
    pub graph: Graph,
    pub spine: Vec<u32>,
    pub arms: Vec<GluedArm>,
    pub attached_paths: Vec<Vec<u32>>,
}

pub fn s_ell(ell: usize) -> Result<SEllBuild> {
    check_ell(ell, 2)?;
    let spine_len = 2 * ell + 1;
    let arm_len = 2 * ell + 1;
    let glue_positions = [0, ell, ell + 1, 2 * ell];
    let attach_positions = [1, 2 * ell - 1, ell - 1];
    let n = spine_len + glue_positions.len() * ell * arm_len + attach_positions.len() * ell;
    let mut g = Graph::new(n);
    let spine: Vec<u32> = (0..spine_len as u32).collect();
    for w in spine.windows(2) {
        g.add_edge(w[0], w[1])?;
    }
    for (i, &v) in spine.iter().enumerate() {
        g.set_label(v, format!("spine[{i}]"));
    }
    let mut next = spine_len as u32;
    let mut arms = Vec::new();
    for &pos in &glue_positions {
        for _ in 0..ell {
            let arm: Vec<u32> = (next..next + arm_len as u32).collect();
            next += arm_len as u32;
            for w in arm.windows(2) {
                g.add_edge(w[0], w[1])?;
            }
            g.add_edge(spine[pos], arm[ell])?;
            arms.push(GluedArm {
                site: spine[pos],
                vertices: arm,
            });
        }
    }
    let mut attached_paths = Vec::new();
    for &pos in &attach_positions {
        let path: Vec<u32> = (next..next + ell as u32).collect();
        next += ell as u32;
        let mut prev = spine[pos];
        for &v in &path {
            g.add_edge(prev, v)?;
            prev = v;
        }
        attached_paths.push(path);
    }
    Ok(SEllBuild {
        graph: g,
        spine,
        arms,
        attached_paths,
    })
}

// ---------------------------------------------------------------------------
// Classification targets
// ---------------------------------------------------------------------------

/// Offsets of the ell disjoint T_{1,ell} copies inside a target graph.
pub struct T1Copy {
    pub root: u32,
    pub arms: Vec<Vec<u32>>,
}

pub struct TargetBuild {
    pub graph: Graph,
    pub variant: PosiVariant,
    pub tree: TBuild,
    pub copies: Vec<T1Copy>,
}

/// `T_{2,ell} (or T_{3,ell}) + ell * T_{1,ell}`: the Theorem-2 target.
/// The tree occupies `0..tree.graph.n()`, then the copies follow in order.
pub fn target_posi(variant: PosiVariant, ell: usize) -> Result<TargetBuild> {
    check_ell(ell, 2)?;
    let tree = match variant {
        PosiVariant::T2 => t2(ell)?,
        PosiVariant::T3 => t3(ell)?,
    };
    target_from_tree(variant, ell, tree)
}

/// `T_{4,ell} + ell * T_{1,ell}`: the zigzag embedding target.
pub fn target_t4(ell: usize) -> Result<TargetBuild> {
    check_ell(ell, 2)?;
    // variant tag is informational only here; the tree is T4
    let tree = t4(ell)?;
    target_from_tree(PosiVariant::T2, ell, tree)
}

fn target_from_tree(variant: PosiVariant, ell: usize, tree: TBuild) -> Result<TargetBuild> {
    let one = t1(ell)?;
    let mut graph = tree.graph.clone();
    let mut copies = Vec::with_capacity(ell);
    for _ in 0..ell {
        let shift = graph.n() as u32;
        graph = graph.disjoint_union(&one.graph);
        copies.push(T1Copy {
            root: shift,
            arms: one
                .arms
                .iter()
                .map(|arm| arm.iter().map(|&v| v + shift).collect())
                .collect(),
        });
    }
    Ok(TargetBuild {
        graph,
        variant,
        tree,
        copies,
    })
}

// ---------------------------------------------------------------------------
// FamilySpec (CLI surface)
// ---------------------------------------------------------------------------

/// Parameterized family selector, the `gen` subcommand's vocabulary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    PdGrid { n: usize },
    PdGridGeneral { stars: usize, paths: usize, spacing: usize, padding: usize },
    DeathStar { h: usize },
    DeathStarSubdiv { h: usize },
    T1 { ell: usize },
    T2Prime { ell: usize },
    T3Prime { ell: usize },
    T2 { ell: usize },
    T3 { ell: usize },
    T4 { ell: usize },
    SEll { ell: usize },
    TargetPosi { variant: PosiVariant, ell: usize },
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    Ok(match spec {
        FamilySpec::PdGrid { n } => pd_grid(*n)?.graph,
        FamilySpec::PdGridGeneral { stars, paths, spacing, padding } => {
            pd_grid_general(*stars, *paths, *spacing, *padding)?.graph
        }
        FamilySpec::DeathStar { h } => death_star(*h)?.graph,
        FamilySpec::DeathStarSubdiv { h } => death_star_subdivided(*h)?.graph,
        FamilySpec::T1 { ell } => t1(*ell)?.graph,
        FamilySpec::T2Prime { ell } => t2prime(*ell)?.graph,
        FamilySpec::T3Prime { ell } => t3prime(*ell)?.graph,
        FamilySpec::T2 { ell } => t2(*ell)?.graph,
        FamilySpec::T3 { ell } => t3(*ell)?.graph,
        FamilySpec::T4 { ell } => t4(*ell)?.graph,
        FamilySpec::SEll { ell } => s_ell(*ell)?.graph,
        FamilySpec::TargetPosi { variant, ell } => target_posi(*variant, *ell)?.graph,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaves(g: &Graph) -> usize {
        (0..g.n() as u32).filter(|&v| g.degree(v) == 1).count()
    }

    #[test]
    fn pd_grid_counts() {
        let b = pd_grid(6).unwrap();
        assert_eq!(b.graph.n(), 42);
        assert_eq!(b.graph.edge_count(), 66);
        let b1 = pd_grid(1).unwrap();
        assert_eq!(b1.graph.n(), 2);
        assert_eq!(b1.graph.edge_count(), 1);
        assert!(pd_grid(0).is_err());
    }

    #[test]
    fn pd_grid_star_deletion_leaves_rows() {
        let b = pd_grid(4).unwrap();
        let comps = b.graph.components(&b.star_ids());
        assert_eq!(comps.len(), 4);
        assert!(comps.iter().all(|c| c.len() == 4 && b.graph.is_path(c).unwrap()));
    }

    #[test]
    fn pd_grid_general_specializes() {
        let a = pd_grid(4).unwrap().graph;
        let b = pd_grid_general(4, 4, 1, 0).unwrap().graph;
        assert_eq!(a.edges(), b.edges());
    }

    #[test]
    fn death_star_counts_and_structure() {
        assert_eq!(death_star(1).unwrap().graph.n(), 2);
        let b = death_star(5).unwrap();
        assert_eq!(b.graph.n(), 36);
        assert!(b.graph.is_connected());
        // stars form an independent set
        let stars = b.star_ids();
        for (i, &s) in stars.iter().enumerate() {
            for &t in &stars[i + 1..] {
                assert!(!b.graph.has_edge(s, t));
            }
        }
        // every path vertex is adjacent to exactly one star
        for p in 0..b.path_len as u32 {
            let c = b.graph.neighbors(p).iter().filter(|&&w| w >= b.path_len as u32).count();
            assert_eq!(c, 1);
        }
        assert!(death_star(0).is_err());
        assert!(death_star(21).is_err());
    }

    #[test]
    fn death_star_edge_count_recurrence() {
        for h in 1..=6 {
            let b = death_star(h).unwrap();
            assert_eq!(b.graph.n(), (1 << h) - 1 + h);
            assert_eq!(b.graph.edge_count(), (1 << (h + 1)) - 3);
        }
    }

    #[test]
    fn t1_counts() {
        let b = t1(1).unwrap();
        assert_eq!(b.graph.n(), 4); // a claw
        assert_eq!(b.graph.degree(0), 1);
        let b5 = t1(5).unwrap();
        assert_eq!(b5.graph.n(), 56);
        assert!(b5.graph.is_tree());
        // every non-root vertex has degree <= 3
        assert!((1..b5.graph.n() as u32).all(|v| b5.graph.degree(v) <= 3));
        assert!(t1(0).is_err());
    }

    #[test]
    fn tprime_counts() {
        for ell in 2..=10 {
            for b in [t2prime(ell).unwrap(), t3prime(ell).unwrap()] {
                assert_eq!(b.graph.n(), 6 * ell + 5, "ell={ell}");
                assert_eq!(leaves(&b.graph), ell + 5, "ell={ell}");
                assert!(b.graph.is_tree());
            }
        }
        assert!(t2prime(1).is_err());
    }

    #[test]
    fn tprime_variants_differ_in_one_attachment() {
        let a = t2prime(3).unwrap().graph;
        let b = t3prime(3).unwrap().graph;
        let ea: std::collections::BTreeSet<_> = a.edges().into_iter().collect();
        let eb: std::collections::BTreeSet<_> = b.edges().into_iter().collect();
        let only_a: Vec<_> = ea.difference(&eb).collect();
        let only_b: Vec<_> = eb.difference(&ea).collect();
        // the first chain edge moves from the child of x to y
        assert_eq!(only_a.len(), 1);
        assert_eq!(only_b.len(), 1);
    }

    #[test]
    fn t2_t3_equal_counts_and_tree() {
        for ell in 2..=4 {
            let a = t2(ell).unwrap();
            let b = t3(ell).unwrap();
            assert_eq!(a.graph.n(), b.graph.n());
            assert_eq!(a.graph.n(), 6 * ell + 5 + (ell + 3) * ell * (2 * ell + 1));
            assert!(a.graph.is_tree());
            assert!(b.graph.is_tree());
        }
    }

    #[test]
    fn t4_extends_t2() {
        let a = t2(2).unwrap();
        let b = t4(2).unwrap();
        assert_eq!(b.graph.n(), a.graph.n() + 2);
        assert!(b.graph.is_tree());
        assert!(b.skeleton.x_chain.is_some());
        assert!(b.skeleton.y_chain.is_some());
    }

    #[test]
    fn s_ell_counts() {
        let b = s_ell(2).unwrap();
        assert!(b.graph.is_tree());
        for ell in 2..=5 {
            let b = s_ell(ell).unwrap();
            assert_eq!(b.graph.n(), (2 * ell + 1) + 4 * ell * (2 * ell + 1) + 3 * ell);
        }
        assert!(s_ell(1).is_err());
    }

    #[test]
    fn target_posi_shape() {
        let t = target_posi(PosiVariant::T2, 2).unwrap();
        assert_eq!(t.graph.components(&[]).len(), 3);
        assert!(t.graph.is_forest());
        assert_eq!(
            t.graph.n(),
            t2(2).unwrap().graph.n() + 2 * t1(2).unwrap().graph.n()
        );
    }

    #[test]
    fn generators_are_deterministic() {
        let a = t2(3).unwrap().graph;
        let b = t2(3).unwrap().graph;
        assert_eq!(a.edges(), b.edges());
        assert_eq!(a.labels(), b.labels());
    }
}
