//! Constructive embeddings of the target families into large constellations:
//! model extension along a fresh path, and the two skeleton constructions
//! that realize `T_{2/3,ell} + ell T_{1,ell}` in interrupted constellations
//! and `T_{4,ell} + ell T_{1,ell}` in q-zigzagged ones.
//!
//! Every stage checks the adjacency facts it depends on and fails with an
//! invariant error naming the stage; the final model is always validated
//! against the generated target pattern with `verify_model`, which is the
//! oracle for this whole module.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bits::BitSet;
use crate::constellation::{Constellation, ConstellationIndex};
use crate::error::{Error, Result};
use crate::families::{self, PosiVariant, TargetBuild};
use crate::graph::Graph;
use crate::model::{verify_model, InducedMinorModel};

// ---------------------------------------------------------------------------
// extend_model: grow a pendant (2*ell+1)-path copy on an untouched path
// ---------------------------------------------------------------------------

/// Extends `m` by a disjoint `(2*ell+1)`-vertex path whose center becomes
/// adjacent to pattern vertex `u`, realized on constellation path
/// `path_index`, which no branch set of `m` may touch. `z` must be a star in
/// the branch set of `u`. The new pattern vertices are appended to the
/// pattern in path order, outermost-before-center first.
pub fn extend_model(
    c: &Constellation,
    idx: &ConstellationIndex,
    m: &InducedMinorModel,
    path_index: usize,
    z: u32,
    u: u32,
    ell: usize,
) -> Result<InducedMinorModel> {
    if ell < 1 {
        return Err(Error::invalid("extend_model requires ell >= 1"));
    }
    if !c.is_d_ample(idx, ell + 1) {
        return Err(Error::invalid(
            "extend_model requires a strengthened (ell+1)-ample constellation",
        ));
    }
    if path_index >= c.paths.len() {
        return Err(Error::invalid("path index out of range"));
    }
    m.pattern.check_vertex(u)?;
    if !m.branch[u as usize].contains(&z) {
        return Err(Error::invalid(format!(
            "star {z} is not in the branch set of pattern vertex {u}"
        )));
    }
    let zi = *idx
        .star_index
        .get(&z)
        .ok_or_else(|| Error::invalid(format!("{z} is not a star")))?;
    let path = &c.paths[path_index];
    let touched = m
        .branch
        .iter()
        .flatten()
        .any(|v| idx.on_path.get(v).is_some_and(|&(pi, _)| pi == path_index));
    if touched {
        return Err(Error::invalid(format!(
            "path {path_index} is touched by the model"
        )));
    }

    // leftmost maximal subpath whose ends are adjacent to z and which no
    // other star touches
    let other_star = |pos: usize| idx.stars_at[path_index][pos].iter().any(|&s| s != zi);
    let zpos = &idx.star_positions[zi][path_index];
    let mut found: Option<(usize, usize)> = None;
    for &p in zpos {
        if other_star(p) {
            continue;
        }
        let mut lo = p;
        while lo > 0 && !other_star(lo - 1) {
            lo -= 1;
        }
        let mut hi = p;
        while hi + 1 < path.len() && !other_star(hi + 1) {
            hi += 1;
        }
        let plo = zpos.iter().copied().find(|&x| x >= lo).unwrap();
        let phi = zpos.iter().rev().copied().find(|&x| x <= hi).unwrap();
        found = Some((plo, phi));
        break;
    }
    let (plo, phi) = found.ok_or_else(|| {
        Error::invalid(format!(
            "no admissible subpath for star {z} on path {path_index}"
        ))
    })?;
    if plo < ell || phi + ell >= path.len() {
        return Err(Error::invariant(
            "extend-side-vertices",
            "too few vertices before or after the central subpath",
        ));
    }
    for pos in (plo - ell..plo).chain(phi + 1..=phi + ell) {
        if !idx.stars_at[path_index][pos].is_empty() {
            return Err(Error::invariant(
                "extend-side-vertices",
                format!("side vertex at position {pos} is adjacent to a star"),
            ));
        }
    }

    // extended pattern: a chain of 2*ell+1 new vertices, center adjacent to u
    let old_n = m.pattern.n();
    let mut pattern = Graph::new(old_n + 2 * ell + 1);
    for (a, b) in m.pattern.edges() {
        pattern.add_edge(a, b)?;
    }
    for (&v, l) in m.pattern.labels() {
        pattern.set_label(v, l.clone());
    }
    let first = old_n as u32;
    for i in 0..2 * ell as u32 {
        pattern.add_edge(first + i, first + i + 1)?;
    }
    pattern.add_edge(u, first + ell as u32)?;

    let mut branch = m.branch.clone();
    for pos in plo - ell..plo {
        branch.push(vec![path[pos]]);
    }
    branch.push(path[plo..=phi].to_vec());
    for pos in phi + 1..=phi + ell {
        branch.push(vec![path[pos]]);
    }
    let out = InducedMinorModel::new(pattern, m.host.clone(), branch);
    match verify_model(&out)? {
        crate::model::Verdict::Valid => Ok(out),
        crate::model::Verdict::Violation(v) => Err(Error::invariant(
            "extend-verify",
            format!("extended model invalid: {v}"),
        )),
    }
}

// ---------------------------------------------------------------------------
// Shared skeleton machinery for the two embeddings
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct ArmPlacement {
    pub site_star: u32,
    pub path: usize,
    pub window: (usize, usize),
    pub center: (usize, usize),
}

/// Intermediate objects of an embedding run, for debugging and tests.
#[derive(Debug, Clone, Serialize)]
pub struct EmbedTrace {
    pub mode: String,
    /// role name -> star vertex ids
    pub roles: BTreeMap<String, Vec<u32>>,
    /// the leafA-leafB route: path and interior range
    pub route_path: usize,
    pub route_interior: (usize, usize),
    /// root branch span on the route path
    pub root_span: (usize, usize),
    /// first/last interior positions adjacent to inner stars (the x'/y'
    /// analogues)
    pub x_prime: usize,
    pub y_prime: usize,
    pub arm_path_primary: usize,
    pub arm_path_secondary: Option<usize>,
    pub arms: Vec<ArmPlacement>,
    /// zigzag only: the direct routes (star order-index, partner order-index,
    /// interior range on the fixed path)
    pub direct_routes: Option<Vec<(usize, usize, usize, usize)>>,
    /// zigzag only: order-indices whose direct-route pairs touch the window
    /// route (the z_j hits and their partners)
    pub z_hits: Option<(Vec<usize>, Vec<usize>)>,
    /// zigzag only: the eta cutoff index (1-based, as in the construction)
    pub eta: Option<usize>,
}

/// Cast of host stars (as order-indices) into the skeleton roles.
struct Roles {
    leaf_a: usize,
    x_node: usize,
    lambdas: Vec<usize>,
    y_node: usize,
    leaf_b: usize,
    k1: Vec<usize>,
}

struct Builder<'a> {
    c: &'a Constellation,
    idx: &'a ConstellationIndex,
    ell: usize,
    /// star order-indices that carry branch sets; arm side vertices must
    /// avoid all of them
    branch_stars: BitSet,
    used: Vec<BitSet>,
    /// branch sets keyed by target pattern id, filled in as we go
    branch: BTreeMap<u32, Vec<u32>>,
}

impl<'a> Builder<'a> {
    fn new(c: &'a Constellation, idx: &'a ConstellationIndex, ell: usize) -> Self {
        Builder {
            c,
            idx,
            ell,
            branch_stars: BitSet::new(c.stars.len()),
            used: c.paths.iter().map(|p| BitSet::new(p.len())).collect(),
            branch: BTreeMap::new(),
        }
    }

    fn star(&self, order_idx: usize) -> u32 {
        self.c.stars[order_idx]
    }

    /// order-indices of branch stars adjacent to position `pos` of path `pi`
    fn branch_stars_at(&self, pi: usize, pos: usize) -> Vec<usize> {
        self.idx.stars_at[pi][pos]
            .iter()
            .copied()
            .filter(|&s| self.branch_stars.contains(s as u32))
            .collect()
    }

    fn assign(&mut self, pattern_id: u32, verts: Vec<u32>) {
        let mut v = verts;
        v.sort_unstable();
        let prev = self.branch.insert(pattern_id, v);
        assert!(prev.is_none(), "pattern id {pattern_id} assigned twice");
    }

    fn mark_used(&mut self, pi: usize, lo: usize, hi: usize) {
        for pos in lo..=hi {
            self.used[pi].insert(pos as u32);
        }
    }

    fn piece(&mut self, pattern_id: u32, pi: usize, lo: usize, hi: usize) {
        self.mark_used(pi, lo, hi);
        self.assign(pattern_id, self.c.paths[pi][lo..=hi].to_vec());
    }

    /// Checks that positions lo..=hi of path pi are unused and that their
    /// branch-star adjacency is exactly `allowed` (order-indices).
    fn check_span(&self, stage: &str, pi: usize, lo: usize, hi: usize, allowed: &[usize]) -> Result<()> {
        if hi >= self.c.paths[pi].len() {
            return Err(Error::invariant(stage, "span leaves the path"));
        }
        for pos in lo..=hi {
            if self.used[pi].contains(pos as u32) {
                return Err(Error::invariant(
                    stage,
                    format!("position {pos} of path {pi} already used"),
                ));
            }
            for s in self.branch_stars_at(pi, pos) {
                if !allowed.contains(&s) {
                    return Err(Error::invariant(
                        stage,
                        format!(
                            "position {pos} of path {pi} is adjacent to branch star {}",
                            self.star(s)
                        ),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Places one glued arm for `site` (a star order-index): a window of
    /// `2*ell+1` pattern vertices `ids` (path order, center in the middle)
    /// around a maximal site-adjacent run on some path. Scans paths
    /// ascending, positions ascending, takes the first valid window.
    fn place_arm(&mut self, site: usize, ids: &[u32]) -> Result<ArmPlacement> {
        let ell = self.ell;
        assert_eq!(ids.len(), 2 * ell + 1);
        for pi in 0..self.c.paths.len() {
            let positions = &self.idx.star_positions[site][pi];
            let len = self.c.paths[pi].len();
            let mut pj = 0;
            while pj < positions.len() {
                // maximal run of consecutive positions all adjacent to the
                // site (and to no other branch star), starting here
                let plo = positions[pj];
                let mut phi = plo;
                while pj + 1 < positions.len() && positions[pj + 1] == phi + 1 {
                    pj += 1;
                    phi = positions[pj];
                }
                pj += 1;
                if plo < ell || phi + ell >= len {
                    continue;
                }
                let (wlo, whi) = (plo - ell, phi + ell);
                // window must be unused, with unused neighbors, center run
                // adjacent to the site only, sides star-free
                let boundary_clear = (wlo == 0 || !self.used[pi].contains(wlo as u32 - 1))
                    && (whi + 1 == len || !self.used[pi].contains(whi as u32 + 1));
                if !boundary_clear {
                    continue;
                }
                let center_ok = self.check_span("arm-center", pi, plo, phi, &[site]).is_ok();
                let sides_ok = self.check_span("arm-side", pi, wlo, plo - 1, &[]).is_ok()
                    && self.check_span("arm-side", pi, phi + 1, whi, &[]).is_ok();
                if !(center_ok && sides_ok) {
                    continue;
                }
                // place: sides are singletons, the run is the center branch
                for (k, pos) in (wlo..plo).enumerate() {
                    self.piece(ids[k], pi, pos, pos);
                }
                self.piece(ids[ell], pi, plo, phi);
                for (k, pos) in (phi + 1..=whi).enumerate() {
                    self.piece(ids[ell + 1 + k], pi, pos, pos);
                }
                return Ok(ArmPlacement {
                    site_star: self.star(site),
                    path: pi,
                    window: (wlo, whi),
                    center: (plo, phi),
                });
            }
        }
        Err(Error::invariant(
            "arm-placement",
            format!("no admissible window for an arm at star {}", self.star(site)),
        ))
    }
}

/// A subdivided arm of the skeleton on one path: the chain
/// `node — p_2 — ... — p_{ell+1} — leaf` plus the pendant chain beyond the
/// leaf, plus optionally the pendant chain beyond the node (the x-chain).
struct ArmIds<'t> {
    node: u32,
    chain: &'t [u32],
    leaf: u32,
    pendant_at_leaf: &'t [u32],
    pendant_at_node: Option<&'t [u32]>,
}

impl Builder<'_> {
    /// Lays out one subdivided arm between star `node_star` and star
    /// `leaf_star` (order-indices) on path `pi`. The node-side pendant chain
    /// extends away from the leaf, the leaf-side pendant chain away from the
    /// node.
    fn build_arm(&mut self, stage: &str, pi: usize, node_star: usize, leaf_star: usize, ids: &ArmIds) -> Result<()> {
        let ell = self.ell;
        let t_node = *self.idx.star_positions[node_star][pi]
            .first()
            .ok_or_else(|| Error::invariant(stage, "node star misses the arm path"))?;
        let t_leaf = *self.idx.star_positions[leaf_star][pi]
            .first()
            .ok_or_else(|| Error::invariant(stage, "leaf star misses the arm path"))?;
        // node run: maximal consecutive node-adjacent positions around t_node
        let node_positions = &self.idx.star_positions[node_star][pi];
        let mut nlo = t_node;
        while node_positions.binary_search(&(nlo.wrapping_sub(1))).is_ok() {
            nlo -= 1;
        }
        let mut nhi = t_node;
        while node_positions.binary_search(&(nhi + 1)).is_ok() {
            nhi += 1;
        }
        let toward_leaf: isize = if t_leaf < nlo { -1 } else { 1 };
        let near: usize = if toward_leaf < 0 { nlo } else { nhi };
        // p2 run
        self.check_span(stage, pi, nlo, nhi, &[node_star])?;
        // middle singletons p_3..p_ell
        let mut cursor = near as isize + toward_leaf;
        let mut middles = Vec::new();
        for _ in 0..ell.saturating_sub(2) {
            let pos = cursor as usize;
            self.check_span(stage, pi, pos, pos, &[])?;
            middles.push(pos);
            cursor += toward_leaf;
        }
        // p_{ell+1}: run from cursor through t_leaf
        let (qlo, qhi) = if toward_leaf < 0 {
            (t_leaf, cursor as usize)
        } else {
            (cursor as usize, t_leaf)
        };
        if qlo > qhi {
            return Err(Error::invariant(stage, "leaf attachment overlaps the chain"));
        }
        self.check_span(stage, pi, qlo, qhi, &[leaf_star])?;
        // pendant chain beyond the leaf
        let mut leaf_pendant = Vec::new();
        let mut p = t_leaf as isize + toward_leaf;
        for _ in 0..ell {
            if p < 0 {
                return Err(Error::invariant(stage, "leaf pendant chain leaves the path"));
            }
            let pos = p as usize;
            self.check_span(stage, pi, pos, pos, &[])?;
            leaf_pendant.push(pos);
            p += toward_leaf;
        }
        // pendant chain beyond the node (T2/T4 only)
        let mut node_pendant = Vec::new();
        if ids.pendant_at_node.is_some() {
            let far = if toward_leaf < 0 { nhi as isize } else { nlo as isize };
            let mut p = far - toward_leaf;
            for _ in 0..ell {
                if p < 0 {
                    return Err(Error::invariant(stage, "node pendant chain leaves the path"));
                }
                let pos = p as usize;
                self.check_span(stage, pi, pos, pos, &[])?;
                node_pendant.push(pos);
                p -= toward_leaf;
            }
        }

        // all spans verified; commit
        self.assign(ids.node, vec![self.star(node_star)]);
        self.assign(ids.leaf, vec![self.star(leaf_star)]);
        self.piece(ids.chain[0], pi, nlo, nhi);
        for (k, &pos) in middles.iter().enumerate() {
            self.piece(ids.chain[1 + k], pi, pos, pos);
        }
        self.piece(ids.chain[ell - 1], pi, qlo, qhi);
        for (k, &pos) in leaf_pendant.iter().enumerate() {
            self.piece(ids.pendant_at_leaf[k], pi, pos, pos);
        }
        if let Some(pend) = ids.pendant_at_node {
            for (k, &pos) in node_pendant.iter().enumerate() {
                self.piece(pend[k], pi, pos, pos);
            }
        }
        Ok(())
    }
}

/// Shortest route between two stars, ties broken by path index then leftmost
/// interior. Returns (path, lo, hi, a_is_at_lo).
fn shortest_route(
    c: &Constellation,
    idx: &ConstellationIndex,
    a: usize,
    b: usize,
) -> Option<(usize, usize, usize, bool)> {
    let mut best: Option<(usize, usize, usize, bool)> = None;
    let mut best_len = usize::MAX;
    for pi in 0..c.paths.len() {
        for &pa in &idx.star_positions[a][pi] {
            for &pb in &idx.star_positions[b][pi] {
                let (lo, hi, a_at_lo) = if pa <= pb { (pa, pb, true) } else { (pb, pa, false) };
                let len = hi - lo;
                if len < best_len {
                    best_len = len;
                    best = Some((pi, lo, hi, a_at_lo));
                }
            }
        }
    }
    best
}

/// Core skeleton construction shared by both embeddings: realizes the target
/// tree plus the ell extra T_1 copies over the given role cast, then places
/// all (2*ell+3)*ell glued arms.
fn build_model(
    c: &Constellation,
    idx: &ConstellationIndex,
    ell: usize,
    roles: Roles,
    target: &TargetBuild,
    mode: &str,
) -> Result<(InducedMinorModel, EmbedTrace)> {
    let mut b = Builder::new(c, idx, ell);
    for &s in roles
        .k1
        .iter()
        .chain([roles.leaf_a, roles.x_node, roles.y_node, roles.leaf_b].iter())
        .chain(roles.lambdas.iter())
    {
        b.branch_stars.insert(s as u32);
    }
    let sk = &target.tree.skeleton;

    // stage: the leafA-leafB route
    let (q_path, lo, hi, a_at_lo) = shortest_route(c, idx, roles.leaf_a, roles.leaf_b)
        .ok_or_else(|| Error::invariant("skeleton-route", "no route between the leaf stars"))?;

    // stage: the root branch R = minimal interior subpath adjacent to every
    // inner star
    let inner: Vec<usize> = {
        let mut v = vec![roles.x_node, roles.y_node];
        v.extend(&roles.lambdas);
        v
    };
    let mut rlo_bound = usize::MAX;
    let mut rhi_bound = 0usize;
    for &s in &inner {
        let positions = &idx.star_positions[s][q_path];
        let within: Vec<usize> = positions
            .iter()
            .copied()
            .filter(|&p| p >= lo && p <= hi)
            .collect();
        if within.is_empty() {
            return Err(Error::invariant(
                "skeleton-root",
                format!("inner star {} has no neighbor on the route interior", c.stars[s]),
            ));
        }
        rlo_bound = rlo_bound.min(*within.last().unwrap());
        rhi_bound = rhi_bound.max(*within.first().unwrap());
    }
    let (rlo, rhi) = (rlo_bound.min(rhi_bound), rhi_bound.max(rlo_bound));
    for &s in &inner {
        let positions = &idx.star_positions[s][q_path];
        let i = positions.partition_point(|&p| p < rlo);
        if i >= positions.len() || positions[i] > rhi {
            return Err(Error::invariant(
                "skeleton-root",
                format!("inner star {} does not touch the root span", c.stars[s]),
            ));
        }
    }
    b.check_span("skeleton-root", q_path, rlo, rhi, &inner)?;
    b.piece(sk.root, q_path, rlo, rhi);

    // stage: orient the inner stars and map the lambdas
    let first_pos = |s: usize| idx.star_positions[s][q_path].first().copied().unwrap();
    let mut ordered = inner.clone();
    ordered.sort_by_key(|&s| (first_pos(s), s));
    if !a_at_lo {
        ordered.reverse();
    }
    let x_node = ordered[0];
    let y_node = *ordered.last().unwrap();
    if x_node == y_node {
        return Err(Error::invariant("skeleton-orient", "x and y roles collide"));
    }
    let lambdas: Vec<usize> = ordered[1..ordered.len() - 1].to_vec();
    for (k, &lam) in lambdas.iter().enumerate() {
        b.assign(sk.z[k], vec![c.stars[lam]]);
    }

    // stage: the two subdivided arms on a second path (and the y-chain on a
    // third when the variant calls for it)
    let needs_third_path = sk.y_chain.is_some();
    let mut q2 = None;
    for pi in 0..c.paths.len() {
        if pi == q_path {
            continue;
        }
        let mut attempt = b.clone_shallow();
        let arm1 = ArmIds {
            node: sk.x,
            chain: &sk.p,
            leaf: sk.leaf_a,
            pendant_at_leaf: &sk.f_chain,
            pendant_at_node: sk.x_chain.as_deref(),
        };
        let arm2 = ArmIds {
            node: sk.y,
            chain: &sk.q,
            leaf: sk.leaf_b,
            pendant_at_leaf: &sk.g_chain,
            pendant_at_node: None,
        };
        if attempt.build_arm("skeleton-arm1", pi, x_node, roles.leaf_a, &arm1).is_ok()
            && attempt.build_arm("skeleton-arm2", pi, y_node, roles.leaf_b, &arm2).is_ok()
        {
            b = attempt;
            q2 = Some(pi);
            break;
        }
    }
    let q2 = q2.ok_or_else(|| {
        Error::invariant("skeleton-arms", "no path accommodates the two subdivided arms")
    })?;

    let mut q3 = None;
    if needs_third_path {
        let chain = sk.y_chain.as_ref().unwrap();
        'outer: for pi in 0..c.paths.len() {
            if pi == q_path || pi == q2 {
                continue;
            }
            for dir in [1isize, -1] {
                let mut attempt = b.clone_shallow();
                if attempt.build_pendant_at_star("skeleton-ychain", pi, y_node, chain, dir).is_ok() {
                    b = attempt;
                    q3 = Some(pi);
                    break 'outer;
                }
            }
        }
        if q3.is_none() {
            return Err(Error::invariant(
                "skeleton-ychain",
                "no path accommodates the pendant chain at y",
            ));
        }
    }

    // stage: the ell isolated-star roots of the extra T_1 copies
    for (j, copy) in target.copies.iter().enumerate() {
        b.assign(copy.root, vec![c.stars[roles.k1[j]]]);
    }

    // stage: all glued arms, in target id order
    let mut site_to_star: BTreeMap<u32, usize> = BTreeMap::new();
    for (k, &z) in sk.z.iter().enumerate() {
        site_to_star.insert(z, lambdas[k]);
    }
    site_to_star.insert(sk.x, x_node);
    site_to_star.insert(sk.leaf_a, roles.leaf_a);
    site_to_star.insert(sk.leaf_b, roles.leaf_b);
    let mut arms = Vec::new();
    for arm in &target.tree.arms {
        let star = site_to_star[&arm.site];
        arms.push(b.place_arm(star, &arm.vertices)?);
    }
    for (j, copy) in target.copies.iter().enumerate() {
        for arm in &copy.arms {
            arms.push(b.place_arm(roles.k1[j], arm)?);
        }
    }

    // final assembly and verification
    let mut branch: Vec<Vec<u32>> = vec![Vec::new(); target.graph.n()];
    for (id, verts) in &b.branch {
        branch[*id as usize] = verts.clone();
    }
    let model = InducedMinorModel::new(target.graph.clone(), c.graph.clone(), branch);
    match verify_model(&model)? {
        crate::model::Verdict::Valid => {}
        crate::model::Verdict::Violation(v) => {
            return Err(Error::invariant("final-verification", format!("{v}")))
        }
    }
    let roles_out: BTreeMap<String, Vec<u32>> = BTreeMap::from([
        ("leaf_a".into(), vec![c.stars[roles.leaf_a]]),
        ("x_node".into(), vec![c.stars[x_node]]),
        ("lambdas".into(), lambdas.iter().map(|&s| c.stars[s]).collect()),
        ("y_node".into(), vec![c.stars[y_node]]),
        ("leaf_b".into(), vec![c.stars[roles.leaf_b]]),
        ("k1".into(), roles.k1.iter().map(|&s| c.stars[s]).collect()),
    ]);
    let trace = EmbedTrace {
        mode: mode.to_string(),
        roles: roles_out,
        route_path: q_path,
        route_interior: (lo, hi),
        root_span: (rlo, rhi),
        x_prime: rlo,
        y_prime: rhi,
        arm_path_primary: q2,
        arm_path_secondary: q3,
        arms,
        direct_routes: None,
        z_hits: None,
        eta: None,
    };
    Ok((model, trace))
}

impl<'a> Builder<'a> {
    fn clone_shallow(&self) -> Builder<'a> {
        Builder {
            c: self.c,
            idx: self.idx,
            ell: self.ell,
            branch_stars: self.branch_stars.clone(),
            used: self.used.clone(),
            branch: self.branch.clone(),
        }
    }

    /// Pendant chain of `ell` singletons whose first vertex is adjacent to
    /// the given star, running in direction `dir` from the star's first
    /// attachment on path `pi`.
    fn build_pendant_at_star(
        &mut self,
        stage: &str,
        pi: usize,
        star: usize,
        ids: &[u32],
        dir: isize,
    ) -> Result<()> {
        let t = *self.idx.star_positions[star][pi]
            .first()
            .ok_or_else(|| Error::invariant(stage, "star misses the chain path"))?;
        let mut positions = vec![t];
        let mut p = t as isize + dir;
        for _ in 1..self.ell {
            if p < 0 {
                return Err(Error::invariant(stage, "chain leaves the path"));
            }
            positions.push(p as usize);
            p += dir;
        }
        self.check_span(
            stage,
            pi,
            *positions.iter().min().unwrap(),
            *positions.iter().max().unwrap(),
            &[star],
        )?;
        // only the first vertex may touch the star
        for &pos in &positions[1..] {
            if self.branch_stars_at(pi, pos).contains(&star) {
                return Err(Error::invariant(stage, "chain interior touches the star"));
            }
        }
        for (k, &pos) in positions.iter().enumerate() {
            self.piece(ids[k], pi, pos, pos);
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Public embeddings
// ---------------------------------------------------------------------------

fn gate_common(c: &Constellation, idx: &ConstellationIndex, ell: usize) -> Result<()> {
    if !c.is_d_ample(idx, ell + 1) {
        return Err(Error::invalid(
            "constellation is not strengthened (ell+1)-ample",
        ));
    }
    Ok(())
}

/// Builds a verify_model-valid model of `t2(ell) + ell t1(ell)` (or the t3
/// variant) in an interrupted, strengthened (ell+1)-ample constellation with
/// at least `2*ell+4` stars and `(2*ell+3)*ell + 1` paths.
pub fn embed_interrupted(
    c: &Constellation,
    ell: usize,
    variant: PosiVariant,
) -> Result<(InducedMinorModel, EmbedTrace)> {
    if ell < 2 {
        return Err(Error::invalid("embed_interrupted requires ell >= 2"));
    }
    let min_stars = 2 * ell + 4;
    let min_paths = (2 * ell + 3) * ell + 1;
    if c.stars.len() < min_stars {
        return Err(Error::invalid(format!(
            "need at least {min_stars} stars, got {}",
            c.stars.len()
        )));
    }
    if c.paths.len() < min_paths {
        return Err(Error::invalid(format!(
            "need at least {min_paths} paths, got {}",
            c.paths.len()
        )));
    }
    let idx = c.index()?;
    if !c.check_interrupted(&idx) {
        return Err(Error::invalid("constellation is not interrupted"));
    }
    gate_common(c, &idx, ell)?;

    // role cast over the first 2*ell+4 stars: the K1 roles are split between
    // the two ends of the order, the skeleton block sits in the middle
    let a = ell.div_ceil(2);
    let bcount = ell - a;
    let k1: Vec<usize> = (0..a).chain(min_stars - bcount..min_stars).collect();
    let roles = Roles {
        leaf_a: a,
        x_node: a + 1,
        lambdas: (a + 2..a + ell + 2).collect(),
        y_node: a + ell + 2,
        leaf_b: a + ell + 3,
        k1,
    };
    let target = families::target_posi(variant, ell)?;
    let mode = format!("interrupted-{variant}");
    build_model(c, &idx, ell, roles, &target, &mode)
}

/// Builds a verify_model-valid model of `t4(ell) + ell t1(ell)` in a
/// q-zigzagged, strengthened (ell+1)-ample constellation with at least
/// `2(q+2)(q+ell+2)` stars and `(2*ell+3)*ell + 2` paths. The paper-side
/// identification (direct routes, z hits, eta) is recorded in the trace.
pub fn embed_zigzagged(
    c: &Constellation,
    ell: usize,
    q: usize,
) -> Result<(InducedMinorModel, EmbedTrace)> {
    if q < 1 || ell <= q {
        return Err(Error::invalid("embed_zigzagged requires ell > q >= 1"));
    }
    let min_stars = 2 * (q + 2) * (q + ell + 2);
    let min_paths = (2 * ell + 3) * ell + 2;
    if c.stars.len() < min_stars {
        return Err(Error::invalid(format!(
            "need at least {min_stars} stars, got {}",
            c.stars.len()
        )));
    }
    if c.paths.len() < min_paths {
        return Err(Error::invalid(format!(
            "need at least {min_paths} paths, got {}",
            c.paths.len()
        )));
    }
    let idx = c.index()?;
    if !c.check_zigzagged(&idx, q)? {
        return Err(Error::invalid("constellation is not q-zigzagged"));
    }
    gate_common(c, &idx, ell)?;

    // paper-side identification along the fixed path Q (kept in the trace)
    let (direct, z_hits, eta) = identify_zigzag_objects(c, &idx, ell, q)?;

    // adapted role cast: the window-route end stars bracket the skeleton
    // block at the start of the order, the K1 roles sit past eta
    let roles = Roles {
        leaf_a: 0,
        x_node: 1,
        lambdas: (2..ell + 2).collect(),
        y_node: ell + 2,
        leaf_b: ell + 3,
        k1: (eta..eta + ell).collect(),
    };
    let target = families::target_t4(ell)?;
    let (model, mut trace) = build_model(c, &idx, ell, roles, &target, "zigzagged-t4")?;
    trace.direct_routes = Some(direct);
    trace.z_hits = Some(z_hits);
    trace.eta = Some(eta);
    Ok((model, trace))
}

/// The Lemma-style object identification for the zigzag case: direct routes
/// from every star s_{2(q+1)i} along the fixed path, the window route from
/// s_1, and the z-hit families. All indices are 0-based order-indices;
/// `eta` is returned 0-based as well (first index past the last star that
/// may touch the window route).
#[allow(clippy::type_complexity)]
fn identify_zigzag_objects(
    c: &Constellation,
    idx: &ConstellationIndex,
    ell: usize,
    q: usize,
) -> Result<(Vec<(usize, usize, usize, usize)>, (Vec<usize>, Vec<usize>), usize)> {
    let fixed = 0usize; // the fixed path Q
    let mut direct = Vec::new();
    for i in 1..=q + ell + 1 {
        let s = 2 * (q + 1) * i - 1; // 0-based order-index of s_{2(q+1)i}
        let mut found = None;
        'scan: for &pa in &idx.star_positions[s][fixed] {
            // nearest starred positions on either side
            for dir in [1isize, -1] {
                let mut p = pa as isize + dir;
                while p >= 0 && (p as usize) < c.paths[fixed].len() {
                    let stars = &idx.stars_at[fixed][p as usize];
                    if !stars.is_empty() {
                        let other = stars.iter().copied().find(|&t| t != s);
                        if let Some(t) = other {
                            // direct: interior adjacent to no third star
                            let (lo, hi) = (pa.min(p as usize), pa.max(p as usize));
                            let clean = (lo..=hi).all(|pos| {
                                idx.stars_at[fixed][pos].iter().all(|&z| z == s || z == t)
                            });
                            if clean {
                                found = Some((s, t, lo, hi));
                                break 'scan;
                            }
                        }
                        break;
                    }
                    p += dir;
                }
            }
        }
        let (s, t, lo, hi) =
            found.ok_or_else(|| Error::invariant("zigzag-direct-routes", "no direct route"))?;
        // the partner must fall in the window around 2(q+1)i
        let center = 2 * (q + 1) * i;
        let t1 = t + 1; // 1-based
        if t1 < center.saturating_sub(q) || t1 > center + q || t1 == center {
            return Err(Error::invariant(
                "zigzag-direct-routes",
                format!("partner s_{t1} outside the window around s_{center}"),
            ));
        }
        direct.push((s, t, lo, hi));
    }
    // window route: shortest from s_1 into the prescribed star window, on a
    // path other than the fixed one
    let window_lo = 2 * (q + 1) * (q + ell + 2); // 1-based
    let targets: Vec<usize> = (window_lo..=window_lo + q).map(|j| j - 1).collect();
    let mut best: Option<(usize, usize, usize, usize)> = None; // (len, path, lo, hi)
    for &t in &targets {
        for pi in 0..c.paths.len() {
            if pi == fixed {
                continue;
            }
            for &pa in &idx.star_positions[0][pi] {
                for &pb in &idx.star_positions[t][pi] {
                    let (lo, hi) = (pa.min(pb), pa.max(pb));
                    let key = (hi - lo, pi, lo, hi);
                    if best.map_or(true, |b| key < b) {
                        best = Some(key);
                    }
                }
            }
        }
    }
    let (_, wpath, wlo, whi) =
        best.ok_or_else(|| Error::invariant("zigzag-window-route", "no route from s_1"))?;
    // z hits: direct-route stars and partners adjacent to the window route
    let touches = |s: usize| {
        let positions = &idx.star_positions[s][wpath];
        let i = positions.partition_point(|&p| p < wlo);
        i < positions.len() && positions[i] <= whi
    };
    let mut zs = Vec::new();
    let mut partners = Vec::new();
    for &(s, t, _, _) in &direct {
        if touches(s) && touches(t) {
            zs.push(s);
            partners.push(t);
        }
    }
    if zs.len() < ell + 2 {
        return Err(Error::invariant(
            "zigzag-z-hits",
            format!("only {} of the required {} z hits", zs.len(), ell + 2),
        ));
    }
    let eta = 2 * (q + 1) * (q + ell + 2) + q; // 1-based; 0-based first index past it is eta
    Ok((direct, (zs, partners), eta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{pd_grid_general, PosiVariant};
    use crate::model::Verdict;

    #[test]
    fn extend_model_adds_three_branch_sets_for_ell_1() {
        // host: a 2-ample constellation with one star and two paths; model
        // maps K1 to the star; extension uses the untouched path
        let b = pd_grid_general(1, 2, 1, 2).unwrap();
        let c = b.constellation();
        let idx = c.index().unwrap();
        assert!(c.is_d_ample(&idx, 2));
        let star = b.star_vertex(0);
        let pattern = Graph::new(1);
        let m = InducedMinorModel::new(pattern, c.graph.clone(), vec![vec![star]]);
        let out = extend_model(&c, &idx, &m, 1, star, 0, 1).unwrap();
        assert_eq!(out.branch.len(), 1 + 3);
        assert!(verify_model(&out).unwrap().is_valid());
        // touched path is rejected
        assert!(extend_model(&c, &idx, &out, 1, star, 0, 1).is_err());
    }

    #[test]
    fn extend_twice_commutes_up_to_counts() {
        let b = pd_grid_general(1, 3, 1, 2).unwrap();
        let c = b.constellation();
        let idx = c.index().unwrap();
        let star = b.star_vertex(0);
        let m = InducedMinorModel::new(Graph::new(1), c.graph.clone(), vec![vec![star]]);
        let m1 = extend_model(&c, &idx, &m, 1, star, 0, 1).unwrap();
        let m12 = extend_model(&c, &idx, &m1, 2, star, 0, 1).unwrap();
        let m2 = extend_model(&c, &idx, &m, 2, star, 0, 1).unwrap();
        let m21 = extend_model(&c, &idx, &m2, 1, star, 0, 1).unwrap();
        assert_eq!(m12.pattern.edges(), m21.pattern.edges());
        assert!(verify_model(&m12).unwrap().is_valid());
        assert!(verify_model(&m21).unwrap().is_valid());
    }

    #[test]
    fn embed_interrupted_t2_on_the_reference_fixture() {
        let c = pd_grid_general(8, 15, 3, 3).unwrap().constellation();
        let (model, trace) = embed_interrupted(&c, 2, PosiVariant::T2).unwrap();
        assert_eq!(verify_model(&model).unwrap(), Verdict::Valid);
        assert_eq!(trace.arms.len(), (2 * 2 + 3) * 2);
    }

    #[test]
    fn embed_interrupted_t3_on_the_reference_fixture() {
        let c = pd_grid_general(8, 15, 3, 3).unwrap().constellation();
        let (model, _) = embed_interrupted(&c, 2, PosiVariant::T3).unwrap();
        assert_eq!(verify_model(&model).unwrap(), Verdict::Valid);
    }

    #[test]
    fn embed_interrupted_gates() {
        let c = pd_grid_general(8, 15, 3, 3).unwrap().constellation();
        assert!(embed_interrupted(&c, 1, PosiVariant::T2).is_err());
        // too few paths
        let small = pd_grid_general(8, 4, 3, 3).unwrap().constellation();
        assert!(embed_interrupted(&small, 2, PosiVariant::T2).is_err());
        // non-interrupted input: break the order so a route skips a star
        let mut shuffled = c.clone();
        shuffled.stars.swap(0, 7);
        let err = embed_interrupted(&shuffled, 2, PosiVariant::T2).unwrap_err();
        assert!(format!("{err}").contains("interrupted"));
    }

    #[test]
    fn embed_zigzagged_on_the_reference_fixture() {
        let c = pd_grid_general(30, 16, 3, 3).unwrap().constellation();
        let (model, trace) = embed_zigzagged(&c, 2, 1).unwrap();
        assert_eq!(verify_model(&model).unwrap(), Verdict::Valid);
        assert_eq!(trace.arms.len(), 14);
        assert!(trace.direct_routes.is_some());
        let (zs, partners) = trace.z_hits.unwrap();
        assert!(zs.len() >= 4 && partners.len() >= 4);
        assert_eq!(trace.eta, Some(21));
    }

    #[test]
    fn embed_zigzagged_gates() {
        let c = pd_grid_general(30, 16, 3, 3).unwrap().constellation();
        assert!(embed_zigzagged(&c, 1, 1).is_err()); // needs ell > q
        let small = pd_grid_general(30, 5, 3, 3).unwrap().constellation();
        assert!(embed_zigzagged(&small, 2, 1).is_err()); // too few paths
    }
}
