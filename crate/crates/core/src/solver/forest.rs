//! Exact induced-minor containment for forests.
//!
//! For a connected pattern tree in a forest host, every minor model is
//! automatically an induced minor model (counting edges of the used subtree
//! forces exactly one host edge per pattern edge and none elsewhere), so
//! per-component containment is tree-minor containment. That is decided by a
//! rooted dynamic program over host subtree isomorphism classes: a state says
//! which pattern part the current host vertex belongs to and which pattern
//! children of that part are already realised below it. Collapsing host
//! subtrees to AHU classes makes the repeated T_1 copies of the target
//! families essentially free.
//!
//! Disconnected patterns add two layers: several pattern components may share
//! a host tree only if their territories are pairwise non-adjacent (in a tree
//! host that is the same as being separate components of the used subgraph,
//! which the state machine enforces), and components are distributed over
//! host components by a subset DP.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::{verify_model, InducedMinorModel};

use super::{SearchBudget, SearchOutcome, SearchResult};

const MAX_COMPONENTS: usize = 32;
const MAX_CHILDREN: usize = 32;

// ---------------------------------------------------------------------------
// Host preprocessing: rooted forest + AHU classes
// ---------------------------------------------------------------------------

struct HostForest {
    children: Vec<Vec<u32>>,
    class_of: Vec<u32>,
    /// per class: classes of the children, sorted ascending
    class_children: Vec<Vec<u32>>,
    /// roots of the host components, ascending
    comp_roots: Vec<u32>,
}

fn build_host(host: &Graph) -> HostForest {
    let n = host.n();
    let mut parent = vec![u32::MAX; n];
    let mut children = vec![Vec::new(); n];
    let mut comp_roots = Vec::new();
    let mut order = Vec::with_capacity(n); // BFS order: parents before children
    let mut seen = vec![false; n];
    for r in 0..n as u32 {
        if seen[r as usize] {
            continue;
        }
        comp_roots.push(r);
        seen[r as usize] = true;
        let mut queue = std::collections::VecDeque::from([r]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in host.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    parent[w as usize] = v;
                    children[v as usize].push(w);
                    queue.push_back(w);
                }
            }
        }
    }
    // AHU classes bottom-up
    let mut class_of = vec![u32::MAX; n];
    let mut intern: HashMap<Vec<u32>, u32> = HashMap::new();
    let mut class_children: Vec<Vec<u32>> = Vec::new();
    for &v in order.iter().rev() {
        let mut kid_classes: Vec<u32> = children[v as usize]
            .iter()
            .map(|&c| class_of[c as usize])
            .collect();
        kid_classes.sort_unstable();
        let next = class_children.len() as u32;
        let id = *intern.entry(kid_classes.clone()).or_insert_with(|| {
            class_children.push(kid_classes);
            next
        });
        class_of[v as usize] = id;
    }
    // deterministic extraction: children sorted by (class, id)
    for v in 0..n {
        children[v].sort_by_key(|&c| (class_of[c as usize], c));
    }
    HostForest {
        children,
        class_of,
        class_children,
        comp_roots,
    }
}

// ---------------------------------------------------------------------------
// Pattern preprocessing: components with all rootings
// ---------------------------------------------------------------------------

struct Rooting {
    /// children lists per local vertex
    children: Vec<Vec<u8>>,
    root: u8,
}

struct PatternComp {
    /// global pattern ids, ascending; local index = position here
    verts: Vec<u32>,
    rootings: Vec<Rooting>,
}

fn build_pattern(pattern: &Graph) -> Result<Vec<PatternComp>> {
    let comps = pattern.components(&[]);
    if comps.len() > MAX_COMPONENTS {
        return Err(Error::invalid(format!(
            "forest fast path supports at most {MAX_COMPONENTS} pattern components"
        )));
    }
    let mut out = Vec::with_capacity(comps.len());
    for verts in comps {
        let local: HashMap<u32, u8> = verts
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as u8))
            .collect();
        let mut rootings = Vec::with_capacity(verts.len());
        for root_local in 0..verts.len() as u8 {
            let mut children = vec![Vec::new(); verts.len()];
            let mut seen = vec![false; verts.len()];
            seen[root_local as usize] = true;
            let mut queue = std::collections::VecDeque::from([root_local]);
            while let Some(x) = queue.pop_front() {
                for &wg in pattern.neighbors(verts[x as usize]) {
                    let w = local[&wg];
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        children[x as usize].push(w);
                        queue.push_back(w);
                    }
                }
            }
            if children.iter().any(|c| c.len() > MAX_CHILDREN) {
                return Err(Error::invalid(format!(
                    "forest fast path supports at most {MAX_CHILDREN} children per pattern vertex"
                )));
            }
            rootings.push(Rooting {
                children,
                root: root_local,
            });
        }
        out.push(PatternComp { verts, rootings });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// The class DP
// ---------------------------------------------------------------------------

/// part-state key: (component, rooting, pattern vertex)
fn base_key(comp: usize, rho: usize, x: usize) -> u32 {
    comp as u32 | (rho as u32) << 5 | (x as u32) << 13
}

fn key_comp(base: u32) -> usize {
    (base & 31) as usize
}
fn key_rho(base: u32) -> usize {
    (base >> 5 & 255) as usize
}
fn key_x(base: u32) -> usize {
    (base >> 13 & 255) as usize
}

/// Facts achievable in a subtree of a given class.
///
/// An item `(mask, acc)` under a part state says: the components in `mask`
/// are fully placed in the subtree, the subtree's root vertex belongs to the
/// part of that state's pattern vertex x, and the pattern children of x in
/// `acc` have their whole subtrees realised below. The trivial item `(0, 0)`
/// (vertex alone in its part, or a free vertex above nothing) is implicit
/// everywhere and never stored.
#[derive(Default)]
struct ClassF {
    /// masks with a free root vertex, nonzero ones only
    free: Vec<u32>,
    /// stored (mask, acc) items per part state, excluding (0, 0)
    items: HashMap<u32, Vec<(u32, u32)>>,
}

struct Dp<'a> {
    host: &'a HostForest,
    comps: &'a [PatternComp],
    /// active rootings per component
    active: Vec<Vec<usize>>,
    f: Vec<ClassF>,
    items_created: u64,
    max_items: u64,
    exhausted: bool,
}

impl<'a> Dp<'a> {
    fn full_mask(&self, comp: usize, rho: usize, x: usize) -> u32 {
        let k = self.comps[comp].rootings[rho].children[x].len();
        ((1u64 << k) - 1) as u32
    }

    /// All masks closing component `i` at a vertex of class `c` (the
    /// component root's part ends here with every child realised).
    fn comp_closures(&self, c: usize, i: usize) -> Vec<u32> {
        let mut out = Vec::new();
        for &rho in &self.active[i] {
            let root = self.comps[i].rootings[rho].root as usize;
            let full = self.full_mask(i, rho, root);
            if full == 0 {
                out.push(0); // single-vertex component closes anywhere
            }
            if let Some(items) = self.f[c].items.get(&base_key(i, rho, root)) {
                for &(m, a) in items {
                    if a == full {
                        out.push(m);
                    }
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Contribution options a child of class `d` offers to a free parent.
    fn free_options(&self, d: usize) -> Vec<u32> {
        let mut opts = vec![0u32];
        opts.extend_from_slice(&self.f[d].free);
        for i in 0..self.comps.len() {
            for m in self.comp_closures(d, i) {
                if m >> i & 1 == 0 {
                    opts.push(m | 1 << i);
                }
            }
        }
        opts.sort_unstable();
        opts.dedup();
        opts
    }

    /// Contribution options a child of class `d` offers to a parent whose
    /// vertex is inside the part `base`: (mask gained, handled-bits gained).
    fn part_options(&self, d: usize, base: u32) -> Vec<(u32, u32)> {
        let i = key_comp(base);
        let rho = key_rho(base);
        let x = key_x(base);
        let mut opts: Vec<(u32, u32)> = vec![(0, 0)];
        for &m in &self.f[d].free {
            if m >> i & 1 == 0 {
                opts.push((m, 0));
            }
        }
        if let Some(items) = self.f[d].items.get(&base) {
            for &(m, a) in items {
                if m >> i & 1 == 0 {
                    opts.push((m, a)); // part continues into the child
                }
            }
        }
        let children = &self.comps[i].rootings[rho].children[x];
        for (bit, &x2) in children.iter().enumerate() {
            let full2 = self.full_mask(i, rho, x2 as usize);
            if full2 == 0 {
                opts.push((0, 1 << bit)); // leaf pattern child placed alone
            }
            if let Some(items) = self.f[d].items.get(&base_key(i, rho, x2 as usize)) {
                for &(m, a) in items {
                    if a == full2 && m >> i & 1 == 0 {
                        opts.push((m, 1 << bit));
                    }
                }
            }
        }
        opts.sort_unstable();
        opts.dedup();
        opts
    }

    fn eval_class(&mut self, c: usize) {
        let kids = self.host.class_children[c].clone();
        // free root vertex
        let mut free_masks: Vec<u32> = vec![0];
        for &d in &kids {
            let opts = self.free_options(d as usize);
            let mut next = Vec::new();
            for &a in &free_masks {
                for &b in &opts {
                    if a & b == 0 {
                        next.push(a | b);
                    }
                }
            }
            next.sort_unstable();
            next.dedup();
            free_masks = next;
        }
        let stored_free: Vec<u32> = free_masks.iter().copied().filter(|&m| m != 0).collect();
        self.items_created += stored_free.len() as u64;
        let mut class_f = ClassF {
            free: stored_free,
            items: HashMap::new(),
        };
        // root vertex inside a part
        for i in 0..self.comps.len() {
            for &rho in &self.active[i].clone() {
                for x in 0..self.comps[i].verts.len() {
                    let base = base_key(i, rho, x);
                    let mut partial: Vec<(u32, u32)> = vec![(0, 0)];
                    for &d in &kids {
                        let opts = self.part_options(d as usize, base);
                        if opts.len() == 1 {
                            continue; // only the trivial option: nothing changes
                        }
                        let mut next = Vec::new();
                        for &(m1, a1) in &partial {
                            for &(m2, a2) in &opts {
                                if m1 & m2 == 0 && a1 & a2 == 0 {
                                    next.push((m1 | m2, a1 | a2));
                                }
                            }
                        }
                        next.sort_unstable();
                        next.dedup();
                        partial = next;
                    }
                    let stored: Vec<(u32, u32)> =
                        partial.into_iter().filter(|&it| it != (0, 0)).collect();
                    if !stored.is_empty() {
                        self.items_created += stored.len() as u64;
                        class_f.items.insert(base, stored);
                    }
                }
            }
        }
        if self.items_created > self.max_items {
            self.exhausted = true;
        }
        self.f[c] = class_f;
    }

    fn run(&mut self) {
        for c in 0..self.host.class_children.len() {
            if self.exhausted {
                return;
            }
            self.eval_class(c);
        }
    }

    /// Masks of component sets placeable inside one host component whose root
    /// has class `c`.
    fn component_masks(&self, c: usize) -> Vec<u32> {
        let mut out = vec![0u32];
        out.extend_from_slice(&self.f[c].free);
        for i in 0..self.comps.len() {
            for m in self.comp_closures(c, i) {
                if m >> i & 1 == 0 {
                    out.push(m | 1 << i);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

// ---------------------------------------------------------------------------
// Extraction
// ---------------------------------------------------------------------------

struct Extractor<'a> {
    dp: &'a Dp<'a>,
    /// branch sets per global pattern vertex
    branch: HashMap<u32, Vec<u32>>,
}

impl<'a> Extractor<'a> {
    /// Realise `(base, mask, acc)` at concrete host vertex `v`.
    fn realize(&mut self, v: u32, base: u32, mask: u32, acc: u32) {
        if base != u32::MAX {
            let comp = &self.dp.comps[key_comp(base)];
            let global = comp.verts[key_x(base)];
            self.branch.entry(global).or_default().push(v);
        }
        let children = self.dp.host.children[v as usize].clone();
        let mut chosen: Vec<(u32, u32, u32)> = Vec::new(); // per child: (base, mask, acc)
        if !self.split(v, base, &children, 0, mask, acc, &mut chosen) {
            unreachable!("DP item has no realization; class tables are inconsistent");
        }
        for (idx, &(cb, cm, ca)) in chosen.iter().enumerate() {
            self.realize(children[idx], cb, cm, ca);
        }
    }

    /// Distribute the remaining (mask, acc) over children `idx..`.
    fn split(
        &self,
        _v: u32,
        base: u32,
        children: &[u32],
        idx: usize,
        mask: u32,
        acc: u32,
        chosen: &mut Vec<(u32, u32, u32)>,
    ) -> bool {
        if idx == children.len() {
            return mask == 0 && acc == 0;
        }
        let d = self.dp.host.class_of[children[idx] as usize] as usize;
        for (cb, cm, ca, dm, da) in self.child_choices(d, base) {
            if dm & !mask != 0 || da & !acc != 0 {
                continue;
            }
            chosen.push((cb, cm, ca));
            if self.split(_v, base, children, idx + 1, mask & !dm, acc & !da, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// Every way a child of class `d` can contribute under parent state
    /// `base`: (child base, child mask, child acc, mask delta, acc delta).
    fn child_choices(&self, d: usize, base: u32) -> Vec<(u32, u32, u32, u32, u32)> {
        let dp = self.dp;
        let mut out = Vec::new();
        // free child, nothing below
        out.push((u32::MAX, 0, 0, 0, 0));
        if base == u32::MAX {
            for &m in &dp.f[d].free {
                out.push((u32::MAX, m, 0, m, 0));
            }
            for i in 0..dp.comps.len() {
                for &rho in &dp.active[i] {
                    let root = dp.comps[i].rootings[rho].root as usize;
                    let full = dp.full_mask(i, rho, root);
                    let cb = base_key(i, rho, root);
                    if full == 0 {
                        out.push((cb, 0, 0, 1 << i, 0));
                    }
                    if let Some(items) = dp.f[d].items.get(&cb) {
                        for &(m, a) in items {
                            if a == full && m >> i & 1 == 0 {
                                out.push((cb, m, a, m | 1 << i, 0));
                            }
                        }
                    }
                }
            }
        } else {
            let i = key_comp(base);
            let rho = key_rho(base);
            let x = key_x(base);
            for &m in &dp.f[d].free {
                if m >> i & 1 == 0 {
                    out.push((u32::MAX, m, 0, m, 0));
                }
            }
            // continuation of the same part
            out.push((base, 0, 0, 0, 0));
            if let Some(items) = dp.f[d].items.get(&base) {
                for &(m, a) in items {
                    if m >> i & 1 == 0 {
                        out.push((base, m, a, m, a));
                    }
                }
            }
            let children = &dp.comps[i].rootings[rho].children[x];
            for (bit, &x2) in children.iter().enumerate() {
                let full2 = dp.full_mask(i, rho, x2 as usize);
                let cb = base_key(i, rho, x2 as usize);
                if full2 == 0 {
                    out.push((cb, 0, 0, 0, 1 << bit));
                }
                if let Some(items) = dp.f[d].items.get(&cb) {
                    for &(m, a) in items {
                        if a == full2 && m >> i & 1 == 0 {
                            out.push((cb, m, a, m, 1 << bit));
                        }
                    }
                }
            }
        }
        out
    }
}

// dedup note: child_choices may repeat the trivial continuation; split takes
// the first workable choice, so duplicates only cost a little time.

// ---------------------------------------------------------------------------
// Public entry point
// ---------------------------------------------------------------------------

/// Exact induced-minor containment for forest host and pattern.
///
/// Semantically identical to [`super::find_induced_minor`] restricted to
/// forests. Polynomial; the budget only guards against pathological inputs.
pub fn find_induced_minor_forest(
    host: &Graph,
    pattern: &Graph,
    budget: &SearchBudget,
) -> Result<SearchResult> {
    if !host.is_forest() || !pattern.is_forest() {
        return Err(Error::invalid(
            "find_induced_minor_forest requires forest host and pattern",
        ));
    }
    if host.n() == 0 || pattern.n() == 0 {
        return Err(Error::invalid("find_induced_minor_forest requires nonempty graphs"));
    }
    if pattern.n() > host.n() {
        return Ok(SearchResult {
            outcome: SearchOutcome::NotContained,
            nodes: 0,
        });
    }
    let hf = build_host(host);
    let comps = build_pattern(pattern)?;
    let k = comps.len();

    let mut nodes_total = 0u64;
    if k == 1 {
        // one pass per rooting, early exit on success
        let mut exhausted = false;
        for rho in 0..comps[0].rootings.len() {
            let mut dp = Dp {
                host: &hf,
                comps: &comps,
                active: vec![vec![rho]],
                f: (0..hf.class_children.len()).map(|_| ClassF::default()).collect(),
                items_created: 0,
                max_items: budget.max_nodes,
                exhausted: false,
            };
            dp.run();
            nodes_total += dp.items_created;
            if dp.exhausted {
                exhausted = true;
                break;
            }
            if let Some(model) = try_extract(&dp, &hf, host, pattern, &comps) {
                return Ok(SearchResult {
                    outcome: SearchOutcome::Found(model),
                    nodes: nodes_total,
                });
            }
        }
        Ok(SearchResult {
            outcome: if exhausted {
                SearchOutcome::BudgetExhausted
            } else {
                SearchOutcome::NotContained
            },
            nodes: nodes_total,
        })
    } else {
        let mut dp = Dp {
            host: &hf,
            comps: &comps,
            active: comps.iter().map(|c| (0..c.rootings.len()).collect()).collect(),
            f: (0..hf.class_children.len()).map(|_| ClassF::default()).collect(),
            items_created: 0,
            max_items: budget.max_nodes,
            exhausted: false,
        };
        dp.run();
        nodes_total += dp.items_created;
        if dp.exhausted {
            return Ok(SearchResult {
                outcome: SearchOutcome::BudgetExhausted,
                nodes: nodes_total,
            });
        }
        if let Some(model) = try_extract(&dp, &hf, host, pattern, &comps) {
            return Ok(SearchResult {
                outcome: SearchOutcome::Found(model),
                nodes: nodes_total,
            });
        }
        Ok(SearchResult {
            outcome: SearchOutcome::NotContained,
            nodes: nodes_total,
        })
    }
}

/// Assignment DP over host components, then concrete extraction.
fn try_extract(
    dp: &Dp,
    hf: &HostForest,
    host: &Graph,
    pattern: &Graph,
    comps: &[PatternComp],
) -> Option<InducedMinorModel> {
    let k = comps.len();
    let full: u32 = ((1u64 << k) - 1) as u32;
    let per_comp: Vec<Vec<u32>> = hf
        .comp_roots
        .iter()
        .map(|&r| dp.component_masks(hf.class_of[r as usize] as usize))
        .collect();
    // reachable masks with back-pointers (host comp index, submask used there)
    let mut reach: HashMap<u32, (usize, u32, u32)> = HashMap::new(); // mask -> (j, sub, prev)
    let mut frontier: Vec<u32> = vec![0];
    let mut seen: std::collections::HashSet<u32> = frontier.iter().copied().collect();
    for (j, masks) in per_comp.iter().enumerate() {
        let mut next_frontier = frontier.clone();
        for &prev in &frontier {
            for &sub in masks {
                if prev & sub == 0 {
                    let m = prev | sub;
                    if seen.insert(m) {
                        reach.insert(m, (j, sub, prev));
                        next_frontier.push(m);
                    }
                }
            }
        }
        frontier = next_frontier;
        if seen.contains(&full) {
            break;
        }
    }
    if !seen.contains(&full) {
        return None;
    }
    // walk back to per-component assignments
    let mut assignment: Vec<u32> = vec![0; hf.comp_roots.len()];
    let mut m = full;
    while m != 0 {
        let &(j, sub, prev) = reach.get(&m).expect("backpointer");
        assignment[j] = sub;
        m = prev;
    }
    let mut ex = Extractor {
        dp,
        branch: HashMap::new(),
    };
    for (j, &root) in hf.comp_roots.iter().enumerate() {
        let t = assignment[j];
        if t == 0 {
            continue;
        }
        let c = hf.class_of[root as usize] as usize;
        // prefer a free component root, else close some component at the root
        if dp.f[c].free.contains(&t) {
            ex.realize(root, u32::MAX, t, 0);
            continue;
        }
        let mut done = false;
        'outer: for i in 0..k {
            if t >> i & 1 == 0 {
                continue;
            }
            for &rho in &dp.active[i] {
                let root_x = comps[i].rootings[rho].root as usize;
                let fullx = dp.full_mask(i, rho, root_x);
                let want = t & !(1 << i);
                let ok = (fullx == 0 && want == 0)
                    || dp.f[c]
                        .items
                        .get(&base_key(i, rho, root_x))
                        .is_some_and(|v| v.contains(&(want, fullx)));
                if ok {
                    ex.realize(root, base_key(i, rho, root_x), want, fullx);
                    done = true;
                    break 'outer;
                }
            }
        }
        assert!(done, "component mask achievable but no closing state found");
    }
    let mut branch: Vec<Vec<u32>> = vec![Vec::new(); pattern.n()];
    for (g, mut verts) in ex.branch {
        verts.sort_unstable();
        branch[g as usize] = verts;
    }
    let model = InducedMinorModel::new(pattern.clone(), host.clone(), branch);
    debug_assert!(verify_model(&model).expect("well-formed model").is_valid());
    Some(model)
}
