//! Induced-minor and induced-subgraph search.
//!
//! The generic engine works on arbitrary graphs: it branches on
//! pattern-vertex-to-host-seed assignment and grows branch sets by frontier
//! expansion, pruning on forbidden adjacency and dead corridors. Containment
//! is NP-hard in general, so every search carries a budget and
//! `BudgetExhausted` is a first-class outcome, distinct from a proof of
//! absence.
//!
//! Forest inputs have an exact polynomial fast path in [`forest`].

pub mod forest;

use std::time::Instant;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::{verify_model, InducedMinorModel};

#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_millis: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 20_000_000,
            max_millis: 600_000,
        }
    }
}

impl SearchBudget {
    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget {
            max_nodes,
            ..Default::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_nodes == 0 || self.max_millis == 0 {
            return Err(Error::invalid("budget fields must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug)]
pub enum SearchOutcome {
    Found(InducedMinorModel),
    NotContained,
    BudgetExhausted,
}

impl SearchOutcome {
    pub fn found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

#[derive(Debug)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    /// Search-tree nodes expanded (for the generic engine) or DP items
    /// created (for the forest fast path).
    pub nodes: u64,
}

/// Placement order: start at the highest-degree pattern vertex, then prefer
/// vertices with the most already-placed neighbors. Ties by degree, then id.
fn placement_order(pattern: &Graph) -> Vec<u32> {
    let n = pattern.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let mut best: Option<(usize, usize, std::cmp::Reverse<u32>)> = None;
        let mut pick = u32::MAX;
        for v in 0..n as u32 {
            if placed[v as usize] {
                continue;
            }
            let anchored = pattern
                .neighbors(v)
                .iter()
                .filter(|&&w| placed[w as usize])
                .count();
            let key = (anchored, pattern.degree(v), std::cmp::Reverse(v));
            if best.map_or(true, |b| key > b) {
                best = Some(key);
                pick = v;
            }
        }
        placed[pick as usize] = true;
        order.push(pick);
    }
    order
}

struct Engine<'a> {
    host: &'a Graph,
    host_rows: Vec<BitSet>,
    pattern: &'a Graph,
    order: Vec<u32>,
    branch: Vec<Vec<u32>>,
    branch_bits: Vec<BitSet>,
    /// union of host adjacency rows over the branch set
    reach: Vec<BitSet>,
    placed: Vec<bool>,
    used: BitSet,
    nodes: u64,
    max_nodes: u64,
    started: Instant,
    max_millis: u64,
    exhausted: bool,
    zobrist: Vec<u64>,
    /// second table for vertices of completed components, whose internal
    /// partition no longer matters
    zobrist_blocked: Vec<u64>,
    visited: Vec<u64>,
    /// pattern component of each pattern vertex
    comp_of: Vec<usize>,
    /// for each component, the previous component with an identical local
    /// edge list, if any: symmetry breaking orders their first seeds
    prev_identical: Vec<Option<usize>>,
    first_seed: Vec<Option<u32>>,
}

impl<'a> Engine<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph, budget: &SearchBudget) -> Self {
        let comps = pattern.components(&[]);
        let mut comp_of = vec![0usize; pattern.n()];
        for (j, comp) in comps.iter().enumerate() {
            for &v in comp {
                comp_of[v as usize] = j;
            }
        }
        // local edge lists up to the order-preserving relabeling
        let signature = |comp: &Vec<u32>| -> Vec<(u32, u32)> {
            let rank = |v: u32| comp.partition_point(|&x| x < v) as u32;
            let mut edges: Vec<(u32, u32)> = comp
                .iter()
                .flat_map(|&v| {
                    pattern
                        .neighbors(v)
                        .iter()
                        .filter(move |&&w| w > v)
                        .map(move |&w| (rank(v), rank(w)))
                })
                .collect();
            edges.sort_unstable();
            edges
        };
        let sigs: Vec<(usize, Vec<(u32, u32)>)> = comps
            .iter()
            .map(|c| (c.len(), signature(c)))
            .collect();
        let prev_identical = (0..comps.len())
            .map(|j| (0..j).rev().find(|&i| sigs[i] == sigs[j]))
            .collect();
        Engine {
            host_rows: host.bitset_rows(),
            host,
            pattern,
            order: placement_order(pattern),
            branch: vec![Vec::new(); pattern.n()],
            branch_bits: vec![BitSet::new(host.n()); pattern.n()],
            reach: vec![BitSet::new(host.n()); pattern.n()],
            placed: vec![false; pattern.n()],
            used: BitSet::new(host.n()),
            nodes: 0,
            max_nodes: budget.max_nodes,
            started: Instant::now(),
            max_millis: budget.max_millis,
            exhausted: false,
            zobrist: zobrist_table((pattern.n() + 1) * host.n(), 1),
            zobrist_blocked: zobrist_table(host.n(), 1)
                .into_iter()
                .map(|x| x.rotate_left(17))
                .collect(),
            visited: vec![0; if host.n() <= 12 { 1 << 16 } else { 1 << 24 }],
            comp_of,
            prev_identical,
            first_seed: vec![None; comps.len()],
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_nodes
            || (self.nodes % 4096 == 0
                && self.started.elapsed().as_millis() as u64 > self.max_millis)
        {
            self.exhausted = true;
        }
        self.exhausted
    }

    /// h may join the branch set of u: unused and not adjacent to any placed
    /// branch set whose pattern vertex is not a pattern-neighbor of u.
    fn admissible(&self, u: u32, h: u32) -> bool {
        if self.used.contains(h) {
            return false;
        }
        let row = &self.host_rows[h as usize];
        for z in 0..self.pattern.n() as u32 {
            if z != u
                && self.placed[z as usize]
                && !self.pattern.has_edge(u, z)
                && row.intersects(&self.branch_bits[z as usize])
            {
                return false;
            }
        }
        true
    }

    fn add(&mut self, u: u32, h: u32) {
        self.branch[u as usize].push(h);
        self.branch_bits[u as usize].insert(h);
        self.reach[u as usize].union_with(&self.host_rows[h as usize]);
        self.used.insert(h);
    }

    fn remove_last(&mut self, u: u32) {
        let h = self.branch[u as usize].pop().expect("nonempty branch");
        self.branch_bits[u as usize].remove(h);
        self.used.remove(h);
        // rebuild reach
        let mut acc = BitSet::new(self.host.n());
        for &x in &self.branch[u as usize] {
            acc.union_with(&self.host_rows[x as usize]);
        }
        self.reach[u as usize] = acc;
    }

    /// Pattern edges, lexicographically, whose placed branch sets do not
    /// touch yet.
    fn unsatisfied_edges(&self) -> Vec<(u32, u32)> {
        self.pattern
            .edges()
            .into_iter()
            .filter(|&(u, v)| {
                self.placed[u as usize]
                    && self.placed[v as usize]
                    && !self.reach[u as usize].intersects(&self.branch_bits[v as usize])
            })
            .collect()
    }

    /// Region reachable from the frontier of `side` through unused vertices
    /// admissible for u or v. Any host vertex that can ever help connect the
    /// pair lies in the region grown from either side (a connecting walk in
    /// a final model stays inside the two final branch sets, all of whose
    /// new vertices are admissible for their side), so candidate extensions
    /// can be restricted to the intersection of the two regions.
    fn corridor(&self, side: u32, u: u32, v: u32) -> BitSet {
        let mut seen = BitSet::new(self.host.n());
        let mut stack: Vec<u32> = Vec::new();
        for h in self.reach[side as usize].iter() {
            if !self.used.contains(h)
                && !seen.contains(h)
                && (self.admissible(u, h) || self.admissible(v, h))
            {
                seen.insert(h);
                stack.push(h);
            }
        }
        while let Some(h) = stack.pop() {
            for &w in self.host.neighbors(h) {
                if !seen.contains(w)
                    && !self.used.contains(w)
                    && (self.admissible(u, w) || self.admissible(v, w))
                {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// State signature with completed components collapsed to their union
    /// support: once a component is fully placed and internally satisfied it
    /// never grows again, and every future admissibility constraint it
    /// imposes depends only on the union of its branch sets.
    fn state_signature(&self) -> u64 {
        let n = self.host.n();
        let mut complete = vec![true; self.first_seed.len()];
        for u in 0..self.pattern.n() as u32 {
            if !self.placed[u as usize] {
                complete[self.comp_of[u as usize]] = false;
            }
        }
        for (u, v) in self.pattern.edges() {
            if self.placed[u as usize]
                && self.placed[v as usize]
                && !self.reach[u as usize].intersects(&self.branch_bits[v as usize])
            {
                complete[self.comp_of[u as usize]] = false;
            }
        }
        let mut h = 0u64;
        for u in 0..self.pattern.n() {
            let collapsed = complete[self.comp_of[u]];
            for &v in &self.branch[u] {
                h ^= if collapsed {
                    self.zobrist_blocked[v as usize]
                } else {
                    self.zobrist[u * n + v as usize]
                };
            }
        }
        h
    }

    /// Marks the current assignment in the transposition table; true when it
    /// was already there, meaning this state's whole subtree was explored
    /// (or the slot collided, which only costs re-exploration elsewhere).
    fn seen_before(&mut self) -> bool {
        let h = self.state_signature() | 1;
        let slot = (h >> 1) as usize & (self.visited.len() - 1);
        if self.visited[slot] == h {
            return true;
        }
        self.visited[slot] = h;
        false
    }

    fn search(&mut self, placed_count: usize) -> bool {
        if self.exhausted {
            return false;
        }
        if self.seen_before() {
            return false;
        }
        // connect placed pairs before placing more vertices; every
        // unsatisfied pair must have an open corridor, and the search works
        // on the most constrained one
        let mut work: Option<(u32, u32, BitSet, BitSet, usize)> = None;
        for (u, v) in self.unsatisfied_edges() {
            let fw = self.corridor(u, u, v);
            if !fw.intersects(&self.reach[v as usize]) {
                return false; // this pair can never be joined from here
            }
            let bw = self.corridor(v, u, v);
            let width = fw.count().min(bw.count());
            if work.as_ref().map_or(true, |w| width < w.4) {
                work = Some((u, v, fw, bw, width));
            }
        }
        if let Some((u, v, fw, bw, _)) = work {
            for side in [u, v] {
                let candidates: Vec<u32> = self.reach[side as usize]
                    .iter()
                    .filter(|&h| fw.contains(h) && bw.contains(h) && self.admissible(side, h))
                    .collect();
                for h in candidates {
                    if self.tick() {
                        return false;
                    }
                    self.add(side, h);
                    if self.search(placed_count) {
                        return true;
                    }
                    self.remove_last(side);
                }
            }
            return false;
        }
        if placed_count == self.pattern.n() {
            return true;
        }
        // free host vertices must still cover the unplaced pattern vertices
        if self.host.n() - self.used.count() < self.pattern.n() - placed_count {
            return false;
        }
        let u = self.order[placed_count];
        // anchor: the first placed pattern-neighbor of u. Seeds are confined
        // to the anchor set's neighborhood; when the right attachment point
        // is not there yet, growing the anchor set is the alternative move.
        let anchor = self
            .order[..placed_count]
            .iter()
            .copied()
            .find(|&w| self.pattern.has_edge(u, w));
        match anchor {
            None => {
                let comp = self.comp_of[u as usize];
                // identical earlier components get the smaller first seed
                let floor = self.prev_identical[comp]
                    .and_then(|j| self.first_seed[j])
                    .map_or(0, |s| s + 1);
                for h in floor..self.host.n() as u32 {
                    if !self.admissible(u, h) {
                        continue;
                    }
                    if self.tick() {
                        return false;
                    }
                    self.placed[u as usize] = true;
                    self.first_seed[comp] = Some(h);
                    self.add(u, h);
                    if self.search(placed_count + 1) {
                        return true;
                    }
                    self.remove_last(u);
                    self.first_seed[comp] = None;
                    self.placed[u as usize] = false;
                }
            }
            Some(w) => {
                let attach: Vec<u32> = self.reach[w as usize]
                    .iter()
                    .filter(|&h| self.admissible(u, h))
                    .collect();
                for h in attach {
                    if self.tick() {
                        return false;
                    }
                    self.placed[u as usize] = true;
                    self.add(u, h);
                    if self.search(placed_count + 1) {
                        return true;
                    }
                    self.remove_last(u);
                    self.placed[u as usize] = false;
                }
                // growing the anchor set only makes sense toward a potential
                // seed for u: keep candidates on valid-for-w paths that end
                // next to an admissible-for-u vertex
                let targets: Vec<u32> = (0..self.host.n() as u32)
                    .filter(|&a| self.admissible(u, a))
                    .collect();
                let grow: Vec<u32> = {
                    let fw = self.grow_region(w);
                    let bw = self.grow_region_backward(w, &targets);
                    self.reach[w as usize]
                        .iter()
                        .filter(|&h| fw.contains(h) && bw.contains(h) && self.admissible(w, h))
                        .collect()
                };
                for h in grow {
                    if self.tick() {
                        return false;
                    }
                    self.add(w, h);
                    if self.search(placed_count) {
                        return true;
                    }
                    self.remove_last(w);
                }
            }
        }
        false
    }

    /// Vertices reachable from the frontier of X_w through vertices
    /// admissible for w.
    fn grow_region(&self, w: u32) -> BitSet {
        let mut seen = BitSet::new(self.host.n());
        let mut stack: Vec<u32> = Vec::new();
        for h in self.reach[w as usize].iter() {
            if self.admissible(w, h) && !seen.contains(h) {
                seen.insert(h);
                stack.push(h);
            }
        }
        while let Some(h) = stack.pop() {
            for &x in self.host.neighbors(h) {
                if !seen.contains(x) && self.admissible(w, x) {
                    seen.insert(x);
                    stack.push(x);
                }
            }
        }
        seen
    }

    /// Vertices on admissible-for-w paths that end adjacent to one of the
    /// target vertices.
    fn grow_region_backward(&self, w: u32, targets: &[u32]) -> BitSet {
        let mut seen = BitSet::new(self.host.n());
        let mut stack: Vec<u32> = Vec::new();
        for &a in targets {
            for &h in self.host.neighbors(a) {
                if !seen.contains(h) && self.admissible(w, h) {
                    seen.insert(h);
                    stack.push(h);
                }
            }
        }
        while let Some(h) = stack.pop() {
            for &x in self.host.neighbors(h) {
                if !seen.contains(x) && self.admissible(w, x) {
                    seen.insert(x);
                    stack.push(x);
                }
            }
        }
        seen
    }
}

/// Deterministic pseudo-random table for state hashing.
fn zobrist_table(pattern_n: usize, host_n: usize) -> Vec<u64> {
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    (0..pattern_n * host_n).map(|_| next()).collect()
}

/// Searches for an induced minor model of `pattern` in `host`.
///
/// `Found` models always pass [`verify_model`]; `NotContained` is an
/// exhaustive proof within the budget; `BudgetExhausted` means neither.
/// Branching order is fixed, so the returned certificate is reproducible.
pub fn find_induced_minor(
    host: &Graph,
    pattern: &Graph,
    budget: &SearchBudget,
) -> Result<SearchResult> {
    budget.validate()?;
    if host.n() == 0 || pattern.n() == 0 {
        return Err(Error::invalid("find_induced_minor requires nonempty graphs"));
    }
    if pattern.n() > host.n() {
        return Ok(SearchResult {
            outcome: SearchOutcome::NotContained,
            nodes: 0,
        });
    }
    let mut engine = Engine::new(host, pattern, budget);
    let found = engine.search(0);
    let outcome = if found {
        let model = InducedMinorModel::new(
            pattern.clone(),
            host.clone(),
            engine
                .branch
                .iter()
                .map(|b| {
                    let mut s = b.clone();
                    s.sort_unstable();
                    s
                })
                .collect(),
        );
        debug_assert!(verify_model(&model)?.is_valid());
        SearchOutcome::Found(model)
    } else if engine.exhausted {
        SearchOutcome::BudgetExhausted
    } else {
        SearchOutcome::NotContained
    };
    Ok(SearchResult {
        outcome,
        nodes: engine.nodes,
    })
}

/// Induced-subgraph embedding: an injective vertex map preserving both
/// adjacency and non-adjacency. Result models have singleton branch sets.
pub fn is_induced_subgraph(
    pattern: &Graph,
    host: &Graph,
    budget: &SearchBudget,
) -> Result<SearchResult> {
    budget.validate()?;
    if pattern.n() > host.n() {
        return Ok(SearchResult {
            outcome: SearchOutcome::NotContained,
            nodes: 0,
        });
    }
    struct Iso<'a> {
        pattern: &'a Graph,
        host: &'a Graph,
        order: Vec<u32>,
        map: Vec<u32>,
        inverse_used: BitSet,
        nodes: u64,
        max_nodes: u64,
        exhausted: bool,
    }
    impl Iso<'_> {
        fn consistent(&self, u: u32, h: u32) -> bool {
            for (i, &pu) in self.order.iter().enumerate() {
                if i >= self.map.len() {
                    break;
                }
                if self.host.has_edge(self.map[i], h) != self.pattern.has_edge(pu, u) {
                    return false;
                }
            }
            true
        }
        fn rec(&mut self) -> bool {
            if self.exhausted {
                return false;
            }
            let k = self.map.len();
            if k == self.pattern.n() {
                return true;
            }
            let u = self.order[k];
            // candidates: adjacent to an already-placed pattern neighbor when
            // one exists, otherwise any unused host vertex
            let anchor = self
                .pattern
                .neighbors(u)
                .iter()
                .find_map(|&w| self.order[..k].iter().position(|&x| x == w));
            let candidates: Vec<u32> = match anchor {
                Some(i) => self.host.neighbors(self.map[i]).to_vec(),
                None => (0..self.host.n() as u32).collect(),
            };
            for h in candidates {
                if self.inverse_used.contains(h) || !self.consistent(u, h) {
                    continue;
                }
                self.nodes += 1;
                if self.nodes > self.max_nodes {
                    self.exhausted = true;
                    return false;
                }
                self.map.push(h);
                self.inverse_used.insert(h);
                if self.rec() {
                    return true;
                }
                self.map.pop();
                self.inverse_used.remove(h);
            }
            false
        }
    }
    let mut iso = Iso {
        pattern,
        host,
        order: placement_order(pattern),
        map: Vec::new(),
        inverse_used: BitSet::new(host.n()),
        nodes: 0,
        max_nodes: budget.max_nodes,
        exhausted: false,
    };
    let found = iso.rec();
    let outcome = if found {
        let mut branch = vec![Vec::new(); pattern.n()];
        for (i, &pu) in iso.order.iter().enumerate() {
            branch[pu as usize] = vec![iso.map[i]];
        }
        let model = InducedMinorModel::new(pattern.clone(), host.clone(), branch);
        debug_assert!(verify_model(&model)?.is_valid());
        SearchOutcome::Found(model)
    } else if iso.exhausted {
        SearchOutcome::BudgetExhausted
    } else {
        SearchOutcome::NotContained
    };
    Ok(SearchResult {
        outcome,
        nodes: iso.nodes,
    })
}
