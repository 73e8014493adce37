//! Undirected simple graphs over dense vertex ids `0..n`.
//!
//! Everything downstream (generators, solvers, certificates) relies on two
//! contracts established here:
//!
//! * determinism — neighbor lists are sorted ascending, components are
//!   reported in ascending order of their minimum vertex, edges enumerate in
//!   lexicographic order;
//! * labels are advisory metadata only; no operation reads them.

use std::collections::BTreeMap;

use crate::bits::BitSet;
use crate::error::{Error, Result};

/// A set of vertices of some graph, kept sorted and duplicate-free.
pub type VertexSet = Vec<u32>;

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<u32>>,
    labels: BTreeMap<u32, String>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            labels: BTreeMap::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: u32, v: u32) -> Result<()> {
        if u as usize >= self.n || v as usize >= self.n {
            return Err(Error::invalid(format!(
                "edge ({u},{v}) out of range for n={}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("self-loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::invalid(format!("duplicate edge ({u},{v})")));
        }
        let iu = self.adj[u as usize].partition_point(|&w| w < v);
        self.adj[u as usize].insert(iu, v);
        let iv = self.adj[v as usize].partition_point(|&w| w < u);
        self.adj[v as usize].insert(iv, u);
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Neighbors of `v`, ascending.
    #[inline]
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    /// Adjacency rows as bitsets, n^2 bits; only for small hosts where the
    /// solvers want constant-time set intersections.
    pub fn bitset_rows(&self) -> Vec<BitSet> {
        let mut rows = vec![BitSet::new(self.n); self.n];
        for (v, nb) in self.adj.iter().enumerate() {
            for &w in nb {
                rows[v].insert(w);
            }
        }
        rows
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    /// Edges in lexicographic order, `u < v`.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for u in 0..self.n as u32 {
            for &v in &self.adj[u as usize] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn set_label(&mut self, v: u32, label: impl Into<String>) {
        self.labels.insert(v, label.into());
    }

    pub fn label(&self, v: u32) -> Option<&str> {
        self.labels.get(&v).map(|s| s.as_str())
    }

    pub fn labels(&self) -> &BTreeMap<u32, String> {
        &self.labels
    }

    pub fn check_vertex(&self, v: u32) -> Result<()> {
        if (v as usize) < self.n {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "vertex id {v} out of range for n={}",
                self.n
            )))
        }
    }

    /// Validates that `s` is sorted, duplicate-free and in range.
    pub fn check_vertex_set(&self, s: &[u32]) -> Result<()> {
        for (i, &v) in s.iter().enumerate() {
            self.check_vertex(v)?;
            if i > 0 && s[i - 1] >= v {
                return Err(Error::invalid(format!(
                    "vertex set not sorted/unique at position {i}"
                )));
            }
        }
        Ok(())
    }

    /// N[S]: the set together with all its neighbors, ascending.
    pub fn closed_neighborhood(&self, s: &[u32]) -> Result<VertexSet> {
        self.check_vertex_set(s)?;
        let mut acc = BitSet::from_slice(self.n, s);
        for &v in s {
            for &w in self.neighbors(v) {
                acc.insert(w);
            }
        }
        Ok(acc.iter().collect())
    }

    /// Connected components of the graph with `removed` deleted, each sorted,
    /// listed in ascending order of minimum vertex id.
    pub fn components(&self, removed: &[u32]) -> Vec<Vec<u32>> {
        let mut seen = BitSet::from_slice(self.n, removed);
        let mut out = Vec::new();
        for start in 0..self.n as u32 {
            if seen.contains(start) {
                continue;
            }
            let mut comp = vec![start];
            seen.insert(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True iff `g[s]` is a simple path (a single vertex counts).
    pub fn is_path(&self, s: &[u32]) -> Result<bool> {
        if s.is_empty() {
            return Err(Error::invalid("is_path on empty vertex set"));
        }
        self.check_vertex_set(s)?;
        let in_s = BitSet::from_slice(self.n, s);
        let mut edges = 0usize;
        for &v in s {
            let d = self.neighbors(v).iter().filter(|&&w| in_s.contains(w)).count();
            if d > 2 {
                return Ok(false);
            }
            edges += d;
        }
        edges /= 2;
        // connected + acyclic + max degree 2 = path
        Ok(edges + 1 == s.len() && self.set_is_connected(s))
    }

    /// True iff `s` is nonempty and `g[s]` is connected.
    pub fn set_is_connected(&self, s: &[u32]) -> bool {
        if s.is_empty() {
            return false;
        }
        let in_s = BitSet::from_slice(self.n, s);
        let mut seen = BitSet::new(self.n);
        let mut stack = vec![s[0]];
        seen.insert(s[0]);
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if in_s.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == s.len()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components(&[]).len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.components(&[])
            .iter()
            .all(|c| self.edges_within(c) + 1 == c.len())
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n.max(1)
    }

    fn edges_within(&self, s: &[u32]) -> usize {
        let in_s = BitSet::from_slice(self.n, s);
        s.iter()
            .map(|&v| self.neighbors(v).iter().filter(|&&w| in_s.contains(w) && w > v).count())
            .sum()
    }

    /// Length of a shortest cycle; `None` for forests.
    ///
    /// BFS from every vertex; a cross or back edge at depth d closes a cycle
    /// of length at most 2d+1, and scanning all roots makes the bound tight.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![u32::MAX; self.n];
        let mut parent = vec![u32::MAX; self.n];
        for root in 0..self.n as u32 {
            dist.iter_mut().for_each(|d| *d = u32::MAX);
            let mut queue = std::collections::VecDeque::new();
            dist[root as usize] = 0;
            parent[root as usize] = u32::MAX;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if dist[w as usize] == u32::MAX {
                        dist[w as usize] = dist[v as usize] + 1;
                        parent[w as usize] = v;
                        queue.push_back(w);
                    } else if parent[v as usize] != w {
                        let len = (dist[v as usize] + dist[w as usize] + 1) as usize;
                        if best.map_or(true, |b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// Vertices of a shortest cycle in order, `None` for forests.
    ///
    /// Deterministic: among shortest cycles, the one through the
    /// lexicographically first closing edge found by per-edge BFS.
    pub fn shortest_cycle(&self) -> Option<Vec<u32>> {
        let mut best: Option<Vec<u32>> = None;
        for (u, v) in self.edges() {
            let mut parent = vec![u32::MAX; self.n];
            let mut dist = vec![usize::MAX; self.n];
            dist[u as usize] = 0;
            let mut queue = std::collections::VecDeque::from([u]);
            while let Some(x) = queue.pop_front() {
                for &y in self.neighbors(x) {
                    if (x == u && y == v) || (x == v && y == u) {
                        continue;
                    }
                    if dist[y as usize] == usize::MAX {
                        dist[y as usize] = dist[x as usize] + 1;
                        parent[y as usize] = x;
                        queue.push_back(y);
                    }
                }
            }
            if dist[v as usize] != usize::MAX {
                let mut cycle = vec![v];
                let mut cur = v;
                while cur != u {
                    cur = parent[cur as usize];
                    cycle.push(cur);
                }
                if best.as_ref().map_or(true, |b| cycle.len() < b.len()) {
                    best = Some(cycle);
                }
            }
        }
        best
    }

    /// True iff the graph contains K_{s,t} as a (not necessarily induced)
    /// subgraph: disjoint sets A, B with |A|=s, |B|=t and all of A x B present.
    ///
    /// Exhaustive over s-subsets with degree pruning; meant for s <= 3 at desk
    /// scale.
    pub fn has_kst(&self, s: usize, t: usize) -> Result<bool> {
        if s < 1 || t < 1 {
            return Err(Error::invalid("biclique sides must be >= 1"));
        }
        let candidates: Vec<u32> = (0..self.n as u32).filter(|&v| self.degree(v) >= t).collect();
        let mut chosen = Vec::with_capacity(s);
        Ok(self.kst_rec(&candidates, 0, s, t, &mut chosen, None))
    }

    fn kst_rec(
        &self,
        candidates: &[u32],
        from: usize,
        s: usize,
        t: usize,
        chosen: &mut Vec<u32>,
        common: Option<Vec<u32>>,
    ) -> bool {
        if chosen.len() == s {
            let acc = common.expect("nonempty choice");
            return acc.iter().filter(|v| !chosen.contains(v)).count() >= t;
        }
        for idx in from..candidates.len() {
            let v = candidates[idx];
            let next: Vec<u32> = match &common {
                None => self.neighbors(v).to_vec(),
                Some(c) => {
                    // sorted-list intersection with the row of v
                    let nb = self.neighbors(v);
                    let mut out = Vec::new();
                    let (mut i, mut j) = (0, 0);
                    while i < c.len() && j < nb.len() {
                        match c[i].cmp(&nb[j]) {
                            std::cmp::Ordering::Less => i += 1,
                            std::cmp::Ordering::Greater => j += 1,
                            std::cmp::Ordering::Equal => {
                                out.push(c[i]);
                                i += 1;
                                j += 1;
                            }
                        }
                    }
                    if out.is_empty() {
                        continue;
                    }
                    out
                }
            };
            chosen.push(v);
            if self.kst_rec(candidates, idx + 1, s, t, chosen, Some(next)) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// True iff the graph contains K_{t,t} as a subgraph.
    pub fn has_biclique_subgraph(&self, t: usize) -> Result<bool> {
        self.has_kst(t, t)
    }

    /// Quotient of the listed branch sets: one vertex per set, an edge iff
    /// some host edge joins the two sets. Uncovered vertices are deleted.
    ///
    /// Vertex `i` of the output corresponds to `partition[i]`.
    pub fn contract_model(&self, partition: &[Vec<u32>]) -> Result<Graph> {
        let mut owner = vec![u32::MAX; self.n];
        for (i, part) in partition.iter().enumerate() {
            self.check_vertex_set(part)?;
            if part.is_empty() {
                return Err(Error::Certificate(format!("branch set {i} is empty")));
            }
            for &v in part {
                if owner[v as usize] != u32::MAX {
                    return Err(Error::Certificate(format!(
                        "branch sets {} and {i} overlap at vertex {v}",
                        owner[v as usize]
                    )));
                }
                owner[v as usize] = i as u32;
            }
            if !self.set_is_connected(part) {
                return Err(Error::Certificate(format!("branch set {i} is not connected")));
            }
        }
        let mut out = Graph::new(partition.len());
        for (u, v) in self.edges() {
            let (a, b) = (owner[u as usize], owner[v as usize]);
            if a != u32::MAX && b != u32::MAX && a != b && !out.has_edge(a, b) {
                out.add_edge(a, b)?;
            }
        }
        Ok(out)
    }

    /// The subgraph induced by `s`, with vertex `i` of the output standing
    /// for `s[i]`. Labels carry over.
    pub fn induced(&self, s: &[u32]) -> Result<Graph> {
        self.check_vertex_set(s)?;
        let mut index = vec![u32::MAX; self.n];
        for (i, &v) in s.iter().enumerate() {
            index[v as usize] = i as u32;
        }
        let mut out = Graph::new(s.len());
        for &v in s {
            for &w in self.neighbors(v) {
                if w > v && index[w as usize] != u32::MAX {
                    out.add_edge(index[v as usize], index[w as usize])?;
                }
            }
            if let Some(l) = self.label(v) {
                out.set_label(index[v as usize], l);
            }
        }
        Ok(out)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n as u32;
        let mut out = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            out.add_edge(u, v).expect("valid edge");
        }
        for (u, v) in other.edges() {
            out.add_edge(u + shift, v + shift).expect("valid edge");
        }
        for (&v, l) in &self.labels {
            out.set_label(v, l.clone());
        }
        for (&v, l) in &other.labels {
            out.set_label(v + shift, l.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<(u32, u32)> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<(u32, u32)> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n as u32 - 1));
        Graph::from_edges(n, &edges).unwrap()
    }

    fn claw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn closed_neighborhood_on_edge_and_claw() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(g.closed_neighborhood(&[0]).unwrap(), vec![0, 1]);
        assert_eq!(g.closed_neighborhood(&[]).unwrap(), Vec::<u32>::new());
        let c = claw();
        assert_eq!(c.closed_neighborhood(&[0]).unwrap(), vec![0, 1, 2, 3]);
        assert!(c.closed_neighborhood(&[9]).is_err());
    }

    #[test]
    fn components_of_split_path() {
        let g = path(3);
        assert_eq!(g.components(&[1]), vec![vec![0], vec![2]]);
        assert_eq!(g.components(&[]), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn is_path_cases() {
        let g = path(5);
        assert!(g.is_path(&[0, 1, 2, 3, 4]).unwrap());
        assert!(g.is_path(&[2]).unwrap());
        assert!(g.is_path(&[0]).unwrap());
        assert!(!g.is_path(&[0, 2]).unwrap()); // disconnected
        assert!(g.is_path(&[]).is_err());
        let c = claw();
        assert!(!c.is_path(&[0, 1, 2, 3]).unwrap());
        let c4 = cycle(4);
        assert!(!c4.is_path(&[0, 1, 2, 3]).unwrap());
    }

    #[test]
    fn girth_basics() {
        assert_eq!(path(6).girth(), None);
        assert_eq!(cycle(5).girth(), Some(5));
        assert_eq!(cycle(3).girth(), Some(3));
        // two triangles sharing a vertex
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(g.girth(), Some(3));
    }

    #[test]
    fn kst_detection() {
        let k22 = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(k22.has_kst(2, 2).unwrap());
        assert!(!k22.has_kst(2, 3).unwrap());
        assert!(!path(6).has_kst(2, 2).unwrap());
        assert!(claw().has_kst(1, 3).unwrap());
        assert!(k22.has_kst(0, 1).is_err());
    }

    #[test]
    fn contract_model_examples() {
        let g = path(3);
        let q = g.contract_model(&[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(q.n(), 2);
        assert!(q.has_edge(0, 1));

        let c = claw();
        let q = c.contract_model(&[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(q.n(), 1);
        assert_eq!(q.edge_count(), 0);

        // overlapping sets are rejected with the offending index
        let err = g.contract_model(&[vec![0, 1], vec![1, 2]]).unwrap_err();
        assert!(matches!(err, Error::Certificate(_)));
        // disconnected set
        let err = g.contract_model(&[vec![0, 2]]).unwrap_err();
        assert!(matches!(err, Error::Certificate(_)));
    }

    #[test]
    fn contract_singletons_is_induced_subgraph() {
        let g = cycle(5);
        let parts: Vec<Vec<u32>> = vec![vec![0], vec![1], vec![2]];
        let q = g.contract_model(&parts).unwrap();
        let ind = g.induced(&[0, 1, 2]).unwrap();
        assert_eq!(q.edges(), ind.edges());
    }

    #[test]
    fn forest_checks() {
        assert!(path(4).is_tree());
        assert!(path(4).is_forest());
        assert!(!cycle(4).is_forest());
        let two = path(2).disjoint_union(&path(3));
        assert!(two.is_forest());
        assert!(!two.is_tree());
    }
}
