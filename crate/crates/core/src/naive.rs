//! Brute-force reference implementations.
//!
//! These are the independent oracles the test suites check the real engines
//! against. They enumerate without pruning cleverness and are only meant for
//! hosts of at most ~14 vertices; they deliberately share no code with the
//! solvers they validate.

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_ORACLE_HOST: usize = 20;

fn mask_graph(g: &Graph) -> Result<Vec<u64>> {
    if g.n() > MAX_ORACLE_HOST {
        return Err(Error::invalid(format!(
            "naive oracle limited to {MAX_ORACLE_HOST} vertices, got {}",
            g.n()
        )));
    }
    let mut rows = vec![0u64; g.n()];
    for (u, v) in g.edges() {
        rows[u as usize] |= 1 << v;
        rows[v as usize] |= 1 << u;
    }
    Ok(rows)
}

fn mask_connected(rows: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return false;
    }
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v] & mask & !seen;
        }
        seen |= next;
        frontier = next;
    }
    seen == mask
}

fn neighborhood(rows: &[u64], mask: u64) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        out |= rows[v];
    }
    out
}

/// All nonempty connected vertex subsets of `g`, as bitmasks, ascending.
pub fn connected_subsets(g: &Graph) -> Result<Vec<u64>> {
    let rows = mask_graph(g)?;
    let mut out = Vec::new();
    for mask in 1u64..(1 << g.n()) {
        if mask_connected(&rows, mask) {
            out.push(mask);
        }
    }
    Ok(out)
}

/// Exhaustive induced-minor search: every assignment of pairwise disjoint
/// connected subsets to pattern vertices, adjacency-iff checked incrementally.
pub fn brute_force_induced_minor(host: &Graph, pattern: &Graph) -> Result<Option<Vec<Vec<u32>>>> {
    let rows = mask_graph(host)?;
    let subsets = connected_subsets(host)?;
    let mut chosen: Vec<u64> = Vec::with_capacity(pattern.n());
    fn rec(
        pattern: &Graph,
        rows: &[u64],
        subsets: &[u64],
        chosen: &mut Vec<u64>,
        used: u64,
    ) -> Option<()> {
        let next = chosen.len();
        if next == pattern.n() {
            return Some(());
        }
        'cand: for &cand in subsets {
            if cand & used != 0 {
                continue;
            }
            let nb = neighborhood(rows, cand);
            for (prev, &prev_mask) in chosen.iter().enumerate() {
                let touching = nb & prev_mask != 0;
                if touching != pattern.has_edge(prev as u32, next as u32) {
                    continue 'cand;
                }
            }
            chosen.push(cand);
            if rec(pattern, rows, subsets, chosen, used | cand).is_some() {
                return Some(());
            }
            chosen.pop();
        }
        None
    }
    if rec(pattern, &rows, &subsets, &mut chosen, 0).is_some() {
        Ok(Some(
            chosen
                .iter()
                .map(|&m| (0..host.n() as u32).filter(|&v| m >> v & 1 == 1).collect())
                .collect(),
        ))
    } else {
        Ok(None)
    }
}

/// Exhaustive induced-subgraph search: injective maps preserving adjacency
/// and non-adjacency.
pub fn brute_force_induced_subgraph(pattern: &Graph, host: &Graph) -> Result<Option<Vec<u32>>> {
    if host.n() > MAX_ORACLE_HOST {
        return Err(Error::invalid("naive oracle host too large"));
    }
    let mut map: Vec<u32> = Vec::with_capacity(pattern.n());
    fn rec(pattern: &Graph, host: &Graph, map: &mut Vec<u32>, used: u64) -> bool {
        let next = map.len();
        if next == pattern.n() {
            return true;
        }
        'cand: for h in 0..host.n() as u32 {
            if used >> h & 1 == 1 {
                continue;
            }
            for (prev, &ph) in map.iter().enumerate() {
                if host.has_edge(ph, h) != pattern.has_edge(prev as u32, next as u32) {
                    continue 'cand;
                }
            }
            map.push(h);
            if rec(pattern, host, map, used | 1 << h) {
                return true;
            }
            map.pop();
        }
        false
    }
    Ok(if rec(pattern, host, &mut map, 0) {
        Some(map)
    } else {
        None
    })
}

/// K_{s,t} subgraph test by enumerating both sides outright.
pub fn brute_force_has_kst(g: &Graph, s: usize, t: usize) -> Result<bool> {
    let rows = mask_graph(g)?;
    let n = g.n();
    for a in 1u64..(1 << n) {
        if a.count_ones() as usize != s {
            continue;
        }
        let mut common = !0u64;
        let mut m = a;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            common &= rows[v];
        }
        if (common & !a).count_ones() as usize >= t {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Girth by a second route: for every edge, remove it and measure the
/// shortest remaining path between its endpoints.
pub fn girth_by_edge_removal(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (u, v) in g.edges() {
        // BFS from u to v avoiding the edge (u,v)
        let mut dist = vec![usize::MAX; g.n()];
        dist[u as usize] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if (x == u && y == v) || (x == v && y == u) {
                    continue;
                }
                if dist[y as usize] == usize::MAX {
                    dist[y as usize] = dist[x as usize] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[v as usize] != usize::MAX {
            let cycle = dist[v as usize] + 1;
            if best.map_or(true, |b| cycle < b) {
                best = Some(cycle);
            }
        }
    }
    best
}
