//! Constellations: a graph with an independent set of stars whose removal
//! leaves a disjoint union of paths, every star seeing every path.
//!
//! The star list is ordered; the order is the total order that the
//! interrupted and zigzag checks quantify over. A route is a path between
//! two stars whose interior lies on one constellation path; enumerating
//! routes per path underlies every check here.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug)]
pub struct Constellation {
    pub graph: Graph,
    /// Star vertices in ≺-order.
    pub stars: Vec<u32>,
    /// The paths of the constellation, as vertex sequences.
    pub paths: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstellationViolation {
    DuplicateVertex { vertex: u32 },
    StarsAdjacent { first: u32, second: u32 },
    NotAPathSequence { path: usize },
    /// components of graph - stars do not match the listed paths
    ComponentMismatch,
    StarMissesPath { star: u32, path: usize },
}

impl std::fmt::Display for ConstellationViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use ConstellationViolation::*;
        match self {
            DuplicateVertex { vertex } => {
                write!(f, "vertex {vertex} appears twice in the star/path lists")
            }
            StarsAdjacent { first, second } => {
                write!(f, "stars {first} and {second} are adjacent")
            }
            NotAPathSequence { path } => {
                write!(f, "entry {path} of the path list is not a path sequence")
            }
            ComponentMismatch => write!(
                f,
                "components of graph minus stars do not match the listed paths"
            ),
            StarMissesPath { star, path } => {
                write!(f, "star {star} has no neighbor on path {path}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstellationVerdict {
    Valid,
    Violation(ConstellationViolation),
}

impl ConstellationVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, ConstellationVerdict::Valid)
    }
}

/// A route between two stars: endpoints plus the interior subpath.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Route {
    /// order-indices into `stars`
    pub endpoints: (usize, usize),
    pub path: usize,
    /// inclusive interior position range on that path
    pub lo: usize,
    pub hi: usize,
}

impl Route {
    pub fn edge_count(&self) -> usize {
        self.hi - self.lo + 3
    }
}

/// Position/adjacency index over a validated constellation.
pub struct ConstellationIndex {
    /// star order-index by vertex id
    pub star_index: HashMap<u32, usize>,
    /// (path, position) by vertex id for path vertices
    pub on_path: HashMap<u32, (usize, usize)>,
    /// `star_positions[s][p]` = sorted positions of path p adjacent to star s
    pub star_positions: Vec<Vec<Vec<usize>>>,
    /// `stars_at[p][pos]` = order-indices of stars adjacent to that vertex
    pub stars_at: Vec<Vec<Vec<usize>>>,
}

impl Constellation {
    pub fn new(graph: Graph, stars: Vec<u32>, paths: Vec<Vec<u32>>) -> Self {
        Constellation { graph, stars, paths }
    }

    /// Checks the three structural invariants; the report is deterministic.
    pub fn validate(&self) -> Result<ConstellationVerdict> {
        use ConstellationViolation::*;
        let g = &self.graph;
        for &s in &self.stars {
            g.check_vertex(s)?;
        }
        for p in &self.paths {
            for &v in p {
                g.check_vertex(v)?;
            }
        }
        let mut seen = vec![false; g.n()];
        for &v in self.stars.iter().chain(self.paths.iter().flatten()) {
            if seen[v as usize] {
                return Ok(ConstellationVerdict::Violation(DuplicateVertex { vertex: v }));
            }
            seen[v as usize] = true;
        }
        for (i, &s) in self.stars.iter().enumerate() {
            for &t in &self.stars[i + 1..] {
                if g.has_edge(s, t) {
                    return Ok(ConstellationVerdict::Violation(StarsAdjacent {
                        first: s,
                        second: t,
                    }));
                }
            }
        }
        for (i, p) in self.paths.iter().enumerate() {
            if p.is_empty() || p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return Ok(ConstellationVerdict::Violation(NotAPathSequence { path: i }));
            }
            let mut sorted = p.clone();
            sorted.sort_unstable();
            if !g.is_path(&sorted)? {
                return Ok(ConstellationVerdict::Violation(NotAPathSequence { path: i }));
            }
        }
        // components of graph - stars must be exactly the listed paths
        let mut stars_sorted = self.stars.clone();
        stars_sorted.sort_unstable();
        let comps = g.components(&stars_sorted);
        let mut listed: Vec<Vec<u32>> = self
            .paths
            .iter()
            .map(|p| {
                let mut s = p.clone();
                s.sort_unstable();
                s
            })
            .collect();
        listed.sort();
        let mut comps_sorted = comps;
        comps_sorted.sort();
        if listed != comps_sorted {
            return Ok(ConstellationVerdict::Violation(ComponentMismatch));
        }
        for &s in &self.stars {
            for (i, p) in self.paths.iter().enumerate() {
                if !p.iter().any(|&v| g.has_edge(s, v)) {
                    return Ok(ConstellationVerdict::Violation(StarMissesPath { star: s, path: i }));
                }
            }
        }
        Ok(ConstellationVerdict::Valid)
    }

    /// Builds the position index. Errors if the constellation is invalid.
    pub fn index(&self) -> Result<ConstellationIndex> {
        match self.validate()? {
            ConstellationVerdict::Valid => {}
            ConstellationVerdict::Violation(v) => {
                return Err(Error::invalid(format!("invalid constellation: {v}")))
            }
        }
        let star_index: HashMap<u32, usize> =
            self.stars.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut on_path = HashMap::new();
        for (pi, p) in self.paths.iter().enumerate() {
            for (pos, &v) in p.iter().enumerate() {
                on_path.insert(v, (pi, pos));
            }
        }
        let mut star_positions = vec![vec![Vec::new(); self.paths.len()]; self.stars.len()];
        let mut stars_at: Vec<Vec<Vec<usize>>> = self
            .paths
            .iter()
            .map(|p| vec![Vec::new(); p.len()])
            .collect();
        for (si, &s) in self.stars.iter().enumerate() {
            for &v in self.graph.neighbors(s) {
                if let Some(&(pi, pos)) = on_path.get(&v) {
                    star_positions[si][pi].push(pos);
                    stars_at[pi][pos].push(si);
                }
            }
        }
        for sp in &mut star_positions {
            for v in sp.iter_mut() {
                v.sort_unstable();
            }
        }
        for p in &mut stars_at {
            for v in p.iter_mut() {
                v.sort_unstable();
            }
        }
        Ok(ConstellationIndex {
            star_index,
            on_path,
            star_positions,
            stars_at,
        })
    }

    /// All routes, grouped per path, in (path, lo, hi, endpoint) order.
    pub fn routes(&self, idx: &ConstellationIndex) -> Vec<Route> {
        let mut out = Vec::new();
        for (pi, p) in self.paths.iter().enumerate() {
            let starred: Vec<usize> = (0..p.len())
                .filter(|&pos| !idx.stars_at[pi][pos].is_empty())
                .collect();
            for (a_i, &lo) in starred.iter().enumerate() {
                for &hi in &starred[a_i..] {
                    for &sa in &idx.stars_at[pi][lo] {
                        for &sb in &idx.stars_at[pi][hi] {
                            if sa == sb {
                                continue;
                            }
                            out.push(Route {
                                endpoints: (sa.min(sb), sa.max(sb)),
                                path: pi,
                                lo,
                                hi,
                            });
                        }
                    }
                }
            }
        }
        out.sort_by_key(|r| (r.path, r.lo, r.hi, r.endpoints));
        out.dedup();
        out
    }

    /// Minimum route length in edges, if any route exists.
    fn min_route_edges(&self, idx: &ConstellationIndex) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (pi, p) in self.paths.iter().enumerate() {
            // latest starred position, and latest with a different star
            let mut last: Option<(usize, usize)> = None; // (pos, star)
            let mut last_other: Option<usize> = None; // pos with star != last.star
            for pos in 0..p.len() {
                let stars = &idx.stars_at[pi][pos];
                if stars.is_empty() {
                    continue;
                }
                if stars.len() >= 2 {
                    best = Some(best.map_or(2, |b: usize| b.min(2)));
                }
                for &s in stars {
                    if let Some((lp, ls)) = last {
                        let against = if ls != s { Some(lp) } else { last_other };
                        if let Some(ap) = against {
                            let len = pos - ap + 2;
                            best = Some(best.map_or(len, |b| b.min(len)));
                        }
                    }
                }
                let s0 = stars[0];
                if let Some((lp, ls)) = last {
                    if ls != s0 {
                        last_other = Some(lp);
                    }
                }
                last = Some((pos, s0));
            }
        }
        best
    }

    /// d-ample in the weak, route-only sense: no route on at most d+1 edges.
    pub fn is_d_ample_weak(&self, idx: &ConstellationIndex, d: usize) -> bool {
        self.min_route_edges(idx).map_or(true, |m| m >= d + 2)
    }

    /// d-ample in the strengthened sense: additionally no star has a neighbor
    /// at path-distance less than d from a path extremity.
    pub fn is_d_ample(&self, idx: &ConstellationIndex, d: usize) -> bool {
        if !self.is_d_ample_weak(idx, d) {
            return false;
        }
        for (pi, p) in self.paths.iter().enumerate() {
            for pos in 0..p.len() {
                if idx.stars_at[pi][pos].is_empty() {
                    continue;
                }
                if pos < d || pos + d >= p.len() {
                    return false;
                }
            }
        }
        true
    }

    /// Interrupted under the given star order: every route is adjacent to
    /// every star strictly between its endpoints.
    pub fn check_interrupted(&self, idx: &ConstellationIndex) -> bool {
        self.routes(idx).iter().all(|r| {
            let (a, b) = r.endpoints;
            (a + 1..b).all(|z| star_touches(idx, z, r.path, r.lo, r.hi))
        })
    }

    /// q-zigzagged: every route leaves fewer than q strictly-between stars
    /// non-adjacent to it.
    pub fn check_zigzagged(&self, idx: &ConstellationIndex, q: usize) -> Result<bool> {
        if q < 1 {
            return Err(Error::invalid("zigzag parameter q must be >= 1"));
        }
        Ok(self.routes(idx).iter().all(|r| {
            let (a, b) = r.endpoints;
            let missed = (a + 1..b)
                .filter(|&z| !star_touches(idx, z, r.path, r.lo, r.hi))
                .count();
            missed < q
        }))
    }

    /// Brute-force order search, only for constellations with at most 8
    /// stars: the first permutation (lexicographic over order-indices) whose
    /// induced order passes `check_interrupted`, as a reordered star list.
    pub fn find_interrupted_order(&self) -> Result<Option<Vec<u32>>> {
        if self.stars.len() > 8 {
            return Err(Error::invalid(
                "order search is brute-force and limited to 8 stars",
            ));
        }
        self.validate()?;
        let k = self.stars.len();
        let mut perm: Vec<usize> = (0..k).collect();
        loop {
            let stars: Vec<u32> = perm.iter().map(|&i| self.stars[i]).collect();
            let c = Constellation::new(self.graph.clone(), stars.clone(), self.paths.clone());
            let idx = c.index()?;
            if c.check_interrupted(&idx) {
                return Ok(Some(stars));
            }
            if !next_permutation(&mut perm) {
                return Ok(None);
            }
        }
    }
}

fn star_touches(idx: &ConstellationIndex, star: usize, path: usize, lo: usize, hi: usize) -> bool {
    let positions = &idx.star_positions[star][path];
    let i = positions.partition_point(|&p| p < lo);
    i < positions.len() && positions[i] <= hi
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// The interval of a path vertex `anchor` relative to `star`: the maximal
/// subpath containing the anchor whose endpoints are adjacent to the star and
/// which no other star touches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub star: u32,
    pub anchor: u32,
    pub path: usize,
    /// inclusive position range
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn members<'a>(&self, c: &'a Constellation) -> &'a [u32] {
        &c.paths[self.path][self.lo..=self.hi]
    }
}

pub fn interval_of(
    c: &Constellation,
    idx: &ConstellationIndex,
    star: u32,
    anchor: u32,
) -> Result<Interval> {
    let si = *idx
        .star_index
        .get(&star)
        .ok_or_else(|| Error::invalid(format!("{star} is not a star")))?;
    let &(pi, pos) = idx
        .on_path
        .get(&anchor)
        .ok_or_else(|| Error::invalid(format!("{anchor} is not a path vertex")))?;
    if !c.graph.has_edge(star, anchor) {
        return Err(Error::invalid(format!(
            "anchor {anchor} is not adjacent to star {star}"
        )));
    }
    if idx.stars_at[pi][pos].len() > 1 {
        return Err(Error::invalid(format!(
            "anchor {anchor} is adjacent to more than one star"
        )));
    }
    // largest run around the anchor free of other stars
    let touched_by_other = |p: usize| idx.stars_at[pi][p].iter().any(|&z| z != si);
    let mut run_lo = pos;
    while run_lo > 0 && !touched_by_other(run_lo - 1) {
        run_lo -= 1;
    }
    let mut run_hi = pos;
    while run_hi + 1 < c.paths[pi].len() && !touched_by_other(run_hi + 1) {
        run_hi += 1;
    }
    // endpoints must be adjacent to the star: shrink to star positions
    let positions = &idx.star_positions[si][pi];
    let lo = positions
        .iter()
        .copied()
        .find(|&p| p >= run_lo && p <= pos)
        .expect("anchor itself is adjacent");
    let hi = positions
        .iter()
        .rev()
        .copied()
        .find(|&p| p <= run_hi && p >= pos)
        .expect("anchor itself is adjacent");
    Ok(Interval {
        star,
        anchor,
        path: pi,
        lo,
        hi,
    })
}

/// Lemma-style normalization: from a weakly d-ample constellation, drop the
/// star closest to each path end and keep the first `s` of the rest; the
/// result is d-ample in the strengthened sense.
pub fn normalize_ample(c: &Constellation, d: usize, s: usize) -> Result<Constellation> {
    if d < 1 {
        return Err(Error::invalid("normalize_ample requires d >= 1"));
    }
    if c.stars.len() < s + 2 * c.paths.len() {
        return Err(Error::invalid(format!(
            "need at least s + 2*paths = {} stars, got {}",
            s + 2 * c.paths.len(),
            c.stars.len()
        )));
    }
    let idx = c.index()?;
    if !c.is_d_ample_weak(&idx, d) {
        return Err(Error::invalid("constellation is not weakly d-ample"));
    }
    let mut discard = vec![false; c.stars.len()];
    for (pi, p) in c.paths.iter().enumerate() {
        let from_left = (0..p.len()).find(|&pos| !idx.stars_at[pi][pos].is_empty());
        let from_right = (0..p.len()).rev().find(|&pos| !idx.stars_at[pi][pos].is_empty());
        for pos in [from_left, from_right].into_iter().flatten() {
            let stars = &idx.stars_at[pi][pos];
            // weak d-ampleness (d >= 1) makes the closest star unique
            debug_assert_eq!(stars.len(), 1);
            discard[stars[0]] = true;
        }
    }
    let kept: Vec<u32> = c
        .stars
        .iter()
        .enumerate()
        .filter(|&(i, _)| !discard[i])
        .map(|(_, &v)| v)
        .take(s)
        .collect();
    if kept.len() < s {
        return Err(Error::invalid("too few stars survive end-discarding"));
    }
    // induced sub-constellation, reindexed over kept stars + all path vertices
    let mut keep_verts: Vec<u32> = kept.iter().copied().collect();
    keep_verts.extend(c.paths.iter().flatten().copied());
    keep_verts.sort_unstable();
    let sub = c.graph.induced(&keep_verts)?;
    let lookup = |v: u32| keep_verts.partition_point(|&x| x < v) as u32;
    let out = Constellation::new(
        sub,
        kept.iter().map(|&v| lookup(v)).collect(),
        c.paths
            .iter()
            .map(|p| p.iter().map(|&v| lookup(v)).collect())
            .collect(),
    );
    let out_idx = out.index()?;
    if !out.is_d_ample(&out_idx, d) {
        return Err(Error::invariant(
            "normalize_ample",
            "output is not strengthened d-ample",
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn grid_constellation(n: usize) -> Constellation {
        let b = families::pd_grid(n).unwrap();
        let stars = b.star_ids();
        let paths: Vec<Vec<u32>> = (0..n).map(|r| b.row_sequence(r)).collect();
        Constellation::new(b.graph, stars, paths)
    }

    fn general_constellation(s: usize, p: usize, g: usize, pad: usize) -> Constellation {
        let b = families::pd_grid_general(s, p, g, pad).unwrap();
        let stars = b.star_ids();
        let paths: Vec<Vec<u32>> = (0..p).map(|r| b.row_sequence(r)).collect();
        Constellation::new(b.graph, stars, paths)
    }

    fn death_star_constellation(h: usize) -> Constellation {
        let b = families::death_star(h).unwrap();
        Constellation::new(b.graph.clone(), b.star_ids(), vec![b.path_sequence()])
    }

    #[test]
    fn generator_constellations_validate() {
        for n in 2..=5 {
            assert!(grid_constellation(n).validate().unwrap().is_valid());
        }
        for h in 1..=5 {
            assert!(death_star_constellation(h).validate().unwrap().is_valid());
        }
    }

    #[test]
    fn star_in_path_list_is_invalid() {
        let mut c = grid_constellation(3);
        let s = c.stars.pop().unwrap();
        c.paths.push(vec![s]);
        assert!(!c.validate().unwrap().is_valid());
    }

    #[test]
    fn grid_is_interrupted_and_zigzagged_under_natural_order() {
        for n in 3..=5 {
            let c = grid_constellation(n);
            let idx = c.index().unwrap();
            assert!(c.check_interrupted(&idx), "n={n}");
            assert!(c.check_zigzagged(&idx, 1).unwrap(), "n={n}");
        }
    }

    #[test]
    fn two_stars_vacuously_interrupted() {
        let c = grid_constellation(2);
        let idx = c.index().unwrap();
        assert!(c.check_interrupted(&idx));
    }

    #[test]
    fn ample_examples() {
        // pd_grid: stars attach at column 0, distance 0 from the extremity
        let c = grid_constellation(4);
        let idx = c.index().unwrap();
        assert!(!c.is_d_ample(&idx, 1));
        assert!(c.is_d_ample_weak(&idx, 1)); // min route has 3 edges

        let c = general_constellation(4, 3, 3, 3);
        let idx = c.index().unwrap();
        assert!(c.is_d_ample(&idx, 3)); // min route = spacing + 2 = 5, padding 3

        let c = general_constellation(4, 3, 1, 3);
        let idx = c.index().unwrap();
        assert!(!c.is_d_ample(&idx, 3)); // a 3-edge route exists
    }

    #[test]
    fn ample_monotone_decreasing_in_d() {
        let c = general_constellation(5, 3, 3, 3);
        let idx = c.index().unwrap();
        let values: Vec<bool> = (0..6).map(|d| c.is_d_ample(&idx, d)).collect();
        for w in values.windows(2) {
            assert!(w[0] || !w[1], "is_d_ample must be monotone decreasing");
        }
    }

    #[test]
    fn zigzag_detects_skipped_star() {
        // one path of 7 vertices; stars a,b,c with a,c wide apart and b
        // attached only outside the a-c corridor
        let mut g = Graph::new(10);
        for i in 0..6u32 {
            g.add_edge(i, i + 1).unwrap();
        }
        let (a, b, c) = (7u32, 8u32, 9u32);
        g.add_edge(a, 0).unwrap();
        g.add_edge(b, 6).unwrap();
        g.add_edge(c, 3).unwrap();
        // route a..c covers positions 0..3 and misses b entirely
        let cst = Constellation::new(g, vec![a, b, c], vec![(0..7).collect()]);
        let idx = cst.index().unwrap();
        assert!(!cst.check_zigzagged(&idx, 1).unwrap());
        assert!(cst.check_zigzagged(&idx, 2).unwrap());
        assert!(!cst.check_interrupted(&idx));
    }

    #[test]
    fn death_star_order_search() {
        // h=3 admits some interrupted order, though not a construction order;
        // h=4 admits none (see the routes between the finest star and the
        // others, which pinch to two consecutive positions)
        let c3 = death_star_constellation(3);
        assert!(c3.find_interrupted_order().unwrap().is_some());
        let idx3 = c3.index().unwrap();
        assert!(!c3.check_interrupted(&idx3));
        let c4 = death_star_constellation(4);
        assert!(c4.find_interrupted_order().unwrap().is_none());
    }

    #[test]
    fn interval_examples() {
        let c = grid_constellation(3);
        let idx = c.index().unwrap();
        // interval of (star k, row vertex at column k) is that one vertex
        let b = families::pd_grid(3).unwrap();
        let iv = interval_of(&c, &idx, b.star_vertex(1), b.row_vertex(0, 1)).unwrap();
        assert_eq!((iv.lo, iv.hi), (1, 1));
        // anchor not adjacent
        assert!(interval_of(&c, &idx, b.star_vertex(1), b.row_vertex(0, 0)).is_err());
    }

    #[test]
    fn interval_spans_consecutive_attachments() {
        // star sees 3 consecutive vertices: interval is those 3
        let mut g = Graph::new(8);
        for i in 0..6u32 {
            g.add_edge(i, i + 1).unwrap();
        }
        let s = 7u32;
        for pos in [2u32, 3, 4] {
            g.add_edge(s, pos).unwrap();
        }
        let c = Constellation::new(g, vec![s], vec![(0..7).collect()]);
        let idx = c.index().unwrap();
        let iv = interval_of(&c, &idx, s, 3).unwrap();
        assert_eq!((iv.lo, iv.hi), (2, 4));
    }

    #[test]
    fn normalize_ample_examples() {
        // bound check: s + 2*paths exceeds the star count
        let c = grid_constellation(8);
        assert!(normalize_ample(&c, 1, 8).is_err());

        let c = general_constellation(10, 2, 3, 0);
        let idx = c.index().unwrap();
        assert!(c.is_d_ample_weak(&idx, 1));
        assert!(!c.is_d_ample(&idx, 1));
        let out = normalize_ample(&c, 1, 6).unwrap();
        assert_eq!(out.stars.len(), 6);
        let out_idx = out.index().unwrap();
        assert!(out.is_d_ample(&out_idx, 1));

        // already-strengthened input: output invariants still hold
        let c = general_constellation(8, 2, 3, 3);
        let out = normalize_ample(&c, 2, 4).unwrap();
        let out_idx = out.index().unwrap();
        assert!(out.is_d_ample(&out_idx, 2));
    }

    #[test]
    fn sub_constellation_closure() {
        // dropping stars and paths of a valid grid keeps it valid and
        // interrupted under the induced order
        let c = grid_constellation(5);
        let sub_stars: Vec<u32> = vec![c.stars[0], c.stars[2], c.stars[4]];
        let sub_paths: Vec<Vec<u32>> = vec![c.paths[1].clone(), c.paths[3].clone()];
        let mut keep: Vec<u32> = sub_stars.iter().copied().collect();
        keep.extend(sub_paths.iter().flatten().copied());
        keep.sort_unstable();
        let g = c.graph.induced(&keep).unwrap();
        let relabel = |v: u32| keep.partition_point(|&x| x < v) as u32;
        let sub = Constellation::new(
            g,
            sub_stars.iter().map(|&v| relabel(v)).collect(),
            sub_paths
                .iter()
                .map(|p| p.iter().map(|&v| relabel(v)).collect())
                .collect(),
        );
        assert!(sub.validate().unwrap().is_valid());
        let idx = sub.index().unwrap();
        assert!(sub.check_interrupted(&idx));
        assert!(sub.check_zigzagged(&idx, 1).unwrap());
    }
}
