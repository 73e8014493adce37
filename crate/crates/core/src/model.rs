//! Induced-minor models: the certificate currency of the crate.
//!
//! A model maps each pattern vertex to a branch set of host vertices. It is
//! valid when the branch sets are pairwise disjoint, each is connected in the
//! host, and two branch sets are joined by a host edge exactly when the
//! corresponding pattern vertices are adjacent.

use crate::bits::BitSet;
use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Debug)]
pub struct InducedMinorModel {
    pub pattern: Graph,
    pub host: Graph,
    /// `branch[v]` is the branch set of pattern vertex `v`, sorted ascending.
    pub branch: Vec<Vec<u32>>,
}

/// The first reason a model fails, with the offending vertices.
///
/// Checks run in a fixed order (coverage, ranges, emptiness, overlap,
/// connectivity, adjacency) and scan ascending, so the report is
/// deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelViolation {
    /// branch map does not have exactly one set per pattern vertex
    BranchCountMismatch { expected: usize, got: usize },
    EmptyBranch { pattern_vertex: u32 },
    /// two branch sets share a host vertex
    Overlap { first: u32, second: u32, host_vertex: u32 },
    Disconnected { pattern_vertex: u32 },
    /// pattern edge uv with no host edge between the branch sets
    MissingAdjacency { u: u32, v: u32 },
    /// host edge between branch sets of a pattern non-edge
    ForbiddenAdjacency { u: u32, v: u32 },
}

impl std::fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModelViolation::BranchCountMismatch { expected, got } => {
                write!(f, "branch map has {got} sets, pattern has {expected} vertices")
            }
            ModelViolation::EmptyBranch { pattern_vertex } => {
                write!(f, "branch set of pattern vertex {pattern_vertex} is empty")
            }
            ModelViolation::Overlap { first, second, host_vertex } => write!(
                f,
                "branch sets of {first} and {second} overlap at host vertex {host_vertex}"
            ),
            ModelViolation::Disconnected { pattern_vertex } => {
                write!(f, "branch set of pattern vertex {pattern_vertex} is not connected")
            }
            ModelViolation::MissingAdjacency { u, v } => {
                write!(f, "pattern edge ({u},{v}) has no host edge between its branch sets")
            }
            ModelViolation::ForbiddenAdjacency { u, v } => write!(
                f,
                "host edge joins branch sets of non-adjacent pattern vertices ({u},{v})"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Violation(ModelViolation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

impl InducedMinorModel {
    pub fn new(pattern: Graph, host: Graph, branch: Vec<Vec<u32>>) -> Self {
        InducedMinorModel {
            pattern,
            host,
            branch,
        }
    }

    /// Union of all branch sets, ascending.
    pub fn support(&self) -> Vec<u32> {
        let mut all: Vec<u32> = self.branch.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }
}

/// Checks the three model invariants and reports the first failure.
///
/// Errors (rather than reporting a violation) when a branch set references a
/// nonexistent host vertex or is not sorted: that is a malformed input, not a
/// failed certificate.
pub fn verify_model(m: &InducedMinorModel) -> Result<Verdict> {
    if m.branch.len() != m.pattern.n() {
        return Ok(Verdict::Violation(ModelViolation::BranchCountMismatch {
            expected: m.pattern.n(),
            got: m.branch.len(),
        }));
    }
    for set in &m.branch {
        m.host.check_vertex_set(set)?;
    }
    for (v, set) in m.branch.iter().enumerate() {
        if set.is_empty() {
            return Ok(Verdict::Violation(ModelViolation::EmptyBranch {
                pattern_vertex: v as u32,
            }));
        }
    }

    // overlap: first host vertex claimed twice, scanning branch sets in order
    let mut owner = vec![u32::MAX; m.host.n()];
    for (v, set) in m.branch.iter().enumerate() {
        for &h in set {
            if owner[h as usize] != u32::MAX {
                return Ok(Verdict::Violation(ModelViolation::Overlap {
                    first: owner[h as usize],
                    second: v as u32,
                    host_vertex: h,
                }));
            }
            owner[h as usize] = v as u32;
        }
    }

    for (v, set) in m.branch.iter().enumerate() {
        if !m.host.set_is_connected(set) {
            return Ok(Verdict::Violation(ModelViolation::Disconnected {
                pattern_vertex: v as u32,
            }));
        }
    }

    // adjacency-iff, pattern pairs in lexicographic order
    let rows: Vec<BitSet> = m
        .branch
        .iter()
        .map(|set| BitSet::from_slice(m.host.n(), set))
        .collect();
    let mut nbhd: Vec<BitSet> = Vec::with_capacity(m.branch.len());
    for set in &m.branch {
        let mut acc = BitSet::new(m.host.n());
        for &h in set {
            for &w in m.host.neighbors(h) {
                acc.insert(w);
            }
        }
        nbhd.push(acc);
    }
    for u in 0..m.branch.len() {
        for v in u + 1..m.branch.len() {
            let touching = nbhd[u].intersects(&rows[v]);
            let pattern_edge = m.pattern.has_edge(u as u32, v as u32);
            if pattern_edge && !touching {
                return Ok(Verdict::Violation(ModelViolation::MissingAdjacency {
                    u: u as u32,
                    v: v as u32,
                }));
            }
            if !pattern_edge && touching {
                return Ok(Verdict::Violation(ModelViolation::ForbiddenAdjacency {
                    u: u as u32,
                    v: v as u32,
                }));
            }
        }
    }
    Ok(Verdict::Valid)
}

/// The canonical K_{n,n} model in the n x n Pohoata-Davies grid: star
/// singletons on one side, whole row paths on the other.
///
/// Pattern layout: vertices `0..n` are the star side, `n..2n` the row side.
pub fn pd_grid_biclique_model(n: usize) -> Result<InducedMinorModel> {
    let grid = crate::families::pd_grid(n)?;
    let mut pattern = Graph::new(2 * n);
    for s in 0..n as u32 {
        for r in 0..n as u32 {
            pattern.add_edge(s, n as u32 + r)?;
        }
    }
    let mut branch = Vec::with_capacity(2 * n);
    for k in 0..n {
        branch.push(vec![grid.star_vertex(k)]);
    }
    for r in 0..n {
        branch.push(grid.row_sequence(r));
    }
    Ok(InducedMinorModel::new(pattern, grid.graph, branch))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn biclique_model_in_pd_grid_is_valid() {
        for n in 2..=4 {
            let m = pd_grid_biclique_model(n).unwrap();
            assert_eq!(verify_model(&m).unwrap(), Verdict::Valid, "n={n}");
        }
    }

    #[test]
    fn moving_row_vertices_into_a_star_branch_breaks_independence() {
        // moving a single boundary vertex into its own star's branch is an
        // edge contraction between adjacent branches and stays valid; moving
        // the column-1 vertex along with it makes star 0's branch touch
        // star 1
        let mut m = pd_grid_biclique_model(3).unwrap();
        let a = m.branch[3].remove(0);
        let b = m.branch[3].remove(0);
        m.branch[0].extend([a, b]);
        m.branch[0].sort_unstable();
        let verdict = verify_model(&m).unwrap();
        assert_eq!(
            verdict,
            Verdict::Violation(ModelViolation::ForbiddenAdjacency { u: 0, v: 1 })
        );
    }

    #[test]
    fn single_boundary_contraction_stays_valid() {
        let mut m = pd_grid_biclique_model(3).unwrap();
        let v = m.branch[3].remove(0);
        m.branch[0].push(v);
        m.branch[0].sort_unstable();
        assert_eq!(verify_model(&m).unwrap(), Verdict::Valid);
    }

    #[test]
    fn splitting_a_branch_reports_disconnected() {
        let mut m = pd_grid_biclique_model(3).unwrap();
        // drop the middle vertex of row 0's branch set
        m.branch[3].remove(1);
        let verdict = verify_model(&m).unwrap();
        assert_eq!(
            verdict,
            Verdict::Violation(ModelViolation::Disconnected { pattern_vertex: 3 })
        );
    }

    #[test]
    fn deleting_a_branch_reports_count_mismatch() {
        let mut m = pd_grid_biclique_model(3).unwrap();
        m.branch.pop();
        let verdict = verify_model(&m).unwrap();
        assert!(matches!(
            verdict,
            Verdict::Violation(ModelViolation::BranchCountMismatch { .. })
        ));
    }

    #[test]
    fn k2_k1_in_p3_has_extra_adjacency() {
        let host = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let pattern = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let m = InducedMinorModel::new(pattern, host, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(
            verify_model(&m).unwrap(),
            Verdict::Violation(ModelViolation::ForbiddenAdjacency { u: 1, v: 2 })
        );
    }

    #[test]
    fn out_of_range_branch_is_input_error() {
        let host = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let pattern = Graph::new(1);
        let m = InducedMinorModel::new(pattern, host, vec![vec![7]]);
        assert!(verify_model(&m).is_err());
    }
}
