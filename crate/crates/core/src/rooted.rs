//! Rooted-tree accessors: parents, lca, subtrees.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug)]
pub struct RootedTree {
    root: u32,
    parent: Vec<u32>, // parent[root] == root
    depth: Vec<u32>,
    children: Vec<Vec<u32>>,
}

/// Roots a tree at `root`. Errors if the graph is not a tree.
pub fn rooted(g: &Graph, root: u32) -> Result<RootedTree> {
    g.check_vertex(root)?;
    if !g.is_tree() {
        return Err(Error::invalid("rooted() requires a tree"));
    }
    let n = g.n();
    let mut parent = vec![u32::MAX; n];
    let mut depth = vec![0u32; n];
    let mut children = vec![Vec::new(); n];
    parent[root as usize] = root;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if parent[w as usize] == u32::MAX {
                parent[w as usize] = v;
                depth[w as usize] = depth[v as usize] + 1;
                children[v as usize].push(w);
                queue.push_back(w);
            }
        }
    }
    Ok(RootedTree {
        root,
        parent,
        depth,
        children,
    })
}

impl RootedTree {
    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn parent(&self, v: u32) -> Option<u32> {
        if v == self.root {
            None
        } else {
            Some(self.parent[v as usize])
        }
    }

    pub fn depth(&self, v: u32) -> u32 {
        self.depth[v as usize]
    }

    pub fn children(&self, v: u32) -> &[u32] {
        &self.children[v as usize]
    }

    pub fn lca(&self, mut u: u32, mut v: u32) -> u32 {
        while self.depth[u as usize] > self.depth[v as usize] {
            u = self.parent[u as usize];
        }
        while self.depth[v as usize] > self.depth[u as usize] {
            v = self.parent[v as usize];
        }
        while u != v {
            u = self.parent[u as usize];
            v = self.parent[v as usize];
        }
        u
    }

    /// True iff `u` is a (not necessarily strict) ancestor of `v`.
    pub fn is_ancestor(&self, u: u32, v: u32) -> bool {
        self.lca(u, v) == u
    }

    /// Vertices of the subtree rooted at `x`, ascending.
    pub fn subtree(&self, x: u32) -> Vec<u32> {
        let mut out = vec![x];
        let mut stack = vec![x];
        while let Some(v) = stack.pop() {
            for &c in self.children(v) {
                out.push(c);
                stack.push(c);
            }
        }
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_lca() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let rt = rooted(&g, 0).unwrap();
        assert_eq!(rt.lca(2, 1), 1);
        assert_eq!(rt.lca(0, 2), 0);
        assert_eq!(rt.subtree(1), vec![1, 2]);
    }

    #[test]
    fn star_lca_is_center() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let rt = rooted(&g, 0).unwrap();
        assert_eq!(rt.lca(1, 2), 0);
    }

    #[test]
    fn rejects_non_tree() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(rooted(&g, 0).is_err());
    }
}
