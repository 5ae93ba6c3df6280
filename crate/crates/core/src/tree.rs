//! Validated labeled trees on dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// A labeled tree. Immutable once built; every constructor validates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

/// Per-vertex exact integer profile (distances, eccentricities, transmissions, degrees).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexVector(Vec<u64>);

impl VertexVector {
    pub fn into_inner(self) -> Vec<u64> {
        self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl Deref for VertexVector {
    type Target = [u64];

    fn deref(&self) -> &[u64] {
        &self.0
    }
}

impl From<Vec<u64>> for VertexVector {
    fn from(v: Vec<u64>) -> Self {
        VertexVector(v)
    }
}

impl Tree {
    /// Builds a tree from an edge list over vertices `0..n`.
    ///
    /// Rejects out-of-range endpoints, self-loops, duplicate edges, too many
    /// edges (a cycle) and too few or badly placed edges (disconnected).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Tree> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        if normalized.len() > n - 1 {
            return Err(Error::Cyclic {
                n,
                edges: normalized.len(),
            });
        }
        if normalized.len() < n - 1 {
            return Err(Error::Disconnected);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let tree = Tree {
            adjacency,
            edges: normalized,
        };
        if tree.reachable_count(0) != n {
            return Err(Error::Disconnected);
        }
        Ok(tree)
    }

    /// Builds the tree whose vertex `i` is the `i`-th entry of a level
    /// sequence (preorder depths, root at index 0 with level 0).
    pub fn from_level_sequence(levels: &[u32]) -> Result<Tree> {
        if levels.is_empty() {
            return Err(Error::Empty);
        }
        if levels[0] != 0 {
            return Err(Error::Parse("level sequence must start at 0".into()));
        }
        // stack[d] = most recent vertex seen at depth d
        let mut stack: Vec<usize> = vec![0];
        let mut edges = Vec::with_capacity(levels.len() - 1);
        for (i, &lvl) in levels.iter().enumerate().skip(1) {
            let lvl = lvl as usize;
            if lvl == 0 || lvl > stack.len() {
                return Err(Error::Parse(format!(
                    "level {lvl} at position {i} does not follow a valid parent"
                )));
            }
            stack.truncate(lvl);
            edges.push((stack[lvl - 1], i));
            stack.push(i);
        }
        Tree::from_edges(levels.len(), &edges)
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.order(),
            })
        }
    }

    pub fn degrees(&self) -> VertexVector {
        self.adjacency.iter().map(|a| a.len() as u64).collect::<Vec<_>>().into()
    }

    /// Degree-1 vertices in ascending order. The single-vertex tree has none.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Sizes of the two color classes, normalized so that `p <= q`.
    pub fn bipartition_sizes(&self) -> (usize, usize) {
        let dist = self.distances_from(0);
        let even = dist.iter().filter(|&&d| d % 2 == 0).count();
        let odd = self.order() - even;
        (even.min(odd), even.max(odd))
    }

    /// Exact BFS distances from `v`.
    pub fn bfs_distances(&self, v: usize) -> Result<VertexVector> {
        self.check_vertex(v)?;
        Ok(self.distances_from(v).into())
    }

    pub(crate) fn distances_from(&self, v: usize) -> Vec<u64> {
        let mut dist = vec![u64::MAX; self.order()];
        let mut queue = VecDeque::with_capacity(self.order());
        dist[v] = 0;
        queue.push_back(v);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adjacency[x] {
                if dist[y] == u64::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    fn reachable_count(&self, start: usize) -> usize {
        self.distances_from(start)
            .iter()
            .filter(|&&d| d != u64::MAX)
            .count()
    }

    /// Vertices of the component containing `root` once every vertex in
    /// `blocked` is removed. `root` itself must not be blocked.
    pub fn component_avoiding(&self, root: usize, blocked: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        for &b in blocked {
            seen[b] = true;
        }
        seen[root] = true;
        let mut out = vec![root];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            i += 1;
            for &y in &self.adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Vertex sequence of the unique path from `u` to `v`.
    pub fn path_between(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut parent = vec![usize::MAX; self.order()];
        let mut queue = VecDeque::new();
        parent[u] = u;
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &y in &self.adjacency[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut path = vec![v];
        let mut x = v;
        while x != u {
            x = parent[x];
            path.push(x);
        }
        path.reverse();
        Ok(path)
    }

    /// Returns the same tree with edges rewired: every `(a, b)` in `remove`
    /// is dropped and every pair in `add` is inserted. The result is
    /// re-validated.
    pub(crate) fn rewire(&self, remove: &[(usize, usize)], add: &[(usize, usize)]) -> Result<Tree> {
        let drop: Vec<(usize, usize)> = remove.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .copied()
            .filter(|e| !drop.contains(e))
            .collect();
        edges.extend_from_slice(add);
        Tree::from_edges(self.order(), &edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Tree> {
        if perm.len() != self.order() {
            return Err(Error::param("permutation length differs from tree order"));
        }
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Tree::from_edges(self.order(), &edges)
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree(n={}, edges={:?})", self.order(), self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Tree {
        Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn s4() -> Tree {
        Tree::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn builds_path_and_star() {
        assert_eq!(p4().edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(s4().neighbors(0), &[1, 2, 3]);
        let t = Tree::from_edges(3, &[(2, 1), (1, 0)]).unwrap();
        assert_eq!(t.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(t.neighbors(1), &[0, 2]);
    }

    #[test]
    fn rejects_invalid_inputs_with_distinct_kinds() {
        assert!(matches!(
            Tree::from_edges(4, &[(0, 1), (2, 3)]),
            Err(Error::Disconnected)
        ));
        assert!(matches!(
            Tree::from_edges(4, &[(0, 1), (1, 2), (0, 2)]),
            Err(Error::Disconnected)
        ));
        assert!(matches!(
            Tree::from_edges(3, &[(0, 1), (1, 2), (0, 2)]),
            Err(Error::Cyclic { n: 3, edges: 3 })
        ));
        assert!(matches!(
            Tree::from_edges(3, &[(0, 0), (1, 2)]),
            Err(Error::SelfLoop(0))
        ));
        assert!(matches!(
            Tree::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            Tree::from_edges(3, &[(0, 1), (1, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(Tree::from_edges(0, &[]), Err(Error::Empty)));
    }

    #[test]
    fn single_vertex() {
        let t = Tree::from_edges(1, &[]).unwrap();
        assert_eq!(t.order(), 1);
        assert!(t.leaves().is_empty());
        assert_eq!(t.bipartition_sizes(), (0, 1));
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(&*p4().bfs_distances(0).unwrap(), &[0, 1, 2, 3]);
        assert_eq!(&*s4().bfs_distances(1).unwrap(), &[1, 0, 2, 2]);
        assert!(matches!(
            p4().bfs_distances(4),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        ));
    }

    #[test]
    fn leaves_and_bipartition() {
        assert_eq!(s4().leaves(), vec![1, 2, 3]);
        assert_eq!(s4().bipartition_sizes(), (1, 3));
        assert_eq!(p4().leaves(), vec![0, 3]);
        assert_eq!(p4().bipartition_sizes(), (2, 2));
    }

    #[test]
    fn level_sequence_roundtrip() {
        let t = Tree::from_level_sequence(&[0, 1, 2, 1, 1]).unwrap();
        assert_eq!(t.edges(), &[(0, 1), (0, 3), (0, 4), (1, 2)]);
        assert!(Tree::from_level_sequence(&[0, 2]).is_err());
        assert!(Tree::from_level_sequence(&[1]).is_err());
    }

    #[test]
    fn path_between_and_components() {
        let t = p4();
        assert_eq!(t.path_between(3, 0).unwrap(), vec![3, 2, 1, 0]);
        assert_eq!(t.component_avoiding(2, &[1]), vec![2, 3]);
    }
}
