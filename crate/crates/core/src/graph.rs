//! Finite simple undirected graphs, circulant graphs, and fold reduction.
//!
//! Vertices are `0..num_vertices`. Adjacency is kept as one sorted neighbor
//! list per vertex, so neighborhoods can be compared with a linear merge.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

/// A vertex index.
pub type Vertex = usize;

/// Largest graph accepted by [`Graph::is_isomorphic_small`].
pub const ISOMORPHISM_VERTEX_LIMIT: usize = 12;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {num_vertices} vertices")]
    VertexOutOfRange { vertex: Vertex, num_vertices: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge {{{0}, {1}}} listed more than once")]
    MultiEdge(Vertex, Vertex),
    #[error("invalid circulant parameters: {0}")]
    InvalidParameter(&'static str),
    #[error("isomorphism test limited to {ISOMORPHISM_VERTEX_LIMIT} vertices, got {0}")]
    TooLarge(usize),
}

/// A finite simple undirected graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Graph on `num_vertices` vertices with no edges.
    pub fn empty(num_vertices: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); num_vertices],
        }
    }

    /// Builds a graph from an undirected edge list.
    ///
    /// Self-loops and repeated edges (in either orientation) are rejected.
    pub fn from_edges(
        num_vertices: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        let mut adjacency = vec![Vec::new(); num_vertices];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= num_vertices {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        num_vertices,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::MultiEdge(u.min(v), u.max(v)));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self { adjacency })
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let adjacency = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Self { adjacency }
    }

    /// Cycle graph `C_n` (`n >= 3`).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least three vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are simple")
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are simple")
    }

    /// The 3-dimensional cube graph `Q_3`.
    pub fn cube() -> Self {
        let edges = (0..8usize).flat_map(|v| {
            (0..3)
                .map(move |b| (v, v ^ (1 << b)))
                .filter(|&(a, b)| a < b)
        });
        Self::from_edges(8, edges).expect("cube edges are simple")
    }

    /// The 8-vertex cubic graph excluded, together with `K_4`, from the
    /// max-degree-3 classification.
    pub fn excluded_cubic_t() -> Self {
        // 1-based drawing labels, shifted to 0-based.
        const EDGES: [(usize, usize); 12] = [
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 7),
            (2, 8),
            (4, 7),
            (4, 5),
            (3, 5),
            (3, 8),
            (5, 6),
            (6, 7),
            (6, 8),
        ];
        Self::from_edges(8, EDGES.iter().map(|&(a, b)| (a - 1, b - 1)))
            .expect("T edges are simple")
    }

    /// Circulant graph on `Z_n`: `u ~ v` iff `(u - v) mod n` lies in `S ∪ -S`.
    ///
    /// Duplicate generators are ignored.
    pub fn circulant(n: usize, generators: &[usize]) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::InvalidParameter("n must be at least 2"));
        }
        if generators.iter().any(|&g| g == 0 || g >= n) {
            return Err(GraphError::InvalidParameter(
                "generators must lie in 1..n-1",
            ));
        }
        let offsets: BTreeSet<usize> = generators.iter().flat_map(|&g| [g, n - g]).collect();
        let adjacency = (0..n)
            .map(|v| {
                let mut nbrs: Vec<Vertex> = offsets.iter().map(|&o| (v + o) % n).collect();
                nbrs.sort_unstable();
                nbrs
            })
            .collect();
        Ok(Self { adjacency })
    }

    pub fn num_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Sorted neighbors of `v`.
    pub fn neighborhood(&self, v: Vertex) -> Result<&[Vertex], GraphError> {
        self.adjacency
            .get(v)
            .map(Vec::as_slice)
            .ok_or(GraphError::VertexOutOfRange {
                vertex: v,
                num_vertices: self.num_vertices(),
            })
    }

    pub(crate) fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency
            .get(u)
            .is_some_and(|nbrs| nbrs.binary_search(&v).is_ok())
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Sorted degree sequence, largest first.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let mut dsu = DisjointSets::new(self.num_vertices());
        for (u, v) in self.edges() {
            dsu.union(u, v);
        }
        dsu.groups()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Subgraph induced on `keep`, relabelled `0..keep.len()` in the order given.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Self {
        let mut index = vec![usize::MAX; self.num_vertices()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adjacency = keep
            .iter()
            .map(|&v| {
                let mut nbrs: Vec<Vertex> = self.adjacency[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                nbrs.sort_unstable();
                nbrs
            })
            .collect();
        Self { adjacency }
    }

    /// Lexicographically smallest `(u, v)`, `u != v`, with `N(u) ⊆ N(v)`.
    pub fn find_fold(&self) -> Option<(Vertex, Vertex)> {
        let n = self.num_vertices();
        (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .find(|&(u, v)| u != v && is_sorted_subset(&self.adjacency[u], &self.adjacency[v]))
    }

    /// Deletes dominated vertices until no fold remains.
    ///
    /// Returns the reduced graph, relabelled, together with the original
    /// labels of the surviving vertices.
    pub fn fold_reduce_with_labels(&self) -> (Graph, Vec<Vertex>) {
        let mut graph = self.clone();
        let mut labels: Vec<Vertex> = (0..self.num_vertices()).collect();
        while let Some((u, _)) = graph.find_fold() {
            let keep: Vec<Vertex> = (0..graph.num_vertices()).filter(|&w| w != u).collect();
            graph = graph.induced_subgraph(&keep);
            labels.remove(u);
        }
        (graph, labels)
    }

    /// Repeated folding; see [`Graph::fold_reduce_with_labels`].
    pub fn fold_reduce(&self) -> Graph {
        self.fold_reduce_with_labels().0
    }

    /// Exact isomorphism test by backtracking, for graphs of at most
    /// [`ISOMORPHISM_VERTEX_LIMIT`] vertices.
    pub fn is_isomorphic_small(&self, other: &Graph) -> Result<bool, GraphError> {
        for g in [self, other] {
            if g.num_vertices() > ISOMORPHISM_VERTEX_LIMIT {
                return Err(GraphError::TooLarge(g.num_vertices()));
            }
        }
        if self.num_vertices() != other.num_vertices()
            || self.num_edges() != other.num_edges()
            || self.degree_sequence() != other.degree_sequence()
        {
            return Ok(false);
        }
        let n = self.num_vertices();
        let mut mapping = vec![usize::MAX; n];
        let mut used = vec![false; n];
        Ok(extend_isomorphism(self, other, 0, &mut mapping, &mut used))
    }
}

fn extend_isomorphism(
    g: &Graph,
    h: &Graph,
    next: Vertex,
    mapping: &mut [Vertex],
    used: &mut [bool],
) -> bool {
    if next == g.num_vertices() {
        return true;
    }
    for image in 0..h.num_vertices() {
        if used[image] || g.degree(next) != h.degree(image) {
            continue;
        }
        let consistent = (0..next).all(|prev| g.is_adjacent(prev, next) == h.is_adjacent(mapping[prev], image));
        if !consistent {
            continue;
        }
        mapping[next] = image;
        used[image] = true;
        if extend_isomorphism(g, h, next + 1, mapping, used) {
            return true;
        }
        used[image] = false;
    }
    mapping[next] = usize::MAX;
    false
}

/// `a ⊆ b` for sorted, duplicate-free slices.
pub(crate) fn is_sorted_subset(a: &[usize], b: &[usize]) -> bool {
    let mut rest = b.iter();
    a.iter().all(|x| rest.by_ref().any(|y| y == x))
}

/// Union-find over `0..n`.
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins so group order is stable
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// Groups in order of their smallest member.
    pub(crate) fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let root = self.find(x);
            if slot[root] == usize::MAX {
                slot[root] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[root]].push(x);
        }
        groups
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circulant_neighbors_match_formula() {
        let g = Graph::circulant(10, &[1, 3]).unwrap();
        assert_eq!(g.neighborhood(0).unwrap(), &[1, 3, 7, 9]);
        assert_eq!(g.neighborhood(4).unwrap(), &[1, 3, 5, 7]);
    }

    #[test]
    fn circulant_with_half_generator_is_cubic() {
        let g = Graph::circulant(6, &[1, 3]).unwrap();
        assert_eq!(g.neighborhood(0).unwrap(), &[1, 3, 5]);
        assert!((0..6).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn c5_1_2_is_k5() {
        assert_eq!(Graph::circulant(5, &[1, 2]).unwrap(), Graph::complete(5));
    }

    #[test]
    fn circulant_rejects_bad_generators() {
        assert!(matches!(
            Graph::circulant(8, &[0, 3]),
            Err(GraphError::InvalidParameter(_))
        ));
        assert!(Graph::circulant(8, &[1, 8]).is_err());
        assert_eq!(
            Graph::circulant(8, &[1, 3, 3]).unwrap(),
            Graph::circulant(8, &[1, 3]).unwrap()
        );
    }

    #[test]
    fn neighborhoods_of_small_graphs() {
        let p = Graph::path(3);
        assert_eq!(p.neighborhood(1).unwrap(), &[0, 2]);
        let g = Graph::empty(2);
        assert!(g.neighborhood(0).unwrap().is_empty());
        assert!(matches!(
            g.neighborhood(2),
            Err(GraphError::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn edge_list_validation() {
        assert_eq!(
            Graph::from_edges(3, [(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::MultiEdge(0, 1))
        );
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn fold_on_path_and_c12() {
        assert_eq!(Graph::path(3).find_fold(), Some((0, 2)));
        let c12 = Graph::circulant(12, &[1, 5]).unwrap();
        assert_eq!(c12.find_fold(), Some((0, 6)));
        assert_eq!(Graph::complete(5).find_fold(), None);
    }

    #[test]
    fn fold_reduce_examples() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.fold_reduce(), Graph::complete(2));

        let (core, labels) = Graph::circulant(12, &[1, 5])
            .unwrap()
            .fold_reduce_with_labels();
        assert_eq!(core.num_vertices(), 6);
        assert_eq!(labels, vec![6, 7, 8, 9, 10, 11]);
        assert!(core.find_fold().is_none());

        let k5 = Graph::complete(5);
        assert_eq!(k5.fold_reduce(), k5);
    }

    #[test]
    fn isomorphism_small() {
        let k4 = Graph::complete(4);
        let drawn = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (3, 2)]).unwrap();
        assert!(k4.is_isomorphic_small(&drawn).unwrap());
        assert!(!k4.is_isomorphic_small(&Graph::cycle(4)).unwrap());
        // T is cubic and bipartite on 4 + 4 vertices, hence K_{4,4} minus a
        // perfect matching, which is the cube
        assert!(Graph::excluded_cubic_t().is_isomorphic_small(&Graph::cube()).unwrap());
        let wagner = Graph::circulant(8, &[1, 4]).unwrap();
        assert_eq!(wagner.degree_sequence(), Graph::cube().degree_sequence());
        assert!(!wagner.is_isomorphic_small(&Graph::cube()).unwrap());
        let relabelled = Graph::cube().induced_subgraph(&[7, 3, 5, 1, 6, 2, 4, 0]);
        assert!(Graph::cube().is_isomorphic_small(&relabelled).unwrap());
        assert!(matches!(
            Graph::complete(13).is_isomorphic_small(&Graph::complete(13)),
            Err(GraphError::TooLarge(13))
        ));
    }

    #[test]
    fn excluded_t_is_cubic() {
        let t = Graph::excluded_cubic_t();
        assert_eq!(t.num_vertices(), 8);
        assert!((0..8).all(|v| t.degree(v) == 3));
        assert!(t.is_connected());
    }
}
