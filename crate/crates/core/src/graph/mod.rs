//! Simple undirected graphs and the structural machinery built on them.
//!
//! Vertices are labeled `0..n`. Adjacency is stored as per-vertex sorted
//! neighbor lists, which keeps symmetric-difference style predicates cheap
//! and makes every derived ordering (edges, incidence columns, line-graph
//! vertices) reproducible.

pub mod canon;
mod distance;
pub mod enumerate;
mod generators;
mod io;
mod predicates;

pub use distance::{
    all_pairs_distances, eccentric_connectivity_index, eccentricities, total_eccentricity,
    DistanceMatrix, EccentricityVector,
};
pub use generators::{generate, GraphKind};
pub use io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, parse_graph6_lines};
pub use predicates::{
    girth, has_induced_f, has_property_dagger, is_bipartite, is_regular, is_self_centered,
    is_tree, is_triangle_free, pendant_count, predicates, triangle_free_vertices, Predicates,
    INDUCED_F_LIMIT,
};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    name: Option<String>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], name: None }
    }

    /// Builds a graph from an edge iterator. Duplicate edges collapse; loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::BadParams(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::BadParams(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        Ok(Graph { adj, name: None })
    }

    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        let g = Graph { adj, name: None };
        debug_assert!(g.check_invariants());
        g
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(i, j)` with `i < j` in lexicographic order. This is the column
    /// order of [`IncidenceMatrix`] and the vertex order of [`Graph::line_graph`].
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (i, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&j| j > i).map(|&j| (i, j)));
        }
        out
    }

    /// Symmetry, loop-freeness and sortedness of the adjacency lists.
    pub fn check_invariants(&self) -> bool {
        self.adj.iter().enumerate().all(|(i, nbrs)| {
            nbrs.windows(2).all(|w| w[0] < w[1])
                && nbrs.iter().all(|&j| j != i && j < self.n() && self.adj[j].binary_search(&i).is_ok())
        })
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        let comps = self.components();
        if comps.len() > 1 {
            return Err(Error::Disconnected { components: comps });
        }
        Ok(())
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|i| (0..n).filter(|&j| j != i && !self.has_edge(i, j)).collect())
            .collect();
        let g = Graph::from_sorted_adjacency(adj);
        match &self.name {
            Some(name) => g.with_name(format!("complement({name})")),
            None => g,
        }
    }

    /// Line graph; vertex `k` is the `k`-th edge of [`Graph::edges`].
    pub fn line_graph(&self) -> Result<Graph> {
        let edges = self.edges();
        if edges.is_empty() {
            return Err(Error::EmptyEdgeSet);
        }
        // incident[v] = indices of edges touching v
        let mut incident = vec![Vec::new(); self.n()];
        for (k, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(k);
            incident[v].push(k);
        }
        let mut adj = vec![Vec::new(); edges.len()];
        for (k, &(u, v)) in edges.iter().enumerate() {
            let nbrs = &mut adj[k];
            nbrs.extend(incident[u].iter().chain(&incident[v]).copied().filter(|&m| m != k));
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        let g = Graph::from_sorted_adjacency(adj);
        Ok(match &self.name {
            Some(name) => g.with_name(format!("L({name})")),
            None => g,
        })
    }

    pub fn incidence(&self) -> IncidenceMatrix {
        IncidenceMatrix { p: self.n(), edges: self.edges() }
    }

    /// Subgraph induced by `vertices`, relabeled in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n()];
        for (k, &v) in vertices.iter().enumerate() {
            pos[v] = k;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut nbrs: Vec<usize> =
                    self.adj[v].iter().map(|&w| pos[w]).filter(|&k| k != usize::MAX).collect();
                nbrs.sort_unstable();
                nbrs
            })
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length");
        let mut adj = vec![Vec::new(); self.n()];
        for (v, nbrs) in self.adj.iter().enumerate() {
            let mut mapped: Vec<usize> = nbrs.iter().map(|&w| perm[w]).collect();
            mapped.sort_unstable();
            adj[perm[v]] = mapped;
        }
        Graph { adj, name: self.name.clone() }
    }

    /// Disjoint union, `other` relabeled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|nbrs| nbrs.iter().map(|&w| w + off).collect()));
        Graph::from_sorted_adjacency(adj)
    }

    /// Short human-readable descriptor: the name when known, else graph6.
    pub fn descriptor(&self) -> String {
        match &self.name {
            Some(name) => name.clone(),
            None => emit_graph6(self),
        }
    }
}

/// Vertex-edge incidence matrix `R` (`p × q`), columns in lexicographic edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    p: usize,
    edges: Vec<(usize, usize)>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.p
    }

    pub fn cols(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn get(&self, v: usize, e: usize) -> u8 {
        let (a, b) = self.edges[e];
        u8::from(v == a || v == b)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        (0..self.p)
            .map(|v| (0..self.cols()).map(|e| i64::from(self.get(v, e))).collect())
            .collect()
    }

    /// `R · Rᵀ` (`p × p`).
    pub fn r_rt(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64; self.p]; self.p];
        for &(a, b) in &self.edges {
            out[a][a] += 1;
            out[b][b] += 1;
            out[a][b] += 1;
            out[b][a] += 1;
        }
        out
    }

    /// `Rᵀ · R` (`q × q`).
    pub fn rt_r(&self) -> Vec<Vec<i64>> {
        let q = self.cols();
        let mut out = vec![vec![0i64; q]; q];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            for (j, &(c, d)) in self.edges.iter().enumerate() {
                out[i][j] = [a, b].iter().filter(|&&x| x == c || x == d).count() as i64;
            }
        }
        out
    }
}
