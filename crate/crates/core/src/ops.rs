//! Central graph, the three central joins, and the eccentric graph.
//!
//! Products are labeled block by block: the vertices of `G₁` keep their
//! labels, the subdivision vertices follow in lexicographic edge order
//! (the incidence-matrix column order), then the vertices of `G₂` and `G₃`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, eccentricities, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BlockRole {
    V1,
    I1,
    V2,
    V3,
}

impl fmt::Display for BlockRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BlockRole::V1 => "V1",
            BlockRole::I1 => "I1",
            BlockRole::V2 => "V2",
            BlockRole::V3 => "V3",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Block {
    pub role: BlockRole,
    pub start: usize,
    pub len: usize,
}

impl Block {
    pub fn range(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.len
    }
}

/// A constructed graph together with the vertex ranges of its building blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledProduct {
    pub result: Graph,
    pub block_offsets: Vec<Block>,
}

impl LabeledProduct {
    pub fn block(&self, role: BlockRole) -> Option<Block> {
        self.block_offsets.iter().copied().find(|b| b.role == role)
    }

    /// Nonempty blocks as index lists, in block order.
    pub fn partition(&self) -> Vec<Vec<usize>> {
        self.block_offsets.iter().filter(|b| b.len > 0).map(|b| b.range().collect()).collect()
    }
}

fn name_of(g: &Graph) -> String {
    g.descriptor()
}

/// Edge list of `C[g]` on `p + q` vertices.
fn central_edges(g: &Graph) -> Result<Vec<(usize, usize)>> {
    let p = g.n();
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::EmptyEdgeSet);
    }
    let mut out = Vec::new();
    for u in 0..p {
        for v in u + 1..p {
            if !g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    for (k, &(u, v)) in edges.iter().enumerate() {
        out.push((u, p + k));
        out.push((v, p + k));
    }
    Ok(out)
}

fn shifted(g: &Graph, offset: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    g.edges().into_iter().map(move |(u, v)| (u + offset, v + offset))
}

fn complete_join(a: std::ops::Range<usize>, b: std::ops::Range<usize>) -> Vec<(usize, usize)> {
    a.flat_map(|u| b.clone().map(move |v| (u, v))).collect()
}

/// Assembles `C[g1]` plus optional `g2` joined to `V(G₁)` and `g3` joined to `I(G₁)`.
fn assemble(g1: &Graph, g2: Option<&Graph>, g3: Option<&Graph>, name: String) -> Result<LabeledProduct> {
    let (p1, q1) = (g1.n(), g1.edge_count());
    let mut edges = central_edges(g1)?;
    let mut blocks = vec![
        Block { role: BlockRole::V1, start: 0, len: p1 },
        Block { role: BlockRole::I1, start: p1, len: q1 },
    ];
    let mut n = p1 + q1;
    if let Some(g2) = g2 {
        edges.extend(shifted(g2, n));
        edges.extend(complete_join(0..p1, n..n + g2.n()));
        blocks.push(Block { role: BlockRole::V2, start: n, len: g2.n() });
        n += g2.n();
    }
    if let Some(g3) = g3 {
        edges.extend(shifted(g3, n));
        edges.extend(complete_join(p1..p1 + q1, n..n + g3.n()));
        blocks.push(Block { role: BlockRole::V3, start: n, len: g3.n() });
        n += g3.n();
    }
    Ok(LabeledProduct { result: Graph::from_edges(n, edges)?.with_name(name), block_offsets: blocks })
}

/// `C[g]`: subdivide every edge and join every originally nonadjacent pair.
pub fn central(g: &Graph) -> Result<LabeledProduct> {
    assemble(g, None, None, format!("C[{}]", name_of(g)))
}

/// `C[g1]` with every vertex of `g1` joined to every vertex of `g2`.
pub fn central_vertex_join(g1: &Graph, g2: &Graph) -> Result<LabeledProduct> {
    assemble(g1, Some(g2), None, format!("cvj({},{})", name_of(g1), name_of(g2)))
}

/// `C[g1]` with every subdivision vertex joined to every vertex of `g2`.
pub fn central_edge_join(g1: &Graph, g2: &Graph) -> Result<LabeledProduct> {
    let mut out = assemble(g1, None, Some(g2), format!("cej({},{})", name_of(g1), name_of(g2)))?;
    // single extra block, reported as V2
    out.block_offsets[2].role = BlockRole::V2;
    Ok(out)
}

/// Both joins at once: `V(G₁)` to `g2`, `I(G₁)` to `g3`.
pub fn central_vertex_edge_join(g1: &Graph, g2: &Graph, g3: &Graph) -> Result<LabeledProduct> {
    assemble(
        g1,
        Some(g2),
        Some(g3),
        format!("cvej({},{},{})", name_of(g1), name_of(g2), name_of(g3)),
    )
}

/// `Gᵉ`: `uv` is an edge iff `d(u,v) = min(e(u), e(v))`.
pub fn eccentric_graph(g: &Graph) -> Result<Graph> {
    let d = all_pairs_distances(g)?;
    let ecc = eccentricities(&d);
    let n = g.n();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if d.get(u, v) == ecc.e[u].min(ecc.e[v]) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, edges)?.with_name(format!("ecc({})", name_of(g))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canon::is_isomorphic_brute, generate, GraphKind};

    fn gen(kind: GraphKind) -> Graph {
        generate(kind).unwrap()
    }

    #[test]
    fn central_of_cycle_four() {
        let c = central(&gen(GraphKind::Cycle(4))).unwrap();
        let g = &c.result;
        assert_eq!(g.n(), 8);
        assert_eq!(g.edge_count(), 10);
        // diagonals
        assert!(g.has_edge(0, 2) && g.has_edge(1, 3));
        // C4 edges in lex order: 01, 03, 12, 23
        assert!(g.has_edge(0, 4) && g.has_edge(1, 4));
        assert!(g.has_edge(0, 5) && g.has_edge(3, 5));
        assert!(!g.has_edge(0, 1));
        assert_eq!(
            c.block_offsets,
            vec![
                Block { role: BlockRole::V1, start: 0, len: 4 },
                Block { role: BlockRole::I1, start: 4, len: 4 }
            ]
        );
    }

    #[test]
    fn small_central_graphs() {
        let k2 = central(&gen(GraphKind::Complete(2))).unwrap().result;
        assert!(is_isomorphic_brute(&k2, &gen(GraphKind::Path(3))).unwrap());
        let p3 = central(&gen(GraphKind::Path(3))).unwrap().result;
        assert_eq!((p3.n(), p3.edge_count()), (5, 5));
        assert_eq!(central(&Graph::empty(3)), Err(Error::EmptyEdgeSet));
    }

    #[test]
    fn joins_on_cycle_four() {
        let c4 = gen(GraphKind::Cycle(4));
        let k2 = gen(GraphKind::Complete(2));
        let k1 = gen(GraphKind::Complete(1));
        let cvj = central_vertex_join(&c4, &k2).unwrap();
        assert_eq!((cvj.result.n(), cvj.result.edge_count()), (10, 19));
        assert_eq!(cvj.block(BlockRole::V2), Some(Block { role: BlockRole::V2, start: 8, len: 2 }));
        let cej = central_edge_join(&c4, &k2).unwrap();
        assert_eq!((cej.result.n(), cej.result.edge_count()), (10, 19));
        assert!(cej.result.has_edge(4, 8) && !cej.result.has_edge(0, 8));
        let cvej = central_vertex_edge_join(&c4, &k1, &k1).unwrap();
        assert_eq!((cvej.result.n(), cvej.result.edge_count()), (10, 18));
        let roles: Vec<_> = cvej.block_offsets.iter().map(|b| b.role).collect();
        assert_eq!(roles, vec![BlockRole::V1, BlockRole::I1, BlockRole::V2, BlockRole::V3]);
    }

    #[test]
    fn joins_with_single_vertex() {
        let k2 = gen(GraphKind::Complete(2));
        let k1 = gen(GraphKind::Complete(1));
        // P3 a-i-b plus w adjacent to a and b: a 4-cycle
        let cvj = central_vertex_join(&k2, &k1).unwrap().result;
        assert_eq!(cvj.edge_count(), 4);
        assert!(is_isomorphic_brute(&cvj, &gen(GraphKind::Cycle(4))).unwrap());
        // P3 with its middle vertex joined to w: K1,3
        let cej = central_edge_join(&k2, &k1).unwrap().result;
        assert!(is_isomorphic_brute(&cej, &gen(GraphKind::Star(4))).unwrap());
    }

    #[test]
    fn eccentric_graphs() {
        let c4 = eccentric_graph(&gen(GraphKind::Cycle(4))).unwrap();
        assert_eq!(c4.edges(), vec![(0, 2), (1, 3)]);
        let k5 = eccentric_graph(&gen(GraphKind::Complete(5))).unwrap();
        assert_eq!(k5.edge_count(), 10);
        let p4 = eccentric_graph(&gen(GraphKind::Path(4))).unwrap();
        assert_eq!(p4.edges(), vec![(0, 2), (0, 3), (1, 3)]);
        assert!(matches!(eccentric_graph(&Graph::empty(2)), Err(Error::Disconnected { .. })));
    }
}
