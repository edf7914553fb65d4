use std::sync::OnceLock;

use super::{all_pairs_distances, eccentricities, generate, Graph, GraphKind};
use crate::error::{Error, Result};

/// Largest order accepted by the exhaustive five-vertex induced-subgraph scan.
pub const INDUCED_F_LIMIT: usize = 60;

/// Structural facts the theorem hypotheses are phrased in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Predicates {
    pub regular_degree: Option<usize>,
    pub triangle_free: bool,
    /// `None` for disconnected graphs.
    pub self_centered: Option<bool>,
    pub property_dagger: bool,
    /// Length of a shortest cycle; 0 for forests.
    pub girth: usize,
    /// `None` when the graph is too large for the subset scan.
    pub has_induced_f: Option<bool>,
}

pub fn predicates(g: &Graph) -> Predicates {
    Predicates {
        regular_degree: is_regular(g),
        triangle_free: is_triangle_free(g),
        self_centered: is_self_centered(g).ok(),
        property_dagger: has_property_dagger(g),
        girth: girth(g),
        has_induced_f: has_induced_f(g).ok(),
    }
}

/// Common degree, if every vertex has the same degree.
pub fn is_regular(g: &Graph) -> Option<usize> {
    if g.n() == 0 {
        return None;
    }
    let first = g.degree(0);
    (0..g.n()).all(|v| g.degree(v) == first).then_some(first)
}

fn common_neighbor(g: &Graph, u: usize, v: usize) -> bool {
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges().into_iter().all(|(u, v)| !common_neighbor(g, u, v))
}

/// Vertices lying on no triangle.
pub fn triangle_free_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n())
        .filter(|&u| g.neighbors(u).iter().all(|&v| !common_neighbor(g, u, v)))
        .collect()
}

pub fn is_self_centered(g: &Graph) -> Result<bool> {
    Ok(eccentricities(&all_pairs_distances(g)?).is_self_centered())
}

/// Every edge `uv` has a third vertex adjacent to neither endpoint.
pub fn has_property_dagger(g: &Graph) -> bool {
    let n = g.n();
    g.edges().into_iter().all(|(u, v)| {
        (0..n).any(|w| w != u && w != v && !g.has_edge(u, w) && !g.has_edge(v, w))
    })
}

/// Shortest cycle length by BFS from every vertex; 0 for forests.
pub fn girth(g: &Graph) -> usize {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for s in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[s] = 0;
        queue.clear();
        queue.push(s);
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            if 2 * dist[v] + 1 >= best {
                break;
            }
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push(w);
                } else if parent[v] != w {
                    best = best.min(dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        0
    } else {
        best
    }
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    stack.push(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && g.edge_count() + 1 == g.n() && g.is_connected()
}

/// Number of degree-one vertices.
pub fn pendant_count(g: &Graph) -> usize {
    (0..g.n()).filter(|&v| g.degree(v) == 1).count()
}

// Bit index of pair (i, j), i < j < 5, inside a ten-bit induced-subgraph mask.
const fn pair_bit(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

fn mask_of(edges: &[(usize, usize)]) -> usize {
    edges.iter().fold(0, |m, &(a, b)| m | 1 << pair_bit(a.min(b), a.max(b)))
}

/// Ten-bit masks of every labeling of F1, F2 and F3 on five vertices.
fn f_table() -> &'static [bool; 1024] {
    static TABLE: OnceLock<[bool; 1024]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = [false; 1024];
        let mut perm = [0usize, 1, 2, 3, 4];
        let perms = permutations(&mut perm);
        for kind in [GraphKind::F1, GraphKind::F2, GraphKind::F3] {
            let f = generate(kind).expect("fixed generator");
            for p in &perms {
                let edges: Vec<_> = f.edges().into_iter().map(|(a, b)| (p[a], p[b])).collect();
                table[mask_of(&edges)] = true;
            }
        }
        table
    })
}

fn permutations(items: &mut [usize; 5]) -> Vec<[usize; 5]> {
    fn rec(k: usize, items: &mut [usize; 5], out: &mut Vec<[usize; 5]>) {
        if k == items.len() {
            out.push(*items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(k + 1, items, out);
            items.swap(k, i);
        }
    }
    let mut out = Vec::with_capacity(120);
    rec(0, items, &mut out);
    out
}

/// Whether F1, F2 or F3 occurs as an induced subgraph, by scanning every
/// five-vertex subset.
pub fn has_induced_f(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > INDUCED_F_LIMIT {
        return Err(Error::SizeLimit { what: "induced-F scan", size: n, limit: INDUCED_F_LIMIT });
    }
    let rows: Vec<u64> =
        (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect();
    let adj = |a: usize, b: usize| (rows[a] >> b) & 1 == 1;
    let table = f_table();
    for a in 0..n {
        for b in a + 1..n {
            let m_ab = usize::from(adj(a, b)) << pair_bit(0, 1);
            for c in b + 1..n {
                let m_abc = m_ab
                    | usize::from(adj(a, c)) << pair_bit(0, 2)
                    | usize::from(adj(b, c)) << pair_bit(1, 2);
                for d in c + 1..n {
                    let m_abcd = m_abc
                        | usize::from(adj(a, d)) << pair_bit(0, 3)
                        | usize::from(adj(b, d)) << pair_bit(1, 3)
                        | usize::from(adj(c, d)) << pair_bit(2, 3);
                    for e in d + 1..n {
                        let m = m_abcd
                            | usize::from(adj(a, e)) << pair_bit(0, 4)
                            | usize::from(adj(b, e)) << pair_bit(1, 4)
                            | usize::from(adj(c, e)) << pair_bit(2, 4)
                            | usize::from(adj(d, e)) << pair_bit(3, 4);
                        if table[m] {
                            return Ok(true);
                        }
                    }
                }
            }
        }
    }
    Ok(false)
}
