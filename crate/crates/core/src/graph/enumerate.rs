//! Exhaustive generation of small graph classes up to isomorphism.
//!
//! Every generator grows graphs one vertex at a time and deduplicates each
//! level by canonical code, so a level holds exactly one representative per
//! isomorphism class of the admissible induced subgraphs. Results are
//! canonical forms sorted by their graph6 encoding.

use std::collections::BTreeMap;

use super::canon::{canonical_code, canonical_form, CanonicalCode};
use super::{emit_graph6, is_regular, Graph};
use crate::error::{Error, Result};

/// Largest order for [`all_graphs`] / [`connected_graphs`].
pub const ALL_GRAPHS_LIMIT: usize = 9;
/// Largest order for [`trees`] and [`regular_graphs`].
pub const CLASS_LIMIT: usize = 16;

fn limit(n: usize, max: usize, what: &'static str) -> Result<()> {
    if n > max {
        return Err(Error::SizeLimit { what, size: n, limit: max });
    }
    Ok(())
}

fn add_vertex(g: &Graph, nbrs: &[usize]) -> Graph {
    let n = g.n();
    let edges = g.edges().into_iter().chain(nbrs.iter().map(|&u| (u, n)));
    Graph::from_edges(n + 1, edges).expect("valid extension")
}

fn finish(level: BTreeMap<CanonicalCode, Graph>) -> Result<Vec<Graph>> {
    let mut out: Vec<Graph> = level.into_values().map(|g| canonical_form(&g)).collect::<Result<_>>()?;
    out.sort_by_cached_key(emit_graph6);
    Ok(out)
}

fn subsets(k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << k).map(move |mask| (0..k).filter(|&i| mask >> i & 1 == 1).collect())
}

/// All graphs on `n` vertices, one per isomorphism class.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    limit(n, ALL_GRAPHS_LIMIT, "exhaustive graph enumeration")?;
    let mut level = BTreeMap::new();
    let empty = Graph::empty(0);
    level.insert(canonical_code(&empty)?, empty);
    for k in 0..n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for nbrs in subsets(k) {
                let h = add_vertex(g, &nbrs);
                next.entry(canonical_code(&h)?).or_insert(h);
            }
        }
        level = next;
    }
    finish(level)
}

pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?.into_iter().filter(Graph::is_connected).collect())
}

/// Unlabeled trees on `n >= 1` vertices.
pub fn trees(n: usize) -> Result<Vec<Graph>> {
    limit(n, CLASS_LIMIT, "tree enumeration")?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = BTreeMap::new();
    let k1 = Graph::empty(1);
    level.insert(canonical_code(&k1)?, k1);
    for k in 1..n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for v in 0..k {
                let h = add_vertex(g, &[v]);
                next.entry(canonical_code(&h)?).or_insert(h);
            }
        }
        level = next;
    }
    finish(level)
}

/// `r`-regular graphs on `n` vertices; `connected` drops disconnected ones.
pub fn regular_graphs(n: usize, r: usize, connected: bool) -> Result<Vec<Graph>> {
    limit(n, CLASS_LIMIT, "regular graph enumeration")?;
    if n == 0 || r >= n || (n * r) % 2 == 1 {
        return Ok(Vec::new());
    }
    let all = if 2 * r > n - 1 {
        // complements of (n-1-r)-regular graphs
        let co = regular_graphs_all(n, n - 1 - r)?;
        let mut out: Vec<Graph> =
            co.iter().map(|g| canonical_form(&g.complement())).collect::<Result<_>>()?;
        out.sort_by_cached_key(emit_graph6);
        out
    } else {
        regular_graphs_all(n, r)?
    };
    Ok(all.into_iter().filter(|g| !connected || g.is_connected()).collect())
}

// Prefix graph on k of the n final vertices can still be completed to an
// r-regular graph.
fn admissible(g: &Graph, n: usize, r: usize) -> bool {
    let k = g.n();
    let rest = n - k;
    let mut deficit = 0;
    for v in 0..k {
        let d = g.degree(v);
        if d > r || r - d > rest {
            return false;
        }
        deficit += r - d;
    }
    // the remaining vertices spend rest*r degree: deficit on the prefix,
    // the rest on edges among themselves
    if deficit > rest * r {
        return false;
    }
    let inner = rest * r - deficit;
    inner.is_multiple_of(2) && inner <= rest * rest.saturating_sub(1)
}

fn regular_graphs_all(n: usize, r: usize) -> Result<Vec<Graph>> {
    let mut level = BTreeMap::new();
    let empty = Graph::empty(0);
    level.insert(canonical_code(&empty)?, empty);
    for k in 0..n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            let open: Vec<usize> = (0..k).filter(|&v| g.degree(v) < r).collect();
            for pick in subsets(open.len()) {
                if pick.len() > r {
                    continue;
                }
                let nbrs: Vec<usize> = pick.iter().map(|&i| open[i]).collect();
                let h = add_vertex(g, &nbrs);
                if admissible(&h, n, r) {
                    next.entry(canonical_code(&h)?).or_insert(h);
                }
            }
        }
        level = next;
    }
    let out = finish(level)?;
    debug_assert!(out.iter().all(|g| is_regular(g) == Some(r)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts_match_known_sequence() {
        // unlabeled graphs: 1, 2, 4, 11, 34, 156; connected: 1, 1, 2, 6, 21, 112
        let all: Vec<usize> = (1..=6).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156]);
        let conn: Vec<usize> = (1..=6).map(|n| connected_graphs(n).unwrap().len()).collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn regular_counts() {
        // connected cubic: n = 4, 6, 8 -> 1, 2, 5
        let cubic: Vec<usize> = [4, 6, 8].iter().map(|&n| regular_graphs(n, 3, true).unwrap().len()).collect();
        assert_eq!(cubic, vec![1, 2, 5]);
        // all cubic on 8 includes K4 + K4
        assert_eq!(regular_graphs(8, 3, false).unwrap().len(), 6);
        // connected 4-regular on 5..8 vertices: 1, 1, 2, 6
        let quartic: Vec<usize> = (5..=8).map(|n| regular_graphs(n, 4, true).unwrap().len()).collect();
        assert_eq!(quartic, vec![1, 1, 2, 6]);
        assert!(regular_graphs(5, 3, true).unwrap().is_empty());
    }

    #[test]
    fn outputs_are_distinct_canonical_forms() {
        let gs = connected_graphs(5).unwrap();
        for g in &gs {
            assert_eq!(canonical_form(g).unwrap().edges(), g.edges());
        }
        let mut codes: Vec<_> = gs.iter().map(|g| canonical_code(g).unwrap()).collect();
        codes.dedup();
        assert_eq!(codes.len(), gs.len());
    }

    #[test]
    fn limits() {
        assert!(all_graphs(ALL_GRAPHS_LIMIT + 1).is_err());
        assert!(trees(CLASS_LIMIT + 1).is_err());
    }
}
