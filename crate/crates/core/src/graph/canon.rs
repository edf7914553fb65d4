//! Canonical labeling and isomorphism for small graphs.
//!
//! [`canonical_code`] runs an individualization-refinement search: refine the
//! ordered partition to an equitable one, branch on each vertex of the first
//! non-singleton cell, and keep the lexicographically smallest adjacency
//! bitstring over all leaves. Cells whose vertices are interchangeable twins
//! are branched on once. [`is_isomorphic_brute`] is an independent
//! backtracking check used to cross-validate it.

use super::Graph;
use crate::error::{Error, Result};

/// Largest order handled by the bitset canonical labeling.
pub const CANON_LIMIT: usize = 64;
/// Largest order handled by the brute-force isomorphism test.
pub const BRUTE_LIMIT: usize = 10;

/// Upper-triangle adjacency bits (graph6 order) under the canonical labeling.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    n: usize,
    bits: Vec<u64>,
}

fn bit_rows(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect()
}

fn mask_of(cell: &[usize]) -> u64 {
    cell.iter().fold(0u64, |m, &v| m | 1 << v)
}

fn refine(rows: &[u64], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut changed = false;
        let mut si = 0;
        while si < cells.len() {
            let splitter = mask_of(&cells[si]);
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> =
                    cell.iter().map(|&v| ((rows[v] & splitter).count_ones(), v)).collect();
                if keyed.iter().all(|&(c, _)| c == keyed[0].0) {
                    next.push(cell);
                    continue;
                }
                changed = true;
                keyed.sort_by_key(|&(c, _)| c);
                let mut start = 0;
                for end in 1..=keyed.len() {
                    if end == keyed.len() || keyed[end].0 != keyed[start].0 {
                        next.push(keyed[start..end].iter().map(|&(_, v)| v).collect());
                        start = end;
                    }
                }
            }
            cells = next;
            si += 1;
        }
        if !changed {
            return cells;
        }
    }
}

fn code_for(rows: &[u64], order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; nbits.div_ceil(64)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (rows[order[i]] >> order[j]) & 1 == 1 {
                bits[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    bits
}

// Every permutation of the cell fixing all other vertices is an automorphism.
fn is_twin_cell(rows: &[u64], cell: &[usize]) -> bool {
    let cm = mask_of(cell);
    let outside = rows[cell[0]] & !cm;
    let clique = cell.iter().all(|&v| rows[v] & cm == cm & !(1 << v));
    let independent = cell.iter().all(|&v| rows[v] & cm == 0);
    (clique || independent) && cell.iter().all(|&v| rows[v] & !cm == outside)
}

fn search(rows: &[u64], cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let cells = refine(rows, cells);
    let Some(idx) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().flatten().collect();
        let code = code_for(rows, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell = &cells[idx];
    let choices: &[usize] = if is_twin_cell(rows, cell) { &cell[..1] } else { cell };
    for &v in choices {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..idx]);
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&w| w != v).collect());
        next.extend_from_slice(&cells[idx + 1..]);
        search(rows, next, best);
    }
}

fn check_limit(g: &Graph, limit: usize, what: &'static str) -> Result<()> {
    if g.n() > limit {
        return Err(Error::SizeLimit { what, size: g.n(), limit });
    }
    Ok(())
}

/// `labeling[v]` is the canonical label of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    check_limit(g, CANON_LIMIT, "canonical labeling")?;
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let rows = bit_rows(g);
    let mut best = None;
    search(&rows, vec![(0..n).collect()], &mut best);
    let (_, order) = best.expect("search visits at least one leaf");
    let mut labeling = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        labeling[v] = pos;
    }
    Ok(labeling)
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    let labeling = canonical_labeling(g)?;
    let mut order = vec![0; g.n()];
    for (v, &pos) in labeling.iter().enumerate() {
        order[pos] = v;
    }
    Ok(CanonicalCode { n: g.n(), bits: code_for(&bit_rows(g), &order) })
}

/// The graph relabeled canonically; isomorphic inputs give identical outputs.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let labeling = canonical_labeling(g)?;
    let h = g.relabel(&labeling);
    Ok(match g.name() {
        Some(name) => h.with_name(name),
        None => h,
    })
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_code(a)? == canonical_code(b)?)
}

/// Backtracking isomorphism test with degree pruning, for `n <= BRUTE_LIMIT`.
pub fn is_isomorphic_brute(a: &Graph, b: &Graph) -> Result<bool> {
    check_limit(a, BRUTE_LIMIT, "brute-force isomorphism")?;
    check_limit(b, BRUTE_LIMIT, "brute-force isomorphism")?;
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = map.len();
        if v == a.n() {
            return true;
        }
        for w in 0..b.n() {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            if (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w)) {
                used[w] = true;
                map.push(w);
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[w] = false;
            }
        }
        false
    }
    Ok(extend(a, b, &mut Vec::with_capacity(a.n()), &mut vec![false; b.n()]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn relabeled_graphs_share_code() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=12);
            let p = rng.gen_range(0.1..0.9);
            let g = random_graph(&mut rng, n, p);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm);
            assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
            assert_eq!(canonical_form(&g).unwrap().edges(), canonical_form(&h).unwrap().edges());
        }
    }

    #[test]
    fn canonical_agrees_with_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..400 {
            let n = rng.gen_range(1..=7);
            let a = random_graph(&mut rng, n, 0.5);
            let b = random_graph(&mut rng, n, 0.5);
            assert_eq!(is_isomorphic(&a, &b).unwrap(), is_isomorphic_brute(&a, &b).unwrap());
        }
    }

    #[test]
    fn symmetric_graphs() {
        for kind in [
            GraphKind::Complete(10),
            GraphKind::Empty(10),
            GraphKind::Petersen,
            GraphKind::CompleteBipartite(5, 5),
            GraphKind::CocktailParty(5),
            GraphKind::Cycle(10),
        ] {
            let g = generate(kind).unwrap();
            let h = g.relabel(&[3, 1, 4, 0, 9, 2, 6, 5, 8, 7]);
            assert!(is_isomorphic(&g, &h).unwrap(), "{kind}");
            assert!(is_isomorphic_brute(&g, &h).unwrap(), "{kind}");
        }
    }

    #[test]
    fn distinguishes_cospectral_nonisomorphic() {
        // K1,4 and C4 + K1 share an adjacency spectrum
        let star = generate(GraphKind::Star(5)).unwrap();
        let c4k1 = generate(GraphKind::Cycle(4)).unwrap().disjoint_union(&Graph::empty(1));
        assert!(!is_isomorphic(&star, &c4k1).unwrap());
        assert!(!is_isomorphic_brute(&star, &c4k1).unwrap());
    }

    #[test]
    fn limits() {
        let big = Graph::empty(BRUTE_LIMIT + 1);
        assert!(is_isomorphic_brute(&big, &big).is_err());
        assert!(canonical_code(&Graph::empty(CANON_LIMIT + 1)).is_err());
    }
}
