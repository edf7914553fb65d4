#![allow(dead_code)]

use ecc_spectra::graph::enumerate::connected_graphs;
use ecc_spectra::graph::{parse_graph6, Graph};
use ecc_spectra::spectral::SymMatrix;
use rand::Rng;

/// Symmetric matrix with integer entries drawn from `-bound..=bound`.
pub fn random_integer_symmetric<R: Rng>(rng: &mut R, n: usize, bound: i32) -> SymMatrix {
    let mut upper = vec![0.0; n * n];
    for i in 0..n {
        for j in i..n {
            upper[i * n + j] = f64::from(rng.gen_range(-bound..=bound));
        }
    }
    SymMatrix::from_fn(n, |i, j| upper[i * n + j]).unwrap()
}

/// `H M H` for the Householder reflection `H = I − 2vvᵀ/(vᵀv)`, expanded as a
/// rank-two update and symmetrized entrywise.
pub fn householder_conjugate(m: &SymMatrix, v: &[f64]) -> SymMatrix {
    let n = m.n();
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let u: Vec<f64> = v.iter().map(|x| x / norm).collect();
    let mu: Vec<f64> = (0..n).map(|i| m.row(i).iter().zip(&u).map(|(a, b)| a * b).sum()).collect();
    let k: f64 = u.iter().zip(&mu).map(|(a, b)| a * b).sum();
    let entry = |i: usize, j: usize| m.get(i, j) - 2.0 * u[i] * mu[j] - 2.0 * mu[i] * u[j] + 4.0 * k * u[i] * u[j];
    SymMatrix::from_fn(n, |i, j| 0.5 * (entry(i, j) + entry(j, i))).unwrap()
}

pub fn relative(a: f64, b: f64, scale: f64) -> f64 {
    (a - b).abs() / scale.max(1.0)
}

/// Every connected graph on `1..=max_n` vertices.
pub fn connected_corpus(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| connected_graphs(n).unwrap()).collect()
}

pub fn g6(s: &str) -> Graph {
    parse_graph6(s).unwrap()
}

/// The `d`-dimensional hypercube.
pub fn hypercube(d: u32) -> Graph {
    let n = 1usize << d;
    let edges = (0..n).flat_map(|v| (0..d).map(move |b| (v, v ^ (1 << b)))).filter(|(a, b)| a < b);
    Graph::from_edges(n, edges).unwrap()
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// A random labeled tree plus `G(n, p)` edges, hence connected.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) && !edges.contains(&(i, j)) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
