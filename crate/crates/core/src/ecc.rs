//! Eccentricity matrices and the invariants derived from them.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, eccentricities, DistanceMatrix, EccentricityVector, Graph};
use crate::ops::eccentric_graph;
use crate::spectral::{self, Inertia, Spectrum, SymMatrix, DEFAULT_EIG_TOL};

/// `ε(G)`: the distance matrix restricted to pairs with `d(u,v) = min(e(u), e(v))`.
#[derive(Debug, Clone, PartialEq)]
pub struct EccMatrix {
    n: usize,
    entries: Vec<u32>,
    row_sums: Vec<u64>,
    ecc: EccentricityVector,
    source: String,
}

impl EccMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row sums `ε(i)`.
    pub fn row_sums(&self) -> &[u64] {
        &self.row_sums
    }

    pub fn eccentricities(&self) -> &EccentricityVector {
        &self.ecc
    }

    /// Descriptor of the graph the matrix was built from.
    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn to_sym(&self) -> SymMatrix {
        SymMatrix::from_fn(self.n, |i, j| f64::from(self.get(i, j))).expect("integer symmetric")
    }

    /// `Σ ε(i,j)²`.
    pub fn frobenius_sq(&self) -> u64 {
        self.entries.iter().map(|&x| u64::from(x) * u64::from(x)).sum()
    }

    pub fn spectrum(&self, tol: f64) -> Result<Spectrum> {
        spectral::eig_sym(&self.to_sym(), tol)
    }
}

pub fn eccentricity_matrix(g: &Graph) -> Result<EccMatrix> {
    if g.n() < 2 {
        return Err(Error::TooSmall { what: "eccentricity matrix", min: 2 });
    }
    let d = all_pairs_distances(g)?;
    Ok(from_distances(&d, g.descriptor()))
}

fn from_distances(d: &DistanceMatrix, source: String) -> EccMatrix {
    let ecc = eccentricities(d);
    let n = d.n();
    let mut entries = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            let dij = d.get(i, j);
            if i != j && dij == ecc.e[i].min(ecc.e[j]) {
                entries[i * n + j] = dij;
            }
        }
    }
    let row_sums = (0..n).map(|i| entries[i * n..(i + 1) * n].iter().map(|&x| u64::from(x)).sum()).collect();
    EccMatrix { n, entries, row_sums, ecc, source }
}

/// `W_ε`: half the sum of all entries.
pub fn ecc_wiener(m: &EccMatrix) -> Ratio<i64> {
    let total: u64 = m.row_sums.iter().sum();
    Ratio::new(total as i64, 2)
}

/// The common row sum, if all row sums agree.
pub fn is_ecc_regular(m: &EccMatrix) -> Option<u64> {
    let first = *m.row_sums.first()?;
    m.row_sums.iter().all(|&s| s == first).then_some(first)
}

/// Irreducibility of `ε(G)` decided by connectivity of the eccentric graph.
pub fn is_irreducible(g: &Graph) -> Result<bool> {
    Ok(eccentric_graph(g)?.is_connected())
}

/// Irreducibility straight from the matrix: the reachability closure of the
/// nonzero pattern must be total (equivalently `(I + |M|)^{n-1} > 0`).
pub fn pattern_irreducible(m: &EccMatrix) -> bool {
    let n = m.n;
    let mut reach: Vec<Vec<bool>> =
        (0..n).map(|i| (0..n).map(|j| i == j || m.get(i, j) != 0).collect()).collect();
    for k in 0..n {
        let via = reach[k].clone();
        for row in reach.iter_mut().filter(|row| row[k]) {
            for (r, &v) in row.iter_mut().zip(&via) {
                *r |= v;
            }
        }
    }
    reach.iter().all(|row| row.iter().all(|&b| b))
}

pub fn ecc_spectrum(g: &Graph) -> Result<Spectrum> {
    eccentricity_matrix(g)?.spectrum(DEFAULT_EIG_TOL)
}

pub fn ecc_energy(g: &Graph) -> Result<f64> {
    Ok(spectral::energy(&ecc_spectrum(g)?))
}

pub fn ecc_radius(g: &Graph) -> Result<f64> {
    Ok(spectral::spectral_radius(&ecc_spectrum(g)?))
}

pub fn ecc_inertia(g: &Graph) -> Result<Inertia> {
    let s = ecc_spectrum(g)?;
    Ok(spectral::inertia(&s, spectral::default_zero_tol(&s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};

    fn gen(kind: GraphKind) -> Graph {
        generate(kind).unwrap()
    }

    fn close(a: &[f64], b: &[f64], tol: f64) {
        let dev = spectral::max_deviation(a, b).unwrap();
        assert!(dev <= tol, "deviation {dev:e}: {a:?} vs {b:?}");
    }

    #[test]
    fn path_four() {
        let m = eccentricity_matrix(&gen(GraphKind::Path(4))).unwrap();
        assert_eq!(m.to_rows(), vec![vec![0, 0, 2, 3], vec![0, 0, 0, 2], vec![2, 0, 0, 0], vec![3, 2, 0, 0]]);
        assert_eq!(m.row_sums(), &[5, 2, 2, 5]);
        assert_eq!(is_ecc_regular(&m), None);
        assert!(is_irreducible(&gen(GraphKind::Path(4))).unwrap());
        assert!(pattern_irreducible(&m));
    }

    #[test]
    fn complete_graph_is_j_minus_i() {
        let m = eccentricity_matrix(&gen(GraphKind::Complete(5))).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(m.get(i, j), u32::from(i != j));
            }
        }
        assert_eq!(ecc_wiener(&m), Ratio::from_integer(10));
        assert_eq!(is_ecc_regular(&m), Some(4));
    }

    #[test]
    fn cycle_four_is_reducible() {
        let g = gen(GraphKind::Cycle(4));
        let m = eccentricity_matrix(&g).unwrap();
        assert_eq!(m.to_rows(), vec![vec![0, 0, 2, 0], vec![0, 0, 0, 2], vec![2, 0, 0, 0], vec![0, 2, 0, 0]]);
        assert!(!is_irreducible(&g).unwrap());
        assert!(!pattern_irreducible(&m));
        close(&ecc_spectrum(&g).unwrap().eigenvalues, &[2.0, 2.0, -2.0, -2.0], 1e-12);
        assert_eq!(ecc_inertia(&g).unwrap(), Inertia::new(2, 2, 0));
    }

    #[test]
    fn petersen() {
        let g = gen(GraphKind::Petersen);
        let m = eccentricity_matrix(&g).unwrap();
        assert_eq!(ecc_wiener(&m), Ratio::from_integer(60));
        assert_eq!(is_ecc_regular(&m), Some(12));
        let mut want = vec![12.0];
        want.extend([2.0; 4]);
        want.extend([-4.0; 5]);
        close(&ecc_spectrum(&g).unwrap().eigenvalues, &want, 1e-10);
        assert!((ecc_energy(&g).unwrap() - 40.0).abs() < 1e-10);
        assert!((ecc_radius(&g).unwrap() - 12.0).abs() < 1e-10);
    }

    #[test]
    fn cycle_five() {
        let g = gen(GraphKind::Cycle(5));
        assert_eq!(ecc_wiener(&eccentricity_matrix(&g).unwrap()), Ratio::from_integer(10));
        // 2(J - I - A): 2(n-1-r) and -2(1 + 2cos(2πk/5))
        let a = -2.0 * (1.0 + 2.0 * (0.4 * std::f64::consts::PI).cos());
        let b = -2.0 * (1.0 + 2.0 * (0.8 * std::f64::consts::PI).cos());
        close(&ecc_spectrum(&g).unwrap().eigenvalues, &[4.0, b, b, a, a], 1e-10);
    }

    #[test]
    fn k2_and_degenerate_inputs() {
        let g = gen(GraphKind::Complete(2));
        close(&ecc_spectrum(&g).unwrap().eigenvalues, &[1.0, -1.0], 1e-14);
        assert!((ecc_energy(&g).unwrap() - 2.0).abs() < 1e-14);
        assert!(matches!(eccentricity_matrix(&Graph::empty(1)), Err(Error::TooSmall { .. })));
        assert!(matches!(eccentricity_matrix(&Graph::empty(3)), Err(Error::Disconnected { .. })));
    }
}
