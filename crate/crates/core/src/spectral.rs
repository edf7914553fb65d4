//! Dense symmetric eigenvalues and spectrum bookkeeping.
//!
//! [`eig_sym`] is a cyclic Jacobi solver: it sweeps the strict upper triangle
//! in row-major order, annihilating each off-diagonal entry with a plane
//! rotation, until the off-diagonal Frobenius norm falls below
//! `tol · ‖M‖_F`. The sweep order is fixed, so results are bit-reproducible.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_EIG_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;
pub const DEFAULT_GROUP_TOL: f64 = 1e-6;

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix { n, data: vec![0.0; n * n] }
    }

    /// Builds from row-major data, checking exact symmetry and finiteness.
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::DimensionMismatch { left: data.len(), right: n * n });
        }
        for i in 0..n {
            for j in 0..n {
                let x = data[i * n + j];
                if !x.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
                if j > i && x != data[j * n + i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymMatrix { n, data })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::DimensionMismatch { left: row.len(), right: n });
            }
            data.extend_from_slice(row);
        }
        Self::from_row_major(n, data)
    }

    /// Fills the matrix from `f(i, j)` evaluated on the upper triangle.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let x = f(i, j);
                data[i * n + j] = x;
                data[j * n + i] = x;
            }
        }
        Self::from_row_major(n, data)
    }

    pub fn adjacency(g: &Graph) -> Self {
        let n = g.n();
        let mut data = vec![0.0; n * n];
        for (u, v) in g.edges() {
            data[u * n + v] = 1.0;
            data[v * n + u] = 1.0;
        }
        SymMatrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// `P · M · Pᵀ` for the signed permutation sending basis vector `i` to
    /// `signs[i] · e_{perm[i]}`.
    pub fn signed_permute(&self, perm: &[usize], signs: &[f64]) -> Self {
        let n = self.n;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[perm[i] * n + perm[j]] = signs[i] * signs[j] * self.get(i, j);
            }
        }
        SymMatrix { n, data }
    }
}

/// Sorted eigenvalue multiset with tolerance-grouped multiplicities.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    /// Descending.
    pub eigenvalues: Vec<f64>,
    /// `(value, multiplicity)`, value being the group mean.
    pub groups: Vec<(f64, usize)>,
    pub group_tol: f64,
    /// `|Σλ − trace|` of the source matrix.
    pub trace_residual: f64,
}

impl Spectrum {
    /// Wraps eigenvalues computed elsewhere (closed forms, quotients).
    pub fn from_values(mut values: Vec<f64>, group_tol: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        let groups = group(&values, group_tol);
        Spectrum { eigenvalues: values, groups, group_tol, trace_residual: 0.0 }
    }

    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn distinct_count(&self) -> usize {
        self.groups.len()
    }
}

fn group(desc: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for end in 1..=desc.len() {
        if end == desc.len() || desc[start] - desc[end] > tol {
            let chunk = &desc[start..end];
            let mean = chunk.iter().sum::<f64>() / chunk.len() as f64;
            out.push((mean, chunk.len()));
            start = end;
        }
    }
    out
}

/// Positive, negative and zero eigenvalue counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl Inertia {
    pub fn new(n_plus: usize, n_minus: usize, n_zero: usize) -> Self {
        Inertia { n_plus, n_minus, n_zero }
    }
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
pub fn eig_sym(m: &SymMatrix, tol: f64) -> Result<Spectrum> {
    eig_sym_with(m, tol, DEFAULT_GROUP_TOL, MAX_SWEEPS)
}

pub fn eig_sym_with(m: &SymMatrix, tol: f64, group_tol: f64, max_sweeps: usize) -> Result<Spectrum> {
    let n = m.n;
    if n == 0 {
        return Err(Error::TooSmall { what: "eigenvalue problem", min: 1 });
    }
    let mut a = m.data.clone();
    let scale = m.frobenius_sq().sqrt();
    let threshold = tol * scale;
    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += 2.0 * a[i * n + j] * a[i * n + j];
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    let mut off = off_norm(&a);
    while off > threshold {
        if sweeps == max_sweeps {
            return Err(Error::NoConvergence { sweeps, residual: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                // tan of the rotation angle, smaller root (Rutishauser)
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.is_infinite() {
                    0.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let t = if theta == 0.0 { 1.0 } else { t };
                if t == 0.0 {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = akp - s * (akq + tau * akp);
                    let new_kq = akq + s * (akp - tau * akq);
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
            }
        }
        off = off_norm(&a);
    }

    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    let trace_residual = (values.iter().sum::<f64>() - m.trace()).abs();
    let groups = group(&values, group_tol);
    Ok(Spectrum { eigenvalues: values, groups, group_tol, trace_residual })
}

pub fn energy(s: &Spectrum) -> f64 {
    s.eigenvalues.iter().map(|x| x.abs()).sum()
}

pub fn spectral_radius(s: &Spectrum) -> f64 {
    s.eigenvalues.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Default zero threshold: `1e-6 · max(1, max|λ|)`.
pub fn default_zero_tol(s: &Spectrum) -> f64 {
    1e-6 * spectral_radius(s).max(1.0)
}

pub fn inertia(s: &Spectrum, zero_tol: f64) -> Inertia {
    let mut out = Inertia::new(0, 0, 0);
    for &x in &s.eigenvalues {
        if x > zero_tol {
            out.n_plus += 1;
        } else if x < -zero_tol {
            out.n_minus += 1;
        } else {
            out.n_zero += 1;
        }
    }
    out
}

/// Largest paired deviation between two descending spectra.
pub fn max_deviation(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { left: a.len(), right: b.len() });
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(|x, y| y.total_cmp(x));
    b.sort_by(|x, y| y.total_cmp(x));
    Ok(a.iter().zip(&b).fold(0.0, |m, (x, y)| m.max((x - y).abs())))
}

/// Multiset equality after sorting, L∞ on paired values.
pub fn spectra_equal(a: &Spectrum, b: &Spectrum, tol: f64) -> Result<bool> {
    Ok(max_deviation(&a.eigenvalues, &b.eigenvalues)? <= tol)
}

/// Block-row-sum quotient of a symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Quotient {
    /// `q[a][b]` = row sum over block `b` of the first row of block `a`.
    pub q: Vec<Vec<f64>>,
    pub block_sizes: Vec<usize>,
    pub is_equitable: bool,
}

impl Quotient {
    /// Eigenvalues of `Q` via the symmetric matrix `D^{1/2} Q D^{-1/2}`
    /// (`D` = block sizes). Requires an equitable partition.
    pub fn eigenvalues(&self, tol: f64) -> Result<Spectrum> {
        if !self.is_equitable {
            return Err(Error::NotEquitable);
        }
        quotient_eigenvalues(&self.q, &self.block_sizes, tol)
    }
}

/// Eigenvalues of a block quotient matrix whose `diag(sizes) · Q` is symmetric.
pub fn quotient_eigenvalues(q: &[Vec<f64>], sizes: &[usize], tol: f64) -> Result<Spectrum> {
    let k = q.len();
    if sizes.len() != k {
        return Err(Error::DimensionMismatch { left: sizes.len(), right: k });
    }
    let mut data = vec![0.0; k * k];
    for a in 0..k {
        if q[a].len() != k {
            return Err(Error::DimensionMismatch { left: q[a].len(), right: k });
        }
        for b in 0..k {
            let (na, nb) = (sizes[a] as f64, sizes[b] as f64);
            // n_a Q_ab = n_b Q_ba is what makes the similarity symmetric
            let lhs = na * q[a][b];
            let rhs = nb * q[b][a];
            if (lhs - rhs).abs() > 1e-9 * lhs.abs().max(rhs.abs()).max(1.0) {
                return Err(Error::NotSymmetric { row: a, col: b });
            }
            data[a * k + b] = q[a][b] * (na / nb).sqrt();
        }
    }
    // symmetrize away rounding in the square roots
    for a in 0..k {
        for b in a + 1..k {
            let avg = 0.5 * (data[a * k + b] + data[b * k + a]);
            data[a * k + b] = avg;
            data[b * k + a] = avg;
        }
    }
    eig_sym(&SymMatrix::from_row_major(k, data)?, tol)
}

pub fn quotient(m: &SymMatrix, partition: &[Vec<usize>]) -> Result<Quotient> {
    let n = m.n();
    let mut block_of = vec![usize::MAX; n];
    for (b, block) in partition.iter().enumerate() {
        if block.is_empty() {
            return Err(Error::BadPartition(format!("block {b} is empty")));
        }
        for &v in block {
            if v >= n {
                return Err(Error::BadPartition(format!("index {v} out of range")));
            }
            if block_of[v] != usize::MAX {
                return Err(Error::BadPartition(format!("index {v} appears twice")));
            }
            block_of[v] = b;
        }
    }
    if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
        return Err(Error::BadPartition(format!("index {v} is not covered")));
    }

    let k = partition.len();
    let block_sums = |row: usize| -> Vec<f64> {
        let mut sums = vec![0.0; k];
        for (j, x) in m.row(row).iter().enumerate() {
            sums[block_of[j]] += x;
        }
        sums
    };
    let mut q = Vec::with_capacity(k);
    let mut is_equitable = true;
    for block in partition {
        let first = block_sums(block[0]);
        if block[1..].iter().any(|&v| block_sums(v) != first) {
            is_equitable = false;
        }
        q.push(first);
    }
    Ok(Quotient { q, block_sizes: partition.iter().map(Vec::len).collect(), is_equitable })
}
