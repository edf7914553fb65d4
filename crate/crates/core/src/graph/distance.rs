use super::Graph;
use crate::error::Result;

/// All-pairs hop distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }
}

/// Per-vertex eccentricities with radius and diameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccentricityVector {
    pub e: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
}

impl EccentricityVector {
    pub fn is_self_centered(&self) -> bool {
        self.radius == self.diameter
    }

    /// Number of vertices with eccentricity exactly 1.
    pub fn universal_count(&self) -> usize {
        self.e.iter().filter(|&&x| x == 1).count()
    }
}

/// BFS from every vertex. Disconnected graphs are rejected.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    g.require_connected()?;
    let n = g.n();
    let mut d = vec![u32::MAX; n * n];
    let mut queue = Vec::with_capacity(n);
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push(s);
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            let next = row[v] + 1;
            for &w in g.neighbors(v) {
                if row[w] == u32::MAX {
                    row[w] = next;
                    queue.push(w);
                }
            }
        }
    }
    Ok(DistanceMatrix { n, d })
}

pub fn eccentricities(d: &DistanceMatrix) -> EccentricityVector {
    let e: Vec<u32> = (0..d.n()).map(|i| d.row(i).iter().copied().max().unwrap_or(0)).collect();
    let radius = e.iter().copied().min().unwrap_or(0);
    let diameter = e.iter().copied().max().unwrap_or(0);
    EccentricityVector { e, radius, diameter }
}

/// Sum of all vertex eccentricities.
pub fn total_eccentricity(g: &Graph) -> Result<u64> {
    let ecc = eccentricities(&all_pairs_distances(g)?);
    Ok(ecc.e.iter().map(|&x| u64::from(x)).sum())
}

/// Degree-weighted eccentricity sum.
pub fn eccentric_connectivity_index(g: &Graph) -> Result<u64> {
    let ecc = eccentricities(&all_pairs_distances(g)?);
    Ok(ecc.e.iter().enumerate().map(|(v, &x)| g.degree(v) as u64 * u64::from(x)).sum())
}
