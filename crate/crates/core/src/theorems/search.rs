//! Mining ε-cospectral and ε-equienergetic pairs from a stream of graphs.

use std::str::FromStr;

use rayon::prelude::*;

use crate::ecc::eccentricity_matrix;
use crate::error::{Error, Result};
use crate::graph::canon::is_isomorphic;
use crate::graph::{generate, is_regular, Graph, GraphKind};
use crate::ops::{central_edge_join, central_vertex_join};
use crate::spectral::{self, Spectrum};

use super::Tolerances;

/// Which graph each input is turned into before its ε-spectrum is compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// The input itself; any connected graph.
    Ecc,
    /// `L(G)` for connected regular `G`.
    LineEquienergetic,
    /// `C[C₆] ∨̇ S` for regular seeds `S`.
    VertexJoin,
    /// `C[C₆] ∨̄ S` for regular seeds `S`.
    EdgeJoin,
}

impl SearchMode {
    pub const ALL: [SearchMode; 4] =
        [SearchMode::Ecc, SearchMode::LineEquienergetic, SearchMode::VertexJoin, SearchMode::EdgeJoin];

    pub fn as_str(self) -> &'static str {
        match self {
            SearchMode::Ecc => "ecc",
            SearchMode::LineEquienergetic => "line-equienergetic",
            SearchMode::VertexJoin => "vertex-join",
            SearchMode::EdgeJoin => "edge-join",
        }
    }
}

impl FromStr for SearchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SearchMode::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::BadParams(format!("unknown search mode {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PairClass {
    Cospectral,
    EquienergeticNoncospectral,
}

impl PairClass {
    pub fn as_str(self) -> &'static str {
        match self {
            PairClass::Cospectral => "eps-cospectral",
            PairClass::EquienergeticNoncospectral => "eps-equienergetic-noncospectral",
        }
    }
}

/// A pair of non-isomorphic inputs whose derived graphs share an ε-spectrum
/// or an ε-energy. Indices refer to the input slice.
#[derive(Debug, Clone, PartialEq)]
pub struct PairReport {
    pub left: usize,
    pub right: usize,
    pub left_graph: String,
    pub right_graph: String,
    pub class: PairClass,
    pub energy: f64,
    pub energy_gap: f64,
    /// L∞ distance between the sorted ε-spectra.
    pub spectral_dev: f64,
}

fn base() -> Graph {
    generate(GraphKind::Cycle(6)).expect("fixed generator")
}

fn derive(g: &Graph, mode: SearchMode, base: &Graph) -> Result<Option<Graph>> {
    if g.n() < 2 || !g.is_connected() {
        return Ok(None);
    }
    if mode != SearchMode::Ecc && is_regular(g).is_none() {
        return Ok(None);
    }
    Ok(Some(match mode {
        SearchMode::Ecc => g.clone(),
        SearchMode::LineEquienergetic => {
            if g.edge_count() < 2 {
                return Ok(None);
            }
            g.line_graph()?
        }
        SearchMode::VertexJoin => central_vertex_join(base, g)?.result,
        SearchMode::EdgeJoin => central_edge_join(base, g)?.result,
    }))
}

struct Entry {
    index: usize,
    order: usize,
    spectrum: Spectrum,
    energy: f64,
}

/// Pairs of inputs whose derived graphs have equal ε-spectra (within
/// `tol.compare`) or equal ε-energies with different spectra. Inputs outside
/// the mode's scope are skipped, and pairs of isomorphic inputs are dropped.
/// Output is sorted by `(left, right)`.
pub fn search_cospectral(graphs: &[Graph], mode: SearchMode, tol: &Tolerances) -> Result<Vec<PairReport>> {
    let base = base();
    let mut entries: Vec<Entry> = graphs
        .par_iter()
        .enumerate()
        .map(|(index, g)| -> Result<Option<Entry>> {
            let Some(d) = derive(g, mode, &base)? else { return Ok(None) };
            let spectrum = eccentricity_matrix(&d)?.spectrum(tol.eig)?;
            let energy = spectral::energy(&spectrum);
            Ok(Some(Entry { index, order: d.n(), spectrum, energy }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    entries.sort_by(|a, b| a.order.cmp(&b.order).then(a.energy.total_cmp(&b.energy)).then(a.index.cmp(&b.index)));

    let mut candidates = Vec::new();
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i + 1..] {
            if b.order != a.order || b.energy - a.energy > tol.compare {
                break;
            }
            candidates.push((a, b));
        }
    }

    let mut out = candidates
        .par_iter()
        .map(|&(a, b)| -> Result<Option<PairReport>> {
            let (l, r) = if a.index < b.index { (a, b) } else { (b, a) };
            if is_isomorphic(&graphs[l.index], &graphs[r.index])? {
                return Ok(None);
            }
            let spectral_dev = spectral::max_deviation(&l.spectrum.eigenvalues, &r.spectrum.eigenvalues)?;
            let class =
                if spectral_dev <= tol.compare { PairClass::Cospectral } else { PairClass::EquienergeticNoncospectral };
            Ok(Some(PairReport {
                left: l.index,
                right: r.index,
                left_graph: graphs[l.index].descriptor(),
                right_graph: graphs[r.index].descriptor(),
                class,
                energy: l.energy,
                energy_gap: (l.energy - r.energy).abs(),
                spectral_dev,
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    out.sort_by_key(|p| (p.left, p.right));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mode_names_round_trip() {
        for m in SearchMode::ALL {
            assert_eq!(m.as_str().parse::<SearchMode>().unwrap(), m);
        }
        assert!("bogus".parse::<SearchMode>().is_err());
    }

    #[test]
    fn identical_graphs_are_filtered() {
        let g = generate(GraphKind::Petersen).unwrap();
        let pairs = search_cospectral(&[g.clone(), g], SearchMode::Ecc, &Tolerances::default()).unwrap();
        assert!(pairs.is_empty());
    }

    #[test]
    fn relabeled_copy_is_filtered() {
        let g = generate(GraphKind::Path(5)).unwrap();
        let h = g.relabel(&[4, 2, 0, 1, 3]);
        assert!(search_cospectral(&[g, h], SearchMode::Ecc, &Tolerances::default()).unwrap().is_empty());
    }
}
