//! Closed-form evaluators for the eccentricity-spectrum results, each paired
//! with a verifier that checks the prediction against the numerical oracle.
//!
//! Evaluators (`thm_*`, `cor_*`, `lemma_*`) check their own hypotheses and
//! return [`Error::HypothesisFailed`] instead of extrapolating. Verifiers
//! (see [`verify`]) turn the same checks into an inapplicable report.

pub mod bounds;
mod central;
mod joins;
mod lemmas;
mod line;
mod registry;
pub mod search;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{self, Inertia, Spectrum, SymMatrix, DEFAULT_EIG_TOL, DEFAULT_GROUP_TOL};

pub use bounds::{bounds_suite, BoundDirection, BoundReport, BoundsSuite, Number};
pub use central::{
    cor_central_energy, cor_central_inertia, cor_central_radius, cor_complement_central_energy,
    cor_complement_central_inertia, lemma_central_adjacency_spectrum, lemma_diam2_spectrum,
    thm_central_irreducible, thm_central_spectrum, IrreducibilityCase,
};
pub use joins::{
    cor_edge_join_radius_bound, cor_edge_join_wiener, cor_vertex_join_radius_bound, cor_vertex_join_wiener,
    thm_edge_join_spectrum, thm_vertex_edge_join_spectrum, thm_vertex_join_spectrum, vertex_join_t_form,
};
pub use line::{thm_complement_line_graph_energy, thm_line_graph_energy};
pub use registry::{lookup, registry, summarize, verify, verify_corpus, TheoremInfo, TheoremSummary};
pub use search::{search_cospectral, PairClass, PairReport, SearchMode};

/// Numerical knobs shared by the evaluators and verifiers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Jacobi off-diagonal threshold.
    pub eig: f64,
    /// Eigenvalue grouping.
    pub group: f64,
    /// Predicted-vs-computed comparison.
    pub compare: f64,
    /// Zero threshold for inertia; `None` uses the spectrum-relative default.
    pub zero: Option<f64>,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { eig: DEFAULT_EIG_TOL, group: DEFAULT_GROUP_TOL, compare: 1e-7, zero: None }
    }
}

impl Tolerances {
    pub fn with_compare(mut self, compare: f64) -> Self {
        self.compare = compare;
        self
    }

    pub(crate) fn zero_for(&self, s: &Spectrum) -> f64 {
        self.zero.unwrap_or_else(|| spectral::default_zero_tol(s))
    }

    pub(crate) fn eig(&self, m: &SymMatrix) -> Result<Spectrum> {
        spectral::eig_sym_with(m, self.eig, self.group, spectral::MAX_SWEEPS)
    }
}

/// One closed-form eigenvalue with its multiplicity and the item it comes from.
#[derive(Debug, Clone, PartialEq)]
pub struct PredictedEigenvalue {
    pub value: f64,
    pub multiplicity: usize,
    pub tag: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct PredictedSpectrum {
    pub entries: Vec<PredictedEigenvalue>,
}

impl PredictedSpectrum {
    pub fn push(&mut self, value: f64, multiplicity: usize, tag: impl Into<String>) {
        if multiplicity > 0 {
            self.entries.push(PredictedEigenvalue { value, multiplicity, tag: tag.into() });
        }
    }

    /// Σ multiplicities.
    pub fn total(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// Expanded values, descending.
    pub fn values(&self) -> Vec<f64> {
        let mut out: Vec<f64> =
            self.entries.iter().flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity)).collect();
        out.sort_by(|a, b| b.total_cmp(a));
        out
    }

    pub fn spectrum(&self, group_tol: f64) -> Spectrum {
        Spectrum::from_values(self.values(), group_tol)
    }

    pub fn energy(&self) -> f64 {
        self.entries.iter().map(|e| e.value.abs() * e.multiplicity as f64).sum()
    }
}

/// A named hypothesis and whether it held on the given input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: String,
    pub held: bool,
}

/// Collects hypothesis checks for one theorem instance.
#[derive(Debug, Clone)]
pub(crate) struct Checks {
    theorem: &'static str,
    list: Vec<Hypothesis>,
}

impl Checks {
    pub(crate) fn new(theorem: &'static str) -> Self {
        Checks { theorem, list: Vec::new() }
    }

    pub(crate) fn check(&mut self, name: impl Into<String>, held: bool) -> bool {
        self.list.push(Hypothesis { name: name.into(), held });
        held
    }

    pub(crate) fn ok(&self) -> bool {
        self.list.iter().all(|h| h.held)
    }

    pub(crate) fn require(&self) -> Result<()> {
        if self.ok() {
            return Ok(());
        }
        let reasons = self.list.iter().filter(|h| !h.held).map(|h| h.name.clone()).collect();
        Err(Error::hypothesis(self.theorem, reasons))
    }

    pub(crate) fn into_list(self) -> Vec<Hypothesis> {
        self.list
    }
}

/// A value on either side of a verification.
#[derive(Debug, Clone, PartialEq)]
pub enum Quantity {
    Spectrum(Vec<f64>),
    Real(f64),
    Exact(Ratio<i64>),
    Inertia(Inertia),
    Flag(bool),
}

impl Quantity {
    /// Distance between two quantities of the same kind; `INFINITY` when the
    /// kinds or dimensions differ. Exact kinds give 0 or 1.
    pub fn deviation(&self, other: &Quantity) -> f64 {
        match (self, other) {
            (Quantity::Spectrum(a), Quantity::Spectrum(b)) => {
                spectral::max_deviation(a, b).unwrap_or(f64::INFINITY)
            }
            (Quantity::Real(a), Quantity::Real(b)) => (a - b).abs(),
            (Quantity::Exact(a), Quantity::Exact(b)) => f64::from(u8::from(a != b)),
            (Quantity::Inertia(a), Quantity::Inertia(b)) => f64::from(u8::from(a != b)),
            (Quantity::Flag(a), Quantity::Flag(b)) => f64::from(u8::from(a != b)),
            _ => f64::INFINITY,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inapplicable => "inapplicable",
        }
    }
}

/// Predicted-vs-computed comparison for one theorem instance.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub theorem: &'static str,
    pub graphs: Vec<String>,
    pub status: Status,
    pub predicted: Option<Quantity>,
    pub computed: Option<Quantity>,
    pub max_dev: Option<f64>,
    pub tol: f64,
    pub hypotheses: Vec<Hypothesis>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub(crate) fn inapplicable(theorem: &'static str, graphs: &[Graph], checks: Checks) -> Self {
        VerificationReport {
            theorem,
            graphs: descriptors(graphs),
            status: Status::Inapplicable,
            predicted: None,
            computed: None,
            max_dev: None,
            tol: 0.0,
            hypotheses: checks.into_list(),
            notes: Vec::new(),
        }
    }

    pub(crate) fn compare(
        theorem: &'static str,
        graphs: &[Graph],
        checks: Checks,
        predicted: Quantity,
        computed: Quantity,
        tol: f64,
    ) -> Self {
        let dev = predicted.deviation(&computed);
        let exact = matches!(predicted, Quantity::Exact(_) | Quantity::Inertia(_) | Quantity::Flag(_));
        let within = if exact { dev == 0.0 } else { dev <= tol };
        VerificationReport {
            theorem,
            graphs: descriptors(graphs),
            status: if within && checks.ok() { Status::Pass } else { Status::Fail },
            predicted: Some(predicted),
            computed: Some(computed),
            max_dev: Some(dev),
            tol: if exact { 0.0 } else { tol },
            hypotheses: checks.into_list(),
            notes: Vec::new(),
        }
    }

    pub(crate) fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Marks the instance failed with an explanation.
    pub(crate) fn fail(mut self, note: impl Into<String>) -> Self {
        self.status = Status::Fail;
        self.notes.push(note.into());
        self
    }
}

fn descriptors(graphs: &[Graph]) -> Vec<String> {
    graphs.iter().map(Graph::descriptor).collect()
}

/// Parameters of an `r`-regular graph with its adjacency eigenvalues.
#[derive(Debug, Clone)]
pub(crate) struct RegularData {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    /// `λ₂ ≥ … ≥ λ_p` (the top eigenvalue `r` removed once).
    pub rest: Vec<f64>,
}

pub(crate) fn regular_data(g: &Graph, r: usize, tol: &Tolerances) -> Result<RegularData> {
    let s = tol.eig(&SymMatrix::adjacency(g))?;
    let mut values = s.eigenvalues;
    values.remove(0);
    Ok(RegularData { p: g.n(), q: g.edge_count(), r, rest: values })
}

pub(crate) fn adjacency_values(g: &Graph, tol: &Tolerances) -> Result<Vec<f64>> {
    Ok(tol.eig(&SymMatrix::adjacency(g))?.eigenvalues)
}

/// Eigenvalues of a small block quotient with block sizes `sizes`.
pub(crate) fn quotient_values(q: &[Vec<f64>], sizes: &[usize], tol: &Tolerances) -> Result<Vec<f64>> {
    Ok(spectral::quotient_eigenvalues(q, sizes, tol.eig)?.eigenvalues)
}

/// Maps errors that only mean "this instance is out of scope" to `None`.
pub(crate) fn out_of_scope(e: &Error) -> bool {
    matches!(
        e,
        Error::Disconnected { .. }
            | Error::EmptyEdgeSet
            | Error::TooSmall { .. }
            | Error::SizeLimit { .. }
            | Error::HypothesisFailed { .. }
            | Error::Inapplicable { .. }
    )
}
