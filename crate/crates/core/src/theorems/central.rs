//! Central graph `C[G]`: its adjacency and ε-spectra, the complement of
//! `C[G]`, and irreducibility of `ε(C[G])`.

use crate::ecc::{eccentricity_matrix, is_irreducible};
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, eccentricities, is_regular, is_triangle_free, triangle_free_vertices, Graph};
use crate::ops::central;
use crate::spectral::{self, Inertia};

use super::{
    adjacency_values, regular_data, Checks, PredictedSpectrum, Quantity, RegularData, Tolerances,
    VerificationReport,
};

pub(crate) const DIAM2: &str = "diam2-spectrum";
pub(crate) const CENTRAL_ADJ: &str = "central-adjacency-spectrum";
pub(crate) const CENTRAL: &str = "central-spectrum";
pub(crate) const CENTRAL_RADIUS: &str = "central-radius";
pub(crate) const CENTRAL_INERTIA: &str = "central-inertia";
pub(crate) const CENTRAL_ENERGY: &str = "central-energy";
pub(crate) const COMPLEMENT_INERTIA: &str = "complement-central-inertia";
pub(crate) const COMPLEMENT_ENERGY: &str = "complement-central-energy";
pub(crate) const CENTRAL_IRREDUCIBLE: &str = "central-irreducible";

// ---------------------------------------------------------------- diameter 2

fn diam2_checks(g: &Graph) -> (Checks, Option<usize>) {
    let mut c = Checks::new(DIAM2);
    let r = is_regular(g);
    c.check("regular", r.is_some());
    match all_pairs_distances(g) {
        Ok(d) => {
            let e = eccentricities(&d);
            c.check("connected", true);
            c.check("diameter 2", e.diameter == 2);
            c.check("no vertex of eccentricity 1", e.universal_count() == 0);
        }
        Err(_) => {
            c.check("connected", false);
        }
    }
    (c, r)
}

/// ε-spectrum of a regular diameter-2 graph with no universal vertex:
/// `2(n−r−1)` and `−2(1+λᵢ)` for the remaining adjacency eigenvalues.
pub fn lemma_diam2_spectrum(g: &Graph, tol: &Tolerances) -> Result<PredictedSpectrum> {
    let (c, r) = diam2_checks(g);
    c.require()?;
    let d = regular_data(g, r.expect("checked"), tol)?;
    let mut out = PredictedSpectrum::default();
    out.push(2.0 * (d.p - d.r - 1) as f64, 1, "2(n-r-1)");
    for &l in &d.rest {
        out.push(-2.0 * (1.0 + l), 1, "-2(1+lambda_i)");
    }
    Ok(out)
}

pub(crate) fn verify_diam2(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    let g = &gs[0];
    let (c, _) = diam2_checks(g);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(DIAM2, gs, c));
    }
    let predicted = lemma_diam2_spectrum(g, tol)?.values();
    let computed = eccentricity_matrix(g)?.spectrum(tol.eig)?.eigenvalues;
    Ok(VerificationReport::compare(DIAM2, gs, c, Quantity::Spectrum(predicted), Quantity::Spectrum(computed), tol.compare))
}

// ------------------------------------------------------ adjacency of C[G]

fn central_adj_checks(g: &Graph) -> (Checks, Option<usize>) {
    let mut c = Checks::new(CENTRAL_ADJ);
    let r = is_regular(g);
    c.check("regular", r.is_some());
    // the zero multiplicity n(r-2)/2 must be a count
    c.check("r >= 2", r.is_some_and(|r| r >= 2));
    (c, r)
}

/// Adjacency spectrum of `C[G]` for `r`-regular `G`.
pub fn lemma_central_adjacency_spectrum(g: &Graph, tol: &Tolerances) -> Result<PredictedSpectrum> {
    let (c, r) = central_adj_checks(g);
    c.require()?;
    let d = regular_data(g, r.expect("checked"), tol)?;
    Ok(central_adjacency_from(&d))
}

fn central_adjacency_from(d: &RegularData) -> PredictedSpectrum {
    let (n, r) = (d.p as f64, d.r as f64);
    let mut out = PredictedSpectrum::default();
    out.push(0.0, d.p * (d.r - 2) / 2, "0");
    let a = n - 1.0 - r;
    let s = (a * a + 8.0 * r).sqrt();
    out.push((a + s) / 2.0, 1, "quotient+");
    out.push((a - s) / 2.0, 1, "quotient-");
    for &l in &d.rest {
        let s = ((1.0 + l).powi(2) + 4.0 * (l + r).max(0.0)).sqrt();
        out.push((-1.0 - l + s) / 2.0, 1, "lambda_i+");
        out.push((-1.0 - l - s) / 2.0, 1, "lambda_i-");
    }
    out
}

pub(crate) fn verify_central_adjacency(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    let g = &gs[0];
    let (c, _) = central_adj_checks(g);
    if !c.ok() || g.edge_count() == 0 {
        return Ok(VerificationReport::inapplicable(CENTRAL_ADJ, gs, c));
    }
    let predicted = lemma_central_adjacency_spectrum(g, tol)?.values();
    let computed = adjacency_values(&central(g)?.result, tol)?;
    Ok(VerificationReport::compare(
        CENTRAL_ADJ,
        gs,
        c,
        Quantity::Spectrum(predicted),
        Quantity::Spectrum(computed),
        tol.compare,
    ))
}

// ------------------------------------------------------------ ε(C[G])

pub(crate) fn central_checks(theorem: &'static str, g: &Graph) -> (Checks, Option<usize>) {
    let mut c = Checks::new(theorem);
    let r = is_regular(g);
    c.check("connected", g.is_connected());
    c.check("regular", r.is_some());
    c.check("r >= 2", r.is_some_and(|r| r >= 2));
    c.check("triangle-free", is_triangle_free(g));
    (c, r)
}

/// The two values attached to an adjacency eigenvalue `λ ≠ r`.
pub(crate) fn central_pair(l: f64, r: f64) -> (f64, f64) {
    let b = 3.0 - 3.0 * r - l;
    let s = central_pair_root(l, r);
    ((b + s) / 2.0, (b - s) / 2.0)
}

fn central_pair_root(l: f64, r: f64) -> f64 {
    ((5.0 * l + 3.0 * (r - 1.0)).powi(2) + 16.0 * (l + r).max(0.0)).sqrt()
}

fn central_quotient_root(d: &RegularData) -> (f64, f64) {
    let (p, q, r) = (d.p as f64, d.q as f64, d.r as f64);
    let b = 3.0 * q - 4.0 * r + 3.0;
    let s = ((3.0 * q - 8.0 * r + 3.0).powi(2) + 16.0 * (p - 2.0) * (q - r)).sqrt();
    (b, s)
}

fn central_data(theorem: &'static str, g: &Graph, tol: &Tolerances) -> Result<RegularData> {
    let (c, r) = central_checks(theorem, g);
    c.require()?;
    regular_data(g, r.expect("checked"), tol)
}

/// ε-spectrum of `C[G]` for connected triangle-free `r`-regular `G`, `r ≥ 2`.
pub fn thm_central_spectrum(g: &Graph, tol: &Tolerances) -> Result<PredictedSpectrum> {
    let d = central_data(CENTRAL, g, tol)?;
    let mut out = PredictedSpectrum::default();
    out.push(3.0, d.q - d.p, "3");
    for &l in &d.rest {
        let (a, b) = central_pair(l, d.r as f64);
        out.push(a, 1, "lambda_i+");
        out.push(b, 1, "lambda_i-");
    }
    let (b, s) = central_quotient_root(&d);
    out.push((b + s) / 2.0, 1, "quotient+");
    out.push((b - s) / 2.0, 1, "quotient-");
    Ok(out)
}

pub fn cor_central_radius(g: &Graph, tol: &Tolerances) -> Result<f64> {
    let d = central_data(CENTRAL_RADIUS, g, tol)?;
    let (b, s) = central_quotient_root(&d);
    Ok((b + s) / 2.0)
}

/// `(q, p, 0)`.
pub fn cor_central_inertia(g: &Graph) -> Result<Inertia> {
    let (c, _) = central_checks(CENTRAL_INERTIA, g);
    c.require()?;
    Ok(Inertia::new(g.edge_count(), g.n(), 0))
}

/// `3(q−p) + √(quotient discriminant) + Σ √(pair discriminant)`.
pub fn cor_central_energy(g: &Graph, tol: &Tolerances) -> Result<f64> {
    let d = central_data(CENTRAL_ENERGY, g, tol)?;
    let r = d.r as f64;
    let (_, s) = central_quotient_root(&d);
    Ok(3.0 * (d.q - d.p) as f64 + s + d.rest.iter().map(|&l| central_pair_root(l, r)).sum::<f64>())
}

/// Pairs whose roots do not straddle zero; the inertia and energy
/// corollaries presume every pair has one positive and one negative root.
fn sign_violations(d: &RegularData, zero: f64) -> Vec<String> {
    let r = d.r as f64;
    let mut out = Vec::new();
    for &l in &d.rest {
        let (a, b) = central_pair(l, r);
        if !(a > zero && b < -zero) {
            out.push(format!("roots for lambda={l:.6} are {a:.6}, {b:.6}: not of opposite sign"));
        }
    }
    let (b, s) = central_quotient_root(d);
    let (hi, lo) = ((b + s) / 2.0, (b - s) / 2.0);
    if !(hi > zero && lo < -zero) {
        out.push(format!("quotient roots {hi:.6}, {lo:.6}: not of opposite sign"));
    }
    out
}

pub(crate) fn verify_central(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    let g = &gs[0];
    let (c, _) = central_checks(CENTRAL, g);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(CENTRAL, gs, c));
    }
    let predicted = thm_central_spectrum(g, tol)?.values();
    let computed = eccentricity_matrix(&central(g)?.result)?.spectrum(tol.eig)?.eigenvalues;
    Ok(VerificationReport::compare(CENTRAL, gs, c, Quantity::Spectrum(predicted), Quantity::Spectrum(computed), tol.compare))
}

pub(crate) fn verify_central_radius(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    let g = &gs[0];
    let (c, _) = central_checks(CENTRAL_RADIUS, g);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(CENTRAL_RADIUS, gs, c));
    }
    let predicted = cor_central_radius(g, tol)?;
    let s = eccentricity_matrix(&central(g)?.result)?.spectrum(tol.eig)?;
    let computed = spectral::spectral_radius(&s);
    Ok(VerificationReport::compare(CENTRAL_RADIUS, gs, c, Quantity::Real(predicted), Quantity::Real(computed), tol.compare))
}

pub(crate) fn verify_central_inertia(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    let g = &gs[0];
    let (c, r) = central_checks(CENTRAL_INERTIA, g);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(CENTRAL_INERTIA, gs, c));
    }
    let predicted = cor_central_inertia(g)?;
    let s = eccentricity_matrix(&central(g)?.result)?.spectrum(tol.eig)?;
    let zero = tol.zero_for(&s);
    let computed = spectral::inertia(&s, zero);
    let d = regular_data(g, r.expect("checked"), tol)?;
    let mut report =
        VerificationReport::compare(CENTRAL_INERTIA, gs, c, Quantity::Inertia(predicted), Quantity::Inertia(computed), 0.0);
    for v in sign_violations(&d, zero) {
        report = report.note(v);
    }
    Ok(report)
}

pub(crate) fn verify_central_energy(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    let g = &gs[0];
    let (c, r) = central_checks(CENTRAL_ENERGY, g);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(CENTRAL_ENERGY, gs, c));
    }
    let predicted = cor_central_energy(g, tol)?;
    let s = eccentricity_matrix(&central(g)?.result)?.spectrum(tol.eig)?;
    let computed = spectral::energy(&s);
    let d = regular_data(g, r.expect("checked"), tol)?;
    let mut report =
        VerificationReport::compare(CENTRAL_ENERGY, gs, c, Quantity::Real(predicted), Quantity::Real(computed), tol.compare);
    for v in sign_violations(&d, tol.zero_for(&s)) {
        report = report.note(v);
    }
    Ok(report)
}

// ------------------------------------------------ complement of C[G]

fn complement_checks(theorem: &'static str, g: &Graph) -> Result<(Checks, Option<usize>)> {
    let mut c = Checks::new(theorem);
    let r = is_regular(g);
    c.check("regular", r.is_some());
    let connected = c.check("connected", g.is_connected());
    let big = c.check("p >= 3", g.n() >= 3);
    if connected && big {
        let co = central(g)?.result.complement();
        let diam2 = all_pairs_distances(&co).map(|d| eccentricities(&d)).is_ok_and(|e| e.diameter == 2 && e.radius == 2);
        c.check("complement of C[G] connected, self-centered of diameter 2", diam2);
    }
    Ok((c, r))
}

/// `(p, p, p(r−2)/2)`.
pub fn cor_complement_central_inertia(g: &Graph) -> Result<Inertia> {
    let (c, r) = complement_checks(COMPLEMENT_INERTIA, g)?;
    c.require()?;
    let r = r.expect("checked");
    Ok(Inertia::new(g.n(), g.n(), g.n() * (r - 2) / 2))
}

/// `2 · E_A(C[G])`, with the adjacency energy taken from the closed-form spectrum.
pub fn cor_complement_central_energy(g: &Graph, tol: &Tolerances) -> Result<f64> {
    let (c, r) = complement_checks(COMPLEMENT_ENERGY, g)?;
    c.require()?;
    let d = regular_data(g, r.expect("checked"), tol)?;
    Ok(2.0 * central_adjacency_from(&d).energy())
}

fn complement_central_spectrum(g: &Graph, tol: &Tolerances) -> Result<spectral::Spectrum> {
    eccentricity_matrix(&central(g)?.result.complement())?.spectrum(tol.eig)
}

pub(crate) fn verify_complement_inertia(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    let g = &gs[0];
    let (c, _) = complement_checks(COMPLEMENT_INERTIA, g)?;
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(COMPLEMENT_INERTIA, gs, c));
    }
    let predicted = cor_complement_central_inertia(g)?;
    let s = complement_central_spectrum(g, tol)?;
    let computed = spectral::inertia(&s, tol.zero_for(&s));
    let mut report = VerificationReport::compare(
        COMPLEMENT_INERTIA,
        gs,
        c,
        Quantity::Inertia(predicted),
        Quantity::Inertia(computed),
        0.0,
    );
    if crate::graph::is_bipartite(g) {
        report = report.note("bipartite G: the adjacency eigenvalue -r gives an extra zero of A(C[G])");
    }
    Ok(report)
}

pub(crate) fn verify_complement_energy(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    let g = &gs[0];
    let (c, _) = complement_checks(COMPLEMENT_ENERGY, g)?;
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(COMPLEMENT_ENERGY, gs, c));
    }
    let predicted = cor_complement_central_energy(g, tol)?;
    let computed = spectral::energy(&complement_central_spectrum(g, tol)?);
    Ok(VerificationReport::compare(
        COMPLEMENT_ENERGY,
        gs,
        c,
        Quantity::Real(predicted),
        Quantity::Real(computed),
        tol.compare,
    ))
}

// ------------------------------------------------------ irreducibility

/// Which sufficient condition certified irreducibility of `ε(C[G])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityCase {
    TriangleFree,
    /// Vertices lying on no triangle.
    TriangleFreeVertices(Vec<usize>),
}

fn irreducible_checks(g: &Graph) -> Checks {
    let mut c = Checks::new(CENTRAL_IRREDUCIBLE);
    c.check("connected", g.is_connected());
    c.check("at least one edge", g.edge_count() > 0);
    c
}

pub fn thm_central_irreducible(g: &Graph) -> Result<IrreducibilityCase> {
    irreducible_checks(g).require()?;
    if is_triangle_free(g) {
        return Ok(IrreducibilityCase::TriangleFree);
    }
    let free = triangle_free_vertices(g);
    if free.is_empty() {
        return Err(Error::Inapplicable {
            theorem: CENTRAL_IRREDUCIBLE,
            reason: "every vertex lies on a triangle".into(),
        });
    }
    Ok(IrreducibilityCase::TriangleFreeVertices(free))
}

pub(crate) fn verify_central_irreducible(gs: &[Graph], _tol: &Tolerances) -> Result<VerificationReport> {
    let g = &gs[0];
    let mut c = irreducible_checks(g);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(CENTRAL_IRREDUCIBLE, gs, c));
    }
    let case = match thm_central_irreducible(g) {
        Ok(case) => case,
        Err(Error::Inapplicable { .. }) => {
            c.check("triangle-free, or some vertex on no triangle", false);
            return Ok(VerificationReport::inapplicable(CENTRAL_IRREDUCIBLE, gs, c));
        }
        Err(e) => return Err(e),
    };
    let computed = is_irreducible(&central(g)?.result)?;
    let note = match case {
        IrreducibilityCase::TriangleFree => "case: triangle-free".to_string(),
        IrreducibilityCase::TriangleFreeVertices(v) => format!("case: vertices on no triangle {v:?}"),
    };
    Ok(VerificationReport::compare(CENTRAL_IRREDUCIBLE, gs, c, Quantity::Flag(true), Quantity::Flag(computed), 0.0).note(note))
}
