//! ε-energy of line graphs of regular graphs and of their complements.

use crate::ecc::eccentricity_matrix;
use crate::error::Result;
use crate::graph::{has_induced_f, has_property_dagger, is_regular, Graph};
use crate::spectral::{self, Spectrum, SymMatrix};

use super::{adjacency_values, Checks, Quantity, Tolerances, VerificationReport};

pub(crate) const LINE_ENERGY: &str = "line-energy";
pub(crate) const COMPLEMENT_LINE_ENERGY: &str = "complement-line-energy";
pub(crate) const LINE_COSPECTRAL: &str = "line-cospectral";
pub(crate) const LINE_EQUIENERGETIC: &str = "line-equienergetic";

/// Slack allowed when comparing `λ_min` with an integer threshold.
const EIG_MARGIN: f64 = 1e-9;

fn ecc_spectrum_of(g: &Graph, tol: &Tolerances) -> Result<Spectrum> {
    eccentricity_matrix(g)?.spectrum(tol.eig)
}

fn line_checks(theorem: &'static str, g: &Graph, tol: &Tolerances) -> Result<(Checks, usize)> {
    let mut c = Checks::new(theorem);
    let r = is_regular(g);
    c.check("regular", r.is_some());
    c.check("connected", g.is_connected());
    c.check("p >= 4", g.n() >= 4);
    c.check("no induced F1, F2, F3", !has_induced_f(g)?);
    let r = r.unwrap_or(0);
    if g.n() > 0 {
        let min = *adjacency_values(g, tol)?.last().expect("nonempty");
        c.check("lambda_min >= 1 - r", min >= 1.0 - r as f64 - EIG_MARGIN);
    }
    Ok((c, r))
}

/// `E_ε(L(G)) = 4p(r−1) + 4(1−2r)`.
pub fn thm_line_graph_energy(g: &Graph, tol: &Tolerances) -> Result<f64> {
    let (c, r) = line_checks(LINE_ENERGY, g, tol)?;
    c.require()?;
    let (p, r) = (g.n() as f64, r as f64);
    Ok(4.0 * p * (r - 1.0) + 4.0 * (1.0 - 2.0 * r))
}

pub(crate) fn verify_line_energy(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    let g = &gs[0];
    let (c, _) = line_checks(LINE_ENERGY, g, tol)?;
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(LINE_ENERGY, gs, c));
    }
    let predicted = thm_line_graph_energy(g, tol)?;
    let computed = spectral::energy(&ecc_spectrum_of(&g.line_graph()?, tol)?);
    Ok(VerificationReport::compare(LINE_ENERGY, gs, c, Quantity::Real(predicted), Quantity::Real(computed), tol.compare))
}

fn complement_line_checks(g: &Graph, tol: &Tolerances) -> Result<(Checks, usize)> {
    let mut c = Checks::new(COMPLEMENT_LINE_ENERGY);
    let r = is_regular(g);
    c.check("regular", r.is_some());
    let r = r.unwrap_or(0);
    if c.check("r >= 2", r >= 2) {
        let min = *adjacency_values(g, tol)?.last().expect("nonempty");
        c.check("lambda_min >= 2 - r", min >= 2.0 - r as f64 - EIG_MARGIN);
        c.check("L(G) has property (dagger)", has_property_dagger(&g.line_graph()?));
    }
    Ok((c, r))
}

/// `E_ε(complement of L(G)) = 4p(r−2)`.
pub fn thm_complement_line_graph_energy(g: &Graph, tol: &Tolerances) -> Result<f64> {
    let (c, r) = complement_line_checks(g, tol)?;
    c.require()?;
    Ok(4.0 * g.n() as f64 * (r as f64 - 2.0))
}

pub(crate) fn verify_complement_line_energy(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    let g = &gs[0];
    let (c, _) = complement_line_checks(g, tol)?;
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(COMPLEMENT_LINE_ENERGY, gs, c));
    }
    let predicted = thm_complement_line_graph_energy(g, tol)?;
    let computed = spectral::energy(&ecc_spectrum_of(&g.line_graph()?.complement(), tol)?);
    Ok(VerificationReport::compare(
        COMPLEMENT_LINE_ENERGY,
        gs,
        c,
        Quantity::Real(predicted),
        Quantity::Real(computed),
        tol.compare,
    ))
}

fn pair_checks(theorem: &'static str, g1: &Graph, g2: &Graph) -> Result<(Checks, Option<usize>)> {
    let mut c = Checks::new(theorem);
    let (r1, r2) = (is_regular(g1), is_regular(g2));
    c.check("both regular of the same degree", r1.is_some() && r1 == r2);
    c.check("same order", g1.n() == g2.n());
    c.check("both connected", g1.is_connected() && g2.is_connected());
    c.check("p >= 4", g1.n() >= 4);
    c.check("no induced F1, F2, F3", !has_induced_f(g1)? && !has_induced_f(g2)?);
    Ok((c, r1))
}

fn adjacency_cospectral(g1: &Graph, g2: &Graph, tol: &Tolerances) -> Result<bool> {
    let a = tol.eig(&SymMatrix::adjacency(g1))?;
    let b = tol.eig(&SymMatrix::adjacency(g2))?;
    spectral::spectra_equal(&a, &b, tol.compare)
}

/// `G₁, G₂` cospectral iff `L(G₁), L(G₂)` ε-cospectral.
pub(crate) fn verify_line_cospectral(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    let (g1, g2) = (&gs[0], &gs[1]);
    let (c, _) = pair_checks(LINE_COSPECTRAL, g1, g2)?;
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(LINE_COSPECTRAL, gs, c));
    }
    let predicted = adjacency_cospectral(g1, g2, tol)?;
    let s1 = ecc_spectrum_of(&g1.line_graph()?, tol)?;
    let s2 = ecc_spectrum_of(&g2.line_graph()?, tol)?;
    let computed = spectral::spectra_equal(&s1, &s2, tol.compare)?;
    Ok(VerificationReport::compare(LINE_COSPECTRAL, gs, c, Quantity::Flag(predicted), Quantity::Flag(computed), 0.0))
}

/// Non-cospectral, non-complete pairs meeting the energy hypotheses have
/// ε-equienergetic, non-ε-cospectral line graphs.
pub(crate) fn verify_line_equienergetic(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    let (g1, g2) = (&gs[0], &gs[1]);
    let (mut c, r) = pair_checks(LINE_EQUIENERGETIC, g1, g2)?;
    let r = r.unwrap_or(0);
    c.check("non-complete", r + 1 != g1.n());
    if c.ok() {
        c.check("not cospectral", !adjacency_cospectral(g1, g2, tol)?);
        let min1 = *adjacency_values(g1, tol)?.last().expect("nonempty");
        let min2 = *adjacency_values(g2, tol)?.last().expect("nonempty");
        c.check("lambda_min >= 1 - r", min1.min(min2) >= 1.0 - r as f64 - EIG_MARGIN);
    }
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(LINE_EQUIENERGETIC, gs, c));
    }
    let s1 = ecc_spectrum_of(&g1.line_graph()?, tol)?;
    let s2 = ecc_spectrum_of(&g2.line_graph()?, tol)?;
    let cospectral = spectral::spectra_equal(&s1, &s2, tol.compare)?;
    let gap = (spectral::energy(&s1) - spectral::energy(&s2)).abs();
    let computed = !cospectral && gap <= tol.compare;
    Ok(VerificationReport::compare(LINE_EQUIENERGETIC, gs, c, Quantity::Flag(true), Quantity::Flag(computed), 0.0)
        .note(format!("energy gap {gap:.3e}")))
}
