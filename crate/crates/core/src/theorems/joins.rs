//! Central vertex, edge and vertex-edge joins: ε-spectra, ε-Wiener indices,
//! spectral-radius bounds, irreducibility and the cospectral constructions.

use num_rational::Ratio;

use crate::ecc::{ecc_wiener, eccentricity_matrix, is_irreducible};
use crate::error::Result;
use crate::graph::{is_regular, is_triangle_free, Graph};
use crate::ops::{central, central_edge_join, central_vertex_edge_join, central_vertex_join};
use crate::spectral::{self, Spectrum};

use super::bounds::{BoundDirection, BoundReport};
use super::central::central_pair;
use super::{
    adjacency_values, quotient_values, regular_data, Checks, PredictedSpectrum, Quantity, RegularData, Tolerances,
    VerificationReport,
};

pub(crate) const VJ: &str = "vertex-join-spectrum";
pub(crate) const VJ_WIENER: &str = "vertex-join-wiener";
pub(crate) const VJ_RADIUS: &str = "vertex-join-radius";
pub(crate) const VJ_IRREDUCIBLE: &str = "vertex-join-irreducible";
pub(crate) const EJ: &str = "edge-join-spectrum";
pub(crate) const EJ_WIENER: &str = "edge-join-wiener";
pub(crate) const EJ_RADIUS: &str = "edge-join-radius";
pub(crate) const EJ_IRREDUCIBLE: &str = "edge-join-irreducible";
pub(crate) const VEJ: &str = "vertex-edge-join-spectrum";
pub(crate) const VEJ_IRREDUCIBLE: &str = "vertex-edge-join-irreducible";
pub(crate) const VJ_COSPECTRAL: &str = "vertex-join-cospectral";
pub(crate) const EJ_COSPECTRAL: &str = "edge-join-cospectral";
pub(crate) const VEJ_COSPECTRAL: &str = "vertex-edge-join-cospectral";
pub(crate) const L2_EQUIENERGETIC: &str = "l2-join-equienergetic";

/// Margin required for the strict spectral-radius inequalities.
pub const STRICT_MARGIN: f64 = 1e-9;

fn check_base(c: &mut Checks, g1: &Graph, triangle_free: bool) -> Option<usize> {
    let r1 = is_regular(g1);
    c.check("G1 regular", r1.is_some());
    c.check("G1 degree >= 2", r1.is_some_and(|r| r >= 2));
    if triangle_free {
        c.check("G1 triangle-free", is_triangle_free(g1));
    }
    r1
}

fn check_operand(c: &mut Checks, label: &str, g: &Graph) -> Option<usize> {
    let r = is_regular(g);
    c.check(format!("{label} regular"), r.is_some());
    r
}

struct JoinData {
    g1: RegularData,
    p2: usize,
    r2: usize,
    /// `β₂ … β_{p₂}` of `G₂`.
    beta: Vec<f64>,
}

fn join_checks(theorem: &'static str, g1: &Graph, g2: &Graph) -> (Checks, Option<usize>, Option<usize>) {
    let mut c = Checks::new(theorem);
    let r1 = check_base(&mut c, g1, true);
    let r2 = check_operand(&mut c, "G2", g2);
    (c, r1, r2)
}

fn join_data(theorem: &'static str, g1: &Graph, g2: &Graph, tol: &Tolerances) -> Result<JoinData> {
    let (c, r1, r2) = join_checks(theorem, g1, g2);
    c.require()?;
    let d1 = regular_data(g1, r1.expect("checked"), tol)?;
    let d2 = regular_data(g2, r2.expect("checked"), tol)?;
    Ok(JoinData { g1: d1, p2: g2.n(), r2: d2.r, beta: d2.rest })
}

/// Values attached to `λ` through the `t`-substitution:
/// `−(2t + 3(λ + r − 1))` for both roots `t` of the auxiliary quadratic.
pub fn vertex_join_t_form(l: f64, r: f64) -> (f64, f64) {
    let a = 3.0 * (r - 1.0) + 5.0 * l;
    let s = (a * a + 16.0 * (l + r).max(0.0)).sqrt();
    let t1 = (-a + s) / 4.0;
    let t2 = (-a - s) / 4.0;
    (-(2.0 * t1 + 3.0 * (l + r - 1.0)), -(2.0 * t2 + 3.0 * (l + r - 1.0)))
}

fn vertex_join_quotient(d: &JoinData) -> (Vec<Vec<f64>>, Vec<usize>) {
    let (p1, q1, r1) = (d.g1.p as f64, d.g1.q as f64, d.g1.r as f64);
    let (p2, r2) = (d.p2 as f64, d.r2 as f64);
    (
        vec![
            vec![2.0 * r1, 2.0 * (q1 - r1), 0.0],
            vec![2.0 * (p1 - 2.0), 3.0 * (q1 - 2.0 * r1 + 1.0), 2.0 * p2],
            vec![0.0, 2.0 * q1, 2.0 * (p2 - 1.0 - r2)],
        ],
        vec![d.g1.p, d.g1.q, d.p2],
    )
}

/// ε-spectrum of `C[G₁] ∨̇ G₂` for triangle-free `r₁`-regular `G₁` and `r₂`-regular `G₂`.
pub fn thm_vertex_join_spectrum(g1: &Graph, g2: &Graph, tol: &Tolerances) -> Result<PredictedSpectrum> {
    let d = join_data(VJ, g1, g2, tol)?;
    let mut out = PredictedSpectrum::default();
    out.push(3.0, d.g1.q - d.g1.p, "3");
    for &b in &d.beta {
        out.push(-2.0 * (1.0 + b), 1, "-2(1+beta_j)");
    }
    for &l in &d.g1.rest {
        let (a, b) = central_pair(l, d.g1.r as f64);
        out.push(a, 1, "lambda_i+");
        out.push(b, 1, "lambda_i-");
    }
    let (q, sizes) = vertex_join_quotient(&d);
    for v in quotient_values(&q, &sizes, tol)? {
        out.push(v, 1, "quotient");
    }
    Ok(out)
}

fn edge_join_pair(l: f64, r: f64) -> (f64, f64) {
    let s = ((l + 1.0).powi(2) + 4.0 * (l + r).max(0.0)).sqrt();
    (l - 1.0 + s, l - 1.0 - s)
}

/// ε-spectrum of `C[G₁] ⊻ G₂`.
pub fn thm_edge_join_spectrum(g1: &Graph, g2: &Graph, tol: &Tolerances) -> Result<PredictedSpectrum> {
    let d = join_data(EJ, g1, g2, tol)?;
    let (p1, q1, r1) = (d.g1.p as f64, d.g1.q as f64, d.g1.r as f64);
    let (p2, r2) = (d.p2 as f64, d.r2 as f64);
    let mut out = PredictedSpectrum::default();
    out.push(-2.0, d.g1.q - d.g1.p, "-2");
    for &b in &d.beta {
        out.push(-2.0 * (1.0 + b), 1, "-2(1+beta_j)");
    }
    for &l in &d.g1.rest {
        let (a, b) = edge_join_pair(l, r1);
        out.push(a, 1, "lambda_i+");
        out.push(b, 1, "lambda_i-");
    }
    let q = vec![
        vec![2.0 * r1, 2.0 * (q1 - r1), 2.0 * p2],
        vec![2.0 * (p1 - 2.0), 2.0 * (q1 - 1.0), 0.0],
        vec![2.0 * p1, 0.0, 2.0 * (p2 - 1.0 - r2)],
    ];
    for v in quotient_values(&q, &[d.g1.p, d.g1.q, d.p2], tol)? {
        out.push(v, 1, "quotient");
    }
    Ok(out)
}

fn vej_checks(g1: &Graph, g2: &Graph, g3: &Graph) -> (Checks, Option<usize>) {
    let mut c = Checks::new(VEJ);
    let r1 = check_base(&mut c, g1, true);
    check_operand(&mut c, "G2", g2);
    check_operand(&mut c, "G3", g3);
    (c, r1)
}

/// Zero multiplicity used by [`thm_vertex_edge_join_spectrum`], and the
/// printed variant it replaces.
pub fn vertex_edge_zero_multiplicity(p2: usize, p3: usize) -> (usize, i64) {
    (p2 + p3 - 2, p2 as i64 - p3 as i64 - 2)
}

/// ε-spectrum of `C[G₁] ∨ (G₂ⱽ ∪ G₃ᴱ)`.
pub fn thm_vertex_edge_join_spectrum(g1: &Graph, g2: &Graph, g3: &Graph, tol: &Tolerances) -> Result<PredictedSpectrum> {
    let (c, r1) = vej_checks(g1, g2, g3);
    c.require()?;
    let d = regular_data(g1, r1.expect("checked"), tol)?;
    let (p1, q1, r1) = (d.p as f64, d.q as f64, d.r as f64);
    let (p2, p3) = (g2.n() as f64, g3.n() as f64);
    let mut out = PredictedSpectrum::default();
    for &l in &d.rest {
        let (a, b) = edge_join_pair(l, r1);
        out.push(a, 1, "lambda_1j+");
        out.push(b, 1, "lambda_1j-");
    }
    out.push(-2.0, d.q - d.p, "-2");
    out.push(0.0, vertex_edge_zero_multiplicity(g2.n(), g3.n()).0, "0");
    let q = vec![
        vec![2.0 * r1, 2.0 * (q1 - r1), 0.0, 2.0 * p3],
        vec![2.0 * (p1 - 2.0), 2.0 * (q1 - 1.0), 2.0 * p2, 0.0],
        vec![0.0, 2.0 * q1, 0.0, 3.0 * p3],
        vec![2.0 * p1, 0.0, 3.0 * p2, 0.0],
    ];
    for v in quotient_values(&q, &[d.p, d.q, g2.n(), g3.n()], tol)? {
        out.push(v, 1, "quotient");
    }
    Ok(out)
}

// ------------------------------------------------------------- Wiener

fn wiener_checks(theorem: &'static str, g1: &Graph, g2: &Graph, triangle_free: bool) -> (Checks, usize, usize) {
    let mut c = Checks::new(theorem);
    let r1 = check_base(&mut c, g1, triangle_free).unwrap_or(0);
    // an empty G2 reduces the vertex join to C[G1]
    let r2 = if g2.n() == 0 { Some(0) } else { check_operand(&mut c, "G2", g2) };
    (c, r1, r2.unwrap_or(0))
}

fn int(x: usize) -> i64 {
    x as i64
}

/// `2q₁(p₁−1) + (3/2)q₁(q₁−2r₁+1) + p₂(2q₁+p₂−r₂−1)`.
pub fn cor_vertex_join_wiener(g1: &Graph, g2: &Graph) -> Result<Ratio<i64>> {
    let (c, r1, r2) = wiener_checks(VJ_WIENER, g1, g2, true);
    c.require()?;
    Ok(vertex_join_wiener_formula(g1.n(), g1.edge_count(), r1, g2.n(), r2))
}

fn vertex_join_wiener_formula(p1: usize, q1: usize, r1: usize, p2: usize, r2: usize) -> Ratio<i64> {
    let (p1, q1, r1, p2, r2) = (int(p1), int(q1), int(r1), int(p2), int(r2));
    Ratio::from_integer(2 * q1 * (p1 - 1))
        + Ratio::new(3 * q1 * (q1 - 2 * r1 + 1), 2)
        + Ratio::from_integer(p2 * (2 * q1 + p2 - r2 - 1))
}

/// `q₁(2p₁+q₁−3) + p₂(2p₁+p₂−1−r₂)`.
pub fn cor_edge_join_wiener(g1: &Graph, g2: &Graph) -> Result<Ratio<i64>> {
    let (mut c, _, r2) = wiener_checks(EJ_WIENER, g1, g2, true);
    c.check("G2 nonempty", g2.n() > 0);
    c.require()?;
    let (p1, q1, p2, r2) = (int(g1.n()), int(g1.edge_count()), int(g2.n()), int(r2));
    Ok(Ratio::from_integer(q1 * (2 * p1 + q1 - 3) + p2 * (2 * p1 + p2 - 1 - r2)))
}

fn vertex_join_graph(g1: &Graph, g2: &Graph) -> Result<Graph> {
    Ok(if g2.n() == 0 { central(g1)?.result } else { central_vertex_join(g1, g2)?.result })
}

pub(crate) fn verify_vertex_join_wiener(gs: &[Graph], _tol: &Tolerances) -> Result<VerificationReport> {
    let (g1, g2) = (&gs[0], &gs[1]);
    let (c, _, _) = wiener_checks(VJ_WIENER, g1, g2, true);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(VJ_WIENER, gs, c));
    }
    let predicted = cor_vertex_join_wiener(g1, g2)?;
    let computed = ecc_wiener(&eccentricity_matrix(&vertex_join_graph(g1, g2)?)?);
    Ok(VerificationReport::compare(VJ_WIENER, gs, c, Quantity::Exact(predicted), Quantity::Exact(computed), 0.0))
}

pub(crate) fn verify_edge_join_wiener(gs: &[Graph], _tol: &Tolerances) -> Result<VerificationReport> {
    let (g1, g2) = (&gs[0], &gs[1]);
    let (mut c, _, _) = wiener_checks(EJ_WIENER, g1, g2, true);
    c.check("G2 nonempty", g2.n() > 0);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(EJ_WIENER, gs, c));
    }
    let predicted = cor_edge_join_wiener(g1, g2)?;
    let computed = ecc_wiener(&eccentricity_matrix(&central_edge_join(g1, g2)?.result)?);
    Ok(VerificationReport::compare(EJ_WIENER, gs, c, Quantity::Exact(predicted), Quantity::Exact(computed), 0.0))
}

// --------------------------------------------------------------- radius

fn radius_report(id: &'static str, wiener: Ratio<i64>, n: usize, s: &Spectrum) -> BoundReport {
    let rhs = 2.0 * (*wiener.numer() as f64) / (*wiener.denom() as f64) / n as f64;
    let lhs = spectral::spectral_radius(s);
    BoundReport::approx(id, BoundDirection::StrictLower, lhs, rhs, STRICT_MARGIN, None)
}

/// `ρ_ε(C[G₁] ∨̇ G₂) > 2 W_ε / (p₁ + q₁ + p₂)` with the Wiener index from the closed form.
pub fn cor_vertex_join_radius_bound(g1: &Graph, g2: &Graph, tol: &Tolerances) -> Result<BoundReport> {
    let (c, _, _) = wiener_checks(VJ_RADIUS, g1, g2, true);
    c.require()?;
    let w = cor_vertex_join_wiener(g1, g2)?;
    let g = vertex_join_graph(g1, g2)?;
    Ok(radius_report(VJ_RADIUS, w, g.n(), &eccentricity_matrix(&g)?.spectrum(tol.eig)?))
}

pub fn cor_edge_join_radius_bound(g1: &Graph, g2: &Graph, tol: &Tolerances) -> Result<BoundReport> {
    let (mut c, _, _) = wiener_checks(EJ_RADIUS, g1, g2, true);
    c.check("G2 nonempty", g2.n() > 0);
    c.require()?;
    let w = cor_edge_join_wiener(g1, g2)?;
    let g = central_edge_join(g1, g2)?.result;
    Ok(radius_report(EJ_RADIUS, w, g.n(), &eccentricity_matrix(&g)?.spectrum(tol.eig)?))
}

fn verify_radius(
    id: &'static str,
    gs: &[Graph],
    tol: &Tolerances,
    edge: bool,
) -> Result<VerificationReport> {
    let (g1, g2) = (&gs[0], &gs[1]);
    let (mut c, _, _) = wiener_checks(id, g1, g2, true);
    if edge {
        c.check("G2 nonempty", g2.n() > 0);
    }
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(id, gs, c));
    }
    let b = if edge { cor_edge_join_radius_bound(g1, g2, tol)? } else { cor_vertex_join_radius_bound(g1, g2, tol)? };
    Ok(b.into_verification(id, gs, c))
}

pub(crate) fn verify_vertex_join_radius(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    verify_radius(VJ_RADIUS, gs, tol, false)
}

pub(crate) fn verify_edge_join_radius(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    verify_radius(EJ_RADIUS, gs, tol, true)
}

// ------------------------------------------------------- spectra, verified

fn ecc_values(g: &Graph, tol: &Tolerances) -> Result<Vec<f64>> {
    Ok(eccentricity_matrix(g)?.spectrum(tol.eig)?.eigenvalues)
}

pub(crate) fn verify_vertex_join(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    let (g1, g2) = (&gs[0], &gs[1]);
    let (mut c, _, _) = join_checks(VJ, g1, g2);
    c.check("G2 nonempty", g2.n() > 0);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(VJ, gs, c));
    }
    let predicted = thm_vertex_join_spectrum(g1, g2, tol)?.values();
    let computed = ecc_values(&central_vertex_join(g1, g2)?.result, tol)?;
    let d = join_data(VJ, g1, g2, tol)?;
    let r = d.g1.r as f64;
    let t_dev = d
        .g1
        .rest
        .iter()
        .map(|&l| {
            let (a, b) = central_pair(l, r);
            let (ta, tb) = vertex_join_t_form(l, r);
            // the t-form pairs its roots in the opposite order
            (a - tb).abs().max((b - ta).abs())
        })
        .fold(0.0, f64::max);
    let report = VerificationReport::compare(VJ, gs, c, Quantity::Spectrum(predicted), Quantity::Spectrum(computed), tol.compare)
        .note(format!("t-form vs closed form max deviation {t_dev:e}"));
    Ok(if t_dev > 1e-10 { report.fail("t-form disagrees with the closed form beyond 1e-10") } else { report })
}

pub(crate) fn verify_edge_join(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    let (g1, g2) = (&gs[0], &gs[1]);
    let (mut c, _, _) = join_checks(EJ, g1, g2);
    c.check("G2 nonempty", g2.n() > 0);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(EJ, gs, c));
    }
    let predicted = thm_edge_join_spectrum(g1, g2, tol)?.values();
    let computed = ecc_values(&central_edge_join(g1, g2)?.result, tol)?;
    Ok(VerificationReport::compare(EJ, gs, c, Quantity::Spectrum(predicted), Quantity::Spectrum(computed), tol.compare))
}

pub(crate) fn verify_vertex_edge_join(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    let (g1, g2, g3) = (&gs[0], &gs[1], &gs[2]);
    let (mut c, _) = vej_checks(g1, g2, g3);
    c.check("G2 nonempty", g2.n() > 0);
    c.check("G3 nonempty", g3.n() > 0);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(VEJ, gs, c));
    }
    let predicted = thm_vertex_edge_join_spectrum(g1, g2, g3, tol)?.values();
    let computed = ecc_values(&central_vertex_edge_join(g1, g2, g3)?.result, tol)?;
    let (used, printed) = vertex_edge_zero_multiplicity(g2.n(), g3.n());
    Ok(VerificationReport::compare(VEJ, gs, c, Quantity::Spectrum(predicted), Quantity::Spectrum(computed), tol.compare)
        .note(format!("zero multiplicity p2+p3-2 = {used} used; printed p2-p3-2 = {printed}")))
}

// ------------------------------------------------------- irreducibility

fn verify_always_irreducible(
    id: &'static str,
    gs: &[Graph],
    need_triangle_free: bool,
    build: impl Fn() -> Result<Graph>,
) -> Result<VerificationReport> {
    let mut c = Checks::new(id);
    c.check("G1 has an edge", gs[0].edge_count() > 0);
    for (k, g) in gs.iter().enumerate().skip(1) {
        c.check(format!("G{} nonempty", k + 1), g.n() > 0);
    }
    if need_triangle_free {
        c.check("G1 triangle-free", is_triangle_free(&gs[0]));
    }
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(id, gs, c));
    }
    let computed = is_irreducible(&build()?)?;
    let report = VerificationReport::compare(id, gs, c, Quantity::Flag(true), Quantity::Flag(computed), 0.0);
    Ok(if computed { report } else { report.note("counterexample to the unconditional irreducibility statement") })
}

pub(crate) fn verify_vertex_join_irreducible(gs: &[Graph], _tol: &Tolerances) -> Result<VerificationReport> {
    verify_always_irreducible(VJ_IRREDUCIBLE, gs, false, || Ok(central_vertex_join(&gs[0], &gs[1])?.result))
}

pub(crate) fn verify_edge_join_irreducible(gs: &[Graph], _tol: &Tolerances) -> Result<VerificationReport> {
    verify_always_irreducible(EJ_IRREDUCIBLE, gs, false, || Ok(central_edge_join(&gs[0], &gs[1])?.result))
}

pub(crate) fn verify_vertex_edge_join_irreducible(gs: &[Graph], _tol: &Tolerances) -> Result<VerificationReport> {
    verify_always_irreducible(VEJ_IRREDUCIBLE, gs, true, || {
        Ok(central_vertex_edge_join(&gs[0], &gs[1], &gs[2])?.result)
    })
}

// ------------------------------------------------------- constructions

fn adjacency_cospectral(a: &Graph, b: &Graph, tol: &Tolerances) -> Result<bool> {
    if a.n() != b.n() {
        return Ok(false);
    }
    Ok(spectral::max_deviation(&adjacency_values(a, tol)?, &adjacency_values(b, tol)?)? <= tol.compare)
}

fn ecc_cospectral(a: &Graph, b: &Graph, tol: &Tolerances) -> Result<(bool, f64, f64)> {
    let sa = eccentricity_matrix(a)?.spectrum(tol.eig)?;
    let sb = eccentricity_matrix(b)?.spectrum(tol.eig)?;
    let same = spectral::spectra_equal(&sa, &sb, tol.compare).unwrap_or(false);
    Ok((same, spectral::energy(&sa), spectral::energy(&sb)))
}

fn verify_join_cospectral(
    id: &'static str,
    gs: &[Graph],
    tol: &Tolerances,
    join: fn(&Graph, &Graph) -> Result<crate::ops::LabeledProduct>,
) -> Result<VerificationReport> {
    let (g, s1, s2) = (&gs[0], &gs[1], &gs[2]);
    let mut c = Checks::new(id);
    check_base(&mut c, g, true);
    c.check("S1 nonempty", s1.n() > 0);
    c.check("S1, S2 cospectral", adjacency_cospectral(s1, s2, tol)?);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(id, gs, c));
    }
    let (same, e1, e2) = ecc_cospectral(&join(g, s1)?.result, &join(g, s2)?.result, tol)?;
    let mut report = VerificationReport::compare(id, gs, c, Quantity::Flag(true), Quantity::Flag(same), 0.0)
        .note(format!("energies {e1:.12} and {e2:.12}"));
    if is_regular(s1).is_none() {
        report = report.note("S1, S2 are not regular; the spectral theorems behind this construction assume regular operands");
    }
    Ok(report)
}

pub(crate) fn verify_vertex_join_cospectral(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    verify_join_cospectral(VJ_COSPECTRAL, gs, tol, central_vertex_join)
}

pub(crate) fn verify_edge_join_cospectral(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    verify_join_cospectral(EJ_COSPECTRAL, gs, tol, central_edge_join)
}

/// Operands `G₁, G₂, G₃, G₄, G₅`: compares `C[G₁] ∨ (G₂ⱽ ∪ G₃ᴱ)` with `C[G₁] ∨ (G₄ⱽ ∪ G₅ᴱ)`.
pub(crate) fn verify_vertex_edge_join_cospectral(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    let mut c = Checks::new(VEJ_COSPECTRAL);
    check_base(&mut c, &gs[0], true);
    let (p, r) = (gs[1].n(), is_regular(&gs[1]));
    c.check("G2 nonempty", p > 0);
    c.check(
        "G2..G5 regular of one common degree on one common order",
        r.is_some() && gs[1..].iter().all(|g| g.n() == p && is_regular(g) == r),
    );
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(VEJ_COSPECTRAL, gs, c));
    }
    let a = central_vertex_edge_join(&gs[0], &gs[1], &gs[2])?.result;
    let b = central_vertex_edge_join(&gs[0], &gs[3], &gs[4])?.result;
    let (same, e1, e2) = ecc_cospectral(&a, &b, tol)?;
    Ok(VerificationReport::compare(VEJ_COSPECTRAL, gs, c, Quantity::Flag(true), Quantity::Flag(same), 0.0)
        .note(format!("energies {e1:.12} and {e2:.12}")))
}

/// Operands `G, H₁, H₂` with cubic `H₁, H₂` on `2t ≥ 6` vertices: the joins of
/// `C[G]` with `L²(H₁)` and `L²(H₂)` are ε-equienergetic but not ε-cospectral.
pub(crate) fn verify_l2_equienergetic(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    let (g, h1, h2) = (&gs[0], &gs[1], &gs[2]);
    let mut c = Checks::new(L2_EQUIENERGETIC);
    check_base(&mut c, g, true);
    c.check("H1, H2 cubic", is_regular(h1) == Some(3) && is_regular(h2) == Some(3));
    c.check("H1, H2 of one order 2t, t >= 3", h1.n() == h2.n() && h1.n() >= 6);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(L2_EQUIENERGETIC, gs, c));
    }
    c.check("H1, H2 not cospectral", !adjacency_cospectral(h1, h2, tol)?);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(L2_EQUIENERGETIC, gs, c));
    }
    let l1 = h1.line_graph()?.line_graph()?;
    let l2 = h2.line_graph()?.line_graph()?;
    let mut notes = Vec::new();
    let mut ok = true;
    for (label, join) in [
        ("vertex join", central_vertex_join as fn(&Graph, &Graph) -> Result<crate::ops::LabeledProduct>),
        ("edge join", central_edge_join),
    ] {
        let (same, e1, e2) = ecc_cospectral(&join(g, &l1)?.result, &join(g, &l2)?.result, tol)?;
        let equi = (e1 - e2).abs() <= tol.compare;
        ok &= equi && !same;
        notes.push(format!("{label}: energies {e1:.12} and {e2:.12}, cospectral {same}"));
    }
    let mut report = VerificationReport::compare(L2_EQUIENERGETIC, gs, c, Quantity::Flag(true), Quantity::Flag(ok), 0.0);
    for n in notes {
        report = report.note(n);
    }
    Ok(report)
}
