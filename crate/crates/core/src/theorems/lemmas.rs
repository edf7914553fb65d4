//! Structural lemmas: incidence identities, line-graph spectrum and diameter,
//! property (†), and irreducibility through the eccentric graph.

use crate::ecc::{eccentricity_matrix, is_irreducible, pattern_irreducible};
use crate::error::Result;
use crate::graph::{all_pairs_distances, eccentricities, has_induced_f, has_property_dagger, is_regular, Graph};
use crate::ops::central;
use crate::spectral::SymMatrix;

use super::{adjacency_values, Checks, Quantity, Tolerances, VerificationReport};

pub(crate) const INCIDENCE: &str = "incidence-identities";
pub(crate) const LINE_SPECTRUM: &str = "line-spectrum";
pub(crate) const LINE_DIAMETER_ONE: &str = "line-diameter-one";
pub(crate) const LINE_DIAMETER_F: &str = "line-diameter-f";
pub(crate) const DAGGER_COMPLEMENT: &str = "dagger-complement";
pub(crate) const CENTRAL_DAGGER: &str = "central-dagger";
pub(crate) const ECCENTRIC_IRREDUCIBLE: &str = "eccentric-irreducible";

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let (n, m, k) = (a.len(), b.first().map_or(0, Vec::len), b.len());
    (0..n).map(|i| (0..m).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect()).collect()
}

fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|j| a.iter().map(|row| row[j]).collect()).collect()
}

fn adjacency_plus_diag(g: &Graph, diag: impl Fn(usize) -> i64) -> Vec<Vec<i64>> {
    (0..g.n())
        .map(|i| (0..g.n()).map(|j| if i == j { diag(i) } else { i64::from(g.has_edge(i, j)) }).collect())
        .collect()
}

/// `RRᵀ = A + rI`, `RᵀR = B + 2I`, `JR = 2J`, `RJ = rJ`, from the dense incidence matrix.
pub(crate) fn verify_incidence(gs: &[Graph], _tol: &Tolerances) -> Result<VerificationReport> {
    let g = &gs[0];
    let mut c = Checks::new(INCIDENCE);
    let r = is_regular(g);
    c.check("regular", r.is_some());
    c.check("at least one edge", g.edge_count() > 0);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(INCIDENCE, gs, c));
    }
    let r = r.expect("checked") as i64;
    let rm = g.incidence().to_dense();
    let rt = transpose(&rm);
    let line = g.line_graph()?;
    let mut failures = Vec::new();
    if matmul(&rm, &rt) != adjacency_plus_diag(g, |_| r) {
        failures.push("R R^T != A + rI");
    }
    if matmul(&rt, &rm) != adjacency_plus_diag(&line, |_| 2) {
        failures.push("R^T R != B + 2I");
    }
    if rm.iter().any(|row| row.iter().sum::<i64>() != r) {
        failures.push("R J != rJ");
    }
    if rt.iter().any(|col| col.iter().sum::<i64>() != 2) {
        failures.push("J R != 2J");
    }
    let mut report =
        VerificationReport::compare(INCIDENCE, gs, c, Quantity::Flag(true), Quantity::Flag(failures.is_empty()), 0.0);
    for f in failures {
        report = report.note(f);
    }
    Ok(report)
}

/// Adjacency spectrum of `L(G)`: `λᵢ + r − 2` for every eigenvalue of `G`, and `−2` with multiplicity `q − p`.
pub(crate) fn verify_line_spectrum(gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    let g = &gs[0];
    let mut c = Checks::new(LINE_SPECTRUM);
    let r = is_regular(g);
    c.check("regular", r.is_some());
    c.check("q >= p", g.edge_count() >= g.n() && g.edge_count() > 0);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(LINE_SPECTRUM, gs, c));
    }
    let r = r.expect("checked") as f64;
    let mut predicted: Vec<f64> = adjacency_values(g, tol)?.into_iter().map(|l| l + r - 2.0).collect();
    predicted.extend(std::iter::repeat_n(-2.0, g.edge_count() - g.n()));
    predicted.sort_by(|a, b| b.total_cmp(a));
    let computed = tol.eig(&SymMatrix::adjacency(&g.line_graph()?))?.eigenvalues;
    Ok(VerificationReport::compare(
        LINE_SPECTRUM,
        gs,
        c,
        Quantity::Spectrum(predicted),
        Quantity::Spectrum(computed),
        tol.compare,
    ))
}

fn line_diameter(g: &Graph) -> Result<u32> {
    Ok(eccentricities(&all_pairs_distances(&g.line_graph()?)?).diameter)
}

fn is_triangle_or_star(g: &Graph) -> bool {
    let p = g.n();
    let triangle = p == 3 && g.edge_count() == 3;
    let star = g.edge_count() == p - 1 && (0..p).any(|v| g.degree(v) == p - 1);
    triangle || star
}

/// For connected `G` on at least three vertices, `diam L(G) = 1` iff `G` is `K₃` or a star.
pub(crate) fn verify_line_diameter_one(gs: &[Graph], _tol: &Tolerances) -> Result<VerificationReport> {
    let g = &gs[0];
    let mut c = Checks::new(LINE_DIAMETER_ONE);
    c.check("connected", g.is_connected());
    c.check("p >= 3", g.n() >= 3);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(LINE_DIAMETER_ONE, gs, c));
    }
    let predicted = is_triangle_or_star(g);
    let computed = line_diameter(g)? == 1;
    Ok(VerificationReport::compare(LINE_DIAMETER_ONE, gs, c, Quantity::Flag(predicted), Quantity::Flag(computed), 0.0))
}

/// For connected `G`, no induced `F₁, F₂, F₃` iff `diam L(G) ≤ 2`.
pub(crate) fn verify_line_diameter_f(gs: &[Graph], _tol: &Tolerances) -> Result<VerificationReport> {
    let g = &gs[0];
    let mut c = Checks::new(LINE_DIAMETER_F);
    c.check("connected", g.is_connected());
    c.check("at least one edge", g.edge_count() > 0);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(LINE_DIAMETER_F, gs, c));
    }
    let predicted = !has_induced_f(g)?;
    let computed = line_diameter(g)? <= 2;
    Ok(VerificationReport::compare(LINE_DIAMETER_F, gs, c, Quantity::Flag(predicted), Quantity::Flag(computed), 0.0))
}

fn complement_is_diameter_two(g: &Graph) -> bool {
    all_pairs_distances(&g.complement()).is_ok_and(|d| eccentricities(&d).diameter == 2)
}

/// Property (†) forces a connected complement of diameter 2.
pub(crate) fn verify_dagger_complement(gs: &[Graph], _tol: &Tolerances) -> Result<VerificationReport> {
    let g = &gs[0];
    let mut c = Checks::new(DAGGER_COMPLEMENT);
    c.check("property (dagger)", has_property_dagger(g));
    c.check("at least one edge", g.edge_count() > 0);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(DAGGER_COMPLEMENT, gs, c));
    }
    let computed = complement_is_diameter_two(g);
    Ok(VerificationReport::compare(DAGGER_COMPLEMENT, gs, c, Quantity::Flag(true), Quantity::Flag(computed), 0.0))
}

/// `C[G]` has property (†) for connected `G` on at least three vertices.
pub(crate) fn verify_central_dagger(gs: &[Graph], _tol: &Tolerances) -> Result<VerificationReport> {
    let g = &gs[0];
    let mut c = Checks::new(CENTRAL_DAGGER);
    c.check("connected", g.is_connected());
    c.check("p >= 3", g.n() >= 3);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(CENTRAL_DAGGER, gs, c));
    }
    let computed = has_property_dagger(&central(g)?.result);
    Ok(VerificationReport::compare(CENTRAL_DAGGER, gs, c, Quantity::Flag(true), Quantity::Flag(computed), 0.0))
}

/// `ε(G)` is irreducible iff the eccentric graph is connected; the matrix side
/// is decided from the reachability closure of the nonzero pattern.
pub(crate) fn verify_eccentric_irreducible(gs: &[Graph], _tol: &Tolerances) -> Result<VerificationReport> {
    let g = &gs[0];
    let mut c = Checks::new(ECCENTRIC_IRREDUCIBLE);
    c.check("connected", g.is_connected());
    c.check("p >= 2", g.n() >= 2);
    if !c.ok() {
        return Ok(VerificationReport::inapplicable(ECCENTRIC_IRREDUCIBLE, gs, c));
    }
    let predicted = is_irreducible(g)?;
    let computed = pattern_irreducible(&eccentricity_matrix(g)?);
    Ok(VerificationReport::compare(
        ECCENTRIC_IRREDUCIBLE,
        gs,
        c,
        Quantity::Flag(predicted),
        Quantity::Flag(computed),
        0.0,
    ))
}
