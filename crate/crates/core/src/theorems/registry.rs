//! Theorem table and the verification driver.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{generate, Graph, GraphKind};

use super::bounds::{self, bounds_suite};
use super::{central, joins, lemmas, line, out_of_scope, Checks, Status, Tolerances, VerificationReport};

pub type Verifier = fn(&[Graph], &Tolerances) -> Result<VerificationReport>;

#[derive(Clone, Copy)]
pub struct TheoremInfo {
    pub id: &'static str,
    /// Number of operand graphs.
    pub arity: usize,
    pub summary: &'static str,
    pub run: Verifier,
}

impl std::fmt::Debug for TheoremInfo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TheoremInfo").field("id", &self.id).field("arity", &self.arity).finish()
    }
}

fn verify_bound(theorem: &'static str, bound: &'static str, gs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    let suite = bounds_suite(&gs[0], tol)?;
    let mut c = Checks::new(theorem);
    if let Some((_, why)) = suite.skipped.iter().find(|(id, _)| *id == bound) {
        c.check(why.clone(), false);
        return Ok(VerificationReport::inapplicable(theorem, gs, c));
    }
    let report = suite.get(bound).cloned().expect("every bound is either evaluated or skipped");
    c.check("bound hypotheses", true);
    Ok(report.into_verification(theorem, gs, c))
}

macro_rules! bound_entry {
    ($id:literal, $bound:path, $summary:literal) => {
        TheoremInfo { id: $id, arity: 1, summary: $summary, run: |gs, tol| verify_bound($id, $bound, gs, tol) }
    };
}

const fn entry(id: &'static str, arity: usize, summary: &'static str, run: Verifier) -> TheoremInfo {
    TheoremInfo { id, arity, summary, run }
}

static REGISTRY: &[TheoremInfo] = &[
    entry(lemmas::INCIDENCE, 1, "incidence identities of a regular graph", lemmas::verify_incidence),
    entry(lemmas::LINE_SPECTRUM, 1, "adjacency spectrum of the line graph of a regular graph", lemmas::verify_line_spectrum),
    entry(lemmas::ECCENTRIC_IRREDUCIBLE, 1, "eps(G) irreducible iff the eccentric graph is connected", lemmas::verify_eccentric_irreducible),
    entry(lemmas::LINE_DIAMETER_ONE, 1, "diam L(G) = 1 iff G is K3 or a star", lemmas::verify_line_diameter_one),
    entry(lemmas::LINE_DIAMETER_F, 1, "no induced F1, F2, F3 iff diam L(G) <= 2", lemmas::verify_line_diameter_f),
    entry(central::DIAM2, 1, "eps-spectrum of a regular diameter-2 graph", central::verify_diam2),
    entry(lemmas::DAGGER_COMPLEMENT, 1, "property (dagger) gives a diameter-2 complement", lemmas::verify_dagger_complement),
    entry(central::CENTRAL_ADJ, 1, "adjacency spectrum of C[G]", central::verify_central_adjacency),
    bound_entry!("radius-lower", bounds::B, "rho >= 2W/p, equality iff eps-regular"),
    entry(central::CENTRAL, 1, "eps-spectrum of C[G]", central::verify_central),
    entry(central::CENTRAL_RADIUS, 1, "eps-spectral radius of C[G]", central::verify_central_radius),
    entry(central::CENTRAL_INERTIA, 1, "inertia of eps(C[G])", central::verify_central_inertia),
    entry(central::CENTRAL_ENERGY, 1, "eps-energy of C[G]", central::verify_central_energy),
    entry(lemmas::CENTRAL_DAGGER, 1, "C[G] has property (dagger)", lemmas::verify_central_dagger),
    entry(central::COMPLEMENT_INERTIA, 1, "inertia of the complement of C[G]", central::verify_complement_inertia),
    entry(central::COMPLEMENT_ENERGY, 1, "eps-energy of the complement of C[G]", central::verify_complement_energy),
    entry(central::CENTRAL_IRREDUCIBLE, 1, "irreducibility of eps(C[G])", central::verify_central_irreducible),
    entry(joins::VJ, 2, "eps-spectrum of the central vertex join", joins::verify_vertex_join),
    entry(joins::VJ_WIENER, 2, "eps-Wiener index of the central vertex join", joins::verify_vertex_join_wiener),
    entry(joins::VJ_RADIUS, 2, "strict radius bound for the central vertex join", joins::verify_vertex_join_radius),
    entry(joins::VJ_IRREDUCIBLE, 2, "irreducibility of the central vertex join", joins::verify_vertex_join_irreducible),
    entry(joins::EJ, 2, "eps-spectrum of the central edge join", joins::verify_edge_join),
    entry(joins::EJ_WIENER, 2, "eps-Wiener index of the central edge join", joins::verify_edge_join_wiener),
    entry(joins::EJ_RADIUS, 2, "strict radius bound for the central edge join", joins::verify_edge_join_radius),
    entry(joins::EJ_IRREDUCIBLE, 2, "irreducibility of the central edge join", joins::verify_edge_join_irreducible),
    entry(joins::VJ_COSPECTRAL, 3, "cospectral seeds give eps-cospectral vertex joins", joins::verify_vertex_join_cospectral),
    entry(joins::EJ_COSPECTRAL, 3, "cospectral seeds give eps-cospectral edge joins", joins::verify_edge_join_cospectral),
    entry(joins::L2_EQUIENERGETIC, 3, "joins with L(L(H)) are eps-equienergetic, not eps-cospectral", joins::verify_l2_equienergetic),
    entry(joins::VEJ, 3, "eps-spectrum of the central vertex-edge join", joins::verify_vertex_edge_join),
    entry(joins::VEJ_COSPECTRAL, 5, "equal-parameter operands give eps-cospectral vertex-edge joins", joins::verify_vertex_edge_join_cospectral),
    entry(joins::VEJ_IRREDUCIBLE, 3, "irreducibility of the central vertex-edge join", joins::verify_vertex_edge_join_irreducible),
    entry(line::LINE_ENERGY, 1, "eps-energy of L(G)", line::verify_line_energy),
    entry(line::LINE_COSPECTRAL, 2, "G1, G2 cospectral iff L(G1), L(G2) eps-cospectral", line::verify_line_cospectral),
    entry(line::LINE_EQUIENERGETIC, 2, "non-cospectral G1, G2 give eps-equienergetic line graphs", line::verify_line_equienergetic),
    entry(line::COMPLEMENT_LINE_ENERGY, 1, "eps-energy of the complement of L(G)", line::verify_complement_line_energy),
    bound_entry!("bound-diam2-wiener", bounds::A, "W for diameter-2 graphs"),
    bound_entry!("bound-complement-wiener", bounds::C, "W(complement) = 2q under property (dagger)"),
    bound_entry!("bound-girth5-radius", bounds::D, "rho(complement) >= 4q/p for girth >= 5"),
    bound_entry!("bound-wiener-lower", bounds::E, "W >= total eccentricity / 2"),
    bound_entry!("bound-wiener-upper", bounds::F, "W <= ((p-1) total eccentricity - zeta)/2"),
    bound_entry!("bound-nordhaus-gaddum", bounds::G_SUM, "W(G) + W(complement), summed right side"),
    bound_entry!("bound-nordhaus-gaddum-printed", bounds::G_PRINTED, "W(G) + W(complement), printed right side"),
    bound_entry!("bound-tree", bounds::H, "tree upper bound"),
    bound_entry!("bound-energy", bounds::I, "energy upper bound for self-centered graphs"),
];

/// Every registered theorem, in a fixed order.
pub fn registry() -> &'static [TheoremInfo] {
    REGISTRY
}

pub fn lookup(id: &str) -> Option<&'static TheoremInfo> {
    REGISTRY.iter().find(|t| t.id == id)
}

/// Runs one theorem on explicit operands. Instances outside the theorem's
/// scope come back as inapplicable reports rather than errors.
pub fn verify(id: &str, graphs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    let info = lookup(id).ok_or_else(|| Error::BadParams(format!("unknown theorem {id:?}")))?;
    if graphs.len() != info.arity {
        return Err(Error::BadParams(format!("{} takes {} graph(s), got {}", info.id, info.arity, graphs.len())));
    }
    run(info, graphs, tol)
}

fn run(info: &TheoremInfo, graphs: &[Graph], tol: &Tolerances) -> Result<VerificationReport> {
    match (info.run)(graphs, tol) {
        Err(e) if out_of_scope(&e) => {
            let mut c = Checks::new(info.id);
            c.check(e.to_string(), false);
            Ok(VerificationReport::inapplicable(info.id, graphs, c))
        }
        other => other,
    }
}

fn small(kind: GraphKind) -> Graph {
    generate(kind).expect("fixed generator")
}

/// Second operands paired with each corpus graph for theorems of arity 2 and 3.
fn partners(arity: usize) -> Vec<Vec<Graph>> {
    use GraphKind::{Complete, Cycle};
    match arity {
        1 => vec![vec![]],
        2 => vec![vec![small(Complete(1))], vec![small(Complete(2))], vec![small(Cycle(3))], vec![small(Cycle(4))]],
        3 => vec![
            vec![small(Complete(1)), small(Complete(1))],
            vec![small(Complete(2)), small(Complete(2))],
            vec![small(Cycle(3)), small(Complete(2))],
        ],
        _ => vec![],
    }
}

/// Runs the selected theorems on every corpus graph (as first operand, with
/// small fixed partners for higher arities). Work is spread over the rayon
/// pool; the output order is theorem, then graph, then partner. Solver
/// failures become failed reports carrying the error.
pub fn verify_corpus(graphs: &[Graph], theorems: &[&TheoremInfo], tol: &Tolerances) -> Vec<VerificationReport> {
    let mut instances = Vec::new();
    for info in theorems {
        let extra = partners(info.arity);
        for g in graphs {
            for rest in &extra {
                let mut ops = Vec::with_capacity(info.arity);
                ops.push(g.clone());
                ops.extend(rest.iter().cloned());
                instances.push((*info, ops));
            }
        }
    }
    instances
        .par_iter()
        .map(|(info, ops)| {
            run(info, ops, tol).unwrap_or_else(|e| {
                let c = Checks::new(info.id);
                let mut r = VerificationReport::inapplicable(info.id, ops, c);
                r.status = Status::Fail;
                r.notes.push(format!("error: {e}"));
                r
            })
        })
        .collect()
}

/// Per-theorem counts over a batch of reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremSummary {
    pub theorem: &'static str,
    pub instances: usize,
    pub applicable: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Counts per theorem, in order of first appearance.
pub fn summarize(reports: &[VerificationReport]) -> Vec<TheoremSummary> {
    let mut out: Vec<TheoremSummary> = Vec::new();
    for r in reports {
        let idx = match out.iter().position(|s| s.theorem == r.theorem) {
            Some(i) => i,
            None => {
                out.push(TheoremSummary { theorem: r.theorem, instances: 0, applicable: 0, passed: 0, failed: 0 });
                out.len() - 1
            }
        };
        let s = &mut out[idx];
        s.instances += 1;
        match r.status {
            Status::Pass => {
                s.applicable += 1;
                s.passed += 1;
            }
            Status::Fail => {
                s.applicable += 1;
                s.failed += 1;
            }
            Status::Inapplicable => {}
        }
    }
    out
}
