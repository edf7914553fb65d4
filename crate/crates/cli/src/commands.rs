use clap::ValueEnum;
use rayon::prelude::*;
use serde_json::{json, Value};

use ecc_spectra::ecc::{ecc_wiener, eccentricity_matrix, is_ecc_regular, is_irreducible};
use ecc_spectra::graph::enumerate::{all_graphs, connected_graphs, regular_graphs, trees};
use ecc_spectra::graph::{eccentric_connectivity_index, emit_graph6, total_eccentricity};
use ecc_spectra::ops::{self, LabeledProduct};
use ecc_spectra::spectral::{self, MAX_SWEEPS};
use ecc_spectra::theorems::{
    bounds_suite, registry, search_cospectral, summarize, verify, verify_corpus, BoundReport, Quantity, SearchMode,
    Status, TheoremInfo, Tolerances, VerificationReport,
};
use ecc_spectra::{Error, Graph, Result};

use crate::input::Inputs;
use crate::output::{float, floats, inertia, ratio, Output};
use crate::Failure;

pub fn compute(inputs: &Inputs, tol: &Tolerances) -> Result<Output, Failure> {
    let records = inputs.graphs.par_iter().map(|g| compute_one(g, tol)).collect::<Result<Vec<_>>>()?;
    Ok(Output { records, ..Output::default() })
}

fn compute_one(g: &Graph, tol: &Tolerances) -> Result<Value> {
    let m = eccentricity_matrix(g)?;
    let s = spectral::eig_sym_with(&m.to_sym(), tol.eig, tol.group, MAX_SWEEPS)?;
    let zero = tol.zero.unwrap_or_else(|| spectral::default_zero_tol(&s));
    let ecc = m.eccentricities();
    let row_sum = is_ecc_regular(&m);
    let groups: Vec<Value> = s.groups.iter().map(|&(v, k)| json!({ "value": float(v), "multiplicity": k })).collect();
    Ok(json!({
        "graph": g.descriptor(),
        "graph6": emit_graph6(g),
        "order": g.n(),
        "size": g.edge_count(),
        "matrix": m.to_rows(),
        "spectrum": floats(&s.eigenvalues),
        "groups": groups,
        "energy": float(spectral::energy(&s)),
        "spectral_radius": float(spectral::spectral_radius(&s)),
        "inertia": inertia(spectral::inertia(&s, zero)),
        "wiener": ratio(ecc_wiener(&m)),
        "ecc_regular": row_sum.is_some(),
        "ecc_row_sum": row_sum,
        "irreducible": is_irreducible(g)?,
        "eccentricities": ecc.e,
        "radius": ecc.radius,
        "diameter": ecc.diameter,
        "total_eccentricity": total_eccentricity(g)?,
        "eccentric_connectivity": eccentric_connectivity_index(g)?,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpName {
    /// Central graph C[G].
    Central,
    /// Central vertex join of two graphs.
    Cvj,
    /// Central edge join of two graphs.
    Cej,
    /// Central vertex-edge join of three graphs.
    Cvej,
    /// Line graph.
    Line,
    /// Complement.
    Complement,
    /// Eccentric graph.
    Eccentric,
}

impl OpName {
    fn arity(self) -> usize {
        match self {
            OpName::Cvj | OpName::Cej => 2,
            OpName::Cvej => 3,
            _ => 1,
        }
    }

    fn name(self) -> &'static str {
        match self {
            OpName::Central => "central",
            OpName::Cvj => "cvj",
            OpName::Cej => "cej",
            OpName::Cvej => "cvej",
            OpName::Line => "line",
            OpName::Complement => "complement",
            OpName::Eccentric => "eccentric",
        }
    }
}

pub fn op(name: OpName, inputs: &Inputs) -> Result<Output, Failure> {
    let gs = &inputs.graphs;
    if gs.len() != name.arity() {
        return Err(Failure::op(format!("{} takes {} operand(s), got {}", name.name(), name.arity(), gs.len())));
    }
    let plain = |g: Graph| LabeledProduct { result: g, block_offsets: Vec::new() };
    let product = match name {
        OpName::Central => ops::central(&gs[0]),
        OpName::Cvj => ops::central_vertex_join(&gs[0], &gs[1]),
        OpName::Cej => ops::central_edge_join(&gs[0], &gs[1]),
        OpName::Cvej => ops::central_vertex_edge_join(&gs[0], &gs[1], &gs[2]),
        OpName::Line => gs[0].line_graph().map(plain),
        OpName::Complement => Ok(plain(gs[0].complement())),
        OpName::Eccentric => ops::eccentric_graph(&gs[0]).map(plain),
    }
    .map_err(|e| match e {
        Error::Disconnected { .. } | Error::NoConvergence { .. } => Failure::from(e),
        other => Failure::op(other.to_string()),
    })?;
    let blocks: Vec<Value> = product
        .block_offsets
        .iter()
        .map(|b| json!({ "role": b.role.to_string(), "start": b.start, "len": b.len }))
        .collect();
    let g = &product.result;
    let record = json!({
        "op": name.name(),
        "operands": gs.iter().map(Graph::descriptor).collect::<Vec<_>>(),
        "graph6": emit_graph6(g),
        "order": g.n(),
        "size": g.edge_count(),
        "blocks": blocks,
    });
    Ok(Output { records: vec![record], ..Output::default() })
}

fn quantity(q: &Quantity) -> Value {
    match q {
        Quantity::Spectrum(v) => floats(v),
        Quantity::Real(x) => float(*x),
        Quantity::Exact(r) => ratio(*r),
        Quantity::Inertia(i) => inertia(*i),
        Quantity::Flag(b) => Value::from(*b),
    }
}

fn report(r: &VerificationReport) -> Value {
    let hypotheses: Vec<Value> = r.hypotheses.iter().map(|h| json!({ "name": h.name, "held": h.held })).collect();
    json!({
        "theorem": r.theorem,
        "graphs": r.graphs,
        "status": r.status.as_str(),
        "predicted": r.predicted.as_ref().map(quantity),
        "computed": r.computed.as_ref().map(quantity),
        "max_dev": r.max_dev.map(float),
        "tol": float(r.tol),
        "hypotheses": hypotheses,
        "notes": r.notes,
    })
}

/// Reports plus a per-theorem summary; `failed` counts failing instances.
pub fn verify_cmd(selector: &str, inputs: &Inputs, tol: &Tolerances) -> Result<(Output, usize), Failure> {
    let theorems: Vec<&TheoremInfo> = if selector == "all" {
        registry().iter().collect()
    } else {
        let info = ecc_spectra::theorems::lookup(selector).ok_or_else(|| {
            Failure::parse(format!("unknown theorem {selector:?}; known: {}", known_theorems()))
        })?;
        vec![info]
    };
    let reports = match theorems.as_slice() {
        [one] if !inputs.from_corpus && inputs.graphs.len() == one.arity => vec![verify(one.id, &inputs.graphs, tol)?],
        _ => verify_corpus(&inputs.graphs, &theorems, tol),
    };
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    let per_theorem: Vec<Value> = summarize(&reports)
        .iter()
        .map(|s| {
            json!({
                "theorem": s.theorem,
                "instances": s.instances,
                "applicable": s.applicable,
                "passed": s.passed,
                "failed": s.failed,
            })
        })
        .collect();
    let records = reports.iter().map(report).collect();
    Ok((Output { records, summary: per_theorem, ..Output::default() }, failed))
}

fn known_theorems() -> String {
    registry().iter().map(|t| t.id).collect::<Vec<_>>().join(", ")
}

fn bound_row(graph: &str, b: &BoundReport) -> Value {
    let number = |n: ecc_spectra::theorems::Number| match n {
        ecc_spectra::theorems::Number::Exact(r) => ratio(r),
        ecc_spectra::theorems::Number::Approx(x) => float(x),
    };
    json!({
        "graph": graph,
        "bound": b.id,
        "direction": b.direction.as_str(),
        "lhs": number(b.lhs),
        "rhs": number(b.rhs),
        "slack": number(b.slack),
        "holds": b.holds,
        "equality": b.equality,
        "equality_predicate": b.equality_predicate,
        "notes": b.notes,
    })
}

pub fn bounds(inputs: &Inputs, tol: &Tolerances) -> Result<Output, Failure> {
    let per_graph = inputs
        .graphs
        .par_iter()
        .map(|g| -> Result<Vec<Value>> {
            let name = g.descriptor();
            let suite = bounds_suite(g, tol)?;
            let mut rows: Vec<Value> = suite.reports.iter().map(|b| bound_row(&name, b)).collect();
            rows.extend(suite.skipped.iter().map(|(id, why)| json!({ "graph": name, "bound": id, "skipped": why })));
            Ok(rows)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Output { records: per_graph.into_iter().flatten().collect(), ..Output::default() })
}

pub fn search(mode: SearchMode, inputs: &Inputs, tol: &Tolerances) -> Result<Output, Failure> {
    let pairs = search_cospectral(&inputs.graphs, mode, tol)?;
    let records: Vec<Value> = pairs
        .iter()
        .map(|p| {
            json!({
                "left": p.left,
                "right": p.right,
                "left_graph": p.left_graph,
                "right_graph": p.right_graph,
                "class": p.class.as_str(),
                "energy": float(p.energy),
                "energy_gap": float(p.energy_gap),
                "spectral_dev": float(p.spectral_dev),
            })
        })
        .collect();
    let count = |c: &str| records.iter().filter(|r| r["class"] == c).count();
    let summary = json!({
        "mode": mode.as_str(),
        "inputs": inputs.graphs.len(),
        "pairs": records.len(),
        "eps-cospectral": count("eps-cospectral"),
        "eps-equienergetic-noncospectral": count("eps-equienergetic-noncospectral"),
    });
    Ok(Output { records, summary: vec![summary], ..Output::default() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Every graph on n vertices.
    All,
    /// Connected graphs on n vertices.
    Connected,
    /// Trees on n vertices.
    Trees,
    /// Connected r-regular graphs on n vertices.
    Regular,
}

pub fn corpus(family: Family, n: usize, degree: Option<usize>) -> Result<Output, Failure> {
    let graphs = match (family, degree) {
        (Family::Regular, Some(r)) => regular_graphs(n, r, true)?,
        (Family::Regular, None) => return Err(Failure::parse("regular corpus needs a degree")),
        (_, Some(_)) => return Err(Failure::parse("only the regular corpus takes a degree")),
        (Family::All, None) => all_graphs(n)?,
        (Family::Connected, None) => connected_graphs(n)?,
        (Family::Trees, None) => trees(n)?,
    };
    Ok(Output { lines: graphs.iter().map(emit_graph6).collect(), ..Output::default() })
}
