use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    /// Edgeless graph on `n` vertices.
    Empty(usize),
    CompleteBipartite(usize, usize),
    /// `K_{1,n-1}`: `n` vertices in total, vertex 0 is the center.
    Star(usize),
    Petersen,
    /// `K_{2k}` minus a perfect matching.
    CocktailParty(usize),
    /// Path on five vertices.
    F1,
    /// Triangle with a pendant path of length two.
    F2,
    /// Two triangles sharing a vertex.
    F3,
}

impl GraphKind {
    /// Parses a generator name and its numeric parameters, e.g. `("cycle", ["4"])`.
    pub fn parse(name: &str, params: &[&str]) -> Result<Self> {
        let nums: Vec<usize> = params
            .iter()
            .map(|p| p.parse::<usize>().map_err(|_| Error::BadParams(format!("not a count: {p:?}"))))
            .collect::<Result<_>>()?;
        let arity = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::BadParams(format!("{name} takes {k} parameter(s), got {}", nums.len())))
            }
        };
        let kind = match name.to_ascii_lowercase().replace('-', "_").as_str() {
            "cycle" => {
                arity(1)?;
                GraphKind::Cycle(nums[0])
            }
            "path" => {
                arity(1)?;
                GraphKind::Path(nums[0])
            }
            "complete" => {
                arity(1)?;
                GraphKind::Complete(nums[0])
            }
            "empty" | "edgeless" => {
                arity(1)?;
                GraphKind::Empty(nums[0])
            }
            "complete_bipartite" => {
                arity(2)?;
                GraphKind::CompleteBipartite(nums[0], nums[1])
            }
            "star" => {
                arity(1)?;
                GraphKind::Star(nums[0])
            }
            "petersen" => {
                arity(0)?;
                GraphKind::Petersen
            }
            "cocktail_party" | "cp" => {
                arity(1)?;
                GraphKind::CocktailParty(nums[0])
            }
            "f1" => {
                arity(0)?;
                GraphKind::F1
            }
            "f2" => {
                arity(0)?;
                GraphKind::F2
            }
            "f3" => {
                arity(0)?;
                GraphKind::F3
            }
            other => return Err(Error::BadParams(format!("unknown generator {other:?}"))),
        };
        Ok(kind)
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphKind::Cycle(n) => write!(f, "C{n}"),
            GraphKind::Path(n) => write!(f, "P{n}"),
            GraphKind::Complete(n) => write!(f, "K{n}"),
            GraphKind::Empty(n) => write!(f, "E{n}"),
            GraphKind::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            GraphKind::Star(n) => write!(f, "K1,{}", n.saturating_sub(1)),
            GraphKind::Petersen => f.write_str("Petersen"),
            GraphKind::CocktailParty(k) => write!(f, "CP({k})"),
            GraphKind::F1 => f.write_str("F1"),
            GraphKind::F2 => f.write_str("F2"),
            GraphKind::F3 => f.write_str("F3"),
        }
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    /// Whitespace-separated form, e.g. `"complete_bipartite 2 3"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split_whitespace();
        let name = parts.next().ok_or_else(|| Error::BadParams("empty generator spec".into()))?;
        let params: Vec<&str> = parts.collect();
        GraphKind::parse(name, &params)
    }
}

pub fn generate(kind: GraphKind) -> Result<Graph> {
    let bad = |msg: &str| Err(Error::BadParams(format!("{kind}: {msg}")));
    let g = match kind {
        GraphKind::Cycle(n) => {
            if n < 3 {
                return bad("cycle needs n >= 3");
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?
        }
        GraphKind::Path(n) => {
            if n < 1 {
                return bad("path needs n >= 1");
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?
        }
        GraphKind::Complete(n) => {
            if n < 1 {
                return bad("complete graph needs n >= 1");
            }
            Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))?
        }
        GraphKind::Empty(n) => {
            if n < 1 {
                return bad("needs n >= 1");
            }
            Graph::empty(n)
        }
        GraphKind::CompleteBipartite(a, b) => {
            if a < 1 || b < 1 {
                return bad("both sides need at least one vertex");
            }
            Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))?
        }
        GraphKind::Star(n) => {
            if n < 2 {
                return bad("star needs n >= 2");
            }
            Graph::from_edges(n, (1..n).map(|i| (0, i)))?
        }
        GraphKind::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            Graph::from_edges(10, outer.chain(spokes).chain(inner))?
        }
        GraphKind::CocktailParty(k) => {
            if k < 1 {
                return bad("cocktail party needs k >= 1");
            }
            // vertices 2i and 2i+1 form the removed matching
            let n = 2 * k;
            Graph::from_edges(
                n,
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| i / 2 != j / 2),
            )?
        }
        GraphKind::F1 => Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])?,
        GraphKind::F2 => Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])?,
        GraphKind::F3 => Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])?,
    };
    Ok(g.with_name(kind.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{girth, is_regular};

    #[test]
    fn cycle_four_edges() {
        let g = generate(GraphKind::Cycle(4)).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(g.name(), Some("C4"));
    }

    #[test]
    fn petersen_shape() {
        let g = generate(GraphKind::Petersen).unwrap();
        assert_eq!((g.n(), g.edge_count()), (10, 15));
        assert_eq!(is_regular(&g), Some(3));
        assert_eq!(girth(&g), 5);
    }

    #[test]
    fn cocktail_party_shape() {
        let g = generate(GraphKind::CocktailParty(3)).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 12));
        assert_eq!(is_regular(&g), Some(4));
    }

    #[test]
    fn f_graphs() {
        for (kind, q) in [(GraphKind::F1, 4), (GraphKind::F2, 5), (GraphKind::F3, 6)] {
            let g = generate(kind).unwrap();
            assert_eq!((g.n(), g.edge_count()), (5, q));
            assert!(g.is_connected());
        }
    }

    #[test]
    fn bad_params() {
        assert!(generate(GraphKind::Cycle(2)).is_err());
        assert!(generate(GraphKind::Star(1)).is_err());
        assert!(GraphKind::parse("cycle", &[]).is_err());
        assert!(GraphKind::parse("cycle", &["x"]).is_err());
        assert!(GraphKind::parse("nope", &[]).is_err());
    }

    #[test]
    fn parse_round_trip() {
        assert_eq!("complete_bipartite 2 3".parse::<GraphKind>().unwrap(), GraphKind::CompleteBipartite(2, 3));
        assert_eq!(GraphKind::parse("cp", &["4"]).unwrap(), GraphKind::CocktailParty(4));
        assert_eq!(GraphKind::parse("Petersen", &[]).unwrap(), GraphKind::Petersen);
    }
}
