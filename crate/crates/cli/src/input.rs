//! Graph sources: generators, graph6 files, edge lists and graph6 corpora.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{ArgAction, ArgMatches, Args};

use ecc_spectra::graph::{generate, parse_edge_list, parse_graph6_lines, GraphKind};
use ecc_spectra::{Error, Graph};

use crate::Failure;

#[derive(Debug, Clone, Default, Args)]
pub struct InputArgs {
    /// Generator and its parameters, e.g. `--gen cycle 4`; repeat for several operands.
    #[arg(long = "gen", value_names = ["NAME", "PARAMS"], num_args = 1.., action = ArgAction::Append,
          conflicts_with_all = ["graph6", "edges", "corpus"])]
    gen_tokens: Vec<String>,

    /// `--gen` occurrences, regrouped from the parsed matches.
    #[arg(skip)]
    pub generators: Vec<Vec<String>>,

    /// graph6 file (`-` for stdin); every graph in it unless `--index` is given.
    #[arg(long, value_name = "PATH", conflicts_with_all = ["edges", "corpus"])]
    pub graph6: Option<PathBuf>,

    /// 0-based position of the graph within the `--graph6` file.
    #[arg(long, value_name = "K", requires = "graph6")]
    pub index: Option<usize>,

    /// Edge-list file: a `p q` header followed by `q` lines `u v`.
    #[arg(long, value_name = "PATH", conflicts_with = "corpus")]
    pub edges: Option<PathBuf>,

    /// graph6 stream, one graph per line (`-` for stdin).
    #[arg(long, value_name = "PATH")]
    pub corpus: Option<PathBuf>,
}

pub struct Inputs {
    pub graphs: Vec<Graph>,
    pub from_corpus: bool,
}

fn read(path: &Path) -> Result<String, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        fs::read_to_string(path)
    };
    text.map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

impl InputArgs {
    /// Splits the flat `--gen` tokens back into one group per occurrence.
    pub fn regroup(&mut self, matches: &ArgMatches) {
        if let Ok(Some(occurrences)) = matches.try_get_occurrences::<String>("gen_tokens") {
            self.generators = occurrences.map(|o| o.cloned().collect()).collect();
        }
    }

    pub fn load(&self) -> Result<Inputs, Failure> {
        if let Some(path) = &self.corpus {
            return Ok(Inputs { graphs: parse_graph6_lines(&read(path)?)?, from_corpus: true });
        }
        let graphs = if let Some(path) = &self.graph6 {
            let all = parse_graph6_lines(&read(path)?)?;
            match self.index {
                None => all,
                Some(k) => {
                    let len = all.len();
                    let g = all.into_iter().nth(k).ok_or_else(|| {
                        Error::BadParams(format!("index {k} out of range: {} holds {len} graph(s)", path.display()))
                    })?;
                    vec![g]
                }
            }
        } else if let Some(path) = &self.edges {
            vec![parse_edge_list(&read(path)?)?]
        } else {
            self.generators
                .iter()
                .map(|spec| {
                    let params: Vec<&str> = spec[1..].iter().map(String::as_str).collect();
                    Ok(generate(GraphKind::parse(&spec[0], &params)?)?)
                })
                .collect::<Result<_, Failure>>()?
        };
        if graphs.is_empty() {
            return Err(Failure::parse("no input graph (use --gen, --graph6, --edges or --corpus)"));
        }
        Ok(Inputs { graphs, from_corpus: false })
    }
}
