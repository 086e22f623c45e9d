//! Turning the graph input flags into a [`Graph`].

use std::fs;
use std::path::PathBuf;

use clap::{ArgMatches, Args};
use matchdeck::{edgelist, graph6, Graph};

use crate::CliError;

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Simple graph in graph6 format
    #[arg(long, value_name = "CODE")]
    pub graph6: Option<String>,

    /// Edge-list file (`n <count>` header, one `u w` pair per line)
    #[arg(long, value_name = "FILE")]
    pub edges: Option<PathBuf>,

    /// Path on N vertices (repeatable with --union)
    #[arg(long, value_name = "N")]
    pub path: Vec<usize>,

    /// Cycle on N vertices, N >= 2 (repeatable with --union)
    #[arg(long, value_name = "N")]
    pub cycle: Vec<usize>,

    /// Disjoint union of all --path/--cycle graphs, in command-line order
    #[arg(long)]
    pub union: bool,

    /// Take the complement of the resulting graph (simple graphs only)
    #[arg(long)]
    pub complement: bool,
}

enum Family {
    Path(usize),
    Cycle(usize),
}

impl GraphInput {
    /// `matches` are the subcommand's own matches, used to recover the
    /// relative order of `--path` and `--cycle` occurrences.
    pub fn build(&self, matches: &ArgMatches) -> Result<Graph, CliError> {
        let generators = self.path.len() + self.cycle.len();
        let sources = self.graph6.is_some() as usize
            + self.edges.is_some() as usize
            + (generators > 0) as usize;
        if sources != 1 {
            return Err(CliError::Usage(
                "give exactly one of --graph6, --edges, or --path/--cycle".into(),
            ));
        }
        if generators > 1 && !self.union {
            return Err(CliError::Usage(
                "several --path/--cycle graphs need --union".into(),
            ));
        }
        if self.union && generators < 2 {
            return Err(CliError::Usage(
                "--union needs at least two --path/--cycle graphs".into(),
            ));
        }

        let g = if let Some(code) = &self.graph6 {
            graph6::decode(code)?
        } else if let Some(file) = &self.edges {
            let text = fs::read_to_string(file)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", file.display())))?;
            edgelist::parse(&text)?
        } else {
            let mut parts: Vec<(usize, Family)> = Vec::new();
            let indices = |id: &str| -> Vec<usize> {
                matches
                    .indices_of(id)
                    .map(|it| it.collect())
                    .unwrap_or_default()
            };
            parts.extend(indices("path").into_iter().zip(&self.path).map(|(i, &n)| (i, Family::Path(n))));
            parts.extend(indices("cycle").into_iter().zip(&self.cycle).map(|(i, &n)| (i, Family::Cycle(n))));
            parts.sort_by_key(|(i, _)| *i);
            let mut g = Graph::empty(0);
            for (_, f) in parts {
                let part = match f {
                    Family::Path(n) => Graph::path(n),
                    Family::Cycle(n) => Graph::cycle(n)?,
                };
                g = g.disjoint_union(&part);
            }
            g
        };
        if self.complement {
            Ok(g.complement()?)
        } else {
            Ok(g)
        }
    }
}
