//! The input document shared by every command.

use bfz_core::cartan_graph::{GraphSpec, Label, LabeledGraph};
use bfz_core::coxeter_words::{word_from_ints, SignConvention, WordError};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobOptions {
    #[serde(default)]
    pub sign_convention: Option<SignConvention>,
    #[serde(default)]
    pub exclude_boundary_derivatives: bool,
    #[serde(default)]
    pub no_frozen_arrows: bool,
    #[serde(default)]
    pub max_cycle_len: Option<usize>,
    #[serde(default)]
    pub trunc_degree: Option<usize>,
    #[serde(default)]
    pub max_trunc_degree: Option<usize>,
    #[serde(default)]
    pub formats: Vec<Format>,
}

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum,
)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Dot,
    Tikz,
}

/// `{"graph": {...}, "u": [...], "v": [...], "pattern": [...], "options": {...}}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub graph: GraphSpec,
    #[serde(default)]
    pub u: Vec<i64>,
    #[serde(default)]
    pub v: Vec<i64>,
    #[serde(default)]
    pub pattern: Option<Vec<i64>>,
    #[serde(default)]
    pub options: JobOptions,
}

/// A spec after validation of the graph, letters and pattern values.
/// Reducedness and pattern counts are checked when the word is built.
#[derive(Debug, Clone)]
pub struct Job {
    pub graph: LabeledGraph,
    pub u: Vec<Label>,
    pub v: Vec<Label>,
    pub pattern: Option<Vec<u8>>,
    pub options: JobOptions,
}

impl JobSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::invalid("spec.parse", e.to_string()))
    }

    pub fn validate(&self) -> Result<Job, CliError> {
        let graph = LabeledGraph::from_spec(&self.graph)?;
        let rank = graph.rank();
        let u = word_from_ints("u", &self.u, rank)?;
        let v = word_from_ints("v", &self.v, rank)?;
        let pattern = match &self.pattern {
            None => None,
            Some(p) => Some(
                p.iter()
                    .map(|&x| {
                        u8::try_from(x)
                            .ok()
                            .filter(|&b| b <= 1)
                            .ok_or(WordError::PatternValue(x))
                    })
                    .collect::<Result<Vec<u8>, _>>()?,
            ),
        };
        Ok(Job {
            graph,
            u,
            v,
            pattern,
            options: self.options.clone(),
        })
    }
}

impl Job {
    pub fn convention(&self) -> SignConvention {
        self.options.sign_convention.unwrap_or_default()
    }
}
