use crate::cartan_graph::{cartan_matrix, CartanMatrix, Label, LabeledGraph};
use crate::coxeter_words::{
    shuffle, successor_map, ShuffledWord, SignConvention, SuccessorMap, WordError,
};

use super::completion::{add_frozen_completion_arrows, Completion};
use super::matrix::{exchange_matrix, ExchangeMatrix};
use super::quiver::Quiver;

/// Everything derived from one `(graph, shuffled word)` input.
#[derive(Debug, Clone)]
pub struct BfzQuiver {
    pub graph: LabeledGraph,
    pub cartan: CartanMatrix,
    pub word: ShuffledWord,
    pub successors: SuccessorMap,
    pub matrix: ExchangeMatrix,
    /// Arrows read off the exchange matrix only.
    pub core: Quiver,
    /// Core arrows plus frozen-completion arrows.
    pub completion: Completion,
}

impl BfzQuiver {
    pub fn build(
        graph: &LabeledGraph,
        u: &[Label],
        v: &[Label],
        pattern: Option<&[u8]>,
        convention: SignConvention,
    ) -> Result<Self, WordError> {
        let cartan = cartan_matrix(graph);
        let word = shuffle(u, v, pattern, &cartan, convention)?;
        Ok(Self::from_word(graph, word))
    }

    /// Builds from an already validated word.
    pub fn from_word(graph: &LabeledGraph, word: ShuffledWord) -> Self {
        let cartan = cartan_matrix(graph);
        let successors = successor_map(&word);
        let matrix = exchange_matrix(&word, &successors, &cartan);
        let core = matrix.to_quiver(&word, &successors);
        let completion = add_frozen_completion_arrows(&core, &word, &successors, &cartan);
        BfzQuiver {
            graph: graph.clone(),
            cartan,
            word,
            successors,
            matrix,
            core,
            completion,
        }
    }

    /// The completed quiver.
    pub fn quiver(&self) -> &Quiver {
        &self.completion.quiver
    }

    /// The factors `Q^{u,e}` and `Q^{e,v}` with the signs used in this word.
    pub fn gluing_factors(&self) -> (BfzQuiver, BfzQuiver) {
        let (bottom, top) = self.word.gluing_factors();
        (
            Self::from_word(&self.graph, bottom),
            Self::from_word(&self.graph, top),
        )
    }
}
