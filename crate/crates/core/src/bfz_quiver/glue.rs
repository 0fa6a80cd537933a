use std::collections::BTreeMap;

use thiserror::Error;

use crate::coxeter_words::{Index, ShuffledWord};

use super::build::BfzQuiver;
use super::quiver::{Quiver, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GlueError {
    #[error("the two quivers are built over different graphs")]
    GraphMismatch,
}

impl GlueError {
    pub fn code(&self) -> &'static str {
        "glue.graph_mismatch"
    }
}

#[derive(Debug, Clone)]
pub struct GlueResult {
    /// The concatenated word the glued quiver is indexed by.
    pub word: ShuffledWord,
    pub quiver: Quiver,
    /// Where each vertex of the top quiver went. Bottom vertices keep their index.
    pub renaming: BTreeMap<Index, Index>,
    /// Top arrows that coincided with a bottom arrow.
    pub merged: Vec<(Index, Index)>,
    /// Pairs of opposite arrows that were deleted.
    pub cancelled: Vec<(Index, Index)>,
}

/// Stacks `top` on `bottom`: the bottom vertex of each string of `top` is
/// identified with the top vertex of the same string of `bottom`.
pub fn glue(bottom: &BfzQuiver, top: &BfzQuiver) -> Result<GlueResult, GlueError> {
    if bottom.graph != top.graph {
        return Err(GlueError::GraphMismatch);
    }
    let word = bottom.word.concat(&top.word);
    let offset = bottom.word.len() as Index;
    let bottom_strings = bottom.word.strings();
    let renaming: BTreeMap<Index, Index> = top
        .word
        .indices()
        .into_iter()
        .map(|k| {
            if k < 0 {
                (k, *bottom_strings[&((-k) as u32)].last().unwrap())
            } else {
                (k, offset + k)
            }
        })
        .collect();

    let strings = word.strings();
    let ends: Vec<Index> = strings
        .values()
        .flat_map(|s| [s[0], *s.last().unwrap()])
        .collect();
    let mut quiver = Quiver::new(word.indices().into_iter().map(|k| Vertex {
        k,
        letter: word.letter(k),
        frozen: ends.contains(&k),
    }));
    for (s, t) in bottom.quiver().arrow_list() {
        quiver.add_arrow(s, t);
    }
    let mut merged = Vec::new();
    let mut cancelled = Vec::new();
    for (s, t) in top.quiver().arrow_list() {
        let (s, t) = (renaming[&s], renaming[&t]);
        if quiver.remove_arrow(t, s) {
            cancelled.push((s, t));
        } else if quiver.has_arrow(s, t) {
            merged.push((s, t));
        } else {
            quiver.add_arrow(s, t);
        }
    }
    Ok(GlueResult {
        word,
        quiver,
        renaming,
        merged,
        cancelled,
    })
}
