use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::bfz_quiver::Quiver;
use crate::cartan_graph::{
    branch_decomposition, BranchDecomposition, Label, LabeledGraph, SheetId,
};
use crate::coxeter_words::Index;

/// Where a vertex sits on the cylinder: on the string over `string`, at
/// height `level`. The level is the vertex index, so the prefix vertices
/// `-r, ..., -1` sit below every shuffle vertex in that order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Placement {
    pub string: Label,
    pub level: Index,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ArrowClass {
    /// Both ends on one string.
    Vertical { string: Label },
    /// Ends on adjacent strings; lies on the sheet over the branch holding that edge.
    Inclined {
        edge: (Label, Label),
        sheet: SheetId,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("arrow {0} -> {1} joins strings that are not adjacent in the graph")]
    NonEdge(Index, Index),
    #[error("vertex {0} carries letter {1}, which is not a vertex of the graph")]
    UnknownString(Index, Label),
}

impl EmbedError {
    pub fn code(&self) -> &'static str {
        match self {
            EmbedError::NonEdge(..) => "embed.non_edge",
            EmbedError::UnknownString(..) => "embed.unknown_string",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Embedding {
    pub decomposition: BranchDecomposition,
    pub placement: BTreeMap<Index, Placement>,
    pub classes: BTreeMap<(Index, Index), ArrowClass>,
    /// Vertices on each string, bottom to top.
    pub strings: BTreeMap<Label, Vec<Index>>,
}

impl Embedding {
    pub fn sheets(&self) -> impl Iterator<Item = SheetId> + '_ {
        self.decomposition.branches.iter().map(|b| b.id())
    }

    /// Planar coordinates of `k` on the sheet of branch `branch`: position
    /// along the branch and level. `None` if `k` is off that sheet.
    pub fn point(&self, branch: usize, k: Index) -> Option<(i64, i64)> {
        let p = self.placement.get(&k)?;
        let x = self.decomposition.branches[branch].position(p.string)?;
        Some((x as i64, i64::from(p.level)))
    }

    /// Arrows drawn on the sheet of `branch`: its inclined arrows plus the
    /// vertical arrows of every string it contains.
    pub fn sheet_arrows(&self, branch: usize) -> Vec<(Index, Index)> {
        let b = &self.decomposition.branches[branch];
        self.classes
            .iter()
            .filter(|(_, c)| match c {
                ArrowClass::Vertical { string } => b.position(*string).is_some(),
                ArrowClass::Inclined { sheet, .. } => *sheet == b.id(),
            })
            .map(|(&a, _)| a)
            .collect()
    }

    pub fn branch_index(&self, sheet: SheetId) -> Option<usize> {
        self.decomposition
            .branches
            .iter()
            .position(|b| b.id() == sheet)
    }
}

pub fn embed(q: &Quiver, g: &LabeledGraph) -> Result<Embedding, EmbedError> {
    let decomposition = branch_decomposition(g);
    let mut placement = BTreeMap::new();
    for v in q.vertices() {
        if !g.contains(v.letter) {
            return Err(EmbedError::UnknownString(v.k, v.letter));
        }
        placement.insert(
            v.k,
            Placement {
                string: v.letter,
                level: v.k,
            },
        );
    }
    let mut classes = BTreeMap::new();
    for (s, t, _) in q.arrows() {
        let (a, b) = (q.letter(s), q.letter(t));
        let class = if a == b {
            ArrowClass::Vertical { string: a }
        } else if g.are_adjacent(a, b) {
            let branch = decomposition
                .branch_of_edge(a, b)
                .expect("every edge lies on a branch");
            ArrowClass::Inclined {
                edge: (a.min(b), a.max(b)),
                sheet: decomposition.branches[branch].id(),
            }
        } else {
            return Err(EmbedError::NonEdge(s, t));
        };
        classes.insert((s, t), class);
    }
    Ok(Embedding {
        decomposition,
        placement,
        classes,
        strings: q.strings(),
    })
}
