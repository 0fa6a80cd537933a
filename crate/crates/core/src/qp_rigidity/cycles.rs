use std::collections::BTreeSet;

use serde::Serialize;

use super::paths::{ArrowId, ArrowTable, Path};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Cycle {
    /// Least rotation of the cycle's arrow sequence.
    pub arrows: Vec<ArrowId>,
    /// No vertex is visited twice.
    pub simple: bool,
}

impl Cycle {
    pub fn path(&self) -> Path {
        Path(self.arrows.clone())
    }
}

/// Directed cycles of length `1..=max_len`, one per rotation class, ordered
/// by length then arrow ids.
pub fn enumerate_cycles(table: &ArrowTable, max_len: usize) -> Vec<Cycle> {
    let mut out = Vec::new();
    let mut stack: Vec<ArrowId> = Vec::new();
    for first in 0..table.len() {
        stack.clear();
        stack.push(first);
        extend(table, max_len, first, &mut stack, &mut out);
    }
    out.sort_by_key(|a| a.path());
    out
}

// Every arrow of a canonical rotation is at least its first arrow.
fn extend(
    table: &ArrowTable,
    max_len: usize,
    first: ArrowId,
    stack: &mut Vec<ArrowId>,
    out: &mut Vec<Cycle>,
) {
    let end = table.target(*stack.last().unwrap());
    if end == table.source(first) {
        let p = Path(stack.clone());
        if p.canonical_rotation() == p {
            let verts = table.path_vertices(stack);
            let simple = verts[..verts.len() - 1]
                .iter()
                .collect::<BTreeSet<_>>()
                .len()
                == stack.len();
            out.push(Cycle {
                arrows: stack.clone(),
                simple,
            });
        }
    }
    if stack.len() == max_len {
        return;
    }
    for &a in table.outgoing(end) {
        if a >= first {
            stack.push(a);
            extend(table, max_len, first, stack, out);
            stack.pop();
        }
    }
}
