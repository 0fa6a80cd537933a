//! Splitting a cycle of the drawing along an interior arrow into a face and
//! a shorter cycle.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bfz_quiver::Quiver;
use crate::coxeter_words::Index;
use crate::cylinder_dimer::Face;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Split {
    /// The arrow joining two vertices of the cycle.
    pub edge: (Index, Index),
    /// Position of the face in the face list.
    pub face: usize,
    pub face_vertices: Vec<Index>,
    /// The shorter cycle: the other arc closed up by `edge`.
    pub remainder: Vec<Index>,
}

fn unordered(a: Index, b: Index) -> (Index, Index) {
    (a.min(b), a.max(b))
}

/// `cycle` is a closed trail given by its vertices in order (the closing
/// step back to the first vertex is implicit); consecutive vertices must be
/// joined by an arrow in either direction. Returns the first split found,
/// trying arrows in sorted order.
pub fn is_differentiable_cycle(cycle: &[Index], q: &Quiver, faces: &[Face]) -> Option<Split> {
    let n = cycle.len();
    if n < 3 {
        return None;
    }
    let cycle_edges: BTreeSet<(Index, Index)> = (0..n)
        .map(|i| unordered(cycle[i], cycle[(i + 1) % n]))
        .collect();
    let face_edges: Vec<BTreeSet<(Index, Index)>> = faces
        .iter()
        .map(|f| f.arrows.iter().map(|&(s, t)| unordered(s, t)).collect())
        .collect();
    for (s, t, _) in q.arrows() {
        if cycle_edges.contains(&unordered(s, t)) {
            continue;
        }
        let (Some(i), Some(j)) = (
            cycle.iter().position(|&x| x == s),
            cycle.iter().position(|&x| x == t),
        ) else {
            continue;
        };
        if cycle.iter().filter(|&&x| x == s || x == t).count() != 2 {
            continue;
        }
        let (i, j) = (i.min(j), i.max(j));
        let arc_in: Vec<Index> = cycle[i..=j].to_vec();
        let arc_out: Vec<Index> = cycle[j..].iter().chain(&cycle[..=i]).copied().collect();
        for (arc, other) in [(&arc_in, &arc_out), (&arc_out, &arc_in)] {
            let mut edges: BTreeSet<(Index, Index)> =
                arc.windows(2).map(|w| unordered(w[0], w[1])).collect();
            edges.insert(unordered(s, t));
            if let Some(fi) = face_edges.iter().position(|fe| *fe == edges) {
                return Some(Split {
                    edge: (s, t),
                    face: fi,
                    face_vertices: faces[fi].vertices.clone(),
                    remainder: other.to_vec(),
                });
            }
        }
    }
    None
}
