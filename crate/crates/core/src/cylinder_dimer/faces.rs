//! Bounded faces of each sheet's straight-line drawing, traced with the
//! rotation system of the integer placement coordinates.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::bfz_quiver::Quiver;
use crate::cartan_graph::{Label, SheetId};
use crate::coxeter_words::Index;

use super::embedding::Embedding;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Orientation {
    #[serde(rename = "cw")]
    Clockwise,
    #[serde(rename = "ccw")]
    Anticlockwise,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    pub sheet: SheetId,
    /// The graph edge the face projects onto, if it spans exactly two adjacent strings.
    pub edge: Option<(Label, Label)>,
    /// Boundary vertices in cyclic order; along the arrows when the face is oriented.
    pub vertices: Vec<Index>,
    /// Boundary arrows `(source, target)` in the same cyclic order.
    pub arrows: Vec<(Index, Index)>,
    /// `None` when the boundary is not a directed cycle.
    pub orientation: Option<Orientation>,
    /// Twice the absolute polygon area.
    pub area2: i64,
}

impl Face {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrow_set(&self) -> BTreeSet<(Index, Index)> {
        self.arrows.iter().copied().collect()
    }

    pub fn min_level(&self) -> Index {
        *self.vertices.iter().min().unwrap()
    }

    pub fn max_level(&self) -> Index {
        *self.vertices.iter().max().unwrap()
    }
}

/// Orders direction vectors by angle in `[0, 2π)`.
fn angle_cmp(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |(x, y): (i64, i64)| if y > 0 || (y == 0 && x > 0) { 0 } else { 1 };
    half(a)
        .cmp(&half(b))
        .then_with(|| (b.0 * a.1 - a.0 * b.1).cmp(&0))
}

fn signed_area2(points: &[(i64, i64)]) -> i64 {
    (0..points.len())
        .map(|i| {
            let (p, q) = (points[i], points[(i + 1) % points.len()]);
            p.0 * q.1 - q.0 * p.1
        })
        .sum()
}

/// Bounded faces of one sheet, in a deterministic order.
pub fn sheet_faces(q: &Quiver, e: &Embedding, branch: usize) -> Vec<Face> {
    let sheet = e.decomposition.branches[branch].id();
    let arrows = e.sheet_arrows(branch);
    let point = |k: Index| e.point(branch, k).expect("sheet arrows stay on the sheet");

    let mut rotation: BTreeMap<Index, Vec<Index>> = BTreeMap::new();
    for &(s, t) in &arrows {
        rotation.entry(s).or_default().push(t);
        rotation.entry(t).or_default().push(s);
    }
    for (&v, nbrs) in rotation.iter_mut() {
        nbrs.sort_unstable();
        nbrs.dedup();
        let p = point(v);
        nbrs.sort_by(|&a, &b| {
            let (pa, pb) = (point(a), point(b));
            angle_cmp((pa.0 - p.0, pa.1 - p.1), (pb.0 - p.0, pb.1 - p.1))
        });
    }

    let mut visited: BTreeSet<(Index, Index)> = BTreeSet::new();
    let mut faces = Vec::new();
    for (&start, nbrs) in &rotation {
        for &next in nbrs {
            if visited.contains(&(start, next)) {
                continue;
            }
            // Walk with the face on the left: at v coming from u, leave along
            // the neighbour preceding u in anticlockwise order.
            let mut walk = Vec::new();
            let (mut u, mut v) = (start, next);
            while visited.insert((u, v)) {
                walk.push(u);
                let around = &rotation[&v];
                let i = around.iter().position(|&x| x == u).unwrap();
                let w = around[(i + around.len() - 1) % around.len()];
                u = v;
                v = w;
            }
            let pts: Vec<(i64, i64)> = walk.iter().map(|&k| point(k)).collect();
            let area = signed_area2(&pts);
            if area > 0 {
                faces.push(make_face(q, e, sheet, walk, area));
            }
        }
    }
    faces.sort_by(|a, b| {
        (a.min_level(), a.max_level(), &a.vertices).cmp(&(
            b.min_level(),
            b.max_level(),
            &b.vertices,
        ))
    });
    faces
}

fn make_face(q: &Quiver, e: &Embedding, sheet: SheetId, walk: Vec<Index>, area2: i64) -> Face {
    let n = walk.len();
    let simple = walk.iter().collect::<BTreeSet<_>>().len() == n;
    let forward = simple && (0..n).all(|i| q.has_arrow(walk[i], walk[(i + 1) % n]));
    let backward = simple && (0..n).all(|i| q.has_arrow(walk[(i + 1) % n], walk[i]));
    let (mut vertices, orientation) = if forward {
        (walk, Some(Orientation::Anticlockwise))
    } else if backward {
        let mut w = walk;
        w.reverse();
        (w, Some(Orientation::Clockwise))
    } else {
        (walk, None)
    };
    // Start the cycle at its smallest vertex.
    let m = (0..n).min_by_key(|&i| vertices[i]).unwrap();
    vertices.rotate_left(m);
    let arrows = (0..n)
        .map(|i| {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            if q.has_arrow(a, b) {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    let strings: BTreeSet<Label> = vertices.iter().map(|&k| e.placement[&k].string).collect();
    let edge = match strings.iter().copied().collect::<Vec<_>>().as_slice() {
        [a, b] if e.decomposition.branch_of_edge(*a, *b).is_some() => Some((*a, *b)),
        _ => None,
    };
    Face {
        sheet,
        edge,
        vertices,
        arrows,
        orientation,
        area2,
    }
}

/// Faces of all sheets, sheet by sheet.
pub fn faces(q: &Quiver, e: &Embedding) -> Vec<Face> {
    (0..e.decomposition.branches.len())
        .flat_map(|b| sheet_faces(q, e, b))
        .collect()
}
