use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::bfz_quiver::Quiver;
use crate::cartan_graph::{Label, LabeledGraph, SheetId};
use crate::coxeter_words::Index;

use super::embedding::{ArrowClass, Embedding};
use super::faces::Face;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Arrow {
        arrow: (Index, Index),
    },
    Vertex {
        k: Index,
    },
    Face {
        sheet: SheetId,
        vertices: Vec<Index>,
    },
    StripEnd {
        edge: (Label, Label),
        end: &'static str,
        vertices: Vec<Index>,
    },
    FacePair {
        first: Vec<Index>,
        second: Vec<Index>,
        shared: Vec<(Index, Index)>,
    },
    Crossing {
        sheet: SheetId,
        first: (Index, Index),
        second: (Index, Index),
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub ok: bool,
    pub witnesses: Vec<Witness>,
}

impl Check {
    fn from_failures(witnesses: Vec<Witness>) -> Self {
        Check {
            ok: witnesses.is_empty(),
            witnesses,
        }
    }
}

/// The five dimer-model conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimerReport {
    /// Every arrow projects onto a vertex or an edge of the graph.
    pub arrows_project: Check,
    /// Every face projects onto an edge of the graph.
    pub faces_project: Check,
    /// Every face boundary is a directed cycle.
    pub faces_oriented: Check,
    /// First and last vertex of each string are frozen, and the lowest and
    /// highest face of each strip has an arrow between two frozen vertices.
    pub frozen_boundary: Check,
    /// Two faces share at most one arrow unless all shared arrows lie on a spine.
    pub shared_edges: Check,
}

impl DimerReport {
    pub fn ok(&self) -> bool {
        self.conditions().iter().all(|(_, c)| c.ok)
    }

    pub fn conditions(&self) -> [(&'static str, &Check); 5] {
        [
            ("arrows_project", &self.arrows_project),
            ("faces_project", &self.faces_project),
            ("faces_oriented", &self.faces_oriented),
            ("frozen_boundary", &self.frozen_boundary),
            ("shared_edges", &self.shared_edges),
        ]
    }
}

pub fn check_dimer_conditions(
    q: &Quiver,
    g: &LabeledGraph,
    e: &Embedding,
    faces: &[Face],
) -> DimerReport {
    let arrows_project = Check::from_failures(
        q.arrows()
            .filter(|&(s, t, _)| {
                let (a, b) = (q.letter(s), q.letter(t));
                a != b && !g.are_adjacent(a, b)
            })
            .map(|(s, t, _)| Witness::Arrow { arrow: (s, t) })
            .collect(),
    );
    let face_witness = |f: &Face| Witness::Face {
        sheet: f.sheet,
        vertices: f.vertices.clone(),
    };
    let faces_project = Check::from_failures(
        faces
            .iter()
            .filter(|f| f.edge.is_none())
            .map(face_witness)
            .collect(),
    );
    let faces_oriented = Check::from_failures(
        faces
            .iter()
            .filter(|f| f.orientation.is_none())
            .map(face_witness)
            .collect(),
    );

    let mut boundary = Vec::new();
    for string in e.strings.values() {
        for &k in [string[0], *string.last().unwrap()]
            .iter()
            .collect::<BTreeSet<_>>()
        {
            if !q.is_frozen(k) {
                boundary.push(Witness::Vertex { k });
            }
        }
    }
    let frozen_arrow = |f: &Face| {
        f.arrows
            .iter()
            .any(|&(s, t)| q.is_frozen(s) && q.is_frozen(t))
    };
    for (edge, strip) in strips(faces) {
        let first = strip
            .iter()
            .min_by_key(|f| (f.min_level(), f.max_level()))
            .unwrap();
        let last = strip
            .iter()
            .max_by_key(|f| (f.max_level(), f.min_level()))
            .unwrap();
        for (end, f) in [("first", first), ("last", last)] {
            if !frozen_arrow(f) {
                boundary.push(Witness::StripEnd {
                    edge,
                    end,
                    vertices: f.vertices.clone(),
                });
            }
        }
    }
    let frozen_boundary = Check::from_failures(boundary);
    let shared = check_shared_edges(faces, e);
    let shared_edges = Check::from_failures(shared.violations.clone());
    DimerReport {
        arrows_project,
        faces_project,
        faces_oriented,
        frozen_boundary,
        shared_edges,
    }
}

/// Faces grouped by the graph edge they project onto.
pub fn strips(faces: &[Face]) -> BTreeMap<(Label, Label), Vec<&Face>> {
    let mut out: BTreeMap<(Label, Label), Vec<&Face>> = BTreeMap::new();
    for f in faces {
        if let Some(edge) = f.edge {
            out.entry(edge).or_default().push(f);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharedEdgesReport {
    pub ok: bool,
    /// Pairs sharing two or more arrows, not all of them on a spine.
    pub violations: Vec<Witness>,
    /// Pairs sharing two or more arrows, all on a spine.
    pub spine_pairs: Vec<Witness>,
}

pub fn check_shared_edges(faces: &[Face], e: &Embedding) -> SharedEdgesReport {
    let on_spine = |&(s, t): &(Index, Index)| match e.classes.get(&(s, t)) {
        Some(ArrowClass::Vertical { string }) => e.decomposition.is_spine(*string),
        _ => false,
    };
    let sets: Vec<BTreeSet<(Index, Index)>> = faces.iter().map(|f| f.arrow_set()).collect();
    let mut violations = Vec::new();
    let mut spine_pairs = Vec::new();
    for i in 0..faces.len() {
        for j in i + 1..faces.len() {
            let shared: Vec<(Index, Index)> = sets[i].intersection(&sets[j]).copied().collect();
            if shared.len() < 2 {
                continue;
            }
            let w = Witness::FacePair {
                first: faces[i].vertices.clone(),
                second: faces[j].vertices.clone(),
                shared: shared.clone(),
            };
            if shared.iter().all(on_spine) {
                spine_pairs.push(w);
            } else {
                violations.push(w);
            }
        }
    }
    SharedEdgesReport {
        ok: violations.is_empty(),
        violations,
        spine_pairs,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlanarityReport {
    pub ok: bool,
    pub crossings: Vec<Witness>,
}

fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i64 {
    ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).signum()
}

fn on_segment(a: (i64, i64), b: (i64, i64), p: (i64, i64)) -> bool {
    p.0 >= a.0.min(b.0) && p.0 <= a.0.max(b.0) && p.1 >= a.1.min(b.1) && p.1 <= a.1.max(b.1)
}

/// Whether two segments meet anywhere other than at a common endpoint.
fn segments_conflict(p1: (i64, i64), p2: (i64, i64), q1: (i64, i64), q2: (i64, i64)) -> bool {
    let shared = [p1, p2].iter().filter(|p| **p == q1 || **p == q2).count();
    if shared == 2 {
        return true;
    }
    let (d1, d2) = (orient(q1, q2, p1), orient(q1, q2, p2));
    let (d3, d4) = (orient(p1, p2, q1), orient(p1, p2, q2));
    if shared == 1 {
        // Only a problem if collinear and overlapping past the common point.
        if d1 != 0 || d2 != 0 {
            return false;
        }
        let common = if p1 == q1 || p1 == q2 { p1 } else { p2 };
        let po = if p1 == common { p2 } else { p1 };
        let qo = if q1 == common { q2 } else { q1 };
        let (u, v) = (
            (po.0 - common.0, po.1 - common.1),
            (qo.0 - common.0, qo.1 - common.1),
        );
        return u.0 * v.0 + u.1 * v.1 > 0;
    }
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && on_segment(q1, q2, p1))
        || (d2 == 0 && on_segment(q1, q2, p2))
        || (d3 == 0 && on_segment(p1, p2, q1))
        || (d4 == 0 && on_segment(p1, p2, q2))
}

/// No two arrows drawn on a sheet cross or overlap.
pub fn check_planarity_per_sheet(e: &Embedding) -> PlanarityReport {
    let mut crossings = Vec::new();
    for (branch, b) in e.decomposition.branches.iter().enumerate() {
        let mut segs: Vec<(Index, Index)> = e.sheet_arrows(branch);
        segs.sort_by_key(|&(s, t)| (s.min(t), s.max(t)));
        segs.dedup_by_key(|&mut (s, t)| (s.min(t), s.max(t)));
        let pt = |k: Index| e.point(branch, k).unwrap();
        for i in 0..segs.len() {
            for j in i + 1..segs.len() {
                let (a, c) = (segs[i], segs[j]);
                if segments_conflict(pt(a.0), pt(a.1), pt(c.0), pt(c.1)) {
                    crossings.push(Witness::Crossing {
                        sheet: b.id(),
                        first: a,
                        second: c,
                    });
                }
            }
        }
    }
    PlanarityReport {
        ok: crossings.is_empty(),
        crossings,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceShapeReport {
    pub ok: bool,
    /// Faces without exactly one vertex off their majority string.
    pub violations: Vec<Witness>,
}

/// A face with `n` vertices should have `n - 1` of them on one string.
pub fn check_face_shapes(faces: &[Face], e: &Embedding) -> FaceShapeReport {
    let violations: Vec<Witness> = faces
        .iter()
        .filter(|f| {
            let mut count: BTreeMap<Label, usize> = BTreeMap::new();
            for k in &f.vertices {
                *count.entry(e.placement[k].string).or_default() += 1;
            }
            count.len() != 2 || count.values().min() != Some(&1)
        })
        .map(|f| Witness::Face {
            sheet: f.sheet,
            vertices: f.vertices.clone(),
        })
        .collect();
    FaceShapeReport {
        ok: violations.is_empty(),
        violations,
    }
}
