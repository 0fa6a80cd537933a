use std::collections::BTreeSet;

use super::*;
use crate::bfz_quiver::{BfzQuiver, Quiver, Vertex};
use crate::cartan_graph::{LabeledGraph, SheetId};
use crate::coxeter_words::{Index, SignConvention};

fn model(b: &BfzQuiver) -> DimerModel {
    DimerModel::new(b.quiver(), &b.graph).unwrap()
}

fn vertex_sets(faces: &[Face], edge: (u32, u32)) -> Vec<BTreeSet<Index>> {
    faces
        .iter()
        .filter(|f| f.edge == Some(edge))
        .map(|f| f.vertices.iter().copied().collect())
        .collect()
}

fn sets(v: &[&[Index]]) -> Vec<BTreeSet<Index>> {
    v.iter().map(|s| s.iter().copied().collect()).collect()
}

#[test]
fn sl4_strings_and_faces() {
    let b = BfzQuiver::build(
        &LabeledGraph::path(3),
        &[3, 2, 1, 2, 3],
        &[],
        None,
        SignConvention::Example,
    )
    .unwrap();
    let m = model(&b);
    assert_eq!(m.embedding.strings[&3], vec![-3, 1, 5]);
    assert_eq!(m.embedding.strings[&2], vec![-2, 2, 4]);
    assert_eq!(m.embedding.strings[&1], vec![-1, 3]);
    assert_eq!(m.faces.len(), 6);
    assert!(m.faces.iter().all(|f| f.sheet == SheetId(1, 3)));
    assert_eq!(
        vertex_sets(&m.faces, (2, 3)),
        sets(&[&[-3, -2, 1], &[-2, 1, 2, 4], &[1, 4, 5]])
    );
    assert_eq!(
        vertex_sets(&m.faces, (1, 2)),
        sets(&[&[-2, -1, 2], &[-1, 2, 3], &[2, 3, 4]])
    );
    let report = check_dimer_conditions(b.quiver(), &b.graph, &m.embedding, &m.faces);
    assert!(report.ok(), "{report:?}");
    assert!(check_planarity_per_sheet(&m.embedding).ok);
    let shared = check_shared_edges(&m.faces, &m.embedding);
    assert!(shared.ok && shared.spine_pairs.is_empty());
}

#[test]
fn empty_word_has_singleton_strings() {
    let b = BfzQuiver::build(
        &LabeledGraph::path(3),
        &[],
        &[],
        None,
        SignConvention::Example,
    )
    .unwrap();
    let m = model(&b);
    assert!(m.embedding.strings.values().all(|s| s.len() == 1));
    assert!(m.faces.is_empty());
    assert!(check_dimer_conditions(b.quiver(), &b.graph, &m.embedding, &m.faces).ok());
}

#[test]
fn e6_word_passes_all_conditions() {
    let e6 = LabeledGraph::new(6, &[(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]).unwrap();
    let u = [1, 3, 2, 5, 4, 3, 6, 1, 5, 6, 4, 3, 2, 1, 4, 5, 6];
    let b = BfzQuiver::build(&e6, &u, &[], None, SignConvention::Example).unwrap();
    let m = model(&b);
    let report = check_dimer_conditions(b.quiver(), &b.graph, &m.embedding, &m.faces);
    assert!(report.ok(), "{report:?}");
    // Three vertical arrows on the spine, drawn on every sheet.
    let spine: Vec<_> = m
        .embedding
        .classes
        .iter()
        .filter(|(_, c)| matches!(c, ArrowClass::Vertical { string: 4 }))
        .collect();
    assert_eq!(spine.len(), 3);
    let sheets: BTreeSet<SheetId> = m.faces.iter().map(|f| f.sheet).collect();
    assert_eq!(
        sheets,
        BTreeSet::from([SheetId(1, 4), SheetId(2, 4), SheetId(4, 6)])
    );
}

#[test]
fn d4_spine_sharing() {
    let d4 = LabeledGraph::new(4, &[(1, 3), (2, 3), (4, 3)]).unwrap();
    let b = BfzQuiver::build(
        &d4,
        &[4, 3, 1, 3, 2, 3, 1, 4],
        &[],
        None,
        SignConvention::Example,
    )
    .unwrap();
    let m = model(&b);
    assert_eq!(m.faces.len(), 10);
    let shared = check_shared_edges(&m.faces, &m.embedding);
    assert!(shared.ok);
    let pairs: Vec<Vec<(Index, Index)>> = shared
        .spine_pairs
        .iter()
        .map(|w| match w {
            Witness::FacePair { shared, .. } => shared.clone(),
            _ => unreachable!(),
        })
        .collect();
    assert!(pairs.contains(&vec![(2, 4), (4, 6)]));
}

#[test]
fn crossing_arrows_are_reported() {
    let g = LabeledGraph::path(2);
    let mut q = Quiver::new([
        Vertex {
            k: -2,
            letter: 2,
            frozen: true,
        },
        Vertex {
            k: -1,
            letter: 1,
            frozen: true,
        },
        Vertex {
            k: 1,
            letter: 2,
            frozen: true,
        },
        Vertex {
            k: 2,
            letter: 1,
            frozen: true,
        },
    ]);
    q.add_arrow(-2, 2);
    q.add_arrow(-1, 1);
    let e = embed(&q, &g).unwrap();
    let p = check_planarity_per_sheet(&e);
    assert!(!p.ok);
    assert_eq!(p.crossings.len(), 1);
}

#[test]
fn single_triangle_has_one_face() {
    let g = LabeledGraph::path(2);
    let mut q = Quiver::new([
        Vertex {
            k: -2,
            letter: 2,
            frozen: true,
        },
        Vertex {
            k: -1,
            letter: 1,
            frozen: true,
        },
        Vertex {
            k: 1,
            letter: 2,
            frozen: true,
        },
    ]);
    q.add_arrow(-2, -1);
    q.add_arrow(-1, 1);
    q.add_arrow(1, -2);
    let m = DimerModel::new(&q, &g).unwrap();
    assert_eq!(m.faces.len(), 1);
    assert_eq!(m.faces[0].edge, Some((1, 2)));
    assert!(m.faces[0].orientation.is_some());
    assert!(check_shared_edges(&m.faces, &m.embedding).ok);
}

#[test]
fn arrow_over_non_edge_is_rejected() {
    let g = LabeledGraph::path(3);
    let mut q = Quiver::new([
        Vertex {
            k: -3,
            letter: 3,
            frozen: true,
        },
        Vertex {
            k: -1,
            letter: 1,
            frozen: true,
        },
    ]);
    q.add_arrow(-3, -1);
    assert_eq!(embed(&q, &g).unwrap_err(), EmbedError::NonEdge(-3, -1));
}
