//! Independent reference implementations checked against the library.

mod common;

use std::collections::{BTreeSet, VecDeque};

use bfz_core::bfz_quiver::{glue, quiver_direct, Quiver};
use bfz_core::cartan_graph::{cartan_matrix, LabeledGraph};
use bfz_core::coxeter_words::{is_reduced, successor_map, Index, SignConvention};
use bfz_core::cylinder_dimer::DimerModel;
use bfz_core::qp_rigidity::{
    cyclic_span_basis, enumerate_cycles, jacobian_generators, superpotential,
    truncated_ideal_basis, ArrowId, ArrowTable, Potential,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::dense::*;
use common::*;

// ---------------------------------------------------------------- words

/// Length of a type-A word as the inversion count of its permutation.
fn perm_length(word: &[u32], rank: usize) -> usize {
    let mut perm: Vec<usize> = (0..=rank).collect();
    for &s in word {
        perm.swap(s as usize - 1, s as usize);
    }
    (0..=rank)
        .flat_map(|i| (i + 1..=rank).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count()
}

/// A word is reduced iff no word reachable by braid moves has a repeated
/// adjacent letter.
fn reduced_by_braid_moves(word: &[u32], g: &LabeledGraph) -> bool {
    let mut seen = BTreeSet::from([word.to_vec()]);
    let mut queue = VecDeque::from([word.to_vec()]);
    while let Some(w) = queue.pop_front() {
        if w.windows(2).any(|p| p[0] == p[1]) {
            return false;
        }
        let mut next = Vec::new();
        for i in 0..w.len().saturating_sub(1) {
            let (a, b) = (w[i], w[i + 1]);
            if !g.are_adjacent(a, b) {
                let mut x = w.clone();
                x.swap(i, i + 1);
                next.push(x);
            }
        }
        for i in 0..w.len().saturating_sub(2) {
            let (a, b, c) = (w[i], w[i + 1], w[i + 2]);
            if a == c && g.are_adjacent(a, b) {
                let mut x = w.clone();
                x[i] = b;
                x[i + 1] = a;
                x[i + 2] = b;
                next.push(x);
            }
        }
        for x in next {
            if seen.insert(x.clone()) {
                queue.push_back(x);
            }
        }
    }
    true
}

fn all_words(rank: u32, max_len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<u32>| {
                (1..=rank).map(move |a| {
                    let mut x = w.clone();
                    x.push(a);
                    x
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

#[test]
fn reducedness_matches_permutation_length_in_type_a() {
    for rank in 1..=4 {
        let c = cartan_matrix(&LabeledGraph::path(rank));
        for w in all_words(rank as u32, 6) {
            assert_eq!(
                is_reduced(&w, &c),
                perm_length(&w, rank) == w.len(),
                "{w:?} in A{rank}"
            );
        }
    }
}

#[test]
fn reducedness_matches_braid_closure_on_rank_four_trees() {
    for g in [LabeledGraph::path(4), d4()] {
        let c = cartan_matrix(&g);
        for w in all_words(4, 6) {
            assert_eq!(is_reduced(&w, &c), reduced_by_braid_moves(&w, &g), "{w:?}");
        }
    }
}

// ----------------------------------------------------------- successors

#[test]
fn successor_map_matches_linear_scan() {
    for g in [a3(), d4()] {
        for (u, v, p) in corpus(&g, 150, 10, 11) {
            let b = build(&g, &u, &v, Some(&p), SignConvention::Example);
            let w = &b.word;
            let s = successor_map(w);
            let idx = w.indices();
            let n = w.len() as Index;
            for (i, &k) in idx.iter().enumerate() {
                let scan = idx[i + 1..]
                    .iter()
                    .copied()
                    .find(|&l| w.letter(l) == w.letter(k))
                    .unwrap_or(n + 1);
                assert_eq!(s.plus(k), scan);
                assert_eq!(s.is_exchangeable(k), k >= 1 && scan <= n);
            }
        }
    }
}

#[test]
fn a2_successor_values() {
    let b = build(
        &LabeledGraph::path(2),
        &[1, 2, 1],
        &[],
        None,
        SignConvention::Example,
    );
    let got: Vec<(Index, Index)> = b.successors.kplus().iter().map(|(&k, &v)| (k, v)).collect();
    assert_eq!(got, vec![(-2, 2), (-1, 1), (1, 3), (2, 4), (3, 4)]);
    assert_eq!(
        b.successors
            .exchangeable()
            .iter()
            .copied()
            .collect::<Vec<_>>(),
        vec![1]
    );
}

// ------------------------------------------------------- quiver routes

#[test]
fn direct_rules_agree_with_matrix_on_random_shuffles() {
    for g in [a3(), d4(), LabeledGraph::path(4)] {
        for conv in [SignConvention::Example, SignConvention::StrictBfz] {
            for (u, v, p) in corpus(&g, 120, 8, 5) {
                let b = build(&g, &u, &v, Some(&p), conv);
                let direct = quiver_direct(&b.word, &b.successors, &b.cartan);
                assert_eq!(direct, b.core, "u={u:?} v={v:?} p={p:?}");
            }
        }
    }
}

#[test]
fn glued_factors_agree_with_direct_construction() {
    for g in [a3(), d4()] {
        for conv in [SignConvention::Example, SignConvention::StrictBfz] {
            for (u, v, _) in corpus(&g, 120, 10, 9) {
                let direct = build(&g, &u, &v, None, conv);
                let (bottom, top) = direct.gluing_factors();
                let glued = glue(&bottom, &top).unwrap();
                assert_eq!(&glued.quiver, direct.quiver(), "u={u:?} v={v:?}");
                // The factors are the standalone cells.
                assert_eq!(bottom.quiver(), build(&g, &u, &[], None, conv).quiver());
                assert_eq!(top.quiver(), build(&g, &[], &v, None, conv).quiver());
            }
        }
    }
}

// ---------------------------------------------------------------- faces

/// Faces as the regions between consecutive rungs of each strip.
fn strip_faces(q: &Quiver, g: &LabeledGraph) -> Vec<((u32, u32), BTreeSet<Index>)> {
    let strings = q.strings();
    let mut out = Vec::new();
    for (a, b) in g.edges() {
        let (sa, sb) = (&strings[&a], &strings[&b]);
        let mut rungs: Vec<(usize, usize)> = q
            .arrows()
            .filter_map(|(s, t, _)| {
                let pa = sa.iter().position(|&x| x == s || x == t)?;
                let pb = sb.iter().position(|&x| x == s || x == t)?;
                Some((pa, pb))
            })
            .collect();
        rungs.sort_unstable();
        rungs.dedup();
        for w in rungs.windows(2) {
            let verts: BTreeSet<Index> = sa[w[0].0..=w[1].0]
                .iter()
                .chain(&sb[w[0].1..=w[1].1])
                .copied()
                .collect();
            out.push(((a, b), verts));
        }
    }
    out.sort();
    out
}

#[test]
fn rotation_faces_match_rung_oracle() {
    for g in [a3(), d4(), e6()] {
        for (u, v, p) in corpus(&g, 80, 10, 21) {
            let b = build(&g, &u, &v, Some(&p), SignConvention::Example);
            let m = DimerModel::new(b.quiver(), &g).unwrap();
            let mut got: Vec<((u32, u32), BTreeSet<Index>)> = m
                .faces
                .iter()
                .map(|f| (f.edge.unwrap(), f.vertices.iter().copied().collect()))
                .collect();
            got.sort();
            assert_eq!(got, strip_faces(b.quiver(), &g), "u={u:?} v={v:?} p={p:?}");
        }
    }
}

// ------------------------------------------------------------ rigidity

#[test]
fn rigidity_matches_dense_oracle_on_all_three_vertex_digraphs() {
    let pairs: Vec<(Index, Index)> = vec![(1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)];
    for mask in 0u32..64 {
        let arrows: Vec<(Index, Index)> = (0..6)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let q = digraph(3, &arrows);
        let cycles = simple_cycles(&q, 3);
        compare_with_oracle(&q, vec![], 3, 4);
        if !cycles.is_empty() {
            let all: Vec<(i64, Vec<ArrowId>)> = cycles.iter().map(|c| (1, c.clone())).collect();
            compare_with_oracle(&q, all, 3, 5);
            let alternating: Vec<(i64, Vec<ArrowId>)> = cycles
                .iter()
                .enumerate()
                .map(|(i, c)| (if i % 2 == 0 { 1 } else { -2 }, c.clone()))
                .collect();
            compare_with_oracle(&q, alternating, 4, 5);
        }
    }
}

#[test]
fn rigidity_matches_dense_oracle_on_random_four_vertex_quivers() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let pairs: Vec<(Index, Index)> = (1..=4)
        .flat_map(|s| (1..=4).map(move |t| (s, t)))
        .filter(|(s, t)| s != t)
        .collect();
    for _ in 0..40 {
        let count = rng.gen_range(3..=6);
        let mut chosen = BTreeSet::new();
        while chosen.len() < count {
            chosen.insert(pairs[rng.gen_range(0..pairs.len())]);
        }
        let q = digraph(4, &chosen.into_iter().collect::<Vec<_>>());
        let terms: Vec<(i64, Vec<ArrowId>)> = simple_cycles(&q, 4)
            .into_iter()
            .map(|c| (rng.gen_range(-2i64..=2), c))
            .filter(|t| t.0 != 0)
            .collect();
        compare_with_oracle(&q, terms, 4, 5);
    }
}

// ------------------------------------------------ regression dimensions

fn sl4() -> (Quiver, Potential) {
    let b = build(&a3(), &[3, 2, 1, 2, 3], &[], None, SignConvention::Example);
    let m = DimerModel::new(b.quiver(), &b.graph).unwrap();
    let s = superpotential(&m.faces, &ArrowTable::new(b.quiver())).unwrap();
    (b.quiver().clone(), s)
}

/// Dimension of span{p·g·q} in the full path space, by dense rank.

#[test]
fn sl4_regression_dimensions() {
    let (q, s) = sl4();
    let t = ArrowTable::new(&q);
    let gens = jacobian_generators(&s, &t, &q, true);

    let ideal5 = truncated_ideal_basis(&gens, &t, 5).unwrap().rank();
    assert_eq!(ideal5, dense_ideal_dim(&q, &s, 5));
    let ideal8 = truncated_ideal_basis(&gens, &t, 8).unwrap().rank();
    assert_eq!(ideal8, SL4_IDEAL_DIM_8);

    let closed6 = all_paths(t.vertices(), &q.arrow_list(), 6)
        .iter()
        .filter(|p| p.0 == p.1 && !p.2.is_empty())
        .count();
    let classes6 = enumerate_cycles(&t, 6).len();
    let cyclic6 = cyclic_span_basis(&t, 6).rank();
    assert_eq!(cyclic6, closed6 - classes6);
    assert_eq!(cyclic6, SL4_CYCLIC_DIM_6);

    let cycles4 = enumerate_cycles(&t, 4);
    assert_eq!(cycles4.len(), SL4_CYCLES_4);
    for term in &s.terms {
        let canon = (0..term.cycle.len())
            .map(|i| {
                let mut r = term.cycle.clone();
                r.rotate_left(i);
                r
            })
            .min()
            .unwrap();
        assert!(cycles4.iter().any(|c| c.arrows == canon));
    }
}

const SL4_IDEAL_DIM_8: usize = 1209;
const SL4_CYCLIC_DIM_6: usize = 53;
const SL4_CYCLES_4: usize = 6;
