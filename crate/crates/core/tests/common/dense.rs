//! Dense brute-force reference for rigidity: every closed path up to the
//! truncation degree is a coordinate, and membership is a rank comparison.

use std::collections::BTreeMap;

use bfz_core::bfz_quiver::{Quiver, Vertex};
use bfz_core::coxeter_words::Index;
use bfz_core::qp_rigidity::{enumerate_cycles, is_rigid_up_to, ArrowId, ArrowTable, Potential};
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(pivot) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// All paths of length `0..=max_len` as `(start, end, arrows)`.
pub fn all_paths(
    vertices: &[Index],
    arrows: &[(Index, Index)],
    max_len: usize,
) -> Vec<(Index, Index, Vec<ArrowId>)> {
    let mut out: Vec<(Index, Index, Vec<ArrowId>)> =
        vertices.iter().map(|&v| (v, v, vec![])).collect();
    let mut layer = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (s, e, p) in &layer {
            for (id, &(x, y)) in arrows.iter().enumerate() {
                if x == *e {
                    let mut q = p.clone();
                    q.push(id);
                    next.push((*s, y, q));
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// `∂_a` straight from the defining sum.
pub fn derivative(a: ArrowId, s: &[(Q, Vec<ArrowId>)]) -> Vec<(Q, Vec<ArrowId>)> {
    let mut out = Vec::new();
    for (c, cyc) in s {
        for i in 0..cyc.len() {
            if cyc[i] == a {
                let rest: Vec<ArrowId> = cyc[i + 1..].iter().chain(&cyc[..i]).copied().collect();
                out.push((c.clone(), rest));
            }
        }
    }
    out
}

/// Membership of each rotation class of cycles of length `<= lc` in
/// cyclic span + ideal, both cut at `l`, by dense rank comparison over all
/// closed paths.
pub fn dense_oracle(
    q: &Quiver,
    s: &[(Q, Vec<ArrowId>)],
    lc: usize,
    l: usize,
) -> BTreeMap<Vec<ArrowId>, bool> {
    let vertices: Vec<Index> = q.vertices().map(|v| v.k).collect();
    let arrows = q.arrow_list();
    let paths = all_paths(&vertices, &arrows, l);
    let closed: Vec<Vec<ArrowId>> = paths
        .iter()
        .filter(|(a, b, p)| a == b && !p.is_empty())
        .map(|x| x.2.clone())
        .collect();
    let col: BTreeMap<Vec<ArrowId>, usize> = closed
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let mut rows = Vec::new();
    for c in &closed {
        let mut r = c.clone();
        r.rotate_left(1);
        if r != *c {
            let mut row = vec![Q::zero(); closed.len()];
            row[col[c]] += Q::one();
            row[col[&r]] -= Q::one();
            rows.push(row);
        }
    }
    for a in 0..arrows.len() {
        let g = derivative(a, s);
        let mut combined: BTreeMap<Vec<ArrowId>, Q> = BTreeMap::new();
        for (c, p) in g {
            *combined.entry(p).or_insert_with(Q::zero) += c;
        }
        combined.retain(|_, c| !c.is_zero());
        if combined.is_empty() {
            continue;
        }
        let glen = combined.keys().map(Vec::len).max().unwrap();
        // ∂_a S runs from the target of `a` back to its source.
        let (src, tgt) = arrows[a];
        for (ps, pe, p) in &paths {
            if *pe != tgt {
                continue;
            }
            for (qs, qe, qq) in &paths {
                if *qs != src || qe != ps || p.len() + qq.len() + glen > l {
                    continue;
                }
                let mut row = vec![Q::zero(); closed.len()];
                for (m, c) in &combined {
                    let w: Vec<ArrowId> = p.iter().chain(m).chain(qq).copied().collect();
                    row[col[&w]] += c;
                }
                rows.push(row);
            }
        }
    }
    let base = rank(&rows);
    let mut out = BTreeMap::new();
    for c in closed.iter().filter(|c| c.len() <= lc) {
        let canon = (0..c.len())
            .map(|i| {
                let mut r = c.clone();
                r.rotate_left(i);
                r
            })
            .min()
            .unwrap();
        if out.contains_key(&canon) {
            continue;
        }
        let mut with = rows.clone();
        let mut e = vec![Q::zero(); closed.len()];
        e[col[c]] = Q::one();
        with.push(e);
        out.insert(canon, rank(&with) == base);
    }
    out
}

pub fn simple_cycles(q: &Quiver, max_len: usize) -> Vec<Vec<ArrowId>> {
    enumerate_cycles(&ArrowTable::new(q), max_len)
        .into_iter()
        .filter(|c| c.simple)
        .map(|c| c.arrows)
        .collect()
}

pub fn compare_with_oracle(q: &Quiver, terms: Vec<(i64, Vec<ArrowId>)>, lc: usize, l: usize) {
    let s = Potential::from_cycles(&terms);
    let dense: Vec<(Q, Vec<ArrowId>)> = terms
        .iter()
        .map(|(c, p)| (Q::from_integer((*c).into()), p.clone()))
        .collect();
    let oracle = dense_oracle(q, &dense, lc, l);
    let report = is_rigid_up_to(q, &s, true, lc, l).unwrap();
    let got: BTreeMap<Vec<ArrowId>, bool> = report
        .cycles
        .iter()
        .map(|c| (c.cycle.clone(), c.is_member()))
        .collect();
    assert_eq!(
        got,
        oracle,
        "arrows {:?} potential {terms:?}",
        q.arrow_list()
    );
    for c in &report.cycles {
        if let Some(cert) = &c.certificate {
            assert!(cert.verify(&c.cycle, &s));
        }
    }
}

pub fn digraph(n: i32, arrows: &[(Index, Index)]) -> Quiver {
    let mut q = Quiver::new((1..=n).map(|k| Vertex {
        k,
        letter: 1,
        frozen: false,
    }));
    for &(s, t) in arrows {
        q.add_arrow(s, t);
    }
    q
}

pub fn dense_ideal_dim(q: &Quiver, s: &Potential, l: usize) -> usize {
    let vertices: Vec<Index> = q.vertices().map(|v| v.k).collect();
    let arrows = q.arrow_list();
    let paths = all_paths(&vertices, &arrows, l);
    let col: BTreeMap<Vec<ArrowId>, usize> = paths
        .iter()
        .filter(|p| !p.2.is_empty())
        .map(|p| p.2.clone())
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let terms: Vec<(Q, Vec<ArrowId>)> = s
        .combination
        .terms()
        .map(|(p, c)| (c.clone(), p.0.clone()))
        .collect();
    let mut rows = Vec::new();
    for a in 0..arrows.len() {
        let g = derivative(a, &terms);
        if g.is_empty() {
            continue;
        }
        let glen = g.iter().map(|t| t.1.len()).max().unwrap();
        let (src, tgt) = arrows[a];
        for (_, pe, p) in &paths {
            if *pe != tgt {
                continue;
            }
            for (qs, _, qq) in &paths {
                if *qs != src || p.len() + qq.len() + glen > l {
                    continue;
                }
                let mut row = vec![Q::zero(); col.len()];
                for (c, m) in &g {
                    let w: Vec<ArrowId> = p.iter().chain(m).chain(qq).copied().collect();
                    row[col[&w]] += c;
                }
                rows.push(row);
            }
        }
    }
    rank(&rows)
}
