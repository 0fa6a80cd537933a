//! Degree-truncated slices of the Jacobian ideal and of the span of
//! rotation differences, in path-monomial coordinates.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::coxeter_words::Index;

use super::linalg::{Echelon, SparseRow};
use super::paths::{int, ArrowTable, Path, PathCombination};
use super::potential::Generator;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("truncation degree {degree} is below the longest generator term ({needed})")]
    DegreeTooSmall { degree: usize, needed: usize },
}

/// `left · g · right` for the generator at position `generator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealElement {
    pub left: Path,
    pub generator: usize,
    pub right: Path,
}

impl IdealElement {
    pub fn expand(&self, gens: &[Generator]) -> PathCombination {
        gens[self.generator]
            .combination
            .sandwich(&self.left.0, &self.right.0)
    }
}

/// Paths of length `0..=max_len` keyed by endpoints; the empty path at `v` is keyed `(v, v)`.
fn paths_with_empty(table: &ArrowTable, max_len: usize) -> BTreeMap<(Index, Index), Vec<Path>> {
    let mut by_ends = table.paths_by_endpoints(max_len);
    for &v in table.vertices() {
        by_ends
            .entry((v, v))
            .or_default()
            .insert(0, Path::default());
    }
    by_ends
}

fn max_generator_len(gens: &[Generator]) -> usize {
    gens.iter()
        .map(|g| g.combination.max_len())
        .max()
        .unwrap_or(0)
}

/// All `left · g · right` with `|left| + |right| + max|g| <= degree`, for
/// nonzero generators. With `closed`, only those starting and ending at the
/// same vertex.
pub fn ideal_elements(
    gens: &[Generator],
    table: &ArrowTable,
    degree: usize,
    closed: bool,
) -> Result<Vec<IdealElement>, IdealError> {
    let needed = max_generator_len(gens);
    if degree < needed {
        return Err(IdealError::DegreeTooSmall { degree, needed });
    }
    let paths = paths_with_empty(table, degree);
    let mut ending_at: BTreeMap<Index, Vec<(Index, &Path)>> = BTreeMap::new();
    let mut starting_at: BTreeMap<Index, Vec<(Index, &Path)>> = BTreeMap::new();
    for (&(s, t), ps) in &paths {
        for p in ps {
            ending_at.entry(t).or_default().push((s, p));
            starting_at.entry(s).or_default().push((t, p));
        }
    }
    let mut out = Vec::new();
    for (gi, g) in gens.iter().enumerate() {
        if g.combination.is_zero() {
            continue;
        }
        let slack = degree - g.combination.max_len();
        // Terms of ∂_a S run from the head of a back to its tail.
        let (from, to) = (table.target(g.arrow), table.source(g.arrow));
        let lefts = ending_at.get(&from).map(Vec::as_slice).unwrap_or(&[]);
        let rights = starting_at.get(&to).map(Vec::as_slice).unwrap_or(&[]);
        for &(start, left) in lefts.iter().filter(|(_, p)| p.len() <= slack) {
            for &(end, right) in rights.iter().filter(|(_, p)| p.len() <= slack - left.len()) {
                if closed && end != start {
                    continue;
                }
                out.push(IdealElement {
                    left: left.clone(),
                    generator: gi,
                    right: right.clone(),
                });
            }
        }
    }
    Ok(out)
}

fn to_row(c: &PathCombination) -> SparseRow<Path> {
    c.terms().map(|(p, x)| (p.clone(), x.clone())).collect()
}

/// Echelon basis of `span{p · g · q : total length <= degree}`.
pub fn truncated_ideal_basis(
    gens: &[Generator],
    table: &ArrowTable,
    degree: usize,
) -> Result<Echelon<Path>, IdealError> {
    let mut basis = Echelon::new(false);
    for (i, el) in ideal_elements(gens, table, degree, false)?
        .iter()
        .enumerate()
    {
        basis.insert(to_row(&el.expand(gens)), i);
    }
    Ok(basis)
}

/// Closed paths of length `1..=max_len`.
pub fn closed_paths(table: &ArrowTable, max_len: usize) -> Vec<Path> {
    let mut out: Vec<Path> = table
        .paths_by_endpoints(max_len)
        .into_iter()
        .filter(|((s, t), _)| s == t)
        .flat_map(|(_, ps)| ps)
        .collect();
    out.sort();
    out
}

/// Echelon basis of `span{d - rot(d) : d closed, |d| <= max_len}`.
pub fn cyclic_span_basis(table: &ArrowTable, max_len: usize) -> Echelon<Path> {
    let mut basis = Echelon::new(false);
    for (i, d) in closed_paths(table, max_len).into_iter().enumerate() {
        let r = d.rotate();
        if r == d {
            continue;
        }
        let row: SparseRow<Path> = [(d, int(1)), (r, int(-1))].into_iter().collect();
        basis.insert(row, i);
    }
    basis
}
