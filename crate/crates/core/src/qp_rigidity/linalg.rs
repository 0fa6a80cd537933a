//! Sparse row reduction over the rationals. Each stored row has a distinct
//! pivot, its largest key, normalized to coefficient one.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::paths::Coefficient;

pub type SparseRow<K> = BTreeMap<K, Coefficient>;

/// `row -= factor * other`, dropping zeros.
pub fn axpy<K: Ord + Clone>(row: &mut SparseRow<K>, factor: &Coefficient, other: &SparseRow<K>) {
    for (k, c) in other {
        let delta = factor * c;
        match row.get_mut(k) {
            Some(x) => {
                *x -= delta;
                if x.is_zero() {
                    row.remove(k);
                }
            }
            None => {
                row.insert(k.clone(), -delta);
            }
        }
    }
}

#[derive(Debug, Clone)]
struct StoredRow<K> {
    row: SparseRow<K>,
    /// Combination of inserted rows (by origin id) equal to `row`.
    origin: SparseRow<usize>,
}

#[derive(Debug, Clone)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, StoredRow<K>>,
    track: bool,
}

impl<K: Ord + Clone> Echelon<K> {
    /// With `track`, every stored row remembers how it was built from the
    /// inserted rows, so that members can be expressed in terms of them.
    pub fn new(track: bool) -> Self {
        Echelon {
            rows: BTreeMap::new(),
            track,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    fn reduce_with(
        &self,
        mut row: SparseRow<K>,
        mut origin: Option<&mut SparseRow<usize>>,
    ) -> SparseRow<K> {
        while let Some(lead) = row.keys().next_back().cloned() {
            let Some(stored) = self.rows.get(&lead) else {
                break;
            };
            let f = row[&lead].clone();
            axpy(&mut row, &f, &stored.row);
            if let Some(o) = origin.as_deref_mut() {
                axpy(o, &f, &stored.origin);
            }
        }
        row
    }

    /// Inserts a row; returns whether it was independent of the stored rows.
    pub fn insert(&mut self, row: SparseRow<K>, origin_id: usize) -> bool {
        let mut origin = SparseRow::new();
        if self.track {
            origin.insert(origin_id, Coefficient::one());
        }
        let mut row = self.reduce_with(row, self.track.then_some(&mut origin));
        let Some((lead, c)) = row.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = c.recip();
        for x in row.values_mut() {
            *x *= &inv;
        }
        for x in origin.values_mut() {
            *x *= &inv;
        }
        self.rows.insert(lead, StoredRow { row, origin });
        true
    }

    /// The part of `row` left after eliminating stored pivots; zero iff `row` is in the span.
    pub fn residual(&self, row: SparseRow<K>) -> SparseRow<K> {
        self.reduce_with(row, None)
    }

    pub fn contains(&self, row: SparseRow<K>) -> bool {
        self.residual(row).is_empty()
    }

    /// Coefficients `x_i` with `row = Σ x_i · inserted_i`, or the residual.
    pub fn express(&self, row: SparseRow<K>) -> Result<SparseRow<usize>, SparseRow<K>> {
        assert!(self.track, "express needs a tracking echelon");
        let mut origin = SparseRow::new();
        let rest = self.reduce_with(row, Some(&mut origin));
        if !rest.is_empty() {
            return Err(rest);
        }
        for x in origin.values_mut() {
            *x = -x.clone();
        }
        Ok(origin)
    }
}
