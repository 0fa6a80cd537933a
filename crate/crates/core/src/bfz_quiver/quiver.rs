use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::cartan_graph::Label;
use crate::coxeter_words::{Index, ShuffledWord, SuccessorMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Vertex {
    pub k: Index,
    pub letter: Label,
    pub frozen: bool,
}

/// A quiver on indexed vertices with arrow multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Quiver {
    vertices: BTreeMap<Index, Vertex>,
    arrows: BTreeMap<(Index, Index), u32>,
}

impl Quiver {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        Quiver {
            vertices: vertices.into_iter().map(|v| (v.k, v)).collect(),
            arrows: BTreeMap::new(),
        }
    }

    /// Arrow-free quiver on the indices of `w`, frozen off `e(i)`.
    pub fn on_word(w: &ShuffledWord, s: &SuccessorMap) -> Self {
        Quiver::new(w.indices().into_iter().map(|k| Vertex {
            k,
            letter: w.letter(k),
            frozen: !s.is_exchangeable(k),
        }))
    }

    pub fn vertex(&self, k: Index) -> Option<&Vertex> {
        self.vertices.get(&k)
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Vertex> {
        self.vertices.values()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn letter(&self, k: Index) -> Label {
        self.vertices[&k].letter
    }

    pub fn is_frozen(&self, k: Index) -> bool {
        self.vertices[&k].frozen
    }

    pub fn set_frozen(&mut self, k: Index, frozen: bool) {
        if let Some(v) = self.vertices.get_mut(&k) {
            v.frozen = frozen;
        }
    }

    pub fn add_arrow(&mut self, source: Index, target: Index) {
        assert!(source != target, "loop at {source}");
        assert!(self.vertices.contains_key(&source) && self.vertices.contains_key(&target));
        *self.arrows.entry((source, target)).or_insert(0) += 1;
    }

    /// Removes one copy of the arrow; returns whether it was present.
    pub fn remove_arrow(&mut self, source: Index, target: Index) -> bool {
        match self.arrows.get_mut(&(source, target)) {
            Some(m) if *m > 1 => {
                *m -= 1;
                true
            }
            Some(_) => {
                self.arrows.remove(&(source, target));
                true
            }
            None => false,
        }
    }

    pub fn multiplicity(&self, source: Index, target: Index) -> u32 {
        self.arrows.get(&(source, target)).copied().unwrap_or(0)
    }

    pub fn has_arrow(&self, source: Index, target: Index) -> bool {
        self.arrows.contains_key(&(source, target))
    }

    /// `(source, target, multiplicity)` sorted by endpoints.
    pub fn arrows(&self) -> impl Iterator<Item = (Index, Index, u32)> + '_ {
        self.arrows.iter().map(|(&(s, t), &m)| (s, t, m))
    }

    /// Arrows repeated by multiplicity, sorted. Positions in this list are arrow ids.
    pub fn arrow_list(&self) -> Vec<(Index, Index)> {
        self.arrows
            .iter()
            .flat_map(|(&a, &m)| std::iter::repeat_n(a, m as usize))
            .collect()
    }

    pub fn arrow_set(&self) -> BTreeSet<(Index, Index)> {
        self.arrows.keys().copied().collect()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.values().map(|&m| m as usize).sum()
    }

    /// Indices on each string (letter), bottom to top.
    pub fn strings(&self) -> BTreeMap<Label, Vec<Index>> {
        let mut out: BTreeMap<Label, Vec<Index>> = BTreeMap::new();
        for v in self.vertices.values() {
            out.entry(v.letter).or_default().push(v.k);
        }
        out
    }

    /// Pairs `{k, l}` joined by arrows in both directions.
    pub fn two_cycles(&self) -> Vec<(Index, Index)> {
        self.arrows
            .keys()
            .filter(|&&(s, t)| s < t && self.has_arrow(t, s))
            .copied()
            .collect()
    }

    /// The same quiver with every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        let mut q = Quiver::new(self.vertices.values().copied());
        for (&(s, t), &m) in &self.arrows {
            q.arrows.insert((t, s), m);
        }
        q
    }
}
