//! Paths as arrow-id sequences and exact-rational combinations of them.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bfz_quiver::Quiver;
use crate::coxeter_words::Index;

pub type ArrowId = usize;
pub type Coefficient = BigRational;

/// Arrow ids are positions in the sorted arrow list of the quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowTable {
    arrows: Vec<(Index, Index)>,
    out: BTreeMap<Index, Vec<ArrowId>>,
    vertices: Vec<Index>,
}

impl ArrowTable {
    pub fn new(q: &Quiver) -> Self {
        let arrows = q.arrow_list();
        let mut out: BTreeMap<Index, Vec<ArrowId>> = BTreeMap::new();
        for (i, &(s, _)) in arrows.iter().enumerate() {
            out.entry(s).or_default().push(i);
        }
        ArrowTable {
            arrows,
            out,
            vertices: q.vertices().map(|v| v.k).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrow(&self, a: ArrowId) -> (Index, Index) {
        self.arrows[a]
    }

    pub fn source(&self, a: ArrowId) -> Index {
        self.arrows[a].0
    }

    pub fn target(&self, a: ArrowId) -> Index {
        self.arrows[a].1
    }

    pub fn vertices(&self) -> &[Index] {
        &self.vertices
    }

    /// First id of the arrow `s -> t`.
    pub fn id(&self, s: Index, t: Index) -> Option<ArrowId> {
        self.out
            .get(&s)?
            .iter()
            .copied()
            .find(|&a| self.arrows[a].1 == t)
    }

    pub fn outgoing(&self, v: Index) -> &[ArrowId] {
        self.out.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn is_path(&self, p: &[ArrowId]) -> bool {
        p.iter().all(|&a| a < self.len())
            && p.windows(2).all(|w| self.target(w[0]) == self.source(w[1]))
    }

    pub fn is_cycle(&self, p: &[ArrowId]) -> bool {
        !p.is_empty() && self.is_path(p) && self.target(p[p.len() - 1]) == self.source(p[0])
    }

    /// Vertices visited by a path, starting vertex included.
    pub fn path_vertices(&self, p: &[ArrowId]) -> Vec<Index> {
        let mut out: Vec<Index> = p.first().map(|&a| self.source(a)).into_iter().collect();
        out.extend(p.iter().map(|&a| self.target(a)));
        out
    }

    /// All paths of length `1..=max_len` from each vertex, keyed by `(start, end)`.
    pub fn paths_by_endpoints(&self, max_len: usize) -> BTreeMap<(Index, Index), Vec<Path>> {
        let mut out: BTreeMap<(Index, Index), Vec<Path>> = BTreeMap::new();
        for &v in &self.vertices {
            let mut frontier: Vec<(Vec<ArrowId>, Index)> = vec![(Vec::new(), v)];
            for _ in 0..max_len {
                let mut next = Vec::new();
                for (p, end) in &frontier {
                    for &a in self.outgoing(*end) {
                        let mut q = p.clone();
                        q.push(a);
                        let t = self.target(a);
                        out.entry((v, t)).or_default().push(Path(q.clone()));
                        next.push((q, t));
                    }
                }
                frontier = next;
            }
        }
        out
    }
}

/// A path; ordered by length, then lexicographically by arrow ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Path(pub Vec<ArrowId>);

impl Path {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &[ArrowId]) -> Path {
        let mut v = self.0.clone();
        v.extend_from_slice(other);
        Path(v)
    }

    /// Moves the first arrow to the end.
    pub fn rotate(&self) -> Path {
        let mut v = self.0.clone();
        if !v.is_empty() {
            v.rotate_left(1);
        }
        Path(v)
    }

    /// The least rotation: the canonical representative of the cycle class.
    pub fn canonical_rotation(&self) -> Path {
        let n = self.0.len();
        let mut best = self.0.clone();
        for i in 1..n {
            let mut v = self.0.clone();
            v.rotate_left(i);
            if v < best {
                best = v;
            }
        }
        Path(best)
    }

    /// The distinct rotations, starting with `self`, each the rotation of the previous.
    pub fn rotations(&self) -> Vec<Path> {
        let mut out = vec![self.clone()];
        loop {
            let next = out.last().unwrap().rotate();
            if next == *self {
                return out;
            }
            out.push(next);
        }
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// A finitely supported rational combination of paths; no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PathCombination {
    terms: BTreeMap<Path, Coefficient>,
}

impl PathCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(p: Path) -> Self {
        let mut c = Self::zero();
        c.add_term(p, Coefficient::one());
        c
    }

    pub fn add_term(&mut self, p: Path, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&p);
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &PathCombination, factor: &Coefficient) {
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c * factor);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Coefficient)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Path) -> Coefficient {
        self.terms.get(p).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Path::len).max().unwrap_or(0)
    }

    pub fn min_len(&self) -> usize {
        self.terms.keys().map(Path::len).min().unwrap_or(0)
    }

    /// All terms have the same length.
    pub fn is_homogeneous(&self) -> bool {
        self.terms
            .keys()
            .map(Path::len)
            .collect::<BTreeSet<_>>()
            .len()
            <= 1
    }

    /// `left · self · right`.
    pub fn sandwich(&self, left: &[ArrowId], right: &[ArrowId]) -> PathCombination {
        let mut out = PathCombination::zero();
        for (p, c) in &self.terms {
            let mut v = left.to_vec();
            v.extend_from_slice(&p.0);
            v.extend_from_slice(right);
            out.add_term(Path(v), c.clone());
        }
        out
    }
}

impl FromIterator<(Path, Coefficient)> for PathCombination {
    fn from_iter<T: IntoIterator<Item = (Path, Coefficient)>>(iter: T) -> Self {
        let mut c = PathCombination::zero();
        for (p, x) in iter {
            c.add_term(p, x);
        }
        c
    }
}

/// `∂_a` of a combination of cycles: each occurrence of `a` contributes the
/// rest of the cycle read from just after it.
pub fn cyclic_derivative(a: ArrowId, p: &PathCombination) -> PathCombination {
    let mut out = PathCombination::zero();
    for (cycle, c) in p.terms() {
        let v = &cycle.0;
        for i in (0..v.len()).filter(|&i| v[i] == a) {
            let mut rest = v[i + 1..].to_vec();
            rest.extend_from_slice(&v[..i]);
            out.add_term(Path(rest), c.clone());
        }
    }
    out
}

pub fn int(x: i64) -> Coefficient {
    Coefficient::from_integer(x.into())
}
