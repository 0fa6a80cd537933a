//! The underlying graph of a simply-laced Cartan datum.
//!
//! Vertices are labelled `1..=r`. The graph must be a tree: the cylinder
//! construction and the face arguments downstream assume no loops and no
//! cycles, so anything else is rejected at construction time.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A vertex label of the graph, i.e. the index of a simple reflection.
pub type Label = u32;

/// Raw graph document as it appears in job files:
/// `{"vertices":[1,2,3],"edges":[[1,2],[2,3]]}`.
///
/// Edges are kept as loose integer arrays so that malformed and weighted
/// edges produce a validation error rather than a deserialization error.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub vertices: Vec<i64>,
    pub edges: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("duplicate vertex label {0}")]
    DuplicateVertex(i64),
    #[error("vertex labels must be exactly 1..={expected}, found {found:?}")]
    BadLabels { expected: usize, found: Vec<i64> },
    #[error("edge {0:?} must be a pair of vertex labels")]
    MalformedEdge(Vec<i64>),
    #[error("edge {0:?} carries a weight; only simply-laced (symmetric) Cartan data is supported")]
    NotSimplyLaced(Vec<i64>),
    #[error("edge [{0}, {1}] references an unknown vertex")]
    UnknownVertex(i64, i64),
    #[error("self-loop at vertex {0}")]
    SelfLoop(i64),
    #[error("more than one edge between {0} and {1}")]
    MultiEdge(i64, i64),
    #[error("cycle detected: edge [{0}, {1}] closes a cycle")]
    Cycle(Label, Label),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid graph document: {0}")]
    Parse(String),
}

impl GraphError {
    /// Stable machine-readable code for diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            GraphError::Empty => "graph.empty",
            GraphError::DuplicateVertex(_) => "graph.duplicate_vertex",
            GraphError::BadLabels { .. } => "graph.bad_labels",
            GraphError::MalformedEdge(_) => "graph.malformed_edge",
            GraphError::NotSimplyLaced(_) => "graph.not_simply_laced",
            GraphError::UnknownVertex(..) => "graph.unknown_vertex",
            GraphError::SelfLoop(_) => "graph.self_loop",
            GraphError::MultiEdge(..) => "graph.multi_edge",
            GraphError::Cycle(..) => "graph.cycle",
            GraphError::Disconnected => "graph.disconnected",
            GraphError::Parse(_) => "graph.parse",
        }
    }
}

/// A finite tree with vertices `1..=rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    // neighbours[a - 1] = neighbours of vertex a
    neighbours: Vec<BTreeSet<Label>>,
}

impl LabeledGraph {
    /// Builds and validates a tree on `1..=rank` from an edge list.
    pub fn new(rank: usize, edges: &[(Label, Label)]) -> Result<Self, GraphError> {
        if rank == 0 {
            return Err(GraphError::Empty);
        }
        let mut neighbours = vec![BTreeSet::new(); rank];
        // Union-find to catch the first edge that closes a cycle.
        let mut parent: Vec<usize> = (0..rank).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in edges {
            if a == 0 || b == 0 || a as usize > rank || b as usize > rank {
                return Err(GraphError::UnknownVertex(a as i64, b as i64));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a as i64));
            }
            if neighbours[a as usize - 1].contains(&b) {
                return Err(GraphError::MultiEdge(a as i64, b as i64));
            }
            let (ra, rb) = (
                find(&mut parent, a as usize - 1),
                find(&mut parent, b as usize - 1),
            );
            if ra == rb {
                return Err(GraphError::Cycle(a, b));
            }
            parent[ra] = rb;
            neighbours[a as usize - 1].insert(b);
            neighbours[b as usize - 1].insert(a);
        }
        let root = find(&mut parent, 0);
        if (1..rank).any(|x| find(&mut parent, x) != root) {
            return Err(GraphError::Disconnected);
        }
        Ok(LabeledGraph { neighbours })
    }

    /// Validates a raw graph document.
    pub fn from_spec(spec: &GraphSpec) -> Result<Self, GraphError> {
        if spec.vertices.is_empty() {
            return Err(GraphError::Empty);
        }
        let mut seen = BTreeSet::new();
        for &v in &spec.vertices {
            if !seen.insert(v) {
                return Err(GraphError::DuplicateVertex(v));
            }
        }
        let rank = spec.vertices.len();
        let expected: BTreeSet<i64> = (1..=rank as i64).collect();
        if seen != expected {
            let mut found = spec.vertices.clone();
            found.sort_unstable();
            return Err(GraphError::BadLabels {
                expected: rank,
                found,
            });
        }
        let mut edges = Vec::with_capacity(spec.edges.len());
        for e in &spec.edges {
            match e.as_slice() {
                [a, b] => {
                    if !seen.contains(a) || !seen.contains(b) {
                        return Err(GraphError::UnknownVertex(*a, *b));
                    }
                    edges.push((*a as Label, *b as Label));
                }
                [_, _, 1] => {
                    edges.push((e[0] as Label, e[1] as Label));
                }
                [_, _, _] => return Err(GraphError::NotSimplyLaced(e.clone())),
                _ => return Err(GraphError::MalformedEdge(e.clone())),
            }
        }
        LabeledGraph::new(rank, &edges)
    }

    /// The path graph `1 - 2 - ... - r` (type A).
    pub fn path(rank: usize) -> Self {
        let edges: Vec<_> = (1..rank as Label).map(|a| (a, a + 1)).collect();
        LabeledGraph::new(rank, &edges).expect("path graphs are trees")
    }

    pub fn rank(&self) -> usize {
        self.neighbours.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Label> + '_ {
        1..=self.rank() as Label
    }

    /// Edges as `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(Label, Label)> {
        let mut out = Vec::new();
        for a in self.vertices() {
            for &b in self.neighbours(a) {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn neighbours(&self, a: Label) -> &BTreeSet<Label> {
        &self.neighbours[a as usize - 1]
    }

    pub fn degree(&self, a: Label) -> usize {
        self.neighbours(a).len()
    }

    pub fn contains(&self, a: Label) -> bool {
        a >= 1 && (a as usize) <= self.rank()
    }

    pub fn are_adjacent(&self, a: Label, b: Label) -> bool {
        self.contains(a) && self.contains(b) && self.neighbours(a).contains(&b)
    }

    pub fn to_spec(&self) -> GraphSpec {
        GraphSpec {
            vertices: self.vertices().map(i64::from).collect(),
            edges: self
                .edges()
                .into_iter()
                .map(|(a, b)| vec![a as i64, b as i64])
                .collect(),
        }
    }
}

/// Parses a JSON graph document and validates it.
pub fn parse_graph(text: &str) -> Result<LabeledGraph, GraphError> {
    let spec: GraphSpec =
        serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
    LabeledGraph::from_spec(&spec)
}

/// Symmetric generalized Cartan matrix `2I - adjacency`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<i32>,
}

impl CartanMatrix {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry `a_{ij}`, 1-based labels.
    pub fn get(&self, i: Label, j: Label) -> i32 {
        self.entries[(i as usize - 1) * self.rank + (j as usize - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i32>> {
        self.entries.chunks(self.rank).map(|r| r.to_vec()).collect()
    }
}

pub fn cartan_matrix(g: &LabeledGraph) -> CartanMatrix {
    let rank = g.rank();
    let mut entries = vec![0; rank * rank];
    for a in g.vertices() {
        let i = a as usize - 1;
        entries[i * rank + i] = 2;
        for &b in g.neighbours(a) {
            entries[i * rank + (b as usize - 1)] = -1;
        }
    }
    CartanMatrix { rank, entries }
}

/// Identifies a sheet by the labels of its branch endpoints `(start, end)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SheetId(pub Label, pub Label);

impl fmt::Display for SheetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A maximal path between special vertices; the cylinder over it is a sheet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Branch {
    /// Vertices in order, starting at the endpoint with the smaller label.
    pub vertices: Vec<Label>,
}

impl Branch {
    pub fn id(&self) -> SheetId {
        SheetId(self.vertices[0], *self.vertices.last().unwrap())
    }

    /// Number of edges on the branch.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() < 2
    }

    pub fn position(&self, a: Label) -> Option<usize> {
        self.vertices.iter().position(|&x| x == a)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Label, Label)> + '_ {
        self.vertices
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchDecomposition {
    pub endpoints: BTreeSet<Label>,
    /// Ramification points (degree at least three); the strings over them are spines.
    pub spines: BTreeSet<Label>,
    pub branches: Vec<Branch>,
    #[serde(skip)]
    edge_to_branch: BTreeMap<(Label, Label), usize>,
}

impl BranchDecomposition {
    pub fn special_vertices(&self) -> BTreeSet<Label> {
        self.endpoints.union(&self.spines).copied().collect()
    }

    /// Index of the branch containing the edge `{a, b}`.
    pub fn branch_of_edge(&self, a: Label, b: Label) -> Option<usize> {
        self.edge_to_branch.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn is_spine(&self, a: Label) -> bool {
        self.spines.contains(&a)
    }

    /// Branches whose sheet contains the string over `a`.
    pub fn branches_through(&self, a: Label) -> Vec<usize> {
        (0..self.branches.len())
            .filter(|&i| self.branches[i].position(a).is_some())
            .collect()
    }
}

pub fn branch_decomposition(g: &LabeledGraph) -> BranchDecomposition {
    let endpoints: BTreeSet<Label> = g.vertices().filter(|&a| g.degree(a) == 1).collect();
    let spines: BTreeSet<Label> = g.vertices().filter(|&a| g.degree(a) >= 3).collect();
    let special = |a: Label| g.degree(a) != 2;

    let mut branches = Vec::new();
    let mut edge_to_branch = BTreeMap::new();
    for start in g.vertices().filter(|&a| special(a)) {
        for &first in g.neighbours(start) {
            let key = (start.min(first), start.max(first));
            if edge_to_branch.contains_key(&key) {
                continue;
            }
            let mut path = vec![start, first];
            while !special(*path.last().unwrap()) {
                let cur = *path.last().unwrap();
                let prev = path[path.len() - 2];
                let next = *g.neighbours(cur).iter().find(|&&x| x != prev).unwrap();
                path.push(next);
            }
            if path[0] > *path.last().unwrap() {
                path.reverse();
            }
            let idx = branches.len();
            for w in path.windows(2) {
                edge_to_branch.insert((w[0].min(w[1]), w[0].max(w[1])), idx);
            }
            branches.push(Branch { vertices: path });
        }
    }
    branches.sort_by_key(|b| b.id());
    let mut edge_to_branch = BTreeMap::new();
    for (i, b) in branches.iter().enumerate() {
        for e in b.edges() {
            edge_to_branch.insert(e, i);
        }
    }
    BranchDecomposition {
        endpoints,
        spines,
        branches,
        edge_to_branch,
    }
}
