//! JSON, DOT and TikZ renderings. All output is deterministic.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::bfz_quiver::{ExchangeMatrix, Quiver, Vertex};
use crate::cartan_graph::{Label, SheetId};
use crate::coxeter_words::Index;
use crate::cylinder_dimer::{ArrowClass, Embedding, Face, Orientation};
use crate::qp_rigidity::{ArrowTable, Potential};

pub fn quiver_json(q: &Quiver) -> Value {
    let vertices: Vec<Value> = q
        .vertices()
        .map(|v| json!({"k": v.k, "letter": v.letter, "frozen": v.frozen}))
        .collect();
    let arrows: Vec<Value> = q
        .arrow_list()
        .into_iter()
        .map(|(s, t)| json!([s, t]))
        .collect();
    json!({"vertices": vertices, "arrows": arrows})
}

pub fn matrix_json(m: &ExchangeMatrix) -> Value {
    json!({"rows": m.rows, "columns": m.columns, "entries": m.entries})
}

fn orientation_name(o: Option<Orientation>) -> Value {
    match o {
        Some(Orientation::Clockwise) => json!("cw"),
        Some(Orientation::Anticlockwise) => json!("ccw"),
        None => Value::Null,
    }
}

pub fn faces_json(faces: &[Face]) -> Value {
    Value::Array(
        faces
            .iter()
            .map(|f| {
                json!({
                    "sheet": [f.sheet.0, f.sheet.1],
                    "edge": f.edge.map(|(a, b)| json!([a, b])).unwrap_or(Value::Null),
                    "vertices": f.vertices,
                    "orientation": orientation_name(f.orientation),
                })
            })
            .collect(),
    )
}

pub fn embedding_json(e: &Embedding) -> Value {
    let placement: Vec<Value> = e
        .placement
        .iter()
        .map(|(k, p)| json!({"k": k, "string": p.string, "level": p.level}))
        .collect();
    let arrows: Vec<Value> = e
        .classes
        .iter()
        .map(|(&(s, t), c)| match c {
            ArrowClass::Vertical { string } => {
                json!({"arrow": [s, t], "kind": "vertical", "string": string})
            }
            ArrowClass::Inclined { edge, sheet } => json!({
                "arrow": [s, t],
                "kind": "inclined",
                "edge": [edge.0, edge.1],
                "sheet": [sheet.0, sheet.1],
            }),
        })
        .collect();
    let sheets: Vec<Value> = e
        .decomposition
        .branches
        .iter()
        .map(|b| json!({"sheet": [b.id().0, b.id().1], "strings": b.vertices}))
        .collect();
    let spines: Vec<Label> = e.decomposition.spines.iter().copied().collect();
    json!({"placement": placement, "arrows": arrows, "sheets": sheets, "spines": spines})
}

pub fn potential_json(s: &Potential, table: &ArrowTable) -> Value {
    Value::Array(
        s.combination
            .terms()
            .map(|(p, c)| {
                let arrows: Vec<Value> = p.0.iter().map(|&a| json!(table.arrow(a))).collect();
                json!({"coefficient": c.to_string(), "cycle": p.0, "arrows": arrows})
            })
            .collect(),
    )
}

const COLORS: [&str; 8] = [
    "forestgreen",
    "red",
    "blue",
    "orange",
    "purple",
    "brown",
    "cyan",
    "magenta",
];

fn node_name(k: Index) -> String {
    if k < 0 {
        format!("m{}", -k)
    } else {
        format!("v{k}")
    }
}

/// DOT source: frozen vertices as boxes, mutable as circles; inclined arrows
/// grouped and colored by sheet, vertical arrows black.
pub fn to_dot(q: &Quiver, e: &Embedding) -> String {
    let mut out = String::from("digraph bfz {\n  node [fontname=\"Helvetica\"];\n");
    for v in q.vertices() {
        let shape = if v.frozen { "box" } else { "circle" };
        let p = e.placement[&v.k];
        let _ = writeln!(
            out,
            "  {} [label=\"{}\", shape={shape}, string={}, level={}];",
            node_name(v.k),
            v.k,
            p.string,
            p.level
        );
    }
    let mut by_sheet: BTreeMap<SheetId, Vec<(Index, Index)>> = BTreeMap::new();
    let mut vertical = Vec::new();
    for (&(s, t), c) in &e.classes {
        match c {
            ArrowClass::Vertical { .. } => vertical.push((s, t)),
            ArrowClass::Inclined { sheet, .. } => by_sheet.entry(*sheet).or_default().push((s, t)),
        }
    }
    for (i, sheet) in e.sheets().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let _ = writeln!(out, "  subgraph sheet_{}_{} {{", sheet.0, sheet.1);
        let _ = writeln!(out, "    edge [color={color}];");
        for &(s, t) in by_sheet.get(&sheet).map(Vec::as_slice).unwrap_or(&[]) {
            for _ in 0..q.multiplicity(s, t) {
                let _ = writeln!(out, "    {} -> {};", node_name(s), node_name(t));
            }
        }
        out.push_str("  }\n");
    }
    for (s, t) in vertical {
        for _ in 0..q.multiplicity(s, t) {
            let _ = writeln!(out, "  {} -> {} [color=black];", node_name(s), node_name(t));
        }
    }
    out.push_str("}\n");
    out
}

/// Horizontal position of each string: strings in depth-first order from
/// the smallest label, one unit apart.
fn string_columns(e: &Embedding) -> BTreeMap<Label, i64> {
    let mut cols = BTreeMap::new();
    for b in &e.decomposition.branches {
        for &a in &b.vertices {
            let next = cols.len() as i64;
            cols.entry(a).or_insert(next);
        }
    }
    for &a in e.strings.keys() {
        let next = cols.len() as i64;
        cols.entry(a).or_insert(next);
    }
    cols
}

pub fn to_tikz(q: &Quiver, e: &Embedding) -> String {
    let cols = string_columns(e);
    let mut out = String::from("\\begin{tikzpicture}[>=stealth, x=1.6cm, y=0.8cm]\n");
    for v in q.vertices() {
        let p = e.placement[&v.k];
        let style = if v.frozen {
            "draw, rectangle"
        } else {
            "draw, circle"
        };
        let _ = writeln!(
            out,
            "  \\node[{style}, inner sep=1.5pt] ({}) at ({}, {}) {{${}$}};",
            node_name(v.k),
            cols[&p.string],
            p.level,
            v.k
        );
    }
    let sheet_color: BTreeMap<SheetId, &str> = e
        .sheets()
        .enumerate()
        .map(|(i, s)| (s, COLORS[i % COLORS.len()]))
        .collect();
    for (&(s, t), c) in &e.classes {
        let color = match c {
            ArrowClass::Vertical { .. } => "black",
            ArrowClass::Inclined { sheet, .. } => sheet_color[sheet],
        };
        let dashed = if q.is_frozen(s) && q.is_frozen(t) {
            ", dashed"
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  \\draw[->, {color}{dashed}] ({}) -- ({});",
            node_name(s),
            node_name(t)
        );
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixtureError {
    #[error("invalid fixture document: {0}")]
    Parse(String),
    #[error("fixture arrow {0} -> {1} has an unknown endpoint or is a loop")]
    BadArrow(Index, Index),
    #[error("potential cycle {0:?} does not follow arrows of the quiver")]
    BadCycle(Vec<Index>),
}

impl FixtureError {
    pub fn code(&self) -> &'static str {
        match self {
            FixtureError::Parse(_) => "fixture.parse",
            FixtureError::BadArrow(..) => "fixture.bad_arrow",
            FixtureError::BadCycle(_) => "fixture.bad_cycle",
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuiverDoc {
    pub vertices: Vec<VertexDoc>,
    pub arrows: Vec<(Index, Index)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexDoc {
    pub k: Index,
    pub letter: Label,
    pub frozen: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PotentialTermDoc {
    pub coefficient: i64,
    /// Vertices of the cycle in order; the closing arrow back to the first is implicit.
    pub cycle: Vec<Index>,
}

/// A quiver with a hand-written potential.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Fixture {
    pub quiver: QuiverDoc,
    #[serde(default)]
    pub potential: Vec<PotentialTermDoc>,
    #[serde(default)]
    pub max_cycle_len: Option<usize>,
    #[serde(default)]
    pub trunc_degree: Option<usize>,
}

impl QuiverDoc {
    pub fn to_quiver(&self) -> Result<Quiver, FixtureError> {
        let mut q = Quiver::new(self.vertices.iter().map(|v| Vertex {
            k: v.k,
            letter: v.letter,
            frozen: v.frozen,
        }));
        for &(s, t) in &self.arrows {
            if s == t || q.vertex(s).is_none() || q.vertex(t).is_none() {
                return Err(FixtureError::BadArrow(s, t));
            }
            q.add_arrow(s, t);
        }
        Ok(q)
    }
}

impl Fixture {
    pub fn parse(text: &str) -> Result<Self, FixtureError> {
        serde_json::from_str(text).map_err(|e| FixtureError::Parse(e.to_string()))
    }

    pub fn potential(&self, table: &ArrowTable) -> Result<Potential, FixtureError> {
        let mut cycles = Vec::new();
        for term in &self.potential {
            let n = term.cycle.len();
            let ids = (0..n)
                .map(|i| table.id(term.cycle[i], term.cycle[(i + 1) % n]))
                .collect::<Option<Vec<_>>>()
                .filter(|ids| !ids.is_empty())
                .ok_or_else(|| FixtureError::BadCycle(term.cycle.clone()))?;
            cycles.push((term.coefficient, ids));
        }
        Ok(Potential::from_cycles(&cycles))
    }
}
