use serde::Serialize;
use thiserror::Error;

use crate::bfz_quiver::Quiver;
use crate::cartan_graph::SheetId;
use crate::coxeter_words::Index;
use crate::cylinder_dimer::{Face, Orientation};

use super::paths::{cyclic_derivative, int, ArrowId, ArrowTable, Path, PathCombination};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PotentialError {
    #[error("face {vertices:?} on sheet {sheet} is not oriented")]
    Unoriented {
        sheet: SheetId,
        vertices: Vec<Index>,
    },
    #[error("face arrow {0} -> {1} is not an arrow of the quiver")]
    MissingArrow(Index, Index),
}

impl PotentialError {
    pub fn code(&self) -> &'static str {
        match self {
            PotentialError::Unoriented { .. } => "potential.unoriented",
            PotentialError::MissingArrow(..) => "potential.missing_arrow",
        }
    }
}

/// Where a potential term came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PotentialTerm {
    pub sheet: SheetId,
    pub orientation: Orientation,
    pub vertices: Vec<Index>,
    pub cycle: Vec<ArrowId>,
    pub coefficient: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Potential {
    pub combination: PathCombination,
    pub terms: Vec<PotentialTerm>,
}

impl Potential {
    /// A potential given directly as cycles with integer coefficients.
    pub fn from_cycles(cycles: &[(i64, Vec<ArrowId>)]) -> Self {
        let combination = cycles
            .iter()
            .map(|(c, p)| (Path(p.clone()), int(*c)))
            .collect();
        Potential {
            combination,
            terms: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.combination.is_zero()
    }

    /// Longest cycle in the potential.
    pub fn max_len(&self) -> usize {
        self.combination.max_len()
    }
}

/// `S = Σ clockwise faces - Σ anticlockwise faces`.
pub fn superpotential(faces: &[Face], table: &ArrowTable) -> Result<Potential, PotentialError> {
    let mut p = Potential::default();
    for f in faces {
        let orientation = f.orientation.ok_or_else(|| PotentialError::Unoriented {
            sheet: f.sheet,
            vertices: f.vertices.clone(),
        })?;
        let cycle = f
            .arrows
            .iter()
            .map(|&(s, t)| table.id(s, t).ok_or(PotentialError::MissingArrow(s, t)))
            .collect::<Result<Vec<_>, _>>()?;
        let coefficient = match orientation {
            Orientation::Clockwise => 1,
            Orientation::Anticlockwise => -1,
        };
        p.combination
            .add_term(Path(cycle.clone()), int(coefficient));
        p.terms.push(PotentialTerm {
            sheet: f.sheet,
            orientation,
            vertices: f.vertices.clone(),
            cycle,
            coefficient,
        });
    }
    Ok(p)
}

/// `∂_a S` for one arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub arrow: ArrowId,
    pub combination: PathCombination,
}

/// One generator per arrow; with `include_boundary` off, arrows between two
/// frozen vertices are skipped.
pub fn jacobian_generators(
    s: &Potential,
    table: &ArrowTable,
    q: &Quiver,
    include_boundary: bool,
) -> Vec<Generator> {
    (0..table.len())
        .filter(|&a| {
            let (x, y) = table.arrow(a);
            include_boundary || !(q.is_frozen(x) && q.is_frozen(y))
        })
        .map(|a| Generator {
            arrow: a,
            combination: cyclic_derivative(a, &s.combination),
        })
        .collect()
}
