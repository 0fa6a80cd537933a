//! Rigidity up to a degree bound: each short cycle is tested for membership
//! in (rotation differences) + (Jacobian ideal), both truncated.
//!
//! Membership is decided on necklaces: a closed combination lies in the span
//! of rotation differences iff its coefficients sum to zero on every
//! rotation class, so projecting onto classes turns the question into a
//! single echelon solve against the projected closed ideal elements.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::bfz_quiver::Quiver;
use crate::coxeter_words::Index;

use super::cycles::{enumerate_cycles, Cycle};
use super::ideal::{ideal_elements, IdealElement, IdealError};
use super::linalg::{Echelon, SparseRow};
use super::paths::{ArrowId, ArrowTable, Coefficient, Path, PathCombination};
use super::potential::{jacobian_generators, Generator, Potential};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RigidityError {
    #[error("truncation degree {trunc_degree} is below the cycle length bound {max_cycle_len}")]
    InconsistentBounds {
        max_cycle_len: usize,
        trunc_degree: usize,
    },
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

impl RigidityError {
    pub fn code(&self) -> &'static str {
        match self {
            RigidityError::InconsistentBounds { .. } => "rigidity.inconsistent_bounds",
            RigidityError::Ideal(_) => "rigidity.degree_too_small",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Rigid,
    /// Some cycle is outside cyclic span + ideal, and the generators are
    /// homogeneous, so no higher degree can change that.
    NotRigid,
    /// Some cycle failed at every degree tried, but the generators mix
    /// lengths, so a higher degree might still succeed.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    pub coefficient: String,
    pub path: Vec<ArrowId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealTerm {
    pub coefficient: String,
    pub left: Vec<ArrowId>,
    /// The arrow `a` of the generator `∂_a S`.
    pub generator: ArrowId,
    pub right: Vec<ArrowId>,
}

/// `cycle = Σ cyclic[i].c · (d_i - rot(d_i)) + Σ ideal[j].c · left_j · ∂_{a_j} S · right_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub cyclic: Vec<Term>,
    pub ideal: Vec<IdealTerm>,
}

fn fmt_coef(c: &Coefficient) -> String {
    c.to_string()
}

pub fn parse_coef(s: &str) -> Option<Coefficient> {
    s.parse().ok()
}

impl Certificate {
    /// Re-expands both sums and compares with the cycle.
    pub fn verify(&self, cycle: &[ArrowId], s: &Potential) -> bool {
        let mut total = PathCombination::zero();
        for t in &self.cyclic {
            let Some(c) = parse_coef(&t.coefficient) else {
                return false;
            };
            let d = Path(t.path.clone());
            total.add_term(d.rotate(), -c.clone());
            total.add_term(d, c);
        }
        for t in &self.ideal {
            let Some(c) = parse_coef(&t.coefficient) else {
                return false;
            };
            let g = super::paths::cyclic_derivative(t.generator, &s.combination);
            total.add_scaled(&g.sandwich(&t.left, &t.right), &c);
        }
        total == PathCombination::single(Path(cycle.to_vec()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleReport {
    pub cycle: Vec<ArrowId>,
    pub vertices: Vec<Index>,
    pub simple: bool,
    /// `"member"` or `"not_member"`.
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    /// Necklace coordinates left after elimination, for non-members.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Vec<Term>>,
}

impl CycleReport {
    pub fn is_member(&self) -> bool {
        self.verdict == "member"
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RigidityReport {
    pub max_cycle_len: usize,
    pub trunc_degree: usize,
    pub degrees_tried: Vec<usize>,
    pub include_boundary: bool,
    pub arrows: Vec<(Index, Index)>,
    pub ideal_rank: usize,
    pub cycles: Vec<CycleReport>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl RigidityReport {
    pub fn failures(&self) -> impl Iterator<Item = &CycleReport> {
        self.cycles.iter().filter(|c| !c.is_member())
    }
}

/// Projects a closed combination onto rotation classes.
fn necklace_row(c: &PathCombination) -> SparseRow<Path> {
    let mut folded = PathCombination::zero();
    for (p, x) in c.terms() {
        folded.add_term(p.canonical_rotation(), x.clone());
    }
    folded
        .terms()
        .map(|(p, x)| (p.clone(), x.clone()))
        .collect()
}

fn cyclic_terms(rest: &PathCombination) -> Vec<Term> {
    let classes: BTreeSet<Path> = rest.terms().map(|(p, _)| p.canonical_rotation()).collect();
    let mut out = Vec::new();
    for d0 in &classes {
        let rots = d0.rotations();
        let mut prefix = Coefficient::zero();
        for d in &rots[..rots.len() - 1] {
            prefix += rest.coefficient(d);
            if !prefix.is_zero() {
                out.push(Term {
                    coefficient: fmt_coef(&prefix),
                    path: d.0.clone(),
                });
            }
        }
    }
    out
}

struct Solver<'a> {
    gens: &'a [Generator],
    elements: Vec<IdealElement>,
    echelon: Echelon<Path>,
}

impl<'a> Solver<'a> {
    fn new(gens: &'a [Generator], table: &ArrowTable, degree: usize) -> Result<Self, IdealError> {
        let all = ideal_elements(gens, table, degree, true)?;
        let rows: Vec<SparseRow<Path>> = all
            .iter()
            .map(|el| necklace_row(&el.expand(gens)))
            .collect();
        // Find an independent subset first, then track combinations only over it.
        let mut probe = Echelon::new(false);
        let keep: Vec<usize> = (0..rows.len())
            .filter(|&i| probe.insert(rows[i].clone(), i))
            .collect();
        let mut echelon = Echelon::new(true);
        let mut elements = Vec::with_capacity(keep.len());
        for (j, &i) in keep.iter().enumerate() {
            echelon.insert(rows[i].clone(), j);
            elements.push(all[i].clone());
        }
        Ok(Solver {
            gens,
            elements,
            echelon,
        })
    }

    fn test(&self, cycle: &Path) -> Result<Certificate, Vec<Term>> {
        let target: SparseRow<Path> = [(cycle.canonical_rotation(), Coefficient::one())]
            .into_iter()
            .collect();
        match self.echelon.express(target) {
            Ok(coeffs) => {
                let mut rest = PathCombination::single(cycle.clone());
                let mut ideal = Vec::new();
                for (j, x) in &coeffs {
                    let el = &self.elements[*j];
                    rest.add_scaled(&el.expand(self.gens), &-x.clone());
                    ideal.push(IdealTerm {
                        coefficient: fmt_coef(x),
                        left: el.left.0.clone(),
                        generator: self.gens[el.generator].arrow,
                        right: el.right.0.clone(),
                    });
                }
                Ok(Certificate {
                    cyclic: cyclic_terms(&rest),
                    ideal,
                })
            }
            Err(residual) => Err(residual
                .iter()
                .map(|(p, c)| Term {
                    coefficient: fmt_coef(c),
                    path: p.0.clone(),
                })
                .collect()),
        }
    }
}

fn homogeneous(gens: &[Generator]) -> bool {
    gens.iter().all(|g| g.combination.is_homogeneous())
}

fn run(
    table: &ArrowTable,
    gens: &[Generator],
    max_cycle_len: usize,
    degree: usize,
) -> Result<(Vec<CycleReport>, usize), RigidityError> {
    if degree < max_cycle_len {
        return Err(RigidityError::InconsistentBounds {
            max_cycle_len,
            trunc_degree: degree,
        });
    }
    let solver = Solver::new(gens, table, degree)?;
    let reports = enumerate_cycles(table, max_cycle_len)
        .into_iter()
        .map(|c| solver.report(table, c))
        .collect();
    Ok((reports, solver.echelon.rank()))
}

impl Solver<'_> {
    fn report(&self, table: &ArrowTable, c: Cycle) -> CycleReport {
        let vertices = table.path_vertices(&c.arrows);
        let (verdict, certificate, residual) = match self.test(&c.path()) {
            Ok(cert) => ("member", Some(cert), None),
            Err(res) => ("not_member", None, Some(res)),
        };
        CycleReport {
            cycle: c.arrows,
            vertices,
            simple: c.simple,
            verdict,
            certificate,
            residual,
        }
    }
}

/// Membership of the given cycles (arrow ids in traversal order) at
/// truncation `degree`.
pub fn test_cycles(
    q: &Quiver,
    s: &Potential,
    include_boundary: bool,
    cycles: &[Vec<ArrowId>],
    degree: usize,
) -> Result<Vec<CycleReport>, RigidityError> {
    let table = ArrowTable::new(q);
    let gens = jacobian_generators(s, &table, q, include_boundary);
    let solver = Solver::new(&gens, &table, degree)?;
    Ok(cycles
        .iter()
        .map(|c| {
            let arrows = Path(c.clone()).canonical_rotation().0;
            let simple = {
                let v = table.path_vertices(&arrows);
                v.iter().collect::<BTreeSet<_>>().len() == arrows.len()
            };
            solver.report(&table, Cycle { arrows, simple })
        })
        .collect())
}

/// Tests every cycle of length `<= max_cycle_len` at truncation `degree`.
pub fn is_rigid_up_to(
    q: &Quiver,
    s: &Potential,
    include_boundary: bool,
    max_cycle_len: usize,
    degree: usize,
) -> Result<RigidityReport, RigidityError> {
    let table = ArrowTable::new(q);
    let gens = jacobian_generators(s, &table, q, include_boundary);
    let (cycles, ideal_rank) = run(&table, &gens, max_cycle_len, degree)?;
    let all = cycles.iter().all(CycleReport::is_member);
    let verdict = if all {
        Verdict::Rigid
    } else if homogeneous(&gens) {
        Verdict::NotRigid
    } else {
        Verdict::Inconclusive
    };
    Ok(RigidityReport {
        max_cycle_len,
        trunc_degree: degree,
        degrees_tried: vec![degree],
        include_boundary,
        arrows: table_arrows(&table),
        ideal_rank,
        cycles,
        verdict,
        note: note_for(verdict),
    })
}

fn table_arrows(t: &ArrowTable) -> Vec<(Index, Index)> {
    (0..t.len()).map(|a| t.arrow(a)).collect()
}

fn note_for(v: Verdict) -> Option<String> {
    match v {
        Verdict::Rigid => None,
        Verdict::NotRigid => {
            Some("generators are homogeneous, so failures at this degree persist at every degree".into())
        }
        Verdict::Inconclusive => Some(
            "some cycles are not members at the degrees tried; membership in the completed ideal is undecided".into(),
        ),
    }
}

/// Bounds and switches for a rigidity run; `None` picks the default.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RigidityOptions {
    pub max_cycle_len: Option<usize>,
    pub trunc_degree: Option<usize>,
    pub max_trunc_degree: Option<usize>,
    pub exclude_boundary: bool,
}

/// `(L_c, L, cap)`: `L_c` = longest face + most vertices on a string,
/// `L = L_c` + longest face, cap = `L` + twice the longest face.
pub fn default_bounds(q: &Quiver, s: &Potential) -> (usize, usize, usize) {
    let face = s.max_len();
    let string = q.strings().values().map(Vec::len).max().unwrap_or(0);
    let lc = (face + string).max(1);
    let l = lc + face;
    (lc, l, l + 2 * face)
}

/// Runs the test at the requested (or default) bounds, raising the
/// truncation degree by the longest face length after each inconclusive
/// attempt until the cap.
pub fn check_rigidity(
    q: &Quiver,
    s: &Potential,
    opts: &RigidityOptions,
) -> Result<RigidityReport, RigidityError> {
    let (dlc, dl, _) = default_bounds(q, s);
    let lc = opts.max_cycle_len.unwrap_or(dlc);
    let mut degree = opts
        .trunc_degree
        .unwrap_or(if opts.max_cycle_len.is_some() {
            lc + s.max_len()
        } else {
            dl
        });
    let step = s.max_len().max(1);
    let cap = opts.max_trunc_degree.unwrap_or(degree + 2 * s.max_len());
    let mut report = is_rigid_up_to(q, s, !opts.exclude_boundary, lc, degree)?;
    let mut tried = vec![degree];
    while report.verdict == Verdict::Inconclusive && degree + step <= cap {
        degree += step;
        tried.push(degree);
        report = is_rigid_up_to(q, s, !opts.exclude_boundary, lc, degree)?;
    }
    report.degrees_tried = tried;
    Ok(report)
}
