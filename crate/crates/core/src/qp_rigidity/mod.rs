//! Superpotential of the faces, cyclic derivatives, truncated Jacobian
//! ideal and rigidity certificates, all over exact rationals.

mod cycles;
mod differentiable;
mod ideal;
pub mod linalg;
mod paths;
mod potential;
mod rigidity;

pub use cycles::{enumerate_cycles, Cycle};
pub use differentiable::{is_differentiable_cycle, Split};
pub use ideal::{
    closed_paths, cyclic_span_basis, ideal_elements, truncated_ideal_basis, IdealElement,
    IdealError,
};
pub use paths::{cyclic_derivative, int, ArrowId, ArrowTable, Coefficient, Path, PathCombination};
pub use potential::{
    jacobian_generators, superpotential, Generator, Potential, PotentialError, PotentialTerm,
};
pub use rigidity::{
    check_rigidity, default_bounds, is_rigid_up_to, parse_coef, test_cycles, Certificate,
    CycleReport, IdealTerm, RigidityError, RigidityOptions, RigidityReport, Term, Verdict,
};
