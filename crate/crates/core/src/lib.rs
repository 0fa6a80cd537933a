//! BFZ quivers of double Bruhat cells over simply-laced trees, their
//! realization as dimer models on the cylinder over the tree, and exact
//! rigidity checks for the face superpotential.

pub mod bfz_quiver;
pub mod cartan_graph;
pub mod coxeter_words;
pub mod cylinder_dimer;
pub mod export;
pub mod qp_rigidity;
pub mod random;
