//! The quiver drawn on the cylinder over the graph: placement, faces per
//! sheet, and the structural checks.

mod checks;
mod embedding;
mod faces;

pub use checks::{
    check_dimer_conditions, check_face_shapes, check_planarity_per_sheet, check_shared_edges,
    strips, Check, DimerReport, FaceShapeReport, PlanarityReport, SharedEdgesReport, Witness,
};
pub use embedding::{embed, ArrowClass, EmbedError, Embedding, Placement};
pub use faces::{faces, sheet_faces, Face, Orientation};

use crate::bfz_quiver::Quiver;
use crate::cartan_graph::LabeledGraph;

/// An embedded quiver together with its faces.
#[derive(Debug, Clone)]
pub struct DimerModel {
    pub embedding: Embedding,
    pub faces: Vec<Face>,
}

impl DimerModel {
    pub fn new(q: &Quiver, g: &LabeledGraph) -> Result<Self, EmbedError> {
        let embedding = embed(q, g)?;
        let faces = faces(q, &embedding);
        Ok(DimerModel { embedding, faces })
    }
}

#[cfg(test)]
mod tests;
