//! The BFZ quiver of a shuffled word: from the exchange matrix, from the
//! edge rules, and by gluing, plus the frozen completion arrows.

mod build;
mod completion;
mod direct;
mod glue;
mod matrix;
mod quiver;

pub use build::BfzQuiver;
pub use completion::{add_frozen_completion_arrows, Ambiguity, Completion, RegionKind};
pub use direct::{edge_rule, quiver_direct};
pub use glue::{glue, GlueError, GlueResult};
pub use matrix::{
    entry_trace, exchange_matrix, exchange_trace, format_trace, EntryTrace, ExchangeMatrix,
};
pub use quiver::{Quiver, Vertex};
