//! Mutation of skew-symmetrizable diagrams with framed seeds, the diagrams
//! of triangulated orientable orbifolds, and explicit maximal green
//! sequences for them, checked step by step.

pub mod checkpoints;
pub mod diagram;
pub mod error;
pub mod io;
pub mod label;
pub mod matrix;
pub mod orbifold;
pub mod search;
pub mod seed;
pub mod sequence;
pub mod verify;

pub use error::{Error, Result};
pub use label::VertexLabel;
pub use matrix::{ArrowPair, ExchangeMatrix};
pub use orbifold::{build_diagram, validate_params, OrbifoldParams, Rejection};
pub use seed::{FramedSeed, VertexColor};
pub use sequence::{delta, delta_amended, MutationSequence};
