//! Instances, orientations, text formats and the EFX verifier.

mod forest;
mod format;
mod instance;
mod orientation;
mod value;
mod verify;

pub use forest::{one_forest, OneComponent, OneForest};
pub use format::{
    parse_instance, parse_orientation, serialize_instance, serialize_orientation, ParseError,
    ParseErrorKind,
};
pub use instance::{Edge, EdgeClass, EdgeId, Instance, InstanceError, VertexId};
pub use orientation::{Orientation, OrientationError};
pub use value::{Value, ValueError};
pub use verify::{verify_efx, verify_efx_definitional, VerifyReport, Witness};
