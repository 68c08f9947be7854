//! Spanning trees of plane graphs whose tree and co-tree both have maximum
//! degree at most four, computed from the minimal Schnyder wood.

pub mod bench;
pub mod color;
pub mod cotree4;
pub mod error;
pub mod format;
pub mod gen;
pub mod opp;
pub mod plane_graph;
pub mod schnyder;
pub mod suspension;
mod util;
pub mod verify;

pub use color::Color;
pub use error::{Error, Result};
pub use plane_graph::{DualMap, Face, PlaneGraph};
pub use schnyder::{EdgeLabel, SchnyderWood};
pub use suspension::{is_sigma_internally_3_connected, SuspendedDual, Suspension};
