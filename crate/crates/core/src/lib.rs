//! Exact-integer machinery for Coxeter-Conway frieze patterns, doubly
//! antiperiodic SL2-tilings with a positive fundamental window, and polygons
//! in the Farey graph.
//!
//! Everything is computed over arbitrary-precision integers; there is no
//! floating point anywhere. All types are immutable values and all operations
//! are pure functions, so the whole crate is freely shareable across threads.

pub mod embedding;
pub mod enumerate;
pub mod error;
pub mod farey;
pub mod frieze;
pub mod hill;
pub mod tiling;

pub use embedding::PolygonPair;
pub use error::{Error, Result};
pub use farey::{ExtendedRational, FareyPolygon, Mat2, Triangulation};
pub use frieze::{FriezePattern, Quiddity};
pub use hill::{HillEquation, HillSolution};
pub use tiling::{SL2Tiling, TilingReport, Triple, TripleDiagnostics};
