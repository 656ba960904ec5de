//! Planar convex-body calculus: support functions and Minkowski arithmetic,
//! Alexandrov surface-area measures and Blaschke addition, mixed volumes,
//! LP-certified majorization orders, and solvers/checkers for Urysohn-type
//! and vector isoperimetric extremal problems.
//!
//! Everything is implemented for the plane (polygons, possibly degenerate);
//! three dimensions enter only through bodies of rotation.

pub mod error;
pub mod extremal;
pub mod geom;
pub mod lp;
pub mod majorize;
pub mod measure;
pub mod render;
pub mod rotation;
pub mod schema;
pub mod support;

pub use error::{Error, Result};
pub use geom::Vec2;
pub use measure::{AlexandrovMeasure, DiscreteMeasure, MeasureAtom};
pub use support::{ConvexFigure, Direction, DirectionGrid, SupportVector};
