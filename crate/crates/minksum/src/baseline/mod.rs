//! Independent constructions and metrics used to validate the closed forms.
//!
//! Nothing here calls the closed-form inverse-gradient maps; agreement
//! between these slower routes and the closed-form boundaries is the core
//! correctness evidence.

mod kissing;
mod polygon;
mod samples;

pub use kissing::{kissing_errors, KissingReport};
pub use polygon::{edge_sort_sum2d, hull2d, Polygon2D};
pub use samples::{definition_sum_samples, support_check, surface_samples};
