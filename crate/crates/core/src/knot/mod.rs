//! Oriented link diagrams, Seifert graphs and the HOMFLY polynomial.

pub mod braid;
pub mod diagram;
pub mod homfly;
pub mod median;
pub mod seifert;
pub mod verify;

pub use braid::braid_closure;
pub use diagram::{parse_pd, Arc, CircleLabel, Crossing, LinkDiagram};
pub use homfly::{homfly, homfly_top, homfly_with_budget, morton_bound, skein_triple, unlink_factor, DEFAULT_CROSSING_BUDGET};
pub use median::median_construct;
pub use seifert::{seifert_decompose, SeifertCircle, SeifertDecomposition};
pub use verify::{verify_main_theorem, verify_main_theorem_with_budget, MainTheoremReport};

pub use crate::graph::PlaneEmbedding;
