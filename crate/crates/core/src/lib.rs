//! Interior polynomials of signed bipartite graphs and the top of the
//! HOMFLY polynomial.
//!
//! * [`poly`]: exact univariate, truncated-series and `(v, z)` Laurent arithmetic.
//! * [`graph`]: signed bipartite multigraphs, cycles, plane rotation systems.
//! * [`interior`]: the interior polynomial `I'` by cycle-deletion recursion.
//! * [`lattice`]: lattice points of root polytopes and their Ehrhart data.
//! * [`signed`]: the signed interior polynomial `I⁺`.
//! * [`knot`]: link diagrams, Seifert graphs, HOMFLY by skein recursion and
//!   the median construction.
//!
//! With the default `parallel` feature the data-parallel loops (subset sums,
//! lattice enumeration, verification suites) run on rayon; without it they
//! run sequentially with identical results.

pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod interior;
pub mod knot;
pub mod lattice;
pub mod par;
pub mod poly;
pub mod signed;

pub use error::{Error, ParseError, Result};
pub use graph::{Color, CycleWitness, Edge, EdgeId, PlaneEmbedding, SignedBipartiteGraph, Sign};
pub use poly::{IntPolynomial, LaurentPoly2, PowerSeriesTrunc};
