//! Injective colorings, open packing partitions and two-step graphs of
//! graph products.
//!
//! The injective chromatic number `χ_i(G)` is computed as the chromatic
//! number of the two-step graph `N(G)`, and cross-checked against minimum
//! open packing partitions found by brute force in [`packing`].

mod bitset;
pub mod coloring;
pub mod corpus;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod io;
pub mod packing;
pub mod patterns;
pub mod products;
pub mod rng;
pub mod transforms;

pub use coloring::{chi, exact_chromatic, verify, Coloring, ColoringMode, Violation};
pub use error::{Error, Result};
pub use graph::{Graph, GraphFamily};
pub use products::{product, ProductKind};
pub use transforms::{neighborhood_graph, TransformMode};
