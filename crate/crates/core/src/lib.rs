//! Exact computation and cross-verification of the metric dimension and the
//! fractional metric dimension of finite connected graphs.
//!
//! The toolkit has three layers:
//!
//! * a graph substrate: BFS distance matrices, cartesian products, and
//!   generators for paths, cycles, cliques, Hamming and Johnson graphs
//!   ([`graph`], [`generators`]);
//! * the resolving machinery: `R{x,y}` sets, `r(G)`, exact metric dimension
//!   by branch and bound, and an exact-rational covering-LP solver whose
//!   optimum is the fractional metric dimension, certified by strong duality
//!   ([`resolve`], [`ratlp`]);
//! * closed forms and gates: intersection numbers of distance-regular graphs,
//!   automorphism orbits for vertex-transitivity, and a theorem suite that
//!   checks every closed form, bound, and characterization against the LP
//!   oracle ([`drg`], [`symmetry`], [`verify`]).
//!
//! All arithmetic on dimension values is exact rational; results like `35/17`
//! are equalities, not approximations.

pub mod bitset;
pub mod drg;
pub mod error;
pub mod generators;
pub mod graph;
pub mod limits;
pub mod ratlp;
pub mod resolve;
pub mod symmetry;
pub mod verify;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{cartesian_product, product_distance_identity_check, DistanceMatrix, Graph};
pub use limits::Limits;
pub use ratlp::{fracdim, Rational};
pub use resolve::{metric_dimension, r_min, ResolutionSystem};
pub use symmetry::{is_vertex_transitive, vt_fracdim};
