//! Exact chromatic symmetric functions of graphs, with closed forms for the
//! complete, path, lollipop and lariat families.
//!
//! * [`partition`]: integer partitions, transpose, dominance, enumeration.
//! * [`symfunc`]: homogeneous symmetric functions in the `m`, `e`, `s` bases.
//! * [`graph`]: labelled simple graphs and the named families.
//! * [`csf`]: `X_G` by stable partitions and by colouring enumeration, and
//!   the chromatic polynomial.
//! * [`formulas`]: closed forms for `X_{K_m}`, `X_{P_n}`, `X_{L_{m,n}}`.
//! * [`verify`]: checks of the identities, producing [`verify::CheckReport`]s.

pub mod csf;
pub mod formulas;
pub mod graph;
pub mod matrix;
pub mod partition;
pub mod symfunc;
pub mod verify;

pub use csf::{brute_force_csf, chromatic_poly, chromatic_sym};
pub use graph::{Edge, Graph, GraphError};
pub use partition::{partitions_of, Partition};
pub use symfunc::{Basis, SymFunc};
