//! Exact computations with lattice polytopes of dimension at most 3: hulls,
//! lattice points, cones and Hilbert bases, integral equivalence, the
//! classification of smooth polytopes with few lattice points, and
//! unimodular flag triangulations.

pub mod appendix;
pub mod classify;
pub mod cones;
pub mod equivalence;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod lattice;
pub mod polytope;
pub mod triangulation;

pub use cones::{Fan, GorensteinData, RationalCone};
pub use equivalence::CanonicalForm;
pub use error::{Error, Result};
pub use lattice::{IntMatrix, IntVector, Rational};
pub use polytope::{Facet, LatticePolytope};
pub use triangulation::Triangulation;
