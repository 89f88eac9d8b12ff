//! Combinatorial Heegaard diagrams and the homology obstruction for
//! Whitney disks between Heegaard Floer generators.
//!
//! A diagram of genus `g` lists one word per attaching curve in the surface
//! group generators `c1..c2g`, together with labeled intersection points of
//! the alpha and beta curves. From that data the library computes H1 of the
//! underlying 3-manifold as an explicit quotient of `Z^{2g}`, assigns every
//! Floer generator a canonical coordinate in the quotient, and partitions
//! generators into classes: two generators are connected by a Whitney disk
//! exactly when their coordinates agree.

pub mod algebra;
pub mod diagram;
pub mod floer;

// integer type used throughout the public API
pub use num_bigint::BigInt;

pub use algebra::{
    abelianize, build_quotient, hermite_normal_form, lattice_member, prefix_vector,
    smith_normal_form, suffix_vector, AlgebraError, ClassCoordinate, IntMatrix, IntVector, Letter,
    QuotientGroup, Sign, SnfDecomposition, TorsionResidue, Word,
};
pub use diagram::{
    fixture, parse_diagram, serialize_diagram, validate, DiagramError, HeegaardDiagram,
    IntersectionPoint, Warning,
};
pub use floer::{
    enumerate_generators, generator_coordinate, generator_sign, manifold_h1, maslov_parity,
    partition_classes, whitney_exists, ClassReport, FloerError, Generator, GeneratorSummary,
};
