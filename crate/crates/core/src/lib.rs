//! Equivariant Schubert calculus on the bisymplectic Grassmannian
//! `I2Gr(2, 2n)` and the symplectic Grassmannians `IGr(k, 2n)`.
//!
//! Fixed points are admissible signed subsets; classes are tuples of
//! characters, one per fixed point, satisfying the GKM edge conditions.

pub mod charring;
pub mod chevalley;
pub mod classes;
pub mod classical;
pub mod gkm;
pub mod subsets;

pub use charring::{CharPoly, Degree, DivisionError, Monomial, Weight};
pub use chevalley::{chevalley_table, coeff, coeff_bisym, coeff_sympl, ChevalleyCoefficient, ChevalleyError};
pub use classical::{
    classical_chevalley, degree_table, pairing_matrix, ring_check_i2gr26, schubert_degree, structure_constants_classical,
    ClassicalGraph, ClassicalRing, IntClassVector, PairingMatrix, RingCheckReport,
};
pub use classes::{compute_class_table, verify_gkm, ClassError, ClassTable, EquivariantClass, Violation, ViolationKind};
pub use gkm::{build_graph, tangent_weights, CurveKind, Edge, GkmGraph};
pub use subsets::{
    betti_direct, betti_recursive, codim, dominates, enumerate_admissible, AdmissibleSubset, BettiSequence, Geometry,
    GrassmannianSpec,
};
