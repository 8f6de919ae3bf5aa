//! Exact-arithmetic toolkit for nodal quartic surfaces in projective 3-space.
//!
//! Everything in this crate is computed over the rationals with
//! arbitrary-precision integers; no verdict ever depends on floating-point
//! state. The only floating-point code is the best-effort numerical
//! singularity search in [`nodal`], whose candidates are always re-certified
//! exactly before being trusted.
//!
//! Module map:
//! - [`qpoly`]: homogeneous polynomials in 4 variables over Q (evaluation,
//!   gradient, Hessian).
//! - [`nodal`]: exact certification of singular points as nodes (ordinary
//!   double points), plus a seeded numerical search.
//! - [`severi`]: the evaluation matrix of a node set against the 35 degree-4
//!   monomials, its exact rank, and the derived dimension bookkeeping.
//! - [`lattice`]: rank-22 quadratic spaces, vanishing-cycle configurations,
//!   rank-one monodromy operators, and the orthogonal splitting they induce.
//! - [`icstalk`]: the graded complex built from an operator family, its
//!   cohomology, and the Betti-number predictor for nodal quartics.
//! - [`kummer`]: 16-nodal quartic fixtures from split genus-2 sextics, plus
//!   small hand fixtures.
//! - [`io`]: the JSON file formats shared with the command-line tool.

pub mod icstalk;
pub mod io;
pub mod kummer;
pub mod lattice;
pub mod linalg;
pub mod nodal;
pub mod point;
pub mod qpoly;
pub mod rat;
pub mod severi;

pub use icstalk::{
    betti_nodal_quartic, build_bcomplex, cohomology, nodal_stalk, BComplex, OperatorFamily,
    StalkCohomology, StalkError,
};
pub use kummer::{kummer_from_sextic, one_node_example, KummerError, KummerOutput, SexticCurve};
pub use lattice::{
    nodal_model, pl_operator, pl_operators, sigma_splitting, CycleConfiguration, LatticeError,
    QuadraticSpace, Subspace,
};
pub use linalg::QMat;
pub use nodal::{
    certify_point, find_singular_numeric, Classification, NodalError, NumericCandidate,
    SearchConfig, SingularPointReport, VerdictMode,
};
pub use point::{PointError, ProjPointQ};
pub use qpoly::{monomial_basis, HomogPoly, Monomial, QpolyError};
pub use rat::Rat;
pub use severi::{evaluation_matrix, independence_test, NodeSet, SeveriError, SeveriReport};
