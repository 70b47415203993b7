//! Exact invariants of contact 3-manifolds given by contact (±1)-surgery
//! diagrams, and classification of the planar open books
//! `(Σ, D_a^p D_b^q D_c^r)` on the three-holed sphere.
//!
//! All arithmetic is exact over arbitrary-precision integers and rationals.

pub mod classify;
pub mod diagram;
pub mod error;
pub mod family;
pub mod invariants;
pub mod linalg;
pub mod rational;

pub use classify::{
    binding_number_invariants, binding_number_theorem, classification_table, classify, is_tight,
    sphere_search, topological_type, BindingNumber, ClassificationReport, LensSpace, Provenance,
    SphereEntry, TheoremVerdict, TopoType,
};
pub use diagram::{
    rot_from_front, tb_from_front, ContactCoeff, FramedLinkMatrix, LegendrianComponent, RoleTag,
    SurgeryDiagram,
};
pub use error::{Error, Result};
pub use family::{
    build_family_diagram, build_family_diagram_with, closed_form_invariants, family_invariants,
    general_c_squared, plumbing_determinant, plumbing_matrix, ClosedForm, FamilyBlock,
    IntraPattern, MonodromyExponents,
};
pub use invariants::{
    compute_invariants, d3_eta, homotopy_compare, Comparison, InvariantReport, UndefinedReason,
    Witness,
};
pub use linalg::{AbelianGroup, InertiaTriple, IntMatrix, Order, SmithForm};
pub use rational::Rational;
