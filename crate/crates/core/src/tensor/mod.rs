//! Operators on `M ⊗ M`, the Long equation and its relatives, and the
//! standard families of solutions.

pub mod construct;
pub mod laws;
pub mod op;

pub use construct::{
    invert, make_conjugate, make_diag, make_graded, make_homothety, make_pair, make_phi,
    GradedActionData, HomothetyTerm,
};
pub use laws::{
    check_laws, check_long_componentwise, is_long, long_componentwise_witness, require_long,
    ComponentViolation, Law, LawReport, Lifts,
};
pub use op::{lift, lift_to_slots, Legs, TensorOp2, TensorOp3};
