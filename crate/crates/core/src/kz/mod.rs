//! Numerical KZ holonomy for operators built from a Long solution.

pub mod flatness;
pub mod path;
pub mod system;

pub use flatness::{flatness_residuals, FlatnessEntry, FlatnessKind, FlatnessReport};
pub use path::{Center, LoopKind, LoopSpec};
pub use system::{
    circle_oracle, convergence_order, integrate_holonomy, max_abs_diff, max_dim_from_env, Convergence, KzSystem, Order,
    DEFAULT_MAX_DIM,
};
