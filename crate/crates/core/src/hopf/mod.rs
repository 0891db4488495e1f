//! Finite-dimensional bialgebras and the Long-bialgebra axioms.

pub mod axioms;
pub mod dmap;
pub mod generator;
pub mod solve;
pub mod structure;

pub use axioms::{check_axioms, counit_table, strong_d_violation, Axiom, AxiomReport, SigmaDoc, SigmaTable};
pub use solve::{l1_only_space, l1_solution_space, linear_rows, sigma_feasibility, Feasibility, LinearRow, SolutionSpace};
pub use structure::{comatrix_tensor_truncation, group_algebra, sweedler_h4, BialgebraDoc, Coalgebra, FinDimBialgebra};
pub use generator::{check_generator_long, generator_l1_space, GeneratorBialgebra, GeneratorReport, GeneratorViolation};
pub use dmap::{comatrix_coalgebra, presentation_coalgebra, strong_dmap_rsigma, Coaction};
