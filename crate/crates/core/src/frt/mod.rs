//! The Long bialgebra `L(R)` of a solution `R`: obstructions, the quotient
//! comatrix coalgebra, σ, and the reconstruction `R = R_σ`.

pub mod comatrix;
pub mod doc;
pub mod presentation;
pub mod quotient;
pub mod text;

pub use doc::PresentationDoc;
pub use presentation::{build_lr, LongPresentation, Naming, SigmaForm};
pub use quotient::QuotientCoalgebra;
pub use text::presentation_text;
