//! Exact arithmetic for the Long equation `R¹²R¹³ = R¹³R¹²`,
//! `R¹²R²³ = R²³R¹²`, the bialgebra `L(R)` it presents, and numerical
//! holonomy of the associated KZ connection.

pub mod error;
pub mod free;
pub mod frt;
pub mod group;
pub mod hopf;
pub mod io;
pub mod kz;
pub mod linalg;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
pub use scalar::Scalar;
