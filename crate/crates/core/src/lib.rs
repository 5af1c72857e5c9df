pub mod calculus;
pub mod econ;
pub mod error;
pub mod finmath;
pub mod leontief;
pub mod linalg;
pub mod linsolve;
pub mod simplex;
pub mod text;

pub use error::{Category, Error, Result};
pub use linalg::{Matrix, Orientation, Vector};
