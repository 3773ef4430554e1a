pub mod bundle;
pub mod category;
pub mod cli;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod hopf;
pub mod matrix;
pub mod modules;
pub mod report;
pub mod setcat;
pub mod turaev;
pub mod yd;
pub mod zunino;

pub use category::{Family, Morphism};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use matrix::Matrix;
pub use report::{Check, Report};
pub use turaev::TMorphism;
pub use zunino::ZMorphism;
