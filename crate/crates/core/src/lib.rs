//! Jacobi diagrams, their quotient spaces, and the cabling formula for the
//! Kontsevich integral of torus knots.

pub mod alexander;
pub mod cabling;
pub mod cache;
pub mod canon;
pub mod combo;
pub mod diagram;
pub mod element;
pub mod engine;
pub mod enumerate;
pub mod error;
pub mod modp;
pub mod pinned;
pub mod quotient;
pub mod rational;
pub mod series;
pub mod stu;
pub mod symbasis;
pub mod symmetric;
pub mod verify;
pub mod vogel;

pub use engine::{Engine, EngineConfig};
pub use error::{Error, Result};
