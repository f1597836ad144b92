pub mod cli;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod koszul;
pub mod linalg;
pub mod perm;
pub mod poly;
pub mod symm;
pub mod torus;
pub mod verlinde;

pub use error::{Error, Result};
