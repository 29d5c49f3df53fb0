pub mod carlitz;
pub mod cli;
pub mod error;
pub mod functionals;
pub mod hankel;
pub mod orthopoly;
pub mod qkit;
pub mod ratcore;
pub mod verify;

pub use error::{Error, Result};
pub use ratcore::{QPoly, RatFuncQ};
