//! Stiefel-Whitney classes and obstruction classes of real representations
//! of `C_n`, `C_n x C_n` and `GL2(F_q)`, computed exactly in mod-2
//! cohomology.

pub mod arith;
pub mod bicyclic;
pub mod cli;
pub mod cyclic;
pub mod error;
pub mod gl2;
pub mod ring;
pub mod sample;
pub mod verify;

pub use error::{Error, Result};
