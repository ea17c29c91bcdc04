//! Homological algebra of graded quotients of weighted polynomial rings,
//! aimed at C2-algebras of vertex operator algebras.

pub mod document;
pub mod error;
pub mod exactalg;
pub mod gradedquot;
pub mod polyring;
pub mod resolution;
pub mod tate;
pub mod voa;
pub mod yoneda;

pub use error::{Error, Result};
