//! Signed permutation statistics, maxdrop-restricted descent polynomials of
//! types A and B, and 2-colored juggling sequences, all in exact arithmetic.

pub mod cli;
pub mod descent;
pub mod enumerate;
pub mod error;
pub mod juggling;
pub mod perm;
pub mod polyring;
pub mod seqprops;
pub mod verify;

pub use error::{Error, Result};
