//! Cyclic convolutional codes as left ideals of skew polynomial rings
//! `A[z;σ]`, `A = F_q^n`, computed through the matrix ring `M ⊂ F[t]^{n×n}`.
//!
//! The pipeline runs bottom-up: [`field`] and [`poly`] provide the scalars,
//! [`polymat`] polynomial matrices, [`skew`] the skew ring, [`matring`] the
//! isomorphism `ξ` with reduction and completion, [`construct`] codes with
//! prescribed Forney indices, and [`codes`] encoders and free distances.

pub mod cli;
pub mod codes;
pub mod construct;
pub mod error;
pub mod field;
pub mod matring;
pub mod poly;
pub mod polymat;
pub mod skew;
pub mod verify;

pub use error::{Error, Result};
