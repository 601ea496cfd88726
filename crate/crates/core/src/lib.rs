//! Exact arithmetic for p-adic polynomial analysis and Serre-type
//! predictions attached to 3-dimensional mod-p Galois representations of
//! type A6.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: valuations, small prime fields and their quadratic extensions.
//! * [`poly`]: integer polynomials, resultants, Newton polygons and
//!   distinct-degree factorization modulo a prime.
//! * [`krasner`]: root separation bounds and "same extension" certificates.
//! * [`local`]: ramification filtrations and the level exponent.
//! * [`weights`] and [`characters`]: weight prediction and nebentype characters.
//! * [`rep3a6`]: coarse conjugacy classes of A6 and 3.A6.
//! * [`hecke`]: Hecke polynomials and the attachment check.
//! * [`case`]: case files, bundled examples and the verification pipeline.

pub mod arith;
pub mod case;
pub mod characters;
pub mod error;
pub mod hecke;
pub mod krasner;
pub mod local;
pub mod poly;
pub mod rep3a6;
pub mod weights;

pub use error::{Error, Result};
