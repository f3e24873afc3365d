//! Polycyclic codes over the product ring F_q^l.
//!
//! The crate builds codes as ideals of `F_q^l[x]/<x^n - a(x)>` from
//! componentwise generator polynomials, computes annihilator duals, maps codes
//! to F_q through (generalized) Gray maps, measures the resulting linear codes
//! and derives CSS quantum parameters.

pub mod code;
pub mod corpus;
pub mod duality;
pub mod error;
pub mod factor;
pub mod gf;
pub mod gray;
pub mod lincode;
pub mod linalg;
pub mod poly;
pub mod quantum;
pub mod ring;
pub mod words;

pub use code::{PolycyclicCode, ShiftSpec};
pub use error::{Error, Result};
pub use gf::{Field, FieldElement};
pub use gray::GraySpec;
pub use lincode::{Distance, LinearCode};
pub use poly::Poly;
pub use ring::{IdempotentBasis, ProductRing, RingElement, RingVector};
