//! Exact linear algebra in characteristic two.
//!
//! The crate covers quadratic forms and their polarization, the orthogonal Lie algebras
//! so(7) and so(8) with parabolic subalgebras and the quotient `so/p`, small orthogonal groups
//! over GF(2) with the Dickson invariant, and fiber-level models of the twisted SO(7) form
//! whose isotropic reduction only exists after the inseparable extension `s^2 = t`.
//!
//! All arithmetic is exact. The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod error;
pub mod fibermodel;
pub mod linalg;
pub mod ortho;
pub mod quadform;
pub mod scalars;

pub use error::Error;
pub use scalars::{Field, FiniteField};
