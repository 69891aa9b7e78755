//! Exact-arithmetic toolkit for line-bundle cohomology on flag varieties.
//!
//! Everything here is integer or rational arithmetic over the weight lattice
//! of a simply-connected simple group, written in fundamental-weight
//! coordinates:
//!
//! - [`rootsys`]: Cartan data, positive roots, the invariant pairing.
//! - [`weyl`]: Weyl group elements, lengths, the dot action, inversion sets.
//! - [`charring`]: Laurent polynomials on the lattice, Weyl characters, and
//!   the Euler characteristic `H*(G/B, E_mu)` computed along two routes.
//! - [`clifford`]: exterior algebra with Clifford action and Hodge star, and
//!   the graded weight bookkeeping of the Thom-class comparison.
//! - [`kkflag`]: the `Z[weights]` model of `K_K(G/B)`, twisted fundamental
//!   classes, BBW morphisms and the verification checks built on them.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod charring;
pub mod clifford;
pub mod error;
pub mod kkflag;
pub mod rootsys;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{CartanDatum, CartanType, RootSystem, Weight};
pub use weyl::{Chamber, WeylElement, WeylGroup, DEFAULT_SIZE_GATE};
