//! Exact computation of premonoform spectra, supports and nullity classes
//! for small finite-length abelian categories.
//!
//! Two backends implement [`Category`]: modules over finite-dimensional
//! algebras over `F_p` ([`modfd`]) and finite abelian `p`-groups ([`abgrp`]).
//! Everything above them ([`classify`], [`nullity`], [`spectrum`]) is generic.

pub mod abgrp;
pub mod category;
pub mod cli;
pub mod classify;
pub mod error;
pub mod linalg;
pub mod modfd;
pub mod nullity;
pub mod spectrum;
pub mod universe;

pub use category::{Caps, Category};
pub use error::{Error, Result};
pub use nullity::{IsoSet, NullityEngine};
pub use spectrum::{dot, lattice, verify, SpecSet, Spectrum};
pub use universe::{ObjId, Universe};
