//! Numbered combination classes and the quasi-fraction notation built on them.
//!
//! A [`Universe`] holds `k` numbered primitive terms. Every subset of it lives in the
//! class given by its size, and inside that class it has a 1-based place number under
//! ascending lexicographic order. A quasi-fraction `p/c` cites the combination at place
//! `p` of class `c`; juxtaposed with simple terms (`1/2.9`) it denotes the union of what
//! its parts denote.
//!
//! On top of that the crate generates the `k`-row, `k`-column sign table formed by the
//! full and semi-fractional forms of the `(k-1)`-element combinations, and checks the
//! counting claims that go with it.
//!
//! ```
//! use combinatoria_core::{notation, semantics, Universe};
//!
//! let universe = Universe::new(vec![3, 6, 7, 9]).unwrap();
//! let expr = notation::parse("1/2.9").unwrap();
//! let combination = semantics::decode(&expr, &universe).unwrap();
//! assert_eq!(combination.to_string(), "3.6.9");
//! ```
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod claims;
pub mod combinatorics;
mod error;
pub mod notation;
pub mod semantics;

pub use combinatorics::{binomial, ClassRef, Combination, Label, Place, Universe};
pub use error::Error;
pub use notation::{Atom, Expression, ParseError};
pub use semantics::{LanguageRow, LanguageTable, RowCaveat};
