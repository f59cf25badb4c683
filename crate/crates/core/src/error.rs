use core::fmt;

use crate::combinatorics::{Label, Place};

/// Semantic and arithmetic failures.
///
/// Syntax problems are reported separately by [`crate::ParseError`]; everything here
/// concerns meaning relative to a universe, or exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A fixed-width integer could not hold an exact result.
    Overflow,
    EmptyUniverse,
    /// Universe labels must be strictly ascending and at least 1.
    InvalidLabels,
    /// Combination members must be strictly ascending and at least 1.
    InvalidMembers,
    ClassOutOfRange {
        class: usize,
        k: usize,
    },
    PlaceOutOfRange {
        class: usize,
        place: Place,
        max: Place,
    },
    LabelNotInUniverse {
        label: Label,
    },
    /// Atom at `atom` (1-based) denotes a label that an earlier atom already covers.
    Overlap {
        atom: usize,
        label: Label,
    },
    /// The same simple label is written twice.
    DuplicateLabel {
        atom: usize,
        label: Label,
    },
    NotAMember {
        label: Label,
    },
    /// Semi-fractional forms need at least two members.
    ExponentTooSmall {
        exponent: usize,
    },
    EmptyCombination,
    UniverseTooSmall {
        k: usize,
        min: usize,
    },
    /// Derived-term counts are only defined for exponents 2, 3 and 4.
    UndefinedExponent {
        exponent: usize,
    },
    IdentityViolation {
        k: u64,
        lhs: u64,
        rhs: u64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Overflow => write!(f, "arithmetic overflow"),
            Error::EmptyUniverse => write!(f, "universe must contain at least one label"),
            Error::InvalidLabels => {
                write!(
                    f,
                    "universe labels must be distinct, ascending and at least 1"
                )
            }
            Error::InvalidMembers => {
                write!(
                    f,
                    "combination members must be distinct, ascending and at least 1"
                )
            }
            Error::ClassOutOfRange { class, k } => {
                write!(f, "class {class} out of range for a universe of {k} terms")
            }
            Error::PlaceOutOfRange { class, place, max } => {
                write!(
                    f,
                    "place {place} out of range for class {class} (1..={max})"
                )
            }
            Error::LabelNotInUniverse { label } => {
                write!(f, "label {label} is not in the universe")
            }
            Error::Overlap { atom, label } => {
                write!(f, "atom {atom} overlaps an earlier atom on label {label}")
            }
            Error::DuplicateLabel { atom, label } => {
                write!(f, "atom {atom} repeats simple label {label}")
            }
            Error::NotAMember { label } => {
                write!(f, "label {label} is not a member of the combination")
            }
            Error::ExponentTooSmall { exponent } => {
                write!(
                    f,
                    "exponent {exponent} has no semi-fractional form (needs at least 2)"
                )
            }
            Error::EmptyCombination => write!(f, "combination must be nonempty"),
            Error::UniverseTooSmall { k, min } => {
                write!(
                    f,
                    "universe of {k} terms is too small (need at least {min})"
                )
            }
            Error::UndefinedExponent { exponent } => {
                write!(
                    f,
                    "no derived-term count is defined for exponent {exponent}"
                )
            }
            Error::IdentityViolation { k, lhs, rhs } => {
                write!(f, "sign-count identity violated at k={k}: {lhs} != {rhs}")
            }
        }
    }
}

impl core::error::Error for Error {}
