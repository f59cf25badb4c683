//! Counting formulas for the sign language, and the historical derived-term counts.
//!
//! The `k^2` law: a table over `k` terms has `C(k, k-1)` full-form signs and
//! `C(k, k-1) * C(k-1, k-2)` semi-fractional ones, and
//! `C(k, k-1) * (1 + C(k-1, k-2)) = k * k`.
//!
//! The historical counts for exponents 2, 3 and 4 are 2, 7 and 16, each obtained by a
//! different method. Only the exponent-3 count agrees with `2^e - 1`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::combinatorics::{binomial, enumerate_class, Combination, Universe};
use crate::semantics::{full_form, generate_language};
use crate::Error;

/// `2^k - 1`, the number of nonempty combinations of `k` things.
pub fn complexiones_simpliciter(k: u32) -> Result<u64, Error> {
    if k == 0 {
        return Ok(0);
    }
    1u64.checked_shl(k - 1)
        .filter(|_| k <= 64)
        .map(|half| half - 1 + half)
        .ok_or(Error::Overflow)
}

/// `k^2`, after checking it against `C(k, k-1) * (1 + C(k-1, k-2))`.
pub fn language_size(k: u64) -> Result<u64, Error> {
    if k < 2 {
        return Err(Error::UniverseTooSmall {
            k: k as usize,
            min: 2,
        });
    }
    let rows = binomial(k, k - 1)?;
    let per_row = binomial(k - 1, k - 2)?
        .checked_add(1)
        .ok_or(Error::Overflow)?;
    let lhs = rows.checked_mul(per_row).ok_or(Error::Overflow)?;
    let rhs = k.checked_mul(k).ok_or(Error::Overflow)?;
    if lhs != rhs {
        return Err(Error::IdentityViolation { k, lhs, rhs });
    }
    Ok(rhs)
}

/// `C(k, k-1) * C(k-1, k-2) = k(k-1)`.
pub fn semi_fractional_count(k: u64) -> Result<u64, Error> {
    if k < 2 {
        return Err(Error::UniverseTooSmall {
            k: k as usize,
            min: 2,
        });
    }
    binomial(k, k - 1)?
        .checked_mul(binomial(k - 1, k - 2)?)
        .ok_or(Error::Overflow)
}

/// How a historical derived-term count was arrived at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Methodology {
    /// A pair is written by its two primitive terms.
    PrimitivePairWriting,
    /// The genus with all its intermediate genera and species: every nonempty subset.
    GenusSpeciesSubsets,
    /// The full and semi-fractional forms of every 3-element combination of 4 terms.
    SemiFractionalExpressions,
}

impl Methodology {
    pub fn name(&self) -> &'static str {
        match self {
            Methodology::PrimitivePairWriting => "primitive-pair-writing",
            Methodology::GenusSpeciesSubsets => "genus-species-subsets",
            Methodology::SemiFractionalExpressions => "semi-fractional-expressions",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerivedTermCount {
    pub exponent: usize,
    pub count: u64,
    pub methodology: Methodology,
}

/// The derived-term count for a combination of exponent 2, 3 or 4.
///
/// Each exponent uses its own method; nothing is defined beyond 4.
pub fn historical_derived_term_count(exponent: usize) -> Result<DerivedTermCount, Error> {
    let (count, methodology) = match exponent {
        2 => {
            let pair = Combination::new(alloc::vec![1, 2])?;
            let written = full_form(&pair)?.atoms().len();
            (written as u64, Methodology::PrimitivePairWriting)
        }
        3 => {
            let whole = Combination::new(alloc::vec![1, 2, 3])?;
            let total = genus_species_decomposition(&whole)?
                .values()
                .map(Vec::len)
                .sum::<usize>();
            (total as u64, Methodology::GenusSpeciesSubsets)
        }
        4 => (
            generate_language(&Universe::of_size(4)?)?.sign_count() as u64,
            Methodology::SemiFractionalExpressions,
        ),
        _ => return Err(Error::UndefinedExponent { exponent }),
    };
    Ok(DerivedTermCount {
        exponent,
        count,
        methodology,
    })
}

/// Historical count against `2^e - 1` for one exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClaimReport {
    pub exponent: usize,
    pub historical_count: u64,
    pub methodology: Methodology,
    pub simpliciter_count: u64,
    pub matches: bool,
}

/// Whether the `2^e - 1` claim holds for exponent `e`. True only for `e = 3`.
pub fn leibniz_claim_check(exponent: usize) -> Result<ClaimReport, Error> {
    let derived = historical_derived_term_count(exponent)?;
    let simpliciter_count = complexiones_simpliciter(exponent as u32)?;
    Ok(ClaimReport {
        exponent,
        historical_count: derived.count,
        methodology: derived.methodology,
        simpliciter_count,
        matches: derived.count == simpliciter_count,
    })
}

/// Every nonempty subset of `s`, grouped by exponent, each group in place order.
pub fn genus_species_decomposition(
    s: &Combination,
) -> Result<BTreeMap<usize, Vec<Combination>>, Error> {
    if s.exponent() == 0 {
        return Err(Error::EmptyCombination);
    }
    let within = Universe::new(s.members().to_vec())?;
    (1..=s.exponent())
        .map(|e| Ok((e, enumerate_class(&within, e)?)))
        .collect()
}
