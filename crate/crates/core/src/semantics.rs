//! What expressions mean relative to a universe.
//!
//! A simple term denotes itself; a quasi-fraction `p/c` denotes the combination at place
//! `p` of class `c`. An expression denotes the union of its atoms, which must be pairwise
//! disjoint. Each combination of exponent `e >= 2` has `e + 1` written forms: the full form
//! and one semi-fractional form per retained simple term.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::combinatorics::{enumerate_class, rank, ClassRef, Combination, Label, Universe};
use crate::notation::{Atom, Expression};
use crate::Error;

/// The combination `expr` denotes over `universe`.
///
/// Atom denotations must be disjoint: `1/2.3` over `3.6.7.9` is rejected because `1/2`
/// already covers 3.
pub fn decode(expr: &Expression, universe: &Universe) -> Result<Combination, Error> {
    // label -> whether it came from a simple term
    let mut covered: BTreeMap<Label, bool> = BTreeMap::new();
    for (i, atom) in expr.atoms().iter().enumerate() {
        let atom_no = i + 1;
        match *atom {
            Atom::Simple(label) => {
                if !universe.contains(label) {
                    return Err(Error::LabelNotInUniverse { label });
                }
                match covered.insert(label, true) {
                    None => {}
                    Some(true) => {
                        return Err(Error::DuplicateLabel {
                            atom: atom_no,
                            label,
                        })
                    }
                    Some(false) => {
                        return Err(Error::Overlap {
                            atom: atom_no,
                            label,
                        })
                    }
                }
            }
            Atom::Fraction {
                place,
                class_number,
            } => {
                let class = usize::try_from(class_number).map_err(|_| Error::ClassOutOfRange {
                    class: usize::MAX,
                    k: universe.k(),
                })?;
                let cited = ClassRef::new(class, place, universe)?.resolve(universe)?;
                for &label in cited.members() {
                    if covered.insert(label, false).is_some() {
                        return Err(Error::Overlap {
                            atom: atom_no,
                            label,
                        });
                    }
                }
            }
        }
    }
    Combination::new(covered.into_keys().collect())
}

/// `[rank(s - {x}) / (e - 1), x]`.
pub fn encode_semi_fractional(
    s: &Combination,
    x: Label,
    universe: &Universe,
) -> Result<Expression, Error> {
    check_subset(s, universe)?;
    if !s.contains(x) {
        return Err(Error::NotAMember { label: x });
    }
    if s.exponent() < 2 {
        return Err(Error::ExponentTooSmall {
            exponent: s.exponent(),
        });
    }
    let rest = s.without(x);
    let fraction = Atom::Fraction {
        place: rank(&rest, universe)?,
        class_number: rest.exponent() as u64,
    };
    Ok(Expression::new(vec![fraction, Atom::Simple(x)]).expect("numerals are positive"))
}

/// Full form of `s`: all of its simple terms, ascending.
pub fn full_form(s: &Combination) -> Result<Expression, Error> {
    Expression::new(s.members().iter().map(|&m| Atom::Simple(m)).collect())
        .ok_or(Error::EmptyCombination)
}

/// Every written form of `s`: the full form, then the semi-fractional forms by ascending
/// numerator. A single term has only itself.
pub fn all_forms(s: &Combination, universe: &Universe) -> Result<Vec<Expression>, Error> {
    check_subset(s, universe)?;
    let mut forms = vec![full_form(s)?];
    if s.exponent() < 2 {
        return Ok(forms);
    }
    let mut semi = s
        .members()
        .iter()
        .map(|&x| encode_semi_fractional(s, x, universe))
        .collect::<Result<Vec<_>, _>>()?;
    semi.sort_by_key(|e| match e.atoms()[0] {
        Atom::Fraction { place, .. } => place,
        Atom::Simple(_) => unreachable!("semi-fractional forms lead with a fraction"),
    });
    forms.extend(semi);
    Ok(forms)
}

/// Whether both expressions denote the same combination.
pub fn equivalent(a: &Expression, b: &Expression, universe: &Universe) -> Result<bool, Error> {
    Ok(decode(a, universe)? == decode(b, universe)?)
}

fn check_subset(s: &Combination, universe: &Universe) -> Result<(), Error> {
    match s.members().iter().find(|&&m| !universe.contains(m)) {
        Some(&label) => Err(Error::LabelNotInUniverse { label }),
        None => Ok(()),
    }
}

/// Flags a row whose signs do not all share the row's denotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowCaveat {
    /// Two-term universe: the fraction sign `p/1.x` denotes the whole pair, not the
    /// single term leading the row.
    FractionDenotesPair,
}

impl RowCaveat {
    pub fn code(&self) -> &'static str {
        match self {
            RowCaveat::FractionDenotesPair => "fraction-denotes-pair",
        }
    }

    pub fn description(&self) -> &'static str {
        match self {
            RowCaveat::FractionDenotesPair => {
                "k=2 table is given literally: the fraction sign decodes to both terms, \
                 not to the row's single term"
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageRow {
    pub denotation: Combination,
    pub forms: Vec<Expression>,
    pub caveat: Option<RowCaveat>,
}

/// The sign table: one row per `(k-1)`-element combination, `k` forms each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageTable {
    universe: Universe,
    rows: Vec<LanguageRow>,
}

impl LanguageTable {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn rows(&self) -> &[LanguageRow] {
        &self.rows
    }

    pub fn signs(&self) -> impl Iterator<Item = &Expression> {
        self.rows.iter().flat_map(|r| r.forms.iter())
    }

    pub fn sign_count(&self) -> usize {
        self.rows.iter().map(|r| r.forms.len()).sum()
    }

    /// Signs containing at least one quasi-fraction.
    pub fn fraction_sign_count(&self) -> usize {
        self.signs().filter(|e| e.has_fraction()).count()
    }

    pub fn has_caveat(&self) -> bool {
        self.rows.iter().any(|r| r.caveat.is_some())
    }
}

/// Build the `k^2`-sign table for `universe` (requires `k >= 2`).
///
/// For `k >= 3` the rows are the `(k-1)`-element combinations in place order, each with
/// [`all_forms`]. For `k = 2` the table pairs each term `x` with `p/1.y`, where `p` is the
/// place of `x` and `y` the other term; those rows carry [`RowCaveat::FractionDenotesPair`].
pub fn generate_language(universe: &Universe) -> Result<LanguageTable, Error> {
    let k = universe.k();
    if k < 2 {
        return Err(Error::UniverseTooSmall { k, min: 2 });
    }
    let rows = if k == 2 {
        let labels = universe.labels();
        (0..2)
            .map(|i| {
                let own = labels[i];
                let other = labels[1 - i];
                let fraction = Atom::Fraction {
                    place: i as u64 + 1,
                    class_number: 1,
                };
                LanguageRow {
                    denotation: Combination::new(vec![own]).expect("label is positive"),
                    forms: vec![
                        Expression::new(vec![Atom::Simple(own)]).expect("label is positive"),
                        Expression::new(vec![fraction, Atom::Simple(other)])
                            .expect("numerals are positive"),
                    ],
                    caveat: Some(RowCaveat::FractionDenotesPair),
                }
            })
            .collect()
    } else {
        enumerate_class(universe, k - 1)?
            .into_iter()
            .map(|denotation| {
                let forms = all_forms(&denotation, universe)?;
                Ok(LanguageRow {
                    denotation,
                    forms,
                    caveat: None,
                })
            })
            .collect::<Result<Vec<_>, Error>>()?
    };
    Ok(LanguageTable {
        universe: universe.clone(),
        rows,
    })
}
