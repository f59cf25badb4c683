//! Concrete syntax: simple terms and quasi-fractions joined by `.`.
//!
//! ```text
//! expr     := atom ("." atom)*
//! atom     := fraction | simple
//! fraction := INT "/" INT
//! simple   := INT
//! INT      := nonzero digit followed by digits
//! ```
//!
//! Whitespace between tokens is skipped. Parsing is context-free; whether the numbers
//! make sense for a given universe is decided by [`crate::semantics`].

use alloc::vec::Vec;
use core::fmt;

use crate::combinatorics::{Label, Place};

/// One juxtaposed piece of an expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Atom {
    /// A primitive term written by its number.
    Simple(Label),
    /// `place / class_number`: the combination at `place` in class `class_number`.
    Fraction { place: Place, class_number: u64 },
}

impl Atom {
    pub fn is_fraction(&self) -> bool {
        matches!(self, Atom::Fraction { .. })
    }
}

/// A nonempty sequence of atoms in written order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Expression {
    atoms: Vec<Atom>,
}

impl Expression {
    /// `None` if `atoms` is empty or holds a zero numeral.
    pub fn new(atoms: Vec<Atom>) -> Option<Self> {
        let numerals_ok = atoms.iter().all(|a| match *a {
            Atom::Simple(label) => label >= 1,
            Atom::Fraction {
                place,
                class_number,
            } => place >= 1 && class_number >= 1,
        });
        (!atoms.is_empty() && numerals_ok).then_some(Expression { atoms })
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn has_fraction(&self) -> bool {
        self.atoms.iter().any(Atom::is_fraction)
    }

    /// Render with the given style; `Display` uses [`NotationStyle::Plain`].
    pub fn styled(&self, style: NotationStyle) -> Styled<'_> {
        Styled { expr: self, style }
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.styled(NotationStyle::Plain).fmt(f)
    }
}

impl core::str::FromStr for Expression {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse(s)
    }
}

/// How simple terms are written. The canonical form is [`NotationStyle::Plain`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NotationStyle {
    /// `1/4.5`
    #[default]
    Plain,
    /// `1/4.a5`, the subscript convention with `a_i` written `ai`.
    Prefixed,
}

pub struct Styled<'a> {
    expr: &'a Expression,
    style: NotationStyle,
}

impl fmt::Display for Styled<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, atom) in self.expr.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            match (atom, self.style) {
                (Atom::Simple(label), NotationStyle::Plain) => write!(f, "{label}")?,
                (Atom::Simple(label), NotationStyle::Prefixed) => write!(f, "a{label}")?,
                (
                    Atom::Fraction {
                        place,
                        class_number,
                    },
                    _,
                ) => write!(f, "{place}/{class_number}")?,
            }
        }
        Ok(())
    }
}

/// Canonical text of `expr`.
pub fn print(expr: &Expression) -> alloc::string::String {
    use alloc::string::ToString;
    expr.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    EmptyInput,
    /// Input ended where a numeral was required (after `.` or `/`).
    ExpectedNumeral,
    UnexpectedChar(char),
    ZeroNumeral,
    LeadingZero,
    NumeralTooLarge,
}

/// A syntax error at a 0-based character offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at column {}: ", self.position + 1)?;
        match self.kind {
            ParseErrorKind::EmptyInput => f.write_str("empty expression"),
            ParseErrorKind::ExpectedNumeral => f.write_str("expected a numeral"),
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::ZeroNumeral => f.write_str("numerals must be at least 1"),
            ParseErrorKind::LeadingZero => f.write_str("numerals may not have leading zeros"),
            ParseErrorKind::NumeralTooLarge => f.write_str("numeral too large"),
        }
    }
}

impl core::error::Error for ParseError {}

/// Parse an expression, keeping atoms in written order.
pub fn parse(text: &str) -> Result<Expression, ParseError> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    parser.skip_ws();
    if parser.at_end() {
        return Err(parser.error(ParseErrorKind::EmptyInput));
    }
    let mut atoms = Vec::new();
    loop {
        atoms.push(parser.atom()?);
        parser.skip_ws();
        match parser.peek() {
            None => break,
            Some('.') => parser.pos += 1,
            Some(c) => return Err(parser.error(ParseErrorKind::UnexpectedChar(c))),
        }
    }
    Ok(Expression { atoms })
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.pos,
            kind,
        }
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        let first = self.numeral()?;
        self.skip_ws();
        if self.peek() != Some('/') {
            return Ok(Atom::Simple(first));
        }
        self.pos += 1;
        let class_number = self.numeral()?;
        Ok(Atom::Fraction {
            place: first,
            class_number,
        })
    }

    fn numeral(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            None => return Err(self.error(ParseErrorKind::ExpectedNumeral)),
            Some('0') => {
                let kind = match self.chars.get(self.pos + 1) {
                    Some(c) if c.is_ascii_digit() => ParseErrorKind::LeadingZero,
                    _ => ParseErrorKind::ZeroNumeral,
                };
                return Err(self.error(kind));
            }
            Some(c) if !c.is_ascii_digit() => {
                return Err(self.error(ParseErrorKind::UnexpectedChar(c)))
            }
            Some(_) => {}
        }
        let mut value: u64 = 0;
        while let Some(digit) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(digit)))
                .ok_or(ParseError {
                    position: start,
                    kind: ParseErrorKind::NumeralTooLarge,
                })?;
            self.pos += 1;
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err(text: &str) -> (usize, ParseErrorKind) {
        let e = parse(text).unwrap_err();
        (e.position, e.kind)
    }

    #[test]
    fn parses_written_forms() {
        assert_eq!(
            parse("3.6.9").unwrap().atoms(),
            &[Atom::Simple(3), Atom::Simple(6), Atom::Simple(9)]
        );
        assert_eq!(
            parse("1/2.9").unwrap().atoms(),
            &[
                Atom::Fraction {
                    place: 1,
                    class_number: 2
                },
                Atom::Simple(9)
            ]
        );
        assert_eq!(parse("7").unwrap().atoms(), &[Atom::Simple(7)]);
        assert_eq!(parse("  11 / 4 .\t1 ").unwrap().to_string(), "11/4.1");
        assert_eq!(parse("1/2.3/2").unwrap().atoms().len(), 2);
    }

    #[test]
    fn prints_canonically() {
        let e = Expression::new(vec![
            Atom::Fraction {
                place: 5,
                class_number: 2,
            },
            Atom::Simple(3),
        ])
        .unwrap();
        assert_eq!(print(&e), "5/2.3");
        assert_eq!(e.styled(NotationStyle::Prefixed).to_string(), "5/2.a3");
        assert_eq!(print(&Expression::new(vec![Atom::Simple(1)]).unwrap()), "1");
        assert_eq!("3.6.9".parse::<Expression>().unwrap().to_string(), "3.6.9");
    }

    #[test]
    fn rejects_invalid_atom_lists() {
        assert!(Expression::new(vec![]).is_none());
        assert!(Expression::new(vec![Atom::Simple(0)]).is_none());
        assert!(Expression::new(vec![Atom::Fraction {
            place: 1,
            class_number: 0
        }])
        .is_none());
    }

    #[test]
    fn syntax_errors_are_positioned() {
        assert_eq!(err(""), (0, ParseErrorKind::EmptyInput));
        assert_eq!(err("   "), (3, ParseErrorKind::EmptyInput));
        assert_eq!(err("3."), (2, ParseErrorKind::ExpectedNumeral));
        assert_eq!(err(".3"), (0, ParseErrorKind::UnexpectedChar('.')));
        assert_eq!(err("3..6"), (2, ParseErrorKind::UnexpectedChar('.')));
        assert_eq!(err("1/"), (2, ParseErrorKind::ExpectedNumeral));
        assert_eq!(err("/2"), (0, ParseErrorKind::UnexpectedChar('/')));
        assert_eq!(err("1/2/3"), (3, ParseErrorKind::UnexpectedChar('/')));
        assert_eq!(err("3.0"), (2, ParseErrorKind::ZeroNumeral));
        assert_eq!(err("0/2"), (0, ParseErrorKind::ZeroNumeral));
        assert_eq!(err("3.06"), (2, ParseErrorKind::LeadingZero));
        assert_eq!(err("3 6"), (2, ParseErrorKind::UnexpectedChar('6')));
        assert_eq!(err("a1"), (0, ParseErrorKind::UnexpectedChar('a')));
        assert_eq!(err("3.٣"), (2, ParseErrorKind::UnexpectedChar('٣')));
        assert_eq!(
            err("1.99999999999999999999"),
            (2, ParseErrorKind::NumeralTooLarge)
        );
    }

    #[test]
    fn error_message_uses_one_based_column() {
        assert_eq!(
            parse("3.").unwrap_err().to_string(),
            "syntax error at column 3: expected a numeral"
        );
    }
}
