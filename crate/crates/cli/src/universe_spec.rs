use std::fmt;
use std::str::FromStr;

use combinatoria_core::{Error, Label, Universe};

/// How a universe is given on the command line: explicit labels or a size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UniverseSpec {
    /// `--universe 3,6,7,9`
    Labels(Vec<Label>),
    /// `--k 6`, meaning `1..=6`
    Size(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecError {
    BadLabel(String),
    Invalid(Error),
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::BadLabel(s) => write!(f, "invalid universe label {s:?}"),
            SpecError::Invalid(e) => write!(f, "invalid universe: {e}"),
        }
    }
}

impl std::error::Error for SpecError {}

impl FromStr for UniverseSpec {
    type Err = SpecError;

    /// Comma-separated labels; surrounding whitespace per label is ignored.
    fn from_str(s: &str) -> Result<Self, SpecError> {
        s.split(',')
            .map(|part| {
                let part = part.trim();
                match part.parse::<Label>() {
                    Ok(v) if !part.starts_with('+') => Ok(v),
                    _ => Err(SpecError::BadLabel(part.to_string())),
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(UniverseSpec::Labels)
    }
}

impl UniverseSpec {
    pub fn resolve(&self) -> Result<Universe, SpecError> {
        match self {
            UniverseSpec::Labels(labels) => Universe::new(labels.clone()),
            UniverseSpec::Size(k) => Universe::of_size(*k),
        }
        .map_err(SpecError::Invalid)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_label_lists() {
        let spec: UniverseSpec = "3,6, 7 ,9".parse().unwrap();
        assert_eq!(spec.resolve().unwrap().labels(), &[3, 6, 7, 9]);
        assert_eq!(
            UniverseSpec::Size(3).resolve().unwrap().labels(),
            &[1, 2, 3]
        );
    }

    #[test]
    fn rejects_bad_specs() {
        assert!("3,x".parse::<UniverseSpec>().is_err());
        assert!("3,,6".parse::<UniverseSpec>().is_err());
        assert!("-1,2".parse::<UniverseSpec>().is_err());
        assert!("+1,2".parse::<UniverseSpec>().is_err());
        let descending: UniverseSpec = "6,3".parse().unwrap();
        assert_eq!(
            descending.resolve(),
            Err(SpecError::Invalid(Error::InvalidLabels))
        );
        let dup: UniverseSpec = "3,3".parse().unwrap();
        assert!(dup.resolve().is_err());
        assert_eq!(
            UniverseSpec::Size(0).resolve(),
            Err(SpecError::Invalid(Error::EmptyUniverse))
        );
    }
}
