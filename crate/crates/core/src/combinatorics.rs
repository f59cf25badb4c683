//! Classes of combinations over a numbered universe, with exact ranking.
//!
//! Inside a class, combinations are ordered ascending-lexicographically on their sorted
//! member lists. Place numbers are 1-based positions in that order. Ranking uses the
//! combinatorial number system, so it costs O(k) binomials rather than a scan of the class.

use alloc::vec::Vec;
use core::fmt;

use crate::Error;

/// A primitive term's number.
pub type Label = u64;

/// 1-based position of a combination inside its class.
pub type Place = u64;

/// Exact `C(n, m)`. Zero when `m > n`; [`Error::Overflow`] if the value exceeds `u64`.
pub fn binomial(n: u64, m: u64) -> Result<u64, Error> {
    if m > n {
        return Ok(0);
    }
    let m = m.min(n - m);
    let mut acc: u128 = 1;
    for i in 0..m {
        // acc = C(n, i) here; the sequence only grows for i <= n/2.
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return Err(Error::Overflow);
        }
    }
    Ok(acc as u64)
}

fn choose(n: usize, m: usize) -> Result<u64, Error> {
    binomial(n as u64, m as u64)
}

/// The ordered class of `k` numbered primitive terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    labels: Vec<Label>,
}

impl Universe {
    /// Labels must be strictly ascending, all at least 1, and there must be at least one.
    pub fn new(labels: Vec<Label>) -> Result<Self, Error> {
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if !strictly_ascending_positive(&labels) {
            return Err(Error::InvalidLabels);
        }
        Ok(Universe { labels })
    }

    /// The universe `1, 2, ..., k`.
    pub fn of_size(k: usize) -> Result<Self, Error> {
        Universe::new((1..=k as Label).collect())
    }

    pub fn k(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// 0-based position of `label`, if it belongs to the universe.
    pub fn position(&self, label: Label) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn contains(&self, label: Label) -> bool {
        self.position(label).is_some()
    }

    /// Number of combinations in class `c`.
    pub fn class_size(&self, c: usize) -> Result<u64, Error> {
        choose(self.k(), c)
    }

    /// Lazily walk class `c` in place order.
    pub fn class(&self, c: usize) -> Result<ClassIter<'_>, Error> {
        if c > self.k() {
            return Err(Error::ClassOutOfRange {
                class: c,
                k: self.k(),
            });
        }
        Ok(ClassIter {
            universe: self,
            indices: (0..c).collect(),
            done: false,
        })
    }

    fn positions_of(&self, s: &Combination) -> Result<Vec<usize>, Error> {
        s.members()
            .iter()
            .map(|&label| {
                self.position(label)
                    .ok_or(Error::LabelNotInUniverse { label })
            })
            .collect()
    }

    fn combination_at(&self, indices: &[usize]) -> Combination {
        Combination {
            members: indices.iter().map(|&i| self.labels[i]).collect(),
        }
    }
}

fn strictly_ascending_positive(labels: &[Label]) -> bool {
    labels.first().is_none_or(|&first| first >= 1) && labels.windows(2).all(|w| w[0] < w[1])
}

/// A subset of a universe; its exponent (class number) is its size.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Combination {
    members: Vec<Label>,
}

impl Combination {
    pub fn new(members: Vec<Label>) -> Result<Self, Error> {
        if !strictly_ascending_positive(&members) {
            return Err(Error::InvalidMembers);
        }
        Ok(Combination { members })
    }

    /// Sorts and deduplicates first, then validates.
    pub fn from_unsorted(mut members: Vec<Label>) -> Result<Self, Error> {
        members.sort_unstable();
        members.dedup();
        Combination::new(members)
    }

    /// The single combination of class 0.
    pub fn empty() -> Self {
        Combination::default()
    }

    pub fn members(&self) -> &[Label] {
        &self.members
    }

    pub fn exponent(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, label: Label) -> bool {
        self.members.binary_search(&label).is_ok()
    }

    pub fn is_subset_of(&self, universe: &Universe) -> bool {
        self.members.iter().all(|&m| universe.contains(m))
    }

    /// The combination with `label` removed (unchanged if absent).
    pub fn without(&self, label: Label) -> Combination {
        Combination {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&m| m != label)
                .collect(),
        }
    }
}

/// Dotted full form, e.g. `3.6.9`. The empty combination prints as nothing.
impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// A citation `place / class_number` of a combination by its position in a class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassRef {
    class_number: usize,
    place: Place,
}

impl ClassRef {
    /// Checks `1 <= class_number <= k` and `1 <= place <= C(k, class_number)`.
    pub fn new(class_number: usize, place: Place, universe: &Universe) -> Result<Self, Error> {
        if class_number == 0 || class_number > universe.k() {
            return Err(Error::ClassOutOfRange {
                class: class_number,
                k: universe.k(),
            });
        }
        let max = universe.class_size(class_number)?;
        if place == 0 || place > max {
            return Err(Error::PlaceOutOfRange {
                class: class_number,
                place,
                max,
            });
        }
        Ok(ClassRef {
            class_number,
            place,
        })
    }

    /// The class reference of a nonempty combination.
    pub fn of(s: &Combination, universe: &Universe) -> Result<Self, Error> {
        if s.exponent() == 0 {
            return Err(Error::EmptyCombination);
        }
        Ok(ClassRef {
            class_number: s.exponent(),
            place: rank(s, universe)?,
        })
    }

    pub fn class_number(&self) -> usize {
        self.class_number
    }

    pub fn place(&self) -> Place {
        self.place
    }

    pub fn resolve(&self, universe: &Universe) -> Result<Combination, Error> {
        unrank(self.class_number, self.place, universe)
    }
}

/// All `C(k, c)` combinations of class `c`, in place order.
pub fn enumerate_class(universe: &Universe, c: usize) -> Result<Vec<Combination>, Error> {
    Ok(universe.class(c)?.collect())
}

/// 1-based place of `s` within class `|s|`.
pub fn rank(s: &Combination, universe: &Universe) -> Result<Place, Error> {
    let positions = universe.positions_of(s)?;
    let k = universe.k();
    let c = positions.len();
    // Lexicographic rank = C(k, c) - 1 - sum_j C(k - 1 - a_j, c - j): the complement of the
    // colexicographic rank of the mirrored subset.
    let mut tail: u64 = 0;
    for (j, &a) in positions.iter().enumerate() {
        tail = tail
            .checked_add(choose(k - 1 - a, c - j)?)
            .ok_or(Error::Overflow)?;
    }
    Ok(choose(k, c)? - tail)
}

/// The combination at 1-based `place` of class `c`. Class 0 holds only the empty combination.
pub fn unrank(c: usize, place: Place, universe: &Universe) -> Result<Combination, Error> {
    let k = universe.k();
    if c > k {
        return Err(Error::ClassOutOfRange { class: c, k });
    }
    let max = choose(k, c)?;
    if place == 0 || place > max {
        return Err(Error::PlaceOutOfRange {
            class: c,
            place,
            max,
        });
    }
    let mut remaining = place - 1;
    let mut indices = Vec::with_capacity(c);
    let mut next = 0;
    for slot in 0..c {
        let mut candidate = next;
        loop {
            // Combinations starting this slot with `candidate` fill the rest from above it.
            let block = choose(k - 1 - candidate, c - 1 - slot)?;
            if remaining < block {
                break;
            }
            remaining -= block;
            candidate += 1;
        }
        indices.push(candidate);
        next = candidate + 1;
    }
    Ok(universe.combination_at(&indices))
}

/// Iterator over one class in place order; see [`Universe::class`].
#[derive(Debug, Clone)]
pub struct ClassIter<'a> {
    universe: &'a Universe,
    indices: Vec<usize>,
    done: bool,
}

impl Iterator for ClassIter<'_> {
    type Item = Combination;

    fn next(&mut self) -> Option<Combination> {
        if self.done {
            return None;
        }
        let current = self.universe.combination_at(&self.indices);
        let k = self.universe.k();
        let c = self.indices.len();
        // Advance the rightmost index that still has room.
        match (0..c).rev().find(|&i| self.indices[i] < k - c + i) {
            Some(i) => {
                self.indices[i] += 1;
                for j in i + 1..c {
                    self.indices[j] = self.indices[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(labels: &[Label]) -> Universe {
        Universe::new(labels.to_vec()).unwrap()
    }

    fn comb(members: &[Label]) -> Combination {
        Combination::new(members.to_vec()).unwrap()
    }

    /// Pascal's triangle, independent of the multiplicative formula.
    fn pascal(rows: usize) -> Vec<Vec<u64>> {
        let mut t: Vec<Vec<u64>> = Vec::new();
        for n in 0..=rows {
            let mut row = vec![1u64; n + 1];
            for m in 1..n {
                row[m] = t[n - 1][m - 1] + t[n - 1][m];
            }
            t.push(row);
        }
        t
    }

    /// Every c-subset by bitmask, sorted lexicographically.
    fn brute_force_class(universe: &Universe, c: usize) -> Vec<Vec<Label>> {
        let k = universe.k();
        let mut out: Vec<Vec<Label>> = (0u32..1 << k)
            .filter(|mask| mask.count_ones() as usize == c)
            .map(|mask| {
                (0..k)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| universe.labels()[i])
                    .collect()
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(6, 4), Ok(15));
        assert_eq!(binomial(5, 0), Ok(1));
        assert_eq!(binomial(12, 6), Ok(924));
        assert_eq!(binomial(3, 5), Ok(0));
    }

    #[test]
    fn binomial_matches_pascal() {
        let t = pascal(60);
        for (n, row) in t.iter().enumerate() {
            for (m, &expected) in row.iter().enumerate() {
                assert_eq!(binomial(n as u64, m as u64), Ok(expected), "C({n},{m})");
            }
        }
    }

    #[test]
    fn binomial_overflow_is_reported() {
        assert_eq!(binomial(67, 33), Ok(14_226_520_737_620_288_370));
        assert_eq!(binomial(68, 34), Err(Error::Overflow));
        assert_eq!(binomial(u64::MAX, 1), Ok(u64::MAX));
        assert_eq!(binomial(u64::MAX, 2), Err(Error::Overflow));
    }

    #[test]
    fn universe_validation() {
        assert_eq!(Universe::new(vec![]), Err(Error::EmptyUniverse));
        assert_eq!(Universe::new(vec![0, 1]), Err(Error::InvalidLabels));
        assert_eq!(Universe::new(vec![3, 3]), Err(Error::InvalidLabels));
        assert_eq!(Universe::new(vec![6, 3]), Err(Error::InvalidLabels));
        assert_eq!(Universe::of_size(4).unwrap().labels(), &[1, 2, 3, 4]);
        assert_eq!(Combination::new(vec![2, 1]), Err(Error::InvalidMembers));
        assert_eq!(
            Combination::from_unsorted(vec![9, 3, 6, 3]).unwrap(),
            comb(&[3, 6, 9])
        );
    }

    #[test]
    fn second_class_over_3679() {
        let universe = u(&[3, 6, 7, 9]);
        let class: Vec<_> = enumerate_class(&universe, 2)
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(class, ["3.6", "3.7", "3.9", "6.7", "6.9", "7.9"]);
    }

    #[test]
    fn fourth_class_over_six() {
        let universe = Universe::of_size(6).unwrap();
        let class = enumerate_class(&universe, 4).unwrap();
        assert_eq!(class.len(), 15);
        assert_eq!(class[0], comb(&[1, 2, 3, 4]));
        assert_eq!(class[4], comb(&[1, 2, 4, 6]));
        assert_eq!(class[5], comb(&[1, 2, 5, 6]));
        assert_eq!(class[14], comb(&[3, 4, 5, 6]));
    }

    #[test]
    fn class_zero_is_the_empty_combination() {
        let universe = u(&[3, 6, 7, 9]);
        assert_eq!(
            enumerate_class(&universe, 0).unwrap(),
            vec![Combination::empty()]
        );
        assert_eq!(rank(&Combination::empty(), &universe), Ok(1));
        assert_eq!(unrank(0, 1, &universe), Ok(Combination::empty()));
        assert_eq!(
            enumerate_class(&universe, 5),
            Err(Error::ClassOutOfRange { class: 5, k: 4 })
        );
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&comb(&[6, 9]), &u(&[3, 6, 7, 9])), Ok(5));
        let six = Universe::of_size(6).unwrap();
        assert_eq!(rank(&comb(&[1, 4, 5, 6]), &six), Ok(10));
        assert_eq!(rank(&comb(&[1, 2, 3]), &six), Ok(1));
        assert_eq!(
            rank(&comb(&[1, 8]), &six),
            Err(Error::LabelNotInUniverse { label: 8 })
        );
    }

    #[test]
    fn unrank_examples_and_errors() {
        let universe = u(&[3, 6, 7, 9]);
        assert_eq!(unrank(2, 1, &universe), Ok(comb(&[3, 6])));
        let six = Universe::of_size(6).unwrap();
        assert_eq!(unrank(4, 15, &six), Ok(comb(&[3, 4, 5, 6])));
        assert_eq!(unrank(6, 1, &six), Ok(comb(&[1, 2, 3, 4, 5, 6])));
        assert_eq!(
            unrank(4, 16, &six),
            Err(Error::PlaceOutOfRange {
                class: 4,
                place: 16,
                max: 15
            })
        );
        assert_eq!(
            unrank(4, 0, &six),
            Err(Error::PlaceOutOfRange {
                class: 4,
                place: 0,
                max: 15
            })
        );
        assert_eq!(
            unrank(7, 1, &six),
            Err(Error::ClassOutOfRange { class: 7, k: 6 })
        );
    }

    #[test]
    fn class_ref_bounds() {
        let universe = u(&[3, 6, 7, 9]);
        assert!(ClassRef::new(2, 6, &universe).is_ok());
        assert!(ClassRef::new(0, 1, &universe).is_err());
        assert!(ClassRef::new(5, 1, &universe).is_err());
        assert!(ClassRef::new(2, 7, &universe).is_err());
        let r = ClassRef::of(&comb(&[6, 9]), &universe).unwrap();
        assert_eq!((r.place(), r.class_number()), (5, 2));
        assert_eq!(r.resolve(&universe), Ok(comb(&[6, 9])));
    }

    #[test]
    fn exhaustive_agreement_with_brute_force() {
        for k in 1..=12 {
            let universe = Universe::new((1..=k as Label).map(|x| 2 * x + 1).collect()).unwrap();
            for c in 0..=k {
                let oracle = brute_force_class(&universe, c);
                let class = enumerate_class(&universe, c).unwrap();
                assert_eq!(class.len() as u64, binomial(k as u64, c as u64).unwrap());
                assert_eq!(class.len(), oracle.len());
                for (i, (s, expected)) in class.iter().zip(&oracle).enumerate() {
                    assert_eq!(s.members(), expected.as_slice());
                    let place = i as Place + 1;
                    assert_eq!(rank(s, &universe), Ok(place));
                    assert_eq!(unrank(c, place, &universe).as_ref(), Ok(s));
                }
            }
        }
    }

    #[test]
    fn ranks_ignore_label_values() {
        let plain = Universe::of_size(4).unwrap();
        let relabeled = u(&[3, 6, 7, 9]);
        for c in 0..=4 {
            for s in enumerate_class(&plain, c).unwrap() {
                let mapped = Combination::new(
                    s.members()
                        .iter()
                        .map(|&m| relabeled.labels()[m as usize - 1])
                        .collect(),
                )
                .unwrap();
                assert_eq!(rank(&s, &plain), rank(&mapped, &relabeled));
            }
        }
    }
}
