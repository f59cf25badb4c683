//! The invariant suite behind `combinatoria verify`.
//!
//! Formula-level checks run for `k` up to `min(k_max, 64)`; exhaustive checks against
//! brute-force oracles run up to `min(k_max, 10)`. The oracles here (Pascal's triangle,
//! bitmask subset enumeration) share no code with the library's ranking path.

use std::collections::HashSet;

use combinatoria_core::claims::{
    complexiones_simpliciter, genus_species_decomposition, language_size, leibniz_claim_check,
    semi_fractional_count,
};
use combinatoria_core::combinatorics::{binomial, enumerate_class, rank, unrank};
use combinatoria_core::notation::{parse, print};
use combinatoria_core::semantics::{all_forms, decode, encode_semi_fractional, generate_language};
use combinatoria_core::{Combination, Label, Universe};

pub const FORMULA_CAP: u64 = 64;
pub const EXHAUSTIVE_CAP: u64 = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn from_result(name: &'static str, r: Result<String, String>) -> Self {
        match r {
            Ok(detail) => Check {
                name,
                passed: true,
                detail,
            },
            Err(detail) => Check {
                name,
                passed: false,
                detail,
            },
        }
    }

    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        format!("{status} {}: {}", self.name, self.detail)
    }
}

/// Pascal's triangle through row `n`.
pub fn pascal(n: usize) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![1u64; i + 1];
        for j in 1..i {
            row[j] = rows[i - 1][j - 1] + rows[i - 1][j];
        }
        rows.push(row);
    }
    rows
}

/// All `c`-subsets of `universe` by bitmask, sorted lexicographically.
pub fn brute_force_class(universe: &Universe, c: usize) -> Vec<Vec<Label>> {
    let k = universe.k();
    let mut out: Vec<Vec<Label>> = (0u64..1 << k)
        .filter(|m| m.count_ones() as usize == c)
        .map(|m| {
            (0..k)
                .filter(|i| m & (1 << i) != 0)
                .map(|i| universe.labels()[i])
                .collect()
        })
        .collect();
    out.sort();
    out
}

/// Number of nonempty subsets of a `k`-set, counted one by one.
pub fn brute_force_nonempty_subsets(k: u32) -> u64 {
    (1u64..1 << k).count() as u64
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn range_note(lo: u64, hi: u64) -> String {
    if lo > hi {
        "no k in range".to_string()
    } else {
        format!("k={lo}..={hi}")
    }
}

fn proposition_identity(hi: u64) -> Result<String, String> {
    let t = pascal(hi as usize);
    for k in 2..=hi {
        let ku = k as usize;
        let oracle = t[ku][ku - 1] * (1 + t[ku - 1][ku - 2]);
        ensure(oracle == k * k, || {
            format!("Pascal oracle gives {oracle} at k={k}")
        })?;
        let size = language_size(k).map_err(|e| e.to_string())?;
        ensure(size == k * k, || format!("language_size({k}) = {size}"))?;
        let semi = semi_fractional_count(k).map_err(|e| e.to_string())?;
        ensure(semi == t[ku][ku - 1] * t[ku - 1][ku - 2], || {
            format!("semi_fractional_count({k}) = {semi}")
        })?;
    }
    Ok(range_note(2, hi))
}

fn binomial_vs_pascal(hi: u64) -> Result<String, String> {
    let t = pascal(hi as usize);
    for n in 0..=hi {
        for m in 0..=n + 1 {
            let expected = t[n as usize].get(m as usize).copied().unwrap_or(0);
            let got = binomial(n, m).map_err(|e| e.to_string())?;
            ensure(got == expected, || {
                format!("C({n},{m}) = {got}, expected {expected}")
            })?;
        }
    }
    Ok(format!("n=0..={hi}"))
}

fn rank_unrank_bijection(hi: u64) -> Result<String, String> {
    for k in 1..=hi as usize {
        let universe = Universe::new((1..=k as Label).map(|x| x * x).collect()).unwrap();
        for c in 0..=k {
            let oracle = brute_force_class(&universe, c);
            let class = enumerate_class(&universe, c).map_err(|e| e.to_string())?;
            let size = binomial(k as u64, c as u64).map_err(|e| e.to_string())?;
            ensure(
                class.len() as u64 == size && oracle.len() as u64 == size,
                || format!("class {c} of k={k} has {} members", class.len()),
            )?;
            for (i, (s, expected)) in class.iter().zip(&oracle).enumerate() {
                let place = i as u64 + 1;
                ensure(s.members() == expected.as_slice(), || {
                    format!("k={k} c={c} place {place}: {s} vs oracle {expected:?}")
                })?;
                let oracle_comb = Combination::new(expected.clone()).unwrap();
                let r = rank(&oracle_comb, &universe).map_err(|e| e.to_string())?;
                ensure(r == place, || {
                    format!("rank({oracle_comb}) = {r}, expected {place}")
                })?;
                let u = unrank(c, place, &universe).map_err(|e| e.to_string())?;
                ensure(u == oracle_comb, || format!("unrank({c},{place}) = {u}"))?;
            }
        }
    }
    Ok(range_note(1, hi))
}

fn simpliciter_vs_subsets(hi: u64) -> Result<String, String> {
    for k in 1..=hi as u32 {
        let got = complexiones_simpliciter(k).map_err(|e| e.to_string())?;
        let brute = brute_force_nonempty_subsets(k);
        ensure(got == brute, || format!("k={k}: {got} vs {brute}"))?;
    }
    Ok(range_note(1, hi))
}

fn encode_decode_inverse(hi: u64) -> Result<String, String> {
    let mut checked = 0usize;
    for k in 2..=hi as usize {
        let universe = Universe::of_size(k).unwrap();
        for e in 2..=k {
            for s in enumerate_class(&universe, e).map_err(|e| e.to_string())? {
                for &x in s.members() {
                    let enc =
                        encode_semi_fractional(&s, x, &universe).map_err(|e| e.to_string())?;
                    let dec = decode(&enc, &universe).map_err(|e| e.to_string())?;
                    ensure(dec == s, || format!("{enc} decodes to {dec}, expected {s}"))?;
                    checked += 1;
                }
                let n = all_forms(&s, &universe).map_err(|e| e.to_string())?.len();
                ensure(n == e + 1, || format!("{s} has {n} forms"))?;
            }
        }
    }
    Ok(format!("{}, {checked} encodings", range_note(2, hi)))
}

fn language_tables(hi: u64) -> Result<String, String> {
    for k in 2..=hi {
        let universe = Universe::of_size(k as usize).unwrap();
        let table = generate_language(&universe).map_err(|e| e.to_string())?;
        let size = language_size(k).map_err(|e| e.to_string())?;
        ensure(table.sign_count() as u64 == size, || {
            format!("k={k}: {} signs, expected {size}", table.sign_count())
        })?;
        let semi = semi_fractional_count(k).map_err(|e| e.to_string())?;
        ensure(table.fraction_sign_count() as u64 == semi, || {
            format!(
                "k={k}: {} fraction signs, expected {semi}",
                table.fraction_sign_count()
            )
        })?;
        let mut seen = HashSet::new();
        for sign in table.signs() {
            let text = print(sign);
            let back = parse(&text).map_err(|e| e.to_string())?;
            ensure(&back == sign, || format!("{text} does not round-trip"))?;
            ensure(seen.insert(text.clone()), || {
                format!("k={k}: duplicate sign {text}")
            })?;
        }
        ensure(table.has_caveat() == (k == 2), || {
            format!("k={k}: caveat flag mismatch")
        })?;
    }
    Ok(range_note(2, hi))
}

fn co_signification(hi: u64) -> Result<String, String> {
    for k in 3..=hi as usize {
        let universe = Universe::of_size(k).unwrap();
        let table = generate_language(&universe).map_err(|e| e.to_string())?;
        ensure(table.rows().len() == k, || {
            format!("k={k}: {} rows", table.rows().len())
        })?;
        let mut denotations = HashSet::new();
        for row in table.rows() {
            ensure(row.forms.len() == k, || {
                format!("k={k}: row {} width", row.denotation)
            })?;
            for sign in &row.forms {
                let d = decode(sign, &universe).map_err(|e| e.to_string())?;
                ensure(d == row.denotation, || {
                    format!("k={k}: {sign} denotes {d}, row is {}", row.denotation)
                })?;
            }
            ensure(denotations.insert(row.denotation.clone()), || {
                format!("k={k}: repeated row {}", row.denotation)
            })?;
        }
    }
    Ok(range_note(3, hi))
}

fn claim_check() -> Result<String, String> {
    let mut parts = Vec::new();
    for e in 2..=4 {
        let r = leibniz_claim_check(e).map_err(|e| e.to_string())?;
        ensure(r.matches == (e == 3), || {
            format!(
                "e={e}: {} vs {} (matches={})",
                r.historical_count, r.simpliciter_count, r.matches
            )
        })?;
        parts.push(format!(
            "e={e}: {} vs {} {}",
            r.historical_count,
            r.simpliciter_count,
            if r.matches { "match" } else { "mismatch" }
        ));
    }
    Ok(parts.join("; "))
}

fn decomposition_totals(hi: u64) -> Result<String, String> {
    for e in 1..=hi {
        let s = Combination::new((1..=e).collect()).unwrap();
        let groups = genus_species_decomposition(&s).map_err(|e| e.to_string())?;
        let total: usize = groups.values().map(Vec::len).sum();
        let brute = brute_force_nonempty_subsets(e as u32);
        ensure(total as u64 == brute, || {
            format!("e={e}: {total} subsets, expected {brute}")
        })?;
    }
    Ok(format!("e=1..={hi}"))
}

/// Run every check. `k_max` must be at least 2.
pub fn run_checks(k_max: u64) -> Vec<Check> {
    let formula = k_max.min(FORMULA_CAP);
    let exhaustive = k_max.min(EXHAUSTIVE_CAP);
    vec![
        Check::from_result("proposition-identity", proposition_identity(formula)),
        Check::from_result("binomial-vs-pascal", binomial_vs_pascal(formula)),
        Check::from_result("rank-unrank-bijection", rank_unrank_bijection(exhaustive)),
        Check::from_result("simpliciter-vs-subsets", simpliciter_vs_subsets(exhaustive)),
        Check::from_result("encode-decode-inverse", encode_decode_inverse(exhaustive)),
        Check::from_result("language-tables", language_tables(exhaustive)),
        Check::from_result("co-signification", co_signification(exhaustive)),
        Check::from_result("claim-check", claim_check()),
        Check::from_result("genus-species-totals", decomposition_totals(exhaustive)),
    ]
}
