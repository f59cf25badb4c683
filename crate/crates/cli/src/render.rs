//! Text and JSON renderings. Every function here is deterministic.

use serde::Serialize;

use combinatoria_core::notation::NotationStyle;
use combinatoria_core::{Combination, Expression, Label, LanguageTable, RowCaveat};

/// `(p) x.y.z` lines, one per combination, in the given order.
pub fn numbered_list(class: &[Combination]) -> String {
    let mut out = String::new();
    for (i, c) in class.iter().enumerate() {
        if c.exponent() == 0 {
            out.push_str(&format!("({})\n", i + 1));
        } else {
            out.push_str(&format!("({}) {}\n", i + 1, c));
        }
    }
    out
}

pub fn expression_lines(forms: &[Expression], style: NotationStyle) -> String {
    forms
        .iter()
        .map(|e| format!("{}\n", e.styled(style)))
        .collect()
}

/// One line per row: the row's forms, tab-separated.
pub fn table_text(table: &LanguageTable, style: NotationStyle) -> String {
    let mut out = String::new();
    for row in table.rows() {
        let cells: Vec<String> = row
            .forms
            .iter()
            .map(|e| e.styled(style).to_string())
            .collect();
        out.push_str(&cells.join("\t"));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct TableDoc {
    universe: Vec<Label>,
    k: usize,
    sign_count: usize,
    rows: Vec<RowDoc>,
}

#[derive(Serialize)]
struct RowDoc {
    denotation: String,
    members: Vec<Label>,
    forms: Vec<String>,
    caveat: Option<CaveatDoc>,
}

#[derive(Serialize)]
struct CaveatDoc {
    code: &'static str,
    description: &'static str,
}

impl From<RowCaveat> for CaveatDoc {
    fn from(c: RowCaveat) -> Self {
        CaveatDoc {
            code: c.code(),
            description: c.description(),
        }
    }
}

/// Pretty-printed JSON with a fixed key order, newline-terminated.
pub fn table_json(table: &LanguageTable, style: NotationStyle) -> String {
    let doc = TableDoc {
        universe: table.universe().labels().to_vec(),
        k: table.universe().k(),
        sign_count: table.sign_count(),
        rows: table
            .rows()
            .iter()
            .map(|row| RowDoc {
                denotation: row.denotation.to_string(),
                members: row.denotation.members().to_vec(),
                forms: row
                    .forms
                    .iter()
                    .map(|e| e.styled(style).to_string())
                    .collect(),
                caveat: row.caveat.map(CaveatDoc::from),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("table documents always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use combinatoria_core::semantics::generate_language;
    use combinatoria_core::Universe;

    #[test]
    fn two_term_table_text() {
        let table = generate_language(&Universe::of_size(2).unwrap()).unwrap();
        assert_eq!(
            table_text(&table, NotationStyle::Plain),
            "1\t1/1.2\n2\t2/1.1\n"
        );
        assert_eq!(
            table_text(&table, NotationStyle::Prefixed),
            "a1\t1/1.a2\na2\t2/1.a1\n"
        );
    }

    #[test]
    fn json_carries_caveat_only_for_two_terms() {
        let two = generate_language(&Universe::of_size(2).unwrap()).unwrap();
        let v: serde_json::Value =
            serde_json::from_str(&table_json(&two, NotationStyle::Plain)).unwrap();
        assert_eq!(v["rows"][0]["caveat"]["code"], "fraction-denotes-pair");
        assert_eq!(v["rows"][1]["forms"][1], "2/1.1");

        let three = generate_language(&Universe::of_size(3).unwrap()).unwrap();
        let v: serde_json::Value =
            serde_json::from_str(&table_json(&three, NotationStyle::Plain)).unwrap();
        assert!(v["rows"][0]["caveat"].is_null());
        assert_eq!(v["sign_count"], 9);
    }

    #[test]
    fn numbered_list_format() {
        let c = |m: &[u64]| Combination::new(m.to_vec()).unwrap();
        assert_eq!(
            numbered_list(&[c(&[3, 6]), c(&[3, 7])]),
            "(1) 3.6\n(2) 3.7\n"
        );
        assert_eq!(numbered_list(&[Combination::empty()]), "(1)\n");
    }
}
