//! Printed order sequences stored as data.
//!
//! One record per line: `<label> | <n> | (o,m)(o,m)... | tag,tag`. Blank
//! lines and lines starting with `#` are skipped. Every record must be a
//! plausible sequence for its `n`.

use std::collections::BTreeSet;
use std::path::Path;

use crate::error::{Error, Result};
use crate::order_sequence::{is_plausible, OrderSequence};

pub const KNOWN_TAGS: &[&str] = &[
    "solvable",
    "nonsolvable",
    "supersolvable",
    "nonsupersolvable",
    "nilpotent",
    "nonnilpotent",
    "simple",
    "table1",
    "table2",
    "table3",
];

/// The shipped fixture file.
pub const BUILTIN_FIXTURES: &str = include_str!("../fixtures/printed.fixtures");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub label: String,
    pub n: u64,
    pub sequence: OrderSequence,
    pub tags: BTreeSet<String>,
}

impl Fixture {
    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.contains(tag)
    }

    /// The record in file syntax.
    pub fn to_line(&self) -> String {
        let tags: Vec<&str> = self.tags.iter().map(String::as_str).collect();
        format!(
            "{} | {} | {} | {}",
            self.label,
            self.n,
            self.sequence.pairs_text(),
            tags.join(",")
        )
    }
}

fn parse_line(line: &str, lineno: usize) -> Result<Fixture> {
    let err = |msg: String| Error::Fixture { line: lineno, msg };
    let fields: Vec<&str> = line.split('|').map(str::trim).collect();
    if fields.len() != 4 {
        return Err(err(format!(
            "expected 4 fields separated by `|`, found {}",
            fields.len()
        )));
    }
    let label = fields[0];
    if label.is_empty() || label.chars().any(char::is_whitespace) {
        return Err(err(format!("bad label `{label}`")));
    }
    let n: u64 = fields[1]
        .parse()
        .map_err(|_| err(format!("bad order `{}`", fields[1])))?;
    let sequence = OrderSequence::parse_pairs(fields[2]).map_err(|e| err(e.to_string()))?;
    let check = is_plausible(&sequence, n);
    if !check.plausible {
        return Err(err(format!(
            "implausible sequence for `{label}`: {}",
            check.reason.unwrap_or_default()
        )));
    }
    let mut tags = BTreeSet::new();
    for t in fields[3]
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
    {
        if !KNOWN_TAGS.contains(&t) {
            return Err(err(format!("unknown tag `{t}`")));
        }
        tags.insert(t.to_string());
    }
    Ok(Fixture {
        label: label.to_string(),
        n,
        sequence,
        tags,
    })
}

/// Parses fixture text. Line numbers in errors are 1-based.
pub fn parse_fixtures(text: &str) -> Result<Vec<Fixture>> {
    let mut out: Vec<Fixture> = Vec::new();
    let mut labels = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let f = parse_line(line, i + 1)?;
        if !labels.insert(f.label.clone()) {
            return Err(Error::Fixture {
                line: i + 1,
                msg: format!("duplicate label `{}`", f.label),
            });
        }
        out.push(f);
    }
    Ok(out)
}

pub fn load_fixtures(path: &Path) -> Result<Vec<Fixture>> {
    parse_fixtures(&std::fs::read_to_string(path)?)
}

pub fn builtin_fixtures() -> Vec<Fixture> {
    parse_fixtures(BUILTIN_FIXTURES).expect("shipped fixtures are valid")
}

pub fn find<'a>(fixtures: &'a [Fixture], label: &str) -> Result<&'a Fixture> {
    fixtures
        .iter()
        .find(|f| f.label == label)
        .ok_or_else(|| Error::Corpus(format!("no fixture labelled `{label}`")))
}

/// Distinct orders present, ascending.
pub fn orders(fixtures: &[Fixture]) -> Vec<u64> {
    fixtures
        .iter()
        .map(|f| f.n)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_file_loads() {
        let f = builtin_fixtures();
        assert_eq!(find(&f, "S_L2_64").unwrap().sequence.total(), 262_080);
        let a = find(&f, "T1_780_16").unwrap();
        let b = find(&f, "T1_780_17").unwrap();
        assert_eq!(a.sequence, b.sequence);
        assert_eq!(f.iter().filter(|x| x.n == 900).count(), 15);
    }

    #[test]
    fn line_errors_carry_numbers() {
        let text = "# c\nA | 4 | (1,1)(2,3) | \nB | 4 | (1,1)(2,2) | solvable\n";
        match parse_fixtures(text) {
            Err(Error::Fixture { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_fixtures("A | 4 | (1,1)(2,3)"),
            Err(Error::Fixture { line: 1, .. })
        ));
        assert!(matches!(
            parse_fixtures("A | 4 | (1,1)(2,3) | bogus"),
            Err(Error::Fixture { .. })
        ));
        assert!(matches!(
            parse_fixtures("A | 4 | (1,1)(4,3) | "),
            Err(Error::Fixture { .. })
        ));
        let dup = "A | 2 | (1,1)(2,1) |\nA | 2 | (1,1)(2,1) |";
        assert!(matches!(
            parse_fixtures(dup),
            Err(Error::Fixture { line: 2, .. })
        ));
    }

    #[test]
    fn to_line_round_trips() {
        for f in builtin_fixtures() {
            assert_eq!(parse_fixtures(&f.to_line()).unwrap()[0], f);
        }
    }
}
