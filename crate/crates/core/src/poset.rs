//! Domination posets over labelled sequences of one total.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::fixtures::Fixture;
use crate::order_sequence::{compare, DominationVerdict, OrderSequence};
use crate::par::{self, Strategy};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub label: String,
    pub sequence: OrderSequence,
    pub tags: BTreeSet<String>,
}

impl CorpusEntry {
    pub fn new(label: impl Into<String>, sequence: OrderSequence) -> CorpusEntry {
        CorpusEntry {
            label: label.into(),
            sequence,
            tags: BTreeSet::new(),
        }
    }

    pub fn with_tags<I, S>(mut self, tags: I) -> CorpusEntry
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.tags.extend(tags.into_iter().map(Into::into));
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Corpus {
    total: Option<u64>,
    entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn new(entries: Vec<CorpusEntry>) -> Result<Corpus> {
        let total = entries.first().map(|e| e.sequence.total());
        let mut labels = BTreeSet::new();
        for e in &entries {
            if Some(e.sequence.total()) != total {
                return Err(Error::Corpus(format!(
                    "`{}` has total {}, expected {}",
                    e.label,
                    e.sequence.total(),
                    total.unwrap_or(0)
                )));
            }
            if !labels.insert(e.label.as_str()) {
                return Err(Error::Corpus(format!("duplicate label `{}`", e.label)));
            }
        }
        Ok(Corpus { total, entries })
    }

    /// Fixtures of order `n`, in file order.
    pub fn from_fixtures(fixtures: &[Fixture], n: u64) -> Result<Corpus> {
        Corpus::new(
            fixtures
                .iter()
                .filter(|f| f.n == n)
                .map(|f| CorpusEntry {
                    label: f.label.clone(),
                    sequence: f.sequence.clone(),
                    tags: f.tags.clone(),
                })
                .collect(),
        )
    }

    pub fn total(&self) -> Option<u64> {
        self.total
    }

    pub fn entries(&self) -> &[CorpusEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetResult {
    pub labels: Vec<String>,
    /// `relation[i][j]` compares entry `i` with entry `j`.
    pub relation: Vec<Vec<DominationVerdict>>,
    /// Covering pairs `(dominated, dominator)` as entry indices.
    pub hasse: Vec<(usize, usize)>,
    pub minimal: Vec<String>,
    pub maximal: Vec<String>,
}

impl PosetResult {
    pub fn properly_dominates(&self, i: usize, j: usize) -> bool {
        self.relation[i][j] == DominationVerdict::ProperlyDominates
    }

    /// Transitive closure of the Hasse edges, as a matrix indexed
    /// `[dominator][dominated]`.
    #[allow(clippy::needless_range_loop)]
    pub fn closure_of_hasse(&self) -> Vec<Vec<bool>> {
        let n = self.labels.len();
        let mut reach = vec![vec![false; n]; n];
        for &(lo, hi) in &self.hasse {
            reach[hi][lo] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i][k] {
                    for j in 0..n {
                        if reach[k][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        reach
    }

    pub fn count(&self, verdict: DominationVerdict) -> usize {
        self.relation
            .iter()
            .flatten()
            .filter(|&&v| v == verdict)
            .count()
    }
}

pub fn build_poset(c: &Corpus) -> Result<PosetResult> {
    build_poset_with(c, Strategy::default())
}

pub fn build_poset_with(c: &Corpus, strategy: Strategy) -> Result<PosetResult> {
    let n = c.len();
    let e = &c.entries;
    let rows: Vec<Result<Vec<DominationVerdict>>> = par::map_range(strategy, n, |i| {
        (0..n)
            .map(|j| compare(&e[i].sequence, &e[j].sequence))
            .collect()
    });
    let relation: Vec<Vec<DominationVerdict>> = rows.into_iter().collect::<Result<_>>()?;
    let above = |i: usize, j: usize| relation[i][j] == DominationVerdict::ProperlyDominates;

    let mut hasse = Vec::new();
    for hi in 0..n {
        for lo in 0..n {
            if above(hi, lo) && !(0..n).any(|k| above(hi, k) && above(k, lo)) {
                hasse.push((lo, hi));
            }
        }
    }
    let minimal = (0..n)
        .filter(|&i| !(0..n).any(|j| above(i, j)))
        .map(|i| e[i].label.clone())
        .collect();
    let maximal = (0..n)
        .filter(|&i| !(0..n).any(|j| above(j, i)))
        .map(|i| e[i].label.clone())
        .collect();
    Ok(PosetResult {
        labels: e.iter().map(|x| x.label.clone()).collect(),
        relation,
        hasse,
        minimal,
        maximal,
    })
}

/// Ordered `(dominator, dominated)` label pairs with a proper domination
/// verdict, restricted by tag predicates on each side.
pub fn domination_pairs<F, G>(c: &Corpus, dominator: F, dominated: G) -> Vec<(String, String)>
where
    F: Fn(&CorpusEntry) -> bool,
    G: Fn(&CorpusEntry) -> bool,
{
    let mut out = Vec::new();
    for a in c.entries.iter().filter(|a| dominator(a)) {
        for b in c.entries.iter().filter(|b| dominated(b)) {
            if compare(&a.sequence, &b.sequence).ok() == Some(DominationVerdict::ProperlyDominates)
            {
                out.push((a.label.clone(), b.label.clone()));
            }
        }
    }
    out
}

/// Tag predicate for [`domination_pairs`].
pub fn tagged(tag: &str) -> impl Fn(&CorpusEntry) -> bool + '_ {
    move |e| e.tags.contains(tag)
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram; edges run from dominated to dominator.
pub fn to_dot(p: &PosetResult) -> String {
    let mut out = String::from("digraph domination {\n  rankdir=BT;\n");
    for l in &p.labels {
        let _ = writeln!(out, "  {};", dot_id(l));
    }
    for &(lo, hi) in &p.hasse {
        let _ = writeln!(
            out,
            "  {} -> {};",
            dot_id(&p.labels[lo]),
            dot_id(&p.labels[hi])
        );
    }
    out.push_str("}\n");
    out
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Relation matrix with a header row; cell `(i, j)` is the verdict of row
/// `i` against column `j`.
pub fn to_csv(p: &PosetResult) -> String {
    let mut out = String::from("label");
    for l in &p.labels {
        out.push(',');
        out.push_str(&csv_cell(l));
    }
    out.push('\n');
    for (i, row) in p.relation.iter().enumerate() {
        out.push_str(&csv_cell(&p.labels[i]));
        for v in row {
            out.push(',');
            out.push_str(v.as_str());
        }
        out.push('\n');
    }
    out
}

pub fn to_text(p: &PosetResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "elements: {}", p.labels.len());
    let _ = writeln!(out, "minimal: {}", p.minimal.join(" "));
    let _ = writeln!(out, "maximal: {}", p.maximal.join(" "));
    let _ = writeln!(
        out,
        "proper pairs: {}  equal pairs: {}  incomparable pairs: {}",
        p.count(DominationVerdict::ProperlyDominates),
        (p.count(DominationVerdict::Equal) - p.labels.len()) / 2,
        p.count(DominationVerdict::Incomparable) / 2
    );
    for &(lo, hi) in &p.hasse {
        let _ = writeln!(out, "{} < {}", p.labels[lo], p.labels[hi]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::builtin_fixtures;

    fn seq(s: &str) -> OrderSequence {
        OrderSequence::parse_pairs(s).unwrap()
    }

    fn order12() -> Corpus {
        Corpus::new(vec![
            CorpusEntry::new("C12", seq("(1,1)(2,1)(3,2)(4,2)(6,2)(12,4)")),
            CorpusEntry::new("C2xC6", seq("(1,1)(2,3)(3,2)(6,6)")),
            CorpusEntry::new("D12", seq("(1,1)(2,7)(3,2)(6,2)")),
            CorpusEntry::new("A4", seq("(1,1)(2,3)(3,8)")),
            CorpusEntry::new("Dic12", seq("(1,1)(2,1)(3,2)(4,6)(6,2)")),
        ])
        .unwrap()
    }

    #[test]
    fn order_12_minimal_elements() {
        let p = build_poset(&order12()).unwrap();
        assert!(p.minimal.contains(&"A4".to_string()));
        assert!(!p.minimal.contains(&"C12".to_string()));
        assert!(!p.minimal.contains(&"C2xC6".to_string()));
        assert_eq!(p.maximal, vec!["C12".to_string()]);
    }

    #[test]
    fn singleton_is_minimal_and_maximal() {
        let c = Corpus::new(vec![CorpusEntry::new("x", seq("(1,1)(2,1)"))]).unwrap();
        let p = build_poset(&c).unwrap();
        assert_eq!(p.minimal, vec!["x"]);
        assert_eq!(p.maximal, vec!["x"]);
        assert!(p.hasse.is_empty());
    }

    #[test]
    fn rejects_mixed_totals_and_duplicate_labels() {
        let a = CorpusEntry::new("a", seq("(1,1)(2,1)"));
        let b = CorpusEntry::new("b", seq("(1,1)(3,2)"));
        assert!(Corpus::new(vec![a.clone(), b]).is_err());
        assert!(Corpus::new(vec![a.clone(), a]).is_err());
        assert!(Corpus::new(vec![]).unwrap().is_empty());
    }

    #[test]
    fn order_300_pair() {
        let c = Corpus::from_fixtures(&builtin_fixtures(), 300).unwrap();
        let p = build_poset(&c).unwrap();
        assert_eq!(p.minimal, vec!["T1_300_23"]);
        assert_eq!(p.hasse, vec![(1, 0)]);
    }

    #[test]
    fn order_900_pairs() {
        let c = Corpus::from_fixtures(&builtin_fixtures(), 900).unwrap();
        let pairs = domination_pairs(&c, tagged("nonsolvable"), tagged("solvable"));
        assert_eq!(pairs.len(), 14);
        assert!(pairs.iter().all(|(a, _)| a == "T1_900_88"));
        let empty = Corpus::default();
        assert!(domination_pairs(&empty, |_| true, |_| true).is_empty());
    }

    #[test]
    fn order_72_pair_is_equal() {
        let c = Corpus::from_fixtures(&builtin_fixtures(), 72).unwrap();
        assert!(domination_pairs(&c, |_| true, |_| true).is_empty());
        let p = build_poset(&c).unwrap();
        assert_eq!(p.relation[0][1], DominationVerdict::Equal);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn hasse_closure_reproduces_relation() {
        let fx = builtin_fixtures();
        for n in crate::fixtures::orders(&fx) {
            let p = build_poset(&Corpus::from_fixtures(&fx, n).unwrap()).unwrap();
            let reach = p.closure_of_hasse();
            for i in 0..p.labels.len() {
                for j in 0..p.labels.len() {
                    assert_eq!(reach[i][j], p.properly_dominates(i, j), "order {n}");
                }
            }
            assert!(!p.minimal.is_empty() && !p.maximal.is_empty());
        }
    }

    #[test]
    fn emitters() {
        let p = build_poset(&order12()).unwrap();
        let dot = to_dot(&p);
        for &(lo, hi) in &p.hasse {
            assert!(dot.contains(&format!("\"{}\" -> \"{}\";", p.labels[lo], p.labels[hi])));
        }
        let csv = to_csv(&p);
        assert!(csv.starts_with("label,C12,C2xC6,D12,A4,Dic12\n"));
        assert!(csv.contains("A4,ProperlyDominatedBy,ProperlyDominatedBy,Incomparable,Equal,"));
    }
}
