//! Order sequences: the sorted multiset of element orders of a group, kept
//! run-length encoded as `(order, multiplicity)` pairs.
//!
//! The canonical text form is `n=<total>; (o1,m1)(o2,m2)...` with entries in
//! ascending order and no spaces inside pairs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::arith::{divisors, factorize, is_power_of, p_part, totient};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::par::Strategy;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderSequence {
    entries: Vec<(u64, u64)>,
    total: u64,
}

impl OrderSequence {
    /// Builds a sequence from pairs in any order; equal orders are merged.
    pub fn from_pairs<I: IntoIterator<Item = (u64, u64)>>(pairs: I) -> Result<OrderSequence> {
        let mut map = BTreeMap::new();
        for (o, m) in pairs {
            if o == 0 || m == 0 {
                return Err(Error::MalformedSequence(format!(
                    "pair ({o},{m}) has a zero component"
                )));
            }
            *map.entry(o).or_insert(0u64) += m;
        }
        Ok(OrderSequence::from_map(map))
    }

    /// Run-length encodes a list of element orders.
    pub fn from_orders<I: IntoIterator<Item = u64>>(orders: I) -> OrderSequence {
        let mut map = BTreeMap::new();
        for o in orders {
            *map.entry(o).or_insert(0u64) += 1;
        }
        OrderSequence::from_map(map)
    }

    fn from_map(map: BTreeMap<u64, u64>) -> OrderSequence {
        let entries: Vec<(u64, u64)> = map.into_iter().collect();
        let total = entries.iter().map(|&(_, m)| m).sum();
        OrderSequence { entries, total }
    }

    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn multiplicity(&self, order: u64) -> u64 {
        self.entries
            .binary_search_by_key(&order, |&(o, _)| o)
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    /// Number of entries with order ≤ `t`.
    pub fn count_at_most(&self, t: u64) -> u64 {
        self.entries
            .iter()
            .take_while(|&&(o, _)| o <= t)
            .map(|&(_, m)| m)
            .sum()
    }

    /// Parses the pair list `(o,m)(o,m)...`; whitespace and separating
    /// commas are ignored.
    pub fn parse_pairs(text: &str) -> Result<OrderSequence> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = compact.as_str();
        let mut pairs = Vec::new();
        while !rest.is_empty() {
            rest = rest.trim_start_matches(',');
            if rest.is_empty() {
                break;
            }
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::MalformedSequence(format!("expected '(' at `{rest}`")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::MalformedSequence("unclosed pair".into()))?;
            let (o, m) = body[..close].split_once(',').ok_or_else(|| {
                Error::MalformedSequence(format!("pair `{}` lacks a comma", &body[..close]))
            })?;
            let parse = |s: &str| {
                s.parse::<u64>().map_err(|_| {
                    Error::MalformedSequence(format!("`{s}` is not a non-negative integer"))
                })
            };
            pairs.push((parse(o)?, parse(m)?));
            rest = &body[close + 1..];
        }
        if pairs.is_empty() {
            return Err(Error::MalformedSequence("empty sequence".into()));
        }
        if pairs.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::MalformedSequence(
                "orders must be strictly increasing".into(),
            ));
        }
        OrderSequence::from_pairs(pairs)
    }

    /// The pair list without the `n=` prefix.
    pub fn pairs_text(&self) -> String {
        self.entries
            .iter()
            .map(|(o, m)| format!("({o},{m})"))
            .collect()
    }

    /// Expands to the full non-decreasing sequence. Intended for tests and
    /// small totals only.
    pub fn expand(&self) -> Vec<u64> {
        self.entries
            .iter()
            .flat_map(|&(o, m)| std::iter::repeat_n(o, m as usize))
            .collect()
    }
}

impl fmt::Display for OrderSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; {}", self.total, self.pairs_text())
    }
}

impl FromStr for OrderSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<OrderSequence> {
        let s = s.trim();
        let (head, pairs) = s
            .split_once(';')
            .ok_or_else(|| Error::MalformedSequence("expected `n=<total>; ...`".into()))?;
        let n: u64 = head
            .trim()
            .strip_prefix("n=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| Error::MalformedSequence(format!("bad header `{head}`")))?;
        let seq = OrderSequence::parse_pairs(pairs)?;
        if seq.total != n {
            return Err(Error::MalformedSequence(format!(
                "header says n={n} but multiplicities sum to {}",
                seq.total
            )));
        }
        Ok(seq)
    }
}

/// Outcome of comparing two sequences of equal total.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum DominationVerdict {
    Equal,
    ProperlyDominates,
    ProperlyDominatedBy,
    Incomparable,
}

impl DominationVerdict {
    /// The verdict with the arguments swapped.
    pub fn mirror(self) -> DominationVerdict {
        match self {
            DominationVerdict::ProperlyDominates => DominationVerdict::ProperlyDominatedBy,
            DominationVerdict::ProperlyDominatedBy => DominationVerdict::ProperlyDominates,
            v => v,
        }
    }

    /// True for `Equal` and `ProperlyDominates`.
    pub fn dominates(self) -> bool {
        matches!(
            self,
            DominationVerdict::Equal | DominationVerdict::ProperlyDominates
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            DominationVerdict::Equal => "Equal",
            DominationVerdict::ProperlyDominates => "ProperlyDominates",
            DominationVerdict::ProperlyDominatedBy => "ProperlyDominatedBy",
            DominationVerdict::Incomparable => "Incomparable",
        }
    }
}

impl fmt::Display for DominationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Order sequence of an enumerated group.
pub fn os_of_group(g: &Group) -> OrderSequence {
    OrderSequence::from_orders(g.element_orders().iter().map(|&o| o as u64))
}

/// As [`os_of_group`], bypassing the cached order table.
pub fn os_of_group_with(g: &Group, strategy: Strategy) -> OrderSequence {
    OrderSequence::from_orders(
        g.element_orders_with(strategy)
            .into_iter()
            .map(|o| o as u64),
    )
}

/// `((d, φ(d)) for d | n)`.
pub fn os_cyclic(n: u64) -> OrderSequence {
    let entries: Vec<(u64, u64)> = divisors(n).into_iter().map(|d| (d, totient(d))).collect();
    OrderSequence { total: n, entries }
}

/// Sum of element orders.
pub fn psi(s: &OrderSequence) -> u128 {
    s.entries.iter().map(|&(o, m)| o as u128 * m as u128).sum()
}

/// Domination verdict of `a` against `b`.
///
/// `a` dominates `b` iff, at every order `t`, `a` has at most as many entries
/// of order ≤ `t` as `b`; this matches the positionwise comparison of the
/// expanded sequences.
pub fn compare(a: &OrderSequence, b: &OrderSequence) -> Result<DominationVerdict> {
    if a.total != b.total {
        return Err(Error::UnequalTotals {
            left: a.total,
            right: b.total,
        });
    }
    if a.entries == b.entries {
        return Ok(DominationVerdict::Equal);
    }
    let (mut i, mut j) = (0, 0);
    let (mut fa, mut fb) = (0u64, 0u64);
    let (mut a_ge, mut b_ge) = (true, true);
    while i < a.entries.len() || j < b.entries.len() {
        let oa = a.entries.get(i).map_or(u64::MAX, |e| e.0);
        let ob = b.entries.get(j).map_or(u64::MAX, |e| e.0);
        let t = oa.min(ob);
        if oa == t {
            fa += a.entries[i].1;
            i += 1;
        }
        if ob == t {
            fb += b.entries[j].1;
            j += 1;
        }
        if fa > fb {
            a_ge = false;
        }
        if fb > fa {
            b_ge = false;
        }
    }
    Ok(match (a_ge, b_ge) {
        (true, true) => DominationVerdict::Equal,
        (true, false) => DominationVerdict::ProperlyDominates,
        (false, true) => DominationVerdict::ProperlyDominatedBy,
        (false, false) => DominationVerdict::Incomparable,
    })
}

/// The sorted multiset of pairwise products `o·o'` with multiplicity `m·m'`.
pub fn os_product(a: &OrderSequence, b: &OrderSequence) -> OrderSequence {
    let mut map = BTreeMap::new();
    for &(o1, m1) in &a.entries {
        for &(o2, m2) in &b.entries {
            *map.entry(o1 * o2).or_insert(0u64) += m1 * m2;
        }
    }
    OrderSequence::from_map(map)
}

/// Result of the necessary-condition filter in [`is_plausible`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plausibility {
    pub plausible: bool,
    pub reason: Option<String>,
}

/// Necessary conditions for `s` to be the order sequence of a group of
/// order `n`: total `n`, a single element of order 1, every order divides
/// `n`, and `φ(o)` divides the multiplicity of every order `o`. Passing
/// does not imply that a group with this sequence exists.
pub fn is_plausible(s: &OrderSequence, n: u64) -> Plausibility {
    let fail = |reason: String| Plausibility {
        plausible: false,
        reason: Some(reason),
    };
    if s.total != n {
        return fail(format!("multiplicities sum to {} instead of {n}", s.total));
    }
    match s.entries.first() {
        Some(&(1, 1)) => {}
        Some(&(1, m)) => return fail(format!("identity multiplicity is {m}, expected 1")),
        _ => return fail("no element of order 1".into()),
    }
    if let Some(&(o, _)) = s.entries.iter().find(|&&(o, _)| !n.is_multiple_of(o)) {
        return fail(format!("order {o} does not divide {n}"));
    }
    for &(o, m) in &s.entries {
        let phi = totient(o);
        if m % phi != 0 {
            return fail(format!("φ({o})={phi} does not divide multiplicity {m}"));
        }
    }
    Plausibility {
        plausible: true,
        reason: None,
    }
}

/// Nilpotency read off the sequence: for each prime `p | n`, the number of
/// elements of `p`-power order must equal the `p`-part of `n`.
pub fn nilpotent_from_os(s: &OrderSequence) -> Result<bool> {
    let n = s.total;
    let check = is_plausible(s, n);
    if !check.plausible {
        return Err(Error::Implausible(check.reason.unwrap_or_default()));
    }
    Ok(factorize(n).into_iter().all(|(p, _)| {
        let count: u64 = s
            .entries
            .iter()
            .filter(|&&(o, _)| is_power_of(o, p))
            .map(|&(_, m)| m)
            .sum();
        count == p_part(n, p)
    }))
}

/// Positionwise comparison of the expanded sequences. Reference
/// implementation for [`compare`]; allocates `total` entries per side.
pub fn compare_expanded(a: &OrderSequence, b: &OrderSequence) -> Result<DominationVerdict> {
    if a.total != b.total {
        return Err(Error::UnequalTotals {
            left: a.total,
            right: b.total,
        });
    }
    let (ea, eb) = (a.expand(), b.expand());
    let a_ge = ea.iter().zip(&eb).all(|(x, y)| x >= y);
    let b_ge = ea.iter().zip(&eb).all(|(x, y)| y >= x);
    Ok(match (a_ge, b_ge) {
        (true, true) => DominationVerdict::Equal,
        (true, false) => DominationVerdict::ProperlyDominates,
        (false, true) => DominationVerdict::ProperlyDominatedBy,
        _ => DominationVerdict::Incomparable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use proptest::strategy::Strategy;

    fn seq(pairs: &[(u64, u64)]) -> OrderSequence {
        OrderSequence::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn canonical_text_round_trip() {
        let s = seq(&[(1, 1), (2, 3), (3, 8)]);
        assert_eq!(s.to_string(), "n=12; (1,1)(2,3)(3,8)");
        assert_eq!("n=12; (1,1)(2,3)(3,8)".parse::<OrderSequence>().unwrap(), s);
        assert!("n=13; (1,1)(2,3)(3,8)".parse::<OrderSequence>().is_err());
        assert!(OrderSequence::parse_pairs("(2,1)(1,1)").is_err());
        assert!(OrderSequence::parse_pairs("((1, 1), (2, 3), (3, 8))").is_err());
        assert_eq!(
            OrderSequence::parse_pairs("(1, 1), (2, 3), (3, 8)").unwrap(),
            s
        );
    }

    #[test]
    fn cyclic_closed_form() {
        assert_eq!(os_cyclic(6), seq(&[(1, 1), (2, 1), (3, 2), (6, 2)]));
        assert_eq!(os_cyclic(1), seq(&[(1, 1)]));
        // brute force: order of k in Z/12 is 12 / gcd(k, 12)
        let brute = OrderSequence::from_orders((0..12u64).map(|k| 12 / crate::arith::gcd(k, 12)));
        assert_eq!(os_cyclic(12), brute);
        assert_eq!(
            brute,
            seq(&[(1, 1), (2, 1), (3, 2), (4, 2), (6, 2), (12, 4)])
        );
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi(&seq(&[(1, 1), (2, 3), (3, 8)])), 31);
        assert_eq!(psi(&os_cyclic(1)), 1);
    }

    #[test]
    fn a4_and_d12_incomparable() {
        let a4 = seq(&[(1, 1), (2, 3), (3, 8)]);
        let d12 = seq(&[(1, 1), (2, 7), (3, 2), (6, 2)]);
        assert_eq!(compare(&a4, &d12).unwrap(), DominationVerdict::Incomparable);
        assert_eq!(compare(&a4, &a4).unwrap(), DominationVerdict::Equal);
        assert!(matches!(
            compare(&a4, &os_cyclic(6)),
            Err(Error::UnequalTotals { .. })
        ));
    }

    #[test]
    fn products() {
        let c2 = os_cyclic(2);
        assert_eq!(os_product(&c2, &os_cyclic(3)), os_cyclic(6));
        let sq = os_product(&c2, &c2);
        assert_eq!(sq, seq(&[(1, 1), (2, 2), (4, 1)]));
        let check = is_plausible(&sq, 4);
        assert!(!check.plausible);
        assert_eq!(
            check.reason.as_deref(),
            Some("φ(4)=2 does not divide multiplicity 1")
        );
    }

    #[test]
    fn plausibility_reasons() {
        let bad = seq(&[(1, 2), (2, 2)]);
        let r = is_plausible(&bad, 4);
        assert!(!r.plausible);
        assert!(r.reason.unwrap().contains("identity multiplicity"));
        assert!(!is_plausible(&seq(&[(1, 1), (3, 2)]), 4).plausible);
        assert!(!is_plausible(&seq(&[(1, 1), (5, 4)]), 6).plausible);
        assert!(is_plausible(&os_cyclic(30), 30).plausible);
    }

    #[test]
    fn nilpotency_from_counts() {
        assert!(nilpotent_from_os(&os_cyclic(12)).unwrap());
        assert!(!nilpotent_from_os(&seq(&[(1, 1), (2, 3), (3, 2)])).unwrap());
        assert!(nilpotent_from_os(&seq(&[(1, 2), (2, 2)])).is_err());
    }

    fn arb_seq(total: u64) -> impl Strategy<Value = OrderSequence> {
        // random compositions of `total` over a handful of orders
        proptest::collection::vec((1u64..40, 1u64..200), 1..8).prop_map(move |raw| {
            let mut pairs: BTreeMap<u64, u64> = BTreeMap::new();
            let sum: u64 = raw.iter().map(|r| r.1).sum();
            let mut left = total;
            for (i, (o, m)) in raw.iter().enumerate() {
                let share = if i + 1 == raw.len() {
                    left
                } else {
                    (m * total / sum).min(left)
                };
                if share > 0 {
                    *pairs.entry(*o).or_default() += share;
                    left -= share;
                }
            }
            OrderSequence::from_pairs(pairs).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn compare_matches_expansion((a, b) in (1u64..2000).prop_flat_map(|t| (arb_seq(t), arb_seq(t)))) {
            let v = compare(&a, &b).unwrap();
            prop_assert_eq!(v, compare_expanded(&a, &b).unwrap());
            prop_assert_eq!(compare(&b, &a).unwrap(), v.mirror());
        }

        #[test]
        fn product_total_and_psi_multiply(a in 1u64..60, b in 1u64..60) {
            prop_assume!(crate::arith::gcd(a, b) == 1);
            let p = os_product(&os_cyclic(a), &os_cyclic(b));
            prop_assert_eq!(p.total(), a * b);
            prop_assert_eq!(psi(&p), psi(&os_cyclic(a)) * psi(&os_cyclic(b)));
        }

        #[test]
        fn text_round_trip(s in arb_seq(500)) {
            prop_assert_eq!(s.to_string().parse::<OrderSequence>().unwrap(), s);
        }
    }
}
