//! Verification suites. Each suite recomputes sequences from constructed
//! groups and checks them against the printed fixtures and against the
//! stated domination, equality and classification claims.

use std::collections::BTreeMap;
use std::fmt::{self, Display};
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::arith::{gcd, is_prime};
use crate::catalog::{self, catalog};
use crate::classify::{classify, is_nilpotent, is_solvable, is_supersolvable};
use crate::constructors::*;
use crate::error::{Error, Result};
use crate::fixtures::{self, Fixture};
use crate::group::Group;
use crate::order_sequence::*;
use crate::poset::{tagged, Corpus};
use crate::subgroup::QUOTIENT_THRESHOLD;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Table1,
    Table2,
    Table3,
    Thm23,
    Thm25,
    Thm29,
    Simple,
    Props,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Table1,
        Suite::Table2,
        Suite::Table3,
        Suite::Thm23,
        Suite::Thm25,
        Suite::Thm29,
        Suite::Simple,
        Suite::Props,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table1 => "table1",
            Suite::Table2 => "table2",
            Suite::Table3 => "table3",
            Suite::Thm23 => "thm23",
            Suite::Thm25 => "thm25",
            Suite::Thm29 => "thm29",
            Suite::Simple => "simple",
            Suite::Props => "props",
        }
    }

    pub fn default_primes(self) -> &'static [u32] {
        match self {
            Suite::Thm23 => &[3, 7, 13, 17],
            Suite::Thm25 => &[11, 17, 23],
            Suite::Thm29 => &[5, 7, 11],
            _ => &[],
        }
    }

    pub fn takes_primes(self) -> bool {
        !self.default_primes().is_empty()
    }

    /// Rejects primes outside the hypotheses of the family.
    pub fn check_prime(self, p: u32) -> Result<()> {
        let bad = |reason: &str| {
            Err(Error::InvalidParameter {
                name: "primes",
                reason: format!("{p} rejected by {}: {reason}", self.name()),
            })
        };
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        match self {
            Suite::Thm23 if p == 2 || p == 5 => bad("needs an odd prime other than 5"),
            Suite::Thm23 if p % 5 == 1 => bad("needs p ≢ 1 (mod 5)"),
            Suite::Thm25 if p < 11 => bad("needs p ≥ 11"),
            Suite::Thm25 if p % 3 == 1 => bad("needs p ≢ 1 (mod 3)"),
            Suite::Thm29 if p < 5 => bad("needs p ≥ 5"),
            s if !s.takes_primes() => Err(Error::InvalidParameter {
                name: "primes",
                reason: format!("suite {} takes no primes", self.name()),
            }),
            _ => Ok(()),
        }
    }
}

impl Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameter {
                name: "suite",
                reason: format!("unknown suite `{s}`"),
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(suite: Suite) -> Report {
        Report {
            suite,
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    fn same<T: PartialEq + Display>(&mut self, name: impl Into<String>, expected: T, computed: T) {
        self.checks.push(Check {
            name: name.into(),
            pass: expected == computed,
            expected: expected.to_string(),
            computed: computed.to_string(),
        });
    }

    fn holds(&mut self, name: impl Into<String>, expected: &str, ok: bool, computed: impl Display) {
        self.checks.push(Check {
            name: name.into(),
            expected: expected.into(),
            computed: computed.to_string(),
            pass: ok,
        });
    }

    fn verdict(
        &mut self,
        name: impl Into<String>,
        expected: DominationVerdict,
        a: &OrderSequence,
        b: &OrderSequence,
    ) {
        let computed = match compare(a, b) {
            Ok(v) => v.to_string(),
            Err(e) => e.to_string(),
        };
        self.checks.push(Check {
            name: name.into(),
            pass: computed == expected.as_str(),
            expected: expected.to_string(),
            computed,
        });
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{tag} {}: {} | expected {} | computed {}\n",
                self.suite, c.name, c.expected, c.computed
            ));
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "{} {}: {} checks, {} failed\n",
            if failed == 0 { "PASS" } else { "FAIL" },
            self.suite,
            self.checks.len(),
            failed
        ));
        out
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub fixtures: Vec<Fixture>,
    pub primes: Option<Vec<u32>>,
    /// Also construct `C3² × Sz(8)` in the `simple` suite.
    pub sz8: bool,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            fixtures: fixtures::builtin_fixtures(),
            primes: None,
            sz8: false,
        }
    }
}

pub fn run(suite: Suite, opts: &VerifyOptions) -> Result<Report> {
    let primes: Vec<u32> = match &opts.primes {
        Some(ps) => ps.clone(),
        None => suite.default_primes().to_vec(),
    };
    if opts.primes.is_some() || suite.takes_primes() {
        for &p in &primes {
            suite.check_prime(p)?;
        }
    }
    match suite {
        Suite::Table1 => table1(&opts.fixtures),
        Suite::Table2 => table2(&opts.fixtures),
        Suite::Table3 => table3(&opts.fixtures),
        Suite::Thm23 => thm23(&opts.fixtures, &primes),
        Suite::Thm25 => thm25(&primes),
        Suite::Thm29 => thm29(&opts.fixtures, &primes),
        Suite::Simple => simple(&opts.fixtures, opts.sz8),
        Suite::Props => props(&opts.fixtures),
    }
}

fn os_of(name: &str, p: Option<u32>) -> Result<(Arc<Group>, OrderSequence)> {
    let g = catalog(name, p)?;
    let s = os_of_group(&g);
    Ok((g, s))
}

fn seq(fx: &[Fixture], label: &str) -> Result<OrderSequence> {
    Ok(fixtures::find(fx, label)?.sequence.clone())
}

pub fn table1(fx: &[Fixture]) -> Result<Report> {
    let mut r = Report::new(Suite::Table1);
    let rows = [
        ("C5xA5", "T1_300_22", false),
        ("C5^2:Dic12", "T1_300_23", true),
        ("C7xA5", "T1_420_13", false),
        ("C13xA5", "T1_780_13", false),
        ("C15xA5", "T1_900_88", false),
    ];
    for (name, label, solvable) in rows {
        let (g, s) = os_of(name, None)?;
        r.same(format!("os({name}) = {label}"), seq(fx, label)?, s);
        r.same(format!("solvable({name})"), solvable, is_solvable(&g)?);
    }
    let mut count = 0;
    for n in [300u64, 420, 780, 900] {
        let corpus = Corpus::from_fixtures(fx, n)?;
        let hs: Vec<_> = corpus
            .entries()
            .iter()
            .filter(|e| tagged("nonsolvable")(e))
            .collect();
        for h in &hs {
            for g in corpus.entries().iter().filter(|e| tagged("solvable")(e)) {
                r.verdict(
                    format!("{} vs {}", h.label, g.label),
                    DominationVerdict::ProperlyDominates,
                    &h.sequence,
                    &g.sequence,
                );
                count += 1;
            }
        }
    }
    r.same("printed domination pairs", 19, count);
    Ok(r)
}

pub fn table2(fx: &[Fixture]) -> Result<Report> {
    let mut r = Report::new(Suite::Table2);
    let mut seqs = BTreeMap::new();
    for name in [
        "C4xF8", "C2^2xF8", "C2^4xD14", "C7xA5", "C35xA4", "C5xC7:A4", "D10xF7",
    ] {
        let (g, s) = os_of(name, None)?;
        let ss = is_supersolvable(&g)?;
        let expected = matches!(name, "C2^4xD14" | "D10xF7");
        r.same(format!("supersolvable({name})"), expected, ss);
        seqs.insert(name, s);
    }
    for h in ["C4xF8", "C2^2xF8"] {
        r.verdict(
            format!("{h} vs C2^4xD14"),
            DominationVerdict::ProperlyDominates,
            &seqs[h],
            &seqs["C2^4xD14"],
        );
    }
    for h in ["C7xA5", "C35xA4", "C5xC7:A4"] {
        r.verdict(
            format!("{h} vs D10xF7"),
            DominationVerdict::ProperlyDominates,
            &seqs[h],
            &seqs["D10xF7"],
        );
    }
    r.same(
        "os(D10xF7) = T1_420_16",
        seq(fx, "T1_420_16")?,
        seqs["D10xF7"].clone(),
    );
    let (h, hs) = os_of("CpxA4", Some(11))?;
    let (g, gs) = os_of("S3xD2p", Some(11))?;
    r.verdict(
        "C11xA4 vs S3xD22",
        DominationVerdict::ProperlyDominates,
        &hs,
        &gs,
    );
    r.same("supersolvable(C11xA4)", false, is_supersolvable(&h)?);
    r.same("supersolvable(S3xD22)", true, is_supersolvable(&g)?);
    Ok(r)
}

pub fn table3(fx: &[Fixture]) -> Result<Report> {
    let mut r = Report::new(Suite::Table3);
    let (h, hs) = os_of("S3^2:C2", None)?;
    let (g, gs) = os_of("C3^2:D8", None)?;
    r.same("os(S3^2:C2) = T3_72_40", seq(fx, "T3_72_40")?, hs.clone());
    r.same("os(C3^2:D8) = T3_72_35", seq(fx, "T3_72_35")?, gs.clone());
    r.verdict("S3^2:C2 vs C3^2:D8", DominationVerdict::Equal, &hs, &gs);
    r.same("supersolvable(S3^2:C2)", false, is_supersolvable(&h)?);
    r.same("supersolvable(C3^2:D8)", true, is_supersolvable(&g)?);
    let table: Vec<&Fixture> = fx.iter().filter(|f| f.has_tag("table3")).collect();
    for h in table.iter().filter(|f| f.has_tag("nonsupersolvable")) {
        let partners: Vec<&str> = table
            .iter()
            .filter(|g| g.has_tag("supersolvable") && g.n == h.n && g.sequence == h.sequence)
            .map(|g| g.label.as_str())
            .collect();
        r.holds(
            format!("{} has an equal supersolvable partner", h.label),
            "at least one",
            !partners.is_empty(),
            partners.join(" "),
        );
    }
    Ok(r)
}

pub fn thm23(fx: &[Fixture], primes: &[u32]) -> Result<Report> {
    let mut r = Report::new(Suite::Thm23);
    let base_h = os_of_group(&*catalog::c5_times_a5()?);
    let base_g = os_of_group(&*catalog::c5sq_dic12()?);
    for &p in primes {
        let (h, hs) = os_of("C5pxA5", Some(p))?;
        let (g, gs) = os_of("CpxC5^2:Dic12", Some(p))?;
        r.verdict(
            format!("p={p}: C{}xA5 vs C{p}x(C5^2:Dic12)", 5 * p),
            DominationVerdict::ProperlyDominates,
            &hs,
            &gs,
        );
        if gcd(p as u64, 300) == 1 {
            let cp = os_cyclic(p as u64);
            r.same(
                format!("p={p}: os(H) = os(C{p})·os(C5xA5)"),
                os_product(&cp, &base_h),
                hs.clone(),
            );
            r.same(
                format!("p={p}: os(G) = os(C{p})·os(C5^2:Dic12)"),
                os_product(&cp, &base_g),
                gs.clone(),
            );
        }
        if p == 3 {
            r.same("p=3: os(H) = T1_900_88", seq(fx, "T1_900_88")?, hs.clone());
        }
        r.same(format!("p={p}: solvable(H)"), false, is_solvable(&h)?);
        r.same(format!("p={p}: solvable(G)"), true, is_solvable(&g)?);
    }
    Ok(r)
}

/// `((1,1),(2,3),(3,8),(p,p−1),(2p,3p−3),(3p,8p−8))`.
pub fn cp_a4_closed_form(p: u64) -> OrderSequence {
    OrderSequence::from_pairs([
        (1, 1),
        (2, 3),
        (3, 8),
        (p, p - 1),
        (2 * p, 3 * p - 3),
        (3 * p, 8 * p - 8),
    ])
    .expect("valid for p ≥ 5")
}

/// `((1,1),(2,4p+3),(3,2),(6,2p),(p,p−1),(2p,3p−3),(3p,2p−2))`.
pub fn s3_d2p_closed_form(p: u64) -> OrderSequence {
    OrderSequence::from_pairs([
        (1, 1),
        (2, 4 * p + 3),
        (3, 2),
        (6, 2 * p),
        (p, p - 1),
        (2 * p, 3 * p - 3),
        (3 * p, 2 * p - 2),
    ])
    .expect("valid for p ≥ 7")
}

pub fn thm25(primes: &[u32]) -> Result<Report> {
    let mut r = Report::new(Suite::Thm25);
    for &p in primes {
        let (h, hs) = os_of("CpxA4", Some(p))?;
        let (g, gs) = os_of("S3xD2p", Some(p))?;
        r.same(
            format!("p={p}: os(C{p}xA4) closed form"),
            cp_a4_closed_form(p as u64),
            hs.clone(),
        );
        r.same(
            format!("p={p}: os(S3xD{}) closed form", 2 * p),
            s3_d2p_closed_form(p as u64),
            gs.clone(),
        );
        r.verdict(
            format!("p={p}: C{p}xA4 vs S3xD{}", 2 * p),
            DominationVerdict::ProperlyDominates,
            &hs,
            &gs,
        );
        r.same(
            format!("p={p}: supersolvable(C{p}xA4)"),
            false,
            is_supersolvable(&h)?,
        );
        r.same(
            format!("p={p}: supersolvable(S3xD{})", 2 * p),
            true,
            is_supersolvable(&g)?,
        );
    }
    Ok(r)
}

pub fn thm29(fx: &[Fixture], primes: &[u32]) -> Result<Report> {
    let mut r = Report::new(Suite::Thm29);
    let printed = seq(fx, "T3_72_40")?;
    r.same(
        "os(S3^2:C2) = printed",
        printed.clone(),
        os_of_group(&*catalog::s3_wreath_c2()?),
    );
    r.same(
        "os(C3^2:D8) = printed",
        printed.clone(),
        os_of_group(&*catalog::c3sq_d8()?),
    );
    for &p in primes {
        let (h, hs) = os_of("CpxS3^2:C2", Some(p))?;
        let (g, gs) = os_of("CpxC3^2:D8", Some(p))?;
        r.verdict(
            format!("p={p}: C{p}x(S3^2:C2) vs C{p}x(C3^2:D8)"),
            DominationVerdict::Equal,
            &hs,
            &gs,
        );
        r.same(
            format!("p={p}: os(G) = os(C{p})·printed"),
            os_product(&os_cyclic(p as u64), &printed),
            gs.clone(),
        );
        r.same(
            format!("p={p}: supersolvable(C{p}x(S3^2:C2))"),
            false,
            is_supersolvable(&h)?,
        );
        r.same(
            format!("p={p}: supersolvable(C{p}x(C3^2:D8))"),
            true,
            is_supersolvable(&g)?,
        );
    }
    Ok(r)
}

pub const PSI_L2_64: u128 = 12_106_687;
pub const PSI_C3SQ_SZ8: u128 = 5_482_775;

pub fn simple(fx: &[Fixture], sz8: bool) -> Result<Report> {
    let mut r = Report::new(Suite::Simple);
    let l2 = seq(fx, "S_L2_64")?;
    let sz = seq(fx, "S_C3^2xSz8")?;
    let g = psl2(64)?;
    r.same("|PSL(2,64)|", 262_080, g.order());
    r.same("os(PSL(2,64)) = S_L2_64", l2.clone(), os_of_group(&g));
    drop(g);
    r.verdict(
        "S_L2_64 vs S_C3^2xSz8",
        DominationVerdict::Incomparable,
        &l2,
        &sz,
    );
    r.same("psi(S_L2_64)", PSI_L2_64, psi(&l2));
    r.same("psi(S_C3^2xSz8)", PSI_C3SQ_SZ8, psi(&sz));
    r.holds(
        "psi(S_C3^2xSz8) < psi(S_L2_64)",
        "true",
        psi(&sz) < psi(&l2),
        psi(&sz) < psi(&l2),
    );
    if sz8 {
        let (_, s) = os_of("C3^2xSz8", None)?;
        r.same("os(C3^2xSz8) = S_C3^2xSz8", sz, s);
    }
    Ok(r)
}

/// Small groups used by the property checks, labelled by expression.
pub fn property_groups() -> Result<Vec<(String, Arc<Group>)>> {
    let mut out: Vec<(String, Arc<Group>)> = vec![
        ("C(2)".into(), Arc::new(cyclic(2)?)),
        ("C(3)".into(), Arc::new(cyclic(3)?)),
        ("C(4)".into(), Arc::new(cyclic(4)?)),
        ("C(5)".into(), Arc::new(cyclic(5)?)),
        ("C(7)".into(), Arc::new(cyclic(7)?)),
        ("C(2)^2".into(), Arc::new(cyclic_power(2, 2)?)),
        ("S(3)".into(), Arc::new(symmetric(3)?)),
        ("D(8)".into(), Arc::new(dihedral(8)?)),
        ("Dic(8)".into(), Arc::new(dicyclic(8)?)),
        ("D(10)".into(), Arc::new(dihedral(10)?)),
        ("A(4)".into(), Arc::new(alternating(4)?)),
        ("D(12)".into(), Arc::new(dihedral(12)?)),
        ("Dic(12)".into(), Arc::new(dicyclic(12)?)),
        ("He(3)".into(), Arc::new(heisenberg(3)?)),
        ("S(4)".into(), Arc::new(symmetric(4)?)),
        ("F7".into(), Arc::new(frobenius42()?)),
        ("F8".into(), Arc::new(frobenius56()?)),
        ("A(5)".into(), Arc::new(alternating(5)?)),
        ("He(5)".into(), Arc::new(heisenberg(5)?)),
    ];
    for (label, g) in catalog::samples()? {
        if g.order() <= QUOTIENT_THRESHOLD {
            out.push((format!("Cat({label})"), g));
        }
    }
    Ok(out)
}

/// Random sequence of the given total over orders below 40.
pub fn random_sequence(rng: &mut StdRng, total: u64) -> OrderSequence {
    let parts = rng.gen_range(1..=6usize);
    let mut cuts: Vec<u64> = (0..parts - 1).map(|_| rng.gen_range(0..=total)).collect();
    cuts.push(0);
    cuts.push(total);
    cuts.sort_unstable();
    let mut pairs = BTreeMap::new();
    for w in cuts.windows(2) {
        let m = w[1] - w[0];
        if m > 0 {
            *pairs.entry(rng.gen_range(1..40u64)).or_insert(0) += m;
        }
    }
    OrderSequence::from_pairs(pairs).expect("positive multiplicities")
}

pub fn props(fx: &[Fixture]) -> Result<Report> {
    let mut r = Report::new(Suite::Props);
    let groups = property_groups()?;
    let seqs: Vec<OrderSequence> = groups.iter().map(|(_, g)| os_of_group(g)).collect();

    // direct products of coprime orders
    let mut coprime = 0;
    let mut failing_noncoprime = Vec::new();
    for i in 0..groups.len() {
        for j in i + 1..groups.len() {
            let (a, b) = (groups[i].1.order() as u64, groups[j].1.order() as u64);
            if a * b > 50_000 || a.max(b) > 60 {
                continue;
            }
            let direct = os_of_group(&direct_product(&groups[i].1, &groups[j].1)?);
            let formal = os_product(&seqs[i], &seqs[j]);
            if gcd(a, b) == 1 {
                r.same(
                    format!("os({} x {}) = product", groups[i].0, groups[j].0),
                    formal,
                    direct,
                );
                coprime += 1;
            } else if direct != formal {
                failing_noncoprime.push(format!("{} x {}", groups[i].0, groups[j].0));
            }
        }
    }
    r.holds(
        "coprime pairs checked",
        "at least 10",
        coprime >= 10,
        coprime,
    );
    r.holds(
        "non-coprime pairs where the product formula fails",
        "at least one",
        !failing_noncoprime.is_empty(),
        failing_noncoprime.len(),
    );

    // the formal square of os(C2) is not a group sequence
    let sq = os_product(&os_cyclic(2), &os_cyclic(2));
    let check = is_plausible(&sq, 4);
    r.same(
        "is_plausible(os(C2)·os(C2))",
        "false: φ(4)=2 does not divide multiplicity 1".to_string(),
        format!("{}: {}", check.plausible, check.reason.unwrap_or_default()),
    );

    // multiplying by a coprime sequence preserves domination
    let order12 = order_twelve()?;
    let mut triples = 0;
    for h in [5u64, 7, 11, 35] {
        let hs = os_cyclic(h);
        for (la, a) in &order12 {
            for (lb, b) in &order12 {
                let inner = compare(a, b)?;
                if la == lb || !inner.dominates() {
                    continue;
                }
                let outer = compare(&os_product(&hs, a), &os_product(&hs, b))?;
                r.same(format!("C{h}: {la} vs {lb}"), inner, outer);
                triples += 1;
            }
        }
    }
    let c7 = os_cyclic(7);
    let (h, g) = (
        os_of_group(&*catalog::c5_times_a5()?),
        os_of_group(&*catalog::c5sq_dic12()?),
    );
    r.same(
        "C7: C5xA5 vs C5^2:Dic12",
        compare(&h, &g)?,
        compare(&os_product(&c7, &h), &os_product(&c7, &g))?,
    );
    triples += 1;
    r.holds(
        "congruence triples checked",
        "at least 5",
        triples >= 5,
        triples,
    );

    // nilpotent against non-nilpotent at order 12
    for (la, a) in order12.iter().filter(|(l, _)| l == "C12" || l == "C2xC6") {
        for (lb, b) in order12.iter().filter(|(l, _)| l != "C12" && l != "C2xC6") {
            r.verdict(
                format!("{la} vs {lb}"),
                DominationVerdict::ProperlyDominates,
                a,
                b,
            );
        }
    }

    // nilpotency from the sequence, and the implication chain
    for ((label, g), s) in groups.iter().zip(&seqs) {
        r.same(
            format!("nilpotent({label}) from sequence"),
            is_nilpotent(g),
            nilpotent_from_os(s)?,
        );
        let report = classify(g);
        r.holds(
            format!("classification chain for {label}"),
            "consistent",
            report.is_ok(),
            match report {
                Ok(c) => format!("n={} s={} ss={}", c.nilpotent, c.solvable, c.supersolvable),
                Err(e) => e.to_string(),
            },
        );
    }

    // plausibility of every computed and printed sequence
    let mut bad = Vec::new();
    for ((label, g), s) in groups.iter().zip(&seqs) {
        if !is_plausible(s, g.order() as u64).plausible {
            bad.push(label.clone());
        }
    }
    for f in fx {
        if !is_plausible(&f.sequence, f.n).plausible {
            bad.push(f.label.clone());
        }
    }
    r.holds(
        "φ(d) | m(d) and d | n everywhere",
        "no violations",
        bad.is_empty(),
        bad.join(" "),
    );

    // cumulative comparison against expansion
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut disagreements = 0;
    for _ in 0..1000 {
        let total = rng.gen_range(1..=2000);
        let (a, b) = (
            random_sequence(&mut rng, total),
            random_sequence(&mut rng, total),
        );
        if compare(&a, &b)? != compare_expanded(&a, &b)? {
            disagreements += 1;
        }
    }
    r.same(
        "compare vs expansion on 1000 random pairs: disagreements",
        0,
        disagreements,
    );

    // partial-order axioms per fixture order
    for n in fixtures::orders(fx) {
        let corpus = Corpus::from_fixtures(fx, n)?;
        let violations = partial_order_violations(&corpus)?;
        r.same(
            format!("partial-order axioms at order {n}: violations"),
            0,
            violations,
        );
    }
    Ok(r)
}

/// The five groups of order 12.
pub fn order_twelve() -> Result<Vec<(String, OrderSequence)>> {
    Ok(vec![
        ("C12".to_string(), os_of_group(&cyclic(12)?)),
        (
            "C2xC6".to_string(),
            os_of_group(&direct_product(
                &Arc::new(cyclic(2)?),
                &Arc::new(cyclic(6)?),
            )?),
        ),
        ("D12".to_string(), os_of_group(&dihedral(12)?)),
        ("A4".to_string(), os_of_group(&alternating(4)?)),
        ("Dic12".to_string(), os_of_group(&dicyclic(12)?)),
    ])
}

/// Counts failures of reflexivity, antisymmetry and transitivity.
pub fn partial_order_violations(c: &Corpus) -> Result<usize> {
    let e = c.entries();
    let n = e.len();
    let mut rel = vec![vec![DominationVerdict::Equal; n]; n];
    for i in 0..n {
        for j in 0..n {
            rel[i][j] = compare(&e[i].sequence, &e[j].sequence)?;
        }
    }
    let mut bad = 0;
    for i in 0..n {
        bad += (rel[i][i] != DominationVerdict::Equal) as usize;
        for j in 0..n {
            bad += (rel[i][j] != rel[j][i].mirror()) as usize;
            bad +=
                (rel[i][j] == DominationVerdict::Equal && e[i].sequence != e[j].sequence) as usize;
            for k in 0..n {
                if rel[i][j].dominates() && rel[j][k].dominates() && !rel[i][k].dominates() {
                    bad += 1;
                }
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_guards() {
        assert!(Suite::Thm23.check_prime(11).is_err());
        assert!(Suite::Thm23.check_prime(5).is_err());
        assert!(Suite::Thm23.check_prime(7).is_ok());
        assert!(Suite::Thm25.check_prime(13).is_err());
        assert!(Suite::Thm25.check_prime(7).is_err());
        assert!(Suite::Thm25.check_prime(11).is_ok());
        assert!(Suite::Thm29.check_prime(3).is_err());
        assert!(Suite::Thm29.check_prime(9).is_err());
        assert!(Suite::Table1.check_prime(7).is_err());
        let opts = VerifyOptions {
            primes: Some(vec![11]),
            ..VerifyOptions::default()
        };
        assert!(run(Suite::Thm23, &opts).is_err());
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn closed_forms_have_the_right_totals() {
        for p in [11u64, 17, 23] {
            assert_eq!(cp_a4_closed_form(p).total(), 12 * p);
            assert_eq!(s3_d2p_closed_form(p).total(), 12 * p);
        }
    }

    #[test]
    fn table3_suite_passes() {
        let r = run(Suite::Table3, &VerifyOptions::default()).unwrap();
        assert!(r.passed(), "{}", r.render());
    }

    #[test]
    fn render_is_deterministic() {
        let opts = VerifyOptions::default();
        let a = run(Suite::Thm25, &opts).unwrap().render();
        let b = run(Suite::Thm25, &opts).unwrap().render();
        assert_eq!(a, b);
        assert!(a.ends_with("PASS thm25: 15 checks, 0 failed\n"), "{a}");
    }
}
