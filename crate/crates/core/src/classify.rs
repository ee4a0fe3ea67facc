//! Nilpotency, supersolvability and solvability of enumerated groups.
//!
//! Supersolvability descends through normal subgroups of prime order: a
//! nontrivial supersolvable group always has one, its quotient is again
//! supersolvable, and a group with a cyclic normal subgroup and
//! supersolvable quotient is supersolvable. Any such subgroup therefore
//! decides the question, so the descent never backtracks.

use std::sync::Arc;

use crate::arith::{factorize, is_power_of, is_prime, p_part};
use crate::error::{Error, Result};
use crate::group::{ElementIndex, Group};
use crate::subgroup::{derived_series, is_normal, quotient, SubgroupSet, QUOTIENT_THRESHOLD};

/// One step of a supersolvable descent: `subgroup` is a normal subgroup of
/// prime order in `group`, and the next step works in `group / subgroup`.
#[derive(Clone, Debug)]
pub struct NormalStep {
    pub group: Arc<Group>,
    pub subgroup: SubgroupSet,
    pub prime: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub order: usize,
    pub nilpotent: bool,
    pub supersolvable: bool,
    pub solvable: bool,
    /// Orders of the successive prime-order normal subgroups, when supersolvable.
    pub supersolvable_witness: Vec<u64>,
    /// Orders along the derived series, ending where it stabilizes.
    pub derived_series: Vec<usize>,
}

impl ClassificationReport {
    pub fn new(
        order: usize,
        nilpotent: bool,
        supersolvable: bool,
        solvable: bool,
        supersolvable_witness: Vec<u64>,
        derived_series: Vec<usize>,
    ) -> Result<ClassificationReport> {
        if nilpotent && !supersolvable {
            return Err(Error::InconsistentClassification(
                "nilpotent but not supersolvable".into(),
            ));
        }
        if supersolvable && !solvable {
            return Err(Error::InconsistentClassification(
                "supersolvable but not solvable".into(),
            ));
        }
        Ok(ClassificationReport {
            order,
            nilpotent,
            supersolvable,
            solvable,
            supersolvable_witness,
            derived_series,
        })
    }
}

fn check_threshold(g: &Group) -> Result<()> {
    if g.order() > QUOTIENT_THRESHOLD {
        return Err(Error::ThresholdExceeded {
            order: g.order(),
            threshold: QUOTIENT_THRESHOLD,
        });
    }
    Ok(())
}

/// True iff the derived series reaches the trivial group.
pub fn is_solvable(g: &Group) -> Result<bool> {
    check_threshold(g)?;
    Ok(derived_series(g)?.last() == Some(&1))
}

/// For every prime `p | n`, the elements of `p`-power order number exactly
/// the `p`-part of `n` (each Sylow subgroup is normal).
pub fn is_nilpotent(g: &Group) -> bool {
    let n = g.order() as u64;
    let orders = g.element_orders();
    factorize(n).into_iter().all(|(p, _)| {
        let count = orders.iter().filter(|&&o| is_power_of(o as u64, p)).count() as u64;
        count == p_part(n, p)
    })
}

/// First normal subgroup of prime order, scanning elements by index.
pub fn prime_order_normal_subgroup(g: &Group) -> Option<(SubgroupSet, u64)> {
    let orders = g.element_orders();
    let mut tried = vec![false; g.order()];
    for x in g.elements() {
        let o = orders[x.index()] as u64;
        if tried[x.index()] || !is_prime(o) {
            continue;
        }
        let mut y = ElementIndex::IDENTITY;
        for _ in 0..o {
            tried[y.index()] = true;
            y = g.mul(y, x);
        }
        let sub = crate::subgroup::subgroup_closure(g, &[x]);
        debug_assert_eq!(sub.len() as u64, o);
        if is_normal(g, &sub) {
            return Some((sub, o));
        }
    }
    None
}

/// The descent through prime-order normal subgroups, or `None` when it gets
/// stuck at a nontrivial group (not supersolvable).
pub fn supersolvable_chain(g: &Arc<Group>) -> Result<Option<Vec<NormalStep>>> {
    check_threshold(g)?;
    let mut current = g.clone();
    let mut steps = Vec::new();
    while current.order() > 1 {
        let Some((sub, prime)) = prime_order_normal_subgroup(&current) else {
            return Ok(None);
        };
        let next = Arc::new(quotient(&current, &sub)?);
        steps.push(NormalStep {
            group: current,
            subgroup: sub,
            prime,
        });
        current = next;
    }
    Ok(Some(steps))
}

pub fn is_supersolvable(g: &Arc<Group>) -> Result<bool> {
    Ok(supersolvable_chain(g)?.is_some())
}

pub fn classify(g: &Arc<Group>) -> Result<ClassificationReport> {
    let chain = supersolvable_chain(g)?;
    let series = derived_series(g)?;
    let witness = chain
        .as_ref()
        .map(|steps| steps.iter().map(|s| s.prime).collect())
        .unwrap_or_default();
    ClassificationReport::new(
        g.order(),
        is_nilpotent(g),
        chain.is_some(),
        series.last() == Some(&1),
        witness,
        series,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    fn arc(g: Result<Group>) -> Arc<Group> {
        Arc::new(g.unwrap())
    }

    #[test]
    fn solvability() {
        assert!(is_solvable(&symmetric(3).unwrap()).unwrap());
        assert!(!is_solvable(&alternating(5).unwrap()).unwrap());
        assert!(is_solvable(&symmetric(4).unwrap()).unwrap());
    }

    #[test]
    fn supersolvability() {
        assert!(!is_supersolvable(&arc(alternating(4))).unwrap());
        assert!(is_supersolvable(&arc(dihedral(8))).unwrap());
        assert!(is_supersolvable(&arc(symmetric(3))).unwrap());
        assert!(!is_supersolvable(&arc(symmetric(4))).unwrap());
        assert!(is_supersolvable(&arc(cyclic(1))).unwrap());
    }

    #[test]
    fn nilpotency() {
        assert!(is_nilpotent(&heisenberg(3).unwrap()));
        assert!(!is_nilpotent(&symmetric(3).unwrap()));
        assert!(is_nilpotent(&cyclic(12).unwrap()));
        assert!(is_nilpotent(&cyclic_power(2, 2).unwrap()));
    }

    #[test]
    fn chain_steps_are_normal_of_prime_order() {
        let g = arc(dihedral(12));
        let steps = supersolvable_chain(&g).unwrap().unwrap();
        assert_eq!(steps.iter().map(|s| s.prime).product::<u64>(), 12);
        for s in &steps {
            assert!(is_prime(s.subgroup.len() as u64));
            assert!(is_normal(&s.group, &s.subgroup));
        }
    }

    #[test]
    fn report_rejects_broken_implications() {
        assert!(ClassificationReport::new(6, true, false, true, vec![], vec![]).is_err());
        assert!(ClassificationReport::new(6, false, true, false, vec![], vec![]).is_err());
        let r = classify(&arc(symmetric(3))).unwrap();
        assert_eq!(
            (r.nilpotent, r.supersolvable, r.solvable),
            (false, true, true)
        );
        assert_eq!(r.derived_series, vec![6, 3, 1]);
    }
}
