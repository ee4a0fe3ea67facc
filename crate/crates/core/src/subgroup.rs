//! Subgroups of enumerated groups: closure, normality, quotients and
//! commutator subgroups.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{ElementIndex, Group};
use crate::par::{self, Strategy};

/// Largest group order accepted by quotient and commutator computations.
pub const QUOTIENT_THRESHOLD: usize = 20_000;

/// A subgroup given by its sorted member indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubgroupSet {
    members: Vec<ElementIndex>,
}

impl SubgroupSet {
    pub fn trivial() -> SubgroupSet {
        SubgroupSet {
            members: vec![ElementIndex::IDENTITY],
        }
    }

    pub fn whole(g: &Group) -> SubgroupSet {
        SubgroupSet {
            members: g.elements().collect(),
        }
    }

    pub fn members(&self) -> &[ElementIndex] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn contains(&self, x: ElementIndex) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for x in &self.members {
            m[x.index()] = true;
        }
        m
    }
}

/// Smallest subgroup containing `seed`.
pub fn subgroup_closure(g: &Group, seed: &[ElementIndex]) -> SubgroupSet {
    let gens: Vec<ElementIndex> = seed.iter().copied().filter(|x| !x.is_identity()).collect();
    let mut inside = vec![false; g.order()];
    inside[0] = true;
    let mut queue = vec![ElementIndex::IDENTITY];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &s in &gens {
            let y = g.mul(x, s);
            if !inside[y.index()] {
                inside[y.index()] = true;
                queue.push(y);
            }
        }
    }
    queue.sort_unstable();
    SubgroupSet { members: queue }
}

/// True iff `g h g⁻¹ ∈ H` for every generator `g` and every `h ∈ H`.
pub fn is_normal(g: &Group, h: &SubgroupSet) -> bool {
    let mask = h.mask(g.order());
    g.generators()
        .iter()
        .all(|&x| h.members.iter().all(|&y| mask[g.conjugate(y, x).index()]))
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

/// `G / N` as a coset-backed group. Each coset is represented by its least
/// member index; coset ids follow the order of those representatives.
pub fn quotient(g: &Arc<Group>, n: &SubgroupSet) -> Result<Group> {
    check_threshold(g)?;
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    let mut coset_of = vec![u32::MAX; g.order()];
    let mut reps = Vec::with_capacity(g.order() / n.len());
    for x in g.elements() {
        if coset_of[x.index()] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x.0);
        for &m in &n.members {
            coset_of[g.mul(x, m).index()] = id;
        }
    }
    Ok(Group::quotient_from_parts(g.clone(), coset_of, reps))
}

/// Maps an element of `G` to its coset in a quotient built by [`quotient`].
pub fn coset_index(g: &Group, n: &SubgroupSet, x: ElementIndex) -> ElementIndex {
    // cosets are numbered by least member in index order
    let mut seen = vec![false; g.order()];
    let mut id = 0u32;
    for y in g.elements() {
        if seen[y.index()] {
            continue;
        }
        let mut hit = false;
        for &m in &n.members {
            let z = g.mul(y, m);
            seen[z.index()] = true;
            hit |= z == x;
        }
        if hit {
            return ElementIndex(id);
        }
        id += 1;
    }
    unreachable!("every element lies in a coset")
}

/// A generating set of `S`, chosen greedily in index order.
pub fn generating_set(g: &Group, s: &SubgroupSet) -> Vec<ElementIndex> {
    let mut gens = Vec::new();
    let mut span = SubgroupSet::trivial();
    for &x in &s.members {
        if span.len() == s.len() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = subgroup_closure(g, &gens);
        }
    }
    gens
}

/// Smallest subgroup of `S` containing `seed` and normalized by `S`.
pub fn normal_closure_in(g: &Group, s_gens: &[ElementIndex], seed: &[ElementIndex]) -> SubgroupSet {
    let mut gens: Vec<ElementIndex> = seed.iter().copied().filter(|x| !x.is_identity()).collect();
    let mut k = subgroup_closure(g, &gens);
    let mut i = 0;
    while i < gens.len() {
        let y = gens[i];
        for &x in s_gens {
            let c = g.conjugate(y, x);
            if !k.contains(c) {
                gens.push(c);
                k = subgroup_closure(g, &gens);
            }
        }
        i += 1;
    }
    k
}

/// `[S, S]`: the normal closure in `S` of the commutators of a generating
/// set of `S`.
pub fn derived_of(g: &Group, s: &SubgroupSet) -> Result<SubgroupSet> {
    check_threshold(g)?;
    let gens = generating_set(g, s);
    let mut seed = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            seed.push(g.commutator(a, b));
        }
    }
    Ok(normal_closure_in(g, &gens, &seed))
}

/// `[S, S]` from all pairs of members.
pub fn derived_of_all_pairs(g: &Group, s: &SubgroupSet, strategy: Strategy) -> Result<SubgroupSet> {
    check_threshold(g)?;
    let n = g.order();
    let inverses: Vec<ElementIndex> = par::map_slice(strategy, &s.members, |&x| g.inv(x));
    let rows: Vec<Vec<bool>> = par::map_range(strategy, s.members.len(), |i| {
        let a = s.members[i];
        let ai = inverses[i];
        let mut row = vec![false; n];
        for (j, &b) in s.members.iter().enumerate() {
            let c = g.mul(g.mul(ai, inverses[j]), g.mul(a, b));
            row[c.index()] = true;
        }
        row
    });
    let mut hit = vec![false; n];
    for row in rows {
        for (h, r) in hit.iter_mut().zip(row) {
            *h |= r;
        }
    }
    let seed: Vec<ElementIndex> = hit
        .iter()
        .enumerate()
        .filter(|&(_, &b)| b)
        .map(|(i, _)| ElementIndex(i as u32))
        .collect();
    Ok(subgroup_closure(g, &seed))
}

/// The commutator subgroup `G'`.
pub fn derived_subgroup(g: &Group) -> Result<SubgroupSet> {
    derived_of(g, &SubgroupSet::whole(g))
}

/// Orders of `G ⊵ G' ⊵ G'' ⊵ …` until the series stabilizes.
pub fn derived_series(g: &Group) -> Result<Vec<usize>> {
    let mut current = SubgroupSet::whole(g);
    let mut sizes = vec![current.len()];
    loop {
        let next = derived_of(g, &current)?;
        if next.len() == current.len() {
            return Ok(sizes);
        }
        sizes.push(next.len());
        current = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{alternating, cyclic, direct_product, symmetric};

    #[test]
    fn closures_in_s3() {
        let g = symmetric(3).unwrap();
        let three = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        assert_eq!(subgroup_closure(&g, &[three]).len(), 3);
        assert!(subgroup_closure(&g, &[]).is_trivial());
    }

    #[test]
    fn commutators_of_a4_generate_klein() {
        let g = alternating(4).unwrap();
        let comms: Vec<_> = g
            .elements()
            .flat_map(|a| g.elements().map(move |b| (a, b)))
            .map(|(a, b)| g.commutator(a, b))
            .collect();
        let k = subgroup_closure(&g, &comms);
        assert_eq!(k.len(), 4);
        assert!(is_normal(&g, &k));
        assert_eq!(derived_subgroup(&g).unwrap(), k);
    }

    #[test]
    fn normality_in_s3() {
        let g = symmetric(3).unwrap();
        let a3 = derived_subgroup(&g).unwrap();
        assert_eq!(a3.len(), 3);
        assert!(is_normal(&g, &a3));
        let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        assert!(!is_normal(&g, &subgroup_closure(&g, &[t])));
    }

    #[test]
    fn quotients() {
        let c6 = Arc::new(cyclic(6).unwrap());
        let c2 = subgroup_closure(&c6, &[ElementIndex(3)]);
        assert_eq!(quotient(&c6, &c2).unwrap().order(), 3);

        let s3 = Arc::new(symmetric(3).unwrap());
        let a3 = derived_subgroup(&s3).unwrap();
        let q = quotient(&s3, &a3).unwrap();
        assert_eq!(q.order(), 2);
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        assert_eq!(
            quotient(&s3, &subgroup_closure(&s3, &[t])).unwrap_err(),
            Error::NotNormal
        );
    }

    #[test]
    fn quotient_projection_is_a_homomorphism() {
        let g = Arc::new(
            direct_product(
                &Arc::new(cyclic(11).unwrap()),
                &Arc::new(alternating(4).unwrap()),
            )
            .unwrap(),
        );
        // C11 factor: elements (x, 1) have index x * 12
        let c11 = subgroup_closure(&g, &[ElementIndex(12)]);
        assert_eq!(c11.len(), 11);
        let q = Arc::new(quotient(&g, &c11).unwrap());
        assert_eq!(q.order(), 12);
        let orders = q.element_orders();
        assert_eq!(orders.iter().filter(|&&o| o == 3).count(), 8);
        let mut coset_of = vec![0u32; g.order()];
        for x in g.elements() {
            coset_of[x.index()] = coset_index(&g, &c11, x).0;
        }
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..1000 {
            let a = ElementIndex(rng.gen_range(0..g.order() as u32));
            let b = ElementIndex(rng.gen_range(0..g.order() as u32));
            let lhs = coset_of[g.mul(a, b).index()];
            let rhs = q.mul(
                ElementIndex(coset_of[a.index()]),
                ElementIndex(coset_of[b.index()]),
            );
            assert_eq!(lhs, rhs.0);
        }
    }

    #[test]
    fn a5_is_perfect() {
        let g = alternating(5).unwrap();
        assert_eq!(derived_subgroup(&g).unwrap().len(), 60);
    }

    #[test]
    fn derived_subgroup_is_normal() {
        for g in [
            symmetric(4).unwrap(),
            alternating(4).unwrap(),
            crate::constructors::dicyclic(12).unwrap(),
        ] {
            let d = derived_subgroup(&g).unwrap();
            assert!(is_normal(&g, &d));
        }
    }

    #[test]
    fn generator_commutators_match_all_pairs() {
        let groups = [
            symmetric(4).unwrap(),
            alternating(5).unwrap(),
            crate::constructors::dicyclic(12).unwrap(),
            crate::constructors::heisenberg(3).unwrap(),
            crate::constructors::frobenius56().unwrap(),
            direct_product(
                &Arc::new(symmetric(3).unwrap()),
                &Arc::new(alternating(4).unwrap()),
            )
            .unwrap(),
        ];
        for g in &groups {
            let mut s = SubgroupSet::whole(g);
            loop {
                let fast = derived_of(g, &s).unwrap();
                let slow = derived_of_all_pairs(g, &s, Strategy::Sequential).unwrap();
                assert_eq!(fast, slow);
                assert_eq!(
                    derived_of_all_pairs(g, &s, Strategy::Parallel).unwrap(),
                    slow
                );
                if fast.len() == s.len() {
                    break;
                }
                s = fast;
            }
            let gens = generating_set(g, &SubgroupSet::whole(g));
            assert_eq!(subgroup_closure(g, &gens).len(), g.order());
        }
    }

    #[test]
    fn threshold_enforced() {
        let g = cyclic(20_001).unwrap();
        assert!(matches!(
            derived_subgroup(&g),
            Err(Error::ThresholdExceeded { .. })
        ));
    }
}
