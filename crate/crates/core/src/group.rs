//! Enumerated finite groups.
//!
//! A [`Group`] is a complete, deterministic table of its elements plus a way
//! to multiply them by index. Index 0 is always the identity. Permutation and
//! matrix groups are enumerated by breadth-first closure from the identity,
//! applying generators in their declared order. Products are indexed as
//! `left * |right| + right`, and quotients by their least coset member.
//! No Cayley table is ever stored.

use std::hash::Hash;
use std::sync::{Arc, OnceLock};

use indexmap::IndexSet;
use rustc_hash::FxBuildHasher;

use crate::action::ActionMap;
use crate::arith::{gcd, lcm};
use crate::error::{Error, Result};
use crate::finite_field::{Field, FieldElement, Matrix};
use crate::par::{self, Strategy};

/// Default bound on the number of elements a closure may produce.
pub const DEFAULT_CLOSURE_CAP: usize = 500_000;

pub(crate) type KeySet<K> = IndexSet<K, FxBuildHasher>;

/// Position of an element in its group's table.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElementIndex(pub u32);

impl ElementIndex {
    pub const IDENTITY: ElementIndex = ElementIndex(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl From<usize> for ElementIndex {
    fn from(i: usize) -> Self {
        ElementIndex(i as u32)
    }
}

pub(crate) enum Repr {
    Cyclic {
        n: u32,
    },
    Perm {
        degree: usize,
        elems: KeySet<Box<[u16]>>,
    },
    Matrix {
        field: Arc<Field>,
        dim: usize,
        projective: bool,
        elems: KeySet<Box<[u32]>>,
    },
    Product {
        left: Arc<Group>,
        right: Arc<Group>,
        action: Option<Arc<ActionMap>>,
    },
    Quotient {
        parent: Arc<Group>,
        coset_of: Vec<u32>,
        reps: Vec<u32>,
    },
}

/// A finite group with an explicit element table.
pub struct Group {
    repr: Repr,
    order: usize,
    generators: Vec<ElementIndex>,
    orders: OnceLock<Vec<u32>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("kind", &self.kind())
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

/// Breadth-first closure of `gens` under right multiplication.
///
/// Returns the element set in discovery order (identity first) and the
/// indices of the generators within it.
pub fn enumerate<K, F>(
    identity: K,
    gens: &[K],
    mul: F,
    cap: usize,
) -> Result<(KeySet<K>, Vec<ElementIndex>)>
where
    K: Hash + Eq + Clone,
    F: Fn(&K, &K) -> K,
{
    let mut set: KeySet<K> = KeySet::default();
    set.insert(identity);
    let mut next = 0;
    while next < set.len() {
        let current = set.get_index(next).expect("in range").clone();
        for g in gens {
            let prod = mul(&current, g);
            if !set.contains(&prod) {
                if set.len() >= cap {
                    return Err(Error::ClosureCapExceeded { cap });
                }
                set.insert(prod);
            }
        }
        next += 1;
    }
    let gen_idx = gens
        .iter()
        .map(|g| ElementIndex(set.get_index_of(g).expect("generator in closure") as u32))
        .collect();
    Ok((set, gen_idx))
}

pub(crate) fn compose(a: &[u16], b: &[u16]) -> Box<[u16]> {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn dedup_generators(gens: Vec<ElementIndex>) -> Vec<ElementIndex> {
    let mut seen = std::collections::BTreeSet::new();
    gens.into_iter()
        .filter(|g| !g.is_identity() && seen.insert(*g))
        .collect()
}

impl Group {
    pub(crate) fn from_repr(repr: Repr, order: usize, generators: Vec<ElementIndex>) -> Group {
        Group {
            repr,
            order,
            generators: dedup_generators(generators),
            orders: OnceLock::new(),
        }
    }

    /// The cyclic group `Z/n` under addition.
    pub fn cyclic(n: u32) -> Result<Group> {
        if n == 0 {
            return Err(Error::InvalidParameter {
                name: "cyclic",
                reason: "n must be ≥ 1".into(),
            });
        }
        let gens = if n > 1 { vec![ElementIndex(1)] } else { vec![] };
        Ok(Group::from_repr(Repr::Cyclic { n }, n as usize, gens))
    }

    /// Closure of permutations of `0..degree`, composed left to right
    /// (`(a·b)(x) = b(a(x))`).
    pub fn from_permutations(degree: usize, gens: &[Vec<u16>], cap: usize) -> Result<Group> {
        for g in gens {
            if g.len() != degree {
                return Err(Error::InconsistentGenerators(format!(
                    "permutation of length {} in degree {}",
                    g.len(),
                    degree
                )));
            }
            let mut seen = vec![false; degree];
            for &x in g {
                if x as usize >= degree || std::mem::replace(&mut seen[x as usize], true) {
                    return Err(Error::InconsistentGenerators("not a permutation".into()));
                }
            }
        }
        let identity: Box<[u16]> = (0..degree as u16).collect();
        let boxed: Vec<Box<[u16]>> = gens.iter().map(|g| g.clone().into_boxed_slice()).collect();
        let (elems, gen_idx) = enumerate(identity, &boxed, |a, b| compose(a, b), cap)?;
        let order = elems.len();
        Ok(Group::from_repr(
            Repr::Perm { degree, elems },
            order,
            gen_idx,
        ))
    }

    /// Closure of invertible matrices; with `projective` set, matrices are
    /// taken modulo scalars (normalized so the first nonzero entry is 1).
    pub fn from_matrices(
        field: Arc<Field>,
        dim: usize,
        gens: &[Matrix],
        projective: bool,
        cap: usize,
    ) -> Result<Group> {
        for g in gens {
            if g.dim != dim {
                return Err(Error::InconsistentGenerators(format!(
                    "{}x{} matrix among {}x{} generators",
                    g.dim, g.dim, dim, dim
                )));
            }
            if field.mat_det(g).is_zero() {
                return Err(Error::SingularMatrix);
            }
        }
        let key = |m: &Matrix| -> Box<[u32]> {
            let m = if projective {
                field.projective_normalize(m)
            } else {
                m.clone()
            };
            m.entries.iter().map(|e| e.0).collect()
        };
        let identity = key(&field.identity_matrix(dim));
        let keys: Vec<Box<[u32]>> = gens.iter().map(key).collect();
        let f = field.clone();
        let (elems, gen_idx) = enumerate(
            identity,
            &keys,
            |a, b| {
                let prod = f.mat_mul_unchecked(&key_matrix(dim, a), &key_matrix(dim, b));
                let prod = if projective {
                    f.projective_normalize(&prod)
                } else {
                    prod
                };
                prod.entries.iter().map(|e| e.0).collect()
            },
            cap,
        )?;
        let order = elems.len();
        Ok(Group::from_repr(
            Repr::Matrix {
                field,
                dim,
                projective,
                elems,
            },
            order,
            gen_idx,
        ))
    }

    /// Left-major product `left × right`, or `left ⋊ right` with an action.
    pub(crate) fn product(
        left: Arc<Group>,
        right: Arc<Group>,
        action: Option<Arc<ActionMap>>,
        cap: usize,
    ) -> Result<Group> {
        let order = left
            .order()
            .checked_mul(right.order())
            .filter(|&o| o <= cap)
            .ok_or(Error::ClosureCapExceeded { cap })?;
        let rn = right.order() as u32;
        let mut gens: Vec<ElementIndex> = left
            .generators()
            .iter()
            .map(|g| ElementIndex(g.0 * rn))
            .collect();
        gens.extend(right.generators().iter().copied());
        Ok(Group::from_repr(
            Repr::Product {
                left,
                right,
                action,
            },
            order,
            gens,
        ))
    }

    pub(crate) fn quotient_from_parts(
        parent: Arc<Group>,
        coset_of: Vec<u32>,
        reps: Vec<u32>,
    ) -> Group {
        let gens = parent
            .generators()
            .iter()
            .map(|g| ElementIndex(coset_of[g.index()]))
            .collect();
        let order = reps.len();
        Group::from_repr(
            Repr::Quotient {
                parent,
                coset_of,
                reps,
            },
            order,
            gens,
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> ElementIndex {
        ElementIndex::IDENTITY
    }

    pub fn generators(&self) -> &[ElementIndex] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementIndex> {
        (0..self.order as u32).map(ElementIndex)
    }

    /// Short name of the backing representation.
    pub fn kind(&self) -> &'static str {
        match &self.repr {
            Repr::Cyclic { .. } => "cyclic",
            Repr::Perm { .. } => "permutation",
            Repr::Matrix {
                projective: true, ..
            } => "projective-matrix",
            Repr::Matrix { .. } => "matrix",
            Repr::Product { action: None, .. } => "direct-product",
            Repr::Product { .. } => "semidirect-product",
            Repr::Quotient { .. } => "quotient",
        }
    }

    pub fn permutation(&self, a: ElementIndex) -> Option<&[u16]> {
        match &self.repr {
            Repr::Perm { elems, .. } => elems.get_index(a.index()).map(|p| &p[..]),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<usize> {
        match &self.repr {
            Repr::Perm { degree, .. } => Some(*degree),
            _ => None,
        }
    }

    pub fn matrix(&self, a: ElementIndex) -> Option<Matrix> {
        match &self.repr {
            Repr::Matrix { dim, elems, .. } => {
                elems.get_index(a.index()).map(|k| key_matrix(*dim, k))
            }
            _ => None,
        }
    }

    /// Index of a permutation in a permutation-backed group.
    pub fn index_of_permutation(&self, perm: &[u16]) -> Option<ElementIndex> {
        match &self.repr {
            Repr::Perm { elems, .. } => elems.get_index_of(perm).map(|i| ElementIndex(i as u32)),
            _ => None,
        }
    }

    /// Components of a product element.
    pub fn components(&self, a: ElementIndex) -> Option<(ElementIndex, ElementIndex)> {
        match &self.repr {
            Repr::Product { right, .. } => {
                let rn = right.order() as u32;
                Some((ElementIndex(a.0 / rn), ElementIndex(a.0 % rn)))
            }
            _ => None,
        }
    }

    pub fn factors(&self) -> Option<(&Arc<Group>, &Arc<Group>)> {
        match &self.repr {
            Repr::Product { left, right, .. } => Some((left, right)),
            _ => None,
        }
    }

    pub fn mul(&self, a: ElementIndex, b: ElementIndex) -> ElementIndex {
        match &self.repr {
            Repr::Cyclic { n } => ElementIndex((a.0 + b.0) % n),
            Repr::Perm { elems, .. } => {
                let pa = elems.get_index(a.index()).expect("valid index");
                let pb = elems.get_index(b.index()).expect("valid index");
                let prod: Vec<u16> = pa.iter().map(|&x| pb[x as usize]).collect();
                ElementIndex(
                    elems
                        .get_index_of(&prod[..])
                        .expect("closed under multiplication") as u32,
                )
            }
            Repr::Matrix {
                field,
                dim,
                projective,
                elems,
            } => {
                let ma = key_matrix(*dim, elems.get_index(a.index()).expect("valid index"));
                let mb = key_matrix(*dim, elems.get_index(b.index()).expect("valid index"));
                let mut prod = field.mat_mul_unchecked(&ma, &mb);
                if *projective {
                    prod = field.projective_normalize(&prod);
                }
                let key: Vec<u32> = prod.entries.iter().map(|e| e.0).collect();
                ElementIndex(
                    elems
                        .get_index_of(&key[..])
                        .expect("closed under multiplication") as u32,
                )
            }
            Repr::Product {
                left,
                right,
                action,
            } => {
                let rn = right.order() as u32;
                let (x1, h1) = (ElementIndex(a.0 / rn), ElementIndex(a.0 % rn));
                let (x2, h2) = (ElementIndex(b.0 / rn), ElementIndex(b.0 % rn));
                let x2 = match action {
                    Some(act) => act.apply(h1, x2),
                    None => x2,
                };
                let x = left.mul(x1, x2);
                let h = right.mul(h1, h2);
                ElementIndex(x.0 * rn + h.0)
            }
            Repr::Quotient {
                parent,
                coset_of,
                reps,
            } => {
                let prod = parent.mul(ElementIndex(reps[a.index()]), ElementIndex(reps[b.index()]));
                ElementIndex(coset_of[prod.index()])
            }
        }
    }

    pub fn inv(&self, a: ElementIndex) -> ElementIndex {
        match &self.repr {
            Repr::Cyclic { n } => ElementIndex((n - a.0) % n),
            Repr::Perm { elems, .. } => {
                let pa = elems.get_index(a.index()).expect("valid index");
                let mut inv = vec![0u16; pa.len()];
                for (i, &x) in pa.iter().enumerate() {
                    inv[x as usize] = i as u16;
                }
                ElementIndex(elems.get_index_of(&inv[..]).expect("closed under inverses") as u32)
            }
            Repr::Matrix {
                field,
                dim,
                projective,
                elems,
            } => {
                let ma = key_matrix(*dim, elems.get_index(a.index()).expect("valid index"));
                let mut inv = field.mat_inv(&ma).expect("group elements are invertible");
                if *projective {
                    inv = field.projective_normalize(&inv);
                }
                let key: Vec<u32> = inv.entries.iter().map(|e| e.0).collect();
                ElementIndex(elems.get_index_of(&key[..]).expect("closed under inverses") as u32)
            }
            Repr::Product {
                left,
                right,
                action,
            } => {
                let rn = right.order() as u32;
                let (x, h) = (ElementIndex(a.0 / rn), ElementIndex(a.0 % rn));
                let hi = right.inv(h);
                let xi = left.inv(x);
                let xi = match action {
                    Some(act) => act.apply(hi, xi),
                    None => xi,
                };
                ElementIndex(xi.0 * rn + hi.0)
            }
            Repr::Quotient {
                parent,
                coset_of,
                reps,
            } => ElementIndex(coset_of[parent.inv(ElementIndex(reps[a.index()])).index()]),
        }
    }

    pub fn pow(&self, a: ElementIndex, mut e: u64) -> ElementIndex {
        let mut acc = ElementIndex::IDENTITY;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: ElementIndex, b: ElementIndex) -> ElementIndex {
        let ai = self.inv(a);
        let bi = self.inv(b);
        self.mul(self.mul(ai, bi), self.mul(a, b))
    }

    /// `g h g⁻¹`.
    pub fn conjugate(&self, h: ElementIndex, g: ElementIndex) -> ElementIndex {
        self.mul(self.mul(g, h), self.inv(g))
    }

    fn order_by_iteration(&self, a: ElementIndex) -> u32 {
        let mut x = a;
        let mut k = 1;
        while !x.is_identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least `m ≥ 1` with `a^m = 1`.
    pub fn element_order(&self, a: ElementIndex) -> u32 {
        if let Some(orders) = self.orders.get() {
            return orders[a.index()];
        }
        self.compute_order(a)
    }

    fn compute_order(&self, a: ElementIndex) -> u32 {
        match &self.repr {
            Repr::Cyclic { n } => n / gcd(a.0 as u64, *n as u64) as u32,
            Repr::Perm { elems, .. } => {
                let p = elems.get_index(a.index()).expect("valid index");
                permutation_order(p)
            }
            Repr::Product {
                left,
                right,
                action: None,
            } => {
                let rn = right.order() as u32;
                let ol = left.element_order(ElementIndex(a.0 / rn)) as u64;
                let or = right.element_order(ElementIndex(a.0 % rn)) as u64;
                lcm(ol, or) as u32
            }
            Repr::Product {
                left,
                right,
                action: Some(_),
            } => {
                let rn = right.order() as u32;
                let m = right.element_order(ElementIndex(a.0 % rn));
                let y = self.pow(a, m as u64);
                debug_assert_eq!(y.0 % rn, 0);
                m * left.element_order(ElementIndex(y.0 / rn))
            }
            Repr::Matrix { .. } | Repr::Quotient { .. } => self.order_by_iteration(a),
        }
    }

    /// Orders of all elements, by index. Cached after the first call.
    pub fn element_orders(&self) -> &[u32] {
        self.orders
            .get_or_init(|| self.element_orders_with(Strategy::Parallel))
    }

    /// Uncached order sweep with an explicit execution strategy.
    pub fn element_orders_with(&self, strategy: Strategy) -> Vec<u32> {
        if let Repr::Product {
            left,
            right,
            action: None,
        } = &self.repr
        {
            let lo = left.element_orders();
            let ro = right.element_orders();
            return par::flat_map_range(strategy, lo.len(), |i| {
                ro.iter()
                    .map(|&r| lcm(lo[i] as u64, r as u64) as u32)
                    .collect()
            });
        }
        if let Repr::Product { left, right, .. } = &self.repr {
            // warm the component caches before fanning out
            left.element_orders();
            right.element_orders();
        }
        par::map_range(strategy, self.order, |i| {
            self.compute_order(ElementIndex(i as u32))
        })
    }

    pub fn field(&self) -> Option<&Arc<Field>> {
        match &self.repr {
            Repr::Matrix { field, .. } => Some(field),
            _ => None,
        }
    }
}

pub(crate) fn key_matrix(dim: usize, key: &[u32]) -> Matrix {
    Matrix {
        dim,
        entries: key.iter().map(|&c| FieldElement(c)).collect(),
    }
}

/// lcm of the cycle lengths.
pub fn permutation_order(p: &[u16]) -> u32 {
    let mut seen = vec![false; p.len()];
    let mut acc = 1u64;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        acc = lcm(acc, len);
    }
    acc as u32
}

/// Builds a permutation of `0..degree` from 1-based disjoint cycles.
pub fn perm_from_cycles(degree: usize, cycles: &[&[u16]]) -> Vec<u16> {
    let mut p: Vec<u16> = (0..degree as u16).collect();
    for cyc in cycles {
        for (i, &x) in cyc.iter().enumerate() {
            let y = cyc[(i + 1) % cyc.len()];
            p[x as usize - 1] = y - 1;
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Group {
        let t = perm_from_cycles(3, &[&[1, 2]]);
        let c = perm_from_cycles(3, &[&[1, 2, 3]]);
        Group::from_permutations(3, &[t, c], DEFAULT_CLOSURE_CAP).unwrap()
    }

    #[test]
    fn s3_from_transposition_and_cycle() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert!(g
            .permutation(ElementIndex(0))
            .unwrap()
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize));
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = Group::from_permutations(4, &[], DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.element_order(ElementIndex(0)), 1);
    }

    #[test]
    fn cycle_type_orders() {
        let p = perm_from_cycles(5, &[&[1, 2], &[3, 4, 5]]);
        assert_eq!(permutation_order(&p), 6);
        assert_eq!(permutation_order(&perm_from_cycles(5, &[])), 1);
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a = s3();
        let b = s3();
        for i in a.elements() {
            assert_eq!(a.permutation(i), b.permutation(i));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let t = perm_from_cycles(5, &[&[1, 2]]);
        let c = perm_from_cycles(5, &[&[1, 2, 3, 4, 5]]);
        let err = Group::from_permutations(5, &[t, c], 100).unwrap_err();
        assert_eq!(err, Error::ClosureCapExceeded { cap: 100 });
    }

    #[test]
    fn inconsistent_degrees_rejected() {
        let err = Group::from_permutations(3, &[vec![1, 0], vec![1, 2, 0]], 10).unwrap_err();
        assert!(matches!(err, Error::InconsistentGenerators(_)));
    }

    #[test]
    fn inverses_and_lagrange() {
        let g = s3();
        for a in g.elements() {
            assert!(g.mul(a, g.inv(a)).is_identity());
            assert_eq!(6 % g.element_order(a), 0);
            assert!(g.pow(a, g.element_order(a) as u64).is_identity());
        }
    }

    #[test]
    fn matrix_group_closure() {
        let f = Arc::new(Field::new(3, 1).unwrap());
        let x = Matrix::from_codes(3, &[1, 1, 0, 0, 1, 0, 0, 0, 1]).unwrap();
        let y = Matrix::from_codes(3, &[1, 0, 0, 0, 1, 1, 0, 0, 1]).unwrap();
        let g = Group::from_matrices(f, 3, &[x, y], false, DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(g.order(), 27);
        assert_eq!(g.kind(), "matrix");
    }

    #[test]
    fn sequential_and_parallel_sweeps_agree() {
        let g = s3();
        assert_eq!(
            g.element_orders_with(Strategy::Sequential),
            g.element_orders_with(Strategy::Parallel)
        );
    }
}
