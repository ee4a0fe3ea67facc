//! Standard families of groups and product constructions.
//!
//! Naming follows the order-subscript convention: `dihedral(12)` and
//! `dicyclic(12)` both have 12 elements.

use std::sync::Arc;

use crate::action::{matrix_permutation, ActionMap};
use crate::arith::{gcd, prime_power};
use crate::error::{Error, Result};
use crate::finite_field::{Field, Matrix, ProjectiveLine};
use crate::group::{perm_from_cycles, Group, DEFAULT_CLOSURE_CAP};

fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}

pub fn cyclic(n: u32) -> Result<Group> {
    Group::cyclic(n)
}

/// `C_n^k` as the left-nested product `((C_n × C_n) × …)`.
pub fn cyclic_power(n: u32, k: u32) -> Result<Group> {
    if k <= 1 {
        return cyclic(if k == 0 { 1 } else { n });
    }
    let base = Arc::new(cyclic(n)?);
    let mut acc = direct_product(&base, &base)?;
    for _ in 2..k {
        acc = direct_product(&Arc::new(acc), &base)?;
    }
    Ok(acc)
}

/// The additive group of `GF(p)^k`, indexed as in [`crate::action::vector_index`].
pub fn elementary_abelian(p: u32, k: u32) -> Result<Group> {
    if !crate::arith::is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    cyclic_power(p, k)
}

/// Multiplication by the unit `u` on `Z/n`.
pub fn cyclic_automorphism(n: u32, u: u32) -> Result<Vec<u32>> {
    if gcd(u as u64, n as u64) != 1 {
        return Err(Error::InvalidAction(format!(
            "{u} is not a unit modulo {n}"
        )));
    }
    Ok((0..n)
        .map(|x| (x as u64 * u as u64 % n as u64) as u32)
        .collect())
}

/// Dihedral group with `n` elements, as `C_{n/2} ⋊ C_2` with inversion.
pub fn dihedral(n: u32) -> Result<Group> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(invalid(
            "dihedral",
            format!("order {n} must be even and ≥ 4"),
        ));
    }
    let m = n / 2;
    let rot = Arc::new(cyclic(m)?);
    let flip = Arc::new(cyclic(2)?);
    let action = ActionMap::from_generator_images(
        flip.clone(),
        rot.clone(),
        vec![cyclic_automorphism(m, m - 1)?],
    )?;
    semidirect_product(rot, flip, Arc::new(action))
}

/// Dicyclic group with `n = 4m` elements, `⟨a, b | a^{2m}, b² = a^m, b⁻¹ab = a⁻¹⟩`,
/// via its right regular representation. Generators are `a`, `b` in that order.
pub fn dicyclic(n: u32) -> Result<Group> {
    if n < 4 || !n.is_multiple_of(4) {
        return Err(invalid(
            "dicyclic",
            format!("order {n} must be a positive multiple of 4"),
        ));
    }
    let m = n / 4;
    let two_m = 2 * m;
    // element a^i b^j has index i + 2m·j
    let idx = |i: u32, j: u32| (i % two_m + two_m * j) as u16;
    let mut right_a = vec![0u16; n as usize];
    let mut right_b = vec![0u16; n as usize];
    for j in 0..2 {
        for i in 0..two_m {
            let e = idx(i, j) as usize;
            right_a[e] = if j == 0 {
                idx(i + 1, 0)
            } else {
                idx(i + two_m - 1, 1)
            };
            right_b[e] = if j == 0 { idx(i, 1) } else { idx(i + m, 0) };
        }
    }
    Group::from_permutations(n as usize, &[right_a, right_b], DEFAULT_CLOSURE_CAP)
}

pub fn symmetric(k: u16) -> Result<Group> {
    if k == 0 {
        return Err(invalid("symmetric", "degree must be ≥ 1"));
    }
    let degree = k as usize;
    let mut gens = Vec::new();
    if k >= 2 {
        gens.push(perm_from_cycles(degree, &[&[1, 2]]));
    }
    if k >= 3 {
        let cycle: Vec<u16> = (1..=k).collect();
        gens.push(perm_from_cycles(degree, &[&cycle]));
    }
    Group::from_permutations(degree, &gens, DEFAULT_CLOSURE_CAP)
}

/// Generated by the 3-cycles `(1 2 i)` for `i = 3..=k`.
pub fn alternating(k: u16) -> Result<Group> {
    if k == 0 {
        return Err(invalid("alternating", "degree must be ≥ 1"));
    }
    let degree = k as usize;
    let gens: Vec<Vec<u16>> = (3..=k)
        .map(|i| perm_from_cycles(degree, &[&[1, 2, i]]))
        .collect();
    Group::from_permutations(degree, &gens, DEFAULT_CLOSURE_CAP)
}

/// The Heisenberg group of order `p³`: 3×3 upper unitriangular matrices
/// over GF(p), generated by `x = I + E₁₂` and `y = I + E₂₃` (so that
/// `[x, y] = I + E₁₃` is central).
pub fn heisenberg(p: u32) -> Result<Group> {
    if p == 2 || !crate::arith::is_prime(p as u64) {
        return Err(invalid("heisenberg", format!("{p} is not an odd prime")));
    }
    let field = Arc::new(Field::new(p, 1)?);
    let x = Matrix::from_codes(3, &[1, 1, 0, 0, 1, 0, 0, 0, 1])?;
    let y = Matrix::from_codes(3, &[1, 0, 0, 0, 1, 1, 0, 0, 1])?;
    Group::from_matrices(field, 3, &[x, y], false, DEFAULT_CLOSURE_CAP)
}

/// `C7 ⋊ C6` with `C6` acting as the full automorphism group of `C7`.
pub fn frobenius42() -> Result<Group> {
    let n = Arc::new(cyclic(7)?);
    let h = Arc::new(cyclic(6)?);
    // 3 is a primitive root mod 7
    let action =
        ActionMap::from_generator_images(h.clone(), n.clone(), vec![cyclic_automorphism(7, 3)?])?;
    semidirect_product(n, h, Arc::new(action))
}

/// `C2³ ⋊ C7`, with `C7` acting through the companion matrix of `x³+x+1`.
pub fn frobenius56() -> Result<Group> {
    let field = Field::new(2, 1)?;
    let n = Arc::new(elementary_abelian(2, 3)?);
    let h = Arc::new(cyclic(7)?);
    let companion = Matrix::from_codes(3, &[0, 0, 1, 1, 0, 1, 0, 1, 0])?;
    let image = matrix_permutation(&field, &companion);
    let action = ActionMap::from_generator_images(h.clone(), n.clone(), vec![image])?;
    semidirect_product(n, h, Arc::new(action))
}

pub fn direct_product(g: &Arc<Group>, h: &Arc<Group>) -> Result<Group> {
    Group::product(g.clone(), h.clone(), None, DEFAULT_CLOSURE_CAP)
}

/// `N ⋊ H` with `(x₁,h₁)(x₂,h₂) = (x₁·a(h₁)(x₂), h₁h₂)`. The action is
/// re-validated before use.
pub fn semidirect_product(n: Arc<Group>, h: Arc<Group>, action: Arc<ActionMap>) -> Result<Group> {
    if !Arc::ptr_eq(action.target(), &n) || !Arc::ptr_eq(action.acting(), &h) {
        return Err(Error::InvalidAction(
            "action is defined for different groups".into(),
        ));
    }
    action.validate()?;
    if action.is_trivial() {
        return Group::product(n, h, None, DEFAULT_CLOSURE_CAP);
    }
    Group::product(n, h, Some(action), DEFAULT_CLOSURE_CAP)
}

/// `(G × G) ⋊ C2` with the generator of `C2` swapping coordinates.
pub fn wreath_square(g: &Arc<Group>) -> Result<Group> {
    let n = g.order();
    if n.checked_mul(n)
        .and_then(|x| x.checked_mul(2))
        .is_none_or(|x| x > DEFAULT_CLOSURE_CAP)
    {
        return Err(Error::ClosureCapExceeded {
            cap: DEFAULT_CLOSURE_CAP,
        });
    }
    let base = Arc::new(direct_product(g, g)?);
    let top = Arc::new(cyclic(2)?);
    let swap: Vec<u32> = (0..(n * n) as u32)
        .map(|i| {
            let (a, b) = (i / n as u32, i % n as u32);
            b * n as u32 + a
        })
        .collect();
    let action = ActionMap::from_generator_images(top.clone(), base.clone(), vec![swap])?;
    semidirect_product(base, top, Arc::new(action))
}

/// `PSL(2, q)` as a permutation group on the `q + 1` points of the
/// projective line, generated by the images of
/// `[[1,1],[0,1]]`, `[[1,0],[1,1]]`, `[[1,ω],[0,1]]` and `diag(ω, ω⁻¹)`.
pub fn psl2(q: u32) -> Result<Group> {
    if !(2..=64).contains(&q) || prime_power(q as u64).is_none() {
        return Err(invalid(
            "psl2",
            format!("q = {q} must be a prime power in 2..=64"),
        ));
    }
    let field = Field::with_order(q)?;
    let line = ProjectiveLine::new(&field);
    let w = field.primitive();
    let winv = field.inv(w)?;
    let (zero, one) = (field.zero(), field.one());
    let mats = [
        Matrix {
            dim: 2,
            entries: vec![one, one, zero, one],
        },
        Matrix {
            dim: 2,
            entries: vec![one, zero, one, one],
        },
        Matrix {
            dim: 2,
            entries: vec![one, w, zero, one],
        },
        Matrix {
            dim: 2,
            entries: vec![w, zero, zero, winv],
        },
    ];
    let gens = mats
        .iter()
        .map(|m| line.permutation(m))
        .collect::<Result<Vec<_>>>()?;
    Group::from_permutations(line.len(), &gens, DEFAULT_CLOSURE_CAP)
}

/// `|PSL(2, q)| = q(q² − 1) / gcd(2, q − 1)`.
pub fn psl2_order(q: u64) -> u64 {
    q * (q * q - 1) / gcd(2, q - 1)
}

/// The Suzuki group `Sz(8)` as 4×4 matrices over GF(8), generated by the
/// unipotent elements `S(1,0)`, `S(0,1)`, `S(ω,0)`, the torus element
/// `M(ω)` and the antidiagonal involution, with twist `θ(x) = x⁴`.
#[cfg(feature = "sz8")]
pub fn suzuki8() -> Result<Group> {
    let field = Arc::new(Field::new(2, 3)?);
    let f = &field;
    let theta = |x| f.pow(x, 4);
    let unipotent = |a, b| {
        let z = f.zero();
        let o = f.one();
        // row-vector convention: rows are images of basis vectors
        let r40 = f.add(f.add(f.mul(f.pow(a, 2), theta(a)), f.mul(a, b)), theta(b));
        let r41 = f.add(f.mul(a, theta(a)), b);
        Matrix {
            dim: 4,
            entries: vec![o, z, z, z, a, o, z, z, b, theta(a), o, z, r40, r41, a, o],
        }
    };
    let w = f.primitive();
    let torus = {
        let z = f.zero();
        let l = |e: i64| f.pow_signed(w, e);
        Matrix {
            dim: 4,
            entries: vec![l(3), z, z, z, z, l(2), z, z, z, z, l(-2), z, z, z, z, l(-3)],
        }
    };
    let flip = {
        let (z, o) = (f.zero(), f.one());
        Matrix {
            dim: 4,
            entries: vec![z, z, z, o, z, z, o, z, z, o, z, z, o, z, z, z],
        }
    };
    let gens = [
        unipotent(f.one(), f.zero()),
        unipotent(f.zero(), f.one()),
        unipotent(w, f.zero()),
        torus,
        flip,
    ];
    Group::from_matrices(field.clone(), 4, &gens, false, DEFAULT_CLOSURE_CAP)
}

#[cfg(not(feature = "sz8"))]
pub fn suzuki8() -> Result<Group> {
    Err(Error::FeatureDisabled("sz8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order_sequence::{os_of_group, OrderSequence};
    use crate::subgroup::derived_subgroup;

    fn seq(pairs: &[(u64, u64)]) -> OrderSequence {
        OrderSequence::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn advertised_orders() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(cyclic_power(5, 2).unwrap().order(), 25);
        assert_eq!(dihedral(4).unwrap().order(), 4);
        assert_eq!(dihedral(14).unwrap().order(), 14);
        assert_eq!(dicyclic(12).unwrap().order(), 12);
        assert_eq!(dicyclic(8).unwrap().order(), 8);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(alternating(3).unwrap().order(), 3);
        assert_eq!(heisenberg(5).unwrap().order(), 125);
        assert_eq!(frobenius42().unwrap().order(), 42);
        assert_eq!(frobenius56().unwrap().order(), 56);
    }

    #[test]
    fn invalid_parameters() {
        assert!(dihedral(6).is_ok());
        assert!(dihedral(7).is_err());
        assert!(dihedral(2).is_err());
        assert!(dicyclic(10).is_err());
        assert!(heisenberg(2).is_err());
        assert!(heisenberg(9).is_err());
        assert!(psl2(6).is_err());
        assert!(psl2(81).is_err());
        assert!(cyclic(0).is_err());
    }

    #[test]
    fn d12_sequence() {
        let d12 = dihedral(12).unwrap();
        assert_eq!(os_of_group(&d12), seq(&[(1, 1), (2, 7), (3, 2), (6, 2)]));
    }

    #[test]
    fn dic12_sequence_matches_brute_force() {
        // brute force on normal forms a^i b^j with a^6 = 1, b^2 = a^3, b a = a^-1 b
        let mul = |(i1, j1): (u32, u32), (i2, j2): (u32, u32)| -> (u32, u32) {
            match (j1, j2) {
                (0, j) => ((i1 + i2) % 6, j),
                (_, 0) => ((i1 + 6 - i2) % 6, 1),
                _ => ((i1 + 6 - i2 + 3) % 6, 0),
            }
        };
        let orders = (0..2).flat_map(|j| (0..6).map(move |i| (i, j))).map(|x| {
            let mut y = x;
            let mut k = 1;
            while y != (0, 0) {
                y = mul(y, x);
                k += 1;
            }
            k as u64
        });
        let brute = OrderSequence::from_orders(orders);
        assert_eq!(brute, seq(&[(1, 1), (2, 1), (3, 2), (4, 6), (6, 2)]));
        assert_eq!(os_of_group(&dicyclic(12).unwrap()), brute);
    }

    #[test]
    fn heisenberg_has_exponent_p() {
        for p in [3, 5, 7] {
            let he = heisenberg(p).unwrap();
            assert!(he.elements().skip(1).all(|x| he.element_order(x) == p));
            assert_eq!(os_of_group(&he), os_of_group(&cyclic_power(p, 3).unwrap()));
        }
    }

    #[test]
    fn trivial_action_matches_direct_product() {
        let n = Arc::new(cyclic(5).unwrap());
        let h = Arc::new(symmetric(3).unwrap());
        let semi = semidirect_product(
            n.clone(),
            h.clone(),
            Arc::new(ActionMap::trivial(h.clone(), n.clone())),
        )
        .unwrap();
        assert_eq!(
            os_of_group(&semi),
            os_of_group(&direct_product(&n, &h).unwrap())
        );
    }

    #[test]
    fn invalid_action_rejected() {
        let n = Arc::new(cyclic(7).unwrap());
        let h = Arc::new(cyclic(6).unwrap());
        // x -> x + 1 does not fix the identity
        let shift: Vec<u32> = (0..7).map(|x| (x + 1) % 7).collect();
        assert!(ActionMap::from_generator_images(h.clone(), n.clone(), vec![shift]).is_err());
        // multiplication by 2 has order 3, which is not compatible with a generator of order 6? it is:
        // 2^6 = 1, so this is a valid (non-faithful) action
        let ok = ActionMap::from_generator_images(
            h.clone(),
            n.clone(),
            vec![cyclic_automorphism(7, 2).unwrap()],
        );
        assert!(ok.is_ok());
        // C4 cannot act on C7 through an element of order 3
        let c4 = Arc::new(cyclic(4).unwrap());
        assert!(
            ActionMap::from_generator_images(c4, n, vec![cyclic_automorphism(7, 2).unwrap()])
                .is_err()
        );
    }

    #[test]
    fn wreath_square_small() {
        let c2 = Arc::new(cyclic(2).unwrap());
        let w = wreath_square(&c2).unwrap();
        assert_eq!(w.order(), 8);
        assert_eq!(w.element_orders().iter().filter(|&&o| o == 2).count(), 5);
        let s3 = Arc::new(symmetric(3).unwrap());
        assert_eq!(wreath_square(&s3).unwrap().order(), 72);
    }

    #[test]
    fn psl2_orders_and_perfection() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let g = psl2(q).unwrap();
            assert_eq!(g.order() as u64, psl2_order(q as u64), "q = {q}");
            if q >= 4 {
                assert_eq!(derived_subgroup(&g).unwrap().len(), g.order(), "q = {q}");
            }
        }
        let a5 = alternating(5).unwrap();
        assert_eq!(os_of_group(&psl2(5).unwrap()), os_of_group(&a5));
    }

    #[test]
    fn psl2_matches_projective_matrix_group() {
        // independent route: SL(2, q) modulo scalars as normalized matrices
        for q in [5u32, 7, 9] {
            let field = Arc::new(Field::with_order(q).unwrap());
            let (z, o, w) = (field.zero(), field.one(), field.primitive());
            let gens = [
                Matrix {
                    dim: 2,
                    entries: vec![o, o, z, o],
                },
                Matrix {
                    dim: 2,
                    entries: vec![o, z, o, o],
                },
                Matrix {
                    dim: 2,
                    entries: vec![w, z, z, field.inv(w).unwrap()],
                },
            ];
            let proj = Group::from_matrices(field, 2, &gens, true, DEFAULT_CLOSURE_CAP).unwrap();
            assert_eq!(
                os_of_group(&proj),
                os_of_group(&psl2(q).unwrap()),
                "q = {q}"
            );
        }
    }

    #[test]
    fn frobenius_sequences() {
        assert_eq!(
            os_of_group(&frobenius42().unwrap()),
            seq(&[(1, 1), (2, 7), (3, 14), (6, 14), (7, 6)])
        );
        assert_eq!(
            os_of_group(&frobenius56().unwrap()),
            seq(&[(1, 1), (2, 7), (7, 48)])
        );
    }
}
