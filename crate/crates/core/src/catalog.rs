//! Named composite groups. Names are stable strings used on the command line.
//!
//! Parametrized entries take a prime `p`. The semidirect products
//! `C5^2:Dic12` and `C3^2:D8` use actions found by
//! [`find_action_by_relations`] and matched against known order sequences;
//! for `C3^2:D8` the match whose action has a nontrivial kernel is taken,
//! since the faithful match is the wreath product `S3^2:C2` itself.
//!
//! Not provided: the order-224 groups written `C2^4:D14` and
//! `C2^2x(C7:D8)`, whose actions are not pinned down by a known sequence.
//! They can be explored by hand with [`crate::constructors::semidirect_product`].

use std::sync::{Arc, OnceLock};

use crate::action::{find_action_by_relations, ActionMap, PresentationSpec};
use crate::arith::is_prime;
use crate::constructors::*;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::order_sequence::OrderSequence;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub parametrized: bool,
    /// Prime used when the entry is instantiated without one.
    pub default_prime: Option<u32>,
    pub structure: &'static str,
}

const fn fixed(
    name: &'static str,
    aliases: &'static [&'static str],
    structure: &'static str,
) -> CatalogEntry {
    CatalogEntry {
        name,
        aliases,
        parametrized: false,
        default_prime: None,
        structure,
    }
}

const fn with_p(name: &'static str, default: u32, structure: &'static str) -> CatalogEntry {
    CatalogEntry {
        name,
        aliases: &[],
        parametrized: true,
        default_prime: Some(default),
        structure,
    }
}

pub const ENTRIES: &[CatalogEntry] = &[
    fixed("C5xA5", &[], "C5 × A5"),
    fixed("C7xA5", &[], "C7 × A5"),
    fixed("C13xA5", &[], "C13 × A5"),
    fixed("C15xA5", &[], "C15 × A5"),
    with_p("C5pxA5", 7, "C_{5p} × A5, built as C_p × (C5 × A5)"),
    fixed("C5^2:Dic12", &["SD_300_23"], "C5² ⋊ Dic12"),
    with_p("CpxC5^2:Dic12", 7, "C_p × (C5² ⋊ Dic12)"),
    fixed("C4xF8", &[], "C4 × F8"),
    fixed("C2^2xF8", &[], "C2² × F8"),
    fixed("C2^4xD14", &[], "C2⁴ × D14"),
    fixed("D10xF7", &[], "D10 × F7"),
    fixed("C35xA4", &[], "C35 × A4"),
    fixed("C5xC7:A4", &[], "C5 × (C7 ⋊ A4)"),
    fixed("S3^2:C2", &["S3wrC2"], "S3² ⋊ C2 (wreath product S3 ≀ C2)"),
    fixed("C3^2:D8", &[], "C3² ⋊ D8, supersolvable"),
    with_p("CpxS3^2:C2", 5, "C_p × (S3² ⋊ C2)"),
    with_p("CpxC3^2:D8", 5, "C_p × (C3² ⋊ D8)"),
    with_p("CpxA4", 11, "C_p × A4"),
    with_p("S3xD2p", 11, "S3 × D_{2p}"),
    fixed("C3^2xSz8", &[], "C3² × Sz(8) (requires the sz8 feature)"),
];

/// Sequence of SmallGroup(300, 23), used to select the Dic12 action.
pub const SD_300_23_SEQUENCE: &str = "(1,1)(2,25)(3,50)(4,150)(5,24)(6,50)";
/// Common sequence of the order-72 pair, used to select the D8 action.
pub const ORDER_72_SEQUENCE: &str = "(1,1)(2,21)(3,8)(4,18)(6,24)";

pub fn lookup(name: &str) -> Option<&'static CatalogEntry> {
    ENTRIES
        .iter()
        .find(|e| e.name == name || e.aliases.contains(&name))
}

fn arc(g: Result<Group>) -> Result<Arc<Group>> {
    g.map(Arc::new)
}

fn times(a: Result<Arc<Group>>, b: Result<Arc<Group>>) -> Result<Arc<Group>> {
    arc(direct_product(&a?, &b?))
}

fn shared(
    cell: &'static OnceLock<Result<Arc<Group>>>,
    build: impl FnOnce() -> Result<Arc<Group>>,
) -> Result<Arc<Group>> {
    cell.get_or_init(build).clone()
}

/// `C5² ⋊ Dic12` with the first action matching the SmallGroup(300,23) sequence.
pub fn c5sq_dic12() -> Result<Arc<Group>> {
    static CELL: OnceLock<Result<Arc<Group>>> = OnceLock::new();
    shared(&CELL, || {
        let oracle = OrderSequence::parse_pairs(SD_300_23_SEQUENCE)?;
        let acting = arc(dicyclic(12))?;
        let actions = find_action_by_relations(
            &PresentationSpec::dicyclic12(),
            &acting,
            2,
            5,
            Some(&oracle),
        )?;
        let action = actions[0].clone();
        arc(semidirect_product(action.target().clone(), acting, action))
    })
}

/// `C3² ⋊ D8` with an action matching the order-72 sequence and a
/// nontrivial kernel.
pub fn c3sq_d8() -> Result<Arc<Group>> {
    static CELL: OnceLock<Result<Arc<Group>>> = OnceLock::new();
    shared(&CELL, || {
        let oracle = OrderSequence::parse_pairs(ORDER_72_SEQUENCE)?;
        let acting = arc(dihedral(8))?;
        let actions =
            find_action_by_relations(&PresentationSpec::dihedral8(), &acting, 2, 3, Some(&oracle))?;
        let action = actions
            .into_iter()
            .find(|a| a.kernel_size() > 1)
            .ok_or_else(|| {
                Error::NoActionFound(
                    "no non-faithful D8 action matches the order-72 sequence".into(),
                )
            })?;
        arc(semidirect_product(action.target().clone(), acting, action))
    })
}

/// `S3 ≀ C2`.
pub fn s3_wreath_c2() -> Result<Arc<Group>> {
    static CELL: OnceLock<Result<Arc<Group>>> = OnceLock::new();
    shared(&CELL, || arc(wreath_square(&Arc::new(symmetric(3)?))))
}

pub fn c5_times_a5() -> Result<Arc<Group>> {
    static CELL: OnceLock<Result<Arc<Group>>> = OnceLock::new();
    shared(&CELL, || times(arc(cyclic(5)), arc(alternating(5))))
}

/// `C7 ⋊ A4`, with A4 acting on C7 through its C3 quotient.
pub fn c7_by_a4() -> Result<Arc<Group>> {
    let n = arc(cyclic(7))?;
    let h = arc(alternating(4))?;
    // 2 has order 3 modulo 7
    let units = [1u32, 2, 4];
    for &u1 in &units {
        for &u2 in &units {
            if u1 == 1 && u2 == 1 {
                continue;
            }
            let images = vec![cyclic_automorphism(7, u1)?, cyclic_automorphism(7, u2)?];
            if let Ok(action) = ActionMap::from_generator_images(h.clone(), n.clone(), images) {
                return arc(semidirect_product(n, h, Arc::new(action)));
            }
        }
    }
    Err(Error::NoActionFound(
        "A4 has no action of order 3 on C7".into(),
    ))
}

fn require_prime(name: &str, p: Option<u32>) -> Result<u32> {
    match p {
        Some(p) if is_prime(p as u64) => Ok(p),
        Some(p) => Err(Error::NotPrime(p as u64)),
        None => Err(Error::InvalidParameter {
            name: "catalog",
            reason: format!("`{name}` needs a prime argument"),
        }),
    }
}

/// Builds a catalog group. Parametrized names require `prime`; fixed names
/// reject it.
pub fn catalog(name: &str, prime: Option<u32>) -> Result<Arc<Group>> {
    let entry = lookup(name).ok_or_else(|| Error::UnknownCatalogName(name.to_string()))?;
    if !entry.parametrized && prime.is_some() {
        return Err(Error::InvalidParameter {
            name: "catalog",
            reason: format!("`{}` takes no parameter", entry.name),
        });
    }
    let cp = |p: u32| arc(cyclic(p));
    match entry.name {
        "C5xA5" => c5_times_a5(),
        "C7xA5" => times(cp(7), arc(alternating(5))),
        "C13xA5" => times(cp(13), arc(alternating(5))),
        "C15xA5" => times(cp(15), arc(alternating(5))),
        "C5pxA5" => times(cp(require_prime(name, prime)?), c5_times_a5()),
        "C5^2:Dic12" => c5sq_dic12(),
        "CpxC5^2:Dic12" => times(cp(require_prime(name, prime)?), c5sq_dic12()),
        "C4xF8" => times(cp(4), arc(frobenius56())),
        "C2^2xF8" => times(arc(cyclic_power(2, 2)), arc(frobenius56())),
        "C2^4xD14" => times(arc(cyclic_power(2, 4)), arc(dihedral(14))),
        "D10xF7" => times(arc(dihedral(10)), arc(frobenius42())),
        "C35xA4" => times(cp(35), arc(alternating(4))),
        "C5xC7:A4" => times(cp(5), c7_by_a4()),
        "S3^2:C2" => s3_wreath_c2(),
        "C3^2:D8" => c3sq_d8(),
        "CpxS3^2:C2" => times(cp(require_prime(name, prime)?), s3_wreath_c2()),
        "CpxC3^2:D8" => times(cp(require_prime(name, prime)?), c3sq_d8()),
        "CpxA4" => times(cp(require_prime(name, prime)?), arc(alternating(4))),
        "S3xD2p" => {
            let p = require_prime(name, prime)?;
            times(arc(symmetric(3)), arc(dihedral(2 * p)))
        }
        "C3^2xSz8" => times(arc(cyclic_power(3, 2)), arc(suzuki8())),
        other => Err(Error::UnknownCatalogName(other.to_string())),
    }
}

/// Every catalog entry instantiated (parametrized ones at their default
/// prime), skipping entries that need a disabled feature.
pub fn samples() -> Result<Vec<(String, Arc<Group>)>> {
    let mut out = Vec::new();
    for e in ENTRIES {
        if e.name == "C3^2xSz8" && !cfg!(feature = "sz8") {
            continue;
        }
        let label = match e.default_prime {
            Some(p) => format!("{}[p={p}]", e.name),
            None => e.name.to_string(),
        };
        out.push((label, catalog(e.name, e.default_prime)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order_sequence::os_of_group;

    #[test]
    fn names_resolve() {
        assert_eq!(lookup("SD_300_23").unwrap().name, "C5^2:Dic12");
        assert!(lookup("nope").is_none());
        assert!(matches!(
            catalog("nope", None),
            Err(Error::UnknownCatalogName(_))
        ));
        assert!(catalog("CpxA4", None).is_err());
        assert!(catalog("CpxA4", Some(9)).is_err());
        assert!(catalog("C5xA5", Some(7)).is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(catalog("C15xA5", None).unwrap().order(), 900);
        assert_eq!(catalog("C5xC7:A4", None).unwrap().order(), 420);
        assert_eq!(catalog("S3xD2p", Some(11)).unwrap().order(), 132);
        assert_eq!(catalog("C2^4xD14", None).unwrap().order(), 224);
    }

    #[test]
    fn cpxa4_closed_form_at_11() {
        let g = catalog("CpxA4", Some(11)).unwrap();
        assert_eq!(
            os_of_group(&g),
            OrderSequence::parse_pairs("(1,1)(2,3)(3,8)(11,10)(22,30)(33,80)").unwrap()
        );
    }
}
