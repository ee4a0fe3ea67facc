//! Group actions by automorphisms, for semidirect products.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finite_field::{Field, Matrix};
use crate::group::{ElementIndex, Group};
use crate::order_sequence::{os_of_group, OrderSequence};
use crate::par::{self, Strategy};

/// A homomorphism from `acting` into the automorphisms of `target`,
/// tabulated as one permutation of the target's indices per acting element.
pub struct ActionMap {
    acting: Arc<Group>,
    target: Arc<Group>,
    images: Vec<Box<[u32]>>,
}

impl std::fmt::Debug for ActionMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ActionMap")
            .field("acting_order", &self.acting.order())
            .field("target_order", &self.target.order())
            .field("kernel_size", &self.kernel_size())
            .finish()
    }
}

/// Extends a map defined on the generators of `target` to an automorphism.
/// Fails if the extension is not well defined or not bijective.
pub fn automorphism_from_generator_images(
    target: &Group,
    images: &[ElementIndex],
) -> Result<Vec<u32>> {
    let gens = target.generators();
    if images.len() != gens.len() {
        return Err(Error::InvalidAction(format!(
            "{} generator images for {} generators",
            images.len(),
            gens.len()
        )));
    }
    let n = target.order();
    let mut map = vec![u32::MAX; n];
    map[0] = 0;
    let mut queue = vec![ElementIndex::IDENTITY];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let fx = ElementIndex(map[x.index()]);
        for (g, &img) in gens.iter().zip(images) {
            let y = target.mul(x, *g);
            let fy = target.mul(fx, img);
            let slot = &mut map[y.index()];
            if *slot == u32::MAX {
                *slot = fy.0;
                queue.push(y);
            } else if *slot != fy.0 {
                return Err(Error::InvalidAction(
                    "generator images do not extend to a homomorphism".into(),
                ));
            }
        }
    }
    if map.contains(&u32::MAX) {
        return Err(Error::InvalidAction(
            "generators do not generate the target".into(),
        ));
    }
    let mut seen = vec![false; n];
    for &v in &map {
        if std::mem::replace(&mut seen[v as usize], true) {
            return Err(Error::InvalidAction("map is not bijective".into()));
        }
    }
    Ok(map)
}

fn check_automorphism(target: &Group, perm: &[u32]) -> Result<()> {
    let n = target.order();
    if perm.len() != n || perm[0] != 0 {
        return Err(Error::InvalidAction(
            "image does not fix the identity".into(),
        ));
    }
    let mut seen = vec![false; n];
    for &v in perm {
        if v as usize >= n || std::mem::replace(&mut seen[v as usize], true) {
            return Err(Error::InvalidAction("image is not a permutation".into()));
        }
    }
    // f(x g) = f(x) f(g) on generators g implies f is a homomorphism
    for x in target.elements() {
        for &g in target.generators() {
            let lhs = perm[target.mul(x, g).index()];
            let rhs = target.mul(ElementIndex(perm[x.index()]), ElementIndex(perm[g.index()]));
            if lhs != rhs.0 {
                return Err(Error::InvalidAction("image is not an automorphism".into()));
            }
        }
    }
    Ok(())
}

impl ActionMap {
    /// Builds the action from automorphisms assigned to the acting group's
    /// generators, extending multiplicatively: `a(h·g) = a(h) ∘ a(g)`.
    pub fn from_generator_images(
        acting: Arc<Group>,
        target: Arc<Group>,
        images: Vec<Vec<u32>>,
    ) -> Result<ActionMap> {
        let gens = acting.generators().to_vec();
        if images.len() != gens.len() {
            return Err(Error::InvalidAction(format!(
                "{} images for {} acting generators",
                images.len(),
                gens.len()
            )));
        }
        for img in &images {
            check_automorphism(&target, img)?;
        }
        let n = target.order();
        let identity: Box<[u32]> = (0..n as u32).collect();
        let mut table: Vec<Option<Box<[u32]>>> = vec![None; acting.order()];
        table[0] = Some(identity);
        let mut queue = vec![ElementIndex::IDENTITY];
        let mut head = 0;
        while head < queue.len() {
            let h = queue[head];
            head += 1;
            for (g, img) in gens.iter().zip(&images) {
                let hg = acting.mul(h, *g);
                let composed: Box<[u32]> = {
                    let ah = table[h.index()].as_ref().expect("visited");
                    img.iter().map(|&x| ah[x as usize]).collect()
                };
                match &table[hg.index()] {
                    None => {
                        table[hg.index()] = Some(composed);
                        queue.push(hg);
                    }
                    Some(existing) if *existing != composed => {
                        return Err(Error::InvalidAction(
                            "generator images do not define a homomorphism".into(),
                        ));
                    }
                    Some(_) => {}
                }
            }
        }
        let images = table
            .into_iter()
            .map(|t| {
                t.ok_or_else(|| {
                    Error::InvalidAction("acting generators do not generate the group".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ActionMap {
            acting,
            target,
            images,
        })
    }

    pub fn trivial(acting: Arc<Group>, target: Arc<Group>) -> ActionMap {
        let n = target.order() as u32;
        let images = (0..acting.order()).map(|_| (0..n).collect()).collect();
        ActionMap {
            acting,
            target,
            images,
        }
    }

    pub fn acting(&self) -> &Arc<Group> {
        &self.acting
    }

    pub fn target(&self) -> &Arc<Group> {
        &self.target
    }

    /// `a(h)(x)`.
    pub fn apply(&self, h: ElementIndex, x: ElementIndex) -> ElementIndex {
        ElementIndex(self.images[h.index()][x.index()])
    }

    pub fn image(&self, h: ElementIndex) -> &[u32] {
        &self.images[h.index()]
    }

    /// Number of acting elements that act as the identity.
    pub fn kernel_size(&self) -> usize {
        self.images
            .iter()
            .filter(|img| img.iter().enumerate().all(|(i, &x)| i as u32 == x))
            .count()
    }

    pub fn is_trivial(&self) -> bool {
        self.kernel_size() == self.acting.order()
    }

    /// Re-checks the full homomorphism and automorphism conditions.
    pub fn validate(&self) -> Result<()> {
        for img in &self.images {
            check_automorphism(&self.target, img)?;
        }
        for h1 in self.acting.elements() {
            for &g in self.acting.generators() {
                let lhs = self.image(self.acting.mul(h1, g));
                let a1 = self.image(h1);
                let a2 = self.image(g);
                if lhs.iter().zip(a2).any(|(&l, &x)| l != a1[x as usize]) {
                    return Err(Error::InvalidAction("not a homomorphism".into()));
                }
            }
        }
        Ok(())
    }
}

/// Generators and relators of a finitely presented group. Relator words are
/// lists of signed 1-based generator indices (`-2` is the inverse of the
/// second generator).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationSpec {
    pub generators: usize,
    pub relators: Vec<Vec<i32>>,
}

impl PresentationSpec {
    pub fn new(generators: usize, relators: Vec<Vec<i32>>) -> Result<PresentationSpec> {
        for r in &relators {
            if r.is_empty() {
                return Err(Error::InvalidParameter {
                    name: "presentation",
                    reason: "empty relator".into(),
                });
            }
            if r.iter()
                .any(|&l| l == 0 || l.unsigned_abs() as usize > generators)
            {
                return Err(Error::InvalidParameter {
                    name: "presentation",
                    reason: format!("relator {r:?} uses an unknown generator"),
                });
            }
        }
        Ok(PresentationSpec {
            generators,
            relators,
        })
    }

    /// ⟨a, b | a⁶, b²a⁻³, b⁻¹aba⟩, the dicyclic group of order 12.
    pub fn dicyclic12() -> PresentationSpec {
        PresentationSpec {
            generators: 2,
            relators: vec![vec![1; 6], vec![2, 2, -1, -1, -1], vec![-2, 1, 2, 1]],
        }
    }

    /// ⟨r, s | r⁴, s², s r s⁻¹ r⟩, the dihedral group of order 8.
    pub fn dihedral8() -> PresentationSpec {
        PresentationSpec {
            generators: 2,
            relators: vec![vec![1; 4], vec![2, 2], vec![2, 1, -2, 1]],
        }
    }
}

/// Index of a vector of GF(p)^k in the left-nested product `C_p × … × C_p`
/// (first coordinate most significant).
pub fn vector_index(field: &Field, v: &[crate::finite_field::FieldElement]) -> u32 {
    v.iter().fold(0, |acc, e| acc * field.size() + e.0)
}

pub fn index_vector(
    field: &Field,
    mut idx: u32,
    k: usize,
) -> Vec<crate::finite_field::FieldElement> {
    let q = field.size();
    let mut v = vec![field.zero(); k];
    for slot in v.iter_mut().rev() {
        *slot = field.element(idx % q);
        idx /= q;
    }
    v
}

/// The permutation of `C_p^k` indices induced by `m` acting on column vectors.
pub fn matrix_permutation(field: &Field, m: &Matrix) -> Vec<u32> {
    let k = m.dim;
    let n = (field.size() as usize).pow(k as u32);
    (0..n as u32)
        .map(|i| vector_index(field, &field.mat_vec(m, &index_vector(field, i, k))))
        .collect()
}

fn eval_word(field: &Field, word: &[i32], mats: &[Matrix], invs: &[Matrix]) -> Matrix {
    let dim = mats[0].dim;
    word.iter().fold(field.identity_matrix(dim), |acc, &l| {
        let m = if l > 0 {
            &mats[l as usize - 1]
        } else {
            &invs[(-l) as usize - 1]
        };
        field.mat_mul_unchecked(&acc, m)
    })
}

/// All actions of `acting` on `GF(p)^k` whose generator images in `GL(k, p)`
/// satisfy the presentation, one per distinct (order sequence, kernel size)
/// of the resulting semidirect product, in enumeration order. With an oracle,
/// only actions whose semidirect product has that order sequence are kept.
///
/// Presentation generator `i` is matched with `acting.generators()[i]`;
/// presentation generators beyond the acting group's generator list must
/// act trivially.
pub fn find_action_by_relations(
    spec: &PresentationSpec,
    acting: &Arc<Group>,
    k: usize,
    p: u32,
    oracle: Option<&OrderSequence>,
) -> Result<Vec<Arc<ActionMap>>> {
    if spec.generators == 0 || spec.generators > 2 {
        return Err(Error::InvalidParameter {
            name: "find_action_by_relations",
            reason: "presentation must have 1 or 2 generators".into(),
        });
    }
    if acting.generators().len() > spec.generators {
        return Err(Error::InvalidParameter {
            name: "find_action_by_relations",
            reason: "acting group has more generators than the presentation".into(),
        });
    }
    let field = Arc::new(Field::new(p, 1)?);
    let gl = field.general_linear(k)?;
    if gl.len() > 1_000_000 {
        return Err(Error::InvalidParameter {
            name: "find_action_by_relations",
            reason: "GL too large".into(),
        });
    }
    let invs: Vec<Matrix> = gl
        .iter()
        .map(|m| field.mat_inv(m).expect("invertible"))
        .collect();
    let id = field.identity_matrix(k);
    let ngen = spec.generators;

    // relators in a single generator prune candidates per slot
    let single = |slot: usize, i: usize| -> bool {
        spec.relators
            .iter()
            .filter(|r| r.iter().all(|&l| l.unsigned_abs() as usize == slot + 1))
            .all(|r| {
                let mut mats = vec![id.clone(); ngen];
                let mut is = vec![id.clone(); ngen];
                mats[slot] = gl[i].clone();
                is[slot] = invs[i].clone();
                eval_word(&field, r, &mats, &is) == id
            })
    };
    let candidates: Vec<Vec<usize>> = (0..ngen)
        .map(|slot| {
            if slot >= acting.generators().len() {
                // must act trivially
                vec![gl.iter().position(|m| *m == id).expect("identity in GL")]
            } else {
                (0..gl.len()).filter(|&i| single(slot, i)).collect()
            }
        })
        .collect();

    let tuples: Vec<Vec<usize>> = match ngen {
        1 => candidates[0].iter().map(|&i| vec![i]).collect(),
        _ => candidates[0]
            .iter()
            .flat_map(|&i| candidates[1].iter().map(move |&j| vec![i, j]))
            .collect(),
    };
    let satisfying: Vec<Vec<usize>> = par::map_slice(Strategy::Parallel, &tuples, |t| {
        let mats: Vec<Matrix> = t.iter().map(|&i| gl[i].clone()).collect();
        let is: Vec<Matrix> = t.iter().map(|&i| invs[i].clone()).collect();
        spec.relators
            .iter()
            .all(|r| eval_word(&field, r, &mats, &is) == id)
            .then(|| t.clone())
    })
    .into_iter()
    .flatten()
    .collect();

    let target = Arc::new(crate::constructors::elementary_abelian(p, k as u32)?);
    let nacting = acting.generators().len();
    let built: Vec<Option<(Arc<ActionMap>, OrderSequence)>> =
        par::map_slice(Strategy::Parallel, &satisfying, |t| {
            let images: Vec<Vec<u32>> = t[..nacting]
                .iter()
                .map(|&i| matrix_permutation(&field, &gl[i]))
                .collect();
            let action =
                ActionMap::from_generator_images(acting.clone(), target.clone(), images).ok()?;
            let action = Arc::new(action);
            let product = crate::constructors::semidirect_product(
                target.clone(),
                acting.clone(),
                action.clone(),
            )
            .ok()?;
            let os = os_of_group(&product);
            if oracle.is_some_and(|o| *o != os) {
                return None;
            }
            Some((action, os))
        });

    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (action, os) in built.into_iter().flatten() {
        if seen.insert((os.to_string(), action.kernel_size())) {
            out.push(action);
        }
    }
    if out.is_empty() {
        return Err(Error::NoActionFound(format!(
            "no action into GL({k},{p}) satisfies the presentation{}",
            if oracle.is_some() {
                " and matches the oracle sequence"
            } else {
                ""
            }
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{ORDER_72_SEQUENCE, SD_300_23_SEQUENCE};
    use crate::classify::is_supersolvable;
    use crate::constructors::{
        cyclic, dicyclic, dihedral, semidirect_product, symmetric, wreath_square,
    };

    #[test]
    fn vector_index_round_trip() {
        let f = Field::new(5, 1).unwrap();
        for i in 0..125 {
            assert_eq!(vector_index(&f, &index_vector(&f, i, 3)), i);
        }
    }

    #[test]
    fn presentation_rejects_out_of_range_letters() {
        assert!(PresentationSpec::new(2, vec![vec![3]]).is_err());
        assert!(PresentationSpec::new(2, vec![vec![0]]).is_err());
    }

    #[test]
    fn dic12_action_matches_known_sequence() {
        let oracle = OrderSequence::parse_pairs(SD_300_23_SEQUENCE).unwrap();
        let acting = Arc::new(dicyclic(12).unwrap());
        let found = find_action_by_relations(
            &PresentationSpec::dicyclic12(),
            &acting,
            2,
            5,
            Some(&oracle),
        )
        .unwrap();
        let g = semidirect_product(found[0].target().clone(), acting, found[0].clone()).unwrap();
        assert_eq!(g.order(), 300);
        assert_eq!(os_of_group(&g), oracle);
    }

    #[test]
    fn d8_actions_split_by_supersolvability() {
        let oracle = OrderSequence::parse_pairs(ORDER_72_SEQUENCE).unwrap();
        let wreath = wreath_square(&Arc::new(symmetric(3).unwrap())).unwrap();
        assert_eq!(os_of_group(&wreath), oracle);
        let acting = Arc::new(dihedral(8).unwrap());
        let found =
            find_action_by_relations(&PresentationSpec::dihedral8(), &acting, 2, 3, Some(&oracle))
                .unwrap();
        let verdicts: Vec<(usize, bool)> = found
            .iter()
            .map(|a| {
                let g = Arc::new(
                    semidirect_product(a.target().clone(), acting.clone(), a.clone()).unwrap(),
                );
                (a.kernel_size(), is_supersolvable(&g).unwrap())
            })
            .collect();
        assert!(verdicts.contains(&(1, false)), "{verdicts:?}");
        assert!(verdicts.iter().any(|&(k, s)| k > 1 && s), "{verdicts:?}");
    }

    #[test]
    fn trivial_presentation_on_cyclic_acting_group() {
        // C2 acting on C3 = GF(3)^1: both the trivial action and inversion
        let acting = Arc::new(cyclic(2).unwrap());
        let spec = PresentationSpec::new(1, vec![vec![1, 1]]).unwrap();
        let found = find_action_by_relations(&spec, &acting, 1, 3, None).unwrap();
        assert_eq!(found.len(), 2);
        assert_eq!(found.iter().filter(|a| a.is_trivial()).count(), 1);
    }

    #[test]
    fn trivial_presentation_gives_only_identity_action() {
        let acting = Arc::new(cyclic(1).unwrap());
        let spec = PresentationSpec::new(1, vec![vec![1]]).unwrap();
        let found = find_action_by_relations(&spec, &acting, 2, 3, None).unwrap();
        assert_eq!(found.len(), 1);
        assert!(found[0].is_trivial());
    }
}
