//! Named crossed modules, presentation fixtures and the seeded random
//! generator.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, ObjId};
use crate::groupkit::{library, Elem, FinGroup, GroupHom, GroupPresentation, Word};
use crate::grpcolim::PresentedMap;
use crate::xmod::{conjugation_module, conjugation_module_delooping, isotropy_module, CrossedModule, GroupCategory};

/// Names accepted by [`by_name`], in listing order.
pub const NAMES: &[&str] = &[
    "trivial-point",
    "bz2-conj",
    "bs3-conj",
    "groups-1-z2-s3",
    "poset-01",
    "poset-square",
    "ab-negation",
    "arrow-z2",
    "bz2-plus-initial",
    "elementary-abelian-2",
    "poset-meet-discontinuous",
    "isotropy-arrow-z2",
];

pub fn by_name(name: &str) -> Result<CrossedModule> {
    match name {
        "trivial-point" => Ok(CrossedModule::trivial(FinCategory::terminal())),
        "bz2-conj" => Ok(conjugation_module_delooping(&library::cyclic(2))),
        "bs3-conj" => Ok(conjugation_module_delooping(&library::s3())),
        "groups-1-z2-s3" => groups_1_z2_s3(),
        "poset-01" => Ok(CrossedModule::trivial(FinCategory::walking_arrow())),
        "poset-square" => Ok(CrossedModule::trivial(square())),
        "ab-negation" => ab_negation(),
        "arrow-z2" => Ok(arrow_z2()),
        "bz2-plus-initial" => Ok(bz2_plus_initial()),
        "elementary-abelian-2" => elementary_abelian_2(),
        "poset-meet-discontinuous" => Ok(poset_meet_discontinuous()),
        "isotropy-arrow-z2" => isotropy_module(&arrow_base(), Budget::DEFAULT),
        _ => Err(Error::Schema(format!("unknown fixture {name:?}"))),
    }
}

/// Every named fixture, in [`NAMES`] order.
pub fn named() -> Vec<(&'static str, CrossedModule)> {
    NAMES.iter().map(|&n| (n, by_name(n).expect("named fixture builds"))).collect()
}

/// `0 < 1, 0 < 2, 1 < 3, 2 < 3`.
pub fn square() -> FinCategory {
    FinCategory::poset(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])
}

/// The full subcategory of groups on `1, ℤ₂, S₃` with its conjugation module.
pub fn groups_1_z2_s3() -> Result<CrossedModule> {
    let gc = GroupCategory::full_subcategory(
        vec![("1".into(), library::trivial()), ("Z2".into(), library::cyclic(2)), ("S3".into(), library::s3())],
        Budget::DEFAULT,
    )?;
    conjugation_module(&gc)
}

/// Abelian groups `0, ℤ₂, ℤ₃, ℤ₄` with `G` constant at `ℤ₂`, the generator
/// acting by negation.
pub fn ab_negation() -> Result<CrossedModule> {
    let gc = GroupCategory::full_subcategory(
        vec![
            ("0".into(), library::trivial()),
            ("Z2".into(), library::cyclic(2)),
            ("Z3".into(), library::cyclic(3)),
            ("Z4".into(), library::cyclic(4)),
        ],
        Budget::DEFAULT,
    )?;
    let c = gc.category.clone();
    let z2 = library::cyclic(2);
    let gamma = c
        .objects()
        .map(|a| {
            let g = &gc.groups[a];
            let neg = GroupHom::new(g.elements().map(|x| g.inv(x)).collect());
            vec![c.id(a), gc.morphism_with_map(a, a, &neg).expect("negation is a morphism")]
        })
        .collect();
    CrossedModule::new(
        c.clone(),
        vec![z2.clone(); c.object_count()],
        c.morphisms().map(|_| GroupHom::identity(&z2)).collect(),
        gamma,
    )
}

/// `[0 < 1] × Bℤ₂`.
pub fn arrow_base() -> FinCategory {
    FinCategory::product(&FinCategory::walking_arrow(), &FinCategory::delooping(&library::cyclic(2)))
}

/// `G` constant at `ℤ₂` on `[0 < 1] × Bℤ₂`, with `γ_p(s) = (1_p, s)`.
pub fn arrow_z2() -> CrossedModule {
    let c = arrow_base();
    let z2 = library::cyclic(2);
    let gamma = c.objects().map(|p| vec![c.id(p), c.id(p) + 1]).collect();
    CrossedModule::new(
        c.clone(),
        vec![z2.clone(); 2],
        c.morphisms().map(|_| GroupHom::identity(&z2)).collect(),
        gamma,
    )
    .expect("arrow fixture")
}

/// `Bℤ₂` with an initial object adjoined, `G(0) = 1`.
pub fn bz2_plus_initial() -> CrossedModule {
    let z2 = library::cyclic(2);
    let c = FinCategory::with_initial(&FinCategory::delooping(&z2));
    let actions = c
        .morphisms()
        .map(|f| match f {
            0 => GroupHom::identity(&library::trivial()),
            1 => GroupHom::trivial(&library::trivial()),
            _ => GroupHom::identity(&z2),
        })
        .collect();
    CrossedModule::new(c, vec![library::trivial(), z2], actions, vec![vec![0], vec![2, 3]]).expect("adjoined initial")
}

/// `1, ℤ₂, V₄` with `G` the inclusion into groups and `γ` trivial.
pub fn elementary_abelian_2() -> Result<CrossedModule> {
    let gc = GroupCategory::full_subcategory(
        vec![("1".into(), library::trivial()), ("Z2".into(), library::cyclic(2)), ("V4".into(), library::klein())],
        Budget::DEFAULT,
    )?;
    let c = &gc.category;
    let gamma = c.objects().map(|a| vec![c.id(a); gc.groups[a].order()]).collect();
    CrossedModule::new(c.clone(), gc.groups.clone(), gc.maps.clone(), gamma)
}

/// The span `1 > 0 < 2` with `G = (1, ℤ₂, 1)`: the product of `1` and `2`
/// is `0`, but `G` does not preserve it.
pub fn poset_meet_discontinuous() -> CrossedModule {
    let c = FinCategory::span();
    let groups = vec![library::trivial(), library::cyclic(2), library::trivial()];
    let actions = c
        .morphisms()
        .map(|f| if c.dom(f) == c.cod(f) { GroupHom::identity(&groups[c.dom(f)]) } else { GroupHom::trivial(&groups[c.dom(f)]) })
        .collect();
    let gamma = c.objects().map(|a| vec![c.id(a); groups[a].order()]).collect();
    CrossedModule::new(c, groups, actions, gamma).expect("span fixture")
}

/// The three single-field mutations, each with the axiom it breaks.
pub fn mutations() -> Vec<(&'static str, CrossedModule, &'static str)> {
    let mut gamma = conjugation_module_delooping(&library::s3());
    gamma.gamma = vec![vec![0; 6]];
    let mut functoriality = conjugation_module_delooping(&library::s3());
    functoriality.actions[1] = GroupHom::identity(&library::s3());
    let mut equivariance = arrow_z2();
    equivariance.gamma[1] = vec![equivariance.base.id(1); 2];
    vec![
        ("bs3-gamma-constant", gamma, "peiffer"),
        ("bs3-action-broken", functoriality, "G-composition"),
        ("arrow-z2-gamma-dropped", equivariance, "equivariance"),
    ]
}

/// Parallel maps for the coinserter constructions.
pub struct CoinserterFixture {
    pub name: &'static str,
    pub f: PresentedMap,
    pub g: PresentedMap,
}

fn words(ws: &[&[i32]]) -> Vec<Word> {
    ws.iter().map(|w| Word::from_letters(w)).collect()
}

pub fn coinserter_fixtures() -> Vec<CoinserterFixture> {
    let b2 = GroupPresentation::from_letters(&["b"], &[&[1, 1]]).expect("b2");
    let b4 = GroupPresentation::cyclic(4);
    let s3 = GroupPresentation::s3();
    let (z2, z3) = (GroupPresentation::cyclic(2), GroupPresentation::cyclic(3));
    let map = |s: &GroupPresentation, t: &GroupPresentation, w: &[&[i32]]| {
        PresentedMap::new(s.clone(), t.clone(), words(w)).expect("fixture map")
    };
    let one = GroupPresentation::free(&[]);
    vec![
        CoinserterFixture { name: "b2-trivial", f: PresentedMap::trivial(one.clone(), b2.clone()), g: PresentedMap::trivial(one, b2) },
        CoinserterFixture { name: "s3-hnn", f: map(&z2, &s3, &[&[1]]), g: map(&z2, &s3, &[&[2, 1, -2]]) },
        CoinserterFixture { name: "s3-centralizer", f: map(&z2, &s3, &[&[1]]), g: map(&z2, &s3, &[&[1]]) },
        CoinserterFixture { name: "z3-inversion", f: map(&z3, &s3, &[&[2]]), g: map(&z3, &s3, &[&[-2]]) },
        CoinserterFixture { name: "z4-square", f: map(&z2, &b4, &[&[1, 1]]), g: map(&z2, &b4, &[&[1, 1]]) },
    ]
}

/// A presented group with two words over its generators.
pub struct CoequifierFixture {
    pub name: &'static str,
    pub base: GroupPresentation,
    pub alpha: Word,
    pub beta: Word,
}

pub fn coequifier_fixtures() -> Vec<CoequifierFixture> {
    let s3 = GroupPresentation::s3();
    let fx = |name, base: &GroupPresentation, a: &[i32], b: &[i32]| CoequifierFixture {
        name,
        base: base.clone(),
        alpha: Word::from_letters(a),
        beta: Word::from_letters(b),
    };
    vec![
        fx("s3-conjugates", &s3, &[1], &[2, 1, -2]),
        fx("s3-equal", &s3, &[1], &[1]),
        fx("s3-rotation", &s3, &[2], &[]),
        fx("b2-generator", &GroupPresentation::from_letters(&["b"], &[&[1, 1]]).expect("b2"), &[1], &[]),
        fx("z4-square", &GroupPresentation::cyclic(4), &[1, 1], &[]),
        fx("free2-commutator", &GroupPresentation::free(&["x", "y"]), &[1, 2], &[2, 1]),
    ]
}

/// Size caps for [`random_xmod`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomCaps {
    pub max_objects: usize,
    pub max_order: usize,
}

impl Default for RandomCaps {
    fn default() -> Self {
        RandomCaps { max_objects: 3, max_order: 4 }
    }
}

/// A crossed module of groups `∂: M → N` with a left action of `N` on `M`.
struct GroupXMod {
    m: FinGroup,
    n: FinGroup,
    boundary: Vec<Elem>,
    /// `act[n][m]`
    act: Vec<Vec<Elem>>,
}

fn trivial_action(m: &FinGroup, n: &FinGroup) -> Vec<Vec<Elem>> {
    n.elements().map(|_| m.elements().collect()).collect()
}

fn identity_xmod(g: FinGroup) -> GroupXMod {
    let act = g.elements().map(|a| g.elements().map(|b| g.conj(a, b)).collect()).collect();
    GroupXMod { boundary: g.elements().collect(), act, m: g.clone(), n: g }
}

fn central(m: FinGroup, n: FinGroup, boundary: Vec<Elem>) -> GroupXMod {
    GroupXMod { act: trivial_action(&m, &n), m, n, boundary }
}

fn inversion_by_z2(m: FinGroup) -> GroupXMod {
    let n = library::cyclic(2);
    let act = vec![m.elements().collect(), m.elements().map(|x| m.inv(x)).collect()];
    GroupXMod { boundary: vec![0; m.order()], m, n, act }
}

fn group_xmods() -> Vec<GroupXMod> {
    let (z2, z3, z4, v4, s3) = (library::cyclic(2), library::cyclic(3), library::cyclic(4), library::klein(), library::s3());
    let (a3, a3_in_s3) = s3.subgroup(&[0, 4, 5]).expect("A3");
    let a3_act = s3.elements().map(|g| a3_in_s3.iter().map(|&x| a3_in_s3.iter().position(|&y| y == s3.conj(g, x)).expect("normal")).collect()).collect();
    // S₃ permutes the three involutions of V₄ as it permutes its transpositions
    let v4_act = s3
        .elements()
        .map(|g| std::iter::once(0).chain((1..4).map(|i| 1 + [1, 2, 3].iter().position(|&t| t == s3.conj(g, i)).expect("transposition"))).collect())
        .collect();
    vec![
        central(library::trivial(), z2.clone(), vec![0]),
        identity_xmod(z2.clone()),
        identity_xmod(z3.clone()),
        identity_xmod(z4.clone()),
        identity_xmod(v4.clone()),
        central(z2.clone(), z4.clone(), vec![0, 2]),
        central(z4.clone(), z2.clone(), vec![0, 1, 0, 1]),
        inversion_by_z2(z4),
        GroupXMod { m: a3, n: s3.clone(), boundary: a3_in_s3, act: a3_act },
        inversion_by_z2(z3),
        GroupXMod { m: v4, n: s3.clone(), boundary: vec![0; 4], act: v4_act },
        central(z2.clone(), s3, vec![0, 0]),
        central(z2, library::trivial(), vec![0, 0]),
    ]
}

fn stable_subgroups(x: &GroupXMod) -> Vec<Vec<Elem>> {
    let m = &x.m;
    let rest: Vec<Elem> = (1..m.order()).collect();
    let mut out = Vec::new();
    for mask in 0..(1usize << rest.len()) {
        let mut s = vec![0];
        s.extend(rest.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e));
        let closed = s.iter().all(|&a| s.iter().all(|&b| s.contains(&m.mul(a, b))));
        let stable = x.act.iter().all(|row| s.iter().all(|&a| s.contains(&row[a])));
        if closed && stable {
            out.push(s);
        }
    }
    out
}

/// A random crossed module on `P × BN` for a random poset `P`, built from a
/// crossed module of groups `M → N` and a monotone choice of `N`-stable
/// subgroups `M_p`. Valid by construction and re-validated.
pub fn random_xmod(seed: u64, caps: RandomCaps) -> Result<CrossedModule> {
    if caps.max_objects == 0 || caps.max_order == 0 {
        return Err(Error::Precondition("caps must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let choices: Vec<GroupXMod> = group_xmods().into_iter().filter(|x| x.m.order() <= caps.max_order).collect();
    let x = choices.choose(&mut rng).ok_or_else(|| Error::Precondition("no group data within caps".into()))?;
    let k = rng.gen_range(1..=caps.max_objects);
    let mut relations = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if rng.gen_bool(0.5) {
                relations.push((i, j));
            }
        }
    }
    let p = FinCategory::poset(k, &relations);
    let subgroups = stable_subgroups(x);
    let mut members: Vec<Vec<Elem>> = Vec::with_capacity(k);
    for q in 0..k {
        let below: Vec<ObjId> = (0..q).filter(|&a| !p.hom(a, q).is_empty()).collect();
        let allowed: Vec<&Vec<Elem>> =
            subgroups.iter().filter(|s| below.iter().all(|&a| members[a].iter().all(|e| s.contains(e)))).collect();
        members.push(allowed.choose(&mut rng).expect("M itself is allowed").to_vec());
    }
    let bn = FinCategory::delooping(&x.n);
    let base = FinCategory::product(&p, &bn);
    let nm = bn.morphism_count();
    let groups: Vec<FinGroup> =
        members.iter().map(|s| x.m.subgroup(s).map(|(g, _)| g)).collect::<Result<_>>()?;
    let actions = base
        .morphisms()
        .map(|f| {
            let (u, n) = (f / nm, f % nm);
            let (a, b) = (p.dom(u), p.cod(u));
            GroupHom::new(
                members[a].iter().map(|&e| members[b].iter().position(|&y| y == x.act[n][e]).expect("monotone")).collect(),
            )
        })
        .collect();
    let gamma = (0..k).map(|q| members[q].iter().map(|&e| p.id(q) * nm + x.boundary[e]).collect()).collect();
    let xm = CrossedModule::new(base, groups, actions, gamma)?;
    let r = crate::xmod::validate_crossed_module(&xm);
    match r.violations.first() {
        Some(v) => Err(Error::Precondition(format!("generated module invalid: {}", v.detail))),
        None => Ok(xm),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xmod::validate_crossed_module;

    #[test]
    fn named_fixtures_validate() {
        for (name, xm) in named() {
            assert!(validate_crossed_module(&xm).is_valid(), "{name}");
        }
        assert_eq!(ab_negation().unwrap().base.morphism_count(), 24);
        assert_eq!(groups_1_z2_s3().unwrap().base.morphism_count(), 23);
    }

    #[test]
    fn mutations_break_their_axiom() {
        for (name, xm, axiom) in mutations() {
            let r = validate_crossed_module(&xm);
            assert!(r.has(axiom), "{name}: {:?}", r.violations.first());
        }
    }

    #[test]
    fn random_modules_are_valid_and_reproducible() {
        for seed in 0..40 {
            let a = random_xmod(seed, RandomCaps::default()).unwrap();
            assert!(a.groups.iter().all(|g| g.order() <= 4) && a.base.object_count() <= 3);
            assert_eq!(a, random_xmod(seed, RandomCaps::default()).unwrap());
        }
    }
}
