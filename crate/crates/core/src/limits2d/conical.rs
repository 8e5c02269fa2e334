use std::collections::HashSet;

use serde::Serialize;

use super::csp::Csp;
use super::{exists, not_exists, settle, Cocone, Diagram, SearchVerdict, Witness};
use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, MorId, ObjId};
use crate::xmod::CrossedModule;

/// A universal (co)cone found by search: the least apex in id order with its
/// least legs, and the number of objects isomorphic to the apex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Universal {
    pub apex: ObjId,
    pub legs: Vec<MorId>,
    pub iso_class: usize,
}

fn leg_csp<'a>(c: &'a FinCategory, d: &'a Diagram, apex: ObjId, co: bool) -> Csp<'a> {
    let j = &d.shape;
    let domains = j
        .objects()
        .map(|x| {
            let dx = d.functor.obj(x);
            if co { c.hom(dx, apex).to_vec() } else { c.hom(apex, dx).to_vec() }
        })
        .collect();
    let mut csp = Csp::new(domains);
    for u in j.morphisms().filter(|&u| !j.is_identity(u)) {
        let (a, b) = (j.dom(u), j.cod(u));
        let du = d.functor.mor(u);
        if co {
            csp.constrain(&[a, b], move |l| c.comp(l[b], du) == l[a]);
        } else {
            csp.constrain(&[a, b], move |l| c.comp(du, l[a]) == l[b]);
        }
    }
    csp
}

/// All cocones over `d` with the given apex, in lexicographic leg order.
pub fn cocones(c: &FinCategory, d: &Diagram, apex: ObjId, budget: Budget) -> Result<Vec<Vec<MorId>>> {
    leg_csp(c, d, apex, true).all(&mut budget.meter("cocones"))
}

pub fn cones(c: &FinCategory, d: &Diagram, apex: ObjId, budget: Budget) -> Result<Vec<Vec<MorId>>> {
    leg_csp(c, d, apex, false).all(&mut budget.meter("cones"))
}

fn all_legs(c: &FinCategory, d: &Diagram, co: bool, meter: &mut Meter) -> Result<Vec<HashSet<Vec<MorId>>>> {
    c.objects()
        .map(|x| Ok(leg_csp(c, d, x, co).all(meter)?.into_iter().collect()))
        .collect()
}

/// Whether `m ↦ m∘λ` (or `λ∘m` for cones) is a bijection onto the
/// (co)cones at every object.
fn is_universal(c: &FinCategory, apex: ObjId, legs: &[MorId], all: &[HashSet<Vec<MorId>>], co: bool) -> bool {
    c.objects().all(|b| {
        let maps = if co { c.hom(apex, b) } else { c.hom(b, apex) };
        if maps.len() != all[b].len() {
            return false;
        }
        let mut seen = HashSet::new();
        maps.iter().all(|&m| {
            let image: Vec<MorId> = legs.iter().map(|&l| if co { c.comp(m, l) } else { c.comp(l, m) }).collect();
            all[b].contains(&image) && seen.insert(image)
        })
    })
}

fn search_1d(c: &FinCategory, d: &Diagram, co: bool, budget: Budget) -> Result<Option<Universal>> {
    let mut meter = budget.meter(if co { "colimit_1d" } else { "limit_1d" });
    let all = all_legs(c, d, co, &mut meter)?;
    for x in c.objects() {
        let mut candidates: Vec<&Vec<MorId>> = all[x].iter().collect();
        candidates.sort();
        for legs in candidates {
            meter.tick()?;
            if is_universal(c, x, legs, &all, co) {
                let iso_class = c.objects().filter(|&y| c.are_isomorphic(x, y)).count();
                return Ok(Some(Universal { apex: x, legs: legs.clone(), iso_class }));
            }
        }
    }
    Ok(None)
}

/// Colimit of `d` in the base, tested against every cocone.
pub fn colimit_1d(c: &FinCategory, d: &Diagram, budget: Budget) -> Result<Option<Universal>> {
    search_1d(c, d, true, budget)
}

pub fn limit_1d(c: &FinCategory, d: &Diagram, budget: Budget) -> Result<Option<Universal>> {
    search_1d(c, d, false, budget)
}

pub(crate) fn is_universal_cocone(c: &FinCategory, d: &Diagram, candidate: &Cocone, budget: Budget) -> Result<bool> {
    let mut meter = budget.meter("colimit_1d");
    let all = all_legs(c, d, true, &mut meter)?;
    Ok(all[candidate.apex].contains(&candidate.legs) && is_universal(c, candidate.apex, &candidate.legs, &all, true))
}

/// Two-dimensional property of a colimit cocone `λ` at `L`: for all
/// `b, b': L → B` and every family `α_j: bλ_j ⇒ b'λ_j` with `α_j = α_k`
/// along each morphism of `J`, there is exactly one `α: b ⇒ b'` equal to
/// every `α_j`.
pub fn check_2d_colimit(xm: &CrossedModule, d: &Diagram, candidate: &Cocone, budget: Budget) -> Result<SearchVerdict> {
    settle(check_2d_colimit_inner(xm, d, candidate, budget))
}

fn check_2d_colimit_inner(xm: &CrossedModule, d: &Diagram, candidate: &Cocone, budget: Budget) -> Result<SearchVerdict> {
    let c = &xm.base;
    if !is_universal_cocone(c, d, candidate, budget)? {
        return Err(Error::Precondition("candidate is not a colimit cocone in the base".into()));
    }
    let j = &d.shape;
    let l = candidate.apex;
    let mut meter = budget.meter("check_2d_colimit");
    let mut checked = 0u64;
    for b_obj in c.objects() {
        let grp = &xm.groups[b_obj];
        for &b in c.hom(l, b_obj) {
            for &b2 in c.hom(l, b_obj) {
                let whisk = |m: MorId| -> Vec<MorId> { candidate.legs.iter().map(|&x| c.comp(m, x)).collect() };
                let (src, tgt) = (whisk(b), whisk(b2));
                let domains = j
                    .objects()
                    .map(|x| grp.elements().filter(|&a| c.comp(xm.gamma(b_obj, a), src[x]) == tgt[x]).collect())
                    .collect();
                let mut csp = Csp::new(domains);
                for u in j.morphisms().filter(|&u| !j.is_identity(u)) {
                    let (p, q) = (j.dom(u), j.cod(u));
                    csp.constrain(&[p, q], move |a| a[p] == a[q]);
                }
                let mut failure = None;
                csp.solve(&mut meter, |family| {
                    checked += 1;
                    let amalgams: Vec<_> = grp
                        .elements()
                        .filter(|&a| c.comp(xm.gamma(b_obj, a), b) == b2 && family.iter().all(|&x| x == a))
                        .collect();
                    if amalgams.len() != 1 {
                        failure = Some((family.to_vec(), amalgams.len()));
                        return false;
                    }
                    true
                })?;
                if let Some((family, n)) = failure {
                    let w = Witness::new(
                        "modification",
                        format!(
                            "family {family:?} between cocones through {} and {} into {} has {n} amalgamations",
                            c.mor_name(b),
                            c.mor_name(b2),
                            c.obj_name(b_obj)
                        ),
                    )
                    .apex(b_obj)
                    .morphisms(vec![b, b2])
                    .elements(family);
                    return Ok(not_exists(w));
                }
            }
        }
    }
    Ok(exists(
        Witness::new("colimit", format!("{checked} modification families each have a unique amalgamation"))
            .apex(l)
            .morphisms(candidate.legs.clone()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinFunctor;
    use crate::groupkit::library;
    use crate::xmod::conjugation_module_delooping;

    #[test]
    fn constant_diagram_over_terminal() {
        let c = FinCategory::delooping(&library::s3());
        let d = Diagram::discrete(&[0], &c);
        let u = colimit_1d(&c, &d, Budget::DEFAULT).unwrap().unwrap();
        assert_eq!((u.apex, u.legs.clone()), (0, vec![0]));
    }

    #[test]
    fn coequalizer_in_bz2_does_not_exist() {
        let c = FinCategory::delooping(&library::cyclic(2));
        let d = Diagram::parallel(0, 1, &c).unwrap();
        assert_eq!(colimit_1d(&c, &d, Budget::DEFAULT).unwrap(), None);
    }

    #[test]
    fn pushout_in_a_poset_is_the_join() {
        // 0 < 1, 0 < 2, 1 < 3, 2 < 3
        let c = FinCategory::poset(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        let span = FinCategory::span();
        let mor = |a, b| c.hom(a, b)[0];
        let f = FinFunctor {
            obj_map: vec![0, 1, 2],
            mor_map: span.morphisms().map(|u| mor([0, 1, 2][span.dom(u)], [0, 1, 2][span.cod(u)])).collect(),
        };
        let d = Diagram::new(span, f, &c).unwrap();
        assert_eq!(colimit_1d(&c, &d, Budget::DEFAULT).unwrap().unwrap().apex, 3);
        assert_eq!(limit_1d(&c, &d, Budget::DEFAULT).unwrap().unwrap().apex, 0);
    }

    #[test]
    fn trivial_module_colimits_are_2d() {
        let c = FinCategory::poset(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        let xm = CrossedModule::trivial(c.clone());
        let d = Diagram::discrete(&[1, 2], &c);
        let u = colimit_1d(&c, &d, Budget::DEFAULT).unwrap().unwrap();
        let v = check_2d_colimit(&xm, &d, &Cocone { apex: u.apex, legs: u.legs }, Budget::DEFAULT).unwrap();
        assert!(v.exists());
    }

    #[test]
    fn automorphism_legs_are_colimits() {
        let xm = conjugation_module_delooping(&library::s3());
        let d = Diagram::discrete(&[0], &xm.base);
        let bad = Cocone { apex: 0, legs: vec![1] };
        assert!(check_2d_colimit(&xm, &d, &bad, Budget::DEFAULT).unwrap().exists());
        let d2 = Diagram::parallel(0, 1, &xm.base).unwrap();
        assert!(matches!(
            check_2d_colimit(&xm, &d2, &Cocone { apex: 0, legs: vec![0, 0] }, Budget::DEFAULT),
            Err(Error::Precondition(_))
        ));
    }
}
