//! Morphisms of crossed modules, their 2-cells, and the 2-functor from any
//! `C_G` to a finite full 2-subcategory of groups.

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::{FinFunctor, MorId, NatTransformation};
use crate::groupkit::{FinGroup, GroupHom};
use crate::report::ValidationReport;
use crate::twocat::{hcompose, vcompose, TwoCell};
use crate::xmod::{conjugation_module, CrossedModule, GroupCategory};

/// A functor `F` with `σ_A: G(A) → H(F A)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XModMorphism {
    pub functor: FinFunctor,
    pub sigma: Vec<GroupHom>,
}

/// A transformation `τ: F ⇒ F'` between the underlying functors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XMod2Cell {
    pub tau: NatTransformation,
}

impl XModMorphism {
    pub fn identity(xm: &CrossedModule) -> Self {
        XModMorphism {
            functor: FinFunctor::identity(&xm.base),
            sigma: xm.groups.iter().map(GroupHom::identity).collect(),
        }
    }

    /// Into `CrossedModule::trivial(base)`.
    pub fn to_trivial(xm: &CrossedModule) -> Self {
        XModMorphism {
            functor: FinFunctor::identity(&xm.base),
            sigma: xm.groups.iter().map(GroupHom::trivial).collect(),
        }
    }

    /// `BG → BK` induced by `φ: G → K` between conjugation modules on
    /// deloopings.
    pub fn delooping_hom(phi: &GroupHom) -> Self {
        XModMorphism { functor: FinFunctor { obj_map: vec![0], mor_map: phi.map.clone() }, sigma: vec![phi.clone()] }
    }

    /// The image of a 1-cell.
    pub fn apply_one_cell(&self, f: MorId) -> MorId {
        self.functor.mor(f)
    }

    /// `(F f, σ_B(α))` for `α: f ⇒ g` with `f: A → B`.
    pub fn apply_two_cell(&self, src: &CrossedModule, t: TwoCell) -> TwoCell {
        TwoCell { src: self.functor.mor(t.src), element: self.sigma[src.base.cod(t.src)].apply(t.element) }
    }
}

/// Naturality of `σ` and `δ_{FA}∘σ_A = F∘γ_A` at every object.
pub fn validate_xmod_morphism(src: &CrossedModule, tgt: &CrossedModule, m: &XModMorphism) -> ValidationReport {
    let (c, d) = (&src.base, &tgt.base);
    let mut r = ValidationReport::new("crossed module morphism");
    let fr = m.functor.check(c, d);
    if !fr.is_valid() {
        r.merge(fr);
        return r;
    }
    if m.sigma.len() != c.object_count() {
        r.push("arity", &[], "one component of σ per object required".into());
        return r;
    }
    for a in c.objects() {
        let ok = m.sigma[a].is_hom(&src.groups[a], &tgt.groups[m.functor.obj(a)]);
        r.check(ok, "sigma-hom", &[a], || format!("σ at {} is not a homomorphism", c.obj_name(a)));
    }
    if !r.is_valid() {
        return r;
    }
    for f in c.morphisms() {
        let (a, b) = (c.dom(f), c.cod(f));
        for alpha in src.groups[a].elements() {
            let lhs = m.sigma[b].apply(src.act(f, alpha));
            let rhs = tgt.act(m.functor.mor(f), m.sigma[a].apply(alpha));
            r.check(lhs == rhs, "sigma-naturality", &[f, alpha], || {
                format!("σ∘G({}) ≠ H(F{})∘σ at element {alpha}", c.mor_name(f), c.mor_name(f))
            });
        }
    }
    for a in c.objects() {
        let fa = m.functor.obj(a);
        for alpha in src.groups[a].elements() {
            let lhs = tgt.gamma(fa, m.sigma[a].apply(alpha));
            let rhs = m.functor.mor(src.gamma(a, alpha));
            r.check(lhs == rhs, "compatibility", &[a, alpha], || {
                format!("δ(σ(α)) = {} but F(γ(α)) = {} at {}", d.mor_name(lhs), d.mor_name(rhs), c.obj_name(a))
            });
        }
    }
    r
}

/// `τ` natural and `σ'_A = H(τ_A)∘σ_A` at every object.
pub fn validate_xmod_2cell(
    src: &CrossedModule,
    tgt: &CrossedModule,
    m: &XModMorphism,
    m2: &XModMorphism,
    cell: &XMod2Cell,
) -> ValidationReport {
    let c = &src.base;
    let mut r = ValidationReport::new("crossed module 2-cell");
    let nt = cell.tau.check(&m.functor, &m2.functor, c, &tgt.base);
    if !nt.is_valid() {
        r.merge(nt);
        return r;
    }
    for a in c.objects() {
        for alpha in src.groups[a].elements() {
            let lhs = m2.sigma[a].apply(alpha);
            let rhs = tgt.act(cell.tau.at(a), m.sigma[a].apply(alpha));
            r.check(lhs == rhs, "sigma-transport", &[a, alpha], || {
                format!("σ' ≠ H(τ)∘σ at {} on element {alpha}", c.obj_name(a))
            });
        }
    }
    r
}

/// Exhaustive preservation of identities, typing and both compositions of
/// 2-cells. Requires a valid morphism.
pub fn check_2functoriality(src: &CrossedModule, tgt: &CrossedModule, m: &XModMorphism) -> ValidationReport {
    let c = &src.base;
    let mut r = ValidationReport::new("2-functoriality");
    let cells: Vec<TwoCell> = c
        .morphisms()
        .flat_map(|f| src.groups[c.cod(f)].elements().map(move |e| TwoCell { src: f, element: e }))
        .collect();
    for &t in &cells {
        let img = m.apply_two_cell(src, t);
        r.check(img.tgt(tgt) == m.apply_one_cell(t.tgt(src)), "typing", &[t.src, t.element], || {
            "image 2-cell does not end at the image 1-cell".into()
        });
    }
    for f in c.morphisms() {
        let img = m.apply_two_cell(src, TwoCell::identity(f));
        r.check(img == TwoCell::identity(m.apply_one_cell(f)), "identity", &[f], || {
            format!("identity on {} not preserved", c.mor_name(f))
        });
    }
    for &b in &cells {
        for &a in &cells {
            if let Ok(v) = vcompose(src, b, a) {
                let lhs = m.apply_two_cell(src, v);
                let rhs = vcompose(tgt, m.apply_two_cell(src, b), m.apply_two_cell(src, a));
                r.check(rhs == Ok(lhs), "vertical", &[b.src, b.element, a.src, a.element], || {
                    "vertical composite not preserved".into()
                });
            }
            if let Ok(h) = hcompose(src, b, a) {
                let lhs = m.apply_two_cell(src, h);
                let rhs = hcompose(tgt, m.apply_two_cell(src, b), m.apply_two_cell(src, a));
                r.check(rhs == Ok(lhs), "horizontal", &[b.src, b.element, a.src, a.element], || {
                    "horizontal composite not preserved".into()
                });
            }
        }
    }
    r
}

/// The full subcategory of groups on the distinct tables among the `G(A)`,
/// named after the first object carrying each.
pub fn groups_target(xm: &CrossedModule, budget: Budget) -> Result<GroupCategory> {
    let mut groups: Vec<(String, FinGroup)> = Vec::new();
    for a in xm.base.objects() {
        if !groups.iter().any(|(_, g)| g.same_table(&xm.groups[a])) {
            groups.push((format!("G({})", xm.base.obj_name(a)), xm.groups[a].clone()));
        }
    }
    GroupCategory::full_subcategory(groups, budget)
}

/// `F = G` on objects and morphisms, landing in `target`, with `σ_A` the
/// identity labelling `G(A) = H(F A)`. Returns the target crossed module
/// alongside the morphism.
pub fn canonical_2functor_to_groups(xm: &CrossedModule, target: &GroupCategory) -> Result<(CrossedModule, XModMorphism)> {
    let c = &xm.base;
    let h = conjugation_module(target)?;
    let obj_map = c
        .objects()
        .map(|a| {
            target
                .groups
                .iter()
                .position(|g| g.same_table(&xm.groups[a]))
                .ok_or_else(|| Error::ImageEscapes(format!("G({}) is not a target group", c.obj_name(a))))
        })
        .collect::<Result<Vec<_>>>()?;
    let mor_map = c
        .morphisms()
        .map(|f| {
            target.morphism_with_map(obj_map[c.dom(f)], obj_map[c.cod(f)], &xm.actions[f]).ok_or_else(|| {
                Error::ImageEscapes(format!("G({}) is not a target morphism", c.mor_name(f)))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let sigma = xm.groups.iter().map(GroupHom::identity).collect();
    Ok((h, XModMorphism { functor: FinFunctor { obj_map, mor_map }, sigma }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::library;
    use crate::xmod::conjugation_module_delooping;

    #[test]
    fn identity_and_trivial_projection() {
        let xm = conjugation_module_delooping(&library::s3());
        let id = XModMorphism::identity(&xm);
        assert!(validate_xmod_morphism(&xm, &xm, &id).is_valid());
        assert!(check_2functoriality(&xm, &xm, &id).is_valid());
        let triv = CrossedModule::trivial(xm.base.clone());
        let p = XModMorphism::to_trivial(&xm);
        // F∘γ is not the identity on BS₃, so collapsing σ breaks the square
        assert!(validate_xmod_morphism(&xm, &triv, &p).has("compatibility"));
    }

    #[test]
    fn sign_map_between_deloopings() {
        let s3 = library::s3();
        let z2 = library::cyclic(2);
        let sign = crate::groupkit::hom_set(&s3, &z2, Budget::DEFAULT).unwrap().pop().unwrap();
        assert!(!sign.is_trivial());
        let (a, b) = (conjugation_module_delooping(&s3), conjugation_module_delooping(&z2));
        let m = XModMorphism::delooping_hom(&sign);
        assert!(validate_xmod_morphism(&a, &b, &m).is_valid());
        assert!(check_2functoriality(&a, &b, &m).is_valid());
    }

    #[test]
    fn canonical_on_bs3() {
        let xm = conjugation_module_delooping(&library::s3());
        let target = groups_target(&xm, Budget::DEFAULT).unwrap();
        let (h, m) = canonical_2functor_to_groups(&xm, &target).unwrap();
        assert!(validate_xmod_morphism(&xm, &h, &m).is_valid());
        assert!(m.sigma[0].is_identity());
        let mut broken = m.clone();
        broken.sigma = vec![GroupHom::trivial(&xm.groups[0])];
        let r = validate_xmod_morphism(&xm, &h, &broken);
        assert!(!r.is_valid());
    }
}
