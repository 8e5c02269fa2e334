//! Crossed modules on finite categories.

mod conjugation;
mod isotropy;

pub use conjugation::{conjugation_module, conjugation_module_delooping, GroupCategory};
pub use isotropy::{
    canonical_comparison, compute_isotropy, delta, isotropy_functor_action, isotropy_module, Comparison, IsotropyElement,
    IsotropyGroup,
};

use crate::error::{Error, Result};
use crate::fincat::{validate_category, FinCategory, MorId, ObjId};
use crate::groupkit::{Elem, FinGroup, GroupHom};
use crate::report::ValidationReport;

/// A group-valued copresheaf `G` on `base` with actions `γ_A: G(A) → Aut(A)`.
///
/// `actions[f]` is `G(f)` and `gamma[A][α]` is the morphism id of `γ_A(α)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedModule {
    pub base: FinCategory,
    pub groups: Vec<FinGroup>,
    pub actions: Vec<GroupHom>,
    pub gamma: Vec<Vec<MorId>>,
}

impl CrossedModule {
    /// Checks only that the data has the right shape; see
    /// [`validate_crossed_module`] for the axioms.
    pub fn new(base: FinCategory, groups: Vec<FinGroup>, actions: Vec<GroupHom>, gamma: Vec<Vec<MorId>>) -> Result<Self> {
        let xm = CrossedModule { base, groups, actions, gamma };
        let r = shape_report(&xm);
        match r.violations.first() {
            Some(v) => Err(Error::ShapeMismatch(v.detail.clone())),
            None => Ok(xm),
        }
    }

    /// Every `G(A)` trivial.
    pub fn trivial(base: FinCategory) -> Self {
        let groups = base.objects().map(|_| FinGroup::trivial()).collect();
        let actions = base.morphisms().map(|_| GroupHom::new(vec![0])).collect();
        let gamma = base.objects().map(|a| vec![base.id(a)]).collect();
        CrossedModule { base, groups, actions, gamma }
    }

    #[inline]
    pub fn group(&self, a: ObjId) -> &FinGroup {
        &self.groups[a]
    }

    /// `G(f)α`
    #[inline]
    pub fn act(&self, f: MorId, alpha: Elem) -> Elem {
        self.actions[f].apply(alpha)
    }

    /// `γ_A(α)`
    #[inline]
    pub fn gamma(&self, a: ObjId, alpha: Elem) -> MorId {
        self.gamma[a][alpha]
    }

    pub fn is_trivial(&self) -> bool {
        self.groups.iter().all(FinGroup::is_trivial)
    }

    /// Objects with `G(A)` nontrivial.
    pub fn nontrivial_objects(&self) -> Vec<ObjId> {
        self.base.objects().filter(|&a| !self.groups[a].is_trivial()).collect()
    }
}

fn shape_report(xm: &CrossedModule) -> ValidationReport {
    let c = &xm.base;
    let mut r = ValidationReport::new("crossed module shape");
    if xm.groups.len() != c.object_count() {
        r.push("shape", &[], format!("{} groups for {} objects", xm.groups.len(), c.object_count()));
    }
    if xm.actions.len() != c.morphism_count() {
        r.push("shape", &[], format!("{} actions for {} morphisms", xm.actions.len(), c.morphism_count()));
    }
    if xm.gamma.len() != c.object_count() {
        r.push("shape", &[], format!("{} action maps for {} objects", xm.gamma.len(), c.object_count()));
    }
    if !r.is_valid() {
        return r;
    }
    for f in c.morphisms() {
        let (src, tgt) = (&xm.groups[c.dom(f)], &xm.groups[c.cod(f)]);
        let map = &xm.actions[f].map;
        if map.len() != src.order() || map.iter().any(|&x| x >= tgt.order()) {
            r.push("shape", &[f], format!("G({}) is not a map G(dom) → G(cod)", c.mor_name(f)));
        }
    }
    for a in c.objects() {
        let g = &xm.gamma[a];
        if g.len() != xm.groups[a].order() || g.iter().any(|&m| m >= c.morphism_count()) {
            r.push("shape", &[a], format!("γ at {} is not a map out of G({})", c.obj_name(a), c.obj_name(a)));
        }
    }
    r
}

/// Checks functoriality of `G`, that each `γ_A` is a homomorphism into
/// `Aut(A)`, every equivariance square (witness `(f, α)`) and every Peiffer
/// instance (witness `(α, β)`).
pub fn validate_crossed_module(xm: &CrossedModule) -> ValidationReport {
    let c = &xm.base;
    let mut r = ValidationReport::new("crossed module");
    let base = validate_category(c);
    if !base.is_valid() {
        r.merge(base);
        return r;
    }
    let shape = shape_report(xm);
    if !shape.is_valid() {
        r.merge(shape);
        return r;
    }
    for f in c.morphisms() {
        let ok = xm.actions[f].is_hom(&xm.groups[c.dom(f)], &xm.groups[c.cod(f)]);
        r.check(ok, "G-hom", &[f], || format!("G({}) is not a homomorphism", c.mor_name(f)));
    }
    for a in c.objects() {
        r.check(xm.actions[c.id(a)].is_identity(), "G-identity", &[a], || {
            format!("G(1_{}) is not the identity", c.obj_name(a))
        });
    }
    for f in c.morphisms() {
        for g in c.out_of(c.cod(f)) {
            let lhs = &xm.actions[c.comp(g, f)];
            let rhs = xm.actions[g].after(&xm.actions[f]);
            r.check(*lhs == rhs, "G-composition", &[g, f], || {
                format!("G({}∘{}) ≠ G({})∘G({})", c.mor_name(g), c.mor_name(f), c.mor_name(g), c.mor_name(f))
            });
        }
    }
    let mut gamma_typed = true;
    for a in c.objects() {
        let grp = &xm.groups[a];
        for alpha in grp.elements() {
            let m = xm.gamma(a, alpha);
            let ok = c.dom(m) == a && c.cod(m) == a && c.is_invertible(m);
            gamma_typed &= ok;
            r.check(ok, "gamma-automorphism", &[a, alpha], || {
                format!("γ({}) = {} is not an automorphism of {}", grp.name(alpha), c.mor_name(m), c.obj_name(a))
            });
        }
    }
    if !gamma_typed {
        return r;
    }
    for a in c.objects() {
        let grp = &xm.groups[a];
        for alpha in grp.elements() {
            for beta in grp.elements() {
                let lhs = xm.gamma(a, grp.mul(alpha, beta));
                let rhs = c.comp(xm.gamma(a, alpha), xm.gamma(a, beta));
                r.check(lhs == rhs, "gamma-hom", &[alpha, beta], || {
                    format!("γ({}·{}) ≠ γ({})∘γ({}) at {}", grp.name(alpha), grp.name(beta), grp.name(alpha), grp.name(beta), c.obj_name(a))
                });
            }
        }
    }
    for f in c.morphisms() {
        let (a, b) = (c.dom(f), c.cod(f));
        for alpha in xm.groups[a].elements() {
            let moved = xm.act(f, alpha);
            if moved >= xm.groups[b].order() {
                continue;
            }
            let lhs = c.comp(f, xm.gamma(a, alpha));
            let rhs = c.comp(xm.gamma(b, moved), f);
            r.check(lhs == rhs, "equivariance", &[f, alpha], || {
                format!(
                    "{}∘γ({}) = {} but γ(G({}){})∘{} = {}",
                    c.mor_name(f),
                    xm.groups[a].name(alpha),
                    c.mor_name(lhs),
                    c.mor_name(f),
                    xm.groups[a].name(alpha),
                    c.mor_name(f),
                    c.mor_name(rhs)
                )
            });
        }
    }
    for a in c.objects() {
        let grp = &xm.groups[a];
        for alpha in grp.elements() {
            let act = &xm.actions[xm.gamma(a, alpha)];
            for beta in grp.elements() {
                let lhs = act.apply(beta);
                let rhs = grp.conj(alpha, beta);
                r.check(lhs == rhs, "peiffer", &[alpha, beta], || {
                    format!(
                        "at {}: G(γ({a}))({b}) = {} but {a}{b}{a}⁻¹ = {}",
                        c.obj_name(a),
                        grp.name(lhs),
                        grp.name(rhs),
                        a = grp.name(alpha),
                        b = grp.name(beta)
                    )
                });
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::library;

    #[test]
    fn trivial_modules_validate() {
        for c in [FinCategory::empty(), FinCategory::span(), FinCategory::delooping(&library::s3())] {
            let r = validate_crossed_module(&CrossedModule::trivial(c));
            assert!(r.is_valid(), "{:?}", r.violations);
        }
    }

    #[test]
    fn constant_gamma_breaks_peiffer() {
        let s3 = library::s3();
        let mut xm = conjugation_module_delooping(&s3);
        xm.gamma[0] = vec![0; 6];
        let r = validate_crossed_module(&xm);
        let v = r.first("peiffer").unwrap();
        assert_eq!(v.witness, vec![1, 2]);
        assert_eq!((s3.name(1), s3.name(2)), ("(12)", "(13)"));
    }

    #[test]
    fn shape_errors_are_typed() {
        let c = FinCategory::terminal();
        let err = CrossedModule::new(c, vec![], vec![], vec![]).unwrap_err();
        assert!(matches!(err, Error::ShapeMismatch(_)));
    }
}
