use serde::{Deserialize, Serialize};

use super::{FinCategory, MorId, ObjId};
use crate::budget::Budget;
use crate::error::Result;
use crate::report::ValidationReport;

/// A functor given by its object and morphism maps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FinFunctor {
    pub obj_map: Vec<ObjId>,
    pub mor_map: Vec<MorId>,
}

impl FinFunctor {
    pub fn identity(c: &FinCategory) -> Self {
        FinFunctor {
            obj_map: c.objects().collect(),
            mor_map: c.morphisms().collect(),
        }
    }

    /// The functor constant at object `a` of `c`.
    pub fn constant(j: &FinCategory, c: &FinCategory, a: ObjId) -> Self {
        FinFunctor {
            obj_map: vec![a; j.object_count()],
            mor_map: vec![c.id(a); j.morphism_count()],
        }
    }

    #[inline]
    pub fn obj(&self, a: ObjId) -> ObjId {
        self.obj_map[a]
    }

    #[inline]
    pub fn mor(&self, f: MorId) -> MorId {
        self.mor_map[f]
    }

    /// `self ∘ first`
    pub fn after(&self, first: &FinFunctor) -> FinFunctor {
        FinFunctor {
            obj_map: first.obj_map.iter().map(|&a| self.obj_map[a]).collect(),
            mor_map: first.mor_map.iter().map(|&f| self.mor_map[f]).collect(),
        }
    }

    /// Checks that the maps are total, typed, and preserve identities and
    /// composites.
    pub fn check(&self, j: &FinCategory, c: &FinCategory) -> ValidationReport {
        let mut r = ValidationReport::new("functor");
        if self.obj_map.len() != j.object_count() || self.mor_map.len() != j.morphism_count() {
            r.push("arity", &[], "map sizes do not match the source".into());
            return r;
        }
        if self.obj_map.iter().any(|&a| a >= c.object_count()) || self.mor_map.iter().any(|&f| f >= c.morphism_count()) {
            r.push("range", &[], "image id out of range".into());
            return r;
        }
        for u in j.morphisms() {
            let v = self.mor(u);
            r.check(
                c.dom(v) == self.obj(j.dom(u)) && c.cod(v) == self.obj(j.cod(u)),
                "typing",
                &[u],
                || format!("F({}) has the wrong type", j.mor_name(u)),
            );
        }
        if !r.is_valid() {
            return r;
        }
        for a in j.objects() {
            r.check(self.mor(j.id(a)) == c.id(self.obj(a)), "identity", &[a], || {
                format!("F(1_{}) is not an identity", j.obj_name(a))
            });
        }
        for u in j.morphisms() {
            for v in j.out_of(j.cod(u)) {
                let lhs = self.mor(j.comp(v, u));
                let rhs = c.comp(self.mor(v), self.mor(u));
                r.check(lhs == rhs, "composition", &[v, u], || {
                    format!("F({}∘{}) ≠ F({})∘F({})", j.mor_name(v), j.mor_name(u), j.mor_name(v), j.mor_name(u))
                });
            }
        }
        r
    }

    pub fn is_valid(&self, j: &FinCategory, c: &FinCategory) -> bool {
        self.check(j, c).is_valid()
    }
}

/// Components `F(j) → G(j)` of a transformation between parallel functors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NatTransformation {
    pub components: Vec<MorId>,
}

impl NatTransformation {
    pub fn new(components: Vec<MorId>) -> Self {
        NatTransformation { components }
    }

    #[inline]
    pub fn at(&self, j: ObjId) -> MorId {
        self.components[j]
    }

    pub fn check(&self, f: &FinFunctor, g: &FinFunctor, j: &FinCategory, c: &FinCategory) -> ValidationReport {
        let mut r = ValidationReport::new("natural transformation");
        if self.components.len() != j.object_count() {
            r.push("arity", &[], "one component per object required".into());
            return r;
        }
        for a in j.objects() {
            let t = self.at(a);
            r.check(t < c.morphism_count() && c.dom(t) == f.obj(a) && c.cod(t) == g.obj(a), "typing", &[a], || {
                format!("component at {} has the wrong type", j.obj_name(a))
            });
        }
        if !r.is_valid() {
            return r;
        }
        for u in j.morphisms() {
            let (a, b) = (j.dom(u), j.cod(u));
            let lhs = c.comp(g.mor(u), self.at(a));
            let rhs = c.comp(self.at(b), f.mor(u));
            r.check(lhs == rhs, "naturality", &[u], || format!("square at {} does not commute", j.mor_name(u)));
        }
        r
    }
}

/// Every functor `j → c`, ordered lexicographically by object map and then
/// morphism map.
///
/// Objects are assigned first; morphisms are then assigned in id order and
/// each composite `v∘u = w` of `j` is checked as soon as its last
/// constituent is assigned.
pub fn enumerate_functors(j: &FinCategory, c: &FinCategory, budget: Budget) -> Result<Vec<FinFunctor>> {
    let mut meter = budget.meter("enumerate_functors");
    let mut out = Vec::new();
    let mut obj_map = vec![0; j.object_count()];
    // constraints keyed by the largest morphism id among (v, u, v∘u)
    let mut constraints: Vec<Vec<(MorId, MorId, MorId)>> = vec![Vec::new(); j.morphism_count()];
    for u in j.morphisms() {
        for v in j.out_of(j.cod(u)) {
            let w = j.comp(v, u);
            constraints[u.max(v).max(w)].push((v, u, w));
        }
    }
    assign_objects(j, c, 0, &mut obj_map, &constraints, &mut meter, &mut out)?;
    Ok(out)
}

fn assign_objects(
    j: &FinCategory,
    c: &FinCategory,
    next: ObjId,
    obj_map: &mut Vec<ObjId>,
    constraints: &[Vec<(MorId, MorId, MorId)>],
    meter: &mut crate::budget::Meter,
    out: &mut Vec<FinFunctor>,
) -> Result<()> {
    if next == j.object_count() {
        let mut mor_map = vec![usize::MAX; j.morphism_count()];
        return assign_morphisms(j, c, 0, obj_map, &mut mor_map, constraints, meter, out);
    }
    for a in c.objects() {
        meter.tick()?;
        obj_map[next] = a;
        assign_objects(j, c, next + 1, obj_map, constraints, meter, out)?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn assign_morphisms(
    j: &FinCategory,
    c: &FinCategory,
    next: MorId,
    obj_map: &[ObjId],
    mor_map: &mut Vec<MorId>,
    constraints: &[Vec<(MorId, MorId, MorId)>],
    meter: &mut crate::budget::Meter,
    out: &mut Vec<FinFunctor>,
) -> Result<()> {
    if next == j.morphism_count() {
        out.push(FinFunctor {
            obj_map: obj_map.to_vec(),
            mor_map: mor_map.clone(),
        });
        return Ok(());
    }
    let candidates: Vec<MorId> = if j.is_identity(next) {
        vec![c.id(obj_map[j.dom(next)])]
    } else {
        c.hom(obj_map[j.dom(next)], obj_map[j.cod(next)]).to_vec()
    };
    for x in candidates {
        meter.tick()?;
        mor_map[next] = x;
        let ok = constraints[next]
            .iter()
            .all(|&(v, u, w)| c.comp(mor_map[v], mor_map[u]) == mor_map[w]);
        if ok {
            assign_morphisms(j, c, next + 1, obj_map, mor_map, constraints, meter, out)?;
        }
    }
    mor_map[next] = usize::MAX;
    Ok(())
}
