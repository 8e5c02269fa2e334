use std::collections::HashMap;

use super::CrossedModule;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, MorId, ObjId};
use crate::groupkit::{hom_set, FinGroup, GroupHom};

/// A finite category whose objects carry groups and whose morphisms carry
/// homomorphisms, compatibly with composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupCategory {
    pub category: FinCategory,
    pub groups: Vec<FinGroup>,
    pub maps: Vec<GroupHom>,
}

impl GroupCategory {
    /// Checks that each map is a homomorphism between the right groups and
    /// that composition in the category is composition of maps.
    pub fn new(category: FinCategory, groups: Vec<FinGroup>, maps: Vec<GroupHom>) -> Result<Self> {
        if groups.len() != category.object_count() || maps.len() != category.morphism_count() {
            return Err(Error::ShapeMismatch("one group per object and one map per morphism".into()));
        }
        for f in category.morphisms() {
            maps[f]
                .check(&groups[category.dom(f)], &groups[category.cod(f)])
                .map_err(|e| Error::NotHomomorphism(format!("{}: {e}", category.mor_name(f))))?;
        }
        for f in category.morphisms() {
            for g in category.out_of(category.cod(f)) {
                if maps[category.comp(g, f)] != maps[g].after(&maps[f]) {
                    return Err(Error::NotHomomorphism(format!(
                        "map of {}∘{} is not the composite map",
                        category.mor_name(g),
                        category.mor_name(f)
                    )));
                }
            }
        }
        Ok(GroupCategory { category, groups, maps })
    }

    /// The full subcategory of groups on the given objects. Morphisms are
    /// listed by `(source, target)` and then by element map; the morphism
    /// name is `source→target#k`, with `1_A` for identities.
    pub fn full_subcategory(groups: Vec<(String, FinGroup)>, budget: Budget) -> Result<Self> {
        let n = groups.len();
        let mut morphisms = Vec::new();
        let mut maps = Vec::new();
        let mut index: HashMap<(ObjId, ObjId, GroupHom), MorId> = HashMap::new();
        let mut identity = vec![0; n];
        for a in 0..n {
            for b in 0..n {
                for (k, h) in hom_set(&groups[a].1, &groups[b].1, budget)?.into_iter().enumerate() {
                    let name = if a == b && h.is_identity() {
                        identity[a] = morphisms.len();
                        format!("1_{}", groups[a].0)
                    } else {
                        format!("{}→{}#{k}", groups[a].0, groups[b].0)
                    };
                    index.insert((a, b, h.clone()), morphisms.len());
                    morphisms.push((name, a, b));
                    maps.push(h);
                }
            }
        }
        let dc: Vec<(ObjId, ObjId)> = morphisms.iter().map(|m| (m.1, m.2)).collect();
        let category = FinCategory::from_fn(
            groups.iter().map(|g| g.0.clone()).collect(),
            morphisms,
            identity,
            |g, f| index[&(dc[f].0, dc[g].1, maps[g].after(&maps[f]))],
        )?;
        Ok(GroupCategory {
            category,
            groups: groups.into_iter().map(|g| g.1).collect(),
            maps,
        })
    }

    /// The delooping `BG`, morphism `g` carrying conjugation by `g`.
    pub fn delooping(g: &FinGroup) -> Self {
        GroupCategory {
            category: FinCategory::delooping(g),
            groups: vec![g.clone()],
            maps: g.elements().map(|a| GroupHom::conjugation(g, a)).collect(),
        }
    }

    /// Least morphism `A → B` carrying the given map.
    pub fn morphism_with_map(&self, a: ObjId, b: ObjId, map: &GroupHom) -> Option<MorId> {
        self.category.hom(a, b).iter().copied().find(|&f| self.maps[f] == *map)
    }
}

/// `G(A)` is the group at `A`, `G(f)` the map carried by `f`, and `γ_A(α)`
/// the least endomorphism of `A` carrying conjugation by `α`.
pub fn conjugation_module(gc: &GroupCategory) -> Result<CrossedModule> {
    let c = &gc.category;
    let mut gamma = Vec::with_capacity(c.object_count());
    for a in c.objects() {
        let grp = &gc.groups[a];
        let row = grp
            .elements()
            .map(|alpha| {
                gc.morphism_with_map(a, a, &GroupHom::conjugation(grp, alpha)).ok_or_else(|| {
                    Error::Precondition(format!("conjugation by {} is not a morphism of {}", grp.name(alpha), c.obj_name(a)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        gamma.push(row);
    }
    CrossedModule::new(c.clone(), gc.groups.clone(), gc.maps.clone(), gamma)
}

/// The conjugation module on `BG`: `G(*) = G`, `G(f) = conj_f`, `γ(α) = α`.
pub fn conjugation_module_delooping(g: &FinGroup) -> CrossedModule {
    let gc = GroupCategory::delooping(g);
    CrossedModule {
        base: gc.category,
        groups: gc.groups,
        actions: gc.maps,
        gamma: vec![g.elements().collect()],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::validate_category;
    use crate::groupkit::library;
    use crate::xmod::validate_crossed_module;

    #[test]
    fn deloopings_validate() {
        for g in [library::cyclic(2), library::s3(), library::dihedral(4)] {
            let r = validate_crossed_module(&conjugation_module_delooping(&g));
            assert!(r.is_valid(), "{:?}", r.violations);
        }
    }

    #[test]
    fn small_groups_subcategory() {
        let gc = GroupCategory::full_subcategory(
            vec![("1".into(), library::trivial()), ("Z2".into(), library::cyclic(2)), ("S3".into(), library::s3())],
            Budget::DEFAULT,
        )
        .unwrap();
        // 1 + 1 + 1 + 1 + 2 + 4 + 1 + 2 + 10
        assert_eq!(gc.category.morphism_count(), 23);
        assert!(validate_category(&gc.category).is_valid());
        assert_eq!(gc.category.initial_object(), Some(0));
        let xm = conjugation_module(&gc).unwrap();
        assert!(validate_crossed_module(&xm).is_valid());
    }

    #[test]
    fn non_homomorphisms_are_rejected() {
        let z3 = library::cyclic(3);
        let c = FinCategory::delooping(&z3);
        let maps = vec![GroupHom::identity(&z3), GroupHom::new(vec![0, 2, 2]), GroupHom::identity(&z3)];
        assert!(matches!(GroupCategory::new(c, vec![z3], maps), Err(Error::NotHomomorphism(_))));
    }
}
