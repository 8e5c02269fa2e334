use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::CrossedModule;
use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::fincat::{AutGroup, FinCategory, MorId, ObjId};
use crate::groupkit::{hom_set, Elem, FinGroup, GroupHom};
use crate::report::ValidationReport;

/// A natural automorphism of the coslice projection at `X`:
/// `components[i]` is `α_f` for the `i`-th morphism `f` out of `X`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IsotropyElement {
    pub components: Vec<MorId>,
}

/// `Z(X)` under pointwise composition. Element 0 is the family of
/// identities; the others follow in lexicographic order of components.
#[derive(Debug, Clone)]
pub struct IsotropyGroup {
    pub object: ObjId,
    /// Morphisms out of `X`, in id order; they index the components.
    pub coslice: Vec<MorId>,
    pub group: FinGroup,
    pub elements: Vec<IsotropyElement>,
    index: HashMap<Vec<MorId>, Elem>,
    position: HashMap<MorId, usize>,
}

impl IsotropyGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element_of(&self, components: &[MorId]) -> Option<Elem> {
        self.index.get(components).copied()
    }

    /// `α_f` for a morphism `f` out of `X`.
    pub fn component(&self, alpha: Elem, f: MorId) -> MorId {
        self.elements[alpha].components[self.position[&f]]
    }
}

/// One naturality constraint `g∘α_i = α_j∘g`.
struct Edge {
    i: usize,
    j: usize,
    g: MorId,
}

fn edges(c: &FinCategory, coslice: &[MorId], position: &HashMap<MorId, usize>) -> Vec<Edge> {
    let mut out = Vec::new();
    for (i, &f) in coslice.iter().enumerate() {
        for g in c.out_of(c.cod(f)) {
            out.push(Edge { i, j: position[&c.comp(g, f)], g });
        }
    }
    out
}

fn satisfied(c: &FinCategory, e: &Edge, ai: MorId, aj: MorId) -> bool {
    c.comp(e.g, ai) == c.comp(aj, e.g)
}

/// All natural automorphisms of `X/C → C`.
///
/// Components are assigned in breadth-first order from `1_X` over the
/// constraint graph, then any remaining coslice objects in id order. Each
/// assignment filters the candidate lists of its unassigned neighbours;
/// constraints between assigned components are checked on the spot.
pub fn compute_isotropy(c: &FinCategory, x: ObjId, budget: Budget) -> Result<IsotropyGroup> {
    if x >= c.object_count() {
        return Err(Error::UnknownObject(x));
    }
    let coslice = c.out_of(x);
    let position: HashMap<MorId, usize> = coslice.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let n = coslice.len();
    let edges = edges(c, &coslice, &position);
    let mut adjacent: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, e) in edges.iter().enumerate() {
        adjacent[e.i].push(k);
        if e.j != e.i {
            adjacent[e.j].push(k);
        }
    }
    let mut domains: Vec<Vec<MorId>> = coslice
        .iter()
        .enumerate()
        .map(|(i, &f)| {
            c.automorphisms(c.cod(f))
                .into_iter()
                .filter(|&a| edges.iter().filter(|e| e.i == i && e.j == i).all(|e| satisfied(c, e, a, a)))
                .collect()
        })
        .collect();
    if domains.iter().any(Vec::is_empty) {
        domains = vec![Vec::new(); n];
    }

    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let root = position[&c.id(x)];
    for start in std::iter::once(root).chain(0..n) {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            order.push(i);
            for &k in &adjacent[i] {
                let other = if edges[k].i == i { edges[k].j } else { edges[k].i };
                if !seen[other] {
                    seen[other] = true;
                    queue.push_back(other);
                }
            }
        }
    }

    let mut meter = budget.meter("compute_isotropy");
    let mut found = Vec::new();
    let mut assignment = vec![usize::MAX; n];
    let search = Search { c, edges: &edges, adjacent: &adjacent, order: &order };
    search.run(0, &mut assignment, &domains, &mut meter, &mut found)?;
    Ok(package(c, x, coslice, position, found))
}

struct Search<'a> {
    c: &'a FinCategory,
    edges: &'a [Edge],
    adjacent: &'a [Vec<usize>],
    order: &'a [usize],
}

impl Search<'_> {
    fn run(
        &self,
        depth: usize,
        assignment: &mut Vec<MorId>,
        domains: &[Vec<MorId>],
        meter: &mut Meter,
        found: &mut Vec<Vec<MorId>>,
    ) -> Result<()> {
        if depth == self.order.len() {
            found.push(assignment.clone());
            return Ok(());
        }
        let i = self.order[depth];
        for &a in &domains[i] {
            meter.tick()?;
            assignment[i] = a;
            let mut next = domains.to_vec();
            let mut ok = true;
            for &k in &self.adjacent[i] {
                let e = &self.edges[k];
                let (other, forward) = if e.i == i { (e.j, true) } else { (e.i, false) };
                if other == i {
                    continue;
                }
                let test = |b: MorId| if forward { satisfied(self.c, e, a, b) } else { satisfied(self.c, e, b, a) };
                if assignment[other] != usize::MAX {
                    if !test(assignment[other]) {
                        ok = false;
                        break;
                    }
                } else {
                    next[other].retain(|&b| test(b));
                    if next[other].is_empty() {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                self.run(depth + 1, assignment, &next, meter, found)?;
            }
        }
        assignment[i] = usize::MAX;
        Ok(())
    }
}

fn package(
    c: &FinCategory,
    x: ObjId,
    coslice: Vec<MorId>,
    position: HashMap<MorId, usize>,
    mut families: Vec<Vec<MorId>>,
) -> IsotropyGroup {
    let identity: Vec<MorId> = coslice.iter().map(|&f| c.id(c.cod(f))).collect();
    families.sort();
    families.retain(|f| *f != identity);
    families.insert(0, identity);
    let index: HashMap<Vec<MorId>, Elem> = families.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
    let k = families.len();
    let mut table = Vec::with_capacity(k * k);
    for a in &families {
        for b in &families {
            let prod: Vec<MorId> = a.iter().zip(b).map(|(&p, &q)| c.comp(p, q)).collect();
            table.push(index[&prod]);
        }
    }
    let group = FinGroup::from_table(k, table, None).expect("pointwise composition of natural automorphisms is a group");
    IsotropyGroup {
        object: x,
        coslice,
        group,
        elements: families.into_iter().map(|components| IsotropyElement { components }).collect(),
        index,
        position,
    }
}

/// `Z(x): Z(X) → Z(Y)` for `x: X → Y`, sending `α` to `f ↦ α_{f∘x}`.
pub fn isotropy_functor_action(c: &FinCategory, x: MorId, zx: &IsotropyGroup, zy: &IsotropyGroup) -> Result<GroupHom> {
    if c.dom(x) != zx.object || c.cod(x) != zy.object {
        return Err(Error::ComponentMismatch(format!("{} does not go from Z's object to Z's object", c.mor_name(x))));
    }
    let map = zx
        .group
        .elements()
        .map(|alpha| {
            let family: Vec<MorId> = zy.coslice.iter().map(|&f| zx.component(alpha, c.comp(f, x))).collect();
            zy.element_of(&family)
                .ok_or_else(|| Error::ComponentMismatch(format!("reindexed family {family:?} is not natural")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupHom::new(map))
}

/// `δ: Z(X) → Aut(X)`, `α ↦ α_{1_X}`.
pub fn delta(c: &FinCategory, z: &IsotropyGroup) -> Result<(GroupHom, AutGroup)> {
    let aut = c.automorphism_group(z.object)?;
    let id = c.id(z.object);
    let map = z
        .group
        .elements()
        .map(|alpha| {
            let m = z.component(alpha, id);
            aut.element_of(m).ok_or_else(|| Error::ComponentMismatch(format!("{} is not invertible", c.mor_name(m))))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((GroupHom::new(map), aut))
}

/// The isotropy crossed module: `Z(A)` at each object, `Z(f)` on morphisms
/// and `γ = δ`.
pub fn isotropy_module(c: &FinCategory, budget: Budget) -> Result<CrossedModule> {
    let zs = c.objects().map(|a| compute_isotropy(c, a, budget)).collect::<Result<Vec<_>>>()?;
    let actions = c
        .morphisms()
        .map(|f| isotropy_functor_action(c, f, &zs[c.dom(f)], &zs[c.cod(f)]))
        .collect::<Result<Vec<_>>>()?;
    let id_of = |z: &IsotropyGroup| z.group.elements().map(|a| z.component(a, c.id(z.object))).collect();
    let gamma = zs.iter().map(id_of).collect();
    let groups = zs.into_iter().map(|z| z.group).collect();
    CrossedModule::new(c.clone(), groups, actions, gamma)
}

/// The comparison `G → Z`, the morphism-over-identity report, and the
/// outcome of the uniqueness search.
#[derive(Debug, Clone)]
pub struct Comparison {
    pub isotropy: Vec<IsotropyGroup>,
    /// `components[A]: G(A) → Z(A)`
    pub components: Vec<GroupHom>,
    pub report: ValidationReport,
    /// Number of crossed-module morphisms `G → Z` over the identity,
    /// counted up to 2.
    pub morphisms_found: usize,
}

impl Comparison {
    pub fn is_unique(&self) -> bool {
        self.morphisms_found == 1
    }

    pub fn is_injective(&self) -> bool {
        self.components.iter().all(GroupHom::is_injective)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().zip(&self.isotropy).all(|(h, z)| h.is_bijective(&z.group))
    }
}

/// Sends `α ∈ G(A)` to the family `f ↦ γ_B(G(f)α)`, checks that this is a
/// crossed-module morphism over the identity, and searches all candidate
/// component homomorphisms for another one.
pub fn canonical_comparison(xm: &CrossedModule, budget: Budget) -> Result<Comparison> {
    let c = &xm.base;
    let isotropy = c.objects().map(|a| compute_isotropy(c, a, budget)).collect::<Result<Vec<_>>>()?;
    let mut components = Vec::with_capacity(c.object_count());
    for a in c.objects() {
        let z = &isotropy[a];
        let map = xm.groups[a]
            .elements()
            .map(|alpha| {
                let family: Vec<MorId> = z.coslice.iter().map(|&f| xm.gamma(c.cod(f), xm.act(f, alpha))).collect();
                z.element_of(&family).ok_or_else(|| {
                    Error::ImageEscapes(format!("image of {} at {} is not natural", xm.groups[a].name(alpha), c.obj_name(a)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        components.push(GroupHom::new(map));
    }
    let z_actions = c
        .morphisms()
        .map(|f| isotropy_functor_action(c, f, &isotropy[c.dom(f)], &isotropy[c.cod(f)]))
        .collect::<Result<Vec<_>>>()?;

    let mut report = ValidationReport::new("comparison G → Z");
    for a in c.objects() {
        report.check(components[a].is_hom(&xm.groups[a], &isotropy[a].group), "sigma-hom", &[a], || {
            format!("component at {} is not a homomorphism", c.obj_name(a))
        });
        report.check(compatible(xm, &isotropy[a], &components[a]), "compatibility", &[a], || {
            format!("δ∘σ ≠ γ at {}", c.obj_name(a))
        });
    }
    for f in c.morphisms() {
        report.check(natural(xm, &z_actions, &components, f), "sigma-naturality", &[f], || {
            format!("σ is not natural at {}", c.mor_name(f))
        });
    }

    // backtrack over per-object candidates passing compatibility
    let mut candidates = Vec::with_capacity(c.object_count());
    for a in c.objects() {
        let homs = hom_set(&xm.groups[a], &isotropy[a].group, budget)?;
        candidates.push(homs.into_iter().filter(|h| compatible(xm, &isotropy[a], h)).collect::<Vec<_>>());
    }
    let mut meter = budget.meter("canonical_comparison");
    let mut chosen: Vec<GroupHom> = Vec::new();
    let mut found = 0;
    count_morphisms(xm, &z_actions, &candidates, &mut chosen, &mut found, &mut meter)?;
    Ok(Comparison { isotropy, components, report, morphisms_found: found })
}

fn compatible(xm: &CrossedModule, z: &IsotropyGroup, sigma: &GroupHom) -> bool {
    let id = xm.base.id(z.object);
    xm.groups[z.object].elements().all(|alpha| z.component(sigma.apply(alpha), id) == xm.gamma(z.object, alpha))
}

fn natural(xm: &CrossedModule, z_actions: &[GroupHom], sigma: &[GroupHom], f: MorId) -> bool {
    let a = xm.base.dom(f);
    xm.groups[a]
        .elements()
        .all(|alpha| sigma[xm.base.cod(f)].apply(xm.act(f, alpha)) == z_actions[f].apply(sigma[a].apply(alpha)))
}

fn count_morphisms(
    xm: &CrossedModule,
    z_actions: &[GroupHom],
    candidates: &[Vec<GroupHom>],
    chosen: &mut Vec<GroupHom>,
    found: &mut usize,
    meter: &mut Meter,
) -> Result<()> {
    let c = &xm.base;
    let a = chosen.len();
    if a == c.object_count() {
        *found += 1;
        return Ok(());
    }
    for h in &candidates[a] {
        meter.tick()?;
        chosen.push(h.clone());
        let ok = c
            .morphisms()
            .filter(|&f| c.dom(f).max(c.cod(f)) == a)
            .all(|f| natural(xm, z_actions, chosen, f));
        if ok {
            count_morphisms(xm, z_actions, candidates, chosen, found, meter)?;
        }
        chosen.pop();
        if *found >= 2 {
            break;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::library;
    use crate::xmod::{conjugation_module_delooping, validate_crossed_module};

    #[test]
    fn deloopings() {
        let bz2 = FinCategory::delooping(&library::cyclic(2));
        assert_eq!(compute_isotropy(&bz2, 0, Budget::DEFAULT).unwrap().order(), 2);
        let bs3 = FinCategory::delooping(&library::s3());
        let z = compute_isotropy(&bs3, 0, Budget::DEFAULT).unwrap();
        assert_eq!(z.order(), 6);
        let (d, aut) = delta(&bs3, &z).unwrap();
        assert!(d.is_injective());
        assert!(d.is_hom(&z.group, &aut.group));
        let zd = compute_isotropy(&FinCategory::discrete(2), 1, Budget::DEFAULT).unwrap();
        assert!(zd.group.is_trivial());
    }

    #[test]
    fn reindexing_by_identity_is_identity() {
        let bz2 = FinCategory::delooping(&library::cyclic(2));
        let z = compute_isotropy(&bz2, 0, Budget::DEFAULT).unwrap();
        assert!(isotropy_functor_action(&bz2, 0, &z, &z).unwrap().is_identity());
        assert!(isotropy_functor_action(&bz2, 1, &z, &z).unwrap().is_identity());
    }

    #[test]
    fn isotropy_module_is_a_crossed_module() {
        for c in [FinCategory::delooping(&library::s3()), FinCategory::span(), FinCategory::parallel_pair()] {
            let xm = isotropy_module(&c, Budget::DEFAULT).unwrap();
            assert!(validate_crossed_module(&xm).is_valid());
        }
    }

    #[test]
    fn comparison_on_bs3_is_a_unique_isomorphism() {
        let xm = conjugation_module_delooping(&library::s3());
        let cmp = canonical_comparison(&xm, Budget::DEFAULT).unwrap();
        assert!(cmp.report.is_valid());
        assert!(cmp.is_isomorphism());
        assert!(cmp.is_unique());
    }

    #[test]
    fn budget_is_enforced() {
        let bs3 = FinCategory::delooping(&library::s3());
        assert!(compute_isotropy(&bs3, 0, Budget(3)).unwrap_err().is_budget());
    }
}
