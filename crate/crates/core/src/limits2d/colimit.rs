use std::collections::HashSet;

use super::conical::{check_2d_colimit, colimit_1d};
use super::{exists, not_exists, settle, Cocone, Diagram, SearchVerdict, Witness};
use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::fincat::{MorId, ObjId};
use crate::groupkit::{hom_set, Elem, FinGroup};
use crate::twocat::TwoCell;
use crate::xmod::CrossedModule;

/// Shapes accepted by [`search_weighted_colimit`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColimitShape {
    /// Cocones `(c, θ)` with `θ: cf ⇒ cg` for `f, g: A ⇉ B`.
    Coinserter { f: MorId, g: MorId },
    /// Cocones `c` with `c*α = c*β`.
    Coequifier { alpha: TwoCell, beta: TwoCell },
    /// Cocones `c` with `c*α` an identity.
    Coidentifier { alpha: TwoCell },
    /// `K ⊗ B`: cocones are a 1-cell `c` out of `B` and a homomorphism
    /// from `K` into the automorphisms of `c`.
    TensorByGroup { group: FinGroup, object: ObjId },
    /// Tensor by the free group on `letters` generators.
    TensorByFree { letters: usize, object: ObjId },
    Coproduct { a: ObjId, b: ObjId },
    TwoInitial,
}

impl ColimitShape {
    pub fn name(&self) -> &'static str {
        match self {
            ColimitShape::Coinserter { .. } => "coinserter",
            ColimitShape::Coequifier { .. } => "coequifier",
            ColimitShape::Coidentifier { .. } => "coidentifier",
            ColimitShape::TensorByGroup { .. } => "tensor-by-group",
            ColimitShape::TensorByFree { .. } => "tensor-by-free",
            ColimitShape::Coproduct { .. } => "coproduct",
            ColimitShape::TwoInitial => "two-initial",
        }
    }
}

/// A cocone for a single-cell shape: a 1-cell out of the source object and
/// a list of elements of the apex group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct CellCocone {
    leg: MorId,
    elements: Vec<Elem>,
}

impl CellCocone {
    fn reindex(&self, xm: &CrossedModule, q: MorId) -> CellCocone {
        CellCocone { leg: xm.base.comp(q, self.leg), elements: self.elements.iter().map(|&e| xm.act(q, e)).collect() }
    }
}

struct CellShape<'a> {
    xm: &'a CrossedModule,
    shape: &'a ColimitShape,
    source: ObjId,
}

impl CellShape<'_> {
    fn cocones(&self, x: ObjId, meter: &mut Meter) -> Result<Vec<CellCocone>> {
        let (xm, c) = (self.xm, &self.xm.base);
        let grp = &xm.groups[x];
        let mut out = Vec::new();
        for &leg in c.hom(self.source, x) {
            meter.tick()?;
            let fixes = |e: Elem| c.comp(xm.gamma(x, e), leg) == leg;
            match self.shape {
                ColimitShape::Coinserter { f, g } => {
                    let (cf, cg) = (c.comp(leg, *f), c.comp(leg, *g));
                    for t in grp.elements().filter(|&t| c.comp(xm.gamma(x, t), cf) == cg) {
                        out.push(CellCocone { leg, elements: vec![t] });
                    }
                }
                ColimitShape::Coequifier { alpha, beta } => {
                    if xm.act(leg, alpha.element) == xm.act(leg, beta.element) {
                        out.push(CellCocone { leg, elements: vec![] });
                    }
                }
                ColimitShape::Coidentifier { alpha } => {
                    let tgt = alpha.tgt(xm);
                    if c.comp(leg, alpha.src) == c.comp(leg, tgt) && xm.act(leg, alpha.element) == 0 {
                        out.push(CellCocone { leg, elements: vec![] });
                    }
                }
                ColimitShape::TensorByGroup { group, .. } => {
                    for h in hom_set(group, grp, Budget(meter.remaining()))? {
                        if group.elements().all(|k| fixes(h.apply(k))) {
                            out.push(CellCocone { leg, elements: group.elements().map(|k| h.apply(k)).collect() });
                        }
                    }
                }
                ColimitShape::TensorByFree { letters, .. } => {
                    let stab: Vec<Elem> = grp.elements().filter(|&e| fixes(e)).collect();
                    let mut idx = vec![0usize; *letters];
                    loop {
                        meter.tick()?;
                        out.push(CellCocone { leg, elements: idx.iter().map(|&i| stab[i]).collect() });
                        let Some(p) = (0..idx.len()).rev().find(|&p| idx[p] + 1 < stab.len()) else { break };
                        idx[p] += 1;
                        idx[p + 1..].iter_mut().for_each(|i| *i = 0);
                    }
                }
                ColimitShape::Coproduct { .. } | ColimitShape::TwoInitial => unreachable!("handled conically"),
            }
        }
        Ok(out)
    }

    fn check_1d(&self, lambda: &CellCocone, apex: ObjId, all: &[HashSet<CellCocone>]) -> Option<Witness> {
        let c = &self.xm.base;
        for k in c.objects() {
            let maps = c.hom(apex, k);
            let mut seen = HashSet::new();
            for &q in maps {
                let image = lambda.reindex(self.xm, q);
                if !all[k].contains(&image) || !seen.insert(image) {
                    return Some(
                        Witness::new("one-dimensional", format!("two maps to {} induce the same cocone", c.obj_name(k)))
                            .apex(k)
                            .morphisms(vec![q]),
                    );
                }
            }
            if maps.len() != all[k].len() {
                let missed = all[k].iter().filter(|x| !seen.contains(*x)).min().expect("missed cocone");
                return Some(
                    Witness::new("one-dimensional", format!("a cocone at {} does not factor through the candidate", c.obj_name(k)))
                        .apex(k)
                        .morphisms(vec![missed.leg])
                        .elements(missed.elements.clone()),
                );
            }
        }
        None
    }

    /// Every 2-cell `ρ: qc ⇒ rc` compatible with the cocone elements is
    /// `σ*c` for exactly one `σ: q ⇒ r`; right whiskering keeps elements,
    /// so `σ = ρ` and only `γ(ρ)q = r` needs checking.
    fn check_2d(&self, lambda: &CellCocone, apex: ObjId, meter: &mut Meter) -> Result<Option<Witness>> {
        let (xm, c) = (self.xm, &self.xm.base);
        for k in c.objects() {
            let grp = &xm.groups[k];
            for &q in c.hom(apex, k) {
                let cq = lambda.reindex(xm, q);
                for &r in c.hom(apex, k) {
                    let cr = lambda.reindex(xm, r);
                    for rho in grp.elements() {
                        meter.tick()?;
                        let typed = c.comp(xm.gamma(k, rho), cq.leg) == cr.leg;
                        let compatible = cq
                            .elements
                            .iter()
                            .zip(&cr.elements)
                            .all(|(&a, &b)| grp.mul(rho, a) == grp.mul(b, rho));
                        if typed && compatible && c.comp(xm.gamma(k, rho), q) != r {
                            return Ok(Some(
                                Witness::new(
                                    "two-dimensional",
                                    format!(
                                        "2-cell between cocones through {} and {} is not induced by a 2-cell between the maps",
                                        c.mor_name(q),
                                        c.mor_name(r)
                                    ),
                                )
                                .apex(k)
                                .morphisms(vec![q, r])
                                .elements(vec![rho]),
                            ));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    fn search(&self, budget: Budget) -> Result<SearchVerdict> {
        let c = &self.xm.base;
        let mut meter = budget.meter("search_weighted_colimit");
        let all: Vec<Vec<CellCocone>> = c.objects().map(|x| self.cocones(x, &mut meter)).collect::<Result<_>>()?;
        let sets: Vec<HashSet<CellCocone>> = all.iter().map(|v| v.iter().cloned().collect()).collect();
        let mut first_failure = None;
        let mut rejected = 0usize;
        for (x, row) in all.iter().enumerate() {
            for lambda in row {
                let failure = match self.check_1d(lambda, x, &sets) {
                    Some(w) => Some(w),
                    None => self.check_2d(lambda, x, &mut meter)?,
                };
                match failure {
                    None => {
                        let iso = c.objects().filter(|&y| c.are_isomorphic(x, y)).count();
                        return Ok(exists(
                            Witness::new(self.shape.name(), format!("colimit at {}", c.obj_name(x)))
                                .apex(x)
                                .morphisms(vec![lambda.leg])
                                .elements(lambda.elements.clone())
                                .iso_class(iso),
                        ));
                    }
                    Some(w) => {
                        rejected += 1;
                        first_failure.get_or_insert((x, lambda.clone(), w));
                    }
                }
            }
        }
        Ok(not_exists(match first_failure {
            None => Witness::new("no-cocones", "no object carries a cocone"),
            Some((x, lambda, w)) => Witness::new(
                &w.kind,
                format!(
                    "all {rejected} cocones fail; least candidate ({} at {}, elements {:?}) fails: {}",
                    c.mor_name(lambda.leg),
                    c.obj_name(x),
                    lambda.elements,
                    w.detail
                ),
            )
            .apex(w.apex.unwrap_or(x))
            .morphisms(w.morphisms)
            .elements(w.elements),
        }))
    }
}

fn check_cell(xm: &CrossedModule, t: &TwoCell) -> Result<()> {
    if t.src >= xm.base.morphism_count() {
        return Err(Error::UnknownMorphism(t.src));
    }
    if t.element >= xm.groups[xm.base.cod(t.src)].order() {
        return Err(Error::ShapeMismatch(format!("element {} out of range for 2-cell on {}", t.element, t.src)));
    }
    Ok(())
}

/// Exhaustive search for a two-dimensional colimit of `shape` in `C_G`.
pub fn search_weighted_colimit(xm: &CrossedModule, shape: &ColimitShape, budget: Budget) -> Result<SearchVerdict> {
    let c = &xm.base;
    let obj = |a: ObjId| if a < c.object_count() { Ok(a) } else { Err(Error::UnknownObject(a)) };
    let source = match shape {
        ColimitShape::Coinserter { f, g } => {
            for &m in [f, g] {
                if m >= c.morphism_count() {
                    return Err(Error::UnknownMorphism(m));
                }
            }
            if c.dom(*f) != c.dom(*g) || c.cod(*f) != c.cod(*g) {
                return Err(Error::NotParallel { f: *f, g: *g });
            }
            c.cod(*f)
        }
        ColimitShape::Coequifier { alpha, beta } => {
            check_cell(xm, alpha)?;
            check_cell(xm, beta)?;
            if alpha.src != beta.src || alpha.tgt(xm) != beta.tgt(xm) {
                return Err(Error::NotParallel { f: alpha.src, g: beta.src });
            }
            c.cod(alpha.src)
        }
        ColimitShape::Coidentifier { alpha } => {
            check_cell(xm, alpha)?;
            c.cod(alpha.src)
        }
        ColimitShape::TensorByGroup { object, .. } | ColimitShape::TensorByFree { object, .. } => obj(*object)?,
        ColimitShape::Coproduct { a, b } => {
            let d = Diagram::discrete(&[obj(*a)?, obj(*b)?], c);
            return settle((|| match colimit_1d(c, &d, budget)? {
                None => Ok(not_exists(Witness::new("no-1d-colimit", "the coproduct does not exist in the base"))),
                Some(u) => check_2d_colimit(xm, &d, &Cocone { apex: u.apex, legs: u.legs }, budget),
            })());
        }
        ColimitShape::TwoInitial => return Ok(two_initial(xm)),
    };
    settle(CellShape { xm, shape, source }.search(budget))
}

/// An initial object is 2-initial exactly when every `C_G(0, B)` has a
/// single 2-cell.
fn two_initial(xm: &CrossedModule) -> SearchVerdict {
    let c = &xm.base;
    let Some(zero) = c.initial_object() else {
        return not_exists(Witness::new("no-initial-object", "no object is initial in the base"));
    };
    match c.objects().find(|&b| xm.groups[b].order() >= 2) {
        Some(b) => {
            let bang = c.hom(zero, b)[0];
            not_exists(
                Witness::new(
                    "two-initial",
                    format!("distinct 2-cells {} ⇒ {} given by elements 0 and 1 of G({})", c.mor_name(bang), c.mor_name(bang), c.obj_name(b)),
                )
                .apex(b)
                .morphisms(vec![bang])
                .elements(vec![0, 1]),
            )
        }
        None => exists(Witness::new("two-initial", "every 2-cell out of the initial object is an identity").apex(zero)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinCategory;
    use crate::groupkit::library;
    use crate::xmod::conjugation_module_delooping;

    #[test]
    fn coinserter_of_equal_maps_under_trivial_module() {
        let xm = CrossedModule::trivial(FinCategory::walking_arrow());
        let f = xm.base.hom(0, 1)[0];
        let v = search_weighted_colimit(&xm, &ColimitShape::Coinserter { f, g: f }, Budget::DEFAULT).unwrap();
        let w = v.witness().unwrap();
        assert!(v.exists());
        assert_eq!((w.apex, w.elements.clone()), (Some(1), vec![0]));
    }

    #[test]
    fn two_initial_fails_with_nontrivial_groups() {
        let xm = CrossedModule::trivial(FinCategory::walking_arrow());
        assert!(search_weighted_colimit(&xm, &ColimitShape::TwoInitial, Budget::DEFAULT).unwrap().exists());
        let xm = conjugation_module_delooping(&library::cyclic(2));
        let v = search_weighted_colimit(&xm, &ColimitShape::TwoInitial, Budget::DEFAULT).unwrap();
        assert!(v.not_exists());
    }

    #[test]
    fn tensors_in_trivial_module() {
        let xm = CrossedModule::trivial(FinCategory::walking_arrow());
        let v = search_weighted_colimit(&xm, &ColimitShape::TensorByFree { letters: 2, object: 0 }, Budget::DEFAULT).unwrap();
        assert!(v.exists());
        let shape = ColimitShape::TensorByGroup { group: library::cyclic(3), object: 0 };
        assert!(search_weighted_colimit(&xm, &shape, Budget::DEFAULT).unwrap().exists());
    }
}
