use std::collections::HashMap;

use super::{hcompose, vcompose, TwoCell};
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, MorId};
use crate::groupkit::{FinGroup, GroupHom};
use crate::report::ValidationReport;
use crate::xmod::CrossedModule;

/// An explicit finite 2-category over `base`: 2-cell `i` goes from
/// `cells[i].0` to `cells[i].1`, and the composition tables are keyed by
/// `β·k + α` for `k` cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCategoryData {
    pub base: FinCategory,
    pub cells: Vec<(MorId, MorId)>,
    /// Identity 2-cell on each 1-cell.
    pub identity: Vec<usize>,
    pub vcomp: Vec<Option<usize>>,
    pub hcomp: Vec<Option<usize>>,
}

impl TwoCategoryData {
    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn v(&self, beta: usize, alpha: usize) -> Option<usize> {
        self.vcomp[beta * self.cells.len() + alpha]
    }

    pub fn h(&self, beta: usize, alpha: usize) -> Option<usize> {
        self.hcomp[beta * self.cells.len() + alpha]
    }

    fn loops_at(&self, b: usize) -> Vec<usize> {
        let id = self.base.id(b);
        let unit = self.identity[id];
        std::iter::once(unit)
            .chain((0..self.cells.len()).filter(|&i| i != unit && self.cells[i].0 == id))
            .collect()
    }
}

/// Tabulates `C_G`. Cells are listed by source 1-cell and then by element,
/// so cell ids follow `(src, element)` order; the second component maps
/// cell ids back to their labels.
pub fn build_two_category(xm: &CrossedModule) -> (TwoCategoryData, Vec<TwoCell>) {
    let c = &xm.base;
    let mut labels = Vec::new();
    let mut offset = Vec::with_capacity(c.morphism_count());
    for f in c.morphisms() {
        offset.push(labels.len());
        labels.extend(xm.groups[c.cod(f)].elements().map(|e| TwoCell { src: f, element: e }));
    }
    let id_of = |t: TwoCell| offset[t.src] + t.element;
    let k = labels.len();
    let cells = labels.iter().map(|t| (t.src, t.tgt(xm))).collect();
    let mut vcomp = vec![None; k * k];
    let mut hcomp = vec![None; k * k];
    for (i, &b) in labels.iter().enumerate() {
        for (j, &a) in labels.iter().enumerate() {
            if let Ok(x) = vcompose(xm, b, a) {
                vcomp[i * k + j] = Some(id_of(x));
            }
            if let Ok(x) = hcompose(xm, b, a) {
                hcomp[i * k + j] = Some(id_of(x));
            }
        }
    }
    let identity = c.morphisms().map(|f| offset[f]).collect();
    (TwoCategoryData { base: c.clone(), cells, identity, vcomp, hcomp }, labels)
}

/// Every 2-cell has a two-sided vertical inverse.
pub fn check_locally_groupoidal(d: &TwoCategoryData) -> ValidationReport {
    let mut r = ValidationReport::new("locally groupoidal");
    for (a, &(f, g)) in d.cells.iter().enumerate() {
        let ok = (0..d.cell_count()).any(|b| {
            d.cells[b] == (g, f) && d.v(b, a) == Some(d.identity[f]) && d.v(a, b) == Some(d.identity[g])
        });
        r.check(ok, "vertical-inverse", &[a], || format!("2-cell {a} has no vertical inverse"));
    }
    r
}

/// Every 2-cell `α: f ⇒ g` with `f: A → B` is `β * 1_f` for exactly one
/// `β` with source `1_B`.
pub fn check_contractible_loops(d: &TwoCategoryData) -> ValidationReport {
    let mut r = ValidationReport::new("contractible loops");
    for (a, &(f, _)) in d.cells.iter().enumerate() {
        let b = d.base.cod(f);
        let n = d.loops_at(b).into_iter().filter(|&beta| d.h(beta, d.identity[f]) == Some(a)).count();
        r.check(n == 1, "loop-decomposition", &[a], || format!("2-cell {a} has {n} loop decompositions"));
    }
    r
}

/// Recovers `(G, γ)` from a 2-category passing both structural checks:
/// `G(B)` is the set of 2-cells out of `1_B` under `β₂⊙β₁ = (β₂ * 1_{u₁})∘β₁`
/// (with `u₁` the target of `β₁`), `G(f)β` is the loop part of `1_f * β`,
/// and `γ(β)` is the target 1-cell of `β`. Identity cells come first.
pub fn extract_crossed_module(d: &TwoCategoryData) -> Result<CrossedModule> {
    for r in [check_locally_groupoidal(d), check_contractible_loops(d)] {
        if let Some(v) = r.violations.first() {
            return Err(Error::Precondition(format!("{}: {}", r.subject, v.detail)));
        }
    }
    let c = &d.base;
    let missing = |what: &str| Error::Precondition(format!("{what} undefined"));
    let loops: Vec<Vec<usize>> = c.objects().map(|b| d.loops_at(b)).collect();
    let index: Vec<HashMap<usize, usize>> =
        loops.iter().map(|l| l.iter().enumerate().map(|(i, &x)| (x, i)).collect()).collect();
    let mut groups = Vec::with_capacity(c.object_count());
    for b in c.objects() {
        let n = loops[b].len();
        let mut table = Vec::with_capacity(n * n);
        for &b2 in &loops[b] {
            for &b1 in &loops[b] {
                let u1 = d.cells[b1].1;
                let w = d.h(b2, d.identity[u1]).ok_or_else(|| missing("whisker"))?;
                let p = d.v(w, b1).ok_or_else(|| missing("vertical composite"))?;
                table.push(*index[b].get(&p).ok_or_else(|| Error::Precondition("product of loops is not a loop".into()))?);
            }
        }
        groups.push(FinGroup::from_table(n, table, None)?);
    }
    let mut actions = Vec::with_capacity(c.morphism_count());
    for f in c.morphisms() {
        let (b, t) = (c.dom(f), c.cod(f));
        let map = loops[b]
            .iter()
            .map(|&beta| {
                let w = d.h(d.identity[f], beta).ok_or_else(|| missing("whisker"))?;
                loops[t]
                    .iter()
                    .position(|&x| d.h(x, d.identity[f]) == Some(w))
                    .ok_or_else(|| Error::Precondition("whiskered loop has no decomposition".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        actions.push(GroupHom::new(map));
    }
    let gamma = loops.iter().map(|l| l.iter().map(|&x| d.cells[x].1).collect()).collect();
    CrossedModule::new(c.clone(), groups, actions, gamma)
}

/// With `0` initial, each `C_G(0, A)` has the single object `!` and exactly
/// `|G(A)|` 2-cells, composing as in `G(A)`.
pub fn initial_hom_check(xm: &CrossedModule) -> ValidationReport {
    let c = &xm.base;
    let Some(zero) = c.initial_object() else {
        return ValidationReport::not_applicable("initial hom-groupoids", "base has no initial object");
    };
    let mut r = ValidationReport::new("initial hom-groupoids");
    for a in c.objects() {
        let homs = c.hom(zero, a);
        r.check(homs.len() == 1, "single-object", &[a], || format!("C(0, {}) has {} objects", c.obj_name(a), homs.len()));
        let bang = homs[0];
        let cells = super::two_cells(xm, bang, bang).expect("parallel");
        let grp = &xm.groups[a];
        r.check(cells.len() == grp.order(), "arrow-count", &[a], || {
            format!("C_G(0, {}) has {} arrows, expected {}", c.obj_name(a), cells.len(), grp.order())
        });
        for &x in &cells {
            for &y in &cells {
                let ok = vcompose(xm, y, x).map(|z| z.element) == Ok(grp.mul(y.element, x.element));
                r.check(ok, "composition", &[a, y.element, x.element], || "composition differs from G(A)".into());
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::library;
    use crate::xmod::{conjugation_module_delooping, validate_crossed_module};

    fn round_trip(xm: &CrossedModule) {
        let (d, _) = build_two_category(xm);
        assert!(check_locally_groupoidal(&d).is_valid());
        assert!(check_contractible_loops(&d).is_valid());
        let back = extract_crossed_module(&d).unwrap();
        assert!(validate_crossed_module(&back).is_valid());
        for a in xm.base.objects() {
            assert!(back.groups[a].same_table(&xm.groups[a]));
        }
        assert_eq!(back.actions, xm.actions);
        assert_eq!(back.gamma, xm.gamma);
    }

    #[test]
    fn round_trips() {
        round_trip(&CrossedModule::trivial(FinCategory::span()));
        round_trip(&conjugation_module_delooping(&library::s3()));
        round_trip(&conjugation_module_delooping(&library::cyclic(4)));
    }

    #[test]
    fn broken_data_fails_the_precondition() {
        let (mut d, _) = build_two_category(&conjugation_module_delooping(&library::cyclic(2)));
        let k = d.cell_count();
        for x in d.vcomp.iter_mut().take(k) {
            *x = None;
        }
        assert!(matches!(extract_crossed_module(&d), Err(Error::Precondition(_))));
    }

    #[test]
    fn initial_hom_groupoids() {
        let xm = CrossedModule::trivial(FinCategory::walking_arrow());
        assert!(initial_hom_check(&xm).is_valid());
        let xm = CrossedModule::trivial(FinCategory::discrete(2));
        assert!(!initial_hom_check(&xm).is_applicable());
    }
}
