//! The 2-category `C_G` induced by a crossed module.
//!
//! A 2-cell `f ⇒ g` between `f, g: A → B` is an element `α ∈ G(B)` with
//! `γ(α)∘f = g`. Cells are stored as `(src, element)`; the target is
//! always recomputed.

mod data;

pub use data::{
    build_two_category, check_contractible_loops, check_locally_groupoidal, extract_crossed_module, initial_hom_check,
    TwoCategoryData,
};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::{MorId, ObjId};
use crate::groupkit::Elem;
use crate::report::ValidationReport;
use crate::xmod::{validate_crossed_module, CrossedModule};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwoCell {
    pub src: MorId,
    pub element: Elem,
}

impl TwoCell {
    pub fn identity(f: MorId) -> Self {
        TwoCell { src: f, element: 0 }
    }

    /// `γ_B(α)∘f`
    pub fn tgt(&self, xm: &CrossedModule) -> MorId {
        let c = &xm.base;
        c.comp(xm.gamma(c.cod(self.src), self.element), self.src)
    }
}

/// The hom-groupoid `C_G(A, B)`.
#[derive(Debug, Clone)]
pub struct HomGroupoid {
    pub objects: Vec<MorId>,
    pub arrows: Vec<TwoCell>,
}

pub fn hom_groupoid(xm: &CrossedModule, a: ObjId, b: ObjId) -> HomGroupoid {
    let objects = xm.base.hom(a, b).to_vec();
    let arrows = objects
        .iter()
        .flat_map(|&f| xm.groups[b].elements().map(move |e| TwoCell { src: f, element: e }))
        .collect();
    HomGroupoid { objects, arrows }
}

/// All `α ∈ G(B)` with `γ(α)∘f = g`.
pub fn two_cells(xm: &CrossedModule, f: MorId, g: MorId) -> Result<Vec<TwoCell>> {
    let c = &xm.base;
    if c.dom(f) != c.dom(g) || c.cod(f) != c.cod(g) {
        return Err(Error::NotParallel { f, g });
    }
    Ok(xm.groups[c.cod(f)]
        .elements()
        .map(|e| TwoCell { src: f, element: e })
        .filter(|a| a.tgt(xm) == g)
        .collect())
}

/// `β∘α`, defined when `tgt α = src β`; the element is `β·α`.
pub fn vcompose(xm: &CrossedModule, beta: TwoCell, alpha: TwoCell) -> Result<TwoCell> {
    if alpha.tgt(xm) != beta.src {
        return Err(Error::ShapeMismatch(format!(
            "vertical composite needs tgt α = src β, got {} and {}",
            xm.base.mor_name(alpha.tgt(xm)),
            xm.base.mor_name(beta.src)
        )));
    }
    let grp = &xm.groups[xm.base.cod(alpha.src)];
    Ok(TwoCell { src: alpha.src, element: grp.mul(beta.element, alpha.element) })
}

/// Vertical inverse `α⁻¹: g ⇒ f`.
pub fn vinverse(xm: &CrossedModule, alpha: TwoCell) -> TwoCell {
    let grp = &xm.groups[xm.base.cod(alpha.src)];
    TwoCell { src: alpha.tgt(xm), element: grp.inv(alpha.element) }
}

fn check_horizontal(xm: &CrossedModule, beta: TwoCell, alpha: TwoCell) -> Result<()> {
    let c = &xm.base;
    if c.cod(alpha.src) != c.dom(beta.src) {
        return Err(Error::ShapeMismatch(format!(
            "horizontal composite needs composable 1-cells, got {} and {}",
            c.mor_name(alpha.src),
            c.mor_name(beta.src)
        )));
    }
    Ok(())
}

/// `β*α` for `α: f₁ ⇒ g₁` and `β: f₂ ⇒ g₂`, with element `β·G(f₂)(α)`.
pub fn hcompose(xm: &CrossedModule, beta: TwoCell, alpha: TwoCell) -> Result<TwoCell> {
    check_horizontal(xm, beta, alpha)?;
    let c = &xm.base;
    let grp = &xm.groups[c.cod(beta.src)];
    let element = grp.mul(beta.element, xm.act(beta.src, alpha.element));
    Ok(TwoCell { src: c.comp(beta.src, alpha.src), element })
}

/// `β*α` through the other formula `(G(g₂)α)·β`.
pub fn hcompose_alt(xm: &CrossedModule, beta: TwoCell, alpha: TwoCell) -> Result<TwoCell> {
    check_horizontal(xm, beta, alpha)?;
    let c = &xm.base;
    let grp = &xm.groups[c.cod(beta.src)];
    let element = grp.mul(xm.act(beta.tgt(xm), alpha.element), beta.element);
    Ok(TwoCell { src: c.comp(beta.src, alpha.src), element })
}

/// `h*α = 1_h * α`; the element is `G(h)α`.
pub fn whisker_left(xm: &CrossedModule, h: MorId, alpha: TwoCell) -> Result<TwoCell> {
    hcompose(xm, TwoCell::identity(h), alpha)
}

/// `α*h = α * 1_h`; the element is unchanged.
pub fn whisker_right(xm: &CrossedModule, alpha: TwoCell, h: MorId) -> Result<TwoCell> {
    hcompose(xm, alpha, TwoCell::identity(h))
}

fn cells_from(xm: &CrossedModule, a: ObjId) -> Vec<TwoCell> {
    let c = &xm.base;
    c.out_of(a)
        .into_iter()
        .flat_map(|f| xm.groups[c.cod(f)].elements().map(move |e| TwoCell { src: f, element: e }))
        .collect()
}

fn all_cells(xm: &CrossedModule) -> Vec<TwoCell> {
    xm.base.objects().flat_map(|a| cells_from(xm, a)).collect()
}

/// Exhaustive check of the 2-category axioms of `C_G`: vertical and
/// horizontal associativity and units, interchange, and agreement of the
/// two horizontal formulas.
///
/// An invalid crossed module is reported as such and not examined further.
pub fn validate_two_category(xm: &CrossedModule) -> ValidationReport {
    let base = validate_crossed_module(xm);
    if !base.is_valid() {
        let mut r = ValidationReport::new("2-category");
        r.merge(base);
        return r;
    }
    let c = &xm.base;
    let cells = all_cells(xm);
    let h = |b: TwoCell, a: TwoCell| hcompose_alt(xm, b, a).and_then(|alt| hcompose(xm, b, a).map(|x| (x, alt)));
    let v = |b: TwoCell, a: TwoCell| vcompose(xm, b, a).expect("composable");
    // cells out of each 1-cell, so vertical chains are enumerated directly
    let over = |f: MorId| xm.groups[c.cod(f)].elements().map(move |e| TwoCell { src: f, element: e });

    let parts: Vec<ValidationReport> = cells
        .par_iter()
        .map(|&a| {
            let mut r = ValidationReport::new("2-category");
            let f = a.src;
            let id_f = TwoCell::identity(f);
            r.check(v(a, id_f) == a && v(TwoCell::identity(a.tgt(xm)), a) == a, "vertical-unit", &[f, a.element], || {
                format!("identity 2-cell is not a vertical unit at ({}, {})", c.mor_name(f), a.element)
            });
            let (ha, _) = h(TwoCell::identity(c.id(c.cod(f))), a).expect("composable");
            let (ah, _) = h(a, TwoCell::identity(c.id(c.dom(f)))).expect("composable");
            r.check(ha == a && ah == a, "horizontal-unit", &[f, a.element], || {
                format!("identity on an identity is not a horizontal unit at ({}, {})", c.mor_name(f), a.element)
            });
            for b in over(a.tgt(xm)) {
                for g in over(b.tgt(xm)) {
                    r.check(v(g, v(b, a)) == v(v(g, b), a), "vertical-associativity", &[f, a.element, b.element, g.element], || {
                        "vertical composition is not associative".into()
                    });
                }
            }
            for b in cells_from(xm, c.cod(f)) {
                let (ba, ba_alt) = h(b, a).expect("composable");
                r.check(ba == ba_alt, "horizontal-formulas", &[f, a.element, b.src, b.element], || {
                    format!("β·G(f₂)(α) = {} but (G(g₂)α)·β = {}", ba.element, ba_alt.element)
                });
                for g in cells_from(xm, c.cod(b.src)) {
                    let lhs = h(g, ba).expect("composable").0;
                    let rhs = h(h(g, b).expect("composable").0, a).expect("composable").0;
                    r.check(lhs == rhs, "horizontal-associativity", &[f, a.element, b.src, b.element, g.src, g.element], || {
                        "horizontal composition is not associative".into()
                    });
                }
                // interchange over α' after α and β' after β
                for a2 in over(a.tgt(xm)) {
                    for b2 in over(b.tgt(xm)) {
                        let lhs = h(v(b2, b), v(a2, a)).expect("composable").0;
                        let rhs = v(h(b2, a2).expect("composable").0, ba);
                        r.check(lhs == rhs, "interchange", &[f, a.element, a2.element, b.src, b.element, b2.element], || {
                            format!("(β'∘β)*(α'∘α) = {} but (β'*α')∘(β*α) = {}", lhs.element, rhs.element)
                        });
                    }
                }
            }
            r
        })
        .collect();
    let mut r = ValidationReport::new("2-category");
    for p in parts {
        r.merge(p);
    }
    r
}
