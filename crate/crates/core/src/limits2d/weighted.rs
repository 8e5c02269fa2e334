use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::conical::{limit_1d, Universal};
use super::csp::Csp;
use super::{exists, first_violation, not_exists, settle, Cone, Diagram, SearchVerdict, Witness};
use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, FinFunctor, MorId, ObjId};
use crate::groupkit::Elem;
use crate::report::ValidationReport;
use crate::twocat::{whisker_right, TwoCell};
use crate::xmod::CrossedModule;

/// A weight `W: J → Cat` with finite values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    pub values: Vec<FinCategory>,
    pub maps: Vec<FinFunctor>,
}

impl Weight {
    /// Constant at the terminal category.
    pub fn conical(j: &FinCategory) -> Self {
        let t = FinCategory::terminal();
        Weight {
            values: j.objects().map(|_| t.clone()).collect(),
            maps: j.morphisms().map(|_| FinFunctor::identity(&t)).collect(),
        }
    }

    /// Checks that each `W(u)` is a functor between the right values and
    /// that `W` preserves identities and composites.
    pub fn check(&self, j: &FinCategory) -> ValidationReport {
        let mut r = ValidationReport::new("weight");
        if self.values.len() != j.object_count() || self.maps.len() != j.morphism_count() {
            r.push("arity", &[], "one value per object and one functor per morphism required".into());
            return r;
        }
        for u in j.morphisms() {
            let sub = self.maps[u].check(&self.values[j.dom(u)], &self.values[j.cod(u)]);
            r.check(sub.is_valid(), "functor", &[u], || format!("W({}) is not a functor", j.mor_name(u)));
        }
        if !r.is_valid() {
            return r;
        }
        for a in j.objects() {
            r.check(self.maps[j.id(a)] == FinFunctor::identity(&self.values[a]), "identity", &[a], || {
                format!("W(1_{}) is not the identity", j.obj_name(a))
            });
        }
        for u in j.morphisms() {
            for v in j.out_of(j.cod(u)) {
                r.check(self.maps[j.comp(v, u)] == self.maps[v].after(&self.maps[u]), "composition", &[v, u], || {
                    format!("W({}∘{}) ≠ W({})∘W({})", j.mor_name(v), j.mor_name(u), j.mor_name(v), j.mor_name(u))
                });
            }
        }
        r
    }

    pub fn is_conical(&self) -> bool {
        self.values.iter().all(|w| w.object_count() == 1 && w.morphism_count() == 1)
    }
}

/// A weighted diagram: shape `J`, weight `W` and `D: J → C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDiagram {
    pub shape: FinCategory,
    pub weight: Weight,
    pub functor: FinFunctor,
}

impl WeightedDiagram {
    pub fn new(shape: FinCategory, weight: Weight, functor: FinFunctor, c: &FinCategory) -> Result<Self> {
        if let Some(d) = first_violation(&weight.check(&shape)) {
            return Err(Error::ShapeMismatch(format!("invalid weight: {d}")));
        }
        if let Some(d) = first_violation(&functor.check(&shape, c)) {
            return Err(Error::ShapeMismatch(format!("diagram is not a functor: {d}")));
        }
        Ok(WeightedDiagram { shape, weight, functor })
    }

    pub fn conical(d: &Diagram) -> Self {
        WeightedDiagram { shape: d.shape.clone(), weight: Weight::conical(&d.shape), functor: d.functor.clone() }
    }
}

/// A 2-natural `W → C_G(X, D−)`: `one_cells[j][w]: X → D(j)` for each object
/// `w` of `W(j)`, and `elements[j][μ] ∈ G(D(j))` the 2-cell at each
/// morphism `μ` of `W(j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeightedCone {
    pub apex: ObjId,
    pub one_cells: Vec<Vec<MorId>>,
    pub elements: Vec<Vec<Elem>>,
}

impl WeightedCone {
    /// `cone ∘ m`; right whiskering keeps every element.
    pub fn precompose(&self, c: &FinCategory, m: MorId) -> WeightedCone {
        WeightedCone {
            apex: c.dom(m),
            one_cells: self.one_cells.iter().map(|row| row.iter().map(|&f| c.comp(f, m)).collect()).collect(),
            elements: self.elements.clone(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.iter().flatten().all(|&e| e == 0)
    }
}

/// Direct check of the cone conditions, independent of the search.
pub fn is_weighted_cone(xm: &CrossedModule, wd: &WeightedDiagram, cone: &WeightedCone) -> ValidationReport {
    let c = &xm.base;
    let (j, w, d) = (&wd.shape, &wd.weight, &wd.functor);
    let mut r = ValidationReport::new("weighted cone");
    let sized = cone.one_cells.len() == j.object_count()
        && cone.elements.len() == j.object_count()
        && j.objects().all(|x| {
            cone.one_cells[x].len() == w.values[x].object_count() && cone.elements[x].len() == w.values[x].morphism_count()
        });
    if !sized {
        r.push("arity", &[], "cone data does not match the weight".into());
        return r;
    }
    for x in j.objects() {
        let wx = &w.values[x];
        let dx = d.obj(x);
        let grp = &xm.groups[dx];
        for (k, &f) in cone.one_cells[x].iter().enumerate() {
            r.check(c.dom(f) == cone.apex && c.cod(f) == dx, "one-cell-typing", &[x, k], || "1-cell has the wrong type".into());
        }
        if !r.is_valid() {
            return r;
        }
        for mu in wx.morphisms() {
            let e = cone.elements[x][mu];
            if e >= grp.order() {
                r.push("element-range", &[x, mu], "element out of range".into());
                continue;
            }
            let src = cone.one_cells[x][wx.dom(mu)];
            let tgt = cone.one_cells[x][wx.cod(mu)];
            r.check(c.comp(xm.gamma(dx, e), src) == tgt, "two-cell-typing", &[x, mu], || {
                "2-cell does not go between the assigned 1-cells".into()
            });
            if wx.is_identity(mu) {
                r.check(e == 0, "functor-identity", &[x, mu], || "identity of W(j) not sent to an identity 2-cell".into());
            }
        }
        if !r.is_valid() {
            return r;
        }
        for mu in wx.morphisms() {
            for nu in wx.out_of(wx.cod(mu)) {
                let lhs = cone.elements[x][wx.comp(nu, mu)];
                let rhs = grp.mul(cone.elements[x][nu], cone.elements[x][mu]);
                r.check(lhs == rhs, "functor-composition", &[x, nu, mu], || "2-cells do not compose".into());
            }
        }
    }
    for u in j.morphisms() {
        let (a, b) = (j.dom(u), j.cod(u));
        let (wa, wu) = (&w.values[a], &w.maps[u]);
        let du = d.mor(u);
        for ob in wa.objects() {
            let lhs = c.comp(du, cone.one_cells[a][ob]);
            r.check(lhs == cone.one_cells[b][wu.obj(ob)], "naturality-1", &[u, ob], || {
                format!("D({})∘φ ≠ φ∘W({}) on objects", j.mor_name(u), j.mor_name(u))
            });
        }
        for mu in wa.morphisms() {
            let lhs = xm.act(du, cone.elements[a][mu]);
            r.check(lhs == cone.elements[b][wu.mor(mu)], "naturality-2", &[u, mu], || {
                format!("D({}) whiskered 2-cell differs from the image cell", j.mor_name(u))
            });
        }
    }
    r
}

struct Layout {
    ob: Vec<usize>,
    mo: Vec<usize>,
    total: usize,
}

fn layout(wd: &WeightedDiagram) -> Layout {
    let mut ob = Vec::new();
    let mut mo = Vec::new();
    let mut total = 0;
    for w in &wd.weight.values {
        ob.push(total);
        total += w.object_count();
        mo.push(total);
        total += w.morphism_count();
    }
    Layout { ob, mo, total }
}

fn cone_csp<'a>(xm: &'a CrossedModule, wd: &'a WeightedDiagram, apex: ObjId) -> (Csp<'a>, Layout) {
    let c = &xm.base;
    let (j, w, d) = (&wd.shape, &wd.weight, &wd.functor);
    let lay = layout(wd);
    let mut domains = vec![Vec::new(); lay.total];
    for x in j.objects() {
        let wx = &w.values[x];
        let dx = d.obj(x);
        for ob in wx.objects() {
            domains[lay.ob[x] + ob] = c.hom(apex, dx).to_vec();
        }
        for mu in wx.morphisms() {
            domains[lay.mo[x] + mu] = if wx.is_identity(mu) { vec![0] } else { xm.groups[dx].elements().collect() };
        }
    }
    let mut csp = Csp::new(domains);
    for x in j.objects() {
        let wx = &w.values[x];
        let dx = d.obj(x);
        let grp = &xm.groups[dx];
        for mu in wx.morphisms().filter(|&m| !wx.is_identity(m)) {
            let (s, t, e) = (lay.ob[x] + wx.dom(mu), lay.ob[x] + wx.cod(mu), lay.mo[x] + mu);
            csp.constrain(&[s, t, e], move |a| c.comp(xm.gamma(dx, a[e]), a[s]) == a[t]);
            for nu in wx.out_of(wx.cod(mu)) {
                let (n, k) = (lay.mo[x] + nu, lay.mo[x] + wx.comp(nu, mu));
                csp.constrain(&[e, n, k], move |a| a[k] == grp.mul(a[n], a[e]));
            }
        }
    }
    for u in j.morphisms().filter(|&u| !j.is_identity(u)) {
        let (a0, b0) = (j.dom(u), j.cod(u));
        let du = d.mor(u);
        for ob in w.values[a0].objects() {
            let (p, q) = (lay.ob[a0] + ob, lay.ob[b0] + w.maps[u].obj(ob));
            csp.constrain(&[p, q], move |a| c.comp(du, a[p]) == a[q]);
        }
        for mu in w.values[a0].morphisms() {
            let (p, q) = (lay.mo[a0] + mu, lay.mo[b0] + w.maps[u].mor(mu));
            csp.constrain(&[p, q], move |a| xm.act(du, a[p]) == a[q]);
        }
    }
    (csp, lay)
}

fn unpack(wd: &WeightedDiagram, lay: &Layout, apex: ObjId, a: &[usize]) -> WeightedCone {
    let w = &wd.weight.values;
    WeightedCone {
        apex,
        one_cells: (0..w.len()).map(|x| a[lay.ob[x]..lay.ob[x] + w[x].object_count()].to_vec()).collect(),
        elements: (0..w.len()).map(|x| a[lay.mo[x]..lay.mo[x] + w[x].morphism_count()].to_vec()).collect(),
    }
}

type ConeFilter<'a> = &'a dyn Fn(&WeightedCone) -> bool;

fn cones_at(xm: &CrossedModule, wd: &WeightedDiagram, apex: ObjId, filter: Option<ConeFilter>, meter: &mut Meter) -> Result<Vec<WeightedCone>> {
    let (csp, lay) = cone_csp(xm, wd, apex);
    let mut out = Vec::new();
    csp.solve(meter, |a| {
        let cone = unpack(wd, &lay, apex, a);
        if filter.is_none_or(|f| f(&cone)) {
            out.push(cone);
        }
        true
    })?;
    Ok(out)
}

/// All weighted cones with the given apex, in canonical order.
pub fn weighted_cones(xm: &CrossedModule, wd: &WeightedDiagram, apex: ObjId, budget: Budget) -> Result<Vec<WeightedCone>> {
    cones_at(xm, wd, apex, None, &mut budget.meter("weighted_cones"))
}

/// Modifications `ψ ⇛ ψ'` between two cones with the same apex, as
/// elements `Γ[j][w] ∈ G(D(j))`.
fn modifications(
    xm: &CrossedModule,
    wd: &WeightedDiagram,
    src: &WeightedCone,
    tgt: &WeightedCone,
    meter: &mut Meter,
) -> Result<Vec<Vec<Vec<Elem>>>> {
    let c = &xm.base;
    let (j, w, d) = (&wd.shape, &wd.weight, &wd.functor);
    let mut off = Vec::new();
    let mut domains = Vec::new();
    for x in j.objects() {
        off.push(domains.len());
        let dx = d.obj(x);
        for ob in w.values[x].objects() {
            let (f, g) = (src.one_cells[x][ob], tgt.one_cells[x][ob]);
            domains.push(xm.groups[dx].elements().filter(|&e| c.comp(xm.gamma(dx, e), f) == g).collect());
        }
    }
    let mut csp = Csp::new(domains);
    for x in j.objects() {
        let wx = &w.values[x];
        let grp = &xm.groups[d.obj(x)];
        for mu in wx.morphisms().filter(|&m| !wx.is_identity(m)) {
            let (p, q) = (off[x] + wx.dom(mu), off[x] + wx.cod(mu));
            let (e, e2) = (src.elements[x][mu], tgt.elements[x][mu]);
            csp.constrain(&[p, q], move |a| grp.mul(a[q], e) == grp.mul(e2, a[p]));
        }
    }
    for u in j.morphisms().filter(|&u| !j.is_identity(u)) {
        let (a0, b0) = (j.dom(u), j.cod(u));
        let du = d.mor(u);
        for ob in w.values[a0].objects() {
            let (p, q) = (off[a0] + ob, off[b0] + w.maps[u].obj(ob));
            csp.constrain(&[p, q], move |a| xm.act(du, a[p]) == a[q]);
        }
    }
    let sols = csp.all(meter)?;
    Ok(sols
        .into_iter()
        .map(|a| j.objects().map(|x| a[off[x]..off[x] + w.values[x].object_count()].to_vec()).collect())
        .collect())
}

/// `m ↦ λ∘m` is a bijection onto the cones at every object. Returns the
/// first failure.
fn check_1d(c: &FinCategory, lambda: &WeightedCone, all: &[HashSet<WeightedCone>]) -> Option<Witness> {
    for x in c.objects() {
        let maps = c.hom(x, lambda.apex);
        let mut seen = HashSet::new();
        for &m in maps {
            let image = lambda.precompose(c, m);
            if !all[x].contains(&image) || !seen.insert(image) {
                return Some(
                    Witness::new("one-dimensional", format!("two maps {} → apex give the same cone", c.obj_name(x)))
                        .apex(x)
                        .morphisms(vec![m]),
                );
            }
        }
        if maps.len() != all[x].len() {
            let missed = all[x].iter().filter(|k| !maps.iter().any(|&m| lambda.precompose(c, m) == **k)).min();
            return Some(
                Witness::new("one-dimensional", format!("a cone at {} does not factor through the candidate", c.obj_name(x)))
                    .apex(x)
                    .cones(missed.into_iter().cloned().collect()),
            );
        }
    }
    None
}

/// `θ ↦ λ*θ` is a bijection from 2-cells `m ⇒ m'` onto modifications
/// `λm ⇛ λm'`, for all `m, m': X → L`. Returns the first failure.
fn check_2d(xm: &CrossedModule, wd: &WeightedDiagram, lambda: &WeightedCone, meter: &mut Meter) -> Result<Option<Witness>> {
    let c = &xm.base;
    let l = lambda.apex;
    let lg = &xm.groups[l];
    for x in c.objects() {
        for &m in c.hom(x, l) {
            for &m2 in c.hom(x, l) {
                let (s, t) = (lambda.precompose(c, m), lambda.precompose(c, m2));
                let mods = modifications(xm, wd, &s, &t, meter)?;
                let mods_set: HashSet<&Vec<Vec<Elem>>> = mods.iter().collect();
                let mut images = HashSet::new();
                for theta in lg.elements().filter(|&e| c.comp(xm.gamma(l, e), m) == m2) {
                    let image: Vec<Vec<Elem>> =
                        lambda.one_cells.iter().map(|row| row.iter().map(|&f| xm.act(f, theta)).collect()).collect();
                    if !mods_set.contains(&image) || !images.insert(image) {
                        return Ok(Some(
                            Witness::new("two-dimensional", "two 2-cells induce the same modification")
                                .apex(x)
                                .morphisms(vec![m, m2])
                                .elements(vec![theta]),
                        ));
                    }
                }
                if images.len() != mods.len() {
                    let family = mods.iter().find(|f| !images.contains(*f)).expect("unmatched modification");
                    return Ok(Some(
                        Witness::new(
                            "two-dimensional",
                            format!("modification {family:?} between cones through {} and {} has no amalgamation", c.mor_name(m), c.mor_name(m2)),
                        )
                        .apex(x)
                        .morphisms(vec![m, m2])
                        .elements(family.iter().flatten().copied().collect()),
                    ));
                }
            }
        }
    }
    Ok(None)
}

/// Shapes accepted by [`search_weighted_limit`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LimitShape {
    /// Cones `(p, θ: fp ⇒ gp)` for `f, g: A ⇉ B`.
    Inserter { f: MorId, g: MorId },
    /// Cones `p` with `α*p = β*p` for parallel 2-cells `α, β`.
    Equifier { alpha: TwoCell, beta: TwoCell },
    /// Cones `(p, q, θ: fp ⇒ gq)` for `f: A → C`, `g: B → C`.
    Comma { f: MorId, g: MorId },
    /// Cones `(p₀, p₁, θ: p₀ ⇒ p₁)` into `A`.
    CotensorBy2 { object: ObjId },
    Product { a: ObjId, b: ObjId },
    Conical { diagram: WeightedDiagram },
}

fn picks(target: &FinCategory, object: ObjId) -> FinFunctor {
    FinFunctor { obj_map: vec![object], mor_map: vec![target.id(object)] }
}

impl LimitShape {
    pub fn name(&self) -> &'static str {
        match self {
            LimitShape::Inserter { .. } => "inserter",
            LimitShape::Equifier { .. } => "equifier",
            LimitShape::Comma { .. } => "comma",
            LimitShape::CotensorBy2 { .. } => "cotensor-by-2",
            LimitShape::Product { .. } => "product",
            LimitShape::Conical { .. } => "conical",
        }
    }

    /// The weighted diagram this shape stands for.
    pub fn to_weighted(&self, xm: &CrossedModule) -> Result<WeightedDiagram> {
        let c = &xm.base;
        let t = FinCategory::terminal();
        let two = FinCategory::walking_arrow();
        let obj_ok = |a: ObjId| if a < c.object_count() { Ok(a) } else { Err(Error::UnknownObject(a)) };
        let mor_ok = |f: MorId| if f < c.morphism_count() { Ok(f) } else { Err(Error::UnknownMorphism(f)) };
        match *self {
            LimitShape::Inserter { f, g } => {
                let (f, g) = (mor_ok(f)?, mor_ok(g)?);
                let d = Diagram::parallel(f, g, c)?;
                let weight = Weight {
                    values: vec![t.clone(), two.clone()],
                    maps: vec![FinFunctor::identity(&t), FinFunctor::identity(&two), picks(&two, 0), picks(&two, 1)],
                };
                WeightedDiagram::new(d.shape, weight, d.functor, c)
            }
            LimitShape::Comma { f, g } => {
                let (f, g) = (mor_ok(f)?, mor_ok(g)?);
                if c.cod(f) != c.cod(g) {
                    return Err(Error::ShapeMismatch("comma needs a common codomain".into()));
                }
                let j = FinCategory::cospan();
                let objs = [c.cod(f), c.dom(f), c.dom(g)];
                let mor_map = j
                    .morphisms()
                    .map(|u| match (j.dom(u), j.is_identity(u)) {
                        (x, true) => c.id(objs[x]),
                        (1, false) => f,
                        _ => g,
                    })
                    .collect();
                let maps = j
                    .morphisms()
                    .map(|u| match (j.dom(u), j.is_identity(u)) {
                        (0, true) => FinFunctor::identity(&two),
                        (_, true) => FinFunctor::identity(&t),
                        (1, false) => picks(&two, 0),
                        _ => picks(&two, 1),
                    })
                    .collect();
                let weight = Weight { values: vec![two.clone(), t.clone(), t.clone()], maps };
                WeightedDiagram::new(j, weight, FinFunctor { obj_map: objs.to_vec(), mor_map }, c)
            }
            LimitShape::CotensorBy2 { object } => {
                let a = obj_ok(object)?;
                let weight = Weight { values: vec![two.clone()], maps: vec![FinFunctor::identity(&two)] };
                WeightedDiagram::new(t.clone(), weight, picks(c, a), c)
            }
            LimitShape::Product { a, b } => {
                let d = Diagram::discrete(&[obj_ok(a)?, obj_ok(b)?], c);
                Ok(WeightedDiagram::conical(&d))
            }
            LimitShape::Equifier { alpha, beta } => {
                let (f, g) = (mor_ok(alpha.src)?, mor_ok(beta.src)?);
                if f != g || alpha.tgt(xm) != beta.tgt(xm) {
                    return Err(Error::NotParallel { f, g });
                }
                Ok(WeightedDiagram::conical(&Diagram::discrete(&[c.dom(f)], c)))
            }
            LimitShape::Conical { ref diagram } => Ok(diagram.clone()),
        }
    }
}

/// Exhaustive search for the weighted limit of `shape` in `C_G`.
///
/// Precomposition keeps the elements of a cone, so any two cones that
/// differ at the same weight morphism rule out a limit; that witness is
/// tried first. Otherwise every cone is tested for both universal
/// properties.
pub fn search_weighted_limit(xm: &CrossedModule, shape: &LimitShape, budget: Budget) -> Result<SearchVerdict> {
    let wd = shape.to_weighted(xm)?;
    let equifier = match *shape {
        LimitShape::Equifier { alpha, beta } => Some((alpha, beta)),
        _ => None,
    };
    let filter = move |cone: &WeightedCone| match equifier {
        Some((a, b)) => {
            let p = cone.one_cells[0][0];
            whisker_right(xm, a, p) == whisker_right(xm, b, p)
        }
        None => true,
    };
    settle(search(xm, &wd, Some(&filter), budget))
}

fn search(xm: &CrossedModule, wd: &WeightedDiagram, filter: Option<ConeFilter>, budget: Budget) -> Result<SearchVerdict> {
    let c = &xm.base;
    if c.is_empty() {
        return Ok(not_exists(Witness::new("empty-base", "the base has no objects")));
    }
    let mut meter = budget.meter("search_weighted_limit");
    let all: Vec<Vec<WeightedCone>> = c.objects().map(|x| cones_at(xm, wd, x, filter, &mut meter)).collect::<Result<_>>()?;
    let mut flat = all.iter().flatten();
    let Some(first) = flat.next() else {
        return Ok(not_exists(Witness::new(
            "no-cones",
            "no object carries a cone, but a limit would carry its universal cone",
        )));
    };
    for other in flat {
        for x in wd.shape.objects() {
            if let Some(mu) = (0..first.elements[x].len()).find(|&mu| first.elements[x][mu] != other.elements[x][mu]) {
                return Ok(not_exists(
                    Witness::new(
                        "conflicting-cones",
                        format!(
                            "cones at {} and {} carry different 2-cells at weight morphism {mu} of node {x}; every cone through a limit carries the universal cone's 2-cells",
                            c.obj_name(first.apex),
                            c.obj_name(other.apex)
                        ),
                    )
                    .morphisms(vec![x, mu])
                    .cones(vec![first.clone(), other.clone()]),
                ));
            }
        }
    }
    let sets: Vec<HashSet<WeightedCone>> = all.iter().map(|v| v.iter().cloned().collect()).collect();
    let mut first_failure = None;
    let mut rejected = 0usize;
    for lambda in all.iter().flatten() {
        meter.tick()?;
        let failure = match check_1d(c, lambda, &sets) {
            Some(w) => Some(w),
            None => check_2d(xm, wd, lambda, &mut meter)?,
        };
        match failure {
            None => {
                let iso = c.objects().filter(|&y| c.are_isomorphic(lambda.apex, y)).count();
                return Ok(exists(
                    Witness::new("universal-cone", format!("limit at {}", c.obj_name(lambda.apex)))
                        .apex(lambda.apex)
                        .cones(vec![lambda.clone()])
                        .iso_class(iso),
                ));
            }
            Some(w) => {
                rejected += 1;
                first_failure.get_or_insert((lambda.clone(), w));
            }
        }
    }
    let (cone, w) = first_failure.expect("at least one cone");
    Ok(not_exists(
        Witness::new(
            "no-universal-cone",
            format!("all {rejected} cones fail; least candidate at {} fails: {}", c.obj_name(cone.apex), w.detail),
        )
        .apex(cone.apex)
        .morphisms(w.morphisms)
        .elements(w.elements)
        .cones(vec![cone]),
    ))
}

/// Two-dimensional property of a limit cone of an unweighted diagram.
pub fn check_2d_limit(xm: &CrossedModule, d: &Diagram, candidate: &Cone, budget: Budget) -> Result<SearchVerdict> {
    let c = &xm.base;
    let wd = WeightedDiagram::conical(d);
    let lambda = WeightedCone {
        apex: candidate.apex,
        one_cells: candidate.legs.iter().map(|&l| vec![l]).collect(),
        elements: d.shape.objects().map(|_| vec![0]).collect(),
    };
    settle((|| {
        let mut meter = budget.meter("check_2d_limit");
        let sets: Vec<HashSet<WeightedCone>> =
            c.objects().map(|x| Ok(cones_at(xm, &wd, x, None, &mut meter)?.into_iter().collect())).collect::<Result<_>>()?;
        if !sets[candidate.apex].contains(&lambda) || check_1d(c, &lambda, &sets).is_some() {
            return Err(Error::Precondition("candidate is not a limit cone in the base".into()));
        }
        Ok(match check_2d(xm, &wd, &lambda, &mut meter)? {
            None => exists(Witness::new("limit", "every modification has a unique amalgamation").apex(candidate.apex)),
            Some(w) => not_exists(w),
        })
    })())
}

/// Outcome of the cone-triviality analysis over an initial object.
#[derive(Debug, Clone, Serialize)]
pub struct TrivialityReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_applicable: Option<String>,
    /// Every `W(j)` is discrete, so no cone has a 2-cell.
    pub vacuous: bool,
    pub trivial_cone_valid: bool,
    pub cones_at_initial: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nontrivial_cone: Option<WeightedCone>,
    pub limit: SearchVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub universal_cone_trivial: Option<bool>,
}

/// Builds the trivial cone on `0`, looks for a nontrivial cone on `0`, and
/// when a limit exists checks that its universal cone has only identity
/// 2-cells.
pub fn weighted_cone_triviality(xm: &CrossedModule, wd: &WeightedDiagram, budget: Budget) -> Result<TrivialityReport> {
    let c = &xm.base;
    let vacuous = wd.weight.values.iter().all(FinCategory::is_discrete);
    let limit = settle(search(xm, wd, None, budget))?;
    let Some(zero) = c.initial_object() else {
        return Ok(TrivialityReport {
            not_applicable: Some("base has no initial object".into()),
            vacuous,
            trivial_cone_valid: false,
            cones_at_initial: 0,
            nontrivial_cone: None,
            limit,
            universal_cone_trivial: None,
        });
    };
    let trivial = WeightedCone {
        apex: zero,
        one_cells: wd
            .shape
            .objects()
            .map(|x| vec![c.hom(zero, wd.functor.obj(x))[0]; wd.weight.values[x].object_count()])
            .collect(),
        elements: wd.weight.values.iter().map(|w| vec![0; w.morphism_count()]).collect(),
    };
    let trivial_cone_valid = is_weighted_cone(xm, wd, &trivial).is_valid();
    let at_zero = weighted_cones(xm, wd, zero, budget)?;
    let nontrivial_cone = at_zero.iter().find(|k| !k.is_trivial()).cloned();
    let universal_cone_trivial = match &limit {
        SearchVerdict::Exists { witness } => witness.cones.first().map(WeightedCone::is_trivial),
        _ => None,
    };
    Ok(TrivialityReport {
        not_applicable: None,
        vacuous,
        trivial_cone_valid,
        cones_at_initial: at_zero.len(),
        nontrivial_cone,
        limit,
        universal_cone_trivial,
    })
}

/// The conical limit over the category of elements of `Π₀W`, computed in
/// the base.
pub fn weighted_limit_via_pi0(xm: &CrossedModule, wd: &WeightedDiagram, budget: Budget) -> Result<Option<Universal>> {
    let c = &xm.base;
    let (j, w) = (&wd.shape, &wd.weight);
    let blocks: Vec<Vec<Vec<ObjId>>> = w.values.iter().map(FinCategory::pi0).collect();
    let block_of = |x: ObjId, ob: ObjId| blocks[x].iter().position(|b| b.contains(&ob)).expect("object in a block");
    let mut objects = Vec::new();
    let mut index = HashMap::new();
    for x in j.objects() {
        for b in 0..blocks[x].len() {
            index.insert((x, b), objects.len());
            objects.push((x, b));
        }
    }
    let mut morphisms = Vec::new();
    let mut mor_index = HashMap::new();
    for u in j.morphisms() {
        for b in 0..blocks[j.dom(u)].len() {
            let image = block_of(j.cod(u), w.maps[u].obj(blocks[j.dom(u)][b][0]));
            mor_index.insert((u, b), morphisms.len());
            morphisms.push((u, b, index[&(j.dom(u), b)], index[&(j.cod(u), image)]));
        }
    }
    let el = FinCategory::from_fn(
        objects.iter().map(|&(x, b)| format!("({},{b})", j.obj_name(x))).collect(),
        morphisms.iter().map(|&(u, b, s, t)| (format!("({},{b})", j.mor_name(u)), s, t)).collect(),
        objects.iter().map(|&(x, b)| mor_index[&(j.id(x), b)]).collect(),
        |g, f| {
            let (v, _, _, _) = morphisms[g];
            let (u, b, _, _) = morphisms[f];
            mor_index[&(j.comp(v, u), b)]
        },
    )?;
    let functor = FinFunctor {
        obj_map: objects.iter().map(|&(x, _)| wd.functor.obj(x)).collect(),
        mor_map: morphisms.iter().map(|&(u, _, _, _)| wd.functor.mor(u)).collect(),
    };
    limit_1d(c, &Diagram::new(el, functor, c)?, budget)
}

/// Result of the sweep over all pairs `(R, τ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Representation {
    pub found: Option<(ObjId, Elem)>,
    pub pairs_checked: usize,
}

/// Least `(R, τ)` such that `f ↦ G(f)τ` is a bijection `C(R, A) → G(A)` for
/// every `A`.
pub fn representability_search(xm: &CrossedModule, budget: Budget) -> Result<Representation> {
    let c = &xm.base;
    let mut meter = budget.meter("representability_search");
    let mut pairs_checked = 0;
    for r in c.objects() {
        for tau in xm.groups[r].elements() {
            meter.tick()?;
            pairs_checked += 1;
            let ok = c.objects().all(|a| {
                let homs = c.hom(r, a);
                let mut seen = HashSet::new();
                homs.len() == xm.groups[a].order() && homs.iter().all(|&f| seen.insert(xm.act(f, tau)))
            });
            if ok {
                return Ok(Representation { found: Some((r, tau)), pairs_checked });
            }
        }
    }
    Ok(Representation { found: None, pairs_checked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::library;
    use crate::xmod::conjugation_module_delooping;

    #[test]
    fn inserter_of_equal_maps_under_trivial_module() {
        let xm = CrossedModule::trivial(FinCategory::walking_arrow());
        let f = xm.base.hom(0, 1)[0];
        let v = search_weighted_limit(&xm, &LimitShape::Inserter { f, g: f }, Budget::DEFAULT).unwrap();
        assert!(v.exists());
        assert_eq!(v.witness().unwrap().apex, Some(0));
    }

    #[test]
    fn cotensor_in_a_nontrivial_delooping_conflicts() {
        let xm = conjugation_module_delooping(&library::cyclic(2));
        let v = search_weighted_limit(&xm, &LimitShape::CotensorBy2 { object: 0 }, Budget::DEFAULT).unwrap();
        let w = v.witness().unwrap();
        assert_eq!(w.kind, "conflicting-cones");
        let wd = LimitShape::CotensorBy2 { object: 0 }.to_weighted(&xm).unwrap();
        assert!(w.cones.iter().all(|k| is_weighted_cone(&xm, &wd, k).is_valid()));
    }

    #[test]
    fn cone_checker_rejects_bad_data() {
        let xm = conjugation_module_delooping(&library::cyclic(2));
        let wd = LimitShape::CotensorBy2 { object: 0 }.to_weighted(&xm).unwrap();
        let bad = WeightedCone { apex: 0, one_cells: vec![vec![0, 0]], elements: vec![vec![1, 0, 0]] };
        assert!(is_weighted_cone(&xm, &wd, &bad).has("functor-identity"));
    }

    #[test]
    fn representability() {
        let xm = CrossedModule::trivial(FinCategory::walking_arrow());
        assert_eq!(representability_search(&xm, Budget::DEFAULT).unwrap().found, Some((0, 0)));
        let xm = conjugation_module_delooping(&library::cyclic(2));
        assert_eq!(representability_search(&xm, Budget::DEFAULT).unwrap().found, None);
    }

    #[test]
    fn pi0_reduction_of_a_discrete_weight_is_a_product() {
        let c = FinCategory::poset(3, &[(0, 1), (0, 2)]);
        let xm = CrossedModule::trivial(c.clone());
        let d = FinCategory::discrete(2);
        let wd = WeightedDiagram {
            shape: FinCategory::terminal(),
            weight: Weight { values: vec![d.clone()], maps: vec![FinFunctor::identity(&d)] },
            functor: FinFunctor { obj_map: vec![1], mor_map: vec![c.id(1)] },
        };
        assert_eq!(weighted_limit_via_pi0(&xm, &wd, Budget::DEFAULT).unwrap().unwrap().apex, 1);
        let v = search(&xm, &wd, None, Budget::DEFAULT).unwrap();
        assert_eq!(v.witness().unwrap().apex, Some(1));
    }

    #[test]
    fn comma_cones_over_initial_are_nontrivial() {
        let c = FinCategory::walking_arrow();
        let mut xm = CrossedModule::trivial(c.clone());
        let z2 = library::cyclic(2);
        xm.groups = vec![z2.clone(), z2.clone()];
        xm.actions = c.morphisms().map(|_| crate::groupkit::GroupHom::identity(&z2)).collect();
        xm.gamma = vec![vec![c.id(0); 2], vec![c.id(1); 2]];
        let f = c.id(1);
        let wd = LimitShape::Comma { f, g: f }.to_weighted(&xm).unwrap();
        let t = weighted_cone_triviality(&xm, &wd, Budget::DEFAULT).unwrap();
        assert!(t.trivial_cone_valid && t.nontrivial_cone.is_some() && t.limit.not_exists());
        let conical = WeightedDiagram::conical(&Diagram::discrete(&[1], &c));
        assert!(weighted_cone_triviality(&xm, &conical, Budget::DEFAULT).unwrap().vacuous);
    }
}
