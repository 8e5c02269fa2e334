//! One function per subcommand: instance in, `(status, summary, result)` out.

use serde::Deserialize;
use serde_json::{json, Value};

use super::schema::{DiagramSpec, GroupSpec, InstanceFile, Status, WeightSpec};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::{validate_category, FinCategory, MorId, ObjId};
use crate::groupkit::{FinGroup, GroupPresentation, Word};
use crate::grpcolim::{
    coequifier_presentation, coidentifier_presentation, coinserter_presentation, tensor_by_free_group_presentation,
    verify_coequifier_by_homcount, verify_coidentifier_by_homcount, verify_coinserter_by_homcount, verify_on_panel,
    verify_tensor_by_homcount, Construction, PresentedMap,
};
use crate::limits2d::{
    check_2d_colimit, check_2d_limit, colimit_1d, limit_1d, obstruction_report, representability_search,
    search_weighted_colimit, search_weighted_limit, Cocone, ColimitShape, Cone, LimitShape, SearchVerdict,
    WeightedDiagram,
};
use crate::report::ValidationReport;
use crate::twocat::{two_cells, validate_two_category, TwoCell};
use crate::xfun::{canonical_2functor_to_groups, check_2functoriality, groups_target, validate_xmod_morphism};
use crate::xmod::{canonical_comparison, compute_isotropy, delta, validate_crossed_module, CrossedModule};

pub struct Options {
    pub budget: Budget,
    pub panel: Vec<(String, FinGroup)>,
}

pub type Outcome = (Status, String, Value);

pub const COMMANDS: &[&str] = &[
    "validate",
    "isotropy",
    "two-cells",
    "check-2d",
    "search",
    "obstructions",
    "coinserter",
    "coequifier",
    "coidentifier",
    "tensor-free",
    "verify-homcount",
    "extend-functor",
];

pub fn execute(command: &str, inst: &InstanceFile, opts: &Options) -> Result<Outcome> {
    match command {
        "validate" => validate(inst),
        "isotropy" => isotropy(inst, opts),
        "two-cells" => two_cells_cmd(inst),
        "check-2d" => check_2d(inst, opts),
        "search" => search(inst, opts),
        "obstructions" => obstructions(inst, opts),
        "coinserter" | "coequifier" | "coidentifier" | "tensor-free" => construct(command, inst),
        "verify-homcount" => verify_homcount(inst, opts),
        "extend-functor" => extend_functor(inst, opts),
        other => Err(Error::Schema(format!("unknown command {other:?}"))),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn pass_if(ok: bool) -> Status {
    if ok { Status::Pass } else { Status::Fail }
}

fn verdict_status(v: &SearchVerdict) -> Status {
    match v {
        SearchVerdict::Exists { .. } | SearchVerdict::NotApplicable { .. } => Status::Pass,
        SearchVerdict::NotExists { .. } => Status::Fail,
        SearchVerdict::BudgetExceeded { .. } => Status::BudgetExceeded,
    }
}

fn verdict_summary(what: &str, v: &SearchVerdict) -> String {
    match v {
        SearchVerdict::Exists { .. } => format!("{what} exists"),
        SearchVerdict::NotExists { witness } => format!("{what} does not exist ({})", witness.kind),
        SearchVerdict::NotApplicable { reason } => format!("{what} not applicable: {reason}"),
        SearchVerdict::BudgetExceeded { what: w, bound } => format!("budget of {bound} exceeded in {w}"),
    }
}

fn required<T: for<'de> Deserialize<'de>>(inst: &InstanceFile, command: &str) -> Result<T> {
    let v = inst.payload.clone().ok_or_else(|| Error::Schema(format!("{command} needs a payload")))?;
    Ok(serde_json::from_value(v)?)
}

fn first_violation(r: &ValidationReport) -> String {
    r.violations.first().map(|v| format!("{}: {}", v.axiom, v.detail)).unwrap_or_else(|| "not applicable".into())
}

/// The instance category, rejected unless it satisfies the category axioms.
fn valid_category(inst: &InstanceFile) -> Result<FinCategory> {
    let c = inst.category()?;
    let r = validate_category(&c);
    if !r.is_valid() {
        return Err(Error::InvalidCategory(first_violation(&r)));
    }
    Ok(c)
}

/// The instance crossed module, rejected unless it validates.
fn valid_module(inst: &InstanceFile) -> Result<CrossedModule> {
    let xm = inst.crossed_module()?;
    let r = validate_crossed_module(&xm);
    if !r.is_valid() {
        return Err(Error::Schema(format!("crossed module does not validate ({})", first_violation(&r))));
    }
    Ok(xm)
}

fn obj(c: &FinCategory, a: ObjId) -> Result<ObjId> {
    if a < c.object_count() { Ok(a) } else { Err(Error::UnknownObject(a)) }
}

fn mor(c: &FinCategory, f: MorId) -> Result<MorId> {
    if f < c.morphism_count() { Ok(f) } else { Err(Error::UnknownMorphism(f)) }
}

fn cell(xm: &CrossedModule, t: TwoCell) -> Result<TwoCell> {
    let c = &xm.base;
    mor(c, t.src)?;
    if t.element >= xm.groups[c.cod(t.src)].order() {
        return Err(Error::Schema(format!("element {} out of range for 2-cell on {}", t.element, t.src)));
    }
    Ok(t)
}

fn diagram(spec: &DiagramSpec, c: &FinCategory) -> Result<crate::limits2d::Diagram> {
    let shape = spec.shape.build()?;
    let r = validate_category(&shape);
    if !r.is_valid() {
        return Err(Error::InvalidCategory(format!("diagram shape: {}", first_violation(&r))));
    }
    spec.build(c)
}

fn validate(inst: &InstanceFile) -> Result<Outcome> {
    let c = inst.category()?;
    let category = validate_category(&c);
    if inst.crossed_module.is_none() {
        let ok = category.is_valid();
        let summary = if ok { "category valid".to_string() } else { format!("category invalid: {}", first_violation(&category)) };
        return Ok((pass_if(ok), summary, json!({ "category": category })));
    }
    let xm = inst.crossed_module()?;
    let module = validate_crossed_module(&xm);
    let two = if module.is_valid() {
        validate_two_category(&xm)
    } else {
        ValidationReport::not_applicable("2-category laws", "crossed module does not validate")
    };
    let ok = category.is_valid() && module.is_valid() && two.is_valid();
    let summary = if ok {
        "crossed module valid".to_string()
    } else if !module.is_valid() {
        format!("crossed module invalid: {}", first_violation(&module))
    } else {
        format!("2-category laws fail: {}", first_violation(&two))
    };
    Ok((pass_if(ok), summary, json!({ "category": category, "crossed_module": module, "two_category": two })))
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct IsotropyPayload {
    object: Option<ObjId>,
}

fn isotropy(inst: &InstanceFile, opts: &Options) -> Result<Outcome> {
    let c = valid_category(inst)?;
    let p: IsotropyPayload = inst.payload()?;
    let objects: Vec<ObjId> = match p.object {
        Some(a) => vec![obj(&c, a)?],
        None => c.objects().collect(),
    };
    let mut groups = Vec::new();
    let mut orders = Vec::new();
    for a in objects {
        let z = compute_isotropy(&c, a, opts.budget)?;
        let (d, _) = delta(&c, &z)?;
        orders.push(format!("Z({}) = {}", c.obj_name(a), z.order()));
        groups.push(json!({
            "object": a,
            "name": c.obj_name(a),
            "coslice_size": z.coslice.len(),
            "order": z.order(),
            "delta_injective": d.is_injective(),
            "elements": z.elements,
            "table": z.group.table(),
        }));
    }
    let mut result = json!({ "isotropy": groups });
    if inst.crossed_module.is_some() {
        let xm = valid_module(inst)?;
        let cmp = canonical_comparison(&xm, opts.budget)?;
        result["comparison"] = json!({
            "components": cmp.components,
            "report": cmp.report,
            "unique": cmp.is_unique(),
            "injective": cmp.is_injective(),
            "isomorphism": cmp.is_isomorphism(),
        });
        let ok = cmp.report.is_valid() && cmp.is_unique();
        return Ok((pass_if(ok), orders.join(", "), result));
    }
    Ok((Status::Pass, orders.join(", "), result))
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairPayload {
    f: Option<MorId>,
    g: Option<MorId>,
}

fn two_cells_cmd(inst: &InstanceFile) -> Result<Outcome> {
    let xm = valid_module(inst)?;
    let c = &xm.base;
    let p: PairPayload = inst.payload()?;
    match (p.f, p.g) {
        (Some(f), Some(g)) => {
            let cells = two_cells(&xm, mor(c, f)?, mor(c, g)?)?;
            let summary = format!("{} 2-cell(s) {} ⇒ {}", cells.len(), c.mor_name(f), c.mor_name(g));
            let elements: Vec<_> = cells.iter().map(|t| t.element).collect();
            Ok((Status::Pass, summary, json!({ "f": f, "g": g, "count": cells.len(), "elements": elements })))
        }
        (None, None) => {
            let mut pairs = Vec::new();
            let mut total = 0;
            for f in c.morphisms() {
                for &g in c.hom(c.dom(f), c.cod(f)) {
                    let n = two_cells(&xm, f, g)?.len();
                    total += n;
                    if n > 0 {
                        pairs.push(json!({ "f": f, "g": g, "count": n }));
                    }
                }
            }
            Ok((Status::Pass, format!("{total} 2-cell(s) in total"), json!({ "pairs": pairs, "total": total })))
        }
        _ => Err(Error::Schema("two-cells payload needs both f and g or neither".into())),
    }
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum Side {
    Colimit,
    Limit,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Candidate {
    apex: ObjId,
    legs: Vec<MorId>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Check2dPayload {
    kind: Side,
    diagram: DiagramSpec,
    #[serde(default)]
    candidate: Option<Candidate>,
}

fn check_2d(inst: &InstanceFile, opts: &Options) -> Result<Outcome> {
    let xm = valid_module(inst)?;
    let c = &xm.base;
    let p: Check2dPayload = required(inst, "check-2d")?;
    let d = diagram(&p.diagram, c)?;
    let what = match p.kind {
        Side::Colimit => "2-dimensional colimit",
        Side::Limit => "2-dimensional limit",
    };
    let found = match &p.candidate {
        Some(k) => {
            obj(c, k.apex)?;
            for &l in &k.legs {
                mor(c, l)?;
            }
            if k.legs.len() != d.shape.object_count() {
                return Err(Error::ShapeMismatch("one leg per diagram object required".into()));
            }
            Some((k.apex, k.legs.clone()))
        }
        None => {
            let u = match p.kind {
                Side::Colimit => colimit_1d(c, &d, opts.budget)?,
                Side::Limit => limit_1d(c, &d, opts.budget)?,
            };
            u.map(|u| (u.apex, u.legs))
        }
    };
    let Some((apex, legs)) = found else {
        let summary = format!("no 1-dimensional {} in the base", if matches!(p.kind, Side::Colimit) { "colimit" } else { "limit" });
        return Ok((Status::Fail, summary, json!({ "connected": d.is_connected(), "one_dimensional": null })));
    };
    let verdict = match p.kind {
        Side::Colimit => check_2d_colimit(&xm, &d, &Cocone { apex, legs: legs.clone() }, opts.budget)?,
        Side::Limit => check_2d_limit(&xm, &d, &Cone { apex, legs: legs.clone() }, opts.budget)?,
    };
    let result = json!({
        "connected": d.is_connected(),
        "one_dimensional": { "apex": apex, "legs": legs },
        "verdict": verdict,
    });
    Ok((verdict_status(&verdict), verdict_summary(what, &verdict), result))
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
enum SearchShape {
    Coinserter { f: MorId, g: MorId },
    Coequifier { alpha: TwoCell, beta: TwoCell },
    Coidentifier { alpha: TwoCell },
    TensorByGroup { group: GroupSpec, object: ObjId },
    TensorByFree { letters: usize, object: ObjId },
    Coproduct { a: ObjId, b: ObjId },
    TwoInitial,
    Inserter { f: MorId, g: MorId },
    Equifier { alpha: TwoCell, beta: TwoCell },
    Comma { f: MorId, g: MorId },
    #[serde(rename = "cotensor-by-2")]
    CotensorBy2 { object: ObjId },
    Product { a: ObjId, b: ObjId },
    Conical {
        diagram: DiagramSpec,
        #[serde(default)]
        weight: Option<WeightSpec>,
    },
    Representability,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SearchPayload {
    shape: SearchShape,
}

enum Shape {
    Colimit(ColimitShape),
    Limit(LimitShape),
    Representability,
}

fn resolve_shape(xm: &CrossedModule, s: SearchShape) -> Result<Shape> {
    let c = &xm.base;
    use SearchShape as S;
    Ok(match s {
        S::Coinserter { f, g } => Shape::Colimit(ColimitShape::Coinserter { f: mor(c, f)?, g: mor(c, g)? }),
        S::Coequifier { alpha, beta } => Shape::Colimit(ColimitShape::Coequifier { alpha: cell(xm, alpha)?, beta: cell(xm, beta)? }),
        S::Coidentifier { alpha } => Shape::Colimit(ColimitShape::Coidentifier { alpha: cell(xm, alpha)? }),
        S::TensorByGroup { group, object } => {
            Shape::Colimit(ColimitShape::TensorByGroup { group: group.build()?, object: obj(c, object)? })
        }
        S::TensorByFree { letters, object } => Shape::Colimit(ColimitShape::TensorByFree { letters, object: obj(c, object)? }),
        S::Coproduct { a, b } => Shape::Colimit(ColimitShape::Coproduct { a: obj(c, a)?, b: obj(c, b)? }),
        S::TwoInitial => Shape::Colimit(ColimitShape::TwoInitial),
        S::Inserter { f, g } => Shape::Limit(LimitShape::Inserter { f: mor(c, f)?, g: mor(c, g)? }),
        S::Equifier { alpha, beta } => Shape::Limit(LimitShape::Equifier { alpha: cell(xm, alpha)?, beta: cell(xm, beta)? }),
        S::Comma { f, g } => Shape::Limit(LimitShape::Comma { f: mor(c, f)?, g: mor(c, g)? }),
        S::CotensorBy2 { object } => Shape::Limit(LimitShape::CotensorBy2 { object: obj(c, object)? }),
        S::Product { a, b } => Shape::Limit(LimitShape::Product { a: obj(c, a)?, b: obj(c, b)? }),
        S::Conical { diagram: spec, weight } => {
            let d = diagram(&spec, c)?;
            let wd = match weight {
                None => WeightedDiagram::conical(&d),
                Some(w) => {
                    let wd = w.build_diagram(d, c)?;
                    let r = wd.weight.check(&wd.shape);
                    if !r.is_valid() {
                        return Err(Error::Schema(format!("weight is not a functor ({})", first_violation(&r))));
                    }
                    wd
                }
            };
            Shape::Limit(LimitShape::Conical { diagram: wd })
        }
        S::Representability => Shape::Representability,
    })
}

fn search(inst: &InstanceFile, opts: &Options) -> Result<Outcome> {
    let xm = valid_module(inst)?;
    let p: SearchPayload = required(inst, "search")?;
    match resolve_shape(&xm, p.shape)? {
        Shape::Colimit(s) => {
            let v = search_weighted_colimit(&xm, &s, opts.budget)?;
            let what = format!("2-dimensional {}", s.name());
            Ok((verdict_status(&v), verdict_summary(&what, &v), json!({ "shape": s.name(), "verdict": v })))
        }
        Shape::Limit(s) => {
            let v = search_weighted_limit(&xm, &s, opts.budget)?;
            let what = format!("2-dimensional {}", s.name());
            Ok((verdict_status(&v), verdict_summary(&what, &v), json!({ "shape": s.name(), "verdict": v })))
        }
        Shape::Representability => {
            let r = representability_search(&xm, opts.budget)?;
            let summary = match r.found {
                Some((a, t)) => format!("represented by ({}, {})", xm.base.obj_name(a), xm.groups[a].name(t)),
                None => format!("not representable after {} pairs", r.pairs_checked),
            };
            Ok((pass_if(r.found.is_some()), summary, json!({ "shape": "representability", "representation": r })))
        }
    }
}

fn obstructions(inst: &InstanceFile, opts: &Options) -> Result<Outcome> {
    let xm = valid_module(inst)?;
    let r = obstruction_report(&xm, opts.budget)?;
    let (status, summary) = if let Some(reason) = &r.not_applicable {
        (Status::Pass, format!("not applicable: {reason}"))
    } else if !r.consistent {
        (Status::Fail, "items disagree".to_string())
    } else if r.all_false() {
        (Status::Fail, "all items false: G is nontrivial".to_string())
    } else {
        (Status::Pass, "all items true".to_string())
    };
    Ok((status, summary, to_value(&r)))
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoinserterArgs {
    f: String,
    g: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoequifierArgs {
    base: String,
    alpha: Word,
    beta: Word,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoidentifierArgs {
    base: String,
    alpha: Word,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorArgs {
    base: String,
    letters: Vec<String>,
}

/// A presentation-level construction; the tag is implied by the command
/// when absent.
#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "construction", rename_all = "kebab-case")]
enum ConstructionSpec {
    Coinserter(CoinserterArgs),
    Coequifier(CoequifierArgs),
    Coidentifier(CoidentifierArgs),
    TensorFree(TensorArgs),
}

impl ConstructionSpec {
    fn tag(&self) -> &'static str {
        match self {
            ConstructionSpec::Coinserter(_) => "coinserter",
            ConstructionSpec::Coequifier(_) => "coequifier",
            ConstructionSpec::Coidentifier(_) => "coidentifier",
            ConstructionSpec::TensorFree(_) => "tensor-free",
        }
    }
}

fn construction_spec(inst: &InstanceFile, implied: Option<&str>) -> Result<ConstructionSpec> {
    let mut v = inst.payload.clone().ok_or_else(|| Error::Schema("construction needs a payload".into()))?;
    if let (Some(tag), Some(map)) = (implied, v.as_object_mut()) {
        map.entry("construction").or_insert_with(|| Value::String(tag.into()));
    }
    let spec: ConstructionSpec = serde_json::from_value(v)?;
    if let Some(tag) = implied.filter(|&t| t != spec.tag()) {
        return Err(Error::Schema(format!("payload describes a {} but the command is {tag}", spec.tag())));
    }
    Ok(spec)
}

struct Built {
    construction: Construction,
    maps: Vec<(String, PresentedMap)>,
}

fn plain(presentation: GroupPresentation) -> Construction {
    Construction { presentation, added: Vec::new(), renamings: Vec::new() }
}

fn build(inst: &InstanceFile, spec: &ConstructionSpec) -> Result<Built> {
    Ok(match spec {
        ConstructionSpec::Coinserter(a) => {
            let (f, g) = (inst.map(&a.f)?, inst.map(&a.g)?);
            Built { construction: coinserter_presentation(&f, &g)?, maps: vec![(a.f.clone(), f), (a.g.clone(), g)] }
        }
        ConstructionSpec::Coequifier(a) => {
            let b = inst.presentation(&a.base)?;
            check_word(&a.alpha, b)?;
            check_word(&a.beta, b)?;
            Built { construction: plain(coequifier_presentation(b, &a.alpha, &a.beta)?), maps: Vec::new() }
        }
        ConstructionSpec::Coidentifier(a) => {
            let b = inst.presentation(&a.base)?;
            check_word(&a.alpha, b)?;
            Built { construction: plain(coidentifier_presentation(b, &a.alpha)?), maps: Vec::new() }
        }
        ConstructionSpec::TensorFree(a) => {
            let b = inst.presentation(&a.base)?;
            Built { construction: tensor_by_free_group_presentation(&a.letters, b)?, maps: Vec::new() }
        }
    })
}

fn check_word(w: &Word, p: &GroupPresentation) -> Result<()> {
    match w.max_generator() {
        Some(g) if g >= p.generator_count() => Err(Error::UnboundGenerator(g)),
        _ => Ok(()),
    }
}

fn construct(command: &str, inst: &InstanceFile) -> Result<Outcome> {
    let spec = construction_spec(inst, Some(command))?;
    let built = build(inst, &spec)?;
    let text = built.construction.presentation.render();
    let result = json!({
        "construction": spec.tag(),
        "presentation": built.construction.presentation,
        "text": text,
        "added": built.construction.added,
        "renamings": built.construction.renamings,
    });
    Ok((Status::Pass, text, result))
}

fn verify_homcount(inst: &InstanceFile, opts: &Options) -> Result<Outcome> {
    let spec = construction_spec(inst, None)?;
    let built = build(inst, &spec)?;
    let p = &built.construction.presentation;
    let budget = opts.budget;
    let mut map_reports = Vec::new();
    for (name, m) in &built.maps {
        for (gname, k) in &opts.panel {
            let r = m.check_on(k, budget)?;
            if !r.is_valid() {
                map_reports.push(json!({ "map": name, "group": gname, "report": r }));
            }
        }
    }
    let counts = match &spec {
        ConstructionSpec::Coinserter(_) => {
            let (f, g) = (&built.maps[0].1, &built.maps[1].1);
            verify_on_panel(&opts.panel, |k| verify_coinserter_by_homcount(p, f, g, k, budget))?
        }
        ConstructionSpec::Coequifier(a) => {
            let b = inst.presentation(&a.base)?;
            verify_on_panel(&opts.panel, |k| verify_coequifier_by_homcount(p, b, &a.alpha, &a.beta, k, budget))?
        }
        ConstructionSpec::Coidentifier(a) => {
            let b = inst.presentation(&a.base)?;
            verify_on_panel(&opts.panel, |k| verify_coidentifier_by_homcount(p, b, &a.alpha, k, budget))?
        }
        ConstructionSpec::TensorFree(a) => {
            let b = inst.presentation(&a.base)?;
            verify_on_panel(&opts.panel, |k| verify_tensor_by_homcount(p, a.letters.len(), b, k, budget))?
        }
    };
    let ok = map_reports.is_empty() && counts.iter().all(|h| h.holds());
    let summary =
        counts.iter().map(|h| format!("{}: {} {} {}", h.group, h.lhs, if h.holds() { "=" } else { "≠" }, h.rhs)).collect::<Vec<_>>().join(", ");
    let counts_json: Vec<Value> =
        counts.iter().map(|h| json!({ "group": h.group, "lhs": h.lhs, "rhs": h.rhs, "holds": h.holds() })).collect();
    let result = json!({
        "construction": spec.tag(),
        "presentation": p,
        "text": p.render(),
        "counts": counts_json,
        "map_violations": map_reports,
    });
    Ok((pass_if(ok), summary, result))
}

fn extend_functor(inst: &InstanceFile, opts: &Options) -> Result<Outcome> {
    let xm = valid_module(inst)?;
    let c = &xm.base;
    let p: PairPayload = inst.payload()?;
    let target = groups_target(&xm, opts.budget)?;
    let (h, m) = canonical_2functor_to_groups(&xm, &target)?;
    let morphism = validate_xmod_morphism(&xm, &h, &m);
    let functoriality = if morphism.is_valid() {
        check_2functoriality(&xm, &h, &m)
    } else {
        ValidationReport::not_applicable("2-functoriality", "not a crossed module morphism")
    };
    let ok = morphism.is_valid() && functoriality.is_valid();
    let mut result = json!({
        "target_objects": target.category.obj_names(),
        "functor": m.functor,
        "morphism": morphism,
        "two_functoriality": functoriality,
    });
    let mut summary = if ok { "canonical 2-functor valid".to_string() } else { "canonical 2-functor invalid".to_string() };
    match (p.f, p.g) {
        (Some(f), Some(g)) => {
            let (f, g) = (mor(c, f)?, mor(c, g)?);
            let up = two_cells(&xm, f, g)?.len();
            let (ff, fg) = (m.apply_one_cell(f), m.apply_one_cell(g));
            let down = two_cells(&h, ff, fg)?.len();
            summary.push_str(&format!("; 2-cells {} ⇒ {}: {up} upstairs, {down} downstairs", c.mor_name(f), c.mor_name(g)));
            result["two_cells"] = json!({ "f": f, "g": g, "image_f": ff, "image_g": fg, "upstairs": up, "downstairs": down });
        }
        (None, None) => {}
        _ => return Err(Error::Schema("extend-functor payload needs both f and g or neither".into())),
    }
    Ok((pass_if(ok), summary, result))
}
