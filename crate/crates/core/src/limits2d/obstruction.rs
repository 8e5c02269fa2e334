use serde::Serialize;

use super::colimit::{search_weighted_colimit, ColimitShape};
use super::{SearchVerdict, Witness};
use crate::budget::Budget;
use crate::error::Result;
use crate::xmod::CrossedModule;

/// The items that must agree over a base with an initial object `0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_applicable: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g_trivial: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub initial_is_2_initial: Option<bool>,
    /// `None` when `0 + 0` does not exist in the base.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coproduct_is_2_coproduct: Option<bool>,
    pub consistent: bool,
    /// Evidence for each item that is false, in item order.
    pub witnesses: Vec<Witness>,
}

impl ObstructionReport {
    pub fn items(&self) -> Vec<bool> {
        [self.g_trivial, self.initial_is_2_initial, self.coproduct_is_2_coproduct].into_iter().flatten().collect()
    }

    pub fn all_false(&self) -> bool {
        let items = self.items();
        !items.is_empty() && items.iter().all(|b| !b)
    }
}

fn item(v: &SearchVerdict, witnesses: &mut Vec<Witness>) -> Option<bool> {
    match v {
        SearchVerdict::Exists { .. } => Some(true),
        SearchVerdict::NotExists { witness } if witness.kind == "no-1d-colimit" => None,
        SearchVerdict::NotExists { witness } => {
            witnesses.push(witness.clone());
            Some(false)
        }
        _ => None,
    }
}

/// Evaluates each item; `consistent` is false if any two disagree.
pub fn obstruction_report(xm: &CrossedModule, budget: Budget) -> Result<ObstructionReport> {
    let c = &xm.base;
    let Some(zero) = c.initial_object() else {
        return Ok(ObstructionReport {
            not_applicable: Some("base has no initial object".into()),
            g_trivial: None,
            initial_is_2_initial: None,
            coproduct_is_2_coproduct: None,
            consistent: true,
            witnesses: Vec::new(),
        });
    };
    let mut witnesses = Vec::new();
    let nontrivial = c.objects().find(|&a| !xm.groups[a].is_trivial());
    if let Some(a) = nontrivial {
        witnesses.push(
            Witness::new("nontrivial-group", format!("G({}) has order {}", c.obj_name(a), xm.groups[a].order()))
                .apex(a)
                .elements(vec![1]),
        );
    }
    let g_trivial = Some(nontrivial.is_none());
    let initial = search_weighted_colimit(xm, &ColimitShape::TwoInitial, budget)?;
    let initial_is_2_initial = item(&initial, &mut witnesses);
    let coproduct = search_weighted_colimit(xm, &ColimitShape::Coproduct { a: zero, b: zero }, budget)?;
    let coproduct_is_2_coproduct = item(&coproduct, &mut witnesses);
    let mut report = ObstructionReport {
        not_applicable: None,
        g_trivial,
        initial_is_2_initial,
        coproduct_is_2_coproduct,
        consistent: true,
        witnesses,
    };
    let items = report.items();
    report.consistent = items.windows(2).all(|w| w[0] == w[1]);
    Ok(report)
}
