//! One-dimensional (co)limits in the base and their two-dimensional
//! universal properties in `C_G`.

mod colimit;
mod conical;
mod csp;
mod obstruction;
mod weighted;

pub use colimit::{search_weighted_colimit, ColimitShape};
pub use conical::{check_2d_colimit, cocones, colimit_1d, cones, limit_1d, Universal};
pub use obstruction::{obstruction_report, ObstructionReport};
pub use weighted::{
    check_2d_limit, is_weighted_cone, representability_search, search_weighted_limit, weighted_cone_triviality,
    weighted_cones, weighted_limit_via_pi0, LimitShape, Representation, TrivialityReport, Weight, WeightedCone,
    WeightedDiagram,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, FinFunctor, MorId, ObjId};
use crate::groupkit::Elem;
use crate::report::ValidationReport;

/// A diagram `D: J → C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub shape: FinCategory,
    pub functor: FinFunctor,
}

impl Diagram {
    pub fn new(shape: FinCategory, functor: FinFunctor, c: &FinCategory) -> Result<Self> {
        let r = functor.check(&shape, c);
        match r.violations.first() {
            Some(v) => Err(Error::ShapeMismatch(format!("diagram is not a functor: {}", v.detail))),
            None => Ok(Diagram { shape, functor }),
        }
    }

    /// The diagram picking out the given objects over a discrete shape.
    pub fn discrete(objects: &[ObjId], c: &FinCategory) -> Self {
        let shape = FinCategory::discrete(objects.len());
        let functor = FinFunctor {
            obj_map: objects.to_vec(),
            mor_map: objects.iter().map(|&a| c.id(a)).collect(),
        };
        Diagram { shape, functor }
    }

    /// `f, g: A ⇉ B` over the parallel pair.
    pub fn parallel(f: MorId, g: MorId, c: &FinCategory) -> Result<Self> {
        if c.dom(f) != c.dom(g) || c.cod(f) != c.cod(g) {
            return Err(Error::NotParallel { f, g });
        }
        let (a, b) = (c.dom(f), c.cod(f));
        Diagram::new(
            FinCategory::parallel_pair(),
            FinFunctor { obj_map: vec![a, b], mor_map: vec![c.id(a), c.id(b), f, g] },
            c,
        )
    }

    pub fn is_connected(&self) -> bool {
        self.shape.is_connected()
    }
}

/// Legs `D(j) → apex`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cocone {
    pub apex: ObjId,
    pub legs: Vec<MorId>,
}

/// Legs `apex → D(j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cone {
    pub apex: ObjId,
    pub legs: Vec<MorId>,
}

/// Finite evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub apex: Option<ObjId>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub morphisms: Vec<MorId>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<Elem>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub cones: Vec<WeightedCone>,
    /// Number of objects isomorphic to a universal one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iso_class: Option<usize>,
    pub detail: String,
}

impl Witness {
    pub fn new(kind: &str, detail: impl Into<String>) -> Self {
        Witness {
            kind: kind.to_string(),
            apex: None,
            morphisms: Vec::new(),
            elements: Vec::new(),
            cones: Vec::new(),
            iso_class: None,
            detail: detail.into(),
        }
    }

    pub fn apex(mut self, a: ObjId) -> Self {
        self.apex = Some(a);
        self
    }

    pub fn morphisms(mut self, m: Vec<MorId>) -> Self {
        self.morphisms = m;
        self
    }

    pub fn elements(mut self, e: Vec<Elem>) -> Self {
        self.elements = e;
        self
    }

    pub fn cones(mut self, c: Vec<WeightedCone>) -> Self {
        self.cones = c;
        self
    }

    pub fn iso_class(mut self, n: usize) -> Self {
        self.iso_class = Some(n);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum SearchVerdict {
    Exists { witness: Witness },
    NotExists { witness: Witness },
    NotApplicable { reason: String },
    BudgetExceeded { what: String, bound: u64 },
}

impl SearchVerdict {
    pub fn exists(&self) -> bool {
        matches!(self, SearchVerdict::Exists { .. })
    }

    pub fn not_exists(&self) -> bool {
        matches!(self, SearchVerdict::NotExists { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            SearchVerdict::Exists { witness } | SearchVerdict::NotExists { witness } => Some(witness),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            SearchVerdict::Exists { .. } => "exists",
            SearchVerdict::NotExists { .. } => "not-exists",
            SearchVerdict::NotApplicable { .. } => "not-applicable",
            SearchVerdict::BudgetExceeded { .. } => "budget-exceeded",
        }
    }
}

/// Turns a budget error into the corresponding verdict.
pub(crate) fn settle(r: Result<SearchVerdict>) -> Result<SearchVerdict> {
    match r {
        Err(Error::BudgetExceeded { what, bound, .. }) => Ok(SearchVerdict::BudgetExceeded { what: what.to_string(), bound }),
        other => other,
    }
}

pub(crate) fn exists(w: Witness) -> SearchVerdict {
    SearchVerdict::Exists { witness: w }
}

pub(crate) fn not_exists(w: Witness) -> SearchVerdict {
    SearchVerdict::NotExists { witness: w }
}

pub(crate) fn first_violation(r: &ValidationReport) -> Option<String> {
    r.violations.first().map(|v| v.detail.clone())
}
