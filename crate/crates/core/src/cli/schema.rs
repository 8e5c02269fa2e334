//! Instance and report documents, schema `v1`.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, FinFunctor, MorId, ObjId};
use crate::groupkit::{library, Elem, FinGroup, GroupHom, GroupPresentation, Word};
use crate::grpcolim::PresentedMap;
use crate::limits2d::{Diagram, Weight, WeightedDiagram};
use crate::xmod::CrossedModule;

pub const SCHEMA: &str = "v1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub name: String,
    pub dom: ObjId,
    pub cod: ObjId,
}

/// Objects and morphisms by position; composition as `[g, f, g∘f]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategorySpec {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismSpec>,
    pub identities: Vec<MorId>,
    pub composition: Vec<[MorId; 3]>,
}

impl CategorySpec {
    pub fn from_category(c: &FinCategory) -> Self {
        let mut composition = Vec::new();
        for g in c.morphisms() {
            for f in c.morphisms() {
                if let Ok(gf) = c.compose(g, f) {
                    composition.push([g, f, gf]);
                }
            }
        }
        CategorySpec {
            objects: c.obj_names().to_vec(),
            morphisms: c
                .morphisms()
                .map(|f| MorphismSpec { name: c.mor_name(f).to_string(), dom: c.dom(f), cod: c.cod(f) })
                .collect(),
            identities: c.objects().map(|a| c.id(a)).collect(),
            composition,
        }
    }

    pub fn build(&self) -> Result<FinCategory> {
        FinCategory::from_parts(
            self.objects.clone(),
            self.morphisms.iter().map(|m| (m.name.clone(), m.dom, m.cod)).collect(),
            self.identities.clone(),
            self.composition.iter().map(|t| (t[0], t[1], t[2])),
        )
    }
}

/// A group given by a library name or by its table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Named { name: String },
    Table(FinGroup),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FinGroup> {
        match self {
            GroupSpec::Named { name } => library::by_name(name),
            GroupSpec::Table(g) => Ok(g.clone()),
        }
    }
}

/// `groups[A]`, `actions[f]` as element maps, `gamma[A][α]` as morphism ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct XModSpec {
    pub groups: Vec<GroupSpec>,
    pub actions: Vec<Vec<Elem>>,
    pub gamma: Vec<Vec<MorId>>,
}

impl XModSpec {
    pub fn from_module(xm: &CrossedModule) -> Self {
        XModSpec {
            groups: xm.groups.iter().cloned().map(GroupSpec::Table).collect(),
            actions: xm.actions.iter().map(|h| h.map.clone()).collect(),
            gamma: xm.gamma.clone(),
        }
    }

    pub fn build(&self, base: FinCategory) -> Result<CrossedModule> {
        let groups = self.groups.iter().map(GroupSpec::build).collect::<Result<Vec<_>>>()?;
        let actions = self.actions.iter().cloned().map(GroupHom::new).collect();
        CrossedModule::new(base, groups, actions, self.gamma.clone())
    }
}

/// A map between named presentations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSpec {
    pub source: String,
    pub target: String,
    pub images: Vec<Word>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub schema: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<CategorySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crossed_module: Option<XModSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub presentations: BTreeMap<String, GroupPresentation>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, MapSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub payload: Option<serde_json::Value>,
}

impl InstanceFile {
    pub fn new(name: impl Into<String>) -> Self {
        InstanceFile {
            schema: SCHEMA.into(),
            name: Some(name.into()),
            category: None,
            crossed_module: None,
            presentations: BTreeMap::new(),
            maps: BTreeMap::new(),
            payload: None,
        }
    }

    pub fn with_module(name: impl Into<String>, xm: &CrossedModule) -> Self {
        let mut f = InstanceFile::new(name);
        f.category = Some(CategorySpec::from_category(&xm.base));
        f.crossed_module = Some(XModSpec::from_module(xm));
        f
    }

    pub fn parse(text: &str) -> Result<Self> {
        let f: InstanceFile = serde_json::from_str(text)?;
        if f.schema != SCHEMA {
            return Err(Error::Schema(format!("unsupported schema {:?}, expected {SCHEMA:?}", f.schema)));
        }
        Ok(f)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance serializes");
        s.push('\n');
        s
    }

    pub fn category(&self) -> Result<FinCategory> {
        self.category.as_ref().ok_or_else(|| Error::Schema("instance has no category".into()))?.build()
    }

    pub fn crossed_module(&self) -> Result<CrossedModule> {
        let spec = self.crossed_module.as_ref().ok_or_else(|| Error::Schema("instance has no crossed_module".into()))?;
        spec.build(self.category()?)
    }

    pub fn presentation(&self, name: &str) -> Result<&GroupPresentation> {
        self.presentations.get(name).ok_or_else(|| Error::Schema(format!("unknown presentation {name:?}")))
    }

    pub fn map(&self, name: &str) -> Result<PresentedMap> {
        let m = self.maps.get(name).ok_or_else(|| Error::Schema(format!("unknown map {name:?}")))?;
        PresentedMap::new(self.presentation(&m.source)?.clone(), self.presentation(&m.target)?.clone(), m.images.clone())
    }

    /// The command payload, or the default payload when absent.
    pub fn payload<T: DeserializeOwned + Default>(&self) -> Result<T> {
        match &self.payload {
            None => Ok(T::default()),
            Some(v) => Ok(serde_json::from_value(v.clone())?),
        }
    }
}

/// A shape category by name (`span`, `discrete-3`, …) or given explicitly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ShapeSpec {
    Named(String),
    Explicit(CategorySpec),
}

impl ShapeSpec {
    pub fn build(&self) -> Result<FinCategory> {
        match self {
            ShapeSpec::Explicit(c) => c.build(),
            ShapeSpec::Named(n) => named_shape(n),
        }
    }
}

pub fn named_shape(name: &str) -> Result<FinCategory> {
    let sized = |prefix: &str| name.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok());
    Ok(match name {
        "terminal" => FinCategory::terminal(),
        "walking-arrow" => FinCategory::walking_arrow(),
        "span" => FinCategory::span(),
        "cospan" => FinCategory::cospan(),
        "parallel-pair" => FinCategory::parallel_pair(),
        "zigzag" => FinCategory::zigzag(),
        _ => {
            if let Some(n) = sized("discrete-") {
                FinCategory::discrete(n)
            } else if let Some(n) = sized("chain-").filter(|&n| n > 0) {
                FinCategory::chain(n)
            } else {
                return Err(Error::Schema(format!("unknown shape {name:?}")));
            }
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramSpec {
    pub shape: ShapeSpec,
    pub functor: FinFunctor,
}

impl DiagramSpec {
    pub fn build(&self, c: &FinCategory) -> Result<Diagram> {
        Diagram::new(self.shape.build()?, self.functor.clone(), c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightSpec {
    pub values: Vec<ShapeSpec>,
    pub maps: Vec<FinFunctor>,
}

impl WeightSpec {
    pub fn build_diagram(&self, d: Diagram, c: &FinCategory) -> Result<WeightedDiagram> {
        let values = self.values.iter().map(ShapeSpec::build).collect::<Result<Vec<_>>>()?;
        WeightedDiagram::new(d.shape, Weight { values, maps: self.maps.clone() }, d.functor, c)
    }
}

/// Top-level report document.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    pub status: Status,
    pub summary: String,
    pub result: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    BudgetExceeded,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::BudgetExceeded => 3,
        }
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn instances_round_trip() {
        for (name, xm) in fixtures::named() {
            let f = InstanceFile::with_module(name, &xm);
            let back = InstanceFile::parse(&f.to_json()).unwrap();
            assert_eq!(back, f);
            assert_eq!(back.crossed_module().unwrap(), xm, "{name}");
        }
    }

    #[test]
    fn schema_version_is_checked() {
        let err = InstanceFile::parse(r#"{"schema":"v0"}"#).unwrap_err();
        assert!(matches!(err, Error::Schema(_)));
        assert!(InstanceFile::parse(r#"{"schema":"v1","bogus":1}"#).is_err());
    }

    #[test]
    fn named_groups_and_shapes() {
        let g: GroupSpec = serde_json::from_str(r#"{"name":"S3"}"#).unwrap();
        assert_eq!(g.build().unwrap().order(), 6);
        assert_eq!(named_shape("discrete-3").unwrap().object_count(), 3);
        assert!(named_shape("blob").is_err());
    }
}
