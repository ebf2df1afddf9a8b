//! JSON configuration for a graph product with its vertex cocycles.
//!
//! ```json
//! {
//!   "p": 2,
//!   "vertices": [
//!     {"name": "a", "group": {"kind": "integers"}},
//!     {"name": "b", "group": {"kind": "cyclic", "order": 2}, "adim": 0}
//!   ],
//!   "edges": [["a", "b"]],
//!   "cocycles": {"b": {"kind": "padded", "base": {"kind": "regular", "c": 1}, "c": "3/2"}}
//! }
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::action::ProductAction;
use crate::cocycle::{CocycleKind, VertexCocycle};
use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;
use crate::group::{TableGroup, VertexGroup};
use crate::numeric::{int, parse_rational, Exponent};
use crate::product::GraphProduct;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductConfig {
    pub p: f64,
    pub vertices: Vec<VertexConfig>,
    #[serde(default)]
    pub edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cocycles: BTreeMap<String, CocycleConfig>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexConfig {
    pub name: String,
    pub group: GroupConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub adim: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupConfig {
    Integers,
    Cyclic {
        order: u32,
    },
    /// Multiplication table by element name: `table[i][j] = elements[i]·elements[j]`.
    Table {
        elements: Vec<String>,
        identity: String,
        table: Vec<Vec<String>>,
        generators: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum CocycleConfig {
    Translation,
    Regular { c: Scale },
    Padded { base: Box<CocycleConfig>, c: Scale },
}

/// A positive rational constant, written as a JSON number or as text such
/// as `"3/2"`. Kept as text so round trips are exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scale(pub String);

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for Scale {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Scale {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(serde_json::Number),
            Text(String),
        }
        let text = match Raw::deserialize(d)? {
            Raw::Number(n) => n.to_string(),
            Raw::Text(t) => t,
        };
        parse_rational(&text).map_err(serde::de::Error::custom)?;
        Ok(Scale(text))
    }
}

/// A validated configuration, ready to use.
#[derive(Clone, Debug)]
pub struct Model {
    pub action: ProductAction,
    pub alphas: Vec<f64>,
    pub adims: Vec<u64>,
}

impl Model {
    pub fn product(&self) -> &GraphProduct {
        self.action.product()
    }

    pub fn orders(&self) -> Vec<Option<u64>> {
        self.product().groups().iter().map(VertexGroup::order).collect()
    }
}

fn group_of(name: &str, cfg: &GroupConfig) -> Result<VertexGroup> {
    match cfg {
        GroupConfig::Integers => Ok(VertexGroup::integers(name)),
        GroupConfig::Cyclic { order } => VertexGroup::cyclic(name, *order),
        GroupConfig::Table {
            elements,
            identity,
            table,
            generators,
        } => {
            let index = |e: &String| {
                elements.iter().position(|x| x == e).ok_or_else(|| Error::InvalidGroup {
                    name: name.into(),
                    reason: format!("table entry `{e}` is not an element"),
                })
            };
            let rows = table
                .iter()
                .map(|row| row.iter().map(index).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let t = TableGroup::new(name, elements.clone(), identity, rows, generators)?;
            Ok(VertexGroup::table(t, name))
        }
    }
}

fn kind_of(cfg: &CocycleConfig) -> Result<CocycleKind> {
    Ok(match cfg {
        CocycleConfig::Translation => CocycleKind::Translation,
        CocycleConfig::Regular { c } => CocycleKind::Regular {
            scale: parse_rational(&c.0)?,
        },
        CocycleConfig::Padded { base, c } => CocycleKind::Padded {
            base: Box::new(kind_of(base)?),
            scale: parse_rational(&c.0)?,
        },
    })
}

impl ProductConfig {
    /// Parses JSON text; errors carry the field path and position.
    pub fn from_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let cfg: ProductConfig = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            let inner = e.into_inner();
            Error::Config(format!("at `{path}`: {inner}"))
        })?;
        cfg.build()?;
        Ok(cfg)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        ProductConfig::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// Builds the graph product, the vertex cocycles and the per-vertex data.
    pub fn build(&self) -> Result<Model> {
        let p = Exponent::new(self.p)?;
        let names: Vec<&str> = self.vertices.iter().map(|v| v.name.as_str()).collect();
        let edges: Vec<(&str, &str)> = self.edges.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        let graph = SimplicialGraph::new(&names, &edges)?;
        let groups = self
            .vertices
            .iter()
            .map(|v| group_of(&v.name, &v.group))
            .collect::<Result<Vec<_>>>()?;
        if let Some(name) = self.cocycles.keys().find(|k| !names.contains(&k.as_str())) {
            return Err(Error::UnknownVertex(name.clone()));
        }
        let cocycles = groups
            .iter()
            .map(|g| {
                let kind = match self.cocycles.get(g.name()) {
                    Some(c) => kind_of(c)?,
                    None if g.is_finite() => CocycleKind::Regular { scale: int(1) },
                    None => CocycleKind::Translation,
                };
                VertexCocycle::from_kind(g, kind)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut alphas = Vec::new();
        let mut adims = Vec::new();
        for (v, g) in self.vertices.iter().zip(&groups) {
            let alpha = v.alpha.unwrap_or(1.0);
            if !(0.0..=1.0).contains(&alpha) {
                return Err(Error::OutOfUnitInterval {
                    what: format!("alpha of `{}`", v.name),
                    value: alpha,
                });
            }
            alphas.push(alpha);
            adims.push(v.adim.unwrap_or(if g.is_finite() { 0 } else { 1 }));
        }
        let product = GraphProduct::new(graph, groups)?;
        Ok(Model {
            action: ProductAction::new(product, p, cocycles)?,
            alphas,
            adims,
        })
    }
}
