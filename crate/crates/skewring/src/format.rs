//! JSON interchange formats for partial-action instances and graphs, plus
//! the conversions into the domain types. JSON is the single interchange
//! format; the compact graph text form is a convenience parser on top of
//! the same data.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::group::{FiniteGroup, Group, GroupElem};
use crate::leavitt::{Edge, Graph, GraphError};
use crate::linalg::{LinAlgError, PrimeField};
use crate::paction::{ActionError, SetPartialAction};

#[derive(Debug)]
pub enum FormatError {
    Json(serde_json::Error),
    Field(LinAlgError),
    Group(crate::group::GroupError),
    Action(ActionError),
    Graph(GraphError),
    UnknownPoint { t: usize, label: String },
    DuplicateCarrierLabel { label: String },
    ComponentOutOfRange { t: usize, order: usize },
    /// Only finite table groups have a JSON instance form.
    FreeGroupNotSerializable,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Json(e) => write!(f, "invalid JSON: {e}"),
            FormatError::Field(e) => write!(f, "invalid field: {e}"),
            FormatError::Group(e) => write!(f, "invalid group: {e}"),
            FormatError::Action(e) => write!(f, "invalid action: {e}"),
            FormatError::Graph(e) => write!(f, "invalid graph: {e}"),
            FormatError::UnknownPoint { t, label } => {
                write!(f, "component t={t} mentions unknown carrier point {label:?}")
            }
            FormatError::DuplicateCarrierLabel { label } => {
                write!(f, "carrier label {label:?} appears twice")
            }
            FormatError::ComponentOutOfRange { t, order } => {
                write!(f, "component index t={t} outside the group of order {order}")
            }
            FormatError::FreeGroupNotSerializable => {
                write!(f, "free-group actions have no JSON instance form; use a graph file")
            }
        }
    }
}

impl std::error::Error for FormatError {}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Json(e)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum GroupSpec {
    Cyclic { n: usize },
    Table { mul: Vec<Vec<usize>> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComponentSpec {
    pub t: usize,
    /// (x, h_t(x)) pairs by carrier label; domains are inferred.
    pub pairs: Vec<(String, String)>,
}

/// A complete partial-action instance. The identity component is implicit
/// and must be omitted from `action`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceFile {
    pub field: FieldSpec,
    pub group: GroupSpec,
    pub carrier: Vec<String>,
    pub action: Vec<ComponentSpec>,
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("instances serialize")
    }

    /// Converts the file into a field and an action, checking labels and
    /// component indices. Axiom validity is a separate question.
    pub fn build(&self) -> Result<(PrimeField, SetPartialAction), FormatError> {
        let field = PrimeField::new(self.field.p).map_err(FormatError::Field)?;
        let finite = match &self.group {
            GroupSpec::Cyclic { n } => FiniteGroup::cyclic(*n).map_err(FormatError::Group)?,
            GroupSpec::Table { mul } => {
                FiniteGroup::from_table(mul.clone()).map_err(FormatError::Group)?
            }
        };
        let order = finite.order();
        let group = Group::Table(finite);
        let mut index: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, label) in self.carrier.iter().enumerate() {
            if index.insert(label.as_str(), i).is_some() {
                return Err(FormatError::DuplicateCarrierLabel { label: label.clone() });
            }
        }
        let mut maps = Vec::new();
        for comp in &self.action {
            if comp.t >= order {
                return Err(FormatError::ComponentOutOfRange { t: comp.t, order });
            }
            let mut pairs = Vec::new();
            for (x, y) in &comp.pairs {
                let lookup = |label: &String| {
                    index.get(label.as_str()).copied().ok_or(FormatError::UnknownPoint {
                        t: comp.t,
                        label: label.clone(),
                    })
                };
                pairs.push((lookup(x)?, lookup(y)?));
            }
            maps.push((GroupElem::Table(comp.t), pairs));
        }
        let action = SetPartialAction::new(group, self.carrier.clone(), maps)
            .map_err(FormatError::Action)?;
        Ok((field, action))
    }

    /// The instance form of an action over a finite table group.
    pub fn from_action(action: &SetPartialAction, field: PrimeField) -> Result<Self, FormatError> {
        let finite = match action.group() {
            Group::Table(g) => g,
            Group::Free { .. } => return Err(FormatError::FreeGroupNotSerializable),
        };
        let mut components = Vec::new();
        for t in action.support() {
            let &GroupElem::Table(i) = t else {
                return Err(FormatError::FreeGroupNotSerializable);
            };
            if i == finite.identity() {
                continue;
            }
            let map = action.map(t).expect("support element");
            let pairs = map
                .domain()
                .map(|x| {
                    let y = map.apply(x).expect("domain point");
                    (action.points()[x].clone(), action.points()[y].clone())
                })
                .collect();
            components.push(ComponentSpec { t: i, pairs });
        }
        Ok(InstanceFile {
            field: FieldSpec { p: field.modulus() },
            group: GroupSpec::Table { mul: finite.table().to_vec() },
            carrier: action.points().to_vec(),
            action: components,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeSpec {
    pub name: String,
    pub src: String,
    pub rng: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeSpec>,
}

impl GraphFile {
    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graphs serialize")
    }

    pub fn build(&self) -> Result<Graph, FormatError> {
        let index: BTreeMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let mut edges = Vec::new();
        for e in &self.edges {
            let lookup = |label: &String| {
                index
                    .get(label.as_str())
                    .copied()
                    .ok_or(FormatError::Graph(GraphError::UnknownVertex(label.clone())))
            };
            edges.push(Edge { name: e.name.clone(), src: lookup(&e.src)?, rng: lookup(&e.rng)? });
        }
        Graph::new(self.vertices.clone(), edges).map_err(FormatError::Graph)
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphFile {
            vertices: g.vertex_names().to_vec(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeSpec {
                    name: e.name.clone(),
                    src: g.vertex_names()[e.src].clone(),
                    rng: g.vertex_names()[e.rng].clone(),
                })
                .collect(),
        }
    }
}

/// Reads a graph from either form: JSON when the text looks like a JSON
/// object, the compact edge-list form otherwise.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    if text.trim_start().starts_with('{') {
        GraphFile::from_json(text)?.build()
    } else {
        Graph::parse_text(text).map_err(FormatError::Graph)
    }
}
