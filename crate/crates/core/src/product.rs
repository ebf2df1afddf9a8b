//! A graph product: a simplicial graph with one vertex group per vertex,
//! and the `vertex:k` word syntax.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{SimplicialGraph, VertexId};
use crate::group::{Elem, VertexGroup};

/// An element of one vertex group, tagged with its vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexElement {
    pub vertex: VertexId,
    pub value: Elem,
}

/// A letter of a word; in a normal form it is never the identity.
pub type Syllable = VertexElement;

impl VertexElement {
    pub fn new(vertex: VertexId, value: Elem) -> Self {
        VertexElement { vertex, value }
    }
}

/// A canonical reduced word. Equal group elements have identical normal forms.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalForm {
    pub(crate) syllables: Vec<Syllable>,
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm::default()
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// `|g|_Γ`, the number of syllables.
    pub fn syllable_length(&self) -> usize {
        self.syllables.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphProduct {
    graph: SimplicialGraph,
    groups: Vec<VertexGroup>,
}

impl GraphProduct {
    /// `groups[i]` is the vertex group of vertex `i`.
    pub fn new(graph: SimplicialGraph, groups: Vec<VertexGroup>) -> Result<Self> {
        if groups.len() != graph.len() {
            return Err(Error::Config(format!(
                "{} vertex groups for {} vertices",
                groups.len(),
                graph.len()
            )));
        }
        Ok(GraphProduct { graph, groups })
    }

    pub fn graph(&self) -> &SimplicialGraph {
        &self.graph
    }

    pub fn groups(&self) -> &[VertexGroup] {
        &self.groups
    }

    pub fn group(&self, v: VertexId) -> &VertexGroup {
        &self.groups[v.0]
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.graph.vertex(name)
    }

    /// Product of two elements of the same vertex group.
    pub fn multiply_elements(&self, a: VertexElement, b: VertexElement) -> Result<VertexElement> {
        if a.vertex != b.vertex {
            return Err(Error::MixedGroups(
                self.graph.name(a.vertex).into(),
                self.graph.name(b.vertex).into(),
            ));
        }
        let g = self.group(a.vertex);
        Ok(VertexElement::new(a.vertex, g.multiply(a.value, b.value)))
    }

    /// `|g|_{X_v}` for a vertex-group element.
    pub fn vertex_word_length(&self, a: VertexElement) -> u64 {
        self.group(a.vertex).word_length(a.value)
    }

    /// The generating set `X = ∪ X_v` as syllables, in vertex order.
    pub fn generators(&self) -> Vec<Syllable> {
        self.graph
            .vertices()
            .flat_map(|v| {
                self.group(v)
                    .generators()
                    .into_iter()
                    .map(move |x| Syllable::new(v, x))
            })
            .collect()
    }

    pub(crate) fn check_syllable(&self, s: Syllable) -> Result<()> {
        if s.vertex.0 >= self.graph.len() {
            return Err(Error::VertexOutOfRange(s.vertex.0));
        }
        if !self.group(s.vertex).contains(s.value) {
            return Err(Error::WordSyntax {
                token: format!("{}:{}", self.graph.name(s.vertex), s.value),
                reason: format!("not an element of {}", self.group(s.vertex).kind_name()),
            });
        }
        Ok(())
    }

    /// Parses whitespace-separated `vertex:k` tokens. The identity may be
    /// written as an empty string or `(empty)`.
    pub fn parse_word(&self, text: &str) -> Result<Vec<Syllable>> {
        let text = text.trim();
        if text == "(empty)" {
            return Ok(Vec::new());
        }
        text.split_whitespace()
            .map(|token| {
                let (name, elem) = token.split_once(':').ok_or_else(|| Error::WordSyntax {
                    token: token.to_string(),
                    reason: "expected `vertex:k`".into(),
                })?;
                let v = self.graph.vertex(name)?;
                Ok(Syllable::new(v, self.group(v).parse_element(elem)?))
            })
            .collect()
    }

    pub fn format_syllable(&self, s: Syllable) -> String {
        format!(
            "{}:{}",
            self.graph.name(s.vertex),
            self.group(s.vertex).element_name(s.value)
        )
    }

    /// Space-separated tokens; the identity renders as the empty string.
    pub fn format_syllables(&self, word: &[Syllable]) -> String {
        word.iter()
            .map(|&s| self.format_syllable(s))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn format(&self, x: &NormalForm) -> String {
        self.format_syllables(&x.syllables)
    }

    /// Like [`format`](Self::format) but shows the identity as `(empty)`.
    pub fn display<'a>(&'a self, x: &'a NormalForm) -> impl fmt::Display + 'a {
        DisplayWord(self, x)
    }
}

struct DisplayWord<'a>(&'a GraphProduct, &'a NormalForm);

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1.is_identity() {
            f.write_str("(empty)")
        } else {
            f.write_str(&self.0.format(self.1))
        }
    }
}
