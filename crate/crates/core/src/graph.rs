//! Finite simplicial graphs.
//!
//! Vertices are identified by user-supplied names; their declaration order
//! fixes the index of every vertex and is used for all canonical
//! tie-breaking downstream (normal forms, clique order, padding schedule).

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count; vertex sets are stored as a `u64` mask.
pub const MAX_VERTICES: usize = 64;

/// Index of a vertex in declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A set of vertices of one graph.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub fn singleton(v: VertexId) -> Self {
        VertexSet(1 << v.0)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: VertexId) -> bool {
        v.0 < 64 && self.0 >> v.0 & 1 == 1
    }

    pub fn insert(&mut self, v: VertexId) {
        self.0 |= 1 << v.0;
    }

    pub fn remove(&mut self, v: VertexId) {
        self.0 &= !(1 << v.0);
    }

    pub fn with(mut self, v: VertexId) -> Self {
        self.insert(v);
        self
    }

    pub fn without(mut self, v: VertexId) -> Self {
        self.remove(v);
        self
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Members in increasing index order.
    pub fn iter(self) -> impl Iterator<Item = VertexId> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(VertexId(i))
            }
        })
    }

    pub fn first(self) -> Option<VertexId> {
        self.iter().next()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.0)).finish()
    }
}

/// A finite graph without loops or multiple edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialGraph {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    links: Vec<VertexSet>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && !name
            .chars()
            .any(|c| c.is_whitespace() || c == ':' || c == ',' || c == '"')
}

impl SimplicialGraph {
    /// Builds a graph from vertex names (in order) and edges given as name pairs.
    /// Repeated edges collapse into one.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        if vertices.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                got: vertices.len(),
                max: MAX_VERTICES,
            });
        }
        let mut names = Vec::with_capacity(vertices.len());
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            let v = v.as_ref();
            if !valid_name(v) {
                return Err(Error::InvalidName(v.to_string()));
            }
            if index.insert(v.to_string(), VertexId(i)).is_some() {
                return Err(Error::DuplicateVertex(v.to_string()));
            }
            names.push(v.to_string());
        }
        let mut links = vec![VertexSet::empty(); names.len()];
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index.get(a).ok_or_else(|| Error::UnknownVertex(a.into()))?;
            let ib = *index.get(b).ok_or_else(|| Error::UnknownVertex(b.into()))?;
            if ia == ib {
                return Err(Error::LoopEdge(a.to_string()));
            }
            links[ia.0].insert(ib);
            links[ib.0].insert(ia);
        }
        Ok(SimplicialGraph {
            names,
            index,
            links,
        })
    }

    /// Builds a graph on vertices `0..n` from index pairs.
    pub fn from_indices(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let named: Vec<(String, String)> = edges
            .iter()
            .map(|&(a, b)| {
                let get = |i: usize| names.get(i).cloned().ok_or(Error::VertexOutOfRange(i));
                Ok((get(a)?, get(b)?))
            })
            .collect::<Result<_>>()?;
        SimplicialGraph::new(&names, &named)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.names.len()).map(VertexId)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.names.len())
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// Parses a comma- or whitespace-separated list of vertex names.
    pub fn parse_set(&self, text: &str) -> Result<VertexSet> {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| self.vertex(s))
            .collect()
    }

    pub fn set_names(&self, set: VertexSet) -> Vec<&str> {
        set.iter().map(|v| self.name(v)).collect()
    }

    fn check(&self, v: VertexId) -> Result<()> {
        if v.0 < self.names.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v.0))
        }
    }

    fn check_set(&self, set: VertexSet) -> Result<()> {
        match set.difference(self.vertex_set()).first() {
            Some(v) => Err(Error::VertexOutOfRange(v.0)),
            None => Ok(()),
        }
    }

    pub fn link(&self, v: VertexId) -> Result<VertexSet> {
        self.check(v)?;
        Ok(self.links[v.0])
    }

    pub fn star(&self, v: VertexId) -> Result<VertexSet> {
        Ok(self.link(v)?.with(v))
    }

    /// Unchecked link lookup for hot loops; `v` must be a vertex of the graph.
    #[inline]
    pub(crate) fn link_of(&self, v: VertexId) -> VertexSet {
        self.links[v.0]
    }

    #[inline]
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.links[u.0].contains(v)
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for v in self.links[u.0].iter().filter(|v| *v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Full subgraph on `set`, keeping the names and relative order of its vertices.
    pub fn full_subgraph(&self, set: VertexSet) -> Result<SimplicialGraph> {
        self.check_set(set)?;
        let names: Vec<&str> = self.set_names(set);
        let edges: Vec<(&str, &str)> = self
            .edges()
            .into_iter()
            .filter(|(a, b)| set.contains(*a) && set.contains(*b))
            .map(|(a, b)| (self.name(a), self.name(b)))
            .collect();
        SimplicialGraph::new(&names, &edges)
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| set.without(v).is_subset(self.links[v.0]))
    }

    /// Inclusion-maximal complete subsets, sorted lexicographically by their
    /// increasing vertex sequences.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        if self.is_empty() {
            out.push(VertexSet::empty());
            return out;
        }
        self.bron_kerbosch(VertexSet::empty(), self.vertex_set(), VertexSet::empty(), &mut out);
        out.sort_by_key(|c| c.iter().map(|v| v.0).collect::<Vec<_>>());
        out
    }

    fn bron_kerbosch(
        &self,
        r: VertexSet,
        mut p: VertexSet,
        mut x: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|u| p.intersection(self.links[u.0]).len())
            .expect("p is non-empty");
        for v in p.difference(self.links[pivot.0]).iter() {
            let n = self.links[v.0];
            self.bron_kerbosch(r.with(v), p.intersection(n), x.intersection(n), out);
            p.remove(v);
            x.insert(v);
        }
    }

    /// The finest partition of the vertices into parts that are pairwise
    /// completely joined: connected components of the complement graph.
    /// Parts are ordered by their smallest vertex.
    pub fn join_factors(&self) -> Vec<VertexSet> {
        let all = self.vertex_set();
        let mut seen = VertexSet::empty();
        let mut parts = Vec::new();
        for start in self.vertices() {
            if seen.contains(start) {
                continue;
            }
            let mut part = VertexSet::singleton(start);
            let mut frontier = part;
            while let Some(v) = frontier.first() {
                frontier.remove(v);
                let non_neighbours = all.difference(self.links[v.0]).without(v).difference(part);
                part = part.union(non_neighbours);
                frontier = frontier.union(non_neighbours);
            }
            seen = seen.union(part);
            parts.push(part);
        }
        parts
    }

    /// Whether the full subgraph on `set` splits as `A ⊔ B` with every
    /// `A`–`B` pair joined by an edge.
    pub fn is_reducible(&self, set: VertexSet) -> bool {
        set.len() >= 2 && self.full_subgraph(set).is_ok_and(|g| g.join_factors().len() > 1)
    }
}
