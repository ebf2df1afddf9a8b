//! Concrete vertex groups with finite generating sets.
//!
//! Elements are plain `i64` payloads interpreted by the owning group:
//! an exponent for `Z`, a residue in `[0, n)` for `Z/n`, and a row index for
//! table groups.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Payload of a vertex-group element.
pub type Elem = i64;

/// A finite group given by an explicit multiplication table.
#[derive(Debug, PartialEq, Eq)]
pub struct TableGroup {
    names: Vec<String>,
    index: HashMap<String, usize>,
    identity: usize,
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
    generators: Vec<usize>,
    lengths: Vec<u64>,
}

impl TableGroup {
    /// Validates the group axioms exhaustively and memoizes word lengths by BFS.
    /// The generating set is closed under inverses before use.
    pub fn new(
        group: &str,
        names: Vec<String>,
        identity: &str,
        table: Vec<Vec<usize>>,
        generators: &[String],
    ) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidGroup {
            name: group.to_string(),
            reason,
        };
        let n = names.len();
        if n == 0 {
            return Err(invalid("no elements".into()));
        }
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c == ':' || c == ',') {
                return Err(invalid(format!("bad element name `{name}`")));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(invalid(format!("duplicate element `{name}`")));
            }
        }
        let e = *index
            .get(identity)
            .ok_or_else(|| invalid(format!("identity `{identity}` is not an element")))?;
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(invalid(format!("table must be {n}x{n}")));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(invalid("table entry out of range".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if table[e][a] != a || row[e] != a {
                return Err(invalid(format!("`{identity}` is not a two-sided identity")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(invalid(format!(
                            "associativity fails for ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let mut inverses = Vec::with_capacity(n);
        for (a, row) in table.iter().enumerate() {
            match row.iter().position(|&x| x == e) {
                Some(b) if table[b][a] == e => inverses.push(b),
                _ => return Err(invalid(format!("`{}` has no inverse", names[a]))),
            }
        }
        if n == 1 {
            return Err(Error::TrivialGroup(group.to_string()));
        }
        let mut gens = Vec::new();
        for g in generators {
            let i = *index
                .get(g)
                .ok_or_else(|| invalid(format!("generator `{g}` is not an element")))?;
            for x in [i, inverses[i]] {
                if x != e && !gens.contains(&x) {
                    gens.push(x);
                }
            }
        }
        gens.sort_unstable();
        let mut lengths = vec![u64::MAX; n];
        lengths[e] = 0;
        let mut queue = VecDeque::from([e]);
        while let Some(x) = queue.pop_front() {
            for &s in &gens {
                let y = table[x][s];
                if lengths[y] == u64::MAX {
                    lengths[y] = lengths[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if let Some(missing) = lengths.iter().position(|&l| l == u64::MAX) {
            return Err(invalid(format!(
                "generators do not reach `{}`",
                names[missing]
            )));
        }
        Ok(TableGroup {
            names,
            index,
            identity: e,
            table,
            inverses,
            generators: gens,
            lengths,
        })
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn identity_name(&self) -> &str {
        &self.names[self.identity]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn generator_names(&self) -> Vec<&str> {
        self.generators.iter().map(|&g| self.names[g].as_str()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Integers,
    Cyclic(u32),
    Table(Arc<TableGroup>),
}

/// A vertex group `G_v` together with its generating set `X_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexGroup {
    name: String,
    kind: GroupKind,
}

impl VertexGroup {
    pub fn integers(name: impl Into<String>) -> Self {
        VertexGroup {
            name: name.into(),
            kind: GroupKind::Integers,
        }
    }

    pub fn cyclic(name: impl Into<String>, order: u32) -> Result<Self> {
        let name = name.into();
        if order < 2 {
            return Err(Error::TrivialGroup(name));
        }
        Ok(VertexGroup {
            name,
            kind: GroupKind::Cyclic(order),
        })
    }

    pub fn table(table: TableGroup, name: impl Into<String>) -> Self {
        VertexGroup {
            name: name.into(),
            kind: GroupKind::Table(Arc::new(table)),
        }
    }

    /// The symmetric group on three points, generated by two transpositions.
    pub fn symmetric3(name: impl Into<String>) -> Self {
        let name = name.into();
        // e, s=(12), t=(23), st, ts, w=(13), composed left to right as permutations
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let compose = |a: &[usize; 3], b: &[usize; 3]| [b[a[0]], b[a[1]], b[a[2]]];
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let c = compose(a, b);
                        perms.iter().position(|x| *x == c).unwrap()
                    })
                    .collect()
            })
            .collect();
        let names = ["e", "s", "t", "st", "ts", "w"].map(String::from).to_vec();
        let t = TableGroup::new(&name, names, "e", table, &["s".into(), "t".into()])
            .expect("S3 table is a group");
        VertexGroup::table(t, name)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn kind_name(&self) -> String {
        match &self.kind {
            GroupKind::Integers => "integers".into(),
            GroupKind::Cyclic(n) => format!("cyclic({n})"),
            GroupKind::Table(t) => format!("table({})", t.order()),
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self.kind, GroupKind::Integers)
    }

    /// `None` for infinite groups.
    pub fn order(&self) -> Option<u64> {
        match &self.kind {
            GroupKind::Integers => None,
            GroupKind::Cyclic(n) => Some(*n as u64),
            GroupKind::Table(t) => Some(t.order() as u64),
        }
    }

    pub fn identity(&self) -> Elem {
        match &self.kind {
            GroupKind::Table(t) => t.identity as Elem,
            _ => 0,
        }
    }

    pub fn is_identity(&self, a: Elem) -> bool {
        a == self.identity()
    }

    /// Brings an integer payload into canonical range (residues for `Z/n`).
    pub fn normalize(&self, a: Elem) -> Elem {
        match &self.kind {
            GroupKind::Cyclic(n) => a.rem_euclid(*n as Elem),
            _ => a,
        }
    }

    pub fn contains(&self, a: Elem) -> bool {
        match &self.kind {
            GroupKind::Integers => true,
            GroupKind::Cyclic(n) => (0..*n as Elem).contains(&a),
            GroupKind::Table(t) => (0..t.order() as Elem).contains(&a),
        }
    }

    pub fn multiply(&self, a: Elem, b: Elem) -> Elem {
        match &self.kind {
            GroupKind::Integers => a + b,
            GroupKind::Cyclic(n) => (a + b).rem_euclid(*n as Elem),
            GroupKind::Table(t) => t.table[a as usize][b as usize] as Elem,
        }
    }

    pub fn inverse(&self, a: Elem) -> Elem {
        match &self.kind {
            GroupKind::Integers => -a,
            GroupKind::Cyclic(n) => (-a).rem_euclid(*n as Elem),
            GroupKind::Table(t) => t.inverses[a as usize] as Elem,
        }
    }

    /// Word length `|a|_{X_v}`.
    pub fn word_length(&self, a: Elem) -> u64 {
        match &self.kind {
            GroupKind::Integers => a.unsigned_abs(),
            GroupKind::Cyclic(n) => {
                let r = a.rem_euclid(*n as Elem) as u64;
                r.min(*n as u64 - r)
            }
            GroupKind::Table(t) => t.lengths[a as usize],
        }
    }

    /// The generating set `X_v`, closed under inverses, without the identity.
    pub fn generators(&self) -> Vec<Elem> {
        match &self.kind {
            GroupKind::Integers => vec![1, -1],
            GroupKind::Cyclic(2) => vec![1],
            GroupKind::Cyclic(n) => vec![1, *n as Elem - 1],
            GroupKind::Table(t) => t.generators.iter().map(|&g| g as Elem).collect(),
        }
    }

    /// All elements of a finite group, identity first.
    pub fn elements(&self) -> Option<Vec<Elem>> {
        let n = self.order()? as Elem;
        let e = self.identity();
        Some(std::iter::once(e).chain((0..n).filter(|&x| x != e)).collect())
    }

    /// Elements of word length at most `radius`; every element when the group
    /// is finite and `radius` reaches its diameter.
    pub fn ball(&self, radius: u64) -> Vec<Elem> {
        match &self.kind {
            GroupKind::Integers => {
                let r = radius.min(i64::MAX as u64) as Elem;
                (-r..=r).collect()
            }
            _ => {
                let mut all = self.elements().expect("finite group");
                all.retain(|&x| self.word_length(x) <= radius);
                all
            }
        }
    }

    pub fn element_name(&self, a: Elem) -> String {
        match &self.kind {
            GroupKind::Table(t) => t.names[a as usize].clone(),
            _ => a.to_string(),
        }
    }

    /// Parses the right-hand side of a `vertex:k` token.
    pub fn parse_element(&self, token: &str) -> Result<Elem> {
        let err = |reason: &str| Error::WordSyntax {
            token: token.to_string(),
            reason: reason.to_string(),
        };
        match &self.kind {
            GroupKind::Table(t) => t
                .index
                .get(token)
                .map(|&i| i as Elem)
                .ok_or_else(|| err(&format!("no element of `{}` has this name", self.name))),
            _ => {
                let k: Elem = token.parse().map_err(|_| err("expected an integer exponent"))?;
                if k == 0 {
                    return Err(err("exponent must be nonzero"));
                }
                Ok(self.normalize(k))
            }
        }
    }
}

impl fmt::Display for VertexGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.name, self.kind_name())
    }
}
