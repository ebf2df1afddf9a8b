//! Reduction of words to canonical reduced form, the word problem, length
//! functions and ball enumeration.
//!
//! Reduction appends syllables one at a time to a reduced word. A new
//! syllable at vertex `v` travels left past syllables whose vertices lie in
//! `link(v)`; if it meets a syllable at `v` the two merge, and a merge that
//! yields the identity deletes the syllable. Appending to a reduced word this
//! way keeps it reduced. The result is then put into left-greedy
//! lexicographic order: repeatedly emit, among the syllables that commute with
//! everything before them, the one with the smallest vertex index.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::product::{GraphProduct, NormalForm, Syllable};

/// Default cap on the number of elements a ball enumeration may produce.
pub const DEFAULT_BALL_LIMIT: usize = 2_000_000;

/// The elements of a word-metric ball, grouped by sphere. Sphere `n` holds
/// the elements with `l_X = n`, sorted.
#[derive(Clone, Debug, Default)]
pub struct Ball {
    pub spheres: Vec<Vec<NormalForm>>,
}

impl Ball {
    pub fn radius(&self) -> usize {
        self.spheres.len().saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        self.spheres.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &NormalForm> {
        self.spheres.iter().flatten()
    }

    /// The elements of length at most `r`.
    pub fn within(&self, r: usize) -> impl Iterator<Item = &NormalForm> {
        self.spheres.iter().take(r + 1).flatten()
    }
}

impl GraphProduct {
    /// Appends `s` to the reduced word `word`, keeping it reduced.
    pub(crate) fn append(&self, word: &mut Vec<Syllable>, s: Syllable) {
        let group = self.group(s.vertex);
        if group.is_identity(s.value) {
            return;
        }
        let link = self.graph().link_of(s.vertex);
        for j in (0..word.len()).rev() {
            let u = word[j].vertex;
            if u == s.vertex {
                let merged = group.multiply(word[j].value, s.value);
                if group.is_identity(merged) {
                    word.remove(j);
                } else {
                    word[j].value = merged;
                }
                return;
            }
            if !link.contains(u) {
                break;
            }
        }
        word.push(s);
    }

    /// Left-greedy lexicographic ordering of a reduced word.
    pub(crate) fn canonicalize(&self, mut rest: Vec<Syllable>) -> Vec<Syllable> {
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut before = VertexSet::empty();
            let mut best: Option<usize> = None;
            for (j, s) in rest.iter().enumerate() {
                if before.is_subset(self.graph().link_of(s.vertex))
                    && best.is_none_or(|b| s.vertex < rest[b].vertex)
                {
                    best = Some(j);
                }
                before.insert(s.vertex);
            }
            out.push(rest.remove(best.expect("the first syllable is always movable")));
        }
        out
    }

    pub(crate) fn reduce_unchecked(&self, word: &[Syllable]) -> NormalForm {
        let mut reduced = Vec::with_capacity(word.len());
        for &s in word {
            self.append(&mut reduced, s);
        }
        NormalForm {
            syllables: self.canonicalize(reduced),
        }
    }

    /// The canonical reduced word of the element represented by `word`.
    pub fn reduce(&self, word: &[Syllable]) -> Result<NormalForm> {
        for &s in word {
            self.check_syllable(s)?;
        }
        Ok(self.reduce_unchecked(word))
    }

    /// Parses and reduces a word in `vertex:k` syntax.
    pub fn parse(&self, text: &str) -> Result<NormalForm> {
        let word = self.parse_word(text)?;
        self.reduce(&word)
    }

    pub fn multiply(&self, x: &NormalForm, y: &NormalForm) -> NormalForm {
        let mut word = x.syllables.clone();
        for &s in &y.syllables {
            self.append(&mut word, s);
        }
        NormalForm {
            syllables: self.canonicalize(word),
        }
    }

    /// `x` times a single generator-like syllable.
    pub fn multiply_syllable(&self, x: &NormalForm, s: Syllable) -> NormalForm {
        let mut word = x.syllables.clone();
        self.append(&mut word, s);
        NormalForm {
            syllables: self.canonicalize(word),
        }
    }

    pub fn invert(&self, x: &NormalForm) -> NormalForm {
        let word: Vec<Syllable> = x
            .syllables
            .iter()
            .rev()
            .map(|s| Syllable::new(s.vertex, self.group(s.vertex).inverse(s.value)))
            .collect();
        NormalForm {
            syllables: self.canonicalize(word),
        }
    }

    /// `l_X(g) = Σ |g_i|_{X_{v_i}}` over the syllables of the normal form.
    pub fn word_length(&self, x: &NormalForm) -> u64 {
        x.syllables.iter().map(|&s| self.vertex_word_length(s)).sum()
    }

    pub fn syllable_length(&self, x: &NormalForm) -> usize {
        x.syllable_length()
    }

    pub fn equals(&self, x: &NormalForm, y: &NormalForm) -> bool {
        x == y
    }

    /// Word-metric distance `l_X(x^{-1} y)`.
    pub fn distance(&self, x: &NormalForm, y: &NormalForm) -> u64 {
        self.word_length(&self.multiply(&self.invert(x), y))
    }

    /// Whether a syllable sequence satisfies the reducedness condition: no
    /// identity syllables, and for `i < j` with `v_i = v_j` the product of the
    /// syllables strictly between them is outside `G_{st(v_i)}`.
    pub fn is_reduced(&self, word: &[Syllable]) -> bool {
        if word.iter().any(|s| self.group(s.vertex).is_identity(s.value)) {
            return false;
        }
        for i in 0..word.len() {
            let star = self.graph().link_of(word[i].vertex).with(word[i].vertex);
            for j in i + 1..word.len() {
                if word[j].vertex == word[i].vertex {
                    let between = self.reduce_unchecked(&word[i + 1..j]);
                    if self.is_member(&between, star) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All elements with `l_X(g) <= radius`, by breadth-first search over the
    /// Cayley graph for `X = ∪ X_v`.
    pub fn enumerate_ball(&self, radius: u64) -> Result<Ball> {
        self.enumerate_ball_limited(radius, DEFAULT_BALL_LIMIT)
    }

    pub fn enumerate_ball_limited(&self, radius: u64, limit: usize) -> Result<Ball> {
        let generators = self.generators();
        let mut seen: HashSet<NormalForm> = HashSet::from([NormalForm::identity()]);
        let mut spheres = vec![vec![NormalForm::identity()]];
        for _ in 0..radius {
            let mut next = Vec::new();
            for x in spheres.last().expect("non-empty") {
                for &s in &generators {
                    let y = self.multiply_syllable(x, s);
                    if !seen.contains(&y) {
                        seen.insert(y.clone());
                        next.push(y);
                        if seen.len() > limit {
                            return Err(Error::ResourceLimit { limit });
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort();
            spheres.push(next);
        }
        Ok(Ball { spheres })
    }
}
