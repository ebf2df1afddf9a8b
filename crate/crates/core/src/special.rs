//! Special subgroups `G_A`, the canonical retractions `ρ_A`, membership and
//! canonical left-coset representatives.

use crate::error::{Error, Result};
use crate::graph::{VertexId, VertexSet};
use crate::product::{GraphProduct, NormalForm};

/// A left coset `g·G_{st(v)}`, named by its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CosetId {
    pub vertex: VertexId,
    pub rep: NormalForm,
}

impl GraphProduct {
    fn check_subset(&self, set: VertexSet) -> Result<()> {
        match set.difference(self.graph().vertex_set()).first() {
            Some(v) => Err(Error::VertexOutOfRange(v.0)),
            None => Ok(()),
        }
    }

    /// `ρ_A(g)`: delete the syllables outside `A` and reduce.
    pub fn retract(&self, g: &NormalForm, set: VertexSet) -> Result<NormalForm> {
        self.check_subset(set)?;
        Ok(self.retract_unchecked(g, set))
    }

    pub(crate) fn retract_unchecked(&self, g: &NormalForm, set: VertexSet) -> NormalForm {
        let kept: Vec<_> = g
            .syllables
            .iter()
            .copied()
            .filter(|s| set.contains(s.vertex))
            .collect();
        self.reduce_unchecked(&kept)
    }

    /// Whether `g ∈ G_A`, i.e. every syllable of its normal form lies in `A`.
    pub fn is_member(&self, g: &NormalForm, set: VertexSet) -> bool {
        g.syllables.iter().all(|s| set.contains(s.vertex))
    }

    /// Canonical representative of the left coset `g·G_S`: strip, from the
    /// right, syllables in `S` that commute with everything after them, then
    /// re-canonicalize what is left.
    pub fn coset_rep(&self, g: &NormalForm, set: VertexSet) -> Result<NormalForm> {
        self.check_subset(set)?;
        Ok(self.coset_rep_unchecked(g, set))
    }

    pub(crate) fn coset_rep_unchecked(&self, g: &NormalForm, set: VertexSet) -> NormalForm {
        let mut word = g.syllables.clone();
        loop {
            let mut after = VertexSet::empty();
            let mut strip = None;
            for i in (0..word.len()).rev() {
                let v = word[i].vertex;
                if set.contains(v) && after.is_subset(self.graph().link_of(v)) {
                    strip = Some(i);
                    break;
                }
                after.insert(v);
            }
            match strip {
                Some(i) => {
                    word.remove(i);
                }
                None => break,
            }
        }
        NormalForm {
            syllables: self.canonicalize(word),
        }
    }

    /// The coset `g·G_{st(v)}`.
    pub fn star_coset(&self, g: &NormalForm, v: VertexId) -> CosetId {
        let star = self.graph().link_of(v).with(v);
        CosetId {
            vertex: v,
            rep: self.coset_rep_unchecked(g, star),
        }
    }

    /// Left action of `h` on `T = ⊔_v G/G_{st(v)}`.
    pub fn coset_translate(&self, h: &NormalForm, c: &CosetId) -> CosetId {
        self.star_coset(&self.multiply(h, &c.rep), c.vertex)
    }
}
