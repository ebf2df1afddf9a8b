//! The affine isometric action `(τ, β)` of a graph product on
//! `𝒜 = ⊕^p_{t∈T} A`, where `T = ⊔_v G/G_{st(v)}` and `A = ⊕^p_v A_v`.
//!
//! Vectors are sparse over keys `(coset, block vertex, basis index)`; no
//! dense block is ever built, since `T` is infinite.

use std::collections::{BTreeMap, HashSet};

use num_traits::Zero;

use crate::cocycle::{pad_cocycle, AffineAction, BasisIndex, BlockVector, VertexCocycle};
use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::group::Elem;
use crate::normal_form::DEFAULT_BALL_LIMIT;
use crate::numeric::{int, smallest_padding, Exponent, NormPow, Rational};
use crate::product::{GraphProduct, NormalForm};
use crate::special::CosetId;

/// Coordinates of a basis vector of `𝒜`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexKey {
    pub coset: CosetId,
    /// The summand `A_w` of `A`.
    pub block: VertexId,
    pub basis: BasisIndex,
}

/// A finitely supported element of `𝒜`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpVector {
    p: Exponent,
    entries: BTreeMap<IndexKey, Rational>,
}

impl LpVector {
    pub fn zero(p: Exponent) -> Self {
        LpVector {
            p,
            entries: BTreeMap::new(),
        }
    }

    pub fn exponent(&self) -> Exponent {
        self.p
    }

    pub fn entries(&self) -> impl Iterator<Item = (&IndexKey, &Rational)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.is_empty()
    }

    pub fn add_entry(&mut self, key: IndexKey, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.entries.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `a·χ_t` for a block vector `a` living in `A_w`.
    pub fn add_block(&mut self, coset: &CosetId, block: VertexId, a: &BlockVector) {
        for (basis, c) in a.entries() {
            self.add_entry(
                IndexKey {
                    coset: coset.clone(),
                    block,
                    basis: basis.clone(),
                },
                c.clone(),
            );
        }
    }

    pub fn add(&self, other: &LpVector) -> LpVector {
        let mut out = self.clone();
        for (k, c) in &other.entries {
            out.add_entry(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LpVector) -> LpVector {
        let mut out = self.clone();
        for (k, c) in &other.entries {
            out.add_entry(k.clone(), -c.clone());
        }
        out
    }

    /// `‖f‖^p = Σ |coeff|^p`.
    pub fn norm_pow(&self) -> NormPow {
        self.entries
            .values()
            .fold(self.p.zero_pow(), |acc, c| acc.add(&self.p.abs_pow(c)))
    }

    pub fn norm(&self) -> f64 {
        self.norm_pow().root(self.p)
    }

    /// The distinct cosets carrying a nonzero entry.
    pub fn support(&self) -> Vec<&CosetId> {
        let mut out: Vec<&CosetId> = self.entries.keys().map(|k| &k.coset).collect();
        out.dedup();
        out
    }
}

/// Norm identity evaluation for one element.
#[derive(Clone, Debug, PartialEq)]
pub struct NormIdentity {
    /// `‖β(g)‖^p`, computed from the vector.
    pub lhs: NormPow,
    /// `Σ ‖b_{v_i}(g_i)‖^p` over the syllables.
    pub rhs: NormPow,
}

impl NormIdentity {
    pub fn holds(&self) -> bool {
        self.lhs.matches(&self.rhs)
    }
}

/// One sphere of a properness profile.
#[derive(Clone, Debug, PartialEq)]
pub struct ProfileRow {
    pub length: usize,
    pub elements: usize,
    /// `min ‖β(g)‖^p` over the sphere.
    pub min_norm_pow: NormPow,
    pub min_norm: f64,
}

/// Vertex cocycles for every vertex of a graph product, sharing one `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductAction {
    product: GraphProduct,
    p: Exponent,
    cocycles: Vec<VertexCocycle>,
}

impl ProductAction {
    pub fn new(product: GraphProduct, p: Exponent, cocycles: Vec<VertexCocycle>) -> Result<Self> {
        if cocycles.len() != product.graph().len() {
            return Err(Error::Config(format!(
                "{} cocycles for {} vertices",
                cocycles.len(),
                product.graph().len()
            )));
        }
        for (v, c) in product.graph().vertices().zip(&cocycles) {
            if c.group() != product.group(v) {
                return Err(Error::Config(format!(
                    "cocycle for `{}` is bound to a different group",
                    product.graph().name(v)
                )));
            }
        }
        Ok(ProductAction {
            product,
            p,
            cocycles,
        })
    }

    pub fn product(&self) -> &GraphProduct {
        &self.product
    }

    pub fn exponent(&self) -> Exponent {
        self.p
    }

    pub fn cocycle(&self, v: VertexId) -> &VertexCocycle {
        &self.cocycles[v.0]
    }

    pub fn cocycles(&self) -> &[VertexCocycle] {
        &self.cocycles
    }

    /// Same cocycles, different `p`.
    pub fn with_exponent(&self, p: Exponent) -> ProductAction {
        ProductAction {
            p,
            ..self.clone()
        }
    }

    /// The element `ρ_{{w}}(g)` of `G_w`, whose action on `A_w` is `π(g)|_{A_w}`.
    fn block_element(&self, g: &NormalForm, w: VertexId) -> Elem {
        let group = self.product.group(w);
        g.syllables()
            .iter()
            .filter(|s| s.vertex == w)
            .fold(group.identity(), |acc, s| group.multiply(acc, s.value))
    }

    /// `π(g)` on `A`, with `x` given blockwise. Each syllable acts on its own
    /// block and trivially on the others.
    pub fn apply_pi(&self, g: &NormalForm, x: &BTreeMap<VertexId, BlockVector>) -> BTreeMap<VertexId, BlockVector> {
        x.iter()
            .map(|(&w, a)| (w, self.cocycles[w.0].linear(self.block_element(g, w), a)))
            .filter(|(_, a)| !a.is_zero())
            .collect()
    }

    /// `(τ(g)f)(t) = π(g) f(g^{-1} t)`: the entry at coset `t` moves to `g·t`.
    pub fn apply_tau(&self, g: &NormalForm, f: &LpVector) -> LpVector {
        let mut out = LpVector::zero(f.p);
        let mut moved: BTreeMap<&CosetId, CosetId> = BTreeMap::new();
        let mut block_elems: BTreeMap<VertexId, Elem> = BTreeMap::new();
        for (key, c) in &f.entries {
            let target = moved
                .entry(&key.coset)
                .or_insert_with(|| self.product.coset_translate(g, &key.coset))
                .clone();
            let e = *block_elems
                .entry(key.block)
                .or_insert_with(|| self.block_element(g, key.block));
            let image = self.cocycles[key.block.0]
                .linear(e, &BlockVector::basis(key.basis.clone(), c.clone()));
            out.add_block(&target, key.block, &image);
        }
        out
    }

    /// `β(g) = Σ_i π(g_1⋯g_{i-1}) b_{v_i}(g_i) χ_{(g_1⋯g_{i-1})G_{st(v_i)}}`
    /// over the syllables of the normal form of `g`.
    pub fn beta(&self, g: &NormalForm) -> LpVector {
        let mut out = LpVector::zero(self.p);
        for (prefix, s) in self.prefixes(g) {
            let coset = self.product.star_coset(&prefix, s.vertex);
            let cocycle = &self.cocycles[s.vertex.0];
            let b = cocycle.translation(s.value);
            let term = cocycle.linear(self.block_element(&prefix, s.vertex), &b);
            out.add_block(&coset, s.vertex, &term);
        }
        out
    }

    /// `(g_1⋯g_{i-1}, g_i)` for each syllable of the normal form.
    fn prefixes<'a>(
        &'a self,
        g: &'a NormalForm,
    ) -> impl Iterator<Item = (NormalForm, crate::product::Syllable)> + 'a {
        let syl = g.syllables();
        (0..syl.len()).map(move |i| (self.product.reduce_unchecked(&syl[..i]), syl[i]))
    }

    /// The cosets `(g_1⋯g_{i-1})G_{st(v_i)}` supporting the terms of `β(g)`, in order.
    pub fn beta_supports(&self, g: &NormalForm) -> Vec<CosetId> {
        self.prefixes(g)
            .map(|(prefix, s)| self.product.star_coset(&prefix, s.vertex))
            .collect()
    }

    /// Whether the supports of the terms of `β(g)` are pairwise distinct.
    pub fn supports_distinct(&self, g: &NormalForm) -> bool {
        let supports = self.beta_supports(g);
        let set: HashSet<&CosetId> = supports.iter().collect();
        set.len() == supports.len()
    }

    /// `β(gh) = τ(g)β(h) + β(g)`.
    pub fn verify_cocycle_identity(&self, g: &NormalForm, h: &NormalForm) -> bool {
        let gh = self.product.multiply(g, h);
        self.beta(&gh) == self.apply_tau(g, &self.beta(h)).add(&self.beta(g))
    }

    /// `β(gh) = β(hg)` for elements of vertex groups at adjacent vertices.
    pub fn verify_commuting_pair(&self, g: &NormalForm, h: &NormalForm) -> bool {
        let gh = self.product.multiply(g, h);
        let hg = self.product.multiply(h, g);
        self.beta(&gh) == self.beta(&hg)
    }

    /// Both sides of `‖β(g)‖^p = Σ ‖b_{v_i}(g_i)‖^p`.
    pub fn verify_norm_identity(&self, g: &NormalForm) -> NormIdentity {
        let lhs = self.beta(g).norm_pow();
        let rhs = g
            .syllables()
            .iter()
            .fold(self.p.zero_pow(), |acc, s| {
                acc.add(&self.cocycles[s.vertex.0].norm_pow(s.value, self.p))
            });
        NormIdentity { lhs, rhs }
    }

    /// The padding constants `C_i` making `min_{g≠1} ‖b_{v_i}(g)‖ >= i`,
    /// with vertices numbered from 1 in declaration order.
    pub fn padding_schedule(&self) -> Vec<u64> {
        self.cocycles
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let target = self.p.abs_pow(&int(i as i64 + 1));
                smallest_padding(&c.floor_pow(self.p), &target, self.p)
            })
            .collect()
    }

    /// Replaces every vertex cocycle by its padding with the constant from
    /// [`padding_schedule`](Self::padding_schedule).
    pub fn pad_for_properness(&self) -> ProductAction {
        let cocycles = self
            .cocycles
            .iter()
            .zip(self.padding_schedule())
            .map(|(c, k)| pad_cocycle(c, int(k as i64)).expect("positive constant"))
            .collect();
        ProductAction {
            cocycles,
            ..self.clone()
        }
    }

    /// Minimum of `‖β(g)‖` over each sphere `l_X(g) = n`, `n <= radius`.
    pub fn properness_profile(&self, radius: u64) -> Result<Vec<ProfileRow>> {
        self.properness_profile_limited(radius, DEFAULT_BALL_LIMIT)
    }

    pub fn properness_profile_limited(&self, radius: u64, limit: usize) -> Result<Vec<ProfileRow>> {
        let ball = self.product.enumerate_ball_limited(radius, limit)?;
        Ok(ball
            .spheres
            .iter()
            .enumerate()
            .map(|(n, sphere)| {
                let min = sphere
                    .iter()
                    .map(|g| self.beta(g).norm_pow())
                    .min_by(|a, b| a.compare(b))
                    .expect("spheres are non-empty");
                ProfileRow {
                    length: n,
                    elements: sphere.len(),
                    min_norm: min.root(self.p),
                    min_norm_pow: min,
                }
            })
            .collect())
    }

    /// Text rendering: one sorted line per entry, then the norm line.
    pub fn render(&self, f: &LpVector) -> Vec<String> {
        let graph = self.product.graph();
        let mut lines: Vec<String> = f
            .entries()
            .map(|(k, c)| {
                format!(
                    "v={} rep=\"{}\" block={} basis={} coeff={}",
                    graph.name(k.coset.vertex),
                    self.product.format(&k.coset.rep),
                    graph.name(k.block),
                    k.basis.render(self.product.group(k.block)),
                    c
                )
            })
            .collect();
        lines.sort();
        let norm_pow = f.norm_pow();
        let norm = crate::numeric::decimal(norm_pow.root(f.p));
        lines.push(match norm_pow {
            NormPow::Exact(r) => format!("norm^{}={} norm={}", f.p, r, norm),
            NormPow::Approx(_) => format!("norm={norm}"),
        });
        lines
    }
}
