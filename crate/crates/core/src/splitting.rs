//! The split extension `1 → W_v → G → G_{A_v} → 1` with `A_v = V ∖ {v}`
//! and `W_v = ker ρ_{A_v}`, the free product of the conjugates `tG_vt^{-1}`
//! for `t` running over canonical representatives of `G_{A_v}/G_{link(v)}`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{VertexId, VertexSet};
use crate::group::Elem;
use crate::invariants::GrowthFunction;
use crate::numeric::{approx_eq, Exponent};
use crate::product::{GraphProduct, NormalForm, Syllable};

/// One free factor `t h t^{-1}` of `w_z^v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelFactor {
    /// Canonical representative of `t·G_{link(v)}` in `G_{A_v}`.
    pub tag: NormalForm,
    /// `h ∈ G_v`, never the identity.
    pub element: Elem,
}

/// `φ_v(z) = (w_z^v, g_z^v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelDecomposition {
    pub vertex: VertexId,
    pub factors: Vec<KernelFactor>,
    /// `g_z^v = ρ_{A_v}(z)`.
    pub quotient: NormalForm,
}

impl KernelDecomposition {
    /// Consecutive factors lie in distinct free factors of `W_v`.
    pub fn consecutive_tags_distinct(&self) -> bool {
        self.factors.windows(2).all(|w| w[0].tag != w[1].tag)
    }
}

/// Per-vertex kernel lengths of one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthAdditivity {
    pub per_vertex: Vec<u64>,
    pub word_length: u64,
}

impl LengthAdditivity {
    pub fn total(&self) -> u64 {
        self.per_vertex.iter().sum()
    }

    pub fn holds(&self) -> bool {
        self.total() == self.word_length
    }
}

/// A finite piece of an embedding `φ'_v : W_v → ℓp`, keyed by the kernel
/// element as an element of `G`.
#[derive(Clone, Debug, Default)]
pub struct KernelTable {
    /// Declared Lipschitz constant of `φ'_v` with respect to `l_{W_v}`.
    pub lipschitz: f64,
    pub images: HashMap<NormalForm, Vec<f64>>,
}

/// Empirical behaviour of the assembled map `φ = ⊕^p_v φ_v` on a sample.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingReport {
    pub images: Vec<(NormalForm, Vec<f64>)>,
    pub pairs: usize,
    /// `max ‖φ(x) − φ(y)‖ / d(x, y)`.
    pub empirical_lipschitz: f64,
    /// `n·C` with `n = |V|` and `C` the largest declared table constant.
    pub lipschitz_bound: f64,
    /// `min ‖φ(x) − φ(y)‖ / ρ(d(x, y))` over pairs with `ρ(d) > 0`.
    pub lower_ratio: f64,
    pub upper_violation: Option<(NormalForm, NormalForm)>,
    pub lower_violation: Option<(NormalForm, NormalForm)>,
}

impl EmbeddingReport {
    pub fn holds(&self) -> bool {
        self.upper_violation.is_none() && self.lower_violation.is_none()
    }
}

fn lp_distance(x: &[f64], y: &[f64], p: Exponent) -> f64 {
    let len = x.len().max(y.len());
    let at = |v: &[f64], i: usize| v.get(i).copied().unwrap_or(0.0);
    (0..len)
        .map(|i| (at(x, i) - at(y, i)).abs().powf(p.value()))
        .sum::<f64>()
        .powf(1.0 / p.value())
}

impl GraphProduct {
    fn complement_of(&self, v: VertexId) -> VertexSet {
        self.graph().vertex_set().without(v)
    }

    /// `(A, B, C)` with `A = V ∖ {v}`, `B = st(v)`, `C = link(v)`, so that
    /// `G = G_A *_{G_C} G_B`.
    pub fn amalgam_split(&self, v: VertexId) -> Result<(VertexSet, VertexSet, VertexSet)> {
        let link = self.graph().link(v)?;
        Ok((self.complement_of(v), link.with(v), link))
    }

    /// Splits the normal form of `z` into `G_v`-syllables conjugated by the
    /// `G_{A_v}`-prefix before them, and the quotient `ρ_{A_v}(z)`.
    pub fn decompose(&self, z: &NormalForm, v: VertexId) -> Result<KernelDecomposition> {
        let link = self.graph().link(v)?;
        let mut prefix: Vec<Syllable> = Vec::new();
        let mut factors = Vec::new();
        for &s in z.syllables() {
            if s.vertex == v {
                let conj = self.reduce_unchecked(&prefix);
                factors.push(KernelFactor {
                    tag: self.coset_rep_unchecked(&conj, link),
                    element: s.value,
                });
            } else {
                self.append(&mut prefix, s);
            }
        }
        Ok(KernelDecomposition {
            vertex: v,
            factors,
            quotient: self.reduce_unchecked(&prefix),
        })
    }

    /// `w_z^v = Π_j t_j h_j t_j^{-1}` as an element of `G`.
    pub fn kernel_element(&self, d: &KernelDecomposition) -> NormalForm {
        let mut w = NormalForm::identity();
        for f in &d.factors {
            let h = NormalForm {
                syllables: vec![Syllable::new(d.vertex, f.element)],
            };
            let conj = self.multiply(&self.multiply(&f.tag, &h), &self.invert(&f.tag));
            w = self.multiply(&w, &conj);
        }
        w
    }

    /// `w_z^v · g_z^v`, which equals `z`.
    pub fn reassemble(&self, d: &KernelDecomposition) -> NormalForm {
        self.multiply(&self.kernel_element(d), &d.quotient)
    }

    /// `l_{W_v}(w_z^v)`: the number of `X_v`-letters in the free factors.
    pub fn kernel_length(&self, d: &KernelDecomposition) -> u64 {
        let group = self.group(d.vertex);
        d.factors.iter().map(|f| group.word_length(f.element)).sum()
    }

    /// `Σ_u l_{W_u}(w_z^u)` against `l_X(z)`.
    pub fn length_additivity(&self, z: &NormalForm) -> LengthAdditivity {
        let per_vertex = self
            .graph()
            .vertices()
            .map(|u| {
                let d = self.decompose(z, u).expect("vertex of the graph");
                self.kernel_length(&d)
            })
            .collect();
        LengthAdditivity {
            per_vertex,
            word_length: self.word_length(z),
        }
    }

    /// `d_{W_v}(a, b) = l_{W_v}(a^{-1} b)` for kernel elements `a`, `b`.
    pub fn kernel_distance(&self, v: VertexId, a: &NormalForm, b: &NormalForm) -> Result<u64> {
        let d = self.decompose(&self.multiply(&self.invert(a), b), v)?;
        Ok(self.kernel_length(&d))
    }

    /// Assembles `φ(g) = ⊕^p_v φ'_v(w_g^v)` on `sample` and checks
    /// `‖φ(x) − φ(y)‖ <= n·C·d(x, y)` and `‖φ(x) − φ(y)‖ >= ρ(d(x, y)) / n`
    /// for every pair, where `tables[i]` belongs to vertex `i`.
    pub fn assemble_embedding(
        &self,
        tables: &[KernelTable],
        rho: &GrowthFunction,
        sample: &[NormalForm],
        p: Exponent,
    ) -> Result<EmbeddingReport> {
        let n = self.graph().len();
        if tables.len() != n {
            return Err(Error::Config(format!("{} kernel tables for {n} vertices", tables.len())));
        }
        let mut images = Vec::with_capacity(sample.len());
        for g in sample {
            let mut image = Vec::new();
            for (v, table) in self.graph().vertices().zip(tables) {
                let w = self.kernel_element(&self.decompose(g, v)?);
                let part = table.images.get(&w).ok_or_else(|| Error::MissingTableEntry {
                    vertex: self.graph().name(v).into(),
                    element: self.format(&w),
                })?;
                image.extend_from_slice(part);
            }
            images.push((g.clone(), image));
        }
        let c = tables.iter().map(|t| t.lipschitz).fold(0.0, f64::max);
        let bound = n as f64 * c;
        let mut report = EmbeddingReport {
            images: Vec::new(),
            pairs: 0,
            empirical_lipschitz: 0.0,
            lipschitz_bound: bound,
            lower_ratio: f64::INFINITY,
            upper_violation: None,
            lower_violation: None,
        };
        for (i, (x, fx)) in images.iter().enumerate() {
            for (y, fy) in &images[i + 1..] {
                let d = self.distance(x, y);
                if d == 0 {
                    continue;
                }
                report.pairs += 1;
                let norm = lp_distance(fx, fy, p);
                report.empirical_lipschitz = report.empirical_lipschitz.max(norm / d as f64);
                let upper = bound * d as f64;
                if norm > upper && !approx_eq(norm, upper) && report.upper_violation.is_none() {
                    report.upper_violation = Some((x.clone(), y.clone()));
                }
                let r = rho.value(d as usize)?;
                if r > 0.0 {
                    report.lower_ratio = report.lower_ratio.min(norm / r);
                    let lower = r / n as f64;
                    if norm < lower && !approx_eq(norm, lower) && report.lower_violation.is_none() {
                        report.lower_violation = Some((x.clone(), y.clone()));
                    }
                }
            }
        }
        report.images = images;
        Ok(report)
    }
}
