//! Numerical invariants: compression bounds, free subgroups, growth-function
//! calculus, asymptotic dimension and empirical compression scans.

use std::io::Write;

use crate::action::ProductAction;
use crate::error::{Error, Result};
use crate::graph::{SimplicialGraph, VertexId, VertexSet};
use crate::numeric::{approx_eq, Exponent, NormPow, TOLERANCE};
use crate::product::{GraphProduct, NormalForm, Syllable};

/// A closed interval `[lower, upper] ⊆ [0, 1]` containing a compression
/// exponent.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CompressionInterval {
    pub lower: f64,
    pub upper: f64,
}

impl CompressionInterval {
    pub fn point(x: f64) -> Self {
        CompressionInterval { lower: x, upper: x }
    }

    pub fn exact(&self) -> bool {
        self.lower == self.upper
    }

    fn meet(self, other: Self) -> Self {
        CompressionInterval {
            lower: self.lower.min(other.lower),
            upper: self.upper.min(other.upper),
        }
    }
}

fn check_alphas(alphas: &[f64]) -> Result<()> {
    for (i, &a) in alphas.iter().enumerate() {
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::OutOfUnitInterval {
                what: format!("alpha of vertex {i}"),
                value: a,
            });
        }
    }
    Ok(())
}

fn is_dihedral_factor(graph: &SimplicialGraph, factor: VertexSet, orders: &[Option<u64>]) -> bool {
    let vs: Vec<VertexId> = factor.iter().collect();
    vs.len() == 2 && !graph.adjacent(vs[0], vs[1]) && vs.iter().all(|v| orders[v.0] == Some(2))
}

/// Interval for `α_p^*(G)` from the join decomposition: a singleton factor
/// contributes its vertex value, an infinite dihedral factor contributes 1,
/// any other factor `[min(1/p, α_i), min(α_i, max(1/2, 1/p))]` with `α_i`
/// the least vertex value in it. Factors combine by `min`.
pub fn alpha_eq_bounds(
    graph: &SimplicialGraph,
    alphas: &[f64],
    orders: &[Option<u64>],
    p: Exponent,
) -> Result<CompressionInterval> {
    if alphas.len() != graph.len() || orders.len() != graph.len() {
        return Err(Error::Config(format!(
            "{} alphas and {} orders for {} vertices",
            alphas.len(),
            orders.len(),
            graph.len()
        )));
    }
    if graph.is_empty() {
        return Err(Error::TooFewVertices(1));
    }
    check_alphas(alphas)?;
    let inv_p = 1.0 / p.value();
    let mut out = CompressionInterval::point(1.0);
    for factor in graph.join_factors() {
        let alpha = factor.iter().map(|v| alphas[v.0]).fold(1.0, f64::min);
        let part = if factor.len() == 1 {
            CompressionInterval::point(alpha)
        } else if is_dihedral_factor(graph, factor, orders) {
            CompressionInterval::point(1.0)
        } else {
            CompressionInterval {
                lower: inv_p.min(alpha),
                upper: alpha.min(inv_p.max(0.5)),
            }
        };
        out = out.meet(part);
    }
    Ok(out)
}

/// `α_p(G) = min_v α_p(G_v)`.
pub fn alpha_noneq(alphas: &[f64]) -> Result<f64> {
    if alphas.is_empty() {
        return Err(Error::TooFewVertices(1));
    }
    check_alphas(alphas)?;
    Ok(alphas.iter().copied().fold(1.0, f64::min))
}

/// Why an irreducible graph product contains a non-abelian free subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FreeSubgroupWitness {
    /// `G = G_a * G_b` with one factor of order other than 2.
    TwoVertex { a: VertexId, b: VertexId },
    /// `link(v) = ∅`, so `G = G_v * G_{V∖{v}}`.
    IsolatedVertex(VertexId),
    /// `w ∈ link(v)`, `u ∉ st(v)`, `u ∉ st(w)`: `(G_v × G_w) * G_u` embeds.
    Triple { v: VertexId, w: VertexId, u: VertexId },
}

/// Case analysis for an irreducible graph with at least two vertices.
/// `None` exactly for `Z/2 * Z/2`.
pub fn has_free_subgroup(graph: &SimplicialGraph, orders: &[Option<u64>]) -> Result<Option<FreeSubgroupWitness>> {
    let n = graph.len();
    if n < 2 {
        return Err(Error::TooFewVertices(2));
    }
    if orders.len() != n {
        return Err(Error::Config(format!("{} orders for {n} vertices", orders.len())));
    }
    if graph.is_reducible(graph.vertex_set()) {
        return Err(Error::ReducibleGraph);
    }
    if n == 2 {
        let (a, b) = (VertexId(0), VertexId(1));
        if orders[0] == Some(2) && orders[1] == Some(2) {
            return Ok(None);
        }
        return Ok(Some(FreeSubgroupWitness::TwoVertex { a, b }));
    }
    if let Some(v) = graph.vertices().find(|&v| graph.link_of(v).is_empty()) {
        return Ok(Some(FreeSubgroupWitness::IsolatedVertex(v)));
    }
    for v in graph.vertices() {
        let star_v = graph.link_of(v).with(v);
        for w in graph.link_of(v).iter() {
            let star_w = graph.link_of(w).with(w);
            if let Some(u) = graph.vertex_set().difference(star_v.union(star_w)).first() {
                return Ok(Some(FreeSubgroupWitness::Triple { v, w, u }));
            }
        }
    }
    // Irreducible, no isolated vertex and every edge dominating: impossible
    // for an irreducible graph on three or more vertices.
    unreachable!("irreducible graph without a free-subgroup witness")
}

/// Samples `f(0), …, f(N)` of a non-decreasing `f: ℕ → ℝ_{≥0}` with `f(0) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthFunction {
    samples: Vec<f64>,
}

impl GrowthFunction {
    pub fn new(samples: Vec<f64>) -> Result<Self> {
        match samples.first() {
            None => return Err(Error::InvalidGrowth("no samples".into())),
            Some(&f0) if f0 != 0.0 => return Err(Error::InvalidGrowth(format!("f(0) = {f0}, expected 0"))),
            _ => {}
        }
        if let Some(i) = samples.iter().position(|x| !x.is_finite() || *x < 0.0) {
            return Err(Error::InvalidGrowth(format!("f({i}) = {} is not a non-negative real", samples[i])));
        }
        if let Some(i) = samples.windows(2).position(|w| w[1] < w[0]) {
            return Err(Error::InvalidGrowth(format!("decreases between {i} and {}", i + 1)));
        }
        Ok(GrowthFunction { samples })
    }

    /// `f(n)` for `n = 0..=max`, with `f(0)` forced to 0.
    pub fn from_fn(max: usize, f: impl Fn(usize) -> f64) -> Result<Self> {
        GrowthFunction::new((0..=max).map(|n| if n == 0 { 0.0 } else { f(n) }).collect())
    }

    pub fn max(&self) -> usize {
        self.samples.len() - 1
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn value(&self, n: usize) -> Result<f64> {
        self.samples
            .get(n)
            .copied()
            .ok_or_else(|| Error::InvalidGrowth(format!("no sample at {n}, samples end at {}", self.max())))
    }
}

fn le_tol(a: f64, b: f64) -> bool {
    a <= b || approx_eq(a, b)
}

/// Result of [`check_subadditive_power`].
#[derive(Clone, Debug, PartialEq)]
pub struct SubadditiveReport {
    /// First `(x, y)` with `ρ(x+y)^p > ρ(x)^p + ρ(y)^p`.
    pub violation: Option<(usize, usize)>,
    /// `min_{x>=1} ρ(x)`.
    pub floor: f64,
    pub checks: usize,
}

impl SubadditiveReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none() && self.floor > 0.0
    }
}

/// `ρ(x+y)^p <= ρ(x)^p + ρ(y)^p` for all sampled `x, y >= 1`, plus the floor.
pub fn check_subadditive_power(rho: &GrowthFunction, p: Exponent) -> SubadditiveReport {
    let f = &rho.samples;
    let n = rho.max();
    let pw: Vec<f64> = f.iter().map(|&x| p.pow_f64(x)).collect();
    let mut violation = None;
    let mut checks = 0;
    'outer: for x in 1..=n {
        for y in 1..=n - x {
            checks += 1;
            if !le_tol(pw[x + y], pw[x] + pw[y]) {
                violation = Some((x, y));
                break 'outer;
            }
        }
    }
    SubadditiveReport {
        violation,
        floor: f[1..].iter().copied().fold(f64::INFINITY, f64::min),
        checks,
    }
}

/// Result of [`check_concave_superadditive`].
#[derive(Clone, Debug, PartialEq)]
pub struct ConcavityReport {
    /// First `(n, m)` with `f(n+m) − f(n) > f(n) − f(n−m)`.
    pub concavity_violation: Option<(usize, usize)>,
    /// First `(a, b)` with `f(a) + f(b) < f(a+b)`.
    pub subadditivity_violation: Option<(usize, usize)>,
}

impl ConcavityReport {
    pub fn passed(&self) -> bool {
        self.concavity_violation.is_none() && self.subadditivity_violation.is_none()
    }
}

/// Checks concavity on every sampled `(n, m)` with `m <= n`, then
/// `f(a) + f(b) >= f(a+b)` on every `a + b <= N`.
pub fn check_concave_superadditive(f: &GrowthFunction) -> ConcavityReport {
    let s = &f.samples;
    let n_max = f.max();
    let mut concavity_violation = None;
    'c: for n in 1..=n_max {
        for m in 1..=n.min(n_max - n) {
            if !le_tol(s[n + m] - s[n], s[n] - s[n - m]) {
                concavity_violation = Some((n, m));
                break 'c;
            }
        }
    }
    let mut subadditivity_violation = None;
    's: for a in 0..=n_max {
        for b in 0..=n_max - a {
            if !le_tol(s[a + b], s[a] + s[b]) {
                subadditivity_violation = Some((a, b));
                break 's;
            }
        }
    }
    ConcavityReport {
        concavity_violation,
        subadditivity_violation,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CpcVerdict {
    Consistent,
    Violated,
}

/// Finite evidence for `Σ (1/n)(f(n)/n)^p < ∞` with `f(n)^p/n` eventually
/// non-decreasing. A finite window never proves convergence.
#[derive(Clone, Debug, PartialEq)]
pub struct CpcReport {
    pub partial_sum: f64,
    /// Local decay exponent of the terms between `N/2` and `N`.
    pub decay: f64,
    /// Tail estimate `t(N)·N/(s−1)`; infinite when `s <= 1`.
    pub tail_bound: f64,
    pub tail_monotone: bool,
    pub concave: bool,
    pub verdict: CpcVerdict,
}

/// Evaluates the `C_p^c` condition on `f(1..=N)`.
pub fn check_cpc(f: &GrowthFunction, p: Exponent, n: usize) -> Result<CpcReport> {
    if n < 4 {
        return Err(Error::InvalidGrowth("the C_p^c window needs N >= 4".into()));
    }
    f.value(n)?;
    let s = &f.samples;
    let term = |k: usize| p.pow_f64(s[k] / k as f64) / k as f64;
    let partial_sum: f64 = (1..=n).map(term).sum();
    let half = n / 2;
    let decay = if term(n) > 0.0 && term(half) > 0.0 {
        (term(half) / term(n)).ln() / (n as f64 / half as f64).ln()
    } else {
        f64::INFINITY
    };
    let tail_bound = if decay > 1.0 {
        term(n) * n as f64 / (decay - 1.0)
    } else {
        f64::INFINITY
    };
    let ratio = |k: usize| p.pow_f64(s[k]) / k as f64;
    let tail_monotone = (half..n).all(|k| le_tol(ratio(k), ratio(k + 1)));
    let concave = check_concave_superadditive(&GrowthFunction {
        samples: s[..=n].to_vec(),
    })
    .concavity_violation
    .is_none();
    let verdict = if decay > 1.0 + 1e-3 && tail_monotone {
        CpcVerdict::Consistent
    } else {
        CpcVerdict::Violated
    };
    Ok(CpcReport {
        partial_sum,
        decay,
        tail_bound,
        tail_monotone,
        concave,
        verdict,
    })
}

/// `max_C Σ_{v∈C} max(1, adim G_v)` over maximal cliques.
pub fn adim_bound(graph: &SimplicialGraph, adims: &[u64]) -> Result<u64> {
    if adims.len() != graph.len() {
        return Err(Error::Config(format!("{} adims for {} vertices", adims.len(), graph.len())));
    }
    Ok(graph
        .maximal_cliques()
        .into_iter()
        .map(|c| c.iter().map(|v| adims[v.0].max(1)).sum())
        .max()
        .unwrap_or(0))
}

/// One element of a compression scan.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanRow {
    pub element: NormalForm,
    pub word_length: u64,
    pub syllable_length: usize,
    pub beta_norm_pow: NormPow,
    pub beta_norm: f64,
}

/// Rows sorted by word length then normal form, sphere minima and the fit.
#[derive(Clone, Debug, PartialEq)]
pub struct CompressionScan {
    pub rows: Vec<ScanRow>,
    /// `(n, m(n))` for every length present.
    pub sphere_minima: Vec<(u64, f64)>,
    /// `min_{n>=2} ln m(n) / ln n`, or 1 when no sphere has `n >= 2`.
    pub exponent: f64,
    pub degenerate: bool,
}

impl CompressionScan {
    pub fn write_csv<W: Write>(&self, product: &GraphProduct, out: W) -> Result<()> {
        let io = |e: csv::Error| Error::Config(format!("writing CSV: {e}"));
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        w.write_record(["word", "word_length", "syllable_length", "beta_norm"]).map_err(io)?;
        for r in &self.rows {
            w.write_record([
                product.display(&r.element).to_string(),
                r.word_length.to_string(),
                r.syllable_length.to_string(),
                crate::numeric::decimal(r.beta_norm),
            ])
            .map_err(io)?;
        }
        w.flush().map_err(|e| Error::Config(format!("writing CSV: {e}")))
    }
}

/// Scans the full ball of radius `radius`.
pub fn compression_scan(action: &ProductAction, radius: u64) -> Result<CompressionScan> {
    let ball = action.product().enumerate_ball(radius)?;
    Ok(scan_elements(action, ball.iter().cloned()))
}

/// Scans a caller-chosen family of elements, e.g. [`alternating_family`].
pub fn scan_elements(action: &ProductAction, elements: impl IntoIterator<Item = NormalForm>) -> CompressionScan {
    let product = action.product();
    let p = action.exponent();
    let mut rows: Vec<ScanRow> = elements
        .into_iter()
        .map(|g| {
            let np = action.beta(&g).norm_pow();
            ScanRow {
                word_length: product.word_length(&g),
                syllable_length: g.syllable_length(),
                beta_norm: np.root(p),
                beta_norm_pow: np,
                element: g,
            }
        })
        .collect();
    rows.sort_by(|a, b| (a.word_length, &a.element).cmp(&(b.word_length, &b.element)));
    rows.dedup_by(|a, b| a.element == b.element);
    let mut sphere_minima: Vec<(u64, f64)> = Vec::new();
    for r in &rows {
        match sphere_minima.last_mut() {
            Some((n, m)) if *n == r.word_length => *m = m.min(r.beta_norm),
            _ => sphere_minima.push((r.word_length, r.beta_norm)),
        }
    }
    let fits: Vec<f64> = sphere_minima
        .iter()
        .filter(|(n, _)| *n >= 2)
        .map(|&(n, m)| m.ln() / (n as f64).ln())
        .collect();
    let degenerate = fits.is_empty();
    let exponent = if degenerate { 1.0 } else { fits.into_iter().fold(f64::INFINITY, f64::min) };
    CompressionScan {
        rows,
        sphere_minima,
        exponent,
        degenerate,
    }
}

/// `a b a b …` with `n` unit syllables, for `n = 1..=max_len`.
pub fn alternating_family(product: &GraphProduct, a: VertexId, b: VertexId, max_len: usize) -> Result<Vec<NormalForm>> {
    let gen = |v: VertexId| -> Result<Syllable> {
        let g = product.group(v);
        let x = *g.generators().first().ok_or(Error::VertexOutOfRange(v.0))?;
        Ok(Syllable::new(v, x))
    };
    let (sa, sb) = (gen(a)?, gen(b)?);
    let mut word = Vec::with_capacity(max_len);
    let mut out = Vec::with_capacity(max_len);
    for i in 0..max_len {
        word.push(if i % 2 == 0 { sa } else { sb });
        out.push(product.reduce(&word)?);
    }
    Ok(out)
}

/// Outcome of [`compression_guarantee`].
#[derive(Clone, Debug, PartialEq)]
pub enum Guarantee {
    /// Hypotheses hold and `‖β(g)‖ >= ρ(l_X(g))` on the whole ball.
    Holds { checked: usize },
    /// `ρ(x+y)^p <= ρ(x)^p + ρ(y)^p` fails at this pair, or `ρ` has no positive floor.
    SubadditivityFails(Option<(usize, usize)>),
    /// `‖b_v(g)‖ >= ρ(|g|_{X_v})` fails for this vertex element.
    VertexBoundFails(Syllable),
    /// The conclusion fails at this element.
    ConclusionFails(NormalForm),
}

impl Guarantee {
    pub fn holds(&self) -> bool {
        matches!(self, Guarantee::Holds { .. })
    }

    pub fn hypothesis_failed(&self) -> bool {
        matches!(self, Guarantee::SubadditivityFails(_) | Guarantee::VertexBoundFails(_))
    }
}

fn at_least(norm: f64, bound: f64) -> bool {
    norm >= bound || (bound - norm) <= TOLERANCE * bound.max(1.0)
}

/// Checks the hypotheses of the compression-function criterion, then its
/// conclusion on the ball of radius `radius`.
pub fn compression_guarantee(action: &ProductAction, rho: &GrowthFunction, radius: u64) -> Result<Guarantee> {
    let p = action.exponent();
    rho.value(radius as usize)?;
    let sub = check_subadditive_power(rho, p);
    if !sub.passed() {
        return Ok(Guarantee::SubadditivityFails(sub.violation));
    }
    let product = action.product();
    for v in product.graph().vertices() {
        let group = product.group(v);
        let elems = group.elements().unwrap_or_else(|| group.ball(radius));
        for g in elems {
            if group.is_identity(g) {
                continue;
            }
            let len = group.word_length(g);
            if len > radius {
                continue;
            }
            let norm = action.cocycle(v).norm_pow(g, p).root(p);
            if !at_least(norm, rho.value(len as usize)?) {
                return Ok(Guarantee::VertexBoundFails(Syllable::new(v, g)));
            }
        }
    }
    let ball = product.enumerate_ball(radius)?;
    for g in ball.iter() {
        let norm = action.beta(g).norm();
        if !at_least(norm, rho.value(product.word_length(g) as usize)?) {
            return Ok(Guarantee::ConclusionFails(g.clone()));
        }
    }
    Ok(Guarantee::Holds { checked: ball.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn graph(names: &[&str], edges: &[(&str, &str)]) -> SimplicialGraph {
        SimplicialGraph::new(names, edges).unwrap()
    }

    #[test]
    fn alpha_bounds_closed_cases() {
        let p2 = Exponent::integer(2);
        let z = graph(&["z"], &[]);
        assert_eq!(alpha_eq_bounds(&z, &[1.0], &[None], p2).unwrap(), CompressionInterval::point(1.0));
        let e = graph(&["a", "b"], &[]);
        let dinf = alpha_eq_bounds(&e, &[1.0, 1.0], &[Some(2), Some(2)], Exponent::integer(3)).unwrap();
        assert!(dinf.exact() && dinf.lower == 1.0);
        let free = alpha_eq_bounds(&e, &[1.0, 1.0], &[None, None], p2).unwrap();
        assert_eq!(free, CompressionInterval::point(0.5));
        let p4 = alpha_eq_bounds(&e, &[1.0, 1.0], &[None, None], Exponent::integer(4)).unwrap();
        assert_eq!((p4.lower, p4.upper), (0.25, 0.5));
        assert!(alpha_eq_bounds(&z, &[1.5], &[None], p2).is_err());
    }

    #[test]
    fn alpha_noneq_is_min() {
        assert_eq!(alpha_noneq(&[1.0, 1.0]).unwrap(), 1.0);
        assert_eq!(alpha_noneq(&[0.7, 1.0]).unwrap(), 0.7);
        assert_eq!(alpha_noneq(&[0.3]).unwrap(), 0.3);
        assert!(alpha_noneq(&[]).is_err());
        assert!(alpha_noneq(&[-0.1]).is_err());
    }

    #[test]
    fn free_subgroup_cases() {
        let e = graph(&["a", "b"], &[]);
        assert_eq!(has_free_subgroup(&e, &[Some(2), Some(2)]).unwrap(), None);
        assert!(matches!(
            has_free_subgroup(&e, &[None, None]).unwrap(),
            Some(FreeSubgroupWitness::TwoVertex { .. })
        ));
        let p4 = graph(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]);
        let w = has_free_subgroup(&p4, &[None; 4]).unwrap().unwrap();
        assert_eq!(
            w,
            FreeSubgroupWitness::Triple {
                v: VertexId(0),
                w: VertexId(1),
                u: VertexId(3)
            }
        );
        let p3 = graph(&["u", "v", "w"], &[("u", "v"), ("v", "w")]);
        assert_eq!(has_free_subgroup(&p3, &[None; 3]), Err(Error::ReducibleGraph));
        let k = graph(&["a", "b", "c"], &[("a", "b")]);
        assert_eq!(
            has_free_subgroup(&k, &[None; 3]).unwrap(),
            Some(FreeSubgroupWitness::IsolatedVertex(VertexId(2)))
        );
        assert!(has_free_subgroup(&graph(&["a"], &[]), &[None]).is_err());
    }

    #[test]
    fn subadditive_power_examples() {
        let p2 = Exponent::integer(2);
        let root = GrowthFunction::from_fn(30, |n| (n as f64).sqrt()).unwrap();
        assert!(check_subadditive_power(&root, p2).passed());
        let lin = GrowthFunction::from_fn(30, |n| n as f64).unwrap();
        let r = check_subadditive_power(&lin, p2);
        assert_eq!(r.violation, Some((1, 1)));
        assert_eq!(r.floor, 1.0);
        let capped = GrowthFunction::from_fn(30, |n| (n as f64).min(5.0)).unwrap();
        assert!(check_subadditive_power(&capped, Exponent::integer(1)).passed());
    }

    #[test]
    fn concavity_examples() {
        let root = GrowthFunction::from_fn(50, |n| ((n as f64).sqrt() * 1e6).round() / 1e6).unwrap();
        assert!(check_concave_superadditive(&root).passed());
        let lin = GrowthFunction::from_fn(50, |n| n as f64).unwrap();
        assert!(check_concave_superadditive(&lin).passed());
        let sq = GrowthFunction::from_fn(50, |n| (n * n) as f64).unwrap();
        let r = check_concave_superadditive(&sq);
        assert_eq!(r.concavity_violation, Some((1, 1)));
        assert_eq!(r.subadditivity_violation, Some((1, 1)));
    }

    #[test]
    fn cpc_examples() {
        let f = GrowthFunction::from_fn(2000, |n| (n as f64).powf(0.4)).unwrap();
        let r = check_cpc(&f, Exponent::integer(4), 2000).unwrap();
        assert_eq!(r.verdict, CpcVerdict::Consistent);
        assert!((r.decay - 3.4).abs() < 1e-6);
        let lin = GrowthFunction::from_fn(2000, |n| n as f64).unwrap();
        assert_eq!(check_cpc(&lin, Exponent::integer(3), 2000).unwrap().verdict, CpcVerdict::Violated);
        let half = GrowthFunction::from_fn(2000, |n| (n as f64).sqrt()).unwrap();
        assert_eq!(check_cpc(&half, Exponent::integer(2), 2000).unwrap().verdict, CpcVerdict::Consistent);
        assert!(check_cpc(&half, Exponent::integer(2), 3000).is_err());
    }

    #[test]
    fn adim_examples() {
        let join = fixtures::dihedral_join(2, 1);
        let g = join.product().graph();
        let adims: Vec<u64> = join.product().groups().iter().map(|x| if x.is_finite() { 0 } else { 1 }).collect();
        assert_eq!(adim_bound(g, &adims).unwrap(), 3);
        assert_eq!(adim_bound(&graph(&["z"], &[]), &[1]).unwrap(), 1);
        assert_eq!(adim_bound(&graph(&["a", "b"], &[("a", "b")]), &[1, 1]).unwrap(), 2);
    }

    #[test]
    fn scan_examples() {
        let z = fixtures::single_z();
        let s = compression_scan(&z, 10).unwrap();
        assert_eq!(s.exponent, 1.0);
        assert!(!s.degenerate);
        let s1 = compression_scan(&fixtures::free_zz(), 1).unwrap();
        assert!(s1.degenerate && s1.exponent == 1.0);
        let mut buf = Vec::new();
        s1.write_csv(fixtures::free_zz().product(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("word,word_length,syllable_length,beta_norm\n(empty),0,0,0.000000000\n"));
        assert_eq!(text.lines().count(), 6);
    }

    #[test]
    fn guarantee_examples() {
        let free = fixtures::free_zz();
        let root = GrowthFunction::from_fn(6, |n| (n as f64).sqrt()).unwrap();
        assert!(compression_guarantee(&free, &root, 6).unwrap().holds());
        let lin = GrowthFunction::from_fn(6, |n| n as f64).unwrap();
        let g = compression_guarantee(&free, &lin, 6).unwrap();
        assert_eq!(g, Guarantee::SubadditivityFails(Some((1, 1))));
        assert!(g.hypothesis_failed());
        let lin_p1 = free.with_exponent(Exponent::integer(1));
        assert!(compression_guarantee(&lin_p1, &lin, 6).unwrap().holds());
        assert!(compression_guarantee(&fixtures::single_z().with_exponent(Exponent::integer(1)), &lin, 6)
            .unwrap()
            .holds());
    }
}
