//! Affine isometric actions `(π_v, b_v)` of vertex groups on ℓp blocks.
//!
//! Every block is a sparse ℓp space over a discrete basis, and every linear
//! part used here permutes basis vectors, so coefficients stay exact
//! rationals whatever `p` is.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::group::{Elem, GroupKind, VertexGroup};
use crate::numeric::{int, Exponent, NormPow, Rational};

/// A basis vector of a block.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisIndex {
    /// The single axis of a line block.
    Axis,
    /// `χ_g` in a regular block `ℓp(G_v)`.
    Element(Elem),
    /// A basis vector of the first summand of a padded block.
    Base(Box<BasisIndex>),
    /// A basis vector of the regular summand added by padding.
    Pad(Box<BasisIndex>),
}

impl BasisIndex {
    pub fn render(&self, group: &VertexGroup) -> String {
        match self {
            BasisIndex::Axis => "axis".into(),
            BasisIndex::Element(g) => group.element_name(*g),
            BasisIndex::Base(inner) => format!("base/{}", inner.render(group)),
            BasisIndex::Pad(inner) => format!("pad/{}", inner.render(group)),
        }
    }
}

/// A finitely supported vector of a block; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BlockVector {
    entries: BTreeMap<BasisIndex, Rational>,
}

impl BlockVector {
    pub fn zero() -> Self {
        BlockVector::default()
    }

    pub fn basis(index: BasisIndex, coeff: Rational) -> Self {
        let mut v = BlockVector::zero();
        v.add_entry(index, coeff);
        v
    }

    pub fn entries(&self) -> impl Iterator<Item = (&BasisIndex, &Rational)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add_entry(&mut self, index: BasisIndex, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.entries.entry(index);
        match slot {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &BlockVector) -> BlockVector {
        let mut out = self.clone();
        for (k, c) in &other.entries {
            out.add_entry(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> BlockVector {
        let mut out = BlockVector::zero();
        for (k, c) in &self.entries {
            out.add_entry(k.clone(), c * factor);
        }
        out
    }

    pub fn sub(&self, other: &BlockVector) -> BlockVector {
        self.add(&other.scale(&int(-1)))
    }

    /// Relabels basis vectors through `f`.
    pub fn map_basis(&self, mut f: impl FnMut(&BasisIndex) -> BasisIndex) -> BlockVector {
        let mut out = BlockVector::zero();
        for (k, c) in &self.entries {
            out.add_entry(f(k), c.clone());
        }
        out
    }

    /// `‖x‖^p`.
    pub fn norm_pow(&self, p: Exponent) -> NormPow {
        self.entries
            .values()
            .fold(p.zero_pow(), |acc, c| acc.add(&p.abs_pow(c)))
    }

    pub fn max_abs(&self) -> Option<Rational> {
        self.entries.values().map(|c| c.abs()).max()
    }
}

/// An affine action of a vertex group on a block: a linear part and a
/// translation part (the cocycle).
pub trait AffineAction {
    fn group(&self) -> &VertexGroup;
    /// `π(g) x`.
    fn linear(&self, g: Elem, x: &BlockVector) -> BlockVector;
    /// `b(g)`.
    fn translation(&self, g: Elem) -> BlockVector;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CocycleKind {
    /// Line block, trivial linear part, `b(k) = k`. Integers only.
    Translation,
    /// Regular block, left translation, `b(g) = Cχ_g − Cχ_1`.
    Regular { scale: Rational },
    /// `(π ⊕ π_1, b ⊕ b_1)` with a regular summand of scale `C`.
    Padded {
        base: Box<CocycleKind>,
        scale: Rational,
    },
}

impl fmt::Display for CocycleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CocycleKind::Translation => write!(f, "translation"),
            CocycleKind::Regular { scale } => write!(f, "regular(C={scale})"),
            CocycleKind::Padded { base, scale } => write!(f, "padded({base}, C={scale})"),
        }
    }
}

/// A vertex cocycle bound to its group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCocycle {
    group: VertexGroup,
    kind: CocycleKind,
}

fn positive(scale: &Rational) -> Result<()> {
    if scale.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveScale(scale.to_string()))
    }
}

/// `b(k) = k` on the line, for `G_v = Z`.
pub fn translation_cocycle(group: &VertexGroup) -> Result<VertexCocycle> {
    if !matches!(group.kind(), GroupKind::Integers) {
        return Err(Error::WrongGroupKind {
            cocycle: "translation",
            needed: "an integers",
            group: group.name().into(),
            actual: group.kind_name(),
        });
    }
    Ok(VertexCocycle {
        group: group.clone(),
        kind: CocycleKind::Translation,
    })
}

/// `b(g) = Cχ_g − Cχ_1` on `ℓp(G_v)`, for finite `G_v`.
pub fn regular_cocycle(group: &VertexGroup, scale: Rational) -> Result<VertexCocycle> {
    if !group.is_finite() {
        return Err(Error::WrongGroupKind {
            cocycle: "regular",
            needed: "a finite",
            group: group.name().into(),
            actual: group.kind_name(),
        });
    }
    positive(&scale)?;
    Ok(VertexCocycle {
        group: group.clone(),
        kind: CocycleKind::Regular { scale },
    })
}

/// Direct sum of `base` with a regular cocycle of scale `C`; adds exactly
/// `2C^p` to `‖b(g)‖^p` for every `g ≠ 1`. For infinite groups the regular
/// summand lives on the finitely many coordinates it touches.
pub fn pad_cocycle(base: &VertexCocycle, scale: Rational) -> Result<VertexCocycle> {
    positive(&scale)?;
    Ok(VertexCocycle {
        group: base.group.clone(),
        kind: CocycleKind::Padded {
            base: Box::new(base.kind.clone()),
            scale,
        },
    })
}

impl VertexCocycle {
    /// Rebuilds a cocycle from a kind, checking compatibility with the group.
    pub fn from_kind(group: &VertexGroup, kind: CocycleKind) -> Result<Self> {
        match kind {
            CocycleKind::Translation => translation_cocycle(group),
            CocycleKind::Regular { scale } => regular_cocycle(group, scale),
            CocycleKind::Padded { base, scale } => {
                pad_cocycle(&VertexCocycle::from_kind(group, *base)?, scale)
            }
        }
    }

    pub fn kind(&self) -> &CocycleKind {
        &self.kind
    }

    /// `min_{g ≠ 1} ‖b(g)‖^p`.
    pub fn floor_pow(&self, p: Exponent) -> NormPow {
        fn go(kind: &CocycleKind, p: Exponent) -> NormPow {
            match kind {
                CocycleKind::Translation => p.abs_pow(&int(1)),
                CocycleKind::Regular { scale } => {
                    let c = p.abs_pow(scale);
                    c.add(&c)
                }
                CocycleKind::Padded { base, scale } => {
                    let c = p.abs_pow(scale);
                    go(base, p).add(&c.add(&c))
                }
            }
        }
        go(&self.kind, p)
    }

    pub fn norm_pow(&self, g: Elem, p: Exponent) -> NormPow {
        self.translation(g).norm_pow(p)
    }
}

fn linear_of(kind: &CocycleKind, group: &VertexGroup, g: Elem, x: &BlockVector) -> BlockVector {
    match kind {
        CocycleKind::Translation => x.clone(),
        CocycleKind::Regular { .. } => x.map_basis(|k| match k {
            BasisIndex::Element(h) => BasisIndex::Element(group.multiply(g, *h)),
            other => other.clone(),
        }),
        CocycleKind::Padded { base, .. } => {
            let mut out = BlockVector::zero();
            for (k, c) in x.entries() {
                let mapped = match k {
                    BasisIndex::Base(inner) => linear_of(
                        base,
                        group,
                        g,
                        &BlockVector::basis((**inner).clone(), c.clone()),
                    )
                    .map_basis(|i| BasisIndex::Base(Box::new(i.clone()))),
                    BasisIndex::Pad(inner) => match **inner {
                        BasisIndex::Element(h) => BlockVector::basis(
                            BasisIndex::Pad(Box::new(BasisIndex::Element(group.multiply(g, h)))),
                            c.clone(),
                        ),
                        _ => BlockVector::basis(k.clone(), c.clone()),
                    },
                    _ => BlockVector::basis(k.clone(), c.clone()),
                };
                out = out.add(&mapped);
            }
            out
        }
    }
}

fn regular_translation(group: &VertexGroup, g: Elem, scale: &Rational) -> BlockVector {
    let mut v = BlockVector::zero();
    if !group.is_identity(g) {
        v.add_entry(BasisIndex::Element(g), scale.clone());
        v.add_entry(BasisIndex::Element(group.identity()), -scale.clone());
    }
    v
}

fn translation_of(kind: &CocycleKind, group: &VertexGroup, g: Elem) -> BlockVector {
    match kind {
        CocycleKind::Translation => BlockVector::basis(BasisIndex::Axis, int(g)),
        CocycleKind::Regular { scale } => regular_translation(group, g, scale),
        CocycleKind::Padded { base, scale } => {
            let left = translation_of(base, group, g).map_basis(|i| BasisIndex::Base(Box::new(i.clone())));
            let right = regular_translation(group, g, scale).map_basis(|i| BasisIndex::Pad(Box::new(i.clone())));
            left.add(&right)
        }
    }
}

impl AffineAction for VertexCocycle {
    fn group(&self) -> &VertexGroup {
        &self.group
    }

    fn linear(&self, g: Elem, x: &BlockVector) -> BlockVector {
        linear_of(&self.kind, &self.group, g, x)
    }

    fn translation(&self, g: Elem) -> BlockVector {
        translation_of(&self.kind, &self.group, g)
    }
}

/// Outcome of [`check_vertex_cocycle`].
#[derive(Clone, Debug, PartialEq)]
pub struct CocycleCheck {
    pub checks: usize,
    /// First `(g, h)` with `b(gh) ≠ π(g)b(h) + b(g)`.
    pub cocycle_violation: Option<(Elem, Elem)>,
    /// First `(g, h)` with `‖π(g)b(h)‖ ≠ ‖b(h)‖`.
    pub isometry_violation: Option<(Elem, Elem)>,
}

impl CocycleCheck {
    pub fn passed(&self) -> bool {
        self.cocycle_violation.is_none() && self.isometry_violation.is_none()
    }
}

/// Verifies the cocycle identity and the isometry of the linear part on all
/// pairs from the ball of radius `window` (every element for finite groups).
pub fn check_vertex_cocycle<A: AffineAction + ?Sized>(
    action: &A,
    window: u64,
    p: Exponent,
) -> CocycleCheck {
    let group = action.group();
    let elems = if group.is_finite() {
        group.elements().expect("finite")
    } else {
        group.ball(window)
    };
    let mut report = CocycleCheck {
        checks: 0,
        cocycle_violation: None,
        isometry_violation: None,
    };
    for &g in &elems {
        let bg = action.translation(g);
        for &h in &elems {
            report.checks += 1;
            let bh = action.translation(h);
            let moved = action.linear(g, &bh);
            if report.cocycle_violation.is_none()
                && action.translation(group.multiply(g, h)) != moved.add(&bg)
            {
                report.cocycle_violation = Some((g, h));
            }
            if report.isometry_violation.is_none() && !moved.norm_pow(p).matches(&bh.norm_pow(p)) {
                report.isometry_violation = Some((g, h));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::parse_rational;

    fn exact(n: i64) -> NormPow {
        NormPow::Exact(int(n))
    }

    #[test]
    fn translation_examples() {
        let z = VertexGroup::integers("a");
        let c = translation_cocycle(&z).unwrap();
        let b3 = c.translation(3);
        assert_eq!(b3, BlockVector::basis(BasisIndex::Axis, int(3)));
        assert_eq!(c.norm_pow(3, Exponent::integer(1)), exact(3));
        assert!(c.translation(0).is_zero());
        assert_eq!(c.norm_pow(-2, Exponent::integer(1)), exact(2));
        let c2 = VertexGroup::cyclic("b", 2).unwrap();
        assert!(matches!(translation_cocycle(&c2), Err(Error::WrongGroupKind { .. })));
    }

    #[test]
    fn regular_examples() {
        let c2 = VertexGroup::cyclic("b", 2).unwrap();
        let r = regular_cocycle(&c2, int(1)).unwrap();
        assert_eq!(r.norm_pow(1, Exponent::integer(2)), exact(2));
        assert!(r.translation(0).is_zero());
        let c3 = VertexGroup::cyclic("c", 3).unwrap();
        let r = regular_cocycle(&c3, int(2)).unwrap();
        assert_eq!(r.norm_pow(1, Exponent::integer(1)), exact(4));
        assert_eq!(r.norm_pow(2, Exponent::integer(1)), exact(4));
        assert!(regular_cocycle(&c3, int(0)).is_err());
        assert!(regular_cocycle(&c3, int(-1)).is_err());
        assert!(regular_cocycle(&VertexGroup::integers("z"), int(1)).is_err());
    }

    #[test]
    fn regular_norm_is_constant() {
        let s3 = VertexGroup::symmetric3("s");
        let scale = parse_rational("3/2").unwrap();
        let r = regular_cocycle(&s3, scale).unwrap();
        let p = Exponent::integer(3);
        // 2 * (3/2)^3 = 27/4
        let want = NormPow::Exact(parse_rational("27/4").unwrap());
        for g in s3.elements().unwrap().into_iter().skip(1) {
            assert_eq!(r.norm_pow(g, p), want);
        }
    }

    #[test]
    fn padding_examples() {
        let z = VertexGroup::integers("a");
        let t = translation_cocycle(&z).unwrap();
        let padded = pad_cocycle(&t, int(1)).unwrap();
        assert_eq!(padded.norm_pow(3, Exponent::integer(2)), exact(11));
        assert!(padded.translation(0).is_zero());
        let c2 = VertexGroup::cyclic("b", 2).unwrap();
        let r = regular_cocycle(&c2, int(1)).unwrap();
        let padded = pad_cocycle(&r, int(2)).unwrap();
        assert_eq!(padded.norm_pow(1, Exponent::integer(1)), exact(6));
        assert!(pad_cocycle(&r, int(0)).is_err());
    }

    #[test]
    fn padding_adds_constant_in_window() {
        let z = VertexGroup::integers("a");
        let t = translation_cocycle(&z).unwrap();
        for p in [1, 2, 3] {
            let p = Exponent::integer(p);
            let padded = pad_cocycle(&t, int(2)).unwrap();
            let pad = p.abs_pow(&int(2));
            for g in -12..=12 {
                if g == 0 {
                    continue;
                }
                assert_eq!(padded.norm_pow(g, p), t.norm_pow(g, p).add(&pad.add(&pad)));
            }
        }
    }

    #[test]
    fn shipped_cocycles_pass_checks() {
        let z = VertexGroup::integers("a");
        let c4 = VertexGroup::cyclic("c", 4).unwrap();
        let s3 = VertexGroup::symmetric3("s");
        let t = translation_cocycle(&z).unwrap();
        let cases = vec![
            t.clone(),
            pad_cocycle(&t, int(3)).unwrap(),
            regular_cocycle(&c4, int(1)).unwrap(),
            pad_cocycle(&regular_cocycle(&s3, int(2)).unwrap(), int(1)).unwrap(),
        ];
        for c in cases {
            for p in [Exponent::integer(1), Exponent::integer(2), Exponent::new(2.5).unwrap()] {
                let report = check_vertex_cocycle(&c, 10, p);
                assert!(report.passed(), "{} failed: {report:?}", c.kind());
            }
        }
        let report = check_vertex_cocycle(&regular_cocycle(&c4, int(1)).unwrap(), 1, Exponent::integer(2));
        assert_eq!(report.checks, 16);
        assert_eq!(check_vertex_cocycle(&t, 10, Exponent::integer(2)).checks, 21 * 21);
    }

    #[test]
    fn floor_matches_minimum() {
        let c3 = VertexGroup::cyclic("c", 3).unwrap();
        let p = Exponent::integer(2);
        let c = pad_cocycle(&regular_cocycle(&c3, int(1)).unwrap(), int(2)).unwrap();
        assert_eq!(c.floor_pow(p), exact(10));
        assert_eq!(c.norm_pow(1, p), exact(10));
    }

    struct Doubled(VertexCocycle);

    impl AffineAction for Doubled {
        fn group(&self) -> &VertexGroup {
            self.0.group()
        }
        fn linear(&self, g: Elem, x: &BlockVector) -> BlockVector {
            self.0.linear(g, x)
        }
        fn translation(&self, g: Elem) -> BlockVector {
            // b(g) = g^2 on the line: not additive
            BlockVector::basis(BasisIndex::Axis, int(g * g))
        }
    }

    #[test]
    fn corrupted_cocycle_fails_with_witness() {
        let t = translation_cocycle(&VertexGroup::integers("a")).unwrap();
        let report = check_vertex_cocycle(&Doubled(t), 3, Exponent::integer(2));
        assert!(!report.passed());
        let (g, h) = report.cocycle_violation.unwrap();
        assert_ne!((g + h) * (g + h), g * g + h * h);
    }
}
