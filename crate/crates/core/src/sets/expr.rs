use rand_chacha::ChaCha8Rng;

use super::interval::Interval;
use super::sample;
use super::tail::{self, EvalParams};
use crate::algebra::{AlgebraDesc, AlgebraElement};
use crate::error::{Error, Result};
use crate::hilbert_module::{ModuleOperator, ModuleVector};
use crate::tol;

/// Expression tree describing a bounded subset of the truncated module.
#[derive(Debug, Clone)]
pub enum SetExpr {
    /// A nonempty finite point set.
    Finite(Vec<ModuleVector>),
    /// `{center + d : ‖d‖ ≤ radius}`.
    Ball { center: ModuleVector, radius: f64 },
    /// `{c·x : x ∈ child}` for `c ≥ 0`.
    Scale { factor: f64, child: Box<SetExpr> },
    /// `{offset + x : x ∈ child}`.
    Translate { offset: ModuleVector, child: Box<SetExpr> },
    /// `{x·a : x ∈ child}`.
    RightMul { factor: AlgebraElement, child: Box<SetExpr> },
    /// Minkowski sum.
    Sum(Box<SetExpr>, Box<SetExpr>),
    Union(Box<SetExpr>, Box<SetExpr>),
    /// Intersection; both operands must be finite point sets.
    IntersectFinite(Box<SetExpr>, Box<SetExpr>),
    /// Convex combinations of members.
    ConvexHull(Box<SetExpr>),
    /// `⋃ᵤ child·u` over unitaries `u`.
    BalancedHull(Box<SetExpr>),
    /// `T(B₁)`, the image of the closed unit ball.
    OperatorImage(ModuleOperator),
}

impl SetExpr {
    pub fn unit_ball(desc: &AlgebraDesc, len: usize) -> Self {
        SetExpr::Ball { center: ModuleVector::zero(desc, len), radius: 1.0 }
    }

    pub fn ball(center: ModuleVector, radius: f64) -> Self {
        SetExpr::Ball { center, radius }
    }

    pub fn points(points: Vec<ModuleVector>) -> Self {
        SetExpr::Finite(points)
    }

    pub fn scale(self, factor: f64) -> Self {
        SetExpr::Scale { factor, child: Box::new(self) }
    }

    pub fn translate(self, offset: ModuleVector) -> Self {
        SetExpr::Translate { offset, child: Box::new(self) }
    }

    pub fn right_mul(self, factor: AlgebraElement) -> Self {
        SetExpr::RightMul { factor, child: Box::new(self) }
    }

    pub fn sum(self, other: SetExpr) -> Self {
        SetExpr::Sum(Box::new(self), Box::new(other))
    }

    pub fn union(self, other: SetExpr) -> Self {
        SetExpr::Union(Box::new(self), Box::new(other))
    }

    pub fn convex_hull(self) -> Self {
        SetExpr::ConvexHull(Box::new(self))
    }

    pub fn balanced_hull(self) -> Self {
        SetExpr::BalancedHull(Box::new(self))
    }

    fn shape(&self) -> Result<(AlgebraDesc, usize)> {
        match self {
            SetExpr::Finite(pts) => match pts.first() {
                Some(p) => Ok((p.desc().clone(), p.len())),
                None => Err(Error::EmptySet("finite set has no points".into())),
            },
            SetExpr::Ball { center, .. } => Ok((center.desc().clone(), center.len())),
            SetExpr::Scale { child, .. }
            | SetExpr::Translate { child, .. }
            | SetExpr::RightMul { child, .. }
            | SetExpr::ConvexHull(child)
            | SetExpr::BalancedHull(child) => child.shape(),
            SetExpr::Sum(l, _) | SetExpr::Union(l, _) | SetExpr::IntersectFinite(l, _) => l.shape(),
            SetExpr::OperatorImage(t) => Ok((t.desc().clone(), t.len())),
        }
    }

    fn validate(&self, desc: &AlgebraDesc, len: usize) -> Result<()> {
        match self {
            SetExpr::Finite(pts) => {
                if pts.is_empty() {
                    return Err(Error::EmptySet("finite set has no points".into()));
                }
                for p in pts {
                    if p.desc() != desc || p.len() != len {
                        return Err(Error::ShapeMismatch("finite point shape differs".into()));
                    }
                }
                Ok(())
            }
            SetExpr::Ball { center, radius } => {
                if !radius.is_finite() || *radius < 0.0 {
                    return Err(Error::InvalidSet(format!("ball radius must be >= 0, got {radius}")));
                }
                if center.desc() != desc || center.len() != len {
                    return Err(Error::ShapeMismatch("ball center shape differs".into()));
                }
                Ok(())
            }
            SetExpr::Scale { factor, child } => {
                if !factor.is_finite() || *factor < 0.0 {
                    return Err(Error::InvalidSet(format!("scale factor must be >= 0, got {factor}")));
                }
                child.validate(desc, len)
            }
            SetExpr::Translate { offset, child } => {
                if offset.desc() != desc || offset.len() != len {
                    return Err(Error::ShapeMismatch("translate offset shape differs".into()));
                }
                child.validate(desc, len)
            }
            SetExpr::RightMul { factor, child } => {
                if factor.desc() != desc {
                    return Err(Error::ShapeMismatch("right factor algebra differs".into()));
                }
                child.validate(desc, len)
            }
            SetExpr::Sum(l, r) | SetExpr::Union(l, r) => {
                l.validate(desc, len)?;
                r.validate(desc, len)
            }
            SetExpr::IntersectFinite(l, r) => {
                if !matches!(**l, SetExpr::Finite(_)) || !matches!(**r, SetExpr::Finite(_)) {
                    return Err(Error::InvalidSet(
                        "intersection operands must be finite point sets".into(),
                    ));
                }
                l.validate(desc, len)?;
                r.validate(desc, len)?;
                if tail::intersect_points(l, r).is_empty() {
                    return Err(Error::EmptySet("intersection has no common points".into()));
                }
                Ok(())
            }
            SetExpr::ConvexHull(child) | SetExpr::BalancedHull(child) => child.validate(desc, len),
            SetExpr::OperatorImage(t) => {
                if t.desc() != desc || t.len() != len {
                    return Err(Error::ShapeMismatch("operator shape differs".into()));
                }
                Ok(())
            }
        }
    }

    /// Whether the expression denotes a finite point set (totally bounded by
    /// construction).
    fn finite_denoting(&self) -> bool {
        match self {
            SetExpr::Finite(_) | SetExpr::IntersectFinite(_, _) => true,
            SetExpr::Ball { radius, .. } => *radius == 0.0,
            SetExpr::Scale { factor, child } => *factor == 0.0 || child.finite_denoting(),
            SetExpr::Translate { child, .. } | SetExpr::RightMul { child, .. } => {
                child.finite_denoting()
            }
            SetExpr::Sum(l, r) => l.finite_denoting() && r.finite_denoting(),
            SetExpr::Union(l, r) => l.finite_denoting() && r.finite_denoting(),
            SetExpr::ConvexHull(_) | SetExpr::BalancedHull(_) => false,
            SetExpr::OperatorImage(_) => false,
        }
    }

    /// Closure under the right action by unitaries, decided structurally:
    /// origin-centered balls, sums/unions/hulls of balanced sets, right
    /// multiplication by central elements, and operator images.
    fn balanced(&self) -> bool {
        match self {
            SetExpr::Finite(pts) => pts.iter().all(|p| p.is_zero(tol::EQ_ABS)),
            SetExpr::Ball { center, .. } => center.is_zero(tol::EQ_ABS),
            SetExpr::Scale { child, .. } => child.balanced(),
            SetExpr::Translate { offset, child } => offset.is_zero(tol::EQ_ABS) && child.balanced(),
            SetExpr::RightMul { factor, child } => child.balanced() && factor.is_central(tol::EQ_ABS),
            SetExpr::Sum(l, r) | SetExpr::Union(l, r) | SetExpr::IntersectFinite(l, r) => {
                l.balanced() && r.balanced()
            }
            SetExpr::ConvexHull(child) => child.balanced(),
            SetExpr::BalancedHull(_) => true,
            SetExpr::OperatorImage(_) => true,
        }
    }

    /// Whether a finite packing pattern extends past any truncation horizon:
    /// balls and their nonnegative scalings.
    fn tail_uniform(&self) -> bool {
        match self {
            SetExpr::Ball { radius, .. } => *radius > 0.0,
            SetExpr::Scale { factor, child } => *factor > 0.0 && child.tail_uniform(),
            _ => false,
        }
    }
}

/// A validated bounded set: shape-checked expression plus cached structural
/// facts. All evaluation is pure per `(expr, n, seed)`.
#[derive(Debug, Clone)]
pub struct BoundedSet {
    expr: SetExpr,
    desc: AlgebraDesc,
    len: usize,
    finite_denoting: bool,
    balanced: bool,
    tail_uniform: bool,
}

impl BoundedSet {
    /// Validates shapes and structural invariants (`radius ≥ 0`,
    /// `factor ≥ 0`, finite intersection operands, nonempty sets).
    pub fn build(expr: SetExpr) -> Result<Self> {
        let (desc, len) = expr.shape()?;
        if len == 0 {
            return Err(Error::InvalidSet("module length must be >= 1".into()));
        }
        expr.validate(&desc, len)?;
        let finite_denoting = expr.finite_denoting();
        let balanced = expr.balanced();
        let tail_uniform = expr.tail_uniform();
        Ok(Self { expr, desc, len, finite_denoting, balanced, tail_uniform })
    }

    pub fn expr(&self) -> &SetExpr {
        &self.expr
    }

    pub fn desc(&self) -> &AlgebraDesc {
        &self.desc
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_finite_denoting(&self) -> bool {
        self.finite_denoting
    }

    pub fn is_balanced(&self) -> bool {
        self.balanced
    }

    pub fn is_tail_uniform(&self) -> bool {
        self.tail_uniform
    }

    /// The point list when the root is a finite set or a finite
    /// intersection.
    pub fn points(&self) -> Option<Vec<ModuleVector>> {
        match &self.expr {
            SetExpr::Finite(pts) => Some(pts.clone()),
            SetExpr::IntersectFinite(l, r) => Some(tail::intersect_points(l, r)),
            _ => None,
        }
    }

    /// Certified interval around `t_E(n) = sup_{x∈E} ‖x − Pₙx‖` with default
    /// refinement parameters.
    pub fn tail_norm(&self, n: usize) -> Result<Interval> {
        self.tail_norm_with(n, &EvalParams::default())
    }

    pub fn tail_norm_with(&self, n: usize, params: &EvalParams) -> Result<Interval> {
        if n > self.len {
            return Err(Error::IndexOutOfRange { index: n, max: self.len });
        }
        Ok(tail::tail_interval(&self.expr, n, params))
    }

    /// Interval around `‖E‖ = sup_{x∈E} ‖x‖`; this is the tail interval at
    /// `n = 0`.
    pub fn sup_norm(&self) -> Result<Interval> {
        self.tail_norm(0)
    }

    pub fn sup_norm_with(&self, params: &EvalParams) -> Result<Interval> {
        self.tail_norm_with(0, params)
    }

    /// Draw a certified member. Deterministic per RNG stream.
    pub fn sample(&self, rng: &mut ChaCha8Rng) -> ModuleVector {
        sample::draw(&self.expr, rng)
    }

    /// Members with large tail norms beyond slot `n`, produced structurally
    /// (ball alignments, operator norming vectors, sums of child
    /// candidates). Used to refine lower bounds and to seed witness
    /// searches.
    pub fn tail_maximizer_candidates(&self, n: usize) -> Result<Vec<ModuleVector>> {
        if n > self.len {
            return Err(Error::IndexOutOfRange { index: n, max: self.len });
        }
        Ok(tail::tail_candidates(&self.expr, n))
    }

    /// Convenience: a member attaining the best known tail norm at `n`.
    pub fn tail_maximizer(&self, n: usize) -> Result<Option<ModuleVector>> {
        let cands = self.tail_maximizer_candidates(n)?;
        Ok(cands.into_iter().max_by(|a, b| {
            a.tail_norm(n).unwrap().partial_cmp(&b.tail_norm(n).unwrap()).unwrap()
        }))
    }

    /// Right-translate of the whole set, `E·a`.
    pub fn pushed_right(&self, a: &AlgebraElement) -> Result<BoundedSet> {
        BoundedSet::build(self.expr.clone().right_mul(a.clone()))
    }
}
