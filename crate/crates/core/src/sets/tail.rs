use super::expr::SetExpr;
use super::interval::Interval;
use super::sample;
use crate::hilbert_module::ModuleVector;
use crate::rng::stream;
use crate::tol;

/// Parameters for tail-interval evaluation. `seed` fixes the refinement
/// sampling streams, so evaluation is pure per `(expr, n, seed)`.
#[derive(Debug, Clone, Copy)]
pub struct EvalParams {
    /// Random members drawn per inexact node to push up the lower endpoint.
    pub refine_samples: usize,
    pub seed: u64,
}

impl Default for EvalParams {
    fn default() -> Self {
        Self { refine_samples: 96, seed: 0x00c0_ffee }
    }
}

const CAND_CAP: usize = 6;
const NODE_TAG: u64 = 0x7a11;

fn mix(h: &mut u64, v: u64) {
    *h ^= v;
    *h = h.wrapping_mul(0x0000_0100_0000_01b3);
}

fn mix_f64(h: &mut u64, v: f64) {
    mix(h, v.to_bits());
}

fn mix_vector(h: &mut u64, x: &ModuleVector) {
    for e in x.entries() {
        for b in e.blocks() {
            for v in b.iter() {
                mix_f64(h, v.re);
                mix_f64(h, v.im);
            }
        }
    }
}

/// Stable hash of the subtree structure and data. Refinement streams key on
/// it, so equal subexpressions refine identically wherever they occur; hull
/// invariance and point-adjunction then hold bit-exactly.
fn structural_tag(expr: &SetExpr) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    fn walk(expr: &SetExpr, h: &mut u64) {
        match expr {
            SetExpr::Finite(pts) => {
                mix(h, 1);
                for p in pts {
                    mix_vector(h, p);
                }
            }
            SetExpr::Ball { center, radius } => {
                mix(h, 2);
                mix_f64(h, *radius);
                mix_vector(h, center);
            }
            SetExpr::Scale { factor, child } => {
                mix(h, 3);
                mix_f64(h, *factor);
                walk(child, h);
            }
            SetExpr::Translate { offset, child } => {
                mix(h, 4);
                mix_vector(h, offset);
                walk(child, h);
            }
            SetExpr::RightMul { factor, child } => {
                mix(h, 5);
                for b in factor.blocks() {
                    for v in b.iter() {
                        mix_f64(h, v.re);
                        mix_f64(h, v.im);
                    }
                }
                walk(child, h);
            }
            SetExpr::Sum(l, r) => {
                mix(h, 6);
                walk(l, h);
                walk(r, h);
            }
            SetExpr::Union(l, r) => {
                mix(h, 7);
                walk(l, h);
                walk(r, h);
            }
            SetExpr::IntersectFinite(l, r) => {
                mix(h, 8);
                walk(l, h);
                walk(r, h);
            }
            SetExpr::ConvexHull(c) => {
                mix(h, 9);
                walk(c, h);
            }
            SetExpr::BalancedHull(c) => {
                mix(h, 10);
                walk(c, h);
            }
            SetExpr::OperatorImage(t) => {
                mix(h, 11);
                for i in 0..t.len() {
                    for j in 0..t.len() {
                        for b in t.entry(i, j).blocks() {
                            for v in b.iter() {
                                mix_f64(h, v.re);
                                mix_f64(h, v.im);
                            }
                        }
                    }
                }
            }
        }
    }
    walk(expr, &mut h);
    h
}

/// Common points of two finite operands, matched at 1e-12.
pub(crate) fn intersect_points(l: &SetExpr, r: &SetExpr) -> Vec<ModuleVector> {
    let (lp, rp) = match (l, r) {
        (SetExpr::Finite(a), SetExpr::Finite(b)) => (a, b),
        _ => unreachable!("validated: intersection operands are finite"),
    };
    let mut out: Vec<ModuleVector> = Vec::new();
    for p in lp {
        if rp.iter().any(|q| (p - q).norm() <= 1e-12) && !out.iter().any(|q| (p - q).norm() <= 1e-12)
        {
            out.push(p.clone());
        }
    }
    out
}

fn exact_max_tail(points: &[ModuleVector], n: usize) -> Interval {
    let v = points
        .iter()
        .map(|p| p.tail_norm(n).expect("validated index"))
        .fold(0.0, f64::max);
    Interval::exact(v)
}

/// Structural tail-norm recursion. Every returned interval contains the true
/// supremum `t_E(n)`; exact constructors return degenerate intervals.
pub(crate) fn tail_interval(expr: &SetExpr, n: usize, params: &EvalParams) -> Interval {
    match expr {
        SetExpr::Finite(points) => exact_max_tail(points, n),
        SetExpr::Ball { center, radius } => {
            // a tail perturbation aligned with the center's tail attains
            // the bound, so this is exact below the horizon
            if n == center.len() {
                Interval::zero()
            } else {
                Interval::exact(center.tail_norm(n).expect("validated index") + radius)
            }
        }
        SetExpr::Scale { factor, child } => tail_interval(child, n, params).scale(*factor),
        SetExpr::Translate { offset, child } => {
            let ci = tail_interval(child, n, params);
            let t0 = offset.tail_norm(n).expect("validated index");
            let hi = ci.hi + t0;
            let lo = (ci.lo - t0).max(t0 - ci.hi).max(0.0);
            refine(expr, n, Interval::new(lo, hi), params)
        }
        SetExpr::RightMul { factor, child } => {
            let ci = tail_interval(child, n, params);
            let hi = ci.hi * factor.norm();
            let lo = match factor.try_inverse() {
                Ok(inv) => {
                    let inv_norm = inv.norm();
                    if inv_norm > tol::TINY {
                        ci.lo / inv_norm
                    } else {
                        0.0
                    }
                }
                Err(_) => 0.0,
            };
            refine(expr, n, Interval::new(lo.min(hi), hi), params)
        }
        SetExpr::Sum(l, r) => {
            let li = tail_interval(l, n, params);
            let ri = tail_interval(r, n, params);
            let hi = li.hi + ri.hi;
            let lo = (li.lo - ri.hi).max(ri.lo - li.hi).max(0.0);
            refine(expr, n, Interval::new(lo, hi), params)
        }
        SetExpr::Union(l, r) => {
            let li = tail_interval(l, n, params);
            let ri = tail_interval(r, n, params);
            Interval::new(li.lo.max(ri.lo), li.hi.max(ri.hi))
        }
        SetExpr::IntersectFinite(l, r) => exact_max_tail(&intersect_points(l, r), n),
        // convex combinations cannot increase the tail supremum and the
        // members themselves survive, so the interval passes through
        SetExpr::ConvexHull(child) => tail_interval(child, n, params),
        // right multiplication by a unitary is tail-isometric
        SetExpr::BalancedHull(child) => tail_interval(child, n, params),
        SetExpr::OperatorImage(t) => {
            Interval::exact(t.tail_norm(n).expect("validated index"))
        }
    }
}

/// Raise the lower endpoint with certified members: structural candidates
/// plus seeded random samples. Never exceeds the upper endpoint.
fn refine(expr: &SetExpr, n: usize, iv: Interval, params: &EvalParams) -> Interval {
    if iv.is_exact() {
        return iv;
    }
    let mut witnessed: f64 = 0.0;
    for cand in tail_candidates(expr, n) {
        witnessed = witnessed.max(cand.tail_norm(n).expect("validated index"));
    }
    if params.refine_samples > 0 {
        let mut rng = stream(params.seed, &[NODE_TAG, structural_tag(expr), n as u64]);
        for _ in 0..params.refine_samples {
            let s = sample::draw(expr, &mut rng);
            witnessed = witnessed.max(s.tail_norm(n).expect("validated index"));
        }
    }
    iv.refine_lo(witnessed)
}

/// Certified members chosen to have large tails beyond slot `n`; at most
/// [`CAND_CAP`] per node, best first.
pub(crate) fn tail_candidates(expr: &SetExpr, n: usize) -> Vec<ModuleVector> {
    let mut out = match expr {
        SetExpr::Finite(points) => points.clone(),
        SetExpr::Ball { center, radius } => {
            let len = center.len();
            let mut cands = Vec::new();
            if n < len {
                let tail = center.tail(n).expect("validated index");
                let tn = tail.norm();
                if tn > tol::TINY {
                    cands.push(center + &tail.scale_re(*radius / tn));
                }
                // a fresh slot beyond the horizon always exists when n < N
                let e = ModuleVector::basis(center.desc(), len, n).expect("n < len");
                cands.push(center + &e.scale_re(*radius));
            }
            cands.push(center.clone());
            cands
        }
        SetExpr::Scale { factor, child } => tail_candidates(child, n)
            .into_iter()
            .map(|x| x.scale_re(*factor))
            .collect(),
        SetExpr::Translate { offset, child } => tail_candidates(child, n)
            .into_iter()
            .map(|x| offset + &x)
            .collect(),
        SetExpr::RightMul { factor, child } => tail_candidates(child, n)
            .into_iter()
            .map(|x| x.right_mul(factor).expect("validated shapes"))
            .collect(),
        SetExpr::Sum(l, r) => {
            let lc = tail_candidates(l, n);
            let rc = tail_candidates(r, n);
            let mut cands = Vec::with_capacity(lc.len() * rc.len());
            for a in &lc {
                for b in &rc {
                    cands.push(a + b);
                }
            }
            cands
        }
        SetExpr::Union(l, r) => {
            let mut cands = tail_candidates(l, n);
            cands.extend(tail_candidates(r, n));
            cands
        }
        SetExpr::IntersectFinite(l, r) => intersect_points(l, r),
        SetExpr::ConvexHull(child) | SetExpr::BalancedHull(child) => tail_candidates(child, n),
        SetExpr::OperatorImage(t) => {
            let mut cands = Vec::new();
            if let Ok(x) = t.norming_vector(n) {
                if let Ok(y) = t.apply(&x) {
                    cands.push(y);
                }
            }
            cands
        }
    };
    out.sort_by(|a, b| {
        b.tail_norm(n)
            .expect("validated index")
            .partial_cmp(&a.tail_norm(n).expect("validated index"))
            .unwrap()
    });
    out.truncate(CAND_CAP);
    out
}
