use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::expr::SetExpr;
use super::tail::intersect_points;
use crate::algebra::{random_element, AlgebraDesc, ElementKind};
use crate::hilbert_module::ModuleVector;
use crate::tol;

/// A random vector of module norm at most one.
fn unit_ball_member(desc: &AlgebraDesc, len: usize, rng: &mut ChaCha8Rng) -> ModuleVector {
    let entries = (0..len).map(|_| random_element(desc, ElementKind::Generic, rng)).collect();
    let v = ModuleVector::from_entries(entries).expect("same desc");
    let norm = v.norm();
    let t: f64 = rng.random();
    if norm <= tol::TINY {
        ModuleVector::zero(desc, len)
    } else {
        v.scale_re(t / norm)
    }
}

/// Draw a member of the set. Membership holds exactly by construction, so
/// samples are usable as certified witnesses.
pub(crate) fn draw(expr: &SetExpr, rng: &mut ChaCha8Rng) -> ModuleVector {
    match expr {
        SetExpr::Finite(points) => points[rng.random_range(0..points.len())].clone(),
        SetExpr::Ball { center, radius } => {
            let d = unit_ball_member(center.desc(), center.len(), rng);
            center + &d.scale_re(*radius)
        }
        SetExpr::Scale { factor, child } => draw(child, rng).scale_re(*factor),
        SetExpr::Translate { offset, child } => offset + &draw(child, rng),
        SetExpr::RightMul { factor, child } => {
            draw(child, rng).right_mul(factor).expect("validated shapes")
        }
        SetExpr::Sum(l, r) => &draw(l, rng) + &draw(r, rng),
        SetExpr::Union(l, r) => {
            if rng.random::<bool>() {
                draw(l, rng)
            } else {
                draw(r, rng)
            }
        }
        SetExpr::IntersectFinite(l, r) => {
            let pts = intersect_points(l, r);
            pts[rng.random_range(0..pts.len())].clone()
        }
        SetExpr::ConvexHull(child) => {
            let k = rng.random_range(2..=4usize);
            let members: Vec<_> = (0..k).map(|_| draw(child, rng)).collect();
            // exponential spacings give a uniform point of the simplex
            let mut weights: Vec<f64> = (0..k).map(|_| -(rng.random::<f64>().max(1e-300)).ln()).collect();
            let total: f64 = weights.iter().sum();
            for w in &mut weights {
                *w /= total;
            }
            members
                .iter()
                .zip(&weights)
                .fold(ModuleVector::zero(members[0].desc(), members[0].len()), |acc, (m, &w)| {
                    &acc + &m.scale_re(w)
                })
        }
        SetExpr::BalancedHull(child) => {
            let x = draw(child, rng);
            let u = random_element(x.desc(), ElementKind::Unitary, rng);
            x.right_mul(&u).expect("same desc")
        }
        SetExpr::OperatorImage(t) => {
            let x = unit_ball_member(t.desc(), t.len(), rng);
            t.apply(&x).expect("validated shapes")
        }
    }
}
