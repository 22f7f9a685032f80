use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{random_element, AlgebraDesc, AlgebraElement, ElementKind};
use crate::hilbert_module::{ModuleOperator, ModuleVector};
use crate::sets::{BoundedSet, SetExpr};

/// The two-character splitting set over `A = ℂ⊕ℂ`: a unit ball times the
/// projection `p = diag(1,0)` plus a radius-2 ball times `1−p`. Its tail
/// value is 2 at every level below the horizon while the right translate by
/// `p` has tail value 1, a strict drop under right multiplication.
pub fn golden_splitting_set(len: usize) -> (BoundedSet, AlgebraElement) {
    let desc = AlgebraDesc::new(vec![1, 1]).expect("valid");
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let p = AlgebraElement::scalar_blocks(&desc, &[one, zero]).expect("two blocks");
    let q = AlgebraElement::scalar_blocks(&desc, &[zero, one]).expect("two blocks");
    let small = SetExpr::unit_ball(&desc, len).right_mul(p.clone());
    let big = SetExpr::unit_ball(&desc, len).scale(2.0).right_mul(q);
    (BoundedSet::build(small.sum(big)).expect("well-formed"), p)
}

pub fn random_vector(desc: &AlgebraDesc, len: usize, rng: &mut ChaCha8Rng) -> ModuleVector {
    let entries = (0..len).map(|_| random_element(desc, ElementKind::Generic, rng)).collect();
    ModuleVector::from_entries(entries).expect("same desc")
}

pub fn random_finite(desc: &AlgebraDesc, len: usize, max_points: usize, rng: &mut ChaCha8Rng) -> SetExpr {
    let k = rng.random_range(1..=max_points.max(1));
    SetExpr::points((0..k).map(|_| random_vector(desc, len, rng)).collect())
}

/// Operators drawn from a mixture: dense Gaussian grids, finite-rank thetas,
/// scaled shifts and identities, and sums of those.
pub fn random_operator(desc: &AlgebraDesc, len: usize, rng: &mut ChaCha8Rng) -> ModuleOperator {
    match rng.random_range(0..5u8) {
        0 => {
            let y = random_vector(desc, len, rng);
            let z = random_vector(desc, len, rng);
            ModuleOperator::theta(&y, &z).expect("same shape")
        }
        1 => ModuleOperator::shift(desc, len).scale_re(rng.random_range(0.2..1.5)),
        2 => ModuleOperator::identity(desc, len).scale_re(rng.random_range(0.2..1.5)),
        3 => {
            let a = dense(desc, len, rng);
            let y = random_vector(desc, len, rng);
            let z = random_vector(desc, len, rng);
            a.add(&ModuleOperator::theta(&y, &z).expect("same shape")).expect("same shape")
        }
        _ => dense(desc, len, rng),
    }
}

fn dense(desc: &AlgebraDesc, len: usize, rng: &mut ChaCha8Rng) -> ModuleOperator {
    let scale = 1.0 / (len as f64).sqrt();
    let grid = (0..len)
        .map(|_| {
            (0..len)
                .map(|_| random_element(desc, ElementKind::Generic, rng).scale_re(scale))
                .collect()
        })
        .collect();
    ModuleOperator::from_grid(grid).expect("same desc")
}

fn leaf(desc: &AlgebraDesc, len: usize, exact_only: bool, rng: &mut ChaCha8Rng) -> SetExpr {
    match rng.random_range(0..6u8) {
        0 | 1 => {
            let center = if rng.random::<bool>() {
                ModuleVector::zero(desc, len)
            } else {
                random_vector(desc, len, rng).scale_re(0.5)
            };
            SetExpr::ball(center, rng.random_range(0.2..2.0))
        }
        2 => random_finite(desc, len, 3, rng),
        3 => SetExpr::OperatorImage(random_operator(desc, len, rng)),
        _ if exact_only => SetExpr::unit_ball(desc, len).scale(rng.random_range(0.2..2.0)),
        _ => SetExpr::ball(random_vector(desc, len, rng).scale_re(0.3), rng.random_range(0.2..1.5)),
    }
}

/// A random bounded-set expression of the given depth over all constructor
/// kinds; with `exact_only` the tree stays inside the constructors whose
/// tail intervals are degenerate.
pub fn random_expr(
    desc: &AlgebraDesc,
    len: usize,
    depth: usize,
    exact_only: bool,
    rng: &mut ChaCha8Rng,
) -> SetExpr {
    if depth == 0 {
        return leaf(desc, len, exact_only, rng);
    }
    let pick_max = if exact_only { 4u8 } else { 8u8 };
    match rng.random_range(0..=pick_max) {
        0 => random_expr(desc, len, depth - 1, exact_only, rng)
            .scale(rng.random_range(0.0..1.5)),
        1 => random_expr(desc, len, depth - 1, exact_only, rng)
            .union(random_expr(desc, len, depth - 1, exact_only, rng)),
        2 => random_expr(desc, len, depth - 1, exact_only, rng).convex_hull(),
        3 => random_expr(desc, len, depth - 1, exact_only, rng).balanced_hull(),
        4 => leaf(desc, len, exact_only, rng),
        5 => random_expr(desc, len, depth - 1, exact_only, rng)
            .sum(random_expr(desc, len, depth - 1, exact_only, rng)),
        6 => {
            let a = if rng.random::<bool>() {
                random_element(desc, ElementKind::Unitary, rng)
            } else {
                random_element(desc, ElementKind::Generic, rng)
            };
            random_expr(desc, len, depth - 1, exact_only, rng).right_mul(a)
        }
        7 => random_expr(desc, len, depth - 1, exact_only, rng)
            .translate(random_vector(desc, len, rng).scale_re(0.4)),
        _ => {
            // a nonempty finite intersection: the right operand reuses a
            // point of the left
            let mut pts: Vec<ModuleVector> =
                (0..rng.random_range(1..=3usize)).map(|_| random_vector(desc, len, rng)).collect();
            let shared = pts[0].clone();
            let left = SetExpr::points(pts.clone());
            pts.truncate(1);
            let mut right = vec![shared];
            if rng.random::<bool>() {
                right.push(random_vector(desc, len, rng));
            }
            SetExpr::IntersectFinite(Box::new(left), Box::new(SetExpr::points(right)))
        }
    }
}
