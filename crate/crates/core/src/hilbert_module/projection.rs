use nalgebra::DMatrix;
use num_complex::Complex64;

use super::vector::ModuleVector;
use crate::error::{Error, Result};
use crate::tol;

/// Orthogonal projection of `x` onto the right submodule generated by
/// `generators`, together with the distance `‖x − P_M x‖` in the module
/// norm.
///
/// The submodule `M = {Σ gₜ·bₜ}` equals the complex span of `g·b` over a
/// linear basis `b` of the algebra, and that span is invariant under the
/// right action. The Hilbert–Schmidt-orthogonal projection onto it therefore
/// commutes with the right action and coincides with the module projection
/// `P_M`, so the returned distance realizes `d(x, M) = ‖x − P_M x‖` and is
/// minimal over all `y ∈ M`. Rank decisions use a relative singular-value
/// threshold, so degenerate generator lists are fine.
pub fn submodule_project(
    x: &ModuleVector,
    generators: &[ModuleVector],
) -> Result<(ModuleVector, f64)> {
    if generators.is_empty() {
        return Err(Error::InvalidParam("at least one generator is required".into()));
    }
    if generators.iter().any(|g| !g.same_shape(x)) {
        return Err(Error::ShapeMismatch("generators and vector shapes differ".into()));
    }
    let desc = x.desc();
    let len = x.len();
    let dim = desc.dim() * len;
    let basis = desc.basis_elements();
    let cols = generators.len() * basis.len();

    let mut span = DMatrix::<Complex64>::zeros(dim, cols);
    let mut c = 0;
    for g in generators {
        for b in &basis {
            let col = g.right_mul(b)?.flatten();
            span.set_column(c, &col);
            c += 1;
        }
    }

    let svd = span.svd(true, false);
    let sigma_max = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let u = svd.u.as_ref().expect("requested");
    let xf = x.flatten();
    let mut proj_flat = nalgebra::DVector::<Complex64>::zeros(dim);
    if sigma_max > tol::TINY {
        let cut = tol::RANK_TOL * sigma_max;
        for (i, &s) in svd.singular_values.iter().enumerate() {
            if s > cut {
                let ui = u.column(i);
                let coeff = ui.dotc(&xf);
                proj_flat += ui * coeff;
            }
        }
    }
    let proj = ModuleVector::unflatten(desc, len, &proj_flat)?;
    let distance = (x - &proj).norm();
    Ok((proj, distance))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{random_element, AlgebraDesc, AlgebraElement, ElementKind};
    use crate::rng::stream;
    use rand::Rng;

    fn random_vector(desc: &AlgebraDesc, len: usize, rng: &mut rand_chacha::ChaCha8Rng) -> ModuleVector {
        let entries = (0..len).map(|_| random_element(desc, ElementKind::Generic, rng)).collect();
        ModuleVector::from_entries(entries).unwrap()
    }

    #[test]
    fn orthogonal_basis_slot_cases() {
        let desc = AlgebraDesc::full(2).unwrap();
        let e1 = ModuleVector::basis(&desc, 3, 0).unwrap();
        let e2 = ModuleVector::basis(&desc, 3, 1).unwrap();
        let (p, d) = submodule_project(&e2, &[e1.clone()]).unwrap();
        assert!(p.is_zero(1e-12));
        assert!((d - 1.0).abs() <= 1e-12);
        let (p2, d2) = submodule_project(&(&e1 + &e2), &[e1.clone()]).unwrap();
        assert!(p2.approx_eq(&e1, 1e-12));
        assert!((d2 - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn rank_one_generator_golden_case() {
        // generator e₁·q with q a rank-one projection in M₂; projecting e₁
        // recovers e₁·q at distance ‖1 − q‖ = 1
        let desc = AlgebraDesc::full(2).unwrap();
        let mut q = AlgebraElement::zero(&desc);
        q.blocks_mut()[0][(0, 0)] = Complex64::new(1.0, 0.0);
        let e1 = ModuleVector::basis(&desc, 3, 0).unwrap();
        let g = e1.right_mul(&q).unwrap();
        let (p, d) = submodule_project(&e1, &[g.clone()]).unwrap();
        assert!(p.approx_eq(&g, 1e-10));
        assert!((d - 1.0).abs() <= 1e-10);
        // least-squares style minimality over sampled members of M
        let mut rng = stream(61, &[0]);
        for _ in 0..1000 {
            let b = random_element(&desc, ElementKind::Generic, &mut rng);
            let y = g.right_mul(&b).unwrap();
            assert!(d <= (&e1 - &y).norm() + 1e-9);
        }
    }

    #[test]
    fn projection_is_a_module_map_and_minimal() {
        let desc = AlgebraDesc::new(vec![2, 1]).unwrap();
        let mut rng = stream(62, &[0]);
        for _ in 0..10 {
            let gens: Vec<_> = (0..2).map(|_| random_vector(&desc, 4, &mut rng)).collect();
            let x = random_vector(&desc, 4, &mut rng);
            let (p, d) = submodule_project(&x, &gens).unwrap();
            // commutes with the right action
            let a = random_element(&desc, ElementKind::Generic, &mut rng);
            let (pa, _) = submodule_project(&x.right_mul(&a).unwrap(), &gens).unwrap();
            assert!(pa.approx_eq(&p.right_mul(&a).unwrap(), 1e-8));
            // idempotent
            let (pp, dd) = submodule_project(&p, &gens).unwrap();
            assert!(pp.approx_eq(&p, 1e-9));
            assert!(dd <= 1e-9);
            // minimality over sampled members
            for _ in 0..100 {
                let y: ModuleVector = gens
                    .iter()
                    .fold(ModuleVector::zero(&desc, 4), |acc, g| {
                        let b = random_element(&desc, ElementKind::Generic, &mut rng);
                        &acc + &g.right_mul(&b).unwrap()
                    });
                assert!(d <= (&x - &y).norm() + 1e-9);
            }
        }
    }

    #[test]
    fn degenerate_generators_are_handled() {
        let desc = AlgebraDesc::scalar();
        let z = ModuleVector::zero(&desc, 3);
        let x = ModuleVector::basis(&desc, 3, 1).unwrap();
        let (p, d) = submodule_project(&x, &[z]).unwrap();
        assert!(p.is_zero(1e-12));
        assert!((d - 1.0).abs() <= 1e-12);
        // duplicated generators change nothing
        let g = ModuleVector::basis(&desc, 3, 0).unwrap();
        let (_, d1) = submodule_project(&x, &[g.clone()]).unwrap();
        let (_, d2) = submodule_project(&x, &[g.clone(), g.clone(), g]).unwrap();
        assert!((d1 - d2).abs() <= 1e-12);
    }

    #[test]
    fn distance_to_truncation_range_is_the_tail_norm() {
        // the span of the first n basis slots is the range of Pₙ
        let desc = AlgebraDesc::new(vec![2, 1]).unwrap();
        let mut rng = stream(63, &[0]);
        for _ in 0..5 {
            let x = random_vector(&desc, 4, &mut rng);
            let n = rng.random_range(1..4usize);
            let gens: Vec<_> = (0..n).map(|s| ModuleVector::basis(&desc, 4, s).unwrap()).collect();
            let (p, d) = submodule_project(&x, &gens).unwrap();
            assert!(p.approx_eq(&x.truncate(n).unwrap(), 1e-9));
            assert!((d - x.tail_norm(n).unwrap()).abs() <= 1e-9);
        }
    }
}
