use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::element::{AlgebraDesc, AlgebraElement};
use crate::error::{Error, Result};
use crate::tol;

/// A state on `A = ⊕ᵢ M_{kᵢ}(ℂ)`: one PSD density block per matrix block
/// with total trace 1, acting by `φ(a) = Σᵢ tr(ρᵢ aᵢ)`.
///
/// Every state on a finite-dimensional C*-algebra arises this way and is
/// automatically normal.
#[derive(Debug, Clone)]
pub struct State {
    desc: AlgebraDesc,
    density: Vec<DMatrix<Complex64>>,
}

impl State {
    /// Validates Hermitian-PSD blocks and a unit total trace, then fixes the
    /// trace to exactly 1.
    pub fn from_density(desc: &AlgebraDesc, density: Vec<DMatrix<Complex64>>) -> Result<Self> {
        if density.len() != desc.num_blocks() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} density blocks, got {}",
                desc.num_blocks(),
                density.len()
            )));
        }
        let mut total = 0.0;
        for (i, (&k, rho)) in desc.blocks().iter().zip(&density).enumerate() {
            if rho.nrows() != k || rho.ncols() != k {
                return Err(Error::ShapeMismatch(format!(
                    "density block {i} must be {k}x{k}"
                )));
            }
            let herm_defect = super::spectral_norm(&(rho - rho.adjoint()));
            if herm_defect > tol::EQ_ABS {
                return Err(Error::InvalidParam(format!(
                    "density block {i} is not Hermitian (defect {herm_defect:.3e})"
                )));
            }
            let eig_min = rho.clone().symmetric_eigen().eigenvalues.min();
            if eig_min < -tol::PSD_DRIFT * super::spectral_norm(rho).max(1.0) {
                return Err(Error::InvalidParam(format!(
                    "density block {i} is not positive semidefinite (eigenvalue {eig_min:.3e})"
                )));
            }
            total += rho.trace().re;
        }
        if (total - 1.0).abs() > 1e-6 {
            return Err(Error::InvalidParam(format!(
                "total trace must be 1, got {total}"
            )));
        }
        let density = density.into_iter().map(|rho| rho / Complex64::new(total, 0.0)).collect();
        Ok(Self { desc: desc.clone(), density })
    }

    /// Tracial state: `ρᵢ = I/Σk` in every block.
    pub fn maximally_mixed(desc: &AlgebraDesc) -> Self {
        let total: usize = desc.blocks().iter().sum();
        let density = desc
            .blocks()
            .iter()
            .map(|&k| DMatrix::identity(k, k) / Complex64::new(total as f64, 0.0))
            .collect();
        Self { desc: desc.clone(), density }
    }

    /// Pure vector state supported in one block; `v` is normalized.
    pub fn pure(desc: &AlgebraDesc, block: usize, v: &DVector<Complex64>) -> Result<Self> {
        if block >= desc.num_blocks() {
            return Err(Error::IndexOutOfRange { index: block, max: desc.num_blocks() - 1 });
        }
        let k = desc.blocks()[block];
        if v.len() != k {
            return Err(Error::ShapeMismatch(format!("vector must have length {k}")));
        }
        let n = v.norm();
        if n <= tol::TINY {
            return Err(Error::InvalidParam("pure state vector must be nonzero".into()));
        }
        let u = v / Complex64::new(n, 0.0);
        let density = desc
            .blocks()
            .iter()
            .enumerate()
            .map(|(i, &kk)| {
                if i == block {
                    &u * u.adjoint()
                } else {
                    DMatrix::zeros(kk, kk)
                }
            })
            .collect();
        Ok(Self { desc: desc.clone(), density })
    }

    /// Pure state at a top eigenvector of the (Hermitian) element `a`,
    /// chosen in the block carrying the largest eigenvalue. The returned
    /// state satisfies `φ(a) = max eigenvalue of a`.
    pub fn top_eigenvector(a: &AlgebraElement) -> Result<Self> {
        let mut best: Option<(usize, f64, DVector<Complex64>)> = None;
        for (i, b) in a.blocks().iter().enumerate() {
            let h = (b + b.adjoint()).scale(0.5);
            let eig = h.symmetric_eigen();
            let (idx, &val) = eig
                .eigenvalues
                .iter()
                .enumerate()
                .max_by(|x, y| x.1.partial_cmp(y.1).unwrap())
                .unwrap();
            if best.as_ref().map_or(true, |(_, v, _)| val > *v) {
                best = Some((i, val, eig.eigenvectors.column(idx).into_owned()));
            }
        }
        let (block, _, v) = best.unwrap();
        Self::pure(a.desc(), block, &v)
    }

    pub fn desc(&self) -> &AlgebraDesc {
        &self.desc
    }

    pub fn density(&self, i: usize) -> &DMatrix<Complex64> {
        &self.density[i]
    }

    /// `φ(a) = Σᵢ tr(ρᵢ aᵢ)`.
    pub fn eval(&self, a: &AlgebraElement) -> Result<Complex64> {
        if a.desc() != &self.desc {
            return Err(Error::ShapeMismatch("state and element shapes differ".into()));
        }
        Ok(self.eval_raw(a))
    }

    pub(crate) fn eval_raw(&self, a: &AlgebraElement) -> Complex64 {
        debug_assert!(a.desc() == &self.desc);
        let mut acc = Complex64::new(0.0, 0.0);
        for (rho, b) in self.density.iter().zip(a.blocks()) {
            let k = rho.nrows();
            for r in 0..k {
                for c in 0..k {
                    acc += rho[(r, c)] * b[(c, r)];
                }
            }
        }
        acc
    }

    /// The state `φ^u` with `φ^u(a) = φ(u*·a·u)`, realized by the density
    /// blocks `u ρᵢ u*`.
    pub fn conjugate(&self, u: &AlgebraElement) -> Result<State> {
        if u.desc() != &self.desc {
            return Err(Error::ShapeMismatch("state and unitary shapes differ".into()));
        }
        let defect = (&(&u.adjoint() * u) - &AlgebraElement::identity(&self.desc)).norm();
        if defect > tol::EQ_ABS {
            return Err(Error::NotUnitary { defect });
        }
        let density = self
            .density
            .iter()
            .zip(u.blocks())
            .map(|(rho, ub)| ub * rho * ub.adjoint())
            .collect();
        Ok(State { desc: self.desc.clone(), density })
    }
}

#[cfg (test)]
mod tests {
    use super::*;
    use crate::algebra::{random_element, random_state, ElementKind};
    use crate::rng::stream;

    #[test]
    fn unit_normalization() {
        let desc = AlgebraDesc::new(vec![2, 1]).unwrap();
        let mut rng = stream(21, &[0]);
        for _ in 0..10 {
            let phi = random_state(&desc, &mut rng);
            let one = AlgebraElement::identity(&desc);
            let v = phi.eval(&one).unwrap();
            assert!((v.re - 1.0).abs() <= 1e-12 && v.im.abs() <= 1e-12);
        }
    }

    #[test]
    fn scalar_algebra_state_is_identity_functional() {
        let desc = AlgebraDesc::scalar();
        let phi = State::maximally_mixed(&desc);
        let z = AlgebraElement::scalar_blocks(&desc, &[Complex64::new(0.3, -0.7)]).unwrap();
        let v = phi.eval(&z).unwrap();
        assert!((v - Complex64::new(0.3, -0.7)).norm() <= 1e-15);
    }

    #[test]
    fn cauchy_schwarz_on_random_probes() {
        let desc = AlgebraDesc::new(vec![2, 2]).unwrap();
        let mut rng = stream(22, &[0]);
        for _ in 0..50 {
            let phi = random_state(&desc, &mut rng);
            let a = random_element(&desc, ElementKind::Generic, &mut rng);
            let b = random_element(&desc, ElementKind::Generic, &mut rng);
            let lhs = phi.eval(&(&b.adjoint() * &a)).unwrap().norm_sqr();
            let rhs = phi.eval(&(&b.adjoint() * &b)).unwrap().re
                * phi.eval(&(&a.adjoint() * &a)).unwrap().re;
            assert!(lhs <= rhs + 1e-12);
        }
    }

    #[test]
    fn state_positivity_on_positive_elements() {
        let desc = AlgebraDesc::new(vec![3]).unwrap();
        let mut rng = stream(23, &[0]);
        for _ in 0..30 {
            let phi = random_state(&desc, &mut rng);
            let a = random_element(&desc, ElementKind::Positive, &mut rng);
            let v = phi.eval(&a).unwrap();
            assert!(v.im.abs() <= 1e-10);
            assert!(v.re >= -1e-10);
        }
    }

    #[test]
    fn conjugation_identity_and_round_trip() {
        let desc = AlgebraDesc::new(vec![2, 1]).unwrap();
        let mut rng = stream(24, &[0]);
        for _ in 0..30 {
            let phi = random_state(&desc, &mut rng);
            let u = random_element(&desc, ElementKind::Unitary, &mut rng);
            let a = random_element(&desc, ElementKind::Generic, &mut rng);
            let phi_u = phi.conjugate(&u).unwrap();
            let direct = phi.eval(&(&(&u.adjoint() * &a) * &u)).unwrap();
            assert!((phi_u.eval(&a).unwrap() - direct).norm() <= 1e-12);
            let back = phi_u.conjugate(&u.adjoint()).unwrap();
            assert!((back.eval(&a).unwrap() - phi.eval(&a).unwrap()).norm() <= 1e-12);
        }
    }

    #[test]
    fn identity_conjugation_is_trivial() {
        let desc = AlgebraDesc::full(2).unwrap();
        let mut rng = stream(25, &[0]);
        let phi = random_state(&desc, &mut rng);
        let one = AlgebraElement::identity(&desc);
        let same = phi.conjugate(&one).unwrap();
        let a = random_element(&desc, ElementKind::Generic, &mut rng);
        assert!((same.eval(&a).unwrap() - phi.eval(&a).unwrap()).norm() <= 1e-14);
    }

    #[test]
    fn non_unitary_is_rejected() {
        let desc = AlgebraDesc::full(2).unwrap();
        let phi = State::maximally_mixed(&desc);
        let two = AlgebraElement::identity(&desc).scale_re(2.0);
        assert!(matches!(phi.conjugate(&two), Err(Error::NotUnitary { .. })));
    }

    #[test]
    fn top_eigenvector_state_attains_the_norm() {
        let desc = AlgebraDesc::new(vec![2, 1]).unwrap();
        let mut rng = stream(26, &[0]);
        for _ in 0..20 {
            let a = random_element(&desc, ElementKind::Positive, &mut rng);
            let phi = State::top_eigenvector(&a).unwrap();
            let v = phi.eval(&a).unwrap();
            assert!((v.re - a.norm()).abs() <= 1e-9 * a.norm().max(1.0));
        }
    }
}
