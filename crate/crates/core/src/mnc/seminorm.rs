use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    random_element, random_pure_state, random_state, AlgebraDesc, AlgebraElement, ElementKind,
    State,
};
use crate::error::{Error, Result};
use crate::hilbert_module::ModuleVector;
use crate::tol;

/// A semi-norm `p_{φ,y}(x) = √(Σⱼ |φ(ηⱼ*ξⱼ)|²)` given by a state `φ` and a
/// weight tuple `y = (η₁..η_N)` normalized so that `sup_j φ(ηⱼ*ηⱼ) = 1`.
///
/// The normalization together with Cauchy–Schwarz gives the domination
/// `p(x) ≤ ‖x‖` for every member of the family.
#[derive(Debug, Clone)]
pub struct SemiNorm {
    state: State,
    weights: Vec<AlgebraElement>,
    /// per-slot, per-block kernels `ρ·ηⱼ*` so that
    /// `φ(ηⱼ*ξ) = Σ_{r,c} K[r,c]·ξ[c,r]`
    kernels: Vec<Vec<DMatrix<Complex64>>>,
}

/// Builds a valid semi-norm: checks shapes, then rescales the weights so the
/// normalization holds exactly. Fails when every weight vanishes under the
/// state.
pub fn make_seminorm(state: State, weights: Vec<AlgebraElement>) -> Result<SemiNorm> {
    if weights.is_empty() {
        return Err(Error::InvalidParam("at least one weight is required".into()));
    }
    if weights.iter().any(|w| w.desc() != state.desc()) {
        return Err(Error::ShapeMismatch("weights and state live in different algebras".into()));
    }
    let mut sup: f64 = 0.0;
    for w in &weights {
        let v = state.eval_raw(&(&w.adjoint() * w)).re;
        sup = sup.max(v);
    }
    if sup <= tol::TINY {
        return Err(Error::DegenerateSeminorm);
    }
    let scale = 1.0 / sup.sqrt();
    let weights: Vec<AlgebraElement> = weights.iter().map(|w| w.scale_re(scale)).collect();
    let kernels = weights
        .iter()
        .map(|w| {
            let wa = w.adjoint();
            (0..state.desc().num_blocks())
                .map(|b| state.density(b) * wa.block(b))
                .collect()
        })
        .collect();
    Ok(SemiNorm { state, weights, kernels })
}

impl SemiNorm {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn desc(&self) -> &AlgebraDesc {
        self.state.desc()
    }

    pub fn state(&self) -> &State {
        &self.state
    }

    pub fn weights(&self) -> &[AlgebraElement] {
        &self.weights
    }

    /// `|sup_j φ(ηⱼ*ηⱼ) − 1|`; zero up to rounding for valid semi-norms.
    pub fn normalization_defect(&self) -> f64 {
        let mut sup: f64 = 0.0;
        for w in &self.weights {
            sup = sup.max(self.state.eval_raw(&(&w.adjoint() * w)).re);
        }
        (sup - 1.0).abs()
    }

    fn check_shape(&self, x: &ModuleVector) -> Result<()> {
        if x.desc() != self.state.desc() || x.len() != self.weights.len() {
            return Err(Error::ShapeMismatch("semi-norm and vector shapes differ".into()));
        }
        Ok(())
    }

    /// The coefficient tuple `(φ(η₁*ξ₁), …, φ(η_N*ξ_N))`. Differences of
    /// feature tuples turn `p(x − y)` into a Euclidean distance, which the
    /// covering and packing searches rely on.
    pub fn features(&self, x: &ModuleVector) -> Result<Vec<Complex64>> {
        self.check_shape(x)?;
        Ok(self.features_raw(x))
    }

    pub(crate) fn features_raw(&self, x: &ModuleVector) -> Vec<Complex64> {
        let nb = self.state.desc().num_blocks();
        self.kernels
            .iter()
            .enumerate()
            .map(|(j, per_block)| {
                let xi = x.entry(j);
                let mut acc = Complex64::new(0.0, 0.0);
                for b in 0..nb {
                    let k = &per_block[b];
                    let m = xi.block(b);
                    for r in 0..k.nrows() {
                        for c in 0..k.ncols() {
                            acc += k[(r, c)] * m[(c, r)];
                        }
                    }
                }
                acc
            })
            .collect()
    }

    /// `p(x)`.
    pub fn eval(&self, x: &ModuleVector) -> Result<f64> {
        self.check_shape(x)?;
        Ok(self.features_raw(x).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
    }

    /// The pair `(φ^u, y·u*)`, which satisfies
    /// `p(x·u) = transform(p, u)(x)` for all `x`.
    pub fn transform(&self, u: &AlgebraElement) -> Result<SemiNorm> {
        let state = self.state.conjugate(u)?;
        let ua = u.adjoint();
        let weights = self.weights.iter().map(|w| w * &ua).collect();
        make_seminorm(state, weights)
    }
}

/// A random valid semi-norm spanning pure and mixed states and several
/// weight patterns (constant unit, random unitary entries, sparse generic).
/// Deterministic per stream.
pub fn random_seminorm(desc: &AlgebraDesc, len: usize, rng: &mut ChaCha8Rng) -> SemiNorm {
    loop {
        let state = if rng.random::<bool>() {
            random_pure_state(desc, rng)
        } else {
            random_state(desc, rng)
        };
        let weights: Vec<AlgebraElement> = match rng.random_range(0..3u8) {
            0 => (0..len).map(|_| AlgebraElement::identity(desc)).collect(),
            1 => (0..len).map(|_| random_element(desc, ElementKind::Unitary, rng)).collect(),
            _ => (0..len)
                .map(|_| {
                    if rng.random::<f64>() < 0.4 {
                        AlgebraElement::zero(desc)
                    } else {
                        random_element(desc, ElementKind::Generic, rng)
                    }
                })
                .collect(),
        };
        if let Ok(p) = make_seminorm(state, weights) {
            return p;
        }
    }
}
