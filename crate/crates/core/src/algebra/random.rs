use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::element::{AlgebraDesc, AlgebraElement};
use super::state::State;
use crate::tol;

/// Kinds of random algebra elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementKind {
    Generic,
    Hermitian,
    Positive,
    Unitary,
    Projection,
}

fn gauss(rng: &mut ChaCha8Rng) -> f64 {
    rng.sample(StandardNormal)
}

fn ginibre(k: usize, rng: &mut ChaCha8Rng) -> DMatrix<Complex64> {
    let scale = 1.0 / (2.0 * k as f64).sqrt();
    DMatrix::from_fn(k, k, |_, _| Complex64::new(gauss(rng) * scale, gauss(rng) * scale))
}

fn random_unitary_block(k: usize, rng: &mut ChaCha8Rng) -> DMatrix<Complex64> {
    let qr = ginibre(k, rng).qr();
    let r = qr.r();
    let mut q = qr.q();
    // fix the phases of R's diagonal so the distribution is Haar-like
    for j in 0..k {
        let d = r[(j, j)];
        let phase = if d.norm() > tol::TINY { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..k {
            q[(i, j)] *= phase;
        }
    }
    q
}

fn random_projection_block(k: usize, rng: &mut ChaCha8Rng) -> DMatrix<Complex64> {
    let rank = rng.random_range(0..=k);
    if rank == 0 {
        return DMatrix::zeros(k, k);
    }
    if rank == k {
        return DMatrix::identity(k, k);
    }
    let u = random_unitary_block(k, rng);
    let cols = u.columns(0, rank);
    &cols * cols.adjoint()
}

/// Deterministic per seed; the returned object satisfies its kind invariant
/// within 1e-10.
pub fn random_element(desc: &AlgebraDesc, kind: ElementKind, rng: &mut ChaCha8Rng) -> AlgebraElement {
    let blocks = desc
        .blocks()
        .iter()
        .map(|&k| match kind {
            ElementKind::Generic => ginibre(k, rng),
            ElementKind::Hermitian => {
                let g = ginibre(k, rng);
                (&g + g.adjoint()).scale(0.5)
            }
            ElementKind::Positive => {
                let g = ginibre(k, rng);
                &g * g.adjoint()
            }
            ElementKind::Unitary => random_unitary_block(k, rng),
            ElementKind::Projection => random_projection_block(k, rng),
        })
        .collect();
    AlgebraElement::from_blocks(desc, blocks).expect("generated blocks match desc")
}

/// A random mixed state: normalized Wishart density blocks.
pub fn random_state(desc: &AlgebraDesc, rng: &mut ChaCha8Rng) -> State {
    loop {
        let mut density = Vec::with_capacity(desc.num_blocks());
        let mut total = 0.0;
        for &k in desc.blocks() {
            let weight: f64 = rng.random::<f64>();
            let g = ginibre(k, rng);
            let w = (&g * g.adjoint()).scale(weight);
            total += w.trace().re;
            density.push(w);
        }
        if total <= tol::TINY {
            continue;
        }
        let density = density.into_iter().map(|b| b / Complex64::new(total, 0.0)).collect();
        return State::from_density(desc, density).expect("normalized Wishart blocks form a state");
    }
}

/// A random pure state supported in one block.
pub fn random_pure_state(desc: &AlgebraDesc, rng: &mut ChaCha8Rng) -> State {
    let block = rng.random_range(0..desc.num_blocks());
    let k = desc.blocks()[block];
    loop {
        let v = DVector::from_fn(k, |_, _| Complex64::new(gauss(rng), gauss(rng)));
        if v.norm() > 1e-6 {
            return State::pure(desc, block, &v).expect("nonzero vector");
        }
    }
}
