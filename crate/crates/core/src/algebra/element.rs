use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

/// Shape of a finite-dimensional C*-algebra: the ordered list of full matrix
/// block dimensions `k₁..k_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraDesc {
    blocks: Vec<usize>,
}

impl AlgebraDesc {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidParam("algebra needs at least one block".into()));
        }
        if blocks.iter().any(|&k| k == 0) {
            return Err(Error::InvalidParam("block dimensions must be >= 1".into()));
        }
        Ok(Self { blocks })
    }

    /// The scalars, `A = ℂ`.
    pub fn scalar() -> Self {
        Self { blocks: vec![1] }
    }

    /// A single full matrix block `M_k(ℂ)`.
    pub fn full(k: usize) -> Result<Self> {
        Self::new(vec![k])
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Complex linear dimension `Σ kᵢ²`.
    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|k| k * k).sum()
    }

    /// The matrix units of every block, a linear basis of the algebra.
    pub fn basis_elements(&self) -> Vec<AlgebraElement> {
        let mut out = Vec::with_capacity(self.dim());
        for (b, &k) in self.blocks.iter().enumerate() {
            for r in 0..k {
                for c in 0..k {
                    let mut e = AlgebraElement::zero(self);
                    e.blocks[b][(r, c)] = Complex64::new(1.0, 0.0);
                    out.push(e);
                }
            }
        }
        out
    }
}

impl fmt::Display for AlgebraDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⊕M[")?;
        for (i, k) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "]")
    }
}

/// Largest singular value of a dense complex matrix.
pub(crate) fn spectral_norm(m: &DMatrix<Complex64>) -> f64 {
    if m.nrows() == 1 && m.ncols() == 1 {
        return m[(0, 0)].norm();
    }
    m.singular_values().max()
}

/// An element of `A = ⊕ᵢ M_{kᵢ}(ℂ)`: one dense complex matrix per block.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement {
    desc: AlgebraDesc,
    blocks: Vec<DMatrix<Complex64>>,
}

impl AlgebraElement {
    pub fn zero(desc: &AlgebraDesc) -> Self {
        let blocks = desc.blocks().iter().map(|&k| DMatrix::zeros(k, k)).collect();
        Self { desc: desc.clone(), blocks }
    }

    /// The unit of the algebra: the identity in every block.
    pub fn identity(desc: &AlgebraDesc) -> Self {
        let blocks = desc.blocks().iter().map(|&k| DMatrix::identity(k, k)).collect();
        Self { desc: desc.clone(), blocks }
    }

    pub fn from_blocks(desc: &AlgebraDesc, blocks: Vec<DMatrix<Complex64>>) -> Result<Self> {
        if blocks.len() != desc.num_blocks() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} blocks, got {}",
                desc.num_blocks(),
                blocks.len()
            )));
        }
        for (i, (&k, b)) in desc.blocks().iter().zip(&blocks).enumerate() {
            if b.nrows() != k || b.ncols() != k {
                return Err(Error::ShapeMismatch(format!(
                    "block {i} must be {k}x{k}, got {}x{}",
                    b.nrows(),
                    b.ncols()
                )));
            }
        }
        Ok(Self { desc: desc.clone(), blocks })
    }

    /// Element with scalar `values[i]·I` in block `i`; on abelian algebras
    /// this is the diagonal element with those entries.
    pub fn scalar_blocks(desc: &AlgebraDesc, values: &[Complex64]) -> Result<Self> {
        if values.len() != desc.num_blocks() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} scalars, got {}",
                desc.num_blocks(),
                values.len()
            )));
        }
        let blocks = desc
            .blocks()
            .iter()
            .zip(values)
            .map(|(&k, &v)| DMatrix::identity(k, k) * v)
            .collect();
        Ok(Self { desc: desc.clone(), blocks })
    }

    pub fn desc(&self) -> &AlgebraDesc {
        &self.desc
    }

    pub fn block(&self, i: usize) -> &DMatrix<Complex64> {
        &self.blocks[i]
    }

    pub fn blocks(&self) -> &[DMatrix<Complex64>] {
        &self.blocks
    }

    pub(crate) fn blocks_mut(&mut self) -> &mut Vec<DMatrix<Complex64>> {
        &mut self.blocks
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.desc == other.desc
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&DMatrix<Complex64>, &DMatrix<Complex64>) -> DMatrix<Complex64>) -> Self {
        assert!(self.same_shape(other), "algebra shape mismatch");
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| f(a, b)).collect();
        Self { desc: self.desc.clone(), blocks }
    }

    /// Conjugate transpose in every block.
    pub fn adjoint(&self) -> Self {
        let blocks = self.blocks.iter().map(|b| b.adjoint()).collect();
        Self { desc: self.desc.clone(), blocks }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let blocks = self.blocks.iter().map(|b| b * c).collect();
        Self { desc: self.desc.clone(), blocks }
    }

    pub fn scale_re(&self, c: f64) -> Self {
        self.scale(Complex64::new(c, 0.0))
    }

    /// C*-norm: the largest singular value over all blocks.
    pub fn norm(&self) -> f64 {
        self.blocks.iter().map(spectral_norm).fold(0.0, f64::max)
    }

    /// Sum of block traces.
    pub fn trace(&self) -> Complex64 {
        self.blocks.iter().map(|b| b.trace()).sum()
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.norm() <= tol
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.same_shape(other) && (self - other).norm() <= tol
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        (self - &self.adjoint()).norm() <= tol * self.norm().max(1.0)
    }

    /// Positivity: Hermitian within tolerance and all eigenvalues above a
    /// small drift proportional to the norm.
    pub fn is_positive(&self) -> bool {
        if !self.is_hermitian(tol::EQ_ABS) {
            return false;
        }
        let drift = -tol::PSD_DRIFT * self.norm();
        self.blocks.iter().all(|b| {
            let h = (b + b.adjoint()).scale(0.5);
            h.symmetric_eigen().eigenvalues.iter().all(|&e| e >= drift)
        })
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        let d = &(&self.adjoint() * self) - &Self::identity(&self.desc);
        d.norm() <= tol
    }

    pub fn is_projection(&self, tol: f64) -> bool {
        self.is_hermitian(tol) && (&(self * self) - self).norm() <= tol
    }

    /// True when the element is a scalar multiple of the identity in every
    /// block, i.e. lies in the center of the algebra.
    pub fn is_central(&self, tol: f64) -> bool {
        self.blocks.iter().all(|b| {
            let k = b.nrows();
            let mean = b.trace() / Complex64::new(k as f64, 0.0);
            let d = b - DMatrix::identity(k, k) * mean;
            spectral_norm(&d) <= tol * spectral_norm(b).max(1.0)
        })
    }

    /// Smallest singular value over all blocks.
    pub fn min_singular_value(&self) -> f64 {
        self.blocks
            .iter()
            .map(|b| {
                if b.nrows() == 1 {
                    b[(0, 0)].norm()
                } else {
                    b.singular_values().min()
                }
            })
            .fold(f64::INFINITY, f64::min)
    }

    /// Block-wise inverse; fails when any block is singular.
    pub fn try_inverse(&self) -> Result<Self> {
        let min_sv = self.min_singular_value();
        if min_sv <= tol::RANK_TOL * self.norm().max(1.0) {
            return Err(Error::NotInvertible { min_sv });
        }
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            match b.clone().try_inverse() {
                Some(inv) => blocks.push(inv),
                None => return Err(Error::NotInvertible { min_sv }),
            }
        }
        Ok(Self { desc: self.desc.clone(), blocks })
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: Self) -> AlgebraElement {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: Self) -> AlgebraElement {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: Self) -> AlgebraElement {
        self.zip_with(rhs, |a, b| a * b)
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}
