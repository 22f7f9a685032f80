use std::ops::{Add, Neg, Sub};

use nalgebra::DVector;
use num_complex::Complex64;

use crate::algebra::{AlgebraDesc, AlgebraElement};
use crate::error::{Error, Result};

/// A finitely supported member of `l²(A)`: a length-N tuple of algebra
/// elements.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleVector {
    desc: AlgebraDesc,
    entries: Vec<AlgebraElement>,
}

impl ModuleVector {
    pub fn zero(desc: &AlgebraDesc, len: usize) -> Self {
        let entries = (0..len).map(|_| AlgebraElement::zero(desc)).collect();
        Self { desc: desc.clone(), entries }
    }

    /// `e_slot · 1`: the unit of the algebra in one slot.
    pub fn basis(desc: &AlgebraDesc, len: usize, slot: usize) -> Result<Self> {
        if slot >= len {
            return Err(Error::IndexOutOfRange { index: slot, max: len.saturating_sub(1) });
        }
        let mut v = Self::zero(desc, len);
        v.entries[slot] = AlgebraElement::identity(desc);
        Ok(v)
    }

    pub fn from_entries(entries: Vec<AlgebraElement>) -> Result<Self> {
        let first = entries
            .first()
            .ok_or_else(|| Error::InvalidParam("vector needs at least one entry".into()))?;
        let desc = first.desc().clone();
        if entries.iter().any(|e| e.desc() != &desc) {
            return Err(Error::ShapeMismatch("entries live in different algebras".into()));
        }
        Ok(Self { desc, entries })
    }

    pub fn desc(&self) -> &AlgebraDesc {
        &self.desc
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, j: usize) -> &AlgebraElement {
        &self.entries[j]
    }

    pub fn entries(&self) -> &[AlgebraElement] {
        &self.entries
    }

    pub fn set_entry(&mut self, j: usize, e: AlgebraElement) -> Result<()> {
        if e.desc() != &self.desc {
            return Err(Error::ShapeMismatch("entry algebra differs".into()));
        }
        self.entries[j] = e;
        Ok(())
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.desc == other.desc && self.len() == other.len()
    }

    /// `⟨x, y⟩ = Σⱼ ξⱼ*ηⱼ`, conjugate-linear in `self`.
    pub fn inner_product(&self, other: &Self) -> Result<AlgebraElement> {
        if !self.same_shape(other) {
            return Err(Error::ShapeMismatch("inner product needs equal shapes".into()));
        }
        let mut acc = AlgebraElement::zero(&self.desc);
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc = &acc + &(&a.adjoint() * b);
        }
        Ok(acc)
    }

    /// `‖x‖ = ‖⟨x,x⟩‖^{1/2}`.
    pub fn norm(&self) -> f64 {
        let g = self.inner_product(self).expect("same shape");
        g.norm().max(0.0).sqrt()
    }

    /// `Pₙx`: keep entries `0..n`, zero the rest. Idempotent; `n = N` is the
    /// identity.
    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n > self.len() {
            return Err(Error::IndexOutOfRange { index: n, max: self.len() });
        }
        let mut out = self.clone();
        for j in n..self.len() {
            out.entries[j] = AlgebraElement::zero(&self.desc);
        }
        Ok(out)
    }

    /// `(I − Pₙ)x = x − truncate(x, n)`.
    pub fn tail(&self, n: usize) -> Result<Self> {
        if n > self.len() {
            return Err(Error::IndexOutOfRange { index: n, max: self.len() });
        }
        let mut out = self.clone();
        for j in 0..n {
            out.entries[j] = AlgebraElement::zero(&self.desc);
        }
        Ok(out)
    }

    /// `‖(I − Pₙ)x‖` without materializing the tail.
    pub fn tail_norm(&self, n: usize) -> Result<f64> {
        if n > self.len() {
            return Err(Error::IndexOutOfRange { index: n, max: self.len() });
        }
        let mut acc = AlgebraElement::zero(&self.desc);
        for j in n..self.len() {
            let e = &self.entries[j];
            acc = &acc + &(&e.adjoint() * e);
        }
        Ok(acc.norm().max(0.0).sqrt())
    }

    /// Right action `x·a`, entry-wise `ξⱼa`.
    pub fn right_mul(&self, a: &AlgebraElement) -> Result<Self> {
        if a.desc() != &self.desc {
            return Err(Error::ShapeMismatch("right factor algebra differs".into()));
        }
        let entries = self.entries.iter().map(|e| e * a).collect();
        Ok(Self { desc: self.desc.clone(), entries })
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let entries = self.entries.iter().map(|e| e.scale(c)).collect();
        Self { desc: self.desc.clone(), entries }
    }

    pub fn scale_re(&self, c: f64) -> Self {
        self.scale(Complex64::new(c, 0.0))
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.norm() <= tol
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.same_shape(other) && (self - other).norm() <= tol
    }

    /// All complex coordinates of all block entries as one flat vector; the
    /// standard inner product on it is the Hilbert–Schmidt pairing
    /// `tr_A(⟨x, y⟩)`.
    pub fn flatten(&self) -> DVector<Complex64> {
        let dim = self.desc.dim() * self.len();
        let mut out = DVector::zeros(dim);
        let mut at = 0;
        for e in &self.entries {
            for b in e.blocks() {
                for r in 0..b.nrows() {
                    for c in 0..b.ncols() {
                        out[at] = b[(r, c)];
                        at += 1;
                    }
                }
            }
        }
        out
    }

    /// Inverse of [`flatten`](Self::flatten).
    pub fn unflatten(desc: &AlgebraDesc, len: usize, flat: &DVector<Complex64>) -> Result<Self> {
        if flat.len() != desc.dim() * len {
            return Err(Error::ShapeMismatch("flat vector has wrong dimension".into()));
        }
        let mut v = Self::zero(desc, len);
        let mut at = 0;
        for j in 0..len {
            let mut e = AlgebraElement::zero(desc);
            for b in e.blocks_mut() {
                for r in 0..b.nrows() {
                    for c in 0..b.ncols() {
                        b[(r, c)] = flat[at];
                        at += 1;
                    }
                }
            }
            v.entries[j] = e;
        }
        Ok(v)
    }
}

impl Add for &ModuleVector {
    type Output = ModuleVector;
    fn add(self, rhs: Self) -> ModuleVector {
        assert!(self.same_shape(rhs), "module vector shape mismatch");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        ModuleVector { desc: self.desc.clone(), entries }
    }
}

impl Sub for &ModuleVector {
    type Output = ModuleVector;
    fn sub(self, rhs: Self) -> ModuleVector {
        assert!(self.same_shape(rhs), "module vector shape mismatch");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        ModuleVector { desc: self.desc.clone(), entries }
    }
}

impl Neg for &ModuleVector {
    type Output = ModuleVector;
    fn neg(self) -> ModuleVector {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{random_element, ElementKind};
    use crate::rng::stream;
    use num_complex::Complex64;

    fn random_vector(desc: &AlgebraDesc, len: usize, rng: &mut rand_chacha::ChaCha8Rng) -> ModuleVector {
        let entries = (0..len).map(|_| random_element(desc, ElementKind::Generic, rng)).collect();
        ModuleVector::from_entries(entries).unwrap()
    }

    #[test]
    fn basis_slots_are_orthonormal() {
        let desc = AlgebraDesc::full(2).unwrap();
        let e1 = ModuleVector::basis(&desc, 4, 0).unwrap();
        let e2 = ModuleVector::basis(&desc, 4, 1).unwrap();
        assert!(e1.inner_product(&e2).unwrap().is_zero(0.0));
        assert_eq!(e1.norm(), 1.0);
    }

    #[test]
    fn inner_product_with_right_action() {
        let desc = AlgebraDesc::full(2).unwrap();
        let mut rng = stream(41, &[0]);
        let a = random_element(&desc, ElementKind::Generic, &mut rng);
        let e1 = ModuleVector::basis(&desc, 3, 0).unwrap();
        let x = e1.right_mul(&a).unwrap();
        let g = x.inner_product(&x).unwrap();
        assert!(g.approx_eq(&(&a.adjoint() * &a), 1e-12));
        // ⟨x, y·b⟩ = ⟨x,y⟩·b and conjugate symmetry
        let y = random_vector(&desc, 3, &mut rng);
        let b = random_element(&desc, ElementKind::Generic, &mut rng);
        let lhs = x.inner_product(&y.right_mul(&b).unwrap()).unwrap();
        let rhs = &x.inner_product(&y).unwrap() * &b;
        assert!(lhs.approx_eq(&rhs, 1e-10));
        let sym = y.inner_product(&x).unwrap().adjoint();
        assert!(x.inner_product(&y).unwrap().approx_eq(&sym, 1e-12));
    }

    #[test]
    fn gram_positivity_and_triangle() {
        let desc = AlgebraDesc::new(vec![2, 1]).unwrap();
        let mut rng = stream(42, &[0]);
        for _ in 0..30 {
            let x = random_vector(&desc, 4, &mut rng);
            let y = random_vector(&desc, 4, &mut rng);
            assert!(x.inner_product(&x).unwrap().is_positive());
            assert!((&x + &y).norm() <= x.norm() + y.norm() + 1e-9);
        }
    }

    #[test]
    fn abelian_two_slot_norm_against_spectral_oracle() {
        let desc = AlgebraDesc::new(vec![1, 1]).unwrap();
        let d1 = AlgebraElement::scalar_blocks(&desc, &[Complex64::new(3.0, 0.0), Complex64::new(0.0, 0.0)]).unwrap();
        let d2 = AlgebraElement::scalar_blocks(&desc, &[Complex64::new(0.0, 0.0), Complex64::new(4.0, 0.0)]).unwrap();
        let x = ModuleVector::from_entries(vec![d1, d2]).unwrap();
        // per character the norm is the l² norm of that coordinate sequence
        assert!((x.norm() - 4.0).abs() <= 1e-12);
        let g = x.inner_product(&x).unwrap();
        let top = g
            .blocks()
            .iter()
            .map(|b| b.clone().symmetric_eigen().eigenvalues.max())
            .fold(0.0, f64::max);
        assert!((top.sqrt() - 4.0).abs() <= 1e-12);
    }

    #[test]
    fn orthogonal_sum_dominates_each_part() {
        let desc = AlgebraDesc::full(2).unwrap();
        let mut rng = stream(43, &[0]);
        for _ in 0..30 {
            let mut z1 = ModuleVector::zero(&desc, 6);
            let mut z2 = ModuleVector::zero(&desc, 6);
            for j in 0..3 {
                z1.set_entry(j, random_element(&desc, ElementKind::Generic, &mut rng)).unwrap();
                z2.set_entry(3 + j, random_element(&desc, ElementKind::Generic, &mut rng)).unwrap();
            }
            let s = &z1 + &z2;
            assert!(s.norm() >= z1.norm().max(z2.norm()) - 1e-9);
        }
    }

    #[test]
    fn truncation_endpoints_and_monotone_tails() {
        let desc = AlgebraDesc::new(vec![2, 1]).unwrap();
        let mut rng = stream(44, &[0]);
        let x = random_vector(&desc, 5, &mut rng);
        assert!(x.truncate(0).unwrap().is_zero(0.0));
        assert!(x.truncate(5).unwrap().approx_eq(&x, 0.0));
        assert!(x.truncate(5).is_ok() && x.truncate(6).is_err());
        for n in 0..5 {
            let t0 = x.tail_norm(n).unwrap();
            let t1 = x.tail_norm(n + 1).unwrap();
            assert!(t1 <= t0 + 1e-12);
            assert!((x.tail(n).unwrap().norm() - t0).abs() <= 1e-12);
        }
        // truncate is idempotent
        let t = x.truncate(3).unwrap();
        assert!(t.truncate(3).unwrap().approx_eq(&t, 0.0));
    }

    #[test]
    fn flatten_round_trip() {
        let desc = AlgebraDesc::new(vec![2, 1]).unwrap();
        let mut rng = stream(45, &[0]);
        let x = random_vector(&desc, 4, &mut rng);
        let back = ModuleVector::unflatten(&desc, 4, &x.flatten()).unwrap();
        assert!(back.approx_eq(&x, 0.0));
    }
}
