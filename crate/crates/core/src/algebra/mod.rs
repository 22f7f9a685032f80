//! Finite-dimensional C*-algebras `A = ⊕ᵢ M_{kᵢ}(ℂ)` as block-diagonal
//! complex matrices: arithmetic, the C*-norm, positivity, states, and
//! randomized generation.

mod element;
mod random;
mod state;

pub use element::{AlgebraDesc, AlgebraElement};
pub use random::{random_element, random_pure_state, random_state, ElementKind};
pub use state::State;

pub(crate) use element::spectral_norm;
