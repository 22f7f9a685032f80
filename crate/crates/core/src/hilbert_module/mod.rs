//! The truncated standard Hilbert module `l²_N(A) = Aᴺ`: vectors with the
//! A-valued inner product `⟨x, y⟩ = Σⱼ ξⱼ*ηⱼ`, truncation projections `Pₙ`,
//! adjointable operators (N×N grids over A), operator norms via the
//! isomorphism `Bᵃ(Aᴺ) ≅ M_N(A)`, and orthogonal projection onto finitely
//! generated submodules.
//!
//! Truncation indices are 0-based: `truncate(x, n)` keeps entries `0..n`, so
//! `n = 0` yields the zero vector and `n = N` is the identity.

mod operator;
mod projection;
mod vector;

pub use operator::ModuleOperator;
pub use projection::submodule_project;
pub use vector::ModuleVector;
