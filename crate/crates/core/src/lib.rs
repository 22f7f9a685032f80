//! Noncompactness measures on truncated standard Hilbert C*-modules.
//!
//! The module `l²_N(A)` of length-`N` tuples over a finite-dimensional
//! C*-algebra `A = ⊕ᵢ M_{kᵢ}(ℂ)` carries the A-valued inner product
//! `⟨x, y⟩ = Σⱼ ξⱼ*ηⱼ`. This crate provides:
//!
//! * block-matrix arithmetic, states and randomized generation for `A`
//!   ([`algebra`]);
//! * vectors, adjointable operators, truncation projections and orthogonal
//!   projection onto finitely generated submodules ([`hilbert_module`]);
//! * an expression language for bounded subsets with certified tail-norm
//!   intervals `t_E(n) = sup_{x∈E} ‖x − Pₙx‖` ([`sets`]);
//! * tail profiles for the truncation measure of noncompactness, semi-norm
//!   families `p_{φ,y}`, covering/packing estimators for the Kuratowski,
//!   Hausdorff and Istrăţescu measures, their sup-aggregated variants, and a
//!   discrete separated-sequence witness ([`mnc`]);
//! * a seeded property suite checking the measure laws ([`suite`]);
//! * JSON instance files and report serialization for the `hmnc` CLI
//!   ([`io`]).
//!
//! All values are immutable after construction and every randomized
//! operation takes an explicit seed, so evaluation is pure and safe to run
//! concurrently.

pub mod algebra;
pub mod error;
pub mod hilbert_module;
pub mod io;
pub mod mnc;
pub mod rng;
pub mod sets;
pub mod suite;
pub mod tol;

pub use algebra::{AlgebraDesc, AlgebraElement, State};
pub use hilbert_module::{ModuleOperator, ModuleVector};
pub use sets::{BoundedSet, EvalParams, Interval, SetExpr};
pub use mnc::{
    discrete_witness, lambda_profile, make_seminorm, op_mnc, random_seminorm, seminorm_mnc_bounds,
    star_aggregate, BoundParams, DiscreteWitness, MeasureKind, MncEstimate, OpMncResult,
    OperatorMeasure, SemiNorm, StarParams, TailProfile, Validity, WitnessParams,
};
pub use error::{Error, Result};
pub use suite::{run_suite, Report, Selection, SuiteConfig};
