//! Measures of noncompactness.
//!
//! * [`TailProfile`] / [`lambda_profile`]: the decreasing profile
//!   `n ↦ t_E(n)` whose limit defines the truncation measure λ; the entry at
//!   the working horizon is an upper estimate of λ for the set's natural
//!   extension past the horizon.
//! * [`SemiNorm`]: the family `p_{φ,y}(x) = √(Σⱼ |φ(ηⱼ*ξⱼ)|²)` with the
//!   normalization `sup_j φ(ηⱼ*ηⱼ) = 1`; it generates the locally convex
//!   topology in which the covering-type measures live.
//! * [`seminorm_mnc_bounds`] / [`star_aggregate`]: per-semi-norm
//!   Kuratowski/Hausdorff/Istrăţescu estimates from greedy coverings and
//!   packings of certified member clouds, and their suprema over sampled
//!   semi-norms with certified global caps.
//! * [`discrete_witness`]: a separated discrete sequence certifying a lower
//!   bound `I* ≥ (δ² − ε)/‖E‖` from the tail profile.
//! * [`op_mnc`]: the same measures for an operator, applied to its image of
//!   the unit ball.

mod bounds;
mod cloud;
mod profile;
mod seminorm;
mod witness;

pub use bounds::{
    seminorm_mnc_bounds, star_aggregate, BoundParams, MeasureKind, MncEstimate, StarParams,
    Validity,
};
pub use cloud::{cover_eps, embed, eps_grid, pack_eps, Cloud};
pub use profile::{lambda_profile, TailProfile};
pub use seminorm::{make_seminorm, random_seminorm, SemiNorm};
pub use witness::{discrete_witness, DiscreteWitness, WitnessParams, WitnessTrace};

use crate::error::Result;
use crate::hilbert_module::ModuleOperator;
use crate::sets::{BoundedSet, SetExpr};

/// Operator measures: each is the corresponding set measure of `T(B₁)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorMeasure {
    Lambda0,
    Alpha0,
    Chi0,
    I0,
}

#[derive(Debug, Clone)]
pub enum OpMncResult {
    Profile(TailProfile),
    Estimate(MncEstimate),
}

/// Measure of noncompactness of an adjointable operator, evaluated on its
/// image of the unit ball. `Lambda0` yields the exact tail profile
/// `n ↦ ‖(I − Pₙ)T‖`; the starred measures aggregate over sampled
/// semi-norms.
pub fn op_mnc(
    op: &ModuleOperator,
    which: OperatorMeasure,
    params: &StarParams,
) -> Result<OpMncResult> {
    let image = BoundedSet::build(SetExpr::OperatorImage(op.clone()))?;
    match which {
        OperatorMeasure::Lambda0 => {
            let n_max = params.n_max.unwrap_or(op.len().saturating_sub(1));
            Ok(OpMncResult::Profile(lambda_profile(&image, n_max, &params.bound.eval)?))
        }
        OperatorMeasure::Chi0 => {
            Ok(OpMncResult::Estimate(star_aggregate(&image, MeasureKind::Chi, params)?))
        }
        OperatorMeasure::Alpha0 => {
            Ok(OpMncResult::Estimate(star_aggregate(&image, MeasureKind::Alpha, params)?))
        }
        OperatorMeasure::I0 => {
            Ok(OpMncResult::Estimate(star_aggregate(&image, MeasureKind::Istratescu, params)?))
        }
    }
}
