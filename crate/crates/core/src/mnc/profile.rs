use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::sets::{BoundedSet, EvalParams, Interval};

/// The decreasing tail profile `n ↦ t_E(n)` for `n = 0..=n_max`.
///
/// The interval at `n_max` is the `λ`-estimate: its upper endpoint is a
/// certified upper bound for the limit value of the set's extension past the
/// horizon, and its lower endpoint is witnessed by members.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TailProfile {
    values: Vec<Interval>,
}

impl TailProfile {
    pub(crate) fn from_values(values: Vec<Interval>) -> Self {
        Self { values }
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn value(&self, n: usize) -> Interval {
        self.values[n]
    }

    pub fn values(&self) -> &[Interval] {
        &self.values
    }

    /// The interval at the horizon `n_max`.
    pub fn estimate(&self) -> Interval {
        *self.values.last().expect("profiles are nonempty")
    }
}

/// Tail intervals for every `n ∈ [0, n_max]`. Upper endpoints are forced
/// non-increasing (the minimum of valid upper bounds is still valid).
pub fn lambda_profile(set: &BoundedSet, n_max: usize, params: &EvalParams) -> Result<TailProfile> {
    let mut values = Vec::with_capacity(n_max + 1);
    let mut prev_hi = f64::INFINITY;
    for n in 0..=n_max {
        let iv = set.tail_norm_with(n, params)?;
        let hi = iv.hi.min(prev_hi);
        prev_hi = hi;
        values.push(Interval::new(iv.lo.min(hi), hi));
    }
    Ok(TailProfile::from_values(values))
}
