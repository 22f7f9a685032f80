use serde::Serialize;

use super::profile::lambda_profile;
use super::seminorm::{make_seminorm, SemiNorm};
use crate::algebra::{random_element, AlgebraElement, ElementKind, State};
use crate::error::{Error, Result};
use crate::hilbert_module::ModuleVector;
use crate::rng::stream;
use crate::sets::{BoundedSet, EvalParams};
use crate::tol;

/// Parameters for the discrete-witness construction.
#[derive(Debug, Clone, Copy)]
pub struct WitnessParams {
    pub max_points: usize,
    /// Random draws allowed per step when structural candidates fall short.
    pub max_tries: usize,
    pub seed: u64,
    /// Right-multiply each selected point by a random unitary, exercising
    /// the balanced-set hypothesis; the default path keeps the points as
    /// found.
    pub unitary_twist: bool,
    /// Horizon used for the δ estimate; defaults to `N − 1`.
    pub n_max: Option<usize>,
    pub eval: EvalParams,
}

impl Default for WitnessParams {
    fn default() -> Self {
        Self {
            max_points: 32,
            max_tries: 2000,
            seed: 0x817e,
            unitary_twist: false,
            n_max: None,
            eval: EvalParams::default(),
        }
    }
}

/// Construction record: the constants, cut indices `kₙ`, slices
/// `zₙ = Qₙ(I − Q_{n−1})xₙ` and optional unitary twists.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessTrace {
    pub delta: f64,
    pub eps: f64,
    pub c1: f64,
    pub c2: f64,
    pub cut_indices: Vec<usize>,
    #[serde(skip)]
    pub slices: Vec<ModuleVector>,
    #[serde(skip)]
    pub twists: Option<Vec<AlgebraElement>>,
}

/// A certified separated sequence: members of the set whose pairwise
/// semi-norm distances all reach `separation ≥ target = (δ² − ε)/‖E‖`.
#[derive(Debug, Clone)]
pub struct DiscreteWitness {
    pub points: Vec<ModuleVector>,
    pub seminorm: SemiNorm,
    pub separation: f64,
    pub target: f64,
    pub trace: WitnessTrace,
}

/// Builds a discrete sequence witnessing `I*(E) ≥ (δ² − ε)/‖E‖` where `δ` is
/// the witnessed tail estimate.
///
/// Walking the tail: with `Q₀ = 0`, each step picks `xₙ ∈ E` with
/// `‖(I − Q_{n−1})xₙ‖ > C₁` (structural maximizers first, then seeded
/// sampling), cuts at the first `kₙ` where the remaining tail drops below
/// `C₂`, and keeps the slice `zₙ`. The state is chosen as a pure top
/// eigenvector state of a Gram element `⟨zₙ,zₙ⟩` — constructive in finite
/// dimensions — picked to maximize the smallest Gram value across steps; the
/// weights are the normalized slice entries. The loop ends when the tail is
/// exhausted (the horizon is finite) or `max_points` is reached, and the
/// pairwise separation of the returned points is then checked directly.
pub fn discrete_witness(
    set: &BoundedSet,
    eps: f64,
    params: &WitnessParams,
) -> Result<DiscreteWitness> {
    if !set.is_balanced() && !set.is_tail_uniform() {
        return Err(Error::InvalidParam(
            "witness needs a balanced or tail-uniform set".into(),
        ));
    }
    let len = set.len();
    let n_max = params.n_max.unwrap_or(len.saturating_sub(1));
    let delta = lambda_profile(set, n_max, &params.eval)?.estimate().lo;
    if delta <= tol::EQ_ABS {
        return Err(Error::Precompact { estimate: delta });
    }
    if !(eps > 0.0 && eps < delta * delta) {
        return Err(Error::InvalidParam(format!(
            "eps must lie in (0, δ²) = (0, {:.6e}), got {eps}",
            delta * delta
        )));
    }
    let sup = set.sup_norm_with(&params.eval)?.hi;
    let root = (delta * delta - eps / 2.0).sqrt();
    let c1 = 0.5 * (delta + root);
    let c2 = (eps / (2.0 * sup)).min(0.5 * (delta - root));

    // walk the tail
    let mut rng = stream(params.seed, &[0x817e]);
    let mut q = 0usize;
    let mut points: Vec<ModuleVector> = Vec::new();
    let mut slices: Vec<ModuleVector> = Vec::new();
    let mut cuts: Vec<usize> = Vec::new();
    while q < len && points.len() < params.max_points {
        let mut best: Option<ModuleVector> = None;
        let mut best_tail = 0.0f64;
        for cand in set.tail_maximizer_candidates(q)? {
            let t = cand.tail_norm(q)?;
            if t > best_tail {
                best_tail = t;
                best = Some(cand);
            }
        }
        if best_tail <= c1 {
            for _ in 0..params.max_tries {
                let s = set.sample(&mut rng);
                let t = s.tail_norm(q)?;
                if t > best_tail {
                    best_tail = t;
                    best = Some(s);
                }
                if best_tail > c1 {
                    break;
                }
            }
        }
        if best_tail <= c1 {
            if set.tail_norm_with(q, &params.eval)?.hi <= c1 {
                break; // tail exhausted
            }
            return Err(Error::WitnessSearch(format!(
                "no member with tail above C₁ = {c1:.6e} found beyond slot {q} \
                 after {} draws (best {best_tail:.6e})",
                params.max_tries
            )));
        }
        let x = best.expect("best_tail > 0 implies a member was kept");
        let w = x.tail(q)?;
        let mut cut = len;
        for k in (q + 1)..=len {
            if w.tail_norm(k)? < c2 {
                cut = k;
                break;
            }
        }
        slices.push(w.truncate(cut)?);
        cuts.push(cut);
        points.push(x);
        q = cut;
    }
    if points.len() < 2 {
        return Err(Error::WitnessSearch(format!(
            "only {} separated point(s) fit below the horizon {len}; \
             C₂ = {c2:.6e} leaves no room for a second cut",
            points.len()
        )));
    }

    let twists: Option<Vec<AlgebraElement>> = if params.unitary_twist {
        Some(
            (0..points.len())
                .map(|n| {
                    let mut trng = stream(params.seed, &[0x7157, n as u64]);
                    random_element(set.desc(), ElementKind::Unitary, &mut trng)
                })
                .collect(),
        )
    } else {
        None
    };

    // Gram elements of the (possibly twisted) slices
    let grams: Vec<AlgebraElement> = slices
        .iter()
        .enumerate()
        .map(|(n, z)| {
            let zt = match &twists {
                Some(ts) => z.right_mul(&ts[n])?,
                None => z.clone(),
            };
            zt.inner_product(&zt)
        })
        .collect::<Result<Vec<_>>>()?;

    // pure state maximizing the smallest Gram value across steps
    let mut phi: Option<(State, f64)> = None;
    for g in &grams {
        let cand = State::top_eigenvector(g)?;
        let worst = grams
            .iter()
            .map(|h| cand.eval_raw(h).re)
            .fold(f64::INFINITY, f64::min);
        if phi.as_ref().map_or(true, |(_, w)| worst > *w) {
            phi = Some((cand, worst));
        }
    }
    let (phi, _) = phi.expect("at least two slices exist");

    // normalized weights over each slice window
    let mut weights = vec![AlgebraElement::zero(set.desc()); len];
    let mut lo = 0usize;
    for (n, z) in slices.iter().enumerate() {
        for j in lo..cuts[n] {
            let zeta = z.entry(j);
            let g = match &twists {
                Some(ts) => zeta * &ts[n],
                None => zeta.clone(),
            };
            let d = phi.eval_raw(&(&g.adjoint() * &g)).re;
            if d > tol::TINY {
                weights[j] = g.scale_re(1.0 / d.sqrt());
            }
        }
        lo = cuts[n];
    }
    let seminorm = make_seminorm(phi, weights)?;

    let final_points: Vec<ModuleVector> = match &twists {
        Some(ts) => points
            .iter()
            .zip(ts)
            .map(|(x, u)| x.right_mul(u))
            .collect::<Result<Vec<_>>>()?,
        None => points.clone(),
    };
    let mut separation = f64::INFINITY;
    for i in 0..final_points.len() {
        for j in 0..i {
            separation = separation.min(seminorm.eval(&(&final_points[i] - &final_points[j]))?);
        }
    }
    let target = (delta * delta - eps) / sup;
    if separation + 1e-9 < target {
        return Err(Error::WitnessSearch(format!(
            "pairwise separation {separation:.6e} misses the target {target:.6e}"
        )));
    }
    Ok(DiscreteWitness {
        points: final_points,
        seminorm,
        separation,
        target,
        trace: WitnessTrace { delta, eps, c1, c2, cut_indices: cuts, slices, twists },
    })
}
