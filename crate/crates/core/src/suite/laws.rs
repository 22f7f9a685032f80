//! Law registry and implementations.
//!
//! Every law draws its cases from seeded streams derived from the master
//! seed and the law id, so a failure is replayable from the recorded case
//! seed. Inequality checks record the margin `lhs − rhs`; a law passes when
//! the worst margin stays within its pinned slack.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::generators::{
    golden_splitting_set, random_expr, random_finite, random_operator, random_vector,
};
use super::report::{fmt_sig, ExplorationRecord, LawRecord};
use super::SuiteConfig;
use crate::algebra::{random_element, random_state, AlgebraDesc, ElementKind};
use crate::hilbert_module::{submodule_project, ModuleOperator, ModuleVector};
use crate::mnc::{
    discrete_witness, embed, eps_grid, lambda_profile, pack_eps, random_seminorm,
    seminorm_mnc_bounds, star_aggregate, BoundParams, MeasureKind, StarParams, Validity,
    WitnessParams,
};
use crate::rng::{derive, stream, tag};
use crate::sets::{BoundedSet, SetExpr};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) enum Tier {
    Core,
    Seminorm,
    Operator,
    Witness,
}

pub(super) struct LawDef {
    pub id: &'static str,
    pub tier: Tier,
    pub slack: f64,
    pub statement: &'static str,
    pub run: fn(&SuiteConfig, &mut LawRecord),
}

/// One generated case: a seeded stream plus failure plumbing.
struct Case<'a> {
    rng: ChaCha8Rng,
    rec: &'a mut LawRecord,
    index: usize,
    seed: u64,
}

impl Case<'_> {
    /// Check `lhs ≤ rhs + slack`, recording the margin.
    fn le(&mut self, lhs: f64, rhs: f64, what: &str) {
        let margin = lhs - rhs;
        self.rec.observe(margin);
        if margin > self.rec.allowed_slack {
            let msg = format!("{what}: {} > {} + {:.1e}", fmt_sig(lhs), fmt_sig(rhs), self.rec.allowed_slack);
            self.rec.fail(self.index, self.seed, msg);
        }
    }

    /// Check `|a − b| ≤ slack`.
    fn eq(&mut self, a: f64, b: f64, what: &str) {
        let margin = (a - b).abs();
        self.rec.observe(margin);
        if margin > self.rec.allowed_slack {
            let msg = format!("{what}: |{} - {}| > {:.1e}", fmt_sig(a), fmt_sig(b), self.rec.allowed_slack);
            self.rec.fail(self.index, self.seed, msg);
        }
    }

    fn assert_true(&mut self, ok: bool, what: &str) {
        if !ok {
            self.rec.fail(self.index, self.seed, what.to_string());
        }
    }
}

fn for_cases(cfg: &SuiteConfig, rec: &mut LawRecord, count: usize, mut f: impl FnMut(&mut Case)) {
    for index in 0..count {
        let seed = derive(cfg.seed, &[tag(&rec.id), index as u64]);
        let rng = stream(seed, &[]);
        let mut case = Case { rng, rec, index, seed };
        f(&mut case);
        case.rec.cases += 1;
    }
}

fn pick_desc(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> AlgebraDesc {
    cfg.algebras[rng.random_range(0..cfg.algebras.len())].clone()
}

fn pick_len(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> usize {
    cfg.lengths[rng.random_range(0..cfg.lengths.len())]
}

fn pick_set(cfg: &SuiteConfig, rng: &mut ChaCha8Rng, depth: usize) -> BoundedSet {
    let desc = pick_desc(cfg, rng);
    let len = pick_len(cfg, rng);
    BoundedSet::build(random_expr(&desc, len, depth, false, rng)).expect("generator is valid")
}

fn suite_star_params(cfg: &SuiteConfig, case_seed: u64) -> StarParams {
    StarParams {
        bound: BoundParams {
            samples: 160,
            max_centers: 12,
            min_pack: 6,
            seed: case_seed,
            eval: cfg.eval,
            ..BoundParams::default()
        },
        seminorms: 6,
        n_max: None,
    }
}

// ---------------------------------------------------------------- algebra

fn law_cstar_identity(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.core, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let a = random_element(&desc, ElementKind::Generic, &mut case.rng);
        let n = a.norm();
        let scale = (n * n).max(1.0);
        case.le(
            ((&a.adjoint() * &a).norm() - n * n).abs() / scale,
            0.0,
            "relative C*-identity defect",
        );
    });
}

fn law_submultiplicative(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.core, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let a = random_element(&desc, ElementKind::Generic, &mut case.rng);
        let b = random_element(&desc, ElementKind::Generic, &mut case.rng);
        case.le((&a * &b).norm(), a.norm() * b.norm(), "norm of a product");
    });
}

fn law_state_positivity(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.core, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let phi = random_state(&desc, &mut case.rng);
        let a = random_element(&desc, ElementKind::Positive, &mut case.rng);
        let v = phi.eval(&a).expect("same desc");
        case.le(v.im.abs(), 0.0, "imaginary part on a positive element");
        case.le(-v.re, 0.0, "negativity on a positive element");
    });
}

fn law_state_conjugation(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.core, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let phi = random_state(&desc, &mut case.rng);
        let u = random_element(&desc, ElementKind::Unitary, &mut case.rng);
        let a = random_element(&desc, ElementKind::Generic, &mut case.rng);
        let phi_u = phi.conjugate(&u).expect("unitary");
        let direct = phi.eval(&(&(&u.adjoint() * &a) * &u)).expect("same desc");
        case.eq((phi_u.eval(&a).expect("same desc") - direct).norm(), 0.0, "conjugation identity");
        let back = phi_u.conjugate(&u.adjoint()).expect("unitary");
        case.eq(
            (back.eval(&a).expect("same desc") - phi.eval(&a).expect("same desc")).norm(),
            0.0,
            "conjugation round trip",
        );
    });
}

fn law_state_cauchy_schwarz(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.core, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let phi = random_state(&desc, &mut case.rng);
        let a = random_element(&desc, ElementKind::Generic, &mut case.rng);
        let b = random_element(&desc, ElementKind::Generic, &mut case.rng);
        let lhs = phi.eval(&(&b.adjoint() * &a)).expect("same desc").norm_sqr();
        let rhs = phi.eval(&(&b.adjoint() * &b)).expect("same desc").re
            * phi.eval(&(&a.adjoint() * &a)).expect("same desc").re;
        case.le(lhs, rhs, "Cauchy-Schwarz for the state pairing");
    });
}

// ----------------------------------------------------------------- module

fn law_orthogonal_lower(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.core, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let split = case.rng.random_range(1..len);
        let mut z1 = ModuleVector::zero(&desc, len);
        let mut z2 = ModuleVector::zero(&desc, len);
        for j in 0..split {
            z1.set_entry(j, random_element(&desc, ElementKind::Generic, &mut case.rng)).expect("desc");
        }
        for j in split..len {
            z2.set_entry(j, random_element(&desc, ElementKind::Generic, &mut case.rng)).expect("desc");
        }
        case.le(z1.norm().max(z2.norm()), (&z1 + &z2).norm(), "orthogonal sum lower bound");
    });
}

fn law_projection_minimality(cfg: &SuiteConfig, rec: &mut LawRecord) {
    let count = cfg.counts.core.min(60); // each case samples many members
    for_cases(cfg, rec, count, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let gens: Vec<ModuleVector> =
            (0..case.rng.random_range(1..=2usize)).map(|_| random_vector(&desc, len, &mut case.rng)).collect();
        let x = random_vector(&desc, len, &mut case.rng);
        let (proj, d) = submodule_project(&x, &gens).expect("valid input");
        for _ in 0..50 {
            let y = gens.iter().fold(ModuleVector::zero(&desc, len), |acc, g| {
                let b = random_element(&desc, ElementKind::Generic, &mut case.rng);
                &acc + &g.right_mul(&b).expect("desc")
            });
            case.le(d, (&x - &y).norm(), "distance minimality over the submodule");
        }
        // distance to the span of leading basis slots is the tail norm
        let n = case.rng.random_range(1..len);
        let slot_gens: Vec<ModuleVector> =
            (0..n).map(|s| ModuleVector::basis(&desc, len, s).expect("slot")).collect();
        let (slot_proj, slot_d) = submodule_project(&x, &slot_gens).expect("valid input");
        case.eq(slot_d, x.tail_norm(n).expect("range"), "distance to the truncation range");
        case.le(
            (&slot_proj - &x.truncate(n).expect("range")).norm(),
            0.0,
            "projection onto the truncation range",
        );
        let _ = proj;
    });
}

fn law_vec_tail_monotone(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.core, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let x = random_vector(&desc, len, &mut case.rng);
        for n in 0..len {
            case.le(
                x.tail_norm(n + 1).expect("range"),
                x.tail_norm(n).expect("range"),
                "tail norms decrease",
            );
        }
    });
}

// ------------------------------------------------------------------- sets

fn law_profile_monotone(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.core, |case| {
        let set = pick_set(cfg, &mut case.rng, 2);
        let mut prev = f64::INFINITY;
        for n in 0..=set.len() {
            let iv = set.tail_norm_with(n, &cfg.eval).expect("range");
            case.le(iv.hi, prev, "upper tail bounds decrease");
            case.le(iv.lo, iv.hi, "lower stays below upper");
            prev = iv.hi;
        }
    });
}

fn law_union_max(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.core, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let e = random_expr(&desc, len, 1, false, &mut case.rng);
        let f = random_expr(&desc, len, 1, false, &mut case.rng);
        let union = BoundedSet::build(e.clone().union(f.clone())).expect("valid");
        let es = BoundedSet::build(e).expect("valid");
        let fs = BoundedSet::build(f).expect("valid");
        for n in 0..len {
            let u = union.tail_norm_with(n, &cfg.eval).expect("range");
            let a = es.tail_norm_with(n, &cfg.eval).expect("range");
            let b = fs.tail_norm_with(n, &cfg.eval).expect("range");
            case.eq(u.hi, a.hi.max(b.hi), "union upper bound is the exact max");
            case.eq(u.lo, a.lo.max(b.lo), "union lower bound is the exact max");
        }
    });
}

fn law_subset_monotone(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.core, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let e = random_expr(&desc, len, 1, false, &mut case.rng);
        let g = random_expr(&desc, len, 1, false, &mut case.rng);
        let es = BoundedSet::build(e.clone()).expect("valid");
        let fs = BoundedSet::build(e.union(g)).expect("valid");
        for n in 0..len {
            case.le(
                es.tail_norm_with(n, &cfg.eval).expect("range").hi,
                fs.tail_norm_with(n, &cfg.eval).expect("range").hi,
                "subset upper bounds are dominated",
            );
        }
    });
}

fn law_sum_subadditive(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.core, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let e = random_expr(&desc, len, 1, false, &mut case.rng);
        let f = random_expr(&desc, len, 1, false, &mut case.rng);
        let sum = BoundedSet::build(e.clone().sum(f.clone())).expect("valid");
        let es = BoundedSet::build(e).expect("valid");
        let fs = BoundedSet::build(f).expect("valid");
        for n in 0..len {
            case.le(
                sum.tail_norm_with(n, &cfg.eval).expect("range").hi,
                es.tail_norm_with(n, &cfg.eval).expect("range").hi
                    + fs.tail_norm_with(n, &cfg.eval).expect("range").hi,
                "sum upper bounds are subadditive",
            );
        }
    });
}

fn law_rightmul_bounds(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.core, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let e = random_expr(&desc, len, 1, true, &mut case.rng);
        let es = BoundedSet::build(e.clone()).expect("valid");
        let a = random_element(&desc, ElementKind::Generic, &mut case.rng);
        let ea = BoundedSet::build(e.clone().right_mul(a.clone())).expect("valid");
        let u = random_element(&desc, ElementKind::Unitary, &mut case.rng);
        let eu = BoundedSet::build(e.right_mul(u)).expect("valid");
        for n in 0..len {
            let base = es.tail_norm_with(n, &cfg.eval).expect("range");
            let scaled = ea.tail_norm_with(n, &cfg.eval).expect("range");
            case.le(scaled.hi, base.hi * a.norm(), "right factor scales the upper bound");
            if let Ok(inv) = a.try_inverse() {
                case.le(base.hi, scaled.hi * inv.norm(), "invertible factor bounds below");
            }
            let rotated = eu.tail_norm_with(n, &cfg.eval).expect("range");
            case.eq(rotated.hi, base.hi, "unitary factor preserves the upper bound");
        }
    });
}

fn law_convex_hull_invariant(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.core, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let e = random_expr(&desc, len, 1, false, &mut case.rng);
        let es = BoundedSet::build(e.clone()).expect("valid");
        let hull = BoundedSet::build(e.convex_hull()).expect("valid");
        for n in 0..=len {
            let a = es.tail_norm_with(n, &cfg.eval).expect("range");
            let b = hull.tail_norm_with(n, &cfg.eval).expect("range");
            case.eq(a.hi, b.hi, "convex hull keeps the upper bound");
            case.eq(a.lo, b.lo, "convex hull keeps the lower bound");
        }
    });
}

fn law_balanced_hull_invariant(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.core, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let e = random_expr(&desc, len, 1, false, &mut case.rng);
        let es = BoundedSet::build(e.clone()).expect("valid");
        let hull = BoundedSet::build(e.balanced_hull()).expect("valid");
        for n in 0..=len {
            let a = es.tail_norm_with(n, &cfg.eval).expect("range");
            let b = hull.tail_norm_with(n, &cfg.eval).expect("range");
            case.eq(a.hi, b.hi, "balanced hull keeps the upper bound");
            case.eq(a.lo, b.lo, "balanced hull keeps the lower bound");
        }
    });
}

fn law_enlargement_additive(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.core, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let f = random_expr(&desc, len, 1, false, &mut case.rng);
        let delta: f64 = case.rng.random_range(0.0..1.5);
        let fs = BoundedSet::build(f.clone()).expect("valid");
        let enlarged = BoundedSet::build(
            f.sum(SetExpr::unit_ball(&desc, len).scale(delta)),
        )
        .expect("valid");
        for n in 0..len {
            case.le(
                enlarged.tail_norm_with(n, &cfg.eval).expect("range").hi,
                fs.tail_norm_with(n, &cfg.eval).expect("range").hi + delta,
                "ball enlargement adds at most its radius",
            );
        }
    });
}

fn law_hausdorff_lipschitz(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.core, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let a: Vec<ModuleVector> =
            (0..case.rng.random_range(1..=4usize)).map(|_| random_vector(&desc, len, &mut case.rng)).collect();
        let b: Vec<ModuleVector> =
            (0..case.rng.random_range(1..=4usize)).map(|_| random_vector(&desc, len, &mut case.rng)).collect();
        let d = crate::sets::hausdorff(&a, &b).expect("nonempty");
        let sa = BoundedSet::build(SetExpr::points(a)).expect("valid");
        let sb = BoundedSet::build(SetExpr::points(b)).expect("valid");
        for n in 0..len {
            let ta = sa.tail_norm_with(n, &cfg.eval).expect("range").hi;
            let tb = sb.tail_norm_with(n, &cfg.eval).expect("range").hi;
            case.le((ta - tb).abs(), d, "tail values are 1-Lipschitz in Hausdorff distance");
        }
    });
}

fn law_sup_norm_cap(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.core, |case| {
        let set = pick_set(cfg, &mut case.rng, 2);
        let sup = set.sup_norm_with(&cfg.eval).expect("range");
        for n in 0..set.len() {
            case.le(
                set.tail_norm_with(n, &cfg.eval).expect("range").hi,
                sup.hi,
                "tail bounds stay below the sup norm",
            );
        }
    });
}

fn law_adjoin_supported_point(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.core, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let e = random_expr(&desc, len, 1, false, &mut case.rng);
        let m = case.rng.random_range(1..=len);
        let pt = random_vector(&desc, len, &mut case.rng).truncate(m).expect("range");
        let es = BoundedSet::build(e.clone()).expect("valid");
        let adjoined = BoundedSet::build(e.union(SetExpr::points(vec![pt]))).expect("valid");
        for n in m..=len {
            let a = es.tail_norm_with(n, &cfg.eval).expect("range");
            let b = adjoined.tail_norm_with(n, &cfg.eval).expect("range");
            case.eq(a.hi, b.hi, "adjoining a supported point keeps the upper bound");
            case.eq(a.lo, b.lo, "adjoining a supported point keeps the lower bound");
        }
    });
}

fn law_intersect_upper(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.core, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let shared: Vec<ModuleVector> =
            (0..case.rng.random_range(1..=2usize)).map(|_| random_vector(&desc, len, &mut case.rng)).collect();
        let mut left = shared.clone();
        left.push(random_vector(&desc, len, &mut case.rng));
        let mut right = shared;
        right.push(random_vector(&desc, len, &mut case.rng));
        let ls = BoundedSet::build(SetExpr::points(left.clone())).expect("valid");
        let rs = BoundedSet::build(SetExpr::points(right.clone())).expect("valid");
        let both = BoundedSet::build(SetExpr::IntersectFinite(
            Box::new(SetExpr::points(left)),
            Box::new(SetExpr::points(right)),
        ))
        .expect("valid");
        for n in 0..len {
            case.le(
                both.tail_norm_with(n, &cfg.eval).expect("range").hi,
                ls.tail_norm_with(n, &cfg.eval)
                    .expect("range")
                    .hi
                    .min(rs.tail_norm_with(n, &cfg.eval).expect("range").hi),
                "intersection bounds below both operands",
            );
        }
    });
}

fn law_unit_ball_tail(cfg: &SuiteConfig, rec: &mut LawRecord) {
    let algebras = cfg.algebras.clone();
    let lengths = cfg.lengths.clone();
    for_cases(cfg, rec, algebras.len() * lengths.len(), |case| {
        let desc = &algebras[case.index % algebras.len()];
        let len = lengths[case.index / algebras.len()];
        let ball = BoundedSet::build(SetExpr::unit_ball(desc, len)).expect("valid");
        let profile = lambda_profile(&ball, len - 1, &cfg.eval).expect("range");
        for n in 0..len {
            case.eq(profile.value(n).lo, 1.0, "unit ball lower value");
            case.eq(profile.value(n).hi, 1.0, "unit ball upper value");
        }
    });
}

fn law_splitting_golden(cfg: &SuiteConfig, rec: &mut LawRecord) {
    let lengths = cfg.lengths.clone();
    for_cases(cfg, rec, lengths.len(), |case| {
        let len = lengths[case.index];
        let (set, p) = golden_splitting_set(len);
        let profile = lambda_profile(&set, len - 1, &cfg.eval).expect("range");
        case.eq(profile.estimate().lo, 2.0, "splitting set tail value");
        let pushed = set.pushed_right(&p).expect("same algebra");
        let pushed_profile = lambda_profile(&pushed, len - 1, &cfg.eval).expect("range");
        case.eq(pushed_profile.estimate().lo, 1.0, "translated tail value");
        // strict drop: the translate loses noncompactness against ‖p‖ = 1
        case.assert_true(
            pushed_profile.estimate().lo < profile.estimate().lo * p.norm() - 0.5,
            "strict inequality under right multiplication",
        );
    });
}

fn law_sample_soundness(cfg: &SuiteConfig, rec: &mut LawRecord) {
    let count = cfg.counts.core.min(60);
    for_cases(cfg, rec, count, |case| {
        let set = pick_set(cfg, &mut case.rng, 2);
        for n in 0..=set.len() {
            let iv = set.tail_norm_with(n, &cfg.eval).expect("range");
            case.le(iv.lo, iv.hi, "refined lower stays below upper");
            for _ in 0..40 {
                let s = set.sample(&mut case.rng);
                case.le(s.tail_norm(n).expect("range"), iv.hi, "sampled member tails are covered");
            }
        }
    });
}

fn law_exactness_classes(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.core, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let set =
            BoundedSet::build(random_expr(&desc, len, 2, true, &mut case.rng)).expect("valid");
        for n in 0..=len {
            let iv = set.tail_norm_with(n, &cfg.eval).expect("range");
            case.eq(iv.lo, iv.hi, "exact constructors return degenerate intervals");
        }
    });
}

// -------------------------------------------------------------- seminorms

fn law_seminorm_normalized(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.seminorm, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let p = random_seminorm(&desc, len, &mut case.rng);
        case.le(p.normalization_defect(), 0.0, "weight normalization");
    });
}

fn law_seminorm_domination(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.seminorm, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let p = random_seminorm(&desc, len, &mut case.rng);
        for _ in 0..50 {
            let x = random_vector(&desc, len, &mut case.rng);
            case.le(p.eval(&x).expect("shape"), x.norm(), "semi-norms are dominated by the norm");
        }
    });
}

fn law_seminorm_triangle(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.seminorm, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let p = random_seminorm(&desc, len, &mut case.rng);
        for _ in 0..20 {
            let x = random_vector(&desc, len, &mut case.rng);
            let y = random_vector(&desc, len, &mut case.rng);
            case.le(
                p.eval(&(&x + &y)).expect("shape"),
                p.eval(&x).expect("shape") + p.eval(&y).expect("shape"),
                "triangle inequality",
            );
            let c = case.rng.random_range(0.0..2.0);
            case.eq(
                p.eval(&x.scale_re(c)).expect("shape"),
                c * p.eval(&x).expect("shape"),
                "absolute homogeneity",
            );
        }
    });
}

fn law_transform_identity(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.seminorm, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let p = random_seminorm(&desc, len, &mut case.rng);
        let u = random_element(&desc, ElementKind::Unitary, &mut case.rng);
        let q = p.transform(&u).expect("unitary");
        case.le(q.normalization_defect(), 0.0, "transformed normalization");
        for _ in 0..20 {
            let x = random_vector(&desc, len, &mut case.rng);
            case.eq(
                p.eval(&x.right_mul(&u).expect("desc")).expect("shape"),
                q.eval(&x).expect("shape"),
                "transform identity",
            );
        }
    });
}

fn law_transform_roundtrip(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.seminorm, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let p = random_seminorm(&desc, len, &mut case.rng);
        let u = random_element(&desc, ElementKind::Unitary, &mut case.rng);
        let back = p.transform(&u).expect("unitary").transform(&u.adjoint()).expect("unitary");
        for _ in 0..10 {
            let x = random_vector(&desc, len, &mut case.rng);
            case.eq(
                back.eval(&x).expect("shape"),
                p.eval(&x).expect("shape"),
                "transform round trip",
            );
        }
    });
}

fn law_chi_star_cap(cfg: &SuiteConfig, rec: &mut LawRecord) {
    let count = cfg.counts.seminorm.min(30);
    for_cases(cfg, rec, count, |case| {
        let set = pick_set(cfg, &mut case.rng, 1);
        let params = suite_star_params(cfg, case.seed);
        let lambda_hi =
            lambda_profile(&set, set.len() - 1, &cfg.eval).expect("range").estimate().hi;
        // per-semi-norm lower bounds stay below the tail estimate
        let p = random_seminorm(set.desc(), set.len(), &mut case.rng);
        let chi = seminorm_mnc_bounds(&set, &p, MeasureKind::Chi, &params.bound).expect("valid");
        case.le(chi.lower, lambda_hi, "per-semi-norm lower bound against the tail estimate");
        // and so does the aggregated bound
        let star = star_aggregate(&set, MeasureKind::Chi, &params).expect("valid");
        case.le(star.lower, lambda_hi, "aggregated lower bound against the tail estimate");
        case.le(star.upper, lambda_hi, "cap equals the tail estimate");
    });
}

fn law_chain_bracket(cfg: &SuiteConfig, rec: &mut LawRecord) {
    let count = cfg.counts.seminorm.min(30);
    for_cases(cfg, rec, count, |case| {
        let set = pick_set(cfg, &mut case.rng, 1);
        let params = suite_star_params(cfg, case.seed);
        let p = random_seminorm(set.desc(), set.len(), &mut case.rng);
        let chi = seminorm_mnc_bounds(&set, &p, MeasureKind::Chi, &params.bound).expect("valid");
        let ist =
            seminorm_mnc_bounds(&set, &p, MeasureKind::Istratescu, &params.bound).expect("valid");
        let alp = seminorm_mnc_bounds(&set, &p, MeasureKind::Alpha, &params.bound).expect("valid");
        case.le(chi.lower, chi.upper, "chi bound order");
        case.le(ist.lower, ist.upper, "istratescu bound order");
        case.le(alp.lower, alp.upper, "alpha bound order");
        case.le(chi.lower, ist.upper, "chi below istratescu");
        case.le(ist.lower, alp.upper, "istratescu below alpha");
        case.le(alp.upper, 2.0 * chi.upper, "alpha within twice chi");
    });
}

fn law_star_finite_zero(cfg: &SuiteConfig, rec: &mut LawRecord) {
    let count = cfg.counts.seminorm.min(20);
    for_cases(cfg, rec, count, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let inner = random_finite(&desc, len, 2, &mut case.rng);
        let outer = inner.clone().union(random_finite(&desc, len, 2, &mut case.rng));
        let params = suite_star_params(cfg, case.seed);
        for kind in [MeasureKind::Alpha, MeasureKind::Chi, MeasureKind::Istratescu] {
            let small = star_aggregate(&BoundedSet::build(inner.clone()).expect("valid"), kind, &params)
                .expect("valid");
            let large = star_aggregate(&BoundedSet::build(outer.clone()).expect("valid"), kind, &params)
                .expect("valid");
            case.eq(small.lower, 0.0, "finite sets have zero lower bound");
            case.eq(small.upper, 0.0, "finite sets have zero upper bound");
            case.assert_true(
                matches!(small.validity, Validity::Certified),
                "finite-set zero is certified",
            );
            case.le(small.lower, large.lower, "monotone under subsets");
            case.le(small.upper, large.upper, "monotone under subsets");
        }
        // a duplicated point list denotes the same (closed) set
        if let SetExpr::Finite(pts) = &inner {
            let mut doubled = pts.clone();
            doubled.extend(pts.clone());
            let dup = star_aggregate(
                &BoundedSet::build(SetExpr::points(doubled)).expect("valid"),
                MeasureKind::Chi,
                &params,
            )
            .expect("valid");
            case.eq(dup.lower, 0.0, "duplicates change nothing");
            case.eq(dup.upper, 0.0, "duplicates change nothing");
        }
    });
}

fn law_star_monotone_budget(cfg: &SuiteConfig, rec: &mut LawRecord) {
    let count = cfg.counts.seminorm.min(12);
    for_cases(cfg, rec, count, |case| {
        let set = pick_set(cfg, &mut case.rng, 1);
        let mut params = suite_star_params(cfg, case.seed);
        params.seminorms = 2;
        let small = star_aggregate(&set, MeasureKind::Istratescu, &params).expect("valid");
        params.seminorms = 6;
        let large = star_aggregate(&set, MeasureKind::Istratescu, &params).expect("valid");
        case.le(small.lower, large.lower, "aggregated lower bound grows with the budget");
        case.eq(small.upper, large.upper, "the certified cap is budget-independent");
    });
}

fn law_estimate_transform(cfg: &SuiteConfig, rec: &mut LawRecord) {
    let count = cfg.counts.seminorm.min(25);
    for_cases(cfg, rec, count, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let pts: Vec<ModuleVector> =
            (0..case.rng.random_range(2..=4usize)).map(|_| random_vector(&desc, len, &mut case.rng)).collect();
        let u = random_element(&desc, ElementKind::Unitary, &mut case.rng);
        let p = random_seminorm(&desc, len, &mut case.rng);
        let q = p.transform(&u).expect("unitary");
        // feature identity: p-features of x·u equal q-features of x
        let rotated: Vec<ModuleVector> =
            pts.iter().map(|x| x.right_mul(&u).expect("desc")).collect();
        let cloud_p = embed(&rotated, &p).expect("shapes");
        let cloud_q = embed(&pts, &q).expect("shapes");
        for i in 0..pts.len() {
            for j in 0..i {
                case.eq(cloud_p.dist(i, j), cloud_q.dist(i, j), "pairwise distances transform");
            }
            case.eq(cloud_p.point_norm(i), cloud_q.point_norm(i), "point values transform");
        }
        // identical covering/packing outcomes on the matched clouds
        let grid = eps_grid(1.0, 1e-3, 2.0, 1.1);
        let pe = pack_eps(&cloud_p, &grid, 2).unwrap_or(0.0);
        let qe = pack_eps(&cloud_q, &grid, 2).unwrap_or(0.0);
        case.eq(pe, qe, "packing outcomes transform");
        // estimator agreement on the finite sets themselves
        let params = suite_star_params(cfg, case.seed);
        let left = seminorm_mnc_bounds(
            &BoundedSet::build(SetExpr::points(rotated)).expect("valid"),
            &p,
            MeasureKind::Chi,
            &params.bound,
        )
        .expect("valid");
        let right = seminorm_mnc_bounds(
            &BoundedSet::build(SetExpr::points(pts)).expect("valid"),
            &q,
            MeasureKind::Chi,
            &params.bound,
        )
        .expect("valid");
        case.eq(left.lower, right.lower, "estimates agree on rotated finite sets");
        case.eq(left.upper, right.upper, "estimates agree on rotated finite sets");
    });
}

// ---------------------------------------------------------------- witness

fn witness_case(cfg: &SuiteConfig, case: &mut Case) -> Option<(BoundedSet, f64)> {
    let r: f64 = case.rng.random_range(0.5..2.0);
    let set = if case.rng.random_range(0..4u8) == 0 {
        golden_splitting_set(pick_len(cfg, &mut case.rng)).0
    } else {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        BoundedSet::build(SetExpr::unit_ball(&desc, len).scale(r)).expect("valid")
    };
    let delta = lambda_profile(&set, set.len() - 1, &cfg.eval).ok()?.estimate().lo;
    if delta <= 1e-9 {
        return None;
    }
    let frac: f64 = case.rng.random_range(0.05..0.8);
    Some((set, frac * delta * delta))
}

fn law_witness_separation(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.witness, |case| {
        let Some((set, eps)) = witness_case(cfg, case) else { return };
        let params = WitnessParams { seed: case.seed, eval: cfg.eval, ..WitnessParams::default() };
        let w = discrete_witness(&set, eps, &params).expect("witness exists on these sets");
        case.le(w.target, w.separation, "separation reaches the target");
        let mut brute = f64::INFINITY;
        for i in 0..w.points.len() {
            for j in 0..i {
                brute = brute.min(w.seminorm.eval(&(&w.points[i] - &w.points[j])).expect("shape"));
            }
        }
        case.eq(brute, w.separation, "stored separation matches the pairwise recheck");
        let sup = set.sup_norm_with(&cfg.eval).expect("range").hi;
        for x in &w.points {
            case.le(x.norm(), sup, "witness points respect the sup norm");
        }
    });
}

fn law_witness_certificate(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.witness, |case| {
        let Some((set, eps)) = witness_case(cfg, case) else { return };
        let params = WitnessParams { seed: case.seed, eval: cfg.eval, ..WitnessParams::default() };
        let w = discrete_witness(&set, eps, &params).expect("witness exists on these sets");
        let sup = set.sup_norm_with(&cfg.eval).expect("range").hi;
        let delta = w.trace.delta;
        case.le(
            delta * delta,
            sup * w.separation + eps,
            "tail estimate squared against the witnessed separation",
        );
    });
}

fn law_witness_seminorm_valid(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.witness, |case| {
        let Some((set, eps)) = witness_case(cfg, case) else { return };
        let twist = case.rng.random::<bool>();
        let params = WitnessParams {
            seed: case.seed,
            eval: cfg.eval,
            unitary_twist: twist,
            ..WitnessParams::default()
        };
        let w = discrete_witness(&set, eps, &params).expect("witness exists on these sets");
        case.le(w.seminorm.normalization_defect(), 0.0, "witness semi-norm is normalized");
        for x in &w.points {
            case.le(
                w.seminorm.eval(x).expect("shape"),
                x.norm(),
                "witness semi-norm is dominated",
            );
        }
    });
}

// --------------------------------------------------------------- operator

fn law_adjoint_pairing(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.operator, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let t = random_operator(&desc, len, &mut case.rng);
        let x = random_vector(&desc, len, &mut case.rng);
        let y = random_vector(&desc, len, &mut case.rng);
        let lhs = t.apply(&x).expect("shape").inner_product(&y).expect("shape");
        let rhs = x.inner_product(&t.adjoint().apply(&y).expect("shape")).expect("shape");
        case.le((&lhs - &rhs).norm(), 0.0, "adjoint pairing");
    });
}

fn law_opnorm_cstar(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.operator, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let t = random_operator(&desc, len, &mut case.rng);
        let n = t.norm();
        let tt = t.adjoint().compose(&t).expect("shape");
        case.le((tt.norm() - n * n).abs() / (n * n).max(1.0), 0.0, "operator C*-identity");
    });
}

fn law_opnorm_cap(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.operator, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let t = random_operator(&desc, len, &mut case.rng);
        let image = BoundedSet::build(SetExpr::OperatorImage(t.clone())).expect("valid");
        let profile = lambda_profile(&image, len - 1, &cfg.eval).expect("range");
        case.le(profile.estimate().hi, t.norm(), "tail estimate below the operator norm");
    });
}

fn law_tail_opnorm_monotone(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.operator, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let t = random_operator(&desc, len, &mut case.rng);
        for n in 0..len {
            case.le(
                t.tail_norm(n + 1).expect("range"),
                t.tail_norm(n).expect("range"),
                "operator tail norms decrease",
            );
        }
        case.eq(t.tail_norm(len).expect("range"), 0.0, "full truncation kills the operator");
    });
}

fn law_finite_rank_vanish(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.operator, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let m = case.rng.random_range(1..len);
        let y = random_vector(&desc, len, &mut case.rng);
        let z = random_vector(&desc, len, &mut case.rng).truncate(m).expect("range");
        let th = ModuleOperator::theta(&y, &z).expect("shape");
        for n in m..=len {
            case.eq(th.tail_norm(n).expect("range"), 0.0, "finite-rank tails vanish");
        }
    });
}

fn law_compact_perturb(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.operator, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let m = case.rng.random_range(1..len);
        let t = random_operator(&desc, len, &mut case.rng);
        let y = random_vector(&desc, len, &mut case.rng);
        let z = random_vector(&desc, len, &mut case.rng).truncate(m).expect("range");
        let k = ModuleOperator::theta(&y, &z).expect("shape");
        let perturbed = t.add(&k).expect("shape");
        for n in m..=len {
            case.eq(
                perturbed.tail_norm(n).expect("range"),
                t.tail_norm(n).expect("range"),
                "finite-rank perturbations drop out of the tail",
            );
        }
    });
}

fn law_op_subadditive(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.operator, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let s = random_operator(&desc, len, &mut case.rng);
        let t = random_operator(&desc, len, &mut case.rng);
        let sum = s.add(&t).expect("shape");
        for n in 0..len {
            case.le(
                sum.tail_norm(n).expect("range"),
                s.tail_norm(n).expect("range") + t.tail_norm(n).expect("range"),
                "operator tails are subadditive",
            );
        }
    });
}

fn law_op_homogeneous(cfg: &SuiteConfig, rec: &mut LawRecord) {
    for_cases(cfg, rec, cfg.counts.operator, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let t = random_operator(&desc, len, &mut case.rng);
        let c: f64 = case.rng.random_range(0.0..2.5);
        let scaled = t.scale_re(c);
        for n in 0..len {
            case.eq(
                scaled.tail_norm(n).expect("range"),
                c * t.tail_norm(n).expect("range"),
                "positive homogeneity of operator tails",
            );
        }
    });
}

fn law_op_star_chain(cfg: &SuiteConfig, rec: &mut LawRecord) {
    let count = cfg.counts.operator.min(16);
    for_cases(cfg, rec, count, |case| {
        let desc = pick_desc(cfg, &mut case.rng);
        let len = pick_len(cfg, &mut case.rng);
        let t = random_operator(&desc, len, &mut case.rng);
        let image = BoundedSet::build(SetExpr::OperatorImage(t.clone())).expect("valid");
        let params = suite_star_params(cfg, case.seed);
        let lambda_hi = lambda_profile(&image, len - 1, &cfg.eval).expect("range").estimate().hi;
        let chi = star_aggregate(&image, MeasureKind::Chi, &params).expect("valid");
        let ist = star_aggregate(&image, MeasureKind::Istratescu, &params).expect("valid");
        let alp = star_aggregate(&image, MeasureKind::Alpha, &params).expect("valid");
        case.le(chi.lower, lambda_hi + 1e-6, "hausdorff-type lower below the tail estimate");
        case.le(chi.upper, t.norm() + 1e-9, "hausdorff-type cap below the norm");
        case.le(ist.upper, 2.0 * t.norm() + 1e-9, "istratescu cap below twice the norm");
        case.le(alp.upper, 2.0 * t.norm() + 1e-9, "alpha cap below twice the norm");
    });
}

// ------------------------------------------------------------ exploration

/// Verdict-exempt evidence for the open question whether the starred
/// measures are stable under the balanced hull.
pub(super) fn run_exploration(cfg: &SuiteConfig) -> Vec<ExplorationRecord> {
    let mut observations = Vec::new();
    let count = cfg.counts.exploration;
    for index in 0..count {
        let seed = derive(cfg.seed, &[tag("balanced-hull-star-evidence"), index as u64]);
        let mut rng = stream(seed, &[]);
        let desc = pick_desc(cfg, &mut rng);
        let len = pick_len(cfg, &mut rng);
        let e = random_expr(&desc, len, 1, false, &mut rng);
        let base = BoundedSet::build(e.clone()).expect("valid");
        let hull = BoundedSet::build(e.balanced_hull()).expect("valid");
        let params = suite_star_params(cfg, seed);
        let a = star_aggregate(&base, MeasureKind::Chi, &params).expect("valid");
        let b = star_aggregate(&hull, MeasureKind::Chi, &params).expect("valid");
        observations.push(format!(
            "case {index}: chi*-lower set={} hull={} gap={}",
            fmt_sig(a.lower),
            fmt_sig(b.lower),
            fmt_sig(b.lower - a.lower),
        ));
    }
    vec![ExplorationRecord {
        id: "balanced-hull-star-evidence".into(),
        label: "open question evidence".into(),
        cases: count,
        observations,
    }]
}

// ----------------------------------------------------------------- table

pub(super) fn registry() -> &'static [LawDef] {
    &[
        LawDef { id: "cstar-identity", tier: Tier::Core, slack: 1e-9, statement: "‖a*a‖ = ‖a‖² within relative slack", run: law_cstar_identity },
        LawDef { id: "submultiplicative", tier: Tier::Core, slack: 1e-9, statement: "‖ab‖ ≤ ‖a‖·‖b‖", run: law_submultiplicative },
        LawDef { id: "state-positivity", tier: Tier::Core, slack: 1e-10, statement: "states are real and nonnegative on positive elements", run: law_state_positivity },
        LawDef { id: "state-conjugation", tier: Tier::Core, slack: 1e-12, statement: "φ^u(a) = φ(u*au) and the round trip restores φ", run: law_state_conjugation },
        LawDef { id: "state-cauchy-schwarz", tier: Tier::Core, slack: 1e-12, statement: "|φ(b*a)|² ≤ φ(b*b)·φ(a*a)", run: law_state_cauchy_schwarz },
        LawDef { id: "orthogonal-lower", tier: Tier::Core, slack: 1e-9, statement: "‖z₁+z₂‖ ≥ max norm for disjointly supported pairs", run: law_orthogonal_lower },
        LawDef { id: "projection-minimality", tier: Tier::Core, slack: 1e-9, statement: "submodule projection minimizes distance; slot spans give tail norms", run: law_projection_minimality },
        LawDef { id: "vec-tail-monotone", tier: Tier::Core, slack: 1e-12, statement: "vector tail norms decrease in the cut", run: law_vec_tail_monotone },
        LawDef { id: "profile-monotone", tier: Tier::Core, slack: 1e-10, statement: "upper tail bounds decrease and dominate lower bounds", run: law_profile_monotone },
        LawDef { id: "union-max", tier: Tier::Core, slack: 0.0, statement: "union tail bounds are exact maxima", run: law_union_max },
        LawDef { id: "subset-monotone", tier: Tier::Core, slack: 1e-9, statement: "subsets have dominated tail bounds", run: law_subset_monotone },
        LawDef { id: "sum-subadditive", tier: Tier::Core, slack: 1e-10, statement: "Minkowski sums have subadditive tail bounds", run: law_sum_subadditive },
        LawDef { id: "rightmul-bounds", tier: Tier::Core, slack: 1e-10, statement: "right factors scale tails by at most their norm, with unitary equality", run: law_rightmul_bounds },
        LawDef { id: "convex-hull-invariant", tier: Tier::Core, slack: 0.0, statement: "convex hulls keep tail intervals exactly", run: law_convex_hull_invariant },
        LawDef { id: "balanced-hull-invariant", tier: Tier::Core, slack: 0.0, statement: "balanced hulls keep tail intervals exactly", run: law_balanced_hull_invariant },
        LawDef { id: "enlargement-additive", tier: Tier::Core, slack: 1e-10, statement: "adding a δ-ball raises tails by at most δ", run: law_enlargement_additive },
        LawDef { id: "hausdorff-lipschitz", tier: Tier::Core, slack: 1e-9, statement: "tail values are 1-Lipschitz in the Hausdorff distance", run: law_hausdorff_lipschitz },
        LawDef { id: "sup-norm-cap", tier: Tier::Core, slack: 1e-9, statement: "tail bounds never exceed the sup norm", run: law_sup_norm_cap },
        LawDef { id: "adjoin-supported-point", tier: Tier::Core, slack: 0.0, statement: "adjoining a point supported below the cut keeps intervals", run: law_adjoin_supported_point },
        LawDef { id: "intersect-upper", tier: Tier::Core, slack: 1e-10, statement: "finite intersections bound below both operands", run: law_intersect_upper },
        LawDef { id: "unit-ball-tail", tier: Tier::Core, slack: 1e-9, statement: "the unit ball has tail value one at every level", run: law_unit_ball_tail },
        LawDef { id: "splitting-golden", tier: Tier::Core, slack: 1e-9, statement: "the two-character splitting set drops from 2 to 1 under its projection", run: law_splitting_golden },
        LawDef { id: "sample-soundness", tier: Tier::Core, slack: 1e-9, statement: "sampled member tails never exceed certified upper bounds", run: law_sample_soundness },
        LawDef { id: "exactness-classes", tier: Tier::Core, slack: 0.0, statement: "exact constructors produce degenerate intervals", run: law_exactness_classes },
        LawDef { id: "seminorm-normalized", tier: Tier::Seminorm, slack: 1e-10, statement: "generated semi-norms satisfy the weight normalization", run: law_seminorm_normalized },
        LawDef { id: "seminorm-domination", tier: Tier::Seminorm, slack: 1e-9, statement: "semi-norms are dominated by the module norm", run: law_seminorm_domination },
        LawDef { id: "seminorm-triangle", tier: Tier::Seminorm, slack: 1e-10, statement: "triangle inequality and absolute homogeneity", run: law_seminorm_triangle },
        LawDef { id: "transform-identity", tier: Tier::Seminorm, slack: 1e-10, statement: "p(x·u) equals the transformed semi-norm at x", run: law_transform_identity },
        LawDef { id: "transform-roundtrip", tier: Tier::Seminorm, slack: 1e-10, statement: "transforming by u then u* restores the semi-norm", run: law_transform_roundtrip },
        LawDef { id: "chi-star-cap", tier: Tier::Seminorm, slack: 1e-6, statement: "hausdorff-type lower bounds stay below the tail estimate", run: law_chi_star_cap },
        LawDef { id: "chain-bracket", tier: Tier::Seminorm, slack: 1e-9, statement: "bounds respect χ ≤ I ≤ α ≤ 2χ at the bound level", run: law_chain_bracket },
        LawDef { id: "star-finite-zero", tier: Tier::Seminorm, slack: 0.0, statement: "finite sets are certified zero and monotone under subsets", run: law_star_finite_zero },
        LawDef { id: "star-monotone-budget", tier: Tier::Seminorm, slack: 1e-15, statement: "aggregated lower bounds grow with the semi-norm budget", run: law_star_monotone_budget },
        LawDef { id: "estimate-transform", tier: Tier::Seminorm, slack: 1e-10, statement: "unitary right translation matches transformed semi-norm estimates", run: law_estimate_transform },
        LawDef { id: "witness-separation", tier: Tier::Witness, slack: 1e-9, statement: "witness points reach the target separation pairwise", run: law_witness_separation },
        LawDef { id: "witness-certificate", tier: Tier::Witness, slack: 1e-6, statement: "δ² ≤ ‖E‖·separation + ε for the witnessed sequence", run: law_witness_certificate },
        LawDef { id: "witness-seminorm-valid", tier: Tier::Witness, slack: 1e-10, statement: "the witness semi-norm is normalized and dominated", run: law_witness_seminorm_valid },
        LawDef { id: "adjoint-pairing", tier: Tier::Operator, slack: 1e-9, statement: "⟨Tx, y⟩ = ⟨x, T*y⟩", run: law_adjoint_pairing },
        LawDef { id: "opnorm-cstar", tier: Tier::Operator, slack: 1e-8, statement: "‖T*T‖ = ‖T‖² within relative slack", run: law_opnorm_cstar },
        LawDef { id: "opnorm-cap", tier: Tier::Operator, slack: 1e-9, statement: "the image tail estimate never exceeds the operator norm", run: law_opnorm_cap },
        LawDef { id: "tail-opnorm-monotone", tier: Tier::Operator, slack: 1e-10, statement: "operator tail norms decrease to zero", run: law_tail_opnorm_monotone },
        LawDef { id: "finite-rank-vanish", tier: Tier::Operator, slack: 1e-10, statement: "finite-rank operators lose their tail beyond their support", run: law_finite_rank_vanish },
        LawDef { id: "compact-perturb", tier: Tier::Operator, slack: 1e-10, statement: "finite-rank perturbations leave deep tails unchanged", run: law_compact_perturb },
        LawDef { id: "op-subadditive", tier: Tier::Operator, slack: 1e-9, statement: "operator tail norms are subadditive", run: law_op_subadditive },
        LawDef { id: "op-homogeneous", tier: Tier::Operator, slack: 1e-9, statement: "operator tail norms scale with positive factors", run: law_op_homogeneous },
        LawDef { id: "op-star-chain", tier: Tier::Operator, slack: 1e-9, statement: "operator measures respect their caps and the equivalence chain", run: law_op_star_chain },
    ]
}
