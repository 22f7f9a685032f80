//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Run with `cargo test -p hilbert-mnc --test acceptance -- --nocapture` to
//! see the per-criterion lines.

use std::time::Instant;

use hilbert_mnc::algebra::{random_element, AlgebraDesc, ElementKind};
use hilbert_mnc::hilbert_module::{ModuleOperator, ModuleVector};
use hilbert_mnc::rng::stream;
use hilbert_mnc::suite::{golden_splitting_set, random_expr, random_operator, random_vector};
use hilbert_mnc::{
    discrete_witness, lambda_profile, random_seminorm, run_suite, seminorm_mnc_bounds,
    star_aggregate, BoundParams, BoundedSet, EvalParams, MeasureKind, Selection, SetExpr,
    StarParams, SuiteConfig, WitnessParams,
};

fn algebra_pool() -> Vec<AlgebraDesc> {
    vec![
        AlgebraDesc::scalar(),
        AlgebraDesc::full(2).unwrap(),
        AlgebraDesc::new(vec![1, 1]).unwrap(),
        AlgebraDesc::new(vec![2, 1]).unwrap(),
        AlgebraDesc::full(3).unwrap(),
    ]
}

fn eval() -> EvalParams {
    EvalParams::default()
}

#[test]
fn criterion_01_unit_ball_profile_is_one() {
    let start = Instant::now();
    for desc in algebra_pool() {
        for len in [4usize, 6, 8] {
            let ball = BoundedSet::build(SetExpr::unit_ball(&desc, len)).unwrap();
            let profile = lambda_profile(&ball, len - 1, &eval()).unwrap();
            for n in 0..len {
                let iv = profile.value(n);
                assert!((iv.lo - 1.0).abs() <= 1e-9, "{desc} N={len} n={n} lo={}", iv.lo);
                assert!((iv.hi - 1.0).abs() <= 1e-9, "{desc} N={len} n={n} hi={}", iv.hi);
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}");
    println!("criterion 01 (unit ball tail value 1 across the pools, {elapsed:?}): PASS");
}

#[test]
fn criterion_02_splitting_golden_case() {
    let (set, p) = golden_splitting_set(6);
    let profile = lambda_profile(&set, 5, &eval()).unwrap();
    assert!((profile.estimate().lo - 2.0).abs() <= 1e-9, "estimate {}", profile.estimate().lo);
    let pushed = set.pushed_right(&p).unwrap();
    let pushed_profile = lambda_profile(&pushed, 5, &eval()).unwrap();
    assert!(
        (pushed_profile.estimate().lo - 1.0).abs() <= 1e-9,
        "translated estimate {}",
        pushed_profile.estimate().lo
    );
    // strict inequality against the product bound: 1 < 2·‖p‖ = 2
    assert!(pushed_profile.estimate().lo < profile.estimate().lo * p.norm() - 1e-9);
    println!("criterion 02 (two-character splitting set: 2 vs 1 under the projection): PASS");
}

#[test]
fn criterion_03_tail_law_suite_core() {
    let start = Instant::now();
    let report = run_suite(&SuiteConfig::default(), Selection::Core).unwrap();
    let elapsed = start.elapsed();
    assert!(report.passed(), "{}", report.render_table());
    for id in
        ["subset-monotone", "union-max", "sum-subadditive", "rightmul-bounds", "convex-hull-invariant"]
    {
        let law = report.laws.iter().find(|l| l.id == id).expect("law present");
        assert!(law.cases >= 200, "{id} ran {} cases", law.cases);
        assert_eq!(law.failures, 0, "{id} failed");
        assert!(law.allowed_slack <= 1e-9, "{id} slack too loose");
    }
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!("criterion 03 (monotone/union/sum/right-factor/hull laws, 200 cases each, {elapsed:?}): PASS");
}

#[test]
fn criterion_04_lipschitz_and_norm_cap() {
    let mut rng = stream(401, &[]);
    let pool = algebra_pool();
    for case in 0..200 {
        let desc = pool[case % pool.len()].clone();
        let len = [4, 6, 8][case % 3];
        let a: Vec<ModuleVector> = (0..1 + case % 3).map(|_| random_vector(&desc, len, &mut rng)).collect();
        let b: Vec<ModuleVector> = (0..1 + (case + 1) % 3).map(|_| random_vector(&desc, len, &mut rng)).collect();
        let d = hilbert_mnc::sets::hausdorff(&a, &b).unwrap();
        let sa = BoundedSet::build(SetExpr::points(a)).unwrap();
        let sb = BoundedSet::build(SetExpr::points(b)).unwrap();
        for n in 0..len {
            let ta = sa.tail_norm(n).unwrap().hi;
            let tb = sb.tail_norm(n).unwrap().hi;
            assert!((ta - tb).abs() <= d + 1e-9, "case {case} n={n}");
        }
    }
    // norm cap on generated expressions of every kind
    for case in 0..60 {
        let desc = pool[case % pool.len()].clone();
        let set = BoundedSet::build(random_expr(&desc, 5, 2, false, &mut rng)).unwrap();
        let sup = set.sup_norm().unwrap();
        assert!(set.tail_norm(0).unwrap().hi <= sup.hi + 1e-9);
    }
    println!("criterion 04 (Hausdorff 1-Lipschitz tails on 200 pairs; sup-norm cap): PASS");
}

#[test]
fn criterion_05_seminorm_domination_and_cap() {
    let mut rng = stream(501, &[]);
    let pool = algebra_pool();
    let mut probes = 0usize;
    for case in 0..50 {
        let desc = pool[case % pool.len()].clone();
        let len = [4, 6, 8][case % 3];
        let p = random_seminorm(&desc, len, &mut rng);
        for _ in 0..200 {
            let x = random_vector(&desc, len, &mut rng);
            assert!(p.eval(&x).unwrap() <= x.norm() + 1e-9);
            probes += 1;
        }
    }
    assert!(probes >= 10_000);
    // aggregated Hausdorff-type lower bounds stay below the tail estimate
    let params = StarParams {
        bound: BoundParams { samples: 200, seed: 0x0505, ..BoundParams::default() },
        seminorms: 8,
        n_max: None,
    };
    for case in 0..30 {
        let desc = pool[case % pool.len()].clone();
        let set = BoundedSet::build(random_expr(&desc, 5, 1, false, &mut rng)).unwrap();
        let lambda_hi = lambda_profile(&set, 4, &eval()).unwrap().estimate().hi;
        let star = star_aggregate(&set, MeasureKind::Chi, &params).unwrap();
        assert!(star.lower <= lambda_hi + 1e-6, "case {case}");
    }
    println!("criterion 05 (semi-norm domination on 10^4 probes; aggregated cap): PASS");
}

#[test]
fn criterion_06_chain_bracket() {
    let mut rng = stream(601, &[]);
    let pool = algebra_pool();
    let params = BoundParams { samples: 200, seed: 0x0606, ..BoundParams::default() };
    for case in 0..40 {
        let desc = pool[case % pool.len()].clone();
        let set = BoundedSet::build(random_expr(&desc, 5, 1, false, &mut rng)).unwrap();
        let p = random_seminorm(set.desc(), set.len(), &mut rng);
        let chi = seminorm_mnc_bounds(&set, &p, MeasureKind::Chi, &params).unwrap();
        let ist = seminorm_mnc_bounds(&set, &p, MeasureKind::Istratescu, &params).unwrap();
        let alp = seminorm_mnc_bounds(&set, &p, MeasureKind::Alpha, &params).unwrap();
        assert!(chi.lower <= chi.upper && ist.lower <= ist.upper && alp.lower <= alp.upper);
        assert!(chi.lower <= ist.upper + 1e-9, "case {case}");
        assert!(ist.lower <= alp.upper + 1e-9, "case {case}");
        assert!(alp.upper <= 2.0 * chi.upper + 1e-9, "case {case}");
    }
    println!("criterion 06 (bounds respect the chain χ ≤ I ≤ α ≤ 2χ): PASS");
}

#[test]
fn criterion_07_transform_identity() {
    let mut rng = stream(701, &[]);
    let pool = algebra_pool();
    for case in 0..1000 {
        let desc = pool[case % pool.len()].clone();
        let len = [4, 6, 8][case % 3];
        let p = random_seminorm(&desc, len, &mut rng);
        let u = random_element(&desc, ElementKind::Unitary, &mut rng);
        let q = p.transform(&u).unwrap();
        let x = random_vector(&desc, len, &mut rng);
        let lhs = p.eval(&x.right_mul(&u).unwrap()).unwrap();
        let rhs = q.eval(&x).unwrap();
        assert!((lhs - rhs).abs() <= 1e-10, "case {case}: {lhs} vs {rhs}");
    }
    println!("criterion 07 (semi-norm transform identity on 10^3 triples): PASS");
}

#[test]
fn criterion_08_witness_on_balls() {
    for desc in [AlgebraDesc::scalar(), AlgebraDesc::full(2).unwrap()] {
        for r in [1.0f64, 2.0] {
            let set = BoundedSet::build(SetExpr::unit_ball(&desc, 8).scale(r)).unwrap();
            let eps = 0.1 * r * r;
            let w = discrete_witness(&set, eps, &WitnessParams::default()).unwrap();
            assert!(w.points.len() >= 4, "{desc} r={r}: {} points", w.points.len());
            let target = (r * r - eps) / r;
            assert!(
                w.separation >= target - 1e-9,
                "{desc} r={r}: separation {} below {target}",
                w.separation
            );
            // the implied lower bound closes the square-root inequality
            let delta = w.trace.delta;
            let sup = set.sup_norm().unwrap().hi;
            assert!(delta * delta <= sup * w.separation + eps + 1e-6, "{desc} r={r}");
        }
    }
    println!("criterion 08 (separated witnesses on balls certify the tail bound): PASS");
}

#[test]
fn criterion_09_operator_laws() {
    let mut rng = stream(901, &[]);
    let pool = algebra_pool();
    for case in 0..200 {
        let desc = pool[case % pool.len()].clone();
        let len = [4, 6, 8][case % 3];
        let t = random_operator(&desc, len, &mut rng);
        let image = BoundedSet::build(SetExpr::OperatorImage(t.clone())).unwrap();
        let profile = lambda_profile(&image, len - 1, &eval()).unwrap();
        assert!(profile.estimate().hi <= t.norm() + 1e-9, "case {case}");

        // finite-rank supports vanish and drop out of perturbed tails
        let m = 1 + case % (len - 1);
        let y = random_vector(&desc, len, &mut rng);
        let z = random_vector(&desc, len, &mut rng).truncate(m).unwrap();
        let th = ModuleOperator::theta(&y, &z).unwrap();
        let perturbed = t.add(&th).unwrap();
        for n in m..=len {
            assert!(th.tail_norm(n).unwrap() <= 1e-10);
            assert!(
                (perturbed.tail_norm(n).unwrap() - t.tail_norm(n).unwrap()).abs() <= 1e-10,
                "case {case} n={n}"
            );
        }

        // subadditivity and positive homogeneity of the tail values
        let s = random_operator(&desc, len, &mut rng);
        let sum = t.add(&s).unwrap();
        let c: f64 = 0.25 + (case % 7) as f64 * 0.35;
        let scaled = t.scale_re(c);
        for n in 0..len {
            assert!(
                sum.tail_norm(n).unwrap()
                    <= t.tail_norm(n).unwrap() + s.tail_norm(n).unwrap() + 1e-9
            );
            assert!(
                (scaled.tail_norm(n).unwrap() - c * t.tail_norm(n).unwrap()).abs() <= 1e-9,
                "case {case} n={n}"
            );
        }
    }
    println!("criterion 09 (operator tail laws on 200 operators): PASS");
}

#[test]
fn criterion_10_sampling_soundness_per_constructor() {
    let desc = AlgebraDesc::new(vec![2, 1]).unwrap();
    let len = 5usize;
    let mut rng = stream(1001, &[]);

    let center = random_vector(&desc, len, &mut rng);
    let point_a = random_vector(&desc, len, &mut rng);
    let point_b = random_vector(&desc, len, &mut rng);
    let factor = random_element(&desc, ElementKind::Generic, &mut rng);
    let op = random_operator(&desc, len, &mut rng);
    let ball = SetExpr::ball(center.clone(), 0.8);
    let finite = SetExpr::points(vec![point_a.clone(), point_b.clone()]);
    let constructors: Vec<(&str, SetExpr)> = vec![
        ("finite", finite.clone()),
        ("ball", ball.clone()),
        ("scale", ball.clone().scale(1.3)),
        ("translate", ball.clone().translate(point_a.clone())),
        ("right_mul", ball.clone().right_mul(factor)),
        ("sum", ball.clone().sum(finite.clone())),
        ("union", ball.clone().union(finite.clone())),
        (
            "intersect",
            SetExpr::IntersectFinite(
                Box::new(SetExpr::points(vec![point_a.clone(), point_b.clone()])),
                Box::new(SetExpr::points(vec![point_b.clone()])),
            ),
        ),
        ("convex_hull", ball.clone().union(finite).convex_hull()),
        ("balanced_hull", ball.clone().balanced_hull()),
        ("operator_image", SetExpr::OperatorImage(op)),
    ];

    for (name, expr) in constructors {
        let set = BoundedSet::build(expr).unwrap();
        let bounds: Vec<f64> =
            (0..=len).map(|n| set.tail_norm(n).unwrap().hi).collect();
        for n in 0..=len {
            let iv = set.tail_norm(n).unwrap();
            assert!(iv.lo <= iv.hi + 1e-12, "{name}: lo exceeds hi");
        }
        for _ in 0..10_000 {
            let x = set.sample(&mut rng);
            for n in 0..=len {
                let t = x.tail_norm(n).unwrap();
                assert!(t <= bounds[n] + 1e-9, "{name}: sample tail {t} above {}", bounds[n]);
            }
        }
    }
    println!("criterion 10 (10^4 sampled members per constructor stay inside certified bounds): PASS");
}
