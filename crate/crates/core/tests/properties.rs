//! Property tests over seeded generators: any seed must satisfy the
//! algebraic laws and the certified-interval soundness contract.

use proptest::prelude::*;

use hilbert_mnc::algebra::{random_element, AlgebraDesc, ElementKind};
use hilbert_mnc::rng::stream;
use hilbert_mnc::suite::{random_expr, random_vector};
use hilbert_mnc::{random_seminorm, BoundedSet, EvalParams};

fn desc_from(choice: u8) -> AlgebraDesc {
    match choice % 4 {
        0 => AlgebraDesc::scalar(),
        1 => AlgebraDesc::full(2).unwrap(),
        2 => AlgebraDesc::new(vec![1, 1]).unwrap(),
        _ => AlgebraDesc::new(vec![2, 1]).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cstar_identity_for_any_seed(seed: u64, choice: u8) {
        let desc = desc_from(choice);
        let mut rng = stream(seed, &[1]);
        let a = random_element(&desc, ElementKind::Generic, &mut rng);
        let n = a.norm();
        let defect = ((&a.adjoint() * &a).norm() - n * n).abs();
        prop_assert!(defect <= 1e-9 * (n * n).max(1.0));
    }

    #[test]
    fn seminorm_domination_and_triangle_for_any_seed(seed: u64, choice: u8) {
        let desc = desc_from(choice);
        let len = 3 + (choice % 3) as usize;
        let mut rng = stream(seed, &[2]);
        let p = random_seminorm(&desc, len, &mut rng);
        let x = random_vector(&desc, len, &mut rng);
        let y = random_vector(&desc, len, &mut rng);
        prop_assert!(p.eval(&x).unwrap() <= x.norm() + 1e-9);
        prop_assert!(
            p.eval(&(&x + &y)).unwrap() <= p.eval(&x).unwrap() + p.eval(&y).unwrap() + 1e-10
        );
    }

    #[test]
    fn tail_intervals_cover_sampled_members(seed: u64, choice: u8) {
        let desc = desc_from(choice);
        let len = 3 + (choice % 2) as usize;
        let mut rng = stream(seed, &[3]);
        let set = BoundedSet::build(random_expr(&desc, len, 1, false, &mut rng)).unwrap();
        let params = EvalParams { refine_samples: 24, seed };
        for n in 0..=len {
            let iv = set.tail_norm_with(n, &params).unwrap();
            prop_assert!(iv.lo <= iv.hi + 1e-12);
            for _ in 0..12 {
                let s = set.sample(&mut rng);
                prop_assert!(s.tail_norm(n).unwrap() <= iv.hi + 1e-9);
            }
        }
    }

    #[test]
    fn truncation_is_contractive_for_any_seed(seed: u64, choice: u8) {
        let desc = desc_from(choice);
        let len = 3 + (choice % 3) as usize;
        let mut rng = stream(seed, &[4]);
        let x = random_vector(&desc, len, &mut rng);
        for n in 0..=len {
            prop_assert!(x.truncate(n).unwrap().norm() <= x.norm() + 1e-12);
            prop_assert!(x.tail_norm(n).unwrap() <= x.norm() + 1e-12);
        }
    }
}
