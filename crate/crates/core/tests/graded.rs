use hopfeq::bialg::{graded_solution, FiniteGroup, GradedModuleSpec, GradingMode};
use hopfeq::{Fp, Matrix, PrimeField, Scalar, ScalarField};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn group(pick: usize) -> FiniteGroup {
    match pick % 3 {
        0 => FiniteGroup::cyclic(2),
        1 => FiniteGroup::cyclic(3),
        _ => FiniteGroup::symmetric3(),
    }
}

/// `copies` copies of `k[G]`, `g` moving `e_h` to a rescaled `e_{gh}`
/// (graded) or `e_{ghg⁻¹}` (crossed), with the basis shuffled.
fn random_spec(g: FiniteGroup, copies: usize, mode: GradingMode, rng: &mut ChaCha8Rng) -> GradedModuleSpec<Fp> {
    let f = PrimeField::new(5).unwrap();
    let order = g.order();
    let n = order * copies;
    let mut slots: Vec<usize> = (0..n).collect();
    slots.shuffle(rng);
    let scale: Vec<Fp> = (0..n).map(|_| f.from_i64(rng.gen_range(1..5))).collect();
    let slot = |c: usize, h: usize| slots[c * order + h];
    let mut degree = vec![0; n];
    for c in 0..copies {
        for h in 0..order {
            degree[slot(c, h)] = h;
        }
    }
    let action = (0..order)
        .map(|x| {
            let mut m = Matrix::zeros(&f, n, n);
            for c in 0..copies {
                for h in 0..order {
                    let to = match mode {
                        GradingMode::Graded => g.mul(x, h),
                        GradingMode::Crossed => g.mul(g.mul(x, h), g.inverse(x)),
                    };
                    let (src, dst) = (slot(c, h), slot(c, to));
                    m.set(dst, src, scale[dst] * scale[src].inv().unwrap());
                }
            }
            m
        })
        .collect();
    GradedModuleSpec { group: g, degree, action }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn graded_modules_give_hopf_solutions(seed in any::<u64>(), pick in 0usize..3, copies in 1usize..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = random_spec(group(pick), copies, GradingMode::Graded, &mut rng);
        prop_assert!(spec.validate(GradingMode::Graded).is_ok());
        let r = graded_solution(&spec, GradingMode::Graded).unwrap();
        prop_assert!(r.check_hopf());
    }

    #[test]
    fn crossed_modules_give_braidings(seed in any::<u64>(), pick in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = random_spec(group(pick), 1, GradingMode::Crossed, &mut rng);
        prop_assert!(spec.validate(GradingMode::Crossed).is_ok());
        let r = graded_solution(&spec, GradingMode::Crossed).unwrap();
        prop_assert!(r.check_qybe());
    }
}

#[test]
fn crossed_s3_is_not_a_hopf_solution() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let spec = random_spec(FiniteGroup::symmetric3(), 1, GradingMode::Crossed, &mut rng);
    assert!(!graded_solution(&spec, GradingMode::Crossed).unwrap().check_hopf());
}
