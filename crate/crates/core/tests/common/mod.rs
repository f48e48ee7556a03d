#![allow(dead_code)]

pub mod oracles;

use hopfeq::fixtures::Fixture;
use hopfeq::{EndoV, Matrix, Scalar, ScalarField};
use rand::Rng;

/// The permutation of `V ⊗ V ⊗ V` sending slot `k` of the input to slot
/// `perm[k]` of the output.
pub fn permutation<S: Scalar>(field: &S::Field, n: usize, perm: [usize; 3]) -> Matrix<S> {
    let mut m = Matrix::zeros(field, n * n * n, n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let src = [a, b, c];
                let mut dst = [0; 3];
                for k in 0..3 {
                    dst[perm[k]] = src[k];
                }
                m.set((dst[0] * n + dst[1]) * n + dst[2], (a * n + b) * n + c, field.one());
            }
        }
    }
    m
}

pub fn tau12<S: Scalar>(field: &S::Field, n: usize) -> Matrix<S> {
    permutation(field, n, [1, 0, 2])
}

pub fn tau13<S: Scalar>(field: &S::Field, n: usize) -> Matrix<S> {
    permutation(field, n, [2, 1, 0])
}

pub fn tau23<S: Scalar>(field: &S::Field, n: usize) -> Matrix<S> {
    permutation(field, n, [0, 2, 1])
}

pub fn random_endo<S: Scalar, R: Rng>(field: &S::Field, n: usize, rng: &mut R) -> EndoV<S> {
    let rows = (0..n).map(|_| (0..n).map(|_| field.random(rng)).collect()).collect();
    EndoV::new(Matrix::from_rows(field, rows).unwrap()).unwrap()
}

pub fn random_invertible<S: Scalar, R: Rng>(field: &S::Field, n: usize, rng: &mut R) -> EndoV<S> {
    loop {
        let u = random_endo(field, n, rng);
        if u.matrix().rank() == n {
            return u;
        }
    }
}

/// `u D u⁻¹` with `D` a random 0/1 diagonal.
pub fn random_idempotent<S: Scalar, R: Rng>(field: &S::Field, n: usize, rng: &mut R) -> EndoV<S> {
    let u = random_invertible(field, n, rng);
    let mut d = Matrix::zeros(field, n, n);
    for i in 0..n {
        if rng.gen::<bool>() {
            d.set(i, i, field.one());
        }
    }
    u.compose(&EndoV::new(d).unwrap()).compose(&u.inverse().unwrap())
}

/// Hopf solutions over any field: the characteristic-free fixtures.
pub fn hopf_fixtures() -> Vec<Fixture> {
    [
        "identity:2",
        "identity:3",
        "r_q:1",
        "r_q:2",
        "r_q:0",
        "r_q_prime:1",
        "r_q_dblprime:1",
        "pi1:3",
        "graded_c2",
        "takesaki_c2",
        "takesaki_c3",
        "takesaki_s3",
        "galois_c2",
        "galois_c3",
        "galois_prime_c2",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect()
}
