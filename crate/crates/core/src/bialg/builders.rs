//! The concrete operators used throughout: projections and their tensor
//! products, the characteristic-two matrix, the classical two-dimensional
//! Yang-Baxter operator, and two graded/crossed module instances.

use super::{FiniteGroup, GradedModuleSpec};
use crate::error::{Error, Result};
use crate::exactnum::{Scalar, ScalarField};
use crate::matrix::Matrix;
use crate::tensor::{EndoV, TensorOp};

/// `f_q = [[1, q], [0, 0]]`, an idempotent for every `q`.
pub fn projection_fq<S: Scalar>(q: &S) -> EndoV<S> {
    let f = q.field();
    let m = Matrix::from_rows(&f, vec![vec![f.one(), q.clone()], vec![f.zero(), f.zero()]]).expect("2x2");
    EndoV::new(m).expect("square")
}

fn complement<S: Scalar>(f: &EndoV<S>) -> EndoV<S> {
    EndoV::identity(f.matrix().field(), f.n()).sub(f)
}

/// `R_q = f_q ⊗ (I - f_q)`.
pub fn r_q<S: Scalar>(q: &S) -> TensorOp<S> {
    let f = projection_fq(q);
    TensorOp::pair_tensor(&f, &complement(&f)).expect("same dimension")
}

/// `R_q′ = f_q ⊗ I`.
pub fn r_q_prime<S: Scalar>(q: &S) -> TensorOp<S> {
    let f = projection_fq(q);
    TensorOp::pair_tensor(&f, &EndoV::identity(&q.field(), 2)).expect("same dimension")
}

/// `R_q″ = f_q ⊗ f_q`.
pub fn r_q_dblprime<S: Scalar>(q: &S) -> TensorOp<S> {
    let f = projection_fq(q);
    TensorOp::pair_tensor(&f, &f).expect("same dimension")
}

/// `π₁ ⊗ π¹` on `k^n ⊗ k^n`, where `π₁` projects onto the first coordinate
/// axis and `π¹ = I - π₁`.
pub fn pi1_tensor_complement<S: Scalar>(field: &S::Field, n: usize) -> TensorOp<S> {
    let mut p = Matrix::zeros(field, n, n);
    p.set(0, 0, field.one());
    let pi1 = EndoV::new(p).expect("square");
    TensorOp::pair_tensor(&pi1, &complement(&pi1)).expect("same dimension")
}

/// The 4×4 matrix that solves the Hopf equation exactly in characteristic two.
pub fn char2_matrix<S: Scalar>(field: &S::Field) -> TensorOp<S> {
    TensorOp::from_i64_rows(field, 2, &[&[1, 0, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])
        .expect("4x4 literal")
}

/// The classical two-dimensional Yang-Baxter operator; needs `q ≠ 0`.
pub fn classical_yb<S: Scalar>(q: &S) -> Result<TensorOp<S>> {
    let f = q.field();
    let qinv = q.inv().map_err(|_| Error::Invalid("classical_yb needs q ≠ 0".into()))?;
    let z = f.zero();
    let o = f.one();
    let rows = vec![
        vec![q.clone(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), o.clone(), q.clone() - &qinv, z.clone()],
        vec![z.clone(), z.clone(), o, z.clone()],
        vec![z.clone(), z.clone(), z, q.clone()],
    ];
    TensorOp::new(2, Matrix::from_rows(&f, rows)?)
}

/// `C₂ = {e, s}` acting on `k²` by swapping the basis, with `deg m₁ = e`
/// and `deg m₂ = s`.
pub fn graded_c2<S: Scalar>(field: &S::Field) -> GradedModuleSpec<S> {
    let swap = Matrix::from_i64_rows(field, &[&[0, 1], &[1, 0]]).expect("2x2");
    GradedModuleSpec {
        group: FiniteGroup::cyclic(2),
        degree: vec![0, 1],
        action: vec![Matrix::identity(field, 2), swap],
    }
}

/// `S₃` acting on `k[S₃]` by conjugation, with `deg(h) = h`.
pub fn crossed_s3<S: Scalar>(field: &S::Field) -> GradedModuleSpec<S> {
    let group = FiniteGroup::symmetric3();
    let n = group.order();
    let action = (0..n)
        .map(|h| {
            let mut m = Matrix::zeros(field, n, n);
            for g in 0..n {
                let conj = group.mul(group.mul(h, g), group.inverse(h));
                m.set(conj, g, field.one());
            }
            m
        })
        .collect();
    GradedModuleSpec { group, degree: (0..n).collect(), action }
}

#[cfg(test)]
mod tests {
    use super::super::{graded_solution, GradingMode};
    use super::*;
    use crate::exactnum::{PrimeField, Rational, Rationals};

    fn q(v: i64) -> Rational {
        Rational::from_integer(v)
    }

    #[test]
    fn projection_is_idempotent() {
        assert!(projection_fq(&q(7)).is_idempotent());
    }

    #[test]
    fn printed_matrices() {
        let f = Rationals;
        let rq = r_q(&q(2));
        let want =
            TensorOp::from_i64_rows(&f, 2, &[&[0, -2, 0, -4], &[0, 1, 0, 2], &[0, 0, 0, 0], &[0, 0, 0, 0]]).unwrap();
        assert_eq!(rq, want);
        let want =
            TensorOp::from_i64_rows(&f, 2, &[&[1, 0, 2, 0], &[0, 1, 0, 2], &[0, 0, 0, 0], &[0, 0, 0, 0]]).unwrap();
        assert_eq!(r_q_prime(&q(2)), want);
        let want =
            TensorOp::from_i64_rows(&f, 2, &[&[1, 2, 2, 4], &[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]).unwrap();
        assert_eq!(r_q_dblprime(&q(2)), want);
        let yb = classical_yb(&q(2)).unwrap();
        assert_eq!(yb.matrix().get(1, 2), &Rational::new(3, 2).unwrap());
        assert!(classical_yb(&q(0)).is_err());
        assert_eq!(pi1_tensor_complement::<Rational>(&f, 2), r_q(&q(0)));
    }

    #[test]
    fn char2_depends_on_characteristic() {
        let f2 = PrimeField::new(2).unwrap();
        assert!(char2_matrix::<crate::Fp>(&f2).check_hopf());
        assert!(!char2_matrix::<Rational>(&Rationals).check_hopf());
        let f3 = PrimeField::new(3).unwrap();
        assert!(!char2_matrix::<crate::Fp>(&f3).check_hopf());
    }

    #[test]
    fn graded_and_crossed_instances() {
        let f = Rationals;
        let g = graded_solution(&graded_c2::<Rational>(&f), GradingMode::Graded).unwrap();
        assert!(g.check_hopf());
        assert!(!g.check_qybe());
        let c = graded_solution(&crossed_s3::<Rational>(&f), GradingMode::Crossed).unwrap();
        assert!(c.check_qybe());
        assert!(!c.check_hopf());
        // The C₂ swap is not a crossed grading and conjugation is not graded.
        assert!(graded_solution(&graded_c2::<Rational>(&f), GradingMode::Crossed).is_err());
        assert!(graded_solution(&crossed_s3::<Rational>(&f), GradingMode::Graded).is_err());
    }

    #[test]
    fn trivial_group_gives_identity() {
        let f = Rationals;
        let spec = GradedModuleSpec::<Rational> {
            group: FiniteGroup::cyclic(1),
            degree: vec![0, 0, 0],
            action: vec![Matrix::identity(&f, 3)],
        };
        assert!(graded_solution(&spec, GradingMode::Graded).unwrap().matrix().is_identity());
    }
}
