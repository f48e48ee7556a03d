//! Exhaustive search for solutions over small prime fields.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::{Fp, PrimeField, ScalarField};
use crate::matrix::Matrix;
use crate::tensor::{Equation, TensorOp};

/// Default bound on the number of candidate matrices (`2^24`).
pub const DEFAULT_CAP: u128 = 1 << 24;

/// `p^(n^4)`, saturating at `u128::MAX`.
pub fn candidate_count(n: usize, p: u32) -> u128 {
    let exp = (n as u32).saturating_pow(4);
    u128::from(p).checked_pow(exp).unwrap_or(u128::MAX)
}

/// The candidate at position `index` in lexicographic order of the
/// row-major entry vector (first entry most significant).
pub fn candidate(n: usize, field: &PrimeField, index: u64) -> TensorOp<Fp> {
    let len = n.pow(4);
    let p = u64::from(field.modulus());
    let mut digits = vec![field.zero(); len];
    let mut rest = index;
    for slot in digits.iter_mut().rev() {
        *slot = field.from_i64((rest % p) as i64);
        rest /= p;
    }
    let nn = n * n;
    let m = Matrix::from_fn(field, nn, nn, |r, c| digits[r * nn + c]);
    TensorOp::new(n, m).expect("candidate has the right shape")
}

/// Every `n² × n²` matrix over `F_p` satisfying `eq`, in lexicographic order.
///
/// `jobs = 0` uses rayon's global pool.
pub fn enumerate_solutions(
    n: usize,
    field: &PrimeField,
    eq: Equation,
    cap: u128,
    jobs: usize,
) -> Result<Vec<TensorOp<Fp>>> {
    if n == 0 {
        return Err(Error::ShapeMismatch("dimension n must be positive".into()));
    }
    let total = candidate_count(n, field.modulus());
    if total > cap || total > u128::from(u64::MAX) {
        return Err(Error::CapExceeded { candidates: total, cap });
    }
    let total = total as u64;
    let scan = || -> Vec<TensorOp<Fp>> {
        (0..total).into_par_iter().map(|idx| candidate(n, field, idx)).filter(|r| r.check(eq)).collect()
    };
    if jobs == 0 {
        return Ok(scan());
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| Error::Invalid(e.to_string()))?;
    Ok(pool.install(scan))
}

/// Counts of enumerated solutions split by (commutative, cocommutative,
/// bijective).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Classification {
    /// Indexed by `commutative as usize * 4 + cocommutative as usize * 2 + bijective as usize`.
    pub counts: [usize; 8],
}

impl Classification {
    pub fn of(solutions: &[TensorOp<Fp>]) -> Self {
        let mut counts = [0usize; 8];
        for r in solutions {
            let rep = r.report();
            counts
                [usize::from(rep.commutative) * 4 + usize::from(rep.cocommutative) * 2 + usize::from(rep.bijective)] +=
                1;
        }
        Classification { counts }
    }

    pub fn get(&self, commutative: bool, cocommutative: bool, bijective: bool) -> usize {
        self.counts[usize::from(commutative) * 4 + usize::from(cocommutative) * 2 + usize::from(bijective)]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}
