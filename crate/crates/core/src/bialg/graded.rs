use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::matrix::Matrix;
use crate::tensor::TensorOp;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GradingMode {
    /// `g · V_σ ⊆ V_{gσ}`
    Graded,
    /// `g · V_σ ⊆ V_{gσg⁻¹}`
    Crossed,
}

/// A `G`-module `V = k^n` whose basis vectors are homogeneous of the given
/// degrees. `action[g]` is the matrix of `g` acting on `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedModuleSpec<S: Scalar> {
    pub group: FiniteGroup,
    pub degree: Vec<usize>,
    pub action: Vec<Matrix<S>>,
}

impl<S: Scalar> GradedModuleSpec<S> {
    pub fn n(&self) -> usize {
        self.degree.len()
    }

    fn target_degree(&self, mode: GradingMode, g: usize, sigma: usize) -> usize {
        let gs = self.group.mul(g, sigma);
        match mode {
            GradingMode::Graded => gs,
            GradingMode::Crossed => self.group.mul(gs, self.group.inverse(g)),
        }
    }

    /// Checks shapes, the homomorphism property and the degree condition of
    /// `mode`, entry by entry.
    pub fn validate(&self, mode: GradingMode) -> Result<()> {
        let n = self.n();
        let order = self.group.order();
        if n == 0 || self.action.len() != order {
            return Err(Error::ShapeMismatch("one action matrix per group element is required".into()));
        }
        if self.degree.iter().any(|&d| d >= order) {
            return Err(Error::IncompatibleGrading("degree outside the group".into()));
        }
        if self.action.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::ShapeMismatch(format!("action matrices must be {n}x{n}")));
        }
        if !self.action[self.group.identity()].is_identity() {
            return Err(Error::IncompatibleGrading("identity does not act trivially".into()));
        }
        for a in 0..order {
            for b in 0..order {
                if &self.action[a] * &self.action[b] != self.action[self.group.mul(a, b)] {
                    return Err(Error::IncompatibleGrading("action is not a homomorphism".into()));
                }
            }
        }
        for g in 0..order {
            for col in 0..n {
                let want = self.target_degree(mode, g, self.degree[col]);
                for row in 0..n {
                    if !self.action[g].get(row, col).is_zero() && self.degree[row] != want {
                        return Err(Error::IncompatibleGrading(format!(
                            "{} moves basis vector {} out of degree {}",
                            self.group.names()[g],
                            col + 1,
                            self.group.names()[want]
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `R(u ⊗ v) = Σ_σ σ·u ⊗ v_σ`; on basis vectors `R(m_a ⊗ m_b) = deg(m_b)·m_a ⊗ m_b`.
pub fn graded_solution<S: Scalar>(spec: &GradedModuleSpec<S>, mode: GradingMode) -> Result<TensorOp<S>> {
    spec.validate(mode)?;
    let n = spec.n();
    let field = spec.action[0].field().clone();
    let mut m = Matrix::zeros(&field, n * n, n * n);
    for a in 0..n {
        for b in 0..n {
            let act = &spec.action[spec.degree[b]];
            for i in 0..n {
                let v = act.get(i, a);
                if !v.is_zero() {
                    m.set(i * n + b, a * n + b, v.clone());
                }
            }
        }
    }
    TensorOp::new(n, m)
}
