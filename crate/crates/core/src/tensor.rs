//! Endomorphisms of `V ⊗ V` and the equations they may satisfy.
//!
//! Basis convention: `V ⊗ V` is indexed lexicographically, slot `(a, b)`
//! (0-based) sits at position `a * n + b`, and column `(a, b)` of the matrix
//! holds the image of `m_a ⊗ m_b`. `V ⊗ V ⊗ V` is indexed the same way.
//!
//! Structure constants follow `R(m_v ⊗ m_u) = Σ x[u][v][j][i] m_i ⊗ m_j`,
//! so `M[(i,j),(v,u)] = x[u][v][j][i]`. Note the swap on both sides.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactnum::{Scalar, ScalarField};
use crate::matrix::Matrix;

/// An endomorphism of `V`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EndoV<S: Scalar> {
    matrix: Matrix<S>,
}

impl<S: Scalar> EndoV<S> {
    pub fn new(matrix: Matrix<S>) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() == 0 {
            return Err(Error::ShapeMismatch("endomorphism of V must be a non-empty square matrix".into()));
        }
        Ok(EndoV { matrix })
    }

    pub fn identity(field: &S::Field, n: usize) -> Self {
        EndoV { matrix: Matrix::identity(field, n) }
    }

    pub fn from_i64_rows(field: &S::Field, rows: &[&[i64]]) -> Result<Self> {
        Self::new(Matrix::from_i64_rows(field, rows)?)
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn compose(&self, other: &Self) -> Self {
        EndoV { matrix: &self.matrix * &other.matrix }
    }

    pub fn sub(&self, other: &Self) -> Self {
        EndoV { matrix: &self.matrix - &other.matrix }
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose(self) == *self
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(EndoV { matrix: self.matrix.inverse()? })
    }
}

/// Which pair of tensor legs an operator acts on in `V ⊗ V ⊗ V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Leg {
    L12,
    L13,
    L23,
}

/// The equations an operator can be tested against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Equation {
    /// `R23 R13 R12 = R12 R23`
    Hopf,
    /// `R12 R13 R23 = R23 R12`
    Pentagon,
    /// `R12 R13 R23 = R23 R13 R12`
    Qybe,
}

impl Equation {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "hopf" => Ok(Equation::Hopf),
            "pentagon" | "pentagonal" => Ok(Equation::Pentagon),
            "qybe" | "yb" => Ok(Equation::Qybe),
            other => Err(Error::Invalid(format!("unknown equation `{other}`"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Equation::Hopf => "hopf",
            Equation::Pentagon => "pentagon",
            Equation::Qybe => "qybe",
        }
    }
}

/// An endomorphism of `V ⊗ V` as an `n² × n²` matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorOp<S: Scalar> {
    n: usize,
    matrix: Matrix<S>,
}

/// The three leg operators of `R`, computed once.
#[derive(Clone, Debug)]
pub struct Legs<S: Scalar> {
    pub r12: Matrix<S>,
    pub r13: Matrix<S>,
    pub r23: Matrix<S>,
}

/// Truth values of every condition the crate can decide for one operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolutionReport {
    pub hopf: bool,
    pub pentagon: bool,
    pub qybe: bool,
    pub commutative: bool,
    pub cocommutative: bool,
    pub bijective: bool,
}

impl<S: Scalar> TensorOp<S> {
    pub fn new(n: usize, matrix: Matrix<S>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ShapeMismatch("dimension n must be positive".into()));
        }
        if matrix.rows() != n * n || matrix.cols() != n * n {
            return Err(Error::ShapeMismatch(format!(
                "expected {0}x{0} matrix for n={n}, got {1}x{2}",
                n * n,
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(TensorOp { n, matrix })
    }

    pub fn from_i64_rows(field: &S::Field, n: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(n, Matrix::from_i64_rows(field, rows)?)
    }

    pub fn identity(field: &S::Field, n: usize) -> Self {
        TensorOp { n, matrix: Matrix::identity(field, n * n) }
    }

    /// The switch map `τ(v ⊗ w) = w ⊗ v`.
    pub fn switch(field: &S::Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n * n, n * n);
        for a in 0..n {
            for b in 0..n {
                m.set(b * n + a, a * n + b, field.one());
            }
        }
        TensorOp { n, matrix: m }
    }

    /// `f ⊗ g`.
    pub fn pair_tensor(f: &EndoV<S>, g: &EndoV<S>) -> Result<Self> {
        if f.n() != g.n() {
            return Err(Error::ShapeMismatch("f and g act on spaces of different dimension".into()));
        }
        Ok(TensorOp { n: f.n(), matrix: f.matrix().kron(g.matrix()) })
    }

    /// A matrix with independent entries from the field's `random`.
    pub fn random<R: Rng + ?Sized>(field: &S::Field, n: usize, rng: &mut R) -> Self {
        let nn = n * n;
        let rows = (0..nn).map(|_| (0..nn).map(|_| field.random(rng)).collect()).collect();
        TensorOp { n, matrix: Matrix::from_rows(field, rows).expect("square") }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &S::Field {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    /// Entry at row `(i, j)`, column `(a, b)` (all 0-based).
    pub fn entry(&self, i: usize, j: usize, a: usize, b: usize) -> &S {
        self.matrix.get(i * self.n + j, a * self.n + b)
    }

    pub fn compose(&self, other: &Self) -> Self {
        TensorOp { n: self.n, matrix: &self.matrix * &other.matrix }
    }

    /// `τ R τ`.
    pub fn twisted(&self) -> Self {
        let t = Self::switch(self.field(), self.n);
        t.compose(self).compose(&t)
    }

    /// The operator acting on legs `which` of `V ⊗ V ⊗ V`.
    pub fn leg(&self, which: Leg) -> Matrix<S> {
        let n = self.n;
        let field = self.field();
        match which {
            Leg::L12 => self.matrix.kron(&Matrix::identity(field, n)),
            Leg::L23 => Matrix::identity(field, n).kron(&self.matrix),
            Leg::L13 => {
                let mut out = Matrix::zeros(field, n * n * n, n * n * n);
                for row in 0..n * n {
                    for col in 0..n * n {
                        let v = self.matrix.get(row, col);
                        if v.is_zero() {
                            continue;
                        }
                        let (a, c) = (row / n, row % n);
                        let (a2, c2) = (col / n, col % n);
                        for b in 0..n {
                            out.set((a * n + b) * n + c, (a2 * n + b) * n + c2, v.clone());
                        }
                    }
                }
                out
            }
        }
    }

    pub fn legs(&self) -> Legs<S> {
        Legs { r12: self.leg(Leg::L12), r13: self.leg(Leg::L13), r23: self.leg(Leg::L23) }
    }

    pub fn check_hopf(&self) -> bool {
        self.legs().hopf()
    }

    pub fn check_pentagon(&self) -> bool {
        self.legs().pentagon()
    }

    pub fn check_qybe(&self) -> bool {
        self.legs().qybe()
    }

    /// `R12 R13 = R13 R12`.
    pub fn check_commutative(&self) -> bool {
        self.legs().commutative()
    }

    /// `R13 R23 = R23 R13`.
    pub fn check_cocommutative(&self) -> bool {
        self.legs().cocommutative()
    }

    pub fn check(&self, eq: Equation) -> bool {
        self.legs().satisfies(eq)
    }

    pub fn is_bijective(&self) -> bool {
        self.matrix.rank() == self.n * self.n
    }

    pub fn report(&self) -> SolutionReport {
        let legs = self.legs();
        SolutionReport {
            hopf: legs.hopf(),
            pentagon: legs.pentagon(),
            qybe: legs.qybe(),
            commutative: legs.commutative(),
            cocommutative: legs.cocommutative(),
            bijective: self.is_bijective(),
        }
    }

    pub fn invert(&self) -> Result<Self> {
        Ok(TensorOp { n: self.n, matrix: self.matrix.inverse()? })
    }

    /// `(u ⊗ u) R (u ⊗ u)⁻¹`.
    pub fn conjugate(&self, u: &EndoV<S>) -> Result<Self> {
        if u.n() != self.n {
            return Err(Error::ShapeMismatch("conjugating map acts on a different space".into()));
        }
        let uu = u.matrix().kron(u.matrix());
        let uu_inv = uu.inverse()?;
        Ok(TensorOp { n: self.n, matrix: &(&uu * &self.matrix) * &uu_inv })
    }

    pub fn to_structure_constants(&self) -> StructureConstants<S> {
        let n = self.n;
        let mut data = Vec::with_capacity(n.pow(4));
        for u in 0..n {
            for v in 0..n {
                for j in 0..n {
                    for i in 0..n {
                        data.push(self.matrix.get(i * n + j, v * n + u).clone());
                    }
                }
            }
        }
        StructureConstants { n, field: self.field().clone(), data }
    }

    pub fn from_structure_constants(x: &StructureConstants<S>) -> Self {
        let n = x.n;
        let m = Matrix::from_fn(&x.field, n * n, n * n, |row, col| {
            let (i, j) = (row / n, row % n);
            let (v, u) = (col / n, col % n);
            x.get(u, v, j, i).clone()
        });
        TensorOp { n, matrix: m }
    }
}

impl<S: Scalar> Legs<S> {
    pub fn hopf(&self) -> bool {
        &(&self.r23 * &self.r13) * &self.r12 == &self.r12 * &self.r23
    }

    pub fn pentagon(&self) -> bool {
        &(&self.r12 * &self.r13) * &self.r23 == &self.r23 * &self.r12
    }

    pub fn qybe(&self) -> bool {
        &(&self.r12 * &self.r13) * &self.r23 == &(&self.r23 * &self.r13) * &self.r12
    }

    pub fn commutative(&self) -> bool {
        &self.r12 * &self.r13 == &self.r13 * &self.r12
    }

    pub fn cocommutative(&self) -> bool {
        &self.r13 * &self.r23 == &self.r23 * &self.r13
    }

    pub fn satisfies(&self, eq: Equation) -> bool {
        match eq {
            Equation::Hopf => self.hopf(),
            Equation::Pentagon => self.pentagon(),
            Equation::Qybe => self.qybe(),
        }
    }

    /// `R23 R13 R12 - R12 R23`, the failure of the Hopf equation.
    pub fn hopf_defect(&self) -> Matrix<S> {
        &(&(&self.r23 * &self.r13) * &self.r12) - &(&self.r12 * &self.r23)
    }

    /// `R12 R13 - R13 R12`.
    pub fn commutator_defect(&self) -> Matrix<S> {
        &(&self.r12 * &self.r13) - &(&self.r13 * &self.r12)
    }
}

impl<S: Scalar> fmt::Debug for TensorOp<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorOp(n={}) {:?}", self.n, self.matrix)
    }
}

/// The four-index array `x[u][v][j][i]` (0-based) of an operator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureConstants<S: Scalar> {
    n: usize,
    field: S::Field,
    data: Vec<S>,
}

impl<S: Scalar> StructureConstants<S> {
    /// Builds constants from a nested `x[u][v][j][i]` array.
    pub fn from_nested(field: &S::Field, x: Vec<Vec<Vec<Vec<S>>>>) -> Result<Self> {
        let n = x.len();
        let ok =
            n > 0 && x.iter().all(|a| a.len() == n && a.iter().all(|b| b.len() == n && b.iter().all(|c| c.len() == n)));
        if !ok {
            return Err(Error::ShapeMismatch("structure constants must be an n×n×n×n array".into()));
        }
        let data: Vec<S> = x.into_iter().flatten().flatten().flatten().collect();
        if data.iter().any(|s| s.field() != *field) {
            return Err(Error::FieldMismatch("structure constant outside the declared field".into()));
        }
        Ok(StructureConstants { n, field: field.clone(), data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &S::Field {
        &self.field
    }

    /// `x_{uv}^{ji}` with 0-based indices.
    #[inline]
    pub fn get(&self, u: usize, v: usize, j: usize, i: usize) -> &S {
        let n = self.n;
        &self.data[((u * n + v) * n + j) * n + i]
    }

    /// Nonzero constants as 0-based `((u, v, j, i), value)`, in index order.
    pub fn nonzero(&self) -> Vec<((usize, usize, usize, usize), S)> {
        let n = self.n;
        let mut out = Vec::new();
        for u in 0..n {
            for v in 0..n {
                for j in 0..n {
                    for i in 0..n {
                        let x = self.get(u, v, j, i);
                        if !x.is_zero() {
                            out.push(((u, v, j, i), x.clone()));
                        }
                    }
                }
            }
        }
        out
    }
}
