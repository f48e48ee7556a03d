//! Exact computations around the Hopf equation `R23 R13 R12 = R12 R23`.
//!
//! The crate decides whether an operator on `V ⊗ V` solves the Hopf,
//! pentagonal or quantum Yang-Baxter equations, builds the bialgebra `B(R)`
//! presented by the obstruction elements `χ(i,j,k,l)` of a solution,
//! completes that presentation into a noncommutative rewriting system, and
//! checks Hopf-module structures against it.
//!
//! Everything is generic over the exact [`Scalar`] type; the aliases below
//! fix it to the rationals or to a prime field.

pub mod bialg;
pub mod enumerate;
pub mod error;
pub mod exactnum;
pub mod fixtures;
pub mod freealg;
pub mod frt;
pub mod hopfmod;
pub mod json;
pub mod matrix;
pub mod rewrite;
pub mod tensor;

pub use error::{Error, Result};
pub use exactnum::{Field, Fp, FromDescriptor, PrimeField, Rational, Rationals, Scalar, ScalarField};
pub use matrix::Matrix;
pub use tensor::{EndoV, Equation, Leg, SolutionReport, StructureConstants, TensorOp};

pub type QMatrix = Matrix<Rational>;
pub type FpMatrix = Matrix<Fp>;
pub type QTensorOp = TensorOp<Rational>;
pub type FpTensorOp = TensorOp<Fp>;
pub type QPoly = freealg::NCPoly<Rational>;
pub type FpPoly = freealg::NCPoly<Fp>;
pub type QPresentation = frt::Presentation<Rational>;
pub type FpPresentation = frt::Presentation<Fp>;
pub type QRewriteSystem = rewrite::RewriteSystem<Rational>;
pub type FpRewriteSystem = rewrite::RewriteSystem<Fp>;
pub type QBialgebra = bialg::StructureBialgebra<Rational>;
pub type FpBialgebra = bialg::StructureBialgebra<Fp>;
