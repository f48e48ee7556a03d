//! Finite-dimensional bialgebras given by structure tables, and the
//! operators they induce on `H ⊗ H`.

mod builders;
mod graded;
mod group;

pub use builders::{
    char2_matrix, classical_yb, crossed_s3, graded_c2, pi1_tensor_complement, projection_fq, r_q, r_q_dblprime,
    r_q_prime,
};
pub use graded::{graded_solution, GradedModuleSpec, GradingMode};
pub use group::FiniteGroup;

use crate::error::{Error, Result};
use crate::exactnum::{Scalar, ScalarField};
use crate::matrix::Matrix;
use crate::tensor::TensorOp;

/// A bialgebra on the basis `e_0, …, e_{dim-1}`.
///
/// * `mult[a][b]`: coordinates of `e_a e_b`;
/// * `comult[a]`: the `dim × dim` coefficient grid of `Δ(e_a)`, entry
///   `(b, c)` multiplying `e_b ⊗ e_c`;
/// * `antipode`, when present, has `S(e_a)` as column `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureBialgebra<S: Scalar> {
    field: S::Field,
    labels: Vec<String>,
    unit: Vec<S>,
    mult: Vec<Vec<Vec<S>>>,
    comult: Vec<Matrix<S>>,
    counit: Vec<S>,
    antipode: Option<Matrix<S>>,
}

/// Outcome of [`StructureBialgebra::check_axioms`]; failures are reported,
/// never raised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomReport {
    pub associative: bool,
    pub unital: bool,
    pub coassociative: bool,
    pub counital: bool,
    /// Δ(ab) = Δ(a)Δ(b) and Δ(1) = 1 ⊗ 1.
    pub comult_multiplicative: bool,
    /// ε(ab) = ε(a)ε(b) and ε(1) = 1.
    pub counit_multiplicative: bool,
    pub antipode: Option<bool>,
}

impl AxiomReport {
    pub fn bialgebra(&self) -> bool {
        self.associative
            && self.unital
            && self.coassociative
            && self.counital
            && self.comult_multiplicative
            && self.counit_multiplicative
    }

    pub fn all_hold(&self) -> bool {
        self.bialgebra() && self.antipode.unwrap_or(true)
    }
}

impl<S: Scalar> StructureBialgebra<S> {
    pub fn new(
        field: &S::Field,
        labels: Vec<String>,
        unit: Vec<S>,
        mult: Vec<Vec<Vec<S>>>,
        comult: Vec<Matrix<S>>,
        counit: Vec<S>,
        antipode: Option<Matrix<S>>,
    ) -> Result<Self> {
        let d = labels.len();
        let shape_ok = d > 0
            && unit.len() == d
            && counit.len() == d
            && mult.len() == d
            && mult.iter().all(|row| row.len() == d && row.iter().all(|v| v.len() == d))
            && comult.len() == d
            && comult.iter().all(|m| m.rows() == d && m.cols() == d)
            && antipode.as_ref().is_none_or(|s| s.rows() == d && s.cols() == d);
        if !shape_ok {
            return Err(Error::ShapeMismatch(format!("structure tables inconsistent with dimension {d}")));
        }
        Ok(StructureBialgebra { field: field.clone(), labels, unit, mult, comult, counit, antipode })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> &S::Field {
        &self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[S] {
        &self.unit
    }

    pub fn mult_table(&self) -> &[Vec<Vec<S>>] {
        &self.mult
    }

    pub fn comult_table(&self) -> &[Matrix<S>] {
        &self.comult
    }

    pub fn counit(&self) -> &[S] {
        &self.counit
    }

    pub fn antipode(&self) -> Option<&Matrix<S>> {
        self.antipode.as_ref()
    }

    pub fn with_antipode(mut self, s: Option<Matrix<S>>) -> Self {
        self.antipode = s;
        self
    }

    pub fn basis_vector(&self, a: usize) -> Vec<S> {
        (0..self.dim()).map(|i| if i == a { self.field.one() } else { self.field.zero() }).collect()
    }

    /// Product of two elements in coordinates.
    pub fn mul(&self, x: &[S], y: &[S]) -> Vec<S> {
        let d = self.dim();
        let mut out = vec![self.field.zero(); d];
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let k = xa.clone() * yb;
                for (o, m) in out.iter_mut().zip(&self.mult[a][b]) {
                    if !m.is_zero() {
                        *o += k.clone() * m;
                    }
                }
            }
        }
        out
    }

    pub fn comult(&self, x: &[S]) -> Matrix<S> {
        let d = self.dim();
        let mut out = Matrix::zeros(&self.field, d, d);
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            out = &out + &self.comult[a].scale(xa);
        }
        out
    }

    pub fn counit_of(&self, x: &[S]) -> S {
        let mut acc = self.field.zero();
        for (xa, ea) in x.iter().zip(&self.counit) {
            acc += xa.clone() * ea;
        }
        acc
    }

    /// Product in `H ⊗ H` of two coefficient grids.
    pub fn mul_tensor(&self, x: &Matrix<S>, y: &Matrix<S>) -> Matrix<S> {
        let d = self.dim();
        let mut out = Matrix::zeros(&self.field, d, d);
        for b in 0..d {
            for c in 0..d {
                let xv = x.get(b, c);
                if xv.is_zero() {
                    continue;
                }
                for e in 0..d {
                    for f in 0..d {
                        let yv = y.get(e, f);
                        if yv.is_zero() {
                            continue;
                        }
                        let k = xv.clone() * yv;
                        let left = &self.mult[b][e];
                        let right = &self.mult[c][f];
                        for (g, lg) in left.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                            for (h, rh) in right.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                                out.add_at(g, h, &(k.clone() * lg * rh));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn unit_tensor(&self) -> Matrix<S> {
        let d = self.dim();
        Matrix::from_fn(&self.field, d, d, |b, c| self.unit[b].clone() * &self.unit[c])
    }

    /// `(Δ ⊗ I)Δ(e_a)` and `(I ⊗ Δ)Δ(e_a)` as flat `dim³` arrays.
    fn coassoc_sides(&self, a: usize) -> (Vec<S>, Vec<S>) {
        let d = self.dim();
        let mut left = vec![self.field.zero(); d * d * d];
        let mut right = left.clone();
        let delta = &self.comult[a];
        for b in 0..d {
            for c in 0..d {
                let k = delta.get(b, c);
                if k.is_zero() {
                    continue;
                }
                for x in 0..d {
                    for y in 0..d {
                        let lb = self.comult[b].get(x, y);
                        if !lb.is_zero() {
                            left[(x * d + y) * d + c] += k.clone() * lb;
                        }
                        let rc = self.comult[c].get(x, y);
                        if !rc.is_zero() {
                            right[(b * d + x) * d + y] += k.clone() * rc;
                        }
                    }
                }
            }
        }
        (left, right)
    }

    pub fn check_axioms(&self) -> AxiomReport {
        let d = self.dim();
        let e = |a: usize| self.basis_vector(a);
        let associative = (0..d).all(|a| {
            (0..d).all(|b| {
                let ab = self.mul(&e(a), &e(b));
                (0..d).all(|c| self.mul(&ab, &e(c)) == self.mul(&e(a), &self.mul(&e(b), &e(c))))
            })
        });
        let unital = (0..d).all(|a| self.mul(&self.unit, &e(a)) == e(a) && self.mul(&e(a), &self.unit) == e(a));
        let coassociative = (0..d).all(|a| {
            let (l, r) = self.coassoc_sides(a);
            l == r
        });
        let counital = (0..d).all(|a| {
            let delta = &self.comult[a];
            let left: Vec<S> = (0..d)
                .map(|c| {
                    let mut acc = self.field.zero();
                    for b in 0..d {
                        acc += self.counit[b].clone() * delta.get(b, c);
                    }
                    acc
                })
                .collect();
            let right: Vec<S> = (0..d)
                .map(|b| {
                    let mut acc = self.field.zero();
                    for c in 0..d {
                        acc += delta.get(b, c).clone() * &self.counit[c];
                    }
                    acc
                })
                .collect();
            left == e(a) && right == e(a)
        });
        let comult_multiplicative = self.comult(&self.unit) == self.unit_tensor()
            && (0..d).all(|a| {
                (0..d)
                    .all(|b| self.comult(&self.mul(&e(a), &e(b))) == self.mul_tensor(&self.comult[a], &self.comult[b]))
            });
        let counit_multiplicative = self.counit_of(&self.unit).is_one()
            && (0..d).all(|a| {
                (0..d).all(|b| self.counit_of(&self.mul(&e(a), &e(b))) == self.counit[a].clone() * &self.counit[b])
            });
        let antipode = self.antipode.as_ref().map(|s| self.antipode_law_holds(s));
        AxiomReport {
            associative,
            unital,
            coassociative,
            counital,
            comult_multiplicative,
            counit_multiplicative,
            antipode,
        }
    }

    fn antipode_law_holds(&self, s: &Matrix<S>) -> bool {
        let d = self.dim();
        (0..d).all(|a| {
            let delta = &self.comult[a];
            let mut left = vec![self.field.zero(); d];
            let mut right = left.clone();
            for b in 0..d {
                for c in 0..d {
                    let k = delta.get(b, c);
                    if k.is_zero() {
                        continue;
                    }
                    let l = self.mul(&s.column(b), &self.basis_vector(c));
                    let r = self.mul(&self.basis_vector(b), &s.column(c));
                    for i in 0..d {
                        left[i] += k.clone() * &l[i];
                        right[i] += k.clone() * &r[i];
                    }
                }
            }
            let expected: Vec<S> = self.unit.iter().map(|u| u.clone() * &self.counit[a]).collect();
            left == expected && right == expected
        })
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|a| (0..d).all(|b| self.mult[a][b] == self.mult[b][a]))
    }

    pub fn is_cocommutative(&self) -> bool {
        self.comult.iter().all(|m| *m == m.transpose())
    }

    /// The same algebra with `Δ^cop = τΔ`; the antipode, if any, is dropped
    /// unless it is invertible, in which case its inverse serves.
    pub fn co_opposite(&self) -> Result<Self> {
        let comult = self.comult.iter().map(Matrix::transpose).collect();
        let antipode = match &self.antipode {
            Some(s) => s.inverse().ok(),
            None => None,
        };
        Self::new(
            &self.field,
            self.labels.clone(),
            self.unit.clone(),
            self.mult.clone(),
            comult,
            self.counit.clone(),
            antipode,
        )
    }

    /// Re-expresses the tables in a new basis whose `k`-th vector has
    /// coordinates `new_basis[k]` in the current basis.
    pub fn change_basis(&self, new_basis: &[Vec<S>], labels: Vec<String>) -> Result<Self> {
        let d = self.dim();
        if new_basis.len() != d || labels.len() != d || new_basis.iter().any(|v| v.len() != d) {
            return Err(Error::ShapeMismatch("new basis must have dim vectors of length dim".into()));
        }
        // Columns of P are the new basis vectors; old coordinates = P * new.
        let p = Matrix::from_fn(&self.field, d, d, |r, c| new_basis[c][r].clone());
        let p_inv = p.inverse()?;
        let to_new = |v: &[S]| p_inv.apply(v);
        let unit = to_new(&self.unit);
        let mult = (0..d).map(|a| (0..d).map(|b| to_new(&self.mul(&new_basis[a], &new_basis[b]))).collect()).collect();
        let comult = (0..d)
            .map(|a| {
                let grid = self.comult(&new_basis[a]);
                // P⁻¹ grid P⁻ᵀ
                &(&p_inv * &grid) * &p_inv.transpose()
            })
            .collect();
        let counit = (0..d).map(|a| self.counit_of(&new_basis[a])).collect();
        let antipode = self.antipode.as_ref().map(|s| &(&p_inv * s) * &p);
        Self::new(&self.field, labels, unit, mult, comult, counit, antipode)
    }

    /// Renders an element with the basis labels, e.g. `x + 2 zy`.
    pub fn render(&self, x: &[S]) -> String {
        render_combination(x.iter().zip(&self.labels).map(|(c, l)| (c, l.as_str())))
    }

    pub fn render_tensor(&self, grid: &Matrix<S>) -> String {
        let labels: Vec<String> = (0..self.dim())
            .flat_map(|b| (0..self.dim()).map(move |c| (b, c)))
            .map(|(b, c)| format!("{} ⊗ {}", self.labels[b], self.labels[c]))
            .collect();
        render_combination(grid.entries().iter().zip(labels.iter().map(String::as_str)))
    }
}

pub(crate) fn render_combination<'a, S: Scalar>(terms: impl Iterator<Item = (&'a S, &'a str)>) -> String {
    let mut out = String::new();
    for (c, label) in terms {
        if c.is_zero() {
            continue;
        }
        let coeff = c.to_string();
        let (neg, mag) = match coeff.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, coeff),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag == "1" {
            out.push_str(label);
        } else if label == "1" {
            out.push_str(&mag);
        } else {
            out.push_str(&format!("{mag} {label}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// The group algebra `k[G]` with grouplike basis and antipode `g ↦ g⁻¹`.
pub fn group_algebra_of<S: Scalar>(group: &FiniteGroup, field: &S::Field) -> StructureBialgebra<S> {
    let d = group.order();
    let basis = |i: usize| (0..d).map(|k| if k == i { field.one() } else { field.zero() }).collect::<Vec<S>>();
    let mult = (0..d).map(|a| (0..d).map(|b| basis(group.mul(a, b))).collect()).collect();
    let comult = (0..d)
        .map(|a| {
            let mut m = Matrix::zeros(field, d, d);
            m.set(a, a, field.one());
            m
        })
        .collect();
    let mut antipode = Matrix::zeros(field, d, d);
    for a in 0..d {
        antipode.set(group.inverse(a), a, field.one());
    }
    StructureBialgebra {
        field: field.clone(),
        labels: group.names().to_vec(),
        unit: basis(group.identity()),
        mult,
        comult,
        counit: vec![field.one(); d],
        antipode: Some(antipode),
    }
}

/// `k[C_m]`.
pub fn group_algebra<S: Scalar>(m: usize, field: &S::Field) -> StructureBialgebra<S> {
    group_algebra_of(&FiniteGroup::cyclic(m), field)
}

/// The operator `R(g ⊗ h) = Σ h₍₁₎g ⊗ h₍₂₎` on `H ⊗ H`.
pub fn takesaki<S: Scalar>(h: &StructureBialgebra<S>) -> TensorOp<S> {
    let d = h.dim();
    let mut m = Matrix::zeros(h.field(), d * d, d * d);
    for a in 0..d {
        for b in 0..d {
            let delta = &h.comult[b];
            for c in 0..d {
                for e in 0..d {
                    let k = delta.get(c, e);
                    if k.is_zero() {
                        continue;
                    }
                    for (f, coeff) in h.mult[c][a].iter().enumerate() {
                        if !coeff.is_zero() {
                            m.add_at(f * d + e, a * d + b, &(k.clone() * coeff));
                        }
                    }
                }
            }
        }
    }
    TensorOp::new(d, m).expect("square of dimension d²")
}

/// The Galois map `β(g ⊗ h) = Σ g h₍₁₎ ⊗ h₍₂₎`.
pub fn galois_beta<S: Scalar>(h: &StructureBialgebra<S>) -> Result<TensorOp<S>> {
    if h.antipode.is_none() {
        return Err(Error::MissingAntipode);
    }
    let d = h.dim();
    let mut m = Matrix::zeros(h.field(), d * d, d * d);
    for a in 0..d {
        for b in 0..d {
            let delta = &h.comult[b];
            for c in 0..d {
                for e in 0..d {
                    let k = delta.get(c, e);
                    if k.is_zero() {
                        continue;
                    }
                    for (f, coeff) in h.mult[a][c].iter().enumerate() {
                        if !coeff.is_zero() {
                            m.add_at(f * d + e, a * d + b, &(k.clone() * coeff));
                        }
                    }
                }
            }
        }
    }
    Ok(TensorOp::new(d, m).expect("square of dimension d²"))
}

/// `R′(g ⊗ h) = Σ g₍₁₎ ⊗ S(g₍₂₎) h`.
pub fn galois_rprime<S: Scalar>(h: &StructureBialgebra<S>) -> Result<TensorOp<S>> {
    let s = h.antipode.as_ref().ok_or(Error::MissingAntipode)?;
    let d = h.dim();
    let mut m = Matrix::zeros(h.field(), d * d, d * d);
    for a in 0..d {
        for b in 0..d {
            let delta = &h.comult[a];
            for c in 0..d {
                for e in 0..d {
                    let k = delta.get(c, e);
                    if k.is_zero() {
                        continue;
                    }
                    let prod = h.mul(&s.column(e), &h.basis_vector(b));
                    for (f, coeff) in prod.iter().enumerate() {
                        if !coeff.is_zero() {
                            m.add_at(c * d + f, a * d + b, &(k.clone() * coeff));
                        }
                    }
                }
            }
        }
    }
    Ok(TensorOp::new(d, m).expect("square of dimension d²"))
}
