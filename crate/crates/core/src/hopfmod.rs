//! Hopf modules: the module/comodule structure on `V` determined by an
//! operator `R`, compatibility checks against a presented bialgebra, the
//! induced operator `R(m ⊗ n) = Σ n₍₁₎·m ⊗ n₍₀₎`, and bialgebra maps out of
//! `B(R)`.

use std::sync::Arc;

use crate::bialg::StructureBialgebra;
use crate::error::{Error, Result};
use crate::exactnum::{Scalar, ScalarField};
use crate::freealg::{Alphabet, NCPoly, Word};
use crate::matrix::Matrix;
use crate::rewrite::RewriteSystem;
use crate::tensor::TensorOp;

/// `M = k^n` with `c_ju` acting by `action[j*n + u]` and the comatrix
/// coaction `ρ(m_l) = Σ_v m_v ⊗ c_vl`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfModuleData<S: Scalar> {
    n: usize,
    field: S::Field,
    action: Vec<Matrix<S>>,
    /// Free-form name of the bialgebra this module is meant for.
    pub ambient: Option<String>,
}

impl<S: Scalar> HopfModuleData<S> {
    pub fn new(field: &S::Field, n: usize, action: Vec<Matrix<S>>) -> Result<Self> {
        if n == 0 || action.len() != n * n || action.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::ShapeMismatch(format!("need {} action matrices of size {n}x{n}", n * n)));
        }
        Ok(HopfModuleData { n, field: field.clone(), action, ambient: None })
    }

    /// `c_ju · m_v = Σ_i x_{uv}^{ji} m_i`.
    pub fn from_operator(r: &TensorOp<S>) -> Self {
        let n = r.n();
        let x = r.to_structure_constants();
        let action = (0..n * n)
            .map(|g| {
                let (j, u) = (g / n, g % n);
                Matrix::from_fn(r.field(), n, n, |i, v| x.get(u, v, j, i).clone())
            })
            .collect();
        HopfModuleData { n, field: r.field().clone(), action, ambient: None }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &S::Field {
        &self.field
    }

    pub fn alphabet(&self) -> Arc<Alphabet> {
        Alphabet::comatrix(self.n)
    }

    /// Action matrix of `c_ju`, 0-based.
    pub fn generator_action(&self, j: usize, u: usize) -> &Matrix<S> {
        &self.action[j * self.n + u]
    }

    pub fn actions(&self) -> &[Matrix<S>] {
        &self.action
    }

    pub fn set_generator_action(&mut self, j: usize, u: usize, m: Matrix<S>) {
        self.action[j * self.n + u] = m;
    }

    pub fn act_word(&self, w: &Word) -> Matrix<S> {
        let mut acc = Matrix::identity(&self.field, self.n);
        for &l in w.letters() {
            acc = &acc * &self.action[l as usize];
        }
        acc
    }

    pub fn act_poly(&self, p: &NCPoly<S>) -> Matrix<S> {
        let mut acc = Matrix::zeros(&self.field, self.n, self.n);
        for (w, c) in p.terms() {
            acc = &acc + &self.act_word(w).scale(c);
        }
        acc
    }

    /// Applying `ε` to the coaction's second leg gives back `m_l`.
    pub fn coaction_is_counital(&self) -> bool {
        // ρ(m_l) = Σ_v m_v ⊗ c_vl and ε(c_vl) = δ_vl.
        let a = self.alphabet();
        (0..self.n).all(|l| {
            (0..self.n).all(|v| {
                let e = NCPoly::<S>::gen(&a, &self.field, v, l).eps().expect("comatrix");
                e.is_one() == (v == l) && e.is_zero() == (v != l)
            })
        })
    }

    /// `R(m_a ⊗ m_b) = Σ_v c_vb·m_a ⊗ m_v`.
    pub fn induced_r(&self) -> TensorOp<S> {
        let n = self.n;
        let mut m = Matrix::zeros(&self.field, n * n, n * n);
        for a in 0..n {
            for b in 0..n {
                for v in 0..n {
                    let act = self.generator_action(v, b);
                    for i in 0..n {
                        let e = act.get(i, a);
                        if !e.is_zero() {
                            m.add_at(i * n + v, a * n + b, e);
                        }
                    }
                }
            }
        }
        TensorOp::new(n, m).expect("n²×n²")
    }

    /// Compatibility `ρ(h·m) = Σ h₍₁₎·m₍₀₎ ⊗ h₍₂₎m₍₁₎` in `M ⊗ B` for the
    /// generators `h = c_jk` and basis vectors `m_l`, second legs reduced.
    pub fn check_hopf_compat(&self, rs: &RewriteSystem<S>) -> bool {
        let a = self.alphabet();
        let f = &self.field;
        let n = self.n;
        let c = |i: usize, j: usize| NCPoly::<S>::gen(&a, f, i, j);
        (0..n).all(|j| {
            (0..n).all(|k| {
                (0..n).all(|l| {
                    (0..n).all(|i| {
                        let mut lhs = NCPoly::zero(&a, f);
                        for al in 0..n {
                            lhs = &lhs + &c(i, al).scale(self.generator_action(j, k).get(al, l));
                        }
                        let mut rhs = NCPoly::zero(&a, f);
                        for u in 0..n {
                            for v in 0..n {
                                let coeff = self.generator_action(j, u).get(i, v);
                                if !coeff.is_zero() {
                                    rhs = &rhs + &(&c(u, k) * &c(v, l)).scale(coeff);
                                }
                            }
                        }
                        rs.normal_form(&(&lhs - &rhs)).is_zero()
                    })
                })
            })
        })
    }

    /// The same compatibility for every word of length at most `max_len`.
    pub fn check_hopf_compat_words(&self, rs: &RewriteSystem<S>, max_len: usize) -> bool {
        let a = self.alphabet();
        let f = &self.field;
        let n = self.n;
        let words: Vec<Word> = (0..=max_len).flat_map(|len| Word::all_of_length(n * n, len)).collect();
        words.iter().all(|h| {
            let act_h = self.act_word(h);
            let delta = NCPoly::<S>::word(&a, f, h.clone()).delta().expect("comatrix");
            (0..n).all(|l| {
                (0..n).all(|i| {
                    let mut lhs = NCPoly::zero(&a, f);
                    for al in 0..n {
                        lhs = &lhs + &NCPoly::gen(&a, f, i, al).scale(act_h.get(al, l));
                    }
                    let mut rhs = NCPoly::zero(&a, f);
                    for ((h1, h2), coeff) in delta.terms() {
                        let act1 = self.act_word(h1);
                        for v in 0..n {
                            let k = coeff.clone() * act1.get(i, v);
                            if !k.is_zero() {
                                let term = NCPoly::word(&a, f, h2.clone());
                                rhs = &rhs + &(&term * &NCPoly::gen(&a, f, v, l)).scale(&k);
                            }
                        }
                    }
                    rs.normal_form(&(&lhs - &rhs)).is_zero()
                })
            })
        })
    }

    /// `I · M = 0`.
    pub fn check_annihilation(&self, relations: &[NCPoly<S>]) -> bool {
        relations.iter().all(|r| self.act_poly(r).is_zero())
    }

    /// Descends to the finite-dimensional quotient presented by `rs`:
    /// basis elements act through their representative words and
    /// `ρ(m_l) = Σ_v m_v ⊗ [c_vl]`.
    pub fn descend(&self, rs: &RewriteSystem<S>) -> Result<TableHopfModule<S>> {
        let h = rs.quotient_bialgebra(None)?;
        let basis = rs.basis_words()?;
        let a = self.alphabet();
        let action = basis.iter().map(|w| self.act_word(w)).collect();
        let coaction = (0..self.n)
            .map(|l| {
                let rows = (0..self.n).map(|v| rs.coordinates(&basis, &NCPoly::gen(&a, &self.field, v, l))).collect();
                Matrix::from_rows(&self.field, rows).expect("rectangular")
            })
            .collect();
        TableHopfModule::new(h, self.n, action, coaction)
    }
}

/// A left module and right comodule `M` over a bialgebra given by tables.
/// `action[e]` is the matrix of basis element `e` on `M`; `coaction[l]` is the
/// grid of `ρ(m_l)`, entry `(v, e)` multiplying `m_v ⊗ e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableHopfModule<S: Scalar> {
    bialgebra: StructureBialgebra<S>,
    dim: usize,
    action: Vec<Matrix<S>>,
    coaction: Vec<Matrix<S>>,
}

/// Result of [`verify_morphism`], one flag per condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MorphismReport {
    /// Every source relation evaluates to zero.
    pub relations: bool,
    /// `Δ(f(c_jk)) = Σ_u f(c_ju) ⊗ f(c_uk)` and `ε(f(c_jk)) = δ_jk`.
    pub coalgebra_map: bool,
    /// `(I ⊗ f)ρ = ρ′`.
    pub coaction: bool,
    /// `f(c_ij)` acts on `M` as `c_ij` does.
    pub action: bool,
}

impl MorphismReport {
    pub fn holds(&self) -> bool {
        self.relations && self.coalgebra_map && self.coaction && self.action
    }
}

impl<S: Scalar> TableHopfModule<S> {
    pub fn new(
        bialgebra: StructureBialgebra<S>,
        dim: usize,
        action: Vec<Matrix<S>>,
        coaction: Vec<Matrix<S>>,
    ) -> Result<Self> {
        let d = bialgebra.dim();
        let ok = action.len() == d
            && action.iter().all(|m| m.rows() == dim && m.cols() == dim)
            && coaction.len() == dim
            && coaction.iter().all(|m| m.rows() == dim && m.cols() == d);
        if !ok {
            return Err(Error::ShapeMismatch("module tables inconsistent with dimensions".into()));
        }
        Ok(TableHopfModule { bialgebra, dim, action, coaction })
    }

    /// `H` over itself: left multiplication and `ρ = Δ`.
    pub fn regular(h: &StructureBialgebra<S>) -> Self {
        let d = h.dim();
        let f = h.field();
        let action = (0..d).map(|e| Matrix::from_fn(f, d, d, |i, a| h.mult_table()[e][a][i].clone())).collect();
        let coaction = h.comult_table().to_vec();
        TableHopfModule { bialgebra: h.clone(), dim: d, action, coaction }
    }

    /// `H` over its co-opposite: left multiplication and `ρ = Δ^cop`.
    pub fn regular_cop(h: &StructureBialgebra<S>) -> Result<Self> {
        let cop = h.co_opposite()?;
        let mut m = Self::regular(&cop);
        m.bialgebra = cop;
        Ok(m)
    }

    pub fn bialgebra(&self) -> &StructureBialgebra<S> {
        &self.bialgebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix<S>] {
        &self.action
    }

    pub fn coaction(&self) -> &[Matrix<S>] {
        &self.coaction
    }

    fn act(&self, x: &[S]) -> Matrix<S> {
        let f = self.bialgebra.field();
        let mut acc = Matrix::zeros(f, self.dim, self.dim);
        for (e, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            acc = &acc + &self.action[e].scale(c);
        }
        acc
    }

    /// `R(m_a ⊗ m_b) = Σ m_b₍₁₎·m_a ⊗ m_b₍₀₎`.
    pub fn induced_r(&self) -> TensorOp<S> {
        let n = self.dim;
        let f = self.bialgebra.field();
        let mut m = Matrix::zeros(f, n * n, n * n);
        for a in 0..n {
            for b in 0..n {
                for v in 0..n {
                    for e in 0..self.bialgebra.dim() {
                        let k = self.coaction[b].get(v, e);
                        if k.is_zero() {
                            continue;
                        }
                        for i in 0..n {
                            let x = self.action[e].get(i, a);
                            if !x.is_zero() {
                                m.add_at(i * n + v, a * n + b, &(k.clone() * x));
                            }
                        }
                    }
                }
            }
        }
        TensorOp::new(n, m).expect("n²×n²")
    }

    /// Module, comodule and Hopf-module axioms on all basis elements.
    pub fn check_axioms(&self) -> bool {
        let h = &self.bialgebra;
        let f = h.field();
        let d = h.dim();
        let n = self.dim;
        let module = self.act(h.unit()).is_identity()
            && (0..d).all(|a| {
                (0..d).all(|b| {
                    self.act(&h.mul(&h.basis_vector(a), &h.basis_vector(b))) == &self.action[a] * &self.action[b]
                })
            });
        // (ρ ⊗ I)ρ = (I ⊗ Δ)ρ and (I ⊗ ε)ρ = I.
        let comodule = (0..n).all(|l| {
            let grid = &self.coaction[l];
            let mut left = vec![f.zero(); n * d * d];
            let mut right = left.clone();
            for v in 0..n {
                for e in 0..d {
                    let k = grid.get(v, e);
                    if k.is_zero() {
                        continue;
                    }
                    for w in 0..n {
                        for g in 0..d {
                            let c = self.coaction[v].get(w, g);
                            if !c.is_zero() {
                                left[(w * d + g) * d + e] += k.clone() * c;
                            }
                        }
                    }
                    let delta = &h.comult_table()[e];
                    for g in 0..d {
                        for e2 in 0..d {
                            let c = delta.get(g, e2);
                            if !c.is_zero() {
                                right[(v * d + g) * d + e2] += k.clone() * c;
                            }
                        }
                    }
                }
            }
            let counit_ok = (0..n).all(|v| {
                let mut acc = f.zero();
                for e in 0..d {
                    acc += grid.get(v, e).clone() * &h.counit()[e];
                }
                if v == l {
                    acc.is_one()
                } else {
                    acc.is_zero()
                }
            });
            left == right && counit_ok
        });
        module && comodule && self.check_compat()
    }

    /// `ρ(h·m) = Σ h₍₁₎·m₍₀₎ ⊗ h₍₂₎m₍₁₎` for basis elements `h`, `m`.
    pub fn check_compat(&self) -> bool {
        let h = &self.bialgebra;
        let f = h.field();
        let d = h.dim();
        let n = self.dim;
        (0..d).all(|e| {
            (0..n).all(|l| {
                let mut lhs = Matrix::zeros(f, n, d);
                for a in 0..n {
                    let k = self.action[e].get(a, l);
                    if !k.is_zero() {
                        lhs = &lhs + &self.coaction[a].scale(k);
                    }
                }
                let mut rhs = Matrix::zeros(f, n, d);
                let delta = &h.comult_table()[e];
                for b in 0..d {
                    for c in 0..d {
                        let kd = delta.get(b, c);
                        if kd.is_zero() {
                            continue;
                        }
                        for v in 0..n {
                            for g in 0..d {
                                let kr = self.coaction[l].get(v, g);
                                if kr.is_zero() {
                                    continue;
                                }
                                let k = kd.clone() * kr;
                                let prod = &h.mult_table()[c][g];
                                for i in 0..n {
                                    let ka = self.action[b].get(i, v);
                                    if ka.is_zero() {
                                        continue;
                                    }
                                    for (t, p) in prod.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
                                        rhs.add_at(i, t, &(k.clone() * ka * p));
                                    }
                                }
                            }
                        }
                    }
                }
                lhs == rhs
            })
        })
    }
}

/// Checks that `assignment` (the image of each `c_ij`, row-major, as
/// coordinates in `target`'s bialgebra) defines the bialgebra map out of
/// the presented algebra that turns `source` into `target`.
pub fn verify_morphism<S: Scalar>(
    relations: &[NCPoly<S>],
    source: &HopfModuleData<S>,
    target: &TableHopfModule<S>,
    assignment: &[Vec<S>],
) -> Result<MorphismReport> {
    let n = source.n();
    let h = target.bialgebra();
    let f = h.field();
    if assignment.len() != n * n || assignment.iter().any(|v| v.len() != h.dim()) || target.dim() != n {
        return Err(Error::ShapeMismatch("assignment must give one element of H per generator".into()));
    }
    let eval = |p: &NCPoly<S>| -> Vec<S> {
        let mut acc = vec![f.zero(); h.dim()];
        for (w, c) in p.terms() {
            let mut prod = h.unit().to_vec();
            for &l in w.letters() {
                prod = h.mul(&prod, &assignment[l as usize]);
            }
            for (a, p) in acc.iter_mut().zip(prod) {
                *a += c.clone() * &p;
            }
        }
        acc
    };
    let relations_ok = relations.iter().all(|r| eval(r).iter().all(Scalar::is_zero));
    let fc = |j: usize, k: usize| &assignment[j * n + k];
    let coalgebra_map = (0..n).all(|j| {
        (0..n).all(|k| {
            let mut want = Matrix::zeros(f, h.dim(), h.dim());
            for u in 0..n {
                for (a, xa) in fc(j, u).iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    for (b, xb) in fc(u, k).iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                        want.add_at(a, b, &(xa.clone() * xb));
                    }
                }
            }
            let eps = h.counit_of(fc(j, k));
            h.comult(fc(j, k)) == want && if j == k { eps.is_one() } else { eps.is_zero() }
        })
    });
    let coaction = (0..n).all(|l| (0..n).all(|v| target.coaction()[l].row(v) == fc(v, l).as_slice()));
    let action = (0..n).all(|j| (0..n).all(|u| target.act(fc(j, u)) == *source.generator_action(j, u)));
    Ok(MorphismReport { relations: relations_ok, coalgebra_map, coaction, action })
}
