//! The bialgebra `B(R) = T(C)/I` of a solution `R`, with `I` generated by
//! the obstructions
//!
//! `χ(i,j,k,l) = Σ_{u,v} x_{uv}^{ji} c_uk c_vl − Σ_α x_{kl}^{jα} c_iα`,
//!
//! and the identities that make `I` a bi-ideal annihilating `V`.

use std::collections::HashSet;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::freealg::{Alphabet, NCPoly, TensorPoly};
use crate::hopfmod::HopfModuleData;
use crate::matrix::Matrix;
use crate::rewrite::RewriteSystem;
use crate::tensor::TensorOp;

/// `(i, j, k, l)`, 0-based.
pub type Index4 = (usize, usize, usize, usize);

/// All `n⁴` obstructions, zeros included, indexed by 0-based `(i,j,k,l)`.
#[derive(Debug, Clone)]
pub struct ChiTable<S: Scalar> {
    n: usize,
    alphabet: Arc<Alphabet>,
    field: S::Field,
    entries: Vec<NCPoly<S>>,
}

impl<S: Scalar> ChiTable<S> {
    pub fn of(r: &TensorOp<S>) -> Self {
        let n = r.n();
        let alphabet = Alphabet::comatrix(n);
        let field = r.field().clone();
        let x = r.to_structure_constants();
        let entries = (0..n.pow(4))
            .into_par_iter()
            .map(|idx| {
                let (i, j, k, l) = (idx / (n * n * n), (idx / (n * n)) % n, (idx / n) % n, idx % n);
                let mut p = NCPoly::zero(&alphabet, &field);
                for u in 0..n {
                    for v in 0..n {
                        let coeff = x.get(u, v, j, i);
                        if !coeff.is_zero() {
                            let w = &NCPoly::gen(&alphabet, &field, u, k) * &NCPoly::gen(&alphabet, &field, v, l);
                            p = &p + &w.scale(coeff);
                        }
                    }
                }
                for alpha in 0..n {
                    let coeff = x.get(k, l, j, alpha);
                    if !coeff.is_zero() {
                        p = &p - &NCPoly::gen(&alphabet, &field, i, alpha).scale(coeff);
                    }
                }
                p
            })
            .collect();
        ChiTable { n, alphabet, field, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    fn idx(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        ((i * self.n + j) * self.n + k) * self.n + l
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &NCPoly<S> {
        &self.entries[self.idx(i, j, k, l)]
    }

    /// Replaces one entry; used to build negative controls.
    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, p: NCPoly<S>) {
        let idx = self.idx(i, j, k, l);
        self.entries[idx] = p;
    }

    /// Nonzero obstructions in `(i,j,k,l)` order, made monic, with later
    /// scalar multiples of earlier ones dropped.
    pub fn nonzero(&self) -> Vec<(Index4, NCPoly<S>)> {
        let n = self.n;
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (idx, p) in self.entries.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let m = p.monic();
            if seen.insert(m.clone()) {
                out.push(((idx / (n * n * n), (idx / (n * n)) % n, (idx / n) % n, idx % n), m));
            }
        }
        out
    }

    /// `Δ(χ(i,j,k,l)) = Σ_{a,b} χ(i,j,a,b) ⊗ c_ak c_bl + Σ_p c_ip ⊗ χ(p,j,k,l)`
    /// and `ε(χ) = 0`, for every index.
    pub fn verify_delta(&self) -> bool {
        let n = self.n;
        let (a, f) = (&self.alphabet, &self.field);
        let c = |i, j| NCPoly::<S>::gen(a, f, i, j);
        (0..n.pow(4)).into_par_iter().all(|idx| {
            let (i, j, k, l) = (idx / (n * n * n), (idx / (n * n)) % n, (idx / n) % n, idx % n);
            let chi = &self.entries[idx];
            if !chi.eps().expect("comatrix").is_zero() {
                return false;
            }
            let mut rhs = TensorPoly::zero(a, f);
            for x in 0..n {
                for y in 0..n {
                    rhs = rhs.add(&TensorPoly::pure(self.get(i, j, x, y), &(&c(x, k) * &c(y, l))));
                }
            }
            for p in 0..n {
                rhs = rhs.add(&TensorPoly::pure(&c(i, p), self.get(p, j, k, l)));
            }
            chi.delta().expect("comatrix") == rhs
        })
    }

    pub fn eps_vanishes(&self) -> bool {
        self.entries.iter().all(|p| p.eps().expect("comatrix").is_zero())
    }
}

/// A presentation of `B(R)` (or of its commutative quotient) by relations in
/// the comatrix generators.
#[derive(Debug, Clone)]
pub struct Presentation<S: Scalar> {
    pub alphabet: Arc<Alphabet>,
    pub field: S::Field,
    pub relations: Vec<NCPoly<S>>,
    pub commutative_closure: bool,
    pub notes: Vec<String>,
}

impl<S: Scalar> Presentation<S> {
    pub fn new(n: usize, field: &S::Field, relations: Vec<NCPoly<S>>) -> Self {
        Presentation {
            alphabet: Alphabet::comatrix(n),
            field: field.clone(),
            relations: relations.into_iter().filter(|r| !r.is_zero()).map(|r| r.monic()).collect(),
            commutative_closure: false,
            notes: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.alphabet.comatrix_n().expect("comatrix alphabet")
    }

    pub fn complete(&self, max_degree: usize) -> RewriteSystem<S> {
        RewriteSystem::complete(&self.alphabet, &self.field, &self.relations, max_degree)
    }

    pub fn counit_vanishes(&self) -> bool {
        self.relations.iter().all(|r| r.eps().expect("comatrix").is_zero())
    }

    pub fn check_coideal(&self, rs: &RewriteSystem<S>) -> bool {
        rs.check_coideal(&self.relations).expect("comatrix alphabet")
    }

    /// Adjoins the given relations (e.g. `c22 − 1`).
    pub fn with_relations(&self, extra: Vec<NCPoly<S>>) -> Self {
        let mut p = self.clone();
        p.relations.extend(extra.into_iter().filter(|r| !r.is_zero()).map(|r| r.monic()));
        p
    }
}

/// `B(R)`. Refuses operators that do not solve the Hopf equation unless
/// `force` is set.
pub fn frt_presentation<S: Scalar>(r: &TensorOp<S>, force: bool) -> Result<Presentation<S>> {
    let hopf = r.check_hopf();
    if !hopf && !force {
        return Err(Error::NotHopfSolution);
    }
    let table = ChiTable::of(r);
    let rels: Vec<NCPoly<S>> = table.nonzero().into_iter().map(|(_, p)| p).collect();
    let mut p = Presentation::new(r.n(), r.field(), rels);
    if !hopf {
        p.notes.push("built without a Hopf solution: annihilation may fail".into());
    }
    Ok(p)
}

/// The commutators `[c_a, c_b]` for generator pairs `a < b`, with the
/// number of raw index tuples `(r,k,s,j)` they come from.
pub fn generator_commutators<S: Scalar>(n: usize, field: &S::Field) -> (Vec<NCPoly<S>>, usize) {
    let a = Alphabet::comatrix(n);
    let mut raw = 0;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in 0..n {
        for k in 0..n {
            for s in 0..n {
                for j in 0..n {
                    raw += 1;
                    let x = NCPoly::gen(&a, field, r, k);
                    let y = NCPoly::gen(&a, field, s, j);
                    let com = &(&x * &y) - &(&y * &x);
                    if !com.is_zero() && seen.insert(com.monic()) {
                        out.push(com.monic());
                    }
                }
            }
        }
    }
    (out, raw)
}

/// `B̄(R)`: the obstructions together with all generator commutators.
pub fn frt_commutative<S: Scalar>(r: &TensorOp<S>, force: bool) -> Result<Presentation<S>> {
    let mut p = frt_presentation(r, force)?;
    if !r.check_commutative() && !force {
        return Err(Error::NotCommutative);
    }
    let (coms, raw) = generator_commutators::<S>(r.n(), r.field());
    p.notes.push(format!("{} commutators adjoined from {} index tuples", coms.len(), raw));
    p.relations.extend(coms);
    p.commutative_closure = true;
    Ok(p)
}

pub fn verify_delta_chi<S: Scalar>(r: &TensorOp<S>) -> bool {
    ChiTable::of(r).verify_delta()
}

/// Evaluates `Σ_{r,s} P(r,s,j,k)·m_t ⊗ m_r ⊗ m_s` for every `(t,k,j)` as the
/// columns of an `n³ × n³` matrix.
fn action_side<S: Scalar>(
    data: &HopfModuleData<S>,
    poly: impl Fn(usize, usize, usize, usize) -> NCPoly<S>,
) -> Matrix<S> {
    let n = data.n();
    let f = data.field();
    let mut out = Matrix::zeros(f, n * n * n, n * n * n);
    for r in 0..n {
        for s in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let act = data.act_poly(&poly(r, s, j, k));
                    for t in 0..n {
                        for a in 0..n {
                            let v = act.get(a, t);
                            if !v.is_zero() {
                                out.add_at((a * n + r) * n + s, (t * n + k) * n + j, v);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// `(R23 R13 R12 − R12 R23)(z ⊗ m_k ⊗ m_j) = Σ_{r,s} χ(r,s,j,k)·z ⊗ m_r ⊗ m_s`.
pub fn verify_defect_identity<S: Scalar>(r: &TensorOp<S>) -> bool {
    let table = ChiTable::of(r);
    let data = HopfModuleData::from_operator(r);
    let rhs = action_side(&data, |a, b, j, k| table.get(a, b, j, k).clone());
    r.legs().hopf_defect() == rhs
}

/// `(R12 R13 − R13 R12)(z ⊗ m_k ⊗ m_j) = Σ_{r,s} (c_rk c_sj − c_sj c_rk)·z ⊗ m_r ⊗ m_s`.
pub fn verify_commutator_identity<S: Scalar>(r: &TensorOp<S>) -> bool {
    let data = HopfModuleData::from_operator(r);
    let a = data.alphabet();
    let f = r.field().clone();
    let rhs = action_side(&data, |rr, s, j, k| {
        let x = NCPoly::gen(&a, &f, rr, k);
        let y = NCPoly::gen(&a, &f, s, j);
        &(&x * &y) - &(&y * &x)
    });
    r.legs().commutator_defect() == rhs
}

/// All four unconditional identities at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityReport {
    pub delta_chi: bool,
    pub eps_chi: bool,
    pub defect: bool,
    pub commutator: bool,
}

impl IdentityReport {
    pub fn all(&self) -> bool {
        self.delta_chi && self.eps_chi && self.defect && self.commutator
    }
}

pub fn verify_identities<S: Scalar>(r: &TensorOp<S>) -> IdentityReport {
    let table = ChiTable::of(r);
    IdentityReport {
        delta_chi: table.verify_delta(),
        eps_chi: table.eps_vanishes(),
        defect: verify_defect_identity(r),
        commutator: verify_commutator_identity(r),
    }
}
