//! Named operators and presentations used by the CLI, the integration tests
//! and the acceptance run.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::bialg::{self, graded_solution, FiniteGroup, GradingMode};
use crate::error::{Error, Result};
use crate::exactnum::{Scalar, ScalarField};
use crate::freealg::{Alphabet, NCPoly, Word};
use crate::frt::{frt_presentation, Presentation};
use crate::rewrite::Relations;
use crate::tensor::TensorOp;

/// A catalogued operator. Scalar parameters are kept as text and parsed in
/// whatever field the operator is built over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fixture {
    Identity(usize),
    RQ(String),
    RQPrime(String),
    RQDblPrime(String),
    /// `π₁ ⊗ π¹` on `k^n ⊗ k^n`.
    Pi1(usize),
    Char2,
    ClassicalYb(String),
    GradedC2,
    CrossedS3,
    /// Takesaki operator of `k[C_m]`.
    Takesaki(usize),
    /// Takesaki operator of `k[S₃]`.
    TakesakiS3,
    /// `β(g⊗h) = Σ g h₍₁₎ ⊗ h₍₂₎` on `k[C_m]`.
    Galois(usize),
    /// `R′(g⊗h) = Σ g₍₁₎ ⊗ S(g₍₂₎) h` on `k[C_m]`.
    GaloisPrime(usize),
}

/// `(syntax, description)` for every catalogue entry.
pub const CATALOG: &[(&str, &str)] = &[
    ("identity:<n>", "identity of k^n ⊗ k^n"),
    ("r_q:<q>", "f_q ⊗ (I - f_q), f_q = [[1,q],[0,0]]"),
    ("r_q_prime:<q>", "f_q ⊗ I"),
    ("r_q_dblprime:<q>", "f_q ⊗ f_q"),
    ("pi1:<n>", "π₁ ⊗ (I - π₁) on k^n ⊗ k^n"),
    ("char2", "4x4 solution exactly in characteristic two"),
    ("classical_yb:<q>", "two-dimensional Yang-Baxter operator, q ≠ 0"),
    ("graded_c2", "C₂-graded module k², swap action"),
    ("crossed_s3", "k[S₃] as crossed module under conjugation"),
    ("takesaki_c<m> | takesaki:<m>", "Takesaki operator of k[C_m]"),
    ("takesaki_s3", "Takesaki operator of k[S₃]"),
    ("galois_c<m> | galois:<m>", "Galois map β of k[C_m]"),
    ("galois_prime_c<m> | galois_prime:<m>", "R′(g⊗h) = g₁ ⊗ S(g₂)h on k[C_m]"),
];

fn parse_usize(s: &str, what: &str) -> Result<usize> {
    match s.parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(Error::Invalid(format!("{what}: expected a positive integer, got `{s}`"))),
    }
}

/// `"a"` or `"a/b"` in any field; `b` must be invertible there.
pub fn parse_param<S: Scalar>(field: &S::Field, text: &str) -> Result<S> {
    match text.split_once('/') {
        Some((a, b)) => field.parse(a.trim())?.div(&field.parse(b.trim())?),
        None => field.parse(text.trim()),
    }
}

fn need<'a>(name: &str, p: Option<&'a str>) -> Result<&'a str> {
    p.ok_or_else(|| Error::Invalid(format!("fixture `{name}` needs a parameter")))
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, param) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let none = |p: Option<&str>, f: Fixture| match p {
            None => Ok(f),
            Some(_) => Err(Error::Invalid(format!("fixture `{name}` takes no parameter"))),
        };
        let group_suffix = |prefix: &str| name.strip_prefix(prefix).filter(|m| !m.is_empty());
        match name {
            "identity" => Ok(Fixture::Identity(parse_usize(need(name, param)?, "identity")?)),
            "r_q" => Ok(Fixture::RQ(need(name, param)?.to_string())),
            "r_q_prime" => Ok(Fixture::RQPrime(need(name, param)?.to_string())),
            "r_q_dblprime" => Ok(Fixture::RQDblPrime(need(name, param)?.to_string())),
            "pi1" => Ok(Fixture::Pi1(parse_usize(need(name, param)?, "pi1")?)),
            "char2" => none(param, Fixture::Char2),
            "classical_yb" => Ok(Fixture::ClassicalYb(need(name, param)?.to_string())),
            "graded_c2" => none(param, Fixture::GradedC2),
            "crossed_s3" => none(param, Fixture::CrossedS3),
            "takesaki_s3" => none(param, Fixture::TakesakiS3),
            "takesaki" => Ok(Fixture::Takesaki(parse_usize(need(name, param)?, "takesaki")?)),
            "galois" => Ok(Fixture::Galois(parse_usize(need(name, param)?, "galois")?)),
            "galois_prime" => Ok(Fixture::GaloisPrime(parse_usize(need(name, param)?, "galois_prime")?)),
            _ => {
                if let Some(m) = group_suffix("galois_prime_c") {
                    none(param, Fixture::GaloisPrime(parse_usize(m, name)?))
                } else if let Some(m) = group_suffix("takesaki_c") {
                    none(param, Fixture::Takesaki(parse_usize(m, name)?))
                } else if let Some(m) = group_suffix("galois_c") {
                    none(param, Fixture::Galois(parse_usize(m, name)?))
                } else {
                    Err(Error::Invalid(format!("unknown fixture `{s}`")))
                }
            }
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fixture::Identity(n) => write!(f, "identity:{n}"),
            Fixture::RQ(q) => write!(f, "r_q:{q}"),
            Fixture::RQPrime(q) => write!(f, "r_q_prime:{q}"),
            Fixture::RQDblPrime(q) => write!(f, "r_q_dblprime:{q}"),
            Fixture::Pi1(n) => write!(f, "pi1:{n}"),
            Fixture::Char2 => write!(f, "char2"),
            Fixture::ClassicalYb(q) => write!(f, "classical_yb:{q}"),
            Fixture::GradedC2 => write!(f, "graded_c2"),
            Fixture::CrossedS3 => write!(f, "crossed_s3"),
            Fixture::Takesaki(m) => write!(f, "takesaki_c{m}"),
            Fixture::TakesakiS3 => write!(f, "takesaki_s3"),
            Fixture::Galois(m) => write!(f, "galois_c{m}"),
            Fixture::GaloisPrime(m) => write!(f, "galois_prime_c{m}"),
        }
    }
}

impl Fixture {
    pub fn build<S: Scalar>(&self, field: &S::Field) -> Result<TensorOp<S>> {
        let scalar = |q: &str| parse_param::<S>(field, q);
        Ok(match self {
            Fixture::Identity(n) => TensorOp::identity(field, *n),
            Fixture::RQ(q) => bialg::r_q(&scalar(q)?),
            Fixture::RQPrime(q) => bialg::r_q_prime(&scalar(q)?),
            Fixture::RQDblPrime(q) => bialg::r_q_dblprime(&scalar(q)?),
            Fixture::Pi1(n) => bialg::pi1_tensor_complement(field, *n),
            Fixture::Char2 => bialg::char2_matrix(field),
            Fixture::ClassicalYb(q) => bialg::classical_yb(&scalar(q)?)?,
            Fixture::GradedC2 => graded_solution(&bialg::graded_c2(field), GradingMode::Graded)?,
            Fixture::CrossedS3 => graded_solution(&bialg::crossed_s3(field), GradingMode::Crossed)?,
            Fixture::Takesaki(m) => bialg::takesaki(&bialg::group_algebra(*m, field)),
            Fixture::TakesakiS3 => bialg::takesaki(&bialg::group_algebra_of(&FiniteGroup::symmetric3(), field)),
            Fixture::Galois(m) => bialg::galois_beta(&bialg::group_algebra(*m, field))?,
            Fixture::GaloisPrime(m) => bialg::galois_rprime(&bialg::group_algebra(*m, field))?,
        })
    }

    /// Letter names for `c11, c12, c21, c22` when the quotient is usually
    /// written in single letters.
    pub fn letter_names(&self) -> Option<Vec<String>> {
        match self {
            Fixture::RQ(_) | Fixture::RQPrime(_) | Fixture::RQDblPrime(_) => Some(q_family_letters()),
            Fixture::Pi1(2) => Some(q_family_letters()),
            Fixture::Char2 => Some(char2_letters()),
            _ => None,
        }
    }

    /// A preferred basis of the quotient, when it differs from the
    /// irreducible words.
    pub fn preferred_basis(&self) -> Option<Vec<Word>> {
        match self {
            Fixture::Char2 => Some(char2_basis()),
            _ => None,
        }
    }
}

/// `x = c11, z = c12, y = c22`; `c21` keeps its raw name.
pub fn q_family_letters() -> Vec<String> {
    ["x", "z", "c[2,1]", "y"].iter().map(|s| s.to_string()).collect()
}

/// `x = c11, y = c12, z = c21, t = c22`.
pub fn char2_letters() -> Vec<String> {
    ["x", "y", "z", "t"].iter().map(|s| s.to_string()).collect()
}

const C11: u16 = 0;
const C12: u16 = 1;
const C21: u16 = 2;
const C22: u16 = 3;

/// `{1, x, y, z, zy}` in the char-2 letters.
pub fn char2_basis() -> Vec<Word> {
    vec![Word::empty(), Word::letter(C11), Word::letter(C12), Word::letter(C21), Word::new(vec![C21, C12])]
}

fn word<S: Scalar>(a: &Arc<Alphabet>, f: &S::Field, letters: &[u16]) -> NCPoly<S> {
    NCPoly::word(a, f, Word::new(letters.to_vec()))
}

/// The quotient of `B(R_0″)` by `c22 − 1`: three-dimensional with
/// `Δ(z) = x⊗z + z⊗1`.
pub fn t_k_presentation<S: Scalar>(field: &S::Field) -> Presentation<S> {
    let base = frt_presentation(&bialg::r_q_dblprime(&field.zero()), false).expect("R_0″ solves the Hopf equation");
    let a = base.alphabet.clone();
    base.with_relations(vec![&word::<S>(&a, field, &[C22]) - &NCPoly::one(&a, field)])
}

/// The quotient of `B(R_0″)` by `y^n − y, zy, xy − x, yx − x`.
pub fn b_odd_presentation<S: Scalar>(field: &S::Field, n: u32) -> Presentation<S> {
    let base = frt_presentation(&bialg::r_q_dblprime(&field.zero()), false).expect("R_0″ solves the Hopf equation");
    let a = base.alphabet.clone();
    let (x, y) = (word::<S>(&a, field, &[C11]), word::<S>(&a, field, &[C22]));
    base.with_relations(vec![
        &y.pow(n) - &y,
        word(&a, field, &[C12, C22]),
        &word::<S>(&a, field, &[C11, C22]) - &x,
        &word::<S>(&a, field, &[C22, C11]) - &x,
    ])
}

/// The three one-parameter families built from `f_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QFamily {
    /// `R_q = f_q ⊗ (I − f_q)`
    B,
    /// `R_q′ = f_q ⊗ I`
    D,
    /// `R_q″ = f_q ⊗ f_q`
    E,
}

impl QFamily {
    pub const ALL: [QFamily; 3] = [QFamily::B, QFamily::D, QFamily::E];

    pub fn name(&self) -> &'static str {
        match self {
            QFamily::B => "B_q",
            QFamily::D => "D_q",
            QFamily::E => "E_q",
        }
    }

    pub fn operator<S: Scalar>(&self, q: &S) -> TensorOp<S> {
        match self {
            QFamily::B => bialg::r_q(q),
            QFamily::D => bialg::r_q_prime(q),
            QFamily::E => bialg::r_q_dblprime(q),
        }
    }

    /// Relations for `q = 0` in the letters `x = c11, y = c22, z = c12`,
    /// together with `c21`.
    pub fn q0_relations<S: Scalar>(&self, field: &S::Field) -> Vec<NCPoly<S>> {
        let a = Alphabet::comatrix(2);
        let w = |l: &[u16]| word::<S>(&a, field, l);
        let (x, y, z) = (C11, C22, C12);
        let mut rels = vec![w(&[C21])];
        match self {
            QFamily::B => {
                rels.push(&w(&[y, x]) - &w(&[x]));
                rels.push(w(&[y, z]));
            }
            QFamily::D => {
                rels.push(&w(&[x, x]) - &w(&[x]));
                rels.push(&w(&[y, x]) - &w(&[x]));
                rels.extend([w(&[z, x]), w(&[x, z]), w(&[z, z]), w(&[y, z])]);
            }
            QFamily::E => {
                rels.push(&w(&[x, x]) - &w(&[x]));
                rels.extend([w(&[x, z]), w(&[z, x]), w(&[z, z])]);
            }
        }
        rels
    }

    /// The two-generator presentation valid for `q ≠ 0`, with the
    /// substitutions in both directions: `phi` sends `c11, c12, c21, c22` to
    /// polynomials in `A, B`, `psi` sends `A, B` back.
    pub fn two_generator_form<S: Scalar>(&self, q: &S) -> Result<TwoGeneratorForm<S>> {
        let f = q.field();
        let qinv = q.inv()?;
        let comatrix = Alphabet::comatrix(2);
        let named = Alphabet::named(["A", "B"]);
        let c = |i, j| NCPoly::gen(&comatrix, &f, i, j);
        let (a, b) = (NCPoly::letter(&named, &f, 0), NCPoly::letter(&named, &f, 1));
        let zero = NCPoly::zero(&named, &f);
        let (relations, phi, psi) = match self {
            QFamily::B => (
                vec![&(&(&a * &a) * &b) - &(&a * &b)],
                vec![(&a * &b).scale(&qinv), &b - &a.scale(q), zero, a.clone()],
                vec![c(1, 1), &c(0, 1) + &c(1, 1).scale(q)],
            ),
            QFamily::D => {
                let y = &a - &b.scale(&qinv);
                (
                    vec![&a.pow(3) - &a.pow(2), &b * &a],
                    vec![&y * &a, b.clone(), zero, y.clone()],
                    vec![&c(1, 1) + &c(0, 1).scale(&qinv), c(0, 1)],
                )
            }
            QFamily::E => (
                vec![&b.pow(3) - &b.pow(2)],
                vec![&b * &b, (&b - &a).scale(q), zero, a.clone()],
                vec![c(1, 1), &c(1, 1) + &c(0, 1).scale(&qinv)],
            ),
        };
        let frt = frt_presentation(&self.operator(q), false)?;
        Ok(TwoGeneratorForm {
            comatrix: Relations { alphabet: comatrix.clone(), relations: frt.relations },
            named: Relations { alphabet: named, relations },
            phi,
            psi,
        })
    }
}

/// A comatrix presentation, an `A, B` presentation, and the generator
/// substitutions between them.
#[derive(Debug, Clone)]
pub struct TwoGeneratorForm<S: Scalar> {
    pub comatrix: Relations<S>,
    pub named: Relations<S>,
    pub phi: Vec<NCPoly<S>>,
    pub psi: Vec<NCPoly<S>>,
}

/// `c_{i1}` for `i ≥ 2` and `c_{jk} c_{1l} − δ_{kj} δ_{l1} c11` for `j ≥ 2`.
pub fn pi1_relations<S: Scalar>(field: &S::Field, n: usize) -> Vec<NCPoly<S>> {
    let a = Alphabet::comatrix(n);
    let c = |i, j| NCPoly::<S>::gen(&a, field, i, j);
    let mut rels: Vec<NCPoly<S>> = (1..n).map(|i| c(i, 0)).collect();
    for j in 1..n {
        for k in 0..n {
            for l in 0..n {
                let mut r = &c(j, k) * &c(0, l);
                if k == j && l == 0 {
                    r = &r - &c(0, 0);
                }
                rels.push(r);
            }
        }
    }
    rels
}
