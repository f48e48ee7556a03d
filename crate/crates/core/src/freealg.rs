//! The free algebra on the comatrix symbols `c_ij`, with the comatrix
//! comultiplication and counit extended multiplicatively.
//!
//! Monomials are ordered degree-lexicographically with letters in row-major
//! order `c11 < c12 < … < cnn`. The same order drives rewriting.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::{Scalar, ScalarField};

pub type Letter = u16;

/// The generating set. `Comatrix(n)` is the usual one, letter `i*n + j`
/// standing for `c_{i+1,j+1}`. `Named` alphabets carry no coalgebra and are
/// used for the alternative presentations that appear after a change of
/// generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Alphabet {
    Comatrix(usize),
    Named(Vec<String>),
}

impl Alphabet {
    pub fn comatrix(n: usize) -> Arc<Self> {
        Arc::new(Alphabet::Comatrix(n))
    }

    pub fn named<I: IntoIterator<Item = T>, T: Into<String>>(names: I) -> Arc<Self> {
        Arc::new(Alphabet::Named(names.into_iter().map(Into::into).collect()))
    }

    pub fn len(&self) -> usize {
        match self {
            Alphabet::Comatrix(n) => n * n,
            Alphabet::Named(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `Some(n)` for the comatrix alphabet on `n²` symbols.
    pub fn comatrix_n(&self) -> Option<usize> {
        match self {
            Alphabet::Comatrix(n) => Some(*n),
            Alphabet::Named(_) => None,
        }
    }

    /// Letter for `c_ij`, indices 0-based.
    pub fn gen(&self, i: usize, j: usize) -> Letter {
        let n = self.comatrix_n().expect("comatrix alphabet");
        assert!(i < n && j < n, "generator index out of range");
        (i * n + j) as Letter
    }

    /// 0-based `(i, j)` of a comatrix letter.
    pub fn indices(&self, l: Letter) -> (usize, usize) {
        let n = self.comatrix_n().expect("comatrix alphabet");
        (l as usize / n, l as usize % n)
    }

    pub fn letter_name(&self, l: Letter) -> String {
        match self {
            Alphabet::Comatrix(_) => {
                let (i, j) = self.indices(l);
                format!("c[{},{}]", i + 1, j + 1)
            }
            Alphabet::Named(v) => v[l as usize].clone(),
        }
    }

    pub fn lookup(&self, name: &str) -> Option<Letter> {
        (0..self.len() as Letter).find(|&l| self.letter_name(l) == name)
    }
}

/// A monomial. Ordered by length, then lexicographically by letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    /// First position where `pat` occurs as a factor.
    pub fn find(&self, pat: &Word) -> Option<usize> {
        if pat.len() > self.len() {
            return None;
        }
        if pat.is_empty() {
            return Some(0);
        }
        self.0.windows(pat.len()).position(|w| w == pat.0.as_slice())
    }

    pub fn contains(&self, pat: &Word) -> bool {
        self.find(pat).is_some()
    }

    /// All words of length exactly `len` over `k` letters, in increasing order.
    pub fn all_of_length(k: usize, len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out.iter().flat_map(|w| (0..k as Letter).map(move |l| w.concat(&Word::letter(l)))).collect();
        }
        out
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.is_empty() {
            return "1".into();
        }
        match alphabet {
            Alphabet::Comatrix(_) => self.0.iter().map(|&l| alphabet.letter_name(l)).collect::<Vec<_>>().join("*"),
            Alphabet::Named(_) => render_named(self.0.iter().map(|&l| alphabet.letter_name(l))),
        }
    }

    /// Renders with one display name per letter, compressing runs as `A^2`.
    pub fn render_with(&self, names: &[String]) -> String {
        if self.is_empty() {
            return "1".into();
        }
        render_named(self.0.iter().map(|&l| names[l as usize].clone()))
    }
}

fn render_named(names: impl Iterator<Item = String>) -> String {
    let mut out = String::new();
    let mut run: Option<(String, usize)> = None;
    let flush = |out: &mut String, run: &Option<(String, usize)>| {
        if let Some((name, k)) = run {
            out.push_str(name);
            if *k > 1 {
                out.push_str(&format!("^{k}"));
            }
        }
    };
    for name in names {
        match &mut run {
            Some((prev, k)) if *prev == name => *k += 1,
            _ => {
                flush(&mut out, &run);
                run = Some((name, 1));
            }
        }
    }
    flush(&mut out, &run);
    out
}

/// A noncommutative polynomial: a map from words to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NCPoly<S: Scalar> {
    alphabet: Arc<Alphabet>,
    field: S::Field,
    terms: BTreeMap<Word, S>,
}

impl<S: Scalar> NCPoly<S> {
    pub fn zero(alphabet: &Arc<Alphabet>, field: &S::Field) -> Self {
        NCPoly { alphabet: alphabet.clone(), field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(alphabet: &Arc<Alphabet>, field: &S::Field, c: S) -> Self {
        Self::term(alphabet, field, Word::empty(), c)
    }

    pub fn one(alphabet: &Arc<Alphabet>, field: &S::Field) -> Self {
        Self::constant(alphabet, field, field.one())
    }

    pub fn term(alphabet: &Arc<Alphabet>, field: &S::Field, w: Word, c: S) -> Self {
        let mut p = Self::zero(alphabet, field);
        p.add_term(w, c);
        p
    }

    pub fn word(alphabet: &Arc<Alphabet>, field: &S::Field, w: Word) -> Self {
        Self::term(alphabet, field, w, field.one())
    }

    pub fn letter(alphabet: &Arc<Alphabet>, field: &S::Field, l: Letter) -> Self {
        Self::word(alphabet, field, Word::letter(l))
    }

    /// The generator `c_ij`, 0-based indices.
    pub fn gen(alphabet: &Arc<Alphabet>, field: &S::Field, i: usize, j: usize) -> Self {
        Self::letter(alphabet, field, alphabet.gen(i, j))
    }

    pub fn from_terms(alphabet: &Arc<Alphabet>, field: &S::Field, terms: impl IntoIterator<Item = (Word, S)>) -> Self {
        let mut p = Self::zero(alphabet, field);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn field(&self) -> &S::Field {
        &self.field
    }

    pub fn terms(&self) -> &BTreeMap<Word, S> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, S> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> S {
        self.terms.get(w).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    /// The deglex-largest term.
    pub fn leading(&self) -> Option<(&Word, &S)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch("polynomials over different fields".into()));
        }
        if self.alphabet != other.alphabet {
            return Err(Error::ShapeMismatch("polynomials over different alphabets".into()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(&self.alphabet, &self.field);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.concat(b), ca.clone() * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &S) -> Self {
        let mut out = Self::zero(&self.alphabet, &self.field);
        if k.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(w, c)| (w.clone(), c.clone() * k)).collect();
        out
    }

    /// Scales so that the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.alphabet, &self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces letter `l` by `images[l]`; the result lives in the images'
    /// alphabet, `target`.
    pub fn substitute(&self, target: &Arc<Alphabet>, images: &[NCPoly<S>]) -> Result<Self> {
        if images.len() != self.alphabet.len() {
            return Err(Error::ShapeMismatch(format!(
                "substitution needs {} images, got {}",
                self.alphabet.len(),
                images.len()
            )));
        }
        if images.iter().any(|p| p.alphabet != *target || p.field != self.field) {
            return Err(Error::ShapeMismatch("substitution images in a different algebra".into()));
        }
        let mut out = NCPoly::zero(target, &self.field);
        for (w, c) in &self.terms {
            let mut prod = NCPoly::constant(target, &self.field, c.clone());
            for &l in w.letters() {
                prod = &prod * &images[l as usize];
            }
            out = &out + &prod;
        }
        Ok(out)
    }

    /// Counit, extending `ε(c_jk) = δ_jk` multiplicatively.
    pub fn eps(&self) -> Result<S> {
        let n =
            self.alphabet.comatrix_n().ok_or_else(|| Error::Invalid("counit needs the comatrix alphabet".into()))?;
        let mut acc = self.field.zero();
        for (w, c) in &self.terms {
            if w.letters().iter().all(|&l| l as usize / n == l as usize % n) {
                acc += c;
            }
        }
        Ok(acc)
    }

    /// Comultiplication, extending `Δ(c_jk) = Σ_u c_ju ⊗ c_uk` multiplicatively.
    pub fn delta(&self) -> Result<TensorPoly<S>> {
        let n =
            self.alphabet.comatrix_n().ok_or_else(|| Error::Invalid("coproduct needs the comatrix alphabet".into()))?;
        let mut out = TensorPoly::zero(&self.alphabet, &self.field);
        for (w, c) in &self.terms {
            let mut acc: Vec<(Vec<Letter>, Vec<Letter>)> = vec![(Vec::new(), Vec::new())];
            for &l in w.letters() {
                let (j, k) = (l as usize / n, l as usize % n);
                acc = acc
                    .iter()
                    .flat_map(|(a, b)| {
                        (0..n).map(move |u| {
                            let mut a2 = a.clone();
                            a2.push((j * n + u) as Letter);
                            let mut b2 = b.clone();
                            b2.push((u * n + k) as Letter);
                            (a2, b2)
                        })
                    })
                    .collect();
            }
            for (a, b) in acc {
                out.add_term(Word(a), Word(b), c.clone());
            }
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        self.render_by(|w| w.render(&self.alphabet))
    }

    pub fn render_with(&self, names: &[String]) -> String {
        self.render_by(|w| w.render_with(names))
    }

    fn render_by(&self, word: impl Fn(&Word) -> String) -> String {
        let labels: Vec<String> = self.terms.keys().rev().map(word).collect();
        let coeffs: Vec<&S> = self.terms.values().rev().collect();
        crate::bialg::render_combination(coeffs.into_iter().zip(labels.iter().map(String::as_str)))
    }
}

impl<S: Scalar> fmt::Debug for NCPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<S: Scalar> fmt::Display for NCPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<S: Scalar> std::ops::Add for &NCPoly<S> {
    type Output = NCPoly<S>;
    fn add(self, rhs: Self) -> NCPoly<S> {
        self.try_add(rhs).expect("compatible polynomials")
    }
}

impl<S: Scalar> std::ops::Sub for &NCPoly<S> {
    type Output = NCPoly<S>;
    fn sub(self, rhs: Self) -> NCPoly<S> {
        self.try_add(&-rhs).expect("compatible polynomials")
    }
}

impl<S: Scalar> std::ops::Mul for &NCPoly<S> {
    type Output = NCPoly<S>;
    fn mul(self, rhs: Self) -> NCPoly<S> {
        self.try_mul(rhs).expect("compatible polynomials")
    }
}

impl<S: Scalar> std::ops::Neg for &NCPoly<S> {
    type Output = NCPoly<S>;
    fn neg(self) -> NCPoly<S> {
        self.scale(&-self.field.one())
    }
}

/// An element of `T ⊗ T`: a map from word pairs to nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorPoly<S: Scalar> {
    alphabet: Arc<Alphabet>,
    field: S::Field,
    terms: BTreeMap<(Word, Word), S>,
}

impl<S: Scalar> TensorPoly<S> {
    pub fn zero(alphabet: &Arc<Alphabet>, field: &S::Field) -> Self {
        TensorPoly { alphabet: alphabet.clone(), field: field.clone(), terms: BTreeMap::new() }
    }

    /// `p ⊗ q`.
    pub fn pure(p: &NCPoly<S>, q: &NCPoly<S>) -> Self {
        let mut out = Self::zero(&p.alphabet, &p.field);
        for (a, ca) in &p.terms {
            for (b, cb) in &q.terms {
                out.add_term(a.clone(), b.clone(), ca.clone() * cb);
            }
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<(Word, Word), S> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: Word, b: Word, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((a, b)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, k: &S) -> Self {
        let mut out = Self::zero(&self.alphabet, &self.field);
        for ((a, b), c) in &self.terms {
            out.add_term(a.clone(), b.clone(), c.clone() * k);
        }
        out
    }

    /// Product in `T ⊗ T`, legwise concatenation.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.alphabet, &self.field);
        for ((a, b), c) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                out.add_term(a.concat(a2), b.concat(b2), c.clone() * c2);
            }
        }
        out
    }

    /// Applies linear maps to each leg: `Σ c f(a) ⊗ g(b)`.
    pub fn map_legs(&self, f: impl Fn(&Word) -> NCPoly<S>, g: impl Fn(&Word) -> NCPoly<S>) -> Self {
        let mut out = Self::zero(&self.alphabet, &self.field);
        for ((a, b), c) in &self.terms {
            let fa = f(a);
            if fa.is_zero() {
                continue;
            }
            let gb = g(b);
            for (wa, ca) in &fa.terms {
                for (wb, cb) in &gb.terms {
                    out.add_term(wa.clone(), wb.clone(), c.clone() * ca * cb);
                }
            }
        }
        out
    }

    pub fn render(&self) -> String {
        let labels: Vec<String> = self
            .terms
            .keys()
            .map(|(a, b)| format!("{} ⊗ {}", a.render(&self.alphabet), b.render(&self.alphabet)))
            .collect();
        crate::bialg::render_combination(self.terms.values().zip(labels.iter().map(String::as_str)))
    }
}

impl<S: Scalar> fmt::Debug for TensorPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{PrimeField, Rational, Rationals};
    use proptest::prelude::*;

    type P = NCPoly<Rational>;

    fn c(a: &Arc<Alphabet>, i: usize, j: usize) -> P {
        P::gen(a, &Rationals, i - 1, j - 1)
    }

    #[test]
    fn deglex_order() {
        let a = Alphabet::comatrix(2);
        let x = Word::letter(a.gen(0, 0));
        let y = Word::letter(a.gen(1, 1));
        assert!(Word::empty() < x && x < y);
        assert!(y < x.concat(&x));
        assert!(x.concat(&y) < y.concat(&x));
    }

    #[test]
    fn products() {
        let a = Alphabet::comatrix(2);
        let one = P::one(&a, &Rationals);
        let p = &c(&a, 1, 1) + &c(&a, 2, 2);
        assert_eq!(&one * &p, p);
        assert_eq!((&c(&a, 1, 1) * &c(&a, 1, 2)).render(), "c[1,1]*c[1,2]");
        let prod = &(&c(&a, 1, 1) + &c(&a, 1, 2)) * &(&c(&a, 2, 1) - &c(&a, 2, 2));
        assert_eq!(prod.len(), 4);
        assert_eq!(prod.render(), "-c[1,2]*c[2,2] + c[1,2]*c[2,1] - c[1,1]*c[2,2] + c[1,1]*c[2,1]");
    }

    #[test]
    fn comatrix_rule() {
        let a = Alphabet::comatrix(2);
        let d = c(&a, 1, 1).delta().unwrap();
        let want = TensorPoly::pure(&c(&a, 1, 1), &c(&a, 1, 1)).add(&TensorPoly::pure(&c(&a, 1, 2), &c(&a, 2, 1)));
        assert_eq!(d, want);
        assert!(c(&a, 1, 2).eps().unwrap().is_zero());
        assert!(c(&a, 1, 1).eps().unwrap().is_one());
    }

    #[test]
    fn delta_of_a_product_by_hand() {
        // Δ(c11 c22) = Σ_{u,v} c1u c2v ⊗ cu1 cv2, four terms.
        let a = Alphabet::comatrix(2);
        let d = (&c(&a, 1, 1) * &c(&a, 2, 2)).delta().unwrap();
        let mut want = TensorPoly::zero(&a, &Rationals);
        for u in 1..=2 {
            for v in 1..=2 {
                want = want.add(&TensorPoly::pure(&(&c(&a, 1, u) * &c(&a, 2, v)), &(&c(&a, u, 1) * &c(&a, v, 2))));
            }
        }
        assert_eq!(d.terms().len(), 4);
        assert_eq!(d, want);
    }

    #[test]
    fn substitution_and_named_rendering() {
        let a = Alphabet::comatrix(2);
        let ab = Alphabet::named(["A", "B"]);
        let f = Rationals;
        let aa = P::letter(&ab, &f, 0);
        let bb = P::letter(&ab, &f, 1);
        let zero = P::zero(&ab, &f);
        // c11 -> AB, c12 -> B - A, c21 -> 0, c22 -> A
        let images = vec![&aa * &bb, &bb - &aa, zero, aa.clone()];
        let p = &c(&a, 2, 2) * &c(&a, 1, 1);
        assert_eq!(p.substitute(&ab, &images).unwrap().render(), "A^2B");
        assert!(p.substitute(&ab, &images[..3]).is_err());
        assert!(bb.eps().is_err());
    }

    #[test]
    fn monic_and_mismatch() {
        let a = Alphabet::comatrix(1);
        let f = PrimeField::new(5).unwrap();
        let x = NCPoly::<crate::Fp>::gen(&a, &f, 0, 0);
        let p = &x.scale(&f.from_i64(2)) - &NCPoly::one(&a, &f);
        let m = p.monic();
        assert!(m.leading().unwrap().1.is_one());
        assert_eq!(m.coeff(&Word::empty()), f.from_i64(2));
        let g = PrimeField::new(7).unwrap();
        assert!(x.try_add(&NCPoly::gen(&a, &g, 0, 0)).is_err());
    }

    fn arb_poly(n: usize, max_len: usize) -> impl Strategy<Value = P> {
        let a = Alphabet::comatrix(n);
        let k = (n * n) as Letter;
        prop::collection::vec((prop::collection::vec(0..k, 0..=max_len), -3i64..=3), 0..5).prop_map(move |ts| {
            P::from_terms(&a, &Rationals, ts.into_iter().map(|(w, c)| (Word::new(w), Rational::from_integer(c))))
        })
    }

    type Triple = BTreeMap<(Word, Word, Word), Rational>;

    fn delta_left(t: &TensorPoly<Rational>) -> Triple {
        let a = t.alphabet.clone();
        let mut out = Triple::new();
        for ((x, y), c) in t.terms() {
            for ((x1, x2), c2) in P::word(&a, &Rationals, x.clone()).delta().unwrap().terms() {
                *out.entry((x1.clone(), x2.clone(), y.clone())).or_insert_with(|| Rational::from_integer(0)) +=
                    c.clone() * c2;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    fn delta_right(t: &TensorPoly<Rational>) -> Triple {
        let a = t.alphabet.clone();
        let mut out = Triple::new();
        for ((x, y), c) in t.terms() {
            for ((y1, y2), c2) in P::word(&a, &Rationals, y.clone()).delta().unwrap().terms() {
                *out.entry((x.clone(), y1.clone(), y2.clone())).or_insert_with(|| Rational::from_integer(0)) +=
                    c.clone() * c2;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn coassociative_and_counital(p in arb_poly(2, 4)) {
            let d = p.delta().unwrap();
            prop_assert_eq!(delta_left(&d), delta_right(&d));
            let a = p.alphabet().clone();
            let left = d.terms().iter().fold(P::zero(&a, &Rationals), |acc, ((x, y), c)| {
                let e = P::word(&a, &Rationals, x.clone()).eps().unwrap();
                &acc + &P::term(&a, &Rationals, y.clone(), c.clone() * &e)
            });
            let right = d.terms().iter().fold(P::zero(&a, &Rationals), |acc, ((x, y), c)| {
                let e = P::word(&a, &Rationals, y.clone()).eps().unwrap();
                &acc + &P::term(&a, &Rationals, x.clone(), c.clone() * &e)
            });
            prop_assert_eq!(&left, &p);
            prop_assert_eq!(&right, &p);
        }

        #[test]
        fn delta_and_eps_are_multiplicative(p in arb_poly(2, 2), q in arb_poly(2, 2)) {
            let pq = &p * &q;
            prop_assert_eq!(pq.delta().unwrap(), p.delta().unwrap().mul(&q.delta().unwrap()));
            prop_assert_eq!(pq.eps().unwrap(), p.eps().unwrap() * &q.eps().unwrap());
        }

        #[test]
        fn multiplication_is_associative(p in arb_poly(2, 2), q in arb_poly(2, 2), r in arb_poly(2, 2)) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            let canon = P::from_terms(p.alphabet(), &Rationals, p.terms().clone());
            prop_assert_eq!(canon, p);
        }
    }
}
