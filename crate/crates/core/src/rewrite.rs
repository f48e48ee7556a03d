//! Noncommutative rewriting modulo a two-sided ideal: completion by overlap
//! resolution up to a degree bound, normal forms, bases of irreducible words,
//! and the quotient bialgebra when it is finite-dimensional.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use crate::bialg::StructureBialgebra;
use crate::error::{Error, Result};
use crate::exactnum::{Scalar, ScalarField};
use crate::freealg::{Alphabet, NCPoly, TensorPoly, Word};
use crate::matrix::Matrix;

pub const DEFAULT_MAX_DEGREE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Every overlap ambiguity resolves.
    Complete,
    /// Some reduced S-polynomial above this degree was dropped; normal forms
    /// are exact only up to it.
    Capped(usize),
}

/// `lead → tail` with `tail < lead` termwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule<S: Scalar> {
    pub lead: Word,
    pub tail: NCPoly<S>,
}

impl<S: Scalar> Rule<S> {
    /// The ideal element `lead - tail`.
    pub fn poly(&self) -> NCPoly<S> {
        let lead = NCPoly::word(self.tail.alphabet(), self.tail.field(), self.lead.clone());
        &lead - &self.tail
    }
}

#[derive(Debug, Clone)]
pub struct RewriteSystem<S: Scalar> {
    alphabet: Arc<Alphabet>,
    field: S::Field,
    rules: Vec<Rule<S>>,
    status: Status,
    index: HashMap<Word, usize>,
    lead_lengths: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimensionKind {
    Finite(usize),
    /// At least this many independent words survive up to the length cap.
    LowerBound {
        count: usize,
        word_length_cap: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub kind: DimensionKind,
    /// Irreducible words of length 0, 1, 2, …
    pub hilbert_prefix: Vec<usize>,
}

impl DimensionReport {
    pub fn finite(&self) -> Option<usize> {
        match self.kind {
            DimensionKind::Finite(d) => Some(d),
            DimensionKind::LowerBound { .. } => None,
        }
    }
}

/// Overlaps `lead_a = u·o`, `lead_b = o·w` with `o` a proper nonempty
/// factor; returns `(u, w)` pairs.
fn overlaps(a: &Word, b: &Word) -> Vec<(Word, Word)> {
    let (la, lb) = (a.len(), b.len());
    let mut out = Vec::new();
    for k in 1..la.min(lb) {
        if a.letters()[la - k..] == b.letters()[..k] {
            out.push((a.slice(0, la - k), b.slice(k, lb)));
        }
    }
    out
}

struct Completion<S: Scalar> {
    sys: RewriteSystem<S>,
    max_degree: usize,
    capped: bool,
    pending: VecDeque<NCPoly<S>>,
}

impl<S: Scalar> Completion<S> {
    /// Admits `p` (after reduction) as a rule; displaced rules go back to
    /// the pending queue.
    fn admit(&mut self, p: NCPoly<S>) {
        let r = self.sys.normal_form(&p);
        if r.is_zero() {
            return;
        }
        if r.degree().unwrap_or(0) > self.max_degree {
            self.capped = true;
            return;
        }
        let r = r.monic();
        let (lead, _) = r.leading().expect("nonzero");
        let lead = lead.clone();
        let lead_poly = NCPoly::word(&self.sys.alphabet, &self.sys.field, lead.clone());
        let tail = &lead_poly - &r;
        let (keep, displaced): (Vec<Rule<S>>, Vec<Rule<S>>) =
            std::mem::take(&mut self.sys.rules).into_iter().partition(|rule| !rule.lead.contains(&lead));
        for rule in displaced {
            self.pending.push_back(rule.poly());
        }
        self.sys.rules = keep;
        self.sys.rules.push(Rule { lead, tail });
        self.sys.reindex();
        self.interreduce_tails();
    }

    fn interreduce_tails(&mut self) {
        let tails: Vec<NCPoly<S>> = self.sys.rules.iter().map(|r| self.sys.normal_form(&r.tail)).collect();
        for (rule, t) in self.sys.rules.iter_mut().zip(tails) {
            rule.tail = t;
        }
    }

    fn drain(&mut self) {
        while let Some(p) = self.pending.pop_front() {
            self.admit(p);
        }
    }

    /// One sweep over all overlaps of the current rules. Returns whether any
    /// new rule was admitted.
    fn sweep(&mut self, seen: &mut HashSet<(Word, Word)>) -> bool {
        let mut changed = false;
        let mut queue: VecDeque<(Word, Word)> = VecDeque::new();
        for a in &self.sys.rules {
            for b in &self.sys.rules {
                queue.push_back((a.lead.clone(), b.lead.clone()));
            }
        }
        while let Some((la, lb)) = queue.pop_front() {
            if !seen.insert((la.clone(), lb.clone())) {
                continue;
            }
            let (Some(&ia), Some(&ib)) = (self.sys.index.get(&la), self.sys.index.get(&lb)) else {
                continue;
            };
            let (ta, tb) = (self.sys.rules[ia].tail.clone(), self.sys.rules[ib].tail.clone());
            for (u, w) in overlaps(&la, &lb) {
                let wp = NCPoly::word(&self.sys.alphabet, &self.sys.field, w);
                let up = NCPoly::word(&self.sys.alphabet, &self.sys.field, u);
                let s = &(&ta * &wp) - &(&up * &tb);
                let before = self.sys.rules.len();
                let leads_before: Vec<Word> = self.sys.rules.iter().map(|r| r.lead.clone()).collect();
                self.pending.push_back(s);
                self.drain();
                let leads_after: Vec<Word> = self.sys.rules.iter().map(|r| r.lead.clone()).collect();
                if leads_after != leads_before || self.sys.rules.len() != before {
                    changed = true;
                    // New rules create new obligations, FIFO after the current ones.
                    for new in leads_after.iter().filter(|l| !leads_before.contains(l)) {
                        for other in &leads_after {
                            queue.push_back((new.clone(), other.clone()));
                            queue.push_back((other.clone(), new.clone()));
                        }
                    }
                }
            }
        }
        changed
    }
}

impl<S: Scalar> RewriteSystem<S> {
    /// The empty system (the free algebra itself).
    pub fn empty(alphabet: &Arc<Alphabet>, field: &S::Field) -> Self {
        RewriteSystem {
            alphabet: alphabet.clone(),
            field: field.clone(),
            rules: Vec::new(),
            status: Status::Complete,
            index: HashMap::new(),
            lead_lengths: Vec::new(),
        }
    }

    /// Completes `relations` under deglex. A reduced polynomial of degree
    /// above `max_degree` is dropped instead of becoming a rule, which makes
    /// the status `Capped`.
    pub fn complete(alphabet: &Arc<Alphabet>, field: &S::Field, relations: &[NCPoly<S>], max_degree: usize) -> Self {
        let mut c = Completion {
            sys: Self::empty(alphabet, field),
            max_degree,
            capped: false,
            pending: relations.iter().filter(|r| !r.is_zero()).cloned().collect(),
        };
        c.drain();
        // Sweeps repeat until one admits nothing, so the last sweep is a full
        // verification pass. Overlaps above the cap are examined too; only a
        // reduced S-polynomial above the cap leaves the system capped.
        loop {
            let mut seen = HashSet::new();
            if !c.sweep(&mut seen) {
                break;
            }
        }
        c.interreduce_tails();
        let mut sys = c.sys;
        sys.rules.sort_by(|a, b| a.lead.cmp(&b.lead));
        sys.reindex();
        sys.status = if c.capped { Status::Capped(max_degree) } else { Status::Complete };
        sys
    }

    /// Reassembles a system from its rules, e.g. after reading a dump.
    /// Rejects tails that are not below their leading word.
    pub fn from_rules(alphabet: &Arc<Alphabet>, field: &S::Field, rules: Vec<Rule<S>>, status: Status) -> Result<Self> {
        for r in &rules {
            if let Some((w, _)) = r.tail.leading() {
                if *w >= r.lead {
                    return Err(Error::Invalid(format!("rule tail is not below {}", r.lead.render(alphabet))));
                }
            }
        }
        let mut sys = Self::empty(alphabet, field);
        sys.rules = rules;
        sys.rules.sort_by(|a, b| a.lead.cmp(&b.lead));
        sys.reindex();
        sys.status = status;
        Ok(sys)
    }

    fn reindex(&mut self) {
        self.index = self.rules.iter().enumerate().map(|(i, r)| (r.lead.clone(), i)).collect();
        let mut lens: Vec<usize> = self.rules.iter().map(|r| r.lead.len()).collect();
        lens.sort_unstable();
        lens.dedup();
        self.lead_lengths = lens;
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn field(&self) -> &S::Field {
        &self.field
    }

    pub fn rules(&self) -> &[Rule<S>] {
        &self.rules
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn is_complete(&self) -> bool {
        self.status == Status::Complete
    }

    /// Leftmost reducible factor of `w`: `(rule index, position)`.
    fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        let letters = w.letters();
        for start in 0..letters.len() {
            for &len in &self.lead_lengths {
                if start + len > letters.len() {
                    break;
                }
                if let Some(&i) = self.index.get(&w.slice(start, start + len)) {
                    return Some((i, start));
                }
            }
        }
        None
    }

    pub fn is_reducible(&self, w: &Word) -> bool {
        self.find_redex(w).is_some()
    }

    pub fn normal_form(&self, p: &NCPoly<S>) -> NCPoly<S> {
        let mut work: BTreeMap<Word, S> = p.terms().clone();
        let mut out = NCPoly::zero(&self.alphabet, &self.field);
        while let Some((w, c)) = work.pop_last() {
            match self.find_redex(&w) {
                None => out.add_term(w, c),
                Some((i, pos)) => {
                    let rule = &self.rules[i];
                    let u = w.slice(0, pos);
                    let v = w.slice(pos + rule.lead.len(), w.len());
                    for (t, tc) in rule.tail.terms() {
                        let key = u.concat(t).concat(&v);
                        let add = c.clone() * tc;
                        match work.entry(key) {
                            std::collections::btree_map::Entry::Vacant(e) => {
                                e.insert(add);
                            }
                            std::collections::btree_map::Entry::Occupied(mut e) => {
                                *e.get_mut() += add;
                                if e.get().is_zero() {
                                    e.remove();
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn normal_form_word(&self, w: &Word) -> NCPoly<S> {
        self.normal_form(&NCPoly::word(&self.alphabet, &self.field, w.clone()))
    }

    /// Both legs reduced.
    pub fn normal_form_tensor(&self, t: &TensorPoly<S>) -> TensorPoly<S> {
        t.map_legs(|w| self.normal_form_word(w), |w| self.normal_form_word(w))
    }

    #[cfg(test)]
    fn all_overlaps_resolve(&self) -> bool {
        self.rules.iter().all(|a| {
            self.rules.iter().all(|b| {
                overlaps(&a.lead, &b.lead).into_iter().all(|(u, w)| {
                    let wp = NCPoly::word(&self.alphabet, &self.field, w);
                    let up = NCPoly::word(&self.alphabet, &self.field, u);
                    self.normal_form(&(&(&a.tail * &wp) - &(&up * &b.tail))).is_zero()
                })
            })
        })
    }

    /// Irreducible words of length at most `max_len`, grouped by length;
    /// stops early at the first empty level.
    pub fn irreducible_levels(&self, max_len: usize) -> Vec<Vec<Word>> {
        let k = self.alphabet.len() as u16;
        let mut levels = vec![vec![Word::empty()]];
        if self.is_reducible(&Word::empty()) {
            return vec![Vec::new()];
        }
        for _ in 0..max_len {
            let prev = levels.last().expect("nonempty");
            if prev.is_empty() {
                break;
            }
            let next: Vec<Word> = prev
                .iter()
                .flat_map(|w| (0..k).map(move |l| w.concat(&Word::letter(l))))
                .filter(|w| !self.has_reducible_suffix(w))
                .collect();
            levels.push(next);
        }
        levels
    }

    fn has_reducible_suffix(&self, w: &Word) -> bool {
        let n = w.len();
        self.lead_lengths.iter().any(|&len| len <= n && self.index.contains_key(&w.slice(n - len, n)))
    }

    pub fn irreducible_words(&self, max_len: usize) -> Vec<Word> {
        self.irreducible_levels(max_len).into_iter().flatten().collect()
    }

    /// Finite only when the system is complete and some level up to
    /// `max_len` has no irreducible words.
    pub fn dimension(&self, max_len: usize) -> DimensionReport {
        let cap = match self.status {
            Status::Complete => max_len,
            Status::Capped(d) => max_len.min(d),
        };
        let levels = self.irreducible_levels(cap);
        let hilbert_prefix: Vec<usize> = levels.iter().map(Vec::len).collect();
        let count = hilbert_prefix.iter().sum();
        let exhausted = hilbert_prefix.last() == Some(&0);
        let kind = if self.is_complete() && exhausted {
            DimensionKind::Finite(count)
        } else {
            DimensionKind::LowerBound { count, word_length_cap: cap }
        };
        DimensionReport { kind, hilbert_prefix }
    }

    /// The irreducible words of a complete, finite system.
    pub fn basis_words(&self) -> Result<Vec<Word>> {
        if !self.is_complete() {
            return Err(Error::IncompleteSystem);
        }
        let bound = self.rules.iter().map(|r| r.lead.len()).max().unwrap_or(0) + 1;
        let rep = self.dimension(bound.max(DEFAULT_MAX_DEGREE));
        match rep.kind {
            DimensionKind::Finite(_) => Ok(self.irreducible_words(bound.max(DEFAULT_MAX_DEGREE))),
            DimensionKind::LowerBound { count, .. } => {
                Err(Error::NotFinite(format!("at least {count} irreducible words and growing")))
            }
        }
    }

    /// Coordinates of the normal form of `p` in the basis `basis`.
    pub fn coordinates(&self, basis: &[Word], p: &NCPoly<S>) -> Vec<S> {
        let nf = self.normal_form(p);
        basis.iter().map(|w| nf.coeff(w)).collect()
    }

    /// The quotient `T(C)/I` as structure tables on the irreducible words,
    /// with `Δ` and `ε` inherited from the comatrix coalgebra. `names`
    /// optionally renames letters in the basis labels.
    pub fn quotient_bialgebra(&self, names: Option<&[String]>) -> Result<StructureBialgebra<S>> {
        if self.alphabet.comatrix_n().is_none() {
            return Err(Error::Invalid("quotient bialgebra needs the comatrix alphabet".into()));
        }
        let basis = self.basis_words()?;
        let d = basis.len();
        let pos: HashMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let labels = basis
            .iter()
            .map(|w| match names {
                Some(ns) => w.render_with(ns),
                None => w.render(&self.alphabet),
            })
            .collect();
        let f = &self.field;
        let mut unit = vec![f.zero(); d];
        unit[pos[&Word::empty()]] = f.one();
        let mult = basis
            .iter()
            .map(|a| {
                basis.iter().map(|b| self.coordinates(&basis, &NCPoly::word(&self.alphabet, f, a.concat(b)))).collect()
            })
            .collect();
        let mut comult = Vec::with_capacity(d);
        let mut counit = Vec::with_capacity(d);
        for w in &basis {
            let p = NCPoly::word(&self.alphabet, f, w.clone());
            let delta = self.normal_form_tensor(&p.delta()?);
            let mut m = Matrix::zeros(f, d, d);
            for ((a, b), c) in delta.terms() {
                m.set(pos[a], pos[b], c.clone());
            }
            comult.push(m);
            counit.push(p.eps()?);
        }
        StructureBialgebra::new(f, labels, unit, mult, comult, counit, None)
    }

    /// The quotient tables re-expressed in another basis of words, e.g.
    /// `{1, x, y, z, zy}` where the irreducible words are `{1, x, y, z, t}`.
    pub fn quotient_bialgebra_in(&self, basis: &[Word], names: Option<&[String]>) -> Result<StructureBialgebra<S>> {
        let tables = self.quotient_bialgebra(names)?;
        let irreducible = self.basis_words()?;
        let vectors: Vec<Vec<S>> = basis
            .iter()
            .map(|w| self.coordinates(&irreducible, &NCPoly::word(&self.alphabet, &self.field, w.clone())))
            .collect();
        let labels = basis
            .iter()
            .map(|w| match names {
                Some(ns) => w.render_with(ns),
                None => w.render(&self.alphabet),
            })
            .collect();
        tables.change_basis(&vectors, labels)
    }

    /// Coideal test for each relation: `ε(r) = 0` and `Δ(r)` vanishes in
    /// `B ⊗ B`. With a capped system a `true` verdict is still sound.
    pub fn check_coideal(&self, relations: &[NCPoly<S>]) -> Result<bool> {
        for r in relations {
            if !r.eps()?.is_zero() {
                return Ok(false);
            }
            if !self.normal_form_tensor(&r.delta()?).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether every relation lies in this system's ideal.
    pub fn contains_all(&self, relations: &[NCPoly<S>]) -> bool {
        relations.iter().all(|r| self.normal_form(r).is_zero())
    }

    /// Rules as text, e.g. `c[2,1] -> 0`.
    pub fn render_rules(&self, names: Option<&[String]>) -> Vec<String> {
        self.rules
            .iter()
            .map(|r| match names {
                Some(ns) => format!("{} -> {}", r.lead.render_with(ns), r.tail.render_with(ns)),
                None => format!("{} -> {}", r.lead.render(&self.alphabet), r.tail.render()),
            })
            .collect()
    }
}

/// Outcome of a bidirectional equivalence check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Equivalence {
    /// φ maps the first ideal into the second.
    pub forward: bool,
    /// ψ maps the second ideal into the first.
    pub backward: bool,
    /// ψφ ≡ id modulo the first ideal, letter by letter.
    pub round_trip_first: bool,
    /// φψ ≡ id modulo the second ideal.
    pub round_trip_second: bool,
    /// Whether a `false` above can be trusted (both systems complete).
    pub decided: bool,
}

impl Equivalence {
    pub fn equivalent(&self) -> bool {
        self.forward && self.backward && self.round_trip_first && self.round_trip_second
    }

    /// One-sided success: the substitution is at least a well-defined map.
    pub fn containment(&self) -> bool {
        self.forward
    }
}

/// A presentation `⟨alphabet | relations⟩` used for equivalence checks.
#[derive(Debug, Clone)]
pub struct Relations<S: Scalar> {
    pub alphabet: Arc<Alphabet>,
    pub relations: Vec<NCPoly<S>>,
}

/// Checks that `phi` and `psi` induce mutually inverse algebra maps between
/// the two quotients, with completion bounded by `max_degree`.
pub fn presentations_equivalent<S: Scalar>(
    field: &S::Field,
    first: &Relations<S>,
    second: &Relations<S>,
    phi: &[NCPoly<S>],
    psi: &[NCPoly<S>],
    max_degree: usize,
) -> Result<Equivalence> {
    let sys1 = RewriteSystem::complete(&first.alphabet, field, &first.relations, max_degree);
    let sys2 = RewriteSystem::complete(&second.alphabet, field, &second.relations, max_degree);
    let mut forward = true;
    for r in &first.relations {
        forward &= sys2.normal_form(&r.substitute(&second.alphabet, phi)?).is_zero();
    }
    let mut backward = true;
    for r in &second.relations {
        backward &= sys1.normal_form(&r.substitute(&first.alphabet, psi)?).is_zero();
    }
    let mut round_trip_first = true;
    for l in 0..first.alphabet.len() as u16 {
        let x = NCPoly::letter(&first.alphabet, field, l);
        let back = phi[l as usize].substitute(&first.alphabet, psi)?;
        round_trip_first &= sys1.normal_form(&(&back - &x)).is_zero();
    }
    let mut round_trip_second = true;
    for l in 0..second.alphabet.len() as u16 {
        let x = NCPoly::letter(&second.alphabet, field, l);
        let back = psi[l as usize].substitute(&second.alphabet, phi)?;
        round_trip_second &= sys2.normal_form(&(&back - &x)).is_zero();
    }
    Ok(Equivalence {
        forward,
        backward,
        round_trip_first,
        round_trip_second,
        decided: sys1.is_complete() && sys2.is_complete(),
    })
}

/// Equality of two ideals of the same free algebra.
pub fn ideals_equal<S: Scalar>(
    field: &S::Field,
    alphabet: &Arc<Alphabet>,
    a: &[NCPoly<S>],
    b: &[NCPoly<S>],
    max_degree: usize,
) -> Result<Equivalence> {
    let id: Vec<NCPoly<S>> = (0..alphabet.len() as u16).map(|l| NCPoly::letter(alphabet, field, l)).collect();
    presentations_equivalent(
        field,
        &Relations { alphabet: alphabet.clone(), relations: a.to_vec() },
        &Relations { alphabet: alphabet.clone(), relations: b.to_vec() },
        &id,
        &id,
        max_degree,
    )
}
