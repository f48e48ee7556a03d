//! The concrete bialgebras: tables, dimensions and presentations checked
//! against hand-derived oracles.

mod common;

use common::oracles::*;
use hopfeq::bialg::{self, StructureBialgebra};
use hopfeq::fixtures::{self, char2_basis, char2_letters, QFamily};
use hopfeq::freealg::{Alphabet, NCPoly, Word};
use hopfeq::frt::{frt_commutative, frt_presentation};
use hopfeq::hopfmod::TableHopfModule;
use hopfeq::rewrite::{ideals_equal, presentations_equivalent};
use hopfeq::{Fp, FpBialgebra, PrimeField, QBialgebra, Rational, Rationals, Scalar, ScalarField};

const DEG: usize = 6;

#[test]
fn char2_is_five_dimensional_with_the_expected_tables() {
    let f = f2();
    let r = bialg::char2_matrix::<Fp>(&f);
    let pres = frt_presentation(&r, false).unwrap();
    let rs = pres.complete(8);
    assert!(rs.is_complete());
    assert_eq!(rs.dimension(8).finite(), Some(5));
    let letters = char2_letters();
    let words: Vec<String> = rs.basis_words().unwrap().iter().map(|w| w.render_with(&letters)).collect();
    assert_eq!(words, ["1", "x", "y", "z", "t"]);
    assert!(pres.check_coideal(&rs));

    let tables = rs.quotient_bialgebra_in(&char2_basis(), Some(&letters)).unwrap();
    assert_eq!(tables.labels(), ["1", "x", "y", "z", "zy"]);
    assert_eq!(tables, char2_oracle());
    let report = tables.check_axioms();
    assert!(report.bialgebra());
    assert!(!tables.is_commutative() && !tables.is_cocommutative());
}

#[test]
fn char2_t_is_zy_minus_x() {
    let f = f2();
    let rs = frt_presentation(&bialg::char2_matrix::<Fp>(&f), false).unwrap().complete(8);
    let a = Alphabet::comatrix(2);
    let zy = NCPoly::<Fp>::word(&a, &f, Word::new(vec![2, 1]));
    let x = NCPoly::<Fp>::gen(&a, &f, 0, 0);
    let t = NCPoly::<Fp>::gen(&a, &f, 1, 1);
    assert_eq!(rs.normal_form(&(&zy - &x)), t);
    assert_eq!(rs.normal_form(&(&zy + &x)), t);
}

#[test]
fn char2_needs_characteristic_two() {
    assert!(bialg::char2_matrix::<Fp>(&f2()).check_hopf());
    assert!(!bialg::char2_matrix::<Rational>(&Rationals).check_hopf());
    for p in [3, 5, 7] {
        assert!(!bialg::char2_matrix::<Fp>(&PrimeField::new(p).unwrap()).check_hopf());
    }
}

#[test]
fn commutative_char2_quotient_is_three_dimensional() {
    let f = f2();
    let pres = frt_commutative(&bialg::char2_matrix::<Fp>(&f), false).unwrap();
    assert!(pres.commutative_closure);
    let rs = pres.complete(8);
    assert!(rs.is_complete());
    assert_eq!(rs.dimension(8).finite(), Some(3));
    let h = rs.quotient_bialgebra(Some(&char2_letters())).unwrap();
    assert!(h.check_axioms().bialgebra());
    assert!(h.is_commutative() && h.is_cocommutative());

    let oracle = char2_commutative_oracle();
    // X = x and Z = y + z: Δ(y + z) = x⊗(y+z) + (y+z)⊗t and t = x here.
    let irreducible = rs.basis_words().unwrap();
    let a = Alphabet::comatrix(2);
    let coords = |p: NCPoly<Fp>| rs.coordinates(&irreducible, &p);
    let one = NCPoly::one(&a, &f);
    let x = NCPoly::gen(&a, &f, 0, 0);
    let yz = &NCPoly::gen(&a, &f, 0, 1) + &NCPoly::gen(&a, &f, 1, 0);
    let rebased =
        h.change_basis(&[coords(one), coords(x), coords(yz)], vec!["1".into(), "X".into(), "Z".into()]).unwrap();
    assert_eq!(rebased, oracle);
}

#[test]
fn t_k_three_dimensional_in_every_characteristic() {
    fn check<S: Scalar>(field: &S::Field) {
        let pres = fixtures::t_k_presentation::<S>(field);
        let rs = pres.complete(8);
        assert!(rs.is_complete());
        assert!(pres.check_coideal(&rs));
        assert_eq!(rs.dimension(8).finite(), Some(3));
        let h = rs.quotient_bialgebra(Some(&fixtures::q_family_letters())).unwrap();
        assert_eq!(h, t_k_oracle(field));
        assert!(h.check_axioms().bialgebra());
        assert!(!h.is_cocommutative());
    }
    check::<Rational>(&Rationals);
    check::<Fp>(&f2());
    check::<Fp>(&PrimeField::new(7).unwrap());
}

#[test]
fn b_odd_dimensions() {
    for n in 2..=4u32 {
        let pres = fixtures::b_odd_presentation::<Rational>(&Rationals, n);
        let rs = pres.complete(8);
        assert!(rs.is_complete(), "n = {n}");
        assert!(pres.check_coideal(&rs));
        assert_eq!(rs.dimension(12).finite(), Some(2 * n as usize + 1), "n = {n}");
        let h = rs.quotient_bialgebra(Some(&fixtures::q_family_letters())).unwrap();
        assert!(h.check_axioms().bialgebra());
        assert!(!h.is_commutative() && !h.is_cocommutative());
    }
}

#[test]
fn q_zero_presentations() {
    fn check<S: Scalar>(field: &S::Field) {
        let a = Alphabet::comatrix(2);
        for fam in QFamily::ALL {
            let pres = frt_presentation(&fam.operator(&field.zero()), false).unwrap();
            let eq = ideals_equal(field, &a, &pres.relations, &fam.q0_relations(field), DEG).unwrap();
            assert!(eq.forward && eq.backward, "{} over {:?}", fam.name(), field.descriptor());
        }
    }
    check::<Rational>(&Rationals);
    check::<Fp>(&PrimeField::new(5).unwrap());
}

#[test]
fn b_zero_growth_is_unbounded_below_the_cap() {
    let pres = frt_presentation(&bialg::r_q(&Rationals.zero()), false).unwrap();
    let rs = pres.complete(DEG);
    let rep = rs.dimension(DEG);
    assert_eq!(rep.finite(), None);
    assert!(rep.hilbert_prefix.iter().all(|&c| c > 0));
    let rendered = rs.render_rules(Some(&fixtures::q_family_letters()));
    assert_eq!(rendered, ["c[2,1] -> 0", "yx -> x", "yz -> 0"]);
}

#[test]
fn pi1_relations_for_n_three() {
    let q = Rationals;
    let pres = frt_presentation(&bialg::pi1_tensor_complement::<Rational>(&q, 3), false).unwrap();
    let eq = ideals_equal(&q, &Alphabet::comatrix(3), &pres.relations, &fixtures::pi1_relations(&q, 3), DEG).unwrap();
    assert!(eq.forward && eq.backward);
}

#[test]
fn two_generator_forms() {
    fn check<S: Scalar>(q: S) {
        let f = q.field();
        for fam in QFamily::ALL {
            let form = fam.two_generator_form(&q).unwrap();
            let eq = presentations_equivalent(&f, &form.comatrix, &form.named, &form.phi, &form.psi, DEG).unwrap();
            assert!(eq.equivalent(), "{} at q = {q}: {eq:?}", fam.name());
        }
    }
    check(Rational::from_integer(1));
    check(Rational::from_integer(2));
    check(Rational::new(-1, 3).unwrap());
    let f5 = PrimeField::new(5).unwrap();
    check(f5.from_i64(3));
    check(f5.from_i64(1));
}

#[test]
fn two_generator_forms_reject_a_wrong_relation() {
    let q = Rational::from_integer(1);
    let f = Rationals;
    let mut form = QFamily::E.two_generator_form(&q).unwrap();
    let b = NCPoly::letter(&form.named.alphabet, &f, 1);
    form.named.relations = vec![&b.pow(2) - &b];
    let eq = presentations_equivalent(&f, &form.comatrix, &form.named, &form.phi, &form.psi, DEG).unwrap();
    assert!(!eq.equivalent());
}

#[test]
fn takesaki_is_the_regular_module_over_the_co_opposite() {
    fn check<S: Scalar>(h: &StructureBialgebra<S>) {
        let t = bialg::takesaki(h);
        assert!(t.check_hopf());
        assert_eq!(TableHopfModule::regular_cop(h).unwrap().induced_r(), t);
        assert_ne!(TableHopfModule::regular(h).induced_r(), t);
    }
    let tk: QBialgebra =
        fixtures::t_k_presentation::<Rational>(&Rationals).complete(8).quotient_bialgebra(None).unwrap();
    check(&tk);
    let f = f2();
    let c2: FpBialgebra =
        frt_presentation(&bialg::char2_matrix::<Fp>(&f), false).unwrap().complete(8).quotient_bialgebra(None).unwrap();
    check(&c2);
}
