//! One line per acceptance criterion, all equalities exact. Exits non-zero
//! if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use common::oracles::{char2_commutative_oracle, char2_oracle, t_k_oracle};
use common::*;
use hopfeq::bialg::{self, group_algebra, takesaki};
use hopfeq::enumerate::{candidate, enumerate_solutions};
use hopfeq::fixtures::{self, char2_basis, char2_letters, Fixture, QFamily};
use hopfeq::freealg::{Alphabet, NCPoly};
use hopfeq::frt::{frt_commutative, frt_presentation, verify_identities, ChiTable};
use hopfeq::hopfmod::{verify_morphism, HopfModuleData, TableHopfModule};
use hopfeq::rewrite::{ideals_equal, presentations_equivalent, RewriteSystem};
use hopfeq::{EndoV, Equation, Fp, Leg, PrimeField, Rational, Rationals, Scalar, ScalarField, TensorOp};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const DEG: usize = 6;

struct Failure(String);

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure(s)
    }
}

impl From<hopfeq::Error> for Failure {
    fn from(e: hopfeq::Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn fp(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn fixture(name: &str) -> Fixture {
    name.parse().unwrap()
}

fn truth_table() -> Outcome {
    // (fixture, field, hopf, qybe); `None` means the verdict is not claimed.
    let expected: [(&str, Option<u64>, bool, Option<bool>); 12] = [
        ("identity:2", None, true, Some(true)),
        ("r_q:1", None, true, Some(true)),
        ("r_q_prime:1", None, true, Some(true)),
        ("r_q_dblprime:1", None, true, Some(true)),
        ("char2", Some(2), true, None),
        ("char2", None, false, None),
        ("classical_yb:2", None, false, Some(true)),
        ("graded_c2", None, true, Some(false)),
        ("crossed_s3", None, false, Some(true)),
        ("takesaki_c2", None, true, None),
        ("takesaki_c3", None, true, None),
        ("galois_c3", None, true, None),
    ];
    let mut cells = Vec::new();
    for (name, p, hopf, qybe) in expected {
        let (h, y) = match p {
            Some(p) => {
                let r = fixture(name).build::<Fp>(&fp(p))?;
                (r.check_hopf(), r.check_qybe())
            }
            None => {
                let r = fixture(name).build::<Rational>(&Rationals)?;
                (r.check_hopf(), r.check_qybe())
            }
        };
        ensure(h == hopf, || format!("{name}: hopf = {h}"))?;
        if let Some(qybe) = qybe {
            ensure(y == qybe, || format!("{name}: qybe = {y}"))?;
        }
        let mark = |b: bool| if b { "T" } else { "F" };
        cells.push(format!(
            "{name}{}=({},{})",
            p.map(|p| format!("/F{p}")).unwrap_or_default(),
            mark(h),
            qybe.map(|_| mark(y)).unwrap_or("-")
        ));
    }
    Ok(cells.join(" "))
}

fn char2_construction() -> Outcome {
    let f = fp(2);
    let r = bialg::char2_matrix::<Fp>(&f);
    let pres = frt_presentation(&r, false)?;
    let rs = pres.complete(8);
    ensure(rs.is_complete(), || "completion capped".into())?;
    let dim = rs.dimension(8).finite();
    ensure(dim == Some(5), || format!("dimension {dim:?}"))?;
    let tables = rs.quotient_bialgebra_in(&char2_basis(), Some(&char2_letters()))?;
    ensure(tables.labels() == ["1", "x", "y", "z", "zy"], || format!("basis {:?}", tables.labels()))?;
    ensure(tables == char2_oracle(), || "tables differ from the hand-built ones".into())?;
    let ax = tables.check_axioms();
    ensure(ax.bialgebra(), || format!("{ax:?}"))?;
    let dx = tables.render_tensor(&tables.comult_table()[1]);
    Ok(format!("dim 5, basis {{1, x, y, z, zy}}, Δ(x) = {dx}, axioms hold"))
}

fn presentation_equivalences() -> Outcome {
    fn at<S: Scalar>(q: S, out: &mut Vec<String>) -> Result<(), String> {
        let f = q.field();
        for fam in QFamily::ALL {
            let form = fam.two_generator_form(&q).map_err(|e| e.to_string())?;
            let eq = presentations_equivalent(&f, &form.comatrix, &form.named, &form.phi, &form.psi, DEG)
                .map_err(|e| e.to_string())?;
            ensure(eq.equivalent(), || format!("{} at q = {q}: {eq:?}", fam.name()))?;
        }
        out.push(format!("q={q}/{}", f.descriptor()));
        Ok(())
    }
    let mut done = Vec::new();
    at(Rational::from_integer(1), &mut done)?;
    at(Rational::from_integer(2), &mut done)?;
    at(fp(5).from_i64(1), &mut done)?;
    at(fp(5).from_i64(3), &mut done)?;
    Ok(format!("B, D, E two-generator forms equivalent to degree {DEG} at {}", done.join(", ")))
}

fn q_zero_presentations() -> Outcome {
    fn over<S: Scalar>(field: &S::Field) -> Result<(), String> {
        let a = Alphabet::comatrix(2);
        for fam in QFamily::ALL {
            let pres = frt_presentation(&fam.operator(&field.zero()), false).map_err(|e| e.to_string())?;
            let eq =
                ideals_equal(field, &a, &pres.relations, &fam.q0_relations(field), DEG).map_err(|e| e.to_string())?;
            ensure(eq.forward && eq.backward, || format!("{}_0 over {}: {eq:?}", fam.name(), field.descriptor()))?;
        }
        let pres = frt_presentation(&bialg::pi1_tensor_complement::<S>(field, 3), false).map_err(|e| e.to_string())?;
        let eq = ideals_equal(field, &Alphabet::comatrix(3), &pres.relations, &fixtures::pi1_relations(field, 3), DEG)
            .map_err(|e| e.to_string())?;
        ensure(eq.forward && eq.backward, || format!("B_0^3 over {}: {eq:?}", field.descriptor()))
    }
    over::<Rational>(&Rationals)?;
    over::<Fp>(&fp(5))?;
    Ok(format!("B_0^2, D_0^2, E_0^2, B_0^3 ideals equal to degree {DEG} over q and fp:5"))
}

fn unconditional_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut count = 0;
    for k in 0..500 {
        let n = 2 + k % 2;
        let ok = match (k / 2) % 4 {
            0 => {
                let r = TensorOp::<Rational>::random(&Rationals, n, &mut rng);
                verify_identities(&r).all() && ChiTable::of(&r).eps_vanishes()
            }
            w => {
                let r = TensorOp::<Fp>::random(&fp([2, 3, 5][w - 1]), n, &mut rng);
                verify_identities(&r).all() && ChiTable::of(&r).eps_vanishes()
            }
        };
        ensure(ok, || format!("sample {k} failed"))?;
        count += 1;
    }
    Ok(format!(
        "Δχ, ε(χ) = 0, defect and commutator identities on {count} random operators over q, fp:2, fp:3, fp:5, n = 2, 3"
    ))
}

fn round_trip() -> Outcome {
    let f3 = fp(3);
    let f5 = fp(5);
    let all: Vec<Fixture> = hopf_fixtures().into_iter().chain(["classical_yb:2", "crossed_s3"].map(fixture)).collect();
    for fx in &all {
        let r = fx.build::<Rational>(&Rationals)?;
        ensure(HopfModuleData::from_operator(&r).induced_r() == r, || format!("{fx} round trip"))?;
    }
    let char2 = bialg::char2_matrix::<Fp>(&fp(2));
    ensure(HopfModuleData::from_operator(&char2).induced_r() == char2, || "char2 round trip".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for k in 0..200 {
        let r = TensorOp::<Fp>::random(&f3, 2, &mut rng);
        ensure(HopfModuleData::from_operator(&r).induced_r() == r, || format!("random sample {k}"))?;
    }
    fn module_checks<S: Scalar>(r: &TensorOp<S>) -> bool {
        let Ok(pres) = frt_presentation(r, false) else { return false };
        let rs = pres.complete(8);
        let data = HopfModuleData::from_operator(r);
        data.check_annihilation(&pres.relations) && data.check_hopf_compat(&rs)
    }
    let mut hopf = 0;
    for fx in hopf_fixtures() {
        ensure(module_checks(&fx.build::<Fp>(&f5)?), || format!("{fx} over fp:5"))?;
        ensure(module_checks(&fx.build::<Rational>(&Rationals)?), || format!("{fx} over q"))?;
        hopf += 1;
    }
    ensure(module_checks(&char2), || "char2 over fp:2".into())?;
    Ok(format!(
        "{} fixtures + 200 random over fp:3 round trip; compatibility and annihilation for {} Hopf fixtures",
        all.len() + 1,
        hopf + 1
    ))
}

fn equivalence_propositions() -> Outcome {
    let f5 = fp(5);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let fixtures = hopf_fixtures();
    let mut solutions = 0;
    for k in 0..200 {
        let n = 2 + k % 2;
        let r = if k % 2 == 0 {
            let base = fixtures[k / 2 % fixtures.len()].build::<Fp>(&f5)?;
            base.conjugate(&random_invertible(&f5, base.n(), &mut rng))?
        } else {
            TensorOp::<Fp>::random(&f5, n, &mut rng)
        };
        solutions += usize::from(r.check_hopf());
        ensure(r.check_hopf() == r.twisted().check_pentagon(), || format!("sample {k}: hopf vs pentagon"))?;
    }
    for k in 0..200 {
        let n = 2 + k % 2;
        let ok = if k % 2 == 0 {
            tau_identities(&TensorOp::<Rational>::random(&Rationals, n, &mut rng))
        } else {
            tau_identities(&TensorOp::<Fp>::random(&f5, n, &mut rng))
        };
        ensure(ok, || format!("sample {k}: τ¹³ identities"))?;
    }
    let mut idempotents = 0;
    for k in 0..200 {
        let n = 2 + k % 2;
        let f = if rng.gen::<bool>() {
            random_idempotent::<Fp, _>(&f5, n, &mut rng)
        } else {
            random_endo(&f5, n, &mut rng)
        };
        let i = EndoV::identity(&f5, n);
        idempotents += usize::from(f.is_idempotent());
        let left = TensorOp::pair_tensor(&f, &i)?.check_hopf();
        let right = TensorOp::pair_tensor(&i, &f)?.check_hopf();
        ensure(left == f.is_idempotent() && right == f.is_idempotent(), || format!("sample {k}: f⊗I"))?;
    }
    Ok(format!(
        "hopf(R) ⇔ pentagon(τRτ) on 200 ({solutions} solutions), τ¹³ identities on 200, f⊗I on 200 ({idempotents} idempotent)"
    ))
}

fn tau_identities<S: Scalar>(r: &TensorOp<S>) -> bool {
    let f = r.field();
    let n = r.n();
    let t = TensorOp::switch(f, n).compose(r);
    let (t12, t23) = (t.leg(Leg::L12), t.leg(Leg::L23));
    let l = r.legs();
    let t13 = tau13::<S>(f, n);
    &(&t12 * &t23) * &t12 == &(&(&t13 * &l.r23) * &l.r13) * &l.r12
        && &(&t23 * &tau12::<S>(f, n)) * &t23 == &(&t13 * &l.r12) * &l.r23
}

fn derived_dimensions() -> Outcome {
    let f2 = fp(2);
    let pres = frt_commutative(&bialg::char2_matrix::<Fp>(&f2), false)?;
    let rs = pres.complete(8);
    ensure(rs.is_complete() && rs.dimension(8).finite() == Some(3), || "B̄(char2) not 3-dimensional".into())?;
    let h = rs.quotient_bialgebra(None)?;
    let basis = rs.basis_words()?;
    let a = Alphabet::comatrix(2);
    let coords = |p: NCPoly<Fp>| rs.coordinates(&basis, &p);
    let yz = &NCPoly::gen(&a, &f2, 0, 1) + &NCPoly::gen(&a, &f2, 1, 0);
    let rebased = h.change_basis(
        &[coords(NCPoly::one(&a, &f2)), coords(NCPoly::gen(&a, &f2, 0, 0)), coords(yz)],
        vec!["1".into(), "X".into(), "Z".into()],
    )?;
    ensure(rebased == char2_commutative_oracle(), || "B̄(char2) tables".into())?;

    fn t_k<S: Scalar>(field: &S::Field) -> Result<(), String> {
        let rs = fixtures::t_k_presentation::<S>(field).complete(8);
        ensure(rs.is_complete() && rs.dimension(8).finite() == Some(3), || "T(k) not 3-dimensional".into())?;
        let h = rs.quotient_bialgebra(Some(&fixtures::q_family_letters())).map_err(|e| e.to_string())?;
        ensure(h == t_k_oracle(field), || format!("T(k) tables over {}", field.descriptor()))
    }
    t_k::<Rational>(&Rationals)?;
    t_k::<Fp>(&f2)?;

    let mut dims = Vec::new();
    for n in 2..=4u32 {
        let rs: RewriteSystem<Rational> = fixtures::b_odd_presentation(&Rationals, n).complete(8);
        let d = rs.dimension(16).finite();
        ensure(rs.is_complete() && d == Some(2 * n as usize + 1), || format!("B_(2n+1) at n = {n}: {d:?}"))?;
        dims.push(format!("n={n}:{}", 2 * n + 1));
    }
    Ok(format!("B̄(char2) = 3, T(k) = 3 with Δ(z) = x⊗z + z⊗1, B_(2n+1) {}", dims.join(" ")))
}

fn universal_property() -> Outcome {
    let f2 = fp(2);
    let r = bialg::char2_matrix::<Fp>(&f2);
    let pres = frt_presentation(&r, false)?;
    let rs = pres.complete(8);
    let source = HopfModuleData::from_operator(&r);
    let target = source.descend(&rs)?;
    let basis = rs.basis_words()?;
    let assignment: Vec<Vec<Fp>> = (0..2)
        .flat_map(|i| (0..2).map(move |j| (i, j)))
        .map(|(i, j)| rs.coordinates(&basis, &NCPoly::gen(rs.alphabet(), &f2, i, j)))
        .collect();
    let rep = verify_morphism(&pres.relations, &source, &target, &assignment)?;
    ensure(rep.holds(), || format!("char2 identity map: {rep:?}"))?;

    let q = Rationals;
    let h = group_algebra::<Rational>(2, &q);
    let r = takesaki(&h);
    let pres = frt_presentation(&r, false)?;
    let source = HopfModuleData::from_operator(&r);
    let target = TableHopfModule::regular(&h);
    let (o, z) = (q.one(), q.zero());
    let grouplike =
        vec![vec![o.clone(), z.clone()], vec![z.clone(), z.clone()], vec![z.clone(), z.clone()], vec![z.clone(), o]];
    let rep = verify_morphism(&pres.relations, &source, &target, &grouplike)?;
    ensure(rep.holds(), || format!("k[C2] map: {rep:?}"))?;
    let mut bad = grouplike;
    bad[3] = vec![z.clone(), z];
    let rep = verify_morphism(&pres.relations, &source, &target, &bad)?;
    ensure(!rep.holds(), || "ε-violating assignment accepted".into())?;
    Ok("B(char2) → itself and B(takesaki_c2) → k[C2] hold; ε-violating assignment rejected".into())
}

fn enumeration_integrity() -> Outcome {
    let f2 = fp(2);
    let found = enumerate_solutions(2, &f2, Equation::Hopf, 1 << 16, 1)?;
    let rescan: Vec<u64> = (0..1u64 << 16).filter(|&i| scalar_system(i)).collect();
    ensure(found.len() == rescan.len(), || format!("{} vs {}", found.len(), rescan.len()))?;
    ensure(found.iter().zip(&rescan).all(|(r, &i)| *r == candidate(2, &f2, i)), || "solution sets differ".into())?;
    Ok(format!("{} solutions among 65536 candidates, scalar rescan agrees", found.len()))
}

/// The scalar form of the Hopf equation over F2 for `n = 2`, candidate
/// entries read from the bits of `index` (first entry most significant).
fn scalar_system(index: u64) -> bool {
    let n = 2;
    let e = |k: usize| (index >> (15 - k)) & 1;
    // x_{ab}^{cd}: coefficient of m_d ⊗ m_c in R(m_b ⊗ m_a).
    let x = |a: usize, b: usize, c: usize, d: usize| e((d * n + c) * 4 + b * n + a);
    let idx = [0usize, 1];
    for j in idx {
        for k in idx {
            for l in idx {
                for u in idx {
                    for v in idx {
                        for w in idx {
                            let mut lhs = 0;
                            for al in idx {
                                for be in idx {
                                    for ga in idx {
                                        lhs += x(ga, al, j, k) * x(w, be, ga, l) * x(u, v, al, be);
                                    }
                                }
                            }
                            let rhs: u64 = idx.iter().map(|&i| x(w, u, j, i) * x(i, v, k, l)).sum();
                            if (lhs ^ rhs) & 1 == 1 {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("solution truth table", truth_table),
        ("char-2 construction", char2_construction),
        ("presentation equivalences", presentation_equivalences),
        ("q = 0 presentations", q_zero_presentations),
        ("unconditional identities", unconditional_identities),
        ("module round trip", round_trip),
        ("equivalence propositions", equivalence_propositions),
        ("derived dimensions", derived_dimensions),
        ("universal property", universal_property),
        ("enumeration integrity", enumeration_integrity),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(Failure(format!("panicked: {}", msg.unwrap_or_default())))
        });
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(Failure(why)) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
