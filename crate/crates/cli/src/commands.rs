use hopfeq::enumerate::{candidate_count, enumerate_solutions, Classification};
use hopfeq::fixtures::{self, CATALOG};
use hopfeq::freealg::{NCPoly, Word};
use hopfeq::frt::{frt_commutative, frt_presentation, verify_identities, IdentityReport};
use hopfeq::rewrite::{DimensionKind, RewriteSystem, Status};
use hopfeq::{json, Equation, Error, Field, PrimeField, Scalar, TensorOp};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::input::{resolve, Resolved};
use crate::{with_field, Source};

pub enum Failure {
    Error(Error),
    /// A check that must hold did not; exit code 1.
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

type Outcome = Result<(), Failure>;

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

pub fn check(source: &Source, as_json: bool) -> Outcome {
    let resolved = resolve(source)?;
    with_field!(resolved.field, |f: S| {
        let r = resolved.build::<S>(&f)?;
        let rep = r.report();
        if as_json {
            let mut doc = json::report_to_json(resolved.field, &rep);
            doc["source"] = json!(resolved.label());
            doc["n"] = json!(r.n());
            print_json(&doc);
        } else {
            println!("source: {} over {}, n = {}", resolved.label(), resolved.field, r.n());
            for (name, v) in [
                ("hopf", rep.hopf),
                ("pentagon", rep.pentagon),
                ("qybe", rep.qybe),
                ("commutative", rep.commutative),
                ("cocommutative", rep.cocommutative),
                ("bijective", rep.bijective),
            ] {
                println!("{name}: {v}");
            }
        }
        Ok(())
    })
}

pub struct FrtOptions {
    pub commutative: bool,
    pub max_deg: usize,
    pub force: bool,
    pub tables: bool,
    pub basis: String,
    pub json: bool,
}

/// Letter names for display: the fixture's own when `n = 2` and, for the
/// `f_q` family, only once `c21` has been eliminated.
fn display_names<S: Scalar>(resolved: &Resolved, rs: &RewriteSystem<S>) -> Option<Vec<String>> {
    if rs.alphabet().comatrix_n() != Some(2) {
        return None;
    }
    let c21_eliminated = rs.rules().iter().any(|r| r.lead == Word::letter(2) && r.tail.is_zero());
    match resolved.fixture().and_then(|f| f.letter_names()) {
        Some(names) if names == fixtures::char2_letters() => Some(names),
        Some(names) if c21_eliminated => Some(names),
        _ if c21_eliminated => Some(fixtures::q_family_letters()),
        _ => None,
    }
}

fn render<S: Scalar>(p: &NCPoly<S>, names: Option<&[String]>) -> String {
    match names {
        Some(ns) => p.render_with(ns),
        None => p.render(),
    }
}

pub fn frt(source: &Source, opts: &FrtOptions) -> Outcome {
    let resolved = resolve(source)?;
    let basis_choice = match opts.basis.as_str() {
        "preferred" | "irreducible" => opts.basis.as_str(),
        other => return Err(Error::Invalid(format!("--basis must be preferred or irreducible, got `{other}`")).into()),
    };
    with_field!(resolved.field, |f: S| {
        let r = resolved.build::<S>(&f)?;
        let pres = if opts.commutative { frt_commutative(&r, opts.force)? } else { frt_presentation(&r, opts.force)? };
        let rs = pres.complete(opts.max_deg);
        let names = display_names(&resolved, &rs);
        let names = names.as_deref();
        let dim = rs.dimension(opts.max_deg.max(2) + 1);
        let coideal = pres.check_coideal(&rs);
        // The fixture's basis spans B(R), not the commutative quotient.
        let preferred = resolved
            .fixture()
            .and_then(|x| x.preferred_basis())
            .filter(|words| basis_choice == "preferred" && dim.finite() == Some(words.len()) && !opts.commutative);
        let tables = match dim.finite() {
            Some(_) if rs.is_complete() => Some(match &preferred {
                Some(words) => rs.quotient_bialgebra_in(words, names)?,
                None => rs.quotient_bialgebra(names)?,
            }),
            _ => None,
        };

        if opts.json {
            let mut doc = json!({
                "source": resolved.label(),
                "presentation": json::presentation_to_json(&pres),
                "rewrite": json::rewrite_to_json(&rs)?,
                "dimension": match dim.kind {
                    DimensionKind::Finite(d) => json!({"finite": d, "hilbert_prefix": dim.hilbert_prefix}),
                    DimensionKind::LowerBound { count, word_length_cap } => json!({
                        "lower_bound": count, "word_length_cap": word_length_cap, "hilbert_prefix": dim.hilbert_prefix,
                    }),
                },
                "coideal": coideal,
                "letters": names,
            });
            if let Some(h) = &tables {
                doc["basis"] = json!(h.labels());
                if opts.tables {
                    doc["tables"] = json::bialgebra_to_json(h);
                }
            }
            print_json(&doc);
            return Ok(());
        }

        println!("source: {} over {}, n = {}", resolved.label(), resolved.field, r.n());
        if !pres.notes.is_empty() {
            for note in &pres.notes {
                println!("note: {note}");
            }
        }
        if let Some(ns) = names {
            let pairs: Vec<String> = ns
                .iter()
                .enumerate()
                .filter(|(_, n)| !n.starts_with("c["))
                .map(|(l, n)| format!("{n} = {}", rs.alphabet().letter_name(l as u16)))
                .collect();
            println!("letters: {}", pairs.join(", "));
        }
        println!("relations ({}):", pres.relations.len());
        for rel in &pres.relations {
            println!("  {}", render(rel, names));
        }
        match rs.status() {
            Status::Complete => println!("completion: complete, {} rules", rs.rules().len()),
            Status::Capped(d) => println!("completion: capped at degree {d}, {} rules", rs.rules().len()),
        }
        for rule in rs.render_rules(names) {
            println!("  {rule}");
        }
        match dim.kind {
            DimensionKind::Finite(d) => println!("dimension: {d}"),
            DimensionKind::LowerBound { count, word_length_cap } => {
                println!("dimension: at least {count} (irreducible words up to length {word_length_cap})")
            }
        }
        println!("hilbert prefix: {:?}", dim.hilbert_prefix);
        println!("coideal: {coideal}");
        if let Some(h) = &tables {
            println!("basis: {{{}}}", h.labels().join(", "));
            if opts.tables {
                let d = h.dim();
                println!("multiplication:");
                for a in 0..d {
                    for b in 0..d {
                        let p = h.mul(&h.basis_vector(a), &h.basis_vector(b));
                        let v = h.render(&p);
                        println!(
                            "  {} * {} = {}",
                            h.labels()[a],
                            h.labels()[b],
                            if v.is_empty() { "0".into() } else { v }
                        );
                    }
                }
                println!("comultiplication:");
                for a in 0..d {
                    println!("  Δ({}) = {}", h.labels()[a], h.render_tensor(&h.comult_table()[a]));
                }
                println!("counit:");
                for a in 0..d {
                    println!("  ε({}) = {}", h.labels()[a], h.counit()[a]);
                }
                let ax = h.check_axioms();
                println!("bialgebra axioms: {}", ax.bialgebra());
            }
        } else if opts.tables {
            println!("tables: unavailable, the quotient is not known to be finite dimensional");
        }
        Ok(())
    })
}

fn identity_json(rep: &IdentityReport) -> Value {
    json!({
        "delta_chi": rep.delta_chi,
        "eps_chi": rep.eps_chi,
        "defect": rep.defect,
        "commutator": rep.commutator,
        "all": rep.all(),
    })
}

fn print_identities(rep: &IdentityReport) {
    println!("delta_chi: {}", rep.delta_chi);
    println!("eps_chi: {}", rep.eps_chi);
    println!("defect: {}", rep.defect);
    println!("commutator: {}", rep.commutator);
}

pub fn verify(source: &Source, random: Option<usize>, n: usize, seed: u64, as_json: bool) -> Outcome {
    let Some(count) = random else {
        let resolved = resolve(source)?;
        return with_field!(resolved.field, |f: S| {
            let r = resolved.build::<S>(&f)?;
            let rep = verify_identities(&r);
            if as_json {
                let mut doc = identity_json(&rep);
                doc["source"] = json!(resolved.label());
                doc["field"] = json!(resolved.field.to_string());
                print_json(&doc);
            } else {
                println!("source: {} over {}, n = {}", resolved.label(), resolved.field, r.n());
                print_identities(&rep);
            }
            if rep.all() {
                Ok(())
            } else {
                Err(Failure::Check("an unconditional identity failed".into()))
            }
        });
    };
    if n == 0 {
        return Err(Error::Invalid("--n must be positive".into()).into());
    }
    let field = match &source.field {
        Some(text) => Field::parse(text)?,
        None => Field::Rationals,
    };
    with_field!(field, |f: S| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut failures = Vec::new();
        for k in 0..count {
            let r = TensorOp::<S>::random(&f, n, &mut rng);
            let rep = verify_identities(&r);
            if !rep.all() {
                failures.push((k, json::operator_to_json(&r), rep));
            }
        }
        if as_json {
            print_json(&json!({
                "field": field.to_string(),
                "n": n,
                "seed": seed,
                "samples": count,
                "failures": failures.iter().map(|(k, m, rep)| json!({"index": k, "operator": m, "report": identity_json(rep)})).collect::<Vec<_>>(),
                "all": failures.is_empty(),
            }));
        } else {
            println!("random operators: {count} over {field}, n = {n}, seed {seed}");
            println!("all identities hold: {}", failures.is_empty());
            for (k, m, rep) in &failures {
                println!("sample {k}: {rep:?}\n{m}");
            }
        }
        if failures.is_empty() {
            Ok(())
        } else {
            Err(Failure::Check(format!("{} samples failed", failures.len())))
        }
    })
}

pub fn enumerate(n: usize, field: &str, eq: &str, jobs: usize, cap: u128, dump: bool, as_json: bool) -> Outcome {
    let p = match Field::parse(field)? {
        Field::Prime(p) => p,
        Field::Rationals => return Err(Error::FieldMismatch("enumeration needs a prime field fp:<p>".into()).into()),
    };
    let f = PrimeField::new(u64::from(p))?;
    let equation = Equation::parse(eq)?;
    let sols = enumerate_solutions(n, &f, equation, cap, jobs)?;
    let classes = Classification::of(&sols);
    let candidates = candidate_count(n, p);
    let rows: Vec<(bool, bool, bool, usize)> = [false, true]
        .iter()
        .flat_map(|&c| [false, true].iter().flat_map(move |&cc| [false, true].iter().map(move |&b| (c, cc, b))))
        .map(|(c, cc, b)| (c, cc, b, classes.get(c, cc, b)))
        .collect();
    if as_json {
        let mut doc = json!({
            "field": format!("fp:{p}"),
            "n": n,
            "equation": equation.name(),
            "candidates": candidates.to_string(),
            "count": sols.len(),
            "classification": rows.iter().map(|&(c, cc, b, k)| json!({
                "commutative": c, "cocommutative": cc, "bijective": b, "count": k,
            })).collect::<Vec<_>>(),
        });
        if dump {
            doc["solutions"] = json!(sols.iter().map(|r| json::matrix_to_json(r.matrix())).collect::<Vec<_>>());
        }
        print_json(&doc);
        return Ok(());
    }
    println!("equation: {}, n = {n}, field fp:{p}", equation.name());
    println!("candidates: {candidates}");
    println!("solutions: {}", sols.len());
    println!("commutative cocommutative bijective count");
    for (c, cc, b, k) in rows {
        println!("{:<11} {:<13} {:<9} {k}", c, cc, b);
    }
    if dump {
        for (i, r) in sols.iter().enumerate() {
            println!("solution {i}:");
            for row in 0..r.matrix().rows() {
                let entries: Vec<String> = r.matrix().row(row).iter().map(|x| x.to_string()).collect();
                println!("  {}", entries.join(" "));
            }
        }
    }
    Ok(())
}

pub fn fixtures() {
    for (syntax, what) in CATALOG {
        println!("{syntax:<40} {what}");
    }
}
