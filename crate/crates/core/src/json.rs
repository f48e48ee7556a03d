//! JSON documents for operators, presentations, rewriting systems,
//! bialgebra tables and module data.
//!
//! Every document carries its field descriptor under `"field"`. Words over
//! the comatrix alphabet are lists of 1-based `[i, j]` pairs; coefficients
//! use the field's own encoding (strings `"a/b"` over the rationals,
//! integers over `F_p`).

use serde_json::{json, Map, Value};

use crate::bialg::StructureBialgebra;
use crate::error::{Error, Result};
use crate::exactnum::{Field, Scalar, ScalarField};
use crate::freealg::{Alphabet, NCPoly, Word};
use crate::frt::Presentation;
use crate::hopfmod::HopfModuleData;
use crate::matrix::Matrix;
use crate::rewrite::{RewriteSystem, Rule, Status};
use crate::tensor::{SolutionReport, TensorOp};

fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

fn field_of(doc: &Value) -> Result<Field> {
    let text = doc.get("field").and_then(Value::as_str).ok_or_else(|| invalid("missing string field `field`"))?;
    Field::parse(text)
}

/// The field descriptor named by a document.
pub fn document_field(doc: &Value) -> Result<Field> {
    field_of(doc)
}

fn check_field<S: Scalar>(field: &S::Field, doc: &Value) -> Result<()> {
    let named = field_of(doc)?;
    if named != field.descriptor() {
        return Err(Error::FieldMismatch(format!("document is over {named}, expected {}", field.descriptor())));
    }
    Ok(())
}

fn usize_at(doc: &Value, key: &str) -> Result<usize> {
    doc.get(key)
        .and_then(Value::as_u64)
        .map(|v| v as usize)
        .ok_or_else(|| invalid(format!("missing nonnegative integer `{key}`")))
}

fn array_at<'a>(doc: &'a Value, key: &str) -> Result<&'a Vec<Value>> {
    doc.get(key).and_then(Value::as_array).ok_or_else(|| invalid(format!("missing array `{key}`")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| invalid(format!("{what} must be an array")))
}

pub fn matrix_to_json<S: Scalar>(m: &Matrix<S>) -> Value {
    let f = m.field();
    Value::Array((0..m.rows()).map(|r| Value::Array(m.row(r).iter().map(|x| f.to_json(x)).collect())).collect())
}

pub fn matrix_from_json<S: Scalar>(field: &S::Field, v: &Value) -> Result<Matrix<S>> {
    let rows = as_array(v, "matrix")?
        .iter()
        .map(|row| as_array(row, "matrix row")?.iter().map(|x| field.from_json(x)).collect::<Result<Vec<S>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, rows)
}

fn vector_to_json<S: Scalar>(field: &S::Field, v: &[S]) -> Value {
    Value::Array(v.iter().map(|x| field.to_json(x)).collect())
}

fn vector_from_json<S: Scalar>(field: &S::Field, v: &Value) -> Result<Vec<S>> {
    as_array(v, "vector")?.iter().map(|x| field.from_json(x)).collect()
}

/// `{"field", "n", "matrix"}`.
pub fn operator_to_json<S: Scalar>(r: &TensorOp<S>) -> Value {
    json!({
        "field": r.field().descriptor().to_string(),
        "n": r.n(),
        "matrix": matrix_to_json(r.matrix()),
    })
}

pub fn operator_from_json<S: Scalar>(field: &S::Field, doc: &Value) -> Result<TensorOp<S>> {
    check_field::<S>(field, doc)?;
    let n = usize_at(doc, "n")?;
    let m = matrix_from_json(field, doc.get("matrix").ok_or_else(|| invalid("missing `matrix`"))?)?;
    TensorOp::new(n, m)
}

pub fn report_to_json(field: Field, r: &SolutionReport) -> Value {
    json!({
        "field": field.to_string(),
        "hopf": r.hopf,
        "pentagon": r.pentagon,
        "qybe": r.qybe,
        "commutative": r.commutative,
        "cocommutative": r.cocommutative,
        "bijective": r.bijective,
    })
}

fn comatrix_n(alphabet: &Alphabet) -> Result<usize> {
    alphabet.comatrix_n().ok_or_else(|| invalid("only comatrix alphabets have a JSON form"))
}

fn word_to_json(alphabet: &Alphabet, w: &Word) -> Value {
    Value::Array(
        w.letters()
            .iter()
            .map(|&l| {
                let (i, j) = alphabet.indices(l);
                json!([i + 1, j + 1])
            })
            .collect(),
    )
}

fn word_from_json(alphabet: &Alphabet, v: &Value) -> Result<Word> {
    let n = comatrix_n(alphabet)?;
    let letters = as_array(v, "word")?
        .iter()
        .map(|pair| {
            let ij = as_array(pair, "generator")?;
            let idx = |k: usize| ij.get(k).and_then(Value::as_u64).map(|x| x as usize);
            match (ij.len(), idx(0), idx(1)) {
                (2, Some(i), Some(j)) if (1..=n).contains(&i) && (1..=n).contains(&j) => Ok(alphabet.gen(i - 1, j - 1)),
                _ => Err(invalid(format!("generator must be [i, j] with 1 <= i, j <= {n}"))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Word::new(letters))
}

/// `[{"word": [[i, j], ...], "coeff": c}, ...]`, largest word first.
pub fn poly_terms_to_json<S: Scalar>(p: &NCPoly<S>) -> Value {
    let a = p.alphabet();
    Value::Array(
        p.terms()
            .iter()
            .rev()
            .map(|(w, c)| json!({"word": word_to_json(a, w), "coeff": p.field().to_json(c)}))
            .collect(),
    )
}

pub fn poly_from_json<S: Scalar>(
    alphabet: &std::sync::Arc<Alphabet>,
    field: &S::Field,
    v: &Value,
) -> Result<NCPoly<S>> {
    let mut p = NCPoly::zero(alphabet, field);
    for t in as_array(v, "polynomial")? {
        let w = word_from_json(alphabet, t.get("word").ok_or_else(|| invalid("term without `word`"))?)?;
        let c = field.from_json(t.get("coeff").ok_or_else(|| invalid("term without `coeff`"))?)?;
        p.add_term(w, c);
    }
    Ok(p)
}

fn generators_json(alphabet: &Alphabet) -> Value {
    Value::Array((0..alphabet.len() as u16).map(|l| Value::from(alphabet.letter_name(l))).collect())
}

/// `{"field", "n", "generators", "relations": [{"text", "terms"}],
/// "commutative_closure", "notes"}`.
pub fn presentation_to_json<S: Scalar>(p: &Presentation<S>) -> Value {
    json!({
        "field": p.field.descriptor().to_string(),
        "n": p.n(),
        "generators": generators_json(&p.alphabet),
        "relations": p.relations.iter().map(|r| json!({"text": r.render(), "terms": poly_terms_to_json(r)})).collect::<Vec<_>>(),
        "commutative_closure": p.commutative_closure,
        "notes": p.notes,
    })
}

pub fn presentation_from_json<S: Scalar>(field: &S::Field, doc: &Value) -> Result<Presentation<S>> {
    check_field::<S>(field, doc)?;
    let n = usize_at(doc, "n")?;
    let alphabet = Alphabet::comatrix(n);
    let relations = array_at(doc, "relations")?
        .iter()
        .map(|r| poly_from_json(&alphabet, field, r.get("terms").ok_or_else(|| invalid("relation without `terms`"))?))
        .collect::<Result<Vec<_>>>()?;
    let mut p = Presentation::new(n, field, relations);
    p.commutative_closure = doc.get("commutative_closure").and_then(Value::as_bool).unwrap_or(false);
    p.notes = match doc.get("notes") {
        Some(v) => as_array(v, "notes")?.iter().filter_map(|s| s.as_str().map(String::from)).collect(),
        None => Vec::new(),
    };
    Ok(p)
}

fn status_to_json(s: Status) -> Value {
    match s {
        Status::Complete => json!("complete"),
        Status::Capped(d) => json!({"capped": d}),
    }
}

fn status_from_json(v: &Value) -> Result<Status> {
    if v.as_str() == Some("complete") {
        return Ok(Status::Complete);
    }
    v.get("capped")
        .and_then(Value::as_u64)
        .map(|d| Status::Capped(d as usize))
        .ok_or_else(|| invalid("status must be \"complete\" or {\"capped\": d}"))
}

/// `{"field", "n", "order": "deglex", "status", "rules": [{"lead", "tail", "text"}]}`.
pub fn rewrite_to_json<S: Scalar>(rs: &RewriteSystem<S>) -> Result<Value> {
    let a = rs.alphabet();
    let n = comatrix_n(a)?;
    let texts = rs.render_rules(None);
    Ok(json!({
        "field": rs.field().descriptor().to_string(),
        "n": n,
        "order": "deglex",
        "status": status_to_json(rs.status()),
        "rules": rs.rules().iter().zip(texts).map(|(r, text)| json!({
            "lead": word_to_json(a, &r.lead),
            "tail": poly_terms_to_json(&r.tail),
            "text": text,
        })).collect::<Vec<_>>(),
    }))
}

pub fn rewrite_from_json<S: Scalar>(field: &S::Field, doc: &Value) -> Result<RewriteSystem<S>> {
    check_field::<S>(field, doc)?;
    if doc.get("order").and_then(Value::as_str) != Some("deglex") {
        return Err(invalid("only the deglex order is supported"));
    }
    let alphabet = Alphabet::comatrix(usize_at(doc, "n")?);
    let status = status_from_json(doc.get("status").ok_or_else(|| invalid("missing `status`"))?)?;
    let rules = array_at(doc, "rules")?
        .iter()
        .map(|r| {
            Ok(Rule {
                lead: word_from_json(&alphabet, r.get("lead").ok_or_else(|| invalid("rule without `lead`"))?)?,
                tail: poly_from_json(&alphabet, field, r.get("tail").ok_or_else(|| invalid("rule without `tail`"))?)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    RewriteSystem::from_rules(&alphabet, field, rules, status)
}

/// `{"field", "labels", "unit", "mult", "comult", "counit", "antipode"}`.
/// `mult[a][b]` is the coordinate vector of `e_a e_b`; `comult[a]` is the
/// matrix of `Δ(e_a)` in the basis `e_b ⊗ e_c`; `antipode` has `S(e_a)` as
/// column `a`, or is `null`.
pub fn bialgebra_to_json<S: Scalar>(h: &StructureBialgebra<S>) -> Value {
    let f = h.field();
    json!({
        "field": f.descriptor().to_string(),
        "labels": h.labels(),
        "unit": vector_to_json(f, h.unit()),
        "mult": h.mult_table().iter().map(|row| row.iter().map(|v| vector_to_json(f, v)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "comult": h.comult_table().iter().map(matrix_to_json).collect::<Vec<_>>(),
        "counit": vector_to_json(f, h.counit()),
        "antipode": h.antipode().map_or(Value::Null, matrix_to_json),
    })
}

pub fn bialgebra_from_json<S: Scalar>(field: &S::Field, doc: &Value) -> Result<StructureBialgebra<S>> {
    check_field::<S>(field, doc)?;
    let labels = array_at(doc, "labels")?
        .iter()
        .map(|l| l.as_str().map(String::from).ok_or_else(|| invalid("labels must be strings")))
        .collect::<Result<Vec<_>>>()?;
    let get = |k: &str| doc.get(k).ok_or_else(|| invalid(format!("missing `{k}`")));
    let unit = vector_from_json(field, get("unit")?)?;
    let mult = as_array(get("mult")?, "mult")?
        .iter()
        .map(|row| as_array(row, "mult row")?.iter().map(|v| vector_from_json(field, v)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let comult =
        as_array(get("comult")?, "comult")?.iter().map(|m| matrix_from_json(field, m)).collect::<Result<Vec<_>>>()?;
    let counit = vector_from_json(field, get("counit")?)?;
    let antipode = match doc.get("antipode") {
        None | Some(Value::Null) => None,
        Some(m) => Some(matrix_from_json(field, m)?),
    };
    StructureBialgebra::new(field, labels, unit, mult, comult, counit, antipode)
}

/// `{"field", "n", "action": {"c[j,u]": matrix, ...}, "ambient"}`.
pub fn module_to_json<S: Scalar>(m: &HopfModuleData<S>) -> Value {
    let a = m.alphabet();
    let mut action = Map::new();
    for (l, mat) in m.actions().iter().enumerate() {
        action.insert(a.letter_name(l as u16), matrix_to_json(mat));
    }
    json!({
        "field": m.field().descriptor().to_string(),
        "n": m.n(),
        "action": action,
        "ambient": m.ambient,
    })
}

pub fn module_from_json<S: Scalar>(field: &S::Field, doc: &Value) -> Result<HopfModuleData<S>> {
    check_field::<S>(field, doc)?;
    let n = usize_at(doc, "n")?;
    let a = Alphabet::comatrix(n);
    let action = doc.get("action").and_then(Value::as_object).ok_or_else(|| invalid("missing object `action`"))?;
    if action.len() != n * n {
        return Err(invalid(format!("`action` must have {} entries", n * n)));
    }
    let mats = (0..(n * n) as u16)
        .map(|l| {
            let name = a.letter_name(l);
            matrix_from_json(field, action.get(&name).ok_or_else(|| invalid(format!("no action for {name}")))?)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut m = HopfModuleData::new(field, n, mats)?;
    m.ambient = doc.get("ambient").and_then(Value::as_str).map(String::from);
    Ok(m)
}
