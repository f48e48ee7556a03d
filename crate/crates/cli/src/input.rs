//! Resolving `--fixture` / `--input` / `--field` into an operator.

use hopfeq::fixtures::Fixture;
use hopfeq::{json, Error, Field, Result, Scalar, TensorOp};
use serde_json::Value;

use crate::Source;

pub enum Loaded {
    Fixture(Fixture),
    Document(Value),
}

pub struct Resolved {
    pub field: Field,
    pub loaded: Loaded,
}

impl Resolved {
    pub fn fixture(&self) -> Option<&Fixture> {
        match &self.loaded {
            Loaded::Fixture(f) => Some(f),
            Loaded::Document(_) => None,
        }
    }

    pub fn label(&self) -> String {
        match &self.loaded {
            Loaded::Fixture(f) => f.to_string(),
            Loaded::Document(_) => "input".into(),
        }
    }

    pub fn build<S: Scalar>(&self, field: &S::Field) -> Result<TensorOp<S>> {
        match &self.loaded {
            Loaded::Fixture(f) => f.build(field),
            Loaded::Document(doc) => json::operator_from_json(field, doc),
        }
    }
}

pub fn resolve(source: &Source) -> Result<Resolved> {
    let flag = source.field.as_deref().map(Field::parse).transpose()?;
    if let Some(name) = &source.fixture {
        let fixture: Fixture = name.parse()?;
        return Ok(Resolved { field: flag.unwrap_or(Field::Rationals), loaded: Loaded::Fixture(fixture) });
    }
    let path = source.input.as_ref().ok_or_else(|| Error::Invalid("give --fixture or --input".into()))?;
    let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    let named = json::document_field(&doc)?;
    let field = match flag {
        Some(f) if f != named => {
            return Err(Error::FieldMismatch(format!("--field {f} but the document is over {named}")));
        }
        Some(f) => f,
        None => named,
    };
    Ok(Resolved { field, loaded: Loaded::Document(doc) })
}

/// Calls `$body` with `$s` bound to the scalar type and `$f` to the field
/// context named by the descriptor.
#[macro_export]
macro_rules! with_field {
    ($desc:expr, |$f:ident : $s:ident| $body:expr) => {{
        match $desc {
            hopfeq::Field::Rationals => {
                type $s = hopfeq::Rational;
                let $f = hopfeq::Rationals;
                $body
            }
            hopfeq::Field::Prime(p) => {
                type $s = hopfeq::Fp;
                let $f = hopfeq::PrimeField::new(u64::from(p))?;
                $body
            }
        }
    }};
}
