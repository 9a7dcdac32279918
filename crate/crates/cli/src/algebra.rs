//! `--algebra` resolution: a builtin spec or a JSON definition file.

use std::path::Path;

use anyhow::{Context, Result};
use jackdiag_core::coeff_ring::{parse_rational, Rational};
use jackdiag_core::frobenius::{builtin, BasisVector, FrobAlgebra};
use serde::Deserialize;

use crate::UsageError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    name: String,
    basis: Vec<BasisEntry>,
    mult: Vec<(usize, usize, Vec<(usize, String)>)>,
    trace: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisEntry {
    label: String,
    degree: u32,
    parity: Parity,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Parity {
    Word(String),
    Bit(u8),
}

impl Parity {
    fn is_odd(&self) -> Result<bool, UsageError> {
        match self {
            Parity::Bit(0) => Ok(false),
            Parity::Bit(1) => Ok(true),
            Parity::Word(w) if w == "even" => Ok(false),
            Parity::Word(w) if w == "odd" => Ok(true),
            _ => Err(UsageError("parity must be \"even\", \"odd\", 0 or 1".into())),
        }
    }
}

fn rational(s: &str) -> Result<Rational, UsageError> {
    parse_rational(s).map_err(|e| UsageError(format!("bad rational {:?}: {}", s, e)))
}

/// Parse a JSON algebra definition.
pub fn from_json(text: &str) -> Result<FrobAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| UsageError(format!("algebra file: {}", e)))?;
    let basis = file
        .basis
        .iter()
        .map(|b| Ok(BasisVector { label: b.label.clone(), degree: b.degree, odd: b.parity.is_odd()? }))
        .collect::<Result<Vec<_>, UsageError>>()?;
    let mult = file
        .mult
        .iter()
        .map(|(i, j, es)| {
            let es = es.iter().map(|(k, c)| Ok((*k, rational(c)?))).collect::<Result<Vec<_>, UsageError>>()?;
            Ok((*i, *j, es))
        })
        .collect::<Result<Vec<_>, UsageError>>()?;
    let trace = file.trace.iter().map(|c| rational(c)).collect::<Result<Vec<_>, _>>()?;
    FrobAlgebra::from_parts(&file.name, basis, &mult, trace).map_err(|e| UsageError(e.to_string()).into())
}

/// A builtin spec, or else a path to a JSON file.
pub fn load(spec: &str) -> Result<FrobAlgebra> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", spec))?;
        return from_json(&text);
    }
    builtin(spec).map_err(|e| UsageError(format!("{} (not a builtin and no such file)", e)).into())
}
