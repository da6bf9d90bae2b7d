//! JSON coalgebra files and built-in coalgebra names.
//!
//! ```json
//! {"name": "k", "basis": ["1"],
//!  "delta": [{"on": 0, "terms": [{"left": 0, "right": 0, "coeff": "1"}]}],
//!  "counit": [{"on": 0, "coeff": "1"}]}
//! ```

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{parse_rational, Rational};

use super::{group_coalgebra, matrix_coalgebra, matrix_over, trivial, Coalgebra};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraFile {
    pub name: String,
    pub basis: Vec<String>,
    pub delta: Vec<DeltaEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<CounitEntry>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeltaEntry {
    pub on: usize,
    pub terms: Vec<DeltaTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeltaTerm {
    pub left: usize,
    pub right: usize,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CounitEntry {
    pub on: usize,
    pub coeff: String,
}

fn field_rational(text: &str, context: impl FnOnce() -> String) -> Result<Rational> {
    parse_rational(text).map_err(|e| Error::Parse(format!("{}: {e}", context())))
}

/// Parses a coalgebra file. Axioms are not checked.
pub fn parse_coalgebra(text: &str) -> Result<Coalgebra> {
    let file: CoalgebraFile = serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!("line {} column {}: {e}", e.line(), e.column()))
    })?;
    file.into_coalgebra()
}

impl CoalgebraFile {
    pub fn into_coalgebra(self) -> Result<Coalgebra> {
        let dim = self.basis.len();
        if dim == 0 {
            return Err(Error::Parse("basis: must be nonempty".into()));
        }
        let mut delta = vec![Vec::new(); dim];
        for (k, entry) in self.delta.iter().enumerate() {
            if entry.on >= dim {
                return Err(Error::Parse(format!(
                    "delta[{k}].on: index {} outside basis of size {dim}",
                    entry.on
                )));
            }
            for (t, term) in entry.terms.iter().enumerate() {
                for (field, v) in [("left", term.left), ("right", term.right)] {
                    if v >= dim {
                        return Err(Error::Parse(format!(
                            "delta[{k}].terms[{t}].{field}: index {v} outside basis of size {dim}"
                        )));
                    }
                }
                let c = field_rational(&term.coeff, || format!("delta[{k}].terms[{t}].coeff"))?;
                delta[entry.on].push((term.left, term.right, c));
            }
        }
        let counit = match &self.counit {
            None => None,
            Some(entries) => {
                let mut e = vec![Rational::zero(); dim];
                for (k, entry) in entries.iter().enumerate() {
                    if entry.on >= dim {
                        return Err(Error::Parse(format!(
                            "counit[{k}].on: index {} outside basis of size {dim}",
                            entry.on
                        )));
                    }
                    e[entry.on] += field_rational(&entry.coeff, || format!("counit[{k}].coeff"))?;
                }
                Some(e)
            }
        };
        Coalgebra::new(self.name, self.basis, delta, counit)
    }

    pub fn from_coalgebra(c: &Coalgebra) -> Self {
        Self {
            name: c.name().to_string(),
            basis: c.basis().to_vec(),
            delta: c
                .delta()
                .iter()
                .enumerate()
                .filter(|(_, ts)| !ts.is_empty())
                .map(|(on, ts)| DeltaEntry {
                    on,
                    terms: ts
                        .iter()
                        .map(|(l, r, c)| DeltaTerm {
                            left: *l,
                            right: *r,
                            coeff: c.to_string(),
                        })
                        .collect(),
                })
                .collect(),
            counit: c.counit().map(|e| {
                e.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(on, c)| CounitEntry {
                        on,
                        coeff: c.to_string(),
                    })
                    .collect()
            }),
        }
    }
}

/// Serializes a coalgebra in the file format.
pub fn to_json(c: &Coalgebra) -> String {
    serde_json::to_string_pretty(&CoalgebraFile::from_coalgebra(c)).expect("serializable")
}

fn parse_size(s: &str, spec: &str) -> Result<usize> {
    match s.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(Error::UnknownBuiltin(spec.to_string())),
    }
}

/// Resolves `trivial`, `group:<n>`, `matrix:<n>` and `matrix:<n>:<inner>`.
pub fn builtin(spec: &str) -> Result<Coalgebra> {
    let (head, rest) = spec.split_once(':').unwrap_or((spec, ""));
    match head {
        "trivial" if rest.is_empty() => Ok(trivial()),
        "group" => group_coalgebra(parse_size(rest, spec)?),
        "matrix" => match rest.split_once(':') {
            None => matrix_coalgebra(parse_size(rest, spec)?),
            Some((n, inner)) => matrix_over(parse_size(n, spec)?, &builtin(inner)?),
        },
        _ => Err(Error::UnknownBuiltin(spec.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_builtins() {
        for spec in ["trivial", "group:3", "matrix:2", "matrix:2:group:2"] {
            let c = builtin(spec).unwrap();
            let back = parse_coalgebra(&to_json(&c)).unwrap();
            assert_eq!(back, c, "{spec}");
        }
    }

    #[test]
    fn builtin_names() {
        assert_eq!(builtin("matrix:1").unwrap().dim(), 1);
        assert_eq!(builtin("matrix:2:matrix:2").unwrap().dim(), 16);
        for bad in ["", "group", "group:0", "matrix:x", "trivial:2", "lie:2", "matrix:2:nope"] {
            assert!(matches!(builtin(bad), Err(Error::UnknownBuiltin(_))), "{bad}");
        }
    }

    #[test]
    fn parse_errors_carry_context() {
        let bad_coeff = r#"{"name":"x","basis":["a"],"delta":[{"on":0,"terms":[{"left":0,"right":0,"coeff":"0.5"}]}]}"#;
        match parse_coalgebra(bad_coeff) {
            Err(Error::Parse(m)) => assert!(m.contains("delta[0].terms[0].coeff"), "{m}"),
            other => panic!("{other:?}"),
        }
        let bad_index = r#"{"name":"x","basis":["a"],"delta":[{"on":0,"terms":[{"left":0,"right":4,"coeff":"1"}]}]}"#;
        match parse_coalgebra(bad_index) {
            Err(Error::Parse(m)) => assert!(m.contains("right"), "{m}"),
            other => panic!("{other:?}"),
        }
        match parse_coalgebra("{\n\"name\": 3}") {
            Err(Error::Parse(m)) => assert!(m.starts_with("line 2"), "{m}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn missing_counit_is_non_counital() {
        let text = r#"{"name":"x","basis":["a"],"delta":[{"on":0,"terms":[{"left":0,"right":0,"coeff":"1/2"}]}]}"#;
        let c = parse_coalgebra(text).unwrap();
        assert!(!c.is_counital());
        assert!(c.check().passed());
    }
}
