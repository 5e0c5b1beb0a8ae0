//! Tensor file format.
//!
//! A Hall tensor on disk is a JSON object
//!
//! ```json
//! {"k": [k121, k122, k123, k131, k132, k133, k231, k232, k233]}
//! ```
//!
//! with entries as decimal literals. The exact-rational reader additionally
//! accepts string entries `"p/q"` (or `"p"`); non-integer number literals are
//! rejected there, since a binary float is not a faithful carrier for a
//! decimal fraction.

use serde_json::Value;
use thiserror::Error;

use crate::exact::{parse_rational, rational_int, Rational};
use crate::tensor::{HallTensor, TensorError, COMPONENT_NAMES};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("missing field \"k\"")]
    MissingField,
    #[error("field \"k\" must be an array of 9 entries, found {0}")]
    WrongLength(usize),
    #[error("field \"k\" must be an array")]
    NotAnArray,
    #[error("entry {index} ({name}): {detail}")]
    BadEntry {
        index: usize,
        name: &'static str,
        detail: String,
    },
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

fn component_array(text: &str) -> Result<Vec<Value>, FormatError> {
    let root: Value = serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    let k = root.get("k").ok_or(FormatError::MissingField)?;
    let array = k.as_array().ok_or(FormatError::NotAnArray)?;
    if array.len() != 9 {
        return Err(FormatError::WrongLength(array.len()));
    }
    Ok(array.clone())
}

/// Parses the tensor file in floating-point mode.
pub fn parse_tensor_f64(text: &str) -> Result<HallTensor<f64>, FormatError> {
    let array = component_array(text)?;
    let mut components = [0.0f64; 9];
    for (index, value) in array.iter().enumerate() {
        let number = value.as_f64().ok_or_else(|| FormatError::BadEntry {
            index,
            name: COMPONENT_NAMES[index],
            detail: format!("expected a number, found {value}"),
        })?;
        components[index] = number;
    }
    Ok(HallTensor::new(components)?)
}

/// Parses the tensor file in exact-rational mode. Entries may be JSON
/// integers or strings `"p/q"`.
pub fn parse_tensor_exact(text: &str) -> Result<HallTensor<Rational>, FormatError> {
    let array = component_array(text)?;
    let mut components: Vec<Rational> = Vec::with_capacity(9);
    for (index, value) in array.iter().enumerate() {
        let name = COMPONENT_NAMES[index];
        let entry = match value {
            Value::Number(n) => {
                let int = n.as_i64().ok_or_else(|| FormatError::BadEntry {
                    index,
                    name,
                    detail: format!(
                        "non-integer literal {n}; write it as a string fraction \"p/q\""
                    ),
                })?;
                rational_int(int)
            }
            Value::String(s) => parse_rational(s).map_err(|e| FormatError::BadEntry {
                index,
                name,
                detail: e.to_string(),
            })?,
            other => {
                return Err(FormatError::BadEntry {
                    index,
                    name,
                    detail: format!("expected an integer or \"p/q\" string, found {other}"),
                })
            }
        };
        components.push(entry);
    }
    let components: [Rational; 9] = components.try_into().expect("length checked above");
    Ok(HallTensor::new(components)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;

    #[test]
    fn parses_float_tensor() {
        let k = parse_tensor_f64(r#"{"k": [0, 0, 0, -1, 0, 0, 0, 1, 0]}"#).unwrap();
        assert_eq!(k.components()[3], -1.0);
        assert_eq!(k.components()[7], 1.0);

        let k = parse_tensor_f64(r#"{"k": [0.5, -0.25, 0, 0, 0, 0, 0, 0, 0]}"#).unwrap();
        assert_eq!(k.components()[0], 0.5);
    }

    #[test]
    fn parses_exact_tensor_with_fractions() {
        let k =
            parse_tensor_exact(r#"{"k": ["1/2", 1, 0, "3/2", 0, 1, 0, "3/2", "1/2"]}"#).unwrap();
        assert_eq!(k.components()[0], rational(1, 2).unwrap());
        assert_eq!(k.components()[3], rational(3, 2).unwrap());
    }

    #[test]
    fn reports_offending_entry() {
        let err = parse_tensor_f64(r#"{"k": [0, 0, "x", 0, 0, 0, 0, 0, 0]}"#).unwrap_err();
        match err {
            FormatError::BadEntry { index, name, .. } => {
                assert_eq!(index, 2);
                assert_eq!(name, "k123");
            }
            other => panic!("unexpected error {other:?}"),
        }

        let err = parse_tensor_exact(r#"{"k": [0, 0, 1.5, 0, 0, 0, 0, 0, 0]}"#).unwrap_err();
        assert!(matches!(err, FormatError::BadEntry { index: 2, .. }));
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(
            parse_tensor_f64("{}"),
            Err(FormatError::MissingField)
        ));
        assert!(matches!(
            parse_tensor_f64(r#"{"k": [1, 2, 3]}"#),
            Err(FormatError::WrongLength(3))
        ));
        assert!(matches!(
            parse_tensor_f64(r#"{"k": 3}"#),
            Err(FormatError::NotAnArray)
        ));
        assert!(matches!(
            parse_tensor_f64("not json"),
            Err(FormatError::Json(_))
        ));
    }
}
