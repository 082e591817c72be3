//! Spec loading: catalog names, file paths, or inline JSON documents.
//!
//! Three document forms are accepted:
//!
//! * `{"family": "curve"|"surface"|"scroll", <params>, "r": <int>}` with
//!   params `d, g` (curve), `d, pi, chi` (surface), `n, d, g` (scroll);
//! * `{"dim": n, "ambient": r, "coeffs": [c_0, …, c_n]}` — binomial-basis
//!   coefficients, passed through;
//! * `{"dim": n, "ambient": r, "values": [[z, χ(z)], …]}` — exactly `n+1`
//!   sample points, interpolated and integrality-checked.
//!
//! Every form accepts an optional `"name"`. Unknown fields are rejected so
//! that typos cannot silently change the meaning of a document.

use num_bigint::BigInt;
use serde_json::{Map, Value};

use crate::hilbert::HilbertPoly;
use crate::projection::VarietySpec;

use super::{catalog, CliError};

/// Resolves a spec argument: catalog name first, then inline JSON (leading
/// `{`), then a file path to a JSON document.
pub fn load_spec(raw: &str) -> Result<VarietySpec, CliError> {
    let trimmed = raw.trim();
    if trimmed.is_empty() {
        return Err(CliError::Validation("empty spec argument".to_string()));
    }
    if let Some(spec) = catalog::lookup(trimmed)? {
        return Ok(spec);
    }
    let document = if trimmed.starts_with('{') {
        trimmed.to_string()
    } else {
        std::fs::read_to_string(trimmed).map_err(|err| {
            CliError::Parse(format!(
                "`{trimmed}` is not a catalog name and cannot be read as a file: {err}"
            ))
        })?
    };
    parse_document(&document)
}

fn parse_document(text: &str) -> Result<VarietySpec, CliError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|err| CliError::Parse(format!("malformed JSON spec: {err}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| CliError::Parse("spec document must be a JSON object".to_string()))?;
    if obj.contains_key("family") {
        parse_family_form(obj)
    } else if obj.contains_key("coeffs") {
        parse_coeffs_form(obj)
    } else if obj.contains_key("values") {
        parse_values_form(obj)
    } else {
        Err(CliError::Validation(
            "spec must contain one of `family`, `coeffs`, `values`".to_string(),
        ))
    }
}

fn check_fields(obj: &Map<String, Value>, allowed: &[&str]) -> Result<(), CliError> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) && key != "name" {
            return Err(CliError::Validation(format!("unexpected field `{key}`")));
        }
    }
    Ok(())
}

fn get_i64(obj: &Map<String, Value>, key: &str) -> Result<i64, CliError> {
    obj.get(key)
        .ok_or_else(|| CliError::Validation(format!("missing field `{key}`")))?
        .as_i64()
        .ok_or_else(|| CliError::Validation(format!("field `{key}` must be an integer")))
}

fn get_usize(obj: &Map<String, Value>, key: &str) -> Result<usize, CliError> {
    let v = get_i64(obj, key)?;
    usize::try_from(v)
        .map_err(|_| CliError::Validation(format!("field `{key}` must be nonnegative")))
}

fn name_or(obj: &Map<String, Value>, fallback: &str) -> Result<String, CliError> {
    match obj.get("name") {
        None => Ok(fallback.to_string()),
        Some(Value::String(s)) => Ok(s.clone()),
        Some(_) => Err(CliError::Validation("field `name` must be a string".to_string())),
    }
}

fn parse_family_form(obj: &Map<String, Value>) -> Result<VarietySpec, CliError> {
    let family = obj
        .get("family")
        .and_then(Value::as_str)
        .ok_or_else(|| CliError::Validation("field `family` must be a string".to_string()))?;
    let spec = match family {
        "curve" => {
            check_fields(obj, &["family", "d", "g", "r"])?;
            VarietySpec::curve(
                name_or(obj, "curve")?,
                get_i64(obj, "d")?,
                get_i64(obj, "g")?,
                get_usize(obj, "r")?,
            )
        }
        "surface" => {
            check_fields(obj, &["family", "d", "pi", "chi", "r"])?;
            VarietySpec::surface(
                name_or(obj, "surface")?,
                get_i64(obj, "d")?,
                get_i64(obj, "pi")?,
                get_i64(obj, "chi")?,
                get_usize(obj, "r")?,
            )
        }
        "scroll" => {
            check_fields(obj, &["family", "n", "d", "g", "r"])?;
            VarietySpec::scroll(
                name_or(obj, "scroll")?,
                get_usize(obj, "n")?,
                get_i64(obj, "d")?,
                get_i64(obj, "g")?,
                get_usize(obj, "r")?,
            )
        }
        other => {
            return Err(CliError::Validation(format!(
                "unknown family `{other}` (expected curve, surface, or scroll)"
            )))
        }
    };
    spec.map_err(|err| CliError::Validation(err.to_string()))
}

fn parse_coeffs_form(obj: &Map<String, Value>) -> Result<VarietySpec, CliError> {
    check_fields(obj, &["dim", "ambient", "coeffs"])?;
    let dim = get_usize(obj, "dim")?;
    let ambient = get_usize(obj, "ambient")?;
    let coeffs = obj
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Validation("field `coeffs` must be an array".to_string()))?;
    let coeffs: Vec<BigInt> = coeffs
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_i64().map(BigInt::from).ok_or_else(|| {
                CliError::Validation(format!("`coeffs[{i}]` must be an integer"))
            })
        })
        .collect::<Result<_, _>>()?;
    if coeffs.len() != dim + 1 {
        return Err(CliError::Validation(format!(
            "`coeffs` must have dim+1 = {} entries, got {}",
            dim + 1,
            coeffs.len()
        )));
    }
    let hilbert =
        HilbertPoly::new(coeffs).map_err(|err| CliError::Validation(err.to_string()))?;
    VarietySpec::generic(name_or(obj, "inline")?, ambient, hilbert)
        .map_err(|err| CliError::Validation(err.to_string()))
}

fn parse_values_form(obj: &Map<String, Value>) -> Result<VarietySpec, CliError> {
    check_fields(obj, &["dim", "ambient", "values"])?;
    let dim = get_usize(obj, "dim")?;
    let ambient = get_usize(obj, "ambient")?;
    let values = obj
        .get("values")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Validation("field `values` must be an array".to_string()))?;
    let points: Vec<(i64, BigInt)> = values
        .iter()
        .enumerate()
        .map(|(i, pair)| {
            let arr = pair.as_array().filter(|a| a.len() == 2).ok_or_else(|| {
                CliError::Validation(format!("`values[{i}]` must be a [z, chi] pair"))
            })?;
            let z = arr[0].as_i64().ok_or_else(|| {
                CliError::Validation(format!("`values[{i}][0]` must be an integer"))
            })?;
            let v = arr[1].as_i64().ok_or_else(|| {
                CliError::Validation(format!("`values[{i}][1]` must be an integer"))
            })?;
            Ok((z, BigInt::from(v)))
        })
        .collect::<Result<_, CliError>>()?;
    let hilbert = HilbertPoly::from_values(dim, &points)
        .map_err(|err| CliError::Validation(err.to_string()))?;
    VarietySpec::generic(name_or(obj, "inline")?, ambient, hilbert)
        .map_err(|err| CliError::Validation(err.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projection::Family;

    #[test]
    fn family_form() {
        let spec = load_spec(r#"{"family":"curve","d":4,"g":1,"r":3}"#).unwrap();
        assert_eq!(spec.dim(), 1);
        assert_eq!(spec.ambient(), 3);
        assert_eq!(spec.family(), Some(&Family::Curve { d: 4, g: 1 }));
        assert_eq!(spec.name(), "curve");

        let spec =
            load_spec(r#"{"family":"scroll","n":2,"d":4,"g":0,"r":5,"name":"s25"}"#).unwrap();
        assert_eq!(spec.name(), "s25");
        assert_eq!(spec.dim(), 2);
    }

    #[test]
    fn coeffs_form() {
        let spec = load_spec(r#"{"dim":2,"ambient":5,"coeffs":[1,1,4]}"#).unwrap();
        assert_eq!(spec.dim(), 2);
        assert_eq!(spec.degree(), &BigInt::from(4));
        assert!(spec.family().is_none());
    }

    #[test]
    fn values_form_interpolates() {
        let spec = load_spec(r#"{"dim":1,"ambient":3,"values":[[0,0],[1,4]]}"#).unwrap();
        assert_eq!(spec.hilbert().coeffs(), &[BigInt::from(0), BigInt::from(4)]);
    }

    #[test]
    fn catalog_names_resolve() {
        let spec = load_spec("elliptic-quartic").unwrap();
        assert_eq!(spec.dim(), 1);
        let spec = load_spec("rnc-5").unwrap();
        assert_eq!(spec.ambient(), 5);
    }

    #[test]
    fn rejection_paths() {
        // Malformed JSON → parse error.
        assert!(matches!(load_spec("{not json"), Err(CliError::Parse(_))));
        // Unknown field.
        let err = load_spec(r#"{"family":"curve","d":3,"g":0,"r":3,"extra":1}"#).unwrap_err();
        assert!(matches!(err, CliError::Validation(ref msg) if msg.contains("extra")));
        // Wrong coefficient count.
        let err = load_spec(r#"{"dim":2,"ambient":5,"coeffs":[1,4]}"#).unwrap_err();
        assert!(matches!(err, CliError::Validation(_)));
        // Non-integral interpolation data.
        let err = load_spec(r#"{"dim":1,"ambient":3,"values":[[0,2],[2,3]]}"#).unwrap_err();
        assert!(matches!(err, CliError::Validation(ref msg) if msg.contains("integer")));
        // Unknown names fall through to the filesystem.
        assert!(matches!(load_spec("no-such-variety"), Err(CliError::Parse(_))));
        // Floats are rejected.
        let err = load_spec(r#"{"family":"curve","d":4.5,"g":1,"r":3}"#).unwrap_err();
        assert!(matches!(err, CliError::Validation(_)));
    }
}
