//! JSON files: `{"format_version":1,"weight":k,"max_trace":T,"coeffs":[{"r":..,"b":..,"s":..,"a":"num/den"},...]}`.

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::SiegelExpansion;
use crate::arith::{parse_fraction, to_fraction_string};
use crate::error::{Error, Result};
use crate::quadform::{is_canonical, HalfIntegralForm};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileRecord {
    r: i64,
    b: i64,
    s: i64,
    a: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileHeader {
    format_version: u32,
    weight: u32,
    max_trace: u64,
    coeffs: Vec<FileRecord>,
}

pub fn to_json_string(f: &SiegelExpansion) -> String {
    let header = FileHeader {
        format_version: FORMAT_VERSION,
        weight: f.weight(),
        max_trace: f.max_trace(),
        coeffs: f
            .coefficients()
            .map(|(n, a)| FileRecord {
                r: n.r(),
                b: n.b(),
                s: n.s(),
                a: to_fraction_string(a),
            })
            .collect(),
    };
    serde_json::to_string(&header).expect("plain data serializes")
}

pub fn from_json_str(text: &str) -> Result<SiegelExpansion> {
    let header: FileHeader = serde_json::from_str(text)?;
    if header.format_version != FORMAT_VERSION {
        return Err(Error::Format(format!(
            "unsupported format_version {} (expected {FORMAT_VERSION})",
            header.format_version
        )));
    }
    if header.weight == 0 {
        return Err(Error::Format("weight must be positive".into()));
    }
    let mut values = HashMap::with_capacity(header.coeffs.len());
    for rec in header.coeffs {
        let n = HalfIntegralForm::new(rec.r, rec.b, rec.s)
            .ok()
            .filter(is_canonical)
            .ok_or_else(|| Error::Format(format!("non-canonical key ({},{},{})", rec.r, rec.b, rec.s)))?;
        if n.trace() > header.max_trace {
            return Err(Error::Format(format!(
                "key {n} has trace above max_trace {}",
                header.max_trace
            )));
        }
        let a = parse_fraction(&rec.a).map_err(|e| Error::Format(format!("value at {n}: {e}")))?;
        if values.insert(n, a).is_some() {
            return Err(Error::Format(format!("duplicate key {n}")));
        }
    }
    let zero = SiegelExpansion::zero(header.weight, header.max_trace);
    let mut coeffs = Vec::with_capacity(zero.classes().len());
    for n in zero.classes() {
        match values.remove(n) {
            Some(a) => coeffs.push(a),
            None => return Err(Error::Format(format!("missing key {n}"))),
        }
    }
    SiegelExpansion::from_class_values(header.weight, header.max_trace, coeffs)
}

pub fn write_expansion(path: impl AsRef<Path>, f: &SiegelExpansion) -> Result<()> {
    fs::write(path, to_json_string(f))?;
    Ok(())
}

pub fn read_expansion(path: impl AsRef<Path>) -> Result<SiegelExpansion> {
    from_json_str(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;
    use crate::fourier::{cusp_form_10, eisenstein};

    fn tiny(records: &str) -> String {
        format!(r#"{{"format_version":1,"weight":4,"max_trace":1,"coeffs":[{records}]}}"#)
    }

    #[test]
    fn round_trip_through_a_file() {
        let dir = tempfile::tempdir().unwrap();
        for f in [eisenstein(4, 6).unwrap(), cusp_form_10(6).unwrap()] {
            let path = dir.path().join("f.json");
            write_expansion(&path, &f).unwrap();
            assert_eq!(read_expansion(&path).unwrap(), f);
        }
    }

    #[test]
    fn layout() {
        let f = SiegelExpansion::from_class_values(4, 1, vec![frac(1, 1), frac(-2, 3)]).unwrap();
        assert_eq!(
            to_json_string(&f),
            tiny(r#"{"r":0,"b":0,"s":0,"a":"1/1"},{"r":1,"b":0,"s":0,"a":"-2/3"}"#)
        );
    }

    #[test]
    fn rejects_bad_files() {
        let ok = tiny(r#"{"r":0,"b":0,"s":0,"a":"1/1"},{"r":1,"b":0,"s":0,"a":"3/1"}"#);
        assert!(from_json_str(&ok).is_ok());
        let cases = [
            ok.replace("\"format_version\":1", "\"format_version\":2"),
            ok.replace("\"3/1\"", "\"1/0\""),
            ok.replace("\"3/1\"", "\"6/2\""),
            ok.replace(r#"{"r":1,"b":0,"s":0,"a":"3/1"}"#, r#"{"r":0,"b":0,"s":1,"a":"3/1"}"#),
            ok.replace(r#",{"r":1,"b":0,"s":0,"a":"3/1"}"#, ""),
            ok.replace(r#""a":"3/1"}"#, r#""a":"3/1"},{"r":1,"b":0,"s":0,"a":"3/1"}"#),
            ok.replace("\"weight\":4", "\"weight\":4,\"extra\":0"),
            "not json".to_string(),
        ];
        for text in cases {
            assert!(from_json_str(&text).is_err(), "{text}");
        }
        let wide = r#"{"format_version":1,"weight":4,"max_trace":2,"coeffs":[{"r":1,"b":3,"s":1,"a":"1/1"}]}"#;
        let err = from_json_str(wide).unwrap_err().to_string();
        assert!(err.contains("non-canonical key (1,3,1)"), "{err}");
    }
}
