use std::fmt;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::arith::{to_display_string, to_fraction_string, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Text(String),
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<u64> for ParamValue {
    fn from(v: u64) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<u32> for ParamValue {
    fn from(v: u32) -> Self {
        ParamValue::Int(v.into())
    }
}

impl From<&str> for ParamValue {
    fn from(v: &str) -> Self {
        ParamValue::Text(v.to_string())
    }
}

impl From<String> for ParamValue {
    fn from(v: String) -> Self {
        ParamValue::Text(v)
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Text(v) => f.write_str(v),
        }
    }
}

/// One checked instance of an identity: `pass` is exactly `lhs == rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    /// Kept in insertion order, which is also the serialized order.
    pub params: Vec<(String, ParamValue)>,
    pub lhs: Rational,
    pub rhs: Rational,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new<I, K, V>(identity: impl Into<String>, params: I, lhs: Rational, rhs: Rational) -> Self
    where
        I: IntoIterator<Item = (K, V)>,
        K: Into<String>,
        V: Into<ParamValue>,
    {
        let pass = lhs == rhs;
        VerificationReport {
            identity: identity.into(),
            params: params.into_iter().map(|(k, v)| (k.into(), v.into())).collect(),
            lhs,
            rhs,
            pass,
        }
    }

    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} [{}]: {} vs {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.identity,
            self.params_string(),
            to_display_string(&self.lhs),
            to_display_string(&self.rhs)
        )
    }
}

struct Params<'a>(&'a [(String, ParamValue)]);

impl Serialize for Params<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("VerificationReport", 5)?;
        st.serialize_field("identity", &self.identity)?;
        st.serialize_field("params", &Params(&self.params))?;
        st.serialize_field("lhs", &to_fraction_string(&self.lhs))?;
        st.serialize_field("rhs", &to_fraction_string(&self.rhs))?;
        st.serialize_field("pass", &self.pass)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{frac, int};

    #[test]
    fn json_layout_is_stable() {
        let reports = vec![
            VerificationReport::new("x", [("p", ParamValue::from(3u64)), ("N", "(1,0,1)".into())], frac(1, 2), frac(1, 2)),
            VerificationReport::new("y", Vec::<(String, ParamValue)>::new(), int(1), int(2)),
        ];
        assert_eq!(
            serde_json::to_string(&reports).unwrap(),
            r#"[{"identity":"x","params":{"p":3,"N":"(1,0,1)"},"lhs":"1/2","rhs":"1/2","pass":true},{"identity":"y","params":{},"lhs":"1/1","rhs":"2/1","pass":false}]"#
        );
        assert_eq!(reports[0].to_string(), "PASS x [p=3 N=(1,0,1)]: 1/2 vs 1/2");
    }
}
