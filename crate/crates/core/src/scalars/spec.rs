use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::ScalarError;

/// Serializable description of a coefficient field.
///
/// JSON: `{"kind":"Q"}`, `{"kind":"Fp","p":5}` or
/// `{"kind":"Quad","base":{..},"minpoly":[c0,c1]}` for `t^2 + c1 t + c0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldSpec {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Fp")]
    Prime { p: u64 },
    #[serde(rename = "Quad")]
    Quad {
        base: Box<FieldSpec>,
        minpoly: [Value; 2],
    },
}

impl FieldSpec {
    pub fn prime(p: u64) -> Self {
        FieldSpec::Prime { p }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime { p } => *p,
            FieldSpec::Quad { base, .. } => base.characteristic(),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime { p } => write!(f, "Fp:{p}"),
            FieldSpec::Quad { base, minpoly } => {
                let coef = |v: &Value| match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                write!(f, "{base}[t]/(t^2")?;
                for (c, var) in [(coef(&minpoly[1]), "t"), (coef(&minpoly[0]), "")] {
                    match c.as_str() {
                        "0" => {}
                        "1" if !var.is_empty() => write!(f, " + t")?,
                        s => match s.strip_prefix('-') {
                            Some(rest) => write!(f, " - {rest}{var}")?,
                            None => write!(f, " + {s}{var}")?,
                        },
                    }
                }
                write!(f, ")")
            }
        }
    }
}

/// Parses the command-line shorthand `Q` or `Fp:<p>`.
impl FromStr for FieldSpec {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let p = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix("fp:"))
            .or_else(|| s.strip_prefix("F"))
            .ok_or_else(|| ScalarError::Parse(s.to_string()))?;
        let p: u64 = p.parse().map_err(|_| ScalarError::Parse(s.to_string()))?;
        Ok(FieldSpec::Prime { p })
    }
}
