//! JSON config documents: parse, validate, render.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::{rat_from_str, rat_to_string, CartanDatum, ParamSet};

/// Errors arising while loading or validating a config document.
#[derive(Debug, Error)]
pub enum ConfigError {
    /// The document does not parse against the schema.
    #[error("config schema error: {0}")]
    Schema(String),
    /// A well-formed document violates one of the datum/parameter axioms.
    #[error("invariant violated ({axiom}): {detail}")]
    Invariant { axiom: String, detail: String },
}

impl ConfigError {
    pub(crate) fn invariant(axiom: impl Into<String>, detail: impl Into<String>) -> Self {
        ConfigError::Invariant { axiom: axiom.into(), detail: detail.into() }
    }
}

/// The on-disk document shape.
#[derive(Serialize, Deserialize)]
struct ConfigDoc {
    indices: Vec<String>,
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
    #[serde(default)]
    t: BTreeMap<String, String>,
    #[serde(default)]
    s: BTreeMap<String, String>,
    #[serde(default)]
    homogeneous: bool,
}

/// Parse and validate a JSON config document.
///
/// Schema: `{"indices":[...], "a":[[...]], "d":[...], "t":{"i,j":"num/den"},
/// "s":{"i,j,p,q":"num/den"}, "homogeneous":bool}` with index symbols from
/// `indices` and rationals in lowest terms.
pub fn load_config(text: &str) -> Result<(CartanDatum, ParamSet), ConfigError> {
    let doc: ConfigDoc =
        serde_json::from_str(text).map_err(|e| ConfigError::Schema(e.to_string()))?;
    let datum = CartanDatum::new(doc.indices, doc.a, doc.d)?;

    let mut t = BTreeMap::new();
    for (key, value) in &doc.t {
        let parts: Vec<&str> = key.split(',').map(str::trim).collect();
        let [si, sj] = parts[..] else {
            return Err(ConfigError::Schema(format!("t key {key:?} is not \"i,j\"")));
        };
        let i = datum
            .index_of(si)
            .ok_or_else(|| ConfigError::Schema(format!("unknown index {si:?} in t key")))?;
        let j = datum
            .index_of(sj)
            .ok_or_else(|| ConfigError::Schema(format!("unknown index {sj:?} in t key")))?;
        let v = rat_from_str(value).map_err(ConfigError::Schema)?;
        t.insert((i, j), v);
    }

    let mut s = BTreeMap::new();
    for (key, value) in &doc.s {
        let parts: Vec<&str> = key.split(',').map(str::trim).collect();
        let [si, sj, sp, sq] = parts[..] else {
            return Err(ConfigError::Schema(format!("s key {key:?} is not \"i,j,p,q\"")));
        };
        let i = datum
            .index_of(si)
            .ok_or_else(|| ConfigError::Schema(format!("unknown index {si:?} in s key")))?;
        let j = datum
            .index_of(sj)
            .ok_or_else(|| ConfigError::Schema(format!("unknown index {sj:?} in s key")))?;
        let p: usize = sp
            .parse()
            .map_err(|_| ConfigError::Schema(format!("bad exponent {sp:?} in s key")))?;
        let q: usize = sq
            .parse()
            .map_err(|_| ConfigError::Schema(format!("bad exponent {sq:?} in s key")))?;
        let v = rat_from_str(value).map_err(ConfigError::Schema)?;
        s.insert((i, j, p, q), v);
    }

    let params = ParamSet::new(&datum, t, s, doc.homogeneous)?;
    Ok((datum, params))
}

/// Render a datum + parameter set back into the JSON document form.
///
/// `load_config(render_config(x)) = x`.
pub fn render_config(datum: &CartanDatum, params: &ParamSet) -> String {
    let doc = ConfigDoc {
        indices: datum.symbols().to_vec(),
        a: datum.a_rows().to_vec(),
        d: datum.d_vec().to_vec(),
        t: params
            .t_entries()
            .map(|(i, j, v)| (format!("{},{}", datum.symbol(i), datum.symbol(j)), rat_to_string(v)))
            .collect(),
        s: params
            .s_entries()
            .map(|(i, j, p, q, v)| {
                (format!("{},{},{p},{q}", datum.symbol(i), datum.symbol(j)), rat_to_string(v))
            })
            .collect(),
        homogeneous: params.homogeneous(),
    };
    serde_json::to_string_pretty(&doc).expect("config document serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    const A2_CONFIG: &str = r#"{
        "indices": ["1", "2"],
        "a": [[2, -1], [-1, 2]],
        "d": [1, 1],
        "t": {"1,2": "2", "2,1": "-1/3"},
        "s": {},
        "homogeneous": true
    }"#;

    #[test]
    fn loads_a2() {
        let (datum, params) = load_config(A2_CONFIG).unwrap();
        assert_eq!(datum.rank(), 2);
        assert_eq!(datum.d_off(0, 1), 1);
        assert_eq!(params.t(0, 1), crate::rat(2, 1));
        assert_eq!(params.t(1, 0), crate::rat(-1, 3));
    }

    #[test]
    fn rejects_zero_iff_violation() {
        let bad = A2_CONFIG.replace("[2, -1], [-1, 2]", "[2, -1], [0, 2]");
        let err = load_config(&bad).unwrap_err();
        assert!(err.to_string().contains("a_ij=0 iff a_ji=0"));
    }

    #[test]
    fn rejects_nonunit_t() {
        let bad = A2_CONFIG.replace("\"1,2\": \"2\"", "\"1,2\": \"0\"");
        let err = load_config(&bad).unwrap_err();
        assert!(err.to_string().contains("t must be a unit"));
    }

    #[test]
    fn round_trips() {
        let (datum, params) = load_config(A2_CONFIG).unwrap();
        let rendered = render_config(&datum, &params);
        let (datum2, params2) = load_config(&rendered).unwrap();
        assert_eq!(datum, datum2);
        assert_eq!(params, params2);
    }
}
