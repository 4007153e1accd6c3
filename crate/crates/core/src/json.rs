//! Versioned JSON form of characters.
//!
//! ```json
//! {"schema":1,"type":"A","rank":2,"node":1,"numbering":"bourbaki","terms":[
//! {"m":[[1,0,1]],"c":"1"},
//! ...
//! ]}
//! ```
//!
//! Each monomial is a list of `[node, shift, exponent]` triples sorted by
//! `(node, shift)`; coefficients are decimal strings so that arbitrarily
//! large multiplicities survive every JSON reader. Plain JSON integers are
//! accepted on input. Nodes are numbered as in Bourbaki.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::character::QCharacter;
use crate::monomial::YMonomial;
use crate::rootdata::{LieType, RootData, RootDataError};

pub const SCHEMA_VERSION: u32 = 1;
pub const NUMBERING: &str = "bourbaki";

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unsupported schema version {0} (expected {SCHEMA_VERSION})")]
    Schema(u32),
    #[error("unsupported node numbering {0:?}")]
    Numbering(String),
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error("term {index}: {reason}")]
    BadTerm { index: usize, reason: String },
}

impl From<serde_json::Error> for JsonError {
    fn from(e: serde_json::Error) -> Self {
        JsonError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum Coeff {
    Text(String),
    Number(u64),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct TermDoc {
    m: Vec<[i64; 3]>,
    c: Coeff,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct CharacterDoc {
    schema: u32,
    #[serde(rename = "type")]
    lie_type: LieType,
    rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    node: Option<usize>,
    #[serde(default = "default_numbering")]
    numbering: String,
    terms: Vec<TermDoc>,
}

fn default_numbering() -> String {
    NUMBERING.to_string()
}

/// A character together with the algebra it belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterFile {
    pub root_data: RootData,
    /// Set when the character is `chi_q(V_{omega_node}(0))`.
    pub node: Option<usize>,
    pub character: QCharacter,
}

/// `[node, shift, exp]` triples of a monomial.
pub fn monomial_triples(m: &YMonomial) -> Vec<[i64; 3]> {
    m.triples().map(|(i, n, e)| [i as i64, i64::from(n), i64::from(e)]).collect()
}

/// Monomial from `[node, shift, exp]` triples; rejects out-of-range entries.
pub fn monomial_from_triples(triples: &[[i64; 3]], rank: usize) -> Result<YMonomial, String> {
    let mut out = Vec::with_capacity(triples.len());
    for &[i, n, e] in triples {
        if i < 1 || i as usize > rank {
            return Err(format!("node {i} outside 1..={rank}"));
        }
        let n = i32::try_from(n).map_err(|_| format!("shift {n} out of range"))?;
        let e = i32::try_from(e).map_err(|_| format!("exponent {e} out of range"))?;
        out.push((i as usize, n, e));
    }
    Ok(YMonomial::from_factors(out))
}

/// Serializes with one term per line, in canonical monomial order.
pub fn to_json(rd: &RootData, node: Option<usize>, chi: &QCharacter) -> String {
    let mut out = format!(
        "{{\"schema\":{SCHEMA_VERSION},\"type\":\"{}\",\"rank\":{}",
        rd.lie_type(),
        rd.rank()
    );
    if let Some(node) = node {
        out.push_str(&format!(",\"node\":{node}"));
    }
    out.push_str(&format!(",\"numbering\":\"{NUMBERING}\""));
    out.push_str(",\"terms\":[");
    for (k, (m, c)) in chi.terms().enumerate() {
        out.push_str(if k == 0 { "\n" } else { ",\n" });
        let term = TermDoc {
            m: monomial_triples(m),
            c: Coeff::Text(c.to_string()),
        };
        out.push_str(&serde_json::to_string(&term).expect("term serializes"));
    }
    out.push_str("\n]}\n");
    out
}

pub fn from_json(text: &str) -> Result<CharacterFile, JsonError> {
    let doc: CharacterDoc = serde_json::from_str(text)?;
    if doc.schema != SCHEMA_VERSION {
        return Err(JsonError::Schema(doc.schema));
    }
    if doc.numbering != NUMBERING {
        return Err(JsonError::Numbering(doc.numbering));
    }
    let rd = RootData::new(doc.lie_type, doc.rank)?;
    if let Some(node) = doc.node {
        rd.check_node(node)?;
    }
    let mut chi = QCharacter::zero();
    for (index, t) in doc.terms.iter().enumerate() {
        let bad = |reason: String| JsonError::BadTerm { index, reason };
        let m = monomial_from_triples(&t.m, rd.rank()).map_err(bad)?;
        let c = match &t.c {
            Coeff::Number(n) => BigUint::from(*n),
            Coeff::Text(s) => s
                .parse::<BigUint>()
                .map_err(|_| bad(format!("coefficient {s:?} is not a decimal integer")))?,
        };
        if c == BigUint::default() {
            return Err(bad("zero coefficient".to_string()));
        }
        if chi.contains(&m) {
            return Err(bad(format!("duplicate monomial {m}")));
        }
        chi.add_term(m, c);
    }
    Ok(CharacterFile {
        root_data: rd,
        node: doc.node,
        character: chi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> YMonomial {
        s.parse().unwrap()
    }

    fn a1() -> (RootData, QCharacter) {
        let rd = RootData::new(LieType::A, 1).unwrap();
        let chi = QCharacter::from_terms([(m("Y{1,0}"), 1u32), (m("Y{1,2}^-1"), 1u32)]);
        (rd, chi)
    }

    #[test]
    fn exact_text() {
        let (rd, chi) = a1();
        assert_eq!(
            to_json(&rd, Some(1), &chi),
            "{\"schema\":1,\"type\":\"A\",\"rank\":1,\"node\":1,\"numbering\":\"bourbaki\",\"terms\":[\n\
             {\"m\":[[1,0,1]],\"c\":\"1\"},\n\
             {\"m\":[[1,2,-1]],\"c\":\"1\"}\n]}\n"
        );
    }

    #[test]
    fn round_trip() {
        let (rd, chi) = a1();
        let big = chi.add(&QCharacter::from_terms([(m("Y{1,4}^3"), BigUint::from(10u32).pow(30))]));
        let back = from_json(&to_json(&rd, None, &big)).unwrap();
        assert_eq!(back.character, big);
        assert_eq!(back.root_data, rd);
        assert_eq!(back.node, None);
        let empty = from_json(&to_json(&rd, None, &QCharacter::zero())).unwrap();
        assert!(empty.character.is_empty());
    }

    #[test]
    fn numeric_coefficients_are_accepted() {
        let f = from_json(r#"{"schema":1,"type":"A","rank":2,"terms":[{"m":[[1,0,1]],"c":1},{"m":[],"c":"2"}]}"#).unwrap();
        assert_eq!(f.character.coeff(&m("Y{1,0}")), BigUint::from(1u32));
        assert_eq!(f.character.coeff(&YMonomial::one()), BigUint::from(2u32));
    }

    #[test]
    fn errors_are_located() {
        match from_json("{\"schema\":1,\n\"type\":") {
            Err(JsonError::Syntax { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            from_json(r#"{"schema":2,"type":"A","rank":1,"terms":[]}"#),
            Err(JsonError::Schema(2))
        ));
        assert!(matches!(
            from_json(r#"{"schema":1,"type":"A","rank":1,"terms":[{"m":[[2,0,1]],"c":"1"}]}"#),
            Err(JsonError::BadTerm { index: 0, .. })
        ));
        assert!(matches!(
            from_json(r#"{"schema":1,"type":"A","rank":1,"terms":[{"m":[],"c":"1"},{"m":[[1,0,1]],"c":"x"}]}"#),
            Err(JsonError::BadTerm { index: 1, .. })
        ));
        assert!(matches!(
            from_json(r#"{"schema":1,"type":"E","rank":3,"terms":[]}"#),
            Err(JsonError::RootData(_))
        ));
        assert!(matches!(
            from_json(r#"{"schema":1,"type":"A","rank":1,"numbering":"kac","terms":[]}"#),
            Err(JsonError::Numbering(_))
        ));
    }
}
