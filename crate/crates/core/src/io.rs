//! File formats: scheme JSON, code text files, and enumerator term lists.
//!
//! Scheme JSON:
//! `{"v": 4, "d": 2, "relation": [[0,1,2,1], …], "P": [[{"re":"1","im":"0"}, …]],
//!   "translation": {"orders": [4], "elements": [[0],[1],[2],[3]]}}`
//! with `P` and `translation` optional. All numbers in exact values are strings.

use serde::{Deserialize, Serialize};

use crate::arith::{ExactMatrix, GaussRat, MPoly};
use crate::error::{Error, Result};
use crate::scheme::{AssociationScheme, RelationTable, TranslationStructure};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TranslationJson {
    pub orders: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<Vec<u32>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SchemeJson {
    pub v: usize,
    pub d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetric: Option<bool>,
    pub relation: Vec<Vec<usize>>,
    #[serde(rename = "P", default, skip_serializing_if = "Option::is_none")]
    pub p: Option<ExactMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub translation: Option<TranslationJson>,
}

impl SchemeJson {
    pub fn from_scheme(s: &AssociationScheme) -> Self {
        SchemeJson {
            v: s.v(),
            d: s.d(),
            symmetric: Some(s.is_symmetric()),
            relation: s.table().to_rows(),
            p: s.eigenmatrix().cloned(),
            translation: s.translation().map(|t| TranslationJson {
                orders: t.orders().to_vec(),
                elements: Some((0..t.group_order()).map(|x| t.element(x).to_vec()).collect()),
            }),
        }
    }

    /// Table only, before any axiom check.
    pub fn table(&self) -> Result<RelationTable> {
        if self.relation.len() != self.v {
            return Err(Error::Parse(format!("relation has {} rows, v = {}", self.relation.len(), self.v)));
        }
        RelationTable::from_rows(&self.relation, Some(self.d))
    }

    pub fn into_scheme(self) -> Result<AssociationScheme> {
        let table = self.table()?;
        let translation = match self.translation {
            Some(TranslationJson { orders, elements: Some(e) }) => Some(TranslationStructure::new(orders, e)?),
            Some(TranslationJson { orders, elements: None }) => Some(TranslationStructure::standard(orders)?),
            None => None,
        };
        let scheme = AssociationScheme::build(table, translation)?;
        match self.p {
            Some(p) => scheme.with_eigenmatrix(p),
            None => Ok(scheme.with_computed_eigenmatrix()),
        }
    }
}

pub fn scheme_to_json(s: &AssociationScheme) -> serde_json::Value {
    serde_json::to_value(SchemeJson::from_scheme(s)).expect("serializable")
}

pub fn parse_scheme_json(text: &str) -> Result<SchemeJson> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// One word per line, symbols separated by whitespace or commas; blank
/// lines and `#` comments are skipped.
pub fn parse_code_text(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut words = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let word = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| Error::Parse(format!("line {}: bad symbol {s:?}", lineno + 1))))
            .collect::<Result<Vec<_>>>()?;
        words.push(word);
    }
    Ok(words)
}

pub fn code_to_text(words: &[Vec<usize>]) -> String {
    let mut out = String::new();
    for w in words {
        let line: Vec<String> = w.iter().map(usize::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    pub coeff: GaussRat,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyJson {
    pub num_vars: usize,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn from_poly(p: &MPoly) -> Self {
        PolyJson {
            num_vars: p.num_vars(),
            terms: p.terms().rev().map(|(e, c)| TermJson { exponents: e.clone(), coeff: c.clone() }).collect(),
        }
    }

    pub fn into_poly(self) -> Result<MPoly> {
        let mut p = MPoly::zero(self.num_vars);
        for t in self.terms {
            if t.exponents.len() != self.num_vars {
                return Err(Error::Parse(format!("term {:?} in {} variables", t.exponents, self.num_vars)));
            }
            p.add_term(t.exponents, t.coeff);
        }
        Ok(p)
    }
}

pub fn poly_to_json(p: &MPoly) -> serde_json::Value {
    serde_json::to_value(PolyJson::from_poly(p)).expect("serializable")
}

pub fn parse_poly_json(text: &str) -> Result<MPoly> {
    let pj: PolyJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    pj.into_poly()
}

pub fn matrix_to_json(m: &ExactMatrix) -> serde_json::Value {
    serde_json::to_value(m).expect("serializable")
}

/// Gaussian rational from `"p/q"`, `"a+bi"` or a JSON object `{re, im}`.
pub fn parse_gauss(text: &str) -> Result<GaussRat> {
    let t = text.trim();
    if t.starts_with('{') {
        return serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()));
    }
    t.parse()
}
