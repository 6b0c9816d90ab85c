//! JSON documents for order ideals, monomial ideals and complexes.
//!
//! Order ideal: `{"m": 3, "monomials": [[0,0,0], [0,0,1], ...]}`, sorted by
//! degree then reverse lexicographic order. Complex: `{"n": 4, "facets":
//! [[1,2], [2,3], ...]}`, 1-based and sorted. Ideal: `{"n": 4, "generators":
//! [[1,0,1,0], ...]}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ComplexError, Face, SimplicialComplex};
use crate::monomial::{Monomial, MonomialError, MonomialIdeal, OrderIdeal};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Parse { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderIdealDoc {
    pub m: usize,
    pub monomials: Vec<Vec<u32>>,
}

impl From<&OrderIdeal> for OrderIdealDoc {
    fn from(u: &OrderIdeal) -> Self {
        OrderIdealDoc { m: u.m(), monomials: u.iter().map(|w| w.exponents().to_vec()).collect() }
    }
}

impl TryFrom<OrderIdealDoc> for OrderIdeal {
    type Error = IoError;

    fn try_from(doc: OrderIdealDoc) -> Result<Self, IoError> {
        Ok(OrderIdeal::new(doc.m, doc.monomials.into_iter().map(Monomial::new))?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDoc {
    pub n: usize,
    pub facets: Vec<Face>,
}

impl From<&SimplicialComplex> for ComplexDoc {
    fn from(c: &SimplicialComplex) -> Self {
        ComplexDoc { n: c.n(), facets: c.facets().to_vec() }
    }
}

impl TryFrom<ComplexDoc> for SimplicialComplex {
    type Error = IoError;

    fn try_from(doc: ComplexDoc) -> Result<Self, IoError> {
        Ok(SimplicialComplex::new(doc.n, doc.facets)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealDoc {
    pub n: usize,
    pub generators: Vec<Vec<u32>>,
}

impl From<&MonomialIdeal> for IdealDoc {
    fn from(i: &MonomialIdeal) -> Self {
        IdealDoc { n: i.nvars(), generators: i.generators().iter().map(|g| g.exponents().to_vec()).collect() }
    }
}

impl TryFrom<IdealDoc> for MonomialIdeal {
    type Error = IoError;

    fn try_from(doc: IdealDoc) -> Result<Self, IoError> {
        Ok(MonomialIdeal::generated_by(doc.n, doc.generators.into_iter().map(Monomial::new))?)
    }
}

pub fn parse_order_ideal(text: &str) -> Result<OrderIdeal, IoError> {
    serde_json::from_str::<OrderIdealDoc>(text)?.try_into()
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, IoError> {
    serde_json::from_str::<ComplexDoc>(text)?.try_into()
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal, IoError> {
    serde_json::from_str::<IdealDoc>(text)?.try_into()
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn order_ideal_json(u: &OrderIdeal) -> String {
    to_json(&OrderIdealDoc::from(u))
}

pub fn complex_json(c: &SimplicialComplex) -> String {
    to_json(&ComplexDoc::from(c))
}

pub fn ideal_json(i: &MonomialIdeal) -> String {
    to_json(&IdealDoc::from(i))
}
