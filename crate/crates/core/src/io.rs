//! JSON encoding of sets, bases, verdicts and construction results.
//!
//! Scalars are strings `"a"` or `"a/b"` in lowest terms with an optional
//! leading `-`. Party labels are 1-based. Output is compact with a fixed key
//! order, so identical values always serialize to identical bytes.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bounds::Scenario;
use crate::construction::KcesResult;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::product::{Partition, PptState, ProductSet, ProductVector, SubspaceBasis};
use crate::scalar::Rational;
use crate::unextendibility::{Outcome, Verdict};

pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

fn digits(s: &str) -> Option<BigInt> {
    (!s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()))
        .then(|| s.parse().ok())
        .flatten()
}

/// Parses `-?digits(/digits)?` with a nonzero denominator.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Format(format!("invalid rational `{s}`"));
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (digits(n).ok_or_else(bad)?, digits(d).ok_or_else(bad)?),
        None => (digits(body).ok_or_else(bad)?, BigInt::from(1)),
    };
    if den.is_zero() {
        return Err(Error::Format(format!("zero denominator in `{s}`")));
    }
    let x = Rational::new(num, den);
    Ok(if negative { -x } else { x })
}

fn encode(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn decode(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

fn from_str<'a, J: Deserialize<'a>>(s: &'a str) -> Result<J> {
    serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))
}

fn to_string<J: Serialize>(j: &J) -> String {
    serde_json::to_string(j).expect("plain structs always serialize")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductVectorJson {
    pub factors: Vec<Vec<String>>,
}

impl ProductVectorJson {
    pub fn encode(v: &ProductVector<Rational>) -> Self {
        Self {
            factors: v.factors().iter().map(|f| encode(f)).collect(),
        }
    }

    pub fn decode(&self) -> Result<ProductVector<Rational>> {
        ProductVector::new(self.factors.iter().map(|f| decode(f)).collect::<Result<_>>()?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductSetJson {
    pub dims: Vec<usize>,
    pub vectors: Vec<ProductVectorJson>,
}

impl ProductSetJson {
    pub fn encode(s: &ProductSet<Rational>) -> Self {
        Self {
            dims: s.dims().to_vec(),
            vectors: s.vectors().iter().map(ProductVectorJson::encode).collect(),
        }
    }

    pub fn decode(&self) -> Result<ProductSet<Rational>> {
        let vectors = self
            .vectors
            .iter()
            .map(ProductVectorJson::decode)
            .collect::<Result<_>>()?;
        ProductSet::new(self.dims.clone(), vectors)
    }
}

fn encode_matrix(m: &Matrix<Rational>) -> Vec<Vec<String>> {
    m.row_iter().map(encode).collect()
}

fn decode_matrix(cols: usize, rows: &[Vec<String>]) -> Result<Matrix<Rational>> {
    Matrix::from_rows(cols, rows.iter().map(|r| decode(r)).collect::<Result<_>>()?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceBasisJson {
    pub dims: Vec<usize>,
    pub basis: Vec<Vec<String>>,
}

impl SubspaceBasisJson {
    pub fn encode(b: &SubspaceBasis<Rational>) -> Self {
        Self {
            dims: b.dims().to_vec(),
            basis: encode_matrix(b.basis()),
        }
    }

    pub fn decode(&self) -> Result<SubspaceBasis<Rational>> {
        let total = self.dims.iter().product();
        SubspaceBasis::new(self.dims.clone(), decode_matrix(total, &self.basis)?)
    }
}

/// A single global vector with its party dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawVectorJson {
    pub dims: Vec<usize>,
    pub vector: Vec<String>,
}

/// Input accepted by depth queries: a basis (all rows) or one raw vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StateInput {
    Basis(SubspaceBasisJson),
    Vector(RawVectorJson),
}

impl StateInput {
    /// Party dimensions and the vectors to inspect.
    pub fn decode(&self) -> Result<(Vec<usize>, Vec<Vec<Rational>>)> {
        match self {
            Self::Basis(b) => {
                let b = b.decode()?;
                Ok((b.dims().to_vec(), b.basis().to_rows()))
            }
            Self::Vector(v) => {
                let x = decode(&v.vector)?;
                if x.len() != v.dims.iter().product::<usize>() {
                    return Err(Error::DimensionMismatch(format!(
                        "vector of length {} for dims {:?}",
                        x.len(),
                        v.dims
                    )));
                }
                Ok((v.dims.clone(), vec![x]))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorJson {
    pub dims: Vec<usize>,
    pub factors: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub outcome: String,
    pub level: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vector: Option<VectorJson>,
    /// Block (1-based) receiving each member vector.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assignment: Option<Vec<usize>>,
}

impl VerdictJson {
    pub fn encode(v: &Verdict<Rational>, dims: &[usize]) -> Self {
        match &v.outcome {
            Outcome::Unextendible => Self {
                outcome: "unextendible".into(),
                level: v.level,
                partition: None,
                vector: None,
                assignment: None,
            },
            Outcome::Witness(w) => Self {
                outcome: "extendible".into(),
                level: v.level,
                partition: Some(w.partition.one_based()),
                vector: Some(VectorJson {
                    dims: w.partition.block_dims(dims),
                    factors: ProductVectorJson::encode(&w.vector).factors,
                }),
                assignment: Some(w.assignment.iter().map(|b| b + 1).collect()),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KcesResultJson {
    pub scenario: Scenario,
    pub nodes: Vec<String>,
    pub spanning: ProductSetJson,
    pub complement: SubspaceBasisJson,
    pub certified_level: usize,
}

impl KcesResultJson {
    pub fn encode(r: &KcesResult<Rational>) -> Self {
        Self {
            scenario: r.scenario,
            nodes: encode(&r.nodes),
            spanning: ProductSetJson::encode(&r.spanning),
            complement: SubspaceBasisJson::encode(&r.complement),
            certified_level: r.certified_level,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartitionVerdictJson {
    pub partition: Vec<Vec<usize>>,
    pub ppt: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PptStateJson {
    pub dims: Vec<usize>,
    pub rho: Vec<Vec<String>>,
    pub trace: String,
    pub psd: bool,
    pub bipartitions: Vec<BipartitionVerdictJson>,
    pub ppt: bool,
}

impl PptStateJson {
    pub fn encode(state: &PptState<Rational>, dims: &[usize]) -> Self {
        Self {
            dims: dims.to_vec(),
            rho: encode_matrix(&state.rho),
            trace: format_rational(&state.rho.trace()),
            psd: state.rho_psd,
            bipartitions: state
                .ppt_verdicts
                .iter()
                .map(|(p, ok): &(Partition, bool)| BipartitionVerdictJson {
                    partition: p.one_based(),
                    ppt: *ok,
                })
                .collect(),
            ppt: state.is_ppt(),
        }
    }
}

pub fn product_set_to_json(s: &ProductSet<Rational>) -> String {
    to_string(&ProductSetJson::encode(s))
}

pub fn product_set_from_json(s: &str) -> Result<ProductSet<Rational>> {
    from_str::<ProductSetJson>(s)?.decode()
}

pub fn basis_to_json(b: &SubspaceBasis<Rational>) -> String {
    to_string(&SubspaceBasisJson::encode(b))
}

pub fn basis_from_json(s: &str) -> Result<SubspaceBasis<Rational>> {
    from_str::<SubspaceBasisJson>(s)?.decode()
}

pub fn state_input_from_json(s: &str) -> Result<(Vec<usize>, Vec<Vec<Rational>>)> {
    from_str::<StateInput>(s)?.decode()
}

pub fn verdict_to_json(v: &Verdict<Rational>, dims: &[usize]) -> String {
    to_string(&VerdictJson::encode(v, dims))
}

pub fn kces_result_to_json(r: &KcesResult<Rational>) -> String {
    to_string(&KcesResultJson::encode(r))
}

pub fn ppt_state_to_json(state: &PptState<Rational>, dims: &[usize]) -> String {
    to_string(&PptStateJson::encode(state, dims))
}
