//! JSON shapes for quandles, cochains, group-ring elements, presentations
//! and reports.

use std::collections::BTreeMap;

use quandle_core::cohomology::CohomologyGroup;
use quandle_core::surfaces::{Relation, WhiteVertex};
use quandle_core::{Coefficients, Cochain, GroupRingElement, Quandle, SurfaceBraidPresentation};
use serde::{Deserialize, Serialize};

use crate::names::parse_coefficients;
use crate::LabError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleJson {
    pub n: usize,
    pub op: Vec<Vec<usize>>,
}

impl QuandleJson {
    pub fn from_quandle(x: &Quandle) -> Self {
        Self {
            n: x.len(),
            op: x.table(),
        }
    }

    pub fn to_quandle(&self) -> Result<Quandle, LabError> {
        if self.op.len() != self.n {
            return Err(LabError::Validation(format!(
                "table has {} rows but n = {}",
                self.op.len(),
                self.n
            )));
        }
        Ok(Quandle::from_table(&self.op)?)
    }
}

/// `{"degree": k, "coeff": "Z3", "values": {"(0,1,0)": 2}}`; omitted tuples
/// are zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainJson {
    pub degree: usize,
    pub coeff: String,
    pub values: BTreeMap<String, i64>,
}

fn tuple_key(t: &[usize]) -> String {
    let inner: Vec<String> = t.iter().map(usize::to_string).collect();
    format!("({})", inner.join(","))
}

fn parse_tuple_key(key: &str) -> Result<Vec<usize>, LabError> {
    let bad = || LabError::Validation(format!("bad tuple key {key:?}"));
    let inner = key.trim().strip_prefix('(').and_then(|s| s.strip_suffix(')')).ok_or_else(bad)?;
    inner.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| bad())).collect()
}

impl CochainJson {
    pub fn from_cochain(f: &Cochain) -> Self {
        Self {
            degree: f.degree(),
            coeff: f.coefficients().to_string(),
            values: f.support().map(|(t, v)| (tuple_key(&t), v)).collect(),
        }
    }

    /// Builds the cochain on an `n`-element quandle.
    pub fn to_cochain(&self, n: usize) -> Result<Cochain, LabError> {
        let c = parse_coefficients(&self.coeff)?;
        let tuples = self
            .values
            .iter()
            .map(|(k, &v)| {
                let t = parse_tuple_key(k)?;
                if t.len() != self.degree {
                    return Err(LabError::Validation(format!("tuple {k} does not have {} entries", self.degree)));
                }
                if let Some(&e) = t.iter().find(|&&e| e >= n) {
                    return Err(LabError::Validation(format!("element {e} out of range in {k}")));
                }
                Ok((t, v))
            })
            .collect::<Result<Vec<_>, LabError>>()?;
        let terms: Vec<(&[usize], i64)> = tuples.iter().map(|(t, v)| (&t[..], *v)).collect();
        Ok(Cochain::from_terms(n, self.degree, c, &terms)?)
    }
}

/// `{"coeff": "Z3", "terms": {"0": 3, "1": 6}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRingJson {
    pub coeff: String,
    pub terms: BTreeMap<String, i64>,
}

impl GroupRingJson {
    pub fn from_element(g: &GroupRingElement) -> Self {
        Self {
            coeff: g.coefficients().to_string(),
            terms: g.terms().map(|(e, c)| (e.to_string(), c)).collect(),
        }
    }

    pub fn to_element(&self) -> Result<GroupRingElement, LabError> {
        let c = parse_coefficients(&self.coeff)?;
        let terms = self
            .terms
            .iter()
            .map(|(k, &v)| {
                k.parse::<i64>()
                    .map(|e| (e, v))
                    .map_err(|_| LabError::Validation(format!("bad exponent {k:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GroupRingElement::from_terms(c, terms))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationJson {
    pub w: Vec<i64>,
    pub k: usize,
    pub eps: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhiteVertexJson {
    pub beta: Vec<i64>,
    pub i: usize,
    pub eps: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub degree: usize,
    pub relations: Vec<RelationJson>,
    pub white_vertices: Vec<WhiteVertexJson>,
}

impl PresentationJson {
    pub fn from_presentation(p: &SurfaceBraidPresentation) -> Self {
        Self {
            degree: p.degree(),
            relations: p
                .relations()
                .iter()
                .map(|r: &Relation| RelationJson {
                    w: r.word.letters().to_vec(),
                    k: r.k,
                    eps: r.eps.into(),
                })
                .collect(),
            white_vertices: p
                .white_vertices()
                .iter()
                .map(|w: &WhiteVertex| WhiteVertexJson {
                    beta: w.beta.letters().to_vec(),
                    i: w.i,
                    eps: w.eps.into(),
                })
                .collect(),
        }
    }

    pub fn to_presentation(&self) -> Result<SurfaceBraidPresentation, LabError> {
        if self.degree == 0 {
            return Err(LabError::Validation("degree must be positive".into()));
        }
        let relations: Vec<(&[i64], usize, i64)> = self.relations.iter().map(|r| (&r.w[..], r.k, r.eps)).collect();
        let vertices: Vec<(&[i64], usize, i64)> =
            self.white_vertices.iter().map(|w| (&w.beta[..], w.i, w.eps)).collect();
        Ok(SurfaceBraidPresentation::new(self.degree, &relations, &vertices)?)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CohomologyJson {
    pub quandle: String,
    pub degree: usize,
    pub theory: String,
    pub coeff: String,
    /// Orders of the cyclic summands, `0` standing for `Z`.
    pub summands: Vec<u64>,
    pub free_rank: usize,
    pub torsion: Vec<u64>,
    pub group: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representatives: Option<Vec<CochainJson>>,
}

impl CohomologyJson {
    pub fn new(quandle: &str, h: &CohomologyGroup, with_representatives: bool) -> Self {
        Self {
            quandle: quandle.to_string(),
            degree: h.degree(),
            theory: h.theory().to_string(),
            coeff: h.coefficients().to_string(),
            summands: h.summands().to_vec(),
            free_rank: h.free_rank(),
            torsion: h.torsion(),
            group: h.to_string(),
            representatives: with_representatives
                .then(|| h.representatives().iter().map(CochainJson::from_cochain).collect()),
        }
    }

    /// Rational cohomology read off from the integral group.
    pub fn rational(quandle: &str, h: &CohomologyGroup) -> Self {
        let r = h.free_rank();
        Self {
            quandle: quandle.to_string(),
            degree: h.degree(),
            theory: h.theory().to_string(),
            coeff: "Q".into(),
            summands: vec![0; r],
            free_rank: r,
            torsion: Vec::new(),
            group: match r {
                0 => "0".into(),
                1 => "Q".into(),
                _ => format!("Q^{r}"),
            },
            representatives: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub input: String,
    pub quandle: String,
    pub cocycle: String,
    pub coeff: String,
    pub colorings: i64,
    pub result: GroupRingJson,
    pub display: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl InvariantReport {
    pub fn new(input: String, quandle: &str, cocycle: &str, coeff: Coefficients, value: &GroupRingElement) -> Self {
        Self {
            input,
            quandle: quandle.to_string(),
            cocycle: cocycle.to_string(),
            coeff: coeff.to_string(),
            colorings: value.total(),
            result: GroupRingJson::from_element(value),
            display: value.to_string(),
            elapsed_ms: None,
        }
    }
}
