//! Batch request ingestion: JSON parsing, semantic validation, and
//! resolution against command-line overrides.
//!
//! Every malformed request is rejected up front with a diagnostic naming
//! the entry id and field; nothing is silently skipped or partially
//! processed.

use logstrain::{CoordinateChart, EnergyPotential, Frame, StrainFamily, Tensor3, VarianceCase};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("invalid request JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("entry `{id}`, field {field}: {detail}")]
    Entry {
        id: String,
        field: &'static str,
        detail: String,
    },
    #[error("{0}")]
    Request(String),
}

/// Family selector: either a bare name or a name with a Seth-Hill exponent.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum FamilySpec {
    Name(String),
    Detailed { name: String, m: Option<f64> },
}

impl FamilySpec {
    fn resolve(&self) -> Result<StrainFamily, IngestError> {
        let (name, m) = match self {
            FamilySpec::Name(name) => (name.as_str(), None),
            FamilySpec::Detailed { name, m } => (name.as_str(), *m),
        };
        StrainFamily::builtin(name, m)
            .map_err(|e| IngestError::Request(format!("family: {e}")))
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnergySpec {
    pub name: Option<String>,
    pub lambda: Option<f64>,
    pub mu: Option<f64>,
}

impl EnergySpec {
    fn resolve(&self) -> Result<EnergyPotential, IngestError> {
        let name = self.name.as_deref().unwrap_or("quadratic-hencky");
        match name {
            "quadratic-hencky" => Ok(EnergyPotential::quadratic_hencky(
                self.lambda.unwrap_or(1.0),
                self.mu.unwrap_or(1.0),
            )),
            other => Err(IngestError::Request(format!(
                "energy: unknown potential `{other}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawChart {
    #[serde(rename = "J")]
    j: [[f64; 3]; 3],
    #[serde(rename = "J_hat")]
    j_hat: [[f64; 3]; 3],
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    id: String,
    #[serde(rename = "F")]
    f: [[f64; 3]; 3],
    chart: Option<RawChart>,
    variance: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRequest {
    frame: Option<String>,
    family: Option<FamilySpec>,
    entries: Vec<RawEntry>,
    energy: Option<EnergySpec>,
}

/// Validated batch entry.
#[derive(Debug, Clone)]
pub struct Entry {
    pub id: String,
    pub f: Tensor3,
    pub chart: Option<CoordinateChart>,
    pub variance: VarianceCase,
}

/// A fully validated batch request.
#[derive(Debug, Clone)]
pub struct BatchRequest {
    pub frame: Frame,
    pub family: StrainFamily,
    pub entries: Vec<Entry>,
    pub energy: Option<EnergyPotential>,
}

/// Explicit command-line settings. A set value overrides the request file;
/// unset values fall back to the file and then to the defaults
/// (frame `eulerian`, family `hencky`, variance `beta`).
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub family: Option<(String, Option<f64>)>,
    pub frame: Option<Frame>,
    pub variance: Option<VarianceCase>,
}

/// Parses a `NAME[:m]` family flag.
pub fn parse_family_flag(flag: &str) -> Result<(String, Option<f64>), String> {
    match flag.split_once(':') {
        None => Ok((flag.to_string(), None)),
        Some((name, m)) => {
            let m: f64 = m
                .parse()
                .map_err(|_| format!("family exponent `{m}` is not a number"))?;
            Ok((name.to_string(), Some(m)))
        }
    }
}

fn parse_frame(text: &str) -> Result<Frame, IngestError> {
    match text {
        "eulerian" => Ok(Frame::Eulerian),
        "lagrangian" => Ok(Frame::Lagrangian),
        other => Err(IngestError::Request(format!(
            "frame must be `eulerian` or `lagrangian`, got `{other}`"
        ))),
    }
}

fn parse_variance(text: &str) -> Result<VarianceCase, IngestError> {
    match text {
        "alpha" => Ok(VarianceCase::Alpha),
        "beta" => Ok(VarianceCase::Beta),
        other => Err(IngestError::Request(format!(
            "variance must be `alpha` or `beta`, got `{other}`"
        ))),
    }
}

fn validate_id(id: &str) -> Result<(), IngestError> {
    if id.is_empty() {
        return Err(IngestError::Request("entry id must not be empty".into()));
    }
    for bad in [',', '"', '\n', '\r'] {
        if id.contains(bad) {
            return Err(IngestError::Entry {
                id: id.into(),
                field: "id",
                detail: format!("contains {bad:?}, which the CSV writer does not quote"),
            });
        }
    }
    Ok(())
}

/// Parses and validates a request document.
pub fn load_request(text: &str, overrides: &Overrides) -> Result<BatchRequest, IngestError> {
    let raw: RawRequest = serde_json::from_str(text)?;

    let family = match &overrides.family {
        Some((name, m)) => StrainFamily::builtin(name, *m)
            .map_err(|e| IngestError::Request(format!("family: {e}")))?,
        None => match &raw.family {
            Some(spec) => spec.resolve()?,
            None => StrainFamily::hencky(),
        },
    };

    let frame = match overrides.frame {
        Some(frame) => frame,
        None => match &raw.frame {
            Some(text) => parse_frame(text)?,
            None => Frame::Eulerian,
        },
    };

    let energy = raw.energy.as_ref().map(EnergySpec::resolve).transpose()?;

    let default_variance = overrides.variance.unwrap_or(VarianceCase::Beta);
    let mut entries = Vec::with_capacity(raw.entries.len());
    for raw_entry in &raw.entries {
        validate_id(&raw_entry.id)?;
        let f = Tensor3::from_rows(raw_entry.f);
        let det = f.det();
        // negated form also rejects NaN determinants
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(det > 0.0) {
            return Err(IngestError::Entry {
                id: raw_entry.id.clone(),
                field: "F",
                detail: format!("determinant {det} is not positive"),
            });
        }
        let chart = match &raw_entry.chart {
            None => None,
            Some(raw_chart) => Some(
                CoordinateChart::from_jacobians(
                    Tensor3::from_rows(raw_chart.j),
                    Tensor3::from_rows(raw_chart.j_hat),
                )
                .map_err(|e| IngestError::Entry {
                    id: raw_entry.id.clone(),
                    field: "chart",
                    detail: e.to_string(),
                })?,
            ),
        };
        let variance = match &raw_entry.variance {
            Some(text) => parse_variance(text).map_err(|e| IngestError::Entry {
                id: raw_entry.id.clone(),
                field: "variance",
                detail: e.to_string(),
            })?,
            None => default_variance,
        };
        entries.push(Entry {
            id: raw_entry.id.clone(),
            f,
            chart,
            variance,
        });
    }

    Ok(BatchRequest {
        frame,
        family,
        entries,
        energy,
    })
}
