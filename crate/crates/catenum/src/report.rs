//! Machine-readable report shapes and the alpha file format.
//!
//! Big integers are rendered as decimal strings so consumers never lose
//! precision. Every JSON report embeds the tool version and the
//! semantically relevant part of its configuration; execution-only
//! settings (worker count, output paths) are excluded so that reruns of
//! the same query are byte-identical.

use crate::bounds::{BoundsReport, SigmaEstimate, TripleSet};
use crate::census::{LabeledClass, Method, OrderedCensus, ReducedCensus};
use crate::compose::CategoryTable;
use crate::conditions::ConditionReport;
use crate::model::AlphaFunction;
use crate::{Error, Result};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use std::path::Path;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// On-disk alpha function: the support as 1-based triples, optionally
/// doubled as a bit string in lexicographic triple order. When both are
/// present they must agree.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlphaFile {
    pub n: usize,
    pub ones: Vec<(u8, u8, u8)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bits: Option<String>,
}

impl AlphaFile {
    pub fn from_alpha(alpha: &AlphaFunction) -> Self {
        AlphaFile {
            n: alpha.n(),
            ones: alpha.ones(),
            bits: Some(alpha.bits_string()),
        }
    }

    /// Validates and converts to an [`AlphaFunction`].
    pub fn to_alpha(&self) -> Result<AlphaFunction> {
        if let Err(e) = AlphaFunction::zero(self.n) {
            return Err(Error::AlphaFile { field: "n", message: e.to_string() });
        }
        let mut seen = std::collections::HashSet::new();
        for &t in &self.ones {
            if !seen.insert(t) {
                return Err(Error::AlphaFile {
                    field: "ones",
                    message: format!("duplicate triple {t:?}"),
                });
            }
        }
        let from_ones = AlphaFunction::from_ones(self.n, &self.ones).map_err(|e| match e {
            Error::AlphaFile { .. } => e,
            other => Error::AlphaFile { field: "ones", message: other.to_string() },
        })?;
        if let Some(bits) = &self.bits {
            let from_bits = AlphaFunction::from_bits_str(self.n, bits)?;
            if from_bits != from_ones {
                return Err(Error::AlphaFile {
                    field: "bits",
                    message: "bit string disagrees with the `ones` list".into(),
                });
            }
        }
        Ok(from_ones)
    }

    pub fn load(path: &Path) -> Result<AlphaFunction> {
        let raw = std::fs::read_to_string(path)?;
        let file: AlphaFile = serde_json::from_str(&raw)?;
        file.to_alpha()
    }

    pub fn save(alpha: &AlphaFunction, path: &Path) -> Result<()> {
        let file = AlphaFile::from_alpha(alpha);
        std::fs::write(path, format!("{}\n", serde_json::to_string_pretty(&file)?))?;
        Ok(())
    }
}

/// Census mode selector shared by the CLI and the reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Ordered,
    Reduced,
}

/// The query part of an `enumerate` run. Worker count is deliberately
/// absent: it cannot affect the result.
#[derive(Clone, Debug, Serialize)]
pub struct EnumerateConfig {
    pub n: usize,
    pub mode: Mode,
    pub method: Method,
    pub certify: bool,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassReport {
    pub canonical_bits: String,
    pub orbit_size: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusResult {
    pub tool_version: &'static str,
    pub config: EnumerateConfig,
    pub n: usize,
    pub mode: Mode,
    pub method: Method,
    /// Decimal string.
    pub count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<ClassReport>>,
    pub certified: bool,
    pub seed: Option<u64>,
}

impl CensusResult {
    pub fn ordered(census: &OrderedCensus, config: EnumerateConfig) -> Self {
        CensusResult {
            tool_version: TOOL_VERSION,
            n: census.n,
            mode: Mode::Ordered,
            method: census.method,
            count: census.count.to_string(),
            classes: None,
            certified: census.certified,
            seed: config.seed,
            config,
        }
    }

    pub fn reduced(census: &ReducedCensus, config: EnumerateConfig, certified: bool) -> Self {
        CensusResult {
            tool_version: TOOL_VERSION,
            n: census.n,
            mode: Mode::Reduced,
            method: config.method,
            count: census.count.to_string(),
            classes: Some(
                census
                    .classes
                    .iter()
                    .map(|c| ClassReport {
                        canonical_bits: c.canonical.bits_string(),
                        orbit_size: c.orbit_size,
                    })
                    .collect(),
            ),
            certified,
            seed: config.seed,
            config,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub tool_version: &'static str,
    pub config: VerifyConfig,
    pub valid: bool,
    pub c1_violations: Vec<(u8, u8, u8)>,
    pub c2_violations: Vec<(u8, u8, u8, u8)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyConfig {
    pub alpha: String,
    pub n: usize,
}

impl VerifyReport {
    pub fn new(report: &ConditionReport, alpha_path: String, n: usize) -> Self {
        VerifyReport {
            tool_version: TOOL_VERSION,
            config: VerifyConfig { alpha: alpha_path, n },
            valid: report.valid,
            c1_violations: report.c1_violations.clone(),
            c2_violations: report.c2_violations.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RationalReport {
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaReport {
    pub lower: f64,
    pub upper: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundsJson {
    pub tool_version: &'static str,
    pub config: NConfig,
    pub n: usize,
    pub lower_reduced: RationalReport,
    pub lower_ordered: String,
    pub upper: String,
    pub binom: String,
    pub sigma: SigmaReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct NConfig {
    pub n: usize,
}

impl BoundsJson {
    pub fn new(report: &BoundsReport, sigma: &SigmaEstimate) -> Self {
        BoundsJson {
            tool_version: TOOL_VERSION,
            config: NConfig { n: report.n },
            n: report.n,
            lower_reduced: RationalReport {
                num: report.lower_reduced.numer().to_string(),
                den: report.lower_reduced.denom().to_string(),
            },
            lower_ordered: report.lower_ordered.to_string(),
            upper: report.upper.to_string(),
            binom: report.binom.to_string(),
            sigma: SigmaReport {
                lower: sigma.analytic_lower,
                upper: sigma.analytic_upper,
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessConfig {
    pub n: usize,
    pub parts: (usize, usize, usize),
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub tool_version: &'static str,
    pub config: WitnessConfig,
    pub n: usize,
    pub parts: (usize, usize, usize),
    pub size: usize,
    pub members: Vec<(u8, u8, u8)>,
    /// `2^|H|`, decimal string.
    pub subset_count: String,
    /// Indicator alpha of the set, in the alpha file shape; absent when n
    /// exceeds the alpha capacity.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<AlphaFile>,
}

impl WitnessReport {
    pub fn new(set: &TripleSet, parts: (usize, usize, usize), alpha: Option<AlphaFunction>) -> Self {
        WitnessReport {
            tool_version: TOOL_VERSION,
            config: WitnessConfig { n: set.n(), parts },
            n: set.n(),
            parts,
            size: set.len(),
            members: set.iter().collect(),
            subset_count: (BigUint::from(1u32) << set.len()).to_string(),
            alpha: alpha.as_ref().map(AlphaFile::from_alpha),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub g: String,
    pub f: String,
    pub gf: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableJson {
    pub tool_version: &'static str,
    pub config: NConfig,
    pub n: usize,
    pub rows: Vec<TableRow>,
}

/// Rows of the composition table, sorted lexicographically by the
/// rendered `(g, f)` pair. This rendering order is the export contract
/// for both the CSV and JSON variants.
pub fn table_rows(table: &CategoryTable) -> Vec<TableRow> {
    let mut rows: Vec<TableRow> = table
        .iter()
        .map(|(g, f, gf)| TableRow {
            g: g.to_string(),
            f: f.to_string(),
            gf: gf.to_string(),
        })
        .collect();
    rows.sort_by(|a, b| (&a.g, &a.f).cmp(&(&b.g, &b.f)));
    rows
}

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("g,f,gf\n");
    for row in rows {
        out.push_str(&format!("{},{},{}\n", row.g, row.f, row.gf));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyEntry {
    pub label: &'static str,
    pub orbit_size: u64,
    pub support: Vec<(u8, u8, u8)>,
    pub canonical_bits: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyReport {
    pub tool_version: &'static str,
    pub config: NConfig,
    pub n: usize,
    pub classes: Vec<ClassifyEntry>,
}

impl ClassifyReport {
    pub fn new(labeled: &[LabeledClass]) -> Self {
        ClassifyReport {
            tool_version: TOOL_VERSION,
            config: NConfig { n: 3 },
            n: 3,
            classes: labeled
                .iter()
                .map(|c| ClassifyEntry {
                    label: c.label,
                    orbit_size: c.orbit_size,
                    support: c.canonical.ones(),
                    canonical_bits: c.canonical.bits_string(),
                })
                .collect(),
        }
    }
}

/// Pretty JSON with a trailing newline; the byte-exact output format of
/// every JSON-emitting subcommand.
pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    Ok(format!("{}\n", serde_json::to_string_pretty(value)?))
}
