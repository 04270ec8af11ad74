//! JSON serialization for representations, lifts, flags, cup diagrams and
//! corpus entries, plus human-readable span notation.
//!
//! Rationals serialize as strings `"p/q"` (`"p"` when the denominator is 1)
//! and matrices as `{"rows":r,"cols":c,"data":[["p/q",…],…]}` row-major.
//! Framing maps are keyed by shadow index and carry explicit row-label
//! lists (`"labels":["t2","t1"]`), so input files may list a shadow's rows
//! in any order; parsing normalizes to ascending row index.  Omitted
//! `Gamma`/`Delta` entries are zero maps.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cup::CupDiagram;
use crate::error::{Error, Result};
use crate::flag::Flag;
use crate::lift::ModifiedRep;
use crate::matrix::RationalMatrix;
use crate::partition::Partition;
use crate::quiver::QuiverRep;
use crate::rational::{format_rat, parse_rat};
use crate::subspace::Subspace;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixDto {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<String>>,
}

impl MatrixDto {
    pub fn from_matrix(m: &RationalMatrix) -> Self {
        MatrixDto {
            rows: m.rows(),
            cols: m.cols(),
            data: (0..m.rows())
                .map(|r| (0..m.cols()).map(|c| format_rat(&m[(r, c)])).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<RationalMatrix> {
        if self.data.len() != self.rows || self.data.iter().any(|row| row.len() != self.cols) {
            return Err(Error::Input(format!(
                "matrix data does not match declared shape {}×{}",
                self.rows, self.cols
            )));
        }
        let mut m = RationalMatrix::zeros(self.rows, self.cols);
        for (r, row) in self.data.iter().enumerate() {
            for (c, s) in row.iter().enumerate() {
                m.set(r, c, parse_rat(s)?);
            }
        }
        Ok(m)
    }
}

/// A framing map together with the diagram-row labels naming its shadow
/// coordinates (columns of `Γ`, rows of `Δ`), in file order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FramedMapDto {
    pub labels: Vec<String>,
    pub matrix: MatrixDto,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuiverRepDto {
    pub partition: Vec<usize>,
    #[serde(rename = "A")]
    pub a: Vec<MatrixDto>,
    #[serde(rename = "B")]
    pub b: Vec<MatrixDto>,
    #[serde(rename = "Gamma", default, skip_serializing_if = "BTreeMap::is_empty")]
    pub gamma: BTreeMap<String, FramedMapDto>,
    #[serde(rename = "Delta", default, skip_serializing_if = "BTreeMap::is_empty")]
    pub delta: BTreeMap<String, FramedMapDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// The column permutation taking file label order to ascending row order.
fn label_positions(lam: &Partition, shadow: usize, labels: &[String]) -> Result<Vec<usize>> {
    let expected = lam.shadow_rows(shadow);
    let mut rows = Vec::with_capacity(labels.len());
    for label in labels {
        let r = lam.parse_row_token(label)?;
        if lam.part(r) != shadow {
            return Err(Error::Input(format!(
                "label {label} names a row of length {}, not {shadow}",
                lam.part(r)
            )));
        }
        rows.push(r);
    }
    let mut sorted = rows.clone();
    sorted.sort_unstable();
    if sorted != expected {
        return Err(Error::Input(format!(
            "labels {labels:?} do not enumerate the rows of length {shadow}"
        )));
    }
    // positions[p] = file index of the p-th row in ascending order
    Ok(expected
        .iter()
        .map(|r| rows.iter().position(|x| x == r).expect("checked above"))
        .collect())
}

impl QuiverRepDto {
    pub fn from_rep(rep: &QuiverRep, seed: Option<u64>) -> Self {
        let lam = rep.partition();
        let framed = |shadow: usize, m: &RationalMatrix| FramedMapDto {
            labels: lam
                .shadow_rows(shadow)
                .into_iter()
                .map(|r| lam.row_token(r))
                .collect(),
            matrix: MatrixDto::from_matrix(m),
        };
        QuiverRepDto {
            partition: lam.parts().to_vec(),
            a: (1..=lam.n().saturating_sub(2))
                .map(|i| MatrixDto::from_matrix(&rep.a(i as isize)))
                .collect(),
            b: (1..=lam.n().saturating_sub(2))
                .map(|i| MatrixDto::from_matrix(&rep.b(i as isize)))
                .collect(),
            gamma: rep
                .gamma_indices()
                .map(|s| (s.to_string(), framed(s, &rep.gamma(s))))
                .collect(),
            delta: rep
                .delta_indices()
                .map(|s| (s.to_string(), framed(s, &rep.delta(s))))
                .collect(),
            seed,
        }
    }

    pub fn to_rep(&self) -> Result<QuiverRep> {
        let lam = Partition::new(self.partition.clone())?;
        let a = self
            .a
            .iter()
            .map(MatrixDto::to_matrix)
            .collect::<Result<Vec<_>>>()?;
        let b = self
            .b
            .iter()
            .map(MatrixDto::to_matrix)
            .collect::<Result<Vec<_>>>()?;
        let mut gamma = BTreeMap::new();
        for (key, dto) in &self.gamma {
            let shadow: usize = key
                .parse()
                .map_err(|_| Error::Input(format!("bad shadow index {key:?}")))?;
            let perm = label_positions(&lam, shadow, &dto.labels)?;
            let raw = dto.matrix.to_matrix()?;
            if raw.cols() != perm.len() {
                return Err(Error::Input(format!(
                    "Gamma_{shadow} has {} columns for {} labels",
                    raw.cols(),
                    perm.len()
                )));
            }
            gamma.insert(
                shadow,
                RationalMatrix::from_fn(raw.rows(), raw.cols(), |r, c| raw[(r, perm[c])].clone()),
            );
        }
        let mut delta = BTreeMap::new();
        for (key, dto) in &self.delta {
            let shadow: usize = key
                .parse()
                .map_err(|_| Error::Input(format!("bad shadow index {key:?}")))?;
            let perm = label_positions(&lam, shadow, &dto.labels)?;
            let raw = dto.matrix.to_matrix()?;
            if raw.rows() != perm.len() {
                return Err(Error::Input(format!(
                    "Delta_{shadow} has {} rows for {} labels",
                    raw.rows(),
                    perm.len()
                )));
            }
            delta.insert(
                shadow,
                RationalMatrix::from_fn(raw.rows(), raw.cols(), |r, c| raw[(perm[r], c)].clone()),
            );
        }
        QuiverRep::new(lam, a, b, gamma, delta)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubspaceDto {
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FlagDto {
    pub n: usize,
    pub labels: Vec<String>,
    pub spaces: Vec<SubspaceDto>,
}

impl FlagDto {
    pub fn from_flag(flag: &Flag, labels: &[impl AsRef<str>]) -> Self {
        FlagDto {
            n: flag.n(),
            labels: labels.iter().map(|s| s.as_ref().to_string()).collect(),
            spaces: flag
                .proper_spaces()
                .iter()
                .map(|s| SubspaceDto {
                    dim: s.dim(),
                    basis: (0..s.dim())
                        .map(|r| {
                            (0..s.ambient())
                                .map(|c| format_rat(&s.basis()[(r, c)]))
                                .collect()
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn to_flag(&self) -> Result<Flag> {
        let mut proper = Vec::with_capacity(self.spaces.len());
        for (idx, dto) in self.spaces.iter().enumerate() {
            let m = MatrixDto {
                rows: dto.basis.len(),
                cols: self.n,
                data: dto.basis.clone(),
            }
            .to_matrix()?;
            let s = Subspace::span_of_rows(&m);
            if s.dim() != dto.dim {
                return Err(Error::Input(format!(
                    "space {} declares dim {} but its basis spans dim {}",
                    idx + 1,
                    dto.dim,
                    s.dim()
                )));
            }
            proper.push(s);
        }
        Flag::from_spaces(self.n, proper)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CupDiagramDto {
    pub n: usize,
    pub cups: Vec<(usize, usize)>,
}

impl CupDiagramDto {
    pub fn from_diagram(d: &CupDiagram) -> Self {
        CupDiagramDto {
            n: d.n(),
            cups: d.cups().to_vec(),
        }
    }

    pub fn to_diagram(&self) -> Result<CupDiagram> {
        CupDiagram::new(self.n, self.cups.clone())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LevelDto {
    pub level: usize,
    pub labels: Vec<String>,
}

/// A modified representation with explicit per-level basis labels.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModifiedRepDto {
    pub partition: Vec<usize>,
    pub ambient_labels: Vec<String>,
    pub levels: Vec<LevelDto>,
    #[serde(rename = "Atilde")]
    pub atilde: Vec<MatrixDto>,
    #[serde(rename = "Btilde")]
    pub btilde: Vec<MatrixDto>,
    #[serde(rename = "Gamma1")]
    pub gamma1: MatrixDto,
    #[serde(rename = "Delta1")]
    pub delta1: MatrixDto,
}

impl ModifiedRepDto {
    pub fn from_modified(mrep: &ModifiedRep) -> Self {
        let lam = mrep.partition();
        let n = mrep.dims().n();
        let level_labels = |l: usize| -> Vec<String> {
            let coords = mrep.coords(l);
            let mut labels: Vec<String> = (1..=coords.v_dim).map(|p| format!("v{l}_{p}")).collect();
            labels.extend(coords.boxes.iter().map(|&b| lam.box_name(b)));
            labels
        };
        ModifiedRepDto {
            partition: lam.parts().to_vec(),
            ambient_labels: level_labels(0),
            levels: (1..n)
                .map(|l| LevelDto {
                    level: l,
                    labels: level_labels(l),
                })
                .collect(),
            atilde: (1..=n.saturating_sub(2))
                .map(|l| MatrixDto::from_matrix(mrep.atilde(l)))
                .collect(),
            btilde: (1..=n.saturating_sub(2))
                .map(|l| MatrixDto::from_matrix(mrep.btilde(l)))
                .collect(),
            gamma1: MatrixDto::from_matrix(mrep.gamma1()),
            delta1: MatrixDto::from_matrix(mrep.delta1()),
        }
    }

    pub fn to_modified(&self) -> Result<ModifiedRep> {
        ModifiedRep::new(
            Partition::new(self.partition.clone())?,
            self.atilde
                .iter()
                .map(MatrixDto::to_matrix)
                .collect::<Result<Vec<_>>>()?,
            self.btilde
                .iter()
                .map(MatrixDto::to_matrix)
                .collect::<Result<Vec<_>>>()?,
            self.gamma1.to_matrix()?,
            self.delta1.to_matrix()?,
        )
    }
}

/// One regression-corpus item: a representation with its expected flag and,
/// when the point is in classification scope, its expected components.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusEntryDto {
    pub name: String,
    pub rep: QuiverRepDto,
    pub expected_flag: FlagDto,
    #[serde(default)]
    pub expected_components: Option<Vec<Vec<(usize, usize)>>>,
}

pub fn from_json<'a, T: Deserialize<'a>>(json: &'a str) -> Result<T> {
    serde_json::from_str(json).map_err(|e| Error::Json(e.to_string()))
}

pub fn to_json<T: Serialize>(value: &T, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value).expect("DTOs always serialize")
    } else {
        serde_json::to_string(value).expect("DTOs always serialize")
    }
}

/// Parses a representation file, returning the rep and its recorded seed.
pub fn parse_rep(json: &str) -> Result<(QuiverRep, Option<u64>)> {
    let dto: QuiverRepDto = from_json(json)?;
    Ok((dto.to_rep()?, dto.seed))
}

/// One basis row as a signed linear combination of labels, e.g. `e1 - f2`.
pub fn span_term(row: &[crate::rational::Rat], labels: &[impl AsRef<str>]) -> String {
    use num::{One, Signed, Zero};
    let mut out = String::new();
    for (c, val) in row.iter().enumerate() {
        if val.is_zero() {
            continue;
        }
        let mag = val.abs();
        if out.is_empty() {
            if val.is_negative() {
                out.push('-');
            }
        } else if val.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !mag.is_one() {
            out.push_str(&format_rat(&mag));
            out.push(' ');
        }
        out.push_str(labels[c].as_ref());
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Human-readable flag rendering: one `F_i = <…>` line per proper space.
pub fn flag_pretty(flag: &Flag, labels: &[impl AsRef<str>]) -> String {
    let mut lines = Vec::new();
    for (i, s) in flag.proper_spaces().iter().enumerate() {
        let terms: Vec<String> = (0..s.dim())
            .map(|r| span_term(&s.basis().row(r), labels))
            .collect();
        lines.push(format!("F{} = <{}>", i + 1, terms.join(", ")));
    }
    lines.join("\n")
}
