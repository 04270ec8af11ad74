//! Partitions, framing/vertex dimension vectors, and the box bookkeeping
//! shared by the lift and flag constructions.
//!
//! A partition λ = (λ₁ ≥ λ₂ ≥ … ≥ λ_r) of n with r ≥ 2 rows fixes
//! everything else in the crate:
//!
//! * the framing dimensions `d_i = #{rows of length i}` for `1 ≤ i ≤ n−1`;
//! * the vertex dimensions `v_i = (n−i) − Σ_{j>i} (j−i)·d_j`, equivalently
//!   `n − i − #{boxes strictly right of column i}`;
//! * the Young-diagram boxes `t_{r,j}` (row r, column j) that index the
//!   ambient basis of ℂⁿ and, filtered by `j ≤ λ_r − l`, the extra summand
//!   glued onto `V_l` by the lift.
//!
//! One-row partitions are rejected: the constructions here are trivial and
//! partly undefined for them (every `v_i` would be 0).
//!
//! Boxes are ordered by `(column, row length, row index)`, all ascending.
//! This is the canonical ambient coordinate order used for flags and
//! serialization; subspace comparisons are canonical regardless.

use std::fmt;

use crate::error::{Error, Result};

/// A partition of n with at least two rows, stored largest part first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

/// One box of the Young diagram of λ; `row` and `col` are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoxCoord {
    pub row: usize,
    pub col: usize,
}

/// The dimension vectors attached to a partition: framing dims `d` and
/// vertex dims `v`, each indexed `1..=n−1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionData {
    n: usize,
    d: Vec<usize>,
    v: Vec<usize>,
}

impl Partition {
    /// Validates and builds a partition: nonempty, non-increasing, positive
    /// parts, and at least two rows.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("empty part list".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be non-increasing, got {parts:?}"
            )));
        }
        if parts.len() < 2 {
            return Err(Error::InvalidPartition(
                "a single-row partition has no nontrivial flag/fiber data; at least two rows are required"
                    .into(),
            ));
        }
        Ok(Partition { parts })
    }

    /// The size n = Σ λ_r.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows r.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of row `r` (1-based).
    pub fn part(&self, r: usize) -> usize {
        self.parts[r - 1]
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// True for λ = (n−k, k).
    pub fn is_two_row(&self) -> bool {
        self.parts.len() == 2
    }

    /// For a two-row partition, the length k of the second row.
    pub fn second_row(&self) -> Option<usize> {
        self.is_two_row().then(|| self.parts[1])
    }

    /// The dimension vectors (d, v) attached to λ.
    pub fn dims(&self) -> DimensionData {
        let n = self.n();
        let d: Vec<usize> = (1..n)
            .map(|i| self.parts.iter().filter(|&&p| p == i).count())
            .collect();
        let v: Vec<usize> = (1..n)
            .map(|i| {
                let right: usize = self.parts.iter().map(|&p| p.saturating_sub(i)).sum();
                (n - i)
                    .checked_sub(right)
                    .expect("v_i must be non-negative for a multi-row partition")
            })
            .collect();
        DimensionData { n, d, v }
    }

    /// All n boxes of the Young diagram in canonical ambient order.
    pub fn ambient_boxes(&self) -> Vec<BoxCoord> {
        self.level_boxes(0)
    }

    /// The boxes `t_{r,j}` with `j ≤ λ_r − l`, in canonical order.  These
    /// index the extra summand at level `l`; `l = 0` gives every box.
    pub fn level_boxes(&self, l: usize) -> Vec<BoxCoord> {
        let mut boxes = Vec::new();
        for (idx, &len) in self.parts.iter().enumerate() {
            let row = idx + 1;
            for col in 1..=len.saturating_sub(l) {
                boxes.push(BoxCoord { row, col });
            }
        }
        boxes.sort_by_key(|b| (b.col, self.part(b.row), b.row));
        boxes
    }

    /// Position of a box in the canonical order of [`Partition::level_boxes`]
    /// at level `l`, if present.
    pub fn level_box_index(&self, l: usize, b: BoxCoord) -> Option<usize> {
        self.level_boxes(l).iter().position(|&x| x == b)
    }

    /// The rows r with λ_r = i, ascending — the labeled basis of the
    /// framing space D_i.
    pub fn shadow_rows(&self, i: usize) -> Vec<usize> {
        (1..=self.rows()).filter(|&r| self.part(r) == i).collect()
    }

    /// Display name for a row: `e`/`f` for two-row partitions, `t{r}`
    /// otherwise.
    pub fn row_name(&self, r: usize) -> String {
        if self.is_two_row() {
            if r == 1 {
                "e".into()
            } else {
                "f".into()
            }
        } else {
            format!("t{r}")
        }
    }

    /// Display name for a box: `e2`, `f1`, or `t3_1`.
    pub fn box_name(&self, b: BoxCoord) -> String {
        if self.is_two_row() {
            format!("{}{}", self.row_name(b.row), b.col)
        } else {
            format!("t{}_{}", b.row, b.col)
        }
    }

    /// The JSON label for a framing basis vector: always `t{row}`.
    pub fn row_token(&self, r: usize) -> String {
        format!("t{r}")
    }

    /// Parses a framing label `t{row}` back to its row index.
    pub fn parse_row_token(&self, s: &str) -> Result<usize> {
        let bad = || Error::Input(format!("bad framing label {s:?}"));
        let r: usize = s
            .strip_prefix('t')
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?;
        if r == 0 || r > self.rows() {
            return Err(bad());
        }
        Ok(r)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl DimensionData {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Framing dimension `d_i`; zero outside `1..=n−1`.
    pub fn d(&self, i: usize) -> usize {
        if (1..self.n).contains(&i) {
            self.d[i - 1]
        } else {
            0
        }
    }

    /// Vertex dimension `v_i`; zero outside `1..=n−1` (in particular
    /// `v_0 = v_n = 0`, the zero spaces at the ends of the chain).
    pub fn v(&self, i: isize) -> usize {
        if i >= 1 && (i as usize) < self.n {
            self.v[i as usize - 1]
        } else {
            0
        }
    }

    pub fn d_vec(&self) -> &[usize] {
        &self.d
    }

    pub fn v_vec(&self) -> &[usize] {
        &self.v
    }
}
