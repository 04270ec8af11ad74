//! Dense matrices over ℚ with exact Gauss–Jordan elimination.
//!
//! Matrices are row-major and may have zero rows and/or zero columns; a
//! `p×0` or `0×q` matrix is the unique linear map to/from the zero space,
//! and products involving such matrices follow the usual conventions
//! (`(p×0)·(0×q)` is the `p×q` zero matrix).  This keeps boundary cases in
//! the quiver calculus (spaces `V_0` and `V_n` are zero) entirely uniform.
//!
//! The reduced row echelon form computed by [`RationalMatrix::rref`] is the
//! canonical representative used everywhere a subspace needs a unique basis.

use std::fmt;
use std::ops::Index;

use num::{One, Zero};

use crate::rational::{format_rat, rat, Rat};

/// A dense `rows × cols` matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// The result of Gauss–Jordan elimination: the reduced row echelon form
/// together with the pivot column of each nonzero row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowEchelon {
    pub mat: RationalMatrix,
    pub pivots: Vec<usize>,
}

impl RationalMatrix {
    /// The `rows × cols` zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    /// The `n × n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds a matrix entry by entry.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    /// Builds a matrix from complete rows.
    ///
    /// # Panics
    /// Panics if the rows are ragged.  An empty list gives a `0 × 0` matrix;
    /// use [`RationalMatrix::zeros`] for `0 × q` shapes.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            assert_eq!(row.len(), n_cols, "ragged rows");
            data.extend(row);
        }
        RationalMatrix {
            rows: n_rows,
            cols: n_cols,
            data,
        }
    }

    /// Integer-literal constructor, mainly for tests and fixtures.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| rat(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        self.data[r * self.cols + c] = v;
    }

    /// The `r`-th row as a vector.
    pub fn row(&self, r: usize) -> Vec<Rat> {
        (0..self.cols).map(|c| self[(r, c)].clone()).collect()
    }

    /// The `c`-th column as a vector.
    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// Matrix product `self · rhs`.
    ///
    /// # Panics
    /// Panics unless `self.cols == rhs.rows`.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.cols, rhs.rows,
            "shape mismatch: ({}×{})·({}×{})",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        Self::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = Rat::zero();
            for k in 0..self.cols {
                acc += self.get(r, k) * rhs.get(k, c);
            }
            acc
        })
    }

    /// Matrix–vector product `self · v`.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for (k, x) in v.iter().enumerate() {
                    acc += self.get(r, k) * x;
                }
                acc
            })
            .collect()
    }

    /// Entry-wise sum.
    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch in add"
        );
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + rhs.get(r, c))
    }

    /// Entry-wise difference.
    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch in sub"
        );
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - rhs.get(r, c))
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &Rat) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c) * s)
    }

    /// Horizontal concatenation `[a | b | …]` of matrices with equal row
    /// counts.  An empty list is not allowed (the row count would be
    /// ambiguous); concatenating zero-column blocks is fine.
    pub fn hstack(parts: &[&Self]) -> Self {
        let rows = parts.first().expect("hstack of an empty list").rows;
        let cols = parts.iter().map(|p| p.cols).sum();
        for p in parts {
            assert_eq!(p.rows, rows, "hstack row mismatch");
        }
        let mut m = Self::zeros(rows, cols);
        let mut at = 0;
        for p in parts {
            for r in 0..rows {
                for c in 0..p.cols {
                    m.set(r, at + c, p[(r, c)].clone());
                }
            }
            at += p.cols;
        }
        m
    }

    /// Vertical concatenation of matrices with equal column counts.
    pub fn vstack(parts: &[&Self]) -> Self {
        let cols = parts.first().expect("vstack of an empty list").cols;
        let rows = parts.iter().map(|p| p.rows).sum();
        for p in parts {
            assert_eq!(p.cols, cols, "vstack column mismatch");
        }
        let mut m = Self::zeros(rows, cols);
        let mut at = 0;
        for p in parts {
            for r in 0..p.rows {
                for c in 0..cols {
                    m.set(at + r, c, p[(r, c)].clone());
                }
            }
            at += p.rows;
        }
        m
    }

    /// The submatrix with rows in `rr` and columns in `cr`.
    pub fn submatrix(&self, rr: std::ops::Range<usize>, cr: std::ops::Range<usize>) -> Self {
        assert!(
            rr.end <= self.rows && cr.end <= self.cols,
            "submatrix out of range"
        );
        Self::from_fn(rr.len(), cr.len(), |r, c| {
            self[(rr.start + r, cr.start + c)].clone()
        })
    }

    /// Reduced row echelon form with its pivot columns.
    ///
    /// The output has the same shape as the input (zero rows are kept), each
    /// pivot is 1 and is the only nonzero entry in its column, and pivot
    /// columns are strictly increasing.  The RREF is the canonical
    /// representative of the row space: two matrices have equal row spaces
    /// iff their RREFs agree up to trailing zero rows.
    pub fn rref(&self) -> RowEchelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // Find a pivot in column c at or below row r.
            let Some(p) = (r..m.rows).find(|&p| !m.get(p, c).is_zero()) else {
                continue;
            };
            if p != r {
                for k in 0..m.cols {
                    m.data.swap(p * m.cols + k, r * m.cols + k);
                }
            }
            let inv = {
                let piv = m.get(r, c).clone();
                Rat::one() / piv
            };
            for k in c..m.cols {
                let v = m.get(r, k) * &inv;
                m.set(r, k, v);
            }
            for q in 0..m.rows {
                if q != r && !m.get(q, c).is_zero() {
                    let f = m.get(q, c).clone();
                    for k in c..m.cols {
                        let v = m.get(q, k) - &(&f * m.get(r, k));
                        m.set(q, k, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        RowEchelon { mat: m, pivots }
    }

    /// Rank over ℚ.
    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// A canonical basis of the right kernel `{v : M·v = 0}`, returned as
    /// the rows of a matrix in RREF (possibly `0 × cols`).
    pub fn kernel_basis(&self) -> Self {
        let RowEchelon { mat, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -mat.get(row, f).clone();
            }
            basis.push(v);
        }
        let raw = if basis.is_empty() {
            Self::zeros(0, self.cols)
        } else {
            Self::from_rows(basis)
        };
        let ech = raw.rref();
        let rank = ech.pivots.len();
        ech.mat.submatrix(0..rank, 0..raw.cols())
    }

    /// The inverse, or `None` if the matrix is singular or non-square.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Self::hstack(&[self, &Self::identity(n)]);
        let ech = aug.rref();
        if ech.pivots.len() != n || ech.pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(ech.mat.submatrix(0..n, n..2 * n))
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rat;

    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        self.get(r, c)
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalMatrix({}×{}) ", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| format_rat(self.get(r, c))).collect())
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(0))
            .collect();
        writeln!(f, "[")?;
        for row in &cells {
            write!(f, "  [")?;
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{cell:>width$}", width = widths[c])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}
