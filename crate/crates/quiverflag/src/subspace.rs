//! Linear subspaces of ℚⁿ in a canonical form.
//!
//! A [`Subspace`] stores the reduced row echelon basis of its span, so two
//! subspaces are equal as sets iff they compare equal with `==`.  All the
//! lattice operations (sum, intersection, preimage under a linear map) are
//! computed exactly; "dimension" always means dimension over ℚ.

use std::fmt;

use num::Zero;

use crate::matrix::RationalMatrix;
use crate::rational::{format_rat, rat, Rat};

/// A subspace of ℚ^ambient, represented by an RREF row basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: RationalMatrix, // dim × ambient, in RREF with no zero rows
}

impl Subspace {
    /// The zero subspace of ℚ^ambient.
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RationalMatrix::zeros(0, ambient),
        }
    }

    /// All of ℚ^ambient.
    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RationalMatrix::identity(ambient),
        }
    }

    /// The span of the rows of `m` inside ℚ^(m.cols()).
    pub fn span_of_rows(m: &RationalMatrix) -> Self {
        let ech = m.rref();
        let rank = ech.pivots.len();
        Subspace {
            ambient: m.cols(),
            basis: ech.mat.submatrix(0..rank, 0..m.cols()),
        }
    }

    /// The span of the columns of `m` inside ℚ^(m.rows()) — the image of
    /// `m` as a linear map.
    pub fn image_of(m: &RationalMatrix) -> Self {
        Self::span_of_rows(&m.transpose())
    }

    /// The kernel `{v : m·v = 0}` inside ℚ^(m.cols()).
    pub fn kernel_of(m: &RationalMatrix) -> Self {
        let basis = m.kernel_basis();
        Subspace {
            ambient: m.cols(),
            basis,
        }
    }

    /// The span of a list of vectors.
    pub fn span_of_vectors(ambient: usize, vectors: &[Vec<Rat>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length != ambient dimension");
        }
        Self::span_of_rows(&RationalMatrix::from_rows(vectors.to_vec()))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// The canonical (RREF) row basis; `dim × ambient`.
    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    /// Basis as a list of vectors.
    pub fn basis_vectors(&self) -> Vec<Vec<Rat>> {
        (0..self.dim()).map(|r| self.basis.row(r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Membership test for a single vector.
    pub fn contains_vector(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length != ambient dimension");
        if v.iter().all(Rat::is_zero) {
            return true;
        }
        let stacked =
            RationalMatrix::vstack(&[&self.basis, &RationalMatrix::from_rows(vec![v.to_vec()])]);
        stacked.rank() == self.dim()
    }

    /// Inclusion test: does `self` contain `other` (i.e. `other ⊆ self`)?
    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        if other.dim() > self.dim() {
            return false;
        }
        let stacked = RationalMatrix::vstack(&[&self.basis, &other.basis]);
        stacked.rank() == self.dim()
    }

    /// The sum `self + other`.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        Self::span_of_rows(&RationalMatrix::vstack(&[&self.basis, &other.basis]))
    }

    /// The intersection `self ∩ other`.
    ///
    /// Computed from the coefficient kernel: a vector lies in both spans iff
    /// it is `xᵀ·A = yᵀ·B` for some coefficient pair `(x, y)`, i.e. `(x, y)`
    /// is in the kernel of `[Aᵀ | −Bᵀ]`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let p = self.dim();
        if p == 0 || other.dim() == 0 {
            return Self::zero(self.ambient);
        }
        let lhs = self.basis.transpose();
        let rhs = other.basis.transpose().scale(&rat(-1));
        let coeff_kernel = RationalMatrix::hstack(&[&lhs, &rhs]).kernel_basis();
        let vectors: Vec<Vec<Rat>> = (0..coeff_kernel.rows())
            .map(|r| {
                let x: Vec<Rat> = (0..p).map(|i| coeff_kernel[(r, i)].clone()).collect();
                // xᵀ·A, assembled coordinate by coordinate.
                (0..self.ambient)
                    .map(|c| {
                        let mut acc = Rat::zero();
                        for (i, xi) in x.iter().enumerate() {
                            acc += xi * self.basis.get(i, c);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Self::span_of_vectors(self.ambient, &vectors)
    }

    /// The image `m(self) = {m·v : v ∈ self}` inside ℚ^(m.rows()).
    pub fn apply(&self, m: &RationalMatrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "map domain != ambient dimension");
        Self::span_of_rows(&self.basis.mul(&m.transpose()))
    }

    /// The preimage `m⁻¹(self) = {v : m·v ∈ self}` inside ℚ^(m.cols()).
    pub fn preimage(&self, m: &RationalMatrix) -> Subspace {
        assert_eq!(m.rows(), self.ambient, "map codomain != ambient dimension");
        // self = ker(C) row-wise, so the preimage is ker(C·m).
        let c = self.annihilator();
        Self::kernel_of(&c.mul(m))
    }

    /// A matrix `C` with `self = {w : C·w = 0}`; rows form a basis of the
    /// orthogonal complement.
    pub fn annihilator(&self) -> RationalMatrix {
        self.basis.kernel_basis()
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 ⊂ Q^{}", self.ambient);
        }
        let rows: Vec<String> = (0..self.dim())
            .map(|r| {
                let entries: Vec<String> = (0..self.ambient)
                    .map(|c| format_rat(self.basis.get(r, c)))
                    .collect();
                format!("({})", entries.join(", "))
            })
            .collect();
        write!(f, "span{{{}}} ⊂ Q^{}", rows.join(", "), self.ambient)
    }
}
