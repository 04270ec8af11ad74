//! Framed linear-chain quiver representations and their point conditions.
//!
//! For a partition λ of n with vertex dimensions `v` and framing dimensions
//! `d`, a representation is a tuple of linear maps
//!
//! ```text
//!   A_i : V_i → V_{i+1},   B_i : V_{i+1} → V_i        (i = 1 … n−2)
//!   Γ_i : D_i → V_i,       Δ_i : V_i → D_i            (i with d_i > 0)
//! ```
//!
//! with `V_i = ℚ^{v_i}` and `D_i = ℚ^{d_i}`.  Indices 0 and n denote zero
//! spaces, and any composite through them is the zero map of the right
//! shape.  The two point conditions are
//!
//! * admissibility: `B_i·A_i = A_{i−1}·B_{i−1} + Γ_i·Δ_i` for all i, and
//! * stability: `Im A_{i−1} + Σ_{j ≥ i} Im Γ_{j→i} = V_i` for all i,
//!
//! where `Γ_{j→i}` routes the framing space at shadow index j to vertex i
//! along B's (j ≥ i) or A's (j ≤ i).  The columns of each `Γ_i` (rows of
//! `Δ_i`) are labeled by the rows of λ of length i, in ascending row order.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::partition::{DimensionData, Partition};
use crate::subspace::Subspace;

/// A framed representation of the type-A chain attached to λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverRep {
    partition: Partition,
    dims: DimensionData,
    a: Vec<RationalMatrix>,
    b: Vec<RationalMatrix>,
    gamma: BTreeMap<usize, RationalMatrix>,
    delta: BTreeMap<usize, RationalMatrix>,
}

impl QuiverRep {
    /// Builds and shape-checks a representation.
    ///
    /// `a[i−1]` is `A_i` (`v_{i+1} × v_i`) and `b[i−1]` is `B_i`
    /// (`v_i × v_{i+1}`) for `i = 1 … n−2`.  `gamma[&i]` is `Γ_i`
    /// (`v_i × d_i`) with columns in ascending-row label order, `delta[&i]`
    /// is `Δ_i` (`d_i × v_i`) with rows likewise; entries may only appear at
    /// shadow indices (`d_i > 0`), and all-zero maps are normalized away.
    pub fn new(
        partition: Partition,
        a: Vec<RationalMatrix>,
        b: Vec<RationalMatrix>,
        gamma: BTreeMap<usize, RationalMatrix>,
        delta: BTreeMap<usize, RationalMatrix>,
    ) -> Result<Self> {
        let dims = partition.dims();
        let n = dims.n();
        let chain = n.saturating_sub(2);
        if a.len() != chain || b.len() != chain {
            return Err(Error::Input(format!(
                "expected {chain} maps in each of A and B for n = {n}, got {} and {}",
                a.len(),
                b.len()
            )));
        }
        for i in 1..=chain {
            let (ar, ac) = (a[i - 1].rows(), a[i - 1].cols());
            let want = (dims.v(i as isize + 1), dims.v(i as isize));
            if (ar, ac) != want {
                return Err(Error::Input(format!(
                    "A_{i} has shape {ar}×{ac}, expected {}×{}",
                    want.0, want.1
                )));
            }
            let (br, bc) = (b[i - 1].rows(), b[i - 1].cols());
            if (br, bc) != (want.1, want.0) {
                return Err(Error::Input(format!(
                    "B_{i} has shape {br}×{bc}, expected {}×{}",
                    want.1, want.0
                )));
            }
        }
        for (&i, m) in &gamma {
            let want = (dims.v(i as isize), dims.d(i));
            if dims.d(i) == 0 {
                return Err(Error::Input(format!("Γ_{i} given but d_{i} = 0")));
            }
            if (m.rows(), m.cols()) != want {
                return Err(Error::Input(format!(
                    "Γ_{i} has shape {}×{}, expected {}×{}",
                    m.rows(),
                    m.cols(),
                    want.0,
                    want.1
                )));
            }
        }
        for (&i, m) in &delta {
            let want = (dims.d(i), dims.v(i as isize));
            if dims.d(i) == 0 {
                return Err(Error::Input(format!("Δ_{i} given but d_{i} = 0")));
            }
            if (m.rows(), m.cols()) != want {
                return Err(Error::Input(format!(
                    "Δ_{i} has shape {}×{}, expected {}×{}",
                    m.rows(),
                    m.cols(),
                    want.0,
                    want.1
                )));
            }
        }
        let gamma = gamma.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        let delta = delta.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        Ok(QuiverRep {
            partition,
            dims,
            a,
            b,
            gamma,
            delta,
        })
    }

    /// The representation with every map zero (admissible, but unstable
    /// whenever some `v_i > 0`).
    pub fn zero(partition: Partition) -> Self {
        let dims = partition.dims();
        let n = dims.n();
        let chain = n.saturating_sub(2);
        let a = (1..=chain)
            .map(|i| RationalMatrix::zeros(dims.v(i as isize + 1), dims.v(i as isize)))
            .collect();
        let b = (1..=chain)
            .map(|i| RationalMatrix::zeros(dims.v(i as isize), dims.v(i as isize + 1)))
            .collect();
        QuiverRep {
            partition,
            dims,
            a,
            b,
            gamma: BTreeMap::new(),
            delta: BTreeMap::new(),
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn dims(&self) -> &DimensionData {
        &self.dims
    }

    /// `A_i` for any integer i; zero map of shape `v_{i+1} × v_i` outside
    /// the stored range.
    pub fn a(&self, i: isize) -> RationalMatrix {
        let n = self.dims.n() as isize;
        if (1..=n - 2).contains(&i) {
            self.a[i as usize - 1].clone()
        } else {
            RationalMatrix::zeros(self.dims.v(i + 1), self.dims.v(i))
        }
    }

    /// `B_i` for any integer i; zero map of shape `v_i × v_{i+1}` outside
    /// the stored range.
    pub fn b(&self, i: isize) -> RationalMatrix {
        let n = self.dims.n() as isize;
        if (1..=n - 2).contains(&i) {
            self.b[i as usize - 1].clone()
        } else {
            RationalMatrix::zeros(self.dims.v(i), self.dims.v(i + 1))
        }
    }

    /// `Γ_i` (`v_i × d_i`); the zero matrix when absent.
    pub fn gamma(&self, i: usize) -> RationalMatrix {
        self.gamma
            .get(&i)
            .cloned()
            .unwrap_or_else(|| RationalMatrix::zeros(self.dims.v(i as isize), self.dims.d(i)))
    }

    /// `Δ_i` (`d_i × v_i`); the zero matrix when absent.
    pub fn delta(&self, i: usize) -> RationalMatrix {
        self.delta
            .get(&i)
            .cloned()
            .unwrap_or_else(|| RationalMatrix::zeros(self.dims.d(i), self.dims.v(i as isize)))
    }

    /// Shadow indices with a stored (nonzero) `Γ`.
    pub fn gamma_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.gamma.keys().copied()
    }

    /// Shadow indices with a stored (nonzero) `Δ`.
    pub fn delta_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.delta.keys().copied()
    }

    /// True iff every `Δ_i` is zero.
    pub fn delta_is_zero(&self) -> bool {
        self.delta.is_empty()
    }

    /// The smallest shadow index with `Δ_i ≠ 0`, if any.
    pub fn first_nonzero_delta(&self) -> Option<usize> {
        self.delta.keys().next().copied()
    }

    /// `A_{p→q} = A_{q−1}···A_p : V_p → V_q` for `p ≤ q`; the identity when
    /// `p = q`.  Factors through a zero space collapse to the zero map.
    pub fn a_composite(&self, p: isize, q: isize) -> RationalMatrix {
        assert!(p <= q, "a_composite requires p ≤ q, got {p} → {q}");
        let mut m = RationalMatrix::identity(self.dims.v(p));
        for i in p..q {
            m = self.a(i).mul(&m);
        }
        m
    }

    /// `B_{q→p} = B_p···B_{q−1} : V_q → V_p` for `p ≤ q`; the identity when
    /// `p = q`.
    pub fn b_composite(&self, q: isize, p: isize) -> RationalMatrix {
        assert!(p <= q, "b_composite requires p ≤ q, got {q} → {p}");
        let mut m = RationalMatrix::identity(self.dims.v(q));
        for i in (p..q).rev() {
            m = self.b(i).mul(&m);
        }
        m
    }

    /// `Γ_{j→i} : D_j → V_i`, the framing injection routed to vertex i
    /// (along B's for `j ≥ i`, along A's for `j ≤ i`).
    ///
    /// Errors if `d_j = 0`; `i` may be any integer (zero spaces beyond the
    /// chain give zero-row results).
    pub fn gamma_to(&self, j: usize, i: isize) -> Result<RationalMatrix> {
        if self.dims.d(j) == 0 {
            return Err(Error::MissingShadow { index: j });
        }
        let jj = j as isize;
        let route = if jj >= i {
            self.b_composite(jj, i)
        } else {
            self.a_composite(jj, i)
        };
        Ok(route.mul(&self.gamma(j)))
    }

    /// `Δ_{j→i} : V_j → D_i`, the return map from vertex j to the framing
    /// space at shadow index i.
    ///
    /// Errors if `d_i = 0`; `j` may be any integer.
    pub fn delta_to(&self, j: isize, i: usize) -> Result<RationalMatrix> {
        if self.dims.d(i) == 0 {
            return Err(Error::MissingShadow { index: i });
        }
        let ii = i as isize;
        let route = if j >= ii {
            self.b_composite(j, ii)
        } else {
            self.a_composite(j, ii)
        };
        Ok(self.delta(i).mul(&route))
    }

    /// First vertex where admissibility fails, checking `i = 1 … n−1`
    /// ascending; `None` if admissible.
    pub fn admissibility_violation(&self) -> Option<usize> {
        let n = self.dims.n() as isize;
        for i in 1..n {
            let lhs = self.b(i).mul(&self.a(i));
            let mut rhs = self.a(i - 1).mul(&self.b(i - 1));
            let iu = i as usize;
            if self.dims.d(iu) > 0 {
                rhs = rhs.add(&self.gamma(iu).mul(&self.delta(iu)));
            }
            if lhs != rhs {
                return Some(iu);
            }
        }
        None
    }

    pub fn is_admissible(&self) -> bool {
        self.admissibility_violation().is_none()
    }

    /// First vertex where stability fails, checking ascending; `None` if
    /// stable.
    pub fn stability_violation(&self) -> Option<usize> {
        let n = self.dims.n();
        for i in 1..n {
            let ii = i as isize;
            let mut span = Subspace::image_of(&self.a(ii - 1));
            for j in i..n {
                if self.dims.d(j) > 0 {
                    let routed = self.gamma_to(j, ii).expect("d_j > 0 checked");
                    span = span.sum(&Subspace::image_of(&routed));
                }
            }
            if !span.is_full() {
                return Some(i);
            }
        }
        None
    }

    pub fn is_stable(&self) -> bool {
        self.stability_violation().is_none()
    }

    /// Errors with the first violated vertex unless the representation is
    /// admissible and stable.
    pub fn require_admissible_stable(&self) -> Result<()> {
        if let Some(vertex) = self.admissibility_violation() {
            return Err(Error::NotAdmissible { vertex });
        }
        if let Some(vertex) = self.stability_violation() {
            return Err(Error::NotStable { vertex });
        }
        Ok(())
    }

    /// True iff every framing return composite `Δ_{i→j′} ∘ Γ_{j→i}`
    /// vanishes, for meeting vertices `i = 2 … n−1` and shadow indices
    /// `j, j′ ≥ i` (rows of λ still alive at level i).
    ///
    /// These are exactly the corner blocks consumed by the lift closed
    /// forms: the lift of an admissible stable representation satisfies the
    /// modified admissibility equations iff this predicate holds.  It holds
    /// automatically when Δ = 0.
    pub fn shadow_return_maps_vanish(&self) -> bool {
        let n = self.dims.n();
        for i in 2..n {
            for j in i..n {
                if self.dims.d(j) == 0 {
                    continue;
                }
                let into = self.gamma_to(j, i as isize).expect("d_j > 0 checked");
                for jp in i..n {
                    if self.dims.d(jp) == 0 {
                        continue;
                    }
                    let back = self.delta_to(i as isize, jp).expect("d_j' > 0 checked");
                    if !back.mul(&into).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The base-change action: `g[i−1]` acts on `V_i` for `i = 1 … n−1`.
    ///
    /// `A_i ↦ g_{i+1} A_i g_i⁻¹`, `B_i ↦ g_i B_i g_{i+1}⁻¹`,
    /// `Γ_i ↦ g_i Γ_i`, `Δ_i ↦ Δ_i g_i⁻¹`.  Errors on wrong count, wrong
    /// shape, or a singular `g_i`.
    pub fn apply_gl(&self, g: &[RationalMatrix]) -> Result<QuiverRep> {
        let n = self.dims.n();
        if g.len() != n - 1 {
            return Err(Error::Input(format!(
                "expected {} base-change matrices, got {}",
                n - 1,
                g.len()
            )));
        }
        let mut inv = Vec::with_capacity(g.len());
        for (idx, gi) in g.iter().enumerate() {
            let i = idx + 1;
            let vi = self.dims.v(i as isize);
            if gi.rows() != vi || gi.cols() != vi {
                return Err(Error::Input(format!(
                    "g_{i} has shape {}×{}, expected {vi}×{vi}",
                    gi.rows(),
                    gi.cols()
                )));
            }
            inv.push(
                gi.inverse()
                    .ok_or_else(|| Error::Input(format!("g_{i} is singular")))?,
            );
        }
        let gm = |i: usize| -> &RationalMatrix { &g[i - 1] };
        let gm_inv = |i: usize| -> &RationalMatrix { &inv[i - 1] };
        let chain = n.saturating_sub(2);
        let a = (1..=chain)
            .map(|i| gm(i + 1).mul(&self.a[i - 1]).mul(gm_inv(i)))
            .collect();
        let b = (1..=chain)
            .map(|i| gm(i).mul(&self.b[i - 1]).mul(gm_inv(i + 1)))
            .collect();
        let gamma = self.gamma.iter().map(|(&i, m)| (i, gm(i).mul(m))).collect();
        let delta = self
            .delta
            .iter()
            .map(|(&i, m)| (i, m.mul(gm_inv(i))))
            .collect();
        Ok(QuiverRep {
            partition: self.partition.clone(),
            dims: self.dims.clone(),
            a,
            b,
            gamma,
            delta,
        })
    }
}
