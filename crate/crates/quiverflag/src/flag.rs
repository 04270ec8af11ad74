//! Complete flags in the framing space and the Springer / slice membership
//! predicates.
//!
//! The framing space `D̃₁ ≅ ℚⁿ` carries the fixed nilpotent `x` of Jordan
//! type λ (each diagram row is one Jordan block, `t_{r,j} ↦ t_{r,j−1}`) and
//! its sl2 partner `y`.  An admissible stable representation determines a
//! complete flag `F_0 ⊂ F_1 ⊂ … ⊂ F_n` in `D̃₁` by two independent routes:
//!
//! * [`flag_of`] works on the unmodified data, building the matrices `M_l`
//!   column by column over the diagram boxes of column index ≤ `l`
//!   (`M_{l+1} = [A_l M_l | Γ_{λ_r→l+1} columns]`) and taking kernels;
//! * [`flag_via_lift`] takes kernels of the lifted composites
//!   `Γ̃_{1→l} : D̃₁ → Ṽ_l`.
//!
//! The two agree, which downstream code checks rather than assumes.  On top
//! of the flag sit three predicates: [`springer_membership`] (`x`-stability
//! of the flag), [`is_springer_point`] (the slice endomorphism `Δ̃₁Γ̃₁`
//! equals `x` exactly), and [`slodowy_membership`] (the slice equations for
//! the pair of endomorphism and flag).

use crate::error::{Error, Result};
use crate::lift::{sl2_x, sl2_y, ModifiedRep};
use crate::matrix::RationalMatrix;
use crate::partition::Partition;
use crate::quiver::QuiverRep;
use crate::subspace::Subspace;

/// The fixed nilpotent of Jordan type λ on the framing space, with its sl2
/// partner and the ambient box labels.
#[derive(Clone, Debug)]
pub struct NilpotentData {
    partition: Partition,
    x: RationalMatrix,
    y: RationalMatrix,
    labels: Vec<String>,
}

impl NilpotentData {
    pub fn new(partition: &Partition) -> Self {
        let labels = partition
            .ambient_boxes()
            .into_iter()
            .map(|b| partition.box_name(b))
            .collect();
        NilpotentData {
            x: sl2_x(partition, 0),
            y: sl2_y(partition, 0),
            partition: partition.clone(),
            labels,
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn x(&self) -> &RationalMatrix {
        &self.x
    }

    pub fn y(&self) -> &RationalMatrix {
        &self.y
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }
}

/// A complete flag `F_0 ⊂ F_1 ⊂ … ⊂ F_n` in ℚⁿ, stored with both trivial
/// ends so that `space(i)` matches the subscript.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    spaces: Vec<Subspace>,
}

impl Flag {
    /// Builds a flag from the proper spaces `F_1 … F_n` (the zero space is
    /// prepended), validating dimensions and nesting.
    pub fn from_spaces(n: usize, proper: Vec<Subspace>) -> Result<Self> {
        if proper.len() != n {
            return Err(Error::Input(format!(
                "expected {n} flag spaces, got {}",
                proper.len()
            )));
        }
        let mut spaces = vec![Subspace::zero(n)];
        spaces.extend(proper);
        for (i, s) in spaces.iter().enumerate() {
            if s.ambient() != n {
                return Err(Error::Input(format!(
                    "flag space F_{i} lives in ℚ^{}, expected ℚ^{n}",
                    s.ambient()
                )));
            }
            if s.dim() != i {
                return Err(Error::FlagDimension {
                    level: i,
                    expected: i,
                    got: s.dim(),
                });
            }
            if i > 0 && !s.contains(&spaces[i - 1]) {
                return Err(Error::Input(format!("flag spaces are not nested at F_{i}")));
            }
        }
        Ok(Flag { spaces })
    }

    pub fn n(&self) -> usize {
        self.spaces.len() - 1
    }

    /// `F_i` for `0 ≤ i ≤ n`.
    pub fn space(&self, i: usize) -> &Subspace {
        &self.spaces[i]
    }

    /// The proper spaces `F_1 … F_n`.
    pub fn proper_spaces(&self) -> &[Subspace] {
        &self.spaces[1..]
    }
}

/// The flag of an admissible stable representation, computed on the
/// unmodified data: `F_l` is the kernel of `M_l`, where `M_1` has the
/// routed framing columns `Γ_{λ_r→1}(t_r)` over the first-column boxes and
/// `M_{l+1} = [A_l M_l | Γ_{λ_r→l+1}(t_r) columns]` adjoins the column-
/// `(l+1)` boxes.  Kernels are zero-extended to the full box space.
pub fn flag_of(rep: &QuiverRep) -> Result<Flag> {
    rep.require_admissible_stable()?;
    let lam = rep.partition();
    let dims = rep.dims();
    let n = dims.n();
    let ambient = lam.ambient_boxes();

    let routed_col = |r: usize, l: usize| -> RationalMatrix {
        let shadow = lam.part(r);
        let routed = rep
            .gamma_to(shadow, l as isize)
            .expect("row lengths are shadow indices");
        let pos = lam
            .shadow_rows(shadow)
            .iter()
            .position(|&x| x == r)
            .expect("row indexes its own shadow");
        routed.submatrix(0..routed.rows(), pos..pos + 1)
    };

    let mut proper = Vec::with_capacity(n);
    // Boxes of column index ≤ l form a prefix of the ambient order, so each
    // step appends the new columns on the right.
    let mut m: Option<RationalMatrix> = None;
    for l in 1..n {
        let prev = match m.take() {
            None => RationalMatrix::zeros(dims.v(1), 0),
            Some(prev) => rep.a((l - 1) as isize).mul(&prev),
        };
        let mut cols = vec![prev];
        for b in &ambient {
            if b.col == l {
                cols.push(routed_col(b.row, l));
            }
        }
        let current = RationalMatrix::hstack(&cols.iter().collect::<Vec<_>>());
        let kernel = current.kernel_basis();
        if kernel.rows() != l {
            return Err(Error::FlagDimension {
                level: l,
                expected: l,
                got: kernel.rows(),
            });
        }
        // Zero-extend from the column-≤ l prefix to all n boxes.
        let padded = RationalMatrix::hstack(&[
            &kernel,
            &RationalMatrix::zeros(kernel.rows(), n - kernel.cols()),
        ]);
        proper.push(Subspace::span_of_rows(&padded));
        m = Some(current);
    }
    proper.push(Subspace::full(n));
    Flag::from_spaces(n, proper)
}

/// The flag computed from the lift: `F_l = ker Γ̃_{1→l}`.  Agrees with
/// [`flag_of`]; kept as an independent route for cross-checking.
pub fn flag_via_lift(mrep: &ModifiedRep) -> Result<Flag> {
    let n = mrep.dims().n();
    let mut proper = Vec::with_capacity(n);
    for l in 1..=n {
        let chain = mrep.gamma_chain(l);
        let kernel = chain.kernel_basis();
        if kernel.rows() != l {
            return Err(Error::FlagDimension {
                level: l,
                expected: l,
                got: kernel.rows(),
            });
        }
        proper.push(Subspace::span_of_rows(&kernel));
    }
    Flag::from_spaces(n, proper)
}

/// Whether the flag is stabilized level by level: `x·F_i ⊆ F_{i−1}`.
pub fn springer_membership(flag: &Flag, nd: &NilpotentData) -> bool {
    (1..=flag.n()).all(|i| flag.space(i - 1).contains(&flag.space(i).apply(nd.x())))
}

/// Whether the point itself lies in the Springer fiber: the slice
/// endomorphism `Δ̃₁Γ̃₁` equals the fixed nilpotent exactly.  Stricter than
/// [`springer_membership`] of its flag.
pub fn is_springer_point(mrep: &ModifiedRep) -> bool {
    mrep.slice_endomorphism() == sl2_x(mrep.partition(), 0)
}

/// Whether the pair (slice endomorphism, flag) satisfies the slice
/// equations: `[u − x, y] = 0` and `u·F_i ⊆ F_{i−1}`.
pub fn slodowy_membership(mrep: &ModifiedRep, flag: &Flag, nd: &NilpotentData) -> bool {
    let u = mrep.slice_endomorphism();
    let shifted = u.sub(nd.x());
    let bracket = shifted.mul(nd.y()).sub(&nd.y().mul(&shifted));
    bracket.is_zero()
        && (1..=flag.n()).all(|i| flag.space(i - 1).contains(&flag.space(i).apply(&u)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lift::build_lift;
    use crate::reference;

    fn expected_flag(ex: &reference::Example) -> Flag {
        let n = ex.rep.dims().n();
        let proper = ex
            .expected_flag_bases
            .iter()
            .map(Subspace::span_of_rows)
            .collect();
        Flag::from_spaces(n, proper).unwrap()
    }

    #[test]
    fn reference_flags_match_expected_bases() {
        for ex in reference::all_examples() {
            let flag = flag_of(&ex.rep).unwrap();
            assert_eq!(flag, expected_flag(&ex), "{}", ex.name);
        }
    }

    #[test]
    fn both_routes_agree_on_reference_data() {
        for ex in reference::all_examples() {
            let direct = flag_of(&ex.rep).unwrap();
            let lifted = flag_via_lift(&build_lift(&ex.rep).unwrap()).unwrap();
            assert_eq!(direct, lifted, "{}", ex.name);
        }
    }

    #[test]
    fn springer_predicates_distinguish_point_and_flag() {
        for ex in reference::all_examples() {
            let mrep = build_lift(&ex.rep).unwrap();
            let flag = flag_of(&ex.rep).unwrap();
            let nd = NilpotentData::new(ex.rep.partition());
            assert_eq!(is_springer_point(&mrep), ex.springer_point, "{}", ex.name);
            // All three reference flags happen to be x-stable...
            assert!(springer_membership(&flag, &nd), "{}", ex.name);
            // ...and all three points satisfy the slice equations.
            assert!(slodowy_membership(&mrep, &flag, &nd), "{}", ex.name);
        }
    }

    #[test]
    fn delta_zero_points_are_springer_points() {
        for ex in reference::all_examples() {
            if ex.rep.delta_is_zero() {
                let mrep = build_lift(&ex.rep).unwrap();
                assert!(is_springer_point(&mrep), "{}", ex.name);
            }
        }
    }

    #[test]
    fn nilpotent_data_labels_follow_ambient_order() {
        let lam = crate::partition::Partition::new(vec![3, 1]).unwrap();
        let nd = NilpotentData::new(&lam);
        assert_eq!(nd.labels(), ["f1", "e1", "e2", "e3"]);
        assert_eq!(nd.n(), 4);
        // x has Jordan type λ: rank 2 here (one string of length 3).
        assert_eq!(nd.x().rank(), 2);
    }

    #[test]
    fn flag_validation_rejects_bad_input() {
        let n = 3;
        // Wrong dimension at F_1.
        let bad = Flag::from_spaces(
            n,
            vec![Subspace::zero(n), Subspace::full(n), Subspace::full(n)],
        );
        assert!(matches!(
            bad,
            Err(Error::FlagDimension {
                level: 1,
                expected: 1,
                got: 0
            })
        ));
        // Not nested: F_1 = ⟨e₁⟩ but F_2 = ⟨e₂, e₃⟩.
        let e = RationalMatrix::identity(3);
        let f1 = Subspace::span_of_rows(&e.submatrix(0..1, 0..3));
        let f2 = Subspace::span_of_rows(&e.submatrix(1..3, 0..3));
        let bad = Flag::from_spaces(n, vec![f1, f2, Subspace::full(n)]);
        assert!(matches!(bad, Err(Error::Input(_))));
    }

    #[test]
    fn flag_of_requires_admissible_stable() {
        let zero = QuiverRep::zero(Partition::new(vec![2, 2]).unwrap());
        assert!(flag_of(&zero).is_err());
    }
}
