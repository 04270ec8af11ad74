//! Hand-verified reference representations and their expected outputs.
//!
//! Three small representations — one per partition (2,2), (3,1), (2,1,1) —
//! are worked through by hand in full; every pipeline in the crate is
//! validated against them, and the shipped corpus files mirror them.  All
//! expected flag bases are written in the canonical ambient order (column,
//! row length, row index ascending) and in RREF form, so tests can compare
//! bit-exactly.

use std::collections::BTreeMap;

use crate::matrix::RationalMatrix;
use crate::partition::Partition;
use crate::quiver::QuiverRep;

/// A worked example: input representation plus expected results.
pub struct Example {
    /// Short name used in test diagnostics and corpus file stems.
    pub name: &'static str,
    pub rep: QuiverRep,
    /// Display names of the ambient coordinates, canonical order.
    pub ambient_labels: Vec<&'static str>,
    /// Expected RREF bases of F₁ … F_n.
    pub expected_flag_bases: Vec<RationalMatrix>,
    /// Expected classification (cup lists), `None` for non-two-row λ.
    pub expected_components: Option<Vec<Vec<(usize, usize)>>>,
    /// Whether the representation itself lies in the Springer fiber
    /// (equivalently Δ = 0 for admissible stable data).
    pub springer_point: bool,
}

/// λ = (2,2): one point of the nested-cups component.
///
/// `A₁ = (1,0)ᵀ, A₂ = (0 1), B₁ = (0 1), B₂ = (1,0)ᵀ`, Γ₂ sends
/// `e ↦ (0,1)ᵀ` and `f ↦ (1,0)ᵀ`, Δ = 0.  Expected flag
/// `F₁ = ⟨f₁⟩ ⊂ F₂ = ⟨f₁, e₁−f₂⟩ ⊂ F₃ = ⟨f₁, e₁, f₂⟩`; classification is
/// exactly the nested diagram {(1,4),(2,3)}.
pub fn example_22() -> Example {
    let lam = Partition::new(vec![2, 2]).unwrap();
    let a = vec![
        RationalMatrix::from_int_rows(&[&[1], &[0]]),
        RationalMatrix::from_int_rows(&[&[0, 1]]),
    ];
    let b = vec![
        RationalMatrix::from_int_rows(&[&[0, 1]]),
        RationalMatrix::from_int_rows(&[&[1], &[0]]),
    ];
    // Columns in ascending row order (e = row 1, f = row 2).
    let gamma = BTreeMap::from([(2, RationalMatrix::from_int_rows(&[&[0, 1], &[1, 0]]))]);
    let rep = QuiverRep::new(lam, a, b, gamma, BTreeMap::new()).unwrap();
    Example {
        name: "lambda22",
        rep,
        ambient_labels: vec!["e1", "f1", "e2", "f2"],
        expected_flag_bases: vec![
            RationalMatrix::from_int_rows(&[&[0, 1, 0, 0]]),
            RationalMatrix::from_int_rows(&[&[1, 0, 0, -1], &[0, 1, 0, 0]]),
            RationalMatrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]),
            RationalMatrix::identity(4),
        ],
        expected_components: Some(vec![vec![(1, 4), (2, 3)]]),
        springer_point: true,
    }
}

/// λ = (3,1): one point of the middle-cup component, with rays at 1 and 4.
///
/// `A₁ = 1, A₂ = 0, B₁ = 0, B₂ = 1`, `Γ₁ = 1` (label t2), `Γ₃ = 1`
/// (label t1), Δ = 0.  Expected flag `F₁ = ⟨e₁⟩ ⊂ F₂ = ⟨e₁, f₁−e₂⟩ ⊂
/// F₃ = ⟨e₁, f₁, e₂⟩` in ambient order (f₁, e₁, e₂, e₃); classification is
/// exactly {(2,3)}.
pub fn example_31() -> Example {
    let lam = Partition::new(vec![3, 1]).unwrap();
    let one = RationalMatrix::identity(1);
    let zero = RationalMatrix::zeros(1, 1);
    let a = vec![one.clone(), zero.clone()];
    let b = vec![zero, one.clone()];
    let gamma = BTreeMap::from([(1, one.clone()), (3, one)]);
    let rep = QuiverRep::new(lam, a, b, gamma, BTreeMap::new()).unwrap();
    Example {
        name: "lambda31",
        rep,
        ambient_labels: vec!["f1", "e1", "e2", "e3"],
        expected_flag_bases: vec![
            RationalMatrix::from_int_rows(&[&[0, 1, 0, 0]]),
            RationalMatrix::from_int_rows(&[&[1, 0, -1, 0], &[0, 1, 0, 0]]),
            RationalMatrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]),
            RationalMatrix::identity(4),
        ],
        expected_components: Some(vec![vec![(2, 3)]]),
        springer_point: true,
    }
}

/// λ = (2,1,1): a Slodowy-variety point with Δ ≠ 0, hence *not* in the
/// Springer fiber even though its flag is fixed by x.
///
/// `A₁ = I₂, A₂ = (1 1), B = 0`, `Γ₁ = I₂` (labels t2, t3),
/// `Δ₂ = (1 1)` (label t1).  Expected flag `F₁ = ⟨t_{1,1}⟩ ⊂
/// F₂ = ⟨t_{1,1}, t_{1,2}⟩ ⊂ F₃ = ⟨t_{2,1}−t_{3,1}, t_{1,1}, t_{1,2}⟩`
/// in ambient order (t_{2,1}, t_{3,1}, t_{1,1}, t_{1,2}).
pub fn example_211() -> Example {
    let lam = Partition::new(vec![2, 1, 1]).unwrap();
    let a = vec![
        RationalMatrix::identity(2),
        RationalMatrix::from_int_rows(&[&[1, 1]]),
    ];
    let b = vec![RationalMatrix::zeros(2, 2), RationalMatrix::zeros(2, 1)];
    let gamma = BTreeMap::from([(1, RationalMatrix::identity(2))]);
    let delta = BTreeMap::from([(2, RationalMatrix::from_int_rows(&[&[1, 1]]))]);
    let rep = QuiverRep::new(lam, a, b, gamma, delta).unwrap();
    Example {
        name: "lambda211",
        rep,
        ambient_labels: vec!["t2_1", "t3_1", "t1_1", "t1_2"],
        expected_flag_bases: vec![
            RationalMatrix::from_int_rows(&[&[0, 0, 1, 0]]),
            RationalMatrix::from_int_rows(&[&[0, 0, 1, 0], &[0, 0, 0, 1]]),
            RationalMatrix::from_int_rows(&[&[1, -1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]),
            RationalMatrix::identity(4),
        ],
        expected_components: None,
        springer_point: false,
    }
}

/// All three reference examples.
pub fn all_examples() -> Vec<Example> {
    vec![example_22(), example_31(), example_211()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_bases_are_rref_with_correct_dims() {
        for ex in all_examples() {
            let n = ex.rep.dims().n();
            assert_eq!(ex.expected_flag_bases.len(), n, "{}", ex.name);
            assert_eq!(ex.ambient_labels.len(), n, "{}", ex.name);
            for (idx, basis) in ex.expected_flag_bases.iter().enumerate() {
                assert_eq!(basis.rows(), idx + 1, "{} level {}", ex.name, idx + 1);
                assert_eq!(basis.cols(), n, "{} level {}", ex.name, idx + 1);
                let ech = basis.rref();
                assert_eq!(&ech.mat, basis, "{} level {} not RREF", ex.name, idx + 1);
            }
        }
    }

    #[test]
    fn ambient_labels_match_partition_conventions() {
        for ex in all_examples() {
            let lam = ex.rep.partition();
            let names: Vec<String> = lam
                .ambient_boxes()
                .into_iter()
                .map(|b| lam.box_name(b))
                .collect();
            assert_eq!(names, ex.ambient_labels, "{}", ex.name);
        }
    }
}
