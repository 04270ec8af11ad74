//! Cup diagrams on `n` vertices and the component relations that classify
//! two-row Springer-fiber points.
//!
//! A cup diagram places `n` vertices on a line and matches `2k` of them in
//! `k` pairwise non-crossing cups, the remaining `n − 2k` vertices carrying
//! rays to infinity; rays may not sit underneath a cup.  Diagrams index the
//! irreducible components of the two-row Springer fiber, and a point's
//! components are detected by exact linear conditions:
//!
//! * flag side — cup `(i,j)`: `F_j = x^{−δ}(F_{i−1})` with `δ = ½(j−i+1)`;
//!   ray at `i`: `F_i = F_{i−1} ⊕ ⟨e_{½(i+ρ(i))}⟩`, equivalently
//!   `F_i = x^{−c(i)}(x^{n−k−ρ(i)} F_n)`;
//! * quiver side — cup `(i,j)`: `ker B_{i+δ−1→i−1} = ker A_{j−δ→j}`
//!   (zero-space endpoints give zero maps with full kernels); ray at `i`:
//!   the framing detour `A_{i−c→i} Γ_{n−k→i−c}` vanishes while the
//!   one-column-shorter detour `A_{i−c+1→i} Γ_{n−k→i−c+1}` (when it exists)
//!   does not, `c = c(i)`; for `c = 0` this is just `Γ_{n−k→i} = 0`.
//!
//! [`classify`] returns every diagram whose quiver-side cup conditions all
//! hold (boundary points lie in several components, so the full list is the
//! only well-defined answer); [`classify_flag`] is the flag-side analogue
//! using cups and rays.  Per-diagram checks run through
//! [`crate::par::par_map`].

use std::fmt;

use crate::error::{Error, Result};
use crate::flag::{springer_membership, Flag, NilpotentData};
use crate::par::par_map;
use crate::quiver::QuiverRep;
use crate::subspace::Subspace;

/// A crossingless matching: `k` cups on `n` vertices, no ray under a cup.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CupDiagram {
    n: usize,
    cups: Vec<(usize, usize)>,
}

impl CupDiagram {
    /// Validates and canonicalizes (cups sorted by left endpoint).
    pub fn new(n: usize, mut cups: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for &(i, j) in &cups {
            if i == 0 || j > n || i >= j {
                return Err(Error::BadCupDiagram(format!(
                    "cup ({i},{j}) out of range for n = {n}"
                )));
            }
            for v in [i, j] {
                if seen[v] {
                    return Err(Error::BadCupDiagram(format!(
                        "vertex {v} belongs to two cups"
                    )));
                }
                seen[v] = true;
            }
        }
        cups.sort_unstable();
        for (a, &(i, j)) in cups.iter().enumerate() {
            for &(p, q) in &cups[a + 1..] {
                if i < p && p < j && j < q {
                    return Err(Error::BadCupDiagram(format!(
                        "cups ({i},{j}) and ({p},{q}) cross"
                    )));
                }
            }
            if let Some(v) = (i + 1..j).find(|&v| !seen[v]) {
                return Err(Error::BadCupDiagram(format!(
                    "ray at {v} sits under cup ({i},{j})"
                )));
            }
        }
        Ok(CupDiagram { n, cups })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cups sorted by left endpoint.
    pub fn cups(&self) -> &[(usize, usize)] {
        &self.cups
    }

    pub fn k(&self) -> usize {
        self.cups.len()
    }

    /// The unmatched vertices, ascending.
    pub fn rays(&self) -> Vec<usize> {
        let mut in_cup = vec![false; self.n + 1];
        for &(i, j) in &self.cups {
            in_cup[i] = true;
            in_cup[j] = true;
        }
        (1..=self.n).filter(|&v| !in_cup[v]).collect()
    }

    /// Renders as a bracket sequence: `(` / `)` for cup ends, `|` for rays.
    pub fn to_bracket(&self) -> String {
        let mut chars = vec!['|'; self.n];
        for &(i, j) in &self.cups {
            chars[i - 1] = '(';
            chars[j - 1] = ')';
        }
        chars.into_iter().collect()
    }

    /// Parses a bracket sequence; the vertex count is the string length.
    pub fn from_bracket(s: &str) -> Result<Self> {
        let mut stack = Vec::new();
        let mut cups = Vec::new();
        for (idx, ch) in s.chars().enumerate() {
            let v = idx + 1;
            match ch {
                '(' => stack.push(v),
                ')' => {
                    let i = stack.pop().ok_or_else(|| {
                        Error::BadCupDiagram(format!("unmatched ')' at vertex {v}"))
                    })?;
                    cups.push((i, v));
                }
                '|' => {}
                other => {
                    return Err(Error::BadCupDiagram(format!(
                        "unexpected character {other:?}"
                    )))
                }
            }
        }
        if let Some(i) = stack.pop() {
            return Err(Error::BadCupDiagram(format!("unclosed '(' at vertex {i}")));
        }
        CupDiagram::new(s.chars().count(), cups)
    }
}

impl fmt::Display for CupDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_bracket())
    }
}

/// Per-vertex ray counts and cup sizes for one diagram:
/// `ρ(i)` = rays at vertices ≤ i (counting i itself), `c(i) = ½(i − ρ(i))`
/// = cups entirely to the left of a ray vertex, `σ` the cup partner map and
/// `δ(i) = ½(σ(i) − i + 1)` the size of the cup with left endpoint `i`.
#[derive(Clone, Debug)]
pub struct CupStats {
    rho: Vec<usize>,
    cups: Vec<(usize, usize)>,
}

impl CupStats {
    pub fn new(diagram: &CupDiagram) -> Self {
        let rays = diagram.rays();
        let rho = (1..=diagram.n())
            .map(|i| rays.iter().filter(|&&r| r <= i).count())
            .collect();
        CupStats {
            rho,
            cups: diagram.cups().to_vec(),
        }
    }

    /// `ρ(i)` for `1 ≤ i ≤ n`.
    pub fn rho(&self, i: usize) -> usize {
        self.rho[i - 1]
    }

    /// `c(i)`, the number of complete cups to the left of vertex `i`.
    pub fn c(&self, i: usize) -> usize {
        let ends = i - self.rho(i);
        debug_assert!(ends.is_multiple_of(2), "c({i}) is not an integer");
        ends / 2
    }

    /// The cup partner of a matched vertex.
    pub fn sigma(&self, i: usize) -> Option<usize> {
        self.cups.iter().find_map(|&(a, b)| {
            if a == i {
                Some(b)
            } else if b == i {
                Some(a)
            } else {
                None
            }
        })
    }

    /// `δ(i)` for a left endpoint: half the span of its cup.
    pub fn delta(&self, i: usize) -> Option<usize> {
        self.cups
            .iter()
            .find(|&&(a, _)| a == i)
            .map(|&(a, b)| (b + 1 - a) / 2)
    }
}

/// All cup diagrams on `n` vertices with `k` cups, ordered lexicographically
/// by their sorted cup lists.
pub fn enumerate_cups(n: usize, k: usize) -> Result<Vec<CupDiagram>> {
    if 2 * k > n {
        return Err(Error::BadCupDiagram(format!(
            "cannot place {k} cups on {n} vertices"
        )));
    }
    fn rec(
        v: usize,
        n: usize,
        k: usize,
        stack: &mut Vec<usize>,
        cups: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if v > n {
            if stack.is_empty() && cups.len() == k {
                let mut c = cups.clone();
                c.sort_unstable();
                out.push(c);
            }
            return;
        }
        // Open a cup.
        if cups.len() + stack.len() < k {
            stack.push(v);
            rec(v + 1, n, k, stack, cups, out);
            stack.pop();
        }
        // Close the innermost open cup (keeps the matching non-crossing).
        if let Some(&i) = stack.last() {
            stack.pop();
            cups.push((i, v));
            rec(v + 1, n, k, stack, cups, out);
            cups.pop();
            stack.push(i);
        }
        // Leave a ray; rays are only legal outside every cup.
        if stack.is_empty() {
            rec(v + 1, n, k, stack, cups, out);
        }
    }
    let mut raw = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut Vec::new(), &mut raw);
    raw.sort_unstable();
    raw.into_iter()
        .map(|cups| CupDiagram::new(n, cups))
        .collect()
}

/// Iterated preimage `x^{−m}(s)`.
fn preimage_power(s: &Subspace, nd: &NilpotentData, m: usize) -> Subspace {
    let mut cur = s.clone();
    for _ in 0..m {
        cur = cur.preimage(nd.x());
    }
    cur
}

/// Iterated image `x^m(s)`.
fn image_power(s: &Subspace, nd: &NilpotentData, m: usize) -> Subspace {
    let mut cur = s.clone();
    for _ in 0..m {
        cur = cur.apply(nd.x());
    }
    cur
}

/// The flag-side cup relation `F_j = x^{−δ}(F_{i−1})`, `δ = ½(j−i+1)`.
pub fn flag_cup_holds(flag: &Flag, nd: &NilpotentData, cup: (usize, usize)) -> Result<bool> {
    let (i, j) = cup;
    if i == 0 || j > flag.n() || i >= j || (j - i + 1) % 2 != 0 {
        return Err(Error::BadCupDiagram(format!(
            "({i},{j}) is not a cup on {} vertices",
            flag.n()
        )));
    }
    let delta = (j + 1 - i) / 2;
    Ok(*flag.space(j) == preimage_power(flag.space(i - 1), nd, delta))
}

/// The flag-side ray relation at a ray vertex `i`:
/// `F_i = F_{i−1} ⊕ ⟨e_{½(i+ρ(i))}⟩`.  The equivalent closed form
/// `F_i = x^{−c(i)}(x^{n−k−ρ(i)} F_n)` is evaluated too and the two must
/// agree (they do on Springer-fiber flags; disagreement is a caller error).
pub fn flag_ray_holds(flag: &Flag, nd: &NilpotentData, stats: &CupStats, i: usize) -> Result<bool> {
    if stats.sigma(i).is_some() || i == 0 || i > flag.n() {
        return Err(Error::BadCupDiagram(format!("vertex {i} is not a ray")));
    }
    let parts = nd.partition().parts();
    let (n, k) = (flag.n(), parts[1]);
    let rho = stats.rho(i);
    // ⟨e_h⟩ with h = ½(i+ρ(i)); the e-row is row 1 of the diagram.
    let h = (i + rho) / 2;
    let e_box = crate::partition::BoxCoord { row: 1, col: h };
    let pos = nd
        .partition()
        .ambient_boxes()
        .iter()
        .position(|&b| b == e_box)
        .expect("e-vector index stays inside the first row");
    let mut line = crate::matrix::RationalMatrix::zeros(1, n);
    line.set(0, pos, crate::rational::rat(1));
    let direct = flag.space(i - 1).sum(&Subspace::span_of_rows(&line));
    let holds = *flag.space(i) == direct;

    let closed = preimage_power(&image_power(flag.space(n), nd, n - k - rho), nd, stats.c(i));
    let closed_holds = *flag.space(i) == closed;
    assert_eq!(
        holds, closed_holds,
        "the two ray-relation forms disagree at vertex {i}"
    );
    Ok(holds)
}

fn require_delta_zero(rep: &QuiverRep) -> Result<()> {
    match rep.first_nonzero_delta() {
        Some(shadow) => Err(Error::DeltaNonzero { shadow }),
        None => Ok(()),
    }
}

fn require_two_row(rep: &QuiverRep) -> Result<usize> {
    let lam = rep.partition();
    if !lam.is_two_row() {
        return Err(Error::NotTwoRow(lam.parts().to_vec()));
    }
    Ok(lam.part(2))
}

/// The quiver-side cup relation `ker B_{i+δ−1→i−1} = ker A_{j−δ→j}`; both
/// kernels are subspaces of `V_{i+δ−1}` and chain-end composites into the
/// zero space have full kernel.
pub fn quiver_cup_holds(rep: &QuiverRep, cup: (usize, usize)) -> Result<bool> {
    require_delta_zero(rep)?;
    let (i, j) = cup;
    let n = rep.dims().n();
    if i == 0 || j > n || i >= j || (j - i + 1) % 2 != 0 {
        return Err(Error::BadCupDiagram(format!(
            "({i},{j}) is not a cup on {n} vertices"
        )));
    }
    let delta = (j + 1 - i) / 2;
    let mid = (i + delta - 1) as isize; // = j − delta
    let down = rep.b_composite(mid, i as isize - 1);
    let up = rep.a_composite(mid, j as isize);
    Ok(Subspace::kernel_of(&down) == Subspace::kernel_of(&up))
}

/// The quiver-side ray relation at a ray vertex `i` with `c = c(i)` cups
/// fully to the left.  The top framing generator, routed down to `V_{i−c}`
/// along the B's and back up to `V_i` along the A's, must die:
/// `A_{i−c→i} Γ_{n−k→i−c} = 0`; the detour through `V_{i−c+1}` must survive
/// whenever that column exists (`i−c+1 ≤ n−k`).  For `c = 0` the first
/// condition degenerates to `Γ_{n−k→i} = 0` and the second is vacuous.
pub fn quiver_ray_holds(rep: &QuiverRep, stats: &CupStats, i: usize) -> Result<bool> {
    require_delta_zero(rep)?;
    let k = require_two_row(rep)?;
    let n = rep.dims().n();
    if stats.sigma(i).is_some() || i == 0 || i > n {
        return Err(Error::BadCupDiagram(format!("vertex {i} is not a ray")));
    }
    let c = stats.c(i);
    let detour = |t: usize| -> Result<bool> {
        let route = rep
            .a_composite(t as isize, i as isize)
            .mul(&rep.gamma_to(n - k, t as isize)?);
        Ok(route.is_zero())
    };
    if !detour(i - c)? {
        return Ok(false);
    }
    Ok(c == 0 || i - c + 1 > n - k || !detour(i - c + 1)?)
}

/// Every diagram whose quiver-side cup conditions all hold.  Generic points
/// match exactly one diagram; boundary points match several.  Requires an
/// admissible stable two-row representation with Δ = 0.
pub fn classify(rep: &QuiverRep) -> Result<Vec<CupDiagram>> {
    rep.require_admissible_stable()?;
    require_delta_zero(rep)?;
    let k = require_two_row(rep)?;
    let diagrams = enumerate_cups(rep.dims().n(), k)?;
    let matches = par_map(&diagrams, |d| {
        d.cups()
            .iter()
            .all(|&cup| quiver_cup_holds(rep, cup).unwrap_or(false))
    });
    Ok(diagrams
        .into_iter()
        .zip(matches)
        .filter_map(|(d, ok)| ok.then_some(d))
        .collect())
}

/// Every diagram whose flag-side cup *and* ray conditions all hold.  The
/// flag must be a Springer-fiber flag (`x·F_i ⊆ F_{i−1}`).
pub fn classify_flag(flag: &Flag, nd: &NilpotentData, k: usize) -> Result<Vec<CupDiagram>> {
    if let Some(level) =
        (1..=flag.n()).find(|&i| !flag.space(i - 1).contains(&flag.space(i).apply(nd.x())))
    {
        return Err(Error::NotSpringerFlag { level });
    }
    debug_assert!(springer_membership(flag, nd));
    let diagrams = enumerate_cups(flag.n(), k)?;
    let matches = par_map(&diagrams, |d| {
        let stats = CupStats::new(d);
        let cups_ok = d
            .cups()
            .iter()
            .all(|&cup| flag_cup_holds(flag, nd, cup).unwrap_or(false));
        cups_ok
            && d.rays()
                .into_iter()
                .all(|r| flag_ray_holds(flag, nd, &stats, r).unwrap_or(false))
    });
    Ok(diagrams
        .into_iter()
        .zip(matches)
        .filter_map(|(d, ok)| ok.then_some(d))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::RationalMatrix;
    use crate::partition::Partition;
    use crate::reference;

    fn diagram(n: usize, cups: &[(usize, usize)]) -> CupDiagram {
        CupDiagram::new(n, cups.to_vec()).unwrap()
    }

    fn flag_from_rows(n: usize, rows: &[&[&[i64]]]) -> Flag {
        let mut proper: Vec<Subspace> = rows
            .iter()
            .map(|r| Subspace::span_of_rows(&RationalMatrix::from_int_rows(r)))
            .collect();
        proper.push(Subspace::full(n));
        Flag::from_spaces(n, proper).unwrap()
    }

    #[test]
    fn validation_rejects_bad_diagrams() {
        assert!(CupDiagram::new(4, vec![(1, 3), (2, 4)]).is_err()); // crossing
        assert!(CupDiagram::new(4, vec![(1, 4)]).is_err()); // rays 2,3 inside
        assert!(CupDiagram::new(4, vec![(1, 2), (2, 3)]).is_err()); // reused vertex
        assert!(CupDiagram::new(4, vec![(0, 1)]).is_err()); // out of range
        assert!(CupDiagram::new(4, vec![(2, 2)]).is_err()); // degenerate
        assert!(CupDiagram::new(4, vec![(1, 4), (2, 3)]).is_ok());
    }

    #[test]
    fn enumeration_matches_known_counts_and_order() {
        let d31 = enumerate_cups(3, 1).unwrap();
        assert_eq!(d31, vec![diagram(3, &[(1, 2)]), diagram(3, &[(2, 3)])]);
        assert_eq!(enumerate_cups(2, 1).unwrap(), vec![diagram(2, &[(1, 2)])]);
        assert_eq!(enumerate_cups(6, 2).unwrap().len(), 9);
        assert_eq!(enumerate_cups(4, 2).unwrap().len(), 2);
        assert_eq!(enumerate_cups(5, 0).unwrap().len(), 1);
        assert!(enumerate_cups(3, 2).is_err());
    }

    #[test]
    fn brackets_round_trip() {
        let d = diagram(4, &[(1, 4), (2, 3)]);
        assert_eq!(d.to_bracket(), "(())");
        assert_eq!(CupDiagram::from_bracket("(())").unwrap(), d);
        let d = diagram(4, &[(2, 3)]);
        assert_eq!(d.to_bracket(), "|()|");
        assert_eq!(CupDiagram::from_bracket("|()|").unwrap(), d);
        assert!(CupDiagram::from_bracket("(|)").is_err()); // ray under cup
        assert!(CupDiagram::from_bracket("((").is_err());
        assert!(CupDiagram::from_bracket(")(").is_err());
    }

    #[test]
    fn stats_oracles() {
        let d = diagram(6, &[(2, 5), (3, 4)]);
        let s = CupStats::new(&d);
        assert_eq!(
            (1..=6).map(|i| s.rho(i)).collect::<Vec<_>>(),
            [1, 1, 1, 1, 1, 2]
        );
        assert_eq!(s.c(1), 0);
        assert_eq!(s.c(6), 2);
        assert_eq!(s.sigma(2), Some(5));
        assert_eq!(s.sigma(5), Some(2));
        assert_eq!(s.sigma(1), None);
        assert_eq!(s.delta(2), Some(2));
        assert_eq!(s.delta(3), Some(1));
        assert_eq!(s.delta(5), None); // not a left endpoint
    }

    #[test]
    fn flag_cup_oracles_for_two_one() {
        // λ=(2,1): ambient (f1,e1,e2); x maps e2 ↦ e1.
        let lam = Partition::new(vec![2, 1]).unwrap();
        let nd = NilpotentData::new(&lam);
        let ka1 = flag_from_rows(3, &[&[&[1, 0, 0]], &[&[1, 0, 0], &[0, 1, 0]]]);
        assert!(flag_cup_holds(&ka1, &nd, (1, 2)).unwrap());
        assert!(!flag_cup_holds(&ka1, &nd, (2, 3)).unwrap());
        assert!(flag_cup_holds(&ka1, &nd, (1, 3)).is_err()); // odd span
    }

    #[test]
    fn full_nested_cup_is_vacuously_true_on_square_shapes() {
        // λ=(2,2): x² = 0, so x^{−2}(F₀) = ℚ⁴ = F₄ for any flag.
        let ex = reference::example_22();
        let flag = crate::flag::flag_of(&ex.rep).unwrap();
        let nd = NilpotentData::new(ex.rep.partition());
        assert!(flag_cup_holds(&flag, &nd, (1, 4)).unwrap());
    }

    #[test]
    fn flag_ray_oracles() {
        // λ=(2,1), K_{a₂} flag: F₁ = ⟨e₁⟩, diagram |() with ray at 1.
        let lam = Partition::new(vec![2, 1]).unwrap();
        let nd = NilpotentData::new(&lam);
        let ka2 = flag_from_rows(3, &[&[&[0, 1, 0]], &[&[0, 1, 0], &[0, 0, 1]]]);
        let d = diagram(3, &[(2, 3)]);
        let s = CupStats::new(&d);
        assert!(flag_ray_holds(&ka2, &nd, &s, 1).unwrap());
        assert!(flag_ray_holds(&ka2, &nd, &s, 1).is_ok());
        assert!(flag_ray_holds(&ka2, &nd, &s, 2).is_err()); // cup vertex

        // K_{a₁} flag, ray at 3 of diagram ()|: implied by its cup.
        let ka1 = flag_from_rows(3, &[&[&[1, 0, 0]], &[&[1, 0, 0], &[0, 1, 0]]]);
        let d = diagram(3, &[(1, 2)]);
        let s = CupStats::new(&d);
        assert!(flag_ray_holds(&ka1, &nd, &s, 3).unwrap());

        // λ=(3,1) reference flag: rays at 1 and 4 of |()|.
        let ex = reference::example_31();
        let flag = crate::flag::flag_of(&ex.rep).unwrap();
        let nd = NilpotentData::new(ex.rep.partition());
        let d = diagram(4, &[(2, 3)]);
        let s = CupStats::new(&d);
        assert!(flag_ray_holds(&flag, &nd, &s, 1).unwrap());
        assert!(flag_ray_holds(&flag, &nd, &s, 4).unwrap());
    }

    #[test]
    fn quiver_cup_oracles_for_two_two() {
        let rep = reference::example_22().rep;
        assert!(quiver_cup_holds(&rep, (2, 3)).unwrap());
        assert!(quiver_cup_holds(&rep, (1, 4)).unwrap());
        assert!(!quiver_cup_holds(&rep, (1, 2)).unwrap());
        assert!(quiver_cup_holds(&rep, (1, 3)).is_err());
    }

    /// λ=(3,1) data with B₁ = B₂ = 1 and A = 0, so the framing composite
    /// Γ_{3→1} = B₁B₂Γ₃ is nonzero.
    fn rerouted_31() -> QuiverRep {
        let one = RationalMatrix::identity(1);
        QuiverRep::new(
            Partition::new(vec![3, 1]).unwrap(),
            vec![RationalMatrix::zeros(1, 1), RationalMatrix::zeros(1, 1)],
            vec![one.clone(), one.clone()],
            std::collections::BTreeMap::from([(1, one.clone()), (3, one)]),
            std::collections::BTreeMap::new(),
        )
        .unwrap()
    }

    #[test]
    fn quiver_ray_oracles() {
        let rep = reference::example_31().rep;
        let d = diagram(4, &[(2, 3)]);
        let s = CupStats::new(&d);
        // Ray at 1: c = 0, Γ_{3→1} = B₁B₂Γ₃ = 0 since B₁ = 0.
        assert!(quiver_ray_holds(&rep, &s, 1).unwrap());
        // Ray at 4: c = 1, the detour A_{3→4}Γ_{3→3} ends in the zero
        // space V₄ and the shorter detour column 4 > n−k does not exist.
        assert!(quiver_ray_holds(&rep, &s, 4).unwrap());

        let rerouted = rerouted_31();
        assert!(rerouted.admissibility_violation().is_none());
        assert!(rerouted.stability_violation().is_none());
        assert!(!quiver_ray_holds(&rerouted, &s, 1).unwrap());
    }

    #[test]
    fn classify_matches_reference_components() {
        let fi = reference::example_22();
        assert_eq!(
            classify(&fi.rep).unwrap(),
            vec![diagram(4, &[(1, 4), (2, 3)])]
        );
        let s31 = reference::example_31();
        assert_eq!(classify(&s31.rep).unwrap(), vec![diagram(4, &[(2, 3)])]);
    }

    #[test]
    fn classify_the_unique_stable_point_of_one_one() {
        let lam = Partition::new(vec![1, 1]).unwrap();
        let gamma = RationalMatrix::from_int_rows(&[&[1, 0]]);
        let rep = QuiverRep::new(
            lam,
            vec![],
            vec![],
            std::collections::BTreeMap::from([(1, gamma)]),
            std::collections::BTreeMap::new(),
        )
        .unwrap();
        assert_eq!(classify(&rep).unwrap(), vec![diagram(2, &[(1, 2)])]);
    }

    #[test]
    fn classify_rejects_out_of_scope_input() {
        let fi211 = reference::example_211();
        assert!(matches!(
            classify(&fi211.rep),
            Err(Error::DeltaNonzero { shadow: 2 })
        ));
    }

    #[test]
    fn classify_flag_oracles_for_two_one() {
        let lam = Partition::new(vec![2, 1]).unwrap();
        let nd = NilpotentData::new(&lam);
        let ka1 = flag_from_rows(3, &[&[&[1, 0, 0]], &[&[1, 0, 0], &[0, 1, 0]]]);
        assert_eq!(
            classify_flag(&ka1, &nd, 1).unwrap(),
            vec![diagram(3, &[(1, 2)])]
        );
        let ka2 = flag_from_rows(3, &[&[&[0, 1, 0]], &[&[0, 1, 0], &[0, 0, 1]]]);
        assert_eq!(
            classify_flag(&ka2, &nd, 1).unwrap(),
            vec![diagram(3, &[(2, 3)])]
        );
        // The intersection point of the two ℙ¹ components matches both.
        let meet = flag_from_rows(3, &[&[&[0, 1, 0]], &[&[1, 0, 0], &[0, 1, 0]]]);
        assert_eq!(
            classify_flag(&meet, &nd, 1).unwrap(),
            vec![diagram(3, &[(1, 2)]), diagram(3, &[(2, 3)])]
        );
        // A flag that is not x-stable is rejected with the offending level.
        let bad = flag_from_rows(3, &[&[&[0, 0, 1]], &[&[0, 1, 0], &[0, 0, 1]]]);
        assert!(matches!(
            classify_flag(&bad, &nd, 1),
            Err(Error::NotSpringerFlag { level: 1 })
        ));
    }

    #[test]
    fn quiver_and_flag_classification_agree_on_reference_data() {
        for ex in [reference::example_22(), reference::example_31()] {
            let by_rep = classify(&ex.rep).unwrap();
            let flag = crate::flag::flag_of(&ex.rep).unwrap();
            let nd = NilpotentData::new(ex.rep.partition());
            let by_flag = classify_flag(&flag, &nd, ex.rep.partition().part(2)).unwrap();
            assert_eq!(by_rep, by_flag, "{}", ex.name);
            assert_eq!(
                Some(by_rep.iter().map(|d| d.cups().to_vec()).collect::<Vec<_>>()),
                ex.expected_components,
                "{}",
                ex.name
            );
        }
    }
}
