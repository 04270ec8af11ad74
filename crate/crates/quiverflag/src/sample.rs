//! Seeded rejection sampler for admissible stable representations.
//!
//! One attempt draws the chain maps `A_i` and framings `Γ_j` with entries
//! uniform in `{−pool, …, pool}`, then solves the admissibility equations
//! `B_iA_i = A_{i−1}B_{i−1} + Γ_iΔ_i` (`i = 1 … n−1`) *exactly* as a
//! homogeneous linear system in the entries of `B` (and of `Δ`, when
//! `with_delta` is set; otherwise `Δ = 0`).  A random element of the exact
//! solution space is drawn with pool-bounded coordinates, and the attempt is
//! rejected unless the result is stable — stability at vertex 1 depends on
//! `B` through the downward framing composites, so it cannot be checked
//! before the solve.  In `with_delta` mode attempts whose framing return
//! composites fail to vanish are rejected as well, so every accepted point
//! admits a transversal lift.
//!
//! Sampling is deterministic: the same seed yields byte-identical output,
//! and batch items use seeds derived from the master seed independently of
//! execution order.

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::par::par_map;
use crate::partition::Partition;
use crate::quiver::QuiverRep;
use crate::rational::{rat, Rat};

/// Sampler parameters.
#[derive(Clone, Debug)]
pub struct SampleConfig {
    /// Entries and solution coordinates are drawn from `{−pool, …, pool}`.
    pub pool: i64,
    /// Attempts per item before giving up.
    pub max_attempts: usize,
    /// Solve for `Δ` as well instead of fixing `Δ = 0`.
    pub with_delta: bool,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            pool: 2,
            max_attempts: 2000,
            with_delta: false,
        }
    }
}

/// The seed used for item `index` of a batch with the given master seed.
pub fn derived_seed(master: u64, index: u64) -> u64 {
    master.wrapping_add((index + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, pool: i64) -> RationalMatrix {
    RationalMatrix::from_fn(rows, cols, |_, _| rat(rng.gen_range(-pool..=pool)))
}

/// Offsets of each unknown block inside the flat unknown vector.
struct UnknownLayout {
    b_offset: Vec<usize>,              // per i = 1…n−2
    delta_offset: Vec<(usize, usize)>, // (shadow j, offset)
    total: usize,
}

fn layout(lam: &Partition, with_delta: bool) -> UnknownLayout {
    let dims = lam.dims();
    let n = dims.n();
    let mut total = 0;
    let mut b_offset = Vec::new();
    for i in 1..=n.saturating_sub(2) {
        b_offset.push(total);
        total += dims.v(i as isize) * dims.v(i as isize + 1);
    }
    let mut delta_offset = Vec::new();
    if with_delta {
        for j in 1..n {
            if dims.d(j) > 0 {
                delta_offset.push((j, total));
                total += dims.d(j) * dims.v(j as isize);
            }
        }
    }
    UnknownLayout {
        b_offset,
        delta_offset,
        total,
    }
}

fn attempt(lam: &Partition, cfg: &SampleConfig, rng: &mut ChaCha8Rng) -> Result<Option<QuiverRep>> {
    let dims = lam.dims();
    let n = dims.n();
    let chain = n.saturating_sub(2);

    let a: Vec<RationalMatrix> = (1..=chain)
        .map(|i| random_matrix(rng, dims.v(i as isize + 1), dims.v(i as isize), cfg.pool))
        .collect();
    let mut gamma = std::collections::BTreeMap::new();
    for j in 1..n {
        if dims.d(j) > 0 {
            gamma.insert(
                j,
                random_matrix(rng, dims.v(j as isize), dims.d(j), cfg.pool),
            );
        }
    }

    let lay = layout(lam, cfg.with_delta);
    let a_of = |i: usize| -> RationalMatrix {
        if (1..=chain).contains(&i) {
            a[i - 1].clone()
        } else {
            RationalMatrix::zeros(dims.v(i as isize + 1), dims.v(i as isize))
        }
    };

    // Rows of the homogeneous system: one per entry (α,β) of each vertex
    // equation B_iA_i − A_{i−1}B_{i−1} − Γ_iΔ_i = 0.
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for i in 1..n {
        let v_i = dims.v(i as isize);
        let a_i = a_of(i);
        let a_prev = a_of(i - 1);
        for alpha in 0..v_i {
            for beta in 0..v_i {
                let mut row = vec![Rat::zero(); lay.total];
                if i <= chain {
                    // Σ_q B_i[α,q]·A_i[q,β]
                    let off = lay.b_offset[i - 1];
                    let cols_b = dims.v(i as isize + 1);
                    for q in 0..cols_b {
                        row[off + alpha * cols_b + q] += &a_i[(q, beta)];
                    }
                }
                if i >= 2 {
                    // − Σ_p A_{i−1}[α,p]·B_{i−1}[p,β]
                    let off = lay.b_offset[i - 2];
                    let cols_b = dims.v(i as isize);
                    for p in 0..dims.v(i as isize - 1) {
                        row[off + p * cols_b + beta] -= &a_prev[(alpha, p)];
                    }
                }
                if cfg.with_delta && dims.d(i) > 0 {
                    // − Σ_s Γ_i[α,s]·Δ_i[s,β]
                    let g = &gamma[&i];
                    let off = lay
                        .delta_offset
                        .iter()
                        .find(|&&(j, _)| j == i)
                        .expect("layout covers every framed vertex")
                        .1;
                    for s in 0..dims.d(i) {
                        row[off + s * v_i + beta] -= &g[(alpha, s)];
                    }
                }
                rows.push(row);
            }
        }
    }

    let solution = if lay.total == 0 {
        vec![]
    } else {
        let system = if rows.is_empty() {
            RationalMatrix::zeros(1, lay.total)
        } else {
            RationalMatrix::from_fn(rows.len(), lay.total, |r, c| rows[r][c].clone())
        };
        let basis = system.kernel_basis();
        let coeffs: Vec<Rat> = (0..basis.rows())
            .map(|_| rat(rng.gen_range(-cfg.pool..=cfg.pool)))
            .collect();
        (0..lay.total)
            .map(|c| {
                (0..basis.rows())
                    .map(|r| &coeffs[r] * &basis[(r, c)])
                    .sum::<Rat>()
            })
            .collect()
    };

    let mut b = Vec::with_capacity(chain);
    for i in 1..=chain {
        let (r, c) = (dims.v(i as isize), dims.v(i as isize + 1));
        let off = lay.b_offset[i - 1];
        b.push(RationalMatrix::from_fn(r, c, |p, q| {
            solution[off + p * c + q].clone()
        }));
    }
    let mut delta = std::collections::BTreeMap::new();
    for &(j, off) in &lay.delta_offset {
        let (r, c) = (dims.d(j), dims.v(j as isize));
        delta.insert(
            j,
            RationalMatrix::from_fn(r, c, |p, q| solution[off + p * c + q].clone()),
        );
    }

    let rep = QuiverRep::new(lam.clone(), a, b, gamma, delta)?;
    debug_assert!(rep.admissibility_violation().is_none());
    if rep.stability_violation().is_some() {
        return Ok(None);
    }
    if cfg.with_delta && !rep.shadow_return_maps_vanish() {
        return Ok(None);
    }
    Ok(Some(rep))
}

/// Draws one admissible stable representation, retrying up to
/// `max_attempts` times before reporting exhaustion.
pub fn sample_rep(lam: &Partition, cfg: &SampleConfig, seed: u64) -> Result<QuiverRep> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cfg.max_attempts {
        if let Some(rep) = attempt(lam, cfg, &mut rng)? {
            return Ok(rep);
        }
    }
    Err(Error::SamplerExhausted {
        attempts: cfg.max_attempts,
    })
}

/// Draws `count` representations with per-item seeds derived from the
/// master seed; items are independent, so the output does not depend on
/// execution order.
pub fn sample_batch(
    lam: &Partition,
    cfg: &SampleConfig,
    seed: u64,
    count: usize,
) -> Result<Vec<QuiverRep>> {
    let indices: Vec<u64> = (0..count as u64).collect();
    par_map(&indices, |&i| sample_rep(lam, cfg, derived_seed(seed, i)))
        .into_iter()
        .collect()
}
