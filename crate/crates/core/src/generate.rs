//! Seeded random bipartite graphs.
//!
//! The stream is ChaCha8 seeded through `seed_from_u64`, which is specified
//! bit-for-bit by `rand_core`, and edge trials compare raw `u64` draws with
//! an integer threshold, so the output is identical on every platform.
//!
//! Vertices `0..n_a` form side A and `n_a..n_a+n_b` side B. For each A-vertex
//! in order, every B-vertex in order is kept with probability `p`. Each
//! A-vertex then keeps only its `delta_cap` lowest-index B-neighbors, and
//! finally each B-vertex keeps only its `delta_cap` lowest-index A-neighbors.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::RawGraph;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub n_a: usize,
    pub n_b: usize,
    pub delta_cap: usize,
    /// Edge probability in `[0, 1]`.
    pub p: Rational,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("edge probability {0} is outside [0, 1]")]
    Probability(Rational),
    #[error("{0} vertices exceed the supported maximum")]
    TooManyVertices(usize),
}

/// Accept a draw `x` iff `x < threshold`; `None` means always accept.
fn threshold(p: &Rational) -> Result<Option<u64>, GenError> {
    if p.numer() < &BigInt::zero() || p.numer() > p.denom() {
        return Err(GenError::Probability(p.clone()));
    }
    if p.numer() == p.denom() {
        return Ok(None);
    }
    let scaled: BigInt = (p.numer() << 64) / p.denom();
    Ok(Some(
        scaled
            .to_u64()
            .expect("p < 1 keeps the threshold below 2^64"),
    ))
}

pub fn generate(spec: &GenSpec) -> Result<RawGraph, GenError> {
    let n = spec
        .n_a
        .checked_add(spec.n_b)
        .filter(|&n| n <= u32::MAX as usize)
        .ok_or(GenError::TooManyVertices(spec.n_a.saturating_add(spec.n_b)))?;
    let limit = threshold(&spec.p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut b_degree = vec![0usize; spec.n_b];
    let mut edges = Vec::new();
    for a in 0..spec.n_a {
        let mut kept = 0usize;
        for (b, degree) in b_degree.iter_mut().enumerate() {
            let hit = match limit {
                None => true,
                Some(t) => rng.next_u64() < t,
            };
            // Rows are scanned in ascending B order, so keeping the first
            // `delta_cap` hits is the same as trimming the highest ones.
            if hit && kept < spec.delta_cap {
                kept += 1;
                if *degree < spec.delta_cap {
                    *degree += 1;
                    edges.push((a, spec.n_a + b));
                }
            }
        }
    }
    Ok(RawGraph::new(n, edges))
}
