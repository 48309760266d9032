//! Degree threshold `c(zeta)` above which `|V| >= zeta * delta` guarantees
//! the fixed choice `t = floor(k/4)` works.
//!
//! Everything is exact: `zeta = p/d` and the two quadratics are evaluated as
//! integer polynomials scaled by `d`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;

use super::EngineError;
use crate::graph::BipartiteGraph;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstantsResult {
    #[serde(serialize_with = "ser_display")]
    pub zeta: Rational,
    #[serde(serialize_with = "ser_display")]
    pub k0: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub k: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub c: BigInt,
}

fn ser_display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Integer quadratic `a2 k^2 + a1 k + a0`.
#[derive(Debug, Clone)]
struct Quadratic {
    a2: BigInt,
    a1: BigInt,
    a0: BigInt,
}

impl Quadratic {
    fn eval(&self, k: &BigInt) -> BigInt {
        (&self.a2 * k + &self.a1) * k + &self.a0
    }

    /// Largest integer where the value is negative. Needs `a2 > 0`.
    fn last_negative(&self) -> Option<BigInt> {
        debug_assert!(self.a2.is_positive());
        // The integer minimum sits at floor or ceil of the vertex -a1/(2 a2).
        let vertex = (-&self.a1).div_floor(&(&self.a2 * 2));
        let mut lo = if self.eval(&vertex).is_negative() {
            vertex
        } else if self.eval(&(&vertex + 1)).is_negative() {
            vertex + 1
        } else {
            return None;
        };
        // Cauchy bound: every real root is below 1 + max(|a1|, |a0|) / a2.
        let bound = self.a1.abs().max(self.a0.abs()).div_ceil(&self.a2) + 2;
        let mut hi = bound;
        debug_assert!(!self.eval(&hi).is_negative());
        while &hi - &lo > BigInt::one() {
            let mid: BigInt = (&lo + &hi) >> 1;
            if self.eval(&mid).is_negative() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some(lo)
    }
}

/// `d * f1` and `d * f2` for `zeta = p/d`, where
/// `f1(k) = zeta(2k-3)(k-8) - (5k^2 - 4k)` and
/// `f2(k) = zeta(2k-3)(k-36) - (41k^2 - 36k)`.
fn scaled_polynomials(zeta: &Rational) -> [Quadratic; 2] {
    let (p, d) = (zeta.numer(), zeta.denom());
    [
        Quadratic {
            a2: p * 2 - d * 5,
            a1: d * 4 - p * 19,
            a0: p * 24,
        },
        Quadratic {
            a2: p * 2 - d * 41,
            a1: d * 36 - p * 75,
            a0: p * 108,
        },
    ]
}

/// `K0`, `K = max(K0, 37)` and `c = 2K` for a given `zeta > 41/2`.
pub fn compute_constants(zeta: &Rational) -> Result<ConstantsResult, EngineError> {
    if zeta <= &Rational::new(41, 2) {
        return Err(EngineError::ZetaTooSmall(zeta.clone()));
    }
    let polys = scaled_polynomials(zeta);
    let last = polys
        .iter()
        .filter_map(Quadratic::last_negative)
        .max()
        .expect("f2(2) < 0 for every positive zeta");
    let k0 = last + 1;
    debug_assert!(polys.iter().all(|f| !f.eval(&k0).is_negative()));
    debug_assert!(polys.iter().any(|f| f.eval(&(&k0 - 1)).is_negative()));
    let k = k0.clone().max(BigInt::from(37));
    let c = &k * 2;
    Ok(ConstantsResult {
        zeta: zeta.clone(),
        k0,
        k,
        c,
    })
}

/// `delta >= c(zeta)` and `n >= zeta * delta`, compared exactly.
pub fn hypotheses_hold_for(n: usize, delta: usize, zeta: &Rational) -> Result<bool, EngineError> {
    let consts = compute_constants(zeta)?;
    let delta_big = BigInt::from(delta);
    let order_ok = BigInt::from(n) * zeta.denom() >= zeta.numer() * &delta_big;
    Ok(delta_big >= consts.c && order_ok)
}

pub fn hypotheses_hold(graph: &BipartiteGraph, zeta: &Rational) -> Result<bool, EngineError> {
    hypotheses_hold_for(graph.n(), graph.max_degree(), zeta)
}
