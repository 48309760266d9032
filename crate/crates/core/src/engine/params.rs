use num_integer::Integer;
use serde::Serialize;

use super::EngineError;

/// Color count and size profile: `n = k*q + r` with `0 <= r < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BaseParameters {
    pub n: usize,
    pub delta: usize,
    pub k: usize,
    pub q: usize,
    pub r: usize,
}

/// Every scalar governing one coloring attempt with a fixed `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ColoringParameters {
    pub delta: usize,
    pub k: usize,
    pub q: usize,
    pub r: usize,
    pub t: usize,
    /// `floor((|B| - t(q+1)) / (delta - 1))`, rounded toward negative infinity.
    pub l: i64,
    /// `min(q, l)`
    pub h: i64,
}

impl ColoringParameters {
    pub fn new(base: &BaseParameters, b: usize, t: usize) -> Self {
        let spare = b as i64 - (t as i64) * (base.q as i64 + 1);
        let l = Integer::div_floor(&spare, &(base.delta as i64 - 1));
        ColoringParameters {
            delta: base.delta,
            k: base.k,
            q: base.q,
            r: base.r,
            t,
            l,
            h: l.min(base.q as i64),
        }
    }
}

/// `k = ceil(delta/2) + 1`, `q = floor(n/k)`, `r = n - kq`.
pub fn derive_parameters(n: usize, delta: usize) -> Result<BaseParameters, EngineError> {
    if delta < 2 {
        return Err(EngineError::DegreeTooSmall { delta });
    }
    let k = delta.div_ceil(2) + 1;
    let (q, r) = n.div_rem(&k);
    if q == 0 {
        return Err(EngineError::PreconditionViolation(format!(
            "n = {n} is smaller than k = {k}"
        )));
    }
    Ok(BaseParameters { n, delta, k, q, r })
}
