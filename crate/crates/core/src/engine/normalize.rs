use serde::Serialize;

use super::EngineError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Direct,
    Corrected,
}

/// Intermediate values of the normalization, kept for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NormalizationTrace {
    pub x0: usize,
    pub m0: usize,
    pub l0: usize,
    pub d: usize,
    pub branch: Branch,
}

/// `|A| = x*q + u + M` with `0 <= u <= x <= floor(k/2)`, `u <= r`,
/// `r - u <= k - x` and `0 <= M < q + k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NormalizedForm {
    pub x: usize,
    pub u: usize,
    pub m: usize,
    pub trace: NormalizationTrace,
}

impl NormalizedForm {
    pub fn triple(&self) -> (usize, usize, usize) {
        (self.x, self.u, self.m)
    }
}

/// Closed-form normalization of `a = |A|`.
///
/// Takes as many full A-pure classes as allowed (`x0`), then the fewest
/// big classes `l0` that leave room for the remaining surplus on the other
/// side. When the residue `m0` is too small to pay for `l0`, `d` classes are
/// dissolved back into the residue.
pub fn normalize(a: usize, q: usize, k: usize, r: usize) -> Result<NormalizedForm, EngineError> {
    if q == 0 || r >= k {
        return Err(EngineError::PreconditionViolation(format!(
            "normalize needs q >= 1 and r < k (q = {q}, k = {k}, r = {r})"
        )));
    }
    let n = k * q + r;
    if a > n / 2 {
        return Err(EngineError::PreconditionViolation(format!(
            "|A| = {a} exceeds floor(n/2) = {}",
            n / 2
        )));
    }
    let x0 = (a / q).min(k / 2);
    let m0 = a - x0 * q;
    let l0 = (x0 + r).saturating_sub(k);
    let nf = if m0 >= l0 {
        NormalizedForm {
            x: x0,
            u: l0,
            m: m0 - l0,
            trace: NormalizationTrace {
                x0,
                m0,
                l0,
                d: 0,
                branch: Branch::Direct,
            },
        }
    } else {
        let d = (l0 - m0).div_ceil(q + 1);
        NormalizedForm {
            x: x0 - d,
            u: l0 - d,
            m: m0 + d * (q + 1) - l0,
            trace: NormalizationTrace {
                x0,
                m0,
                l0,
                d,
                branch: Branch::Corrected,
            },
        }
    };
    debug_assert_eq!(nf.x * q + nf.u + nf.m, a);
    Ok(nf)
}
