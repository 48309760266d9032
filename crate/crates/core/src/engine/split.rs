use serde::Serialize;

use super::EngineError;

/// Balanced split of `M` into `t` parts, larger parts first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitVector(pub Vec<usize>);

impl SplitVector {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Write `M = tQ + R` and give the first `R` parts `Q + 1`, the rest `Q`.
pub fn split(m: usize, t: usize, h: i64) -> Result<SplitVector, EngineError> {
    if t == 0 {
        return Err(EngineError::PreconditionViolation(
            "split needs t >= 1".into(),
        ));
    }
    if h < 0 || (m as i128) > (t as i128) * (h as i128) {
        return Err(EngineError::InfeasibleSplit { m, t, h });
    }
    let (big, rem) = (m / t, m % t);
    Ok(SplitVector(
        (0..t)
            .map(|i| if i < rem { big + 1 } else { big })
            .collect(),
    ))
}
