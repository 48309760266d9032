use serde::Serialize;

use super::{ColoringParameters, NormalizedForm};

/// The four sufficient conditions for the three-step construction, with
/// the parameter values they were evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FeasibilityReport {
    pub params: ColoringParameters,
    pub x: usize,
    pub u: usize,
    pub m: usize,
    /// r - u <= k - x
    pub surplus_fits: bool,
    /// t <= k - x
    pub t_fits: bool,
    /// H >= 0
    pub h_nonnegative: bool,
    /// t*H >= M
    pub split_fits: bool,
}

impl FeasibilityReport {
    pub fn all_true(&self) -> bool {
        self.surplus_fits && self.t_fits && self.h_nonnegative && self.split_fits
    }
}

pub fn feasibility(nf: &NormalizedForm, params: &ColoringParameters) -> FeasibilityReport {
    let (k, r, t) = (params.k as i128, params.r as i128, params.t as i128);
    let (x, u, m) = (nf.x as i128, nf.u as i128, nf.m as i128);
    let h = params.h as i128;
    FeasibilityReport {
        params: *params,
        x: nf.x,
        u: nf.u,
        m: nf.m,
        surplus_fits: r - u <= k - x,
        t_fits: t <= k - x,
        h_nonnegative: h >= 0,
        split_fits: t * h >= m,
    }
}
