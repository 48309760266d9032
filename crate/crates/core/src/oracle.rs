//! Exact ground truth for small graphs.
//!
//! An equitable k-coloring of an n-vertex graph must have exactly `r` classes
//! of size `q + 1` and `k - r` of size `q`, where `n = kq + r`. The search
//! below fills classes with those fixed quotas by backtracking over bitmasks.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::engine::{ClassKind, ColorClass, Cover};
use crate::graph::{BipartiteGraph, Side};

pub const DEFAULT_MAX_VERTICES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices; brute force is limited to {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// Result of an equitable chromatic number search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiE {
    Exact(usize),
    /// No k up to the search cap admits an equitable coloring.
    Unknown,
}

/// Backtracking search with a configurable vertex limit (at most 64).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForce {
    pub max_vertices: usize,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

impl BruteForce {
    pub fn new(max_vertices: usize) -> Self {
        BruteForce {
            max_vertices: max_vertices.min(64),
        }
    }

    fn check(&self, graph: &BipartiteGraph) -> Result<(), OracleError> {
        let limit = self.max_vertices.min(64);
        if graph.n() > limit {
            return Err(OracleError::TooLarge {
                n: graph.n(),
                limit,
            });
        }
        Ok(())
    }

    /// Smallest k in `1..=k_max` admitting an equitable k-coloring.
    pub fn chi_e(&self, graph: &BipartiteGraph, k_max: usize) -> Result<ChiE, OracleError> {
        self.check(graph)?;
        let search = Search::new(graph);
        for k in 1..=k_max.min(graph.n()) {
            if search.solve(k).is_some() {
                return Ok(ChiE::Exact(k));
            }
        }
        Ok(ChiE::Unknown)
    }

    /// A witness equitable k-coloring, or `None` if there is none.
    pub fn equitable_k(
        &self,
        graph: &BipartiteGraph,
        k: usize,
    ) -> Result<Option<Cover>, OracleError> {
        self.check(graph)?;
        if k == 0 {
            return Ok(None);
        }
        let Some(masks) = Search::new(graph).solve(k) else {
            return Ok(None);
        };
        let classes = masks
            .into_iter()
            .map(|mask| {
                let vertices: Vec<usize> = (0..graph.n()).filter(|&v| mask >> v & 1 == 1).collect();
                let has = |s: Side| vertices.iter().any(|&v| graph.side(v) == s);
                let kind = match (has(Side::A), has(Side::B)) {
                    (true, true) => ClassKind::Mixed,
                    (true, false) => ClassKind::APure,
                    _ => ClassKind::BPure,
                };
                ColorClass { kind, vertices }
            })
            .collect();
        Ok(Some(Cover {
            classes,
            q: graph.n() / k,
            r: graph.n() % k,
        }))
    }
}

/// `brute_chi_e` with the default vertex limit.
pub fn brute_chi_e(graph: &BipartiteGraph, k_max: usize) -> Result<ChiE, OracleError> {
    BruteForce::default().chi_e(graph, k_max)
}

/// `brute_equitable_k` with the default vertex limit.
pub fn brute_equitable_k(graph: &BipartiteGraph, k: usize) -> Result<Option<Cover>, OracleError> {
    BruteForce::default().equitable_k(graph, k)
}

/// Every `(x, u, M)` with `a = xq + u + M`, `0 <= u <= x <= floor(k/2)`,
/// `u <= r`, `r - u <= k - x` and `0 <= M < q + k`, by enumeration.
pub fn brute_normal_forms(
    a: usize,
    q: usize,
    k: usize,
    r: usize,
) -> BTreeSet<(usize, usize, usize)> {
    let mut out = BTreeSet::new();
    for x in 0..=k / 2 {
        for u in 0..=x {
            let used = x * q + u;
            if u > r || used > a || r as i64 - u as i64 > k as i64 - x as i64 {
                continue;
            }
            let m = a - used;
            if m < q + k {
                out.insert((x, u, m));
            }
        }
    }
    out
}

struct Search {
    n: usize,
    adj: Vec<u64>,
    order: Vec<usize>,
}

struct State {
    quota: Vec<usize>,
    members: Vec<u64>,
    blocked: Vec<u64>,
    size: Vec<usize>,
    unassigned: u64,
}

impl Search {
    fn new(graph: &BipartiteGraph) -> Self {
        let n = graph.n();
        let adj = (0..n)
            .map(|v| graph.neighbors(v).fold(0u64, |m, w| m | 1 << w))
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
        Search { n, adj, order }
    }

    fn solve(&self, k: usize) -> Option<Vec<u64>> {
        let (q, r) = (self.n / k, self.n % k);
        let mut state = State {
            quota: (0..k).map(|c| if c < r { q + 1 } else { q }).collect(),
            members: vec![0; k],
            blocked: vec![0; k],
            size: vec![0; k],
            unassigned: if self.n == 64 {
                u64::MAX
            } else {
                (1u64 << self.n) - 1
            },
        };
        self.place(0, &mut state).then_some(state.members)
    }

    fn place(&self, pos: usize, st: &mut State) -> bool {
        if pos == self.n {
            return true;
        }
        let v = self.order[pos];
        let bit = 1u64 << v;
        let k = st.quota.len();
        for c in 0..k {
            if st.size[c] == st.quota[c] || st.members[c] & self.adj[v] != 0 {
                continue;
            }
            // Empty classes with equal quota are interchangeable: only the
            // first one may be opened.
            if st.size[c] == 0 && (0..c).any(|d| st.size[d] == 0 && st.quota[d] == st.quota[c]) {
                continue;
            }
            let saved_blocked = st.blocked[c];
            st.members[c] |= bit;
            st.blocked[c] |= self.adj[v];
            st.size[c] += 1;
            st.unassigned &= !bit;
            if self.still_fillable(st) && self.place(pos + 1, st) {
                return true;
            }
            st.members[c] &= !bit;
            st.blocked[c] = saved_blocked;
            st.size[c] -= 1;
            st.unassigned |= bit;
        }
        false
    }

    /// Every class can still reach its quota from compatible unassigned
    /// vertices.
    fn still_fillable(&self, st: &State) -> bool {
        (0..st.quota.len()).all(|c| {
            let deficit = st.quota[c] - st.size[c];
            deficit == 0 || (st.unassigned & !st.blocked[c]).count_ones() as usize >= deficit
        })
    }
}
