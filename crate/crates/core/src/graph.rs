//! Bipartite graph construction and side canonicalization.
//!
//! A [`BipartiteGraph`] is built once from a [`RawGraph`] and never mutated.
//! Adjacency is stored in compressed sparse row form with sorted neighbor
//! lists, so neighbor queries are slices and edge lookups are binary searches.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Which side of the bipartition a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::A => f.write_str("A"),
            Side::B => f.write_str("B"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("graph is not bipartite: odd cycle {}", fmt_cycle(.witness))]
    OddCycle { witness: Vec<usize> },
    #[error("vertex count {0} exceeds the supported maximum")]
    TooManyVertices(usize),
}

fn fmt_cycle(walk: &[usize]) -> String {
    let mut s = String::new();
    for v in walk {
        s.push_str(&v.to_string());
        s.push_str(" -> ");
    }
    if let Some(first) = walk.first() {
        s.push_str(&first.to_string());
    }
    s
}

/// Unvalidated input: a vertex count and a list of unordered index pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl RawGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Self {
        RawGraph { n, edges }
    }
}

/// One connected component split into its two BFS color classes.
///
/// `classes[0]` always contains the component's smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentColoring {
    pub classes: [Vec<usize>; 2],
}

/// Assign canonical sides given a 2-coloring of every component.
///
/// Within a component the larger class goes to B; on a tie the class holding
/// the component's smallest vertex goes to A. Isolated vertices land in B.
/// If the global count still has |A| > |B| every label is swapped.
pub fn canonicalize_sides(n: usize, components: &[ComponentColoring]) -> Vec<Side> {
    let mut side = vec![Side::B; n];
    let mut a = 0usize;
    for comp in components {
        let [first, second] = &comp.classes;
        let (to_a, to_b) = if second.len() >= first.len() {
            (first, second)
        } else {
            (second, first)
        };
        for &v in to_a {
            side[v] = Side::A;
        }
        for &v in to_b {
            side[v] = Side::B;
        }
        a += to_a.len();
    }
    if a > n - a {
        for s in side.iter_mut() {
            *s = s.flip();
        }
    }
    side
}

/// Immutable bipartite graph with canonical sides (|A| <= |B|).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
    side: Vec<Side>,
    a: usize,
    b: usize,
    max_degree: usize,
}

impl BipartiteGraph {
    pub fn n(&self) -> usize {
        self.side.len()
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    /// |A|
    pub fn a(&self) -> usize {
        self.a
    }

    /// |B|
    pub fn b(&self) -> usize {
        self.b
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    /// Sorted neighbor list of `v` in raw storage form.
    pub fn neighbor_slice(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn neighbors(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.neighbor_slice(v).iter().map(|&w| w as usize)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        self.neighbor_slice(u).binary_search(&(v as u32)).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// A-vertices in increasing index order.
    pub fn a_vertices(&self) -> Vec<usize> {
        self.vertices_on(Side::A)
    }

    /// B-vertices in increasing index order.
    pub fn b_vertices(&self) -> Vec<usize> {
        self.vertices_on(Side::B)
    }

    fn vertices_on(&self, s: Side) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.side[v] == s).collect()
    }
}

/// Validate `raw`, find a bipartition and canonicalize its sides.
///
/// Runs in O(n + m) after sorting the neighbor lists.
pub fn build_graph(raw: &RawGraph) -> Result<BipartiteGraph, GraphError> {
    let n = raw.n;
    if n == 0 {
        return Err(GraphError::Empty);
    }
    if n > u32::MAX as usize {
        return Err(GraphError::TooManyVertices(n));
    }
    let mut degree = vec![0usize; n];
    for &(u, v) in &raw.edges {
        if u >= n || v >= n {
            return Err(GraphError::OutOfRange { u, v, n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        degree[u] += 1;
        degree[v] += 1;
    }
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0);
    for d in &degree {
        offsets.push(offsets.last().unwrap() + d);
    }
    let mut fill = offsets[..n].to_vec();
    let mut targets = vec![0u32; offsets[n]];
    for &(u, v) in &raw.edges {
        targets[fill[u]] = v as u32;
        fill[u] += 1;
        targets[fill[v]] = u as u32;
        fill[v] += 1;
    }
    for v in 0..n {
        let list = &mut targets[offsets[v]..offsets[v + 1]];
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            let (x, y) = (v.min(w[0] as usize), v.max(w[0] as usize));
            return Err(GraphError::DuplicateEdge { u: x, v: y });
        }
    }

    let components = two_color(n, &offsets, &targets)?;
    let side = canonicalize_sides(n, &components);
    let a = side.iter().filter(|&&s| s == Side::A).count();
    let max_degree = degree.iter().copied().max().unwrap_or(0);
    Ok(BipartiteGraph {
        offsets,
        targets,
        side,
        a,
        b: n - a,
        max_degree,
    })
}

/// BFS 2-coloring of every component, roots taken in increasing index order.
fn two_color(
    n: usize,
    offsets: &[usize],
    targets: &[u32],
) -> Result<Vec<ComponentColoring>, GraphError> {
    const UNSEEN: u8 = 2;
    let mut color = vec![UNSEEN; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut components = Vec::new();
    let mut queue = VecDeque::new();

    for root in 0..n {
        if color[root] != UNSEEN {
            continue;
        }
        let mut classes: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        color[root] = 0;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            classes[color[v] as usize].push(v);
            for &w in &targets[offsets[v]..offsets[v + 1]] {
                let w = w as usize;
                if color[w] == UNSEEN {
                    color[w] = 1 - color[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return Err(GraphError::OddCycle {
                        witness: odd_cycle(v, w, &parent, &depth),
                    });
                }
            }
        }
        classes[0].sort_unstable();
        classes[1].sort_unstable();
        components.push(ComponentColoring { classes });
    }
    Ok(components)
}

/// Close the two BFS tree paths from `u` and `v` (equal color, adjacent)
/// at their lowest common ancestor. The result is a cycle of odd length.
fn odd_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut x, mut y) = (u, v);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    // `right` ends at the common ancestor, which `left` already holds.
    right.pop();
    right.reverse();
    left.extend(right);
    left
}
