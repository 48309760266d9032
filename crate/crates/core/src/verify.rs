//! Independent certification of a cover.
//!
//! Nothing here calls into the engine: membership is rebuilt from the class
//! lists and every edge of the graph is checked against it.

use serde::Serialize;

use crate::engine::Cover;
use crate::graph::BipartiteGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    /// No edge has both ends in one class.
    pub proper: bool,
    /// Every vertex lies in exactly one class and no class names a
    /// nonexistent vertex.
    pub partition: bool,
    pub class_count_ok: bool,
    /// Class sizes, ascending.
    pub size_profile: Vec<usize>,
    /// Largest and smallest class differ by at most one.
    pub equitable: bool,
    /// Every size is `q` or `q + 1` and exactly `r` are `q + 1`.
    pub exact_profile_ok: bool,
}

impl VerificationReport {
    pub fn is_valid_coloring(&self) -> bool {
        self.proper && self.partition && self.equitable
    }

    pub fn all_ok(&self) -> bool {
        self.is_valid_coloring() && self.class_count_ok && self.exact_profile_ok
    }
}

pub fn verify(
    graph: &BipartiteGraph,
    cover: &Cover,
    k: usize,
    q: usize,
    r: usize,
) -> VerificationReport {
    let n = graph.n();
    const NONE: usize = usize::MAX;
    let mut owner = vec![NONE; n];
    // Second owner, only for vertices listed twice.
    let mut extra: Vec<(usize, usize)> = Vec::new();
    let mut partition = true;
    for (c, class) in cover.classes.iter().enumerate() {
        for &v in &class.vertices {
            if v >= n {
                partition = false;
            } else if owner[v] == NONE {
                owner[v] = c;
            } else {
                partition = false;
                extra.push((v, c));
            }
        }
    }
    if owner.contains(&NONE) {
        partition = false;
    }

    let classes_of = |v: usize| {
        std::iter::once(owner[v])
            .chain(extra.iter().filter(move |e| e.0 == v).map(|e| e.1))
            .filter(|&c| c != NONE)
    };
    let proper = graph.edges().all(|(u, v)| {
        if extra.is_empty() {
            owner[u] == NONE || owner[u] != owner[v]
        } else {
            classes_of(u).all(|cu| classes_of(v).all(|cv| cu != cv))
        }
    });

    let mut size_profile: Vec<usize> = cover.classes.iter().map(|c| c.vertices.len()).collect();
    size_profile.sort_unstable();
    let equitable = match (size_profile.first(), size_profile.last()) {
        (Some(lo), Some(hi)) => hi - lo <= 1,
        _ => true,
    };
    let big = size_profile.iter().filter(|&&s| s == q + 1).count();
    let exact_profile_ok =
        size_profile.iter().all(|&s| s == q || s == q + 1) && big == r && equitable;

    VerificationReport {
        proper,
        partition,
        class_count_ok: cover.classes.len() == k,
        size_profile,
        equitable,
        exact_profile_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{ClassKind, ColorClass};
    use crate::graph::{build_graph, RawGraph};

    fn star(leaves: usize) -> BipartiteGraph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        build_graph(&RawGraph::new(leaves + 1, edges)).unwrap()
    }

    fn cover(classes: &[&[usize]], q: usize, r: usize) -> Cover {
        Cover {
            classes: classes
                .iter()
                .map(|c| ColorClass {
                    kind: ClassKind::BPure,
                    vertices: c.to_vec(),
                })
                .collect(),
            q,
            r,
        }
    }

    #[test]
    fn star_cover_passes() {
        let g = star(5);
        let c = cover(&[&[0], &[1], &[2, 3], &[4, 5]], 1, 2);
        let rep = verify(&g, &c, 4, 1, 2);
        assert!(rep.all_ok(), "{rep:?}");
        assert_eq!(rep.size_profile, vec![1, 1, 2, 2]);
    }

    #[test]
    fn center_with_leaf_is_improper() {
        let g = star(5);
        let c = cover(&[&[0, 1], &[2], &[3], &[4, 5]], 1, 2);
        let rep = verify(&g, &c, 4, 1, 2);
        assert!(!rep.proper);
        assert!(rep.partition);
    }

    #[test]
    fn unbalanced_sizes_are_not_equitable() {
        let g = build_graph(&RawGraph::new(4, vec![(0, 1)])).unwrap();
        let c = cover(&[&[0, 2, 3], &[1]], 2, 0);
        let rep = verify(&g, &c, 2, 2, 0);
        assert!(rep.proper);
        assert!(!rep.equitable);
        assert!(!rep.exact_profile_ok);
    }

    #[test]
    fn missing_and_repeated_vertices_break_partition() {
        let g = star(3);
        let rep = verify(&g, &cover(&[&[0], &[1, 2]], 1, 1), 2, 1, 1);
        assert!(!rep.partition);
        let rep = verify(&g, &cover(&[&[0, 3], &[1, 2, 3]], 2, 0), 2, 2, 0);
        assert!(!rep.partition);
        let rep = verify(&g, &cover(&[&[0, 9], &[1, 2, 3]], 2, 0), 2, 2, 0);
        assert!(!rep.partition);
    }

    #[test]
    fn repeated_vertex_is_checked_in_every_class() {
        let g = star(3);
        let rep = verify(&g, &cover(&[&[0], &[1, 0], &[2, 3]], 1, 1), 3, 1, 1);
        assert!(!rep.proper);
    }

    #[test]
    fn wrong_class_count() {
        let g = star(3);
        let rep = verify(&g, &cover(&[&[0], &[1, 2, 3]], 2, 0), 3, 1, 1);
        assert!(!rep.class_count_ok);
    }
}
