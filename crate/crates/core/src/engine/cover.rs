use serde::Serialize;

use super::{feasibility, split, ColoringParameters, EngineError, NormalizedForm, SplitVector};
use crate::graph::{BipartiteGraph, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassKind {
    APure,
    Mixed,
    BPure,
}

/// One color class; vertices are sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColorClass {
    pub kind: ClassKind,
    pub vertices: Vec<usize>,
}

impl ColorClass {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// `k` disjoint independent sets covering every vertex, `r` of size `q + 1`
/// and the rest of size `q`. Class `i` is color `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cover {
    pub classes: Vec<ColorClass>,
    pub q: usize,
    pub r: usize,
}

impl Cover {
    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ColorClass::len).collect()
    }

    /// Per-vertex color array. Vertices missing from every class get
    /// `usize::MAX`.
    pub fn colors(&self, n: usize) -> Vec<usize> {
        let mut color = vec![usize::MAX; n];
        for (c, class) in self.classes.iter().enumerate() {
            for &v in &class.vertices {
                if v < n {
                    color[v] = c;
                }
            }
        }
        color
    }

    /// Group a per-vertex color array into classes `0..k`. Kinds are read off
    /// the sides of the members.
    pub fn from_colors(graph: &BipartiteGraph, colors: &[usize], k: usize) -> Cover {
        let mut classes = vec![Vec::new(); k];
        for (v, &c) in colors.iter().enumerate() {
            if c < k {
                classes[c].push(v);
            }
        }
        let n = graph.n();
        Cover {
            classes: classes
                .into_iter()
                .map(|vertices| ColorClass {
                    kind: kind_of(graph, &vertices),
                    vertices,
                })
                .collect(),
            q: n / k.max(1),
            r: n % k.max(1),
        }
    }
}

fn kind_of(graph: &BipartiteGraph, vertices: &[usize]) -> ClassKind {
    let has = |s: Side| {
        vertices
            .iter()
            .any(|&v| v < graph.n() && graph.side(v) == s)
    };
    match (has(Side::A), has(Side::B)) {
        (true, true) => ClassKind::Mixed,
        (true, false) => ClassKind::APure,
        _ => ClassKind::BPure,
    }
}

/// Cut `vertices` into consecutive slices: `count_big` of size `q + 1`
/// first, then as many of size `q` as the remaining length requires.
pub fn cover_pure(
    vertices: &[usize],
    count_big: usize,
    q: usize,
) -> Result<Vec<Vec<usize>>, EngineError> {
    let mismatch = || EngineError::SizeMismatch {
        len: vertices.len(),
        count_big,
        q,
    };
    if q == 0 {
        return Err(mismatch());
    }
    let big_total = count_big.checked_mul(q + 1).ok_or_else(mismatch)?;
    let rest = vertices.len().checked_sub(big_total).ok_or_else(mismatch)?;
    if rest % q != 0 {
        return Err(mismatch());
    }
    let (big, small) = vertices.split_at(big_total);
    Ok(big
        .chunks(q + 1)
        .chain(small.chunks(q))
        .map(<[usize]>::to_vec)
        .collect())
}

/// A class under construction in the mixed step: `a_part` from A∖S and
/// `b_part` from B, both ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedClass {
    pub a_part: Vec<usize>,
    pub b_part: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedClasses {
    pub classes: Vec<MixedClass>,
    /// Neighbor-list entries read while marking plus B-candidates inspected.
    pub edge_scans: usize,
}

/// Greedily build `t = split.len()` classes of size `q + 1`.
///
/// Class `i` takes the next `s_i` vertices of `rest_of_a`, marks their
/// neighbors with epoch `i + 1`, then takes the `q + 1 - s_i` lowest-index
/// unused B-vertices that carry no mark of that epoch.
///
/// # Panics
///
/// If B runs out of eligible vertices. Feasible parameters rule this out.
pub fn build_mixed_classes(
    graph: &BipartiteGraph,
    rest_of_a: &[usize],
    split: &SplitVector,
    q: usize,
) -> MixedClasses {
    assert_eq!(
        rest_of_a.len(),
        split.total(),
        "mixed classes must use all of A∖S"
    );
    let b_list = graph.b_vertices();
    let mut used = vec![false; graph.n()];
    let mut mark = vec![0u32; graph.n()];
    let mut first_unused = 0usize;
    let mut scans = 0usize;
    let mut next_a = 0usize;
    let mut classes = Vec::with_capacity(split.parts().len());

    for (i, &s) in split.parts().iter().enumerate() {
        let epoch = i as u32 + 1;
        let a_part = rest_of_a[next_a..next_a + s].to_vec();
        next_a += s;
        for &v in &a_part {
            for &w in graph.neighbor_slice(v) {
                scans += 1;
                mark[w as usize] = epoch;
            }
        }

        let need = q + 1 - s;
        let mut b_part = Vec::with_capacity(need);
        while first_unused < b_list.len() && used[b_list[first_unused]] {
            first_unused += 1;
        }
        for &w in &b_list[first_unused..] {
            if b_part.len() == need {
                break;
            }
            scans += 1;
            if !used[w] && mark[w] != epoch {
                b_part.push(w);
            }
        }
        assert!(
            b_part.len() == need,
            "ExhaustedB: class {i} found {} of {need} B-vertices",
            b_part.len()
        );
        for &w in &b_part {
            used[w] = true;
        }
        classes.push(MixedClass { a_part, b_part });
    }
    MixedClasses {
        classes,
        edge_scans: scans,
    }
}

/// Keep the first `keep` classes whole; every later class gives back its
/// highest-index B-vertex. Returned vertices are ascending.
///
/// # Panics
///
/// If `keep` exceeds the class count or a shrinking class has no B-vertex.
pub fn rebalance(mut mixed: Vec<MixedClass>, keep: usize) -> (Vec<MixedClass>, Vec<usize>) {
    assert!(
        keep <= mixed.len(),
        "rebalance keep count {keep} exceeds {}",
        mixed.len()
    );
    let mut returned: Vec<usize> = mixed[keep..]
        .iter_mut()
        .enumerate()
        .map(|(i, class)| {
            class
                .b_part
                .pop()
                .unwrap_or_else(|| panic!("NoBVertex: mixed class {} has no B-vertex", keep + i))
        })
        .collect();
    returned.sort_unstable();
    (mixed, returned)
}

/// Output of the three-step construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub cover: Cover,
    pub params: ColoringParameters,
    pub normalized: NormalizedForm,
    pub split: Option<SplitVector>,
    /// Mixed classes kept at size q + 1.
    pub e: usize,
    /// Number of B-pure classes, `k - x - t`.
    pub y: usize,
    pub edge_scans: usize,
}

/// Build the cover: A-pure classes on the first `xq + u` A-vertices, `t`
/// greedy mixed classes rebalanced to keep `e = max(0, r - u - y)` big ones,
/// and B-pure classes on whatever of B is left.
pub fn construct_cover(
    graph: &BipartiteGraph,
    nf: &NormalizedForm,
    params: &ColoringParameters,
) -> Result<Construction, EngineError> {
    if params.delta < 2 {
        return Err(EngineError::DegreeTooSmall {
            delta: params.delta,
        });
    }
    let report = feasibility(nf, params);
    if !report.all_true() {
        return Err(EngineError::PreconditionViolation(format!(
            "construction conditions do not hold: {report:?}"
        )));
    }
    let ColoringParameters { k, q, r, t, .. } = *params;
    let (x, u, m) = nf.triple();
    if q == 0 || r >= k || k * q + r != graph.n() {
        return Err(EngineError::PreconditionViolation(format!(
            "size profile k = {k}, q = {q}, r = {r} does not match n = {}",
            graph.n()
        )));
    }
    if x * q + u + m != graph.a() || u > x || u > r {
        return Err(EngineError::PreconditionViolation(format!(
            "normalized form ({x}, {u}, {m}) does not describe |A| = {}",
            graph.a()
        )));
    }

    let a_list = graph.a_vertices();
    let (chosen, rest) = a_list.split_at(x * q + u);
    let mut classes: Vec<ColorClass> = cover_pure(chosen, u, q)?
        .into_iter()
        .map(|vertices| ColorClass {
            kind: ClassKind::APure,
            vertices,
        })
        .collect();
    debug_assert_eq!(classes.len(), x);

    let y = k - x - t;
    let (mixed, e, split_vec, edge_scans) = if t == 0 {
        assert_eq!(m, 0, "t = 0 with feasible parameters forces M = 0");
        (Vec::new(), 0, None, 0)
    } else {
        let sv = split(m, t, params.h)?;
        let built = build_mixed_classes(graph, rest, &sv, q);
        let e = (r - u).saturating_sub(y);
        let (mixed, _returned) = rebalance(built.classes, e);
        (mixed, e, Some(sv), built.edge_scans)
    };

    let mut in_mixed = vec![false; graph.n()];
    for class in &mixed {
        for &v in class.a_part.iter().chain(&class.b_part) {
            in_mixed[v] = true;
        }
    }
    for class in mixed {
        let mut vertices = class.a_part;
        vertices.extend(class.b_part);
        vertices.sort_unstable();
        let kind = if vertices.iter().any(|&v| graph.side(v) == Side::A) {
            ClassKind::Mixed
        } else {
            ClassKind::BPure
        };
        classes.push(ColorClass { kind, vertices });
    }

    let uncovered: Vec<usize> = graph
        .b_vertices()
        .into_iter()
        .filter(|&v| !in_mixed[v])
        .collect();
    let b_pure = cover_pure(&uncovered, r - u - e, q)?;
    assert_eq!(
        b_pure.len(),
        y,
        "B-pure step must produce k - x - t classes"
    );
    classes.extend(b_pure.into_iter().map(|vertices| ColorClass {
        kind: ClassKind::BPure,
        vertices,
    }));

    Ok(Construction {
        cover: Cover { classes, q, r },
        params: *params,
        normalized: *nf,
        split: split_vec,
        e,
        y,
        edge_scans,
    })
}
