use crate::impls::{GraphicMatroid, UniformMatroid};
use crate::instance::Basis;
use crate::matroid::{ElementId, Matroid, MatroidKind, MatroidMinor};

/// Calls `visit` once for every basis. The slice passed to `visit` is not
/// necessarily sorted.
///
/// Graphic matroids use a parent-pointer search over rooted spanning
/// forests, uniform matroids walk all `k`-subsets, everything else uses
/// contraction/deletion branching on the oracle.
pub fn for_each_basis<M, F>(matroid: &M, mut visit: F)
where
    M: Matroid + ?Sized,
    F: FnMut(&[ElementId]),
{
    match matroid.kind() {
        MatroidKind::Graphic(g) => spanning_forests(g, |_| (0, 0), |b, _| visit(b)),
        MatroidKind::Uniform(u) => k_subsets(u, &mut visit),
        _ => contraction_deletion(&MatroidMinor::new(matroid), &mut Vec::new(), &mut visit),
    }
}

/// All bases, canonicalized and sorted.
pub fn enumerate_bases<M: Matroid + ?Sized>(matroid: &M) -> Vec<Basis> {
    let mut out = Vec::new();
    for_each_basis(matroid, |b| out.push(Basis::new(b.to_vec())));
    out.sort();
    out
}

const NONE: usize = usize::MAX;

#[derive(Clone, Copy)]
struct Arc {
    edge: ElementId,
    to: usize,
    weight: (u64, u64),
}

struct ForestSearch<F> {
    incident: Vec<Vec<Arc>>,
    order: Vec<usize>,
    parent: Vec<usize>,
    chosen: Vec<ElementId>,
    visit: F,
}

impl<F: FnMut(&[ElementId], (u64, u64))> ForestSearch<F> {
    /// Whether the pointer chain from `w` ends at `v`. Chains stop at a root
    /// or an unassigned vertex.
    #[inline]
    fn reaches(&self, mut w: usize, v: usize) -> bool {
        while self.parent[w] != NONE {
            w = self.parent[w];
        }
        w == v
    }

    fn descend(&mut self, level: usize, sum: (u64, u64)) {
        let v = self.order[level];
        let arcs = std::mem::take(&mut self.incident[v]);
        if level + 1 == self.order.len() {
            for arc in &arcs {
                if !self.reaches(arc.to, v) {
                    self.chosen[level] = arc.edge;
                    (self.visit)(&self.chosen, (sum.0 + arc.weight.0, sum.1 + arc.weight.1));
                }
            }
        } else {
            for arc in &arcs {
                if self.reaches(arc.to, v) {
                    continue;
                }
                self.parent[v] = arc.to;
                self.chosen[level] = arc.edge;
                self.descend(level + 1, (sum.0 + arc.weight.0, sum.1 + arc.weight.1));
                self.parent[v] = NONE;
            }
        }
        self.incident[v] = arcs;
    }
}

/// Each spanning forest corresponds to exactly one choice of parent edge for
/// every non-root vertex (one root per component) without pointer cycles.
///
/// `visit` also receives the summed `weight` of the forest, accumulated
/// along the search instead of per leaf.
pub(crate) fn spanning_forests<W, F>(g: &GraphicMatroid, weight: W, mut visit: F)
where
    W: Fn(ElementId) -> (u64, u64),
    F: FnMut(&[ElementId], (u64, u64)),
{
    let n = g.n_vertices();
    let mut incident = vec![Vec::new(); n];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if u != v {
            let (edge, weight) = (ElementId(i), weight(ElementId(i)));
            incident[u].push(Arc { edge, to: v, weight });
            incident[v].push(Arc { edge, to: u, weight });
        }
    }
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            if x != root {
                order.push(x);
            }
            for &Arc { to: y, .. } in &incident[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    if order.is_empty() {
        visit(&[], (0, 0));
        return;
    }
    let mut search = ForestSearch {
        incident,
        parent: vec![NONE; n],
        chosen: vec![ElementId(0); order.len()],
        order,
        visit,
    };
    search.descend(0, (0, 0));
}

fn k_subsets<F: FnMut(&[ElementId])>(u: &UniformMatroid, visit: &mut F) {
    let (n, k) = (u.n(), u.k());
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf: Vec<ElementId> = idx.iter().copied().map(ElementId).collect();
    loop {
        visit(&buf);
        // advance to the next combination in lexicographic order
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
        for j in pos..k {
            buf[j] = ElementId(idx[j]);
        }
    }
}

fn contraction_deletion<M, F>(minor: &MatroidMinor<'_, M>, chosen: &mut Vec<ElementId>, visit: &mut F)
where
    M: Matroid + ?Sized,
    F: FnMut(&[ElementId]),
{
    if minor.rank() == 0 {
        visit(chosen);
        return;
    }
    let e = minor.ground()[0];
    if minor.independent(&[e]) {
        let contracted = minor.contract(&[e]).expect("a non-loop is independent");
        chosen.push(e);
        contraction_deletion(&contracted, chosen, visit);
        chosen.pop();
    }
    let deleted = minor.delete(&[e]).expect("element is in range");
    // skip the branch when e is a coloop
    if deleted.rank() == minor.rank() {
        contraction_deletion(&deleted, chosen, visit);
    }
}
