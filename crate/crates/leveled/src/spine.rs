//! Spines (candidate cycles), fragment decomposition, the conflict relation,
//! and the disk-embeddability oracles.

use crate::color::AdjMasks;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planarity::is_planar;

/// A cycle of the host graph, stored in canonical form: rotated so the
/// smallest vertex comes first, oriented so the second vertex is smaller than
/// the last. This quotients out rotation and reflection, so equal cycles
/// compare equal and "first minimizer" is well defined everywhere.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Spine {
    verts: Vec<usize>,
}

impl Spine {
    /// Validates that `seq` is a cycle of `g` (length >= 3, distinct vertices,
    /// consecutive pairs and last-first are edges) and canonicalizes it.
    pub fn new(g: &Graph, seq: &[usize]) -> Result<Spine> {
        if seq.len() < 3 {
            return Err(Error::NotACycle(format!("length {} < 3", seq.len())));
        }
        let mut seen = vec![false; g.vertex_count()];
        for &v in seq {
            if v >= g.vertex_count() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    bound: g.vertex_count(),
                });
            }
            if seen[v] {
                return Err(Error::NotACycle(format!("vertex {v} repeats")));
            }
            seen[v] = true;
        }
        for i in 0..seq.len() {
            let (a, b) = (seq[i], seq[(i + 1) % seq.len()]);
            if !g.has_edge(a, b) {
                return Err(Error::NotACycle(format!("{a} {b} is not an edge")));
            }
        }
        Ok(Spine::canonical(seq))
    }

    fn canonical(seq: &[usize]) -> Spine {
        let n = seq.len();
        let start = (0..n).min_by_key(|&i| seq[i]).unwrap();
        let mut verts: Vec<usize> = (0..n).map(|i| seq[(start + i) % n]).collect();
        if verts[1] > verts[n - 1] {
            verts[1..].reverse();
        }
        Spine { verts }
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    /// Position of `v` on the spine, if present.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.verts.iter().position(|&x| x == v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.position(v).is_some()
    }

    /// The spine's own edges, canonical (u < v).
    pub fn cycle_edges(&self) -> Vec<(usize, usize)> {
        let n = self.verts.len();
        (0..n)
            .map(|i| {
                let (a, b) = (self.verts[i], self.verts[(i + 1) % n]);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    pub fn is_hamiltonian(&self, g: &Graph) -> bool {
        self.verts.len() == g.vertex_count()
    }
}

/// The closure of one connected component of G - C (or a single chord):
/// internal vertices and edges, attachment edges, and the sorted spine
/// positions it touches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fragment {
    pub internal_vertices: Vec<usize>,
    pub internal_edges: Vec<(usize, usize)>,
    pub attachment_edges: Vec<(usize, usize)>,
    /// spine positions, sorted ascending
    pub attachments: Vec<usize>,
}

impl Fragment {
    pub fn is_chord(&self) -> bool {
        self.internal_vertices.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.internal_edges.len() + self.attachment_edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.internal_edges
            .iter()
            .chain(self.attachment_edges.iter())
            .copied()
    }
}

/// Decomposes `g` into fragments with respect to spine `c`: one per connected
/// component of G - C plus one per chord, in deterministic order.
pub fn fragments(g: &Graph, c: &Spine) -> Result<Vec<Fragment>> {
    // re-validate the spine against this graph
    for i in 0..c.len() {
        let (a, b) = (c.verts()[i], c.verts()[(i + 1) % c.len()]);
        if !g.has_edge(a, b) {
            return Err(Error::NotACycle(format!("{a} {b} is not an edge")));
        }
    }
    let n = g.vertex_count();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in c.verts().iter().enumerate() {
        pos[v] = i;
    }
    let on_spine = |v: usize| pos[v] != usize::MAX;
    let spine_edges: std::collections::BTreeSet<(usize, usize)> =
        c.cycle_edges().into_iter().collect();

    let mut frags = Vec::new();

    // chords: both ends on the spine, not a spine edge
    for &(u, v) in g.edges() {
        if on_spine(u) && on_spine(v) && !spine_edges.contains(&(u, v)) {
            let mut att = vec![pos[u], pos[v]];
            att.sort_unstable();
            frags.push(Fragment {
                internal_vertices: Vec::new(),
                internal_edges: Vec::new(),
                attachment_edges: vec![(u, v)],
                attachments: att,
            });
        }
    }

    // components of G - C
    let mut seen = vec![false; n];
    for s in 0..n {
        if on_spine(s) || seen[s] {
            continue;
        }
        let mut comp = vec![s];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !on_spine(w) && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        let in_comp = |v: usize| comp.binary_search(&v).is_ok();
        let mut internal_edges = Vec::new();
        let mut attachment_edges = Vec::new();
        let mut att = Vec::new();
        for &v in &comp {
            for &w in g.neighbors(v) {
                if on_spine(w) {
                    attachment_edges.push((v.min(w), v.max(w)));
                    att.push(pos[w]);
                } else if w > v && in_comp(w) {
                    internal_edges.push((v, w));
                }
            }
        }
        internal_edges.sort_unstable();
        attachment_edges.sort_unstable();
        attachment_edges.dedup();
        att.sort_unstable();
        att.dedup();
        frags.push(Fragment {
            internal_vertices: comp,
            internal_edges,
            attachment_edges,
            attachments: att,
        });
    }

    frags.sort_by(|a, b| {
        (&a.attachments, a.internal_vertices.len(), &a.internal_vertices, &a.attachment_edges)
            .cmp(&(&b.attachments, b.internal_vertices.len(), &b.internal_vertices, &b.attachment_edges))
    });
    Ok(frags)
}

/// Strict interleaving of position pairs on a cycle of length `len`:
/// true iff exactly one of `x`, `y` lies strictly inside the arc (a, b).
pub fn positions_interleave(len: usize, (a, b): (usize, usize), (x, y): (usize, usize)) -> bool {
    if a == b || x == y {
        return false;
    }
    if x == a || x == b || y == a || y == b {
        return false;
    }
    let inside = |p: usize| {
        debug_assert!(p < len);
        if a < b {
            a < p && p < b
        } else {
            p > a || p < b
        }
    };
    inside(x) != inside(y)
}

/// Conflict relation: attachment pairs alternate around the spine,
/// or the fragments share at least three attachment positions. A fragment
/// never conflicts with itself.
pub fn conflicts(f: &Fragment, h: &Fragment, c: &Spine) -> bool {
    if f == h {
        return false;
    }
    let common = f
        .attachments
        .iter()
        .filter(|a| h.attachments.binary_search(a).is_ok())
        .count();
    if common >= 3 {
        return true;
    }
    for (i, &a) in f.attachments.iter().enumerate() {
        for &b in &f.attachments[i + 1..] {
            for (j, &x) in h.attachments.iter().enumerate() {
                for &y in &h.attachments[j + 1..] {
                    if positions_interleave(c.len(), (a, b), (x, y)) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Graph on fragments; adjacency is the conflict relation.
#[derive(Clone, Debug)]
pub struct ConflictGraph {
    pub fragments: Vec<Fragment>,
    adj: AdjMasks,
}

impl ConflictGraph {
    pub fn vertex_count(&self) -> usize {
        self.fragments.len()
    }

    pub fn conflicting(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    pub fn adjacency(&self) -> &[u128] {
        &self.adj
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.fragments.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.conflicting(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Builds the conflict graph of `g` with respect to spine `c`.
pub fn conflict_graph(g: &Graph, c: &Spine) -> Result<ConflictGraph> {
    let frags = fragments(g, c)?;
    conflict_graph_of(&frags, c)
}

/// Conflict graph over an already-computed fragment list.
pub fn conflict_graph_of(frags: &[Fragment], c: &Spine) -> Result<ConflictGraph> {
    if frags.len() > 128 {
        return Err(Error::SizeGate {
            what: "fragment count (conflict-graph kernel)",
            limit: 128,
            actual: frags.len(),
        });
    }
    let n = frags.len();
    let mut adj = vec![0u128; n];
    for i in 0..n {
        for j in i + 1..n {
            if conflicts(&frags[i], &frags[j], c) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    Ok(ConflictGraph {
        fragments: frags.to_vec(),
        adj,
    })
}

/// Which planarity test backs `fragment_disk_embeddable`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DiskTest {
    /// Planarity of the fragment together with the spine cycle. This is the
    /// condition the disk construction actually needs, since the spine fixes
    /// the cyclic order of the attachments.
    #[default]
    UnionWithSpine,
    /// Planarity of the fragment alone, as the characterization literally
    /// states it. Exposed for comparison via `--literal-prop`.
    LiteralFragment,
}

/// Builds the subgraph consisting of the spine cycle plus the given fragments,
/// on the host graph's vertex ids.
fn union_with_spine(g: &Graph, fs: &[&Fragment], c: &Spine) -> Graph {
    let edges = c
        .cycle_edges()
        .into_iter()
        .chain(fs.iter().flat_map(|f| f.edges()));
    Graph::new(g.vertex_count(), edges).expect("fragment edges come from g")
}

/// True iff the fragment can be embedded in a disk whose boundary is
/// identified with the spine.
pub fn fragment_disk_embeddable(g: &Graph, f: &Fragment, c: &Spine, mode: DiskTest) -> bool {
    match mode {
        DiskTest::UnionWithSpine => is_planar(&union_with_spine(g, &[f], c)),
        DiskTest::LiteralFragment => {
            let frag_graph =
                Graph::new(g.vertex_count(), f.edges()).expect("fragment edges come from g");
            is_planar(&frag_graph)
        }
    }
}

/// True iff all of `fs` fit together in one closed disk bounded by the spine:
/// the union plus an apex adjacent to every spine vertex must be planar.
pub fn jointly_disk_embeddable(g: &Graph, fs: &[&Fragment], c: &Spine) -> bool {
    let union = union_with_spine(g, fs, c);
    let apexed = union.add_apex(c.verts()).expect("spine vertices in range");
    is_planar(&apexed)
}

/// A complete cycle enumeration, flagged if a cap truncated it.
#[derive(Clone, Debug)]
pub struct CycleEnumeration {
    pub spines: Vec<Spine>,
    pub truncated: bool,
}

/// Enumerates every cycle of `g` exactly once in canonical form: shortest
/// first, then lexicographic. If `cap` is hit while more cycles remain, the
/// result is marked truncated so callers downgrade "exact" to "upper bound".
pub fn enumerate_cycles(g: &Graph, cap: Option<usize>) -> CycleEnumeration {
    let n = g.vertex_count();
    let mut spines = Vec::new();
    let mut truncated = false;
    'outer: for len in 3..=n {
        for root in 0..n {
            let mut found = Vec::new();
            cycles_of_length(g, root, len, &mut found);
            for verts in found {
                if let Some(cap) = cap {
                    if spines.len() == cap {
                        truncated = true;
                        break 'outer;
                    }
                }
                spines.push(Spine { verts });
            }
        }
    }
    CycleEnumeration { spines, truncated }
}

/// Cycles of exactly `len` vertices whose minimum vertex is `root`, emitted in
/// lexicographic order of their canonical form.
fn cycles_of_length(g: &Graph, root: usize, len: usize, out: &mut Vec<Vec<usize>>) {
    let n = g.vertex_count();
    let mut path = vec![root];
    let mut used = vec![false; n];
    used[root] = true;
    // frame: neighbor index at each depth
    let mut iters = vec![0usize];
    while !iters.is_empty() {
        let v = *path.last().unwrap();
        if path.len() == len {
            if g.has_edge(v, root) && path[1] < path[len - 1] {
                out.push(path.clone());
            }
            used[v] = false;
            path.pop();
            iters.pop();
            continue;
        }
        let i = iters.last_mut().unwrap();
        if *i < g.neighbors(v).len() {
            let w = g.neighbors(v)[*i];
            *i += 1;
            if w > root && !used[w] {
                used[w] = true;
                path.push(w);
                iters.push(0);
            }
        } else {
            used[v] = false;
            path.pop();
            iters.pop();
        }
    }
}

/// Enumerates every hamiltonian cycle of `g` exactly once in canonical form,
/// lexicographic order. Empty iff `g` is not hamiltonian.
pub fn enumerate_hamiltonian_cycles(g: &Graph) -> Vec<Spine> {
    let n = g.vertex_count();
    if n < 3 || !g.is_connected() {
        return Vec::new();
    }
    let mut out = Vec::new();
    cycles_of_length(g, 0, n, &mut out);
    out.into_iter().map(|verts| Spine { verts }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn k(n: usize) -> Graph {
        generate(FamilySpec::Complete(n)).unwrap()
    }

    #[test]
    fn spine_canonical_form() {
        let g = k(5);
        let a = Spine::new(&g, &[2, 3, 0, 4, 1]).unwrap();
        let b = Spine::new(&g, &[0, 3, 2, 1, 4]).unwrap();
        assert_eq!(a.verts()[0], 0);
        assert!(a.verts()[1] < a.verts()[4]);
        // a and b are the same cycle up to rotation + reflection
        assert_eq!(a, b);
    }

    #[test]
    fn spine_rejects_non_cycles() {
        let g = generate(FamilySpec::Cycle(5)).unwrap();
        assert!(Spine::new(&g, &[0, 1]).is_err());
        assert!(Spine::new(&g, &[0, 1, 3]).is_err());
        assert!(Spine::new(&g, &[0, 1, 1]).is_err());
    }

    #[test]
    fn cycle_counts() {
        let c5 = generate(FamilySpec::Cycle(5)).unwrap();
        assert_eq!(enumerate_cycles(&c5, None).spines.len(), 1);
        // K4: four triangles + three 4-cycles
        let e = enumerate_cycles(&k(4), None);
        assert_eq!(e.spines.len(), 7);
        assert!(!e.truncated);
        assert!(e.spines[..4].iter().all(|s| s.len() == 3));
        assert!(e.spines[4..].iter().all(|s| s.len() == 4));
    }

    #[test]
    fn cycle_cap_reports_truncation() {
        let e = enumerate_cycles(&k(4), Some(5));
        assert_eq!(e.spines.len(), 5);
        assert!(e.truncated);
        let e = enumerate_cycles(&k(4), Some(7));
        assert!(!e.truncated);
    }

    #[test]
    fn bipartite_cycles_have_even_length() {
        let g = generate(FamilySpec::CompleteBipartite(3, 3)).unwrap();
        for s in enumerate_cycles(&g, None).spines {
            assert_eq!(s.len() % 2, 0);
        }
    }

    #[test]
    fn hamiltonian_counts() {
        assert_eq!(enumerate_hamiltonian_cycles(&k(4)).len(), 3);
        let c6 = generate(FamilySpec::Cycle(6)).unwrap();
        assert_eq!(enumerate_hamiltonian_cycles(&c6).len(), 1);
        // K_{n,n}: n! (n-1)! / 2
        let g = generate(FamilySpec::CompleteBipartite(3, 3)).unwrap();
        assert_eq!(enumerate_hamiltonian_cycles(&g).len(), 6);
        let p4 = generate(FamilySpec::Path(4)).unwrap();
        assert!(enumerate_hamiltonian_cycles(&p4).is_empty());
    }

    #[test]
    fn k4_fragments_are_the_diagonals() {
        let g = k(4);
        let s = Spine::new(&g, &[0, 1, 2, 3]).unwrap();
        let frags = fragments(&g, &s).unwrap();
        assert_eq!(frags.len(), 2);
        assert!(frags.iter().all(Fragment::is_chord));
        assert_eq!(frags[0].attachment_edges, vec![(0, 2)]);
        assert_eq!(frags[1].attachment_edges, vec![(1, 3)]);
    }

    #[test]
    fn cycle_has_no_fragments() {
        let g = generate(FamilySpec::Cycle(6)).unwrap();
        let s = Spine::new(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(fragments(&g, &s).unwrap().is_empty());
    }

    #[test]
    fn k33_hamiltonian_spine_has_three_chords() {
        let g = generate(FamilySpec::CompleteBipartite(3, 3)).unwrap();
        let s = enumerate_hamiltonian_cycles(&g).into_iter().next().unwrap();
        let frags = fragments(&g, &s).unwrap();
        assert_eq!(frags.len(), 3);
        assert!(frags.iter().all(Fragment::is_chord));
    }

    #[test]
    fn conflict_examples() {
        let g = k(4);
        let s = Spine::new(&g, &[0, 1, 2, 3]).unwrap();
        let frags = fragments(&g, &s).unwrap();
        assert!(conflicts(&frags[0], &frags[1], &s));

        // chords (0,2) and (0,3) on spine 0-1-2-3-4: shared endpoint, no conflict
        let g5 = k(5);
        let s5 = Spine::new(&g5, &[0, 1, 2, 3, 4]).unwrap();
        let frags5 = fragments(&g5, &s5).unwrap();
        let chord = |u: usize, v: usize| {
            frags5
                .iter()
                .find(|f| f.attachment_edges == vec![(u, v)])
                .unwrap()
        };
        assert!(!conflicts(chord(0, 2), chord(0, 3), &s5));
        assert!(conflicts(chord(0, 2), chord(1, 3), &s5));
    }

    #[test]
    fn three_common_attachments_conflict() {
        // two tripods attached to spine positions {0,2,4} of a 6-spine
        let c6_edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let mut edges = c6_edges;
        edges.extend([(6, 0), (6, 2), (6, 4), (7, 0), (7, 2), (7, 4)]);
        let g = Graph::new(8, edges).unwrap();
        let s = Spine::new(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        let frags = fragments(&g, &s).unwrap();
        assert_eq!(frags.len(), 2);
        assert_eq!(frags[0].attachments, vec![0, 2, 4]);
        assert!(conflicts(&frags[0], &frags[1], &s));
    }

    #[test]
    fn k6_chord_conflicts_match_brute_force() {
        let g = k(6);
        let s = Spine::new(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        let cg = conflict_graph(&g, &s).unwrap();
        assert_eq!(cg.vertex_count(), 9);
        let idx = |u: usize, v: usize| {
            cg.fragments
                .iter()
                .position(|f| f.attachment_edges == vec![(u, v)])
                .unwrap()
        };
        let d03 = idx(0, 3);
        let expected = [(1, 4), (2, 4), (1, 5), (2, 5)];
        for i in 0..9 {
            if i == d03 {
                continue;
            }
            let e = cg.fragments[i].attachment_edges[0];
            assert_eq!(cg.conflicting(d03, i), expected.contains(&e), "chord {e:?}");
        }
    }

    #[test]
    fn disk_embeddable_examples() {
        let g5 = k(5);
        let s5 = Spine::new(&g5, &[0, 1, 2, 3, 4]).unwrap();
        for f in fragments(&g5, &s5).unwrap() {
            assert!(fragment_disk_embeddable(&g5, &f, &s5, DiskTest::UnionWithSpine));
        }
        // star fragment: internal vertex attached to every spine vertex (wheel)
        let c5: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let mut edges = c5;
        edges.extend((0..5).map(|i| (i, 5)));
        let g = Graph::new(6, edges).unwrap();
        let s = Spine::new(&g, &[0, 1, 2, 3, 4]).unwrap();
        let frags = fragments(&g, &s).unwrap();
        assert_eq!(frags.len(), 1);
        assert!(fragment_disk_embeddable(&g, &frags[0], &s, DiskTest::UnionWithSpine));
    }

    #[test]
    fn tree_fragment_planar_but_not_disk_embeddable() {
        // spine a,c,b,d = 0,1,2,3; fragment u1~{0,2}, u2~{1,3}, u1~u2.
        // f alone is a tree; f together with C is exactly K_{3,3}.
        let edges = vec![
            (0, 1), (1, 2), (2, 3), (3, 0), // spine
            (4, 0), (4, 2), (5, 1), (5, 3), (4, 5),
        ];
        let g = Graph::new(6, edges).unwrap();
        let s = Spine::new(&g, &[0, 1, 2, 3]).unwrap();
        let frags = fragments(&g, &s).unwrap();
        assert_eq!(frags.len(), 1);
        let f = &frags[0];
        assert!(!fragment_disk_embeddable(&g, f, &s, DiskTest::UnionWithSpine));
        assert!(fragment_disk_embeddable(&g, f, &s, DiskTest::LiteralFragment));
    }

    #[test]
    fn joint_embeddability_examples() {
        let g5 = k(5);
        let s5 = Spine::new(&g5, &[0, 1, 2, 3, 4]).unwrap();
        let frags = fragments(&g5, &s5).unwrap();
        let chord = |u: usize, v: usize| {
            frags
                .iter()
                .find(|f| f.attachment_edges == vec![(u, v)])
                .unwrap()
        };
        assert!(jointly_disk_embeddable(&g5, &[chord(0, 2), chord(2, 4)], &s5));
        assert!(!jointly_disk_embeddable(&g5, &[chord(0, 2), chord(1, 3)], &s5));

        let g33 = generate(FamilySpec::CompleteBipartite(3, 3)).unwrap();
        let s = enumerate_hamiltonian_cycles(&g33).into_iter().next().unwrap();
        let frags = fragments(&g33, &s).unwrap();
        let all: Vec<&Fragment> = frags.iter().collect();
        assert!(!jointly_disk_embeddable(&g33, &all, &s));
    }
}
