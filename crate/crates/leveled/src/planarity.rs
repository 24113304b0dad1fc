//! Planarity and outerplanarity predicates.
//!
//! Planarity is tested per biconnected component with Demoucron's incremental
//! face-embedding algorithm: start from a cycle, repeatedly pick a bridge with
//! the fewest admissible faces and embed one of its paths, splitting a face.
//! A bridge with no admissible face proves non-planarity. Quadratic, which is
//! comfortable at the few-hundred-edge scale this crate targets.

use crate::graph::Graph;

/// True iff `g` has no K_5 or K_{3,3} subdivision. Disconnected input is
/// tested componentwise.
pub fn is_planar(g: &Graph) -> bool {
    // smallest non-planar graphs have 9 edges
    if g.edge_count() < 9 {
        return true;
    }
    biconnected_components(g)
        .into_iter()
        .all(|edges| biconnected_planar(&edges))
}

/// True iff `g` plus an apex vertex adjacent to every vertex is planar.
pub fn is_outerplanar(g: &Graph) -> bool {
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    match g.add_apex(&all) {
        Ok(apexed) => is_planar(&apexed),
        Err(_) => unreachable!("targets are in range"),
    }
}

/// Edge sets of the biconnected components (single bridges included).
fn biconnected_components(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut comps: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut timer = 0usize;

    // iterative DFS; frame = (v, parent, neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (v, parent, ref mut i)) = stack.last_mut() {
            if *i < g.neighbors(v).len() {
                let w = g.neighbors(v)[*i];
                *i += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        // p is a cut vertex (or root); pop one component
                        let mut comp = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            comp.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        if !comp.is_empty() {
                            comps.push(comp);
                        }
                    }
                }
            }
        }
    }
    comps
}

/// Demoucron's algorithm on one biconnected component, given as an edge list.
fn biconnected_planar(edges: &[(usize, usize)]) -> bool {
    if edges.len() < 9 {
        return true;
    }
    // reindex vertices locally
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let n = verts.len();
    let m = edges.len();
    if m > 3 * n - 6 {
        return false;
    }
    let index = |v: usize| verts.binary_search(&v).unwrap();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        let (u, v) = (index(u), index(v));
        adj[u].push(v);
        adj[v].push(u);
    }
    for a in &mut adj {
        a.sort_unstable();
    }

    let cycle = find_cycle(n, &adj).expect("biconnected component with >=9 edges has a cycle");

    let mut in_h = vec![false; n];
    for &v in &cycle {
        in_h[v] = true;
    }
    let mut embedded = vec![vec![false; n]; n];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        embedded[a][b] = true;
        embedded[b][a] = true;
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    loop {
        let frags = current_bridges(n, &adj, &in_h, &embedded);
        if frags.is_empty() {
            return true;
        }
        // admissible face: boundary contains all attachments
        let mut pick: Option<(usize, usize, usize)> = None; // (count, frag idx, face idx)
        for (fi, frag) in frags.iter().enumerate() {
            let mut count = 0;
            let mut first_face = usize::MAX;
            for (k, face) in faces.iter().enumerate() {
                if frag.attachments.iter().all(|a| face.contains(a)) {
                    count += 1;
                    if first_face == usize::MAX {
                        first_face = k;
                    }
                }
            }
            if count == 0 {
                return false;
            }
            if pick.map_or(true, |(c, _, _)| count < c) {
                pick = Some((count, fi, first_face));
            }
        }
        let (_, fi, face_idx) = pick.unwrap();
        let frag = &frags[fi];
        let path = frag.alpha_path(&adj, &in_h);

        // split the chosen face along the path
        let face = faces.swap_remove(face_idx);
        let a = path[0];
        let b = path[path.len() - 1];
        let pa = face.iter().position(|&v| v == a).unwrap();
        let pb = face.iter().position(|&v| v == b).unwrap();
        let len = face.len();
        let mut arc1 = Vec::new(); // a .. b along the walk
        let mut i = pa;
        loop {
            arc1.push(face[i]);
            if i == pb {
                break;
            }
            i = (i + 1) % len;
        }
        let mut arc2 = Vec::new(); // b .. a along the walk
        let mut i = pb;
        loop {
            arc2.push(face[i]);
            if i == pa {
                break;
            }
            i = (i + 1) % len;
        }
        let interior = &path[1..path.len() - 1];
        let mut face1 = arc1;
        face1.extend(interior.iter().rev());
        let mut face2 = arc2;
        face2.extend(interior.iter());
        faces.push(face1);
        faces.push(face2);

        for w in path.windows(2) {
            embedded[w[0]][w[1]] = true;
            embedded[w[1]][w[0]] = true;
        }
        for &v in interior {
            in_h[v] = true;
        }
    }
}

struct Bridge {
    /// vertices of H the bridge attaches to
    attachments: Vec<usize>,
    /// internal vertices (empty for a chord)
    inner: Vec<usize>,
    /// for a chord, the single edge
    chord: Option<(usize, usize)>,
}

impl Bridge {
    /// A path through the bridge between two distinct attachment vertices.
    fn alpha_path(&self, adj: &[Vec<usize>], in_h: &[bool]) -> Vec<usize> {
        if let Some((u, v)) = self.chord {
            return vec![u, v];
        }
        // BFS from the first attachment through internal vertices to any
        // other attachment vertex
        let start = self.attachments[0];
        let mut inside = vec![false; adj.len()];
        for &v in &self.inner {
            inside[v] = true;
        }
        let mut prev = vec![usize::MAX; adj.len()];
        let mut queue: std::collections::VecDeque<usize> = std::collections::VecDeque::new();
        for &w in &adj[start] {
            if inside[w] && prev[w] == usize::MAX {
                prev[w] = start;
                queue.push_back(w);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if in_h[w] && w != start {
                    // found the far endpoint; reconstruct
                    let mut path = vec![w, v];
                    let mut cur = v;
                    while prev[cur] != start {
                        cur = prev[cur];
                        path.push(cur);
                    }
                    path.push(start);
                    path.reverse();
                    return path;
                }
                if inside[w] && prev[w] == usize::MAX {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        unreachable!("biconnected: every bridge has at least two attachments")
    }
}

/// Bridges of the current embedded subgraph H: chords (non-embedded edges with
/// both ends in H) and connected components of G - V(H).
fn current_bridges(
    n: usize,
    adj: &[Vec<usize>],
    in_h: &[bool],
    embedded: &[Vec<bool>],
) -> Vec<Bridge> {
    let mut out = Vec::new();
    for u in 0..n {
        if !in_h[u] {
            continue;
        }
        for &v in &adj[u] {
            if v > u && in_h[v] && !embedded[u][v] {
                out.push(Bridge {
                    attachments: vec![u, v],
                    inner: Vec::new(),
                    chord: Some((u, v)),
                });
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        let mut comp = vec![s];
        let mut stack = vec![s];
        seen[s] = true;
        let mut attach = Vec::new();
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if in_h[w] {
                    attach.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        attach.sort_unstable();
        attach.dedup();
        comp.sort_unstable();
        out.push(Bridge {
            attachments: attach,
            inner: comp,
            chord: None,
        });
    }
    out
}

fn find_cycle(n: usize, adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, par, ref mut i)) = stack.last_mut() {
            if *i < adj[v].len() {
                let w = adj[v][*i];
                *i += 1;
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = v;
                    stack.push((w, v, 0));
                } else if w != par {
                    // back edge v -> w closes a cycle
                    let mut cycle = vec![v];
                    let mut cur = v;
                    while cur != w {
                        cur = parent[cur];
                        cycle.push(cur);
                    }
                    return Some(cycle);
                }
            } else {
                stack.pop();
            }
        }
    }
    None
}
