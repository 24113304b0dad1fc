//! Simple undirected graphs on dense integer vertex ids, the edge-list text
//! format, and the named-family generators.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..vertex_count`.
///
/// Edges are stored canonically as `(u, v)` with `u < v`, sorted, so iteration
/// order is deterministic. Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, {:?})", self.n, self.edges.len(), self.edges)
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops and out-of-range endpoints.
    /// Duplicate edges are collapsed.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { line: 0, v: u });
            }
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    bound: n,
                });
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0).len() == self.n
    }

    fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        let mut out = Vec::new();
        while let Some(v) = stack.pop() {
            out.push(v);
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if !seen[s] {
                let comp = self.component_of(s);
                for &v in &comp {
                    seen[v] = true;
                }
                comps.push(comp);
            }
        }
        comps
    }

    /// Returns this graph plus one new vertex (id `vertex_count`) adjacent to
    /// exactly `targets`. The input is unmodified.
    pub fn add_apex(&self, targets: &[usize]) -> Result<Graph> {
        for &t in targets {
            if t >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: t,
                    bound: self.n,
                });
            }
        }
        let apex = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(targets.iter().map(|&t| (t, apex)));
        Graph::new(self.n + 1, edges)
    }
}

/// Parses the edge-list text format: lines of `u v`, an optional header line
/// `n <count>`, blank lines and `#` comments allowed.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_id: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        if toks[0] == "n" {
            if toks.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "header must be `n <count>`".into(),
                });
            }
            let count: usize = toks[1].parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("non-integer vertex count `{}`", toks[1]),
            })?;
            declared_n = Some(count);
            continue;
        }
        if toks.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected `u v`, got `{}`", line.trim()),
            });
        }
        let parse = |t: &str| -> Result<usize> {
            t.parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("non-integer token `{t}`"),
            })
        };
        let u = parse(toks[0])?;
        let v = parse(toks[1])?;
        if u == v {
            return Err(Error::SelfLoop { line: line_no, v: u });
        }
        max_id = Some(max_id.unwrap_or(0).max(u).max(v));
        edges.push((u, v));
    }
    let n = match (declared_n, max_id) {
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => 0,
    };
    Graph::new(n, edges)
}

/// Renders a graph in the edge-list format accepted by [`parse_edge_list`].
pub fn render_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// A named graph family with parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// K_n
    Complete(usize),
    /// K_{m,n} with parts {0..m-1} and {m..m+n-1}
    CompleteBipartite(usize, usize),
    /// C_n
    Cycle(usize),
    /// P_n on n vertices
    Path(usize),
    /// Moebius ladder M_{2k}: cycle C_{2k} plus rungs i ~ i+k. The parameter
    /// is the vertex count 2k, even and >= 4.
    MoebiusLadder(usize),
}

impl FamilySpec {
    /// Parses the CLI shorthand: `K5`, `K3,3`, `C7`, `P4`, `M16`.
    pub fn parse(s: &str) -> Result<FamilySpec> {
        let err = || Error::InvalidFamily(s.to_string());
        let (tag, rest) = s.split_at(1);
        let spec = match tag {
            "K" | "k" => {
                if let Some((a, b)) = rest.split_once(',') {
                    FamilySpec::CompleteBipartite(
                        a.parse().map_err(|_| err())?,
                        b.parse().map_err(|_| err())?,
                    )
                } else {
                    FamilySpec::Complete(rest.parse().map_err(|_| err())?)
                }
            }
            "C" | "c" => FamilySpec::Cycle(rest.parse().map_err(|_| err())?),
            "P" | "p" => FamilySpec::Path(rest.parse().map_err(|_| err())?),
            "M" | "m" => FamilySpec::MoebiusLadder(rest.parse().map_err(|_| err())?),
            _ => return Err(err()),
        };
        spec.validate().map_err(|_| err())?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            FamilySpec::Complete(n) => n >= 1,
            FamilySpec::CompleteBipartite(m, n) => m >= 1 && n >= 1,
            FamilySpec::Cycle(n) => n >= 3,
            FamilySpec::Path(n) => n >= 1,
            FamilySpec::MoebiusLadder(n) => n >= 4 && n % 2 == 0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidFamily(format!("{self:?}")))
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Complete(n) => write!(f, "K{n}"),
            FamilySpec::CompleteBipartite(m, n) => write!(f, "K{m},{n}"),
            FamilySpec::Cycle(n) => write!(f, "C{n}"),
            FamilySpec::Path(n) => write!(f, "P{n}"),
            FamilySpec::MoebiusLadder(n) => write!(f, "M{n}"),
        }
    }
}

/// Generates the canonical labeling of a graph family.
pub fn generate(spec: FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match spec {
        FamilySpec::Complete(n) => {
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, edges)
        }
        FamilySpec::CompleteBipartite(m, n) => {
            let edges = (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v)));
            Graph::new(m + n, edges)
        }
        FamilySpec::Cycle(n) => Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))),
        FamilySpec::Path(n) => Graph::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))),
        FamilySpec::MoebiusLadder(n) => {
            let k = n / 2;
            let edges = (0..n)
                .map(|i| (i, (i + 1) % n))
                .chain((0..k).map(|i| (i, i + k)));
            Graph::new(n, edges)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_triangle() {
        let g = parse_edge_list("0 1\n1 2\n0 2").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn parse_rejects_self_loop() {
        match parse_edge_list("0 0") {
            Err(Error::SelfLoop { line: 1, v: 0 }) => {}
            other => panic!("expected self-loop error, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_non_integer() {
        match parse_edge_list("0 1\n1 x") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("expected parse error on line 2, got {other:?}"),
        }
    }

    #[test]
    fn parse_header_adds_isolated_vertices() {
        let g = parse_edge_list("n 5\n0 1").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn parse_collapses_duplicates_and_skips_comments() {
        let g = parse_edge_list("# a triangle\n0 1\n1 0\n\n1 2 # last\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn render_round_trip() {
        let g = generate(FamilySpec::MoebiusLadder(8)).unwrap();
        let g2 = parse_edge_list(&render_edge_list(&g)).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn generate_counts() {
        assert_eq!(generate(FamilySpec::Complete(4)).unwrap().edge_count(), 6);
        assert_eq!(
            generate(FamilySpec::CompleteBipartite(3, 3)).unwrap().edge_count(),
            9
        );
        let m16 = generate(FamilySpec::MoebiusLadder(16)).unwrap();
        assert_eq!(m16.vertex_count(), 16);
        assert_eq!(m16.edge_count(), 24);
    }

    #[test]
    fn family_parse_shorthand() {
        assert_eq!(FamilySpec::parse("K5").unwrap(), FamilySpec::Complete(5));
        assert_eq!(
            FamilySpec::parse("K3,3").unwrap(),
            FamilySpec::CompleteBipartite(3, 3)
        );
        assert_eq!(FamilySpec::parse("C7").unwrap(), FamilySpec::Cycle(7));
        assert_eq!(FamilySpec::parse("M16").unwrap(), FamilySpec::MoebiusLadder(16));
        assert!(FamilySpec::parse("M15").is_err());
        assert!(FamilySpec::parse("Q3").is_err());
    }

    #[test]
    fn add_apex_builds_wheel() {
        let c4 = generate(FamilySpec::Cycle(4)).unwrap();
        let w4 = c4.add_apex(&[0, 1, 2, 3]).unwrap();
        assert_eq!(w4.vertex_count(), 5);
        assert_eq!(w4.edge_count(), 8);
        let k3 = generate(FamilySpec::Complete(3)).unwrap();
        let g = k3.add_apex(&[]).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.degree(3), 0);
        assert!(k3.add_apex(&[7]).is_err());
    }

    #[test]
    fn complete_graph_is_vertex_transitive() {
        // relabeling the vertices of K_n yields the same edge set
        let k5 = generate(FamilySpec::Complete(5)).unwrap();
        let perm = [3usize, 0, 4, 1, 2];
        let relabeled = Graph::new(
            5,
            k5.edges().iter().map(|&(u, v)| (perm[u], perm[v])),
        )
        .unwrap();
        assert_eq!(k5, relabeled);
    }
}
