//! Exact graph coloring on bitmask adjacency: DSATUR greedy for the upper
//! bound, a greedy clique for the lower bound, and branch-and-bound in between.
//! All tie-breaks go to the lowest vertex index, so results are deterministic.

/// Adjacency as one bitmask row per vertex. At most 128 vertices.
pub type AdjMasks = Vec<u128>;

/// A maximal clique found greedily over vertices in degree-descending order.
pub fn greedy_clique(adj: &[u128]) -> Vec<usize> {
    let n = adj.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].count_ones()), v));
    let mut clique: Vec<usize> = Vec::new();
    for &v in &order {
        if clique.iter().all(|&u| adj[v] >> u & 1 == 1) {
            clique.push(v);
        }
    }
    clique.sort_unstable();
    clique
}

/// DSATUR greedy coloring; colors are 1-based. Returns (color count, coloring).
fn dsatur_greedy(adj: &[u128]) -> (usize, Vec<usize>) {
    let n = adj.len();
    let mut colors = vec![0usize; n];
    let mut neighbor_colors: Vec<u128> = vec![0; n];
    let mut max_used = 0;
    for _ in 0..n {
        // pick uncolored vertex with max saturation, then max degree, then index
        let v = (0..n)
            .filter(|&v| colors[v] == 0)
            .max_by_key(|&v| {
                (
                    neighbor_colors[v].count_ones(),
                    adj[v].count_ones(),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        let mut c = 1;
        while neighbor_colors[v] >> (c - 1) & 1 == 1 {
            c += 1;
        }
        colors[v] = c;
        max_used = max_used.max(c);
        let mut nb = adj[v];
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            neighbor_colors[w] |= 1 << (c - 1);
        }
    }
    (max_used, colors)
}

struct Search<'a> {
    adj: &'a [u128],
    colors: Vec<usize>,
    best: usize,
    best_colors: Vec<usize>,
    lb: usize,
}

impl Search<'_> {
    fn run(&mut self, colored: usize, max_used: usize) {
        if self.best == self.lb {
            return; // optimum proven
        }
        let n = self.adj.len();
        if colored == n {
            if max_used < self.best {
                self.best = max_used;
                self.best_colors = self.colors.clone();
            }
            return;
        }
        // DSATUR vertex selection
        let mut pick = usize::MAX;
        let mut key = (0usize, 0u32);
        for v in 0..n {
            if self.colors[v] != 0 {
                continue;
            }
            let mut sat: u128 = 0;
            let mut nb = self.adj[v];
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if self.colors[w] != 0 {
                    sat |= 1 << (self.colors[w] - 1);
                }
            }
            let k = (sat.count_ones() as usize, self.adj[v].count_ones());
            if pick == usize::MAX || k > key {
                pick = v;
                key = k;
            }
        }
        let v = pick;
        let limit = (max_used + 1).min(self.best - 1);
        for c in 1..=limit {
            let mut ok = true;
            let mut nb = self.adj[v];
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if self.colors[w] == c {
                    ok = false;
                    break;
                }
            }
            if ok {
                self.colors[v] = c;
                self.run(colored + 1, max_used.max(c));
                self.colors[v] = 0;
            }
        }
    }
}

/// Exact chromatic number with a witnessing proper coloring (colors 1..=k).
pub fn chromatic_number_exact(adj: &[u128]) -> (usize, Vec<usize>) {
    let n = adj.len();
    assert!(n <= 128, "coloring kernel limited to 128 vertices");
    if n == 0 {
        return (0, Vec::new());
    }
    if adj.iter().all(|&m| m == 0) {
        return (1, vec![1; n]);
    }
    let clique = greedy_clique(adj);
    let lb = clique.len();
    let (ub, greedy_colors) = dsatur_greedy(adj);
    if ub == lb {
        return (ub, greedy_colors);
    }
    let mut s = Search {
        adj,
        colors: vec![0; n],
        best: ub,
        best_colors: greedy_colors,
        lb,
    };
    // pre-color the clique: sound symmetry breaking
    for (i, &v) in clique.iter().enumerate() {
        s.colors[v] = i + 1;
    }
    s.run(clique.len(), clique.len());
    (s.best, s.best_colors)
}
