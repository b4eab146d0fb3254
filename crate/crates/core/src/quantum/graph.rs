use crate::error::{Error, Result};

/// Undirected simple graph on at most 64 vertices, stored as adjacency bitsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<u64>,
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(v)
    })
}

impl SimpleGraph {
    pub fn new(n: usize) -> Result<Self> {
        if n > 64 {
            return Err(Error::InvalidArgument(format!(
                "graphs are limited to 64 vertices, got {n}"
            )));
        }
        Ok(SimpleGraph { adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::new(n)?;
        for a in 0..n {
            g.adj[a] = g.all() & !(1 << a);
        }
        Ok(g)
    }

    /// The Petersen graph as the Kneser graph on 2-subsets of a 5-set.
    pub fn petersen() -> Self {
        let pairs: Vec<u8> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (1u8 << a) | (1 << b)))
            .collect();
        let mut g = Self::new(10).expect("10 vertices");
        for i in 0..10 {
            for j in i + 1..10 {
                if pairs[i] & pairs[j] == 0 {
                    g.add_edge(i, j).expect("in range");
                }
            }
        }
        g
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let n = self.len();
        if a >= n || b >= n || a == b {
            return Err(Error::InvalidArgument(format!(
                "bad edge ({a}, {b}) on {n} vertices"
            )));
        }
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    fn all(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        bits(self.adj[v]).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| bits(self.adj[a] >> a >> 1).map(move |d| (a, a + 1 + d)))
            .collect()
    }

    /// Subgraph induced on `vs`, relabelled `0..vs.len()` in the given order.
    pub fn induced(&self, vs: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph {
            adj: vec![0; vs.len()],
        };
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate() {
                if self.has_edge(a, b) {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        g
    }

    /// Length of a shortest cycle, if any.
    pub fn girth(&self) -> Option<usize> {
        let n = self.len();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for y in bits(self.adj[x]) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let c = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(c, |b| b.min(c)));
                    }
                }
            }
        }
        best
    }

    /// All maximal cliques, each sorted, listed in lexicographic order.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.bron_kerbosch(0, self.all(), 0, &mut out);
        let mut out: Vec<Vec<usize>> = out.into_iter().map(|m| bits(m).collect()).collect();
        out.sort();
        out
    }

    fn bron_kerbosch(&self, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = bits(p | x)
            .max_by_key(|&u| (p & self.adj[u]).count_ones())
            .expect("p or x nonempty");
        for v in bits(p & !self.adj[pivot]) {
            self.bron_kerbosch(r | 1 << v, p & self.adj[v], x & self.adj[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }

    /// Greedy cover of `p` by cliques; the count bounds any independent set inside `p`.
    fn clique_cover_bound(&self, mut p: u64) -> u32 {
        let mut k = 0;
        while p != 0 {
            let mut cand = p;
            while cand != 0 {
                let v = cand.trailing_zeros();
                p &= !(1 << v);
                cand &= self.adj[v as usize];
            }
            k += 1;
        }
        k
    }

    /// A maximum independent set, the lexicographically least among all of
    /// maximum size (vertex lists compared after sorting).
    ///
    /// Branches on the smallest remaining vertex, taking it first; only a
    /// strictly larger set replaces the incumbent, so the first optimum found
    /// is the least one. Bounds come from greedy clique covers.
    pub fn max_independent_set(&self) -> Vec<usize> {
        let mut best = 0u64;
        let mut best_len = 0u32;
        self.mis(0, 0, self.all(), &mut best, &mut best_len);
        bits(best).collect()
    }

    fn mis(&self, cur: u64, cur_len: u32, p: u64, best: &mut u64, best_len: &mut u32) {
        if p == 0 {
            if cur_len > *best_len {
                *best = cur;
                *best_len = cur_len;
            }
            return;
        }
        if cur_len + self.clique_cover_bound(p) <= *best_len {
            return;
        }
        let v = p.trailing_zeros() as usize;
        let rest = p & !(1 << v);
        self.mis(
            cur | 1 << v,
            cur_len + 1,
            rest & !self.adj[v],
            best,
            best_len,
        );
        self.mis(cur, cur_len, rest, best, best_len);
    }

    pub fn is_independent(&self, vs: &[usize]) -> bool {
        vs.iter().all(|&a| vs.iter().all(|&b| !self.has_edge(a, b)))
    }

    /// Visits every adjacency-preserving bijection `self → other`; the
    /// callback returns `false` to stop.
    fn for_each_isomorphism(&self, other: &SimpleGraph, f: &mut dyn FnMut(&[usize]) -> bool) {
        let n = self.len();
        if n != other.len() {
            return;
        }
        let da: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let db: Vec<usize> = (0..n).map(|v| other.degree(v)).collect();
        let (mut sa, mut sb) = (da.clone(), db.clone());
        sa.sort();
        sb.sort();
        if sa != sb {
            return;
        }
        // Map vertices in BFS order so each new vertex has mapped neighbours.
        let mut order = Vec::with_capacity(n);
        let mut seen = 0u64;
        for s in 0..n {
            if seen >> s & 1 == 1 {
                continue;
            }
            seen |= 1 << s;
            order.push(s);
            let mut k = order.len() - 1;
            while k < order.len() {
                for w in bits(self.adj[order[k]] & !seen) {
                    seen |= 1 << w;
                    order.push(w);
                }
                k += 1;
            }
        }
        let mut map = vec![usize::MAX; n];
        let mut used = 0u64;
        self.iso_step(other, &order, 0, &mut map, &mut used, &da, &db, f);
    }

    #[allow(clippy::too_many_arguments)]
    fn iso_step(
        &self,
        other: &SimpleGraph,
        order: &[usize],
        k: usize,
        map: &mut [usize],
        used: &mut u64,
        da: &[usize],
        db: &[usize],
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if k == order.len() {
            return f(map);
        }
        let v = order[k];
        for w in 0..other.len() {
            if *used >> w & 1 == 1 || da[v] != db[w] {
                continue;
            }
            let ok = order[..k]
                .iter()
                .all(|&u| self.has_edge(u, v) == other.has_edge(map[u], w));
            if !ok {
                continue;
            }
            map[v] = w;
            *used |= 1 << w;
            let go_on = self.iso_step(other, order, k + 1, map, used, da, db, f);
            *used &= !(1 << w);
            map[v] = usize::MAX;
            if !go_on {
                return false;
            }
        }
        true
    }

    /// An isomorphism `self → other` as a vertex map, if one exists.
    pub fn isomorphism_to(&self, other: &SimpleGraph) -> Option<Vec<usize>> {
        let mut found = None;
        self.for_each_isomorphism(other, &mut |m| {
            found = Some(m.to_vec());
            false
        });
        found
    }

    /// Number of graph automorphisms, by exhaustive search.
    pub fn automorphism_count(&self) -> u64 {
        let mut count = 0;
        self.for_each_isomorphism(self, &mut |_| {
            count += 1;
            true
        });
        count
    }

    /// Graphviz rendering with the given vertex labels.
    pub fn to_dot(&self, name: &str, labels: &[String]) -> String {
        let mut s = format!("graph {name} {{\n");
        for (v, l) in labels.iter().enumerate().take(self.len()) {
            s.push_str(&format!("  {v} [label=\"{l}\"];\n"));
        }
        for (a, b) in self.edges() {
            s.push_str(&format!("  {a} -- {b};\n"));
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_invariants() {
        let p = SimpleGraph::petersen();
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(p.girth(), Some(5));
        assert_eq!(p.automorphism_count(), 120);
        assert_eq!(p.max_independent_set().len(), 4);
        assert_eq!(p.maximal_cliques().len(), 15);
    }

    #[test]
    fn complete_graph() {
        let k3 = SimpleGraph::complete(3).unwrap();
        assert_eq!(k3.max_independent_set(), vec![0]);
        assert_eq!(k3.maximal_cliques(), vec![vec![0, 1, 2]]);
        assert_eq!(k3.automorphism_count(), 6);
        assert_eq!(k3.girth(), Some(3));
    }

    #[test]
    fn lex_least_maximum() {
        // Path 0-1-2-3: maximum independent sets {0,2}, {0,3}, {1,3}.
        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.max_independent_set(), vec![0, 2]);
        let e = SimpleGraph::new(0).unwrap();
        assert!(e.max_independent_set().is_empty());
    }

    #[test]
    fn isomorphism_of_relabelled_cycle() {
        let c5 = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let d5 = SimpleGraph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        let m = c5.isomorphism_to(&d5).unwrap();
        for (a, b) in c5.edges() {
            assert!(d5.has_edge(m[a], m[b]));
        }
        assert_eq!(c5.automorphism_count(), 10);
        assert!(c5
            .isomorphism_to(&SimpleGraph::complete(5).unwrap())
            .is_none());
    }
}
