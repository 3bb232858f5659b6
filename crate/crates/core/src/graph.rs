//! Simple undirected graphs: adjacency storage, BFS distances, structural
//! predicates, graph6 and edge-list formats, and constructors for the named
//! families used throughout the crate.

use crate::error::{Error, Result};

/// An undirected simple graph on vertices `0..n` with a dense adjacency matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>, // row-major n*n, symmetric, false diagonal
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Empty graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
        }
    }

    /// Graph on `n` vertices with the given edges. Rejects loops and
    /// out-of-range endpoints; duplicate edges are idempotent.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        let mut m = 0;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adj[u * self.n + v] {
                    m += 1;
                }
            }
        }
        m
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::InvalidEdge(u, v));
        }
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.n + v]
    }

    pub fn degree(&self, u: usize) -> usize {
        (0..self.n).filter(|&v| self.adj[u * self.n + v]).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.adj[u * self.n + v])
    }

    /// Edge list with `u < v`, ordered lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adj[u * self.n + v] {
                    e.push((u, v));
                }
            }
        }
        e
    }

    /// BFS distances from `src`; unreachable vertices get `-1`.
    pub fn bfs_distances(&self, src: usize) -> Vec<i64> {
        let mut dist = vec![-1i64; self.n];
        let mut queue = std::collections::VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for v in 0..self.n {
                if self.adj[u * self.n + v] && dist[v] < 0 {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// True for the empty graph and any graph whose vertices are mutually
    /// reachable.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d >= 0)
    }

    /// Full shortest-path distance matrix (row-major). Errors when the graph
    /// is disconnected.
    pub fn distance_matrix(&self) -> Result<Vec<i64>> {
        let mut d = vec![0i64; self.n * self.n];
        for u in 0..self.n {
            let row = self.bfs_distances(u);
            if row.iter().any(|&x| x < 0) {
                return Err(Error::Disconnected);
            }
            d[u * self.n..(u + 1) * self.n].copy_from_slice(&row);
        }
        Ok(d)
    }

    /// Largest pairwise distance. Errors when disconnected.
    pub fn diameter(&self) -> Result<i64> {
        let d = self.distance_matrix()?;
        Ok(d.iter().copied().max().unwrap_or(0))
    }

    /// Per-vertex transmissions: `Tr(v) = sum of distances from v`.
    pub fn transmissions(&self) -> Result<Vec<i64>> {
        let d = self.distance_matrix()?;
        Ok((0..self.n)
            .map(|u| d[u * self.n..(u + 1) * self.n].iter().sum())
            .collect())
    }

    /// `Some(k)` when every vertex has transmission `k`.
    pub fn transmission_degree(&self) -> Result<Option<i64>> {
        let t = self.transmissions()?;
        match t.first() {
            None => Ok(None),
            Some(&k) => Ok(if t.iter().all(|&x| x == k) {
                Some(k)
            } else {
                None
            }),
        }
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            None => None,
            Some(&k) => {
                if d.iter().all(|&x| x == k) {
                    Some(k)
                } else {
                    None
                }
            }
        }
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n.max(1) - 1) / 2
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.adj[u * self.n + v] {
                    g.adj[u * self.n + v] = true;
                    g.adj[v * self.n + u] = true;
                }
            }
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = std::collections::VecDeque::new();
            seen[s] = true;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for v in 0..self.n {
                    if self.adj[u * self.n + v] && !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Part sizes (descending) when the graph is complete multipartite, i.e.
    /// when its complement is a disjoint union of cliques. A complete graph
    /// reports `n` parts of size 1; the empty-on-`n` graph reports one part.
    pub fn complete_multipartite_parts(&self) -> Option<Vec<usize>> {
        let comp = self.complement();
        let comps = comp.connected_components();
        for c in &comps {
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    if !comp.has_edge(u, v) {
                        return None;
                    }
                }
            }
        }
        let mut sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Some(sizes)
    }

    /// Two-coloring via BFS. `Some((side0, side1))` when bipartite, with
    /// vertex 0 (and the least vertex of every component) in `side0`.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![-1i8; self.n];
        for s in 0..self.n {
            if color[s] >= 0 {
                continue;
            }
            color[s] = 0;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for v in 0..self.n {
                    if !self.adj[u * self.n + v] {
                        continue;
                    }
                    if color[v] < 0 {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        let side0 = (0..self.n).filter(|&v| color[v] == 0).collect();
        let side1 = (0..self.n).filter(|&v| color[v] == 1).collect();
        Some((side0, side1))
    }

    // ---- graph6 ----------------------------------------------------------

    /// Decode one graph6 line (an optional `>>graph6<<` header is stripped).
    /// Supports the 1-byte order form (n <= 62) and the 4-byte `~` form
    /// (n <= 258047); the 8-byte `~~` form is rejected.
    pub fn from_graph6(line: &str) -> Result<Self> {
        let s = line.trim();
        let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
        let b = s.as_bytes();
        if b.is_empty() {
            return Err(Error::InvalidGraph6("empty line".into()));
        }
        if b.iter().any(|&c| !(63..=126).contains(&c)) {
            return Err(Error::InvalidGraph6(format!("byte out of range in {s:?}")));
        }
        let (n, body) = if b[0] == b'~' {
            if b.len() >= 2 && b[1] == b'~' {
                return Err(Error::InvalidGraph6(
                    "orders above 258047 are not supported".into(),
                ));
            }
            if b.len() < 4 {
                return Err(Error::InvalidGraph6("truncated order field".into()));
            }
            let n = (((b[1] - 63) as usize) << 12)
                | (((b[2] - 63) as usize) << 6)
                | ((b[3] - 63) as usize);
            (n, &b[4..])
        } else {
            ((b[0] - 63) as usize, &b[1..])
        };
        let nbits = n * n.saturating_sub(1) / 2;
        let nbytes = nbits.div_ceil(6);
        if body.len() != nbytes {
            return Err(Error::InvalidGraph6(format!(
                "expected {nbytes} data bytes for order {n}, got {}",
                body.len()
            )));
        }
        let bit = |k: usize| -> bool { (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1 };
        // padding bits past the triangle must be zero
        for k in nbits..nbytes * 6 {
            if bit(k) {
                return Err(Error::InvalidGraph6("nonzero padding bits".into()));
            }
        }
        let mut g = Graph::new(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bit(k) {
                    g.adj[i * n + j] = true;
                    g.adj[j * n + i] = true;
                }
                k += 1;
            }
        }
        Ok(g)
    }

    /// Encode as a graph6 line (no header, no trailing newline).
    pub fn to_graph6(&self) -> String {
        let n = self.n;
        let mut out = Vec::new();
        if n <= 62 {
            out.push(63 + n as u8);
        } else if n <= 258_047 {
            out.push(b'~');
            out.push(63 + ((n >> 12) & 0x3f) as u8);
            out.push(63 + ((n >> 6) & 0x3f) as u8);
            out.push(63 + (n & 0x3f) as u8);
        } else {
            // to_graph6 is total for every graph this crate can build in
            // practice; the 8-byte form is out of scope like in from_graph6
            panic!("orders above 258047 are not supported");
        }
        let nbits = n * n.saturating_sub(1) / 2;
        let mut bits = vec![0u8; nbits.div_ceil(6) * 6];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.adj[i * n + j] {
                    bits[k] = 1;
                }
                k += 1;
            }
        }
        for chunk in bits.chunks(6) {
            let mut v = 0u8;
            for (pos, &b) in chunk.iter().enumerate() {
                v |= b << (5 - pos);
            }
            out.push(63 + v);
        }
        String::from_utf8(out).expect("graph6 bytes are printable ascii")
    }

    // ---- edge-list text --------------------------------------------------

    /// Parse whitespace-separated `u v` pairs, one edge per line. Blank lines
    /// and lines starting with `#` are skipped; the order is one plus the
    /// largest vertex label.
    pub fn from_edge_list_text(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        let mut maxv = 0usize;
        let mut any = false;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize> {
                tok.ok_or_else(|| {
                    Error::InvalidEdgeList(format!("line {}: expected two labels", lineno + 1))
                })?
                .parse()
                .map_err(|_| {
                    Error::InvalidEdgeList(format!("line {}: bad vertex label", lineno + 1))
                })
            };
            let u = parse(it.next())?;
            let v = parse(it.next())?;
            if it.next().is_some() {
                return Err(Error::InvalidEdgeList(format!(
                    "line {}: expected exactly two labels",
                    lineno + 1
                )));
            }
            maxv = maxv.max(u).max(v);
            edges.push((u, v));
            any = true;
        }
        if !any {
            return Err(Error::InvalidEdgeList("no edges found".into()));
        }
        Graph::from_edges(maxv + 1, &edges)
    }

    // ---- named constructors ---------------------------------------------

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.adj[u * n + v] = true;
                g.adj[v * n + u] = true;
            }
        }
        g
    }

    /// Complete graph minus one edge (the edge `(0, 1)`).
    pub fn complete_minus_edge(n: usize) -> Graph {
        let mut g = Graph::complete(n);
        if n >= 2 {
            g.adj[1] = false;
            g.adj[n] = false;
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0).expect("cycle closing edge is valid");
        }
        g
    }

    /// Star on `n` vertices: center 0 joined to `n - 1` leaves.
    pub fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph::from_edges(n, &edges).expect("star edges are valid")
    }

    /// Complete bipartite graph with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let n = a + b;
        let mut g = Graph::new(n);
        for u in 0..a {
            for v in a..n {
                g.adj[u * n + v] = true;
                g.adj[v * n + u] = true;
            }
        }
        g
    }

    /// Complete bipartite graph minus the edge `(0, a)`.
    pub fn complete_bipartite_minus_edge(a: usize, b: usize) -> Graph {
        let mut g = Graph::complete_bipartite(a, b);
        if a >= 1 && b >= 1 {
            let n = a + b;
            g.adj[a] = false;
            g.adj[a * n] = false;
        }
        g
    }

    /// Complete split graph: clique `0..p` fully joined to an independent set
    /// of `n - p` vertices.
    pub fn complete_split(n: usize, p: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..p {
            for v in (u + 1)..n {
                g.adj[u * n + v] = true;
                g.adj[v * n + u] = true;
            }
        }
        g
    }

    /// Wheel on `n` vertices: hub 0 joined to the cycle `1..n`.
    pub fn wheel(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(0, v).expect("hub edges are valid");
        }
        for v in 1..n.saturating_sub(1) {
            g.add_edge(v, v + 1).expect("rim edges are valid");
        }
        if n >= 4 {
            g.add_edge(n - 1, 1).expect("rim closing edge is valid");
        }
        g
    }

    /// Friendship graph: `k` triangles sharing vertex 0 (order `2k + 1`).
    pub fn friendship(k: usize) -> Graph {
        let n = 2 * k + 1;
        let mut g = Graph::new(n);
        for i in 0..k {
            let (a, b) = (1 + 2 * i, 2 + 2 * i);
            g.add_edge(0, a).expect("spoke edge");
            g.add_edge(0, b).expect("spoke edge");
            g.add_edge(a, b).expect("rim edge");
        }
        g
    }

    /// Complete multipartite graph with the given part sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Graph {
        let n: usize = parts.iter().sum();
        let mut start = Vec::with_capacity(parts.len() + 1);
        let mut acc = 0;
        for &p in parts {
            start.push(acc);
            acc += p;
        }
        start.push(acc);
        let part_of = |v: usize| -> usize {
            (0..parts.len())
                .find(|&i| v >= start[i] && v < start[i + 1])
                .expect("vertex lies in some part")
        };
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if part_of(u) != part_of(v) {
                    g.adj[u * n + v] = true;
                    g.adj[v * n + u] = true;
                }
            }
        }
        g
    }

    /// Balanced complete multipartite graph: `q` parts of size `part`.
    pub fn balanced_multipartite(part: usize, q: usize) -> Graph {
        Graph::complete_multipartite(&vec![part; q])
    }

    /// Cocktail party graph: `k` parts of size 2.
    pub fn cocktail_party(k: usize) -> Graph {
        Graph::balanced_multipartite(2, k)
    }

    /// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10, spokes.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("petersen edges are valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_decodes_known_strings() {
        let k2 = Graph::from_graph6("A_").unwrap();
        assert_eq!(k2.n(), 2);
        assert!(k2.has_edge(0, 1));

        let k4 = Graph::from_graph6("C~").unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.is_complete());

        let c4 = Graph::from_graph6("Cl").unwrap();
        assert_eq!(c4.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);

        let empty5 = Graph::from_graph6("D??").unwrap();
        assert_eq!((empty5.n(), empty5.edge_count()), (5, 0));

        let pet = Graph::from_graph6("IheA@GUAo").unwrap();
        assert_eq!((pet.n(), pet.edge_count()), (10, 15));
        assert_eq!(pet.regular_degree(), Some(3));
        assert_eq!(pet.diameter().unwrap(), 2);
    }

    #[test]
    fn graph6_encodes_known_graphs() {
        assert_eq!(Graph::complete(2).to_graph6(), "A_");
        assert_eq!(Graph::complete(3).to_graph6(), "Bw");
        assert_eq!(Graph::complete(4).to_graph6(), "C~");
        assert_eq!(Graph::cycle(4).to_graph6(), "Cl");
        assert_eq!(Graph::cycle(5).to_graph6(), "Dhc");
        assert_eq!(Graph::cycle(6).to_graph6(), "EhEG");
        assert_eq!(Graph::path(3).to_graph6(), "Bg");
        assert_eq!(Graph::path(4).to_graph6(), "Ch");
        assert_eq!(Graph::complete_bipartite(2, 3).to_graph6(), "D]o");
        assert_eq!(Graph::star(4).to_graph6(), "Cs");
        assert_eq!(Graph::petersen().to_graph6(), "IheA@GUAo");
        assert_eq!(Graph::wheel(5).to_graph6(), "D|s");
        assert_eq!(Graph::new(5).to_graph6(), "D??");
        assert_eq!(Graph::new(1).to_graph6(), "@");
    }

    #[test]
    fn graph6_long_form_round_trips() {
        let p100 = Graph::path(100);
        let s = p100.to_graph6();
        assert!(s.starts_with("~?@c"));
        assert_eq!(s.len(), 829);
        let back = Graph::from_graph6(&s).unwrap();
        assert_eq!(back, p100);
    }

    #[test]
    fn graph6_rejects_malformed_input() {
        assert!(Graph::from_graph6("").is_err());
        assert!(Graph::from_graph6("C").is_err()); // truncated body
        assert!(Graph::from_graph6("C~~~").is_err()); // trailing bytes
        assert!(Graph::from_graph6("~~A").is_err()); // 8-byte form
        assert!(Graph::from_graph6("B\u{7f}").is_err()); // byte out of range
        // n=2 with the single padding-adjacent bit pattern 0b010000 sets a
        // padding bit without setting the edge bit
        assert!(Graph::from_graph6("AO").is_err());
    }

    #[test]
    fn distances_and_transmissions() {
        let p4 = Graph::path(4);
        let d = p4.distance_matrix().unwrap();
        assert_eq!(d, vec![0, 1, 2, 3, 1, 0, 1, 2, 2, 1, 0, 1, 3, 2, 1, 0]);
        assert_eq!(p4.diameter().unwrap(), 3);
        assert_eq!(p4.transmissions().unwrap(), vec![6, 4, 4, 6]);
        assert_eq!(p4.transmission_degree().unwrap(), None);

        let pet = Graph::petersen();
        assert_eq!(pet.transmission_degree().unwrap(), Some(15));

        let p3 = Graph::path(3);
        assert_eq!(p3.transmissions().unwrap(), vec![3, 2, 3]);
    }

    #[test]
    fn disconnected_is_detected() {
        let mut g = Graph::new(4);
        g.add_edge(0, 1).unwrap();
        g.add_edge(2, 3).unwrap();
        assert!(!g.is_connected());
        assert!(matches!(g.distance_matrix(), Err(Error::Disconnected)));
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn multipartite_recognition() {
        assert_eq!(
            Graph::cycle(4).complete_multipartite_parts(),
            Some(vec![2, 2])
        );
        assert_eq!(
            Graph::complete_bipartite(2, 3).complete_multipartite_parts(),
            Some(vec![3, 2])
        );
        assert_eq!(
            Graph::complete(6).complete_multipartite_parts(),
            Some(vec![1; 6])
        );
        assert_eq!(
            Graph::star(5).complete_multipartite_parts(),
            Some(vec![4, 1])
        );
        // paw = triangle plus a pendant: not complete multipartite
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (1, 3)]).unwrap();
        assert_eq!(paw.complete_multipartite_parts(), None);
        // path P4: complement is P4, whose components are not cliques
        assert_eq!(Graph::path(4).complete_multipartite_parts(), None);
    }

    #[test]
    fn bipartition_sides() {
        let (p, q) = Graph::complete_bipartite(2, 3).bipartition().unwrap();
        assert_eq!((p, q), (vec![0, 1], vec![2, 3, 4]));
        assert!(Graph::cycle(5).bipartition().is_none());
        let (p, q) = Graph::cycle(6).bipartition().unwrap();
        assert_eq!((p.len(), q.len()), (3, 3));
    }

    #[test]
    fn constructors_have_expected_shape() {
        assert_eq!(Graph::wheel(5).degrees(), vec![4, 3, 3, 3, 3]);
        assert_eq!(Graph::friendship(2).n(), 5);
        assert_eq!(Graph::friendship(2).edge_count(), 6);
        assert_eq!(Graph::complete_split(5, 2).edge_count(), 1 + 2 * 3);
        assert_eq!(Graph::cocktail_party(3).regular_degree(), Some(4));
        assert_eq!(Graph::complete_minus_edge(4).edge_count(), 5);
        assert_eq!(
            Graph::complete_bipartite_minus_edge(2, 2),
            Graph::from_edges(4, &[(0, 3), (1, 2), (1, 3)]).unwrap()
        );
        // K_{2x2} is C4 up to relabeling: parts {0,1} and {2,3}
        assert_eq!(
            Graph::balanced_multipartite(2, 2).edges(),
            vec![(0, 2), (0, 3), (1, 2), (1, 3)]
        );
        // complete split with empty independent part degenerates to K_n
        assert_eq!(Graph::complete_split(4, 4), Graph::complete(4));
    }

    #[test]
    fn edge_list_text_parses() {
        let g = Graph::from_edge_list_text("# triangle with pendant\n0 1\n1 2\n2 0\n\n1 3\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 4);
        assert!(Graph::from_edge_list_text("0 1 2\n").is_err());
        assert!(Graph::from_edge_list_text("0 x\n").is_err());
        assert!(Graph::from_edge_list_text("").is_err());
    }
}
