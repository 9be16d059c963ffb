//! Simple undirected graphs with dense vertex indices.
//!
//! Graphs are immutable values: every mutating operation returns a new
//! graph, which keeps recursive invariant computations free of aliasing
//! and lets memo tables key on stable snapshots.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// A vertex index, dense in `[0, n)` within its graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An unordered pair of distinct vertices, stored with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: VertexId,
    b: VertexId,
}

impl Edge {
    /// Normalizes endpoint order. Panics on a loop; validate untrusted
    /// input before constructing.
    pub fn new(u: VertexId, v: VertexId) -> Edge {
        assert_ne!(u, v, "loops are not representable");
        if u < v {
            Edge { a: u, b: v }
        } else {
            Edge { a: v, b: u }
        }
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.a, self.b)
    }

    pub fn touches(&self, v: VertexId) -> bool {
        self.a == v || self.b == v
    }

    /// The endpoint other than `v`. Panics if `v` is not an endpoint.
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.a == v {
            self.b
        } else {
            assert_eq!(self.b, v);
            self.a
        }
    }

    pub fn shares_end(&self, other: &Edge) -> bool {
        self.touches(other.a) || self.touches(other.b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// A two-edge path `left - center - right`, one P3 subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct P3Sub {
    pub center: VertexId,
    pub left: VertexId,
    pub right: VertexId,
}

impl P3Sub {
    /// Normalizes so `left < right`.
    pub fn new(center: VertexId, x: VertexId, y: VertexId) -> P3Sub {
        let (left, right) = if x < y { (x, y) } else { (y, x) };
        P3Sub {
            center,
            left,
            right,
        }
    }

    pub fn vertices(&self) -> [VertexId; 3] {
        [self.left, self.center, self.right]
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for graph with {1} vertices")]
    UnknownVertex(VertexId, usize),
    #[error("edge {0} already present")]
    DuplicateEdge(Edge),
    #[error("edge {0}-{1} not present")]
    MissingEdge(VertexId, VertexId),
    #[error("loop at vertex {0} not allowed")]
    Loop(VertexId),
    #[error("graph is not a tree: {0}")]
    NotATree(&'static str),
    #[error("graph is not a forest: contains a cycle")]
    NotAForest,
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
    adj: Vec<Vec<VertexId>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Graph {
        Graph {
            n,
            edges: BTreeSet::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            let (u, v) = (VertexId(u), VertexId(v));
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.insert_edge(Edge::new(u, v))?;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v.0 < self.n {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v, self.n))
        }
    }

    fn insert_edge(&mut self, e: Edge) -> Result<(), GraphError> {
        if !self.edges.insert(e) {
            return Err(GraphError::DuplicateEdge(e));
        }
        let (a, b) = e.endpoints();
        let pos = self.adj[a.0].binary_search(&b).unwrap_err();
        self.adj[a.0].insert(pos, b);
        let pos = self.adj[b.0].binary_search(&a).unwrap_err();
        self.adj[b.0].insert(pos, a);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n).map(VertexId)
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u != v && self.edges.contains(&Edge::new(u, v))
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v.0]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.0].len()
    }

    /// New graph with the vertices in `s` (and incident edges) removed;
    /// surviving vertices are renumbered in order.
    pub fn delete_vertices(&self, s: &BTreeSet<VertexId>) -> Result<Graph, GraphError> {
        for &v in s {
            self.check_vertex(v)?;
        }
        let mut remap = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !s.contains(&VertexId(v)) {
                remap[v] = next;
                next += 1;
            }
        }
        let mut g = Graph::new(next);
        for e in &self.edges {
            let (a, b) = e.endpoints();
            if remap[a.0] != usize::MAX && remap[b.0] != usize::MAX {
                g.insert_edge(Edge::new(VertexId(remap[a.0]), VertexId(remap[b.0])))
                    .expect("remapped edges stay distinct");
            }
        }
        Ok(g)
    }

    pub fn delete_vertex(&self, v: VertexId) -> Result<Graph, GraphError> {
        self.delete_vertices(&BTreeSet::from([v]))
    }

    pub fn add_edge(&self, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        let mut g = self.clone();
        g.insert_edge(Edge::new(u, v))?;
        Ok(g)
    }

    pub fn delete_edge(&self, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        let e = Edge::new(u, v);
        if !self.edges.contains(&e) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.edges.remove(&e);
        g.adj[u.0].retain(|&w| w != v);
        g.adj[v.0].retain(|&w| w != u);
        Ok(g)
    }

    /// The line graph: one vertex per edge (numbered by sorted edge
    /// order), adjacent when the underlying edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let edges: Vec<Edge> = self.edges().collect();
        let mut g = Graph::new(edges.len());
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                if edges[i].shares_end(&edges[j]) {
                    g.insert_edge(Edge::new(VertexId(i), VertexId(j)))
                        .expect("distinct index pairs");
                }
            }
        }
        g
    }

    /// All P3 subgraphs that contain `v`, either as their center or as an
    /// endpoint, each listed once, in sorted order.
    pub fn p3_containing(&self, v: VertexId) -> Result<Vec<P3Sub>, GraphError> {
        self.check_vertex(v)?;
        let mut out = Vec::new();
        let nv = self.neighbors(v);
        for i in 0..nv.len() {
            for j in i + 1..nv.len() {
                out.push(P3Sub::new(v, nv[i], nv[j]));
            }
        }
        for &u in nv {
            for &w in self.neighbors(u) {
                if w != v {
                    out.push(P3Sub::new(u, v, w));
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Whether any vertex has degree at least two (equivalently, the
    /// graph contains a two-edge path).
    pub fn contains_p3(&self) -> bool {
        self.adj.iter().any(|ns| ns.len() >= 2)
    }

    /// Connected components, each with compacted indices, ordered by
    /// their smallest original vertex id.
    pub fn connected_components(&self) -> Vec<Graph> {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = count;
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(VertexId(v)) {
                    if comp[w.0] == usize::MAX {
                        comp[w.0] = count;
                        stack.push(w.0);
                    }
                }
            }
            count += 1;
        }
        let mut remap = vec![usize::MAX; self.n];
        let mut sizes = vec![0usize; count];
        for v in 0..self.n {
            remap[v] = sizes[comp[v]];
            sizes[comp[v]] += 1;
        }
        let mut out: Vec<Graph> = sizes.into_iter().map(Graph::new).collect();
        for e in &self.edges {
            let (a, b) = e.endpoints();
            out[comp[a.0]]
                .insert_edge(Edge::new(VertexId(remap[a.0]), VertexId(remap[b.0])))
                .expect("component edges stay distinct");
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// Acyclic check via union-find.
    pub fn is_forest(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            let (a, b) = e.endpoints();
            let (ra, rb) = (find(&mut parent, a.0), find(&mut parent, b.0));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Disjoint union; vertices of `other` are shifted past `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for e in &self.edges {
            let (a, b) = e.endpoints();
            g.insert_edge(Edge::new(a, b)).expect("copies are distinct");
        }
        for e in &other.edges {
            let (a, b) = e.endpoints();
            g.insert_edge(Edge::new(VertexId(a.0 + self.n), VertexId(b.0 + self.n)))
                .expect("shifted copies are distinct");
        }
        g
    }

    /// Applies a vertex relabeling; `perm[old] = new`. Panics unless
    /// `perm` is a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for e in &self.edges {
            let (a, b) = e.endpoints();
            g.insert_edge(Edge::new(VertexId(perm[a.0]), VertexId(perm[b.0])))
                .expect("permuted edges stay distinct");
        }
        g
    }
}
