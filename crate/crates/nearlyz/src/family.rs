//! Constructors for the named graph families and the pseudo-leaf
//! selector that drives the pivot recursion.

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId};

/// Description of a named family member.
///
/// Orders count vertices. A broom `B^k_n` is a path of `k` vertices
/// with `n - k` pendants on one end. A star-like tree (spider) is a
/// root with path branches of the given lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Star { n: usize },
    Broom { n: usize, handle: usize },
    StarLike { branches: Vec<usize> },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} of order {n} below minimum of {min}")]
    OrderTooSmall {
        family: &'static str,
        n: usize,
        min: usize,
    },
    #[error("broom handle {handle} outside 3..={n}")]
    BadHandle { handle: usize, n: usize },
    #[error("star-like branch lengths must be positive")]
    EmptyBranch,
    #[error("attached branch is not a tree")]
    BranchNotATree,
    #[error("branch root {0} out of range")]
    BranchRootOutOfRange(VertexId),
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are simple")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are simple")
}

/// `K_{1,n-1}`, centered at vertex 0.
pub fn star(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (0, i))).expect("star edges are simple")
}

/// Broom `B^k_n`: path on vertices `0..k`, pendants `k..n` all joined
/// to vertex `k - 1`.
pub fn broom(n: usize, handle: usize) -> Result<Graph, FamilyError> {
    if !(3..=n).contains(&handle) {
        return Err(FamilyError::BadHandle { handle, n });
    }
    let edges = (1..handle)
        .map(|i| (i - 1, i))
        .chain((handle..n).map(|i| (handle - 1, i)));
    Ok(Graph::from_edges(n, edges).expect("broom edges are simple"))
}

/// Star-like tree with vertex 0 as its root; branch `i` of length
/// `branches[i]` occupies a contiguous block of vertex ids.
pub fn star_like(branches: &[usize]) -> Result<Graph, FamilyError> {
    if branches.contains(&0) {
        return Err(FamilyError::EmptyBranch);
    }
    let n = 1 + branches.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for &len in branches {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("spider edges are simple"))
}

/// Builds the graph a spec describes.
pub fn make_family(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    match spec {
        FamilySpec::Path { n } => {
            if *n < 1 {
                return Err(FamilyError::OrderTooSmall {
                    family: "path",
                    n: *n,
                    min: 1,
                });
            }
            Ok(path(*n))
        }
        FamilySpec::Cycle { n } => {
            if *n < 3 {
                return Err(FamilyError::OrderTooSmall {
                    family: "cycle",
                    n: *n,
                    min: 3,
                });
            }
            Ok(cycle(*n))
        }
        FamilySpec::Star { n } => {
            if *n < 1 {
                return Err(FamilyError::OrderTooSmall {
                    family: "star",
                    n: *n,
                    min: 1,
                });
            }
            Ok(star(*n))
        }
        FamilySpec::Broom { n, handle } => broom(*n, *handle),
        FamilySpec::StarLike { branches } => star_like(branches),
    }
}

/// A tree with a designated root vertex.
#[derive(Debug, Clone)]
pub struct RootedTree {
    pub graph: Graph,
    pub root: VertexId,
}

impl RootedTree {
    pub fn new(graph: Graph, root: VertexId) -> Result<RootedTree, FamilyError> {
        if !graph.is_tree() {
            return Err(FamilyError::BranchNotATree);
        }
        if root.0 >= graph.vertex_count() {
            return Err(FamilyError::BranchRootOutOfRange(root));
        }
        Ok(RootedTree { graph, root })
    }

    /// A path whose root is one of its ends.
    pub fn end_rooted_path(len: usize) -> RootedTree {
        RootedTree {
            graph: path(len),
            root: VertexId(0),
        }
    }

    /// Whether this branch is a path rooted at one of its end-vertices,
    /// the shape the ironing inequalities leave alone.
    pub fn is_end_rooted_path(&self) -> bool {
        let n = self.graph.vertex_count();
        if n == 1 {
            return true;
        }
        self.graph.vertices().all(|v| self.graph.degree(v) <= 2)
            && self.graph.degree(self.root) == 1
    }
}

/// Joins rooted branches under a fresh root: the new vertex 0 is made
/// adjacent to the root of every branch.
pub fn attach_branches(branches: &[RootedTree]) -> Result<Graph, FamilyError> {
    for b in branches {
        if !b.graph.is_tree() {
            return Err(FamilyError::BranchNotATree);
        }
    }
    let total = 1 + branches.iter().map(|b| b.graph.vertex_count()).sum::<usize>();
    let mut edges = Vec::with_capacity(total - 1);
    let mut offset = 1;
    for b in branches {
        edges.push((0, offset + b.root.0));
        for e in b.graph.edges() {
            let (a, c) = e.endpoints();
            edges.push((offset + a.0, offset + c.0));
        }
        offset += b.graph.vertex_count();
    }
    Ok(Graph::from_edges(total, edges).expect("attached branches stay simple"))
}

/// A pseudo-leaf pick: a vertex `v` that has a leaf neighbor and at
/// most one non-leaf neighbor, with its leaf neighbor `z`, its
/// highest-degree neighbor `u`, and its degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PseudoLeaf {
    pub vertex: VertexId,
    pub leaf: VertexId,
    pub heavy_neighbor: VertexId,
    pub degree: usize,
}

/// Finds a pseudo-leaf in a forest with at least one edge.
///
/// Among qualifying vertices the pick is the one of largest degree
/// (smallest id on ties); the leaf neighbor is the smallest-id leaf,
/// and the heavy neighbor the highest-degree neighbor, smallest id on
/// ties. Ordering by degree keeps the recursion shallow and, on a
/// broom, selects the hub rather than the handle.
pub fn find_pseudo_leaf(g: &Graph) -> Result<PseudoLeaf, GraphError> {
    if !g.is_forest() {
        return Err(GraphError::NotAForest);
    }
    let mut best: Option<PseudoLeaf> = None;
    for v in g.vertices() {
        let neighbors = g.neighbors(v);
        if neighbors.is_empty() {
            continue;
        }
        let non_leaf = neighbors.iter().filter(|&&u| g.degree(u) > 1).count();
        if non_leaf > 1 {
            continue;
        }
        let leaf = match neighbors.iter().find(|&&u| g.degree(u) == 1) {
            Some(&z) => z,
            None => continue,
        };
        let heavy = *neighbors
            .iter()
            .max_by_key(|&&u| (g.degree(u), std::cmp::Reverse(u)))
            .expect("v has neighbors");
        let candidate = PseudoLeaf {
            vertex: v,
            leaf,
            heavy_neighbor: heavy,
            degree: neighbors.len(),
        };
        let better = match &best {
            None => true,
            Some(b) => candidate.degree > b.degree,
        };
        if better {
            best = Some(candidate);
        }
    }
    best.ok_or(GraphError::NotATree("forest has no edges"))
}
