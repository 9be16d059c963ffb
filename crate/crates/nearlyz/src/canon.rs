//! Canonical codes for free trees.
//!
//! A tree is rooted at its centroid and encoded AHU-style as a balanced
//! parenthesis sequence (1 = open, 0 = close) with child codes sorted;
//! a bicentroidal tree takes the smaller of its two rootings. Equal
//! codes are equivalent to tree isomorphism.

use std::fmt;

use crate::graph::{Graph, GraphError, VertexId};

/// Order-invariant identity of a free tree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalTreeCode(Vec<u32>);

impl CanonicalTreeCode {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for CanonicalTreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.0 {
            f.write_str(if x == 1 { "(" } else { ")" })?;
        }
        Ok(())
    }
}

/// Centroid vertices: those minimizing the largest component of the
/// forest left after their removal. A tree has one or two of them.
pub fn centroids(g: &Graph) -> Result<Vec<VertexId>, GraphError> {
    if !g.is_tree() {
        let reason = if !g.is_forest() {
            "contains a cycle"
        } else {
            "not connected"
        };
        return Err(GraphError::NotATree(reason));
    }
    let n = g.vertex_count();
    if n == 1 {
        return Ok(vec![VertexId(0)]);
    }
    let order = post_order(g, VertexId(0));
    let mut subtree = vec![1usize; n];
    for &(v, parent) in &order {
        if let Some(p) = parent {
            subtree[p.0] += subtree[v.0];
        }
    }
    let mut best = n;
    let mut out = Vec::new();
    for v in g.vertices() {
        let mut weight = n - subtree[v.0];
        for &c in g.neighbors(v) {
            if subtree[c.0] < subtree[v.0] {
                weight = weight.max(subtree[c.0]);
            }
        }
        if weight < best {
            best = weight;
            out.clear();
        }
        if weight == best {
            out.push(v);
        }
    }
    Ok(out)
}

/// Vertices in post order as `(vertex, parent)` pairs, children before
/// parents, rooted at `root`.
fn post_order(g: &Graph, root: VertexId) -> Vec<(VertexId, Option<VertexId>)> {
    let mut order = Vec::with_capacity(g.vertex_count());
    let mut stack = vec![(root, None)];
    while let Some((v, parent)) = stack.pop() {
        order.push((v, parent));
        for &c in g.neighbors(v) {
            if Some(c) != parent {
                stack.push((c, Some(v)));
            }
        }
    }
    order.reverse();
    order
}

fn rooted_code(g: &Graph, root: VertexId) -> Vec<u32> {
    let order = post_order(g, root);
    let n = g.vertex_count();
    let mut codes: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut children: Vec<Vec<Vec<u32>>> = vec![Vec::new(); n];
    for (v, parent) in order {
        let mut kids = std::mem::take(&mut children[v.0]);
        kids.sort();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(1);
        for k in kids {
            code.extend(k);
        }
        code.push(0);
        match parent {
            Some(p) => children[p.0].push(code),
            None => codes[v.0] = code,
        }
    }
    std::mem::take(&mut codes[root.0])
}

/// Canonical code of a free tree; errors unless the input is a tree.
pub fn canonical_tree_code(g: &Graph) -> Result<CanonicalTreeCode, GraphError> {
    let cs = centroids(g)?;
    let code = cs
        .iter()
        .map(|&c| rooted_code(g, c))
        .min()
        .expect("a tree has a centroid");
    Ok(CanonicalTreeCode(code))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn relabeled_paths_share_codes() {
        let p = path(4);
        let q = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(
            canonical_tree_code(&p).unwrap(),
            canonical_tree_code(&q).unwrap()
        );
    }

    #[test]
    fn path_and_claw_differ() {
        let p = path(4);
        let s = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(
            canonical_tree_code(&p).unwrap(),
            canonical_tree_code(&s).unwrap()
        );
    }

    #[test]
    fn non_trees_are_rejected() {
        let cycle = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(canonical_tree_code(&cycle).is_err());
        let forest = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(canonical_tree_code(&forest).is_err());
    }

    #[test]
    fn centroid_counts() {
        // even path: two centroids; odd path: one
        assert_eq!(centroids(&path(6)).unwrap().len(), 2);
        assert_eq!(centroids(&path(5)).unwrap().len(), 1);
        assert_eq!(centroids(&Graph::new(1)).unwrap(), vec![VertexId(0)]);
        let star = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        assert_eq!(centroids(&star).unwrap(), vec![VertexId(0)]);
    }

    #[test]
    fn code_renders_as_parens() {
        let code = canonical_tree_code(&path(3)).unwrap();
        assert_eq!(code.to_string(), "(()())");
    }
}
