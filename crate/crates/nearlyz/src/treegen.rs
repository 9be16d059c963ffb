//! Isomorphism-free enumeration of free trees.
//!
//! Trees are generated as canonical level sequences: entry `i` is the
//! depth of the `i`-th vertex in preorder. Successive rooted sequences
//! come from the Beyer-Hedetniemi successor; the free-tree filter and
//! jump of Wright, Richmond, Odlyzko and McKay keep exactly one
//! rooted representative per isomorphism class of free trees. The
//! stream is deterministic, restartable, and cheap to fast-forward, so
//! index ranges of one order can be handed to independent workers.

use thiserror::Error;

use crate::graph::Graph;

/// Largest supported order.
pub const MAX_ORDER: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeGenError {
    #[error("order {0} outside supported range 1..={MAX_ORDER}")]
    OrderOutOfRange(usize),
    #[error("index range {0}..{1} exceeds the {2} trees of this order")]
    RangeOutOfBounds(usize, usize, usize),
}

/// Beyer-Hedetniemi successor of a rooted level sequence, in place,
/// decreasing lexicographic order. `pivot` optionally forces the
/// regression point. Returns false when the sequence was the last one.
fn next_rooted(layout: &mut [usize], pivot: Option<usize>) -> bool {
    let p = match pivot {
        Some(p) => p,
        None => {
            let mut p = layout.len() - 1;
            while layout[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return false;
    }
    let mut q = p - 1;
    while layout[q] != layout[p] - 1 {
        q -= 1;
    }
    for i in p..layout.len() {
        layout[i] = layout[i - p + q];
    }
    true
}

/// Index of the root's second child in preorder, i.e. where the
/// root's first subtree ends; `len` when the root has a single child.
fn second_child_index(layout: &[usize]) -> usize {
    let mut seen_one = false;
    for (i, &level) in layout.iter().enumerate() {
        if level == 1 {
            if seen_one {
                return i;
            }
            seen_one = true;
        }
    }
    layout.len()
}

/// Leaves `candidate` alone when it already encodes a canonical free
/// tree; otherwise rewrites it to the next level sequence that does.
///
/// Viewing the sequence as the root's first subtree (`left`, levels
/// shifted down by one) and the root with the remaining subtrees
/// (`rest`), the canonical form demands that `left` not outweigh
/// `rest` in height, then size, then lexicographic order.
fn normalize_free(candidate: &mut [usize]) {
    let m = second_child_index(candidate);
    let left_height = candidate[1..m].iter().max().expect("root has a child") - 1;
    let rest_height = candidate[m..].iter().max().copied().unwrap_or(0);
    let (left_len, rest_len) = (m - 1, 1 + candidate.len() - m);
    let valid = match rest_height.cmp(&left_height) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => match left_len.cmp(&rest_len) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => {
                // left[i] = candidate[1 + i] - 1; rest[0] = 0,
                // rest[i] = candidate[m + i - 1]
                let mut le = true;
                for i in 1..left_len {
                    let (l, r) = (candidate[1 + i] - 1, candidate[m + i - 1]);
                    if l != r {
                        le = l < r;
                        break;
                    }
                }
                le
            }
        },
    };
    if valid {
        return;
    }
    let p = left_len;
    let jumped_level = candidate[p];
    assert!(next_rooted(candidate, Some(p)), "jump pivot is never the root");
    if jumped_level > 2 {
        let m = second_child_index(candidate);
        let height = candidate[1..m].iter().max().expect("root has a child") - 1;
        let start = candidate.len() - (height + 1);
        for (offset, slot) in candidate[start..].iter_mut().enumerate() {
            *slot = offset + 1;
        }
    }
}

/// Builds the tree a level sequence encodes: each vertex attaches to
/// the nearest earlier vertex one level up.
fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if layout[top] >= level {
                stack.pop();
            } else {
                edges.push((top, i));
                break;
            }
        }
        stack.push(i);
    }
    Graph::from_edges(layout.len(), edges).expect("preorder edges are simple")
}

/// Deterministic stream of canonical level sequences for one order.
/// Holds one buffer; `advance` steps it to the next canonical tree
/// without allocating.
#[derive(Debug, Clone)]
struct FreeTreeLayouts {
    layout: Vec<usize>,
    fresh: bool,
    exhausted: bool,
}

impl FreeTreeLayouts {
    fn new(n: usize) -> FreeTreeLayouts {
        // start at the path rooted at its midpoint
        let mut layout: Vec<usize> = (0..=n / 2).collect();
        layout.extend(1..(n + 1) / 2);
        FreeTreeLayouts {
            layout,
            fresh: true,
            exhausted: false,
        }
    }

    fn advance(&mut self) -> Option<&[usize]> {
        if self.exhausted {
            return None;
        }
        if self.fresh {
            self.fresh = false;
        } else if !next_rooted(&mut self.layout, None) {
            self.exhausted = true;
            return None;
        }
        normalize_free(&mut self.layout);
        Some(&self.layout)
    }
}

/// Deterministic stream of all free trees of order `n`, one per
/// isomorphism class.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    n: usize,
    layouts: Option<FreeTreeLayouts>,
    emitted_single: bool,
    remaining: Option<usize>,
}

impl FreeTrees {
    /// Moves past the next tree without building it. True on success.
    fn step(&mut self) -> bool {
        match &mut self.layouts {
            Some(layouts) => layouts.advance().is_some(),
            // order 1: the single-vertex tree, emitted once
            None => !std::mem::replace(&mut self.emitted_single, true),
        }
    }
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if let Some(0) = self.remaining {
            return None;
        }
        let item = match &mut self.layouts {
            Some(layouts) => layouts.advance().map(layout_to_graph),
            None => {
                if self.emitted_single {
                    None
                } else {
                    self.emitted_single = true;
                    Some(Graph::new(self.n))
                }
            }
        };
        if item.is_some() {
            if let Some(r) = &mut self.remaining {
                *r -= 1;
            }
        }
        item
    }
}

/// Every isomorphism class of trees on `n` vertices, exactly once, in
/// a fixed order.
pub fn enumerate_free_trees(n: usize) -> Result<FreeTrees, TreeGenError> {
    if !(1..=MAX_ORDER).contains(&n) {
        return Err(TreeGenError::OrderOutOfRange(n));
    }
    Ok(FreeTrees {
        n,
        layouts: (n >= 2).then(|| FreeTreeLayouts::new(n)),
        emitted_single: false,
        remaining: None,
    })
}

/// The contiguous slice `start..end` of the order-`n` stream.
/// Fast-forwarding advances raw level sequences and builds no graphs.
pub fn enumerate_free_trees_range(
    n: usize,
    start: usize,
    end: usize,
) -> Result<FreeTrees, TreeGenError> {
    let mut stream = enumerate_free_trees(n)?;
    if start > end {
        return Err(TreeGenError::RangeOutOfBounds(start, end, free_tree_count(n)?));
    }
    for skipped in 0..start {
        if !stream.step() {
            return Err(TreeGenError::RangeOutOfBounds(start, end, skipped));
        }
    }
    stream.remaining = Some(end - start);
    Ok(stream)
}

/// Number of free trees of order `n`, by running the generator.
pub fn free_tree_count(n: usize) -> Result<usize, TreeGenError> {
    let mut stream = enumerate_free_trees(n)?;
    let mut count = 0;
    while stream.step() {
        count += 1;
    }
    Ok(count)
}

/// Labeled tree on `len + 2` vertices from a Pruefer sequence.
pub fn prufer_to_tree(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        assert!(s < n, "sequence entry out of range");
        degree[s] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = *leaves.iter().next().expect("a leaf always remains");
        leaves.remove(&leaf);
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let mut rest = leaves.into_iter();
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((a, b));
    Graph::from_edges(n, edges).expect("pruefer edges are simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_tree_code;
    use crate::graph::VertexId;
    use std::collections::BTreeSet;

    #[test]
    fn tiny_orders() {
        for (n, expect) in [(1, 1), (2, 1), (3, 1), (4, 2), (5, 3), (6, 6), (7, 11)] {
            let trees: Vec<Graph> = enumerate_free_trees(n).unwrap().collect();
            assert_eq!(trees.len(), expect, "n = {n}");
            for t in &trees {
                assert!(t.is_tree());
                assert_eq!(t.vertex_count(), n);
            }
            let codes: BTreeSet<_> = trees
                .iter()
                .map(|t| canonical_tree_code(t).unwrap())
                .collect();
            assert_eq!(codes.len(), expect, "duplicate class at n = {n}");
        }
    }

    #[test]
    fn order_out_of_range() {
        assert!(enumerate_free_trees(0).is_err());
        assert!(enumerate_free_trees(25).is_err());
    }

    #[test]
    fn counts_up_to_twelve() {
        let expect = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(free_tree_count(i + 1).unwrap(), e, "n = {}", i + 1);
        }
    }

    #[test]
    fn slices_concatenate_to_full_stream() {
        let n = 9;
        let full: Vec<String> = enumerate_free_trees(n)
            .unwrap()
            .map(|g| crate::graph6::to_graph6(&g).unwrap())
            .collect();
        assert_eq!(full.len(), 47);
        for split in [0, 1, 10, 46, 47] {
            let mut joined: Vec<String> = enumerate_free_trees_range(n, 0, split)
                .unwrap()
                .map(|g| crate::graph6::to_graph6(&g).unwrap())
                .collect();
            joined.extend(
                enumerate_free_trees_range(n, split, 47)
                    .unwrap()
                    .map(|g| crate::graph6::to_graph6(&g).unwrap()),
            );
            assert_eq!(joined, full, "split at {split}");
        }
        assert!(enumerate_free_trees_range(n, 48, 50).is_err());
    }

    #[test]
    fn singleton_stream_for_order_one() {
        let trees: Vec<Graph> = enumerate_free_trees(1).unwrap().collect();
        assert_eq!(trees.len(), 1);
        assert_eq!(trees[0].vertex_count(), 1);
        let slice: Vec<Graph> = enumerate_free_trees_range(1, 0, 1).unwrap().collect();
        assert_eq!(slice.len(), 1);
    }

    #[test]
    fn prufer_decoding() {
        // sequence (3, 3, 3, 4) encodes the classic 6-vertex example
        let g = prufer_to_tree(&[3, 3, 3, 4]);
        assert!(g.is_tree());
        assert_eq!(g.degree(VertexId(3)), 4);
        assert_eq!(g.degree(VertexId(4)), 2);
        // empty sequence: the single edge on two vertices
        let e = prufer_to_tree(&[]);
        assert!(e.is_tree());
        assert_eq!(e.vertex_count(), 2);
    }
}
