//! Exhaustive enumeration of non-isomorphic free trees.
//!
//! Rooted trees are generated as canonical level sequences (lexicographic
//! successor rule, path first, star last); a rooted representative is kept
//! iff its sequence equals the canonical form of its underlying free tree,
//! which roots at a centroid and takes the lexicographically largest
//! sequence. Every isomorphism class therefore appears exactly once, in a
//! deterministic order. Correctness is anchored by an independent
//! Prufer-enumeration oracle in the test suite rather than trusted.

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::graph6::{parse_graph6, Graph6Error};

/// Default order cap for the builtin enumerator.
pub const TREE_ENUM_DEFAULT_LIMIT: usize = 18;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeEnumError {
    #[error("order {n} outside the supported range 1..={limit}")]
    OutOfRange { n: usize, limit: usize },
    #[error("empty order range {lo}..={hi}")]
    EmptyRange { lo: usize, hi: usize },
}

#[derive(Debug, Error)]
pub enum TreeStreamError {
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
    #[error("line {line}: graph is not a tree")]
    NotATree { line: usize },
    #[error("line {line}: duplicate isomorphism class")]
    Duplicate { line: usize },
}

// ---------------------------------------------------------------------
// Level sequences
// ---------------------------------------------------------------------

/// Advances a canonical rooted level sequence to its successor in
/// decreasing lexicographic order; returns false after the star.
fn advance(levels: &mut [u8]) -> bool {
    let n = levels.len();
    let Some(p) = levels.iter().rposition(|&l| l > 2) else {
        return false;
    };
    let target = levels[p] - 1;
    let q = levels[..p]
        .iter()
        .rposition(|&l| l == target)
        .expect("parent level precedes child level");
    let block = p - q;
    for i in p..n {
        levels[i] = levels[i - block];
    }
    true
}

/// Builds the tree a level sequence denotes: each vertex's parent is the
/// most recent earlier vertex one level up.
fn graph_from_levels(levels: &[u8]) -> Graph {
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    let mut latest_at_level: Vec<usize> = Vec::new();
    for (i, &l) in levels.iter().enumerate() {
        let depth = l as usize;
        if depth >= 2 {
            edges.push((latest_at_level[depth - 2], i));
        }
        latest_at_level.truncate(depth - 1);
        latest_at_level.push(i);
    }
    Graph::from_edge_list(levels.len(), edges).expect("level sequence yields a tree")
}

/// Canonical level sequence of the subtree hanging at `v`, rooted so the
/// whole sequence is lexicographically largest: child blocks sorted in
/// descending order.
fn canon_rooted_from(g: &Graph, v: usize, parent: usize, depth: u8) -> Vec<u8> {
    let mut blocks: Vec<Vec<u8>> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| canon_rooted_from(g, w, v, depth + 1))
        .collect();
    blocks.sort_unstable_by(|a, b| b.cmp(a));
    let mut seq = Vec::with_capacity(1 + blocks.iter().map(Vec::len).sum::<usize>());
    seq.push(depth);
    for b in blocks {
        seq.extend(b);
    }
    seq
}

/// The one or two centroids of a tree: vertices whose removal leaves no
/// component with more than n/2 vertices.
pub fn centroids(g: &Graph) -> Result<Vec<usize>, GraphError> {
    if !g.is_tree() {
        return Err(GraphError::NotATree);
    }
    let n = g.order();
    let t = crate::graph::root_at(g, 0)?;
    let mut size = vec![1usize; n];
    let mut max_comp = vec![0usize; n];
    for &v in t.postorder() {
        for &c in t.children(v) {
            size[v] += size[c];
            max_comp[v] = max_comp[v].max(size[c]);
        }
        max_comp[v] = max_comp[v].max(n - size[v]);
    }
    Ok((0..n).filter(|&v| max_comp[v] <= n / 2).collect())
}

/// Canonical byte string of a tree: equal iff the trees are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>, GraphError> {
    let cs = centroids(g)?;
    Ok(cs
        .into_iter()
        .map(|c| canon_rooted_from(g, c, usize::MAX, 1))
        .max()
        .expect("a tree has at least one centroid"))
}

/// The canonically relabeled copy of a tree; `to_graph6` of this graph is
/// the canonical graph6 used in census output.
pub fn canonical_graph(g: &Graph) -> Result<Graph, GraphError> {
    Ok(graph_from_levels(&canonical_form(g)?))
}

// ---------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------

/// Iterator over all non-isomorphic free trees of a fixed order, in
/// canonical level-sequence order.
pub struct FreeTreeIter {
    levels: Option<Vec<u8>>,
}

impl Iterator for FreeTreeIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let levels = self.levels.as_mut()?;
            let g = graph_from_levels(levels);
            let keep = canonical_form(&g).expect("generated graph is a tree") == *levels;
            if !advance(levels) {
                self.levels = None;
            }
            if keep {
                return Some(g);
            }
        }
    }
}

pub fn enumerate_free_trees_with_limit(
    n: usize,
    limit: usize,
) -> Result<FreeTreeIter, TreeEnumError> {
    if n < 1 || n > limit {
        return Err(TreeEnumError::OutOfRange { n, limit });
    }
    Ok(FreeTreeIter {
        levels: Some((1..=n as u8).collect()),
    })
}

/// All free trees of order `n`, `1 <= n <= 18`.
pub fn enumerate_free_trees(n: usize) -> Result<FreeTreeIter, TreeEnumError> {
    enumerate_free_trees_with_limit(n, TREE_ENUM_DEFAULT_LIMIT)
}

// ---------------------------------------------------------------------
// Prufer decoding and random trees
// ---------------------------------------------------------------------

/// Decodes a Prufer sequence over `0..len+2` into the labeled tree on
/// `len + 2` vertices it encodes.
pub fn tree_from_prufer(seq: &[usize]) -> Graph {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    let n = seq.len() + 2;
    let mut degree = vec![1u32; n];
    for &a in seq {
        assert!(a < n, "Prufer entry {a} out of range for n = {n}");
        degree[a] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    for &a in seq {
        let u = leaves.pop().expect("a leaf always remains").0;
        edges.push((u, a));
        degree[a] -= 1;
        if degree[a] == 1 {
            leaves.push(Reverse(a));
        }
    }
    let u = leaves.pop().expect("two vertices remain").0;
    let v = leaves.pop().expect("two vertices remain").0;
    edges.push((u, v));
    Graph::from_edge_list(n, edges).expect("Prufer decode yields a tree")
}

/// Uniform random labeled tree on `n` vertices via a random Prufer
/// sequence.
pub fn random_tree<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 1);
    match n {
        1 => Graph::from_edge_list(1, []).unwrap(),
        2 => Graph::from_edge_list(2, [(0, 1)]).unwrap(),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            tree_from_prufer(&seq)
        }
    }
}

// ---------------------------------------------------------------------
// External tree streams
// ---------------------------------------------------------------------

/// Parses a graph6 file into trees, validating tree-ness and rejecting
/// duplicate isomorphism classes. A leading `>>graph6<<` marker is
/// tolerated.
pub fn load_graph6_trees(text: &str) -> Result<Vec<Graph>, TreeStreamError> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim().trim_start_matches(">>graph6<<");
        if line.is_empty() {
            continue;
        }
        let line_no = i + 1;
        let g = parse_graph6(line).map_err(|source| TreeStreamError::Parse {
            line: line_no,
            source,
        })?;
        if !g.is_tree() {
            return Err(TreeStreamError::NotATree { line: line_no });
        }
        let form = canonical_form(&g).expect("tree-ness checked");
        if !seen.insert(form) {
            return Err(TreeStreamError::Duplicate { line: line_no });
        }
        out.push(g);
    }
    Ok(out)
}
