//! Undirected simple graphs with dense vertex indices `0..n-1`, plus the
//! structural queries (leaves, supports, diameter, tree tests) and the
//! rooted orientation used by the tree dynamic programs.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("operation undefined on the one-vertex graph")]
    TrivialGraph,
}

/// An undirected simple graph stored as sorted adjacency lists.
///
/// Invariants (enforced by every constructor): adjacency is symmetric,
/// neighbor lists are sorted and duplicate-free, and there are no
/// self-loops. Graphs are immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed;
    /// out-of-range endpoints and self-loops are rejected.
    pub fn from_edge_list(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Iterates edges as pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// BFS distances from `src`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    /// A tree is an acyclic connected graph: connected with `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.edge_count() == self.order() - 1 && self.is_connected()
    }

    /// Maximum over vertex pairs of the shortest-path edge count.
    pub fn diameter(&self) -> Result<usize, GraphError> {
        let mut best = 0;
        for v in 0..self.order() {
            let dist = self.bfs_distances(v);
            for &d in &dist {
                if d == usize::MAX {
                    return Err(GraphError::Disconnected);
                }
                best = best.max(d);
            }
        }
        Ok(best)
    }

    /// Replaces the edge `(u, v)` by a length-2 path through a new vertex
    /// appended at index `n`; existing indices are untouched.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let n = self.order();
        let mut adj = self.adj.clone();
        adj[u].retain(|&w| w != v);
        adj[v].retain(|&w| w != u);
        adj[u].push(n);
        adj[v].push(n);
        adj[u].sort_unstable();
        adj[v].sort_unstable();
        adj.push(vec![u.min(v), u.max(v)]);
        Ok(Graph { adj })
    }

    /// Checks the representation invariants; used by tests on every
    /// constructed graph.
    pub fn validate(&self) -> Result<(), GraphError> {
        let n = self.order();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        for (u, list) in self.adj.iter().enumerate() {
            for window in list.windows(2) {
                if window[0] >= window[1] {
                    return Err(GraphError::NotAnEdge(u, window[1]));
                }
            }
            for &v in list {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: v,
                        order: n,
                    });
                }
                if v == u {
                    return Err(GraphError::SelfLoop(u));
                }
                if !self.has_edge(v, u) {
                    return Err(GraphError::NotAnEdge(u, v));
                }
            }
        }
        Ok(())
    }
}

/// Leaf / support / strong-support classification of a non-trivial graph.
///
/// A leaf has degree one, a support vertex is adjacent to a leaf, and a
/// strong support vertex has two or more leaf neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexRoles {
    pub leaves: Vec<usize>,
    pub supports: Vec<usize>,
    pub strong_supports: Vec<usize>,
}

impl VertexRoles {
    pub fn is_leaf(&self, v: usize) -> bool {
        self.leaves.binary_search(&v).is_ok()
    }

    pub fn is_support(&self, v: usize) -> bool {
        self.supports.binary_search(&v).is_ok()
    }

    pub fn is_strong_support(&self, v: usize) -> bool {
        self.strong_supports.binary_search(&v).is_ok()
    }
}

/// Computes leaves, supports, and strong supports. Rejects the one-vertex
/// graph, where the roles are undefined.
pub fn classify_vertices(g: &Graph) -> Result<VertexRoles, GraphError> {
    let n = g.order();
    if n < 2 {
        return Err(GraphError::TrivialGraph);
    }
    let leaves: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    let mut leaf_neighbors = vec![0usize; n];
    for &leaf in &leaves {
        leaf_neighbors[g.neighbors(leaf)[0]] += 1;
    }
    let supports: Vec<usize> = (0..n).filter(|&v| leaf_neighbors[v] >= 1).collect();
    let strong_supports: Vec<usize> = (0..n).filter(|&v| leaf_neighbors[v] >= 2).collect();
    Ok(VertexRoles {
        leaves,
        supports,
        strong_supports,
    })
}

/// A tree with a chosen root and the parent/children orientation plus a
/// postorder, as consumed by the tree dynamic programs.
#[derive(Debug, Clone)]
pub struct RootedTree {
    graph: Graph,
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    postorder: Vec<usize>,
}

impl RootedTree {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Visits every child before its parent; the last vertex is the root.
    pub fn postorder(&self) -> &[usize] {
        &self.postorder
    }
}

/// Orients a tree away from root `r` (BFS) and records a postorder.
pub fn root_at(g: &Graph, r: usize) -> Result<RootedTree, GraphError> {
    let n = g.order();
    if r >= n {
        return Err(GraphError::VertexOutOfRange {
            vertex: r,
            order: n,
        });
    }
    if !g.is_tree() {
        return Err(GraphError::NotATree);
    }
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    seen[r] = true;
    queue.push_back(r);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = Some(u);
                children[u].push(v);
                queue.push_back(v);
            }
        }
    }
    let mut postorder = order;
    postorder.reverse();
    Ok(RootedTree {
        graph: g.clone(),
        root: r,
        parent,
        children,
        postorder,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    #[test]
    fn from_edge_list_builds_p2() {
        let g = Graph::from_edge_list(2, [(0, 1)]).unwrap();
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 1);
        g.validate().unwrap();
    }

    #[test]
    fn from_edge_list_p4_has_diameter_3() {
        let g = path(4);
        assert_eq!(g.diameter().unwrap(), 3);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(3, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree(2), 0);
        g.validate().unwrap();
    }

    #[test]
    fn rejects_self_loops_and_bad_indices() {
        assert_eq!(
            Graph::from_edge_list(3, [(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            Graph::from_edge_list(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
    }

    #[test]
    fn tree_tests() {
        assert!(path(4).is_tree());
        assert!(Graph::from_edge_list(1, []).unwrap().is_tree());
        let c4 = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!c4.is_tree());
        let disconnected = Graph::from_edge_list(3, [(0, 1)]).unwrap();
        assert!(!disconnected.is_tree());
        assert_eq!(disconnected.diameter(), Err(GraphError::Disconnected));
    }

    #[test]
    fn diameter_of_paths() {
        for n in 2..=10 {
            assert_eq!(path(n).diameter().unwrap(), n - 1);
        }
    }

    #[test]
    fn classify_star_and_path() {
        // K_{1,3}: center 0.
        let star = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let roles = classify_vertices(&star).unwrap();
        assert_eq!(roles.leaves, vec![1, 2, 3]);
        assert_eq!(roles.supports, vec![0]);
        assert_eq!(roles.strong_supports, vec![0]);

        let roles = classify_vertices(&path(4)).unwrap();
        assert_eq!(roles.leaves, vec![0, 3]);
        assert_eq!(roles.supports, vec![1, 2]);
        assert!(roles.strong_supports.is_empty());

        let k1 = Graph::from_edge_list(1, []).unwrap();
        assert_eq!(classify_vertices(&k1), Err(GraphError::TrivialGraph));
    }

    #[test]
    fn role_invariants_hold() {
        let g = Graph::from_edge_list(7, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6)]).unwrap();
        let roles = classify_vertices(&g).unwrap();
        for &s in &roles.strong_supports {
            assert!(roles.is_support(s));
        }
        for &leaf in &roles.leaves {
            assert!(roles.is_support(g.neighbors(leaf)[0]));
        }
    }

    #[test]
    fn subdivide_p2_gives_p3() {
        let g = Graph::from_edge_list(2, [(0, 1)]).unwrap();
        let h = g.subdivide_edge(0, 1).unwrap();
        assert_eq!(h.order(), 3);
        assert!(h.has_edge(0, 2) && h.has_edge(1, 2) && !h.has_edge(0, 1));
        assert_eq!(h.diameter().unwrap(), 2);
        assert_eq!(g.subdivide_edge(1, 0).unwrap(), h);
        assert_eq!(g.subdivide_edge(0, 0), Err(GraphError::NotAnEdge(0, 0)));
    }

    #[test]
    fn subdivided_star_edge_gives_p4() {
        // K_{1,2} with one edge subdivided is P4.
        let star = Graph::from_edge_list(3, [(0, 1), (0, 2)]).unwrap();
        let h = star.subdivide_edge(0, 1).unwrap();
        assert!(h.is_tree());
        assert_eq!(h.diameter().unwrap(), 3);
    }

    #[test]
    fn root_at_orients_consistently() {
        let g = path(3);
        let t = root_at(&g, 0).unwrap();
        assert_eq!(t.parent(0), None);
        assert_eq!(t.parent(1), Some(0));
        assert_eq!(t.parent(2), Some(1));
        assert_eq!(t.postorder().last(), Some(&0));

        let star = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let t = root_at(&star, 0).unwrap();
        assert_eq!(t.children(0), &[1, 2, 3]);

        let c4 = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(root_at(&c4, 0).is_err());
    }
}
