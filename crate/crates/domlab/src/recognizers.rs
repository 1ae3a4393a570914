//! Membership tests for the structural tree classes: stars, double stars,
//! wounded spiders, and healthy spiders, each returning a witness
//! structure when the class is recognized.

use crate::graph::{Graph, GraphError};

/// Witness of a (wounded or healthy) spider: every vertex is the head, a
/// subdivision vertex, a foot at distance two behind one, or a pendant
/// leaf adjacent to the head.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpiderStructure {
    pub head: usize,
    pub feet: Vec<usize>,
    pub subdivision_vertices: Vec<usize>,
    pub pendant_leaves: Vec<usize>,
}

fn spider_at(g: &Graph, head: usize) -> Option<SpiderStructure> {
    let mut feet = Vec::new();
    let mut subdivision_vertices = Vec::new();
    let mut pendant_leaves = Vec::new();
    for &v in g.neighbors(head) {
        match g.degree(v) {
            1 => pendant_leaves.push(v),
            2 => {
                let &foot = g.neighbors(v).iter().find(|&&w| w != head)?;
                if g.degree(foot) != 1 {
                    return None;
                }
                subdivision_vertices.push(v);
                feet.push(foot);
            }
            _ => return None,
        }
    }
    // Legs cover everything iff every vertex is within distance 2 of the
    // head; the counts say the same thing without a BFS.
    if 1 + pendant_leaves.len() + 2 * feet.len() != g.order() {
        return None;
    }
    Some(SpiderStructure {
        head,
        feet,
        subdivision_vertices,
        pendant_leaves,
    })
}

/// Recognizes a wounded spider: K_{1,t} with at most t-1 edges subdivided.
/// The head must keep at least one unsubdivided pendant edge, except on
/// P2 where both vertices count as heads; on P2 and P4 the smaller
/// admissible head index is returned.
pub fn recognize_wounded_spider(g: &Graph) -> Result<Option<SpiderStructure>, GraphError> {
    if !g.is_tree() {
        return Err(GraphError::NotATree);
    }
    let is_p2 = g.order() == 2;
    for head in 0..g.order() {
        if let Some(s) = spider_at(g, head) {
            if is_p2 || !s.pendant_leaves.is_empty() {
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}

/// Recognizes a healthy spider: K_{1,t} with t >= 2 and every edge
/// subdivided, i.e. a spider with no pendant leaves and at least two legs.
pub fn recognize_healthy_spider(g: &Graph) -> Result<Option<SpiderStructure>, GraphError> {
    if !g.is_tree() {
        return Err(GraphError::NotATree);
    }
    for head in 0..g.order() {
        if let Some(s) = spider_at(g, head) {
            if s.pendant_leaves.is_empty() && s.feet.len() >= 2 {
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}

/// Recognizes a star K_{1,t} (t >= 1): one vertex adjacent to all others,
/// all of which are leaves. Returns `(center, t)`.
pub fn recognize_star(g: &Graph) -> Result<Option<(usize, usize)>, GraphError> {
    if !g.is_tree() {
        return Err(GraphError::NotATree);
    }
    let n = g.order();
    if n < 2 {
        return Ok(None);
    }
    for center in 0..n {
        if g.degree(center) == n - 1 && (0..n).all(|v| v == center || g.degree(v) == 1) {
            return Ok(Some((center, n - 1)));
        }
    }
    Ok(None)
}

/// Recognizes a double star S_{p,q}: exactly two adjacent non-leaf
/// vertices, everything else a leaf. Returns `(p, q)` with `p <= q`.
pub fn recognize_double_star(g: &Graph) -> Result<Option<(usize, usize)>, GraphError> {
    if !g.is_tree() {
        return Err(GraphError::NotATree);
    }
    let non_leaves: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) != 1).collect();
    let [a, b] = non_leaves[..] else {
        return Ok(None);
    };
    if !g.has_edge(a, b) {
        return Ok(None);
    }
    let p = g.degree(a) - 1;
    let q = g.degree(b) - 1;
    Ok(Some((p.min(q), p.max(q))))
}
