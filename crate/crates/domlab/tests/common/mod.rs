#![allow(dead_code)]

//! Test-only oracles, independent of the library's enumeration and
//! canonization code paths.
//!
//! Free-tree classes are counted by decoding every Prufer sequence and
//! deduplicating with a from-scratch canonizer: root at the eccentricity
//! centers (found by leaf peeling, not centroid sizes) and encode the
//! tree as a balanced-parenthesis bitstring packed into a u64 ('(' = 0,
//! ')' = 1, child blocks sorted). A tree on n <= 32 vertices uses 2n bits,
//! so the code is exact, not a hash.

use std::collections::HashSet;

use domlab::graph::Graph;

const MAX_N: usize = 16;

struct Scratch {
    adj: [[u8; MAX_N]; MAX_N],
    deg: [u8; MAX_N],
}

impl Scratch {
    fn new() -> Self {
        Scratch {
            adj: [[0; MAX_N]; MAX_N],
            deg: [0; MAX_N],
        }
    }

    fn clear(&mut self, n: usize) {
        self.deg[..n].fill(0);
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u][self.deg[u] as usize] = v as u8;
        self.deg[u] += 1;
        self.adj[v][self.deg[v] as usize] = u as u8;
        self.deg[v] += 1;
    }

    fn from_graph(g: &Graph) -> Self {
        assert!(g.order() <= MAX_N, "oracle scratch supports n <= {MAX_N}");
        let mut s = Scratch::new();
        s.clear(g.order());
        for (u, v) in g.edges() {
            s.add_edge(u, v);
        }
        s
    }
}

/// `(length_in_bits, code)` of the subtree at `v` away from `parent`.
fn encode(s: &Scratch, v: usize, parent: usize) -> (u32, u64) {
    let mut blocks: [(u64, u32); MAX_N] = [(0, 0); MAX_N];
    let mut count = 0;
    for i in 0..s.deg[v] as usize {
        let w = s.adj[v][i] as usize;
        if w != parent {
            let (len, code) = encode(s, w, v);
            blocks[count] = (code << (64 - len), len);
            count += 1;
        }
    }
    blocks[..count].sort_unstable();
    let mut code = 0u64; // leading '(' contributes a 0 bit
    let mut len = 1u32;
    for &(aligned, blen) in &blocks[..count] {
        code = (code << blen) | (aligned >> (64 - blen));
        len += blen;
    }
    (len + 1, (code << 1) | 1)
}

/// The one or two eccentricity centers, by repeated leaf removal.
fn centers(s: &Scratch, n: usize) -> (usize, usize) {
    if n == 1 {
        return (0, usize::MAX);
    }
    if n == 2 {
        return (0, 1);
    }
    let mut deg = [0u8; MAX_N];
    deg[..n].copy_from_slice(&s.deg[..n]);
    let mut removed = [false; MAX_N];
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for i in 0..s.deg[v] as usize {
                let w = s.adj[v][i] as usize;
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let mut it = (0..n).filter(|&v| !removed[v]);
    let a = it.next().expect("a center exists");
    (a, it.next().unwrap_or(usize::MAX))
}

fn canon(s: &Scratch, n: usize) -> u64 {
    let (a, b) = centers(s, n);
    let ca = encode(s, a, usize::MAX).1;
    if b == usize::MAX {
        ca
    } else {
        ca.min(encode(s, b, usize::MAX).1)
    }
}

/// Canonical code of a tree given as a library graph; equal codes iff
/// isomorphic.
pub fn oracle_canon(g: &Graph) -> u64 {
    assert!(g.is_tree());
    let s = Scratch::from_graph(g);
    canon(&s, g.order())
}

fn decode_prufer(seq: &[usize], n: usize, s: &mut Scratch) {
    s.clear(n);
    let mut degree = [1u8; MAX_N];
    degree[..n].fill(1);
    for &a in seq {
        degree[a] += 1;
    }
    let mut ptr = 0usize;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &a in seq {
        s.add_edge(leaf, a);
        degree[leaf] -= 1;
        degree[a] -= 1;
        if degree[a] == 1 && a < ptr {
            leaf = a;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    let mut remaining = degree[..n].iter().enumerate().filter(|&(_, &d)| d == 1);
    let (u, _) = remaining.next().expect("two leaves remain");
    let (v, _) = remaining.next().expect("two leaves remain");
    s.add_edge(u, v);
}

/// The set of canonical codes over every labeled tree on `n` vertices,
/// i.e. one code per isomorphism class.
pub fn oracle_class_set(n: usize) -> HashSet<u64> {
    assert!((1..=MAX_N).contains(&n));
    let mut s = Scratch::new();
    s.clear(n);
    if n <= 2 {
        if n == 2 {
            s.add_edge(0, 1);
        }
        return HashSet::from([canon(&s, n)]);
    }
    let mut seen = HashSet::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        decode_prufer(&seq, n, &mut s);
        seen.insert(canon(&s, n));
        let mut i = 0;
        loop {
            if i == seq.len() {
                return seen;
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

pub fn oracle_count_classes(n: usize) -> usize {
    oracle_class_set(n).len()
}
