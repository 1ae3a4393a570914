//! Brute-force solvers. These are the independent oracles the tree
//! dynamic programs are verified against, so they stay definition-literal:
//! the search enumerates assignments in vertex-index order and checks each
//! vertex's clause exactly once its closed neighborhood is fully decided.
//!
//! Enumerating in index order with labels ascending means the first
//! optimum encountered is the lexicographically smallest one, which the
//! pruning never discards: a prefix is cut only when its weight already
//! matches the incumbent or a decided vertex is violated.

use crate::graph::Graph;
use crate::labelings::Labeling;
use crate::solvers::{
    SolveError, SolveResult, Witness, GAMMA_BRUTEFORCE_DEFAULT_LIMIT,
    LABELING_BRUTEFORCE_DEFAULT_LIMIT,
};

fn check_preconditions(g: &Graph, limit: usize) -> Result<(), SolveError> {
    if g.order() > limit {
        return Err(SolveError::LimitExceeded {
            order: g.order(),
            limit,
        });
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    Ok(())
}

/// For each index `i`, the vertices whose closed neighborhood is fully
/// decided once vertices `0..=i` are assigned.
fn finalized_at(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = vec![Vec::new(); n];
    for u in 0..n {
        let last = g.neighbors(u).iter().copied().chain([u]).max().unwrap();
        out[last].push(u);
    }
    out
}

// ---------------------------------------------------------------------
// Domination number
// ---------------------------------------------------------------------

struct SetSearch<'a> {
    g: &'a Graph,
    finalized: Vec<Vec<usize>>,
    cover: Vec<u32>,
    chosen: Vec<bool>,
}

impl SetSearch<'_> {
    fn finalized_ok(&self, i: usize) -> bool {
        self.finalized[i].iter().all(|&u| self.cover[u] > 0)
    }

    /// Depth-first over vertices in index order, exclusion branch first,
    /// so the first dominating set found has the lexicographically
    /// smallest 0/1 indicator vector among sets of size <= `picks_left`.
    /// Every vertex is finalized at some index, so reaching the end means
    /// full coverage.
    fn dfs(&mut self, i: usize, picks_left: usize) -> bool {
        if i == self.g.order() {
            return true;
        }
        // exclude i
        if self.finalized_ok(i) && self.dfs(i + 1, picks_left) {
            return true;
        }
        // include i
        if picks_left > 0 {
            self.apply(i, true);
            if self.finalized_ok(i) && self.dfs(i + 1, picks_left - 1) {
                return true;
            }
            self.apply(i, false);
        }
        false
    }

    fn apply(&mut self, i: usize, on: bool) {
        let delta: i64 = if on { 1 } else { -1 };
        self.chosen[i] = on;
        self.cover[i] = (self.cover[i] as i64 + delta) as u32;
        for &v in self.g.neighbors(i) {
            self.cover[v] = (self.cover[v] as i64 + delta) as u32;
        }
    }
}

/// Minimum dominating set by iterative deepening over the set size, with
/// subset enumeration kept feasible by closed-neighborhood pruning.
pub fn gamma_bruteforce_with_limit(g: &Graph, limit: usize) -> Result<SolveResult, SolveError> {
    check_preconditions(g, limit)?;
    let n = g.order();
    let mut search = SetSearch {
        g,
        finalized: finalized_at(g),
        cover: vec![0; n],
        chosen: vec![false; n],
    };
    for k in 1..=n {
        if search.dfs(0, k) {
            let set: Vec<usize> = (0..n).filter(|&v| search.chosen[v]).collect();
            return Ok(SolveResult {
                value: set.len() as u32,
                witness: Witness::DominatingSet(set),
            });
        }
    }
    unreachable!("the full vertex set always dominates")
}

pub fn gamma_bruteforce(g: &Graph) -> Result<SolveResult, SolveError> {
    gamma_bruteforce_with_limit(g, GAMMA_BRUTEFORCE_DEFAULT_LIMIT)
}

// ---------------------------------------------------------------------
// Labeling minima (DIDF / DRDF)
// ---------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum LabelRule {
    Didf,
    Drdf,
}

impl LabelRule {
    fn satisfied(self, g: &Graph, labels: &[u8], u: usize) -> bool {
        let own = labels[u];
        if own >= 2 {
            return true;
        }
        match self {
            LabelRule::Didf => {
                let sum: u32 = own as u32
                    + g.neighbors(u)
                        .iter()
                        .map(|&v| labels[v] as u32)
                        .sum::<u32>();
                sum >= 3
            }
            LabelRule::Drdf => {
                let mut twos = 0;
                for &v in g.neighbors(u) {
                    match labels[v] {
                        3 => return true,
                        2 => twos += 1,
                        _ => {}
                    }
                }
                if own == 0 {
                    twos >= 2
                } else {
                    twos >= 1
                }
            }
        }
    }
}

struct LabelSearch<'a> {
    g: &'a Graph,
    rule: LabelRule,
    allowed: &'a [u8],
    finalized: Vec<Vec<usize>>,
    labels: Vec<u8>,
    best: u32,
    best_labels: Vec<u8>,
}

impl LabelSearch<'_> {
    fn dfs(&mut self, i: usize, weight: u32) {
        if i == self.g.order() {
            // weight < self.best is guaranteed by the assignment-time prune.
            self.best = weight;
            self.best_labels.copy_from_slice(&self.labels);
            return;
        }
        for idx in 0..self.allowed.len() {
            let lab = self.allowed[idx];
            let w = weight + lab as u32;
            if w >= self.best {
                // Labels ascend, so every later choice is at least as heavy.
                break;
            }
            self.labels[i] = lab;
            let ok = self.finalized[i]
                .iter()
                .all(|&u| self.rule.satisfied(self.g, &self.labels, u));
            if ok {
                self.dfs(i + 1, w);
            }
        }
    }
}

fn labeling_bruteforce(
    g: &Graph,
    rule: LabelRule,
    allowed: &[u8],
    limit: usize,
) -> Result<SolveResult, SolveError> {
    check_preconditions(g, limit)?;
    let n = g.order();
    let mut search = LabelSearch {
        g,
        rule,
        allowed,
        finalized: finalized_at(g),
        labels: vec![0; n],
        // The all-2 labeling is valid for both rules, so the optimum is at
        // most 2n and the search below is guaranteed to land on it.
        best: 2 * n as u32 + 1,
        best_labels: vec![0; n],
    };
    search.dfs(0, 0);
    debug_assert!(search.best <= 2 * n as u32);
    let labeling = Labeling::new(search.best_labels).expect("labels in range");
    Ok(SolveResult {
        value: search.best,
        witness: Witness::Labeling(labeling),
    })
}

/// Minimum-weight double Italian dominating function by branch and bound.
pub fn didf_bruteforce_with_limit(g: &Graph, limit: usize) -> Result<SolveResult, SolveError> {
    labeling_bruteforce(g, LabelRule::Didf, &[0, 1, 2, 3], limit)
}

pub fn didf_bruteforce(g: &Graph) -> Result<SolveResult, SolveError> {
    didf_bruteforce_with_limit(g, LABELING_BRUTEFORCE_DEFAULT_LIMIT)
}

/// Minimum-weight double Roman dominating function by branch and bound.
pub fn drdf_bruteforce_with_limit(g: &Graph, limit: usize) -> Result<SolveResult, SolveError> {
    labeling_bruteforce(g, LabelRule::Drdf, &[0, 1, 2, 3], limit)
}

pub fn drdf_bruteforce(g: &Graph) -> Result<SolveResult, SolveError> {
    drdf_bruteforce_with_limit(g, LABELING_BRUTEFORCE_DEFAULT_LIMIT)
}

/// Minimum DRDF weight over labelings restricted to {0,2,3}.
pub fn drdf_bruteforce_no_ones_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<SolveResult, SolveError> {
    labeling_bruteforce(g, LabelRule::Drdf, &[0, 2, 3], limit)
}

pub fn drdf_bruteforce_no_ones(g: &Graph) -> Result<SolveResult, SolveError> {
    drdf_bruteforce_no_ones_with_limit(g, LABELING_BRUTEFORCE_DEFAULT_LIMIT)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, t1, FamilySpec};
    use crate::labelings::{is_didf, is_dominating_set, is_drdf};

    fn star(t: usize) -> Graph {
        generate(FamilySpec::Star { t }).unwrap().graph
    }

    fn double_star(p: usize, q: usize) -> Graph {
        generate(FamilySpec::DoubleStar { p, q }).unwrap().graph
    }

    fn path(n: usize) -> Graph {
        generate(FamilySpec::Path { n }).unwrap().graph
    }

    #[test]
    fn gamma_of_stars_and_double_stars() {
        assert_eq!(gamma_bruteforce(&star(4)).unwrap().value, 1);
        for (p, q) in [(1, 1), (1, 3), (2, 2), (2, 3)] {
            assert_eq!(gamma_bruteforce(&double_star(p, q)).unwrap().value, 2);
        }
    }

    #[test]
    fn gamma_of_t1_is_4() {
        let res = gamma_bruteforce(&t1().graph).unwrap();
        assert_eq!(res.value, 4);
        let set = res.witness.as_dominating_set().unwrap();
        assert_eq!(set.len(), 4);
        assert!(is_dominating_set(&t1().graph, set));
    }

    #[test]
    fn didf_values() {
        let t = t1();
        assert_eq!(didf_bruteforce(&t.graph).unwrap().value, 10);
        assert_eq!(didf_bruteforce(&star(3)).unwrap().value, 3);
        assert_eq!(didf_bruteforce(&double_star(2, 3)).unwrap().value, 6);
        let k1 = Graph::from_edge_list(1, []).unwrap();
        assert_eq!(didf_bruteforce(&k1).unwrap().value, 2);
    }

    #[test]
    fn drdf_values() {
        let t = t1();
        assert_eq!(drdf_bruteforce(&t.graph).unwrap().value, 11);
        assert_eq!(drdf_bruteforce(&path(2)).unwrap().value, 3);
        for q in 1..=3 {
            assert_eq!(drdf_bruteforce(&double_star(1, q)).unwrap().value, 5);
        }
    }

    #[test]
    fn witnesses_pass_their_checkers() {
        for g in [t1().graph, star(4), path(5), double_star(2, 2)] {
            let didf = didf_bruteforce(&g).unwrap();
            let f = didf.witness.as_labeling().unwrap();
            assert!(is_didf(&g, f));
            assert_eq!(f.weight(), didf.value);

            let drdf = drdf_bruteforce(&g).unwrap();
            let f = drdf.witness.as_labeling().unwrap();
            assert!(is_drdf(&g, f));
            assert_eq!(f.weight(), drdf.value);

            let restricted = drdf_bruteforce_no_ones(&g).unwrap();
            let f = restricted.witness.as_labeling().unwrap();
            assert!(is_drdf(&g, f));
            assert!(f.values().iter().all(|&x| x != 1));
            assert_eq!(restricted.value, drdf.value);
        }
    }

    #[test]
    fn drdf_witness_is_also_a_didf() {
        let g = t1().graph;
        let res = drdf_bruteforce(&g).unwrap();
        assert!(is_didf(&g, res.witness.as_labeling().unwrap()));
    }

    #[test]
    fn limits_and_connectivity_are_enforced() {
        let big = path(15);
        assert_eq!(
            didf_bruteforce(&big),
            Err(SolveError::LimitExceeded {
                order: 15,
                limit: 14
            })
        );
        assert!(didf_bruteforce_with_limit(&big, 15).is_ok());
        let disconnected = Graph::from_edge_list(3, [(0, 1)]).unwrap();
        assert_eq!(
            gamma_bruteforce(&disconnected),
            Err(SolveError::Disconnected)
        );
    }

    #[test]
    fn cycle_c4_values() {
        // Brute force also covers non-trees. (2,0,2,0) is a valid DRDF
        // (hence DIDF) of weight 4 on C4, and no weight-3 assignment
        // satisfies either rule, so both parameters equal 4.
        let c4 = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(gamma_bruteforce(&c4).unwrap().value, 2);
        assert_eq!(didf_bruteforce(&c4).unwrap().value, 4);
        assert_eq!(drdf_bruteforce(&c4).unwrap().value, 4);
    }
}
