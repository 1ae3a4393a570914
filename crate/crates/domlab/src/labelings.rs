//! Labelings `V -> {0,1,2,3}` and the definition-literal decision
//! procedures for dominating sets, double Italian dominating functions
//! (DIDF), and double Roman dominating functions (DRDF).
//!
//! The checkers here are the ground truth every solver is tested against;
//! they apply the definitions directly, with no normalization.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelingError {
    #[error("label {label} at vertex {vertex} is outside 0..=3")]
    LabelOutOfRange { vertex: usize, label: u8 },
    #[error("labeling has {got} entries but the graph has {expected} vertices")]
    LengthMismatch { got: usize, expected: usize },
    #[error("labeling CSV line {line}: {reason}: `{got}`")]
    Csv {
        line: usize,
        reason: &'static str,
        got: String,
    },
    #[error("vertex {0} assigned more than once")]
    DuplicateVertex(usize),
    #[error("vertex {0} missing from labeling")]
    MissingVertex(usize),
}

/// A total map vertex -> {0,1,2,3}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    values: Vec<u8>,
}

impl Labeling {
    pub fn new(values: Vec<u8>) -> Result<Self, LabelingError> {
        if let Some(vertex) = values.iter().position(|&x| x > 3) {
            return Err(LabelingError::LabelOutOfRange {
                vertex,
                label: values[vertex],
            });
        }
        Ok(Labeling { values })
    }

    /// All-`value` labeling on `n` vertices; `value` must be in `0..=3`.
    pub fn constant(n: usize, value: u8) -> Self {
        assert!(value <= 3);
        Labeling {
            values: vec![value; n],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, v: usize) -> u8 {
        self.values[v]
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// Total weight, the sum of all labels.
    pub fn weight(&self) -> u32 {
        self.values.iter().map(|&x| x as u32).sum()
    }

    /// The induced partition class `V_i`.
    pub fn class(&self, i: u8) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.values[v] == i).collect()
    }

    pub(crate) fn set(&mut self, v: usize, value: u8) {
        debug_assert!(value <= 3);
        self.values[v] = value;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// A 0-labeled vertex whose condition fails.
    UncoveredZero,
    /// A 1-labeled vertex whose condition fails.
    UncoveredOne,
}

/// What the failing vertex actually achieved, for actionable reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationDetail {
    /// DIDF clause: the achieved closed-neighborhood label sum.
    ClosedNeighborhoodSum(u32),
    /// DRDF clauses: how many neighbors carry label 2 and label 3.
    NeighborCounts { twos: usize, threes: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub vertex: usize,
    pub kind: ViolationKind,
    pub detail: ViolationDetail,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let clause = match self.kind {
            ViolationKind::UncoveredZero => "0-vertex",
            ViolationKind::UncoveredOne => "1-vertex",
        };
        match self.detail {
            ViolationDetail::ClosedNeighborhoodSum(s) => {
                write!(
                    f,
                    "{clause} {} has closed-neighborhood sum {s} < 3",
                    self.vertex
                )
            }
            ViolationDetail::NeighborCounts { twos, threes } => {
                write!(
                    f,
                    "{clause} {} sees only {twos} two(s) and {threes} three(s)",
                    self.vertex
                )
            }
        }
    }
}

/// True iff every vertex is in `s` or adjacent to a vertex of `s`.
pub fn is_dominating_set(g: &Graph, s: &[usize]) -> bool {
    let n = g.order();
    let mut covered = vec![false; n];
    for &v in s {
        assert!(v < n, "dominating-set member {v} out of range");
        covered[v] = true;
        for &u in g.neighbors(v) {
            covered[u] = true;
        }
    }
    covered.into_iter().all(|c| c)
}

fn assert_sized(g: &Graph, f: &Labeling) {
    assert!(
        f.len() == g.order(),
        "labeling has {} entries for a graph of order {}",
        f.len(),
        g.order()
    );
}

fn closed_sum(g: &Graph, f: &Labeling, u: usize) -> u32 {
    f.value(u) as u32
        + g.neighbors(u)
            .iter()
            .map(|&v| f.value(v) as u32)
            .sum::<u32>()
}

/// DIDF condition: every vertex labeled 0 or 1 has closed-neighborhood
/// label sum at least 3.
pub fn is_didf(g: &Graph, f: &Labeling) -> bool {
    assert_sized(g, f);
    (0..g.order()).all(|u| f.value(u) >= 2 || closed_sum(g, f, u) >= 3)
}

pub fn violations_didf(g: &Graph, f: &Labeling) -> Vec<Violation> {
    assert_sized(g, f);
    let mut out = Vec::new();
    for u in 0..g.order() {
        if f.value(u) >= 2 {
            continue;
        }
        let sum = closed_sum(g, f, u);
        if sum < 3 {
            let kind = if f.value(u) == 0 {
                ViolationKind::UncoveredZero
            } else {
                ViolationKind::UncoveredOne
            };
            out.push(Violation {
                vertex: u,
                kind,
                detail: ViolationDetail::ClosedNeighborhoodSum(sum),
            });
        }
    }
    out
}

fn neighbor_counts(g: &Graph, f: &Labeling, u: usize) -> (usize, usize) {
    let twos = g.neighbors(u).iter().filter(|&&v| f.value(v) == 2).count();
    let threes = g.neighbors(u).iter().filter(|&&v| f.value(v) == 3).count();
    (twos, threes)
}

/// DRDF conditions: a 0-vertex needs two neighbors in V2 or one in V3; a
/// 1-vertex needs a neighbor in V2 or V3.
pub fn is_drdf(g: &Graph, f: &Labeling) -> bool {
    assert_sized(g, f);
    (0..g.order()).all(|u| {
        let (twos, threes) = match f.value(u) {
            0 | 1 => neighbor_counts(g, f, u),
            _ => return true,
        };
        match f.value(u) {
            0 => threes >= 1 || twos >= 2,
            _ => threes >= 1 || twos >= 1,
        }
    })
}

pub fn violations_drdf(g: &Graph, f: &Labeling) -> Vec<Violation> {
    assert_sized(g, f);
    let mut out = Vec::new();
    for u in 0..g.order() {
        if f.value(u) >= 2 {
            continue;
        }
        let (twos, threes) = neighbor_counts(g, f, u);
        let (kind, ok) = if f.value(u) == 0 {
            (ViolationKind::UncoveredZero, threes >= 1 || twos >= 2)
        } else {
            (ViolationKind::UncoveredOne, threes >= 1 || twos >= 1)
        };
        if !ok {
            out.push(Violation {
                vertex: u,
                kind,
                detail: ViolationDetail::NeighborCounts { twos, threes },
            });
        }
    }
    out
}

/// Parses `vertex,value` CSV rows into a labeling on `n` vertices. An
/// optional `vertex,value` header, blank lines, and `#` comments are
/// accepted; every vertex must appear exactly once.
pub fn parse_labeling_csv(text: &str, n: usize) -> Result<Labeling, LabelingError> {
    let mut values: Vec<Option<u8>> = vec![None; n];
    let mut first_content = true;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split(',').map(str::trim);
        let (a, b) = (fields.next().unwrap_or(""), fields.next().unwrap_or(""));
        if fields.next().is_some() {
            return Err(LabelingError::Csv {
                line: line_no,
                reason: "expected two fields",
                got: raw.to_owned(),
            });
        }
        let is_header =
            first_content && a.eq_ignore_ascii_case("vertex") && b.eq_ignore_ascii_case("value");
        first_content = false;
        if is_header {
            continue;
        }
        let vertex: usize = a.parse().map_err(|_| LabelingError::Csv {
            line: line_no,
            reason: "bad vertex index",
            got: raw.to_owned(),
        })?;
        let value: u8 = b.parse().map_err(|_| LabelingError::Csv {
            line: line_no,
            reason: "bad label value",
            got: raw.to_owned(),
        })?;
        if vertex >= n {
            return Err(LabelingError::Csv {
                line: line_no,
                reason: "vertex out of range",
                got: raw.to_owned(),
            });
        }
        if value > 3 {
            return Err(LabelingError::LabelOutOfRange {
                vertex,
                label: value,
            });
        }
        if values[vertex].is_some() {
            return Err(LabelingError::DuplicateVertex(vertex));
        }
        values[vertex] = Some(value);
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(v, x)| x.ok_or(LabelingError::MissingVertex(v)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Labeling { values })
}

pub fn labeling_to_csv(f: &Labeling) -> String {
    let mut out = String::from("vertex,value\n");
    for (v, &x) in f.values().iter().enumerate() {
        out.push_str(&format!("{v},{x}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    fn star(t: usize) -> Graph {
        Graph::from_edge_list(t + 1, (1..=t).map(|v| (0, v))).unwrap()
    }

    #[test]
    fn dominating_set_examples() {
        assert!(is_dominating_set(&star(4), &[0]));
        assert!(!is_dominating_set(&path(4), &[0]));
        assert!(is_dominating_set(&path(4), &[1, 2]));
    }

    #[test]
    fn spider_feet_plus_head_dominate() {
        use crate::families::{generate, FamilyRoles, FamilySpec};
        for t in 2..=5 {
            for s in 1..t {
                let gen = generate(FamilySpec::WoundedSpider { t, s }).unwrap();
                let FamilyRoles::Spider {
                    heads, mut feet, ..
                } = gen.roles
                else {
                    unreachable!()
                };
                feet.push(heads[0]);
                assert!(is_dominating_set(&gen.graph, &feet), "({t},{s})");
            }
        }
    }

    #[test]
    fn all_zero_p2_fails_didf_with_two_violations() {
        let g = path(2);
        let f = Labeling::constant(2, 0);
        assert!(!is_didf(&g, &f));
        let v = violations_didf(&g, &f);
        assert_eq!(v.len(), 2);
        assert!(v.iter().all(|x| x.kind == ViolationKind::UncoveredZero));
        assert!(v
            .iter()
            .all(|x| x.detail == ViolationDetail::ClosedNeighborhoodSum(0)));
    }

    #[test]
    fn all_three_labeling_is_always_valid() {
        for g in [path(5), star(3)] {
            let f = Labeling::constant(g.order(), 3);
            assert!(is_didf(&g, &f));
            assert!(is_drdf(&g, &f));
        }
    }

    #[test]
    fn drdf_zero_clause_counts_neighbors_not_sums() {
        // Center 0 with two 2-labeled leaves: 0-vertex at center is fine
        // for DRDF (two 2-neighbors) and DIDF (sum 4).
        let g = star(2);
        let f = Labeling::new(vec![0, 2, 2]).unwrap();
        assert!(is_drdf(&g, &f));
        assert!(is_didf(&g, &f));
        // One 2-neighbor only: DIDF needs sum 3, DRDF needs a pair.
        let g = path(2);
        let f = Labeling::new(vec![0, 2]).unwrap();
        assert!(!is_drdf(&g, &f));
        assert!(!is_didf(&g, &f));
        let v = violations_drdf(&g, &f);
        assert_eq!(v.len(), 1);
        assert_eq!(
            v[0].detail,
            ViolationDetail::NeighborCounts { twos: 1, threes: 0 }
        );
    }

    #[test]
    fn violations_empty_iff_valid() {
        let g = star(3);
        for values in [vec![3, 0, 0, 0], vec![0, 1, 1, 1], vec![2, 1, 0, 0]] {
            let f = Labeling::new(values).unwrap();
            assert_eq!(is_didf(&g, &f), violations_didf(&g, &f).is_empty());
            assert_eq!(is_drdf(&g, &f), violations_drdf(&g, &f).is_empty());
        }
    }

    #[test]
    fn weight_10_didf_on_t1_is_not_a_drdf() {
        // In the drawing labeling (w_i = 2, u1 = 1, u2 = 3) the vertex v1
        // is a 0-vertex with a single 2-neighbor and no 3-neighbor.
        let t = crate::families::t1();
        let f = t.didf_witness();
        assert!(is_didf(&t.graph, &f));
        assert_eq!(f.weight(), 10);
        let v = violations_drdf(&t.graph, &f);
        assert!(v.iter().any(|x| {
            x.vertex == t.v[0]
                && x.kind == ViolationKind::UncoveredZero
                && x.detail == ViolationDetail::NeighborCounts { twos: 1, threes: 0 }
        }));
    }

    #[test]
    fn labeling_csv_round_trip() {
        let f = Labeling::new(vec![2, 0, 3, 1]).unwrap();
        let text = labeling_to_csv(&f);
        assert_eq!(parse_labeling_csv(&text, 4).unwrap(), f);
        // Rows may arrive out of order, without a header.
        assert_eq!(parse_labeling_csv("1,0\n0,2\n3,1\n2,3\n", 4).unwrap(), f);
    }

    #[test]
    fn labeling_csv_header_may_follow_comments() {
        let f = parse_labeling_csv("# exported\n\nvertex,value\n0,2\n1,0\n", 2).unwrap();
        assert_eq!(f.values(), &[2, 0]);
    }

    #[test]
    fn labeling_csv_rejects_bad_rows() {
        assert!(matches!(
            parse_labeling_csv("0,4\n", 1),
            Err(LabelingError::LabelOutOfRange {
                vertex: 0,
                label: 4
            })
        ));
        assert_eq!(
            parse_labeling_csv("0,1\n0,2\n", 1),
            Err(LabelingError::DuplicateVertex(0))
        );
        assert_eq!(
            parse_labeling_csv("0,1\n", 2),
            Err(LabelingError::MissingVertex(1))
        );
        assert!(matches!(
            parse_labeling_csv("5,1\n", 2),
            Err(LabelingError::Csv { .. })
        ));
        assert!(matches!(
            parse_labeling_csv("a,b\n", 2),
            Err(LabelingError::Csv { line: 1, .. })
        ));
    }
}
