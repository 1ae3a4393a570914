//! Deterministic generators for the named tree families: paths, stars,
//! double stars, wounded and healthy spiders, and double stars with
//! subdivided pendant edges. Each generator documents its vertex layout so
//! that hand-written labelings can be expressed as literal arrays.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid {kind} parameters: {reason}")]
    InvalidParameters {
        kind: &'static str,
        reason: &'static str,
    },
    #[error("unknown family kind `{0}`")]
    UnknownKind(String),
    #[error("{kind} takes {expected} parameter(s), got {got}")]
    WrongArity {
        kind: &'static str,
        expected: usize,
        got: usize,
    },
}

fn invalid(kind: &'static str, reason: &'static str) -> FamilyError {
    FamilyError::InvalidParameters { kind, reason }
}

/// A named family instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    /// Path on `n >= 1` vertices.
    Path { n: usize },
    /// Star K_{1,t}, `t >= 1`.
    Star { t: usize },
    /// Double star S_{p,q}, `1 <= p <= q`.
    DoubleStar { p: usize, q: usize },
    /// Star K_{1,t} with `s <= t - 1` edges subdivided.
    WoundedSpider { t: usize, s: usize },
    /// Star K_{1,t} (`t >= 2`) with every edge subdivided.
    HealthySpider { t: usize },
    /// S_{p,q} (`p, q >= 2`) with all `p` pendant edges at one center and
    /// `k <= q` at the other subdivided.
    SubdividedDoubleStar { p: usize, q: usize, k: usize },
}

impl FamilySpec {
    /// Builds a spec from a CLI-style kind name and parameter list.
    pub fn from_kind_params(kind: &str, params: &[usize]) -> Result<Self, FamilyError> {
        let arity = |k: &'static str, expected: usize| {
            if params.len() == expected {
                Ok(())
            } else {
                Err(FamilyError::WrongArity {
                    kind: k,
                    expected,
                    got: params.len(),
                })
            }
        };
        let spec = match kind {
            "path" => {
                arity("path", 1)?;
                FamilySpec::Path { n: params[0] }
            }
            "star" => {
                arity("star", 1)?;
                FamilySpec::Star { t: params[0] }
            }
            "double_star" => {
                arity("double_star", 2)?;
                FamilySpec::DoubleStar {
                    p: params[0],
                    q: params[1],
                }
            }
            "wounded_spider" => {
                arity("wounded_spider", 2)?;
                FamilySpec::WoundedSpider {
                    t: params[0],
                    s: params[1],
                }
            }
            "healthy_spider" => {
                arity("healthy_spider", 1)?;
                FamilySpec::HealthySpider { t: params[0] }
            }
            "subdivided_double_star" => {
                arity("subdivided_double_star", 3)?;
                FamilySpec::SubdividedDoubleStar {
                    p: params[0],
                    q: params[1],
                    k: params[2],
                }
            }
            other => return Err(FamilyError::UnknownKind(other.to_owned())),
        };
        Ok(spec)
    }

    fn validate(self) -> Result<(), FamilyError> {
        match self {
            FamilySpec::Path { n } if n < 1 => Err(invalid("path", "n >= 1 required")),
            FamilySpec::Star { t } if t < 1 => Err(invalid("star", "t >= 1 required")),
            FamilySpec::DoubleStar { p, q } if p < 1 || p > q => {
                Err(invalid("double_star", "1 <= p <= q required"))
            }
            FamilySpec::WoundedSpider { t, s } if t < 1 || s + 1 > t => {
                Err(invalid("wounded_spider", "t >= 1 and s <= t - 1 required"))
            }
            FamilySpec::HealthySpider { t } if t < 2 => {
                Err(invalid("healthy_spider", "t >= 2 required"))
            }
            FamilySpec::SubdividedDoubleStar { p, q, k } if p < 2 || q < 2 || k > q => Err(
                invalid("subdivided_double_star", "p >= 2, q >= 2, k <= q required"),
            ),
            _ => Ok(()),
        }
    }
}

/// Role annotation attached to a generated tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyRoles {
    Path {
        endpoints: (usize, usize),
    },
    Star {
        center: usize,
        leaves: Vec<usize>,
    },
    DoubleStar {
        centers: (usize, usize),
        leaves: (Vec<usize>, Vec<usize>),
    },
    /// Wounded or healthy spider. `heads` lists every admissible head
    /// (construction head first); the remaining roles are read relative to
    /// `heads[0]`. For P2 and P4 there are two admissible heads.
    Spider {
        heads: Vec<usize>,
        feet: Vec<usize>,
        subdivision_vertices: Vec<usize>,
        pendant_leaves: Vec<usize>,
    },
    SubdividedDoubleStar {
        centers: (usize, usize),
        feet: Vec<usize>,
        subdivision_vertices: Vec<usize>,
        pendant_leaves: Vec<usize>,
    },
}

#[derive(Debug, Clone)]
pub struct GeneratedTree {
    pub graph: Graph,
    pub roles: FamilyRoles,
}

/// Generates the tree for `spec`.
///
/// Vertex layouts:
/// - path: `0 - 1 - ... - n-1`
/// - star: center 0, leaves `1..=t`
/// - double star: centers `u1 = 0`, `u2 = 1`; `u1`'s leaves `2..2+p`, then
///   `u2`'s leaves
/// - wounded spider (t, s): head 0, subdivision vertices `1..=s`, foot
///   `s + j` attached to subdivision vertex `j`, pendant leaves last
/// - healthy spider: head 0, subdivision vertices `1..=t`, feet `t+1..=2t`
/// - subdivided double star (p, q, k): centers 0 and 1; `u1`'s subdivision
///   vertices then feet, `u2`'s subdivision vertices then feet, then
///   `u2`'s pendant leaves
pub fn generate(spec: FamilySpec) -> Result<GeneratedTree, FamilyError> {
    spec.validate()?;
    let (graph, roles) = match spec {
        FamilySpec::Path { n } => {
            let graph = Graph::from_edge_list(n, (1..n).map(|v| (v - 1, v))).expect("valid path");
            (
                graph,
                FamilyRoles::Path {
                    endpoints: (0, n - 1),
                },
            )
        }
        FamilySpec::Star { t } => {
            let graph = Graph::from_edge_list(t + 1, (1..=t).map(|v| (0, v))).expect("valid star");
            (
                graph,
                FamilyRoles::Star {
                    center: 0,
                    leaves: (1..=t).collect(),
                },
            )
        }
        FamilySpec::DoubleStar { p, q } => {
            let n = p + q + 2;
            let mut edges = vec![(0, 1)];
            edges.extend((2..2 + p).map(|v| (0, v)));
            edges.extend((2 + p..n).map(|v| (1, v)));
            let graph = Graph::from_edge_list(n, edges).expect("valid double star");
            let roles = FamilyRoles::DoubleStar {
                centers: (0, 1),
                leaves: ((2..2 + p).collect(), (2 + p..n).collect()),
            };
            (graph, roles)
        }
        FamilySpec::WoundedSpider { t, s } => {
            let n = t + s + 1;
            let mut edges = Vec::with_capacity(n - 1);
            for j in 1..=s {
                edges.push((0, j));
                edges.push((j, s + j));
            }
            edges.extend((2 * s + 1..n).map(|v| (0, v)));
            let graph = Graph::from_edge_list(n, edges).expect("valid wounded spider");
            // Both vertices of P2 and both interior vertices of P4 are
            // admissible heads.
            let heads = match (t, s) {
                (1, 0) => vec![0, 1],
                (2, 1) => vec![0, 1],
                _ => vec![0],
            };
            let roles = FamilyRoles::Spider {
                heads,
                feet: (s + 1..=2 * s).collect(),
                subdivision_vertices: (1..=s).collect(),
                pendant_leaves: (2 * s + 1..n).collect(),
            };
            (graph, roles)
        }
        FamilySpec::HealthySpider { t } => {
            let n = 2 * t + 1;
            let mut edges = Vec::with_capacity(n - 1);
            for j in 1..=t {
                edges.push((0, j));
                edges.push((j, t + j));
            }
            let graph = Graph::from_edge_list(n, edges).expect("valid healthy spider");
            let roles = FamilyRoles::Spider {
                heads: vec![0],
                feet: (t + 1..=2 * t).collect(),
                subdivision_vertices: (1..=t).collect(),
                pendant_leaves: Vec::new(),
            };
            (graph, roles)
        }
        FamilySpec::SubdividedDoubleStar { p, q, k } => {
            let n = 2 + 2 * p + q + k;
            let mut edges = vec![(0, 1)];
            for j in 0..p {
                edges.push((0, 2 + j));
                edges.push((2 + j, 2 + p + j));
            }
            let base = 2 + 2 * p;
            for j in 0..k {
                edges.push((1, base + j));
                edges.push((base + j, base + k + j));
            }
            edges.extend((base + 2 * k..n).map(|v| (1, v)));
            let graph = Graph::from_edge_list(n, edges).expect("valid subdivided double star");
            let roles = FamilyRoles::SubdividedDoubleStar {
                centers: (0, 1),
                feet: (2 + p..2 + 2 * p).chain(base + k..base + 2 * k).collect(),
                subdivision_vertices: (2..2 + p).chain(base..base + k).collect(),
                pendant_leaves: (base + 2 * k..n).collect(),
            };
            (graph, roles)
        }
    };
    Ok(GeneratedTree { graph, roles })
}

/// The 9-vertex tree obtained from the double star S_{2,2} by subdividing
/// two pendant edges at `u1` and one at `u2`, with the named vertices of
/// its usual drawing: `v1..v4` are the non-center neighbors of the
/// centers, `w_i` is the leaf below `v_i` for i = 1..3, and `v4` stays a
/// leaf.
#[derive(Debug, Clone)]
pub struct T1 {
    pub graph: Graph,
    pub u1: usize,
    pub u2: usize,
    pub v: [usize; 4],
    pub w: [usize; 3],
}

/// Builds T1 with layout `u1 = 0`, `u2 = 1`, `v1..v4 = 2..=5`,
/// `w1..w3 = 6..=8`.
pub fn t1() -> T1 {
    let edges = [
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 4),
        (1, 5),
        (2, 6),
        (3, 7),
        (4, 8),
    ];
    let graph = Graph::from_edge_list(9, edges).expect("valid T1");
    T1 {
        graph,
        u1: 0,
        u2: 1,
        v: [2, 3, 4, 5],
        w: [6, 7, 8],
    }
}

impl T1 {
    /// The weight-10 double Italian dominating function of the usual
    /// drawing: each `w_i` gets 2, `u1` gets 1, `u2` gets 3, the rest 0.
    pub fn didf_witness(&self) -> crate::labelings::Labeling {
        let mut values = vec![0u8; 9];
        for &w in &self.w {
            values[w] = 2;
        }
        values[self.u1] = 1;
        values[self.u2] = 3;
        crate::labelings::Labeling::new(values).expect("valid labels")
    }

    /// The weight-11 double Roman dominating function: each `w_i` gets 2,
    /// `u1` gets 2, `u2` gets 3, the rest 0.
    pub fn drdf_witness(&self) -> crate::labelings::Labeling {
        let mut values = vec![0u8; 9];
        for &w in &self.w {
            values[w] = 2;
        }
        values[self.u1] = 2;
        values[self.u2] = 3;
        crate::labelings::Labeling::new(values).expect("valid labels")
    }
}
