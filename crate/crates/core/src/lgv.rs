//! The twisted-tableau digraph, its path families, and the determinant
//! formula for `P(tau)`.
//!
//! Realization: strip `r` (one per row of the shape) lies between the
//! horizontal lines `y = r - 1` and `y = r`. Its south-east edge with label
//! `t` runs `(t, r - 1) -> (t + 1, r)` for `t = 0..=lambda_r`. Each
//! horizontal line carries east edges between consecutive integer points
//! spanning every vertex that touches it. Sources are `e_i = (0, i - 1)`,
//! sinks are `v_j = (lambda_j + 1, j)`.
//!
//! Edge weights: label 0 weighs `1/b`; label `t > lambda_{r+1}` in strip `r`
//! weighs `(1/a)^(t - lambda_{r+1})`; everything else weighs 1.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::algebra::{binomial, LaurentPoly, PolyMatrix};
use crate::error::{Error, Result};
use crate::paths::CatalanPath;
use crate::tableau::{Shape, StateWord};

/// Largest number of rows accepted by [`lgv_check`].
pub const LGV_MAX_ROWS: usize = 6;
/// Largest first part accepted by [`lgv_check`].
pub const LGV_MAX_PART: usize = 8;

/// `(x, y)`; `y` grows downwards.
pub type Vertex = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    East,
    SouthEast { strip: usize, label: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: Vertex,
    pub to: Vertex,
    pub kind: EdgeKind,
    pub weight: LaurentPoly,
}

#[derive(Clone, Debug)]
pub struct TwistedDigraph {
    shape: Shape,
    edges: Vec<Edge>,
    out: BTreeMap<Vertex, Vec<usize>>,
}

/// Weight of the south-east edge with `label` in 1-based `strip`.
fn se_weight(shape: &Shape, strip: usize, label: usize) -> LaurentPoly {
    let below = shape.part(strip + 1);
    if label == 0 {
        LaurentPoly::monomial(1, 0, -1)
    } else if label > below {
        LaurentPoly::monomial(1, -((label - below) as i64), 0)
    } else {
        LaurentPoly::one()
    }
}

impl TwistedDigraph {
    pub fn build(shape: &Shape) -> Self {
        let k = shape.rows();
        let mut edges = Vec::new();
        for strip in 1..=k {
            for label in 0..=shape.part(strip) {
                edges.push(Edge {
                    from: (label, strip - 1),
                    to: (label + 1, strip),
                    kind: EdgeKind::SouthEast { strip, label },
                    weight: se_weight(shape, strip, label),
                });
            }
        }
        for y in 0..=k {
            // x-range of vertices on line y: bottoms of strip y, tops of strip y+1
            let mut xs: Vec<usize> = Vec::new();
            if y >= 1 {
                xs.extend([1, shape.part(y) + 1]);
            }
            if y < k {
                xs.extend([0, shape.part(y + 1)]);
            }
            let (Some(&lo), Some(&hi)) = (xs.iter().min(), xs.iter().max()) else {
                continue;
            };
            for x in lo..hi {
                edges.push(Edge {
                    from: (x, y),
                    to: (x + 1, y),
                    kind: EdgeKind::East,
                    weight: LaurentPoly::one(),
                });
            }
        }
        let mut out: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
        for (idx, e) in edges.iter().enumerate() {
            out.entry(e.from).or_default().push(idx);
        }
        Self {
            shape: shape.clone(),
            edges,
            out,
        }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rows(&self) -> usize {
        self.shape.rows()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.edges.iter().flat_map(|e| [e.from, e.to]).collect()
    }

    /// `e_i`, 1-based.
    pub fn source(&self, i: usize) -> Vertex {
        (0, i - 1)
    }

    /// `v_j`, 1-based.
    pub fn sink(&self, j: usize) -> Vertex {
        (self.shape.part(j) + 1, j)
    }

    /// South-east edges of a strip as `(label, weight)`.
    pub fn strip_labels(&self, strip: usize) -> Vec<(usize, LaurentPoly)> {
        self.edges
            .iter()
            .filter_map(|e| match e.kind {
                EdgeKind::SouthEast { strip: s, label } if s == strip => {
                    Some((label, e.weight.clone()))
                }
                _ => None,
            })
            .collect()
    }

    fn check_endpoints(&self, i: usize, j: usize) -> Result<()> {
        let k = self.rows();
        if i == 0 || j == 0 || i > k || j > k {
            return Err(Error::InvalidArgument(format!(
                "endpoint indices ({i}, {j}) outside 1..={k}"
            )));
        }
        Ok(())
    }

    /// Every path `e_i -> v_j`, found by depth-first search over the edges.
    pub fn paths(&self, i: usize, j: usize) -> Result<Vec<LatticePath>> {
        self.check_endpoints(i, j)?;
        let target = self.sink(j);
        let mut out = Vec::new();
        let mut stack = Vec::new();
        self.dfs(self.source(i), self.source(i), target, &mut stack, &mut out);
        for p in &out {
            debug_assert!(self.has_sparse_weights(p, j), "unexpected weights on {p}");
        }
        Ok(out)
    }

    fn dfs(
        &self,
        start: Vertex,
        at: Vertex,
        target: Vertex,
        stack: &mut Vec<usize>,
        out: &mut Vec<LatticePath>,
    ) {
        if at == target {
            out.push(self.path_from_edges(start, stack));
            return;
        }
        if at.1 > target.1 || (at.1 == target.1 && at.0 > target.0) {
            return;
        }
        for &idx in self.out.get(&at).map(Vec::as_slice).unwrap_or(&[]) {
            stack.push(idx);
            self.dfs(start, self.edges[idx].to, target, stack, out);
            stack.pop();
        }
    }

    fn path_from_edges(&self, start: Vertex, edge_ids: &[usize]) -> LatticePath {
        let mut vertices = vec![start];
        let mut kinds = Vec::with_capacity(edge_ids.len());
        let mut weight = LaurentPoly::one();
        for &idx in edge_ids {
            let e = &self.edges[idx];
            vertices.push(e.to);
            kinds.push(e.kind);
            weight *= &e.weight;
        }
        LatticePath {
            vertices,
            steps: kinds,
            weight,
        }
    }

    /// The path `e_i -> v_j` whose south-east steps carry exactly `labels`
    /// (one label per strip `i..=j`).
    pub fn path_with_labels(&self, i: usize, j: usize, labels: &[usize]) -> Result<LatticePath> {
        self.check_endpoints(i, j)?;
        let bad =
            || Error::InvalidArgument(format!("no path e_{i} -> v_{j} with labels {labels:?}"));
        if labels.len() + i != j + 1 {
            return Err(bad());
        }
        let mut at = self.source(i);
        let mut ids = Vec::new();
        let walk_east_to = |at: &mut Vertex, x: usize, ids: &mut Vec<usize>| -> Result<()> {
            while at.0 < x {
                let idx = self.out_edge(*at, EdgeKind::East).ok_or_else(bad)?;
                ids.push(idx);
                *at = self.edges[idx].to;
            }
            if at.0 == x {
                Ok(())
            } else {
                Err(bad())
            }
        };
        for (offset, &label) in labels.iter().enumerate() {
            walk_east_to(&mut at, label, &mut ids)?;
            let strip = i + offset;
            let idx = self
                .out_edge(at, EdgeKind::SouthEast { strip, label })
                .ok_or_else(bad)?;
            ids.push(idx);
            at = self.edges[idx].to;
        }
        walk_east_to(&mut at, self.sink(j).0, &mut ids)?;
        if at != self.sink(j) {
            return Err(bad());
        }
        Ok(self.path_from_edges(self.source(i), &ids))
    }

    /// At most one `1/b` step and at most one `1/a`-weighted step, the latter
    /// only in `last_strip`.
    pub fn has_sparse_weights(&self, path: &LatticePath, last_strip: usize) -> bool {
        let mut beta_steps = 0;
        let mut alpha_strips = Vec::new();
        for kind in path.steps() {
            if let EdgeKind::SouthEast { strip, label } = *kind {
                if label == 0 {
                    beta_steps += 1;
                } else if label > self.shape.part(strip + 1) {
                    alpha_strips.push(strip);
                }
            }
        }
        beta_steps <= 1 && alpha_strips.len() <= 1 && alpha_strips.iter().all(|&s| s == last_strip)
    }

    fn out_edge(&self, at: Vertex, kind: EdgeKind) -> Option<usize> {
        self.out
            .get(&at)?
            .iter()
            .copied()
            .find(|&idx| self.edges[idx].kind == kind)
    }

    /// `w_ij`: sum of the weights of all paths `e_i -> v_j`.
    pub fn w_ij(&self, i: usize, j: usize) -> Result<LaurentPoly> {
        Ok(self.paths(i, j)?.iter().map(|p| p.weight.clone()).sum())
    }

    /// The `k x k` matrix `(w_ij)` from path enumeration.
    pub fn w_matrix(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.rows(), |i, j| {
            self.w_ij(i + 1, j + 1).expect("indices in range")
        })
    }

    /// Debug edge list, one `(x,y) -> (x',y') weight` per line.
    pub fn edge_list(&self) -> String {
        self.edges
            .iter()
            .map(|e| {
                format!(
                    "({},{}) -> ({},{}) {}",
                    e.from.0, e.from.1, e.to.0, e.to.1, e.weight
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// A directed path in a [`TwistedDigraph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePath {
    vertices: Vec<Vertex>,
    steps: Vec<EdgeKind>,
    weight: LaurentPoly,
}

impl LatticePath {
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn end(&self) -> Vertex {
        *self
            .vertices
            .last()
            .expect("paths have at least one vertex")
    }

    pub fn steps(&self) -> &[EdgeKind] {
        &self.steps
    }

    /// Labels of the south-east steps, in order.
    pub fn labels(&self) -> Vec<usize> {
        self.steps
            .iter()
            .filter_map(|k| match k {
                EdgeKind::SouthEast { label, .. } => Some(*label),
                EdgeKind::East => None,
            })
            .collect()
    }

    pub fn weight(&self) -> &LaurentPoly {
        &self.weight
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self
            .vertices
            .iter()
            .map(|(x, y)| format!("({x},{y})"))
            .collect();
        write!(f, "{} [{}]", vs.join(" -> "), self.weight)
    }
}

/// A `k`-tuple of paths with `P_i: e_i -> v_{pi(i)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KPathFamily {
    /// 0-based: `permutation[i]` is the sink index of path `i`.
    permutation: Vec<usize>,
    paths: Vec<LatticePath>,
}

impl KPathFamily {
    pub fn new(
        g: &TwistedDigraph,
        permutation: Vec<usize>,
        paths: Vec<LatticePath>,
    ) -> Result<Self> {
        let k = g.rows();
        let mut seen = vec![false; k];
        if permutation.len() != k || paths.len() != k {
            return Err(Error::InvalidArgument(format!(
                "family must have {k} paths"
            )));
        }
        for (i, (&p, path)) in permutation.iter().zip(&paths).enumerate() {
            if p >= k || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument(format!(
                    "{permutation:?} is not a permutation"
                )));
            }
            if path.start() != g.source(i + 1) || path.end() != g.sink(p + 1) {
                return Err(Error::InvalidArgument(format!(
                    "path {} does not run e_{} -> v_{}",
                    i + 1,
                    i + 1,
                    p + 1
                )));
            }
        }
        Ok(Self { permutation, paths })
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }

    pub fn is_identity(&self) -> bool {
        self.permutation.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn sign(&self) -> i64 {
        permutation_sign(&self.permutation)
    }

    /// True iff no vertex is shared by two component paths.
    pub fn is_disjoint(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.paths.iter().all(|p| {
            let own: BTreeSet<Vertex> = p.vertices().iter().copied().collect();
            own.into_iter().all(|v| seen.insert(v))
        })
    }

    /// Product of the component weights.
    pub fn weight(&self) -> LaurentPoly {
        self.paths.iter().map(|p| p.weight().clone()).product()
    }
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The identity family `(p_11, ..., p_kk)` where `p_ii` crosses strip `i`
/// on the south-east edge labelled `C_i`.
pub fn family_of_catalan_path(c: &CatalanPath, g: &TwistedDigraph) -> Result<KPathFamily> {
    if c.shape() != g.shape() {
        return Err(Error::InvalidArgument(format!(
            "path shape {:?} does not match digraph shape {:?}",
            c.shape().parts(),
            g.shape().parts()
        )));
    }
    identity_family(g, c.labels())
}

/// Identity family with one arbitrary label per strip (not necessarily
/// decreasing, so the result may fail to be disjoint).
pub fn identity_family(g: &TwistedDigraph, labels: &[usize]) -> Result<KPathFamily> {
    let paths = labels
        .iter()
        .enumerate()
        .map(|(i, &l)| g.path_with_labels(i + 1, i + 1, &[l]))
        .collect::<Result<Vec<_>>>()?;
    KPathFamily::new(g, (0..labels.len()).collect(), paths)
}

/// `A_ij` of the determinant formula (1-based, `lambda_{k+1} = 0`).
pub fn a_ij_closed_form(shape: &Shape, i: usize, j: usize) -> LaurentPoly {
    let m = shape.part(j + 1) as i64;
    let d = j as i64 - i as i64;
    let binv = LaurentPoly::monomial(1, 0, -1);
    let mut entry =
        LaurentPoly::constant(binomial(m, d + 1)) + &binv * &LaurentPoly::constant(binomial(m, d));
    let span = shape.part(j) as i64 - m;
    for p in 1..=span {
        let inner = LaurentPoly::constant(binomial(m + p - 1, d))
            + &binv * &LaurentPoly::constant(binomial(m + p - 1, d - 1));
        entry += inner.shift(-p, 0);
    }
    entry
}

/// The matrix `A` with entries [`a_ij_closed_form`].
pub fn matrix_a(shape: &Shape) -> PolyMatrix {
    PolyMatrix::from_fn(shape.rows(), |i, j| a_ij_closed_form(shape, i + 1, j + 1))
}

/// `P(tau) = a^(k + lambda_1) b^n det A`.
pub fn det_formula(tau: &StateWord) -> LaurentPoly {
    let shape = Shape::of_word(tau);
    let k = shape.rows() as i64;
    let n = tau.len() as i64;
    matrix_a(&shape)
        .determinant()
        .shift(k + shape.part(1) as i64, n)
}

/// `(ab)^n (1/a)^(n - k - lambda_1) det(w_ij)` with the entries found by
/// path enumeration.
pub fn det_formula_enumerated(tau: &StateWord) -> LaurentPoly {
    let shape = Shape::of_word(tau);
    let n = tau.len() as i64;
    let skipped = (shape.width() - shape.part(1)) as i64;
    TwistedDigraph::build(&shape)
        .w_matrix()
        .determinant()
        .shift(n - skipped, n)
}

/// Both sides of the Lindström–Gessel–Viennot identity for one shape.
#[derive(Clone, Debug)]
pub struct LgvReport {
    pub w_matrix: PolyMatrix,
    pub determinant: LaurentPoly,
    /// Signed sum of family weights over all vertex-disjoint families.
    pub signed_sum: LaurentPoly,
    pub disjoint_families: usize,
    pub non_identity_families: usize,
}

impl LgvReport {
    pub fn holds(&self) -> bool {
        self.signed_sum == self.determinant
    }
}

/// Exhaustive LGV check within [`LGV_MAX_ROWS`] and [`LGV_MAX_PART`].
pub fn lgv_check(shape: &Shape) -> Result<bool> {
    Ok(lgv_report(shape)?.holds())
}

pub fn lgv_report(shape: &Shape) -> Result<LgvReport> {
    if shape.rows() > LGV_MAX_ROWS {
        return Err(Error::TooLarge {
            what: "rows k",
            value: shape.rows(),
            limit: LGV_MAX_ROWS,
        });
    }
    if shape.part(1) > LGV_MAX_PART && shape.rows() > 0 {
        return Err(Error::TooLarge {
            what: "lambda_1",
            value: shape.part(1),
            limit: LGV_MAX_PART,
        });
    }
    Ok(lgv_report_unguarded(shape))
}

pub fn lgv_report_unguarded(shape: &Shape) -> LgvReport {
    let g = TwistedDigraph::build(shape);
    let k = g.rows();
    let all: Vec<Vec<Vec<LatticePath>>> = (1..=k)
        .map(|i| {
            (1..=k)
                .map(|j| g.paths(i, j).expect("indices in range"))
                .collect()
        })
        .collect();
    let w_matrix =
        PolyMatrix::from_fn(k, |i, j| all[i][j].iter().map(|p| p.weight().clone()).sum());
    let determinant = w_matrix.determinant();

    let mut acc = FamilyAccumulator {
        all: &all,
        used_sinks: vec![false; k],
        perm: Vec::with_capacity(k),
        occupied: BTreeSet::new(),
        signed_sum: LaurentPoly::zero(),
        disjoint: 0,
        non_identity: 0,
    };
    acc.extend(LaurentPoly::one());
    LgvReport {
        w_matrix,
        determinant,
        signed_sum: acc.signed_sum,
        disjoint_families: acc.disjoint,
        non_identity_families: acc.non_identity,
    }
}

/// Chooses a sink and a path for each source in turn, keeping only choices
/// that avoid every vertex already used.
struct FamilyAccumulator<'a> {
    all: &'a [Vec<Vec<LatticePath>>],
    used_sinks: Vec<bool>,
    perm: Vec<usize>,
    occupied: BTreeSet<Vertex>,
    signed_sum: LaurentPoly,
    disjoint: usize,
    non_identity: usize,
}

impl FamilyAccumulator<'_> {
    fn extend(&mut self, weight: LaurentPoly) {
        let i = self.perm.len();
        if i == self.all.len() {
            self.disjoint += 1;
            if self.perm.iter().enumerate().any(|(a, &b)| a != b) {
                self.non_identity += 1;
            }
            if permutation_sign(&self.perm) < 0 {
                self.signed_sum -= &weight;
            } else {
                self.signed_sum += &weight;
            }
            return;
        }
        for j in 0..self.all.len() {
            if self.used_sinks[j] {
                continue;
            }
            for path in &self.all[i][j] {
                if path.vertices().iter().any(|v| self.occupied.contains(v)) {
                    continue;
                }
                self.used_sinks[j] = true;
                self.perm.push(j);
                self.occupied.extend(path.vertices().iter().copied());
                self.extend(&weight * path.weight());
                for v in path.vertices() {
                    self.occupied.remove(v);
                }
                self.perm.pop();
                self.used_sinks[j] = false;
            }
        }
    }
}
