//! Tangent weights at fixed points and the moment graph of T-invariant
//! curves.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::charring::{CharPoly, Weight};
use crate::subsets::{enumerate_admissible, AdmissibleSubset, Geometry, GrassmannianSpec};

/// Tangent weights of `T` at `p_I`, as a multiset.
///
/// `-2e_i` for `i ∈ I`, `e_i - e_j` for `i ∉ ±I`, `j ∈ I`, and in the
/// symplectic case additionally `-e_{i1} - e_{i2}` for `i1 > i2` in `I`.
pub fn tangent_weights(subset: &AdmissibleSubset, spec: &GrassmannianSpec) -> Vec<Weight> {
    let n = spec.n();
    let ni = n as i32;
    let e = subset.entries();
    let mut out = Vec::with_capacity(spec.dimension());
    for &i in e {
        out.push(Weight::multiple(n, -2, i));
    }
    for i in (-ni..=ni).rev().filter(|&i| i != 0) {
        if subset.contains(i) || subset.contains(-i) {
            continue;
        }
        for &j in e {
            out.push(Weight::difference(n, i, j));
        }
    }
    if spec.geometry() == Geometry::Symplectic {
        for (a, &i1) in e.iter().enumerate() {
            for &i2 in &e[a + 1..] {
                out.push(-Weight::sum(n, i1, i2));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CurveKind {
    /// A line: the endpoints share `k - 1` indices.
    Alpha,
    /// A conic: two indices replaced by their negatives.
    Beta,
}

/// Degree of the curve in the Plücker embedding.
pub fn curve_degree_kind(kind: CurveKind) -> u32 {
    match kind {
        CurveKind::Alpha => 1,
        CurveKind::Beta => 2,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    /// Vertex index of the dominating endpoint.
    pub upper: usize,
    /// Vertex index of the dominated endpoint.
    pub lower: usize,
    /// The curve's character, normalized to be tau-positive.
    pub weight: Weight,
    pub kind: CurveKind,
}

#[derive(Debug, Clone)]
pub struct GkmGraph {
    spec: GrassmannianSpec,
    vertices: Vec<AdmissibleSubset>,
    index: HashMap<AdmissibleSubset, usize>,
    edges: Vec<Edge>,
    incident: Vec<Vec<usize>>,
}

impl GkmGraph {
    pub fn spec(&self) -> &GrassmannianSpec {
        &self.spec
    }

    pub fn vertices(&self) -> &[AdmissibleSubset] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_index(&self, s: &AdmissibleSubset) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Edge indices incident to vertex `v`.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn edge_between(&self, a: &AdmissibleSubset, b: &AdmissibleSubset) -> Option<&Edge> {
        let (ia, ib) = (self.vertex_index(a)?, self.vertex_index(b)?);
        self.incident[ia]
            .iter()
            .map(|&e| &self.edges[e])
            .find(|e| (e.upper == ia && e.lower == ib) || (e.upper == ib && e.lower == ia))
    }

    /// Graphviz rendering; vertices in canonical order, edges in
    /// construction order.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "graph \"{}_{}_{}\" {{",
            self.spec.geometry(),
            self.spec.k(),
            self.spec.n()
        );
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"{v:?}\"];");
        }
        for e in &self.edges {
            let style = match e.kind {
                CurveKind::Alpha => "",
                CurveKind::Beta => ", style=dashed",
            };
            let _ = writeln!(
                out,
                "  v{} -- v{} [label=\"{} ({:?})\"{style}];",
                e.upper, e.lower, e.weight, e.kind
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct EdgeRepr<'a> {
            upper: &'a AdmissibleSubset,
            lower: &'a AdmissibleSubset,
            weight: &'a Weight,
            kind: CurveKind,
        }
        #[derive(Serialize)]
        struct GraphRepr<'a> {
            spec: &'a GrassmannianSpec,
            vertices: &'a [AdmissibleSubset],
            edges: Vec<EdgeRepr<'a>>,
        }
        serde_json::to_value(GraphRepr {
            spec: &self.spec,
            vertices: &self.vertices,
            edges: self
                .edges
                .iter()
                .map(|e| EdgeRepr {
                    upper: &self.vertices[e.upper],
                    lower: &self.vertices[e.lower],
                    weight: &e.weight,
                    kind: e.kind,
                })
                .collect(),
        })
        .expect("graph serializes")
    }
}

/// Classifies the T-invariant curve joining `a` and `b`, if there is one.
pub fn curve_between(
    a: &AdmissibleSubset,
    b: &AdmissibleSubset,
    spec: &GrassmannianSpec,
) -> Option<(Weight, CurveKind)> {
    let k = spec.k();
    let n = spec.n();
    let common = a.intersection_size(b);
    if a == b {
        return None;
    }
    if common + 1 == k {
        let x = a.difference(b)[0];
        let y = b.difference(a)[0];
        return Some((Weight::difference(n, x, y).tau_positive(), CurveKind::Alpha));
    }
    if spec.geometry() == Geometry::Symplectic && common + 2 == k {
        let ab = a.difference(b);
        let ba = b.difference(a);
        // b - a = {-a2, -a1}
        let mut neg: Vec<i32> = ab.iter().map(|x| -x).collect();
        neg.sort_unstable_by(|x, y| y.cmp(x));
        if neg == ba {
            return Some((Weight::sum(n, ab[0], ab[1]).tau_positive(), CurveKind::Beta));
        }
    }
    None
}

pub fn build_graph(spec: &GrassmannianSpec) -> GkmGraph {
    let vertices = enumerate_admissible(spec);
    let index: HashMap<_, _> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();
    let mut edges = Vec::new();
    let mut incident = vec![Vec::new(); vertices.len()];
    for a in 0..vertices.len() {
        for b in (a + 1)..vertices.len() {
            let Some((weight, kind)) = curve_between(&vertices[a], &vertices[b], spec) else {
                continue;
            };
            let (upper, lower) = if crate::subsets::dominates(&vertices[a], &vertices[b]) {
                (a, b)
            } else {
                (b, a)
            };
            incident[a].push(edges.len());
            incident[b].push(edges.len());
            edges.push(Edge {
                upper,
                lower,
                weight,
                kind,
            });
        }
    }
    GkmGraph {
        spec: *spec,
        vertices,
        index,
        edges,
        incident,
    }
}

/// Product of the tau-positive tangent weights at `p_I`: the restriction of
/// the class of the cell closure to its own smooth point.
pub fn smooth_point_restriction(subset: &AdmissibleSubset, spec: &GrassmannianSpec) -> CharPoly {
    tangent_weights(subset, spec)
        .into_iter()
        .filter(Weight::is_tau_positive)
        .fold(CharPoly::one(spec.n()), |acc, w| &acc * w.as_poly())
}
