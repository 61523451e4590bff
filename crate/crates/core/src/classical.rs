//! The non-equivariant specialization `e_i -> 0`: the classical Chevalley
//! graph, Schubert degrees, intersection pairings and the ring structure of
//! `I2Gr(2,6)`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::charring::CharPoly;
use crate::chevalley::{coeff_bisym, coeff_sympl, ChevalleyError};
use crate::classes::{ClassError, ClassTable};
use crate::subsets::{
    codim, enumerate_admissible, hyperplane_subset, maximal_subset, minimal_subset, AdmissibleSubset, Geometry,
    GrassmannianSpec,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalEdge {
    pub source: AdmissibleSubset,
    pub target: AdmissibleSubset,
    pub weight: u32,
}

/// `σ_H · σ_I = Σ w σ_J` with integer weights; every edge raises the
/// codimension by exactly one.
#[derive(Debug, Clone)]
pub struct ClassicalGraph {
    spec: GrassmannianSpec,
    vertices: Vec<AdmissibleSubset>,
    codims: Vec<usize>,
    edges: Vec<ClassicalEdge>,
    out: Vec<Vec<(usize, u32)>>,
}

impl ClassicalGraph {
    pub fn spec(&self) -> &GrassmannianSpec {
        &self.spec
    }

    pub fn vertices(&self) -> &[AdmissibleSubset] {
        &self.vertices
    }

    pub fn edges(&self) -> &[ClassicalEdge] {
        &self.edges
    }

    pub fn weight(&self, source: &AdmissibleSubset, target: &AdmissibleSubset) -> u32 {
        self.edges
            .iter()
            .find(|e| &e.source == source && &e.target == target)
            .map_or(0, |e| e.weight)
    }

    /// Number of weighted paths from every vertex down to the point class.
    pub fn path_counts(&self) -> Vec<BigUint> {
        let mut order: Vec<usize> = (0..self.vertices.len()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.codims[v]));
        let bottom = self.codims.iter().copied().max().unwrap_or(0);
        let mut memo = vec![BigUint::zero(); self.vertices.len()];
        for v in order {
            memo[v] = if self.codims[v] == bottom {
                BigUint::one()
            } else {
                self.out[v]
                    .iter()
                    .map(|&(t, w)| &memo[t] * BigUint::from(w))
                    .sum()
            };
        }
        memo
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!(
            "digraph \"classical_{}_{}_{}\" {{\n",
            self.spec.geometry(),
            self.spec.k(),
            self.spec.n()
        );
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"{v:?}\"];\n"));
        }
        for e in &self.edges {
            let s = self.vertices.iter().position(|v| *v == e.source).expect("vertex");
            let t = self.vertices.iter().position(|v| *v == e.target).expect("vertex");
            out.push_str(&format!("  v{s} -> v{t} [label=\"{}\"];\n", e.weight));
        }
        out.push_str("}\n");
        out
    }
}

/// Keeps the constant terms of the Chevalley coefficients.
pub fn classical_chevalley(spec: &GrassmannianSpec) -> Result<ClassicalGraph, ChevalleyError> {
    if spec.geometry() == Geometry::Bisymplectic && spec.k() != 2 {
        return Err(ChevalleyError::UnsupportedK(spec.k()));
    }
    let vertices = enumerate_admissible(spec);
    let codims: Vec<usize> = vertices.iter().map(|v| codim(v, spec)).collect();
    let mut edges = Vec::new();
    let mut out = vec![Vec::new(); vertices.len()];
    for (s, source) in vertices.iter().enumerate() {
        for (t, target) in vertices.iter().enumerate() {
            if codims[t] != codims[s] + 1 {
                continue;
            }
            let weight = match spec.geometry() {
                Geometry::Bisymplectic => {
                    let c = coeff_bisym(source, target, spec)?.evaluate_at_zero();
                    c.to_u32().expect("classical Chevalley weights are small and nonnegative")
                }
                Geometry::Symplectic => coeff_sympl(source, target, spec),
            };
            if weight != 0 {
                out[s].push((t, weight));
                edges.push(ClassicalEdge {
                    source: source.clone(),
                    target: target.clone(),
                    weight,
                });
            }
        }
    }
    Ok(ClassicalGraph {
        spec: *spec,
        vertices,
        codims,
        edges,
        out,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub subset: AdmissibleSubset,
    pub codim: usize,
    #[serde(serialize_with = "as_decimal")]
    pub degree: BigUint,
}

fn as_decimal<S: serde::Serializer, T: std::fmt::Display>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Degrees of all Schubert varieties in canonical order.
pub fn degree_table(spec: &GrassmannianSpec) -> Result<Vec<DegreeRow>, ChevalleyError> {
    let graph = classical_chevalley(spec)?;
    let counts = graph.path_counts();
    Ok(graph
        .vertices
        .iter()
        .zip(&graph.codims)
        .zip(counts)
        .map(|((s, &c), d)| DegreeRow {
            subset: s.clone(),
            codim: c,
            degree: d,
        })
        .collect())
}

/// `deg σ_I`, by counting weighted paths in the classical Chevalley graph.
pub fn schubert_degree(subset: &AdmissibleSubset, spec: &GrassmannianSpec) -> Result<BigUint, ChevalleyError> {
    let rows = degree_table(spec)?;
    Ok(rows
        .into_iter()
        .find(|r| &r.subset == subset)
        .map(|r| r.degree)
        .unwrap_or_default())
}

/// An integral class in the Schubert basis. Zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct IntClassVector {
    #[serde(serialize_with = "decimal_map")]
    coefficients: BTreeMap<AdmissibleSubset, BigInt>,
}

fn decimal_map<S: serde::Serializer>(m: &BTreeMap<AdmissibleSubset, BigInt>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_map(m.iter().map(|(k, v)| (k.to_string(), v.to_string())))
}

impl IntClassVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(subset: &AdmissibleSubset) -> Self {
        Self::from_terms([(subset.clone(), BigInt::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (AdmissibleSubset, BigInt)>>(terms: I) -> Self {
        let mut v = Self::zero();
        for (s, c) in terms {
            v.add_term(s, c);
        }
        v
    }

    fn add_term(&mut self, s: AdmissibleSubset, c: BigInt) {
        let e = self.coefficients.entry(s).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.coefficients.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coefficients(&self) -> &BTreeMap<AdmissibleSubset, BigInt> {
        &self.coefficients
    }

    pub fn coefficient(&self, s: &AdmissibleSubset) -> BigInt {
        self.coefficients.get(s).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut v = self.clone();
        for (s, c) in &other.coefficients {
            v.add_term(s.clone(), c.clone());
        }
        v
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coefficients: self.coefficients.iter().map(|(s, v)| (s.clone(), v * c)).collect(),
        }
    }

    /// The part of codimension `c`.
    pub fn graded_part(&self, c: usize, spec: &GrassmannianSpec) -> Self {
        Self {
            coefficients: self
                .coefficients
                .iter()
                .filter(|(s, _)| codim(s, spec) == c)
                .map(|(s, v)| (s.clone(), v.clone()))
                .collect(),
        }
    }
}

/// The classical cohomology ring with its full multiplication table.
#[derive(Debug, Clone)]
pub struct ClassicalRing {
    spec: GrassmannianSpec,
    points: Vec<AdmissibleSubset>,
    index: HashMap<AdmissibleSubset, usize>,
    codims: Vec<usize>,
    // products[i][j] for i <= j
    products: Vec<Vec<Vec<(usize, BigInt)>>>,
}

/// Classical structure constants: the constant terms of the equivariant
/// ones. Only codimension-additive entries can survive.
pub fn structure_constants_classical(table: &ClassTable) -> Result<ClassicalRing, ClassError> {
    let points = table.points().to_vec();
    let count = points.len();
    let products: Vec<Vec<Vec<(usize, BigInt)>>> = (0..count)
        .into_par_iter()
        .map(|i| {
            (0..count)
                .map(|j| {
                    if j < i {
                        return Ok(Vec::new());
                    }
                    let e = table.structure_constants(&points[i], &points[j])?;
                    Ok(e.iter()
                        .map(|(l, c)| (table.index_of(l).expect("known point"), c.evaluate_at_zero()))
                        .filter(|(_, c)| !c.is_zero())
                        .collect())
                })
                .collect::<Result<Vec<_>, ClassError>>()
        })
        .collect::<Result<_, _>>()?;
    let index = points.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    Ok(ClassicalRing {
        spec: *table.spec(),
        points,
        index,
        codims: table.codims().to_vec(),
        products,
    })
}

impl ClassicalRing {
    pub fn spec(&self) -> &GrassmannianSpec {
        &self.spec
    }

    pub fn points(&self) -> &[AdmissibleSubset] {
        &self.points
    }

    pub fn rank(&self) -> usize {
        self.points.len()
    }

    fn idx(&self, s: &AdmissibleSubset) -> usize {
        *self.index.get(s).unwrap_or_else(|| panic!("{s:?} is not a point of {:?}", self.spec))
    }

    /// `N_{I,J}^L` at `e = 0`.
    pub fn constant(&self, i: &AdmissibleSubset, j: &AdmissibleSubset, l: &AdmissibleSubset) -> BigInt {
        let (a, b) = (self.idx(i), self.idx(j));
        let t = self.idx(l);
        self.products[a.min(b)][a.max(b)]
            .iter()
            .find(|(k, _)| *k == t)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    /// Every nonzero constant, keyed by `(I, J, L)` with `I <= J` in
    /// canonical order.
    pub fn constants(&self) -> BTreeMap<(AdmissibleSubset, AdmissibleSubset, AdmissibleSubset), BigInt> {
        let mut out = BTreeMap::new();
        for (a, row) in self.products.iter().enumerate() {
            for (b, terms) in row.iter().enumerate().skip(a) {
                for (l, c) in terms {
                    out.insert(
                        (self.points[a].clone(), self.points[b].clone(), self.points[*l].clone()),
                        c.clone(),
                    );
                }
            }
        }
        out
    }

    pub fn sigma(&self, s: &AdmissibleSubset) -> IntClassVector {
        IntClassVector::basis(&self.points[self.idx(s)])
    }

    pub fn one(&self) -> IntClassVector {
        IntClassVector::basis(&maximal_subset(&self.spec))
    }

    pub fn hyperplane(&self) -> IntClassVector {
        IntClassVector::basis(&hyperplane_subset(&self.spec))
    }

    pub fn mul(&self, x: &IntClassVector, y: &IntClassVector) -> IntClassVector {
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (s, c) in &x.coefficients {
            for (t, d) in &y.coefficients {
                let (a, b) = (self.idx(s), self.idx(t));
                let cd = c * d;
                for (l, n) in &self.products[a.min(b)][a.max(b)] {
                    *acc.entry(*l).or_insert_with(BigInt::zero) += &cd * n;
                }
            }
        }
        IntClassVector::from_terms(
            acc.into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(l, c)| (self.points[l].clone(), c)),
        )
    }

    pub fn pow(&self, x: &IntClassVector, e: u32) -> IntClassVector {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    /// Coefficient of the point class.
    pub fn integrate(&self, x: &IntClassVector) -> BigInt {
        x.coefficient(&minimal_subset(&self.spec))
    }

    /// `deg σ_I = ∫ σ_I · σ_H^{dim - codim I}`.
    pub fn degree(&self, s: &AdmissibleSubset) -> BigInt {
        let rest = self.spec.dimension() - self.codims[self.idx(s)];
        let h = self.pow(&self.hyperplane(), rest as u32);
        self.integrate(&self.mul(&self.sigma(s), &h))
    }

    pub fn points_of_codim(&self, c: usize) -> Vec<AdmissibleSubset> {
        self.points
            .iter()
            .zip(&self.codims)
            .filter(|(_, &d)| d == c)
            .map(|(p, _)| p.clone())
            .collect()
    }

    /// Evaluates a polynomial in named generators; variable `e_m` stands for
    /// `generators[m - 1]`.
    pub fn evaluate(&self, p: &CharPoly, generators: &[IntClassVector]) -> IntClassVector {
        let mut total = IntClassVector::zero();
        for (m, c) in p.terms() {
            let mut term = self.one();
            for (v, g) in generators.iter().enumerate() {
                for _ in 0..m.exponent(v + 1) {
                    term = self.mul(&term, g);
                }
            }
            total = total.add(&term.scale(c));
        }
        total
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairingMatrix {
    pub codim: usize,
    pub rows: Vec<AdmissibleSubset>,
    pub cols: Vec<AdmissibleSubset>,
    #[serde(serialize_with = "decimal_matrix")]
    pub entries: Vec<Vec<BigInt>>,
}

fn decimal_matrix<S: serde::Serializer>(m: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(m.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()))
}

impl PairingMatrix {
    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols.len()
    }

    /// Fraction-free (Bareiss) elimination; `None` if not square.
    pub fn determinant(&self) -> Option<BigInt> {
        self.is_square().then(|| determinant(&self.entries))
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().is_some_and(|d| d.abs().is_one())
    }

    /// Some reordering of the columns turns the matrix into the identity.
    pub fn is_permutation(&self) -> bool {
        let one_per_line = |lines: Vec<Vec<&BigInt>>| {
            lines.iter().all(|l| {
                l.iter().filter(|c| !c.is_zero()).count() == 1 && l.iter().any(|c| c.is_one())
            })
        };
        let rows = self.entries.iter().map(|r| r.iter().collect()).collect();
        let cols = (0..self.cols.len())
            .map(|j| self.entries.iter().map(|r| &r[j]).collect())
            .collect();
        self.is_square() && one_per_line(rows) && one_per_line(cols)
    }
}

fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Intersection numbers between two lists of classes of complementary
/// codimension.
pub fn pairing_in_basis(ring: &ClassicalRing, rows: &[IntClassVector], cols: &[IntClassVector]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|x| cols.iter().map(|y| ring.integrate(&ring.mul(x, y))).collect())
        .collect()
}

/// `∫ σ_I σ_J` for `codim I = c` against `codim J = dim - c`.
pub fn pairing_matrix(ring: &ClassicalRing, c: usize) -> PairingMatrix {
    let dim = ring.spec.dimension();
    assert!(c <= dim, "codimension {c} exceeds dimension {dim}");
    let rows = ring.points_of_codim(c);
    let cols = ring.points_of_codim(dim - c);
    let basis = |v: &[AdmissibleSubset]| v.iter().map(IntClassVector::basis).collect::<Vec<_>>();
    let entries = pairing_in_basis(ring, &basis(&rows), &basis(&cols));
    PairingMatrix {
        codim: c,
        rows,
        cols,
        entries,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    /// The relation evaluated in the Schubert basis; empty when it holds.
    pub residual: IntClassVector,
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingCheckReport {
    pub ideal: Vec<RelationCheck>,
    pub substitutions: Vec<RelationCheck>,
    /// Basis classes not reached by the substitution formulas and the
    /// generators themselves.
    pub unreached: Vec<AdmissibleSubset>,
    pub rank: usize,
}

impl RingCheckReport {
    pub fn passed(&self) -> bool {
        self.ideal.iter().all(RelationCheck::holds)
            && self.substitutions.iter().all(RelationCheck::holds)
            && self.unreached.is_empty()
    }
}

/// Generators of the relation ideal of `H*(I2Gr(2,6))` in
/// `s1 = σ(3,1)`, `s2 = σ(2,1)`, `s3 = σ(3,-2)`, `s3' = σ(2,-3)`.
///
/// In codimension 4, `s1^4 = 5σ(-1,-2) + 9σ(1,-3)` and
/// `s1^2 s2 = 2σ(-1,-2) + 3σ(1,-3)`, which fixes the first generator.
pub const I2GR26_IDEAL: [&str; 10] = [
    "2*s1^4 - 5*s1^2*s2 - 3*s1*s3'",
    "s2*s3'",
    "s1*s3 - s1*s3'",
    "s3*s3' - s1^3*s3'",
    "s2^2 - s1^4 + 2*s1^2*s2 + 2*s1*s3'",
    "s3^2",
    "s1^5 - 14*s1^2*s3'",
    "s3'^2",
    "s2*s3",
    "s1^4*s3'",
];

/// Schubert classes of `I2Gr(2,6)` written in the generators.
pub const I2GR26_SUBSTITUTIONS: [([i32; 2], &str); 7] = [
    ([3, -1], "s1^2 - s2"),
    ([2, -1], "3*s1*s2 - s1^3 + s3"),
    ([1, -2], "s1^3 - 2*s1*s2 - s3 - s3'"),
    ([-1, -2], "s1^4 - 2*s1^2*s2 - 3*s1*s3'"),
    ([1, -3], "s1*s3'"),
    ([-1, -3], "s1^2*s3'"),
    ([-2, -3], "s1^3*s3'"),
];

/// Parses an expression in `s1, s2, s3, s3'`.
pub fn parse_generator_poly(src: &str) -> CharPoly {
    let translated = src.replace("s3'", "e4").replace('s', "e");
    CharPoly::parse(4, &translated).unwrap_or_else(|e| panic!("bad relation {src:?}: {e}"))
}

/// The generators `s1, s2, s3, s3'` of the `n = 3` ring.
pub fn i2gr26_generators(ring: &ClassicalRing) -> [IntClassVector; 4] {
    let s = |a: i32, b: i32| ring.sigma(&AdmissibleSubset::new(vec![a, b]).expect("admissible"));
    [s(3, 1), s(2, 1), s(3, -2), s(2, -3)]
}

/// Evaluates the presentation of `H*(I2Gr(2,6))` inside the structure
/// constant algebra.
pub fn ring_check_i2gr26(ring: &ClassicalRing) -> RingCheckReport {
    assert_eq!(
        *ring.spec(),
        GrassmannianSpec::bisymplectic(3).expect("valid spec"),
        "the presentation is for I2Gr(2,6)"
    );
    let gens = i2gr26_generators(ring);
    let ideal = I2GR26_IDEAL
        .iter()
        .map(|r| RelationCheck {
            relation: (*r).to_owned(),
            residual: ring.evaluate(&parse_generator_poly(r), &gens),
        })
        .collect();
    let mut reached: Vec<AdmissibleSubset> = vec![maximal_subset(ring.spec())];
    for g in &gens {
        reached.extend(g.coefficients().keys().cloned());
    }
    let substitutions = I2GR26_SUBSTITUTIONS
        .iter()
        .map(|(idx, r)| {
            let target = AdmissibleSubset::new(idx.to_vec()).expect("admissible");
            let residual = ring.sigma(&target).sub(&ring.evaluate(&parse_generator_poly(r), &gens));
            if residual.is_zero() {
                reached.push(target.clone());
            }
            RelationCheck {
                relation: format!("σ{target:?} = {r}"),
                residual,
            }
        })
        .collect();
    let unreached = ring
        .points()
        .iter()
        .filter(|p| !reached.contains(p))
        .cloned()
        .collect();
    RingCheckReport {
        ideal,
        substitutions,
        unreached,
        rank: ring.rank(),
    }
}
