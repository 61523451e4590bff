//! Localized equivariant Schubert classes.
//!
//! A class is stored as its vector of restrictions to the fixed points, in
//! the canonical fixed-point order. Schubert classes are produced by
//! downward induction on the Chevalley formula
//! `f_I(K) · (f_H(K) - f_H(I)) = Σ_J a_{I,J} f_J(K)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::charring::{divisible_up_to_sign, CharPoly, DivisionError};
use crate::chevalley::{chevalley_table, ChevalleyError};
use crate::gkm::{build_graph, smooth_point_restriction, GkmGraph};
use crate::subsets::{
    codim, dominates, hyperplane_subset, maximal_subset, AdmissibleSubset, Geometry,
    GrassmannianSpec, SubsetError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error(transparent)]
    Chevalley(#[from] ChevalleyError),
    #[error(transparent)]
    Subset(#[from] SubsetError),
    #[error("bisymplectic class tables need k < n (got n = {n}, k = {k})")]
    UnsupportedSpec { n: usize, k: usize },
    #[error("f_H takes the same value at {0:?} and {1:?}")]
    ZeroDenominator(AdmissibleSubset, AdmissibleSubset),
    #[error("division failed for f_{class:?} at {point:?}: {reason}")]
    DivisionFailed {
        class: AdmissibleSubset,
        point: AdmissibleSubset,
        reason: DivisionError,
    },
    #[error("coefficient a_{{{from:?},{to:?}}} points against the induction order")]
    Cycle {
        from: AdmissibleSubset,
        to: AdmissibleSubset,
    },
    #[error("Chevalley relation fails at the point itself for f_{0:?}")]
    InconsistentTable(AdmissibleSubset),
    #[error("class is not in the span of the Schubert basis (stuck at {0:?})")]
    NotInSpan(AdmissibleSubset),
    #[error("classes belong to different spaces")]
    SpecMismatch,
    #[error("malformed class table: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassLabel {
    Schubert(AdmissibleSubset),
    Hyperplane,
    Product,
    Custom,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Schubert(s) => write!(f, "{s}"),
            ClassLabel::Hyperplane => f.write_str("hyperplane"),
            ClassLabel::Product => f.write_str("product"),
            ClassLabel::Custom => f.write_str("custom"),
        }
    }
}

/// Restrictions of an equivariant class to every fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantClass {
    spec: GrassmannianSpec,
    label: ClassLabel,
    values: Vec<CharPoly>,
}

impl EquivariantClass {
    /// `values` must follow the canonical fixed-point order.
    pub fn new(spec: GrassmannianSpec, label: ClassLabel, values: Vec<CharPoly>) -> Self {
        assert_eq!(values.len(), spec.fixed_point_count());
        EquivariantClass { spec, label, values }
    }

    pub fn spec(&self) -> &GrassmannianSpec {
        &self.spec
    }

    pub fn label(&self) -> &ClassLabel {
        &self.label
    }

    pub fn values(&self) -> &[CharPoly] {
        &self.values
    }

    pub fn value(&self, point: usize) -> &CharPoly {
        &self.values[point]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(CharPoly::is_zero)
    }

    pub fn relabeled(mut self, label: ClassLabel) -> Self {
        self.label = label;
        self
    }

    /// Mutable access for building custom (possibly invalid) classes.
    pub fn values_mut(&mut self) -> &mut [CharPoly] {
        &mut self.values
    }

    pub fn scale(&self, c: &CharPoly) -> EquivariantClass {
        EquivariantClass {
            spec: self.spec,
            label: ClassLabel::Custom,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    pub fn add(&self, other: &EquivariantClass) -> Result<EquivariantClass, ClassError> {
        if self.spec != other.spec {
            return Err(ClassError::SpecMismatch);
        }
        Ok(EquivariantClass {
            spec: self.spec,
            label: ClassLabel::Custom,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &EquivariantClass) -> Result<EquivariantClass, ClassError> {
        if self.spec != other.spec {
            return Err(ClassError::SpecMismatch);
        }
        Ok(EquivariantClass {
            spec: self.spec,
            label: ClassLabel::Custom,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
        })
    }
}

/// The unit class.
pub fn unit_class(spec: &GrassmannianSpec) -> EquivariantClass {
    EquivariantClass::new(
        *spec,
        ClassLabel::Custom,
        vec![CharPoly::one(spec.n()); spec.fixed_point_count()],
    )
}

/// `f_H(I) = -Σ_{i∈I} e_i + Σ_{i=1}^k e_{n-i+1}`.
pub fn hyperplane_value(subset: &AdmissibleSubset, spec: &GrassmannianSpec) -> CharPoly {
    let n = spec.n();
    let mut out = CharPoly::zero(n);
    for &i in subset.entries() {
        out -= &CharPoly::signed_var(n, i);
    }
    for i in 1..=spec.k() {
        out += &CharPoly::var(n, n - i + 1);
    }
    out
}

pub fn hyperplane_class(spec: &GrassmannianSpec) -> EquivariantClass {
    let points = crate::subsets::enumerate_admissible(spec);
    EquivariantClass::new(
        *spec,
        ClassLabel::Hyperplane,
        points.iter().map(|p| hyperplane_value(p, spec)).collect(),
    )
}

/// Pointwise product.
pub fn multiply(f: &EquivariantClass, g: &EquivariantClass) -> Result<EquivariantClass, ClassError> {
    if f.spec != g.spec {
        return Err(ClassError::SpecMismatch);
    }
    Ok(EquivariantClass {
        spec: f.spec,
        label: ClassLabel::Product,
        values: f
            .values
            .par_iter()
            .zip(&g.values)
            .map(|(a, b)| a * b)
            .collect(),
    })
}

/// Expansion of a class in the Schubert basis: `g = Σ_L c_L f_L`.
pub type Expansion = BTreeMap<AdmissibleSubset, CharPoly>;

/// The complete family of Schubert classes for one space.
pub struct ClassTable {
    spec: GrassmannianSpec,
    graph: GkmGraph,
    codims: Vec<usize>,
    classes: Vec<EquivariantClass>,
    order: Vec<usize>,
    cache: Mutex<HashMap<(usize, usize), Arc<Expansion>>>,
}

impl fmt::Debug for ClassTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClassTable")
            .field("spec", &self.spec)
            .field("classes", &self.classes.len())
            .finish()
    }
}

/// Tie-break rank inside one codimension: at the middle level of
/// `I2Gr(2, 2n)` the `(i,-i+1)` family depends on the `(i-1,-i)` family.
fn middle_rank(subset: &AdmissibleSubset, spec: &GrassmannianSpec, c: usize) -> usize {
    let late = spec.geometry() == Geometry::Bisymplectic
        && spec.k() == 2
        && c == spec.middle_codim()
        && matches!(subset.entries(), [i, j] if *i > 0 && *j == -i + 1);
    usize::from(late)
}

/// Induction order: decreasing codimension, with the middle-level
/// tie-break. Returned as vertex indices.
pub fn induction_order(spec: &GrassmannianSpec, points: &[AdmissibleSubset]) -> Vec<usize> {
    let keys: Vec<(usize, usize)> = points
        .iter()
        .map(|p| {
            let c = codim(p, spec);
            (c, middle_rank(p, spec, c))
        })
        .collect();
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| keys[b].0.cmp(&keys[a].0).then(keys[a].1.cmp(&keys[b].1)).then(a.cmp(&b)));
    order
}

fn check_supported(spec: &GrassmannianSpec) -> Result<(), ClassError> {
    if spec.k() >= spec.n() && spec.geometry() == Geometry::Bisymplectic {
        return Err(ClassError::UnsupportedSpec {
            n: spec.n(),
            k: spec.k(),
        });
    }
    if spec.geometry() == Geometry::Bisymplectic && spec.k() != 2 {
        return Err(ChevalleyError::UnsupportedK(spec.k()).into());
    }
    Ok(())
}

/// Builds every Schubert class by downward induction.
pub fn compute_class_table(spec: &GrassmannianSpec) -> Result<ClassTable, ClassError> {
    check_supported(spec)?;
    let graph = build_graph(spec);
    let points = graph.vertices().to_vec();
    let count = points.len();
    let codims: Vec<usize> = points.iter().map(|p| codim(p, spec)).collect();
    let order = induction_order(spec, &points);
    let mut position = vec![0; count];
    for (pos, &v) in order.iter().enumerate() {
        position[v] = pos;
    }

    let f_h: Vec<CharPoly> = points.iter().map(|p| hyperplane_value(p, spec)).collect();
    for a in 0..count {
        for b in (a + 1)..count {
            if f_h[a] == f_h[b] {
                return Err(ClassError::ZeroDenominator(points[a].clone(), points[b].clone()));
            }
        }
    }

    let mut rows: Vec<Vec<(usize, CharPoly)>> = vec![Vec::new(); count];
    for c in chevalley_table(spec)? {
        let s = graph.vertex_index(&c.source).expect("known point");
        let t = graph.vertex_index(&c.target).expect("known point");
        if position[t] >= position[s] {
            return Err(ClassError::Cycle {
                from: c.source,
                to: c.target,
            });
        }
        rows[s].push((t, c.value));
    }

    let mut classes: Vec<Option<EquivariantClass>> = vec![None; count];
    let mut start = 0;
    while start < count {
        let key = |v: usize| (codims[v], middle_rank(&points[v], spec, codims[v]));
        let level_key = key(order[start]);
        let end = order[start..]
            .iter()
            .position(|&v| key(v) != level_key)
            .map_or(count, |p| start + p);
        let level: Vec<usize> = order[start..end].to_vec();
        let done = &classes;
        let computed: Vec<Result<(usize, EquivariantClass), ClassError>> = level
            .par_iter()
            .map(|&i| {
                compute_one(spec, &points, &f_h, &rows[i], i, done).map(|c| (i, c))
            })
            .collect();
        for r in computed {
            let (i, c) = r?;
            classes[i] = Some(c);
        }
        start = end;
    }

    Ok(ClassTable {
        spec: *spec,
        graph,
        codims,
        classes: classes.into_iter().map(|c| c.expect("every class computed")).collect(),
        order,
        cache: Mutex::new(HashMap::new()),
    })
}

fn compute_one(
    spec: &GrassmannianSpec,
    points: &[AdmissibleSubset],
    f_h: &[CharPoly],
    row: &[(usize, CharPoly)],
    source: usize,
    done: &[Option<EquivariantClass>],
) -> Result<EquivariantClass, ClassError> {
    let n = spec.n();
    let mut values = Vec::with_capacity(points.len());
    for k in 0..points.len() {
        let mut numerator = CharPoly::zero(n);
        for (j, a) in row {
            let fj = done[*j].as_ref().expect("dependency computed first");
            let v = fj.value(k);
            if v.is_zero() {
                continue;
            }
            match a.as_constant() {
                Some(c) => numerator += &v.scale(&c),
                None => numerator += &(v * a),
            }
        }
        if k == source {
            if !numerator.is_zero() {
                return Err(ClassError::InconsistentTable(points[source].clone()));
            }
            values.push(smooth_point_restriction(&points[source], spec));
            continue;
        }
        if numerator.is_zero() {
            values.push(CharPoly::zero(n));
            continue;
        }
        let denominator = &f_h[k] - &f_h[source];
        let v = numerator
            .try_divide_exact(&denominator)
            .map_err(|reason| ClassError::DivisionFailed {
                class: points[source].clone(),
                point: points[k].clone(),
                reason,
            })?;
        values.push(v);
    }
    Ok(EquivariantClass::new(
        *spec,
        ClassLabel::Schubert(points[source].clone()),
        values,
    ))
}

impl ClassTable {
    /// Wraps externally supplied classes (e.g. read back from JSON).
    /// `classes[i]` must be the class of the `i`-th fixed point.
    pub fn from_classes(
        spec: GrassmannianSpec,
        classes: Vec<EquivariantClass>,
    ) -> Result<ClassTable, ClassError> {
        check_supported(&spec)?;
        let graph = build_graph(&spec);
        if classes.len() != graph.vertices().len() {
            return Err(ClassError::Malformed(format!(
                "expected {} classes, got {}",
                graph.vertices().len(),
                classes.len()
            )));
        }
        let codims = graph.vertices().iter().map(|p| codim(p, &spec)).collect();
        let order = induction_order(&spec, graph.vertices());
        Ok(ClassTable {
            spec,
            graph,
            codims,
            classes,
            order,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn spec(&self) -> &GrassmannianSpec {
        &self.spec
    }

    pub fn graph(&self) -> &GkmGraph {
        &self.graph
    }

    pub fn points(&self) -> &[AdmissibleSubset] {
        self.graph.vertices()
    }

    pub fn codims(&self) -> &[usize] {
        &self.codims
    }

    pub fn index_of(&self, s: &AdmissibleSubset) -> Option<usize> {
        self.graph.vertex_index(s)
    }

    pub fn classes(&self) -> &[EquivariantClass] {
        &self.classes
    }

    pub fn class(&self, s: &AdmissibleSubset) -> Option<&EquivariantClass> {
        self.index_of(s).map(|i| &self.classes[i])
    }

    /// Restriction `f_I(J)`.
    pub fn value(&self, i: &AdmissibleSubset, j: &AdmissibleSubset) -> Option<&CharPoly> {
        Some(self.class(i)?.value(self.index_of(j)?))
    }

    pub fn induction_order(&self) -> &[usize] {
        &self.order
    }

    /// Writes `g` in the Schubert basis by peeling off one basis element at
    /// a time, in reverse induction order.
    pub fn expand_in_basis(&self, g: &EquivariantClass) -> Result<Expansion, ClassError> {
        if g.spec != self.spec {
            return Err(ClassError::SpecMismatch);
        }
        let mut residual = g.values.clone();
        let mut out = Expansion::new();
        for &l in self.order.iter().rev() {
            if residual[l].is_zero() {
                continue;
            }
            let basis = &self.classes[l];
            let c = residual[l]
                .try_divide_exact(basis.value(l))
                .map_err(|_| ClassError::NotInSpan(self.points()[l].clone()))?;
            for (k, r) in residual.iter_mut().enumerate() {
                let b = basis.value(k);
                if !b.is_zero() {
                    *r -= &(b * &c);
                }
            }
            out.insert(self.points()[l].clone(), c);
        }
        if let Some(k) = residual.iter().position(|r| !r.is_zero()) {
            return Err(ClassError::NotInSpan(self.points()[k].clone()));
        }
        Ok(out)
    }

    /// Structure constants of `f_I · f_J`, cached.
    pub fn structure_constants(
        &self,
        i: &AdmissibleSubset,
        j: &AdmissibleSubset,
    ) -> Result<Arc<Expansion>, ClassError> {
        let a = self.index_of(i).ok_or_else(|| ClassError::NotInSpan(i.clone()))?;
        let b = self.index_of(j).ok_or_else(|| ClassError::NotInSpan(j.clone()))?;
        let key = (a.min(b), a.max(b));
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        let product = multiply(&self.classes[a], &self.classes[b])?;
        let expansion = Arc::new(self.expand_in_basis(&product)?);
        self.cache
            .lock()
            .expect("cache lock")
            .insert(key, expansion.clone());
        Ok(expansion)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("class table serializes")
    }

    pub fn from_json_str(src: &str) -> Result<ClassTable, ClassError> {
        #[derive(Deserialize)]
        struct Repr {
            spec: GrassmannianSpec,
            classes: BTreeMap<String, BTreeMap<String, CharPoly>>,
        }
        let repr: Repr =
            serde_json::from_str(src).map_err(|e| ClassError::Malformed(e.to_string()))?;
        let spec = GrassmannianSpec::new(repr.spec.n(), repr.spec.k(), repr.spec.geometry())?;
        let points = crate::subsets::enumerate_admissible(&spec);
        let index: HashMap<&AdmissibleSubset, usize> =
            points.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let parse_key = |key: &str| -> Result<usize, ClassError> {
            let s: AdmissibleSubset = serde_json::from_str(key)
                .map_err(|e| ClassError::Malformed(format!("bad subset key {key:?}: {e}")))?;
            index
                .get(&s)
                .copied()
                .ok_or_else(|| ClassError::Malformed(format!("{key} is not a fixed point")))
        };
        let mut classes: Vec<Option<EquivariantClass>> = vec![None; points.len()];
        for (key, values) in repr.classes {
            let i = parse_key(&key)?;
            let mut vals: Vec<Option<CharPoly>> = vec![None; points.len()];
            for (pkey, poly) in values {
                let k = parse_key(&pkey)?;
                if poly.nvars() > spec.n() {
                    return Err(ClassError::Malformed(format!("too many variables at {pkey}")));
                }
                vals[k] = Some(poly.with_nvars(spec.n()));
            }
            let vals = vals
                .into_iter()
                .enumerate()
                .map(|(k, v)| {
                    v.ok_or_else(|| {
                        ClassError::Malformed(format!("class {key} has no value at {}", points[k]))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            classes[i] = Some(EquivariantClass::new(
                spec,
                ClassLabel::Schubert(points[i].clone()),
                vals,
            ));
        }
        let classes = classes
            .into_iter()
            .enumerate()
            .map(|(i, c)| c.ok_or_else(|| ClassError::Malformed(format!("missing class {}", points[i]))))
            .collect::<Result<Vec<_>, _>>()?;
        ClassTable::from_classes(spec, classes)
    }
}

struct ClassValues<'a>(&'a ClassTable, &'a EquivariantClass);

impl Serialize for ClassValues<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.1.values.len()))?;
        for (p, v) in self.0.points().iter().zip(&self.1.values) {
            map.serialize_entry(&p.to_string(), v)?;
        }
        map.end()
    }
}

struct ClassMap<'a>(&'a ClassTable);

impl Serialize for ClassMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.classes.len()))?;
        for (p, c) in self.0.points().iter().zip(&self.0.classes) {
            map.serialize_entry(&p.to_string(), &ClassValues(self.0, c))?;
        }
        map.end()
    }
}

/// `{"spec": .., "classes": {"[3,-2]": {"[2,1]": <poly>, ..}, ..}}` in
/// canonical order.
impl Serialize for ClassTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("spec", &self.spec)?;
        map.serialize_entry("classes", &ClassMap(self))?;
        map.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// A value is not homogeneous of degree `codim(I)`.
    Degree,
    /// A nonzero value at a point not dominated by `I`.
    Support,
    /// The value at `p_I` is not the product of the positive weights.
    SmoothPoint,
    /// An edge weight does not divide the difference of its endpoint values.
    Divisibility,
    /// The class of the top cell is not identically 1.
    Unit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub class: AdmissibleSubset,
    pub kind: ViolationKind,
    pub points: Vec<AdmissibleSubset>,
    pub detail: String,
}

/// Checks degree, support, smooth-point and curve divisibility conditions
/// for every class. An empty list certifies the table.
pub fn verify_gkm(table: &ClassTable) -> Vec<Violation> {
    let spec = table.spec;
    let points = table.points();
    let graph = &table.graph;
    let top = table.index_of(&maximal_subset(&spec)).expect("top point");
    let mut out: Vec<Violation> = (0..points.len())
        .into_par_iter()
        .flat_map_iter(|i| verify_class(table, i))
        .collect();
    let one = CharPoly::one(spec.n());
    if let Some(k) = table.classes[top].values.iter().position(|v| *v != one) {
        out.push(Violation {
            class: points[top].clone(),
            kind: ViolationKind::Unit,
            points: vec![points[k].clone()],
            detail: format!("value {}", table.classes[top].values[k]),
        });
    }
    debug_assert!(graph.edges().len() <= points.len() * spec.dimension());
    out
}

fn verify_class(table: &ClassTable, i: usize) -> Vec<Violation> {
    let spec = table.spec;
    let points = table.points();
    let class = &table.classes[i];
    let source = &points[i];
    let deg = table.codims[i] as u32;
    let mut out = Vec::new();
    let mut push = |kind, pts: Vec<AdmissibleSubset>, detail: String| {
        out.push(Violation {
            class: source.clone(),
            kind,
            points: pts,
            detail,
        })
    };
    for (k, v) in class.values.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        if !v.is_homogeneous_of_degree(deg) {
            push(
                ViolationKind::Degree,
                vec![points[k].clone()],
                format!("expected degree {deg}, got {}", v.degree()),
            );
        }
        if !dominates(source, &points[k]) {
            push(ViolationKind::Support, vec![points[k].clone()], format!("value {v}"));
        }
    }
    let expected = smooth_point_restriction(source, &spec);
    if class.values[i] != expected {
        push(
            ViolationKind::SmoothPoint,
            vec![source.clone()],
            format!("expected {expected}, got {}", class.values[i]),
        );
    }
    for e in table.graph.edges() {
        let diff = class.value(e.upper) - class.value(e.lower);
        if !divisible_up_to_sign(&diff, &e.weight) {
            push(
                ViolationKind::Divisibility,
                vec![points[e.upper].clone(), points[e.lower].clone()],
                format!("{} does not divide {diff}", e.weight),
            );
        }
    }
    out
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct LefschetzReport {
    pub classes_checked: usize,
    pub class_mismatches: Vec<AdmissibleSubset>,
    pub constants_checked: usize,
    pub constant_mismatches: Vec<(AdmissibleSubset, AdmissibleSubset, AdmissibleSubset)>,
}

impl LefschetzReport {
    pub fn passed(&self) -> bool {
        self.class_mismatches.is_empty() && self.constant_mismatches.is_empty()
    }
}

/// Compares `I2Gr(2,2n)` and `IGr(2,2n)` classes and structure constants
/// below the middle codimension `2n - 3`.
pub fn lefschetz_crosscheck(n: usize) -> Result<LefschetzReport, ClassError> {
    let bisym = compute_class_table(&GrassmannianSpec::bisymplectic(n)?)?;
    let sympl = compute_class_table(&GrassmannianSpec::symplectic(n, 2)?)?;
    lefschetz_compare(&bisym, &sympl)
}

/// Same as [`lefschetz_crosscheck`] on precomputed tables.
pub fn lefschetz_compare(bisym: &ClassTable, sympl: &ClassTable) -> Result<LefschetzReport, ClassError> {
    let bound = bisym.spec.middle_codim();
    let low: Vec<usize> = (0..bisym.points().len())
        .filter(|&i| bisym.codims[i] < bound)
        .collect();
    let mut report = LefschetzReport::default();
    for &i in &low {
        report.classes_checked += 1;
        if bisym.classes[i].values != sympl.classes[i].values {
            report.class_mismatches.push(bisym.points()[i].clone());
        }
    }
    for (a, &i) in low.iter().enumerate() {
        for &j in &low[a..] {
            let (pi, pj) = (&bisym.points()[i], &bisym.points()[j]);
            let nb = bisym.structure_constants(pi, pj)?;
            let ns = sympl.structure_constants(pi, pj)?;
            for &l in &low {
                let pl = &bisym.points()[l];
                report.constants_checked += 1;
                if nb.get(pl) != ns.get(pl) {
                    report.constant_mismatches.push((pi.clone(), pj.clone(), pl.clone()));
                }
            }
        }
    }
    Ok(report)
}

/// `hyperplane_subset` as a vertex index of `table`.
pub fn hyperplane_index(table: &ClassTable) -> usize {
    table
        .index_of(&hyperplane_subset(&table.spec))
        .expect("hyperplane point")
}
