//! Admissible index sets: torus fixed points and their Schubert cells.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::charring::MAX_VARS;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubsetError {
    #[error("need 2 <= k <= n, got n = {n}, k = {k}")]
    BadDimensions { n: usize, k: usize },
    #[error("n = {0} exceeds the supported maximum {MAX_VARS}")]
    TooManyVariables(usize),
    #[error("index 0 is not allowed")]
    ZeroIndex,
    #[error("indices {0} and {1} have the same absolute value")]
    NotAdmissible(i32, i32),
    #[error("index {index} out of range for n = {n}")]
    OutOfRange { index: i32, n: usize },
    #[error("expected {expected} indices, got {got}")]
    WrongSize { expected: usize, got: usize },
    #[error("cannot parse subset {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Geometry {
    Symplectic,
    Bisymplectic,
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Geometry::Symplectic => "symplectic",
            Geometry::Bisymplectic => "bisymplectic",
        })
    }
}

/// `IGr(k, 2n)` or `I2Gr(k, 2n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GrassmannianSpec {
    n: usize,
    k: usize,
    geometry: Geometry,
}

impl GrassmannianSpec {
    pub fn new(n: usize, k: usize, geometry: Geometry) -> Result<Self, SubsetError> {
        if n > MAX_VARS {
            return Err(SubsetError::TooManyVariables(n));
        }
        if k < 2 || k > n {
            return Err(SubsetError::BadDimensions { n, k });
        }
        Ok(GrassmannianSpec { n, k, geometry })
    }

    pub fn bisymplectic(n: usize) -> Result<Self, SubsetError> {
        Self::new(n, 2, Geometry::Bisymplectic)
    }

    pub fn symplectic(n: usize, k: usize) -> Result<Self, SubsetError> {
        Self::new(n, k, Geometry::Symplectic)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn with_geometry(self, geometry: Geometry) -> Self {
        GrassmannianSpec { geometry, ..self }
    }

    pub fn dimension(&self) -> usize {
        let (n, k) = (self.n, self.k);
        match self.geometry {
            Geometry::Bisymplectic => 2 * k * (n - k) + k,
            Geometry::Symplectic => 2 * k * (n - k) + k * (k + 1) / 2,
        }
    }

    /// `2^k * C(n, k)`.
    pub fn fixed_point_count(&self) -> usize {
        (1usize << self.k) * binomial(self.n, self.k)
    }

    /// Codimension of the middle level `2n - 3` where the bisymplectic
    /// Chevalley formula has degree-one coefficients (only meaningful for
    /// `k = 2`).
    pub fn middle_codim(&self) -> usize {
        2 * self.n - 3
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// A set of signed indices `I` with `I ∩ -I = ∅`, stored in strictly
/// descending order.
///
/// `Ord` is the canonical enumeration order: descending lexicographic on
/// the entries, so `(3,2) < (3,1) < (3,-1) < ... < (-2,-3)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AdmissibleSubset(Vec<i32>);

impl AdmissibleSubset {
    /// Builds a subset from entries in any order.
    pub fn new(mut entries: Vec<i32>) -> Result<Self, SubsetError> {
        if entries.contains(&0) {
            return Err(SubsetError::ZeroIndex);
        }
        entries.sort_unstable_by(|a, b| b.cmp(a));
        for (i, &a) in entries.iter().enumerate() {
            for &b in &entries[i + 1..] {
                if a.abs() == b.abs() {
                    return Err(SubsetError::NotAdmissible(a, b));
                }
            }
        }
        Ok(AdmissibleSubset(entries))
    }

    /// Builds a subset from entries that must already be strictly
    /// descending; `None` otherwise or if inadmissible.
    pub fn from_descending(entries: &[i32]) -> Option<Self> {
        if entries.windows(2).any(|w| w[0] <= w[1]) {
            return None;
        }
        AdmissibleSubset::new(entries.to_vec()).ok()
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, index: i32) -> bool {
        self.0.contains(&index)
    }

    /// Whether every entry lies in `{±1..±n}`.
    pub fn fits(&self, n: usize) -> bool {
        self.0.iter().all(|i| i.unsigned_abs() as usize <= n)
    }

    pub fn check_for(&self, spec: &GrassmannianSpec) -> Result<(), SubsetError> {
        if self.len() != spec.k() {
            return Err(SubsetError::WrongSize {
                expected: spec.k(),
                got: self.len(),
            });
        }
        if let Some(&index) = self.0.iter().find(|i| i.unsigned_abs() as usize > spec.n()) {
            return Err(SubsetError::OutOfRange { index, n: spec.n() });
        }
        Ok(())
    }

    pub fn intersection_size(&self, other: &AdmissibleSubset) -> usize {
        self.0.iter().filter(|i| other.contains(**i)).count()
    }

    /// Entries of `self` not in `other`, descending.
    pub fn difference(&self, other: &AdmissibleSubset) -> Vec<i32> {
        self.0.iter().copied().filter(|i| !other.contains(*i)).collect()
    }

    /// Sum of the signed entries.
    pub fn signed_sum(&self) -> i32 {
        self.0.iter().sum()
    }
}

impl Ord for AdmissibleSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for AdmissibleSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AdmissibleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for AdmissibleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Accepts `[3,-2]`, `(3,-2)` or `3,-2`.
impl FromStr for AdmissibleSubset {
    type Err = SubsetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')']);
        let entries = trimmed
            .split(',')
            .map(|t| t.trim().parse::<i32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| SubsetError::Parse(s.to_string()))?;
        AdmissibleSubset::new(entries)
    }
}

impl Serialize for AdmissibleSubset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AdmissibleSubset {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let entries = Vec::<i32>::deserialize(deserializer)?;
        let descending = entries.windows(2).all(|w| w[0] > w[1]);
        if !descending {
            return Err(serde::de::Error::custom("subset entries must be strictly descending"));
        }
        AdmissibleSubset::new(entries).map_err(serde::de::Error::custom)
    }
}

/// All `2^k C(n,k)` fixed points, in canonical order.
pub fn enumerate_admissible(spec: &GrassmannianSpec) -> Vec<AdmissibleSubset> {
    let (n, k) = (spec.n() as i32, spec.k());
    let mut out = Vec::with_capacity(spec.fixed_point_count());
    let mut chosen = Vec::with_capacity(k);
    fn rec(start: i32, n: i32, k: usize, chosen: &mut Vec<i32>, out: &mut Vec<AdmissibleSubset>) {
        if chosen.len() == k {
            for signs in 0u32..(1 << k) {
                let entries = chosen
                    .iter()
                    .enumerate()
                    .map(|(b, &a)| if signs >> b & 1 == 1 { -a } else { a })
                    .collect();
                out.push(AdmissibleSubset::new(entries).expect("distinct absolute values"));
            }
            return;
        }
        for a in start..=n {
            chosen.push(a);
            rec(a + 1, n, k, chosen, out);
            chosen.pop();
        }
    }
    rec(1, n, k, &mut chosen, &mut out);
    out.sort();
    out
}

/// Number of tau-positive tangent weights at `p_I`.
pub fn codim(subset: &AdmissibleSubset, spec: &GrassmannianSpec) -> usize {
    let n = spec.n() as i32;
    let mut count = subset.entries().iter().filter(|&&j| j < 0).count();
    for i in (-n..=n).filter(|&i| i != 0) {
        if subset.contains(i) || subset.contains(-i) {
            continue;
        }
        count += subset.entries().iter().filter(|&&j| i > j).count();
    }
    if spec.geometry() == Geometry::Symplectic {
        let e = subset.entries();
        for (a, &i1) in e.iter().enumerate() {
            count += e[a + 1..].iter().filter(|&&i2| i1 + i2 < 0).count();
        }
    }
    count
}

/// Componentwise comparison of the descending entries.
pub fn dominates(i: &AdmissibleSubset, j: &AdmissibleSubset) -> bool {
    assert_eq!(i.len(), j.len(), "dominance needs subsets of equal size");
    i.entries().iter().zip(j.entries()).all(|(a, b)| a >= b)
}

/// `(n, n-1, ..., n-k+2, n-k)`: the point whose cell closure is the
/// hyperplane section. For `k = n` the last entry is `-1`.
pub fn hyperplane_subset(spec: &GrassmannianSpec) -> AdmissibleSubset {
    let n = spec.n() as i32;
    let k = spec.k() as i32;
    let mut entries: Vec<i32> = (0..k - 1).map(|i| n - i).collect();
    entries.push(if n == k { -1 } else { n - k });
    AdmissibleSubset::new(entries).expect("hyperplane subset is admissible")
}

/// `(n, ..., n-k+1)`: codimension 0.
pub fn maximal_subset(spec: &GrassmannianSpec) -> AdmissibleSubset {
    let n = spec.n() as i32;
    AdmissibleSubset::new((0..spec.k() as i32).map(|i| n - i).collect()).unwrap()
}

/// `(-(n-k+1), ..., -n)`: the point class.
pub fn minimal_subset(spec: &GrassmannianSpec) -> AdmissibleSubset {
    let n = spec.n() as i32;
    AdmissibleSubset::new((0..spec.k() as i32).map(|i| -(n - i)).collect()).unwrap()
}

/// Betti numbers `b^0, b^2, ...` indexed by codimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiSequence(pub Vec<u64>);

impl BettiSequence {
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Prepends `h` zeros.
    pub fn shifted(&self, h: usize) -> BettiSequence {
        let mut v = vec![0; h];
        v.extend_from_slice(&self.0);
        BettiSequence(v)
    }

    fn add(&self, other: &BettiSequence) -> BettiSequence {
        let len = self.0.len().max(other.0.len());
        BettiSequence(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&0) + other.0.get(i).unwrap_or(&0))
                .collect(),
        )
    }

    fn trimmed(mut self) -> BettiSequence {
        while self.0.len() > 1 && self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }
}

impl fmt::Display for BettiSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Histogram of `codim` over all fixed points.
pub fn betti_direct(spec: &GrassmannianSpec) -> BettiSequence {
    let mut values = vec![0u64; spec.dimension() + 1];
    for s in enumerate_admissible(spec) {
        values[codim(&s, spec)] += 1;
    }
    BettiSequence(values)
}

/// Betti numbers of `I2Gr(k, 2n)` from the recursion
/// `S_{k,n+1} = S_{k,n}[k] + S_{k-1,n} + S_{k-1,n}[1 + 2(n+1-k)]`
/// with bases `S_{1,m}` (projective space) and `S_{m,m}` (`(P^1)^m`).
pub fn betti_recursive(k: usize, n: usize) -> Result<BettiSequence, SubsetError> {
    if k < 1 || k > n {
        return Err(SubsetError::BadDimensions { n, k });
    }
    Ok(betti_rec(k, n))
}

fn betti_rec(k: usize, n: usize) -> BettiSequence {
    if k == 1 {
        return BettiSequence(vec![1; 2 * n]);
    }
    if k == n {
        return BettiSequence((0..=n).map(|i| binomial(n, i) as u64).collect());
    }
    let prev = betti_rec(k, n - 1);
    let lower = betti_rec(k - 1, n - 1);
    prev.shifted(k)
        .add(&lower)
        .add(&lower.shifted(1 + 2 * (n - k)))
        .trimmed()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(e: &[i32]) -> AdmissibleSubset {
        AdmissibleSubset::new(e.to_vec()).unwrap()
    }

    fn bisym(n: usize) -> GrassmannianSpec {
        GrassmannianSpec::bisymplectic(n).unwrap()
    }

    #[test]
    fn fixed_point_counts() {
        assert_eq!(enumerate_admissible(&bisym(3)).len(), 12);
        assert_eq!(enumerate_admissible(&bisym(4)).len(), 24);
        assert_eq!(
            enumerate_admissible(&bisym(2)),
            vec![s(&[2, 1]), s(&[2, -1]), s(&[1, -2]), s(&[-1, -2])]
        );
    }

    #[test]
    fn canonical_order_is_descending_lex() {
        let all = enumerate_admissible(&bisym(3));
        assert_eq!(all[0], s(&[3, 2]));
        assert_eq!(all[1], s(&[3, 1]));
        assert_eq!(all.last().unwrap(), &s(&[-2, -3]));
        assert!(all.windows(2).all(|w| w[0].entries() > w[1].entries()));
    }

    #[test]
    fn codimension_examples() {
        let b3 = bisym(3);
        assert_eq!(codim(&s(&[3, 1]), &b3), 1);
        assert_eq!(codim(&s(&[3, 2]), &b3), 0);
        assert_eq!(codim(&s(&[-2, -3]), &b3), 6);
        let b4 = bisym(4);
        assert_eq!(codim(&s(&[2, 1]), &b4), 4);
        assert_eq!(codim(&s(&[4, -2]), &b4), 4);
        let s3 = GrassmannianSpec::symplectic(3, 2).unwrap();
        assert_eq!(codim(&s(&[3, -1]), &s3), 2);
        assert_eq!(codim(&s(&[1, -2]), &s3), 4);
        assert_eq!(codim(&s(&[-2, -3]), &s3), 7);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&s(&[3, 1]), &s(&[2, 1])));
        assert!(!dominates(&s(&[3, -2]), &s(&[2, -1])));
        assert!(dominates(&s(&[3, -2]), &s(&[3, -2])));
    }

    #[test]
    fn hyperplane_examples() {
        assert_eq!(hyperplane_subset(&bisym(3)), s(&[3, 1]));
        assert_eq!(hyperplane_subset(&bisym(4)), s(&[4, 2]));
        for n in 3..=8 {
            assert_eq!(codim(&hyperplane_subset(&bisym(n)), &bisym(n)), 1);
        }
        let s53 = GrassmannianSpec::symplectic(5, 3).unwrap();
        assert_eq!(hyperplane_subset(&s53), s(&[5, 4, 2]));
        assert_eq!(codim(&hyperplane_subset(&s53), &s53), 1);
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti_direct(&bisym(3)).0, vec![1, 1, 2, 4, 2, 1, 1]);
        assert_eq!(betti_direct(&bisym(4)).0, vec![1, 1, 2, 2, 3, 6, 3, 2, 2, 1, 1]);
        assert_eq!(betti_direct(&bisym(2)).0, vec![1, 2, 1]);
        assert_eq!(betti_recursive(2, 4).unwrap().0, vec![1, 1, 2, 2, 3, 6, 3, 2, 2, 1, 1]);
        assert_eq!(betti_recursive(3, 4).unwrap().0, vec![1, 1, 2, 6, 6, 6, 6, 2, 1, 1]);
        assert_eq!(betti_recursive(1, 3).unwrap().0, vec![1; 6]);
        assert!(betti_recursive(0, 3).is_err());
        assert!(betti_recursive(4, 3).is_err());
    }

    #[test]
    fn bad_specs_rejected() {
        assert!(GrassmannianSpec::bisymplectic(1).is_err());
        assert!(GrassmannianSpec::new(3, 4, Geometry::Symplectic).is_err());
        assert!(GrassmannianSpec::bisymplectic(17).is_err());
    }

    #[test]
    fn subset_construction_errors() {
        assert_eq!(AdmissibleSubset::new(vec![1, 0]), Err(SubsetError::ZeroIndex));
        assert_eq!(AdmissibleSubset::new(vec![2, -2]), Err(SubsetError::NotAdmissible(2, -2)));
        assert_eq!(AdmissibleSubset::from_descending(&[-2, -1]), None);
        assert_eq!("(3,-2)".parse::<AdmissibleSubset>().unwrap(), s(&[3, -2]));
        assert!(serde_json::from_str::<AdmissibleSubset>("[-2,3]").is_err());
        assert_eq!(serde_json::to_string(&s(&[3, -2])).unwrap(), "[3,-2]");
    }
}
