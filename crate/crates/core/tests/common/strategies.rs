use std::sync::OnceLock;

use i2gr_core::charring::Monomial;
use i2gr_core::gkm::build_graph;
use i2gr_core::{AdmissibleSubset, CharPoly, GkmGraph, Geometry, GrassmannianSpec};
use num_bigint::BigInt;
use proptest::prelude::*;

pub const NVARS: usize = 4;

/// Sparse polynomials in `e1..e4` with small exponents and coefficients.
pub fn poly() -> impl Strategy<Value = CharPoly> {
    prop::collection::vec((prop::array::uniform4(0u32..3), -9i64..=9), 0..6).prop_map(|terms| {
        CharPoly::from_terms(
            NVARS,
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::from_exponents(&e).unwrap(), BigInt::from(c))),
        )
    })
}

pub fn nonzero_poly() -> impl Strategy<Value = CharPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

/// Linear forms `sum c_i e_i`.
pub fn linear() -> impl Strategy<Value = CharPoly> {
    prop::collection::vec(-5i64..=5, NVARS).prop_map(|c| CharPoly::linear(&c))
}

/// `(n, k)` with `2 <= k <= n <= 8`.
pub fn shape() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=8).prop_flat_map(|n| (Just(n), 2usize..=n))
}

/// An admissible `k`-subset of `{±1..±n}`.
pub fn subset(n: usize, k: usize) -> impl Strategy<Value = AdmissibleSubset> {
    (
        Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(),
        prop::collection::vec(any::<bool>(), k),
    )
        .prop_map(move |(idx, signs)| {
            let e = idx[..k]
                .iter()
                .zip(signs)
                .map(|(&i, neg)| if neg { -i } else { i })
                .collect();
            AdmissibleSubset::new(e).unwrap()
        })
}

/// Three subsets of one shape.
pub fn subset_triple() -> impl Strategy<Value = (AdmissibleSubset, AdmissibleSubset, AdmissibleSubset)> {
    shape().prop_flat_map(|(n, k)| (subset(n, k), subset(n, k), subset(n, k)))
}

/// Moment graphs small enough to build once per test binary.
pub fn graphs() -> &'static [GkmGraph] {
    static GRAPHS: OnceLock<Vec<GkmGraph>> = OnceLock::new();
    GRAPHS.get_or_init(|| {
        let mut specs = Vec::new();
        for n in 3..=6 {
            specs.push(GrassmannianSpec::bisymplectic(n).unwrap());
        }
        for n in 2..=5 {
            for k in 2..=n {
                specs.push(GrassmannianSpec::new(n, k, Geometry::Symplectic).unwrap());
            }
        }
        specs.iter().map(build_graph).collect()
    })
}

/// A graph and one of its vertices.
pub fn graph_vertex() -> impl Strategy<Value = (usize, usize)> {
    (0..graphs().len()).prop_flat_map(|g| (Just(g), 0..graphs()[g].vertices().len()))
}
