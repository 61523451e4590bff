//! Shared helpers for the integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use i2gr_core::charring::Monomial;
use i2gr_core::gkm::{build_graph, smooth_point_restriction};
use i2gr_core::subsets::{codim, dominates, enumerate_admissible};
use i2gr_core::{AdmissibleSubset, CharPoly, GrassmannianSpec};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn s(e: &[i32]) -> AdmissibleSubset {
    AdmissibleSubset::new(e.to_vec()).unwrap()
}

pub fn bisym(n: usize) -> GrassmannianSpec {
    GrassmannianSpec::bisymplectic(n).unwrap()
}

pub fn sympl(n: usize, k: usize) -> GrassmannianSpec {
    GrassmannianSpec::symplectic(n, k).unwrap()
}

type Exps = Vec<u32>;

/// `Σ c_u x_u + c`, the last slot holding the constant.
type Affine = Vec<BigRational>;

/// All exponent vectors of total degree `d` in `n` variables.
fn monomials(n: usize, d: u32) -> Vec<Exps> {
    if n == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

type RatPoly = BTreeMap<Exps, BigRational>;

fn rat_mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut out = RatPoly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Exps = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            *out.entry(m).or_insert_with(BigRational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `x^m` restricted to the hyperplane `w = 0`, where `w` has a nonzero
/// coefficient at variable `j` and `x_j` is eliminated.
fn restrict_monomial(m: &Exps, w: &[BigInt], j: usize) -> RatPoly {
    let n = m.len();
    let mut sub = RatPoly::new();
    for (i, c) in w.iter().enumerate() {
        if i != j && !c.is_zero() {
            let mut e = vec![0; n];
            e[i] = 1;
            sub.insert(e, -BigRational::new(c.clone(), w[j].clone()));
        }
    }
    let mut rest = m.clone();
    rest[j] = 0;
    let mut out: RatPoly = [(rest, BigRational::one())].into_iter().collect();
    for _ in 0..m[j] {
        out = rat_mul(&out, &sub);
    }
    out
}

/// Row-reduces `rows` (augmented, last column constant) in place and
/// returns the pivot columns.
fn row_reduce(rows: &mut [Affine], unknowns: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..unknowns {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Fixed points where `f_I` may be nonzero.
pub fn admissible_support(i: &AdmissibleSubset, spec: &GrassmannianSpec) -> Vec<AdmissibleSubset> {
    let ci = codim(i, spec);
    let e = i.entries();
    let special = e[0] > 0 && e[1] == -e[0] + 1;
    let a = e[0];
    let pair = |x: i32, y: i32| AdmissibleSubset::from_descending(&[x, y]).filter(|p| p.fits(spec.n()));
    let same_level: Vec<AdmissibleSubset> = if special {
        [pair(a, -a - 1), pair(a - 2, -a + 1)].into_iter().flatten().collect()
    } else {
        Vec::new()
    };
    let excluded: Vec<AdmissibleSubset> = if special {
        [pair(a - 1, -a), pair(a - 1, -a - 1), pair(a - 2, -a)]
            .into_iter()
            .flatten()
            .collect()
    } else {
        Vec::new()
    };
    enumerate_admissible(spec)
        .into_iter()
        .filter(|k| k != i && dominates(i, k) && !excluded.contains(k))
        .filter(|k| codim(k, spec) > ci || same_level.contains(k))
        .collect()
}

/// Solves for `f_I` from support, degree, the smooth-point value and curve
/// divisibility alone. Returns `None` unless the solution is unique.
pub fn solve_class(i: &AdmissibleSubset, spec: &GrassmannianSpec) -> Option<Vec<CharPoly>> {
    let n = spec.n();
    let points = enumerate_admissible(spec);
    let graph = build_graph(spec);
    let d = codim(i, spec) as u32;
    let basis = monomials(n, d);
    let support = admissible_support(i, spec);
    let mut slot: BTreeMap<AdmissibleSubset, usize> = BTreeMap::new();
    for (u, k) in support.iter().enumerate() {
        slot.insert(k.clone(), u * basis.len());
    }
    let unknowns = support.len() * basis.len();
    let fixed = smooth_point_restriction(i, spec);

    // Value at each point as monomial -> affine form.
    let value = |k: &AdmissibleSubset| -> BTreeMap<Exps, Affine> {
        let mut out = BTreeMap::new();
        if k == i {
            for (m, c) in fixed.terms() {
                let mut a = vec![BigRational::zero(); unknowns + 1];
                a[unknowns] = BigRational::from_integer(c.clone());
                out.insert((1..=n).map(|v| m.exponent(v)).collect(), a);
            }
        } else if let Some(&base) = slot.get(k) {
            for (t, m) in basis.iter().enumerate() {
                let mut a = vec![BigRational::zero(); unknowns + 1];
                a[base + t] = BigRational::one();
                out.insert(m.clone(), a);
            }
        }
        out
    };

    let mut rows: Vec<Affine> = Vec::new();
    for e in graph.edges() {
        let (p, q) = (&points[e.upper], &points[e.lower]);
        let mut diff = value(p);
        for (m, a) in value(q) {
            let entry = diff
                .entry(m)
                .or_insert_with(|| vec![BigRational::zero(); unknowns + 1]);
            for (x, y) in entry.iter_mut().zip(a) {
                *x -= y;
            }
        }
        if diff.is_empty() {
            continue;
        }
        let w = e.weight.coefficients(n);
        let j = w.iter().position(|c| !c.is_zero()).expect("nonzero weight");
        let mut restricted: BTreeMap<Exps, Affine> = BTreeMap::new();
        for (m, a) in &diff {
            for (rm, rc) in restrict_monomial(m, &w, j) {
                let entry = restricted
                    .entry(rm)
                    .or_insert_with(|| vec![BigRational::zero(); unknowns + 1]);
                for (x, y) in entry.iter_mut().zip(a) {
                    *x += y * &rc;
                }
            }
        }
        rows.extend(restricted.into_values().filter(|r| r.iter().any(|x| !x.is_zero())));
    }

    let pivots = row_reduce(&mut rows, unknowns);
    // Inconsistent: a row 0 = c with c != 0.
    if rows.iter().any(|r| r[..unknowns].iter().all(Zero::is_zero) && !r[unknowns].is_zero()) {
        return None;
    }
    if pivots.len() != unknowns {
        return None;
    }
    let mut solution = vec![BigRational::zero(); unknowns];
    for (r, &col) in pivots.iter().enumerate() {
        solution[col] = -rows[r][unknowns].clone();
    }
    let to_poly = |coeffs: &[BigRational]| -> Option<CharPoly> {
        let mut terms = Vec::new();
        for (m, c) in basis.iter().zip(coeffs) {
            if !c.is_integer() {
                return None;
            }
            if !c.is_zero() {
                terms.push((Monomial::from_exponents(m)?, c.to_integer()));
            }
        }
        Some(CharPoly::from_terms(n, terms))
    };
    points
        .iter()
        .map(|k| {
            if k == i {
                Some(fixed.clone())
            } else if let Some(&base) = slot.get(k) {
                to_poly(&solution[base..base + basis.len()])
            } else {
                Some(CharPoly::zero(n))
            }
        })
        .collect()
}

pub mod strategies;
