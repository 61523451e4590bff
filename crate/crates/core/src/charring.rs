//! Exact sparse polynomials in the torus characters `e1..en`.
//!
//! Coefficients are arbitrary-precision integers. Monomials are stored as
//! fixed-width exponent arrays so that they are `Copy` and cheap to compare;
//! at most [`MAX_VARS`] variables are supported.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest supported number of characters.
pub const MAX_VARS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisionError {
    #[error("division by the zero polynomial")]
    DivisorZero,
    #[error("polynomial is not divisible")]
    NotDivisible,
    /// Divisible over the rationals, but the quotient has a non-integral
    /// coefficient.
    #[error("quotient is not integral")]
    NonIntegral,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharPolyError {
    #[error("expected a homogeneous polynomial of degree 1, got degree {0}")]
    NotLinear(Degree),
    #[error("variable index {0} out of range (1..={MAX_VARS})")]
    VariableOutOfRange(usize),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// Total degree of a polynomial; the zero polynomial has degree `MinusInfinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(u32),
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Exponent vector. Ordered by graded reverse-lexicographic order with
/// `e1 < e2 < ... < en`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; MAX_VARS] };

    /// `e_var`, 1-based.
    pub fn var(var: usize) -> Monomial {
        assert!((1..=MAX_VARS).contains(&var), "variable e{var} out of range");
        let mut m = Monomial::ONE;
        m.exps[var - 1] = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Option<Monomial> {
        if exps.len() > MAX_VARS {
            return None;
        }
        let mut m = Monomial::ONE;
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u8::try_from(e).ok()?;
        }
        Some(m)
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var - 1] as u32
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// Highest variable index with a nonzero exponent (0 for the unit).
    pub fn support_len(&self) -> usize {
        self.exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    fn checked_mul(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::ONE;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("exponent overflow");
        }
        out
    }

    /// `self / other`; caller guarantees `other` divides `self`.
    fn div_unchecked(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::ONE;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i] - other.exps[i];
        }
        out
    }

    fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            // e1 is the smallest variable: the first differing exponent,
            // scanning from e1 upwards, decides, with the smaller exponent
            // giving the larger monomial.
            for i in 0..MAX_VARS {
                match self.exps[i].cmp(&other.exps[i]) {
                    Ordering::Equal => continue,
                    ord => return ord.reverse(),
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps[..self.support_len()])
    }
}

/// Polynomial in `e1..en` with integer coefficients.
///
/// `nvars` is the ambient number of characters; it only affects
/// serialization and is ignored by equality. Arithmetic between
/// polynomials with different `nvars` uses the larger one.
#[derive(Clone)]
pub struct CharPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl PartialEq for CharPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for CharPoly {}

impl std::hash::Hash for CharPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl CharPoly {
    pub fn zero(nvars: usize) -> CharPoly {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        CharPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> CharPoly {
        CharPoly::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> CharPoly {
        CharPoly::monomial(nvars, Monomial::ONE, c)
    }

    pub fn monomial(nvars: usize, m: Monomial, c: impl Into<BigInt>) -> CharPoly {
        let mut p = CharPoly::zero(nvars);
        let c = c.into();
        assert!(m.support_len() <= nvars, "monomial uses more than {nvars} variables");
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// The character `e_var`, 1-based.
    pub fn var(nvars: usize, var: usize) -> CharPoly {
        CharPoly::monomial(nvars, Monomial::var(var), 1)
    }

    /// The character attached to a signed index: `e_i` for `i > 0` and
    /// `-e_{-i}` for `i < 0`.
    pub fn signed_var(nvars: usize, index: i32) -> CharPoly {
        assert!(index != 0, "signed index 0 has no character");
        let v = CharPoly::var(nvars, index.unsigned_abs() as usize);
        if index > 0 {
            v
        } else {
            -v
        }
    }

    /// Linear form `sum c_i e_i`, `coeffs[0]` being the coefficient of `e1`.
    pub fn linear(coeffs: &[i64]) -> CharPoly {
        let mut p = CharPoly::zero(coeffs.len());
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                p.terms.insert(Monomial::var(i + 1), BigInt::from(c));
            }
        }
        p
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, BigInt)>,
    ) -> CharPoly {
        let mut p = CharPoly::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Same polynomial, reported in a (possibly) wider ambient ring.
    pub fn with_nvars(mut self, nvars: usize) -> CharPoly {
        assert!(nvars <= MAX_VARS);
        assert!(
            self.terms.keys().all(|m| m.support_len() <= nvars),
            "polynomial uses more than {nvars} variables"
        );
        self.nvars = nvars;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing term order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(Monomial::degree)
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite)
    }

    /// True for the zero polynomial and for polynomials whose terms all share
    /// one total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// Constant term: the image under `e_i -> 0`.
    pub fn evaluate_at_zero(&self) -> BigInt {
        self.coefficient(&Monomial::ONE)
    }

    /// Returns the constant if the polynomial has degree at most 0.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// Evaluation at an integer point; `point[0]` is the value of `e1`.
    pub fn evaluate(&self, point: &[BigInt]) -> BigInt {
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate().take(MAX_VARS) {
                let e = m.exps[i];
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// The one-parameter specialization `e_i -> i` of a linear form; the
    /// zero form maps to 0.
    pub fn tau_value(&self) -> Result<BigInt, CharPolyError> {
        if !self.is_zero() && !self.is_homogeneous_of_degree(1) {
            return Err(CharPolyError::NotLinear(self.degree()));
        }
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                let var = m.support_len();
                c * BigInt::from(var)
            })
            .sum())
    }

    /// gcd of the coefficients (0 for the zero polynomial), always >= 0.
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn scale(&self, c: &BigInt) -> CharPoly {
        if c.is_zero() {
            return CharPoly::zero(self.nvars);
        }
        CharPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// Exact quotient of the coefficients by `c`; `None` unless `c` divides
    /// every coefficient.
    pub fn div_scalar(&self, c: &BigInt) -> Option<CharPoly> {
        if c.is_zero() {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (m, x) in &self.terms {
            let (q, r) = x.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            terms.insert(*m, q);
        }
        Some(CharPoly {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn pow(&self, e: u32) -> CharPoly {
        let mut acc = CharPoly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        self.nvars = self.nvars.max(m.support_len());
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Exact quotient `self / divisor` in `Z[e1..en]`.
    ///
    /// Multivariate long division against the single divisor in grevlex
    /// order. When the leading coefficients stop dividing over the integers
    /// the division is rerun over the rationals to tell `NonIntegral` apart
    /// from `NotDivisible`.
    pub fn try_divide_exact(&self, divisor: &CharPoly) -> Result<CharPoly, DivisionError> {
        let (lead_m, lead_c) = divisor.leading_term().ok_or(DivisionError::DivisorZero)?;
        let nvars = self.nvars.max(divisor.nvars);
        let mut rem = self.terms.clone();
        let mut quot = CharPoly::zero(nvars);
        while let Some((m, c)) = rem.last_key_value() {
            if !lead_m.divides(m) {
                return Err(DivisionError::NotDivisible);
            }
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(if rational_divides(self, divisor) {
                    DivisionError::NonIntegral
                } else {
                    DivisionError::NotDivisible
                });
            }
            let qm = m.div_unchecked(lead_m);
            for (dm, dc) in &divisor.terms {
                let key = dm.checked_mul(&qm);
                let entry = rem.entry(key).or_insert_with(BigInt::zero);
                *entry -= dc * &qc;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.terms.insert(qm, qc);
        }
        Ok(quot)
    }

    /// Whether `divisor` divides `self` over the rationals. Sign-agnostic by
    /// construction; the zero polynomial is divisible by everything nonzero.
    pub fn divisible_by(&self, divisor: &CharPoly) -> bool {
        matches!(
            self.try_divide_exact(divisor),
            Ok(_) | Err(DivisionError::NonIntegral)
        )
    }

    /// Parses expressions such as `2*e1^2*e3 - e2 + 7` (also accepts `t`
    /// and `ε` as the variable letter).
    pub fn parse(nvars: usize, src: &str) -> Result<CharPoly, CharPolyError> {
        parse_poly(nvars, src)
    }
}

fn rational_divides(p: &CharPoly, q: &CharPoly) -> bool {
    let Some((lead_m, lead_c)) = q.leading_term() else {
        return false;
    };
    let lead_c = BigRational::from_integer(lead_c.clone());
    let mut rem: BTreeMap<Monomial, BigRational> = p
        .terms
        .iter()
        .map(|(m, c)| (*m, BigRational::from_integer(c.clone())))
        .collect();
    while let Some((m, c)) = rem.last_key_value() {
        if !lead_m.divides(m) {
            return false;
        }
        let qc = c / &lead_c;
        let qm = m.div_unchecked(lead_m);
        for (dm, dc) in &q.terms {
            let key = dm.checked_mul(&qm);
            let entry = rem.entry(key).or_insert_with(BigRational::zero);
            *entry -= &qc * BigRational::from_integer(dc.clone());
            if entry.is_zero() {
                rem.remove(&key);
            }
        }
    }
    true
}

/// True iff `w` (or equivalently `-w`) divides `p`.
pub fn divisible_up_to_sign(p: &CharPoly, w: &Weight) -> bool {
    p.divisible_by(w.as_poly())
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let vars: Vec<String> = (1..=m.support_len())
                .filter(|&v| m.exponent(v) > 0)
                .map(|v| match m.exponent(v) {
                    1 => format!("e{v}"),
                    e => format!("e{v}^{e}"),
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly({self})")
    }
}

impl Add<&CharPoly> for &CharPoly {
    type Output = CharPoly;
    fn add(self, rhs: &CharPoly) -> CharPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for CharPoly {
    type Output = CharPoly;
    fn add(mut self, rhs: CharPoly) -> CharPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&CharPoly> for CharPoly {
    fn add_assign(&mut self, rhs: &CharPoly) {
        self.nvars = self.nvars.max(rhs.nvars);
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Sub<&CharPoly> for &CharPoly {
    type Output = CharPoly;
    fn sub(self, rhs: &CharPoly) -> CharPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for CharPoly {
    type Output = CharPoly;
    fn sub(mut self, rhs: CharPoly) -> CharPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&CharPoly> for CharPoly {
    fn sub_assign(&mut self, rhs: &CharPoly) {
        self.nvars = self.nvars.max(rhs.nvars);
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Neg for CharPoly {
    type Output = CharPoly;
    fn neg(mut self) -> CharPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &CharPoly {
    type Output = CharPoly;
    fn neg(self) -> CharPoly {
        -self.clone()
    }
}

impl Mul<&CharPoly> for &CharPoly {
    type Output = CharPoly;
    fn mul(self, rhs: &CharPoly) -> CharPoly {
        let mut out = CharPoly::zero(self.nvars.max(rhs.nvars));
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.checked_mul(mb)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        out.terms = acc;
        out
    }
}

impl Mul for CharPoly {
    type Output = CharPoly;
    fn mul(self, rhs: CharPoly) -> CharPoly {
        &self * &rhs
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    c: String,
    e: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for CharPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            terms: self
                .terms()
                .map(|(m, c)| TermRepr {
                    c: c.to_string(),
                    e: m.exponents(self.nvars),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CharPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let nvars = repr.terms.first().map_or(0, |t| t.e.len());
        let mut p = CharPoly::zero(nvars.min(MAX_VARS));
        for t in repr.terms {
            if t.e.len() != nvars {
                return Err(D::Error::custom("inconsistent exponent vector lengths"));
            }
            let m = Monomial::from_exponents(&t.e)
                .ok_or_else(|| D::Error::custom("exponent vector too long or exponent too large"))?;
            let c: BigInt = t
                .c
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.c)))?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficient stored"));
            }
            if p.terms.insert(m, c).is_some() {
                return Err(D::Error::custom("repeated monomial"));
            }
        }
        Ok(p)
    }
}

/// A homogeneous degree-1 polynomial: a torus character.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Weight(CharPoly);

impl Weight {
    pub fn new(p: CharPoly) -> Result<Weight, CharPolyError> {
        if p.is_zero() || !p.is_homogeneous_of_degree(1) {
            return Err(CharPolyError::NotLinear(p.degree()));
        }
        Ok(Weight(p))
    }

    /// `e_a - e_b` in the signed-index convention (`e_{-i} = -e_i`).
    pub fn difference(nvars: usize, a: i32, b: i32) -> Weight {
        Weight::new(CharPoly::signed_var(nvars, a) - CharPoly::signed_var(nvars, b))
            .expect("difference of distinct characters")
    }

    /// `e_a + e_b` in the signed-index convention.
    pub fn sum(nvars: usize, a: i32, b: i32) -> Weight {
        Weight::new(CharPoly::signed_var(nvars, a) + CharPoly::signed_var(nvars, b))
            .expect("sum of non-opposite characters")
    }

    /// `c * e_a` in the signed-index convention.
    pub fn multiple(nvars: usize, c: i64, a: i32) -> Weight {
        Weight::new(CharPoly::signed_var(nvars, a).scale(&BigInt::from(c)))
            .expect("nonzero multiple")
    }

    pub fn as_poly(&self) -> &CharPoly {
        &self.0
    }

    pub fn into_poly(self) -> CharPoly {
        self.0
    }

    pub fn tau_value(&self) -> i64 {
        self.0
            .tau_value()
            .expect("weights are linear")
            .to_i64()
            .expect("weight tau value fits in i64")
    }

    pub fn is_tau_positive(&self) -> bool {
        self.tau_value() > 0
    }

    /// Coefficient vector `[c_1, .., c_n]`.
    pub fn coefficients(&self, nvars: usize) -> Vec<BigInt> {
        (1..=nvars)
            .map(|v| self.0.coefficient(&Monomial::var(v)))
            .collect()
    }

    /// The representative with positive tau value.
    pub fn tau_positive(self) -> Weight {
        if self.tau_value() < 0 {
            Weight(-self.0)
        } else {
            self
        }
    }

    /// Whether `self` and `other` are rational multiples of each other.
    pub fn is_proportional_to(&self, other: &Weight) -> bool {
        let n = self.0.nvars.max(other.0.nvars);
        let a = self.coefficients(n);
        let b = other.coefficients(n);
        for i in 0..n {
            for j in (i + 1)..n {
                if &a[i] * &b[j] != &a[j] * &b[i] {
                    return false;
                }
            }
        }
        true
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(-self.0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight({})", self.0)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Weight::new(CharPoly::deserialize(deserializer)?).map_err(D::Error::custom)
    }
}

fn parse_poly(nvars: usize, src: &str) -> Result<CharPoly, CharPolyError> {
    let err = |msg: &str| CharPolyError::Parse(format!("{msg} in {src:?}"));
    let cleaned: String = src
        .replace('ε', "e")
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect();
    if cleaned.is_empty() {
        return Err(err("empty input"));
    }
    let mut out = CharPoly::zero(nvars);
    // Split into signed terms.
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for (i, ch) in cleaned.chars().enumerate() {
        if (ch == '+' || ch == '-') && !(i > 0 && current.ends_with('^')) {
            if !current.is_empty() {
                terms.push((negative, std::mem::take(&mut current)));
            } else if i > 0 {
                return Err(err("dangling sign"));
            }
            negative = ch == '-';
        } else {
            current.push(ch);
        }
    }
    if current.is_empty() {
        return Err(err("trailing sign"));
    }
    terms.push((negative, current));

    for (negative, term) in terms {
        let mut coeff = BigInt::one();
        let mut mono = Monomial::ONE;
        for factor in term.split('*') {
            if factor.is_empty() {
                return Err(err("empty factor"));
            }
            let first = factor.chars().next().unwrap();
            if first == 'e' || first == 't' {
                let (var, exp) = match factor[1..].split_once('^') {
                    Some((v, e)) => (v, e.parse::<u8>().map_err(|_| err("bad exponent"))?),
                    None => (&factor[1..], 1),
                };
                let var: usize = var.parse().map_err(|_| err("bad variable index"))?;
                if var == 0 || var > nvars {
                    return Err(CharPolyError::VariableOutOfRange(var));
                }
                mono.exps[var - 1] = mono.exps[var - 1]
                    .checked_add(exp)
                    .ok_or_else(|| err("exponent overflow"))?;
            } else {
                let c: BigInt = factor.parse().map_err(|_| err("bad coefficient"))?;
                coeff *= c;
            }
        }
        if negative {
            coeff = -coeff;
        }
        out.add_term(mono, coeff);
    }
    out.nvars = nvars;
    Ok(out)
}
