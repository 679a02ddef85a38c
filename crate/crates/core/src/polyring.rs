//! Exact integer polynomials, Laurent polynomials and truncated power series
//! in `z` with polynomial coefficients in `x`.
//!
//! All coefficients are arbitrary-precision; every constructor and operation
//! leaves its result in canonical form (no trailing zeros, zero polynomial =
//! empty coefficient list).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A polynomial with exact integer coefficients in ascending degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::new(vec![c.into()])
    }

    /// The monomial `c·x^d`.
    pub fn monomial(c: impl Into<BigInt>, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.push(c.into());
        IntPoly::new(coeffs)
    }

    /// `x`.
    pub fn x() -> Self {
        IntPoly::monomial(1, 1)
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 + x + … + x^k`.
    pub fn geometric(k: usize) -> Self {
        IntPoly {
            coeffs: vec![BigInt::one(); k + 1],
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^d` (zero beyond the degree).
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        self.coeffs.last().is_none_or(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^d`.
    pub fn shift(&self, d: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation at an exact integer.
    pub fn eval(&self, v: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * v + c)
    }

    /// `p(u^m)`.
    pub fn substitute_power(&self, m: usize) -> IntPoly {
        assert!(m >= 1, "substitution power must be positive");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * m + 1];
        for (d, c) in self.coeffs.iter().enumerate() {
            coeffs[d * m] = c.clone();
        }
        IntPoly { coeffs }
    }

    /// Every `m`-th coefficient: the result has `coeff(d) = self.coeff(m·d)`.
    pub fn extract_stride(&self, m: usize) -> IntPoly {
        assert!(m >= 1, "stride must be positive");
        IntPoly::new(self.coeffs.iter().step_by(m).cloned().collect())
    }

    /// `p(x + shift)`, by Horner's scheme in the ring.
    pub fn translate(&self, shift: i64) -> IntPoly {
        let lin = IntPoly::from_i64s(&[shift, 1]);
        self.coeffs.iter().rev().fold(IntPoly::zero(), |acc, c| {
            &(&acc * &lin) + &IntPoly::constant(c.clone())
        })
    }

    /// `"[1, 32, 35, 4]"`.
    pub fn to_list_string(&self) -> String {
        let items: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", items.join(", "))
    }

    /// Comma-separated coefficients, `"1,32,35,4"` (`"0"` for zero).
    pub fn to_csv(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let items: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        items.join(",")
    }

    /// Pretty form in the variable `var`, e.g. `1 + 32*x + 35*x^2 + 4*x^3`.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let term = match d {
                0 => mag.to_string(),
                1 if mag.is_one() => var.to_string(),
                1 => format!("{mag}*{var}"),
                _ if mag.is_one() => format!("{var}^{d}"),
                _ => format!("{mag}*{var}^{d}"),
            };
            out.push_str(&term);
        }
        out
    }

    /// Parses the list form `"[1, 32, 35, 4]"` (brackets optional).
    pub fn parse_list(s: &str) -> Result<IntPoly> {
        let t = s.trim();
        let t = t
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(t)
            .trim();
        if t.is_empty() {
            return Ok(IntPoly::zero());
        }
        t.split(',')
            .map(|c| {
                let c = c.trim().trim_matches('"');
                c.parse::<BigInt>()
                    .map_err(|e| Error::parse(s, format!("{c:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(IntPoly::new)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty("x"))
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        raw.iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()
            .map(IntPoly::new)
    }
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], negate_b: bool) -> Vec<BigInt> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            match b.get(i) {
                Some(y) if negate_b => x - y,
                Some(y) => x + y,
                None => x,
            }
        })
        .collect()
}

fn mul_coeffs(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(add_coeffs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(add_coeffs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(mul_coeffs(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(IntPoly, Add::add, Sub::sub, Mul::mul);
forward_owned!(LaurentPoly, Add::add, Mul::mul);

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |a, b| &a + &b)
    }
}

/// A Laurent polynomial `∑ c_i u^{offset + i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    offset: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            offset: 0,
            coeffs: Vec::new(),
        }
    }

    /// Canonicalizes at both ends; the zero polynomial gets offset 0.
    pub fn new(mut offset: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return LaurentPoly::zero();
        }
        coeffs.drain(..lead);
        offset += lead as i64;
        LaurentPoly { offset, coeffs }
    }

    /// `c·u^d` for any integer `d`.
    pub fn monomial(c: impl Into<BigInt>, d: i64) -> Self {
        LaurentPoly::new(d, vec![c.into()])
    }

    pub fn from_poly(p: &IntPoly) -> Self {
        LaurentPoly::new(0, p.coeffs.clone())
    }

    /// Lowest degree present (0 for the zero polynomial).
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, d: i64) -> BigInt {
        usize::try_from(d - self.offset)
            .ok()
            .and_then(|i| self.coeffs.get(i).cloned())
            .unwrap_or_default()
    }

    /// Multiplies by `c·u^d`.
    pub fn scale_shift(&self, c: &BigInt, d: i64) -> LaurentPoly {
        LaurentPoly::new(self.offset + d, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Fails if any negative-degree term survives.
    pub fn to_poly(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        if self.offset < 0 {
            return Err(Error::NegativeDegreeResidue {
                offset: self.offset,
            });
        }
        Ok(IntPoly::new(self.coeffs.clone()).shift(self.offset as usize))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(rhs.offset);
        let pad = |p: &LaurentPoly| {
            let mut v = vec![BigInt::zero(); (p.offset - lo) as usize];
            v.extend(p.coeffs.iter().cloned());
            v
        };
        LaurentPoly::new(lo, add_coeffs(&pad(self), &pad(rhs), false))
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    // exponents add under multiplication
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::new(
            self.offset + rhs.offset,
            mul_coeffs(&self.coeffs, &rhs.coeffs),
        )
    }
}

/// `∑_{n=0}^{N} c_n(x) z^n`, truncated at a fixed order `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    order: usize,
    coeffs: Vec<IntPoly>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        BivariateSeries {
            order,
            coeffs: vec![IntPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = BivariateSeries::zero(order);
        s.coeffs[0] = IntPoly::one();
        s
    }

    /// Terms beyond `order` are dropped; missing terms are zero.
    pub fn from_terms(order: usize, terms: impl IntoIterator<Item = IntPoly>) -> Self {
        let mut s = BivariateSeries::zero(order);
        for (n, t) in terms.into_iter().enumerate().take(order + 1) {
            s.coeffs[n] = t;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<IntPoly> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &IntPoly {
        &self.coeffs[n]
    }

    /// Adds `p·z^n`; ignored beyond the truncation order.
    pub fn add_term(&mut self, n: usize, p: &IntPoly) {
        if n <= self.order {
            self.coeffs[n] = &self.coeffs[n] + p;
        }
    }

    fn check_order(&self, other: &BivariateSeries) -> Result<()> {
        if self.order != other.order {
            return Err(Error::SeriesOrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &BivariateSeries) -> Result<BivariateSeries> {
        self.check_order(other)?;
        let mut out = BivariateSeries::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// `self / divisor`, exact because the divisor's constant term is 1.
    pub fn div(&self, divisor: &BivariateSeries) -> Result<BivariateSeries> {
        self.check_order(divisor)?;
        if divisor.coeffs[0] != IntPoly::one() {
            return Err(Error::NonUnitConstant);
        }
        let mut q: Vec<IntPoly> = Vec::with_capacity(self.order + 1);
        for n in 0..=self.order {
            let mut c = self.coeffs[n].clone();
            for i in 1..=n {
                let d = &divisor.coeffs[i];
                if !d.is_zero() {
                    c = &c - &(d * &q[n - i]);
                }
            }
            q.push(c);
        }
        Ok(BivariateSeries {
            order: self.order,
            coeffs: q,
        })
    }
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        assert_eq!(&p(&[3, 0, 2]) + &IntPoly::zero(), p(&[3, 0, 2]));
        assert_eq!(p(&[-1, 1]).pow(3), p(&[-1, 3, -3, 1]));
        assert_eq!(p(&[1, 2]) - p(&[1, 2]), IntPoly::zero());
        assert_eq!(p(&[0, 0, 0]), IntPoly::zero());
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!(p(&[2, 1]).pow(0), IntPoly::one());
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[1, 32, 35, 4]).eval(&1.into()), 72.into());
        assert_eq!(p(&[7, 32, 35, 4]).eval(&0.into()), 7.into());
        assert_eq!(p(&[1, 10, 7]).eval(&1.into()), 18.into());
        assert_eq!(IntPoly::zero().eval(&5.into()), 0.into());
    }

    #[test]
    fn substitution_and_stride() {
        assert_eq!(p(&[1, 1]).substitute_power(3), p(&[1, 0, 0, 1]));
        assert_eq!(p(&[7]).substitute_power(4), p(&[7]));
        assert_eq!(p(&[1, 6, 1]).substitute_power(3), p(&[1, 0, 0, 6, 0, 0, 1]));
        assert_eq!(
            p(&[1, 6, 17, 32, 43, 44, 35, 22, 11, 4, 1]).extract_stride(3),
            p(&[1, 32, 35, 4])
        );
        assert_eq!(p(&[4, 5, 6]).extract_stride(1), p(&[4, 5, 6]));
        assert_eq!(
            p(&[1, 3, 7, 10, 12, 10, 7, 3, 1]).extract_stride(3),
            p(&[1, 10, 7])
        );
    }

    #[test]
    fn translation() {
        // (x+1)^2 at x -> x - 1 is x^2
        assert_eq!(p(&[1, 2, 1]).translate(-1), p(&[0, 0, 1]));
        assert_eq!(p(&[0, 0, 1]).translate(1), p(&[1, 2, 1]));
    }

    #[test]
    fn laurent_arithmetic() {
        let inv = LaurentPoly::monomial(1, -1);
        let u = LaurentPoly::monomial(1, 1);
        assert_eq!(&inv * &u, LaurentPoly::monomial(1, 0));
        let a = LaurentPoly::new(-1, vec![1.into(), 1.into()]);
        let b = LaurentPoly::monomial(-1, -1);
        assert_eq!(&a + &b, LaurentPoly::monomial(1, 0));
        let c = LaurentPoly::new(-2, vec![1.into(), 1.into(), 1.into()]);
        assert_eq!(
            c.scale_shift(&BigInt::one(), 2).to_poly().unwrap(),
            p(&[1, 1, 1])
        );
        assert_eq!(
            LaurentPoly::new(3, vec![0.into(), 0.into()]),
            LaurentPoly::zero()
        );
        assert_eq!(LaurentPoly::new(-2, vec![0.into(), 5.into()]).offset(), -1);
    }

    #[test]
    fn laurent_conversion() {
        assert_eq!(
            LaurentPoly::new(0, vec![1.into(), 2.into(), 1.into()])
                .to_poly()
                .unwrap(),
            p(&[1, 2, 1])
        );
        assert_eq!(LaurentPoly::zero().to_poly().unwrap(), IntPoly::zero());
        assert_eq!(
            LaurentPoly::monomial(3, -1).to_poly(),
            Err(Error::NegativeDegreeResidue { offset: -1 })
        );
    }

    #[test]
    fn geometric_series_division() {
        let one = BivariateSeries::one(3);
        let one_minus_z = BivariateSeries::from_terms(3, [IntPoly::one(), p(&[-1])]);
        let q = one.div(&one_minus_z).unwrap();
        assert!(q.coeffs().iter().all(|c| *c == IntPoly::one()));
        assert_eq!(q.coeffs().len(), 4);
        let a = BivariateSeries::from_terms(3, [p(&[1, 2]), p(&[0, 3]), p(&[4])]);
        assert_eq!(a.mul(&BivariateSeries::one(3)).unwrap(), a);
    }

    #[test]
    fn series_contract_violations() {
        let a = BivariateSeries::one(3);
        let b = BivariateSeries::one(4);
        assert_eq!(
            a.mul(&b),
            Err(Error::SeriesOrderMismatch { left: 3, right: 4 })
        );
        let bad = BivariateSeries::from_terms(3, [p(&[2])]);
        assert_eq!(a.div(&bad), Err(Error::NonUnitConstant));
    }

    #[test]
    fn text_formats() {
        let b42 = p(&[1, 32, 35, 4]);
        assert_eq!(b42.to_list_string(), "[1, 32, 35, 4]");
        assert_eq!(b42.to_string(), "1 + 32*x + 35*x^2 + 4*x^3");
        assert_eq!(p(&[-1, 3, -3, 1]).pretty("u"), "-1 + 3*u - 3*u^2 + u^3");
        assert_eq!(IntPoly::parse_list("[1, 32, 35, 4]").unwrap(), b42);
        assert_eq!(
            serde_json::to_string(&b42).unwrap(),
            r#"["1","32","35","4"]"#
        );
        let back: IntPoly = serde_json::from_str(r#"["1","32","35","4","0"]"#).unwrap();
        assert_eq!(back, b42);
    }

    #[test]
    fn big_coefficients_do_not_wrap() {
        let big = p(&[i64::MAX, i64::MAX]);
        let sq = &big * &big;
        let m = BigInt::from(i64::MAX);
        assert_eq!(sq.coeff(1), &m * &m * 2);
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(|c| IntPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly(), v in -5i64..5) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            let v = BigInt::from(v);
            prop_assert_eq!((&a * &b).eval(&v), a.eval(&v) * b.eval(&v));
            prop_assert!((&a - &b).is_canonical());
            prop_assert!((&a * &b).is_canonical());
        }

        #[test]
        fn stride_inverts_substitution(a in small_poly(), m in 1usize..5) {
            prop_assert_eq!(a.substitute_power(m).extract_stride(m), a);
        }

        #[test]
        fn division_then_multiplication(
            num in prop::collection::vec(small_poly(), 0..6),
            den in prop::collection::vec(small_poly(), 0..5),
        ) {
            let order = 5;
            let a = BivariateSeries::from_terms(order, num);
            let b = BivariateSeries::from_terms(
                order,
                std::iter::once(IntPoly::one()).chain(den),
            );
            let q = a.div(&b).unwrap();
            prop_assert_eq!(q.mul(&b).unwrap(), a);
        }

        #[test]
        fn laurent_roundtrip(a in small_poly(), shift in 0i64..4) {
            let l = LaurentPoly::from_poly(&a).scale_shift(&BigInt::one(), -shift);
            let back = l.scale_shift(&BigInt::one(), shift).to_poly().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
