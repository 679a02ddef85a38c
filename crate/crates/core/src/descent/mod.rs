//! Descent polynomials of types A and B restricted by maximum drop.
//!
//! `A_{n,k}(x)` and `B_{n,k}(x)` are computed by four independent routes:
//! exhaustive enumeration, the linear recurrence, the kernel-polynomial
//! extraction, and the rational generating function in `z`. The type A and B
//! cases share everything except their initial conditions (the Eulerian
//! polynomials), which is why they are a [`Family`] switch rather than two
//! code paths.

mod bijection;
mod routes;
mod setcount;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{binomial, IntPoly};

pub use bijection::{bijection_f, bijection_g, FSplit};
pub use routes::{
    assemble_pk, assemble_qk, compare_routes, kernel_polynomial, recurrence_kernel,
    restricted_poly, restricted_poly_brute, restricted_poly_explicit, restricted_poly_recurrence,
    restricted_poly_series, restricted_series, solve_with_kernel, RecurrenceMemo, RouteComparison,
};
pub use setcount::{
    count_superset_brute, count_superset_recursive, count_superset_unrestricted,
    superset_counts_brute,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Permutations, type A descents and maxdrop.
    A,
    /// Signed permutations, type B descents and maxdrop.
    B,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
        }
    }

    /// Smallest `k` for which the maxdrop restriction is vacuous on length `n`.
    pub fn unrestricted_from(self, n: usize) -> usize {
        match self {
            Family::A => n.saturating_sub(1),
            Family::B => n,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            other => Err(Error::parse(other, "family must be A or B")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Recurrence,
    Explicit,
    Series,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Brute,
        Method::Recurrence,
        Method::Explicit,
        Method::Series,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Recurrence => "recurrence",
            Method::Explicit => "explicit",
            Method::Series => "series",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s.trim())
            .ok_or_else(|| Error::parse(s, "method must be brute, recurrence, explicit or series"))
    }
}

/// One request for `A_{n,k}(x)` or `B_{n,k}(x)` by a chosen route.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RestrictedDescentQuery {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub method: Method,
}

impl RestrictedDescentQuery {
    pub fn run(&self, cap: usize) -> Result<IntPoly> {
        restricted_poly(self.family, self.n, self.k, self.method, cap)
    }
}

/// Eulerian number of type A: permutations of `[n]` with `k` descents.
pub fn eulerian_number_a(n: usize, k: usize) -> BigInt {
    let top = if n == 0 { 0 } else { n - 1 };
    if k > top {
        return BigInt::zero();
    }
    alternating_sum(n, k, |i| BigInt::from(k + 1 - i))
}

/// Eulerian number of type B: signed permutations of `[n]` with `k` type B descents.
pub fn eulerian_number_b(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    alternating_sum(n, k, |i| BigInt::from(2 * k + 1 - 2 * i))
}

/// `∑_{i=0}^{k} (-1)^i C(n+1, i) base(i)^n`.
fn alternating_sum(n: usize, k: usize, base: impl Fn(usize) -> BigInt) -> BigInt {
    (0..=k).fold(BigInt::zero(), |acc, i| {
        let term = binomial(n + 1, i) * num_traits::pow(base(i), n);
        if i % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

pub fn eulerian_number(family: Family, n: usize, k: usize) -> BigInt {
    match family {
        Family::A => eulerian_number_a(n, k),
        Family::B => eulerian_number_b(n, k),
    }
}

/// `A_n(x)` or `B_n(x)` from the explicit coefficient formulas.
pub fn eulerian_poly(family: Family, n: usize) -> IntPoly {
    if n == 0 {
        return IntPoly::one();
    }
    let top = match family {
        Family::A => n - 1,
        Family::B => n,
    };
    IntPoly::new((0..=top).map(|k| eulerian_number(family, n, k)).collect())
}

pub fn eulerian_poly_a(n: usize) -> IntPoly {
    eulerian_poly(Family::A, n)
}

pub fn eulerian_poly_b(n: usize) -> IntPoly {
    eulerian_poly(Family::B, n)
}

/// `|S_n| = n!` or `|B_n| = 2^n n!`.
pub fn group_order(family: Family, n: usize) -> BigInt {
    let fact = (1..=n).fold(BigInt::one(), |a, i| a * i);
    match family {
        Family::A => fact,
        Family::B => fact << n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{all_signed, all_unsigned};

    // Descent distributions counted directly over the whole group.
    fn brute_eulerian(family: Family, n: usize) -> IntPoly {
        let mut counts = vec![0i64; n + 1];
        match family {
            Family::A => all_unsigned(n, 10)
                .unwrap()
                .for_each(|p| counts[p.descents()] += 1),
            Family::B => all_signed(n, 10)
                .unwrap()
                .for_each(|p| counts[p.descents()] += 1),
        }
        IntPoly::from_i64s(&counts)
    }

    #[test]
    fn eulerian_number_examples() {
        assert_eq!(eulerian_number_a(3, 1), 4.into());
        assert_eq!(eulerian_number_b(2, 1), 6.into());
        for n in 0..8 {
            assert_eq!(eulerian_number_a(n, 0), BigInt::one());
        }
        assert_eq!(eulerian_number_a(0, 0), BigInt::one());
        assert_eq!(eulerian_number_a(4, 4), BigInt::zero());
        assert_eq!(eulerian_number_b(2, 2), BigInt::one());
        assert_eq!(eulerian_number_b(2, 3), BigInt::zero());
    }

    #[test]
    fn eulerian_poly_examples() {
        assert_eq!(eulerian_poly_b(0), IntPoly::one());
        assert_eq!(eulerian_poly_b(2), IntPoly::from_i64s(&[1, 6, 1]));
        assert_eq!(eulerian_poly_a(3), IntPoly::from_i64s(&[1, 4, 1]));
        assert_eq!(eulerian_poly_a(1), IntPoly::one());
    }

    #[test]
    fn eulerian_formulas_match_enumeration() {
        for n in 0..=7 {
            for family in [Family::A, Family::B] {
                let poly = eulerian_poly(family, n);
                assert_eq!(poly, brute_eulerian(family, n), "{family} n={n}");
                assert_eq!(poly.eval(&BigInt::one()), group_order(family, n));
            }
        }
    }

    #[test]
    fn parsing() {
        assert_eq!("B".parse::<Family>().unwrap(), Family::B);
        assert_eq!("series".parse::<Method>().unwrap(), Method::Series);
        assert!("all".parse::<Method>().is_err());
        assert!("C".parse::<Family>().is_err());
    }
}
