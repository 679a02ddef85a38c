use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::{eulerian_poly, Family, Method};
use crate::enumerate::BoundedWalk;
use crate::error::Result;
use crate::perm::type_b_descents;
use crate::polyring::{binomial, BivariateSeries, IntPoly, LaurentPoly};

/// Dispatches a single route.
pub fn restricted_poly(
    family: Family,
    n: usize,
    k: usize,
    method: Method,
    cap: usize,
) -> Result<IntPoly> {
    match method {
        Method::Brute => restricted_poly_brute(family, n, k, cap),
        Method::Recurrence => Ok(restricted_poly_recurrence(family, n, k)),
        Method::Explicit => restricted_poly_explicit(family, n, k),
        Method::Series => restricted_poly_series(family, n, k),
    }
}

/// Descent distribution over the enumerated set, in parallel over the first letter.
pub fn restricted_poly_brute(family: Family, n: usize, k: usize, cap: usize) -> Result<IntPoly> {
    let signed = family == Family::B;
    let walk = BoundedWalk::new(n, k, signed, cap)?;
    let counts = walk
        .first_choices()
        .into_par_iter()
        .map(|first| {
            let mut chunk = walk.clone().pin_first(first);
            let mut counts = vec![0u64; n + 1];
            while let Some(w) = chunk.advance() {
                let d = if signed {
                    type_b_descents(w)
                } else {
                    w.windows(2).filter(|p| p[0] > p[1]).count()
                };
                counts[d] += 1;
            }
            counts
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let counts = if n == 0 { vec![1] } else { counts };
    Ok(IntPoly::new(counts.into_iter().map(BigInt::from).collect()))
}

/// `C(k+1, j)·(x-1)^{j-1}` for `j = 1..=k+1`.
fn recurrence_weights(k: usize) -> Vec<IntPoly> {
    let x_minus_one = IntPoly::from_i64s(&[-1, 1]);
    let mut power = IntPoly::one();
    (1..=k + 1)
        .map(|j| {
            let w = power.scale(&binomial(k + 1, j));
            power = &power * &x_minus_one;
            w
        })
        .collect()
}

/// Memo of recurrence results, keyed by family and `k`; entry `n` of each
/// vector is the polynomial for length `n`. Safe to share between threads.
#[derive(Debug, Default)]
pub struct RecurrenceMemo {
    cache: Mutex<HashMap<(Family, usize), Vec<IntPoly>>>,
}

impl RecurrenceMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, family: Family, n: usize, k: usize) -> IntPoly {
        let mut cache = self.cache.lock().expect("recurrence memo poisoned");
        let seq = cache
            .entry((family, k))
            .or_insert_with(|| (0..=k).map(|j| eulerian_poly(family, j)).collect());
        if seq.len() <= n {
            let weights = recurrence_weights(k);
            while seq.len() <= n {
                let m = seq.len();
                let next = weights
                    .iter()
                    .enumerate()
                    .map(|(idx, w)| w * &seq[m - idx - 1])
                    .sum();
                seq.push(next);
            }
        }
        seq[n].clone()
    }

    /// Number of `(family, k)` sequences held.
    pub fn len(&self) -> usize {
        self.cache.lock().expect("recurrence memo poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `∑_{j=1}^{k+1} C(k+1,j)(x-1)^{j-1} P_{n-j,k}(x)` bottom-up from the Eulerian
/// initial conditions for lengths `0..=k`.
pub fn restricted_poly_recurrence(family: Family, n: usize, k: usize) -> IntPoly {
    RecurrenceMemo::new().get(family, n, k)
}

/// The kernel `∑_{j=0}^{k} C_{k-j}(u^{k+1}) (u^{k+1}-1)^j ∑_{i=j}^{k} C(i,j) u^{-i}`
/// for arbitrary initial polynomials `C_0, …, C_k`.
///
/// Assembled in Laurent arithmetic; a negative-degree remainder is reported
/// as an error rather than truncated.
pub fn recurrence_kernel(initial: &[IntPoly]) -> Result<IntPoly> {
    assert!(!initial.is_empty(), "kernel needs C_0..C_k");
    let k = initial.len() - 1;
    let stride = k + 1;
    let u_stride_minus_one = &IntPoly::monomial(1, stride) - &IntPoly::one();
    let mut total = LaurentPoly::zero();
    let mut power = IntPoly::one();
    for j in 0..=k {
        let outer = &initial[k - j].substitute_power(stride) * &power;
        let inner = (j..=k).fold(LaurentPoly::zero(), |acc, i| {
            &acc + &LaurentPoly::monomial(binomial(i, j), -(i as i64))
        });
        total = &total + &(&LaurentPoly::from_poly(&outer) * &inner);
        power = &power * &u_stride_minus_one;
    }
    total.to_poly()
}

/// `P_k(u)` for `A` and `Q_k(u)` for `B`.
pub fn kernel_polynomial(family: Family, k: usize) -> Result<IntPoly> {
    let initial: Vec<IntPoly> = (0..=k).map(|j| eulerian_poly(family, j)).collect();
    recurrence_kernel(&initial)
}

pub fn assemble_pk(k: usize) -> Result<IntPoly> {
    kernel_polynomial(Family::A, k)
}

pub fn assemble_qk(k: usize) -> Result<IntPoly> {
    kernel_polynomial(Family::B, k)
}

/// Every `(k+1)`-st coefficient of `kernel·(1 + u + … + u^k)^{n-k}`; only
/// meaningful for `n >= k`.
pub fn solve_with_kernel(kernel: &IntPoly, k: usize, n: usize) -> IntPoly {
    assert!(n >= k, "kernel extraction needs n >= k");
    let expanded = kernel * &IntPoly::geometric(k).pow((n - k) as u32);
    expanded.extract_stride(k + 1)
}

pub fn restricted_poly_explicit(family: Family, n: usize, k: usize) -> Result<IntPoly> {
    if n < k {
        return Ok(eulerian_poly(family, n));
    }
    Ok(solve_with_kernel(&kernel_polynomial(family, k)?, k, n))
}

/// Coefficients of `z^0 … z^{up_to_n}` in the rational generating function
/// `N(x, z) / D(x, z)`.
pub fn restricted_series(family: Family, k: usize, up_to_n: usize) -> Result<Vec<IntPoly>> {
    let initial: Vec<IntPoly> = (0..=k).map(|j| eulerian_poly(family, j)).collect();
    let weights = recurrence_weights(k);

    let mut numerator = BivariateSeries::one(up_to_n);
    for t in 1..=k.min(up_to_n) {
        let correction: IntPoly = (1..=t).map(|i| &weights[i - 1] * &initial[t - i]).sum();
        numerator.add_term(t, &(&initial[t] - &correction));
    }
    let mut denominator = BivariateSeries::one(up_to_n);
    for (i, w) in weights.iter().enumerate() {
        denominator.add_term(i + 1, &-w);
    }
    Ok(numerator.div(&denominator)?.into_coeffs())
}

pub fn restricted_poly_series(family: Family, n: usize, k: usize) -> Result<IntPoly> {
    Ok(restricted_series(family, k, n)?.swap_remove(n))
}

/// Results of several routes for the same `(family, n, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RouteComparison {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub results: Vec<(Method, IntPoly)>,
}

impl RouteComparison {
    pub fn agree(&self) -> bool {
        self.results.windows(2).all(|w| w[0].1 == w[1].1)
    }
}

/// Runs every route; brute force is skipped (not failed) when `n` exceeds the cap.
pub fn compare_routes(family: Family, n: usize, k: usize, cap: usize) -> Result<RouteComparison> {
    let mut results = Vec::with_capacity(4);
    for method in Method::ALL {
        match restricted_poly(family, n, k, method, cap) {
            Ok(p) => results.push((method, p)),
            Err(e) if e.is_resource_limit() && method == Method::Brute => {}
            Err(e) => return Err(e),
        }
    }
    Ok(RouteComparison {
        family,
        n,
        k,
        results,
    })
}
