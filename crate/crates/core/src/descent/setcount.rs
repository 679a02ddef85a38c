//! `b_{n,k}(S)`: members of `B_{n,k}` whose descent set contains `S`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::enumerate::BoundedWalk;
use crate::error::{Error, Result};
use crate::perm::DescentSet;
use crate::polyring::binomial;

fn descent_mask(w: &[i32]) -> u64 {
    let mut prev = 0;
    let mut mask = 0;
    for (i, &v) in w.iter().enumerate() {
        if prev > v {
            mask |= 1 << i;
        }
        prev = v;
    }
    mask
}

/// Counts `#{p ∈ B_{n,k} : Des_B(p) = T}` for every `T`, indexed by bit mask,
/// and returns the superset sums `b_{n,k}(S)` indexed the same way.
pub fn superset_counts_brute(n: usize, k: usize, cap: usize) -> Result<Vec<u64>> {
    let mut walk = BoundedWalk::new(n, k, true, cap.min(20))?;
    let mut exact = vec![0u64; 1 << n];
    while let Some(w) = walk.advance() {
        exact[descent_mask(w) as usize] += 1;
    }
    // sum over supersets, one bit at a time
    for bit in 0..n {
        for mask in 0..1usize << n {
            if mask >> bit & 1 == 0 {
                exact[mask] += exact[mask | 1 << bit];
            }
        }
    }
    Ok(exact)
}

fn check_set(n: usize, s: &DescentSet) -> Result<()> {
    if s.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: s.n(),
        });
    }
    Ok(())
}

/// Direct enumeration of `B_{n,k}`.
pub fn count_superset_brute(n: usize, k: usize, s: &DescentSet, cap: usize) -> Result<BigInt> {
    check_set(n, s)?;
    let want = s.to_mask();
    let mut walk = BoundedWalk::new(n, k, true, cap)?;
    let mut count = 0u64;
    while let Some(w) = walk.advance() {
        count += u64::from(descent_mask(w) & want == want);
    }
    Ok(count.into())
}

/// `#{p ∈ B_n : Des_B(p) ⊇ S}` without enumeration.
///
/// Signed permutations with `Des_B ⊆ T` split into increasing runs between
/// consecutive elements of `T`; the run before the first element is positive,
/// every other run takes any signs. Inclusion-exclusion over `T ⊇ [0,n-1] \ S`
/// turns those counts into superset counts.
pub fn count_superset_unrestricted(n: usize, s: &DescentSet) -> Result<BigInt> {
    check_set(n, s)?;
    let complement: Vec<usize> = (0..n).filter(|i| !s.contains(*i)).collect();
    let mut total = BigInt::zero();
    for r in s.subsets() {
        let mut cuts: Vec<usize> = complement.iter().copied().chain(r.iter()).collect();
        cuts.sort_unstable();
        let term = contained_in_count(n, &cuts);
        if (s.len() - r.len()).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// `#{p ∈ B_n : Des_B(p) ⊆ cuts}` for sorted `cuts`.
fn contained_in_count(n: usize, cuts: &[usize]) -> BigInt {
    let mut bounds = Vec::with_capacity(cuts.len() + 2);
    bounds.push(0);
    bounds.extend_from_slice(cuts);
    bounds.push(n);
    let sizes: Vec<usize> = bounds.windows(2).map(|w| w[1] - w[0]).collect();
    let first = sizes[0];
    let mut count = BigInt::one();
    let mut remaining = n;
    for &b in &sizes {
        count *= binomial(remaining, b);
        remaining -= b;
    }
    count << (n - first)
}

/// `b_{n,k}(S) = b_{n-i-1,k}(S ∩ [0, n-i-2]) · C(k+1, i+1)` with `i = t_n(S)`,
/// applied until `k >= n`, where the unrestricted count takes over.
pub fn count_superset_recursive(n: usize, k: usize, s: &DescentSet) -> Result<BigInt> {
    check_set(n, s)?;
    let mut n = n;
    let mut s = s.clone();
    let mut factor = BigInt::one();
    while k < n {
        let i = s.tail_run();
        if i >= n {
            // every position a descent forces p(n) <= -n, a drop of size n > k
            return Ok(BigInt::zero());
        }
        factor *= binomial(k + 1, i + 1);
        if factor.is_zero() {
            return Ok(factor);
        }
        n -= i + 1;
        s = s.restrict(n);
    }
    Ok(factor * count_superset_unrestricted(n, &s)?)
}
