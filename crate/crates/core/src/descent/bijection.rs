//! The bijection `f: B_{n,k}(S) → B_{n-i-1,k}(S ∩ [0,n-i-2]) × ([n-k,n] choose i+1)`
//! and its inverse `g`, with `i = t_n(S)`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{
    signed_standardize, signed_unstandardize, DescentSet, SignedPermutation, SignedWord,
};

/// Image of `f`: the standardized prefix and the set of the last `i+1` letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FSplit {
    pub alpha: SignedPermutation,
    pub x: BTreeSet<u32>,
}

fn check_bound(p: &SignedPermutation, k: usize) -> Result<()> {
    let maxdrop = p.max_drop();
    if maxdrop > k {
        return Err(Error::MaxDropExceeds { maxdrop, k });
    }
    Ok(())
}

pub fn bijection_f(p: &SignedPermutation, k: usize, s: &DescentSet) -> Result<FSplit> {
    let n = p.len();
    if s.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: s.n(),
        });
    }
    if k >= n {
        return Err(Error::KNotBelowN { k, n });
    }
    check_bound(p, k)?;
    let descents = p.descent_set();
    if let Some(position) = s.iter().find(|&d| !descents.contains(d)) {
        return Err(Error::NotADescent { position });
    }
    let i = s.tail_run();
    // i = n would need 0 > p(1) > … > p(n), impossible once maxdrop < n
    debug_assert!(i < n);
    let cut = n - i - 1;
    let prefix = SignedWord::new(p.values()[..cut].to_vec())?;
    let alpha = signed_standardize(&prefix);
    let x = p.values()[cut..]
        .iter()
        .map(|&v| {
            debug_assert!(v > 0);
            v as u32
        })
        .collect();
    Ok(FSplit { alpha, x })
}

/// `g(p, X) = sst_C^{-1}(p) * (x_{i+1}, …, x_1)` with `C = [n] \ X`.
pub fn bijection_g(
    p: &SignedPermutation,
    x: &BTreeSet<u32>,
    n: usize,
    k: usize,
) -> Result<SignedPermutation> {
    if x.is_empty() {
        return Err(Error::EmptySubset);
    }
    if p.len() + x.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: p.len() + x.len(),
        });
    }
    if k >= n {
        return Err(Error::KNotBelowN { k, n });
    }
    let lo = n - k;
    if let Some(&value) = x.iter().find(|&&v| (v as usize) < lo || v as usize > n) {
        return Err(Error::SubsetOutOfRange { value, lo, hi: n });
    }
    check_bound(p, k)?;
    let complement: BTreeSet<u32> = (1..=n as u32).filter(|v| !x.contains(v)).collect();
    let mut values = signed_unstandardize(&complement, p)?.values().to_vec();
    values.extend(x.iter().rev().map(|&v| v as i32));
    SignedPermutation::new(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn f_worked_example() {
        let p = sp("-6,2,-1,-3,8,7,5,4");
        let s = DescentSet::new(8, [0, 2, 6, 7]).unwrap();
        let split = bijection_f(&p, 5, &s).unwrap();
        assert_eq!(split.alpha, sp("-4,2,-1,-3,5"));
        assert_eq!(split.x, BTreeSet::from([4, 5, 7]));
        assert_eq!(bijection_g(&split.alpha, &split.x, 8, 5).unwrap(), p);
    }

    #[test]
    fn f_with_empty_set() {
        let p = sp("2,-1,4,3");
        let split = bijection_f(&p, 3, &DescentSet::empty(4)).unwrap();
        assert_eq!(split.alpha, sp("2,-1,3"));
        assert_eq!(split.x, BTreeSet::from([3]));
    }

    #[test]
    fn g_worked_example() {
        let p = sp("-3,1,-4,2,5");
        let x = BTreeSet::from([4, 5, 7]);
        let q = bijection_g(&p, &x, 8, 4).unwrap();
        assert_eq!(q, sp("-3,1,-6,2,8,7,5,4"));
        let s = DescentSet::new(8, [2]).unwrap().with_tail_from(6);
        assert!(s.is_subset(&q.descent_set()));
        assert_eq!(bijection_f(&q, 4, &s).unwrap(), FSplit { alpha: p, x });
    }

    #[test]
    fn g_singleton() {
        let p = sp("-1,3,2");
        let q = bijection_g(&p, &BTreeSet::from([4]), 4, 2).unwrap();
        assert_eq!(q, sp("-1,3,2,4"));
    }

    #[test]
    fn precondition_errors() {
        let p = sp("-6,2,-1,-3,8,7,5,4");
        let s = DescentSet::new(8, [0, 2, 6, 7]).unwrap();
        assert_eq!(
            bijection_f(&p, 8, &s),
            Err(Error::KNotBelowN { k: 8, n: 8 })
        );
        assert_eq!(
            bijection_f(&p, 3, &s),
            Err(Error::MaxDropExceeds { maxdrop: 4, k: 3 })
        );
        let bad = DescentSet::new(8, [1]).unwrap();
        assert_eq!(
            bijection_f(&p, 5, &bad),
            Err(Error::NotADescent { position: 1 })
        );

        let q = sp("-3,1,-4,2,5");
        assert_eq!(
            bijection_g(&q, &BTreeSet::from([3, 5, 7]), 8, 4),
            Err(Error::SubsetOutOfRange {
                value: 3,
                lo: 4,
                hi: 8
            })
        );
        assert!(matches!(
            bijection_g(&q, &BTreeSet::from([5, 7]), 8, 4),
            Err(Error::SizeMismatch { .. })
        ));
        assert_eq!(
            bijection_g(&q, &BTreeSet::from([4, 5, 7]), 8, 2),
            Err(Error::SubsetOutOfRange {
                value: 4,
                lo: 6,
                hi: 8
            })
        );
        assert_eq!(
            bijection_g(&q, &BTreeSet::from([6, 7, 8]), 8, 2),
            Err(Error::MaxDropExceeds { maxdrop: 3, k: 2 })
        );
        assert_eq!(
            bijection_g(&q, &BTreeSet::new(), 5, 2),
            Err(Error::EmptySubset)
        );
    }
}
