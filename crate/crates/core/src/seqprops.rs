//! Shape checks for finite integer sequences: symmetry, unimodality and
//! log-concavity, each reporting witness indices when it fails.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

/// Outcome of a sequence check. Failing indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "verdict", content = "witnesses", rename_all = "lowercase")]
pub enum SequenceVerdict {
    Holds,
    Fails(Vec<usize>),
}

impl SequenceVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, SequenceVerdict::Holds)
    }

    pub fn witnesses(&self) -> &[usize] {
        match self {
            SequenceVerdict::Holds => &[],
            SequenceVerdict::Fails(w) => w,
        }
    }
}

impl fmt::Display for SequenceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceVerdict::Holds => f.write_str("holds"),
            SequenceVerdict::Fails(w) => {
                let items: Vec<String> = w.iter().map(usize::to_string).collect();
                write!(f, "fails at {}", items.join(","))
            }
        }
    }
}

/// `a_i = a_{m-i}`. The witness is the first mismatched pair.
pub fn is_symmetric(a: &[BigInt]) -> SequenceVerdict {
    let m = a.len();
    match (0..m / 2).find(|&i| a[i] != a[m - 1 - i]) {
        None => SequenceVerdict::Holds,
        Some(i) => SequenceVerdict::Fails(vec![i, m - 1 - i]),
    }
}

/// Weakly rises, then weakly falls. The witness is the index of the first
/// strict rise that follows a strict fall.
pub fn is_unimodal(a: &[BigInt]) -> SequenceVerdict {
    let mut fallen = false;
    for i in 1..a.len() {
        if a[i] < a[i - 1] {
            fallen = true;
        } else if fallen && a[i] > a[i - 1] {
            return SequenceVerdict::Fails(vec![i]);
        }
    }
    SequenceVerdict::Holds
}

/// `a_i² >= a_{i-1} a_{i+1}` for every interior `i`; all violations are reported.
pub fn is_log_concave(a: &[BigInt]) -> SequenceVerdict {
    let bad: Vec<usize> = (1..a.len().saturating_sub(1))
        .filter(|&i| &a[i] * &a[i] < &a[i - 1] * &a[i + 1])
        .collect();
    if bad.is_empty() {
        SequenceVerdict::Holds
    } else {
        SequenceVerdict::Fails(bad)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn examples() {
        assert!(is_symmetric(&big(&[1, 4, 1])).holds());
        assert!(is_unimodal(&big(&[1, 4, 1])).holds());
        assert!(is_log_concave(&big(&[1, 4, 1])).holds());
        assert_eq!(
            is_unimodal(&big(&[1, 3, 2, 4])),
            SequenceVerdict::Fails(vec![3])
        );
        assert_eq!(
            is_symmetric(&big(&[1, 2, 3])),
            SequenceVerdict::Fails(vec![0, 2])
        );
        assert!(is_unimodal(&big(&[2, 2, 1, 1])).holds());
        assert!(is_unimodal(&[]).holds());
        assert!(is_log_concave(&big(&[7])).holds());
        assert!(is_log_concave(&big(&[1, 2, 2, 1])).holds());
        assert!(is_unimodal(&big(&[3, 3, 3])).holds());
    }

    #[test]
    fn small_kernel_rows() {
        let p2 = big(&[1, 1, 2, 1, 1]);
        assert!(is_symmetric(&p2).holds());
        assert!(is_unimodal(&p2).holds());
        let q2 = big(&[1, 4, 6, 6, 4, 2, 1]);
        assert_eq!(is_symmetric(&q2), SequenceVerdict::Fails(vec![1, 5]));
        assert!(is_unimodal(&q2).holds());
        assert!(is_log_concave(&q2).holds());
    }

    #[test]
    fn q3_log_concavity_witnesses() {
        let q3 = big(&[1, 8, 12, 18, 23, 32, 32, 28, 23, 8, 4, 2, 1]);
        assert!(is_unimodal(&q3).holds());
        assert!(!is_symmetric(&q3).holds());
        assert_eq!(is_log_concave(&q3), SequenceVerdict::Fails(vec![4, 9]));
        assert_eq!(is_log_concave(&q3).to_string(), "fails at 4,9");
    }

    proptest! {
        #[test]
        fn log_concave_positive_is_unimodal(v in prop::collection::vec(1i64..50, 0..12)) {
            let a = big(&v);
            if is_log_concave(&a).holds() {
                prop_assert!(is_unimodal(&a).holds());
            }
        }

        #[test]
        fn verdicts_invariant_under_reversal_and_scaling(
            v in prop::collection::vec(0i64..30, 0..12),
            c in 1i64..9,
        ) {
            let a = big(&v);
            let rev: Vec<BigInt> = a.iter().rev().cloned().collect();
            let scaled: Vec<BigInt> = a.iter().map(|x| x * c).collect();
            prop_assert_eq!(is_unimodal(&a).holds(), is_unimodal(&rev).holds());
            prop_assert_eq!(is_log_concave(&a).holds(), is_log_concave(&rev).holds());
            prop_assert_eq!(is_symmetric(&a).holds(), is_symmetric(&rev).holds());
            prop_assert_eq!(is_unimodal(&a), is_unimodal(&scaled));
            prop_assert_eq!(is_log_concave(&a), is_log_concave(&scaled));
            prop_assert_eq!(is_symmetric(&a), is_symmetric(&scaled));
        }
    }
}
