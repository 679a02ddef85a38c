//! Permutations, signed permutations and signed words in one-line notation.
//!
//! Positions are 1-based in every public description (`p(1), …, p(n)`), with the
//! implicit `p(0) = 0` used by type B descents. Storage is 0-based.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    values: Vec<u32>,
}

/// A signed permutation: `|p|` is a permutation of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedPermutation {
    values: Vec<i32>,
}

/// A word of nonzero integers with pairwise distinct absolute values.
///
/// This is the domain on which both bubble sorts and the (signed)
/// standardization maps are defined; its support need not be `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedWord {
    values: Vec<i32>,
}

/// A set of descent positions inside `[0, n-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescentSet {
    n: usize,
    members: BTreeSet<usize>,
}

fn check_permutation_of_n(abs: impl Iterator<Item = (usize, i64)>, n: usize) -> Result<()> {
    let mut seen = vec![false; n + 1];
    for (position, value) in abs {
        if value == 0 {
            return Err(Error::ZeroEntry { position });
        }
        let a = value.unsigned_abs();
        if a as usize > n {
            return Err(Error::OutOfRange { value, n });
        }
        if std::mem::replace(&mut seen[a as usize], true) {
            return Err(Error::DuplicateValue { value: a as u32 });
        }
    }
    Ok(())
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        check_permutation_of_n(
            values.iter().enumerate().map(|(i, &v)| (i + 1, v as i64)),
            n,
        )?;
        Ok(Permutation { values })
    }

    pub(crate) fn new_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }

    /// `p(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> u32 {
        self.values[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    /// Positions `i ∈ [1, n-1]` with `p(i) > p(i+1)`.
    pub fn descent_set(&self) -> DescentSet {
        let members = self
            .values
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect();
        DescentSet {
            n: self.len(),
            members,
        }
    }

    pub fn descents(&self) -> usize {
        self.values.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// `max { i - p(i) }`, which is never negative.
    pub fn max_drop(&self) -> usize {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &v)| (i + 1).saturating_sub(v as usize))
            .max()
            .unwrap_or(0)
    }

    /// One left-to-right bubble sort sweep `s_{n-1} ∘ … ∘ s_1`.
    pub fn bubble_pass(&self) -> Permutation {
        let mut values = self.values.clone();
        sweep_adjacent(&mut values);
        Permutation { values }
    }

    /// Number of sweeps needed to reach the identity, found by iterating.
    pub fn bubble_sort_complexity(&self) -> usize {
        let mut values = self.values.clone();
        let mut passes = 0;
        while !values.iter().enumerate().all(|(i, &v)| v as usize == i + 1) {
            sweep_adjacent(&mut values);
            passes += 1;
            assert!(passes <= self.len(), "bubble sort failed to terminate");
        }
        passes
    }

    pub fn to_signed(&self) -> SignedPermutation {
        SignedPermutation {
            values: self.values.iter().map(|&v| v as i32).collect(),
        }
    }
}

impl SignedPermutation {
    pub fn new(values: Vec<i32>) -> Result<Self> {
        let n = values.len();
        check_permutation_of_n(
            values.iter().enumerate().map(|(i, &v)| (i + 1, v as i64)),
            n,
        )?;
        Ok(SignedPermutation { values })
    }

    pub(crate) fn new_unchecked(values: Vec<i32>) -> Self {
        debug_assert!(SignedPermutation::new(values.clone()).is_ok());
        SignedPermutation { values }
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            values: (1..=n as i32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<i32> {
        self.values
    }

    /// `p(i)` for `0 <= i <= n`, with `p(0) = 0`.
    pub fn at(&self, i: usize) -> i32 {
        if i == 0 {
            0
        } else {
            self.values[i - 1]
        }
    }

    pub fn is_identity(&self) -> bool {
        is_identity_word(&self.values)
    }

    /// `|p|`, the underlying unsigned permutation.
    pub fn abs(&self) -> Permutation {
        Permutation {
            values: self.values.iter().map(|v| v.unsigned_abs()).collect(),
        }
    }

    pub fn as_word(&self) -> SignedWord {
        SignedWord {
            values: self.values.clone(),
        }
    }

    /// Positions `i ∈ [0, n-1]` with `p(i) > p(i+1)`.
    pub fn descent_set(&self) -> DescentSet {
        type_b_descent_set(&self.values)
    }

    pub fn descents(&self) -> usize {
        type_b_descents(&self.values)
    }

    /// Largest drop size `min(i - p(i), i)` over positions with `p(i) < i`;
    /// zero when there are no drops.
    pub fn max_drop(&self) -> usize {
        max_drop_b(&self.values)
    }

    /// The type B sweep `s_{n-1} ∘ … ∘ s_1 ∘ s_0`.
    pub fn bubble_pass(&self) -> SignedPermutation {
        let mut values = self.values.clone();
        sweep_type_b(&mut values);
        SignedPermutation { values }
    }

    /// The same sweep computed by the block decomposition `O(L p(j) R) = O(L) R |p(j)|`.
    pub fn bubble_pass_recursive(&self) -> SignedPermutation {
        SignedPermutation {
            values: block_operator(&self.values),
        }
    }

    /// Number of type B sweeps needed to reach the identity, found by iterating.
    pub fn bubble_sort_complexity(&self) -> usize {
        let mut values = self.values.clone();
        let mut passes = 0;
        while !is_identity_word(&values) {
            sweep_type_b(&mut values);
            passes += 1;
            assert!(
                passes <= self.len(),
                "type B bubble sort failed to terminate"
            );
        }
        passes
    }
}

impl From<Permutation> for SignedPermutation {
    fn from(p: Permutation) -> Self {
        p.to_signed()
    }
}

impl SignedWord {
    pub fn new(values: Vec<i32>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (i, &v) in values.iter().enumerate() {
            if v == 0 {
                return Err(Error::ZeroEntry { position: i + 1 });
            }
            if !seen.insert(v.unsigned_abs()) {
                return Err(Error::DuplicateValue {
                    value: v.unsigned_abs(),
                });
            }
        }
        Ok(SignedWord { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    /// The set of absolute values.
    pub fn support(&self) -> BTreeSet<u32> {
        self.values.iter().map(|v| v.unsigned_abs()).collect()
    }

    pub fn descent_set(&self) -> DescentSet {
        type_b_descent_set(&self.values)
    }

    pub fn bubble_pass(&self) -> SignedWord {
        let mut values = self.values.clone();
        sweep_type_b(&mut values);
        SignedWord { values }
    }

    pub fn bubble_pass_recursive(&self) -> SignedWord {
        SignedWord {
            values: block_operator(&self.values),
        }
    }
}

impl From<SignedPermutation> for SignedWord {
    fn from(p: SignedPermutation) -> Self {
        SignedWord { values: p.values }
    }
}

fn is_identity_word(values: &[i32]) -> bool {
    values.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
}

fn type_b_descent_set(values: &[i32]) -> DescentSet {
    let mut members = BTreeSet::new();
    let mut prev = 0;
    for (i, &v) in values.iter().enumerate() {
        if prev > v {
            members.insert(i);
        }
        prev = v;
    }
    DescentSet {
        n: values.len(),
        members,
    }
}

pub(crate) fn type_b_descents(values: &[i32]) -> usize {
    let mut prev = 0;
    let mut count = 0;
    for &v in values {
        count += usize::from(prev > v);
        prev = v;
    }
    count
}

pub(crate) fn max_drop_b(values: &[i32]) -> usize {
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| drop_size_b(i + 1, v))
        .max()
        .unwrap_or(0)
}

/// Drop size at 1-based `position` holding `value`, or 0 if there is no drop.
#[inline]
pub(crate) fn drop_size_b(position: usize, value: i32) -> usize {
    if value < 0 {
        position
    } else {
        position.saturating_sub(value as usize)
    }
}

fn sweep_adjacent<T: PartialOrd>(values: &mut [T]) {
    for i in 1..values.len() {
        if values[i - 1] > values[i] {
            values.swap(i - 1, i);
        }
    }
}

fn sweep_type_b(values: &mut [i32]) {
    if let Some(first) = values.first_mut() {
        if *first < 0 {
            *first = -*first;
        }
    }
    sweep_adjacent(values);
}

/// The recursive block operator. Note that this is unrelated to the kernel
/// polynomial of the descent recurrences, which shares its letter in print.
fn block_operator(word: &[i32]) -> Vec<i32> {
    if word.is_empty() {
        return Vec::new();
    }
    // σ = |w(1)|, w(2), …, w(n)
    let key = |i: usize| if i == 0 { word[0].abs() } else { word[i] };
    let j = (0..word.len()).max_by_key(|&i| key(i)).unwrap();
    let top = key(j);
    assert_eq!(
        (0..word.len()).filter(|&i| key(i) == top).count(),
        1,
        "maximum of the block decomposition must be unique"
    );
    let mut out = block_operator(&word[..j]);
    out.extend_from_slice(&word[j + 1..]);
    out.push(word[j].abs());
    out
}

/// Order-isomorphic relabelling of a positive word onto `[n]`.
pub fn standardize(word: &SignedWord) -> Result<Permutation> {
    if let Some((i, &v)) = word.values.iter().enumerate().find(|(_, &v)| v < 0) {
        return Err(Error::NegativeEntry {
            position: i + 1,
            value: v as i64,
        });
    }
    let sst = signed_standardize(word);
    Ok(sst.abs())
}

/// Standardizes `|w|` and restores the signs position by position.
pub fn signed_standardize(word: &SignedWord) -> SignedPermutation {
    let mut sorted: Vec<u32> = word.values.iter().map(|v| v.unsigned_abs()).collect();
    sorted.sort_unstable();
    let values = word
        .values
        .iter()
        .map(|&v| {
            let rank = sorted.binary_search(&v.unsigned_abs()).unwrap() as i32 + 1;
            rank * v.signum()
        })
        .collect();
    SignedPermutation { values }
}

/// The inverse of [`signed_standardize`] for a fixed support `C`: replaces
/// `±i` by `±c_i`, where `c_1 < c_2 < …` are the elements of `C`.
pub fn signed_unstandardize(support: &BTreeSet<u32>, p: &SignedPermutation) -> Result<SignedWord> {
    if support.len() != p.len() {
        return Err(Error::SizeMismatch {
            expected: p.len(),
            found: support.len(),
        });
    }
    let labels: Vec<u32> = support.iter().copied().collect();
    let values = p
        .values
        .iter()
        .map(|&v| labels[v.unsigned_abs() as usize - 1] as i32 * v.signum())
        .collect();
    SignedWord::new(values)
}

impl DescentSet {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&position) = members.iter().find(|&&m| m >= n) {
            return Err(Error::DescentOutOfRange { position, n });
        }
        Ok(DescentSet { n, members })
    }

    pub fn empty(n: usize) -> Self {
        DescentSet {
            n,
            members: BTreeSet::new(),
        }
    }

    /// All of `[0, n-1]`.
    pub fn full(n: usize) -> Self {
        DescentSet {
            n,
            members: (0..n).collect(),
        }
    }

    /// Bit `i` of `mask` marks position `i`; requires `n <= 64`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n <= 64 && (n == 64 || mask >> n == 0));
        DescentSet {
            n,
            members: (0..n).filter(|&i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn to_mask(&self) -> u64 {
        assert!(self.n <= 64, "descent set too wide for a bit mask");
        self.members.iter().fold(0, |m, &i| m | 1 << i)
    }

    /// Parses `"{0,2,6,7}"`, `"0,2,6,7"`, `"{}"` or `""`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .unwrap_or(inner)
            .trim();
        if inner.is_empty() {
            return Ok(DescentSet::empty(n));
        }
        let members = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::parse(s, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        DescentSet::new(n, members)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    pub fn is_subset(&self, other: &DescentSet) -> bool {
        self.members.is_subset(&other.members)
    }

    /// `t_n(S)`: the length of the run `[n-i, n-1]` contained in `S`.
    pub fn tail_run(&self) -> usize {
        (0..self.n)
            .rev()
            .take_while(|i| self.members.contains(i))
            .count()
    }

    /// `S ∩ [0, m-1]`, viewed as a descent set of ambient length `m`.
    pub fn restrict(&self, m: usize) -> DescentSet {
        DescentSet {
            n: m,
            members: self.members.range(..m).copied().collect(),
        }
    }

    /// `S ∪ [lo, n-1]`.
    pub fn with_tail_from(&self, lo: usize) -> DescentSet {
        let mut members = self.members.clone();
        members.extend(lo..self.n);
        DescentSet { n: self.n, members }
    }

    /// The same members with a larger ambient length.
    pub fn widen(&self, n: usize) -> Result<DescentSet> {
        DescentSet::new(n, self.members.iter().copied())
    }

    /// All subsets of this set, each with the same ambient length.
    pub fn subsets(&self) -> impl Iterator<Item = DescentSet> + '_ {
        let items: Vec<usize> = self.members.iter().copied().collect();
        assert!(items.len() < 64);
        (0u64..1 << items.len()).map(move |mask| DescentSet {
            n: self.n,
            members: items
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &i)| i)
                .collect(),
        })
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        write_joined(f, self.members.iter())?;
        write!(f, "}}")
    }
}

fn write_joined<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    for (i, v) in items.enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.values.iter())
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.values.iter())
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.values.iter())
    }
}

/// Splits `"-3,4,-1"` into integers. The empty string is the empty word.
pub(crate) fn parse_int_list<T: FromStr>(s: &str) -> Result<Vec<T>>
where
    T::Err: fmt::Display,
{
    let trimmed = s.trim();
    let trimmed = trimmed
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(trimmed)
        .trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<T>()
                .map_err(|e| Error::parse(s, format!("{:?}: {e}", t.trim())))
        })
        .collect()
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values: Vec<i64> = parse_int_list(s)?;
        if let Some((i, &v)) = values.iter().enumerate().find(|(_, &v)| v < 0) {
            return Err(Error::NegativeEntry {
                position: i + 1,
                value: v,
            });
        }
        let n = values.len();
        check_permutation_of_n(values.iter().enumerate().map(|(i, &v)| (i + 1, v)), n)?;
        Ok(Permutation {
            values: values.into_iter().map(|v| v as u32).collect(),
        })
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values: Vec<i64> = parse_int_list(s)?;
        let n = values.len();
        check_permutation_of_n(values.iter().enumerate().map(|(i, &v)| (i + 1, v)), n)?;
        Ok(SignedPermutation {
            values: values.into_iter().map(|v| v as i32).collect(),
        })
    }
}

impl FromStr for SignedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SignedWord::new(parse_int_list(s)?)
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;
    fn try_from(values: Vec<u32>) -> Result<Self> {
        Permutation::new(values)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.values
    }
}

impl TryFrom<Vec<i32>> for SignedPermutation {
    type Error = Error;
    fn try_from(values: Vec<i32>) -> Result<Self> {
        SignedPermutation::new(values)
    }
}

impl From<SignedPermutation> for Vec<i32> {
    fn from(p: SignedPermutation) -> Self {
        p.values
    }
}

impl TryFrom<Vec<i32>> for SignedWord {
    type Error = Error;
    fn try_from(values: Vec<i32>) -> Result<Self> {
        SignedWord::new(values)
    }
}

impl From<SignedWord> for Vec<i32> {
    fn from(w: SignedWord) -> Self {
        w.values
    }
}
