//! Integer partitions: the index type for every basis of the ring of
//! symmetric functions.
//!
//! A [`Partition`] is always stored in canonical form: parts strictly
//! positive and non-increasing, trailing zeros dropped. The total order
//! used throughout the crate sorts by weight first and reverse
//! lexicographically within a weight, so `[3] < [2,1] < [1,1,1]`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

impl Partition {
    /// The null partition, indexing the unit `s[]`.
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Builds a partition from parts that must already be non-increasing.
    /// Zeros are only allowed as a trailing run and are dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NonCanonicalPartition(parts));
        }
        Ok(Self::from_canonical(parts))
    }

    /// Sorts the parts into canonical order, dropping zeros. The flag is
    /// true when the input was not canonical already.
    pub fn from_unsorted(parts: Vec<usize>) -> (Self, bool) {
        let mut sorted: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut trimmed = parts.clone();
        while trimmed.last() == Some(&0) {
            trimmed.pop();
        }
        let changed = sorted != trimmed;
        (Self::from_canonical(sorted), changed)
    }

    pub(crate) fn from_canonical(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }

    /// One-row partition `(n)`; the empty partition for `n == 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_canonical(vec![n])
        }
    }

    /// One-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::from_canonical(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (zero-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|k| self.parts.iter().take_while(|&&p| p >= k).count())
            .collect();
        Self::from_canonical(parts)
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Frobenius rank: the length of the main diagonal.
    pub fn rank(&self) -> usize {
        self.parts.iter().enumerate().take_while(|(i, &p)| p > *i).count()
    }

    pub fn to_frobenius(&self) -> FrobeniusForm {
        let conj = self.conjugate();
        let r = self.rank();
        FrobeniusForm {
            arms: (0..r).map(|i| self.parts[i] - i - 1).collect(),
            legs: (0..r).map(|i| conj.parts[i] - i - 1).collect(),
        }
    }

    pub fn multiplicities(&self) -> MultiplicityForm {
        let mut counts = BTreeMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_insert(0) += 1;
        }
        MultiplicityForm { counts }
    }

    /// Centralizer order `z_λ = ∏ i^{r_i} r_i!`.
    pub fn z_value(&self) -> BigInt {
        self.multiplicities().z_value()
    }

    /// Multiplies every part by `k` (the partition of `p_λ ∘ p_k`).
    pub fn scale_parts(&self, k: usize) -> Partition {
        if k == 0 {
            return Partition::empty();
        }
        Self::from_canonical(self.parts.iter().map(|p| p * k).collect())
    }

    /// Union of parts, i.e. the index of `p_λ p_μ` in a multiplicative basis.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_canonical(parts)
    }

    /// Dominance order `self ⊵ other` for partitions of equal weight.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.weight != other.weight {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[5,4,2]`, `(5,4,2)`, `[]`, `()` and the literal `0`.
    /// Non-canonical input is rejected; see [`Partition::from_unsorted`].
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        Partition::new(parts)
    }
}

/// Parses the bracketed part list of a partition without canonicalizing.
pub fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    if t == "0" {
        return Ok(Vec::new());
    }
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .or_else(|| t.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
        .ok_or_else(|| Error::Parse {
            position: 0,
            message: format!("expected a bracketed partition, found `{t}`"),
        })?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|p| {
            p.trim().parse::<usize>().map_err(|_| Error::Parse {
                position: 0,
                message: format!("invalid part `{}`", p.trim()),
            })
        })
        .collect()
}

/// Frobenius notation `(a_1 … a_r | b_1 … b_r)` with strictly decreasing
/// arms and legs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrobeniusForm {
    pub arms: Vec<usize>,
    pub legs: Vec<usize>,
}

impl FrobeniusForm {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self> {
        let strictly_decreasing = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if arms.len() != legs.len() || !strictly_decreasing(&arms) || !strictly_decreasing(&legs) {
            return Err(Error::Domain(format!(
                "invalid Frobenius symbol ({:?}|{:?})",
                arms, legs
            )));
        }
        Ok(FrobeniusForm { arms, legs })
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    pub fn weight(&self) -> usize {
        self.arms.iter().zip(&self.legs).map(|(a, b)| a + b + 1).sum()
    }

    pub fn to_partition(&self) -> Partition {
        let r = self.rank();
        if r == 0 {
            return Partition::empty();
        }
        // Rows below the diagonal block are counted from the leg columns.
        let len = self.legs[0] + 1;
        let parts = (0..len)
            .map(|i| {
                if i < r {
                    self.arms[i] + i + 1
                } else {
                    self.legs.iter().enumerate().filter(|(j, &b)| b + j >= i).count()
                }
            })
            .collect();
        Partition::from_canonical(parts)
    }
}

impl fmt::Display for FrobeniusForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", join(&self.arms), join(&self.legs))
    }
}

/// Multiplicity notation `[r_1, r_2, …]`: part size `i` occurs `r_i` times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityForm {
    pub counts: BTreeMap<usize, usize>,
}

impl MultiplicityForm {
    pub fn weight(&self) -> usize {
        self.counts.iter().map(|(i, r)| i * r).sum()
    }

    pub fn z_value(&self) -> BigInt {
        let mut z = BigInt::one();
        for (&i, &r) in &self.counts {
            for k in 1..=r {
                z *= BigInt::from(i) * BigInt::from(k);
            }
        }
        z
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (&i, &r) in self.counts.iter().rev() {
            parts.extend(std::iter::repeat_n(i, r));
        }
        Partition::from_unsorted(parts).0
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_canonical(current.clone()));
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

/// All partitions of weight at most `n`, weights ascending.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// Partitions `α ⊆ λ`, in canonical order.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    sub_fill(lambda, 0, usize::MAX, &mut current, &mut out);
    out.sort();
    out
}

fn sub_fill(lambda: &Partition, row: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    out.push(Partition::from_canonical(current.clone()));
    if row >= lambda.len() {
        return;
    }
    for p in 1..=lambda.part(row).min(cap) {
        current.push(p);
        sub_fill(lambda, row + 1, p, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[5, 4, 2, 2, 2, 1]).conjugate(), p(&[6, 5, 2, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
    }

    #[test]
    fn frobenius_examples() {
        let f = p(&[5, 4, 2, 2, 2, 1]).to_frobenius();
        assert_eq!(f.arms, vec![4, 2]);
        assert_eq!(f.legs, vec![5, 3]);
        assert_eq!(f.to_string(), "(4,2|5,3)");
        let e = Partition::empty().to_frobenius();
        assert_eq!(e.rank(), 0);
        assert_eq!(e.to_string(), "(|)");
        let one = p(&[1]).to_frobenius();
        assert_eq!((one.arms.clone(), one.legs.clone()), (vec![0], vec![0]));
    }

    #[test]
    fn frobenius_rejects_bad_symbols() {
        assert!(FrobeniusForm::new(vec![1, 1], vec![2, 0]).is_err());
        assert!(FrobeniusForm::new(vec![1], vec![]).is_err());
        assert_eq!(
            FrobeniusForm::new(vec![4, 2], vec![5, 3]).unwrap().to_partition(),
            p(&[5, 4, 2, 2, 2, 1])
        );
    }

    #[test]
    fn z_examples() {
        assert_eq!(p(&[7]).z_value(), BigInt::from(7));
        assert_eq!(p(&[1, 1]).z_value(), BigInt::from(2));
        assert_eq!(p(&[2, 1]).z_value(), BigInt::from(2));
        assert_eq!(p(&[2, 2, 1]).z_value(), BigInt::from(8));
        assert_eq!(Partition::empty().z_value(), BigInt::from(1));
    }

    #[test]
    fn generation_order() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(5).len(), 7);
        let all = partitions_up_to(6);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn parsing() {
        assert_eq!("[5,4,2,2,2,1]".parse::<Partition>().unwrap(), p(&[5, 4, 2, 2, 2, 1]));
        assert_eq!("(2,1)".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        let (q, changed) = Partition::from_unsorted(vec![1, 3, 0, 2]);
        assert_eq!(q, p(&[3, 2, 1]));
        assert!(changed);
    }

    #[test]
    fn subpartitions_of_21() {
        let subs = subpartitions(&p(&[2, 1]));
        assert_eq!(subs, vec![Partition::empty(), p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])]);
    }

    #[test]
    fn dominance() {
        assert!(p(&[3]).dominates(&p(&[2, 1])));
        assert!(!p(&[2, 1]).dominates(&p(&[3])));
        assert!(!p(&[3, 1, 1, 1]).dominates(&p(&[2, 2, 2])));
        assert!(!p(&[2, 2, 2]).dominates(&p(&[3, 1, 1, 1])));
    }
}
