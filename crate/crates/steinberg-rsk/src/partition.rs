//! Partitions and compositions of integers, the dominance and containment
//! orders, shape arithmetic, and the nilpotent-orbit dimension formula.

use std::collections::HashMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive integers. The empty sequence is
/// the unique partition of 0. Indexed reads past the stored length return 0,
/// which keeps componentwise formulas total.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// stripped; a zero before a positive part is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`-th part, 0-based; 0 beyond the stored length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of (positive) rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Dominance comparison: every prefix sum of `self` is at most the
    /// corresponding prefix sum of `rhs`. Only defined within one size.
    pub fn dominance_leq(&self, rhs: &Partition) -> Result<bool> {
        if self.size() != rhs.size() {
            return Err(Error::IncomparableSizes {
                lhs: self.size(),
                rhs: rhs.size(),
            });
        }
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(rhs.len()) {
            a += self.part(i);
            b += rhs.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Containment of Young diagrams.
    pub fn young_leq(&self, rhs: &Partition) -> bool {
        (0..self.len()).all(|i| self.part(i) <= rhs.part(i))
    }

    /// Componentwise sum of partitions.
    pub fn add(&self, rhs: &Partition) -> Partition {
        let n = self.len().max(rhs.len());
        Partition {
            parts: (0..n).map(|i| self.part(i) + rhs.part(i)).collect(),
        }
    }

    /// Transpose of the Young diagram; an involution.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition {
            parts: (0..cols)
                .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
                .collect(),
        }
    }

    /// Rows whose last box is removable (keeping a partition).
    pub fn corners(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .collect()
    }

    /// Rows (including one new row) where a box can be added.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.len())
            .filter(|&r| r == 0 || self.part(r) < self.part(r - 1))
            .collect()
    }

    /// Partition with one box removed at row `r`.
    pub fn remove_box(&self, r: usize) -> Result<Partition> {
        let mut parts = self.parts.clone();
        if r >= parts.len() || parts[r] <= self.part(r + 1) {
            return Err(Error::InvalidPartition(format!(
                "row {r} has no removable box in {self}"
            )));
        }
        parts[r] -= 1;
        Partition::new(parts)
    }

    /// Partition with one box added at row `r`.
    pub fn add_box(&self, r: usize) -> Result<Partition> {
        if r > self.len() || (r > 0 && self.part(r) >= self.part(r - 1)) {
            return Err(Error::InvalidPartition(format!(
                "cannot add a box at row {r} of {self}"
            )));
        }
        let mut parts = self.parts.clone();
        if r == parts.len() {
            parts.push(1);
        } else {
            parts[r] += 1;
        }
        Partition::new(parts)
    }

    /// Dimension of the nilpotent orbit with this Jordan type:
    /// `N(N+1) - 2 * sum_i i*part(i)` with rows indexed from 1.
    /// Always even; 0 exactly for the column shape.
    pub fn nilpotent_orbit_dim(&self) -> u64 {
        let n = self.size() as u64;
        let weighted: u64 = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| (i as u64 + 1) * p as u64)
            .sum();
        n * (n + 1) - 2 * weighted
    }

    /// Number of standard Young tableaux of this shape, by dynamic
    /// programming over the Young lattice. Overflow is reported, not wrapped.
    pub fn count_syt(&self) -> Result<u64> {
        fn go(p: &Partition, memo: &mut HashMap<Vec<usize>, u64>) -> Result<u64> {
            if p.is_empty() {
                return Ok(1);
            }
            if let Some(&v) = memo.get(p.parts()) {
                return Ok(v);
            }
            let mut total: u64 = 0;
            for r in p.corners() {
                let sub = p.remove_box(r)?;
                let v = go(&sub, memo)?;
                total = total
                    .checked_add(v)
                    .ok_or_else(|| Error::CountOverflow(p.to_string()))?;
            }
            memo.insert(p.parts().to_vec(), total);
            Ok(total)
        }
        go(self, &mut HashMap::new())
    }

    /// All partitions of `n`.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn helper(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for part in (1..=n.min(max)).rev() {
                prefix.push(part);
                helper(n - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        helper(n, n, &mut Vec::new(), &mut out);
        out
    }
}

/// True iff `outer / inner` is a column strip: containment plus at most one
/// box added per row.
pub fn is_column_strip(inner: &Partition, outer: &Partition) -> bool {
    inner.young_leq(outer) && (0..outer.len()).all(|i| outer.part(i) - inner.part(i) <= 1)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// A composition: a sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "zero part in {parts:?}"
            )));
        }
        Ok(Composition { parts })
    }

    /// The composition `(1, 1, ..., 1)` of `n`.
    pub fn ones(n: usize) -> Self {
        Composition {
            parts: vec![1; n],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn reversed(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    /// Prefix sums `a_1, a_1+a_2, ...`.
    pub fn cuts(&self) -> Vec<usize> {
        let mut acc = 0;
        self.parts
            .iter()
            .map(|&p| {
                acc += p;
                acc
            })
            .collect()
    }
}

impl fmt::Display for Composition {
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

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Composition::new(parts).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(pt(&[1, 1, 1, 1]).dominance_leq(&pt(&[4])).unwrap());
        assert!(pt(&[2, 2]).dominance_leq(&pt(&[3, 1])).unwrap());
        assert!(!pt(&[3, 1]).dominance_leq(&pt(&[2, 2])).unwrap());
    }

    #[test]
    fn dominance_size_mismatch_is_an_error() {
        let err = pt(&[2]).dominance_leq(&pt(&[2, 1])).unwrap_err();
        assert!(matches!(err, Error::IncomparableSizes { lhs: 2, rhs: 3 }));
    }

    #[test]
    fn dominance_is_partial_order() {
        for n in 1..=6 {
            let all = Partition::all_of(n);
            // minimum and maximum
            let min = pt(&vec![1; n]);
            let max = pt(&[n]);
            for a in &all {
                assert!(min.dominance_leq(a).unwrap());
                assert!(a.dominance_leq(&max).unwrap());
                assert!(a.dominance_leq(a).unwrap());
            }
            for a in &all {
                for b in &all {
                    if a.dominance_leq(b).unwrap() && b.dominance_leq(a).unwrap() {
                        assert_eq!(a, b);
                    }
                    for c in &all {
                        if a.dominance_leq(b).unwrap() && b.dominance_leq(c).unwrap() {
                            assert!(a.dominance_leq(c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn add_examples_and_monotonicity() {
        assert_eq!(pt(&[1, 1]).add(&pt(&[1, 1])), pt(&[2, 2]));
        assert_eq!(pt(&[2]).add(&pt(&[1, 1])), pt(&[3, 1]));
        assert_eq!(pt(&[3, 1]).add(&Partition::empty()), pt(&[3, 1]));
        // add respects dominance in both directions
        for a in Partition::all_of(5) {
            for b in Partition::all_of(5) {
                for m in Partition::all_of(3) {
                    let lhs = a.dominance_leq(&b).unwrap();
                    let rhs = a.add(&m).dominance_leq(&b.add(&m)).unwrap();
                    assert_eq!(lhs, rhs, "{a} {b} {m}");
                }
            }
        }
    }

    #[test]
    fn young_containment() {
        assert!(pt(&[1, 1]).young_leq(&pt(&[2, 2])));
        assert!(!pt(&[2]).young_leq(&pt(&[1, 1])));
        assert!(Partition::empty().young_leq(&pt(&[3, 1])));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(pt(&[3, 1]).conjugate(), pt(&[2, 1, 1]));
        assert_eq!(pt(&[2, 2]).conjugate(), pt(&[2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        for a in Partition::all_of(7) {
            assert_eq!(a.conjugate().conjugate(), a);
        }
        // order-reversing for dominance
        for a in Partition::all_of(6) {
            for b in Partition::all_of(6) {
                assert_eq!(
                    a.dominance_leq(&b).unwrap(),
                    b.conjugate().dominance_leq(&a.conjugate()).unwrap()
                );
            }
        }
    }

    #[test]
    fn column_strips() {
        assert!(is_column_strip(&pt(&[1, 1]), &pt(&[2, 2])));
        assert!(!is_column_strip(&pt(&[1, 1]), &pt(&[3, 1])));
        let lam = pt(&[3, 2]);
        assert!(is_column_strip(&lam, &lam));
    }

    #[test]
    fn orbit_dimension() {
        assert_eq!(pt(&[1, 1, 1, 1]).nilpotent_orbit_dim(), 0);
        assert_eq!(pt(&[4]).nilpotent_orbit_dim(), 12);
        assert_eq!(pt(&[2, 2]).nilpotent_orbit_dim(), 8);
        // cross-check against N^2 - sum of squared conjugate parts
        for n in 0..=8 {
            for a in Partition::all_of(n) {
                let alt: u64 = (n * n) as u64
                    - a.conjugate()
                        .parts()
                        .iter()
                        .map(|&c| (c * c) as u64)
                        .sum::<u64>();
                assert_eq!(a.nilpotent_orbit_dim(), alt);
                assert_eq!(a.nilpotent_orbit_dim() % 2, 0);
                assert_eq!(
                    a.nilpotent_orbit_dim() == 0,
                    a.parts().iter().all(|&p| p == 1)
                );
            }
        }
    }

    #[test]
    fn syt_counts() {
        assert_eq!(pt(&[5]).count_syt().unwrap(), 1);
        assert_eq!(pt(&[2, 2]).count_syt().unwrap(), 2);
        assert_eq!(pt(&[2, 1]).count_syt().unwrap(), 2);
        assert_eq!(pt(&[3, 2]).count_syt().unwrap(), 5);
        // sum over shapes of f^2 = n!
        for n in 1..=6 {
            let total: u64 = Partition::all_of(n)
                .iter()
                .map(|p| {
                    let f = p.count_syt().unwrap();
                    f * f
                })
                .sum();
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn syt_count_overflow_detected() {
        // the staircase (14,13,...,1) has far more than 2^64 standard tableaux
        let parts: Vec<usize> = (1..=14).rev().collect();
        assert!(matches!(
            pt(&parts).count_syt(),
            Err(Error::CountOverflow(_))
        ));
    }

    #[test]
    fn partition_canonicalization() {
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), pt(&[3, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::from_unsorted(vec![0, 2, 1, 2]), pt(&[2, 2, 1]));
    }

    #[test]
    fn json_round_trip() {
        for n in 0..=6 {
            for a in Partition::all_of(n) {
                let s = serde_json::to_string(&a).unwrap();
                let back: Partition = serde_json::from_str(&s).unwrap();
                assert_eq!(a, back);
            }
        }
        assert_eq!(serde_json::to_string(&pt(&[3, 1])).unwrap(), "[3,1]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn composition_validation() {
        assert!(Composition::new(vec![2, 0, 1]).is_err());
        let c = Composition::new(vec![2, 1, 1]).unwrap();
        assert_eq!(c.total(), 4);
        assert_eq!(c.cuts(), vec![2, 3, 4]);
        assert_eq!(c.reversed().parts(), &[1, 1, 2]);
    }
}
