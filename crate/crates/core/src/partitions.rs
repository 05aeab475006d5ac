//! Integer partitions and the diagram operations the local rules consume.
//!
//! A [`Partition`] stores its positive parts only; reading past the stored
//! length yields zero, so `lambda[i]` is always defined.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any other zero or an increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Trims a zero-padded sequence that is known to be weakly decreasing.
    pub(crate) fn from_padded(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of squares in the diagram.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `k`, counting rows from 1; zero beyond the last part.
    pub fn row(&self, k: usize) -> usize {
        assert!(k >= 1, "rows are numbered from 1");
        self[k - 1]
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Diagram union: coordinatewise maximum.
    pub fn union(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition::from_padded((0..n).map(|i| self[i].max(other[i])).collect())
    }

    /// Diagram intersection: coordinatewise minimum.
    pub fn intersect(&self, other: &Partition) -> Partition {
        let n = self.len().min(other.len());
        Partition::from_padded((0..n).map(|i| self[i].min(other[i])).collect())
    }

    /// Whether the diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other[i] <= self[i])
    }

    /// `self / inner` is a horizontal strip: at most one square per column.
    pub fn is_horizontal_strip(&self, inner: &Partition) -> bool {
        self.contains(inner) && (0..self.len()).all(|i| inner[i] >= self[i + 1])
    }

    /// `self / inner` is a vertical strip: at most one square per row.
    pub fn is_vertical_strip(&self, inner: &Partition) -> bool {
        self.contains(inner) && (0..self.len()).all(|i| self[i] - inner[i] <= 1)
    }

    /// Adds one square at the end of row `k` (1-based).
    pub fn add_square_in_row(&self, k: usize) -> Result<Partition> {
        if k == 0 || k > self.len() + 1 || (k > 1 && self[k - 2] <= self[k - 1]) {
            return Err(Error::InvalidSquare {
                partition: self.to_string(),
                row: k,
            });
        }
        let mut parts = self.parts.clone();
        if k > parts.len() {
            parts.push(1);
        } else {
            parts[k - 1] += 1;
        }
        Ok(Partition { parts })
    }

    /// Removes the last square of row `k` (1-based).
    pub fn remove_square_in_row(&self, k: usize) -> Result<Partition> {
        if k == 0 || k > self.len() || self[k] == self[k - 1] {
            return Err(Error::InvalidSquare {
                partition: self.to_string(),
                row: k,
            });
        }
        let mut parts = self.parts.clone();
        parts[k - 1] -= 1;
        Ok(Partition::from_padded(parts))
    }

    /// The unique row in which `self` has one more square than `inner`.
    pub fn diff_row(&self, inner: &Partition) -> Result<usize> {
        if !self.contains(inner) || self.size() != inner.size() + 1 {
            return Err(Error::NotAdjacent(self.to_string(), inner.to_string()));
        }
        Ok((0..self.len()).find(|&i| self[i] != inner[i]).unwrap() + 1)
    }

    /// Unambiguous I/O form, e.g. `[2,1]`; the empty partition is `[]`.
    pub fn bracketed(&self) -> String {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        format!("[{}]", inner.join(","))
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_partitions(n, n, &mut current, &mut out);
        out
    }

    /// All partitions of size at most `n`, ordered by size.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of).collect()
    }
}

fn fill_partitions(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for part in (1..=rest.min(max)).rev() {
        current.push(part);
        fill_partitions(rest - part, part, current, out);
        current.pop();
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    /// Zero-based access; positions past the last part read as 0.
    fn index(&self, i: usize) -> &usize {
        self.parts.get(i).unwrap_or(&0)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Compact notation: `21` for (2,1), `e` for the empty partition. Parts of
/// ten or more are wrapped in parentheses to stay readable.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "e");
        }
        for &p in &self.parts {
            if p < 10 {
                write!(f, "{p}")?;
            } else {
                write!(f, "({p})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts the bracketed form `[2,1]`, the compact form `21`, and `e`,
    /// `∅` or `[]` for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" || s == "∅" || s == "()" {
            return Ok(Partition::empty());
        }
        let parts = if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| Error::Parse(format!("{s}: {e}")))?
            }
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("{s}: unexpected {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Partition::new(parts)
    }
}

/// Shorthand for literals in tests and fixtures: `p(&[2, 1])`.
pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition literal")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 2]).conjugate(), p(&[2, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 1, 1, 1]).conjugate(), p(&[4, 1]));
    }

    #[test]
    fn union_and_intersection() {
        assert_eq!(p(&[2, 1]).union(&p(&[1, 1, 1])), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().union(&p(&[3])), p(&[3]));
        assert_eq!(p(&[2]).union(&p(&[1, 1])), p(&[2, 1]));
        assert_eq!(p(&[2, 1]).intersect(&p(&[1, 1, 1])), p(&[1, 1]));
        assert_eq!(Partition::empty().intersect(&p(&[3])), Partition::empty());
        assert_eq!(p(&[2]).intersect(&p(&[1, 1])), p(&[1]));
    }

    #[test]
    fn containment() {
        assert!(p(&[2, 1]).contains(&p(&[1, 1])));
        assert!(!p(&[2]).contains(&p(&[1, 1])));
        for lambda in Partition::all_up_to(6) {
            assert!(lambda.contains(&Partition::empty()));
        }
    }

    #[test]
    fn strips() {
        assert!(p(&[3, 1]).is_horizontal_strip(&p(&[2, 1])));
        assert!(!p(&[2, 2]).is_horizontal_strip(&p(&[1, 1])));
        assert!(p(&[4, 2]).is_horizontal_strip(&p(&[4, 2])));
        assert!(p(&[2, 2]).is_vertical_strip(&p(&[2, 1])));
        assert!(!p(&[3, 1]).is_vertical_strip(&p(&[1, 1])));
        assert!(!p(&[2]).is_horizontal_strip(&p(&[1, 1])));
    }

    #[test]
    fn add_and_diff_row() {
        assert_eq!(p(&[2, 1]).add_square_in_row(2).unwrap(), p(&[2, 2]));
        assert!(p(&[2, 2]).add_square_in_row(2).is_err());
        assert_eq!(p(&[2, 1]).add_square_in_row(3).unwrap(), p(&[2, 1, 1]));
        assert!(p(&[2, 1]).add_square_in_row(4).is_err());
        assert_eq!(Partition::empty().add_square_in_row(1).unwrap(), p(&[1]));
        assert_eq!(p(&[2, 1]).diff_row(&p(&[1, 1])).unwrap(), 1);
        assert_eq!(p(&[2, 1]).diff_row(&p(&[2])).unwrap(), 2);
        assert!(p(&[2, 1]).diff_row(&p(&[1])).is_err());
        assert!(p(&[2]).diff_row(&p(&[1, 1])).is_err());
        assert_eq!(p(&[2, 2]).remove_square_in_row(2).unwrap(), p(&[2, 1]));
        assert!(p(&[2, 2]).remove_square_in_row(1).is_err());
    }

    #[test]
    fn text_forms() {
        assert_eq!(p(&[2, 1]).to_string(), "21");
        assert_eq!(Partition::empty().to_string(), "e");
        assert_eq!(p(&[2, 1]).bracketed(), "[2,1]");
        assert_eq!(Partition::empty().bracketed(), "[]");
        assert_eq!("[2,1]".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("211".parse::<Partition>().unwrap(), p(&[2, 1, 1]));
        assert_eq!("e".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("[12,3]".parse::<Partition>().unwrap().to_string(), "(12)3");
        assert!("12".parse::<Partition>().is_err());
        assert!("[1,x]".parse::<Partition>().is_err());
        assert!(Partition::new(vec![1, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), p(&[3, 1]));
    }

    #[test]
    fn serde_uses_plain_arrays() {
        let json = serde_json::to_string(&p(&[3, 1])).unwrap();
        assert_eq!(json, "[3,1]");
        let back: Partition = serde_json::from_str("[2,2,1]").unwrap();
        assert_eq!(back, p(&[2, 2, 1]));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn partition_counts_and_order() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let mut all = Partition::all_up_to(4);
        let snapshot = all.clone();
        all.sort();
        assert_eq!(all.first(), Some(&Partition::empty()));
        assert_eq!(all.len(), snapshot.len());
        assert!(p(&[1, 1, 1]) < p(&[2, 1]));
        assert!(p(&[3]) < p(&[1, 1, 1, 1]));
    }

    #[test]
    fn conjugation_is_an_involution_up_to_20() {
        for lambda in Partition::all_up_to(20) {
            assert_eq!(lambda.conjugate().conjugate(), lambda);
            assert_eq!(lambda.conjugate().size(), lambda.size());
        }
    }

    #[test]
    fn conjugation_commutes_with_union_and_intersection() {
        // Transposing diagrams preserves unions and intersections of cell
        // sets, so conjugation does not swap the two operations.
        assert_ne!(
            p(&[]).union(&p(&[1])).conjugate(),
            p(&[]).conjugate().intersect(&p(&[1]))
        );
        let all = Partition::all_up_to(8);
        for mu in &all {
            for nu in &all {
                assert_eq!(mu.union(nu).conjugate(), mu.conjugate().union(&nu.conjugate()));
                assert_eq!(mu.intersect(nu).conjugate(), mu.conjugate().intersect(&nu.conjugate()));
            }
        }
    }

    #[test]
    fn strip_duality_and_containment_order() {
        let all = Partition::all_up_to(8);
        for a in &all {
            for b in &all {
                assert_eq!(
                    a.is_horizontal_strip(b),
                    a.conjugate().is_vertical_strip(&b.conjugate())
                );
                if a.contains(b) && b.contains(a) {
                    assert_eq!(a, b);
                }
            }
            assert!(a.contains(a));
        }
        for a in &all {
            for b in all.iter().filter(|b| a.contains(b)) {
                for c in all.iter().filter(|c| b.contains(c)) {
                    assert!(a.contains(c));
                }
            }
        }
    }
}
