//! Set partitions and matchings as fillings of triangular shapes, their
//! crossing and nesting statistics, and the tableau bijections obtained
//! from growth diagrams.
//!
//! The pair `(i, j)`, `i < j`, of a set partition of `{1..n}` sits in
//! column `i` and in the `j`-th row from above of the bordered triangle
//! with `n` rows and `n` columns, i.e. at internal row `n + 1 - j`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fillings::Filling;
use crate::growth::{label_diagram, reconstruct, Boundary, OscillatingTableau};
use crate::insertion::Tableau;
use crate::local_rules::Variant;
use crate::partitions::Partition;
use crate::shapes::FerrersShape;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    /// Sorted blocks, ordered by their minima.
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<SetPartition> {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        if blocks.iter().any(Vec::is_empty) {
            return Err(Error::Parse("empty block".into()));
        }
        blocks.sort();
        let mut seen: Vec<usize> = blocks.iter().flatten().copied().collect();
        seen.sort_unstable();
        if seen != (1..=n).collect::<Vec<_>>() {
            return Err(Error::Parse(format!("blocks {blocks:?} do not partition 1..{n}")));
        }
        Ok(SetPartition { n, blocks })
    }

    /// Partition of `{1..n}` whose standard representation is `pairs`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<SetPartition> {
        let mut next = vec![0usize; n + 1];
        let mut has_prev = vec![false; n + 1];
        for &(i, j) in pairs {
            if !(1 <= i && i < j && j <= n) || next[i] != 0 || has_prev[j] {
                return Err(Error::Parse(format!(
                    "pairs {pairs:?} are not a standard representation"
                )));
            }
            next[i] = j;
            has_prev[j] = true;
        }
        let blocks = (1..=n)
            .filter(|&i| !has_prev[i])
            .map(|start| {
                let mut block = vec![start];
                let mut cur = start;
                while next[cur] != 0 {
                    cur = next[cur];
                    block.push(cur);
                }
                block
            })
            .collect();
        SetPartition::new(n, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Every set partition of `{1..n}`, in a fixed order.
    pub fn all(n: usize) -> Vec<SetPartition> {
        let mut out = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        fn grow(i: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<SetPartition>) {
            if i > n {
                out.push(SetPartition {
                    n,
                    blocks: blocks.clone(),
                });
                return;
            }
            for b in 0..blocks.len() {
                blocks[b].push(i);
                grow(i + 1, n, blocks, out);
                blocks[b].pop();
            }
            blocks.push(vec![i]);
            grow(i + 1, n, blocks, out);
            blocks.pop();
        }
        grow(1, n, &mut blocks, &mut out);
        out
    }

    /// Pairs of consecutive elements within blocks.
    pub fn standard_representation(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = self
            .blocks
            .iter()
            .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])))
            .collect();
        pairs.sort_unstable();
        pairs
    }

    /// The standard representation together with `(i, i)` for singletons.
    pub fn enhanced_representation(&self) -> Vec<(usize, usize)> {
        let mut pairs = self.standard_representation();
        pairs.extend(self.blocks.iter().filter(|b| b.len() == 1).map(|b| (b[0], b[0])));
        pairs.sort_unstable();
        pairs
    }

    pub fn singletons(&self) -> Vec<usize> {
        self.blocks.iter().filter(|b| b.len() == 1).map(|b| b[0]).collect()
    }

    /// Elements that are neither the minimum nor the maximum of their block.
    pub fn middles(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .blocks
            .iter()
            .flat_map(|b| b.iter().skip(1).take(b.len().saturating_sub(2)).copied())
            .collect();
        out.sort_unstable();
        out
    }

    pub fn min_max_blocks(&self) -> (BTreeSet<usize>, BTreeSet<usize>) {
        (
            self.blocks.iter().map(|b| b[0]).collect(),
            self.blocks.iter().map(|b| *b.last().unwrap()).collect(),
        )
    }

    pub fn cross(&self) -> usize {
        max_clique(&self.standard_representation(), |a, b| {
            a.0 < b.0 && b.0 < a.1 && a.1 < b.1
        })
    }

    pub fn nest(&self) -> usize {
        max_clique(&self.standard_representation(), |a, b| a.0 < b.0 && b.1 < a.1)
    }

    pub fn enhanced_cross(&self) -> usize {
        max_clique(&self.enhanced_representation(), |a, b| {
            a.0 < b.0 && b.0 <= a.1 && a.1 < b.1
        })
    }

    pub fn enhanced_nest(&self) -> usize {
        max_clique(&self.enhanced_representation(), |a, b| {
            a.0 < b.0 && b.0 <= b.1 && b.1 < a.1
        })
    }
}

/// Largest set of pairs that are pairwise related, brute force over
/// subsets. `related(a, b)` is asked with `a` before `b` in sorted order.
fn max_clique(pairs: &[(usize, usize)], related: impl Fn((usize, usize), (usize, usize)) -> bool) -> usize {
    let t = pairs.len();
    assert!(t < 25, "too many pairs for brute force");
    let mut best = 0;
    for mask in 1u32..(1 << t) {
        let members: Vec<_> = (0..t).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        if members.len() > best
            && members
                .iter()
                .enumerate()
                .all(|(x, &a)| members[x + 1..].iter().all(|&b| related(a, b)))
        {
            best = members.len();
        }
    }
    best
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&blocks.join(" | "))
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Blocks separated by `|`, elements by whitespace: `1 4 5 7 | 2 6 | 3`.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return SetPartition::new(0, Vec::new());
        }
        let blocks = s
            .split('|')
            .map(|b| {
                b.split_whitespace()
                    .map(|e| e.parse::<usize>().map_err(|e| Error::Parse(e.to_string())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let n = blocks.iter().map(Vec::len).sum();
        SetPartition::new(n, blocks)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    /// Pairs `(a, b)` with `a < b`, sorted.
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Result<Matching> {
        pairs = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort_unstable();
        let mut seen: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        seen.sort_unstable();
        if seen != (1..=2 * pairs.len()).collect::<Vec<_>>() {
            return Err(Error::Parse(format!("{pairs:?} is not a perfect matching")));
        }
        Ok(Matching { pairs })
    }

    /// Half the number of points.
    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn to_set_partition(&self) -> SetPartition {
        let blocks = self.pairs.iter().map(|&(a, b)| vec![a, b]).collect();
        SetPartition::new(2 * self.n(), blocks).expect("a matching is a set partition")
    }

    pub fn from_set_partition(p: &SetPartition) -> Result<Matching> {
        if p.blocks().iter().any(|b| b.len() != 2) {
            return Err(Error::Parse(format!("{p} is not a matching")));
        }
        Matching::new(p.blocks().iter().map(|b| (b[0], b[1])).collect())
    }

    pub fn all(n: usize) -> Vec<Matching> {
        SetPartition::all(2 * n)
            .iter()
            .filter_map(|p| Matching::from_set_partition(p).ok())
            .collect()
    }

    pub fn cross(&self) -> usize {
        self.to_set_partition().cross()
    }

    pub fn nest(&self) -> usize {
        self.to_set_partition().nest()
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.pairs.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        f.write_str(&pairs.join(" "))
    }
}

impl FromStr for Matching {
    type Err = Error;

    /// Pairs such as `1-4 2-6 3-5`.
    fn from_str(s: &str) -> Result<Self> {
        let pairs = s
            .split_whitespace()
            .map(|p| {
                let (a, b) = p
                    .split_once('-')
                    .ok_or_else(|| Error::Parse(format!("pair {p:?} lacks '-'")))?;
                let parse = |t: &str| t.parse::<usize>().map_err(|e| Error::Parse(e.to_string()));
                Ok((parse(a)?, parse(b)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Matching::new(pairs)
    }
}

fn row_from_above(n: usize, j: usize) -> usize {
    n + 1 - j
}

/// The filling of the bordered triangle with `n` rows and columns.
pub fn setpartition_to_filling(p: &SetPartition) -> Filling {
    let n = p.n();
    let ones: Vec<(usize, usize)> = p
        .standard_representation()
        .into_iter()
        .map(|(i, j)| (i, row_from_above(n, j)))
        .collect();
    Filling::from_ones(FerrersShape::bordered_staircase(n), &ones).expect("pairs lie in the triangle")
}

pub fn filling_to_setpartition(f: &Filling) -> Result<SetPartition> {
    let n = f.shape().rows();
    if f.shape() != &FerrersShape::bordered_staircase(n) {
        return Err(Error::InvalidShape(format!("{} is not a bordered triangle", f.shape())));
    }
    f.require_class(crate::fillings::FillingClass::PartialPermutation)?;
    let pairs: Vec<(usize, usize)> = f.entries().iter().map(|&(c, r, _)| (c, n + 1 - r)).collect();
    SetPartition::from_pairs(n, &pairs)
}

pub fn setpartition_to_vacillating(p: &SetPartition) -> OscillatingTableau {
    let f = setpartition_to_filling(p);
    label_diagram(&f, Variant::Standard, &Boundary::empty(f.shape()))
        .expect("set partition fillings are partial permutations")
        .border_tableau()
}

/// Checks the shape of a vacillating tableau: it starts and ends at the
/// empty partition (unless `end` is given), odd steps delete a square or
/// do nothing, even steps add a square or do nothing.
pub fn is_vacillating(seq: &[Partition], end: Option<&Partition>) -> bool {
    let empty = Partition::empty();
    seq.len() % 2 == 1
        && seq.first() == Some(&empty)
        && seq.last() == Some(end.unwrap_or(&empty))
        && seq.windows(2).enumerate().all(|(k, w)| {
            let (small, large) = if k % 2 == 0 { (&w[1], &w[0]) } else { (&w[0], &w[1]) };
            large.contains(small) && large.size() <= small.size() + 1
        })
}

pub fn vacillating_to_setpartition(t: &OscillatingTableau) -> Result<SetPartition> {
    if !is_vacillating(&t.seq, None) {
        return Err(Error::InvalidTableau(format!("{} is not vacillating", t.compact())));
    }
    let (p, tab) = vacillating_to_pair(t)?;
    debug_assert_eq!(tab.size(), 0);
    Ok(p)
}

/// Growth on the triangle with the bottom side labelled by the chain of
/// shapes of `tab` restricted to `{1..l}`.
pub fn pair_to_vacillating(p: &SetPartition, tab: &Tableau) -> Result<OscillatingTableau> {
    let (_, maxima) = p.min_max_blocks();
    let entries: BTreeSet<u32> = tab.entries().collect();
    if entries.len() != tab.size() || !entries.iter().all(|&e| maxima.contains(&(e as usize))) {
        return Err(Error::InvalidTableau(format!(
            "entries of the tableau must be distinct block maxima of {p}"
        )));
    }
    let f = setpartition_to_filling(p);
    let bottom = (0..=p.n()).map(|l| tab.shape_up_to(l as u32)).collect();
    let boundary = Boundary::with_bottom(f.shape(), bottom)?;
    Ok(label_diagram(&f, Variant::Standard, &boundary)?.border_tableau())
}

pub fn vacillating_to_pair(t: &OscillatingTableau) -> Result<(SetPartition, Tableau)> {
    let end = t.seq.last().cloned().unwrap_or_default();
    if !is_vacillating(&t.seq, Some(&end)) {
        return Err(Error::InvalidTableau(format!("{} is not vacillating", t.compact())));
    }
    let n = t.seq.len() / 2;
    let shape = FerrersShape::bordered_staircase(n);
    let t = OscillatingTableau::new(&shape.word_string(), t.seq.clone(), Variant::Standard)?;
    let (f, boundary) = reconstruct(&shape, &t)?;
    if boundary.left.iter().any(|l| !l.is_empty()) {
        return Err(Error::InvalidTableau("left side is not empty".into()));
    }
    let tab = Tableau::from_chain(&boundary.bottom)?;
    Ok((filling_to_setpartition(&f)?, tab))
}

/// The triangle enlarged by a diagonal cell for every singleton and every
/// middle element, together with the enhanced filling.
pub fn hesitating_filling(p: &SetPartition) -> Filling {
    let n = p.n();
    let mut extra: Vec<usize> = p.singletons();
    extra.extend(p.middles());
    let shape = hesitating_shape(n, &extra);
    let mut ones: Vec<(usize, usize)> = p
        .standard_representation()
        .into_iter()
        .map(|(i, j)| (i, row_from_above(n, j)))
        .collect();
    ones.extend(p.singletons().into_iter().map(|i| (i, row_from_above(n, i))));
    Filling::from_ones(shape, &ones).expect("enhanced pairs lie in the enlarged triangle")
}

fn hesitating_shape(n: usize, extra: &[usize]) -> FerrersShape {
    let rows: Vec<usize> = (1..=n)
        .map(|r| {
            let i = n + 1 - r;
            if extra.contains(&i) {
                i
            } else {
                i - 1
            }
        })
        .filter(|&l| l > 0)
        .collect();
    FerrersShape::framed(&rows, n, n).expect("diagonal cells keep the shape valid")
}

pub fn setpartition_to_hesitating(p: &SetPartition) -> OscillatingTableau {
    let f = hesitating_filling(p);
    label_diagram(&f, Variant::Standard, &Boundary::empty(f.shape()))
        .expect("enhanced fillings are partial permutations")
        .border_tableau()
}

/// Step pattern of a hesitating tableau: for every `i`, either nothing then
/// add, delete then nothing, or add then delete.
pub fn is_hesitating(seq: &[Partition]) -> bool {
    let one = |large: &Partition, small: &Partition| large.contains(small) && large.size() == small.size() + 1;
    seq.len() % 2 == 1
        && seq.first().is_some_and(Partition::is_empty)
        && seq.last().is_some_and(Partition::is_empty)
        && seq.chunks(2).zip(seq[1..].chunks(2)).all(|(a, b)| {
            let (x, y, z) = (
                &a[0],
                &b[0],
                match b.get(1) {
                    Some(z) => z,
                    None => return true,
                },
            );
            (x == y && one(z, y)) || (one(x, y) && y == z) || (one(y, x) && one(y, z))
        })
}

pub fn hesitating_to_setpartition(t: &OscillatingTableau) -> Result<SetPartition> {
    if !is_hesitating(&t.seq) {
        return Err(Error::InvalidTableau(format!("{} is not hesitating", t.compact())));
    }
    let n = t.seq.len() / 2;
    let extra: Vec<usize> = (1..=n)
        .filter(|&i| t.seq[2 * i - 1].size() > t.seq[2 * i - 2].size())
        .collect();
    let shape = hesitating_shape(n, &extra);
    let t = OscillatingTableau::new(&shape.word_string(), t.seq.clone(), Variant::Standard)?;
    let (f, boundary) = reconstruct(&shape, &t)?;
    if !boundary.is_empty() {
        return Err(Error::InvalidTableau("boundary is not empty".into()));
    }
    let mut pairs = Vec::new();
    for (c, r, _) in f.entries() {
        let j = n + 1 - r;
        if c != j {
            pairs.push((c, j));
        }
    }
    let p = SetPartition::from_pairs(n, &pairs)?;
    if hesitating_filling(&p) != f {
        return Err(Error::InvalidTableau(format!(
            "{} does not encode a set partition",
            t.compact()
        )));
    }
    Ok(p)
}

/// The vacillating tableau of the matching with the odd positions dropped.
pub fn matching_to_oscillating(m: &Matching) -> OscillatingTableau {
    let vac = setpartition_to_vacillating(&m.to_set_partition());
    let seq: Vec<Partition> = vac.seq.iter().step_by(2).cloned().collect();
    let word: String = seq
        .windows(2)
        .map(|w| if w[1].size() > w[0].size() { 'R' } else { 'D' })
        .collect();
    OscillatingTableau {
        word,
        seq,
        variant: Variant::Standard,
    }
}

pub fn oscillating_to_matching(t: &OscillatingTableau) -> Result<Matching> {
    let seq = &t.seq;
    let single = |a: &Partition, b: &Partition| {
        (a.contains(b) && a.size() == b.size() + 1) || (b.contains(a) && b.size() == a.size() + 1)
    };
    if seq.len().is_multiple_of(2)
        || !seq[0].is_empty()
        || !seq.last().unwrap().is_empty()
        || !seq.windows(2).all(|w| single(&w[0], &w[1]))
    {
        return Err(Error::InvalidTableau(format!("{} is not oscillating", t.compact())));
    }
    let mut full = vec![seq[0].clone()];
    for w in seq.windows(2) {
        let middle = if w[1].size() > w[0].size() { &w[0] } else { &w[1] };
        full.push(middle.clone());
        full.push(w[1].clone());
    }
    let n = full.len() / 2;
    let vac = OscillatingTableau::new(
        &FerrersShape::bordered_staircase(n).word_string(),
        full,
        Variant::Standard,
    )?;
    Matching::from_set_partition(&vacillating_to_setpartition(&vac)?)
}

/// Labels with `from`, conjugates the border sequence and reconstructs
/// with the conjugate variant. The inverse is the same map started from
/// `from.conjugate()`.
pub fn conjugation_map(f: &Filling, from: Variant) -> Result<Filling> {
    let d = label_diagram(f, from, &Boundary::empty(f.shape()))?;
    let t = d.border_tableau().conjugate();
    let (g, boundary) = reconstruct(f.shape(), &t)?;
    debug_assert!(boundary.is_empty());
    Ok(g)
}

/// The set partition whose crossings and nestings are exchanged.
pub fn conjugate_setpartition(p: &SetPartition) -> SetPartition {
    let f = conjugation_map(&setpartition_to_filling(p), Variant::Standard).expect("standard map");
    filling_to_setpartition(&f).expect("image is a set partition filling")
}

/// The same exchange for the enhanced statistics, through hesitating
/// tableaux.
pub fn conjugate_setpartition_enhanced(p: &SetPartition) -> SetPartition {
    hesitating_to_setpartition(&setpartition_to_hesitating(p).conjugate())
        .expect("conjugate of a hesitating tableau is hesitating")
}

/// For every element: 0 when it only opens a block, 1 when it only closes
/// one, 2 for singletons and middle elements. The hesitating conjugation
/// preserves this word, not the pair of minima and maxima.
pub fn step_types(p: &SetPartition) -> Vec<u8> {
    let (mins, maxs) = p.min_max_blocks();
    (1..=p.n())
        .map(|i| match (mins.contains(&i), maxs.contains(&i)) {
            (true, false) => 0,
            (false, true) => 1,
            _ => 2,
        })
        .collect()
}

/// Block minima and maxima read from a vacillating tableau: `i` is a
/// minimum when step `2i-1` deletes nothing and a maximum when step `2i`
/// adds nothing.
pub fn min_max_from_vacillating(seq: &[Partition]) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let n = seq.len() / 2;
    let mins = (1..=n).filter(|&i| seq[2 * i - 1] == seq[2 * i - 2]).collect();
    let maxs = (1..=n).filter(|&i| seq[2 * i] == seq[2 * i - 1]).collect();
    (mins, maxs)
}
