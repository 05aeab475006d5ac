//! Two-rowed arrays and the four insertion correspondences.

use std::fmt;

use crate::error::{Error, Result};
use crate::fillings::Filling;
use crate::growth::GrowthDiagram;
use crate::local_rules::Variant;
use crate::partitions::Partition;

/// A tableau stored row by row, top row first (English reading).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Tableau> {
        let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau(format!("row lengths of {rows:?} increase")));
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_padded(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn transpose(&self) -> Tableau {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (0..width)
            .map(|j| self.rows.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect())
            .collect();
        Tableau { rows }
    }

    /// Rows weakly increasing, columns strictly increasing.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above));
        rows_ok && cols_ok
    }

    /// Shape formed by the entries not exceeding `bound`.
    pub fn shape_up_to(&self, bound: u32) -> Partition {
        Partition::from_padded(
            self.rows
                .iter()
                .map(|r| r.iter().filter(|&&e| e <= bound).count())
                .collect(),
        )
    }

    /// The tableau whose entry `i` fills the squares of `chain[i] / chain[i-1]`.
    pub fn from_chain(chain: &[Partition]) -> Result<Tableau> {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (i, w) in chain.windows(2).enumerate() {
            if !w[1].contains(&w[0]) {
                return Err(Error::InvalidTableau(format!("{} does not contain {}", w[1], w[0])));
            }
            for r in 0..w[1].len() {
                if rows.len() <= r {
                    rows.push(Vec::new());
                }
                for _ in w[0][r]..w[1][r] {
                    rows[r].push(i as u32 + 1);
                }
            }
        }
        Tableau::new(rows)
    }

    /// Row insertion: `x` bumps the first entry of a row strictly larger
    /// than it. Returns the (1-based) row of the new cell.
    pub fn row_insert(&mut self, mut x: u32) -> usize {
        for (i, row) in self.rows.iter_mut().enumerate() {
            match row.iter().position(|&e| e > x) {
                Some(j) => x = std::mem::replace(&mut row[j], x),
                None => {
                    row.push(x);
                    return i + 1;
                }
            }
        }
        self.rows.push(vec![x]);
        self.rows.len()
    }

    /// Column insertion: `x` bumps the first entry of a column greater than
    /// or equal to it. Returns the (1-based) column of the new cell.
    pub fn col_insert(&mut self, mut x: u32) -> usize {
        let width = self.rows.first().map_or(0, Vec::len);
        for j in 0..width {
            let height = self.rows.iter().take_while(|r| r.len() > j).count();
            match (0..height).find(|&i| self.rows[i][j] >= x) {
                Some(i) => x = std::mem::replace(&mut self.rows[i][j], x),
                None => {
                    if height == self.rows.len() {
                        self.rows.push(Vec::new());
                    }
                    self.rows[height].push(x);
                    return j + 1;
                }
            }
        }
        match self.rows.first_mut() {
            Some(row) => row.push(x),
            None => self.rows.push(vec![x]),
        }
        width + 1
    }

    /// Removes the last cell of row `row` (1-based) and reverse-bumps it out
    /// of the tableau, undoing a row insertion.
    pub fn row_uninsert(&mut self, row: usize) -> Result<u32> {
        let last = self
            .rows
            .get(row.wrapping_sub(1))
            .filter(|r| !r.is_empty())
            .ok_or_else(|| Error::InvalidTableau(format!("row {row} is empty")))?;
        if self.rows.get(row).is_some_and(|below| below.len() == last.len()) {
            return Err(Error::InvalidTableau(format!("row {row} ends in no corner")));
        }
        let mut x = self.rows[row - 1].pop().unwrap();
        if self.rows[row - 1].is_empty() {
            self.rows.pop();
        }
        for r in (0..row - 1).rev() {
            let j = self.rows[r]
                .iter()
                .rposition(|&e| e < x)
                .ok_or_else(|| Error::InvalidTableau("no entry to bump".into()))?;
            x = std::mem::replace(&mut self.rows[r][j], x);
        }
        Ok(x)
    }

    fn set(&mut self, row: usize, col: usize, value: u32) {
        while self.rows.len() < row {
            self.rows.push(Vec::new());
        }
        let r = &mut self.rows[row - 1];
        debug_assert_eq!(r.len() + 1, col);
        r.push(value);
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BiwordOrder {
    /// Below equal tops the bottoms weakly increase.
    BottomWeaklyIncreasing,
    /// Below equal tops the bottoms decrease.
    BottomDecreasing,
}

/// Pairs `(top, bottom)`, sorted by top and then by bottom per the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoRowedArray {
    pub pairs: Vec<(u32, u32)>,
    pub order: BiwordOrder,
}

impl TwoRowedArray {
    pub fn new(mut pairs: Vec<(u32, u32)>, order: BiwordOrder) -> TwoRowedArray {
        match order {
            BiwordOrder::BottomWeaklyIncreasing => pairs.sort(),
            BiwordOrder::BottomDecreasing => pairs.sort_by_key(|&(t, b)| (t, std::cmp::Reverse(b))),
        }
        TwoRowedArray { pairs, order }
    }

    pub fn tops(&self) -> Vec<u32> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn bottoms(&self) -> Vec<u32> {
        self.pairs.iter().map(|p| p.1).collect()
    }
}

impl fmt::Display for TwoRowedArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |v: Vec<u32>| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
        writeln!(f, "{}", line(self.tops()))?;
        writeln!(f, "{}", line(self.bottoms()))
    }
}

fn require_rectangle(f: &Filling) -> Result<()> {
    let shape = f.shape();
    if shape.row_lengths().iter().all(|&l| l == shape.cols()) && shape.rows() > 0 && shape.cols() > 0 {
        Ok(())
    } else {
        Err(Error::NotRectangular)
    }
}

/// An entry `m` in column `j`, row `i` becomes `m` pairs `(j, i)`.
pub fn filling_to_biword(f: &Filling, order: BiwordOrder) -> Result<TwoRowedArray> {
    require_rectangle(f)?;
    let pairs = f
        .entries()
        .into_iter()
        .flat_map(|(c, r, v)| std::iter::repeat_n((c as u32, r as u32), v as usize))
        .collect();
    Ok(TwoRowedArray::new(pairs, order))
}

/// Biword ordering each variant's insertion expects.
pub fn biword_order(variant: Variant) -> BiwordOrder {
    match variant {
        Variant::Standard | Variant::Rsk | Variant::DualRsk => BiwordOrder::BottomWeaklyIncreasing,
        Variant::RskPrime | Variant::DualRskPrime => BiwordOrder::BottomDecreasing,
    }
}

fn check_order(array: &TwoRowedArray, variant: Variant) -> Result<()> {
    if array.order == biword_order(variant) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{variant} insertion needs {:?}",
            biword_order(variant)
        )))
    }
}

fn insert_rows(array: &TwoRowedArray) -> (Tableau, Tableau) {
    let (mut p, mut q) = (Tableau::default(), Tableau::default());
    for &(top, bottom) in &array.pairs {
        let row = p.row_insert(bottom);
        let col = p.rows[row - 1].len();
        q.set(row, col, top);
    }
    (p, q)
}

fn insert_cols(array: &TwoRowedArray) -> (Tableau, Tableau) {
    let (mut p, mut q) = (Tableau::default(), Tableau::default());
    for &(top, bottom) in &array.pairs {
        let col = p.col_insert(bottom);
        let row = p.rows.iter().take_while(|r| r.len() >= col).count();
        q.set(row, col, top);
    }
    (p, q)
}

/// Row insertion of the bottoms, recording the tops.
pub fn rsk_insert(array: &TwoRowedArray) -> Result<(Tableau, Tableau)> {
    check_order(array, Variant::Rsk)?;
    Ok(insert_rows(array))
}

/// Column insertion of the bottoms, recording the tops.
pub fn dual_rsk_insert(array: &TwoRowedArray) -> Result<(Tableau, Tableau)> {
    check_order(array, Variant::DualRsk)?;
    Ok(insert_cols(array))
}

/// Row insertion with bottoms decreasing below equal tops.
pub fn rskp_insert(array: &TwoRowedArray) -> Result<(Tableau, Tableau)> {
    check_order(array, Variant::RskPrime)?;
    Ok(insert_rows(array))
}

/// Column insertion with bottoms decreasing below equal tops.
pub fn dual_rskp_insert(array: &TwoRowedArray) -> Result<(Tableau, Tableau)> {
    check_order(array, Variant::DualRskPrime)?;
    Ok(insert_cols(array))
}

/// The insertion matching `variant`, applied to a filling of a rectangle.
pub fn insert_filling(f: &Filling, variant: Variant) -> Result<(Tableau, Tableau)> {
    let array = filling_to_biword(f, biword_order(variant))?;
    match variant {
        Variant::Standard | Variant::Rsk => rsk_insert(&array),
        Variant::DualRsk => dual_rsk_insert(&array),
        Variant::RskPrime => rskp_insert(&array),
        Variant::DualRskPrime => dual_rskp_insert(&array),
    }
}

/// The pair read off the border of a labelled rectangle: the second
/// tableau from the labels along the top side, the first from those along
/// the right side read upwards. The column-insertion variants produce the
/// transposes of what their insertion algorithms return.
pub fn border_pair(d: &GrowthDiagram) -> Result<(Tableau, Tableau)> {
    require_rectangle(d.filling())?;
    let shape = d.shape();
    let top: Vec<Partition> = (0..=shape.cols()).map(|x| d.label(x, shape.rows()).clone()).collect();
    let right: Vec<Partition> = (0..=shape.rows()).map(|y| d.label(shape.cols(), y).clone()).collect();
    let (p, q) = (Tableau::from_chain(&right)?, Tableau::from_chain(&top)?);
    Ok(match d.variant() {
        Variant::DualRsk | Variant::DualRskPrime => (p.transpose(), q.transpose()),
        _ => (p, q),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::{label_diagram, Boundary};
    use crate::shapes::FerrersShape;

    fn t(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn running_example() -> Filling {
        Filling::from_ones(FerrersShape::rectangle(2, 4), &[(1, 1), (1, 3), (1, 4), (2, 1), (2, 2)]).unwrap()
    }

    #[test]
    fn biwords() {
        let inc = filling_to_biword(&running_example(), BiwordOrder::BottomWeaklyIncreasing).unwrap();
        assert_eq!(inc.tops(), vec![1, 1, 1, 2, 2]);
        assert_eq!(inc.bottoms(), vec![1, 3, 4, 1, 2]);
        let dec = filling_to_biword(&running_example(), BiwordOrder::BottomDecreasing).unwrap();
        assert_eq!(dec.bottoms(), vec![4, 3, 1, 2, 1]);
        let empty = Filling::empty(FerrersShape::rectangle(2, 2));
        assert!(filling_to_biword(&empty, BiwordOrder::BottomDecreasing)
            .unwrap()
            .pairs
            .is_empty());
        let stair = Filling::empty(FerrersShape::staircase(3));
        assert_eq!(
            filling_to_biword(&stair, BiwordOrder::BottomDecreasing),
            Err(Error::NotRectangular)
        );
    }

    #[test]
    fn four_insertions() {
        let f = running_example();
        assert_eq!(
            insert_filling(&f, Variant::Rsk).unwrap(),
            (t(&[&[1, 1, 2], &[3, 4]]), t(&[&[1, 1, 1], &[2, 2]]))
        );
        assert_eq!(
            insert_filling(&f, Variant::DualRsk).unwrap(),
            (t(&[&[1, 1], &[2, 3], &[4]]), t(&[&[1, 2], &[1, 2], &[1]]))
        );
        assert_eq!(
            insert_filling(&f, Variant::RskPrime).unwrap(),
            (t(&[&[1, 1], &[2], &[3], &[4]]), t(&[&[1, 2], &[1], &[1], &[2]]))
        );
        assert_eq!(
            insert_filling(&f, Variant::DualRskPrime).unwrap(),
            (t(&[&[1, 1, 3, 4], &[2]]), t(&[&[1, 1, 1, 2], &[2]]))
        );
        let inc = filling_to_biword(&f, BiwordOrder::BottomWeaklyIncreasing).unwrap();
        assert!(dual_rskp_insert(&inc).is_err());
    }

    #[test]
    fn growth_border_matches_insertion_on_running_example() {
        let f = running_example();
        for v in [Variant::Rsk, Variant::DualRsk, Variant::RskPrime, Variant::DualRskPrime] {
            let d = label_diagram(&f, v, &Boundary::empty(f.shape())).unwrap();
            assert_eq!(border_pair(&d).unwrap(), insert_filling(&f, v).unwrap(), "{v}");
        }
    }

    #[test]
    fn bumping_examples() {
        let mut a = t(&[&[1, 3, 4]]);
        assert_eq!(a.row_insert(1), 2);
        assert_eq!(a, t(&[&[1, 1, 4], &[3]]));
        let mut b = Tableau::default();
        assert_eq!(b.col_insert(5), 1);
        assert_eq!(b, t(&[&[5]]));
    }

    fn all_tableaux(max_cells: usize, max_entry: u32) -> Vec<Tableau> {
        let mut out = vec![Tableau::default()];
        let mut frontier = vec![Tableau::default()];
        for _ in 0..max_cells {
            let mut next = Vec::new();
            for tab in &frontier {
                for x in 1..=max_entry {
                    let mut u = tab.clone();
                    u.row_insert(x);
                    if !next.contains(&u) && !out.contains(&u) {
                        next.push(u);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn row_insertion_is_undone_by_reverse_bumping() {
        for tab in all_tableaux(5, 4) {
            assert!(tab.is_semistandard());
            for x in 1..=4 {
                let mut u = tab.clone();
                let row = u.row_insert(x);
                assert!(u.is_semistandard());
                assert_eq!(u.row_uninsert(row).unwrap(), x);
                assert_eq!(u, tab);
            }
        }
    }

    #[test]
    fn chains_to_tableaux() {
        let chain: Vec<Partition> = ["e", "2", "21", "22"].iter().map(|s| s.parse().unwrap()).collect();
        let tab = Tableau::from_chain(&chain).unwrap();
        assert_eq!(tab, t(&[&[1, 1], &[2, 3]]));
        assert_eq!(tab.shape_up_to(2), "21".parse().unwrap());
        assert_eq!(tab.transpose().transpose(), tab);
        assert_eq!(tab.to_string(), "1 1\n2 3\n");
    }
}
