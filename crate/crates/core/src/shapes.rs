//! Ferrers shapes in French notation, encoded by their D/R boundary word.
//!
//! Columns are numbered `1..=cols` from the left and rows `1..=rows` from the
//! bottom. Corners are lattice points `(x, y)` with `0 <= x <= cols` and
//! `0 <= y <= rows`; the cell `(c, r)` has corners `(c-1, r-1)` through
//! `(c, r)`.
//!
//! The word is kept verbatim. A leading `D` yields an empty top row and a
//! trailing `R` an empty rightmost column; both add corners without adding
//! cells, which is how the pending edges of the triangular diagrams are
//! represented. [`FerrersShape::normalized`] strips them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    D,
    R,
}

impl Step {
    pub fn flip(self) -> Step {
        match self {
            Step::D => Step::R,
            Step::R => Step::D,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::D => 'D',
            Step::R => 'R',
        }
    }
}

/// Anything that knows which cells `(col, row)` it contains.
pub trait CellBoard {
    fn contains_cell(&self, col: usize, row: usize) -> bool;

    /// Cells sorted by column, then row.
    fn cells(&self) -> Vec<(usize, usize)>;

    /// Whether every cell of the rectangle spanned by `(c1, r1)` and
    /// `(c2, r2)` belongs to the board.
    fn rectangle_in_shape(&self, (c1, r1): (usize, usize), (c2, r2): (usize, usize)) -> bool {
        let (c1, c2) = (c1.min(c2), c1.max(c2));
        let (r1, r2) = (r1.min(r2), r1.max(r2));
        (c1..=c2).all(|c| (r1..=r2).all(|r| self.contains_cell(c, r)))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FerrersShape {
    word: Vec<Step>,
    /// Row lengths, bottom row first.
    row_lengths: Vec<usize>,
    /// Column heights, leftmost column first.
    col_heights: Vec<usize>,
}

impl FerrersShape {
    pub fn from_steps(word: Vec<Step>) -> FerrersShape {
        let rows = word.iter().filter(|&&s| s == Step::D).count();
        let cols = word.len() - rows;
        let mut row_lengths = vec![0; rows];
        let mut col_heights = vec![0; cols];
        let (mut x, mut y) = (0usize, rows);
        for &step in &word {
            match step {
                Step::R => {
                    x += 1;
                    col_heights[x - 1] = y;
                }
                Step::D => {
                    row_lengths[y - 1] = x;
                    y -= 1;
                }
            }
        }
        FerrersShape {
            word,
            row_lengths,
            col_heights,
        }
    }

    pub fn from_word(word: &str) -> Result<FerrersShape> {
        let steps = word
            .trim()
            .chars()
            .map(|c| match c {
                'D' | 'd' => Ok(Step::D),
                'R' | 'r' => Ok(Step::R),
                other => Err(Error::InvalidWord(other)),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FerrersShape::from_steps(steps))
    }

    /// Shape with the given row lengths (bottom row first, weakly
    /// decreasing), framed into `rows` rows and `cols` columns. Extra rows
    /// and columns are empty and appear as pending edges of the word.
    pub fn framed(row_lengths: &[usize], rows: usize, cols: usize) -> Result<FerrersShape> {
        if row_lengths.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "row lengths {row_lengths:?} are not weakly decreasing"
            )));
        }
        if row_lengths.len() > rows || row_lengths.first().copied().unwrap_or(0) > cols {
            return Err(Error::InvalidShape(format!(
                "row lengths {row_lengths:?} do not fit a {cols}x{rows} frame"
            )));
        }
        let mut word = Vec::with_capacity(rows + cols);
        let mut x = 0;
        for r in (1..=rows).rev() {
            let len = row_lengths.get(r - 1).copied().unwrap_or(0);
            word.extend(std::iter::repeat_n(Step::R, len - x));
            x = len;
            word.push(Step::D);
        }
        word.extend(std::iter::repeat_n(Step::R, cols - x));
        Ok(FerrersShape::from_steps(word))
    }

    /// Shape whose rows (bottom first) are the parts of `lambda`.
    pub fn from_partition(lambda: &Partition) -> FerrersShape {
        FerrersShape::framed(lambda.parts(), lambda.len(), lambda[0]).expect("partition rows fit")
    }

    /// The triangular shape with `n - 1` cells in the bottom row.
    pub fn staircase(n: usize) -> FerrersShape {
        assert!(n >= 1, "staircase needs n >= 1");
        let rows: Vec<usize> = (1..n).rev().collect();
        FerrersShape::framed(&rows, n - 1, n - 1).unwrap()
    }

    /// The triangular shape together with its pending top and right edges:
    /// `n` rows and `n` columns, boundary word `(DR)^n`.
    pub fn bordered_staircase(n: usize) -> FerrersShape {
        let rows: Vec<usize> = (1..n).rev().collect();
        FerrersShape::framed(&rows, n, n).unwrap()
    }

    /// A `cols` by `rows` rectangle.
    pub fn rectangle(cols: usize, rows: usize) -> FerrersShape {
        if cols == 0 || rows == 0 {
            return FerrersShape::from_steps(Vec::new());
        }
        FerrersShape::framed(&vec![cols; rows], rows, cols).unwrap()
    }

    /// Every shape (without pending edges) with at most `max_cells` cells.
    pub fn all_up_to(max_cells: usize) -> Vec<FerrersShape> {
        Partition::all_up_to(max_cells)
            .iter()
            .map(FerrersShape::from_partition)
            .collect()
    }

    pub fn word(&self) -> &[Step] {
        &self.word
    }

    pub fn word_string(&self) -> String {
        self.word.iter().map(|s| s.as_char()).collect()
    }

    pub fn rows(&self) -> usize {
        self.row_lengths.len()
    }

    pub fn cols(&self) -> usize {
        self.col_heights.len()
    }

    /// Length of row `r` (1-based from the bottom).
    pub fn row_length(&self, r: usize) -> usize {
        self.row_lengths.get(r.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Height of column `c` (1-based from the left).
    pub fn col_height(&self, c: usize) -> usize {
        self.col_heights.get(c.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn row_lengths(&self) -> &[usize] {
        &self.row_lengths
    }

    pub fn col_heights(&self) -> &[usize] {
        &self.col_heights
    }

    pub fn num_cells(&self) -> usize {
        self.row_lengths.iter().sum()
    }

    /// Highest corner on the vertical line `x`.
    pub fn corner_height(&self, x: usize) -> usize {
        if x == 0 {
            self.rows()
        } else {
            self.col_height(x)
        }
    }

    pub fn has_corner(&self, x: usize, y: usize) -> bool {
        x <= self.cols() && y <= self.corner_height(x)
    }

    /// Corners visited by the boundary word, from top-left to bottom-right.
    pub fn border_corners(&self) -> Vec<(usize, usize)> {
        let (mut x, mut y) = (0, self.rows());
        let mut out = vec![(x, y)];
        for &step in &self.word {
            match step {
                Step::R => x += 1,
                Step::D => y -= 1,
            }
            out.push((x, y));
        }
        out
    }

    /// The same cells without pending edges.
    pub fn normalized(&self) -> FerrersShape {
        let start = self.word.iter().take_while(|&&s| s == Step::D).count();
        let end = self.word.len() - self.word.iter().rev().take_while(|&&s| s == Step::R).count();
        FerrersShape::from_steps(self.word[start..end.max(start)].to_vec())
    }

    /// Reflection in the main diagonal: rows become columns.
    pub fn reflect(&self) -> FerrersShape {
        FerrersShape::from_steps(self.word.iter().rev().map(|s| s.flip()).collect())
    }

    pub fn is_symmetric(&self) -> bool {
        self.reflect() == *self
    }

    /// Row lengths as a partition (bottom row is the largest part).
    pub fn as_partition(&self) -> Partition {
        Partition::from_padded(self.row_lengths.clone())
    }
}

impl CellBoard for FerrersShape {
    fn contains_cell(&self, col: usize, row: usize) -> bool {
        col >= 1 && row >= 1 && col <= self.row_length(row)
    }

    fn cells(&self) -> Vec<(usize, usize)> {
        (1..=self.cols())
            .flat_map(|c| (1..=self.col_height(c)).map(move |r| (c, r)))
            .collect()
    }

    /// Left- and bottom-justification reduce the check to the top-right
    /// cell of the rectangle.
    fn rectangle_in_shape(&self, (c1, r1): (usize, usize), (c2, r2): (usize, usize)) -> bool {
        c1.min(c2) >= 1 && r1.min(r2) >= 1 && self.contains_cell(c1.max(c2), r1.max(r2))
    }
}

impl fmt::Display for FerrersShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word_string())
    }
}

impl fmt::Debug for FerrersShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FerrersShape({})", self.word_string())
    }
}

impl FromStr for FerrersShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FerrersShape::from_word(s)
    }
}

/// Bottom-justified columns whose heights first weakly increase and then
/// weakly decrease.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StackPolyomino {
    col_heights: Vec<usize>,
}

impl StackPolyomino {
    pub fn new(col_heights: Vec<usize>) -> Result<StackPolyomino> {
        if col_heights.contains(&0) {
            return Err(Error::InvalidShape("stack columns must be nonempty".into()));
        }
        let peak = col_heights
            .iter()
            .enumerate()
            .max_by_key(|&(i, &h)| (h, std::cmp::Reverse(i)))
            .map(|(i, _)| i)
            .unwrap_or(0);
        let rising = col_heights[..peak].windows(2).all(|w| w[0] <= w[1]);
        let falling = col_heights[peak..].windows(2).all(|w| w[0] >= w[1]);
        if !(rising && falling) {
            return Err(Error::InvalidShape(format!(
                "column heights {col_heights:?} are not unimodal"
            )));
        }
        Ok(StackPolyomino { col_heights })
    }

    pub fn col_heights(&self) -> &[usize] {
        &self.col_heights
    }

    pub fn num_cells(&self) -> usize {
        self.col_heights.iter().sum()
    }

    /// Columns reordered from longest to shortest.
    pub fn sort_columns(&self) -> FerrersShape {
        let mut heights = self.col_heights.clone();
        heights.sort_unstable_by(|a, b| b.cmp(a));
        let rows = Partition::from_padded(heights).conjugate();
        FerrersShape::from_partition(&rows)
    }

    pub fn is_ferrers(&self) -> bool {
        self.col_heights.windows(2).all(|w| w[0] >= w[1])
    }

    /// Every stack polyomino with between 1 and `max_cells` cells.
    pub fn all_up_to(max_cells: usize) -> Vec<StackPolyomino> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        compositions(max_cells, &mut current, &mut |heights| {
            if let Ok(stack) = StackPolyomino::new(heights.to_vec()) {
                out.push(stack);
            }
        });
        out
    }
}

fn compositions(budget: usize, current: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if !current.is_empty() {
        visit(current);
    }
    for h in 1..=budget {
        current.push(h);
        compositions(budget - h, current, visit);
        current.pop();
    }
}

impl CellBoard for StackPolyomino {
    fn contains_cell(&self, col: usize, row: usize) -> bool {
        col >= 1 && row >= 1 && self.col_heights.get(col - 1).is_some_and(|&h| row <= h)
    }

    fn cells(&self) -> Vec<(usize, usize)> {
        self.col_heights
            .iter()
            .enumerate()
            .flat_map(|(i, &h)| (1..=h).map(move |r| (i + 1, r)))
            .collect()
    }
}

impl FromStr for StackPolyomino {
    type Err = Error;

    /// Comma-separated column heights, e.g. `1,3,2`.
    fn from_str(s: &str) -> Result<Self> {
        let heights = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse(format!("{s}: {e}")))?;
        StackPolyomino::new(heights)
    }
}
