//! Chains in fillings.
//!
//! A flavor is a two-letter code. The first letter is the vertical
//! relation (`N` weakly above, `n` strictly above, `S` weakly below, `s`
//! strictly below), the second the horizontal one (`E` weakly right, `e`
//! strictly right).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::CellBoard;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Vertical {
    WeakUp,
    StrictUp,
    WeakDown,
    StrictDown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Horizontal {
    WeakRight,
    StrictRight,
}

/// How a chain (or a collection of chains) is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LengthMode {
    /// Number of nonzero cells.
    Count,
    /// Sum of the entries; several units of one cell may lie in one chain.
    EntrySum,
    /// An entry `e` is `e` units, and one chain takes at most one unit of a
    /// cell.
    Multiplicity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChainSpec {
    pub vertical: Vertical,
    pub horizontal: Horizontal,
    pub length_mode: LengthMode,
    /// Only chains whose bounding rectangle lies inside the shape count.
    pub require_rectangle: bool,
}

impl ChainSpec {
    /// The flavor with its natural length mode and no rectangle condition.
    pub const fn new(vertical: Vertical, horizontal: Horizontal) -> ChainSpec {
        let weak_v = matches!(vertical, Vertical::WeakUp | Vertical::WeakDown);
        let weak_h = matches!(horizontal, Horizontal::WeakRight);
        let length_mode = match (weak_v, weak_h) {
            (true, true) => LengthMode::EntrySum,
            (false, false) => LengthMode::Multiplicity,
            _ => LengthMode::Count,
        };
        ChainSpec {
            vertical,
            horizontal,
            length_mode,
            require_rectangle: false,
        }
    }

    pub const NE: ChainSpec = ChainSpec::new(Vertical::WeakUp, Horizontal::WeakRight);
    pub const NE_STRICT: ChainSpec = ChainSpec::new(Vertical::StrictUp, Horizontal::StrictRight);
    pub const N_STRICT_E: ChainSpec = ChainSpec::new(Vertical::StrictUp, Horizontal::WeakRight);
    pub const N_E_STRICT: ChainSpec = ChainSpec::new(Vertical::WeakUp, Horizontal::StrictRight);
    pub const SE: ChainSpec = ChainSpec::new(Vertical::WeakDown, Horizontal::WeakRight);
    pub const SE_STRICT: ChainSpec = ChainSpec::new(Vertical::StrictDown, Horizontal::StrictRight);
    pub const S_STRICT_E: ChainSpec = ChainSpec::new(Vertical::StrictDown, Horizontal::WeakRight);
    pub const S_E_STRICT: ChainSpec = ChainSpec::new(Vertical::WeakDown, Horizontal::StrictRight);

    pub fn with_rectangle(mut self) -> ChainSpec {
        self.require_rectangle = true;
        self
    }

    pub fn without_rectangle(mut self) -> ChainSpec {
        self.require_rectangle = false;
        self
    }

    pub fn code(&self) -> String {
        let v = match self.vertical {
            Vertical::WeakUp => 'N',
            Vertical::StrictUp => 'n',
            Vertical::WeakDown => 'S',
            Vertical::StrictDown => 's',
        };
        let h = match self.horizontal {
            Horizontal::WeakRight => 'E',
            Horizontal::StrictRight => 'e',
        };
        format!("{v}{h}")
    }

    pub fn is_upward(&self) -> bool {
        matches!(self.vertical, Vertical::WeakUp | Vertical::StrictUp)
    }

    /// Whether two units in the same cell are comparable.
    pub fn is_reflexive(&self) -> bool {
        matches!(self.vertical, Vertical::WeakUp | Vertical::WeakDown) && self.horizontal == Horizontal::WeakRight
    }

    /// Whether cell `b` may follow cell `a` in a chain (`a != b`).
    pub fn follows(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        let h = match self.horizontal {
            Horizontal::WeakRight => b.0 >= a.0,
            Horizontal::StrictRight => b.0 > a.0,
        };
        let v = match self.vertical {
            Vertical::WeakUp => b.1 >= a.1,
            Vertical::StrictUp => b.1 > a.1,
            Vertical::WeakDown => b.1 <= a.1,
            Vertical::StrictDown => b.1 < a.1,
        };
        h && v
    }

    /// Comparability of two units at cells `a` and `b`.
    pub fn comparable(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        if a == b {
            self.is_reflexive()
        } else {
            self.follows(a, b) || self.follows(b, a)
        }
    }

    /// How many units a cell with entry `v` contributes.
    pub fn units(&self, v: u32) -> usize {
        match self.length_mode {
            LengthMode::Count => usize::from(v > 0),
            LengthMode::EntrySum | LengthMode::Multiplicity => v as usize,
        }
    }

    /// Sort key putting every chain in increasing order.
    fn order_key(&self, (c, r): (usize, usize)) -> (usize, isize) {
        if self.is_upward() {
            (c, r as isize)
        } else {
            (c, -(r as isize))
        }
    }
}

impl fmt::Display for ChainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())?;
        if self.require_rectangle {
            f.write_str("[rect]")?;
        }
        Ok(())
    }
}

impl FromStr for ChainSpec {
    type Err = Error;

    /// A two-letter code, optionally followed by `+rect`.
    fn from_str(s: &str) -> Result<Self> {
        let (code, rect) = match s.strip_suffix("+rect") {
            Some(code) => (code, true),
            None => (s, false),
        };
        let mut letters = code.chars();
        let (Some(v), Some(h), None) = (letters.next(), letters.next(), letters.next()) else {
            return Err(Error::Parse(format!("chain flavor {s:?} is not two letters")));
        };
        let vertical = match v {
            'N' => Vertical::WeakUp,
            'n' => Vertical::StrictUp,
            'S' => Vertical::WeakDown,
            's' => Vertical::StrictDown,
            _ => return Err(Error::Parse(format!("bad vertical letter {v:?}"))),
        };
        let horizontal = match h {
            'E' => Horizontal::WeakRight,
            'e' => Horizontal::StrictRight,
            _ => return Err(Error::Parse(format!("bad horizontal letter {h:?}"))),
        };
        let spec = ChainSpec::new(vertical, horizontal);
        Ok(if rect { spec.with_rectangle() } else { spec })
    }
}

/// Length of the longest chain among the nonzero `entries` of `board`.
///
/// A chain is measured by entry sum for weak-weak flavors and by its number
/// of cells otherwise.
pub fn longest_chain(board: &dyn CellBoard, entries: &[(usize, usize, u32)], spec: &ChainSpec) -> usize {
    let mut cells: Vec<((usize, usize), usize)> = entries
        .iter()
        .filter(|e| e.2 > 0)
        .map(|&(c, r, v)| {
            let w = match spec.length_mode {
                LengthMode::EntrySum => v as usize,
                _ => 1,
            };
            ((c, r), w)
        })
        .collect();
    cells.sort_by_key(|&(cell, _)| spec.order_key(cell));

    let chain_dp = |start: usize| -> usize {
        let mut best = vec![0usize; cells.len()];
        let mut overall = 0;
        for j in start..cells.len() {
            let (b, wb) = cells[j];
            if j != start {
                if !spec.follows(cells[start].0, b) {
                    continue;
                }
                if spec.require_rectangle && !board.rectangle_in_shape(cells[start].0, b) {
                    continue;
                }
            }
            let prev = (start..j)
                .filter(|&i| best[i] > 0 && spec.follows(cells[i].0, b))
                .map(|i| best[i])
                .max()
                .unwrap_or(0);
            best[j] = prev + wb;
            overall = overall.max(best[j]);
        }
        overall
    };

    if spec.require_rectangle {
        (0..cells.len()).map(chain_dp).max().unwrap_or(0)
    } else {
        // Without the rectangle condition one sweep with every cell allowed
        // to start a chain suffices.
        let mut best = vec![0usize; cells.len()];
        for j in 0..cells.len() {
            let prev = (0..j)
                .filter(|&i| spec.follows(cells[i].0, cells[j].0))
                .map(|i| best[i])
                .max()
                .unwrap_or(0);
            best[j] = prev + cells[j].1;
        }
        best.into_iter().max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::FerrersShape;

    fn partition_example() -> (FerrersShape, Vec<(usize, usize, u32)>) {
        // Pairs (i, j) sit in column i, row 8 - j.
        let pairs = [(1, 4), (4, 5), (5, 7), (2, 6)];
        let entries = pairs.iter().map(|&(i, j)| (i, 8 - j, 1)).collect();
        (FerrersShape::staircase(7), entries)
    }

    #[test]
    fn codes_round_trip() {
        for code in ["NE", "ne", "nE", "Ne", "SE", "se", "sE", "Se"] {
            let spec: ChainSpec = code.parse().unwrap();
            assert_eq!(spec.code(), code);
        }
        assert!("SE+rect".parse::<ChainSpec>().unwrap().require_rectangle);
        assert!("XE".parse::<ChainSpec>().is_err());
        assert!("NEE".parse::<ChainSpec>().is_err());
        assert_eq!(ChainSpec::NE.length_mode, LengthMode::EntrySum);
        assert_eq!(ChainSpec::SE_STRICT.length_mode, LengthMode::Multiplicity);
        assert_eq!(ChainSpec::N_STRICT_E.length_mode, LengthMode::Count);
    }

    #[test]
    fn chains_of_partition_example() {
        let (shape, entries) = partition_example();
        assert_eq!(longest_chain(&shape, &entries, &ChainSpec::NE), 2);
        assert_eq!(longest_chain(&shape, &entries, &ChainSpec::SE.with_rectangle()), 2);
        assert_eq!(longest_chain(&shape, &[], &ChainSpec::SE_STRICT), 0);
    }

    #[test]
    fn rectangle_condition_cuts_chains() {
        // Two 1's forming an SE pair whose rectangle leaves the staircase.
        let shape = FerrersShape::staircase(4);
        let entries = [(1, 3, 1), (3, 1, 1)];
        assert_eq!(longest_chain(&shape, &entries, &ChainSpec::SE), 2);
        assert_eq!(longest_chain(&shape, &entries, &ChainSpec::SE.with_rectangle()), 1);
    }

    #[test]
    fn entry_sum_versus_count() {
        let shape = FerrersShape::rectangle(2, 2);
        let entries = [(1, 1, 1), (1, 2, 2), (2, 1, 2)];
        assert_eq!(longest_chain(&shape, &entries, &ChainSpec::NE), 3);
        assert_eq!(longest_chain(&shape, &entries, &ChainSpec::SE), 5);
        assert_eq!(longest_chain(&shape, &entries, &ChainSpec::SE_STRICT), 2);
        assert_eq!(longest_chain(&shape, &entries, &ChainSpec::NE_STRICT), 1);
    }
}
