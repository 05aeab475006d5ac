//! Fillings of Ferrers shapes with nonnegative integers.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chains::{self, ChainSpec};
use crate::error::{Error, Result};
use crate::shapes::{CellBoard, FerrersShape};

/// Filling classes, strictest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FillingClass {
    /// 0-1 entries, at most one 1 in every row and every column.
    PartialPermutation,
    ZeroOne,
    Arbitrary,
}

impl FillingClass {
    /// Whether a filling of class `other` is also of class `self`.
    pub fn admits(self, other: FillingClass) -> bool {
        other <= self
    }
}

impl fmt::Display for FillingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FillingClass::PartialPermutation => "partial-permutation",
            FillingClass::ZeroOne => "zero-one",
            FillingClass::Arbitrary => "arbitrary",
        })
    }
}

impl std::str::FromStr for FillingClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "partial-permutation" | "pp" => Ok(FillingClass::PartialPermutation),
            "zero-one" | "01" => Ok(FillingClass::ZeroOne),
            "arbitrary" => Ok(FillingClass::Arbitrary),
            other => Err(Error::Parse(format!("unknown filling class {other:?}"))),
        }
    }
}

/// A filling of a Ferrers shape. Zero entries are not stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    shape: FerrersShape,
    entries: BTreeMap<(usize, usize), u32>,
}

impl Filling {
    pub fn empty(shape: FerrersShape) -> Filling {
        Filling {
            shape,
            entries: BTreeMap::new(),
        }
    }

    /// Builds a filling from `(col, row, value)` triples. Repeated cells
    /// are rejected; zero values are dropped.
    pub fn new(shape: FerrersShape, entries: impl IntoIterator<Item = (usize, usize, u32)>) -> Result<Filling> {
        let mut f = Filling::empty(shape);
        for (c, r, v) in entries {
            if !f.shape.contains_cell(c, r) {
                return Err(Error::CellOutsideShape(c, r));
            }
            if f.entries.contains_key(&(c, r)) {
                return Err(Error::Parse(format!("cell ({c},{r}) given twice")));
            }
            if v > 0 {
                f.entries.insert((c, r), v);
            }
        }
        Ok(f)
    }

    /// A 0-1 filling with a 1 in each listed cell.
    pub fn from_ones(shape: FerrersShape, cells: &[(usize, usize)]) -> Result<Filling> {
        Filling::new(shape, cells.iter().map(|&(c, r)| (c, r, 1)))
    }

    pub fn shape(&self) -> &FerrersShape {
        &self.shape
    }

    pub fn get(&self, col: usize, row: usize) -> u32 {
        self.entries.get(&(col, row)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, col: usize, row: usize, value: u32) -> Result<()> {
        if !self.shape.contains_cell(col, row) {
            return Err(Error::CellOutsideShape(col, row));
        }
        if value == 0 {
            self.entries.remove(&(col, row));
        } else {
            self.entries.insert((col, row), value);
        }
        Ok(())
    }

    /// Nonzero entries as `(col, row, value)`, ordered by column then row.
    pub fn entries(&self) -> Vec<(usize, usize, u32)> {
        self.entries.iter().map(|(&(c, r), &v)| (c, r, v)).collect()
    }

    pub fn entry_map(&self) -> &BTreeMap<(usize, usize), u32> {
        &self.entries
    }

    pub fn total(&self) -> u32 {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn row_sum(&self, row: usize) -> u32 {
        self.entries.iter().filter(|(k, _)| k.1 == row).map(|(_, v)| v).sum()
    }

    pub fn col_sum(&self, col: usize) -> u32 {
        self.entries.range((col, 0)..(col + 1, 0)).map(|(_, v)| v).sum()
    }

    /// The strictest class this filling belongs to.
    pub fn class(&self) -> FillingClass {
        if self.entries.values().any(|&v| v > 1) {
            return FillingClass::Arbitrary;
        }
        let mut rows = std::collections::BTreeSet::new();
        let mut cols = std::collections::BTreeSet::new();
        for &(c, r) in self.entries.keys() {
            if !rows.insert(r) || !cols.insert(c) {
                return FillingClass::ZeroOne;
            }
        }
        FillingClass::PartialPermutation
    }

    /// Fails unless the filling belongs to `class`.
    pub fn require_class(&self, class: FillingClass) -> Result<()> {
        let found = self.class();
        if class.admits(found) {
            Ok(())
        } else {
            Err(Error::ClassMismatch { expected: class, found })
        }
    }

    /// Reflection in the main diagonal.
    pub fn transpose(&self) -> Filling {
        Filling {
            shape: self.shape.reflect(),
            entries: self.entries.iter().map(|(&(c, r), &v)| ((r, c), v)).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.shape.is_symmetric() && self.entries.iter().all(|(&(c, r), &v)| self.get(r, c) == v)
    }

    pub fn longest_chain(&self, spec: &ChainSpec) -> usize {
        chains::longest_chain(&self.shape, &self.entries(), spec)
    }

    /// The same entries on another shape containing them.
    pub fn with_shape(&self, shape: FerrersShape) -> Result<Filling> {
        Filling::new(shape, self.entries())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&FillingJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Filling> {
        let raw: FillingJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Filling::try_from(raw)
    }
}

#[derive(Serialize, Deserialize)]
struct FillingJson {
    shape: String,
    entries: Vec<(usize, usize, u32)>,
}

impl From<&Filling> for FillingJson {
    fn from(f: &Filling) -> Self {
        FillingJson {
            shape: f.shape.word_string(),
            entries: f.entries(),
        }
    }
}

impl TryFrom<FillingJson> for Filling {
    type Error = Error;

    fn try_from(raw: FillingJson) -> Result<Self> {
        if let Some(&(c, r, _)) = raw.entries.iter().find(|e| e.2 == 0) {
            return Err(Error::Parse(format!("zero entry stored at ({c},{r})")));
        }
        Filling::new(FerrersShape::from_word(&raw.shape)?, raw.entries)
    }
}

impl Serialize for Filling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FillingJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Filling {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = FillingJson::deserialize(d)?;
        Filling::try_from(raw).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Filling({} {:?})", self.shape.word_string(), self.entries())
    }
}

/// Picture with the top row first; `.` is an empty cell.
impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in (1..=self.shape.rows()).rev() {
            let line: Vec<String> = (1..=self.shape.row_length(r))
                .map(|c| match self.get(c, r) {
                    0 => ".".to_string(),
                    v => v.to_string(),
                })
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rect(c: usize, r: usize) -> FerrersShape {
        FerrersShape::rectangle(c, r)
    }

    #[test]
    fn classes() {
        let pp = Filling::from_ones(
            FerrersShape::from_word("RDRDDRDDRRD").unwrap(),
            &[(2, 2), (1, 4), (5, 1)],
        )
        .unwrap();
        assert_eq!(pp.class(), FillingClass::PartialPermutation);
        let zero_one = Filling::from_ones(rect(2, 4), &[(1, 1), (1, 3), (1, 4), (2, 1), (2, 2)]).unwrap();
        assert_eq!(zero_one.class(), FillingClass::ZeroOne);
        let arbitrary = Filling::new(rect(2, 2), [(1, 1, 1), (1, 2, 2), (2, 1, 2)]).unwrap();
        assert_eq!(arbitrary.class(), FillingClass::Arbitrary);
        assert!(arbitrary.require_class(FillingClass::ZeroOne).is_err());
        assert!(zero_one.require_class(FillingClass::Arbitrary).is_ok());
        assert_eq!(arbitrary.total(), 5);
        assert_eq!(arbitrary.row_sum(1), 3);
        assert_eq!(arbitrary.col_sum(1), 3);
    }

    #[test]
    fn rejects_cells_outside() {
        let s = FerrersShape::staircase(3);
        assert_eq!(Filling::from_ones(s, &[(2, 2)]), Err(Error::CellOutsideShape(2, 2)));
    }

    #[test]
    fn transpose_is_involution() {
        let f = Filling::new(
            FerrersShape::from_word("RDRDDRDDRRD").unwrap(),
            [(2, 2, 1), (1, 4, 3), (5, 1, 1)],
        )
        .unwrap();
        let t = f.transpose();
        assert_eq!(t.get(4, 1), 3);
        assert_eq!(t.transpose(), f);
        let sym = Filling::from_ones(FerrersShape::staircase(4), &[(1, 2), (2, 1)]).unwrap();
        assert!(sym.is_symmetric());
        assert_eq!(sym.transpose(), sym);
    }

    #[test]
    fn json_round_trip() {
        let f = Filling::new(rect(2, 2), [(1, 1, 1), (1, 2, 2), (2, 1, 2)]).unwrap();
        let text = f.to_json();
        assert_eq!(text, r#"{"shape":"RRDD","entries":[[1,1,1],[1,2,2],[2,1,2]]}"#);
        assert_eq!(Filling::from_json(&text).unwrap(), f);
        assert!(Filling::from_json(r#"{"shape":"RD","entries":[[1,1,0]]}"#).is_err());
        assert!(Filling::from_json(r#"{"shape":"RD","entries":[[2,1,1]]}"#).is_err());
    }

    #[test]
    fn picture() {
        let f = Filling::new(rect(2, 2), [(1, 1, 1), (1, 2, 2), (2, 1, 2)]).unwrap();
        assert_eq!(f.to_string(), "2 .\n1 2\n");
    }
}
