//! Growth diagrams: labelling every corner of a filled Ferrers shape,
//! reading the border sequence, and reconstructing fillings from it.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fillings::Filling;
use crate::local_rules::Variant;
use crate::partitions::Partition;
use crate::shapes::{CellBoard, FerrersShape, Step};

/// Labels on the left side (`left[y]` at corner `(0, y)`) and on the bottom
/// side (`bottom[x]` at corner `(x, 0)`) of a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Boundary {
    pub left: Vec<Partition>,
    pub bottom: Vec<Partition>,
}

impl Boundary {
    pub fn empty(shape: &FerrersShape) -> Boundary {
        Boundary {
            left: vec![Partition::empty(); shape.rows() + 1],
            bottom: vec![Partition::empty(); shape.cols() + 1],
        }
    }

    /// Empty left side and the given bottom labels.
    pub fn with_bottom(shape: &FerrersShape, bottom: Vec<Partition>) -> Result<Boundary> {
        if bottom.len() != shape.cols() + 1 {
            return Err(Error::IncompatibleBoundary(format!(
                "{} bottom labels for {} columns",
                bottom.len(),
                shape.cols()
            )));
        }
        let mut b = Boundary::empty(shape);
        b.left[0] = bottom[0].clone();
        b.bottom = bottom;
        Ok(b)
    }

    pub fn is_empty(&self) -> bool {
        self.left.iter().chain(&self.bottom).all(Partition::is_empty)
    }

    fn check(&self, filling: &Filling, variant: Variant) -> Result<()> {
        let shape = filling.shape();
        if self.left.len() != shape.rows() + 1 || self.bottom.len() != shape.cols() + 1 {
            return Err(Error::IncompatibleBoundary(
                "boundary length does not match the shape".into(),
            ));
        }
        if self.left[0] != self.bottom[0] {
            return Err(Error::IncompatibleBoundary(format!(
                "origin labelled both {} and {}",
                self.left[0], self.bottom[0]
            )));
        }
        if self.is_empty() {
            return Ok(());
        }
        if variant != Variant::Standard {
            return Err(Error::IncompatibleBoundary(format!(
                "nonempty boundaries are only supported for the standard rules, not {variant}"
            )));
        }
        for x in 1..self.bottom.len() {
            if !variant.edge_ok(Step::R, &self.bottom[x], &self.bottom[x - 1]) {
                return Err(Error::IncompatibleBoundary(format!(
                    "bottom labels {} and {} at x={x}",
                    self.bottom[x - 1],
                    self.bottom[x]
                )));
            }
            if self.bottom[x] != self.bottom[x - 1] && filling.col_sum(x) > 0 {
                return Err(Error::IncompatibleBoundary(format!(
                    "bottom label grows below the nonempty column {x}"
                )));
            }
        }
        for y in 1..self.left.len() {
            if !variant.edge_ok(Step::D, &self.left[y], &self.left[y - 1]) {
                return Err(Error::IncompatibleBoundary(format!(
                    "left labels {} and {} at y={y}",
                    self.left[y - 1],
                    self.left[y]
                )));
            }
            if self.left[y] != self.left[y - 1] && filling.row_sum(y) > 0 {
                return Err(Error::IncompatibleBoundary(format!(
                    "left label grows beside the nonempty row {y}"
                )));
            }
        }
        Ok(())
    }
}

/// Order in which cells are processed. Both respect the dependencies of the
/// forward rules and give identical labellings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepOrder {
    ColumnMajor,
    RowMajor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthDiagram {
    filling: Filling,
    variant: Variant,
    /// `labels[x][y]` for `0 <= y <= corner_height(x)`.
    labels: Vec<Vec<Partition>>,
}

impl GrowthDiagram {
    pub fn shape(&self) -> &FerrersShape {
        self.filling.shape()
    }

    pub fn filling(&self) -> &Filling {
        &self.filling
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn label(&self, x: usize, y: usize) -> &Partition {
        self.get(x, y)
            .unwrap_or_else(|| panic!("corner ({x},{y}) is not in the shape"))
    }

    pub fn get(&self, x: usize, y: usize) -> Option<&Partition> {
        self.labels.get(x)?.get(y)
    }

    /// All corners with their labels, by column then height.
    pub fn corners(&self) -> impl Iterator<Item = ((usize, usize), &Partition)> {
        self.labels
            .iter()
            .enumerate()
            .flat_map(|(x, col)| col.iter().enumerate().map(move |(y, l)| ((x, y), l)))
    }

    pub fn boundary(&self) -> Boundary {
        Boundary {
            left: self.labels[0].clone(),
            bottom: self.labels.iter().map(|col| col[0].clone()).collect(),
        }
    }

    /// Labels along the border, from the top-left to the bottom-right
    /// corner.
    pub fn border_tableau(&self) -> OscillatingTableau {
        let seq = self
            .shape()
            .border_corners()
            .into_iter()
            .map(|(x, y)| self.label(x, y).clone())
            .collect();
        OscillatingTableau {
            word: self.shape().word_string(),
            seq,
            variant: self.variant,
        }
    }

    /// Corner labels as CSV lines `x,y,label`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,label\n");
        for ((x, y), l) in self.corners() {
            writeln!(out, "{x},{y},{l}").unwrap();
        }
        out
    }

    /// Checks the edge conditions on every edge of the diagram.
    pub fn check_edges(&self) -> Result<()> {
        for ((x, y), l) in self.corners() {
            if x > 0 && y <= self.shape().corner_height(x - 1) {
                let left = self.label(x - 1, y);
                if !self.variant.edge_ok(Step::R, l, left) {
                    return Err(Error::Precondition(format!("edge ({},{y})-({x},{y})", x - 1)));
                }
            }
            if y > 0 && !self.variant.edge_ok(Step::D, l, self.label(x, y - 1)) {
                return Err(Error::Precondition(format!("edge ({x},{})-({x},{y})", y - 1)));
            }
        }
        Ok(())
    }
}

/// Applies the forward rules of `variant` to every cell, starting from the
/// given boundary.
pub fn label_diagram(filling: &Filling, variant: Variant, boundary: &Boundary) -> Result<GrowthDiagram> {
    label_diagram_with_order(filling, variant, boundary, SweepOrder::ColumnMajor)
}

pub fn label_diagram_with_order(
    filling: &Filling,
    variant: Variant,
    boundary: &Boundary,
    order: SweepOrder,
) -> Result<GrowthDiagram> {
    filling.require_class(variant.filling_class())?;
    boundary.check(filling, variant)?;
    let shape = filling.shape();
    let mut labels: Vec<Vec<Option<Partition>>> = (0..=shape.cols())
        .map(|x| vec![None; shape.corner_height(x) + 1])
        .collect();
    for (y, l) in boundary.left.iter().enumerate() {
        labels[0][y] = Some(l.clone());
    }
    for (x, l) in boundary.bottom.iter().enumerate() {
        labels[x][0] = Some(l.clone());
    }

    let cells: Vec<(usize, usize)> = match order {
        SweepOrder::ColumnMajor => shape.cells(),
        SweepOrder::RowMajor => (1..=shape.rows())
            .flat_map(|r| (1..=shape.row_length(r)).map(move |c| (c, r)))
            .collect(),
    };
    for (x, y) in cells {
        let known = |a: usize, b: usize| labels[a][b].clone().expect("dependency labelled");
        let rho = known(x - 1, y - 1);
        let mu = known(x, y - 1);
        let nu = known(x - 1, y);
        let lambda = variant.forward(&rho, &mu, &nu, filling.get(x, y))?;
        labels[x][y] = Some(lambda);
    }
    let labels = labels
        .into_iter()
        .map(|col| col.into_iter().map(|l| l.expect("every corner labelled")).collect())
        .collect();
    Ok(GrowthDiagram {
        filling: filling.clone(),
        variant,
        labels,
    })
}

/// A sequence of partitions along a D/R word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OscillatingTableau {
    pub word: String,
    pub seq: Vec<Partition>,
    pub variant: Variant,
}

impl OscillatingTableau {
    pub fn new(word: &str, seq: Vec<Partition>, variant: Variant) -> Result<OscillatingTableau> {
        let t = OscillatingTableau {
            word: word.to_string(),
            seq,
            variant,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn steps(&self) -> Result<Vec<Step>> {
        Ok(FerrersShape::from_word(&self.word)?.word().to_vec())
    }

    /// Checks the length and every step against the variant's edge
    /// conditions.
    pub fn validate(&self) -> Result<()> {
        let steps = self.steps()?;
        if self.seq.len() != steps.len() + 1 {
            return Err(Error::InvalidTableau(format!(
                "{} partitions for a word of length {}",
                self.seq.len(),
                steps.len()
            )));
        }
        for (i, step) in steps.iter().enumerate() {
            let (a, b) = (&self.seq[i], &self.seq[i + 1]);
            let ok = match step {
                Step::R => self.variant.edge_ok(Step::R, b, a),
                Step::D => self.variant.edge_ok(Step::D, a, b),
            };
            if !ok {
                return Err(Error::InvalidTableau(format!(
                    "step {} ({}) from {a} to {b} is not allowed for {}",
                    i + 1,
                    step.as_char(),
                    self.variant
                )));
            }
        }
        Ok(())
    }

    /// Entrywise conjugate, tagged with the conjugate variant.
    pub fn conjugate(&self) -> OscillatingTableau {
        OscillatingTableau {
            word: self.word.clone(),
            seq: self.seq.iter().map(Partition::conjugate).collect(),
            variant: self.variant.conjugate(),
        }
    }

    /// Compact rendering such as `(e,1,11,e)`.
    pub fn compact(&self) -> String {
        compact_seq(&self.seq)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<OscillatingTableau> {
        let t: OscillatingTableau = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        t.validate()?;
        Ok(t)
    }
}

pub fn compact_seq(seq: &[Partition]) -> String {
    let parts: Vec<String> = seq.iter().map(|p| p.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Inverse of labelling: recovers the filling and the left/bottom labels
/// from the border sequence by applying the backward rules from the top
/// right towards the bottom left.
pub fn reconstruct(shape: &FerrersShape, tableau: &OscillatingTableau) -> Result<(Filling, Boundary)> {
    tableau.validate()?;
    if tableau.steps()? != shape.word() {
        return Err(Error::InvalidTableau(format!(
            "tableau word {} differs from the shape word {}",
            tableau.word,
            shape.word_string()
        )));
    }
    let variant = tableau.variant;
    let mut labels: Vec<Vec<Option<Partition>>> = (0..=shape.cols())
        .map(|x| vec![None; shape.corner_height(x) + 1])
        .collect();
    for ((x, y), l) in shape.border_corners().into_iter().zip(&tableau.seq) {
        labels[x][y] = Some(l.clone());
    }
    let mut filling = Filling::empty(shape.clone());
    for x in (1..=shape.cols()).rev() {
        for y in (1..=shape.col_height(x)).rev() {
            let known = |a: usize, b: usize| labels[a][b].clone().expect("dependency labelled");
            let mu = known(x, y - 1);
            let nu = known(x - 1, y);
            let lambda = known(x, y);
            let (rho, m) = variant
                .backward(&mu, &nu, &lambda)
                .map_err(|e| Error::InvalidTableau(format!("cell ({x},{y}): {e}")))?;
            labels[x - 1][y - 1] = Some(rho);
            filling.set(x, y, m)?;
        }
    }
    let get = |x: usize, y: usize| labels[x][y].clone().expect("labelled");
    let boundary = Boundary {
        left: (0..=shape.rows()).map(|y| get(0, y)).collect(),
        bottom: (0..=shape.cols()).map(|x| get(x, 0)).collect(),
    };
    Ok((filling, boundary))
}

/// Position of each coarse line in the refined grid: `cols[c]` is the
/// refined x-coordinate of the coarse vertical line `c`, likewise `rows`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMap {
    pub cols: Vec<usize>,
    pub rows: Vec<usize>,
}

/// Replaces every entry by a chain of single 1's in its own refined rows
/// and columns, ordered as the variant prescribes. The result is a
/// partial-permutation filling for the standard rules.
pub fn blow_up(filling: &Filling, variant: Variant) -> Result<(Filling, BlockMap)> {
    filling.require_class(variant.filling_class())?;
    let shape = filling.shape();
    // Direction in which the 1's of a column (resp. row) climb.
    let (col_rising, row_rising) = match variant {
        Variant::Standard | Variant::Rsk => (true, true),
        Variant::DualRsk => (true, false),
        Variant::RskPrime => (false, true),
        Variant::DualRskPrime => (false, false),
    };
    let widths: Vec<usize> = (1..=shape.cols())
        .map(|c| (filling.col_sum(c) as usize).max(1))
        .collect();
    let heights: Vec<usize> = (1..=shape.rows())
        .map(|r| (filling.row_sum(r) as usize).max(1))
        .collect();
    let cumulative = |sizes: &[usize]| {
        let mut acc = vec![0];
        for s in sizes {
            acc.push(acc.last().unwrap() + s);
        }
        acc
    };
    let blocks = BlockMap {
        cols: cumulative(&widths),
        rows: cumulative(&heights),
    };

    // Unit tokens (col, row, j).
    let tokens: Vec<(usize, usize, u32)> = filling
        .entries()
        .into_iter()
        .flat_map(|(c, r, v)| (0..v).map(move |j| (c, r, j)))
        .collect();
    let mut refined_col = std::collections::HashMap::new();
    for c in 1..=shape.cols() {
        let mut column: Vec<_> = tokens.iter().filter(|t| t.0 == c).collect();
        column.sort_by_key(|&&(_, r, j)| (if col_rising { r as isize } else { -(r as isize) }, j));
        for (k, &&t) in column.iter().enumerate() {
            refined_col.insert(t, blocks.cols[c - 1] + k + 1);
        }
    }
    let mut ones = Vec::with_capacity(tokens.len());
    for r in 1..=shape.rows() {
        let mut row: Vec<_> = tokens.iter().filter(|t| t.1 == r).collect();
        row.sort_by_key(|&&(c, _, j)| (c, j));
        let n = row.len();
        for (k, &&t) in row.iter().enumerate() {
            let offset = if row_rising { k + 1 } else { n - k };
            ones.push((refined_col[&t], blocks.rows[r - 1] + offset));
        }
    }

    let row_lengths: Vec<usize> = (1..=shape.rows())
        .flat_map(|r| std::iter::repeat_n(blocks.cols[shape.row_length(r)], heights[r - 1]))
        .collect();
    let refined_shape = FerrersShape::framed(
        &row_lengths.iter().copied().take_while(|&l| l > 0).collect::<Vec<_>>(),
        *blocks.rows.last().unwrap(),
        *blocks.cols.last().unwrap(),
    )?;
    Ok((Filling::from_ones(refined_shape, &ones)?, blocks))
}

/// Keeps only the labels at intersections of coarse lines.
pub fn shrink_back(refined: &GrowthDiagram, coarse: &Filling, blocks: &BlockMap, variant: Variant) -> GrowthDiagram {
    let shape = coarse.shape();
    let labels = (0..=shape.cols())
        .map(|x| {
            (0..=shape.corner_height(x))
                .map(|y| refined.label(blocks.cols[x], blocks.rows[y]).clone())
                .collect()
        })
        .collect();
    GrowthDiagram {
        filling: coarse.clone(),
        variant,
        labels,
    }
}

/// Labelling through the refined grid and the standard rules.
pub fn label_via_blow_up(filling: &Filling, variant: Variant) -> Result<GrowthDiagram> {
    let (refined, blocks) = blow_up(filling, variant)?;
    let diagram = label_diagram(&refined, Variant::Standard, &Boundary::empty(refined.shape()))?;
    Ok(shrink_back(&diagram, filling, &blocks, variant))
}
