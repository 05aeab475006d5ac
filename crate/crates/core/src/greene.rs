//! Brute-force evaluation of Greene-type chain statistics.
//!
//! Every entry is expanded into unit tokens at its cell (one token per
//! nonzero cell in count mode). A set of tokens is a chain when its tokens
//! are pairwise comparable and, if required, its bounding rectangle lies in
//! the board. The value for `k` is the largest number of tokens covered by
//! `k` token-disjoint chains, found by a minimum-chain-cover computation
//! over all token subsets. The method shares no code with the local rules.

use crate::chains::ChainSpec;
use crate::error::{Error, Result};
use crate::fillings::Filling;
use crate::shapes::CellBoard;

pub const MAX_CELLS: usize = 16;
pub const MAX_TOKENS: usize = 8;
pub const MAX_K: usize = 3;

/// Values for `k = 1..=kmax` of the statistic restricted to the cells
/// `(c, r)` with `c <= corner.0` and `r <= corner.1`.
pub fn greene_values(
    board: &dyn CellBoard,
    entries: &[(usize, usize, u32)],
    spec: &ChainSpec,
    kmax: usize,
    corner: (usize, usize),
) -> Result<Vec<usize>> {
    let cell_count = board.cells().len();
    if cell_count > MAX_CELLS {
        return Err(Error::InstanceTooLarge(format!(
            "{cell_count} cells exceed the oracle limit of {MAX_CELLS}"
        )));
    }
    if kmax > MAX_K {
        return Err(Error::InstanceTooLarge(format!("k = {kmax} exceeds {MAX_K}")));
    }
    let tokens: Vec<(usize, usize)> = entries
        .iter()
        .filter(|&&(c, r, _)| c <= corner.0 && r <= corner.1)
        .flat_map(|&(c, r, v)| std::iter::repeat_n((c, r), spec.units(v)))
        .collect();
    let t = tokens.len();
    if t > MAX_TOKENS {
        return Err(Error::InstanceTooLarge(format!(
            "{t} units exceed the oracle limit of {MAX_TOKENS}"
        )));
    }

    let full = 1usize << t;
    let mut is_chain = vec![false; full];
    is_chain[0] = true;
    for mask in 1..full {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        is_chain[mask] = is_chain[rest]
            && (0..t)
                .filter(|&j| rest >> j & 1 == 1)
                .all(|j| spec.comparable(tokens[low], tokens[j]));
    }
    if spec.require_rectangle {
        for (mask, chain) in is_chain.iter_mut().enumerate().skip(1) {
            if *chain {
                let members = (0..t).filter(|&j| mask >> j & 1 == 1).map(|j| tokens[j]);
                let (mut c1, mut r1, mut c2, mut r2) = (usize::MAX, usize::MAX, 0, 0);
                for (c, r) in members {
                    c1 = c1.min(c);
                    r1 = r1.min(r);
                    c2 = c2.max(c);
                    r2 = r2.max(r);
                }
                *chain = board.rectangle_in_shape((c1, r1), (c2, r2));
            }
        }
    }

    // Minimum number of chains partitioning each subset. Chains are closed
    // under taking subsets, so covers and partitions agree.
    let mut cover = vec![usize::MAX; full];
    cover[0] = 0;
    for mask in 1..full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut sub = rest;
        let mut best = usize::MAX;
        loop {
            let chain = sub | low;
            if is_chain[chain] && cover[mask ^ chain] != usize::MAX {
                best = best.min(cover[mask ^ chain] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        cover[mask] = best;
    }

    Ok((1..=kmax)
        .map(|k| {
            (0..full)
                .filter(|&m| cover[m] <= k)
                .map(|m| m.count_ones() as usize)
                .max()
                .unwrap_or(0)
        })
        .collect())
}

/// The statistic for a single `k` over the rectangle below-left of `corner`.
pub fn greene_oracle(f: &Filling, spec: &ChainSpec, k: usize, corner: (usize, usize)) -> Result<usize> {
    if k == 0 {
        return Ok(0);
    }
    Ok(greene_values(f.shape(), &f.entries(), spec, k, corner)?[k - 1])
}
