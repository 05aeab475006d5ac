//! Local rules of growth diagrams.
//!
//! A cell is framed by four corner labels: `rho` bottom-left, `mu`
//! bottom-right, `nu` top-left and `lambda` top-right. Forward rules
//! compute `lambda` from `rho`, `mu`, `nu` and the cell entry; backward
//! rules recover `rho` and the entry from `mu`, `nu`, `lambda`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::chains::ChainSpec;
use crate::error::{Error, Result};
use crate::fillings::FillingClass;
use crate::partitions::Partition;
use crate::shapes::Step;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Standard,
    Rsk,
    DualRsk,
    RskPrime,
    DualRskPrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Strip {
    OneSquare,
    Horizontal,
    Vertical,
}

impl Strip {
    fn holds(self, larger: &Partition, smaller: &Partition) -> bool {
        match self {
            Strip::OneSquare => larger.contains(smaller) && larger.size() <= smaller.size() + 1,
            Strip::Horizontal => larger.is_horizontal_strip(smaller),
            Strip::Vertical => larger.is_vertical_strip(smaller),
        }
    }
}

impl Variant {
    pub const ALL: [Variant; 5] = [
        Variant::Standard,
        Variant::Rsk,
        Variant::DualRsk,
        Variant::RskPrime,
        Variant::DualRskPrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Standard => "standard",
            Variant::Rsk => "rsk",
            Variant::DualRsk => "dual-rsk",
            Variant::RskPrime => "rsk-prime",
            Variant::DualRskPrime => "dual-rsk-prime",
        }
    }

    /// The most general filling class the variant accepts.
    pub fn filling_class(self) -> FillingClass {
        match self {
            Variant::Standard => FillingClass::PartialPermutation,
            Variant::DualRsk | Variant::RskPrime => FillingClass::ZeroOne,
            Variant::Rsk | Variant::DualRskPrime => FillingClass::Arbitrary,
        }
    }

    fn strip(self, edge: Step) -> Strip {
        match (self, edge) {
            (Variant::Standard, _) => Strip::OneSquare,
            (Variant::Rsk, _) | (Variant::DualRsk, Step::R) | (Variant::RskPrime, Step::D) => Strip::Horizontal,
            _ => Strip::Vertical,
        }
    }

    /// Whether labels on the two ends of an edge are compatible. `edge` is
    /// `R` for horizontal edges and `D` for vertical ones; `larger` sits at
    /// the right or upper end.
    pub fn edge_ok(self, edge: Step, larger: &Partition, smaller: &Partition) -> bool {
        self.strip(edge).holds(larger, smaller)
    }

    /// Chain flavors read off a labelling: sums of the first `k` parts of a
    /// corner label count the first flavor, those of the conjugate label
    /// the second.
    pub fn greene_specs(self) -> (ChainSpec, ChainSpec) {
        match self {
            Variant::Standard => (ChainSpec::NE, ChainSpec::SE),
            Variant::Rsk => (ChainSpec::NE, ChainSpec::SE_STRICT),
            Variant::DualRsk => (ChainSpec::N_STRICT_E, ChainSpec::S_E_STRICT),
            Variant::RskPrime => (ChainSpec::N_E_STRICT, ChainSpec::S_STRICT_E),
            Variant::DualRskPrime => (ChainSpec::NE_STRICT, ChainSpec::SE),
        }
    }

    /// The variant whose labellings are the entrywise conjugates of this
    /// one's border sequences.
    pub fn conjugate(self) -> Variant {
        match self {
            Variant::Standard => Variant::Standard,
            Variant::Rsk => Variant::DualRskPrime,
            Variant::DualRskPrime => Variant::Rsk,
            Variant::DualRsk => Variant::RskPrime,
            Variant::RskPrime => Variant::DualRsk,
        }
    }

    fn max_entry(self) -> Option<u32> {
        match self.filling_class() {
            FillingClass::Arbitrary => None,
            _ => Some(1),
        }
    }

    pub fn forward(self, rho: &Partition, mu: &Partition, nu: &Partition, m: u32) -> Result<Partition> {
        if let Some(max) = self.max_entry() {
            if m > max {
                return Err(Error::Precondition(format!("entry {m} not allowed for variant {self}")));
            }
        }
        self.check_frame(rho, mu, nu, Step::R, Step::D)?;
        let lambda = match self {
            Variant::Standard => forward_std(rho, mu, nu, m == 1)?,
            Variant::Rsk => forward_rsk(rho, mu, nu, m),
            Variant::DualRsk => forward_dualrsk(rho, mu, nu, m),
            Variant::RskPrime => forward_dualrsk(rho, nu, mu, m),
            Variant::DualRskPrime => forward_dualrskp(rho, mu, nu, m),
        };
        if !(self.edge_ok(Step::R, &lambda, nu) && self.edge_ok(Step::D, &lambda, mu)) {
            return Err(Error::Precondition(format!(
                "{self} produced {lambda} from rho={rho} mu={mu} nu={nu} m={m}"
            )));
        }
        Ok(lambda)
    }

    pub fn backward(self, mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<(Partition, u32)> {
        if !(self.edge_ok(Step::R, lambda, nu) && self.edge_ok(Step::D, lambda, mu)) {
            return Err(Error::Precondition(format!(
                "mu={mu}, nu={nu}, lambda={lambda} violate the {self} edge conditions"
            )));
        }
        let (rho, m) = match self {
            Variant::Standard => {
                let (rho, cross) = backward_std(mu, nu, lambda)?;
                (rho, u32::from(cross))
            }
            Variant::Rsk => backward_rsk(mu, nu, lambda)?,
            Variant::DualRsk => backward_dualrsk(mu, nu, lambda)?,
            Variant::RskPrime => backward_dualrsk(nu, mu, lambda)?,
            Variant::DualRskPrime => backward_dualrskp(mu, nu, lambda)?,
        };
        if !(self.edge_ok(Step::R, mu, &rho) && self.edge_ok(Step::D, nu, &rho)) {
            return Err(Error::Precondition(format!(
                "{self} produced rho={rho} from mu={mu} nu={nu} lambda={lambda}"
            )));
        }
        Ok((rho, m))
    }

    fn check_frame(&self, rho: &Partition, mu: &Partition, nu: &Partition, h: Step, v: Step) -> Result<()> {
        if self.edge_ok(h, mu, rho) && self.edge_ok(v, nu, rho) {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "rho={rho}, mu={mu}, nu={nu} violate the {self} edge conditions"
            )))
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown variant {s:?}")))
    }
}

/// Forward rule for 0-1 cells of partial-permutation fillings.
pub fn forward_std(rho: &Partition, mu: &Partition, nu: &Partition, cross: bool) -> Result<Partition> {
    for (name, outer) in [("mu", mu), ("nu", nu)] {
        if !Strip::OneSquare.holds(outer, rho) {
            return Err(Error::Precondition(format!(
                "{name}={outer} does not cover rho={rho} by at most one square"
            )));
        }
    }
    let rm = rho == mu;
    let rn = rho == nu;
    if cross {
        if !(rm && rn) {
            return Err(Error::Precondition(format!(
                "an X needs rho=mu=nu, got rho={rho} mu={mu} nu={nu}"
            )));
        }
        return rho.add_square_in_row(1);
    }
    match (rm, rn, mu == nu) {
        (true, true, _) => Ok(rho.clone()),
        (true, false, _) => Ok(nu.clone()),
        (false, true, _) => Ok(mu.clone()),
        (false, false, false) => Ok(mu.union(nu)),
        (false, false, true) => {
            let k = mu.diff_row(rho)?;
            mu.add_square_in_row(k + 1)
        }
    }
}

/// Backward rule for 0-1 cells. Returns `rho` and whether the cell holds an X.
pub fn backward_std(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<(Partition, bool)> {
    for (name, inner) in [("mu", mu), ("nu", nu)] {
        if !Strip::OneSquare.holds(lambda, inner) {
            return Err(Error::Precondition(format!(
                "lambda={lambda} does not cover {name}={inner} by at most one square"
            )));
        }
    }
    let lm = lambda == mu;
    let ln = lambda == nu;
    match (lm, ln, mu == nu) {
        (true, true, _) => Ok((lambda.clone(), false)),
        (true, false, _) => Ok((nu.clone(), false)),
        (false, true, _) => Ok((mu.clone(), false)),
        (false, false, false) => Ok((mu.intersect(nu), false)),
        (false, false, true) => match lambda.diff_row(mu)? {
            1 => Ok((mu.clone(), true)),
            k => Ok((mu.remove_square_in_row(k - 1)?, false)),
        },
    }
}

const LOOP_GUARD: usize = 1 << 20;

fn run_forward(step: impl Fn(usize, i64) -> (i64, i64)) -> Partition {
    let mut carry = 0i64;
    let mut parts = Vec::new();
    for i in 0..LOOP_GUARD {
        let (lambda_i, next) = step(i, carry);
        if lambda_i == 0 {
            break;
        }
        parts.push(lambda_i as usize);
        carry = next;
    }
    Partition::from_padded(parts)
}

fn at(p: &Partition, i: usize) -> i64 {
    p[i] as i64
}

/// Forward rule for RSK on arbitrary fillings. Preconditions are checked by [`Variant::forward`].
pub fn forward_rsk(rho: &Partition, mu: &Partition, nu: &Partition, m: u32) -> Partition {
    run_forward(|i, carry| {
        let carry = if i == 0 { m as i64 } else { carry };
        let (r, u, v) = (at(rho, i), at(mu, i), at(nu, i));
        (u.max(v) + carry, u.min(v) - r)
    })
}

/// Forward rule for dual RSK on 0-1 fillings.
pub fn forward_dualrsk(rho: &Partition, mu: &Partition, nu: &Partition, m: u32) -> Partition {
    run_forward(|i, carry| {
        let carry = if i == 0 { m as i64 } else { carry };
        let (r, u, v) = (at(rho, i), at(mu, i), at(nu, i));
        ((u + carry).max(v), (u + carry).min(v) - r)
    })
}

/// Forward rule for dual RSK' on arbitrary fillings.
pub fn forward_dualrskp(rho: &Partition, mu: &Partition, nu: &Partition, m: u32) -> Partition {
    run_forward(|i, carry| {
        let carry = if i == 0 { m as i64 } else { carry };
        let (r, u, v) = (at(rho, i), at(mu, i), at(nu, i));
        let used = i64::from(r == u && u == v).min(carry);
        (u.max(v) + used, carry - used + u.min(v) - r)
    })
}

/// Shared driver for the backward algorithms: rows are processed from the
/// last positive part of `lambda` up to the first.
fn run_backward(lambda: &Partition, step: impl Fn(usize, i64) -> (i64, i64)) -> Result<(Partition, u32)> {
    let mut carry = 0i64;
    let mut parts = vec![0usize; lambda.len()];
    for i in (0..lambda.len()).rev() {
        let (rho_i, next) = step(i, carry);
        if rho_i < 0 || next < 0 {
            return Err(Error::Precondition(format!(
                "backward rule went negative in row {} of {lambda}",
                i + 1
            )));
        }
        parts[i] = rho_i as usize;
        carry = next;
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Precondition(format!(
            "backward rule broke weak decrease: {parts:?}"
        )));
    }
    Ok((Partition::from_padded(parts), carry as u32))
}

/// Inverse of [`forward_rsk`].
pub fn backward_rsk(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<(Partition, u32)> {
    run_backward(lambda, |i, carry| {
        let (u, v, l) = (at(mu, i), at(nu, i), at(lambda, i));
        (u.min(v) - carry, l - u.max(v))
    })
}

/// Inverse of [`forward_dualrsk`].
pub fn backward_dualrsk(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<(Partition, u32)> {
    run_backward(lambda, |i, carry| {
        let (u, v, l) = (at(mu, i), at(nu, i), at(lambda, i));
        (u.min(v - carry), l - u.max(v - carry))
    })
}

/// Inverse of [`forward_dualrskp`]. The carry update subtracts the same correction that was
/// taken off `rho_i`, which makes it the exact inverse.
pub fn backward_dualrskp(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<(Partition, u32)> {
    run_backward(lambda, |i, carry| {
        let (u, v, l) = (at(mu, i), at(nu, i), at(lambda, i));
        let used = i64::from(u == v && v == l).min(carry);
        (u.min(v) - used, carry - used + l - u.max(v))
    })
}
