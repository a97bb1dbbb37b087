//! Extended non-negative costs and exact rational stretch factors.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Edge weight in scaled integer units.
pub type Weight = u64;

/// A rational multiplicative stretch factor.
pub type Stretch = Ratio<u64>;

/// Non-negative cost that may be infinite. `Infinite` absorbs addition and
/// compares greater than every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Cost {
    Finite(u64),
    Infinite,
}

impl Cost {
    pub const ZERO: Cost = Cost::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Cost::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Cost::Finite(c) => Some(c),
            Cost::Infinite => None,
        }
    }

    /// Saturating subtraction of a finite amount; infinity stays infinite.
    pub fn saturating_sub(self, rhs: u64) -> Cost {
        match self {
            Cost::Finite(c) => Cost::Finite(c.saturating_sub(rhs)),
            Cost::Infinite => Cost::Infinite,
        }
    }
}

impl Default for Cost {
    fn default() -> Self {
        Cost::ZERO
    }
}

impl From<u64> for Cost {
    fn from(c: u64) -> Self {
        Cost::Finite(c)
    }
}

impl Add for Cost {
    type Output = Cost;

    fn add(self, rhs: Cost) -> Cost {
        match (self, rhs) {
            (Cost::Finite(a), Cost::Finite(b)) => a.checked_add(b).map_or(Cost::Infinite, Cost::Finite),
            _ => Cost::Infinite,
        }
    }
}

impl Add<u64> for Cost {
    type Output = Cost;

    fn add(self, rhs: u64) -> Cost {
        self + Cost::Finite(rhs)
    }
}

impl Sum for Cost {
    fn sum<I: Iterator<Item = Cost>>(iter: I) -> Cost {
        iter.fold(Cost::ZERO, Add::add)
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cost::Finite(c) => write!(f, "{c}"),
            Cost::Infinite => f.write_str("inf"),
        }
    }
}

/// `cost <= alpha * reference + beta`, evaluated exactly.
pub fn within_stretch(cost: Cost, reference: Cost, alpha: Stretch, beta: Cost) -> bool {
    match (cost, reference, beta) {
        (_, Cost::Infinite, _) | (_, _, Cost::Infinite) => true,
        (Cost::Infinite, _, _) => false,
        (Cost::Finite(c), Cost::Finite(r), Cost::Finite(b)) => {
            let den = u128::from(*alpha.denom());
            u128::from(c) * den <= u128::from(*alpha.numer()) * u128::from(r) + u128::from(b) * den
        }
    }
}

/// Parses a non-negative decimal such as `18`, `17.9` or `0.25` into an exact ratio.
/// Fractions written as `a/b` are accepted too.
pub fn parse_stretch(text: &str) -> Result<Stretch> {
    let bad = || Error::InvalidParameter(format!("not a non-negative rational: {text:?}"));
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: u64 = num.trim().parse().map_err(|_| bad())?;
        let den: u64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(num, den));
    }
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) || frac.len() > 18 {
        return Err(bad());
    }
    let den = 10u64.pow(frac.len() as u32);
    let int: u64 = if int.is_empty() {
        0
    } else {
        int.parse().map_err(|_| bad())?
    };
    let frac: u64 = if frac.is_empty() {
        0
    } else {
        frac.parse().map_err(|_| bad())?
    };
    let num = int
        .checked_mul(den)
        .and_then(|x| x.checked_add(frac))
        .ok_or_else(bad)?;
    Ok(Ratio::new(num, den))
}

/// Renders a ratio as a decimal with six fractional digits.
pub fn stretch_to_f64(r: Stretch) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
