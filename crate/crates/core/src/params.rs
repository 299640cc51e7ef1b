use std::fmt;

use crate::error::{Error, Result};

/// Which side of the weight bound the admitted strings lie on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Weight at least `w`.
    Up,
    /// Weight at most `w`.
    Down,
}

/// String length `n`, alphabet `{1..k}` and a weight bound.
///
/// The bound is normalised on construction: a lower bound below `n` and an
/// upper bound above `k*n` impose nothing and are clamped to the trivial
/// value, so two `Params` describing the same set of strings compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    n: usize,
    k: u32,
    w: i64,
    direction: Direction,
}

impl Params {
    /// Strings of length `n` over `{1..k}` with weight at least `w`.
    pub fn up(n: usize, k: u32, w: i64) -> Result<Self> {
        check_shape(n, k)?;
        let (lo, hi) = weight_range(n, k);
        if w > hi {
            return Err(Error::WeightOutOfRange { w, min: lo, max: hi });
        }
        Ok(Params {
            n,
            k,
            w: w.max(lo),
            direction: Direction::Up,
        })
    }

    /// Strings of length `n` over `{1..k}` with weight at most `w`.
    pub fn down(n: usize, k: u32, w: i64) -> Result<Self> {
        check_shape(n, k)?;
        let (lo, hi) = weight_range(n, k);
        if w < lo {
            return Err(Error::WeightOutOfRange { w, min: lo, max: hi });
        }
        Ok(Params {
            n,
            k,
            w: w.min(hi),
            direction: Direction::Down,
        })
    }

    /// All `k^n` strings.
    pub fn unconstrained(n: usize, k: u32) -> Result<Self> {
        Self::up(n, k, 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn w(&self) -> i64 {
        self.w
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Largest possible weight, `k*n`.
    pub fn max_weight(&self) -> i64 {
        weight_range(self.n, self.k).1
    }

    /// The lower-bound parameters whose strings are the complements of ours.
    ///
    /// Identity for `Up`; for `Down` the bound becomes `k*n - w + n`.
    pub fn to_up(&self) -> Params {
        match self.direction {
            Direction::Up => *self,
            Direction::Down => Params {
                w: self.max_weight() - self.w + self.n as i64,
                direction: Direction::Up,
                ..*self
            },
        }
    }

    pub fn admits_weight(&self, weight: u64) -> bool {
        let weight = weight as i64;
        match self.direction {
            Direction::Up => weight >= self.w,
            Direction::Down => weight <= self.w,
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrow = match self.direction {
            Direction::Up => ">=",
            Direction::Down => "<=",
        };
        write!(f, "n={}, k={}, weight {} {}", self.n, self.k, arrow, self.w)
    }
}

fn check_shape(n: usize, k: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyString);
    }
    if k == 0 {
        return Err(Error::EmptyAlphabet);
    }
    Ok(())
}

fn weight_range(n: usize, k: u32) -> (i64, i64) {
    (n as i64, n as i64 * k as i64)
}
