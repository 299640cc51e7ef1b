//! Construction of the cycles by concatenating aperiodic prefixes of
//! necklaces, plus a linear-scan rank used as a test oracle.

use crate::error::{Error, Result};
use crate::necklace::NecklaceCursor;
use crate::params::{Direction, Params};
use crate::string::{period, KString, Necklace, Symbol};

pub use crate::necklace::list_necklaces;

/// Streams the symbols of a bounded-weight de Bruijn sequence.
///
/// Only the current necklace is held in memory.
#[derive(Debug, Clone)]
pub struct CycleStream {
    necklaces: NecklaceCursor,
    block: Vec<Symbol>,
    pos: usize,
    k: u32,
    direction: Direction,
    emitted: u64,
}

impl CycleStream {
    pub fn new(params: &Params) -> Self {
        CycleStream {
            necklaces: NecklaceCursor::new(params),
            block: Vec::new(),
            pos: 0,
            k: params.k(),
            direction: params.direction(),
            emitted: 0,
        }
    }

    /// Number of symbols produced so far.
    pub fn emitted(&self) -> u64 {
        self.emitted
    }
}

impl Iterator for CycleStream {
    type Item = Symbol;

    fn next(&mut self) -> Option<Symbol> {
        if self.pos == self.block.len() {
            let neck: Necklace = self.necklaces.next()?;
            let s = neck.symbols();
            self.block.clear();
            self.block.extend_from_slice(&s[..period(s)]);
            self.pos = 0;
        }
        let x = self.block[self.pos];
        self.pos += 1;
        self.emitted += 1;
        Some(match self.direction {
            Direction::Up => x,
            Direction::Down => self.k - x + 1,
        })
    }
}

/// The cycle for `params`, as a stream.
pub fn generate(params: &Params) -> CycleStream {
    CycleStream::new(params)
}

/// The cycle for strings of weight at least `w`.
pub fn generate_up(n: usize, k: u32, w: i64) -> Result<CycleStream> {
    Ok(CycleStream::new(&Params::up(n, k, w)?))
}

/// The cycle for strings of weight at most `w`.
pub fn generate_down(n: usize, k: u32, w: i64) -> Result<CycleStream> {
    Ok(CycleStream::new(&Params::down(n, k, w)?))
}

/// The window of length `n` starting at 0-based `start`, read cyclically.
pub fn cyclic_window(cycle: &[Symbol], start: usize, n: usize) -> Vec<Symbol> {
    (0..n).map(|i| cycle[(start + i) % cycle.len()]).collect()
}

/// Rank by scanning the materialised cycle. Linear in the cycle length.
pub fn brute_rank(s: &KString, params: &Params) -> Result<usize> {
    let cycle: Vec<Symbol> = generate(params).collect();
    let n = s.len();
    (0..cycle.len())
        .find(|&i| (0..n).all(|j| cycle[(i + j) % cycle.len()] == s.symbols()[j]))
        .map(|i| i + 1)
        .ok_or_else(|| Error::NotAWindow(s.render()))
}
