//! Strings over the alphabet `{1..k}` and the rotation primitives built on
//! them.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// A single alphabet symbol, always in `1..=k`.
pub type Symbol = u32;

/// A non-empty string over `{1..k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KString {
    symbols: Vec<Symbol>,
    k: u32,
}

impl KString {
    pub fn new(symbols: Vec<Symbol>, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if symbols.is_empty() {
            return Err(Error::EmptyString);
        }
        if let Some(&bad) = symbols.iter().find(|&&s| s == 0 || s > k) {
            return Err(Error::InvalidSymbol { symbol: bad, k });
        }
        Ok(KString { symbols, k })
    }

    /// `symbol^n`.
    pub fn repeat(symbol: Symbol, n: usize, k: u32) -> Result<Self> {
        Self::new(vec![symbol; n], k)
    }

    /// Parses either a run of decimal digits (`"2112"`) or dot-separated
    /// integers (`"10.3.12"`).
    pub fn parse(text: &str, k: u32) -> Result<Self> {
        let text = text.trim();
        let symbols = if text.contains('.') {
            text.split('.')
                .map(|part| {
                    part.parse::<Symbol>()
                        .map_err(|_| Error::Parse(format!("bad symbol {part:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("bad symbol {c:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(symbols, k)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// Always false: a `KString` has at least one symbol.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn weight(&self) -> u64 {
        weight(&self.symbols)
    }

    /// Maps every symbol `x` to `k - x + 1`.
    pub fn complement(&self) -> KString {
        KString {
            symbols: self.symbols.iter().map(|&x| self.k - x + 1).collect(),
            k: self.k,
        }
    }

    /// The rotation starting at (0-based) position `start`.
    pub fn rotation(&self, start: usize) -> KString {
        let start = start % self.len();
        let mut symbols = Vec::with_capacity(self.len());
        symbols.extend_from_slice(&self.symbols[start..]);
        symbols.extend_from_slice(&self.symbols[..start]);
        KString { symbols, k: self.k }
    }

    pub fn is_necklace(&self) -> bool {
        is_necklace(&self.symbols)
    }

    /// The least rotation of `self`.
    pub fn necklace(&self) -> Necklace {
        let best = (0..self.len())
            .map(|i| self.rotation(i))
            .min()
            .expect("non-empty");
        Necklace(best)
    }

    /// Shortest `t` with `self = t^j`.
    pub fn aperiodic_prefix(&self) -> KString {
        KString {
            symbols: self.symbols[..period(&self.symbols)].to_vec(),
            k: self.k,
        }
    }

    pub fn is_aperiodic(&self) -> bool {
        period(&self.symbols) == self.len()
    }

    /// Splits `self = p·q` where `q` is the longest suffix such that `q·p` is
    /// a necklace.
    pub fn pq_split(&self) -> PqSplit {
        let n = self.len();
        let mut buf = Vec::with_capacity(n);
        for q_len in (1..=n).rev() {
            let cut = n - q_len;
            buf.clear();
            buf.extend_from_slice(&self.symbols[cut..]);
            buf.extend_from_slice(&self.symbols[..cut]);
            if is_necklace(&buf) {
                return PqSplit {
                    p: self.symbols[..cut].to_vec(),
                    q: self.symbols[cut..].to_vec(),
                };
            }
        }
        unreachable!("the least rotation of any string is a necklace")
    }

    /// Renders symbols as plain digits when `k <= 9`, dot-separated otherwise.
    pub fn render(&self) -> String {
        render_symbols(&self.symbols, self.k)
    }
}

impl fmt::Display for KString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// The `p·q` decomposition of a string. `p` may be empty, `q` never is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PqSplit {
    pub p: Vec<Symbol>,
    pub q: Vec<Symbol>,
}

/// A string that is no larger than any of its rotations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Necklace(KString);

impl Necklace {
    pub fn new(s: KString) -> Result<Self> {
        if s.is_necklace() {
            Ok(Necklace(s))
        } else {
            Err(Error::NotNecklace(s.render()))
        }
    }

    pub fn parse(text: &str, k: u32) -> Result<Self> {
        Self::new(KString::parse(text, k)?)
    }

    pub(crate) fn new_unchecked(symbols: Vec<Symbol>, k: u32) -> Self {
        debug_assert!(is_necklace(&symbols), "{symbols:?} is not a necklace");
        Necklace(KString { symbols, k })
    }

    pub fn as_kstring(&self) -> &KString {
        &self.0
    }

    pub fn into_kstring(self) -> KString {
        self.0
    }
}

impl Deref for Necklace {
    type Target = KString;

    fn deref(&self) -> &KString {
        &self.0
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn weight(symbols: &[Symbol]) -> u64 {
    symbols.iter().map(|&s| s as u64).sum()
}

/// Length of the longest Lyndon prefix if `s` is a prenecklace (a prefix of
/// some necklace), `None` otherwise. Runs in linear time.
pub fn prenecklace_period(s: &[Symbol]) -> Option<usize> {
    let mut p = 1;
    for i in 1..s.len() {
        match s[i].cmp(&s[i - p]) {
            std::cmp::Ordering::Less => return None,
            std::cmp::Ordering::Greater => p = i + 1,
            std::cmp::Ordering::Equal => {}
        }
    }
    Some(p)
}

pub fn is_necklace(s: &[Symbol]) -> bool {
    match prenecklace_period(s) {
        Some(p) => s.len().is_multiple_of(p),
        None => false,
    }
}

/// Smallest `d` dividing `|s|` with `s = (s[..d])^(|s|/d)`.
pub fn period(s: &[Symbol]) -> usize {
    let n = s.len();
    (1..=n)
        .filter(|&d| n.is_multiple_of(d))
        .find(|&d| (d..n).all(|i| s[i] == s[i - d]))
        .unwrap_or(n)
}

pub fn render_symbols(symbols: &[Symbol], k: u32) -> String {
    if k <= 9 {
        symbols
            .iter()
            .map(|&s| char::from_digit(s, 10).expect("single digit"))
            .collect()
    } else {
        symbols
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}
