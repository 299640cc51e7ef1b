//! Universal cycles for `t`-subsets of `{1..n}` and `t`-multisets of
//! `{0..n-1}`, via difference representatives.
//!
//! A sorted subset `s_1 < … < s_t` is written as `s_1, s_2 - s_1, …,
//! s_t - s_(t-1)`: a length-`t` string over `{1..n-t+1}` of weight at most
//! `n`. A multiset uses the same differences shifted up by one, giving a
//! string over `{1..n}` of weight at most `n+t-1`. Both sets of strings are
//! decoded by the upper-bound cycle.

use std::fmt;

use crate::count::{self, Count};
use crate::decode::Decoder;
use crate::error::{Error, Result};
use crate::params::Params;
use crate::string::{KString, Symbol};

/// A `t`-subset of `{1..n}`, stored in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    elements: Vec<u32>,
    n: u32,
}

impl Subset {
    /// Sorts `elements`; rejects duplicates and values outside `1..=n`.
    pub fn new(mut elements: Vec<u32>, n: u32) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidSet("a subset needs at least one element".into()));
        }
        elements.sort_unstable();
        if let Some(&bad) = elements.iter().find(|&&e| e == 0 || e > n) {
            return Err(Error::InvalidSet(format!("{bad} is outside 1..={n}")));
        }
        if let Some(pair) = elements.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::InvalidSet(format!("{} appears twice", pair[0])));
        }
        Ok(Subset { elements, n })
    }

    pub fn parse(text: &str, n: u32) -> Result<Self> {
        Self::new(parse_elements(text)?, n)
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn t(&self) -> usize {
        self.elements.len()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_braced(f, &self.elements)
    }
}

/// A `t`-multiset over `{0..n-1}`, stored in non-decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multiset {
    elements: Vec<u32>,
    n: u32,
}

impl Multiset {
    pub fn new(mut elements: Vec<u32>, n: u32) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidSet("a multiset needs at least one element".into()));
        }
        elements.sort_unstable();
        if let Some(&bad) = elements.iter().find(|&&e| e >= n) {
            return Err(Error::InvalidSet(format!("{bad} is outside 0..{n}")));
        }
        Ok(Multiset { elements, n })
    }

    pub fn parse(text: &str, n: u32) -> Result<Self> {
        Self::new(parse_elements(text)?, n)
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn t(&self) -> usize {
        self.elements.len()
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_braced(f, &self.elements)
    }
}

fn write_braced(f: &mut fmt::Formatter<'_>, elements: &[u32]) -> fmt::Result {
    let body: Vec<_> = elements.iter().map(|e| e.to_string()).collect();
    write!(f, "{{{}}}", body.join(","))
}

/// Accepts `3,4,5` and `{3,4,5}`, with optional whitespace.
fn parse_elements(text: &str) -> Result<Vec<u32>> {
    let inner = text.trim();
    let inner = inner.strip_prefix('{').unwrap_or(inner);
    let inner = inner.strip_suffix('}').unwrap_or(inner);
    inner
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad element {part:?} in {text:?}")))
        })
        .collect()
}

fn differences(elements: &[u32]) -> Vec<u32> {
    let mut prev = 0;
    elements
        .iter()
        .map(|&e| {
            let d = e - prev;
            prev = e;
            d
        })
        .collect()
}

fn prefix_sums(d: &[Symbol]) -> Vec<u32> {
    d.iter()
        .scan(0u32, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

/// Difference representative of a subset, over `{1..n-t+1}`.
pub fn subset_to_diff(s: &Subset) -> KString {
    let k = s.n - s.t() as u32 + 1;
    KString::new(differences(&s.elements), k).expect("differences of a subset fit the alphabet")
}

/// Inverse of [`subset_to_diff`].
pub fn diff_to_subset(d: &KString, n: u32) -> Result<Subset> {
    if d.weight() > n as u64 {
        return Err(Error::WeightViolation {
            weight: d.weight(),
            bound: format!("<= {n}"),
        });
    }
    Subset::new(prefix_sums(d.symbols()), n)
}

/// Difference representative of a multiset with every symbol raised by one,
/// over `{1..n}`.
pub fn multiset_to_diff(m: &Multiset) -> KString {
    let shifted = differences(&m.elements).into_iter().map(|d| d + 1).collect();
    KString::new(shifted, m.n).expect("shifted differences fit the alphabet")
}

/// Inverse of [`multiset_to_diff`].
pub fn diff_to_multiset(d: &KString, n: u32) -> Result<Multiset> {
    let bound = n as u64 + d.len() as u64 - 1;
    if d.weight() > bound {
        return Err(Error::WeightViolation {
            weight: d.weight(),
            bound: format!("<= {bound}"),
        });
    }
    let lowered: Vec<_> = d.symbols().iter().map(|&x| x - 1).collect();
    Multiset::new(prefix_sums(&lowered), n)
}

fn check_nt(n: u32, t: usize, multiset: bool) -> Result<()> {
    if t == 0 || n == 0 || (!multiset && t > n as usize) {
        return Err(Error::InvalidSet(format!("no {t}-sets over an {n}-element ground set")));
    }
    Ok(())
}

/// Ranks and unranks `t`-subsets of `{1..n}` in their universal cycle.
#[derive(Debug)]
pub struct SubsetDecoder<C: Count> {
    n: u32,
    t: usize,
    inner: Decoder<C>,
}

impl<C: Count> SubsetDecoder<C> {
    pub fn new(n: u32, t: usize) -> Result<Self> {
        check_nt(n, t, false)?;
        let params = Params::down(t, n - t as u32 + 1, n as i64)?;
        Ok(SubsetDecoder {
            n,
            t,
            inner: Decoder::new(params)?,
        })
    }

    /// Number of subsets, `C(n, t)`.
    pub fn len(&self) -> &C {
        self.inner.cycle_len()
    }

    pub fn is_empty(&self) -> bool {
        self.len().is_zero()
    }

    /// The underlying string decoder.
    pub fn strings(&self) -> &Decoder<C> {
        &self.inner
    }

    pub fn rank(&self, s: &Subset) -> Result<C> {
        if s.n != self.n || s.t() != self.t {
            return Err(Error::InvalidSet(format!(
                "expected a {}-subset of 1..={}, got {s}",
                self.t, self.n
            )));
        }
        self.inner.rank(&subset_to_diff(s))
    }

    pub fn unrank(&self, r: &C) -> Result<Subset> {
        diff_to_subset(&self.inner.unrank(r)?, self.n)
    }
}

/// Ranks and unranks `t`-multisets of `{0..n-1}` in their universal cycle.
#[derive(Debug)]
pub struct MultisetDecoder<C: Count> {
    n: u32,
    t: usize,
    inner: Decoder<C>,
}

impl<C: Count> MultisetDecoder<C> {
    pub fn new(n: u32, t: usize) -> Result<Self> {
        check_nt(n, t, true)?;
        let params = Params::down(t, n, n as i64 + t as i64 - 1)?;
        Ok(MultisetDecoder {
            n,
            t,
            inner: Decoder::new(params)?,
        })
    }

    /// Number of multisets, `C(n+t-1, t)`.
    pub fn len(&self) -> &C {
        self.inner.cycle_len()
    }

    pub fn is_empty(&self) -> bool {
        self.len().is_zero()
    }

    pub fn strings(&self) -> &Decoder<C> {
        &self.inner
    }

    pub fn rank(&self, m: &Multiset) -> Result<C> {
        if m.n != self.n || m.t() != self.t {
            return Err(Error::InvalidSet(format!(
                "expected a {}-multiset of 0..{}, got {m}",
                self.t, self.n
            )));
        }
        self.inner.rank(&multiset_to_diff(m))
    }

    pub fn unrank(&self, r: &C) -> Result<Multiset> {
        diff_to_multiset(&self.inner.unrank(r)?, self.n)
    }
}

/// `C(n, t)`, by the multiplicative formula.
pub fn binomial<C: Count>(n: u64, t: u64) -> Result<C> {
    if t > n {
        return Ok(C::zero());
    }
    let t = t.min(n - t);
    let mut acc = C::one();
    for i in 0..t {
        let num = C::from_u64(n - i).ok_or(Error::Overflow)?;
        let den = C::from_u64(i + 1).ok_or(Error::Overflow)?;
        // exact at every step: acc * (n-i) is divisible by i+1
        acc = count::mul(&acc, &num)? / den;
    }
    Ok(acc)
}
