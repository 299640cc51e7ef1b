//! Enumeration of weight-bounded strings relative to a fixed necklace.
//!
//! For a necklace `alpha = a_1 … a_n` and a lower weight bound `w`:
//!
//! * `S(len, w)` counts strings of length `len` with weight at least `w`;
//! * `B(t, j, w)` counts length-`t` strings with prefix `a_1 … a_j`, weight at
//!   least `w`, and every non-empty suffix strictly greater than `alpha`;
//! * `P(t, j, w)` is the same with weight exactly `w`;
//! * `A(t, j)` counts the strings whose necklace precedes `alpha`, split by the
//!   first rotation `t` that is smaller than `alpha` and the length `j` of the
//!   prefix of `alpha` that rotation shares;
//! * `T` is the sum of all `A(t, j)`: the number of strings of weight at least
//!   `w` whose necklace is smaller than `alpha`.
//!
//! Weights at or below zero are all "satisfied" and share one table column.

use std::sync::Arc;

use crate::count::{self, Count};
use crate::error::{Error, Result};
use crate::params::Params;
use crate::string::{Necklace, Symbol};

/// `S(len, w)` for every `len <= n` and `0 <= w <= k*n`.
#[derive(Debug, Clone)]
pub struct WeightCounts<C> {
    n: usize,
    k: u32,
    width: usize,
    table: Vec<C>,
    zero: C,
}

impl<C: Count> WeightCounts<C> {
    pub fn new(n: usize, k: u32) -> Result<Self> {
        let width = k as usize * n + 1;
        let mut table = vec![C::zero(); (n + 1) * width];
        table[0] = C::one();
        for len in 1..=n {
            for w in 0..width {
                let mut acc = C::zero();
                for x in 1..=k as usize {
                    let prev = &table[(len - 1) * width + w.saturating_sub(x)];
                    acc = count::add(&acc, prev)?;
                }
                table[len * width + w] = acc;
            }
        }
        Ok(WeightCounts {
            n,
            k,
            width,
            table,
            zero: C::zero(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of strings of length `len` with weight at least `w`.
    pub fn get(&self, len: usize, w: i64) -> &C {
        assert!(len <= self.n, "length {len} exceeds table size {}", self.n);
        let w = w.max(0) as usize;
        if w >= self.width {
            return &self.zero;
        }
        &self.table[len * self.width + w]
    }

    pub fn entries(&self) -> usize {
        self.table.len()
    }
}

/// Number of strings in `{1..k}^n` with weight at least `w`.
pub fn s_up<C: Count>(n: usize, w: i64, k: u32) -> Result<C> {
    Ok(WeightCounts::<C>::new(n, k)?.get(n, w).clone())
}

/// Memoized `B` and `P` tables for one necklace and one weight bound.
///
/// The tables are filled on construction and never change afterwards, so a
/// built context can be shared between threads.
#[derive(Debug, Clone)]
pub struct DecodeContext<C> {
    n: usize,
    k: u32,
    w: i64,
    alpha: Vec<Symbol>,
    /// `prefix_weight[j]` = weight of `a_1 … a_j`
    prefix_weight: Vec<i64>,
    counts: Arc<WeightCounts<C>>,
    width: usize,
    b: Vec<C>,
    p: Vec<C>,
    zero: C,
}

impl<C: Count> DecodeContext<C> {
    pub fn new(params: &Params, alpha: &Necklace) -> Result<Self> {
        let counts = Arc::new(WeightCounts::new(params.n(), params.k())?);
        Self::with_counts(params, alpha, counts)
    }

    /// Builds a context reusing an existing `S` table for the same `n` and `k`.
    pub fn with_counts(
        params: &Params,
        alpha: &Necklace,
        counts: Arc<WeightCounts<C>>,
    ) -> Result<Self> {
        let params = params.to_up();
        let (n, k) = (params.n(), params.k());
        if alpha.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: alpha.len(),
            });
        }
        if alpha.k() != k {
            return Err(Error::InvalidSymbol {
                symbol: alpha.symbols().iter().copied().max().unwrap_or(0),
                k,
            });
        }
        assert!(counts.n() == n && counts.k() == k, "weight table shape mismatch");

        let alpha = alpha.symbols().to_vec();
        let mut prefix_weight = vec![0i64; n + 1];
        for j in 0..n {
            prefix_weight[j + 1] = prefix_weight[j] + alpha[j] as i64;
        }
        let width = k as usize * n + 1;
        let cells = (n + 1) * (n + 2) / 2 * width;
        let mut ctx = DecodeContext {
            n,
            k,
            w: params.w(),
            alpha,
            prefix_weight,
            counts,
            width,
            b: vec![C::zero(); cells],
            p: vec![C::zero(); cells],
            zero: C::zero(),
        };
        ctx.fill()?;
        Ok(ctx)
    }

    fn cell(&self, t: usize, j: usize) -> usize {
        (t * (t + 1) / 2 + j) * self.width
    }

    fn b_at(&self, t: usize, j: usize, w: i64) -> &C {
        let w = w.max(0) as usize;
        if w >= self.width {
            return &self.zero;
        }
        &self.b[self.cell(t, j) + w]
    }

    fn p_at(&self, t: usize, j: usize, w: i64) -> &C {
        if w < 0 || w as usize >= self.width {
            return &self.zero;
        }
        &self.p[self.cell(t, j) + w as usize]
    }

    fn fill(&mut self) -> Result<()> {
        let k = self.k;
        for t in 0..=self.n {
            for j in (0..=t).rev() {
                let base = self.cell(t, j);
                for wi in 0..self.width {
                    let w = wi as i64;
                    let (b, p) = if j == t {
                        let hit = if t == 0 && wi == 0 { C::one() } else { C::zero() };
                        (hit.clone(), hit)
                    } else {
                        let mut b = self.b_at(t, j + 1, w).clone();
                        let mut p = if wi == 0 {
                            C::zero()
                        } else {
                            self.p_at(t, j + 1, w).clone()
                        };
                        for x in self.alpha[j] + 1..=k {
                            let rest = w - self.prefix_weight[j] - x as i64;
                            b = count::add(&b, self.b_at(t - j - 1, 0, rest))?;
                            if wi != 0 {
                                p = count::add(&p, self.p_at(t - j - 1, 0, rest))?;
                            }
                        }
                        (b, p)
                    };
                    self.b[base + wi] = b;
                    self.p[base + wi] = p;
                }
            }
        }
        Ok(())
    }

    pub fn alpha(&self) -> &[Symbol] {
        &self.alpha
    }

    pub fn w(&self) -> i64 {
        self.w
    }

    fn check_tj(&self, t: usize, j: usize) -> Result<()> {
        if j > t || t > self.n {
            return Err(Error::IndexOutOfRange(format!(
                "need j <= t <= {}, got t={t}, j={j}",
                self.n
            )));
        }
        Ok(())
    }

    /// `B(t, j, w)`.
    pub fn b_count(&self, t: usize, j: usize, w: i64) -> Result<C> {
        self.check_tj(t, j)?;
        Ok(self.b_at(t, j, w).clone())
    }

    /// `P(t, j, w)`.
    pub fn p_count(&self, t: usize, j: usize, w: i64) -> Result<C> {
        self.check_tj(t, j)?;
        Ok(self.p_at(t, j, w).clone())
    }

    /// Longest `z` such that `a_{j-z+1} … a_j = a_1 … a_z`, restricted to the
    /// suffixes of `a_{n-t+2} … a_j`.
    pub fn z_border(&self, t: usize, j: usize) -> usize {
        let start = (self.n + 1).saturating_sub(t);
        let len = j.saturating_sub(start);
        let a = &self.alpha;
        (1..=len)
            .rev()
            .find(|&z| a[j - z..j] == a[..z])
            .unwrap_or(0)
    }

    /// `A(t, j)` for `1 <= t <= n` and `0 <= j <= n`.
    pub fn a_count(&self, t: usize, j: usize) -> Result<C> {
        let n = self.n;
        if t == 0 || t > n || j > n {
            return Err(Error::IndexOutOfRange(format!(
                "need 1 <= t <= {n} and j <= {n}, got t={t}, j={j}"
            )));
        }
        if j == n {
            return Ok(C::zero());
        }
        let a = &self.alpha;
        let pw = &self.prefix_weight;
        let w = self.w;
        let mut total = C::zero();
        if t + j <= n {
            let tail = n - t - j;
            let k = self.k as i64;
            let lo = t as i64 - 1;
            let hi = k * (t as i64 - 1);
            for x in 1..a[j] {
                for wp in lo..=hi {
                    let heads = self.p_at(t - 1, 0, wp);
                    if heads.is_zero() {
                        continue;
                    }
                    let tails = self.counts.get(tail, w - wp - pw[j] - x as i64);
                    total = count::add(&total, &count::mul(heads, tails)?)?;
                }
            }
        } else {
            let z = self.z_border(t, j);
            if a[j] > a[z] {
                total = self.b_at(n - j + z, z + 1, w - pw[j - z]).clone();
                for x in a[z] + 1..a[j] {
                    let rest = w - pw[j] - x as i64;
                    total = count::add(&total, self.b_at(n - j - 1, 0, rest))?;
                }
            }
        }
        Ok(total)
    }

    /// Number of strings of weight at least `w` whose necklace is smaller
    /// than `alpha`.
    pub fn t_count(&self) -> Result<C> {
        let mut total = C::zero();
        for t in 1..=self.n {
            for j in 0..self.n {
                total = count::add(&total, &self.a_count(t, j)?)?;
            }
        }
        Ok(total)
    }

    /// Number of stored table cells, including the shared `S` table.
    pub fn table_entries(&self) -> usize {
        self.b.len() + self.p.len() + self.counts.entries()
    }
}
