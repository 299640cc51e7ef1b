//! Ranking and unranking of bounded-weight de Bruijn sequences.
//!
//! Ranks are 1-based: the window made of the first `n` symbols of the cycle
//! has rank 1. Upper-bound cycles are decoded through the complement of the
//! matching lower-bound cycle.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::count::{self, Count};
use crate::counting::{DecodeContext, WeightCounts};
use crate::error::{Error, Result};
use crate::necklace::{first_necklace, next_necklace, smallest_necklace_with_prefix};
use crate::params::{Direction, Params};
use crate::string::{is_necklace, weight, KString, Necklace, PqSplit, Symbol};

/// Ranks and unranks windows of the cycle described by a [`Params`].
///
/// `T` values are cached per necklace; the cache is behind a mutex so a
/// decoder can be shared between threads.
#[derive(Debug)]
pub struct Decoder<C: Count> {
    params: Params,
    up: Params,
    counts: Arc<WeightCounts<C>>,
    first: Necklace,
    len: C,
    t_cache: Mutex<HashMap<Vec<Symbol>, C>>,
}

impl<C: Count> Decoder<C> {
    pub fn new(params: Params) -> Result<Self> {
        let up = params.to_up();
        let counts = Arc::new(WeightCounts::<C>::new(up.n(), up.k())?);
        let len = counts.get(up.n(), up.w()).clone();
        Ok(Decoder {
            params,
            up,
            first: first_necklace(&up),
            counts,
            len,
            t_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// Length of the cycle, which is also the number of admitted strings.
    pub fn cycle_len(&self) -> &C {
        &self.len
    }

    /// The first `n` symbols of the lower-bound cycle.
    pub fn first_necklace(&self) -> &Necklace {
        &self.first
    }

    fn is_degenerate(&self) -> bool {
        self.up.w() == self.up.max_weight()
    }

    /// Builds the `B`/`P` tables for `alpha` under the lower-bound parameters.
    pub fn context(&self, alpha: &Necklace) -> Result<DecodeContext<C>> {
        DecodeContext::with_counts(&self.up, alpha, Arc::clone(&self.counts))
    }

    /// Number of admitted lower-bound strings whose necklace precedes `alpha`.
    pub fn t_value(&self, alpha: &Necklace) -> Result<C> {
        if let Some(hit) = self.t_cache.lock().unwrap().get(alpha.symbols()) {
            return Ok(hit.clone());
        }
        let value = self.context(alpha)?.t_count()?;
        self.t_cache
            .lock()
            .unwrap()
            .insert(alpha.symbols().to_vec(), value.clone());
        Ok(value)
    }

    fn check_string(&self, s: &KString) -> Result<()> {
        let p = &self.params;
        if s.len() != p.n() {
            return Err(Error::LengthMismatch {
                expected: p.n(),
                found: s.len(),
            });
        }
        if let Some(&bad) = s.symbols().iter().find(|&&x| x > p.k()) {
            return Err(Error::InvalidSymbol { symbol: bad, k: p.k() });
        }
        if !p.admits_weight(s.weight()) {
            let arrow = match p.direction() {
                Direction::Up => ">=",
                Direction::Down => "<=",
            };
            return Err(Error::WeightViolation {
                weight: s.weight(),
                bound: format!("{arrow} {}", p.w()),
            });
        }
        Ok(())
    }

    fn check_rank(&self, r: &C) -> Result<()> {
        if r.is_zero() || r > &self.len {
            return Err(Error::RankOutOfRange {
                rank: r.to_string(),
                len: self.len.to_string(),
            });
        }
        Ok(())
    }

    /// Position of `s` in the cycle.
    pub fn rank(&self, s: &KString) -> Result<C> {
        self.check_string(s)?;
        let symbols = s.symbols().to_vec();
        let symbols = match self.params.direction() {
            Direction::Up => symbols,
            Direction::Down => s.complement().into_symbols(),
        };
        self.rank_up(&symbols)
    }

    /// The window of the cycle starting at position `r`.
    pub fn unrank(&self, r: &C) -> Result<KString> {
        self.check_rank(r)?;
        let s = KString::new(self.unrank_up(r)?, self.up.k())?;
        Ok(match self.params.direction() {
            Direction::Up => s,
            Direction::Down => s.complement(),
        })
    }

    /// Rank of `s` in the lower-bound cycle; `s` must already be admitted.
    fn rank_up(&self, s: &[Symbol]) -> Result<C> {
        let n = self.up.n();
        let k = self.up.k();
        if self.is_degenerate() {
            // the cycle is the single symbol k
            return Ok(C::one());
        }
        // the last n windows wrap around: k^(n-j) followed by a_1 … a_j
        let a = self.first.symbols();
        for j in 0..n {
            if s[..n - j].iter().all(|&x| x == k) && s[n - j..] == a[..j] {
                let back: C = count::from_usize(n - j)?;
                return count::add(&count::sub(&self.len, &back)?, &C::one());
            }
        }
        let split = KString::new(s.to_vec(), k)?.pq_split();
        let beta = following_necklace(&split, n, k)?;
        let before = self.t_value(&beta)?;
        let p_len: C = count::from_usize(split.p.len())?;
        count::sub(&count::add(&before, &C::one())?, &p_len)
    }

    fn is_member(&self, s: &[Symbol]) -> bool {
        is_necklace(s) && weight(s) as i64 >= self.up.w()
    }

    /// The smallest admitted necklace (of the lower-bound set) whose rank is
    /// at least `r`, found one symbol at a time by binary search.
    pub fn smallest_neck(&self, r: &C) -> Result<Necklace> {
        let n = self.up.n();
        let k = self.up.k();
        let n_c: C = count::from_usize(n)?;
        let limit = if self.is_degenerate() {
            C::one()
        } else {
            count::add(&count::sub(&self.len, &n_c)?, &C::one())?
        };
        if r.is_zero() || r > &limit {
            return Err(Error::RankOutOfRange {
                rank: r.to_string(),
                len: limit.to_string(),
            });
        }
        let mut t = vec![k; n];
        for i in 0..n {
            let (mut lo, mut hi) = (1, k);
            t[i] = k;
            while lo < hi {
                let prev = t[i];
                let mid = (lo + hi) / 2;
                t[i] = mid;
                if self.is_member(&t) && &self.rank_up(&t)? >= r {
                    hi = mid;
                } else {
                    t[i] = prev;
                    lo = mid + 1;
                }
            }
        }
        debug_assert!(self.is_member(&t));
        Ok(Necklace::new_unchecked(t, k))
    }

    fn unrank_up(&self, r: &C) -> Result<Vec<Symbol>> {
        let n = self.up.n();
        let k = self.up.k();
        if self.is_degenerate() {
            return Ok(vec![k; n]);
        }
        let n_c: C = count::from_usize(n)?;
        let wrap_start = count::add(&count::sub(&self.len, &n_c)?, &C::one())?;
        if r > &wrap_start {
            // k^(n-j) a_1 … a_j where the window starts n-j symbols before the end
            let from_end = count::to_usize(&count::sub(&self.len, r)?)? + 1;
            let j = n - from_end;
            let mut s = vec![k; n - j];
            s.extend_from_slice(&self.first.symbols()[..j]);
            return Ok(s);
        }
        let gamma1 = self.smallest_neck(r)?;
        let r1 = self.rank_up(gamma1.symbols())?;
        if &r1 == r {
            return Ok(gamma1.into_kstring().into_symbols());
        }
        let back = if r1 > n_c {
            count::sub(&r1, &n_c)?
        } else {
            C::one()
        };
        let gamma2 = self.smallest_neck(&back)?;
        debug_assert!(
            gamma1.is_aperiodic() || gamma2.is_aperiodic(),
            "consecutive periodic necklaces {gamma2} {gamma1}"
        );
        let shift = count::to_usize(&count::sub(&r1, r)?)?;
        let mut s = gamma2.symbols()[n - shift..].to_vec();
        s.extend_from_slice(&gamma1.symbols()[..n - shift]);
        Ok(s)
    }
}

/// The necklace whose aperiodic prefix starts with `q` in the unrestricted
/// cycle, i.e. the second of the two consecutive necklaces whose
/// concatenation holds `p·q`.
///
/// When `p` is empty, `q` is itself that necklace. When `p` is not all `k`,
/// the first of the pair is the necklace `q·p`, so the second is its
/// successor. Otherwise it is the smallest necklace with prefix `q`.
pub fn following_necklace(split: &PqSplit, n: usize, k: u32) -> Result<Necklace> {
    if split.p.iter().all(|&x| x == k) {
        return smallest_necklace_with_prefix(&split.q, n, k);
    }
    let mut qp = split.q.clone();
    qp.extend_from_slice(&split.p);
    let qp = Necklace::new(KString::new(qp, k)?)?;
    Ok(next_necklace(&qp).expect("q·p is not k^n when p is not all k"))
}

/// One-shot rank of `s` in the cycle for `params`.
pub fn rank<C: Count>(s: &KString, params: Params) -> Result<C> {
    Decoder::new(params)?.rank(s)
}

/// One-shot unrank of position `r` in the cycle for `params`.
pub fn unrank<C: Count>(r: &C, params: Params) -> Result<KString> {
    Decoder::new(params)?.unrank(r)
}
