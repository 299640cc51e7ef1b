//! Navigation of necklaces in lexicographic order, optionally restricted to
//! necklaces of weight at least `w`.
//!
//! Functions here take lower-bound parameters; `Down` parameters are
//! converted with [`Params::to_up`] first, since the upper-bound cycle is
//! built from the necklaces of its complement set.

use crate::error::{Error, Result};
use crate::params::Params;
use crate::string::{prenecklace_period, render_symbols, Necklace, Symbol};

/// The first necklace of weight at least `w`, i.e. the first `n` symbols of
/// the bounded-weight cycle.
pub fn first_necklace(params: &Params) -> Necklace {
    let p = params.to_up();
    let (n, k, w) = (p.n(), p.k(), p.w());
    let nn = n as i64;
    let kk = k as i64;
    let symbols = if w <= nn {
        vec![1; n]
    } else if w >= kk * nn {
        vec![k; n]
    } else if n == 1 {
        vec![w as Symbol]
    } else {
        // 1^(n-j-1) x k^j
        let j = (w - nn) / (kk - 1);
        let x = w - (nn - j - 1) - kk * j;
        let j = j as usize;
        let mut v = vec![1; n - j - 1];
        v.push(x as Symbol);
        v.extend(std::iter::repeat_n(k, j));
        v
    };
    Necklace::new_unchecked(symbols, k)
}

/// Increments the last symbol that is not `k` and fills the tail with `k`.
pub fn increment_last_nonmax(alpha: &Necklace) -> Result<Necklace> {
    let k = alpha.k();
    let mut v = alpha.symbols().to_vec();
    let i = v
        .iter()
        .rposition(|&x| x != k)
        .ok_or_else(|| Error::LastNecklace(alpha.render()))?;
    v[i] += 1;
    v[i + 1..].fill(k);
    Ok(Necklace::new_unchecked(v, k))
}

/// The smallest necklace of weight at least `w` that is `>= alpha`.
pub fn weighted_successor_geq(alpha: &Necklace, params: &Params) -> Necklace {
    let w = params.to_up().w();
    let mut cur = alpha.clone();
    while (cur.weight() as i64) < w {
        // k^n has maximal weight, so the loop stops before running out
        cur = increment_last_nonmax(&cur).expect("k^n satisfies every admissible bound");
    }
    cur
}

/// The lexicographically smallest necklace of length `n` over `{1..k}`
/// having `prefix` as a prefix.
pub fn smallest_necklace_with_prefix(prefix: &[Symbol], n: usize, k: u32) -> Result<Necklace> {
    let not_prefix = || Error::NotNecklacePrefix(render_symbols(prefix, k), n);
    if prefix.is_empty() {
        return Ok(Necklace::new_unchecked(vec![1; n], k));
    }
    if prefix.len() > n || prefix.iter().any(|&x| x == 0 || x > k) {
        return Err(not_prefix());
    }
    let p = prenecklace_period(prefix).ok_or_else(not_prefix)?;
    // the periodic extension is the least prenecklace with this prefix
    let mut v = prefix.to_vec();
    for i in prefix.len()..n {
        v.push(v[i - p]);
    }
    if n.is_multiple_of(p) {
        return Ok(Necklace::new_unchecked(v, k));
    }
    if prefix.len() == n {
        return Err(not_prefix());
    }
    // prefix·k^(n-|prefix|) is a necklace, so the successor keeps the prefix
    let found = advance_to_necklace(&mut v, k);
    debug_assert!(found && v.starts_with(prefix));
    Ok(Necklace::new_unchecked(v, k))
}

/// The necklace following `alpha` in lexicographic order, or `None` for
/// `k^n`.
pub fn next_necklace(alpha: &Necklace) -> Option<Necklace> {
    let mut v = alpha.symbols().to_vec();
    advance_to_necklace(&mut v, alpha.k()).then(|| Necklace::new_unchecked(v, alpha.k()))
}

/// Steps the prenecklace `v` through the prenecklace successor until it is a
/// necklace. Returns false once `v` would pass `k^n`.
fn advance_to_necklace(v: &mut [Symbol], k: u32) -> bool {
    let n = v.len();
    loop {
        let Some(i) = v.iter().rposition(|&x| x < k) else {
            return false;
        };
        v[i] += 1;
        let p = i + 1;
        for j in p..n {
            v[j] = v[j - p];
        }
        if n.is_multiple_of(p) {
            return true;
        }
    }
}

/// Iterates over the necklaces of weight at least `w` in lexicographic order.
#[derive(Debug, Clone)]
pub struct NecklaceCursor {
    next: Option<Necklace>,
    params: Params,
}

impl NecklaceCursor {
    pub fn new(params: &Params) -> Self {
        let params = params.to_up();
        NecklaceCursor {
            next: Some(first_necklace(&params)),
            params,
        }
    }
}

impl Iterator for NecklaceCursor {
    type Item = Necklace;

    fn next(&mut self) -> Option<Necklace> {
        let current = self.next.take()?;
        self.next = next_necklace(&current).map(|nx| weighted_successor_geq(&nx, &self.params));
        Some(current)
    }
}

/// All necklaces of weight at least `w`, in lexicographic order.
pub fn list_necklaces(params: &Params) -> Vec<Necklace> {
    NecklaceCursor::new(params).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::string::is_necklace;
    use crate::testutil::{all_strings, brute_necklaces};

    fn neck(text: &str, k: u32) -> Necklace {
        Necklace::parse(text, k).unwrap()
    }

    fn render(list: &[Necklace]) -> Vec<String> {
        list.iter().map(|x| x.render()).collect()
    }

    #[test]
    fn first_necklace_examples() {
        assert_eq!(first_necklace(&Params::up(3, 4, 9).unwrap()), neck("144", 4));
        assert_eq!(first_necklace(&Params::up(4, 2, 6).unwrap()), neck("1122", 2));
        assert_eq!(first_necklace(&Params::up(4, 2, 2).unwrap()), neck("1111", 2));
        assert_eq!(first_necklace(&Params::up(4, 2, 8).unwrap()), neck("2222", 2));
    }

    #[test]
    fn increment_examples() {
        assert_eq!(increment_last_nonmax(&neck("224", 4)).unwrap(), neck("234", 4));
        assert_eq!(increment_last_nonmax(&neck("223", 4)).unwrap(), neck("224", 4));
        assert_eq!(increment_last_nonmax(&neck("3444", 4)).unwrap(), neck("4444", 4));
        assert!(matches!(
            increment_last_nonmax(&neck("444", 4)),
            Err(Error::LastNecklace(_))
        ));
    }

    #[test]
    fn weighted_successor_examples() {
        let p = Params::up(3, 4, 9).unwrap();
        assert_eq!(weighted_successor_geq(&neck("233", 4), &p), neck("234", 4));
        assert_eq!(weighted_successor_geq(&neck("144", 4), &p), neck("144", 4));
        let p = Params::up(4, 2, 6).unwrap();
        assert_eq!(weighted_successor_geq(&neck("1112", 2), &p), neck("1122", 2));
    }

    #[test]
    fn smallest_with_prefix_examples() {
        assert_eq!(smallest_necklace_with_prefix(&[1, 1, 2], 4, 2).unwrap(), neck("1122", 2));
        assert_eq!(smallest_necklace_with_prefix(&[2, 3], 3, 4).unwrap(), neck("233", 4));
        assert_eq!(smallest_necklace_with_prefix(&[1, 2, 2, 3], 4, 3).unwrap(), neck("1223", 3));
        assert!(smallest_necklace_with_prefix(&[2, 1], 4, 2).is_err());
        assert!(smallest_necklace_with_prefix(&[1, 2, 1], 3, 2).is_err());
    }

    #[test]
    fn next_necklace_examples() {
        assert_eq!(next_necklace(&neck("1111", 2)), Some(neck("1112", 2)));
        assert_eq!(next_necklace(&neck("1212", 2)), Some(neck("1222", 2)));
        assert_eq!(next_necklace(&neck("2222", 2)), None);
    }

    #[test]
    fn listing_examples() {
        assert_eq!(
            render(&list_necklaces(&Params::up(4, 2, 6).unwrap())),
            ["1122", "1212", "1222", "2222"]
        );
        assert_eq!(
            render(&list_necklaces(&Params::unconstrained(4, 2).unwrap())),
            ["1111", "1112", "1122", "1212", "1222", "2222"]
        );
        assert_eq!(
            render(&list_necklaces(&Params::up(3, 4, 9).unwrap())),
            ["144", "234", "243", "244", "333", "334", "344", "444"]
        );
    }

    #[test]
    fn next_necklace_enumerates_brute_force_set() {
        for k in 1..=4 {
            for n in 1..=6 {
                let expected = brute_necklaces(n, k);
                let first = Necklace::new_unchecked(vec![1; n], k);
                let got: Vec<_> = std::iter::successors(Some(first), next_necklace)
                    .map(|x| x.symbols().to_vec())
                    .collect();
                assert_eq!(got, expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn weighted_navigation_matches_brute_force() {
        for k in 1..=4u32 {
            for n in 1..=6 {
                let all = brute_necklaces(n, k);
                for w in n as i64..=(k as i64 * n as i64) {
                    let params = Params::up(n, k, w).unwrap();
                    let heavy: Vec<_> = all
                        .iter()
                        .filter(|s| crate::string::weight(s) as i64 >= w)
                        .cloned()
                        .collect();
                    let listed: Vec<_> = list_necklaces(&params)
                        .iter()
                        .map(|x| x.symbols().to_vec())
                        .collect();
                    assert_eq!(listed, heavy, "n={n} k={k} w={w}");

                    let first = first_necklace(&params);
                    assert_eq!(first.symbols(), &heavy[0][..]);
                    if n > 1 && k > 1 && (k as i64) < w && (n as i64) < w && w < k as i64 * n as i64 {
                        assert_eq!(first.weight() as i64, w);
                        assert!(first.is_aperiodic(), "{first} n={n} k={k} w={w}");
                    }
                    if w < k as i64 * n as i64 && n > 1 && k > 1 {
                        let m = heavy.len();
                        let mut penultimate = vec![k; n];
                        penultimate[0] = k - 1;
                        assert_eq!(heavy[m - 2], penultimate);
                    }

                    for alpha in &all {
                        let expect = heavy.iter().find(|nu| *nu >= alpha).unwrap();
                        let got = weighted_successor_geq(
                            &Necklace::new_unchecked(alpha.clone(), k),
                            &params,
                        );
                        assert_eq!(got.symbols(), &expect[..], "alpha={alpha:?} w={w}");
                    }
                }
            }
        }
    }

    #[test]
    fn smallest_with_prefix_matches_brute_force() {
        for k in 1..=4u32 {
            for n in 1..=6 {
                let all = brute_necklaces(n, k);
                for s in all_strings(n, k) {
                    let s = crate::KString::new(s, k).unwrap();
                    let q = s.pq_split().q;
                    let expect = all.iter().find(|nu| nu.starts_with(&q)).unwrap();
                    let got = smallest_necklace_with_prefix(&q, n, k).unwrap();
                    assert_eq!(got.symbols(), &expect[..]);
                }
                // every prefix of every necklace, not only pq_split outputs
                for nu in &all {
                    for len in 1..=n {
                        let q = &nu[..len];
                        let expect = all.iter().find(|x| x.starts_with(q)).unwrap();
                        let got = smallest_necklace_with_prefix(q, n, k).unwrap();
                        assert_eq!(got.symbols(), &expect[..]);
                        assert!(is_necklace(got.symbols()));
                    }
                }
            }
        }
    }
}
