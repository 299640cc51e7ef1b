use bwdb::cycle::generate;
use bwdb::{Decoder, Decoder64, KString, Necklace, Params, Symbol};
use num_bigint::BigUint;
use proptest::prelude::*;

fn params_strategy() -> impl Strategy<Value = Params> {
    (1usize..=7, 2u32..=5, any::<bool>(), 0.0f64..=1.0).prop_map(|(n, k, up, frac)| {
        let lo = n as i64;
        let hi = k as i64 * n as i64;
        let w = lo + ((hi - lo) as f64 * frac).round() as i64;
        if up {
            Params::up(n, k, w).unwrap()
        } else {
            Params::down(n, k, w).unwrap()
        }
    })
}

proptest! {
    #[test]
    fn unrank_then_rank_is_identity((params, pick) in (params_strategy(), any::<u64>())) {
        let dec = Decoder64::new(params).unwrap();
        let r = pick % dec.cycle_len() + 1;
        let s = dec.unrank(&r).unwrap();
        prop_assert!(params.admits_weight(s.weight()));
        prop_assert_eq!(dec.rank(&s).unwrap(), r);
    }

    #[test]
    fn rank_matches_position_in_cycle((params, pick) in (params_strategy(), any::<usize>())) {
        let cycle: Vec<Symbol> = generate(&params).collect();
        let n = params.n();
        let start = pick % cycle.len();
        let win: Vec<_> = (0..n).map(|i| cycle[(start + i) % cycle.len()]).collect();
        let dec = Decoder64::new(params).unwrap();
        let s = KString::new(win, params.k()).unwrap();
        prop_assert_eq!(dec.rank(&s).unwrap(), start as u64 + 1);
    }

    #[test]
    fn big_and_machine_counts_agree((params, pick) in (params_strategy(), any::<u64>())) {
        let small = Decoder64::new(params).unwrap();
        let big = Decoder::new(params).unwrap();
        prop_assert_eq!(big.cycle_len(), &BigUint::from(*small.cycle_len()));
        let r = pick % small.cycle_len() + 1;
        let s = small.unrank(&r).unwrap();
        prop_assert_eq!(big.unrank(&BigUint::from(r)).unwrap(), s.clone());
        prop_assert_eq!(big.rank(&s).unwrap(), BigUint::from(r));
    }
}

/// The per-symbol search for the necklace at rank `r` keeps this invariant:
/// once `t_1 … t_i` is fixed, `t_1 … t_i k^(n-i)` is an admitted necklace
/// ranked at or after `r`, and lowering `t_i` by one gives a string that is
/// either not an admitted necklace or ranked before `r`.
#[test]
fn smallest_neck_search_invariant() {
    for n in 2..=6usize {
        for k in 2..=4u32 {
            for w in n as i64..=(k as i64 * n as i64) {
                let params = Params::up(n, k, w).unwrap();
                let dec = Decoder64::new(params).unwrap();
                let len = *dec.cycle_len();
                if len < n as u64 {
                    continue;
                }
                let rank_of = |v: &[Symbol]| -> Option<u64> {
                    let neck = Necklace::new(KString::new(v.to_vec(), k).ok()?).ok()?;
                    params
                        .admits_weight(neck.weight())
                        .then(|| dec.rank(&neck).unwrap())
                };
                for r in 1..=len - n as u64 + 1 {
                    let found = dec.smallest_neck(&r).unwrap();
                    let t = found.symbols();
                    for i in 1..=n {
                        let mut v = t[..i].to_vec();
                        v.resize(n, k);
                        assert!(
                            rank_of(&v).is_some_and(|p| p >= r),
                            "n={n} k={k} w={w} r={r}: prefix {i} of {found}"
                        );
                        if t[i - 1] > 1 {
                            v[i - 1] -= 1;
                            assert!(
                                rank_of(&v).is_none_or(|p| p < r),
                                "n={n} k={k} w={w} r={r}: lowering symbol {i} of {found}"
                            );
                        }
                    }
                }
            }
        }
    }
}
