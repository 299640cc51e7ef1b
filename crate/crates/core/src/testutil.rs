use crate::string::Symbol;

/// All strings of length `n` over `{1..k}` in lexicographic order.
pub fn all_strings(n: usize, k: u32) -> Vec<Vec<Symbol>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|s| {
                (1..=k).map(move |x| {
                    let mut t = s.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn rotation(s: &[Symbol], start: usize) -> Vec<Symbol> {
    s[start..].iter().chain(&s[..start]).copied().collect()
}

/// Every necklace of length `n`, sorted, by comparing against all rotations.
pub fn brute_necklaces(n: usize, k: u32) -> Vec<Vec<Symbol>> {
    all_strings(n, k)
        .into_iter()
        .filter(|s| (0..n).all(|i| s[..] <= rotation(s, i)[..]))
        .collect()
}
