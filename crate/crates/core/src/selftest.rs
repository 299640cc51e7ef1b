//! Exhaustive cross-check of the decoder against direct enumeration, over a
//! small parameter grid.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::count::{self, Count};
use crate::cycle::{cyclic_window, generate};
use crate::decode::Decoder;
use crate::error::Result;
use crate::necklace::list_necklaces;
use crate::params::Params;
use crate::string::{weight, KString, Symbol};

/// Outcome of one grid cell.
#[derive(Debug, Clone)]
pub struct CellReport {
    pub params: Params,
    pub failures: Vec<String>,
}

impl CellReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Default)]
pub struct GridReport {
    pub cells: Vec<CellReport>,
}

impl GridReport {
    pub fn passed(&self) -> usize {
        self.cells.iter().filter(|c| c.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.cells.len() - self.passed()
    }
}

/// Checks every `n in 1..=max_n`, `k in ks`, `w in n..=kn`, with both
/// bound directions.
pub fn run_grid(max_n: usize, ks: impl IntoIterator<Item = u32> + Clone) -> GridReport {
    let mut report = GridReport::default();
    for n in 1..=max_n {
        for k in ks.clone() {
            for w in n as i64..=(k as i64 * n as i64) {
                for params in [Params::up(n, k, w), Params::down(n, k, w)] {
                    let params = params.expect("grid parameters are admissible");
                    report.cells.push(check_cell::<BigUint>(&params));
                }
            }
        }
    }
    report
}

/// Runs every check for one parameter set.
pub fn check_cell<C: Count>(params: &Params) -> CellReport {
    let mut failures = Vec::new();
    if let Err(e) = check_into::<C>(params, &mut failures) {
        failures.push(format!("error: {e}"));
    }
    CellReport {
        params: *params,
        failures,
    }
}

fn check_into<C: Count>(params: &Params, failures: &mut Vec<String>) -> Result<()> {
    let (n, k) = (params.n(), params.k());
    let decoder = Decoder::<C>::new(*params)?;
    let cycle: Vec<Symbol> = generate(params).collect();

    // every admitted string appears exactly once as a window
    let mut seen: HashMap<Vec<Symbol>, usize> = HashMap::new();
    for start in 0..cycle.len() {
        let win = cyclic_window(&cycle, start, n);
        if let Some(first) = seen.insert(win.clone(), start + 1) {
            failures.push(format!("{win:?} at {first} and {}", start + 1));
        }
    }
    let admitted = count_admitted(params);
    if seen.len() != admitted || cycle.len() != admitted {
        failures.push(format!(
            "cycle length {} with {} distinct windows, expected {admitted}",
            cycle.len(),
            seen.len()
        ));
    }
    if count::to_usize(decoder.cycle_len())? != cycle.len() {
        failures.push(format!("counted length {}", decoder.cycle_len()));
    }

    for (win, &pos) in &seen {
        if !params.admits_weight(weight(win)) {
            failures.push(format!("window {win:?} violates the bound"));
            continue;
        }
        let s = KString::new(win.clone(), k)?;
        let r = decoder.rank(&s)?;
        if count::to_usize(&r)? != pos {
            failures.push(format!("rank({s}) = {r}, scan says {pos}"));
        }
        let back = decoder.unrank(&r)?;
        if back != s {
            failures.push(format!("unrank({r}) = {back}, expected {s}"));
        }
    }

    // T for every admitted necklace equals the length of the cycle before it
    let up = params.to_up();
    let mut offset = 0usize;
    for neck in list_necklaces(&up) {
        let t = decoder.t_value(&neck)?;
        if count::to_usize(&t)? != offset {
            failures.push(format!("T({neck}) = {t}, expected {offset}"));
        }
        offset += neck.aperiodic_prefix().len();
    }
    Ok(())
}

fn count_admitted(params: &Params) -> usize {
    let (n, k) = (params.n(), params.k());
    let mut s = vec![1; n];
    let mut total = 0;
    loop {
        if params.admits_weight(weight(&s)) {
            total += 1;
        }
        let Some(i) = s.iter().rposition(|&x| x < k) else {
            return total;
        };
        s[i] += 1;
        s[i + 1..].fill(1);
    }
}
