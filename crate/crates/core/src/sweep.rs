//! Exhaustive sweep over all labeled graphs of small order.
//!
//! Every graph on `n <= 8` vertices is one setting of the `C(n, 2)`
//! upper-triangle bits, so the sweep is a counter over edge masks.
//! Adjacency rows live in one byte each; degrees are popcounts and
//! connectivity is an iterated OR of reachable rows. The sweep is
//! labeled, not isomorphism-reduced: duplicate isomorphs cost time but
//! cannot change the attained value set.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Sweep ceiling: order 8 means 2^28 masks, the desk-scale limit.
pub const MAX_SWEEP_ORDER: usize = 8;

/// Attained index values over all labeled connected graphs of orders up
/// to a bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    pub max_order: usize,
    /// Every value attained by some connected graph on `<= max_order`
    /// vertices.
    pub attained: BTreeSet<u64>,
    /// Attained odd values; provably empty, reported rather than assumed.
    pub odd_values: Vec<u64>,
    /// Even values below the attained maximum that no connected graph of
    /// these orders attains.
    pub gap_values: Vec<u64>,
}

/// Index values attained by connected graphs on exactly `n` vertices.
///
/// `workers` partitions the mask range into contiguous chunks whose
/// per-chunk value sets are unioned, so the result does not depend on
/// the worker count.
pub fn attained_for_order(n: usize, workers: usize) -> Result<BTreeSet<u64>> {
    check_sweep_args(n, workers)?;
    if n == 1 {
        return Ok(BTreeSet::from([0]));
    }

    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let cells = pairs.len();
    let total: u64 = 1 << cells;

    // Largest possible value: every edge at the extreme term.
    let value_cap = (cells as u64) * (((n - 1) * (n - 1) - 1) as u64);
    let workers = workers.min(total as usize).max(1);

    let chunk = total / workers as u64;
    let mut seen = vec![false; value_cap as usize + 1];
    std::thread::scope(|scope| {
        let mut handles = Vec::with_capacity(workers);
        for w in 0..workers {
            let lo = w as u64 * chunk;
            let hi = if w + 1 == workers { total } else { lo + chunk };
            let pairs = &pairs;
            handles.push(scope.spawn(move || sweep_chunk(n, pairs, lo, hi, value_cap)));
        }
        for handle in handles {
            for (value, hit) in seen.iter_mut().zip(handle.join().expect("sweep worker")) {
                *value |= hit;
            }
        }
    });

    Ok(seen
        .iter()
        .enumerate()
        .filter_map(|(value, &hit)| hit.then_some(value as u64))
        .collect())
}

fn sweep_chunk(n: usize, pairs: &[(usize, usize)], lo: u64, hi: u64, value_cap: u64) -> Vec<bool> {
    let mut seen = vec![false; value_cap as usize + 1];
    let full: u16 = (1 << n) - 1;
    for mask in lo..hi {
        let mut rows = [0u16; MAX_SWEEP_ORDER];
        let mut bits = mask;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (u, v) = pairs[k];
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }

        // Isolated vertices disconnect everything at n >= 2.
        if rows[..n].contains(&0) {
            continue;
        }
        let mut reach: u16 = 1;
        loop {
            let mut next = reach;
            let mut frontier = reach;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                next |= rows[v];
            }
            if next == reach {
                break;
            }
            reach = next;
        }
        if reach != full {
            continue;
        }

        let mut degrees = [0u64; MAX_SWEEP_ORDER];
        for v in 0..n {
            degrees[v] = u64::from(rows[v].count_ones());
        }
        let mut value = 0u64;
        let mut bits = mask;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (u, v) = pairs[k];
            value += (degrees[u] * degrees[u]).abs_diff(degrees[v] * degrees[v]);
        }
        seen[value as usize] = true;
    }
    seen
}

/// Sweeps every order up to `n_max` and reports the union of attained
/// values, any odd values, and the even gaps below the maximum.
pub fn sweep_connected(n_max: usize, workers: usize) -> Result<SpectrumReport> {
    check_sweep_args(n_max, workers)?;
    let mut attained = BTreeSet::new();
    for n in 1..=n_max {
        attained.append(&mut attained_for_order(n, workers)?);
    }
    let odd_values: Vec<u64> = attained.iter().copied().filter(|v| v % 2 == 1).collect();
    let top = attained.iter().next_back().copied().unwrap_or(0);
    let gap_values: Vec<u64> = (0..=top)
        .step_by(2)
        .filter(|v| !attained.contains(v))
        .collect();
    Ok(SpectrumReport {
        max_order: n_max,
        attained,
        odd_values,
        gap_values,
    })
}

fn check_sweep_args(n: usize, workers: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::SizeTooSmall {
            what: "sweep order",
            size: n,
            min: 1,
        });
    }
    if n > MAX_SWEEP_ORDER {
        return Err(Error::Unsupported(format!(
            "exhaustive sweeps are capped at order {MAX_SWEEP_ORDER}, got {n}"
        )));
    }
    if workers < 1 {
        return Err(Error::SizeTooSmall {
            what: "worker count",
            size: workers,
            min: 1,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_three_spectrum() {
        // Only P_3 and K_3 are connected on three vertices.
        let report = sweep_connected(3, 1).unwrap();
        assert_eq!(report.attained, BTreeSet::from([0, 6]));
        assert!(report.odd_values.is_empty());
        assert_eq!(report.gap_values, vec![2, 4]);
    }

    #[test]
    fn order_four_slice_is_exact() {
        // The six connected 4-vertex classes: C_4 and K_4 at 0, P_4 at 6,
        // the triangle-plus-pendant at 18, K_4 minus an edge at 20, S_4
        // at 24.
        let slice = attained_for_order(4, 1).unwrap();
        assert_eq!(slice, BTreeSet::from([0, 6, 18, 20, 24]));
    }

    #[test]
    fn hand_computed_slice_witnesses() {
        use crate::graph::Graph;
        use crate::invariants::modified_albertson;
        // Independent recomputation of the two nontrivial order-4 values.
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        assert_eq!(modified_albertson(&paw), 18);
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(modified_albertson(&diamond), 20);
    }

    #[test]
    fn worker_count_does_not_change_the_report() {
        let single = sweep_connected(5, 1).unwrap();
        for workers in [2, 3, 8] {
            assert_eq!(sweep_connected(5, workers).unwrap(), single);
        }
    }

    #[test]
    fn argument_validation() {
        assert!(sweep_connected(0, 1).is_err());
        assert!(sweep_connected(9, 1).is_err());
        assert!(sweep_connected(3, 0).is_err());
    }
}
