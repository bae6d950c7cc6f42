//! Independent oracles used across integration suites. Everything here is
//! deliberately naive: no canonical pruning, no incremental state, no shared
//! code with the engine under test.

// Each test binary compiles this whole module but exercises its own subset.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// All degree-`e` exponent vectors over `r` variables, ascending.
pub fn stratum(r: usize, e: u32) -> Vec<Vec<u16>> {
    fn rec(r: usize, e: u32, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if r == 1 {
            let mut v = prefix.clone();
            v.push(e as u16);
            out.push(v);
            return;
        }
        for a in 0..=e {
            prefix.push(a as u16);
            rec(r - 1, e - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if r >= 1 {
        rec(r, e, &mut Vec::new(), &mut out);
    }
    out
}

/// h-vector of the divisor closure of `gens` (all of one degree `e`).
pub fn closure_h(gens: &[Vec<u16>], r: usize, e: u32) -> Vec<u64> {
    let mut seen: BTreeSet<Vec<u16>> = BTreeSet::new();
    let mut stack: Vec<Vec<u16>> = gens.to_vec();
    while let Some(m) = stack.pop() {
        if !seen.insert(m.clone()) {
            continue;
        }
        for v in 0..r {
            if m[v] > 0 {
                let mut d = m.clone();
                d[v] -= 1;
                if !seen.contains(&d) {
                    stack.push(d);
                }
            }
        }
    }
    let mut h = vec![0u64; e as usize + 1];
    for m in &seen {
        h[m.iter().map(|&x| x as usize).sum::<usize>()] += 1;
    }
    h
}

/// The support size of a generator set.
pub fn support_size(gens: &[Vec<u16>], r: usize) -> usize {
    (0..r).filter(|&v| gens.iter().any(|g| g[v] > 0)).count()
}

/// Brute-force enumeration of pure h-vectors: every nonempty subset of the
/// degree-`e` stratum with support exactly `r`, no isomorph rejection.
/// Feasible for pools of at most ~22 monomials.
pub fn naive_enumerate(r: usize, e: u32) -> BTreeSet<Vec<u64>> {
    let pool = stratum(r, e);
    let n = pool.len();
    assert!(n <= 22, "naive oracle pool too large: {n}");
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << n) {
        let gens: Vec<Vec<u16>> = (0..n)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| pool[i].clone())
            .collect();
        if support_size(&gens, r) != r {
            continue;
        }
        out.insert(closure_h(&gens, r, e));
    }
    out
}

/// Brute-force purity decision over `t`-subsets with support exactly `r`.
pub fn naive_decide(h: &[u64]) -> Option<Vec<Vec<u16>>> {
    let e = h.len() - 1;
    let r = h[1] as usize;
    let t = h[e] as usize;
    let pool = stratum(r, e as u32);
    let mut pick = vec![0usize; t];
    fn rec(
        pool: &[Vec<u16>],
        pick: &mut Vec<usize>,
        depth: usize,
        start: usize,
        h: &[u64],
        r: usize,
        e: u32,
    ) -> Option<Vec<Vec<u16>>> {
        if depth == pick.len() {
            let gens: Vec<Vec<u16>> = pick.iter().map(|&i| pool[i].clone()).collect();
            if support_size(&gens, r) == r && closure_h(&gens, r, e) == h {
                return Some(gens);
            }
            return None;
        }
        for i in start..pool.len() {
            pick[depth] = i;
            if let Some(w) = rec(pool, pick, depth + 1, i + 1, h, r, e) {
                return Some(w);
            }
        }
        None
    }
    rec(&pool, &mut pick, 0, 0, h, r, e as u32)
}

/// Partition count by Euler's pentagonal-number recurrence (independent of
/// the library's per-part-count table).
pub fn partition_count_pentagonal(n: usize) -> u64 {
    let mut p = vec![0i128; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0i128;
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g1 > m && g2 > m {
                break;
            }
            let sign = if k % 2 == 0 { -1 } else { 1 };
            if g1 <= m {
                total += sign * p[m - g1];
            }
            if g2 <= m {
                total += sign * p[m - g2];
            }
            k += 1;
        }
        p[m] = total;
    }
    u64::try_from(p[n]).expect("partition counts fit u64 at tested sizes")
}
