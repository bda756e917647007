//! Weight multiplicities of so(k) by Freudenthal's recursion
//!
//! `((λ+ρ,λ+ρ) - (μ+ρ,μ+ρ))·m(μ) = 2 Σ_{α>0} Σ_{j≥1} m(μ+jα)·(μ+jα, α)`
//!
//! Shares nothing with the Weyl-product path: roots, `ρ` and the weight
//! lattice are rebuilt here from the Cartan data in `i64` doubled coordinates.

use std::collections::HashMap;

use crate::error::{Error, Result};

type Weight = Vec<i64>;

fn inner(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn plus(a: &[i64], b: &[i64], scale: i64) -> Weight {
    a.iter().zip(b).map(|(x, y)| x + scale * y).collect()
}

/// Doubled `εi` basis vectors for so(k).
struct SoData {
    simple: Vec<Weight>,
    positive: Vec<Weight>,
    rho: Weight,
}

impl SoData {
    fn new(k: u32) -> Self {
        let m = (k / 2) as usize;
        let unit = |i: usize, c: i64| {
            let mut v = vec![0; m];
            v[i] = 2 * c;
            v
        };
        let mut simple: Vec<Weight> = (0..m.saturating_sub(1))
            .map(|i| plus(&unit(i, 1), &unit(i + 1, 1), -1))
            .collect();
        if k % 2 == 1 {
            simple.push(unit(m - 1, 1));
        } else {
            simple.push(plus(&unit(m - 2, 1), &unit(m - 1, 1), 1));
        }

        // Positive roots: close the simple roots under adding simple roots,
        // keeping vectors that are roots (norm 8 or 4 in doubled units with the
        // right shape).
        let is_root = |v: &Weight| {
            let nonzero: Vec<i64> = v.iter().copied().filter(|&x| x != 0).collect();
            match nonzero.as_slice() {
                [a, b] => a.abs() == 2 && b.abs() == 2,
                [a] => k % 2 == 1 && a.abs() == 2,
                _ => false,
            }
        };
        let mut positive = simple.clone();
        let mut frontier = simple.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for r in &frontier {
                for s in &simple {
                    let cand = plus(r, s, 1);
                    if is_root(&cand) && !positive.contains(&cand) {
                        positive.push(cand.clone());
                        next.push(cand);
                    }
                }
            }
            frontier = next;
        }
        let mut rho = vec![0; m];
        for r in &positive {
            rho = plus(&rho, r, 1);
        }
        // rho is the half-sum; entries of the sum are even in doubled units
        let rho = rho.iter().map(|x| x / 2).collect();
        Self {
            simple,
            positive,
            rho,
        }
    }
}

/// All weight multiplicities of the so(k)-module with highest weight
/// `highest` (doubled coordinates).
pub fn multiplicities(k: u32, highest: &[i64]) -> Result<HashMap<Weight, u64>> {
    let data = SoData::new(k);
    let lam_rho = plus(highest, &data.rho, 1);
    let top = inner(&lam_rho, &lam_rho);
    let norm_bound = inner(highest, highest);

    let mut mult: HashMap<Weight, u64> = HashMap::new();
    mult.insert(highest.to_vec(), 1);
    let mut level: Vec<Weight> = vec![highest.to_vec()];
    while !level.is_empty() {
        let mut candidates: Vec<Weight> = Vec::new();
        for mu in &level {
            for a in &data.simple {
                let nu = plus(mu, a, -1);
                if !mult.contains_key(&nu) && !candidates.contains(&nu) {
                    candidates.push(nu);
                }
            }
        }
        let mut next = Vec::new();
        for nu in candidates {
            let mut sum: i64 = 0;
            for alpha in &data.positive {
                let mut j = 1;
                loop {
                    let up = plus(&nu, alpha, j);
                    if let Some(&c) = mult.get(&up) {
                        sum += c as i64 * inner(&up, alpha);
                    }
                    if inner(&up, &up) > norm_bound && inner(&up, alpha) > 0 {
                        break;
                    }
                    j += 1;
                }
            }
            let nu_rho = plus(&nu, &data.rho, 1);
            let gap = top - inner(&nu_rho, &nu_rho);
            let value = if sum == 0 {
                0
            } else if gap <= 0 || (2 * sum) % gap != 0 || 2 * sum / gap < 0 {
                return Err(Error::Internal(format!(
                    "Freudenthal step at {nu:?}: 2·{sum}/{gap}"
                )));
            } else {
                (2 * sum / gap) as u64
            };
            if value > 0 {
                mult.insert(nu.clone(), value);
                next.push(nu);
            }
        }
        level = next;
    }
    Ok(mult)
}

/// `dim L(μ)` as the sum of all weight multiplicities.
pub fn dimension(k: u32, highest_doubled: &[i64]) -> Result<u64> {
    Ok(multiplicities(k, highest_doubled)?.values().sum())
}

/// Dominant so(k) weights (doubled) with `Σ|μi| ≤ max_abs_sum`, integral and
/// half-integral.
pub fn dominant_weights(k: u32, max_abs_sum: i64) -> Vec<Weight> {
    let m = (k / 2) as usize;
    let bound = 2 * max_abs_sum;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(m);
    fn rec(k: u32, m: usize, bound: i64, current: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if current.len() == m {
            let total: i64 = current.iter().map(|x| x.abs()).sum();
            let parity_ok = current.iter().all(|x| (x - current[0]) % 2 == 0);
            let last = current[m - 1];
            let tail_ok = if k.is_multiple_of(2) {
                m < 2 || current[m - 2] >= last.abs()
            } else {
                last >= 0
            };
            if total <= bound && parity_ok && tail_ok {
                out.push(current.clone());
            }
            return;
        }
        let hi = current.last().copied().unwrap_or(bound);
        let lo = if current.len() + 1 == m && k.is_multiple_of(2) {
            -bound
        } else {
            0
        };
        for v in (lo..=hi).rev() {
            current.push(v);
            rec(k, m, bound, current, out);
            current.pop();
        }
    }
    rec(k, m, bound, &mut current, &mut out);
    out
}
