//! Translation operators on atypical weights: `a±`, `λ̂`, `λ̌`, `λ^(0)`, the
//! two-sided sequence `λ^(i)`, and the quiver type of a block.

use std::fmt;
use std::sync::RwLock;

use serde::Serialize;

use crate::atypical::{atypicality, AtypicalRoot, AtypicalityInfo};
use crate::error::{Error, Result};
use crate::rootsys::{rho_shift, rho_unshift, s_of, HalfInt, SuperWeight};
use crate::weyl::{dominant_conjugate, is_g0_dominant};

fn atypical_info(lambda: &SuperWeight) -> Result<(AtypicalityInfo, AtypicalRoot)> {
    let info = atypicality(lambda)?;
    match info.root {
        Some(root) => Ok((info, root)),
        None => Err(Error::Typical(lambda.to_string())),
    }
}

/// Smallest `a ≥ 1` with `|start + direction·a| ∉ S`.
fn first_free_step(start: &HalfInt, direction: i64, info: &AtypicalityInfo) -> u64 {
    let step = HalfInt::from_int(direction);
    let mut value = start + &step;
    let mut a = 1;
    while info.sset.contains(&value.abs()) {
        value += &step;
        a += 1;
    }
    a
}

/// `(a₊, a₋)`: the smallest positive integers with `|λ̃l ± a±| ∉ S(λ̄)` for
/// `γ = δ + εl`, and `|λ̃l ∓ a±| ∉ S(λ̄)` for `γ = δ - εl`.
pub fn a_plus_minus(lambda: &SuperWeight) -> Result<(u64, u64)> {
    let (info, root) = atypical_info(lambda)?;
    let shifted = rho_shift(lambda);
    let start = &shifted.coords()[root.index];
    let dir = root.sign.as_i64();
    Ok((
        first_free_step(start, dir, &info),
        first_free_step(start, -dir, &info),
    ))
}

/// `λ̂ = (λ + a₊γ)⁺`
pub fn hat(lambda: &SuperWeight) -> Result<SuperWeight> {
    let (_, root) = atypical_info(lambda)?;
    let (a_plus, _) = a_plus_minus(lambda)?;
    let moved = lambda.add(&root.weight(lambda.k())?.scale(a_plus))?;
    Ok(dominant_conjugate(&moved)?.0)
}

/// `λ̌ = (λ - a₋γ)⁺`
pub fn check(lambda: &SuperWeight) -> Result<SuperWeight> {
    let (_, root) = atypical_info(lambda)?;
    let (_, a_minus) = a_plus_minus(lambda)?;
    let moved = lambda.sub(&root.weight(lambda.k())?.scale(a_minus))?;
    Ok(dominant_conjugate(&moved)?.0)
}

/// The base weight `λ^(0)` of the block of `λ`.
///
/// With `j` the least non-negative integer such that `a = j + 1 - s ∉ S(λ̄)`,
/// `λ^(0) + ρ = (-a | b1, …, b_{m-1-j}, a, b_{m-j}, …, b_{m-1})` where
/// `b1 > … > b_{m-1}` lists `S(λ̄)`.
pub fn lambda_zero(lambda: &SuperWeight) -> Result<SuperWeight> {
    let (info, _) = atypical_info(lambda)?;
    let m = lambda.m();
    let s = s_of(lambda.k());
    let sorted = info.sset_descending();

    let mut j = 0usize;
    let a = loop {
        let candidate = HalfInt::from_int(j as i64 + 1) - &s;
        if !info.sset.contains(&candidate) {
            break candidate;
        }
        j += 1;
    };
    // j ≤ m-1 since S has m-1 elements
    let split = m - 1 - j;
    let slots = (0..=sorted.len())
        .filter(|&p| {
            let above = p == 0 || sorted[p - 1] > a;
            let below = p == sorted.len() || sorted[p] < a;
            above && below
        })
        .collect::<Vec<_>>();
    if slots != [split] {
        return Err(Error::Internal(format!(
            "λ^(0) insertion for {lambda}: slot {split} but decreasing order allows {slots:?}"
        )));
    }

    let mut coords = Vec::with_capacity(m + 1);
    coords.push(-&a);
    coords.extend(sorted[..split].iter().cloned());
    coords.push(a);
    coords.extend(sorted[split..].iter().cloned());
    let base = rho_unshift(&lambda.with_coords(coords));

    let base_info = atypicality(&base)?;
    if !base_info.is_atypical() || base_info.sset != info.sset {
        return Err(Error::Internal(format!(
            "λ^(0) = {base} left the atypical type of {lambda}"
        )));
    }
    Ok(base)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum QuiverType {
    #[serde(rename = "Dinfinity")]
    DInfinity,
    #[serde(rename = "AinfinityInfinity")]
    AInfinityInfinity,
}

impl fmt::Display for QuiverType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuiverType::DInfinity => "D∞",
            QuiverType::AInfinityInfinity => "A∞∞",
        })
    }
}

/// Lazily extended `i ↦ λ^(i)` for a D∞ block. Safe to share across threads.
#[derive(Debug)]
pub struct Orbit {
    // nonnegative[i] = λ^(i); negative[i-1] = λ^(-i)
    nonnegative: RwLock<Vec<SuperWeight>>,
    negative: RwLock<Vec<SuperWeight>>,
}

impl Orbit {
    fn new(base: SuperWeight) -> Self {
        Self {
            nonnegative: RwLock::new(vec![base]),
            negative: RwLock::new(Vec::new()),
        }
    }

    pub fn base(&self) -> SuperWeight {
        self.nonnegative.read().unwrap()[0].clone()
    }

    pub fn get(&self, i: i64) -> Result<SuperWeight> {
        if i >= 0 {
            Self::extend(&self.nonnegative, i as usize, None, hat)
        } else {
            let base = self.base();
            Self::extend(&self.negative, (-i - 1) as usize, Some(base), check)
        }
    }

    fn extend(
        cache: &RwLock<Vec<SuperWeight>>,
        idx: usize,
        seed: Option<SuperWeight>,
        step: fn(&SuperWeight) -> Result<SuperWeight>,
    ) -> Result<SuperWeight> {
        if let Some(w) = cache.read().unwrap().get(idx) {
            return Ok(w.clone());
        }
        let mut entries = cache.write().unwrap();
        while entries.len() <= idx {
            let prev = entries
                .last()
                .or(seed.as_ref())
                .expect("orbit seeded")
                .clone();
            let next = step(&prev)?;
            if !is_g0_dominant(&next) || !atypicality(&next)?.is_atypical() {
                return Err(Error::Internal(format!(
                    "orbit left the atypical dominant weights at {next}"
                )));
            }
            entries.push(next);
        }
        Ok(entries[idx].clone())
    }
}

#[derive(Debug)]
pub struct BlockDescriptor {
    pub quiver: QuiverType,
    pub info: AtypicalityInfo,
    /// `λ^(0)`; only for D∞.
    pub base: Option<SuperWeight>,
    orbit: Option<Orbit>,
}

impl BlockDescriptor {
    pub fn orbit(&self) -> Option<&Orbit> {
        self.orbit.as_ref()
    }

    pub fn lambda(&self, i: i64) -> Result<SuperWeight> {
        self.orbit.as_ref().ok_or(Error::AInfinityOrbit)?.get(i)
    }
}

/// D∞ when `k` is odd or `0 ∈ S(λ̄)`; A∞∞ otherwise.
pub fn classify_block(lambda: &SuperWeight) -> Result<BlockDescriptor> {
    let (info, _) = atypical_info(lambda)?;
    let d_type = lambda.k() % 2 == 1 || info.sset.contains(&HalfInt::zero());
    if !d_type {
        return Ok(BlockDescriptor {
            quiver: QuiverType::AInfinityInfinity,
            info,
            base: None,
            orbit: None,
        });
    }
    let base = lambda_zero(lambda)?;
    Ok(BlockDescriptor {
        quiver: QuiverType::DInfinity,
        info,
        orbit: Some(Orbit::new(base.clone())),
        base: Some(base),
    })
}

/// `λ^(i)` of the block of `λ`; `λ^(i) = (λ^(i-1))^` and `λ^(-i) = (λ^(1-i))ˇ`.
pub fn lambda_i(lambda: &SuperWeight, i: i64) -> Result<SuperWeight> {
    classify_block(lambda)?.lambda(i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(k: u32, c: &[i64]) -> SuperWeight {
        SuperWeight::from_ints(k, c).unwrap()
    }

    #[test]
    fn a_values_on_trivial() {
        for m in 2..=5u32 {
            let trivial = SuperWeight::zero(2 * m).unwrap();
            assert_eq!(a_plus_minus(&trivial).unwrap(), (2 * m as u64 - 2, 1));
            let trivial = SuperWeight::zero(2 * m + 1).unwrap();
            assert_eq!(a_plus_minus(&trivial).unwrap(), (2 * m as u64 - 1, 1));
        }
    }

    #[test]
    fn hat_and_check_on_trivial_k6() {
        let trivial = SuperWeight::zero(6).unwrap();
        assert_eq!(hat(&trivial).unwrap(), w(6, &[4, 0, 0, 0]));
        assert_eq!(check(&trivial).unwrap(), w(6, &[-1, 1, 0, 0]));
        assert_eq!(check(&hat(&trivial).unwrap()).unwrap(), trivial);
    }

    #[test]
    fn typical_inputs_are_rejected() {
        let typical = w(4, &[2, 1, 0]);
        assert!(matches!(a_plus_minus(&typical), Err(Error::Typical(_))));
        assert!(matches!(hat(&typical), Err(Error::Typical(_))));
        assert!(matches!(lambda_zero(&typical), Err(Error::Typical(_))));
        assert!(matches!(classify_block(&typical), Err(Error::Typical(_))));
    }

    #[test]
    fn lambda_zero_of_trivial() {
        for k in 3..=10 {
            let trivial = SuperWeight::zero(k).unwrap();
            assert_eq!(lambda_zero(&trivial).unwrap(), trivial, "k = {k}");
        }
    }

    #[test]
    fn lambda_zero_of_generic_weight() {
        // λ̃ = (3|3,2,1), S = {2,1}: j = 0, a = 0, λ^(0)+ρ = (0|2,1,0)
        let lambda = w(6, &[5, 1, 1, 1]);
        assert_eq!(lambda_zero(&lambda).unwrap(), w(6, &[2, 0, 0, 0]));
    }

    #[test]
    fn block_types() {
        assert_eq!(
            classify_block(&SuperWeight::zero(6).unwrap())
                .unwrap()
                .quiver,
            QuiverType::DInfinity
        );
        let a_type = classify_block(&w(6, &[5, 1, 1, 1])).unwrap();
        assert_eq!(a_type.quiver, QuiverType::AInfinityInfinity);
        assert!(a_type.base.is_none());
        assert_eq!(a_type.lambda(1).unwrap_err(), Error::AInfinityOrbit);
        assert_eq!(
            lambda_i(&w(6, &[5, 1, 1, 1]), 0).unwrap_err(),
            Error::AInfinityOrbit
        );
        // k odd: always D∞
        let b = w(7, &[2, 2, 0, 0]);
        assert_eq!(classify_block(&b).unwrap().quiver, QuiverType::DInfinity);
    }

    #[test]
    fn orbit_closed_forms_k6() {
        let trivial = SuperWeight::zero(6).unwrap();
        let block = classify_block(&trivial).unwrap();
        assert_eq!(block.lambda(0).unwrap(), trivial);
        assert_eq!(block.lambda(1).unwrap(), w(6, &[4, 0, 0, 0]));
        assert_eq!(block.lambda(2).unwrap(), w(6, &[5, 1, 0, 0]));
        assert_eq!(block.lambda(-2).unwrap(), w(6, &[-2, 2, 0, 0]));
    }

    #[test]
    fn orbit_is_shareable_across_threads() {
        let block = classify_block(&SuperWeight::zero(7).unwrap()).unwrap();
        std::thread::scope(|scope| {
            for t in 0..4 {
                let block = &block;
                scope.spawn(move || {
                    for i in (0..30).rev() {
                        let i = if t % 2 == 0 { i } else { -i };
                        block.lambda(i).unwrap();
                    }
                });
            }
        });
        assert_eq!(block.lambda(29).unwrap(), w(7, &[33, 28, 0, 0]));
    }
}
