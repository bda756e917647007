//! The Weyl group `W0` of the even part, the dot action, and dominant
//! conjugation `λ ↦ λ⁺`.
//!
//! `W0` acts on `(λ1, …, λm)` by signed permutations and fixes `λ0`. For
//! `k = 2m` only an even number of sign changes is allowed.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::rootsys::{is_integral_uniform, rank_of, rho_shift, rho_unshift, HalfInt, SuperWeight};

/// Largest `m` the exhaustive orbit search accepts (`m!·2^m` elements).
pub const BRUTE_FORCE_MAX_RANK: usize = 6;

/// An element of `W0`: coordinate `i` of `w(λ)` is `signs[i]·λ_{perm⁻¹(i)}`.
///
/// Indices here are 0-based over `(λ1, …, λm)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    k: u32,
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(k: u32, perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let m = rank_of(k);
        if perm.len() != m || signs.len() != m {
            return Err(Error::InvalidSignedPermutation(format!(
                "expected length {m}, got perm {} / signs {}",
                perm.len(),
                signs.len()
            )));
        }
        let mut seen = vec![false; m];
        for &p in &perm {
            if p >= m || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidSignedPermutation(format!(
                    "{perm:?} is not a permutation"
                )));
            }
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidSignedPermutation(format!(
                "signs {signs:?} must be ±1"
            )));
        }
        let flips = signs.iter().filter(|&&s| s == -1).count();
        if k.is_multiple_of(2) && flips % 2 == 1 {
            return Err(Error::InvalidSignedPermutation(format!(
                "{flips} sign changes; k = {k} needs an even number"
            )));
        }
        Ok(Self { k, perm, signs })
    }

    pub fn identity(k: u32) -> Self {
        let m = rank_of(k);
        Self {
            k,
            perm: (0..m).collect(),
            signs: vec![1; m],
        }
    }

    /// Flips the signs at the given 1-based positions.
    pub fn sign_changes(k: u32, positions: &[usize]) -> Result<Self> {
        let m = rank_of(k);
        let mut signs = vec![1i8; m];
        for &p in positions {
            if p == 0 || p > m {
                return Err(Error::InvalidSignedPermutation(format!(
                    "position {p} outside 1..={m}"
                )));
            }
            signs[p - 1] = -signs[p - 1];
        }
        Self::new(k, (0..m).collect(), signs)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign_change_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s == -1).count()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.signs.iter().all(|&s| s == 1)
    }

    fn inverse_perm(&self) -> Vec<usize> {
        let mut inv = vec![0; self.perm.len()];
        for (j, &p) in self.perm.iter().enumerate() {
            inv[p] = j;
        }
        inv
    }

    /// `self · other`, acting as `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::RankMismatch {
                left: self.k,
                right: other.k,
            });
        }
        let inv = self.inverse_perm();
        let perm = other.perm.iter().map(|&p| self.perm[p]).collect();
        let signs = (0..self.perm.len())
            .map(|i| self.signs[i] * other.signs[inv[i]])
            .collect();
        Ok(Self {
            k: self.k,
            perm,
            signs,
        })
    }

    pub fn inverse(&self) -> Self {
        let inv = self.inverse_perm();
        let mut signs = vec![1; self.signs.len()];
        for (i, &s) in self.signs.iter().enumerate() {
            signs[inv[i]] = s;
        }
        Self {
            k: self.k,
            perm: inv,
            signs,
        }
    }

    /// Every parity-valid element of `W0` for this `k`.
    pub fn enumerate(k: u32) -> Vec<Self> {
        let m = rank_of(k);
        let mut out = Vec::new();
        for perm in (0..m).permutations(m) {
            for mask in 0u32..(1 << m) {
                if k.is_multiple_of(2) && mask.count_ones() % 2 == 1 {
                    continue;
                }
                let signs = (0..m)
                    .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                    .collect();
                out.push(Self {
                    k,
                    perm: perm.clone(),
                    signs,
                });
            }
        }
        out
    }
}

fn check_algebra(w: &SignedPermutation, lambda: &SuperWeight) -> Result<()> {
    if w.k != lambda.k() {
        return Err(Error::RankMismatch {
            left: w.k,
            right: lambda.k(),
        });
    }
    Ok(())
}

fn apply_unchecked(w: &SignedPermutation, lambda: &SuperWeight) -> SuperWeight {
    let inv = w.inverse_perm();
    let tail = lambda.tail();
    let mut coords = Vec::with_capacity(tail.len() + 1);
    coords.push(lambda.lambda0().clone());
    for i in 0..tail.len() {
        let c = &tail[inv[i]];
        coords.push(if w.signs[i] == 1 { c.clone() } else { -c });
    }
    lambda.with_coords(coords)
}

/// The linear action `w(λ)`; `λ0` is untouched.
pub fn apply(w: &SignedPermutation, lambda: &SuperWeight) -> Result<SuperWeight> {
    check_algebra(w, lambda)?;
    Ok(apply_unchecked(w, lambda))
}

/// `w·λ = w(λ+ρ) - ρ`
pub fn dot(w: &SignedPermutation, lambda: &SuperWeight) -> Result<SuperWeight> {
    check_algebra(w, lambda)?;
    Ok(rho_unshift(&apply_unchecked(w, &rho_shift(lambda))))
}

/// An element of the full Weyl group `W = W0 × ℤ2`; the extra factor negates `λ0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullWeylElement {
    pub w0: SignedPermutation,
    pub flip_delta: bool,
}

impl FullWeylElement {
    pub fn apply(&self, lambda: &SuperWeight) -> Result<SuperWeight> {
        let moved = apply(&self.w0, lambda)?;
        if !self.flip_delta {
            return Ok(moved);
        }
        let mut coords = moved.coords().to_vec();
        coords[0] = -&coords[0];
        Ok(moved.with_coords(coords))
    }

    pub fn dot(&self, lambda: &SuperWeight) -> Result<SuperWeight> {
        Ok(rho_unshift(&self.apply(&rho_shift(lambda))?))
    }
}

/// Integral with `|λ̃1|, …, |λ̃m|` pairwise distinct.
pub fn is_regular(lambda: &SuperWeight) -> bool {
    if !is_integral_uniform(lambda) {
        return false;
    }
    let shifted = rho_shift(lambda);
    let abs: BTreeSet<HalfInt> = shifted.tail().iter().map(HalfInt::abs).collect();
    abs.len() == lambda.m()
}

/// `λ1 ≥ … ≥ λ_{m-1} ≥ |λm|`, plus `λm ≥ 0` when `k` is odd.
pub fn is_g0_dominant(lambda: &SuperWeight) -> bool {
    if !is_integral_uniform(lambda) {
        return false;
    }
    let tail = lambda.tail();
    let m = tail.len();
    if tail
        .windows(2)
        .take(m.saturating_sub(2))
        .any(|w| w[0] < w[1])
    {
        return false;
    }
    if m >= 2 && tail[m - 2] < tail[m - 1].abs() {
        return false;
    }
    !(lambda.k() % 2 == 1 && tail[m - 1].is_negative())
}

/// g0-dominant with `l = λ0 ∈ ℤ≥0` and `λ_{l+1} = … = λm = 0` whenever `l ≤ m-1`.
pub fn is_g_dominant(lambda: &SuperWeight) -> bool {
    if !is_g0_dominant(lambda) {
        return false;
    }
    let Some(l) = lambda.lambda0().to_integer() else {
        return false;
    };
    if l < 0.into() {
        return false;
    }
    let m = lambda.m();
    match usize::try_from(l) {
        Ok(l) if l < m => lambda.tail()[l..].iter().all(HalfInt::is_zero),
        _ => true,
    }
}

/// The unique g0-dominant weight in the dot-orbit of a regular `μ`, with a
/// `w` such that `w·μ` is that weight.
pub fn dominant_conjugate(mu: &SuperWeight) -> Result<(SuperWeight, SignedPermutation)> {
    if !is_regular(mu) {
        return Err(Error::NotRegular(mu.to_string()));
    }
    let shifted = rho_shift(mu);
    let tail = shifted.tail();
    let m = tail.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| tail[b].abs().cmp(&tail[a].abs()));

    let sign_of = |c: &HalfInt| if c.is_negative() { -1i8 } else { 1 };
    let mut signs: Vec<i8> = order.iter().map(|&j| sign_of(&tail[j])).collect();
    let mut last_negative = false;
    if mu.k().is_multiple_of(2) && signs.iter().filter(|&&s| s == -1).count() % 2 == 1 {
        // Either flip a zero coordinate for free or leave the smallest one negative.
        signs[m - 1] = -signs[m - 1];
        last_negative = !tail[order[m - 1]].is_zero();
    }

    let mut perm = vec![0; m];
    for (i, &j) in order.iter().enumerate() {
        perm[j] = i;
    }
    let w = SignedPermutation::new(mu.k(), perm, signs)?;
    let mut target = shifted.coords().to_vec();
    for (i, &j) in order.iter().enumerate() {
        target[i + 1] = tail[j].abs();
    }
    if last_negative {
        target[m] = -&target[m];
    }
    let result = rho_unshift(&shifted.with_coords(target));
    if !is_g0_dominant(&result) {
        // Only reachable for odd k with a zero ρ-shifted coordinate.
        return Err(Error::NotRegular(format!(
            "{mu} (ρ-shifted orbit meets a wall)"
        )));
    }
    debug_assert_eq!(dot(&w, mu)?, result);
    Ok((result, w))
}

/// Exhaustive-orbit oracle for [`dominant_conjugate`].
pub fn dominant_conjugate_bruteforce(mu: &SuperWeight) -> Result<SuperWeight> {
    if !is_regular(mu) {
        return Err(Error::NotRegular(mu.to_string()));
    }
    let m = mu.m();
    if m > BRUTE_FORCE_MAX_RANK {
        return Err(Error::OrbitTooLarge {
            m,
            max: BRUTE_FORCE_MAX_RANK,
        });
    }
    let mut found: Vec<SuperWeight> = Vec::new();
    for w in SignedPermutation::enumerate(mu.k()) {
        let image = dot(&w, mu)?;
        if is_g0_dominant(&image) && !found.contains(&image) {
            found.push(image);
        }
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        n => Err(Error::Internal(format!(
            "{n} g0-dominant weights in the dot-orbit of {mu}"
        ))),
    }
}
