//! Atypicality of integral g0-dominant weights.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{form, rho_shift, HalfInt, SuperWeight};
use crate::weyl::{is_g0_dominant, is_g_dominant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RootSign {
    Plus,
    Minus,
}

impl RootSign {
    pub fn as_i64(self) -> i64 {
        match self {
            RootSign::Plus => 1,
            RootSign::Minus => -1,
        }
    }
}

/// `γ = δ ± εl`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct AtypicalRoot {
    /// 1-based.
    pub index: usize,
    pub sign: RootSign,
}

impl AtypicalRoot {
    pub fn weight(&self, k: u32) -> Result<SuperWeight> {
        let delta = SuperWeight::delta(k)?;
        let eps = SuperWeight::epsilon(k, self.index)?;
        match self.sign {
            RootSign::Plus => delta.add(&eps),
            RootSign::Minus => delta.sub(&eps),
        }
    }
}

impl fmt::Display for AtypicalRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign {
            RootSign::Plus => '+',
            RootSign::Minus => '-',
        };
        write!(f, "δ{sign}ε{}", self.index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtypicalityInfo {
    pub degree: u8,
    pub root: Option<AtypicalRoot>,
    /// `S(λ̄) = {|λ̃i| : i ≠ 0, l}`
    pub sset: BTreeSet<HalfInt>,
    /// `λ̃0 = λ̃l = 0`: both `δ ± εl` are orthogonal and `δ - εl` was chosen.
    pub both_signs_orthogonal: bool,
}

impl AtypicalityInfo {
    pub fn is_atypical(&self) -> bool {
        self.degree == 1
    }

    /// `S(λ̄)` listed in decreasing order.
    pub fn sset_descending(&self) -> Vec<HalfInt> {
        self.sset.iter().rev().cloned().collect()
    }
}

pub fn atypicality(lambda: &SuperWeight) -> Result<AtypicalityInfo> {
    if !is_g0_dominant(lambda) {
        return Err(Error::NotG0Dominant(lambda.to_string()));
    }
    let k = lambda.k();
    let shifted = rho_shift(lambda);
    let mut orthogonal = Vec::new();
    for index in 1..=lambda.m() {
        for sign in [RootSign::Plus, RootSign::Minus] {
            let root = AtypicalRoot { index, sign };
            if form(&shifted, &root.weight(k)?)?.is_zero() {
                orthogonal.push(root);
            }
        }
    }

    let (root, both) = match orthogonal.as_slice() {
        [] => {
            return Ok(AtypicalityInfo {
                degree: 0,
                root: None,
                sset: BTreeSet::new(),
                both_signs_orthogonal: false,
            })
        }
        [only] => (*only, false),
        [a, b] if a.index == b.index && shifted.coords()[a.index].is_zero() => (
            AtypicalRoot {
                index: a.index,
                sign: RootSign::Minus,
            },
            true,
        ),
        many => {
            return Err(Error::Internal(format!(
                "{lambda} is orthogonal to {} isotropic odd roots",
                many.len()
            )))
        }
    };

    if lambda.tail().iter().any(|c| !c.is_integer()) {
        return Err(Error::Internal(format!(
            "atypical {lambda} has a non-integral coordinate"
        )));
    }
    let sset: BTreeSet<HalfInt> = shifted
        .tail()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i + 1 != root.index)
        .map(|(_, c)| c.abs())
        .collect();
    if sset.len() + 1 != lambda.m() {
        return Err(Error::Internal(format!(
            "S(λ̄) of {lambda} has repeated entries"
        )));
    }
    Ok(AtypicalityInfo {
        degree: 1,
        root: Some(root),
        sset,
        both_signs_orthogonal: both,
    })
}

/// `atyp(L(λ))` for `λ ∈ P⁺`.
pub fn atyp_of_simple(lambda: &SuperWeight) -> Result<u8> {
    if !is_g_dominant(lambda) {
        return Err(Error::NotGDominant(lambda.to_string()));
    }
    Ok(atypicality(lambda)?.degree)
}
