//! Terms of the minimal projective resolution of the trivial module and the
//! radical layers of projective covers in D∞ and A∞∞ blocks.
//!
//! Only the terms `P_d` are modelled, as multisets of orbit indices `i`
//! standing for `P(λ^(i))`; differentials are not represented.

use std::collections::BTreeSet;
use std::io;
use std::sync::RwLock;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::dims::{odd_exterior_factor, projective_dim_bounds, DimBound};
use crate::error::{Error, Result};
use crate::rootsys::SuperWeight;
use crate::szops::{classify_block, BlockDescriptor, QuiverType};

/// Radical layers `[head, middle, socle]` of a projective cover.
///
/// D∞ vertices are orbit indices `i ≥ 0`. A∞∞ vertices are signed: `+i` is
/// `λ₊^(i)`, `-i` is `λ₋^(i)`, and `0` is the shared `λ₊^(0) = λ₋^(0)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjCoverStructure {
    pub quiver: QuiverType,
    pub head: i64,
    pub layers: [Vec<i64>; 3],
}

impl ProjCoverStructure {
    pub fn middle(&self) -> &[i64] {
        &self.layers[1]
    }
}

pub fn proj_cover_structure(quiver: QuiverType, i: i64) -> Result<ProjCoverStructure> {
    let middle = match quiver {
        QuiverType::DInfinity => match i {
            _ if i < 0 => return Err(Error::NegativeIndex(i)),
            0 | 1 => vec![2],
            2 => vec![0, 1, 3],
            _ => vec![i - 1, i + 1],
        },
        QuiverType::AInfinityInfinity => match i {
            0 => vec![1, -1],
            _ if i > 0 => vec![i - 1, i + 1],
            _ => vec![i + 1, i - 1],
        },
    };
    Ok(ProjCoverStructure {
        quiver,
        head: i,
        layers: [vec![i], middle, vec![i]],
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProxyMode {
    #[default]
    Lower,
    Upper,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ResolutionTerm {
    pub d: usize,
    /// Orbit indices of the summands, in the order `P(λ^(d+1)) ⊕ P(λ^(d-1)) ⊕ …`.
    pub summands: Vec<u64>,
    pub count: usize,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub proxy_lower: BigInt,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub proxy_upper: BigInt,
}

impl ResolutionTerm {
    pub fn proxy(&self, mode: ProxyMode) -> &BigInt {
        match mode {
            ProxyMode::Lower => &self.proxy_lower,
            ProxyMode::Upper => &self.proxy_upper,
        }
    }
}

/// Summand indices of `P_d`: `{0}` for `d = 0`; `{d+1, d-1, …, 2}` for odd `d`;
/// `{d+1, d-1, …, 3, 0}` for `d ≡ 0 (4)`; `{d+1, d-1, …, 3, 1}` for `d ≡ 2 (4)`.
pub fn summand_indices(d: usize) -> Vec<u64> {
    let top = d as u64 + 1;
    if d == 0 {
        return vec![0];
    }
    if d % 2 == 1 {
        return (2..=top).rev().step_by(2).collect();
    }
    let mut out: Vec<u64> = (3..=top).rev().step_by(2).collect();
    out.push(if d.is_multiple_of(4) { 0 } else { 1 });
    out
}

/// The resolution of the trivial module of osp(k|2), with the D∞ orbit and
/// per-index dimension bounds cached.
#[derive(Debug)]
pub struct TrivialResolution {
    k: u32,
    block: BlockDescriptor,
    bounds: RwLock<Vec<DimBound>>,
}

impl TrivialResolution {
    pub fn new(k: u32) -> Result<Self> {
        let block = classify_block(&SuperWeight::zero(k)?)?;
        if block.quiver != QuiverType::DInfinity {
            return Err(Error::Internal(format!(
                "trivial block of k = {k} is not D∞"
            )));
        }
        Ok(Self {
            k,
            block,
            bounds: RwLock::new(Vec::new()),
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn block(&self) -> &BlockDescriptor {
        &self.block
    }

    /// Dimension bounds of `P(λ^(i))`.
    pub fn bound(&self, i: u64) -> Result<DimBound> {
        let i = i as usize;
        if let Some(b) = self.bounds.read().unwrap().get(i) {
            return Ok(b.clone());
        }
        let mut bounds = self.bounds.write().unwrap();
        while bounds.len() <= i {
            let lambda = self.block.lambda(bounds.len() as i64)?;
            bounds.push(projective_dim_bounds(&lambda)?);
        }
        Ok(bounds[i].clone())
    }

    pub fn term(&self, d: usize) -> Result<ResolutionTerm> {
        let summands = summand_indices(d);
        let mut proxy_lower = BigInt::from(0);
        for &i in &summands {
            proxy_lower += self.bound(i)?.lower;
        }
        let proxy_upper = &proxy_lower * odd_exterior_factor(self.k);
        Ok(ResolutionTerm {
            d,
            count: summands.len(),
            summands,
            proxy_lower,
            proxy_upper,
        })
    }

    /// `P_0, …, P_depth`.
    pub fn terms(&self, depth: usize) -> Result<Vec<ResolutionTerm>> {
        (0..=depth).map(|d| self.term(d)).collect()
    }
}

pub fn resolution_term(k: u32, d: usize) -> Result<ResolutionTerm> {
    TrivialResolution::new(k)?.term(d)
}

/// Number of indecomposable summands of `P_0, …, P_depth`.
pub fn summand_count_sequence(k: u32, depth: usize) -> Result<Vec<u64>> {
    if k <= 2 {
        return Err(Error::InvalidRank(k));
    }
    Ok((0..=depth)
        .map(|d| summand_indices(d).len() as u64)
        .collect())
}

pub fn dim_proxy_sequence(k: u32, depth: usize, mode: ProxyMode) -> Result<Vec<BigInt>> {
    Ok(TrivialResolution::new(k)?
        .terms(depth)?
        .into_iter()
        .map(|t| t.proxy(mode).clone())
        .collect())
}

/// Every summand of `P_d` must occur in the middle radical layer of some
/// summand of `P_{d-1}`. Returns the offending `(d, index)` pairs.
pub fn quiver_walk_violations(depth: usize) -> Result<Vec<(usize, u64)>> {
    let mut violations = Vec::new();
    for d in 1..=depth {
        let mut reachable = BTreeSet::new();
        for j in summand_indices(d - 1) {
            let cover = proj_cover_structure(QuiverType::DInfinity, j as i64)?;
            reachable.extend(cover.middle().iter().copied());
        }
        for i in summand_indices(d) {
            if !reachable.contains(&(i as i64)) {
                violations.push((d, i));
            }
        }
    }
    Ok(violations)
}

/// CSV with columns `d,count,proxy_lower,proxy_upper`.
pub fn write_csv<W: io::Write>(terms: &[ResolutionTerm], writer: W) -> io::Result<()> {
    let mut out = csv::Writer::from_writer(writer);
    out.write_record(["d", "count", "proxy_lower", "proxy_upper"])?;
    for t in terms {
        out.write_record([
            t.d.to_string(),
            t.count.to_string(),
            t.proxy_lower.to_string(),
            t.proxy_upper.to_string(),
        ])?;
    }
    out.flush()
}
