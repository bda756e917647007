//! Exact dimensions of simple g0-modules, `g0 = so(k) ⊕ sl2`, and the
//! dimension sandwich for projective covers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::atypical::atypicality;
use crate::error::{Error, Result};
use crate::growth::{poly_degree_exact, Degree};
use crate::rootsys::{rank_of, HalfInt, SuperWeight};
use crate::weyl::is_g_dominant;

/// Highest weight of a simple g0-module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct G0Weight {
    pub sl2part: HalfInt,
    pub sokpart: Vec<HalfInt>,
}

impl From<&SuperWeight> for G0Weight {
    fn from(lambda: &SuperWeight) -> Self {
        Self {
            sl2part: lambda.lambda0().clone(),
            sokpart: lambda.tail().to_vec(),
        }
    }
}

/// `lower ≤ dim P(μ) ≤ upper` with `upper = 2^(2k)·lower`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimBound {
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub lower: BigInt,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub upper: BigInt,
    /// Typical highest weight, so `P(μ) = L(μ)`.
    pub typical: bool,
}

/// `2^(dim g_1) = 2^(2k)`
pub fn odd_exterior_factor(k: u32) -> BigInt {
    BigInt::one() << (2 * k as usize)
}

pub fn is_so_dominant(k: u32, mu: &[HalfInt]) -> bool {
    let m = rank_of(k);
    if mu.len() != m || m == 0 {
        return false;
    }
    let coset_ok = mu.iter().all(|c| c.same_coset(&mu[0]));
    let ordered = mu
        .windows(2)
        .take(m.saturating_sub(2))
        .all(|w| w[0] >= w[1]);
    let tail_ok = if k.is_multiple_of(2) {
        m < 2 || mu[m - 2] >= mu[m - 1].abs()
    } else {
        (m < 2 || mu[m - 2] >= mu[m - 1]) && !mu[m - 1].is_negative()
    };
    coset_ok && ordered && tail_ok
}

/// `ρ` of so(k): `(m-1, …, 1, 0)` for `k = 2m`, `(m-1/2, …, 1/2)` for `k = 2m+1`,
/// as doubled integers.
fn so_rho_doubled(k: u32) -> Vec<BigInt> {
    let m = rank_of(k) as i64;
    (1..=m)
        .map(|i| {
            if k.is_multiple_of(2) {
                BigInt::from(2 * (m - i))
            } else {
                BigInt::from(2 * (m - i) + 1)
            }
        })
        .collect()
}

/// Weyl dimension formula for so(k), `k ≥ 3`.
pub fn weyl_dim_so(k: u32, mu: &[HalfInt]) -> Result<BigInt> {
    if !is_so_dominant(k, mu) {
        let shown: Vec<String> = mu.iter().map(ToString::to_string).collect();
        return Err(Error::NotSoDominant(format!("({})", shown.join(","))));
    }
    let rho = so_rho_doubled(k);
    let shifted: Vec<BigInt> = mu.iter().zip(&rho).map(|(c, r)| c.doubled() + r).collect();
    let m = rho.len();
    let mut numerator = BigInt::one();
    let mut denominator = BigInt::one();
    for i in 0..m {
        for j in i + 1..m {
            numerator *= (&shifted[i] - &shifted[j]) * (&shifted[i] + &shifted[j]);
            denominator *= (&rho[i] - &rho[j]) * (&rho[i] + &rho[j]);
        }
        if k % 2 == 1 {
            numerator *= &shifted[i];
            denominator *= &rho[i];
        }
    }
    let (dim, rem) = numerator.div_rem(&denominator);
    if !rem.is_zero() || !dim.is_positive() {
        return Err(Error::Internal(format!(
            "Weyl product {numerator}/{denominator} is not a positive integer"
        )));
    }
    Ok(dim)
}

/// `dim V(λ0) ⊠ L(λ1, …, λm) = (λ0 + 1)·dim L(λ1, …, λm)`.
pub fn dim_simple_g0(weight: &G0Weight, k: u32) -> Result<BigInt> {
    let sl2 = weight
        .sl2part
        .to_integer()
        .filter(|n| !n.is_negative())
        .ok_or_else(|| Error::NotG0Dominant(format!("sl2 weight {}", weight.sl2part)))?;
    Ok((sl2 + 1) * weyl_dim_so(k, &weight.sokpart)?)
}

pub fn projective_dim_bounds(lambda: &SuperWeight) -> Result<DimBound> {
    if !is_g_dominant(lambda) {
        return Err(Error::NotGDominant(lambda.to_string()));
    }
    let lower = dim_simple_g0(&G0Weight::from(lambda), lambda.k())?;
    let upper = &lower * odd_exterior_factor(lambda.k());
    let typical = !atypicality(lambda)?.is_atypical();
    Ok(DimBound {
        lower,
        upper,
        typical,
    })
}

/// `dim L(r, 0, …, 0)` of so(k).
pub fn dim_symmetric_power_weight(k: u32, r: i64) -> Result<BigInt> {
    let mut mu = vec![HalfInt::zero(); rank_of(k)];
    mu[0] = HalfInt::from_int(r);
    weyl_dim_so(k, &mu)
}

/// Degree in `r` of `dim L(r, 0, …, 0)`, by exact finite differences.
pub fn degree_in_r_of_dim(k: u32) -> Result<usize> {
    if k <= 2 {
        return Err(Error::InvalidRank(k));
    }
    let samples = 20.max(k as i64 + 4);
    let seq = (0..=samples)
        .map(|r| dim_symmetric_power_weight(k, r))
        .collect::<Result<Vec<_>>>()?;
    match poly_degree_exact(&seq, 0)? {
        Degree::Finite(d) => Ok(d),
        Degree::NegInfinity => Err(Error::Internal("dimension sequence vanished".into())),
    }
}
