//! Exact polynomial-degree detection and the complexity report.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::atypical::atypicality;
use crate::dims::degree_in_r_of_dim;
use crate::error::{Error, Result};
use crate::resolution::{summand_count_sequence, ProxyMode, TrivialResolution};
use crate::rootsys::SuperWeight;
use crate::szops::{classify_block, QuiverType};
use crate::weyl::is_g_dominant;

/// Points dropped from the head of each residue class before differencing.
pub const DEFAULT_BURN_IN: usize = 2;

/// Residue classes of `d` used for degree detection.
pub const RESIDUES: usize = 4;

/// Polynomial degree of an exactly polynomial tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    /// The tail is identically zero (degree −∞).
    NegInfinity,
    Finite(usize),
}

impl Degree {
    /// Rate of growth contributed by a sequence of this degree.
    pub fn rate(self) -> usize {
        match self {
            Degree::NegInfinity => 0,
            Degree::Finite(d) => d + 1,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Degree of `seq` after dropping `burn_in` points: one less than the least
/// order whose finite difference vanishes identically.
pub fn poly_degree_exact(seq: &[BigInt], burn_in: usize) -> Result<Degree> {
    let tail = seq.get(burn_in..).unwrap_or(&[]);
    if tail.len() < 3 {
        return Err(Error::SequenceTooShort {
            len: tail.len(),
            needed: 3,
        });
    }
    if tail.iter().all(Zero::is_zero) {
        return Ok(Degree::NegInfinity);
    }
    let mut diff: Vec<BigInt> = tail.to_vec();
    // a vanishing difference of order n needs at least two values to mean anything
    for order in 1..=tail.len() - 2 {
        diff = diff.windows(2).map(|w| &w[1] - &w[0]).collect();
        if diff.iter().all(Zero::is_zero) {
            return Ok(Degree::Finite(order - 1));
        }
    }
    Err(Error::NotPolynomial)
}

/// `classes[r]` holds `seq[d]` for `d ≡ r (mod modulus)`.
pub fn split_by_residue<T: Clone>(seq: &[T], modulus: usize) -> Vec<Vec<T>> {
    let mut classes = vec![Vec::new(); modulus];
    for (d, x) in seq.iter().enumerate() {
        classes[d % modulus].push(x.clone());
    }
    classes
}

/// Degree of each residue class mod 4.
pub fn degrees_by_residue(seq: &[BigInt], burn_in: usize) -> Result<BTreeMap<usize, Degree>> {
    split_by_residue(seq, RESIDUES)
        .iter()
        .enumerate()
        .map(|(r, class)| Ok((r, poly_degree_exact(class, burn_in)?)))
        .collect()
}

/// `max degree + 1`; 0 when every class vanishes.
pub fn rate_of_growth(degrees: &[Degree]) -> usize {
    degrees.iter().map(|d| d.rate()).max().unwrap_or(0)
}

/// `(dim X_L(λ), dim v_(g,g0)(L(λ)), dim v_(f,f0)(L(λ)))`.
pub fn geometric_dims(lambda: &SuperWeight) -> Result<(u64, u64, u64)> {
    if !is_g_dominant(lambda) {
        return Err(Error::NotGDominant(lambda.to_string()));
    }
    if atypicality(lambda)?.is_atypical() {
        Ok((lambda.k() as u64, 1, 2))
    } else {
        Ok((0, 0, 0))
    }
}

/// Least depth at which every residue class keeps enough points after burn-in
/// to certify the largest degree the proxy can have.
///
/// Summand dimensions grow like `i^(l+1)` with `l = degree_in_r_of_dim(k)`,
/// and `P_d` has about `d/2` of them, so class degrees are at most `l + 2`.
pub fn min_report_depth(k: u32) -> Result<usize> {
    let bound = degree_in_r_of_dim(k)? + 2;
    let per_class = DEFAULT_BURN_IN + bound + 3;
    Ok(RESIDUES * (per_class - 1) + RESIDUES - 1)
}

/// Least-squares slope of `log seq[d]` against `log d` over `d ≥ 1` with
/// positive entries. Diagnostic only.
pub fn loglog_slope(seq: &[BigInt]) -> Option<f64> {
    let points: Vec<(f64, f64)> = seq
        .iter()
        .enumerate()
        .skip(1)
        .filter_map(|(d, x)| {
            let v = x.to_f64()?;
            (v > 0.0).then(|| ((d as f64).ln(), v.ln()))
        })
        .collect();
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentityChecks {
    /// `c = dim X + dim v_(g,g0)`
    pub complexity_geometric: bool,
    /// `z = dim v_(f,f0)`
    pub z_complexity_geometric: bool,
}

impl IdentityChecks {
    pub fn all(&self) -> bool {
        self.complexity_geometric && self.z_complexity_geometric
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GrowthReport {
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub k: u32,
    pub weight: SuperWeight,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub depth: usize,
    pub mode: ProxyMode,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub atypicality: u8,
    pub quiver: Option<QuiverType>,
    pub degrees_by_residue: BTreeMap<usize, Degree>,
    pub count_degrees_by_residue: BTreeMap<usize, Degree>,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub rate_of_growth: usize,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub complexity: usize,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub z_complexity: usize,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub dim_associated_variety: u64,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub dim_support_variety: u64,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub dim_detecting_support: u64,
    pub loglog_slope: Option<f64>,
    pub identities_hold: IdentityChecks,
}

/// Complexity, z-complexity and the geometric dimensions of `L(λ)`.
///
/// Atypical weights run the trivial-module pipeline of the same `k`: every
/// atypical simple module has the complexity of the trivial one.
pub fn full_report(lambda: &SuperWeight, depth: usize, mode: ProxyMode) -> Result<GrowthReport> {
    let k = lambda.k();
    let (dim_x, dim_supp, dim_detecting) = geometric_dims(lambda)?;
    let needed = min_report_depth(k)?;
    if depth < needed {
        return Err(Error::InsufficientDepth { k, depth, needed });
    }
    let info = atypicality(lambda)?;
    if !info.is_atypical() {
        return Ok(GrowthReport {
            k,
            weight: lambda.clone(),
            depth,
            mode,
            atypicality: 0,
            quiver: None,
            degrees_by_residue: BTreeMap::new(),
            count_degrees_by_residue: BTreeMap::new(),
            rate_of_growth: 0,
            complexity: 0,
            z_complexity: 0,
            dim_associated_variety: dim_x,
            dim_support_variety: dim_supp,
            dim_detecting_support: dim_detecting,
            loglog_slope: None,
            identities_hold: IdentityChecks {
                complexity_geometric: true,
                z_complexity_geometric: true,
            },
        });
    }

    let quiver = classify_block(lambda)?.quiver;
    let terms = TrivialResolution::new(k)?.terms(depth)?;
    let proxy: Vec<BigInt> = terms.iter().map(|t| t.proxy(mode).clone()).collect();
    let counts: Vec<BigInt> = summand_count_sequence(k, depth)?
        .into_iter()
        .map(BigInt::from)
        .collect();

    let degrees = degrees_by_residue(&proxy, DEFAULT_BURN_IN)?;
    let count_degrees = degrees_by_residue(&counts, DEFAULT_BURN_IN)?;
    let rate = rate_of_growth(&degrees.values().copied().collect::<Vec<_>>());
    let z = rate_of_growth(&count_degrees.values().copied().collect::<Vec<_>>());

    Ok(GrowthReport {
        k,
        weight: lambda.clone(),
        depth,
        mode,
        atypicality: info.degree,
        quiver: Some(quiver),
        degrees_by_residue: degrees,
        count_degrees_by_residue: count_degrees,
        rate_of_growth: rate,
        complexity: rate,
        z_complexity: z,
        dim_associated_variety: dim_x,
        dim_support_variety: dim_supp,
        dim_detecting_support: dim_detecting,
        loglog_slope: loglog_slope(&proxy),
        identities_hold: IdentityChecks {
            complexity_geometric: rate as u64 == dim_x + dim_supp,
            z_complexity_geometric: z as u64 == dim_detecting,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_degrees() {
        assert_eq!(
            poly_degree_exact(&big(&[1, 1, 1, 1, 1]), 0).unwrap(),
            Degree::Finite(0)
        );
        assert_eq!(
            poly_degree_exact(&big(&[1, 2, 3, 4, 5, 6]), 0).unwrap(),
            Degree::Finite(1)
        );
        let sixth: Vec<BigInt> = (0..=10i64).map(|d| BigInt::from(d.pow(6))).collect();
        assert_eq!(poly_degree_exact(&sixth, 0).unwrap(), Degree::Finite(6));
        assert_eq!(
            poly_degree_exact(&big(&[0, 0, 0, 0]), 0).unwrap(),
            Degree::NegInfinity
        );
    }

    #[test]
    fn burn_in_skips_head() {
        assert_eq!(
            poly_degree_exact(&big(&[9, -4, 1, 1, 1, 1]), 2).unwrap(),
            Degree::Finite(0)
        );
        assert_eq!(
            poly_degree_exact(&big(&[1, 2, 3, 4]), 2).unwrap_err(),
            Error::SequenceTooShort { len: 2, needed: 3 }
        );
    }

    #[test]
    fn non_polynomial() {
        let powers: Vec<BigInt> = (0..12u32).map(|d| BigInt::from(2u64.pow(d))).collect();
        assert_eq!(
            poly_degree_exact(&powers, 0).unwrap_err(),
            Error::NotPolynomial
        );
    }

    #[test]
    fn rates() {
        assert_eq!(rate_of_growth(&[Degree::NegInfinity; 4]), 0);
        let counts: Vec<BigInt> = (0..40i64).map(|d| BigInt::from(d / 2 + 1)).collect();
        let degrees: Vec<Degree> = degrees_by_residue(&counts, 2)
            .unwrap()
            .into_values()
            .collect();
        assert_eq!(rate_of_growth(&degrees), 2);
    }

    #[test]
    fn residues() {
        let classes = split_by_residue(&[0, 1, 2, 3, 4, 5, 6], 4);
        assert_eq!(classes, vec![vec![0, 4], vec![1, 5], vec![2, 6], vec![3]]);
    }

    #[test]
    fn geometry() {
        assert_eq!(
            geometric_dims(&SuperWeight::zero(6).unwrap()).unwrap(),
            (6, 1, 2)
        );
        assert_eq!(
            geometric_dims(&SuperWeight::from_ints(4, &[2, 1, 0]).unwrap()).unwrap(),
            (0, 0, 0)
        );
        assert!(geometric_dims(&SuperWeight::from_ints(6, &[-1, 1, 0, 0]).unwrap()).is_err());
    }

    #[test]
    fn report_k6_and_k7() {
        let r = full_report(&SuperWeight::zero(6).unwrap(), 60, ProxyMode::Lower).unwrap();
        assert_eq!((r.complexity, r.z_complexity), (7, 2));
        assert!(r.identities_hold.all());
        let r = full_report(&SuperWeight::zero(7).unwrap(), 60, ProxyMode::Upper).unwrap();
        assert_eq!((r.complexity, r.z_complexity), (8, 2));
    }

    #[test]
    fn typical_report_is_zero() {
        let r = full_report(
            &SuperWeight::from_ints(4, &[2, 1, 0]).unwrap(),
            60,
            ProxyMode::Lower,
        )
        .unwrap();
        assert_eq!((r.complexity, r.z_complexity, r.rate_of_growth), (0, 0, 0));
        assert_eq!(
            (
                r.dim_associated_variety,
                r.dim_support_variety,
                r.dim_detecting_support
            ),
            (0, 0, 0)
        );
        assert!(r.degrees_by_residue.is_empty() && r.identities_hold.all());
    }

    #[test]
    fn depth_floor() {
        assert_eq!(min_report_depth(9).unwrap(), 55);
        assert_eq!(min_report_depth(11).unwrap(), 63);
        let err = full_report(&SuperWeight::zero(6).unwrap(), 20, ProxyMode::Lower).unwrap_err();
        assert!(matches!(
            err,
            Error::InsufficientDepth {
                k: 6,
                depth: 20,
                ..
            }
        ));
    }

    #[test]
    fn report_json_uses_strings() {
        let r = full_report(&SuperWeight::zero(4).unwrap(), 60, ProxyMode::Lower).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["complexity"], "5");
        assert_eq!(json["zComplexity"], "2");
        assert_eq!(json["degreesByResidue"]["0"], "4");
        assert_eq!(json["identitiesHold"]["complexityGeometric"], true);
        assert_eq!(json["weight"], "0|0,0");
    }

    #[test]
    fn slope_of_cubes() {
        let cubes: Vec<BigInt> = (0..200i64).map(|d| BigInt::from(d * d * d)).collect();
        assert!((loglog_slope(&cubes).unwrap() - 3.0).abs() < 1e-9);
    }
}
