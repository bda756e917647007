//! Root data of osp(k|2), k > 2, and exact weight arithmetic.
//!
//! Weights are written `(λ0 | λ1, …, λm)` in the basis `{δ, ε1, …, εm}` with
//! `m = floor(k/2)`. The bilinear form has `(δ,δ) = -1`, `(δ,εi) = 0` and
//! `(εi,εj) = δij`.

mod halfint;
mod weight;

pub use halfint::HalfInt;
pub use weight::{parse_coords, rank_of, SuperWeight, WeightParseError};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub weight: SuperWeight,
    pub parity: Parity,
    pub isotropic: bool,
    pub label: String,
}

impl Root {
    fn new(weight: SuperWeight, parity: Parity, label: String) -> Self {
        let isotropic = form_unchecked(&weight, &weight) == BigRational::from_integer(0.into());
        Self {
            weight,
            parity,
            isotropic,
            label,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RootSystemData {
    pub k: u32,
    pub m: usize,
    /// 1 for k = 2m, 1/2 for k = 2m+1.
    pub s: HalfInt,
    pub simple_roots: Vec<Root>,
    pub pos_even: Vec<Root>,
    pub pos_odd: Vec<Root>,
    pub rho: SuperWeight,
    pub rho0: SuperWeight,
    pub rho1: SuperWeight,
}

/// `s = 1` for `k = 2m`, `s = 1/2` for `k = 2m+1`.
pub fn s_of(k: u32) -> HalfInt {
    if k.is_multiple_of(2) {
        HalfInt::from_int(1)
    } else {
        HalfInt::half()
    }
}

/// `ρ = (s-m | m-s, …, 1-s)`
pub fn rho(k: u32) -> Result<SuperWeight> {
    let m = rank_of(k);
    let s = s_of(k);
    let mut coords = Vec::with_capacity(m + 1);
    coords.push(&s - &HalfInt::from_int(m as i64));
    for i in 1..=m {
        coords.push(HalfInt::from_int((m + 1 - i) as i64) - &s);
    }
    SuperWeight::new(k, coords)
}

fn half_sum(k: u32, roots: &[Root]) -> Result<SuperWeight> {
    let mut total = SuperWeight::zero(k)?;
    for r in roots {
        total = total.add(&r.weight)?;
    }
    let coords = total
        .coords()
        .iter()
        .map(|c| {
            c.to_integer()
                .map(HalfInt::from_doubled)
                .ok_or_else(|| Error::Internal("root sum with half-integer coordinate".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    SuperWeight::new(k, coords)
}

pub fn build_root_system(k: u32) -> Result<RootSystemData> {
    if k <= 2 {
        return Err(Error::InvalidRank(k));
    }
    let m = rank_of(k);
    let odd_k = k % 2 == 1;
    let delta = SuperWeight::delta(k)?;
    let eps = |i: usize| SuperWeight::epsilon(k, i);

    let mut simple_roots = vec![Root::new(delta.sub(&eps(1)?)?, Parity::Odd, "δ-ε1".into())];
    for i in 1..m {
        simple_roots.push(Root::new(
            eps(i)?.sub(&eps(i + 1)?)?,
            Parity::Even,
            format!("ε{i}-ε{}", i + 1),
        ));
    }
    if odd_k {
        simple_roots.push(Root::new(eps(m)?, Parity::Even, format!("ε{m}")));
    } else {
        simple_roots.push(Root::new(
            eps(m - 1)?.add(&eps(m)?)?,
            Parity::Even,
            format!("ε{}+ε{m}", m - 1),
        ));
    }

    let mut pos_even = vec![Root::new(delta.scale(2), Parity::Even, "2δ".into())];
    for i in 1..=m {
        for j in i + 1..=m {
            pos_even.push(Root::new(
                eps(i)?.sub(&eps(j)?)?,
                Parity::Even,
                format!("ε{i}-ε{j}"),
            ));
            pos_even.push(Root::new(
                eps(i)?.add(&eps(j)?)?,
                Parity::Even,
                format!("ε{i}+ε{j}"),
            ));
        }
        if odd_k {
            pos_even.push(Root::new(eps(i)?, Parity::Even, format!("ε{i}")));
        }
    }

    let mut pos_odd = Vec::with_capacity(k as usize);
    for i in 1..=m {
        pos_odd.push(Root::new(
            delta.add(&eps(i)?)?,
            Parity::Odd,
            format!("δ+ε{i}"),
        ));
        pos_odd.push(Root::new(
            delta.sub(&eps(i)?)?,
            Parity::Odd,
            format!("δ-ε{i}"),
        ));
    }
    if odd_k {
        pos_odd.push(Root::new(delta.clone(), Parity::Odd, "δ".into()));
    }

    let rho0 = half_sum(k, &pos_even)?;
    let rho1 = half_sum(k, &pos_odd)?;
    let rho = rho0.sub(&rho1)?;
    if rho != self::rho(k)? {
        return Err(Error::Internal(format!(
            "ρ0 - ρ1 = {rho} disagrees with the closed form"
        )));
    }
    if pos_odd.len() != k as usize {
        return Err(Error::Internal(format!(
            "{} positive odd roots, expected {k}",
            pos_odd.len()
        )));
    }

    Ok(RootSystemData {
        k,
        m,
        s: s_of(k),
        simple_roots,
        pos_even,
        pos_odd,
        rho,
        rho0,
        rho1,
    })
}

impl RootSystemData {
    /// `dim g_1 = 2k`
    pub fn dim_odd_part(&self) -> usize {
        2 * self.pos_odd.len()
    }
}

fn form_unchecked(x: &SuperWeight, y: &SuperWeight) -> BigRational {
    let xs = x.coords();
    let ys = y.coords();
    let mut quadrupled: BigInt = -(xs[0].doubled() * ys[0].doubled());
    for (a, b) in xs[1..].iter().zip(&ys[1..]) {
        quadrupled += a.doubled() * b.doubled();
    }
    BigRational::new(quadrupled, BigInt::from(4))
}

/// The invariant form `-x0·y0 + Σ xi·yi`.
pub fn form(x: &SuperWeight, y: &SuperWeight) -> Result<BigRational> {
    x.same_algebra(y)?;
    Ok(form_unchecked(x, y))
}

/// `λ̃ = λ + ρ`
pub fn rho_shift(lambda: &SuperWeight) -> SuperWeight {
    let rho = rho(lambda.k()).expect("k validated at construction");
    lambda.add(&rho).expect("same algebra")
}

/// `λ = λ̃ - ρ`
pub fn rho_unshift(shifted: &SuperWeight) -> SuperWeight {
    let rho = rho(shifted.k()).expect("k validated at construction");
    shifted.sub(&rho).expect("same algebra")
}

/// `λ0 ∈ ℤ` and each `λi` lies in `ℤ` or in `s + ℤ`, coordinate by coordinate.
pub fn is_integral(lambda: &SuperWeight) -> bool {
    let s = s_of(lambda.k());
    lambda.lambda0().is_integer()
        && lambda
            .tail()
            .iter()
            .all(|c| c.is_integer() || c.same_coset(&s))
}

/// As [`is_integral`], but all `λi` must share one coset.
pub fn is_integral_uniform(lambda: &SuperWeight) -> bool {
    let tail = lambda.tail();
    is_integral(lambda) && tail.iter().all(|c| c.same_coset(&tail[0]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn rho_examples() {
        let r6 = build_root_system(6).unwrap();
        assert_eq!(r6.rho, SuperWeight::from_ints(6, &[-2, 2, 1, 0]).unwrap());
        assert_eq!(r6.rho1, SuperWeight::from_ints(6, &[3, 0, 0, 0]).unwrap());
        assert_eq!(r6.pos_odd.len(), 6);

        let r5 = build_root_system(5).unwrap();
        assert_eq!(r5.rho, SuperWeight::from_doubled(5, &[-3, 3, 1]).unwrap());
        assert_eq!(r5.s, HalfInt::half());
        assert_eq!(r5.pos_odd.len(), 5);
    }

    #[test]
    fn simple_roots_k4() {
        let r4 = build_root_system(4).unwrap();
        assert_eq!(r4.rho, SuperWeight::from_ints(4, &[-1, 1, 0]).unwrap());
        let simple: Vec<_> = r4.simple_roots.iter().map(|r| r.weight.clone()).collect();
        assert_eq!(
            simple,
            vec![
                SuperWeight::from_ints(4, &[1, -1, 0]).unwrap(),
                SuperWeight::from_ints(4, &[0, 1, -1]).unwrap(),
                SuperWeight::from_ints(4, &[0, 1, 1]).unwrap(),
            ]
        );
    }

    #[test]
    fn rejects_small_k() {
        assert_eq!(build_root_system(2).unwrap_err(), Error::InvalidRank(2));
        assert!(build_root_system(0).is_err());
    }

    #[test]
    fn form_examples() {
        let d = SuperWeight::delta(6).unwrap();
        assert_eq!(form(&d, &d).unwrap(), q(-1));
        let odd = SuperWeight::from_ints(6, &[1, 1, 0, 0]).unwrap();
        assert_eq!(form(&odd, &odd).unwrap(), q(0));
        let x = SuperWeight::from_ints(6, &[-2, 2, 1, 0]).unwrap();
        let y = SuperWeight::from_ints(6, &[1, 0, 0, 1]).unwrap();
        assert_eq!(form(&x, &y).unwrap(), q(2));
        assert!(form(&x, &SuperWeight::zero(7).unwrap()).is_err());
    }

    #[test]
    fn rho_shift_examples() {
        let z6 = SuperWeight::zero(6).unwrap();
        assert_eq!(
            rho_shift(&z6),
            SuperWeight::from_ints(6, &[-2, 2, 1, 0]).unwrap()
        );
        let z5 = SuperWeight::zero(5).unwrap();
        assert_eq!(
            rho_shift(&z5),
            SuperWeight::from_doubled(5, &[-3, 3, 1]).unwrap()
        );
        assert_eq!(rho_unshift(&rho_shift(&z5)), z5);
    }

    #[test]
    fn integrality_predicates() {
        let mixed = SuperWeight::from_doubled(5, &[0, 1, 2]).unwrap();
        assert!(is_integral(&mixed));
        assert!(!is_integral_uniform(&mixed));
        let half_delta = SuperWeight::from_doubled(5, &[1, 1, 1]).unwrap();
        assert!(!is_integral(&half_delta));
        let even_half = SuperWeight::from_doubled(6, &[0, 1, 1, 1]).unwrap();
        assert!(!is_integral(&even_half));
    }
}
