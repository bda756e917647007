use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use osp_core::atypical::{atypicality, RootSign};
use osp_core::dims::{odd_exterior_factor, projective_dim_bounds, weyl_dim_so};
use osp_core::growth::{poly_degree_exact, Degree};
use osp_core::rootsys::{form, rank_of, rho_shift, HalfInt, SuperWeight};
use osp_core::szops::{a_plus_minus, check, classify_block, hat, QuiverType};
use osp_core::verify::freudenthal;
use osp_core::weyl::{dominant_conjugate, dot, is_g0_dominant, is_g_dominant, SignedPermutation};

fn rank() -> impl Strategy<Value = u32> {
    3u32..=9
}

/// Any weight of osp(k|2) with doubled coordinates in a small box.
fn any_weight(k: u32) -> impl Strategy<Value = SuperWeight> {
    prop::collection::vec(-12i64..=12, rank_of(k) + 1)
        .prop_map(move |d| SuperWeight::from_doubled(k, &d).unwrap())
}

/// Integral weights with every `λi` in one coset (half-integers only for odd `k`).
fn integral_weight(k: u32) -> impl Strategy<Value = SuperWeight> {
    let m = rank_of(k);
    (
        -8i64..=8,
        prop::collection::vec(-8i64..=8, m),
        any::<bool>(),
    )
        .prop_map(move |(l0, tail, half)| {
            let shift = i64::from(half && k % 2 == 1);
            let mut d = vec![2 * l0];
            d.extend(tail.iter().map(|x| 2 * x + shift));
            SuperWeight::from_doubled(k, &d).unwrap()
        })
}

fn element(k: u32) -> impl Strategy<Value = SignedPermutation> {
    let m = rank_of(k);
    (
        Just((0..m).collect::<Vec<_>>()).prop_shuffle(),
        prop::collection::vec(any::<bool>(), m),
    )
        .prop_map(move |(perm, flips)| {
            let mut signs: Vec<i8> = flips.iter().map(|&f| if f { -1 } else { 1 }).collect();
            if k.is_multiple_of(2) && signs.iter().filter(|&&s| s == -1).count() % 2 == 1 {
                signs[m - 1] = -signs[m - 1];
            }
            SignedPermutation::new(k, perm, signs).unwrap()
        })
}

fn with_k<S: Strategy>(f: impl Fn(u32) -> S + Clone) -> impl Strategy<Value = (u32, S::Value)> {
    rank().prop_flat_map(move |k| (Just(k), f(k)))
}

/// g-dominant atypical weights with a D∞ block.
fn d_infinity_weight() -> impl Strategy<Value = SuperWeight> {
    (rank(), 0i64..=8, prop::collection::vec(0i64..=5, 9)).prop_filter_map(
        "not a D∞ atypical weight",
        |(k, l0, raw)| {
            let m = rank_of(k);
            let mut tail: Vec<i64> = raw[..m].to_vec();
            tail.sort_unstable_by(|a, b| b.cmp(a));
            let mut c = vec![l0];
            c.extend(tail);
            let lambda = SuperWeight::from_ints(k, &c).ok()?;
            if !is_g_dominant(&lambda) || !atypicality(&lambda).ok()?.is_atypical() {
                return None;
            }
            (classify_block(&lambda).ok()?.quiver == QuiverType::DInfinity).then_some(lambda)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn form_is_symmetric_and_bilinear(
        (x, y, z) in rank().prop_flat_map(|k| (any_weight(k), any_weight(k), any_weight(k))),
        a in -5i64..=5,
    ) {
        prop_assert_eq!(form(&x, &y).unwrap(), form(&y, &x).unwrap());
        let lhs = form(&x.scale(a).add(&y).unwrap(), &z).unwrap();
        let rhs = form(&x, &z).unwrap() * BigRational::from_integer(a.into()) + form(&y, &z).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dot_action_is_a_group_action(
        (k, (lambda, w1, w2)) in with_k(|k| (any_weight(k), element(k), element(k))),
    ) {
        let composed = w1.compose(&w2).unwrap();
        prop_assert_eq!(dot(&w1, &dot(&w2, &lambda).unwrap()).unwrap(), dot(&composed, &lambda).unwrap());
        prop_assert_eq!(dot(&w1.inverse(), &dot(&w1, &lambda).unwrap()).unwrap(), lambda.clone());
        prop_assert_eq!(dot(&SignedPermutation::identity(k), &lambda).unwrap(), lambda.clone());
        let moved = dot(&w1, &lambda).unwrap();
        prop_assert_eq!(moved.lambda0(), lambda.lambda0());
    }

    #[test]
    fn dominant_conjugate_is_idempotent(
        (k, (lambda, w)) in with_k(|k| (integral_weight(k), element(k))),
    ) {
        let Ok((dominant, v)) = dominant_conjugate(&lambda) else { return Ok(()) };
        prop_assert!(is_g0_dominant(&dominant));
        prop_assert_eq!(dominant.lambda0(), lambda.lambda0());
        prop_assert_eq!(&dot(&v, &lambda).unwrap(), &dominant);
        if k % 2 == 0 {
            prop_assert_eq!(v.sign_change_count() % 2, 0);
        }
        let (again, identity) = dominant_conjugate(&dominant).unwrap();
        prop_assert_eq!(&again, &dominant);
        prop_assert!(identity.is_identity());
        // orbit constancy
        prop_assert_eq!(dominant_conjugate(&dot(&w, &lambda).unwrap()).unwrap().0, dominant);
    }

    #[test]
    fn atypical_root_matches_coordinates((_k, lambda) in with_k(integral_weight)) {
        let Ok(info) = atypicality(&lambda) else {
            prop_assert!(!is_g0_dominant(&lambda));
            return Ok(());
        };
        let shifted = rho_shift(&lambda);
        let c = shifted.coords();
        let hits = (1..=lambda.m()).filter(|&l| c[l].abs() == c[0].abs()).count();
        prop_assert_eq!(info.is_atypical(), hits > 0);
        if let Some(root) = info.root {
            // (λ̃, δ ± εl) = -λ̃0 ± λ̃l
            let expected = match root.sign {
                RootSign::Plus => &c[0] - &c[root.index],
                RootSign::Minus => &c[0] + &c[root.index],
            };
            prop_assert!(expected.is_zero());
            prop_assert!(form(&shifted, &root.weight(lambda.k()).unwrap()).unwrap() == BigRational::from_integer(0.into()));
            prop_assert_eq!(info.sset.len() + 1, lambda.m());
        }
    }

    #[test]
    fn orbit_is_injective_and_inverts(lambda in d_infinity_weight()) {
        let block = classify_block(&lambda).unwrap();
        let mut seen = std::collections::HashSet::new();
        for i in -10..=50 {
            let w = block.lambda(i).unwrap();
            prop_assert!(is_g0_dominant(&w) && atypicality(&w).unwrap().is_atypical());
            prop_assert!(seen.insert(w), "λ^({}) repeats", i);
        }
        for i in 0..=20 {
            let w = block.lambda(i).unwrap();
            prop_assert_eq!(&hat(&w).unwrap(), &block.lambda(i + 1).unwrap());
            prop_assert_eq!(&check(&block.lambda(i + 1).unwrap()).unwrap(), &w);
            prop_assert_eq!(&check(&block.lambda(-i).unwrap()).unwrap(), &block.lambda(-i - 1).unwrap());
        }
    }

    #[test]
    fn parse_print_round_trip((k, lambda) in with_k(any_weight)) {
        let text = lambda.to_string();
        prop_assert_eq!(SuperWeight::parse(k, &text).unwrap(), lambda);
    }

    #[test]
    fn degree_survives_scaling_and_perturbation(
        coeffs in prop::collection::vec(-20i64..=20, 1..7),
        lead in 1i64..=9,
        scale in 1i64..=50,
        low in prop::collection::vec(-30i64..=30, 0..7),
    ) {
        let degree = coeffs.len();
        let eval = |c: &[i64], x: i64| c.iter().rev().fold(BigInt::from(0), |acc, &a| acc * x + a);
        let mut top = coeffs.clone();
        top.push(lead);
        let low: Vec<i64> = low.into_iter().take(degree).collect();
        let seq: Vec<BigInt> = (0..degree as i64 + 8).map(|x| eval(&top, x)).collect();
        let moved: Vec<BigInt> = (0..degree as i64 + 8).map(|x| eval(&top, x) * scale + eval(&low, x)).collect();
        prop_assert_eq!(poly_degree_exact(&seq, 2).unwrap(), Degree::Finite(degree));
        prop_assert_eq!(poly_degree_exact(&moved, 2).unwrap(), Degree::Finite(degree));
    }

    #[test]
    fn sandwich_factor_is_constant(lambda in d_infinity_weight()) {
        let b = projective_dim_bounds(&lambda).unwrap();
        prop_assert!(b.lower >= BigInt::from(1));
        prop_assert_eq!(b.upper, b.lower * odd_exterior_factor(lambda.k()));
    }

    #[test]
    fn weyl_matches_freudenthal(
        (k, raw) in (3u32..=7).prop_flat_map(|k| (Just(k), prop::collection::vec(0i64..=2, rank_of(k)))),
        half in any::<bool>(),
    ) {
        let mut tail = raw;
        tail.sort_unstable_by(|a, b| b.cmp(a));
        let doubled: Vec<i64> = tail.iter().map(|x| 2 * x + i64::from(half)).collect();
        let mu: Vec<HalfInt> = doubled.iter().map(|&d| HalfInt::from_doubled(d)).collect();
        let weyl = weyl_dim_so(k, &mu).unwrap();
        prop_assert_eq!(weyl, BigInt::from(freudenthal::dimension(k, &doubled).unwrap()));
    }
}

#[test]
fn hat_then_check_returns_trivial() {
    for k in 4..=9 {
        let zero = SuperWeight::zero(k).unwrap();
        assert_eq!(check(&hat(&zero).unwrap()).unwrap(), zero, "k = {k}");
        assert_eq!(hat(&check(&zero).unwrap()).unwrap(), zero, "k = {k}");
    }
}

/// Stepping up from `λ^(i)` uses `a₊ = 1` and stepping down from `λ^(-i)` uses
/// `a₋ = 1` for `i ≥ 1`; at `λ^(1)` the downward step is the long one.
#[test]
fn translation_steps_along_trivial_orbit() {
    for k in 4..=9 {
        let m = rank_of(k) as u64;
        let long = if k % 2 == 0 { 2 * m - 2 } else { 2 * m - 1 };
        let block = classify_block(&SuperWeight::zero(k).unwrap()).unwrap();
        assert_eq!(
            a_plus_minus(&block.lambda(0).unwrap()).unwrap(),
            (long, 1),
            "k = {k}"
        );
        assert_eq!(
            a_plus_minus(&block.lambda(1).unwrap()).unwrap(),
            (1, long),
            "k = {k}"
        );
        for i in 1..=30 {
            assert_eq!(
                a_plus_minus(&block.lambda(i).unwrap()).unwrap().0,
                1,
                "k = {k}, i = {i}"
            );
            assert_eq!(
                a_plus_minus(&block.lambda(-i).unwrap()).unwrap(),
                (1, 1),
                "k = {k}, i = -{i}"
            );
        }
        for i in 2..=30 {
            assert_eq!(
                a_plus_minus(&block.lambda(i).unwrap()).unwrap(),
                (1, 1),
                "k = {k}, i = {i}"
            );
        }
    }
}
