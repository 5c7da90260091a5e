//! Cross-checks of the streamed coefficient recurrences against independent
//! closed forms: the direct Pochhammer formula for `POCH3`, and the Cauchy
//! squares of the underlying hypergeometric columns for every family.

use num_rational::BigRational;
use num_traits::One;
use rsseries::{coefficients, CoefficientRecipe, Family, GroupLabel};

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Rising factorial `(a)_k`.
fn poch(a: &BigRational, k: usize) -> BigRational {
    let mut p = BigRational::one();
    for i in 0..k {
        p *= a + int(i as i64);
    }
    p
}

fn factorial(k: usize) -> BigRational {
    poch(&BigRational::one(), k)
}

/// `A_j = sum_k c_k c_{j-k}` for the column `c`.
fn cauchy_square(column: &[BigRational], j: usize) -> BigRational {
    (0..=j).map(|k| &column[k] * &column[j - k]).sum()
}

#[test]
fn poch3_matches_direct_pochhammer_formula() {
    let recipe = CoefficientRecipe::new(Family::Poch3, None).unwrap();
    let coeffs = coefficients(&recipe, 31);
    let half = frac(1, 2);
    for (j, a) in coeffs.iter().enumerate() {
        let ratio = poch(&half, j) / factorial(j);
        let direct = ratio.clone() * ratio.clone() * ratio;
        assert_eq!(a, &direct, "POCH3 mismatch at j = {j}");
    }
}

#[test]
fn weight2_families_are_squares_of_their_2f1_columns() {
    // The recipe series sum A_j X^j equals the square of the group's 2F1
    // column, so A must be the Cauchy square of c_k = ((s)_k / k!)^2 with
    // s = 1/4, 1/3, 1/2 respectively.
    let cases = [
        (Family::Poch3, frac(1, 4)),
        (Family::T3Sum, frac(1, 3)),
        (Family::TInf, frac(1, 2)),
    ];
    for (family, s) in cases {
        let recipe = CoefficientRecipe::new(family, None).unwrap();
        let coeffs = coefficients(&recipe, 21);
        let column: Vec<BigRational> = (0..21)
            .map(|k| {
                let r = poch(&s, k) / factorial(k);
                r.clone() * r
            })
            .collect();
        for (j, a) in coeffs.iter().enumerate() {
            assert_eq!(
                a,
                &cauchy_square(&column, j),
                "{recipe}: Cauchy-square mismatch at j = {j}"
            );
        }
    }
}

#[test]
fn weight4_families_are_squares_of_their_3f2_columns() {
    for m in [3i64, 4, 6] {
        let recipe = CoefficientRecipe::new(Family::GenM, Some(m as u32)).unwrap();
        let coeffs = coefficients(&recipe, 21);
        let half = frac(1, 2);
        let lo = frac(1, 2) - frac(1, m);
        let hi = frac(1, 2) + frac(1, m);
        let column: Vec<BigRational> = (0..21)
            .map(|k| {
                let f = factorial(k);
                poch(&half, k) * poch(&lo, k) * poch(&hi, k)
                    / (f.clone() * f.clone() * f)
            })
            .collect();
        for (j, a) in coeffs.iter().enumerate() {
            assert_eq!(
                a,
                &cauchy_square(&column, j),
                "GENM {m}: Cauchy-square mismatch at j = {j}"
            );
        }
    }
}

#[test]
fn group_to_family_assignment() {
    let expect = [
        (GroupLabel::G02, "POCH3"),
        (GroupLabel::G03, "T3SUM"),
        (GroupLabel::G04, "TINF"),
        (GroupLabel::Psl2z, "GENM 3"),
        (GroupLabel::G02Plus, "GENM 4"),
        (GroupLabel::G03Plus, "GENM 6"),
    ];
    for (group, name) in expect {
        assert_eq!(CoefficientRecipe::for_group(group).to_string(), name);
    }
}

#[test]
fn coefficients_decay_geometrically_in_the_tail() {
    // Term ratios A_{j+1}/A_j approach the reciprocal of the convergence
    // radius; well before that they must drop below it + margin, or the
    // summation tail bound would be vacuous.
    for group in GroupLabel::ALL {
        let recipe = CoefficientRecipe::for_group(group);
        let coeffs = coefficients(&recipe, 40);
        for j in 20..39 {
            let ratio = &coeffs[j + 1] / &coeffs[j];
            assert!(
                ratio < BigRational::from_integer(110.into()) / BigRational::from_integer(100.into()),
                "{recipe}: ratio at j = {j} is {ratio}"
            );
        }
    }
}
