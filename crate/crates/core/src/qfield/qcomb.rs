use super::upoly;
use super::{LaurentPoly, QRatFn};
use crate::exactalg::Rational;

/// `[t]_q = (q^t - 1)/(q - 1)` for any integer `t`.
pub fn q_bracket(t: i64) -> QRatFn {
    let num = &LaurentPoly::q_pow(t) - &LaurentPoly::one();
    let den = LaurentPoly::from_i64s(&[-1, 1]);
    QRatFn::new(num, den).expect("q - 1 is nonzero")
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`
pub fn q_factorial(n: u32) -> LaurentPoly {
    (1..=n as i64).fold(LaurentPoly::one(), |acc, k| &acc * &bracket_poly(k))
}

fn bracket_poly(k: i64) -> LaurentPoly {
    LaurentPoly::from_coeffs(0, vec![Rational::from_integer(1.into()); k as usize])
}

/// Gaussian binomial `[n choose k]_q`; zero when `k > n` or either is negative.
///
/// Computed from the product `prod_{i=1..k} (1 - q^(n-k+i)) / (1 - q^i)`
/// with exact polynomial division.
pub fn q_binomial(n: i64, k: i64) -> LaurentPoly {
    if k < 0 || n < 0 || k > n {
        return LaurentPoly::zero();
    }
    let k = k.min(n - k);
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for i in 1..=k {
        num = &num * &(&LaurentPoly::one() - &LaurentPoly::q_pow(n - k + i));
        den = &den * &(&LaurentPoly::one() - &LaurentPoly::q_pow(i));
    }
    let q = upoly::exact_div(num.coeffs_raw(), den.coeffs_raw())
        .expect("Gaussian binomial is a polynomial");
    LaurentPoly::from_coeffs(0, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int_rat;

    #[test]
    fn bracket_examples() {
        assert!(q_bracket(0).is_zero());
        assert_eq!(q_bracket(3), QRatFn::from_laurent(LaurentPoly::from_i64s(&[1, 1, 1])));
        // [-2]_q = -q^-2 (1 + q)
        let expected = QRatFn::from_laurent(LaurentPoly::from_coeffs(
            -2,
            vec![int_rat(-1), int_rat(-1)],
        ));
        assert_eq!(q_bracket(-2), expected);
        // [-t]_{1/q} = -q [t]_q
        for t in -4..=4 {
            assert_eq!(
                q_bracket(-t).substitute_q_inverse(),
                -(&QRatFn::q_pow(1) * &q_bracket(t))
            );
        }
    }

    #[test]
    fn bracket_at_one() {
        for t in -20..=20 {
            assert_eq!(q_bracket(t).evaluate_at_q1().unwrap(), int_rat(t));
        }
    }

    /// Partitions fitting in a k x (n-k) box, counted by size.
    fn box_partitions(rows: usize, max_part: usize) -> LaurentPoly {
        fn go(rows: usize, max_part: usize, size: i64, acc: &mut Vec<(i64, Rational)>) {
            acc.push((size, int_rat(1)));
            if rows == 0 {
                return;
            }
            for part in 1..=max_part {
                go(rows - 1, part, size + part as i64, acc);
            }
        }
        let mut acc = Vec::new();
        go(rows, max_part, 0, &mut acc);
        LaurentPoly::from_terms(acc)
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(q_binomial(4, 2), LaurentPoly::from_i64s(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(4, 2), box_partitions(2, 2));
        assert!(q_binomial(7, 0).is_one());
        assert!(q_binomial(3, 4).is_zero());
        for n in 0..=8usize {
            for k in 0..=n {
                assert_eq!(q_binomial(n as i64, k as i64), box_partitions(k, n - k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn binomial_symmetry_and_pascal() {
        for n in 1..=10i64 {
            for k in 0..=n {
                assert_eq!(q_binomial(n, k), q_binomial(n, n - k));
                let pascal = &q_binomial(n - 1, k - 1) + &q_binomial(n - 1, k).shift(k);
                assert_eq!(q_binomial(n, k), pascal, "n={n} k={k}");
                assert!(q_binomial(n, k).terms().all(|(_, c)| c.is_integer() && *c > int_rat(0)));
            }
        }
    }

    #[test]
    fn factorial() {
        assert_eq!(q_factorial(3), LaurentPoly::from_i64s(&[1, 2, 2, 1]));
        assert!(q_factorial(0).is_one());
    }
}
