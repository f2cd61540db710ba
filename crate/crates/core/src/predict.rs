//! Closed-form predictions for cokernels, Hilbert function differences and
//! ideal dimensions. Every binomial coefficient goes through [`ext_binom`],
//! which is zero whenever the top is smaller than the bottom.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::{HilbertKind, HilbertTable};
use crate::poly::binom;

/// `C(n, k)` for `n >= k >= 0`, and 0 for every other `n`.
pub fn ext_binom(n: i64, k: i64) -> Result<i64> {
    if k < 0 {
        return Err(Error::InvalidArgument(format!("binomial with negative bottom {k}")));
    }
    if n < k {
        return Ok(0);
    }
    let mut acc: i128 = 1;
    for i in 0..k as i128 {
        acc = acc * (n as i128 - i) / (i + 1);
    }
    Ok(acc as i64)
}

fn c2(n: i64) -> i64 {
    ext_binom(n, 2).expect("bottom is positive")
}

/// Generic cokernel of `x l : A_{d+t-1} -> A_{d+t}` for an `a x b` grid,
/// available when `a(t+1) + b > d + t`.
pub fn coker_formula_geproci(a: i64, b: i64, d: i64, t: i64) -> Option<i64> {
    (a * (t + 1) + b > d + t).then(|| (0..=t + 1).map(|i| c2(d + t + 2 - a * (t + 1) - (b - a) * i)).sum())
}

/// `d = (a-1) q + r` with `0 <= r < a-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SquareGridParams {
    pub a: i64,
    pub d: i64,
    pub q: i64,
    pub r: i64,
}

impl SquareGridParams {
    pub fn new(a: i64, d: i64) -> Result<Self> {
        if a < 2 {
            return Err(Error::InvalidGrid(format!("a = {a} is below 2")));
        }
        if d < a - 1 {
            return Err(Error::InvalidDegree(format!("d = {d} is below a - 1 = {}", a - 1)));
        }
        Ok(SquareGridParams { a, d, q: d / (a - 1), r: d % (a - 1) })
    }
}

/// `d = (a-1) q' + r'` with `1 <= r' <= a-1`, and `d = (b-1) q + r` with
/// `0 <= r < b-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NonSquareParams {
    pub a: i64,
    pub b: i64,
    pub d: i64,
    pub q_prime: i64,
    pub r_prime: i64,
    pub q: i64,
    pub r: i64,
}

impl NonSquareParams {
    pub fn new(a: i64, b: i64, d: i64) -> Result<Self> {
        if a < 2 || b <= a {
            return Err(Error::InvalidGrid(format!("need b > a >= 2, got a = {a}, b = {b}")));
        }
        if d < a {
            return Err(Error::InvalidDegree(format!("d = {d} is below a = {a}")));
        }
        let q_prime = (d - 1) / (a - 1);
        Ok(NonSquareParams {
            a,
            b,
            d,
            q_prime,
            r_prime: d - (a - 1) * q_prime,
            q: d / (b - 1),
            r: d % (b - 1),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SquarePrediction {
    /// Generic cokernel of `A_{d+q-2} -> A_{d+q-1}`.
    pub coker: i64,
    /// `Delta h_A(d+q-1)`.
    pub delta_critical: i64,
    /// `Delta h_A(d+q-2)`, given only when `r = 0`.
    pub delta_below: Option<i64>,
}

pub fn square_coker_and_delta(p: SquareGridParams) -> SquarePrediction {
    let SquareGridParams { a, q, r, .. } = p;
    SquarePrediction {
        coker: (q + 1) * c2(r + 1),
        delta_critical: (2 * a * q * r + a * q + r * r + r - a * a * q) / 2,
        delta_below: (r == 0).then(|| q * c2(a)),
    }
}

pub fn nonsquare_coker(p: NonSquareParams) -> i64 {
    (0..=p.q_prime).map(|i| c2(p.r_prime + 1 - (p.b - p.a) * i)).sum()
}

/// WLP for a square `a x a` grid and power `d`: `d <= a-1` or `(a-1) | d`.
pub fn square_grid_wlp_verdict(a: i64, d: i64) -> bool {
    d <= a - 1 || d % (a - 1) == 0
}

/// `dim [Lambda_{X,d}]_t = ab C(t-d+3, 3)` in the window `d <= t <= d+q-1`,
/// where `d = (b-1) q + r`. `None` outside the window or when `d < b-1`.
pub fn low_degree_ideal_dim(a: i64, b: i64, d: i64, t: i64) -> Option<i64> {
    if b < 2 || d < b - 1 {
        return None;
    }
    let q = d / (b - 1);
    (d <= t && t <= d + q - 1).then(|| a * b * ext_binom(t - d + 3, 3).expect("bottom is positive"))
}

/// Hilbert function of a compressed Gorenstein quotient of `k[x1..x4]` with
/// socle degree `2t`: `h_s = min(C(s+3,3), C(2t-s+3,3))`.
pub fn compressed_gorenstein_hf(t: usize) -> HilbertTable {
    let dims = (0..=2 * t).map(|s| binom(s + 3, 3).min(binom(2 * t - s + 3, 3))).collect();
    HilbertTable::new(HilbertKind::Quotient, dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ext_binom_clamps() {
        assert_eq!(ext_binom(4, 2).unwrap(), 6);
        assert_eq!(ext_binom(-1, 2).unwrap(), 0);
        assert_eq!(ext_binom(1, 2).unwrap(), 0);
        assert_eq!(ext_binom(0, 0).unwrap(), 1);
        assert!(ext_binom(3, -1).is_err());
    }

    #[test]
    fn geproci_cokernel_values() {
        assert_eq!(coker_formula_geproci(3, 3, 3, 0), Some(2));
        assert_eq!(coker_formula_geproci(3, 3, 4, 1), Some(0));
        assert_eq!(coker_formula_geproci(3, 6, 5, 1), Some(1));
        assert_eq!(coker_formula_geproci(3, 3, 10, 0), None);
    }

    #[test]
    fn square_predictions() {
        let p = square_coker_and_delta(SquareGridParams::new(3, 3).unwrap());
        assert_eq!((p.coker, p.delta_critical, p.delta_below), (2, 1, None));
        let p = square_coker_and_delta(SquareGridParams::new(3, 4).unwrap());
        assert_eq!((p.coker, p.delta_critical, p.delta_below), (0, -6, Some(6)));
        let p = square_coker_and_delta(SquareGridParams::new(4, 6).unwrap());
        assert_eq!((p.coker, p.delta_critical, p.delta_below), (0, -12, Some(12)));
        assert!(SquareGridParams::new(4, 2).is_err());
    }

    #[test]
    fn nonsquare_predictions() {
        let p = NonSquareParams::new(3, 6, 5).unwrap();
        assert_eq!((p.q_prime, p.r_prime, p.q, p.r), (2, 1, 1, 0));
        assert_eq!(nonsquare_coker(p), 1);
        let p = NonSquareParams::new(2, 3, 2).unwrap();
        assert_eq!((p.q_prime, p.r_prime), (1, 1));
        assert_eq!(nonsquare_coker(p), 1);
        assert!(NonSquareParams::new(3, 3, 4).is_err());
        assert!(NonSquareParams::new(3, 5, 2).is_err());
    }

    #[test]
    fn nonsquare_wide_grids_keep_only_first_term() {
        for a in 2..6 {
            for b in a + 1..10 {
                for d in a..4 * a {
                    let p = NonSquareParams::new(a, b, d).unwrap();
                    assert!(p.q <= p.q_prime);
                    assert!(1 <= p.r_prime && p.r_prime <= a - 1);
                    if b - a >= p.r_prime + 1 {
                        assert_eq!(nonsquare_coker(p), c2(p.r_prime + 1));
                    }
                }
            }
        }
    }

    #[test]
    fn theorem_a_verdicts() {
        assert!(square_grid_wlp_verdict(3, 4));
        assert!(!square_grid_wlp_verdict(3, 3));
        assert!(square_grid_wlp_verdict(5, 4));
    }

    #[test]
    fn low_degree_window() {
        assert_eq!(low_degree_ideal_dim(3, 3, 4, 5), Some(36));
        assert_eq!(low_degree_ideal_dim(3, 3, 4, 4), Some(9));
        assert_eq!(low_degree_ideal_dim(3, 6, 5, 5), Some(18));
        assert_eq!(low_degree_ideal_dim(3, 6, 5, 6), None);
        assert_eq!(low_degree_ideal_dim(3, 6, 3, 3), None);
    }

    #[test]
    fn compressed_tables() {
        assert_eq!(compressed_gorenstein_hf(1).dims, vec![1, 4, 1]);
        assert_eq!(compressed_gorenstein_hf(2).dims, vec![1, 4, 10, 4, 1]);
        assert_eq!(compressed_gorenstein_hf(3).dims, vec![1, 4, 10, 20, 10, 4, 1]);
    }

    #[test]
    fn square_coker_is_the_geproci_sum_at_q_minus_one() {
        for a in 3..=6 {
            for d in a - 1..=3 * (a - 1) {
                let p = SquareGridParams::new(a, d).unwrap();
                assert_eq!(coker_formula_geproci(a, a, d, p.q - 1), Some(square_coker_and_delta(p).coker), "a={a} d={d}");
            }
        }
    }

    #[test]
    fn critical_difference_is_below_the_cokernel() {
        for a in 3..=8 {
            for d in a - 1..=4 * (a - 1) {
                let p = SquareGridParams::new(a, d).unwrap();
                let s = square_coker_and_delta(p);
                if p.r > 0 {
                    assert!(s.delta_critical < s.coker, "a={a} d={d}");
                } else {
                    assert_eq!(s.delta_critical, -p.q * c2(a));
                    assert!(s.delta_critical < 0);
                    assert_eq!(s.coker, 0);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn ext_binom_pascal(n in -20i64..40, k in 1i64..10) {
            // Pascal's rule holds once the top is non-negative
            prop_assume!(n >= 0);
            prop_assert_eq!(
                ext_binom(n + 1, k).unwrap(),
                ext_binom(n, k).unwrap() + ext_binom(n, k - 1).unwrap()
            );
        }

        #[test]
        fn ext_binom_vanishes_below(n in -50i64..0, k in 1i64..10) {
            prop_assert_eq!(ext_binom(n, k).unwrap(), 0);
        }
    }
}
