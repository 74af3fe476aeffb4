//! Truncated power series over the rationals.
//!
//! A [`PowerSeries`] stores coefficients up to an explicit truncation
//! order; all arithmetic respects that order exactly. Truncation is
//! never silent: every constructor and operation states the order it
//! works to.

use super::{rat_int, Rat};
use num_traits::{One, Zero};

/// A power series truncated at an explicit order: coefficients for
/// x^0 .. x^order are stored and meaningful, everything above is
/// unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    /// Series from explicit coefficients; `coeffs[i]` is the
    /// coefficient of x^i and `coeffs.len() - 1` is the truncation
    /// order. Panics on an empty coefficient list.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "series needs at least the constant term"
        );
        PowerSeries { coeffs }
    }

    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    /// The constant-one series truncated at `order`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rat::one();
        s
    }

    /// The series `x` truncated at `order` (requires `order >= 1`).
    pub fn x(order: usize) -> Self {
        assert!(order >= 1);
        let mut s = Self::zero(order);
        s.coeffs[1] = Rat::one();
        s
    }

    /// Truncation order.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^k; zero above the truncation order is *not*
    /// assumed, so asking for it panics.
    pub fn coeff(&self, k: usize) -> &Rat {
        assert!(k <= self.order(), "coefficient beyond truncation order");
        &self.coeffs[k]
    }

    /// All stored coefficients in ascending order of exponent.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Re-truncates to a (not larger) order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] + &other.coeffs[k])
            .collect();
        PowerSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] - &other.coeffs[k])
            .collect();
        PowerSeries { coeffs }
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        PowerSeries { coeffs }
    }

    /// Multiplicative inverse; requires a non-zero constant term.
    pub fn inverse(&self) -> Self {
        assert!(
            !self.coeffs[0].is_zero(),
            "inverse requires a unit constant term"
        );
        let order = self.order();
        let mut coeffs = vec![Rat::zero(); order + 1];
        let c0 = self.coeffs[0].recip();
        coeffs[0] = c0.clone();
        for k in 1..=order {
            let mut acc = Rat::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &coeffs[k - i];
                }
            }
            coeffs[k] = -acc * &c0;
        }
        PowerSeries { coeffs }
    }

    /// Exact division `self / other`; `other` needs a unit constant
    /// term.
    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inverse())
    }

    /// Exponential of a series with zero constant term.
    pub fn exp(&self) -> Self {
        assert!(
            self.coeffs[0].is_zero(),
            "exp requires a zero constant term"
        );
        let order = self.order();
        // e' = f' e gives k*e_k = sum_{i=1..k} i*f_i*e_{k-i}.
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[0] = Rat::one();
        for k in 1..=order {
            let mut acc = Rat::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += rat_int(i as i64) * &self.coeffs[i] * &coeffs[k - i];
                }
            }
            coeffs[k] = acc / rat_int(k as i64);
        }
        PowerSeries { coeffs }
    }

    /// Logarithm of a series with constant term one.
    pub fn log(&self) -> Self {
        assert!(
            self.coeffs[0].is_one(),
            "log requires a constant term of one"
        );
        let order = self.order();
        // l' = f'/f gives k*f_0*l_k = k*f_k - sum_{i=1..k-1} i*l_i*f_{k-i}.
        let mut coeffs = vec![Rat::zero(); order + 1];
        for k in 1..=order {
            let mut acc = rat_int(k as i64) * &self.coeffs[k];
            for i in 1..k {
                if !coeffs[i].is_zero() {
                    acc -= rat_int(i as i64) * &coeffs[i] * &self.coeffs[k - i];
                }
            }
            coeffs[k] = acc / rat_int(k as i64);
        }
        PowerSeries { coeffs }
    }

    /// Composition `self(other)`; `other` must have zero constant term.
    pub fn compose(&self, other: &Self) -> Self {
        assert!(
            other.coeffs[0].is_zero(),
            "composition requires the inner series to vanish at zero"
        );
        let order = self.order().min(other.order());
        let mut acc = PowerSeries::zero(order);
        // Horner evaluation in the truncated ring.
        for c in self.coeffs.iter().take(order + 1).rev() {
            acc = acc.mul(&other.truncate(order));
            acc.coeffs[0] += c;
        }
        acc
    }

    /// Substitutes `x -> c*x` exactly.
    pub fn scale_variable(&self, c: &Rat) -> Self {
        let mut coeffs = self.coeffs.clone();
        let mut power = Rat::one();
        for coeff in coeffs.iter_mut() {
            *coeff *= &power;
            power *= c;
        }
        PowerSeries { coeffs }
    }

    /// Keeps only even-exponent coefficients (used for even generating
    /// functions such as the modified Bernoulli one).
    pub fn even_part(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (k, c) in coeffs.iter_mut().enumerate() {
            if k % 2 == 1 {
                *c = Rat::zero();
            }
        }
        PowerSeries { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    fn geometric(order: usize) -> PowerSeries {
        // 1/(1-x)
        PowerSeries::from_coeffs(vec![Rat::one(); order + 1])
    }

    #[test]
    fn inverse_of_geometric_is_one_minus_x() {
        let inv = geometric(8).inverse();
        assert_eq!(inv.coeff(0), &rat(1, 1));
        assert_eq!(inv.coeff(1), &rat(-1, 1));
        for k in 2..=8 {
            assert!(inv.coeff(k).is_zero());
        }
    }

    #[test]
    fn exp_log_round_trip() {
        // Deterministic pseudo-random coefficients with constant term 1.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            rat((state % 19) as i64 - 9, ((state >> 8) % 7 + 1) as i64)
        };
        for _ in 0..10 {
            let mut coeffs = vec![Rat::one()];
            for _ in 0..12 {
                coeffs.push(next());
            }
            let f = PowerSeries::from_coeffs(coeffs);
            assert_eq!(f.log().exp(), f);
        }
    }

    #[test]
    fn log_exp_round_trip() {
        let mut coeffs = vec![Rat::zero()];
        for k in 1..=10 {
            coeffs.push(rat(k as i64, k as i64 + 2));
        }
        let f = PowerSeries::from_coeffs(coeffs);
        assert_eq!(f.exp().log(), f);
    }

    #[test]
    fn compose_substitutes() {
        // (1+x)^2 composed with x^2 is 1 + 2x^2 + x^4.
        let f = PowerSeries::from_coeffs(vec![
            rat(1, 1),
            rat(2, 1),
            rat(1, 1),
            Rat::zero(),
            Rat::zero(),
        ]);
        let mut g = PowerSeries::zero(4);
        g = g.add(&PowerSeries::from_coeffs(vec![
            Rat::zero(),
            Rat::zero(),
            Rat::one(),
            Rat::zero(),
            Rat::zero(),
        ]));
        let h = f.compose(&g);
        assert_eq!(h.coeff(0), &rat(1, 1));
        assert_eq!(h.coeff(2), &rat(2, 1));
        assert_eq!(h.coeff(4), &rat(1, 1));
        assert!(h.coeff(1).is_zero() && h.coeff(3).is_zero());
    }
}
