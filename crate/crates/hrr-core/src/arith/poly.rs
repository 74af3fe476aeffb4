//! Univariate polynomials over the rationals with a named formal
//! variable (`x`, `lambda`, `y`, ...).

use super::{format_rat, Rat};
use num_traits::{One, Zero};
use std::fmt;

/// Dense univariate polynomial. The coefficient vector never has a
/// trailing zero, so `coeffs.len()` determines the degree; the zero
/// polynomial has an empty vector and degree `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial1 {
    var: String,
    coeffs: Vec<Rat>,
}

impl Polynomial1 {
    pub fn zero(var: &str) -> Self {
        Polynomial1 {
            var: var.to_string(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(var: &str, c: Rat) -> Self {
        let mut p = Self::zero(var);
        if !c.is_zero() {
            p.coeffs.push(c);
        }
        p
    }

    pub fn one(var: &str) -> Self {
        Self::constant(var, Rat::one())
    }

    /// The monomial `c * var^k`.
    pub fn monomial(var: &str, c: Rat, k: usize) -> Self {
        let mut p = Self::zero(var);
        if !c.is_zero() {
            p.coeffs = vec![Rat::zero(); k + 1];
            p.coeffs[k] = c;
        }
        p
    }

    /// The variable itself.
    pub fn var_poly(var: &str) -> Self {
        Self::monomial(var, Rat::one(), 1)
    }

    pub fn from_coeffs(var: &str, coeffs: Vec<Rat>) -> Self {
        let mut p = Polynomial1 {
            var: var.to_string(),
            coeffs,
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    /// Degree as `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.var, other.var);
        let mut coeffs = vec![Rat::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        Self::from_coeffs(&self.var, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        Self::from_coeffs(&self.var, self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.var, other.var);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.var);
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(&self.var, coeffs)
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitutes another polynomial for the variable; the result is
    /// expressed in `inner`'s variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero(&inner.var);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner);
            acc = acc.add(&Self::constant(&inner.var, c.clone()));
        }
        acc
    }

    /// True when only even powers occur.
    pub fn is_even(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| k % 2 == 0 || c.is_zero())
    }

    /// For an even polynomial p, returns q with p(x) = q(x^2), with q
    /// living in the variable `new_var`.
    pub fn even_decimate(&self, new_var: &str) -> Self {
        assert!(self.is_even(), "only even polynomials can be decimated");
        let coeffs = self.coeffs.iter().step_by(2).cloned().collect();
        Self::from_coeffs(new_var, coeffs)
    }
}

impl fmt::Display for Polynomial1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", format_rat(c))?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{}*", format_rat(c))?;
                    }
                    write!(f, "{}", self.var)?;
                    if k > 1 {
                        write!(f, "^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    #[test]
    fn degree_sentinel_for_zero() {
        assert_eq!(Polynomial1::zero("x").degree(), None);
        assert_eq!(Polynomial1::one("x").degree(), Some(0));
        let p = Polynomial1::from_coeffs("x", vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert_eq!(p.degree(), Some(0));
    }

    #[test]
    fn eval_and_compose_agree() {
        let p = Polynomial1::from_coeffs("x", vec![rat_int(1), rat(-1, 2), rat_int(3)]);
        let q = Polynomial1::from_coeffs("x", vec![rat_int(0), rat_int(2), rat_int(1)]);
        let composed = p.compose(&q);
        for v in [rat_int(0), rat_int(2), rat(-3, 5)] {
            assert_eq!(composed.eval(&v), p.eval(&q.eval(&v)));
        }
    }

    #[test]
    fn display_is_readable() {
        let p = Polynomial1::from_coeffs(
            "x",
            vec![rat_int(1), rat_int(0), rat(-8, 1), rat_int(0), rat_int(8)],
        );
        assert_eq!(p.to_string(), "8*x^4 + -8*x^2 + 1");
    }
}
