//! Multiplicative genera in the even Chern-class algebra: the
//! symplectic Todd class and its square root, the one-parameter
//! deformation of the Todd class by even Chebyshev values, the
//! classical genus expansion from an arbitrary characteristic power
//! series, and the chi_y integrand.

use super::chern::{ChernMonomial, ChernPolynomial, SymFuncContext};
use super::CharClassError;
use crate::arith::{chebyshev_even_lambda, modified_bernoulli, rat_int, PowerSeries, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A polynomial in the formal deformation parameter lambda whose
/// coefficients are Chern polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSeries {
    coeffs: Vec<ChernPolynomial>,
}

impl LambdaSeries {
    fn zero(cap: usize, len: usize) -> Self {
        LambdaSeries {
            coeffs: vec![ChernPolynomial::zero(cap); len],
        }
    }

    /// Coefficient of lambda^j.
    pub fn coeff(&self, j: usize) -> ChernPolynomial {
        self.coeffs
            .get(j)
            .cloned()
            .unwrap_or_else(|| ChernPolynomial::zero(self.cap()))
    }

    pub fn lambda_degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    fn cap(&self) -> usize {
        self.coeffs.first().map_or(0, |c| c.cap())
    }

    fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = LambdaSeries::zero(self.cap(), len);
        for (j, slot) in out.coeffs.iter_mut().enumerate() {
            let mut acc = ChernPolynomial::zero(self.cap());
            if j < self.coeffs.len() {
                acc = acc.add(&self.coeffs[j]);
            }
            if j < other.coeffs.len() {
                acc = acc.add(&other.coeffs[j]);
            }
            *slot = acc;
        }
        out
    }

    fn mul(&self, other: &Self, lambda_cap: usize) -> Self {
        let mut out = LambdaSeries::zero(self.cap(), lambda_cap + 1);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > lambda_cap || b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].add(&a.mul(b));
            }
        }
        out
    }

    fn scale(&self, factor: &Rat) -> Self {
        LambdaSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(factor)).collect(),
        }
    }

    /// Exponential of an element whose lambda-constant part has no
    /// weight-zero term.
    fn exp(&self, lambda_cap: usize) -> Self {
        let cap = self.cap();
        let mut unit = LambdaSeries::zero(cap, lambda_cap + 1);
        unit.coeffs[0] = ChernPolynomial::one(cap);
        let mut out = unit.clone();
        let mut power = unit;
        let mut factorial = Rat::one();
        for j in 1..=cap {
            power = power.mul(self, lambda_cap);
            if power.coeffs.iter().all(|c| c.is_zero()) {
                break;
            }
            factorial *= rat_int(j as i64);
            out = out.add(&power.scale(&factorial.recip()));
        }
        out
    }

    /// Substitutes an exact rational value for lambda.
    pub fn eval_lambda(&self, value: &Rat) -> ChernPolynomial {
        let mut acc = ChernPolynomial::zero(self.cap());
        let mut power = Rat::one();
        for c in &self.coeffs {
            acc = acc.add(&c.scale(&power));
            power *= value;
        }
        acc
    }
}

/// A polynomial in the formal variable y with Chern-polynomial
/// coefficients; houses the chi_y integrand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YPolynomial {
    coeffs: Vec<ChernPolynomial>,
}

impl YPolynomial {
    pub fn coeff(&self, p: usize) -> ChernPolynomial {
        self.coeffs
            .get(p)
            .cloned()
            .unwrap_or_else(|| ChernPolynomial::zero(self.cap()))
    }

    pub fn y_degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    fn cap(&self) -> usize {
        self.coeffs.first().map_or(0, |c| c.cap())
    }
}

/// The Todd class of a symplectic manifold: exp of minus twice the sum
/// of modified Bernoulli numbers times even power sums of Chern roots.
pub fn todd_symplectic(ctx: &SymFuncContext) -> ChernPolynomial {
    bernoulli_exponential(ctx, &rat_int(-2))
}

/// The square root of the symplectic Todd class: the same exponential
/// with half the exponent.
pub fn sqrt_todd(ctx: &SymFuncContext) -> ChernPolynomial {
    bernoulli_exponential(ctx, &rat_int(-1))
}

fn bernoulli_exponential(ctx: &SymFuncContext, factor: &Rat) -> ChernPolynomial {
    let mut exponent = ctx.zero();
    for k in 1..=ctx.half_dim() {
        let coefficient = factor * modified_bernoulli(2 * k);
        exponent = exponent.add(
            &ctx.power_sum(2 * k)
                .expect("within truncation")
                .scale(&coefficient),
        );
    }
    exponent.exp()
}

/// The deformed Todd class as an exact polynomial in lambda: exp of
/// minus twice the sum of b_{2k} s_{2k} T_{2k}(sqrt(lambda/4 + 1)),
/// with the even Chebyshev values expanded as polynomials in lambda.
/// At lambda = 0 it equals the symplectic Todd class.
pub fn todd_deformed(ctx: &SymFuncContext) -> LambdaSeries {
    let n = ctx.half_dim();
    let mut exponent = LambdaSeries::zero(ctx.cap(), n + 1);
    for k in 1..=n {
        let s2k = ctx.power_sum(2 * k).expect("within truncation");
        let factor = rat_int(-2) * modified_bernoulli(2 * k);
        let chebyshev = chebyshev_even_lambda(k);
        for (j, c) in chebyshev.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            exponent.coeffs[j] = exponent.coeffs[j].add(&s2k.scale(&(&factor * c)));
        }
    }
    exponent.exp(n)
}

/// The classical multiplicative genus attached to a characteristic
/// power series Q with Q(0) = 1: the product of Q over the Chern
/// roots, expanded through the power sums with all odd power sums set
/// to zero. An independent route to the Todd class and its relatives.
pub fn genus_from_series(
    series: &PowerSeries,
    ctx: &SymFuncContext,
) -> Result<ChernPolynomial, CharClassError> {
    if !series.coeff(0).is_one() {
        return Err(CharClassError::ConstantTermNotOne);
    }
    if series.order() < 2 * ctx.half_dim() {
        return Err(CharClassError::WeightOverflow {
            requested: 2 * ctx.half_dim(),
            cap: series.order(),
        });
    }
    let log = series.log();
    let mut exponent = ctx.zero();
    for k in 1..=ctx.half_dim() {
        exponent = exponent.add(
            &ctx.power_sum(2 * k)
                .expect("within truncation")
                .scale(log.coeff(2 * k)),
        );
    }
    Ok(exponent.exp())
}

/// The chi_y integrand: the Todd class times the y-polynomial whose
/// p-th coefficient is the Chern character of the p-th exterior power
/// of the cotangent bundle. The exterior powers are expanded exactly
/// through the Newton recursion on the root exponentials
/// q_m = sum over roots of exp(-m x), again with odd power sums
/// zeroed.
pub fn chi_y_integrand(ctx: &SymFuncContext) -> YPolynomial {
    let n = ctx.half_dim();
    let roots = ctx.root_count();
    // q_m = roots + sum over even k of m^k p_k / k!
    let mut q = Vec::with_capacity(roots + 1);
    q.push(ctx.one().scale(&rat_int(roots as i64))); // q_0, unused below
    for m in 1..=roots {
        let mut acc = ctx.one().scale(&rat_int(roots as i64));
        let mut m_power = Rat::one();
        let mut factorial = Rat::one();
        for k in 1..=2 * n {
            m_power *= rat_int(m as i64);
            factorial *= rat_int(k as i64);
            if k % 2 == 0 {
                let coefficient = &m_power / &factorial;
                acc = acc.add(
                    &ctx.power_sum(k)
                        .expect("within truncation")
                        .scale(&coefficient),
                );
            }
        }
        q.push(acc);
    }
    // elementary symmetric functions of the root exponentials
    let mut exterior = vec![ctx.one()];
    for p in 1..=roots {
        let mut acc = ctx.zero();
        for i in 1..=p {
            let sign = if (i - 1) % 2 == 0 { 1 } else { -1 };
            acc = acc.add(&exterior[p - i].mul(&q[i]).scale(&rat_int(sign)));
        }
        exterior.push(acc.scale(&rat_int(p as i64).recip()));
    }
    let todd = todd_symplectic(ctx);
    YPolynomial {
        coeffs: exterior.into_iter().map(|e| todd.mul(&e)).collect(),
    }
}

/// Evaluates the top-weight part of a Chern polynomial against an
/// assignment of rational values to top-weight monomials. Lower
/// weights contribute nothing; a missing assignment is an error.
pub fn integrate(
    polynomial: &ChernPolynomial,
    values: &BTreeMap<ChernMonomial, Rat>,
) -> Result<Rat, CharClassError> {
    let top = polynomial.cap();
    let mut acc = Rat::zero();
    for (monomial, coeff) in polynomial.terms() {
        if monomial.weight() < top {
            continue;
        }
        let value = values
            .get(monomial)
            .ok_or_else(|| CharClassError::MissingMonomialValue(monomial.to_string()))?;
        acc += coeff * value;
    }
    Ok(acc)
}

/// The standard Todd characteristic series x / (1 - e^{-x}) truncated
/// at the given order.
pub fn todd_series(order: usize) -> PowerSeries {
    // (1 - e^{-x})/x = sum_{j>=0} (-1)^j x^j / (j+1)!
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut factorial = Rat::one();
    for j in 0..=order {
        factorial *= rat_int(j as i64 + 1);
        let sign = if j % 2 == 0 { 1 } else { -1 };
        coeffs.push(rat_int(sign) * factorial.recip());
    }
    PowerSeries::from_coeffs(coeffs).inverse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn c2_pow(k: usize) -> ChernMonomial {
        let mut m = ChernMonomial::unit();
        for _ in 0..k {
            m = m.mul(&ChernMonomial::generator(1));
        }
        m
    }

    #[test]
    fn todd_low_weights() {
        let ctx = SymFuncContext::new(4);
        let todd = todd_symplectic(&ctx);
        assert_eq!(todd.coeff(&ChernMonomial::unit()), Rat::one());
        // weight 2 (cohomological degree 4): c2 / 12
        assert_eq!(todd.coeff(&ChernMonomial::generator(1)), rat(1, 12));
        // weight 4: (3 c2^2 - c4) / 720
        assert_eq!(todd.coeff(&c2_pow(2)), rat(3, 720));
        assert_eq!(todd.coeff(&ChernMonomial::generator(2)), rat(-1, 720));
    }

    #[test]
    fn todd_agrees_with_the_classical_genus() {
        // the defining exponential against the classical series
        // product: an independent derivation path
        for n in 1..=6 {
            let ctx = SymFuncContext::new(n);
            let classical = genus_from_series(&todd_series(2 * n), &ctx).unwrap();
            assert_eq!(todd_symplectic(&ctx), classical, "n = {n}");
        }
    }

    #[test]
    fn sqrt_todd_squares_to_todd() {
        for n in 1..=6 {
            let ctx = SymFuncContext::new(n);
            let root = sqrt_todd(&ctx);
            assert_eq!(root.mul(&root), todd_symplectic(&ctx), "n = {n}");
        }
        let ctx = SymFuncContext::new(1);
        // n = 1: 1 + c2/24
        assert_eq!(
            sqrt_todd(&ctx).coeff(&ChernMonomial::generator(1)),
            rat(1, 24)
        );
    }

    #[test]
    fn deformed_todd_at_zero_is_todd() {
        for n in 1..=5 {
            let ctx = SymFuncContext::new(n);
            let deformed = todd_deformed(&ctx);
            assert_eq!(deformed.coeff(0), todd_symplectic(&ctx), "n = {n}");
            assert_eq!(deformed.eval_lambda(&Rat::zero()), todd_symplectic(&ctx));
        }
    }

    #[test]
    fn deformed_todd_weight_two_block() {
        // (1/12)(c2 + c2 lambda / 2)
        let ctx = SymFuncContext::new(3);
        let deformed = todd_deformed(&ctx);
        let c2 = ChernMonomial::generator(1);
        assert_eq!(deformed.coeff(0).coeff(&c2), rat(1, 12));
        assert_eq!(deformed.coeff(1).coeff(&c2), rat(1, 24));
        assert_eq!(deformed.coeff(2).coeff(&c2), Rat::zero());
    }

    #[test]
    fn deformed_todd_weight_four_block() {
        // (1/720)(3c2^2 - c4 + (7/2 c2^2 - 2 c4) l + (7/8 c2^2 - c4/2) l^2)
        let ctx = SymFuncContext::new(3);
        let deformed = todd_deformed(&ctx);
        let c4 = ChernMonomial::generator(2);
        assert_eq!(
            deformed.coeff(1).coeff(&c2_pow(2)),
            rat(7, 2) / rat_int(720)
        );
        assert_eq!(deformed.coeff(1).coeff(&c4), rat(-2, 720));
        assert_eq!(
            deformed.coeff(2).coeff(&c2_pow(2)),
            rat(7, 8) / rat_int(720)
        );
        assert_eq!(deformed.coeff(2).coeff(&c4), rat(-1, 2) / rat_int(720));
    }

    #[test]
    fn deformed_todd_agrees_with_the_direct_mu_route() {
        // The lambda-polynomial route composes even Chebyshev values;
        // the direct route evaluates the exponential at
        // mu^{2k} + mu^{-2k} scalars. Eight distinct evaluation points
        // pin every lambda coefficient up to degree six.
        use crate::arith::modified_bernoulli;
        let samples = [
            rat_int(2),
            rat_int(3),
            rat(1, 2),
            rat(5, 3),
            rat(7, 2),
            rat_int(4),
            rat_int(9),
            rat(11, 4),
        ];
        for n in 1..=6usize {
            let ctx = SymFuncContext::new(n);
            let deformed = todd_deformed(&ctx);
            for mu in &samples {
                let mu_inv = mu.recip();
                let lambda = mu * mu + &mu_inv * &mu_inv - rat_int(2);
                let route_a = deformed.eval_lambda(&lambda);
                let mut exponent = ctx.zero();
                for k in 1..=n {
                    let mut mu_pow = Rat::one();
                    let mut mu_inv_pow = Rat::one();
                    for _ in 0..2 * k {
                        mu_pow *= mu;
                        mu_inv_pow *= &mu_inv;
                    }
                    let factor = -modified_bernoulli(2 * k) * (mu_pow + mu_inv_pow);
                    exponent = exponent.add(&ctx.power_sum(2 * k).unwrap().scale(&factor));
                }
                assert_eq!(route_a, exponent.exp(), "n = {n}, mu = {mu}");
            }
        }
    }

    #[test]
    fn genus_of_unit_series_is_one() {
        let ctx = SymFuncContext::new(3);
        let one = PowerSeries::one(6);
        assert_eq!(genus_from_series(&one, &ctx).unwrap(), ctx.one());
    }

    #[test]
    fn genus_of_one_plus_x_is_total_chern_class() {
        // Q = 1 + x gives the product of (1 + x_i): the even elementary
        // symmetric functions, i.e. 1 + c2 + c4 + ...
        for n in 1..=4 {
            let ctx = SymFuncContext::new(n);
            let mut coeffs = vec![Rat::one(), Rat::one()];
            coeffs.resize(2 * n + 1, Rat::zero());
            let series = PowerSeries::from_coeffs(coeffs);
            let genus = genus_from_series(&series, &ctx).unwrap();
            let mut expected = ctx.one();
            for i in 1..=n {
                expected = expected.add(&ChernPolynomial::generator(n, i));
            }
            assert_eq!(genus, expected, "n = {n}");
        }
    }

    #[test]
    fn genus_rejects_bad_constant_terms() {
        let ctx = SymFuncContext::new(2);
        let two = PowerSeries::from_coeffs(vec![rat_int(2); 5]);
        assert_eq!(
            genus_from_series(&two, &ctx),
            Err(CharClassError::ConstantTermNotOne)
        );
    }

    #[test]
    fn chi_y_coefficient_zero_is_todd() {
        for n in 1..=3 {
            let ctx = SymFuncContext::new(n);
            let integrand = chi_y_integrand(&ctx);
            assert_eq!(integrand.coeff(0), todd_symplectic(&ctx), "n = {n}");
            assert_eq!(integrand.y_degree(), 2 * n);
        }
    }

    #[test]
    fn chi_y_is_palindromic() {
        for n in 1..=3 {
            let ctx = SymFuncContext::new(n);
            let integrand = chi_y_integrand(&ctx);
            for p in 0..=2 * n {
                assert_eq!(
                    integrand.coeff(p),
                    integrand.coeff(2 * n - p),
                    "n = {n}, p = {p}"
                );
            }
        }
    }

    #[test]
    fn chi_y_on_a_k3_surface() {
        // substituting the K3 Chern number c2 = 24 must give the known
        // signed Hodge sum 2 - 20y + 2y^2
        let ctx = SymFuncContext::new(1);
        let integrand = chi_y_integrand(&ctx);
        let values: BTreeMap<ChernMonomial, Rat> =
            [(ChernMonomial::generator(1), rat_int(24))].into();
        let chi: Vec<Rat> = (0..=2)
            .map(|p| integrate(&integrand.coeff(p), &values).unwrap())
            .collect();
        assert_eq!(chi, vec![rat_int(2), rat_int(-20), rat_int(2)]);
    }

    #[test]
    fn integrate_examples() {
        let ctx = SymFuncContext::new(1);
        let values: BTreeMap<ChernMonomial, Rat> =
            [(ChernMonomial::generator(1), rat_int(24))].into();
        assert_eq!(
            integrate(&todd_symplectic(&ctx), &values).unwrap(),
            rat_int(2)
        );
        assert_eq!(integrate(&ctx.one(), &values).unwrap(), Rat::zero());
        assert_eq!(integrate(&sqrt_todd(&ctx), &values).unwrap(), Rat::one());
    }

    #[test]
    fn integrate_reports_missing_monomials() {
        let ctx = SymFuncContext::new(2);
        let values = BTreeMap::new();
        assert!(matches!(
            integrate(&todd_symplectic(&ctx), &values),
            Err(CharClassError::MissingMonomialValue(_))
        ));
    }

    #[test]
    fn chi_y_matches_the_log_route() {
        // Independent derivation: expand log of the full root factor
        // x (1 + y e^{-x}) / ((1 - e^{-x})(1 + y)) as a bivariate
        // series (y truncated), exponentiate in the Chern ring, and
        // restore (1 + y)^{2n}. Must agree with the Newton-recursion
        // route for small n.
        for n in 1..=3usize {
            let ctx = SymFuncContext::new(n);
            let ycap = 2 * n;
            let xcap = 2 * n;
            // bivariate coefficients [x power][y power]
            let zero_row = vec![Rat::zero(); ycap + 1];
            // u(x, y) = (y/(1+y)) (e^{-x} - 1), x-order >= 1
            let mut geom = vec![Rat::zero(); ycap + 1]; // y/(1+y) = y - y^2 + ...
            for (j, g) in geom.iter_mut().enumerate().skip(1) {
                *g = rat_int(if j % 2 == 1 { 1 } else { -1 });
            }
            let mut u = vec![zero_row.clone(); xcap + 1];
            let mut factorial = Rat::one();
            for k in 1..=xcap {
                factorial *= rat_int(k as i64);
                let coeff = rat_int(if k % 2 == 0 { 1 } else { -1 }) * factorial.recip();
                for (j, g) in geom.iter().enumerate() {
                    u[k][j] = &coeff * g;
                }
            }
            // log(1+u) = u - u^2/2 + u^3/3 - ...
            let mul = |a: &Vec<Vec<Rat>>, b: &Vec<Vec<Rat>>| -> Vec<Vec<Rat>> {
                let mut out = vec![vec![Rat::zero(); ycap + 1]; xcap + 1];
                for i in 0..=xcap {
                    for j in 0..=xcap - i {
                        for p in 0..=ycap {
                            if a[i][p].is_zero() {
                                continue;
                            }
                            for q in 0..=ycap - p {
                                if !b[j][q].is_zero() {
                                    let prod = &a[i][p] * &b[j][q];
                                    out[i + j][p + q] += prod;
                                }
                            }
                        }
                    }
                }
                out
            };
            let mut log_factor = vec![zero_row.clone(); xcap + 1];
            let mut u_power = u.clone();
            for m in 1..=xcap {
                let sign = rat_int(if m % 2 == 1 { 1 } else { -1 }) / rat_int(m as i64);
                for i in 0..=xcap {
                    for j in 0..=ycap {
                        let term = &u_power[i][j] * &sign;
                        log_factor[i][j] += term;
                    }
                }
                u_power = mul(&u_power, &u);
            }
            // add log(x/(1-e^{-x})), a pure x-series
            let todd_log = todd_series(xcap).log();
            for k in 1..=xcap {
                log_factor[k][0] += todd_log.coeff(k);
            }
            // exponentiate: coefficients are y-polynomials; work per
            // y-slice as Chern polynomials
            let mut exponent: Vec<ChernPolynomial> = vec![ctx.zero(); ycap + 1];
            for k in (2..=xcap).step_by(2) {
                let pk = ctx.power_sum(k).unwrap();
                for j in 0..=ycap {
                    if !log_factor[k][j].is_zero() {
                        exponent[j] = exponent[j].add(&pk.scale(&log_factor[k][j]));
                    }
                }
            }
            // exp of a y-polynomial with nilpotent coefficients
            let mut result: Vec<ChernPolynomial> = vec![ctx.zero(); ycap + 1];
            result[0] = ctx.one();
            let mut power: Vec<ChernPolynomial> = result.clone();
            let mut factorial = Rat::one();
            for m in 1..=n {
                // power = power * exponent (y-truncated)
                let mut next: Vec<ChernPolynomial> = vec![ctx.zero(); ycap + 1];
                for i in 0..=ycap {
                    for j in 0..=ycap - i {
                        if !power[i].is_zero() && !exponent[j].is_zero() {
                            next[i + j] = next[i + j].add(&power[i].mul(&exponent[j]));
                        }
                    }
                }
                power = next;
                factorial *= rat_int(m as i64);
                for (slot, p) in result.iter_mut().zip(&power) {
                    *slot = slot.add(&p.scale(&factorial.recip()));
                }
            }
            // multiply by (1+y)^{2n}
            let mut final_coeffs: Vec<ChernPolynomial> = vec![ctx.zero(); ycap + 1];
            for j in 0..=ycap {
                for p in 0..=j {
                    let binom = crate::arith::binomial(2 * n as u64, (j - p) as u64);
                    final_coeffs[j] = final_coeffs[j].add(&result[p].scale(&binom));
                }
            }
            let integrand = chi_y_integrand(&ctx);
            for (p, expected) in final_coeffs.iter().enumerate() {
                assert_eq!(&integrand.coeff(p), expected, "n = {n}, y^{p}");
            }
        }
    }
}
