//! Bernoulli numbers, modified Bernoulli numbers and Chebyshev
//! polynomials, all computed exactly from their defining generating
//! functions or recurrences and memoized.

use super::{rat, rat_int, Polynomial1, PowerSeries, Rat};
use num_traits::{One, Zero};
use std::sync::Mutex;
use std::sync::OnceLock;

fn bernoulli_cache() -> &'static Mutex<Vec<Rat>> {
    static CACHE: OnceLock<Mutex<Vec<Rat>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

fn chebyshev_cache() -> &'static Mutex<Vec<Polynomial1>> {
    static CACHE: OnceLock<Mutex<Vec<Polynomial1>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

/// The Bernoulli number B_k, extracted from the exact series expansion
/// of t/(e^t - 1). B_0 = 1, B_1 = -1/2, and B_k = 0 for odd k > 1.
pub fn bernoulli(k: usize) -> Rat {
    let mut cache = bernoulli_cache().lock().unwrap();
    if cache.len() <= k {
        // (e^t - 1)/t has coefficient 1/(j+1)! at t^j; invert and read
        // off k! times the coefficients.
        let order = (k + 8).max(2 * cache.len());
        let mut denom = Vec::with_capacity(order + 1);
        let mut factorial = Rat::one();
        for j in 0..=order {
            factorial *= rat_int(j as i64 + 1);
            denom.push(factorial.recip());
        }
        let gen = PowerSeries::from_coeffs(denom).inverse();
        let mut kfac = Rat::one();
        *cache = (0..=order)
            .map(|j| {
                if j > 0 {
                    kfac *= rat_int(j as i64);
                }
                gen.coeff(j) * &kfac
            })
            .collect();
    }
    cache[k].clone()
}

/// The modified Bernoulli number b_k for even k, defined by
/// sum b_{2k} x^{2k} = (1/2) ln(sinh(x/2) / (x/2)). b_0 = 0.
/// Panics for odd k, where the coefficient is not defined.
pub fn modified_bernoulli(k: usize) -> Rat {
    assert!(
        k.is_multiple_of(2),
        "modified Bernoulli numbers have even index"
    );
    if k == 0 {
        return Rat::zero();
    }
    // sinh(x/2)/(x/2) = sum_j (x/2)^{2j} / (2j+1)!
    let order = k;
    let mut coeffs = vec![Rat::zero(); order + 1];
    let mut factorial = Rat::one(); // (2j+1)!
    let mut power = Rat::one(); // (1/2)^{2j}
    let quarter = rat(1, 4);
    for j in 0.. {
        if 2 * j > order {
            break;
        }
        if j > 0 {
            factorial *= rat_int(2 * j as i64) * rat_int(2 * j as i64 + 1);
            power *= &quarter;
        }
        coeffs[2 * j] = &power * factorial.recip();
    }
    let series = PowerSeries::from_coeffs(coeffs).log().scale(&rat(1, 2));
    series.coeff(k).clone()
}

/// Closed form b_{2k} = B_{2k} / (4k (2k)!), valid for k >= 1. Kept as
/// an independent route from the series definition.
pub fn modified_bernoulli_closed_form(k: usize) -> Rat {
    assert!(k >= 1);
    let mut fac = Rat::one();
    for j in 2..=2 * k {
        fac *= rat_int(j as i64);
    }
    bernoulli(2 * k) / (rat_int(4 * k as i64) * fac)
}

/// The Chebyshev polynomial T_n in the variable `x`, from T_0 = 1,
/// T_1 = x, T_{n+1} = 2x T_n - T_{n-1}.
pub fn chebyshev(n: usize) -> Polynomial1 {
    let mut cache = chebyshev_cache().lock().unwrap();
    if cache.is_empty() {
        cache.push(Polynomial1::one("x"));
        cache.push(Polynomial1::var_poly("x"));
    }
    while cache.len() <= n {
        let m = cache.len();
        let two_x = Polynomial1::monomial("x", rat_int(2), 1);
        let next = two_x.mul(&cache[m - 1]).sub(&cache[m - 2]);
        cache.push(next);
    }
    cache[n].clone()
}

/// T_{2k} evaluated at sqrt(lambda/4 + 1), as an exact polynomial in
/// `lambda`. Well-defined because T_{2k} is even, so only integer
/// powers of lambda/4 + 1 occur.
pub fn chebyshev_even_lambda(k: usize) -> Polynomial1 {
    let even = chebyshev(2 * k).even_decimate("u");
    let inner = Polynomial1::from_coeffs("lambda", vec![Rat::one(), rat(1, 4)]);
    even.compose(&inner)
}

/// Exact binomial coefficient with the usual conventions
/// (zero for k > n).
pub fn binomial(n: u64, k: u64) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= rat_int((n - i) as i64);
        acc /= rat_int(i as i64 + 1);
    }
    acc
}

/// The generalized binomial coefficient binom(p + n, n) where `p` is a
/// polynomial argument: the product (p+1)(p+2)...(p+n) / n!.
pub fn falling_binomial_poly(p: &Polynomial1, n: usize) -> Polynomial1 {
    let var = p.var();
    let mut acc = Polynomial1::one(var);
    let mut n_factorial = Rat::one();
    for i in 1..=n {
        acc = acc.mul(&p.add(&Polynomial1::constant(var, rat_int(i as i64))));
        n_factorial *= rat_int(i as i64);
    }
    acc.scale(&n_factorial.recip())
}
