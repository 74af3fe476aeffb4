//! The truncated polynomial algebra on even Chern classes, and the
//! Newton-identity bridge between power sums of Chern roots and Chern
//! classes.

use super::CharClassError;
use crate::arith::{format_rat, rat_int, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A monomial in the generators c_2, c_4, ...: `exponents[i]` is the
/// exponent of c_{2(i+1)}. No trailing zeros are stored. The weight of
/// c_{2i} is i (half its cohomological degree), so the weight of the
/// monomial is the sum of (i+1) * exponents[i].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChernMonomial {
    exponents: Vec<u8>,
}

impl ChernMonomial {
    pub fn unit() -> Self {
        ChernMonomial {
            exponents: Vec::new(),
        }
    }

    /// The generator c_{2i} (weight i).
    pub fn generator(i: usize) -> Self {
        assert!(i >= 1, "generators are c_2, c_4, ...");
        let mut exponents = vec![0; i];
        exponents[i - 1] = 1;
        ChernMonomial { exponents }
    }

    pub fn from_exponents(exponents: Vec<u8>) -> Self {
        let mut m = ChernMonomial { exponents };
        m.trim();
        m
    }

    fn trim(&mut self) {
        while self.exponents.last() == Some(&0) {
            self.exponents.pop();
        }
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exponents
    }

    pub fn weight(&self) -> usize {
        self.exponents
            .iter()
            .enumerate()
            .map(|(i, &e)| (i + 1) * e as usize)
            .sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let len = self.exponents.len().max(other.exponents.len());
        let mut exponents = vec![0u8; len];
        for (i, e) in exponents.iter_mut().enumerate() {
            *e = self.exponents.get(i).copied().unwrap_or(0)
                + other.exponents.get(i).copied().unwrap_or(0);
        }
        ChernMonomial::from_exponents(exponents)
    }

    /// All monomials of exactly the given weight (the partitions of
    /// `weight` into parts at most `max_part`).
    pub fn of_weight(weight: usize, max_part: usize) -> Vec<ChernMonomial> {
        fn rec(
            remaining: usize,
            max_part: usize,
            exponents: &mut Vec<u8>,
            out: &mut Vec<ChernMonomial>,
        ) {
            if remaining == 0 {
                out.push(ChernMonomial::from_exponents(exponents.clone()));
                return;
            }
            for part in (1..=max_part.min(remaining)).rev() {
                exponents[part - 1] += 1;
                rec(remaining - part, part, exponents, out);
                exponents[part - 1] -= 1;
            }
        }
        let mut out = Vec::new();
        if max_part > 0 {
            rec(weight, max_part, &mut vec![0u8; max_part], &mut out);
        } else if weight == 0 {
            out.push(ChernMonomial::unit());
        }
        out.sort();
        out
    }
}

impl fmt::Display for ChernMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "c{}", 2 * (i + 1))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial in the even Chern classes, truncated above weight
/// `cap` (the half-dimension of the ambient manifold).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernPolynomial {
    cap: usize,
    terms: BTreeMap<ChernMonomial, Rat>,
}

impl ChernPolynomial {
    pub fn zero(cap: usize) -> Self {
        ChernPolynomial {
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(cap: usize) -> Self {
        Self::constant(cap, Rat::one())
    }

    pub fn constant(cap: usize, c: Rat) -> Self {
        let mut p = Self::zero(cap);
        if !c.is_zero() {
            p.terms.insert(ChernMonomial::unit(), c);
        }
        p
    }

    /// The generator c_{2i} as a polynomial (zero if its weight
    /// exceeds the cap).
    pub fn generator(cap: usize, i: usize) -> Self {
        let mut p = Self::zero(cap);
        if i <= cap {
            p.terms.insert(ChernMonomial::generator(i), Rat::one());
        }
        p
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ChernMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &ChernMonomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, m: ChernMonomial, c: Rat) {
        if c.is_zero() || m.weight() > self.cap {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.cap, other.cap);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        if factor.is_zero() {
            return Self::zero(self.cap);
        }
        ChernPolynomial {
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.cap, other.cap);
        let mut out = Self::zero(self.cap);
        for (ma, ca) in &self.terms {
            let wa = ma.weight();
            for (mb, cb) in &other.terms {
                if wa + mb.weight() > self.cap {
                    continue;
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Exponential of an element with no constant term; finite because
    /// positive-weight elements are nilpotent in the truncation.
    pub fn exp(&self) -> Self {
        assert!(
            self.coeff(&ChernMonomial::unit()).is_zero(),
            "exp needs a vanishing constant term"
        );
        let mut out = Self::one(self.cap);
        let mut power = Self::one(self.cap);
        let mut factorial = Rat::one();
        for j in 1..=self.cap {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            factorial *= rat_int(j as i64);
            out = out.add(&power.scale(&factorial.recip()));
        }
        out
    }

    /// The homogeneous part of the given weight.
    pub fn weight_part(&self, weight: usize) -> Self {
        ChernPolynomial {
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() == weight)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The largest weight present.
    pub fn max_weight(&self) -> usize {
        self.terms.keys().map(|m| m.weight()).max().unwrap_or(0)
    }

    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| {
                if m.is_unit() {
                    format_rat(c)
                } else if c.is_one() {
                    m.to_string()
                } else {
                    format!("{} {}", format_rat(c), m)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Conversion tables between power sums of Chern roots and even Chern
/// classes on a manifold of complex dimension 2n, with all odd
/// elementary symmetric functions (odd Chern classes) set to zero.
/// The normalization is fixed by ch = sum of s_k / k! with s_k the
/// k-th power sum; getting a factorial wrong here silently corrupts
/// every genus downstream, so the round-trip identity is tested.
pub struct SymFuncContext {
    n: usize,
    power_sums: Vec<ChernPolynomial>,
}

impl SymFuncContext {
    /// Context for complex dimension 2n (truncation weight n).
    pub fn new(n: usize) -> Self {
        let cap = n;
        // Newton: p_k = sum_{i=1..k-1} (-1)^{i-1} e_i p_{k-i}
        //             + (-1)^{k-1} k e_k
        // with e_{2m} = c_{2m} (weight m) and odd e zero.
        let elementary = |k: usize| -> ChernPolynomial {
            if k.is_multiple_of(2) && k > 0 {
                ChernPolynomial::generator(cap, k / 2)
            } else {
                ChernPolynomial::zero(cap)
            }
        };
        let mut power_sums: Vec<ChernPolynomial> =
            vec![ChernPolynomial::constant(cap, rat_int(2 * n as i64))];
        for k in 1..=2 * n {
            let mut acc = ChernPolynomial::zero(cap);
            for i in 1..k {
                let sign = if (i - 1) % 2 == 0 { 1 } else { -1 };
                let term = elementary(i).mul(&power_sums[k - i]).scale(&rat_int(sign));
                acc = acc.add(&term);
            }
            let sign = if (k - 1) % 2 == 0 { 1 } else { -1 };
            acc = acc.add(&elementary(k).scale(&rat_int(sign * k as i64)));
            power_sums.push(acc);
        }
        SymFuncContext { n, power_sums }
    }

    pub fn half_dim(&self) -> usize {
        self.n
    }

    /// Truncation weight of the Chern ring (equal to the
    /// half-dimension).
    pub fn cap(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> ChernPolynomial {
        ChernPolynomial::zero(self.cap())
    }

    pub fn one(&self) -> ChernPolynomial {
        ChernPolynomial::one(self.cap())
    }

    /// The k-th power sum of Chern roots expressed in even Chern
    /// classes; zero for odd k. `k` is the cohomological half-degree,
    /// so s_{2k} in weight terms is `power_sum(2k)`.
    pub fn power_sum(&self, k: usize) -> Result<ChernPolynomial, CharClassError> {
        if k > 2 * self.n {
            return Err(CharClassError::WeightOverflow {
                requested: k,
                cap: 2 * self.n,
            });
        }
        Ok(self.power_sums[k].clone())
    }

    /// p_0 is the number of Chern roots (the complex dimension 2n).
    pub fn root_count(&self) -> usize {
        2 * self.n
    }

    /// Inverse conversion: the even Chern classes recovered from the
    /// power sums by the reverse Newton recursion. Used to check the
    /// round trip.
    pub fn elementary_from_power_sums(
        &self,
        power_sums: &[ChernPolynomial],
    ) -> Vec<ChernPolynomial> {
        let cap = self.cap();
        let mut elementary: Vec<ChernPolynomial> = vec![ChernPolynomial::one(cap)];
        for k in 1..=2 * self.n {
            let mut acc = ChernPolynomial::zero(cap);
            for i in 1..=k {
                let sign = if (i - 1) % 2 == 0 { 1 } else { -1 };
                acc = acc.add(&elementary[k - i].mul(&power_sums[i]).scale(&rat_int(sign)));
            }
            elementary.push(acc.scale(&rat_int(k as i64).recip()));
        }
        elementary
    }
}
