//! The polynomial image of double wheels.
//!
//! Double wheels span a subspace on which an injective linear map into
//! the symmetric cube of formal variables x_0, x_1, ... is known: the
//! double wheel with arcs of i and j legs maps to an explicit signed
//! binomial double sum for even i + j and to zero for odd i + j. On
//! that image the eigenvalue computation for the wheel exponential
//! becomes a Bernoulli-number identity, which is also implemented and
//! checked here.

use super::diagram::JacobiDiagram;
use super::vector::GraphVector;
use super::CanonicalDiagram;
use super::GraphError;
use crate::arith::{bernoulli, binomial, format_rat, modified_bernoulli, rat, rat_int, Rat};
use num_traits::Zero;
use std::collections::BTreeMap;

/// A rational linear combination of unordered cubic monomials
/// x_a x_b x_c; keys are stored ascending.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Sym3Poly {
    terms: BTreeMap<[u64; 3], Rat>,
}

impl Sym3Poly {
    pub fn zero() -> Self {
        Sym3Poly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mut monomial: [u64; 3], coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        monomial.sort_unstable();
        let entry = self.terms.entry(monomial).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&monomial);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rat_int(-1)))
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        if factor.is_zero() {
            return Sym3Poly::zero();
        }
        Sym3Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * factor)).collect(),
        }
    }

    pub fn coeff(&self, mut monomial: [u64; 3]) -> Rat {
        monomial.sort_unstable();
        self.terms.get(&monomial).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u64; 3], &Rat)> {
        self.terms.iter()
    }

    /// The part with subscript weight a + b + c equal to `weight`.
    pub fn weight_part(&self, weight: u64) -> Self {
        Sym3Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.iter().sum::<u64>() == weight)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, c)| format!("{} * x{} x{} x{}", format_rat(c), m[0], m[1], m[2]))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// The image of the double wheel with arcs of `i` and `j` legs: twice
/// the signed binomial double sum for even i + j, zero for odd i + j.
pub fn p_map(i: usize, j: usize) -> Sym3Poly {
    let mut out = Sym3Poly::zero();
    if !(i + j).is_multiple_of(2) {
        return out;
    }
    for l in 0..=i {
        for m in 0..=j {
            let sign = if (l + m) % 2 == 0 { 1 } else { -1 };
            let coeff =
                rat_int(2 * sign) * binomial(i as u64, l as u64) * binomial(j as u64, m as u64);
            out.add_term([l as u64, m as u64, (i + j - l - m) as u64], coeff);
        }
    }
    out
}

/// Left-hand side of the Bernoulli identity, truncated to total
/// subscript weight at most `weight_cap`, minus x_0^3 / 12. The
/// identity says the result is identically zero.
pub fn lemma_bernoulli_defect(weight_cap: usize) -> Sym3Poly {
    let mut acc = Sym3Poly::zero();
    // single sum: k runs with monomial weight k - 2
    for k in 2..=weight_cap + 2 {
        let bk = bernoulli(k);
        if bk.is_zero() {
            continue;
        }
        let factor = &bk / factorial(k);
        for n in 0..=k - 2 {
            for l in 0..=n {
                for m in 0..=k - 2 - n {
                    let sign = if (l + m) % 2 == 0 { 1 } else { -1 };
                    let coeff = &factor
                        * rat_int(sign)
                        * binomial(n as u64, l as u64)
                        * binomial((k - 2 - n) as u64, m as u64);
                    acc.add_term([l as u64, m as u64, (k - 2 - l - m) as u64], coeff);
                }
            }
        }
    }
    // double sum: i, j run with monomial weight i + j - 2
    for i in 2..=weight_cap + 2 {
        let bi = bernoulli(i);
        if bi.is_zero() {
            continue;
        }
        for j in 2..=weight_cap + 2 - i {
            let bj = bernoulli(j);
            if bj.is_zero() {
                continue;
            }
            let factor = &bi * &bj / (factorial(i) * factorial(j));
            for l in 0..=i - 1 {
                for m in 0..=j - 1 {
                    let sign = if (l + m) % 2 == 0 { 1 } else { -1 };
                    let coeff = &factor
                        * rat_int(sign)
                        * binomial((i - 1) as u64, l as u64)
                        * binomial((j - 1) as u64, m as u64);
                    acc.add_term([l as u64, m as u64, (i + j - 2 - l - m) as u64], coeff);
                }
            }
        }
    }
    acc.add_term([0, 0, 0], rat(-1, 12));
    acc
}

fn factorial(n: usize) -> Rat {
    let mut f = Rat::from_integer(1.into());
    for k in 2..=n {
        f *= rat_int(k as i64);
    }
    f
}

/// High-degree coherence check of the eigenvalue computation on the
/// double-wheel span: expands the glueings of the Bernoulli-weighted
/// wheels by machine, recognizes every resulting class as a double
/// wheel, pushes through the polynomial map and subtracts the image of
/// theta/48. Weight slices up to `weight_cap` must vanish. The cross
/// glueings are rewritten with the in-quotient bridge law, so this
/// check ties together the wheel glueing law, the polynomial map and
/// the Bernoulli identity.
pub fn wheel_expansion_pmap_defect(weight_cap: usize) -> Result<Sym3Poly, GraphError> {
    // lookup: canonical double-wheel classes up to total arc weight
    // cap, with the sign relating the canonical representative to the
    // constructor class
    let mut lookup: BTreeMap<CanonicalDiagram, (usize, usize, i32)> = BTreeMap::new();
    for total in (0..=weight_cap).step_by(2) {
        for i in 0..=total / 2 {
            let j = total - i;
            let (c, s) = super::canonical::canonicalize(&JacobiDiagram::double_wheel(i, j));
            debug_assert_ne!(s, 0);
            lookup.insert(c, (i, j, s));
        }
    }
    let mut acc = Sym3Poly::zero();
    // sum over k of b_{2k} partial(w_{2k}), arc weight 2k - 2
    let mut k = 1;
    while 2 * k - 2 <= weight_cap {
        let coeff = modified_bernoulli(2 * k);
        let expansion = GraphVector::from_diagram(&JacobiDiagram::wheel(2 * k)).partial()?;
        for (diagram, c) in expansion.terms() {
            let &(i, j, sign) = lookup
                .get(diagram)
                .expect("glueing a wheel must give double wheels");
            // c is relative to the canonical representative, which is
            // sign times the double-wheel class
            acc = acc.add(&p_map(i, j).scale(&(&coeff * c * rat_int(sign as i64))));
        }
        k += 1;
    }
    // cross terms: (1/2) b_{2i} b_{2j} partial(w_{2i}, w_{2j}), using
    // the in-quotient law for the bridge classes
    let mut i = 1;
    while 2 * i - 1 < weight_cap {
        let mut j = 1;
        while (2 * i - 1) + (2 * j - 1) <= weight_cap {
            let coeff =
                rat_int(4 * (i * j) as i64) * modified_bernoulli(2 * i) * modified_bernoulli(2 * j);
            acc = acc.add(&p_map(2 * i - 1, 2 * j - 1).scale(&coeff));
            j += 1;
        }
        i += 1;
    }
    acc = acc.sub(&p_map(0, 0).scale(&rat(1, 48)));
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_map_base_cases() {
        // (0,0): a single l = m = 0 term
        let p00 = p_map(0, 0);
        assert_eq!(p00.coeff([0, 0, 0]), rat_int(2));
        assert_eq!(p00.terms().count(), 1);
        // odd total arc weight maps to zero
        assert!(p_map(1, 2).is_zero());
        // (1,1) expanded and collected
        let p11 = p_map(1, 1);
        assert_eq!(p11.coeff([0, 0, 2]), rat_int(2));
        assert_eq!(p11.coeff([0, 1, 1]), rat_int(-2));
        assert_eq!(p11.terms().count(), 2);
        // symmetry in the two arcs
        assert_eq!(p_map(0, 2), p_map(2, 0));
        assert_eq!(p_map(1, 3), p_map(3, 1));
    }

    #[test]
    fn p_map_images_reflect_quotient_relations() {
        // The images encode equalities of double wheels in the IHX
        // quotient: the (0,2) wheel is twice the (1,1) wheel, and the
        // (2,2) and (1,3) wheels coincide there.
        assert_eq!(p_map(0, 2), p_map(1, 1).scale(&rat_int(2)));
        assert_eq!(p_map(2, 2), p_map(1, 3));
        assert_eq!(p_map(0, 4), p_map(2, 2).scale(&rat_int(2)));
    }

    #[test]
    fn bernoulli_identity_weight_zero_slice() {
        let defect = lemma_bernoulli_defect(0);
        assert!(defect.weight_part(0).is_zero(), "{}", defect.to_text());
    }

    #[test]
    fn bernoulli_identity_through_weight_eight() {
        let defect = lemma_bernoulli_defect(8);
        assert!(defect.is_zero(), "defect: {}", defect.to_text());
    }

    #[test]
    fn odd_weight_slices_vanish_termwise() {
        let defect = lemma_bernoulli_defect(9);
        for w in [1u64, 3, 5, 7, 9] {
            assert!(defect.weight_part(w).is_zero());
        }
    }

    #[test]
    fn wheel_expansion_coherence_small() {
        let defect = wheel_expansion_pmap_defect(4).unwrap();
        assert!(defect.is_zero(), "defect: {}", defect.to_text());
    }
}
