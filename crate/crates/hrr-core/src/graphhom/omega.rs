//! The wheel exponential and its eigenvalue equation.
//!
//! The element of interest is exp of the sum over k of b_{2k} w_{2k},
//! where b are the modified Bernoulli numbers and w the even wheels.
//! Its degree-2k homogeneous component carries the k-th power of the
//! formal weight mu, and the glueing operator acts on the whole
//! element as multiplication by (mu^2/48) times the theta graph. The
//! verification here computes the defect of that equation component by
//! component and reduces it in the exact AS/IHX quotient.

use super::quotient::BasisContext;
use super::vector::GraphVector;
use super::{GraphError, JacobiDiagram};
use crate::arith::{modified_bernoulli, rat, Polynomial1, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// The homogeneous component of degree 2k of the wheel exponential:
/// the sum over partitions of k/2 of the product of b_{2a} w_{2a} with
/// the usual symmetry factors. Zero for odd k.
pub fn omega_component(k: usize) -> GraphVector {
    if !k.is_multiple_of(2) {
        return GraphVector::zero();
    }
    if k == 0 {
        return GraphVector::one();
    }
    let half = k / 2;
    let mut out = GraphVector::zero();
    for partition in partitions(half) {
        // coefficient: product of b_{2a} over parts, divided by the
        // product of multiplicity factorials
        let mut coeff = Rat::one();
        let mut diagram = JacobiDiagram::empty();
        let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
        for &part in &partition {
            coeff *= modified_bernoulli(2 * part);
            *mult.entry(part).or_insert(0) += 1;
            diagram = diagram.disjoint_union(&JacobiDiagram::wheel(2 * part));
        }
        for count in mult.values() {
            for m in 1..=*count {
                coeff /= crate::arith::rat_int(m as i64);
            }
        }
        out = out.add(&GraphVector::from_diagram(&diagram).scale(&coeff));
    }
    out
}

/// The wheel exponential with its mu-weighting: the list of pairs
/// (k, component of degree 2k) for all k with 2k at most the degree
/// cap, with coefficients taken at mu = 1; each component carries
/// mu^k. Presented as exact polynomials in mu per diagram class by
/// [`omega_mu_polynomials`].
pub fn omega_mu(degree_cap: usize) -> Vec<(usize, GraphVector)> {
    (0..=degree_cap / 2)
        .map(|k| (k, omega_component(k)))
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

/// The same element with each diagram class mapped to its exact
/// coefficient polynomial in mu.
pub fn omega_mu_polynomials(degree_cap: usize) -> Vec<(super::CanonicalDiagram, Polynomial1)> {
    let mut by_class: BTreeMap<super::CanonicalDiagram, Polynomial1> = BTreeMap::new();
    for (k, component) in omega_mu(degree_cap) {
        for (diagram, coeff) in component.terms() {
            let mono = Polynomial1::monomial("mu", coeff.clone(), k);
            by_class
                .entry(diagram.clone())
                .and_modify(|p| *p = p.add(&mono))
                .or_insert(mono);
        }
    }
    by_class.into_iter().collect()
}

/// One slice of the eigenvalue-equation check.
#[derive(Clone, Debug)]
pub struct OmegaDefect {
    /// The mu power of the slice.
    pub mu_power: usize,
    /// Bidegree at which the defect was reduced.
    pub bidegree: (usize, usize),
    /// Coordinates of the defect over the quotient basis; the theorem
    /// says they all vanish.
    pub coordinates: Vec<Rat>,
}

impl OmegaDefect {
    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(|c| c.is_zero())
    }
}

/// Verifies the eigenvalue equation of the wheel exponential degree by
/// degree: for every even k the defect
/// partial(Omega_k) - (1/48) theta Omega_{k-2}
/// is reduced in the quotient at its bidegree (k-2, k). All defects up
/// to total defect degree `max_degree` are checked.
pub fn verify_omega_eigen(
    ctx: &BasisContext,
    max_degree: usize,
) -> Result<Vec<OmegaDefect>, GraphError> {
    let theta = GraphVector::from_diagram(&JacobiDiagram::theta());
    let mut out = Vec::new();
    let mut k = 2;
    while 2 * k - 2 <= max_degree {
        if k % 2 == 0 {
            let dk = omega_component(k).partial()?;
            let rhs = theta.union(&omega_component(k - 2)).scale(&rat(1, 48));
            let defect = dk.sub(&rhs);
            let basis = ctx.basis(k - 2, k)?;
            let coordinates = basis.reduce(&defect.bidegree_part(k - 2, k))?;
            // anything outside the expected bidegree would be a bug
            if defect.bidegrees().iter().any(|&bd| bd != (k - 2, k)) {
                return Err(GraphError::Malformed(
                    "eigen defect leaked outside its bidegree".into(),
                ));
            }
            out.push(OmegaDefect {
                mu_power: k,
                bidegree: (k - 2, k),
                coordinates,
            });
        }
        k += 1;
    }
    Ok(out)
}

/// The partitions of n into positive parts, descending within each
/// partition.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}
