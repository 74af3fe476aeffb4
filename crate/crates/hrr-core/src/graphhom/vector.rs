//! Formal rational linear combinations of canonical Jacobi diagrams,
//! together with the glueing operators on them.

use super::canonical::{canonicalize, CanonicalDiagram};
use super::diagram::JacobiDiagram;
use super::GraphError;
use crate::arith::{rat, rat_int, Rat};
use num_traits::Zero;
use std::collections::BTreeMap;

/// A finite rational linear combination of nonzero canonical diagram
/// classes. Zero coefficients and vanishing classes are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GraphVector {
    terms: BTreeMap<CanonicalDiagram, Rat>,
}

impl GraphVector {
    pub fn zero() -> Self {
        GraphVector::default()
    }

    /// The class of the empty diagram with coefficient one: the unit
    /// of the disjoint-union product.
    pub fn one() -> Self {
        GraphVector::from_diagram(&JacobiDiagram::empty())
    }

    /// The class of a concrete diagram (with its antisymmetry sign).
    pub fn from_diagram(diagram: &JacobiDiagram) -> Self {
        let mut v = GraphVector::zero();
        v.accumulate_diagram(diagram, &rat_int(1));
        v
    }

    pub fn from_canonical(diagram: CanonicalDiagram, coeff: Rat) -> Self {
        let mut v = GraphVector::zero();
        if !diagram.is_zero() && !coeff.is_zero() {
            v.terms.insert(diagram, coeff);
        }
        v
    }

    fn accumulate_diagram(&mut self, diagram: &JacobiDiagram, coeff: &Rat) {
        if coeff.is_zero() {
            return;
        }
        let (canonical, sign) = canonicalize(diagram);
        if sign == 0 {
            return;
        }
        let signed = coeff * rat_int(sign as i64);
        match self.terms.entry(canonical) {
            std::collections::btree_map::Entry::Occupied(mut occupied) => {
                *occupied.get_mut() += signed;
                if occupied.get().is_zero() {
                    occupied.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(vacant) => {
                vacant.insert(signed);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CanonicalDiagram, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, diagram: &CanonicalDiagram) -> Rat {
        self.terms.get(diagram).cloned().unwrap_or_else(Rat::zero)
    }

    /// Bidegrees (univalent, trivalent) present.
    pub fn bidegrees(&self) -> Vec<(usize, usize)> {
        let mut degs: Vec<(usize, usize)> = self.terms.keys().map(|d| d.bidegree()).collect();
        degs.sort_unstable();
        degs.dedup();
        degs
    }

    /// The part of the vector in one bidegree.
    pub fn bidegree_part(&self, u: usize, t: usize) -> GraphVector {
        GraphVector {
            terms: self
                .terms
                .iter()
                .filter(|(d, _)| d.bidegree() == (u, t))
                .map(|(d, c)| (d.clone(), c.clone()))
                .collect(),
        }
    }

    /// The part of the vector in one total degree.
    pub fn degree_part(&self, degree: usize) -> GraphVector {
        GraphVector {
            terms: self
                .terms
                .iter()
                .filter(|(d, _)| d.degree() == degree)
                .map(|(d, c)| (d.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (d, c) in &other.terms {
            let entry = terms.entry(d.clone()).or_insert_with(Rat::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        GraphVector { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rat_int(-1)))
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        if factor.is_zero() {
            return GraphVector::zero();
        }
        GraphVector {
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (d.clone(), c * factor))
                .collect(),
        }
    }

    /// Disjoint-union product, extended bilinearly.
    pub fn union(&self, other: &Self) -> Self {
        let mut out = GraphVector::zero();
        for (da, ca) in &self.terms {
            let a = da.reconstruct();
            for (db, cb) in &other.terms {
                let b = db.reconstruct();
                out.accumulate_diagram(&a.disjoint_union(&b), &(ca * cb));
            }
        }
        out
    }

    /// Whether any diagram contains a strut component.
    pub fn has_strut(&self) -> bool {
        self.terms.keys().any(|d| d.strut_count() > 0)
    }

    /// The glueing operator: half the sum over ordered pairs of
    /// distinct legs, i.e. the sum over unordered leg pairs, of the
    /// glued diagram. Lowers the bidegree by (2, 0). Rejects inputs
    /// with strut components.
    pub fn partial(&self) -> Result<Self, GraphError> {
        if self.has_strut() {
            return Err(GraphError::StrutComponentPresent);
        }
        let mut out = GraphVector::zero();
        for (d, c) in &self.terms {
            let diagram = d.reconstruct();
            let legs = diagram.univalent_vertices();
            for i in 0..legs.len() {
                for j in i + 1..legs.len() {
                    let glued = diagram.glue(legs[i], legs[j])?;
                    out.accumulate_diagram(&glued, c);
                }
            }
        }
        Ok(out)
    }

    /// The bilinear companion of `partial`: all glueings of one leg of
    /// `self` with one leg of `other`.
    pub fn partial_bilinear(&self, other: &Self) -> Result<Self, GraphError> {
        if self.has_strut() || other.has_strut() {
            return Err(GraphError::StrutComponentPresent);
        }
        let mut out = GraphVector::zero();
        for (da, ca) in &self.terms {
            let a = da.reconstruct();
            for (db, cb) in &other.terms {
                let b = db.reconstruct();
                let union = a.disjoint_union(&b);
                let offset = a.vertices().len();
                let legs_a = a.univalent_vertices();
                let legs_b = b.univalent_vertices();
                let coeff = ca * cb;
                for &la in &legs_a {
                    for &lb in &legs_b {
                        let glued = union.glue(la, lb + offset)?;
                        out.accumulate_diagram(&glued, &coeff);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The full leg pairing: the sum over bijections between the leg
    /// sets of all-leg glueings, landing in trivalent diagrams. Zero
    /// when the leg counts differ. At least one argument must be free
    /// of struts.
    pub fn pairing(&self, other: &Self) -> Result<Self, GraphError> {
        let mut out = GraphVector::zero();
        for (da, ca) in &self.terms {
            for (db, cb) in &other.terms {
                if da.strut_count() > 0 && db.strut_count() > 0 {
                    return Err(GraphError::BothArgumentsHaveStruts);
                }
                if da.univalent_count() != db.univalent_count() {
                    continue;
                }
                let a = da.reconstruct();
                let b = db.reconstruct();
                let coeff = ca * cb;
                pair_diagrams(&a, &b, &coeff, &mut out)?;
            }
        }
        Ok(out)
    }

    /// exp of the glueing operator: sum over m of partial^m / m!,
    /// finite because each application removes two legs.
    pub fn exp_partial(&self) -> Result<Self, GraphError> {
        let mut out = GraphVector::zero();
        let mut term = self.clone();
        let mut m = 0u64;
        loop {
            out = out.add(&term);
            if term.is_zero() {
                return Ok(out);
            }
            m += 1;
            term = term.partial()?.scale(&rat(1, m as i64));
        }
    }
}

/// Sums `coeff` times all bijective leg glueings of `a` with `b` into
/// `out`.
fn pair_diagrams(
    a: &JacobiDiagram,
    b: &JacobiDiagram,
    coeff: &Rat,
    out: &mut GraphVector,
) -> Result<(), GraphError> {
    let union = a.disjoint_union(b);
    let offset = a.vertices().len();
    let legs_a = a.univalent_vertices();
    let legs_b: Vec<usize> = b.univalent_vertices().iter().map(|&v| v + offset).collect();
    debug_assert_eq!(legs_a.len(), legs_b.len());
    let mut assignment: Vec<usize> = (0..legs_b.len()).collect();
    permute_and_glue(&union, &legs_a, &legs_b, &mut assignment, 0, coeff, out)
}

fn permute_and_glue(
    union: &JacobiDiagram,
    legs_a: &[usize],
    legs_b: &[usize],
    assignment: &mut Vec<usize>,
    depth: usize,
    coeff: &Rat,
    out: &mut GraphVector,
) -> Result<(), GraphError> {
    if depth == legs_a.len() {
        // Glue pair by pair, tracking vertex renumbering.
        let mut current = union.clone();
        let mut alive: Vec<Option<usize>> = (0..union.vertices().len()).map(Some).collect();
        for (i, &slot) in assignment.iter().enumerate() {
            let ua = alive[legs_a[i]].expect("leg already consumed");
            let ub = alive[legs_b[slot]].expect("leg already consumed");
            let (next, vmap) = current.glue_with_map(ua, ub)?;
            for entry in alive.iter_mut() {
                *entry = entry.and_then(|v| vmap[v]);
            }
            current = next;
        }
        out.accumulate_diagram(&current, coeff);
        return Ok(());
    }
    for k in depth..assignment.len() {
        assignment.swap(depth, k);
        permute_and_glue(union, legs_a, legs_b, assignment, depth + 1, coeff, out)?;
        assignment.swap(depth, k);
    }
    Ok(())
}
