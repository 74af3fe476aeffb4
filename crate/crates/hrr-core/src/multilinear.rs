//! Exterior algebra over a symplectic rational vector space of
//! dimension 2n, with the determinant pairing on it.
//!
//! The basis is always the standard symplectic one: the dual basis
//! theta^1, ..., theta^{2n} with sigma = sum theta^{2i-1} /\ theta^{2i},
//! so the dual pairing satisfies sigma*(theta^{2i-1}, theta^{2i}) = 1.
//! A general symplectic form is expected to be brought into this normal
//! form by the caller.
//!
//! The identification of wedge products with alternating forms is the
//! determinant convention
//! (a_1 /\ ... /\ a_r)(v_1, ..., v_r) = det(a_i(v_j)); other authors
//! identify the two spaces with an extra 1/r! or a different sign
//! normalization, which changes the pairing by combinatorial factors.
//! Everything here, in particular `pairing` and the exp-sigma identity
//! checked by `laexp_defect`, assumes the determinant convention.

use crate::arith::Rat;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A symplectic rational vector space of dimension `2n` in its standard
/// basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymplecticSpace {
    n: usize,
}

/// Errors from exterior-algebra operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MultilinearError {
    /// Two operands live over different symplectic spaces.
    AmbientMismatch,
    /// An index outside 1..=2n was used.
    IndexOutOfRange,
    /// `laexp_defect` got an input that is not homogeneous of even
    /// degree.
    NotEvenHomogeneous,
}

impl fmt::Display for MultilinearError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultilinearError::AmbientMismatch => {
                write!(f, "operands have different ambient spaces")
            }
            MultilinearError::IndexOutOfRange => write!(f, "basis index out of range"),
            MultilinearError::NotEvenHomogeneous => {
                write!(f, "input must be homogeneous of even degree")
            }
        }
    }
}

impl std::error::Error for MultilinearError {}

impl SymplecticSpace {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1 && 2 * n <= 63, "dimension out of supported range");
        SymplecticSpace { n }
    }

    pub fn half_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// The dual symplectic pairing sigma*(theta^i, theta^j) on basis
    /// covectors, with 1-based indices.
    pub fn dual_pairing(&self, i: usize, j: usize) -> Rat {
        debug_assert!(i >= 1 && j >= 1 && i <= 2 * self.n && j <= 2 * self.n);
        if j == i + 1 && i % 2 == 1 {
            Rat::one()
        } else if i == j + 1 && j % 2 == 1 {
            -Rat::one()
        } else {
            Rat::zero()
        }
    }

    /// The zero element.
    pub fn zero(&self) -> ExteriorElement {
        ExteriorElement {
            space: *self,
            terms: BTreeMap::new(),
        }
    }

    /// The unit of the algebra.
    pub fn one(&self) -> ExteriorElement {
        self.monomial(&[], Rat::one()).unwrap()
    }

    /// The basis covector theta^i (1-based).
    pub fn theta(&self, i: usize) -> Result<ExteriorElement, MultilinearError> {
        self.monomial(&[i], Rat::one())
    }

    /// A scalar multiple of theta^{i_1} /\ ... /\ theta^{i_r} for
    /// strictly increasing indices.
    pub fn monomial(
        &self,
        indices: &[usize],
        coeff: Rat,
    ) -> Result<ExteriorElement, MultilinearError> {
        let mut mask: u64 = 0;
        for &i in indices {
            if i < 1 || i > 2 * self.n {
                return Err(MultilinearError::IndexOutOfRange);
            }
            mask |= 1 << (i - 1);
        }
        assert_eq!(
            mask.count_ones() as usize,
            indices.len(),
            "indices must be distinct"
        );
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mask, coeff);
        }
        Ok(ExteriorElement {
            space: *self,
            terms,
        })
    }

    /// The standard symplectic form sigma = sum theta^{2i-1} /\ theta^{2i}.
    pub fn sigma(&self) -> ExteriorElement {
        let mut acc = self.zero();
        for i in 1..=self.n {
            let term = self.monomial(&[2 * i - 1, 2 * i], Rat::one()).unwrap();
            acc = acc.add(&term);
        }
        acc
    }

    /// exp(sigma) = sum sigma^k / k!, a finite sum in the exterior
    /// algebra.
    pub fn exp_sigma(&self) -> ExteriorElement {
        let sigma = self.sigma();
        let mut acc = self.one();
        let mut power = self.one();
        let mut factorial = Rat::one();
        for k in 1..=self.n {
            power = power.wedge(&sigma).unwrap();
            factorial *= crate::arith::rat_int(k as i64);
            acc = acc.add(&power.scale(&factorial.recip()));
        }
        acc
    }
}

/// An element of the exterior algebra over the dual of a symplectic
/// space. Terms are stored on basis monomials encoded as bitmasks of
/// the participating covector indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorElement {
    space: SymplecticSpace,
    terms: BTreeMap<u64, Rat>,
}

/// Sign of merging two disjoint index sets: the parity of the number of
/// transpositions needed to interleave `a` and `b` into sorted order.
fn merge_sign(a: u64, b: u64) -> i32 {
    // For each bit of a, count the bits of b strictly below it: each
    // such pair is an inversion in the concatenated sequence.
    let mut sign = 0u32;
    let mut rest = a;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        sign += (b & ((1u64 << bit) - 1)).count_ones();
        rest &= rest - 1;
    }
    if sign.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl ExteriorElement {
    pub fn space(&self) -> SymplecticSpace {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degrees present in this element.
    pub fn degrees(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.terms.keys().map(|m| m.count_ones() as usize).collect();
        degs.sort_unstable();
        degs.dedup();
        degs
    }

    /// The homogeneous part of the given degree.
    pub fn homogeneous_part(&self, degree: usize) -> ExteriorElement {
        ExteriorElement {
            space: self.space,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.count_ones() as usize == degree)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.space, other.space);
        let mut terms = self.terms.clone();
        for (mask, coeff) in &other.terms {
            let entry = terms.entry(*mask).or_insert_with(Rat::zero);
            *entry += coeff;
            if entry.is_zero() {
                terms.remove(mask);
            }
        }
        ExteriorElement {
            space: self.space,
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        if factor.is_zero() {
            return ExteriorElement {
                space: self.space,
                terms: BTreeMap::new(),
            };
        }
        ExteriorElement {
            space: self.space,
            terms: self.terms.iter().map(|(m, c)| (*m, c * factor)).collect(),
        }
    }

    /// Graded-anticommutative product.
    pub fn wedge(&self, other: &Self) -> Result<Self, MultilinearError> {
        if self.space != other.space {
            return Err(MultilinearError::AmbientMismatch);
        }
        let mut terms: BTreeMap<u64, Rat> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma & mb != 0 {
                    continue;
                }
                let sign = merge_sign(*ma, *mb);
                let coeff = ca * cb * crate::arith::rat_int(sign as i64);
                let entry = terms.entry(ma | mb).or_insert_with(Rat::zero);
                *entry += coeff;
                if entry.is_zero() {
                    terms.remove(&(ma | mb));
                }
            }
        }
        Ok(ExteriorElement {
            space: self.space,
            terms,
        })
    }

    /// The coefficient of the top-degree monomial
    /// theta^1 /\ ... /\ theta^{2n}.
    pub fn top_projection(&self) -> Rat {
        let full: u64 = (1u64 << self.space.dim()) - 1;
        self.terms.get(&full).cloned().unwrap_or_else(Rat::zero)
    }

    /// The bilinear determinant pairing. On monomials of equal degree
    /// it is det(sigma*(theta^{i_a}, theta^{j_b})); across different
    /// degrees it vanishes.
    pub fn pairing(&self, other: &Self) -> Result<Rat, MultilinearError> {
        if self.space != other.space {
            return Err(MultilinearError::AmbientMismatch);
        }
        let mut acc = Rat::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.count_ones() != mb.count_ones() {
                    continue;
                }
                let det = self.monomial_pairing(*ma, *mb);
                if !det.is_zero() {
                    acc += ca * cb * det;
                }
            }
        }
        Ok(acc)
    }

    fn monomial_pairing(&self, ma: u64, mb: u64) -> Rat {
        let rows: Vec<usize> = mask_indices(ma);
        let cols: Vec<usize> = mask_indices(mb);
        let r = rows.len();
        if r == 0 {
            return Rat::one();
        }
        let mut matrix = Vec::with_capacity(r);
        for &i in &rows {
            let mut row = Vec::with_capacity(r);
            for &j in &cols {
                row.push(self.space.dual_pairing(i, j));
            }
            matrix.push(row);
        }
        determinant(matrix)
    }
}

fn mask_indices(mask: u64) -> Vec<usize> {
    let mut v = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        let bit = rest.trailing_zeros() as usize;
        v.push(bit + 1);
        rest &= rest - 1;
    }
    v
}

/// Exact determinant by fraction-free-ish Gaussian elimination on a
/// small dense matrix.
fn determinant(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(pivot) = pivot else {
            return Rat::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        let inv = p.recip();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            for c in col..n {
                let v = &m[r][c] - &factor * &m[col][c];
                m[r][c] = v;
            }
        }
    }
    det
}

/// The defect of the exp-sigma projection identity for a homogeneous
/// even-degree input: top(alpha /\ exp sigma) minus
/// <alpha, exp sigma> * top(exp sigma). The identity says this is
/// always zero.
pub fn laexp_defect(alpha: &ExteriorElement) -> Result<Rat, MultilinearError> {
    let degrees = alpha.degrees();
    if degrees.len() > 1 || degrees.first().is_some_and(|d| d % 2 != 0) {
        return Err(MultilinearError::NotEvenHomogeneous);
    }
    let space = alpha.space();
    let exp_sigma = space.exp_sigma();
    let lhs = alpha.wedge(&exp_sigma)?.top_projection();
    let scalar = alpha.pairing(&exp_sigma)?;
    let rhs = scalar * exp_sigma.top_projection();
    Ok(lhs - rhs)
}

/// Sweeps the exp-sigma projection identity: exhaustively over all
/// even-degree basis monomials for half-dimensions up to `max_n`, then
/// over `samples` pseudo-random even-homogeneous elements drawn from a
/// seeded generator. Returns the number of checks and a description of
/// each failure.
pub fn laexp_sweep(max_n: usize, samples: usize, seed: u64) -> (usize, Vec<String>) {
    let mut checks = 0;
    let mut failures = Vec::new();
    for n in 1..=max_n {
        let space = SymplecticSpace::new(n);
        for mask in 0u64..(1 << (2 * n)) {
            if mask.count_ones() % 2 != 0 {
                continue;
            }
            let alpha = space
                .monomial(&mask_indices(mask), Rat::one())
                .expect("indices in range");
            checks += 1;
            match laexp_defect(&alpha) {
                Ok(defect) if defect.is_zero() => {}
                Ok(defect) => failures.push(format!(
                    "basis monomial {mask:b} at n = {n}: defect {defect}"
                )),
                Err(err) => failures.push(format!("basis monomial {mask:b} at n = {n}: {err}")),
            }
        }
    }
    // xorshift-style deterministic generator
    let mut state = seed | 1;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for sample in 0..samples {
        let n = 1 + (next() as usize) % max_n;
        let space = SymplecticSpace::new(n);
        let degree = 2 * ((next() as usize) % (n + 1));
        let mut alpha = space.zero();
        for mask in 0u64..(1 << (2 * n)) {
            if mask.count_ones() as usize != degree {
                continue;
            }
            let numer = (next() % 19) as i64 - 9;
            let denom = (next() % 7 + 1) as i64;
            let term = space
                .monomial(&mask_indices(mask), crate::arith::rat(numer, denom))
                .expect("indices in range");
            alpha = alpha.add(&term);
        }
        checks += 1;
        match laexp_defect(&alpha) {
            Ok(defect) if defect.is_zero() => {}
            Ok(defect) => failures.push(format!("random sample {sample}: defect {defect}")),
            Err(err) => failures.push(format!("random sample {sample}: {err}")),
        }
    }
    (checks, failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    #[test]
    fn wedge_on_basis_covectors() {
        let space = SymplecticSpace::new(2);
        let t1 = space.theta(1).unwrap();
        let t2 = space.theta(2).unwrap();
        let m12 = t1.wedge(&t2).unwrap();
        assert_eq!(m12, space.monomial(&[1, 2], rat_int(1)).unwrap());
        assert!(t1.wedge(&t1).unwrap().is_zero());
        assert_eq!(t2.wedge(&t1).unwrap(), m12.scale(&rat_int(-1)));
    }

    #[test]
    fn wedge_is_associative_and_graded_commutative() {
        let space = SymplecticSpace::new(3);
        let a = space
            .monomial(&[1], rat(1, 2))
            .unwrap()
            .add(&space.monomial(&[2, 3], rat_int(3)).unwrap());
        let b = space
            .monomial(&[4], rat(-2, 5))
            .unwrap()
            .add(&space.monomial(&[5], rat_int(1)).unwrap());
        let c = space.monomial(&[2], rat_int(7)).unwrap();
        let ab_c = a.wedge(&b).unwrap().wedge(&c).unwrap();
        let a_bc = a.wedge(&b.wedge(&c).unwrap()).unwrap();
        assert_eq!(ab_c, a_bc);
        // odd-degree elements anticommute
        let t1 = space.theta(1).unwrap();
        let t4 = space.theta(4).unwrap();
        assert_eq!(
            t1.wedge(&t4).unwrap(),
            t4.wedge(&t1).unwrap().scale(&rat_int(-1))
        );
    }

    #[test]
    fn ambient_mismatch_is_rejected() {
        let a = SymplecticSpace::new(1).theta(1).unwrap();
        let b = SymplecticSpace::new(2).theta(1).unwrap();
        assert_eq!(a.wedge(&b), Err(MultilinearError::AmbientMismatch));
        assert_eq!(a.pairing(&b), Err(MultilinearError::AmbientMismatch));
    }

    #[test]
    fn sigma_power_is_the_scaled_volume_form() {
        for n in 1..=4 {
            let space = SymplecticSpace::new(n);
            let mut power = space.one();
            for _ in 0..n {
                power = power.wedge(&space.sigma()).unwrap();
            }
            // sigma^n = n! theta^1 /\ ... /\ theta^{2n}
            let mut factorial = Rat::one();
            for k in 1..=n {
                factorial *= rat_int(k as i64);
            }
            assert_eq!(power.top_projection(), factorial);
        }
    }

    #[test]
    fn pairing_of_sigma_powers() {
        for n in 1..=4 {
            let space = SymplecticSpace::new(n);
            let mut power = space.one();
            for _ in 0..n {
                power = power.wedge(&space.sigma()).unwrap();
            }
            let mut factorial = Rat::one();
            for k in 1..=n {
                factorial *= rat_int(k as i64);
            }
            // <sigma^n, sigma^n> = (n!)^2
            assert_eq!(power.pairing(&power).unwrap(), &factorial * &factorial);
        }
    }

    #[test]
    fn pairing_on_basis_pairs() {
        let space = SymplecticSpace::new(2);
        let t1 = space.theta(1).unwrap();
        let t2 = space.theta(2).unwrap();
        assert_eq!(t1.pairing(&t1).unwrap(), Rat::zero());
        assert_eq!(t1.pairing(&t2).unwrap(), rat_int(1));
        assert_eq!(t2.pairing(&t1).unwrap(), rat_int(-1));
        // across degrees the pairing vanishes
        let m = space.monomial(&[1, 2], rat_int(1)).unwrap();
        assert_eq!(m.pairing(&t1).unwrap(), Rat::zero());
    }

    #[test]
    fn top_projection_examples() {
        let space = SymplecticSpace::new(1);
        assert_eq!(space.one().top_projection(), Rat::zero());
        assert_eq!(
            space
                .monomial(&[1, 2], rat_int(1))
                .unwrap()
                .top_projection(),
            rat_int(1)
        );
    }

    #[test]
    fn pairing_is_symmetric_on_even_degrees_and_bilinear() {
        let space = SymplecticSpace::new(3);
        let mut state = 0x1234_5678_9abc_def0u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut random_even = |degree: usize| {
            let mut acc = space.zero();
            for mask in 0u64..(1 << 6) {
                if mask.count_ones() as usize != degree {
                    continue;
                }
                let c = rat((next() % 15) as i64 - 7, (next() % 5 + 1) as i64);
                acc = acc.add(&space.monomial(&mask_indices(mask), c).unwrap());
            }
            acc
        };
        for degree in [0usize, 2, 4, 6] {
            let a = random_even(degree);
            let b = random_even(degree);
            let c = random_even(degree);
            assert_eq!(a.pairing(&b).unwrap(), b.pairing(&a).unwrap());
            let scalar = rat(3, 7);
            let combined = a.add(&b.scale(&scalar));
            assert_eq!(
                combined.pairing(&c).unwrap(),
                a.pairing(&c).unwrap() + scalar.clone() * b.pairing(&c).unwrap()
            );
        }
        // across unequal degrees the pairing vanishes
        let two = random_even(2);
        let four = random_even(4);
        assert_eq!(two.pairing(&four).unwrap(), Rat::zero());
    }

    #[test]
    fn laexp_defect_is_zero_on_simple_inputs() {
        let space = SymplecticSpace::new(2);
        assert_eq!(laexp_defect(&space.one()).unwrap(), Rat::zero());
        let alpha = space.monomial(&[1, 2], rat_int(1)).unwrap();
        assert_eq!(laexp_defect(&alpha).unwrap(), Rat::zero());
    }

    #[test]
    fn laexp_defect_rejects_odd_degrees() {
        let space = SymplecticSpace::new(2);
        let odd = space.theta(1).unwrap();
        assert_eq!(
            laexp_defect(&odd),
            Err(MultilinearError::NotEvenHomogeneous)
        );
    }

    #[test]
    fn scaled_wedge_identity_on_basis_monomials() {
        // alpha /\ sigma^{n-p} = ((n-p)!/(p! n!)) <alpha, sigma^p> sigma^n
        // for homogeneous alpha of degree 2p, checked over all basis
        // monomials for n <= 3.
        for n in 1..=3usize {
            let space = SymplecticSpace::new(n);
            let sigma = space.sigma();
            let mut sigma_pows = vec![space.one()];
            for _ in 0..n {
                let next = sigma_pows.last().unwrap().wedge(&sigma).unwrap();
                sigma_pows.push(next);
            }
            for p in 0..=n {
                let fac = |m: usize| {
                    let mut f = Rat::one();
                    for k in 1..=m {
                        f *= rat_int(k as i64);
                    }
                    f
                };
                let coeff = fac(n - p) / (fac(p) * fac(n));
                for mask in 0u64..(1 << (2 * n)) {
                    if mask.count_ones() as usize != 2 * p {
                        continue;
                    }
                    let indices = super::mask_indices(mask);
                    let alpha = space.monomial(&indices, Rat::one()).unwrap();
                    let lhs = alpha.wedge(&sigma_pows[n - p]).unwrap();
                    let scalar = alpha.pairing(&sigma_pows[p]).unwrap() * &coeff;
                    let rhs = sigma_pows[n].scale(&scalar);
                    assert_eq!(lhs, rhs, "n = {n}, p = {p}, mask = {mask:b}");
                }
            }
        }
    }
}
