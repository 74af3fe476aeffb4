//! Generalized Kummer varieties: exact Euler characteristics of line
//! bundles, the signed Hodge-number polynomial, and the linear
//! relations these impose on Chern numbers.
//!
//! A generalized Kummer variety of complex dimension 2n has one
//! unknown Chern number per partition of n (the top-weight monomials
//! in c_2, ..., c_{2n}). Two families of exact relations pin them
//! down: matching the lambda-expansion of the integrated deformed Todd
//! class against the closed binomial formula for the Euler
//! characteristic, and matching the integrated chi_y integrand against
//! the divisor-sum formula for chi_y. Both sides are exact rationals;
//! the combined system is row-reduced exactly and solved. For n up to
//! five the solution is unique and integral; at n = 6 the system is
//! rank-deficient and a report is returned instead.

use crate::arith::{
    binomial, falling_binomial_poly, rat, rat_int, Polynomial1, QMatrix, Rat, SolveOutcome,
};
use crate::charclass::{
    chi_y_integrand, integrate, sqrt_todd, todd_deformed, todd_symplectic, ChernMonomial,
    SymFuncContext,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Hard cap on the instance size; the relation generation is cheap but
/// the intended range is the published one.
pub const MAX_N: usize = 6;

/// Errors from the Kummer computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KummerError {
    /// n outside 1..=MAX_N.
    UnsupportedN(usize),
    /// The relation system was inconsistent; this cannot happen for a
    /// correct implementation and is surfaced loudly.
    InconsistentSystem(usize),
    /// A uniquely solved Chern number failed the integrality check.
    NonIntegerValue { monomial: String, value: String },
}

impl fmt::Display for KummerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KummerError::UnsupportedN(n) => {
                write!(f, "n = {n} outside the supported range 1..={MAX_N}")
            }
            KummerError::InconsistentSystem(n) => write!(
                f,
                "relation system for n = {n} is inconsistent; this indicates a bug"
            ),
            KummerError::NonIntegerValue { monomial, value } => {
                write!(
                    f,
                    "solved Chern number {monomial} = {value} is not an integer"
                )
            }
        }
    }
}

impl std::error::Error for KummerError {}

/// One generalized Kummer instance: the half-dimension n and the
/// top-weight Chern monomials (one per partition of n).
#[derive(Clone, Debug)]
pub struct KummerInstance {
    n: usize,
    monomials: Vec<ChernMonomial>,
}

impl KummerInstance {
    pub fn new(n: usize) -> Result<Self, KummerError> {
        if !(1..=MAX_N).contains(&n) {
            return Err(KummerError::UnsupportedN(n));
        }
        Ok(KummerInstance {
            n,
            monomials: ChernMonomial::of_weight(n, n),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The top-weight monomials; for display they are listed from the
    /// highest power of c_2 down to the single class c_{2n}.
    pub fn monomials(&self) -> &[ChernMonomial] {
        &self.monomials
    }

    pub fn display_order(&self) -> Vec<&ChernMonomial> {
        self.monomials.iter().rev().collect()
    }
}

/// Provenance of one relation row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowProvenance {
    /// Coefficient of lambda^j in the deformed-Todd expansion.
    LambdaCoefficient(usize),
    /// Coefficient of y^p in the chi_y expansion.
    ChiYCoefficient(usize),
}

impl fmt::Display for RowProvenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowProvenance::LambdaCoefficient(j) => write!(f, "lambda^{j}"),
            RowProvenance::ChiYCoefficient(p) => write!(f, "y^{p}"),
        }
    }
}

/// The exact linear system for the Chern numbers of one instance.
#[derive(Clone, Debug)]
pub struct RelationSystem {
    instance: KummerInstance,
    rows: Vec<(RowProvenance, Vec<Rat>, Rat)>,
}

impl RelationSystem {
    pub fn instance(&self) -> &KummerInstance {
        &self.instance
    }

    pub fn rows(&self) -> impl Iterator<Item = (&RowProvenance, &[Rat], &Rat)> {
        self.rows.iter().map(|(p, c, r)| (p, c.as_slice(), r))
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn unknown_count(&self) -> usize {
        self.instance.monomials.len()
    }

    pub fn matrix(&self) -> QMatrix {
        QMatrix::from_rows(self.rows.iter().map(|(_, c, _)| c.clone()).collect())
    }

    pub fn rhs(&self) -> Vec<Rat> {
        self.rows.iter().map(|(_, _, r)| r.clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.matrix().rank()
    }

    /// The residual of a candidate assignment: LHS minus RHS per row.
    pub fn residual(&self, values: &BTreeMap<ChernMonomial, Rat>) -> Vec<Rat> {
        self.rows
            .iter()
            .map(|(_, coeffs, rhs)| {
                let lhs = coeffs
                    .iter()
                    .zip(&self.instance.monomials)
                    .fold(Rat::zero(), |acc, (c, m)| {
                        acc + c * values.get(m).cloned().unwrap_or_else(Rat::zero)
                    });
                lhs - rhs
            })
            .collect()
    }
}

/// The solved Chern numbers of one instance, all exact integers.
#[derive(Clone, Debug)]
pub struct ChernNumberTable {
    instance: KummerInstance,
    values: BTreeMap<ChernMonomial, BigInt>,
    rank: usize,
}

impl ChernNumberTable {
    pub fn n(&self) -> usize {
        self.instance.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn value(&self, monomial: &ChernMonomial) -> Option<&BigInt> {
        self.values.get(monomial)
    }

    /// (monomial, value) pairs in display order.
    pub fn entries(&self) -> Vec<(&ChernMonomial, &BigInt)> {
        self.instance
            .display_order()
            .into_iter()
            .map(|m| (m, &self.values[m]))
            .collect()
    }

    pub fn rational_values(&self) -> BTreeMap<ChernMonomial, Rat> {
        self.values
            .iter()
            .map(|(m, v)| (m.clone(), Rat::from_integer(v.clone())))
            .collect()
    }
}

/// Outcome of the exact solve.
#[derive(Clone, Debug)]
pub enum KummerSolve {
    /// Unique integral solution.
    Unique(ChernNumberTable),
    /// The relations do not determine all Chern numbers; the exact
    /// rank is reported together with the monomials that are pinned
    /// anyway (those on which every nullspace vector vanishes).
    RankDeficient {
        n: usize,
        rank: usize,
        unknowns: usize,
        determined: Vec<(ChernMonomial, Rat)>,
    },
}

/// chi of a power of an abelian-surface line bundle pushed to the
/// Kummer variety: (n+1) binom(q/2 + n, n) for even self-intersection
/// q.
pub fn kummer_euler_q(n: usize, q: u64) -> Rat {
    assert!(q.is_multiple_of(2), "the self-intersection number is even");
    rat_int(n as i64 + 1) * binomial(q / 2 + n as u64, n as u64)
}

/// The Euler characteristic as an exact polynomial in the
/// characteristic value lambda: (n+1) binom((n+1) lambda / 4 + n, n).
pub fn kummer_euler_lambda(n: usize) -> Polynomial1 {
    let quarter = Polynomial1::monomial("lambda", rat(n as i64 + 1, 4), 1);
    falling_binomial_poly(&quarter, n).scale(&rat_int(n as i64 + 1))
}

/// The signed Hodge-number polynomial of the 2n-dimensional
/// generalized Kummer variety, from the divisor-sum formula:
/// (n+1) sum over d | (n+1) of d^3 (1 - y + ... + (-y)^{(n+1)/d-1})^2
/// (-y)^{n+1-(n+1)/d}.
pub fn chi_y_kummer(n: usize) -> Polynomial1 {
    let m = n + 1;
    let mut acc = Polynomial1::zero("y");
    for d in 1..=m {
        if !m.is_multiple_of(d) {
            continue;
        }
        let quotient = m / d;
        // alternating geometric part: sum_{r=0}^{quotient-1} (-y)^r
        let mut geometric = vec![Rat::zero(); quotient];
        for (r, g) in geometric.iter_mut().enumerate() {
            *g = rat_int(if r % 2 == 0 { 1 } else { -1 });
        }
        let geometric = Polynomial1::from_coeffs("y", geometric);
        let shift = m - quotient;
        let sign = if shift.is_multiple_of(2) { 1 } else { -1 };
        let shifted = Polynomial1::monomial("y", rat_int(sign * d.pow(3) as i64), shift);
        acc = acc.add(&geometric.mul(&geometric).mul(&shifted));
    }
    acc.scale(&rat_int(m as i64))
}

/// chi of the n-th symmetric power of a sheaf with Euler
/// characteristic chi, by the polynomial extension of
/// binom(chi + n - 1, n).
pub fn chi_symmetric_power(chi: i64, n: usize) -> Rat {
    // binom(x, n) = x (x-1) ... (x-n+1) / n!
    let x = rat_int(chi + n as i64 - 1);
    let mut acc = Rat::one();
    for i in 0..n {
        acc *= &x - rat_int(i as i64);
        acc /= rat_int(i as i64 + 1);
    }
    acc
}

/// Assembles the exact relation system for the Chern numbers of the
/// 2n-dimensional generalized Kummer variety: one row per
/// lambda-coefficient of the deformed-Todd expansion (j = 0..n) and
/// one per y-coefficient of the chi_y expansion (p = 0..n; higher p
/// are redundant by palindromicity).
pub fn build_relations(n: usize) -> Result<RelationSystem, KummerError> {
    let instance = KummerInstance::new(n)?;
    let ctx = SymFuncContext::new(n);
    let mut rows = Vec::new();

    let deformed = todd_deformed(&ctx);
    let euler = kummer_euler_lambda(n);
    for j in 0..=n {
        let block = deformed.coeff(j);
        let coeffs: Vec<Rat> = instance.monomials.iter().map(|m| block.coeff(m)).collect();
        rows.push((RowProvenance::LambdaCoefficient(j), coeffs, euler.coeff(j)));
    }

    let integrand = chi_y_integrand(&ctx);
    let chi_y = chi_y_kummer(n);
    for p in 0..=n {
        let block = integrand.coeff(p);
        let coeffs: Vec<Rat> = instance.monomials.iter().map(|m| block.coeff(m)).collect();
        rows.push((RowProvenance::ChiYCoefficient(p), coeffs, chi_y.coeff(p)));
    }

    Ok(RelationSystem { instance, rows })
}

/// Solves the relation system exactly. Unique solutions are checked
/// for integrality; rank-deficient systems yield a report; an
/// inconsistent system is an error, never swallowed.
pub fn solve_chern_numbers(n: usize) -> Result<KummerSolve, KummerError> {
    let system = build_relations(n)?;
    let matrix = system.matrix();
    let rank = matrix.rank();
    match matrix.solve(&system.rhs()) {
        SolveOutcome::Inconsistent => Err(KummerError::InconsistentSystem(n)),
        SolveOutcome::Family {
            particular,
            nullspace,
        } => {
            let determined = system
                .instance
                .monomials
                .iter()
                .enumerate()
                .filter(|(idx, _)| nullspace.iter().all(|v| v[*idx].is_zero()))
                .map(|(idx, m)| (m.clone(), particular[idx].clone()))
                .collect();
            Ok(KummerSolve::RankDeficient {
                n,
                rank,
                unknowns: system.unknown_count(),
                determined,
            })
        }
        SolveOutcome::Unique(solution) => {
            let mut values = BTreeMap::new();
            for (monomial, value) in system.instance.monomials.iter().zip(&solution) {
                if !value.denom().is_one() {
                    return Err(KummerError::NonIntegerValue {
                        monomial: monomial.to_string(),
                        value: crate::arith::format_rat(value),
                    });
                }
                values.insert(monomial.clone(), value.numer().clone());
            }
            Ok(KummerSolve::Unique(ChernNumberTable {
                instance: system.instance,
                values,
                rank,
            }))
        }
    }
}

/// The two closed characteristic-number identities: the integrals of
/// the Todd class and of its square root against a solved table.
pub fn todd_integrals(table: &ChernNumberTable) -> (Rat, Rat) {
    let ctx = SymFuncContext::new(table.n());
    let values = table.rational_values();
    let td = integrate(&todd_symplectic(&ctx), &values).expect("table covers top weight");
    let root = integrate(&sqrt_todd(&ctx), &values).expect("table covers top weight");
    (td, root)
}
