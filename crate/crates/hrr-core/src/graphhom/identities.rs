//! Exact verification of the structural identities of the glueing
//! calculus: the wheel expansion laws, the adjunction between strut
//! multiplication and the glueing operator, and the compatibility of
//! the leg pairing with the glueing exponential. Each check reduces an
//! exact defect in the AS/IHX quotient and reports any nonzero
//! coordinates.

use super::diagram::JacobiDiagram;
use super::quotient::BasisContext;
use super::vector::GraphVector;
use super::GraphError;
use crate::arith::{rat, rat_int};

/// Outcome of one identity sweep: how many instances were checked and
/// a description of every failure (empty means the identity held
/// everywhere).
#[derive(Clone, Debug, Default)]
pub struct IdentityReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, passed: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !passed {
            self.failures.push(describe());
        }
    }
}

/// The wheel glueing laws.
///
/// Glueing two legs of the 2k-wheel in all ways expands into double
/// wheels with multiplicity k per arc splitting; this holds exactly,
/// before any IHX reduction, and is checked for k up to 3. The
/// bilinear cross-glueing of two wheels equals 8 i j times the
/// odd-arc double wheel only in the quotient; checked for i + j up
/// to 3.
pub fn verify_wheel_laws(ctx: &BasisContext) -> Result<IdentityReport, GraphError> {
    let mut report = IdentityReport::default();
    for k in 1..=3usize {
        let lhs = GraphVector::from_diagram(&JacobiDiagram::wheel(2 * k)).partial()?;
        let mut rhs = GraphVector::zero();
        for m in 0..=2 * k - 2 {
            rhs = rhs.add(&GraphVector::from_diagram(&JacobiDiagram::double_wheel(
                m,
                2 * k - 2 - m,
            )));
        }
        let rhs = rhs.scale(&rat_int(k as i64));
        report.check(lhs == rhs, || {
            format!("wheel expansion law fails for k = {k}")
        });
    }
    for i in 1..=2usize {
        for j in 1..=2usize {
            if i + j > 3 {
                continue;
            }
            let wi = GraphVector::from_diagram(&JacobiDiagram::wheel(2 * i));
            let wj = GraphVector::from_diagram(&JacobiDiagram::wheel(2 * j));
            let lhs = wi.partial_bilinear(&wj)?;
            let rhs = GraphVector::from_diagram(&JacobiDiagram::double_wheel(2 * i - 1, 2 * j - 1))
                .scale(&rat_int(8 * (i * j) as i64));
            let defect = lhs.sub(&rhs);
            report.check(ctx.reduces_to_zero(&defect)?, || {
                format!("bilinear wheel law fails in the quotient for (i, j) = ({i}, {j})")
            });
        }
    }
    Ok(report)
}

/// Adjunction between strut multiplication and glueing: pairing gamma
/// against half a strut times gamma' equals pairing the glued gamma
/// against gamma'. Checked for all pairs of spanning diagram classes
/// with total degree at most `max_degree` (gamma strut-free).
pub fn verify_strut_pairing_adjunction(
    ctx: &BasisContext,
    max_degree: usize,
) -> Result<IdentityReport, GraphError> {
    let mut report = IdentityReport::default();
    let strut = GraphVector::from_diagram(&JacobiDiagram::strut());
    for (gamma, gamma2, _) in diagram_pairs(ctx, max_degree)? {
        if gamma.has_strut() {
            continue;
        }
        let lhs = gamma.pairing(&strut.scale(&rat(1, 2)).union(&gamma2))?;
        let rhs = gamma.partial()?.pairing(&gamma2)?;
        let defect = lhs.sub(&rhs);
        report.check(ctx.reduces_to_zero(&defect)?, || {
            format!(
                "strut adjunction fails for pair at bidegrees {:?} / {:?}",
                gamma.bidegrees(),
                gamma2.bidegrees()
            )
        });
    }
    Ok(report)
}

/// Compatibility of the leg pairing with the glueing exponential:
/// projecting exp(partial) of a product to its trivalent part equals
/// pairing the exp(partial) images of the factors. Checked for all
/// strut-free spanning pairs with total degree at most `max_degree`.
pub fn verify_exp_partial_pairing(
    ctx: &BasisContext,
    max_degree: usize,
) -> Result<IdentityReport, GraphError> {
    let mut report = IdentityReport::default();
    let one = GraphVector::one();
    for (gamma, gamma2, _) in diagram_pairs(ctx, max_degree)? {
        if gamma.has_strut() || gamma2.has_strut() {
            continue;
        }
        let lhs = gamma.union(&gamma2).exp_partial()?.pairing(&one)?;
        let rhs = gamma.exp_partial()?.pairing(&gamma2.exp_partial()?)?;
        let defect = lhs.sub(&rhs);
        report.check(ctx.reduces_to_zero(&defect)?, || {
            format!(
                "exp-partial pairing fails for pair at bidegrees {:?} / {:?}",
                gamma.bidegrees(),
                gamma2.bidegrees()
            )
        });
    }
    Ok(report)
}

type DiagramPair = (GraphVector, GraphVector, (usize, usize));

/// All ordered pairs of spanning diagram classes whose total degree is
/// at most the cap, as single-diagram vectors.
fn diagram_pairs(ctx: &BasisContext, max_degree: usize) -> Result<Vec<DiagramPair>, GraphError> {
    let mut singles = Vec::new();
    for degree in (0..=max_degree).step_by(2) {
        for u in 0..=degree {
            let t = degree - u;
            let basis = ctx.basis(u, t)?;
            for diagram in basis.diagrams() {
                singles.push((
                    degree,
                    GraphVector::from_canonical(diagram.clone(), rat_int(1)),
                ));
            }
        }
    }
    let mut pairs = Vec::new();
    for (da, a) in &singles {
        for (db, b) in &singles {
            if da + db <= max_degree {
                pairs.push((a.clone(), b.clone(), (*da, *db)));
            }
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheel_laws_hold() {
        let ctx = BasisContext::in_memory();
        let report = verify_wheel_laws(&ctx).unwrap();
        assert!(report.all_passed(), "{:?}", report.failures);
        assert_eq!(report.checks, 6);
    }

    #[test]
    fn strut_adjunction_holds_at_low_degree() {
        let ctx = BasisContext::in_memory();
        let report = verify_strut_pairing_adjunction(&ctx, 4).unwrap();
        assert!(report.all_passed(), "{:?}", report.failures);
        assert!(report.checks > 0);
    }

    #[test]
    fn exp_partial_pairing_holds_at_low_degree() {
        let ctx = BasisContext::in_memory();
        let report = verify_exp_partial_pairing(&ctx, 4).unwrap();
        assert!(report.all_passed(), "{:?}", report.failures);
        assert!(report.checks > 0);
    }
}
