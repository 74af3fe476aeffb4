//! The `verify` subcommands: each runs one family of exact identity
//! checks and prints one line per check slice followed by a summary
//! line. Exit code 0 when every defect vanishes, 1 otherwise.

use crate::{VerifyCommand, EXIT_INTERNAL, EXIT_OK};
use hrr_core::graphhom::{
    lemma_bernoulli_defect, verify_exp_partial_pairing, verify_omega_eigen,
    verify_strut_pairing_adjunction, verify_wheel_laws, BasisContext, IdentityReport,
};
use hrr_core::multilinear::laexp_sweep;

pub fn run(cmd: VerifyCommand) -> Result<u8, String> {
    match cmd {
        VerifyCommand::Omega { max_degree, cache } => {
            let ctx = BasisContext::with_cache_dir(cache);
            let defects = verify_omega_eigen(&ctx, max_degree).map_err(|e| e.to_string())?;
            let mut bad = 0;
            for defect in &defects {
                let ok = defect.is_zero();
                println!(
                    "eigen slice mu^{} at bidegree {:?}: {}",
                    defect.mu_power,
                    defect.bidegree,
                    if ok { "zero" } else { "NONZERO" }
                );
                if !ok {
                    bad += 1;
                }
            }
            summary(bad)
        }
        VerifyCommand::Laexp { max_n } => {
            if !(1..=4).contains(&max_n) {
                return Err("--max-n must be between 1 and 4".into());
            }
            let (checks, failures) = laexp_sweep(max_n, 50, 0x5eed);
            println!(
                "exp-sigma projection identity: {checks} checks through half-dimension {max_n}"
            );
            for failure in &failures {
                println!("  defect: {failure}");
            }
            summary(failures.len())
        }
        VerifyCommand::Wheels { cache } => {
            let ctx = BasisContext::with_cache_dir(cache);
            let report = verify_wheel_laws(&ctx).map_err(|e| e.to_string())?;
            print_report("wheel glueing laws", &report);
            summary(report.failures.len())
        }
        VerifyCommand::BernoulliLemma { max_weight } => {
            let defect = lemma_bernoulli_defect(max_weight);
            println!(
                "Bernoulli cubic identity through weight {max_weight}: {}",
                if defect.is_zero() {
                    "zero defect"
                } else {
                    "NONZERO defect"
                }
            );
            if defect.is_zero() {
                summary(0)
            } else {
                println!("  defect: {}", defect.to_text());
                summary(1)
            }
        }
        VerifyCommand::ScpPartial { max_degree, cache } => {
            let ctx = BasisContext::with_cache_dir(cache);
            let adjunction =
                verify_strut_pairing_adjunction(&ctx, max_degree).map_err(|e| e.to_string())?;
            print_report("strut pairing adjunction", &adjunction);
            let pairing =
                verify_exp_partial_pairing(&ctx, max_degree).map_err(|e| e.to_string())?;
            print_report("exp-partial pairing compatibility", &pairing);
            summary(adjunction.failures.len() + pairing.failures.len())
        }
    }
}

fn print_report(name: &str, report: &IdentityReport) {
    println!("{name}: {} checks", report.checks);
    for failure in &report.failures {
        println!("  defect: {failure}");
    }
}

fn summary(defects: usize) -> Result<u8, String> {
    if defects == 0 {
        println!("OK (0 defects)");
        Ok(EXIT_OK)
    } else {
        println!("FAILED ({defects} defects)");
        Ok(EXIT_INTERNAL)
    }
}
