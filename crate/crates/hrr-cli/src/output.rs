//! Rendering of exact results as tables, plain text, JSON and CSV.
//! Fractions are always `p/q`; integers drop the denominator; JSON
//! keys are emitted in a fixed order so repeated runs are
//! byte-identical.

use crate::TableFormat;
use hrr_core::arith::{format_rat, Rat};
use hrr_core::charclass::{ChernMonomial, ChernPolynomial, LambdaSeries, YPolynomial};
use hrr_core::graphhom::QuotientBasis;
use hrr_core::kummer::ChernNumberTable;
use serde_json::json;

pub fn print_chern_table(table: &ChernNumberTable, format: TableFormat) {
    match format {
        TableFormat::Table | TableFormat::Text => {
            println!(
                "Chern numbers of the generalized Kummer variety, n = {}",
                table.n()
            );
            for (monomial, value) in table.entries() {
                println!("  {monomial} = {value}");
            }
        }
        TableFormat::Csv => {
            println!("monomial,value");
            for (monomial, value) in table.entries() {
                println!("{monomial},{value}");
            }
        }
        TableFormat::Json => {
            let numbers: Vec<_> = table
                .entries()
                .iter()
                .map(|(m, v)| json!({"monomial": m.to_string(), "value": v.to_string()}))
                .collect();
            let doc = json!({
                "n": table.n(),
                "rank": table.rank(),
                "unique": true,
                "chern_numbers": numbers,
            });
            println!("{doc}");
        }
    }
}

pub fn print_rank_report(
    n: usize,
    rank: usize,
    unknowns: usize,
    rows: usize,
    determined: &[(ChernMonomial, Rat)],
    format: TableFormat,
) {
    match format {
        TableFormat::Table | TableFormat::Text => {
            println!("n = {n}: rank-deficient system");
            println!("  relations generated: {rows}");
            println!("  rank: {rank}");
            println!("  unknown Chern monomials: {unknowns}");
            println!("  undetermined directions: {}", unknowns - rank);
            for (monomial, value) in determined {
                println!("  determined anyway: {monomial} = {}", format_rat(value));
            }
        }
        TableFormat::Csv => {
            println!("n,rank,unknowns,rows");
            println!("{n},{rank},{unknowns},{rows}");
        }
        TableFormat::Json => {
            let determined: Vec<_> = determined
                .iter()
                .map(|(m, v)| json!({"monomial": m.to_string(), "value": format_rat(v)}))
                .collect();
            let doc = json!({
                "n": n,
                "rank": rank,
                "unique": false,
                "chern_numbers": [],
                "unknowns": unknowns,
                "rows": rows,
                "determined": determined,
            });
            println!("{doc}");
        }
    }
}

pub fn print_lambda_series(n: usize, series: &LambdaSeries, format: TableFormat) {
    match format {
        TableFormat::Table | TableFormat::Text => {
            println!("deformed Todd class, n = {n} (weights up to {n})");
            for j in 0..=series.lambda_degree() {
                println!("  lambda^{j}: {}", series.coeff(j).to_text());
            }
        }
        TableFormat::Csv => {
            println!("lambda_power,monomial,value");
            for j in 0..=series.lambda_degree() {
                for (monomial, coeff) in series.coeff(j).terms() {
                    println!("{j},{monomial},{}", format_rat(coeff));
                }
            }
        }
        TableFormat::Json => {
            let coefficients: Vec<_> = (0..=series.lambda_degree())
                .map(|j| {
                    let terms: Vec<_> = series
                        .coeff(j)
                        .terms()
                        .map(|(m, c)| json!({"monomial": m.to_string(), "value": format_rat(c)}))
                        .collect();
                    json!({"lambda_power": j, "terms": terms})
                })
                .collect();
            let doc = json!({"n": n, "coefficients": coefficients});
            println!("{doc}");
        }
    }
}

pub fn print_basis(basis: &QuotientBasis, format: TableFormat) {
    let (u, t) = basis.bidegree();
    match format {
        TableFormat::Table | TableFormat::Text => {
            println!("graph homology at bidegree (legs = {u}, trivalent = {t})");
            println!("  spanning diagram classes: {}", basis.spanning_count());
            println!("  relations generated: {}", basis.relation_count());
            println!("  relation rank: {}", basis.relation_rank());
            println!("  quotient dimension: {}", basis.dimension());
            for diagram in basis.basis_diagrams() {
                println!("  basis: {}", diagram.token());
            }
        }
        TableFormat::Csv => {
            println!("legs,trivalent,spanning,relations,rank,dimension");
            println!(
                "{u},{t},{},{},{},{}",
                basis.spanning_count(),
                basis.relation_count(),
                basis.relation_rank(),
                basis.dimension()
            );
        }
        TableFormat::Json => {
            let diagrams: Vec<_> = basis.basis_diagrams().iter().map(|d| d.token()).collect();
            let doc = json!({
                "legs": u,
                "trivalent": t,
                "spanning": basis.spanning_count(),
                "relations": basis.relation_count(),
                "rank": basis.relation_rank(),
                "dimension": basis.dimension(),
                "basis": diagrams,
            });
            println!("{doc}");
        }
    }
}

pub fn print_chern_polynomial(
    name: &str,
    n: usize,
    polynomial: &ChernPolynomial,
    format: TableFormat,
) {
    match format {
        TableFormat::Table | TableFormat::Text => {
            println!("{name}, n = {n}");
            println!("  {}", polynomial.to_text());
        }
        TableFormat::Csv => {
            println!("monomial,value");
            for (monomial, coeff) in polynomial.terms() {
                println!("{monomial},{}", format_rat(coeff));
            }
        }
        TableFormat::Json => {
            let terms: Vec<_> = polynomial
                .terms()
                .map(|(m, c)| json!({"monomial": m.to_string(), "value": format_rat(c)}))
                .collect();
            let doc = json!({"n": n, "terms": terms});
            println!("{doc}");
        }
    }
}

pub fn print_y_polynomial(n: usize, polynomial: &YPolynomial, format: TableFormat) {
    match format {
        TableFormat::Table | TableFormat::Text => {
            println!("chi_y integrand, n = {n}");
            for p in 0..=polynomial.y_degree() {
                println!("  y^{p}: {}", polynomial.coeff(p).to_text());
            }
        }
        TableFormat::Csv => {
            println!("y_power,monomial,value");
            for p in 0..=polynomial.y_degree() {
                for (monomial, coeff) in polynomial.coeff(p).terms() {
                    println!("{p},{monomial},{}", format_rat(coeff));
                }
            }
        }
        TableFormat::Json => {
            let coefficients: Vec<_> = (0..=polynomial.y_degree())
                .map(|p| {
                    let terms: Vec<_> = polynomial
                        .coeff(p)
                        .terms()
                        .map(|(m, c)| json!({"monomial": m.to_string(), "value": format_rat(c)}))
                        .collect();
                    json!({"y_power": p, "terms": terms})
                })
                .collect();
            let doc = json!({"n": n, "coefficients": coefficients});
            println!("{doc}");
        }
    }
}
