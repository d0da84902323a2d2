//! Polya's theorem as the special case r = x1 + ... + xn, c = 1.
//!
//! For a form p strictly positive on the standard simplex, some power
//! (x1 + ... + xn)^N * p has only positive coefficients. The classical
//! example x^2 - xy + y^2 needs N = 3. Two independent routes compute the
//! minimal N: direct coefficient expansion, and the exact LP solver asked
//! to maximize the smallest normalized coefficient.

use polycert::{cross_check_polya, parse_polynomial, polya_expand};

fn main() {
    let p = parse_polynomial("x1^2-x1*x2+x2^2", 2).unwrap();
    println!("p = {p}");
    println!();

    for level in 0..=3 {
        let report = polya_expand(&p, level).unwrap();
        let verdict = if report.passed() { "all coefficients positive" } else { "not yet" };
        println!("(x1+x2)^{level} * p = {}", report.expansion);
        println!("  {verdict}");
        if !report.missing.is_empty() {
            let gaps: Vec<String> = report
                .missing
                .iter()
                .map(|index| {
                    let parts: Vec<String> =
                        index.exponents().iter().map(u32::to_string).collect();
                    format!("({})", parts.join(","))
                })
                .collect();
            println!("  monomials still absent: {}", gaps.join(" "));
        }
        println!();
    }

    let check = cross_check_polya(&p, 8).unwrap();
    println!("minimal level by expansion: {:?}", check.expansion_level);
    println!("minimal level by LP:        {:?}", check.lp_level);
    assert!(check.agrees());
    assert_eq!(check.expansion_level, Some(3));
}
