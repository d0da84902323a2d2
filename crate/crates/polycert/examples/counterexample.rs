//! Why the level form must contain every variable linearly.
//!
//! Take r = x^2 with height 1. Its slice is the single point x = 1, where
//! f = x is clearly positive. Yet f has no certificate at any level: every
//! q congruent to f modulo (x^2 - 1) with support in the cumulative
//! support of r must carry the jump from f's odd part, and no level ever
//! heals that. The precondition check rejects r up front; bypassing the
//! check shows the search honestly exhausting.

use polycert::{
    check_precondition, find_min_level, parse_polynomial, rational, LevelSearch,
    ProblemInstance,
};

fn main() {
    let f = parse_polynomial("x1", 1).unwrap();
    let r = parse_polynomial("x1^2", 1).unwrap();

    let report = check_precondition(&r);
    println!("precondition on r = {r}: {report}");
    assert!(!report.passed());
    assert_eq!(report.missing_units, vec![1]);
    println!();

    let rejected = ProblemInstance::new(f.clone(), r.clone(), rational(1, 1));
    println!("ProblemInstance::new: {}", rejected.unwrap_err());
    println!();

    let bypassed = ProblemInstance::new_without_precondition(f, r, rational(1, 1)).unwrap();
    println!("bypassing the check and searching anyway:");
    match find_min_level(&bypassed, 8) {
        LevelSearch::Exhausted { max_level } => {
            println!("  no certificate at any level up to {max_level}, as predicted");
        }
        LevelSearch::Found(certificate) => {
            panic!("unexpected certificate at level {}", certificate.level);
        }
    }
}
