//! The running fixture: certify f = 1 + x on the arc {x + y + x^2 = 1},
//! x, y >= 0, then confirm the identity by exact arithmetic.

use polycert::{
    find_min_level, parse_polynomial, rational, verify_certificate, LevelSearch,
    ProblemInstance,
};

fn main() {
    let f = parse_polynomial("1+x1", 2).unwrap();
    let r = parse_polynomial("x1+x2+x1^2", 2).unwrap();
    let instance = ProblemInstance::new(f, r, rational(1, 1)).unwrap();

    println!("target     f = {}", instance.target());
    println!("level form r = {}", instance.level_form());
    println!("slice: points x >= 0 with r(x) = 1");
    println!();

    match find_min_level(&instance, 8) {
        LevelSearch::Found(certificate) => {
            println!("minimal certificate level: {}", certificate.level);
            println!("  q = {}", certificate.positive_part);
            println!("  h = {}", certificate.cofactor);
            println!();
            println!("so f = q + h * (r - 1), and on the slice f = q > 0 by inspection.");
            println!();
            let report = verify_certificate(&instance, &certificate);
            println!("independent verification:");
            println!("{report}");
            assert!(report.passed());
        }
        LevelSearch::Exhausted { max_level } => {
            println!("no certificate up to level {max_level}");
        }
    }
}
