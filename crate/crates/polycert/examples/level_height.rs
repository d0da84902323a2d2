//! Certificates at other heights, and persistence at higher levels.
//!
//! The slice {r = c} for c != 1 reduces to the unit-height case by scaling
//! the level form, and certificates transport across that rescaling by
//! scaling the cofactor. Separately, once a certificate exists at some
//! level it exists at every larger one; searching above the minimum keeps
//! succeeding.

use polycert::{
    find_min_level, parse_polynomial, rational, search_certificate, verify_certificate,
    LevelSearch, ProblemInstance, SearchOutcome,
};

fn main() {
    let f = parse_polynomial("1+x1", 2).unwrap();
    let r = parse_polynomial("x1+x2+x1^2", 2).unwrap();
    let height = rational(2, 1);

    let at_two = ProblemInstance::new(f, r, height.clone()).unwrap();
    println!("instance: f = {} on {{{} = 2}}", at_two.target(), at_two.level_form());

    let LevelSearch::Found(certificate) = find_min_level(&at_two, 8) else {
        panic!("fixture should certify");
    };
    println!("certified at level {} with q = {}", certificate.level, certificate.positive_part);
    println!();

    // Transport to the equivalent unit-height instance and back.
    let unit = at_two.with_unit_height();
    let transported = certificate.rescaled_to_unit();
    assert!(verify_certificate(&unit, &transported).passed());
    println!("rescaled instance: f on {{{} = 1}}", unit.level_form());
    println!("transported certificate verifies there, q unchanged, h scaled by 2");

    let back = transported.rescaled_from_unit(&height);
    assert!(verify_certificate(&at_two, &back).passed());
    assert_eq!(back.cofactor, certificate.cofactor);
    println!("and transporting back recovers the original cofactor");
    println!();

    for level in certificate.level + 1..=certificate.level + 3 {
        match search_certificate(&at_two, level) {
            SearchOutcome::Found(higher) => {
                assert!(verify_certificate(&at_two, &higher).passed());
                println!("level {level}: still certified, q = {}", higher.positive_part);
            }
            SearchOutcome::NotAtThisLevel => panic!("certificate vanished at level {level}"),
        }
    }
}
