//! The numerical falsifier: the other half of the decision loop.
//!
//! Certificate search can confirm positivity but never refute it. The
//! falsifier scans rays through a barycentric grid of directions, solves
//! r(t * u) = c for t by bisection, and reports any slice point where f
//! fails to be positive. A found witness refutes; an empty scan proves
//! nothing.

use polycert::{falsify, parse_polynomial, rational, ray_solve, ProblemInstance};

fn main() {
    let r = parse_polynomial("x1+x2+x1^2", 2).unwrap();

    // f = x - 1 is negative at the slice endpoint (0, 1).
    let f = parse_polynomial("x1-1", 2).unwrap();
    let negative = ProblemInstance::new(f, r.clone(), rational(1, 1)).unwrap();

    let endpoint = ray_solve(&negative, &[1.0, 0.0], 1e-12).unwrap().unwrap();
    println!("slice endpoint along x: ({:.10}, {:.10})", endpoint[0], endpoint[1]);
    println!("(the golden ratio conjugate, root of t + t^2 = 1)");
    println!();

    match falsify(&negative, 64, 1e-9).unwrap() {
        Some(witness) => {
            println!("f = x1-1 refuted:");
            println!("  point    ({:.10}, {:.10})", witness.point[0], witness.point[1]);
            println!("  f value  {:.3e}", witness.f_value);
            println!("  residual {:.3e}", witness.r_residual);
            assert!(witness.f_value <= 1e-9);
        }
        None => panic!("the witness at (0, 1) should be found"),
    }
    println!();

    // The same scan on a positive target comes back empty, which decides
    // nothing by itself; pair it with the certificate search.
    let f = parse_polynomial("1+x1", 2).unwrap();
    let positive = ProblemInstance::new(f, r, rational(1, 1)).unwrap();
    match falsify(&positive, 64, 1e-9).unwrap() {
        Some(witness) => panic!("false witness at {:?}", witness.point),
        None => println!("f = 1+x1: no witness on the same grid (not a proof)"),
    }
}
