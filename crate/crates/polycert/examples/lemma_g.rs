//! The averaged power sum g = (1/(N+1)) * (1 + r + r^2 + ... + r^N).
//!
//! Two exact facts make g the workhorse behind level monotonicity: g is
//! congruent to 1 modulo (r - 1), and the support of g is exactly the
//! cumulative support that certificates at level N must fill. Multiplying
//! a certificate by g therefore transports it to a higher level without
//! breaking either the congruence or the support condition.

use polycert::{build_g, cumulative_support, log_set, parse_polynomial, rational, SparsePolynomial};

fn main() {
    let r = parse_polynomial("x1+x2+x1^2", 2).unwrap();
    println!("r = {r}");
    println!();

    for level in 0..=2 {
        let g = build_g(&r, level, &rational(1, 1)).unwrap();
        println!("N = {level}:  g = {g}");

        let one = SparsePolynomial::one(2);
        let shifted = &r - &one;
        let quotient = (&g - &one).divide_exact(&shifted).unwrap();
        println!("       g - 1 = ({quotient}) * (r - 1)");

        let support = log_set(&g).unwrap();
        assert_eq!(support, cumulative_support(&r, level).unwrap());
        let indices: Vec<String> = support
            .iter()
            .map(|index| {
                let parts: Vec<String> =
                    index.exponents().iter().map(u32::to_string).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        println!("       support = {{{}}}", indices.join(" "));
        println!();
    }
}
