//! Exact sparse multivariate polynomial arithmetic over the rationals.
//!
//! Polynomials are finite maps from exponent vectors to nonzero rational
//! coefficients. Every operation here is exact; floating-point evaluation
//! exists only as a convenience for the numerical falsifier and never feeds
//! back into certificate logic.
//!
//! Monomials are ordered by the graded-lexicographic order with
//! `x1 > x2 > ... > xn` (total degree first, then lexicographic on the
//! exponent vector). Division by a single divisor uses this order, so
//! remainders are canonical: a remainder contains no monomial divisible by
//! the divisor's leading monomial.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision exact rational scalar.
///
/// Values are always stored in canonical form: reduced fraction, positive
/// denominator, zero as `0/1`.
pub type Rational = BigRational;

/// Rational from an integer pair. Panics if `denom` is zero.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Exponent vector of a monomial: `(a1, ..., an)` stands for
/// `x1^a1 * ... * xn^an`. All indices taking part in one computation share
/// the ambient dimension `n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    /// The origin `(0, ..., 0)`, i.e. the constant monomial.
    pub fn origin(dimension: usize) -> Self {
        MultiIndex(vec![0; dimension])
    }

    /// The unit index for `x_{axis+1}` (0-based axis).
    pub fn unit(dimension: usize, axis: usize) -> Self {
        assert!(axis < dimension, "axis {} out of range for dimension {}", axis, dimension);
        let mut e = vec![0; dimension];
        e[axis] = 1;
        MultiIndex(e)
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise sum (monomial product).
    pub fn sum(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.0.len(), other.0.len());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// True when `self` divides `other` componentwise.
    pub fn divides(&self, other: &MultiIndex) -> bool {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise difference, `None` on underflow.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(MultiIndex)
    }

    /// Componentwise difference; caller must ensure `other.divides(self)`.
    fn quotient_by(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for MultiIndex {
    /// Graded-lexicographic: total degree first, then lexicographic with
    /// `x1 > x2 > ... > xn` (so `x1^2 > x1*x2 > x2^2` within a grade).
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len(), "comparing multi-indices of unequal dimension");
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Invariants: no stored coefficient is zero, every key has length equal to
/// `dimension`. Equality is structural, which makes it a decision procedure
/// for polynomial identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparsePolynomial {
    dimension: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl SparsePolynomial {
    pub fn zero(dimension: usize) -> Self {
        SparsePolynomial { dimension, terms: BTreeMap::new() }
    }

    pub fn one(dimension: usize) -> Self {
        Self::constant(dimension, Rational::one())
    }

    pub fn constant(dimension: usize, value: Rational) -> Self {
        let mut p = Self::zero(dimension);
        if !value.is_zero() {
            p.terms.insert(MultiIndex::origin(dimension), value);
        }
        p
    }

    /// The variable `x_{axis+1}` (0-based axis).
    pub fn variable(dimension: usize, axis: usize) -> Self {
        Self::monomial(dimension, MultiIndex::unit(dimension, axis), Rational::one())
    }

    pub fn monomial(dimension: usize, index: MultiIndex, coefficient: Rational) -> Self {
        let mut p = Self::zero(dimension);
        p.add_term(index, coefficient);
        p
    }

    /// Builds a polynomial from `(index, coefficient)` pairs. Duplicate
    /// indices are summed; zero coefficients are dropped.
    pub fn from_terms<I>(dimension: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        let mut p = Self::zero(dimension);
        for (index, coefficient) in terms {
            p.add_term(index, coefficient);
        }
        p
    }

    /// The linear form `x1 + ... + xn`.
    pub fn simplex_form(dimension: usize) -> Self {
        Self::from_terms(
            dimension,
            (0..dimension).map(|i| (MultiIndex::unit(dimension, i), Rational::one())),
        )
    }

    fn add_term(&mut self, index: MultiIndex, coefficient: Rational) {
        assert_eq!(
            index.dimension(),
            self.dimension,
            "multi-index dimension {} does not match polynomial dimension {}",
            index.dimension(),
            self.dimension
        );
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coefficient;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient at `index` (zero when absent).
    pub fn coefficient(&self, index: &MultiIndex) -> Rational {
        self.terms.get(index).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&MultiIndex::origin(self.dimension))
    }

    /// Total degree. `None` is the degree of the zero polynomial ("minus
    /// infinity"); it is never encoded as an ordinary integer.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(MultiIndex::total_degree).max()
    }

    /// Leading term under graded-lex, `None` for the zero polynomial.
    pub fn leading_term(&self) -> Option<(&MultiIndex, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(MultiIndex::total_degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn has_negative_coefficient(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }

    /// First (graded-lex smallest) term with a negative coefficient.
    pub fn first_negative_term(&self) -> Option<(&MultiIndex, &Rational)> {
        self.terms.iter().find(|(_, c)| c.is_negative())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.dimension);
        }
        SparsePolynomial {
            dimension: self.dimension,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * factor)).collect(),
        }
    }

    /// Exact power by repeated squaring; `p^0 = 1`.
    pub fn pow(&self, exponent: u32) -> Self {
        let mut result = Self::one(self.dimension);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.dimension, "point length does not match dimension");
        let mut total = Rational::zero();
        for (index, coefficient) in &self.terms {
            let mut term = coefficient.clone();
            for (value, &exp) in point.iter().zip(index.exponents()) {
                if exp > 0 {
                    term *= num_traits::pow(value.clone(), exp as usize);
                }
            }
            total += term;
        }
        total
    }

    /// Floating-point evaluation, for the falsifier only.
    pub fn evaluate_f64(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.dimension, "point length does not match dimension");
        let mut total = 0.0;
        for (index, coefficient) in &self.terms {
            let mut term = rational_to_f64(coefficient);
            for (value, &exp) in point.iter().zip(index.exponents()) {
                if exp > 0 {
                    term *= value.powi(exp as i32);
                }
            }
            total += term;
        }
        total
    }

    /// Quotient and remainder under single-divisor division in graded-lex
    /// order. The remainder contains no monomial divisible by the divisor's
    /// leading monomial, so it is canonical for the fixed order.
    ///
    /// Panics if `divisor` is the zero polynomial.
    pub fn div_rem(&self, divisor: &SparsePolynomial) -> (SparsePolynomial, SparsePolynomial) {
        assert_eq!(self.dimension, divisor.dimension, "dimension mismatch in division");
        assert!(!divisor.is_zero(), "division by the zero polynomial");

        let (divisor_lead, divisor_lead_coeff) = divisor.leading_term().unwrap();
        let divisor_lead = divisor_lead.clone();
        let divisor_lead_coeff = divisor_lead_coeff.clone();

        let mut quotient = SparsePolynomial::zero(self.dimension);
        let mut remainder = SparsePolynomial::zero(self.dimension);
        let mut work = self.clone();

        // Each pass strictly lowers the leading monomial of `work` in the
        // graded-lex well-order, so the loop terminates.
        while let Some((lead, coeff)) = work.leading_term() {
            if divisor_lead.divides(lead) {
                let factor_index = lead.quotient_by(&divisor_lead);
                let factor_coeff = coeff / &divisor_lead_coeff;
                let factor =
                    SparsePolynomial::monomial(self.dimension, factor_index, factor_coeff);
                work = &work - &(&factor * divisor);
                quotient = &quotient + &factor;
            } else {
                let (lead, coeff) = (lead.clone(), coeff.clone());
                work.terms.remove(&lead);
                remainder.add_term(lead, coeff);
            }
        }
        (quotient, remainder)
    }

    /// Exact quotient `h` with `self = h * divisor`, or `None` when the
    /// divisor does not divide `self`. Panics on a zero divisor.
    pub fn divide_exact(&self, divisor: &SparsePolynomial) -> Option<SparsePolynomial> {
        let (quotient, remainder) = self.div_rem(divisor);
        remainder.is_zero().then_some(quotient)
    }

    /// Canonical remainder of `self` modulo `divisor`: `self - remainder`
    /// is exactly divisible by `divisor`. Panics on a zero divisor.
    pub fn reduce_mod(&self, divisor: &SparsePolynomial) -> SparsePolynomial {
        self.div_rem(divisor).1
    }

    /// Parses the ASCII polynomial grammar (see [`crate::parse`]).
    pub fn parse(text: &str, dimension: usize) -> Result<Self, crate::parse::ParseError> {
        crate::parse::parse_polynomial(text, dimension)
    }
}

pub(crate) fn rational_to_f64(value: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(value).unwrap_or(f64::NAN)
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.dimension, rhs.dimension, "dimension mismatch in addition");
        let mut out = self.clone();
        for (index, coefficient) in &rhs.terms {
            out.add_term(index.clone(), coefficient.clone());
        }
        out
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.dimension, rhs.dimension, "dimension mismatch in subtraction");
        let mut out = self.clone();
        for (index, coefficient) in &rhs.terms {
            out.add_term(index.clone(), -coefficient.clone());
        }
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn neg(self) -> SparsePolynomial {
        SparsePolynomial {
            dimension: self.dimension,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;

    /// Convolution product, exact.
    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.dimension, rhs.dimension, "dimension mismatch in multiplication");
        let mut out = SparsePolynomial::zero(self.dimension);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.sum(b), ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(n: usize, i: usize) -> SparsePolynomial {
        SparsePolynomial::variable(n, i)
    }

    fn int(n: i64) -> Rational {
        rational(n, 1)
    }

    #[test]
    fn graded_lex_orders_by_degree_then_lex() {
        let a = MultiIndex::new(vec![2, 0]);
        let b = MultiIndex::new(vec![1, 1]);
        let c = MultiIndex::new(vec![0, 2]);
        let d = MultiIndex::new(vec![1, 0]);
        assert!(a > b && b > c);
        assert!(c > d);
        assert!(MultiIndex::origin(2) < d);
    }

    #[test]
    fn add_cancels_constants() {
        // (x + 1) + (x^2 - 1) = x^2 + x
        let n = 1;
        let x = var(n, 0);
        let p = &x + &SparsePolynomial::one(n);
        let q = &x.pow(2) - &SparsePolynomial::one(n);
        let sum = &p + &q;
        assert_eq!(sum, &x.pow(2) + &x);
    }

    #[test]
    fn add_zero_is_identity() {
        let n = 2;
        let p = &var(n, 0) + &var(n, 1).pow(3);
        assert_eq!(&p + &SparsePolynomial::zero(n), p);
    }

    #[test]
    fn add_additive_inverse_gives_zero() {
        let n = 2;
        let p = &var(n, 0) - &var(n, 1);
        let q = &var(n, 1) - &var(n, 0);
        assert!((&p + &q).is_zero());
    }

    #[test]
    fn mul_sum_of_cubes_identity() {
        // (x + y)(x^2 - xy + y^2) = x^3 + y^3
        let n = 2;
        let (x, y) = (var(n, 0), var(n, 1));
        let lhs = &(&x + &y) * &(&(&x.pow(2) - &(&x * &y)) + &y.pow(2));
        assert_eq!(lhs, &x.pow(3) + &y.pow(3));
    }

    #[test]
    fn mul_one_is_identity() {
        let n = 2;
        let p = &var(n, 0).pow(2) - &var(n, 1).scale(&rational(3, 2));
        assert_eq!(&p * &SparsePolynomial::one(n), p);
    }

    #[test]
    fn square_of_binomial() {
        let n = 2;
        let (x, y) = (var(n, 0), var(n, 1));
        let square = (&x + &y).pow(2);
        let expected = &(&x.pow(2) + &(&x * &y).scale(&int(2))) + &y.pow(2);
        assert_eq!(square, expected);
    }

    #[test]
    fn pow_zero_is_one() {
        let n = 2;
        assert_eq!((&var(n, 0) + &var(n, 1)).pow(0), SparsePolynomial::one(n));
    }

    #[test]
    fn pow_of_monomial() {
        let n = 1;
        assert_eq!(var(n, 0).pow(2).pow(3), var(n, 0).pow(6));
    }

    #[test]
    fn degree_of_zero_is_none() {
        assert_eq!(SparsePolynomial::zero(3).degree(), None);
        assert_eq!(SparsePolynomial::one(3).degree(), Some(0));
        assert_eq!(var(3, 1).pow(4).degree(), Some(4));
    }

    #[test]
    fn evaluate_parabola_endpoint() {
        // r = x + y + x^2 at (0, 1) evaluates to 1.
        let n = 2;
        let r = &(&var(n, 0) + &var(n, 1)) + &var(n, 0).pow(2);
        assert_eq!(r.evaluate(&[int(0), int(1)]), int(1));
    }

    #[test]
    fn evaluate_at_origin_gives_constant_term() {
        let n = 2;
        let p = &(&var(n, 0).pow(2) + &var(n, 1)) + &SparsePolynomial::constant(n, rational(7, 3));
        assert_eq!(p.evaluate(&[int(0), int(0)]), rational(7, 3));
    }

    #[test]
    fn evaluate_f64_parabola_endpoint() {
        // r = x + y + x^2 at ((sqrt 5 - 1)/2, 0) evaluates to 1.
        let n = 2;
        let r = &(&var(n, 0) + &var(n, 1)) + &var(n, 0).pow(2);
        let golden = (5.0f64.sqrt() - 1.0) / 2.0;
        assert!((r.evaluate_f64(&[golden, 0.0]) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn divide_exact_factorization() {
        // (x^3 - x) / (x^2 - 1) = x
        let n = 1;
        let x = var(n, 0);
        let p = &x.pow(3) - &x;
        let g = &x.pow(2) - &SparsePolynomial::one(n);
        assert_eq!(p.divide_exact(&g), Some(x));
    }

    #[test]
    fn divide_exact_degree_obstruction() {
        let n = 1;
        let x = var(n, 0);
        let p = &x - &SparsePolynomial::one(n);
        let g = &x.pow(2) - &SparsePolynomial::one(n);
        assert_eq!(p.divide_exact(&g), None);
    }

    #[test]
    fn divide_exact_recovers_cofactor() {
        // p = (x + y + x^2 - 1)(3 - y) divided by the first factor.
        let n = 2;
        let (x, y) = (var(n, 0), var(n, 1));
        let g = &(&(&x + &y) + &x.pow(2)) - &SparsePolynomial::one(n);
        let h = &SparsePolynomial::constant(n, int(3)) - &y;
        let p = &g * &h;
        assert_eq!(p.divide_exact(&g), Some(h));
    }

    #[test]
    #[should_panic(expected = "zero polynomial")]
    fn divide_by_zero_panics() {
        let n = 1;
        var(n, 0).div_rem(&SparsePolynomial::zero(n));
    }

    #[test]
    fn reduce_mod_examples() {
        let n = 1;
        let x = var(n, 0);
        let g = &x.pow(2) - &SparsePolynomial::one(n);
        // x^2 mod (x^2 - 1) = 1
        assert_eq!(x.pow(2).reduce_mod(&g), SparsePolynomial::one(n));
        // 2(x^2 - 1) mod (x^2 - 1) = 0
        assert!(g.scale(&int(2)).reduce_mod(&g).is_zero());
        // x mod (x^2 - 1) = x
        assert_eq!(x.reduce_mod(&g), x);
    }

    #[test]
    fn reduce_mod_difference_is_divisible() {
        let n = 2;
        let (x, y) = (var(n, 0), var(n, 1));
        let p = &(&x.pow(3) + &(&x * &y).scale(&rational(5, 2))) - &y;
        let g = &(&x + &y.pow(2)) - &SparsePolynomial::one(n);
        let reduced = p.reduce_mod(&g);
        assert!((&p - &reduced).divide_exact(&g).is_some());
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn mixed_dimension_addition_panics() {
        let _ = &var(1, 0) + &var(2, 0);
    }
}
