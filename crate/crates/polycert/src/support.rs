//! Newton-support bookkeeping.
//!
//! The log set of a polynomial with nonnegative coefficients is the set of
//! exponent vectors of its terms. The calculus used throughout the crate:
//!
//! * `Log(p + p') = Log(p) ∪ Log(p')` and `Log(p * p') = Log(p) + Log(p')`
//!   (Minkowski sum), both valid because nonnegative coefficients cannot
//!   cancel.
//! * `Log(c * p) = Log(p)` for `c > 0`, and `Log(p^d) = d Log(p)` with the
//!   convention that the 0-fold Minkowski power is `{(0, ..., 0)}`.
//!
//! The certificate machinery relies on one precondition: the level form `r`
//! must have nonnegative coefficients and its log set must contain every
//! unit vector, i.e. every variable appears linearly in `r`.
//! [`check_precondition`] reports violations of both kinds.

use std::collections::BTreeSet;
use std::fmt;

use crate::poly::{MultiIndex, Rational, SparsePolynomial};
use crate::Error;

/// Finite set of exponent vectors of a fixed dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SupportSet {
    dimension: usize,
    members: BTreeSet<MultiIndex>,
}

impl SupportSet {
    pub fn empty(dimension: usize) -> Self {
        SupportSet { dimension, members: BTreeSet::new() }
    }

    /// The singleton `{(0, ..., 0)}`, the identity for Minkowski sums.
    pub fn origin(dimension: usize) -> Self {
        Self::from_indices(dimension, [MultiIndex::origin(dimension)])
    }

    pub fn from_indices<I>(dimension: usize, indices: I) -> Self
    where
        I: IntoIterator<Item = MultiIndex>,
    {
        let mut set = Self::empty(dimension);
        for index in indices {
            set.insert(index);
        }
        set
    }

    pub fn insert(&mut self, index: MultiIndex) {
        assert_eq!(
            index.dimension(),
            self.dimension,
            "multi-index dimension {} does not match support set dimension {}",
            index.dimension(),
            self.dimension
        );
        self.members.insert(index);
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, index: &MultiIndex) -> bool {
        self.members.contains(index)
    }

    /// Members in ascending graded-lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = &MultiIndex> {
        self.members.iter()
    }

    pub fn is_subset(&self, other: &SupportSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &SupportSet) -> SupportSet {
        assert_eq!(self.dimension, other.dimension, "dimension mismatch in union");
        SupportSet {
            dimension: self.dimension,
            members: self.members.union(&other.members).cloned().collect(),
        }
    }

    /// Minkowski sum `{a + b : a ∈ self, b ∈ other}`.
    pub fn minkowski_sum(&self, other: &SupportSet) -> SupportSet {
        assert_eq!(self.dimension, other.dimension, "dimension mismatch in Minkowski sum");
        let mut members = BTreeSet::new();
        for a in &self.members {
            for b in &other.members {
                members.insert(a.sum(b));
            }
        }
        SupportSet { dimension: self.dimension, members }
    }

    /// Iterated Minkowski sum of `power` copies; the 0-fold power is
    /// `{(0, ..., 0)}` even for the empty set.
    pub fn minkowski_power(&self, power: u32) -> SupportSet {
        let mut result = SupportSet::origin(self.dimension);
        for _ in 0..power {
            result = result.minkowski_sum(self);
        }
        result
    }
}

/// Exponent vectors of all terms, regardless of coefficient sign.
pub fn support_of(p: &SparsePolynomial) -> SupportSet {
    SupportSet {
        dimension: p.dimension(),
        members: p.terms().map(|(index, _)| index.clone()).collect(),
    }
}

/// The log set of `p`. Defined only for polynomials with nonnegative
/// coefficients; a negative coefficient is rejected so that the sum and
/// product identities of this module cannot silently break.
pub fn log_set(p: &SparsePolynomial) -> Result<SupportSet, Error> {
    if let Some((index, coefficient)) = p.first_negative_term() {
        let term = SparsePolynomial::monomial(p.dimension(), index.clone(), coefficient.clone());
        return Err(Error::NegativeCoefficient { term: term.to_string() });
    }
    Ok(support_of(p))
}

/// `⋃_{d=0}^{level} d Log(r)`: every exponent vector reachable as a sum of
/// at most `level` members of `Log(r)`, together with the origin. This is
/// the required support of the positive part of a certificate at `level`.
pub fn cumulative_support(r: &SparsePolynomial, level: u32) -> Result<SupportSet, Error> {
    if r.is_zero() {
        return Err(Error::ZeroLevelForm);
    }
    let base = log_set(r)?;
    let mut power = SupportSet::origin(r.dimension());
    let mut cumulative = power.clone();
    for _ in 0..level {
        power = power.minkowski_sum(&base);
        cumulative = cumulative.union(&power);
    }
    Ok(cumulative)
}

/// All exponent vectors of total degree exactly `degree` in `dimension`
/// variables.
pub fn grade_slice(dimension: usize, degree: u32) -> SupportSet {
    assert!(dimension > 0, "grade slice requires at least one variable");
    let mut members = BTreeSet::new();
    let mut current = vec![0u32; dimension];
    fill_slice(&mut members, &mut current, 0, degree);
    SupportSet { dimension, members }
}

fn fill_slice(
    members: &mut BTreeSet<MultiIndex>,
    current: &mut Vec<u32>,
    axis: usize,
    remaining: u32,
) {
    if axis + 1 == current.len() {
        current[axis] = remaining;
        members.insert(MultiIndex::new(current.clone()));
        current[axis] = 0;
        return;
    }
    for value in 0..=remaining {
        current[axis] = value;
        fill_slice(members, current, axis + 1, remaining - value);
        current[axis] = 0;
    }
}

/// Outcome of the level-form precondition check: which unit monomials are
/// absent from the support of `r`, and which terms of `r` carry negative
/// coefficients. The precondition holds when both lists are empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PreconditionReport {
    dimension: usize,
    /// 1-based variable numbers whose unit monomial is missing.
    pub missing_units: Vec<usize>,
    pub negative_terms: Vec<(MultiIndex, Rational)>,
}

impl PreconditionReport {
    pub fn passed(&self) -> bool {
        self.missing_units.is_empty() && self.negative_terms.is_empty()
    }
}

impl fmt::Display for PreconditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return f.write_str("level form satisfies the support precondition");
        }
        f.write_str("level form fails the support precondition")?;
        if !self.missing_units.is_empty() {
            let names: Vec<String> =
                self.missing_units.iter().map(|i| format!("x{}", i)).collect();
            write!(f, "; missing unit monomials: {}", names.join(", "))?;
        }
        if !self.negative_terms.is_empty() {
            let terms: Vec<String> = self
                .negative_terms
                .iter()
                .map(|(index, coefficient)| {
                    SparsePolynomial::monomial(self.dimension, index.clone(), coefficient.clone())
                        .to_string()
                })
                .collect();
            write!(f, "; negative terms: {}", terms.join(", "))?;
        }
        Ok(())
    }
}

/// Checks that every variable appears linearly in `r` and that no
/// coefficient is negative.
pub fn check_precondition(r: &SparsePolynomial) -> PreconditionReport {
    let support = support_of(r);
    let dimension = r.dimension();
    let missing_units = (0..dimension)
        .filter(|&axis| !support.contains(&MultiIndex::unit(dimension, axis)))
        .map(|axis| axis + 1)
        .collect();
    let negative_terms = r
        .terms()
        .filter(|(_, c)| c < &&Rational::from_integer(0.into()))
        .map(|(index, coefficient)| (index.clone(), coefficient.clone()))
        .collect();
    PreconditionReport { dimension, missing_units, negative_terms }
}
