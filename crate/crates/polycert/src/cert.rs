//! Certificate search, verification, and serialization.
//!
//! A [`Certificate`] at level `N` for an instance `(f, r, c)` is a pair of
//! polynomials `(q, h)` with
//!
//! * `f = q + h * (r - c)` as an exact identity,
//! * every coefficient of `q` strictly positive, and
//! * the support of `q` exactly the cumulative support
//!   `⋃_{d=0}^{N} d Log(r)`.
//!
//! On the slice `x >= 0, r(x) = c` the cofactor term vanishes, so `f`
//! agrees with `q` there. Full cumulative support matters: it pins a
//! positive constant term, so `q` (and hence `f`) is bounded away from zero
//! on the whole slice, including boundary points where some variables
//! vanish. A certificate is therefore a proof of strict positivity that can
//! be checked by polynomial arithmetic alone.
//!
//! Search at a fixed level is a linear program over the unknown
//! coefficients of `q` and `h`: the identity is linear in both, and
//! maximizing the smallest coefficient of `q` (capped at 1 to keep the
//! program bounded) decides whether a strictly positive choice exists. The
//! LP is solved exactly, so search answers are definitive per level. Across
//! levels the method is a semidecision procedure: certificates persist from
//! level `N` to `N + 1` (multiply `q` by the averaged power sum `g_1` of
//! [`build_g`]), so scanning levels upward finds the minimal one, but
//! exhausting a level cap proves nothing about larger levels.
//!
//! The Polya route ([`polya_expand`]) handles the classical special case
//! `r = x1 + ... + xn`, `c = 1` with homogeneous input by direct expansion,
//! and [`cross_check_polya`] replays its verdict through the LP solver as
//! an independent check of both components.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::lp::{LinearProgram, LpOutcome};
use crate::parse::{format_rational, parse_polynomial, parse_rational};
use crate::poly::{MultiIndex, Rational, SparsePolynomial};
use crate::support::{check_precondition, cumulative_support, grade_slice, support_of, SupportSet};
use crate::Error;

/// A positivity question: is `target` strictly positive on the slice
/// `x >= 0`, `level_form(x) = height`?
///
/// Construction validates the hypotheses the certificate theory needs;
/// every other API in this module may assume them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProblemInstance {
    target: SparsePolynomial,
    level_form: SparsePolynomial,
    height: Rational,
}

impl ProblemInstance {
    /// Validates dimensions, positivity of the height, and the support
    /// precondition on the level form (nonnegative coefficients, every
    /// variable present linearly).
    pub fn new(
        target: SparsePolynomial,
        level_form: SparsePolynomial,
        height: Rational,
    ) -> Result<Self, Error> {
        let instance = Self::new_without_precondition(target, level_form, height)?;
        let report = check_precondition(&instance.level_form);
        if !report.passed() {
            return Err(Error::PreconditionFailed(report));
        }
        Ok(instance)
    }

    /// Like [`ProblemInstance::new`] but skips the unit-monomial
    /// requirement on the level form. Nonnegative coefficients, a nonzero
    /// level form, matching dimensions, and a positive height are still
    /// enforced; without those the support calculus itself breaks down.
    ///
    /// Completeness is lost: a target can be strictly positive on the slice
    /// of such a level form yet admit no certificate at any level.
    pub fn new_without_precondition(
        target: SparsePolynomial,
        level_form: SparsePolynomial,
        height: Rational,
    ) -> Result<Self, Error> {
        if target.dimension() == 0 {
            return Err(Error::InvalidDimension);
        }
        if target.dimension() != level_form.dimension() {
            return Err(Error::DimensionMismatch {
                expected: target.dimension(),
                got: level_form.dimension(),
            });
        }
        if level_form.is_zero() {
            return Err(Error::ZeroLevelForm);
        }
        if let Some((index, coefficient)) = level_form.first_negative_term() {
            let term = SparsePolynomial::monomial(
                level_form.dimension(),
                index.clone(),
                coefficient.clone(),
            );
            return Err(Error::NegativeCoefficient { term: term.to_string() });
        }
        if !height.is_positive() {
            return Err(Error::InvalidHeight(height));
        }
        Ok(ProblemInstance { target, level_form, height })
    }

    pub fn dimension(&self) -> usize {
        self.target.dimension()
    }

    pub fn target(&self) -> &SparsePolynomial {
        &self.target
    }

    pub fn level_form(&self) -> &SparsePolynomial {
        &self.level_form
    }

    pub fn height(&self) -> &Rational {
        &self.height
    }

    /// `level_form - height`, the polynomial every certificate cofactor
    /// multiplies.
    pub fn shifted_level_form(&self) -> SparsePolynomial {
        &self.level_form
            - &SparsePolynomial::constant(self.dimension(), self.height.clone())
    }

    /// The equivalent instance at height 1: the slice of `r` at height `c`
    /// is the slice of `r / c` at height 1, so certificates transport both
    /// ways (see [`Certificate::rescaled_to_unit`]).
    pub fn with_unit_height(&self) -> ProblemInstance {
        ProblemInstance {
            target: self.target.clone(),
            level_form: self.level_form.scale(&self.height.recip()),
            height: Rational::one(),
        }
    }
}

/// Exact positivity certificate; see the module docs for the three defining
/// conditions. Produced by [`search_certificate`] or deserialized from a
/// [`CertificateFile`], and checked by [`verify_certificate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Certificate {
    pub level: u32,
    /// `q`: strictly positive coefficients over the full cumulative support.
    pub positive_part: SparsePolynomial,
    /// `h`: the multiplier of `level_form - height`.
    pub cofactor: SparsePolynomial,
    pub height: Rational,
}

impl Certificate {
    /// Transports the certificate to the height-1 instance of
    /// [`ProblemInstance::with_unit_height`]: `r - c = c (r/c - 1)`, so the
    /// cofactor picks up a factor of `c` while `q` and the level survive
    /// unchanged (log sets are scale-invariant).
    pub fn rescaled_to_unit(&self) -> Certificate {
        Certificate {
            level: self.level,
            positive_part: self.positive_part.clone(),
            cofactor: self.cofactor.scale(&self.height),
            height: Rational::one(),
        }
    }

    /// Inverse of [`Certificate::rescaled_to_unit`]: reinterprets a
    /// height-1 certificate for `r / height` as one for `r` at `height`.
    pub fn rescaled_from_unit(&self, height: &Rational) -> Certificate {
        assert!(self.height.is_one(), "expected a height-1 certificate");
        assert!(height.is_positive(), "height must be positive");
        Certificate {
            level: self.level,
            positive_part: self.positive_part.clone(),
            cofactor: self.cofactor.scale(&height.recip()),
            height: height.clone(),
        }
    }
}

/// The averaged power sum `g = (1/(N+1)) * sum_{d=0}^{N} (r/c)^d`.
///
/// Two properties make it the workhorse of level monotonicity: `g` is
/// congruent to 1 modulo `r - c` (each summand is), and its log set is
/// exactly the cumulative support at level `N`, because nonnegative
/// coefficients cannot cancel in the sum. Multiplying the positive part of
/// a level-`N` certificate by `g` at level `M` yields one at `N + M`.
pub fn build_g(
    level_form: &SparsePolynomial,
    level: u32,
    height: &Rational,
) -> Result<SparsePolynomial, Error> {
    if level_form.is_zero() {
        return Err(Error::ZeroLevelForm);
    }
    if let Some((index, coefficient)) = level_form.first_negative_term() {
        let term = SparsePolynomial::monomial(
            level_form.dimension(),
            index.clone(),
            coefficient.clone(),
        );
        return Err(Error::NegativeCoefficient { term: term.to_string() });
    }
    if !height.is_positive() {
        return Err(Error::InvalidHeight(height.clone()));
    }
    let unit = level_form.scale(&height.recip());
    let mut sum = SparsePolynomial::one(level_form.dimension());
    let mut power = SparsePolynomial::one(level_form.dimension());
    for _ in 0..level {
        power = &power * &unit;
        sum = &sum + &power;
    }
    let count = Rational::from_integer((level + 1).into());
    Ok(sum.scale(&count.recip()))
}

/// Itemized result of checking a certificate against an instance. The
/// certificate is valid only when all three conditions hold; each is
/// reported separately so a broken certificate explains itself.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    /// Every coefficient of the positive part is strictly positive (and
    /// the polynomial is nonzero).
    pub positive_coefficients: bool,
    /// The support of the positive part equals the cumulative support of
    /// the level form at the certificate's level.
    pub support_matches: bool,
    /// The heights agree and `target - q = h * (level_form - height)`
    /// exactly.
    pub congruence_holds: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.positive_coefficients && self.support_matches && self.congruence_holds
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "ok" } else { "FAIL" };
        writeln!(f, "strictly positive coefficients: {}", mark(self.positive_coefficients))?;
        writeln!(f, "support equals cumulative support: {}", mark(self.support_matches))?;
        write!(f, "congruence identity: {}", mark(self.congruence_holds))
    }
}

/// Checks the three certificate conditions by exact arithmetic.
pub fn verify_certificate(
    instance: &ProblemInstance,
    certificate: &Certificate,
) -> VerificationReport {
    let q = &certificate.positive_part;
    let positive_coefficients =
        !q.is_zero() && q.terms().all(|(_, coefficient)| coefficient.is_positive());

    let expected_support = cumulative_support(instance.level_form(), certificate.level)
        .expect("instance level form was validated at construction");
    let support_matches = support_of(q) == expected_support;

    let congruence_holds = certificate.height == *instance.height() && {
        let difference = &instance.target - q;
        let product = &certificate.cofactor * &instance.shifted_level_form();
        difference == product
    };

    VerificationReport { positive_coefficients, support_matches, congruence_holds }
}

/// Result of a certificate search at one fixed level.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SearchOutcome {
    Found(Certificate),
    /// No certificate exists at this level. Positivity remains open:
    /// higher levels may still succeed.
    NotAtThisLevel,
}

/// How the search LP is assembled. Both formulations decide the same
/// question and reach the same optimum; they differ in the unknowns.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LpFormulation {
    /// Unknowns for `q` and `h` with one equation per monomial of the
    /// identity `f - q - h (r - c) = 0`.
    Direct,
    /// The cofactor is eliminated first: `x^a` is reduced modulo `r - c`
    /// for each support point `a`, which turns the identity into equations
    /// among canonical remainders. `h` is recovered by exact division
    /// afterwards. Fewer unknowns, denser rows.
    NormalForm,
}

/// Searches for a certificate at exactly `level` using the default
/// [`LpFormulation::Direct`] formulation.
pub fn search_certificate(instance: &ProblemInstance, level: u32) -> SearchOutcome {
    search_certificate_with(instance, level, LpFormulation::Direct)
}

/// Searches for a certificate at exactly `level`.
///
/// The LP maximizes a floor `t` under the constraints `q_a >= t` for every
/// cumulative-support point `a`, `t <= 1`, and the coefficientwise identity
/// `f - q = h (r - c)`. All data is rational and the solve is exact, so
/// `t > 0` at the optimum is equivalent to the existence of a certificate
/// at this level. Any returned certificate has been re-verified.
pub fn search_certificate_with(
    instance: &ProblemInstance,
    level: u32,
    formulation: LpFormulation,
) -> SearchOutcome {
    let shifted = instance.shifted_level_form();
    let q_support: Vec<MultiIndex> = cumulative_support(instance.level_form(), level)
        .expect("instance level form was validated at construction")
        .iter()
        .cloned()
        .collect();

    let solved = match formulation {
        LpFormulation::NormalForm if !shifted.is_zero() => {
            solve_normal_form(instance, &shifted, &q_support)
        }
        _ => solve_direct(instance, level, &shifted, &q_support),
    };
    let Some((q_values, cofactor)) = solved else {
        return SearchOutcome::NotAtThisLevel;
    };

    let positive_part = SparsePolynomial::from_terms(
        instance.dimension(),
        q_support.into_iter().zip(q_values),
    );
    let certificate = Certificate {
        level,
        positive_part,
        cofactor,
        height: instance.height().clone(),
    };
    let report = verify_certificate(instance, &certificate);
    assert!(
        report.passed(),
        "internal error: searched certificate failed verification:\n{}",
        report
    );
    SearchOutcome::Found(certificate)
}

/// Shared tail of both formulations: appends the floor variable `t`, one
/// slack row `q_a - t - s_a = 0` per support point, and the cap `t <= 1`,
/// then maximizes `t`. Columns `0..num_q` must already hold the `q`
/// unknowns. Returns the `q` assignment when the optimum is positive.
struct FloorLp {
    lp: LinearProgram,
    num_q: usize,
    /// Width of the fixed prefix (q unknowns plus formulation-specific
    /// unknowns such as `h`); `t` and the slacks follow.
    prefix: usize,
}

impl FloorLp {
    fn new(num_q: usize, extra: usize) -> Self {
        let prefix = num_q + extra;
        // Layout: [q | extra | t | one slack per q | cap slack].
        let mut lp = LinearProgram::new(prefix + 1 + num_q + 1);
        for var in 0..=prefix {
            lp.set_free(var);
        }
        let t = prefix;
        let mut objective = vec![Rational::zero(); lp.num_vars()];
        objective[t] = Rational::one();
        lp.set_objective(objective);
        for i in 0..num_q {
            let mut row = vec![Rational::zero(); lp.num_vars()];
            row[i] = Rational::one();
            row[t] = -Rational::one();
            row[t + 1 + i] = -Rational::one();
            lp.add_equality(row, Rational::zero());
        }
        let mut cap = vec![Rational::zero(); lp.num_vars()];
        cap[t] = Rational::one();
        cap[t + 1 + num_q] = Rational::one();
        lp.add_equality(cap, Rational::one());
        FloorLp { lp, num_q, prefix }
    }

    fn row(&self) -> Vec<Rational> {
        vec![Rational::zero(); self.lp.num_vars()]
    }

    fn add_equality(&mut self, row: Vec<Rational>, rhs: Rational) {
        self.lp.add_equality(row, rhs);
    }

    /// Solves and returns `(q values, extra values)` iff the floor is
    /// strictly positive.
    fn solve_positive(&self) -> Option<(Vec<Rational>, Vec<Rational>)> {
        match self.lp.solve() {
            LpOutcome::Optimal { assignment, objective } if objective.is_positive() => {
                let q_values = assignment[..self.num_q].to_vec();
                let extra = assignment[self.num_q..self.prefix].to_vec();
                Some((q_values, extra))
            }
            LpOutcome::Optimal { .. } | LpOutcome::Infeasible => None,
            LpOutcome::Unbounded => unreachable!("the floor variable is capped at 1"),
        }
    }
}

fn solve_direct(
    instance: &ProblemInstance,
    level: u32,
    shifted: &SparsePolynomial,
    q_support: &[MultiIndex],
) -> Option<(Vec<Rational>, SparsePolynomial)> {
    let n = instance.dimension();
    let target = instance.target();

    // Degree cap for the cofactor: the identity bounds deg(h) + deg(r - c)
    // by the larger of deg(f) and the top cumulative grade.
    let cofactor_support: Vec<MultiIndex> = if shifted.is_zero() {
        Vec::new()
    } else {
        let top = target
            .degree()
            .unwrap_or(0)
            .max(level * instance.level_form().degree().unwrap_or(0));
        match top.checked_sub(shifted.degree().expect("shifted form is nonzero")) {
            None => Vec::new(),
            Some(bound) => {
                let mut slab = Vec::new();
                for degree in 0..=bound {
                    slab.extend(grade_slice(n, degree).iter().cloned());
                }
                slab
            }
        }
    };

    // One equation per monomial that can appear in f - q - h (r - c).
    let mut rows = SupportSet::from_indices(n, q_support.iter().cloned());
    rows = rows.union(&support_of(target));
    if !cofactor_support.is_empty() {
        let slab = SupportSet::from_indices(n, cofactor_support.iter().cloned());
        rows = rows.union(&slab.minkowski_sum(&support_of(shifted)));
    }

    let mut floor = FloorLp::new(q_support.len(), cofactor_support.len());
    for gamma in rows.iter() {
        let mut row = floor.row();
        if let Some(i) = q_support.iter().position(|a| a == gamma) {
            row[i] = Rational::one();
        }
        for (j, beta) in cofactor_support.iter().enumerate() {
            if let Some(delta) = gamma.checked_sub(beta) {
                let coefficient = shifted.coefficient(&delta);
                if !coefficient.is_zero() {
                    row[q_support.len() + j] = coefficient;
                }
            }
        }
        floor.add_equality(row, target.coefficient(gamma));
    }

    let (q_values, h_values) = floor.solve_positive()?;
    let cofactor = SparsePolynomial::from_terms(
        n,
        cofactor_support.into_iter().zip(h_values),
    );
    Some((q_values, cofactor))
}

fn solve_normal_form(
    instance: &ProblemInstance,
    shifted: &SparsePolynomial,
    q_support: &[MultiIndex],
) -> Option<(Vec<Rational>, SparsePolynomial)> {
    let n = instance.dimension();
    let target_remainder = instance.target().reduce_mod(shifted);
    let monomial_remainders: Vec<SparsePolynomial> = q_support
        .iter()
        .map(|a| {
            SparsePolynomial::monomial(n, a.clone(), Rational::one()).reduce_mod(shifted)
        })
        .collect();

    // Reduction is linear, so q = f (mod r - c) becomes one equation per
    // monomial of any remainder.
    let mut rows = support_of(&target_remainder);
    for remainder in &monomial_remainders {
        rows = rows.union(&support_of(remainder));
    }

    let mut floor = FloorLp::new(q_support.len(), 0);
    for gamma in rows.iter() {
        let mut row = floor.row();
        for (i, remainder) in monomial_remainders.iter().enumerate() {
            let coefficient = remainder.coefficient(gamma);
            if !coefficient.is_zero() {
                row[i] = coefficient;
            }
        }
        floor.add_equality(row, target_remainder.coefficient(gamma));
    }

    let (q_values, _) = floor.solve_positive()?;
    let positive_part = SparsePolynomial::from_terms(
        n,
        q_support.iter().cloned().zip(q_values.iter().cloned()),
    );
    let cofactor = (instance.target() - &positive_part)
        .divide_exact(shifted)
        .expect("normal-form rows guarantee divisibility");
    Some((q_values, cofactor))
}

/// Result of scanning levels `0..=max_level`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LevelSearch {
    /// Certificate at the minimal level (monotonicity makes the first hit
    /// minimal).
    Found(Certificate),
    /// No certificate up to the cap. Says nothing about larger levels.
    Exhausted { max_level: u32 },
}

/// Scans levels upward and returns the first (hence minimal) certificate.
///
/// This is a semidecision procedure: when the target is strictly positive
/// on the slice a certificate exists at some finite level, but a negative
/// or merely nonnegative target makes every level fail, so a cap is
/// required and exhaustion is not a refutation.
pub fn find_min_level(instance: &ProblemInstance, max_level: u32) -> LevelSearch {
    for level in 0..=max_level {
        if let SearchOutcome::Found(certificate) = search_certificate(instance, level) {
            return LevelSearch::Found(certificate);
        }
    }
    LevelSearch::Exhausted { max_level }
}

/// Outcome of one Polya expansion `(x1 + ... + xn)^level * p`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyaReport {
    pub level: u32,
    pub expansion: SparsePolynomial,
    /// Monomials of the expected grade with no term in the expansion.
    pub missing: Vec<MultiIndex>,
    /// Monomials present with a coefficient `<= 0`.
    pub nonpositive: Vec<MultiIndex>,
}

impl PolyaReport {
    /// True when every monomial of the full grade carries a strictly
    /// positive coefficient; a missing monomial counts as a failure.
    pub fn passed(&self) -> bool {
        self.missing.is_empty() && self.nonpositive.is_empty()
    }
}

/// Multiplies a homogeneous `p` by the `level`-th power of `x1 + ... + xn`
/// and reports whether the expansion has strictly positive coefficients
/// across its entire grade.
pub fn polya_expand(p: &SparsePolynomial, level: u32) -> Result<PolyaReport, Error> {
    if p.dimension() == 0 {
        return Err(Error::InvalidDimension);
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let expansion = &SparsePolynomial::simplex_form(p.dimension()).pow(level) * p;
    let grade = level + p.degree().expect("nonzero polynomial has a degree");
    let mut missing = Vec::new();
    let mut nonpositive = Vec::new();
    for index in grade_slice(p.dimension(), grade).iter() {
        let coefficient = expansion.coefficient(index);
        if coefficient.is_zero() {
            missing.push(index.clone());
        } else if coefficient.is_negative() {
            nonpositive.push(index.clone());
        }
    }
    Ok(PolyaReport { level, expansion, missing, nonpositive })
}

/// Smallest level at which the Polya expansion turns strictly positive, or
/// `None` if no level up to `max_level` works. First hit is minimal:
/// multiplying a positive full-grade expansion by `x1 + ... + xn` keeps it
/// positive and full.
pub fn polya_min_level(p: &SparsePolynomial, max_level: u32) -> Result<Option<u32>, Error> {
    for level in 0..=max_level {
        if polya_expand(p, level)?.passed() {
            return Ok(Some(level));
        }
    }
    Ok(None)
}

/// Agreement record of the two Polya routes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyaCrossCheck {
    /// Minimal level by direct expansion and coefficient scan.
    pub expansion_level: Option<u32>,
    /// Minimal level by handing the same question to the exact LP solver.
    pub lp_level: Option<u32>,
}

impl PolyaCrossCheck {
    pub fn agrees(&self) -> bool {
        self.expansion_level == self.lp_level
    }
}

/// Decides the minimal Polya level twice: once by scanning expansion
/// coefficients, once through the LP solver (maximize a floor `t` with
/// `t + s_a = E_a` over the full grade, `t <= 1`; the optimum is positive
/// exactly when every grade coefficient is). The routes share no decision
/// logic, so agreement exercises the expansion arithmetic and the simplex
/// against each other.
pub fn cross_check_polya(
    p: &SparsePolynomial,
    max_level: u32,
) -> Result<PolyaCrossCheck, Error> {
    let expansion_level = polya_min_level(p, max_level)?;

    let mut lp_level = None;
    for level in 0..=max_level {
        let report = polya_expand(p, level)?;
        let slice: Vec<MultiIndex> =
            grade_slice(p.dimension(), level + p.degree().expect("nonzero"))
                .iter()
                .cloned()
                .collect();
        // Variables: t, then one slack per grade monomial, then the cap
        // slack. All slacks nonnegative; t free.
        let mut lp = LinearProgram::new(1 + slice.len() + 1);
        lp.set_free(0);
        let mut objective = vec![Rational::zero(); lp.num_vars()];
        objective[0] = Rational::one();
        lp.set_objective(objective);
        for (i, index) in slice.iter().enumerate() {
            let mut row = vec![Rational::zero(); lp.num_vars()];
            row[0] = Rational::one();
            row[1 + i] = Rational::one();
            lp.add_equality(row, report.expansion.coefficient(index));
        }
        let mut cap = vec![Rational::zero(); lp.num_vars()];
        cap[0] = Rational::one();
        cap[1 + slice.len()] = Rational::one();
        lp.add_equality(cap, Rational::one());

        match lp.solve() {
            LpOutcome::Optimal { objective, .. } if objective.is_positive() => {
                lp_level = Some(level);
                break;
            }
            LpOutcome::Optimal { .. } | LpOutcome::Infeasible => {}
            LpOutcome::Unbounded => unreachable!("the floor variable is capped at 1"),
        }
    }

    Ok(PolyaCrossCheck { expansion_level, lp_level })
}

/// Serialization form of an instance/certificate pair. The file is
/// self-contained: dimension, level, height, and the four polynomials in
/// the crate's text syntax.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CertificateFile {
    pub n: usize,
    #[serde(rename = "N")]
    pub level: u32,
    pub height: String,
    pub r: String,
    pub f: String,
    pub q: String,
    pub h: String,
}

impl CertificateFile {
    pub fn from_parts(instance: &ProblemInstance, certificate: &Certificate) -> Self {
        CertificateFile {
            n: instance.dimension(),
            level: certificate.level,
            height: format_rational(&certificate.height),
            r: instance.level_form().to_string(),
            f: instance.target().to_string(),
            q: certificate.positive_part.to_string(),
            h: certificate.cofactor.to_string(),
        }
    }

    /// Parses and revalidates the file. With `skip_precondition` the
    /// unit-monomial requirement on `r` is waived, mirroring
    /// [`ProblemInstance::new_without_precondition`].
    pub fn to_parts(
        &self,
        skip_precondition: bool,
    ) -> Result<(ProblemInstance, Certificate), Error> {
        if self.n == 0 {
            return Err(Error::InvalidDimension);
        }
        let height = parse_rational(&self.height)?;
        let level_form = parse_polynomial(&self.r, self.n)?;
        let target = parse_polynomial(&self.f, self.n)?;
        let positive_part = parse_polynomial(&self.q, self.n)?;
        let cofactor = parse_polynomial(&self.h, self.n)?;
        let instance = if skip_precondition {
            ProblemInstance::new_without_precondition(target, level_form, height.clone())?
        } else {
            ProblemInstance::new(target, level_form, height.clone())?
        };
        let certificate =
            Certificate { level: self.level, positive_part, cofactor, height };
        Ok((instance, certificate))
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self)
            .expect("certificate files serialize infallibly");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
