//! Exact linear programming over the rationals.
//!
//! A [`LinearProgram`] is a maximization problem in equality form: variables
//! may carry a rational lower bound or be free, all other constraints are
//! linear equalities. The solver is a dense two-phase primal simplex with
//! rational pivoting throughout, so results are exact: `1/3` comes back as
//! `1/3`, and an `Infeasible` or `Unbounded` verdict is a theorem about the
//! input, not a tolerance call.
//!
//! Pivoting uses Bland's rule (smallest eligible index for both the
//! entering column and tie-breaks on the leaving row), which excludes
//! cycling, so the solver terminates on every input.
//!
//! Problems here are built programmatically by the certificate search;
//! malformed construction (wrong row length, out-of-range variable) is a
//! caller bug and panics.

use num_traits::{One, Signed, Zero};

use crate::poly::Rational;

/// Equality-form LP: maximize `objective . x` subject to `rows`, with each
/// variable either bounded below or free.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    num_vars: usize,
    objective: Vec<Rational>,
    rows: Vec<(Vec<Rational>, Rational)>,
    /// `None` marks a free variable.
    lower_bounds: Vec<Option<Rational>>,
}

/// Exact outcome of a solve.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LpOutcome {
    Optimal { assignment: Vec<Rational>, objective: Rational },
    Infeasible,
    Unbounded,
}

impl LinearProgram {
    /// A program over `num_vars` variables, all bounded below by zero, with
    /// a zero objective and no constraints.
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            objective: vec![Rational::zero(); num_vars],
            rows: Vec::new(),
            lower_bounds: vec![Some(Rational::zero()); num_vars],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn set_objective(&mut self, coefficients: Vec<Rational>) {
        assert_eq!(coefficients.len(), self.num_vars, "objective length mismatch");
        self.objective = coefficients;
    }

    pub fn set_lower_bound(&mut self, var: usize, bound: Rational) {
        assert!(var < self.num_vars, "variable index out of range");
        self.lower_bounds[var] = Some(bound);
    }

    pub fn set_free(&mut self, var: usize) {
        assert!(var < self.num_vars, "variable index out of range");
        self.lower_bounds[var] = None;
    }

    /// Adds the constraint `coefficients . x = rhs`.
    pub fn add_equality(&mut self, coefficients: Vec<Rational>, rhs: Rational) {
        assert_eq!(coefficients.len(), self.num_vars, "constraint length mismatch");
        self.rows.push((coefficients, rhs));
    }

    pub fn solve(&self) -> LpOutcome {
        // Shift bounded variables to zero lower bounds and split free
        // variables into differences of nonnegative parts.
        let offsets: Vec<Rational> = self
            .lower_bounds
            .iter()
            .map(|b| b.clone().unwrap_or_else(Rational::zero))
            .collect();
        let mut columns: Vec<(usize, bool)> = Vec::new();
        for var in 0..self.num_vars {
            columns.push((var, false));
            if self.lower_bounds[var].is_none() {
                columns.push((var, true));
            }
        }
        let structural = columns.len();

        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(self.rows.len());
        let mut rhs: Vec<Rational> = Vec::with_capacity(self.rows.len());
        for (coefficients, b) in &self.rows {
            let mut shifted = b.clone();
            for (var, offset) in offsets.iter().enumerate() {
                if !offset.is_zero() && !coefficients[var].is_zero() {
                    shifted -= &coefficients[var] * offset;
                }
            }
            let mut row: Vec<Rational> = columns
                .iter()
                .map(|&(var, negated)| {
                    if negated {
                        -coefficients[var].clone()
                    } else {
                        coefficients[var].clone()
                    }
                })
                .collect();
            if shifted.is_negative() {
                for entry in &mut row {
                    *entry = -std::mem::take(entry);
                }
                shifted = -shifted;
            }
            rows.push(row);
            rhs.push(shifted);
        }

        // Phase 1: minimize the sum of one artificial variable per row.
        let num_rows = rows.len();
        let width = structural + num_rows;
        for (r, row) in rows.iter_mut().enumerate() {
            row.resize(width, Rational::zero());
            row[structural + r] = Rational::one();
        }
        let mut cbar = vec![Rational::zero(); width];
        for (j, entry) in cbar.iter_mut().enumerate().take(structural) {
            for row in &rows {
                *entry += &row[j];
            }
        }
        let mut value = Rational::zero();
        for b in &rhs {
            value -= b;
        }
        let basis: Vec<usize> = (0..num_rows).map(|r| structural + r).collect();
        let mut tableau = Tableau { rows, rhs, basis, cbar, value };

        let optimal = tableau.optimize(structural);
        debug_assert!(optimal, "phase 1 objective is bounded above by zero");
        if tableau.value.is_negative() {
            return LpOutcome::Infeasible;
        }
        tableau.evict_artificials(structural);
        for row in &mut tableau.rows {
            row.truncate(structural);
        }

        // Phase 2: the real objective over the structural columns.
        let costs: Vec<Rational> = columns
            .iter()
            .map(|&(var, negated)| {
                if negated {
                    -self.objective[var].clone()
                } else {
                    self.objective[var].clone()
                }
            })
            .collect();
        tableau.cbar = costs.clone();
        tableau.value = Rational::zero();
        for r in 0..tableau.rows.len() {
            let basic_cost = costs[tableau.basis[r]].clone();
            if basic_cost.is_zero() {
                continue;
            }
            for j in 0..structural {
                if !tableau.rows[r][j].is_zero() {
                    let delta = &basic_cost * &tableau.rows[r][j];
                    tableau.cbar[j] -= delta;
                }
            }
            tableau.value += &basic_cost * &tableau.rhs[r];
        }
        if !tableau.optimize(structural) {
            return LpOutcome::Unbounded;
        }

        let mut shifted = vec![Rational::zero(); structural];
        for r in 0..tableau.rows.len() {
            shifted[tableau.basis[r]] = tableau.rhs[r].clone();
        }
        let mut assignment = offsets;
        for (j, &(var, negated)) in columns.iter().enumerate() {
            if shifted[j].is_zero() {
                continue;
            }
            if negated {
                assignment[var] -= &shifted[j];
            } else {
                assignment[var] += &shifted[j];
            }
        }
        let mut objective = Rational::zero();
        for (c, x) in self.objective.iter().zip(&assignment) {
            if !c.is_zero() && !x.is_zero() {
                objective += c * x;
            }
        }
        LpOutcome::Optimal { assignment, objective }
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    /// Column currently basic in each row.
    basis: Vec<usize>,
    /// Reduced costs; entries of basic columns are zero.
    cbar: Vec<Rational>,
    value: Rational,
}

impl Tableau {
    /// Runs the simplex to optimality or unboundedness. Entering columns
    /// are drawn from `0..entering_limit`; once an artificial column has
    /// left the basis it never re-enters.
    fn optimize(&mut self, entering_limit: usize) -> bool {
        loop {
            let entering = (0..entering_limit).find(|&j| self.cbar[j].is_positive());
            let Some(e) = entering else { return true };
            let mut best: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][e];
                if !a.is_positive() {
                    continue;
                }
                let theta = &self.rhs[r] / a;
                let better = match &best {
                    None => true,
                    Some((brow, btheta)) => {
                        theta < *btheta
                            || (theta == *btheta && self.basis[r] < self.basis[*brow])
                    }
                };
                if better {
                    best = Some((r, theta));
                }
            }
            let Some((p, _)) = best else { return false };
            self.pivot(p, e);
        }
    }

    fn pivot(&mut self, prow: usize, pcol: usize) {
        let pivot = self.rows[prow][pcol].clone();
        debug_assert!(!pivot.is_zero(), "pivot on a zero entry");
        if !pivot.is_one() {
            for entry in &mut self.rows[prow] {
                if !entry.is_zero() {
                    *entry /= &pivot;
                }
            }
            self.rhs[prow] /= &pivot;
        }
        let pivot_entries: Vec<(usize, Rational)> = self.rows[prow]
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, v)| (j, v.clone()))
            .collect();
        let pivot_rhs = self.rhs[prow].clone();

        for r in 0..self.rows.len() {
            if r == prow {
                continue;
            }
            let factor = self.rows[r][pcol].clone();
            if factor.is_zero() {
                continue;
            }
            for (j, v) in &pivot_entries {
                let delta = &factor * v;
                self.rows[r][*j] -= delta;
            }
            if !pivot_rhs.is_zero() {
                self.rhs[r] -= &factor * &pivot_rhs;
            }
        }
        let factor = self.cbar[pcol].clone();
        if !factor.is_zero() {
            for (j, v) in &pivot_entries {
                let delta = &factor * v;
                self.cbar[*j] -= delta;
            }
            self.value += &factor * &pivot_rhs;
        }
        self.basis[prow] = pcol;
    }

    /// Pivots leftover artificial variables out of the basis after phase 1;
    /// rows that reduce to `0 = 0` over the structural columns are
    /// redundant and removed.
    fn evict_artificials(&mut self, structural: usize) {
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] < structural {
                r += 1;
                continue;
            }
            debug_assert!(self.rhs[r].is_zero(), "basic artificial with nonzero value");
            match (0..structural).find(|&j| !self.rows[r][j].is_zero()) {
                Some(j) => {
                    self.pivot(r, j);
                    r += 1;
                }
                None => {
                    self.rows.swap_remove(r);
                    self.rhs.swap_remove(r);
                    self.basis.swap_remove(r);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;

    fn ints(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| rational(v, 1)).collect()
    }

    fn solve_expect_optimal(lp: &LinearProgram) -> (Vec<Rational>, Rational) {
        match lp.solve() {
            LpOutcome::Optimal { assignment, objective } => (assignment, objective),
            other => panic!("expected an optimum, got {:?}", other),
        }
    }

    #[test]
    fn optimum_at_a_vertex() {
        // maximize 3x + 2y with x + y <= 4, x + 3y <= 6 via explicit slacks.
        let mut lp = LinearProgram::new(4);
        lp.set_objective(ints(&[3, 2, 0, 0]));
        lp.add_equality(ints(&[1, 1, 1, 0]), rational(4, 1));
        lp.add_equality(ints(&[1, 3, 0, 1]), rational(6, 1));
        let (assignment, objective) = solve_expect_optimal(&lp);
        assert_eq!(objective, rational(12, 1));
        assert_eq!(assignment[0], rational(4, 1));
        assert_eq!(assignment[1], rational(0, 1));
    }

    #[test]
    fn exact_thirds_in_the_solution() {
        let mut lp = LinearProgram::new(2);
        lp.set_objective(ints(&[1, 0]));
        lp.add_equality(ints(&[3, 1]), rational(1, 1));
        let (assignment, objective) = solve_expect_optimal(&lp);
        assert_eq!(assignment[0], rational(1, 3));
        assert_eq!(objective, rational(1, 3));
    }

    #[test]
    fn detects_infeasibility() {
        let mut lp = LinearProgram::new(2);
        lp.add_equality(ints(&[1, 1]), rational(-1, 1));
        assert_eq!(lp.solve(), LpOutcome::Infeasible);
    }

    #[test]
    fn detects_conflicting_equalities() {
        let mut lp = LinearProgram::new(2);
        lp.add_equality(ints(&[1, 1]), rational(2, 1));
        lp.add_equality(ints(&[1, 1]), rational(3, 1));
        assert_eq!(lp.solve(), LpOutcome::Infeasible);
    }

    #[test]
    fn detects_unboundedness() {
        let mut lp = LinearProgram::new(2);
        lp.set_objective(ints(&[1, 0]));
        lp.add_equality(ints(&[0, 1]), rational(1, 1));
        assert_eq!(lp.solve(), LpOutcome::Unbounded);
    }

    #[test]
    fn free_variable_takes_a_negative_value() {
        let mut lp = LinearProgram::new(2);
        lp.set_free(0);
        lp.set_objective(ints(&[1, 0]));
        lp.add_equality(ints(&[1, 1]), rational(-5, 1));
        let (assignment, objective) = solve_expect_optimal(&lp);
        assert_eq!(assignment[0], rational(-5, 1));
        assert_eq!(assignment[1], rational(0, 1));
        assert_eq!(objective, rational(-5, 1));
    }

    #[test]
    fn lower_bound_is_respected() {
        let mut lp = LinearProgram::new(1);
        lp.set_lower_bound(0, rational(3, 2));
        lp.set_objective(ints(&[-1]));
        let (assignment, objective) = solve_expect_optimal(&lp);
        assert_eq!(assignment[0], rational(3, 2));
        assert_eq!(objective, rational(-3, 2));
    }

    #[test]
    fn redundant_rows_are_dropped() {
        let mut lp = LinearProgram::new(2);
        lp.set_objective(ints(&[1, 0]));
        lp.add_equality(ints(&[1, 1]), rational(2, 1));
        lp.add_equality(ints(&[2, 2]), rational(4, 1));
        let (assignment, objective) = solve_expect_optimal(&lp);
        assert_eq!(objective, rational(2, 1));
        assert_eq!(assignment[0], rational(2, 1));
    }

    #[test]
    fn beale_degenerate_example_terminates() {
        // Beale's cycling example; Bland's rule must terminate at 1/20.
        let mut lp = LinearProgram::new(7);
        lp.set_objective(vec![
            rational(3, 4),
            rational(-150, 1),
            rational(1, 50),
            rational(-6, 1),
            rational(0, 1),
            rational(0, 1),
            rational(0, 1),
        ]);
        lp.add_equality(
            vec![
                rational(1, 4),
                rational(-60, 1),
                rational(-1, 25),
                rational(9, 1),
                rational(1, 1),
                rational(0, 1),
                rational(0, 1),
            ],
            rational(0, 1),
        );
        lp.add_equality(
            vec![
                rational(1, 2),
                rational(-90, 1),
                rational(-1, 50),
                rational(3, 1),
                rational(0, 1),
                rational(1, 1),
                rational(0, 1),
            ],
            rational(0, 1),
        );
        lp.add_equality(
            vec![
                rational(0, 1),
                rational(0, 1),
                rational(1, 1),
                rational(0, 1),
                rational(0, 1),
                rational(0, 1),
                rational(1, 1),
            ],
            rational(1, 1),
        );
        let (_, objective) = solve_expect_optimal(&lp);
        assert_eq!(objective, rational(1, 20));
    }

    #[test]
    fn assignment_satisfies_all_equalities() {
        let mut lp = LinearProgram::new(3);
        lp.set_objective(ints(&[1, 1, 0]));
        lp.set_free(1);
        lp.add_equality(ints(&[1, 2, 1]), rational(7, 2));
        lp.add_equality(ints(&[0, 1, -1]), rational(-2, 1));
        match lp.solve() {
            LpOutcome::Optimal { assignment, .. } => {
                let row1 = &assignment[0] + &(&assignment[1] * &rational(2, 1))
                    + &assignment[2];
                let row2 = &assignment[1] - &assignment[2];
                assert_eq!(row1, rational(7, 2));
                assert_eq!(row2, rational(-2, 1));
            }
            other => panic!("expected an optimum, got {:?}", other),
        }
    }

    #[test]
    fn empty_program_is_trivially_optimal() {
        let lp = LinearProgram::new(0);
        assert_eq!(
            lp.solve(),
            LpOutcome::Optimal { assignment: vec![], objective: rational(0, 1) }
        );
    }
}
