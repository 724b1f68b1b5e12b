//! Exact rational linear programming.
//!
//! A dense two-phase simplex over arbitrary-precision rationals with
//! Bland's anti-cycling rule. Feasibility answers are certificates: no
//! tolerances anywhere. Problem sizes in this crate are small (tens of
//! rows), so a dense tableau is the right trade-off.

use crate::rat::{Rat, RatVec};
use num::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Eq,
    Ge,
}

/// One linear constraint `coeffs · x REL rhs` over free (sign-unrestricted)
/// variables.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: RatVec,
    pub rel: Rel,
    pub rhs: Rat,
}

impl Constraint {
    pub fn le(coeffs: RatVec, rhs: Rat) -> Self {
        Constraint { coeffs, rel: Rel::Le, rhs }
    }
    pub fn eq(coeffs: RatVec, rhs: Rat) -> Self {
        Constraint { coeffs, rel: Rel::Eq, rhs }
    }
    pub fn ge(coeffs: RatVec, rhs: Rat) -> Self {
        Constraint { coeffs, rel: Rel::Ge, rhs }
    }
}

/// A system of linear constraints over `n_vars` free variables.
#[derive(Clone, Debug, Default)]
pub struct LinearSystem {
    pub n_vars: usize,
    pub constraints: Vec<Constraint>,
}

impl LinearSystem {
    pub fn new(n_vars: usize) -> Self {
        LinearSystem { n_vars, constraints: Vec::new() }
    }

    pub fn push(&mut self, c: Constraint) {
        debug_assert_eq!(c.coeffs.dim(), self.n_vars);
        self.constraints.push(c);
    }

    /// Exact feasibility of the system.
    pub fn feasible(&self) -> bool {
        self.solve(None).is_some()
    }

    /// A feasible point, if one exists.
    pub fn solution(&self) -> Option<RatVec> {
        self.solve(None)
    }

    /// Minimize `objective · x` subject to the system. Returns the optimal
    /// value and an optimal point; `None` if infeasible or unbounded below.
    pub fn minimize(&self, objective: &RatVec) -> Option<(Rat, RatVec)> {
        let x = self.solve(Some(objective))?;
        Some((objective.dot(&x), x))
    }

    // Phase I (+ optional Phase II) dense simplex. Free variables are split
    // into positive and negative parts; Le/Ge rows gain slacks; every row is
    // normalized to nonnegative rhs and given an artificial variable for the
    // initial basis.
    fn solve(&self, objective: Option<&RatVec>) -> Option<RatVec> {
        let n = self.n_vars;
        let m = self.constraints.len();
        let n_split = 2 * n;
        let n_slack = self
            .constraints
            .iter()
            .filter(|c| c.rel != Rel::Eq)
            .count();
        let n_struct = n_split + n_slack;
        let total = n_struct + m; // artificials last

        // Build rows: [x+ | x- | slacks | artificials | rhs]
        let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
        let mut slack_idx = 0usize;
        for (r, c) in self.constraints.iter().enumerate() {
            let mut row = vec![Rat::zero(); total + 1];
            for (j, a) in c.coeffs.0.iter().enumerate() {
                row[j] = a.clone();
                row[n + j] = -a.clone();
            }
            match c.rel {
                Rel::Le => {
                    row[n_split + slack_idx] = Rat::one();
                    slack_idx += 1;
                }
                Rel::Ge => {
                    row[n_split + slack_idx] = -Rat::one();
                    slack_idx += 1;
                }
                Rel::Eq => {}
            }
            row[total] = c.rhs.clone();
            if row[total].is_negative() {
                for v in row.iter_mut() {
                    *v = -std::mem::take(v);
                }
            }
            row[n_struct + r] = Rat::one();
            rows.push(row);
        }

        let mut basis: Vec<usize> = (n_struct..total).collect();

        // Phase I objective: minimize the sum of artificials. Reduced cost
        // row = -(sum of constraint rows) over structural columns.
        let mut cost = vec![Rat::zero(); total + 1];
        for row in &rows {
            for j in 0..=total {
                if j < n_struct || j == total {
                    cost[j] -= &row[j];
                }
            }
        }

        simplex_loop(&mut rows, &mut cost, &mut basis, n_struct, total)?;
        // cost[total] holds -objective value; feasible iff sum of artificials is 0.
        if !cost[total].is_zero() {
            return None;
        }

        // Drive any artificial still in the basis out (or drop its
        // redundant row from consideration by pivoting where possible).
        for r in 0..m {
            if basis[r] >= n_struct {
                if let Some(j) = (0..n_struct).find(|&j| !rows[r][j].is_zero()) {
                    pivot(&mut rows, &mut cost, r, j);
                    basis[r] = j;
                }
                // A fully zero structural row is redundant; its artificial
                // stays basic at value 0, which is harmless.
            }
        }

        if let Some(obj) = objective {
            // Phase II on structural variables, artificial columns frozen.
            let mut cost2 = vec![Rat::zero(); total + 1];
            for j in 0..n {
                cost2[j] = obj.0[j].clone();
                cost2[n + j] = -obj.0[j].clone();
            }
            // Make the cost row consistent with the current basis.
            for r in 0..m {
                let b = basis[r];
                if !cost2[b].is_zero() {
                    let factor = cost2[b].clone();
                    for j in 0..=total {
                        let delta = &factor * &rows[r][j];
                        cost2[j] -= delta;
                    }
                }
            }
            simplex_loop(&mut rows, &mut cost2, &mut basis, n_struct, total)?;
        }

        // Read off x = x+ - x-.
        let mut values = vec![Rat::zero(); n_struct];
        for (r, &b) in basis.iter().enumerate() {
            if b < n_struct {
                values[b] = rows[r][total].clone();
            }
        }
        let x: Vec<Rat> = (0..n).map(|j| &values[j] - &values[n + j]).collect();
        Some(RatVec(x))
    }
}

/// Run simplex iterations with Bland's rule until optimality; `None` when
/// the objective is unbounded below.
fn simplex_loop(
    rows: &mut [Vec<Rat>],
    cost: &mut [Rat],
    basis: &mut [usize],
    n_cols_enterable: usize,
    rhs_col: usize,
) -> Option<()> {
    loop {
        // Bland: entering column = smallest index with negative reduced cost.
        let Some(enter) = (0..n_cols_enterable).find(|&j| cost[j].is_negative()) else {
            return Some(());
        };
        // Ratio test; ties broken by smallest basis variable (Bland).
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for (r, row) in rows.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[rhs_col] / &row[enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[r] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(r);
                }
            }
        }
        let leave = leave?; // None: unbounded
        pivot_full(rows, cost, leave, enter);
        basis[leave] = enter;
    }
}

fn pivot(rows: &mut [Vec<Rat>], cost: &mut [Rat], r: usize, j: usize) {
    pivot_full(rows, cost, r, j);
}

fn pivot_full(rows: &mut [Vec<Rat>], cost: &mut [Rat], r: usize, j: usize) {
    let piv = rows[r][j].clone();
    let inv = piv.recip();
    for v in rows[r].iter_mut() {
        if !v.is_zero() {
            *v *= &inv;
        }
    }
    let pivot_row = rows[r].clone();
    for (rr, row) in rows.iter_mut().enumerate() {
        if rr != r && !row[j].is_zero() {
            let factor = std::mem::replace(&mut row[j], Rat::zero());
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
            row[j] = Rat::zero();
        }
    }
    if !cost[j].is_zero() {
        let factor = std::mem::replace(&mut cost[j], Rat::zero());
        for (v, p) in cost.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v -= &factor * p;
            }
        }
        cost[j] = Rat::zero();
    }
}
