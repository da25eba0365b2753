//! Dense two-phase simplex over exact rationals.
//!
//! Bland's rule (lowest eligible index enters, lowest basic index leaves on
//! ratio ties) rules out cycling. Optimal solutions are basic, and the final
//! reduced costs give an optimal dual solution.

use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// `sum_j coeffs[j].1 * x_{coeffs[j].0}  (relation)  rhs`.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<(usize, Rational)>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// Minimize `objective . x` subject to `constraints` and `x >= 0`.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub objective: Rational,
    pub x: Vec<Rational>,
    /// One multiplier per constraint with `objective - A^T y >= 0`,
    /// `y <= 0` on `Le` rows, `y >= 0` on `Ge` rows, and `b . y` equal to the
    /// optimal objective.
    pub duals: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Aux {
    Slack(usize),
    Surplus(usize),
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    /// Reduced costs; the last entry is minus the objective value.
    costs: Vec<Rational>,
    basis: Vec<usize>,
    width: usize,
}

enum Pivoting {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn rhs(&self) -> usize {
        self.width
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        if inv != Rational::one() {
            for x in self.rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let nonzero: Vec<usize> = (0..=self.width).filter(|&j| !self.rows[r][j].is_zero()).collect();
        let pivot_row = self.rows[r].clone();
        let eliminate = |row: &mut Vec<Rational>| {
            let f = row[c].clone();
            if f.is_zero() {
                return;
            }
            for &j in &nonzero {
                row[j] = &row[j] - &(&f * &pivot_row[j]);
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.costs);
        self.basis[r] = c;
    }

    /// Runs Bland's rule over columns `< allowed`.
    fn optimize(&mut self, allowed: usize) -> Pivoting {
        loop {
            let Some(c) = (0..allowed).find(|&j| self.costs[j].is_negative()) else {
                return Pivoting::Optimal;
            };
            let rhs = self.rhs();
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[c];
                let better = match &leave {
                    None => true,
                    Some((k, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*k]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, c),
                None => return Pivoting::Unbounded,
            }
        }
    }

    fn set_costs(&mut self, cost: &[Rational]) {
        let mut z: Vec<Rational> = cost.to_vec();
        z.push(Rational::zero());
        for (i, row) in self.rows.iter().enumerate() {
            let cb = &cost[self.basis[i]];
            if cb.is_zero() {
                continue;
            }
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    z[j] = &z[j] - &(cb * x);
                }
            }
        }
        self.costs = z;
    }
}

impl LinearProgram {
    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn solve(&self) -> LpOutcome {
        let nv = self.num_vars();
        let m = self.constraints.len();

        // Normalize to nonnegative right-hand sides.
        let mut flipped = vec![false; m];
        let mut relations = Vec::with_capacity(m);
        for (i, c) in self.constraints.iter().enumerate() {
            let rel = if c.rhs.is_negative() {
                flipped[i] = true;
                match c.relation {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                }
            } else {
                c.relation
            };
            relations.push(rel);
        }

        // Column layout: structural | slack/surplus | artificial.
        let mut aux = Vec::new();
        let mut aux_col = vec![None; m];
        for (i, rel) in relations.iter().enumerate() {
            match rel {
                Relation::Le => {
                    aux_col[i] = Some(nv + aux.len());
                    aux.push(Aux::Slack(i));
                }
                Relation::Ge => {
                    aux_col[i] = Some(nv + aux.len());
                    aux.push(Aux::Surplus(i));
                }
                Relation::Eq => {}
            }
        }
        let first_art = nv + aux.len();
        let mut art_col = vec![None; m];
        let mut n_art = 0;
        for (i, rel) in relations.iter().enumerate() {
            if *rel != Relation::Le {
                art_col[i] = Some(first_art + n_art);
                n_art += 1;
            }
        }
        let width = first_art + n_art;

        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        for (i, c) in self.constraints.iter().enumerate() {
            let sign = if flipped[i] { -Rational::one() } else { Rational::one() };
            let mut row = vec![Rational::zero(); width + 1];
            for (j, a) in &c.coeffs {
                row[*j] = &row[*j] + &(a * &sign);
            }
            row[width] = &c.rhs * &sign;
            match relations[i] {
                Relation::Le => {
                    row[aux_col[i].unwrap()] = Rational::one();
                    basis.push(aux_col[i].unwrap());
                }
                Relation::Ge => {
                    row[aux_col[i].unwrap()] = -Rational::one();
                    row[art_col[i].unwrap()] = Rational::one();
                    basis.push(art_col[i].unwrap());
                }
                Relation::Eq => {
                    row[art_col[i].unwrap()] = Rational::one();
                    basis.push(art_col[i].unwrap());
                }
            }
            rows.push(row);
        }

        let mut t = Tableau { rows, costs: Vec::new(), basis, width };

        if n_art > 0 {
            let mut phase1 = vec![Rational::zero(); width];
            for c in &mut phase1[first_art..] {
                *c = Rational::one();
            }
            t.set_costs(&phase1);
            t.optimize(width);
            if !t.costs[width].is_zero() {
                return LpOutcome::Infeasible;
            }
            // Drive zero-level artificials out of the basis where possible;
            // a row with no structural or auxiliary entry is redundant and
            // keeps its artificial, which can never re-enter.
            for r in 0..m {
                if t.basis[r] >= first_art {
                    if let Some(c) = (0..first_art).find(|&j| !t.rows[r][j].is_zero()) {
                        t.pivot(r, c);
                    }
                }
            }
        }

        let mut cost = self.objective.clone();
        cost.resize(width, Rational::zero());
        t.set_costs(&cost);
        if let Pivoting::Unbounded = t.optimize(first_art) {
            return LpOutcome::Unbounded;
        }

        let mut x = vec![Rational::zero(); nv];
        for (i, &b) in t.basis.iter().enumerate() {
            if b < nv {
                x[b] = t.rows[i][width].clone();
            }
        }
        let duals = (0..m)
            .map(|i| {
                let y = match (relations[i], aux_col[i], art_col[i]) {
                    (Relation::Le, Some(s), _) => -&t.costs[s],
                    (Relation::Ge, Some(s), _) => t.costs[s].clone(),
                    (_, _, Some(a)) => -&t.costs[a],
                    _ => unreachable!("every row has an auxiliary or artificial column"),
                };
                if flipped[i] {
                    -y
                } else {
                    y
                }
            })
            .collect();
        LpOutcome::Optimal(LpSolution { objective: -&t.costs[width], x, duals })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn row(coeffs: &[i64], relation: Relation, rhs: i64) -> Constraint {
        Constraint { coeffs: coeffs.iter().enumerate().map(|(j, &a)| (j, r(a))).collect(), relation, rhs: r(rhs) }
    }

    fn optimal(lp: &LinearProgram) -> LpSolution {
        match lp.solve() {
            LpOutcome::Optimal(s) => s,
            other => panic!("expected optimum, got {other:?}"),
        }
    }

    fn check_duality(lp: &LinearProgram, s: &LpSolution) {
        let by: Rational = lp.constraints.iter().zip(&s.duals).map(|(c, y)| &c.rhs * y).sum();
        assert_eq!(by, s.objective);
        for j in 0..lp.num_vars() {
            let aty: Rational = lp
                .constraints
                .iter()
                .zip(&s.duals)
                .flat_map(|(c, y)| c.coeffs.iter().filter(move |(k, _)| *k == j).map(move |(_, a)| a * y))
                .sum();
            assert!(!(&lp.objective[j] - &aty).is_negative());
        }
        for (c, y) in lp.constraints.iter().zip(&s.duals) {
            match c.relation {
                Relation::Le => assert!(!y.is_positive()),
                Relation::Ge => assert!(!y.is_negative()),
                Relation::Eq => {}
            }
        }
    }

    #[test]
    fn textbook_maximization() {
        // max 2x + 3y s.t. 2x + y <= 18, 6x + 5y <= 60, 2x + 5y <= 40 -> 28 at (5, 6).
        let lp = LinearProgram {
            objective: vec![r(-2), r(-3)],
            constraints: vec![
                row(&[2, 1], Relation::Le, 18),
                row(&[6, 5], Relation::Le, 60),
                row(&[2, 5], Relation::Le, 40),
            ],
        };
        let s = optimal(&lp);
        assert_eq!(s.objective, r(-28));
        assert_eq!(s.x, vec![r(5), r(6)]);
        check_duality(&lp, &s);
    }

    #[test]
    fn covering_with_equalities_and_negative_rhs() {
        // min x + y + z s.t. x + y >= 1, y + z = 1, -x - z <= -1. The last two
        // force x >= max(z, 1 - z) >= 1/2, so the optimum is 3/2.
        let lp = LinearProgram {
            objective: vec![r(1), r(1), r(1)],
            constraints: vec![
                row(&[1, 1, 0], Relation::Ge, 1),
                row(&[0, 1, 1], Relation::Eq, 1),
                row(&[-1, 0, -1], Relation::Le, -1),
            ],
        };
        let s = optimal(&lp);
        assert_eq!(s.objective, Rational::new(3, 2));
        check_duality(&lp, &s);
    }

    #[test]
    fn redundant_equalities() {
        let lp = LinearProgram {
            objective: vec![r(1), r(2)],
            constraints: vec![row(&[1, 1], Relation::Eq, 2), row(&[2, 2], Relation::Eq, 4)],
        };
        let s = optimal(&lp);
        assert_eq!(s.objective, r(2));
        check_duality(&lp, &s);
    }

    #[test]
    fn infeasible_and_unbounded() {
        let lp = LinearProgram {
            objective: vec![r(1)],
            constraints: vec![row(&[1], Relation::Le, 1), row(&[1], Relation::Ge, 2)],
        };
        assert_eq!(lp.solve(), LpOutcome::Infeasible);
        let lp = LinearProgram { objective: vec![r(-1)], constraints: vec![row(&[1], Relation::Ge, 1)] };
        assert_eq!(lp.solve(), LpOutcome::Unbounded);
    }

    #[test]
    fn degenerate_problem_terminates() {
        // Beale's cycling example; Bland's rule must terminate.
        let q = |n, d| Rational::new(n, d);
        let lp = LinearProgram {
            objective: vec![q(-3, 4), r(150), q(-1, 50), r(6)],
            constraints: vec![
                Constraint {
                    coeffs: vec![(0, q(1, 4)), (1, r(-60)), (2, q(-1, 25)), (3, r(9))],
                    relation: Relation::Le,
                    rhs: r(0),
                },
                Constraint {
                    coeffs: vec![(0, q(1, 2)), (1, r(-90)), (2, q(-1, 50)), (3, r(3))],
                    relation: Relation::Le,
                    rhs: r(0),
                },
                Constraint { coeffs: vec![(2, r(1))], relation: Relation::Le, rhs: r(1) },
            ],
        };
        let s = optimal(&lp);
        assert_eq!(s.objective, q(-1, 20));
        check_duality(&lp, &s);
    }
}
