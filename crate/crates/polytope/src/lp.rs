//! Exact simplex method in dictionary form with Bland's rule.
//!
//! Solves `max c·x` subject to rows `a_i·x ≤ b_i` with every `x_j` free. The
//! free variables are pivoted into the basis first and never leave it, so the
//! remaining work happens on the slack variables only.

use num_traits::{Signed, Zero};

use crate::{HalfSpace, PolytopeError, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, point: Vec<Rational> },
    Infeasible,
    Unbounded,
}

/// `basis[r] = table[r][0] + Σ_k table[r][k+1] · nonbasic[k]`.
struct Dictionary {
    n_free: usize,
    basis: Vec<usize>,
    nonbasic: Vec<usize>,
    table: Vec<Vec<Rational>>,
    objective: Vec<Rational>,
}

enum Step {
    Optimal,
    Unbounded,
}

impl Dictionary {
    fn is_free(&self, var: usize) -> bool {
        var < self.n_free
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let k = col + 1;
        let t = self.table[row][k].clone();
        debug_assert!(!t.is_zero());
        let inv = t.recip();
        let mut new_row: Vec<Rational> = self.table[row].iter().map(|v| -(v * &inv)).collect();
        new_row[k] = inv;
        let substitute = |target: &mut Vec<Rational>| {
            let a = std::mem::take(&mut target[k]);
            if a.is_zero() {
                return;
            }
            for (j, v) in new_row.iter().enumerate() {
                if j == k {
                    target[j] = &a * v;
                } else if !v.is_zero() {
                    target[j] += &a * v;
                }
            }
        };
        for (r, target) in self.table.iter_mut().enumerate() {
            if r != row {
                substitute(target);
            }
        }
        substitute(&mut self.objective);
        self.table[row] = new_row;
        std::mem::swap(&mut self.basis[row], &mut self.nonbasic[col]);
    }

    /// Bland's rule: smallest-index improving column, ties in the ratio test
    /// broken by smallest basic index.
    fn run(&mut self) -> Step {
        loop {
            let entering = (0..self.nonbasic.len())
                .filter(|&c| self.objective[c + 1].is_positive())
                .min_by_key(|&c| self.nonbasic[c]);
            let Some(col) = entering else {
                return Step::Optimal;
            };
            let mut best: Option<(usize, Rational)> = None;
            for (r, row) in self.table.iter().enumerate() {
                if self.is_free(self.basis[r]) || !row[col + 1].is_negative() {
                    continue;
                }
                let ratio = &row[0] / -&row[col + 1];
                let better = match &best {
                    None => true,
                    Some((br, bv)) => {
                        ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br])
                    }
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            match best {
                Some((row, _)) => self.pivot(row, col),
                None => return Step::Unbounded,
            }
        }
    }
}

/// Maximizes `objective · x` over `{x : row.normal · x ≤ row.bound}`.
pub fn maximize(rows: &[HalfSpace], objective: &[Rational]) -> Result<LpOutcome, PolytopeError> {
    let n = objective.len();
    let m = rows.len();
    for r in rows {
        if r.normal.len() != n {
            return Err(PolytopeError::DimensionMismatch {
                expected: n,
                got: r.normal.len(),
            });
        }
    }
    let table = rows
        .iter()
        .map(|r| {
            std::iter::once(r.bound.clone())
                .chain(r.normal.iter().map(|a| -a))
                .collect()
        })
        .collect();
    let mut dict = Dictionary {
        n_free: n,
        basis: (n..n + m).collect(),
        nonbasic: (0..n).collect(),
        table,
        objective: vec![Rational::zero(); n + 1],
    };

    // Pivot every free variable into the basis.
    for col in 0..n {
        let row = (0..m).find(|&r| !dict.is_free(dict.basis[r]) && !dict.table[r][col + 1].is_zero());
        match row {
            Some(r) => dict.pivot(r, col),
            None => return Err(PolytopeError::NotPointed),
        }
    }

    // Phase I with one auxiliary variable.
    let aux = n + m;
    let worst = (0..m)
        .filter(|&r| !dict.is_free(dict.basis[r]) && dict.table[r][0].is_negative())
        .min_by(|&a, &b| {
            dict.table[a][0]
                .cmp(&dict.table[b][0])
                .then(dict.basis[a].cmp(&dict.basis[b]))
        });
    if let Some(start) = worst {
        let aux_col = dict.nonbasic.len();
        dict.nonbasic.push(aux);
        for r in 0..m {
            let coef = if dict.is_free(dict.basis[r]) {
                Rational::zero()
            } else {
                Rational::from_integer(1.into())
            };
            dict.table[r].push(coef);
        }
        dict.objective = vec![Rational::zero(); aux_col + 2];
        dict.objective[aux_col + 1] = Rational::from_integer((-1).into());
        dict.pivot(start, aux_col);
        if let Step::Unbounded = dict.run() {
            unreachable!("phase one objective is bounded by zero");
        }
        if dict.objective[0].is_negative() {
            return Ok(LpOutcome::Infeasible);
        }
        if let Some(r) = dict.basis.iter().position(|&v| v == aux) {
            let col = (0..dict.nonbasic.len())
                .find(|&c| !dict.table[r][c + 1].is_zero())
                .expect("auxiliary row has a nonzero coefficient");
            dict.pivot(r, col);
        }
        let col = dict
            .nonbasic
            .iter()
            .position(|&v| v == aux)
            .expect("auxiliary variable is nonbasic");
        dict.nonbasic.remove(col);
        for row in dict.table.iter_mut() {
            row.remove(col + 1);
        }
    }

    // Phase II.
    let width = dict.nonbasic.len() + 1;
    let mut obj = vec![Rational::zero(); width];
    for (r, &var) in dict.basis.iter().enumerate() {
        if var < n && !objective[var].is_zero() {
            for (o, t) in obj.iter_mut().zip(&dict.table[r]) {
                *o += &objective[var] * t;
            }
        }
    }
    dict.objective = obj;
    match dict.run() {
        Step::Unbounded => Ok(LpOutcome::Unbounded),
        Step::Optimal => {
            let mut point = vec![Rational::zero(); n];
            for (r, &var) in dict.basis.iter().enumerate() {
                if var < n {
                    point[var] = dict.table[r][0].clone();
                }
            }
            Ok(LpOutcome::Optimal {
                value: dict.objective[0].clone(),
                point,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn row(a: &[i64], b: i64) -> HalfSpace {
        HalfSpace::new(a.iter().map(|&v| q(v)).collect(), q(b))
    }

    #[test]
    fn small_optimum() {
        // max x + y, x ≤ 2, y ≤ 3, x + 2y ≤ 6, x,y ≥ 0
        let rows = vec![
            row(&[1, 0], 2),
            row(&[0, 1], 3),
            row(&[1, 2], 6),
            row(&[-1, 0], 0),
            row(&[0, -1], 0),
        ];
        match maximize(&rows, &[q(1), q(1)]).unwrap() {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, q(4));
                assert_eq!(point, vec![q(2), q(2)]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn origin_infeasible_needs_phase_one() {
        // 1 ≤ x ≤ 3, 2 ≤ y ≤ 5; min x + y
        let rows = vec![
            row(&[-1, 0], -1),
            row(&[1, 0], 3),
            row(&[0, -1], -2),
            row(&[0, 1], 5),
        ];
        match maximize(&rows, &[q(-1), q(-1)]).unwrap() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, q(-3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let rows = vec![row(&[1], 0), row(&[-1], -1)];
        assert_eq!(maximize(&rows, &[q(1)]).unwrap(), LpOutcome::Infeasible);
        let rows = vec![row(&[-1, 0], 0), row(&[0, 1], 1)];
        assert_eq!(maximize(&rows, &[q(1), q(0)]).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn degenerate_vertex_terminates() {
        // Many rows through the same optimal vertex (0,0,1).
        let rows = vec![
            row(&[1, 1, 1], 1),
            row(&[-1, 1, 1], 1),
            row(&[1, -1, 1], 1),
            row(&[-1, -1, 1], 1),
            row(&[0, 0, 1], 1),
            row(&[0, 0, -1], 0),
        ];
        match maximize(&rows, &[q(0), q(0), q(1)]).unwrap() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, q(1)),
            other => panic!("{other:?}"),
        }
    }
}
