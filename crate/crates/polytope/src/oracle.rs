//! Brute-force vertex enumeration: solve every square subsystem. Exponential
//! in the number of rows; meant as a reference for small systems.

use num_traits::{Signed, Zero};

use crate::{HRep, PolytopeError, Rational, VRep};

/// Unique solution of `a x = b`, if `a` is invertible.
fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] / &a[col][col];
                for c in col..n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
                let t = &f * &b[col];
                b[r] -= t;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

fn next_subset(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Every feasible point where `dim` linearly independent rows are tight.
pub fn vertices_by_subsets(h: &HRep) -> Result<VRep, PolytopeError> {
    let d = h.dim();
    let rows = h.rows();
    let mut points = Vec::new();
    if rows.len() >= d {
        let mut idx: Vec<usize> = (0..d).collect();
        loop {
            let a = idx.iter().map(|&i| rows[i].normal.clone()).collect();
            let b = idx.iter().map(|&i| rows[i].bound.clone()).collect();
            if let Some(x) = solve(a, b) {
                if rows.iter().all(|r| !r.slack(&x).is_negative()) {
                    points.push(x);
                }
            }
            if !next_subset(&mut idx, rows.len()) {
                break;
            }
        }
    }
    points.sort();
    points.dedup();
    if points.is_empty() {
        return Err(PolytopeError::Empty);
    }
    Ok(VRep { dim: d, points })
}
