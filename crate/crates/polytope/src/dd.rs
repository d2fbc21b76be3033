//! Double-description vertex enumeration.
//!
//! The polytope `{x : a_i·x ≤ b_i}` is homogenized to the cone
//! `{(y0, x) : b_i·y0 − a_i·x ≥ 0, y0 ≥ 0}`. Starting from the simplicial cone
//! cut out by the first linearly independent rows, the remaining rows are
//! inserted in index order; each insertion keeps the rays on the nonnegative
//! side and combines every adjacent (positive, negative) pair. Two rays are
//! adjacent when they share at least `d − 2` tight rows and no third ray is
//! tight on all of those rows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rank::integer_rank;
use crate::{PolytopeError, Rational};

#[derive(Clone)]
struct Ray {
    coords: Vec<BigInt>,
    zeros: Vec<u64>,
}

fn bit_set(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for x in &v {
        g = g.gcd(x);
    }
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    v
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Picks `d` linearly independent rows greedily in index order.
fn initial_basis(rows: &[Vec<BigInt>], d: usize) -> Option<Vec<usize>> {
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..rows.len() {
        let mut trial: Vec<&[BigInt]> = chosen.iter().map(|&j| rows[j].as_slice()).collect();
        trial.push(&rows[i]);
        if integer_rank(&trial, d) == trial.len() {
            chosen.push(i);
            if chosen.len() == d {
                return Some(chosen);
            }
        }
    }
    None
}

/// Inverse of a square integer matrix, as columns scaled to primitive integer
/// vectors (only their directions matter).
fn inverse_columns(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let d = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational> = row.iter().map(|v| Rational::from_integer(v.clone())).collect();
            r.extend((0..d).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    for c in 0..d {
        let p = (c..d).find(|&r| !a[r][c].is_zero()).expect("nonsingular basis");
        a.swap(c, p);
        let inv = a[c][c].recip();
        for v in a[c].iter_mut() {
            *v *= &inv;
        }
        for r in 0..d {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..2 * d {
                    let t = &f * &a[c][k];
                    a[r][k] -= t;
                }
            }
        }
    }
    (0..d)
        .map(|col| {
            let entries: Vec<Rational> = (0..d).map(|r| a[r][d + col].clone()).collect();
            let mut lcm = BigInt::one();
            for q in &entries {
                lcm = lcm.lcm(q.denom());
            }
            primitive(
                entries
                    .iter()
                    .map(|q| (q * Rational::from_integer(lcm.clone())).to_integer())
                    .collect(),
            )
        })
        .collect()
}

/// Vertices of `{x ∈ Q^dim : a·x ≤ b for (b, a) in rows}`.
pub fn enumerate_vertices(
    dim: usize,
    rows: &[(BigInt, Vec<BigInt>)],
) -> Result<Vec<Vec<Rational>>, PolytopeError> {
    let d = dim + 1;
    let mut cone: Vec<Vec<BigInt>> = Vec::with_capacity(rows.len() + 1);
    let mut y0 = vec![BigInt::zero(); d];
    y0[0] = BigInt::one();
    cone.push(y0);
    for (b, a) in rows {
        if a.len() != dim {
            return Err(PolytopeError::DimensionMismatch {
                expected: dim,
                got: a.len(),
            });
        }
        let mut g = Vec::with_capacity(d);
        g.push(b.clone());
        g.extend(a.iter().map(|v| -v));
        cone.push(g);
    }
    let words = cone.len().div_ceil(64);
    let basis = initial_basis(&cone, d).ok_or(PolytopeError::NotPointed)?;
    let basis_rows: Vec<Vec<BigInt>> = basis.iter().map(|&i| cone[i].clone()).collect();
    let mut rays: Vec<Ray> = inverse_columns(&basis_rows)
        .into_iter()
        .enumerate()
        .map(|(k, coords)| {
            let mut zeros = vec![0u64; words];
            for (j, &row) in basis.iter().enumerate() {
                if j != k {
                    bit_set(&mut zeros, row);
                }
            }
            Ray { coords, zeros }
        })
        .collect();

    let in_basis: std::collections::HashSet<usize> = basis.iter().copied().collect();
    for (i, g) in cone.iter().enumerate() {
        if in_basis.contains(&i) {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| dot(g, &r.coords)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_negative()).collect();

        let mut created = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common: Vec<u64> = rays[p]
                    .zeros
                    .iter()
                    .zip(&rays[n].zeros)
                    .map(|(a, b)| a & b)
                    .collect();
                let count: u32 = common.iter().map(|w| w.count_ones()).sum();
                if (count as usize) < d - 2 {
                    continue;
                }
                let dominated = rays.iter().enumerate().any(|(k, r)| {
                    k != p
                        && k != n
                        && r.zeros.iter().zip(&common).all(|(z, c)| z & c == *c)
                });
                if dominated {
                    continue;
                }
                let coords: Vec<BigInt> = rays[n]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(xn, xp)| &values[p] * xn - &values[n] * xp)
                    .collect();
                let mut zeros = common;
                bit_set(&mut zeros, i);
                created.push(Ray {
                    coords: primitive(coords),
                    zeros,
                });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (k, mut r) in rays.into_iter().enumerate() {
            if values[k].is_negative() {
                continue;
            }
            if values[k].is_zero() {
                bit_set(&mut r.zeros, i);
            }
            next.push(r);
        }
        next.extend(created);
        rays = next;
    }

    let mut vertices = Vec::with_capacity(rays.len());
    for r in rays {
        if !r.coords[0].is_positive() {
            return Err(PolytopeError::Unbounded);
        }
        let w = Rational::from_integer(r.coords[0].clone());
        vertices.push(
            r.coords[1..]
                .iter()
                .map(|v| Rational::from_integer(v.clone()) / &w)
                .collect(),
        );
    }
    vertices.sort();
    Ok(vertices)
}
