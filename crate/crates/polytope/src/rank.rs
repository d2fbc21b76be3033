use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::Rational;

pub(crate) fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in rank + 1..m.len() {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &pivot;
            for k in c..cols {
                let d = &f * &m[rank][k];
                m[r][k] -= d;
            }
        }
        rank += 1;
    }
    rank
}

const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

/// Rank of a small integer matrix.
///
/// Works modulo a 61-bit prime when Hadamard's bound shows that no nonzero
/// minor can vanish modulo the prime; otherwise falls back to exact rational
/// elimination.
pub(crate) fn integer_rank(rows: &[&[BigInt]], cols: usize) -> usize {
    let max_entry = rows
        .iter()
        .flat_map(|r| r.iter())
        .map(|v| v.abs().to_f64().unwrap_or(f64::INFINITY))
        .fold(0.0f64, f64::max);
    let k = rows.len().min(cols) as f64;
    // |minor| ≤ (max · √k)^k
    let log_bound = k * (max_entry.max(1.0).log2() + 0.5 * k.max(1.0).log2());
    if log_bound < 60.0 {
        modular_rank(rows, cols)
    } else {
        let m: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|v| Rational::from_integer(v.clone())).collect())
            .collect();
        rational_rank(&m)
    }
}

fn modular_rank(rows: &[&[BigInt]], cols: usize) -> usize {
    let p = BigInt::from(PRIME);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| {
                    let x = ((v % &p) + &p) % &p;
                    x.to_u64().expect("reduced modulo prime")
                })
                .collect()
        })
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], PRIME - 2);
        for r in rank + 1..m.len() {
            if m[r][c] == 0 {
                continue;
            }
            let f = mul_mod(m[r][c], inv);
            for k in c..cols {
                let sub = mul_mod(f, m[rank][k]);
                m[r][k] = (m[r][k] + PRIME - sub) % PRIME;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_and_rational_ranks_agree() {
        let data: Vec<Vec<BigInt>> = vec![
            vec![1, 2, 3].into_iter().map(BigInt::from).collect(),
            vec![2, 4, 6].into_iter().map(BigInt::from).collect(),
            vec![0, 1, -1].into_iter().map(BigInt::from).collect(),
        ];
        let refs: Vec<&[BigInt]> = data.iter().map(Vec::as_slice).collect();
        assert_eq!(integer_rank(&refs, 3), 2);
        let rat: Vec<Vec<Rational>> = data
            .iter()
            .map(|r| r.iter().map(|v| Rational::from_integer(v.clone())).collect())
            .collect();
        assert_eq!(rational_rank(&rat), 2);
    }
}
