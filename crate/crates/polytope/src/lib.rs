//! Exact rational polyhedra.
//!
//! A polytope is given by an [`HRep`] (rows `a·x ≤ b`). [`facets`] removes
//! redundant rows with exact linear programs, [`vertices`] enumerates extreme
//! points with the double-description method, and [`verify`] checks that a
//! vertex list and a facet list describe each other.
//!
//! Everything is computed over `BigRational`; there is no floating point.

pub mod dd;
pub mod lp;
pub mod oracle;
mod rank;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

pub use lp::{maximize, LpOutcome};

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the region is empty")]
    Empty,
    #[error("the region is not full-dimensional")]
    LowerDimensional,
    #[error("the region is unbounded")]
    Unbounded,
    #[error("constraint matrix does not have full column rank")]
    NotPointed,
}

/// One half-space `normal · x ≤ bound`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfSpace {
    pub normal: Vec<Rational>,
    pub bound: Rational,
}

impl HalfSpace {
    pub fn new(normal: Vec<Rational>, bound: Rational) -> Self {
        HalfSpace { normal, bound }
    }

    /// `bound − normal·x`; nonnegative iff the point satisfies the row.
    pub fn slack(&self, x: &[Rational]) -> Rational {
        let mut s = self.bound.clone();
        for (a, v) in self.normal.iter().zip(x) {
            if !a.is_zero() {
                s -= a * v;
            }
        }
        s
    }

    /// Row scaled to a canonical positive multiple, used to detect duplicates.
    fn normalized(&self) -> (Vec<Rational>, Rational) {
        let pivot = self
            .normal
            .iter()
            .find(|a| !a.is_zero())
            .map(|a| a.abs())
            .unwrap_or_else(|| {
                if self.bound.is_zero() {
                    Rational::one()
                } else {
                    self.bound.abs()
                }
            });
        (
            self.normal.iter().map(|a| a / &pivot).collect(),
            &self.bound / &pivot,
        )
    }

    /// Same half-space as an integer row `(b, a)` with gcd 1.
    fn integer_row(&self) -> (BigInt, Vec<BigInt>) {
        let mut lcm = BigInt::one();
        for q in self.normal.iter().chain(std::iter::once(&self.bound)) {
            lcm = lcm.lcm(q.denom());
        }
        let scale = |q: &Rational| (q * Rational::from_integer(lcm.clone())).to_integer();
        let b = scale(&self.bound);
        let a: Vec<BigInt> = self.normal.iter().map(scale).collect();
        let mut g = b.abs();
        for v in &a {
            g = g.gcd(v);
        }
        if g.is_zero() || g.is_one() {
            (b, a)
        } else {
            (&b / &g, a.iter().map(|v| v / &g).collect())
        }
    }
}

/// Half-space representation of a polyhedron in a fixed dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep {
    dim: usize,
    rows: Vec<HalfSpace>,
}

impl HRep {
    pub fn new(dim: usize, rows: Vec<HalfSpace>) -> Result<Self, PolytopeError> {
        for r in &rows {
            if r.normal.len() != dim {
                return Err(PolytopeError::DimensionMismatch {
                    expected: dim,
                    got: r.normal.len(),
                });
            }
        }
        Ok(HRep { dim, rows })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[HalfSpace] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.rows.iter().all(|r| !r.slack(x).is_negative())
    }

    fn subset(&self, idx: &[usize]) -> HRep {
        HRep {
            dim: self.dim,
            rows: idx.iter().map(|&i| self.rows[i].clone()).collect(),
        }
    }
}

/// Vertex representation of a bounded polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VRep {
    pub dim: usize,
    pub points: Vec<Vec<Rational>>,
}

impl VRep {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points in lexicographic order, for set comparisons.
    pub fn sorted(&self) -> Vec<Vec<Rational>> {
        let mut p = self.points.clone();
        p.sort();
        p
    }
}

/// Indices of rows that remain after removing zero rows and duplicate
/// positive multiples (first occurrence wins).
fn distinct_rows(h: &HRep) -> Result<Vec<usize>, PolytopeError> {
    let mut seen = std::collections::HashSet::new();
    let mut keep = Vec::new();
    for (i, r) in h.rows.iter().enumerate() {
        if r.normal.iter().all(Zero::is_zero) {
            if r.bound.is_negative() {
                return Err(PolytopeError::Empty);
            }
            continue;
        }
        if seen.insert(r.normalized()) {
            keep.push(i);
        }
    }
    Ok(keep)
}

/// Largest `s ≤ 1` such that some `x` has `a·x + s ≤ b` for every row.
/// Positive iff the region has interior, negative iff it is empty.
pub fn interior_margin(h: &HRep) -> Result<Rational, PolytopeError> {
    let n = h.dim;
    let mut rows: Vec<HalfSpace> = h
        .rows
        .iter()
        .map(|r| {
            let mut a = r.normal.clone();
            a.push(Rational::one());
            HalfSpace::new(a, r.bound.clone())
        })
        .collect();
    let mut cap = vec![Rational::zero(); n + 1];
    cap[n] = Rational::one();
    rows.push(HalfSpace::new(cap.clone(), Rational::one()));
    match lp::maximize(&rows, &cap)? {
        LpOutcome::Optimal { value, .. } => Ok(value),
        LpOutcome::Infeasible => Err(PolytopeError::Empty),
        LpOutcome::Unbounded => Err(PolytopeError::Unbounded),
    }
}

/// Indices (into `h.rows()`) of the irredundant rows of a full-dimensional
/// region. A row is kept iff dropping it strictly enlarges the region, which is
/// decided by one exact LP per row.
pub fn facet_indices(h: &HRep) -> Result<Vec<usize>, PolytopeError> {
    let margin = interior_margin(h)?;
    if margin.is_negative() {
        return Err(PolytopeError::Empty);
    }
    if margin.is_zero() {
        return Err(PolytopeError::LowerDimensional);
    }
    let candidates = distinct_rows(h)?;
    let verdicts: Result<Vec<bool>, PolytopeError> = candidates
        .par_iter()
        .enumerate()
        .map(|(k, &i)| {
            let target = &h.rows[i];
            let mut rows: Vec<HalfSpace> = candidates
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, &j)| h.rows[j].clone())
                .collect();
            rows.push(HalfSpace::new(
                target.normal.clone(),
                &target.bound + Rational::one(),
            ));
            match lp::maximize(&rows, &target.normal)? {
                LpOutcome::Optimal { value, .. } => Ok(value > target.bound),
                LpOutcome::Infeasible => Err(PolytopeError::Empty),
                LpOutcome::Unbounded => Err(PolytopeError::Unbounded),
            }
        })
        .collect();
    Ok(candidates
        .into_iter()
        .zip(verdicts?)
        .filter_map(|(i, keep)| keep.then_some(i))
        .collect())
}

/// The minimal sub-list of rows defining the same region.
pub fn facets(h: &HRep) -> Result<HRep, PolytopeError> {
    let idx = facet_indices(h)?;
    Ok(h.subset(&idx))
}

/// All extreme points of a bounded region.
pub fn vertices(h: &HRep) -> Result<VRep, PolytopeError> {
    let rows: Vec<(BigInt, Vec<BigInt>)> = h.rows.iter().map(HalfSpace::integer_row).collect();
    let points = dd::enumerate_vertices(h.dim, &rows)?;
    Ok(VRep { dim: h.dim, points })
}

/// Every vertex satisfies every row, there are no duplicate vertices, and every
/// row is tight at `dim` affinely independent vertices.
pub fn verify(h: &HRep, v: &VRep) -> bool {
    if v.dim != h.dim {
        return false;
    }
    let mut uniq = v.sorted();
    uniq.dedup();
    if uniq.len() != v.points.len() {
        return false;
    }
    let slacks: Vec<Vec<Rational>> = v
        .points
        .iter()
        .map(|p| h.rows.iter().map(|r| r.slack(p)).collect())
        .collect();
    if slacks.iter().flatten().any(Signed::is_negative) {
        return false;
    }
    (0..h.rows.len()).all(|i| {
        let tight: Vec<&Vec<Rational>> = v
            .points
            .iter()
            .zip(&slacks)
            .filter(|(_, s)| s[i].is_zero())
            .map(|(p, _)| p)
            .collect();
        if tight.len() < h.dim {
            return false;
        }
        // affine rank of the tight vertices = rank of differences + 1
        let base = tight[0];
        let diffs: Vec<Vec<Rational>> = tight[1..]
            .iter()
            .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        rank::rational_rank(&diffs) + 1 >= h.dim
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    pub(crate) fn cube(dim: usize) -> HRep {
        let mut rows = Vec::new();
        for i in 0..dim {
            let mut a = vec![q(0); dim];
            a[i] = q(1);
            rows.push(HalfSpace::new(a.clone(), q(1)));
            a[i] = q(-1);
            rows.push(HalfSpace::new(a, q(0)));
        }
        HRep::new(dim, rows).unwrap()
    }

    #[test]
    fn cube_with_duplicate_row_has_six_facets() {
        let mut h = cube(3);
        let mut dup = h.rows[0].clone();
        dup.normal.iter_mut().for_each(|a| *a *= q(2));
        dup.bound *= q(2);
        h.rows.push(dup);
        h.rows.push(h.rows[3].clone());
        assert_eq!(facets(&h).unwrap().len(), 6);
        assert_eq!(facet_indices(&h).unwrap(), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn simplex_vertices() {
        let mut rows = Vec::new();
        for i in 0..3 {
            let mut a = vec![q(0); 3];
            a[i] = q(-1);
            rows.push(HalfSpace::new(a, q(0)));
        }
        rows.push(HalfSpace::new(vec![q(1); 3], q(1)));
        let h = HRep::new(3, rows).unwrap();
        let v = vertices(&h).unwrap();
        assert_eq!(v.len(), 4);
        assert!(verify(&h, &v));
    }

    #[test]
    fn flat_region_is_rejected() {
        let mut h = cube(2);
        h.rows.push(HalfSpace::new(vec![q(1), q(0)], q(0)));
        assert_eq!(facets(&h), Err(PolytopeError::LowerDimensional));
    }

    #[test]
    fn empty_region_is_rejected() {
        let mut h = cube(2);
        h.rows.push(HalfSpace::new(vec![q(1), q(1)], q(-1)));
        assert_eq!(facets(&h), Err(PolytopeError::Empty));
    }

    #[test]
    fn unbounded_region_is_detected() {
        let rows = vec![
            HalfSpace::new(vec![q(-1), q(0)], q(0)),
            HalfSpace::new(vec![q(0), q(-1)], q(0)),
            HalfSpace::new(vec![q(1), q(-1)], q(1)),
        ];
        let h = HRep::new(2, rows).unwrap();
        assert_eq!(vertices(&h), Err(PolytopeError::Unbounded));
    }

    #[test]
    fn perturbed_vertex_fails_verification() {
        let h = cube(3);
        let mut v = vertices(&h).unwrap();
        assert!(verify(&h, &v));
        v.points[0][0] += q(1);
        assert!(!verify(&h, &v));
    }

    #[test]
    fn integer_row_clears_denominators() {
        let r = HalfSpace::new(
            vec![Rational::new(1.into(), 2.into()), Rational::new((-1).into(), 3.into())],
            Rational::new(5.into(), 6.into()),
        );
        let (b, a) = r.integer_row();
        assert_eq!(b, 5.into());
        assert_eq!(a, vec![BigInt::from(3), BigInt::from(-2)]);
    }
}
