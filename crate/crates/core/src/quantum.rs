//! Quantum cohomology of `G/B` and Gromov–Witten invariants of `G/P`.
//!
//! Products are computed column by column: for a fixed `v`, `S_w ⋆ S_v` is
//! built by increasing `l(w)` from the Giambelli expansion of `S_w`, with the
//! quantum corrections of that expansion subtracted using already computed
//! shorter columns entries. Invariants of `G/P` go through the comparison with
//! `G/B`: the degree is lifted to its Peterson–Woodward representative and the
//! third index is twisted by `w_P w_{P'}`.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use crate::parabolic::ParabolicDatum;
use crate::schubert::{to_count, CohClass, SchubertRing};
use crate::weyl::WeylGroup;
use crate::{Error, Rational};

/// Largest rank a [`QDegree`] can hold.
pub const MAX_RANK: usize = 8;

/// A degree `Σ d_α α^∨` with nonnegative coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QDegree(pub [u16; MAX_RANK]);

impl QDegree {
    pub fn zero() -> Self {
        QDegree([0; MAX_RANK])
    }

    /// `None` when a coordinate is negative.
    pub fn from_coords(c: &[i64]) -> Option<Self> {
        let mut d = [0u16; MAX_RANK];
        for (slot, &x) in d.iter_mut().zip(c) {
            *slot = u16::try_from(x).ok()?;
        }
        Some(QDegree(d))
    }

    pub fn coords(&self, rank: usize) -> Vec<i64> {
        self.0[..rank].iter().map(|&x| x as i64).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &QDegree) -> QDegree {
        let mut d = self.0;
        for (a, b) in d.iter_mut().zip(other.0) {
            *a += b;
        }
        QDegree(d)
    }

    /// `⟨2ρ, d⟩`.
    pub fn weight(&self) -> usize {
        2 * self.0.iter().map(|&x| x as usize).sum::<usize>()
    }
}

/// An element of `QH*(G/B)`: (degree, Weyl index) → coefficient.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QClass(pub BTreeMap<(QDegree, usize), Rational>);

impl QClass {
    pub fn basis(w: usize) -> Self {
        let mut m = BTreeMap::new();
        m.insert((QDegree::zero(), w), Rational::one());
        QClass(m)
    }

    pub fn coeff(&self, w: usize, d: &QDegree) -> Rational {
        self.0
            .get(&(*d, w))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&QDegree, usize, &Rational)> {
        self.0.iter().map(|((d, w), c)| (d, *w, c))
    }

    pub fn add_term(&mut self, w: usize, d: QDegree, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry((d, w)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&(d, w));
        }
    }

    /// `self += c · q^shift · other`.
    pub fn add_scaled(&mut self, other: &QClass, c: &Rational, shift: &QDegree) {
        for ((d, w), v) in &other.0 {
            self.add_term(*w, d.add(shift), v * c);
        }
    }

    /// The `q = 0` part.
    pub fn classical_part(&self) -> CohClass {
        let mut out = CohClass::default();
        for ((d, w), c) in &self.0 {
            if d.is_zero() {
                out.add_term(*w, c.clone());
            }
        }
        out
    }

    pub fn quantum_part(&self) -> QClass {
        QClass(
            self.0
                .iter()
                .filter(|((d, _), _)| !d.is_zero())
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        )
    }
}

/// A polynomial in the divisor operators `D_α` and the `q_α`:
/// (exponents of `D`, degree) → coefficient.
pub type OperatorPoly = BTreeMap<(Vec<u32>, QDegree), Rational>;

/// Quantum cohomology of `G/B` for one group.
#[derive(Debug)]
pub struct QuantumRing {
    classical: Arc<SchubertRing>,
    quantum_covers: Vec<Vec<(usize, usize)>>,
    root_degrees: Vec<QDegree>,
    corrections: Vec<QClass>,
    columns: Vec<OnceLock<Vec<QClass>>>,
    operators: OnceLock<Vec<OperatorPoly>>,
}

impl QuantumRing {
    pub fn new(classical: Arc<SchubertRing>) -> Result<Self, Error> {
        let g = classical.group().clone();
        let d = g.datum();
        let npos = d.num_positive_roots();
        if d.rank() > MAX_RANK {
            return Err(Error::RankLimit {
                rank: d.rank(),
                limit: MAX_RANK,
            });
        }
        let root_degrees: Vec<QDegree> = (0..npos)
            .map(|k| QDegree::from_coords(classical.coroot(k)).expect("positive coroot"))
            .collect();
        let quantum_covers: Vec<Vec<(usize, usize)>> = (0..g.order())
            .map(|w| {
                let l = g.length(w) as i64;
                (0..npos)
                    .filter_map(|k| {
                        let x = g.mul(w, classical.reflection(k));
                        let target = l + 1 - root_degrees[k].weight() as i64;
                        (g.length(x) as i64 == target).then_some((x, k))
                    })
                    .collect()
            })
            .collect();
        let mut ring = QuantumRing {
            columns: (0..g.order()).map(|_| OnceLock::new()).collect(),
            classical,
            quantum_covers,
            root_degrees,
            corrections: Vec::new(),
            operators: OnceLock::new(),
        };
        ring.corrections = (0..g.order())
            .map(|w| {
                let mut r = QClass::default();
                for t in ring.classical.giambelli(w) {
                    let full = ring.quantum_chevalley(t.alpha, t.prev);
                    r.add_scaled(&full.quantum_part(), &t.coef, &QDegree::zero());
                }
                r
            })
            .collect();
        Ok(ring)
    }

    /// Builds the group, the classical ring and the quantum ring.
    pub fn for_group(group: Arc<WeylGroup>) -> Result<Self, Error> {
        Self::new(Arc::new(SchubertRing::new(group)?))
    }

    pub fn classical(&self) -> &Arc<SchubertRing> {
        &self.classical
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        self.classical.group()
    }

    /// `D_α ⋆ S_w`: classical covers, plus `⟨ϖ_α, γ^∨⟩ q^{γ^∨} S_{w s_γ}` whenever
    /// `l(w s_γ) = l(w) + 1 − ⟨2ρ, γ^∨⟩`.
    pub fn quantum_chevalley(&self, alpha: usize, w: usize) -> QClass {
        let mut out = QClass::default();
        for &(x, k) in self.classical.covers(w) {
            let c = self.classical.coroot(k)[alpha];
            if c != 0 {
                out.add_term(x, QDegree::zero(), Rational::from_integer(c.into()));
            }
        }
        for &(x, k) in &self.quantum_covers[w] {
            let c = self.classical.coroot(k)[alpha];
            if c != 0 {
                out.add_term(x, self.root_degrees[k], Rational::from_integer(c.into()));
            }
        }
        out
    }

    /// `D_α ⋆ X`, extended linearly.
    pub fn divisor_times(&self, alpha: usize, x: &QClass) -> QClass {
        let mut out = QClass::default();
        for ((d, w), c) in &x.0 {
            out.add_scaled(&self.quantum_chevalley(alpha, *w), c, d);
        }
        out
    }

    fn column(&self, v: usize) -> &[QClass] {
        self.columns[v].get_or_init(|| {
            let g = self.group();
            let mut col: Vec<QClass> = vec![QClass::default(); g.order()];
            col[0] = QClass::basis(v);
            for w in 1..g.order() {
                let mut acc = QClass::default();
                for t in self.classical.giambelli(w) {
                    acc.add_scaled(
                        &self.divisor_times(t.alpha, &col[t.prev]),
                        &t.coef,
                        &QDegree::zero(),
                    );
                }
                for ((d, u), c) in &self.corrections[w].0 {
                    acc.add_scaled(&col[*u], &-c.clone(), d);
                }
                col[w] = acc;
            }
            col
        })
    }

    /// `S_u ⋆ S_v`.
    pub fn quantum_product(&self, u: usize, v: usize) -> QClass {
        self.column(v)[u].clone()
    }

    /// `X ⋆ S_v`.
    pub fn product_with(&self, x: &QClass, v: usize) -> QClass {
        let col = self.column(v);
        let mut out = QClass::default();
        for ((d, u), c) in &x.0 {
            out.add_scaled(&col[*u], c, d);
        }
        out
    }

    /// The Giambelli operator of `w`: a polynomial in the `D_α` and `q_α`
    /// whose value on the unit class is `S_w`.
    pub fn quantum_giambelli(&self, w: usize) -> &OperatorPoly {
        &self.operators.get_or_init(|| {
            let g = self.group();
            let n = g.datum().rank();
            let mut ops: Vec<OperatorPoly> = Vec::with_capacity(g.order());
            let mut unit = OperatorPoly::new();
            unit.insert((vec![0; n], QDegree::zero()), Rational::one());
            ops.push(unit);
            for w in 1..g.order() {
                let mut acc = OperatorPoly::new();
                for t in self.classical.giambelli(w) {
                    for ((e, d), c) in &ops[t.prev] {
                        let mut e2 = e.clone();
                        e2[t.alpha] += 1;
                        add_op(&mut acc, (e2, *d), c * &t.coef);
                    }
                }
                for ((dq, u), c) in &self.corrections[w].0 {
                    for ((e, d), c2) in &ops[*u] {
                        add_op(&mut acc, (e.clone(), d.add(dq)), -(c * c2));
                    }
                }
                ops.push(acc);
            }
            ops
        })[w]
    }

    /// Evaluates an operator polynomial on the unit class.
    pub fn apply_operator(&self, op: &OperatorPoly) -> QClass {
        let mut out = QClass::default();
        for ((e, d), c) in op {
            let mut x = QClass::basis(0);
            for (alpha, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    x = self.divisor_times(alpha, &x);
                }
            }
            out.add_scaled(&x, c, d);
        }
        out
    }

    /// `GW(w₁, w₂, w₃; d)` on `G/B` with dimension-indexed classes: the
    /// coefficient of `q^d σ_{w₃}^∨` in `σ_{w₁} ⋆ σ_{w₂}`.
    pub fn gw_gb(&self, w1: usize, w2: usize, w3: usize, d: &[i64]) -> Result<u64, Error> {
        let g = self.group();
        let n = g.datum().rank();
        if d.len() != n {
            return Err(Error::RankMismatch);
        }
        let Some(deg) = QDegree::from_coords(d) else {
            return Ok(0);
        };
        let top = g.length(g.longest());
        if g.length(w1) + g.length(w2) + g.length(w3) + deg.weight() != 2 * top {
            return Ok(0);
        }
        let w0 = g.longest();
        let c = self.column(g.mul(w0, w2))[g.mul(w0, w1)].coeff(w3, &deg);
        to_count(&c)
    }

    /// `GW(w₁, w₂, w₃; d σ_{s_β}^*)` on `G/P_β` (or any `G/P` with `β ∉ Δ_P`
    /// and the degree supported on `β`).
    pub fn gw_gp(&self, p: &ParabolicDatum, q: &GwQuery) -> Result<u64, Error> {
        let g = self.group();
        for w in [q.w1, q.w2, q.w3] {
            if !p.is_min_rep(g, w) {
                return Err(Error::NotMinimal);
            }
        }
        let n_beta = p.n_beta(q.beta)?;
        let total = g.length(q.w1) + g.length(q.w2) + g.length(q.w3);
        if total as i64 + q.d * n_beta != 2 * p.dim() as i64 {
            return Ok(0);
        }
        let c = self.gw_gp_coefficient(p, q.w1, q.w2, q.w3, q.beta, q.d)?;
        to_count(&c)
    }

    fn gw_gp_coefficient(
        &self,
        p: &ParabolicDatum,
        w1: usize,
        w2: usize,
        w3: usize,
        beta: usize,
        d: i64,
    ) -> Result<Rational, Error> {
        let lift = self.lift_degree(p, beta, d)?;
        let Some(deg) = lift.degree else {
            return Ok(Rational::zero());
        };
        let target = self.group().mul(w3, lift.twist);
        let cl = self.classical();
        Ok(self.product_ref(cl.dual(p, w1), cl.dual(p, w2)).coeff(target, &deg))
    }

    /// The `G/B` data attached to the degree `d σ_{s_β}^*` of `G/P`.
    pub fn lift_degree(&self, p: &ParabolicDatum, beta: usize, d: i64) -> Result<LiftedDegree, Error> {
        let g = self.group();
        let mut h = vec![0i64; g.datum().rank()];
        h[beta] = d;
        let lifted = p.pw_lift_int(&h)?;
        let wp = g.longest_element(p.delta_p());
        let wpp = g.longest_element(&p.stabilized(&lifted));
        Ok(LiftedDegree {
            degree: QDegree::from_coords(&lifted),
            twist: g.mul(wp, wpp),
            lifted,
        })
    }

    /// `S_u ⋆ S_v`, borrowed from the cached column of `v`.
    pub fn product_ref(&self, u: usize, v: usize) -> &QClass {
        &self.column(v)[u]
    }
}

/// A degree of `G/P` lifted to `G/B`: the Peterson–Woodward representative,
/// as a [`QDegree`] when it is effective, and the index twist `w_P w_{P'}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedDegree {
    pub lifted: Vec<i64>,
    pub degree: Option<QDegree>,
    pub twist: usize,
}

fn add_op(m: &mut OperatorPoly, k: (Vec<u32>, QDegree), c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = m.entry(k.clone()).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        m.remove(&k);
    }
}

/// A three-point invariant of `G/P_β` in degree `d σ_{s_β}^*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GwQuery {
    pub w1: usize,
    pub w2: usize,
    pub w3: usize,
    pub beta: usize,
    pub d: i64,
}

/// `⌊2 dim(G/P) / n_β⌋`.
pub fn degree_bound(p: &ParabolicDatum, beta: usize) -> Result<i64, Error> {
    Ok(2 * p.dim() as i64 / p.n_beta(beta)?)
}
