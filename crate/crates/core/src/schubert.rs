//! Schubert calculus of `G/B` and `G/P`.
//!
//! Internally the Schubert class `S_w` has codegree `l(w)`. Classes are
//! multiplied through a Giambelli expansion in divisor classes: for every `w`
//! the class `S_w` is written as `Σ c_j D_{α_j}·S_{w_j}` with `l(w_j) = l(w) − 1`,
//! the coefficients coming from exact linear algebra over the Chevalley rule.
//! The coinvariant model (polynomials, BGG operators, [`SchubertRing::expand`])
//! is kept as an independent oracle.
//!
//! The structure constants `c(w₁, w₂, w₃)` follow the dimension-indexed
//! convention `σ_w ∈ H^{2(dim − l(w))}`; [`SchubertRing::dual`] converts.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_traits::{One, Signed, Zero};

use crate::parabolic::ParabolicDatum;
use crate::rootsys::{RootDatum, RootVec, WeightVec};
use crate::weyl::WeylGroup;
use crate::{Error, Rational};

/// A polynomial on the Cartan algebra with variables `x_i = ϖ_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Poly::zero(nvars);
        p.terms.insert(e, Rational::one());
        p
    }

    /// The linear form `Σ λ_i x_i`.
    pub fn from_weight(w: &WeightVec) -> Self {
        let n = w.0.len();
        let mut p = Poly::zero(n);
        for (i, c) in w.0.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    pub fn from_root(datum: &RootDatum, r: &RootVec) -> Self {
        Poly::from_weight(&datum.root_to_weight(r))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn homogeneous_part(&self, deg: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == deg)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&vec![0; self.nvars])
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn pow_linear(lin: &Poly, k: u32, cache: &mut Vec<Poly>) -> Poly {
        while cache.len() <= k as usize {
            let next = if cache.is_empty() {
                Poly::one(lin.nvars)
            } else {
                cache.last().unwrap() * lin
            };
            cache.push(next);
        }
        cache[k as usize].clone()
    }

    /// `s_i f`, substituting `x_i ↦ x_i − α_i`.
    pub fn reflect(&self, datum: &RootDatum, i: usize) -> Poly {
        let n = self.nvars;
        let image = &Poly::var(n, i) - &Poly::from_root(datum, &RootVec::simple(n, i));
        let mut cache = Vec::new();
        let mut out = Poly::zero(n);
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[i] = 0;
            let mut mono = Poly::zero(n);
            mono.terms.insert(rest, c.clone());
            let t = &mono * &Poly::pow_linear(&image, e[i], &mut cache);
            for (e2, c2) in t.terms {
                out.add_term(e2, c2);
            }
        }
        out
    }

    /// Exact division by `α_i`, whose `x_i` coefficient is 2.
    fn divide_by_simple_root(&self, datum: &RootDatum, i: usize) -> Result<Poly, Error> {
        let n = self.nvars;
        let alpha = Poly::from_root(datum, &RootVec::simple(n, i));
        let two = Rational::from_integer(2.into());
        let mut rem = self.clone();
        let mut quot = Poly::zero(n);
        loop {
            let lead = rem
                .terms
                .iter()
                .max_by(|a, b| a.0[i].cmp(&b.0[i]).then_with(|| b.0.cmp(a.0)))
                .map(|(e, c)| (e.clone(), c.clone()));
            let Some((e, c)) = lead else { break };
            if e[i] == 0 {
                return Err(Error::Internal("divided difference is not exact".into()));
            }
            let mut qe = e;
            qe[i] -= 1;
            let qc = c / &two;
            let mut mono = Poly::zero(n);
            mono.terms.insert(qe.clone(), qc.clone());
            rem = &rem - &(&mono * &alpha);
            quot.add_term(qe, qc);
        }
        Ok(quot)
    }

    /// The BGG operator `∂_i f = (f − s_i f)/α_i`.
    pub fn divided_difference(&self, datum: &RootDatum, i: usize) -> Result<Poly, Error> {
        (self - &self.reflect(datum, i)).divide_by_simple_root(datum, i)
    }
}

pub fn divided_difference(datum: &RootDatum, i: usize, f: &Poly) -> Result<Poly, Error> {
    f.divided_difference(datum, i)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

/// A class in the Schubert basis: Weyl group index → coefficient.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CohClass(pub BTreeMap<usize, Rational>);

impl CohClass {
    pub fn basis(w: usize) -> Self {
        let mut m = BTreeMap::new();
        m.insert(w, Rational::one());
        CohClass(m)
    }

    pub fn coeff(&self, w: usize) -> Rational {
        self.0.get(&w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, w: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(w).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, other: &CohClass, c: &Rational) {
        for (&w, v) in &other.0 {
            self.add_term(w, v * c);
        }
    }
}

/// One term `c · D_α · S_prev` of a Giambelli expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GiambelliTerm {
    pub alpha: usize,
    pub prev: usize,
    pub coef: Rational,
}

/// Schubert calculus of `G/B` for one group.
#[derive(Debug)]
pub struct SchubertRing {
    group: Arc<WeylGroup>,
    coroots: Vec<Vec<i64>>,
    reflections: Vec<usize>,
    covers: Vec<Vec<(usize, usize)>>,
    giambelli: Vec<Vec<GiambelliTerm>>,
    polys: OnceLock<Vec<Poly>>,
    columns: Vec<OnceLock<Vec<CohClass>>>,
}

impl SchubertRing {
    pub fn new(group: Arc<WeylGroup>) -> Result<Self, Error> {
        let datum = group.datum().clone();
        let npos = datum.num_positive_roots();
        let coroots: Vec<Vec<i64>> = (0..npos).map(|k| datum.coroot_coords(k)).collect();
        let reflections: Vec<usize> = (0..npos).map(|k| group.reflection(k)).collect();
        let covers: Vec<Vec<(usize, usize)>> = (0..group.order())
            .map(|w| {
                let l = group.length(w);
                (0..npos)
                    .filter_map(|k| {
                        let x = group.mul(w, reflections[k]);
                        (group.length(x) == l + 1).then_some((x, k))
                    })
                    .collect()
            })
            .collect();
        let mut ring = SchubertRing {
            columns: (0..group.order()).map(|_| OnceLock::new()).collect(),
            group,
            coroots,
            reflections,
            covers,
            giambelli: Vec::new(),
            polys: OnceLock::new(),
        };
        ring.giambelli = ring.solve_giambelli()?;
        Ok(ring)
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        self.group.datum()
    }

    /// Integer coroot coordinates of the `k`-th positive root.
    pub fn coroot(&self, k: usize) -> &[i64] {
        &self.coroots[k]
    }

    /// Index of `s_γ` for the `k`-th positive root.
    pub fn reflection(&self, k: usize) -> usize {
        self.reflections[k]
    }

    /// Pairs `(w s_γ, k)` with `γ` the `k`-th positive root and
    /// `l(w s_γ) = l(w) + 1`.
    pub fn covers(&self, w: usize) -> &[(usize, usize)] {
        &self.covers[w]
    }

    /// `D_α · S_w = Σ ⟨ϖ_α, γ^∨⟩ S_{w s_γ}` over the covers of `w`.
    pub fn chevalley(&self, alpha: usize, w: usize) -> CohClass {
        let mut out = CohClass::default();
        for &(x, k) in &self.covers[w] {
            let c = self.coroots[k][alpha];
            if c != 0 {
                out.add_term(x, Rational::from_integer(c.into()));
            }
        }
        out
    }

    pub fn giambelli(&self, w: usize) -> &[GiambelliTerm] {
        &self.giambelli[w]
    }

    fn solve_giambelli(&self) -> Result<Vec<Vec<GiambelliTerm>>, Error> {
        let g = &self.group;
        let n = g.datum().rank();
        let top = g.length(g.longest());
        let mut levels: Vec<Vec<usize>> = vec![Vec::new(); top + 1];
        for w in 0..g.order() {
            levels[g.length(w)].push(w);
        }
        let mut out: Vec<Vec<GiambelliTerm>> = vec![Vec::new(); g.order()];
        for k in 1..=top {
            let rows = &levels[k];
            let pos: std::collections::HashMap<usize, usize> =
                rows.iter().enumerate().map(|(i, &w)| (w, i)).collect();
            let m = rows.len();
            let mut echelon: Vec<(usize, Vec<Rational>)> = Vec::new();
            let mut chosen: Vec<(usize, usize, Vec<Rational>)> = Vec::new();
            'cols: for &prev in &levels[k - 1] {
                for alpha in 0..n {
                    let class = self.chevalley(alpha, prev);
                    if class.is_zero() {
                        continue;
                    }
                    let mut v = vec![Rational::zero(); m];
                    for (x, c) in &class.0 {
                        v[pos[x]] = c.clone();
                    }
                    let orig = v.clone();
                    for (p, row) in &echelon {
                        if !v[*p].is_zero() {
                            let f = v[*p].clone() / &row[*p];
                            for (a, b) in v.iter_mut().zip(row) {
                                *a -= &f * b;
                            }
                        }
                    }
                    if let Some(p) = v.iter().position(|x| !x.is_zero()) {
                        echelon.push((p, v));
                        chosen.push((alpha, prev, orig));
                        if chosen.len() == m {
                            break 'cols;
                        }
                    }
                }
            }
            if chosen.len() != m {
                return Err(Error::Internal(format!(
                    "divisor classes do not span codegree {k}"
                )));
            }
            let inv = invert_square(&(0..m)
                .map(|r| chosen.iter().map(|(_, _, v)| v[r].clone()).collect())
                .collect::<Vec<Vec<Rational>>>())?;
            for (i, &w) in rows.iter().enumerate() {
                out[w] = (0..m)
                    .filter(|&j| !inv[j][i].is_zero())
                    .map(|j| GiambelliTerm {
                        alpha: chosen[j].0,
                        prev: chosen[j].1,
                        coef: inv[j][i].clone(),
                    })
                    .collect();
            }
        }
        Ok(out)
    }

    /// `D_α · X`, extended linearly.
    pub fn divisor_times(&self, alpha: usize, x: &CohClass) -> CohClass {
        let mut out = CohClass::default();
        for (&w, c) in &x.0 {
            out.add_scaled(&self.chevalley(alpha, w), c);
        }
        out
    }

    fn column(&self, v: usize) -> &[CohClass] {
        self.columns[v].get_or_init(|| {
            let g = &self.group;
            let mut col: Vec<CohClass> = vec![CohClass::default(); g.order()];
            col[0] = CohClass::basis(v);
            for w in 1..g.order() {
                let mut acc = CohClass::default();
                for t in &self.giambelli[w] {
                    acc.add_scaled(&self.divisor_times(t.alpha, &col[t.prev]), &t.coef);
                }
                col[w] = acc;
            }
            col
        })
    }

    /// `S_u · S_v` in `H*(G/B)`.
    pub fn product(&self, u: usize, v: usize) -> CohClass {
        self.column(v)[u].clone()
    }

    /// `S_w` as a polynomial: `∂_{w⁻¹w₀}` applied to `∏_{α>0} α / |W|`.
    pub fn schubert_polynomial(&self, w: usize) -> Result<Poly, Error> {
        if let Some(p) = self.polys.get() {
            return Ok(p[w].clone());
        }
        let all = self.all_polynomials()?;
        let _ = self.polys.set(all);
        Ok(self.polys.get().expect("initialized")[w].clone())
    }

    fn all_polynomials(&self) -> Result<Vec<Poly>, Error> {
        let g = &self.group;
        let d = g.datum();
        let n = d.rank();
        let mut top = Poly::one(n);
        for r in d.positive_roots() {
            top = &top * &Poly::from_root(d, r);
        }
        top = top.scale(&Rational::new(1.into(), (d.weyl_order() as i64).into()));
        let mut polys: Vec<Option<Poly>> = vec![None; g.order()];
        polys[g.longest()] = Some(top);
        for w in (0..g.order()).rev() {
            let Some(p) = polys[w].clone() else {
                return Err(Error::Internal("Schubert polynomial not reached".into()));
            };
            for i in 0..n {
                let x = g.right_mul(w, i);
                if g.length(x) < g.length(w) && polys[x].is_none() {
                    polys[x] = Some(p.divided_difference(d, i)?);
                }
            }
        }
        Ok(polys.into_iter().map(|p| p.expect("filled")).collect())
    }

    /// Coefficients of `f` in the Schubert basis modulo the ideal generated by
    /// invariants of positive degree: the coefficient of `S_w` is the constant
    /// term of `∂_w` applied to the degree-`l(w)` part of `f`.
    pub fn expand(&self, f: &Poly) -> Result<CohClass, Error> {
        let g = &self.group;
        let d = g.datum();
        let n = d.rank();
        let mut out = CohClass::default();
        let Some(maxdeg) = f.degree() else {
            return Ok(out);
        };
        for deg in 0..=maxdeg.min(g.length(g.longest()) as u32) {
            let part = f.homogeneous_part(deg);
            if part.is_zero() {
                continue;
            }
            let mut applied: Vec<Option<Poly>> = vec![None; g.order()];
            applied[0] = Some(part);
            for w in 1..g.order() {
                let l = g.length(w);
                if l > deg as usize {
                    break;
                }
                let i = (0..n)
                    .find(|&i| g.length(g.left_mul(w, i)) < l)
                    .expect("nontrivial element has a left descent");
                let prev = applied[g.left_mul(w, i)].as_ref().expect("shorter element");
                let p = prev.divided_difference(d, i)?;
                if l == deg as usize {
                    out.add_term(w, p.constant_term());
                }
                applied[w] = Some(p);
            }
            if deg == 0 {
                out.add_term(0, applied[0].as_ref().unwrap().constant_term());
            }
        }
        Ok(out)
    }

    /// `S_u · S_v` through polynomial multiplication and [`Self::expand`].
    pub fn product_via_polynomials(&self, u: usize, v: usize) -> Result<CohClass, Error> {
        let p = &self.schubert_polynomial(u)? * &self.schubert_polynomial(v)?;
        self.expand(&p)
    }

    /// `w ↦ w₀ w w_P`, the duality involution on `W^P`.
    pub fn dual(&self, p: &ParabolicDatum, w: usize) -> usize {
        let g = &self.group;
        g.mul(g.mul(g.longest(), w), g.longest_element(p.delta_p()))
    }

    /// `c(w₁, w₂, w₃)`: the coefficient of `σ_{w₃}^∨` in `σ_{w₁}σ_{w₂}` on `G/P`.
    pub fn triple_number(
        &self,
        p: &ParabolicDatum,
        w1: usize,
        w2: usize,
        w3: usize,
    ) -> Result<u64, Error> {
        let g = &self.group;
        for w in [w1, w2, w3] {
            if !p.is_min_rep(g, w) {
                return Err(Error::NotMinimal);
            }
        }
        if g.length(w1) + g.length(w2) + g.length(w3) != 2 * p.dim() {
            return Ok(0);
        }
        let c = self
            .column(self.dual(p, w2))
            .get(self.dual(p, w1))
            .map(|x| x.coeff(w3))
            .unwrap_or_else(Rational::zero);
        to_count(&c)
    }

    /// Levi-movability: `Σᵢ #Φ(wᵢ, χ) = 2 #Φ(G/P, χ)` for every `χ`.
    pub fn classical_chi_condition(
        &self,
        p: &ParabolicDatum,
        w1: usize,
        w2: usize,
        w3: usize,
    ) -> bool {
        let g = &self.group;
        let (a, b, c) = (p.chi_counts(g, w1), p.chi_counts(g, w2), p.chi_counts(g, w3));
        p.chi_classes()
            .iter()
            .enumerate()
            .all(|(k, (_, bits))| a[k] + b[k] + c[k] == 2 * bits.count_ones() as usize)
    }
}

/// A structure constant as a nonnegative integer.
pub(crate) fn to_count(c: &Rational) -> Result<u64, Error> {
    if !c.is_integer() || c.is_negative() {
        return Err(Error::Internal(format!(
            "structure constant {c} is not a nonnegative integer"
        )));
    }
    c.to_integer()
        .try_into()
        .map_err(|_| Error::Internal("structure constant overflow".into()))
}

pub(crate) fn invert_square(m: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>, Error> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&r| !a[r][c].is_zero())
            .ok_or_else(|| Error::Internal("singular Giambelli system".into()))?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        for v in a[c].iter_mut() {
            *v *= &inv;
        }
        let pivot = a[c].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != c && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;
    use crate::weyl::WeylElt;

    fn ring(name: &str) -> SchubertRing {
        let d = Arc::new(RootDatum::new(name.parse::<CartanType>().unwrap()).unwrap());
        SchubertRing::new(Arc::new(WeylGroup::new(d).unwrap())).unwrap()
    }

    fn idx(r: &SchubertRing, word: &[usize]) -> usize {
        let d = r.datum();
        r.group().index_of(&WeylElt::from_word(d, word)).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn divided_difference_basics() {
        let r = ring("A2");
        let d = r.datum();
        let a = Poly::from_root(d, &RootVec::simple(2, 0));
        assert_eq!(a.divided_difference(d, 0).unwrap(), Poly::constant(2, q(2)));
        assert!(Poly::constant(2, q(5)).divided_difference(d, 1).unwrap().is_zero());
        assert_eq!(
            Poly::var(2, 0).divided_difference(d, 0).unwrap(),
            Poly::one(2)
        );
        assert!(Poly::var(2, 1).divided_difference(d, 0).unwrap().is_zero());
    }

    #[test]
    fn schubert_polynomials_small() {
        let a1 = ring("A1");
        let s = a1.schubert_polynomial(1).unwrap();
        let half_alpha = Poly::from_root(a1.datum(), &RootVec(vec![1])).scale(&Rational::new(1.into(), 2.into()));
        assert_eq!(s, half_alpha);
        assert_eq!(a1.schubert_polynomial(0).unwrap(), Poly::one(1));
        let a2 = ring("A2");
        let s1 = idx(&a2, &[0]);
        let e = a2.expand(&Poly::var(2, 0)).unwrap();
        assert_eq!(e, CohClass::basis(s1));
        for w in 0..a2.group().order() {
            let p = a2.schubert_polynomial(w).unwrap();
            assert!(p.is_homogeneous());
            assert_eq!(p.degree().unwrap_or(0) as usize, a2.group().length(w));
        }
    }

    #[test]
    fn expand_is_dual_and_kills_invariants() {
        for name in ["A2", "B2", "G2", "A3"] {
            let r = ring(name);
            for w in 0..r.group().order() {
                let p = r.schubert_polynomial(w).unwrap();
                assert_eq!(r.expand(&p).unwrap(), CohClass::basis(w), "{name}");
            }
            // (ρ, ρ)-type quadratic invariant: Σ over positive roots of α²
            let d = r.datum();
            let mut inv = Poly::zero(d.rank());
            for a in d.positive_roots() {
                let l = Poly::from_root(d, a);
                inv = &inv + &(&l * &l);
            }
            assert!(r.expand(&inv).unwrap().is_zero());
        }
    }

    #[test]
    fn monk_rule() {
        let r = ring("A2");
        let s1 = idx(&r, &[0]);
        let s2s1 = idx(&r, &[1, 0]);
        assert_eq!(r.chevalley(0, 0), CohClass::basis(s1));
        assert_eq!(r.product(s1, s1), CohClass::basis(s2s1));
    }

    #[test]
    fn chevalley_matches_expand() {
        for name in ["A2", "B2", "G2", "A3", "B3", "C3"] {
            let r = ring(name);
            let d = r.datum();
            for w in 0..r.group().order() {
                let p = r.schubert_polynomial(w).unwrap();
                for a in 0..d.rank() {
                    let f = &Poly::from_weight(&WeightVec::fundamental(d.rank(), a)) * &p;
                    assert_eq!(r.expand(&f).unwrap(), r.chevalley(a, w), "{name}");
                }
            }
        }
    }

    #[test]
    fn giambelli_reproduces_basis() {
        for name in ["A2", "B2", "G2", "B3"] {
            let r = ring(name);
            for w in 0..r.group().order() {
                assert_eq!(r.product(w, 0), CohClass::basis(w));
                assert_eq!(r.product(0, w), CohClass::basis(w));
            }
        }
    }

    #[test]
    fn triple_numbers_projective_cases() {
        let a1 = ring("A1");
        let p = ParabolicDatum::new(a1.datum().clone(), &[]).unwrap();
        assert_eq!(a1.triple_number(&p, 1, 1, 0).unwrap(), 1);
        assert_eq!(a1.triple_number(&p, 1, 0, 0).unwrap(), 0);
        assert!(a1.classical_chi_condition(&p, 1, 1, 0));

        let a2 = ring("A2");
        let p = ParabolicDatum::new(a2.datum().clone(), &[1]).unwrap();
        let reps = a2.group().min_coset_reps(p.delta_p());
        let (pt, line, plane) = (reps[0], reps[1], reps[2]);
        assert_eq!(a2.triple_number(&p, pt, plane, plane).unwrap(), 1);
        assert_eq!(a2.triple_number(&p, line, line, plane).unwrap(), 1);
        assert_eq!(a2.triple_number(&p, line, plane, line).unwrap(), 1);
        assert_eq!(a2.triple_number(&p, pt, line, line).unwrap(), 0);
        let bad = idx(&a2, &[1]);
        assert!(matches!(
            a2.triple_number(&p, bad, line, line),
            Err(Error::NotMinimal)
        ));
        for &w in &reps {
            assert_eq!(a2.dual(&p, a2.dual(&p, w)), w);
            assert!(p.is_min_rep(a2.group(), a2.dual(&p, w)));
        }
    }
}
