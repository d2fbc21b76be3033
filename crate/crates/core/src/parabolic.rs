//! Standard parabolic subgroups: `Φ(G/P)`, its grading by characters of the
//! center of the Levi, `n_β`, and the Peterson–Woodward lift of degrees.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::rootsys::{invert, CoweightVec, RootDatum, RootVec, WeightVec};
use crate::weyl::WeylGroup;
use crate::{Error, Rational};

/// Restriction of a root of `Φ(G/P)` to the center of the Levi, realized as
/// its coefficient tuple on `Δ ∖ Δ_P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChiClass(pub Vec<i64>);

#[derive(Debug, Clone)]
pub struct ParabolicDatum {
    datum: Arc<RootDatum>,
    delta_p: Vec<usize>,
    outside: Vec<usize>,
    phi_gp: Vec<usize>,
    levi_positive: Vec<usize>,
    classes: Vec<(ChiClass, u128)>,
    phi_gp_bits: u128,
}

impl ParabolicDatum {
    pub fn new(datum: Arc<RootDatum>, delta_p: &[usize]) -> Result<Self, Error> {
        let n = datum.rank();
        let mut delta_p: Vec<usize> = delta_p.to_vec();
        delta_p.sort_unstable();
        delta_p.dedup();
        if delta_p.iter().any(|&i| i >= n) {
            return Err(Error::RankMismatch);
        }
        let outside: Vec<usize> = (0..n).filter(|i| !delta_p.contains(i)).collect();
        let mut phi_gp = Vec::new();
        let mut levi_positive = Vec::new();
        let mut classes: Vec<(ChiClass, u128)> = Vec::new();
        let mut phi_gp_bits = 0u128;
        for (k, r) in datum.positive_roots().iter().enumerate() {
            let chi = ChiClass(outside.iter().map(|&i| r.0[i]).collect());
            if chi.0.iter().all(|&c| c == 0) {
                levi_positive.push(k);
                continue;
            }
            phi_gp.push(k);
            phi_gp_bits |= 1 << k;
            match classes.iter_mut().find(|(c, _)| *c == chi) {
                Some((_, bits)) => *bits |= 1 << k,
                None => classes.push((chi, 1 << k)),
            }
        }
        classes.sort();
        Ok(ParabolicDatum {
            datum,
            delta_p,
            outside,
            phi_gp,
            levi_positive,
            classes,
            phi_gp_bits,
        })
    }

    /// The maximal parabolic `P_β` with `Δ_P = Δ ∖ {β}`.
    pub fn maximal(datum: Arc<RootDatum>, beta: usize) -> Result<Self, Error> {
        if beta >= datum.rank() {
            return Err(Error::RankMismatch);
        }
        let dp: Vec<usize> = (0..datum.rank()).filter(|&i| i != beta).collect();
        Self::new(datum, &dp)
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn delta_p(&self) -> &[usize] {
        &self.delta_p
    }

    /// Simple roots not in the Levi.
    pub fn outside(&self) -> &[usize] {
        &self.outside
    }

    /// `dim G/P = |Φ(G/P)|`.
    pub fn dim(&self) -> usize {
        self.phi_gp.len()
    }

    pub fn phi_gp(&self) -> Vec<RootVec> {
        self.phi_gp
            .iter()
            .map(|&k| self.datum.positive_roots()[k].clone())
            .collect()
    }

    pub fn levi_positive(&self) -> Vec<RootVec> {
        self.levi_positive
            .iter()
            .map(|&k| self.datum.positive_roots()[k].clone())
            .collect()
    }

    /// `ρ^L`, half the sum of the positive roots of the Levi.
    pub fn rho_l(&self) -> WeightVec {
        let n = self.datum.rank();
        let mut sum = vec![0i64; n];
        for &k in &self.levi_positive {
            for (s, c) in sum.iter_mut().zip(&self.datum.positive_roots()[k].0) {
                *s += c;
            }
        }
        let w = self.datum.root_to_weight(&RootVec(sum));
        WeightVec(w.0.into_iter().map(|x| x / Rational::from_integer(2.into())).collect())
    }

    pub fn chi_of(&self, alpha: &RootVec) -> Result<ChiClass, Error> {
        let k = self
            .datum
            .root_index(alpha)
            .filter(|k| self.phi_gp_bits >> k & 1 == 1)
            .ok_or_else(|| Error::NotInUnipotent(alpha.0.clone()))?;
        let r = &self.datum.positive_roots()[k];
        Ok(ChiClass(self.outside.iter().map(|&i| r.0[i]).collect()))
    }

    /// The classes `χ` occurring in `Φ(G/P)`, sorted, each with the bitmask of
    /// its roots over the positive-root indices.
    pub fn chi_classes(&self) -> &[(ChiClass, u128)] {
        &self.classes
    }

    /// `Φ(G/P, χ)`.
    pub fn phi_chi(&self, chi: &ChiClass) -> Vec<RootVec> {
        self.roots_of(self.class_bits(chi))
    }

    fn class_bits(&self, chi: &ChiClass) -> u128 {
        self.classes
            .iter()
            .find(|(c, _)| c == chi)
            .map_or(0, |(_, b)| *b)
    }

    fn roots_of(&self, bits: u128) -> Vec<RootVec> {
        self.datum
            .positive_roots()
            .iter()
            .enumerate()
            .filter(|(k, _)| bits >> k & 1 == 1)
            .map(|(_, r)| r.clone())
            .collect()
    }

    pub fn is_min_rep(&self, group: &WeylGroup, w: usize) -> bool {
        group.inversion_bits(w) & !self.phi_gp_bits == 0
    }

    /// `Φ(w, χ) = Φ(w) ∩ Φ(G/P, χ)`.
    pub fn phi_w_chi(
        &self,
        group: &WeylGroup,
        w: usize,
        chi: &ChiClass,
    ) -> Result<Vec<RootVec>, Error> {
        if !self.is_min_rep(group, w) {
            return Err(Error::NotMinimal);
        }
        Ok(self.roots_of(group.inversion_bits(w) & self.class_bits(chi)))
    }

    /// `#Φ(w, χ)` for every class, in the order of [`Self::chi_classes`].
    pub fn chi_counts(&self, group: &WeylGroup, w: usize) -> Vec<usize> {
        let inv = group.inversion_bits(w);
        self.classes
            .iter()
            .map(|(_, b)| (inv & b).count_ones() as usize)
            .collect()
    }

    /// `n_β = ⟨β^∨, 2(ρ − ρ^L)⟩`.
    pub fn n_beta(&self, beta: usize) -> Result<i64, Error> {
        if self.delta_p.contains(&beta) {
            return Err(Error::RootInLevi(beta));
        }
        if beta >= self.datum.rank() {
            return Err(Error::RankMismatch);
        }
        let h = CoweightVec::simple_coroot(self.datum.rank(), beta);
        let two_rho = WeightVec(
            self.datum
                .rho()
                .0
                .iter()
                .zip(&self.rho_l().0)
                .map(|(a, b)| (a - b) * Rational::from_integer(2.into()))
                .collect(),
        );
        let v = self.datum.pairing(&two_rho, &h)?;
        v.to_integer()
            .try_into()
            .map_err(|_| Error::Internal("n_β out of range".into()))
    }

    /// `Σ_{α ∈ Φ(G/P)} ⟨α, h⟩` for an integral coweight `h`.
    pub fn degree_weight(&self, h: &[i64]) -> i64 {
        self.phi_gp
            .iter()
            .map(|&k| self.datum.root_pairing_int(&self.datum.positive_roots()[k], h))
            .sum()
    }

    /// The representative `h_PW ≡ h` modulo `Σ_{α∈Δ_P} Zα^∨` with
    /// `⟨h_PW, α⟩ ∈ {0, −1}` for every positive root of the Levi.
    pub fn pw_lift(&self, h: &CoweightVec) -> Result<CoweightVec, Error> {
        if h.0.len() != self.datum.rank() {
            return Err(Error::RankMismatch);
        }
        if !h.is_integral() {
            return Err(Error::Internal("pw_lift needs an integral coweight".into()));
        }
        let ints: Vec<i64> = h
            .0
            .iter()
            .map(|x| x.to_integer().try_into().expect("small coweight"))
            .collect();
        Ok(CoweightVec::from_integers(&self.pw_lift_int(&ints)?))
    }

    pub fn pw_lift_int(&self, h: &[i64]) -> Result<Vec<i64>, Error> {
        let d = &self.datum;
        let c = d.cartan_matrix();
        let m = self.delta_p.len();
        if m == 0 {
            return Ok(h.to_vec());
        }
        // ⟨α_i, Σ_j c_j α_j^∨⟩ = Σ_j c_j C[j][i], restricted to Δ_P
        let sub: Vec<Vec<i64>> = self
            .delta_p
            .iter()
            .map(|&i| self.delta_p.iter().map(|&j| c[j][i]).collect())
            .collect();
        let inv = invert(&sub);
        let base: Vec<i64> = self
            .delta_p
            .iter()
            .map(|&i| d.root_pairing_int(&RootVec::simple(d.rank(), i), h))
            .collect();
        let mut found: Option<Vec<i64>> = None;
        for mask in 0u32..(1 << m) {
            let target: Vec<Rational> = (0..m)
                .map(|r| {
                    let e = if mask >> r & 1 == 1 { -1 } else { 0 };
                    Rational::from_integer((e - base[r]).into())
                })
                .collect();
            let sol: Vec<Rational> = (0..m)
                .map(|r| {
                    (0..m)
                        .map(|s| &inv[r][s] * &target[s])
                        .fold(Rational::zero(), |a, b| a + b)
                })
                .collect();
            if sol.iter().any(|x| !x.denom().is_one()) {
                continue;
            }
            let mut lifted = h.to_vec();
            for (r, &j) in self.delta_p.iter().enumerate() {
                let v: i64 = sol[r].to_integer().try_into().expect("small correction");
                lifted[j] += v;
            }
            let ok = self.levi_positive.iter().all(|&k| {
                let p = d.root_pairing_int(&d.positive_roots()[k], &lifted);
                p == 0 || p == -1
            });
            if ok {
                if found.is_some() {
                    return Err(Error::Internal("Peterson–Woodward lift is not unique".into()));
                }
                found = Some(lifted);
            }
        }
        found.ok_or_else(|| Error::Internal("no Peterson–Woodward lift found".into()))
    }

    /// `Δ_{P'} = {α ∈ Δ_P : ⟨h, α⟩ = 0}`.
    pub fn stabilized(&self, h: &[i64]) -> Vec<usize> {
        let d = &self.datum;
        self.delta_p
            .iter()
            .copied()
            .filter(|&i| d.root_pairing_int(&RootVec::simple(d.rank(), i), h) == 0)
            .collect()
    }
}
