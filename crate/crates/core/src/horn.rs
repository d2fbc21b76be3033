//! Inequalities of the multiplicative Horn polytope.
//!
//! For a simple root `β`, a degree `d ≥ 0` and `(w₁, w₂, w₃) ∈ (W^{P_β})³`
//! the inequality `𝓘_β(w₁, w₂, w₃; d)` reads
//! `⟨w₁ϖ_β, τ₁⟩ + ⟨w₂ϖ_β, τ₂⟩ + ⟨w₃ϖ_β, τ₃⟩ ≤ d` on alcove points
//! `τᵢ = Σ t_{i,α} ϖ_{α^∨}`. A [`Mode`] selects which triples contribute.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::parabolic::ParabolicDatum;
use crate::polytope::{HRep, HalfSpace};
use crate::quantum::{LiftedDegree, QuantumRing};
use crate::rootsys::{CartanType, RootDatum, WeightVec};
use crate::schubert::to_count;
use crate::weyl::WeylGroup;
use crate::{Error, Rational};

/// Which Gromov–Witten condition selects a triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// Every nonzero invariant.
    Max,
    /// Invariant equal to 1.
    Tw,
    /// Invariant equal to 1, and Levi-movable when `d = 0`.
    Twbk,
    /// Invariant equal to 1 and the graded condition on every `χ`.
    Th3,
    /// Degree 0, structure constant 1, Levi-movable; right-hand side 0.
    Additive,
}

impl Mode {
    pub const ALL: [Mode; 5] = [Mode::Max, Mode::Tw, Mode::Twbk, Mode::Th3, Mode::Additive];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Max => "max",
            Mode::Tw => "tw",
            Mode::Twbk => "twbk",
            Mode::Th3 => "th3",
            Mode::Additive => "additive",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Mode::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnsupportedMode(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InequalityKind {
    Horn,
    Dominance,
    Alcove,
}

impl InequalityKind {
    pub fn name(self) -> &'static str {
        match self {
            InequalityKind::Horn => "horn",
            InequalityKind::Dominance => "dominance",
            InequalityKind::Alcove => "alcove",
        }
    }
}

impl FromStr for InequalityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "horn" => Ok(InequalityKind::Horn),
            "dominance" => Ok(InequalityKind::Dominance),
            "alcove" => Ok(InequalityKind::Alcove),
            _ => Err(Error::Internal(format!("unknown inequality kind `{s}`"))),
        }
    }
}

/// The Weyl group elements behind a Horn inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub beta: usize,
    pub d: i64,
    /// Reduced words, 0-based simple indices.
    pub words: [Vec<usize>; 3],
}

/// `lhs₁·t₁ + lhs₂·t₂ + lhs₃·t₃ ≤ rhs` over alcove coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality {
    pub kind: InequalityKind,
    pub witness: Option<Witness>,
    pub lhs: [Vec<Rational>; 3],
    pub rhs: Rational,
}

impl Inequality {
    /// Value of the left-hand side at `(t₁, t₂, t₃)`.
    pub fn evaluate(&self, t: &[Vec<Rational>; 3]) -> Rational {
        let mut s = Rational::zero();
        for (a, x) in self.lhs.iter().zip(t) {
            for (c, v) in a.iter().zip(x) {
                if !c.is_zero() {
                    s += c * v;
                }
            }
        }
        s
    }

    pub fn to_half_space(&self) -> HalfSpace {
        HalfSpace::new(self.lhs.concat(), self.rhs.clone())
    }

    /// The same half-space in the coweight normalization: a Horn row is
    /// multiplied by `2/(β, β)` and its right-hand side also by the level;
    /// alcove bounds are multiplied by the level.
    pub fn to_coweight_form(&self, datum: &RootDatum, level: i64) -> Inequality {
        let level = Rational::from_integer(level.into());
        let mut out = self.clone();
        match &self.witness {
            Some(w) => {
                let f = Rational::from_integer(2.into()) / &datum.simple_norms()[w.beta];
                for a in out.lhs.iter_mut() {
                    for c in a.iter_mut() {
                        *c *= &f;
                    }
                }
                out.rhs = &self.rhs * &f * &level;
            }
            None => out.rhs = &self.rhs * &level,
        }
        out
    }

    /// Words in 1-based Bourbaki numbering.
    pub fn bourbaki_words(&self) -> Option<[Vec<usize>; 3]> {
        self.witness
            .as_ref()
            .map(|w| w.words.clone().map(|v| v.into_iter().map(|i| i + 1).collect()))
    }
}

/// `⟨w ϖ_β, ·⟩` as a vector over alcove coordinates: the simple-root
/// coordinates of `w ϖ_β`.
pub fn to_linear_form(group: &WeylGroup, w: usize, beta: usize) -> Vec<Rational> {
    let d = group.datum();
    group
        .element(w)
        .apply_weight_root_coords(d, &WeightVec::fundamental(d.rank(), beta))
}

/// Per-group state shared by all computations: root datum, Weyl group and
/// quantum ring with its product caches.
#[derive(Debug)]
pub struct HornEngine {
    cartan_type: CartanType,
    ring: QuantumRing,
}

/// Outcome of evaluating a triple of alcove points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Every row holds strictly.
    Inside,
    /// Every row holds and at least one is an equality.
    Boundary,
    /// Some row fails.
    Outside,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Inside => "inside",
            Verdict::Boundary => "boundary",
            Verdict::Outside => "outside",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub verdict: Verdict,
    /// Indices into the inequality list.
    pub tight: Vec<usize>,
    pub violated: Vec<usize>,
    /// Whether each point lies in the fundamental alcove.
    pub in_alcove: [bool; 3],
}

/// One pairing `⟨h_PW, α⟩ < −1` found by [`HornEngine::check_pw_remark`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PwViolation {
    pub beta: usize,
    pub d: i64,
    pub h_pw: Vec<i64>,
    pub root: Vec<i64>,
    pub pairing: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PwReport {
    pub group: CartanType,
    /// `(β, d, h_PW, min over α ∈ Φ(G/P_β) of ⟨h_PW, α⟩)` for every scanned pair.
    pub scanned: Vec<(usize, i64, Vec<i64>, i64)>,
    pub violations: Vec<PwViolation>,
}

/// One candidate triple with its invariant.
#[derive(Debug, Clone)]
struct Record {
    d: i64,
    w: [usize; 3],
    gw: u64,
}

impl HornEngine {
    pub fn new(cartan_type: CartanType) -> Result<Self, Error> {
        let datum = Arc::new(RootDatum::new(cartan_type)?);
        let group = Arc::new(WeylGroup::new(datum)?);
        Ok(HornEngine {
            cartan_type,
            ring: QuantumRing::for_group(group)?,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        self.ring.group().datum()
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        self.ring.group()
    }

    pub fn ring(&self) -> &QuantumRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.datum().rank()
    }

    pub fn parabolic(&self, beta: usize) -> Result<ParabolicDatum, Error> {
        ParabolicDatum::maximal(self.datum().clone(), beta)
    }

    /// Graded dimension condition: for every class `χ`,
    /// `Σᵢ #Φ(wᵢ, χ) + d Σ_{α∈Φ(G/P,χ)} ⟨α, β^∨⟩ = 2 #Φ(G/P, χ)`.
    pub fn chi_condition_quantum(
        &self,
        p: &ParabolicDatum,
        w: [usize; 3],
        d: i64,
        beta: usize,
    ) -> bool {
        let g = self.group();
        let datum = self.datum();
        let mut h = vec![0i64; datum.rank()];
        h[beta] = 1;
        let counts: Vec<Vec<usize>> = w.iter().map(|&x| p.chi_counts(g, x)).collect();
        p.chi_classes().iter().enumerate().all(|(k, (chi, bits))| {
            let pairing: i64 = p
                .phi_chi(chi)
                .iter()
                .map(|a| datum.root_pairing_int(a, &h))
                .sum();
            let lhs = (counts[0][k] + counts[1][k] + counts[2][k]) as i64 + d * pairing;
            lhs == 2 * bits.count_ones() as i64
        })
    }

    /// All triples of `(W^{P_β})³` with a nonzero invariant, ordered by
    /// `d` and then by the Weyl order of `(w₁, w₂, w₃)`.
    fn records(&self, beta: usize, max_degree: Option<i64>) -> Result<Vec<Record>, Error> {
        let g = self.group();
        let p = self.parabolic(beta)?;
        let reps = g.min_coset_reps(p.delta_p());
        let n_beta = p.n_beta(beta)?;
        let dim = p.dim() as i64;
        let bound = crate::quantum::degree_bound(&p, beta)?;
        let bound = max_degree.map_or(bound, |m| m.min(bound));
        let lifts: Vec<LiftedDegree> = (0..=bound)
            .map(|d| self.ring.lift_degree(&p, beta, d))
            .collect::<Result<_, _>>()?;
        let twisted: Vec<Vec<usize>> = lifts
            .iter()
            .map(|l| reps.iter().map(|&w3| g.mul(w3, l.twist)).collect())
            .collect();
        let cl = self.ring.classical();
        let per_w2: Vec<Vec<Record>> = reps
            .par_iter()
            .map(|&w2| -> Result<Vec<Record>, Error> {
                let v = cl.dual(&p, w2);
                let mut out = Vec::new();
                for &w1 in &reps {
                    let x = self.ring.product_ref(cl.dual(&p, w1), v);
                    for (d, lift) in lifts.iter().enumerate() {
                        let Some(deg) = lift.degree else { continue };
                        let l3 = 2 * dim
                            - d as i64 * n_beta
                            - g.length(w1) as i64
                            - g.length(w2) as i64;
                        if l3 < 0 {
                            continue;
                        }
                        for (k, &w3) in reps.iter().enumerate() {
                            if g.length(w3) as i64 != l3 {
                                continue;
                            }
                            let gw = to_count(&x.coeff(twisted[d][k], &deg))?;
                            if gw != 0 {
                                out.push(Record {
                                    d: d as i64,
                                    w: [w1, w2, w3],
                                    gw,
                                });
                            }
                        }
                    }
                }
                Ok(out)
            })
            .collect::<Result<_, _>>()?;
        let mut all: Vec<Record> = per_w2.into_iter().flatten().collect();
        all.sort_by(|a, b| a.d.cmp(&b.d).then_with(|| a.w.cmp(&b.w)));
        Ok(all)
    }

    /// Invariants `GW(w₁, w₂, w₃; d σ_{s_β}^*)` of `G/P_β` for every triple
    /// with a nonzero value, as `(d, [w₁, w₂, w₃], GW)`.
    pub fn nonzero_invariants(&self, beta: usize) -> Result<Vec<(i64, [usize; 3], u64)>, Error> {
        Ok(self
            .records(beta, None)?
            .into_iter()
            .map(|r| (r.d, r.w, r.gw))
            .collect())
    }

    fn keep(&self, mode: Mode, p: &ParabolicDatum, beta: usize, r: &Record) -> bool {
        let cl = self.ring.classical();
        match mode {
            Mode::Max => true,
            Mode::Tw => r.gw == 1,
            Mode::Twbk => {
                r.gw == 1 && (r.d > 0 || cl.classical_chi_condition(p, r.w[0], r.w[1], r.w[2]))
            }
            Mode::Th3 => r.gw == 1 && self.chi_condition_quantum(p, r.w, r.d, beta),
            Mode::Additive => {
                r.d == 0 && r.gw == 1 && cl.classical_chi_condition(p, r.w[0], r.w[1], r.w[2])
            }
        }
    }

    /// The inequality list of `mode`, deduplicated by exact linear form, with
    /// the dominance and alcove rows appended.
    pub fn generate(&self, mode: Mode) -> Result<HornSystem, Error> {
        Ok(self.generate_many(&[mode])?.pop().expect("one mode"))
    }

    /// [`Self::generate`] for several modes, sharing the invariant computation.
    pub fn generate_many(&self, modes: &[Mode]) -> Result<Vec<HornSystem>, Error> {
        let g = self.group();
        let n = self.rank();
        let mut seen: Vec<HashSet<([Vec<Rational>; 3], Rational)>> =
            vec![HashSet::new(); modes.len()];
        let mut lists: Vec<Vec<Inequality>> = vec![Vec::new(); modes.len()];
        let mut push = |m: usize, ineq: Inequality, lists: &mut Vec<Vec<Inequality>>| {
            if seen[m].insert((ineq.lhs.clone(), ineq.rhs.clone())) {
                lists[m].push(ineq);
            }
        };
        let only_additive = modes.iter().all(|&m| m == Mode::Additive);
        for beta in 0..n {
            let p = self.parabolic(beta)?;
            let forms: std::collections::HashMap<usize, Vec<Rational>> = g
                .min_coset_reps(p.delta_p())
                .into_iter()
                .map(|w| (w, to_linear_form(g, w, beta)))
                .collect();
            for r in self.records(beta, only_additive.then_some(0))? {
                for (m, &mode) in modes.iter().enumerate() {
                    if !self.keep(mode, &p, beta, &r) {
                        continue;
                    }
                    let rhs = if mode == Mode::Additive { 0 } else { r.d };
                    let words = r.w.map(|w| g.element(w).word().iter().map(|&i| i as usize).collect());
                    push(
                        m,
                        Inequality {
                            kind: InequalityKind::Horn,
                            witness: Some(Witness {
                                beta,
                                d: r.d,
                                words,
                            }),
                            lhs: r.w.map(|w| forms[&w].clone()),
                            rhs: Rational::from_integer(rhs.into()),
                        },
                        &mut lists,
                    );
                }
            }
        }
        for m in 0..modes.len() {
            for ineq in self.chamber_rows() {
                push(m, ineq, &mut lists);
            }
        }
        Ok(modes
            .iter()
            .zip(lists)
            .map(|(&mode, inequalities)| HornSystem {
                cartan_type: self.cartan_type,
                mode,
                inequalities,
            })
            .collect())
    }

    /// `−t_{i,α} ≤ 0` for every `i, α`, then `Σ c_α t_{i,α} ≤ 1` with
    /// `θ = Σ c_α α`.
    pub fn chamber_rows(&self) -> Vec<Inequality> {
        let n = self.rank();
        let zero = vec![Rational::zero(); n];
        let mut out = Vec::with_capacity(3 * (n + 1));
        for i in 0..3 {
            for a in 0..n {
                let mut lhs = [zero.clone(), zero.clone(), zero.clone()];
                lhs[i][a] = -Rational::one();
                out.push(Inequality {
                    kind: InequalityKind::Dominance,
                    witness: None,
                    lhs,
                    rhs: Rational::zero(),
                });
            }
        }
        let theta: Vec<Rational> = self
            .datum()
            .highest_root()
            .0
            .iter()
            .map(|&c| Rational::from_integer(c.into()))
            .collect();
        for i in 0..3 {
            let mut lhs = [zero.clone(), zero.clone(), zero.clone()];
            lhs[i] = theta.clone();
            out.push(Inequality {
                kind: InequalityKind::Alcove,
                witness: None,
                lhs,
                rhs: Rational::one(),
            });
        }
        out
    }

    /// Whether `t` lies in the fundamental alcove.
    pub fn in_alcove(&self, t: &[Rational]) -> bool {
        let theta = &self.datum().highest_root().0;
        t.len() == self.rank()
            && t.iter().all(|x| !x.is_negative())
            && t.iter()
                .zip(theta)
                .map(|(x, &c)| x * Rational::from_integer(c.into()))
                .sum::<Rational>()
                <= Rational::one()
    }

    /// Evaluates a triple of alcove points against the list of `mode`.
    pub fn membership(&self, mode: Mode, t: &[Vec<Rational>; 3]) -> Result<Membership, Error> {
        let system = self.generate(mode)?;
        system.membership(self, t)
    }

    /// Scans `h_PW` of `d β^∨` for every simple `β` and `0 ≤ d ≤` the degree
    /// bound, recording every root `α ∈ Φ(G/P_β)` with `⟨h_PW, α⟩ < −1`.
    pub fn check_pw_remark(&self) -> Result<PwReport, Error> {
        let datum = self.datum();
        let mut scanned = Vec::new();
        let mut violations = Vec::new();
        for beta in 0..self.rank() {
            let p = self.parabolic(beta)?;
            for d in 0..=crate::quantum::degree_bound(&p, beta)? {
                let mut h = vec![0i64; self.rank()];
                h[beta] = d;
                let h_pw = p.pw_lift_int(&h)?;
                let mut min = i64::MAX;
                for a in p.phi_gp() {
                    let v = datum.root_pairing_int(&a, &h_pw);
                    min = min.min(v);
                    if v < -1 {
                        violations.push(PwViolation {
                            beta,
                            d,
                            h_pw: h_pw.clone(),
                            root: a.0.clone(),
                            pairing: v,
                        });
                    }
                }
                scanned.push((beta, d, h_pw, min));
            }
        }
        Ok(PwReport {
            group: self.cartan_type,
            scanned,
            violations,
        })
    }
}

/// A generated inequality list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HornSystem {
    pub cartan_type: CartanType,
    pub mode: Mode,
    pub inequalities: Vec<Inequality>,
}

impl HornSystem {
    pub fn len(&self) -> usize {
        self.inequalities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inequalities.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn horn_count(&self) -> usize {
        self.inequalities
            .iter()
            .filter(|i| i.kind == InequalityKind::Horn)
            .count()
    }

    /// The H-representation over `(t₁, t₂, t₃)`.
    pub fn hrep(&self) -> Result<HRep, Error> {
        Ok(HRep::new(
            3 * self.rank(),
            self.inequalities.iter().map(|i| i.to_half_space()).collect(),
        )?)
    }

    pub fn membership(&self, engine: &HornEngine, t: &[Vec<Rational>; 3]) -> Result<Membership, Error> {
        if t.iter().any(|x| x.len() != self.rank()) || engine.rank() != self.rank() {
            return Err(Error::RankMismatch);
        }
        let mut tight = Vec::new();
        let mut violated = Vec::new();
        for (k, ineq) in self.inequalities.iter().enumerate() {
            let slack = &ineq.rhs - ineq.evaluate(t);
            if slack.is_zero() {
                tight.push(k);
            } else if slack.is_negative() {
                violated.push(k);
            }
        }
        let verdict = if !violated.is_empty() {
            Verdict::Outside
        } else if !tight.is_empty() {
            Verdict::Boundary
        } else {
            Verdict::Inside
        };
        Ok(Membership {
            verdict,
            tight,
            violated,
            in_alcove: [0, 1, 2].map(|i| engine.in_alcove(&t[i])),
        })
    }
}
