//! Root systems of the simple types A–G.
//!
//! Conventions, used everywhere in the crate:
//!
//! * simple roots are numbered as in Bourbaki, `0..rank` internally and
//!   `1..=rank` in anything printed;
//! * `cartan[i][j] = ⟨α_j, α_i^∨⟩`;
//! * roots are integer vectors in the simple-root basis, weights are rational
//!   vectors in the fundamental-weight basis, coweights are rational vectors in
//!   the simple-coroot basis, so the weight/coweight pairing is a dot product;
//! * the invariant form is normalized by `(θ, θ) = 2`, `θ` the highest root.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::{Error, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    /// Name of the simply-connected compact group, in the style `Sp(4)`,
    /// `Spin(7)`, `SU(3)`.
    pub fn group_name(&self) -> String {
        let n = self.rank;
        match self.family {
            Family::A => format!("SU({})", n + 1),
            Family::B => format!("Spin({})", 2 * n + 1),
            Family::C => format!("Sp({})", 2 * n),
            Family::D => format!("Spin({})", 2 * n),
            Family::E | Family::F | Family::G => self.to_string(),
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u64 {
        let n = self.rank as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1 << n) * fact(n),
            Family::D => (1 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// `cartan[i][j] = ⟨α_j, α_i^∨⟩` in Bourbaki numbering.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        match self.family {
            // α_n short
            Family::B => c[n - 1][n - 2] = -2,
            // α_n long
            Family::C => c[n - 2][n - 1] = -2,
            // α_1, α_2 long; α_3, α_4 short
            Family::F => c[2][1] = -2,
            // α_1 short, α_2 long
            Family::G => c[0][1] = -3,
            _ => {}
        }
        c
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Accepts Cartan labels (`G2`, `b3`) and group names (`Sp(6)`, `Sp6`,
    /// `Spin(8)`, `SU(3)`).
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::UnknownGroup(s.to_string());
        let compact: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')')
            .collect::<String>()
            .to_ascii_lowercase();
        let split = compact
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(bad)?;
        let (name, num) = compact.split_at(split);
        let num: usize = num.parse().map_err(|_| bad())?;
        let (family, rank) = match name {
            "a" => (Family::A, num),
            "b" => (Family::B, num),
            "c" => (Family::C, num),
            "d" => (Family::D, num),
            "e" => (Family::E, num),
            "f" => (Family::F, num),
            "g" => (Family::G, num),
            "su" | "sl" if num >= 2 => (Family::A, num - 1),
            "sp" if num % 2 == 0 => (Family::C, num / 2),
            "spin" if num % 2 == 1 => (Family::B, num / 2),
            "spin" => (Family::D, num / 2),
            _ => return Err(bad()),
        };
        CartanType::new(family, rank)
    }
}

/// A root in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVec(pub Vec<i64>);

/// A weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVec(pub Vec<Rational>);

/// A coweight in the simple-coroot basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoweightVec(pub Vec<Rational>);

impl RootVec {
    pub fn simple(rank: usize, i: usize) -> Self {
        RootVec((0..rank).map(|k| (k == i) as i64).collect())
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn negated(&self) -> RootVec {
        RootVec(self.0.iter().map(|c| -c).collect())
    }
}

impl WeightVec {
    pub fn fundamental(rank: usize, i: usize) -> Self {
        WeightVec(unit(rank, i))
    }
}

impl CoweightVec {
    pub fn simple_coroot(rank: usize, i: usize) -> Self {
        CoweightVec(unit(rank, i))
    }

    pub fn from_integers(v: &[i64]) -> Self {
        CoweightVec(v.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }
}

fn unit(rank: usize, i: usize) -> Vec<Rational> {
    (0..rank)
        .map(|k| if k == i { Rational::one() } else { Rational::zero() })
        .collect()
}

/// Exact data of one root system.
#[derive(Debug, Clone)]
pub struct RootDatum {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    cartan_inverse: Vec<Vec<Rational>>,
    positive_roots: Vec<RootVec>,
    root_index: HashMap<RootVec, usize>,
    simple_norms: Vec<Rational>,
    root_norms: Vec<Rational>,
    highest_root: usize,
}

impl RootDatum {
    pub fn new(cartan_type: CartanType) -> Result<Self, Error> {
        let cartan_type = CartanType::new(cartan_type.family, cartan_type.rank)?;
        let cartan = cartan_type.cartan_matrix();
        let n = cartan_type.rank;

        // Positive roots: close the simple roots under simple reflections,
        // keeping positive images.
        let mut roots: Vec<RootVec> = (0..n)
            .map(|i| RootVec((0..n).map(|k| i64::from(k == i)).collect()))
            .collect();
        let mut seen: std::collections::HashSet<RootVec> = roots.iter().cloned().collect();
        let mut frontier = roots.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for r in &frontier {
                for i in 0..n {
                    let img = reflect_root(&cartan, i, r);
                    if img.is_positive() && seen.insert(img.clone()) {
                        next.push(img);
                    }
                }
            }
            roots.extend(next.iter().cloned());
            frontier = next;
        }
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then(b.0.cmp(&a.0)));
        let root_index = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();

        let simple_norms = symmetrizer(&cartan);
        let mut datum = RootDatum {
            cartan_type,
            cartan_inverse: invert(&cartan),
            cartan,
            positive_roots: roots,
            root_index,
            simple_norms,
            root_norms: Vec::new(),
            highest_root: 0,
        };
        datum.root_norms = datum
            .positive_roots
            .iter()
            .map(|r| datum.root_form(r, r))
            .collect();
        datum.highest_root = datum.positive_roots.len() - 1;
        Ok(datum)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Rational inverse of the Cartan matrix; column `j` holds the
    /// simple-root coordinates of `ϖ_j`.
    pub fn cartan_inverse(&self) -> &[Vec<Rational>] {
        &self.cartan_inverse
    }

    /// Positive roots ordered by height; the last one is `θ`.
    pub fn positive_roots(&self) -> &[RootVec] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Index of a positive root in [`Self::positive_roots`].
    pub fn root_index(&self, r: &RootVec) -> Option<usize> {
        self.root_index.get(r).copied()
    }

    pub fn is_root(&self, r: &RootVec) -> bool {
        self.root_index.contains_key(r) || self.root_index.contains_key(&r.negated())
    }

    pub fn highest_root(&self) -> &RootVec {
        &self.positive_roots[self.highest_root]
    }

    /// `(α_i, α_i)` for the simple roots.
    pub fn simple_norms(&self) -> &[Rational] {
        &self.simple_norms
    }

    /// `(α, α)` for the positive roots, in the order of
    /// [`Self::positive_roots`].
    pub fn root_norms(&self) -> &[Rational] {
        &self.root_norms
    }

    pub fn rho(&self) -> WeightVec {
        WeightVec(vec![Rational::one(); self.rank()])
    }

    pub fn weyl_order(&self) -> u64 {
        self.cartan_type.weyl_order()
    }

    /// Invariant form on root-basis vectors: `(α_i, α_j) = C[i][j]·(α_i,α_i)/2`.
    pub fn root_form(&self, a: &RootVec, b: &RootVec) -> Rational {
        let n = self.rank();
        let mut s = Rational::zero();
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                if b.0[j] == 0 {
                    continue;
                }
                let g = &self.simple_norms[i] * Rational::from_integer(self.cartan[i][j].into())
                    / Rational::from_integer(2.into());
                s += g * Rational::from_integer((a.0[i] * b.0[j]).into());
            }
        }
        s
    }

    /// Invariant form on weights, through their simple-root expansions.
    pub fn weight_form(&self, a: &WeightVec, b: &WeightVec) -> Rational {
        let ra = self.weight_to_root_coords(a);
        let rb = self.weight_to_root_coords(b);
        let n = self.rank();
        let mut s = Rational::zero();
        for i in 0..n {
            for j in 0..n {
                let g = &self.simple_norms[i] * Rational::from_integer(self.cartan[i][j].into())
                    / Rational::from_integer(2.into());
                s += g * &ra[i] * &rb[j];
            }
        }
        s
    }

    /// `⟨λ, h⟩` for a weight in the ϖ basis and a coweight in the α^∨ basis.
    pub fn pairing(&self, lambda: &WeightVec, h: &CoweightVec) -> Result<Rational, Error> {
        if lambda.0.len() != self.rank() || h.0.len() != self.rank() {
            return Err(Error::RankMismatch);
        }
        Ok(lambda.0.iter().zip(&h.0).map(|(a, b)| a * b).sum())
    }

    /// `⟨α, h⟩` for a root in the α basis and a coweight in the α^∨ basis.
    pub fn root_pairing(&self, root: &RootVec, h: &CoweightVec) -> Rational {
        let n = self.rank();
        let mut s = Rational::zero();
        for i in 0..n {
            if h.0[i].is_zero() {
                continue;
            }
            let mut t = 0i64;
            for j in 0..n {
                t += self.cartan[i][j] * root.0[j];
            }
            s += &h.0[i] * Rational::from_integer(t.into());
        }
        s
    }

    /// Integer version of [`Self::root_pairing`] for a coroot-basis integer
    /// coweight.
    pub fn root_pairing_int(&self, root: &RootVec, h: &[i64]) -> i64 {
        let n = self.rank();
        (0..n)
            .map(|i| h[i] * (0..n).map(|j| self.cartan[i][j] * root.0[j]).sum::<i64>())
            .sum()
    }

    /// Basis change α → ϖ: `α_j ↦` column `j` of the Cartan matrix.
    pub fn root_to_weight(&self, r: &RootVec) -> WeightVec {
        let n = self.rank();
        WeightVec(
            (0..n)
                .map(|i| {
                    let s: i64 = (0..n).map(|j| self.cartan[i][j] * r.0[j]).sum();
                    Rational::from_integer(s.into())
                })
                .collect(),
        )
    }

    /// Simple-root coordinates of a weight.
    pub fn weight_to_root_coords(&self, w: &WeightVec) -> Vec<Rational> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| &self.cartan_inverse[i][j] * &w.0[j]).sum())
            .collect()
    }

    /// Coroot `α^∨ = 2α/(α,α)` in the simple-coroot basis.
    pub fn coroot(&self, r: &RootVec) -> Result<CoweightVec, Error> {
        let pos = if r.is_positive() { r.clone() } else { r.negated() };
        let k = self
            .root_index(&pos)
            .ok_or_else(|| Error::NotARoot(r.0.clone()))?;
        let norm = &self.root_norms[k];
        Ok(CoweightVec(
            r.0.iter()
                .zip(&self.simple_norms)
                .map(|(&a, d)| Rational::from_integer(a.into()) * d / norm)
                .collect(),
        ))
    }

    /// Integer coroot coordinates of the `k`-th positive root.
    pub fn coroot_coords(&self, k: usize) -> Vec<i64> {
        let c = self
            .coroot(&self.positive_roots[k])
            .expect("positive root");
        c.0.iter()
            .map(|v| {
                debug_assert!(v.is_integer());
                i64::try_from(v.to_integer()).expect("small coroot coefficient")
            })
            .collect()
    }

    /// Simple reflection `s_i` applied to a root.
    pub fn reflect(&self, i: usize, r: &RootVec) -> RootVec {
        reflect_root(&self.cartan, i, r)
    }
}

fn reflect_root(cartan: &[Vec<i64>], i: usize, r: &RootVec) -> RootVec {
    let pair: i64 = (0..r.0.len()).map(|j| cartan[i][j] * r.0[j]).sum();
    let mut v = r.0.clone();
    v[i] -= pair;
    RootVec(v)
}

/// Simple root norms `d_i` with `d_i C[i][j] = d_j C[j][i]`, scaled so the
/// longest is 2.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<Rational> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    d[0] = Some(Rational::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                let di = d[i].clone().expect("visited");
                d[j] = Some(
                    di * Rational::from_integer(cartan[i][j].into())
                        / Rational::from_integer(cartan[j][i].into()),
                );
                stack.push(j);
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let max = d.iter().max().cloned().expect("nonempty");
    let scale = Rational::from_integer(2.into()) / max;
    d.into_iter().map(|x| x * &scale).collect()
}

pub(crate) fn invert(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(|&v| Rational::from_integer(v.into()))
                .chain((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }))
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&r| !a[r][c].is_zero())
            .expect("invertible matrix");
        a.swap(c, p);
        let inv = a[c][c].recip();
        for v in a[c].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..2 * n {
                    let t = &f * &a[c][k];
                    a[r][k] -= t;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Checks the closure and normalization invariants; used by tests and the
/// examples.
pub fn check_invariants(d: &RootDatum) -> Result<(), String> {
    let theta = d.highest_root();
    if d.root_norms[d.highest_root] != Rational::from_integer(2.into()) {
        return Err("(θ, θ) ≠ 2".into());
    }
    for (k, r) in d.positive_roots().iter().enumerate() {
        let diff = RootVec(theta.0.iter().zip(&r.0).map(|(a, b)| a - b).collect());
        if diff.0.iter().any(|c| *c < 0) {
            return Err(format!("θ not dominance-maximal over root {k}"));
        }
        for i in 0..d.rank() {
            let img = d.reflect(i, r);
            if !d.is_root(&img) {
                return Err(format!("s_{} maps root {k} outside Φ", i + 1));
            }
        }
    }
    for n in d.simple_norms() {
        let q = Rational::from_integer(2.into()) / n;
        if !(q.is_integer() && q.is_positive() && q <= Rational::from_integer(3.into())) {
            return Err("2/(α,α) ∉ {1,2,3}".into());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> RootDatum {
        RootDatum::new(s.parse().unwrap()).unwrap()
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn classical_root_counts() {
        for (name, count) in [
            ("A1", 1),
            ("A2", 3),
            ("A4", 10),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
        ] {
            let d = datum(name);
            assert_eq!(d.num_positive_roots(), count, "{name}");
            check_invariants(&d).unwrap();
        }
    }

    #[test]
    fn bourbaki_cartan_matrices() {
        assert_eq!(datum("B2").cartan_matrix(), &[vec![2, -1], vec![-2, 2]]);
        assert_eq!(datum("C2").cartan_matrix(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(datum("G2").cartan_matrix(), &[vec![2, -3], vec![-1, 2]]);
        let f4 = datum("F4");
        assert_eq!(f4.cartan_matrix()[1][2], -1);
        assert_eq!(f4.cartan_matrix()[2][1], -2);
        let b3 = datum("B3");
        assert_eq!(b3.cartan_matrix()[2][1], -2);
        assert_eq!(b3.cartan_matrix()[1][2], -1);
    }

    #[test]
    fn highest_roots() {
        assert_eq!(datum("G2").highest_root().0, vec![3, 2]);
        assert_eq!(datum("C2").highest_root().0, vec![2, 1]);
        assert_eq!(datum("B3").highest_root().0, vec![1, 2, 2]);
        assert_eq!(datum("C3").highest_root().0, vec![2, 2, 1]);
        assert_eq!(datum("E8").highest_root().0, vec![2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(datum("F4").highest_root().0, vec![2, 3, 4, 2]);
    }

    #[test]
    fn group_aliases() {
        let t: CartanType = "Sp(4)".parse().unwrap();
        assert_eq!((t.family, t.rank), (Family::C, 2));
        let t: CartanType = "Spin(7)".parse().unwrap();
        assert_eq!((t.family, t.rank), (Family::B, 3));
        let t: CartanType = "Spin(8)".parse().unwrap();
        assert_eq!((t.family, t.rank), (Family::D, 4));
        let t: CartanType = "sp6".parse().unwrap();
        assert_eq!((t.family, t.rank), (Family::C, 3));
        assert_eq!(t.group_name(), "Sp(6)");
        assert!("G3".parse::<CartanType>().is_err());
        assert!("Sp(5)".parse::<CartanType>().is_err());
        assert!("Q7".parse::<CartanType>().is_err());
        assert!(matches!(
            CartanType::new(Family::D, 2),
            Err(Error::InvalidRank { .. })
        ));
    }

    #[test]
    fn pairing_conventions() {
        let d = datum("B3");
        let n = d.rank();
        for i in 0..n {
            for j in 0..n {
                let p = d
                    .pairing(
                        &WeightVec::fundamental(n, i),
                        &CoweightVec::simple_coroot(n, j),
                    )
                    .unwrap();
                assert_eq!(p, int(i64::from(i == j)));
            }
            let p = d.pairing(&d.rho(), &CoweightVec::simple_coroot(n, i)).unwrap();
            assert_eq!(p, int(1));
        }
        let theta = d.highest_root();
        let tw = d.root_to_weight(theta);
        let tc = d.coroot(theta).unwrap();
        assert_eq!(d.pairing(&tw, &tc).unwrap(), int(2));
        assert!(d
            .pairing(&tw, &CoweightVec(vec![int(1)]))
            .is_err());
    }

    #[test]
    fn root_to_weight_reads_cartan_columns() {
        let a2 = datum("A2");
        assert_eq!(
            a2.root_to_weight(&RootVec(vec![1, 0])).0,
            vec![int(2), int(-1)]
        );
        let g2 = datum("G2");
        assert_eq!(
            g2.root_to_weight(&RootVec(vec![1, 0])).0,
            vec![int(2), int(-1)]
        );
        assert_eq!(
            g2.root_to_weight(&RootVec(vec![0, 1])).0,
            vec![int(-3), int(2)]
        );
        assert_eq!(datum("A1").root_to_weight(&RootVec(vec![1])).0, vec![int(2)]);
    }

    #[test]
    fn coroots() {
        let c2 = datum("C2");
        assert_eq!(
            c2.coroot(&RootVec(vec![2, 1])).unwrap(),
            CoweightVec::from_integers(&[1, 1])
        );
        let g2 = datum("G2");
        let tc = g2.coroot(g2.highest_root()).unwrap();
        let height: Rational = tc.0.iter().sum();
        // ⟨ρ, θ^∨⟩ = h^∨ − 1 = 3
        assert_eq!(height, int(3));
        let d4 = datum("D4");
        for r in d4.positive_roots() {
            let c = d4.coroot(r).unwrap();
            assert_eq!(c, CoweightVec::from_integers(&r.0));
        }
        assert!(matches!(
            g2.coroot(&RootVec(vec![1, 2])),
            Err(Error::NotARoot(_))
        ));
        for k in 0..g2.num_positive_roots() {
            let r = &g2.positive_roots()[k];
            let c = g2.coroot(r).unwrap();
            assert_eq!(g2.root_pairing(r, &c), int(2));
            assert!(c.is_integral());
        }
    }

    #[test]
    fn form_agrees_with_pairing() {
        // ⟨λ, α^∨⟩ = 2(λ, α)/(α, α) for every weight λ and root α
        for name in ["B3", "C3", "G2", "F4"] {
            let d = datum(name);
            let n = d.rank();
            for (k, r) in d.positive_roots().iter().enumerate() {
                let rw = d.root_to_weight(r);
                let c = d.coroot(r).unwrap();
                for i in 0..n {
                    let w = WeightVec::fundamental(n, i);
                    let lhs = d.pairing(&w, &c).unwrap();
                    let rhs = int(2) * d.weight_form(&w, &rw) / &d.root_norms()[k];
                    assert_eq!(lhs, rhs, "{name} root {k} weight {i}");
                }
            }
        }
    }
}
