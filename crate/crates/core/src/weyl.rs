//! Weyl group elements and the enumerated Weyl group.
//!
//! An element is stored as its matrix on the root lattice (column `j` is
//! `w(α_j)` in the simple-root basis). Equality and hashing use the matrix;
//! reduced words are derived from it and cached for display.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::rootsys::{CoweightVec, RootDatum, RootVec, WeightVec};
use crate::{Error, Rational};

/// Largest Weyl group the crate will materialize.
pub const MAX_ENUMERATED_ORDER: u64 = 200_000;

#[derive(Debug, Clone)]
pub struct WeylElt {
    rank: usize,
    matrix: Vec<i64>,
    word: Vec<u8>,
}

impl PartialEq for WeylElt {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.matrix == other.matrix
    }
}

impl Eq for WeylElt {}

impl Hash for WeylElt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rank.hash(state);
        self.matrix.hash(state);
    }
}

impl PartialOrd for WeylElt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length()
            .cmp(&other.length())
            .then_with(|| self.matrix.cmp(&other.matrix))
    }
}

fn identity_matrix(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn matmul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut c = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    c
}

fn column_is_negative(n: usize, m: &[i64], j: usize) -> bool {
    (0..n).any(|i| m[i * n + j] < 0)
}

/// `M ↦ M·s_i`: column `j` becomes `col_j − C[i][j]·col_i`.
fn times_simple(cartan: &[Vec<i64>], m: &mut [i64], i: usize) {
    let n = cartan.len();
    for j in 0..n {
        let c = cartan[i][j];
        if j == i || c == 0 {
            continue;
        }
        for r in 0..n {
            m[r * n + j] -= c * m[r * n + i];
        }
    }
    for r in 0..n {
        m[r * n + i] = -m[r * n + i];
    }
}

/// `M ↦ s_i·M`: in every column `v`, `v_i −= Σ_j C[i][j] v_j`.
fn simple_times(cartan: &[Vec<i64>], m: &mut [i64], i: usize) {
    let n = cartan.len();
    for col in 0..n {
        let pair: i64 = (0..n).map(|j| cartan[i][j] * m[j * n + col]).sum();
        m[i * n + col] -= pair;
    }
}

impl WeylElt {
    pub fn identity(datum: &RootDatum) -> Self {
        WeylElt {
            rank: datum.rank(),
            matrix: identity_matrix(datum.rank()),
            word: Vec::new(),
        }
    }

    pub fn simple(datum: &RootDatum, i: usize) -> Self {
        Self::from_word(datum, &[i])
    }

    /// Product `s_{i_1} ⋯ s_{i_k}` (0-based indices).
    pub fn from_word(datum: &RootDatum, word: &[usize]) -> Self {
        let n = datum.rank();
        let mut m = identity_matrix(n);
        for &i in word {
            times_simple(datum.cartan_matrix(), &mut m, i);
        }
        Self::from_matrix(datum, m)
    }

    fn from_matrix(datum: &RootDatum, matrix: Vec<i64>) -> Self {
        let n = datum.rank();
        let mut m = matrix.clone();
        let mut rev = Vec::new();
        while let Some(i) = (0..n).find(|&j| column_is_negative(n, &m, j)) {
            times_simple(datum.cartan_matrix(), &mut m, i);
            rev.push(i as u8);
        }
        rev.reverse();
        WeylElt {
            rank: n,
            matrix,
            word: rev,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// A reduced word, 0-based simple indices.
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn multiply(&self, other: &WeylElt, datum: &RootDatum) -> Result<WeylElt, Error> {
        if self.rank != other.rank || self.rank != datum.rank() {
            return Err(Error::RankMismatch);
        }
        Ok(Self::from_matrix(
            datum,
            matmul(self.rank, &self.matrix, &other.matrix),
        ))
    }

    pub fn inverse(&self, datum: &RootDatum) -> WeylElt {
        let word: Vec<usize> = self.word.iter().rev().map(|&i| i as usize).collect();
        Self::from_word(datum, &word)
    }

    pub fn apply_root(&self, r: &RootVec) -> RootVec {
        let n = self.rank;
        RootVec(
            (0..n)
                .map(|i| (0..n).map(|j| self.matrix[i * n + j] * r.0[j]).sum())
                .collect(),
        )
    }

    /// Simple-root coordinates of `w(λ)`.
    pub fn apply_weight_root_coords(&self, datum: &RootDatum, w: &WeightVec) -> Vec<Rational> {
        let n = self.rank;
        let r = datum.weight_to_root_coords(w);
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Rational::from_integer(self.matrix[i * n + j].into()) * &r[j])
                    .sum()
            })
            .collect()
    }

    pub fn apply_weight(&self, datum: &RootDatum, w: &WeightVec) -> WeightVec {
        let n = self.rank;
        let r = self.apply_weight_root_coords(datum, w);
        let c = datum.cartan_matrix();
        WeightVec(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| Rational::from_integer(c[i][j].into()) * &r[j])
                        .sum()
                })
                .collect(),
        )
    }

    /// `w(h)` for a coweight in the α^∨ basis, using `w(α_j^∨) = (w α_j)^∨`.
    pub fn apply_coweight(&self, datum: &RootDatum, h: &CoweightVec) -> CoweightVec {
        let n = self.rank;
        let mut out = vec![Rational::from_integer(0.into()); n];
        for j in 0..n {
            let col = RootVec((0..n).map(|i| self.matrix[i * n + j]).collect());
            let cj = datum.coroot(&col).expect("image of a simple root is a root");
            for (o, c) in out.iter_mut().zip(&cj.0) {
                *o += c * &h.0[j];
            }
        }
        CoweightVec(out)
    }

    /// `Φ(w) = {α > 0 : wα < 0}`, in the order of the positive roots.
    pub fn inversion_set(&self, datum: &RootDatum) -> Vec<RootVec> {
        datum
            .positive_roots()
            .iter()
            .filter(|r| !self.apply_root(r).is_positive())
            .cloned()
            .collect()
    }

    pub fn has_right_descent(&self, i: usize) -> bool {
        column_is_negative(self.rank, &self.matrix, i)
    }

    /// Word in 1-based Bourbaki numbering, for display.
    pub fn bourbaki_word(&self) -> Vec<usize> {
        self.word.iter().map(|&i| i as usize + 1).collect()
    }
}

/// The fully enumerated Weyl group of a root datum.
///
/// Elements are indexed `0..|W|` in the deterministic order
/// (length, action matrix); index 0 is the identity.
#[derive(Debug)]
pub struct WeylGroup {
    datum: Arc<RootDatum>,
    elements: Vec<WeylElt>,
    index: HashMap<Vec<i64>, usize>,
    right: Vec<Vec<usize>>,
    left: Vec<Vec<usize>>,
    inversions: Vec<u128>,
    longest: usize,
}

impl WeylGroup {
    pub fn new(datum: Arc<RootDatum>) -> Result<Self, Error> {
        let order = datum.weyl_order();
        if order > MAX_ENUMERATED_ORDER {
            return Err(Error::RankLimit {
                rank: datum.rank(),
                limit: 6,
            });
        }
        let n = datum.rank();
        let cartan = datum.cartan_matrix();
        let mut found: HashMap<Vec<i64>, Vec<u8>> = HashMap::new();
        found.insert(identity_matrix(n), Vec::new());
        let mut layer = vec![identity_matrix(n)];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for m in &layer {
                for i in 0..n {
                    if column_is_negative(n, m, i) {
                        continue;
                    }
                    let mut up = m.clone();
                    times_simple(cartan, &mut up, i);
                    if !found.contains_key(&up) {
                        let mut w = found[m].clone();
                        w.push(i as u8);
                        found.insert(up.clone(), w);
                        next.push(up);
                    }
                }
            }
            layer = next;
        }
        if found.len() as u64 != order {
            return Err(Error::Internal(format!(
                "enumerated {} elements, expected {order}",
                found.len()
            )));
        }
        let mut elements: Vec<WeylElt> = found
            .into_iter()
            .map(|(matrix, word)| WeylElt {
                rank: n,
                matrix,
                word,
            })
            .collect();
        elements.sort();
        let index: HashMap<Vec<i64>, usize> = elements
            .iter()
            .enumerate()
            .map(|(k, e)| (e.matrix.clone(), k))
            .collect();
        let right = elements
            .iter()
            .map(|e| {
                (0..n)
                    .map(|i| {
                        let mut m = e.matrix.clone();
                        times_simple(cartan, &mut m, i);
                        index[&m]
                    })
                    .collect()
            })
            .collect();
        let left = elements
            .iter()
            .map(|e| {
                (0..n)
                    .map(|i| {
                        let mut m = e.matrix.clone();
                        simple_times(cartan, &mut m, i);
                        index[&m]
                    })
                    .collect()
            })
            .collect();
        let inversions = elements
            .iter()
            .map(|e| {
                let mut bits = 0u128;
                for (k, r) in datum.positive_roots().iter().enumerate() {
                    if !e.apply_root(r).is_positive() {
                        bits |= 1 << k;
                    }
                }
                bits
            })
            .collect();
        let longest = elements.len() - 1;
        Ok(WeylGroup {
            datum,
            elements,
            index,
            right,
            left,
            inversions,
            longest,
        })
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElt] {
        &self.elements
    }

    pub fn element(&self, w: usize) -> &WeylElt {
        &self.elements[w]
    }

    pub fn length(&self, w: usize) -> usize {
        self.elements[w].length()
    }

    pub fn index_of(&self, w: &WeylElt) -> Option<usize> {
        self.index.get(&w.matrix).copied()
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Index of `w₀`.
    pub fn longest(&self) -> usize {
        self.longest
    }

    /// Index of `w·s_i`.
    pub fn right_mul(&self, w: usize, i: usize) -> usize {
        self.right[w][i]
    }

    /// Index of `s_i·w`.
    pub fn left_mul(&self, w: usize, i: usize) -> usize {
        self.left[w][i]
    }

    pub fn mul(&self, u: usize, v: usize) -> usize {
        let n = self.datum.rank();
        self.index[&matmul(n, &self.elements[u].matrix, &self.elements[v].matrix)]
    }

    pub fn inverse(&self, w: usize) -> usize {
        let mut x = 0;
        for &i in self.elements[w].word.iter().rev() {
            x = self.right[x][i as usize];
        }
        x
    }

    /// Bit `k` is set iff the `k`-th positive root lies in `Φ(w)`.
    pub fn inversion_bits(&self, w: usize) -> u128 {
        self.inversions[w]
    }

    /// Index of the reflection `s_γ` for the `k`-th positive root.
    pub fn reflection(&self, k: usize) -> usize {
        let d = &self.datum;
        let n = d.rank();
        let gamma = &d.positive_roots()[k];
        let cv = d.coroot_coords(k);
        let mut m = identity_matrix(n);
        for j in 0..n {
            // ⟨α_j, γ^∨⟩ = Σ_i γ^∨_i C[i][j]
            let pair: i64 = (0..n).map(|i| cv[i] * d.cartan_matrix()[i][j]).sum();
            for i in 0..n {
                m[i * n + j] -= pair * gamma.0[i];
            }
        }
        self.index[&m]
    }

    /// `W^P` for the parabolic with simple roots `delta_p`: the elements with
    /// no right descent in `delta_p`, in the group order.
    pub fn min_coset_reps(&self, delta_p: &[usize]) -> Vec<usize> {
        (0..self.order())
            .filter(|&w| delta_p.iter().all(|&i| !self.elements[w].has_right_descent(i)))
            .collect()
    }

    /// Longest element of the parabolic subgroup `W_P`.
    pub fn longest_element(&self, delta_p: &[usize]) -> usize {
        let mut w = 0;
        while let Some(&i) = delta_p
            .iter()
            .find(|&&i| !self.elements[w].has_right_descent(i))
        {
            w = self.right[w][i];
        }
        w
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    fn group(name: &str) -> WeylGroup {
        let t: CartanType = name.parse().unwrap();
        WeylGroup::new(Arc::new(RootDatum::new(t).unwrap())).unwrap()
    }

    #[test]
    fn orders_and_longest_lengths() {
        for (name, order, n_pos) in [
            ("A1", 2, 1),
            ("A2", 6, 3),
            ("B3", 48, 9),
            ("G2", 12, 6),
            ("D4", 192, 12),
            ("F4", 1152, 24),
        ] {
            let g = group(name);
            assert_eq!(g.order(), order, "{name}");
            assert_eq!(g.length(g.longest()), n_pos);
            assert_eq!(g.inversion_bits(g.longest()).count_ones() as usize, n_pos);
        }
    }

    #[test]
    fn braid_relation_and_inverse() {
        let g = group("A2");
        let d = g.datum().clone();
        let a = WeylElt::from_word(&d, &[0, 1, 0]);
        let b = WeylElt::from_word(&d, &[1, 0, 1]);
        assert_eq!(a, b);
        for w in g.elements() {
            let inv = w.inverse(&d);
            assert!(w.multiply(&inv, &d).unwrap().is_identity());
        }
    }

    #[test]
    fn inversion_sets() {
        let g = group("G2");
        let d = g.datum().clone();
        let e = WeylElt::identity(&d);
        assert!(e.inversion_set(&d).is_empty());
        for i in 0..2 {
            let s = WeylElt::simple(&d, i);
            assert_eq!(s.inversion_set(&d), vec![d.positive_roots()[i].clone()]);
        }
        let w0 = g.element(g.longest());
        assert_eq!(w0.inversion_set(&d), d.positive_roots().to_vec());
        for w in g.elements() {
            assert_eq!(w.inversion_set(&d).len(), w.length());
        }
    }

    #[test]
    fn coset_representatives() {
        let g = group("A2");
        assert_eq!(g.min_coset_reps(&[]).len(), 6);
        assert_eq!(g.min_coset_reps(&[0, 1]), vec![0]);
        assert_eq!(g.min_coset_reps(&[1]).len(), 3);
        let g2 = group("G2");
        assert_eq!(g2.min_coset_reps(&[0]).len(), 6);
        assert_eq!(g2.min_coset_reps(&[1]).len(), 6);
    }

    #[test]
    fn coset_reps_match_brute_force_minimal_selection() {
        for name in ["A3", "B3", "C3", "G2"] {
            let g = group(name);
            let n = g.datum().rank();
            for mask in 0u32..(1 << n) {
                let dp: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                // W_P by closure
                let mut wp = vec![0usize];
                let mut k = 0;
                while k < wp.len() {
                    for &i in &dp {
                        let x = g.right_mul(wp[k], i);
                        if !wp.contains(&x) {
                            wp.push(x);
                        }
                    }
                    k += 1;
                }
                let mut brute: Vec<usize> = Vec::new();
                let mut covered = vec![false; g.order()];
                for w in 0..g.order() {
                    if covered[w] {
                        continue;
                    }
                    let coset: Vec<usize> = wp.iter().map(|&x| g.mul(w, x)).collect();
                    for &c in &coset {
                        covered[c] = true;
                    }
                    brute.push(*coset.iter().min_by_key(|&&c| g.length(c)).unwrap());
                }
                brute.sort();
                assert_eq!(g.min_coset_reps(&dp), brute, "{name} {dp:?}");
                assert_eq!(g.min_coset_reps(&dp).len() * wp.len(), g.order());
            }
        }
    }

    #[test]
    fn longest_parabolic_elements() {
        let g = group("B3");
        assert_eq!(g.longest_element(&[]), 0);
        assert_eq!(g.longest_element(&[0, 1, 2]), g.longest());
        assert_eq!(g.length(g.longest_element(&[0, 1, 2])), 9);
        let a1 = group("A1");
        assert_eq!(a1.longest_element(&[0]), 1);
        assert_eq!(g.length(g.longest_element(&[1, 2])), 4);
    }

    #[test]
    fn length_properties() {
        let g = group("B3");
        let w0 = g.longest();
        let n_pos = g.length(w0);
        for w in 0..g.order() {
            for i in 0..3 {
                let a = g.length(g.right_mul(w, i));
                assert!(a + 1 == g.length(w) || a == g.length(w) + 1);
            }
            assert_eq!(g.length(g.mul(w0, w)), n_pos - g.length(w));
            assert_eq!(g.mul(w, g.inverse(w)), 0);
        }
        // Poincaré polynomial of B3: (1+q)(1+q+q²+q³)(1+…+q⁵)
        let mut counts = vec![0usize; n_pos + 1];
        for w in 0..g.order() {
            counts[g.length(w)] += 1;
        }
        assert_eq!(counts, vec![1, 3, 5, 7, 8, 8, 7, 5, 3, 1]);
    }

    #[test]
    fn action_preserves_form() {
        let g = group("G2");
        let d = g.datum().clone();
        let l1 = WeightVec(vec![Rational::from_integer(3.into()), Rational::from_integer((-1).into())]);
        let l2 = WeightVec(vec![Rational::from_integer(1.into()), Rational::from_integer(2.into())]);
        for w in g.elements() {
            let a = w.apply_weight(&d, &l1);
            let b = w.apply_weight(&d, &l2);
            assert_eq!(d.weight_form(&a, &b), d.weight_form(&l1, &l2));
            let h = CoweightVec::from_integers(&[2, -1]);
            assert_eq!(
                d.pairing(&a, &w.apply_coweight(&d, &h)).unwrap(),
                d.pairing(&l1, &h).unwrap()
            );
        }
    }

    #[test]
    fn reflections_are_involutions() {
        let g = group("C3");
        for k in 0..g.datum().num_positive_roots() {
            let s = g.reflection(k);
            assert_eq!(g.mul(s, s), 0);
            assert_eq!(g.length(s) % 2, 1);
        }
    }
}
