use std::sync::Arc;

use proptest::prelude::*;
use qhorn::parabolic::ParabolicDatum;
use qhorn::quantum::{GwQuery, QuantumRing};
use qhorn::schubert::SchubertRing;
use qhorn::{RootDatum, WeylGroup};

const SMALL: [&str; 8] = ["A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3"];

fn ring(name: &str) -> QuantumRing {
    let datum = Arc::new(RootDatum::new(name.parse().unwrap()).unwrap());
    QuantumRing::for_group(Arc::new(WeylGroup::new(datum).unwrap())).unwrap()
}

#[test]
fn products_are_commutative_and_associative() {
    for name in ["A2", "B2", "C2"] {
        let r = ring(name);
        let n = r.group().order();
        for u in 0..n {
            for v in 0..n {
                assert_eq!(r.quantum_product(u, v), r.quantum_product(v, u), "{name}");
                for w in 0..n {
                    let left = r.product_with(&r.quantum_product(u, v), w);
                    let right = r.product_with(&r.quantum_product(v, w), u);
                    assert_eq!(left, right, "{name} ({u} {v}) {w}");
                }
            }
        }
    }
}

#[test]
fn coefficients_are_graded_nonnegative_integers() {
    for name in ["A1", "A2", "B2", "G2", "A3", "B3", "C3"] {
        let r = ring(name);
        let g = r.group();
        for u in 0..g.order() {
            for v in 0..g.order() {
                for (d, w, c) in r.product_ref(u, v).iter() {
                    assert!(c.is_integer() && c.numer() > &0.into(), "{name}: {c}");
                    assert_eq!(g.length(u) + g.length(v), g.length(w) + d.weight(), "{name}");
                }
            }
        }
    }
}

/// Every triple, every degree up to the grading bound.
#[test]
fn gw_symmetric_exhaustive_rank2() {
    for name in ["A2", "B2", "G2"] {
        let r = ring(name);
        let g = r.group();
        let n = g.order();
        let top = g.length(g.longest());
        let mut nonzero = 0;
        for w1 in 0..n {
            for w2 in 0..n {
                for w3 in 0..n {
                    let total = g.length(w1) + g.length(w2) + g.length(w3);
                    if total > 2 * top || (2 * top - total) % 2 != 0 {
                        continue;
                    }
                    let s = (2 * top - total) / 2;
                    for d1 in 0..=s as i64 {
                        let d = [d1, s as i64 - d1];
                        let x = r.gw_gb(w1, w2, w3, &d).unwrap();
                        nonzero += usize::from(x > 0);
                        for p in [[w2, w1, w3], [w1, w3, w2], [w3, w2, w1], [w2, w3, w1], [w3, w1, w2]] {
                            assert_eq!(r.gw_gb(p[0], p[1], p[2], &d).unwrap(), x, "{name}");
                        }
                    }
                }
            }
        }
        assert!(nonzero > 0);
    }
}

fn admissible(r: &QuantumRing, seed: (usize, usize, usize, Vec<i64>)) -> Option<([usize; 3], Vec<i64>)> {
    let g = r.group();
    let n = g.order();
    let top = g.length(g.longest());
    let (a, b, c, d) = seed;
    let (w1, w2) = (a % n, b % n);
    let weight: i64 = 2 * d.iter().sum::<i64>();
    let l3 = 2 * top as i64 - g.length(w1) as i64 - g.length(w2) as i64 - weight;
    if l3 < 0 || l3 > top as i64 {
        return None;
    }
    let level: Vec<usize> = (0..n).filter(|&w| g.length(w) as i64 == l3).collect();
    Some(([w1, w2, level[c % level.len()]], d))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 160, max_global_rejects: 100_000, ..ProptestConfig::default() })]

    #[test]
    fn gw_symmetric_random_rank3(
        k in 0usize..3,
        a in any::<usize>(),
        b in any::<usize>(),
        c in any::<usize>(),
        d in prop::collection::vec(0i64..=2, 3),
    ) {
        thread_local! {
            static RINGS: Vec<QuantumRing> = ["A3", "B3", "C3"].map(ring).into_iter().collect();
        }
        RINGS.with(|rings| {
            let r = &rings[k];
            let Some((w, d)) = admissible(r, (a, b, c, d)) else {
                return Err(TestCaseError::reject("not admissible"));
            };
            let x = r.gw_gb(w[0], w[1], w[2], &d).unwrap();
            for p in [[1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]] {
                prop_assert_eq!(r.gw_gb(w[p[0]], w[p[1]], w[p[2]], &d).unwrap(), x);
            }
            Ok(())
        })?;
    }
}

#[test]
fn gw_degree_zero_is_classical() {
    for name in SMALL {
        let r = ring(name);
        let g = r.group();
        let cl = r.classical();
        for beta in 0..g.datum().rank() {
            let p = ParabolicDatum::maximal(g.datum().clone(), beta).unwrap();
            let reps = g.min_coset_reps(p.delta_p());
            for &w1 in &reps {
                for &w2 in &reps {
                    for &w3 in &reps {
                        if g.length(w1) + g.length(w2) + g.length(w3) != 2 * p.dim() {
                            continue;
                        }
                        let q = GwQuery { w1, w2, w3, beta, d: 0 };
                        assert_eq!(
                            r.gw_gp(&p, &q).unwrap(),
                            cl.triple_number(&p, w1, w2, w3).unwrap(),
                            "{name} beta={beta}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn chevalley_matches_polynomial_oracle() {
    for name in SMALL {
        let datum = Arc::new(RootDatum::new(name.parse().unwrap()).unwrap());
        let ring = SchubertRing::new(Arc::new(WeylGroup::new(datum).unwrap())).unwrap();
        let n = ring.group().order();
        for u in 0..n {
            for v in u..n {
                assert_eq!(
                    ring.product(u, v),
                    ring.product_via_polynomials(u, v).unwrap(),
                    "{name}: {u} {v}"
                );
            }
        }
    }
}

#[test]
fn small_anchors() {
    // P¹: one line through three points.
    let r = ring("A1");
    assert_eq!(r.gw_gb(0, 0, 0, &[1]).unwrap(), 1);
    // P²: one line through two points, meeting a line.
    let r = ring("A2");
    let g = r.group();
    let p = ParabolicDatum::maximal(g.datum().clone(), 0).unwrap();
    let reps = g.min_coset_reps(p.delta_p());
    let point = reps[0];
    let line = reps[1];
    assert_eq!(r.gw_gp(&p, &GwQuery { w1: point, w2: point, w3: line, beta: 0, d: 1 }).unwrap(), 1);
    assert_eq!(r.gw_gp(&p, &GwQuery { w1: point, w2: line, w3: line, beta: 0, d: 1 }).unwrap(), 0);
}
