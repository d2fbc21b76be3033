use num_bigint::BigInt;
use proptest::prelude::*;
use qhorn_polytope::oracle::vertices_by_subsets;
use qhorn_polytope::{facets, vertices, verify, HRep, HalfSpace, PolytopeError, Rational};

fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn hrep(dim: usize, rows: &[(&[i64], i64)]) -> HRep {
    HRep::new(
        dim,
        rows.iter()
            .map(|(a, b)| HalfSpace::new(a.iter().map(|&x| q(x)).collect(), q(*b)))
            .collect(),
    )
    .unwrap()
}

fn cube(dim: usize) -> HRep {
    let mut rows = Vec::new();
    for i in 0..dim {
        let mut e = vec![q(0); dim];
        e[i] = q(1);
        rows.push(HalfSpace::new(e.clone(), q(1)));
        e[i] = q(-1);
        rows.push(HalfSpace::new(e, q(0)));
    }
    HRep::new(dim, rows).unwrap()
}

fn cross(dim: usize) -> HRep {
    let mut rows = Vec::new();
    for mask in 0..(1u32 << dim) {
        let a = (0..dim)
            .map(|i| if mask >> i & 1 == 1 { q(-1) } else { q(1) })
            .collect();
        rows.push(HalfSpace::new(a, q(1)));
    }
    HRep::new(dim, rows).unwrap()
}

#[test]
fn known_solids() {
    for (h, nv, nf) in [
        (cube(3), 8, 6),
        (cube(4), 16, 8),
        (cross(3), 6, 8),
        (cross(4), 8, 16),
        (hrep(2, &[(&[-1, 0], 0), (&[0, -1], 0), (&[1, 1], 1), (&[1, 1], 2)]), 3, 3),
    ] {
        let v = vertices(&h).unwrap();
        assert_eq!(v.len(), nv);
        assert_eq!(v.sorted(), vertices_by_subsets(&h).unwrap().points);
        let f = facets(&h).unwrap();
        assert_eq!(f.len(), nf);
        assert!(verify(&f, &v));
    }
}

#[test]
fn degenerate_pyramid() {
    // Square pyramid: the apex lies on four facets in dimension 3.
    let h = hrep(
        3,
        &[
            (&[0, 0, -1], 0),
            (&[2, 0, 1], 2),
            (&[-2, 0, 1], 2),
            (&[0, 2, 1], 2),
            (&[0, -2, 1], 2),
        ],
    );
    let v = vertices(&h).unwrap();
    assert_eq!(v.len(), 5);
    assert_eq!(v.sorted(), vertices_by_subsets(&h).unwrap().points);
}

#[test]
fn empty_and_flat() {
    let empty = hrep(1, &[(&[1], 0), (&[-1], -1)]);
    assert_eq!(facets(&empty), Err(PolytopeError::Empty));
    let flat = hrep(2, &[(&[1, 0], 0), (&[-1, 0], 0), (&[0, 1], 1), (&[0, -1], 0)]);
    assert_eq!(facets(&flat), Err(PolytopeError::LowerDimensional));
}

/// A random polytope: the cube [-3, 3]^dim cut by random rows through the
/// interior of a smaller box, so the origin stays interior.
fn random_system() -> impl Strategy<Value = HRep> {
    (2usize..=4).prop_flat_map(|dim| {
        prop::collection::vec((prop::collection::vec(-3i64..=3, dim), 1i64..=4), 0..=(20 - 2 * dim))
            .prop_map(move |cuts| {
                let mut rows = Vec::new();
                for i in 0..dim {
                    let mut e = vec![q(0); dim];
                    e[i] = q(1);
                    rows.push(HalfSpace::new(e.clone(), q(3)));
                    e[i] = q(-1);
                    rows.push(HalfSpace::new(e, q(3)));
                }
                for (a, b) in cuts {
                    rows.push(HalfSpace::new(a.into_iter().map(q).collect(), q(b)));
                }
                HRep::new(dim, rows).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dd_matches_subset_oracle(h in random_system()) {
        let v = vertices(&h).unwrap();
        prop_assert_eq!(v.sorted(), vertices_by_subsets(&h).unwrap().points);
        let f = facets(&h).unwrap();
        prop_assert!(verify(&f, &v));
    }

    #[test]
    fn facets_are_idempotent_and_order_free(h in random_system(), seed in any::<u64>()) {
        let f = facets(&h).unwrap();
        prop_assert_eq!(facets(&f).unwrap().len(), f.len());
        let mut rows = h.rows().to_vec();
        let n = rows.len();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            rows.swap(i, (s >> 33) as usize % (i + 1));
        }
        let shuffled = HRep::new(h.dim(), rows).unwrap();
        prop_assert_eq!(facets(&shuffled).unwrap().len(), f.len());
        prop_assert_eq!(vertices(&shuffled).unwrap().sorted(), vertices(&h).unwrap().sorted());
    }
}
