use std::collections::HashSet;

use qhorn::horn::{HornEngine, Mode};
use qhorn::{io, polytope, InequalityKind, Rational};

type Key = ([Vec<Rational>; 3], Rational);

fn keys(engine: &HornEngine, mode: Mode) -> HashSet<Key> {
    engine
        .generate(mode)
        .unwrap()
        .inequalities
        .into_iter()
        .map(|i| (i.lhs, i.rhs))
        .collect()
}

#[test]
fn modes_are_nested() {
    for name in ["A1", "A2", "G2", "C2", "B3", "C3"] {
        let e = HornEngine::new(name.parse().unwrap()).unwrap();
        let [max, tw, twbk, th3] = [Mode::Max, Mode::Tw, Mode::Twbk, Mode::Th3].map(|m| keys(&e, m));
        assert!(th3.is_subset(&twbk), "{name}");
        assert!(twbk.is_subset(&tw), "{name}");
        assert!(tw.is_subset(&max), "{name}");
        let additive = e.generate(Mode::Additive).unwrap();
        assert!(additive.inequalities.iter().all(|i| i.rhs == Rational::from_integer(0.into())
            || i.kind != InequalityKind::Horn));
    }
}

#[test]
fn lists_are_closed_under_permuting_the_points() {
    for name in ["A2", "G2", "C2", "B3"] {
        let e = HornEngine::new(name.parse().unwrap()).unwrap();
        for mode in Mode::ALL {
            let k = keys(&e, mode);
            for (lhs, rhs) in &k {
                for p in [[1, 0, 2], [0, 2, 1], [2, 1, 0]] {
                    let q = (p.map(|i| lhs[i].clone()), rhs.clone());
                    assert!(k.contains(&q), "{name} {mode}");
                }
            }
        }
    }
}

#[test]
fn generation_is_deterministic() {
    for name in ["G2", "C3"] {
        let a = HornEngine::new(name.parse().unwrap()).unwrap();
        let b = HornEngine::new(name.parse().unwrap()).unwrap();
        for mode in Mode::ALL {
            let x = a.generate(mode).unwrap();
            assert_eq!(x, b.generate(mode).unwrap());
            assert_eq!(io::to_json(&x), io::to_json(&a.generate(mode).unwrap()));
        }
    }
}

#[test]
fn larger_lists_hold_at_every_vertex() {
    for name in ["A1", "A2", "G2", "C2"] {
        let e = HornEngine::new(name.parse().unwrap()).unwrap();
        let th3 = e.generate(Mode::Th3).unwrap();
        let v = polytope::vertices(&polytope::facets(&th3.hrep().unwrap()).unwrap()).unwrap();
        let max = e.generate(Mode::Max).unwrap().hrep().unwrap();
        for p in &v.points {
            assert!(max.contains(p), "{name}");
        }
    }
}

#[test]
fn facets_equal_th3_count() {
    for name in ["G2", "C2", "A2"] {
        let e = HornEngine::new(name.parse().unwrap()).unwrap();
        let s = e.generate(Mode::Th3).unwrap();
        let f = polytope::facet_indices(&s.hrep().unwrap()).unwrap();
        assert_eq!(f.len(), s.len(), "{name}");
    }
    // Rank one: the dominance and alcove rows are implied by the four Horn rows.
    let e = HornEngine::new("A1".parse().unwrap()).unwrap();
    let s = e.generate(Mode::Th3).unwrap();
    assert_eq!(polytope::facet_indices(&s.hrep().unwrap()).unwrap(), vec![0, 1, 2, 3]);
}

#[test]
fn json_round_trips() {
    let e = HornEngine::new("G2".parse().unwrap()).unwrap();
    for mode in Mode::ALL {
        let text = io::to_json(&e.generate(mode).unwrap());
        let back = io::from_json(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
    }
}

#[test]
fn membership_verdicts() {
    use qhorn::horn::Verdict;
    let e = HornEngine::new("A1".parse().unwrap()).unwrap();
    let pt = |s: &str| io::parse_point(s, 1).unwrap();
    let v = |a, b, c| e.membership(Mode::Th3, &[pt(a), pt(b), pt(c)]).unwrap().verdict;
    assert_eq!(v("0", "0", "0"), Verdict::Boundary);
    assert_eq!(v("1/2", "1/2", "1/2"), Verdict::Inside);
    assert_eq!(v("1", "1", "0"), Verdict::Boundary);
    assert_eq!(v("1", "1", "1"), Verdict::Outside);
    assert_eq!(v("1/2", "1/4", "0"), Verdict::Outside);
}

#[test]
fn unsupported_input() {
    assert!("E9".parse::<qhorn::CartanType>().is_err());
    assert!("Sp(5)".parse::<qhorn::CartanType>().is_err());
    assert!("bogus".parse::<Mode>().is_err());
    assert!(io::parse_point("1,x", 2).is_err());
}
