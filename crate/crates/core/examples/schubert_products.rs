//! Products of Schubert classes on G/B by the Chevalley rule, checked against
//! Schubert polynomials, and structure constants of a Grassmannian-type G/P.

use std::sync::Arc;

use num_traits::Zero;

use qhorn::parabolic::ParabolicDatum;
use qhorn::schubert::SchubertRing;
use qhorn::{RootDatum, WeylGroup};

fn word(g: &WeylGroup, w: usize) -> String {
    let v = g.element(w).bourbaki_word();
    if v.is_empty() {
        "e".into()
    } else {
        v.iter().map(|i| format!("s{i}")).collect()
    }
}

fn main() -> Result<(), qhorn::Error> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "A2".to_string());
    let datum = Arc::new(RootDatum::new(name.parse()?)?);
    let group = Arc::new(WeylGroup::new(datum.clone())?);
    let ring = SchubertRing::new(group.clone())?;
    let g = &group;
    for u in 1..=datum.rank() {
        for v in 1..=datum.rank() {
            let p = ring.product(u, v);
            let check = ring.product_via_polynomials(u, v)?;
            let terms: Vec<String> = (0..g.order())
                .filter(|&w| !p.coeff(w).is_zero())
                .map(|w| format!("{} S[{}]", p.coeff(w), word(g, w)))
                .collect();
            println!(
                "S[{}] S[{}] = {}   (polynomial check: {})",
                word(g, u),
                word(g, v),
                terms.join(" + "),
                p == check
            );
        }
    }
    let p = ParabolicDatum::maximal(datum.clone(), 0)?;
    let reps = g.min_coset_reps(p.delta_p());
    println!("nonzero triple numbers on G/P_1:");
    for &a in &reps {
        for &b in &reps {
            for &c in &reps {
                if a <= b && b <= c {
                    let n = ring.triple_number(&p, a, b, c)?;
                    if n > 0 {
                        println!("  c({}, {}, {}) = {n}", word(g, a), word(g, b), word(g, c));
                    }
                }
            }
        }
    }
    Ok(())
}
