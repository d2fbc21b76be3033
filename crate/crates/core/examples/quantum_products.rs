//! Quantum products on G/B and Gromov–Witten invariants of G/P.

use std::sync::Arc;

use qhorn::parabolic::ParabolicDatum;
use qhorn::quantum::{GwQuery, QuantumRing};
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
    let ring = QuantumRing::for_group(group.clone())?;
    let g = &group;
    let n = datum.rank();
    let w0 = g.longest();
    for i in 1..=n {
        let p = ring.quantum_product(i, w0);
        let terms: Vec<String> = p
            .iter()
            .map(|(d, w, c)| format!("{c} q{:?} S[{}]", d.coords(n), word(g, w)))
            .collect();
        println!("S[s{i}] * S[w0] = {}", terms.join(" + "));
    }
    for beta in 0..n {
        let p = ParabolicDatum::maximal(datum.clone(), beta)?;
        let reps = g.min_coset_reps(p.delta_p());
        let bound = qhorn::quantum::degree_bound(&p, beta)?;
        let mut count = 0;
        for d in 1..=bound {
            for &w1 in &reps {
                for &w2 in &reps {
                    for &w3 in &reps {
                        if !(w1 <= w2 && w2 <= w3) {
                            continue;
                        }
                        let gw = ring.gw_gp(&p, &GwQuery { w1, w2, w3, beta, d })?;
                        if gw > 0 && count < 8 {
                            println!(
                                "G/P_{}: GW({}, {}, {}; {d}) = {gw}",
                                beta + 1,
                                word(g, w1),
                                word(g, w2),
                                word(g, w3)
                            );
                        }
                        count += usize::from(gw > 0);
                    }
                }
            }
        }
        println!("G/P_{}: {count} nonzero invariants of positive degree (up to order)", beta + 1);
    }
    Ok(())
}
