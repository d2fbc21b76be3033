//! Weyl group lengths and minimal coset representatives of the maximal parabolics.

use std::sync::Arc;

use qhorn::parabolic::ParabolicDatum;
use qhorn::{RootDatum, WeylGroup};

fn main() -> Result<(), qhorn::Error> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "B3".to_string());
    let datum = Arc::new(RootDatum::new(name.parse()?)?);
    let group = WeylGroup::new(datum.clone())?;
    let top = group.length(group.longest());
    let mut poincare = vec![0usize; top + 1];
    for w in 0..group.order() {
        poincare[group.length(w)] += 1;
    }
    println!("{name}: |W| = {}, l(w0) = {top}", group.order());
    println!("elements by length: {poincare:?}");
    println!("w0 = s{:?}", group.element(group.longest()).bourbaki_word());
    for beta in 0..datum.rank() {
        let p = ParabolicDatum::maximal(datum.clone(), beta)?;
        let reps = group.min_coset_reps(p.delta_p());
        println!(
            "G/P_{}: dim {}, n_beta {}, {} Schubert classes",
            beta + 1,
            p.dim(),
            p.n_beta(beta)?,
            reps.len()
        );
        for w in reps.iter().take(6) {
            println!("    {:?}", group.element(*w).bourbaki_word());
        }
        if reps.len() > 6 {
            println!("    ...");
        }
    }
    Ok(())
}
