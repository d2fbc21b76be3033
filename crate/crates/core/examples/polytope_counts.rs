//! Vertices and facets of the polytope cut out by the `th3` list.

use std::time::Instant;

use qhorn::horn::{HornEngine, Mode};
use qhorn::polytope;

fn main() -> Result<(), qhorn::Error> {
    let groups: Vec<String> = std::env::args().skip(1).collect();
    let groups = if groups.is_empty() {
        vec!["A1".to_string(), "G2".to_string(), "Sp(4)".to_string()]
    } else {
        groups
    };
    for name in groups {
        let start = Instant::now();
        let engine = HornEngine::new(name.parse()?)?;
        let system = engine.generate(Mode::Th3)?;
        let h = system.hrep()?;
        let facets = polytope::facets(&h)?;
        let facet_time = start.elapsed();
        let vertices = polytope::vertices(&facets)?;
        println!(
            "{name:>8}  th3={}  facets={}  vertices={}  verified={}  (facets {:.2?}, total {:.2?})",
            system.len(),
            facets.len(),
            vertices.len(),
            polytope::verify(&facets, &vertices),
            facet_time,
            start.elapsed()
        );
    }
    Ok(())
}
