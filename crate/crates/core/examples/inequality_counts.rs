//! Counts of the inequality lists for a few groups, in every mode.

use qhorn::horn::{HornEngine, Mode};

fn main() -> Result<(), qhorn::Error> {
    let groups: Vec<String> = std::env::args().skip(1).collect();
    let groups = if groups.is_empty() {
        vec!["G2".to_string(), "Sp(4)".to_string()]
    } else {
        groups
    };
    for name in groups {
        let engine = HornEngine::new(name.parse()?)?;
        print!("{name:>8}");
        for mode in Mode::ALL {
            let system = engine.generate(mode)?;
            print!("  {mode}={}", system.len());
        }
        println!();
    }
    Ok(())
}
