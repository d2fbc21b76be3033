//! Recomputes rows of the reference count table.

use std::time::Instant;

use qhorn::table;
use qhorn::horn::HornEngine;

fn main() -> Result<(), qhorn::Error> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let skip = args.iter().any(|a| a == "--skip-polytope");
    let mut groups: Vec<String> = args.into_iter().filter(|a| !a.starts_with("--")).collect();
    if groups.is_empty() {
        groups = vec!["G2".into(), "Sp(4)".into()];
    }
    let mut rows = Vec::new();
    for name in groups {
        let start = Instant::now();
        rows.push(table::reproduce(&HornEngine::new(name.parse()?)?, !skip)?);
        eprintln!("{name}: {:.2?}", start.elapsed());
    }
    print!("{}", table::render(&rows));
    println!();
    print!("{}", table::render_reference());
    Ok(())
}
