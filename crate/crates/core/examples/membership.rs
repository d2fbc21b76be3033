//! Whether triples of conjugacy classes multiply to the identity.

use qhorn::horn::{HornEngine, Mode};
use qhorn::io::{label, parse_point};

fn main() -> Result<(), qhorn::Error> {
    let engine = HornEngine::new("C2".parse()?)?;
    let system = engine.generate(Mode::Th3)?;
    let points = [
        ["0,0", "0,0", "0,0"],
        ["1/4,1/4", "1/4,1/4", "1/4,1/4"],
        ["1/2,0", "1/2,0", "0,0"],
        ["1,0", "0,1", "0,0"],
        ["1/2,1/4", "1/3,1/3", "0,1/2"],
    ];
    for p in points {
        let t = [
            parse_point(p[0], 2)?,
            parse_point(p[1], 2)?,
            parse_point(p[2], 2)?,
        ];
        let m = system.membership(&engine, &t)?;
        println!("{p:?}: {} ({} tight)", m.verdict.name(), m.tight.len());
        for &i in &m.violated {
            println!("    violates {}", label(&system.inequalities[i]));
        }
    }
    Ok(())
}
