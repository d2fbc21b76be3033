//! Writes an inequality list as JSON, CSV and text, and reads the JSON back.

use qhorn::horn::{HornEngine, Mode};
use qhorn::io;

fn main() -> Result<(), qhorn::Error> {
    let system = HornEngine::new("A2".parse()?)?.generate(Mode::Th3)?;
    let json = io::to_json(&system);
    let back = io::from_json(&json)?;
    println!("JSON: {} bytes, {} inequalities, round trip {}", json.len(), back.count,
        serde_json::to_string_pretty(&back).unwrap() == json);
    let mut csv = Vec::new();
    io::write_csv(&system, &mut csv)?;
    print!("{}", String::from_utf8_lossy(&csv).lines().take(4).collect::<Vec<_>>().join("\n"));
    println!("\n...");
    print!("{}", io::to_text(&system));
    Ok(())
}
