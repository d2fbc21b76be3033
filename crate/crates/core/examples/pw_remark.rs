//! Pairings of lifted degrees with the roots of the unipotent radical; the
//! bound `⟨h_PW, α⟩ ≥ −1` is checked for every maximal parabolic.

use qhorn::horn::HornEngine;
use qhorn::io::PwRecord;

fn main() -> Result<(), qhorn::Error> {
    let groups: Vec<String> = std::env::args().skip(1).collect();
    let groups = if groups.is_empty() {
        ["A3", "B3", "C3", "G2", "D4", "F4"].map(String::from).to_vec()
    } else {
        groups
    };
    for name in groups {
        let report = HornEngine::new(name.parse()?)?.check_pw_remark()?;
        print!("{}", PwRecord::new(&report).to_text().lines().last().unwrap_or_default());
        println!();
    }
    Ok(())
}
