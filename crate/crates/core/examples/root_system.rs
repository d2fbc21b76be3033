//! Cartan matrix, positive roots and coroots of a group.

use qhorn::{CartanType, RootDatum};

fn main() -> Result<(), qhorn::Error> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "G2".to_string());
    let t: CartanType = name.parse()?;
    let datum = RootDatum::new(t)?;
    println!("{t} = {}, |W| = {}", t.group_name(), datum.weyl_order());
    println!("Cartan matrix:");
    for row in datum.cartan_matrix() {
        println!("  {row:?}");
    }
    println!("simple root norms: {:?}", datum.simple_norms().iter().map(|q| q.to_string()).collect::<Vec<_>>());
    println!("positive roots (simple-root coordinates) and coroots (simple-coroot coordinates):");
    for (k, r) in datum.positive_roots().iter().enumerate() {
        println!("  {:>3}  height {}  {:?}  {:?}", k, r.height(), r.0, datum.coroot_coords(k));
    }
    println!("highest root: {:?}", datum.highest_root().0);
    println!("rho: {:?}", datum.rho().0.iter().map(|q| q.to_string()).collect::<Vec<_>>());
    Ok(())
}
