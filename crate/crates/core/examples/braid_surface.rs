//! Expand a quasi-positive factorization and read off its surface.

use legcob::braid::{braid_closure_pd, closure_components, expand, self_linking, surface_data};
use legcob::QPFactorization;

fn main() -> anyhow::Result<()> {
    // (σ1⁻³ σ2 σ1³) σ2 in B3
    let q = QPFactorization::parse("B3\nW -1 -1 -1 ; I 2\nW ; I 2\n")?;
    let word = expand(&q);
    print!("{word}");
    let c = closure_components(&word);
    let s = surface_data(&q);
    println!(
        "n {} k {} chi {} permutation {:?} components {} disk {} self-linking {}",
        s.n,
        s.k,
        s.chi,
        c.permutation,
        c.component_count,
        s.is_disk,
        self_linking(&word)
    );
    print!("{}", braid_closure_pd(&word));
    Ok(())
}
