//! Jones and Kauffman polynomials of braid closures, and the tb bound.

use legcob::braid::braid_closure_pd;
use legcob::polys::{kauffman_poly, to_table_convention};
use legcob::{jones, mirror, tb_upper_bound, BraidWord};

fn main() -> anyhow::Result<()> {
    for (name, text) in [
        ("right trefoil", "B2\n1 1 1\n"),
        ("figure eight", "B3\n1 -2 1 -2\n"),
        ("m(8_20) closure", "B3\n-1 -1 -1 2 1 1 1 2\n"),
    ] {
        let pd = braid_closure_pd(&BraidWord::parse(text)?);
        let j = jones(&pd)?;
        let f = kauffman_poly(&pd)?;
        println!("{name}");
        println!(
            "  jones(t) {:?}",
            j.to_t_variable().map(|p| p.terms().collect::<Vec<_>>())
        );
        println!(
            "  kauffman terms {}  (table form {})",
            f.len(),
            to_table_convention(&f, pd.component_count()).len()
        );
        println!(
            "  tb bound {}  mirror {}",
            tb_upper_bound(&pd)?,
            tb_upper_bound(&mirror(&pd))?
        );
    }
    Ok(())
}
