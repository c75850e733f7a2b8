//! The three kinds of verdicts: a filling claim, a collar scenario and the
//! quasi-positive disk certificate.

use legcob::obstruct::{CollarScenario, FillingClaim, SmoothType};
use legcob::{certify_disk_slice, check_filling, collar_obstruction, QPFactorization};

fn main() -> anyhow::Result<()> {
    let genus_one_claim = FillingClaim {
        tb: 1,
        rot: 0,
        genus: 1,
        smooth: SmoothType {
            slice_genus: Some(0),
            tb_upper_bound: None,
        },
    };
    let v = check_filling(&genus_one_claim);
    println!("filling g=1 over a slice knot: {}", v.status);
    for r in &v.reasons {
        println!("  {r}");
    }

    let v = collar_obstruction(&CollarScenario::new(1, Some(0), None)?);
    println!("collar, convex genus 1 / concave genus 0: {}", v.status);
    for r in &v.reasons {
        println!("  {r}");
    }

    let q = QPFactorization::parse("B3\nW -1 -1 -1 ; I 2\nW ; I 2\n")?;
    let cert = certify_disk_slice(&q)?;
    println!("\nqp disk certificate");
    for (k, v) in cert.report() {
        println!("  {k} {v}");
    }
    Ok(())
}
