//! Seeded random decomposable fillings, checked against the filling rules.

use legcob::moves::Genus;
use legcob::obstruct::{FillingClaim, SmoothType};
use legcob::random::{random_filling, FillingParams};
use legcob::{check_filling, verify_script};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> anyhow::Result<()> {
    let seed = std::env::args().nth(1).map_or(Ok(7), |s| s.parse())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut shown = false;
    for i in 0..10 {
        let script = random_filling(&mut rng, FillingParams::default());
        let r = verify_script(&script)?;
        let Genus::Integer(g) = r.genus else {
            println!("{i}: not a surface");
            continue;
        };
        let verdict = check_filling(&FillingClaim {
            tb: r.tb_top,
            rot: r.rot_top,
            genus: g as u32,
            smooth: SmoothType::default(),
        });
        println!(
            "{i}: {} steps  top {}  tb {}  genus {g}  {}",
            script.steps.len(),
            r.top,
            r.tb_top,
            verdict.status
        );
        if g > 0 && !shown {
            print!("{script}");
            shown = true;
        }
    }
    Ok(())
}
