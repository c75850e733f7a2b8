//! Classical invariants and the planar diagram of a few standard fronts.

use legcob::{classical_invariants, parse_front, to_planar_diagram};

fn main() {
    for (name, word) in [
        ("unknot", "L1 R1"),
        ("unknot with a kink", "L1 L1 X2 R1 R1"),
        ("positive trefoil", "L1 L1 X2 X2 X2 R1 R1"),
        ("two-component link", "L1 L1 X2 X2 R1 R1"),
    ] {
        let front = match parse_front(word) {
            Ok(f) => f,
            Err(e) => {
                println!("{name}: {e}");
                continue;
            }
        };
        let inv = classical_invariants(&front);
        println!(
            "{name:<18} tb {:>3}  rot {:>2}  writhe {:>2}  cusps {}  components {}",
            inv.tb, inv.rot, inv.writhe, inv.cusps, inv.components
        );
    }
    let pd = to_planar_diagram(&parse_front("L1 L1 X2 X2 X2 R1 R1").unwrap());
    print!("\n{pd}");
}
