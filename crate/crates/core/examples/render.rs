//! ASCII to the terminal and SVG to a file.
//!
//! ```text
//! cargo run --example render -- "L1 L1 X2 X2 X2 R1 R1" trefoil.svg
//! ```

use legcob::parse_front;
use legcob::render::{render_front, RenderFormat, RenderSpec};

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1);
    let word = args.next().unwrap_or_else(|| "L1 L1 X2 X2 X2 R1 R1".into());
    let front = parse_front(&word)?;
    let ascii = RenderSpec::new(RenderFormat::Ascii, 1, 1, true)?;
    print!("{}", render_front(&front, &ascii));
    if let Some(path) = args.next() {
        std::fs::write(&path, render_front(&front, &RenderSpec::default()))?;
        println!("wrote {path}");
    }
    Ok(())
}
