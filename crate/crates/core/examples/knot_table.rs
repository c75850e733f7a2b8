//! Load the bundled knot table and recheck every record.

use legcob::knot_table::KnotTable;
use legcob::polys::EngineConfig;

fn main() -> anyhow::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/knots.txt");
    let table = KnotTable::load(path)?;
    let cfg = EngineConfig::default();
    for r in &table.records {
        let status = match r.validate(&cfg) {
            Ok(()) => "ok".to_string(),
            Err(e) => e.to_string(),
        };
        println!(
            "{:<5} {:>2} crossings  {status}",
            r.name,
            r.pd.crossing_count()
        );
    }
    Ok(())
}
