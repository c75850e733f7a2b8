//! Slices of the capping generating family as it grows an eye, and the
//! coordinate-map check.

use legcob::genfam::{
    front_slice, sample_points, symplecto_check, CoordinateMap, CutoffProfile, Grid,
};

fn main() -> anyhow::Result<()> {
    let profile = CutoffProfile::default();
    let grid = Grid::default();
    for s in [0.05, 0.3, 0.5, 0.7, 0.95] {
        let slice = front_slice(s, &profile, &grid)?;
        println!(
            "s {s:.2}  rho {:+.3}  points {:>3}  cusps {:?}{}",
            slice.rho,
            slice.points.len(),
            slice.cusp_ts,
            if slice.birth_moment { "  (birth)" } else { "" }
        );
    }
    let samples = sample_points(100, 0);
    for map in [CoordinateMap::Printed, CoordinateMap::Rescaled] {
        let r = symplecto_check(map, &samples, 1e-5)?;
        println!(
            "{map:?}: deviation {:.3e} with ordering {}",
            r.deviation, r.ordering
        );
    }
    Ok(())
}
