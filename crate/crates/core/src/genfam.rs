//! The capping generating family and a numeric check of the symplectisation
//! coordinate map.
//!
//! The family is `F(s, t, η) = s (η³/3 − (3/2)(ρ(s) − t²) η)`. Its fiberwise
//! critical points trace an eye front once the cutoff `ρ(s)` turns positive
//! and nothing before, which is the Birth move read bottom to top.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenfamError {
    #[error("s must be positive, got {0}")]
    Domain(f64),
    #[error("cutoff width must lie in (0, 1/2), got {0}")]
    InvalidDelta(f64),
    #[error("grid needs at least two points on a nonempty interval")]
    InvalidGrid,
    #[error("sample {index} has q1 = {q1} not above the step {h}")]
    DegenerateSample { index: usize, q1: f64, h: f64 },
}

/// Smooth nondecreasing cutoff equal to −1 on `(0, δ]` and 1 on `[1 − δ, ∞)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CutoffProfile {
    delta: f64,
}

impl Default for CutoffProfile {
    fn default() -> Self {
        Self { delta: 0.1 }
    }
}

fn flat_bump(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        (-1.0 / x).exp()
    }
}

impl CutoffProfile {
    pub fn new(delta: f64) -> Result<Self, GenfamError> {
        if !(delta > 0.0 && delta < 0.5) {
            return Err(GenfamError::InvalidDelta(delta));
        }
        Ok(Self { delta })
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn rho(&self, s: f64) -> f64 {
        let u = (s - self.delta) / (1.0 - 2.0 * self.delta);
        let (a, b) = (flat_bump(u), flat_bump(1.0 - u));
        -1.0 + 2.0 * a / (a + b)
    }
}

pub fn genfam_value(s: f64, t: f64, eta: f64, profile: &CutoffProfile) -> Result<f64, GenfamError> {
    if s.is_nan() || s <= 0.0 {
        return Err(GenfamError::Domain(s));
    }
    let rho = profile.rho(s);
    Ok(s * (eta.powi(3) / 3.0 - 1.5 * (rho - t * t) * eta))
}

/// Central difference of `F` in `η`.
pub fn d_eta_central(
    s: f64,
    t: f64,
    eta: f64,
    h: f64,
    profile: &CutoffProfile,
) -> Result<f64, GenfamError> {
    let hi = genfam_value(s, t, eta + h, profile)?;
    let lo = genfam_value(s, t, eta - h, profile)?;
    Ok((hi - lo) / (2.0 * h))
}

/// Uniform `t` grid.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Self {
            lo: -1.5,
            hi: 1.5,
            points: 201,
        }
    }
}

impl Grid {
    pub fn values(&self) -> Result<Vec<f64>, GenfamError> {
        if self.points < 2 || self.hi.is_nan() || self.lo.is_nan() || self.hi <= self.lo {
            return Err(GenfamError::InvalidGrid);
        }
        let step = (self.hi - self.lo) / (self.points - 1) as f64;
        Ok((0..self.points)
            .map(|i| self.lo + step * i as f64)
            .collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// Positive critical `η`, lower in `z`.
    Plus,
    Minus,
}

impl Branch {
    pub fn symbol(self) -> char {
        match self {
            Branch::Plus => '+',
            Branch::Minus => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SlicePoint {
    pub t: f64,
    pub eta: f64,
    pub z: f64,
    pub branch: Branch,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FrontSlice {
    pub s: f64,
    pub rho: f64,
    pub points: Vec<SlicePoint>,
    pub cusp_ts: Vec<f64>,
    /// Set when `ρ(s)` is exactly zero: the eye is a single degenerate point
    /// and the slice is reported empty.
    pub birth_moment: bool,
}

impl FrontSlice {
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `t,z,branch` rows, `+` branch first at each `t`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,z,branch\n");
        for p in &self.points {
            writeln!(out, "{},{},{}", p.t, p.z, p.branch.symbol()).unwrap();
        }
        out
    }
}

/// Fiberwise critical points `η = ±√((3/2)(ρ − t²))` and their critical
/// values over the grid, for `t² < ρ(s)`.
pub fn front_slice(
    s: f64,
    profile: &CutoffProfile,
    grid: &Grid,
) -> Result<FrontSlice, GenfamError> {
    if s.is_nan() || s <= 0.0 {
        return Err(GenfamError::Domain(s));
    }
    let ts = grid.values()?;
    let rho = profile.rho(s);
    let mut points = Vec::new();
    for &t in &ts {
        let gap = rho - t * t;
        if gap <= 0.0 {
            continue;
        }
        let root = (1.5 * gap).sqrt();
        for (branch, eta) in [(Branch::Plus, root), (Branch::Minus, -root)] {
            points.push(SlicePoint {
                t,
                eta,
                z: -2.0 / 3.0 * s * eta.powi(3),
                branch,
            });
        }
    }
    let cusp_ts = if rho > 0.0 {
        vec![-rho.sqrt(), rho.sqrt()]
    } else {
        Vec::new()
    };
    Ok(FrontSlice {
        s,
        rho,
        points,
        cusp_ts,
        birth_moment: rho == 0.0,
    })
}

/// Candidate coordinate maps `(q1, p1, q2, p2) ↦` a 4-tuple whose slots are
/// then matched to `(x, y, z, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoordinateMap {
    /// `(q2, q1 p2, ln q1, p1)`.
    Printed,
    /// `(q2, p2 / q1, ln q1, p1)`.
    Rescaled,
}

impl CoordinateMap {
    pub fn apply(self, [q1, p1, q2, p2]: [f64; 4]) -> [f64; 4] {
        match self {
            CoordinateMap::Printed => [q2, q1 * p2, q1.ln(), p1],
            CoordinateMap::Rescaled => [q2, p2 / q1, q1.ln(), p1],
        }
    }
}

const ROLES: [char; 4] = ['x', 'y', 'z', 't'];

fn permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    p.iter().for_each(|&i| seen[i] = true);
                    if seen.iter().all(|&x| x) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Deviation of `map` from symplectic at one ordering and sample.
/// `roles[i]` is the index into `(x, y, z, t)` taken by slot `i`.
fn sample_deviation(map: CoordinateMap, roles: [usize; 4], at: [f64; 4], h: f64) -> f64 {
    // jac[r][j] = d(role r) / d(source j)
    let mut jac = [[0.0; 4]; 4];
    for j in 0..4 {
        let mut hi = at;
        let mut lo = at;
        hi[j] += h;
        lo[j] -= h;
        let (fh, fl) = (map.apply(hi), map.apply(lo));
        for slot in 0..4 {
            jac[roles[slot]][j] = (fh[slot] - fl[slot]) / (2.0 * h);
        }
    }
    let mut target = [0.0; 4];
    let image = map.apply(at);
    for slot in 0..4 {
        target[roles[slot]] = image[slot];
    }
    let (y, t) = (target[1], target[3]);
    let et = t.exp();
    // d(e^t (dz − y dx)) in (x, y, z, t)
    let mut w = [[0.0; 4]; 4];
    let mut put = |a: usize, b: usize, v: f64| {
        w[a][b] += v;
        w[b][a] -= v;
    };
    put(3, 2, et);
    put(3, 0, -et * y);
    put(0, 1, et);
    let mut canonical = [[0.0; 4]; 4];
    canonical[0][1] = 1.0;
    canonical[1][0] = -1.0;
    canonical[2][3] = 1.0;
    canonical[3][2] = -1.0;
    let mut worst: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            let mut pulled = 0.0;
            for a in 0..4 {
                for b in 0..4 {
                    pulled += jac[a][i] * w[a][b] * jac[b][j];
                }
            }
            worst = worst.max((pulled - canonical[i][j]).abs());
        }
    }
    worst
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymplectoReport {
    /// Minimum over orderings of the maximum entry deviation.
    pub deviation: f64,
    /// Role of each target slot, e.g. `"x y t z"`.
    pub ordering: String,
}

/// Compares the pullback of `d(e^t (dz − y dx))` with `dq1∧dp1 + dq2∧dp2`
/// using central-difference Jacobians, under every assignment of target
/// slots to `(x, y, z, t)`.
pub fn symplecto_check(
    map: CoordinateMap,
    samples: &[[f64; 4]],
    h: f64,
) -> Result<SymplectoReport, GenfamError> {
    for (index, s) in samples.iter().enumerate() {
        if s[0] <= h {
            return Err(GenfamError::DegenerateSample { index, q1: s[0], h });
        }
    }
    let mut best: Option<(f64, [usize; 4])> = None;
    for roles in permutations() {
        let dev = samples
            .iter()
            .map(|&s| sample_deviation(map, roles, s, h))
            .fold(0.0, f64::max);
        if best.is_none_or(|(b, _)| dev < b) {
            best = Some((dev, roles));
        }
    }
    let (deviation, roles) = best.expect("24 orderings");
    let ordering = roles
        .iter()
        .map(|&r| ROLES[r].to_string())
        .collect::<Vec<_>>()
        .join(" ");
    Ok(SymplectoReport {
        deviation,
        ordering,
    })
}

/// Uniform samples in `[0.5, 2]⁴`.
pub fn sample_points(n: usize, seed: u64) -> Vec<[f64; 4]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| std::array::from_fn(|_| rng.gen_range(0.5..2.0)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cutoff_boundary_values() {
        let p = CutoffProfile::default();
        for s in [0.01, 0.05, 0.1] {
            assert_eq!(p.rho(s), -1.0);
        }
        for s in [0.9, 1.0, 5.0] {
            assert_eq!(p.rho(s), 1.0);
        }
        assert!((p.rho(0.5)).abs() < 1e-12);
        let mut last = -1.0;
        for i in 0..=1000 {
            let r = p.rho(i as f64 / 1000.0 + 1e-9);
            assert!(r >= last);
            last = r;
        }
        assert!(CutoffProfile::new(0.5).is_err());
    }

    #[test]
    fn odd_in_eta() {
        let p = CutoffProfile::default();
        assert_eq!(genfam_value(0.7, 0.3, 0.0, &p).unwrap(), 0.0);
        let a = genfam_value(0.7, 0.3, 0.4, &p).unwrap();
        let b = genfam_value(0.7, 0.3, -0.4, &p).unwrap();
        assert_eq!(a, -b);
        assert!(genfam_value(0.0, 0.0, 1.0, &p).is_err());
    }

    #[test]
    fn slices_before_and_after_birth() {
        let p = CutoffProfile::default();
        let g = Grid::default();
        assert!(front_slice(0.05, &p, &g).unwrap().is_empty());
        let born = front_slice(0.5, &p, &g).unwrap();
        assert!(born.birth_moment && born.is_empty());
        let eye = front_slice(0.95, &p, &g).unwrap();
        assert_eq!(eye.cusp_ts, vec![-1.0, 1.0]);
        assert!(eye.points.iter().all(|q| q.t.abs() < 1.0));
        for pair in eye.points.chunks(2) {
            assert_eq!(pair[0].z, -pair[1].z);
            let d = d_eta_central(0.95, pair[0].t, pair[0].eta, 1e-5, &p).unwrap();
            assert!(d.abs() < 1e-9);
        }
        assert!(eye.to_csv().starts_with("t,z,branch\n"));
    }

    #[test]
    fn rescaled_map_is_symplectic() {
        let samples = sample_points(20, 3);
        let r = symplecto_check(CoordinateMap::Rescaled, &samples, 1e-4).unwrap();
        assert!(r.deviation < 1e-6, "{r:?}");
        assert_eq!(r.ordering, "x y t z");
        let p = symplecto_check(CoordinateMap::Printed, &samples, 1e-4).unwrap();
        assert!(p.deviation > 0.1);
        assert!(matches!(
            symplecto_check(CoordinateMap::Rescaled, &[[1e-6, 1.0, 1.0, 1.0]], 1e-5),
            Err(GenfamError::DegenerateSample { index: 0, .. })
        ));
    }
}
