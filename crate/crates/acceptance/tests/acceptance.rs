//! End-to-end acceptance run: one PASS/FAIL line per criterion, non-zero
//! exit if any criterion fails. Tolerances and time limits are the constants
//! below.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use legcob::braid::{braid_closure_pd, closure_components, expand, surface_data};
use legcob::front::classical_invariants;
use legcob::genfam::{
    d_eta_central, front_slice, sample_points, symplecto_check, CoordinateMap, CutoffProfile, Grid,
};
use legcob::knot_table::KnotTable;
use legcob::moves::{
    apply_move, enumerate_moves, saddle_is_coherent, verify_script, Genus, MoveKind,
};
use legcob::obstruct::{
    certify_disk_slice, check_filling, collar_obstruction, CollarScenario, FillingClaim, Rule,
    SmoothType, VerdictStatus,
};
use legcob::pd::{mirror, PlanarDiagram};
use legcob::polys::{jones, jones_with, kauffman_poly_with, tb_upper_bound, EngineConfig};
use legcob::random::{random_filling, random_front, FillingParams};
use legcob::QPFactorization;
use legcob::{parse_front, to_planar_diagram, CobordismScript, FrontDiagram, MoveSite};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const QP: &str = "B3\nW -1 -1 -1 ; I 2\nW ; I 2\n";

const FILLINGS: usize = 100;
const MOVE_FRONTS: usize = 200;
const MOVE_MAX_EVENTS: usize = 30;
const BOUND_FRONTS: usize = 100;
const BOUND_MAX_EVENTS: usize = 25;
const DERIVATIVE_STEP: f64 = 1e-5;
const DERIVATIVE_TOL: f64 = 1e-9;
const VALUE_TOL: f64 = 1e-12;
const SYMP_SAMPLES: usize = 100;
const SYMP_STEP: f64 = 1e-5;
const SYMP_TOL: f64 = 1e-6;
const SYMP_RATIO: (f64, f64) = (3.0, 5.0);
const THREADS: usize = 4;

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn qp() -> QPFactorization {
    QPFactorization::parse(QP).unwrap()
}

fn table() -> KnotTable {
    let path: PathBuf = [
        env!("CARGO_MANIFEST_DIR"),
        "..",
        "..",
        "fixtures",
        "knots.txt",
    ]
    .iter()
    .collect();
    KnotTable::load(path).unwrap()
}

/// Outcome of one criterion: whether it held and a one-line summary.
type Check = (bool, String);

type Criterion = (&'static str, fn() -> Check, Duration);

fn c1() -> Check {
    let q = qp();
    let s = surface_data(&q);
    let c = closure_components(&expand(&q));
    let perm: Vec<usize> = c.permutation.iter().map(|p| p + 1).collect();
    let ok = s.n == 3 && s.k == 2 && s.chi == 1 && c.is_knot && c.component_count == 1 && s.is_disk;
    (
        ok,
        format!(
            "n {} k {} chi {} permutation {perm:?} is_disk {}",
            s.n, s.k, s.chi, s.is_disk
        ),
    )
}

fn c2() -> Check {
    let t = table();
    let cfg = EngineConfig::default();
    if let Some(bad) = t.records.iter().find_map(|r| r.validate(&cfg).err()) {
        return (false, format!("table record failed validation: {bad}"));
    }
    let closure = braid_closure_pd(&expand(&qp()));
    let reference = mirror(&t.get("8_20").unwrap().pd);
    let (a, b) = (jones(&closure).unwrap(), jones(&reference).unwrap());
    (
        a == b,
        format!(
            "closure Jones {} mirror 8_20 Jones",
            if a == b { "equals" } else { "differs from" }
        ),
    )
}

fn c3() -> Check {
    let b = tb_upper_bound(&braid_closure_pd(&expand(&qp()))).unwrap();
    (b == -2, format!("tb bound {b}"))
}

fn c4() -> Check {
    let cert = certify_disk_slice(&qp()).unwrap();
    let want = "tb bound −2 < −1 = 2·0−1";
    let ok = cert.verdict.status == VerdictStatus::NonCollarable
        && cert.verdict.reasons.iter().any(|r| r.message == want);
    let reasons: Vec<&str> = cert
        .verdict
        .reasons
        .iter()
        .map(|r| r.message.as_str())
        .collect();
    (ok, format!("{} {reasons:?}", cert.verdict.status))
}

fn c5() -> Check {
    let v = collar_obstruction(&CollarScenario::new(1, Some(0), None).unwrap());
    let ok = v.status == VerdictStatus::NonCollarable && v.has_rule(Rule::FourBallGenusMismatch);
    let reasons: Vec<&str> = v.reasons.iter().map(|r| r.message.as_str()).collect();
    (ok, format!("{} {reasons:?}", v.status))
}

fn c6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut genus_one = 0;
    for i in 0..FILLINGS {
        let script = random_filling(&mut rng, FillingParams::default());
        let r = verify_script(&script).unwrap();
        let Genus::Integer(g) = r.genus else {
            return (false, format!("filling {i} is not a surface"));
        };
        let verdict = check_filling(&FillingClaim {
            tb: r.tb_top,
            rot: r.rot_top,
            genus: g as u32,
            smooth: SmoothType::default(),
        });
        if !r.ok || r.components_top != 1 || r.tb_top != -r.chi || 2 * g != 1 - r.chi {
            return (
                false,
                format!("filling {i}: tb {} chi {} genus {g}", r.tb_top, r.chi),
            );
        }
        if !verdict.is_consistent() {
            return (false, format!("filling {i}: {:?}", verdict.reasons));
        }
        genus_one += usize::from(g > 0);
    }
    (
        true,
        format!("{FILLINGS} fillings consistent, {genus_one} of positive genus"),
    )
}

fn c7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut moves, mut saddles, mut incoherent, mut births) = (0, 0, 0, 0);
    for _ in 0..MOVE_FRONTS {
        let d = random_front(&mut rng, MOVE_MAX_EVENTS);
        let inv = classical_invariants(&d);
        let j = jones(&to_planar_diagram(&d)).unwrap();
        for site in enumerate_moves(&d) {
            let next = apply_move(&d, site).unwrap();
            let after = classical_invariants(&next);
            if site.kind.is_reidemeister() {
                moves += 1;
                let same = after.tb == inv.tb
                    && after.rot == inv.rot
                    && after.components == inv.components
                    && jones(&to_planar_diagram(&next)).unwrap() == j;
                if !same {
                    return (false, format!("{site} changes invariants of {d}"));
                }
            }
            if site.kind == MoveKind::SaddleUp {
                // an incoherent saddle is a Möbius band: no orientation to compare under
                if !saddle_is_coherent(&d, site.index) {
                    incoherent += 1;
                    continue;
                }
                saddles += 1;
                if after.components.abs_diff(inv.components) != 1 {
                    return (false, format!("{site} on {d}: components unchanged"));
                }
                if after.tb != inv.tb + 1 {
                    return (
                        false,
                        format!("{site} on {d}: tb {} -> {}", inv.tb, after.tb),
                    );
                }
            }
        }
        let birth = MoveSite::new(MoveKind::Birth, d.len(), 1);
        let after = classical_invariants(&apply_move(&d, birth).unwrap());
        births += 1;
        if after.tb != inv.tb - 1 {
            return (
                false,
                format!("Birth on {d}: tb {} -> {}", inv.tb, after.tb),
            );
        }
    }
    (
        true,
        format!(
            "{MOVE_FRONTS} fronts, {moves} R-moves, {saddles} coherent saddles \
             ({incoherent} incoherent skipped), {births} births"
        ),
    )
}

fn c8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut slack = 0;
    for _ in 0..BOUND_FRONTS {
        let d = random_front(&mut rng, BOUND_MAX_EVENTS);
        let tb = classical_invariants(&d).tb;
        let bound = tb_upper_bound(&to_planar_diagram(&d)).unwrap();
        if tb > bound {
            return (false, format!("{d}: tb {tb} above bound {bound}"));
        }
        slack += bound - tb;
    }
    (true, format!("{BOUND_FRONTS} fronts, total slack {slack}"))
}

fn c9() -> Check {
    let eye = classical_invariants(&parse_front("L1 R1").unwrap());
    let bound = tb_upper_bound(&PlanarDiagram::unlink(1)).unwrap();
    let script = CobordismScript::new(
        FrontDiagram::empty(),
        vec![MoveSite::new(MoveKind::Birth, 0, 1)],
    );
    let r = verify_script(&script).unwrap();
    let ok = eye.tb == -1 && eye.rot == 0 && bound == -1 && r.ok && r.chi == 1;
    (
        ok,
        format!(
            "eye tb {} rot {}, unknot bound {bound}, birth chi {}",
            eye.tb, eye.rot, r.chi
        ),
    )
}

fn c10() -> Check {
    let profile = CutoffProfile::default();
    let grid = Grid::default();
    let empty = front_slice(0.05, &profile, &grid).unwrap();
    let full = front_slice(0.95, &profile, &grid).unwrap();
    if empty.rho != -1.0 || !empty.is_empty() {
        return (
            false,
            format!("rho {} slice with {} points", empty.rho, empty.points.len()),
        );
    }
    if full.rho != 1.0 || full.cusp_ts != vec![-1.0, 1.0] || full.is_empty() {
        return (false, format!("rho {} cusps {:?}", full.rho, full.cusp_ts));
    }
    let (mut worst_d, mut worst_z) = (0.0f64, 0.0f64);
    for s in [0.5 + 1e-3, 0.7, 0.95] {
        for p in front_slice(s, &profile, &grid).unwrap().points {
            let d = d_eta_central(s, p.t, p.eta, DERIVATIVE_STEP, &profile).unwrap();
            worst_d = worst_d.max(d.abs());
            worst_z = worst_z.max((p.z + 2.0 / 3.0 * s * p.eta.powi(3)).abs());
        }
    }
    (
        worst_d < DERIVATIVE_TOL && worst_z < VALUE_TOL,
        format!("max |dF/deta| {worst_d:.2e}, max z error {worst_z:.2e}"),
    )
}

fn c11() -> Check {
    let samples = sample_points(SYMP_SAMPLES, 11);
    let full = symplecto_check(CoordinateMap::Printed, &samples, SYMP_STEP).unwrap();
    let half = symplecto_check(CoordinateMap::Printed, &samples, SYMP_STEP / 2.0).unwrap();
    let ratio = full.deviation / half.deviation;
    let ok = full.deviation < SYMP_TOL && (SYMP_RATIO.0..=SYMP_RATIO.1).contains(&ratio);
    let rescaled = symplecto_check(CoordinateMap::Rescaled, &samples, SYMP_STEP).unwrap();
    (
        ok,
        format!(
            "printed map deviation {:.3e} (ordering {}), halved-step ratio {ratio:.3}; \
             rescaled map deviation {:.3e} (ordering {})",
            full.deviation, full.ordering, rescaled.deviation, rescaled.ordering
        ),
    )
}

fn c12() -> Check {
    let one = EngineConfig::default();
    let many = EngineConfig {
        threads: THREADS,
        ..one
    };
    let mut diagrams: Vec<PlanarDiagram> = table().records.into_iter().map(|r| r.pd).collect();
    diagrams.push(braid_closure_pd(&expand(&qp())));
    for pd in &diagrams {
        let same = jones_with(pd, &one).unwrap() == jones_with(pd, &many).unwrap()
            && kauffman_poly_with(pd, &one).unwrap() == kauffman_poly_with(pd, &many).unwrap();
        if !same {
            return (false, format!("outputs differ on\n{pd}"));
        }
    }
    (
        true,
        format!(
            "{} diagrams identical at 1 and {THREADS} threads",
            diagrams.len()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("disk surface data", c1, secs(1)),
        ("closure is mirror 8_20", c2, secs(5)),
        ("maximal tb bound", c3, secs(5)),
        ("disk certificate", c4, secs(5)),
        ("collar genus mismatch", c5, secs(1)),
        ("random fillings", c6, secs(30)),
        ("move invariance", c7, secs(60)),
        ("bound soundness", c8, secs(120)),
        ("unknot baselines", c9, secs(1)),
        ("generating family slices", c10, secs(1)),
        ("symplectic coordinates", c11, secs(1)),
        ("thread determinism", c12, Duration::MAX),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = check();
        let took = start.elapsed();
        let in_time = took <= *limit;
        let pass = ok && in_time;
        failed += usize::from(!pass);
        let timing = if in_time {
            String::new()
        } else {
            format!(" [over the {:?} limit]", limit)
        };
        println!(
            "{} {:>2} {name}: {detail} ({:.2?}){timing}",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            took
        );
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
