//! The `legcob` command line.
//!
//! Exit status: 0 on success or a consistent verdict, 1 on a violation,
//! non-collarable verdict or failed check, 2 on usage, input or engine
//! errors. Reports are `key value` lines in a fixed order.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::braid::{
    braid_closure_pd, closure_components, expand, self_linking, surface_data, BraidWord,
    QPFactorization,
};
use crate::front::{classical_invariants, parse_front, to_planar_diagram, FrontDiagram};
use crate::genfam::{
    front_slice, sample_points, symplecto_check, CoordinateMap, CutoffProfile, Grid,
};
use crate::knot_table::KnotTable;
use crate::laurent::{LaurentPoly1, LaurentPoly2};
use crate::moves::{
    apply_move_with, enumerate_moves_with, search_cobordism, verify_script_with, CobordismScript,
    MoveKind, MovePolicy, MoveSite, SearchBudget, SearchStatus,
};
use crate::obstruct::{
    certify_disk_slice_with, check_filling, collar_obstruction, CollarScenario, FillingClaim,
    SmoothType, Verdict, VerdictStatus,
};
use crate::pd::{mirror, PlanarDiagram};
use crate::polys::{
    jones_with, kauffman_poly_with, tb_upper_bound_with, to_table_convention, EngineConfig,
    DEFAULT_CROSSING_CAP,
};
use crate::render::{render_front, RenderFormat, RenderSpec};

#[derive(Parser, Debug)]
#[command(
    name = "legcob",
    version,
    about = "Legendrian fronts, decomposable cobordisms, skein polynomials and non-collarability certificates"
)]
struct Cli {
    /// Largest diagram the polynomial engines accept.
    #[arg(long, global = true, default_value_t = DEFAULT_CROSSING_CAP)]
    crossing_cap: usize,
    /// Worker threads for the polynomial engines.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Directory holding the bundled data files (knots.txt).
    #[arg(long, global = true, default_value = "fixtures")]
    fixtures: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// [front] Thurston–Bennequin number of a front word.
    Tb { front: String },
    /// [front] tb, rot, writhe, cusp count and component count of a front word.
    Invariants { front: String },
    /// [front] Planar diagram of a front, descending strand over.
    Pd { front: String },
    /// [render] Draw a front as SVG or ASCII.
    Render(RenderArgs),
    /// [moves] List or apply elementary moves on a front.
    #[command(subcommand)]
    Moves(MovesCmd),
    /// [moves] Verify or search for cobordism scripts.
    #[command(subcommand)]
    Cobordism(CobordismCmd),
    /// [braid] Quasi-positive factorizations and braid closures.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// [polys] Jones polynomial, Kauffman polynomial and the tb bound of a PD file.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// [obstruct] Filling consistency and non-collarability certificates.
    #[command(subcommand)]
    Obstruct(ObstructCmd),
    /// [genfam] Capping generating family slices and the coordinate-map check.
    #[command(subcommand)]
    Genfam(GenfamCmd),
    /// [knot table] Inspect and validate the bundled reference knots.
    #[command(subcommand)]
    Table(TableCmd),
}

#[derive(Args, Debug)]
struct RenderArgs {
    front: String,
    #[arg(long, value_enum, default_value_t = Format::Svg)]
    format: Format,
    #[arg(long, default_value_t = 640)]
    width: u32,
    #[arg(long, default_value_t = 240)]
    height: u32,
    /// Mark the direction of travel on every strand.
    #[arg(long)]
    orientations: bool,
    /// Write to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Svg,
    Ascii,
}

#[derive(Subcommand, Debug)]
enum MovesCmd {
    /// [moves] Every applicable site as `kind index variant`.
    List {
        front: String,
        /// Admit caps (non-exact, bookkeeping disabled).
        #[arg(long)]
        allow_caps: bool,
    },
    /// [moves] Apply one move and print the resulting front.
    Apply {
        front: String,
        kind: String,
        index: usize,
        #[arg(default_value_t = 0)]
        variant: u32,
        #[arg(long)]
        allow_caps: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CobordismCmd {
    /// [moves] Replay a script file and check Euler characteristic and tb bookkeeping.
    Verify {
        script: PathBuf,
        #[arg(long)]
        allow_caps: bool,
    },
    /// [moves] Breadth-first search for a script between two fronts.
    Search {
        from: String,
        to: String,
        #[arg(long, default_value_t = 4)]
        max_depth: usize,
        #[arg(long, default_value_t = 200_000)]
        max_states: usize,
        #[arg(long, default_value_t = 16)]
        max_events: usize,
    },
}

#[derive(Subcommand, Debug)]
enum BraidCmd {
    /// [braid] Expand a quasi-positive factorization into a braid word file.
    Expand { qp: PathBuf },
    /// [braid] Branched-cover surface data of a factorization.
    Surface { qp: PathBuf },
    /// [braid] Planar diagram of the closure of a braid word file.
    ClosurePd { braid: PathBuf },
}

#[derive(Subcommand, Debug)]
enum PolyCmd {
    /// [polys] Jones polynomial as `exponent:coefficient` lines in A (t = A^-4).
    Jones {
        pd: PathBuf,
        /// Report in the variable t instead.
        #[arg(long)]
        t: bool,
    },
    /// [polys] Kauffman polynomial F as `a-exp z-exp coeff` lines.
    Kauffman {
        pd: PathBuf,
        /// Use the usual knot-table normalization.
        #[arg(long)]
        table: bool,
    },
    /// [polys] Upper bound on tb from the a-degree of F.
    TbBound { pd: PathBuf },
}

#[derive(Subcommand, Debug)]
enum ObstructCmd {
    /// [obstruct] Check rot = 0, tb = 2g-1, g = g_s and tb = TB for a claimed filling.
    Filling {
        #[arg(long, allow_hyphen_values = true)]
        tb: i64,
        #[arg(long, allow_hyphen_values = true)]
        rot: i64,
        #[arg(long)]
        genus: u32,
        /// 4-ball genus of the smooth type.
        #[arg(long)]
        gs: Option<u32>,
        /// Maximal tb of the smooth type.
        #[arg(long, allow_hyphen_values = true)]
        tbmax: Option<i64>,
    },
    /// [obstruct] Test whether a slice could be collared.
    Collar {
        /// Genus the convex-side filling would have if the slice were collarable.
        #[arg(long)]
        genus: u32,
        /// 4-ball genus forced by the concave side.
        #[arg(long)]
        concave_genus: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        tb_bound: Option<i64>,
    },
    /// [obstruct] Disk certificate for a quasi-positive factorization with k = n-1.
    QpDisk { qp: PathBuf },
}

#[derive(Subcommand, Debug)]
enum GenfamCmd {
    /// [genfam] Critical points of the capping family at one value of s.
    Slice {
        #[arg(long)]
        s: f64,
        #[arg(long, default_value_t = 0.1)]
        delta: f64,
        #[arg(long, default_value_t = 201)]
        points: usize,
        /// Write `t,z,branch` rows here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// [genfam] Finite-difference check that the coordinate map is symplectic.
    Sympcheck {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1e-5)]
        h: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = MapArg::Printed)]
        map: MapArg,
        /// Largest deviation that counts as a pass.
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MapArg {
    Printed,
    Rescaled,
}

#[derive(Subcommand, Debug)]
enum TableCmd {
    /// [knot table] Names and sources of the bundled knots.
    List,
    /// [knot table] Recompute every stored polynomial and compare.
    Check,
    /// [knot table] PD file of a bundled knot.
    Pd {
        name: String,
        #[arg(long)]
        mirror: bool,
    },
}

/// Failure with an exit status and message.
struct Fail(i32, String);

type Outcome = Result<i32, Fail>;

fn usage(e: impl std::fmt::Display) -> Fail {
    Fail(2, e.to_string())
}

fn read(path: &Path) -> Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn front(word: &str) -> Result<FrontDiagram, Fail> {
    parse_front(word).map_err(usage)
}

fn load_pd(path: &Path) -> Result<PlanarDiagram, Fail> {
    PlanarDiagram::parse(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_qp(path: &Path) -> Result<QPFactorization, Fail> {
    QPFactorization::parse(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_poly1(out: &mut dyn Write, p: &LaurentPoly1) -> std::io::Result<()> {
    for (e, c) in p.terms() {
        writeln!(out, "{e}:{c}")?;
    }
    Ok(())
}

fn write_poly2(out: &mut dyn Write, p: &LaurentPoly2) -> std::io::Result<()> {
    for ((a, z), c) in p.terms() {
        writeln!(out, "{a} {z} {c}")?;
    }
    Ok(())
}

fn write_verdict(out: &mut dyn Write, v: &Verdict) -> std::io::Result<i32> {
    writeln!(out, "status {}", v.status)?;
    for r in &v.reasons {
        writeln!(out, "reason {}", r.message)?;
    }
    Ok(match v.status {
        VerdictStatus::Consistent => 0,
        VerdictStatus::Violation | VerdictStatus::NonCollarable => 1,
    })
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let cfg = EngineConfig {
        crossing_cap: cli.crossing_cap,
        threads: cli.threads.max(1),
    };
    let io = |e: std::io::Error| usage(e);
    match &cli.command {
        Command::Tb { front: w } => {
            writeln!(out, "tb {}", classical_invariants(&front(w)?).tb).map_err(io)?;
            Ok(0)
        }
        Command::Invariants { front: w } => {
            let inv = classical_invariants(&front(w)?);
            writeln!(
                out,
                "tb {}\nrot {}\nwrithe {}\ncusps {}\ncomponents {}",
                inv.tb, inv.rot, inv.writhe, inv.cusps, inv.components
            )
            .map_err(io)?;
            Ok(0)
        }
        Command::Pd { front: w } => {
            write!(out, "{}", to_planar_diagram(&front(w)?)).map_err(io)?;
            Ok(0)
        }
        Command::Render(r) => {
            let format = match r.format {
                Format::Svg => RenderFormat::Svg,
                Format::Ascii => RenderFormat::Ascii,
            };
            let spec = RenderSpec::new(format, r.width, r.height, r.orientations).map_err(usage)?;
            let doc = render_front(&front(&r.front)?, &spec);
            match &r.out {
                Some(path) => std::fs::write(path, doc).map_err(io)?,
                None => write!(out, "{doc}").map_err(io)?,
            }
            Ok(0)
        }
        Command::Moves(cmd) => moves(cmd, out),
        Command::Cobordism(cmd) => cobordism(cmd, out),
        Command::Braid(cmd) => braid(cmd, out),
        Command::Poly(cmd) => poly(cmd, &cfg, out),
        Command::Obstruct(cmd) => obstruct(cmd, &cfg, out),
        Command::Genfam(cmd) => genfam(cmd, out),
        Command::Table(cmd) => table(cmd, &cli.fixtures, &cfg, out),
    }
}

fn moves(cmd: &MovesCmd, out: &mut dyn Write) -> Outcome {
    let io = |e: std::io::Error| usage(e);
    match cmd {
        MovesCmd::List {
            front: w,
            allow_caps,
        } => {
            let policy = MovePolicy {
                allow_caps: *allow_caps,
            };
            for s in enumerate_moves_with(&front(w)?, policy) {
                writeln!(out, "{s}").map_err(io)?;
            }
            Ok(0)
        }
        MovesCmd::Apply {
            front: w,
            kind,
            index,
            variant,
            allow_caps,
        } => {
            let kind: MoveKind = kind.parse().map_err(usage)?;
            let policy = MovePolicy {
                allow_caps: *allow_caps,
            };
            let next = apply_move_with(&front(w)?, MoveSite::new(kind, *index, *variant), policy)
                .map_err(usage)?;
            writeln!(out, "{next}").map_err(io)?;
            Ok(0)
        }
    }
}

fn cobordism(cmd: &CobordismCmd, out: &mut dyn Write) -> Outcome {
    let io = |e: std::io::Error| usage(e);
    match cmd {
        CobordismCmd::Verify { script, allow_caps } => {
            let text = read(script)?;
            let s = CobordismScript::parse(&text).map_err(usage)?;
            let policy = MovePolicy {
                allow_caps: *allow_caps,
            };
            let r = verify_script_with(&s, policy).map_err(usage)?;
            writeln!(out, "top {}", r.top).map_err(io)?;
            for (k, v) in [
                ("chi", r.chi.to_string()),
                ("births", r.births.to_string()),
                ("saddles", r.saddles.to_string()),
                ("caps", r.caps.to_string()),
                ("tb_bottom", r.tb_bottom.to_string()),
                ("tb_top", r.tb_top.to_string()),
                ("rot_bottom", r.rot_bottom.to_string()),
                ("rot_top", r.rot_top.to_string()),
                ("components_bottom", r.components_bottom.to_string()),
                ("components_top", r.components_top.to_string()),
                ("genus", r.genus.to_string()),
                ("ok", r.ok.to_string()),
            ] {
                writeln!(out, "{k} {v}").map_err(io)?;
            }
            for d in &r.diagnostics {
                writeln!(out, "diagnostic {d}").map_err(io)?;
            }
            Ok(if r.ok { 0 } else { 1 })
        }
        CobordismCmd::Search {
            from,
            to,
            max_depth,
            max_states,
            max_events,
        } => {
            let budget = SearchBudget {
                max_depth: *max_depth,
                max_states: *max_states,
                max_events: *max_events,
            };
            let o = search_cobordism(&front(from)?, &front(to)?, budget);
            let status = match o.status {
                SearchStatus::Found => "found",
                SearchStatus::NotFoundWithinBudget => "not-found-within-budget",
                SearchStatus::BudgetExceeded => "budget-exceeded",
            };
            writeln!(
                out,
                "status {status}\nstates {}\ndepth {}",
                o.states, o.depth
            )
            .map_err(io)?;
            match o.script {
                Some(s) => {
                    write!(out, "{s}").map_err(io)?;
                    Ok(0)
                }
                None => Ok(1),
            }
        }
    }
}

fn braid(cmd: &BraidCmd, out: &mut dyn Write) -> Outcome {
    let io = |e: std::io::Error| usage(e);
    match cmd {
        BraidCmd::Expand { qp } => {
            write!(out, "{}", expand(&load_qp(qp)?)).map_err(io)?;
            Ok(0)
        }
        BraidCmd::Surface { qp } => {
            let q = load_qp(qp)?;
            let s = surface_data(&q);
            let word = expand(&q);
            let c = closure_components(&word);
            let perm: Vec<String> = c.permutation.iter().map(|p| (p + 1).to_string()).collect();
            writeln!(
                out,
                "n {}\nk {}\nchi {}\npermutation {}\ncomponents {}\nis_knot {}\nis_disk {}\nslice_genus {}\nself_linking {}",
                s.n,
                s.k,
                s.chi,
                perm.join(" "),
                c.component_count,
                s.is_knot,
                s.is_disk,
                s.slice_genus.map_or("undefined".into(), |g| g.to_string()),
                self_linking(&word)
            )
            .map_err(io)?;
            Ok(0)
        }
        BraidCmd::ClosurePd { braid } => {
            let text = read(braid)?;
            let b = BraidWord::parse(&text).map_err(usage)?;
            write!(out, "{}", braid_closure_pd(&b)).map_err(io)?;
            Ok(0)
        }
    }
}

fn poly(cmd: &PolyCmd, cfg: &EngineConfig, out: &mut dyn Write) -> Outcome {
    let io = |e: std::io::Error| usage(e);
    match cmd {
        PolyCmd::Jones { pd, t } => {
            let j = jones_with(&load_pd(pd)?, cfg).map_err(usage)?;
            let j = if *t {
                j.to_t_variable()
                    .ok_or_else(|| usage("odd number of components: not a polynomial in t"))?
            } else {
                j
            };
            write_poly1(out, &j).map_err(io)?;
            Ok(0)
        }
        PolyCmd::Kauffman { pd, table } => {
            let pd = load_pd(pd)?;
            let f = kauffman_poly_with(&pd, cfg).map_err(usage)?;
            let f = if *table {
                to_table_convention(&f, pd.component_count())
            } else {
                f
            };
            write_poly2(out, &f).map_err(io)?;
            Ok(0)
        }
        PolyCmd::TbBound { pd } => {
            let b = tb_upper_bound_with(&load_pd(pd)?, cfg).map_err(usage)?;
            writeln!(out, "tb_bound {b}").map_err(io)?;
            Ok(0)
        }
    }
}

fn obstruct(cmd: &ObstructCmd, cfg: &EngineConfig, out: &mut dyn Write) -> Outcome {
    let io = |e: std::io::Error| usage(e);
    match cmd {
        ObstructCmd::Filling {
            tb,
            rot,
            genus,
            gs,
            tbmax,
        } => {
            let v = check_filling(&FillingClaim {
                tb: *tb,
                rot: *rot,
                genus: *genus,
                smooth: SmoothType {
                    slice_genus: *gs,
                    tb_upper_bound: *tbmax,
                },
            });
            let code = write_verdict(out, &v).map_err(io)?;
            writeln!(out, "assumption the filling surface is oriented").map_err(io)?;
            Ok(code)
        }
        ObstructCmd::Collar {
            genus,
            concave_genus,
            tb_bound,
        } => {
            let s = CollarScenario::new(*genus, *concave_genus, *tb_bound).map_err(usage)?;
            write_verdict(out, &collar_obstruction(&s)).map_err(io)
        }
        ObstructCmd::QpDisk { qp } => {
            let cert = certify_disk_slice_with(&load_qp(qp)?, cfg).map_err(usage)?;
            for (k, v) in cert.report() {
                writeln!(out, "{k} {v}").map_err(io)?;
            }
            Ok(match cert.verdict.status {
                VerdictStatus::Consistent => 0,
                _ => 1,
            })
        }
    }
}

fn genfam(cmd: &GenfamCmd, out: &mut dyn Write) -> Outcome {
    let io = |e: std::io::Error| usage(e);
    match cmd {
        GenfamCmd::Slice {
            s,
            delta,
            points,
            csv,
        } => {
            let profile = CutoffProfile::new(*delta).map_err(usage)?;
            let grid = Grid {
                points: *points,
                ..Grid::default()
            };
            let slice = front_slice(*s, &profile, &grid).map_err(usage)?;
            let cusps: Vec<String> = slice.cusp_ts.iter().map(|t| t.to_string()).collect();
            writeln!(
                out,
                "s {}\nrho {}\npoints {}\ncusps {}\nbirth_moment {}",
                slice.s,
                slice.rho,
                slice.points.len(),
                if cusps.is_empty() {
                    "none".into()
                } else {
                    cusps.join(" ")
                },
                slice.birth_moment
            )
            .map_err(io)?;
            if let Some(path) = csv {
                std::fs::write(path, slice.to_csv()).map_err(io)?;
            }
            Ok(0)
        }
        GenfamCmd::Sympcheck {
            samples,
            h,
            seed,
            map,
            tolerance,
        } => {
            let map = match map {
                MapArg::Printed => CoordinateMap::Printed,
                MapArg::Rescaled => CoordinateMap::Rescaled,
            };
            let pts = sample_points(*samples, *seed);
            let full = symplecto_check(map, &pts, *h).map_err(usage)?;
            let half = symplecto_check(map, &pts, h / 2.0).map_err(usage)?;
            let pass = full.deviation < *tolerance;
            writeln!(
                out,
                "samples {}\nh {}\nordering {}\ndeviation {:e}\ndeviation_half_step {:e}\nratio {}\npass {pass}",
                samples,
                h,
                full.ordering,
                full.deviation,
                half.deviation,
                full.deviation / half.deviation
            )
            .map_err(io)?;
            Ok(if pass { 0 } else { 1 })
        }
    }
}

fn table(cmd: &TableCmd, dir: &Path, cfg: &EngineConfig, out: &mut dyn Write) -> Outcome {
    let io = |e: std::io::Error| usage(e);
    let path = dir.join("knots.txt");
    let t = KnotTable::load(&path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    match cmd {
        TableCmd::List => {
            for r in &t.records {
                writeln!(
                    out,
                    "{} {} {}",
                    r.name,
                    r.pd.crossing_count(),
                    r.source.as_deref().unwrap_or("-")
                )
                .map_err(io)?;
            }
            Ok(0)
        }
        TableCmd::Check => {
            let mut code = 0;
            for r in &t.records {
                match r.validate(cfg) {
                    Ok(()) => writeln!(out, "{} ok", r.name).map_err(io)?,
                    Err(e) => {
                        writeln!(out, "{} mismatch {e}", r.name).map_err(io)?;
                        code = 1;
                    }
                }
            }
            Ok(code)
        }
        TableCmd::Pd { name, mirror: m } => {
            let r = t.get(name).map_err(usage)?;
            let pd = if *m { mirror(&r.pd) } else { r.pd.clone() };
            write!(out, "{pd}").map_err(io)?;
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("legcob").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn tb_of_the_eye() {
        assert_eq!(call(&["tb", "L1 R1"]), (0, "tb -1\n".into(), String::new()));
    }

    #[test]
    fn bad_front_is_a_usage_error() {
        let (code, _, err) = call(&["tb", "L1 R2"]);
        assert_eq!(code, 2);
        assert!(err.contains("event 2"));
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["poly", "jones", "--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("[polys]"));
    }

    #[test]
    fn obstruct_exit_codes() {
        let (code, out, _) = call(&["obstruct", "collar", "--genus", "0", "--tb-bound", "-2"]);
        assert_eq!(code, 1);
        assert!(out.contains("reason tb bound −2 < −1 = 2·0−1"));
        let (code, _, _) = call(&[
            "obstruct", "filling", "--tb", "-1", "--rot", "0", "--genus", "0",
        ]);
        assert_eq!(code, 0);
        let (code, _, _) = call(&["obstruct", "collar", "--genus", "0"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn moves_round_trip() {
        let (code, out, _) = call(&["moves", "apply", "L1 R1 L1 R1", "SaddleUp", "1"]);
        assert_eq!((code, out.as_str()), (0, "L1 R1\n"));
        let (_, out, _) = call(&["moves", "list", ""]);
        assert_eq!(out, "Birth 0 1\n");
    }
}
