//! Elementary cobordism moves as local rewrites of event words.
//!
//! Word schemas, with `r` a strand row:
//!
//! | kind | before | after |
//! |------|--------|-------|
//! | `R1a` | (strand `r`) | `L{r+1} X{r} R{r+1}` |
//! | `R1b` | (strand `r`) | `L{r} X{r+1} R{r}` |
//! | `R2a` v0 | `L{r+1}` | `L{r} X{r+1} X{r}` |
//! | `R2a` v1 | `L{r}` | `L{r+1} X{r} X{r+1}` |
//! | `R2b` v0 | `R{r+1}` | `X{r} X{r+1} R{r}` |
//! | `R2b` v1 | `R{r}` | `X{r+1} X{r} R{r+1}` |
//! | `R3` | `X{i} X{j} X{i}` | `X{j} X{i} X{j}`, `\|i-j\| = 1` |
//! | `SaddleUp` | `R{i} L{i}` | (nothing) |
//! | `Birth` | (nothing) | `L{i} R{i}` |
//! | `Cap` | `L{i} R{i}` | (nothing), only when caps are allowed |
//!
//! The `-` kinds undo the corresponding R1/R2 rows. `FarCommute` swaps two
//! adjacent events that act on disjoint rows; at an `R{i} L{i}` pair variant
//! 0 lifts the new eye above (`L{i} R{i+2}`) and variant 1 drops it below
//! (`L{i+2} R{i}`).
//!
//! Site indices are 0-based. Insertions (`Birth`, `R1a`, `R1b`) index the gap
//! before event `index` and take the row as `variant`; everything else
//! indexes the first event of the matched pattern.

mod rewrite;
mod script;
mod search;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::front::{Direction, EventKind, FrontDiagram, FrontError, FrontEvent, Orientation};

pub use rewrite::{canonical_form, commute, reverse_path, slide, SlideStep};
pub use script::{
    euler_characteristic, verify_script, verify_script_with, CobordismReport, CobordismScript,
    Genus, ScriptError, StepError,
};
pub use search::{search_cobordism, SearchBudget, SearchOutcome, SearchStatus};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    R1a,
    R1b,
    R2a,
    R2b,
    R3,
    SaddleUp,
    Birth,
    R1aInv,
    R1bInv,
    R2aInv,
    R2bInv,
    FarCommute,
    Cap,
}

impl MoveKind {
    pub const ALL: [MoveKind; 13] = [
        MoveKind::R1a,
        MoveKind::R1b,
        MoveKind::R2a,
        MoveKind::R2b,
        MoveKind::R3,
        MoveKind::SaddleUp,
        MoveKind::Birth,
        MoveKind::R1aInv,
        MoveKind::R1bInv,
        MoveKind::R2aInv,
        MoveKind::R2bInv,
        MoveKind::FarCommute,
        MoveKind::Cap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::R1a => "R1a",
            MoveKind::R1b => "R1b",
            MoveKind::R2a => "R2a",
            MoveKind::R2b => "R2b",
            MoveKind::R3 => "R3",
            MoveKind::SaddleUp => "SaddleUp",
            MoveKind::Birth => "Birth",
            MoveKind::R1aInv => "R1a-",
            MoveKind::R1bInv => "R1b-",
            MoveKind::R2aInv => "R2a-",
            MoveKind::R2bInv => "R2b-",
            MoveKind::FarCommute => "FarCommute",
            MoveKind::Cap => "Cap",
        }
    }

    /// Legendrian isotopy moves (Reidemeister type and far-commutation).
    pub fn is_isotopy(self) -> bool {
        !matches!(self, MoveKind::SaddleUp | MoveKind::Birth | MoveKind::Cap)
    }

    pub fn is_reidemeister(self) -> bool {
        self.is_isotopy() && self != MoveKind::FarCommute
    }

    /// Whether `index` names a gap (insertion) rather than an event.
    pub fn indexes_gap(self) -> bool {
        matches!(self, MoveKind::Birth | MoveKind::R1a | MoveKind::R1b)
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MoveKind {
    type Err = MoveError;
    fn from_str(s: &str) -> Result<Self, MoveError> {
        let norm = s.replace('⁻', "-");
        MoveKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(&norm))
            .ok_or_else(|| MoveError::UnknownKind(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoveSite {
    pub kind: MoveKind,
    pub index: usize,
    pub variant: u32,
}

impl MoveSite {
    pub fn new(kind: MoveKind, index: usize, variant: u32) -> Self {
        Self {
            kind,
            index,
            variant,
        }
    }
}

impl fmt::Display for MoveSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.kind, self.index, self.variant)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("unknown move kind `{0}`")]
    UnknownKind(String),
    #[error("{site} does not match the front: {reason}")]
    InvalidSite { site: MoveSite, reason: String },
    #[error("caps are disabled (enable them explicitly to admit non-exact steps)")]
    CapsDisabled,
    #[error(transparent)]
    Front(#[from] FrontError),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MovePolicy {
    pub allow_caps: bool,
}

fn ev(kind: EventKind, row: u32) -> FrontEvent {
    FrontEvent::new(kind, row)
}
const L: EventKind = EventKind::LeftCusp;
const R: EventKind = EventKind::RightCusp;
const X: EventKind = EventKind::Crossing;

/// A splice: replace `old_len` events starting at `start` with `new`.
struct Splice {
    start: usize,
    old_len: usize,
    new: Vec<FrontEvent>,
}

fn matches(events: &[FrontEvent], at: usize, pattern: &[(EventKind, i64)]) -> bool {
    at + pattern.len() <= events.len()
        && pattern
            .iter()
            .zip(&events[at..])
            .all(|((k, r), e)| e.kind == *k && e.row as i64 == *r)
}

fn splice_for(d: &FrontDiagram, site: MoveSite, policy: MovePolicy) -> Result<Splice, String> {
    let events = d.events();
    let counts = d.counts();
    let p = site.index;
    let v = site.variant;
    let at = |i: usize| {
        events
            .get(i)
            .copied()
            .ok_or("index past the end of the word")
    };
    let n = events.len();
    let insert = |new: Vec<FrontEvent>| Splice {
        start: p,
        old_len: 0,
        new,
    };
    let replace = |old_len: usize, new: Vec<FrontEvent>| Splice {
        start: p,
        old_len,
        new,
    };
    let has_variants = site.kind.indexes_gap()
        || matches!(
            site.kind,
            MoveKind::R2a
                | MoveKind::R2b
                | MoveKind::R2aInv
                | MoveKind::R2bInv
                | MoveKind::FarCommute
        );
    if !has_variants && v != 0 {
        return Err("this move takes no variant".into());
    }
    match site.kind {
        MoveKind::Birth => {
            if p > n {
                return Err("gap index past the end of the word".into());
            }
            if v < 1 || v > counts[p] + 1 {
                return Err(format!("row must lie in 1..={}", counts[p] + 1));
            }
            Ok(insert(vec![ev(L, v), ev(R, v)]))
        }
        MoveKind::R1a | MoveKind::R1b => {
            if p > n {
                return Err("gap index past the end of the word".into());
            }
            if v < 1 || v > counts[p] {
                return Err(format!("no strand {v} in gap {p}"));
            }
            Ok(insert(if site.kind == MoveKind::R1a {
                vec![ev(L, v + 1), ev(X, v), ev(R, v + 1)]
            } else {
                vec![ev(L, v), ev(X, v + 1), ev(R, v)]
            }))
        }
        MoveKind::SaddleUp | MoveKind::Cap => {
            if site.kind == MoveKind::Cap && !policy.allow_caps {
                return Err("caps are disabled".into());
            }
            let e = at(p)?;
            let (first, second) = if site.kind == MoveKind::SaddleUp {
                (R, L)
            } else {
                (L, R)
            };
            if !matches(events, p, &[(first, e.row as i64), (second, e.row as i64)]) {
                return Err(format!(
                    "expected {}{r} {}{r}",
                    first.letter(),
                    second.letter(),
                    r = e.row
                ));
            }
            Ok(replace(2, vec![]))
        }
        MoveKind::R1aInv | MoveKind::R1bInv => {
            let m = at(p)?.row as i64;
            let mid = if site.kind == MoveKind::R1aInv {
                m - 1
            } else {
                m + 1
            };
            if !matches(events, p, &[(L, m), (X, mid), (R, m)]) {
                return Err(format!("expected L{m} X{mid} R{m}"));
            }
            Ok(replace(3, vec![]))
        }
        MoveKind::R2a => {
            let e = at(p)?;
            if e.kind != L {
                return Err("expected a left cusp".into());
            }
            match v {
                0 if e.row >= 2 => {
                    let r = e.row - 1;
                    Ok(replace(1, vec![ev(L, r), ev(X, r + 1), ev(X, r)]))
                }
                1 if e.row <= counts[p] => {
                    let r = e.row;
                    Ok(replace(1, vec![ev(L, r + 1), ev(X, r), ev(X, r + 1)]))
                }
                _ => Err("no strand on that side of the cusp".into()),
            }
        }
        MoveKind::R2b => {
            let e = at(p)?;
            if e.kind != R {
                return Err("expected a right cusp".into());
            }
            match v {
                0 if e.row >= 2 => {
                    let r = e.row - 1;
                    Ok(replace(1, vec![ev(X, r), ev(X, r + 1), ev(R, r)]))
                }
                1 if e.row + 2 <= counts[p] => {
                    let r = e.row;
                    Ok(replace(1, vec![ev(X, r + 1), ev(X, r), ev(R, r + 1)]))
                }
                _ => Err("no strand on that side of the cusp".into()),
            }
        }
        MoveKind::R2aInv => {
            let m = at(p)?.row as i64;
            let (mid, to) = match v {
                0 => (m + 1, m + 1),
                1 => (m - 1, m - 1),
                _ => return Err("variant must be 0 or 1".into()),
            };
            if !matches(events, p, &[(L, m), (X, mid), (X, m)]) {
                return Err(format!("expected L{m} X{mid} X{m}"));
            }
            Ok(replace(3, vec![ev(L, to as u32)]))
        }
        MoveKind::R2bInv => {
            let m = at(p)?.row as i64;
            let next = match v {
                0 => m + 1,
                1 => m - 1,
                _ => return Err("variant must be 0 or 1".into()),
            };
            if !matches(events, p, &[(X, m), (X, next), (R, m)]) {
                return Err(format!("expected X{m} X{next} R{m}"));
            }
            Ok(replace(3, vec![ev(R, next as u32)]))
        }
        MoveKind::R3 => {
            let a = at(p)?;
            let b = at(p + 1)?;
            let c = at(p + 2)?;
            let ok =
                a.kind == X && b.kind == X && c == a && (a.row as i64 - b.row as i64).abs() == 1;
            if !ok {
                return Err("expected X{i} X{i±1} X{i}".into());
            }
            Ok(replace(3, vec![b, a, b]))
        }
        MoveKind::FarCommute => {
            let a = at(p)?;
            let b = at(p + 1)?;
            let (x, y) = slide(a, b, v).ok_or("events interact")?;
            Ok(replace(2, vec![x, y]))
        }
    }
}

/// Applies a move with caps disabled.
pub fn apply_move(d: &FrontDiagram, site: MoveSite) -> Result<FrontDiagram, MoveError> {
    apply_move_with(d, site, MovePolicy::default())
}

pub fn apply_move_with(
    d: &FrontDiagram,
    site: MoveSite,
    policy: MovePolicy,
) -> Result<FrontDiagram, MoveError> {
    if site.kind == MoveKind::Cap && !policy.allow_caps {
        return Err(MoveError::CapsDisabled);
    }
    let splice =
        splice_for(d, site, policy).map_err(|reason| MoveError::InvalidSite { site, reason })?;
    Ok(perform(d, &splice)?)
}

/// Rebuilds the front and carries orientations across the splice: each new
/// component copies the direction of its first segment outside the rewritten
/// block; components that live entirely inside it are oriented canonically.
fn perform(d: &FrontDiagram, s: &Splice) -> Result<FrontDiagram, FrontError> {
    let old = d.events();
    let mut events = old[..s.start].to_vec();
    events.extend_from_slice(&s.new);
    events.extend_from_slice(&old[s.start + s.old_len..]);
    let fresh = FrontDiagram::new(events)?;

    let old_dirs = d.segment_directions();
    let new_dirs = fresh.segment_directions();
    let new_comp = fresh.segment_components();
    let lo = s.start;
    let hi_new = s.start + s.new.len();
    let to_old_gap = |g: usize| -> Option<usize> {
        if g <= lo {
            Some(g)
        } else if g >= hi_new {
            Some(g - s.new.len() + s.old_len)
        } else {
            None
        }
    };

    let mut orient: Vec<Option<Orientation>> = vec![None; fresh.component_count()];
    for (g, comps) in new_comp.iter().enumerate() {
        let Some(og) = to_old_gap(g) else { continue };
        for (r, &c) in comps.iter().enumerate() {
            if orient[c].is_some() {
                continue;
            }
            let want: Direction = old_dirs[og][r];
            orient[c] = Some(if new_dirs[g][r] == want {
                Orientation::Forward
            } else {
                Orientation::Reversed
            });
        }
    }
    let orientations = orient
        .into_iter()
        .map(|o| o.unwrap_or(Orientation::Forward))
        .collect();
    FrontDiagram::with_orientations(fresh.events().to_vec(), orientations)
}

/// Whether a `SaddleUp` at `index` joins strands with matching directions,
/// so the resulting surface stays oriented.
pub fn saddle_is_coherent(d: &FrontDiagram, index: usize) -> bool {
    let e = d.events()[index];
    let dirs = d.segment_directions();
    let r = e.row as usize - 1;
    dirs[index][r] == dirs[index + 2][r]
}

pub fn enumerate_moves(d: &FrontDiagram) -> Vec<MoveSite> {
    enumerate_moves_with(d, MovePolicy::default())
}

/// Every site at which some schema matches the word as written. Isotopy to
/// other positions goes through `FarCommute` sites, which are listed too.
pub fn enumerate_moves_with(d: &FrontDiagram, policy: MovePolicy) -> Vec<MoveSite> {
    let n = d.len();
    let mut sites = Vec::new();
    for (k, &count) in d.counts().iter().enumerate() {
        for row in 1..=count + 1 {
            sites.push(MoveSite::new(MoveKind::Birth, k, row));
        }
        for row in 1..=count {
            sites.push(MoveSite::new(MoveKind::R1a, k, row));
            sites.push(MoveSite::new(MoveKind::R1b, k, row));
        }
    }
    for p in 0..n {
        for kind in [
            MoveKind::SaddleUp,
            MoveKind::Cap,
            MoveKind::R1aInv,
            MoveKind::R1bInv,
            MoveKind::R3,
        ] {
            let site = MoveSite::new(kind, p, 0);
            if splice_for(d, site, policy).is_ok() {
                sites.push(site);
            }
        }
        for kind in [
            MoveKind::R2a,
            MoveKind::R2b,
            MoveKind::R2aInv,
            MoveKind::R2bInv,
            MoveKind::FarCommute,
        ] {
            for v in 0..2 {
                let site = MoveSite::new(kind, p, v);
                if splice_for(d, site, policy).is_ok() {
                    sites.push(site);
                }
            }
        }
    }
    sites.sort();
    sites
}
