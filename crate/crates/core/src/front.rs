//! Legendrian fronts as Morse-event words.
//!
//! A front is read left to right as a word of events on strand rows counted
//! from the top: `L<i>` opens a left cusp whose two strands become rows `i`
//! and `i + 1`, `R<i>` closes rows `i` and `i + 1` in a right cusp, and `X<i>`
//! crosses rows `i` and `i + 1`. At a crossing the strand descending from row
//! `i` to row `i + 1` is drawn in front.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use crate::morse::Direction;
use crate::morse::{Layout, OverStrand};
use crate::pd::PlanarDiagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EventKind {
    LeftCusp,
    RightCusp,
    Crossing,
}

impl EventKind {
    pub fn letter(self) -> char {
        match self {
            EventKind::LeftCusp => 'L',
            EventKind::RightCusp => 'R',
            EventKind::Crossing => 'X',
        }
    }

    /// Change in the number of strands across the event.
    pub fn count_delta(self) -> i64 {
        match self {
            EventKind::LeftCusp => 2,
            EventKind::RightCusp => -2,
            EventKind::Crossing => 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrontEvent {
    pub kind: EventKind,
    pub row: u32,
}

impl FrontEvent {
    pub fn new(kind: EventKind, row: u32) -> Self {
        Self { kind, row }
    }
    pub fn left(row: u32) -> Self {
        Self::new(EventKind::LeftCusp, row)
    }
    pub fn right(row: u32) -> Self {
        Self::new(EventKind::RightCusp, row)
    }
    pub fn cross(row: u32) -> Self {
        Self::new(EventKind::Crossing, row)
    }
}

impl fmt::Display for FrontEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.row)
    }
}

impl FromStr for FrontEvent {
    type Err = FrontError;

    fn from_str(tok: &str) -> Result<Self, FrontError> {
        let bad = || FrontError::Syntax {
            token: tok.to_string(),
        };
        let mut chars = tok.chars();
        let kind = match chars.next() {
            Some('L') => EventKind::LeftCusp,
            Some('R') => EventKind::RightCusp,
            Some('X') => EventKind::Crossing,
            _ => return Err(bad()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let row: u32 = digits.parse().map_err(|_| bad())?;
        if row == 0 {
            return Err(bad());
        }
        Ok(Self { kind, row })
    }
}

/// Traversal sense of a component relative to its canonical tour, which
/// runs rightward through the component's first strand segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Forward,
    Reversed,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::Forward => Orientation::Reversed,
            Orientation::Reversed => Orientation::Forward,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrontError {
    #[error("bad token `{token}`")]
    Syntax { token: String },
    /// `event` is 1-based.
    #[error("event {event} ({token}): {message}")]
    Validation {
        event: usize,
        token: String,
        message: String,
    },
    #[error("front has {expected} components but {given} orientations were given")]
    OrientationCount { expected: usize, given: usize },
}

/// A strand segment: row `row` in the gap just before event `gap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub gap: usize,
    pub row: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrontDiagram {
    events: Vec<FrontEvent>,
    orientations: Vec<Orientation>,
}

impl FrontDiagram {
    /// Validates the word and orients every component canonically.
    pub fn new(events: Vec<FrontEvent>) -> Result<Self, FrontError> {
        audit(&events)?;
        let n = Layout::new(&pairs(&events)).component_count();
        Ok(Self {
            events,
            orientations: vec![Orientation::Forward; n],
        })
    }

    pub fn with_orientations(
        events: Vec<FrontEvent>,
        orientations: Vec<Orientation>,
    ) -> Result<Self, FrontError> {
        let mut d = Self::new(events)?;
        if orientations.len() != d.orientations.len() {
            return Err(FrontError::OrientationCount {
                expected: d.orientations.len(),
                given: orientations.len(),
            });
        }
        d.orientations = orientations;
        Ok(d)
    }

    pub fn empty() -> Self {
        Self {
            events: Vec::new(),
            orientations: Vec::new(),
        }
    }

    pub fn events(&self) -> &[FrontEvent] {
        &self.events
    }

    pub fn orientations(&self) -> &[Orientation] {
        &self.orientations
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn component_count(&self) -> usize {
        self.orientations.len()
    }

    /// Same word with component `c` traversed the other way.
    pub fn reversed_component(&self, c: usize) -> Self {
        let mut d = self.clone();
        d.orientations[c] = d.orientations[c].flipped();
        d
    }

    /// Same word with every component traversed the other way.
    pub fn reversed(&self) -> Self {
        let mut d = self.clone();
        for o in &mut d.orientations {
            *o = o.flipped();
        }
        d
    }

    /// Strand count in each gap; `counts()[k]` is the count before event `k`.
    pub fn counts(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.events.len() + 1);
        let mut c = 0u32;
        out.push(0);
        for e in &self.events {
            c = (c as i64 + e.kind.count_delta()) as u32;
            out.push(c);
        }
        out
    }

    pub(crate) fn layout(&self) -> Layout {
        Layout::new(&pairs(&self.events))
    }

    pub(crate) fn reversed_flags(&self) -> Vec<bool> {
        self.orientations
            .iter()
            .map(|o| *o == Orientation::Reversed)
            .collect()
    }

    /// Direction of travel along every segment under the current orientation,
    /// indexed `[gap][row - 1]`.
    pub fn segment_directions(&self) -> Vec<Vec<Direction>> {
        let layout = self.layout();
        let rev = self.reversed_flags();
        layout
            .counts()
            .iter()
            .enumerate()
            .map(|(gap, &n)| (1..=n).map(|r| layout.oriented_dir(&rev, gap, r)).collect())
            .collect()
    }

    /// Component index of every segment, indexed `[gap][row - 1]`.
    pub fn segment_components(&self) -> Vec<Vec<usize>> {
        let layout = self.layout();
        layout
            .counts()
            .iter()
            .enumerate()
            .map(|(gap, &n)| (1..=n).map(|r| layout.comp[layout.piece(gap, r)]).collect())
            .collect()
    }
}

impl fmt::Display for FrontDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.events.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for FrontDiagram {
    type Err = FrontError;
    fn from_str(s: &str) -> Result<Self, FrontError> {
        parse_front(s)
    }
}

fn pairs(events: &[FrontEvent]) -> Vec<(EventKind, u32)> {
    events.iter().map(|e| (e.kind, e.row)).collect()
}

fn audit(events: &[FrontEvent]) -> Result<(), FrontError> {
    let mut count: u32 = 0;
    for (j, e) in events.iter().enumerate() {
        let fail = |message: String| FrontError::Validation {
            event: j + 1,
            token: e.to_string(),
            message,
        };
        let i = e.row;
        match e.kind {
            EventKind::LeftCusp => {
                if i == 0 || i > count + 1 {
                    return Err(fail(format!(
                        "needs row <= {} (strand count {count})",
                        count + 1
                    )));
                }
                count += 2;
            }
            EventKind::RightCusp | EventKind::Crossing => {
                if i == 0 || i + 1 > count {
                    return Err(fail(format!(
                        "needs strand count >= {}, count is {count}",
                        i + 1
                    )));
                }
                if e.kind == EventKind::RightCusp {
                    count -= 2;
                }
            }
        }
    }
    if count != 0 {
        return Err(FrontError::Validation {
            event: events.len(),
            token: events.last().map(|e| e.to_string()).unwrap_or_default(),
            message: format!("{count} strands left open at the end"),
        });
    }
    Ok(())
}

/// Parses a whitespace-separated event word; lines starting with `#` are skipped.
pub fn parse_front(text: &str) -> Result<FrontDiagram, FrontError> {
    let events = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .flat_map(str::split_whitespace)
        .map(str::parse)
        .collect::<Result<Vec<FrontEvent>, _>>()?;
    FrontDiagram::new(events)
}

pub fn serialize_front(d: &FrontDiagram) -> String {
    d.to_string()
}

/// Each component as its cyclic sequence of segments, starting at the first
/// segment (smallest gap, then smallest row) and listed along the current
/// orientation.
pub fn components(d: &FrontDiagram) -> Vec<Vec<Segment>> {
    let layout = d.layout();
    layout
        .tours
        .iter()
        .zip(d.orientations())
        .map(|(tour, o)| {
            let mut segs: Vec<Segment> = tour
                .iter()
                .map(|v| Segment {
                    gap: v.gap,
                    row: v.row,
                })
                .collect();
            if *o == Orientation::Reversed {
                segs[1..].reverse();
            }
            segs
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassicalInvariants {
    pub tb: i64,
    pub rot: i64,
    pub writhe: i64,
    pub cusps: u64,
    pub components: usize,
}

/// Sign of every crossing event (`None` for cusps).
pub fn crossing_signs(d: &FrontDiagram) -> Vec<Option<i32>> {
    let dirs = d.segment_directions();
    d.events
        .iter()
        .enumerate()
        .map(|(j, e)| {
            (e.kind == EventKind::Crossing).then(|| {
                let i = e.row as usize;
                if dirs[j][i - 1] == dirs[j][i] {
                    1
                } else {
                    -1
                }
            })
        })
        .collect()
}

pub fn classical_invariants(d: &FrontDiagram) -> ClassicalInvariants {
    let dirs = d.segment_directions();
    let mut writhe = 0i64;
    let mut cusps = 0u64;
    let (mut down, mut up) = (0i64, 0i64);
    for (j, e) in d.events.iter().enumerate() {
        let i = e.row as usize;
        match e.kind {
            EventKind::Crossing => {
                writhe += if dirs[j][i - 1] == dirs[j][i] { 1 } else { -1 };
            }
            EventKind::LeftCusp => {
                cusps += 1;
                if dirs[j + 1][i - 1] == Direction::Leftward {
                    down += 1;
                } else {
                    up += 1;
                }
            }
            EventKind::RightCusp => {
                cusps += 1;
                if dirs[j][i - 1] == Direction::Rightward {
                    down += 1;
                } else {
                    up += 1;
                }
            }
        }
    }
    ClassicalInvariants {
        tb: writhe - (cusps / 2) as i64,
        rot: (down - up) / 2,
        writhe,
        cusps,
        components: d.component_count(),
    }
}

/// Smooth resolution: the descending strand goes over, cusps are smoothed.
pub fn to_planar_diagram(d: &FrontDiagram) -> PlanarDiagram {
    d.layout()
        .planar_diagram(|_| OverStrand::Descending, &d.reversed_flags())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(s: &str) -> ClassicalInvariants {
        classical_invariants(&parse_front(s).unwrap())
    }

    #[test]
    fn eye() {
        let c = inv("L1 R1");
        assert_eq!(
            (c.tb, c.rot, c.writhe, c.cusps, c.components),
            (-1, 0, 0, 2, 1)
        );
    }

    #[test]
    fn empty_front() {
        let d = parse_front("").unwrap();
        assert_eq!(serialize_front(&d), "");
        let c = classical_invariants(&d);
        assert_eq!((c.tb, c.rot, c.components), (0, 0, 0));
    }

    #[test]
    fn strand_count_audit_names_the_event() {
        match parse_front("L1 R2") {
            Err(FrontError::Validation { event, .. }) => assert_eq!(event, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_front("L1 L3"),
            Err(FrontError::Validation { event: 2, .. })
        ));
        assert!(matches!(
            parse_front("L1"),
            Err(FrontError::Validation { event: 1, .. })
        ));
        assert!(matches!(
            parse_front("X1"),
            Err(FrontError::Validation { event: 1, .. })
        ));
    }

    #[test]
    fn syntax_errors() {
        for bad in ["L0 R1", "Q1", "L", "L1x R1", "l1 r1", "L+1 R1"] {
            assert!(
                matches!(parse_front(bad), Err(FrontError::Syntax { .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn comments_and_newlines() {
        let d = parse_front("# eye\nL1\n  R1\n").unwrap();
        assert_eq!(serialize_front(&d), "L1 R1");
    }

    #[test]
    fn nested_eyes_are_two_components() {
        assert_eq!(parse_front("L1 L1 R1 R1").unwrap().component_count(), 2);
        assert_eq!(parse_front("L1 L2 R2 R1").unwrap().component_count(), 2);
    }

    #[test]
    fn positive_trefoil_front() {
        let c = inv("L1 L1 X2 X2 X2 R1 R1");
        assert_eq!(
            (c.writhe, c.cusps, c.tb, c.rot, c.components),
            (3, 4, 1, 0, 1)
        );
    }

    #[test]
    fn twisted_unknot_front() {
        // The inner right cusp closes the twist region, so all three
        // crossings are negative.
        let c = inv("L1 L1 X2 X2 X2 R2 R1");
        assert_eq!((c.writhe, c.cusps, c.tb, c.components), (-3, 4, -5, 1));
    }

    #[test]
    fn stabilized_unknot() {
        let c = inv("L1 X1 R1");
        assert_eq!(c.tb, -2);
        assert_eq!(c.rot.abs(), 1);
    }

    #[test]
    fn reversal_negates_rot_only() {
        for s in ["L1 X1 R1", "L1 L2 X1 X2 R1 R1", "L1 L1 X2 X2 X2 R1 R1"] {
            let d = parse_front(s).unwrap();
            let a = classical_invariants(&d);
            let b = classical_invariants(&d.reversed());
            assert_eq!(a.tb, b.tb, "{s}");
            assert_eq!(a.rot, -b.rot, "{s}");
        }
    }

    #[test]
    fn components_partition_segments() {
        let d = parse_front("L1 L1 X2 R1 L2 R3 R1").unwrap();
        let total: usize = components(&d).iter().map(Vec::len).sum();
        assert_eq!(total as u32, d.counts().iter().sum::<u32>());
    }

    #[test]
    fn eye_resolves_to_free_loop() {
        let pd = to_planar_diagram(&parse_front("L1 R1").unwrap());
        assert_eq!((pd.crossing_count(), pd.free_loops()), (0, 1));
        let pd = to_planar_diagram(&parse_front("L1 R1 L1 R1").unwrap());
        assert_eq!((pd.crossing_count(), pd.free_loops()), (0, 2));
    }

    #[test]
    fn resolution_writhe_matches_front_writhe() {
        for s in ["L1 L1 X2 X2 X2 R1 R1", "L1 L1 X2 X2 X2 R2 R1", "L1 X1 R1"] {
            let d = parse_front(s).unwrap();
            let pd = to_planar_diagram(&d);
            assert_eq!(pd.writhe() as i64, classical_invariants(&d).writhe, "{s}");
        }
    }
}
