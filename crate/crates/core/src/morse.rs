//! Strand bookkeeping for Morse-event words.
//!
//! A word of `n` events has `n + 1` gaps; gap `k` sits just before event `k`
//! (0-based) and carries `counts[k]` strands numbered `1..=counts[k]` from the
//! top. A *piece* is one strand inside one gap. Fronts and braid closures are
//! both resolved through this layout.

use crate::front::EventKind;
use crate::pd::PlanarDiagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Rightward,
    Leftward,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Rightward => Direction::Leftward,
            Direction::Leftward => Direction::Rightward,
        }
    }
}

/// Which of the two strands at a crossing passes in front.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum OverStrand {
    /// The strand moving from row `i` to row `i + 1` (left to right).
    Descending,
    Ascending,
}

/// The four corners of a crossing event at row `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Slot {
    UpperLeft,
    LowerLeft,
    UpperRight,
    LowerRight,
}

impl Slot {
    fn index(self) -> usize {
        match self {
            Slot::UpperRight => 0,
            Slot::UpperLeft => 1,
            Slot::LowerLeft => 2,
            Slot::LowerRight => 3,
        }
    }
}

/// Corners in counterclockwise order.
const CCW: [Slot; 4] = [
    Slot::UpperRight,
    Slot::UpperLeft,
    Slot::LowerLeft,
    Slot::LowerRight,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Visit {
    pub gap: usize,
    pub row: u32,
    pub dir: Direction,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Passage {
    pub event: usize,
    pub entry: Slot,
    pub exit: Slot,
}

#[derive(Clone, Debug)]
pub(crate) struct Layout {
    events: Vec<(EventKind, u32)>,
    counts: Vec<u32>,
    offsets: Vec<usize>,
    /// Component of each piece.
    pub comp: Vec<usize>,
    /// Direction of each piece along its component's canonical tour.
    pub dir: Vec<Direction>,
    /// Canonical tour of each component, starting at its first piece heading right.
    pub tours: Vec<Vec<Visit>>,
}

impl Layout {
    /// Builds the layout of an already validated word.
    pub fn new(events: &[(EventKind, u32)]) -> Self {
        let mut counts = Vec::with_capacity(events.len() + 1);
        let mut c = 0u32;
        counts.push(0);
        for &(kind, _) in events {
            match kind {
                EventKind::LeftCusp => c += 2,
                EventKind::RightCusp => c -= 2,
                EventKind::Crossing => {}
            }
            counts.push(c);
        }
        let mut offsets = Vec::with_capacity(counts.len() + 1);
        let mut acc = 0usize;
        for &n in &counts {
            offsets.push(acc);
            acc += n as usize;
        }
        offsets.push(acc);

        let mut layout = Layout {
            events: events.to_vec(),
            counts,
            offsets,
            comp: vec![usize::MAX; acc],
            dir: vec![Direction::Rightward; acc],
            tours: Vec::new(),
        };
        for gap in 0..layout.counts.len() {
            for row in 1..=layout.counts[gap] {
                if layout.comp[layout.piece(gap, row)] != usize::MAX {
                    continue;
                }
                let start = Visit {
                    gap,
                    row,
                    dir: Direction::Rightward,
                };
                let id = layout.tours.len();
                let tour = layout.tour_from(start);
                for v in &tour {
                    let p = layout.piece(v.gap, v.row);
                    layout.comp[p] = id;
                    layout.dir[p] = v.dir;
                }
                layout.tours.push(tour);
            }
        }
        layout
    }

    pub fn piece(&self, gap: usize, row: u32) -> usize {
        debug_assert!(row >= 1 && row <= self.counts[gap]);
        self.offsets[gap] + row as usize - 1
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn component_count(&self) -> usize {
        self.tours.len()
    }

    /// Follows a strand until it returns to `start`.
    pub fn tour_from(&self, start: Visit) -> Vec<Visit> {
        let mut tour = vec![start];
        let mut cur = start;
        loop {
            let (next, _) = self.step(cur);
            if next == start {
                return tour;
            }
            tour.push(next);
            cur = next;
        }
    }

    /// Moves one event along the strand; reports the crossing passed, if any.
    pub fn step(&self, v: Visit) -> (Visit, Option<Passage>) {
        let Visit { gap, row, dir } = v;
        match dir {
            Direction::Rightward => {
                let (kind, i) = self.events[gap];
                let to = |row| Visit {
                    gap: gap + 1,
                    row,
                    dir,
                };
                match kind {
                    EventKind::LeftCusp => (to(if row < i { row } else { row + 2 }), None),
                    EventKind::RightCusp => {
                        if row < i {
                            (to(row), None)
                        } else if row > i + 1 {
                            (to(row - 2), None)
                        } else {
                            let other = if row == i { i + 1 } else { i };
                            (
                                Visit {
                                    gap,
                                    row: other,
                                    dir: Direction::Leftward,
                                },
                                None,
                            )
                        }
                    }
                    EventKind::Crossing => {
                        if row == i || row == i + 1 {
                            let out = if row == i { i + 1 } else { i };
                            let passage = Passage {
                                event: gap,
                                entry: if row == i {
                                    Slot::UpperLeft
                                } else {
                                    Slot::LowerLeft
                                },
                                exit: if out == i {
                                    Slot::UpperRight
                                } else {
                                    Slot::LowerRight
                                },
                            };
                            (to(out), Some(passage))
                        } else {
                            (to(row), None)
                        }
                    }
                }
            }
            Direction::Leftward => {
                let (kind, i) = self.events[gap - 1];
                let to = |row| Visit {
                    gap: gap - 1,
                    row,
                    dir,
                };
                match kind {
                    EventKind::RightCusp => (to(if row < i { row } else { row + 2 }), None),
                    EventKind::LeftCusp => {
                        if row < i {
                            (to(row), None)
                        } else if row > i + 1 {
                            (to(row - 2), None)
                        } else {
                            let other = if row == i { i + 1 } else { i };
                            (
                                Visit {
                                    gap,
                                    row: other,
                                    dir: Direction::Rightward,
                                },
                                None,
                            )
                        }
                    }
                    EventKind::Crossing => {
                        if row == i || row == i + 1 {
                            let out = if row == i { i + 1 } else { i };
                            let passage = Passage {
                                event: gap - 1,
                                entry: if row == i {
                                    Slot::UpperRight
                                } else {
                                    Slot::LowerRight
                                },
                                exit: if out == i {
                                    Slot::UpperLeft
                                } else {
                                    Slot::LowerLeft
                                },
                            };
                            (to(out), Some(passage))
                        } else {
                            (to(row), None)
                        }
                    }
                }
            }
        }
    }

    /// Direction of a piece once each component is flipped per `reversed`.
    pub fn oriented_dir(&self, reversed: &[bool], gap: usize, row: u32) -> Direction {
        let p = self.piece(gap, row);
        if reversed[self.comp[p]] {
            self.dir[p].reversed()
        } else {
            self.dir[p]
        }
    }

    /// Resolves the word into a planar diagram. Edge labels increase along
    /// the orientation of each component; crossings are listed in event order.
    pub fn planar_diagram(
        &self,
        over: impl Fn(usize) -> OverStrand,
        reversed: &[bool],
    ) -> PlanarDiagram {
        let n = self.events.len();
        let mut slot_labels: Vec<[u32; 4]> = vec![[0; 4]; n];
        let mut entries: Vec<Vec<Slot>> = vec![Vec::new(); n];
        let mut next_label = 1u32;
        let mut free_loops = 0u32;

        for (c, tour) in self.tours.iter().enumerate() {
            let first = tour[0];
            let start = Visit {
                dir: if reversed[c] {
                    first.dir.reversed()
                } else {
                    first.dir
                },
                ..first
            };
            let mut passages = Vec::new();
            let mut cur = start;
            loop {
                let (next, passage) = self.step(cur);
                passages.extend(passage);
                cur = next;
                if cur == start {
                    break;
                }
            }
            if passages.is_empty() {
                free_loops += 1;
                continue;
            }
            let m = passages.len();
            for t in 0..m {
                let label = next_label + t as u32;
                let from = passages[t];
                let to = passages[(t + 1) % m];
                slot_labels[from.event][from.exit.index()] = label;
                slot_labels[to.event][to.entry.index()] = label;
            }
            for p in &passages {
                entries[p.event].push(p.entry);
            }
            next_label += m as u32;
        }

        let mut crossings = Vec::new();
        for (j, &(kind, _)) in self.events.iter().enumerate() {
            if kind != EventKind::Crossing {
                continue;
            }
            let under_slots = match over(j) {
                OverStrand::Descending => [Slot::LowerLeft, Slot::UpperRight],
                OverStrand::Ascending => [Slot::UpperLeft, Slot::LowerRight],
            };
            let under_in = entries[j]
                .iter()
                .copied()
                .find(|s| under_slots.contains(s))
                .expect("every crossing is passed by both strands");
            let start = CCW.iter().position(|s| *s == under_in).unwrap();
            let labels = slot_labels[j];
            let tuple = [0, 1, 2, 3].map(|t| labels[CCW[(start + t) % 4].index()]);
            crossings.push(tuple);
        }
        PlanarDiagram::from_parts_unchecked(crossings, free_loops)
    }
}
