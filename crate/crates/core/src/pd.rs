//! Planar diagram codes.
//!
//! Each crossing is a tuple `[a, b, c, d]` of edge labels read
//! counterclockwise, starting at the under-strand's incoming edge; the under
//! strand runs `a -> c`. The crossing is positive when the over strand runs
//! `d -> b` and negative when it runs `b -> d`. Crossingless circles are kept
//! as a bare count.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PdError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("edge {edge} appears {count} times (expected 2)")]
    EdgeMultiplicity { edge: u32, count: usize },
    #[error("crossing {index} joins opposite slots with one edge")]
    DegenerateCrossing { index: usize },
    #[error("diagram is not planar ({faces} faces, expected {expected})")]
    NonPlanar { faces: usize, expected: usize },
    #[error("component through edge {edge} enters some under-crossings backwards")]
    InconsistentOrientation { edge: u32 },
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PlanarDiagram {
    crossings: Vec<[u32; 4]>,
    free_loops: u32,
}

/// Where an edge attaches: `(crossing index, slot 0..4)`.
type Dart = (usize, usize);

impl PlanarDiagram {
    pub fn new(crossings: Vec<[u32; 4]>, free_loops: u32) -> Result<Self, PdError> {
        let pd = Self {
            crossings,
            free_loops,
        };
        pd.validate()?;
        Ok(pd)
    }

    pub(crate) fn from_parts_unchecked(crossings: Vec<[u32; 4]>, free_loops: u32) -> Self {
        let pd = Self {
            crossings,
            free_loops,
        };
        debug_assert_eq!(pd.validate(), Ok(()));
        pd
    }

    /// `k` disjoint circles.
    pub fn unlink(k: u32) -> Self {
        Self {
            crossings: Vec::new(),
            free_loops: k,
        }
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> u32 {
        self.free_loops
    }

    pub fn validate(&self) -> Result<(), PdError> {
        let darts = self.darts_by_edge();
        for (&edge, ends) in &darts {
            if ends.len() != 2 {
                return Err(PdError::EdgeMultiplicity {
                    edge,
                    count: ends.len(),
                });
            }
        }
        for (index, x) in self.crossings.iter().enumerate() {
            if x[0] == x[2] || x[1] == x[3] {
                return Err(PdError::DegenerateCrossing { index });
            }
        }
        let faces = self.face_count();
        let expected = self.crossings.len() + 2 * self.connected_pieces();
        if faces != expected {
            return Err(PdError::NonPlanar { faces, expected });
        }
        self.orientation().map(|_| ())
    }

    fn darts_by_edge(&self) -> BTreeMap<u32, Vec<Dart>> {
        let mut map: BTreeMap<u32, Vec<Dart>> = BTreeMap::new();
        for (i, x) in self.crossings.iter().enumerate() {
            for (s, &e) in x.iter().enumerate() {
                map.entry(e).or_default().push((i, s));
            }
        }
        map
    }

    /// The other end of the edge attached at `dart`. Requires a valid edge table.
    fn partner(darts: &BTreeMap<u32, Vec<Dart>>, label: u32, dart: Dart) -> Dart {
        let ends = &darts[&label];
        if ends[0] == dart {
            ends[1]
        } else {
            ends[0]
        }
    }

    fn face_count(&self) -> usize {
        let darts = self.darts_by_edge();
        let n = self.crossings.len();
        let mut seen = vec![[false; 4]; n];
        let mut faces = 0;
        for i in 0..n {
            for s in 0..4 {
                if seen[i][s] {
                    continue;
                }
                faces += 1;
                let (mut x, mut slot) = (i, s);
                while !seen[x][slot] {
                    seen[x][slot] = true;
                    let turn = (slot + 1) % 4;
                    let label = self.crossings[x][turn];
                    (x, slot) = Self::partner(&darts, label, (x, turn));
                }
            }
        }
        faces
    }

    /// Connected pieces of the 4-valent graph (free loops excluded).
    fn connected_pieces(&self) -> usize {
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for ends in self.darts_by_edge().values() {
            let (a, b) = (find(&mut parent, ends[0].0), find(&mut parent, ends[1].0));
            parent[a] = b;
        }
        (0..n).filter(|&x| find(&mut parent, x) == x).count()
    }

    /// Walks each edge-cycle; returns the direction of travel through every slot.
    ///
    /// Entry `[i][s]` is `true` when the oriented strand enters crossing `i`
    /// at slot `s`.
    fn orientation(&self) -> Result<Vec<[bool; 4]>, PdError> {
        let darts = self.darts_by_edge();
        let n = self.crossings.len();
        let mut entering: Vec<[Option<bool>; 4]> = vec![[None; 4]; n];
        for i in 0..n {
            for s in 0..4 {
                if entering[i][s].is_some() {
                    continue;
                }
                // Walk the strand through slot s, first collecting the cycle.
                let mut cycle = Vec::new();
                let (mut x, mut slot) = (i, s);
                loop {
                    let out = (slot + 2) % 4;
                    cycle.push((x, slot, out));
                    (x, slot) = Self::partner(&darts, self.crossings[x][out], (x, out));
                    if (x, slot) == (i, s) {
                        break;
                    }
                }
                let mut forward = None;
                for &(x, inn, _) in &cycle {
                    if inn % 2 == 0 {
                        let f = inn == 0;
                        match forward {
                            None => forward = Some(f),
                            Some(g) if g != f => {
                                return Err(PdError::InconsistentOrientation {
                                    edge: self.crossings[x][inn],
                                })
                            }
                            _ => {}
                        }
                    }
                }
                let forward = forward.unwrap_or(true);
                for &(x, inn, out) in &cycle {
                    entering[x][inn] = Some(forward);
                    entering[x][out] = Some(!forward);
                }
            }
        }
        Ok(entering
            .into_iter()
            .map(|e| e.map(|v| v.expect("every slot lies on a strand")))
            .collect())
    }

    /// Sign of each crossing under the diagram's orientation.
    pub fn crossing_signs(&self) -> Vec<i32> {
        let entering = self.orientation().expect("validated diagram");
        entering.iter().map(|e| if e[3] { 1 } else { -1 }).collect()
    }

    pub fn writhe(&self) -> i32 {
        self.crossing_signs().iter().sum()
    }

    /// Number of link components, free loops included.
    pub fn component_count(&self) -> usize {
        let darts = self.darts_by_edge();
        let n = self.crossings.len();
        let mut seen = vec![[false; 4]; n];
        let mut count = self.free_loops as usize;
        for i in 0..n {
            for s in 0..4 {
                if seen[i][s] {
                    continue;
                }
                count += 1;
                let (mut x, mut slot) = (i, s);
                while !seen[x][slot] {
                    let out = (slot + 2) % 4;
                    seen[x][slot] = true;
                    seen[x][out] = true;
                    (x, slot) = Self::partner(&darts, self.crossings[x][out], (x, out));
                }
            }
        }
        count
    }

    /// Relabels edges in order of first appearance; crossing order is kept.
    pub fn canonical(&self) -> Self {
        let mut map = HashMap::new();
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                x.map(|e| {
                    let next = map.len() as u32 + 1;
                    *map.entry(e).or_insert(next)
                })
            })
            .collect();
        Self {
            crossings,
            free_loops: self.free_loops,
        }
    }

    pub fn parse(text: &str) -> Result<Self, PdError> {
        let mut crossings = Vec::new();
        let mut free_loops = 0u32;
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: &str| PdError::Syntax {
                line: n + 1,
                message: message.to_string(),
            };
            let mut toks = line.split_whitespace();
            match toks.next() {
                Some("X") => {
                    let labels: Vec<u32> = toks
                        .map(|t| t.parse::<u32>().ok().filter(|&v| v > 0))
                        .collect::<Option<_>>()
                        .ok_or_else(|| err("edge labels must be positive integers"))?;
                    let tuple: [u32; 4] = labels
                        .try_into()
                        .map_err(|_| err("a crossing needs exactly four labels"))?;
                    crossings.push(tuple);
                }
                Some("O") => {
                    let k = toks
                        .next()
                        .and_then(|t| t.parse::<u32>().ok())
                        .ok_or_else(|| err("expected a loop count"))?;
                    if toks.next().is_some() {
                        return Err(err("trailing tokens"));
                    }
                    free_loops += k;
                }
                Some(other) => return Err(err(&format!("unknown record `{other}`"))),
                None => unreachable!(),
            }
        }
        Self::new(crossings, free_loops)
    }

    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for [a, b, c, d] in &self.crossings {
            writeln!(f, "X {a} {b} {c} {d}")?;
        }
        if self.free_loops > 0 {
            writeln!(f, "O {}", self.free_loops)?;
        }
        Ok(())
    }
}

/// Swaps over and under at every crossing.
pub fn mirror(pd: &PlanarDiagram) -> PlanarDiagram {
    let entering = pd.orientation().expect("validated diagram");
    let crossings = pd
        .crossings
        .iter()
        .zip(&entering)
        .map(|(&[a, b, c, d], e)| if e[1] { [b, c, d, a] } else { [d, a, b, c] })
        .collect();
    PlanarDiagram::from_parts_unchecked(crossings, pd.free_loops)
}
