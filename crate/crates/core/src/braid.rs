//! Braid words, quasi-positive factorizations and their closures.
//!
//! Letter `g` stands for the generator `σ_|g|` raised to `sign(g)`.

use std::fmt;

use thiserror::Error;

use crate::front::EventKind;
use crate::morse::{Layout, OverStrand};
use crate::pd::PlanarDiagram;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("letter {letter} is not a generator of the braid group on {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("a braid needs at least one strand")]
    NoStrands,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for &g in &letters {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(BraidError::LetterOutOfRange { letter: g, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|g| g.signum() as i64).sum()
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|g| -g).collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self {
            strands: self.strands,
            letters,
        }
    }

    /// Parses a `B<n>` header followed by signed letters.
    pub fn parse(text: &str) -> Result<Self, BraidError> {
        let mut lines = content_lines(text);
        let (line, header) = lines.next().ok_or(BraidError::Syntax {
            line: 1,
            message: "missing `B<n>` header".into(),
        })?;
        let strands = parse_header(line, header)?;
        let mut letters = Vec::new();
        for (line, body) in lines {
            letters.extend(parse_letters(line, body)?);
        }
        Self::new(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "B{}", self.strands)?;
        writeln!(f, "{}", join(&self.letters))
    }
}

fn join(letters: &[i32]) -> String {
    letters
        .iter()
        .map(i32::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header(line: usize, header: &str) -> Result<usize, BraidError> {
    header
        .strip_prefix('B')
        .and_then(|n| n.parse::<usize>().ok())
        .ok_or_else(|| BraidError::Syntax {
            line,
            message: format!("expected `B<n>`, found `{header}`"),
        })
}

fn parse_letters(line: usize, body: &str) -> Result<Vec<i32>, BraidError> {
    body.split_whitespace()
        .map(|t| {
            t.parse::<i32>().map_err(|_| BraidError::Syntax {
                line,
                message: format!("bad letter `{t}`"),
            })
        })
        .collect()
}

/// `w_1 σ_{i_1} w_1^-1 ... w_k σ_{i_k} w_k^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPFactorization {
    strands: usize,
    factors: Vec<(BraidWord, u32)>,
}

impl QPFactorization {
    pub fn new(strands: usize, factors: Vec<(BraidWord, u32)>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for (w, i) in &factors {
            if w.strands != strands {
                return Err(BraidError::Syntax {
                    line: 0,
                    message: format!("factor on {} strands in a braid on {strands}", w.strands),
                });
            }
            if *i == 0 || *i as usize >= strands {
                return Err(BraidError::LetterOutOfRange {
                    letter: *i as i32,
                    strands,
                });
            }
        }
        Ok(Self { strands, factors })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn factors(&self) -> &[(BraidWord, u32)] {
        &self.factors
    }

    /// Parses a `B<n>` header followed by `W <letters> ; I <i>` lines.
    pub fn parse(text: &str) -> Result<Self, BraidError> {
        let mut lines = content_lines(text);
        let (line, header) = lines.next().ok_or(BraidError::Syntax {
            line: 1,
            message: "missing `B<n>` header".into(),
        })?;
        let strands = parse_header(line, header)?;
        let mut factors = Vec::new();
        for (line, body) in lines {
            let syntax = |message: &str| BraidError::Syntax {
                line,
                message: message.into(),
            };
            let rest = body
                .strip_prefix('W')
                .ok_or_else(|| syntax("expected `W <letters> ; I <i>`"))?;
            let (word, gen) = rest.split_once(';').ok_or_else(|| syntax("missing `;`"))?;
            let gen = gen
                .trim()
                .strip_prefix('I')
                .and_then(|g| g.trim().parse::<u32>().ok())
                .ok_or_else(|| syntax("expected `I <i>` after `;`"))?;
            let w = BraidWord::new(strands, parse_letters(line, word)?)?;
            factors.push((w, gen));
        }
        Self::new(strands, factors)
    }

    pub fn expand(&self) -> BraidWord {
        expand(self)
    }
}

impl fmt::Display for QPFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "B{}", self.strands)?;
        for (w, i) in &self.factors {
            if w.is_empty() {
                writeln!(f, "W ; I {i}")?;
            } else {
                writeln!(f, "W {} ; I {i}", join(&w.letters))?;
            }
        }
        Ok(())
    }
}

pub fn expand(q: &QPFactorization) -> BraidWord {
    let mut letters = Vec::new();
    for (w, i) in &q.factors {
        letters.extend_from_slice(&w.letters);
        letters.push(*i as i32);
        letters.extend(w.inverse().letters);
    }
    BraidWord {
        strands: q.strands,
        letters,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    /// `permutation[s]` is where the strand starting at position `s` ends (0-based).
    pub permutation: Vec<usize>,
    pub component_count: usize,
    pub is_knot: bool,
}

pub fn closure_components(b: &BraidWord) -> Closure {
    let mut at: Vec<usize> = (0..b.strands).collect();
    for &g in &b.letters {
        let i = g.unsigned_abs() as usize - 1;
        for p in at.iter_mut() {
            if *p == i {
                *p = i + 1;
            } else if *p == i + 1 {
                *p = i;
            }
        }
    }
    let mut seen = vec![false; b.strands];
    let mut cycles = 0;
    for s in 0..b.strands {
        if seen[s] {
            continue;
        }
        cycles += 1;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = at[x];
        }
    }
    Closure {
        permutation: at,
        component_count: cycles,
        is_knot: cycles == 1,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceData {
    pub n: usize,
    pub k: usize,
    pub chi: i64,
    pub is_knot: bool,
    pub is_disk: bool,
    /// Only defined when the closure is a knot.
    pub slice_genus: Option<i64>,
}

pub fn surface_data(q: &QPFactorization) -> SurfaceData {
    let n = q.strands;
    let k = q.factors.len();
    let chi = n as i64 - k as i64;
    let is_knot = closure_components(&expand(q)).is_knot;
    SurfaceData {
        n,
        k,
        chi,
        is_knot,
        is_disk: is_knot && k + 1 == n,
        slice_genus: is_knot.then_some((1 - chi) / 2),
    }
}

/// Exponent sum minus strand count.
pub fn self_linking(b: &BraidWord) -> i64 {
    b.exponent_sum() - b.strands as i64
}

/// Trace closure as a planar diagram, one crossing per letter; a positive
/// letter gives a positive crossing.
pub fn braid_closure_pd(b: &BraidWord) -> PlanarDiagram {
    let n = b.strands as u32;
    let mut events: Vec<(EventKind, u32)> = (1..=n).map(|i| (EventKind::LeftCusp, i)).collect();
    events.extend(
        b.letters
            .iter()
            .map(|g| (EventKind::Crossing, g.unsigned_abs())),
    );
    events.extend((1..=n).rev().map(|i| (EventKind::RightCusp, i)));
    let layout = Layout::new(&events);
    let offset = b.strands;
    let reversed = vec![false; layout.component_count()];
    layout.planar_diagram(
        |j| {
            if b.letters[j - offset] > 0 {
                OverStrand::Descending
            } else {
                OverStrand::Ascending
            }
        },
        &reversed,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp() -> QPFactorization {
        QPFactorization::parse("B3\nW -1 -1 -1 ; I 2\nW ; I 2\n").unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let q = qp();
        assert_eq!(QPFactorization::parse(&q.to_string()).unwrap(), q);
        let b = BraidWord::parse("# x\nB3\n-1 -1 -1 2\n1 1 1 2\n").unwrap();
        assert_eq!(BraidWord::parse(&b.to_string()).unwrap(), b);
        assert_eq!(b.len(), 8);
    }

    #[test]
    fn rejects_bad_letters() {
        assert!(BraidWord::new(3, vec![3]).is_err());
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(QPFactorization::parse("B2\nW ; I 2\n").is_err());
        assert!(QPFactorization::parse("B2\nW 1\n").is_err());
    }

    #[test]
    fn expansion() {
        let b = qp().expand();
        assert_eq!(b.letters(), &[-1, -1, -1, 2, 1, 1, 1, 2]);
        assert_eq!(b.exponent_sum(), 2);
    }

    #[test]
    fn permutation() {
        let c = closure_components(&qp().expand());
        assert!(c.is_knot);
        assert_eq!(c.permutation, vec![1, 2, 0]);
        assert_eq!(
            closure_components(&BraidWord::identity(4).unwrap()).component_count,
            4
        );
    }

    #[test]
    fn surfaces() {
        let s = surface_data(&qp());
        assert_eq!(
            (s.n, s.k, s.chi, s.is_disk, s.slice_genus),
            (3, 2, 1, true, Some(0))
        );
        let q = QPFactorization::new(1, vec![]).unwrap();
        assert!(surface_data(&q).is_disk);
        let one = BraidWord::identity(2).unwrap();
        let q =
            QPFactorization::new(2, vec![(one.clone(), 1), (one.clone(), 1), (one, 1)]).unwrap();
        let s = surface_data(&q);
        assert_eq!((s.chi, s.slice_genus, s.is_disk), (-1, Some(1), false));
    }

    #[test]
    fn self_linking_numbers() {
        assert_eq!(self_linking(&BraidWord::new(2, vec![1]).unwrap()), -1);
        assert_eq!(self_linking(&BraidWord::new(2, vec![1, 1, 1]).unwrap()), 1);
        assert_eq!(self_linking(&qp().expand()), -1);
    }

    #[test]
    fn closure_diagrams() {
        let pd = braid_closure_pd(&BraidWord::identity(1).unwrap());
        assert_eq!((pd.crossing_count(), pd.free_loops()), (0, 1));
        let pd = braid_closure_pd(&qp().expand());
        assert_eq!(pd.crossing_count(), 8);
        assert_eq!(pd.writhe(), 2);
        assert_eq!(pd.component_count(), 1);
    }
}
