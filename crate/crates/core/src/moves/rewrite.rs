//! Far-commutation of adjacent events and the canonical word it induces.

use std::collections::HashMap;

use crate::front::{EventKind, FrontEvent};

/// Vertical extent of an event in doubled coordinates of the gap between
/// it and its neighbour. Rows `r` sit at `2r`; a cusp seen from the side
/// where it has no strands is the point between its neighbours.
fn extent_as_first(e: FrontEvent) -> (i64, i64) {
    let i = e.row as i64;
    match e.kind {
        EventKind::LeftCusp | EventKind::Crossing => (2 * i, 2 * i + 2),
        EventKind::RightCusp => (2 * i - 1, 2 * i - 1),
    }
}

fn extent_as_second(e: FrontEvent) -> (i64, i64) {
    let j = e.row as i64;
    match e.kind {
        EventKind::LeftCusp => (2 * j - 1, 2 * j - 1),
        EventKind::RightCusp | EventKind::Crossing => (2 * j, 2 * j + 2),
    }
}

/// The pair `(e2', e1')` obtained by sliding `e2` past `e1`, or `None` when
/// the two events interact.
///
/// An adjacent `R{i} L{i}` is never produced or consumed: it could be
/// resolved with the new cusp on either side, and it is the saddle site.
pub fn commute(e1: FrontEvent, e2: FrontEvent) -> Option<(FrontEvent, FrontEvent)> {
    let (lo1, hi1) = extent_as_first(e1);
    let (lo2, hi2) = extent_as_second(e2);
    let shift = |e: FrontEvent, by: i64| FrontEvent::new(e.kind, (e.row as i64 + by) as u32);
    let out = if hi2 < lo1 {
        (e2, shift(e1, e2.kind.count_delta()))
    } else if lo2 > hi1 {
        (shift(e2, -e1.kind.count_delta()), e1)
    } else {
        return None;
    };
    let saddle_pair = |a: FrontEvent, b: FrontEvent| {
        a.kind == EventKind::RightCusp && b.kind == EventKind::LeftCusp && a.row == b.row
    };
    (!saddle_pair(out.0, out.1)).then_some(out)
}

/// Slides the adjacent pair `(e1, e2)` past each other.
///
/// Variant 0 is [`commute`] where that applies. An `R{i} L{i}` pair can come
/// apart in two ways, with the new eye above (variant 0, giving
/// `L{i} R{i+2}`) or below (variant 1, giving `L{i+2} R{i}`); both of those,
/// slid with variant 0, give `R{i} L{i}` back.
pub fn slide(e1: FrontEvent, e2: FrontEvent, variant: u32) -> Option<(FrontEvent, FrontEvent)> {
    let (l, r) = (EventKind::LeftCusp, EventKind::RightCusp);
    let at = |k, row| FrontEvent::new(k, row);
    match variant {
        0 if e1.kind == l && e2.kind == r && e1.row.abs_diff(e2.row) == 2 => {
            let i = e1.row.min(e2.row);
            Some((at(r, i), at(l, i)))
        }
        0 if e1.kind == r && e2.kind == l && e1.row == e2.row => {
            Some((at(l, e1.row), at(r, e1.row + 2)))
        }
        0 => commute(e1, e2),
        1 if e1.kind == r && e2.kind == l && e1.row == e2.row => {
            Some((at(l, e1.row + 2), at(r, e1.row)))
        }
        _ => None,
    }
}

/// One far-commutation step: slide the events at `index` and `index + 1`.
pub type SlideStep = (usize, u32);

fn apply_slide(word: &mut [FrontEvent], (p, v): SlideStep) -> bool {
    match slide(word[p], word[p + 1], v) {
        Some((a, b)) => {
            word[p] = a;
            word[p + 1] = b;
            true
        }
        None => false,
    }
}

/// Steps that walk back from the end of `path` (applied to `start`) to `start`.
pub fn reverse_path(start: &[FrontEvent], path: &[SlideStep]) -> Vec<SlideStep> {
    let mut words = vec![start.to_vec()];
    for &step in path {
        let mut w = words.last().unwrap().clone();
        assert!(apply_slide(&mut w, step), "path does not apply");
        words.push(w);
    }
    path.iter()
        .enumerate()
        .rev()
        .map(|(i, &(p, _))| {
            let back = (0..2)
                .find(|&v| {
                    let mut w = words[i + 1].clone();
                    apply_slide(&mut w, (p, v)) && w == words[i]
                })
                .expect("every slide has an inverse");
            (p, back)
        })
        .collect()
}

/// Class sizes above this fall back to a local normal form.
const CLASS_CAP: usize = 20_000;

/// A far-commutation class explored breadth-first from `words[0]`.
pub(crate) struct SlideClass {
    pub words: Vec<Vec<FrontEvent>>,
    parent: Vec<Option<(usize, SlideStep)>>,
}

impl SlideClass {
    /// `None` once the class outgrows the cap.
    pub fn explore(events: &[FrontEvent]) -> Option<Self> {
        let mut index: HashMap<Vec<FrontEvent>, usize> = HashMap::from([(events.to_vec(), 0)]);
        let mut class = SlideClass {
            words: vec![events.to_vec()],
            parent: vec![None],
        };
        let mut head = 0;
        while head < class.words.len() {
            if class.words.len() > CLASS_CAP {
                return None;
            }
            let w = class.words[head].clone();
            for p in 0..w.len().saturating_sub(1) {
                for v in 0..2 {
                    let mut next = w.clone();
                    if apply_slide(&mut next, (p, v)) && !index.contains_key(&next) {
                        index.insert(next.clone(), class.words.len());
                        class.words.push(next);
                        class.parent.push(Some((head, (p, v))));
                    }
                }
            }
            head += 1;
        }
        Some(class)
    }

    /// The word `words[i]` was first reached from, and the slide taken.
    pub fn parent(&self, i: usize) -> Option<(usize, SlideStep)> {
        self.parent[i]
    }

    /// Slides from `words[0]` to `words[i]`.
    pub fn path_to(&self, mut i: usize) -> Vec<SlideStep> {
        let mut path = Vec::new();
        while let Some((prev, step)) = self.parent[i] {
            path.push(step);
            i = prev;
        }
        path.reverse();
        path
    }

    pub fn least(&self) -> usize {
        (0..self.words.len())
            .min_by(|&a, &b| self.words[a].cmp(&self.words[b]))
            .expect("class contains its root")
    }
}

/// Lexicographically least word in the far-commutation class of `events`,
/// with the slides that reach it.
///
/// Classes larger than an internal cap are not enumerated; the result is
/// then the least word reachable by plain commutations, which is still in
/// the class and deterministic but may differ between class members.
pub fn canonical_form(events: &[FrontEvent]) -> (Vec<FrontEvent>, Vec<SlideStep>) {
    match SlideClass::explore(events) {
        Some(class) => {
            let best = class.least();
            (class.words[best].clone(), class.path_to(best))
        }
        None => {
            let mut swaps = Vec::new();
            let word = settle(events.to_vec(), 0, &mut swaps);
            (word, swaps.into_iter().map(|p| (p, 0)).collect())
        }
    }
}

fn slide_to(word: &mut [FrontEvent], t: usize, q: usize, swaps: &mut Vec<usize>) {
    for p in (t..q).rev() {
        let (a, b) = commute(word[p], word[p + 1]).expect("slide was checked");
        word[p] = a;
        word[p + 1] = b;
        swaps.push(p);
    }
}

/// Position by position, the least event that plain commutations bring to
/// the front; ties are all followed and the least completion wins.
fn settle(mut word: Vec<FrontEvent>, start: usize, swaps: &mut Vec<usize>) -> Vec<FrontEvent> {
    for t in start..word.len() {
        let mut best: Option<FrontEvent> = None;
        let mut ties: Vec<usize> = Vec::new();
        for q in t..word.len() {
            let mut moving = word[q];
            let mut ok = true;
            for p in (t..q).rev() {
                match commute(word[p], moving) {
                    Some((front, _)) => moving = front,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            match best {
                Some(b) if moving > b => {}
                Some(b) if moving == b => ties.push(q),
                _ => {
                    best = Some(moving);
                    ties = vec![q];
                }
            }
        }
        if ties.len() > 1 {
            let mut winner: Option<(Vec<FrontEvent>, Vec<usize>)> = None;
            for &q in &ties {
                let mut w = word.clone();
                let mut sw = Vec::new();
                slide_to(&mut w, t, q, &mut sw);
                let w = settle(w, t + 1, &mut sw);
                if winner.as_ref().is_none_or(|(b, _)| w < *b) {
                    winner = Some((w, sw));
                }
            }
            let (w, sw) = winner.expect("at least one tie");
            swaps.extend(sw);
            return w;
        }
        slide_to(&mut word, t, ties[0], swaps);
    }
    word
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::parse_front;

    fn ev(s: &str) -> FrontEvent {
        s.parse().unwrap()
    }

    #[test]
    fn distant_crossings_commute() {
        assert_eq!(commute(ev("X3"), ev("X1")), Some((ev("X1"), ev("X3"))));
        assert_eq!(commute(ev("X1"), ev("X2")), None);
    }

    #[test]
    fn cusps_shift_rows() {
        // A new eye above a crossing pushes it down.
        assert_eq!(commute(ev("X1"), ev("L1")), Some((ev("L1"), ev("X3"))));
        assert_eq!(commute(ev("L1"), ev("X3")), Some((ev("X1"), ev("L1"))));
        assert_eq!(commute(ev("R1"), ev("L1")), None);
        assert_eq!(commute(ev("L1"), ev("R1")), None);
        assert_eq!(commute(ev("L1"), ev("L1")), Some((ev("L1"), ev("L3"))));
    }

    #[test]
    fn commuting_twice_is_identity() {
        let evs: Vec<FrontEvent> = ["L1", "L2", "L3", "R1", "R2", "R3", "X1", "X2", "X3", "X4"]
            .iter()
            .map(|s| ev(s))
            .collect();
        for &a in &evs {
            for &b in &evs {
                if let Some((c, d)) = commute(a, b) {
                    assert_eq!(commute(c, d), Some((a, b)), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn cusp_pairs_slide_both_ways() {
        assert_eq!(slide(ev("R1"), ev("L1"), 0), Some((ev("L1"), ev("R3"))));
        assert_eq!(slide(ev("R1"), ev("L1"), 1), Some((ev("L3"), ev("R1"))));
        assert_eq!(slide(ev("L1"), ev("R3"), 0), Some((ev("R1"), ev("L1"))));
        assert_eq!(slide(ev("L3"), ev("R1"), 0), Some((ev("R1"), ev("L1"))));
        assert_eq!(slide(ev("X1"), ev("X3"), 1), None);
    }

    fn replay(start: &[FrontEvent], path: &[SlideStep]) -> Vec<FrontEvent> {
        let mut w = start.to_vec();
        for &s in path {
            assert!(apply_slide(&mut w, s));
        }
        w
    }

    fn words(s: &str) -> Vec<FrontEvent> {
        parse_front(s).unwrap().events().to_vec()
    }

    #[test]
    fn canonical_form_is_class_invariant() {
        let class = ["L1 L3 R3 R1", "L1 L1 R3 R1", "L1 L1 R1 R1", "L1 R1 L1 R1"];
        let (want, _) = canonical_form(&words(class[0]));
        let text: Vec<String> = want.iter().map(|e| e.to_string()).collect();
        assert_eq!(text.join(" "), "L1 L1 R1 R1");
        for w in class {
            let start = words(w);
            let (got, path) = canonical_form(&start);
            assert_eq!(got, want, "{w}");
            assert_eq!(replay(&start, &path), got);
            assert_eq!(replay(&got, &reverse_path(&start, &path)), start);
        }
    }

    #[test]
    fn greedy_fallback_handles_ties() {
        let mut swaps = Vec::new();
        let start = words("L1 L3 R3 R1");
        let got = settle(start.clone(), 0, &mut swaps);
        let text: Vec<String> = got.iter().map(|e| e.to_string()).collect();
        assert_eq!(text.join(" "), "L1 L1 R1 R1");
        let path: Vec<SlideStep> = swaps.into_iter().map(|p| (p, 0)).collect();
        assert_eq!(replay(&start, &path), got);
    }
}
