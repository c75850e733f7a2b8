//! Seeded generators for fronts and decomposable fillings, used by the
//! property suites and the `random` example.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::front::{EventKind, FrontDiagram, FrontEvent, Orientation};
use crate::moves::{
    apply_move, enumerate_moves, saddle_is_coherent, CobordismScript, MoveKind, MoveSite,
};

/// A valid front with at most `max_events` events and random orientations. May be empty only when `max_events < 2`.
pub fn random_front<R: Rng>(rng: &mut R, max_events: usize) -> FrontDiagram {
    if max_events < 2 {
        return FrontDiagram::empty();
    }
    let target = rng.gen_range(2..=max_events);
    let mut events = Vec::new();
    let mut count: u32 = 0;
    loop {
        let closing = count as usize / 2;
        let room = target.saturating_sub(events.len());
        if room <= closing {
            break;
        }
        let mut options = Vec::new();
        if room >= closing + 2 {
            options.extend((1..=count + 1).map(FrontEvent::left));
        }
        if count >= 2 {
            options.extend((1..count).map(FrontEvent::cross));
            options.extend((1..count).map(FrontEvent::right));
        }
        let Some(&e) = options.choose(rng) else { break };
        count = (count as i64 + e.kind.count_delta()) as u32;
        events.push(e);
    }
    while count > 0 {
        let row = rng.gen_range(1..count);
        events.push(FrontEvent::right(row));
        count -= 2;
    }
    let skeleton = FrontDiagram::new(events).expect("generator keeps the strand count valid");
    let orientations = (0..skeleton.component_count())
        .map(|_| {
            if rng.gen_bool(0.5) {
                Orientation::Forward
            } else {
                Orientation::Reversed
            }
        })
        .collect();
    FrontDiagram::with_orientations(skeleton.events().to_vec(), orientations)
        .expect("one orientation per component")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FillingParams {
    /// Number of macro steps after the first Birth.
    pub steps: usize,
    /// Moves that lengthen the word are skipped beyond this length.
    pub max_events: usize,
}

impl Default for FillingParams {
    fn default() -> Self {
        Self {
            steps: 8,
            max_events: 14,
        }
    }
}

/// Coherent saddles at which two different components meet.
fn merging_saddles(d: &FrontDiagram) -> Vec<MoveSite> {
    (0..d.len().saturating_sub(1))
        .map(|p| MoveSite::new(MoveKind::SaddleUp, p, 0))
        .filter(|s| {
            let e = d.events();
            e[s.index].kind == EventKind::RightCusp
                && e[s.index + 1] == FrontEvent::left(e[s.index].row)
                && saddle_is_coherent(d, s.index)
        })
        .filter(|s| apply_move(d, *s).is_ok_and(|n| n.component_count() < d.component_count()))
        .collect()
}

fn isotopies(d: &FrontDiagram, max_events: usize) -> Vec<MoveSite> {
    enumerate_moves(d)
        .into_iter()
        .filter(|s| s.kind.is_isotopy())
        .filter(|s| {
            let grows = matches!(
                s.kind,
                MoveKind::R1a | MoveKind::R1b | MoveKind::R2a | MoveKind::R2b
            );
            !grows || d.len() + 2 <= max_events
        })
        .collect()
}

struct Builder {
    cur: FrontDiagram,
    steps: Vec<MoveSite>,
}

impl Builder {
    fn take(&mut self, site: MoveSite) {
        self.cur = apply_move(&self.cur, site).expect("generated site applies");
        self.steps.push(site);
    }

    fn mark(&self) -> (FrontDiagram, usize) {
        (self.cur.clone(), self.steps.len())
    }

    fn rollback(&mut self, (cur, len): (FrontDiagram, usize)) {
        self.cur = cur;
        self.steps.truncate(len);
    }
}

/// A Birth right next to an existing cusp, merged straight away.
fn finger<R: Rng>(rng: &mut R, b: &mut Builder) {
    let e = b.cur.events().to_vec();
    let mut births = Vec::new();
    for k in 0..=e.len() {
        if k > 0 && e[k - 1].kind == EventKind::RightCusp {
            births.push(MoveSite::new(MoveKind::Birth, k, e[k - 1].row));
        }
        if k < e.len() && e[k].kind == EventKind::LeftCusp {
            births.push(MoveSite::new(MoveKind::Birth, k, e[k].row));
        }
    }
    births.shuffle(rng);
    for birth in births {
        let mark = b.mark();
        b.take(birth);
        if let Some(&saddle) = merging_saddles(&b.cur).choose(rng) {
            b.take(saddle);
            return;
        }
        b.rollback(mark);
    }
}

/// Random isotopies until a merging saddle shows up, then that saddle.
fn walk_and_merge<R: Rng>(rng: &mut R, b: &mut Builder, max_events: usize, limit: usize) -> bool {
    for _ in 0..limit {
        if let Some(&saddle) = merging_saddles(&b.cur).choose(rng) {
            b.take(saddle);
            return true;
        }
        match isotopies(&b.cur, max_events).choose(rng) {
            Some(&s) => b.take(s),
            None => return false,
        }
    }
    false
}

fn splitting_saddles(d: &FrontDiagram) -> Vec<MoveSite> {
    (0..d.len().saturating_sub(1))
        .map(|p| MoveSite::new(MoveKind::SaddleUp, p, 0))
        .filter(|s| {
            let e = d.events();
            e[s.index].kind == EventKind::RightCusp
                && e[s.index + 1] == FrontEvent::left(e[s.index].row)
                && saddle_is_coherent(d, s.index)
        })
        .filter(|s| apply_move(d, *s).is_ok_and(|n| n.component_count() > d.component_count()))
        .collect()
}

/// Isotopies until a coherent splitting saddle appears, the split, then a
/// walk back to a merge: one more handle. Rolled back if either walk fails.
fn handle<R: Rng>(rng: &mut R, b: &mut Builder, max_events: usize) {
    let mark = b.mark();
    for _ in 0..30 {
        if let Some(&split) = splitting_saddles(&b.cur).choose(rng) {
            b.take(split);
            if walk_and_merge(rng, b, max_events, 40) {
                return;
            }
            break;
        }
        match isotopies(&b.cur, max_events).choose(rng) {
            Some(&s) => b.take(s),
            None => break,
        }
    }
    b.rollback(mark);
}

/// A decomposable filling of a knot, built from Births, coherent saddles and
/// isotopies starting at the empty front. Every intermediate macro step ends
/// on a knot, so the surface is connected.
pub fn random_filling<R: Rng>(rng: &mut R, params: FillingParams) -> CobordismScript {
    let mut b = Builder {
        cur: FrontDiagram::empty(),
        steps: Vec::new(),
    };
    b.take(MoveSite::new(MoveKind::Birth, 0, 1));
    for _ in 0..params.steps {
        let roll: f64 = rng.gen();
        if roll < 0.3 {
            finger(rng, &mut b);
        } else if roll < 0.55 {
            handle(rng, &mut b, params.max_events);
        } else if let Some(&s) = isotopies(&b.cur, params.max_events).choose(rng) {
            b.take(s);
        }
    }
    CobordismScript::new(FrontDiagram::empty(), b.steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::{verify_script, Genus};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn fronts_respect_the_length_cap() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let d = random_front(&mut rng, 30);
            assert!(d.len() <= 30 && !d.is_empty());
        }
    }

    #[test]
    fn same_seed_same_front() {
        let a = random_front(&mut ChaCha8Rng::seed_from_u64(9), 20);
        let b = random_front(&mut ChaCha8Rng::seed_from_u64(9), 20);
        assert_eq!(a, b);
    }

    #[test]
    fn fillings_end_on_a_knot() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut handles = 0;
        for _ in 0..30 {
            let s = random_filling(&mut rng, FillingParams::default());
            let r = verify_script(&s).unwrap();
            assert_eq!(r.components_top, 1);
            assert!(r.ok, "{:?}", r.diagnostics);
            if r.genus != Genus::Integer(0) {
                handles += 1;
            }
        }
        assert!(handles > 0);
    }
}
