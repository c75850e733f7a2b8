//! Breadth-first search for move scripts between two fronts.
//!
//! States are fronts in far-commutation canonical form, expanded at every
//! word of their class so that saddle sites hidden by the normal form are
//! still found. Only exact steps are explored: isotopies, births and
//! orientation-coherent saddles.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use super::rewrite::SlideClass;
use super::{
    apply_move, canonical_form, enumerate_moves, reverse_path, saddle_is_coherent, verify_script,
    CobordismScript, MoveKind, MoveSite, SlideStep,
};
use crate::front::{FrontDiagram, FrontEvent, Orientation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Maximum number of non-commutation moves.
    pub max_depth: usize,
    pub max_states: usize,
    /// States with longer words are not expanded.
    pub max_events: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_depth: 4,
            max_states: 200_000,
            max_events: 16,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Found,
    /// Every state within the depth and length limits was explored.
    NotFoundWithinBudget,
    /// The state cap stopped the search early.
    BudgetExceeded,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub script: Option<CobordismScript>,
    pub states: usize,
    /// Number of non-commutation moves in the script, or the last depth reached.
    pub depth: usize,
}

type Key = (Vec<FrontEvent>, Vec<Orientation>);

struct Node {
    front: FrontDiagram,
    parent: Option<usize>,
    /// The move from the parent, followed by commutations to canonical form.
    steps: Vec<MoveSite>,
}

fn commute_steps(swaps: &[SlideStep]) -> impl Iterator<Item = MoveSite> + '_ {
    swaps
        .iter()
        .map(|&(p, v)| MoveSite::new(MoveKind::FarCommute, p, v))
}

/// Brings `d` to canonical form, threading orientations through each swap.
fn canonicalize(d: &FrontDiagram) -> (FrontDiagram, Vec<SlideStep>) {
    let (_, swaps) = canonical_form(d.events());
    let mut cur = d.clone();
    for s in commute_steps(&swaps) {
        cur = apply_move(&cur, s).expect("canonical swaps commute");
    }
    (cur, swaps)
}

fn key(d: &FrontDiagram) -> Key {
    (d.events().to_vec(), d.orientations().to_vec())
}

/// Slides from a word in an already explored class to that class's least word.
fn to_least(
    child: &[FrontEvent],
    memo: &mut HashMap<Vec<FrontEvent>, (usize, usize)>,
    classes: &mut Vec<SlideClass>,
) -> Vec<SlideStep> {
    if let Some(&(c, j)) = memo.get(child) {
        let class = &classes[c];
        let mut path = reverse_path(&class.words[0], &class.path_to(j));
        path.extend(class.path_to(class.least()));
        return path;
    }
    match SlideClass::explore(child) {
        Some(class) => {
            let path = class.path_to(class.least());
            for (j, w) in class.words.iter().enumerate() {
                memo.insert(w.clone(), (classes.len(), j));
            }
            classes.push(class);
            path
        }
        None => canonical_form(child).1,
    }
}

/// Every non-commutation move applied at every word of the class of `d`,
/// each result brought to canonical form. Within one expansion the first
/// route to a canonical front wins.
fn successors(d: &FrontDiagram, budget: &SearchBudget) -> Vec<(FrontDiagram, Vec<MoveSite>)> {
    let members: Vec<(FrontDiagram, Vec<SlideStep>)> = match SlideClass::explore(d.events()) {
        Some(class) => {
            let mut fronts: Vec<FrontDiagram> = Vec::with_capacity(class.words.len());
            for i in 0..class.words.len() {
                let f = match class.parent(i) {
                    None => d.clone(),
                    Some((prev, (p, v))) => {
                        apply_move(&fronts[prev], MoveSite::new(MoveKind::FarCommute, p, v))
                            .expect("class slides apply")
                    }
                };
                fronts.push(f);
            }
            fronts
                .into_iter()
                .enumerate()
                .map(|(i, f)| (f, class.path_to(i)))
                .collect()
        }
        None => vec![(d.clone(), Vec::new())],
    };
    let mut memo = HashMap::new();
    let mut classes = Vec::new();
    let mut local: HashSet<Key> = HashSet::new();
    let mut out = Vec::new();
    for (member, path) in &members {
        for s in enumerate_moves(member) {
            if s.kind == MoveKind::FarCommute
                || (s.kind == MoveKind::SaddleUp && !saddle_is_coherent(member, s.index))
            {
                continue;
            }
            let Ok(next) = apply_move(member, s) else {
                continue;
            };
            if next.len() > budget.max_events {
                continue;
            }
            let swaps = to_least(next.events(), &mut memo, &mut classes);
            let mut canon = next;
            for c in commute_steps(&swaps) {
                canon = apply_move(&canon, c).expect("class slides apply");
            }
            if !local.insert(key(&canon)) {
                continue;
            }
            let mut steps: Vec<MoveSite> = commute_steps(path).collect();
            steps.push(s);
            steps.extend(commute_steps(&swaps));
            out.push((canon, steps));
        }
    }
    out
}

/// Searches for a script from `from` to a front with the same event word
/// as `to`. Deterministic for a fixed budget regardless of thread count.
pub fn search_cobordism(
    from: &FrontDiagram,
    to: &FrontDiagram,
    budget: SearchBudget,
) -> SearchOutcome {
    let (start, start_swaps) = canonicalize(from);
    let (target_word, target_swaps) = canonical_form(to.events());
    let back_to_target = reverse_path(to.events(), &target_swaps);

    let mut nodes = vec![Node {
        front: start.clone(),
        parent: None,
        steps: commute_steps(&start_swaps).collect(),
    }];
    let mut seen: HashSet<Key> = HashSet::from([key(&start)]);
    let mut frontier = vec![0usize];
    let mut depth = 0;

    let finish = |nodes: &[Node], at: usize, depth: usize| -> SearchOutcome {
        let mut chain = Vec::new();
        let mut cur = Some(at);
        while let Some(i) = cur {
            chain.push(i);
            cur = nodes[i].parent;
        }
        let mut steps: Vec<MoveSite> = chain
            .iter()
            .rev()
            .flat_map(|&i| nodes[i].steps.iter().copied())
            .collect();
        steps.extend(commute_steps(&back_to_target));
        let script = CobordismScript::new(from.clone(), steps);
        let report = verify_script(&script).expect("search only records applicable moves");
        debug_assert_eq!(report.top.events(), to.events());
        SearchOutcome {
            status: SearchStatus::Found,
            script: Some(script),
            states: nodes.len(),
            depth,
        }
    };

    if start.events() == target_word.as_slice() {
        return finish(&nodes, 0, 0);
    }
    while !frontier.is_empty() && depth < budget.max_depth {
        depth += 1;
        let expanded: Vec<Vec<(FrontDiagram, Vec<MoveSite>)>> = frontier
            .par_iter()
            .map(|&i| successors(&nodes[i].front, &budget))
            .collect();
        let mut next = Vec::new();
        for (&parent, children) in frontier.iter().zip(expanded) {
            for (front, steps) in children {
                if !seen.insert(key(&front)) {
                    continue;
                }
                let hit = front.events() == target_word.as_slice();
                nodes.push(Node {
                    front,
                    parent: Some(parent),
                    steps,
                });
                let id = nodes.len() - 1;
                if hit {
                    return finish(&nodes, id, depth);
                }
                if nodes.len() >= budget.max_states {
                    return SearchOutcome {
                        status: SearchStatus::BudgetExceeded,
                        script: None,
                        states: nodes.len(),
                        depth,
                    };
                }
                next.push(id);
            }
        }
        frontier = next;
    }
    SearchOutcome {
        status: SearchStatus::NotFoundWithinBudget,
        script: None,
        states: nodes.len(),
        depth,
    }
}
