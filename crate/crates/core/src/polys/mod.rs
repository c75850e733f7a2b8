//! Skein polynomial engines.
//!
//! Both engines work on bare crossing tuples so that intermediate diagrams
//! (smoothings, crossing switches) need not carry a consistent orientation.
//! Sub-diagrams are memoized on their first-use relabelling.

mod bracket;
mod kauffman;

use std::collections::HashMap;

use thiserror::Error;

use crate::laurent::{LaurentPoly1, LaurentPoly2};
use crate::pd::PlanarDiagram;

pub use bracket::{jones, jones_with, kauffman_bracket, kauffman_bracket_with};
pub use kauffman::{
    dubrovnik, dubrovnik_with, kauffman_poly, kauffman_poly_with, tb_upper_bound,
    tb_upper_bound_with, to_table_convention,
};

pub const DEFAULT_CROSSING_CAP: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("diagram has {crossings} crossings, above the cap of {cap}")]
    CrossingCapExceeded { crossings: usize, cap: usize },
    #[error("reduction did not decrease: {0}")]
    NonterminationGuard(String),
    #[error("the empty diagram has no normalized invariant")]
    EmptyDiagram,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    pub crossing_cap: usize,
    /// 1 runs on the calling thread; larger values fan out the top of the
    /// recursion onto a dedicated pool.
    pub threads: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            crossing_cap: DEFAULT_CROSSING_CAP,
            threads: 1,
        }
    }
}

impl EngineConfig {
    fn check(&self, pd: &PlanarDiagram) -> Result<(), PolyError> {
        if pd.crossing_count() > self.crossing_cap {
            return Err(PolyError::CrossingCapExceeded {
                crossings: pd.crossing_count(),
                cap: self.crossing_cap,
            });
        }
        Ok(())
    }

    fn run<T: Send>(&self, job: impl FnOnce() -> T + Send) -> T {
        if self.threads <= 1 {
            return job();
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .expect("thread pool")
            .install(job)
    }
}

pub(crate) type Crossings = Vec<[u32; 4]>;

/// Removes crossing `idx` and joins its slots in the two given pairs.
/// Returns the remaining crossings and the number of closed loops.
pub(crate) fn smooth(
    crossings: &[[u32; 4]],
    idx: usize,
    pairs: [(usize, usize); 2],
) -> (Crossings, u32) {
    let x = crossings[idx];
    let mut rest: Crossings = crossings
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != idx)
        .map(|(_, c)| *c)
        .collect();
    let mut pending = pairs.map(|(s, t)| (x[s], x[t]));
    let mut loops = 0;
    for k in 0..2 {
        let (u, v) = pending[k];
        if u == v {
            loops += 1;
            continue;
        }
        for c in rest.iter_mut() {
            for e in c.iter_mut() {
                if *e == v {
                    *e = u;
                }
            }
        }
        for p in pending.iter_mut().skip(k + 1) {
            if p.0 == v {
                p.0 = u;
            }
            if p.1 == v {
                p.1 = u;
            }
        }
    }
    (rest, loops)
}

pub(crate) const A_PAIRS: [(usize, usize); 2] = [(0, 1), (2, 3)];
pub(crate) const B_PAIRS: [(usize, usize); 2] = [(0, 3), (1, 2)];

/// Relabels edges in first-use order, keeping crossing order.
pub(crate) fn relabel(crossings: &[[u32; 4]]) -> Crossings {
    let mut map: HashMap<u32, u32> = HashMap::new();
    crossings
        .iter()
        .map(|x| {
            x.map(|e| {
                let next = map.len() as u32 + 1;
                *map.entry(e).or_insert(next)
            })
        })
        .collect()
}

/// The loop value `-A^2 - A^-2` of the bracket.
pub fn bracket_loop() -> LaurentPoly1 {
    LaurentPoly1::from_terms([(2, -1), (-2, -1)])
}

/// The loop value `1 + (a - a^-1) z^-1` of the Dubrovnik polynomial.
pub fn dubrovnik_loop() -> LaurentPoly2 {
    LaurentPoly2::from_terms([((0, 0), 1), ((1, -1), 1), ((-1, -1), -1)])
}
