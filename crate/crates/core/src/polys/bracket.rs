//! Kauffman bracket and Jones polynomial.

use dashmap::DashMap;
use rayon::prelude::*;

use super::{bracket_loop, relabel, smooth, Crossings, EngineConfig, PolyError, A_PAIRS, B_PAIRS};
use crate::laurent::LaurentPoly1;
use crate::pd::PlanarDiagram;

/// Crossings expanded up front before handing subproblems to the pool.
const SPLIT_DEPTH: usize = 4;

type Memo = DashMap<Crossings, LaurentPoly1>;

/// Bracket of a crossing list with no free loops; the empty list is 1.
fn bracket_rec(crossings: &[[u32; 4]], memo: &Memo) -> LaurentPoly1 {
    if crossings.is_empty() {
        return LaurentPoly1::one();
    }
    let key = relabel(crossings);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut out = LaurentPoly1::zero();
    for (pairs, a_exp) in [(A_PAIRS, 1), (B_PAIRS, -1)] {
        let (rest, loops) = smooth(&key, 0, pairs);
        let sub = &bracket_rec(&rest, memo) * &bracket_loop().pow(loops);
        out += &sub.scale(a_exp, 1);
    }
    memo.insert(key, out.clone());
    out
}

/// Expands the first `depth` crossings, returning `(A-exponent, loops, rest)`.
fn split(crossings: &[[u32; 4]], depth: usize) -> Vec<(i32, u32, Crossings)> {
    let mut states = vec![(0, 0, crossings.to_vec())];
    for _ in 0..depth.min(crossings.len()) {
        states = states
            .into_iter()
            .flat_map(|(e, l, c)| {
                [(A_PAIRS, 1), (B_PAIRS, -1)].map(|(pairs, de)| {
                    let (rest, loops) = smooth(&c, 0, pairs);
                    (e + de, l + loops, rest)
                })
            })
            .collect();
    }
    states
}

pub fn kauffman_bracket(pd: &PlanarDiagram) -> Result<LaurentPoly1, PolyError> {
    kauffman_bracket_with(pd, &EngineConfig::default())
}

/// Bracket with `<O> = -A^2 - A^-2` and the empty diagram equal to 1.
pub fn kauffman_bracket_with(
    pd: &PlanarDiagram,
    cfg: &EngineConfig,
) -> Result<LaurentPoly1, PolyError> {
    cfg.check(pd)?;
    let memo = Memo::new();
    let crossings = pd.crossings();
    let core = if cfg.threads <= 1 {
        bracket_rec(crossings, &memo)
    } else {
        let states = split(crossings, SPLIT_DEPTH);
        let parts: Vec<LaurentPoly1> = cfg.run(|| {
            states
                .par_iter()
                .map(|(e, l, rest)| {
                    (&bracket_rec(rest, &memo) * &bracket_loop().pow(*l)).scale(*e, 1)
                })
                .collect()
        });
        parts.iter().fold(LaurentPoly1::zero(), |acc, p| &acc + p)
    };
    Ok(&core * &bracket_loop().pow(pd.free_loops()))
}

pub fn jones(pd: &PlanarDiagram) -> Result<LaurentPoly1, PolyError> {
    jones_with(pd, &EngineConfig::default())
}

/// Jones polynomial in the variable `A`, with `t = A^-4`; the unknot is 1.
pub fn jones_with(pd: &PlanarDiagram, cfg: &EngineConfig) -> Result<LaurentPoly1, PolyError> {
    if pd.crossing_count() == 0 && pd.free_loops() == 0 {
        return Err(PolyError::EmptyDiagram);
    }
    let bracket = kauffman_bracket_with(pd, cfg)?;
    let w = pd.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let normalized = bracket.scale(-3 * w, sign);
    Ok(normalized
        .exact_div(&bracket_loop())
        .expect("bracket of a nonempty diagram is divisible by the loop value"))
}
