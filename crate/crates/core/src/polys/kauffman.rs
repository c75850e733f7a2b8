//! Two-variable Kauffman polynomial in Dubrovnik form.
//!
//! `D` is the regular-isotopy invariant with
//! `D(K) - D(K') = z (D(K_A) - D(K_B))` for a crossing `K` and its switch
//! `K'`, curls worth `a^{±1}`, the unknot equal to 1 and a split circle worth
//! `1 + (a - a^-1) z^-1`. A diagram is reduced by switching, in traversal
//! order, every crossing first met from below; the fully switched diagram is
//! descending and therefore a framed unlink.

use std::collections::BTreeMap;

use dashmap::DashMap;
use rayon::prelude::*;

use super::{dubrovnik_loop, relabel, smooth, EngineConfig, PolyError, A_PAIRS, B_PAIRS};
use crate::laurent::LaurentPoly2;
use crate::pd::PlanarDiagram;

type Memo = DashMap<Vec<[u32; 4]>, LaurentPoly2>;

fn a_power(e: i32) -> LaurentPoly2 {
    LaurentPoly2::monomial((e, 0), 1)
}

fn z() -> LaurentPoly2 {
    LaurentPoly2::monomial((0, 1), 1)
}

/// Value of a crossing list together with `loops` split circles.
fn value(
    crossings: &[[u32; 4]],
    loops: u32,
    memo: &Memo,
    parallel: bool,
) -> Result<LaurentPoly2, PolyError> {
    let (core, kinks, loops) = strip_kinks(crossings, loops);
    if core.is_empty() {
        if loops == 0 {
            return Err(PolyError::EmptyDiagram);
        }
        return Ok(&a_power(kinks) * &dubrovnik_loop().pow(loops - 1));
    }
    let inner = reduce(&core, memo, parallel)?;
    Ok(&(&inner * &dubrovnik_loop().pow(loops)) * &a_power(kinks))
}

/// Removes curls one at a time. Returns the remaining crossings, the net
/// curl exponent of `a`, and the updated loop count.
fn strip_kinks(crossings: &[[u32; 4]], mut loops: u32) -> (Vec<[u32; 4]>, i32, u32) {
    let mut cur = crossings.to_vec();
    let mut exp = 0;
    loop {
        let hit = cur.iter().enumerate().find_map(|(i, x)| {
            if x[0] == x[1] || x[2] == x[3] {
                Some((i, A_PAIRS, 1))
            } else if x[1] == x[2] || x[3] == x[0] {
                Some((i, B_PAIRS, -1))
            } else {
                None
            }
        });
        let Some((i, pairs, e)) = hit else {
            return (cur, exp, loops);
        };
        let (rest, closed) = smooth(&cur, i, pairs);
        // One of the closed circles is the curl itself.
        loops += closed - 1;
        exp += e;
        cur = rest;
    }
}

struct Traversal {
    /// Crossings first met as the under strand, in traversal order.
    bad: Vec<usize>,
    components: u32,
    /// Entry slots `(under, over)` of each crossing along the traversal.
    entries: Vec<(usize, usize)>,
}

fn traverse(crossings: &[[u32; 4]]) -> Traversal {
    let mut darts: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
    for (i, x) in crossings.iter().enumerate() {
        for (s, &e) in x.iter().enumerate() {
            darts.entry(e).or_default().push((i, s));
        }
    }
    let n = crossings.len();
    let mut seen_edge: BTreeMap<u32, bool> = darts.keys().map(|&e| (e, false)).collect();
    let mut first_seen = vec![false; n];
    let mut under = vec![usize::MAX; n];
    let mut over = vec![usize::MAX; n];
    let mut bad = Vec::new();
    let mut components = 0;
    let labels: Vec<u32> = darts.keys().copied().collect();
    for e in labels {
        if seen_edge[&e] {
            continue;
        }
        components += 1;
        let start = darts[&e][0];
        seen_edge.insert(e, true);
        let (mut x, mut s) = start;
        loop {
            if s % 2 == 0 {
                under[x] = s;
            } else {
                over[x] = s;
            }
            if !first_seen[x] {
                first_seen[x] = true;
                if s % 2 == 0 {
                    bad.push(x);
                }
            }
            let out = (s + 2) % 4;
            let edge = crossings[x][out];
            seen_edge.insert(edge, true);
            let ends = &darts[&edge];
            let next = if ends[0] == (x, out) {
                ends[1]
            } else {
                ends[0]
            };
            if next == start {
                break;
            }
            (x, s) = next;
        }
    }
    Traversal {
        bad,
        components,
        entries: under.into_iter().zip(over).collect(),
    }
}

fn switched(x: [u32; 4]) -> [u32; 4] {
    [x[1], x[2], x[3], x[0]]
}

/// `D` of a nonempty, curl-free crossing list without free circles.
fn reduce(crossings: &[[u32; 4]], memo: &Memo, parallel: bool) -> Result<LaurentPoly2, PolyError> {
    let key = relabel(crossings);
    if let Some(v) = memo.get(&key) {
        return Ok(v.clone());
    }
    let t = traverse(&key);
    let n = key.len();

    let mut stages = Vec::with_capacity(t.bad.len());
    let mut cur = key.clone();
    for &j in &t.bad {
        stages.push((cur.clone(), j));
        cur[j] = switched(cur[j]);
    }

    let check = traverse(&cur);
    if !check.bad.is_empty() {
        return Err(PolyError::NonterminationGuard(format!(
            "switched diagram still has {} ascending crossings",
            check.bad.len()
        )));
    }
    let writhe: i32 = check
        .entries
        .iter()
        .map(|&(u, o)| if o == (u + 3) % 4 { 1 } else { -1 })
        .sum();
    let mut out = &a_power(writhe) * &dubrovnik_loop().pow(t.components - 1);

    let term = |(diagram, j): &(Vec<[u32; 4]>, usize)| -> Result<LaurentPoly2, PolyError> {
        let (ka, la) = smooth(diagram, *j, A_PAIRS);
        let (kb, lb) = smooth(diagram, *j, B_PAIRS);
        if ka.len() >= n || kb.len() >= n {
            return Err(PolyError::NonterminationGuard(format!(
                "smoothing kept {n} crossings"
            )));
        }
        let diff = &value(&ka, la, memo, false)? - &value(&kb, lb, memo, false)?;
        Ok(&diff * &z())
    };
    let terms: Vec<LaurentPoly2> = if parallel {
        stages.par_iter().map(term).collect::<Result<_, _>>()?
    } else {
        stages.iter().map(term).collect::<Result<_, _>>()?
    };
    for t in &terms {
        out += t;
    }
    memo.insert(key, out.clone());
    Ok(out)
}

pub fn dubrovnik(pd: &PlanarDiagram) -> Result<LaurentPoly2, PolyError> {
    dubrovnik_with(pd, &EngineConfig::default())
}

/// The unnormalized regular-isotopy invariant `D`.
pub fn dubrovnik_with(pd: &PlanarDiagram, cfg: &EngineConfig) -> Result<LaurentPoly2, PolyError> {
    cfg.check(pd)?;
    let memo = Memo::new();
    let parallel = cfg.threads > 1;
    cfg.run(|| value(pd.crossings(), pd.free_loops(), &memo, parallel))
}

pub fn kauffman_poly(pd: &PlanarDiagram) -> Result<LaurentPoly2, PolyError> {
    kauffman_poly_with(pd, &EngineConfig::default())
}

/// `F = a^-w D`, an invariant of the oriented link.
pub fn kauffman_poly_with(
    pd: &PlanarDiagram,
    cfg: &EngineConfig,
) -> Result<LaurentPoly2, PolyError> {
    let d = dubrovnik_with(pd, cfg)?;
    Ok(&d * &a_power(-pd.writhe()))
}

/// `F` rewritten in the convention of the usual knot tables, where the
/// skein relation reads `L(K) + L(K') = z (L(K_A) + L(K_B))`; the two agree
/// after `a -> i a`, `z -> -i z` up to the sign `(-1)^(components - 1)`.
pub fn to_table_convention(f: &LaurentPoly2, components: usize) -> LaurentPoly2 {
    let global = if components % 2 == 1 { 1 } else { -1 };
    LaurentPoly2::from_terms(f.terms().map(|((a, z), c)| {
        let half = (a - z).div_euclid(2);
        let sign = if half.rem_euclid(2) == 0 { 1 } else { -1 };
        ((a, z), c * sign * global)
    }))
}

pub fn tb_upper_bound(pd: &PlanarDiagram) -> Result<i64, PolyError> {
    tb_upper_bound_with(pd, &EngineConfig::default())
}

/// `-(max a-degree of F) - 1`, an upper bound on tb of any Legendrian
/// representative whose front resolves to `pd`.
pub fn tb_upper_bound_with(pd: &PlanarDiagram, cfg: &EngineConfig) -> Result<i64, PolyError> {
    let f = kauffman_poly_with(pd, cfg)?;
    let max = f.max_a_degree().expect("F of a nonempty link is nonzero");
    Ok(-(max as i64) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_and_unlink() {
        assert_eq!(
            kauffman_poly(&PlanarDiagram::unlink(1)).unwrap(),
            LaurentPoly2::one()
        );
        assert_eq!(
            kauffman_poly(&PlanarDiagram::unlink(2)).unwrap(),
            dubrovnik_loop()
        );
        assert_eq!(tb_upper_bound(&PlanarDiagram::unlink(1)).unwrap(), -1);
    }

    #[test]
    fn curls() {
        let pos = PlanarDiagram::new(vec![[1, 1, 2, 2]], 0).unwrap();
        assert_eq!(pos.writhe(), 1);
        assert_eq!(dubrovnik(&pos).unwrap(), a_power(1));
        assert_eq!(kauffman_poly(&pos).unwrap(), LaurentPoly2::one());
    }
}
