//! Filling consistency checks and non-collarability certificates.
//!
//! Verdicts are three-valued and never assert collarability: when no rule
//! fires the answer is [`VerdictStatus::Consistent`].
//!
//! A Birth is the capping disk near a local minimum, which is collarable;
//! accordingly no rule here ever fires on a script made of Births alone.

use std::fmt;

use thiserror::Error;

use crate::braid::{
    braid_closure_pd, closure_components, expand, self_linking, surface_data, BraidWord,
    QPFactorization, SurfaceData,
};
use crate::polys::{tb_upper_bound_with, EngineConfig, PolyError};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SmoothType {
    pub slice_genus: Option<u32>,
    /// Maximal tb over Legendrian representatives of the smooth type.
    pub tb_upper_bound: Option<i64>,
}

/// A claimed oriented exact filling of genus `genus` for a Legendrian knot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FillingClaim {
    pub tb: i64,
    pub rot: i64,
    pub genus: u32,
    pub smooth: SmoothType,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CollarScenario {
    pub filling_genus_if_collared: u32,
    pub concave_side_genus: Option<u32>,
    pub tb_upper_bound: Option<i64>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ObstructError {
    #[error("a collar scenario needs a concave-side genus or a tb bound")]
    EmptyScenario,
    #[error("not a disk certificate: n = {n}, k = {k}, closure is {}", if *.is_knot { "a knot" } else { "a link" })]
    NotADisk { n: usize, k: usize, is_knot: bool },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl CollarScenario {
    pub fn new(
        filling_genus_if_collared: u32,
        concave_side_genus: Option<u32>,
        tb_upper_bound: Option<i64>,
    ) -> Result<Self, ObstructError> {
        if concave_side_genus.is_none() && tb_upper_bound.is_none() {
            return Err(ObstructError::EmptyScenario);
        }
        Ok(Self {
            filling_genus_if_collared,
            concave_side_genus,
            tb_upper_bound,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    Consistent,
    Violation,
    NonCollarable,
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictStatus::Consistent => "Consistent",
            VerdictStatus::Violation => "Violation",
            VerdictStatus::NonCollarable => "NonCollarable",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    RotationNonzero,
    TbNotGenus,
    GenusNotSliceGenus,
    TbNotMaximal,
    FourBallGenusMismatch,
    TbBoundBelowFilling,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::RotationNonzero => "rot-nonzero",
            Rule::TbNotGenus => "tb-not-2g-1",
            Rule::GenusNotSliceGenus => "genus-not-slice-genus",
            Rule::TbNotMaximal => "tb-not-maximal",
            Rule::FourBallGenusMismatch => "four-ball-genus-mismatch",
            Rule::TbBoundBelowFilling => "tb-bound-below-filling",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reason {
    pub rule: Rule,
    pub message: String,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub reasons: Vec<Reason>,
}

impl Verdict {
    fn from_reasons(failing: VerdictStatus, reasons: Vec<Reason>) -> Self {
        let status = if reasons.is_empty() {
            VerdictStatus::Consistent
        } else {
            failing
        };
        Self { status, reasons }
    }

    pub fn is_consistent(&self) -> bool {
        self.status == VerdictStatus::Consistent
    }

    pub fn has_rule(&self, rule: Rule) -> bool {
        self.reasons.iter().any(|r| r.rule == rule)
    }
}

/// Integer with a typographic minus sign.
fn num(x: i64) -> String {
    if x < 0 {
        format!("\u{2212}{}", x.unsigned_abs())
    } else {
        x.to_string()
    }
}

fn genus_tb(g: u32) -> (i64, String) {
    (2 * g as i64 - 1, format!("2·{g}\u{2212}1"))
}

/// Checks a filling claim against `rot = 0`, `tb = 2g - 1`, `g = g_s` and
/// `tb = TB`, naming every clause that fails.
pub fn check_filling(c: &FillingClaim) -> Verdict {
    let mut reasons = Vec::new();
    if c.rot != 0 {
        reasons.push(Reason {
            rule: Rule::RotationNonzero,
            message: format!("rot {} ≠ 0", num(c.rot)),
        });
    }
    let (want, formula) = genus_tb(c.genus);
    if c.tb != want {
        reasons.push(Reason {
            rule: Rule::TbNotGenus,
            message: format!("tb {} ≠ {} = {formula}", num(c.tb), num(want)),
        });
    }
    if let Some(gs) = c.smooth.slice_genus {
        if gs != c.genus {
            reasons.push(Reason {
                rule: Rule::GenusNotSliceGenus,
                message: format!("filling genus {} ≠ 4-ball genus {gs}", c.genus),
            });
        }
    }
    if let Some(max) = c.smooth.tb_upper_bound {
        if c.tb != max {
            reasons.push(Reason {
                rule: Rule::TbNotMaximal,
                message: format!("tb {} ≠ {} = maximal tb", num(c.tb), num(max)),
            });
        }
    }
    Verdict::from_reasons(VerdictStatus::Violation, reasons)
}

/// A collared slice would bound a filling of genus `filling_genus_if_collared`
/// on the convex side. That is impossible if the concave side forces a
/// different 4-ball genus, or if the tb bound is below `2g - 1`.
pub fn collar_obstruction(s: &CollarScenario) -> Verdict {
    let g = s.filling_genus_if_collared;
    let mut reasons = Vec::new();
    if let Some(concave) = s.concave_side_genus {
        if concave != g {
            reasons.push(Reason {
                rule: Rule::FourBallGenusMismatch,
                message: format!("4-ball genus mismatch: {concave} ≠ {g}"),
            });
        }
    }
    if let Some(bound) = s.tb_upper_bound {
        let (need, formula) = genus_tb(g);
        if bound < need {
            reasons.push(Reason {
                rule: Rule::TbBoundBelowFilling,
                message: format!("tb bound {} < {} = {formula}", num(bound), num(need)),
            });
        }
    }
    Verdict::from_reasons(VerdictStatus::NonCollarable, reasons)
}

/// Every intermediate value of the disk-slice pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskCertificate {
    pub surface: SurfaceData,
    pub word: BraidWord,
    /// Closure permutation, 1-based.
    pub permutation: Vec<usize>,
    pub self_linking: i64,
    pub crossings: usize,
    pub writhe: i32,
    pub tb_bound: i64,
    pub verdict: Verdict,
}

impl DiskCertificate {
    /// `KEY VALUE` pairs in a fixed order.
    pub fn report(&self) -> Vec<(&'static str, String)> {
        let s = &self.surface;
        let join = |xs: &mut dyn Iterator<Item = String>| xs.collect::<Vec<_>>().join(" ");
        let mut out = vec![
            (
                "word",
                join(&mut self.word.letters().iter().map(|g| g.to_string())),
            ),
            ("strands", s.n.to_string()),
            ("factors", s.k.to_string()),
            ("exponent_sum", self.word.exponent_sum().to_string()),
            (
                "permutation",
                join(&mut self.permutation.iter().map(|p| p.to_string())),
            ),
            ("is_knot", s.is_knot.to_string()),
            ("chi", s.chi.to_string()),
            ("is_disk", s.is_disk.to_string()),
            (
                "slice_genus",
                s.slice_genus.map_or("undefined".into(), |g| g.to_string()),
            ),
            ("self_linking", self.self_linking.to_string()),
            ("crossings", self.crossings.to_string()),
            ("writhe", self.writhe.to_string()),
            ("tb_bound", self.tb_bound.to_string()),
            ("filling_genus", "0".into()),
            ("status", self.verdict.status.to_string()),
        ];
        out.extend(
            self.verdict
                .reasons
                .iter()
                .map(|r| ("reason", r.message.clone())),
        );
        out
    }
}

pub fn certify_disk_slice(q: &QPFactorization) -> Result<DiskCertificate, ObstructError> {
    certify_disk_slice_with(q, &EngineConfig::default())
}

/// Runs surface data, closure, Kauffman bound and the collar test with a
/// genus-0 filling.
pub fn certify_disk_slice_with(
    q: &QPFactorization,
    cfg: &EngineConfig,
) -> Result<DiskCertificate, ObstructError> {
    let surface = surface_data(q);
    if !surface.is_disk {
        return Err(ObstructError::NotADisk {
            n: surface.n,
            k: surface.k,
            is_knot: surface.is_knot,
        });
    }
    let word = expand(q);
    let closure = closure_components(&word);
    let pd = braid_closure_pd(&word);
    let tb_bound = tb_upper_bound_with(&pd, cfg)?;
    let scenario = CollarScenario::new(0, None, Some(tb_bound))?;
    Ok(DiskCertificate {
        permutation: closure.permutation.iter().map(|p| p + 1).collect(),
        self_linking: self_linking(&word),
        crossings: pd.crossing_count(),
        writhe: pd.writhe(),
        verdict: collar_obstruction(&scenario),
        surface,
        word,
        tb_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn claim(tb: i64, rot: i64, genus: u32, gs: Option<u32>) -> FillingClaim {
        FillingClaim {
            tb,
            rot,
            genus,
            smooth: SmoothType {
                slice_genus: gs,
                tb_upper_bound: None,
            },
        }
    }

    #[test]
    fn flat_disk_is_consistent() {
        assert!(check_filling(&claim(-1, 0, 0, Some(0))).is_consistent());
    }

    #[test]
    fn each_failed_clause_is_named() {
        let v = check_filling(&claim(-1, 1, 0, Some(0)));
        assert_eq!(v.status, VerdictStatus::Violation);
        assert_eq!(v.reasons.len(), 1);
        assert_eq!(v.reasons[0].message, "rot 1 ≠ 0");

        let v = check_filling(&claim(1, 0, 1, Some(0)));
        assert_eq!(v.reasons.len(), 1);
        assert!(v.has_rule(Rule::GenusNotSliceGenus));

        let mut c = claim(0, -2, 1, None);
        c.smooth.tb_upper_bound = Some(-2);
        let v = check_filling(&c);
        let rules: Vec<Rule> = v.reasons.iter().map(|r| r.rule).collect();
        assert_eq!(
            rules,
            vec![Rule::RotationNonzero, Rule::TbNotGenus, Rule::TbNotMaximal]
        );
        assert_eq!(v.reasons[1].message, "tb 0 ≠ 1 = 2·1−1");
    }

    #[test]
    fn collar_rules() {
        let v = collar_obstruction(&CollarScenario::new(1, Some(0), None).unwrap());
        assert_eq!(v.status, VerdictStatus::NonCollarable);
        assert!(v.reasons[0].message.starts_with("4-ball genus mismatch"));

        let v = collar_obstruction(&CollarScenario::new(0, None, Some(-2)).unwrap());
        assert_eq!(v.reasons[0].message, "tb bound −2 < −1 = 2·0−1");

        let v = collar_obstruction(&CollarScenario::new(0, None, Some(-1)).unwrap());
        assert!(v.is_consistent());
        assert_eq!(
            CollarScenario::new(0, None, None),
            Err(ObstructError::EmptyScenario)
        );
    }

    #[test]
    fn lowering_the_bound_keeps_the_obstruction() {
        for g in 0..4 {
            let mut obstructed = false;
            for bound in (-10..10).rev() {
                let v = collar_obstruction(&CollarScenario::new(g, None, Some(bound)).unwrap());
                if obstructed {
                    assert_eq!(v.status, VerdictStatus::NonCollarable);
                }
                obstructed |= !v.is_consistent();
            }
        }
    }

    #[test]
    fn trivial_disk_and_non_disk() {
        let unknot = QPFactorization::parse("B1\n").unwrap();
        let cert = certify_disk_slice(&unknot).unwrap();
        assert_eq!(cert.tb_bound, -1);
        assert!(cert.verdict.is_consistent());

        let trefoil = QPFactorization::parse("B2\nW ; I 1\nW ; I 1\nW ; I 1\n").unwrap();
        assert!(matches!(
            certify_disk_slice(&trefoil),
            Err(ObstructError::NotADisk { n: 2, k: 3, .. })
        ));
    }
}
