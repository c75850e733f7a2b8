//! Cobordism scripts: a bottom front plus moves read upward.

use std::fmt;

use thiserror::Error;

use super::{apply_move_with, saddle_is_coherent, MoveError, MoveKind, MovePolicy, MoveSite};
use crate::front::{classical_invariants, parse_front, FrontDiagram, FrontError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobordismScript {
    pub bottom: FrontDiagram,
    pub steps: Vec<MoveSite>,
    /// Optional names of the slices; entry `i` names the front after `i` steps.
    pub labels: Vec<Option<String>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScriptError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Front { line: usize, source: FrontError },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("step {index} ({site}): {source}")]
pub struct StepError {
    /// 0-based position of the failing step.
    pub index: usize,
    pub site: MoveSite,
    pub source: MoveError,
}

impl CobordismScript {
    pub fn new(bottom: FrontDiagram, steps: Vec<MoveSite>) -> Self {
        let labels = vec![None; steps.len() + 1];
        Self {
            bottom,
            steps,
            labels,
        }
    }

    pub fn label(&self, slice: usize) -> Option<&str> {
        self.labels.get(slice).and_then(|l| l.as_deref())
    }

    /// Appends `other`, which must start where `self` ends.
    pub fn concat(&self, other: &CobordismScript) -> CobordismScript {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        let mut labels = self.labels.clone();
        labels.truncate(self.steps.len());
        labels.extend(other.labels.iter().cloned());
        Self {
            bottom: self.bottom.clone(),
            steps,
            labels,
        }
    }

    /// Parses the `FRONT` / `MOVE` / `LABEL` line format.
    pub fn parse(text: &str) -> Result<Self, ScriptError> {
        let mut bottom = None;
        let mut steps = Vec::new();
        let mut labels: Vec<Option<String>> = vec![None];
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let syntax = |message: String| ScriptError::Syntax { line, message };
            let (head, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
            match head {
                "FRONT" => {
                    if bottom.is_some() {
                        return Err(syntax("second FRONT line".into()));
                    }
                    bottom = Some(
                        parse_front(rest).map_err(|source| ScriptError::Front { line, source })?,
                    );
                }
                "MOVE" => {
                    if bottom.is_none() {
                        return Err(syntax("MOVE before FRONT".into()));
                    }
                    let toks: Vec<&str> = rest.split_whitespace().collect();
                    if !(2..=3).contains(&toks.len()) {
                        return Err(syntax("expected `MOVE <kind> <index> [<variant>]`".into()));
                    }
                    let kind: MoveKind = toks[0]
                        .parse()
                        .map_err(|e: MoveError| syntax(e.to_string()))?;
                    let index = toks[1]
                        .parse()
                        .map_err(|_| syntax(format!("bad index `{}`", toks[1])))?;
                    let variant = match toks.get(2) {
                        Some(t) => t
                            .parse()
                            .map_err(|_| syntax(format!("bad variant `{t}`")))?,
                        None => 0,
                    };
                    steps.push(MoveSite::new(kind, index, variant));
                    labels.push(None);
                }
                "LABEL" => {
                    let name = rest.trim();
                    if name.is_empty() {
                        return Err(syntax("empty LABEL".into()));
                    }
                    *labels.last_mut().unwrap() = Some(name.to_string());
                }
                other => return Err(syntax(format!("unknown record `{other}`"))),
            }
        }
        let bottom = bottom.ok_or(ScriptError::Syntax {
            line: 1,
            message: "missing FRONT line".into(),
        })?;
        Ok(Self {
            bottom,
            steps,
            labels,
        })
    }
}

impl fmt::Display for CobordismScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FRONT {}", self.bottom)?;
        if let Some(l) = self.label(0) {
            writeln!(f, "LABEL {l}")?;
        }
        for (i, s) in self.steps.iter().enumerate() {
            writeln!(f, "MOVE {} {} {}", s.kind, s.index, s.variant)?;
            if let Some(l) = self.label(i + 1) {
                writeln!(f, "LABEL {l}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Genus {
    Integer(i64),
    /// `2 - b - chi` is negative or odd: the steps do not describe a
    /// connected surface.
    NonSurface,
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Genus::Integer(g) => write!(f, "{g}"),
            Genus::NonSurface => f.write_str("non-surface"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobordismReport {
    pub top: FrontDiagram,
    pub chi: i64,
    pub saddles: usize,
    pub births: usize,
    pub caps: usize,
    pub tb_bottom: i64,
    pub tb_top: i64,
    pub rot_bottom: i64,
    pub rot_top: i64,
    pub components_bottom: usize,
    pub components_top: usize,
    pub genus: Genus,
    pub ok: bool,
    pub diagnostics: Vec<String>,
}

/// `births - saddles`, with caps counted like births.
pub fn euler_characteristic(c: &CobordismScript) -> i64 {
    c.steps
        .iter()
        .map(|s| match s.kind {
            MoveKind::Birth | MoveKind::Cap => 1,
            MoveKind::SaddleUp => -1,
            _ => 0,
        })
        .sum()
}

pub fn verify_script(c: &CobordismScript) -> Result<CobordismReport, StepError> {
    verify_script_with(c, MovePolicy::default())
}

/// Replays every step, then checks `tb_top - tb_bottom = -chi` and rotation
/// preservation. Incoherent saddles and caps switch those checks off and
/// leave the report not ok.
pub fn verify_script_with(
    c: &CobordismScript,
    policy: MovePolicy,
) -> Result<CobordismReport, StepError> {
    let mut cur = c.bottom.clone();
    let mut diagnostics = Vec::new();
    let (mut births, mut saddles, mut caps) = (0, 0, 0);
    let mut checks_valid = true;
    for (index, &site) in c.steps.iter().enumerate() {
        let next = apply_move_with(&cur, site, policy).map_err(|source| StepError {
            index,
            site,
            source,
        })?;
        match site.kind {
            MoveKind::Birth => births += 1,
            MoveKind::Cap => {
                caps += 1;
                checks_valid = false;
                diagnostics.push(format!("step {index}: cap, tb bookkeeping disabled"));
            }
            MoveKind::SaddleUp => {
                saddles += 1;
                if !saddle_is_coherent(&cur, site.index) {
                    checks_valid = false;
                    diagnostics.push(format!(
                        "step {index}: incoherent saddle, surface not oriented"
                    ));
                }
            }
            _ => {}
        }
        cur = next;
    }
    let bottom = classical_invariants(&c.bottom);
    let top = classical_invariants(&cur);
    let chi = births as i64 - saddles as i64 + caps as i64;
    let mut ok = checks_valid;
    if checks_valid {
        if top.tb - bottom.tb != -chi {
            ok = false;
            diagnostics.push(format!(
                "tb_top - tb_bottom = {} but -chi = {}",
                top.tb - bottom.tb,
                -chi
            ));
        }
        if top.rot != bottom.rot {
            ok = false;
            diagnostics.push(format!("rot changed from {} to {}", bottom.rot, top.rot));
        }
    }
    let b = bottom.components as i64 + top.components as i64;
    let twice = 2 - b - chi;
    let genus = if twice >= 0 && twice % 2 == 0 {
        Genus::Integer(twice / 2)
    } else {
        Genus::NonSurface
    };
    Ok(CobordismReport {
        top: cur,
        chi,
        saddles,
        births,
        caps,
        tb_bottom: bottom.tb,
        tb_top: top.tb,
        rot_bottom: bottom.rot,
        rot_top: top.rot,
        components_bottom: bottom.components,
        components_top: top.components,
        genus,
        ok,
        diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn birth_from_empty() {
        let s = CobordismScript::parse("FRONT\nMOVE Birth 0 1\n").unwrap();
        let r = verify_script(&s).unwrap();
        assert_eq!(r.top.to_string(), "L1 R1");
        assert_eq!(
            (r.chi, r.tb_top, r.ok, r.genus),
            (1, -1, true, Genus::Integer(0))
        );
    }

    #[test]
    fn empty_script() {
        let s = CobordismScript::parse("FRONT L1 R1\n").unwrap();
        let r = verify_script(&s).unwrap();
        assert_eq!((r.chi, r.tb_top, r.tb_bottom, r.ok), (0, -1, -1, true));
    }

    #[test]
    fn two_births_and_a_saddle() {
        let s = CobordismScript::parse(
            "# two disks joined\nFRONT\nMOVE Birth 0 1\nMOVE Birth 2 1\nMOVE SaddleUp 1\nLABEL top\n",
        )
        .unwrap();
        assert_eq!(euler_characteristic(&s), 1);
        let r = verify_script(&s).unwrap();
        assert_eq!((r.chi, r.tb_top, r.ok), (1, -1, true));
        assert_eq!(r.top.to_string(), "L1 R1");
        assert_eq!(s.label(3), Some("top"));
        assert_eq!(CobordismScript::parse(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn failing_step_is_reported() {
        let s = CobordismScript::parse("FRONT L1 R1\nMOVE SaddleUp 0\n").unwrap();
        let err = verify_script(&s).unwrap_err();
        assert_eq!(err.index, 0);
    }

    #[test]
    fn syntax_errors_name_the_line() {
        let err = CobordismScript::parse("FRONT\nMOVE Birth x\n").unwrap_err();
        assert!(matches!(err, ScriptError::Syntax { line: 2, .. }));
        assert!(CobordismScript::parse("MOVE Birth 0 1\n").is_err());
    }
}
