//! Plain-text table of reference knots.
//!
//! ```text
//! NAME 3_1
//! SOURCE <where the values were copied from>
//! PD 1 5 2 4
//! PD 3 1 4 6
//! PD 5 3 6 2
//! JONES 1:1 3:1 4:-1
//! KAUFFMAN -5,1:1 -4,0:-1 ...
//! ```
//!
//! `JONES` terms are `t`-exponent:coefficient. `KAUFFMAN` terms are
//! `a,z:coefficient` in the usual table normalization. Records are
//! separated by their `NAME` lines; `#` starts a comment line.

use std::path::Path;

use thiserror::Error;

use crate::laurent::{LaurentPoly1, LaurentPoly2};
use crate::pd::{PdError, PlanarDiagram};
use crate::polys::{jones_with, kauffman_poly_with, to_table_convention, EngineConfig, PolyError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub source: Option<String>,
    pub pd: PlanarDiagram,
    /// In the variable `t`.
    pub jones: Option<LaurentPoly1>,
    /// In table normalization.
    pub kauffman: Option<LaurentPoly2>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KnotTable {
    pub records: Vec<KnotRecord>,
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("record {name}: {source}")]
    Pd { name: String, source: PdError },
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("no record named {0}")]
    Missing(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Mismatch {
    #[error("{name}: table Jones {table:?} but engine gives {engine:?}")]
    Jones {
        name: String,
        table: LaurentPoly1,
        engine: Option<LaurentPoly1>,
    },
    #[error("{name}: table Kauffman polynomial disagrees with the engine")]
    Kauffman {
        name: String,
        table: LaurentPoly2,
        engine: LaurentPoly2,
    },
    #[error("{name}: {source}")]
    Engine { name: String, source: PolyError },
}

struct Draft {
    name: String,
    line: usize,
    source: Option<String>,
    crossings: Vec<[u32; 4]>,
    jones: Option<LaurentPoly1>,
    kauffman: Option<LaurentPoly2>,
}

impl Draft {
    fn finish(self) -> Result<KnotRecord, TableError> {
        if self.crossings.is_empty() {
            return Err(TableError::Syntax {
                line: self.line,
                message: format!("record {} has no PD lines", self.name),
            });
        }
        let pd = PlanarDiagram::new(self.crossings, 0).map_err(|source| TableError::Pd {
            name: self.name.clone(),
            source,
        })?;
        Ok(KnotRecord {
            name: self.name,
            source: self.source,
            pd,
            jones: self.jones,
            kauffman: self.kauffman,
        })
    }
}

fn int<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T, TableError> {
    tok.parse().map_err(|_| TableError::Syntax {
        line,
        message: format!("bad number `{tok}`"),
    })
}

fn split_term(tok: &str, line: usize) -> Result<(&str, i64), TableError> {
    let (exp, coeff) = tok.split_once(':').ok_or_else(|| TableError::Syntax {
        line,
        message: format!("expected exponent:coefficient, got `{tok}`"),
    })?;
    Ok((exp, int(coeff, line)?))
}

impl KnotTable {
    pub fn parse(text: &str) -> Result<Self, TableError> {
        let mut records = Vec::new();
        let mut draft: Option<Draft> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let (head, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
            let rest = rest.trim();
            if head == "NAME" {
                if let Some(d) = draft.take() {
                    records.push(d.finish()?);
                }
                draft = Some(Draft {
                    name: rest.to_string(),
                    line,
                    source: None,
                    crossings: Vec::new(),
                    jones: None,
                    kauffman: None,
                });
                continue;
            }
            let d = draft.as_mut().ok_or_else(|| TableError::Syntax {
                line,
                message: format!("`{head}` before any NAME"),
            })?;
            match head {
                "SOURCE" => d.source = Some(rest.to_string()),
                "PD" => {
                    let nums: Vec<u32> = rest
                        .split_whitespace()
                        .map(|t| int(t, line))
                        .collect::<Result<_, _>>()?;
                    let c: [u32; 4] = nums.try_into().map_err(|_| TableError::Syntax {
                        line,
                        message: "PD line needs four labels".into(),
                    })?;
                    d.crossings.push(c);
                }
                "JONES" => {
                    let mut p = LaurentPoly1::zero();
                    for tok in rest.split_whitespace() {
                        let (e, c) = split_term(tok, line)?;
                        p.add_term(int(e, line)?, c);
                    }
                    d.jones = Some(p);
                }
                "KAUFFMAN" => {
                    let mut p = LaurentPoly2::zero();
                    for tok in rest.split_whitespace() {
                        let (e, c) = split_term(tok, line)?;
                        let (a, z) = e.split_once(',').ok_or_else(|| TableError::Syntax {
                            line,
                            message: format!("expected a,z exponents in `{tok}`"),
                        })?;
                        p.add_term((int(a, line)?, int(z, line)?), c);
                    }
                    d.kauffman = Some(p);
                }
                other => {
                    return Err(TableError::Syntax {
                        line,
                        message: format!("unknown record `{other}`"),
                    })
                }
            }
        }
        if let Some(d) = draft {
            records.push(d.finish()?);
        }
        Ok(Self { records })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, TableError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn get(&self, name: &str) -> Result<&KnotRecord, TableError> {
        self.records
            .iter()
            .find(|r| r.name == name)
            .ok_or_else(|| TableError::Missing(name.to_string()))
    }
}

impl KnotRecord {
    /// Recomputes every stored polynomial and reports the first disagreement.
    pub fn validate(&self, cfg: &EngineConfig) -> Result<(), Mismatch> {
        let engine_err = |source| Mismatch::Engine {
            name: self.name.clone(),
            source,
        };
        if let Some(table) = &self.jones {
            let engine = jones_with(&self.pd, cfg)
                .map_err(engine_err)?
                .to_t_variable();
            if engine.as_ref() != Some(table) {
                return Err(Mismatch::Jones {
                    name: self.name.clone(),
                    table: table.clone(),
                    engine,
                });
            }
        }
        if let Some(table) = &self.kauffman {
            let f = kauffman_poly_with(&self.pd, cfg).map_err(engine_err)?;
            let engine = to_table_convention(&f, self.pd.component_count());
            if &engine != table {
                return Err(Mismatch::Kauffman {
                    name: self.name.clone(),
                    table: table.clone(),
                    engine,
                });
            }
        }
        Ok(())
    }
}
