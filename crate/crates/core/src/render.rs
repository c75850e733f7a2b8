//! Deterministic SVG and ASCII drawings of fronts.
//!
//! Rows are horizontal lanes, gaps are straight runs, each event gets one
//! column. Every cusp is drawn as one `class="cusp"` element and every
//! crossing as one `class="crossing"` group, with the descending strand on
//! top.

use std::fmt::Write as _;

use thiserror::Error;

use crate::front::{Direction, EventKind, FrontDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Svg,
    Ascii,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RenderSpec {
    pub format: RenderFormat,
    pub width: u32,
    pub height: u32,
    pub show_orientations: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        Self {
            format: RenderFormat::Svg,
            width: 640,
            height: 240,
            show_orientations: false,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("render dimensions must be positive, got {width}x{height}")]
pub struct RenderError {
    pub width: u32,
    pub height: u32,
}

impl RenderSpec {
    pub fn new(
        format: RenderFormat,
        width: u32,
        height: u32,
        show_orientations: bool,
    ) -> Result<Self, RenderError> {
        if width == 0 || height == 0 {
            return Err(RenderError { width, height });
        }
        Ok(Self {
            format,
            width,
            height,
            show_orientations,
        })
    }
}

pub fn render_front(d: &FrontDiagram, spec: &RenderSpec) -> String {
    match spec.format {
        RenderFormat::Svg => render_svg(d, spec),
        RenderFormat::Ascii => render_ascii(d, spec.show_orientations),
    }
}

/// Rows a strand occupies on either side of event `k`: `(row in, row out)`
/// for strands that pass straight through.
fn passthrough(kind: EventKind, row: u32, count_in: u32) -> Vec<(u32, u32)> {
    match kind {
        EventKind::LeftCusp => (1..=count_in)
            .map(|r| (r, if r < row { r } else { r + 2 }))
            .collect(),
        EventKind::RightCusp => (1..=count_in)
            .filter(|&r| r != row && r != row + 1)
            .map(|r| (r, if r < row { r } else { r - 2 }))
            .collect(),
        EventKind::Crossing => (1..=count_in)
            .filter(|&r| r != row && r != row + 1)
            .map(|r| (r, r))
            .collect(),
    }
}

struct Frame {
    col: f64,
    lane: f64,
}

impl Frame {
    fn event_x(&self, k: usize) -> f64 {
        self.col * (k as f64 + 1.0)
    }

    fn y(&self, row: u32) -> f64 {
        self.lane * row as f64
    }
}

fn render_svg(d: &FrontDiagram, spec: &RenderSpec) -> String {
    let (w, h) = (spec.width, spec.height);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    let counts = d.counts();
    let events = d.events();
    if events.is_empty() {
        out.push_str("</svg>\n");
        return out;
    }
    let max = *counts.iter().max().unwrap();
    let f = Frame {
        col: w as f64 / (events.len() as f64 + 1.0),
        lane: h as f64 / (max as f64 + 1.0),
    };
    let half = f.col * 0.3;
    writeln!(out, r#"<g fill="none" stroke="black" stroke-width="2">"#).unwrap();
    // gap runs
    for (gap, &n) in counts.iter().enumerate() {
        if n == 0 {
            continue;
        }
        let x0 = if gap == 0 {
            0.0
        } else {
            f.event_x(gap - 1) + half
        };
        let x1 = f.event_x(gap) - half;
        for r in 1..=n {
            let y = f.y(r);
            writeln!(
                out,
                r#"<path class="strand" d="M {x0:.2} {y:.2} L {x1:.2} {y:.2}"/>"#
            )
            .unwrap();
        }
    }
    for (k, e) in events.iter().enumerate() {
        let x = f.event_x(k);
        for (a, b) in passthrough(e.kind, e.row, counts[k]) {
            writeln!(
                out,
                r#"<path class="strand" d="M {:.2} {:.2} L {:.2} {:.2}"/>"#,
                x - half,
                f.y(a),
                x + half,
                f.y(b)
            )
            .unwrap();
        }
        let (yu, yl) = (f.y(e.row), f.y(e.row + 1));
        let ry = (yl - yu) / 2.0;
        match e.kind {
            EventKind::LeftCusp => writeln!(
                out,
                r#"<path class="cusp" d="M {:.2} {yu:.2} A {half:.2} {ry:.2} 0 0 0 {:.2} {yl:.2}"/>"#,
                x + half,
                x + half
            ),
            EventKind::RightCusp => writeln!(
                out,
                r#"<path class="cusp" d="M {:.2} {yu:.2} A {half:.2} {ry:.2} 0 0 1 {:.2} {yl:.2}"/>"#,
                x - half,
                x - half
            ),
            EventKind::Crossing => {
                let (x0, x1) = (x - half, x + half);
                let cut = |t: f64| (x0 + (x1 - x0) * t, yl + (yu - yl) * t);
                let (ax, ay) = cut(0.4);
                let (bx, by) = cut(0.6);
                writeln!(
                    out,
                    r#"<g class="crossing"><path d="M {x0:.2} {yu:.2} L {x1:.2} {yl:.2}"/><path d="M {x0:.2} {yl:.2} L {ax:.2} {ay:.2}"/><path d="M {bx:.2} {by:.2} L {x1:.2} {yu:.2}"/></g>"#
                )
            }
        }
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    if spec.show_orientations {
        let dirs = d.segment_directions();
        for (gap, lanes) in dirs.iter().enumerate().skip(1).take(events.len() - 1) {
            let xm = (f.event_x(gap - 1) + f.event_x(gap)) / 2.0;
            for (i, dir) in lanes.iter().enumerate() {
                let y = f.y(i as u32 + 1);
                let s = if *dir == Direction::Rightward {
                    4.0
                } else {
                    -4.0
                };
                writeln!(
                    out,
                    r#"<path class="arrow" d="M {:.2} {:.2} L {:.2} {y:.2} L {:.2} {:.2} Z"/>"#,
                    xm - s,
                    y - 4.0,
                    xm + s,
                    xm - s,
                    y + 4.0
                )
                .unwrap();
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

const EVENT_WIDTH: usize = 5;

fn render_ascii(d: &FrontDiagram, show_orientations: bool) -> String {
    let counts = d.counts();
    let events = d.events();
    let max = *counts.iter().max().unwrap_or(&0) as usize;
    if max == 0 {
        return String::new();
    }
    let height = 2 * max - 1;
    let width = events.len() * EVENT_WIDTH + counts.len();
    let mut grid = vec![vec![' '; width]; height];
    let line = |row: u32| 2 * (row as usize - 1);
    let dirs = d.segment_directions();
    let mut x = 0;
    for (gap, &n) in counts.iter().enumerate() {
        for r in 1..=n {
            grid[line(r)][x] = match (show_orientations, dirs[gap][r as usize - 1]) {
                (false, _) => '-',
                (true, Direction::Rightward) => '>',
                (true, Direction::Leftward) => '<',
            };
        }
        x += 1;
        let Some(e) = events.get(gap) else { break };
        for (a, b) in passthrough(e.kind, e.row, n) {
            let (la, lb) = (line(a), line(b));
            if la == lb {
                (0..EVENT_WIDTH).for_each(|c| grid[la][x + c] = '-');
            } else {
                grid[la][x] = '-';
                grid[lb][x + 4] = '-';
                for step in 1..4 {
                    if lb > la {
                        grid[la + step][x + step] = '\\';
                    } else {
                        grid[la - step][x + step] = '/';
                    }
                }
            }
        }
        let (u, l) = (line(e.row), line(e.row + 1));
        let m = u + 1;
        match e.kind {
            EventKind::LeftCusp => {
                grid[u][x + 3] = '/';
                grid[u][x + 4] = '-';
                grid[m][x + 2] = '<';
                grid[l][x + 3] = '\\';
                grid[l][x + 4] = '-';
            }
            EventKind::RightCusp => {
                grid[u][x] = '-';
                grid[u][x + 1] = '\\';
                grid[m][x + 2] = '>';
                grid[l][x] = '-';
                grid[l][x + 1] = '/';
            }
            EventKind::Crossing => {
                for c in [0, 1, 3, 4] {
                    grid[u][x + c] = '-';
                    grid[l][x + c] = '-';
                }
                grid[m][x + 2] = '\\';
            }
        }
        x += EVENT_WIDTH;
    }
    let mut out = String::new();
    for row in grid {
        let s: String = row.into_iter().collect();
        out.push_str(s.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::parse_front;

    fn svg(word: &str) -> String {
        render_front(&parse_front(word).unwrap(), &RenderSpec::default())
    }

    #[test]
    fn glyph_counts_match_events() {
        let s = svg("L1 L1 X2 X2 X2 R1 R1");
        assert_eq!(s.matches(r#"class="crossing""#).count(), 3);
        assert_eq!(s.matches(r#"class="cusp""#).count(), 4);
        assert_eq!(s, svg("L1 L1 X2 X2 X2 R1 R1"));
    }

    #[test]
    fn empty_front_is_an_empty_canvas() {
        let s = svg("");
        assert!(s.starts_with("<svg") && s.ends_with("</svg>\n"));
        assert!(!s.contains("<path"));
        let spec = RenderSpec {
            format: RenderFormat::Ascii,
            ..RenderSpec::default()
        };
        assert_eq!(render_front(&FrontDiagram::empty(), &spec), "");
    }

    #[test]
    fn ascii_eye() {
        let spec = RenderSpec {
            format: RenderFormat::Ascii,
            ..RenderSpec::default()
        };
        let eye = render_front(&parse_front("L1 R1").unwrap(), &spec);
        assert_eq!(eye, "    /---\\\n   <     >\n    \\---/\n");
        let oriented = RenderSpec {
            show_orientations: true,
            ..spec
        };
        let eye = render_front(&parse_front("L1 R1").unwrap(), &oriented);
        assert_eq!(eye, "    /->-\\\n   <     >\n    \\-<-/\n");
    }

    #[test]
    fn zero_dimensions_rejected() {
        assert!(RenderSpec::new(RenderFormat::Svg, 0, 10, false).is_err());
    }
}
