use std::fmt::Write;
use std::str::FromStr;

use super::{Move, PathWord};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(Format::Ascii),
            "svg" => Ok(Format::Svg),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

pub fn render(path: &PathWord, format: Format) -> Result<String> {
    Ok(match format {
        Format::Ascii => ascii(path),
        Format::Svg => svg(path)?,
    })
}

/// One column per step. A rise from `y` is drawn as `/` in row `y`, a fall to
/// `y` as `\` in row `y`, a flat step on the axis as `_`. The last line is the
/// axis, one `-` per vertex.
fn ascii(path: &PathWord) -> String {
    let heights = path.heights();
    let cols = path.moves().len();
    let rows = heights.iter().copied().max().unwrap_or(0);
    let mut grid = vec![vec![' '; cols]; rows.max(1)];
    for (t, m) in path.moves().iter().enumerate() {
        let (y0, y1) = (heights[t], heights[t + 1]);
        match (m, y1.cmp(&y0)) {
            (Move::B, _) => grid[y0][t] = '/',
            (Move::A, std::cmp::Ordering::Less) => grid[y1][t] = '\\',
            (Move::A, _) => grid[0][t] = '_',
        }
    }
    let mut out = String::new();
    for row in grid.iter().rev() {
        let line: String = row.iter().collect();
        let line = line.trim_end();
        if !line.is_empty() || rows > 0 {
            out.push_str(line);
            out.push('\n');
        }
    }
    out.push_str(&"-".repeat(cols + 1));
    out.push('\n');
    out
}

const UNIT: usize = 20;
const PAD: usize = 20;

fn svg(path: &PathWord) -> Result<String> {
    let heights = path.heights();
    let top = heights.iter().copied().max().unwrap_or(0) + 1;
    let width = path.moves().len() * UNIT + 2 * PAD;
    let height = top * UNIT + 2 * PAD;
    let px = |x: usize| PAD + x * UNIT;
    let py = |y: usize| PAD + (top - y) * UNIT;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="gray"/>"#,
        px(0),
        py(0),
        px(path.moves().len()),
        py(0)
    );
    let points: Vec<String> = heights
        .iter()
        .enumerate()
        .map(|(x, &y)| format!("{},{}", px(x), py(y)))
        .collect();
    let _ = writeln!(
        out,
        r#"  <polyline fill="none" stroke="black" points="{}"/>"#,
        points.join(" ")
    );
    for p in path.peaks()? {
        let _ = writeln!(
            out,
            r#"  <text x="{}" y="{}" font-size="10" text-anchor="middle">{}^({})</text>"#,
            px(p.x as usize),
            py(p.height) - 4,
            p.x,
            p.charge
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
