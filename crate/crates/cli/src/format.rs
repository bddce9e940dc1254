//! Problem files: a JSON document or an ASCII grid, plus the pair and path
//! payloads used by single-shot commands.
//!
//! JSON: `{"a":8,"b":9,"lower":[..],"upper":[..],"minor":{"u":[..],"v":[..]}}`
//! with one boundary value per column `0..=a` (or per column from `x_lo` on,
//! if that key is present).
//!
//! Grid: `b + 1` lines of `a + 1` characters, `#` for a region cell and `.`
//! otherwise, the top line being row `y = b`, then a line `M: u1,..|v1,..`.

use std::fmt;
use std::fs;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use ladderdet::{Cogenerator, LadderRegion, Point, TwoRowedArray};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub source: String,
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.source)?;
        if let Some(line) = self.line {
            write!(f, ":{line}")?;
            if let Some(col) = self.column {
                write!(f, ":{col}")?;
            }
        }
        write!(f, ": {}", self.message)
    }
}

impl std::error::Error for InputError {}

fn err(source: &str, line: Option<usize>, column: Option<usize>, message: impl Into<String>) -> InputError {
    InputError {
        source: source.to_string(),
        line,
        column,
        message: message.into(),
    }
}

fn json_err(source: &str, e: serde_json::Error) -> InputError {
    err(source, Some(e.line()), Some(e.column()), e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemSpec {
    pub region: LadderRegion,
    pub minor: Cogenerator,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MinorDoc {
    u: Vec<i64>,
    v: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProblemDoc {
    a: i64,
    b: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x_lo: Option<i64>,
    lower: Vec<i64>,
    upper: Vec<i64>,
    minor: MinorDoc,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct ArrayDoc {
    pub top: Vec<i64>,
    pub bottom: Vec<i64>,
}

impl ArrayDoc {
    pub fn to_array(&self) -> Result<TwoRowedArray, String> {
        TwoRowedArray::new(self.top.clone(), self.bottom.clone())
    }

    pub fn from_array(t: &TwoRowedArray) -> Self {
        ArrayDoc {
            top: t.top().to_vec(),
            bottom: t.bottom().to_vec(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
struct PairDoc {
    first: ArrayDoc,
    second: ArrayDoc,
}

/// Reads a file, or standard input for `-`.
pub fn read_source(path: &Path) -> Result<String, InputError> {
    let name = path.display().to_string();
    if name == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| err("<stdin>", None, None, e.to_string()))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| err(&name, None, None, e.to_string()))
}

pub fn load_problem(path: &Path) -> Result<ProblemSpec, InputError> {
    let text = read_source(path)?;
    parse_problem(&text, &path.display().to_string())
}

/// Dispatches on the first non-blank character: `{` means JSON.
pub fn parse_problem(text: &str, source: &str) -> Result<ProblemSpec, InputError> {
    if text.trim_start().starts_with('{') {
        parse_json(text, source)
    } else {
        parse_grid(text, source)
    }
}

fn parse_json(text: &str, source: &str) -> Result<ProblemSpec, InputError> {
    let doc: ProblemDoc = serde_json::from_str(text).map_err(|e| json_err(source, e))?;
    let region = match doc.x_lo {
        None => LadderRegion::new(doc.a, doc.b, doc.lower, doc.upper),
        Some(x_lo) => LadderRegion::with_columns(doc.a, doc.b, x_lo, doc.lower, doc.upper),
    }
    .map_err(|e| err(source, None, None, e.to_string()))?;
    let minor = Cogenerator::new(doc.minor.u, doc.minor.v, doc.a, doc.b)
        .map_err(|e| err(source, None, None, e.to_string()))?;
    Ok(ProblemSpec { region, minor })
}

fn parse_list(s: &str, source: &str, line: usize, col: usize) -> Result<Vec<i64>, InputError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| err(source, Some(line), Some(col), format!("expected an integer, got {:?}", t.trim())))
        })
        .collect()
}

fn parse_grid(text: &str, source: &str) -> Result<ProblemSpec, InputError> {
    let mut rows: Vec<(usize, &str)> = Vec::new();
    let mut minor_line: Option<(usize, &str)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_end();
        if line.is_empty() {
            continue;
        }
        if minor_line.is_some() {
            return Err(err(source, Some(line_no), Some(1), "unexpected content after the M: line"));
        }
        if let Some(rest) = line.strip_prefix("M:") {
            minor_line = Some((line_no, rest));
        } else {
            rows.push((line_no, line));
        }
    }
    let Some((m_line, m_text)) = minor_line else {
        return Err(err(source, None, None, "missing the M: u1,..|v1,.. line"));
    };
    if rows.is_empty() {
        return Err(err(source, Some(m_line), Some(1), "grid has no rows"));
    }
    let width = rows[0].1.chars().count();
    let mut mask = Vec::with_capacity(rows.len());
    for &(line_no, row) in &rows {
        let mut cells = Vec::with_capacity(width);
        for (c, ch) in row.chars().enumerate() {
            match ch {
                '#' => cells.push(true),
                '.' => cells.push(false),
                other => {
                    return Err(err(source, Some(line_no), Some(c + 1), format!("unexpected character {other:?}")))
                }
            }
        }
        if cells.len() != width {
            return Err(err(
                source,
                Some(line_no),
                Some(cells.len().min(width) + 1),
                format!("row has {} cells, expected {width}", cells.len()),
            ));
        }
        mask.push(cells);
    }
    let region = LadderRegion::from_matrix_mask(&mask).map_err(|e| err(source, None, None, e.to_string()))?;
    let Some((u_text, v_text)) = m_text.split_once('|') else {
        return Err(err(source, Some(m_line), Some(3), "expected u1,..|v1,.."));
    };
    let u = parse_list(u_text, source, m_line, 3)?;
    let v = parse_list(v_text, source, m_line, 4 + u_text.len())?;
    let minor = Cogenerator::new(u, v, region.a(), region.b())
        .map_err(|e| err(source, Some(m_line), Some(1), e.to_string()))?;
    Ok(ProblemSpec { region, minor })
}

/// Canonical JSON form. Regions with an empty interior column have no
/// boundary-list form and are refused.
pub fn emit_json(spec: &ProblemSpec) -> Result<String, String> {
    let r = &spec.region;
    let (lo, hi) = r.column_range().ok_or("the empty region has no boundary lists")?;
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for x in lo..=hi {
        let (l, u) = r
            .column(x)
            .ok_or_else(|| format!("column {x} is empty; use the grid format"))?;
        lower.push(l);
        upper.push(u);
    }
    let doc = ProblemDoc {
        a: r.a(),
        b: r.b(),
        x_lo: (lo != 0 || hi != r.a()).then_some(lo),
        lower,
        upper,
        minor: MinorDoc {
            u: spec.minor.u().to_vec(),
            v: spec.minor.v().to_vec(),
        },
    };
    Ok(serde_json::to_string(&doc).expect("plain data serializes") + "\n")
}

pub fn emit_grid(spec: &ProblemSpec) -> String {
    let mut out = String::new();
    for row in spec.region.to_matrix_mask() {
        out.extend(row.iter().map(|&on| if on { '#' } else { '.' }));
        out.push('\n');
    }
    let join = |s: &[i64]| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
    out.push_str(&format!("M: {}|{}\n", join(spec.minor.u()), join(spec.minor.v())));
    out
}

pub fn load_pair(path: &Path) -> Result<(TwoRowedArray, TwoRowedArray), InputError> {
    let name = path.display().to_string();
    let doc: PairDoc = serde_json::from_str(&read_source(path)?).map_err(|e| json_err(&name, e))?;
    let first = doc.first.to_array().map_err(|e| err(&name, None, None, format!("first: {e}")))?;
    let second = doc.second.to_array().map_err(|e| err(&name, None, None, format!("second: {e}")))?;
    Ok((first, second))
}

pub fn load_paths(path: &Path) -> Result<Vec<TwoRowedArray>, InputError> {
    let name = path.display().to_string();
    let docs: Vec<ArrayDoc> = serde_json::from_str(&read_source(path)?).map_err(|e| json_err(&name, e))?;
    docs.iter()
        .enumerate()
        .map(|(i, d)| d.to_array().map_err(|e| err(&name, None, None, format!("path {}: {e}", i + 1))))
        .collect()
}

/// A face file is a JSON list of `[x, y]` lattice points.
pub fn load_face(path: &Path) -> Result<Vec<Point>, InputError> {
    let name = path.display().to_string();
    let pts: Vec<(i64, i64)> = serde_json::from_str(&read_source(path)?).map_err(|e| json_err(&name, e))?;
    Ok(pts.into_iter().map(Point::from).collect())
}
