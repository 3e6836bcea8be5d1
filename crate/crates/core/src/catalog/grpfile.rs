//! The `.grp` text format.
//!
//! ```text
//! # comment
//! format: perm
//! name: S3
//! degree: 3
//! (1 2 3)
//! (1 2)
//! ```
//!
//! or `format: cayley`, `order: n`, then `n` rows of `n` 0-based indices.

use std::path::Path;

use super::{GroupRecipe, RecipeKind};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Permutation};

fn parse_err(line: usize, token: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        token: token.to_string(),
        message: message.into(),
    }
}

fn header<'a>(line_no: usize, line: &'a str, key: &str) -> Result<&'a str> {
    match line.split_once(':') {
        Some((k, v)) if k.trim() == key => Ok(v.trim()),
        _ => Err(parse_err(line_no, line, format!("expected \"{key}: ...\""))),
    }
}

fn parse_number(line_no: usize, s: &str) -> Result<usize> {
    s.parse().map_err(|_| parse_err(line_no, s, "expected a non-negative integer"))
}

/// Parses disjoint-cycle notation with 1-based points, e.g. `(1 2 3)(4 5)`.
pub fn parse_cycles(line_no: usize, text: &str, degree: usize) -> Result<Permutation> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    if rest == "()" {
        return Ok(Permutation::identity(degree));
    }
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(parse_err(line_no, rest, "expected '('"));
        };
        let Some(close) = body.find(')') else {
            return Err(parse_err(line_no, rest, "unclosed cycle"));
        };
        if let Some(open) = body[..close].find('(') {
            return Err(parse_err(line_no, &body[open..], "unclosed cycle"));
        }
        let mut cycle = Vec::new();
        for tok in body[..close].split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let point = parse_number(line_no, tok)?;
            if point == 0 || point > degree {
                return Err(parse_err(line_no, tok, format!("point out of range 1..={degree}")));
            }
            cycle.push(point - 1);
        }
        cycles.push(cycle);
        rest = body[close + 1..].trim_start();
    }
    Permutation::from_cycles(degree, &cycles).map_err(|e| parse_err(line_no, text, e.to_string()))
}

/// Parses `.grp` text into a recipe.
pub fn parse_group_file(text: &str) -> Result<GroupRecipe> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (ln, first) = lines.next().ok_or_else(|| parse_err(1, "", "empty input"))?;
    let format = header(ln, first, "format")?;
    if format != "perm" && format != "cayley" {
        return Err(parse_err(ln, format, "format must be perm or cayley"));
    }

    let mut name = None;
    let mut size = None;
    let size_key = if format == "perm" { "degree" } else { "order" };
    let mut body = Vec::new();
    for (ln, line) in lines {
        if size.is_none() {
            if let Some(v) = line.strip_prefix("name:") {
                name = Some(v.trim().to_string());
                continue;
            }
            size = Some(parse_number(ln, header(ln, line, size_key)?)?);
            continue;
        }
        if let Some(v) = line.strip_prefix("name:") {
            name = Some(v.trim().to_string());
            continue;
        }
        body.push((ln, line));
    }
    let last_line = text.lines().count().max(1);
    let size = size.ok_or_else(|| parse_err(last_line, "", format!("missing \"{size_key}: ...\"")))?;
    let name = name.unwrap_or_else(|| "unnamed".to_string());

    let kind = if format == "perm" {
        let gens = body
            .iter()
            .map(|&(ln, l)| parse_cycles(ln, l, size))
            .collect::<Result<Vec<_>>>()?;
        RecipeKind::PermGens { degree: size, gens }
    } else {
        if body.len() != size {
            let (ln, tok) = body.get(size).copied().unwrap_or((last_line, ""));
            return Err(parse_err(ln, tok, format!("expected {size} rows, found {}", body.len())));
        }
        let mut rows = Vec::with_capacity(size);
        for &(ln, l) in &body {
            let row = l
                .split_whitespace()
                .map(|t| {
                    let v = parse_number(ln, t)?;
                    if v >= size {
                        return Err(parse_err(ln, t, format!("entry out of range 0..{size}")));
                    }
                    Ok(v)
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != size {
                return Err(parse_err(ln, l, format!("expected {size} entries, found {}", row.len())));
            }
            rows.push(row);
        }
        RecipeKind::Cayley(rows)
    };
    Ok(GroupRecipe { name, kind })
}

pub fn read_group_file(path: &Path) -> Result<GroupRecipe> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_group_file(&text)
}

/// `.grp` text for a permutation recipe.
pub fn perm_file_text(name: &str, degree: usize, gens: &[Permutation]) -> String {
    let mut out = format!("format: perm\nname: {name}\ndegree: {degree}\n");
    for g in gens {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

/// `.grp` text for any group, as its Cayley table.
pub fn cayley_file_text(name: &str, g: &FiniteGroup) -> String {
    let mut out = format!("format: cayley\nname: {name}\norder: {}\n", g.order());
    for row in g.cayley_rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
