//! The text format for tables: an optional `# point = k` header, a line
//! holding the order `n`, then `n` rows of `n` whitespace-separated entries.
//! Labels in files are 1-based; tables in memory are 0-based. This module is
//! the only place where file labels are converted.

use std::fmt;
use std::path::Path;

use anyhow::Context;
use wardforge::Magma;

/// A table read from or written to a file, with its optional point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableFile {
    pub magma: Magma,
    pub point: Option<usize>,
}

/// A positioned parse failure; line and column are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

fn error(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let skip = rest.len() - rest.trim_start().len();
        offset += skip;
        rest = &rest[skip..];
        if rest.is_empty() {
            return None;
        }
        let len = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let token = &rest[..len];
        let column = line[..offset].chars().count() + 1;
        offset += len;
        rest = &rest[len..];
        Some((column, token))
    })
}

/// The value of a `# point = k` header, if the comment is one.
fn point_header(comment: &str) -> Option<&str> {
    let body = comment.trim_start_matches('#').trim();
    let value = body.strip_prefix("point")?.trim_start().strip_prefix('=')?;
    Some(value.trim())
}

impl TableFile {
    pub fn new(magma: Magma, point: Option<usize>) -> Self {
        TableFile { magma, point }
    }

    pub fn parse(text: &str) -> Result<TableFile, ParseError> {
        let mut point: Option<(usize, usize)> = None; // (1-based value, line)
        let mut order: Option<usize> = None;
        let mut rows: Vec<Vec<usize>> = Vec::new();
        let mut last_line = 0;

        for (index, raw) in text.lines().enumerate() {
            let lineno = index + 1;
            last_line = lineno;
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            if trimmed.starts_with('#') {
                if let Some(value) = point_header(trimmed) {
                    let column = raw.find(value).map_or(1, |c| raw[..c].chars().count() + 1);
                    if point.is_some() {
                        return Err(error(lineno, 1, "duplicate point header"));
                    }
                    let k = value
                        .parse::<usize>()
                        .map_err(|_| error(lineno, column, format!("invalid point {value:?}")))?;
                    point = Some((k, lineno));
                }
                continue;
            }
            let fields: Vec<(usize, &str)> = tokens(raw).collect();
            match order {
                None => {
                    let (column, token) = fields[0];
                    if fields.len() > 1 {
                        return Err(error(lineno, fields[1].0, "the order line must hold one integer"));
                    }
                    let n = token
                        .parse::<usize>()
                        .map_err(|_| error(lineno, column, format!("invalid order {token:?}")))?;
                    if n == 0 {
                        return Err(error(lineno, column, "the order must be at least 1"));
                    }
                    order = Some(n);
                }
                Some(n) => {
                    if rows.len() == n {
                        return Err(error(lineno, fields[0].0, format!("more than {n} rows")));
                    }
                    if fields.len() != n {
                        let column = fields.get(n).map_or(raw.trim_end().chars().count() + 1, |f| f.0);
                        return Err(error(
                            lineno,
                            column,
                            format!("expected {n} entries, found {}", fields.len()),
                        ));
                    }
                    let mut row = Vec::with_capacity(n);
                    for (column, token) in fields {
                        let v = token
                            .parse::<usize>()
                            .map_err(|_| error(lineno, column, format!("invalid entry {token:?}")))?;
                        if !(1..=n).contains(&v) {
                            return Err(error(lineno, column, format!("entry {v} is outside 1..{n}")));
                        }
                        row.push(v - 1);
                    }
                    rows.push(row);
                }
            }
        }

        let n = order.ok_or_else(|| error(last_line.max(1), 1, "missing order line"))?;
        if rows.len() < n {
            return Err(error(
                last_line + 1,
                1,
                format!("expected {n} rows, found {}", rows.len()),
            ));
        }
        let point = match point {
            Some((k, line)) if !(1..=n).contains(&k) => {
                return Err(error(line, 1, format!("point {k} is outside 1..{n}")));
            }
            Some((k, _)) => Some(k - 1),
            None => None,
        };
        let magma = Magma::from_rows(&rows).expect("rows are square and in range");
        Ok(TableFile { magma, point })
    }

    pub fn read(path: &Path) -> anyhow::Result<TableFile> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        TableFile::parse(&text).with_context(|| format!("cannot parse {}", path.display()))
    }

    pub fn write(&self, path: &Path) -> anyhow::Result<()> {
        std::fs::write(path, self.to_string())
            .with_context(|| format!("cannot write {}", path.display()))
    }
}

impl fmt::Display for TableFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.point {
            writeln!(f, "# point = {}", p + 1)?;
        }
        writeln!(f, "{}", self.magma.order())?;
        let width = self.magma.order().to_string().len();
        for row in self.magma.rows() {
            let cells: Vec<String> = row.iter().map(|v| format!("{:>width$}", v + 1)).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
