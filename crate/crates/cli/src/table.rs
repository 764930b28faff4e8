//! Result tables and the CSV dialect: comma separator, `.` decimal point,
//! one header row, LF line endings.
//!
//! Numbers render as the shortest decimal that parses back to the same
//! double, so identical inputs produce byte-identical files; `--digits N`
//! switches to fixed precision.

use std::fmt::Write as _;

/// Number rendering mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumberFormat {
    /// Shortest round-trip decimal representation.
    Shortest,
    /// Fixed number of fractional digits.
    Fixed(usize),
}

impl NumberFormat {
    pub fn render(&self, value: f64) -> String {
        match self {
            NumberFormat::Shortest => format!("{value}"),
            NumberFormat::Fixed(digits) => format!("{value:.digits$}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Empty,
    Text(String),
    Num(f64),
}

impl Cell {
    fn render(&self, fmt: NumberFormat) -> String {
        match self {
            Cell::Empty => String::new(),
            Cell::Text(text) => text.clone(),
            Cell::Num(value) => fmt.render(*value),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: Vec<&str>) -> Self {
        Table {
            header: header.into_iter().map(str::to_string).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// Renders the table in the CSV dialect.
    pub fn render(&self, fmt: NumberFormat) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            let mut first = true;
            for cell in row {
                if !first {
                    out.push(',');
                }
                first = false;
                let _ = write!(out, "{}", cell.render(fmt));
            }
            out.push('\n');
        }
        out
    }

    /// Parses CSV text produced by [`Table::render`]. A cell becomes
    /// numeric only when re-rendering the parsed value reproduces the text
    /// exactly, so ids like `007` survive a round trip untouched.
    pub fn parse(text: &str) -> Result<Table, String> {
        let mut lines = text.split('\n');
        let header_line = lines.next().ok_or("empty table")?;
        let header: Vec<String> = header_line.split(',').map(str::to_string).collect();
        let mut rows = Vec::new();
        for line in lines {
            if line.is_empty() {
                continue;
            }
            let row: Vec<Cell> = line
                .split(',')
                .map(|cell| {
                    if cell.is_empty() {
                        return Cell::Empty;
                    }
                    if let Ok(value) = cell.parse::<f64>() {
                        if format!("{value}") == cell {
                            return Cell::Num(value);
                        }
                    }
                    Cell::Text(cell.to_string())
                })
                .collect();
            if row.len() != header.len() {
                return Err(format!(
                    "row has {} cells, header has {}",
                    row.len(),
                    header.len()
                ));
            }
            rows.push(row);
        }
        Ok(Table { header, rows })
    }
}
