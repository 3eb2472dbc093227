//! CSV emission and parsing. Values are written with 17 significant digits
//! so every f64 round-trips bit-exactly.

use std::fmt;
use std::io::Write;
use std::path::Path;

#[derive(Debug)]
pub enum CsvError {
    Io(std::io::Error),
    MissingColumn(String),
    Ragged { row: usize },
    BadNumber { row: usize, column: String },
    Empty,
}

impl fmt::Display for CsvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Io(e) => write!(f, "io: {e}"),
            Self::MissingColumn(c) => write!(f, "missing column '{c}'"),
            Self::Ragged { row } => write!(f, "row {row} has the wrong number of fields"),
            Self::BadNumber { row, column } => {
                write!(f, "row {row}, column '{column}': not a number")
            }
            Self::Empty => write!(f, "empty csv"),
        }
    }
}

impl std::error::Error for CsvError {}

impl From<std::io::Error> for CsvError {
    fn from(e: std::io::Error) -> Self {
        Self::Io(e)
    }
}

/// In-memory column-oriented table.
#[derive(Debug, Clone)]
pub struct CsvTable {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl CsvTable {
    pub fn column(&self, name: &str) -> Result<Vec<f64>, CsvError> {
        let idx = self
            .columns
            .iter()
            .position(|c| c == name)
            .ok_or_else(|| CsvError::MissingColumn(name.to_string()))?;
        Ok(self.rows.iter().map(|r| r[idx]).collect())
    }
}

/// Round-trip-safe float formatting: 17 significant digits.
pub fn format_value(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if v.is_nan() {
        return "nan".to_string();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    format!("{v:.16e}")
}

/// Write `rows` under `header` to `path`.
pub fn write_csv(path: &Path, header: &[&str], rows: &[Vec<f64>]) -> Result<(), CsvError> {
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    writeln!(out, "{}", header.join(","))?;
    for row in rows {
        let line: Vec<String> = row.iter().map(|&v| format_value(v)).collect();
        writeln!(out, "{}", line.join(","))?;
    }
    out.flush()?;
    Ok(())
}

/// Parse a CSV emitted by [`write_csv`].
pub fn read_csv(path: &Path) -> Result<CsvTable, CsvError> {
    let text = std::fs::read_to_string(path)?;
    let mut lines = text.lines();
    let header = lines.next().ok_or(CsvError::Empty)?;
    let columns: Vec<String> = header.split(',').map(|s| s.trim().to_string()).collect();
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != columns.len() {
            return Err(CsvError::Ragged { row: i + 2 });
        }
        let mut row = Vec::with_capacity(fields.len());
        for (j, f) in fields.iter().enumerate() {
            let v = match f.trim() {
                "nan" => f64::NAN,
                "inf" => f64::INFINITY,
                "-inf" => f64::NEG_INFINITY,
                s => s.parse().map_err(|_| CsvError::BadNumber {
                    row: i + 2,
                    column: columns[j].clone(),
                })?,
            };
            row.push(v);
        }
        rows.push(row);
    }
    Ok(CsvTable { columns, rows })
}
