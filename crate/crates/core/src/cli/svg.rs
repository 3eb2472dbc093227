//! Minimal standalone SVG line charts over CSV columns.

use super::csv::{read_csv, CsvError};
use std::fmt::Write as _;
use std::path::Path;

#[derive(Debug)]
pub enum SvgError {
    Csv(CsvError),
    Io(std::io::Error),
    /// No finite data to plot after log filtering.
    NoData,
}

impl std::fmt::Display for SvgError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Csv(e) => write!(f, "csv: {e}"),
            Self::Io(e) => write!(f, "io: {e}"),
            Self::NoData => write!(f, "no plottable data"),
        }
    }
}

impl std::error::Error for SvgError {}

impl From<CsvError> for SvgError {
    fn from(e: CsvError) -> Self {
        Self::Csv(e)
    }
}

impl From<std::io::Error> for SvgError {
    fn from(e: std::io::Error) -> Self {
        Self::Io(e)
    }
}

/// What to plot: one x column against one or more y columns.
#[derive(Debug, Clone)]
pub struct PlotSpec {
    pub x_column: String,
    pub y_columns: Vec<String>,
    pub log_x: bool,
    pub log_y: bool,
    pub title: String,
}

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 60.0;
const COLORS: &[&str] = &["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

/// Render `spec` over the CSV at `csv_path` into a standalone SVG file.
/// Output is deterministic for fixed input.
pub fn emit_plot(csv_path: &Path, spec: &PlotSpec, svg_path: &Path) -> Result<(), SvgError> {
    let table = read_csv(csv_path)?;
    let x_raw = table.column(&spec.x_column)?;
    let mut series = Vec::new();
    for name in &spec.y_columns {
        series.push((name.clone(), table.column(name)?));
    }

    let tx = |v: f64| if spec.log_x { v.log10() } else { v };
    let ty = |v: f64| if spec.log_y { v.log10() } else { v };
    let usable = |v: f64, log: bool| v.is_finite() && (!log || v > 0.0);

    let mut x_min = f64::INFINITY;
    let mut x_max = f64::NEG_INFINITY;
    let mut y_min = f64::INFINITY;
    let mut y_max = f64::NEG_INFINITY;
    for (_, ys) in &series {
        for (&x, &y) in x_raw.iter().zip(ys) {
            if usable(x, spec.log_x) && usable(y, spec.log_y) {
                x_min = x_min.min(tx(x));
                x_max = x_max.max(tx(x));
                y_min = y_min.min(ty(y));
                y_max = y_max.max(ty(y));
            }
        }
    }
    if !x_min.is_finite() || !y_min.is_finite() {
        return Err(SvgError::NoData);
    }
    if x_max == x_min {
        x_max = x_min + 1.0;
    }
    if y_max == y_min {
        y_max = y_min + 1.0;
    }
    let sx = (WIDTH - 2.0 * MARGIN) / (x_max - x_min);
    let sy = (HEIGHT - 2.0 * MARGIN) / (y_max - y_min);
    let map = |x: f64, y: f64| {
        (
            MARGIN + (tx(x) - x_min) * sx,
            HEIGHT - MARGIN - (ty(y) - y_min) * sy,
        )
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" data-log-x="{}" data-log-y="{}">"#,
        spec.log_x, spec.log_y
    );
    let _ = writeln!(
        svg,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="24" font-family="monospace" font-size="14" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        xml_escape(&spec.title)
    );
    // axes
    let _ = writeln!(
        svg,
        r#"<line x1="{m}" y1="{b}" x2="{r}" y2="{b}" stroke="black"/><line x1="{m}" y1="{t}" x2="{m}" y2="{b}" stroke="black"/>"#,
        m = MARGIN,
        b = HEIGHT - MARGIN,
        r = WIDTH - MARGIN,
        t = MARGIN
    );
    // axis labels with log markers
    let xl = if spec.log_x {
        format!("log10({})", spec.x_column)
    } else {
        spec.x_column.clone()
    };
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" font-family="monospace" font-size="12" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        HEIGHT - 16.0,
        xml_escape(&xl)
    );
    // tick labels at the corners of the data range
    for (v, x_pos) in [(x_min, MARGIN), (x_max, WIDTH - MARGIN)] {
        let _ = writeln!(
            svg,
            r#"<text x="{x_pos}" y="{}" font-family="monospace" font-size="10" text-anchor="middle">{v:.4}</text>"#,
            HEIGHT - MARGIN + 16.0
        );
    }
    for (v, y_pos) in [(y_min, HEIGHT - MARGIN), (y_max, MARGIN)] {
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{y_pos}" font-family="monospace" font-size="10" text-anchor="end">{v:.4}</text>"#,
            MARGIN - 6.0
        );
    }

    for (i, (name, ys)) in series.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let mut points = String::new();
        for (&x, &y) in x_raw.iter().zip(ys) {
            if usable(x, spec.log_x) && usable(y, spec.log_y) {
                let (px, py) = map(x, y);
                let _ = write!(points, "{px:.3},{py:.3} ");
            }
        }
        let _ = writeln!(
            svg,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"/>"#,
            points.trim_end()
        );
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" font-family="monospace" font-size="12" fill="{color}">{}</text>"#,
            WIDTH - MARGIN - 140.0,
            MARGIN + 18.0 * (i as f64 + 1.0),
            xml_escape(name)
        );
    }
    let _ = writeln!(svg, "</svg>");
    std::fs::write(svg_path, svg)?;
    Ok(())
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
