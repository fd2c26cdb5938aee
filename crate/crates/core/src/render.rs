//! ASCII and SVG pictures of grids, optionally with label gutters.

use std::fmt::Write;

use crate::grid::{Grid01, Labelling};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

pub fn render(g: &Grid01, labels: Option<&Labelling>, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(g, labels),
        RenderFormat::Svg => render_svg(g, labels),
    }
}

fn cell_char(b: bool) -> char {
    if b {
        '#'
    } else {
        '.'
    }
}

/// `#` for a 1 and `.` for a 0. With labels, a header line carries the
/// column labels and each row is prefixed by its label.
pub fn render_ascii(g: &Grid01, labels: Option<&Labelling>) -> String {
    let mut out = String::new();
    let Some(l) = labels else {
        for i in 1..=g.m() {
            out.extend(g.row(i).iter().map(|&b| cell_char(b)));
            out.push('\n');
        }
        return out;
    };

    let col_names: Vec<String> = l.cols().iter().map(|c| format!("v{c}")).collect();
    let row_names: Vec<String> = l.rows().iter().map(|r| format!("v{r}")).collect();
    let cw = col_names.iter().map(String::len).max().unwrap_or(1);
    let gutter = row_names.iter().map(String::len).max().unwrap_or(1);

    let header: Vec<String> = col_names.iter().map(|c| format!("{c:<cw$}")).collect();
    let _ = writeln!(out, "{:gutter$} {}", "", header.join(" ").trim_end());
    for i in 1..=g.m() {
        let cells: Vec<String> = g.row(i).iter().map(|&b| format!("{:<cw$}", cell_char(b))).collect();
        let _ = writeln!(out, "{:<gutter$} {}", row_names[i - 1], cells.join(" ").trim_end());
    }
    out
}

const UNIT: usize = 20;

/// A standalone SVG document with one `<rect>` per filled cell. Grid lines
/// and labels use `<line>` and `<text>` so that rectangles count cells.
pub fn render_svg(g: &Grid01, labels: Option<&Labelling>) -> String {
    let margin = if labels.is_some() { 2 * UNIT } else { UNIT / 2 };
    let width = g.n() * UNIT + margin + UNIT / 2;
    let height = g.m() * UNIT + margin + UNIT / 2;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r##"<g stroke="#999" stroke-width="1">"##);
    for i in 0..=g.m() {
        let y = margin + i * UNIT;
        let _ = writeln!(out, r#"<line x1="{margin}" y1="{y}" x2="{}" y2="{y}"/>"#, margin + g.n() * UNIT);
    }
    for j in 0..=g.n() {
        let x = margin + j * UNIT;
        let _ = writeln!(out, r#"<line x1="{x}" y1="{margin}" x2="{x}" y2="{}"/>"#, margin + g.m() * UNIT);
    }
    let _ = writeln!(out, "</g>");
    for i in 1..=g.m() {
        for j in 1..=g.n() {
            if g.get(i, j) {
                let _ = writeln!(
                    out,
                    r##"<rect x="{}" y="{}" width="{UNIT}" height="{UNIT}" fill="#bbb" stroke="#000"/>"##,
                    margin + (j - 1) * UNIT,
                    margin + (i - 1) * UNIT
                );
            }
        }
    }
    if let Some(l) = labels {
        for (k, r) in l.rows().iter().enumerate() {
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-size="10" text-anchor="end">v{r}</text>"#,
                margin - 4,
                margin + k * UNIT + UNIT * 2 / 3
            );
        }
        for (k, c) in l.cols().iter().enumerate() {
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-size="10" text-anchor="middle">v{c}</text>"#,
                margin + k * UNIT + UNIT / 2,
                margin - 6
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
