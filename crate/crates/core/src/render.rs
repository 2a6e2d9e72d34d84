//! Arc-view rendering of structures and diagrams, as SVG or plain text.
//!
//! Layout: bases sit on horizontal rows at a fixed spacing. An arc's height is
//! its nesting level times the height increment. A–T pairs and C–G pairs get
//! one color each; nothing else is colored.

use std::fmt::Write as _;

use crate::diagram::Diagram;
use crate::dotbracket;
use crate::structure::{nesting_levels, SecondaryStructure};
use crate::word::{Base, PairType};

#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    pub at_color: String,
    pub cg_color: String,
    /// Horizontal distance between adjacent bases.
    pub spacing: f64,
    /// Extra height per nesting level.
    pub arc_increment: f64,
    /// Mark A and C as running downward and G and T upward.
    pub show_direction_arrows: bool,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            at_color: "red".to_string(),
            cg_color: "blue".to_string(),
            spacing: 24.0,
            arc_increment: 14.0,
            show_direction_arrows: false,
        }
    }
}

impl RenderStyle {
    pub fn color(&self, pair: PairType) -> &str {
        match pair {
            PairType::AT => &self.at_color,
            PairType::CG => &self.cg_color,
        }
    }

    fn checked(&self) -> RenderStyle {
        let mut s = self.clone();
        if !s.spacing.is_finite() || s.spacing <= 0.0 {
            s.spacing = RenderStyle::default().spacing;
        }
        if !s.arc_increment.is_finite() || s.arc_increment <= 0.0 {
            s.arc_increment = RenderStyle::default().arc_increment;
        }
        s
    }
}

const MARGIN: f64 = 16.0;
const GLYPH_R: f64 = 8.0;

fn fmt_num(v: f64) -> String {
    let r = (v * 100.0).round() / 100.0;
    if r == r.trunc() {
        format!("{}", r as i64)
    } else {
        format!("{r}")
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

struct Svg {
    body: String,
    width: f64,
    height: f64,
}

impl Svg {
    fn new(width: f64, height: f64) -> Self {
        Svg {
            body: String::new(),
            width,
            height,
        }
    }

    fn glyph(&mut self, row: &str, pos: usize, base: Base, cx: f64, cy: f64, style: &RenderStyle) {
        let _ = writeln!(
            self.body,
            r#"  <g class="base" data-row="{row}" data-pos="{pos}"><circle cx="{}" cy="{}" r="{}" fill="white" stroke="black"/><text x="{}" y="{}" text-anchor="middle" font-family="monospace" font-size="11">{}</text></g>"#,
            fmt_num(cx),
            fmt_num(cy),
            fmt_num(GLYPH_R),
            fmt_num(cx),
            fmt_num(cy + 4.0),
            base
        );
        if style.show_direction_arrows {
            // A and C run down the page, G and T up.
            let down = matches!(base, Base::A | Base::C);
            let (tip, back) = if down { (cy + 14.0, cy + 10.0) } else { (cy - 14.0, cy - 10.0) };
            let _ = writeln!(
                self.body,
                r#"  <path class="direction" d="M {} {} L {} {} L {} {} Z" fill="black"/>"#,
                fmt_num(cx - 3.0),
                fmt_num(back),
                fmt_num(cx + 3.0),
                fmt_num(back),
                fmt_num(cx),
                fmt_num(tip)
            );
        }
    }

    /// A half-ellipse between two anchors on the same row; `up` bends toward
    /// smaller y.
    #[allow(clippy::too_many_arguments)]
    fn arc(&mut self, class: &str, ends: (usize, usize), from: (f64, f64), to: (f64, f64), height: f64, up: bool, color: &str) {
        let rx = (to.0 - from.0) / 2.0;
        let sweep = if up { 1 } else { 0 };
        let _ = writeln!(
            self.body,
            r#"  <path class="{class}" data-i="{}" data-j="{}" d="M {} {} A {} {} 0 0 {sweep} {} {}" fill="none" stroke="{}" stroke-width="2"/>"#,
            ends.0,
            ends.1,
            fmt_num(from.0),
            fmt_num(from.1),
            fmt_num(rx),
            fmt_num(height),
            fmt_num(to.0),
            fmt_num(to.1),
            escape(color)
        );
    }

    fn finish(self) -> String {
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n{}</svg>\n",
            self.body,
            w = fmt_num(self.width),
            h = fmt_num(self.height),
        )
    }
}

fn column_x(pos: usize, style: &RenderStyle) -> f64 {
    MARGIN + GLYPH_R + (pos as f64 - 1.0) * style.spacing
}

fn row_width(len: usize, style: &RenderStyle) -> f64 {
    2.0 * (MARGIN + GLYPH_R) + (len.max(1) as f64 - 1.0) * style.spacing
}

/// Arc diagram of a structure: bases on one line, arcs above it.
pub fn render_structure_svg(s: &SecondaryStructure, style: &RenderStyle) -> String {
    let style = style.checked();
    let levels = s.nesting_levels();
    let max_level = levels.iter().copied().max().unwrap_or(0) as f64;
    let baseline = MARGIN + max_level * style.arc_increment + GLYPH_R + 4.0;
    let mut svg = Svg::new(row_width(s.len(), &style), baseline + GLYPH_R + MARGIN + 12.0);
    for (idx, &(i, j)) in s.arcs().iter().enumerate() {
        let top = baseline - GLYPH_R;
        svg.arc(
            "arc",
            (i, j),
            (column_x(i, &style), top),
            (column_x(j, &style), top),
            levels[idx] as f64 * style.arc_increment,
            true,
            style.color(s.pair_type((i, j))),
        );
    }
    for (k, &b) in s.word().iter().enumerate() {
        svg.glyph("structure", k + 1, b, column_x(k + 1, &style), baseline, &style);
    }
    svg.finish()
}

/// Rectangle picture of a diagram: source on top, target below.
pub fn render_diagram_svg(d: &Diagram, style: &RenderStyle) -> String {
    let style = style.checked();
    let src_levels = nesting_levels(d.source_arcs());
    let tgt_levels = nesting_levels(d.target_arcs());
    let src_depth = src_levels.iter().copied().max().unwrap_or(0) as f64 * style.arc_increment;
    let tgt_depth = tgt_levels.iter().copied().max().unwrap_or(0) as f64 * style.arc_increment;
    let top = MARGIN + GLYPH_R;
    let bottom = top + GLYPH_R + src_depth.max(20.0) + tgt_depth + 40.0 + GLYPH_R;
    let width = row_width(d.source().len().max(d.target().len()), &style);
    let mut svg = Svg::new(width, bottom + GLYPH_R + MARGIN);

    for (idx, &(i, j)) in d.source_arcs().iter().enumerate() {
        svg.arc(
            "source-arc",
            (i, j),
            (column_x(i, &style), top + GLYPH_R),
            (column_x(j, &style), top + GLYPH_R),
            src_levels[idx] as f64 * style.arc_increment,
            false,
            style.color(d.source().at(i).pair_type()),
        );
    }
    for (idx, &(i, j)) in d.target_arcs().iter().enumerate() {
        svg.arc(
            "target-arc",
            (i, j),
            (column_x(i, &style), bottom - GLYPH_R),
            (column_x(j, &style), bottom - GLYPH_R),
            tgt_levels[idx] as f64 * style.arc_increment,
            true,
            style.color(d.target().at(i).pair_type()),
        );
    }
    for &(i, j) in d.through() {
        let (x1, y1) = (column_x(i, &style), top + GLYPH_R);
        let (x2, y2) = (column_x(j, &style), bottom - GLYPH_R);
        let mid = (y1 + y2) / 2.0;
        let _ = writeln!(
            svg.body,
            r#"  <path class="wire" data-i="{i}" data-j="{j}" d="M {} {} C {} {} {} {} {} {}" fill="none" stroke="{}" stroke-width="2"/>"#,
            fmt_num(x1),
            fmt_num(y1),
            fmt_num(x1),
            fmt_num(mid),
            fmt_num(x2),
            fmt_num(mid),
            fmt_num(x2),
            fmt_num(y2),
            escape(style.color(d.source().at(i).pair_type()))
        );
    }
    for (k, &b) in d.source().iter().enumerate() {
        svg.glyph("source", k + 1, b, column_x(k + 1, &style), top, &style);
    }
    for (k, &b) in d.target().iter().enumerate() {
        svg.glyph("target", k + 1, b, column_x(k + 1, &style), bottom, &style);
    }
    svg.finish()
}

/// Sequence line, bracket line, then one sketch row per nesting level
/// (outermost first): `/` and `\` mark the ends of arcs at that level, `|`
/// continues enclosing arcs down to the baseline.
pub fn render_structure_text(s: &SecondaryStructure) -> String {
    let mut out = String::new();
    out.push_str(&s.word().to_string());
    out.push('\n');
    out.push_str(&dotbracket::bracket_line(s));
    out.push('\n');
    let levels = s.nesting_levels();
    let max_level = levels.iter().copied().max().unwrap_or(0);
    for row in (1..=max_level).rev() {
        let mut line = vec![' '; s.len()];
        for (&(i, j), &lv) in s.arcs().iter().zip(&levels) {
            if lv == row {
                line[i - 1] = '/';
                line[j - 1] = '\\';
                for c in &mut line[i..j - 1] {
                    *c = '_';
                }
            } else if lv > row {
                line[i - 1] = '|';
                line[j - 1] = '|';
            }
        }
        let text: String = line.into_iter().collect();
        out.push_str(text.trim_end());
        out.push('\n');
    }
    out
}

/// Text form of a diagram: its `.ddna` listing.
pub fn render_diagram_text(d: &Diagram) -> String {
    crate::diagram::format::emit(d)
}
