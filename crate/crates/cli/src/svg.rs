//! Minimal SVG plots: polylines in a fixed viewport fitted to a bounding
//! box with a 5% margin.

use std::fmt::Write;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 0.05;

pub const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];

#[derive(Debug, Clone, Copy)]
pub struct BBox {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl BBox {
    pub fn around(points: impl IntoIterator<Item = (f64, f64)>) -> Self {
        let mut b = BBox {
            x0: f64::INFINITY,
            x1: f64::NEG_INFINITY,
            y0: f64::INFINITY,
            y1: f64::NEG_INFINITY,
        };
        for (x, y) in points {
            b.x0 = b.x0.min(x);
            b.x1 = b.x1.max(x);
            b.y0 = b.y0.min(y);
            b.y1 = b.y1.max(y);
        }
        if !b.x0.is_finite() {
            return BBox { x0: 0.0, x1: 1.0, y0: 0.0, y1: 1.0 };
        }
        // degenerate extents still need a nonzero scale
        if b.x1 - b.x0 < 1e-12 {
            b.x0 -= 0.5;
            b.x1 += 0.5;
        }
        if b.y1 - b.y0 < 1e-12 {
            b.y0 -= 0.5;
            b.y1 += 0.5;
        }
        b
    }

    fn padded(self) -> Self {
        let dx = (self.x1 - self.x0) * MARGIN;
        let dy = (self.y1 - self.y0) * MARGIN;
        BBox {
            x0: self.x0 - dx,
            x1: self.x1 + dx,
            y0: self.y0 - dy,
            y1: self.y1 + dy,
        }
    }
}

pub struct Plot {
    view: BBox,
    body: String,
    desc: Vec<String>,
}

impl Plot {
    pub fn new(content: BBox) -> Self {
        Self {
            view: content.padded(),
            body: String::new(),
            desc: Vec::new(),
        }
    }

    fn px(&self, x: f64, y: f64) -> (f64, f64) {
        let v = &self.view;
        (
            (x - v.x0) / (v.x1 - v.x0) * WIDTH,
            HEIGHT - (y - v.y0) / (v.y1 - v.y0) * HEIGHT,
        )
    }

    pub fn describe(&mut self, line: impl Into<String>) {
        self.desc.push(line.into());
    }

    pub fn polyline(&mut self, id: &str, points: &[(f64, f64)], stroke: &str, dashed: bool) {
        let mut coords = String::new();
        for (i, &(x, y)) in points.iter().enumerate() {
            let (px, py) = self.px(x, y);
            if i > 0 {
                coords.push(' ');
            }
            let _ = write!(coords, "{px:.3},{py:.3}");
        }
        let dash = if dashed { " stroke-dasharray=\"4 3\"" } else { "" };
        let _ = writeln!(
            self.body,
            "  <polyline id=\"{id}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"1.5\"{dash} points=\"{coords}\"/>"
        );
    }

    /// Horizontal axis at `y` with tick labels at the given abscissae.
    pub fn axis(&mut self, y: f64, ticks: &[(f64, String)]) {
        let (x0, py) = self.px(self.view.x0, y);
        let (x1, _) = self.px(self.view.x1, y);
        let _ = writeln!(
            self.body,
            "  <line class=\"axis\" x1=\"{x0:.3}\" y1=\"{py:.3}\" x2=\"{x1:.3}\" y2=\"{py:.3}\" stroke=\"#000\"/>"
        );
        for (x, label) in ticks {
            let (px, _) = self.px(*x, y);
            let _ = writeln!(
                self.body,
                "  <line class=\"tick\" x1=\"{px:.3}\" y1=\"{:.3}\" x2=\"{px:.3}\" y2=\"{:.3}\" stroke=\"#000\"/>",
                py - 5.0,
                py + 5.0
            );
            let _ = writeln!(
                self.body,
                "  <text class=\"tick-label\" x=\"{px:.3}\" y=\"{:.3}\" font-size=\"12\" text-anchor=\"middle\">{label}</text>",
                py + 18.0
            );
        }
    }

    pub fn finish(self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
        );
        for line in &self.desc {
            let _ = writeln!(s, "  <desc>{line}</desc>");
        }
        let _ = writeln!(s, "  <rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"#fff\"/>");
        s.push_str(&self.body);
        s.push_str("</svg>\n");
        s
    }
}
