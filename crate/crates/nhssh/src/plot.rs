//! Small deterministic SVG emitter for line charts, scatters and heatmaps.
//!
//! Static SVG keeps golden-file diffs clean; coordinates are formatted
//! with fixed precision so repeated runs emit identical bytes.

use std::fmt::Write;

use crate::sweep::PhaseGrid;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 560.0;
const MARGIN_LEFT: f64 = 80.0;
const MARGIN_RIGHT: f64 = 30.0;
const MARGIN_TOP: f64 = 50.0;
const MARGIN_BOTTOM: f64 = 60.0;

const SERIES_COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

pub struct Series<'a> {
    pub label: &'a str,
    pub points: &'a [(f64, f64)],
}

struct Frame {
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
}

impl Frame {
    fn from_points<'a>(points: impl Iterator<Item = &'a (f64, f64)>) -> Frame {
        let mut x_min = f64::INFINITY;
        let mut x_max = f64::NEG_INFINITY;
        let mut y_min = f64::INFINITY;
        let mut y_max = f64::NEG_INFINITY;
        for &(x, y) in points {
            if !x.is_finite() || !y.is_finite() {
                continue;
            }
            x_min = x_min.min(x);
            x_max = x_max.max(x);
            y_min = y_min.min(y);
            y_max = y_max.max(y);
        }
        if !x_min.is_finite() {
            (x_min, x_max, y_min, y_max) = (0.0, 1.0, 0.0, 1.0);
        }
        // Symmetric padding; degenerate spans widen to a visible band.
        let pad = |min: &mut f64, max: &mut f64| {
            let span = *max - *min;
            let p = if span.abs() < 1e-12 { min.abs().max(1.0) * 0.1 } else { span * 0.05 };
            *min -= p;
            *max += p;
        };
        pad(&mut x_min, &mut x_max);
        pad(&mut y_min, &mut y_max);
        Frame { x_min, x_max, y_min, y_max }
    }

    fn px(&self, x: f64) -> f64 {
        MARGIN_LEFT + (x - self.x_min) / (self.x_max - self.x_min) * (WIDTH - MARGIN_LEFT - MARGIN_RIGHT)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT - MARGIN_BOTTOM
            - (y - self.y_min) / (self.y_max - self.y_min) * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM)
    }
}

fn open_svg(title: &str) -> String {
    let mut s = String::new();
    let _ = write!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n\
         <rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n\
         <text x=\"{:.1}\" y=\"28\" font-family=\"sans-serif\" font-size=\"18\" text-anchor=\"middle\">{}</text>\n",
        WIDTH / 2.0,
        escape(title)
    );
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn tick_label(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else if v.abs() >= 1e4 || v.abs() < 1e-3 {
        format!("{v:.2e}")
    } else {
        format!("{v:.3}")
    }
}

fn axes(s: &mut String, frame: &Frame, x_label: &str, y_label: &str) {
    let x0 = MARGIN_LEFT;
    let x1 = WIDTH - MARGIN_RIGHT;
    let y0 = HEIGHT - MARGIN_BOTTOM;
    let y1 = MARGIN_TOP;
    let _ = write!(
        s,
        "<rect x=\"{x0}\" y=\"{y1}\" width=\"{:.1}\" height=\"{:.1}\" fill=\"none\" stroke=\"black\"/>\n",
        x1 - x0,
        y0 - y1
    );
    for i in 0..=4 {
        let fx = frame.x_min + (frame.x_max - frame.x_min) * i as f64 / 4.0;
        let px = frame.px(fx);
        let _ = write!(
            s,
            "<line x1=\"{px:.1}\" y1=\"{y0:.1}\" x2=\"{px:.1}\" y2=\"{:.1}\" stroke=\"black\"/>\n\
             <text x=\"{px:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">{}</text>\n",
            y0 + 6.0,
            y0 + 22.0,
            tick_label(fx)
        );
        let fy = frame.y_min + (frame.y_max - frame.y_min) * i as f64 / 4.0;
        let py = frame.py(fy);
        let _ = write!(
            s,
            "<line x1=\"{:.1}\" y1=\"{py:.1}\" x2=\"{x0:.1}\" y2=\"{py:.1}\" stroke=\"black\"/>\n\
             <text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">{}</text>\n",
            x0 - 6.0,
            x0 - 10.0,
            py + 4.0,
            tick_label(fy)
        );
    }
    let _ = write!(
        s,
        "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">{}</text>\n\
         <text x=\"18\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 {:.1})\">{}</text>\n",
        (x0 + x1) / 2.0,
        HEIGHT - 14.0,
        escape(x_label),
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0,
        escape(y_label)
    );
}

/// Multi-series line chart; NaN values break the polyline.
pub fn line_chart(title: &str, x_label: &str, y_label: &str, series: &[Series]) -> String {
    let frame = Frame::from_points(series.iter().flat_map(|s| s.points.iter()));
    let mut svg = open_svg(title);
    axes(&mut svg, &frame, x_label, y_label);
    for (idx, s) in series.iter().enumerate() {
        let color = SERIES_COLORS[idx % SERIES_COLORS.len()];
        let mut segment = String::new();
        let flush = |seg: &mut String, out: &mut String| {
            if seg.matches(' ').count() >= 1 {
                let _ = write!(
                    out,
                    "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>\n",
                    seg.trim_end()
                );
            }
            seg.clear();
        };
        for &(x, y) in s.points {
            if !y.is_finite() || !x.is_finite() {
                flush(&mut segment, &mut svg);
                continue;
            }
            let _ = write!(segment, "{:.2},{:.2} ", frame.px(x), frame.py(y));
        }
        flush(&mut segment, &mut svg);
        let _ = write!(
            svg,
            "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"13\" fill=\"{color}\">{}</text>\n",
            WIDTH - MARGIN_RIGHT - 150.0,
            MARGIN_TOP + 18.0 * (idx as f64 + 1.0),
            escape(s.label)
        );
    }
    svg.push_str("</svg>\n");
    svg
}

/// Point cloud, e.g. Re(E) vs Im(E).
pub fn scatter_chart(title: &str, x_label: &str, y_label: &str, points: &[(f64, f64)]) -> String {
    let frame = Frame::from_points(points.iter());
    let mut svg = open_svg(title);
    axes(&mut svg, &frame, x_label, y_label);
    for &(x, y) in points {
        if !x.is_finite() || !y.is_finite() {
            continue;
        }
        let _ = write!(
            svg,
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2.5\" fill=\"#1f77b4\" fill-opacity=\"0.7\"/>\n",
            frame.px(x),
            frame.py(y)
        );
    }
    svg.push_str("</svg>\n");
    svg
}

/// Map a normalized value to the white → sky-blue → light-magenta ramp
/// used by the winding-number phase diagrams.
fn ramp(t: f64) -> String {
    let stops = [(255u16, 255u16, 255u16), (135, 206, 235), (244, 154, 240)];
    let t = t.clamp(0.0, 1.0) * 2.0;
    let (lo, hi, frac) = if t <= 1.0 { (stops[0], stops[1], t) } else { (stops[1], stops[2], t - 1.0) };
    let mix = |a: u16, b: u16| -> u16 { (a as f64 + (b as f64 - a as f64) * frac).round() as u16 };
    format!("#{:02x}{:02x}{:02x}", mix(lo.0, hi.0), mix(lo.1, hi.1), mix(lo.2, hi.2))
}

/// Cell-by-cell heatmap of a phase grid; indeterminate cells are grey.
pub fn heatmap(title: &str, grid: &PhaseGrid) -> String {
    let finite: Vec<f64> = grid.values.iter().copied().filter(|v| v.is_finite()).collect();
    let v_min = finite.iter().copied().fold(f64::INFINITY, f64::min).min(0.0);
    let v_max = finite.iter().copied().fold(f64::NEG_INFINITY, f64::max).max(v_min + 1e-12);

    let frame = Frame {
        x_min: grid.x_axis.min,
        x_max: grid.x_axis.max.max(grid.x_axis.min + 1e-12),
        y_min: grid.y_axis.min,
        y_max: grid.y_axis.max.max(grid.y_axis.min + 1e-12),
    };
    let mut svg = open_svg(title);
    let cell_w = (WIDTH - MARGIN_LEFT - MARGIN_RIGHT) / grid.x_axis.n as f64;
    let cell_h = (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM) / grid.y_axis.n as f64;
    for iy in 0..grid.y_axis.n {
        for ix in 0..grid.x_axis.n {
            let v = grid.value(ix, iy);
            let color = if v.is_finite() {
                ramp((v - v_min) / (v_max - v_min))
            } else {
                "#999999".to_string()
            };
            let px = MARGIN_LEFT + ix as f64 * cell_w;
            let py = HEIGHT - MARGIN_BOTTOM - (iy as f64 + 1.0) * cell_h;
            let _ = write!(
                svg,
                "<rect x=\"{px:.2}\" y=\"{py:.2}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"{color}\"/>\n",
                cell_w + 0.5,
                cell_h + 0.5
            );
        }
    }
    axes(&mut svg, &frame, &grid.x_axis.name, &grid.y_axis.name);
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_chart_is_valid_and_deterministic() {
        let pts: Vec<(f64, f64)> = (0..100).map(|i| (i as f64 * 0.1, (i as f64 * 0.1).sin())).collect();
        let series = [Series { label: "sin", points: &pts }];
        let a = line_chart("test", "x", "y", &series);
        let b = line_chart("test", "x", "y", &series);
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert!(a.ends_with("</svg>\n"));
        assert!(a.contains("polyline"));
    }

    #[test]
    fn nan_breaks_polyline_segments() {
        let pts = [(0.0, 0.0), (1.0, 1.0), (2.0, f64::NAN), (3.0, 1.0), (4.0, 0.0)];
        let svg = line_chart("gap", "x", "y", &[Series { label: "v", points: &pts }]);
        assert_eq!(svg.matches("<polyline").count(), 2);
    }

    #[test]
    fn ramp_endpoints() {
        assert_eq!(ramp(0.0), "#ffffff");
        assert_eq!(ramp(0.5), "#87ceeb");
        assert_eq!(ramp(1.0), "#f49af0");
    }
}
