// SVG drawing of a configuration. Lines are clipped to the viewport; the
// drawing uses floating point only, exact values stay upstream.

use std::fmt::Write;

use super::trace::Configuration;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Default for Viewport {
    fn default() -> Self {
        Viewport { x_min: -0.5, x_max: 1.5, y_min: -0.5, y_max: 1.5 }
    }
}

impl Viewport {
    /// Bounding box of the points with a margin, never smaller than the default.
    pub fn fit(cfg: &Configuration) -> Viewport {
        let mut v = Viewport::default();
        for p in cfg.points() {
            let (x, y) = (p.x.approx(), p.y.approx());
            v.x_min = v.x_min.min(x - 0.25);
            v.x_max = v.x_max.max(x + 0.25);
            v.y_min = v.y_min.min(y - 0.25);
            v.y_max = v.y_max.max(y + 0.25);
        }
        v
    }

    /// Segment of `a x + b y + c = 0` inside the box, if any.
    fn clip(&self, a: f64, b: f64, c: f64) -> Option<((f64, f64), (f64, f64))> {
        let mut hits: Vec<(f64, f64)> = Vec::new();
        let eps = 1e-12;
        if b.abs() > eps {
            for x in [self.x_min, self.x_max] {
                let y = -(a * x + c) / b;
                if y >= self.y_min - eps && y <= self.y_max + eps {
                    hits.push((x, y));
                }
            }
        }
        if a.abs() > eps {
            for y in [self.y_min, self.y_max] {
                let x = -(b * y + c) / a;
                if x >= self.x_min - eps && x <= self.x_max + eps {
                    hits.push((x, y));
                }
            }
        }
        let first = *hits.first()?;
        let far = hits.iter().copied().max_by(|p, q| dist(first, *p).total_cmp(&dist(first, *q)))?;
        (dist(first, far) > eps).then_some((first, far))
    }
}

fn dist(p: (f64, f64), q: (f64, f64)) -> f64 {
    (p.0 - q.0).hypot(p.1 - q.1)
}

/// One polyline per line, one circle per point, `size` pixels square.
pub fn render_svg(cfg: &Configuration, view: &Viewport, size: u32) -> String {
    let s = size as f64;
    let sx = s / (view.x_max - view.x_min);
    let sy = s / (view.y_max - view.y_min);
    let px = |x: f64| (x - view.x_min) * sx;
    let py = |y: f64| (view.y_max - y) * sy;
    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#);
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for l in cfg.lines() {
        if let Some(((x0, y0), (x1, y1))) = view.clip(l.a.approx(), l.b.approx(), l.c.approx()) {
            let _ = writeln!(
                out,
                r#"<polyline points="{:.3},{:.3} {:.3},{:.3}" stroke="steelblue" stroke-width="1" fill="none"><title>{l}</title></polyline>"#,
                px(x0),
                py(y0),
                px(x1),
                py(y1)
            );
        }
    }
    for p in cfg.points() {
        let _ = writeln!(
            out,
            r#"<circle cx="{:.3}" cy="{:.3}" r="3" fill="crimson"><title>{p}</title></circle>"#,
            px(p.x.approx()),
            py(p.y.approx())
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::Construction;

    #[test]
    fn draws_lines_and_points() {
        let mut c = Construction::seeded();
        let y = c.line_through(0, 1).unwrap();
        let h = c.perp_bisector(0, 1).unwrap();
        c.intersect(y, h).unwrap();
        let cfg = c.configuration();
        let svg = render_svg(&cfg, &Viewport::fit(&cfg), 400);
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert_eq!(svg.matches("<circle").count(), 3);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    }
}
