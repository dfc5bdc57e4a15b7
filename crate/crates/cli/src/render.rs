//! Deterministic SVG drawings. The y axis points up, as in the usual
//! mathematical orientation, so it is flipped when written.

use std::fmt::Write;
use std::str::FromStr;

use orthowatch_core::{BalancedGroup, KernelRect, OrthoPolygon, Point, Route, Slab};

use crate::error::{CliError, Result};

/// Layers to draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShowFlags {
    pub slabs: bool,
    pub groups: bool,
    pub corridors: bool,
    pub route: bool,
    pub kernel: bool,
}

impl Default for ShowFlags {
    fn default() -> Self {
        ShowFlags { slabs: true, groups: true, corridors: false, route: true, kernel: false }
    }
}

impl ShowFlags {
    pub const NONE: ShowFlags = ShowFlags { slabs: false, groups: false, corridors: false, route: false, kernel: false };
    pub const ALL: ShowFlags = ShowFlags { slabs: true, groups: true, corridors: true, route: true, kernel: true };
}

impl FromStr for ShowFlags {
    type Err = String;

    /// Comma-separated layer names, or `all` / `none`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let mut f = ShowFlags::NONE;
        for name in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match name {
                "slabs" => f.slabs = true,
                "groups" => f.groups = true,
                "corridors" => f.corridors = true,
                "route" => f.route = true,
                "kernel" => f.kernel = true,
                "all" => f = ShowFlags::ALL,
                "none" => {}
                _ => return Err(format!("unknown layer `{name}`")),
            }
        }
        Ok(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderOptions {
    /// Pixels per unit.
    pub scale: f64,
    pub show: ShowFlags,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { scale: 20.0, show: ShowFlags::default() }
    }
}

/// Everything that can appear in a drawing.
#[derive(Debug, Clone, Default)]
pub struct Scene<'a> {
    pub slabs: &'a [Slab],
    pub groups: &'a [BalancedGroup],
    pub route: Option<&'a Route>,
    pub kernel: Option<KernelRect>,
}

const MARGIN: f64 = 10.0;

struct Frame {
    x0: i64,
    y1: i64,
    scale: f64,
}

impl Frame {
    fn x(&self, x: i64) -> String {
        format!("{:.2}", MARGIN + (x - self.x0) as f64 * self.scale)
    }

    fn y(&self, y: i64) -> String {
        format!("{:.2}", MARGIN + (self.y1 - y) as f64 * self.scale)
    }

    fn len(&self, d: i64) -> String {
        format!("{:.2}", d as f64 * self.scale)
    }

    fn pt(&self, p: Point) -> String {
        format!("{},{}", self.x(p.x), self.y(p.y))
    }

    fn rect(&self, x0: i64, x1: i64, y0: i64, y1: i64, style: &str) -> String {
        format!(
            "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" {style}/>\n",
            self.x(x0),
            self.y(y1),
            self.len(x1 - x0),
            self.len(y1 - y0)
        )
    }
}

pub fn render_svg(p: &OrthoPolygon, scene: &Scene<'_>, opts: &RenderOptions) -> Result<String> {
    if !(opts.scale > 0.0 && opts.scale.is_finite()) {
        return Err(CliError::Input(format!("scale must be positive, got {}", opts.scale)));
    }
    let (lo, hi) = p.bounding_box();
    let f = Frame { x0: lo.x, y1: hi.y, scale: opts.scale };
    let w = 2.0 * MARGIN + (hi.x - lo.x) as f64 * opts.scale;
    let h = 2.0 * MARGIN + (hi.y - lo.y) as f64 * opts.scale;
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w:.2}\" height=\"{h:.2}\" viewBox=\"0 0 {w:.2} {h:.2}\">"
    );
    let ring: Vec<String> = p.vertices().iter().map(|&v| f.pt(v)).collect();
    let _ = writeln!(
        s,
        "<polygon id=\"polygon\" points=\"{}\" fill=\"#eef2f7\" stroke=\"#222222\" stroke-width=\"1.50\"/>",
        ring.join(" ")
    );
    if opts.show.slabs {
        s.push_str("<g id=\"slabs\" fill=\"none\" stroke=\"#8899aa\" stroke-width=\"0.75\" stroke-dasharray=\"4 3\">\n");
        for sl in scene.slabs {
            s.push_str(&f.rect(sl.x_left, sl.x_right, sl.lower, sl.upper, ""));
        }
        s.push_str("</g>\n");
    }
    if opts.show.corridors {
        s.push_str("<g id=\"corridors\" fill=\"#6cc070\" fill-opacity=\"0.35\" stroke=\"#3d8b40\" stroke-width=\"0.75\">\n");
        for g in scene.groups {
            s.push_str(&f.rect(g.x_left, g.x_right, g.lower_bound, g.upper_bound, ""));
        }
        s.push_str("</g>\n");
    }
    if opts.show.groups {
        s.push_str("<g id=\"groups\" stroke=\"#c0392b\" stroke-width=\"1.00\" stroke-dasharray=\"6 3\">\n");
        for g in scene.groups.iter().skip(1) {
            let _ = writeln!(s, "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>", f.x(g.x_left), f.y(hi.y), f.y(lo.y));
        }
        s.push_str("</g>\n");
    }
    if let (true, Some(k)) = (opts.show.kernel, scene.kernel) {
        s.push_str("<g id=\"kernel\" fill=\"#f1c40f\" fill-opacity=\"0.45\" stroke=\"#b7950b\" stroke-width=\"0.75\">\n");
        s.push_str(&f.rect(k.x_low, k.x_high, k.y_low, k.y_high, ""));
        s.push_str("</g>\n");
    }
    if let (true, Some(r)) = (opts.show.route, scene.route) {
        s.push_str("<g id=\"route\" fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"2.50\">\n");
        if r.points.len() == 1 {
            let q = r.points[0];
            let _ = writeln!(s, "<circle cx=\"{}\" cy=\"{}\" r=\"4.00\" fill=\"#1f5fbf\"/>", f.x(q.x), f.y(q.y));
        } else if !r.points.is_empty() {
            let pts: Vec<String> = r.points.iter().map(|&q| f.pt(q)).collect();
            let _ = writeln!(s, "<polyline points=\"{}\"/>", pts.join(" "));
        }
        s.push_str("</g>\n");
    }
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use orthowatch_core::{fixtures, solve_monotone_detailed, TrimMode};

    #[test]
    fn flags_parse() {
        assert_eq!("all".parse::<ShowFlags>(), Ok(ShowFlags::ALL));
        let f: ShowFlags = "route, kernel".parse().unwrap();
        assert!(f.route && f.kernel && !f.slabs);
        assert!("bogus".parse::<ShowFlags>().is_err());
    }

    #[test]
    fn y_axis_is_flipped() {
        let p = fixtures::rectangle();
        let svg = render_svg(&p, &Scene::default(), &RenderOptions { scale: 10.0, show: ShowFlags::NONE }).unwrap();
        // (0,0) is the bottom-left corner, drawn at the bottom of the image.
        assert!(svg.contains("points=\"10.00,30.00 50.00,30.00 50.00,10.00 10.00,10.00\""), "{svg}");
    }

    #[test]
    fn point_route_is_a_dot() {
        let p = fixtures::l_shape();
        let sol = solve_monotone_detailed(&p, TrimMode::Paper).unwrap();
        let scene = Scene { route: Some(&sol.route), ..Scene::default() };
        let svg = render_svg(&p, &scene, &RenderOptions::default()).unwrap();
        assert!(svg.contains("<circle"));
    }

    #[test]
    fn rejects_bad_scale() {
        let p = fixtures::rectangle();
        let opts = RenderOptions { scale: 0.0, show: ShowFlags::ALL };
        assert_eq!(render_svg(&p, &Scene::default(), &opts).unwrap_err().exit_code(), 2);
    }
}
