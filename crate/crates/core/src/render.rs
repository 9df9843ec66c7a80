//! SVG figures of the Eisenstein lattice.
//!
//! `a + bρ` sits at `(a − b/2, b·√3/2)` in the plane. Output is a
//! self-contained SVG 1.1 document whose bytes depend only on the spec.
//! Every plotted point is a mark carrying `data-z="<literal>"` and a
//! `class` naming its category.

use std::fmt::Write as _;

use serde::Serialize;

use crate::eint::{lattice_points, EInt, Parity};
use crate::error::{Error, Result};
use crate::primes::{categorize_prime, PrimeCategory};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum PlotKind {
    Lattice,
    ParityMap,
    PrimeMap,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Palette {
    pub lattice: &'static str,
    pub even: &'static str,
    pub odd1: &'static str,
    pub odd2: &'static str,
    pub grid: &'static str,
}

impl Default for Palette {
    fn default() -> Self {
        Palette { lattice: "#1f4e79", even: "#f28e2b", odd1: "#7b3294", odd2: "#808000", grid: "#d0d0d0" }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct PlotSpec {
    pub kind: PlotKind,
    pub max_norm: u64,
    pub width: u32,
    pub height: u32,
    pub palette: Palette,
}

impl PlotSpec {
    pub fn new(kind: PlotKind, max_norm: u64) -> Self {
        PlotSpec { kind, max_norm, width: 600, height: 600, palette: Palette::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_norm == 0 {
            return Err(Error::InvalidArgument("max_norm must be at least 1".into()));
        }
        if self.width == 0 || self.height == 0 {
            return Err(Error::InvalidArgument("plot dimensions must be positive".into()));
        }
        if self.max_norm > 1_000_000 {
            return Err(Error::InvalidArgument("max_norm above 1000000 is not plotted".into()));
        }
        Ok(())
    }
}

/// Category a plotted point is drawn in.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Mark {
    Point,
    Parity(Parity),
    Prime(PrimeCategory),
}

impl Mark {
    pub fn class(self) -> &'static str {
        match self {
            Mark::Point => "point",
            Mark::Parity(Parity::Even) => "even",
            Mark::Parity(Parity::Odd1) => "odd1",
            Mark::Parity(Parity::Odd2) => "odd2",
            Mark::Prime(PrimeCategory::EvenPrime) => "prime-even",
            Mark::Prime(PrimeCategory::RationalInert) => "prime-inert",
            Mark::Prime(PrimeCategory::SplitFactor) => "prime-split",
        }
    }
}

/// The points a spec plots, in drawing order `(b, a)`.
pub fn plot_points(spec: &PlotSpec) -> Vec<(EInt, Mark)> {
    let points = lattice_points(spec.max_norm);
    match spec.kind {
        PlotKind::Lattice => points.into_iter().map(|z| (z, Mark::Point)).collect(),
        PlotKind::ParityMap => points.into_iter().map(|z| (z, Mark::Parity(z.parity()))).collect(),
        PlotKind::PrimeMap => points
            .into_iter()
            .filter_map(|z| categorize_prime(z).ok().map(|c| (z, Mark::Prime(c))))
            .collect(),
    }
}

const HALF_SQRT3: f64 = 0.866_025_403_784_438_6;

struct Frame {
    cx: f64,
    cy: f64,
    scale: f64,
}

impl Frame {
    fn new(spec: &PlotSpec) -> Self {
        let (w, h) = (spec.width as f64, spec.height as f64);
        let radius = (spec.max_norm as f64).sqrt() + 0.75;
        Frame { cx: w / 2.0, cy: h / 2.0, scale: w.min(h) / (2.0 * radius) }
    }

    fn place(&self, z: EInt) -> (f64, f64) {
        let x = z.a as f64 - z.b as f64 / 2.0;
        let y = z.b as f64 * HALF_SQRT3;
        (self.cx + x * self.scale, self.cy - y * self.scale)
    }
}

fn fmt3(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn mark_element(out: &mut String, z: EInt, mark: Mark, x: f64, y: f64, r: f64, palette: &Palette) {
    let class = mark.class();
    let _ = match mark {
        Mark::Point | Mark::Parity(Parity::Even) | Mark::Prime(PrimeCategory::EvenPrime) => {
            let fill = if mark == Mark::Point { palette.lattice } else { palette.even };
            writeln!(
                out,
                r#"  <circle class="{class}" data-z="{z}" cx="{}" cy="{}" r="{}" fill="{fill}"/>"#,
                fmt3(x),
                fmt3(y),
                fmt3(r)
            )
        }
        Mark::Parity(Parity::Odd1) | Mark::Prime(PrimeCategory::RationalInert) => {
            let side = fmt3(2.0 * r);
            writeln!(
                out,
                r#"  <rect class="{class}" data-z="{z}" x="{}" y="{}" width="{side}" height="{side}" fill="{}"/>"#,
                fmt3(x - r),
                fmt3(y - r),
                palette.odd1
            )
        }
        Mark::Parity(Parity::Odd2) | Mark::Prime(PrimeCategory::SplitFactor) => {
            let corners = [(x, y - r), (x - r * HALF_SQRT3, y + r / 2.0), (x + r * HALF_SQRT3, y + r / 2.0)];
            let pts: Vec<String> = corners.iter().map(|&(px, py)| format!("{},{}", fmt3(px), fmt3(py))).collect();
            writeln!(
                out,
                r#"  <polygon class="{class}" data-z="{z}" points="{}" fill="{}"/>"#,
                pts.join(" "),
                palette.odd2
            )
        }
    };
}

/// Norm circles for the prime map: one ring of radius `√n` per distinct
/// prime norm, styled by the category living on it.
fn norm_rings(out: &mut String, points: &[(EInt, Mark)], frame: &Frame, palette: &Palette) {
    let mut rings: Vec<(u128, PrimeCategory)> = points
        .iter()
        .filter_map(|&(z, m)| match m {
            Mark::Prime(c) => Some((z.norm(), c)),
            _ => None,
        })
        .collect();
    rings.sort_by_key(|&(n, _)| n);
    rings.dedup_by_key(|&mut (n, _)| n);
    for (n, category) in rings {
        let (color, dash) = match category {
            PrimeCategory::EvenPrime => (palette.even, ""),
            PrimeCategory::RationalInert => (palette.odd1, r#" stroke-dasharray="6,4""#),
            PrimeCategory::SplitFactor => (palette.odd2, r#" stroke-dasharray="1.5,3""#),
        };
        let r = fmt3((n as f64).sqrt() * frame.scale);
        let _ = writeln!(
            out,
            r#"  <circle class="norm-ring" data-norm="{n}" cx="{}" cy="{}" r="{r}" fill="none" stroke="{color}" stroke-width="1.2"{dash}/>"#,
            fmt3(frame.cx),
            fmt3(frame.cy)
        );
    }
}

/// Triangular grid through every plotted lattice point.
fn grid(out: &mut String, spec: &PlotSpec, frame: &Frame) {
    let reach = (spec.max_norm as f64).sqrt().ceil() as i64 + 1;
    let _ = writeln!(out, r#"  <g class="grid" stroke="{}" stroke-width="0.5">"#, spec.palette.grid);
    // lines of constant b, constant a and constant a − b
    for k in -reach..=reach {
        for (from, to) in [
            (EInt::new(-reach + k.min(0), k), EInt::new(reach + k.max(0), k)),
            (EInt::new(k, -reach + k.min(0)), EInt::new(k, reach + k.max(0))),
            (EInt::new(k - reach, -reach), EInt::new(k + reach, reach)),
        ] {
            let (x1, y1) = frame.place(from);
            let (x2, y2) = frame.place(to);
            let _ = writeln!(
                out,
                r#"    <line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                fmt3(x1),
                fmt3(y1),
                fmt3(x2),
                fmt3(y2)
            );
        }
    }
    let _ = writeln!(out, "  </g>");
}

pub fn render_svg(spec: &PlotSpec) -> Result<String> {
    spec.validate()?;
    let frame = Frame::new(spec);
    let points = plot_points(spec);
    let title = match spec.kind {
        PlotKind::Lattice => "Eisenstein lattice",
        PlotKind::ParityMap => "Even, Odd1 and Odd2 classes",
        PlotKind::PrimeMap => "Eisenstein primes",
    };
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = spec.width,
        h = spec.height
    );
    let _ = writeln!(out, "  <title>{title}, norm at most {}</title>", spec.max_norm);
    let _ = writeln!(out, r##"  <rect width="100%" height="100%" fill="#ffffff"/>"##);
    let _ = writeln!(out, r#"  <defs><clipPath id="frame"><rect width="{}" height="{}"/></clipPath></defs>"#, spec.width, spec.height);
    let _ = writeln!(out, r#"  <g clip-path="url(#frame)">"#);
    grid(&mut out, spec, &frame);
    let _ = writeln!(out, "  </g>");
    if spec.kind == PlotKind::PrimeMap {
        norm_rings(&mut out, &points, &frame, &spec.palette);
    }
    let r = (frame.scale * 0.18).max(1.0);
    for (z, mark) in points {
        let (x, y) = frame.place(z);
        mark_element(&mut out, z, mark, x, y, r, &spec.palette);
    }
    let _ = writeln!(out, "</svg>");
    Ok(out)
}
