//! SVG plot of a polygon adjoint chain: 32 px per lattice unit, lattice
//! points as dots, chain members drawn from dark to light.

use std::fmt::Write as _;

use super::chain::PolygonChain;
use super::rational::{lattice_points, Shape};
use crate::scalar::Scalar;

pub const UNIT_PX: i64 = 32;
const MARGIN_PX: i64 = 16;

fn shade(index: usize, count: usize) -> String {
    let level = if count <= 1 { 0 } else { index * 160 / (count - 1) };
    format!("#{level:02x}{level:02x}{level:02x}")
}

fn approx<T: Scalar>(value: &num_rational::Ratio<T>) -> f64 {
    value.numer().to_f64().unwrap_or(0.0) / value.denom().to_f64().unwrap_or(1.0)
}

pub fn render_chain<T: Scalar>(chain: &PolygonChain<T>) -> String {
    let outer = &chain.members[0];
    let coords: Vec<[i64; 2]> = lattice_points(outer)
        .iter()
        .map(|p| [p[0].to_i64().unwrap_or(0), p[1].to_i64().unwrap_or(0)])
        .collect();
    let min_x = coords.iter().map(|p| p[0]).min().unwrap_or(0);
    let max_x = coords.iter().map(|p| p[0]).max().unwrap_or(0);
    let min_y = coords.iter().map(|p| p[1]).min().unwrap_or(0);
    let max_y = coords.iter().map(|p| p[1]).max().unwrap_or(0);
    let width = (max_x - min_x) * UNIT_PX + 2 * MARGIN_PX;
    let height = (max_y - min_y) * UNIT_PX + 2 * MARGIN_PX;
    let px = |x: f64| (x - min_x as f64) * UNIT_PX as f64 + MARGIN_PX as f64;
    let py = |y: f64| (max_y as f64 - y) * UNIT_PX as f64 + MARGIN_PX as f64;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    for x in min_x..=max_x {
        for y in min_y..=max_y {
            let _ = writeln!(out, r##"  <circle cx="{}" cy="{}" r="2" fill="#999999"/>"##, px(x as f64), py(y as f64));
        }
    }
    let count = chain.members.len();
    for (i, member) in chain.members.iter().enumerate() {
        let color = shade(i, count);
        let points: Vec<(f64, f64)> = member
            .vertices()
            .iter()
            .map(|v| (px(approx(&v[0])), py(approx(&v[1]))))
            .collect();
        let list = points.iter().map(|(x, y)| format!("{x},{y}")).collect::<Vec<_>>().join(" ");
        match member.shape() {
            Shape::TwoDimensional => {
                let _ = writeln!(out, r#"  <polygon points="{list}" fill="none" stroke="{color}" stroke-width="2"/>"#);
            }
            Shape::Segment => {
                let _ = writeln!(out, r#"  <polyline points="{list}" fill="none" stroke="{color}" stroke-width="3"/>"#);
            }
            Shape::Point => {
                let (x, y) = points[0];
                let _ = writeln!(out, r#"  <circle cx="{x}" cy="{y}" r="5" fill="{color}"/>"#);
            }
            Shape::Empty => {}
        }
    }
    out.push_str("</svg>\n");
    out
}
