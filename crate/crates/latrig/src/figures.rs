//! Drawings of planar frameworks and adjacency-matrix images.

use std::fmt::Write as _;

use latrig_core::Framework;

use crate::formats::FormatError;

/// SVG drawing with joints as filled circles and bars as segments, `scale`
/// pixels per lattice unit. The y axis points up.
pub fn draw_svg(f: &Framework, scale: u32) -> Result<String, FormatError> {
    if f.dim() != 2 {
        return Err(FormatError::NotPlanar(f.dim()));
    }
    let s = i64::from(scale.max(1));
    let xs = f.joints().iter().map(|j| j.coords()[0]);
    let ys = f.joints().iter().map(|j| j.coords()[1]);
    let (min_x, max_x) = (xs.clone().min().unwrap_or(0), xs.max().unwrap_or(0));
    let (min_y, max_y) = (ys.clone().min().unwrap_or(0), ys.max().unwrap_or(0));
    let px = |c: &[i64]| ((c[0] - min_x + 1) * s, (max_y - c[1] + 1) * s);
    let (width, height) = ((max_x - min_x + 2) * s, (max_y - min_y + 2) * s);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    out.push_str("<g stroke=\"black\" fill=\"black\">\n");
    for bar in f.bars() {
        let (x1, y1) = px(f.joint(bar.lo()).coords());
        let (x2, y2) = px(f.joint(bar.hi()).coords());
        let _ = writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
    }
    let r = (s / 8).max(1);
    for joint in f.joints() {
        let (cx, cy) = px(joint.coords());
        let _ = writeln!(out, r#"<circle cx="{cx}" cy="{cy}" r="{r}"/>"#);
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

/// Grayscale image, 0 black and 255 white.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Raster {
    pub width: usize,
    pub height: usize,
    pub pixels: Vec<u8>,
}

impl Raster {
    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.pixels[y * self.width + x]
    }

    /// Plain PGM (`P2`).
    pub fn to_pgm(&self) -> String {
        let mut out = format!("P2\n{} {}\n255\n", self.width, self.height);
        for row in self.pixels.chunks(self.width.max(1)) {
            let line: Vec<String> = row.iter().map(u8::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Adjacency matrix in joint order, pooled over `block × block` cells.
///
/// Each pixel is shaded by the fraction of ones in its block, scaled so that
/// the densest block is black. With `block = 1` the image is binary.
pub fn adjacency_image(f: &Framework, block: usize) -> Raster {
    assert!(block > 0, "block size must be positive");
    let v = f.num_joints();
    let side = v.div_ceil(block);
    let mut ones = vec![0usize; side * side];
    for bar in f.bars() {
        let (i, j) = (bar.lo() / block, bar.hi() / block);
        ones[i * side + j] += 1;
        ones[j * side + i] += 1;
    }
    let cells = |k: usize| (block.min(v - k * block)) as f64;
    let density: Vec<f64> = (0..side * side)
        .map(|p| ones[p] as f64 / (cells(p / side) * cells(p % side)))
        .collect();
    let max = density.iter().copied().fold(0.0, f64::max);
    let pixels = density
        .iter()
        .map(|&d| {
            if max > 0.0 {
                (255.0 * (1.0 - d / max)).round() as u8
            } else {
                255
            }
        })
        .collect();
    Raster {
        width: side,
        height: side,
        pixels,
    }
}
