//! Text formats for frameworks.
//!
//! * The *framefile* lists bars as `v1,v2` with grid ids `v = x + stride·y`.
//!   It has no joint section, so isolated joints are lost.
//! * The *sparse matrix* file lists one rigidity-matrix row per bar as
//!   `c1,c2,e1,e2,e3,e4`, where `c1` and `c2` are 1-based column anchors.
//! * The *canonical* format stores any framework losslessly:
//!
//! ```text
//! dim 2
//! size 3 2
//! 0 0
//! 1 2
//! 2 0
//! 0 1
//! 1 2
//! ```
//!
//! For framefile and sparse matrix output, joints are visited in ascending
//! grid id and each joint's neighbours in the order its bars were added.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use latrig_core::{Framework, FrameworkError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: joint id {id} is outside the {width}x{height} grid")]
    IdOutOfRange {
        line: usize,
        id: usize,
        width: usize,
        height: usize,
    },
    #[error("format needs a planar framework, got dimension {0}")]
    NotPlanar(usize),
    #[error("joint {joint} does not lie on a grid of width {width}")]
    OffGrid { joint: usize, width: usize },
    #[error(transparent)]
    Framework(#[from] FrameworkError),
}

fn malformed(line: usize, reason: impl Into<String>) -> FormatError {
    FormatError::Malformed {
        line,
        reason: reason.into(),
    }
}

fn require_planar(f: &Framework) -> Result<(), FormatError> {
    if f.dim() == 2 {
        Ok(())
    } else {
        Err(FormatError::NotPlanar(f.dim()))
    }
}

/// Joint indices sorted by `(y, x)`, which is ascending grid id for any
/// stride wider than the framework.
fn grid_order(f: &Framework) -> Vec<usize> {
    let mut order: Vec<usize> = (0..f.num_joints()).collect();
    order.sort_by_key(|&i| {
        let c = f.joint(i).coords();
        (c[1], c[0])
    });
    order
}

/// Visits every bar once as `(first, second)` joint indices, `first` being
/// the endpoint with the smaller grid id.
fn for_each_bar_in_grid_order(f: &Framework, mut visit: impl FnMut(usize, usize)) {
    let order = grid_order(f);
    let mut rank = vec![0; f.num_joints()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    let adj = f.adjacency();
    for &v1 in &order {
        for &v2 in &adj[v1] {
            if rank[v1] < rank[v2] {
                visit(v1, v2);
            }
        }
    }
}

fn grid_id(f: &Framework, joint: usize, width: usize) -> Result<usize, FormatError> {
    let c = f.joint(joint).coords();
    let (x, y) = (c[0], c[1]);
    if x < 0 || y < 0 || x as u64 >= width as u64 {
        return Err(FormatError::OffGrid { joint, width });
    }
    Ok(x as usize + width * y as usize)
}

/// Writes the bar list with ids `x + width·y`.
pub fn write_framefile(f: &Framework, width: usize) -> Result<String, FormatError> {
    require_planar(f)?;
    let ids = (0..f.num_joints())
        .map(|j| grid_id(f, j, width))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = String::new();
    for_each_bar_in_grid_order(f, |v1, v2| {
        let _ = writeln!(out, "{},{}", ids[v1], ids[v2]);
    });
    Ok(out)
}

/// Reads a framefile on an `n × n` grid.
pub fn read_framefile(text: &str, n: usize) -> Result<Framework, FormatError> {
    read_framefile_rect(text, n, n)
}

/// Reads a framefile on a `width × height` grid. Joints are the ids that
/// occur, in ascending order; bars keep file order.
pub fn read_framefile_rect(
    text: &str,
    width: usize,
    height: usize,
) -> Result<Framework, FormatError> {
    let limit = width.saturating_mul(height);
    let mut pairs = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let (a, b) = raw
            .split_once(',')
            .ok_or_else(|| malformed(line, "expected `v1,v2`"))?;
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| malformed(line, format!("`{s}` is not a joint id")))
        };
        let (v1, v2) = (parse(a)?, parse(b)?);
        for id in [v1, v2] {
            if id >= limit {
                return Err(FormatError::IdOutOfRange {
                    line,
                    id,
                    width,
                    height,
                });
            }
        }
        if v1 >= v2 {
            return Err(malformed(line, "ids must satisfy v1 < v2"));
        }
        pairs.push((v1, v2));
    }

    let mut index = BTreeMap::new();
    for &(a, b) in &pairs {
        index.insert(a, 0);
        index.insert(b, 0);
    }
    let mut coords = Vec::with_capacity(index.len());
    for (k, (id, slot)) in index.iter_mut().enumerate() {
        *slot = k;
        coords.push(vec![(id % width) as i64, (id / width) as i64]);
    }
    let bars: Vec<_> = pairs.iter().map(|(a, b)| (index[a], index[b])).collect();
    Ok(Framework::from_coords(2, coords, bars)?)
}

/// Writes the rigidity matrix rows in sparse form. Places number the joints
/// from 1 in ascending grid id.
pub fn write_sparsematrix(f: &Framework) -> Result<String, FormatError> {
    require_planar(f)?;
    let mut place = vec![0; f.num_joints()];
    for (p, &j) in grid_order(f).iter().enumerate() {
        place[j] = p + 1;
    }
    let mut out = String::new();
    for_each_bar_in_grid_order(f, |v1, v2| {
        let (p1, p2) = (f.joint(v1).coords(), f.joint(v2).coords());
        let (dx, dy) = (p1[0] - p2[0], p1[1] - p2[1]);
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            2 * place[v1] - 1,
            2 * place[v2] - 1,
            dx,
            dy,
            -dx,
            -dy
        );
    });
    Ok(out)
}

pub fn write_canonical(f: &Framework) -> String {
    let mut out = format!(
        "dim {}\nsize {} {}\n",
        f.dim(),
        f.num_joints(),
        f.num_bars()
    );
    for joint in f.joints() {
        let line: Vec<String> = joint.coords().iter().map(i64::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    for bar in f.bars() {
        let _ = writeln!(out, "{} {}", bar.lo(), bar.hi());
    }
    out
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    key: &str,
    count: usize,
) -> Result<Vec<usize>, FormatError> {
    let (line, raw) = lines
        .next()
        .ok_or_else(|| malformed(0, format!("missing `{key}` line")))?;
    let mut words = raw.split_whitespace();
    if words.next() != Some(key) {
        return Err(malformed(line, format!("expected `{key}`")));
    }
    let values = words
        .map(|w| {
            w.parse::<usize>()
                .map_err(|_| malformed(line, format!("`{w}` is not a count")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != count {
        return Err(malformed(line, format!("`{key}` takes {count} value(s)")));
    }
    Ok(values)
}

pub fn read_canonical(text: &str) -> Result<Framework, FormatError> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l));
    let dim = header(&mut lines, "dim", 1)?[0];
    let size = header(&mut lines, "size", 2)?;
    let (v, e) = (size[0], size[1]);

    let mut coords = Vec::with_capacity(v);
    for _ in 0..v {
        let (line, raw) = lines
            .next()
            .ok_or_else(|| malformed(0, "too few joint lines"))?;
        let c = raw
            .split_whitespace()
            .map(|w| {
                w.parse::<i64>()
                    .map_err(|_| malformed(line, format!("`{w}` is not a coordinate")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if c.len() != dim {
            return Err(malformed(
                line,
                format!("expected {dim} coordinates, found {}", c.len()),
            ));
        }
        coords.push(c);
    }
    let mut bars = Vec::with_capacity(e);
    for _ in 0..e {
        let (line, raw) = lines
            .next()
            .ok_or_else(|| malformed(0, "too few bar lines"))?;
        let ends = raw
            .split_whitespace()
            .map(|w| {
                w.parse::<usize>()
                    .map_err(|_| malformed(line, format!("`{w}` is not a joint index")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if ends.len() != 2 {
            return Err(malformed(line, "a bar line holds two joint indices"));
        }
        bars.push((ends[0], ends[1]));
    }
    if let Some((line, _)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(malformed(line, "unexpected content after the last bar"));
    }
    Ok(Framework::from_coords(dim, coords, bars)?)
}
