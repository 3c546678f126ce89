//! Flat `key = value` inputs and CSV outputs.
//!
//! Blank lines and everything after `#` are ignored. Numbers may be written
//! as decimals or as fractions such as `2/3`.

use std::io::Write;

use crate::dot::{signed_area, GeometrySpec, HoneycombDot};
use crate::error::{Error, Result};
use crate::lattice::{LatticeConventions, Sublattice};
use crate::scalar::Real;
use crate::tb::Spectrum;

fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses a decimal or a fraction `p/q`.
pub fn parse_number<T: Real>(text: &str) -> Option<T> {
    let text = text.trim();
    let value = match text.split_once('/') {
        Some((p, q)) => {
            let (p, q): (f64, f64) = (p.trim().parse().ok()?, q.trim().parse().ok()?);
            if q == 0.0 {
                return None;
            }
            p / q
        }
        None => text.parse().ok()?,
    };
    value.is_finite().then(|| T::lit(value))
}

/// Splits a file into `(line_number, key, value)` triples.
fn entries(text: &str) -> Result<Vec<(usize, String, String)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| parse_error(i + 1, format!("expected `key = value`, got `{line}`")))?;
        out.push((i + 1, k.trim().to_ascii_lowercase(), v.trim().to_string()));
    }
    Ok(out)
}

fn parse_vertex<T: Real>(line: usize, value: &str) -> Result<[T; 2]> {
    let parts: Vec<&str> = value.split(',').collect();
    if parts.len() != 2 {
        return Err(parse_error(
            line,
            format!("vertex needs two coordinates, got `{value}`"),
        ));
    }
    let n = parse_number(parts[0])
        .ok_or_else(|| parse_error(line, format!("bad number `{}`", parts[0].trim())))?;
    let m = parse_number(parts[1])
        .ok_or_else(|| parse_error(line, format!("bad number `{}`", parts[1].trim())))?;
    Ok([n, m])
}

/// A dot described by a configuration file.
#[derive(Clone, Debug, PartialEq)]
pub struct DotConfig<T> {
    pub geometry: GeometrySpec<T>,
    pub conventions: LatticeConventions<T>,
}

/// Reads keys `shape`, `size`, `width`, `height`, `vertex` (repeatable),
/// `lattice_constant` and `hopping`.
pub fn parse_dot_config<T: Real>(text: &str) -> Result<DotConfig<T>> {
    let mut shape = None;
    let (mut size, mut width, mut height) = (None, None, None);
    let mut vertices = Vec::new();
    let mut conv = LatticeConventions::<T>::default();
    for (line, key, value) in entries(text)? {
        let number =
            || parse_number::<T>(&value).ok_or_else(|| parse_error(line, format!("bad number `{value}`")));
        match key.as_str() {
            "shape" => shape = Some((line, value.to_ascii_lowercase())),
            "size" => size = Some(number()?),
            "width" => width = Some(number()?),
            "height" => height = Some(number()?),
            "lattice_constant" => conv.a = number()?,
            "hopping" => conv.hopping = number()?,
            "vertex" => vertices.push(parse_vertex(line, &value)?),
            _ => return Err(parse_error(line, format!("unknown key `{key}`"))),
        }
    }
    if !(conv.a > T::zero()) {
        return Err(Error::Config("lattice_constant must be positive".into()));
    }
    if !(conv.hopping != T::zero() && conv.hopping.is_finite()) {
        return Err(Error::Config("hopping must be finite and nonzero".into()));
    }
    let (line, shape) = shape.ok_or_else(|| Error::Config("missing `shape`".into()))?;
    let positive = |name: &str, v: Option<T>| match v {
        Some(x) if x > T::zero() => Ok(x),
        Some(_) => Err(Error::Config(format!("`{name}` must be positive"))),
        None => Err(Error::Config(format!("shape `{shape}` needs `{name}`"))),
    };
    let geometry = match shape.as_str() {
        "zigzag_hexagon" => GeometrySpec::ZigzagHexagon {
            size: positive("size", size)?,
        },
        "armchair_hexagon" => GeometrySpec::ArmchairHexagon {
            size: positive("size", size)?,
        },
        "armchair_triangle" => GeometrySpec::ArmchairTriangle {
            size: positive("size", size)?,
        },
        "rectangle" => GeometrySpec::Rectangle {
            width: positive("width", width)?,
            height: positive("height", height)?,
        },
        "polygon" => {
            if vertices.len() < 3 {
                return Err(Error::Config(
                    "polygon needs at least three `vertex` lines".into(),
                ));
            }
            GeometrySpec::Polygon { vertices }
        }
        other => return Err(parse_error(line, format!("unknown shape `{other}`"))),
    };
    Ok(DotConfig {
        geometry,
        conventions: conv,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
}

/// Polygon vertices in fractional cell coordinates with their declared
/// traversal direction.
#[derive(Clone, Debug, PartialEq)]
pub struct PolygonFile<T> {
    pub orientation: Orientation,
    pub vertices: Vec<[T; 2]>,
}

/// Reads `orientation = ccw | cw` and repeated `vertex = n, m` lines. The
/// declared orientation must match the vertex order in the lattice plane.
pub fn parse_polygon_file<T: Real>(text: &str) -> Result<PolygonFile<T>> {
    let mut orientation = None;
    let mut vertices = Vec::new();
    for (line, key, value) in entries(text)? {
        match key.as_str() {
            "orientation" => {
                orientation = Some(match value.to_ascii_lowercase().as_str() {
                    "ccw" | "counterclockwise" => Orientation::CounterClockwise,
                    "cw" | "clockwise" => Orientation::Clockwise,
                    other => return Err(parse_error(line, format!("unknown orientation `{other}`"))),
                })
            }
            "vertex" => vertices.push(parse_vertex(line, &value)?),
            _ => return Err(parse_error(line, format!("unknown key `{key}`"))),
        }
    }
    let orientation = orientation.ok_or_else(|| Error::Config("missing `orientation`".into()))?;
    if vertices.len() < 3 {
        return Err(Error::OpenPolygon(format!("{} vertices", vertices.len())));
    }
    let conv = LatticeConventions::<T>::default();
    let physical: Vec<[T; 2]> = vertices.iter().map(|v| conv.point(v[0], v[1])).collect();
    let area = signed_area(&physical);
    let actual = if area > T::zero() {
        Orientation::CounterClockwise
    } else {
        Orientation::Clockwise
    };
    if area != T::zero() && actual != orientation {
        return Err(Error::Config(format!("vertices are not listed {orientation:?}")));
    }
    Ok(PolygonFile {
        orientation,
        vertices,
    })
}

/// `index,eigenvalue` rows.
pub fn write_spectrum_csv<T: Real, W: Write>(out: &mut W, spec: &Spectrum<T>) -> Result<()> {
    writeln!(out, "index,eigenvalue")?;
    for (i, x) in spec.eigenvalues.iter().enumerate() {
        writeln!(out, "{i},{x}")?;
    }
    Ok(())
}

/// `state,n,m,sublattice,re,im` rows, one per site and eigenvector.
pub fn write_eigenvectors_csv<T: Real, W: Write>(
    out: &mut W,
    dot: &HoneycombDot<T>,
    spec: &Spectrum<T>,
) -> Result<()> {
    let vectors = spec
        .eigenvectors
        .as_ref()
        .ok_or_else(|| Error::Config("spectrum has no eigenvectors".into()))?;
    writeln!(out, "state,n,m,sublattice,re,im")?;
    for k in 0..vectors.ncols() {
        for (i, site) in dot.interior_sites.iter().enumerate() {
            let sub = match site.sublattice {
                Sublattice::A => 'A',
                Sublattice::B => 'B',
            };
            writeln!(
                out,
                "{k},{},{},{sub},{},0",
                site.cell.n,
                site.cell.m,
                vectors[(i, k)]
            )?;
        }
    }
    Ok(())
}
