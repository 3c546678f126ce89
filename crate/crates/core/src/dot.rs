//! Terminated honeycomb dots.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{site_position, LatticeConventions, Site, Sublattice};
use crate::scalar::Real;

/// Points closer than this (in units of `a`) to the outline count as outside.
pub const BOUNDARY_TOL: f64 = 1e-9;

/// Shape of a dot. Lengths are in units of the lattice constant.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum GeometrySpec<T> {
    /// Regular hexagon with zigzag edges and circumradius `size`.
    ZigzagHexagon { size: T },
    /// Regular hexagon with armchair edges; the side is snapped to the
    /// nearest positive multiple of `√3` so every corner is a hexagon centre.
    ArmchairHexagon { size: T },
    /// Equilateral triangle with armchair edges, snapped like the hexagon.
    ArmchairTriangle { size: T },
    /// Axis-aligned rectangle with its lower left corner on a hexagon centre.
    Rectangle { width: T, height: T },
    /// Vertices in fractional cell coordinates `(n, m)`.
    Polygon { vertices: Vec<[T; 2]> },
}

impl<T: Real> GeometrySpec<T> {
    pub fn name(&self) -> &'static str {
        match self {
            Self::ZigzagHexagon { .. } => "zigzag_hexagon",
            Self::ArmchairHexagon { .. } => "armchair_hexagon",
            Self::ArmchairTriangle { .. } => "armchair_triangle",
            Self::Rectangle { .. } => "rectangle",
            Self::Polygon { .. } => "polygon",
        }
    }

    /// Side length actually used by the armchair presets, in units of `a`.
    pub fn snapped_armchair_side(size: T) -> T {
        let sqrt3 = T::lit(3.0).sqrt();
        sqrt3 * (size / sqrt3).round().max(T::one())
    }

    /// Outline vertices in physical coordinates.
    pub fn vertices(&self, conv: &LatticeConventions<T>) -> Vec<[T; 2]> {
        let a = conv.a;
        let third = T::one() / T::lit(3.0);
        // Centre of the hexagon belonging to cell (0, 0).
        let c0 = conv.point(T::lit(2.0) * third, T::lit(2.0) * third);
        let at = |radius: T, angle: T| {
            let (s, c) = angle.sin_cos();
            [c0[0] + radius * c, c0[1] + radius * s]
        };
        let sixth = T::PI() / T::lit(3.0);
        match self {
            Self::ZigzagHexagon { size } => (0..6)
                .map(|k| at(*size * a, T::PI() / T::lit(6.0) + sixth * T::lit(k as f64)))
                .collect(),
            Self::ArmchairHexagon { size } => {
                let s = Self::snapped_armchair_side(*size) * a;
                (0..6).map(|k| at(s, sixth * T::lit(k as f64))).collect()
            }
            Self::ArmchairTriangle { size } => {
                let s = Self::snapped_armchair_side(*size) * a;
                vec![c0, at(s, T::zero()), at(s, sixth)]
            }
            Self::Rectangle { width, height } => {
                let (w, h) = (*width * a, *height * a);
                vec![c0, [c0[0] + w, c0[1]], [c0[0] + w, c0[1] + h], [c0[0], c0[1] + h]]
            }
            Self::Polygon { vertices } => vertices.iter().map(|v| conv.point(v[0], v[1])).collect(),
        }
    }
}

/// Signed shoelace area, positive for counterclockwise outlines.
pub fn signed_area<T: Real>(vertices: &[[T; 2]]) -> T {
    let n = vertices.len();
    let mut acc = T::zero();
    for i in 0..n {
        let (p, q) = (vertices[i], vertices[(i + 1) % n]);
        acc = acc + p[0] * q[1] - q[0] * p[1];
    }
    acc * T::lit(0.5)
}

fn segment_distance<T: Real>(p: [T; 2], a: [T; 2], b: [T; 2]) -> T {
    let d = [b[0] - a[0], b[1] - a[1]];
    let w = [p[0] - a[0], p[1] - a[1]];
    let len2 = d[0] * d[0] + d[1] * d[1];
    let s = if len2 > T::zero() {
        ((w[0] * d[0] + w[1] * d[1]) / len2).max(T::zero()).min(T::one())
    } else {
        T::zero()
    };
    let e = [w[0] - s * d[0], w[1] - s * d[1]];
    (e[0] * e[0] + e[1] * e[1]).sqrt()
}

/// Strict interior test: points within `tol` of the outline are outside.
pub fn strictly_inside<T: Real>(p: [T; 2], vertices: &[[T; 2]], tol: T) -> bool {
    let n = vertices.len();
    let mut inside = false;
    for i in 0..n {
        let (a, b) = (vertices[i], vertices[(i + 1) % n]);
        if segment_distance(p, a, b) <= tol {
            return false;
        }
        if (a[1] > p[1]) != (b[1] > p[1]) {
            let x = a[0] + (p[1] - a[1]) / (b[1] - a[1]) * (b[0] - a[0]);
            if p[0] < x {
                inside = !inside;
            }
        }
    }
    inside
}

#[derive(Clone, Debug)]
pub struct HoneycombDot<T> {
    pub geometry: GeometrySpec<T>,
    pub conventions: LatticeConventions<T>,
    /// Outline in physical coordinates, counterclockwise.
    pub outline: Vec<[T; 2]>,
    pub area: T,
    /// Sorted by `(n, m, sublattice)`.
    pub interior_sites: Vec<Site>,
    /// Exterior sites bonded to at least one interior site, sorted.
    pub edge_sites: Vec<Site>,
    /// Interior bonds `(i, j)` with `i < j`, indices into `interior_sites`.
    pub adjacency: Vec<(usize, usize)>,
    index: HashMap<Site, usize>,
}

impl<T: Real> HoneycombDot<T> {
    pub fn len(&self) -> usize {
        self.interior_sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.interior_sites.is_empty()
    }

    pub fn index_of(&self, site: &Site) -> Option<usize> {
        self.index.get(site).copied()
    }

    pub fn position(&self, i: usize) -> [T; 2] {
        site_position(&self.interior_sites[i], &self.conventions)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency.iter().filter(|&&(p, q)| p == i || q == i).count()
    }

    /// Number of interior sites on each sublattice.
    pub fn sublattice_counts(&self) -> (usize, usize) {
        let a = self
            .interior_sites
            .iter()
            .filter(|s| s.sublattice == Sublattice::A)
            .count();
        (a, self.len() - a)
    }
}

pub fn build_dot<T: Real>(
    geometry: &GeometrySpec<T>,
    conv: &LatticeConventions<T>,
) -> Result<HoneycombDot<T>> {
    let mut outline = geometry.vertices(conv);
    if outline.len() < 3 {
        return Err(Error::DegeneratePolygon(format!("{} vertices", outline.len())));
    }
    if outline.iter().flatten().any(|x| !x.is_finite()) {
        return Err(Error::DegeneratePolygon("non-finite vertex".into()));
    }
    let mut area = signed_area(&outline);
    if area < T::zero() {
        outline.reverse();
        area = -area;
    }
    if !(area > T::lit(BOUNDARY_TOL) * conv.a * conv.a) {
        return Err(Error::DegeneratePolygon("zero area".into()));
    }

    let tol = T::lit(BOUNDARY_TOL) * conv.a;
    let inside = |s: &Site| strictly_inside(site_position(s, conv), &outline, tol);

    // Bounding box in cell coordinates, padded by one cell.
    let (mut lo, mut hi) = ([T::infinity(); 2], [T::neg_infinity(); 2]);
    for v in &outline {
        let f = conv.fractional(*v);
        for k in 0..2 {
            lo[k] = lo[k].min(f[k]);
            hi[k] = hi[k].max(f[k]);
        }
    }
    let int = |x: T| x.to_i64().unwrap_or(0);
    let (n0, n1) = (int(lo[0].floor()) - 1, int(hi[0].ceil()) + 1);
    let (m0, m1) = (int(lo[1].floor()) - 1, int(hi[1].ceil()) + 1);

    let mut interior = Vec::new();
    for n in n0..=n1 {
        for m in m0..=m1 {
            for sublattice in [Sublattice::A, Sublattice::B] {
                let s = Site::new(n, m, sublattice);
                if inside(&s) {
                    interior.push(s);
                }
            }
        }
    }
    if interior.is_empty() {
        return Err(Error::EmptyDot);
    }
    interior.sort();
    let index: HashMap<Site, usize> = interior.iter().enumerate().map(|(i, s)| (*s, i)).collect();

    let mut adjacency = Vec::new();
    let mut edge = BTreeSet::new();
    for (i, s) in interior.iter().enumerate() {
        for nb in s.neighbours() {
            match index.get(&nb) {
                Some(&j) if i < j => adjacency.push((i, j)),
                Some(_) => {}
                None => {
                    edge.insert(nb);
                }
            }
        }
    }
    adjacency.sort();

    Ok(HoneycombDot {
        geometry: geometry.clone(),
        conventions: *conv,
        outline,
        area,
        interior_sites: interior,
        edge_sites: edge.into_iter().collect(),
        adjacency,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conv() -> LatticeConventions<f64> {
        LatticeConventions::default()
    }

    #[test]
    fn single_hexagon() {
        let dot = build_dot(&GeometrySpec::ZigzagHexagon { size: 1.0 }, &conv()).unwrap();
        assert_eq!(dot.len(), 6);
        assert_eq!(dot.adjacency.len(), 6);
        assert!((0..6).all(|i| dot.degree(i) == 2));
        assert_eq!(dot.sublattice_counts(), (3, 3));
        assert_eq!(dot.edge_sites.len(), 6);
    }

    #[test]
    fn bipartite_and_disjoint() {
        let dot = build_dot(&GeometrySpec::ArmchairHexagon { size: 6.0 }, &conv()).unwrap();
        for &(i, j) in &dot.adjacency {
            assert_ne!(dot.interior_sites[i].sublattice, dot.interior_sites[j].sublattice);
        }
        assert!((0..dot.len()).all(|i| dot.degree(i) <= 3));
        assert!(dot.edge_sites.iter().all(|s| dot.index_of(s).is_none()));
        let mut sorted = dot.interior_sites.clone();
        sorted.sort();
        assert_eq!(sorted, dot.interior_sites);
    }

    #[test]
    fn armchair_corners_are_hexagon_centres() {
        let c = conv();
        for g in [
            GeometrySpec::ArmchairHexagon { size: 9.0 },
            GeometrySpec::ArmchairTriangle { size: 15.0 },
        ] {
            for v in g.vertices(&c) {
                let f = c.fractional(v);
                for x in f {
                    let r = x - 2.0 / 3.0;
                    assert!((r - r.round()).abs() < 1e-9, "{v:?}");
                }
            }
        }
    }

    #[test]
    fn armchair_snapping() {
        for (l, k) in [(9.0, 5.0), (12.0, 7.0), (15.0, 9.0), (18.0, 10.0), (0.1, 1.0)] {
            let s = GeometrySpec::<f64>::snapped_armchair_side(l);
            assert!((s - k * 3.0_f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn zigzag_edges_single_sublattice() {
        let c = conv();
        let dot = build_dot(&GeometrySpec::ZigzagHexagon { size: 5.0 }, &c).unwrap();
        let centre = [2.0 / 3.0_f64.sqrt(), 0.0];
        // Group edge sites by the outward direction they lie in.
        let mut seen = [None; 6];
        for s in &dot.edge_sites {
            let p = site_position(s, &c);
            let ang = (p[1] - centre[1]).atan2(p[0] - centre[0]);
            let sector = ((ang + std::f64::consts::PI / 6.0).rem_euclid(std::f64::consts::TAU)
                / (std::f64::consts::PI / 3.0))
                .floor() as usize;
            match seen[sector % 6] {
                None => seen[sector % 6] = Some(s.sublattice),
                Some(sub) => assert_eq!(sub, s.sublattice),
            }
        }
        assert!(seen.iter().all(Option::is_some));
    }

    #[test]
    fn membership_excludes_boundary() {
        let sq = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]];
        assert!(strictly_inside([0.5, 0.5], &sq, 1e-9));
        assert!(!strictly_inside([0.5, 0.0], &sq, 1e-9));
        assert!(!strictly_inside([1.0, 1.0], &sq, 1e-9));
        assert!(!strictly_inside([1.5, 0.5], &sq, 1e-9));
    }

    #[test]
    fn errors() {
        let c = conv();
        let line = GeometrySpec::Polygon {
            vertices: vec![[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]],
        };
        assert!(matches!(build_dot(&line, &c), Err(Error::DegeneratePolygon(_))));
        let tiny = GeometrySpec::Rectangle {
            width: 0.01,
            height: 0.01,
        };
        assert!(matches!(build_dot(&tiny, &c), Err(Error::EmptyDot)));
    }

    #[test]
    fn clockwise_polygon_is_reoriented() {
        let c = conv();
        let ccw = vec![[0.0, 0.0], [4.0, 0.0], [4.0, 4.0], [0.0, 4.0]];
        let mut cw = ccw.clone();
        cw.reverse();
        let a = build_dot(&GeometrySpec::Polygon { vertices: ccw }, &c).unwrap();
        let b = build_dot(&GeometrySpec::Polygon { vertices: cw }, &c).unwrap();
        assert_eq!(a.interior_sites, b.interior_sites);
        assert!(signed_area(&b.outline) > 0.0);
    }
}
