//! Armchair edges, their valley-mixing phases and corner compatibility.
//!
//! Edge directions are written as unit complex numbers in the mirrored frame
//! `(x, −y)` of the lattice plane, the frame in which the edge table is
//! stated: a horizontal edge has `t = ±1`, an edge along `−a₁ + 2a₂` has
//! `t = ±e^{iπ/3}` and one along `−2a₁ + a₂` has `t = ±e^{i2π/3}`.

use num_complex::Complex;
use serde::Serialize;

use crate::bc::{kron, pauli, BoundaryFrame, BoundaryParams, ComplexMatrix4};
use crate::dot::signed_area;
use crate::error::{Error, Result};
use crate::lattice::{CellIndex, LatticeConventions, Sublattice};
use crate::scalar::{wrap_angle, Real};

/// Phase comparisons between roots of unity.
pub const PHASE_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeClass {
    /// `n − m = c`.
    Horizontal,
    /// `2n + m = c`.
    Deg60,
    /// `n + 2m = c`.
    Deg120,
    NonArmchair,
}

impl EdgeClass {
    pub const ARMCHAIR: [EdgeClass; 3] = [Self::Horizontal, Self::Deg60, Self::Deg120];

    /// Coefficients `(α, β)` of the defining form `αn + βm`.
    pub fn coefficients(self) -> Option<(i64, i64)> {
        match self {
            Self::Horizontal => Some((1, -1)),
            Self::Deg60 => Some((2, 1)),
            Self::Deg120 => Some((1, 2)),
            Self::NonArmchair => None,
        }
    }

    pub fn form(self, cell: CellIndex) -> Option<i64> {
        self.coefficients().map(|(a, b)| a * cell.n + b * cell.m)
    }

    /// Cell step along the edge for positive orientation.
    pub fn base_step(self) -> Option<(i64, i64)> {
        match self {
            Self::Horizontal => Some((1, 1)),
            Self::Deg60 => Some((-1, 2)),
            Self::Deg120 => Some((-2, 1)),
            Self::NonArmchair => None,
        }
    }

    /// `t` for positive orientation.
    pub fn base_tangent<T: Real>(self) -> Option<Complex<T>> {
        let half = T::lit(0.5);
        let h3 = T::lit(3.0).sqrt() * half;
        match self {
            Self::Horizontal => Some(Complex::new(T::one(), T::zero())),
            Self::Deg60 => Some(Complex::new(half, h3)),
            Self::Deg120 => Some(Complex::new(-half, h3)),
            Self::NonArmchair => None,
        }
    }

    /// Intercept of the B cells lying on the edge with A intercept `c`.
    pub fn b_intercept(self, c: i64) -> i64 {
        match self {
            Self::Horizontal | Self::NonArmchair => c,
            Self::Deg60 | Self::Deg120 => c - 1,
        }
    }

    /// An A cell and a B cell on the edge with intercept `c`.
    pub fn seed_cells(self, c: i64) -> Option<(CellIndex, CellIndex)> {
        match self {
            Self::Horizontal => Some((CellIndex::new(c, 0), CellIndex::new(c, 0))),
            Self::Deg60 => Some((CellIndex::new(0, c), CellIndex::new(0, c - 1))),
            Self::Deg120 => Some((CellIndex::new(c, 0), CellIndex::new(c - 1, 0))),
            Self::NonArmchair => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeLine {
    pub class: EdgeClass,
    /// Value of the defining form on the A cells of the edge.
    pub c: i64,
    /// `+1` when traversed along the base step, `−1` against it.
    pub orientation: i8,
}

impl EdgeLine {
    pub fn new(class: EdgeClass, c: i64, orientation: i8) -> Self {
        Self {
            class,
            c,
            orientation: if orientation < 0 { -1 } else { 1 },
        }
    }

    pub fn is_armchair(&self) -> bool {
        self.class != EdgeClass::NonArmchair
    }

    pub fn tangent<T: Real>(&self) -> Option<Complex<T>> {
        self.class
            .base_tangent()
            .map(|t: Complex<T>| if self.orientation < 0 { -t } else { t })
    }

    /// The same line traversed the other way.
    pub fn reversed(&self) -> Self {
        Self::new(self.class, self.c, -self.orientation)
    }
}

/// Detects which defining form is constant over `cells`, in order of traversal.
pub fn classify_edge(cells: &[CellIndex]) -> Result<EdgeLine> {
    let (first, last) = match (cells.first(), cells.last()) {
        (Some(f), Some(l)) if cells.len() >= 2 && f != l => (*f, *l),
        _ => return Err(Error::TooFewCells),
    };
    for class in EdgeClass::ARMCHAIR {
        let c = class.form(first).expect("armchair form");
        if cells.iter().all(|&cell| class.form(cell) == Some(c)) {
            let (bn, bm) = class.base_step().expect("armchair step");
            let along = (last.n - first.n) * bn + (last.m - first.m) * bm;
            return Ok(EdgeLine::new(class, c, if along < 0 { -1 } else { 1 }));
        }
    }
    Ok(EdgeLine::new(EdgeClass::NonArmchair, 0, 1))
}

/// `ω^k` for the cube root of unity `ω = e^{i2π/3}`, exact up to rounding.
fn cube_root<T: Real>(k: i64) -> Complex<T> {
    let half = T::lit(0.5);
    let h3 = T::lit(3.0).sqrt() * half;
    match k.rem_euclid(3) {
        0 => Complex::new(T::one(), T::zero()),
        1 => Complex::new(-half, h3),
        _ => Complex::new(-half, -h3),
    }
}

/// `δ(n, m) = −e^{i(K′−K)·r_nm} = −e^{i(4π/3)(n−m)}`, the phase with
/// `Ψ⁺(r_nm) = −δ Ψ⁻(r_nm)` at an edge site.
pub fn delta_phase<T: Real>(cell: CellIndex) -> Complex<T> {
    -cube_root::<T>(2 * (cell.n - cell.m))
}

/// Boundary data of one armchair edge.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EdgeBC<T> {
    pub delta_a: Complex<T>,
    pub delta_b: Complex<T>,
    pub t_complex: Complex<T>,
    /// `conj(t) δ_A`.
    pub nu: Complex<T>,
    /// `δ_A / δ_B = t²`.
    pub compatible: bool,
}

pub fn edge_bc<T: Real>(edge: &EdgeLine, a_cell: CellIndex, b_cell: CellIndex) -> Result<EdgeBC<T>> {
    let t = edge.tangent::<T>().ok_or(Error::IncompatibleEdge)?;
    if edge.class.form(a_cell) != Some(edge.c) {
        return Err(Error::CellNotOnEdge {
            n: a_cell.n,
            m: a_cell.m,
        });
    }
    if edge.class.form(b_cell) != Some(edge.class.b_intercept(edge.c)) {
        return Err(Error::CellNotOnEdge {
            n: b_cell.n,
            m: b_cell.m,
        });
    }
    let delta_a = delta_phase::<T>(a_cell);
    let delta_b = delta_phase::<T>(b_cell);
    let compatible = (delta_a / delta_b - t * t).norm() <= T::lit(PHASE_TOL);
    Ok(EdgeBC {
        delta_a,
        delta_b,
        t_complex: t,
        nu: t.conj() * delta_a,
        compatible,
    })
}

/// [`edge_bc`] evaluated at the edge's canonical seed cells.
pub fn edge_bc_for_line<T: Real>(edge: &EdgeLine) -> Result<EdgeBC<T>> {
    let (a, b) = edge.class.seed_cells(edge.c).ok_or(Error::IncompatibleEdge)?;
    edge_bc(edge, a, b)
}

/// Frame whose tangent is `t` and whose normal is `t` rotated by `−π/2`.
pub fn edge_frame<T: Real>(bc: &EdgeBC<T>) -> Result<BoundaryFrame<T>> {
    BoundaryFrame::from_tangent([bc.t_complex.re, bc.t_complex.im])
}

/// `Γ = (0, π/2, 0, arg ν)`: the anti-diagonal matrix with entries
/// `ν*t*, ν*t, νt*, νt`.
pub fn edge_gamma<T: Real>(bc: &EdgeBC<T>) -> Result<BoundaryParams<T>> {
    if !bc.compatible {
        return Err(Error::IncompatibleEdge);
    }
    Ok(BoundaryParams::new(
        T::zero(),
        T::FRAC_PI_2(),
        T::zero(),
        wrap_angle(bc.nu.arg()),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CornerType {
    ASite,
    BSite,
    HexCenter,
    Other,
}

/// Intersection of two armchair lines as exact fractional cell coordinates
/// `(num_n / den, num_m / den)` with `den > 0`.
pub fn corner_point(e1: &EdgeLine, e2: &EdgeLine) -> Result<(i64, i64, i64)> {
    let (a1, b1) = e1.class.coefficients().ok_or(Error::IncompatibleEdge)?;
    let (a2, b2) = e2.class.coefficients().ok_or(Error::IncompatibleEdge)?;
    let det = a1 * b2 - a2 * b1;
    if det == 0 {
        return Err(Error::ParallelEdges);
    }
    let (mut nn, mut nm, mut d) = (e1.c * b2 - e2.c * b1, a1 * e2.c - a2 * e1.c, det);
    if d < 0 {
        (nn, nm, d) = (-nn, -nm, -d);
    }
    Ok((nn, nm, d))
}

pub fn corner_type(e1: &EdgeLine, e2: &EdgeLine) -> Result<CornerType> {
    let (nn, nm, d) = corner_point(e1, e2)?;
    // Offsets 0, 1/3, 2/3 along both axes mark A, B and hexagon centres.
    let at_offset = |k: i64| (3 * nn - k * d) % (3 * d) == 0 && (3 * nm - k * d) % (3 * d) == 0;
    Ok(if at_offset(0) {
        CornerType::ASite
    } else if at_offset(1) {
        CornerType::BSite
    } else if at_offset(2) {
        CornerType::HexCenter
    } else {
        CornerType::Other
    })
}

/// The two equivalent corner tests: equal `ν`, and
/// `δ_A(e₁)/δ_A(e₂) = t(e₁)/t(e₂)`.
pub fn corner_checks<T: Real>(bc1: &EdgeBC<T>, bc2: &EdgeBC<T>) -> (bool, bool) {
    let tol = T::lit(PHASE_TOL);
    let nu_equal = (bc1.nu - bc2.nu).norm() <= tol;
    let ratio_equal = (bc1.delta_a / bc2.delta_a - bc1.t_complex / bc2.t_complex).norm() <= tol;
    (nu_equal, ratio_equal)
}

pub fn corner_compatible<T: Real>(bc1: &EdgeBC<T>, bc2: &EdgeBC<T>) -> bool {
    let (nu_equal, ratio_equal) = corner_checks(bc1, bc2);
    debug_assert_eq!(nu_equal, ratio_equal);
    nu_equal && ratio_equal
}

/// Boundary matrix of a zigzag edge: `−σ₃⊗σ₃` with A sites outside, `+σ₃⊗σ₃` with B.
pub fn zigzag_bc<T: Real>(outside: Sublattice) -> ComplexMatrix4<T> {
    let s3 = pauli::<T>(3).expect("index in range");
    let m = kron(&s3, &s3);
    match outside {
        Sublattice::A => -m,
        Sublattice::B => m,
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EdgeReport<T> {
    pub line: EdgeLine,
    pub bc: Option<EdgeBC<T>>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CornerReport<T> {
    /// Fractional cell coordinates of the vertex.
    pub vertex: [T; 2],
    /// `None` unless both edges are armchair.
    pub corner_type: Option<CornerType>,
    pub compatible: Option<bool>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolygonReport<T> {
    /// Vertices in counterclockwise order.
    pub vertices: Vec<[T; 2]>,
    /// Edge `i` runs from vertex `i` to vertex `i + 1`.
    pub per_edge: Vec<EdgeReport<T>>,
    /// Corner `i` sits at vertex `i`, between edges `i − 1` and `i`.
    pub corners: Vec<CornerReport<T>>,
    pub all_armchair: bool,
    pub diagonalizable: bool,
    pub common_gamma: Option<BoundaryParams<T>>,
}

/// Classifies the edge from `p` to `q` of a counterclockwise outline.
///
/// When the edge does not run along a row of sites, the row just outside it
/// is taken, since those are the sites where the wave function vanishes.
pub fn polygon_edge<T: Real>(p: [T; 2], q: [T; 2]) -> EdgeLine {
    let tol = T::lit(1e-9);
    let (dn, dm) = (q[0] - p[0], q[1] - p[1]);
    let class = EdgeClass::ARMCHAIR
        .into_iter()
        .find(|class| {
            let (a, b) = class.coefficients().expect("armchair form");
            (T::lit(a as f64) * dn + T::lit(b as f64) * dm).abs() <= tol
        })
        .unwrap_or(EdgeClass::NonArmchair);
    let Some((a, b)) = class.coefficients() else {
        return EdgeLine::new(class, 0, 1);
    };
    let (bn, bm) = class.base_step().expect("armchair step");
    let along = dn * T::lit(bn as f64) + dm * T::lit(bm as f64);
    let form = |v: [T; 2]| T::lit(a as f64) * v[0] + T::lit(b as f64) * v[1];
    let value = form(p);

    let conv = LatticeConventions::<T>::default();
    let (rp, rq) = (conv.point(p[0], p[1]), conv.point(q[0], q[1]));
    let mid = [(rp[0] + rq[0]) * T::lit(0.5), (rp[1] + rq[1]) * T::lit(0.5)];
    // Outward normal of a counterclockwise outline: direction rotated by −π/2.
    let outward = [rq[1] - rp[1], rp[0] - rq[0]];
    let probe = conv.fractional([mid[0] + outward[0], mid[1] + outward[1]]);
    let c = if form(probe) > form(conv.fractional(mid)) {
        (value - tol).ceil()
    } else {
        (value + tol).floor()
    };
    EdgeLine::new(
        class,
        c.to_i64().unwrap_or(0),
        if along < T::zero() { -1 } else { 1 },
    )
}

/// Per-edge and per-corner classification of a closed polygon with
/// vertices in fractional cell coordinates.
pub fn polygon_report<T: Real>(vertices: &[[T; 2]]) -> Result<PolygonReport<T>> {
    let n = vertices.len();
    if n < 3 {
        return Err(Error::OpenPolygon(format!("{n} vertices")));
    }
    let tol = T::lit(1e-9);
    for i in 0..n {
        let (p, q) = (vertices[i], vertices[(i + 1) % n]);
        if !(p.iter().chain(q.iter()).all(|x| x.is_finite())) {
            return Err(Error::OpenPolygon("non-finite vertex".into()));
        }
        if (p[0] - q[0]).abs() <= tol && (p[1] - q[1]).abs() <= tol {
            return Err(Error::OpenPolygon(format!("repeated vertex {i}")));
        }
    }
    let conv = LatticeConventions::<T>::default();
    let physical: Vec<[T; 2]> = vertices.iter().map(|v| conv.point(v[0], v[1])).collect();
    let area = signed_area(&physical);
    if !(area.abs() > tol) {
        return Err(Error::DegeneratePolygon("zero area".into()));
    }
    let mut verts = vertices.to_vec();
    if area < T::zero() {
        verts.reverse();
    }

    let per_edge: Vec<EdgeReport<T>> = (0..n)
        .map(|i| {
            let line = polygon_edge(verts[i], verts[(i + 1) % n]);
            let bc = edge_bc_for_line(&line).ok();
            EdgeReport { line, bc }
        })
        .collect();
    let corners: Vec<CornerReport<T>> = (0..n)
        .map(|i| {
            let (prev, next) = (&per_edge[(i + n - 1) % n], &per_edge[i]);
            let corner_type = corner_type(&prev.line, &next.line).ok();
            let compatible = match (&prev.bc, &next.bc) {
                (Some(a), Some(b)) if a.compatible && b.compatible => Some(corner_compatible(a, b)),
                _ => None,
            };
            CornerReport {
                vertex: verts[i],
                corner_type,
                compatible,
            }
        })
        .collect();

    let all_armchair = per_edge.iter().all(|e| e.line.is_armchair());
    let diagonalizable = all_armchair
        && per_edge.iter().all(|e| e.bc.is_some_and(|bc| bc.compatible))
        && corners.iter().all(|c| c.compatible == Some(true));
    let common_gamma = if diagonalizable {
        per_edge[0].bc.as_ref().and_then(|bc| edge_gamma(bc).ok())
    } else {
        None
    };
    Ok(PolygonReport {
        vertices: verts,
        per_edge,
        corners,
        all_armchair,
        diagonalizable,
        common_gamma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bc::{boundary_matrix, eta_pm, recover_params, sigma_dot};
    use std::f64::consts::{FRAC_PI_3, PI};

    type C = Complex<f64>;

    fn close(a: C, b: C) -> bool {
        (a - b).norm() < 1e-12
    }

    fn cells(list: &[(i64, i64)]) -> Vec<CellIndex> {
        list.iter().map(|&(n, m)| CellIndex::new(n, m)).collect()
    }

    #[test]
    fn classify_examples() {
        let e = classify_edge(&cells(&[(0, 0), (1, 1), (2, 2)])).unwrap();
        assert_eq!((e.class, e.c, e.orientation), (EdgeClass::Horizontal, 0, 1));
        let e = classify_edge(&cells(&[(0, 0), (1, -2)])).unwrap();
        assert_eq!((e.class, e.c, e.orientation), (EdgeClass::Deg60, 0, -1));
        let e = classify_edge(&cells(&[(0, 0), (1, 0)])).unwrap();
        assert_eq!(e.class, EdgeClass::NonArmchair);
        assert!(matches!(
            classify_edge(&cells(&[(0, 0)])),
            Err(Error::TooFewCells)
        ));
        let e = classify_edge(&cells(&[(5, 0), (3, 1), (1, 2)])).unwrap();
        assert_eq!((e.class, e.c, e.orientation), (EdgeClass::Deg120, 5, 1));
    }

    #[test]
    fn delta_examples() {
        assert!(close(delta_phase(CellIndex::new(0, 0)), C::new(-1.0, 0.0)));
        assert!(close(
            delta_phase(CellIndex::new(0, 1)),
            -C::from_polar(1.0, -4.0 * PI / 3.0)
        ));
        assert!(close(delta_phase(CellIndex::new(3, 0)), C::new(-1.0, 0.0)));
        for d in -7..7 {
            let want = -C::from_polar(1.0, 4.0 * PI / 3.0 * d as f64);
            assert!(close(delta_phase(CellIndex::new(d + 2, 2)), want));
        }
    }

    #[test]
    fn table_rows() {
        let rows = [
            (EdgeClass::Horizontal, C::new(1.0, 0.0), C::new(1.0, 0.0)),
            (
                EdgeClass::Deg60,
                C::from_polar(1.0, -4.0 * PI / 3.0),
                C::from_polar(1.0, FRAC_PI_3),
            ),
            (
                EdgeClass::Deg120,
                C::from_polar(1.0, 4.0 * PI / 3.0),
                C::from_polar(1.0, 2.0 * FRAC_PI_3),
            ),
        ];
        for (class, ratio, t) in rows {
            for c in -4..5 {
                for o in [1, -1] {
                    let bc = edge_bc_for_line::<f64>(&EdgeLine::new(class, c, o)).unwrap();
                    assert!(close(bc.delta_a / bc.delta_b, ratio));
                    assert!(close(bc.t_complex, t * o as f64));
                    assert!(bc.compatible);
                    assert!(close(bc.nu, bc.t_complex.conj() * bc.delta_a));
                }
            }
        }
    }

    #[test]
    fn cells_off_edge_rejected() {
        let e = EdgeLine::new(EdgeClass::Deg60, 2, 1);
        let r = edge_bc::<f64>(&e, CellIndex::new(1, 0), CellIndex::new(0, 0));
        assert_eq!(r.unwrap_err(), Error::CellNotOnEdge { n: 0, m: 0 });
        let r = edge_bc::<f64>(&e, CellIndex::new(0, 0), CellIndex::new(0, 1));
        assert_eq!(r.unwrap_err(), Error::CellNotOnEdge { n: 0, m: 0 });
        let z = EdgeLine::new(EdgeClass::NonArmchair, 0, 1);
        assert!(edge_bc_for_line::<f64>(&z).is_err());
    }

    #[test]
    fn gamma_reproduces_antidiagonal() {
        for class in EdgeClass::ARMCHAIR {
            for c in 0..3 {
                let bc = edge_bc_for_line::<f64>(&EdgeLine::new(class, c, 1)).unwrap();
                let g = edge_gamma(&bc).unwrap();
                let m = boundary_matrix(&g, &edge_frame(&bc).unwrap());
                let (nu, t) = (bc.nu, bc.t_complex);
                let want = [
                    (0, 3, nu.conj() * t.conj()),
                    (1, 2, nu.conj() * t),
                    (2, 1, nu * t.conj()),
                    (3, 0, nu * t),
                ];
                let mut expected = ComplexMatrix4::zeros();
                for (i, j, v) in want {
                    expected[(i, j)] = v;
                }
                assert!(m.distance(&expected) < 1e-12);
                let e = eta_pm(&g);
                assert!(e.plus.abs() < 1e-15 && (e.minus - PI).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn gamma_examples() {
        let one = C::new(1.0, 0.0);
        let bc = EdgeBC {
            delta_a: one,
            delta_b: one,
            t_complex: one,
            nu: one,
            compatible: true,
        };
        let m = boundary_matrix(&edge_gamma(&bc).unwrap(), &edge_frame(&bc).unwrap());
        let s1 = sigma_dot([1.0, 0.0, 0.0]);
        assert!(m.distance(&kron(&s1, &s1)) < 1e-15);

        let nu = C::from_polar(1.0, 2.0 * FRAC_PI_3);
        let bc = EdgeBC {
            nu,
            delta_a: nu,
            ..bc
        };
        let g = edge_gamma(&bc).unwrap();
        assert!((g.phi_nu() - 2.0 * FRAC_PI_3).abs() < 1e-15);
        let f = edge_frame(&bc).unwrap();
        let r = recover_params(&boundary_matrix(&g, &f), &f).unwrap();
        assert!(r.params.max_angle_distance(&g) < 1e-10);
        assert!(edge_gamma(&EdgeBC {
            compatible: false,
            ..bc
        })
        .is_err());
    }

    #[test]
    fn corner_types() {
        let h = |c| EdgeLine::new(EdgeClass::Horizontal, c, 1);
        let s = |c| EdgeLine::new(EdgeClass::Deg60, c, 1);
        let u = |c| EdgeLine::new(EdgeClass::Deg120, c, 1);
        // Cell (0, 0): n − m = 0, 2n + m = 0.
        assert_eq!(corner_type(&h(0), &s(0)).unwrap(), CornerType::ASite);
        // B sits at (1/3, 1/3): 2n + m = 1.
        assert_eq!(corner_type(&h(0), &s(1)).unwrap(), CornerType::BSite);
        // Hexagon centre at (2/3, 2/3): 2n + m = 2, n + 2m = 2.
        assert_eq!(corner_type(&s(2), &u(2)).unwrap(), CornerType::HexCenter);
        // Two armchair lines always meet on a site or a hexagon centre.
        for (c1, c2) in [(1, 1), (4, -2), (-3, 7)] {
            assert_ne!(corner_type(&h(c1), &u(c2)).unwrap(), CornerType::Other);
        }
        assert!(matches!(corner_type(&h(0), &h(3)), Err(Error::ParallelEdges)));
    }

    #[test]
    fn corner_tests_agree() {
        for c1 in EdgeClass::ARMCHAIR {
            for c2 in EdgeClass::ARMCHAIR {
                for (i1, i2) in [(0, 0), (1, 2), (2, 4), (-1, 5)] {
                    for (o1, o2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        let b1 = edge_bc_for_line::<f64>(&EdgeLine::new(c1, i1, o1)).unwrap();
                        let b2 = edge_bc_for_line::<f64>(&EdgeLine::new(c2, i2, o2)).unwrap();
                        let (x, y) = corner_checks(&b1, &b2);
                        assert_eq!(x, y);
                    }
                }
            }
        }
    }

    #[test]
    fn nu_constant_along_edge() {
        for class in EdgeClass::ARMCHAIR {
            let (bn, bm) = class.base_step().unwrap();
            for c in -3..3 {
                let line = EdgeLine::new(class, c, 1);
                let (a0, b0) = class.seed_cells(c).unwrap();
                let nu0 = edge_bc_for_line::<f64>(&line).unwrap().nu;
                for k in -15..15 {
                    let bc =
                        edge_bc::<f64>(&line, a0.offset(k * bn, k * bm), b0.offset(k * bn, k * bm)).unwrap();
                    assert!(close(bc.nu, nu0));
                }
            }
        }
    }

    #[test]
    fn zigzag_matrices() {
        let s3 = sigma_dot([0.0, 0.0, 1.0]);
        assert_eq!(zigzag_bc::<f64>(Sublattice::A), -kron(&s3, &s3));
        assert_eq!(zigzag_bc::<f64>(Sublattice::B), kron(&s3, &s3));
    }

    fn third(v: &[(i64, i64)]) -> Vec<[f64; 2]> {
        v.iter()
            .map(|&(n, m)| [n as f64 + 2.0 / 3.0, m as f64 + 2.0 / 3.0])
            .collect()
    }

    #[test]
    fn triangle_is_diagonalizable() {
        for k in 1..6 {
            let r = polygon_report(&third(&[(0, 0), (k, k), (2 * k, -k)])).unwrap();
            assert!(r.all_armchair && r.diagonalizable, "{k}");
            assert!(r
                .corners
                .iter()
                .all(|c| c.corner_type == Some(CornerType::HexCenter)));
            assert!(r.common_gamma.is_some());
        }
    }

    #[test]
    fn hexagon_corners_flip_nu() {
        let k = 3;
        let steps = [
            (k, k),
            (2 * k, -k),
            (k, -2 * k),
            (-k, -k),
            (-2 * k, k),
            (-k, 2 * k),
        ];
        let mut v = vec![(0, 0)];
        for (dn, dm) in &steps[..5] {
            let (n, m) = *v.last().unwrap();
            v.push((n + dn, m + dm));
        }
        let r = polygon_report(&third(&v)).unwrap();
        assert!(r.all_armchair);
        assert!(r
            .corners
            .iter()
            .all(|c| c.corner_type == Some(CornerType::HexCenter)));
        assert!(r.corners.iter().all(|c| c.compatible == Some(false)));
        assert!(!r.diagonalizable);
        for e in &r.per_edge {
            let bc = e.bc.unwrap();
            let nu0 = r.per_edge[0].bc.unwrap().nu;
            assert!(close(bc.nu, nu0) || close(bc.nu, -nu0));
        }
    }

    #[test]
    fn zigzag_edge_polygon() {
        // The edge from (0, 0) to (2, 0) runs along a₁, a zigzag direction.
        let r = polygon_report(&third(&[(0, 0), (2, 0), (2, 2)])).unwrap();
        assert!(!r.all_armchair && !r.diagonalizable && r.common_gamma.is_none());
    }

    #[test]
    fn tangents_match_traversal() {
        let conv = LatticeConventions::<f64>::default();
        let v = third(&[(0, 0), (4, 4), (8, -4)]);
        let r = polygon_report(&v).unwrap();
        for (i, e) in r.per_edge.iter().enumerate() {
            let (p, q) = (r.vertices[i], r.vertices[(i + 1) % 3]);
            let (rp, rq) = (conv.point(p[0], p[1]), conv.point(q[0], q[1]));
            let d = C::new(rq[0] - rp[0], rq[1] - rp[1]);
            // The tangent is stated in the mirrored frame.
            assert!(close(e.bc.unwrap().t_complex, (d / d.norm()).conj()));
        }
    }

    #[test]
    fn open_polygons() {
        assert!(matches!(
            polygon_report(&[[0.0, 0.0], [1.0, 1.0]]),
            Err(Error::OpenPolygon(_))
        ));
        assert!(polygon_report(&[[0.0, 0.0], [0.0, 0.0], [1.0, 1.0]]).is_err());
    }
}
