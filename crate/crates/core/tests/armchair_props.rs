use num_complex::Complex;
use proptest::prelude::*;

use gqd_core::armchair::{
    classify_edge, corner_type, delta_phase, edge_bc, edge_bc_for_line, edge_gamma, polygon_report,
    CornerType, EdgeClass, EdgeLine,
};
use gqd_core::bc::{admissibility, boundary_matrix, BoundaryParams};
use gqd_core::dot::{build_dot, GeometrySpec};
use gqd_core::lattice::{CellIndex, LatticeConventions};
use gqd_core::tb::{assemble_h, continuum_compare, spectrum};

fn close(a: Complex<f64>, b: Complex<f64>) -> bool {
    (a - b).norm() < 1e-12
}

fn shifted(v: &[(i64, i64)], p: i64, q: i64) -> Vec<[f64; 2]> {
    v.iter()
        .map(|&(n, m)| [(n + p) as f64 + 2.0 / 3.0, (m + q) as f64 + 2.0 / 3.0])
        .collect()
}

fn hexagon(k: i64) -> Vec<(i64, i64)> {
    let steps = [(k, k), (2 * k, -k), (k, -2 * k), (-k, -k), (-2 * k, k)];
    let mut v = vec![(0, 0)];
    for (dn, dm) in steps {
        let (n, m) = *v.last().unwrap();
        v.push((n + dn, m + dm));
    }
    v
}

fn class() -> impl Strategy<Value = EdgeClass> {
    prop::sample::select(EdgeClass::ARMCHAIR.to_vec())
}

proptest! {
    #[test]
    fn delta_has_period_three(n in -1000i64..1000, m in -1000i64..1000) {
        let d = delta_phase::<f64>(CellIndex::new(n, m));
        prop_assert!((d.norm() - 1.0).abs() < 1e-12);
        prop_assert!(close(d, delta_phase(CellIndex::new(n + 1, m + 1))));
        prop_assert!(close(d, delta_phase(CellIndex::new(n + 3, m))));
        prop_assert!(close(d, delta_phase(CellIndex::new(n, m + 3))));
    }

    #[test]
    fn edge_bc_is_admissible_and_compatible(cls in class(), c in -50i64..50, flip in any::<bool>()) {
        let line = EdgeLine::new(cls, c, if flip { -1 } else { 1 });
        let bc = edge_bc_for_line::<f64>(&line).unwrap();
        prop_assert!(bc.compatible);
        prop_assert!(close(bc.delta_a / bc.delta_b, bc.t_complex * bc.t_complex));
        let gamma = edge_gamma(&bc).unwrap();
        let frame = gqd_core::armchair::edge_frame(&bc).unwrap();
        prop_assert!(admissibility(&boundary_matrix(&gamma, &frame), &frame, 1e-12).all());
    }

    #[test]
    fn classification_survives_translation_along_edge(cls in class(), c in -20i64..20, k in -40i64..40) {
        let (bn, bm) = cls.base_step().unwrap();
        let (a0, _) = cls.seed_cells(c).unwrap();
        let cells: Vec<CellIndex> = (0..4).map(|j| a0.offset((k + j) * bn, (k + j) * bm)).collect();
        let line = classify_edge(&cells).unwrap();
        prop_assert_eq!(line.class, cls);
        prop_assert_eq!(line.c, c);
        prop_assert_eq!(line.orientation, 1);
    }

    #[test]
    fn nu_constant_along_edge(cls in class(), c in -20i64..20, k in -40i64..40) {
        let line = EdgeLine::new(cls, c, 1);
        let (bn, bm) = cls.base_step().unwrap();
        let (a0, b0) = cls.seed_cells(c).unwrap();
        let here = edge_bc::<f64>(&line, a0.offset(k * bn, k * bm), b0.offset(k * bn, k * bm)).unwrap();
        prop_assert!(close(here.nu, edge_bc_for_line::<f64>(&line).unwrap().nu));
    }

    #[test]
    fn triangles_diagonalizable_anywhere(k in 1i64..8, p in -30i64..30, q in -30i64..30) {
        let r = polygon_report(&shifted(&[(0, 0), (k, k), (2 * k, -k)], p, q)).unwrap();
        prop_assert!(r.all_armchair && r.diagonalizable);
        prop_assert!(r.corners.iter().all(|c| c.corner_type == Some(CornerType::HexCenter)));
    }

    #[test]
    fn hexagons_never_diagonalizable(k in 1i64..6, p in -30i64..30, q in -30i64..30) {
        let r = polygon_report(&shifted(&hexagon(k), p, q)).unwrap();
        prop_assert!(r.all_armchair);
        prop_assert!(!r.diagonalizable);
    }
}

#[test]
fn delta_takes_three_values() {
    let mut seen: Vec<Complex<f64>> = Vec::new();
    for n in -6..6 {
        for m in -6..6 {
            let d = delta_phase(CellIndex::new(n, m));
            if !seen.iter().any(|&s| close(s, d)) {
                seen.push(d);
            }
        }
    }
    assert_eq!(seen.len(), 3);
    let sum: Complex<f64> = seen.iter().sum();
    assert!(sum.norm() < 1e-12);
}

#[test]
fn reversing_an_edge_flips_tangent() {
    for cls in EdgeClass::ARMCHAIR {
        let line = EdgeLine::new(cls, 4, 1);
        let t = line.tangent::<f64>().unwrap();
        let back = line.reversed().tangent::<f64>().unwrap();
        assert!(close(t, -back));
    }
}

#[test]
fn mixed_corners_are_lattice_features() {
    for (c1, c2) in [
        (EdgeClass::Horizontal, EdgeClass::Deg60),
        (EdgeClass::Deg60, EdgeClass::Deg120),
        (EdgeClass::Horizontal, EdgeClass::Deg120),
    ] {
        for a in -4..4 {
            for b in -4..4 {
                let t = corner_type(&EdgeLine::new(c1, a, 1), &EdgeLine::new(c2, b, 1)).unwrap();
                assert_ne!(t, CornerType::Other);
            }
        }
    }
    let h = EdgeLine::new(EdgeClass::Horizontal, 0, 1);
    assert!(corner_type(&h, &EdgeLine::new(EdgeClass::Horizontal, 3, 1)).is_err());
}

#[test]
fn zigzag_edges_break_the_armchair_report() {
    let r = polygon_report(&[[0.0, 0.0], [4.0, 0.0], [0.0, 4.0]]).unwrap();
    assert!(!r.all_armchair);
    assert!(!r.diagonalizable);
    assert!(r.common_gamma.is_none());
}

#[test]
fn triangle_gap_above_infinite_mass_bound() {
    let conv = LatticeConventions::new(1.0, 1.0);
    for size in [6.0, 9.0, 12.0] {
        let dot = build_dot(&GeometrySpec::ArmchairTriangle { size }, &conv).unwrap();
        let spec = spectrum(&assemble_h(&dot, &conv), false).unwrap();
        let cmp = continuum_compare(&dot, &spec, &BoundaryParams::armchair(0.0), &conv).unwrap();
        assert!(cmp.ratio >= 1.0, "size {size}: ratio {}", cmp.ratio);
    }
}
