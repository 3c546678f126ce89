//! Nearest-neighbour tight-binding Hamiltonian on a dot.

use nalgebra::DMatrix;
use num_complex::Complex;
use serde::Serialize;

use crate::bc::{gap_lower_bound, BoundaryParams};
use crate::dot::HoneycombDot;
use crate::error::{Error, Result};
use crate::lattice::{site_position, LatticeConventions, Site, Sublattice};
use crate::scalar::Real;

/// Hopping matrix over the interior sites. Edge sites carry zero amplitude
/// and are simply left out.
pub fn assemble_h<T: Real>(dot: &HoneycombDot<T>, conv: &LatticeConventions<T>) -> DMatrix<T> {
    let n = dot.len();
    let mut h = DMatrix::zeros(n, n);
    for &(i, j) in &dot.adjacency {
        h[(i, j)] = conv.hopping;
        h[(j, i)] = conv.hopping;
    }
    h
}

#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum<T: Real> {
    /// Ascending.
    pub eigenvalues: Vec<T>,
    /// Column `k` belongs to `eigenvalues[k]`.
    pub eigenvectors: Option<DMatrix<T>>,
}

impl<T: Real> Spectrum<T> {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Eigenvector `k` as complex amplitudes.
    pub fn complex_vector(&self, k: usize) -> Option<Vec<Complex<T>>> {
        let v = self.eigenvectors.as_ref()?;
        Some(v.column(k).iter().map(|&x| Complex::new(x, T::zero())).collect())
    }
}

/// Dense symmetric eigensolve, sorted ascending.
pub fn spectrum<T: Real>(h: &DMatrix<T>, vectors: bool) -> Result<Spectrum<T>> {
    let n = h.nrows();
    if h.ncols() != n {
        return Err(Error::NotHermitian(f64::INFINITY));
    }
    let mut asym = T::zero();
    let mut scale = T::zero();
    for i in 0..n {
        for j in 0..n {
            asym = asym.max((h[(i, j)] - h[(j, i)]).abs());
            scale = scale.max(h[(i, j)].abs());
        }
    }
    let scale = scale.max(T::one());
    if !(asym <= T::lit(T::IDENTITY_TOL) * scale) {
        return Err(Error::NotHermitian(asym.to_f64_lossy()));
    }
    if n == 0 {
        return Ok(Spectrum {
            eigenvalues: Vec::new(),
            eigenvectors: vectors.then(|| DMatrix::zeros(0, 0)),
        });
    }
    let (values, vecs) = T::symmetric_eigen(h.clone(), vectors);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        values[i]
            .partial_cmp(&values[j])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let eigenvalues = order.iter().map(|&i| values[i]).collect();
    let eigenvectors = vecs.map(|v| DMatrix::from_fn(n, n, |r, c| v[(r, order[c])]));
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DegeneratePair<T> {
    pub i: usize,
    pub j: usize,
    pub lambda_i: T,
    pub lambda_j: T,
    /// `|λⱼ − λᵢ| / max(|λᵢ|, |λⱼ|)`.
    pub splitting: T,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GapReport<T> {
    pub lambda_min_abs: T,
    pub degeneracy_pairs: Vec<DegeneratePair<T>>,
    /// Relative splitting of the two lowest positive levels.
    pub lowest_positive_splitting: Option<T>,
}

fn relative_splitting<T: Real>(x: T, y: T) -> T {
    let scale = x.abs().max(y.abs());
    if scale > T::zero() {
        (y - x).abs() / scale
    } else {
        T::zero()
    }
}

/// Greedily pairs consecutive eigenvalues whose relative splitting is at
/// most `pair_tol`.
pub fn gap_report<T: Real>(spec: &Spectrum<T>, pair_tol: T) -> GapReport<T> {
    let ev = &spec.eigenvalues;
    let lambda_min_abs = ev.iter().map(|x| x.abs()).fold(T::infinity(), T::min);
    let mut pairs = Vec::new();
    let mut i = 0;
    while i + 1 < ev.len() {
        let s = relative_splitting(ev[i], ev[i + 1]);
        if s <= pair_tol {
            pairs.push(DegeneratePair {
                i,
                j: i + 1,
                lambda_i: ev[i],
                lambda_j: ev[i + 1],
                splitting: s,
            });
            i += 2;
        } else {
            i += 1;
        }
    }
    let top = ev.iter().map(|x| x.abs()).fold(T::zero(), T::max);
    let zero = T::lit(T::DEGENERACY_TOL) * top;
    let mut positive = ev.iter().copied().filter(|&x| x > zero);
    let lowest_positive_splitting = match (positive.next(), positive.next()) {
        (Some(x), Some(y)) => Some(relative_splitting(x, y)),
        _ => None,
    };
    GapReport {
        lambda_min_abs,
        degeneracy_pairs: pairs,
        lowest_positive_splitting,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ContinuumComparison<T> {
    /// `min |λ| / v_F`.
    pub scaled_gap: T,
    pub bound: T,
    pub ratio: T,
}

pub fn continuum_compare<T: Real>(
    dot: &HoneycombDot<T>,
    spec: &Spectrum<T>,
    params: &BoundaryParams<T>,
    conv: &LatticeConventions<T>,
) -> Result<ContinuumComparison<T>> {
    if spec.is_empty() {
        return Err(Error::EmptyDot);
    }
    let bound = gap_lower_bound(params, dot.area)?;
    let lambda_min = spec
        .eigenvalues
        .iter()
        .map(|x| x.abs())
        .fold(T::infinity(), T::min);
    let scaled_gap = lambda_min / conv.fermi_velocity();
    Ok(ContinuumComparison {
        scaled_gap,
        bound,
        ratio: scaled_gap / bound,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SublatticeWeights<T> {
    pub plus: T,
    pub minus: T,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ValleyWeights<T> {
    pub weight_plus: T,
    pub weight_minus: T,
    pub a: SublatticeWeights<T>,
    pub b: SublatticeWeights<T>,
}

/// Splits `ψ` into the envelopes multiplying `e^{±iK·r}`.
///
/// Each demodulated amplitude `e^{∓iK·r} ψ(r)` is averaged over three
/// consecutive cells along `a₁` (`(n−1, m)`, `(n, m)`, `(n+1, m)`, shifted
/// inwards at the end of a row). Over a full window the other valley's
/// carrier cancels exactly.
pub fn valley_projection<T: Real>(
    dot: &HoneycombDot<T>,
    eigvec: &[Complex<T>],
    conv: &LatticeConventions<T>,
) -> ValleyWeights<T> {
    let k = conv.k_point();
    let carrier = |i: usize| {
        let r = site_position(&dot.interior_sites[i], conv);
        let (s, c) = (k[0] * r[0] + k[1] * r[1]).sin_cos();
        Complex::new(c, s)
    };
    let demod: Vec<[Complex<T>; 2]> = (0..dot.len())
        .map(|i| {
            let e = carrier(i);
            [e.conj() * eigvec[i], e * eigvec[i]]
        })
        .collect();
    let mut out = [[T::zero(); 2]; 2];
    for site in &dot.interior_sites {
        let present = |dn: i64| {
            dot.index_of(&Site {
                cell: site.cell.offset(dn, 0),
                sublattice: site.sublattice,
            })
        };
        // Prefer a full three-cell window: centred, then shifted inwards.
        let window: Vec<usize> = [[-1, 0, 1], [-2, -1, 0], [0, 1, 2]]
            .iter()
            .find_map(|w| w.iter().map(|&dn| present(dn)).collect::<Option<Vec<_>>>())
            .unwrap_or_else(|| [-1, 0, 1].iter().filter_map(|&dn| present(dn)).collect());
        let inv = T::one() / T::lit(window.len() as f64);
        let row = usize::from(site.sublattice == Sublattice::B);
        for v in 0..2 {
            let sum = window
                .iter()
                .fold(Complex::new(T::zero(), T::zero()), |acc, &j| acc + demod[j][v]);
            out[row][v] = out[row][v] + (sum * inv).norm_sqr();
        }
    }
    ValleyWeights {
        weight_plus: out[0][0] + out[1][0],
        weight_minus: out[0][1] + out[1][1],
        a: SublatticeWeights {
            plus: out[0][0],
            minus: out[0][1],
        },
        b: SublatticeWeights {
            plus: out[1][0],
            minus: out[1][1],
        },
    }
}
