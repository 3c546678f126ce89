//! Honeycomb lattice conventions.
//!
//! Cell `(n, m)` sits at `r_nm = n a₁ + m a₂`. The A site is at the cell
//! origin and the B site at `(a/√3, 0)`, so A in cell `r` is bonded to B in
//! cells `r`, `r − a₁` and `r − a₂`.

use num_complex::Complex;
use serde::Serialize;

use crate::scalar::Real;

/// Lattice constant and hopping energy, with everything derived from them.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LatticeConventions<T> {
    pub a: T,
    pub hopping: T,
}

impl<T: Real> Default for LatticeConventions<T> {
    fn default() -> Self {
        Self {
            a: T::one(),
            hopping: T::one(),
        }
    }
}

impl<T: Real> LatticeConventions<T> {
    pub fn new(a: T, hopping: T) -> Self {
        Self { a, hopping }
    }

    fn sqrt3() -> T {
        T::lit(3.0).sqrt()
    }

    pub fn a1(&self) -> [T; 2] {
        let h = self.a * T::lit(0.5);
        [h * Self::sqrt3(), h]
    }

    pub fn a2(&self) -> [T; 2] {
        let h = self.a * T::lit(0.5);
        [h * Self::sqrt3(), -h]
    }

    /// Reciprocal vectors with `bᵢ·aⱼ = 2π δᵢⱼ`.
    pub fn b1(&self) -> [T; 2] {
        let s = T::TAU() / self.a;
        [s / Self::sqrt3(), s]
    }

    pub fn b2(&self) -> [T; 2] {
        let s = T::TAU() / self.a;
        [s / Self::sqrt3(), -s]
    }

    /// The Dirac point `K = (0, −4π/(3a))`.
    pub fn k_point(&self) -> [T; 2] {
        [T::zero(), -T::lit(4.0) * T::PI() / (T::lit(3.0) * self.a)]
    }

    /// `v_F = √3 t a / 2`.
    pub fn fermi_velocity(&self) -> T {
        Self::sqrt3() * self.hopping * self.a * T::lit(0.5)
    }

    /// Nearest-neighbour distance `a/√3`.
    pub fn bond_length(&self) -> T {
        self.a / Self::sqrt3()
    }

    /// Position of fractional cell coordinates `(n, m)`.
    pub fn point(&self, n: T, m: T) -> [T; 2] {
        let (a1, a2) = (self.a1(), self.a2());
        [n * a1[0] + m * a2[0], n * a1[1] + m * a2[1]]
    }

    /// Inverse of [`point`](Self::point).
    pub fn fractional(&self, r: [T; 2]) -> [T; 2] {
        // n + m = 2x/(√3 a), n − m = 2y/a
        let s = T::lit(2.0) * r[0] / (Self::sqrt3() * self.a);
        let d = T::lit(2.0) * r[1] / self.a;
        let half = T::lit(0.5);
        [(s + d) * half, (s - d) * half]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CellIndex {
    pub n: i64,
    pub m: i64,
}

impl CellIndex {
    pub const fn new(n: i64, m: i64) -> Self {
        Self { n, m }
    }

    pub const fn offset(self, dn: i64, dm: i64) -> Self {
        Self::new(self.n + dn, self.m + dm)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sublattice {
    A,
    B,
}

impl Sublattice {
    pub fn other(self) -> Self {
        match self {
            Self::A => Self::B,
            Self::B => Self::A,
        }
    }

    /// Fractional offset of the site inside its cell, `0` or `1/3` along both axes.
    pub fn fractional_offset<T: Real>(self) -> T {
        match self {
            Self::A => T::zero(),
            Self::B => T::one() / T::lit(3.0),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Site {
    pub cell: CellIndex,
    pub sublattice: Sublattice,
}

impl Site {
    pub const fn new(n: i64, m: i64, sublattice: Sublattice) -> Self {
        Self {
            cell: CellIndex::new(n, m),
            sublattice,
        }
    }

    /// The three nearest neighbours.
    pub fn neighbours(&self) -> [Site; 3] {
        let c = self.cell;
        match self.sublattice {
            Sublattice::A => [c, c.offset(-1, 0), c.offset(0, -1)].map(|cell| Site {
                cell,
                sublattice: Sublattice::B,
            }),
            Sublattice::B => [c, c.offset(1, 0), c.offset(0, 1)].map(|cell| Site {
                cell,
                sublattice: Sublattice::A,
            }),
        }
    }
}

pub fn site_position<T: Real>(site: &Site, conv: &LatticeConventions<T>) -> [T; 2] {
    let r = conv.point(T::lit(site.cell.n as f64), T::lit(site.cell.m as f64));
    match site.sublattice {
        Sublattice::A => r,
        Sublattice::B => [r[0] + conv.bond_length(), r[1]],
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dispersion<T> {
    pub f: Complex<T>,
    /// `(−|f|, +|f|)`.
    pub bands: (T, T),
}

/// `f(k) = t(1 + e^{−ik·a₂} + e^{−ik·a₁})`.
pub fn dispersion<T: Real>(k: [T; 2], conv: &LatticeConventions<T>) -> Dispersion<T> {
    let phase = |v: [T; 2]| {
        let (s, c) = (k[0] * v[0] + k[1] * v[1]).sin_cos();
        Complex::new(c, -s)
    };
    let f = (Complex::new(T::one(), T::zero()) + phase(conv.a2()) + phase(conv.a1())) * conv.hopping;
    let e = f.norm();
    Dispersion { f, bands: (-e, e) }
}

/// The two valleys `(K, −K)`.
pub fn dirac_points<T: Real>(conv: &LatticeConventions<T>) -> ([T; 2], [T; 2]) {
    let k = conv.k_point();
    (k, [-k[0], -k[1]])
}
