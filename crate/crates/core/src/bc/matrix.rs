//! Small dense complex matrices and the Pauli basis.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Dense `N × N` complex matrix with value semantics, stored row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexMatrix<T, const N: usize> {
    entries: [[Complex<T>; N]; N],
}

pub type ComplexMatrix2<T> = ComplexMatrix<T, 2>;
pub type ComplexMatrix4<T> = ComplexMatrix<T, 4>;

impl<T: Real, const N: usize> ComplexMatrix<T, N> {
    pub fn from_rows(entries: [[Complex<T>; N]; N]) -> Self {
        Self { entries }
    }

    pub fn from_real_rows(rows: [[T; N]; N]) -> Self {
        let mut m = Self::zeros();
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                m.entries[i][j] = Complex::new(x, T::zero());
            }
        }
        m
    }

    pub fn zeros() -> Self {
        Self {
            entries: [[Complex::zero(); N]; N],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.entries[i][i] = Complex::one();
        }
        m
    }

    pub fn rows(&self) -> &[[Complex<T>; N]; N] {
        &self.entries
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.entries[i][j] = self.entries[j][i].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> Complex<T> {
        (0..N).fold(Complex::zero(), |acc, i| acc + self.entries[i][i])
    }

    pub fn frobenius_norm(&self) -> T {
        self.entries
            .iter()
            .flatten()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
            .sqrt()
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        let mut m = *self;
        m.entries.iter_mut().flatten().for_each(|z| *z = *z * factor);
        m
    }

    pub fn scale_real(&self, factor: T) -> Self {
        self.scale(Complex::new(factor, T::zero()))
    }

    /// `‖A − B‖_F`.
    pub fn distance(&self, other: &Self) -> T {
        (*self - *other).frobenius_norm()
    }

    /// Anticommutator `AB + BA`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }

    /// Commutator `AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    /// `‖A − A*‖_F`.
    pub fn hermiticity_residual(&self) -> T {
        self.distance(&self.adjoint())
    }

    /// `‖A A* − I‖_F`.
    pub fn unitarity_residual(&self) -> T {
        (*self * self.adjoint()).distance(&Self::identity())
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.hermiticity_residual() < tol
    }

    pub fn is_unitary(&self, tol: T) -> bool {
        self.unitarity_residual() < tol
    }

    /// `U A U*`.
    pub fn conjugate_by(&self, unitary: &Self) -> Self {
        *unitary * *self * unitary.adjoint()
    }
}

impl<T: Real> ComplexMatrix4<T> {
    /// The 2 × 2 block at block position `(row, col)`, each in `{0, 1}`.
    pub fn block(&self, row: usize, col: usize) -> ComplexMatrix2<T> {
        let mut b = ComplexMatrix2::zeros();
        for i in 0..2 {
            for j in 0..2 {
                b.entries[i][j] = self.entries[2 * row + i][2 * col + j];
            }
        }
        b
    }

    /// Frobenius norm of the two off-diagonal 2 × 2 blocks.
    pub fn off_diagonal_block_norm(&self) -> T {
        let a = self.block(0, 1).frobenius_norm();
        let b = self.block(1, 0).frobenius_norm();
        (a * a + b * b).sqrt()
    }
}

impl<T: Real, const N: usize> Index<(usize, usize)> for ComplexMatrix<T, N> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.entries[i][j]
    }
}

impl<T: Real, const N: usize> IndexMut<(usize, usize)> for ComplexMatrix<T, N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.entries[i][j]
    }
}

impl<T: Real, const N: usize> Add for ComplexMatrix<T, N> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for i in 0..N {
            for j in 0..N {
                self.entries[i][j] = self.entries[i][j] + rhs.entries[i][j];
            }
        }
        self
    }
}

impl<T: Real, const N: usize> Sub for ComplexMatrix<T, N> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for i in 0..N {
            for j in 0..N {
                self.entries[i][j] = self.entries[i][j] - rhs.entries[i][j];
            }
        }
        self
    }
}

impl<T: Real, const N: usize> Neg for ComplexMatrix<T, N> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale_real(-T::one())
    }
}

impl<T: Real, const N: usize> Mul for ComplexMatrix<T, N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zeros();
        for i in 0..N {
            for k in 0..N {
                let a = self.entries[i][k];
                for j in 0..N {
                    out.entries[i][j] = out.entries[i][j] + a * rhs.entries[k][j];
                }
            }
        }
        out
    }
}

/// Pauli matrix `σ_i`, with `σ_0` the identity.
pub fn pauli<T: Real>(i: usize) -> Result<ComplexMatrix2<T>> {
    let o = Complex::zero();
    let l = Complex::one();
    let im = Complex::i();
    let m = match i {
        0 => [[l, o], [o, l]],
        1 => [[o, l], [l, o]],
        2 => [[o, -im], [im, o]],
        3 => [[l, o], [o, -l]],
        _ => return Err(Error::PauliIndex(i)),
    };
    Ok(ComplexMatrix::from_rows(m))
}

/// All four Pauli matrices `[σ_0, σ_1, σ_2, σ_3]`.
pub fn pauli_basis<T: Real>() -> [ComplexMatrix2<T>; 4] {
    [0, 1, 2, 3].map(|i| pauli(i).expect("index in range"))
}

/// `σ⃗ · v⃗ = v_1 σ_1 + v_2 σ_2 + v_3 σ_3`.
pub fn sigma_dot<T: Real>(v: [T; 3]) -> ComplexMatrix2<T> {
    ComplexMatrix::from_rows([
        [Complex::new(v[2], T::zero()), Complex::new(v[0], -v[1])],
        [Complex::new(v[0], v[1]), Complex::new(-v[2], T::zero())],
    ])
}

/// In-plane `σ · v = v_1 σ_1 + v_2 σ_2`.
pub fn sigma_dot_planar<T: Real>(v: [T; 2]) -> ComplexMatrix2<T> {
    sigma_dot([v[0], v[1], T::zero()])
}

/// Kronecker product `a ⊗ b`.
pub fn kron<T: Real>(a: &ComplexMatrix2<T>, b: &ComplexMatrix2<T>) -> ComplexMatrix4<T> {
    let mut out = ComplexMatrix4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[(2 * i + k, 2 * j + l)] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Block-diagonal `a ⊕ b`.
pub fn direct_sum<T: Real>(a: &ComplexMatrix2<T>, b: &ComplexMatrix2<T>) -> ComplexMatrix4<T> {
    let mut out = ComplexMatrix4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            out[(i, j)] = a[(i, j)];
            out[(i + 2, j + 2)] = b[(i, j)];
        }
    }
    out
}
