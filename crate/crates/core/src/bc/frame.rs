use crate::error::{Error, Result};
use crate::scalar::Real;

/// Outward unit normal `n` and unit tangent `t` at a boundary point, with
/// `(n, t)` positively oriented.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryFrame<T> {
    normal: [T; 2],
    tangent: [T; 2],
}

impl<T: Real> BoundaryFrame<T> {
    pub fn new(normal: [T; 2], tangent: [T; 2]) -> Result<Self> {
        let tol = T::lit(T::IDENTITY_TOL);
        let norm = |v: [T; 2]| (v[0] * v[0] + v[1] * v[1]).sqrt();
        let checks = [
            ((norm(normal) - T::one()).abs(), "|n| != 1"),
            ((norm(tangent) - T::one()).abs(), "|t| != 1"),
            (
                (normal[0] * tangent[0] + normal[1] * tangent[1]).abs(),
                "n·t != 0",
            ),
            (
                (normal[0] * tangent[1] - normal[1] * tangent[0] - T::one()).abs(),
                "det[n t] != +1",
            ),
        ];
        for (residual, what) in checks {
            if !(residual <= tol) {
                return Err(Error::InvalidFrame(format!("{what} (residual {residual})")));
            }
        }
        Ok(Self { normal, tangent })
    }

    /// Frame with the given outward normal; the tangent is `n` rotated by +π/2.
    pub fn from_normal(normal: [T; 2]) -> Result<Self> {
        Self::new(normal, [-normal[1], normal[0]])
    }

    /// Frame with the given tangent; the normal is `t` rotated by −π/2.
    pub fn from_tangent(tangent: [T; 2]) -> Result<Self> {
        Self::new([tangent[1], -tangent[0]], tangent)
    }

    /// Frame whose outward normal points at `angle` from the x axis.
    pub fn from_normal_angle(angle: T) -> Self {
        let (s, c) = angle.sin_cos();
        Self {
            normal: [c, s],
            tangent: [-s, c],
        }
    }

    pub fn normal(&self) -> [T; 2] {
        self.normal
    }

    pub fn tangent(&self) -> [T; 2] {
        self.tangent
    }

    /// The normal embedded in R³ as `(n_1, n_2, 0)`.
    pub fn normal3(&self) -> [T; 3] {
        [self.normal[0], self.normal[1], T::zero()]
    }
}

/// Unit vector in R³.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitVector3<T>([T; 3]);

impl<T: Real> UnitVector3<T> {
    pub fn new(v: [T; 3]) -> Result<Self> {
        let n = dot3(&v, &v).sqrt();
        if (n - T::one()).abs() > T::lit(T::IDENTITY_TOL) {
            return Err(Error::InvalidFrame(format!("vector norm {n} is not 1")));
        }
        Ok(Self(v))
    }

    pub(crate) fn new_unchecked(v: [T; 3]) -> Self {
        Self(v)
    }

    pub fn as_array(&self) -> [T; 3] {
        self.0
    }

    pub fn dot(&self, other: &Self) -> T {
        dot3(&self.0, &other.0)
    }

    pub fn x(&self) -> T {
        self.0[0]
    }

    pub fn y(&self) -> T {
        self.0[1]
    }

    pub fn z(&self) -> T {
        self.0[2]
    }
}

pub fn dot3<T: Real>(a: &[T; 3], b: &[T; 3]) -> T {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross3<T: Real>(a: &[T; 3], b: &[T; 3]) -> [T; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valid_frames() {
        let f = BoundaryFrame::new([1.0, 0.0], [0.0, 1.0]).unwrap();
        assert_eq!(f.normal3(), [1.0, 0.0, 0.0]);
        let g = BoundaryFrame::<f64>::from_normal([0.0, -1.0]).unwrap();
        assert_eq!(g.tangent(), [1.0, 0.0]);
        let h = BoundaryFrame::<f64>::from_tangent([0.0, 1.0]).unwrap();
        assert_eq!(h.normal(), [1.0, 0.0]);
    }

    #[test]
    fn rejects_bad_frames() {
        // negatively oriented
        assert!(BoundaryFrame::new([1.0, 0.0], [0.0, -1.0]).is_err());
        // not unit
        assert!(BoundaryFrame::new([2.0, 0.0], [0.0, 1.0]).is_err());
        // not orthogonal
        let s = 0.5_f64.sqrt();
        assert!(BoundaryFrame::new([1.0, 0.0], [s, s]).is_err());
        assert!(BoundaryFrame::new([f64::NAN, 0.0], [0.0, 1.0]).is_err());
    }

    #[test]
    fn unit_vector_check() {
        assert!(UnitVector3::new([0.0, 0.6, 0.8]).is_ok());
        assert!(UnitVector3::new([0.0, 0.6, 0.9]).is_err());
    }
}
