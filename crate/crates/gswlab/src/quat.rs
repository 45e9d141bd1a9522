//! Quaternion algebra, the double covers Sp(1) -> SO(3) and
//! Sp+(1) x Sp-(1) -> SO(4), and the quaternionic-linear splitting of
//! Hom_R(U, V).
//!
//! Quaternions are stored scalar-first: `q = w + x i + y j + z k` with
//! the Hamilton relations `i^2 = j^2 = k^2 = -1`, `ij = k`.

use nalgebra::{DMatrix, DVector, Matrix3, Matrix4};
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Tolerance for the unit-norm precondition of the covering maps.
pub const UNIT_TOL: f64 = 1e-12;

/// Tolerance for validating quaternionic structure triples.
const STRUCTURE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

impl Quaternion {
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    pub const fn zero() -> Self {
        Quaternion::new(0.0, 0.0, 0.0, 0.0)
    }

    /// Purely imaginary quaternion `x i + y j + z k`.
    pub const fn imag(x: f64, y: f64, z: f64) -> Self {
        Quaternion::new(0.0, x, y, z)
    }

    /// Basis element `e_mu` for mu in 0..4, i.e. (1, i, j, k).
    pub fn basis(mu: usize) -> Self {
        match mu {
            0 => ONE,
            1 => I,
            2 => J,
            3 => K,
            _ => panic!("quaternion basis index {mu} out of range"),
        }
    }

    pub fn conj(self) -> Self {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Euclidean inner product of the four components, `Re(conj(p) q)`.
    pub fn dot(self, rhs: Self) -> f64 {
        self.w * rhs.w + self.x * rhs.x + self.y * rhs.y + self.z * rhs.z
    }

    pub fn re(self) -> f64 {
        self.w
    }

    /// Imaginary part as a quaternion.
    pub fn im(self) -> Self {
        Quaternion::imag(self.x, self.y, self.z)
    }

    pub fn inverse(self) -> Self {
        let n2 = self.norm_sqr();
        self.conj() / n2
    }

    pub fn is_unit(self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    /// Components along (1, i, j, k).
    pub fn components(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn from_components(c: [f64; 4]) -> Self {
        Quaternion::new(c[0], c[1], c[2], c[3])
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Self) -> Self {
        Quaternion::new(
            self.w + rhs.w,
            self.x + rhs.x,
            self.y + rhs.y,
            self.z + rhs.z,
        )
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Self) -> Self {
        Quaternion::new(
            self.w - rhs.w,
            self.x - rhs.x,
            self.y - rhs.y,
            self.z - rhs.z,
        )
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Self {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    /// Hamilton product with `i^2 = j^2 = k^2 = -1`, `ij = k`.
    fn mul(self, rhs: Self) -> Self {
        let (a, b, c, d) = (self.w, self.x, self.y, self.z);
        let (e, f, g, h) = (rhs.w, rhs.x, rhs.y, rhs.z);
        Quaternion::new(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: f64) -> Self {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Div<f64> for Quaternion {
    type Output = Quaternion;
    fn div(self, s: f64) -> Self {
        Quaternion::new(self.w / s, self.x / s, self.y / s, self.z / s)
    }
}

/// Hamilton product as a free function.
pub fn quat_mul(p: Quaternion, q: Quaternion) -> Quaternion {
    p * q
}

/// 4x4 real matrix of left multiplication `h -> q h` in the basis (1, i, j, k).
pub fn left_mult_matrix(q: Quaternion) -> Matrix4<f64> {
    let mut m = Matrix4::zeros();
    for mu in 0..4 {
        let col = (q * Quaternion::basis(mu)).components();
        for (row, &v) in col.iter().enumerate() {
            m[(row, mu)] = v;
        }
    }
    m
}

/// 4x4 real matrix of right multiplication `h -> h q` in the basis (1, i, j, k).
pub fn right_mult_matrix(q: Quaternion) -> Matrix4<f64> {
    let mut m = Matrix4::zeros();
    for mu in 0..4 {
        let col = (Quaternion::basis(mu) * q).components();
        for (row, &v) in col.iter().enumerate() {
            m[(row, mu)] = v;
        }
    }
    m
}

/// The double cover Sp(1) -> SO(3): matrix of `h -> q h conj(q)` on Im H in
/// the basis (i, j, k).
pub fn so3_from_unit_quat(q: Quaternion) -> Result<Matrix3<f64>> {
    if !q.is_unit(UNIT_TOL) {
        return Err(Error::NonUnitQuaternion { norm: q.norm() });
    }
    let mut m = Matrix3::zeros();
    for a in 0..3 {
        let h = Quaternion::basis(a + 1);
        let img = q * h * q.conj();
        let c = img.components();
        for b in 0..3 {
            m[(b, a)] = c[b + 1];
        }
    }
    Ok(m)
}

/// The double cover Sp+(1) x Sp-(1) -> SO(4): matrix of
/// `h -> q_plus h conj(q_minus)` in the basis (1, i, j, k).
pub fn so4_from_quat_pair(qp: Quaternion, qm: Quaternion) -> Result<Matrix4<f64>> {
    if !qp.is_unit(UNIT_TOL) {
        return Err(Error::NonUnitQuaternion { norm: qp.norm() });
    }
    if !qm.is_unit(UNIT_TOL) {
        return Err(Error::NonUnitQuaternion { norm: qm.norm() });
    }
    let mut m = Matrix4::zeros();
    for mu in 0..4 {
        let img = qp * Quaternion::basis(mu) * qm.conj();
        let c = img.components();
        for row in 0..4 {
            m[(row, mu)] = c[row];
        }
    }
    Ok(m)
}

/// A triple of complex structures (i1, i2, i3) on R^{4k} satisfying the
/// quaternionic relations, stored as explicit real matrices so that rotated
/// triples can be handled uniformly.
#[derive(Debug, Clone)]
pub struct QuatStructure {
    pub i1: DMatrix<f64>,
    pub i2: DMatrix<f64>,
    pub i3: DMatrix<f64>,
}

impl QuatStructure {
    /// Validates i_a^2 = -Id, i1 i2 = i3 and orthogonality of each i_a.
    pub fn new(i1: DMatrix<f64>, i2: DMatrix<f64>, i3: DMatrix<f64>) -> Result<Self> {
        let dim = i1.nrows();
        for m in [&i1, &i2, &i3] {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(Error::shape("structure matrices must be square, same size"));
            }
        }
        if dim % 4 != 0 {
            return Err(Error::shape(format!(
                "quaternionic structure needs dimension divisible by 4, got {dim}"
            )));
        }
        let id = DMatrix::<f64>::identity(dim, dim);
        for m in [&i1, &i2, &i3] {
            if (m * m + &id).norm() > STRUCTURE_TOL {
                return Err(Error::shape("structure matrix does not square to -Id"));
            }
            if (m.transpose() * m - &id).norm() > STRUCTURE_TOL {
                return Err(Error::shape("structure matrix is not orthogonal"));
            }
        }
        if (&i1 * &i2 - &i3).norm() > STRUCTURE_TOL {
            return Err(Error::shape("quaternionic relation i1 i2 = i3 violated"));
        }
        Ok(QuatStructure { i1, i2, i3 })
    }

    /// Standard structure on H = R^4 given by left multiplication by (i, j, k).
    pub fn left_mult() -> Self {
        let to_dyn = |m: Matrix4<f64>| DMatrix::from_fn(4, 4, |r, c| m[(r, c)]);
        QuatStructure {
            i1: to_dyn(left_mult_matrix(I)),
            i2: to_dyn(left_mult_matrix(J)),
            i3: to_dyn(left_mult_matrix(K)),
        }
    }

    /// Block-diagonal left-multiplication structure on H^k = R^{4k}.
    pub fn left_mult_blocks(k: usize) -> Self {
        let base = Self::left_mult();
        let dim = 4 * k;
        let embed = |m: &DMatrix<f64>| {
            let mut out = DMatrix::zeros(dim, dim);
            for b in 0..k {
                out.view_mut((4 * b, 4 * b), (4, 4)).copy_from(m);
            }
            out
        };
        QuatStructure {
            i1: embed(&base.i1),
            i2: embed(&base.i2),
            i3: embed(&base.i3),
        }
    }

    pub fn dim(&self) -> usize {
        self.i1.nrows()
    }

    /// Rotate the triple by R in SO(3): i'_a = sum_b R_{ba} i_b.
    pub fn rotate(&self, r: &Matrix3<f64>) -> Self {
        let mix = |a: usize| -> DMatrix<f64> {
            &self.i1 * r[(0, a)] + &self.i2 * r[(1, a)] + &self.i3 * r[(2, a)]
        };
        QuatStructure {
            i1: mix(0),
            i2: mix(1),
            i3: mix(2),
        }
    }

    /// Conjugate the triple by an orthogonal matrix: i'_a = Q i_a Q^T.
    pub fn conjugate(&self, q: &DMatrix<f64>) -> Self {
        QuatStructure {
            i1: q * &self.i1 * q.transpose(),
            i2: q * &self.i2 * q.transpose(),
            i3: q * &self.i3 * q.transpose(),
        }
    }
}

/// Splitting of a real-linear map A: U -> V into its quaternionic-linear part
/// and the orthogonal remainder.
#[derive(Debug, Clone)]
pub struct HomSplit {
    pub quaternionic: DMatrix<f64>,
    pub plus: DMatrix<f64>,
}

/// Orthogonal projection of A onto Hom_H(U, V):
/// `P(A) = (A - I1 A i1 - I2 A i2 - I3 A i3) / 4`.
pub fn quaternionic_projector(
    a: &DMatrix<f64>,
    src: &QuatStructure,
    dst: &QuatStructure,
) -> Result<HomSplit> {
    if a.ncols() != src.dim() || a.nrows() != dst.dim() {
        return Err(Error::shape(format!(
            "map is {}x{}, structures are dim {} (src) and {} (dst)",
            a.nrows(),
            a.ncols(),
            src.dim(),
            dst.dim()
        )));
    }
    let q = (a - &dst.i1 * a * &src.i1 - &dst.i2 * a * &src.i2 - &dst.i3 * a * &src.i3) / 4.0;
    let plus = a - &q;
    Ok(HomSplit {
        quaternionic: q,
        plus,
    })
}

/// Pointwise Fueter contraction of a map A: H -> V, i.e.
/// `A e0 - I1 A e1 - I2 A e2 - I3 A e3`.
///
/// For the standard left-multiplication structure on the source this equals
/// `4 P(A) e0` with P the projector above.
pub fn fueter_contraction(a: &DMatrix<f64>, dst: &QuatStructure) -> Result<DVector<f64>> {
    if a.ncols() != 4 || a.nrows() != dst.dim() {
        return Err(Error::shape(format!(
            "map is {}x{}, expected {}x4",
            a.nrows(),
            a.ncols(),
            dst.dim()
        )));
    }
    let col = |mu: usize| DVector::from_column_slice(a.column(mu).as_slice());
    let out = col(0) - &dst.i1 * col(1) - &dst.i2 * col(2) - &dst.i3 * col(3);
    Ok(out)
}
