//! Deterministic random samplers shared by the verification suites and tests.
//!
//! Everything is driven by a single seeded ChaCha8 stream so that reports are
//! reproducible bit-for-bit for a fixed seed.

use nalgebra::{DMatrix, Matrix3};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::lattice::Grid4;
use crate::quat::{self, Quaternion, QuatStructure};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform in [-1, 1].
pub fn real(rng: &mut SampleRng) -> f64 {
    rng.random::<f64>() * 2.0 - 1.0
}

pub fn complex(rng: &mut SampleRng) -> Complex64 {
    Complex64::new(real(rng), real(rng))
}

pub fn quat(rng: &mut SampleRng) -> Quaternion {
    Quaternion::new(real(rng), real(rng), real(rng), real(rng))
}

pub fn imag_quat(rng: &mut SampleRng) -> Quaternion {
    Quaternion::imag(real(rng), real(rng), real(rng))
}

pub fn unit_quat(rng: &mut SampleRng) -> Quaternion {
    loop {
        let q = quat(rng);
        let n = q.norm();
        if n > 1e-3 {
            return q / n;
        }
    }
}

/// Unit complex number.
pub fn phase(rng: &mut SampleRng) -> Complex64 {
    let t = std::f64::consts::PI * real(rng);
    Complex64::new(t.cos(), t.sin())
}

/// Rotation matrix sampled through the Sp(1) -> SO(3) cover.
pub fn so3(rng: &mut SampleRng) -> Matrix3<f64> {
    quat::so3_from_unit_quat(unit_quat(rng)).expect("unit quaternion")
}

pub fn real_matrix(rng: &mut SampleRng, rows: usize, cols: usize) -> DMatrix<f64> {
    DMatrix::from_fn(rows, cols, |_, _| real(rng))
}

pub fn complex_matrix(rng: &mut SampleRng, rows: usize, cols: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(rows, cols, |_, _| complex(rng))
}

/// Random orthogonal matrix with determinant +1 via QR of a Gaussian-ish
/// square matrix.
pub fn orthogonal(rng: &mut SampleRng, dim: usize) -> DMatrix<f64> {
    loop {
        let m = real_matrix(rng, dim, dim);
        let qr = m.qr();
        let mut q = qr.q();
        let r = qr.r();
        // fix column signs so the factorization is unique-ish
        for c in 0..dim {
            if r[(c, c)] < 0.0 {
                for row in 0..dim {
                    q[(row, c)] = -q[(row, c)];
                }
            }
        }
        if q.determinant() < 0.0 {
            for row in 0..dim {
                q[(row, 0)] = -q[(row, 0)];
            }
        }
        if (q.transpose() * &q - DMatrix::identity(dim, dim)).norm() < 1e-10 {
            return q;
        }
    }
}

/// Random unitary k x k matrix via QR of a complex matrix.
pub fn unitary(rng: &mut SampleRng, k: usize) -> DMatrix<Complex64> {
    let m = complex_matrix(rng, k, k);
    let qr = m.qr();
    qr.q()
}

/// Random anti-Hermitian k x k matrix (u(k)).
pub fn anti_hermitian(rng: &mut SampleRng, k: usize) -> DMatrix<Complex64> {
    let m = complex_matrix(rng, k, k);
    (&m - m.adjoint()) * Complex64::new(0.5, 0.0)
}

/// Random traceless anti-Hermitian k x k matrix (su(k)).
pub fn su(rng: &mut SampleRng, k: usize) -> DMatrix<Complex64> {
    let mut m = anti_hermitian(rng, k);
    let tr = m.trace() / (k as f64);
    for d in 0..k {
        m[(d, d)] -= tr;
    }
    m
}

/// Random quaternionic structure on R^{4k}: the block left-multiplication
/// triple conjugated by a random orthogonal matrix.
pub fn quat_structure(rng: &mut SampleRng, k: usize) -> QuatStructure {
    let base = QuatStructure::left_mult_blocks(k);
    let q = orthogonal(rng, 4 * k);
    base.conjugate(&q)
}

/// A low-frequency trigonometric polynomial on the periodic box [0, L)^4.
///
/// The same function can be sampled on grids of different resolution, which
/// is what the convergence-order measurements need.
#[derive(Debug, Clone)]
pub struct TrigPoly4 {
    pub length: f64,
    terms: Vec<(f64, [i32; 4], f64)>, // (amplitude, wave vector, phase)
}

impl TrigPoly4 {
    pub fn sample(rng: &mut SampleRng, length: f64, n_terms: usize, max_mode: i32) -> Self {
        let mut terms = Vec::with_capacity(n_terms);
        for _ in 0..n_terms {
            let amp = real(rng);
            let k = [
                rng.random_range(-max_mode..=max_mode),
                rng.random_range(-max_mode..=max_mode),
                rng.random_range(-max_mode..=max_mode),
                rng.random_range(-max_mode..=max_mode),
            ];
            let phase = std::f64::consts::PI * real(rng);
            terms.push((amp, k, phase));
        }
        TrigPoly4 { length, terms }
    }

    pub fn eval(&self, x: [f64; 4]) -> f64 {
        let w = 2.0 * std::f64::consts::PI / self.length;
        self.terms
            .iter()
            .map(|(amp, k, phase)| {
                let arg = w
                    * (k[0] as f64 * x[0]
                        + k[1] as f64 * x[1]
                        + k[2] as f64 * x[2]
                        + k[3] as f64 * x[3]);
                amp * (arg + phase).cos()
            })
            .sum()
    }

    /// Values on all sites of a grid, in lexicographic site order.
    pub fn sample_grid(&self, grid: &Grid4) -> Vec<f64> {
        let mut vals = Vec::with_capacity(grid.num_sites());
        for site in grid.sites() {
            let x = grid.coords(site);
            vals.push(self.eval(x));
        }
        vals
    }
}
