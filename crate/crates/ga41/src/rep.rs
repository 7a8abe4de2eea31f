//! The faithful representation of the algebra on 4x4 complex matrices.
//!
//! Five fixed generator matrices extend multiplicatively to all 32 blades
//! and linearly to every multivector; the pseudoscalar lands on `j` times
//! the identity, so the matrix `j` plays the role of the algebra's
//! pseudoscalar. The blade images are linearly independent over the reals,
//! which makes the map a bijection onto the full matrix algebra; `unrep`
//! inverts it by solving the precomputed 32x32 real system once.

use std::sync::OnceLock;

use crate::blade::Blade;
use crate::error::Error;
use crate::matrix::{Complex, ComplexMatrix4};
use crate::multivector::Multivector;

/// Tolerance for representation-based identity checks.
pub const TOL_REP: f64 = 1e-10;

const O: Complex = Complex::ZERO;
const P: Complex = Complex::ONE;
const N: Complex = Complex::new(-1.0, 0.0);
const J: Complex = Complex::J;
const MJ: Complex = Complex::new(0.0, -1.0);

/// The fixed image of a single generator.
fn generator_matrix(g: u8) -> ComplexMatrix4 {
    let rows = match g {
        0 => [[MJ, O, O, O], [O, J, O, O], [O, O, MJ, O], [O, O, O, J]],
        1 => [[O, O, O, P], [O, O, N, O], [O, N, O, O], [P, O, O, O]],
        2 => [[O, J, O, O], [MJ, O, O, O], [O, O, O, MJ], [O, O, J, O]],
        3 => [[O, P, O, O], [P, O, O, O], [O, O, O, P], [O, O, P, O]],
        4 => [[O, O, O, MJ], [O, O, J, O], [O, MJ, O, O], [J, O, O, O]],
        _ => unreachable!("generator index out of range"),
    };
    ComplexMatrix4::from_rows(rows)
}

fn blade_images() -> &'static [ComplexMatrix4; 32] {
    static IMAGES: OnceLock<[ComplexMatrix4; 32]> = OnceLock::new();
    IMAGES.get_or_init(|| {
        let mut images = [ComplexMatrix4::zero(); 32];
        images[0] = ComplexMatrix4::identity();
        for index in 1..32usize {
            let low = index.trailing_zeros() as u8;
            let rest = index & (index - 1);
            // Ascending generator order: sigma_low times the image of the rest.
            images[index] = generator_matrix(low).mul(&images[rest]);
        }
        images
    })
}

/// Flatten a matrix to 32 reals: row-major entries, real part then imaginary.
fn flatten(m: &ComplexMatrix4) -> [f64; 32] {
    let mut v = [0.0; 32];
    for r in 0..4 {
        for c in 0..4 {
            let e = m.entry(r, c);
            v[2 * (4 * r + c)] = e.re;
            v[2 * (4 * r + c) + 1] = e.im;
        }
    }
    v
}

/// Invert a 32x32 matrix by Gauss-Jordan elimination with partial pivoting.
fn invert(mut a: [[f64; 32]; 32]) -> Option<[[f64; 32]; 32]> {
    let mut inv = [[0.0; 32]; 32];
    for (k, row) in inv.iter_mut().enumerate() {
        row[k] = 1.0;
    }
    for col in 0..32 {
        let pivot = (col..32)
            .max_by(|&r, &s| a[r][col].abs().total_cmp(&a[s][col].abs()))
            .unwrap();
        if a[pivot][col].abs() < 1e-9 {
            return None;
        }
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = 1.0 / a[col][col];
        for k in 0..32 {
            a[col][k] *= scale;
            inv[col][k] *= scale;
        }
        for row in 0..32 {
            if row == col {
                continue;
            }
            let factor = a[row][col];
            if factor == 0.0 {
                continue;
            }
            for k in 0..32 {
                a[row][k] -= factor * a[col][k];
                inv[row][k] -= factor * inv[col][k];
            }
        }
    }
    Some(inv)
}

/// Inverse of the blade-image system: maps a flattened matrix back to blade
/// coefficients. Built once; failure would mean the images are dependent.
fn unrep_table() -> Result<&'static [[f64; 32]; 32], Error> {
    static TABLE: OnceLock<Option<[[f64; 32]; 32]>> = OnceLock::new();
    TABLE
        .get_or_init(|| {
            let images = blade_images();
            let mut system = [[0.0; 32]; 32];
            for (col, image) in images.iter().enumerate() {
                let flat = flatten(image);
                for (row, value) in flat.iter().enumerate() {
                    system[row][col] = *value;
                }
            }
            invert(system)
        })
        .as_ref()
        .ok_or(Error::SingularBasis)
}

/// Matrix image of a multivector: the linear extension over blade images.
pub fn rep(mv: &Multivector) -> ComplexMatrix4 {
    let images = blade_images();
    let mut out = ComplexMatrix4::zero();
    for (b, c) in mv.nonzero() {
        out = out.add(&images[b.index()].scale_re(c));
    }
    out
}

/// The unique multivector whose image is the given matrix.
pub fn unrep(m: &ComplexMatrix4) -> Result<Multivector, Error> {
    let table = unrep_table()?;
    let target = flatten(m);
    let mut coeffs = [0.0; 32];
    for (row, out) in coeffs.iter_mut().enumerate() {
        let mut acc = 0.0;
        for (col, t) in target.iter().enumerate() {
            acc += table[row][col] * t;
        }
        *out = acc;
    }
    Ok(Multivector::from_coeffs(coeffs))
}

/// Image of a single blade (precomputed).
pub fn blade_image(b: Blade) -> ComplexMatrix4 {
    blade_images()[b.index()]
}
