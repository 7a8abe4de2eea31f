//! Dense multivectors: one real coefficient per basis blade.

use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};

use crate::blade::Blade;
use crate::error::Error;

/// Absolute tolerance for identity checks on products of modest multivectors.
pub const TOL_IDENTITY: f64 = 1e-12;

/// Tolerance for "this square must be a scalar" preconditions: the largest
/// non-scalar coefficient may not exceed this.
pub const TOL_SCALAR: f64 = 1e-9;

/// A general element of the algebra: 32 real blade coefficients.
///
/// Values are immutable in practice; every operation returns a new value, so
/// multivectors can be shared freely between threads.
///
/// ```
/// use ga41::{Blade, Multivector};
///
/// let e0 = Multivector::basis(Blade::generator(0));
/// assert_eq!(e0 * e0, Multivector::scalar(-1.0));
///
/// let i = Multivector::pseudoscalar();
/// assert_eq!(i * i, Multivector::scalar(-1.0));
/// assert_eq!(i * e0, e0 * i);
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Multivector {
    coeffs: [f64; 32],
}

impl Multivector {
    /// The zero multivector.
    pub const fn zero() -> Self {
        Multivector { coeffs: [0.0; 32] }
    }

    /// A pure scalar.
    pub fn scalar(value: f64) -> Self {
        let mut m = Self::zero();
        m.coeffs[Blade::SCALAR.index()] = value;
        m
    }

    /// The unit basis blade `b` as a multivector.
    pub fn basis(b: Blade) -> Self {
        let mut m = Self::zero();
        m.coeffs[b.index()] = 1.0;
        m
    }

    /// The grade-5 pseudoscalar.
    pub fn pseudoscalar() -> Self {
        Self::basis(Blade::PSEUDOSCALAR)
    }

    /// A grade-1 vector with the given components on the five generators.
    pub fn vector(components: [f64; 5]) -> Self {
        let mut m = Self::zero();
        for (g, &c) in components.iter().enumerate() {
            m.coeffs[Blade::generator(g as u8).index()] = c;
        }
        m
    }

    /// Multivector from a full coefficient array indexed by blade index.
    pub const fn from_coeffs(coeffs: [f64; 32]) -> Self {
        Multivector { coeffs }
    }

    /// Coefficient of a blade.
    pub fn coeff(&self, b: Blade) -> f64 {
        self.coeffs[b.index()]
    }

    /// Set the coefficient of a blade, returning the modified value.
    pub fn with_coeff(mut self, b: Blade, value: f64) -> Self {
        self.coeffs[b.index()] = value;
        self
    }

    /// The grade-0 coefficient.
    pub fn scalar_part(&self) -> f64 {
        self.coeffs[Blade::SCALAR.index()]
    }

    /// Blades with a nonzero coefficient, in canonical index order.
    pub fn nonzero(&self) -> impl Iterator<Item = (Blade, f64)> + '_ {
        Blade::all()
            .map(|b| (b, self.coeff(b)))
            .filter(|&(_, c)| c != 0.0)
    }

    /// Largest coefficient magnitude.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Largest componentwise difference from another multivector.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    /// Componentwise equality within an absolute tolerance.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// Whether every coefficient is within `tol` of zero.
    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_abs_coeff() <= tol
    }

    /// Largest coefficient magnitude outside grade 0.
    pub fn max_nonscalar_coeff(&self) -> f64 {
        Blade::all()
            .filter(|b| *b != Blade::SCALAR)
            .fold(0.0, |m, b| m.max(self.coeff(b).abs()))
    }

    /// Largest coefficient magnitude outside grade `k`.
    pub fn max_off_grade_coeff(&self, k: u32) -> f64 {
        Blade::all()
            .filter(|b| b.grade() != k)
            .fold(0.0, |m, b| m.max(self.coeff(b).abs()))
    }

    /// The grades whose coefficients exceed `tol`.
    pub fn grades_present(&self, tol: f64) -> Vec<u32> {
        let mut grades: Vec<u32> = (0..=5)
            .filter(|&k| Blade::all().any(|b| b.grade() == k && self.coeff(b).abs() > tol))
            .collect();
        grades.dedup();
        grades
    }

    /// Geometric product, the bilinear extension of the blade product.
    pub fn geometric(&self, rhs: &Self) -> Self {
        let mut out = [0.0; 32];
        for (i, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0.0 {
                continue;
            }
            let a = Blade::from_index(i);
            for (j, &cb) in rhs.coeffs.iter().enumerate() {
                if cb == 0.0 {
                    continue;
                }
                let (sign, b) = a.geometric(Blade::from_index(j));
                out[b.index()] += sign * ca * cb;
            }
        }
        Multivector { coeffs: out }
    }

    /// Inner (grade-lowering) product: for each blade pair of grades `r` and
    /// `s`, keep the part of the geometric product with grade `|r - s|`.
    /// For two vectors this is the symmetric scalar product; a vector dotted
    /// with a scalar yields a vector.
    pub fn inner(&self, rhs: &Self) -> Self {
        self.graded_product(rhs, |ga, gb| ga.abs_diff(gb))
    }

    /// Outer (grade-raising) product: keep the grade `r + s` part of each
    /// blade product. Blades sharing a generator contribute nothing.
    pub fn outer(&self, rhs: &Self) -> Self {
        self.graded_product(rhs, |ga, gb| ga + gb)
    }

    fn graded_product(&self, rhs: &Self, target: impl Fn(u32, u32) -> u32) -> Self {
        let mut out = [0.0; 32];
        for (i, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0.0 {
                continue;
            }
            let a = Blade::from_index(i);
            for (j, &cb) in rhs.coeffs.iter().enumerate() {
                if cb == 0.0 {
                    continue;
                }
                let b = Blade::from_index(j);
                let (sign, r) = a.geometric(b);
                if r.grade() == target(a.grade(), b.grade()) {
                    out[r.index()] += sign * ca * cb;
                }
            }
        }
        Multivector { coeffs: out }
    }

    /// Restriction to the grade-`k` blades.
    pub fn grade_project(&self, k: usize) -> Result<Self, Error> {
        if k > 5 {
            return Err(Error::GradeOutOfRange(k));
        }
        let mut out = Self::zero();
        for b in Blade::all() {
            if b.grade() as usize == k {
                out.coeffs[b.index()] = self.coeff(b);
            }
        }
        Ok(out)
    }

    /// Reversion: each grade-k coefficient picks up `(-1)^(k(k-1)/2)`.
    pub fn reverse(&self) -> Self {
        let mut out = *self;
        for b in Blade::all() {
            let k = b.grade();
            if (k * (k.saturating_sub(1)) / 2) % 2 == 1 {
                out.coeffs[b.index()] = -out.coeffs[b.index()];
            }
        }
        out
    }

    /// Exponential of a multivector whose square is a scalar.
    ///
    /// Writing `X = u theta` with `u*u` in {-1, 0, +1} and `theta = |X|`, the
    /// series collapses to `cos theta + u sin theta`, `cosh theta + u sinh
    /// theta`, or `1 + X` respectively. Anything with a non-scalar square is
    /// rejected rather than summed term by term.
    pub fn exp_scalar_square(&self) -> Result<Self, Error> {
        let square = self.geometric(self);
        let off = square.max_nonscalar_coeff();
        if off > TOL_SCALAR {
            return Err(Error::NonScalarSquare(off));
        }
        let s = square.scalar_part();
        if s < 0.0 {
            let theta = (-s).sqrt();
            Ok(Self::scalar(theta.cos()) + *self * (theta.sin() / theta))
        } else if s > 0.0 {
            let theta = s.sqrt();
            Ok(Self::scalar(theta.cosh()) + *self * (theta.sinh() / theta))
        } else {
            Ok(Self::scalar(1.0) + *self)
        }
    }

    /// Norm of a bivector, the square root of the scalar `B * reverse(B)`.
    pub fn bivector_norm(&self) -> Result<f64, Error> {
        let m = self.geometric(&self.reverse());
        let off = m.max_nonscalar_coeff();
        if off > TOL_SCALAR {
            return Err(Error::NonScalarSquare(off));
        }
        let s = m.scalar_part();
        if s < -TOL_SCALAR {
            return Err(Error::NegativeNorm(s));
        }
        Ok(s.max(0.0).sqrt())
    }
}

/// Two-sided rotor action: `exp(-B/2) a exp(+B/2)`.
///
/// `bivector` must be pure grade 2 with a scalar square and `vector` pure
/// grade 1; the rotation angle is the bivector norm of `B` and the rotation
/// plane is `B` itself. The exponential's scalar-square check is the only
/// runtime validation.
///
/// ```
/// use ga41::{rotor_apply, Blade, Multivector};
///
/// let e1 = Multivector::basis(Blade::generator(1));
/// let e2 = Multivector::basis(Blade::generator(2));
/// let quarter_turn = Multivector::basis(Blade::from_generators(&[1, 2]).unwrap())
///     * std::f64::consts::FRAC_PI_2;
/// let rotated = rotor_apply(&quarter_turn, &e1).unwrap();
/// assert!(rotated.approx_eq(&e2, 1e-12));
/// ```
pub fn rotor_apply(bivector: &Multivector, vector: &Multivector) -> Result<Multivector, Error> {
    let half = *bivector * 0.5;
    let forward = (-half).exp_scalar_square()?;
    let backward = half.exp_scalar_square()?;
    Ok(forward.geometric(vector).geometric(&backward))
}

impl Default for Multivector {
    fn default() -> Self {
        Self::zero()
    }
}

impl Index<Blade> for Multivector {
    type Output = f64;

    fn index(&self, b: Blade) -> &f64 {
        &self.coeffs[b.index()]
    }
}

impl Add for Multivector {
    type Output = Multivector;

    fn add(mut self, rhs: Multivector) -> Multivector {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a += b;
        }
        self
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, rhs: Multivector) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a += b;
        }
    }
}

impl Sub for Multivector {
    type Output = Multivector;

    fn sub(mut self, rhs: Multivector) -> Multivector {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a -= b;
        }
        self
    }
}

impl SubAssign for Multivector {
    fn sub_assign(&mut self, rhs: Multivector) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a -= b;
        }
    }
}

impl Neg for Multivector {
    type Output = Multivector;

    fn neg(mut self) -> Multivector {
        for c in self.coeffs.iter_mut() {
            *c = -*c;
        }
        self
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;

    fn mul(mut self, rhs: f64) -> Multivector {
        for c in self.coeffs.iter_mut() {
            *c *= rhs;
        }
        self
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;

    fn mul(self, rhs: Multivector) -> Multivector {
        rhs * self
    }
}

/// `*` is the geometric product.
impl Mul for Multivector {
    type Output = Multivector;

    fn mul(self, rhs: Multivector) -> Multivector {
        self.geometric(&rhs)
    }
}

impl std::fmt::Display for Multivector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::expr::format_multivector(self))
    }
}
