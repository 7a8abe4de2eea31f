//! Monogenic plane waves, the Dirac form of the first-order condition, and
//! constant-potential gauge coupling.
//!
//! A plane wave `psi = A psi0 exp(u (b p0 t + p_i x^i + alpha))` with
//! `u*u = -1` satisfies the first-order condition `D psi = 0` exactly when
//! the amplitude is a right multiple of the momentum vector
//! `v = sigma^i p_i - b sigma0 p0` and `v` is nilpotent, i.e. the momentum
//! is on the mass shell `p1^2 + ... + p4^2 = p0^2`. All residuals here strip
//! the invertible exponential factor and return exact multivectors; a
//! central-difference stencil provides an independent numeric cross-check.

use crate::blade::Blade;
use crate::error::Error;
use crate::multivector::{Multivector, TOL_IDENTITY};

/// Shell tolerance for the on-shell predicate.
pub const TOL_SHELL: f64 = 1e-9;

fn basis(gens: &[u8]) -> Multivector {
    Multivector::basis(Blade::from_generators(gens).expect("valid blade"))
}

/// Energy, three wave-vector components, and rest mass, in natural units.
/// Index 0 is energy and index 4 the rest mass (the proper-time direction).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiveMomentum {
    pub components: [f64; 5],
}

impl FiveMomentum {
    pub fn new(p0: f64, p1: f64, p2: f64, p3: f64, p4: f64) -> Self {
        FiveMomentum {
            components: [p0, p1, p2, p3, p4],
        }
    }

    pub fn energy(&self) -> f64 {
        self.components[0]
    }

    pub fn mass(&self) -> f64 {
        self.components[4]
    }

    /// `p1^2 + p2^2 + p3^2 + p4^2 - p0^2`; zero on the mass shell.
    pub fn shell_residual(&self) -> f64 {
        let [p0, p1, p2, p3, p4] = self.components;
        p1 * p1 + p2 * p2 + p3 * p3 + p4 * p4 - p0 * p0
    }

    pub fn is_on_shell(&self) -> bool {
        self.shell_residual().abs() <= TOL_SHELL
    }

    /// The on-shell momentum with the given spatial part and mass, taking
    /// the positive energy root.
    pub fn on_shell(p1: f64, p2: f64, p3: f64, mass: f64) -> Self {
        let p0 = (p1 * p1 + p2 * p2 + p3 * p3 + mass * mass).sqrt();
        Self::new(p0, p1, p2, p3, mass)
    }
}

/// Sign of the time term in the exponent: `+` means `+p0 t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

/// Constant electromagnetic potential on the four spacetime directions.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct GaugePotential {
    pub components: [f64; 4],
}

impl GaugePotential {
    pub fn new(a0: f64, a1: f64, a2: f64, a3: f64) -> Self {
        GaugePotential {
            components: [a0, a1, a2, a3],
        }
    }

    /// The potential as the vector `A_mu sigma^mu = -A0 sigma0 + A_m sigma_m`.
    pub fn vector(&self) -> Multivector {
        let [a0, a1, a2, a3] = self.components;
        Multivector::vector([-a0, a1, a2, a3, 0.0])
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|&c| c == 0.0)
    }
}

/// A plane-wave solution candidate: amplitude, imaginary unit, sign branch,
/// five-momentum, phase, and overall magnitude.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneWave {
    pub amplitude: Multivector,
    pub imaginary: Multivector,
    pub branch: Branch,
    pub momentum: FiveMomentum,
    pub phase: f64,
    pub magnitude: f64,
}

impl PlaneWave {
    /// Build a wave, insisting that the imaginary unit squares to -1.
    pub fn new(
        amplitude: Multivector,
        imaginary: Multivector,
        branch: Branch,
        momentum: FiveMomentum,
    ) -> Result<Self, Error> {
        let defect = (imaginary * imaginary + Multivector::scalar(1.0)).max_abs_coeff();
        if defect > TOL_IDENTITY {
            return Err(Error::NotUnitary(defect));
        }
        Ok(PlaneWave {
            amplitude,
            imaginary,
            branch,
            momentum,
            phase: 0.0,
            magnitude: 1.0,
        })
    }

    /// The standard monogenic wave: nilpotent amplitude for the momentum.
    pub fn monogenic(
        momentum: FiveMomentum,
        branch: Branch,
        imaginary: Multivector,
    ) -> Result<Self, Error> {
        Self::new(
            nilpotent_amplitude(&momentum, branch),
            imaginary,
            branch,
            momentum,
        )
    }

    pub fn with_phase(mut self, phase: f64) -> Self {
        self.phase = phase;
        self
    }

    pub fn with_magnitude(mut self, magnitude: f64) -> Self {
        self.magnitude = magnitude;
        self
    }

    /// The exponent coefficient at a point:
    /// `b p0 x0 + p1 x1 + p2 x2 + p3 x3 + p4 x4 + phase`.
    pub fn exponent_at(&self, x: &[f64; 5]) -> f64 {
        let p = self.momentum.components;
        self.branch.sign() * p[0] * x[0]
            + p[1] * x[1]
            + p[2] * x[2]
            + p[3] * x[3]
            + p[4] * x[4]
            + self.phase
    }

    /// Evaluate the wave: `A psi0 (cos theta + u sin theta)`.
    pub fn evaluate(&self, x: &[f64; 5]) -> Multivector {
        let theta = self.exponent_at(x);
        let exponential = Multivector::scalar(theta.cos()) + self.imaginary * theta.sin();
        self.amplitude.geometric(&exponential) * self.magnitude
    }
}

/// `u = i h` for a unitary `h`: squares to -1 and commutes with the
/// pseudoscalar.
pub fn imaginary_from_unitary(h: &Multivector) -> Result<Multivector, Error> {
    let defect = (*h * *h - Multivector::scalar(1.0)).max_abs_coeff();
    if defect > TOL_IDENTITY {
        return Err(Error::NotUnitary(defect));
    }
    Ok(Multivector::pseudoscalar() * *h)
}

/// The momentum vector of the first-order condition in reciprocal-frame
/// components: `v = p4 sigma4 + p_m sigma_m - b p0 sigma0`. Its square is
/// the scalar shell residual, so it is nilpotent exactly on the shell.
pub fn nilpotent_amplitude(p: &FiveMomentum, branch: Branch) -> Multivector {
    let [p0, p1, p2, p3, p4] = p.components;
    Multivector::vector([-branch.sign() * p0, p1, p2, p3, p4])
}

/// Residual of the first-order condition with the exponential stripped:
/// `(sigma^i p_i - b sigma0 p0) psi0 u`. Zero exactly when the wave is
/// monogenic.
pub fn monogenic_residual(w: &PlaneWave) -> Multivector {
    let v = nilpotent_amplitude(&w.momentum, w.branch);
    v.geometric(&w.amplitude).geometric(&w.imaginary)
}

/// Scalar factor left after applying the Laplacian to the wave:
/// `p0^2 - (p1^2 + ... + p4^2)`. Zero exactly on the mass shell, so every
/// monogenic wave solves the four-dimensional wave equation.
pub fn wave_residual(w: &PlaneWave) -> f64 {
    let residual = -w.momentum.shell_residual();
    if residual == 0.0 {
        0.0 // avoid the negative-zero rendering
    } else {
        residual
    }
}

/// The five Dirac elements `(gamma0, gamma1, gamma2, gamma3, gamma5)`:
/// `gamma0 = -sigma40 = sigma04`, `gamma_m = sigma4m = -sigma_m4`, and
/// `gamma5 = -sigma4`. The first squares to +1, the spatial three to -1,
/// all four mutually anticommute, and `gamma5` squares to +1 while
/// anticommuting with each of them (`i gamma0 gamma1 gamma2 gamma3`
/// evaluates to `sigma4 = -gamma5` under these blade conventions).
pub fn dirac_matrices() -> [Multivector; 5] {
    [
        basis(&[0, 4]),
        -basis(&[1, 4]),
        -basis(&[2, 4]),
        -basis(&[3, 4]),
        -basis(&[4]),
    ]
}

/// Residual of the Dirac form `gamma^mu d_mu psi + m psi u` with the
/// exponential stripped, using `d_4 psi = +p4 psi u`. Equals `sigma4` times
/// the first-order residual.
pub fn dirac_residual(w: &PlaneWave) -> Multivector {
    let [gamma0, gamma1, gamma2, gamma3, _] = dirac_matrices();
    let p = w.momentum.components;
    let momentum_operator = gamma0 * (w.branch.sign() * p[0])
        + gamma1 * p[1]
        + gamma2 * p[2]
        + gamma3 * p[3]
        + Multivector::scalar(p[4]);
    momentum_operator
        .geometric(&w.amplitude)
        .geometric(&w.imaginary)
}

/// Residual of the gauge-coupled condition
/// `((1/m) A_mu sigma^mu u d_4 + sigma^iota d_iota) psi` with the
/// exponential stripped:
///
/// `A_mu sigma^mu u psi0 u + (sigma^i p_i - b sigma0 p0) psi0 u`.
///
/// With `A = 0` this is exactly the first-order residual. When the wave's
/// `u` commutes with `psi0` the gauge term collapses to
/// `-A_mu sigma^mu psi0` and the condition is the minimal-coupling vector
/// form; otherwise the full non-vector remainder is returned as is.
pub fn gauge_residual(w: &PlaneWave, a: &GaugePotential) -> Result<Multivector, Error> {
    if w.momentum.mass() == 0.0 {
        return Err(Error::ZeroMass);
    }
    let free = monogenic_residual(w);
    if a.is_zero() {
        return Ok(free);
    }
    // Stripped x4 derivative is p4 psi0 u with p4 the rest mass, so the
    // operator's 1/m cancels against it exactly.
    let gauge_term = a
        .vector()
        .geometric(&w.imaginary)
        .geometric(&w.amplitude)
        .geometric(&w.imaginary);
    Ok(gauge_term + free)
}

/// Whether `u X = X u` within the identity tolerance.
pub fn commutes_with(u: &Multivector, x: &Multivector) -> bool {
    (u.geometric(x) - x.geometric(u)).max_abs_coeff() <= TOL_IDENTITY
}

/// Central-difference approximation of the vector derivative
/// `D f = sigma^iota d_iota f` at `x` with step `h`: ten field evaluations,
/// second-order accurate.
pub fn numeric_vector_derivative<F>(field: F, x: &[f64; 5], h: f64) -> Multivector
where
    F: Fn(&[f64; 5]) -> Multivector,
{
    let reciprocal = [
        -Multivector::basis(Blade::generator(0)),
        Multivector::basis(Blade::generator(1)),
        Multivector::basis(Blade::generator(2)),
        Multivector::basis(Blade::generator(3)),
        Multivector::basis(Blade::generator(4)),
    ];
    let mut out = Multivector::zero();
    for (iota, sigma) in reciprocal.iter().enumerate() {
        let mut fwd = *x;
        let mut bwd = *x;
        fwd[iota] += h;
        bwd[iota] -= h;
        let difference = field(&fwd) - field(&bwd);
        out += sigma.geometric(&difference) * (1.0 / (2.0 * h));
    }
    out
}
