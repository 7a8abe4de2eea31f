//! Minimal complex scalars and 4x4 complex matrices.
//!
//! Complex values are stored as plain real pairs. Matrix text output writes
//! the imaginary unit as `j`, e.g. `1-2j`; machine output is nested JSON
//! arrays of `[re, im]` pairs.

use std::ops::{Add, Mul, Neg, Sub};

/// A complex number as a real pair.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    pub const ZERO: Complex = Complex { re: 0.0, im: 0.0 };
    pub const ONE: Complex = Complex { re: 1.0, im: 0.0 };
    /// The imaginary unit, written `j` in text output.
    pub const J: Complex = Complex { re: 0.0, im: 1.0 };

    pub const fn new(re: f64, im: f64) -> Complex {
        Complex { re, im }
    }

    pub const fn real(re: f64) -> Complex {
        Complex { re, im: 0.0 }
    }

    pub fn conj(self) -> Complex {
        Complex::new(self.re, -self.im)
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    /// Compact `a+bj` rendering: `0`, `1`, `-j`, `0.5-0.5j`, ...
    pub fn format_j(self) -> String {
        let re = format_real(self.re);
        let im_mag = format_real(self.im.abs());
        match (self.re == 0.0, self.im == 0.0) {
            (true, true) => "0".to_owned(),
            (false, true) => re,
            (true, false) => {
                let sign = if self.im < 0.0 { "-" } else { "" };
                if self.im.abs() == 1.0 {
                    format!("{sign}j")
                } else {
                    format!("{sign}{im_mag}j")
                }
            }
            (false, false) => {
                let sign = if self.im < 0.0 { "-" } else { "+" };
                if self.im.abs() == 1.0 {
                    format!("{re}{sign}j")
                } else {
                    format!("{re}{sign}{im_mag}j")
                }
            }
        }
    }
}

fn format_real(x: f64) -> String {
    // Shortest round-trip decimal; integers print without a point.
    format!("{x}")
}

impl Add for Complex {
    type Output = Complex;
    fn add(self, rhs: Complex) -> Complex {
        Complex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for Complex {
    type Output = Complex;
    fn sub(self, rhs: Complex) -> Complex {
        Complex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for Complex {
    type Output = Complex;
    fn mul(self, rhs: Complex) -> Complex {
        Complex::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Mul<f64> for Complex {
    type Output = Complex;
    fn mul(self, rhs: f64) -> Complex {
        Complex::new(self.re * rhs, self.im * rhs)
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

/// A 4x4 complex matrix, the target of the blade representation.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexMatrix4 {
    entries: [[Complex; 4]; 4],
}

impl ComplexMatrix4 {
    pub const fn zero() -> Self {
        ComplexMatrix4 {
            entries: [[Complex::ZERO; 4]; 4],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for k in 0..4 {
            m.entries[k][k] = Complex::ONE;
        }
        m
    }

    pub const fn from_rows(entries: [[Complex; 4]; 4]) -> Self {
        ComplexMatrix4 { entries }
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex {
        self.entries[row][col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex) {
        self.entries[row][col] = value;
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                out.entries[r][c] = self.entries[r][c] + rhs.entries[r][c];
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                out.entries[r][c] = self.entries[r][c] - rhs.entries[r][c];
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = Complex::ZERO;
                for k in 0..4 {
                    acc = acc + self.entries[r][k] * rhs.entries[k][c];
                }
                out.entries[r][c] = acc;
            }
        }
        out
    }

    pub fn scale(&self, factor: Complex) -> Self {
        let mut out = *self;
        for row in out.entries.iter_mut() {
            for e in row.iter_mut() {
                *e = *e * factor;
            }
        }
        out
    }

    pub fn scale_re(&self, factor: f64) -> Self {
        self.scale(Complex::real(factor))
    }

    pub fn conj_transpose(&self) -> Self {
        let mut out = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                out.entries[r][c] = self.entries[c][r].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Complex {
        let mut acc = Complex::ZERO;
        for k in 0..4 {
            acc = acc + self.entries[k][k];
        }
        acc
    }

    /// Largest entrywise magnitude difference from another matrix.
    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        let mut worst: f64 = 0.0;
        for r in 0..4 {
            for c in 0..4 {
                worst = worst.max((self.entries[r][c] - rhs.entries[r][c]).abs());
            }
        }
        worst
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for row in &self.entries {
            for e in row {
                worst = worst.max(e.abs());
            }
        }
        worst
    }

    /// Largest off-diagonal entry magnitude.
    pub fn max_off_diagonal(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for r in 0..4 {
            for c in 0..4 {
                if r != c {
                    worst = worst.max(self.entries[r][c].abs());
                }
            }
        }
        worst
    }

    /// Whether the matrix equals its conjugate transpose within `tol`.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.conj_transpose()) <= tol
    }

    /// Whether row 3 and column 3 (the fourth of each) are all below `tol`.
    pub fn has_zero_fourth_row_col(&self, tol: f64) -> bool {
        (0..4).all(|k| self.entries[3][k].abs() <= tol && self.entries[k][3].abs() <= tol)
    }

    /// Multi-line text rendering with `a+bj` entries.
    pub fn format_text(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.format_j()).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for row in &cells {
            out.push('[');
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    out.push_str("  ");
                }
                out.push_str(&format!("{cell:>width$}"));
            }
            out.push_str("]\n");
        }
        out
    }

    /// Nested JSON arrays of `[re, im]` pairs.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries
                .iter()
                .map(|row| {
                    serde_json::Value::Array(
                        row.iter()
                            .map(|e| serde_json::json!([e.re, e.im]))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}
