//! Frames of five vectors and their reciprocals.
//!
//! A frame need not be orthonormal; a general one is specified by a
//! coefficient table `n` with `g_i = n[i][k] sigma_k` (the refractive index
//! tensor). The reciprocal frame `g^i` satisfies `g^i . g_k = delta^i_k` and
//! is constructed by duality: wedge the other four vectors, multiply by the
//! pseudoscalar, and divide by the signed 5-volume of the frame.

use crate::blade::Blade;
use crate::error::Error;
use crate::multivector::Multivector;

/// Below this 5-volume magnitude a frame counts as degenerate.
pub const TOL_DEGENERATE: f64 = 1e-12;

/// Tolerance on the reciprocal-frame delta relations.
pub const TOL_RECIPROCAL: f64 = 1e-10;

/// An ordered set of five grade-1 vectors, optionally remembering the
/// coefficient table it was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameSet {
    vectors: [Multivector; 5],
    index_tensor: Option<[[f64; 5]; 5]>,
}

impl FrameSet {
    /// The orthonormal frame of the five generators.
    pub fn orthonormal() -> Self {
        let mut n = [[0.0; 5]; 5];
        for (i, row) in n.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self::from_index_tensor(n)
    }

    /// Frame with vectors `g_i = sum_k n[i][k] sigma_k`.
    pub fn from_index_tensor(n: [[f64; 5]; 5]) -> Self {
        let vectors = n.map(Multivector::vector);
        FrameSet {
            vectors,
            index_tensor: Some(n),
        }
    }

    /// Frame from five explicit vectors. Each must be pure grade 1.
    pub fn from_vectors(vectors: [Multivector; 5]) -> Result<Self, Error> {
        for v in &vectors {
            if v.max_off_grade_coeff(1) > 0.0 {
                return Err(Error::InvalidFrame("frame vectors must be pure grade 1"));
            }
        }
        Ok(FrameSet {
            vectors,
            index_tensor: None,
        })
    }

    /// The frame vectors in order.
    pub fn vectors(&self) -> &[Multivector; 5] {
        &self.vectors
    }

    /// The coefficient table, if the frame was built from one.
    pub fn index_tensor(&self) -> Option<&[[f64; 5]; 5]> {
        self.index_tensor.as_ref()
    }

    /// Signed coefficient of the pseudoscalar in the exterior product of all
    /// five frame vectors. Nonzero exactly when the frame is invertible.
    pub fn volume(&self) -> f64 {
        let mut wedge = Multivector::scalar(1.0);
        for v in &self.vectors {
            wedge = wedge.outer(v);
        }
        wedge.coeff(Blade::PSEUDOSCALAR)
    }

    /// The reciprocal frame: `g^i = (-1)^(i+1) / V * (wedge of the other
    /// four) * i`, with `V` the signed 5-volume. The result satisfies all 25
    /// relations `g^i . g_k = delta^i_k`.
    pub fn reciprocal(&self) -> Result<FrameSet, Error> {
        let volume = self.volume();
        if volume.abs() <= TOL_DEGENERATE {
            return Err(Error::DegenerateFrame(volume));
        }
        let i = Multivector::pseudoscalar();
        let mut out = [Multivector::zero(); 5];
        for (idx, slot) in out.iter_mut().enumerate() {
            let mut wedge = Multivector::scalar(1.0);
            for (k, v) in self.vectors.iter().enumerate() {
                if k != idx {
                    wedge = wedge.outer(v);
                }
            }
            let sign = if idx % 2 == 0 { -1.0 } else { 1.0 };
            *slot = wedge.geometric(&i) * (sign / volume);
        }
        Ok(FrameSet {
            vectors: out,
            index_tensor: None,
        })
    }

    /// Largest deviation of `reciprocal.g^i . g_k` from `delta^i_k` over all
    /// 25 pairs.
    pub fn reciprocal_defect(&self, reciprocal: &FrameSet) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, gi) in reciprocal.vectors.iter().enumerate() {
            for (k, gk) in self.vectors.iter().enumerate() {
                let dot = gi.inner(gk);
                let expected = if i == k { 1.0 } else { 0.0 };
                worst = worst.max((dot.scalar_part() - expected).abs());
                worst = worst.max(dot.max_nonscalar_coeff());
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthonormal_reciprocal_is_exact() {
        let frame = FrameSet::orthonormal();
        let rec = frame.reciprocal().unwrap();
        let mut expected = [Multivector::zero(); 5];
        expected[0] = -Multivector::basis(Blade::generator(0));
        for g in 1..5u8 {
            expected[g as usize] = Multivector::basis(Blade::generator(g));
        }
        assert_eq!(rec.vectors(), &expected);
        assert_eq!(frame.reciprocal_defect(&rec), 0.0);
    }

    #[test]
    fn scaled_frame_reciprocal() {
        let mut n = [[0.0; 5]; 5];
        for (i, row) in n.iter_mut().enumerate() {
            row[i] = 2.0;
        }
        let frame = FrameSet::from_index_tensor(n);
        let rec = frame.reciprocal().unwrap();
        assert_eq!(
            rec.vectors()[0],
            Multivector::basis(Blade::generator(0)) * -0.5
        );
        for g in 1..5u8 {
            assert_eq!(
                rec.vectors()[g as usize],
                Multivector::basis(Blade::generator(g)) * 0.5
            );
        }
        assert!(frame.reciprocal_defect(&rec) <= TOL_RECIPROCAL);
    }

    #[test]
    fn degenerate_frame_is_rejected() {
        let v = Multivector::vector([1.0, 1.0, 0.0, 0.0, 0.0]);
        let frame = FrameSet::from_vectors([v, v, v, v, v]).unwrap();
        assert!(matches!(frame.reciprocal(), Err(Error::DegenerateFrame(_))));
    }

    #[test]
    fn non_vector_entries_are_rejected() {
        let bad = Multivector::basis(Blade::from_generators(&[0, 1]).unwrap());
        let id = Multivector::vector([1.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(matches!(
            FrameSet::from_vectors([bad, id, id, id, id]),
            Err(Error::InvalidFrame(_))
        ));
    }

    #[test]
    fn volume_of_orthonormal_frame_is_one() {
        assert_eq!(FrameSet::orthonormal().volume(), 1.0);
    }
}
