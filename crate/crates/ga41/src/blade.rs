//! Basis blades of the 32-dimensional algebra and their exact products.
//!
//! A blade is a product of distinct orthonormal generators, stored as a
//! 5-bit set (bit `g` set means generator `g` is present, `g = 0..=4`).
//! Generator 0 squares to -1 and generators 1..=4 square to +1; every sign
//! in a blade product comes from counting the transpositions needed to sort
//! the concatenated generator lists plus the metric signs of the contracted
//! pairs, so each product is exact.

/// The metric of the algebra: diagonal (-1, +1, +1, +1, +1), fixed.
pub struct Signature;

impl Signature {
    /// Metric diagonal indexed by generator.
    pub const DIAGONAL: [f64; 5] = [-1.0, 1.0, 1.0, 1.0, 1.0];

    /// Square of a single generator.
    pub const fn square(generator: u8) -> f64 {
        Self::DIAGONAL[generator as usize]
    }
}

/// One of the 32 basis blades, encoded as a set of generators in canonical
/// ascending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Blade(u8);

impl Blade {
    /// Number of distinct blades.
    pub const COUNT: usize = 32;

    /// The empty product: the scalar blade.
    pub const SCALAR: Blade = Blade(0);

    /// The full product of all five generators: the 5-volume pseudoscalar.
    /// Central in the algebra and squares to -1.
    pub const PSEUDOSCALAR: Blade = Blade(0b11111);

    /// The blade consisting of the single generator `g`.
    ///
    /// Panics if `g > 4`.
    pub fn generator(g: u8) -> Blade {
        assert!(g < 5, "generator index {g} out of range 0..=4");
        Blade(1 << g)
    }

    /// Blade from a raw 5-bit set.
    ///
    /// Panics if bits above the fifth are set.
    pub fn from_mask(mask: u8) -> Blade {
        assert!(mask < 32, "blade mask {mask:#x} out of range");
        Blade(mask)
    }

    /// Blade from strictly ascending generator indices in `0..=4`.
    /// Returns `None` for repeated, descending, or out-of-range generators.
    pub fn from_generators(generators: &[u8]) -> Option<Blade> {
        let mut mask = 0u8;
        let mut last: Option<u8> = None;
        for &g in generators {
            if g > 4 || last.is_some_and(|p| g <= p) {
                return None;
            }
            mask |= 1 << g;
            last = Some(g);
        }
        Some(Blade(mask))
    }

    /// Blade with index `i` in the canonical `0..32` enumeration (the mask).
    pub fn from_index(i: usize) -> Blade {
        assert!(i < Self::COUNT);
        Blade(i as u8)
    }

    /// The raw bit set.
    pub const fn mask(self) -> u8 {
        self.0
    }

    /// Canonical index in `0..32`, equal to the mask.
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    /// Number of generators in the blade (0 for the scalar, 5 for the
    /// pseudoscalar).
    pub const fn grade(self) -> u32 {
        self.0.count_ones()
    }

    /// Whether generator `g` appears in the blade.
    pub const fn contains(self, g: u8) -> bool {
        self.0 & (1 << g) != 0
    }

    /// The generators of the blade in ascending order.
    pub fn generators(self) -> impl Iterator<Item = u8> {
        (0u8..5).filter(move |&g| self.contains(g))
    }

    /// All 32 blades in canonical index order.
    pub fn all() -> impl Iterator<Item = Blade> {
        (0..Self::COUNT).map(Blade::from_index)
    }

    /// Geometric product of two basis blades.
    ///
    /// Returns the sign (+1 or -1) and the surviving blade: the symmetric
    /// difference of the two generator sets. The sign counts, for every
    /// generator of `rhs`, the generators of `self` it has to move past to
    /// reach its sorted position, then multiplies in the metric square of
    /// each generator the two blades share.
    pub fn geometric(self, rhs: Blade) -> (f64, Blade) {
        let mut swaps = 0u32;
        for g in rhs.generators() {
            swaps += (self.0 >> (g + 1)).count_ones();
        }
        let mut sign = if swaps.is_multiple_of(2) { 1.0 } else { -1.0 };
        let common = self.0 & rhs.0;
        for g in 0..5u8 {
            if common & (1 << g) != 0 {
                sign *= Signature::square(g);
            }
        }
        (sign, Blade(self.0 ^ rhs.0))
    }

    /// Canonical name: `1` for the scalar, otherwise `e` followed by the
    /// ascending generator digits (`e0`, `e023`, `e01234`).
    pub fn symbol(self) -> String {
        if self == Blade::SCALAR {
            return "1".to_owned();
        }
        let mut s = String::with_capacity(6);
        s.push('e');
        for g in self.generators() {
            s.push(char::from(b'0' + g));
        }
        s
    }
}

impl std::fmt::Display for Blade {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.symbol())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blade(gens: &[u8]) -> Blade {
        Blade::from_generators(gens).unwrap()
    }

    #[test]
    fn time_generator_squares_to_minus_one() {
        let e0 = Blade::generator(0);
        assert_eq!(e0.geometric(e0), (-1.0, Blade::SCALAR));
    }

    #[test]
    fn space_generators_square_to_plus_one() {
        for g in 1..5 {
            let e = Blade::generator(g);
            assert_eq!(e.geometric(e), (1.0, Blade::SCALAR));
        }
    }

    #[test]
    fn anticommutation_forces_sign() {
        // e1 * e0 needs one transposition to reach canonical order.
        let (sign, result) = Blade::generator(1).geometric(Blade::generator(0));
        assert_eq!((sign, result), (-1.0, blade(&[0, 1])));
        // and the canonical order carries no sign.
        let (sign, result) = Blade::generator(0).geometric(Blade::generator(1));
        assert_eq!((sign, result), (1.0, blade(&[0, 1])));
    }

    #[test]
    fn trivector_product_hand_count() {
        // e023 * e014: four transpositions (even), one contraction on the
        // negative-square generator 0, survivors {1,2,3,4}.
        let (sign, result) = blade(&[0, 2, 3]).geometric(blade(&[0, 1, 4]));
        assert_eq!((sign, result), (-1.0, blade(&[1, 2, 3, 4])));
    }

    #[test]
    fn pseudoscalar_squares_to_minus_one() {
        let i = Blade::PSEUDOSCALAR;
        assert_eq!(i.geometric(i), (-1.0, Blade::SCALAR));
    }

    #[test]
    fn pseudoscalar_commutes_with_every_blade() {
        let i = Blade::PSEUDOSCALAR;
        for b in Blade::all() {
            assert_eq!(i.geometric(b), b.geometric(i), "blade {b}");
        }
    }

    #[test]
    fn blade_literal_validation() {
        assert_eq!(Blade::from_generators(&[]), Some(Blade::SCALAR));
        assert_eq!(
            Blade::from_generators(&[0, 2, 3]),
            Some(Blade::from_mask(0b01101))
        );
        assert_eq!(Blade::from_generators(&[1, 0]), None, "descending");
        assert_eq!(Blade::from_generators(&[0, 0]), None, "repeated");
        assert_eq!(Blade::from_generators(&[5]), None, "out of range");
    }

    #[test]
    fn symbols() {
        assert_eq!(Blade::SCALAR.symbol(), "1");
        assert_eq!(Blade::generator(4).symbol(), "e4");
        assert_eq!(blade(&[0, 1, 4]).symbol(), "e014");
        assert_eq!(Blade::PSEUDOSCALAR.symbol(), "e01234");
    }

    #[test]
    fn thirty_two_distinct_blades() {
        let mut seen = std::collections::HashSet::new();
        for b in Blade::all() {
            seen.insert(b.mask());
        }
        assert_eq!(seen.len(), 32);
    }
}
