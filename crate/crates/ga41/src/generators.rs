//! Idempotent quartets and the three Gell-Mann style generator sets.
//!
//! Two commuting basis elements that square to +1 generate four mutually
//! annihilating idempotents; suitable combinations of those idempotents with
//! basis blades reproduce the eight Gell-Mann generators in the upper-left
//! 3x3 corner of the matrix representation, extend to the fifteen su(4)
//! generators, and a second commuting pair yields an independent su(3) set
//! whose matrices occupy the fourth row/column as well.
//!
//! Every generator is built twice, from its idempotent combination and from
//! its closed blade form, and the two are required to agree exactly.

use crate::blade::Blade;
use crate::error::Error;
use crate::multivector::Multivector;
use crate::rep::rep;

/// Tolerance for Lie-closure and trace-orthogonality checks.
pub const TOL_CLOSURE: f64 = 1e-10;

fn basis(gens: &[u8]) -> Multivector {
    Multivector::basis(Blade::from_generators(gens).expect("valid blade"))
}

/// Two commuting elements that square to +1, neither trivial nor equal up to
/// sign. All checks are exact blade arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub struct CommutingPair {
    h1: Multivector,
    h2: Multivector,
}

impl CommutingPair {
    pub fn new(h1: Multivector, h2: Multivector) -> Result<Self, Error> {
        let one = Multivector::scalar(1.0);
        if h1 * h1 != one {
            return Err(Error::InvalidPair("h1 does not square to +1"));
        }
        if h2 * h2 != one {
            return Err(Error::InvalidPair("h2 does not square to +1"));
        }
        if h1 * h2 != h2 * h1 {
            return Err(Error::InvalidPair("h1 and h2 do not commute"));
        }
        if h1 == one || h1 == -one {
            return Err(Error::InvalidPair("h1 is a trivial unit"));
        }
        if h2 == one || h2 == -one {
            return Err(Error::InvalidPair("h2 is a trivial unit"));
        }
        if h1 == h2 || h1 == -h2 {
            return Err(Error::InvalidPair("h1 equals h2 up to sign"));
        }
        Ok(CommutingPair { h1, h2 })
    }

    /// The pair (sigma023, sigma014) behind the first su(3) set.
    pub fn canonical() -> Self {
        Self::new(basis(&[0, 2, 3]), basis(&[0, 1, 4])).expect("canonical pair is valid")
    }

    /// The pair (sigma3, sigma04) behind the second su(3) set.
    pub fn alpha() -> Self {
        Self::new(basis(&[3]), basis(&[0, 4])).expect("alpha pair is valid")
    }

    pub fn h1(&self) -> &Multivector {
        &self.h1
    }

    pub fn h2(&self) -> &Multivector {
        &self.h2
    }
}

/// Four mutually annihilating idempotents that sum to unity.
#[derive(Debug, Clone, PartialEq)]
pub struct IdempotentQuartet {
    pair: CommutingPair,
    f: [Multivector; 4],
}

/// `f1 = (1+h1)(1+h2)/4` and the three sign variations, ordered so that
/// `f1, f2` share the `(1+h1)` factor and `f1, f4` share `(1+h2)`.
pub fn idempotents_from_pair(pair: &CommutingPair) -> Result<IdempotentQuartet, Error> {
    let one = Multivector::scalar(1.0);
    let plus1 = one + *pair.h1();
    let minus1 = one - *pair.h1();
    let plus2 = one + *pair.h2();
    let minus2 = one - *pair.h2();
    let f = [
        plus1 * plus2 * 0.25,
        plus1 * minus2 * 0.25,
        minus1 * minus2 * 0.25,
        minus1 * plus2 * 0.25,
    ];
    for (i, fi) in f.iter().enumerate() {
        if *fi * *fi != *fi {
            return Err(Error::InvalidPair("combination is not idempotent"));
        }
        for fj in f.iter().skip(i + 1) {
            if !(*fi * *fj).is_zero(0.0) {
                return Err(Error::InvalidPair("idempotents do not annihilate"));
            }
        }
    }
    if f[0] + f[1] + f[2] + f[3] != one {
        return Err(Error::InvalidPair("idempotents do not sum to unity"));
    }
    Ok(IdempotentQuartet {
        pair: pair.clone(),
        f,
    })
}

impl IdempotentQuartet {
    pub fn pair(&self) -> &CommutingPair {
        &self.pair
    }

    /// The i-th idempotent, 1-based.
    pub fn f(&self, index: usize) -> &Multivector {
        &self.f[index - 1]
    }

    pub fn all(&self) -> &[Multivector; 4] {
        &self.f
    }
}

/// Which generator family a set belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorGroup {
    /// lambda1..lambda8, the Gell-Mann block.
    Su3Lambda,
    /// lambda9..lambda15, the su(4) extension.
    Su4Extension,
    /// alpha1..alpha8, the independent second su(3).
    Su3Alpha,
}

impl GeneratorGroup {
    pub fn label_prefix(self) -> &'static str {
        match self {
            GeneratorGroup::Su3Lambda | GeneratorGroup::Su4Extension => "lambda",
            GeneratorGroup::Su3Alpha => "alpha",
        }
    }

    fn first_index(self) -> usize {
        match self {
            GeneratorGroup::Su3Lambda | GeneratorGroup::Su3Alpha => 1,
            GeneratorGroup::Su4Extension => 9,
        }
    }
}

/// An ordered generator set with 1-based labels matching its family.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSet {
    group: GeneratorGroup,
    elements: Vec<Multivector>,
}

impl GeneratorSet {
    pub fn group(&self) -> GeneratorGroup {
        self.group
    }

    pub fn elements(&self) -> &[Multivector] {
        &self.elements
    }

    /// Label of the element at a 0-based position, e.g. `lambda9`.
    pub fn label(&self, position: usize) -> String {
        format!(
            "{}{}",
            self.group.label_prefix(),
            self.group.first_index() + position
        )
    }
}

/// How a generator is assembled from the quartet.
enum Combination {
    /// `factor * (f_a + f_b + ...)` over the 1-based idempotent indices.
    FactorTimes(Box<Multivector>, Vec<usize>),
    /// `(sum of weight_i * f_i) * scale`.
    Weighted(Vec<(usize, f64)>, f64),
}

struct Recipe {
    combination: Combination,
    closed: Multivector,
}

impl Recipe {
    fn build(self, quartet: &IdempotentQuartet) -> Multivector {
        let value = match self.combination {
            Combination::FactorTimes(factor, parts) => {
                let mut sum = Multivector::zero();
                for p in parts {
                    sum += *quartet.f(p);
                }
                *factor * sum
            }
            Combination::Weighted(weights, scale) => {
                let mut sum = Multivector::zero();
                for (p, w) in weights {
                    sum += *quartet.f(p) * w;
                }
                sum * scale
            }
        };
        assert_eq!(
            value, self.closed,
            "idempotent combination must equal the closed blade form"
        );
        value
    }
}

fn check_quartet_pair(quartet: &IdempotentQuartet, expected: &CommutingPair) -> Result<(), Error> {
    if quartet.pair() != expected {
        return Err(Error::InvalidPair(
            "quartet was not built from the expected canonical pair",
        ));
    }
    Ok(())
}

fn build_set(
    group: GeneratorGroup,
    quartet: &IdempotentQuartet,
    recipes: Vec<Recipe>,
) -> GeneratorSet {
    let elements = recipes.into_iter().map(|r| r.build(quartet)).collect();
    GeneratorSet { group, elements }
}

/// The eight generators lambda1..lambda8 over the canonical quartet. Their
/// matrix images are the Gell-Mann matrices embedded in the upper-left 3x3
/// corner, with zero fourth row and column.
pub fn su3_lambda(quartet: &IdempotentQuartet) -> Result<GeneratorSet, Error> {
    check_quartet_pair(quartet, &CommutingPair::canonical())?;
    let inv_sqrt3 = 1.0 / 3.0_f64.sqrt();
    let recipes = vec![
        Recipe {
            combination: Combination::FactorTimes(Box::new(basis(&[0, 2])), vec![1, 2]),
            closed: (basis(&[3]) + basis(&[0, 2])) * 0.5,
        },
        Recipe {
            combination: Combination::FactorTimes(Box::new(basis(&[0, 3])), vec![1, 2]),
            closed: (-basis(&[2]) + basis(&[0, 3])) * 0.5,
        },
        Recipe {
            combination: Combination::Weighted(vec![(1, 1.0), (2, -1.0)], 1.0),
            closed: (basis(&[0, 1, 4]) - basis(&[1, 2, 3, 4])) * 0.5,
        },
        Recipe {
            combination: Combination::FactorTimes(Box::new(-basis(&[1])), vec![2, 3]),
            closed: (-basis(&[1]) - basis(&[0, 4])) * 0.5,
        },
        Recipe {
            combination: Combination::FactorTimes(Box::new(-basis(&[4])), vec![2, 3]),
            closed: (-basis(&[4]) + basis(&[0, 1])) * 0.5,
        },
        Recipe {
            combination: Combination::FactorTimes(Box::new(basis(&[0, 1, 2])), vec![1, 3]),
            closed: (basis(&[0, 1, 2]) + basis(&[0, 3, 4])) * 0.5,
        },
        Recipe {
            combination: Combination::FactorTimes(Box::new(-basis(&[0, 2, 4])), vec![1, 3]),
            closed: (basis(&[0, 1, 3]) - basis(&[0, 2, 4])) * 0.5,
        },
        Recipe {
            combination: Combination::Weighted(vec![(1, 1.0), (2, 1.0), (3, -2.0)], inv_sqrt3),
            closed: (basis(&[0, 2, 3]) * 2.0 + basis(&[0, 1, 4]) + basis(&[1, 2, 3, 4]))
                * (1.0 / (2.0 * 3.0_f64.sqrt())),
        },
    ];
    Ok(build_set(GeneratorGroup::Su3Lambda, quartet, recipes))
}

/// The seven additional generators lambda9..lambda15 completing su(4).
pub fn su4_extension(quartet: &IdempotentQuartet) -> Result<GeneratorSet, Error> {
    check_quartet_pair(quartet, &CommutingPair::canonical())?;
    let inv_sqrt6 = 1.0 / 6.0_f64.sqrt();
    let recipes = vec![
        Recipe {
            combination: Combination::FactorTimes(Box::new(basis(&[1])), vec![1, 4]),
            closed: (basis(&[1]) - basis(&[0, 4])) * 0.5,
        },
        Recipe {
            combination: Combination::FactorTimes(Box::new(basis(&[4])), vec![1, 4]),
            closed: (basis(&[4]) + basis(&[0, 1])) * 0.5,
        },
        Recipe {
            // The closed form carries +e034: expanding the combination,
            // -e012 * e1234 = +e034, which is also what this generator's
            // matrix form requires.
            combination: Combination::FactorTimes(Box::new(-basis(&[0, 1, 2])), vec![2, 4]),
            closed: (-basis(&[0, 1, 2]) + basis(&[0, 3, 4])) * 0.5,
        },
        Recipe {
            combination: Combination::FactorTimes(Box::new(basis(&[0, 2, 4])), vec![2, 4]),
            closed: (basis(&[0, 1, 3]) + basis(&[0, 2, 4])) * 0.5,
        },
        Recipe {
            combination: Combination::FactorTimes(Box::new(basis(&[3])), vec![3, 4]),
            closed: (basis(&[3]) - basis(&[0, 2])) * 0.5,
        },
        Recipe {
            combination: Combination::FactorTimes(Box::new(basis(&[2])), vec![3, 4]),
            closed: (basis(&[2]) + basis(&[0, 3])) * 0.5,
        },
        Recipe {
            combination: Combination::Weighted(
                vec![(1, 1.0), (2, 1.0), (3, 1.0), (4, -3.0)],
                inv_sqrt6,
            ),
            closed: (basis(&[0, 2, 3]) - basis(&[0, 1, 4]) - basis(&[1, 2, 3, 4])) * inv_sqrt6,
        },
    ];
    Ok(build_set(GeneratorGroup::Su4Extension, quartet, recipes))
}

/// The second su(3) set alpha1..alpha8, built from the pair
/// (sigma3, sigma04). Its matrices have nonzero fourth rows/columns, which
/// separates it from the lambda set.
pub fn su3_alpha() -> GeneratorSet {
    let quartet = idempotents_from_pair(&CommutingPair::alpha()).expect("alpha quartet is valid");
    let inv_sqrt3 = 1.0 / 3.0_f64.sqrt();
    let recipes = vec![
        Recipe {
            combination: Combination::FactorTimes(Box::new(basis(&[0, 2])), vec![1, 2]),
            closed: (basis(&[0, 2]) + basis(&[0, 2, 3])) * 0.5,
        },
        Recipe {
            combination: Combination::FactorTimes(Box::new(basis(&[0, 1])), vec![1, 2]),
            closed: (basis(&[0, 1]) + basis(&[0, 1, 3])) * 0.5,
        },
        Recipe {
            combination: Combination::Weighted(vec![(1, 1.0), (2, -1.0)], 1.0),
            closed: (basis(&[0, 4]) - basis(&[0, 3, 4])) * 0.5,
        },
        Recipe {
            combination: Combination::FactorTimes(Box::new(basis(&[2])), vec![2, 3]),
            closed: (basis(&[2]) + basis(&[0, 2, 4])) * 0.5,
        },
        Recipe {
            combination: Combination::FactorTimes(Box::new(-basis(&[1])), vec![2, 3]),
            closed: (-basis(&[1]) - basis(&[0, 1, 4])) * 0.5,
        },
        Recipe {
            combination: Combination::FactorTimes(Box::new(basis(&[4])), vec![1, 3]),
            closed: (basis(&[4]) - basis(&[0, 3])) * 0.5,
        },
        Recipe {
            combination: Combination::FactorTimes(Box::new(basis(&[0, 1, 2])), vec![1, 3]),
            closed: (basis(&[0, 1, 2]) + basis(&[1, 2, 3, 4])) * 0.5,
        },
        Recipe {
            combination: Combination::Weighted(vec![(1, 1.0), (2, 1.0), (3, -2.0)], inv_sqrt3),
            closed: (basis(&[3]) * 2.0 + basis(&[0, 4]) + basis(&[0, 3, 4]))
                * (1.0 / (2.0 * 3.0_f64.sqrt())),
        },
    ];
    build_set(GeneratorGroup::Su3Alpha, &quartet, recipes)
}

/// All fifteen su(4) generators: the lambda set followed by its extension.
pub fn su4_full() -> Vec<Multivector> {
    let quartet = idempotents_from_pair(&CommutingPair::canonical()).expect("canonical quartet");
    let mut all = su3_lambda(&quartet).expect("lambda set").elements;
    all.extend(su4_extension(&quartet).expect("extension set").elements);
    all
}

/// The commutator `AB - BA`.
pub fn commutator(a: &Multivector, b: &Multivector) -> Multivector {
    a.geometric(b) - b.geometric(a)
}

/// Structure constants of a generator list: `[g_a, g_b] = 2 i sum_c f_abc
/// g_c` with `i` the pseudoscalar. Indices are 1-based to match labels.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    n: usize,
    values: Vec<f64>,
    closure_residual: f64,
}

impl StructureConstants {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `f_abc` for 1-based indices.
    pub fn get(&self, a: usize, b: usize, c: usize) -> f64 {
        self.values[((a - 1) * self.n + (b - 1)) * self.n + (c - 1)]
    }

    /// Worst reconstruction error over all commutators.
    pub fn closure_residual(&self) -> f64 {
        self.closure_residual
    }

    /// Largest violation of `f_abc = -f_bac`.
    pub fn max_antisymmetry_violation(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for a in 1..=self.n {
            for b in 1..=self.n {
                for c in 1..=self.n {
                    worst = worst.max((self.get(a, b, c) + self.get(b, a, c)).abs());
                }
            }
        }
        worst
    }

    /// Entries with `a < b` and magnitude above `tol`.
    pub fn nonzero_entries(&self, tol: f64) -> Vec<(usize, usize, usize, f64)> {
        let mut out = Vec::new();
        for a in 1..=self.n {
            for b in (a + 1)..=self.n {
                for c in 1..=self.n {
                    let v = self.get(a, b, c);
                    if v.abs() > tol {
                        out.push((a, b, c, v));
                    }
                }
            }
        }
        out
    }
}

/// Compute structure constants by projecting each commutator onto the
/// generator list. With the generators normalized so that
/// `trace(rep(g_a) rep(g_b)) = 2 delta_ab`, the scalar-and-pseudoscalar part
/// of `[g_a, g_b] g_c` isolates `f_abc` as the pseudoscalar coefficient.
/// Any residual after reconstructing the commutators means the set does not
/// close and is reported as an error.
pub fn structure_constants(elements: &[Multivector]) -> Result<StructureConstants, Error> {
    let n = elements.len();
    let i = Multivector::pseudoscalar();
    let mut values = vec![0.0; n * n * n];
    let mut worst: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            let comm = commutator(&elements[a], &elements[b]);
            let mut reconstruction = Multivector::zero();
            for c in 0..n {
                let product = comm * elements[c];
                let f = product.coeff(Blade::PSEUDOSCALAR);
                values[(a * n + b) * n + c] = f;
                reconstruction += i * elements[c] * (2.0 * f);
            }
            worst = worst.max(comm.max_abs_diff(&reconstruction));
        }
    }
    if worst > TOL_CLOSURE {
        return Err(Error::ClosureViolation(worst));
    }
    Ok(StructureConstants {
        n,
        values,
        closure_residual: worst,
    })
}

/// Trace orthogonality defect: worst deviation of
/// `trace(rep(g_a) rep(g_b))` from `2 delta_ab`.
pub fn trace_orthogonality_defect(elements: &[Multivector]) -> f64 {
    let mats: Vec<_> = elements.iter().map(rep).collect();
    let mut worst: f64 = 0.0;
    for (a, ma) in mats.iter().enumerate() {
        for (b, mb) in mats.iter().enumerate() {
            let tr = ma.mul(mb).trace();
            let expected = if a == b { 2.0 } else { 0.0 };
            worst = worst.max((tr.re - expected).abs()).max(tr.im.abs());
        }
    }
    worst
}
