//! The sixteen unitary elements over a commuting triad and their quantum
//! numbers.
//!
//! A triad is three mutually commuting basis elements squaring to +1, the
//! third proportional to the product of the first two. A general unitary
//! element `h = a0 + a1 h1 + a2 h2 + a3 h3` squares to one only for sixteen
//! coefficient tuples: eight with a single entry of +-1, six with two
//! entries -1/2 and two +1/2, and two with all entries +-1/2. Coefficients
//! are kept as exact rationals; only the two surd-valued generator columns
//! are floating point.

use num_rational::Rational64;

use crate::error::Error;
use crate::generators::CommutingPair;
use crate::multivector::Multivector;
use crate::rep::rep;

/// Exact rational type used for the coefficient columns.
pub type Rational = Rational64;

/// Tolerance on diagonality of the matrix images.
pub const TOL_DIAGONAL: f64 = 1e-10;

fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Three mutually commuting unitary elements with `h3 = -(h1 h2)`.
///
/// Fixing `h1 h2 = -h3` is what makes the closed form of the square
/// below hold verbatim for every triad; `orientation` records whether the
/// resulting `h3` is the positively or negatively oriented canonical blade
/// (for the canonical pair it is `+sigma1234`).
#[derive(Debug, Clone, PartialEq)]
pub struct Triad {
    h1: Multivector,
    h2: Multivector,
    h3: Multivector,
    orientation: f64,
}

impl Triad {
    pub fn h1(&self) -> &Multivector {
        &self.h1
    }

    pub fn h2(&self) -> &Multivector {
        &self.h2
    }

    /// The third element, `-(h1 h2)`, which may be a negatively oriented
    /// blade.
    pub fn h3(&self) -> &Multivector {
        &self.h3
    }

    /// The sign in `h1 h2 = product_sign * h3`: fixed to -1 by
    /// construction.
    pub fn product_sign(&self) -> f64 {
        -1.0
    }

    /// Sign of `h3` on its canonical basis blade.
    pub fn orientation(&self) -> f64 {
        self.orientation
    }

    /// The unitary element `a0 + a1 h1 + a2 h2 + a3 h3`.
    pub fn element(&self, a: &[Rational; 4]) -> Multivector {
        Multivector::scalar(to_f64(a[0]))
            + self.h1 * to_f64(a[1])
            + self.h2 * to_f64(a[2])
            + self.h3 * to_f64(a[3])
    }
}

/// Completes a commuting pair to a triad: `h3` is the canonical basis blade
/// proportional to `h1 h2`, taken with the sign that makes the closed-form
/// square hold verbatim, i.e. `h3 = -(h1 h2)`.
pub fn triad_from_pair(pair: &CommutingPair) -> Result<Triad, Error> {
    let product = pair.h1().geometric(pair.h2());
    let mut nonzero = product.nonzero();
    let (blade, coeff) = nonzero
        .next()
        .ok_or(Error::InvalidPair("product of the pair vanishes"))?;
    if nonzero.next().is_some() {
        return Err(Error::InvalidPair(
            "product of the pair is not a single basis blade",
        ));
    }
    if coeff.abs() != 1.0 {
        return Err(Error::InvalidPair(
            "product of the pair is not a unit blade",
        ));
    }
    let h3 = Multivector::basis(blade) * -coeff;
    // Mutual commutation of h3 with both members follows from the pair
    // commuting, but it is cheap to re-check.
    for h in [pair.h1(), pair.h2()] {
        if h.geometric(&h3) != h3.geometric(h) {
            return Err(Error::InvalidPair("triad members do not commute"));
        }
    }
    Ok(Triad {
        h1: *pair.h1(),
        h2: *pair.h2(),
        h3,
        orientation: -coeff,
    })
}

/// The triad (sigma023, sigma014, sigma1234) used for the quantum-number
/// table.
pub fn canonical_triad() -> Triad {
    triad_from_pair(&CommutingPair::canonical()).expect("canonical triad is valid")
}

/// Square of the unitary element with the given coefficients, computed by
/// blade arithmetic.
pub fn unitary_square(a: &[Rational; 4], triad: &Triad) -> Multivector {
    let h = triad.element(a);
    h * h
}

/// Closed-form coefficients of `h*h` on `{1, h1, h2, h3}` for a triad with
/// `h1 h2 = s h3`:
/// `[sum of squares, 2(a0 a1 + s a2 a3), 2(a0 a2 + s a1 a3), 2(a0 a3 + s a1 a2)]`.
/// With `s = -1` these are the constraint equations in their usual form.
pub fn unitary_square_closed_form(a: &[Rational; 4], product_sign: f64) -> [Rational; 4] {
    let s = ratio(product_sign as i64, 1);
    [
        a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3],
        ratio(2, 1) * (a[0] * a[1] + s * a[2] * a[3]),
        ratio(2, 1) * (a[0] * a[2] + s * a[1] * a[3]),
        ratio(2, 1) * (a[0] * a[3] + s * a[1] * a[2]),
    ]
}

/// The three solution families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionFamily {
    /// One coefficient is +-1, the rest are zero.
    Unit,
    /// Two coefficients are -1/2 and two are +1/2.
    HalfMixed,
    /// All four coefficients are +1/2 or all are -1/2.
    HalfUniform,
}

/// One of the sixteen solutions of `h*h = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitarySolution {
    pub a: [Rational; 4],
    pub family: SolutionFamily,
}

impl UnitarySolution {
    /// The unitary element this solution describes, over the given triad.
    pub fn element(&self, triad: &Triad) -> Multivector {
        triad.element(&self.a)
    }
}

/// The sixteen coefficient tuples in table order: the eight unit solutions
/// (+1 entries first, then -1), the six mixed-half rows, then the two
/// uniform-half rows.
fn closed_form_tuples() -> Vec<([Rational; 4], SolutionFamily)> {
    let mut out = Vec::with_capacity(16);
    let one = ratio(1, 1);
    let zero = ratio(0, 1);
    let half = ratio(1, 2);
    for sign in [one, -one] {
        for slot in 0..4 {
            let mut a = [zero; 4];
            a[slot] = sign;
            out.push((a, SolutionFamily::Unit));
        }
    }
    let mixed_signs: [[i64; 4]; 6] = [
        [-1, -1, 1, 1],
        [-1, 1, -1, 1],
        [-1, 1, 1, -1],
        [1, -1, -1, 1],
        [1, -1, 1, -1],
        [1, 1, -1, -1],
    ];
    for signs in mixed_signs {
        let a = signs.map(|s| half * ratio(s, 1));
        out.push((a, SolutionFamily::HalfMixed));
    }
    out.push(([half; 4], SolutionFamily::HalfUniform));
    out.push(([-half; 4], SolutionFamily::HalfUniform));
    out
}

/// Every candidate on the grid {0, +-1/2, +-1}^4 whose square is exactly 1.
fn brute_force_tuples(triad: &Triad) -> Vec<[Rational; 4]> {
    let grid = [
        ratio(0, 1),
        ratio(1, 2),
        ratio(-1, 2),
        ratio(1, 1),
        ratio(-1, 1),
    ];
    let one = Multivector::scalar(1.0);
    let mut found = Vec::new();
    for &a0 in &grid {
        for &a1 in &grid {
            for &a2 in &grid {
                for &a3 in &grid {
                    let a = [a0, a1, a2, a3];
                    if unitary_square(&a, triad) == one {
                        found.push(a);
                    }
                }
            }
        }
    }
    found
}

/// Enumerate all unitary elements over the triad.
///
/// The closed-form census (8 unit + 6 mixed-half + 2 uniform-half) is
/// verified solution by solution through blade arithmetic and then compared
/// as a set against the brute-force grid search; any disagreement is a
/// `CensusMismatch`.
///
pub fn enumerate_unitary(triad: &Triad) -> Result<Vec<UnitarySolution>, Error> {
    let closed = closed_form_tuples();
    let one = Multivector::scalar(1.0);
    for (a, _) in &closed {
        if unitary_square(a, triad) != one {
            return Err(Error::CensusMismatch(format!(
                "closed-form tuple {a:?} does not square to 1"
            )));
        }
    }
    let brute = brute_force_tuples(triad);
    if brute.len() != closed.len() {
        return Err(Error::CensusMismatch(format!(
            "brute force found {} solutions, closed form {}",
            brute.len(),
            closed.len()
        )));
    }
    for (a, _) in &closed {
        if !brute.contains(a) {
            return Err(Error::CensusMismatch(format!(
                "closed-form tuple {a:?} missing from brute-force set"
            )));
        }
    }
    Ok(closed
        .into_iter()
        .map(|(a, family)| UnitarySolution { a, family })
        .collect())
}

/// Derived generator coefficients, charge, isospin, and the provisional
/// particle name of a solution.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumRow {
    pub a: [Rational; 4],
    /// Coefficient on the third generator: `a2 - a3` (always rational).
    pub lambda3: Rational,
    /// Coefficient on the eighth generator: `(2 a1 + a2 + a3)/sqrt(3)`.
    pub lambda8: f64,
    /// Coefficient on the fifteenth generator:
    /// `sqrt(2/3) (a1 - a2 - a3)`.
    pub lambda15: f64,
    /// Electric charge `q = (2 a1 + a2 + 3 a3)/3`.
    pub q: Rational,
    /// Isospin `i3 = (a0 + a1 + a2 + a3)/2`.
    pub i3: Rational,
    /// Provisional particle name; four rows are deliberately unnamed.
    pub designation: Option<&'static str>,
}

/// Names in table order. Four rows stay blank on purpose.
const DESIGNATIONS: [Option<&str>; 16] = [
    None,
    Some("up"),
    Some("anti-down"),
    Some("positron"),
    None,
    Some("anti-up"),
    Some("down"),
    Some("electron"),
    Some("anti-strange"),
    Some("charm"),
    None,
    None,
    Some("anti-charm"),
    Some("strange"),
    Some("anti-mu"),
    Some("mu"),
];

fn designation_for(a: &[Rational; 4]) -> Option<&'static str> {
    let tuples = closed_form_tuples();
    tuples
        .iter()
        .position(|(t, _)| t == a)
        .and_then(|idx| DESIGNATIONS[idx])
}

/// Quantum numbers of a verified solution.
///
/// The charge formula divides by three so that the whole table is
/// self-consistent (the up row must carry charge 2/3).
pub fn quantum_numbers(solution: &UnitarySolution) -> QuantumRow {
    let a = solution.a;
    let two = ratio(2, 1);
    let three = ratio(3, 1);
    let lambda8_rational = two * a[1] + a[2] + a[3];
    let lambda15_rational = a[1] - a[2] - a[3];
    QuantumRow {
        a,
        lambda3: a[2] - a[3],
        lambda8: to_f64(lambda8_rational) / 3.0_f64.sqrt(),
        lambda15: (2.0_f64 / 3.0).sqrt() * to_f64(lambda15_rational),
        q: (two * a[1] + a[2] + three * a[3]) / three,
        i3: (a[0] + a[1] + a[2] + a[3]) / two,
        designation: designation_for(&a),
    }
}

/// Diagonal of the matrix image of a solution, which must be a diagonal
/// matrix of +-1 entries.
pub fn diagonal_signature(solution: &UnitarySolution, triad: &Triad) -> Result<[i8; 4], Error> {
    let m = rep(&solution.element(triad));
    let off = m.max_off_diagonal();
    if off > TOL_DIAGONAL {
        return Err(Error::NonDiagonalRep(off));
    }
    let mut out = [0i8; 4];
    for (k, slot) in out.iter_mut().enumerate() {
        let e = m.entry(k, k);
        if e.im.abs() > TOL_DIAGONAL || (e.re.abs() - 1.0).abs() > TOL_DIAGONAL {
            return Err(Error::NonDiagonalRep(off.max(e.im.abs())));
        }
        *slot = if e.re > 0.0 { 1 } else { -1 };
    }
    Ok(out)
}

/// Output formats of the quantum-number table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Csv,
    Json,
}

/// Pretty form of the recognized surd values, decimals otherwise.
pub fn pretty_surd(x: f64) -> String {
    const TOL: f64 = 1e-12;
    let sqrt3 = 3.0_f64.sqrt();
    let named: [(f64, &str); 6] = [
        (0.0, "0"),
        (1.0 / sqrt3, "1/sqrt(3)"),
        (2.0 / sqrt3, "2/sqrt(3)"),
        ((2.0_f64 / 3.0).sqrt(), "sqrt(2/3)"),
        (1.0 / 6.0_f64.sqrt(), "1/sqrt(6)"),
        ((3.0_f64 / 2.0).sqrt(), "sqrt(3/2)"),
    ];
    for (value, name) in named {
        if (x.abs() - value).abs() <= TOL {
            return if x < -TOL {
                format!("-{name}")
            } else {
                name.to_owned()
            };
        }
    }
    format!("{x}")
}

fn surd_decimal(x: f64) -> String {
    // Fixed 17 fractional digits: deterministic and full precision for the
    // unit-scale surd columns.
    format!("{x:.17}")
}

fn rational_json(r: Rational) -> serde_json::Value {
    serde_json::json!({ "num": *r.numer(), "den": *r.denom() })
}

/// The full sixteen-row table in canonical order.
pub fn table_rows() -> Vec<QuantumRow> {
    let triad = canonical_triad();
    enumerate_unitary(&triad)
        .expect("canonical census is consistent")
        .iter()
        .map(quantum_numbers)
        .collect()
}

/// Render the quantum-number table.
///
/// CSV and JSON carry rationals exactly (`p/q` strings and `{num, den}`
/// objects); the two surd columns are decimals. The text format uses the
/// pretty surd forms. Output is byte-stable across runs.
pub fn table_emit(format: TableFormat) -> String {
    let rows = table_rows();
    match format {
        TableFormat::Csv => {
            let mut out = String::from("a0,a1,a2,a3,lambda3,lambda8,lambda15,q,i3,designation\n");
            for r in rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{}\n",
                    r.a[0],
                    r.a[1],
                    r.a[2],
                    r.a[3],
                    r.lambda3,
                    surd_decimal(r.lambda8),
                    surd_decimal(r.lambda15),
                    r.q,
                    r.i3,
                    r.designation.unwrap_or("")
                ));
            }
            out
        }
        TableFormat::Json => {
            let rows_json: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "a0": rational_json(r.a[0]),
                        "a1": rational_json(r.a[1]),
                        "a2": rational_json(r.a[2]),
                        "a3": rational_json(r.a[3]),
                        "lambda3": rational_json(r.lambda3),
                        "lambda8": r.lambda8,
                        "lambda15": r.lambda15,
                        "q": rational_json(r.q),
                        "i3": rational_json(r.i3),
                        "designation": r.designation,
                    })
                })
                .collect();
            let doc = serde_json::json!({ "schema": 1, "rows": rows_json });
            let mut s = serde_json::to_string_pretty(&doc).expect("table serializes");
            s.push('\n');
            s
        }
        TableFormat::Text => {
            let header = [
                "a0",
                "a1",
                "a2",
                "a3",
                "lambda3",
                "lambda8",
                "lambda15",
                "q",
                "i3",
                "designation",
            ];
            let mut cells: Vec<[String; 10]> = Vec::with_capacity(16);
            for r in &rows {
                cells.push([
                    r.a[0].to_string(),
                    r.a[1].to_string(),
                    r.a[2].to_string(),
                    r.a[3].to_string(),
                    r.lambda3.to_string(),
                    pretty_surd(r.lambda8),
                    pretty_surd(r.lambda15),
                    r.q.to_string(),
                    r.i3.to_string(),
                    r.designation.unwrap_or("").to_owned(),
                ]);
            }
            let mut widths = [0usize; 10];
            for (k, h) in header.iter().enumerate() {
                widths[k] = h.len();
            }
            for row in &cells {
                for (k, cell) in row.iter().enumerate() {
                    widths[k] = widths[k].max(cell.len());
                }
            }
            let mut out = String::new();
            let mut line = Vec::new();
            for (k, h) in header.iter().enumerate() {
                line.push(format!("{h:>width$}", width = widths[k]));
            }
            out.push_str(&line.join("  "));
            out.push('\n');
            for row in &cells {
                let mut line = Vec::new();
                for (k, cell) in row.iter().enumerate() {
                    line.push(format!("{cell:>width$}", width = widths[k]));
                }
                out.push_str(line.join("  ").trim_end());
                out.push('\n');
            }
            out
        }
    }
}
