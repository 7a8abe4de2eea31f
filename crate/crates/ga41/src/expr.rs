//! A small multivector expression language and the canonical text form.
//!
//! Literals are decimal numbers, integer rationals `p/q`, blade names (`e`
//! followed by strictly increasing digits 0-4), `1`, and `i` for the
//! pseudoscalar. Operators, tightest first: unary `-` and postfix `~`
//! (reversion); `^` (outer) and `|` (inner), left associative at equal
//! precedence; `*` (geometric); `+` and `-`. Parentheses group, `exp(...)`
//! is the scalar-square exponential, and `<expr>k` selects grade `k`.
//! There is no division operator; `p/q` is a single numeric token.

use crate::blade::Blade;
use crate::error::Error;
use crate::multivector::Multivector;

/// Parse failure with a byte offset into the source.
#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParseErrorKind {
    /// Unexpected input; `expected` lists the token classes that would have
    /// been accepted.
    Syntax {
        found: String,
        expected: Vec<&'static str>,
    },
    /// A blade literal with repeated, descending, or out-of-range digits.
    InvalidBlade { literal: String },
    /// A numeric literal that does not denote a finite value.
    InvalidNumber { literal: String },
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax { found, expected } => write!(
                f,
                "syntax error at byte {}: found {}, expected one of {}",
                self.offset,
                found,
                expected.join(", ")
            ),
            ParseErrorKind::InvalidBlade { literal } => write!(
                f,
                "invalid blade literal `{}` at byte {}: digits must be strictly increasing and in 0-4",
                literal, self.offset
            ),
            ParseErrorKind::InvalidNumber { literal } => write!(
                f,
                "invalid number `{}` at byte {}",
                literal, self.offset
            ),
        }
    }
}

impl std::error::Error for ParseError {}

/// Expression tree.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(f64),
    Blade(Blade),
    Neg(Box<Expr>),
    Reverse(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Geometric(Box<Expr>, Box<Expr>),
    Outer(Box<Expr>, Box<Expr>),
    Inner(Box<Expr>, Box<Expr>),
    Exp(Box<Expr>),
    GradeSelect(Box<Expr>, usize),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(f64),
    Blade(Blade),
    Exp,
    Plus,
    Minus,
    Star,
    Caret,
    Pipe,
    Tilde,
    LParen,
    RParen,
    Lt,
    Gt,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Number(n) => format!("number `{n}`"),
            Token::Blade(b) => format!("blade `{b}`"),
            Token::Exp => "`exp`".into(),
            Token::Plus => "`+`".into(),
            Token::Minus => "`-`".into(),
            Token::Star => "`*`".into(),
            Token::Caret => "`^`".into(),
            Token::Pipe => "`|`".into(),
            Token::Tilde => "`~`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::Lt => "`<`".into(),
            Token::Gt => "`>`".into(),
        }
    }
}

fn syntax_error(offset: usize, found: String, expected: Vec<&'static str>) -> ParseError {
    ParseError {
        offset,
        kind: ParseErrorKind::Syntax { found, expected },
    }
}

fn lex(src: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0usize;
    while pos < bytes.len() {
        let c = bytes[pos];
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                pos += 1;
            }
            b'+' => {
                tokens.push((Token::Plus, pos));
                pos += 1;
            }
            b'-' => {
                tokens.push((Token::Minus, pos));
                pos += 1;
            }
            b'*' => {
                tokens.push((Token::Star, pos));
                pos += 1;
            }
            b'^' => {
                tokens.push((Token::Caret, pos));
                pos += 1;
            }
            b'|' => {
                tokens.push((Token::Pipe, pos));
                pos += 1;
            }
            b'~' => {
                tokens.push((Token::Tilde, pos));
                pos += 1;
            }
            b'(' => {
                tokens.push((Token::LParen, pos));
                pos += 1;
            }
            b')' => {
                tokens.push((Token::RParen, pos));
                pos += 1;
            }
            b'<' => {
                tokens.push((Token::Lt, pos));
                pos += 1;
            }
            b'>' => {
                tokens.push((Token::Gt, pos));
                pos += 1;
            }
            b'0'..=b'9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let mut is_decimal = false;
                if pos < bytes.len() && bytes[pos] == b'.' {
                    if pos + 1 >= bytes.len() || !bytes[pos + 1].is_ascii_digit() {
                        return Err(syntax_error(
                            pos,
                            "`.` without fractional digits".into(),
                            vec!["digit"],
                        ));
                    }
                    is_decimal = true;
                    pos += 1;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                }
                // Integer '/' integer is a single rational literal.
                if !is_decimal
                    && pos + 1 < bytes.len()
                    && bytes[pos] == b'/'
                    && bytes[pos + 1].is_ascii_digit()
                {
                    let numerator: f64 = src[start..pos]
                        .parse()
                        .ok()
                        .filter(|v: &f64| v.is_finite())
                        .ok_or(ParseError {
                            offset: start,
                            kind: ParseErrorKind::InvalidNumber {
                                literal: src[start..pos].to_owned(),
                            },
                        })?;
                    pos += 1;
                    let denom_start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let denominator: f64 = src[denom_start..pos]
                        .parse()
                        .ok()
                        .filter(|v: &f64| v.is_finite())
                        .ok_or(ParseError {
                            offset: denom_start,
                            kind: ParseErrorKind::InvalidNumber {
                                literal: src[denom_start..pos].to_owned(),
                            },
                        })?;
                    if denominator == 0.0 {
                        return Err(ParseError {
                            offset: start,
                            kind: ParseErrorKind::InvalidNumber {
                                literal: src[start..pos].to_owned(),
                            },
                        });
                    }
                    tokens.push((Token::Number(numerator / denominator), start));
                } else {
                    let literal = &src[start..pos];
                    let value: f64 =
                        literal
                            .parse()
                            .ok()
                            .filter(|v: &f64| v.is_finite())
                            .ok_or(ParseError {
                                offset: start,
                                kind: ParseErrorKind::InvalidNumber {
                                    literal: literal.to_owned(),
                                },
                            })?;
                    tokens.push((Token::Number(value), start));
                }
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_alphanumeric() {
                    pos += 1;
                }
                let word = &src[start..pos];
                match word {
                    "exp" => tokens.push((Token::Exp, start)),
                    "i" => tokens.push((Token::Blade(Blade::PSEUDOSCALAR), start)),
                    _ if word.starts_with('e')
                        && word.len() > 1
                        && word[1..].bytes().all(|b| b.is_ascii_digit()) =>
                    {
                        let digits: Vec<u8> = word[1..].bytes().map(|b| b - b'0').collect();
                        match Blade::from_generators(&digits) {
                            Some(b) if b != Blade::SCALAR => {
                                tokens.push((Token::Blade(b), start));
                            }
                            _ => {
                                return Err(ParseError {
                                    offset: start,
                                    kind: ParseErrorKind::InvalidBlade {
                                        literal: word.to_owned(),
                                    },
                                });
                            }
                        }
                    }
                    _ => {
                        return Err(syntax_error(
                            start,
                            format!("identifier `{word}`"),
                            vec!["`exp`", "`i`", "blade literal"],
                        ));
                    }
                }
            }
            _ => {
                let ch = src[pos..].chars().next().unwrap_or('?');
                return Err(syntax_error(
                    pos,
                    format!("character `{ch}`"),
                    vec![
                        "number", "blade", "`i`", "`exp`", "`+`", "`-`", "`*`", "`^`", "`|`",
                        "`~`", "`(`", "`)`", "`<`", "`>`",
                    ],
                ));
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: &'a [(Token, usize)],
    cursor: usize,
    end: usize,
    depth: usize,
}

const PRIMARY_EXPECTED: [&str; 6] = ["number", "blade", "`exp`", "`(`", "`<`", "`-`"];

/// Nesting bound so that hostile inputs fail with a structured error
/// instead of exhausting the stack.
const MAX_DEPTH: usize = 128;

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map(|&(_, o)| o)
            .unwrap_or(self.end)
    }

    fn found(&self) -> String {
        self.peek()
            .map(Token::describe)
            .unwrap_or_else(|| "end of input".into())
    }

    fn advance(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.cursor).map(|(t, _)| t);
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn expect(&mut self, token: Token, name: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(&token) {
            self.cursor += 1;
            Ok(())
        } else {
            Err(syntax_error(self.offset(), self.found(), vec![name]))
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(syntax_error(
                self.offset(),
                "nesting deeper than the parser limit".into(),
                vec!["shallower expression"],
            ));
        }
        Ok(())
    }

    fn leave(&mut self) {
        self.depth -= 1;
    }

    fn parse_sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.parse_product()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.cursor += 1;
                    let rhs = self.parse_product()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(Token::Minus) => {
                    self.cursor += 1;
                    let rhs = self.parse_product()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.parse_wedge()?;
        while self.peek() == Some(&Token::Star) {
            self.cursor += 1;
            let rhs = self.parse_wedge()?;
            lhs = Expr::Geometric(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn parse_wedge(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.parse_unary()?;
        loop {
            match self.peek() {
                Some(Token::Caret) => {
                    self.cursor += 1;
                    let rhs = self.parse_unary()?;
                    lhs = Expr::Outer(Box::new(lhs), Box::new(rhs));
                }
                Some(Token::Pipe) => {
                    self.cursor += 1;
                    let rhs = self.parse_unary()?;
                    lhs = Expr::Inner(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Token::Minus) {
            self.cursor += 1;
            self.enter()?;
            let inner = self.parse_unary();
            self.leave();
            return Ok(Expr::Neg(Box::new(inner?)));
        }
        self.parse_postfix()
    }

    fn parse_postfix(&mut self) -> Result<Expr, ParseError> {
        let mut expr = self.parse_primary()?;
        while self.peek() == Some(&Token::Tilde) {
            self.cursor += 1;
            expr = Expr::Reverse(Box::new(expr));
        }
        Ok(expr)
    }

    fn parse_primary(&mut self) -> Result<Expr, ParseError> {
        let offset = self.offset();
        let start = self.cursor;
        match self.advance() {
            Some(Token::Number(n)) => Ok(Expr::Number(*n)),
            Some(Token::Blade(b)) => Ok(Expr::Blade(*b)),
            Some(Token::Exp) => {
                self.expect(Token::LParen, "`(`")?;
                self.enter()?;
                let inner = self.parse_sum();
                self.leave();
                let inner = inner?;
                self.expect(Token::RParen, "`)`")?;
                Ok(Expr::Exp(Box::new(inner)))
            }
            Some(Token::LParen) => {
                self.enter()?;
                let inner = self.parse_sum();
                self.leave();
                let inner = inner?;
                self.expect(Token::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Token::Lt) => {
                self.enter()?;
                let inner = self.parse_sum();
                self.leave();
                let inner = inner?;
                self.expect(Token::Gt, "`>`")?;
                let grade_offset = self.offset();
                let grade_start = self.cursor;
                match self.advance() {
                    Some(Token::Number(n)) => {
                        let n = *n;
                        if n.fract() == 0.0 && (0.0..=5.0).contains(&n) {
                            Ok(Expr::GradeSelect(Box::new(inner), n as usize))
                        } else {
                            Err(syntax_error(
                                grade_offset,
                                format!("number `{n}`"),
                                vec!["grade digit 0-5"],
                            ))
                        }
                    }
                    _ => {
                        self.cursor = grade_start;
                        Err(syntax_error(
                            grade_offset,
                            self.found(),
                            vec!["grade digit 0-5"],
                        ))
                    }
                }
            }
            _ => {
                self.cursor = start;
                Err(syntax_error(
                    offset,
                    self.found(),
                    PRIMARY_EXPECTED.to_vec(),
                ))
            }
        }
    }
}

/// Parse a source string into an expression tree.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let tokens = lex(src)?;
    let mut parser = Parser {
        tokens: &tokens,
        cursor: 0,
        end: src.len(),
        depth: 0,
    };
    let expr = parser.parse_sum()?;
    if parser.peek().is_some() {
        return Err(syntax_error(
            parser.offset(),
            parser.found(),
            vec!["operator", "end of input"],
        ));
    }
    Ok(expr)
}

/// Evaluate an expression tree to a multivector. The only failure path is
/// `exp` of something without a scalar square (grade selections are range
/// checked at parse time).
pub fn eval(expr: &Expr) -> Result<Multivector, Error> {
    match expr {
        Expr::Number(n) => Ok(Multivector::scalar(*n)),
        Expr::Blade(b) => Ok(Multivector::basis(*b)),
        Expr::Neg(e) => Ok(-eval(e)?),
        Expr::Reverse(e) => Ok(eval(e)?.reverse()),
        Expr::Add(a, b) => Ok(eval(a)? + eval(b)?),
        Expr::Sub(a, b) => Ok(eval(a)? - eval(b)?),
        Expr::Geometric(a, b) => Ok(eval(a)?.geometric(&eval(b)?)),
        Expr::Outer(a, b) => Ok(eval(a)?.outer(&eval(b)?)),
        Expr::Inner(a, b) => Ok(eval(a)?.inner(&eval(b)?)),
        Expr::Exp(e) => eval(e)?.exp_scalar_square(),
        Expr::GradeSelect(e, k) => eval(e)?.grade_project(*k),
    }
}

/// Parse and evaluate in one step.
///
/// ```
/// use ga41::expr::eval_str;
///
/// let f1 = eval_str("0.25*(1+e023)*(1+e014)").unwrap().unwrap();
/// assert_eq!(f1 * f1, f1); // an idempotent
/// assert_eq!(
///     ga41::expr::format_multivector(&f1),
///     "0.25 + 0.25*e014 + 0.25*e023 - 0.25*e1234",
/// );
/// ```
pub fn eval_str(src: &str) -> Result<Result<Multivector, Error>, ParseError> {
    Ok(eval(&parse(src)?))
}

/// Blade order for canonical rendering: ascending grade, then ascending
/// digit sequence within a grade (e014 before e023).
fn render_order() -> Vec<Blade> {
    let mut blades: Vec<Blade> = Blade::all().collect();
    blades.sort_by_key(|b| {
        let digits: Vec<u8> = b.generators().collect();
        (b.grade(), digits)
    });
    blades
}

/// Canonical text form: grade-ascending, digit-ascending terms, integer
/// coefficients without a decimal point, zero terms omitted, the zero
/// multivector rendered `0`. Re-parsing the output recovers the value.
pub fn format_multivector(m: &Multivector) -> String {
    let mut out = String::new();
    for b in render_order() {
        let c = m.coeff(b);
        if c == 0.0 {
            continue;
        }
        let negative = c < 0.0;
        let magnitude = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if b == Blade::SCALAR {
            out.push_str(&format!("{magnitude}"));
        } else if magnitude == 1.0 {
            out.push_str(&b.symbol());
        } else {
            out.push_str(&format!("{magnitude}*{}", b.symbol()));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multivector::TOL_IDENTITY;

    fn blade(gens: &[u8]) -> Multivector {
        Multivector::basis(Blade::from_generators(gens).unwrap())
    }

    #[test]
    fn parses_blade_products() {
        let value = eval_str("e0*e0").unwrap().unwrap();
        assert_eq!(value, Multivector::scalar(-1.0));
        let value = eval_str("e1*e0").unwrap().unwrap();
        assert_eq!(value, -blade(&[0, 1]));
    }

    #[test]
    fn idempotent_expression() {
        let f1 = eval_str("0.25*(1+e023)*(1+e014)").unwrap().unwrap();
        let expected = (Multivector::scalar(1.0) + blade(&[0, 2, 3]) + blade(&[0, 1, 4])
            - blade(&[1, 2, 3, 4]))
            * 0.25;
        assert_eq!(f1, expected);
        assert_eq!(
            format_multivector(&f1),
            "0.25 + 0.25*e014 + 0.25*e023 - 0.25*e1234"
        );
    }

    #[test]
    fn division_is_not_an_operator() {
        let err = parse("(1 + e023)*(1 + e014)/4").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Syntax { .. }));
        assert_eq!(err.offset, 21);
    }

    #[test]
    fn rational_literals() {
        assert_eq!(eval_str("3/4").unwrap().unwrap(), Multivector::scalar(0.75));
        assert_eq!(
            eval_str("-1/2*e023").unwrap().unwrap(),
            blade(&[0, 2, 3]) * -0.5
        );
        let err = parse("1/0").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::InvalidNumber { .. }));
        // Literals that overflow to infinity are rejected too.
        let huge = "9".repeat(400);
        let err = parse(&huge).unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::InvalidNumber { .. }));
    }

    #[test]
    fn invalid_blades_are_rejected_with_offsets() {
        for (src, offset) in [("e10", 0), ("e00", 0), ("e5", 0), ("1 + e059", 4)] {
            let err = parse(src).unwrap_err();
            assert!(
                matches!(err.kind, ParseErrorKind::InvalidBlade { .. }),
                "{src}"
            );
            assert_eq!(err.offset, offset, "{src}");
        }
        // `e` alone is an unknown identifier, not a blade.
        assert!(parse("e").is_err());
    }

    #[test]
    fn precedence_is_documented_order() {
        let chained = parse("e0|e1^e2*e3+e4").unwrap();
        let spelled = parse("(((e0|e1)^e2)*e3)+e4").unwrap();
        assert_eq!(chained, spelled);

        // Golden tree for the same source.
        let expected = Expr::Add(
            Box::new(Expr::Geometric(
                Box::new(Expr::Outer(
                    Box::new(Expr::Inner(
                        Box::new(Expr::Blade(Blade::generator(0))),
                        Box::new(Expr::Blade(Blade::generator(1))),
                    )),
                    Box::new(Expr::Blade(Blade::generator(2))),
                )),
                Box::new(Expr::Blade(Blade::generator(3))),
            )),
            Box::new(Expr::Blade(Blade::generator(4))),
        );
        assert_eq!(chained, expected);

        // Unary minus binds tighter than binary operators.
        assert_eq!(parse("-e1*e2").unwrap(), parse("(-e1)*e2").unwrap());
    }

    #[test]
    fn reversion_and_grade_selection() {
        assert_eq!(eval_str("e01~").unwrap().unwrap(), -blade(&[0, 1]));
        assert_eq!(
            eval_str("<e01 + 3>0").unwrap().unwrap(),
            Multivector::scalar(3.0)
        );
        assert_eq!(eval_str("<e01 + 3>2").unwrap().unwrap(), blade(&[0, 1]));
        let err = parse("<e01>7").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Syntax { .. }));
    }

    #[test]
    fn exponential_through_the_language() {
        let value = eval_str("exp(e12*1.5707963267948966)").unwrap().unwrap();
        assert!(value.approx_eq(&blade(&[1, 2]), TOL_IDENTITY));
        // Propagates the non-scalar-square failure.
        let result = eval_str("exp(e3+e12)").unwrap();
        assert!(matches!(result, Err(Error::NonScalarSquare(_))));
    }

    #[test]
    fn pseudoscalar_literal() {
        assert_eq!(eval_str("i*i").unwrap().unwrap(), Multivector::scalar(-1.0));
        assert_eq!(eval_str("i").unwrap().unwrap(), Multivector::pseudoscalar());
    }

    #[test]
    fn formatting_rules() {
        assert_eq!(format_multivector(&Multivector::zero()), "0");
        assert_eq!(format_multivector(&Multivector::scalar(3.0)), "3");
        assert_eq!(format_multivector(&(-blade(&[0, 1]))), "-e01");
        assert_eq!(
            format_multivector(&(blade(&[0, 1, 4]) + blade(&[0, 2, 3]) * -2.5)),
            "e014 - 2.5*e023"
        );
        assert_eq!(format_multivector(&Multivector::pseudoscalar()), "e01234");
    }

    #[test]
    fn format_round_trips_exactly() {
        let x = Multivector::scalar(0.1)
            + blade(&[0]) * -3.25
            + blade(&[1, 4]) * 0.3333333333333333
            + blade(&[0, 1, 2, 3, 4]) * 7.0;
        let back = eval_str(&format_multivector(&x)).unwrap().unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn hostile_nesting_is_a_structured_error() {
        let deep = "(".repeat(100_000);
        let err = parse(&deep).unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Syntax { .. }));
        let minuses = "-".repeat(100_000);
        assert!(parse(&minuses).is_err());
        // At the limit, deep-but-legal nesting still evaluates.
        let balanced = format!("{}e0{}", "(".repeat(100), ")".repeat(100));
        assert_eq!(
            eval_str(&balanced).unwrap().unwrap(),
            Multivector::basis(Blade::generator(0))
        );
    }

    #[test]
    fn errors_never_panic() {
        for src in [
            "", "(", ")", "e0+", "exp", "exp(", "1..2", "<e0", "<e0>", "e0 e1", "~", "/",
        ] {
            let _ = eval_str(src);
        }
    }
}
