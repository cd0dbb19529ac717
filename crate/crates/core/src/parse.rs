//! Ideal file format and polynomial expression parser.
//!
//! A file holds `#` comments, exactly one `ring:` line naming the variables
//! in order of descending term-order weight, and one or more `poly:` lines.
//! Expressions use `+`, `-`, `*`, `^` with positive integer exponents,
//! parentheses, and integer or `a/b` rational coefficients. Multiplication
//! is always explicit: `2x` is a syntax error, `2*x` is not.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::context::VariableContext;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// Parsed and validated input ideal: homogeneous nonzero generators sorted
/// by decreasing total degree (ties keep file order).
#[derive(Debug, Clone)]
pub struct IdealInput {
    pub context: VariableContext,
    pub generators: Vec<Polynomial>,
    /// 1-based position of each generator in the input file, recording the
    /// original order before the degree sort.
    pub source_positions: Vec<usize>,
}

impl IdealInput {
    pub fn nvars(&self) -> usize {
        self.context.nvars()
    }

    /// Generator degrees d1 >= d2 >= ... as sorted at ingest.
    pub fn degrees(&self) -> Vec<u64> {
        self.generators
            .iter()
            .map(|g| u64::from(g.homogeneous_degree().expect("generators are homogeneous")))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

fn tokenize(text: &str, line_no: usize, col0: usize) -> Result<Vec<Spanned>> {
    let mut toks = vec![];
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i + 1;
        match c {
            ' ' | '\t' => {
                i += 1;
            }
            '+' | '-' | '*' | '^' | '/' | '(' | ')' => {
                let tok = match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '/' => Tok::Slash,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                };
                toks.push(Spanned {
                    tok,
                    line: line_no,
                    col,
                });
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                toks.push(Spanned {
                    tok: Tok::Int(digits.parse::<BigInt>().expect("digit run")),
                    line: line_no,
                    col,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push(Spanned {
                    tok: Tok::Ident(chars[start..i].iter().collect()),
                    line: line_no,
                    col,
                });
            }
            other => return Err(err(line_no, col, format!("unexpected character '{other}'"))),
        }
    }
    Ok(toks)
}

struct ExprParser<'a> {
    toks: &'a [Spanned],
    pos: usize,
    ctx: &'a VariableContext,
    line: usize,
    end_col: usize,
}

impl<'a> ExprParser<'a> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<&Spanned> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (usize, usize) {
        match self.toks.get(self.pos) {
            Some(s) => (s.line, s.col),
            None => (self.line, self.end_col),
        }
    }

    /// expr := ['-'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Polynomial> {
        let n = self.ctx.nvars();
        let mut acc = Polynomial::zero(n);
        let mut negate = false;
        if matches!(self.peek().map(|s| &s.tok), Some(Tok::Minus)) {
            self.next();
            negate = true;
        }
        let first = self.term()?;
        acc = acc.add(&if negate { first.neg() } else { first });
        loop {
            match self.peek().map(|s| s.tok.clone()) {
                Some(Tok::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    /// term := factor ('*' factor)*
    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while matches!(self.peek().map(|s| &s.tok), Some(Tok::Star)) {
            self.next();
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    /// factor := primary ['^' uint]
    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.primary()?;
        if matches!(self.peek().map(|s| &s.tok), Some(Tok::Caret)) {
            self.next();
            let (line, col) = self.here();
            match self.next().map(|s| s.tok.clone()) {
                Some(Tok::Int(e)) => {
                    let e: u32 = e
                        .try_into()
                        .ok()
                        .filter(|&e| e >= 1)
                        .ok_or_else(|| err(line, col, "exponent must be a positive integer"))?;
                    let mut acc = Polynomial::constant(self.ctx.nvars(), BigRational::one());
                    // Square-and-multiply is overkill at desk scale.
                    for _ in 0..e {
                        acc = acc.mul(&base);
                    }
                    return Ok(acc);
                }
                _ => return Err(err(line, col, "expected integer exponent after '^'")),
            }
        }
        Ok(base)
    }

    /// primary := '(' expr ')' | ident | int ['/' int]
    fn primary(&mut self) -> Result<Polynomial> {
        let (line, col) = self.here();
        let n = self.ctx.nvars();
        match self.next().map(|s| s.tok.clone()) {
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let (line, col) = self.here();
                match self.next().map(|s| &s.tok) {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(err(line, col, "expected ')'")),
                }
            }
            Some(Tok::Ident(name)) => match self.ctx.index_of(&name) {
                Some(i) => Ok(Polynomial::from_monomial(Monomial::variable(n, i))),
                None => Err(err(line, col, format!("unknown variable '{name}'"))),
            },
            Some(Tok::Int(v)) => {
                if matches!(self.peek().map(|s| &s.tok), Some(Tok::Slash)) {
                    self.next();
                    let (dline, dcol) = self.here();
                    match self.next().map(|s| s.tok.clone()) {
                        Some(Tok::Int(d)) if d != BigInt::from(0) => {
                            Ok(Polynomial::constant(n, BigRational::new(v, d)))
                        }
                        Some(Tok::Int(_)) => Err(err(dline, dcol, "zero denominator")),
                        _ => Err(err(dline, dcol, "expected integer denominator after '/'")),
                    }
                } else {
                    Ok(Polynomial::constant(n, BigRational::from_integer(v)))
                }
            }
            Some(_) => Err(err(line, col, "expected '(', a variable, or a number")),
            None => Err(err(line, col, "unexpected end of expression")),
        }
    }
}

/// Parse one polynomial expression in the given context. `line_no` and
/// `col0` locate the expression inside a larger file for error messages.
pub fn parse_polynomial_at(
    text: &str,
    ctx: &VariableContext,
    line_no: usize,
    col0: usize,
) -> Result<Polynomial> {
    let toks = tokenize(text, line_no, col0)?;
    let mut p = ExprParser {
        toks: &toks,
        pos: 0,
        ctx,
        line: line_no,
        end_col: col0 + text.chars().count() + 1,
    };
    let poly = p.expr()?;
    if let Some(s) = p.peek() {
        return Err(err(s.line, s.col, "unexpected trailing input"));
    }
    Ok(poly)
}

/// Parse a standalone polynomial expression (CLI --member arguments).
pub fn parse_polynomial(text: &str, ctx: &VariableContext) -> Result<Polynomial> {
    parse_polynomial_at(text, ctx, 1, 0)
}

fn parse_ring_line(rest: &str, line_no: usize, col0: usize) -> Result<VariableContext> {
    let mut names = vec![];
    for piece in rest.split(',') {
        let name = piece.trim();
        let col = col0 + 1;
        if name.is_empty() {
            return Err(err(line_no, col, "empty variable name in ring line"));
        }
        let mut chars = name.chars();
        let head_ok = chars
            .next()
            .map(|c| c.is_ascii_alphabetic() || c == '_')
            .unwrap_or(false);
        if !head_ok || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(err(line_no, col, format!("invalid variable name '{name}'")));
        }
        if names.iter().any(|n| n == name) {
            return Err(err(line_no, col, format!("duplicate variable '{name}'")));
        }
        names.push(name.to_string());
    }
    Ok(VariableContext::new(names))
}

/// Parse a full ideal file: comments, a ring line, poly lines. Generators
/// are validated (nonzero, non-constant, homogeneous) and sorted by
/// decreasing degree; `source_positions` keeps the original order.
pub fn parse_ideal(text: &str) -> Result<IdealInput> {
    let mut ctx: Option<VariableContext> = None;
    let mut gens: Vec<(Polynomial, usize)> = vec![];
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("ring:") {
            if ctx.is_some() {
                return Err(err(line_no, 1, "second ring line"));
            }
            let col0 = line.find("ring:").unwrap() + "ring:".len();
            ctx = Some(parse_ring_line(rest, line_no, col0)?);
        } else if let Some(rest) = trimmed.strip_prefix("poly:") {
            let ctx = ctx
                .as_ref()
                .ok_or_else(|| err(line_no, 1, "poly line before ring line"))?;
            let col0 = line.find("poly:").unwrap() + "poly:".len();
            let poly = parse_polynomial_at(rest, ctx, line_no, col0)?;
            let position = gens.len() + 1;
            if poly.is_zero() {
                return Err(Error::ZeroGenerator { index: position });
            }
            if !poly.is_homogeneous() {
                return Err(Error::NonHomogeneous { index: position });
            }
            if poly.total_degree() == Some(0) {
                return Err(Error::ConstantGenerator { index: position });
            }
            gens.push((poly, position));
        } else {
            return Err(err(line_no, 1, "expected 'ring:' or 'poly:' line"));
        }
    }
    let context = ctx.ok_or_else(|| err(text.lines().count().max(1), 1, "missing ring line"))?;
    if gens.is_empty() {
        return Err(Error::EmptyGeneratorList);
    }
    gens.sort_by(|a, b| {
        b.0.homogeneous_degree()
            .unwrap()
            .cmp(&a.0.homogeneous_degree().unwrap())
            .then(a.1.cmp(&b.1))
    });
    let (generators, source_positions) = gens.into_iter().unzip();
    Ok(IdealInput {
        context,
        generators,
        source_positions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_worked_monomial_ideal() {
        let text = "\
# three-variable worked example
ring: x1, x2, x3
poly: x1*x3
poly: x1*x2
poly: x1^2
poly: x2^3
";
        let input = parse_ideal(text).unwrap();
        assert_eq!(input.nvars(), 3);
        assert_eq!(input.generators.len(), 4);
        // Sorted by decreasing degree: x2^3 first, file order among the rest.
        assert_eq!(input.degrees(), vec![3, 2, 2, 2]);
        assert_eq!(input.source_positions, vec![4, 1, 2, 3]);
    }

    #[test]
    fn expression_grammar() {
        let ctx = VariableContext::new(vec!["x".into(), "y".into()]);
        let p = parse_polynomial("(x + y)^2 - 2*x*y", &ctx).unwrap();
        assert_eq!(p.terms().len(), 2);
        let q = parse_polynomial("x^2 + y^2", &ctx).unwrap();
        assert_eq!(p, q);
        let r = parse_polynomial("4/5*x*y - y^2", &ctx).unwrap();
        assert_eq!(r.terms().len(), 2);
        assert!(parse_polynomial("-x - y", &ctx).is_ok());
    }

    #[test]
    fn rejects_implicit_multiplication() {
        let ctx = VariableContext::new(vec!["x".into()]);
        let e = parse_polynomial("2x", &ctx).unwrap_err();
        assert!(matches!(e, Error::Parse { .. }), "{e}");
    }

    #[test]
    fn rejects_unknown_variable_with_position() {
        let text = "ring: x, y\npoly: x*z\n";
        match parse_ideal(text).unwrap_err() {
            Error::Parse { line, col, msg } => {
                assert_eq!(line, 2);
                assert!(col > 6);
                assert!(msg.contains("unknown variable"), "{msg}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(matches!(
            parse_ideal("ring: x, y\npoly: x - x\n").unwrap_err(),
            Error::ZeroGenerator { index: 1 }
        ));
        assert!(matches!(
            parse_ideal("ring: x, y\npoly: x + y^2\n").unwrap_err(),
            Error::NonHomogeneous { index: 1 }
        ));
        assert!(matches!(
            parse_ideal("ring: x, y\npoly: 3\n").unwrap_err(),
            Error::ConstantGenerator { index: 1 }
        ));
        assert!(matches!(
            parse_ideal("ring: x, y\n").unwrap_err(),
            Error::EmptyGeneratorList
        ));
        assert!(matches!(
            parse_ideal("poly: x\nring: x\n").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
        assert!(matches!(
            parse_ideal("ring: x\nring: x\npoly: x\n").unwrap_err(),
            Error::Parse { line: 2, .. }
        ));
    }

    #[test]
    fn division_only_between_integers() {
        let ctx = VariableContext::new(vec!["x".into(), "y".into()]);
        assert!(parse_polynomial("x/2", &ctx).is_err());
        assert!(parse_polynomial("1/0", &ctx).is_err());
        assert!(parse_polynomial("3/2*x", &ctx).is_ok());
    }

    #[test]
    fn display_round_trip() {
        let ctx = VariableContext::numbered(3);
        for text in [
            "x1^2 - 3*x2*x3 + 4/5*x3^2",
            "x1*x2*x3",
            "-x1^4 + 2*x2^4 - x3^4",
            "7",
        ] {
            let p = parse_polynomial(text, &ctx).unwrap();
            let rendered = p.display(&ctx).to_string();
            let q = parse_polynomial(&rendered, &ctx).unwrap();
            assert_eq!(p, q, "round trip through {rendered}");
        }
    }
}
