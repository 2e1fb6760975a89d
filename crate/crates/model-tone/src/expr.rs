//! A small expression language for radial profiles.
//!
//! Expressions are ASTs over one free variable (any identifier works; `r`,
//! `y`, `t`, `z` are common). Supported: `+ - * / ^` with `^` binding
//! tightest and right-associative, unary minus, the constant `pi`, and the
//! functions `sin cos sinh cosh exp log sqrt abs`.
//!
//! ```
//! use model_tone::expr::parse;
//! let g = parse("sinh(2*r)/2").unwrap();
//! let v = g.evaluate(0.35).unwrap();
//! assert!((v - (0.7f64).sinh() / 2.0).abs() < 1e-15);
//! let dg = g.differentiate();
//! assert!((dg.evaluate(0.35).unwrap() - (0.7f64).cosh()).abs() < 1e-12);
//! ```

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExprError {
    #[error("parse error at byte {offset}: found {found}, expected {expected}")]
    Parse {
        offset: usize,
        found: String,
        expected: String,
    },
    #[error("unknown function `{name}` at byte {offset}")]
    UnknownFunction { name: String, offset: usize },
    #[error("two distinct variables `{first}` and `{second}` (second at byte {offset})")]
    TwoVariables {
        first: String,
        second: String,
        offset: usize,
    },
    #[error("invalid number literal at byte {offset}")]
    BadNumber { offset: usize },
    #[error("domain error in `{subexpr}` at t = {t}: {reason}")]
    Domain {
        subexpr: String,
        t: f64,
        reason: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Sinh,
    Cosh,
    Exp,
    Log,
    Sqrt,
    Abs,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Sinh => "sinh",
            Func::Cosh => "cosh",
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Sqrt => "sqrt",
            Func::Abs => "abs",
        }
    }

    fn from_name(s: &str) -> Option<Func> {
        Some(match s {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "sinh" => Func::Sinh,
            "cosh" => Func::Cosh,
            "exp" => Func::Exp,
            "log" => Func::Log,
            "sqrt" => Func::Sqrt,
            "abs" => Func::Abs,
            _ => return None,
        })
    }
}

/// Expression tree over a single scalar variable.
#[derive(Debug, Clone, PartialEq)]
pub enum ScalarExpr {
    Const(f64),
    Var(String),
    Neg(Box<ScalarExpr>),
    Add(Box<ScalarExpr>, Box<ScalarExpr>),
    Sub(Box<ScalarExpr>, Box<ScalarExpr>),
    Mul(Box<ScalarExpr>, Box<ScalarExpr>),
    Div(Box<ScalarExpr>, Box<ScalarExpr>),
    Pow(Box<ScalarExpr>, Box<ScalarExpr>),
    Call(Func, Box<ScalarExpr>),
}

use ScalarExpr::*;

fn bx(e: ScalarExpr) -> Box<ScalarExpr> {
    Box::new(e)
}

/// Parses `text` into an expression. See the module docs for the grammar.
pub fn parse(text: &str) -> Result<ScalarExpr, ExprError> {
    let tokens = lex(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.len(),
        var: None,
    };
    let e = p.expr()?;
    if p.pos < p.tokens.len() {
        let (tok, off) = &p.tokens[p.pos];
        return Err(ExprError::Parse {
            offset: *off,
            found: tok.describe(),
            expected: "operator or end of input".into(),
        });
    }
    Ok(e)
}

impl ScalarExpr {
    /// Evaluates at `t`. Log of a non-positive value, square root of a
    /// negative value, division by zero and powers that leave the reals
    /// are reported as domain errors naming the offending subexpression.
    pub fn evaluate(&self, t: f64) -> Result<f64, ExprError> {
        let domain = |e: &ScalarExpr, reason: &str| ExprError::Domain {
            subexpr: e.to_string(),
            t,
            reason: reason.into(),
        };
        Ok(match self {
            Const(c) => *c,
            Var(_) => t,
            Neg(a) => -a.evaluate(t)?,
            Add(a, b) => a.evaluate(t)? + b.evaluate(t)?,
            Sub(a, b) => a.evaluate(t)? - b.evaluate(t)?,
            Mul(a, b) => a.evaluate(t)? * b.evaluate(t)?,
            Div(a, b) => {
                let d = b.evaluate(t)?;
                if d == 0.0 {
                    return Err(domain(self, "division by zero"));
                }
                a.evaluate(t)? / d
            }
            Pow(a, b) => {
                let base = a.evaluate(t)?;
                let ex = b.evaluate(t)?;
                let v = base.powf(ex);
                if v.is_nan() && !base.is_nan() && !ex.is_nan() {
                    return Err(domain(self, "power result is not a real number"));
                }
                if v.is_infinite() && base == 0.0 && ex < 0.0 {
                    return Err(domain(self, "zero raised to a negative power"));
                }
                v
            }
            Call(f, a) => {
                let x = a.evaluate(t)?;
                match f {
                    Func::Sin => x.sin(),
                    Func::Cos => x.cos(),
                    Func::Sinh => x.sinh(),
                    Func::Cosh => x.cosh(),
                    Func::Exp => x.exp(),
                    Func::Log => {
                        if x <= 0.0 {
                            return Err(domain(self, "log of a non-positive value"));
                        }
                        x.ln()
                    }
                    Func::Sqrt => {
                        if x < 0.0 {
                            return Err(domain(self, "sqrt of a negative value"));
                        }
                        x.sqrt()
                    }
                    Func::Abs => x.abs(),
                }
            }
        })
    }

    /// Symbolic derivative. No simplification is attempted. `abs` is
    /// differentiated as the sign function away from zero, so evaluating
    /// the derivative of `abs(u)` where `u = 0` is a domain error.
    pub fn differentiate(&self) -> ScalarExpr {
        match self {
            Const(_) => Const(0.0),
            Var(_) => Const(1.0),
            Neg(a) => Neg(bx(a.differentiate())),
            Add(a, b) => Add(bx(a.differentiate()), bx(b.differentiate())),
            Sub(a, b) => Sub(bx(a.differentiate()), bx(b.differentiate())),
            Mul(a, b) => Add(
                bx(Mul(bx(a.differentiate()), b.clone())),
                bx(Mul(a.clone(), bx(b.differentiate()))),
            ),
            Div(a, b) => Div(
                bx(Sub(
                    bx(Mul(bx(a.differentiate()), b.clone())),
                    bx(Mul(a.clone(), bx(b.differentiate()))),
                )),
                bx(Mul(b.clone(), b.clone())),
            ),
            Pow(a, b) => {
                if !b.contains_var() {
                    // constant exponent: n * u^(n-1) * u'
                    Mul(
                        bx(Mul(
                            (*b).clone(),
                            bx(Pow(a.clone(), bx(Sub(b.clone(), bx(Const(1.0)))))),
                        )),
                        bx(a.differentiate()),
                    )
                } else if !a.contains_var() {
                    // constant base: c^v * log(c) * v'
                    Mul(
                        bx(Mul(
                            bx(self.clone()),
                            bx(Call(Func::Log, a.clone())),
                        )),
                        bx(b.differentiate()),
                    )
                } else {
                    // u^v * (v' * log(u) + v * u' / u)
                    Mul(
                        bx(self.clone()),
                        bx(Add(
                            bx(Mul(bx(b.differentiate()), bx(Call(Func::Log, a.clone())))),
                            bx(Div(bx(Mul(b.clone(), bx(a.differentiate()))), a.clone())),
                        )),
                    )
                }
            }
            Call(f, a) => {
                let da = a.differentiate();
                let outer = match f {
                    Func::Sin => Call(Func::Cos, a.clone()),
                    Func::Cos => Neg(bx(Call(Func::Sin, a.clone()))),
                    Func::Sinh => Call(Func::Cosh, a.clone()),
                    Func::Cosh => Call(Func::Sinh, a.clone()),
                    Func::Exp => Call(Func::Exp, a.clone()),
                    Func::Log => return Div(bx(da), a.clone()),
                    Func::Sqrt => {
                        return Div(
                            bx(da),
                            bx(Mul(bx(Const(2.0)), bx(Call(Func::Sqrt, a.clone())))),
                        )
                    }
                    Func::Abs => Div((*a).clone(), bx(Call(Func::Abs, a.clone()))),
                };
                Mul(bx(outer), bx(da))
            }
        }
    }

    /// True if any `Var` node occurs in the tree.
    pub fn contains_var(&self) -> bool {
        match self {
            Const(_) => false,
            Var(_) => true,
            Neg(a) | Call(_, a) => a.contains_var(),
            Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) | Pow(a, b) => {
                a.contains_var() || b.contains_var()
            }
        }
    }

    /// Name of the free variable, if one occurs.
    pub fn var_name(&self) -> Option<&str> {
        match self {
            Const(_) => None,
            Var(n) => Some(n),
            Neg(a) | Call(_, a) => a.var_name(),
            Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) | Pow(a, b) => {
                a.var_name().or_else(|| b.var_name())
            }
        }
    }

    // printing precedence; parent contexts require a minimum level
    fn prec(&self) -> u8 {
        match self {
            Add(..) | Sub(..) => 1,
            Mul(..) | Div(..) => 2,
            // a negative literal prints with a leading minus, so it binds
            // like a negation, not like an atom
            Neg(_) => 3,
            Const(c) if c.is_sign_negative() => 3,
            Pow(..) => 4,
            Const(_) | Var(_) | Call(..) => 5,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let me = self.prec();
        if me < min {
            write!(f, "(")?;
            self.fmt_prec(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Const(c) => write!(f, "{c:?}"),
            Var(n) => write!(f, "{n}"),
            Neg(a) => {
                write!(f, "-")?;
                // parenthesize a bare constant so the minus does not fold
                // back into a negative literal on reparse
                if matches!(**a, Const(_)) {
                    write!(f, "(")?;
                    a.fmt_prec(f, 0)?;
                    write!(f, ")")
                } else {
                    a.fmt_prec(f, 3)
                }
            }
            Add(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " + ")?;
                b.fmt_prec(f, 2)
            }
            Sub(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " - ")?;
                b.fmt_prec(f, 2)
            }
            Mul(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, "*")?;
                b.fmt_prec(f, 3)
            }
            Div(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, "/")?;
                b.fmt_prec(f, 3)
            }
            Pow(a, b) => {
                a.fmt_prec(f, 5)?;
                write!(f, "^")?;
                b.fmt_prec(f, 3)
            }
            Call(func, a) => {
                write!(f, "{}(", func.name())?;
                a.fmt_prec(f, 0)?;
                write!(f, ")")
            }
        }
    }
}

impl fmt::Display for ScalarExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number `{n:?}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                out.push((Tok::Star, i));
                i += 1;
            }
            '/' => {
                out.push((Tok::Slash, i));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, i));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, i));
                i += 1;
            }
            '0'..='9' | '.' => {
                let start = i;
                while i < bytes.len() && matches!(bytes[i] as char, '0'..='9' | '.') {
                    i += 1;
                }
                if i < bytes.len() && matches!(bytes[i] as char, 'e' | 'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && matches!(bytes[j] as char, '+' | '-') {
                        j += 1;
                    }
                    if j < bytes.len() && (bytes[j] as char).is_ascii_digit() {
                        i = j;
                        while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let lit = &text[start..i];
                let n: f64 = lit
                    .parse()
                    .map_err(|_| ExprError::BadNumber { offset: start })?;
                out.push((Tok::Num(n), start));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && matches!(bytes[i] as char, 'a'..='z' | 'A'..='Z' | '0'..='9' | '_')
                {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
            }
            _ => {
                return Err(ExprError::Parse {
                    offset: i,
                    found: format!("`{c}`"),
                    expected: "number, identifier, operator or parenthesis".into(),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    var: Option<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.tokens.get(self.pos + 1).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map(|(_, o)| *o).unwrap_or(self.end)
    }

    fn found(&self) -> String {
        self.tokens
            .get(self.pos)
            .map(|(t, _)| t.describe())
            .unwrap_or_else(|| "end of input".into())
    }

    fn err(&self, expected: &str) -> ExprError {
        ExprError::Parse {
            offset: self.offset(),
            found: self.found(),
            expected: expected.into(),
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<ScalarExpr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Add(bx(lhs), bx(self.term()?));
            } else if self.eat(&Tok::Minus) {
                lhs = Sub(bx(lhs), bx(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<ScalarExpr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                lhs = Mul(bx(lhs), bx(self.unary()?));
            } else if self.eat(&Tok::Slash) {
                lhs = Div(bx(lhs), bx(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<ScalarExpr, ExprError> {
        if self.eat(&Tok::Minus) {
            // a bare literal right after the minus (and not raised to a
            // power, which binds tighter) folds into a negative constant
            if let Some(Tok::Num(n)) = self.peek() {
                if self.peek2() != Some(&Tok::Caret) {
                    let c = -*n;
                    self.pos += 1;
                    return Ok(Const(c));
                }
            }
            return Ok(Neg(bx(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<ScalarExpr, ExprError> {
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            // right-associative; the exponent may carry a unary minus
            return Ok(Pow(bx(base), bx(self.unary()?)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ScalarExpr, ExprError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Const(n))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.err("`)`"));
                }
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                let off = self.offset();
                self.pos += 1;
                if self.peek() == Some(&Tok::LParen) {
                    let func = Func::from_name(&name)
                        .ok_or(ExprError::UnknownFunction {
                            name: name.clone(),
                            offset: off,
                        })?;
                    self.pos += 1;
                    let arg = self.expr()?;
                    if !self.eat(&Tok::RParen) {
                        return Err(self.err("`)`"));
                    }
                    return Ok(Call(func, bx(arg)));
                }
                if name == "pi" {
                    return Ok(Const(std::f64::consts::PI));
                }
                match &self.var {
                    Some(v) if *v != name => Err(ExprError::TwoVariables {
                        first: v.clone(),
                        second: name,
                        offset: off,
                    }),
                    _ => {
                        self.var.get_or_insert_with(|| name.clone());
                        Ok(Var(name))
                    }
                }
            }
            _ => Err(self.err("number, identifier, `-` or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn p(s: &str) -> ScalarExpr {
        parse(s).unwrap()
    }

    #[test]
    fn evaluates_arithmetic_and_functions() {
        assert_eq!(p("2 + 3*4").evaluate(0.0).unwrap(), 14.0);
        assert_eq!(p("2^3^2").evaluate(0.0).unwrap(), 512.0); // right-assoc
        assert_eq!(p("-2^2").evaluate(0.0).unwrap(), -4.0); // ^ before unary -
        assert_eq!(p("2^-1").evaluate(0.0).unwrap(), 0.5);
        let v = p("sinh(2*r)/2").evaluate(0.35).unwrap();
        assert!((v - (0.7f64).sinh() / 2.0).abs() < 1e-15);
        let w = p("-(r^2) + pi").evaluate(2.0).unwrap();
        assert!((w - (PI - 4.0)).abs() < 1e-15);
        assert_eq!(p("pi").evaluate(123.0).unwrap(), PI);
    }

    #[test]
    fn any_single_identifier_is_the_variable() {
        for name in ["r", "y", "t", "z", "x", "s_1"] {
            let e = parse(&format!("{name}^2 + 1")).unwrap();
            assert_eq!(e.evaluate(3.0).unwrap(), 10.0);
            assert_eq!(e.var_name(), Some(name));
        }
    }

    #[test]
    fn two_distinct_variables_are_rejected() {
        match parse("r + y") {
            Err(ExprError::TwoVariables {
                first,
                second,
                offset,
            }) => {
                assert_eq!(first, "r");
                assert_eq!(second, "y");
                assert_eq!(offset, 4);
            }
            other => panic!("expected TwoVariables, got {other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_byte_offsets() {
        match parse("2 +* r") {
            Err(ExprError::Parse { offset, found, .. }) => {
                assert_eq!(offset, 3);
                assert_eq!(found, "`*`");
            }
            other => panic!("expected Parse error, got {other:?}"),
        }
        match parse("sin(r") {
            Err(ExprError::Parse { offset, found, .. }) => {
                assert_eq!(offset, 5);
                assert_eq!(found, "end of input");
            }
            other => panic!("expected Parse error, got {other:?}"),
        }
        match parse("foo(r)") {
            Err(ExprError::UnknownFunction { name, offset }) => {
                assert_eq!(name, "foo");
                assert_eq!(offset, 0);
            }
            other => panic!("expected UnknownFunction, got {other:?}"),
        }
        assert!(matches!(parse(""), Err(ExprError::Parse { .. })));
        assert!(matches!(parse("2 3"), Err(ExprError::Parse { offset: 2, .. })));
    }

    #[test]
    fn domain_errors_name_the_subexpression() {
        match p("1/(1 - r)").evaluate(1.0) {
            Err(ExprError::Domain { subexpr, reason, .. }) => {
                assert_eq!(subexpr, "1.0/(1.0 - r)");
                assert!(reason.contains("division by zero"));
            }
            other => panic!("expected Domain error, got {other:?}"),
        }
        assert!(p("log(r)").evaluate(0.0).is_err());
        assert!(p("log(r)").evaluate(-1.0).is_err());
        assert!(p("sqrt(r)").evaluate(-0.25).is_err());
        assert!(p("r^0.5").evaluate(-2.0).is_err());
        assert!(p("sqrt(r)").evaluate(0.0).is_ok());
    }

    #[test]
    fn abs_derivative_is_sign_and_fails_at_zero() {
        let d = p("abs(t)").differentiate();
        assert_eq!(d.evaluate(2.5).unwrap(), 1.0);
        assert_eq!(d.evaluate(-2.5).unwrap(), -1.0);
        assert!(d.evaluate(0.0).is_err());
    }

    #[test]
    fn constant_exponent_avoids_log_domain() {
        // d/dt t^3 = 3 t^2 must evaluate fine at negative t
        let d = p("t^3").differentiate();
        let v = d.evaluate(-2.0).unwrap();
        assert!((v - 12.0).abs() < 1e-12);
    }

    fn central_diff(e: &ScalarExpr, t: f64) -> f64 {
        let h = 1e-5 * t.abs().max(1.0);
        (e.evaluate(t + h).unwrap() - e.evaluate(t - h).unwrap()) / (2.0 * h)
    }

    #[test]
    fn derivatives_match_finite_differences() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
        // each family with a composed argument, on a domain where it is smooth
        let cases: &[(&str, f64, f64)] = &[
            ("sin(2*t) + cos(t/3)", -3.0, 3.0),
            ("sinh(t)*cosh(2*t)", -2.0, 2.0),
            ("exp(t/2)", -2.0, 2.0),
            ("log(t + 3)", -2.0, 5.0),
            ("sqrt(t + 4)", -3.0, 4.0),
            ("abs(t - 10)", 0.5, 5.0),
            ("t^3 - 2*t^2 + t/2", -2.0, 2.0),
            ("(t + 3)^(t/4)", 0.5, 3.0),
            ("2^t", -2.0, 2.0),
            ("(t^2 + 1)/(t + 5)", -2.0, 2.0),
            ("sin(t)^2", -2.0, 2.0),
        ];
        for (src, lo, hi) in cases {
            let e = p(src);
            let d = e.differentiate();
            for _ in 0..20 {
                let t = rng.gen_range(*lo..*hi);
                let got = d.evaluate(t).unwrap();
                let want = central_diff(&e, t);
                let denom = want.abs().max(1e-6);
                assert!(
                    (got - want).abs() / denom <= 1e-6,
                    "{src} at t={t}: got {got}, finite diff {want}"
                );
            }
        }
    }

    #[test]
    fn print_round_trips_structurally() {
        let sources = [
            "sinh(2*r)/2",
            "-(r^2) + pi",
            "2^-3 * r",
            "1 - -2",
            "-(2.0)",
            "abs(r - 1)^3",
            "(r + 1)*(r - 1)/(r^2 + 1)",
        ];
        for src in sources {
            let e = p(src);
            let printed = e.to_string();
            let back = parse(&printed).unwrap_or_else(|err| {
                panic!("reparse of `{printed}` (from `{src}`) failed: {err}")
            });
            assert_eq!(back, e, "round trip of `{src}` via `{printed}`");
        }
    }

    mod prop {
        use super::*;
        use proptest::prelude::*;

        fn leaf() -> impl Strategy<Value = ScalarExpr> {
            prop_oneof![
                (-10.0..10.0f64).prop_map(ScalarExpr::Const),
                Just(ScalarExpr::Var("t".to_string())),
            ]
        }

        fn arb_expr() -> impl Strategy<Value = ScalarExpr> {
            leaf().prop_recursive(6, 64, 2, |inner| {
                prop_oneof![
                    (inner.clone(), inner.clone())
                        .prop_map(|(a, b)| ScalarExpr::Add(Box::new(a), Box::new(b))),
                    (inner.clone(), inner.clone())
                        .prop_map(|(a, b)| ScalarExpr::Sub(Box::new(a), Box::new(b))),
                    (inner.clone(), inner.clone())
                        .prop_map(|(a, b)| ScalarExpr::Mul(Box::new(a), Box::new(b))),
                    (inner.clone(), inner.clone())
                        .prop_map(|(a, b)| ScalarExpr::Div(Box::new(a), Box::new(b))),
                    (inner.clone(), (-3.0..3.0f64))
                        .prop_map(|(a, n)| ScalarExpr::Pow(
                            Box::new(a),
                            Box::new(ScalarExpr::Const(n))
                        )),
                    inner.clone().prop_map(|a| ScalarExpr::Neg(Box::new(a))),
                    (any::<u8>(), inner.clone()).prop_map(|(k, a)| {
                        let f = [
                            Func::Sin,
                            Func::Cos,
                            Func::Sinh,
                            Func::Cosh,
                            Func::Exp,
                            Func::Log,
                            Func::Sqrt,
                            Func::Abs,
                        ][(k % 8) as usize];
                        ScalarExpr::Call(f, Box::new(a))
                    }),
                ]
            })
        }

        proptest! {
            #[test]
            fn print_parse_round_trip(e in arb_expr()) {
                let printed = e.to_string();
                let back = parse(&printed)
                    .unwrap_or_else(|err| panic!("reparse of `{printed}` failed: {err}"));
                prop_assert_eq!(&back, &e);
                // and evaluation agrees wherever both sides are defined
                for k in 0..10 {
                    let t = -4.0 + 0.9 * k as f64;
                    match (e.evaluate(t), back.evaluate(t)) {
                        (Ok(a), Ok(b)) => {
                            if a.is_finite() && b.is_finite() {
                                let denom = a.abs().max(1.0);
                                prop_assert!((a - b).abs() / denom <= 1e-12);
                            }
                        }
                        (Err(_), Err(_)) => {}
                        (a, b) => prop_assert!(false, "eval mismatch: {:?} vs {:?}", a, b),
                    }
                }
            }
        }
    }
}
