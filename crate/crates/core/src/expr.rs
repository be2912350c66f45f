//! The element grammar: `+ - * / ^`, parentheses, integer literals and
//! names. Names are looked up first among an algebra's generators and then
//! among the scalar symbols of the coefficient tower.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::coeff::{Cyclotomic, RatFunc, Var};
use crate::element::Element;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Name(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Name(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token::Int(digits.parse().expect("ascii digits")));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Name(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.eat('(');
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let value = match self.tokens.get(self.pos) {
            Some(Token::Int(n)) => {
                self.pos += 1;
                i64::try_from(n.clone()).map_err(|_| Error::Parse("exponent too large".into()))?
            }
            _ => return Err(Error::Parse("expected an integer exponent after `^`".into())),
        };
        if paren && !self.eat(')') {
            return Err(Error::Parse("missing `)` in exponent".into()));
        }
        Ok(if neg { -value } else { value })
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Token::Name(s)) => {
                self.pos += 1;
                Ok(Expr::Name(s))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                Ok(inner)
            }
            Some(Token::Op(c)) => Err(Error::Parse(format!("unexpected `{c}`"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };
    if p.tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos + 1)));
    }
    Ok(e)
}

/// Scalar names: coefficient variables (`q`, `q2`, `x1`, `h1`, `H`, `C`, `c`,
/// `d`, `s`, ...), `zM` for a primitive `M`-th root of unity and `lambda` for
/// `s^2`.
pub fn scalar_symbol(name: &str) -> Result<RatFunc> {
    if let Some(m) = name.strip_prefix('z') {
        if !m.is_empty() && m.chars().all(|c| c.is_ascii_digit()) {
            let m: u32 = m
                .parse()
                .map_err(|_| Error::Parse(format!("bad root of unity `{name}`")))?;
            if m == 0 {
                return Err(Error::Parse("z0 is not a root of unity".into()));
            }
            return Ok(RatFunc::from_cyclotomic(Cyclotomic::root(m)));
        }
    }
    if name == "lambda" {
        return Ok(RatFunc::var_power(Var::SqrtLambda, 2));
    }
    let v: Var = name
        .parse()
        .map_err(|_| Error::Parse(format!("unknown symbol `{name}`")))?;
    Ok(RatFunc::var(v))
}

enum Value<E> {
    Scalar(RatFunc),
    Elem(E),
}

struct Evaluator<'a, E> {
    generator: &'a dyn Fn(&str) -> Option<E>,
    unit: &'a E,
}

impl<E: Element> Evaluator<'_, E> {
    fn promote(&self, v: Value<E>) -> E {
        match v {
            Value::Scalar(s) => self.unit.scale(&s),
            Value::Elem(e) => e,
        }
    }

    fn eval(&self, expr: &Expr) -> Result<Value<E>> {
        use Value::*;
        Ok(match expr {
            Expr::Int(n) => Scalar(RatFunc::from_rational(BigRational::from_integer(n.clone()))),
            Expr::Name(s) => match (self.generator)(s) {
                Some(e) => Elem(e),
                None => Scalar(scalar_symbol(s)?),
            },
            Expr::Neg(a) => match self.eval(a)? {
                Scalar(s) => Scalar(s.neg()),
                Elem(e) => Elem(e.negated()),
            },
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                let sub = matches!(expr, Expr::Sub(..));
                match (x, y) {
                    (Scalar(x), Scalar(y)) => Scalar(if sub { x.sub(&y) } else { x.add(&y) }),
                    (x, y) => {
                        let (x, y) = (self.promote(x), self.promote(y));
                        Elem(if sub { x.try_sub(&y)? } else { x.try_add(&y)? })
                    }
                }
            }
            Expr::Mul(a, b) => match (self.eval(a)?, self.eval(b)?) {
                (Scalar(x), Scalar(y)) => Scalar(x.mul(&y)),
                (x, y) => Elem(self.promote(x).try_mul(&self.promote(y))?),
            },
            Expr::Div(a, b) => {
                let x = self.eval(a)?;
                match self.eval(b)? {
                    Scalar(y) => {
                        let inv = y.inv()?;
                        match x {
                            Scalar(x) => Scalar(x.mul(&inv)),
                            Elem(x) => Elem(x.try_mul(&self.unit.scale(&inv))?),
                        }
                    }
                    Elem(y) => Elem(self.promote(x).try_mul(&y.try_inverse()?)?),
                }
            }
            Expr::Pow(a, k) => match self.eval(a)? {
                Scalar(x) => Scalar(x.pow(*k)?),
                Elem(x) => Elem(x.try_pow(*k)?),
            },
        })
    }
}

/// Evaluate `expr` in the algebra of `unit`, resolving generator names with
/// `generator`.
pub fn eval<E: Element>(
    expr: &Expr,
    generator: &dyn Fn(&str) -> Option<E>,
    unit: &E,
) -> Result<E> {
    let ev = Evaluator { generator, unit };
    let v = ev.eval(expr)?;
    Ok(ev.promote(v))
}

pub fn parse_scalar(text: &str) -> Result<RatFunc> {
    eval(&parse(text)?, &|_| None, &RatFunc::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_signs() {
        assert_eq!(parse_scalar("-q^2 + 3*q - 1/2").unwrap().to_string(), "-q^2 + 3*q - 1/2");
        assert_eq!(parse_scalar("q^-1").unwrap(), parse_scalar("1/q").unwrap());
        assert_eq!(parse_scalar("q^(-2)*q^2").unwrap(), RatFunc::one());
        assert_eq!(parse_scalar("2^3").unwrap(), RatFunc::from_int(8));
    }

    #[test]
    fn symbols() {
        assert_eq!(parse_scalar("z4^2").unwrap(), RatFunc::from_int(-1));
        assert_eq!(parse_scalar("lambda").unwrap(), parse_scalar("s^2").unwrap());
        assert!(matches!(parse_scalar("foo"), Err(Error::Parse(_))));
    }

    #[test]
    fn malformed() {
        for bad in ["((", "", "q +", "q^x", "q ^ 1.5", "q)", "3 $ 4"] {
            assert!(matches!(parse_scalar(bad), Err(Error::Parse(_))), "{bad}");
        }
    }
}
