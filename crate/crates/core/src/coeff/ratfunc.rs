//! Reduced rational functions over a cyclotomic field.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{poly_gcd, Cyclotomic, Monomial, MultiPoly, Substitution, Var};
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` monic in the graded-lex
/// order, so equal functions have identical fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_cyclotomic(Cyclotomic::from_int(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_cyclotomic(Cyclotomic::rational(r))
    }

    pub fn from_cyclotomic(c: Cyclotomic) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn root_of_unity(m: u32, k: i64) -> Self {
        Self::from_cyclotomic(Cyclotomic::root_power(m, k))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFunc {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(MultiPoly::var(v))
    }

    /// `v^k` for any integer `k`.
    pub fn var_power(v: Var, k: i64) -> Self {
        let m = MultiPoly::term(Monomial::var(v, k.unsigned_abs() as u32), Cyclotomic::one());
        if k >= 0 {
            Self::from_poly(m)
        } else {
            RatFunc {
                num: MultiPoly::one(),
                den: m,
            }
        }
    }

    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some(c) = den.as_constant() {
            let inv = c.inv().expect("nonzero denominator");
            return Self::from_poly(num.scale(&inv));
        }
        let mc = num.monomial_content().gcd(&den.monomial_content());
        let (mut num, mut den) = if mc.is_one() {
            (num, den)
        } else {
            (num.div_monomial(&mc), den.div_monomial(&mc))
        };
        if !den.is_monomial() {
            let g = poly_gcd(&num, &den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        Self::with_monic_den(num, den)
    }

    fn with_monic_den(num: MultiPoly, den: MultiPoly) -> Self {
        let lc = den.leading().expect("nonzero denominator").1.clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.inv().expect("nonzero leading coefficient");
            if den.is_constant() {
                return Self::from_poly(num.scale(&inv));
            }
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_single_term_polynomial(&self) -> bool {
        self.den.is_one() && self.num.len() == 1
    }

    pub fn as_constant(&self) -> Option<Cyclotomic> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            if self.den.is_one() {
                return Self::from_poly(self.num.add(&other.num));
            }
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        // a/b + c stays reduced over b
        if other.den.is_one() {
            return RatFunc {
                num: self.num.add(&other.num.mul(&self.den)),
                den: self.den.clone(),
            };
        }
        if self.den.is_one() {
            return RatFunc {
                num: other.num.add(&self.num.mul(&other.den)),
                den: other.den.clone(),
            };
        }
        Self::reduce(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        // cross-cancel; the product of reduced, monic pieces is canonical
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        Self::with_monic_den(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::with_monic_den(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    pub fn substitute(&self, sub: &Substitution) -> Result<Self> {
        sub.apply(self)
    }

    /// Substitute values for variables. Binding a `q` parameter to zero or to
    /// a root of unity is refused: all constructions here assume generic `q`.
    pub fn specialize(&self, bindings: &[(Var, RatFunc)]) -> Result<Self> {
        let mut sub = Substitution::identity();
        for (v, value) in bindings {
            if v.is_q() {
                if let Some(c) = value.as_constant() {
                    if c.is_zero() || c.is_root_of_unity() {
                        return Err(Error::ForbiddenSpecialization(format!(
                            "{v} must not be zero or a root of unity, got {c}"
                        )));
                    }
                }
            }
            sub.insert(*v, value.clone());
        }
        sub.apply(self)
    }

    /// The q-integer `[a]_q = (q^a - 1)/(q - 1)` of a parameter, computed as a
    /// quotient of rational functions.
    pub fn q_integer(param: &RatFunc, a: i64) -> Result<Self> {
        let numer = param.pow(a)?.sub(&Self::one());
        numer.div(&param.sub(&Self::one()))
    }

    pub fn parse(text: &str) -> Result<Self> {
        crate::expr::parse_scalar(text)
    }

    pub fn to_json(&self) -> RatFuncJson {
        let vars: Vec<Var> = self.vars().into_iter().collect();
        let encode = |p: &MultiPoly| {
            p.terms()
                .rev()
                .map(|(m, c)| (vars.iter().map(|v| m.exponent(*v)).collect(), c.to_string()))
                .collect()
        };
        RatFuncJson {
            vars: vars.iter().map(Var::to_string).collect(),
            num: encode(&self.num),
            den: encode(&self.den),
        }
    }

    pub fn from_json(json: &RatFuncJson) -> Result<Self> {
        let vars: Vec<Var> = json
            .vars
            .iter()
            .map(|s| s.parse())
            .collect::<Result<_>>()?;
        let decode = |terms: &[(Vec<u32>, String)]| -> Result<MultiPoly> {
            let mut out = Vec::new();
            for (exps, coeff) in terms {
                if exps.len() != vars.len() {
                    return Err(Error::Parse("exponent vector length mismatch".into()));
                }
                let c = Self::parse(coeff)?
                    .as_constant()
                    .ok_or_else(|| Error::Parse(format!("non-constant coefficient `{coeff}`")))?;
                let m = Monomial::from_pairs(vars.iter().copied().zip(exps.iter().copied()));
                out.push((m, c));
            }
            Ok(MultiPoly::from_terms(out))
        };
        Self::new(decode(&json.num)?, decode(&json.den)?)
    }
}

/// JSON form: each term is `[exponents over vars, coefficient]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub vars: Vec<String>,
    pub num: Vec<(Vec<u32>, String)>,
    pub den: Vec<(Vec<u32>, String)>,
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = self.num.to_string();
        let den = self.den.to_string();
        let num = if self.num.len() > 1 || num.contains(' ') {
            format!("({num})")
        } else {
            num
        };
        let den = if self.den.len() > 1 || den.contains(['*', '(', ' ']) {
            format!("({den})")
        } else {
            den
        };
        write!(f, "{num}/{den}")
    }
}

impl std::ops::Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::add(self, rhs)
    }
}

impl std::ops::Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::sub(self, rhs)
    }
}

impl std::ops::Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::mul(self, rhs)
    }
}

impl std::ops::Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFunc {
        RatFunc::parse(s).unwrap()
    }

    #[test]
    fn field_examples() {
        let inv = RatFunc::one().div(&rf("q - 1")).unwrap();
        assert!(inv.mul(&rf("q - 1")).is_one());
        assert_eq!(rf("(q^2 - 1)/(q - 1)"), rf("q + 1"));
        let q = RatFunc::var(Var::q());
        assert_eq!(RatFunc::q_integer(&q, 3).unwrap(), rf("1 + q + q^2"));
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let f = rf("(2*q + 2)/(4*x1 - 2)");
        assert_eq!(f.to_string(), "(1/2*q + 1/2)/(x1 - 1/2)");
        assert_eq!(f, rf("(q + 1)/(2*x1 - 1)"));
        assert_eq!(rf("x1/(2*x1^2)"), rf("(1/2)/x1"));
        assert_eq!(rf("(x1*q - q)/(x1^2 - 1)"), rf("q/(x1 + 1)"));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(RatFunc::one().div(&RatFunc::zero()), Err(Error::DivisionByZero));
        assert_eq!(RatFunc::new(MultiPoly::one(), MultiPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn specialization() {
        let q = Var::q();
        assert_eq!(rf("q + 1").specialize(&[(q, RatFunc::from_int(2))]).unwrap(), RatFunc::from_int(3));
        assert_eq!(
            rf("1/(x1 - 1)").specialize(&[(Var::X(1), RatFunc::one())]),
            Err(Error::DivisionByZero)
        );
        assert!(matches!(
            rf("x1").specialize(&[(q, RatFunc::root_of_unity(3, 1))]),
            Err(Error::ForbiddenSpecialization(_))
        ));
        assert!(matches!(
            rf("x1").specialize(&[(q, RatFunc::from_int(-1))]),
            Err(Error::ForbiddenSpecialization(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let f = rf("((2*z4 + 1)*q^2*x1 - 3)/(q*x1 + z3)");
        let json = serde_json::to_string(&f.to_json()).unwrap();
        let back: RatFuncJson = serde_json::from_str(&json).unwrap();
        assert_eq!(RatFunc::from_json(&back).unwrap(), f);
    }
}
