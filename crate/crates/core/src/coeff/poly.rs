//! Sparse multivariate polynomials with cyclotomic coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use super::{join_signed, Cyclotomic, Var};

/// Power product of variables, kept sorted by variable with positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut acc: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_default() += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .map(|&(v, e)| (v, e - other.exponent(v)))
                .filter(|&(_, e)| e > 0)
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .filter_map(|&(v, e)| {
                    let m = e.min(other.exponent(v));
                    (m > 0).then_some((v, m))
                })
                .collect(),
        )
    }

    fn without(&self, v: Var) -> Self {
        Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect())
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the larger exponent
    /// on the earliest variable wins.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (x, y) in self.0.iter().zip(other.0.iter()) {
                if x.0 != y.0 {
                    return if x.0 < y.0 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                }
                if x.1 != y.1 {
                    return x.1.cmp(&y.1);
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Cyclotomic>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Cyclotomic::one())
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v, 1), Cyclotomic::one())
    }

    pub fn term(m: Monomial, c: Cyclotomic) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Cyclotomic)>) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn as_constant(&self) -> Option<Cyclotomic> {
        match self.terms.len() {
            0 => Some(Cyclotomic::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<(&Monomial, &Cyclotomic)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Cyclotomic) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m1, c1)| (m1.mul(m), c1.mul(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scale so that the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_in(&self, v: Var, k: u32) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == k)
                .map(|(m, c)| (m.without(v), c.clone()))
                .collect(),
        }
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |acc, m| acc.gcd(m))
    }

    pub fn div_monomial(&self, m: &Monomial) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(t, c)| (t.div(m), c.clone())).collect(),
        }
    }

    /// Exact quotient `self / other`, or `None` when `other` does not divide.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        let (lm, lc) = other.leading()?;
        if other.is_monomial() {
            let inv = lc.inv().ok()?;
            if !self.terms.keys().all(|m| lm.divides(m)) {
                return None;
            }
            return Some(MultiPoly {
                terms: self
                    .terms
                    .iter()
                    .map(|(m, c)| (m.div(lm), c.mul(&inv)))
                    .collect(),
            });
        }
        let lc_inv = lc.inv().ok()?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((m, c)) = rem.leading() {
            if !lm.divides(m) {
                return None;
            }
            let tm = m.div(lm);
            let tc = c.mul(&lc_inv);
            rem = rem.sub(&other.mul_term(&tm, &tc));
            quot.add_term(tm, tc);
        }
        Some(quot)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.iter().rev() {
            let mono = m.to_string();
            let nonzero = c.coeffs().iter().filter(|x| !num_traits::Zero::is_zero(*x)).count();
            if c.is_rational() || nonzero == 1 {
                // single-term coefficient: keep the sign outside
                let s = c.to_string();
                let (neg, mag) = match s.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, s),
                };
                let body = match (mag == "1", mono.is_empty()) {
                    (true, false) => mono,
                    (_, true) => mag,
                    (false, false) => format!("{mag}*{mono}"),
                };
                parts.push((neg, body));
            } else if mono.is_empty() {
                parts.push((false, format!("({c})")));
            } else {
                parts.push((false, format!("({c})*{mono}")));
            }
        }
        f.write_str(&join_signed(&parts))
    }
}

/// Pseudo-remainder of `a` by `b` with respect to `v`.
fn prem(a: &MultiPoly, b: &MultiPoly, v: Var) -> MultiPoly {
    let db = b.degree_in(v);
    let lb = b.coeff_in(v, db);
    let mut r = a.clone();
    loop {
        let dr = r.degree_in(v);
        if r.is_zero() || dr < db {
            return r;
        }
        let lr = r.coeff_in(v, dr);
        let shift = Monomial::var(v, dr - db);
        r = r.mul(&lb).sub(&lr.mul(b).mul_term(&shift, &Cyclotomic::one()));
    }
}

fn content(a: &MultiPoly, v: Var) -> MultiPoly {
    let mut g = MultiPoly::zero();
    for k in (0..=a.degree_in(v)).rev() {
        let c = a.coeff_in(v, k);
        if c.is_zero() {
            continue;
        }
        g = poly_gcd(&g, &c);
        if g.is_constant() {
            return MultiPoly::one();
        }
    }
    g
}

fn primitive_part(a: &MultiPoly, v: Var) -> MultiPoly {
    let c = content(a, v);
    a.div_exact(&c).expect("content divides").monic()
}

/// Dense coefficients in `v` of `a` with every other variable set to its
/// value in `point`.
fn specialize_except(a: &MultiPoly, v: Var, point: &BTreeMap<Var, BigRational>) -> Vec<Cyclotomic> {
    let mut out = vec![Cyclotomic::zero(); a.degree_in(v) as usize + 1];
    for (m, c) in a.terms() {
        let mut value = BigRational::one();
        for &(w, e) in m.pairs() {
            if w != v {
                value *= num_traits::Pow::pow(&point[&w], e);
            }
        }
        let k = m.exponent(v) as usize;
        out[k] = out[k].add(&c.scale(&value));
    }
    while out.last().is_some_and(Cyclotomic::is_zero) {
        out.pop();
    }
    out
}

/// Degree of the univariate gcd over the coefficient field, by Euclid.
fn univariate_gcd_degree(mut a: Vec<Cyclotomic>, mut b: Vec<Cyclotomic>) -> usize {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let lb = b.last().unwrap().inv().expect("nonzero leading coefficient");
        while a.len() >= b.len() {
            let f = a.last().unwrap().mul(&lb);
            let shift = a.len() - b.len();
            for (i, c) in b.iter().enumerate() {
                a[shift + i] = a[shift + i].sub(&f.mul(c));
            }
            a.pop();
            while a.last().is_some_and(Cyclotomic::is_zero) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Cheap sufficient test for `gcd(a, b) = 1`. A common factor of positive
/// degree in `v` survives any specialization of the other variables that
/// keeps both leading coefficients in `v` nonzero, so coprime images in every
/// variable prove coprimality.
fn coprime_by_specialization(a: &MultiPoly, b: &MultiPoly, vars: &BTreeSet<Var>) -> bool {
    const VALUES: [i64; 8] = [3, -5, 7, 11, -13, 17, 19, -23];
    let point: BTreeMap<Var, BigRational> = vars
        .iter()
        .enumerate()
        .map(|(i, &w)| (w, BigRational::from_integer(VALUES[i % VALUES.len()].into())))
        .collect();
    vars.iter().all(|&v| {
        let (da, db) = (a.degree_in(v), b.degree_in(v));
        if da == 0 || db == 0 {
            return true;
        }
        let sa = specialize_except(a, v, &point);
        let sb = specialize_except(b, v, &point);
        sa.len() == da as usize + 1 && sb.len() == db as usize + 1 && univariate_gcd_degree(sa, sb) == 0
    })
}

/// Monic greatest common divisor, by recursive primitive remainder sequences.
pub fn poly_gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    if a.is_monomial() || b.is_monomial() {
        let (mono, other) = if a.is_monomial() { (a, b) } else { (b, a) };
        let m = mono.leading().unwrap().0.gcd(&other.monomial_content());
        return MultiPoly::term(m, Cyclotomic::one());
    }
    let va = a.vars();
    let vb = b.vars();
    let all: BTreeSet<Var> = va.union(&vb).copied().collect();
    if all.len() > 1 && coprime_by_specialization(a, b, &all) {
        return MultiPoly::one();
    }
    let v = *va.last().into_iter().chain(vb.last()).max().unwrap();
    let (da, db) = (a.degree_in(v), b.degree_in(v));
    let g = if da == 0 {
        poly_gcd(a, &content(b, v))
    } else if db == 0 {
        poly_gcd(&content(a, v), b)
    } else {
        let gc = poly_gcd(&content(a, v), &content(b, v));
        let (mut p, mut r) = (primitive_part(a, v), primitive_part(b, v));
        if p.degree_in(v) < r.degree_in(v) {
            std::mem::swap(&mut p, &mut r);
        }
        loop {
            let rem = prem(&p, &r, v);
            if rem.is_zero() {
                break;
            }
            if rem.degree_in(v) == 0 {
                r = MultiPoly::one();
                break;
            }
            p = r;
            r = primitive_part(&rem, v);
        }
        gc.mul(&r)
    };
    g.monic()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X(1))
    }
    fn y() -> MultiPoly {
        MultiPoly::var(Var::Y(1))
    }
    fn q() -> MultiPoly {
        MultiPoly::var(Var::q())
    }
    fn c(n: i64) -> MultiPoly {
        MultiPoly::constant(Cyclotomic::from_int(n))
    }

    #[test]
    fn graded_lex_order() {
        let qx = Monomial::from_pairs([(Var::q(), 1), (Var::X(1), 1)]);
        let x2 = Monomial::var(Var::X(1), 2);
        let q2 = Monomial::var(Var::q(), 2);
        assert!(q2 > qx && qx > x2);
        assert!(Monomial::var(Var::q(), 3) > q2);
    }

    #[test]
    fn display_matches_grammar() {
        let z4 = MultiPoly::constant(Cyclotomic::root(4));
        let p = z4
            .scale(&Cyclotomic::from_int(2))
            .add(&c(1))
            .mul(&q().pow(2))
            .mul(&x())
            .sub(&c(3));
        assert_eq!(p.to_string(), "(2*z4 + 1)*q^2*x1 - 3");
        assert_eq!(q().add(&c(1)).to_string(), "q + 1");
        assert_eq!(MultiPoly::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a = q().pow(2).sub(&c(1));
        let b = q().sub(&c(1));
        assert_eq!(a.div_exact(&b), Some(q().add(&c(1))));
        assert_eq!(a.div_exact(&q()), None);
        assert_eq!(q().add(&c(1)).div_exact(&b), None);
    }

    #[test]
    fn gcd_multivariate() {
        let f = x().add(&y()).mul(&q().sub(&c(1)));
        let g = x().add(&y()).mul(&q().add(&c(2)));
        assert_eq!(poly_gcd(&f, &g), x().add(&y()));
        let h = x().mul(&y()).mul(&q());
        assert_eq!(poly_gcd(&h, &x().pow(2).mul(&q())), x().mul(&q()));
        assert!(poly_gcd(&x().add(&c(1)), &x().sub(&c(1))).is_one());
        // gcd is monic even with cyclotomic leading coefficients
        let z3 = MultiPoly::constant(Cyclotomic::root(3));
        let f = z3.mul(&x()).add(&c(1)).mul(&q().add(&c(5)));
        let g = z3.mul(&x()).add(&c(1)).mul(&q().sub(&c(5)));
        let expected = z3.mul(&x()).add(&c(1)).monic();
        assert_eq!(poly_gcd(&f, &g), expected);
    }
}
