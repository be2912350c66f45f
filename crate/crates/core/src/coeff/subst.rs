use std::collections::BTreeMap;
use std::fmt;

use super::{MultiPoly, RatFunc, Var};
use crate::error::{Error, Result};

/// A field endomorphism of `Q(z)(vars)` given by the images of variables.
/// Variables outside the domain are fixed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Substitution {
    images: BTreeMap<Var, RatFunc>,
}

impl Substitution {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Var, image: RatFunc) -> Self {
        self.insert(v, image);
        self
    }

    pub fn insert(&mut self, v: Var, image: RatFunc) {
        if image == RatFunc::var(v) {
            self.images.remove(&v);
        } else {
            self.images.insert(v, image);
        }
    }

    pub fn image(&self, v: Var) -> RatFunc {
        self.images.get(&v).cloned().unwrap_or_else(|| RatFunc::var(v))
    }

    pub fn domain(&self) -> impl Iterator<Item = Var> + '_ {
        self.images.keys().copied()
    }

    pub fn images(&self) -> impl Iterator<Item = (Var, &RatFunc)> {
        self.images.iter().map(|(v, f)| (*v, f))
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of a polynomial as `(numerator, denominator)` over the common
    /// denominator of the variable images.
    fn apply_poly_parts(&self, p: &MultiPoly) -> (MultiPoly, MultiPoly) {
        let touched: Vec<(Var, &RatFunc, u32)> = self
            .images
            .iter()
            .filter_map(|(v, f)| {
                let d = p.degree_in(*v);
                (d > 0).then_some((*v, f, d))
            })
            .collect();
        if touched.is_empty() {
            return (p.clone(), MultiPoly::one());
        }
        let mut num_pows: BTreeMap<(Var, u32), MultiPoly> = BTreeMap::new();
        let mut den_pows: BTreeMap<(Var, u32), MultiPoly> = BTreeMap::new();
        let mut total = MultiPoly::zero();
        for (m, c) in p.terms() {
            let mut rest = Vec::new();
            let mut acc = MultiPoly::constant(c.clone());
            for &(v, e) in m.pairs() {
                match touched.iter().find(|t| t.0 == v) {
                    Some(&(_, f, maxd)) => {
                        let n = num_pows
                            .entry((v, e))
                            .or_insert_with(|| f.num().pow(e))
                            .clone();
                        acc = acc.mul(&n);
                        if !f.den().is_one() && maxd > e {
                            let d = den_pows
                                .entry((v, maxd - e))
                                .or_insert_with(|| f.den().pow(maxd - e))
                                .clone();
                            acc = acc.mul(&d);
                        }
                    }
                    None => rest.push((v, e)),
                }
            }
            // untouched variables of this term, plus den powers of touched
            // variables absent from it
            for &(v, f, maxd) in &touched {
                if m.exponent(v) == 0 && !f.den().is_one() {
                    let d = den_pows
                        .entry((v, maxd))
                        .or_insert_with(|| f.den().pow(maxd))
                        .clone();
                    acc = acc.mul(&d);
                }
            }
            let mono = super::Monomial::from_pairs(rest);
            total = total.add(&acc.mul_term(&mono, &super::Cyclotomic::one()));
        }
        let mut den = MultiPoly::one();
        for &(_, f, maxd) in &touched {
            if !f.den().is_one() {
                den = den.mul(&f.den().pow(maxd));
            }
        }
        (total, den)
    }

    pub fn apply(&self, f: &RatFunc) -> Result<RatFunc> {
        if self.is_identity() {
            return Ok(f.clone());
        }
        let (nn, nd) = self.apply_poly_parts(f.num());
        let (dn, dd) = self.apply_poly_parts(f.den());
        if dn.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(nn.mul(&dd), nd.mul(&dn))
    }

    /// `self` after `inner`: `v -> self(inner(v))`.
    pub fn compose(&self, inner: &Substitution) -> Result<Substitution> {
        let mut out = Substitution::identity();
        for (v, f) in &inner.images {
            out.insert(*v, self.apply(f)?);
        }
        for (v, f) in &self.images {
            if !inner.images.contains_key(v) {
                out.insert(*v, f.clone());
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Substitution> {
        let mut acc = Substitution::identity();
        for _ in 0..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.images.is_empty() {
            return f.write_str("id");
        }
        for (i, (v, img)) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v} -> {img}")?;
        }
        Ok(())
    }
}
