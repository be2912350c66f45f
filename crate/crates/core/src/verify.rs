//! Free words over named generators, presentations, generator maps and the
//! certificates produced by checking them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coeff::{join_signed, signed_term, RatFunc};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::expr;

/// A noncommutative polynomial: generator index sequences with scalar
/// coefficients.
#[derive(Clone, Debug)]
pub struct Word {
    gens: Arc<Vec<String>>,
    terms: BTreeMap<Vec<usize>, RatFunc>,
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens && self.terms == other.terms
    }
}

impl Eq for Word {}

impl Word {
    pub fn zero(pres: &Presentation) -> Self {
        Word {
            gens: pres.generators.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(pres: &Presentation) -> Self {
        Self::monomial(pres, Vec::new(), RatFunc::one())
    }

    pub fn monomial(pres: &Presentation, letters: Vec<usize>, c: RatFunc) -> Self {
        let mut w = Self::zero(pres);
        if !c.is_zero() {
            w.terms.insert(letters, c);
        }
        w
    }

    pub fn generator(pres: &Presentation, i: usize) -> Self {
        Self::monomial(pres, vec![i], RatFunc::one())
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, RatFunc> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(terms: &mut BTreeMap<Vec<usize>, RatFunc>, k: Vec<usize>, c: RatFunc) {
        let s = match terms.remove(&k) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !s.is_zero() {
            terms.insert(k, s);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            Self::insert(&mut terms, k.clone(), c.clone());
        }
        Word {
            gens: self.gens.clone(),
            terms,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let mut k = k1.clone();
                k.extend_from_slice(k2);
                Self::insert(&mut terms, k, c1.mul(c2));
            }
        }
        Word {
            gens: self.gens.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Word {
                gens: self.gens.clone(),
                terms: BTreeMap::new(),
            };
        }
        Word {
            gens: self.gens.clone(),
            terms: self.terms.iter().map(|(k, d)| (k.clone(), c.mul(d))).collect(),
        }
    }

    /// Substitute `images[i]` for generator `i`.
    pub fn eval<E: Element>(&self, images: &[E]) -> Result<E> {
        let unit = images
            .first()
            .ok_or_else(|| Error::MissingImage("no generator images".into()))?
            .one_like();
        let opts: Vec<Option<&E>> = images.iter().map(Some).collect();
        self.eval_with(&opts, &unit)
    }

    fn eval_with<E: Element>(&self, images: &[Option<&E>], unit: &E) -> Result<E> {
        let mut acc = unit.zero_like();
        for (letters, c) in &self.terms {
            let mut prod = unit.clone();
            for &l in letters {
                let img = images
                    .get(l)
                    .copied()
                    .flatten()
                    .ok_or_else(|| Error::MissingImage(self.gens[l].clone()))?;
                prod = prod.try_mul(img)?;
            }
            acc = acc.try_add(&prod.scale(c))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<&Vec<usize>> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let parts: Vec<(bool, String)> = keys
            .into_iter()
            .map(|k| {
                let body: Vec<&str> = k.iter().map(|&i| self.gens[i].as_str()).collect();
                signed_term(&self.terms[k], &body.join("*"))
            })
            .collect();
        f.write_str(&join_signed(&parts))
    }
}

impl Element for Word {
    fn one_like(&self) -> Self {
        Word {
            gens: self.gens.clone(),
            terms: BTreeMap::from([(Vec::new(), RatFunc::one())]),
        }
    }

    fn zero_like(&self) -> Self {
        Word {
            gens: self.gens.clone(),
            terms: BTreeMap::new(),
        }
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(self.add(other))
    }

    fn try_mul(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(other))
    }

    fn scale(&self, c: &RatFunc) -> Self {
        Word::scale(self, c)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Generators and defining relations `r = 0` of a presented algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Arc<Vec<String>>,
    relations: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relations: &[impl AsRef<str>]) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(Error::InvalidData(format!("duplicate generator `{g}`")));
            }
        }
        let mut pres = Presentation {
            generators: Arc::new(generators),
            relations: Vec::new(),
        };
        for r in relations {
            let w = pres.parse_word(r.as_ref())?;
            if w.is_zero() {
                return Err(Error::InvalidData(format!(
                    "relation `{}` is identically zero",
                    r.as_ref()
                )));
            }
            pres.relations.push(w);
        }
        Ok(pres)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[Word] {
        &self.relations
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Parse a word; generator names take precedence over scalar symbols.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let unit = Word::one(self);
        expr::eval(
            &expr::parse(text)?,
            &|s| self.index_of(s).map(|i| Word::generator(self, i)),
            &unit,
        )
    }
}

/// A claimed algebra map, given by the images of the generators of `source`.
#[derive(Clone, Debug)]
pub struct GenMap<E> {
    source: Presentation,
    unit: E,
    images: Vec<Option<E>>,
}

impl<E: Element> GenMap<E> {
    pub fn new(source: Presentation, unit: E) -> Self {
        let images = vec![None; source.generators.len()];
        GenMap {
            source,
            unit,
            images,
        }
    }

    pub fn from_images(source: Presentation, images: Vec<E>) -> Result<Self> {
        if images.len() != source.generators.len() {
            return Err(Error::InvalidData(format!(
                "{} images for {} generators",
                images.len(),
                source.generators.len()
            )));
        }
        let unit = images
            .first()
            .ok_or_else(|| Error::InvalidData("presentation without generators".into()))?
            .one_like();
        Ok(GenMap {
            source,
            unit,
            images: images.into_iter().map(Some).collect(),
        })
    }

    pub fn set(&mut self, name: &str, image: E) -> Result<()> {
        let i = self
            .source
            .index_of(name)
            .ok_or_else(|| Error::InvalidData(format!("`{name}` is not a generator")))?;
        self.images[i] = Some(image);
        Ok(())
    }

    pub fn with(mut self, name: &str, image: E) -> Result<Self> {
        self.set(name, image)?;
        Ok(self)
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn unit(&self) -> &E {
        &self.unit
    }

    pub fn image(&self, name: &str) -> Option<&E> {
        self.images[self.source.index_of(name)?].as_ref()
    }
}

pub fn eval_word<E: Element>(w: &Word, map: &GenMap<E>) -> Result<E> {
    let images: Vec<Option<&E>> = map.images.iter().map(Option::as_ref).collect();
    w.eval_with(&images, &map.unit)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub residual: String,
    pub passed: bool,
}

/// Pass/fail verdict plus one residual per check; a check passes when its
/// residual is exactly zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn new() -> Self {
        Certificate {
            passed: true,
            checks: Vec::new(),
        }
    }

    pub fn record<E: Element>(&mut self, label: impl Into<String>, residual: &E) {
        let passed = residual.is_zero();
        self.passed &= passed;
        self.checks.push(Check {
            label: label.into(),
            residual: residual.to_string(),
            passed,
        });
    }

    /// A check whose outcome is not a residual, such as a count comparison.
    pub fn record_flag(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.passed &= passed;
        self.checks.push(Check {
            label: label.into(),
            residual: detail.into(),
            passed,
        });
    }

    pub fn merge(&mut self, other: Certificate) {
        self.passed &= other.passed;
        self.checks.extend(other.checks);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Evaluate every defining relation of the source under `map`.
pub fn certify_hom<E: Element>(map: &GenMap<E>) -> Result<Certificate> {
    let mut cert = Certificate::new();
    for r in &map.source.relations {
        let residual = eval_word(r, map)?;
        cert.record(r.to_string(), &residual);
    }
    Ok(cert)
}

/// Check `phi(g(s)) = g(phi(s))` for every group generator `g` and source
/// generator `s`. `source_gens[i]` is the source element named by generator
/// `i` of the presentation, and `to_word` writes source elements as words.
pub fn certify_equivariance<G, S, T>(
    map: &GenMap<T>,
    source_gens: &[S],
    to_word: impl Fn(&S) -> Result<Word>,
    group_gens: &[G],
    act_source: impl Fn(&G, &S) -> Result<S>,
    act_target: impl Fn(&G, &T) -> Result<T>,
) -> Result<Certificate>
where
    G: fmt::Display,
    S: Element,
    T: Element,
{
    if source_gens.len() != map.source.generators.len() {
        return Err(Error::InvalidData("one source element per generator expected".into()));
    }
    let mut cert = Certificate::new();
    for g in group_gens {
        for (i, s) in source_gens.iter().enumerate() {
            let lhs = eval_word(&to_word(&act_source(g, s)?)?, map)?;
            let image = eval_word(&Word::generator(&map.source, i), map)?;
            let rhs = act_target(g, &image)?;
            cert.record(
                format!("{g} on {}", map.source.generators[i]),
                &lhs.try_sub(&rhs)?,
            );
        }
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_are_free() {
        let p = Presentation::new(vec!["a".into(), "b".into()], &["a*b - b*a"]).unwrap();
        let w = p.parse_word("(a + b)^2").unwrap();
        assert_eq!(w.to_string(), "a*a + a*b + b*a + b*b");
        assert_eq!(p.relations()[0].to_string(), "a*b - b*a");
    }

    #[test]
    fn rejects_bad_presentations() {
        assert!(Presentation::new(vec!["a".into(), "a".into()], &["a"]).is_err());
        assert!(Presentation::new(vec!["a".into()], &["a - a"]).is_err());
    }

    #[test]
    fn missing_image() {
        let p = Presentation::new(vec!["a".into(), "b".into()], &["a*b"]).unwrap();
        let map = GenMap::new(p.clone(), RatFunc::one())
            .with("a", RatFunc::from_int(2))
            .unwrap();
        assert_eq!(
            eval_word(&p.relations()[0], &map),
            Err(Error::MissingImage("b".into()))
        );
        assert_eq!(eval_word(&Word::one(&p), &map).unwrap(), RatFunc::one());
    }
}
