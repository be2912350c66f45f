//! Algebra specifications shared by the CLI, the claim manifest and the
//! FFI: one handle type covering every multiplication engine.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coeff::{RatFunc, Var};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::gwa::{gwa_data_by_label, gwa_instance, GwaData, GwaElement, GwaJson};
use crate::quantum::{Family, QAlgebraElement, QAlgebraJson, QAlgebraKind};
use crate::skew::{ActionJson, Ambient, MonoidAction, SkewElement, SkewJson};
use crate::verify::{GenMap, Presentation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Algebra {
    Quantum(Arc<QAlgebraKind>),
    Skew(Arc<MonoidAction>),
    Gwa(Arc<GwaData>),
}

fn rank(spec: &str, body: &str) -> Result<usize> {
    body.parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::Parse(format!("bad rank in `{spec}`")))
}

impl Algebra {
    /// `affine:n[:param]`, `torus:n`, `weyl:n`; `skew-affine:n` (`N^n`
    /// scaling `x_i` by `q`), `skew-torus:n` (the same over `Z^n`),
    /// `skew-weyl:n` (`h_i -> q^-1 (h_i - 1)` over `Z^n`); `gwa:<name>` for
    /// a catalog instance or `gwa:qweyl:n`.
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        let q = RatFunc::var(Var::q());
        let xs = |n: usize| -> Vec<Var> { (1..=n as u16).map(Var::X).collect() };
        if let Some(body) = spec.strip_prefix("skew-affine:") {
            let n = rank(spec, body)?;
            return Ok(Algebra::Skew(MonoidAction::q_scaling(Ambient::Nn, &xs(n), &q)?));
        }
        if let Some(body) = spec.strip_prefix("skew-torus:") {
            let n = rank(spec, body)?;
            return Ok(Algebra::Skew(MonoidAction::q_scaling(Ambient::Zn, &xs(n), &q)?));
        }
        if let Some(body) = spec.strip_prefix("skew-weyl:") {
            return Ok(Algebra::Skew(MonoidAction::weyl_shift(rank(spec, body)?, &q)?));
        }
        if let Some(label) = spec.strip_prefix("gwa:") {
            return Ok(Algebra::Gwa(gwa_data_by_label(label)?));
        }
        Ok(Algebra::Quantum(QAlgebraKind::parse_spec(spec)?))
    }

    pub fn from_action_json(json: &ActionJson) -> Result<Self> {
        Ok(Algebra::Skew(MonoidAction::from_json(json)?))
    }

    pub fn label(&self) -> String {
        match self {
            Algebra::Quantum(k) => k.spec(),
            Algebra::Skew(a) => format!("skew({:?}, rank {})", a.ambient(), a.rank()),
            Algebra::Gwa(d) => format!("gwa:{}", d.label()),
        }
    }

    pub fn one(&self) -> AnyElement {
        match self {
            Algebra::Quantum(k) => AnyElement::Quantum(QAlgebraElement::one(k)),
            Algebra::Skew(a) => AnyElement::Skew(SkewElement::one(a)),
            Algebra::Gwa(d) => AnyElement::Gwa(GwaElement::one(d)),
        }
    }

    pub fn parse_element(&self, text: &str) -> Result<AnyElement> {
        Ok(match self {
            Algebra::Quantum(k) => AnyElement::Quantum(k.parse_element(text)?),
            Algebra::Skew(a) => AnyElement::Skew(SkewElement::parse(a, text)?),
            Algebra::Gwa(d) => AnyElement::Gwa(d.parse_element(text)?),
        })
    }

    /// A presentation of the algebra together with the elements its
    /// generators name. Skew rings have no finite presentation here.
    pub fn presentation(&self) -> Result<(Presentation, Vec<AnyElement>)> {
        match self {
            Algebra::Quantum(k) => Ok((
                k.presentation(),
                k.generators().into_iter().map(AnyElement::Quantum).collect(),
            )),
            Algebra::Gwa(d) => {
                if let Some(n) = d.label().strip_prefix("qweyl:") {
                    let n: usize = n.parse().expect("label written by quantum_weyl");
                    let kind = QAlgebraKind::standard(Family::Weyl, n);
                    let images = kind
                        .generator_names()
                        .iter()
                        .map(|s| d.parse_element(&s.to_uppercase()).map(AnyElement::Gwa))
                        .collect::<Result<Vec<_>>>()?;
                    return Ok((kind.presentation(), images));
                }
                let inst = gwa_instance(d.label())?;
                Ok((
                    inst.presentation,
                    inst.images.into_iter().map(AnyElement::Gwa).collect(),
                ))
            }
            Algebra::Skew(_) => Err(Error::UndefinedAction(
                "skew monoid rings carry no presentation".into(),
            )),
        }
    }

    pub fn element_from_json(&self, json: &AnyJson) -> Result<AnyElement> {
        let u = AnyElement::from_json(json)?;
        if u.algebra() != *self {
            return Err(Error::KindMismatch(format!("element does not live in {}", self.label())));
        }
        Ok(u)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyElement {
    Quantum(QAlgebraElement),
    Skew(SkewElement),
    Gwa(GwaElement),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "engine", rename_all = "lowercase")]
pub enum AnyJson {
    Quantum(QAlgebraJson),
    Skew(SkewJson),
    Gwa(GwaJson),
}

fn mismatch(a: &AnyElement, b: &AnyElement) -> Error {
    Error::KindMismatch(format!("{} and {}", a.engine(), b.engine()))
}

impl AnyElement {
    pub fn engine(&self) -> &'static str {
        match self {
            AnyElement::Quantum(_) => "quantum",
            AnyElement::Skew(_) => "skew",
            AnyElement::Gwa(_) => "gwa",
        }
    }

    pub fn algebra(&self) -> Algebra {
        match self {
            AnyElement::Quantum(u) => Algebra::Quantum(u.kind().clone()),
            AnyElement::Skew(u) => Algebra::Skew(u.action().clone()),
            AnyElement::Gwa(u) => Algebra::Gwa(u.data().clone()),
        }
    }

    pub fn to_json(&self) -> AnyJson {
        match self {
            AnyElement::Quantum(u) => AnyJson::Quantum(u.to_json()),
            AnyElement::Skew(u) => AnyJson::Skew(u.to_json()),
            AnyElement::Gwa(u) => AnyJson::Gwa(u.to_json()),
        }
    }

    pub fn from_json(json: &AnyJson) -> Result<Self> {
        Ok(match json {
            AnyJson::Quantum(j) => AnyElement::Quantum(QAlgebraElement::from_json(j)?),
            AnyJson::Skew(j) => AnyElement::Skew(SkewElement::from_json(j)?),
            AnyJson::Gwa(j) => AnyElement::Gwa(GwaElement::from_json(j)?),
        })
    }
}

impl fmt::Display for AnyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyElement::Quantum(u) => u.fmt(f),
            AnyElement::Skew(u) => u.fmt(f),
            AnyElement::Gwa(u) => u.fmt(f),
        }
    }
}

impl Element for AnyElement {
    fn one_like(&self) -> Self {
        match self {
            AnyElement::Quantum(u) => AnyElement::Quantum(u.one_like()),
            AnyElement::Skew(u) => AnyElement::Skew(u.one_like()),
            AnyElement::Gwa(u) => AnyElement::Gwa(u.one_like()),
        }
    }

    fn zero_like(&self) -> Self {
        match self {
            AnyElement::Quantum(u) => AnyElement::Quantum(u.zero_like()),
            AnyElement::Skew(u) => AnyElement::Skew(u.zero_like()),
            AnyElement::Gwa(u) => AnyElement::Gwa(u.zero_like()),
        }
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(match (self, other) {
            (AnyElement::Quantum(a), AnyElement::Quantum(b)) => AnyElement::Quantum(a.try_add(b)?),
            (AnyElement::Skew(a), AnyElement::Skew(b)) => AnyElement::Skew(a.try_add(b)?),
            (AnyElement::Gwa(a), AnyElement::Gwa(b)) => AnyElement::Gwa(a.try_add(b)?),
            _ => return Err(mismatch(self, other)),
        })
    }

    fn try_mul(&self, other: &Self) -> Result<Self> {
        Ok(match (self, other) {
            (AnyElement::Quantum(a), AnyElement::Quantum(b)) => AnyElement::Quantum(a.try_mul(b)?),
            (AnyElement::Skew(a), AnyElement::Skew(b)) => AnyElement::Skew(a.try_mul(b)?),
            (AnyElement::Gwa(a), AnyElement::Gwa(b)) => AnyElement::Gwa(a.try_mul(b)?),
            _ => return Err(mismatch(self, other)),
        })
    }

    fn scale(&self, c: &RatFunc) -> Self {
        match self {
            AnyElement::Quantum(u) => AnyElement::Quantum(Element::scale(u, c)),
            AnyElement::Skew(u) => AnyElement::Skew(Element::scale(u, c)),
            AnyElement::Gwa(u) => AnyElement::Gwa(Element::scale(u, c)),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            AnyElement::Quantum(u) => Element::is_zero(u),
            AnyElement::Skew(u) => Element::is_zero(u),
            AnyElement::Gwa(u) => Element::is_zero(u),
        }
    }

    fn try_inverse(&self) -> Result<Self> {
        Ok(match self {
            AnyElement::Quantum(u) => AnyElement::Quantum(u.try_inverse()?),
            AnyElement::Skew(u) => AnyElement::Skew(u.try_inverse()?),
            AnyElement::Gwa(u) => AnyElement::Gwa(u.try_inverse()?),
        })
    }
}

/// A map into any algebra given by generator image expressions.
pub fn gen_map(
    source: &Presentation,
    target: &Algebra,
    images: &[(String, String)],
) -> Result<GenMap<AnyElement>> {
    let mut map = GenMap::new(source.clone(), target.one());
    for (name, text) in images {
        if source.index_of(name).is_none() {
            return Err(Error::Parse(format!("`{name}` is not a source generator")));
        }
        map.set(name, target.parse_element(text)?)?;
    }
    Ok(map)
}
