//! Quantum affine spaces, quantum tori and quantum Weyl algebras in the
//! normal form `c * x1^a1 ... xn^an * y1^b1 ... yn^bn`.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coeff::{join_signed, signed_term, RatFunc};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::expr;
use crate::verify::{Presentation, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `y_i x_i = q_i x_i y_i`
    Affine,
    /// the affine relations with every generator inverted
    Torus,
    /// `y_i x_i = q_i x_i y_i + 1`
    Weyl,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Affine => "affine",
            Family::Torus => "torus",
            Family::Weyl => "weyl",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QAlgebraKind {
    family: Family,
    n: usize,
    params: Vec<RatFunc>,
}

impl QAlgebraKind {
    pub fn new(family: Family, params: Vec<RatFunc>) -> Result<Arc<Self>> {
        if params.is_empty() {
            return Err(Error::InvalidData("rank must be at least 1".into()));
        }
        for p in &params {
            if p.is_zero() {
                return Err(Error::InvalidData("parameters must be nonzero".into()));
            }
            if let Some(c) = p.as_constant() {
                if c.is_root_of_unity() {
                    return Err(Error::ForbiddenSpecialization(format!(
                        "parameter {c} is a root of unity"
                    )));
                }
            }
            if p.vars().iter().any(|v| !v.is_q()) {
                return Err(Error::InvalidData(format!(
                    "parameter `{p}` may only involve q-variables"
                )));
            }
        }
        Ok(Arc::new(QAlgebraKind {
            family,
            n: params.len(),
            params,
        }))
    }

    /// All parameters equal to `param`.
    pub fn uniform(family: Family, n: usize, param: RatFunc) -> Result<Arc<Self>> {
        Self::new(family, vec![param; n])
    }

    pub fn standard(family: Family, n: usize) -> Arc<Self> {
        Self::uniform(family, n, RatFunc::var(crate::coeff::Var::q())).expect("q is generic")
    }

    /// `family:n` or `family:n:param`, e.g. `weyl:2`, `affine:1:q^3`.
    pub fn parse_spec(spec: &str) -> Result<Arc<Self>> {
        let mut parts = spec.splitn(3, ':');
        let family = match parts.next().unwrap_or("") {
            "affine" => Family::Affine,
            "torus" => Family::Torus,
            "weyl" => Family::Weyl,
            other => return Err(Error::Parse(format!("unknown algebra family `{other}`"))),
        };
        let n: usize = parts
            .next()
            .and_then(|s| s.trim().parse().ok())
            .filter(|&n| n >= 1)
            .ok_or_else(|| Error::Parse(format!("bad rank in `{spec}`")))?;
        let param = match parts.next() {
            Some(p) => RatFunc::parse(p)?,
            None => RatFunc::var(crate::coeff::Var::q()),
        };
        Self::uniform(family, n, param)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn params(&self) -> &[RatFunc] {
        &self.params
    }

    pub fn spec(&self) -> String {
        let first = &self.params[0];
        if self.params.iter().all(|p| p == first) {
            if *first == RatFunc::var(crate::coeff::Var::q()) {
                return format!("{}:{}", self.family.name(), self.n);
            }
            return format!("{}:{}:{}", self.family.name(), self.n, first);
        }
        let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        format!("{}:{}:[{}]", self.family.name(), self.n, ps.join(", "))
    }

    fn allows_negative(&self) -> bool {
        self.family == Family::Torus
    }

    pub fn x_name(&self, i: usize) -> String {
        if self.n == 1 {
            "x".into()
        } else {
            format!("x{}", i + 1)
        }
    }

    pub fn y_name(&self, i: usize) -> String {
        if self.n == 1 {
            "y".into()
        } else {
            format!("y{}", i + 1)
        }
    }

    /// Index lookup for `x1`, `y2`, ..., also `x`/`y` when `n = 1`.
    fn generator_index(&self, name: &str) -> Option<(bool, usize, bool)> {
        let is_x = match name.chars().next()? {
            'x' => true,
            'y' => false,
            _ => return None,
        };
        let (inv, rest) = match name[1..].strip_prefix("inv") {
            Some(rest) => (true, rest),
            None => (false, &name[1..]),
        };
        if inv && self.family != Family::Torus {
            return None;
        }
        let i = if rest.is_empty() {
            if self.n != 1 {
                return None;
            }
            0
        } else {
            if rest.starts_with('0') {
                return None;
            }
            let k: usize = rest.parse().ok()?;
            if k == 0 || k > self.n {
                return None;
            }
            k - 1
        };
        Some((is_x, i, inv))
    }

    pub fn generator(self: &Arc<Self>, name: &str) -> Option<QAlgebraElement> {
        let (is_x, i, inv) = self.generator_index(name)?;
        let e = if inv { -1 } else { 1 };
        let mut a = vec![0; self.n];
        let mut b = vec![0; self.n];
        if is_x {
            a[i] = e;
        } else {
            b[i] = e;
        }
        Some(QAlgebraElement::monomial(self, QMonomial { a, b }, RatFunc::one()))
    }

    pub fn parse_element(self: &Arc<Self>, text: &str) -> Result<QAlgebraElement> {
        let unit = QAlgebraElement::one(self);
        expr::eval(&expr::parse(text)?, &|s| self.generator(s), &unit)
    }

    /// Generator names of the presentation: `x_i, y_i` and, for the torus,
    /// `xinv_i, yinv_i`.
    pub fn generator_names(&self) -> Vec<String> {
        let mut names = Vec::new();
        for i in 0..self.n {
            names.push(self.x_name(i));
        }
        for i in 0..self.n {
            names.push(self.y_name(i));
        }
        if self.family == Family::Torus {
            for i in 0..self.n {
                names.push(inv_name(&self.x_name(i)));
            }
            for i in 0..self.n {
                names.push(inv_name(&self.y_name(i)));
            }
        }
        names
    }

    /// Generator elements in the order of [`Self::generator_names`].
    pub fn generators(self: &Arc<Self>) -> Vec<QAlgebraElement> {
        self.generator_names()
            .iter()
            .map(|s| self.generator(s).expect("own generator"))
            .collect()
    }

    pub fn presentation(&self) -> Presentation {
        let mut rels = Vec::new();
        for i in 0..self.n {
            let (x, y) = (self.x_name(i), self.y_name(i));
            let q = &self.params[i];
            let tail = if self.family == Family::Weyl { " - 1" } else { "" };
            rels.push(format!("{y}*{x} - ({q})*{x}*{y}{tail}"));
        }
        for i in 0..self.n {
            for j in i + 1..self.n {
                let (xi, yi, xj, yj) = (self.x_name(i), self.y_name(i), self.x_name(j), self.y_name(j));
                for (u, v) in [(&xi, &xj), (&yi, &yj), (&xi, &yj), (&yi, &xj)] {
                    rels.push(format!("{u}*{v} - {v}*{u}"));
                }
            }
        }
        if self.family == Family::Torus {
            for i in 0..self.n {
                for g in [self.x_name(i), self.y_name(i)] {
                    let inv = inv_name(&g);
                    rels.push(format!("{g}*{inv} - 1"));
                    rels.push(format!("{inv}*{g} - 1"));
                }
            }
        }
        Presentation::new(self.generator_names(), &rels).expect("well-formed relations")
    }
}

fn inv_name(g: &str) -> String {
    let (head, idx) = g.split_at(1);
    format!("{head}inv{idx}")
}

/// Exponents `(a, b)` of `x^a y^b`, ordered graded-lexicographically on
/// `(x1, ..., xn, y1, ..., yn)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QMonomial {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl QMonomial {
    pub fn one(n: usize) -> Self {
        QMonomial {
            a: vec![0; n],
            b: vec![0; n],
        }
    }

    pub fn degree(&self) -> i64 {
        self.a.iter().chain(&self.b).sum()
    }

    pub fn is_one(&self) -> bool {
        self.a.iter().chain(&self.b).all(|&e| e == 0)
    }

    fn render(&self, kind: &QAlgebraKind) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.a.iter().enumerate() {
            push_power(&mut parts, kind.x_name(i), e);
        }
        for (i, &e) in self.b.iter().enumerate() {
            push_power(&mut parts, kind.y_name(i), e);
        }
        parts.join("*")
    }
}

pub(crate) fn push_power(parts: &mut Vec<String>, name: String, e: i64) {
    match e {
        0 => {}
        1 => parts.push(name),
        _ => parts.push(format!("{name}^{e}")),
    }
}

impl Ord for QMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.a.cmp(&other.a))
            .then_with(|| self.b.cmp(&other.b))
    }
}

impl PartialOrd for QMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug)]
pub struct QAlgebraElement {
    kind: Arc<QAlgebraKind>,
    terms: BTreeMap<QMonomial, RatFunc>,
}

impl PartialEq for QAlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.kind, &other.kind) || self.kind == other.kind) && self.terms == other.terms
    }
}

impl Eq for QAlgebraElement {}

impl QAlgebraElement {
    pub fn zero(kind: &Arc<QAlgebraKind>) -> Self {
        QAlgebraElement {
            kind: kind.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(kind: &Arc<QAlgebraKind>) -> Self {
        Self::monomial(kind, QMonomial::one(kind.n), RatFunc::one())
    }

    pub fn scalar(kind: &Arc<QAlgebraKind>, c: RatFunc) -> Self {
        Self::monomial(kind, QMonomial::one(kind.n), c)
    }

    /// Panics if the exponents do not fit the kind; see [`Self::try_monomial`].
    pub fn monomial(kind: &Arc<QAlgebraKind>, m: QMonomial, c: RatFunc) -> Self {
        Self::try_monomial(kind, m, c).expect("monomial fits the algebra")
    }

    pub fn try_monomial(kind: &Arc<QAlgebraKind>, m: QMonomial, c: RatFunc) -> Result<Self> {
        if m.a.len() != kind.n || m.b.len() != kind.n {
            return Err(Error::InvalidData(format!(
                "exponent vectors must have length {}",
                kind.n
            )));
        }
        if !kind.allows_negative() && m.a.iter().chain(&m.b).any(|&e| e < 0) {
            return Err(Error::KindMismatch(format!(
                "negative exponents need a torus, not {}",
                kind.family.name()
            )));
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Ok(QAlgebraElement {
            kind: kind.clone(),
            terms,
        })
    }

    pub fn from_terms(
        kind: &Arc<QAlgebraKind>,
        terms: impl IntoIterator<Item = (QMonomial, RatFunc)>,
    ) -> Result<Self> {
        let mut out = Self::zero(kind);
        for (m, c) in terms {
            out = out.add(&Self::try_monomial(kind, m, c)?)?;
        }
        Ok(out)
    }

    pub fn x(kind: &Arc<QAlgebraKind>, i: usize) -> Self {
        kind.generator(&kind.x_name(i)).expect("index in range")
    }

    pub fn y(kind: &Arc<QAlgebraKind>, i: usize) -> Self {
        kind.generator(&kind.y_name(i)).expect("index in range")
    }

    pub fn kind(&self) -> &Arc<QAlgebraKind> {
        &self.kind
    }

    pub fn terms(&self) -> &BTreeMap<QMonomial, RatFunc> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_monomial(&self) -> Option<(&QMonomial, &RatFunc)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(QMonomial::degree).max()
    }

    /// The sum of the terms of largest total degree.
    pub fn top_component(&self) -> Self {
        let Some(d) = self.total_degree() else {
            return self.clone();
        };
        QAlgebraElement {
            kind: self.kind.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn same_kind(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.kind, &other.kind) || self.kind == other.kind {
            Ok(())
        } else {
            Err(Error::KindMismatch(format!(
                "{} vs {}",
                self.kind.spec(),
                other.kind.spec()
            )))
        }
    }

    fn add_term(terms: &mut BTreeMap<QMonomial, RatFunc>, m: QMonomial, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_kind(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(QAlgebraElement {
            kind: self.kind.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        self.scale(&RatFunc::from_int(-1))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(&self.kind);
        }
        QAlgebraElement {
            kind: self.kind.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, d)| (m.clone(), c.mul(d)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_kind(other)?;
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1.mul(c2);
                for (m, k) in mul_monomials(&self.kind, m1, m2) {
                    Self::add_term(&mut terms, m, c.mul(&k));
                }
            }
        }
        Ok(QAlgebraElement {
            kind: self.kind.clone(),
            terms,
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.kind);
        for _ in 0..k {
            acc = acc.mul(self).expect("same kind");
        }
        acc
    }

    /// Two-sided inverse of a single torus monomial:
    /// `(c x^a y^b)^-1 = c^-1 q^(a.b) x^-a y^-b`.
    pub fn invert_monomial(&self) -> Result<Self> {
        if self.kind.family != Family::Torus {
            return Err(Error::KindMismatch(format!(
                "monomials of {} are not invertible",
                self.kind.family.name()
            )));
        }
        let (m, c) = self.as_monomial().ok_or(Error::NotAMonomial)?;
        let mut coeff = c.inv()?;
        for i in 0..self.kind.n {
            coeff = coeff.mul(&self.kind.params[i].pow(m.a[i] * m.b[i])?);
        }
        let inv = QMonomial {
            a: m.a.iter().map(|e| -e).collect(),
            b: m.b.iter().map(|e| -e).collect(),
        };
        Ok(Self::monomial(&self.kind, inv, coeff))
    }

    /// The same element written as a word in the generators of `pres`, which
    /// must use this kind's generator names.
    pub fn to_word(&self, pres: &Presentation) -> Result<Word> {
        let mut out = Word::zero(pres);
        for (m, c) in &self.terms {
            let mut seq = Vec::new();
            for (i, &e) in m.a.iter().enumerate() {
                push_letters(&mut seq, pres, &self.kind.x_name(i), e)?;
            }
            for (i, &e) in m.b.iter().enumerate() {
                push_letters(&mut seq, pres, &self.kind.y_name(i), e)?;
            }
            out = out.add(&Word::monomial(pres, seq, c.clone()));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> QAlgebraJson {
        QAlgebraJson {
            kind: self.kind.family,
            n: self.kind.n,
            params: self.kind.params.iter().map(|p| p.to_string()).collect(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| QTermJson {
                    a: m.a.clone(),
                    b: m.b.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &QAlgebraJson) -> Result<Self> {
        let params = if json.params.is_empty() {
            vec![RatFunc::var(crate::coeff::Var::q()); json.n]
        } else {
            json.params
                .iter()
                .map(|p| RatFunc::parse(p))
                .collect::<Result<Vec<_>>>()?
        };
        if params.len() != json.n {
            return Err(Error::InvalidData("one parameter per index expected".into()));
        }
        let kind = QAlgebraKind::new(json.kind, params)?;
        let terms = json
            .terms
            .iter()
            .map(|t| {
                Ok((
                    QMonomial {
                        a: t.a.clone(),
                        b: t.b.clone(),
                    },
                    RatFunc::parse(&t.coeff)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(&kind, terms)
    }
}

fn push_letters(seq: &mut Vec<usize>, pres: &Presentation, name: &str, e: i64) -> Result<()> {
    let letter = if e < 0 { inv_name(name) } else { name.to_string() };
    let idx = pres
        .index_of(&letter)
        .ok_or_else(|| Error::MissingImage(letter.clone()))?;
    seq.extend(std::iter::repeat_n(idx, e.unsigned_abs() as usize));
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QTermJson {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QAlgebraJson {
    pub kind: Family,
    pub n: usize,
    #[serde(default)]
    pub params: Vec<String>,
    pub terms: Vec<QTermJson>,
}

/// `q`-integer `[k]_q = 1 + q + ... + q^(k-1)`.
fn q_int(q: &RatFunc, k: u32) -> RatFunc {
    let mut acc = RatFunc::zero();
    let mut p = RatFunc::one();
    for _ in 0..k {
        acc = acc.add(&p);
        p = p.mul(q);
    }
    acc
}

thread_local! {
    static WEYL_CACHE: RefCell<HashMap<(RatFunc, u32, u32), Arc<Vec<RatFunc>>>> =
        RefCell::new(HashMap::new());
}

/// Coefficients `c_k` of `y^b x^a = sum_k c_k x^(a-k) y^(b-k)` in `A_1^q`:
/// `c_k = [b choose k]_q [a]_q [a-1]_q ... [a-k+1]_q q^((a-k)(b-k))`.
pub fn weyl_reorder_coefficients(q: &RatFunc, b: u32, a: u32) -> Arc<Vec<RatFunc>> {
    let key = (q.clone(), b, a);
    if let Some(hit) = WEYL_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    // Pascal rule [n choose k] = [n-1 choose k-1] + q^k [n-1 choose k]
    let mut binom = vec![RatFunc::one()];
    for row in 1..=b as usize {
        let mut next = vec![RatFunc::one(); row + 1];
        for k in 1..row {
            next[k] = binom[k - 1].add(&q.pow(k as i64).expect("nonzero").mul(&binom[k]));
        }
        binom = next;
    }
    let kmax = a.min(b);
    let mut out = Vec::with_capacity(kmax as usize + 1);
    let mut falling = RatFunc::one();
    for k in 0..=kmax {
        if k > 0 {
            falling = falling.mul(&q_int(q, a - k + 1));
        }
        let shift = q.pow(((a - k) * (b - k)) as i64).expect("nonzero");
        out.push(binom[k as usize].mul(&falling).mul(&shift));
    }
    let out = Arc::new(out);
    WEYL_CACHE.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

fn mul_monomials(kind: &QAlgebraKind, m1: &QMonomial, m2: &QMonomial) -> Vec<(QMonomial, RatFunc)> {
    let n = kind.n;
    match kind.family {
        Family::Affine | Family::Torus => {
            // y^b x^c = q^(b c) x^c y^b, index by index
            let mut coeff = RatFunc::one();
            for i in 0..n {
                let e = m1.b[i] * m2.a[i];
                if e != 0 {
                    coeff = coeff.mul(&kind.params[i].pow(e).expect("nonzero parameter"));
                }
            }
            let m = QMonomial {
                a: (0..n).map(|i| m1.a[i] + m2.a[i]).collect(),
                b: (0..n).map(|i| m1.b[i] + m2.b[i]).collect(),
            };
            vec![(m, coeff)]
        }
        Family::Weyl => {
            let mut acc = vec![(QMonomial::one(n), RatFunc::one())];
            for i in 0..n {
                let (b, a) = (m1.b[i] as u32, m2.a[i] as u32);
                let coeffs = weyl_reorder_coefficients(&kind.params[i], b, a);
                let mut next = Vec::with_capacity(acc.len() * coeffs.len());
                for (m, c) in &acc {
                    for (k, ck) in coeffs.iter().enumerate() {
                        let k = k as i64;
                        let mut m = m.clone();
                        m.a[i] = m1.a[i] + m2.a[i] - k;
                        m.b[i] = m1.b[i] + m2.b[i] - k;
                        next.push((m, c.mul(ck)));
                    }
                }
                acc = next;
            }
            acc
        }
    }
}

/// Both sides of `y x^a = q^a x^a y + [a]_q x^(a-1)` in `A_1^q`: the left by
/// multiplication, the right from the closed form with
/// `[a]_q = (q^a - 1)/(q - 1)`.
pub fn weyl_power_identity(a: u32) -> (QAlgebraElement, QAlgebraElement) {
    let kind = QAlgebraKind::standard(Family::Weyl, 1);
    let x = QAlgebraElement::x(&kind, 0);
    let y = QAlgebraElement::y(&kind, 0);
    let lhs = y.mul(&x.pow(a)).expect("same kind");
    let q = RatFunc::var(crate::coeff::Var::q());
    let a = a as i64;
    let mut rhs = QAlgebraElement::monomial(
        &kind,
        QMonomial {
            a: vec![a],
            b: vec![1],
        },
        q.pow(a).expect("nonzero"),
    );
    if a > 0 {
        let qa = RatFunc::q_integer(&q, a).expect("q is not 1");
        let tail = QAlgebraElement::monomial(
            &kind,
            QMonomial {
                a: vec![a - 1],
                b: vec![0],
            },
            qa,
        );
        rhs = rhs.add(&tail).expect("same kind");
    }
    (lhs, rhs)
}

impl fmt::Display for QAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<(bool, String)> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| signed_term(c, &m.render(&self.kind)))
            .collect();
        f.write_str(&join_signed(&parts))
    }
}

impl Element for QAlgebraElement {
    fn one_like(&self) -> Self {
        Self::one(&self.kind)
    }

    fn zero_like(&self) -> Self {
        Self::zero(&self.kind)
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        self.add(other)
    }

    fn try_mul(&self, other: &Self) -> Result<Self> {
        self.mul(other)
    }

    fn scale(&self, c: &RatFunc) -> Self {
        QAlgebraElement::scale(self, c)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn try_inverse(&self) -> Result<Self> {
        if let Some((m, c)) = self.as_monomial() {
            if m.is_one() {
                return Ok(Self::scalar(&self.kind, c.inv()?));
            }
        }
        self.invert_monomial()
    }
}
