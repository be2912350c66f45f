//! Skew monoid rings `L * M` for `M = N^n` or `Z^n`, where the basis vector
//! `e_i` acts on the rational function field `L` by a substitution.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::coeff::{join_signed, signed_term, RatFunc, Substitution, Var};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::expr;
use crate::quantum::push_power;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ambient {
    #[serde(rename = "N")]
    Nn,
    #[serde(rename = "Z")]
    Zn,
}

/// Commuting substitutions `sigma_1, ..., sigma_n`; for `Z^n` each comes with
/// its inverse. `m` acts as `sigma_1^m1 ... sigma_n^mn`.
pub struct MonoidAction {
    ambient: Ambient,
    maps: Vec<Substitution>,
    inverses: Vec<Substitution>,
    cache: Mutex<HashMap<Vec<i64>, Arc<Substitution>>>,
}

impl fmt::Debug for MonoidAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MonoidAction")
            .field("ambient", &self.ambient)
            .field("maps", &self.maps)
            .field("inverses", &self.inverses)
            .finish()
    }
}

impl PartialEq for MonoidAction {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.maps == other.maps && self.inverses == other.inverses
    }
}

impl Eq for MonoidAction {}

impl MonoidAction {
    /// Validates that the maps commute pairwise and, for `Z^n`, that
    /// `inverses[i]` inverts `maps[i]`.
    pub fn new(
        ambient: Ambient,
        maps: Vec<Substitution>,
        inverses: Option<Vec<Substitution>>,
    ) -> Result<Arc<Self>> {
        if maps.is_empty() {
            return Err(Error::InvalidAction("rank must be at least 1".into()));
        }
        let inverses = match (ambient, inverses) {
            (Ambient::Zn, None) => {
                return Err(Error::InvalidAction("Z^n actions need inverse maps".into()))
            }
            (_, Some(inv)) => {
                if inv.len() != maps.len() {
                    return Err(Error::InvalidAction("one inverse per map expected".into()));
                }
                for (i, (s, t)) in maps.iter().zip(&inv).enumerate() {
                    if !s.compose(t)?.is_identity() || !t.compose(s)?.is_identity() {
                        return Err(Error::InvalidAction(format!(
                            "inverse of map {} does not invert it",
                            i + 1
                        )));
                    }
                }
                inv
            }
            (Ambient::Nn, None) => Vec::new(),
        };
        for i in 0..maps.len() {
            for j in i + 1..maps.len() {
                if maps[i].compose(&maps[j])? != maps[j].compose(&maps[i])? {
                    return Err(Error::InvalidAction(format!(
                        "maps {} and {} do not commute",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Arc::new(MonoidAction {
            ambient,
            maps,
            inverses,
            cache: Mutex::new(HashMap::new()),
        }))
    }

    /// `e_i(v_i) = q v_i`, other variables fixed.
    pub fn q_scaling(ambient: Ambient, vars: &[Var], q: &RatFunc) -> Result<Arc<Self>> {
        let qinv = q.inv()?;
        let maps = vars
            .iter()
            .map(|&v| Substitution::identity().with(v, q.mul(&RatFunc::var(v))))
            .collect();
        let inverses = vars
            .iter()
            .map(|&v| Substitution::identity().with(v, qinv.mul(&RatFunc::var(v))))
            .collect();
        Self::new(ambient, maps, Some(inverses))
    }

    /// `e_i(h_i) = q^-1 (h_i - 1)` on `k(h_1, ..., h_n)`.
    pub fn weyl_shift(n: usize, q: &RatFunc) -> Result<Arc<Self>> {
        let qinv = q.inv()?;
        let mut maps = Vec::new();
        let mut inverses = Vec::new();
        for i in 1..=n as u16 {
            let h = RatFunc::var(Var::H(i));
            maps.push(Substitution::identity().with(Var::H(i), qinv.mul(&h.sub(&RatFunc::one()))));
            inverses.push(Substitution::identity().with(Var::H(i), q.mul(&h).add(&RatFunc::one())));
        }
        Self::new(Ambient::Zn, maps, Some(inverses))
    }

    pub fn rank(&self) -> usize {
        self.maps.len()
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn maps(&self) -> &[Substitution] {
        &self.maps
    }

    pub fn inverses(&self) -> &[Substitution] {
        &self.inverses
    }

    pub fn check_vector(&self, m: &[i64]) -> Result<()> {
        if m.len() != self.rank() {
            return Err(Error::InvalidData(format!(
                "monoid vectors have length {}, got {}",
                self.rank(),
                m.len()
            )));
        }
        if self.ambient == Ambient::Nn && m.iter().any(|&e| e < 0) {
            return Err(Error::InvalidData("negative exponent in N^n".into()));
        }
        Ok(())
    }

    /// The substitution by which `m` acts.
    pub fn sigma(&self, m: &[i64]) -> Result<Arc<Substitution>> {
        self.check_vector(m)?;
        if let Some(s) = self.cache.lock().expect("cache lock").get(m) {
            return Ok(s.clone());
        }
        let mut acc = Substitution::identity();
        for (i, &e) in m.iter().enumerate() {
            let step = if e >= 0 {
                self.maps[i].pow(e as u32)?
            } else {
                self.inverses[i].pow((-e) as u32)?
            };
            acc = step.compose(&acc)?;
        }
        let acc = Arc::new(acc);
        self.cache
            .lock()
            .expect("cache lock")
            .insert(m.to_vec(), acc.clone());
        Ok(acc)
    }

    pub fn apply(&self, m: &[i64], f: &RatFunc) -> Result<RatFunc> {
        if m.iter().all(|&e| e == 0) {
            return Ok(f.clone());
        }
        self.sigma(m)?.apply(f)
    }

    /// Whether distinct vectors of the box `[-r, r]^n` (or `[0, r]^n`) act
    /// by distinct substitutions.
    pub fn acts_faithfully_on_box(&self, r: i64) -> Result<bool> {
        let lo = if self.ambient == Ambient::Zn { -r } else { 0 };
        let mut seen: Vec<(Vec<i64>, Arc<Substitution>)> = Vec::new();
        for m in box_vectors(self.rank(), lo, r) {
            let s = self.sigma(&m)?;
            if seen.iter().any(|(_, t)| *t == s) {
                return Ok(false);
            }
            seen.push((m, s));
        }
        Ok(true)
    }

    pub fn generator_name(&self, i: usize) -> String {
        if self.rank() == 1 {
            "e".into()
        } else {
            format!("e{}", i + 1)
        }
    }

    fn generator_index(&self, name: &str) -> Option<usize> {
        let rest = name.strip_prefix('e')?;
        if rest.is_empty() {
            return (self.rank() == 1).then_some(0);
        }
        if rest.starts_with('0') {
            return None;
        }
        let k: usize = rest.parse().ok()?;
        (1..=self.rank()).contains(&k).then(|| k - 1)
    }

    pub fn to_json(&self) -> ActionJson {
        let render = |subs: &[Substitution]| {
            subs.iter()
                .map(|s| s.images().map(|(v, f)| (v.to_string(), f.to_string())).collect())
                .collect()
        };
        ActionJson {
            rank: self.rank(),
            ambient: self.ambient,
            maps: render(&self.maps),
            inverses: render(&self.inverses),
        }
    }

    pub fn from_json(json: &ActionJson) -> Result<Arc<Self>> {
        let parse = |subs: &[BTreeMap<String, String>]| -> Result<Vec<Substitution>> {
            subs.iter()
                .map(|m| {
                    let mut s = Substitution::identity();
                    for (v, f) in m {
                        let v: Var = v.parse()?;
                        s.insert(v, RatFunc::parse(f)?);
                    }
                    Ok(s)
                })
                .collect()
        };
        let maps = parse(&json.maps)?;
        if maps.len() != json.rank {
            return Err(Error::InvalidAction("rank does not match the number of maps".into()));
        }
        let inverses = if json.inverses.is_empty() {
            None
        } else {
            Some(parse(&json.inverses)?)
        };
        Self::new(json.ambient, maps, inverses)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionJson {
    pub rank: usize,
    pub ambient: Ambient,
    pub maps: Vec<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub inverses: Vec<BTreeMap<String, String>>,
}

pub(crate) fn box_vectors(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

/// `sum_m f_m * m`.
#[derive(Clone, Debug)]
pub struct SkewElement {
    action: Arc<MonoidAction>,
    terms: BTreeMap<Vec<i64>, RatFunc>,
}

impl PartialEq for SkewElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_action(other).is_ok() && self.terms == other.terms
    }
}

impl Eq for SkewElement {}

impl SkewElement {
    pub fn zero(action: &Arc<MonoidAction>) -> Self {
        SkewElement {
            action: action.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(action: &Arc<MonoidAction>) -> Self {
        Self::coefficient(action, RatFunc::one())
    }

    /// `f * 0`.
    pub fn coefficient(action: &Arc<MonoidAction>, f: RatFunc) -> Self {
        Self::term(action, vec![0; action.rank()], f).expect("zero vector is valid")
    }

    pub fn term(action: &Arc<MonoidAction>, m: Vec<i64>, f: RatFunc) -> Result<Self> {
        action.check_vector(&m)?;
        let mut terms = BTreeMap::new();
        if !f.is_zero() {
            terms.insert(m, f);
        }
        Ok(SkewElement {
            action: action.clone(),
            terms,
        })
    }

    /// `1 * e_i`.
    pub fn generator(action: &Arc<MonoidAction>, i: usize) -> Self {
        let mut m = vec![0; action.rank()];
        m[i] = 1;
        Self::term(action, m, RatFunc::one()).expect("basis vector")
    }

    pub fn parse(action: &Arc<MonoidAction>, text: &str) -> Result<Self> {
        let unit = Self::one(action);
        expr::eval(
            &expr::parse(text)?,
            &|s| action.generator_index(s).map(|i| Self::generator(action, i)),
            &unit,
        )
    }

    pub fn action(&self) -> &Arc<MonoidAction> {
        &self.action
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, RatFunc> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Monoid elements with nonzero coefficient.
    pub fn supp(&self) -> BTreeSet<Vec<i64>> {
        self.terms.keys().cloned().collect()
    }

    fn same_action(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.action, &other.action) || *self.action == *other.action {
            Ok(())
        } else {
            Err(Error::ActionMismatch)
        }
    }

    fn insert(terms: &mut BTreeMap<Vec<i64>, RatFunc>, m: Vec<i64>, f: RatFunc) {
        let s = match terms.remove(&m) {
            Some(old) => old.add(&f),
            None => f,
        };
        if !s.is_zero() {
            terms.insert(m, s);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_action(other)?;
        let mut terms = self.terms.clone();
        for (m, f) in &other.terms {
            Self::insert(&mut terms, m.clone(), f.clone());
        }
        Ok(SkewElement {
            action: self.action.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        self.scale(&RatFunc::from_int(-1))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Left multiplication by `f * 0`.
    pub fn scale(&self, f: &RatFunc) -> Self {
        if f.is_zero() {
            return Self::zero(&self.action);
        }
        SkewElement {
            action: self.action.clone(),
            terms: self.terms.iter().map(|(m, g)| (m.clone(), f.mul(g))).collect(),
        }
    }

    /// `(f m)(g m') = f m(g) (m + m')`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_action(other)?;
        let mut terms = BTreeMap::new();
        for (m, f) in &self.terms {
            for (m2, g) in &other.terms {
                let twisted = self.action.apply(m, g)?;
                let sum: Vec<i64> = m.iter().zip(m2).map(|(a, b)| a + b).collect();
                Self::insert(&mut terms, sum, f.mul(&twisted));
            }
        }
        Ok(SkewElement {
            action: self.action.clone(),
            terms,
        })
    }

    /// `(f m)^-1 = (-m)(f^-1) (-m)` for a single term over `Z^n`.
    pub fn invert_term(&self) -> Result<Self> {
        if self.terms.len() != 1 {
            return Err(Error::NotAMonomial);
        }
        let (m, f) = self.terms.iter().next().expect("one term");
        let neg: Vec<i64> = m.iter().map(|e| -e).collect();
        if self.action.ambient == Ambient::Nn && m.iter().any(|&e| e != 0) {
            return Err(Error::KindMismatch("only 0 is invertible in N^n".into()));
        }
        let coeff = self.action.apply(&neg, &f.inv()?)?;
        Self::term(&self.action, neg, coeff)
    }

    pub fn to_json(&self) -> SkewJson {
        SkewJson {
            action: self.action.to_json(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, f)| SkewTermJson {
                    m: m.clone(),
                    coeff: f.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &SkewJson) -> Result<Self> {
        let action = MonoidAction::from_json(&json.action)?;
        let mut out = Self::zero(&action);
        for t in &json.terms {
            out = out.add(&Self::term(&action, t.m.clone(), RatFunc::parse(&t.coeff)?)?)?;
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewTermJson {
    pub m: Vec<i64>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewJson {
    pub action: ActionJson,
    pub terms: Vec<SkewTermJson>,
}

impl fmt::Display for SkewElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<(bool, String)> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let mut letters = Vec::new();
                for (i, &e) in m.iter().enumerate() {
                    push_power(&mut letters, self.action.generator_name(i), e);
                }
                signed_term(c, &letters.join("*"))
            })
            .collect();
        f.write_str(&join_signed(&parts))
    }
}

impl Element for SkewElement {
    fn one_like(&self) -> Self {
        Self::one(&self.action)
    }

    fn zero_like(&self) -> Self {
        Self::zero(&self.action)
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        self.add(other)
    }

    fn try_mul(&self, other: &Self) -> Result<Self> {
        self.mul(other)
    }

    fn scale(&self, c: &RatFunc) -> Self {
        SkewElement::scale(self, c)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn try_inverse(&self) -> Result<Self> {
        self.invert_term()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qlga(n: usize, ambient: Ambient) -> Arc<MonoidAction> {
        let vars: Vec<Var> = (1..=n as u16).map(Var::X).collect();
        MonoidAction::q_scaling(ambient, &vars, &RatFunc::var(Var::q())).unwrap()
    }

    #[test]
    fn twisted_product() {
        let act = qlga(1, Ambient::Nn);
        let e = SkewElement::parse(&act, "e").unwrap();
        let x = SkewElement::parse(&act, "x1").unwrap();
        assert_eq!(e.mul(&x).unwrap().to_string(), "q*x1*e");
        let f = SkewElement::parse(&act, "x1^2 + 1").unwrap();
        let g = SkewElement::parse(&act, "q/x1").unwrap();
        assert_eq!(f.mul(&g).unwrap(), SkewElement::parse(&act, "(q*x1^2 + q)/x1").unwrap());
    }

    #[test]
    fn group_inverse() {
        let act = qlga(1, Ambient::Zn);
        let u = SkewElement::parse(&act, "e*e^-1").unwrap();
        assert_eq!(u, SkewElement::one(&act));
        let t = SkewElement::parse(&act, "x1*e").unwrap();
        let inv = t.invert_term().unwrap();
        assert_eq!(inv.to_string(), "(q/x1)*e^-1");
        assert!(t.mul(&inv).unwrap() == SkewElement::one(&act));
        assert!(inv.mul(&t).unwrap() == SkewElement::one(&act));
    }

    #[test]
    fn supports() {
        let act = MonoidAction::weyl_shift(3, &RatFunc::var(Var::q())).unwrap();
        let u = SkewElement::parse(&act, "e1 + e2 + e3").unwrap();
        let expect: BTreeSet<Vec<i64>> =
            [vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]].into_iter().collect();
        assert_eq!(u.supp(), expect);
        assert!(SkewElement::zero(&act).supp().is_empty());
    }

    #[test]
    fn validation() {
        let h = Var::H(1);
        let s = Substitution::identity().with(h, RatFunc::parse("h1 + 1").unwrap());
        let bad = Substitution::identity().with(h, RatFunc::parse("h1 + 2").unwrap());
        assert!(MonoidAction::new(Ambient::Zn, vec![s.clone()], Some(vec![bad])).is_err());
        assert!(MonoidAction::new(Ambient::Zn, vec![s.clone()], None).is_err());
        let t = Substitution::identity().with(h, RatFunc::parse("2*h1").unwrap());
        assert!(matches!(
            MonoidAction::new(Ambient::Nn, vec![s, t], None),
            Err(Error::InvalidAction(_))
        ));
        let act = qlga(2, Ambient::Nn);
        assert!(SkewElement::term(&act, vec![-1, 0], RatFunc::one()).is_err());
        let other = qlga(2, Ambient::Zn);
        assert_eq!(
            SkewElement::one(&act).mul(&SkewElement::one(&other)),
            Err(Error::ActionMismatch)
        );
    }

    #[test]
    fn faithful_on_small_box() {
        let act = MonoidAction::weyl_shift(2, &RatFunc::var(Var::q())).unwrap();
        assert!(act.acts_faithfully_on_box(3).unwrap());
        assert!(qlga(2, Ambient::Zn).acts_faithfully_on_box(3).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let act = MonoidAction::weyl_shift(2, &RatFunc::var(Var::q())).unwrap();
        let u = SkewElement::parse(&act, "h1*e1^-1 + (h2 - 1)/q*e2^2 - 3").unwrap();
        let json = serde_json::to_string(&u.to_json()).unwrap();
        let back: SkewJson = serde_json::from_str(&json).unwrap();
        assert_eq!(SkewElement::from_json(&back).unwrap(), u);
        assert_eq!(SkewElement::parse(&act, &u.to_string()).unwrap(), u);
    }
}
