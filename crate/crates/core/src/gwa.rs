//! Generalized Weyl algebras `D(a, sigma)` over polynomial bases, their
//! embedding into `Frac(D) * Z^n`, and a small catalog of instances.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::coeff::{join_signed, signed_term, RatFunc, Substitution, Var};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::expr;
use crate::quantum::push_power;
use crate::skew::{Ambient, MonoidAction, SkewElement};
use crate::verify::{certify_hom, Certificate, GenMap, Presentation};

/// Base ring `D = k[base_vars]` (scalars may involve parameters), commuting
/// automorphisms `sigma_i` and central elements `a_i` with
/// `sigma_i(a_j) = a_j` for `i != j`.
pub struct GwaData {
    label: String,
    base_vars: Vec<Var>,
    sigma: Arc<MonoidAction>,
    a: Vec<RatFunc>,
    shifted: Mutex<HashMap<(usize, i64), RatFunc>>,
}

impl fmt::Debug for GwaData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GwaData")
            .field("label", &self.label)
            .field("base_vars", &self.base_vars)
            .field("sigma", &self.sigma)
            .field("a", &self.a)
            .finish()
    }
}

impl PartialEq for GwaData {
    fn eq(&self, other: &Self) -> bool {
        self.base_vars == other.base_vars && self.sigma == other.sigma && self.a == other.a
    }
}

impl Eq for GwaData {}

fn in_base(f: &RatFunc, base: &[Var]) -> bool {
    f.den().vars().iter().all(|v| !base.contains(v))
}

impl GwaData {
    pub fn new(
        label: impl Into<String>,
        base_vars: Vec<Var>,
        sigma: Arc<MonoidAction>,
        a: Vec<RatFunc>,
    ) -> Result<Arc<Self>> {
        if sigma.ambient() != Ambient::Zn {
            return Err(Error::InvalidData("the automorphisms must act through Z^n".into()));
        }
        if a.len() != sigma.rank() {
            return Err(Error::InvalidData("one element a_i per automorphism expected".into()));
        }
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() || !in_base(ai, &base_vars) {
                return Err(Error::InvalidData(format!("a_{} must be a nonzero element of D", i + 1)));
            }
            for j in 0..a.len() {
                let mut e = vec![0; a.len()];
                e[j] = 1;
                if j != i && sigma.apply(&e, ai)? != *ai {
                    return Err(Error::InvalidData(format!(
                        "sigma_{} moves a_{}",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        for s in sigma.maps().iter().chain(sigma.inverses()) {
            for &v in &base_vars {
                if !in_base(&s.image(v), &base_vars) {
                    return Err(Error::InvalidData(format!("sigma does not preserve D at {v}")));
                }
            }
        }
        Ok(Arc::new(GwaData {
            label: label.into(),
            base_vars,
            sigma,
            a,
            shifted: Mutex::new(HashMap::new()),
        }))
    }

    /// `A_n^q` as `k[h_1..h_n](h, sigma)` with `sigma_i(h_i) = q^-1 (h_i - 1)`.
    pub fn quantum_weyl(n: usize) -> Arc<Self> {
        let q = RatFunc::var(Var::q());
        let sigma = MonoidAction::weyl_shift(n, &q).expect("q is invertible");
        let base: Vec<Var> = (1..=n as u16).map(Var::H).collect();
        let a = base.iter().map(|&h| RatFunc::var(h)).collect();
        Self::new(format!("qweyl:{n}"), base, sigma, a).expect("valid data")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn base_vars(&self) -> &[Var] {
        &self.base_vars
    }

    pub fn sigma(&self) -> &Arc<MonoidAction> {
        &self.sigma
    }

    pub fn a(&self) -> &[RatFunc] {
        &self.a
    }

    /// `sigma_i^j(a_i)`.
    pub fn shifted_a(&self, i: usize, j: i64) -> Result<RatFunc> {
        if let Some(v) = self.shifted.lock().expect("cache lock").get(&(i, j)) {
            return Ok(v.clone());
        }
        let mut e = vec![0; self.rank()];
        e[i] = j;
        let v = self.sigma.apply(&e, &self.a[i])?;
        self.shifted
            .lock()
            .expect("cache lock")
            .insert((i, j), v.clone());
        Ok(v)
    }

    pub fn x_name(&self, i: usize) -> String {
        if self.rank() == 1 {
            "X".into()
        } else {
            format!("X{}", i + 1)
        }
    }

    pub fn y_name(&self, i: usize) -> String {
        if self.rank() == 1 {
            "Y".into()
        } else {
            format!("Y{}", i + 1)
        }
    }

    fn generator(self: &Arc<Self>, name: &str) -> Option<GwaElement> {
        let sign = match name.chars().next()? {
            'X' => 1,
            'Y' => -1,
            _ => return None,
        };
        let rest = &name[1..];
        let i = if rest.is_empty() {
            (self.rank() == 1).then_some(0)?
        } else {
            let k: usize = rest.parse().ok().filter(|_| !rest.starts_with('0'))?;
            (1..=self.rank()).contains(&k).then(|| k - 1)?
        };
        let mut z = vec![0; self.rank()];
        z[i] = sign;
        Some(GwaElement::term(self, z, RatFunc::one()).expect("valid term"))
    }

    pub fn parse_element(self: &Arc<Self>, text: &str) -> Result<GwaElement> {
        let unit = GwaElement::one(self);
        expr::eval(&expr::parse(text)?, &|s| self.generator(s), &unit)
    }

    /// `Y_i X_i - a_i` and `X_i Y_i - sigma_i(a_i)` for every `i`.
    pub fn relation_certificate(self: &Arc<Self>) -> Result<Certificate> {
        let mut cert = Certificate::new();
        for i in 0..self.rank() {
            let x = self.generator(&self.x_name(i)).expect("generator");
            let y = self.generator(&self.y_name(i)).expect("generator");
            let a = GwaElement::coefficient(self, self.a[i].clone())?;
            let sa = GwaElement::coefficient(self, self.shifted_a(i, 1)?)?;
            cert.record(
                format!("{}*{} = a", self.y_name(i), self.x_name(i)),
                &y.mul(&x)?.sub(&a)?,
            );
            cert.record(
                format!("{}*{} = sigma(a)", self.x_name(i), self.y_name(i)),
                &x.mul(&y)?.sub(&sa)?,
            );
        }
        Ok(cert)
    }
}

/// `sum_z d_z w_z`, where `w_z` has `X_i^z_i` for `z_i > 0` and
/// `Y_i^-z_i` for `z_i < 0`.
#[derive(Clone, Debug)]
pub struct GwaElement {
    data: Arc<GwaData>,
    terms: BTreeMap<Vec<i64>, RatFunc>,
}

impl PartialEq for GwaElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_data(other).is_ok() && self.terms == other.terms
    }
}

impl Eq for GwaElement {}

impl GwaElement {
    pub fn zero(data: &Arc<GwaData>) -> Self {
        GwaElement {
            data: data.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(data: &Arc<GwaData>) -> Self {
        Self::coefficient(data, RatFunc::one()).expect("1 is in D")
    }

    pub fn coefficient(data: &Arc<GwaData>, d: RatFunc) -> Result<Self> {
        Self::term(data, vec![0; data.rank()], d)
    }

    pub fn term(data: &Arc<GwaData>, z: Vec<i64>, d: RatFunc) -> Result<Self> {
        if z.len() != data.rank() {
            return Err(Error::InvalidData(format!("z must have length {}", data.rank())));
        }
        if !in_base(&d, &data.base_vars) {
            return Err(Error::InvalidData(format!("`{d}` is not in the base ring")));
        }
        let mut terms = BTreeMap::new();
        if !d.is_zero() {
            terms.insert(z, d);
        }
        Ok(GwaElement {
            data: data.clone(),
            terms,
        })
    }

    pub fn data(&self) -> &Arc<GwaData> {
        &self.data
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, RatFunc> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_data(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.data, &other.data) || *self.data == *other.data {
            Ok(())
        } else {
            Err(Error::DataMismatch)
        }
    }

    fn insert(terms: &mut BTreeMap<Vec<i64>, RatFunc>, z: Vec<i64>, d: RatFunc) {
        let s = match terms.remove(&z) {
            Some(old) => old.add(&d),
            None => d,
        };
        if !s.is_zero() {
            terms.insert(z, s);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_data(other)?;
        let mut terms = self.terms.clone();
        for (z, d) in &other.terms {
            Self::insert(&mut terms, z.clone(), d.clone());
        }
        Ok(GwaElement {
            data: self.data.clone(),
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
            return Self::zero(&self.data);
        }
        GwaElement {
            data: self.data.clone(),
            terms: self.terms.iter().map(|(z, d)| (z.clone(), c.mul(d))).collect(),
        }
    }

    /// Coefficient picked up by index `i` in `w_{k e_i} w_{l e_i}`.
    fn merge_coefficient(&self, i: usize, k: i64, l: i64) -> Result<RatFunc> {
        let mut c = RatFunc::one();
        if k > 0 && l < 0 {
            // X^k Y^m = sigma^(k-t+1)(a) ... sigma^k(a) X^(k-m) or Y^(m-k)
            let t = k.min(-l);
            for j in k - t + 1..=k {
                c = c.mul(&self.data.shifted_a(i, j)?);
            }
        } else if k < 0 && l > 0 {
            // Y^m X^l = sigma^-(m-t)(a) ... sigma^-(m-1)(a) ...
            let m = -k;
            let t = m.min(l);
            for j in 0..t {
                c = c.mul(&self.data.shifted_a(i, -(m - t) - j)?);
            }
        }
        Ok(c)
    }

    /// `(d w_z)(d' w_z') = d sigma_z(d') w_z w_z'`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_data(other)?;
        let mut terms = BTreeMap::new();
        for (z, d) in &self.terms {
            for (z2, d2) in &other.terms {
                let mut c = d.mul(&self.data.sigma.apply(z, d2)?);
                for i in 0..z.len() {
                    c = c.mul(&self.merge_coefficient(i, z[i], z2[i])?);
                }
                let sum: Vec<i64> = z.iter().zip(z2).map(|(a, b)| a + b).collect();
                Self::insert(&mut terms, sum, c);
            }
        }
        Ok(GwaElement {
            data: self.data.clone(),
            terms,
        })
    }

    /// Image under `X_i -> 1 e_i`, `Y_i -> a_i e_i^-1` in `Frac(D) * Z^n`.
    pub fn embed(&self) -> Result<SkewElement> {
        let act = &self.data.sigma;
        let n = self.data.rank();
        let mut out = SkewElement::zero(act);
        for (z, d) in &self.terms {
            let mut img = SkewElement::coefficient(act, d.clone());
            for (i, &zi) in z.iter().enumerate() {
                let letter = if zi > 0 {
                    SkewElement::generator(act, i)
                } else {
                    let mut m = vec![0; n];
                    m[i] = -1;
                    SkewElement::term(act, m, self.data.a[i].clone())?
                };
                for _ in 0..zi.unsigned_abs() {
                    img = img.mul(&letter)?;
                }
            }
            out = out.add(&img)?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> GwaJson {
        GwaJson {
            instance: self.data.label.clone(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(z, d)| GwaTermJson {
                    z: z.clone(),
                    coeff: d.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &GwaJson) -> Result<Self> {
        let data = gwa_data_by_label(&json.instance)?;
        let mut out = Self::zero(&data);
        for t in &json.terms {
            out = out.add(&Self::term(&data, t.z.clone(), RatFunc::parse(&t.coeff)?)?)?;
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GwaTermJson {
    pub z: Vec<i64>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GwaJson {
    pub instance: String,
    pub terms: Vec<GwaTermJson>,
}

impl fmt::Display for GwaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<(bool, String)> = self
            .terms
            .iter()
            .rev()
            .map(|(z, d)| {
                let mut letters = Vec::new();
                for (i, &e) in z.iter().enumerate() {
                    if e > 0 {
                        push_power(&mut letters, self.data.x_name(i), e);
                    } else {
                        push_power(&mut letters, self.data.y_name(i), -e);
                    }
                }
                signed_term(d, &letters.join("*"))
            })
            .collect();
        f.write_str(&join_signed(&parts))
    }
}

impl Element for GwaElement {
    fn one_like(&self) -> Self {
        Self::one(&self.data)
    }

    fn zero_like(&self) -> Self {
        Self::zero(&self.data)
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        self.add(other)
    }

    fn try_mul(&self, other: &Self) -> Result<Self> {
        self.mul(other)
    }

    fn scale(&self, c: &RatFunc) -> Self {
        GwaElement::scale(self, c)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InstanceName {
    #[serde(rename = "qweyl-a1")]
    QuantumWeylA1,
    #[serde(rename = "sphere")]
    QuantumSphere,
    #[serde(rename = "qso3")]
    Qso3,
    #[serde(rename = "usl2")]
    Usl2,
}

impl InstanceName {
    pub const ALL: [InstanceName; 4] = [
        InstanceName::QuantumWeylA1,
        InstanceName::QuantumSphere,
        InstanceName::Qso3,
        InstanceName::Usl2,
    ];

    pub fn id(self) -> &'static str {
        match self {
            InstanceName::QuantumWeylA1 => "qweyl-a1",
            InstanceName::QuantumSphere => "sphere",
            InstanceName::Qso3 => "qso3",
            InstanceName::Usl2 => "usl2",
        }
    }

    pub fn parse(id: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|n| n.id() == id)
            .ok_or_else(|| Error::UnknownInstance(id.to_string()))
    }

    pub fn description(self) -> &'static str {
        match self {
            InstanceName::QuantumWeylA1 => {
                "quantum Weyl algebra yx - qxy = 1 as k[h](h, h -> q^-1 (h - 1))"
            }
            InstanceName::QuantumSphere => {
                "quantum 2-sphere as k[H](-s^-1 (c - H)(d + H), H -> s^2 H), s^2 = lambda"
            }
            InstanceName::Qso3 => "O_q2(so3) as k[H, C](C + H^2/(q(1 + q^2)), H -> q^2 H, C -> C)",
            InstanceName::Usl2 => "U(sl2) as k[H, C](C - H(H + 1), H -> H - 1, C -> C)",
        }
    }
}

fn rf(s: &str) -> RatFunc {
    RatFunc::parse(s).expect("catalog literal")
}

fn one_step(v: Var, image: &str, inverse: &str) -> (Substitution, Substitution) {
    (
        Substitution::identity().with(v, rf(image)),
        Substitution::identity().with(v, rf(inverse)),
    )
}

fn instance_data(name: InstanceName) -> Arc<GwaData> {
    let build = |base: Vec<Var>, steps: Vec<(Substitution, Substitution)>, a: &str| {
        let mut map = Substitution::identity();
        let mut inv = Substitution::identity();
        for (s, t) in steps {
            map = s.compose(&map).expect("no poles");
            inv = t.compose(&inv).expect("no poles");
        }
        let sigma = MonoidAction::new(Ambient::Zn, vec![map], Some(vec![inv])).expect("valid action");
        GwaData::new(name.id(), base, sigma, vec![rf(a)]).expect("valid data")
    };
    match name {
        InstanceName::QuantumWeylA1 => build(
            vec![Var::H(1)],
            vec![one_step(Var::H(1), "(h1 - 1)/q", "q*h1 + 1")],
            "h1",
        ),
        InstanceName::QuantumSphere => build(
            vec![Var::BigH],
            vec![one_step(Var::BigH, "s^2*H", "H/s^2")],
            "-(c - H)*(d + H)/s",
        ),
        InstanceName::Qso3 => build(
            vec![Var::BigH, Var::BigC],
            vec![one_step(Var::BigH, "q^2*H", "H/q^2")],
            "C + H^2/(q*(1 + q^2))",
        ),
        InstanceName::Usl2 => build(
            vec![Var::BigH, Var::BigC],
            vec![one_step(Var::BigH, "H - 1", "H + 1")],
            "C - H*(H + 1)",
        ),
    }
}

pub fn gwa_data_by_label(label: &str) -> Result<Arc<GwaData>> {
    if let Some(n) = label.strip_prefix("qweyl:") {
        let n: usize = n
            .parse()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| Error::UnknownInstance(label.to_string()))?;
        return Ok(GwaData::quantum_weyl(n));
    }
    Ok(instance_data(InstanceName::parse(label)?))
}

/// A catalog algebra given by a presentation together with its realization
/// as a GWA; the relation certificate is computed on construction.
#[derive(Clone, Debug)]
pub struct GwaInstance {
    pub name: InstanceName,
    pub data: Arc<GwaData>,
    pub presentation: Presentation,
    pub images: Vec<GwaElement>,
    pub certificate: Certificate,
}

impl GwaInstance {
    pub fn map(&self) -> GenMap<GwaElement> {
        GenMap::from_images(self.presentation.clone(), self.images.clone()).expect("one image per generator")
    }

    /// The relation certificate plus the GWA axioms and the identities
    /// specific to this instance.
    pub fn checks(&self) -> Result<Certificate> {
        let mut cert = self.certificate.clone();
        cert.merge(self.data.relation_certificate()?);
        let d = &self.data;
        let mut extra = |label: &str, lhs: &str, rhs: &str| -> Result<()> {
            let r = d.parse_element(lhs)?.sub(&d.parse_element(rhs)?)?;
            cert.record(label, &r);
            Ok(())
        };
        match self.name {
            InstanceName::QuantumWeylA1 => {
                extra("Y*X = h", "Y*X", "h1")?;
                extra("X*Y = (h - 1)/q", "X*Y", "(h1 - 1)/q")?;
            }
            InstanceName::QuantumSphere => {
                extra("X*H = lambda*H*X", "X*H", "lambda*H*X")?;
                extra("Y*H = H*Y/lambda", "Y*H", "H*Y/lambda")?;
            }
            InstanceName::Qso3 => {
                extra("X*H = q^2*H*X", "X*H", "q^2*H*X")?;
                extra("C central", "C*X - X*C + C*Y - Y*C", "0")?;
            }
            InstanceName::Usl2 => {
                extra("X*Y - Y*X = 2*H", "X*Y - Y*X", "2*H")?;
                extra("H*X - X*H = X", "H*X - X*H", "X")?;
                extra("H*Y - Y*H = -Y", "H*Y - Y*H", "-Y")?;
                let casimir = self.presentation.parse_word("h*(h + 1) + f*e")?;
                let image = crate::verify::eval_word(&casimir, &self.map())?;
                cert.record("h(h + 1) + fe -> C", &image.sub(&d.parse_element("C")?)?);
            }
        }
        Ok(cert)
    }
}

/// Build a catalog instance; fails if a defining relation does not vanish.
pub fn gwa_instance(name: &str) -> Result<GwaInstance> {
    let name = InstanceName::parse(name)?;
    let data = instance_data(name);
    let (gens, rels, images): (&[&str], &[&str], &[&str]) = match name {
        InstanceName::QuantumWeylA1 => (&["x", "y"], &["y*x - q*x*y - 1"], &["X", "Y"]),
        InstanceName::QuantumSphere => (
            &["X", "Y", "H"],
            &[
                "X*H - s^2*H*X",
                "Y*H - H*Y/s^2",
                "s*Y*X + (c - H)*(d + H)",
                "s*X*Y + (c - s^2*H)*(d + s^2*H)",
            ],
            &["X", "Y", "H"],
        ),
        InstanceName::Qso3 => (
            &["X", "Y", "H", "C"],
            &[
                "X*H - q^2*H*X",
                "Y*H - H*Y/q^2",
                "C*X - X*C",
                "C*Y - Y*C",
                "C*H - H*C",
                "Y*X - C - H^2/(q*(1 + q^2))",
                "X*Y - C - q^3*H^2/(1 + q^2)",
            ],
            &["X", "Y", "H", "C"],
        ),
        InstanceName::Usl2 => (
            &["e", "f", "h"],
            &["h*e - e*h - e", "h*f - f*h + f", "e*f - f*e - 2*h"],
            &["X", "Y", "H"],
        ),
    };
    let presentation = Presentation::new(gens.iter().map(|s| s.to_string()).collect(), rels)?;
    let images = images
        .iter()
        .map(|s| data.parse_element(s))
        .collect::<Result<Vec<_>>>()?;
    let map = GenMap::from_images(presentation.clone(), images.clone())?;
    let certificate = certify_hom(&map)?;
    if !certificate.passed {
        return Err(Error::CertificateFailed(format!(
            "{}: {}",
            name.id(),
            certificate
                .failures()
                .map(|c| c.label.clone())
                .collect::<Vec<_>>()
                .join("; ")
        )));
    }
    Ok(GwaInstance {
        name,
        data,
        presentation,
        images,
        certificate,
    })
}
