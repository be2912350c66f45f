//! Finite groups `G(m, p, n)` and their relatives acting on the quantum
//! algebras, skew rings and GWAs by monomial automorphisms; Reynolds
//! operator and graded invariants.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::coeff::{RatFunc, Substitution, Var};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::gwa::GwaElement;
use crate::linalg::{rref, SparseVec};
use crate::quantum::{Family, QAlgebraElement, QAlgebraKind, QMonomial};
use crate::skew::{box_vectors, SkewElement};
use crate::verify::{certify_hom, Certificate, GenMap, Presentation};

/// Laurent exponents of torus monomials range over this box when graded
/// components are enumerated.
pub const TORUS_BOX: i64 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_n: usize,
    pub max_m: u32,
    pub max_degree: u32,
    pub max_group_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 4,
            max_m: 6,
            max_degree: 10,
            max_group_order: 100_000,
        }
    }
}

/// `(g, pi)` acting by `x_i -> zeta_m^diag_i x_pi(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReflGroupElement {
    m: u32,
    diag: Vec<u32>,
    perm: Vec<usize>,
}

impl ReflGroupElement {
    pub fn identity(m: u32, n: usize) -> Self {
        ReflGroupElement {
            m,
            diag: vec![0; n],
            perm: (0..n).collect(),
        }
    }

    /// `perm` is 0-based: `perm[i] = pi(i)`.
    pub fn new(m: u32, diag: Vec<i64>, perm: Vec<usize>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidGroup("m must be positive".into()));
        }
        let n = diag.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&j| j >= n || std::mem::replace(&mut seen[j], true)) {
            return Err(Error::InvalidGroup("perm is not a permutation of the indices".into()));
        }
        let diag = diag.iter().map(|&d| d.rem_euclid(m as i64) as u32).collect();
        Ok(ReflGroupElement { m, diag, perm })
    }

    pub fn diagonal(m: u32, diag: Vec<i64>) -> Result<Self> {
        let n = diag.len();
        Self::new(m, diag, (0..n).collect())
    }

    pub fn transposition(m: u32, n: usize, i: usize, j: usize) -> Result<Self> {
        let mut perm: Vec<usize> = (0..n).collect();
        if i >= n || j >= n {
            return Err(Error::InvalidGroup("transposition index out of range".into()));
        }
        perm.swap(i, j);
        Self::new(m, vec![0; n], perm)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[u32] {
        &self.diag
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.diag.iter().all(|&d| d == 0) && self.perm.iter().enumerate().all(|(i, &j)| i == j)
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.m != other.m || self.n() != other.n() {
            return Err(Error::InvalidGroup("elements of different groups".into()));
        }
        Ok(())
    }

    /// The element acting as `self` after `other`:
    /// `(g, pi)(g', pi') = (g o pi' + g', pi pi')`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let diag = (0..self.n())
            .map(|i| (self.diag[other.perm[i]] + other.diag[i]) % self.m)
            .collect();
        let perm = (0..self.n()).map(|i| self.perm[other.perm[i]]).collect();
        Ok(ReflGroupElement {
            m: self.m,
            diag,
            perm,
        })
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut diag = vec![0; n];
        let mut perm = vec![0; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            diag[self.perm[i]] = (self.m - self.diag[i]) % self.m;
        }
        ReflGroupElement {
            m: self.m,
            diag,
            perm,
        }
    }

    /// Whether the diagonal part lies in `A(m, p, n)`.
    pub fn in_a(&self, p: u32) -> bool {
        let s: u64 = self.diag.iter().map(|&d| u64::from(d)).sum();
        (u64::from(self.m / p) * s) % u64::from(self.m) == 0
    }
}

impl fmt::Display for ReflGroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.diag.iter().map(u32::to_string).collect();
        let p: Vec<String> = self.perm.iter().map(|j| (j + 1).to_string()).collect();
        write!(f, "[{} | {}]", d.join(","), p.join(","))
    }
}

/// A group materialized by closure from its generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    label: String,
    m: u32,
    n: usize,
    generators: Vec<ReflGroupElement>,
    elements: Vec<ReflGroupElement>,
}

impl FiniteGroup {
    /// Breadth-first closure; fails once more than `cap` elements appear.
    pub fn generate(
        label: impl Into<String>,
        m: u32,
        n: usize,
        generators: Vec<ReflGroupElement>,
        cap: usize,
    ) -> Result<Self> {
        for g in &generators {
            if g.m != m || g.n() != n {
                return Err(Error::InvalidGroup(format!("generator {g} has the wrong shape")));
            }
        }
        let id = ReflGroupElement::identity(m, n);
        let mut index = HashMap::new();
        index.insert(id.clone(), 0usize);
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(h) = queue.pop_front() {
            for g in &generators {
                let next = h.mul(g)?;
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(FiniteGroup {
            label: label.into(),
            m,
            n,
            generators,
            elements,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[ReflGroupElement] {
        &self.generators
    }

    pub fn elements(&self) -> &[ReflGroupElement] {
        &self.elements
    }

    pub fn contains(&self, g: &ReflGroupElement) -> bool {
        self.elements.contains(g)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum GroupSpec {
    #[serde(rename = "G(m,p,n)")]
    Gmpn { m: u32, p: u32, n: usize },
    #[serde(rename = "GmTensorN")]
    Tensor { m: u32, n: usize },
    #[serde(rename = "Sn")]
    Symmetric { n: usize },
    #[serde(rename = "cyclic-on-A1")]
    CyclicOnA1 { m: u32 },
    #[serde(rename = "trivial")]
    Trivial { n: usize },
}

fn parse_num<T: std::str::FromStr>(s: &str, spec: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad group spec `{spec}`")))
}

impl GroupSpec {
    /// Accepts `G(m,p,n)`, `Gm:M,n:N`, `Sn:N`, `cyclic-on-A1:M`, `trivial:N`
    /// or the JSON object form.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let spec = if t.starts_with('{') {
            serde_json::from_str(t).map_err(|e| Error::Parse(format!("group spec: {e}")))?
        } else if let Some(body) = t.strip_prefix("G(").and_then(|r| r.strip_suffix(')')) {
            let parts: Vec<&str> = body.split(',').collect();
            if parts.len() != 3 {
                return Err(Error::Parse(format!("bad group spec `{t}`")));
            }
            GroupSpec::Gmpn {
                m: parse_num(parts[0], t)?,
                p: parse_num(parts[1], t)?,
                n: parse_num(parts[2], t)?,
            }
        } else if let Some(body) = t.strip_prefix("Gm:") {
            let (m, n) = body
                .split_once(",n:")
                .ok_or_else(|| Error::Parse(format!("bad group spec `{t}`")))?;
            GroupSpec::Tensor {
                m: parse_num(m, t)?,
                n: parse_num(n, t)?,
            }
        } else if let Some(n) = t.strip_prefix("Sn:") {
            GroupSpec::Symmetric { n: parse_num(n, t)? }
        } else if let Some(m) = t.strip_prefix("cyclic-on-A1:") {
            GroupSpec::CyclicOnA1 { m: parse_num(m, t)? }
        } else if let Some(n) = t.strip_prefix("trivial:") {
            GroupSpec::Trivial { n: parse_num(n, t)? }
        } else {
            return Err(Error::Parse(format!("unknown group spec `{t}`")));
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let bad = |s: &str| Err(Error::InvalidGroup(s.to_string()));
        match *self {
            GroupSpec::Gmpn { m, p, n } => {
                if m == 0 || p == 0 || n == 0 {
                    return bad("m, p, n must be positive");
                }
                if m % p != 0 {
                    return bad("p must divide m");
                }
            }
            GroupSpec::Tensor { m, n } if m == 0 || n == 0 => return bad("m, n must be positive"),
            GroupSpec::Symmetric { n } | GroupSpec::Trivial { n } if n == 0 => {
                return bad("n must be positive")
            }
            GroupSpec::CyclicOnA1 { m: 0 } => return bad("m must be positive"),
            _ => {}
        }
        Ok(())
    }

    pub fn label(&self) -> String {
        match *self {
            GroupSpec::Gmpn { m, p, n } => format!("G({m},{p},{n})"),
            GroupSpec::Tensor { m, n } => format!("Gm:{m},n:{n}"),
            GroupSpec::Symmetric { n } => format!("Sn:{n}"),
            GroupSpec::CyclicOnA1 { m } => format!("cyclic-on-A1:{m}"),
            GroupSpec::Trivial { n } => format!("trivial:{n}"),
        }
    }

    pub fn m(&self) -> u32 {
        match *self {
            GroupSpec::Gmpn { m, .. } | GroupSpec::Tensor { m, .. } | GroupSpec::CyclicOnA1 { m } => m,
            GroupSpec::Symmetric { .. } | GroupSpec::Trivial { .. } => 1,
        }
    }

    pub fn n(&self) -> usize {
        match *self {
            GroupSpec::Gmpn { n, .. }
            | GroupSpec::Tensor { n, .. }
            | GroupSpec::Symmetric { n }
            | GroupSpec::Trivial { n } => n,
            GroupSpec::CyclicOnA1 { .. } => 1,
        }
    }

    pub fn generators(&self) -> Vec<ReflGroupElement> {
        let (m, n) = (self.m(), self.n());
        let unit = |i: usize, k: i64| {
            let mut d = vec![0; n];
            d[i] = k;
            d
        };
        let transpositions = || {
            (0..n.saturating_sub(1))
                .map(move |i| ReflGroupElement::transposition(m, n, i, i + 1).expect("in range"))
        };
        let mut gens: Vec<ReflGroupElement> = match *self {
            GroupSpec::Gmpn { p, .. } => {
                let mut g = vec![ReflGroupElement::diagonal(m, unit(0, p as i64)).expect("valid")];
                for i in 0..n.saturating_sub(1) {
                    let mut d = unit(i, 1);
                    d[i + 1] = -1;
                    g.push(ReflGroupElement::diagonal(m, d).expect("valid"));
                }
                g.extend(transpositions());
                g
            }
            GroupSpec::Tensor { .. } | GroupSpec::CyclicOnA1 { .. } => (0..n)
                .map(|i| ReflGroupElement::diagonal(m, unit(i, 1)).expect("valid"))
                .collect(),
            GroupSpec::Symmetric { .. } => transpositions().collect(),
            GroupSpec::Trivial { .. } => Vec::new(),
        };
        gens.retain(|g| !g.is_identity());
        gens
    }

    /// `m^n n! / p` and its specializations.
    pub fn expected_order(&self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match *self {
            GroupSpec::Gmpn { m, p, n } => u128::from(m).pow(n as u32) * fact(n) / u128::from(p),
            GroupSpec::Tensor { m, n } => u128::from(m).pow(n as u32),
            GroupSpec::Symmetric { n } => fact(n),
            GroupSpec::CyclicOnA1 { m } => u128::from(m),
            GroupSpec::Trivial { .. } => 1,
        }
    }

    pub fn check_limits(&self, limits: &Limits) -> Result<()> {
        if self.n() > limits.max_n {
            return Err(Error::LimitExceeded(format!("n = {} exceeds {}", self.n(), limits.max_n)));
        }
        if self.m() > limits.max_m {
            return Err(Error::LimitExceeded(format!("m = {} exceeds {}", self.m(), limits.max_m)));
        }
        Ok(())
    }

    pub fn build(&self, limits: &Limits) -> Result<FiniteGroup> {
        self.check_limits(limits)?;
        FiniteGroup::generate(
            self.label(),
            self.m(),
            self.n(),
            self.generators(),
            limits.max_group_order,
        )
    }

    /// The natural action on a quantum algebra family: `y_i` untouched on
    /// affine space and the torus, scaled inversely on the Weyl algebra.
    pub fn default_action(&self, family: Family) -> QaAction {
        match (self, family) {
            (GroupSpec::CyclicOnA1 { .. }, _) | (_, Family::Weyl) => QaAction::new(1, -1),
            _ => QaAction::new(1, 0),
        }
    }
}

/// Order of a group given by generators, by closure enumeration.
pub fn group_order(spec: &GroupSpec, limits: &Limits) -> Result<usize> {
    Ok(spec.build(limits)?.order())
}

pub trait GroupAction<E> {
    fn act(&self, g: &ReflGroupElement, u: &E) -> Result<E>;
}

fn zeta(m: u32, k: i64) -> RatFunc {
    RatFunc::root_of_unity(m, k.rem_euclid(m as i64))
}

fn permute(v: &[i64], perm: &[usize]) -> Vec<i64> {
    let mut out = vec![0; v.len()];
    for (i, &e) in v.iter().enumerate() {
        out[perm[i]] = e;
    }
    out
}

fn twist(g: &ReflGroupElement, v: &[i64]) -> i64 {
    g.diag.iter().zip(v).map(|(&d, &e)| i64::from(d) * e).sum()
}

/// `x_i -> zeta^(wx g_i) x_pi(i)`, `y_i -> zeta^(wy g_i) y_pi(i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QaAction {
    pub wx: i64,
    pub wy: i64,
}

impl QaAction {
    pub fn new(wx: i64, wy: i64) -> Self {
        QaAction { wx, wy }
    }

    pub fn act_monomial(&self, g: &ReflGroupElement, m: &QMonomial) -> (RatFunc, QMonomial) {
        let e = self.wx * twist(g, &m.a) + self.wy * twist(g, &m.b);
        let image = QMonomial {
            a: permute(&m.a, &g.perm),
            b: permute(&m.b, &g.perm),
        };
        (zeta(g.m, e), image)
    }
}

impl GroupAction<QAlgebraElement> for QaAction {
    fn act(&self, g: &ReflGroupElement, u: &QAlgebraElement) -> Result<QAlgebraElement> {
        let kind = u.kind();
        if kind.n() != g.n() {
            return Err(Error::UndefinedAction(format!(
                "group on {} indices, algebra {}",
                g.n(),
                kind.spec()
            )));
        }
        let params = kind.params();
        let moves = (0..g.n()).any(|i| params[g.perm[i]] != params[i]);
        if moves {
            return Err(Error::UndefinedAction(
                "permutations need equal parameters on the permuted indices".into(),
            ));
        }
        QAlgebraElement::from_terms(
            kind,
            u.terms().iter().map(|(m, c)| {
                let (s, image) = self.act_monomial(g, m);
                (image, s.mul(c))
            }),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VarFamily {
    X,
    H,
}

impl VarFamily {
    pub fn var(self, i: usize) -> Var {
        match self {
            VarFamily::X => Var::X(i as u16 + 1),
            VarFamily::H => Var::H(i as u16 + 1),
        }
    }
}

/// On `L * M`: `v_i -> zeta^(scale g_i) v_pi(i)` on the field and
/// `e_i -> zeta^(shift g_i) e_pi(i)` on the monoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewAction {
    pub family: VarFamily,
    pub scale: i64,
    pub shift: i64,
}

impl SkewAction {
    pub fn field_map(&self, g: &ReflGroupElement) -> Substitution {
        let mut s = Substitution::identity();
        for i in 0..g.n() {
            let img = zeta(g.m, self.scale * i64::from(g.diag[i]))
                .mul(&RatFunc::var(self.family.var(g.perm[i])));
            s.insert(self.family.var(i), img);
        }
        s
    }
}

impl GroupAction<SkewElement> for SkewAction {
    fn act(&self, g: &ReflGroupElement, u: &SkewElement) -> Result<SkewElement> {
        let act = u.action();
        if act.rank() != g.n() {
            return Err(Error::UndefinedAction(format!(
                "group on {} indices, monoid of rank {}",
                g.n(),
                act.rank()
            )));
        }
        let s = self.field_map(g);
        let mut out = SkewElement::zero(act);
        for (m, f) in u.terms() {
            let c = zeta(g.m, self.shift * twist(g, m)).mul(&s.apply(f)?);
            out = out.add(&SkewElement::term(act, permute(m, &g.perm), c)?)?;
        }
        Ok(out)
    }
}

/// On a GWA of rank `n`: `X_i -> zeta^(shift g_i) X_pi(i)`, `Y_i` inversely,
/// base variables `h_i -> h_pi(i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GwaAction {
    pub shift: i64,
}

impl GroupAction<GwaElement> for GwaAction {
    fn act(&self, g: &ReflGroupElement, u: &GwaElement) -> Result<GwaElement> {
        let data = u.data();
        if data.rank() != g.n() {
            return Err(Error::UndefinedAction(format!(
                "group on {} indices, GWA of rank {}",
                g.n(),
                data.rank()
            )));
        }
        let mut s = Substitution::identity();
        if g.perm.iter().enumerate().any(|(i, &j)| i != j) {
            let indexed: Vec<Var> = (0..g.n()).map(|i| VarFamily::H.var(i)).collect();
            if data.base_vars() != indexed.as_slice() {
                return Err(Error::UndefinedAction(
                    "permutations need base variables h1..hn".into(),
                ));
            }
            for i in 0..g.n() {
                s.insert(indexed[i], RatFunc::var(indexed[g.perm[i]]));
            }
        }
        let mut out = GwaElement::zero(data);
        for (z, d) in u.terms() {
            let c = zeta(g.m, self.shift * twist(g, z)).mul(&s.apply(d)?);
            out = out.add(&GwaElement::term(data, permute(z, &g.perm), c)?)?;
        }
        Ok(out)
    }
}

/// `(1/|G|) sum_g g(u)`.
pub fn reynolds<E: Element, A: GroupAction<E>>(group: &FiniteGroup, action: &A, u: &E) -> Result<E> {
    let mut acc = u.zero_like();
    for g in group.elements() {
        acc = acc.try_add(&action.act(g, u)?)?;
    }
    Ok(acc.scale(&RatFunc::from_rational(num_rational::BigRational::new(
        1.into(),
        group.order().into(),
    ))))
}

/// Monomials of total degree `d`: nonnegative exponents, or exponents in
/// `[-TORUS_BOX, TORUS_BOX]` on the torus.
pub fn monomials_of_degree(kind: &QAlgebraKind, d: i64) -> Vec<QMonomial> {
    let n = kind.n();
    let (lo, hi) = match kind.family() {
        Family::Torus => (-TORUS_BOX, TORUS_BOX),
        _ => (0, d.max(0)),
    };
    let mut out: Vec<QMonomial> = box_vectors(2 * n, lo, hi)
        .into_iter()
        .filter(|v| v.iter().sum::<i64>() == d)
        .map(|v| QMonomial {
            a: v[..n].to_vec(),
            b: v[n..].to_vec(),
        })
        .collect();
    out.sort();
    out
}

fn coords(u: &QAlgebraElement) -> SparseVec<QMonomial> {
    u.terms().iter().map(|(m, c)| (m.clone(), c.clone())).collect()
}

/// Basis of the degree-`d` invariants: Reynolds images of the degree-`d`
/// monomials in reduced row echelon form.
pub fn invariant_basis(
    group: &FiniteGroup,
    action: &QaAction,
    kind: &Arc<QAlgebraKind>,
    d: i64,
) -> Result<Vec<QAlgebraElement>> {
    let mut rows = Vec::new();
    for m in monomials_of_degree(kind, d) {
        let u = QAlgebraElement::monomial(kind, m, RatFunc::one());
        rows.push(coords(&reynolds(group, action, &u)?));
    }
    rref(&rows)?
        .into_iter()
        .map(|r| QAlgebraElement::from_terms(kind, r))
        .collect()
}

/// For each basis element: `R(b) = b` and `g(b) = b` for every generator.
pub fn reynolds_certificate<E: Element, A: GroupAction<E>>(
    group: &FiniteGroup,
    action: &A,
    basis: &[E],
) -> Result<Certificate> {
    let mut cert = Certificate::new();
    for (k, b) in basis.iter().enumerate() {
        cert.record(format!("R(b{}) = b{}", k + 1, k + 1), &reynolds(group, action, b)?.try_sub(b)?);
        for g in group.generators() {
            cert.record(format!("{g} fixes b{}", k + 1), &action.act(g, b)?.try_sub(b)?);
        }
    }
    Ok(cert)
}

/// Dimension of the invariants spanned by `monomials` (a union of orbits)
/// under a monomial action: one per orbit whose stabilizer acts trivially.
pub fn orbit_dimension(group: &FiniteGroup, action: &QaAction, monomials: &[QMonomial]) -> usize {
    let mut seen = std::collections::HashSet::new();
    let mut count = 0;
    for m in monomials {
        if seen.contains(m) {
            continue;
        }
        let mut trivial = true;
        for g in group.elements() {
            let (s, image) = action.act_monomial(g, m);
            if image == *m && !s.is_one() {
                trivial = false;
            }
            seen.insert(image);
        }
        count += usize::from(trivial);
    }
    count
}

/// Each group generator maps the defining relations of `pres` to zero.
pub fn certify_automorphisms<E: Element, A: GroupAction<E>>(
    group: &FiniteGroup,
    action: &A,
    pres: &Presentation,
    gens: &[E],
) -> Result<Certificate> {
    let mut cert = Certificate::new();
    for g in group.generators() {
        let images = gens.iter().map(|u| action.act(g, u)).collect::<Result<Vec<_>>>()?;
        let c = certify_hom(&GenMap::from_images(pres.clone(), images)?)?;
        for mut check in c.checks {
            check.label = format!("{g}: {}", check.label);
            cert.passed &= check.passed;
            cert.checks.push(check);
        }
    }
    Ok(cert)
}

/// Data of the embedding of the invariants of the cyclic group acting on
/// the quantum plane by `x -> zeta^k1 x`, `y -> zeta^k2 y` (`zeta` of
/// order `order`): `x^m` and `v = x^k y^l` are invariant and
/// `v x^m = q^n x^m v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DumasParameters {
    pub order: u32,
    pub k1: i64,
    pub k2: i64,
    pub m: i64,
    pub k: i64,
    pub l: i64,
    pub n: i64,
}

pub fn dumas_parameters(order: u32, k1: i64, k2: i64) -> Result<DumasParameters> {
    if order == 0 {
        return Err(Error::InvalidGroup("order must be positive".into()));
    }
    let big = i64::from(order);
    let m = big / k1.rem_euclid(big).gcd(&big);
    let solves = |a: i64, b: i64| (k1 * a + k2 * b).rem_euclid(big) == 0;
    let (l, k) = (1..=big)
        .find_map(|l| (1..=m).find(|&k| solves(k, l)).map(|k| (l, k)))
        .expect("l = order, k = m solve the congruence");
    Ok(DumasParameters {
        order,
        k1,
        k2,
        m,
        k,
        l,
        n: l * m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(spec: &str) -> FiniteGroup {
        GroupSpec::parse(spec).unwrap().build(&Limits::default()).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(build("G(2,1,2)").order(), 8);
        assert_eq!(build("G(3,3,2)").order(), 6);
        assert_eq!(build("G(1,1,3)").order(), 6);
        assert_eq!(build("Gm:3,n:2").order(), 9);
        assert_eq!(build("trivial:2").order(), 1);
        let json = r#"{"type": "G(m,p,n)", "m": 4, "p": 2, "n": 2}"#;
        assert_eq!(build(json).order(), 16);
        let tight = Limits {
            max_group_order: 5,
            ..Limits::default()
        };
        assert_eq!(
            GroupSpec::parse("G(2,1,2)").unwrap().build(&tight),
            Err(Error::GroupTooLarge { cap: 5 })
        );
        assert!(GroupSpec::parse("G(3,2,2)").is_err());
    }

    #[test]
    fn action_examples() {
        let kind = QAlgebraKind::parse_spec("affine:1").unwrap();
        let g = ReflGroupElement::diagonal(2, vec![1]).unwrap();
        let act = QaAction::new(1, 0);
        let x = kind.parse_element("x").unwrap();
        let y = kind.parse_element("y").unwrap();
        assert_eq!(act.act(&g, &x).unwrap(), x.neg());
        assert_eq!(act.act(&g, &y).unwrap(), y);

        let kind = QAlgebraKind::parse_spec("weyl:2").unwrap();
        let t = ReflGroupElement::transposition(1, 2, 0, 1).unwrap();
        let u = kind.parse_element("x1*y2").unwrap();
        let w = QaAction::new(1, -1).act(&t, &u).unwrap();
        assert_eq!(w, kind.parse_element("x2*y1").unwrap());
    }

    #[test]
    fn reynolds_examples() {
        let kind = QAlgebraKind::parse_spec("affine:1").unwrap();
        let g = build("Gm:2,n:1");
        let act = QaAction::new(1, 0);
        let x = kind.parse_element("x").unwrap();
        assert!(reynolds(&g, &act, &x).unwrap().is_zero());
        let x2 = kind.parse_element("x^2").unwrap();
        assert_eq!(reynolds(&g, &act, &x2).unwrap(), x2);

        let kind = QAlgebraKind::parse_spec("affine:2").unwrap();
        let g = build("G(2,1,2)");
        let u = kind.parse_element("x1^2").unwrap();
        let expect = kind.parse_element("(x1^2 + x2^2)/2").unwrap();
        assert_eq!(reynolds(&g, &act, &u).unwrap(), expect);
    }

    #[test]
    fn invariant_basis_examples() {
        let kind = QAlgebraKind::parse_spec("affine:1").unwrap();
        let g = build("Gm:2,n:1");
        let act = QaAction::new(1, 0);
        let b = invariant_basis(&g, &act, &kind, 2).unwrap();
        let shown: Vec<String> = b.iter().map(|u| u.to_string()).collect();
        assert_eq!(shown, vec!["x^2", "y^2"]);
        let b0 = invariant_basis(&g, &act, &kind, 0).unwrap();
        assert_eq!(b0, vec![QAlgebraElement::one(&kind)]);
    }

    #[test]
    fn inverse_and_law() {
        let g = build("G(3,1,2)");
        for a in g.elements() {
            assert!(a.mul(&a.inverse()).unwrap().is_identity());
            assert!(a.inverse().mul(a).unwrap().is_identity());
        }
    }

    #[test]
    fn dumas() {
        let p = dumas_parameters(6, 3, 2).unwrap();
        assert_eq!((p.m, p.k, p.l, p.n), (2, 2, 3, 6));
        let p = dumas_parameters(3, 1, 2).unwrap();
        assert_eq!((p.m, p.k, p.l, p.n), (3, 1, 1, 3));
    }
}
