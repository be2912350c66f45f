//! The claim manifest: every structural statement the crate checks, each
//! with the verdict it is expected to reach, and the replay engine.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{gen_map, Algebra, AnyElement};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::groups::{
    certify_automorphisms, dumas_parameters, invariant_basis, monomials_of_degree, orbit_dimension,
    reynolds_certificate, GroupAction, GroupSpec, GwaAction, Limits, QaAction, ReflGroupElement,
    SkewAction, VarFamily,
};
use crate::gwa::gwa_instance;
use crate::hnf::{generates_group, generates_monoid};
use crate::linalg::{same_span, SparseVec};
use crate::quantum::{QAlgebraElement, QAlgebraKind, QMonomial};
use crate::skew::ActionJson;
use crate::verify::{certify_equivariance, certify_hom, Certificate, Check, Presentation};

const BUILTIN: &str = include_str!("claims.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Source {
    Spec(String),
    Custom {
        generators: Vec<String>,
        relations: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Target {
    Spec(String),
    Custom(ActionJson),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum ActionSpec {
    Qa { wx: i64, wy: i64 },
    Skew { family: VarFamily, scale: i64, shift: i64 },
    Gwa { shift: i64 },
}

impl GroupAction<AnyElement> for ActionSpec {
    fn act(&self, g: &ReflGroupElement, u: &AnyElement) -> Result<AnyElement> {
        Ok(match (self, u) {
            (ActionSpec::Qa { wx, wy }, AnyElement::Quantum(v)) => {
                AnyElement::Quantum(QaAction::new(*wx, *wy).act(g, v)?)
            }
            (&ActionSpec::Skew { family, scale, shift }, AnyElement::Skew(v)) => {
                AnyElement::Skew(SkewAction { family, scale, shift }.act(g, v)?)
            }
            (&ActionSpec::Gwa { shift }, AnyElement::Gwa(v)) => {
                AnyElement::Gwa(GwaAction { shift }.act(g, v)?)
            }
            _ => {
                return Err(Error::UndefinedAction(format!(
                    "{self:?} does not act on {} elements",
                    u.engine()
                )))
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ClaimCheck {
    /// The images satisfy the defining relations of the source.
    Hom {
        source: Source,
        target: Target,
        images: BTreeMap<String, String>,
    },
    /// The map commutes with the group on the source generators.
    Equivariance {
        source: String,
        target: Target,
        images: BTreeMap<String, String>,
        group: String,
        source_action: ActionSpec,
        target_action: ActionSpec,
    },
    Identity {
        algebra: String,
        lhs: String,
        rhs: String,
    },
    /// Every group generator preserves the relations and fixes `fixed`.
    Automorphism {
        algebra: String,
        group: String,
        action: ActionSpec,
        #[serde(default)]
        fixed: Vec<String>,
    },
    /// The union of the supports of the embedded elements is `support`,
    /// and it generates `Z^n` as a group.
    Support {
        algebra: String,
        elements: Vec<String>,
        support: Vec<Vec<i64>>,
    },
    GwaInstance {
        instance: String,
    },
    GroupOrder {
        group: String,
        order: u64,
    },
    Invariants {
        group: String,
        algebra: String,
        degree: i64,
        #[serde(default)]
        action: Option<ActionSpec>,
        #[serde(default)]
        basis: Option<Vec<String>>,
    },
    Dumas {
        order: u32,
        k1: i64,
        k2: i64,
        m: i64,
        k: i64,
        l: i64,
        n: i64,
    },
    MonoidGeneration {
        n: usize,
        vectors: Vec<Vec<i64>>,
    },
}

impl ClaimCheck {
    pub fn kind(&self) -> &'static str {
        match self {
            ClaimCheck::Hom { .. } => "hom",
            ClaimCheck::Equivariance { .. } => "equivariance",
            ClaimCheck::Identity { .. } => "identity",
            ClaimCheck::Automorphism { .. } => "automorphism",
            ClaimCheck::Support { .. } => "support",
            ClaimCheck::GwaInstance { .. } => "gwa-instance",
            ClaimCheck::GroupOrder { .. } => "group-order",
            ClaimCheck::Invariants { .. } => "invariants",
            ClaimCheck::Dumas { .. } => "dumas",
            ClaimCheck::MonoidGeneration { .. } => "monoid-generation",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub statement: String,
    pub expect: Verdict,
    #[serde(flatten)]
    pub check: ClaimCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub claims: Vec<Claim>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub id: String,
    pub kind: String,
    pub statement: String,
    pub expected: Verdict,
    pub observed: Verdict,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub total: usize,
    pub ok: usize,
    pub mismatched: usize,
    pub all_ok: bool,
    pub claims: Vec<ClaimReport>,
}

impl Manifest {
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("the embedded manifest is valid")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let m: Manifest = serde_json::from_str(text).map_err(|e| Error::Manifest(e.to_string()))?;
        let mut ids = std::collections::BTreeSet::new();
        for c in &m.claims {
            if !ids.insert(c.id.as_str()) {
                return Err(Error::Manifest(format!("duplicate claim id `{}`", c.id)));
            }
        }
        Ok(m)
    }

    pub fn get(&self, id: &str) -> Result<&Claim> {
        self.claims
            .iter()
            .find(|c| c.id == id)
            .ok_or_else(|| Error::UnknownClaim(id.to_string()))
    }

    pub fn verify(&self, id: &str, limits: &Limits) -> Result<ClaimReport> {
        Ok(self.get(id)?.replay(limits))
    }

    pub fn verify_all(&self, limits: &Limits) -> Report {
        let claims: Vec<ClaimReport> = self.claims.iter().map(|c| c.replay(limits)).collect();
        Report::new(claims)
    }
}

impl Report {
    pub fn new(claims: Vec<ClaimReport>) -> Self {
        let ok = claims.iter().filter(|c| c.ok).count();
        Report {
            total: claims.len(),
            ok,
            mismatched: claims.len() - ok,
            all_ok: ok == claims.len(),
            claims,
        }
    }
}

impl Claim {
    pub fn replay(&self, limits: &Limits) -> ClaimReport {
        let (observed, error, checks) = match run(&self.check, limits) {
            Ok(cert) => (
                if cert.passed { Verdict::Pass } else { Verdict::Fail },
                None,
                cert.checks,
            ),
            Err(e) => (Verdict::Error, Some(e.to_string()), Vec::new()),
        };
        ClaimReport {
            id: self.id.clone(),
            kind: self.check.kind().to_string(),
            statement: self.statement.clone(),
            expected: self.expect,
            observed,
            ok: observed == self.expect,
            error,
            checks,
        }
    }
}

fn target_algebra(t: &Target) -> Result<Algebra> {
    match t {
        Target::Spec(s) => Algebra::parse(s),
        Target::Custom(json) => Algebra::from_action_json(json),
    }
}

fn source_presentation(s: &Source) -> Result<Presentation> {
    match s {
        Source::Spec(spec) => Ok(QAlgebraKind::parse_spec(spec)?.presentation()),
        Source::Custom {
            generators,
            relations,
        } => Presentation::new(generators.clone(), relations),
    }
}

fn pairs(images: &BTreeMap<String, String>) -> Vec<(String, String)> {
    images.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
}

fn quantum_kind(spec: &str) -> Result<std::sync::Arc<QAlgebraKind>> {
    match Algebra::parse(spec)? {
        Algebra::Quantum(k) => Ok(k),
        other => Err(Error::KindMismatch(format!("{other} is not a quantum algebra"))),
    }
}

fn coords(u: &QAlgebraElement) -> SparseVec<QMonomial> {
    u.terms().iter().map(|(m, c)| (m.clone(), c.clone())).collect()
}

fn run(check: &ClaimCheck, limits: &Limits) -> Result<Certificate> {
    match check {
        ClaimCheck::Hom {
            source,
            target,
            images,
        } => {
            let pres = source_presentation(source)?;
            let map = gen_map(&pres, &target_algebra(target)?, &pairs(images))?;
            certify_hom(&map)
        }
        ClaimCheck::Equivariance {
            source,
            target,
            images,
            group,
            source_action,
            target_action,
        } => {
            let kind = quantum_kind(source)?;
            let pres = kind.presentation();
            let map = gen_map(&pres, &target_algebra(target)?, &pairs(images))?;
            let mut cert = certify_hom(&map)?;
            let group = GroupSpec::parse(group)?.build(limits)?;
            let gens: Vec<AnyElement> = kind.generators().into_iter().map(AnyElement::Quantum).collect();
            let to_word = |u: &AnyElement| match u {
                AnyElement::Quantum(v) => v.to_word(&pres),
                _ => Err(Error::KindMismatch("source elements are quantum".into())),
            };
            cert.merge(certify_equivariance(
                &map,
                &gens,
                to_word,
                group.generators(),
                |g, u| source_action.act(g, u),
                |g, u| target_action.act(g, u),
            )?);
            Ok(cert)
        }
        ClaimCheck::Identity { algebra, lhs, rhs } => {
            let alg = Algebra::parse(algebra)?;
            let mut cert = Certificate::new();
            let r = alg.parse_element(lhs)?.try_sub(&alg.parse_element(rhs)?)?;
            cert.record(format!("{lhs} = {rhs}"), &r);
            Ok(cert)
        }
        ClaimCheck::Automorphism {
            algebra,
            group,
            action,
            fixed,
        } => {
            let alg = Algebra::parse(algebra)?;
            let group = GroupSpec::parse(group)?.build(limits)?;
            let (pres, gens) = alg.presentation()?;
            let mut cert = certify_automorphisms(&group, action, &pres, &gens)?;
            for text in fixed {
                let u = alg.parse_element(text)?;
                for g in group.generators() {
                    cert.record(format!("{g} fixes {text}"), &action.act(g, &u)?.try_sub(&u)?);
                }
            }
            Ok(cert)
        }
        ClaimCheck::Support {
            algebra,
            elements,
            support,
        } => {
            let alg = Algebra::parse(algebra)?;
            let Algebra::Gwa(data) = &alg else {
                return Err(Error::KindMismatch("supports are taken of GWA embeddings".into()));
            };
            let mut union = std::collections::BTreeSet::new();
            for text in elements {
                let u = data.parse_element(text)?;
                union.extend(u.embed()?.supp());
            }
            let expect: std::collections::BTreeSet<Vec<i64>> = support.iter().cloned().collect();
            let mut cert = Certificate::new();
            cert.record_flag(
                "support of the embedded generators",
                union == expect,
                format!("{union:?}"),
            );
            let vectors: Vec<Vec<i64>> = union.into_iter().collect();
            let (ok, hnf) = generates_group(&vectors, data.rank())?;
            cert.record_flag(
                "supports generate Z^n (identity HNF)",
                ok && hnf.check(),
                format!("{:?}", hnf.hnf),
            );
            Ok(cert)
        }
        ClaimCheck::GwaInstance { instance } => gwa_instance(instance)?.checks(),
        ClaimCheck::GroupOrder { group, order } => {
            let spec = GroupSpec::parse(group)?;
            let found = spec.build(limits)?.order() as u64;
            let mut cert = Certificate::new();
            cert.record_flag("closure order", found == *order, found.to_string());
            cert.record_flag(
                "order formula",
                u128::from(found) == spec.expected_order(),
                spec.expected_order().to_string(),
            );
            Ok(cert)
        }
        ClaimCheck::Invariants {
            group,
            algebra,
            degree,
            action,
            basis,
        } => {
            if degree.unsigned_abs() > u64::from(limits.max_degree) {
                return Err(Error::LimitExceeded(format!("degree {degree}")));
            }
            let spec = GroupSpec::parse(group)?;
            let kind = quantum_kind(algebra)?;
            let act = match action {
                None => spec.default_action(kind.family()),
                Some(ActionSpec::Qa { wx, wy }) => QaAction::new(*wx, *wy),
                Some(other) => {
                    return Err(Error::UndefinedAction(format!("{other:?} on {algebra}")))
                }
            };
            let group = spec.build(limits)?;
            let found = invariant_basis(&group, &act, &kind, *degree)?;
            let mut cert = reynolds_certificate(&group, &act, &found)?;
            let orbits = orbit_dimension(&group, &act, &monomials_of_degree(&kind, *degree));
            cert.record_flag(
                "dimension equals the count of monomial orbits with trivial character",
                orbits == found.len(),
                format!("{} vs {orbits}", found.len()),
            );
            if let Some(expect) = basis {
                let expect = expect
                    .iter()
                    .map(|s| kind.parse_element(s).map(|u| coords(&u)))
                    .collect::<Result<Vec<_>>>()?;
                let rows: Vec<_> = found.iter().map(coords).collect();
                cert.record_flag(
                    "span equals the stated basis",
                    same_span(&rows, &expect)?,
                    found.iter().map(|u| u.to_string()).collect::<Vec<_>>().join("; "),
                );
            }
            Ok(cert)
        }
        ClaimCheck::Dumas {
            order,
            k1,
            k2,
            m,
            k,
            l,
            n,
        } => {
            let p = dumas_parameters(*order, *k1, *k2)?;
            let mut cert = Certificate::new();
            cert.record_flag(
                "parameters (m, k, l, n)",
                (p.m, p.k, p.l, p.n) == (*m, *k, *l, *n),
                format!("({}, {}, {}, {})", p.m, p.k, p.l, p.n),
            );
            let kind = QAlgebraKind::parse_spec("affine:1")?;
            let group = GroupSpec::Tensor { m: *order, n: 1 }.build(limits)?;
            let act = QaAction::new(*k1, *k2);
            let xm = kind.parse_element(&format!("x^{}", p.m))?;
            let v = kind.parse_element(&format!("x^{}*y^{}", p.k, p.l))?;
            for g in group.generators() {
                cert.record(format!("{g} fixes x^m"), &act.act(g, &xm)?.sub(&xm)?);
                cert.record(format!("{g} fixes v"), &act.act(g, &v)?.sub(&v)?);
            }
            let qn = kind.parse_element(&format!("q^{}", p.n))?;
            let r = v.mul(&xm)?.sub(&qn.mul(&xm)?.mul(&v)?)?;
            cert.record("v x^m = q^n x^m v", &r);
            Ok(cert)
        }
        ClaimCheck::MonoidGeneration { n, vectors } => {
            let mut cert = Certificate::new();
            let ok = generates_monoid(vectors, *n)?;
            cert.record_flag("vectors generate N^n", ok, format!("{vectors:?}"));
            Ok(cert)
        }
    }
}
