//! The `qgalois` command line.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::algebra::{Algebra, AnyElement, AnyJson};
use crate::claims::{ClaimReport, Manifest, Report, Verdict};
use crate::error::{Error, Result};
use crate::groups::{invariant_basis, reynolds_certificate, GroupSpec, Limits, QaAction};
use crate::gwa::InstanceName;
use crate::hnf::hermite_normal_form;
use crate::verify::Certificate;

#[derive(Parser, Debug)]
#[command(name = "qgalois", version, about = "Exact checks for quantum linear Galois orders")]
struct Cli {
    /// Largest group materialized by closure.
    #[arg(long, global = true, env = "QGALOIS_MAX_GROUP_ORDER", default_value_t = 100_000)]
    max_group_order: usize,
    /// Largest graded degree for invariant computations.
    #[arg(long, global = true, env = "QGALOIS_MAX_DEGREE", default_value_t = 10)]
    max_degree: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Replay one claim of the manifest, or all of them.
    Verify {
        id: String,
        #[arg(long)]
        json: bool,
        /// Use this manifest instead of the built-in one.
        #[arg(long)]
        manifest: Option<std::path::PathBuf>,
    },
    /// Evaluate an expression in an algebra and print its normal form.
    Compute {
        #[arg(long)]
        algebra: String,
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Basis of the graded invariants of a group.
    Invariants {
        #[arg(long)]
        group: String,
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        degree: i64,
        /// Weights `wx,wy`: x_i -> zeta^(wx g_i) x_pi(i), y_i -> zeta^(wy g_i) y_pi(i).
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Support of a skew ring element, or of the embedding of a GWA element.
    Supp {
        #[arg(long)]
        algebra: String,
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Hermite normal form of integer row vectors, e.g. "1,1;0,1".
    Hnf {
        rows: String,
        #[arg(long)]
        json: bool,
    },
    /// List the GWA instances and the claims of the manifest.
    Catalog {
        #[arg(long)]
        json: bool,
    },
}

/// Run the CLI; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        // a closed pipe downstream is not worth reporting
        Err(Error::Io(_)) => 2,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Parse(e.to_string()))?;
    writeln!(out, "{text}").map_err(io)
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::Error => "error",
    }
}

fn print_claim(out: &mut dyn Write, c: &ClaimReport) -> Result<()> {
    let tag = if c.ok { "ok" } else { "MISMATCH" };
    writeln!(
        out,
        "{tag:<8} {:<40} expected {}, observed {}",
        c.id,
        verdict(c.expected),
        verdict(c.observed)
    )
    .map_err(io)?;
    if let Some(e) = &c.error {
        writeln!(out, "         error: {e}").map_err(io)?;
    }
    if !c.ok || c.expected == Verdict::Fail {
        for ch in c.checks.iter().filter(|ch| !ch.passed) {
            writeln!(out, "         {}: residual {}", ch.label, ch.residual).map_err(io)?;
        }
    }
    Ok(())
}

fn parse_weights(text: &str) -> Result<QaAction> {
    let bad = || Error::Parse(format!("weights must look like `1,-1`, got `{text}`"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    Ok(QaAction::new(
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

fn parse_rows(text: &str) -> Result<(Vec<Vec<i64>>, usize)> {
    let rows: Vec<Vec<i64>> = text
        .split(';')
        .map(|r| {
            r.split(',')
                .map(|x| {
                    x.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad integer `{}`", x.trim())))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let n = rows.first().map_or(0, Vec::len);
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Parse("rows must be nonempty and of equal length".into()));
    }
    Ok((rows, n))
}

#[derive(Serialize)]
struct InvariantsOutput {
    group: String,
    order: usize,
    algebra: String,
    degree: i64,
    dimension: usize,
    basis: Vec<String>,
    elements: Vec<AnyJson>,
    certificate: Certificate,
}

#[derive(Serialize)]
struct CatalogOutput {
    instances: Vec<CatalogInstance>,
    claims: Vec<CatalogClaim>,
}

#[derive(Serialize)]
struct CatalogInstance {
    id: &'static str,
    description: &'static str,
}

#[derive(Serialize)]
struct CatalogClaim {
    id: String,
    kind: &'static str,
    expect: Verdict,
    statement: String,
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let limits = Limits {
        max_group_order: cli.max_group_order,
        max_degree: cli.max_degree,
        ..Limits::default()
    };
    match cli.command {
        Command::Verify { id, json, manifest } => {
            let manifest = match manifest {
                Some(path) => Manifest::parse(
                    &std::fs::read_to_string(&path)
                        .map_err(|e| Error::Manifest(format!("{}: {e}", path.display())))?,
                )?,
                None => Manifest::builtin(),
            };
            let report = if id == "all" {
                manifest.verify_all(&limits)
            } else {
                Report::new(vec![manifest.verify(&id, &limits)?])
            };
            if json {
                emit(out, &report)?;
            } else {
                for c in &report.claims {
                    print_claim(out, c)?;
                }
                writeln!(out, "{} of {} claims as expected", report.ok, report.total).map_err(io)?;
            }
            Ok(if report.all_ok { 0 } else { 1 })
        }
        Command::Compute {
            algebra,
            expr,
            json,
        } => {
            let u = Algebra::parse(&algebra)?.parse_element(&expr)?;
            if json {
                emit(out, &u.to_json())?;
            } else {
                writeln!(out, "{u}").map_err(io)?;
            }
            Ok(0)
        }
        Command::Invariants {
            group,
            algebra,
            degree,
            weights,
            json,
        } => {
            if degree.unsigned_abs() > u64::from(limits.max_degree) {
                return Err(Error::LimitExceeded(format!(
                    "degree {degree} exceeds {}",
                    limits.max_degree
                )));
            }
            let spec = GroupSpec::parse(&group)?;
            let Algebra::Quantum(kind) = Algebra::parse(&algebra)? else {
                return Err(Error::KindMismatch(
                    "invariants are computed in quantum algebras".into(),
                ));
            };
            let action = match weights {
                Some(w) => parse_weights(&w)?,
                None => spec.default_action(kind.family()),
            };
            let g = spec.build(&limits)?;
            let basis = invariant_basis(&g, &action, &kind, degree)?;
            let certificate = reynolds_certificate(&g, &action, &basis)?;
            let result = InvariantsOutput {
                group: spec.label(),
                order: g.order(),
                algebra: kind.spec(),
                degree,
                dimension: basis.len(),
                basis: basis.iter().map(|u| u.to_string()).collect(),
                elements: basis.iter().map(|u| AnyElement::Quantum(u.clone()).to_json()).collect(),
                certificate,
            };
            if json {
                emit(out, &result)?;
            } else {
                writeln!(
                    out,
                    "{} (order {}) on {}, degree {}: dimension {}",
                    result.group, result.order, result.algebra, degree, result.dimension
                )
                .map_err(io)?;
                for b in &result.basis {
                    writeln!(out, "  {b}").map_err(io)?;
                }
                let verdict = if result.certificate.passed { "pass" } else { "FAIL" };
                writeln!(
                    out,
                    "reynolds certificate: {verdict} ({} checks)",
                    result.certificate.checks.len()
                )
                .map_err(io)?;
            }
            Ok(if result.certificate.passed { 0 } else { 1 })
        }
        Command::Supp {
            algebra,
            expr,
            json,
        } => {
            let supp = match Algebra::parse(&algebra)?.parse_element(&expr)? {
                AnyElement::Skew(u) => u.supp(),
                AnyElement::Gwa(u) => u.embed()?.supp(),
                AnyElement::Quantum(_) => {
                    return Err(Error::KindMismatch(
                        "supports are defined for skew rings and GWAs".into(),
                    ))
                }
            };
            let supp: Vec<Vec<i64>> = supp.into_iter().collect();
            if json {
                emit(out, &supp)?;
            } else {
                for m in &supp {
                    let parts: Vec<String> = m.iter().map(i64::to_string).collect();
                    writeln!(out, "({})", parts.join(", ")).map_err(io)?;
                }
            }
            Ok(0)
        }
        Command::Hnf { rows, json } => {
            let (rows, n) = parse_rows(&rows)?;
            let cert = hermite_normal_form(&rows, n)?;
            if json {
                #[derive(Serialize)]
                struct HnfOutput<'a> {
                    #[serde(flatten)]
                    cert: &'a crate::hnf::HnfCertificate,
                    generates_group: bool,
                    verified: bool,
                }
                emit(
                    out,
                    &HnfOutput {
                        cert: &cert,
                        generates_group: cert.is_identity(n),
                        verified: cert.check(),
                    },
                )?;
            } else {
                let show = |m: &[Vec<i64>]| -> String {
                    m.iter()
                        .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
                        .collect::<Vec<_>>()
                        .join("; ")
                };
                writeln!(out, "hnf: {}", show(&cert.hnf)).map_err(io)?;
                writeln!(out, "transform: {}", show(&cert.transform)).map_err(io)?;
                writeln!(out, "rank: {}", cert.rank).map_err(io)?;
                writeln!(out, "generates Z^{n}: {}", cert.is_identity(n)).map_err(io)?;
            }
            Ok(0)
        }
        Command::Catalog { json } => {
            let manifest = Manifest::builtin();
            let result = CatalogOutput {
                instances: InstanceName::ALL
                    .iter()
                    .map(|n| CatalogInstance {
                        id: n.id(),
                        description: n.description(),
                    })
                    .collect(),
                claims: manifest
                    .claims
                    .iter()
                    .map(|c| CatalogClaim {
                        id: c.id.clone(),
                        kind: c.check.kind(),
                        expect: c.expect,
                        statement: c.statement.clone(),
                    })
                    .collect(),
            };
            if json {
                emit(out, &result)?;
            } else {
                writeln!(out, "GWA instances:").map_err(io)?;
                for i in &result.instances {
                    writeln!(out, "  {:<10} {}", i.id, i.description).map_err(io)?;
                }
                writeln!(out, "claims:").map_err(io)?;
                for c in &result.claims {
                    writeln!(out, "  {:<40} [{}] {}", c.id, c.kind, c.statement).map_err(io)?;
                }
            }
            Ok(0)
        }
    }
}
