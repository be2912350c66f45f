//! The coefficient tower: cyclotomic numbers, multivariate polynomials over
//! them, and reduced rational functions.

mod cyclotomic;
mod poly;
mod ratfunc;
mod subst;
mod var;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use poly::{poly_gcd, Monomial, MultiPoly};
pub use ratfunc::{RatFunc, RatFuncJson};
pub use subst::Substitution;
pub use var::Var;

/// Join `(negative, magnitude)` terms into `a - b + c` form.
pub(crate) fn join_signed(parts: &[(bool, String)]) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in parts.iter().enumerate() {
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(body);
    }
    if out.is_empty() {
        out.push('0');
    }
    if parts.len() == 1 && !parts[0].0 && wrapped(&out) {
        out = out[1..out.len() - 1].to_string();
    }
    out
}

/// Whether the outer parentheses of `s` enclose all of it.
fn wrapped(s: &str) -> bool {
    if !s.starts_with('(') || !s.ends_with(')') {
        return false;
    }
    let mut depth = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && i + 1 < s.len() {
                    return false;
                }
            }
            _ => {}
        }
    }
    true
}

/// Render `coeff * rest` with the conventions shared by every printer in the
/// crate: unit coefficients are dropped, non-rational or multi-term
/// coefficients are parenthesized. Returns `(negative, magnitude)`.
pub(crate) fn signed_term(coeff: &RatFunc, rest: &str) -> (bool, String) {
    if let Some(c) = coeff.as_constant() {
        if let Some(r) = c.as_rational() {
            use num_traits::{One, Signed};
            let mag = r.abs();
            let body = match (mag.is_one(), rest.is_empty()) {
                (true, true) => "1".to_string(),
                (true, false) => rest.to_string(),
                (false, true) => mag.to_string(),
                (false, false) => format!("{mag}*{rest}"),
            };
            return (r.is_negative(), body);
        }
    }
    if coeff.is_single_term_polynomial() {
        // a monomial coefficient such as -3*q^2 prints without parentheses
        let s = coeff.to_string();
        let (neg, mag) = match s.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, s),
        };
        if !mag.starts_with('(') && !mag.contains(' ') {
            let body = if rest.is_empty() {
                mag
            } else {
                format!("{mag}*{rest}")
            };
            return (neg, body);
        }
    }
    let body = if rest.is_empty() {
        format!("({coeff})")
    } else {
        format!("({coeff})*{rest}")
    };
    (false, body)
}
