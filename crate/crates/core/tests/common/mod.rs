#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use quantum_galois::gwa::{GwaData, GwaElement};
use quantum_galois::quantum::{Family, QAlgebraElement, QAlgebraKind, QMonomial};
use quantum_galois::skew::{MonoidAction, SkewElement};
use quantum_galois::{RatFunc, Var};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q() -> RatFunc {
    RatFunc::var(Var::q())
}

/// Small polynomial in `vars` with integer coefficients in `[-3, 3]`.
pub fn poly(rng: &mut ChaCha8Rng, vars: &[Var], max_deg: u32, terms: usize) -> RatFunc {
    let mut out = RatFunc::zero();
    for _ in 0..terms {
        let mut t = RatFunc::from_int(rng.gen_range(-3..=3));
        for &v in vars {
            let e = rng.gen_range(0..=max_deg);
            t = t.mul(&RatFunc::var(v).pow(e as i64).unwrap());
        }
        out = out.add(&t);
    }
    out
}

/// Nonzero scalar in `k(q)`: a small polynomial, sometimes divided by
/// another one.
pub fn scalar(rng: &mut ChaCha8Rng) -> RatFunc {
    loop {
        let num = poly(rng, &[Var::q()], 2, 2);
        if num.is_zero() {
            continue;
        }
        if rng.gen_bool(0.3) {
            let den = poly(rng, &[Var::q()], 1, 2);
            if !den.is_zero() {
                return num.div(&den).unwrap();
            }
        }
        return num;
    }
}

/// Random element with up to `terms` monomials of degree at most `max_deg`
/// in each exponent (Laurent on the torus).
pub fn q_element(
    rng: &mut ChaCha8Rng,
    kind: &Arc<QAlgebraKind>,
    max_deg: i64,
    terms: usize,
) -> QAlgebraElement {
    let n = kind.n();
    let lo = if kind.family() == Family::Torus { -max_deg } else { 0 };
    let mut out = QAlgebraElement::zero(kind);
    for _ in 0..rng.gen_range(1..=terms) {
        let m = QMonomial {
            a: (0..n).map(|_| rng.gen_range(lo..=max_deg)).collect(),
            b: (0..n).map(|_| rng.gen_range(lo..=max_deg)).collect(),
        };
        let t = QAlgebraElement::monomial(kind, m, scalar(rng));
        out = out.add(&t).unwrap();
    }
    out
}

/// Random element of total degree at most `max_deg` in `weyl:1`.
pub fn weyl1_element(rng: &mut ChaCha8Rng, kind: &Arc<QAlgebraKind>, max_deg: i64) -> QAlgebraElement {
    let mut out = QAlgebraElement::zero(kind);
    for _ in 0..rng.gen_range(1..=3) {
        let a = rng.gen_range(0..=max_deg);
        let b = rng.gen_range(0..=max_deg - a);
        let m = QMonomial { a: vec![a], b: vec![b] };
        out = out.add(&QAlgebraElement::monomial(kind, m, scalar(rng))).unwrap();
    }
    out
}

/// Random element with exponents in `[lo, hi]`; coefficients are small
/// polynomials in `field_vars`, sometimes over a linear denominator.
pub fn skew_element(
    rng: &mut ChaCha8Rng,
    action: &Arc<MonoidAction>,
    field_vars: &[Var],
    lo: i64,
    hi: i64,
) -> SkewElement {
    let mut out = SkewElement::zero(action);
    for _ in 0..rng.gen_range(1..=3) {
        let m: Vec<i64> = (0..action.rank()).map(|_| rng.gen_range(lo..=hi)).collect();
        let mut c = poly(rng, field_vars, 1, 2).add(&RatFunc::from_int(rng.gen_range(1..=3)));
        if !field_vars.is_empty() && rng.gen_bool(0.3) {
            let v = field_vars[rng.gen_range(0..field_vars.len())];
            let den = RatFunc::var(v).add(&RatFunc::from_int(rng.gen_range(1..=3)));
            c = c.div(&den).unwrap();
        }
        out = out.add(&SkewElement::term(action, m, c).unwrap()).unwrap();
    }
    out
}

/// Exponents in `[-2, 2]`, base coefficients of degree at most 2.
pub fn gwa_element(rng: &mut ChaCha8Rng, data: &Arc<GwaData>) -> GwaElement {
    let mut out = GwaElement::zero(data);
    for _ in 0..rng.gen_range(1..=3) {
        let z: Vec<i64> = (0..data.rank()).map(|_| rng.gen_range(-2..=2)).collect();
        let c = poly(rng, data.base_vars(), 1, 2).add(&RatFunc::from_int(rng.gen_range(1..=3)));
        out = out.add(&GwaElement::term(data, z, c).unwrap()).unwrap();
    }
    out
}

/// Normal form of a word in `x`, `y` by repeatedly rewriting the leftmost
/// `yx` as `q xy + 1`. Returns coefficients of `x^a y^b` keyed by `(a, b)`.
pub fn naive_weyl_normal_form(word: &str) -> BTreeMap<(i64, i64), RatFunc> {
    let mut pending: BTreeMap<String, RatFunc> = BTreeMap::new();
    pending.insert(word.to_string(), RatFunc::one());
    let mut done: BTreeMap<(i64, i64), RatFunc> = BTreeMap::new();
    while let Some((w, c)) = pending.pop_first() {
        match w.find("yx") {
            None => {
                let a = w.chars().filter(|&ch| ch == 'x').count() as i64;
                let b = w.len() as i64 - a;
                let e = done.entry((a, b)).or_insert_with(RatFunc::zero);
                *e = e.add(&c);
            }
            Some(i) => {
                let swapped = format!("{}xy{}", &w[..i], &w[i + 2..]);
                let dropped = format!("{}{}", &w[..i], &w[i + 2..]);
                for (next, coeff) in [(swapped, c.mul(&q())), (dropped, c)] {
                    let e = pending.entry(next).or_insert_with(RatFunc::zero);
                    *e = e.add(&coeff);
                }
            }
        }
    }
    done.retain(|_, c| !c.is_zero());
    done
}

pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Number of monomials `x^a y^b` of total degree `d` in `2n` variables
/// with `m | a_i` for every `i`.
pub fn cyclic_invariant_count(m: i64, n: i64, d: i64) -> u64 {
    (0..=d / m)
        .map(|k| binomial(k + n - 1, n - 1) * binomial(d - m * k + n - 1, n - 1))
        .sum()
}

/// Every element of `G(m, p, n)` as `(diag, perm)`, listed directly.
pub fn gmpn_elements(m: u32, p: u32, n: usize) -> Vec<(Vec<u32>, Vec<usize>)> {
    let mut diags: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..n {
        diags = diags
            .into_iter()
            .flat_map(|d| {
                (0..m).map(move |e| {
                    let mut v = d.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    diags.retain(|d| d.iter().sum::<u32>() % p == 0);
    let perms = permutations(n);
    let mut out = Vec::new();
    for d in &diags {
        for pi in &perms {
            out.push((d.clone(), pi.clone()));
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut v = p.clone();
            v.insert(i, n - 1);
            out.push(v);
        }
    }
    out
}

/// Fixed-space dimension of a monomial action, by orbits: a monomial
/// orbit carries an invariant iff every stabilizing element acts on it by
/// the trivial character. Works with exponents of `zeta_m` only.
pub fn orbit_count(
    elements: &[(Vec<u32>, Vec<usize>)],
    m: u32,
    weights: (i64, i64),
    monomials: &[(Vec<i64>, Vec<i64>)],
) -> usize {
    let mut seen = std::collections::HashSet::new();
    let mut count = 0;
    for (a, b) in monomials {
        if seen.contains(&(a.clone(), b.clone())) {
            continue;
        }
        let mut trivial = true;
        for (d, pi) in elements {
            let mut a2 = vec![0; a.len()];
            let mut b2 = vec![0; b.len()];
            for i in 0..a.len() {
                a2[pi[i]] = a[i];
                b2[pi[i]] = b[i];
            }
            let e: i64 = (0..a.len())
                .map(|i| d[i] as i64 * (weights.0 * a[i] + weights.1 * b[i]))
                .sum();
            if a2 == *a && b2 == *b && e.rem_euclid(m as i64) != 0 {
                trivial = false;
            }
            seen.insert((a2, b2));
        }
        count += usize::from(trivial);
    }
    count
}
