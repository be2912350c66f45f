//! Exact arithmetic in cyclotomic fields `Q(z_m)`.
//!
//! An element is stored in the power basis `1, z_m, ..., z_m^(phi(m)-1)`
//! modulo the m-th cyclotomic polynomial. After every operation the order
//! is lowered to the smallest `m` whose field still contains the value, so
//! equal numbers always have identical representations regardless of the
//! order they were computed in.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<BigRational>,
}

pub fn euler_phi(m: u32) -> usize {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

fn divisors(m: u32) -> Vec<u32> {
    (1..=m).filter(|d| m % d == 0).collect()
}

/// Coefficients (constant term first) of the m-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by every proper cyclotomic factor
    let mut poly = vec![BigInt::zero(); m as usize + 1];
    poly[0] = -BigInt::one();
    poly[m as usize] = BigInt::one();
    for d in divisors(m) {
        if d == m {
            continue;
        }
        let factor = cyclotomic_polynomial(d);
        poly = divide_monic(&poly, &factor);
    }
    let poly = Arc::new(poly);
    cache.lock().unwrap().insert(m, poly.clone());
    poly
}

fn divide_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Reduce a polynomial in `z` modulo the m-th cyclotomic polynomial.
fn reduce(mut poly: Vec<BigRational>, m: u32) -> Vec<BigRational> {
    let phi = euler_phi(m);
    let cyc = cyclotomic_polynomial(m);
    for deg in (phi..poly.len()).rev() {
        let c = std::mem::replace(&mut poly[deg], BigRational::zero());
        if c.is_zero() {
            continue;
        }
        for (j, cj) in cyc.iter().take(phi).enumerate() {
            if !cj.is_zero() {
                poly[deg - phi + j] -= &c * BigRational::from_integer(cj.clone());
            }
        }
    }
    poly.resize(phi, BigRational::zero());
    poly
}

/// Unique solution of an overdetermined system, if it is consistent.
/// Columns are assumed linearly independent.
fn solve(mut rows: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(ncols);
    for col in 0..ncols {
        let found = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(pivot_row, found);
        rhs.swap(pivot_row, found);
        let inv = rows[pivot_row][col].recip();
        for v in rows[pivot_row].iter_mut() {
            *v *= &inv;
        }
        rhs[pivot_row] *= &inv;
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..ncols {
                    let sub = &f * &rows[pivot_row][c];
                    rows[r][c] -= sub;
                }
                let sub = &f * &rhs[pivot_row];
                rhs[r] -= sub;
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if rhs[pivot_row..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&r| rhs[r].clone()).collect())
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn rational(r: BigRational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    /// Primitive root `z_m = exp(2 pi i / m)`.
    pub fn root(m: u32) -> Self {
        Self::root_power(m, 1)
    }

    /// `z_m^k` for any integer `k`.
    pub fn root_power(m: u32, k: i64) -> Self {
        assert!(m >= 1, "root of unity order must be positive");
        let k = k.rem_euclid(m as i64) as usize;
        let mut poly = vec![BigRational::zero(); k.max(1) + 1];
        poly[k] = BigRational::one();
        Self::from_power_basis(m, poly)
    }

    /// Build from coefficients of `1, z_m, z_m^2, ...` (any length).
    pub fn from_power_basis(m: u32, poly: Vec<BigRational>) -> Self {
        let mut c = Cyclotomic {
            order: m,
            coeffs: reduce(poly, m),
        };
        c.normalize();
        c
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.order == 1).then(|| &self.coeffs[0])
    }

    /// True for rationals that are negative; used only for sign-aware printing.
    pub fn is_negative_rational(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_negative()
    }

    fn lift(&self, to: u32) -> Vec<BigRational> {
        if to == self.order {
            return self.coeffs.clone();
        }
        debug_assert_eq!(to % self.order, 0);
        let step = (to / self.order) as usize;
        let mut poly = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            poly[j * step] = c.clone();
        }
        reduce(poly, to)
    }

    /// Lower the order to the smallest field containing the value.
    fn normalize(&mut self) {
        if self.order == 1 {
            return;
        }
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            self.coeffs.truncate(1);
            self.order = 1;
            return;
        }
        let m = self.order;
        let phi_m = euler_phi(m);
        for d in divisors(m) {
            if d == 1 || d == m {
                continue;
            }
            let phi_d = euler_phi(d);
            // columns: z_d^j written in the basis of Q(z_m)
            let cols: Vec<Vec<BigRational>> = (0..phi_d)
                .map(|j| Cyclotomic::root_power_raw(m, (j as u32 * (m / d)) as usize))
                .collect();
            let rows: Vec<Vec<BigRational>> = (0..phi_m)
                .map(|i| cols.iter().map(|col| col[i].clone()).collect())
                .collect();
            if let Some(sol) = solve(rows, self.coeffs.clone()) {
                self.order = d;
                self.coeffs = sol;
                return;
            }
        }
    }

    fn root_power_raw(m: u32, k: usize) -> Vec<BigRational> {
        let mut poly = vec![BigRational::zero(); k + 1];
        poly[k] = BigRational::one();
        reduce(poly, m)
    }

    fn common(&self, other: &Self) -> (u32, Vec<BigRational>, Vec<BigRational>) {
        let l = self.order.lcm(&other.order);
        (l, self.lift(l), other.lift(l))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.order == 1 && other.order == 1 {
            return Self::rational(&self.coeffs[0] + &other.coeffs[0]);
        }
        let (l, a, b) = self.common(other);
        let sum = a.into_iter().zip(b).map(|(x, y)| x + y).collect();
        let mut c = Cyclotomic {
            order: l,
            coeffs: sum,
        };
        c.normalize();
        c
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.order == 1 && other.order == 1 {
            return Self::rational(&self.coeffs[0] * &other.coeffs[0]);
        }
        if let Some(r) = self.as_rational() {
            return other.scale(r);
        }
        if let Some(r) = other.as_rational() {
            return self.scale(r);
        }
        let (l, a, b) = self.common(other);
        let mut prod = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Self::from_power_basis(l, prod)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::rational(r.recip()));
        }
        // solve (self * v) = 1 through the multiplication matrix
        let m = self.order;
        let phi = euler_phi(m);
        let columns: Vec<Vec<BigRational>> = (0..phi)
            .map(|j| {
                let mut shifted = vec![BigRational::zero(); j];
                shifted.extend(self.coeffs.iter().cloned());
                reduce(shifted, m)
            })
            .collect();
        let rows = (0..phi)
            .map(|i| columns.iter().map(|c| c[i].clone()).collect())
            .collect();
        let mut rhs = vec![BigRational::zero(); phi];
        rhs[0] = BigRational::one();
        let sol = solve(rows, rhs).ok_or(Error::DivisionByZero)?;
        Ok(Self::from_power_basis(m, sol))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Roots of unity of `Q(z_m)` are `+-z_m^j`, so it suffices to test the
    /// exponent `lcm(2, m)`.
    pub fn is_root_of_unity(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let n = 2u32.lcm(&self.order) as i64;
        self.pow(n).map(|p| p.is_one()).unwrap_or(false)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match j {
                0 => mag.to_string(),
                _ => {
                    let z = if j == 1 {
                        format!("z{}", self.order)
                    } else {
                        format!("z{}^{}", self.order, j)
                    };
                    if mag.is_one() {
                        z
                    } else {
                        format!("{mag}*{z}")
                    }
                }
            };
            parts.push((c.is_negative(), body));
        }
        f.write_str(&super::join_signed(&parts))
    }
}
