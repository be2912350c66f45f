//! Row Hermite normal form over the integers with the unimodular transform
//! recorded, and the lattice/monoid generation tests built on it.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `hnf = transform * input`, with `transform` unimodular and `hnf` in row
/// echelon form: positive pivots, entries above a pivot reduced into
/// `[0, pivot)`, zero rows last.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HnfCertificate {
    pub input: Vec<Vec<i64>>,
    pub hnf: Vec<Vec<i64>>,
    pub transform: Vec<Vec<i64>>,
    pub rank: usize,
}

fn overflow() -> Error {
    Error::LimitExceeded("integer overflow in Hermite normal form".into())
}

fn row_sub(a: &mut [i64], b: &[i64], k: i64) -> Result<()> {
    for (x, y) in a.iter_mut().zip(b) {
        *x = y
            .checked_mul(k)
            .and_then(|t| x.checked_sub(t))
            .ok_or_else(overflow)?;
    }
    Ok(())
}

/// Row HNF of the matrix whose rows are `rows`, each of length `n`.
pub fn hermite_normal_form(rows: &[Vec<i64>], n: usize) -> Result<HnfCertificate> {
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidData(format!("all vectors must have length {n}")));
    }
    let k = rows.len();
    let mut h: Vec<Vec<i64>> = rows.to_vec();
    let mut u: Vec<Vec<i64>> = (0..k)
        .map(|i| (0..k).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut r = 0;
    for c in 0..n {
        if r == k {
            break;
        }
        loop {
            // bring the smallest nonzero entry of column c to row r
            let Some(p) = (r..k)
                .filter(|&i| h[i][c] != 0)
                .min_by_key(|&i| h[i][c].unsigned_abs())
            else {
                break;
            };
            h.swap(r, p);
            u.swap(r, p);
            let mut done = true;
            for i in r + 1..k {
                if h[i][c] != 0 {
                    let q = h[i][c].div_euclid(h[r][c]);
                    let (hr, ur) = (h[r].clone(), u[r].clone());
                    row_sub(&mut h[i], &hr, q)?;
                    row_sub(&mut u[i], &ur, q)?;
                    done &= h[i][c] == 0;
                }
            }
            if done {
                break;
            }
        }
        if h[r][c] == 0 {
            continue;
        }
        if h[r][c] < 0 {
            for x in h[r].iter_mut().chain(u[r].iter_mut()) {
                *x = x.checked_neg().ok_or_else(overflow)?;
            }
        }
        for i in 0..r {
            let q = h[i][c].div_euclid(h[r][c]);
            if q != 0 {
                let (hr, ur) = (h[r].clone(), u[r].clone());
                row_sub(&mut h[i], &hr, q)?;
                row_sub(&mut u[i], &ur, q)?;
            }
        }
        r += 1;
    }
    Ok(HnfCertificate {
        input: rows.to_vec(),
        hnf: h,
        transform: u,
        rank: r,
    })
}

impl HnfCertificate {
    pub fn n(&self) -> usize {
        self.hnf.first().map_or(0, Vec::len)
    }

    /// Whether the nonzero rows are exactly the identity matrix.
    pub fn is_identity(&self, n: usize) -> bool {
        self.rank == n
            && (0..n).all(|i| (0..n).all(|j| self.hnf[i][j] == i64::from(i == j)))
    }

    /// Replay the certificate: `transform * input = hnf` and
    /// `det(transform) = +-1`.
    pub fn check(&self) -> bool {
        let k = self.input.len();
        let n = self.input.first().map_or(0, Vec::len);
        for i in 0..k {
            for j in 0..n {
                let s: i128 = (0..k)
                    .map(|l| i128::from(self.transform[i][l]) * i128::from(self.input[l][j]))
                    .sum();
                if s != i128::from(self.hnf[i][j]) {
                    return false;
                }
            }
        }
        let m: Vec<Vec<BigInt>> = self
            .transform
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        determinant(m).abs().is_one()
    }
}

/// Fraction-free (Bareiss) determinant.
pub fn determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Whether `vectors` span `Z^n` as a group; the certificate is their HNF.
pub fn generates_group(vectors: &[Vec<i64>], n: usize) -> Result<(bool, HnfCertificate)> {
    let cert = hermite_normal_form(vectors, n)?;
    Ok((cert.is_identity(n), cert))
}

/// Whether `vectors` generate `N^n` as a monoid. A basis vector is not a sum
/// of two nonzero vectors of `N^n`, so this holds iff every `e_i` is among
/// the vectors.
pub fn generates_monoid(vectors: &[Vec<i64>], n: usize) -> Result<bool> {
    if vectors.iter().any(|v| v.len() != n) {
        return Err(Error::InvalidData(format!("all vectors must have length {n}")));
    }
    if vectors.iter().flatten().any(|&e| e < 0) {
        return Err(Error::InvalidData("monoid vectors must be nonnegative".into()));
    }
    Ok((0..n).all(|i| {
        vectors
            .iter()
            .any(|v| v.iter().enumerate().all(|(j, &e)| e == i64::from(i == j)))
    }))
}
