//! Exact row reduction of sparse vectors over the coefficient field.

use std::collections::BTreeMap;

use crate::coeff::RatFunc;
use crate::error::Result;

pub type SparseVec<K> = BTreeMap<K, RatFunc>;

/// Reduced row echelon form. Columns are ordered by descending key; the
/// pivot of each column is the earliest remaining row with a nonzero entry
/// there. Zero rows are dropped, so the result is a basis of the row span.
pub fn rref<K: Ord + Clone>(rows: &[SparseVec<K>]) -> Result<Vec<SparseVec<K>>> {
    let mut pending: Vec<SparseVec<K>> = rows.iter().filter(|r| !r.is_empty()).cloned().collect();
    let mut basis: Vec<SparseVec<K>> = Vec::new();
    while !pending.is_empty() {
        let col = pending
            .iter()
            .filter_map(|r| r.keys().next_back())
            .max()
            .expect("rows are nonzero")
            .clone();
        let p = pending
            .iter()
            .position(|r| r.keys().next_back() == Some(&col))
            .expect("some row has the pivot");
        let row = pending.remove(p);
        let inv = row[&col].inv()?;
        let row: SparseVec<K> = row.into_iter().map(|(k, v)| (k, v.mul(&inv))).collect();
        for other in pending.iter_mut().chain(basis.iter_mut()) {
            if let Some(c) = other.get(&col).cloned() {
                axpy(other, &c.neg(), &row);
            }
        }
        pending.retain(|r| !r.is_empty());
        basis.push(row);
    }
    Ok(basis)
}

/// `y += a * x`.
pub fn axpy<K: Ord + Clone>(y: &mut SparseVec<K>, a: &RatFunc, x: &SparseVec<K>) {
    for (k, v) in x {
        let t = a.mul(v);
        match y.get_mut(k) {
            Some(old) => {
                *old = old.add(&t);
                if old.is_zero() {
                    y.remove(k);
                }
            }
            None => {
                if !t.is_zero() {
                    y.insert(k.clone(), t);
                }
            }
        }
    }
}

pub fn rank<K: Ord + Clone>(rows: &[SparseVec<K>]) -> Result<usize> {
    Ok(rref(rows)?.len())
}

/// Whether two families span the same space.
pub fn same_span<K: Ord + Clone>(a: &[SparseVec<K>], b: &[SparseVec<K>]) -> Result<bool> {
    Ok(rref(a)? == rref(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(u32, &str)]) -> SparseVec<u32> {
        entries
            .iter()
            .map(|&(k, s)| (k, RatFunc::parse(s).unwrap()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    #[test]
    fn reduces_to_canonical_form() {
        let rows = [v(&[(2, "1"), (1, "q")]), v(&[(2, "2"), (0, "1")]), v(&[(1, "2*q"), (0, "-1")])];
        let r = rref(&rows).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r[0], v(&[(2, "1"), (0, "1/2")]));
        assert_eq!(r[1], v(&[(1, "1"), (0, "-1/(2*q)")]));
    }

    #[test]
    fn spans() {
        let a = [v(&[(1, "1"), (0, "1")]), v(&[(1, "1"), (0, "-1")])];
        let b = [v(&[(1, "1")]), v(&[(0, "q")])];
        assert!(same_span(&a, &b).unwrap());
        assert!(!same_span(&a[..1], &b).unwrap());
        assert_eq!(rank::<u32>(&[SparseVec::new()]).unwrap(), 0);
    }
}
