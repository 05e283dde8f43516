//! Dense exact linear maps and fraction-free elimination.
//!
//! Rank and kernel computations clear denominators row by row and run a
//! Bareiss-style forward elimination over the integers, so intermediate
//! entries stay minors of the input and every division is exact. Only the
//! final back substitution for kernel vectors works in rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Rank and kernel basis of a linear map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    pub rank: usize,
    /// One vector per free column; the free coordinate is 1, other free coordinates 0.
    pub basis: Vec<Vec<Scalar>>,
}

impl LinearMap {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(entries.len(), rows * cols));
        }
        Ok(LinearMap {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        LinearMap {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Builds a map from row vectors; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<Scalar>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(r.len(), cols));
            }
            entries.extend(r.iter().cloned());
        }
        Self::new(rows.len(), cols, entries)
    }

    /// Builds a map whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch(c.len(), rows));
            }
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> LinearMap {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn apply(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(x.len(), self.cols));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn compose(&self, rhs: &LinearMap) -> Result<LinearMap> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(self.cols, rhs.rows));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn rank(&self) -> usize {
        echelon(self).pivots.len()
    }

    pub fn kernel(&self) -> Kernel {
        exact_kernel(self)
    }

    /// One solution of `self · x = b`, or `None` when `b` is outside the image.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(b.len(), self.rows));
        }
        // Kernel of [A | b]: a vector with last coordinate -1 gives A x = b.
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let ech = echelon(&aug);
        if ech.pivots.contains(&self.cols) {
            return Ok(None);
        }
        // The augmented column is free: its kernel vector has last coordinate 1.
        let v = back_substitute(&ech, self.cols + 1, self.cols);
        Ok(Some(v[..self.cols].iter().map(|x| -x).collect()))
    }
}

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let l = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| x.numer() * (&l / x.denom()))
        .collect()
}

fn echelon(m: &LinearMap) -> Echelon {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows).map(|i| integer_row(m.row(i))).collect();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let prow = &head[r];
        let piv = prow[c].clone();
        for row in tail.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..m.cols {
                let num = &piv * &row[j] - &lead * &prow[j];
                if num.is_zero() {
                    row[j] = BigInt::zero();
                    continue;
                }
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
        }
        prev = piv.abs();
        if prev.is_zero() {
            prev = BigInt::one();
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots }
}

fn back_substitute(ech: &Echelon, cols: usize, free: usize) -> Vec<Scalar> {
    let mut x = vec![Scalar::zero(); cols];
    x[free] = Scalar::one();
    for (k, &p) in ech.pivots.iter().enumerate().rev() {
        let row = &ech.rows[k];
        let mut acc = Scalar::zero();
        for j in p + 1..cols {
            if !row[j].is_zero() && !x[j].is_zero() {
                acc += Scalar::from_integer(row[j].clone()) * &x[j];
            }
        }
        x[p] = -acc / Scalar::from_integer(row[p].clone());
    }
    x
}

/// Exact rank and kernel basis of `m`; `rank + basis.len() == m.cols()`.
pub fn exact_kernel(m: &LinearMap) -> Kernel {
    let ech = echelon(m);
    let basis = (0..m.cols)
        .filter(|c| !ech.pivots.contains(c))
        .map(|f| back_substitute(&ech, m.cols, f))
        .collect();
    Kernel {
        rank: ech.pivots.len(),
        basis,
    }
}

/// Basis of the span of `vectors` (a maximal independent subset, in order).
pub fn independent_subset(vectors: &[Vec<Scalar>]) -> Vec<usize> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let n = vectors[0].len();
    let m = LinearMap::from_columns(n, vectors).expect("equal lengths");
    echelon(&m).pivots
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn identity_has_full_rank() {
        let k = exact_kernel(&LinearMap::identity(5));
        assert_eq!(k.rank, 5);
        assert!(k.basis.is_empty());
    }

    #[test]
    fn zero_map_kernel_is_everything() {
        let k = exact_kernel(&LinearMap::zeros(3, 4));
        assert_eq!(k.rank, 0);
        assert_eq!(k.basis.len(), 4);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = LinearMap::from_rows(
            4,
            &[
                vec![int(1), int(2), int(3), int(4)],
                vec![int(2), int(4), int(6), int(8)],
                vec![frac(1, 3), int(0), int(-1), frac(5, 2)],
            ],
        )
        .unwrap();
        let k = exact_kernel(&m);
        assert_eq!(k.rank, 2);
        assert_eq!(k.basis.len(), 2);
        for v in &k.basis {
            assert!(m.apply(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = LinearMap::from_rows(2, &[vec![int(1), int(1)], vec![int(2), int(2)]]).unwrap();
        let x = m.solve(&[int(3), int(6)]).unwrap().unwrap();
        assert_eq!(m.apply(&x).unwrap(), vec![int(3), int(6)]);
        assert_eq!(m.solve(&[int(3), int(5)]).unwrap(), None);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(LinearMap::new(2, 2, vec![int(1)]).is_err());
        assert!(LinearMap::identity(2).apply(&[int(1)]).is_err());
    }
}
