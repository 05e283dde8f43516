//! Sparse alternating tensors on ℝⁿ in the monomial basis `e_{i₁…i_k}`.
//!
//! Index tuples are 1-based and strictly increasing. Monomials form an
//! orthonormal basis of Λᵏ.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    dim: usize,
    grade: usize,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

/// Sign of the permutation that sorts `idx`, or `None` when an index repeats.
pub fn sort_sign(idx: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut v = idx.to_vec();
    let mut sign = 1;
    // insertion sort, counting transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, sign))
    }
}

impl Multivector {
    pub fn zero(dim: usize, grade: usize) -> Result<Self> {
        if dim == 0 || grade > dim {
            return Err(Error::InvalidMultivector(format!(
                "grade {grade} in dimension {dim}"
            )));
        }
        Ok(Multivector {
            dim,
            grade,
            terms: BTreeMap::new(),
        })
    }

    /// The monomial `e_{idx}` (indices in any order, sign applied).
    pub fn basis(dim: usize, idx: &[usize]) -> Result<Self> {
        let mut m = Self::zero(dim, idx.len())?;
        m.add_term(idx, Scalar::one())?;
        Ok(m)
    }

    /// Builds from `(indices, coefficient)` pairs; unsorted indices pick up permutation signs.
    pub fn from_terms<I>(dim: usize, grade: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Scalar)>,
    {
        let mut m = Self::zero(dim, grade)?;
        for (idx, c) in terms {
            m.add_term(&idx, c)?;
        }
        Ok(m)
    }

    /// Convenience constructor with small integer coefficients.
    pub fn from_int_terms(dim: usize, grade: usize, terms: &[(&[usize], i64)]) -> Result<Self> {
        Self::from_terms(
            dim,
            grade,
            terms.iter().map(|(i, c)| (i.to_vec(), scalar::int(*c))),
        )
    }

    pub fn add_term(&mut self, idx: &[usize], coeff: Scalar) -> Result<()> {
        if idx.len() != self.grade {
            return Err(Error::GradeMismatch {
                expected: self.grade,
                found: idx.len(),
            });
        }
        if let Some(&bad) = idx.iter().find(|&&i| i == 0 || i > self.dim) {
            return Err(Error::InvalidMultivector(format!(
                "index {bad} outside 1..={}",
                self.dim
            )));
        }
        let Some((sorted, sign)) = sort_sign(idx) else {
            return Ok(());
        };
        let c = if sign < 0 { -coeff } else { coeff };
        self.accumulate(sorted, c);
        Ok(())
    }

    fn accumulate(&mut self, sorted: Vec<usize>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(sorted) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, idx: &[usize]) -> Scalar {
        match sort_sign(idx) {
            Some((sorted, sign)) => {
                let c = self.terms.get(&sorted).cloned().unwrap_or_else(Scalar::zero);
                if sign < 0 {
                    -c
                } else {
                    c
                }
            }
            None => Scalar::zero(),
        }
    }

    fn check_same_shape(&self, other: &Multivector) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        if self.grade != other.grade {
            return Err(Error::GradeMismatch {
                expected: self.grade,
                found: other.grade,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Multivector) -> Result<Multivector> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.accumulate(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Multivector) -> Result<Multivector> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> Multivector {
        if s.is_zero() {
            return Multivector {
                dim: self.dim,
                grade: self.grade,
                terms: BTreeMap::new(),
            };
        }
        Multivector {
            dim: self.dim,
            grade: self.grade,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * s)).collect(),
        }
    }

    /// Inner product in which the sorted monomials are orthonormal.
    pub fn inner(&self, other: &Multivector) -> Result<Scalar> {
        self.check_same_shape(other)?;
        Ok(self
            .terms
            .iter()
            .filter_map(|(k, v)| other.terms.get(k).map(|w| v * w))
            .fold(Scalar::zero(), |a, b| a + b))
    }

    /// Coordinates in the lexicographically ordered monomial basis.
    pub fn to_coords(&self) -> Vec<Scalar> {
        monomials(self.dim, self.grade)
            .iter()
            .map(|m| self.terms.get(m).cloned().unwrap_or_else(Scalar::zero))
            .collect()
    }

    pub fn from_coords(dim: usize, grade: usize, coords: &[Scalar]) -> Result<Multivector> {
        let basis = monomials(dim, grade);
        if basis.len() != coords.len() {
            return Err(Error::DimensionMismatch(coords.len(), basis.len()));
        }
        Self::from_terms(dim, grade, basis.into_iter().zip(coords.iter().cloned()))
    }

    /// The fully antisymmetric coefficient `T_{i₁…i_k}` for arbitrary (possibly repeated) indices.
    pub fn component(&self, idx: &[usize]) -> Scalar {
        self.coeff(idx)
    }
}

/// Strictly increasing 1-based index tuples of length `k` in `1..=n`, lexicographic.
pub fn monomials(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            if n - i + 1 < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Exterior product.
pub fn wedge(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch(a.dim, b.dim));
    }
    let mut out = Multivector::zero(a.dim, a.grade + b.grade)?;
    for (ia, ca) in &a.terms {
        for (ib, cb) in &b.terms {
            let idx: Vec<usize> = ia.iter().chain(ib).copied().collect();
            if let Some((sorted, sign)) = sort_sign(&idx) {
                let c = ca * cb;
                out.accumulate(sorted, if sign < 0 { -c } else { c });
            }
        }
    }
    Ok(out)
}

/// Interior product of a 2-vector into a 3-form: `(e_i∧e_j) ⌟ T = T(e_i, e_j, ·)`,
/// so `(e_i∧e_j) ⌟ e_{ijk} = e_k`.
pub fn contract2(sigma: &Multivector, t: &Multivector) -> Result<Multivector> {
    if sigma.dim != t.dim {
        return Err(Error::DimensionMismatch(sigma.dim, t.dim));
    }
    if sigma.grade != 2 {
        return Err(Error::GradeMismatch {
            expected: 2,
            found: sigma.grade,
        });
    }
    if t.grade != 3 {
        return Err(Error::GradeMismatch {
            expected: 3,
            found: t.grade,
        });
    }
    let mut out = Multivector::zero(t.dim, 1)?;
    for (s, cs) in &sigma.terms {
        for (idx, ct) in &t.terms {
            // write idx as ±(s0, s1, k)
            if !(idx.contains(&s[0]) && idx.contains(&s[1])) {
                continue;
            }
            let k = *idx.iter().find(|&&x| x != s[0] && x != s[1]).expect("grade 3");
            let (_, sign) = sort_sign(&[s[0], s[1], k]).expect("distinct");
            let c = cs * ct;
            out.accumulate(vec![k], if sign < 0 { -c } else { c });
        }
    }
    Ok(out)
}

/// Interior product of a vector into a k-form: `(v ⌟ T)(…) = T(v, …)`.
pub fn interior(v: &Multivector, t: &Multivector) -> Result<Multivector> {
    if v.dim != t.dim {
        return Err(Error::DimensionMismatch(v.dim, t.dim));
    }
    if v.grade != 1 || t.grade == 0 {
        return Err(Error::GradeMismatch {
            expected: 1,
            found: v.grade,
        });
    }
    let mut out = Multivector::zero(t.dim, t.grade - 1)?;
    for (a, ca) in &v.terms {
        let a = a[0];
        for (idx, ct) in &t.terms {
            if let Some(pos) = idx.iter().position(|&x| x == a) {
                let rest: Vec<usize> = idx.iter().copied().filter(|&x| x != a).collect();
                let c = ca * ct;
                out.accumulate(rest, if pos % 2 == 1 { -c } else { c });
            }
        }
    }
    Ok(out)
}

impl fmt::Display for Multivector {
    /// Plain-text record: one `i j k p/q` line per term, sorted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, c) in &self.terms {
            for i in idx {
                write!(f, "{i} ")?;
            }
            writeln!(f, "{}", scalar::to_record(c))?;
        }
        Ok(())
    }
}

impl Multivector {
    /// Parses the plain-text record written by `Display`. Blank lines and `#` comments are skipped.
    pub fn parse_record(dim: usize, grade: usize, text: &str) -> Result<Multivector> {
        let mut m = Multivector::zero(dim, grade)?;
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != grade + 1 {
                return Err(Error::Parse {
                    line: n + 1,
                    msg: format!("expected {} fields, found {}", grade + 1, fields.len()),
                });
            }
            let idx = fields[..grade]
                .iter()
                .map(|s| {
                    s.parse::<usize>().map_err(|_| Error::Parse {
                        line: n + 1,
                        msg: format!("bad index '{s}'"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let c = scalar::parse_at(fields[grade], n + 1)?;
            m.add_term(&idx, c).map_err(|e| Error::Parse {
                line: n + 1,
                msg: e.to_string(),
            })?;
        }
        Ok(m)
    }
}
