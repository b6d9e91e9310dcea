use std::collections::HashMap;
use std::ops::{Index, IndexMut};

use crate::coeff::{Coeff, Rational};
use crate::error::{check_dim, Result};

/// Dense coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vector(Vec<Coeff>);

impl Vector {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![Coeff::zero(); n])
    }

    /// The `i`-th standard basis vector of length `n`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Coeff::one();
        v
    }

    pub fn from_vec(entries: Vec<Coeff>) -> Self {
        Vector(entries)
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        Vector(entries.iter().map(|&x| Coeff::from_i64(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Coeff] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Coeff> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Coeff> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Coeff::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Coeff) -> Vector {
        Vector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn scale_rational(&self, r: &Rational) -> Vector {
        Vector(self.0.iter().map(|a| a.scale_rational(r)).collect())
    }

    /// `self += a·x`.
    pub fn axpy(&mut self, a: &Coeff, x: &Vector) {
        assert_eq!(self.len(), x.len(), "vector length mismatch");
        if a.is_zero() {
            return;
        }
        for (s, xi) in self.0.iter_mut().zip(&x.0) {
            if !xi.is_zero() {
                *s += &(a * xi);
            }
        }
    }

    pub fn dot(&self, other: &Vector) -> Result<Coeff> {
        check_dim(self.len(), other.len())?;
        let mut acc = Coeff::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        Ok(acc)
    }

    pub fn to_sparse(&self) -> SparseVec {
        SparseVec {
            entries: self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect(),
        }
    }

    /// Entrywise specialization of polynomial coefficients.
    pub fn eval(&self, point: &[Rational]) -> Result<Vector> {
        self.0.iter().map(|c| c.eval(point)).collect::<Result<Vec<_>>>().map(Vector)
    }

    pub fn sum<'a>(n: usize, items: impl IntoIterator<Item = &'a Vector>) -> Vector {
        let mut acc = Vector::zeros(n);
        for v in items {
            acc = acc.add(v);
        }
        acc
    }
}

impl Index<usize> for Vector {
    type Output = Coeff;
    fn index(&self, i: usize) -> &Coeff {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Coeff {
        &mut self.0[i]
    }
}

impl FromIterator<Coeff> for Vector {
    fn from_iter<T: IntoIterator<Item = Coeff>>(iter: T) -> Self {
        Vector(iter.into_iter().collect())
    }
}

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Coeff)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, Coeff::one())] }
    }

    /// Sums repeated indices and drops zeros.
    pub fn from_entries(items: impl IntoIterator<Item = (usize, Coeff)>) -> Self {
        let mut acc = SparseAccumulator::default();
        for (i, c) in items {
            acc.add(i, &c);
        }
        acc.finish()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Coeff)> + '_ {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, idx: usize) -> Option<&Coeff> {
        self.entries.binary_search_by_key(&idx, |(i, _)| *i).ok().map(|p| &self.entries[p].1)
    }

    pub fn first_index(&self) -> Option<usize> {
        self.entries.first().map(|(i, _)| *i)
    }

    pub fn to_dense(&self, n: usize) -> Vector {
        let mut v = Vector::zeros(n);
        for (i, c) in &self.entries {
            v[*i] = c.clone();
        }
        v
    }

    pub fn scale(&self, a: &Coeff) -> SparseVec {
        if a.is_zero() {
            return SparseVec::new();
        }
        SparseVec::from_sorted(self.entries.iter().map(|(i, c)| (*i, c * a)))
    }

    /// `self + a·other`, merging sorted entries.
    pub fn add_scaled(&self, a: &Coeff, other: &SparseVec) -> SparseVec {
        if a.is_zero() || other.is_empty() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut p, mut q) = (0, 0);
        let (x, y) = (&self.entries, &other.entries);
        while p < x.len() || q < y.len() {
            if q == y.len() || (p < x.len() && x[p].0 < y[q].0) {
                out.push(x[p].clone());
                p += 1;
            } else if p == x.len() || y[q].0 < x[p].0 {
                out.push((y[q].0, a * &y[q].1));
                q += 1;
            } else {
                let c = &x[p].1 + &(a * &y[q].1);
                if !c.is_zero() {
                    out.push((x[p].0, c));
                }
                p += 1;
                q += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&Coeff::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&Coeff::from_i64(-1), other)
    }

    /// Entries from an iterator already sorted by index; zeros dropped.
    pub(crate) fn from_sorted(items: impl IntoIterator<Item = (usize, Coeff)>) -> Self {
        SparseVec { entries: items.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub(crate) fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_entries(self.entries.iter().map(|(i, c)| (f(*i), c.clone())))
    }
}

/// Hash-map accumulator for building sparse vectors term by term.
#[derive(Default)]
pub struct SparseAccumulator {
    map: HashMap<usize, Coeff>,
}

impl SparseAccumulator {
    pub fn add(&mut self, idx: usize, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&idx) {
            Some(e) => *e += c,
            None => {
                self.map.insert(idx, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, a: &Coeff, v: &SparseVec) {
        if a.is_zero() {
            return;
        }
        for (i, c) in v.iter() {
            self.add(i, &(a * c));
        }
    }

    pub fn finish(self) -> SparseVec {
        let mut entries: Vec<(usize, Coeff)> = self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        entries.sort_unstable_by_key(|(i, _)| *i);
        SparseVec { entries }
    }
}
