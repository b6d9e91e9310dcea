//! Exact Gauss–Jordan elimination on sparse rows, and the subspace,
//! kernel and solver operations built on it.
//!
//! A pivot must be invertible in its domain. Over ℚ and ℚ[t]/(m) that is
//! any nonzero entry. In a polynomial ring only nonzero rational constants
//! qualify; if elimination gets stuck on a non-constant entry the
//! operation fails instead of dividing.

use super::matrix::Matrix;
use super::vector::{SparseVec, Vector};
use crate::coeff::Coeff;
use crate::error::{check_dim, Error, Result};

/// Reduced row echelon form: `rows[r]` has a 1 at `pivots[r]` and zeros at
/// every other pivot column.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    pub rows: Vec<SparseVec>,
    pub pivots: Vec<usize>,
}

/// Eliminates over columns `0..limit`. Columns at or beyond `limit` are
/// carried along (augmented part) but never pivoted on. Returns the echelon
/// rows and the leftover rows, which are zero on `0..limit`.
pub(crate) fn echelonize(rows: Vec<SparseVec>, limit: usize) -> Result<(Echelon, Vec<SparseVec>)> {
    let mut active: Vec<SparseVec> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut done: Vec<SparseVec> = Vec::new();
    let mut pivots = Vec::new();
    let mut stuck = None;
    let mut col = 0;
    while col < limit && !active.is_empty() {
        // Cheapest unit pivot in this column; fall back to skipping.
        let mut best: Option<usize> = None;
        let mut next_col = usize::MAX;
        for (r, row) in active.iter().enumerate() {
            if let Some(first) = row.first_index() {
                next_col = next_col.min(first);
            }
            if let Some(c) = row.get(col) {
                if c.is_unit() && best.is_none_or(|b| row.nnz() < active[b].nnz()) {
                    best = Some(r);
                } else if !c.is_unit() {
                    stuck.get_or_insert(col);
                }
            }
        }
        let Some(b) = best else {
            // Jump straight to the next column that has any entry.
            col = if next_col > col { next_col } else { col + 1 };
            continue;
        };
        let prow = active.swap_remove(b);
        let inv = prow.get(col).expect("pivot entry").inverse()?;
        let prow = prow.scale(&inv);
        for row in active.iter_mut().chain(done.iter_mut()) {
            if let Some(c) = row.get(col) {
                let c = -c;
                *row = row.add_scaled(&c, &prow);
            }
        }
        active.retain(|r| !r.is_empty());
        done.push(prow);
        pivots.push(col);
        col += 1;
    }
    if active.iter().any(|r| r.first_index().is_some_and(|i| i < limit)) {
        let col = stuck.unwrap_or(0);
        return Err(Error::UnsupportedDomain(format!(
            "elimination needs a non-constant polynomial pivot (column {col})"
        )));
    }
    Ok((Echelon { rows: done, pivots }, active))
}

/// A linear subspace of `ambient_dim`-space, stored by its reduced row
/// echelon basis. Two subspaces are equal iff these are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| Vector::basis(ambient_dim, i)).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// The span of `vectors`.
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Result<Self> {
        for v in vectors {
            check_dim(ambient_dim, v.len())?;
        }
        Self::span_sparse(ambient_dim, vectors.iter().map(Vector::to_sparse).collect())
    }

    pub(crate) fn span_sparse(ambient_dim: usize, rows: Vec<SparseVec>) -> Result<Self> {
        let (ech, _) = echelonize(rows, ambient_dim)?;
        Ok(Subspace {
            ambient_dim,
            basis: ech.rows.iter().map(|r| r.to_dense(ambient_dim)).collect(),
            pivots: ech.pivots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; their unit vectors span a
    /// complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim).filter(|&i| !is_pivot[i]).collect()
    }

    /// `v` minus its component along the basis, read off the pivot
    /// columns. Division-free, so valid in every domain.
    pub fn reduce(&self, v: &Vector) -> Result<Vector> {
        check_dim(self.ambient_dim, v.len())?;
        let mut r = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = -&r[p];
            r.axpy(&c, b);
        }
        Ok(r)
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &Vector) -> Result<Option<Vec<Coeff>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Whether `v` lies in `s`.
pub fn membership(s: &Subspace, v: &Vector) -> Result<bool> {
    s.contains(v)
}

/// Kernel of a linear map given by sparse rows over `ncols` columns.
pub(crate) fn kernel_of_rows(ncols: usize, rows: Vec<SparseVec>) -> Result<Subspace> {
    let (ech, _) = echelonize(rows, ncols)?;
    let mut is_pivot = vec![false; ncols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let mut gens = Vec::new();
    for f in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut entries = vec![(f, Coeff::one())];
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            if let Some(c) = row.get(f) {
                entries.push((p, -c));
            }
        }
        gens.push(SparseVec::from_entries(entries));
    }
    Subspace::span_sparse(ncols, gens)
}

/// `{v : m·v = 0}`.
pub fn kernel_basis(m: &Matrix) -> Result<Subspace> {
    kernel_of_rows(m.cols(), m.sparse_rows())
}

pub fn rank(m: &Matrix) -> Result<usize> {
    Ok(echelonize(m.sparse_rows(), m.cols())?.0.pivots.len())
}

/// A particular solution together with the dimension of the solution
/// space's direction (0 when the solution is unique).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub x: Vector,
    pub nullity: usize,
}

/// Solves the system whose rows are `(coefficients over 0..ncols, rhs)`.
pub(crate) fn solve_rows(ncols: usize, rows: Vec<(SparseVec, Coeff)>) -> Result<Solution> {
    let augmented = rows
        .into_iter()
        .map(|(r, b)| if b.is_zero() { r } else { r.add(&SparseVec::from_entries([(ncols, b)])) })
        .collect();
    let (ech, leftover) = echelonize(augmented, ncols)?;
    if !leftover.is_empty() {
        return Err(Error::NoSolution);
    }
    let mut x = Vector::zeros(ncols);
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        if let Some(b) = row.get(ncols) {
            x[p] = b.clone();
        }
    }
    Ok(Solution { x, nullity: ncols - ech.pivots.len() })
}

/// Some `x` with `m·x = b`, or [`Error::NoSolution`].
pub fn solve_linear(m: &Matrix, b: &Vector) -> Result<Vector> {
    check_dim(m.rows(), b.len())?;
    let rows = m.sparse_rows().into_iter().zip(b.iter().cloned()).collect();
    Ok(solve_rows(m.cols(), rows)?.x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Domain;

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::identity(3)).unwrap().is_zero());
        let k = kernel_basis(&Matrix::from_i64_rows(&[&[1, 1], &[1, 1]])).unwrap();
        assert_eq!(k, Subspace::span(2, &[Vector::from_i64s(&[1, -1])]).unwrap());
        assert_eq!(k.basis()[0], Vector::from_i64s(&[1, -1]));
    }

    #[test]
    fn solve_examples() {
        let b = Vector::from_i64s(&[3, -2, 7]);
        assert_eq!(solve_linear(&Matrix::identity(3), &b).unwrap(), b);
        let m = Matrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(solve_linear(&m, &Vector::from_i64s(&[1, 0])), Err(Error::NoSolution));
        assert!(solve_linear(&m, &Vector::from_i64s(&[1])).is_err());
    }

    #[test]
    fn membership_examples() {
        let s = Subspace::span(2, &[Vector::from_i64s(&[1, 0])]).unwrap();
        assert!(membership(&s, &Vector::zeros(2)).unwrap());
        assert!(!membership(&s, &Vector::from_i64s(&[0, 1])).unwrap());
        assert_eq!(s.coordinates(&Vector::from_i64s(&[5, 0])).unwrap(), Some(vec![Coeff::from_i64(5)]));
    }

    #[test]
    fn polynomial_pivots() {
        let d = Domain::poly_ring(&["la"]);
        let la = d.var("la").unwrap();
        // [[1, la], [2, 2la]] has a unit pivot and rank 1.
        let m = Matrix::from_fn(2, 2, |i, j| {
            let base = if j == 0 { Coeff::one() } else { la.clone() };
            base.scale_rational(&crate::coeff::int(i as i64 + 1))
        });
        let k = kernel_basis(&m).unwrap();
        assert_eq!(k.dim(), 1);
        assert!(m.mul_vec(&k.basis()[0]).unwrap().is_zero());
        // [[la]] would need to divide by la.
        let stuck = Matrix::from_fn(1, 1, |_, _| la.clone());
        assert!(matches!(kernel_basis(&stuck), Err(Error::UnsupportedDomain(_))));
    }
}
