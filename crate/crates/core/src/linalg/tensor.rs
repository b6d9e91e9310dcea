//! Sparse structure tensors for products `bᵢbⱼ = Σ c_{ij}^k b_k` and
//! coproducts `Δ(bᵢ) = Σ d_i^{jk} bⱼ⊗b_k`. Elements of `V⊗V` use the flat
//! index `j·dim + k`.

use super::vector::{SparseAccumulator, SparseVec, Vector};
use crate::coeff::{Coeff, Rational};
use crate::error::{check_dim, Error, Result};

/// Product table: entry `(i, j)` is the sparse vector `bᵢbⱼ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTensor {
    dim: usize,
    table: Vec<SparseVec>,
}

fn index_check(dim: usize, idx: &[usize]) -> Result<()> {
    match idx.iter().find(|&&i| i >= dim) {
        Some(&i) => Err(Error::Input(format!("index {i} out of range for dimension {dim}"))),
        None => Ok(()),
    }
}

impl StructureTensor {
    pub fn zero(dim: usize) -> Self {
        StructureTensor { dim, table: vec![SparseVec::new(); dim * dim] }
    }

    /// Builds from `(i, j, k, c)` entries; repeated entries are summed.
    pub fn from_quadruples(dim: usize, quads: impl IntoIterator<Item = (usize, usize, usize, Coeff)>) -> Result<Self> {
        let mut acc: Vec<SparseAccumulator> = (0..dim * dim).map(|_| Default::default()).collect();
        for (i, j, k, c) in quads {
            index_check(dim, &[i, j, k])?;
            acc[i * dim + j].add(k, &c);
        }
        Ok(StructureTensor { dim, table: acc.into_iter().map(SparseAccumulator::finish).collect() })
    }

    /// Builds from a function giving each product `bᵢbⱼ`.
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> SparseVec) -> Self {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                table.push(f(i, j));
            }
        }
        StructureTensor { dim, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim + j]
    }

    pub fn nnz(&self) -> usize {
        self.table.iter().map(SparseVec::nnz).sum()
    }

    pub fn quadruples(&self) -> Vec<(usize, usize, usize, Coeff)> {
        let mut out = Vec::with_capacity(self.nnz());
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.entry(i, j).iter() {
                    out.push((i, j, k, c.clone()));
                }
            }
        }
        out
    }

    /// `Σ uᵢ vⱼ bᵢbⱼ` as a sparse vector.
    pub fn contract_sparse(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut acc = SparseAccumulator::default();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                let e = self.entry(i, j);
                if !e.is_empty() {
                    acc.add_scaled(&(a * b), e);
                }
            }
        }
        acc.finish()
    }

    /// The dual coproduct: `d_k^{ij} = c_{ij}^k`.
    pub fn transpose_to_coproduct(&self) -> CoproductTensor {
        let n = self.dim;
        let mut acc: Vec<SparseAccumulator> = (0..n).map(|_| Default::default()).collect();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.entry(i, j).iter() {
                    acc[k].add(i * n + j, c);
                }
            }
        }
        CoproductTensor { dim: n, table: acc.into_iter().map(SparseAccumulator::finish).collect() }
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Self> {
        let table = self
            .table
            .iter()
            .map(|e| {
                let items = e.iter().map(|(k, c)| Ok((k, c.eval(point)?))).collect::<Result<Vec<_>>>()?;
                Ok(SparseVec::from_sorted(items))
            })
            .collect::<Result<_>>()?;
        Ok(StructureTensor { dim: self.dim, table })
    }

    pub(crate) fn coefficients(&self) -> impl Iterator<Item = &Coeff> {
        self.table.iter().flat_map(|e| e.iter().map(|(_, c)| c))
    }
}

/// `Σ uᵢ vⱼ c_{ij}^·`: bilinear product of coordinate vectors.
pub fn tensor_contract(t: &StructureTensor, u: &Vector, v: &Vector) -> Result<Vector> {
    check_dim(t.dim(), u.len())?;
    check_dim(t.dim(), v.len())?;
    Ok(t.contract_sparse(&u.to_sparse(), &v.to_sparse()).to_dense(t.dim()))
}

/// Coproduct table: entry `i` is `Δ(bᵢ)` over flat indices `j·dim + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoproductTensor {
    dim: usize,
    table: Vec<SparseVec>,
}

impl CoproductTensor {
    pub fn from_quadruples(dim: usize, quads: impl IntoIterator<Item = (usize, usize, usize, Coeff)>) -> Result<Self> {
        let mut acc: Vec<SparseAccumulator> = (0..dim).map(|_| Default::default()).collect();
        for (i, j, k, c) in quads {
            index_check(dim, &[i, j, k])?;
            acc[i].add(j * dim + k, &c);
        }
        Ok(CoproductTensor { dim, table: acc.into_iter().map(SparseAccumulator::finish).collect() })
    }

    /// Builds from the images `Δ(bᵢ)` directly.
    pub fn from_images(dim: usize, images: Vec<SparseVec>) -> Result<Self> {
        check_dim(dim, images.len())?;
        for im in &images {
            if let Some((k, _)) = im.iter().last() {
                index_check(dim * dim, &[k])?;
            }
        }
        Ok(CoproductTensor { dim, table: images })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn image(&self, i: usize) -> &SparseVec {
        &self.table[i]
    }

    pub fn nnz(&self) -> usize {
        self.table.iter().map(SparseVec::nnz).sum()
    }

    pub fn quadruples(&self) -> Vec<(usize, usize, usize, Coeff)> {
        let n = self.dim;
        let mut out = Vec::with_capacity(self.nnz());
        for (i, im) in self.table.iter().enumerate() {
            for (jk, c) in im.iter() {
                out.push((i, jk / n, jk % n, c.clone()));
            }
        }
        out
    }

    /// Linear extension to `V → V⊗V`.
    pub fn apply(&self, u: &SparseVec) -> SparseVec {
        let mut acc = SparseAccumulator::default();
        for (i, c) in u.iter() {
            acc.add_scaled(c, &self.table[i]);
        }
        acc.finish()
    }

    /// The dual product: `c_{jk}^i = d_i^{jk}`.
    pub fn transpose_to_product(&self) -> StructureTensor {
        let n = self.dim;
        let mut acc: Vec<SparseAccumulator> = (0..n * n).map(|_| Default::default()).collect();
        for (i, im) in self.table.iter().enumerate() {
            for (jk, c) in im.iter() {
                acc[jk].add(i, c);
            }
        }
        StructureTensor { dim: n, table: acc.into_iter().map(SparseAccumulator::finish).collect() }
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Self> {
        let table = self
            .table
            .iter()
            .map(|e| {
                let items = e.iter().map(|(k, c)| Ok((k, c.eval(point)?))).collect::<Result<Vec<_>>>()?;
                Ok(SparseVec::from_sorted(items))
            })
            .collect::<Result<_>>()?;
        Ok(CoproductTensor { dim: self.dim, table })
    }

    pub(crate) fn coefficients(&self) -> impl Iterator<Item = &Coeff> {
        self.table.iter().flat_map(|e| e.iter().map(|(_, c)| c))
    }
}

/// `u⊗v` in flat coordinates.
pub fn outer(u: &SparseVec, v: &SparseVec, dim: usize) -> SparseVec {
    let mut entries = Vec::with_capacity(u.nnz() * v.nnz());
    for (i, a) in u.iter() {
        for (j, b) in v.iter() {
            entries.push((i * dim + j, a * b));
        }
    }
    SparseVec::from_sorted(entries)
}

/// The flip `x⊗y ↦ y⊗x`.
pub fn flip(t: &SparseVec, dim: usize) -> SparseVec {
    t.map_indices(|jk| (jk % dim) * dim + jk / dim)
}

/// Product in `A⊗A`: `(a⊗b)(c⊗d) = ac⊗bd`, without materializing the
/// `dim²`-dimensional structure tensor.
pub fn tensor_multiply(mult: &StructureTensor, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let n = mult.dim();
    let gx = group_by_left(x, n);
    let gy = group_by_left(y, n);
    let mut acc = SparseAccumulator::default();
    for (a, ra) in &gx {
        for (c, rc) in &gy {
            let left = mult.entry(*a, *c);
            if left.is_empty() {
                continue;
            }
            let right = mult.contract_sparse(ra, rc);
            for (p, l) in left.iter() {
                for (q, r) in right.iter() {
                    acc.add(p * n + q, &(l * r));
                }
            }
        }
    }
    acc.finish()
}

/// Splits `Σ c_{jk} bⱼ⊗b_k` into `Σⱼ bⱼ⊗rⱼ`.
pub(crate) fn group_by_left(t: &SparseVec, dim: usize) -> Vec<(usize, SparseVec)> {
    let mut out: Vec<(usize, Vec<(usize, Coeff)>)> = Vec::new();
    for (jk, c) in t.iter() {
        let (j, k) = (jk / dim, jk % dim);
        match out.last_mut() {
            Some((last, items)) if *last == j => items.push((k, c.clone())),
            _ => out.push((j, vec![(k, c.clone())])),
        }
    }
    out.into_iter().map(|(j, items)| (j, SparseVec::from_sorted(items))).collect()
}

/// `(f⊗id)(t)` for a linear functional `f` given by its values on the basis.
pub fn contract_left(t: &SparseVec, f: &Vector) -> SparseVec {
    let n = f.len();
    let mut acc = SparseAccumulator::default();
    for (jk, c) in t.iter() {
        let fj = &f[jk / n];
        if !fj.is_zero() {
            acc.add(jk % n, &(fj * c));
        }
    }
    acc.finish()
}

/// `(id⊗f)(t)`.
pub fn contract_right(t: &SparseVec, f: &Vector) -> SparseVec {
    let n = f.len();
    let mut acc = SparseAccumulator::default();
    for (jk, c) in t.iter() {
        let fk = &f[jk % n];
        if !fk.is_zero() {
            acc.add(jk / n, &(fk * c));
        }
    }
    acc.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 𝕜C₂ in the basis {1, g}.
    fn c2() -> StructureTensor {
        let one = Coeff::one();
        StructureTensor::from_quadruples(
            2,
            [(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one.clone()), (1, 1, 0, one)],
        )
        .unwrap()
    }

    #[test]
    fn contraction_is_bilinear_product() {
        let t = c2();
        let u = Vector::from_i64s(&[1, 2]);
        let v = Vector::from_i64s(&[3, -1]);
        // (1 + 2g)(3 − g) = 3 − g + 6g − 2 = 1 + 5g
        assert_eq!(tensor_contract(&t, &u, &v).unwrap(), Vector::from_i64s(&[1, 5]));
        assert_eq!(tensor_contract(&t, &Vector::basis(2, 0), &v).unwrap(), v);
        assert!(tensor_contract(&t, &Vector::zeros(3), &v).is_err());
    }

    #[test]
    fn out_of_range_index_rejected() {
        assert!(StructureTensor::from_quadruples(2, [(0, 2, 0, Coeff::one())]).is_err());
        assert!(CoproductTensor::from_quadruples(2, [(0, 0, 5, Coeff::one())]).is_err());
    }

    #[test]
    fn transposes_are_inverse() {
        let t = c2();
        assert_eq!(t.transpose_to_coproduct().transpose_to_product(), t);
        assert_eq!(StructureTensor::from_quadruples(2, t.quadruples()).unwrap(), t);
    }

    #[test]
    fn tensor_square_product() {
        let t = c2();
        let g1 = outer(&SparseVec::unit(1), &SparseVec::unit(0), 2);
        let one_g = outer(&SparseVec::unit(0), &SparseVec::unit(1), 2);
        assert_eq!(tensor_multiply(&t, &g1, &one_g), SparseVec::unit(3));
        assert_eq!(flip(&g1, 2), one_g);
    }
}
