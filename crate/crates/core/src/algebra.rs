//! Finite-dimensional associative algebras given by structure constants.

use rayon::prelude::*;

use crate::check::CheckResult;
use crate::coeff::{Coeff, Domain, Rational};
use crate::error::{check_dim, Error, Result};
use crate::linalg::{
    kernel_of_rows, rank, tensor_contract, Matrix, SparseAccumulator, SparseVec, StructureTensor, Subspace, Vector,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimAlgebra {
    domain: Domain,
    labels: Vec<String>,
    mult: StructureTensor,
    unit: Vector,
}

/// Renders `Σ cᵢ bᵢ` using basis labels, e.g. `1/2*1 + 1/2*g`.
pub fn format_element(labels: &[String], v: &Vector) -> String {
    let mut out = String::new();
    for (c, label) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(rest) if matches!(c, Coeff::Rat(_)) => (true, rest.to_string()),
            _ => (false, text),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag == "1" {
            out.push_str(label);
        } else {
            out.push_str(&format!("{mag}*{label}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl FinDimAlgebra {
    pub fn new(domain: Domain, labels: Vec<String>, mult: StructureTensor, unit: Vector) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Input("algebra must have positive dimension".into()));
        }
        check_dim(n, mult.dim())?;
        check_dim(n, unit.len())?;
        let foreign = mult.coefficients().chain(unit.iter()).find(|c| !domain.admits(c));
        if let Some(c) = foreign {
            return Err(Error::Input(format!("coefficient {c} is outside the declared domain")));
        }
        Ok(FinDimAlgebra { domain, labels, mult, unit })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn mult(&self) -> &StructureTensor {
        &self.mult
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    /// The basis vector with the given label; panics if absent.
    pub fn basis_element(&self, label: &str) -> Vector {
        let i = self.index_of(label).unwrap_or_else(|| panic!("no basis element {label:?}"));
        Vector::basis(self.dim(), i)
    }

    pub fn format(&self, v: &Vector) -> String {
        format_element(&self.labels, v)
    }

    pub fn multiply(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        tensor_contract(&self.mult, u, v)
    }

    pub fn multiply_sparse(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        self.mult.contract_sparse(u, v)
    }

    /// `u^k` for `k ≥ 1`.
    pub fn power(&self, u: &Vector, k: u32) -> Result<Vector> {
        let mut acc = u.clone();
        for _ in 1..k {
            acc = self.multiply(&acc, u)?;
        }
        Ok(acc)
    }

    /// Matrix of `v ↦ u·v`.
    pub fn left_regular_matrix(&self, u: &Vector) -> Result<Matrix> {
        check_dim(self.dim(), u.len())?;
        let us = u.to_sparse();
        let cols: Vec<Vector> =
            (0..self.dim()).map(|j| self.multiply_sparse(&us, &SparseVec::unit(j)).to_dense(self.dim())).collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// Matrix of `v ↦ v·u`.
    pub fn right_regular_matrix(&self, u: &Vector) -> Result<Matrix> {
        check_dim(self.dim(), u.len())?;
        let us = u.to_sparse();
        let cols: Vec<Vector> =
            (0..self.dim()).map(|j| self.multiply_sparse(&SparseVec::unit(j), &us).to_dense(self.dim())).collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// `tr(L_{bᵢ}) = Σⱼ c_{ij}^j` for every basis element.
    pub fn regular_traces(&self) -> Vector {
        (0..self.dim())
            .map(|i| {
                let mut acc = Coeff::zero();
                for j in 0..self.dim() {
                    if let Some(c) = self.mult.entry(i, j).get(j) {
                        acc += c;
                    }
                }
                acc
            })
            .collect()
    }

    /// `T[i][j] = tr(L_{bᵢbⱼ})`.
    pub fn trace_form(&self) -> Matrix {
        let chi = self.regular_traces();
        let n = self.dim();
        Matrix::from_fn(n, n, |i, j| {
            let mut acc = Coeff::zero();
            for (k, c) in self.mult.entry(i, j).iter() {
                if !chi[k].is_zero() {
                    acc += &(c * &chi[k]);
                }
            }
            acc
        })
    }

    /// Exhaustive `(bᵢbⱼ)b_k = bᵢ(bⱼb_k)`, reporting the first failing triple.
    pub fn check_associativity(&self) -> CheckResult {
        let n = self.dim();
        let witness = (0..n).into_par_iter().find_map_first(|i| {
            let ei = SparseVec::unit(i);
            for j in 0..n {
                let ij = self.mult.entry(i, j);
                for k in 0..n {
                    let left = self.multiply_sparse(ij, &SparseVec::unit(k));
                    let right = self.multiply_sparse(&ei, self.mult.entry(j, k));
                    if left != right {
                        let diff = left.sub(&right).to_dense(n);
                        return Some(format!(
                            "({a}*{b})*{c} - {a}*({b}*{c}) = {d}",
                            a = self.labels[i],
                            b = self.labels[j],
                            c = self.labels[k],
                            d = self.format(&diff)
                        ));
                    }
                }
            }
            None
        });
        CheckResult::new("associativity", witness)
    }

    /// `1·b = b = b·1` on every basis element.
    pub fn check_unit(&self) -> CheckResult {
        let n = self.dim();
        let u = self.unit.to_sparse();
        let witness = (0..n).find_map(|i| {
            let e = SparseVec::unit(i);
            let l = self.multiply_sparse(&u, &e);
            let r = self.multiply_sparse(&e, &u);
            (l != e || r != e).then(|| {
                format!(
                    "1*{b} = {}, {b}*1 = {}",
                    self.format(&l.to_dense(n)),
                    self.format(&r.to_dense(n)),
                    b = self.labels[i]
                )
            })
        });
        CheckResult::new("unit", witness)
    }

    pub fn is_central(&self, v: &Vector) -> Result<bool> {
        check_dim(self.dim(), v.len())?;
        let vs = v.to_sparse();
        Ok((0..self.dim()).all(|i| {
            let e = SparseVec::unit(i);
            self.multiply_sparse(&vs, &e) == self.multiply_sparse(&e, &vs)
        }))
    }

    /// Specializes polynomial coefficients at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<FinDimAlgebra> {
        Ok(FinDimAlgebra {
            domain: Domain::Rational,
            labels: self.labels.clone(),
            mult: self.mult.eval(point)?,
            unit: self.unit.eval(point)?,
        })
    }

    /// Witness for the first basis product that leaves `s`, if any.
    fn ideal_witness(&self, s: &Subspace) -> Result<Option<String>> {
        let n = self.dim();
        for v in s.basis() {
            let vs = v.to_sparse();
            for i in 0..n {
                let e = SparseVec::unit(i);
                for (prod, side) in [(self.multiply_sparse(&e, &vs), "left"), (self.multiply_sparse(&vs, &e), "right")]
                {
                    if !s.contains(&prod.to_dense(n))? {
                        return Ok(Some(format!(
                            "{side} product of {} with {} leaves the subspace",
                            self.labels[i],
                            self.format(v)
                        )));
                    }
                }
            }
        }
        Ok(None)
    }
}

pub fn multiply(a: &FinDimAlgebra, u: &Vector, v: &Vector) -> Result<Vector> {
    a.multiply(u, v)
}

pub fn left_regular_matrix(a: &FinDimAlgebra, u: &Vector) -> Result<Matrix> {
    a.left_regular_matrix(u)
}

pub fn trace_form(a: &FinDimAlgebra) -> Matrix {
    a.trace_form()
}

/// The Jacobson radical as the radical of the trace form (characteristic
/// zero). The result is checked to be a two-sided nilpotent ideal.
pub fn jacobson_radical(a: &FinDimAlgebra) -> Result<Subspace> {
    let n = a.dim();
    let radical = kernel_of_rows(n, a.trace_form().sparse_rows())?;
    if let Some(w) = a.ideal_witness(&radical)? {
        return Err(Error::NotAnIdeal(format!("trace-form kernel: {w}")));
    }
    // Powers N, N², … must reach zero within dim steps.
    let mut power = radical.clone();
    let mut steps = 1;
    while !power.is_zero() {
        if steps > n {
            return Err(Error::Precondition(
                "trace-form kernel is not nilpotent; characteristic-zero hypothesis violated".into(),
            ));
        }
        let mut prods = Vec::new();
        for x in power.basis() {
            let xs = x.to_sparse();
            for y in radical.basis() {
                let p = a.multiply_sparse(&xs, &y.to_sparse());
                if !p.is_empty() {
                    prods.push(p);
                }
            }
        }
        let next = Subspace::span_sparse(n, prods)?;
        if next == power {
            return Err(Error::Precondition(
                "trace-form kernel is not nilpotent; characteristic-zero hypothesis violated".into(),
            ));
        }
        power = next;
        steps += 1;
    }
    Ok(radical)
}

/// `A/I` together with the projection and a linear section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraQuotient {
    pub ideal: Subspace,
    pub quotient: FinDimAlgebra,
    /// `π`, a `dim(A/I) × dim(A)` matrix.
    pub projection: Matrix,
    /// Linear splitting `A/I → A`; not an algebra map in general.
    pub section: Matrix,
    complement: Vec<usize>,
}

impl AlgebraQuotient {
    pub fn project(&self, v: &Vector) -> Result<Vector> {
        let r = self.ideal.reduce(v)?;
        Ok(self.complement.iter().map(|&c| r[c].clone()).collect())
    }

    /// Source indices whose classes form the quotient basis.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }
}

/// The quotient by a two-sided ideal. The quotient basis is the set of
/// non-pivot coordinates of the ideal's echelon basis, so `π` needs no
/// division.
pub fn quotient_algebra(a: &FinDimAlgebra, ideal: &Subspace) -> Result<AlgebraQuotient> {
    let n = a.dim();
    check_dim(n, ideal.ambient_dim())?;
    if let Some(w) = a.ideal_witness(ideal)? {
        return Err(Error::NotAnIdeal(w));
    }
    let complement = ideal.complement_indices();
    let q = complement.len();
    let mut pos = vec![None; n];
    for (slot, &c) in complement.iter().enumerate() {
        pos[c] = Some(slot);
    }
    let project_sparse = |v: &SparseVec| -> SparseVec {
        let r = ideal.reduce(&v.to_dense(n)).expect("dimension checked");
        SparseVec::from_entries(r.iter().enumerate().filter_map(|(i, c)| pos[i].map(|s| (s, c.clone()))))
    };
    let columns: Vec<Vector> = (0..n).map(|j| project_sparse(&SparseVec::unit(j)).to_dense(q)).collect();
    let projection = Matrix::from_columns(q, &columns)?;
    let section = Matrix::from_fn(n, q, |i, s| if complement[s] == i { Coeff::one() } else { Coeff::zero() });
    let mult = StructureTensor::from_fn(q, |x, y| project_sparse(a.mult().entry(complement[x], complement[y])));
    let unit = projection.mul_vec(a.unit())?;
    let labels = complement.iter().map(|&c| a.labels()[c].clone()).collect();
    let quotient = FinDimAlgebra::new(a.domain().clone(), labels, mult, unit)?;
    // π is multiplicative on basis pairs.
    for i in 0..n {
        for j in 0..n {
            let lhs = projection.mul_vec(&a.mult().entry(i, j).to_dense(n))?;
            let rhs = quotient.multiply(&columns[i], &columns[j])?;
            if lhs != rhs {
                return Err(Error::NotAnIdeal(format!(
                    "projection is not multiplicative on ({}, {})",
                    a.label(i),
                    a.label(j)
                )));
            }
        }
    }
    Ok(AlgebraQuotient { ideal: ideal.clone(), quotient, projection, section, complement })
}

/// `{z : zb = bz for all basis b}`.
pub fn center(a: &FinDimAlgebra) -> Result<Subspace> {
    let n = a.dim();
    // Row (i, k) of the stacked system: Σⱼ (c_{ji}^k − c_{ij}^k) zⱼ = 0.
    let mut rows: Vec<SparseAccumulator> = (0..n * n).map(|_| Default::default()).collect();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in a.mult().entry(j, i).iter() {
                rows[i * n + k].add(j, c);
            }
            for (k, c) in a.mult().entry(i, j).iter() {
                rows[i * n + k].add(j, &-c);
            }
        }
    }
    let z = kernel_of_rows(n, rows.into_iter().map(SparseAccumulator::finish).collect())?;
    debug_assert!(z.basis().iter().all(|v| a.is_central(v).unwrap_or(false)));
    Ok(z)
}

/// Nondegeneracy of the trace form (valid in characteristic zero).
pub fn is_semisimple(a: &FinDimAlgebra) -> Result<bool> {
    Ok(rank(&a.trace_form())? == a.dim())
}

/// `dim Z(A/J) = 1`. This detects a unique simple module whenever `A/J`
/// splits over the coefficient field; over a non-splitting field it is
/// only sufficient.
pub fn has_unique_simple(a: &FinDimAlgebra) -> Result<bool> {
    let j = jacobson_radical(a)?;
    let q = quotient_algebra(a, &j)?;
    Ok(center(&q.quotient)?.dim() == 1)
}

/// `A⊗A` with `(a⊗b)(c⊗d) = ac⊗bd`, materialized (dimension `dim²`).
pub fn tensor_square_algebra(a: &FinDimAlgebra) -> Result<FinDimAlgebra> {
    let n = a.dim();
    let m = a.mult();
    let mult = StructureTensor::from_fn(n * n, |x, y| {
        let (p, q) = (x / n, x % n);
        let (r, s) = (y / n, y % n);
        crate::linalg::outer(m.entry(p, r), m.entry(q, s), n)
    });
    let labels = (0..n * n).map(|x| format!("{}⊗{}", a.label(x / n), a.label(x % n))).collect();
    let unit = crate::linalg::outer(&a.unit().to_sparse(), &a.unit().to_sparse(), n).to_dense(n * n);
    FinDimAlgebra::new(a.domain().clone(), labels, mult, unit)
}
