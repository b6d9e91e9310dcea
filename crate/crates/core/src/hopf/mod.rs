//! Hopf algebras given by structure tensors, and the character-projector
//! machinery built on them.

mod idempotent;
mod structure;

use rayon::prelude::*;

pub use idempotent::{
    certify_isotypic, character_projector, check_regular_idempotent, dual_regular_idempotent, hecke_theorem_check,
    quotient_central_idempotent, DecompositionReport, IdempotentEntry, TheoremCheck,
};
pub use structure::{
    chevalley_check, haar_integral, hecke_algebra, hecke_unit, integral_space, quotient_hopf,
    regular_character_factor_check, ChevalleyVerdict, FactorCheck, HeckeAlgebra, HopfQuotient, Side,
};

use crate::algebra::FinDimAlgebra;
use crate::check::CheckResult;
use crate::coeff::{Coeff, Rational};
use crate::error::{check_dim, Error, Result};
use crate::linalg::{
    contract_left, contract_right, outer, solve_rows, tensor_multiply, CoproductTensor, Matrix, SparseAccumulator,
    SparseVec, Subspace, Vector,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraData {
    algebra: FinDimAlgebra,
    comult: CoproductTensor,
    counit: Vector,
    antipode: Matrix,
}

/// A linear functional on a Hopf algebra tagged with the dimension of the
/// module it is the character of.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub name: String,
    pub values: Vector,
    pub module_dim: usize,
}

impl Character {
    pub fn new(name: impl Into<String>, values: Vector, module_dim: usize) -> Self {
        Character { name: name.into(), values, module_dim }
    }

    pub fn evaluate(&self, v: &Vector) -> Result<Coeff> {
        self.values.dot(v)
    }

    /// `χ(1) = dim`, and multiplicativity on basis pairs when `dim = 1`.
    pub fn validate(&self, h: &HopfAlgebraData) -> Result<Vec<CheckResult>> {
        let a = h.algebra();
        check_dim(a.dim(), self.values.len())?;
        let at_unit = self.evaluate(a.unit())?;
        let mut checks = vec![CheckResult::from_bool(
            format!("χ_{}(1) = {}", self.name, self.module_dim),
            at_unit == Coeff::from_i64(self.module_dim as i64),
            || format!("χ_{}(1) = {at_unit}", self.name),
        )];
        if self.module_dim == 1 {
            let n = a.dim();
            let mut witness = None;
            'outer: for i in 0..n {
                for j in 0..n {
                    let prod = a.mult().entry(i, j).to_dense(n);
                    let lhs = self.evaluate(&prod)?;
                    let rhs = &self.values[i] * &self.values[j];
                    if lhs != rhs {
                        witness = Some(format!(
                            "χ_{}({}*{}) = {lhs}, product of values = {rhs}",
                            self.name,
                            a.label(i),
                            a.label(j)
                        ));
                        break 'outer;
                    }
                }
            }
            checks.push(CheckResult::new(format!("χ_{} is multiplicative", self.name), witness));
        }
        Ok(checks)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Character> {
        Ok(Character { name: self.name.clone(), values: self.values.eval(point)?, module_dim: self.module_dim })
    }
}

/// Label of the dual basis vector; dualizing twice restores the label.
pub fn dual_label(label: &str) -> String {
    match label.strip_prefix("δ[").and_then(|s| s.strip_suffix(']')) {
        Some(inner) => inner.to_string(),
        None => format!("δ[{label}]"),
    }
}

impl HopfAlgebraData {
    pub fn new(algebra: FinDimAlgebra, comult: CoproductTensor, counit: Vector, antipode: Matrix) -> Result<Self> {
        let n = algebra.dim();
        check_dim(n, comult.dim())?;
        check_dim(n, counit.len())?;
        check_dim(n, antipode.rows())?;
        check_dim(n, antipode.cols())?;
        let d = algebra.domain();
        let foreign = comult
            .coefficients()
            .chain(counit.iter())
            .chain((0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| antipode.get(i, j)))
            .find(|c| !d.admits(c));
        if let Some(c) = foreign {
            return Err(Error::Input(format!("coefficient {c} is outside the declared domain")));
        }
        Ok(HopfAlgebraData { algebra, comult, counit, antipode })
    }

    /// Builds with the antipode obtained from [`solve_antipode`].
    pub fn with_solved_antipode(algebra: FinDimAlgebra, comult: CoproductTensor, counit: Vector) -> Result<Self> {
        let s = solve_antipode(&algebra, &comult, &counit)?;
        Self::new(algebra, comult, counit, s)
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.algebra
    }

    pub fn comult(&self) -> &CoproductTensor {
        &self.comult
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    pub fn format(&self, v: &Vector) -> String {
        self.algebra.format(v)
    }

    /// Renders an element of `H⊗H`.
    pub fn format_tensor(&self, t: &SparseVec) -> String {
        let n = self.dim();
        let labels: Vec<String> =
            (0..n * n).map(|x| format!("{}⊗{}", self.labels()[x / n], self.labels()[x % n])).collect();
        crate::algebra::format_element(&labels, &t.to_dense(n * n))
    }

    pub fn multiply(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        self.algebra.multiply(u, v)
    }

    pub fn comultiply(&self, u: &Vector) -> Result<SparseVec> {
        check_dim(self.dim(), u.len())?;
        Ok(self.comult.apply(&u.to_sparse()))
    }

    pub fn apply_counit(&self, u: &Vector) -> Result<Coeff> {
        self.counit.dot(u)
    }

    pub fn apply_antipode(&self, u: &Vector) -> Result<Vector> {
        self.antipode.mul_vec(u)
    }

    /// Specializes polynomial coefficients at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<HopfAlgebraData> {
        Ok(HopfAlgebraData {
            algebra: self.algebra.eval(point)?,
            comult: self.comult.eval(point)?,
            counit: self.counit.eval(point)?,
            antipode: self.antipode.eval(point)?,
        })
    }

    fn antipode_columns(&self) -> Vec<SparseVec> {
        (0..self.dim()).map(|j| self.antipode.column(j).to_sparse()).collect()
    }
}

/// `Δ(u)` in `dim²` coordinates.
pub fn comultiply(h: &HopfAlgebraData, u: &Vector) -> Result<SparseVec> {
    h.comultiply(u)
}

/// Exhaustive check of every Hopf algebra axiom on basis elements.
pub fn verify_axioms(h: &HopfAlgebraData) -> Vec<CheckResult> {
    let mut out = vec![h.algebra.check_associativity(), h.algebra.check_unit()];
    out.push(check_coassociativity(h));
    out.push(check_counit(h));
    out.push(check_comult_multiplicative(h));
    out.push(check_counit_multiplicative(h));
    out.push(check_antipode_convolution(h));
    out.push(check_antipode_antimultiplicative(h));
    out
}

fn check_coassociativity(h: &HopfAlgebraData) -> CheckResult {
    let n = h.dim();
    let witness = (0..n).into_par_iter().find_map_first(|i| {
        let mut left = SparseAccumulator::default();
        let mut right = SparseAccumulator::default();
        for (jk, c) in h.comult.image(i).iter() {
            let (j, k) = (jk / n, jk % n);
            for (pq, d) in h.comult.image(j).iter() {
                left.add(pq * n + k, &(c * d));
            }
            for (rs, d) in h.comult.image(k).iter() {
                right.add(j * n * n + rs, &(c * d));
            }
        }
        (left.finish() != right.finish()).then(|| format!("(Δ⊗id)Δ({0}) ≠ (id⊗Δ)Δ({0})", h.labels()[i]))
    });
    CheckResult::new("coassociativity", witness)
}

fn check_counit(h: &HopfAlgebraData) -> CheckResult {
    let n = h.dim();
    let witness = (0..n).find_map(|i| {
        let d = h.comult.image(i);
        let e = SparseVec::unit(i);
        let l = contract_left(d, &h.counit);
        let r = contract_right(d, &h.counit);
        let b = &h.labels()[i];
        if l != e {
            Some(format!("(ε⊗id)Δ({b}) = {} ≠ {b}", h.format(&l.to_dense(n))))
        } else if r != e {
            Some(format!("(id⊗ε)Δ({b}) = {} ≠ {b}", h.format(&r.to_dense(n))))
        } else {
            None
        }
    });
    CheckResult::new("counit", witness)
}

fn check_comult_multiplicative(h: &HopfAlgebraData) -> CheckResult {
    let n = h.dim();
    let mult = h.algebra.mult();
    let unit = h.algebra.unit().to_sparse();
    if h.comult.apply(&unit) != outer(&unit, &unit, n) {
        return CheckResult::fail("comultiplication is an algebra map", "Δ(1) ≠ 1⊗1");
    }
    let witness = (0..n).into_par_iter().find_map_first(|i| {
        for j in 0..n {
            let lhs = h.comult.apply(mult.entry(i, j));
            let rhs = tensor_multiply(mult, h.comult.image(i), h.comult.image(j));
            if lhs != rhs {
                return Some(format!(
                    "Δ({a}*{b}) − Δ({a})Δ({b}) = {}",
                    h.format_tensor(&lhs.sub(&rhs)),
                    a = h.labels()[i],
                    b = h.labels()[j]
                ));
            }
        }
        None
    });
    CheckResult::new("comultiplication is an algebra map", witness)
}

fn check_counit_multiplicative(h: &HopfAlgebraData) -> CheckResult {
    let n = h.dim();
    let eps = &h.counit;
    let at_unit = eps.dot(h.algebra.unit()).expect("dimension checked");
    if !at_unit.is_one() {
        return CheckResult::fail("counit is an algebra map", format!("ε(1) = {at_unit}"));
    }
    let mut witness = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let lhs = eps.dot(&h.algebra.mult().entry(i, j).to_dense(n)).expect("dimension checked");
            let rhs = &eps[i] * &eps[j];
            if lhs != rhs {
                witness =
                    Some(format!("ε({a}*{b}) = {lhs} but ε({a})ε({b}) = {rhs}", a = h.labels()[i], b = h.labels()[j]));
                break 'outer;
            }
        }
    }
    CheckResult::new("counit is an algebra map", witness)
}

fn check_antipode_convolution(h: &HopfAlgebraData) -> CheckResult {
    let n = h.dim();
    let s = h.antipode_columns();
    let unit = h.algebra.unit().to_sparse();
    let witness = (0..n).into_par_iter().find_map_first(|i| {
        let mut left = SparseAccumulator::default();
        let mut right = SparseAccumulator::default();
        for (jk, c) in h.comult.image(i).iter() {
            let (j, k) = (jk / n, jk % n);
            left.add_scaled(c, &h.algebra.multiply_sparse(&s[j], &SparseVec::unit(k)));
            right.add_scaled(c, &h.algebra.multiply_sparse(&SparseVec::unit(j), &s[k]));
        }
        let expected = unit.scale(&h.counit[i]);
        let b = &h.labels()[i];
        let left = left.finish();
        let right = right.finish();
        if left != expected {
            Some(format!("S({b}₁){b}₂ = {} ≠ ε({b})1", h.format(&left.to_dense(n))))
        } else if right != expected {
            Some(format!("{b}₁S({b}₂) = {} ≠ ε({b})1", h.format(&right.to_dense(n))))
        } else {
            None
        }
    });
    CheckResult::new("antipode convolution", witness)
}

fn check_antipode_antimultiplicative(h: &HopfAlgebraData) -> CheckResult {
    let n = h.dim();
    let s = h.antipode_columns();
    let unit = h.algebra.unit().to_sparse();
    let mut s_unit = SparseAccumulator::default();
    for (k, c) in unit.iter() {
        s_unit.add_scaled(c, &s[k]);
    }
    if s_unit.finish() != unit {
        return CheckResult::fail("antipode is anti-multiplicative", "S(1) ≠ 1");
    }
    let witness = (0..n).into_par_iter().find_map_first(|i| {
        for j in 0..n {
            let mut lhs = SparseAccumulator::default();
            for (k, c) in h.algebra.mult().entry(i, j).iter() {
                lhs.add_scaled(c, &s[k]);
            }
            let lhs = lhs.finish();
            let rhs = h.algebra.multiply_sparse(&s[j], &s[i]);
            if lhs != rhs {
                return Some(format!(
                    "S({a}*{b}) − S({b})S({a}) = {}",
                    h.format(&lhs.sub(&rhs).to_dense(n)),
                    a = h.labels()[i],
                    b = h.labels()[j]
                ));
            }
        }
        None
    });
    CheckResult::new("antipode is anti-multiplicative", witness)
}

/// `H*`: product from `Δᵀ`, coproduct from `mᵀ`, unit `ε`, counit `1`,
/// antipode `Sᵀ`. Basis labels `x` become `δ[x]` and back.
pub fn dual(h: &HopfAlgebraData) -> HopfAlgebraData {
    let labels = h.labels().iter().map(|l| dual_label(l)).collect();
    let algebra =
        FinDimAlgebra::new(h.algebra.domain().clone(), labels, h.comult.transpose_to_product(), h.counit.clone())
            .expect("dual of a well-formed Hopf algebra");
    HopfAlgebraData {
        algebra,
        comult: h.algebra.mult().transpose_to_coproduct(),
        counit: h.algebra.unit().clone(),
        antipode: h.antipode.transpose(),
    }
}

/// The counit forced by `(ε⊗id)Δ = id`; fails unless it is unique.
pub fn solve_counit(comult: &CoproductTensor) -> Result<Vector> {
    let n = comult.dim();
    let mut rows: Vec<SparseAccumulator> = (0..n * n).map(|_| Default::default()).collect();
    for i in 0..n {
        for (jk, c) in comult.image(i).iter() {
            rows[i * n + jk % n].add(jk / n, c);
        }
    }
    let system = rows
        .into_iter()
        .enumerate()
        .map(|(r, acc)| (acc.finish(), if r / n == r % n { Coeff::one() } else { Coeff::zero() }))
        .collect();
    let sol = solve_rows(n, system).map_err(|e| match e {
        Error::NoSolution => Error::NotHopf("no counit satisfies (ε⊗id)Δ = id".into()),
        e => e,
    })?;
    if sol.nullity != 0 {
        return Err(Error::NotHopf("counit is not determined by the coproduct".into()));
    }
    Ok(sol.x)
}

/// The antipode as the convolution inverse of the identity, solving
/// `Σ b₍₁₎S(b₍₂₎) = ε(b)1` over all basis `b` (`dim²` unknowns).
pub fn solve_antipode(algebra: &FinDimAlgebra, comult: &CoproductTensor, counit: &Vector) -> Result<Matrix> {
    let n = algebra.dim();
    let basis: Vec<Vector> = (0..n).map(|i| Vector::basis(n, i)).collect();
    let images = solve_antipode_on_coideal(algebra, comult, counit, &basis)?;
    Matrix::from_columns(n, &images)
}

/// Solves for `S` on a subspace `V` with `Δ(V) ⊆ H⊗V`, returning `S(v)`
/// for each spanning vector. The equations `v₍₁₎S(v₍₂₎) = ε(v)1` only
/// involve `S` on `V`, so the system has `dim V · dim H` unknowns.
pub fn solve_antipode_on_coideal(
    algebra: &FinDimAlgebra,
    comult: &CoproductTensor,
    counit: &Vector,
    spanning: &[Vector],
) -> Result<Vec<Vector>> {
    let n = algebra.dim();
    check_dim(n, comult.dim())?;
    check_dim(n, counit.len())?;
    let space = Subspace::span(n, spanning)?;
    let r = space.dim();
    // Unknown S(v_l)_m sits at column l·n + m.
    let mut rows: Vec<SparseAccumulator> = (0..r * n).map(|_| Default::default()).collect();
    for (k, v) in space.basis().iter().enumerate() {
        let d = comult.apply(&v.to_sparse());
        for (j, right) in crate::linalg::group_by_left(&d, n) {
            let right = right.to_dense(n);
            let coords = space.coordinates(&right)?.ok_or_else(|| {
                Error::NotHopf(format!(
                    "Δ({}) has right tensor factor {} outside the given subspace",
                    algebra.format(v),
                    algebra.format(&right)
                ))
            })?;
            for (l, alpha) in coords.iter().enumerate() {
                if alpha.is_zero() {
                    continue;
                }
                for m in 0..n {
                    for (p, c) in algebra.mult().entry(j, m).iter() {
                        rows[k * n + p].add(l * n + m, &(alpha * c));
                    }
                }
            }
        }
    }
    let unit = algebra.unit();
    let system = rows
        .into_iter()
        .enumerate()
        .map(|(idx, acc)| {
            let (k, p) = (idx / n, idx % n);
            let eps = counit.dot(&space.basis()[k]).expect("dimension checked");
            (acc.finish(), &eps * &unit[p])
        })
        .collect();
    let sol = solve_rows(r * n, system).map_err(|e| match e {
        Error::NoSolution => Error::NotHopf("identity has no convolution inverse".into()),
        e => e,
    })?;
    if sol.nullity != 0 {
        return Err(Error::NotHopf("antipode equations do not determine S".into()));
    }
    let on_basis: Vec<Vector> =
        (0..r).map(|l| Vector::from_vec(sol.x.entries()[l * n..(l + 1) * n].to_vec())).collect();
    spanning
        .iter()
        .map(|v| {
            let coords = space.coordinates(v)?.expect("spanning vector lies in its span");
            let mut out = Vector::zeros(n);
            for (c, s) in coords.iter().zip(&on_basis) {
                out.axpy(c, s);
            }
            Ok(out)
        })
        .collect()
}

/// The character `b ↦ tr(L_b)` of the left regular module.
pub fn regular_character(a: &FinDimAlgebra) -> Character {
    Character::new("regular", a.regular_traces(), a.dim())
}
