//! Radical-based structure: the Chevalley property, the semisimple Hopf
//! quotient, integrals and the Hecke algebra of the trivial module.

use super::{dual, verify_axioms, HopfAlgebraData};
use crate::algebra::{jacobson_radical, quotient_algebra, AlgebraQuotient, FinDimAlgebra};
use crate::check::{all_passed, CheckResult};
use crate::coeff::Rational;
use crate::error::{check_dim, Error, Result};
use crate::linalg::{
    kernel_of_rows, outer, CoproductTensor, Matrix, SparseAccumulator, SparseVec, StructureTensor, Subspace, Vector,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The three Hopf-ideal conditions on the Jacobson radical `J`.
#[derive(Clone, Debug)]
pub struct ChevalleyVerdict {
    pub radical: Subspace,
    pub quotient: AlgebraQuotient,
    pub checks: Vec<CheckResult>,
}

impl ChevalleyVerdict {
    pub fn holds(&self) -> bool {
        all_passed(&self.checks)
    }
}

/// Tests `ε(J) = 0`, `S(J) ⊆ J` and `(π⊗π)Δ(J) = 0`, the last being
/// equivalent to `Δ(J) ⊆ J⊗H + H⊗J`.
pub fn chevalley_check(h: &HopfAlgebraData) -> Result<ChevalleyVerdict> {
    let n = h.dim();
    let radical = jacobson_radical(h.algebra())?;
    let quotient = quotient_algebra(h.algebra(), &radical)?;
    let q = quotient.quotient.dim();

    let eps_witness = radical.basis().iter().find_map(|j| {
        let e = h.apply_counit(j).expect("dimension checked");
        (!e.is_zero()).then(|| format!("ε({}) = {e}", h.format(j)))
    });
    let mut s_witness = None;
    for j in radical.basis() {
        let sj = h.apply_antipode(j)?;
        if !radical.contains(&sj)? {
            s_witness = Some(format!("S({}) = {} is not in J", h.format(j), h.format(&sj)));
            break;
        }
    }
    let pi_cols: Vec<SparseVec> = (0..n).map(|i| quotient.projection.column(i).to_sparse()).collect();
    let q_labels = quotient.quotient.labels().to_vec();
    let mut delta_witness = None;
    for j in radical.basis() {
        let image = project_tensor(&h.comultiply(j)?, &pi_cols, n, q);
        if !image.is_empty() {
            let labels: Vec<String> = (0..q * q).map(|x| format!("{}⊗{}", q_labels[x / q], q_labels[x % q])).collect();
            delta_witness = Some(format!(
                "(π⊗π)Δ({}) = {}",
                h.format(j),
                crate::algebra::format_element(&labels, &image.to_dense(q * q))
            ));
            break;
        }
    }
    Ok(ChevalleyVerdict {
        checks: vec![
            CheckResult::new("ε(J) = 0", eps_witness),
            CheckResult::new("S(J) ⊆ J", s_witness),
            CheckResult::new("Δ(J) ⊆ J⊗H + H⊗J", delta_witness),
        ],
        radical,
        quotient,
    })
}

/// `(π⊗π)(t)` for `t ∈ H⊗H`.
fn project_tensor(t: &SparseVec, pi_cols: &[SparseVec], n: usize, q: usize) -> SparseVec {
    let mut acc = SparseAccumulator::default();
    for (jk, c) in t.iter() {
        let (a, b) = (&pi_cols[jk / n], &pi_cols[jk % n]);
        if a.is_empty() || b.is_empty() {
            continue;
        }
        acc.add_scaled(c, &outer(a, b, q));
    }
    acc.finish()
}

/// `H/J` as a Hopf algebra together with `π`.
#[derive(Clone, Debug)]
pub struct HopfQuotient {
    pub hopf: HopfAlgebraData,
    pub projection: AlgebraQuotient,
}

impl HopfQuotient {
    pub fn project(&self, v: &Vector) -> Result<Vector> {
        self.projection.project(v)
    }

    /// Pulls a functional on `H` back to `H/J` along the section; valid
    /// for functionals vanishing on `J`.
    pub fn restrict_functional(&self, f: &Vector) -> Vector {
        self.projection.complement().iter().map(|&c| f[c].clone()).collect()
    }
}

/// The Hopf algebra `H/J`; requires the Chevalley property. The result is
/// checked against every axiom and `π` against every Hopf-map identity.
pub fn quotient_hopf(h: &HopfAlgebraData) -> Result<HopfQuotient> {
    let verdict = chevalley_check(h)?;
    if !verdict.holds() {
        let w = verdict.checks.iter().find_map(|c| c.witness.clone()).unwrap_or_default();
        return Err(Error::Precondition(format!("J is not a Hopf ideal: {w}")));
    }
    let n = h.dim();
    let pq = verdict.quotient;
    let q = pq.quotient.dim();
    let comp = pq.complement().to_vec();
    let pi_cols: Vec<SparseVec> = (0..n).map(|i| pq.projection.column(i).to_sparse()).collect();
    let images = comp.iter().map(|&c| project_tensor(h.comult().image(c), &pi_cols, n, q)).collect();
    let comult = CoproductTensor::from_images(q, images)?;
    let counit: Vector = comp.iter().map(|&c| h.counit()[c].clone()).collect();
    let s_cols: Vec<Vector> = comp.iter().map(|&c| pq.project(&h.antipode().column(c))).collect::<Result<_>>()?;
    let antipode = Matrix::from_columns(q, &s_cols)?;
    let hopf = HopfAlgebraData::new(pq.quotient.clone(), comult, counit, antipode)?;

    if let Some(c) = verify_axioms(&hopf).into_iter().find(|c| !c.passed) {
        return Err(Error::NotHopf(format!("H/J fails {}: {}", c.name, c.witness.unwrap_or_default())));
    }
    for i in 0..n {
        let e = Vector::basis(n, i);
        let lhs = project_tensor(h.comult().image(i), &pi_cols, n, q);
        let rhs = hopf.comultiply(&pq.projection.column(i))?;
        let eps_ok = hopf.apply_counit(&pq.projection.column(i))? == h.counit()[i];
        let s_ok = hopf.apply_antipode(&pq.projection.column(i))? == pq.project(&h.apply_antipode(&e)?)?;
        if lhs != rhs || !eps_ok || !s_ok {
            return Err(Error::NotHopf(format!("π is not a Hopf map at {}", h.labels()[i])));
        }
    }
    Ok(HopfQuotient { hopf, projection: pq })
}

/// `{ℓ : bℓ = ε(b)ℓ ∀b}` (left) or `{ℓ : ℓb = ε(b)ℓ ∀b}` (right).
pub fn integral_space(h: &HopfAlgebraData, side: Side) -> Result<Subspace> {
    let n = h.dim();
    let mult = h.algebra().mult();
    let mut rows: Vec<SparseAccumulator> = (0..n * n).map(|_| Default::default()).collect();
    for i in 0..n {
        for j in 0..n {
            let prod = match side {
                Side::Left => mult.entry(i, j),
                Side::Right => mult.entry(j, i),
            };
            for (k, c) in prod.iter() {
                rows[i * n + k].add(j, c);
            }
            rows[i * n + j].add(j, &-&h.counit()[i]);
        }
    }
    kernel_of_rows(n, rows.into_iter().map(SparseAccumulator::finish).collect())
}

/// The two-sided integral normalized by `ε(ℓ) = 1`; exists iff `H` is
/// semisimple.
pub fn haar_integral(h: &HopfAlgebraData) -> Result<Vector> {
    let left = integral_space(h, Side::Left)?;
    if left.dim() != 1 {
        return Err(Error::NotHopf(format!("left integral space has dimension {}", left.dim())));
    }
    let ell = &left.basis()[0];
    let e = h.apply_counit(ell)?;
    if e.is_zero() {
        return Err(Error::Precondition("H is not semisimple: ε vanishes on integrals".into()));
    }
    let ell = ell.scale(&e.inverse()?);
    if !integral_space(h, Side::Right)?.contains(&ell)? {
        return Err(Error::Precondition("left integral is not a right integral".into()));
    }
    Ok(ell)
}

/// The Haar integral `Λ₀` of `(H/J)*`, embedded in `H*` via `πᵀ`.
pub fn hecke_unit(h: &HopfAlgebraData) -> Result<Vector> {
    let hq = quotient_hopf(h)?;
    let ell = haar_integral(&dual(&hq.hopf))?;
    hq.projection.projection.transpose().mul_vec(&ell)
}

/// `Λ₀H*Λ₀` with unit `Λ₀`.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra {
    /// The carrier as a subspace of `H*`.
    pub carrier: Subspace,
    /// Structure constants in the carrier's echelon basis.
    pub algebra: FinDimAlgebra,
    pub lambda0: Vector,
}

/// Builds `span{Λ₀fΛ₀}` over basis `f` of `H*`, with coordinates read off
/// the echelon pivots.
pub fn hecke_algebra(hstar: &HopfAlgebraData, lambda0: &Vector) -> Result<HeckeAlgebra> {
    let n = hstar.dim();
    check_dim(n, lambda0.len())?;
    let a = hstar.algebra();
    let l = lambda0.to_sparse();
    if a.multiply_sparse(&l, &l) != l {
        return Err(Error::Precondition("Λ₀ is not idempotent".into()));
    }
    let sandwiches: Vec<SparseVec> =
        (0..n).map(|i| a.multiply_sparse(&a.multiply_sparse(&l, &SparseVec::unit(i)), &l)).collect();
    let carrier = Subspace::span_sparse(n, sandwiches)?;
    let r = carrier.dim();
    let coords = |v: &SparseVec| -> Result<SparseVec> {
        let c = carrier
            .coordinates(&v.to_dense(n))?
            .ok_or_else(|| Error::Precondition("Λ₀H*Λ₀ is not closed under multiplication".into()))?;
        Ok(SparseVec::from_entries(c.into_iter().enumerate()))
    };
    let basis: Vec<SparseVec> = carrier.basis().iter().map(Vector::to_sparse).collect();
    let mut table = Vec::with_capacity(r * r);
    for x in &basis {
        for y in &basis {
            table.push(coords(&a.multiply_sparse(x, y))?);
        }
    }
    let mult = StructureTensor::from_fn(r, |i, j| table[i * r + j].clone());
    let unit = coords(&l)?.to_dense(r);
    let labels = carrier.basis().iter().map(|v| hstar.format(v)).collect();
    let algebra = FinDimAlgebra::new(a.domain().clone(), labels, mult, unit)?;
    Ok(HeckeAlgebra { carrier, algebra, lambda0: lambda0.clone() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorCheck {
    pub holds: bool,
    pub factor: Rational,
    pub witness: Option<String>,
}

/// `χ_H = (dim H / dim H/J)·χ_{H/J}∘π` on every basis element.
pub fn regular_character_factor_check(h: &HopfAlgebraData) -> Result<FactorCheck> {
    let hq = quotient_hopf(h)?;
    let factor = Rational::new(h.dim().into(), hq.hopf.dim().into());
    let chi = h.algebra().regular_traces();
    let chi_q = hq.hopf.algebra().regular_traces();
    let mut witness = None;
    for i in 0..h.dim() {
        let rhs = chi_q.dot(&hq.projection.projection.column(i))?.scale_rational(&factor);
        if chi[i] != rhs {
            witness = Some(format!(
                "χ_H({}) = {} but {}·χ_(H/J)(π({})) = {rhs}",
                h.labels()[i],
                chi[i],
                factor,
                h.labels()[i]
            ));
            break;
        }
    }
    Ok(FactorCheck { holds: witness.is_none(), factor, witness })
}
