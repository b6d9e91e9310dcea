//! The idempotent `p = χ_{H*}/dim H`, the character projectors
//! `p̂ = dim(S)·χ(S(p₍₁₎))p₍₂₎`, and certification of the resulting
//! decomposition of the regular module.

use serde::Serialize;

use super::structure::{haar_integral, hecke_algebra, hecke_unit, HopfQuotient};
use super::{dual, Character, HopfAlgebraData};
use crate::algebra::has_unique_simple;
use crate::check::{all_passed, CheckResult};
use crate::coeff::{int, Coeff, Rational};
use crate::error::{check_dim, Result};
use crate::linalg::{flip, SparseAccumulator, Vector};

/// `p = χ_{H*}/dim H`, read directly off the coproduct:
/// `pᵢ = (1/n)·Σⱼ [bᵢ⊗bⱼ]Δ(bⱼ)`.
pub fn dual_regular_idempotent(h: &HopfAlgebraData) -> Vector {
    let n = h.dim();
    let mut acc = SparseAccumulator::default();
    for j in 0..n {
        for (ik, c) in h.comult().image(j).iter() {
            if ik % n == j {
                acc.add(ik / n, c);
            }
        }
    }
    let inv_n = Rational::new(1.into(), (n as i64).into());
    acc.finish().to_dense(n).scale_rational(&inv_n)
}

/// `p² = p`, `ε(p) = 1`, and `τΔ(p) = Δ(p)`.
pub fn check_regular_idempotent(h: &HopfAlgebraData, p: &Vector) -> Result<Vec<CheckResult>> {
    let sq = h.multiply(p, p)?;
    let eps = h.apply_counit(p)?;
    let d = h.comultiply(p)?;
    let flipped = flip(&d, h.dim());
    Ok(vec![
        CheckResult::from_bool("p² = p", sq == *p, || format!("p² − p = {}", h.format(&sq.sub(p)))),
        CheckResult::from_bool("ε(p) = 1", eps.is_one(), || format!("ε(p) = {eps}")),
        CheckResult::from_bool("Δ(p) is cocommutative", flipped == d, || {
            format!("Δ(p) − τΔ(p) = {}", h.format_tensor(&d.sub(&flipped)))
        }),
    ])
}

/// `dim(S)·(χ∘S ⊗ id)(Δ(p))`.
pub fn character_projector(h: &HopfAlgebraData, p: &Vector, chi: &Character) -> Result<Vector> {
    let n = h.dim();
    check_dim(n, chi.values.len())?;
    // ψⱼ = χ(S(bⱼ)).
    let s = h.antipode();
    let psi: Vec<Coeff> = (0..n).map(|j| chi.values.dot(&s.column(j))).collect::<Result<_>>()?;
    let mut acc = SparseAccumulator::default();
    for (jk, c) in h.comultiply(p)?.iter() {
        let w = &psi[jk / n];
        if !w.is_zero() {
            acc.add(jk % n, &(w * c));
        }
    }
    Ok(acc.finish().to_dense(n).scale_rational(&int(chi.module_dim as i64)))
}

/// The central primitive idempotent of `H/J` belonging to `χ`, from the
/// same projector formula applied to the Haar integral of `H/J`.
pub fn quotient_central_idempotent(hq: &HopfQuotient, chi: &Character) -> Result<Vector> {
    let ell = haar_integral(&hq.hopf)?;
    let restricted = Character::new(chi.name.clone(), hq.restrict_functional(&chi.values), chi.module_dim);
    character_projector(&hq.hopf, &ell, &restricted)
}

/// A candidate idempotent, with the character it should project onto.
#[derive(Clone, Debug)]
pub struct IdempotentEntry {
    pub name: String,
    pub idempotent: Vector,
    pub character: Option<Character>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub names: Vec<String>,
    #[serde(skip)]
    pub idempotents: Vec<Vector>,
    pub idempotence: Vec<bool>,
    /// `[i][j]`: whether `pᵢpⱼ = 0`; the diagonal is `true`.
    pub orthogonality: Vec<Vec<bool>>,
    pub sum_is_unit: bool,
    pub projections_match_quotient: bool,
    pub certified: bool,
    pub checks: Vec<CheckResult>,
}

/// Checks that the given elements are orthogonal idempotents summing to 1
/// whose images in `H/J` are the central primitive idempotents of the
/// attached characters. Negative verdicts are returned, not raised.
/// Without a Hopf quotient (no Chevalley property) the projection check
/// fails.
pub fn certify_isotypic(
    h: &HopfAlgebraData,
    entries: &[IdempotentEntry],
    quotient: Option<&HopfQuotient>,
) -> Result<DecompositionReport> {
    let k = entries.len();
    let mut checks = Vec::new();
    let mut idempotence = Vec::with_capacity(k);
    for e in entries {
        let sq = h.multiply(&e.idempotent, &e.idempotent)?;
        let ok = sq == e.idempotent;
        idempotence.push(ok);
        checks.push(CheckResult::from_bool(format!("p̂_{} is idempotent", e.name), ok, || {
            format!("p̂_{0}² − p̂_{0} = {1}", e.name, h.format(&sq.sub(&e.idempotent)))
        }));
    }
    let mut orthogonality = vec![vec![true; k]; k];
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let prod = h.multiply(&entries[i].idempotent, &entries[j].idempotent)?;
            let ok = prod.is_zero();
            orthogonality[i][j] = ok;
            checks.push(CheckResult::from_bool(
                format!("p̂_{}·p̂_{} = 0", entries[i].name, entries[j].name),
                ok,
                || format!("p̂_{}·p̂_{} = {}", entries[i].name, entries[j].name, h.format(&prod)),
            ));
        }
    }
    let total = Vector::sum(h.dim(), entries.iter().map(|e| &e.idempotent));
    let sum_is_unit = total == *h.algebra().unit();
    checks.push(CheckResult::from_bool("Σ p̂ᵢ = 1", sum_is_unit, || {
        format!("Σ p̂ᵢ − 1 = {}", h.format(&total.sub(h.algebra().unit())))
    }));

    let mut projections_match_quotient = true;
    match quotient {
        None => {
            projections_match_quotient = false;
            checks.push(CheckResult::fail(
                "π(p̂ᵢ) are the central idempotents of H/J",
                "H/J is not a Hopf quotient (J is not a Hopf ideal)",
            ));
        }
        Some(hq) => {
            for e in entries {
                let name = format!("π(p̂_{}) is central primitive in H/J", e.name);
                let Some(chi) = &e.character else {
                    projections_match_quotient = false;
                    checks.push(CheckResult::fail(name, "no character attached"));
                    continue;
                };
                let vanishes =
                    hq.projection.ideal.basis().iter().all(|j| chi.values.dot(j).map(|c| c.is_zero()).unwrap_or(false));
                if !vanishes {
                    projections_match_quotient = false;
                    checks.push(CheckResult::fail(name, format!("χ_{} does not vanish on J", chi.name)));
                    continue;
                }
                let image = hq.project(&e.idempotent)?;
                let target = quotient_central_idempotent(hq, chi)?;
                let ok = image == target;
                projections_match_quotient &= ok;
                checks.push(CheckResult::from_bool(name, ok, || {
                    format!("π(p̂_{}) − e_{} = {}", e.name, chi.name, hq.hopf.format(&image.sub(&target)))
                }));
            }
        }
    }
    Ok(DecompositionReport {
        names: entries.iter().map(|e| e.name.clone()).collect(),
        idempotents: entries.iter().map(|e| e.idempotent.clone()).collect(),
        idempotence,
        orthogonality,
        sum_is_unit,
        projections_match_quotient,
        certified: all_passed(&checks),
        checks,
    })
}

/// Both sides of the equivalence "projectors sum to 1" ⇔ "the Hecke
/// algebra of the trivial module has one simple module".
#[derive(Clone, Debug)]
pub struct TheoremCheck {
    pub lhs: bool,
    pub rhs: bool,
    pub hecke_dim: usize,
    /// `Σ p̂ᵢ − 1`.
    pub defect: Vector,
}

pub fn hecke_theorem_check(h: &HopfAlgebraData, characters: &[Character]) -> Result<TheoremCheck> {
    let p = dual_regular_idempotent(h);
    let mut total = Vector::zeros(h.dim());
    for chi in characters {
        total = total.add(&character_projector(h, &p, chi)?);
    }
    let defect = total.sub(h.algebra().unit());
    let lambda0 = hecke_unit(h)?;
    let hecke = hecke_algebra(&dual(h), &lambda0)?;
    Ok(TheoremCheck {
        lhs: defect.is_zero(),
        rhs: has_unique_simple(&hecke.algebra)?,
        hecke_dim: hecke.algebra.dim(),
        defect,
    })
}
