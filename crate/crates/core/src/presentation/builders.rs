//! Built-in Hopf algebras: Sweedler's H₄, its eight-dimensional double
//! cover H(μ), the 72-dimensional FK3 family (as `H*`), and the group
//! algebras 𝕜C₂ and 𝕜S₃.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use super::perm::Perm3;
use super::{close_presentation, Combination, PresentedAlgebra, RewriteSystem, Word, WordOrder};
use crate::algebra::FinDimAlgebra;
use crate::coeff::{Coeff, Domain, Rational};
use crate::error::{Error, Result};
use crate::hopf::{dual, Character, HopfAlgebraData};
use crate::linalg::{outer, tensor_multiply, CoproductTensor, Matrix, SparseVec, StructureTensor, Vector};

/// A Hopf algebra with the characters of its simple modules (possibly a
/// partial list when the field does not split it).
#[derive(Clone, Debug)]
pub struct Example {
    pub name: String,
    pub hopf: HopfAlgebraData,
    pub characters: Vec<Character>,
}

/// Extends generator coproducts multiplicatively to the declared basis,
/// solves `ε` from the counit axiom, and solves `S` on the span of the unit
/// and the generators before extending it anti-multiplicatively.
/// `generator_coproducts[g]` is `Δ(g·1)` in `H⊗H` coordinates.
pub fn hopf_from_presentation(pa: &PresentedAlgebra, generator_coproducts: &[SparseVec]) -> Result<HopfAlgebraData> {
    let rs = pa.rewrite();
    let algebra = pa.algebra();
    let n = algebra.dim();
    let mult = algebra.mult();
    if generator_coproducts.len() != rs.generators().len() {
        return Err(Error::DimensionMismatch { expected: rs.generators().len(), found: generator_coproducts.len() });
    }
    let unit = algebra.unit().to_sparse();
    let one = outer(&unit, &unit, n);

    let prefixes: BTreeSet<(usize, Word)> =
        rs.normal_basis().iter().flat_map(|w| (1..w.len()).map(move |l| (l, w[..l].to_vec()))).collect();
    let mut delta: HashMap<Word, SparseVec> = HashMap::from([(Vec::new(), one.clone())]);
    for (l, p) in prefixes {
        let d = tensor_multiply(mult, &delta[&p[..l - 1]], &generator_coproducts[p[l - 1]]);
        delta.insert(p, d);
    }
    let images: Vec<SparseVec> = rs
        .normal_basis()
        .par_iter()
        .map(|w| match w.split_last() {
            None => one.clone(),
            Some((&last, pre)) => tensor_multiply(mult, &delta[pre], &generator_coproducts[last]),
        })
        .collect();
    let comult = CoproductTensor::from_images(n, images)?;
    let counit = crate::hopf::solve_counit(&comult)?;

    let mut spanning = vec![algebra.unit().clone()];
    for g in 0..rs.generators().len() {
        spanning.push(pa.word_element(&[g])?);
    }
    let solved = crate::hopf::solve_antipode_on_coideal(algebra, &comult, &counit, &spanning)?;
    let s_unit = &solved[0];
    let s_gen = &solved[1..];
    let columns: Vec<Vector> = rs
        .normal_basis()
        .par_iter()
        .map(|w| {
            let mut acc = s_unit.clone();
            for &g in w {
                acc = algebra.multiply(&s_gen[g], &acc)?;
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    let antipode = Matrix::from_columns(n, &columns)?;
    HopfAlgebraData::new(algebra.clone(), comult, counit, antipode)
}

/// `Σ c·(u⊗v)` with `u`, `v` parsed as words of `pa`.
fn tensor(pa: &PresentedAlgebra, terms: &[(Coeff, &str, &str)]) -> Result<SparseVec> {
    let n = pa.algebra().dim();
    let mut acc = SparseVec::new();
    for (c, u, v) in terms {
        let t = outer(&pa.parse_element(u)?.to_sparse(), &pa.parse_element(v)?.to_sparse(), n);
        acc = acc.add_scaled(c, &t);
    }
    Ok(acc)
}

fn one() -> Coeff {
    Coeff::one()
}

fn names(ls: &[&str]) -> Vec<String> {
    ls.iter().map(|s| s.to_string()).collect()
}

fn w(ix: &[usize]) -> Word {
    ix.to_vec()
}

/// `g² = 1`, `x² = 0`, `xg = −gx` on basis `{1, g, x, gx}`.
pub fn sweedler_system() -> Result<RewriteSystem> {
    let mut rs =
        RewriteSystem::new(Domain::Rational, names(&["g", "x"]), WordOrder { ranks: vec![0, 1], from_right: false })?;
    rs.add_rule(w(&[0, 0]), vec![(w(&[]), one())])?;
    rs.add_rule(w(&[1, 1]), vec![])?;
    rs.add_rule(w(&[1, 0]), vec![(w(&[0, 1]), -one())])?;
    rs.set_basis(vec![w(&[]), w(&[0]), w(&[1]), w(&[0, 1])], names(&["1", "g", "x", "gx"]))?;
    rs.set_unit(vec![(w(&[]), one())])?;
    Ok(rs)
}

/// `Δ(g) = g⊗g`, `Δ(x) = x⊗1 + g⊗x`.
fn sweedler_type_coproducts(pa: &PresentedAlgebra) -> Result<Vec<SparseVec>> {
    Ok(vec![tensor(pa, &[(one(), "g", "g")])?, tensor(pa, &[(one(), "x", "1"), (one(), "g", "x")])?])
}

pub fn build_sweedler4() -> Result<Example> {
    let pa = close_presentation(sweedler_system()?)?;
    let hopf = hopf_from_presentation(&pa, &sweedler_type_coproducts(&pa)?)?;
    Ok(Example {
        name: "sweedler4".into(),
        hopf,
        characters: vec![
            Character::new("+", Vector::from_i64s(&[1, 1, 0, 0]), 1),
            Character::new("-", Vector::from_i64s(&[1, -1, 0, 0]), 1),
        ],
    })
}

/// `g⁴ = 1`, `xg = −gx`, `x² = (μ/2)(1 − g²)` on basis `{gᵏ, gᵏx}`.
pub fn double_cover_system(mu: &Coeff, domain: &Domain) -> Result<RewriteSystem> {
    let mut rs =
        RewriteSystem::new(domain.clone(), names(&["g", "x"]), WordOrder { ranks: vec![0, 1], from_right: false })?;
    rs.add_rule(w(&[0, 0, 0, 0]), vec![(w(&[]), one())])?;
    rs.add_rule(w(&[1, 0]), vec![(w(&[0, 1]), -one())])?;
    let half_mu = mu.scale_rational(&Rational::new(1.into(), 2.into()));
    rs.add_rule(w(&[1, 1]), vec![(w(&[]), half_mu.clone()), (w(&[0, 0]), -half_mu)])?;
    let words = vec![w(&[]), w(&[0]), w(&[0, 0]), w(&[0, 0, 0]), w(&[1]), w(&[0, 1]), w(&[0, 0, 1]), w(&[0, 0, 0, 1])];
    rs.set_basis(words, names(&["1", "g", "g^2", "g^3", "x", "gx", "g^2x", "g^3x"]))?;
    rs.set_unit(vec![(w(&[]), one())])?;
    Ok(rs)
}

/// H(μ). For `μ = 0` the four characters `g ↦ ±1, ±i` are attached when
/// the domain contains `i`; otherwise only the two rational ones. For
/// `μ ≠ 0` the characters are `g ↦ ±1` and the two-dimensional `χ_V`.
pub fn build_double_cover(mu: &Coeff, domain: &Domain) -> Result<Example> {
    if !domain.admits(mu) {
        return Err(Error::Input(format!("μ = {mu} is not in the declared domain")));
    }
    let pa = close_presentation(double_cover_system(mu, domain)?)?;
    let hopf = hopf_from_presentation(&pa, &sweedler_type_coproducts(&pa)?)?;
    let power_character = |name: &str, z: &Coeff| {
        let mut vals = vec![Coeff::one()];
        for k in 1..4 {
            vals.push(&vals[k - 1] * z);
        }
        vals.extend((0..4).map(|_| Coeff::zero()));
        Character::new(name, Vector::from_vec(vals), 1)
    };
    let mut characters = vec![power_character("k+_+", &one()), power_character("k+_-", &-one())];
    if mu.is_zero() {
        let i = domain.generator().filter(|t| (t * t) == -one());
        if let Some(i) = i {
            characters.push(power_character("k-_+", &-&i));
            characters.push(power_character("k-_-", &i));
        }
    } else {
        characters.push(Character::new("V", Vector::from_i64s(&[2, 0, -2, 0, 0, 0, 0, 0]), 2));
    }
    Ok(Example { name: "double-cover".into(), hopf, characters })
}

/// `H(μ)*` with the characters given by the group-likes `gᵏ` of `H(μ)`.
pub fn double_cover_dual(cover: &Example) -> Example {
    let hopf = dual(&cover.hopf);
    let n = hopf.dim();
    let characters = ["1", "g", "g^2", "g^3"]
        .iter()
        .enumerate()
        .map(|(k, name)| Character::new(*name, Vector::basis(n, k), 1))
        .collect();
    Example { name: "double-cover-dual".into(), hopf, characters }
}

/// The twelve words of the declared FK3 basis, each followed by `e_g`.
pub const FK3_WORDS: [&str; 12] = ["1", "a", "b", "c", "ab", "bc", "ac", "cb", "aba", "abc", "bac", "abac"];

const FK3_A: usize = 6;
const FK3_B: usize = 7;
const FK3_C: usize = 8;

/// Deformation parameters `(λa, λb, λc)`; `λxy = λx − λy`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fk3Lambdas {
    Numeric([Rational; 3]),
    /// Coefficients in `ℚ[la, lb, lc]`.
    Symbolic,
}

impl Fk3Lambdas {
    pub fn from_i64(a: i64, b: i64, c: i64) -> Self {
        Fk3Lambdas::Numeric([a, b, c].map(|x| Rational::from_integer(x.into())))
    }

    pub fn domain(&self) -> Domain {
        match self {
            Fk3Lambdas::Numeric(_) => Domain::Rational,
            Fk3Lambdas::Symbolic => Domain::poly_ring(&["la", "lb", "lc"]),
        }
    }

    /// `[λa, λb, λc]` as coefficients.
    pub fn values(&self) -> [Coeff; 3] {
        match self {
            Fk3Lambdas::Numeric(v) => v.clone().map(Coeff::Rat),
            Fk3Lambdas::Symbolic => {
                let d = self.domain();
                ["la", "lb", "lc"].map(|v| d.var(v).expect("declared variable"))
            }
        }
    }
}

fn fk3_e(p: Perm3) -> usize {
    p.index()
}

/// FK3 as a rewrite system. Generators `e1, e12, e23, e31, e123, e132,
/// a, b, c`. Words are ordered by length, then from the right end with
/// `e < b < c < a`; every `e` is pushed to the right.
pub fn fk3_system(lambdas: &Fk3Lambdas) -> Result<RewriteSystem> {
    let [la, lb, lc] = lambdas.values();
    let lam = |x: &Coeff, y: &Coeff| x - y;
    let gens: Vec<String> =
        Perm3::ALL.iter().map(|p| format!("e{}", p.name())).chain(["a", "b", "c"].map(String::from)).collect();
    let order = WordOrder { ranks: vec![0, 0, 0, 0, 0, 0, 3, 1, 2], from_right: true };
    let mut rs = RewriteSystem::new(lambdas.domain(), gens, order)?;

    for g in Perm3::ALL {
        for h in Perm3::ALL {
            let rhs = if g == h { vec![(w(&[fk3_e(g)]), one())] } else { vec![] };
            rs.add_rule(w(&[fk3_e(g), fk3_e(h)]), rhs)?;
        }
    }
    // e_h x = x e_{t∘h} for (x, t) = (a, (12)), (b, (23)), (c, (31)).
    for (x, t) in [(FK3_A, Perm3::T12), (FK3_B, Perm3::T23), (FK3_C, Perm3::T31)] {
        for h in Perm3::ALL {
            rs.add_rule(w(&[fk3_e(h), x]), vec![(w(&[x, fk3_e(t.compose(h))]), one())])?;
        }
    }
    let (a, b, c) = (FK3_A, FK3_B, FK3_C);
    rs.add_rule(w(&[c, a]), vec![(w(&[a, b]), -one()), (w(&[b, c]), -one())])?;
    rs.add_rule(w(&[b, a]), vec![(w(&[a, c]), -one()), (w(&[c, b]), -one())])?;
    let e = |p: Perm3| w(&[fk3_e(p)]);
    let square = |l1: Coeff, p1: Perm3, p2: Perm3, l2: Coeff, p3: Perm3, p4: Perm3| -> Combination {
        vec![(e(p1), l1.clone()), (e(p2), l1), (e(p3), l2.clone()), (e(p4), l2)]
    };
    use Perm3 as P;
    rs.add_rule(w(&[a, a]), square(lam(&la, &lb), P::T31, P::C132, lam(&la, &lc), P::T23, P::C123))?;
    rs.add_rule(w(&[b, b]), square(lam(&lb, &lc), P::T12, P::C132, lam(&lb, &la), P::T31, P::C123))?;
    rs.add_rule(w(&[c, c]), square(lam(&lc, &la), P::T23, P::C132, lam(&lc, &lb), P::T12, P::C123))?;
    // Consequence of the two linear relations and the squares.
    rs.add_rule(w(&[c, b, c]), vec![(w(&[b, c, b]), one()), (w(&[a]), lam(&lb, &lc))])?;

    let mut words = Vec::with_capacity(72);
    let mut labels = Vec::with_capacity(72);
    for word in FK3_WORDS {
        let letters: Word = if word == "1" {
            Vec::new()
        } else {
            word.chars().map(|ch| FK3_A + (ch as usize - 'a' as usize)).collect()
        };
        for g in Perm3::ALL {
            let mut full = letters.clone();
            full.push(fk3_e(g));
            words.push(full);
            labels.push(if word == "1" { format!("e{}", g.name()) } else { format!("{word}·e{}", g.name()) });
        }
    }
    rs.set_basis(words, labels)?;
    rs.set_unit(Perm3::ALL.iter().map(|&g| (e(g), one())).collect())?;
    Ok(rs)
}

/// Index of the basis element `word·e_g` of `H*`.
pub fn fk3_index(word: &str, g: Perm3) -> Option<usize> {
    FK3_WORDS.iter().position(|&x| x == word).map(|i| 6 * i + g.index())
}

/// Coproducts of the FK3 generators in `H*⊗H*`.
fn fk3_coproducts(pa: &PresentedAlgebra) -> Result<Vec<SparseVec>> {
    let mut out = Vec::with_capacity(9);
    for g in Perm3::ALL {
        let terms: Vec<(Coeff, String, String)> = Perm3::ALL
            .iter()
            .map(|&h| (one(), format!("e{}", g.compose(h.inverse()).name()), format!("e{}", h.name())))
            .collect();
        let refs: Vec<(Coeff, &str, &str)> =
            terms.iter().map(|(c, u, v)| (c.clone(), u.as_str(), v.as_str())).collect();
        out.push(tensor(pa, &refs)?);
    }
    let m = -one();
    out.push(tensor(
        pa,
        &[
            (one(), "a", "1"),
            (one(), "e1", "a"),
            (m.clone(), "e12", "a"),
            (one(), "e132", "b"),
            (m.clone(), "e31", "b"),
            (one(), "e123", "c"),
            (m.clone(), "e23", "c"),
        ],
    )?);
    out.push(tensor(
        pa,
        &[
            (one(), "b", "1"),
            (one(), "e1", "b"),
            (m.clone(), "e23", "b"),
            (one(), "e132", "c"),
            (m.clone(), "e12", "c"),
            (one(), "e123", "a"),
            (m.clone(), "e31", "a"),
        ],
    )?);
    out.push(tensor(
        pa,
        &[
            (one(), "c", "1"),
            (one(), "e1", "c"),
            (m.clone(), "e31", "c"),
            (one(), "e132", "a"),
            (m.clone(), "e23", "a"),
            (one(), "e123", "b"),
            (m, "e12", "b"),
        ],
    )?);
    Ok(out)
}

/// FK3 `H*` (dimension 72). Only the counit is attached as a character:
/// evaluation at `g ≠ 1` fails to be multiplicative once the squares of
/// `a`, `b`, `c` are deformed, so the list is partial.
pub fn build_fk3(lambdas: &Fk3Lambdas) -> Result<Example> {
    let pa = close_presentation(fk3_system(lambdas)?)?;
    let hopf = hopf_from_presentation(&pa, &fk3_coproducts(&pa)?)?;
    let characters = vec![Character::new("triv", hopf.counit().clone(), 1)];
    Ok(Example { name: "fk3-star".into(), hopf, characters })
}

/// `H = (H*)*` with the characters of the three simple modules
/// (trivial, sign, two-dimensional), read as elements of `H*`.
pub fn fk3_dual(star: &Example) -> Example {
    let hopf = dual(&star.hopf);
    let n = hopf.dim();
    let class_function = |vals: [i64; 6]| {
        let mut v = Vector::zeros(n);
        for g in Perm3::ALL {
            v[fk3_index("1", g).expect("word 1")] = Coeff::from_i64(vals[g.index()]);
        }
        v
    };
    let characters = vec![
        Character::new("triv", class_function([1; 6]), 1),
        Character::new("sgn", class_function(Perm3::ALL.map(|g| g.sign())), 1),
        Character::new("V", class_function([2, 0, 0, 0, -1, -1]), 2),
    ];
    Example { name: "fk3".into(), hopf, characters }
}

/// `𝕜G` with `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
fn group_algebra(
    labels: Vec<String>,
    mul: impl Fn(usize, usize) -> usize,
    inv: impl Fn(usize) -> usize,
) -> Result<HopfAlgebraData> {
    let n = labels.len();
    let mult = StructureTensor::from_fn(n, |i, j| SparseVec::unit(mul(i, j)));
    let identity =
        (0..n).find(|&i| (0..n).all(|j| mul(i, j) == j)).ok_or_else(|| Error::Input("no identity".into()))?;
    let algebra = FinDimAlgebra::new(Domain::Rational, labels, mult, Vector::basis(n, identity))?;
    let comult = CoproductTensor::from_images(n, (0..n).map(|i| SparseVec::unit(i * n + i)).collect())?;
    let counit = Vector::from_vec(vec![Coeff::one(); n]);
    let antipode = Matrix::from_columns(n, &(0..n).map(|i| Vector::basis(n, inv(i))).collect::<Vec<_>>())?;
    HopfAlgebraData::new(algebra, comult, counit, antipode)
}

pub fn build_group_algebra_c2() -> Result<Example> {
    let hopf = group_algebra(names(&["1", "g"]), |i, j| (i + j) % 2, |i| i)?;
    Ok(Example {
        name: "kc2".into(),
        hopf,
        characters: vec![
            Character::new("+", Vector::from_i64s(&[1, 1]), 1),
            Character::new("-", Vector::from_i64s(&[1, -1]), 1),
        ],
    })
}

pub fn build_group_algebra_s3() -> Result<Example> {
    let labels =
        Perm3::ALL.iter().map(|p| if p.index() == 0 { "1".into() } else { format!("({})", p.name()) }).collect();
    let hopf = group_algebra(
        labels,
        |i, j| Perm3::ALL[i].compose(Perm3::ALL[j]).index(),
        |i| Perm3::ALL[i].inverse().index(),
    )?;
    Ok(Example {
        name: "ks3".into(),
        hopf,
        characters: vec![
            Character::new("triv", Vector::from_i64s(&[1; 6]), 1),
            Character::new("sgn", Vector::from_vec(Perm3::ALL.map(|g| Coeff::from_i64(g.sign())).to_vec()), 1),
            Character::new("V", Vector::from_i64s(&[2, 0, 0, 0, -1, -1]), 2),
        ],
    })
}
