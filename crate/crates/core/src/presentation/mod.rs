//! Linear word rewriting for finitely presented algebras, and closure of a
//! presentation with a declared finite basis into structure constants.
//!
//! Words are sequences of generator indices. A rule replaces a word by a
//! linear combination of words that are strictly smaller in the system's
//! [`WordOrder`]. Normal forms use leftmost-first rewriting: at the first
//! position where some rule matches, the first such rule in declared order
//! fires.

mod builders;
mod perm;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;

pub use builders::{
    build_double_cover, build_fk3, build_group_algebra_c2, build_group_algebra_s3, build_sweedler4, double_cover_dual,
    double_cover_system, fk3_dual, fk3_index, fk3_system, hopf_from_presentation, sweedler_system, Example, Fk3Lambdas,
    FK3_WORDS,
};
pub use perm::Perm3;

use crate::algebra::FinDimAlgebra;
use crate::coeff::{Coeff, Domain};
use crate::error::{Error, Result};
use crate::linalg::{SparseAccumulator, SparseVec, StructureTensor, Vector};

pub type Word = Vec<usize>;

/// A linear combination of words.
pub type Combination = Vec<(Word, Coeff)>;

/// Rewrite steps allowed while reducing one word.
pub const STEP_BUDGET: usize = 10_000;

/// Length first, then letter by letter using `ranks`, scanning from the
/// right end when `from_right` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordOrder {
    pub ranks: Vec<u32>,
    pub from_right: bool,
}

impl WordOrder {
    pub fn compare(&self, u: &[usize], v: &[usize]) -> Ordering {
        u.len().cmp(&v.len()).then_with(|| {
            let key = |w: &[usize], i: usize| self.ranks[w[i]];
            let n = u.len();
            (0..n)
                .map(|i| if self.from_right { n - 1 - i } else { i })
                .map(|i| key(u, i).cmp(&key(v, i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Combination,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    domain: Domain,
    generators: Vec<String>,
    order: WordOrder,
    rules: Vec<Rule>,
    /// Rule indices grouped by the first letter of their left side.
    by_first: Vec<Vec<usize>>,
    normal_basis: Vec<Word>,
    basis_labels: Vec<String>,
    unit: Combination,
}

impl RewriteSystem {
    pub fn new(domain: Domain, generators: Vec<String>, order: WordOrder) -> Result<Self> {
        if order.ranks.len() != generators.len() {
            return Err(Error::Input("word order needs one rank per generator".into()));
        }
        let by_first = vec![Vec::new(); generators.len()];
        Ok(RewriteSystem {
            domain,
            generators,
            order,
            rules: Vec::new(),
            by_first,
            normal_basis: Vec::new(),
            basis_labels: Vec::new(),
            unit: Vec::new(),
        })
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn order(&self) -> &WordOrder {
        &self.order
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn normal_basis(&self) -> &[Word] {
        &self.normal_basis
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn unit(&self) -> &Combination {
        &self.unit
    }

    fn check_word(&self, w: &[usize]) -> Result<()> {
        match w.iter().find(|&&g| g >= self.generators.len()) {
            Some(g) => Err(Error::Input(format!("generator index {g} out of range"))),
            None => Ok(()),
        }
    }

    fn check_combination(&self, c: &Combination) -> Result<()> {
        for (w, k) in c {
            self.check_word(w)?;
            if !self.domain.admits(k) {
                return Err(Error::Input(format!("coefficient {k} is not in the declared domain")));
            }
        }
        Ok(())
    }

    /// Appends a rule; its right side must be strictly below its left side.
    pub fn add_rule(&mut self, lhs: Word, rhs: Combination) -> Result<()> {
        let rule = self.validated_rule(lhs, rhs)?;
        self.by_first[rule.lhs[0]].push(self.rules.len());
        self.rules.push(rule);
        Ok(())
    }

    fn validated_rule(&self, lhs: Word, rhs: Combination) -> Result<Rule> {
        if lhs.is_empty() {
            return Err(Error::Input("rule with empty left side".into()));
        }
        self.check_word(&lhs)?;
        self.check_combination(&rhs)?;
        if let Some((w, _)) = rhs.iter().find(|(w, _)| self.order.compare(w, &lhs) != Ordering::Less) {
            return Err(Error::Input(format!(
                "rule {} → … has right-side word {} that is not smaller",
                self.format_word(&lhs),
                self.format_word(w)
            )));
        }
        let rhs = rhs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Rule { lhs, rhs })
    }

    /// A copy with rule `index` replaced.
    pub fn with_rule_replaced(&self, index: usize, lhs: Word, rhs: Combination) -> Result<Self> {
        if index >= self.rules.len() {
            return Err(Error::Input(format!("no rule {index}")));
        }
        let rule = self.validated_rule(lhs, rhs)?;
        let mut out = self.clone();
        out.rules[index] = rule;
        out.by_first = vec![Vec::new(); out.generators.len()];
        for (i, r) in out.rules.iter().enumerate() {
            out.by_first[r.lhs[0]].push(i);
        }
        Ok(out)
    }

    pub fn set_basis(&mut self, words: Vec<Word>, labels: Vec<String>) -> Result<()> {
        if words.len() != labels.len() {
            return Err(Error::DimensionMismatch { expected: words.len(), found: labels.len() });
        }
        for w in &words {
            self.check_word(w)?;
        }
        self.normal_basis = words;
        self.basis_labels = labels;
        Ok(())
    }

    pub fn set_unit(&mut self, unit: Combination) -> Result<()> {
        self.check_combination(&unit)?;
        self.unit = unit;
        Ok(())
    }

    /// Generator names joined directly when all are single characters,
    /// with `·` otherwise. The empty word prints as `1`.
    pub fn format_word(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let sep = if self.generators.iter().all(|g| g.chars().count() == 1) { "" } else { "·" };
        w.iter().map(|&g| self.generators[g].as_str()).collect::<Vec<_>>().join(sep)
    }

    /// Splits on `·` and whitespace, then matches generator names greedily
    /// (longest first) inside each piece. `"1"` and `""` are the empty word.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let mut out = Vec::new();
        for piece in s.split(|c: char| c == '·' || c.is_whitespace()).filter(|t| !t.is_empty() && *t != "1") {
            let mut rest = piece;
            while !rest.is_empty() {
                let (g, len) = self
                    .generators
                    .iter()
                    .enumerate()
                    .filter(|(_, g)| rest.starts_with(g.as_str()))
                    .map(|(i, g)| (i, g.len()))
                    .max_by_key(|&(_, l)| l)
                    .ok_or_else(|| Error::Parse(format!("cannot split {rest:?} into generators")))?;
                out.push(g);
                rest = &rest[len..];
            }
        }
        Ok(out)
    }

    /// First redex: `(position, rule index)`.
    fn redex(&self, w: &[usize]) -> Option<(usize, usize)> {
        (0..w.len()).find_map(|p| {
            self.by_first[w[p]].iter().copied().find(|&r| w[p..].starts_with(&self.rules[r].lhs)).map(|r| (p, r))
        })
    }

    /// One rewrite step applied to `w`, or `None` if `w` is irreducible.
    pub fn rewrite_once(&self, w: &[usize]) -> Option<Combination> {
        let (p, r) = self.redex(w)?;
        let rule = &self.rules[r];
        let (pre, post) = (&w[..p], &w[p + rule.lhs.len()..]);
        Some(
            rule.rhs
                .iter()
                .map(|(mid, c)| {
                    let mut u = Vec::with_capacity(pre.len() + mid.len() + post.len());
                    u.extend_from_slice(pre);
                    u.extend_from_slice(mid);
                    u.extend_from_slice(post);
                    (u, c.clone())
                })
                .collect(),
        )
    }

    pub fn is_irreducible(&self, w: &[usize]) -> bool {
        self.redex(w).is_none()
    }

    /// Normal form of a combination, with a fresh memo table.
    pub fn normal_form(&self, c: &[(Word, Coeff)]) -> Result<Combination> {
        Reducer::new(self).reduce(c)
    }
}

/// Memoized normal forms for one rewrite system.
pub struct Reducer<'a> {
    rs: &'a RewriteSystem,
    memo: HashMap<Word, Combination>,
}

impl<'a> Reducer<'a> {
    pub fn new(rs: &'a RewriteSystem) -> Self {
        Reducer { rs, memo: HashMap::new() }
    }

    pub fn reduce(&mut self, c: &[(Word, Coeff)]) -> Result<Combination> {
        let mut acc: BTreeMap<Word, Coeff> = BTreeMap::new();
        for (w, k) in c {
            if k.is_zero() {
                continue;
            }
            self.reduce_word(w)?;
            for (u, v) in &self.memo[w] {
                let e = acc.entry(u.clone()).or_insert_with(Coeff::zero);
                *e += &(k * v);
            }
        }
        Ok(acc.into_iter().filter(|(_, k)| !k.is_zero()).collect())
    }

    /// Fills the memo for `w` by an explicit depth-first traversal.
    fn reduce_word(&mut self, w: &Word) -> Result<()> {
        if self.memo.contains_key(w) {
            return Ok(());
        }
        let mut steps = 0usize;
        let mut stack: Vec<(Word, Option<Combination>)> = vec![(w.clone(), None)];
        let mut on_stack: HashSet<Word> = HashSet::from([w.clone()]);
        while let Some((top, expansion)) = stack.last_mut() {
            if self.memo.contains_key(top) {
                on_stack.remove(top);
                stack.pop();
                continue;
            }
            let terms = match expansion {
                Some(t) => t,
                None => match self.rs.rewrite_once(top) {
                    None => {
                        let top = top.clone();
                        on_stack.remove(&top);
                        self.memo.insert(top.clone(), vec![(top, Coeff::one())]);
                        stack.pop();
                        continue;
                    }
                    Some(t) => {
                        steps += 1;
                        if steps > STEP_BUDGET {
                            return Err(Error::Divergence { word: self.rs.format_word(w), steps });
                        }
                        expansion.insert(t)
                    }
                },
            };
            let missing: Vec<Word> =
                terms.iter().map(|(u, _)| u).filter(|u| !self.memo.contains_key(*u)).cloned().collect();
            if missing.is_empty() {
                let mut acc: BTreeMap<Word, Coeff> = BTreeMap::new();
                for (u, k) in terms.iter() {
                    for (v, c) in &self.memo[u] {
                        let e = acc.entry(v.clone()).or_insert_with(Coeff::zero);
                        *e += &(k * c);
                    }
                }
                let top = top.clone();
                on_stack.remove(&top);
                stack.pop();
                self.memo.insert(top, acc.into_iter().filter(|(_, k)| !k.is_zero()).collect());
                continue;
            }
            for u in missing {
                if !on_stack.insert(u.clone()) {
                    return Err(Error::Divergence { word: self.rs.format_word(w), steps });
                }
                stack.push((u, None));
            }
        }
        Ok(())
    }
}

/// A rewrite system closed into a finite-dimensional algebra on its
/// declared basis.
#[derive(Clone, Debug)]
pub struct PresentedAlgebra {
    rewrite: RewriteSystem,
    result: FinDimAlgebra,
    closure_certificate: bool,
    /// Irreducible words reached by the declared basis, as columns.
    columns: HashMap<Word, usize>,
    /// Echelon rows of `[NF(basis) | I]`; the part at `columns.len()..` is
    /// the change of basis.
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl PresentedAlgebra {
    pub fn rewrite(&self) -> &RewriteSystem {
        &self.rewrite
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.result
    }

    pub fn into_algebra(self) -> FinDimAlgebra {
        self.result
    }

    pub fn closure_certificate(&self) -> bool {
        self.closure_certificate
    }

    /// Declared-basis coordinates of an already reduced combination.
    fn coordinates_of_normal(&self, nf: &[(Word, Coeff)]) -> Result<Vector> {
        let m = self.columns.len();
        let n = self.rewrite.normal_basis.len();
        let mut entries = Vec::with_capacity(nf.len());
        for (w, c) in nf {
            let col = self.columns.get(w).ok_or_else(|| {
                Error::Closure(format!("normal word {} is outside the declared basis", self.rewrite.format_word(w)))
            })?;
            entries.push((*col, c.clone()));
        }
        let mut residual = SparseVec::from_entries(entries);
        let mut out = SparseAccumulator::default();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = residual.get(p).cloned() {
                residual = residual.add_scaled(&-&c, row);
                out.add_scaled(&c, row);
            }
        }
        if let Some((col, _)) = residual.iter().find(|&(i, _)| i < m) {
            let w = self.columns.iter().find(|(_, &c)| c == col).map(|(w, _)| w.clone()).unwrap_or_default();
            return Err(Error::Closure(format!(
                "normal form leaves the span of the declared basis (at {})",
                self.rewrite.format_word(&w)
            )));
        }
        let coords = out.finish();
        Ok(SparseVec::from_entries(coords.iter().filter(|&(i, _)| i >= m).map(|(i, c)| (i - m, c.clone()))).to_dense(n))
    }

    /// Coordinates of the normal form of `c`.
    pub fn coordinates(&self, c: &[(Word, Coeff)]) -> Result<Vector> {
        self.coordinates_of_normal(&self.rewrite.normal_form(c)?)
    }

    /// The algebra element of a combination: each word is multiplied by the
    /// declared unit before reduction.
    pub fn element(&self, c: &[(Word, Coeff)]) -> Result<Vector> {
        let mut full = Vec::new();
        for (w, k) in c {
            for (u, l) in &self.rewrite.unit {
                let mut wu = w.clone();
                wu.extend_from_slice(u);
                full.push((wu, k * l));
            }
        }
        self.coordinates(&full)
    }

    pub fn word_element(&self, w: &[usize]) -> Result<Vector> {
        self.element(&[(w.to_vec(), Coeff::one())])
    }

    /// Parses a word and returns its element.
    pub fn parse_element(&self, s: &str) -> Result<Vector> {
        self.word_element(&self.rewrite.parse_word(s)?)
    }
}

/// Structure constants `c_ij^k` = coordinates of `NF(wᵢwⱼ)`, then an
/// exhaustive associativity and unit check.
pub fn close_presentation(rs: RewriteSystem) -> Result<PresentedAlgebra> {
    let n = rs.normal_basis.len();
    if n == 0 {
        return Err(Error::Input("presentation declares no basis".into()));
    }
    let mut red = Reducer::new(&rs);
    let mut columns: HashMap<Word, usize> = HashMap::new();
    let mut nf_rows = Vec::with_capacity(n);
    for w in &rs.normal_basis {
        let nf = red.reduce(&[(w.clone(), Coeff::one())])?;
        for (u, _) in &nf {
            let next = columns.len();
            columns.entry(u.clone()).or_insert(next);
        }
        nf_rows.push(nf);
    }
    let m = columns.len();
    let rows: Vec<SparseVec> = nf_rows
        .iter()
        .enumerate()
        .map(|(i, nf)| {
            SparseVec::from_entries(nf.iter().map(|(u, c)| (columns[u], c.clone())).chain([(m + i, Coeff::one())]))
        })
        .collect();
    let (ech, leftover) = crate::linalg::echelonize(rows, m)?;
    if let Some(dep) = leftover.first() {
        let combo: Vec<String> = dep.iter().map(|(i, c)| format!("{c}*{}", rs.basis_labels[i - m])).collect();
        return Err(Error::Closure(format!("declared basis is linearly dependent: {} = 0", combo.join(" + "))));
    }
    drop(red);
    let mut pa = PresentedAlgebra {
        result: FinDimAlgebra::new(
            rs.domain.clone(),
            rs.basis_labels.clone(),
            StructureTensor::zero(n),
            Vector::zeros(n),
        )?,
        rewrite: rs,
        closure_certificate: false,
        columns,
        rows: ech.rows,
        pivots: ech.pivots,
    };

    let products: Vec<Vec<SparseVec>> = (0..n)
        .into_par_iter()
        .map_init(
            || Reducer::new(&pa.rewrite),
            |red, i| {
                (0..n)
                    .map(|j| {
                        let mut w = pa.rewrite.normal_basis[i].clone();
                        w.extend_from_slice(&pa.rewrite.normal_basis[j]);
                        let nf = red.reduce(&[(w, Coeff::one())])?;
                        Ok(pa.coordinates_of_normal(&nf)?.to_sparse())
                    })
                    .collect::<Result<Vec<_>>>()
            },
        )
        .collect::<Result<_>>()?;
    let mult = StructureTensor::from_fn(n, |i, j| products[i][j].clone());
    let unit = pa.coordinates(&pa.rewrite.unit)?;
    let algebra = FinDimAlgebra::new(pa.rewrite.domain.clone(), pa.rewrite.basis_labels.clone(), mult, unit)?;
    let assoc = algebra.check_associativity();
    if !assoc.passed {
        return Err(Error::Confluence(assoc.witness.unwrap_or_default()));
    }
    let unit_check = algebra.check_unit();
    if !unit_check.passed {
        return Err(Error::Closure(format!("declared unit fails: {}", unit_check.witness.unwrap_or_default())));
    }
    pa.result = algebra;
    pa.closure_certificate = true;
    Ok(pa)
}
