//! Sparse multivariate polynomials over ℚ.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::rational::{format_rational, Rational};
use crate::error::{check_dim, Error, Result};

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Monomial, Rational>,
}

/// True iff every coefficient vanishes.
pub fn poly_is_zero(p: &MultiPoly) -> bool {
    p.is_zero()
}

impl MultiPoly {
    pub fn zero(vars: &Arc<Vec<String>>) -> Self {
        MultiPoly { vars: Arc::clone(vars), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Arc<Vec<String>>, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    /// The `idx`-th variable.
    pub fn var(vars: &Arc<Vec<String>>, idx: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(Monomial(e), Rational::one());
        p
    }

    /// Builds from (exponents, coefficient) pairs, summing repeats and
    /// dropping zeros.
    pub fn from_terms(vars: &Arc<Vec<String>>, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Result<Self> {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            check_dim(vars.len(), e.len())?;
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn same_ring(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomials over different variable lists"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly { vars: Arc::clone(&self.vars), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_ring(other);
        let mut out = Self::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly { vars: Arc::clone(&self.vars), terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect() }
    }

    /// Evaluates at a rational point (one value per variable).
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        check_dim(self.vars.len(), point.len())?;
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Parses the exponent-tuple key used in the JSON format, e.g. `"1,0,2"`.
    pub fn parse_exponents(&self, key: &str) -> Result<Vec<u32>> {
        let e: Vec<u32> = if key.trim().is_empty() {
            Vec::new()
        } else {
            key.split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse(format!("bad exponent tuple {key:?}")))?
        };
        check_dim(self.vars.len(), e.len())?;
        Ok(e)
    }
}

pub(crate) fn exponent_key(m: &Monomial) -> String {
    m.0.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = *c < Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> =
                m.0.iter()
                    .zip(self.vars.iter())
                    .filter(|(&e, _)| e > 0)
                    .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
                    .collect();
            if factors.is_empty() {
                write!(f, "{}", format_rational(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", format_rational(&mag))?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rational::{int, rat};

    fn ring() -> Arc<Vec<String>> {
        Arc::new(vec!["la".into(), "lb".into(), "lc".into()])
    }

    #[test]
    fn cancellation_is_exact() {
        let r = ring();
        let la = MultiPoly::var(&r, 0);
        assert!(poly_is_zero(&la.sub(&la)));
        let lb = MultiPoly::var(&r, 1);
        let d = la.sub(&lb);
        let expanded = la.mul(&la).sub(&la.mul(&lb).scale(&int(2))).add(&lb.mul(&lb));
        assert!(poly_is_zero(&d.mul(&d).sub(&expanded)));
    }

    #[test]
    fn graded_lex_order() {
        let a = Monomial(vec![2, 0, 0]);
        let b = Monomial(vec![0, 1, 1]);
        let c = Monomial(vec![0, 0, 3]);
        assert!(b < a);
        assert!(a < c);
        assert!(Monomial::one(3) < b);
    }

    #[test]
    fn display_and_constant() {
        let r = ring();
        let p = MultiPoly::var(&r, 0)
            .mul(&MultiPoly::var(&r, 0))
            .scale(&rat(-3, 2))
            .add(&MultiPoly::var(&r, 2))
            .add(&MultiPoly::constant(&r, int(1)));
        assert_eq!(p.to_string(), "-3/2*la^2 + lc + 1");
        assert_eq!(p.total_degree(), 2);
        assert_eq!(p.as_constant(), None);
        assert_eq!(MultiPoly::constant(&r, rat(1, 3)).as_constant(), Some(rat(1, 3)));
    }

    #[test]
    fn eval_and_keys() {
        let r = ring();
        let p = MultiPoly::from_terms(&r, [(vec![1, 1, 0], int(2)), (vec![0, 0, 0], int(-1))]).unwrap();
        assert_eq!(p.eval(&[int(3), int(5), int(7)]).unwrap(), int(29));
        assert_eq!(p.parse_exponents("1, 1,0").unwrap(), vec![1, 1, 0]);
        assert!(p.parse_exponents("1,1").is_err());
        assert_eq!(exponent_key(&Monomial(vec![1, 0, 2])), "1,0,2");
    }
}
