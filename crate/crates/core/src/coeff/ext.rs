//! Simple algebraic extensions ℚ[t]/(m(t)).

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::rational::{format_rational, int, Rational};
use crate::error::{Error, Result};

/// Monic polynomial `m(t)`, coefficients from the constant term upwards.
/// Irreducibility is the caller's responsibility.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Modulus {
    coeffs: Vec<Rational>,
}

impl Modulus {
    pub fn new(mut coeffs: Vec<Rational>) -> Result<Self> {
        trim(&mut coeffs);
        if coeffs.len() < 2 {
            return Err(Error::Input("modulus must have degree at least 1".into()));
        }
        if !coeffs.last().is_some_and(One::is_one) {
            return Err(Error::Input("modulus must be monic".into()));
        }
        Ok(Modulus { coeffs })
    }

    /// `t² + 1`, giving ℚ(i).
    pub fn gaussian() -> Self {
        Modulus { coeffs: vec![int(1), int(0), int(1)] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }
}

/// An element of ℚ[t]/(m), stored as the remainder of degree `< deg m`
/// (exactly `deg m` coefficients, high ones possibly zero).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtElement {
    coeffs: Vec<Rational>,
    modulus: Arc<Modulus>,
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by a nonzero trimmed `b`.
fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let factor = rem.last().unwrap() / &lead;
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] -= &factor * c;
        }
        quot[shift] = factor;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Reduces `raw` modulo `modulus`, returning the canonical representative.
pub fn ext_normalize(raw: &[Rational], modulus: &Arc<Modulus>) -> ExtElement {
    let (_, mut rem) = poly_divrem(raw, modulus.coeffs());
    rem.resize(modulus.degree(), Rational::zero());
    ExtElement { coeffs: rem, modulus: Arc::clone(modulus) }
}

/// Multiplicative inverse via the extended Euclidean algorithm.
pub fn ext_invert(x: &ExtElement) -> Result<ExtElement> {
    x.invert()
}

impl ExtElement {
    pub fn from_rational(r: Rational, modulus: &Arc<Modulus>) -> Self {
        ext_normalize(&[r], modulus)
    }

    /// The class of `t`.
    pub fn generator(modulus: &Arc<Modulus>) -> Self {
        ext_normalize(&[int(0), int(1)], modulus)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn modulus(&self) -> &Arc<Modulus> {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `Some(c)` when the element is the constant `c`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn same_field(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.modulus, &other.modulus) || self.modulus == other.modulus,
            "extension elements over different moduli"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_field(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        ExtElement { coeffs, modulus: Arc::clone(&self.modulus) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_field(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        ExtElement { coeffs, modulus: Arc::clone(&self.modulus) }
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|a| -a).collect();
        ExtElement { coeffs, modulus: Arc::clone(&self.modulus) }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_field(other);
        ext_normalize(&poly_mul(&self.coeffs, &other.coeffs), &self.modulus)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a * r).collect();
        ExtElement { coeffs, modulus: Arc::clone(&self.modulus) }
    }

    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut a = self.coeffs.clone();
        trim(&mut a);
        let (mut r0, mut r1) = (self.modulus.coeffs().to_vec(), a);
        let (mut s0, mut s1) = (Vec::<Rational>::new(), vec![int(1)]);
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r0.len() != 1 {
            return Err(Error::UnsupportedDomain(format!(
                "zero divisor found: modulus is reducible (common factor of degree {})",
                r0.len() - 1
            )));
        }
        let c = r0[0].recip();
        let s: Vec<Rational> = s0.iter().map(|x| x * &c).collect();
        Ok(ext_normalize(&s, &self.modulus))
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", format_rational(&mag))?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", format_rational(&mag))?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rational::rat;

    fn gauss() -> Arc<Modulus> {
        Arc::new(Modulus::gaussian())
    }

    fn el(c: &[Rational]) -> ExtElement {
        ext_normalize(c, &gauss())
    }

    #[test]
    fn normalize_examples() {
        // t² ≡ −1
        assert_eq!(el(&[int(0), int(0), int(1)]), el(&[int(-1)]));
        // (t+1)(t−1) = t² − 1 ≡ −2
        let p = poly_mul(&[int(1), int(1)], &[int(-1), int(1)]);
        assert_eq!(el(&p), el(&[int(-2)]));
        assert!(el(&[]).is_zero());
        assert_eq!(el(&[]).coeffs().len(), 2);
    }

    #[test]
    fn long_division_oracle() {
        // t³ + 2t + 5 = (t² + 1)·t + (t + 5)
        let (q, r) = poly_divrem(&[int(5), int(2), int(0), int(1)], &[int(1), int(0), int(1)]);
        assert_eq!(q, vec![int(0), int(1)]);
        assert_eq!(r, vec![int(5), int(1)]);
    }

    #[test]
    fn invert_examples() {
        let t = ExtElement::generator(&gauss());
        assert_eq!(t.invert().unwrap(), t.neg());
        let one_plus_t = el(&[int(1), int(1)]);
        assert_eq!(one_plus_t.invert().unwrap(), el(&[rat(1, 2), rat(-1, 2)]));
        assert_eq!(el(&[]).invert(), Err(Error::DivisionByZero));
    }

    #[test]
    fn reducible_modulus_is_diagnosed() {
        // t² − 1 = (t − 1)(t + 1)
        let m = Arc::new(Modulus::new(vec![int(-1), int(0), int(1)]).unwrap());
        let x = ext_normalize(&[int(1), int(1)], &m);
        assert!(matches!(x.invert(), Err(Error::UnsupportedDomain(_))));
    }

    #[test]
    fn modulus_validation() {
        assert!(Modulus::new(vec![int(1)]).is_err());
        assert!(Modulus::new(vec![int(1), int(2)]).is_err());
        assert_eq!(Modulus::new(vec![int(1), int(0), int(1), int(0)]).unwrap().degree(), 2);
    }

    #[test]
    fn display() {
        assert_eq!(el(&[rat(1, 4), int(-1)]).to_string(), "-t + 1/4");
        assert_eq!(el(&[int(0), rat(3, 2)]).to_string(), "3/2*t");
        assert_eq!(el(&[]).to_string(), "0");
    }
}
