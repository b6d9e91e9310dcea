//! Exact scalars: ℚ, ℚ[t]/(m), and ℚ[λ₁,…,λₙ].

mod ext;
mod poly;
mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub use ext::{ext_invert, ext_normalize, ExtElement, Modulus};
pub use poly::{poly_is_zero, Monomial, MultiPoly};
pub use rational::{format_rational, int, parse_rational, rat, Rational};

use crate::error::{Error, Result};

/// A scalar. Values that happen to be rational are always stored as
/// `Rat`, so structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rat(Rational),
    Ext(ExtElement),
    Poly(MultiPoly),
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Coeff::Rat(Rational::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Coeff::Rat(int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Coeff::Rat(rat(n, d))
    }

    pub fn from_ext(e: ExtElement) -> Self {
        match e.as_rational() {
            Some(r) => Coeff::Rat(r),
            None => Coeff::Ext(e),
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        match p.as_constant() {
            Some(r) => Coeff::Rat(r),
            None => Coeff::Poly(p),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coeff::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Coeff::Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Coeff::Rat(r) => Some(r),
            _ => None,
        }
    }

    /// Whether this scalar has a multiplicative inverse in its domain.
    /// Non-constant polynomials never do.
    pub fn is_unit(&self) -> bool {
        match self {
            Coeff::Rat(r) => !r.is_zero(),
            Coeff::Ext(_) => true,
            Coeff::Poly(_) => false,
        }
    }

    pub fn inverse(&self) -> Result<Coeff> {
        match self {
            Coeff::Rat(r) if r.is_zero() => Err(Error::DivisionByZero),
            Coeff::Rat(r) => Ok(Coeff::Rat(r.recip())),
            Coeff::Ext(e) => Ok(Coeff::from_ext(e.invert()?)),
            Coeff::Poly(p) => Err(Error::UnsupportedDomain(format!("cannot invert the polynomial {p}"))),
        }
    }

    pub fn try_div(&self, other: &Coeff) -> Result<Coeff> {
        Ok(self * &other.inverse()?)
    }

    /// Substitutes a rational point for the polynomial variables.
    pub fn eval(&self, point: &[Rational]) -> Result<Coeff> {
        match self {
            Coeff::Poly(p) => Ok(Coeff::Rat(p.eval(point)?)),
            other => Ok(other.clone()),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Coeff {
        match self {
            Coeff::Rat(a) => Coeff::Rat(a * r),
            Coeff::Ext(e) => Coeff::from_ext(e.scale(r)),
            Coeff::Poly(p) => Coeff::from_poly(p.scale(r)),
        }
    }

    fn add_ref(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a + b),
            (Coeff::Ext(a), Coeff::Ext(b)) => Coeff::from_ext(a.add(b)),
            (Coeff::Poly(a), Coeff::Poly(b)) => Coeff::from_poly(a.add(b)),
            (Coeff::Rat(r), Coeff::Ext(e)) | (Coeff::Ext(e), Coeff::Rat(r)) => {
                Coeff::from_ext(e.add(&ExtElement::from_rational(r.clone(), e.modulus())))
            }
            (Coeff::Rat(r), Coeff::Poly(p)) | (Coeff::Poly(p), Coeff::Rat(r)) => {
                Coeff::from_poly(p.add(&MultiPoly::constant(p.vars(), r.clone())))
            }
            _ => panic!("mixed coefficient domains"),
        }
    }

    fn mul_ref(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a * b),
            (Coeff::Ext(a), Coeff::Ext(b)) => Coeff::from_ext(a.mul(b)),
            (Coeff::Poly(a), Coeff::Poly(b)) => Coeff::from_poly(a.mul(b)),
            (Coeff::Rat(r), x) | (x, Coeff::Rat(r)) => x.scale_rational(r),
            _ => panic!("mixed coefficient domains"),
        }
    }

    fn neg_ref(&self) -> Coeff {
        match self {
            Coeff::Rat(a) => Coeff::Rat(-a),
            Coeff::Ext(e) => Coeff::Ext(e.neg()),
            Coeff::Poly(p) => Coeff::Poly(p.neg()),
        }
    }
}

impl Default for Coeff {
    fn default() -> Self {
        Coeff::zero()
    }
}

impl From<Rational> for Coeff {
    fn from(r: Rational) -> Self {
        Coeff::Rat(r)
    }
}

impl From<i64> for Coeff {
    fn from(n: i64) -> Self {
        Coeff::from_i64(n)
    }
}

impl Add<&Coeff> for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        self.add_ref(rhs)
    }
}

impl Add for Coeff {
    type Output = Coeff;
    fn add(self, rhs: Coeff) -> Coeff {
        self.add_ref(&rhs)
    }
}

impl Sub<&Coeff> for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        self.add_ref(&rhs.neg_ref())
    }
}

impl Sub for Coeff {
    type Output = Coeff;
    fn sub(self, rhs: Coeff) -> Coeff {
        &self - &rhs
    }
}

impl Mul<&Coeff> for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        self.mul_ref(rhs)
    }
}

impl Mul for Coeff {
    type Output = Coeff;
    fn mul(self, rhs: Coeff) -> Coeff {
        self.mul_ref(&rhs)
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        self.neg_ref()
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        self.neg_ref()
    }
}

impl std::ops::AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, rhs: &Coeff) {
        if let (Coeff::Rat(a), Coeff::Rat(b)) = (&mut *self, rhs) {
            *a += b;
        } else {
            *self = self.add_ref(rhs);
        }
    }
}

impl std::ops::SubAssign<&Coeff> for Coeff {
    fn sub_assign(&mut self, rhs: &Coeff) {
        if let (Coeff::Rat(a), Coeff::Rat(b)) = (&mut *self, rhs) {
            *a -= b;
        } else {
            *self = self.add_ref(&rhs.neg_ref());
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(r) => write!(f, "{}", format_rational(r)),
            Coeff::Ext(e) => write!(f, "({e})"),
            Coeff::Poly(p) => write!(f, "({p})"),
        }
    }
}

/// The scalar domain shared by every coefficient of one algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Domain {
    Rational,
    Extension(Arc<Modulus>),
    PolyRing(Arc<Vec<String>>),
}

/// Serialized form of a [`Domain`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DomainDescriptor {
    Rational,
    Extension { modulus: Vec<Value> },
    PolyRing { vars: Vec<String> },
}

impl Domain {
    /// ℚ(i) as ℚ[t]/(t² + 1).
    pub fn gaussian() -> Self {
        Domain::Extension(Arc::new(Modulus::gaussian()))
    }

    pub fn poly_ring<S: AsRef<str>>(vars: &[S]) -> Self {
        Domain::PolyRing(Arc::new(vars.iter().map(|s| s.as_ref().to_string()).collect()))
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Domain::PolyRing(_))
    }

    /// The adjoined root `t` of an extension.
    pub fn generator(&self) -> Option<Coeff> {
        match self {
            Domain::Extension(m) => Some(Coeff::from_ext(ExtElement::generator(m))),
            _ => None,
        }
    }

    /// The polynomial variable with the given name.
    pub fn var(&self, name: &str) -> Option<Coeff> {
        match self {
            Domain::PolyRing(vars) => {
                let idx = vars.iter().position(|v| v == name)?;
                Some(Coeff::Poly(MultiPoly::var(vars, idx)))
            }
            _ => None,
        }
    }

    /// Whether `c` is a value of this domain.
    pub fn admits(&self, c: &Coeff) -> bool {
        match (self, c) {
            (_, Coeff::Rat(_)) => true,
            (Domain::Extension(m), Coeff::Ext(e)) => **m == **e.modulus(),
            (Domain::PolyRing(v), Coeff::Poly(p)) => **v == **p.vars(),
            _ => false,
        }
    }

    pub fn descriptor(&self) -> DomainDescriptor {
        match self {
            Domain::Rational => DomainDescriptor::Rational,
            Domain::Extension(m) => DomainDescriptor::Extension {
                modulus: m.coeffs().iter().map(|c| Value::String(format_rational(c))).collect(),
            },
            Domain::PolyRing(v) => DomainDescriptor::PolyRing { vars: (**v).clone() },
        }
    }

    pub fn from_descriptor(d: &DomainDescriptor) -> Result<Self> {
        match d {
            DomainDescriptor::Rational => Ok(Domain::Rational),
            DomainDescriptor::Extension { modulus } => {
                let coeffs = modulus.iter().map(rational_from_json).collect::<Result<Vec<_>>>()?;
                Ok(Domain::Extension(Arc::new(Modulus::new(coeffs)?)))
            }
            DomainDescriptor::PolyRing { vars } => {
                if vars.is_empty() {
                    return Err(Error::Input("polynomial ring needs at least one variable".into()));
                }
                Ok(Domain::poly_ring(vars))
            }
        }
    }

    /// JSON form of a coefficient: `"p/q"` for ℚ, a coefficient array for
    /// extensions, an `{exponent-tuple: "p/q"}` map for polynomials.
    pub fn encode(&self, c: &Coeff) -> Value {
        match self {
            Domain::Rational => match c {
                Coeff::Rat(r) => Value::String(format_rational(r)),
                _ => panic!("coefficient outside the rational domain"),
            },
            Domain::Extension(m) => {
                let e = match c {
                    Coeff::Rat(r) => ExtElement::from_rational(r.clone(), m),
                    Coeff::Ext(e) => e.clone(),
                    Coeff::Poly(_) => panic!("polynomial coefficient in an extension domain"),
                };
                Value::Array(e.coeffs().iter().map(|r| Value::String(format_rational(r))).collect())
            }
            Domain::PolyRing(vars) => {
                let p = match c {
                    Coeff::Rat(r) => MultiPoly::constant(vars, r.clone()),
                    Coeff::Poly(p) => p.clone(),
                    Coeff::Ext(_) => panic!("extension coefficient in a polynomial domain"),
                };
                let map = p.terms().map(|(m, r)| (poly::exponent_key(m), Value::String(format_rational(r)))).collect();
                Value::Object(map)
            }
        }
    }

    /// Parses a coefficient. Plain rationals (string or integer) are
    /// accepted in every domain.
    pub fn decode(&self, v: &Value) -> Result<Coeff> {
        if matches!(v, Value::String(_) | Value::Number(_)) {
            return Ok(Coeff::Rat(rational_from_json(v)?));
        }
        match (self, v) {
            (Domain::Extension(m), Value::Array(items)) => {
                if items.len() != m.degree() {
                    return Err(Error::Parse(format!(
                        "extension element needs {} coefficients, got {}",
                        m.degree(),
                        items.len()
                    )));
                }
                let raw = items.iter().map(rational_from_json).collect::<Result<Vec<_>>>()?;
                Ok(Coeff::from_ext(ext_normalize(&raw, m)))
            }
            (Domain::PolyRing(vars), Value::Object(map)) => {
                let zero = MultiPoly::zero(vars);
                let mut terms = Vec::with_capacity(map.len());
                for (k, c) in map {
                    terms.push((zero.parse_exponents(k)?, rational_from_json(c)?));
                }
                Ok(Coeff::from_poly(MultiPoly::from_terms(vars, terms)?))
            }
            _ => Err(Error::Parse(format!("coefficient {v} does not fit the declared domain"))),
        }
    }
}

fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(int(n.as_i64().unwrap())),
        _ => Err(Error::Parse(format!("expected a rational as \"p/q\", got {v}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn canonical_demotion() {
        let d = Domain::gaussian();
        let i = d.generator().unwrap();
        assert!(matches!(i, Coeff::Ext(_)));
        assert_eq!(&i * &i, Coeff::from_i64(-1));
        let p = Domain::poly_ring(&["la", "lb"]);
        let la = p.var("la").unwrap();
        assert_eq!(&la - &la, Coeff::zero());
        assert!(p.var("lz").is_none());
    }

    #[test]
    fn mixed_rational_promotes() {
        let i = Domain::gaussian().generator().unwrap();
        let x = &Coeff::from_i64(1) + &i;
        assert_eq!(&x - &i, Coeff::one());
        assert_eq!(x.inverse().unwrap() * x, Coeff::one());
    }

    #[test]
    fn division_rules() {
        let p = Domain::poly_ring(&["la"]);
        let la = p.var("la").unwrap();
        assert!(la.inverse().is_err());
        assert_eq!(la.try_div(&Coeff::from_i64(2)).unwrap(), la.scale_rational(&rat(1, 2)));
        assert_eq!(Coeff::zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn descriptor_json_shapes() {
        assert_eq!(serde_json::to_value(Domain::Rational.descriptor()).unwrap(), json!({"kind": "rational"}));
        assert_eq!(
            serde_json::to_value(Domain::gaussian().descriptor()).unwrap(),
            json!({"kind": "extension", "modulus": ["1", "0", "1"]})
        );
        let d: DomainDescriptor = serde_json::from_value(json!({"kind": "extension", "modulus": [1, 0, 1]})).unwrap();
        assert_eq!(Domain::from_descriptor(&d).unwrap(), Domain::gaussian());
        let d: DomainDescriptor =
            serde_json::from_value(json!({"kind": "poly_ring", "vars": ["la", "lb", "lc"]})).unwrap();
        assert_eq!(Domain::from_descriptor(&d).unwrap(), Domain::poly_ring(&["la", "lb", "lc"]));
    }

    #[test]
    fn coefficient_json_roundtrip() {
        let g = Domain::gaussian();
        let x = &g.generator().unwrap().scale_rational(&rat(-1, 4)) + &Coeff::from_ratio(1, 4);
        assert_eq!(g.encode(&x), json!(["1/4", "-1/4"]));
        assert_eq!(g.decode(&g.encode(&x)).unwrap(), x);
        assert_eq!(g.decode(&json!(["3", "0"])).unwrap(), Coeff::from_i64(3));

        let p = Domain::poly_ring(&["la", "lb"]);
        let y = &(&p.var("la").unwrap() * &p.var("lb").unwrap()) - &Coeff::from_ratio(1, 2);
        assert_eq!(p.encode(&y), json!({"0,0": "-1/2", "1,1": "1"}));
        assert_eq!(p.decode(&p.encode(&y)).unwrap(), y);
        assert_eq!(p.decode(&json!({})).unwrap(), Coeff::zero());

        assert_eq!(Domain::Rational.decode(&json!("-7/3")).unwrap(), Coeff::from_ratio(-7, 3));
        assert_eq!(Domain::Rational.decode(&json!(5)).unwrap(), Coeff::from_i64(5));
        assert!(Domain::Rational.decode(&json!(["1"])).is_err());
        assert!(Domain::Rational.decode(&json!(1.5)).is_err());
    }
}
