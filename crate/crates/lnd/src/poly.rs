//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A polynomial is a canonical term map from monomials to nonzero rationals;
//! the ring it lives in is part of the value, so cross-ring arithmetic is
//! detected rather than silently misread.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::ring::{same_ring, RingSpec};

/// Exact rational coefficients. `num_rational` keeps values reduced with a
/// positive denominator, which is exactly the canonical form required here.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exponent vector with one slot per ring generator (base-first layout).
///
/// The derived `Ord` is plain lexicographic on the exponents; it is used only
/// as a canonical map key, never as the active monomial order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Monomial {
        Monomial(exponents)
    }

    /// The unit monomial (all exponents zero) on `len` generators.
    pub fn unit(len: usize) -> Monomial {
        Monomial(vec![0; len])
    }

    /// The monomial of a single generator.
    pub fn generator(len: usize, index: usize) -> Monomial {
        let mut exps = vec![0; len];
        exps[index] = 1;
        Monomial(exps)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0[index]
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Product of two monomials. Panics on exponent overflow; degrees that
    /// large are far outside the intended desk scale and must fail loudly.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|&a| a.checked_mul(k).expect("monomial exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(
                self.0.iter().zip(&other.0).map(|(&a, &b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    /// True when the two monomials share no generator.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Indices of generators appearing with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

/// Sparse exact polynomial over `Q` in the generators of a [`RingSpec`].
///
/// Invariants: no stored coefficient is zero, keys are distinct, and the
/// representation of a given mathematical polynomial is unique.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    spec: Arc<RingSpec>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(spec: &Arc<RingSpec>) -> Polynomial {
        Polynomial {
            spec: spec.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(spec: &Arc<RingSpec>) -> Polynomial {
        Polynomial::constant(spec, Rational::one())
    }

    pub fn constant(spec: &Arc<RingSpec>, value: Rational) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Monomial::unit(spec.len()), value);
        }
        Polynomial {
            spec: spec.clone(),
            terms,
        }
    }

    pub fn variable(spec: &Arc<RingSpec>, name: &str) -> Result<Polynomial> {
        let index = spec
            .index_of(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))?;
        Ok(Polynomial::generator(spec, index))
    }

    pub fn generator(spec: &Arc<RingSpec>, index: usize) -> Polynomial {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::generator(spec.len(), index), Rational::one());
        Polynomial {
            spec: spec.clone(),
            terms,
        }
    }

    pub fn from_terms(
        spec: &Arc<RingSpec>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Polynomial {
        let mut out = Polynomial::zero(spec);
        for (m, c) in terms {
            debug_assert_eq!(m.len(), spec.len());
            out.add_term(m, c);
        }
        out
    }

    pub fn spec(&self) -> &Arc<RingSpec> {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// The constant value when the polynomial has no generator support.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_unit() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    /// True when the support only touches base-ring generators, i.e. the
    /// element lies in `A`.
    pub fn is_base_element(&self) -> bool {
        self.terms
            .keys()
            .all(|m| m.support().all(|i| self.spec.is_base(i)))
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn require_same_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.spec, &other.spec) {
            Ok(())
        } else {
            Err(Error::RingMismatch(
                self.spec.to_string(),
                other.spec.to_string(),
            ))
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.require_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.require_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.require_same_ring(other)?;
        let mut out = Polynomial::zero(&self.spec);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            spec: self.spec.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero(&self.spec);
        }
        Polynomial {
            spec: self.spec.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.spec);
        }
        Polynomial {
            spec: self.spec.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.spec);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Maximal term under `ord`. Errors on the zero polynomial.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<(Monomial, Rational)> {
        let mut best: Option<&Monomial> = None;
        for m in self.terms.keys() {
            best = Some(match best {
                None => m,
                Some(b) => ord.max(b, m),
            });
        }
        let m = best.ok_or(Error::ZeroPolynomial)?;
        Ok((m.clone(), self.terms[m].clone()))
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Result<Monomial> {
        Ok(self.leading_term(ord)?.0)
    }

    /// Formal partial derivative with respect to a generator.
    pub fn partial_derivative(&self, name: &str) -> Result<Polynomial> {
        let index = self
            .spec
            .index_of(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))?;
        Ok(self.partial_derivative_index(index))
    }

    pub fn partial_derivative_index(&self, index: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.spec);
        for (m, c) in &self.terms {
            let e = m.exponent(index);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[index] -= 1;
            out.add_term(Monomial::new(exps), c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Division with remainder by a single divisor under `ord`: returns
    /// `(q, r)` with `self = q * g + r` and no term of `r` divisible by the
    /// leading monomial of `g`.
    pub fn div_rem(&self, g: &Polynomial, ord: &MonomialOrder) -> Result<(Polynomial, Polynomial)> {
        self.require_same_ring(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (gm, gc) = g.leading_term(ord)?;
        let mut quotient = Polynomial::zero(&self.spec);
        let mut remainder = Polynomial::zero(&self.spec);
        let mut p = self.clone();
        while !p.is_zero() {
            let (pm, pc) = p.leading_term(ord)?;
            if let Some(m) = pm.div(&gm) {
                let c = &pc / &gc;
                quotient.add_term(m.clone(), c.clone());
                p = &p - &g.mul_term(&m, &c);
            } else {
                remainder.add_term(pm.clone(), pc.clone());
                let mut terms = p.terms;
                terms.remove(&pm);
                p = Polynomial {
                    spec: self.spec.clone(),
                    terms,
                };
            }
        }
        Ok((quotient, remainder))
    }

    /// Exact quotient `self / g`; errors when `g` does not divide `self`.
    pub fn exact_divide(&self, g: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(g, &MonomialOrder::DegRevLex)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible {
                dividend: self.to_string(),
                divisor: g.to_string(),
            })
        }
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients; zero for the zero polynomial.
    pub fn content(&self) -> Rational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            Rational::zero()
        } else {
            Rational::new(num, den)
        }
    }

    /// Scales to coprime integer coefficients with a positive leading
    /// coefficient under `ord`. Zero stays zero.
    pub fn primitive_part(&self, ord: &MonomialOrder) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let content = self.content();
        let mut out = self.scale(&content.recip());
        let (_, lc) = out.leading_term(ord).unwrap();
        if lc.is_negative() {
            out = out.neg();
        }
        out
    }

    /// Scales so the leading coefficient under `ord` is one. Zero stays zero.
    pub fn monic(&self, ord: &MonomialOrder) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let (_, lc) = self.leading_term(ord).unwrap();
        self.scale(&lc.recip())
    }

    /// Substitutes `images[i]` (a polynomial in `target`) for generator `i`.
    pub fn substitute(
        &self,
        target: &Arc<RingSpec>,
        images: &[Polynomial],
    ) -> Result<Polynomial> {
        if images.len() != self.spec.len() {
            return Err(Error::Usage(format!(
                "substitution needs {} images, got {}",
                self.spec.len(),
                images.len()
            )));
        }
        for img in images {
            if !same_ring(img.spec(), target) {
                return Err(Error::RingMismatch(
                    img.spec().to_string(),
                    target.to_string(),
                ));
            }
        }
        let mut powers: BTreeMap<(usize, u32), Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(target, c.clone());
            for i in m.support() {
                let e = m.exponent(i);
                let p = powers
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e))
                    .clone();
                prod = &prod * &p;
            }
            out = &out + &prod;
        }
        Ok(out)
    }

    /// Reinterprets this polynomial in an extension of its ring obtained by
    /// appending generators (zero-pads exponent vectors on the right).
    pub fn lift_to(&self, target: &Arc<RingSpec>) -> Polynomial {
        debug_assert!(target.len() >= self.spec.len());
        let extra = target.len() - self.spec.len();
        Polynomial {
            spec: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut exps = m.exponents().to_vec();
                    exps.extend(std::iter::repeat(0).take(extra));
                    (Monomial::new(exps), c.clone())
                })
                .collect(),
        }
    }

    /// Formats with terms in descending order under `ord`.
    pub fn format_with_order(&self, ord: &MonomialOrder) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut monomials: Vec<&Monomial> = self.terms.keys().collect();
        monomials.sort_by(|a, b| ord.compare(b, a));
        let mut out = String::new();
        for (i, m) in monomials.iter().enumerate() {
            let c = &self.terms[*m];
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&format_term_magnitude(&self.spec, m, c));
        }
        out
    }
}

fn format_rational(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn format_term_magnitude(spec: &RingSpec, m: &Monomial, c: &Rational) -> String {
    let mag = c.abs();
    let mut pieces: Vec<String> = Vec::new();
    if m.is_unit() || !mag.is_one() {
        pieces.push(format_rational(&mag));
    }
    for i in m.support() {
        let e = m.exponent(i);
        if e == 1 {
            pieces.push(spec.name(i).to_string());
        } else {
            pieces.push(format!("{}^{}", spec.name(i), e));
        }
    }
    pieces.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with_order(&MonomialOrder::DegRevLex))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}
