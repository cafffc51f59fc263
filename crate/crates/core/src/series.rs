//! Truncated multivariate power series over exact rationals.
//!
//! A `Series` is a finite sum  sum_e c_e * m^e  of scalar monomials with
//! `BigRational` coefficients, truncated so that every stored exponent
//! vector has total degree <= `order`. Arithmetic is exact; truncation is
//! the only lossy step and is applied uniformly, so an identity that holds
//! as a formal series holds coefficient-for-coefficient at every order.
//!
//! Exponents may be negative (see [`crate::param`]); `exp`, `inverse` and
//! `compose` demand arguments whose non-constant terms all have positive
//! total degree, which is exactly the condition for the defining sums to
//! stabilize under truncation.

use crate::error::CoreError;
use crate::param::{Exponents, Param};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Q = BigRational;

/// Rational n/d.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Integer rational.
pub fn qi(n: i64) -> Q {
    Q::from(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    order: u32,
    terms: BTreeMap<Exponents, Q>,
}

impl Series {
    // ---- constructors --------------------------------------------------

    pub fn zero(order: u32) -> Series {
        Series { order, terms: BTreeMap::new() }
    }

    pub fn one(order: u32) -> Series {
        Series::constant(Q::one(), order)
    }

    pub fn constant(c: Q, order: u32) -> Series {
        let mut s = Series::zero(order);
        s.add_term(Exponents::ZERO, c);
        s
    }

    pub fn param(p: Param, order: u32) -> Series {
        Series::monomial(Exponents::of(p, 1), Q::one(), order)
    }

    pub fn monomial(e: Exponents, c: Q, order: u32) -> Series {
        let mut s = Series::zero(order);
        s.add_term(e, c);
        s
    }

    // ---- accessors -----------------------------------------------------

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponents) -> Q {
        self.terms.get(e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(&Exponents::ZERO)
    }

    /// Smallest total degree among stored terms.
    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.total_degree()).min()
    }

    /// True when every stored monomial has non-negative exponents.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.is_polynomial())
    }

    /// True when every non-constant term has total degree >= 1, the domain
    /// on which exp/inverse/compose are defined.
    fn tail_is_positive(&self) -> bool {
        self.terms
            .keys()
            .all(|e| e.is_constant() || e.total_degree() >= 1)
    }

    /// The part of the series with total degree exactly `d`.
    pub fn homogeneous_part(&self, d: i32) -> Series {
        let mut out = Series::zero(self.order);
        for (e, c) in &self.terms {
            if e.total_degree() == d {
                out.add_term(*e, c.clone());
            }
        }
        out
    }

    // ---- canonical mutation ---------------------------------------------

    fn add_term(&mut self, e: Exponents, c: Q) {
        if c.is_zero() || e.total_degree() > self.order as i32 {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    // ---- ring operations -------------------------------------------------

    fn check_order(&self, rhs: &Series) -> Result<(), CoreError> {
        if self.order != rhs.order {
            return Err(CoreError::OrderMismatch { left: self.order, right: rhs.order });
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Series) -> Result<Series, CoreError> {
        self.check_order(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Series) -> Result<Series, CoreError> {
        self.check_order(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, rhs: &Series) -> Result<Series, CoreError> {
        self.check_order(rhs)?;
        let mut out = Series::zero(self.order);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.mul(eb);
                if e.total_degree() > self.order as i32 {
                    continue;
                }
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    #[must_use]
    pub fn scale(&self, c: &Q) -> Series {
        if c.is_zero() {
            return Series::zero(self.order);
        }
        let mut out = Series::zero(self.order);
        for (e, cc) in &self.terms {
            out.add_term(*e, cc * c);
        }
        out
    }

    /// Multiply by a bare monomial, allowing negative exponents. This is the
    /// Laurent escape hatch used by automorphism coefficients; ordinary code
    /// paths use `try_mul`.
    #[must_use]
    pub fn mul_monomial(&self, m: &Exponents, c: &Q) -> Series {
        let mut out = Series::zero(self.order);
        for (e, cc) in &self.terms {
            out.add_term(e.mul(m), cc * c);
        }
        out
    }

    #[must_use]
    pub fn pow(&self, k: u32) -> Series {
        let mut out = Series::one(self.order);
        for _ in 0..k {
            out = out.try_mul(self).expect("equal orders");
        }
        out
    }

    /// Re-truncate to a lower order.
    #[must_use]
    pub fn truncate(&self, order: u32) -> Series {
        let mut out = Series::zero(order);
        for (e, c) in &self.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    // ---- series functions -------------------------------------------------

    /// exp(self) = sum_k self^k / k!, requiring every term of the argument
    /// to have positive total degree so the sum stabilizes at k = order.
    pub fn exp(&self) -> Result<Series, CoreError> {
        if self.min_degree().map_or(false, |d| d < 1) {
            return Err(CoreError::NonNilpotentExponent);
        }
        let mut out = Series::one(self.order);
        let mut power = Series::one(self.order);
        let mut factorial = Q::one();
        for k in 1..=self.order {
            power = power.try_mul(self)?;
            if power.is_zero() {
                break;
            }
            factorial *= qi(k as i64);
            out = out.try_add(&power.scale(&(Q::one() / &factorial)))?;
        }
        Ok(out)
    }

    /// Multiplicative inverse; requires a nonzero constant term and a tail
    /// of positive total degree.
    pub fn inverse(&self) -> Result<Series, CoreError> {
        let c = self.constant_term();
        if c.is_zero() || !self.tail_is_positive() {
            return Err(CoreError::NonInvertible);
        }
        // self = c (1 + t)  =>  1/self = (1/c) sum (-t)^k
        let cinv = Q::one() / c;
        let mut t = self.scale(&cinv);
        t.terms.remove(&Exponents::ZERO);
        let mut out = Series::one(self.order);
        let mut power = Series::one(self.order);
        for _ in 1..=self.order {
            power = power.try_mul(&t)?;
            if power.is_zero() {
                break;
            }
            power = -&power;
            out = out.try_add(&power)?;
        }
        Ok(out.scale(&cinv))
    }

    /// Compose a univariate outer series (given by its coefficient list
    /// c_0, c_1, ...) with `self`: sum_k c_k self^k. The argument must have
    /// every term of positive total degree.
    pub fn compose(outer: &[Q], inner: &Series) -> Result<Series, CoreError> {
        if inner.min_degree().map_or(false, |d| d < 1) {
            return Err(CoreError::CompositionDomain);
        }
        let mut out = Series::zero(inner.order);
        let mut power = Series::one(inner.order);
        for (k, c) in outer.iter().enumerate() {
            if k > 0 {
                power = power.try_mul(inner)?;
                if power.is_zero() {
                    break;
                }
            }
            out = out.try_add(&power.scale(c))?;
        }
        Ok(out)
    }

    /// Exact division by p^k: every term must carry at least p^k. This keeps
    /// quotients like (exp(2 xi M) - 1)/(2 xi) manifestly polynomial.
    pub fn div_param_exact(&self, p: Param, k: u32) -> Result<Series, CoreError> {
        for e in self.terms.keys() {
            if (e.exponent(p) as i32) < k as i32 {
                return Err(CoreError::InexactDivision { param: p, power: k });
            }
        }
        Ok(self.mul_monomial(&Exponents::of(p, -(k as i16)), &Q::one()))
    }

    /// Substitute a series value for a symbol. The symbol must occur with
    /// non-negative exponents only.
    pub fn subst(&self, p: Param, value: &Series) -> Result<Series, CoreError> {
        self.check_order(value)?;
        let mut powers: Vec<Series> = vec![Series::one(self.order)];
        let mut out = Series::zero(self.order);
        for (e, c) in &self.terms {
            let k = e.exponent(p);
            if k < 0 {
                return Err(CoreError::LaurentSubstitution { param: p });
            }
            while powers.len() <= k as usize {
                let next = powers.last().unwrap().try_mul(value)?;
                powers.push(next);
            }
            let mut rest = *e;
            rest.0[p.index()] = 0;
            out = out.try_add(&powers[k as usize].mul_monomial(&rest, c))?;
        }
        Ok(out)
    }

    /// Substitute a rational constant for a symbol.
    pub fn subst_q(&self, p: Param, value: &Q) -> Series {
        self.subst(p, &Series::constant(value.clone(), self.order))
            .expect("constant substitution cannot fail")
    }
}

// ---- operators (panic on order mismatch; checked forms above) ------------

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.try_add(rhs).expect("series order mismatch")
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.try_sub(rhs).expect("series order mismatch")
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        self.try_mul(rhs).expect("series order mismatch")
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.scale(&-Q::one())
    }
}

impl fmt::Display for Series {
    /// Canonical rendering: terms in graded-lex order, exact rational
    /// coefficients, `*` between coefficient and monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if e.is_constant() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{e}")?;
            } else {
                write!(f, "{mag}*{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---- standard univariate coefficient tables --------------------------------

/// Taylor coefficient lists for the outer series used around the engine.
pub mod taylor {
    use super::{q, qi, Q};
    use num_bigint::BigInt;
    use num_traits::{One, Zero};

    fn central_binomial(k: u32) -> BigInt {
        // C(2k, k)
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for i in 0..k {
            num *= BigInt::from(2 * k - i);
            den *= BigInt::from(i + 1);
        }
        num / den
    }

    /// exp(u): 1, 1, 1/2, 1/6, ...
    pub fn exp(n: u32) -> Vec<Q> {
        let mut c = Vec::with_capacity(n as usize + 1);
        let mut f = Q::one();
        c.push(Q::one());
        for k in 1..=n {
            f *= qi(k as i64);
            c.push(Q::one() / &f);
        }
        c
    }

    /// sin(u): u - u^3/6 + u^5/120 - ...
    pub fn sin(n: u32) -> Vec<Q> {
        let mut c = vec![Q::zero(); n as usize + 1];
        let mut f = Q::one();
        for k in 0..=n {
            if k > 0 {
                f *= qi(k as i64);
            }
            if k % 2 == 1 {
                let sign = if k % 4 == 1 { 1 } else { -1 };
                c[k as usize] = qi(sign) / &f;
            }
        }
        c
    }

    /// arcsin(u): u + u^3/6 + 3u^5/40 + ...; coefficient of u^(2k+1) is
    /// C(2k,k) / (4^k (2k+1)).
    pub fn asin(n: u32) -> Vec<Q> {
        let mut c = vec![Q::zero(); n as usize + 1];
        let mut k = 0u32;
        while 2 * k + 1 <= n {
            let num = central_binomial(k);
            let den = BigInt::from(4u32).pow(k) * BigInt::from(2 * k + 1);
            c[(2 * k + 1) as usize] = Q::new(num, den);
            k += 1;
        }
        c
    }

    /// arcsin(sqrt(w))/sqrt(w) as a series in w: coefficient of w^k is
    /// C(2k,k) / (4^k (2k+1)). Even rearrangement of `asin`, exact over Q.
    pub fn asin_sqrt_over_sqrt(n: u32) -> Vec<Q> {
        (0..=n)
            .map(|k| {
                let num = central_binomial(k);
                let den = BigInt::from(4u32).pow(k) * BigInt::from(2 * k + 1);
                Q::new(num, den)
            })
            .collect()
    }

    /// (1+u)^(-1/2): coefficient of u^k is (-1)^k C(2k,k) / 4^k.
    pub fn inv_sqrt_one_plus(n: u32) -> Vec<Q> {
        (0..=n)
            .map(|k| {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                qi(sign) * Q::new(central_binomial(k), BigInt::from(4u32).pow(k))
            })
            .collect()
    }

    /// cosh(u): 1 + u^2/2 + u^4/24 + ...
    pub fn cosh(n: u32) -> Vec<Q> {
        let mut c = vec![Q::zero(); n as usize + 1];
        let mut f = Q::one();
        for k in 0..=n {
            if k > 0 {
                f *= qi(k as i64);
            }
            if k % 2 == 0 {
                c[k as usize] = Q::one() / &f;
            }
        }
        c
    }

    /// sinh(u): u + u^3/6 + u^5/120 + ...
    pub fn sinh(n: u32) -> Vec<Q> {
        let mut c = vec![Q::zero(); n as usize + 1];
        let mut f = Q::one();
        for k in 0..=n {
            if k > 0 {
                f *= qi(k as i64);
            }
            if k % 2 == 1 {
                c[k as usize] = Q::one() / &f;
            }
        }
        c
    }

    /// Convenience: the example quotient series 1/sqrt(1+u) truncated as
    /// rationals 1, -1/2, 3/8, -5/16, ...
    pub fn sample_inv_sqrt() -> Vec<Q> {
        vec![qi(1), q(-1, 2), q(3, 8)]
    }
}
