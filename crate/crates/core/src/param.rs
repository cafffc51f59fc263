//! Deformation parameters and exponent vectors.
//!
//! The scalar ring is built over a fixed, closed set of commuting symbols:
//! the nine structure parameters (xi, nu, alpha, beta1..beta6) that label
//! the cocommutator families, the six classical r-matrix coefficients
//! a1..a6, the three invariant-element coefficients tau1..tau3 and the five
//! automorphism parameters lambda1..lambda5. Every symbol has a stable
//! index used by the sparse exponent vectors below.
//!
//! Exponents are signed: automorphism reductions divide coefficients by
//! nu or alpha (for example beta2/nu), and those quotients stay exact when
//! the monomial ring is allowed Laurent exponents. Operations that require
//! honest power series (exp, compose) reject negative exponents.

use std::fmt;

/// Number of distinct scalar symbols.
pub const PARAM_COUNT: usize = 23;

/// A commuting scalar symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Param {
    Xi,
    Nu,
    Alpha,
    Beta1,
    Beta2,
    Beta3,
    Beta4,
    Beta5,
    Beta6,
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    Tau1,
    Tau2,
    Tau3,
    Lambda1,
    Lambda2,
    Lambda3,
    Lambda4,
    Lambda5,
}

impl Param {
    pub const ALL: [Param; PARAM_COUNT] = [
        Param::Xi,
        Param::Nu,
        Param::Alpha,
        Param::Beta1,
        Param::Beta2,
        Param::Beta3,
        Param::Beta4,
        Param::Beta5,
        Param::Beta6,
        Param::A1,
        Param::A2,
        Param::A3,
        Param::A4,
        Param::A5,
        Param::A6,
        Param::Tau1,
        Param::Tau2,
        Param::Tau3,
        Param::Lambda1,
        Param::Lambda2,
        Param::Lambda3,
        Param::Lambda4,
        Param::Lambda5,
    ];

    /// Stable index into exponent vectors.
    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Param::Xi => "xi",
            Param::Nu => "nu",
            Param::Alpha => "alpha",
            Param::Beta1 => "beta1",
            Param::Beta2 => "beta2",
            Param::Beta3 => "beta3",
            Param::Beta4 => "beta4",
            Param::Beta5 => "beta5",
            Param::Beta6 => "beta6",
            Param::A1 => "a1",
            Param::A2 => "a2",
            Param::A3 => "a3",
            Param::A4 => "a4",
            Param::A5 => "a5",
            Param::A6 => "a6",
            Param::Tau1 => "tau1",
            Param::Tau2 => "tau2",
            Param::Tau3 => "tau3",
            Param::Lambda1 => "lambda1",
            Param::Lambda2 => "lambda2",
            Param::Lambda3 => "lambda3",
            Param::Lambda4 => "lambda4",
            Param::Lambda5 => "lambda5",
        }
    }

    pub fn from_name(name: &str) -> Option<Param> {
        Param::ALL.iter().copied().find(|p| p.name() == name)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector of a scalar monomial, one signed entry per symbol.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Exponents(pub [i16; PARAM_COUNT]);

impl Exponents {
    pub const ZERO: Exponents = Exponents([0; PARAM_COUNT]);

    /// Monomial p^k.
    pub fn of(p: Param, k: i16) -> Exponents {
        let mut e = [0i16; PARAM_COUNT];
        e[p.index()] = k;
        Exponents(e)
    }

    /// Signed total degree (negative exponents count negatively).
    pub fn total_degree(&self) -> i32 {
        self.0.iter().map(|&e| e as i32).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// True when no exponent is negative (an honest power-series monomial).
    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn exponent(&self, p: Param) -> i16 {
        self.0[p.index()]
    }

    #[must_use]
    pub fn mul(&self, rhs: &Exponents) -> Exponents {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(rhs.0.iter()) {
            *a += b;
        }
        Exponents(e)
    }

    #[must_use]
    pub fn pow(&self, k: u32) -> Exponents {
        let mut e = self.0;
        for a in e.iter_mut() {
            *a *= k as i16;
        }
        Exponents(e)
    }
}

/// Graded-lexicographic order: total degree first, then entry-wise
/// comparison along the fixed symbol order. This is the canonical term
/// order for rendering and golden files.
impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Exponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return f.write_str("1");
        }
        let mut first = true;
        for p in Param::ALL {
            let e = self.exponent(p);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", p.name())?;
            } else {
                write!(f, "{}^{}", p.name(), e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Exponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
