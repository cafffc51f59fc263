//! Forward-mode automatic differentiation on a single tangent slot.
//!
//! Every phase-space function in this crate is written once, generically
//! over [`Scalar`], and evaluated either on plain `f64` or on [`Dual`]
//! numbers. Derivatives obtained this way are exact to machine precision;
//! no finite differences appear anywhere.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// A number carrying one derivative: `re + du·ε` with `ε² = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dual {
    pub re: f64,
    pub du: f64,
}

impl Dual {
    pub fn new(re: f64, du: f64) -> Dual {
        Dual { re, du }
    }

    /// Constant (zero tangent).
    pub fn c(re: f64) -> Dual {
        Dual { re, du: 0.0 }
    }

    /// The independent variable (unit tangent).
    pub fn var(re: f64) -> Dual {
        Dual { re, du: 1.0 }
    }
}

impl Add for Dual {
    type Output = Dual;
    fn add(self, o: Dual) -> Dual {
        Dual::new(self.re + o.re, self.du + o.du)
    }
}

impl Sub for Dual {
    type Output = Dual;
    fn sub(self, o: Dual) -> Dual {
        Dual::new(self.re - o.re, self.du - o.du)
    }
}

impl Mul for Dual {
    type Output = Dual;
    fn mul(self, o: Dual) -> Dual {
        Dual::new(self.re * o.re, self.re * o.du + self.du * o.re)
    }
}

impl Div for Dual {
    type Output = Dual;
    fn div(self, o: Dual) -> Dual {
        let v = self.re / o.re;
        Dual::new(v, (self.du - v * o.du) / o.re)
    }
}

impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual::new(-self.re, -self.du)
    }
}

/// A one-argument smooth function supplied by the caller, evaluated both on
/// plain numbers and on duals so its derivative is available exactly.
pub trait Smooth1D: Send + Sync {
    fn eval(&self, u: f64) -> f64;
    fn eval_dual(&self, u: Dual) -> Dual;
}

/// The numeric kind phase functions are generic over.
pub trait Scalar:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_f64(x: f64) -> Self;
    /// Primal (value) part.
    fn val(self) -> f64;
    fn exp(self) -> Self;
    /// e^x − 1, accurate near zero.
    fn exp_m1(self) -> Self;
    fn sinh(self) -> Self;
    fn cosh(self) -> Self;
    fn powi(self, k: i32) -> Self;
    /// Dispatch a user-supplied smooth function at the right numeric kind.
    fn smooth(f: &dyn Smooth1D, x: Self) -> Self;
}

impl Scalar for f64 {
    fn from_f64(x: f64) -> f64 {
        x
    }
    fn val(self) -> f64 {
        self
    }
    fn exp(self) -> f64 {
        f64::exp(self)
    }
    fn exp_m1(self) -> f64 {
        f64::exp_m1(self)
    }
    fn sinh(self) -> f64 {
        f64::sinh(self)
    }
    fn cosh(self) -> f64 {
        f64::cosh(self)
    }
    fn powi(self, k: i32) -> f64 {
        f64::powi(self, k)
    }
    fn smooth(f: &dyn Smooth1D, x: f64) -> f64 {
        f.eval(x)
    }
}

impl Scalar for Dual {
    fn from_f64(x: f64) -> Dual {
        Dual::c(x)
    }
    fn val(self) -> f64 {
        self.re
    }
    fn exp(self) -> Dual {
        let e = self.re.exp();
        Dual::new(e, self.du * e)
    }
    fn exp_m1(self) -> Dual {
        Dual::new(self.re.exp_m1(), self.du * self.re.exp())
    }
    fn sinh(self) -> Dual {
        Dual::new(self.re.sinh(), self.du * self.re.cosh())
    }
    fn cosh(self) -> Dual {
        Dual::new(self.re.cosh(), self.du * self.re.sinh())
    }
    fn powi(self, k: i32) -> Dual {
        Dual::new(
            self.re.powi(k),
            self.du * f64::from(k) * self.re.powi(k - 1),
        )
    }
    fn smooth(f: &dyn Smooth1D, x: Dual) -> Dual {
        f.eval_dual(x)
    }
}
