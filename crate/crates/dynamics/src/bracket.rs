//! Canonical Poisson brackets evaluated through dual-number gradients.

use crate::error::DynError;
use crate::scalar::Dual;

/// Exact gradient of `f` with respect to (q, p) at a point, one dual-number
/// evaluation per coordinate.
pub fn gradient<F>(f: &F, q: &[f64], p: &[f64]) -> Result<(Vec<f64>, Vec<f64>), DynError>
where
    F: Fn(&[Dual], &[Dual]) -> Dual,
{
    let n = q.len();
    let mut qd: Vec<Dual> = q.iter().map(|&x| Dual::c(x)).collect();
    let mut pd: Vec<Dual> = p.iter().map(|&x| Dual::c(x)).collect();
    let mut dq = Vec::with_capacity(n);
    let mut dp = Vec::with_capacity(n);
    for i in 0..n {
        qd[i] = Dual::var(q[i]);
        let out = f(&qd, &pd);
        qd[i] = Dual::c(q[i]);
        if !out.du.is_finite() {
            return Err(DynError::NonFinite(format!("dF/dq{}", i + 1)));
        }
        dq.push(out.du);
    }
    for i in 0..n {
        pd[i] = Dual::var(p[i]);
        let out = f(&qd, &pd);
        pd[i] = Dual::c(p[i]);
        if !out.du.is_finite() {
            return Err(DynError::NonFinite(format!("dF/dp{}", i + 1)));
        }
        dp.push(out.du);
    }
    Ok((dq, dp))
}

/// A bracket value together with the magnitude of the products that were
/// summed to produce it; `scale` bounds how much cancellation could hide.
#[derive(Clone, Copy, Debug)]
pub struct BracketValue {
    pub value: f64,
    pub scale: f64,
}

impl BracketValue {
    /// |value| relative to the cancellation scale (floored at 1).
    pub fn relative(&self) -> f64 {
        self.value.abs() / self.scale.max(1.0)
    }
}

/// {F, G} = Σᵢ ∂F/∂qᵢ ∂G/∂pᵢ − ∂F/∂pᵢ ∂G/∂qᵢ at a phase-space point.
pub fn poisson_bracket_scaled<F, G>(
    f: &F,
    g: &G,
    q: &[f64],
    p: &[f64],
) -> Result<BracketValue, DynError>
where
    F: Fn(&[Dual], &[Dual]) -> Dual,
    G: Fn(&[Dual], &[Dual]) -> Dual,
{
    let (fq, fp) = gradient(f, q, p)?;
    let (gq, gp) = gradient(g, q, p)?;
    let mut value = 0.0;
    let mut scale = 0.0;
    for i in 0..q.len() {
        let a = fq[i] * gp[i];
        let b = fp[i] * gq[i];
        value += a - b;
        scale += a.abs() + b.abs();
    }
    if !value.is_finite() {
        return Err(DynError::NonFinite("poisson bracket".into()));
    }
    Ok(BracketValue { value, scale })
}

/// Plain bracket value.
pub fn poisson_bracket<F, G>(f: &F, g: &G, q: &[f64], p: &[f64]) -> Result<f64, DynError>
where
    F: Fn(&[Dual], &[Dual]) -> Dual,
    G: Fn(&[Dual], &[Dual]) -> Dual,
{
    Ok(poisson_bracket_scaled(f, g, q, p)?.value)
}
