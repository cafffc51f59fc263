//! Exact rational parsing for symbolic parameter flags.
//!
//! Accepted forms: integers (`-3`), fractions (`2/5`) and terminating
//! decimals (`0.25`), all converted exactly. Scientific notation is
//! rejected here; floating-point flags use ordinary f64 parsing instead.

use num_bigint::BigInt;
use num_traits::Zero;
use qgal_core::Q;

pub fn parse_q(input: &str) -> Result<Q, String> {
    let t = input.trim();
    if t.is_empty() {
        return Err("empty number".into());
    }
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let value = if let Some((num, den)) = body.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator in `{t}`"))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator in `{t}`"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in `{t}`"));
        }
        Q::new(n, d)
    } else if let Some((int, frac)) = body.split_once('.') {
        if !int.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("`{t}` is not a decimal number"));
        }
        if frac.is_empty() {
            return Err(format!("`{t}` has no digits after the point"));
        }
        let whole: BigInt = if int.is_empty() { BigInt::zero() } else { int.parse().unwrap() };
        let fnum: BigInt = frac.parse().unwrap();
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        Q::from(whole) + Q::new(fnum, den)
    } else {
        let n: BigInt = body
            .parse()
            .map_err(|_| format!("`{t}` is not an integer, fraction or decimal"))?;
        Q::from(n)
    };
    Ok(if neg { -value } else { value })
}

/// Comma-separated f64 list (`"1,1.5,0.8"`).
pub fn parse_f64_list(input: &str) -> Result<Vec<f64>, String> {
    input
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| format!("`{}` is not a number", s.trim()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_fractions_and_decimals() {
        assert_eq!(parse_q("3").unwrap(), Q::from(BigInt::from(3)));
        assert_eq!(parse_q("-1/2").unwrap(), Q::new(BigInt::from(-1), BigInt::from(2)));
        assert_eq!(parse_q("0.25").unwrap(), Q::new(BigInt::from(1), BigInt::from(4)));
        assert_eq!(parse_q("-2.5").unwrap(), Q::new(BigInt::from(-5), BigInt::from(2)));
        assert_eq!(parse_q("+7/3").unwrap(), Q::new(BigInt::from(7), BigInt::from(3)));
    }

    #[test]
    fn rejects_malformed_numbers() {
        assert!(parse_q("").is_err());
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("1e-3").is_err());
        assert!(parse_q("a").is_err());
        assert!(parse_q("1.").is_err());
    }
}
