//! Exact rational scalars and the string encodings used by the file formats.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

/// The scalar type of every exact computation in this crate.
///
/// Always stored in lowest terms with a positive denominator; zero is 0/1.
/// Those invariants are maintained by `num_rational::Ratio` itself.
pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The fraction n/d. Panics if d = 0.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse a rational from `"p"` or `"p/q"` with decimal integer parts.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s).map_err(|e| format!("bad integer {s:?}: {e}"))?;
            Ok(Rat::from_integer(n))
        }
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim()).map_err(|e| format!("bad numerator {num:?}: {e}"))?;
            let d = BigInt::from_str(den.trim()).map_err(|e| format!("bad denominator {den:?}: {e}"))?;
            if d.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Canonical string form: `"p"` when the denominator is 1, else `"p/q"`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Best rational approximation of `x` by continued fractions, with the
/// denominator bounded by `max_den`. Returns None for non-finite input.
pub fn rationalize_f64(x: f64, max_den: u64) -> Option<Rat> {
    if !x.is_finite() {
        return None;
    }
    let negative = x < 0.0;
    let mut x = x.abs();
    // convergents p/q of the continued fraction of |x|
    let (mut p0, mut q0, mut p1, mut q1) = (1i128, 0i128, 0i128, 1i128);
    for _ in 0..64 {
        let a = x.floor();
        if a >= i64::MAX as f64 {
            break;
        }
        let a = a as i128;
        let p2 = a.checked_mul(p0)?.checked_add(p1)?;
        let q2 = a.checked_mul(q0)?.checked_add(q1)?;
        if q2 > max_den as i128 {
            break;
        }
        p1 = p0;
        q1 = q0;
        p0 = p2;
        q0 = q2;
        let frac = x - a as f64;
        if frac < 1e-14 {
            break;
        }
        x = 1.0 / frac;
    }
    if q0 == 0 {
        return None;
    }
    let mut r = Rat::new(BigInt::from(p0), BigInt::from(q0));
    if negative {
        r = -r;
    }
    Some(r)
}

/// Scale a rational vector to coprime integers (shared denominator cleared,
/// common numerator factor removed). Returns the zero vector unchanged.
pub fn clear_denominators(v: &[Rat]) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for r in v {
        lcm = lcm.lcm(r.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
    let mut g = BigInt::zero();
    for n in &ints {
        g = g.gcd(n);
    }
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|n| n / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "-3", "22/7", "-10/4"] {
            let r = parse_rat(s).unwrap();
            let back = parse_rat(&fmt_rat(&r)).unwrap();
            assert_eq!(r, back);
        }
        // normalization to lowest terms with positive denominator
        assert_eq!(fmt_rat(&parse_rat("-10/4").unwrap()), "-5/2");
        assert_eq!(fmt_rat(&parse_rat("3/-6").unwrap()), "-1/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn rationalize_recovers_small_fractions() {
        for (n, d) in [(1i64, 3i64), (-7, 2), (355, 113), (0, 1)] {
            let x = n as f64 / d as f64;
            let r = rationalize_f64(x, 1_000_000).unwrap();
            assert_eq!(r, ratio(n, d));
        }
        // sqrt(2) is approximated, not matched
        let r = rationalize_f64(std::f64::consts::SQRT_2, 1_000_000).unwrap();
        assert!((rat_to_f64(&r) - std::f64::consts::SQRT_2).abs() < 1e-10);
    }

    #[test]
    fn clear_denominators_gives_coprime_integers() {
        let v = vec![ratio(1, 2), ratio(-3, 4), rat(0), rat(2)];
        let ints = clear_denominators(&v);
        let expect: Vec<BigInt> = [2, -3, 0, 8].iter().map(|&n| BigInt::from(n)).collect();
        assert_eq!(ints, expect);
    }
}
