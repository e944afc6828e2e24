//! Exact rational scalars used for charges, phases, ages and bidegrees.

use num_rational::Ratio;
use num_traits::Zero;

/// All gradings in this crate are rationals with small denominators
/// (divisors of the degree or of the group exponent), so a fixed-width
/// numerator is plenty; `i128` leaves a wide safety margin.
pub type Rat = Ratio<i128>;

pub fn rat(numer: i128, denom: i128) -> Rat {
    Ratio::new(numer, denom)
}

pub fn int(n: i128) -> Rat {
    Ratio::from_integer(n)
}

/// Fractional part in `[0, 1)`.
pub fn frac(r: Rat) -> Rat {
    r - r.floor()
}

pub fn is_integer(r: &Rat) -> bool {
    r.is_integer()
}

/// Canonical `numer/denom` form, denominator always present ("5/1", "-1/3").
pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses "p/q", "p" or "-p/q".
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: i128 = n.trim().parse().ok()?;
        let d: i128 = d.trim().parse().ok()?;
        if d == 0 {
            return None;
        }
        Some(Ratio::new(n, d))
    } else {
        let n: i128 = s.parse().ok()?;
        Some(Ratio::from_integer(n))
    }
}

pub fn lcm_i128(a: i128, b: i128) -> i128 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd_i128(a, b) * b).abs()
}

pub fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Least `n > 0` with `n * r` integral, i.e. the order of `r` in Q/Z.
pub fn denominator_order(r: &Rat) -> i128 {
    if r.is_zero() {
        1
    } else {
        *r.denom()
    }
}
