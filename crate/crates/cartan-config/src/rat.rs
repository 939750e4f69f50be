//! Exact rational scalars and their `"num/den"` text form.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The ground ring: arbitrary-precision exact rationals.
pub type Rat = num_rational::BigRational;

/// Build a rational from a numerator/denominator pair of machine integers.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Build a rational from an integer.
pub fn rat_int(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}

/// Render a rational in the `"num/den"` lowest-terms form used by config and
/// report files. Integers render without the `/1` suffix.
pub fn rat_to_string(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parse a rational from `"num/den"` or plain `"num"` text.
pub fn rat_from_str(text: &str) -> Result<Rat, String> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| format!("bad rational numerator {num:?}"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| format!("bad rational denominator {den:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in rational {text:?}"));
    }
    Ok(Rat::new(num, den))
}

/// `true` if the rational is negative (used by renderers).
pub fn rat_is_negative(q: &Rat) -> bool {
    q.is_negative()
}
