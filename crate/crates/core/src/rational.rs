use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub(crate) fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub(crate) fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// `3`, `-1/2`, ... (no parentheses).
pub fn render_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses `a` or `a/b`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Renders `coeff * body` as one signed term of a sum. The returned pair is the
/// sign and the unsigned term text; `body` is empty for constants.
pub(crate) fn signed_term(coeff: &Rational, body: &str) -> (bool, String) {
    let negative = coeff.is_negative();
    let magnitude = coeff.abs();
    let text = if body.is_empty() {
        render_rational(&magnitude)
    } else if magnitude.is_one() {
        body.to_string()
    } else if magnitude.is_integer() {
        format!("{}*{}", render_rational(&magnitude), body)
    } else {
        format!("({})*{}", render_rational(&magnitude), body)
    };
    (negative, text)
}

pub(crate) fn join_terms<I>(terms: I) -> String
where
    I: IntoIterator<Item = (bool, String)>,
{
    let mut out = String::new();
    for (k, (negative, text)) in terms.into_iter().enumerate() {
        match (k, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&text);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
