//! Shared text formatting for linear combinations.
//!
//! Terms are written as `c` juxtaposed with the basis label (`2R[1,2,1]`), unit coefficients
//! are omitted and non-integer coefficients are parenthesised (`(1/2)S[2]`). A combination whose
//! coefficients are all negative is printed with the sign factored out: `-(R[1,3] + 2R[1,2,1])`.

use std::fmt::{self, Write};

use num_traits::{One, Signed, Zero};

use crate::ring::Rational;

pub(crate) fn write_coefficient(
    f: &mut impl Write,
    c: &Rational,
    first: bool,
    has_body: bool,
) -> fmt::Result {
    let negative = c.is_negative();
    let a = c.abs();
    match (first, negative) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    if !has_body {
        return write!(f, "{a}");
    }
    if a.is_one() {
        Ok(())
    } else if a.is_integer() {
        write!(f, "{a}")
    } else {
        write!(f, "({a})")
    }
}

/// Formats `Σ c_i label_i` in the given order.
pub fn linear_combination<'a>(terms: impl IntoIterator<Item = (String, &'a Rational)>) -> String {
    let terms: Vec<(String, &Rational)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    let all_negative = terms.len() > 1 && terms.iter().all(|(_, c)| c.is_negative());
    let mut out = String::new();
    if all_negative {
        out.push_str("-(");
    }
    for (i, (label, c)) in terms.iter().enumerate() {
        let c = if all_negative { -(*c).clone() } else { (*c).clone() };
        let has_body = !label.is_empty();
        write_coefficient(&mut out, &c, i == 0, has_body).expect("writing to a String");
        out.push_str(label);
    }
    if all_negative {
        out.push(')');
    }
    out
}

pub(crate) fn join_usize(parts: &[usize], sep: &str) -> String {
    parts.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};

    #[test]
    fn factored_negative_sign() {
        let a = int(-1);
        let b = int(-2);
        let s = linear_combination(vec![("R[1,3]".to_string(), &a), ("R[1,2,1]".to_string(), &b)]);
        assert_eq!(s, "-(R[1,3] + 2R[1,2,1])");
    }

    #[test]
    fn mixed_signs_and_fractions() {
        let a = int(1);
        let b = rat(-1, 2);
        let c = int(3);
        let s = linear_combination(vec![
            ("".to_string(), &a),
            ("S[1]".to_string(), &b),
            ("S[2]".to_string(), &c),
        ]);
        assert_eq!(s, "1 - (1/2)S[1] + 3S[2]");
    }
}
