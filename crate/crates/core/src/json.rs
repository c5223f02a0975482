//! Stable JSON encoding. Object keys come out sorted because `serde_json`
//! maps are ordered; integers that do not fit in 64 bits become strings.

use num_traits::ToPrimitive;
use serde_json::Value;

use crate::algebra::{rational_to_string, ChowClass, Integer, Poly, Rational};

pub fn integer(v: &Integer) -> Value {
    match v.to_i64() {
        Some(x) => Value::from(x),
        None => Value::String(v.to_string()),
    }
}

pub fn integers(v: &[Integer]) -> Value {
    Value::Array(v.iter().map(integer).collect())
}

/// Integral rationals as integers, anything else as `"p/q"`.
pub fn rational(q: &Rational) -> Value {
    if q.is_integer() {
        integer(q.numer())
    } else {
        Value::String(rational_to_string(q))
    }
}

pub fn poly(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(rational).collect())
}

pub fn chow(c: &ChowClass) -> Value {
    Value::Array(c.coeffs().iter().map(|q| Value::String(rational_to_string(q))).collect())
}

/// Rows of integers, every entry as a decimal string.
pub fn matrix(rows: &[Vec<Integer>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| Value::Array(row.iter().map(|x| Value::String(x.to_string())).collect()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use serde_json::json;

    #[test]
    fn big_integers_become_strings() {
        assert_eq!(integer(&int(42)), json!(42));
        let big: Integer = int(1) << 70;
        assert_eq!(integer(&big), json!("1180591620717411303424"));
        assert_eq!(rational(&rat(6, 3)), json!(2));
        assert_eq!(rational(&rat(-1, 2)), json!("-1/2"));
    }

    #[test]
    fn keys_are_sorted() {
        let v = json!({"zeta": 1, "alpha": 2});
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"alpha":2,"zeta":1}"#);
    }
}
