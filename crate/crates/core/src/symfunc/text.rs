//! Literal syntax (`s[2,1] + 2 m[1,1,1]`) and the JSON form.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{BasisTag, SymError, SymFunc, SymResult};
use crate::combinatorics::Partition;
use crate::scalar::{fmt_scalar, parse_scalar, Scalar};

pub(super) fn render(f: &SymFunc) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let letter = f.basis().letter();
    let mut out = String::new();
    for (i, (lam, c)) in f.terms().iter().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        if !abs.is_one() {
            out.push_str(&fmt_scalar(&abs));
            out.push(' ');
        }
        out.push(letter);
        out.push_str(&lam.to_string());
    }
    out
}

/// Deterministic text of `f` in the monomial basis.
pub fn to_monomial_text(f: &SymFunc) -> String {
    render(&f.to_basis(BasisTag::Monomial))
}

pub(super) fn parse(s: &str) -> SymResult<SymFunc> {
    let s = s.trim();
    if s.is_empty() {
        return Err(SymError::Parse("empty symmetric function literal".into()));
    }
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    let mut negative = false;
    let mut sign_seen = false;
    for ch in s.chars() {
        match ch {
            '[' => {
                depth += 1;
                current.push(ch);
            }
            ']' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| SymError::Parse(format!("unbalanced ']' in {s:?}")))?;
                current.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if !current.trim().is_empty() {
                    pieces.push((negative, std::mem::take(&mut current)));
                } else if sign_seen || !pieces.is_empty() {
                    return Err(SymError::Parse(format!("dangling sign in {s:?}")));
                }
                negative = ch == '-';
                sign_seen = true;
                current.clear();
            }
            _ => current.push(ch),
        }
    }
    if depth != 0 {
        return Err(SymError::Parse(format!("unbalanced '[' in {s:?}")));
    }
    if current.trim().is_empty() {
        return Err(SymError::Parse(format!("literal ends with a sign: {s:?}")));
    }
    pieces.push((negative, current));

    let mut parsed = Vec::with_capacity(pieces.len());
    for (neg, piece) in &pieces {
        let (basis, lam, mut c) = parse_term(piece.trim())?;
        if *neg {
            c = -c;
        }
        parsed.push((basis, lam, c));
    }
    let basis = parsed
        .iter()
        .find_map(|(b, _, _)| *b)
        .unwrap_or(BasisTag::Monomial);
    let mut acc = SymFunc::zero(basis);
    for (b, lam, c) in parsed {
        let term = SymFunc::from_rational(b.unwrap_or(basis), BTreeMap::from([(lam, c)]));
        acc = acc.add(&term);
    }
    acc.check_integral()?;
    Ok(acc)
}

/// `[coeff] basis[parts]`, or a bare scalar meaning a multiple of 1.
fn parse_term(t: &str) -> SymResult<(Option<BasisTag>, Partition, Scalar)> {
    let Some(pos) = t.find('[') else {
        let c = parse_scalar(t).ok_or_else(|| SymError::Parse(format!("bad term {t:?}")))?;
        return Ok((None, Partition::empty(), c));
    };
    let head = t[..pos].trim_end();
    let letter = head
        .chars()
        .last()
        .ok_or_else(|| SymError::Parse(format!("missing basis letter in {t:?}")))?;
    let basis = BasisTag::from_letter(letter)
        .ok_or_else(|| SymError::Parse(format!("unknown basis letter {letter:?} in {t:?}")))?;
    let coeff_text = head[..head.len() - letter.len_utf8()].trim().trim_end_matches('*').trim();
    let c = if coeff_text.is_empty() {
        Scalar::one()
    } else {
        parse_scalar(coeff_text).ok_or_else(|| SymError::Parse(format!("bad coefficient {coeff_text:?}")))?
    };
    let lam = Partition::from_str(&t[pos..]).map_err(|e| SymError::Parse(e.to_string()))?;
    Ok((Some(basis), lam, c))
}

#[derive(Serialize, Deserialize)]
struct JsonForm {
    basis: BasisTag,
    terms: Vec<JsonTerm>,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    partition: Partition,
    num: Value,
    den: Value,
}

fn int_to_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => Value::from(x),
        None => Value::from(v.to_string()),
    }
}

fn int_from_json(v: &Value) -> SymResult<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| SymError::Parse(format!("non-integer number {n}"))),
        Value::String(s) => BigInt::from_str(s).map_err(|e| SymError::Parse(e.to_string())),
        other => Err(SymError::Parse(format!("expected an integer, got {other}"))),
    }
}

/// `{basis, terms: [{partition, num, den}]}`; big values are strings.
pub fn to_json(f: &SymFunc) -> Value {
    let form = JsonForm {
        basis: f.basis(),
        terms: f
            .terms()
            .iter()
            .map(|(p, c)| JsonTerm {
                partition: p.clone(),
                num: int_to_json(c.numer()),
                den: int_to_json(c.denom()),
            })
            .collect(),
    };
    serde_json::to_value(form).expect("symmetric function JSON is always serializable")
}

pub fn from_json(v: &Value) -> SymResult<SymFunc> {
    let form: JsonForm = serde_json::from_value(v.clone()).map_err(|e| SymError::Parse(e.to_string()))?;
    let mut coeffs = BTreeMap::new();
    for t in form.terms {
        let den = int_from_json(&t.den)?;
        if den.is_zero() {
            return Err(SymError::Parse("zero denominator".into()));
        }
        let c = Scalar::new(int_from_json(&t.num)?, den);
        *coeffs.entry(t.partition).or_insert_with(Scalar::zero) += c;
    }
    SymFunc::new(form.basis, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn parse_and_render() {
        let f: SymFunc = "s[2,1] + 2 m[1,1,1]".parse().unwrap();
        assert_eq!(f.basis(), BasisTag::Schur);
        assert_eq!(f, SymFunc::s(&[2, 1]).add(&SymFunc::m(&[1, 1, 1]).scale(&rat(2, 1))));
        assert!("h[2] - 1/2 h[]".parse::<SymFunc>().is_err());
        assert_eq!("5 + 2 h[2]".parse::<SymFunc>().unwrap().coeff(&Partition::empty()), rat(5, 1));
        let h: SymFunc = "-h[2] + 3 h[1,1]".parse().unwrap();
        assert_eq!(h.to_string(), "-h[2] + 3 h[1,1]");
        assert_eq!(h.to_string().parse::<SymFunc>().unwrap(), h);
        assert_eq!("0".parse::<SymFunc>().unwrap(), SymFunc::zero(BasisTag::Monomial));
        assert_eq!(SymFunc::zero(BasisTag::Schur).to_string(), "0");
        let q: SymFunc = "1/2 p[1,1] - 1/2 p[2]".parse().unwrap();
        assert_eq!(q, SymFunc::e(&[2]));
        assert!("2 x[1]".parse::<SymFunc>().is_err());
        assert!("s[2,1] +".parse::<SymFunc>().is_err());
        assert!("s[1,2]".parse::<SymFunc>().is_err());
    }

    #[test]
    fn monomial_text_is_canonical() {
        assert_eq!(to_monomial_text(&SymFunc::h(&[2])), "m[2] + m[1,1]");
        assert_eq!(to_monomial_text(&SymFunc::e(&[2])), "m[1,1]");
    }

    #[test]
    fn json_round_trip() {
        let f: SymFunc = "s[2,1] - 3 s[1,1,1]".parse().unwrap();
        let j = to_json(&f);
        assert_eq!(j["basis"], "schur");
        assert_eq!(from_json(&j).unwrap().terms(), f.terms());
        let q: SymFunc = "1/3 p[3]".parse().unwrap();
        assert_eq!(from_json(&to_json(&q)).unwrap().terms(), q.terms());
    }
}
