//! Flag-value parsing and JSON rendering.
//!
//! Every rational crosses the boundary as an exact string, `"p/q"` or plain
//! `"p"` when the denominator is one; quadratic numbers as
//! `{"a": "p/q", "b": "p/q", "D": n}`; characters as `{"v": [four strings]}`.
//! Parse failures carry the byte offset of the offending character so shell
//! users can locate typos inside composite values like `"1,1,1/2,1/6"`.

use core::fmt;

use fanotilt_core::{Binding, CharVec, Quad, QuadCharVec, Rat, Wall, WallGroup, WallScanReport};
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};

/// A rejected flag value: `offset` is the byte position inside the value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError { offset, message: message.into() }
}

/// Validates and parses a (signed) decimal integer, reporting the position
/// of the first bad byte relative to `base`.
fn parse_int(s: &str, base: usize) -> Result<BigInt, ParseError> {
    if s.is_empty() {
        return Err(err(base, "empty number"));
    }
    let bytes = s.as_bytes();
    let start = usize::from(bytes[0] == b'-' || bytes[0] == b'+');
    if start == bytes.len() {
        return Err(err(base, "sign without digits"));
    }
    for (i, b) in bytes.iter().enumerate().skip(start) {
        if !b.is_ascii_digit() {
            return Err(err(base + i, format!("invalid character '{}' in number", *b as char)));
        }
    }
    Ok(s.parse::<BigInt>().expect("digits validated above"))
}

/// Parses `"p"` or `"p/q"` with `q` a positive integer.
pub fn parse_rat(s: &str) -> Result<Rat, ParseError> {
    parse_rat_at(s, 0)
}

fn parse_rat_at(s: &str, base: usize) -> Result<Rat, ParseError> {
    match s.find('/') {
        None => Ok(Rat::from_integer(parse_int(s, base)?)),
        Some(i) => {
            let numer = parse_int(&s[..i], base)?;
            let denom_off = base + i + 1;
            let denom = parse_int(&s[i + 1..], denom_off)?;
            if !denom.is_positive() {
                return Err(err(denom_off, "denominator must be a positive integer"));
            }
            Ok(Rat::new(numer, denom))
        }
    }
}

/// Splits a comma-separated value into exactly `expected` entries, keeping
/// each entry's byte offset in the original string.
fn split_entries<'a>(
    s: &'a str,
    expected: usize,
    what: &str,
) -> Result<Vec<(usize, &'a str)>, ParseError> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, b) in s.bytes().enumerate() {
        if b == b',' {
            out.push((start, &s[start..i]));
            start = i + 1;
        }
    }
    out.push((start, &s[start..]));
    if out.len() != expected {
        return Err(err(0, format!("expected {expected} comma-separated {what}, found {}", out.len())));
    }
    Ok(out)
}

/// Parses a character `"e0,e1,e2,e3"` of rational strings.
pub fn parse_char(s: &str) -> Result<CharVec, ParseError> {
    let parts = split_entries(s, 4, "character entries")?;
    let mut vals = parts.into_iter().map(|(off, part)| parse_rat_at(part, off));
    Ok(CharVec::new(
        vals.next().unwrap()?,
        vals.next().unwrap()?,
        vals.next().unwrap()?,
        vals.next().unwrap()?,
    ))
}

/// Parses a projective plane point `"p0,p1,p2"`.
pub fn parse_point(s: &str) -> Result<[Rat; 3], ParseError> {
    let parts = split_entries(s, 3, "point coordinates")?;
    let mut vals = parts.into_iter().map(|(off, part)| parse_rat_at(part, off));
    Ok([vals.next().unwrap()?, vals.next().unwrap()?, vals.next().unwrap()?])
}

/// Parses a candidate lattice `"n0,n1,n2,n3"` of positive integers.
pub fn parse_lattice(s: &str) -> Result<[u64; 4], ParseError> {
    let parts = split_entries(s, 4, "lattice denominators")?;
    let mut out = [0u64; 4];
    for (slot, (off, part)) in out.iter_mut().zip(parts) {
        let n = parse_int(part, off)?;
        if !n.is_positive() {
            return Err(err(off, "lattice denominator must be a positive integer"));
        }
        *slot = u64::try_from(&n).map_err(|_| err(off, "lattice denominator too large"))?;
    }
    Ok(out)
}

/// Exact string form of a rational: `"p"` or `"p/q"`.
pub fn rat_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_value(r: &Rat) -> Value {
    Value::String(rat_string(r))
}

pub fn quad_value(q: &Quad) -> Value {
    json!({
        "a": rat_string(q.rational_part()),
        "b": rat_string(q.radical_part()),
        "D": q.radicand(),
    })
}

pub fn char_value(v: &CharVec) -> Value {
    json!({ "v": [rat_string(&v.e0), rat_string(&v.e1), rat_string(&v.e2), rat_string(&v.e3)] })
}

pub fn quad_char_value(v: &QuadCharVec) -> Value {
    json!({ "v": [quad_value(&v.e0), quad_value(&v.e1), quad_value(&v.e2), quad_value(&v.e3)] })
}

/// `"parabola"` or `"tangent:k"`.
pub fn binding_string(b: &Binding) -> String {
    match b {
        Binding::Parabola => "parabola".to_string(),
        Binding::Tangent(k) => format!("tangent:{k}"),
    }
}

/// Wall locus without its candidate list: `kind` plus the defining numbers.
pub fn wall_value(w: &Wall) -> Value {
    match w {
        Wall::Semicircle { center, radius2 } => json!({
            "kind": "semicircle",
            "center": rat_string(center),
            "radius2": rat_string(radius2),
        }),
        Wall::Vertical { at } => json!({ "kind": "vertical", "at": rat_string(at) }),
    }
}

pub fn wall_group_value(g: &WallGroup) -> Value {
    let mut v = wall_value(&g.wall);
    let candidates: Vec<Value> = g.candidates.iter().map(char_value).collect();
    v.as_object_mut().expect("wall_value is an object").insert("candidates".into(), json!(candidates));
    v
}

pub fn scan_value(report: &WallScanReport) -> Value {
    json!({
        "target": char_value(&report.target),
        "lattice": report.lattice,
        "max_rank": report.max_rank,
        "walls": report.walls.iter().map(wall_group_value).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use fanotilt_core::{rat, rat_int};

    #[test]
    fn rational_round_trip() {
        for (s, n, d) in [("4", 4, 1), ("-7/3", -7, 3), ("0", 0, 1), ("10/4", 5, 2)] {
            let r = parse_rat(s).unwrap();
            assert_eq!(r, rat(n, d));
            assert_eq!(parse_rat(&rat_string(&r)).unwrap(), r);
        }
        assert_eq!(rat_string(&rat(5, 2)), "5/2");
        assert_eq!(rat_string(&rat_int(-3)), "-3");
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!(parse_rat("1/x").unwrap_err().offset, 2);
        assert_eq!(parse_rat("ab").unwrap_err().offset, 0);
        assert_eq!(parse_rat("1/-2").unwrap_err().offset, 2);
        assert_eq!(parse_rat("1/0").unwrap_err().offset, 2);
        assert_eq!(parse_rat("").unwrap_err().offset, 0);
        // The third entry starts at byte 4; its bad byte is at 4 + 1.
        let e = parse_char("1,1,x/2,0").unwrap_err();
        assert_eq!(e.offset, 4);
        let e = parse_char("1,1,1/y,0").unwrap_err();
        assert_eq!(e.offset, 6);
        assert!(parse_char("1,2,3").unwrap_err().message.contains("expected 4"));
        assert_eq!(parse_lattice("1,1,0,6").unwrap_err().offset, 4);
    }

    #[test]
    fn character_and_point_parsing() {
        let v = parse_char("1,1,1/2,1/6").unwrap();
        assert_eq!(v, CharVec::new(rat_int(1), rat_int(1), rat(1, 2), rat(1, 6)));
        let p = parse_point("1,1/2,1/8").unwrap();
        assert_eq!(p, [rat_int(1), rat(1, 2), rat(1, 8)]);
        assert_eq!(parse_lattice("1,1,2,6").unwrap(), [1, 1, 2, 6]);
    }

    #[test]
    fn json_values_are_exact_strings() {
        let v = parse_char("1,1,1/2,1/6").unwrap();
        assert_eq!(char_value(&v).to_string(), r#"{"v":["1","1","1/2","1/6"]}"#);
        let q = Quad::new(rat(-1, 2), rat(13, 24), 3).unwrap();
        let jv = quad_value(&q);
        assert_eq!(jv["a"], "-1/2");
        assert_eq!(jv["b"], "13/24");
        assert_eq!(jv["D"], 3);
        let wall = Wall::Semicircle { center: rat(3, 2), radius2: rat(1, 4) };
        assert_eq!(
            wall_value(&wall).to_string(),
            r#"{"center":"3/2","kind":"semicircle","radius2":"1/4"}"#
        );
    }
}
