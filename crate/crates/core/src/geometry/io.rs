//! Point-set text format: one `X Y` pair per data line, each coordinate an
//! integer or `num/den`; blank lines and lines starting with `#` are skipped.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Point, PointSet, Rational};
use crate::error::{Error, Result};

fn parse_coordinate(token: &str, line: usize) -> Result<Rational> {
    let bad = || Error::parse(line, format!("bad coordinate `{token}`"));
    let digits = |s: &str, signed: bool| {
        let body = if signed { s.strip_prefix('-').unwrap_or(s) } else { s };
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    match token.split_once('/') {
        None if digits(token, true) => Ok(Rational::from_integer(token.parse().map_err(|_| bad())?)),
        Some((num, den)) if digits(num, true) && digits(den, false) => {
            let num: BigInt = num.parse().map_err(|_| bad())?;
            let den: BigInt = den.parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(Error::parse(line, format!("zero denominator in `{token}`")));
            }
            Ok(Rational::new(num, den))
        }
        _ => Err(bad()),
    }
}

pub fn parse_point_set(text: &str) -> Result<PointSet> {
    let mut points = Vec::new();
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = idx + 1;
        let mut tokens = line.split_whitespace();
        let (Some(x), Some(y), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(Error::parse(lineno, format!("expected `X Y`, got `{line}`")));
        };
        points.push(Point::new(parse_coordinate(x, lineno)?, parse_coordinate(y, lineno)?));
        lines.push(lineno);
    }
    PointSet::new(points).map_err(|e| match e {
        Error::DuplicatePoints { first, second } => Error::parse(
            lines[second],
            format!("duplicate point: data lines {} and {} coincide", lines[first], lines[second]),
        ),
        other => other,
    })
}

fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn format_point_set(ps: &PointSet) -> String {
    let mut out = String::new();
    for p in ps.points() {
        let _ = writeln!(out, "{} {}", format_rational(&p.x), format_rational(&p.y));
    }
    out
}
