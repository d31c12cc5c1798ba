//! Lexical-space checks and value comparison for the XSD datatypes that
//! SPARQL 1.1 operates on.

use std::cmp::Ordering;
use std::sync::OnceLock;

use regex::Regex;

use crate::term::{Literal, Term};
use crate::vocab::xsd;

fn re(cell: &'static OnceLock<Regex>, pat: &str) -> &'static Regex {
    cell.get_or_init(|| Regex::new(pat).expect("static regex"))
}

macro_rules! static_re {
    ($name:ident, $pat:expr) => {
        fn $name() -> &'static Regex {
            static CELL: OnceLock<Regex> = OnceLock::new();
            re(&CELL, $pat)
        }
    };
}

static_re!(integer_re, r"^[+-]?[0-9]+$");
static_re!(decimal_re, r"^[+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)$");
static_re!(
    double_re,
    r"^([+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)([Ee][+-]?[0-9]+)?|[+-]?INF|NaN)$"
);
static_re!(tz_re, r"^(Z|[+-](\d\d):(\d\d))?$");
static_re!(year_re, r"^(-?(?:[1-9][0-9]{4,}|[0-9]{4}))");
static_re!(
    duration_re,
    r"^-?P(?:([0-9]+)Y)?(?:([0-9]+)M)?(?:([0-9]+)D)?(?:(T)(?:([0-9]+)H)?(?:([0-9]+)M)?(?:([0-9]+(?:\.[0-9]+)?)S)?)?$"
);
static_re!(time_re, r"^(\d\d):(\d\d):(\d\d)(\.\d+)?");

/// The set of datatypes with a checked lexical space.
pub fn is_supported(datatype: &str) -> bool {
    kind(datatype).is_some()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Kind {
    String,
    Boolean,
    Decimal,
    Integer { min: Option<i128>, max: Option<i128> },
    Double,
    Date,
    DateTime { tz_required: bool },
    Time,
    Duration,
    DayTimeDuration,
    YearMonthDuration,
    GYear,
    GYearMonth,
    GMonth,
    GDay,
    GMonthDay,
    HexBinary,
    Base64Binary,
    AnyUri,
}

fn kind(dt: &str) -> Option<Kind> {
    let local = dt.strip_prefix(xsd::NS)?;
    let int = |min: Option<i128>, max: Option<i128>| Kind::Integer { min, max };
    Some(match local {
        "string" => Kind::String,
        "boolean" => Kind::Boolean,
        "decimal" => Kind::Decimal,
        "integer" => int(None, None),
        "nonPositiveInteger" => int(None, Some(0)),
        "negativeInteger" => int(None, Some(-1)),
        "nonNegativeInteger" => int(Some(0), None),
        "positiveInteger" => int(Some(1), None),
        "long" => int(Some(i64::MIN as i128), Some(i64::MAX as i128)),
        "int" => int(Some(i32::MIN as i128), Some(i32::MAX as i128)),
        "short" => int(Some(i16::MIN as i128), Some(i16::MAX as i128)),
        "byte" => int(Some(i8::MIN as i128), Some(i8::MAX as i128)),
        "unsignedLong" => int(Some(0), Some(u64::MAX as i128)),
        "unsignedInt" => int(Some(0), Some(u32::MAX as i128)),
        "unsignedShort" => int(Some(0), Some(u16::MAX as i128)),
        "unsignedByte" => int(Some(0), Some(u8::MAX as i128)),
        "double" | "float" => Kind::Double,
        "date" => Kind::Date,
        "dateTime" => Kind::DateTime { tz_required: false },
        "dateTimeStamp" => Kind::DateTime { tz_required: true },
        "time" => Kind::Time,
        "duration" => Kind::Duration,
        "dayTimeDuration" => Kind::DayTimeDuration,
        "yearMonthDuration" => Kind::YearMonthDuration,
        "gYear" => Kind::GYear,
        "gYearMonth" => Kind::GYearMonth,
        "gMonth" => Kind::GMonth,
        "gDay" => Kind::GDay,
        "gMonthDay" => Kind::GMonthDay,
        "hexBinary" => Kind::HexBinary,
        "base64Binary" => Kind::Base64Binary,
        "anyURI" => Kind::AnyUri,
        _ => return None,
    })
}

/// True iff `t` is a literal of a supported XSD datatype whose lexical form
/// is outside that datatype's lexical space. Unknown datatypes and
/// non-literals are never ill-typed.
pub fn literal_is_ill_typed(t: &Term) -> bool {
    match t {
        Term::Literal(l) => !lexical_ok(l.datatype().as_str(), l.lexical()),
        _ => false,
    }
}

/// Checks a lexical form against a datatype. Unknown datatypes pass.
pub fn lexical_ok(datatype: &str, lex: &str) -> bool {
    let Some(k) = kind(datatype) else {
        return true;
    };
    match k {
        Kind::String => lex.chars().all(is_xml_char),
        Kind::Boolean => matches!(lex, "true" | "false" | "1" | "0"),
        Kind::Decimal => decimal_re().is_match(lex),
        Kind::Integer { min, max } => {
            if !integer_re().is_match(lex) {
                return false;
            }
            match lex.parse::<i128>() {
                Ok(v) => min.is_none_or(|m| v >= m) && max.is_none_or(|m| v <= m),
                // beyond i128: only the unbounded direction is acceptable
                Err(_) => {
                    let neg = lex.starts_with('-');
                    if neg {
                        min.is_none()
                    } else {
                        max.is_none()
                    }
                }
            }
        }
        Kind::Double => double_re().is_match(lex),
        Kind::Date => parse_date(lex).is_some(),
        Kind::DateTime { tz_required } => parse_date_time(lex).is_some_and(|d| !tz_required || d.tz.is_some()),
        Kind::Time => parse_time(lex).is_some(),
        Kind::Duration => duration_ok(lex, true, true),
        Kind::DayTimeDuration => duration_ok(lex, false, true),
        Kind::YearMonthDuration => duration_ok(lex, true, false),
        Kind::GYear => {
            let Some((y, rest)) = year_prefix(lex) else { return false };
            let _ = y;
            tz_ok(rest).is_some()
        }
        Kind::GYearMonth => {
            let Some((_, rest)) = year_prefix(lex) else { return false };
            let Some(rest) = rest.strip_prefix('-') else { return false };
            month_prefix(rest).and_then(|(_, r)| tz_ok(r)).is_some()
        }
        Kind::GMonth => lex
            .strip_prefix("--")
            .and_then(month_prefix)
            .and_then(|(_, r)| tz_ok(r))
            .is_some(),
        Kind::GDay => lex
            .strip_prefix("---")
            .and_then(two_digits)
            .filter(|(d, _)| (1..=31).contains(d))
            .and_then(|(_, r)| tz_ok(r))
            .is_some(),
        Kind::GMonthDay => {
            let Some((m, r)) = lex.strip_prefix("--").and_then(month_prefix) else { return false };
            let Some((d, r)) = r.strip_prefix('-').and_then(two_digits) else { return false };
            // Feb 29 is allowed: no year to check against
            d >= 1 && d <= days_in_month(2000, m) && tz_ok(r).is_some()
        }
        Kind::HexBinary => lex.len().is_multiple_of(2) && lex.bytes().all(|b| b.is_ascii_hexdigit()),
        Kind::Base64Binary => base64_ok(lex),
        Kind::AnyUri => lex.chars().all(is_xml_char),
    }
}

fn is_xml_char(c: char) -> bool {
    matches!(c, '\t' | '\n' | '\r' | '\u{20}'..='\u{D7FF}' | '\u{E000}'..='\u{FFFD}' | '\u{10000}'..='\u{10FFFF}')
}

fn base64_ok(lex: &str) -> bool {
    let s: Vec<u8> = lex.bytes().filter(|b| *b != b' ').collect();
    if !s.len().is_multiple_of(4) {
        return false;
    }
    let pad = s.iter().rev().take_while(|b| **b == b'=').count();
    if pad > 2 {
        return false;
    }
    let body = &s[..s.len() - pad];
    let is_b64 = |b: u8| b.is_ascii_alphanumeric() || b == b'+' || b == b'/';
    if !body.iter().all(|b| is_b64(*b)) {
        return false;
    }
    match (pad, body.last()) {
        (1, Some(c)) => b"AEIMQUYcgkosw048".contains(c),
        (2, Some(c)) => b"AQgw".contains(c),
        _ => true,
    }
}

fn two_digits(s: &str) -> Option<(u32, &str)> {
    let b = s.as_bytes();
    if b.len() >= 2 && b[0].is_ascii_digit() && b[1].is_ascii_digit() {
        Some((((b[0] - b'0') * 10 + (b[1] - b'0')) as u32, &s[2..]))
    } else {
        None
    }
}

fn month_prefix(s: &str) -> Option<(u32, &str)> {
    two_digits(s).filter(|(m, _)| (1..=12).contains(m))
}

fn year_prefix(s: &str) -> Option<(i64, &str)> {
    let m = year_re().find(s)?;
    let y = m.as_str().parse::<i64>().ok()?;
    Some((y, &s[m.end()..]))
}

/// Parses an optional timezone suffix; returns offset in minutes.
fn tz_ok(s: &str) -> Option<Option<i32>> {
    let c = tz_re().captures(s)?;
    if s.is_empty() {
        return Some(None);
    }
    if s == "Z" {
        return Some(Some(0));
    }
    let h: i32 = c[2].parse().ok()?;
    let m: i32 = c[3].parse().ok()?;
    if m > 59 || h > 14 || (h == 14 && m != 0) {
        return None;
    }
    let sign = if s.starts_with('-') { -1 } else { 1 };
    Some(Some(sign * (h * 60 + m)))
}

fn is_leap(y: i64) -> bool {
    y.rem_euclid(4) == 0 && (y.rem_euclid(100) != 0 || y.rem_euclid(400) == 0)
}

fn days_in_month(y: i64, m: u32) -> u32 {
    match m {
        1 | 3 | 5 | 7 | 8 | 10 | 12 => 31,
        4 | 6 | 9 | 11 => 30,
        2 if is_leap(y) => 29,
        2 => 28,
        _ => 0,
    }
}

#[derive(Debug, Clone, Copy)]
struct DateParts {
    year: i64,
    month: u32,
    day: u32,
}

fn parse_ymd(s: &str) -> Option<(DateParts, &str)> {
    let (year, r) = year_prefix(s)?;
    let (month, r) = r.strip_prefix('-').and_then(month_prefix)?;
    let (day, r) = r.strip_prefix('-').and_then(two_digits)?;
    if day < 1 || day > days_in_month(year, month) {
        return None;
    }
    Some((DateParts { year, month, day }, r))
}

#[derive(Debug, Clone, Copy)]
struct Stamp {
    /// seconds since 0000-01-01T00:00:00 local, plus fractional nanos
    secs: i128,
    nanos: u32,
    tz: Option<i32>,
}

fn days_from_civil(y: i64, m: u32, d: u32) -> i64 {
    let y = if m <= 2 { y - 1 } else { y };
    let era = y.div_euclid(400);
    let yoe = y - era * 400;
    let m = m as i64;
    let doy = (153 * (if m > 2 { m - 3 } else { m + 9 }) + 2) / 5 + d as i64 - 1;
    let doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    era * 146097 + doe
}

fn parse_clock(s: &str) -> Option<(i128, u32, &str)> {
    let c = time_re().captures(s)?;
    let end = c.get(0).unwrap().end();
    let h: i128 = c[1].parse().ok()?;
    let mi: i128 = c[2].parse().ok()?;
    let se: i128 = c[3].parse().ok()?;
    let frac = c.get(4).map_or("", |m| &m.as_str()[1..]);
    let nanos: u32 = if frac.is_empty() {
        0
    } else {
        let mut f = frac.chars().take(9).collect::<String>();
        while f.len() < 9 {
            f.push('0');
        }
        f.parse().ok()?
    };
    if h == 24 {
        if mi != 0 || se != 0 || nanos != 0 {
            return None;
        }
    } else if h > 23 || mi > 59 || se > 59 {
        return None;
    }
    Some((h * 3600 + mi * 60 + se, nanos, &s[end..]))
}

fn parse_date(s: &str) -> Option<Stamp> {
    let (d, r) = parse_ymd(s)?;
    let tz = tz_ok(r)?;
    Some(Stamp {
        secs: days_from_civil(d.year, d.month, d.day) as i128 * 86400,
        nanos: 0,
        tz,
    })
}

fn parse_date_time(s: &str) -> Option<Stamp> {
    let (d, r) = parse_ymd(s)?;
    let r = r.strip_prefix('T')?;
    let (clock, nanos, r) = parse_clock(r)?;
    let tz = tz_ok(r)?;
    Some(Stamp {
        secs: days_from_civil(d.year, d.month, d.day) as i128 * 86400 + clock,
        nanos,
        tz,
    })
}

fn parse_time(s: &str) -> Option<Stamp> {
    let (clock, nanos, r) = parse_clock(s)?;
    let tz = tz_ok(r)?;
    Some(Stamp { secs: clock, nanos, tz })
}

fn duration_ok(s: &str, allow_ym: bool, allow_dt: bool) -> bool {
    let Some(c) = duration_re().captures(s) else {
        return false;
    };
    let has = |i: usize| c.get(i).is_some();
    let ym = has(1) || has(2);
    let day_time = has(3) || has(5) || has(6) || has(7);
    if !ym && !day_time {
        return false;
    }
    // a 'T' must be followed by at least one time component
    if has(4) && !(has(5) || has(6) || has(7)) {
        return false;
    }
    (allow_ym || !ym) && (allow_dt || !day_time)
}

/// Exact decimal: sign, integer digits (no leading zeros), fraction digits
/// (no trailing zeros).
fn parse_decimal(lex: &str) -> Option<(bool, String, String)> {
    if !decimal_re().is_match(lex) {
        return None;
    }
    let neg = lex.starts_with('-');
    let body = lex.trim_start_matches(['+', '-']);
    let (i, f) = body.split_once('.').unwrap_or((body, ""));
    let i = i.trim_start_matches('0').to_string();
    let f = f.trim_end_matches('0').to_string();
    let zero = i.is_empty() && f.is_empty();
    Some((neg && !zero, i, f))
}

fn cmp_decimal(a: &(bool, String, String), b: &(bool, String, String)) -> Ordering {
    let mag = |x: &(bool, String, String), y: &(bool, String, String)| {
        x.1.len()
            .cmp(&y.1.len())
            .then_with(|| x.1.cmp(&y.1))
            .then_with(|| x.2.cmp(&y.2))
    };
    match (a.0, b.0) {
        (false, true) => Ordering::Greater,
        (true, false) => Ordering::Less,
        (false, false) => mag(a, b),
        (true, true) => mag(b, a),
    }
}

fn parse_double(lex: &str) -> Option<f64> {
    if !double_re().is_match(lex) {
        return None;
    }
    match lex {
        "INF" | "+INF" => Some(f64::INFINITY),
        "-INF" => Some(f64::NEG_INFINITY),
        "NaN" => Some(f64::NAN),
        _ => lex.parse().ok(),
    }
}

#[derive(PartialEq)]
enum Family {
    Exact,
    Float,
    Temporal(u8),
    Str,
}

fn family(k: Kind) -> Option<Family> {
    match k {
        Kind::Decimal | Kind::Integer { .. } => Some(Family::Exact),
        Kind::Double => Some(Family::Float),
        Kind::Date => Some(Family::Temporal(0)),
        Kind::DateTime { .. } => Some(Family::Temporal(1)),
        Kind::Time => Some(Family::Temporal(2)),
        Kind::String => Some(Family::Str),
        _ => None,
    }
}

fn stamp(k: Kind, lex: &str) -> Option<Stamp> {
    match k {
        Kind::Date => parse_date(lex),
        Kind::DateTime { .. } => parse_date_time(lex),
        Kind::Time => parse_time(lex),
        _ => None,
    }
}

/// Compares two literals by value. Returns `None` when the values are not
/// comparable: different value spaces, ill-typed forms, NaN, or a timezone
/// present on only one side.
pub fn compare_literals(a: &Literal, b: &Literal) -> Option<Ordering> {
    if a.language().is_some() || b.language().is_some() {
        return None;
    }
    let ka = kind(a.datatype().as_str())?;
    let kb = kind(b.datatype().as_str())?;
    if !lexical_ok(a.datatype().as_str(), a.lexical()) || !lexical_ok(b.datatype().as_str(), b.lexical()) {
        return None;
    }
    let (fa, fb) = (family(ka)?, family(kb)?);
    match (&fa, &fb) {
        (Family::Exact, Family::Exact) => {
            Some(cmp_decimal(&parse_decimal(a.lexical())?, &parse_decimal(b.lexical())?))
        }
        (Family::Exact | Family::Float, Family::Exact | Family::Float) => {
            let x = parse_double(a.lexical())?;
            let y = parse_double(b.lexical())?;
            x.partial_cmp(&y)
        }
        (Family::Temporal(x), Family::Temporal(y)) if x == y => {
            let sa = stamp(ka, a.lexical())?;
            let sb = stamp(kb, b.lexical())?;
            match (sa.tz, sb.tz) {
                (Some(ta), Some(tb)) => {
                    let ua = sa.secs - ta as i128 * 60;
                    let ub = sb.secs - tb as i128 * 60;
                    Some(ua.cmp(&ub).then(sa.nanos.cmp(&sb.nanos)))
                }
                (None, None) => Some(sa.secs.cmp(&sb.secs).then(sa.nanos.cmp(&sb.nanos))),
                _ => None,
            }
        }
        (Family::Str, Family::Str) => Some(a.lexical().cmp(b.lexical())),
        _ => None,
    }
}

/// Compares two terms by value; only literals are comparable.
pub fn compare_terms(a: &Term, b: &Term) -> Option<Ordering> {
    compare_literals(a.as_literal()?, b.as_literal()?)
}
