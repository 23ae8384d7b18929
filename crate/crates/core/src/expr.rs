//! Text and JSON forms of symmetric functions, tensors and cochains.
//!
//! Expressions are sums of `coeff*b[parts]` terms, e.g.
//! `s[2,1] + 3*s[1,1,1] - 1/2*p[2]`. A bare coefficient is a multiple of
//! the unit. Cochains use a small spec language: `series:M`, `counit`,
//! `table:{[2,1]:1, [1]:-1}`, `table:{[1]|[1]:1}`, `schur`, `schur-inv`,
//! `d(...)`, `inv(...)` and `conv(..., ...)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::cohomology::{coboundary, convolve, invert, Cochain};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::series::SeriesId;
use crate::symfunc::{Basis, Cap, Rational, SymFunc, TensorExp};

/// A parsed expression and the partitions that had to be sorted.
#[derive(Clone, Debug, PartialEq)]
pub struct Parsed {
    pub value: SymFunc,
    pub reordered: Vec<Vec<usize>>,
}

impl Parsed {
    pub fn has_warnings(&self) -> bool {
        !self.reordered.is_empty()
    }

    pub fn warnings(&self) -> Vec<String> {
        self.reordered
            .iter()
            .map(|parts| {
                let (p, _) = Partition::from_unsorted(parts.clone());
                format!("partition {parts:?} was not canonical; read as {p}")
            })
            .collect()
    }
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("digits"))
    }

    fn usize(&mut self) -> Result<usize> {
        let start = self.pos;
        let n = self.number()?;
        usize::try_from(n).map_err(|_| Error::Parse {
            position: start,
            message: "part too large".into(),
        })
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '-')
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    /// `[a,b,...]` without canonicalizing.
    fn parts(&mut self) -> Result<Vec<usize>> {
        self.expect('[')?;
        let mut parts = Vec::new();
        if self.eat(']') {
            return Ok(parts);
        }
        loop {
            parts.push(self.usize()?);
            if self.eat(']') {
                return Ok(parts);
            }
            self.expect(',')?;
        }
    }

    fn partition(&mut self, reordered: &mut Vec<Vec<usize>>) -> Result<Partition> {
        let parts = self.parts()?;
        let (p, sorted) = Partition::from_unsorted(parts.clone());
        if sorted {
            reordered.push(parts);
        }
        Ok(p)
    }

    fn coefficient(&mut self) -> Result<Rational> {
        let num = self.number()?;
        if self.eat('/') {
            let den_pos = self.pos;
            let den = self.number()?;
            if den.is_zero() {
                return Err(Error::Parse {
                    position: den_pos,
                    message: "zero denominator".into(),
                });
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }
}

/// Parses an expression, reporting partitions that were not canonical.
pub fn parse_expression_verbose(text: &str) -> Result<Parsed> {
    let mut cur = Cursor::new(text);
    let mut reordered = Vec::new();
    let mut terms: Vec<(Option<Basis>, Partition, Rational)> = Vec::new();
    if cur.at_end() {
        return Err(cur.error("empty expression"));
    }
    let mut first = true;
    loop {
        let mut negative = false;
        if cur.eat('-') {
            negative = true;
        } else if !cur.eat('+') && !first {
            return Err(cur.error("expected `+` or `-`"));
        }
        first = false;
        let mut coeff = Rational::one();
        let mut body = true;
        if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            coeff = cur.coefficient()?;
            body = cur.eat('*');
        }
        if body {
            let pos = {
                cur.skip_ws();
                cur.pos
            };
            let letter = cur.word();
            if letter.is_empty() {
                return Err(cur.error("expected a basis letter"));
            }
            let basis = Basis::from_letter(&letter).map_err(|_| Error::Parse {
                position: pos,
                message: format!("unknown basis `{letter}`"),
            })?;
            let lambda = cur.partition(&mut reordered)?;
            terms.push((Some(basis), lambda, if negative { -coeff } else { coeff }));
        } else {
            terms.push((None, Partition::empty(), if negative { -coeff } else { coeff }));
        }
        if cur.at_end() {
            break;
        }
    }
    let basis = terms.iter().find_map(|t| t.0).unwrap_or(Basis::Schur);
    let mut value = SymFunc::zero(basis);
    for (b, lambda, c) in terms {
        let term = SymFunc::term(b.unwrap_or(basis), lambda, c);
        value = &value + &term;
    }
    Ok(Parsed { value, reordered })
}

/// Parses an expression; non-canonical partitions are sorted silently.
pub fn parse_expression(text: &str) -> Result<SymFunc> {
    parse_expression_verbose(text).map(|p| p.value)
}

/// Parses a bracketed partition such as `[2,1]`, `<2,1>` or `0`.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let t = text.trim();
    let t = match t.strip_prefix('<').and_then(|r| r.strip_suffix('>')) {
        Some(inner) => format!("[{inner}]"),
        None => t.to_string(),
    };
    if t == "[0]" {
        return Ok(Partition::empty());
    }
    t.parse()
}

/// Inverse of [`parse_expression`] on canonical input.
pub fn print_expression(f: &SymFunc) -> String {
    f.to_string()
}

fn coeff_json(c: &Rational) -> Value {
    Value::String(c.to_string())
}

fn parse_coeff(v: &Value) -> Result<Rational> {
    let s = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        _ => return Err(Error::Domain("coefficient must be a string `p/q`".into())),
    };
    let mut cur = Cursor::new(&s);
    let negative = cur.eat('-');
    let c = cur.coefficient()?;
    if !cur.at_end() {
        return Err(cur.error("trailing input in coefficient"));
    }
    Ok(if negative { -c } else { c })
}

fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn parse_partition_json(v: &Value) -> Result<(Partition, bool)> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Domain("partition must be an array".into()))?;
    let parts = arr
        .iter()
        .map(|x| {
            x.as_u64()
                .map(|n| n as usize)
                .ok_or_else(|| Error::Domain("parts must be non-negative integers".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Partition::from_unsorted(parts))
}

/// `{"basis":"s","terms":[{"partition":[2,1],"coeff":"1"}],"cap":null}`.
pub fn symfunc_to_json(f: &SymFunc) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(lambda, c)| json!({"partition": partition_json(lambda), "coeff": coeff_json(c)}))
        .collect();
    let cap = match f.cap() {
        Cap::Exact => Value::Null,
        Cap::Capped(n) => json!(n),
    };
    json!({"basis": f.basis().letter().to_string(), "terms": terms, "cap": cap})
}

/// Reads the JSON form; the second value is true if a partition was sorted.
pub fn symfunc_from_json(v: &Value) -> Result<(SymFunc, bool)> {
    let basis = Basis::from_letter(
        v.get("basis")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Domain("missing `basis`".into()))?,
    )?;
    let mut warned = false;
    let mut out = SymFunc::zero(basis);
    for t in v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Domain("missing `terms`".into()))?
    {
        let (lambda, sorted) = parse_partition_json(
            t.get("partition")
                .ok_or_else(|| Error::Domain("term without `partition`".into()))?,
        )?;
        warned |= sorted;
        out.add_term(
            lambda,
            parse_coeff(
                t.get("coeff")
                    .ok_or_else(|| Error::Domain("term without `coeff`".into()))?,
            )?,
        );
    }
    if let Some(n) = v.get("cap").and_then(Value::as_u64) {
        out = out.with_cap(Cap::Capped(n as usize));
    }
    Ok((out, warned))
}

/// `{"arity":2,"bases":["s","s"],"terms":[{"slots":[[1],[1]],"coeff":"1"}]}`.
pub fn tensor_to_json(t: &TensorExp) -> Value {
    let terms: Vec<Value> = t
        .terms()
        .map(|(slots, c)| {
            json!({
                "slots": slots.iter().map(partition_json).collect::<Vec<_>>(),
                "coeff": coeff_json(c),
            })
        })
        .collect();
    let bases: Vec<String> = t.bases().iter().map(|b| b.letter().to_string()).collect();
    json!({"arity": t.arity(), "bases": bases, "terms": terms})
}

pub fn tensor_from_json(v: &Value) -> Result<TensorExp> {
    let arity = v
        .get("arity")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Domain("missing `arity`".into()))? as usize;
    let bases = match v.get("bases").and_then(Value::as_array) {
        Some(arr) => arr
            .iter()
            .map(|b| Basis::from_letter(b.as_str().unwrap_or("")))
            .collect::<Result<Vec<_>>>()?,
        None => vec![Basis::Schur; arity],
    };
    if bases.len() != arity {
        return Err(Error::ArityMismatch {
            left: arity,
            right: bases.len(),
        });
    }
    let mut out = TensorExp::zero(bases);
    for t in v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Domain("missing `terms`".into()))?
    {
        let slots = t
            .get("slots")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Domain("term without `slots`".into()))?
            .iter()
            .map(|s| parse_partition_json(s).map(|p| p.0))
            .collect::<Result<Vec<_>>>()?;
        if slots.len() != arity {
            return Err(Error::ArityMismatch {
                left: arity,
                right: slots.len(),
            });
        }
        out.add_term(
            slots,
            parse_coeff(
                t.get("coeff")
                    .ok_or_else(|| Error::Domain("term without `coeff`".into()))?,
            )?,
        );
    }
    Ok(out)
}

/// Parses a cochain spec of the given arity.
pub fn parse_cochain(text: &str, arity: usize) -> Result<Cochain> {
    let mut cur = Cursor::new(text);
    let c = cochain_spec(&mut cur, Some(arity))?;
    if !cur.at_end() {
        return Err(cur.error("trailing input"));
    }
    if c.arity() != arity {
        return Err(Error::ArityMismatch {
            left: arity,
            right: c.arity(),
        });
    }
    Ok(c)
}

fn cochain_spec(cur: &mut Cursor, arity: Option<usize>) -> Result<Cochain> {
    let start = {
        cur.skip_ws();
        cur.pos
    };
    let head = cur.word();
    let err = |msg: String| Error::Parse {
        position: start,
        message: msg,
    };
    match head.as_str() {
        "counit" => Ok(Cochain::counit(arity.unwrap_or(1))),
        "schur" => Ok(Cochain::schur_pairing()),
        "schur-inv" => Ok(Cochain::schur_pairing_inverse()),
        "series" => {
            cur.expect(':')?;
            let name_pos = cur.pos;
            let name = cur.word();
            let id: SeriesId = name.parse().map_err(|_| Error::Parse {
                position: name_pos,
                message: format!("unknown series `{name}`"),
            })?;
            if cur.eat('@') {
                Ok(Cochain::series_capped(id, cur.usize()?))
            } else {
                Ok(Cochain::series(id))
            }
        }
        "table" => {
            cur.expect(':')?;
            cur.expect('{')?;
            let mut entries = Vec::new();
            let mut ignored = Vec::new();
            if !cur.eat('}') {
                loop {
                    let mut key = vec![cur.partition(&mut ignored)?];
                    while cur.eat('|') {
                        key.push(cur.partition(&mut ignored)?);
                    }
                    cur.expect(':')?;
                    let negative = cur.eat('-');
                    let c = cur.coefficient()?;
                    entries.push((key, if negative { -c } else { c }));
                    if cur.eat('}') {
                        break;
                    }
                    cur.expect(',')?;
                }
            }
            let n = entries.first().map(|e| e.0.len()).or(arity).unwrap_or(1);
            Cochain::table(n, entries)
        }
        "d" => {
            cur.expect('(')?;
            let inner = cochain_spec(cur, arity.map(|a| a.saturating_sub(1)))?;
            cur.expect(')')?;
            coboundary(&inner)
        }
        "inv" => {
            cur.expect('(')?;
            let inner = cochain_spec(cur, arity)?;
            cur.expect(')')?;
            Ok(invert(&inner))
        }
        "conv" => {
            cur.expect('(')?;
            let a = cochain_spec(cur, arity)?;
            cur.expect(',')?;
            let b = cochain_spec(cur, arity)?;
            cur.expect(')')?;
            convolve(&a, &b)
        }
        "" => Err(err("expected a cochain spec".into())),
        other => Err(err(format!("unknown cochain `{other}`"))),
    }
}

/// Text form of a rational that is an integer when possible.
pub fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else if c.is_negative() {
        format!("-{}", c.abs())
    } else {
        c.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{rat, rat_frac};

    #[test]
    fn parse_examples() {
        let f = parse_expression("s[2,1] + 3*s[1,1,1]").unwrap();
        assert_eq!(f.num_terms(), 2);
        let g = parse_expression("1/2*p[2] + 1/2*p[1,1]").unwrap();
        assert_eq!(g, SymFunc::s(&[2]));
        assert_eq!(parse_expression("s[]").unwrap(), SymFunc::one(Basis::Schur));
        assert_eq!(
            parse_expression(" - 2 + s[1]").unwrap().coeff(&Partition::empty()),
            rat(-2)
        );
        assert_eq!(
            parse_expression("-1/2*p[2]").unwrap().coeff(&Partition::row(2)),
            rat_frac(-1, 2)
        );
    }

    #[test]
    fn parse_errors() {
        match parse_expression("s[2,1] + x[1]") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 9),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_expression("s[2,1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_expression(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_expression("1/0*s[1]"), Err(Error::Parse { .. })));
        assert!(matches!(parse_expression("s[1] s[2]"), Err(Error::Parse { .. })));
    }

    #[test]
    fn non_canonical_warns() {
        let p = parse_expression_verbose("s[1,2]").unwrap();
        assert!(p.has_warnings());
        assert_eq!(p.value, SymFunc::s(&[2, 1]));
        assert!(!parse_expression_verbose("s[2,1]").unwrap().has_warnings());
    }

    #[test]
    fn round_trips() {
        for text in [
            "s[2] + s[1,1]",
            "1 - s[1] + 3*s[1,1]",
            "-1/2*p[2]",
            "0",
            "h[3] - 2/3*h[2,1]",
        ] {
            let f = parse_expression(text).unwrap();
            assert_eq!(print_expression(&f), text);
        }
        let f = parse_expression("s[2,1] - 5/7*s[1]").unwrap();
        let (back, warned) = symfunc_from_json(&symfunc_to_json(&f)).unwrap();
        assert!(!warned);
        assert_eq!(back, f);
        let t = TensorExp::pure(&[SymFunc::s(&[1]), SymFunc::s(&[2])]);
        assert_eq!(tensor_from_json(&tensor_to_json(&t)).unwrap(), t);
    }

    #[test]
    fn json_shape() {
        let v = symfunc_to_json(&SymFunc::s(&[2, 1]));
        assert_eq!(v["basis"], "s");
        assert_eq!(v["terms"][0]["partition"], json!([2, 1]));
        assert_eq!(v["terms"][0]["coeff"], "1");
    }

    #[test]
    fn cochain_specs() {
        let m = parse_cochain("series:M", 1).unwrap();
        assert_eq!(m.value(&[Partition::row(3)]), rat(1));
        let t = parse_cochain("table:{[1]:3, [2]:5, [1,1]:7}", 1).unwrap();
        assert_eq!(t.value(&[Partition::column(2)]), rat(7));
        let t2 = parse_cochain("table:{[1]|[1]:2}", 2).unwrap();
        assert_eq!(t2.value(&[Partition::row(1), Partition::row(1)]), rat(2));
        let d = parse_cochain("d(series:D)", 2).unwrap();
        assert_eq!(d.arity(), 2);
        assert!(parse_cochain("schur-inv", 2).is_ok());
        assert!(parse_cochain("inv(series:L)", 1).is_ok());
        assert!(parse_cochain("conv(schur, schur-inv)", 2).is_ok());
        assert!(matches!(parse_cochain("series:Z", 1), Err(Error::Parse { .. })));
        assert!(matches!(parse_cochain("schur", 1), Err(Error::ArityMismatch { .. })));
        assert_eq!(parse_cochain("counit", 3).unwrap().arity(), 3);
    }

    #[test]
    fn partitions_in_brackets() {
        assert_eq!(parse_partition("<2,1>").unwrap(), Partition::new(vec![2, 1]).unwrap());
        assert_eq!(parse_partition("[0]").unwrap(), Partition::empty());
        assert_eq!(format_rational(&rat_frac(-3, 4)), "-3/4");
    }
}
