//! The `.sys` polynomial-system file format.
//!
//! ```text
//! # comment
//! vars: x y z
//! order: degrevlex
//! x^2*y - 1/2*z + 3
//! ```
//!
//! Line 1 declares the variables, line 2 the ordering (`lex` or
//! `degrevlex`), then one polynomial per non-empty line. `#` starts a
//! comment anywhere; whitespace is insignificant inside polynomials;
//! both LF and CRLF line endings are accepted.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::order::MonomialOrder;
use crate::poly::{Coefficient, Monomial, Polynomial, Term, VariableContext};

/// A parsed system file: context, ordering, and the polynomial list.
#[derive(Clone, Debug)]
pub struct ParsedSystem {
    pub context: VariableContext,
    pub order: MonomialOrder,
    pub polynomials: Vec<Polynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses a complete system file.
pub fn parse_system(text: &str) -> Result<ParsedSystem, ParseError> {
    let mut context: Option<VariableContext> = None;
    let mut order: Option<MonomialOrder> = None;
    let mut polynomials = Vec::new();

    for (i, raw_line) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = strip_comment(raw_line.trim_end_matches('\r'));
        if line.trim().is_empty() {
            continue;
        }
        if context.is_none() {
            let rest = line.trim().strip_prefix("vars:").ok_or_else(|| {
                ParseError::new(lineno, 1, "expected a `vars:` header line")
            })?;
            let names: Vec<&str> = rest.split_whitespace().collect();
            if names.is_empty() {
                return Err(ParseError::new(lineno, 1, "empty variable list"));
            }
            for name in &names {
                if !is_identifier(name) {
                    return Err(ParseError::new(
                        lineno,
                        1,
                        format!("invalid variable name `{name}`"),
                    ));
                }
                if names.iter().filter(|n| *n == name).count() > 1 {
                    return Err(ParseError::new(
                        lineno,
                        1,
                        format!("duplicate variable name `{name}`"),
                    ));
                }
            }
            context = Some(VariableContext::new(names));
            continue;
        }
        if order.is_none() {
            let rest = line.trim().strip_prefix("order:").ok_or_else(|| {
                ParseError::new(lineno, 1, "expected an `order:` header line")
            })?;
            order = Some(
                rest.trim()
                    .parse::<MonomialOrder>()
                    .map_err(|e| ParseError::new(lineno, 1, e))?,
            );
            continue;
        }
        let poly = parse_polynomial_at(line, context.as_ref().unwrap(), order.unwrap(), lineno)?;
        polynomials.push(poly);
    }

    let context = context.ok_or_else(|| ParseError::new(1, 1, "missing `vars:` header"))?;
    let order = order.ok_or_else(|| ParseError::new(1, 1, "missing `order:` header"))?;
    Ok(ParsedSystem {
        context,
        order,
        polynomials,
    })
}

/// Parses a single polynomial against a known context and ordering.
pub fn parse_polynomial(
    text: &str,
    context: &VariableContext,
    order: MonomialOrder,
) -> Result<Polynomial, ParseError> {
    parse_polynomial_at(text, context, order, 1)
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(text: &str, lineno: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let c = chars[i];
        match c {
            ' ' | '\t' => {
                i += 1;
            }
            '+' => {
                toks.push((Tok::Plus, col));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, col));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, col));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, col));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, col));
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let n = BigInt::parse_bytes(digits.as_bytes(), 10)
                    .ok_or_else(|| ParseError::new(lineno, col, "malformed number"))?;
                toks.push((Tok::Number(n), col));
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
            }
            other => {
                return Err(ParseError::new(
                    lineno,
                    col,
                    format!("unexpected character `{other}`"),
                ));
            }
        }
    }
    Ok(toks)
}

fn parse_polynomial_at(
    text: &str,
    context: &VariableContext,
    order: MonomialOrder,
    lineno: usize,
) -> Result<Polynomial, ParseError> {
    let toks = tokenize(text, lineno)?;
    if toks.is_empty() {
        return Err(ParseError::new(lineno, 1, "empty polynomial"));
    }
    let nvars = context.len();
    let mut terms: Vec<Term> = Vec::new();
    let mut pos = 0;

    while pos < toks.len() {
        // sign
        let mut negative = false;
        match toks[pos].0 {
            Tok::Plus => pos += 1,
            Tok::Minus => {
                negative = true;
                pos += 1;
            }
            _ => {}
        }
        if pos >= toks.len() {
            let col = toks.last().map(|t| t.1).unwrap_or(1);
            return Err(ParseError::new(lineno, col, "dangling sign"));
        }

        // one term: factors separated by `*`
        let mut coeff: Coefficient = Coefficient::one();
        let mut exps = vec![0u32; nvars];
        loop {
            let (tok, col) = &toks[pos];
            match tok {
                Tok::Number(n) => {
                    pos += 1;
                    // optional rational part
                    let mut value = BigRational::from_integer(n.clone());
                    if pos < toks.len() && toks[pos].0 == Tok::Slash {
                        pos += 1;
                        match toks.get(pos) {
                            Some((Tok::Number(d), dcol)) => {
                                if d.is_zero() {
                                    return Err(ParseError::new(
                                        lineno,
                                        *dcol,
                                        "zero denominator",
                                    ));
                                }
                                value = BigRational::new(n.clone(), d.clone());
                                pos += 1;
                            }
                            _ => {
                                return Err(ParseError::new(
                                    lineno,
                                    *col,
                                    "expected a denominator after `/`",
                                ));
                            }
                        }
                    }
                    coeff *= value;
                }
                Tok::Ident(name) => {
                    let idx = context.index_of(name).ok_or_else(|| {
                        ParseError::new(lineno, *col, format!("unknown variable `{name}`"))
                    })?;
                    pos += 1;
                    let mut exp: u32 = 1;
                    if pos < toks.len() && toks[pos].0 == Tok::Caret {
                        pos += 1;
                        match toks.get(pos) {
                            Some((Tok::Number(e), ecol)) => {
                                exp = e.to_string().parse::<u32>().map_err(|_| {
                                    ParseError::new(lineno, *ecol, "malformed exponent")
                                })?;
                                pos += 1;
                            }
                            other => {
                                let ecol = other.map(|t| t.1).unwrap_or(*col);
                                return Err(ParseError::new(
                                    lineno,
                                    ecol,
                                    "malformed exponent",
                                ));
                            }
                        }
                    }
                    exps[idx] += exp;
                }
                _ => {
                    return Err(ParseError::new(
                        lineno,
                        *col,
                        "expected a coefficient or a variable",
                    ));
                }
            }
            // continue the product?
            if pos < toks.len() && toks[pos].0 == Tok::Star {
                pos += 1;
                if pos >= toks.len() {
                    let col = toks.last().map(|t| t.1).unwrap_or(1);
                    return Err(ParseError::new(lineno, col, "dangling `*`"));
                }
                continue;
            }
            break;
        }
        if negative {
            coeff = -coeff;
        }
        if !coeff.is_zero() {
            terms.push(Term::new(coeff, Monomial::from_exponents(exps)));
        }

        // next token must start a new term
        if pos < toks.len() {
            match toks[pos].0 {
                Tok::Plus | Tok::Minus => {}
                _ => {
                    return Err(ParseError::new(
                        lineno,
                        toks[pos].1,
                        "expected `+` or `-` between terms",
                    ));
                }
            }
        }
    }

    Ok(Polynomial::from_terms(terms, nvars, order))
}

fn format_coefficient(c: &Coefficient) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn format_monomial(m: &Monomial, ctx: &VariableContext) -> String {
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, e)| **e > 0)
        .map(|(i, e)| {
            if *e == 1 {
                ctx.name(i).to_string()
            } else {
                format!("{}^{}", ctx.name(i), e)
            }
        })
        .collect();
    parts.join("*")
}

/// Renders a polynomial in the grammar [`parse_polynomial`] accepts.
pub fn format_polynomial(p: &Polynomial, ctx: &VariableContext) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in p.terms().iter().enumerate() {
        let c = &t.coeff;
        let negative = c.is_negative();
        let abs = if negative { -c.clone() } else { c.clone() };
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mono = format_monomial(&t.mono, ctx);
        if mono.is_empty() {
            out.push_str(&format_coefficient(&abs));
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format_coefficient(&abs));
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

/// Renders a full system in the file grammar.
pub fn format_system(sys: &ParsedSystem) -> String {
    let mut out = format!("vars: {}\n", sys.context.names().join(" "));
    out.push_str(&format!("order: {}\n", sys.order));
    for p in &sys.polynomials {
        out.push_str(&format_polynomial(p, &sys.context));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{coeff_int, coeff_ratio};
    use proptest::prelude::*;

    #[test]
    fn parses_a_small_system() {
        let sys = parse_system("vars: x y\norder: degrevlex\nx^2 + y\n").unwrap();
        assert_eq!(sys.context.names(), &["x".to_string(), "y".to_string()]);
        assert_eq!(sys.order, MonomialOrder::DegRevLex);
        assert_eq!(sys.polynomials.len(), 1);
        let f = &sys.polynomials[0];
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.leading_monomial().exponents(), &[2, 0]);
    }

    #[test]
    fn parses_rational_coefficients() {
        let ctx = VariableContext::new(["x", "y"]);
        let f = parse_polynomial("1/2*x*y - 3", &ctx, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(f.terms()[0].coeff, coeff_ratio(1, 2));
        assert_eq!(f.terms()[1].coeff, coeff_int(-3));
    }

    #[test]
    fn x_to_the_zero_is_one() {
        let ctx = VariableContext::new(["x"]);
        let f = parse_polynomial("x^0", &ctx, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(f.num_terms(), 1);
        assert!(f.leading_monomial().is_unit());
        assert_eq!(f.leading_coeff(), &coeff_int(1));
    }

    #[test]
    fn crlf_and_comments_are_accepted() {
        let sys =
            parse_system("# header\r\nvars: x\r\norder: lex\r\nx + 1 # trailing\r\n\r\n").unwrap();
        assert_eq!(sys.polynomials.len(), 1);
    }

    #[test]
    fn unknown_variable_is_an_error_with_position() {
        let err = parse_system("vars: x\norder: lex\nx + z\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.column, 5);
        assert!(err.message.contains("unknown variable"));
    }

    #[test]
    fn malformed_exponent_is_an_error() {
        let ctx = VariableContext::new(["x"]);
        let err = parse_polynomial("x^y", &ctx, MonomialOrder::Lex).unwrap_err();
        assert!(err.message.contains("malformed exponent"));
    }

    #[test]
    fn zero_denominator_is_an_error() {
        let ctx = VariableContext::new(["x"]);
        let err = parse_polynomial("1/0*x", &ctx, MonomialOrder::Lex).unwrap_err();
        assert!(err.message.contains("zero denominator"));
    }

    #[test]
    fn bad_order_name_is_an_error() {
        let err = parse_system("vars: x\norder: grlex\nx\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("unknown ordering"));
    }

    #[test]
    fn merged_terms_and_cancellation() {
        let ctx = VariableContext::new(["x"]);
        let f = parse_polynomial("x + x", &ctx, MonomialOrder::Lex).unwrap();
        assert_eq!(f.terms()[0].coeff, coeff_int(2));
        let z = parse_polynomial("x - x", &ctx, MonomialOrder::Lex).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn format_round_trips_by_hand() {
        let ctx = VariableContext::new(["x", "y"]);
        let f = parse_polynomial("-x^2*y + 1/2*x - 3", &ctx, MonomialOrder::DegRevLex).unwrap();
        let s = format_polynomial(&f, &ctx);
        let g = parse_polynomial(&s, &ctx, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(f, g);
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(
            coeffs in proptest::collection::vec((-9i64..=9, 1i64..=9), 1..6),
            monos in proptest::collection::vec(proptest::collection::vec(0u32..4, 2), 1..6)
        ) {
            let ctx = VariableContext::new(["x", "y"]);
            let terms: Vec<Term> = coeffs
                .iter()
                .zip(&monos)
                .filter(|((n, _), _)| *n != 0)
                .map(|((n, d), m)| {
                    Term::new(coeff_ratio(*n, *d), Monomial::from_exponents(m.clone()))
                })
                .collect();
            let f = Polynomial::from_terms(terms, 2, MonomialOrder::DegRevLex);
            prop_assume!(!f.is_zero());
            let s = format_polynomial(&f, &ctx);
            let g = parse_polynomial(&s, &ctx, MonomialOrder::DegRevLex).unwrap();
            prop_assert_eq!(f, g);
        }
    }
}
