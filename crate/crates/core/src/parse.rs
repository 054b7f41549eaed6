//! Literal syntax for polynomials: sums of terms `c*v^k*w^j…` with rational
//! coefficients, e.g. `t^3-t-1`, `1/2*th^2+3`, `2*x0^2*x1-x2^3`.
//! Parentheses are not supported.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactalg::field::{format_rational, parse_rational};
use crate::exactalg::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty expression")]
    Empty,
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("malformed term `{0}`")]
    BadTerm(String),
}

/// One parsed term: coefficient and one exponent per variable.
pub type Term = (Rational, Vec<u32>);

fn split_terms(s: &str) -> Result<Vec<(bool, String)>, ParseError> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        // A sign right after `^` belongs to nothing we accept; a sign at the
        // very start or after another sign opens a new term.
        if (ch == '+' || ch == '-') && prev != Some('^') {
            if !cur.is_empty() {
                out.push((neg, std::mem::take(&mut cur)));
                neg = false;
            }
            if ch == '-' {
                neg = !neg;
            }
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    if cur.is_empty() {
        return Err(ParseError::BadTerm(s));
    }
    out.push((neg, cur));
    Ok(out)
}

/// Parses a sum of monomials in the given variables. Repeated monomials are
/// combined; zero terms are dropped.
pub fn parse_sparse(s: &str, vars: &[&str]) -> Result<Vec<Term>, ParseError> {
    let mut terms: Vec<Term> = Vec::new();
    for (neg, body) in split_terms(s)? {
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; vars.len()];
        for factor in body.split('*') {
            if factor.is_empty() {
                return Err(ParseError::BadTerm(body.clone()));
            }
            if factor.starts_with(|c: char| c.is_ascii_digit()) {
                let q = parse_rational(factor).ok_or_else(|| ParseError::BadTerm(factor.to_string()))?;
                coeff *= q;
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (n, e.parse::<u32>().map_err(|_| ParseError::BadTerm(factor.to_string()))?),
                None => (factor, 1),
            };
            let idx = vars
                .iter()
                .position(|v| *v == name)
                .ok_or_else(|| ParseError::UnknownSymbol(name.to_string()))?;
            exps[idx] += exp;
        }
        if neg {
            coeff = -coeff;
        }
        match terms.iter_mut().find(|(_, e)| *e == exps) {
            Some((c, _)) => *c += coeff,
            None => terms.push((coeff, exps)),
        }
    }
    terms.retain(|(c, _)| !c.is_zero());
    Ok(terms)
}

/// Parses a univariate polynomial into dense coefficients, constant first.
pub fn parse_univariate(s: &str, var: &str) -> Result<Vec<Rational>, ParseError> {
    let terms = parse_sparse(s, &[var])?;
    let deg = terms.iter().map(|(_, e)| e[0] as usize).max().unwrap_or(0);
    let mut out = vec![Rational::zero(); deg + 1];
    for (c, e) in terms {
        out[e[0] as usize] += c;
    }
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    Ok(out)
}

fn push_term(out: &mut String, c: &Rational, monomial: &str) {
    let first = out.is_empty();
    let abs = c.abs();
    if c.is_negative() {
        out.push('-');
    } else if !first {
        out.push('+');
    }
    if monomial.is_empty() {
        out.push_str(&format_rational(&abs));
    } else if abs.is_one() {
        out.push_str(monomial);
    } else {
        out.push_str(&format_rational(&abs));
        out.push('*');
        out.push_str(monomial);
    }
}

/// Formats dense coefficients (constant first), highest degree first.
pub fn format_univariate(coeffs: &[Rational], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        push_term(&mut out, c, &mono);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Formats sparse terms in the given order.
pub fn format_sparse(terms: &[Term], vars: &[&str]) -> String {
    let mut out = String::new();
    for (c, exps) in terms {
        if c.is_zero() {
            continue;
        }
        let mono: Vec<String> = exps
            .iter()
            .zip(vars)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        push_term(&mut out, c, &mono.join("*"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
