//! Text front end: polynomial expressions and group specifications.
//!
//! Polynomial grammar: terms separated by `+`, each term an optional rational
//! coefficient followed by `*`-separated factors `x<i>` or `x<i>^<e>`.
//! Variables are `x1..xN` with no gaps. Group specifications are the named
//! groups `J`, `SL`, `Aut` or an explicit list
//! `gens: 1/12,10/12,4/12; 0,1/2,1/2`.

use crate::error::{Error, Result};
use crate::poly::{ExponentMatrix, PolyData};
use crate::rat::{parse_rat, Rat};
use crate::symmetry::{
    aut_group, group_from_generators, is_symmetry_of, j_element, sl_subgroup, PhaseVector,
    SymmetryGroup,
};
use num_traits::One;

struct Scanner<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            text: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_space(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_space();
        self.text.get(self.pos).copied()
    }


    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_space();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("number out of range"))
    }

    /// `[-] digits [/ digits]`
    fn rational(&mut self) -> Result<Rat> {
        self.skip_space();
        let negative = self.eat(b'-');
        let numer = self.number()? as i128;
        let denom = if self.eat(b'/') {
            let d = self.number()? as i128;
            if d == 0 {
                return Err(self.error("zero denominator"));
            }
            d
        } else {
            1
        };
        let r = Rat::new(numer, denom);
        Ok(if negative { -r } else { r })
    }
}

struct RawTerm {
    coefficient: Rat,
    /// (variable index 1-based, exponent)
    factors: Vec<(usize, u64)>,
}

/// Parses a polynomial expression into its exponent matrix.
pub fn parse_polynomial(text: &str) -> Result<ExponentMatrix> {
    let mut sc = Scanner::new(text);
    let mut terms = Vec::new();
    loop {
        terms.push(parse_term(&mut sc)?);
        sc.skip_space();
        if sc.pos >= sc.text.len() {
            break;
        }
        if !sc.eat(b'+') {
            return Err(sc.error("expected '+' between terms"));
        }
    }
    let n_vars = terms
        .iter()
        .flat_map(|t| t.factors.iter().map(|&(v, _)| v))
        .max()
        .ok_or_else(|| sc.error("empty polynomial"))?;
    let mut seen = vec![false; n_vars + 1];
    let mut rows = Vec::new();
    let mut coefficients = Vec::new();
    for term in terms {
        let mut row = vec![0u64; n_vars];
        for (v, e) in term.factors {
            seen[v] = true;
            row[v - 1] += e;
        }
        rows.push(row);
        coefficients.push(term.coefficient);
    }
    for v in 1..=n_vars {
        if !seen[v] {
            return Err(Error::UnknownVariable(format!("x{v}")));
        }
    }
    ExponentMatrix::new(n_vars, rows, Some(coefficients))
}

fn parse_term(sc: &mut Scanner) -> Result<RawTerm> {
    let mut coefficient = Rat::one();
    let mut factors = Vec::new();
    // leading coefficient: anything starting with a digit or minus sign
    match sc.peek() {
        Some(c) if c.is_ascii_digit() || c == b'-' => {
            coefficient = sc.rational()?;
            if !sc.eat(b'*') {
                return Err(sc.error("expected '*' after the coefficient"));
            }
        }
        _ => {}
    }
    loop {
        if !sc.eat(b'x') {
            return Err(sc.error("expected a variable like x1"));
        }
        let var = sc.number()? as usize;
        if var == 0 {
            return Err(sc.error("variables are numbered from x1"));
        }
        if var > 256 {
            return Err(sc.error("variable index exceeds 256"));
        }
        let exponent = if sc.eat(b'^') { sc.number()? } else { 1 };
        if exponent > 1_000_000 {
            return Err(sc.error("exponent exceeds 1000000"));
        }
        factors.push((var, exponent));
        if !sc.eat(b'*') {
            break;
        }
    }
    Ok(RawTerm {
        coefficient,
        factors,
    })
}

/// Resolves a group specification against a parsed polynomial.
pub fn parse_group(text: &str, poly: &PolyData, max_order: u64) -> Result<SymmetryGroup> {
    let trimmed = text.trim();
    match trimmed {
        "J" => {
            let j = j_element(&poly.charges);
            group_from_generators(poly.n_vars(), &[j], max_order)
        }
        "Aut" => aut_group(&poly.matrix, max_order),
        "SL" => Ok(sl_subgroup(&aut_group(&poly.matrix, max_order)?)),
        _ => {
            let Some(rest) = trimmed.strip_prefix("gens:") else {
                return Err(Error::Syntax {
                    pos: 0,
                    msg: format!("unknown group spec '{trimmed}'; expected J, SL, Aut or gens:"),
                });
            };
            let mut gens = Vec::new();
            for gen_text in rest.split(';') {
                let entries: Vec<&str> = gen_text.split(',').map(str::trim).collect();
                if entries.len() != poly.n_vars() {
                    return Err(Error::Syntax {
                        pos: 0,
                        msg: format!(
                            "generator '{}' has {} entries, expected {}",
                            gen_text.trim(),
                            entries.len(),
                            poly.n_vars()
                        ),
                    });
                }
                let mut phases = Vec::new();
                for entry in entries {
                    let r = parse_rat(entry).ok_or_else(|| Error::Syntax {
                        pos: 0,
                        msg: format!("bad rational '{entry}'"),
                    })?;
                    phases.push(r);
                }
                let g = PhaseVector::new(phases);
                if !is_symmetry_of(&poly.matrix, &g) {
                    return Err(Error::NotASymmetry(format!("{g}")));
                }
                gens.push(g);
            }
            group_from_generators(poly.n_vars(), &gens, max_order)
        }
    }
}
